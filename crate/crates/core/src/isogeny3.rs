//! The 3-isogeny `τ_d : E_d → E_{d'}`, `d' = -27d`, its cubic character and the
//! fiber sum `S_{τ_d} = Σ_{P ∈ E_{d'}(F_p)} {x(P)} χ(P)`.
//!
//! Two interchangeable character evaluators live behind [`FiberCharacter`]:
//! the closed-form Tate-pairing formula ([`TateCharacter`]) and the coset
//! definition `P - kQ ∈ τ(E_d(F_p))` ([`CosetCharacter`]).

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::curve::{CurveParams, CurvePoint};
use crate::error::{Error, Result};
use crate::fp::{CubicCharValue, FieldElement, Prime};
use crate::tables::FieldTables;

/// `A + Bζ + Cζ²` with integer counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CyclotomicSum {
    pub a: i128,
    pub b: i128,
    pub c: i128,
}

impl CyclotomicSum {
    pub fn new(a: i128, b: i128, c: i128) -> Self {
        CyclotomicSum { a, b, c }
    }

    /// Adds `weight · ζ^k`.
    #[inline]
    pub fn add_term(&mut self, k: CubicCharValue, weight: i128) {
        match k.exponent() {
            0 => self.a += weight,
            1 => self.b += weight,
            _ => self.c += weight,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.b == self.c
    }

    /// The rational integer value `A - B` when `B = C`.
    pub fn integer(&self) -> Option<i128> {
        self.is_integral().then_some(self.a - self.b)
    }

    pub fn try_integer(&self) -> Result<i128> {
        self.integer().ok_or(Error::NonIntegralSum {
            a: self.a,
            b: self.b,
            c: self.c,
        })
    }

    pub fn conj(&self) -> Self {
        CyclotomicSum::new(self.a, self.c, self.b)
    }
}

impl std::ops::Add for CyclotomicSum {
    type Output = CyclotomicSum;
    fn add(self, rhs: CyclotomicSum) -> CyclotomicSum {
        CyclotomicSum::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }
}

impl std::ops::Mul<i128> for CyclotomicSum {
    type Output = CyclotomicSum;
    fn mul(self, k: i128) -> CyclotomicSum {
        CyclotomicSum::new(self.a * k, self.b * k, self.c * k)
    }
}

impl std::iter::Sum for CyclotomicSum {
    fn sum<I: Iterator<Item = CyclotomicSum>>(iter: I) -> Self {
        iter.fold(CyclotomicSum::default(), |acc, s| acc + s)
    }
}

/// `τ_d(x, y) = ((y² + 3d)/x², y(x³ - 8d)/x³)`, sending the kernel `x = 0` and `∞` to `∞`.
///
/// Valid for any nonzero `d`; the caller checks `pt ∈ E_d`.
pub fn isogeny_map(d: FieldElement, pt: &CurvePoint) -> CurvePoint {
    let Some((x, y)) = pt.coords() else {
        return CurvePoint::Infinity;
    };
    if x.is_zero() {
        return CurvePoint::Infinity;
    }
    let p = d.prime();
    let x2 = x.square();
    let x3 = x2 * x;
    let inv_x3 = x3.inv().expect("x != 0");
    let inv_x2 = inv_x3 * x;
    CurvePoint::affine(
        (y.square() + p.elem(3) * d) * inv_x2,
        y * (x3 - p.elem(8) * d) * inv_x3,
    )
}

/// Whether the fiber's coset character agrees with the Tate formula or with its conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Equal,
    Conjugate,
}

/// One fiber `τ_d : E_d → E_{d'}` with `(d/p) = 1`, with its image and coset
/// representative precomputed.
#[derive(Debug, Clone)]
pub struct FiberIsogeny {
    tables: Arc<FieldTables>,
    d: FieldElement,
    d_prime: FieldElement,
    alpha: FieldElement,
    t: CurvePoint,
    q: CurvePoint,
    source: CurveParams,
    target: CurveParams,
    image: BTreeSet<CurvePoint>,
    minus_4d: CubicCharValue,
}

impl FiberIsogeny {
    /// Builds the fiber with `α` the smaller-lift square root of `-3d`.
    pub fn new(tables: Arc<FieldTables>, d: FieldElement) -> Result<Self> {
        let p = tables.prime();
        check_square(p, d)?;
        let alpha = tables
            .squares
            .sqrt_min(p.elem_i64(-3) * d)
            .ok_or_else(|| Error::Internal("-3d must be a square when d is".into()))?;
        Self::with_alpha(tables, d, alpha)
    }

    /// Builds the fiber with a caller-chosen `α`, `α² = -3d`, so that `T = (0, 3α)`.
    pub fn with_alpha(tables: Arc<FieldTables>, d: FieldElement, alpha: FieldElement) -> Result<Self> {
        let p = tables.prime();
        p.require_one_mod_three()?;
        check_square(p, d)?;
        if alpha.square() != p.elem_i64(-3) * d {
            return Err(Error::Internal(format!("α = {alpha} is not a square root of -3d")));
        }
        let source = CurveParams::e_d(d)?;
        let target = CurveParams::e_d_prime(d)?;
        let t = target.point(p.zero(), p.elem(3) * alpha)?;
        let minus_4d = tables.cubes.symbol(p.elem_i64(-4) * d)?;

        let source_points = source.enumerate_affine_with(&tables.squares);
        let mut image: BTreeSet<CurvePoint> =
            source_points.iter().map(|pt| isogeny_map(d, pt)).collect();
        image.insert(CurvePoint::Infinity);

        let target_points = target.enumerate_affine_with(&tables.squares);
        if 3 * image.len() != target_points.len() + 1 {
            return Err(Error::Internal(format!(
                "image of τ_d has size {} in a group of order {}",
                image.len(),
                target_points.len() + 1
            )));
        }
        let q = *target_points
            .iter()
            .find(|pt| !image.contains(pt))
            .ok_or_else(|| Error::Internal("τ_d is surjective for square d".into()))?;

        Ok(FiberIsogeny {
            tables,
            d,
            d_prime: target.coefficients().2,
            alpha,
            t,
            q,
            source,
            target,
            image,
            minus_4d,
        })
    }

    /// The same fiber with a different coset representative `Q ∉ τ_d(E_d(F_p))`.
    pub fn with_coset_representative(&self, q: CurvePoint) -> Result<Self> {
        if !self.target.on_curve(&q) {
            return Err(Error::NotOnCurve);
        }
        if self.image.contains(&q) {
            return Err(Error::Internal("coset representative lies in the image".into()));
        }
        let mut f = self.clone();
        f.q = q;
        Ok(f)
    }

    pub fn prime(&self) -> Prime {
        self.tables.prime()
    }

    pub fn tables(&self) -> &Arc<FieldTables> {
        &self.tables
    }

    pub fn d(&self) -> FieldElement {
        self.d
    }

    pub fn d_prime(&self) -> FieldElement {
        self.d_prime
    }

    pub fn alpha(&self) -> FieldElement {
        self.alpha
    }

    /// `T = (0, 3α)`, generator of the dual isogeny's rational kernel.
    pub fn t(&self) -> CurvePoint {
        self.t
    }

    pub fn q(&self) -> CurvePoint {
        self.q
    }

    pub fn source(&self) -> &CurveParams {
        &self.source
    }

    pub fn target(&self) -> &CurveParams {
        &self.target
    }

    /// `(-4d/p)_3`, the character value at `T`.
    pub fn minus_4d_symbol(&self) -> CubicCharValue {
        self.minus_4d
    }

    /// `τ_d(E_d(F_p)) ∪ {∞}`.
    pub fn image_set(&self) -> &BTreeSet<CurvePoint> {
        &self.image
    }

    pub fn tau_apply(&self, pt: &CurvePoint) -> Result<CurvePoint> {
        if !self.source.on_curve(pt) {
            return Err(Error::NotOnCurve);
        }
        Ok(isogeny_map(self.d, pt))
    }

    /// `f_T = y - 3α` on `E_{d'}`.
    pub fn f_t(&self, pt: &CurvePoint) -> Result<FieldElement> {
        let y = pt.y().ok_or(Error::KernelPoint)?;
        Ok(y - self.prime().elem(3) * self.alpha)
    }

    /// `g_T = (y - α)/x` on `E_d`, undefined on the kernel.
    pub fn g_t(&self, pt: &CurvePoint) -> Result<FieldElement> {
        let (x, y) = pt.coords().ok_or(Error::KernelPoint)?;
        if x.is_zero() {
            return Err(Error::KernelPoint);
        }
        (y - self.alpha).div(x)
    }

    /// Closed-form character: `(-4d/p)_3^k` on `kT`, `(y - 3α / p)_3` elsewhere.
    pub fn chi_tate(&self, pt: &CurvePoint) -> Result<CubicCharValue> {
        let Some((x, y)) = pt.coords() else {
            return Ok(CubicCharValue::ONE);
        };
        if x.is_zero() {
            let k = if y == self.prime().elem(3) * self.alpha {
                1
            } else {
                2
            };
            return Ok(self.minus_4d.pow(k));
        }
        self.tables.cubes.symbol(y - self.prime().elem(3) * self.alpha)
    }

    /// Coset character: the `k` with `P - kQ ∈ τ_d(E_d(F_p)) ∪ {∞}`.
    pub fn chi_coset(&self, pt: &CurvePoint) -> Result<CubicCharValue> {
        let mut cur = *pt;
        for k in 0..3 {
            if self.image.contains(&cur) {
                return Ok(CubicCharValue::new(k));
            }
            cur = self.target.sub(&cur, &self.q);
        }
        Err(Error::Internal(format!("{pt:?} lies in no coset of the image")))
    }

    /// Compares the two characters on every rational point of `E_{d'}`.
    pub fn orientation(&self) -> Result<Orientation> {
        let mut equal = true;
        let mut conjugate = true;
        let points = self.target.enumerate_affine_with(&self.tables.squares);
        for pt in points.iter().chain(std::iter::once(&CurvePoint::Infinity)) {
            let tate = self.chi_tate(pt)?;
            let coset = self.chi_coset(pt)?;
            equal &= tate == coset;
            conjugate &= tate.conj() == coset;
        }
        match (equal, conjugate) {
            (true, _) => Ok(Orientation::Equal),
            (false, true) => Ok(Orientation::Conjugate),
            (false, false) => Err(Error::Internal(format!(
                "coset and Tate characters disagree beyond conjugation for d = {}",
                self.d
            ))),
        }
    }

    /// `S_{τ_d}` using the Tate formula.
    pub fn fiber_sum(&self) -> Result<FiberSum> {
        self.fiber_sum_with(&TateCharacter)
    }

    /// `S_{τ_d}` with an arbitrary character evaluator. Checks integrality and `p | S`.
    pub fn fiber_sum_with(&self, chi: &dyn FiberCharacter) -> Result<FiberSum> {
        let mut total = CyclotomicSum::default();
        for pt in self.target.enumerate_affine_with(&self.tables.squares) {
            let x = pt.x().expect("affine").lift() as i128;
            if x == 0 {
                continue;
            }
            total.add_term(chi.eval(self, &pt)?, x);
        }
        let value = total.try_integer()?;
        let p = self.prime().get() as i128;
        if value % p != 0 {
            return Err(Error::IdentityViolation {
                what: "fiber sum divisible by p",
                p: p as u64,
                expected: 0,
                actual: value % p,
            });
        }
        Ok(FiberSum {
            d: self.d.lift(),
            sum: total,
            value,
        })
    }
}

fn check_square(p: Prime, d: FieldElement) -> Result<()> {
    if d.prime() != p || d.legendre() != 1 {
        return Err(Error::NotASquare {
            p: p.get(),
            d: d.lift(),
        });
    }
    Ok(())
}

/// Result of one fiber sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiberSum {
    pub d: u64,
    pub sum: CyclotomicSum,
    pub value: i128,
}

impl FiberSum {
    pub fn quotient(&self, p: Prime) -> i128 {
        self.value / p.get() as i128
    }
}

/// A way of evaluating `χ_{τ_d}` on `E_{d'}(F_p) ∪ {∞}`.
pub trait FiberCharacter: Send + Sync {
    fn name(&self) -> &'static str;
    fn eval(&self, fiber: &FiberIsogeny, pt: &CurvePoint) -> Result<CubicCharValue>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TateCharacter;

impl FiberCharacter for TateCharacter {
    fn name(&self) -> &'static str {
        "tate"
    }

    fn eval(&self, fiber: &FiberIsogeny, pt: &CurvePoint) -> Result<CubicCharValue> {
        fiber.chi_tate(pt)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct CosetCharacter;

impl FiberCharacter for CosetCharacter {
    fn name(&self) -> &'static str {
        "coset"
    }

    fn eval(&self, fiber: &FiberIsogeny, pt: &CurvePoint) -> Result<CubicCharValue> {
        fiber.chi_coset(pt)
    }
}

/// Every nonzero square `d` modulo `p`, ascending.
pub fn square_classes(p: Prime) -> Vec<FieldElement> {
    p.elements().filter(|d| d.legendre() == 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables(p: u64) -> Arc<FieldTables> {
        Arc::new(FieldTables::new(Prime::new(p).unwrap()).unwrap())
    }

    fn fiber(p: u64, d: u64) -> FiberIsogeny {
        let t = tables(p);
        let d = t.prime().elem(d);
        FiberIsogeny::new(t, d).unwrap()
    }

    fn primes_1_mod_3(hi: u64) -> impl Iterator<Item = u64> {
        (7..=hi).filter(|&q| crate::fp::is_prime(q) && q % 3 == 1)
    }

    #[test]
    fn construction_errors() {
        let t = tables(7);
        assert_eq!(
            FiberIsogeny::new(t.clone(), t.prime().elem(3)).unwrap_err(),
            Error::NotASquare { p: 7, d: 3 }
        );
        assert!(FiberIsogeny::new(t.clone(), t.prime().zero()).is_err());
        assert!(FiberIsogeny::with_alpha(t.clone(), t.prime().elem(1), t.prime().elem(1)).is_err());
    }

    #[test]
    fn tau_examples() {
        let f = fiber(7, 1);
        let p = f.prime();
        assert_eq!(f.tau_apply(&CurvePoint::Infinity).unwrap(), CurvePoint::Infinity);
        let sqrt_d = p.elem(1);
        assert_eq!(
            f.tau_apply(&CurvePoint::affine(p.zero(), sqrt_d)).unwrap(),
            CurvePoint::Infinity
        );
        assert_eq!(
            f.tau_apply(&CurvePoint::affine(p.zero(), p.elem(2))),
            Err(Error::NotOnCurve)
        );
        // (δ, α) ↦ T whenever δ³ = -4d.
        for q in primes_1_mod_3(200) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                let minus_4d = f.prime().elem_i64(-4) * d;
                for delta in f.prime().elements().filter(|x| x.cube() == minus_4d) {
                    let pt = CurvePoint::affine(delta, f.alpha());
                    assert_eq!(f.tau_apply(&pt).unwrap(), f.t());
                }
            }
        }
    }

    #[test]
    fn tau_lands_on_target() {
        for q in primes_1_mod_3(61) {
            let prime = Prime::new(q).unwrap();
            for d in prime.elements().skip(1) {
                let src = CurveParams::e_d(d).unwrap();
                let dst = CurveParams::e_d_prime(d).unwrap();
                for pt in src.enumerate_affine() {
                    assert!(dst.on_curve(&isogeny_map(d, &pt)));
                }
            }
        }
    }

    #[test]
    fn f_and_g_examples() {
        let f = fiber(7, 1);
        let p = f.prime();
        assert!(f.f_t(&f.t()).unwrap().is_zero());
        assert_eq!(f.f_t(&f.t().neg()).unwrap(), p.elem_i64(-6) * f.alpha());
        assert_eq!(f.f_t(&CurvePoint::Infinity), Err(Error::KernelPoint));
        assert_eq!(f.g_t(&CurvePoint::Infinity), Err(Error::KernelPoint));
        assert_eq!(
            f.g_t(&CurvePoint::affine(p.zero(), p.one())),
            Err(Error::KernelPoint)
        );
        // p = 7, d = 1: (1, 3) lies on y² = x³ + 1; evaluate both sides by hand.
        // α = sqrt(-3) = 2; g = (3 - 2)/1 = 1; τ(1,3) = (12, -21) = (5, 0); f = 0 - 6 = 1.
        assert_eq!(f.alpha().lift(), 2);
        let pt = CurvePoint::affine(p.elem(1), p.elem(3));
        assert_eq!(f.g_t(&pt).unwrap().lift(), 1);
        assert_eq!(f.tau_apply(&pt).unwrap(), CurvePoint::affine(p.elem(5), p.zero()));
        assert_eq!(f.f_t(&f.tau_apply(&pt).unwrap()).unwrap().lift(), 1);
    }

    #[test]
    fn f_of_tau_is_cube_of_g() {
        for q in primes_1_mod_3(61) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                for pt in f.source().enumerate_affine() {
                    if pt.x().unwrap().is_zero() {
                        continue;
                    }
                    let image = f.tau_apply(&pt).unwrap();
                    assert_eq!(f.f_t(&image).unwrap(), f.g_t(&pt).unwrap().cube());
                }
            }
        }
    }

    #[test]
    fn g_vanishes_on_preimage_of_t() {
        for q in primes_1_mod_3(100) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                let minus_4d = f.prime().elem_i64(-4) * d;
                for delta in f.prime().elements().filter(|x| x.cube() == minus_4d) {
                    assert!(f.g_t(&CurvePoint::affine(delta, f.alpha())).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn chi_examples() {
        let f = fiber(13, 1);
        assert!(f.chi_tate(&CurvePoint::Infinity).unwrap().is_one());
        assert!(f.chi_coset(&CurvePoint::Infinity).unwrap().is_one());
        assert_eq!(f.chi_coset(&f.q()).unwrap(), CubicCharValue::new(1));
        for pt in f.image_set() {
            assert!(f.chi_tate(pt).unwrap().is_one());
            assert!(f.chi_coset(pt).unwrap().is_one());
        }
        for q in primes_1_mod_3(100) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                if f.minus_4d_symbol().is_one() {
                    assert!(f.chi_tate(&f.t()).unwrap().is_one());
                    assert!(f.image_set().contains(&f.t()));
                } else {
                    assert!(!f.image_set().contains(&f.t()));
                }
            }
        }
    }

    #[test]
    fn image_is_index_three_subgroup() {
        for q in primes_1_mod_3(61) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                let img = f.image_set();
                assert!(img.contains(&CurvePoint::Infinity));
                assert_eq!(3 * img.len() as u64, f.target().group_order());
                assert_eq!(3 * img.len() as u64, f.source().group_order());
                for a in img {
                    assert!(img.contains(&a.neg()));
                    for b in img {
                        assert!(img.contains(&f.target().add(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn chi_tate_is_a_homomorphism() {
        for q in primes_1_mod_3(31) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                let mut pts = f.target().enumerate_affine();
                pts.push(CurvePoint::Infinity);
                for a in &pts {
                    for b in &pts {
                        let lhs = f.chi_tate(&f.target().add(a, b)).unwrap();
                        let rhs = f.chi_tate(a).unwrap() * f.chi_tate(b).unwrap();
                        assert_eq!(lhs, rhs, "p={q} d={d} a={a:?} b={b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn chi_tate_kernel_matches_image() {
        for q in primes_1_mod_3(61) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                for pt in f.target().enumerate_affine() {
                    assert_eq!(f.chi_tate(&pt).unwrap().is_one(), f.image_set().contains(&pt));
                }
            }
        }
    }

    #[test]
    fn orientation_is_never_mixed() {
        let mut seen = [false; 2];
        for q in primes_1_mod_3(61) {
            for d in square_classes(Prime::new(q).unwrap()) {
                match fiber(q, d.lift()).orientation().unwrap() {
                    Orientation::Equal => seen[0] = true,
                    Orientation::Conjugate => seen[1] = true,
                }
            }
        }
        assert_eq!(seen, [true, true]);
    }

    #[test]
    fn fiber_sums_at_seven() {
        // S_{τ_1} + S_{τ_2} + S_{τ_4} = -7, as forced by 𝕊_τ = -14.
        let sums: Vec<i128> = [1, 2, 4].iter().map(|&d| fiber(7, d).fiber_sum().unwrap().value).collect();
        assert!(sums.iter().all(|s| s % 7 == 0));
        assert_eq!(sums.iter().sum::<i128>(), -7);
    }

    #[test]
    fn fiber_sum_coset_matches_tate() {
        for q in primes_1_mod_3(61) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                let tate = f.fiber_sum().unwrap();
                let coset = f.fiber_sum_with(&CosetCharacter).unwrap();
                assert_eq!(tate.value, coset.value);
                match f.orientation().unwrap() {
                    Orientation::Equal => assert_eq!(tate.sum, coset.sum),
                    Orientation::Conjugate => assert_eq!(tate.sum.conj(), coset.sum),
                }
            }
        }
    }

    #[test]
    fn flipping_alpha_conjugates() {
        for q in primes_1_mod_3(100) {
            for d in square_classes(Prime::new(q).unwrap()) {
                let f = fiber(q, d.lift());
                let g = FiberIsogeny::with_alpha(f.tables().clone(), d, -f.alpha()).unwrap();
                assert_eq!(g.t(), f.t().neg());
                let (a, b) = (f.fiber_sum().unwrap(), g.fiber_sum().unwrap());
                assert_eq!(a.value, b.value);
                assert_eq!(a.sum.conj(), b.sum);
            }
        }
    }

    #[test]
    fn non_square_d_gives_surjective_map() {
        for q in primes_1_mod_3(61) {
            let prime = Prime::new(q).unwrap();
            for d in prime.elements().filter(|d| d.legendre() == -1) {
                let src = CurveParams::e_d(d).unwrap();
                let dst = CurveParams::e_d_prime(d).unwrap();
                let mut image: BTreeSet<CurvePoint> =
                    src.enumerate_affine().iter().map(|pt| isogeny_map(d, pt)).collect();
                image.insert(CurvePoint::Infinity);
                assert_eq!(image.len() as u64, dst.group_order(), "p={q} d={d}");
            }
        }
    }

    #[test]
    fn coset_representative_must_be_outside_image() {
        let f = fiber(13, 1);
        assert!(f.with_coset_representative(CurvePoint::Infinity).is_err());
        let q2 = f.target().add(&f.q(), &f.q());
        let g = f.with_coset_representative(q2).unwrap();
        assert_eq!(g.chi_coset(&f.q()).unwrap(), CubicCharValue::new(2));
        assert_eq!(g.fiber_sum_with(&CosetCharacter).unwrap().value, f.fiber_sum().unwrap().value);
    }

    #[test]
    fn cyclotomic_sum_basics() {
        let mut s = CyclotomicSum::default();
        s.add_term(CubicCharValue::new(0), 10);
        s.add_term(CubicCharValue::new(1), 3);
        assert_eq!(s.integer(), None);
        assert!(matches!(s.try_integer(), Err(Error::NonIntegralSum { .. })));
        s.add_term(CubicCharValue::new(2), 3);
        assert_eq!(s.integer(), Some(7));
        assert_eq!(s.conj().integer(), Some(7));
        assert_eq!((s * 2).integer(), Some(14));
    }
}
