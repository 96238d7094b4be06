//! The 2-isogeny sum on `E : y² = (x + 2)(x² - 2) = x³ + 2x² - 2x - 4`.
//!
//! The degree-2 endomorphism is realized as the Vélu isogeny with kernel
//! `⟨(-2, 0)⟩` followed by a rational isomorphism of its codomain back onto
//! `E`. Any two such realizations differ by `±1`, which fixes the image.

use std::collections::BTreeSet;

use crate::curve::{CurveParams, CurvePoint};
use crate::error::{Error, Result};
use crate::fp::{FieldElement, Prime};

/// `x ↦ u²x + r, y ↦ u³y` from `E` to an isomorphic model; inverted to pull points back.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Isomorphism {
    pub u: FieldElement,
    pub r: FieldElement,
}

#[derive(Debug, Clone)]
pub struct TwoIsogenyCase {
    prime: Prime,
    curve: CurveParams,
    kernel: CurvePoint,
    velu_codomain: CurveParams,
    /// Vélu's `v = g^x(K)`.
    v: FieldElement,
    iso: Isomorphism,
    points: Vec<CurvePoint>,
    image: BTreeSet<CurvePoint>,
}

/// `y² = x³ + 2x² - 2x - 4` over F_p.
pub fn base_curve(p: Prime) -> Result<CurveParams> {
    CurveParams::new(p, p.elem(2), p.elem_i64(-2), p.elem_i64(-4))
}

/// Trace of Frobenius `p + 1 - |E(F_p)|` and whether it is prime to `p`.
pub fn reduction_type(p: Prime) -> Result<(i64, bool)> {
    let order = base_curve(p)?.group_order() as i64;
    let trace = p.get() as i64 + 1 - order;
    Ok((trace, trace.rem_euclid(p.get() as i64) != 0))
}

/// Vélu codomain for the 2-torsion kernel `(x0, 0)` of `y² = x³ + a2 x² + a4 x + a6`.
fn velu_codomain(curve: &CurveParams, x0: FieldElement) -> Result<(CurveParams, FieldElement)> {
    let p = curve.prime();
    let (a2, a4, a6) = curve.coefficients();
    let v = p.elem(3) * x0.square() + p.elem(2) * a2 * x0 + a4;
    let big_a4 = a4 - p.elem(5) * v;
    let big_a6 = a6 - p.elem(4) * a2 * v - p.elem(7) * x0 * v;
    Ok((CurveParams::new(p, a2, big_a4, big_a6)?, v))
}

/// Finds `(u, r)` with `other = E` under `X = u²x + r, Y = u³y`. Solving the
/// `x²` coefficient for `r` reduces the search over `(u, r)` to a scan over `u`.
fn find_isomorphism(from: &CurveParams, to: &CurveParams) -> Option<Isomorphism> {
    let p = from.prime();
    let (fa, fb, fc) = from.coefficients();
    let (ta, tb, tc) = to.coefficients();
    let inv3 = p.elem(3).inv().ok()?;
    p.elements().skip(1).find_map(|u| {
        let u2 = u.square();
        let (u4, u6) = (u2.square(), u2.cube());
        let r = (ta * u2 - fa) * inv3;
        let b = p.elem(3) * r.square() + p.elem(2) * fa * r + fb;
        let c = from.rhs(r);
        debug_assert_eq!(c, r.cube() + fa * r.square() + fb * r + fc);
        (b == tb * u4 && c == tc * u6).then_some(Isomorphism { u, r })
    })
}

impl TwoIsogenyCase {
    pub fn build(p: Prime) -> Result<Self> {
        let curve = base_curve(p)?;
        let x0 = p.elem_i64(-2);
        let kernel = curve.point(x0, p.zero())?;
        let (velu_codomain, v) = velu_codomain(&curve, x0)?;
        let iso = find_isomorphism(&velu_codomain, &curve)
            .ok_or(Error::NoRationalIsomorphism(p.get()))?;
        let points = curve.enumerate_affine();
        let mut case = TwoIsogenyCase {
            prime: p,
            curve,
            kernel,
            velu_codomain,
            v,
            iso,
            points,
            image: BTreeSet::new(),
        };
        let mut image = BTreeSet::new();
        image.insert(CurvePoint::Infinity);
        for pt in &case.points {
            image.insert(case.apply(pt)?);
        }
        if 2 * image.len() != case.points.len() + 1 {
            return Err(Error::Internal(format!(
                "2-isogeny image has size {} in a group of order {}",
                image.len(),
                case.points.len() + 1
            )));
        }
        case.image = image;
        Ok(case)
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn curve(&self) -> &CurveParams {
        &self.curve
    }

    pub fn kernel(&self) -> CurvePoint {
        self.kernel
    }

    pub fn velu_codomain(&self) -> &CurveParams {
        &self.velu_codomain
    }

    pub fn isomorphism(&self) -> Isomorphism {
        self.iso
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn image(&self) -> &BTreeSet<CurvePoint> {
        &self.image
    }

    /// Vélu: `(x + v/(x - x0), y (1 - v/(x - x0)²))`.
    pub fn velu(&self, pt: &CurvePoint) -> Result<CurvePoint> {
        if !self.curve.on_curve(pt) {
            return Err(Error::NotOnCurve);
        }
        let x0 = self.kernel.x().expect("affine kernel point");
        let Some((x, y)) = pt.coords() else {
            return Ok(CurvePoint::Infinity);
        };
        if x == x0 {
            return Ok(CurvePoint::Infinity);
        }
        let t = (x - x0).inv()?;
        Ok(CurvePoint::affine(
            x + self.v * t,
            y * (self.prime.one() - self.v * t.square()),
        ))
    }

    /// The endomorphism `E → E`: Vélu then the isomorphism back onto `E`.
    pub fn apply(&self, pt: &CurvePoint) -> Result<CurvePoint> {
        let Some((x, y)) = self.velu(pt)?.coords() else {
            return Ok(CurvePoint::Infinity);
        };
        let inv_u = self.iso.u.inv()?;
        let out = CurvePoint::affine((x - self.iso.r) * inv_u.square(), y * inv_u.cube());
        debug_assert!(self.curve.on_curve(&out));
        Ok(out)
    }

    /// `+1` on the image, `-1` off it.
    pub fn chi(&self, pt: &CurvePoint) -> i8 {
        if self.image.contains(pt) {
            1
        } else {
            -1
        }
    }

    /// `Σ_{P ∈ E(F_p)} {x(P)} χ(P)` without any divisibility check.
    pub fn raw_sum(&self) -> i128 {
        self.points
            .iter()
            .map(|pt| pt.x().expect("affine").lift() as i128 * self.chi(pt) as i128)
            .sum()
    }

    /// The sum, checked for divisibility by `p`.
    pub fn sum(&self) -> Result<TwoIsogenySum> {
        let value = self.raw_sum();
        let p = self.prime.get() as i128;
        if value % p != 0 {
            return Err(Error::IdentityViolation {
                what: "2-isogeny sum divisible by p",
                p: p as u64,
                expected: 0,
                actual: value % p,
            });
        }
        Ok(TwoIsogenySum {
            value,
            quotient: -value / p,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoIsogenySum {
    pub value: i128,
    /// `-S_τ / p`.
    pub quotient: i128,
}

pub fn build_two_isogeny(p: Prime) -> Result<TwoIsogenyCase> {
    TwoIsogenyCase::build(p)
}

pub fn two_isogeny_sum(case: &TwoIsogenyCase) -> Result<TwoIsogenySum> {
    case.sum()
}
