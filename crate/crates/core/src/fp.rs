//! Arithmetic in the prime field F_p for word-size odd primes p > 3.
//!
//! Every [`FieldElement`] carries its modulus and is kept in canonical form
//! `0 <= value < p`, so the canonical lift `{a}` is simply the stored value.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// An odd prime `3 < p < 2^63`, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub const MAX: u64 = 1 << 63;

    pub fn new(p: u64) -> Result<Self> {
        if p <= 3 || p >= Self::MAX || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn mod_3(self) -> u64 {
        self.0 % 3
    }

    pub fn mod_4(self) -> u64 {
        self.0 % 4
    }

    /// Fails unless `p ≡ 1 (mod 3)`, the standing hypothesis for every cubic object.
    pub fn require_one_mod_three(self) -> Result<Self> {
        if self.mod_3() == 1 {
            Ok(self)
        } else {
            Err(Error::UnsupportedPrime {
                p: self.0,
                requirement: "p ≡ 1 (mod 3)",
            })
        }
    }

    #[inline]
    pub fn elem(self, v: u64) -> FieldElement {
        FieldElement {
            value: v % self.0,
            prime: self,
        }
    }

    pub fn elem_i64(self, v: i64) -> FieldElement {
        FieldElement {
            value: v.rem_euclid(self.0 as i64) as u64,
            prime: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(self) -> FieldElement {
        self.elem(1)
    }

    /// All residues `0, 1, ..., p-1` in ascending order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.0).map(move |v| FieldElement {
            value: v,
            prime: self,
        })
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; these witnesses are exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Residue modulo a [`Prime`], always in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    prime: Prime,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.prime.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by canonical lift; elements of different fields order by modulus first.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.prime, self.value).cmp(&(other.prime, other.value))
    }
}

impl FieldElement {
    /// The canonical lift `{a}` in `[0, p-1]`.
    #[inline]
    pub fn lift(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn prime(self) -> Prime {
        self.prime
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `a^e` by square-and-multiply, with `0^0 = 1`.
    pub fn pow(self, e: u64) -> FieldElement {
        FieldElement {
            value: pow_mod(self.value, e, self.prime.0),
            prime: self.prime,
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(self) -> Result<FieldElement> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.prime.0));
        }
        let p = self.prime.0 as i128;
        let (mut r0, mut r1) = (p, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(FieldElement {
            value: t0.rem_euclid(p) as u64,
            prime: self.prime,
        })
    }

    pub fn div(self, rhs: FieldElement) -> Result<FieldElement> {
        Ok(self * rhs.inv()?)
    }

    pub fn square(self) -> FieldElement {
        self * self
    }

    pub fn cube(self) -> FieldElement {
        self * self * self
    }

    /// Quadratic residue symbol `(a/p)` via Euler's criterion.
    pub fn legendre(self) -> i8 {
        if self.value == 0 {
            return 0;
        }
        let e = self.pow((self.prime.0 - 1) / 2).value;
        if e == 1 {
            1
        } else {
            debug_assert_eq!(e, self.prime.0 - 1);
            -1
        }
    }

    /// Both square roots `{r, p - r}` in ascending order, `{0}` for zero, or
    /// empty for a non-residue.
    pub fn sqrt(self) -> Vec<FieldElement> {
        match self.sqrt_one() {
            None => Vec::new(),
            Some(r) if r.is_zero() => vec![r],
            Some(r) => {
                let s = -r;
                if r < s {
                    vec![r, s]
                } else {
                    vec![s, r]
                }
            }
        }
    }

    /// The square root with the smaller canonical lift, if one exists.
    pub fn sqrt_min(self) -> Option<FieldElement> {
        self.sqrt_one().map(|r| std::cmp::min(r, -r))
    }

    /// Some square root (Tonelli-Shanks, with the `p ≡ 3 (mod 4)` shortcut).
    fn sqrt_one(self) -> Option<FieldElement> {
        let p = self.prime.0;
        match self.legendre() {
            0 => return Some(self),
            -1 => return None,
            _ => {}
        }
        if p % 4 == 3 {
            return Some(self.pow((p + 1) / 4));
        }
        let s = (p - 1).trailing_zeros();
        let q = (p - 1) >> s;
        let z = (2..p)
            .map(|v| self.prime.elem(v))
            .find(|z| z.legendre() == -1)
            .expect("a non-residue exists for odd p");
        let mut m = s;
        let mut c = z.pow(q);
        let mut t = self.pow(q);
        let mut r = self.pow(q.div_ceil(2));
        while t.value != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.value != 1 {
                t2 = t2.square();
                i += 1;
            }
            let b = c.pow(1 << (m - i - 1));
            m = i;
            c = b.square();
            t *= c;
            r *= b;
        }
        Some(r)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.prime, rhs.prime);
        let p = self.prime.0;
        let s = self.value as u128 + rhs.value as u128;
        FieldElement {
            value: (s % p as u128) as u64,
            prime: self.prime,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn neg(self) -> FieldElement {
        let value = if self.value == 0 {
            0
        } else {
            self.prime.0 - self.value
        };
        FieldElement {
            value,
            prime: self.prime,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    #[inline]
    fn mul(self, rhs: FieldElement) -> FieldElement {
        debug_assert_eq!(self.prime, rhs.prime);
        FieldElement {
            value: mul_mod(self.value, rhs.value, self.prime.0),
            prime: self.prime,
        }
    }
}

impl AddAssign for FieldElement {
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    fn sub_assign(&mut self, rhs: FieldElement) {
        *self = *self - rhs;
    }
}

impl MulAssign for FieldElement {
    fn mul_assign(&mut self, rhs: FieldElement) {
        *self = *self * rhs;
    }
}

/// A complex cube root of unity `ζ^exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CubicCharValue(u8);

impl CubicCharValue {
    pub const ONE: CubicCharValue = CubicCharValue(0);

    pub fn new(exponent: u64) -> Self {
        CubicCharValue((exponent % 3) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Complex conjugate, equivalently the inverse.
    pub fn conj(self) -> Self {
        CubicCharValue((3 - self.0) % 3)
    }

    pub fn pow(self, k: u64) -> Self {
        CubicCharValue::new(self.0 as u64 * (k % 3))
    }
}

impl Mul for CubicCharValue {
    type Output = CubicCharValue;
    fn mul(self, rhs: CubicCharValue) -> CubicCharValue {
        CubicCharValue((self.0 + rhs.0) % 3)
    }
}

/// The root of `t^2 + t + 1` with the smaller lift. This element is identified
/// with `ζ` once and for all.
pub fn canonical_omega(p: Prime) -> Result<FieldElement> {
    p.require_one_mod_three()?;
    // t = (-1 ± sqrt(-3)) / 2
    let r = p.elem_i64(-3).sqrt_min().ok_or_else(|| {
        Error::Internal(format!("-3 is a non-residue modulo {p} although p ≡ 1 (mod 3)"))
    })?;
    let half = p.elem(2).inv()?;
    let a = (r - p.one()) * half;
    let b = (-r - p.one()) * half;
    Ok(std::cmp::min(a, b))
}

/// Cubic residue symbol `(a/p)_3` expressed as a power of the canonical ω.
pub fn cubic_symbol(a: FieldElement) -> Result<CubicCharValue> {
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let p = a.prime();
    let omega = canonical_omega(p)?;
    cubic_symbol_with(a, omega)
}

/// As [`cubic_symbol`] but with ω supplied, so hot loops skip recomputing it.
pub fn cubic_symbol_with(a: FieldElement, omega: FieldElement) -> Result<CubicCharValue> {
    if a.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let p = a.prime();
    let r = a.pow((p.get() - 1) / 3);
    if r.lift() == 1 {
        Ok(CubicCharValue(0))
    } else if r == omega {
        Ok(CubicCharValue(1))
    } else if r == omega.square() {
        Ok(CubicCharValue(2))
    } else {
        Err(Error::Internal(format!(
            "{a:?}^((p-1)/3) = {r:?} is not a cube root of unity"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: u64) -> Prime {
        Prime::new(v).unwrap()
    }

    const SMALL_PRIMES: [u64; 12] = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43];

    #[test]
    fn prime_validation() {
        assert!(Prime::new(7).is_ok());
        assert!(Prime::new(3).is_err());
        assert!(Prime::new(2).is_err());
        assert!(Prime::new(9).is_err());
        assert!(Prime::new(561).is_err());
        assert!(Prime::new(3_215_031_751).is_err());
        assert!(Prime::new(10_007).is_ok());
        assert!(Prime::new((1u64 << 61) - 1).is_ok());
        assert!(Prime::new(u64::MAX - 58).is_err());
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0..5000u64 {
            let trial = n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime(n), trial, "n = {n}");
        }
    }

    #[test]
    fn lift_examples() {
        let f = p(7);
        assert_eq!(f.elem(0).lift(), 0);
        assert_eq!(f.elem_i64(-1).lift(), 6);
        assert_eq!(f.elem(10).lift(), 3);
    }

    #[test]
    fn pow_examples() {
        let f = p(7);
        assert_eq!(f.elem(2).pow(3).lift(), 1);
        assert_eq!(f.elem(5).pow(0).lift(), 1);
        assert_eq!(f.elem(0).pow(0).lift(), 1);
        assert_eq!(f.elem(3).pow(6).lift(), 1);
    }

    #[test]
    fn inv_examples() {
        assert_eq!(p(7).elem(1).inv().unwrap().lift(), 1);
        assert_eq!(p(7).elem(3).inv().unwrap().lift(), 5);
        assert_eq!(p(13).elem(2).inv().unwrap().lift(), 7);
        assert_eq!(p(7).zero().inv(), Err(Error::DivisionByZero(7)));
    }

    #[test]
    fn legendre_examples() {
        let f = p(7);
        assert_eq!(f.elem(4).legendre(), 1);
        assert_eq!(f.elem(0).legendre(), 0);
        assert_eq!(f.elem(3).legendre(), -1);
    }

    #[test]
    fn legendre_against_brute_force() {
        for &q in &SMALL_PRIMES {
            let f = p(q);
            let squares: std::collections::HashSet<u64> =
                (1..q).map(|y| y * y % q).collect();
            assert_eq!(squares.len() as u64, (q - 1) / 2);
            for a in 1..q {
                let expected = if squares.contains(&a) { 1 } else { -1 };
                assert_eq!(f.elem(a).legendre(), expected);
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        let f = p(7);
        let lifts = |v: Vec<FieldElement>| v.into_iter().map(|e| e.lift()).collect::<Vec<_>>();
        assert_eq!(lifts(f.elem(4).sqrt()), vec![2, 5]);
        assert_eq!(lifts(f.elem(2).sqrt()), vec![3, 4]);
        assert!(f.elem(3).sqrt().is_empty());
        assert_eq!(lifts(f.zero().sqrt()), vec![0]);
    }

    #[test]
    fn sqrt_tonelli_shanks_path() {
        // p ≡ 1 (mod 8) forces the full loop.
        for q in [17u64, 41, 73, 97, 113, 193, 257, 7681, 65537] {
            let f = p(q);
            for a in 1..q.min(2000) {
                let a = f.elem(a);
                let roots = a.sqrt();
                if a.legendre() == 1 {
                    assert_eq!(roots.len(), 2);
                    for r in roots {
                        assert_eq!(r.square(), a);
                    }
                } else {
                    assert!(roots.is_empty());
                }
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(canonical_omega(p(7)).unwrap().lift(), 2);
        assert_eq!(canonical_omega(p(13)).unwrap().lift(), 3);
        assert_eq!(canonical_omega(p(31)).unwrap().lift(), 5);
        assert!(matches!(
            canonical_omega(p(11)),
            Err(Error::UnsupportedPrime { p: 11, .. })
        ));
    }

    #[test]
    fn omega_is_primitive_cube_root() {
        for q in (7..2000).filter(|&q| is_prime(q) && q % 3 == 1) {
            let w = canonical_omega(p(q)).unwrap();
            assert_eq!(w.cube().lift(), 1);
            assert_ne!(w.lift(), 1);
            let roots: Vec<u64> = (0..q).filter(|t| (t * t + t + 1) % q == 0).collect();
            assert_eq!(w.lift(), roots[0]);
        }
    }

    #[test]
    fn cubic_symbol_examples() {
        let f = p(7);
        assert_eq!(cubic_symbol(f.elem(1)).unwrap().exponent(), 0);
        assert_eq!(cubic_symbol(f.elem(6)).unwrap().exponent(), 0);
        assert_ne!(cubic_symbol(f.elem(2)).unwrap().exponent(), 0);
        assert_eq!(cubic_symbol(f.zero()), Err(Error::ZeroArgument));
        assert!(cubic_symbol(p(11).elem(2)).is_err());
    }

    #[test]
    fn cubic_symbol_detects_cubes() {
        for q in (7..200).filter(|&q| is_prime(q) && q % 3 == 1) {
            let f = p(q);
            let cubes: std::collections::HashSet<u64> =
                (1..q).map(|y| y * y % q * y % q).collect();
            assert_eq!(cubes.len() as u64, (q - 1) / 3);
            for a in 1..q {
                let k = cubic_symbol(f.elem(a)).unwrap();
                assert_eq!(k.is_one(), cubes.contains(&a), "p = {q}, a = {a}");
            }
        }
    }

    #[test]
    fn cubic_char_value_group() {
        let z = CubicCharValue::new(1);
        assert_eq!(z * z * z, CubicCharValue::ONE);
        assert_eq!(z.conj(), CubicCharValue::new(2));
        assert_eq!(z * z.conj(), CubicCharValue::ONE);
        assert_eq!(z.pow(2), CubicCharValue::new(2));
        assert_eq!(CubicCharValue::new(5).exponent(), 2);
    }

    fn prime_1_mod_3() -> impl Strategy<Value = Prime> {
        prop::sample::select(vec![7u64, 13, 19, 31, 37, 43, 61, 97, 103, 1009, 10_009, 1_000_033])
            .prop_map(|q| Prime::new(q).unwrap())
    }

    proptest! {
        #[test]
        fn lift_of_negation(q in prop::sample::select(SMALL_PRIMES.to_vec()), a in 1u64..1_000_000) {
            let f = p(q);
            let a = f.elem(a);
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.lift() + (-a).lift(), q);
        }

        #[test]
        fn legendre_multiplicative(f in prime_1_mod_3(), a in 1u64..u64::MAX, b in 1u64..u64::MAX) {
            let (a, b) = (f.elem(a), f.elem(b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            prop_assert_eq!((a * b).legendre(), a.legendre() * b.legendre());
        }

        #[test]
        fn cubic_symbol_multiplicative(f in prime_1_mod_3(), a in 1u64..u64::MAX, b in 1u64..u64::MAX) {
            let (a, b) = (f.elem(a), f.elem(b));
            prop_assume!(!a.is_zero() && !b.is_zero());
            let lhs = cubic_symbol(a * b).unwrap();
            prop_assert_eq!(lhs, cubic_symbol(a).unwrap() * cubic_symbol(b).unwrap());
        }

        #[test]
        fn sqrt_of_square_contains_root(q in prop::sample::select(vec![7u64, 13, 17, 97, 65537, 1_000_003, (1u64 << 61) - 1]), a in 0u64..u64::MAX) {
            let a = p(q).elem(a);
            prop_assert!(a.square().sqrt().contains(&a));
        }

        #[test]
        fn inverse_roundtrip(q in prop::sample::select(vec![5u64, 7, 1_000_003, (1u64 << 61) - 1]), a in 1u64..u64::MAX) {
            let a = p(q).elem(a);
            prop_assume!(!a.is_zero());
            prop_assert_eq!((a * a.inv().unwrap()).lift(), 1);
        }
    }
}
