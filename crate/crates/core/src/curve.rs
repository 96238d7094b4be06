//! Short Weierstrass-style curves `y^2 = x^3 + A x^2 + B x + C` over F_p with
//! the affine chord-tangent group law and exhaustive point enumeration.

use crate::error::{Error, Result};
use crate::fp::{FieldElement, Prime};
use crate::tables::SquareTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl CurvePoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<FieldElement> {
        match *self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<FieldElement> {
        match *self {
            CurvePoint::Affine { y, .. } => Some(y),
            CurvePoint::Infinity => None,
        }
    }

    pub fn coords(&self) -> Option<(FieldElement, FieldElement)> {
        match *self {
            CurvePoint::Affine { x, y } => Some((x, y)),
            CurvePoint::Infinity => None,
        }
    }

    pub fn neg(&self) -> Self {
        match *self {
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x, y: -y },
            CurvePoint::Infinity => CurvePoint::Infinity,
        }
    }
}

/// `y^2 = x^3 + A x^2 + B x + C`, nonsingular over F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveParams {
    prime: Prime,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
}

impl CurveParams {
    pub fn new(prime: Prime, a: FieldElement, b: FieldElement, c: FieldElement) -> Result<Self> {
        let curve = CurveParams { prime, a, b, c };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve(prime.get()));
        }
        Ok(curve)
    }

    /// `E_d : y^2 = x^3 + d`.
    pub fn e_d(d: FieldElement) -> Result<Self> {
        let prime = d.prime();
        Self::new(prime, prime.zero(), prime.zero(), d)
    }

    /// The codomain `E_{d'}` with `d' = -27 d` of the standard 3-isogeny out of `E_d`.
    pub fn e_d_prime(d: FieldElement) -> Result<Self> {
        Self::e_d(d * d.prime().elem_i64(-27))
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// `(A, B, C)`.
    pub fn coefficients(&self) -> (FieldElement, FieldElement, FieldElement) {
        (self.a, self.b, self.c)
    }

    /// Discriminant of the cubic `x^3 + A x^2 + B x + C`.
    pub fn discriminant(&self) -> FieldElement {
        let f = |v: i64| self.prime.elem_i64(v);
        let (a, b, c) = (self.a, self.b, self.c);
        a.square() * b.square() - f(4) * b.cube() - f(4) * a.cube() * c - f(27) * c.square()
            + f(18) * a * b * c
    }

    /// Right-hand side `x^3 + A x^2 + B x + C`.
    #[inline]
    pub fn rhs(&self, x: FieldElement) -> FieldElement {
        ((x + self.a) * x + self.b) * x + self.c
    }

    pub fn on_curve(&self, pt: &CurvePoint) -> bool {
        match *pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                x.prime() == self.prime && y.prime() == self.prime && y.square() == self.rhs(x)
            }
        }
    }

    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<CurvePoint> {
        let pt = CurvePoint::affine(x, y);
        if self.on_curve(&pt) {
            Ok(pt)
        } else {
            Err(Error::NotOnCurve)
        }
    }

    /// Chord-tangent addition. Inputs are assumed on the curve; debug builds check.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        debug_assert!(self.on_curve(p) && self.on_curve(q), "add: point not on curve");
        let ((x1, y1), (x2, y2)) = match (p.coords(), q.coords()) {
            (None, _) => return *q,
            (_, None) => return *p,
            (Some(a), Some(b)) => (a, b),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return CurvePoint::Infinity;
            }
            let three = self.prime.elem(3);
            let two = self.prime.elem(2);
            let num = three * x1.square() + two * self.a * x1 + self.b;
            num * (two * y1).inv().expect("y1 != 0 when doubling a non-2-torsion point")
        } else {
            (y2 - y1) * (x2 - x1).inv().expect("x1 != x2")
        };
        let x3 = slope.square() - self.a - x1 - x2;
        let y3 = slope * (x1 - x3) - y1;
        CurvePoint::affine(x3, y3)
    }

    pub fn checked_add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        if !self.on_curve(p) || !self.on_curve(q) {
            return Err(Error::NotOnCurve);
        }
        Ok(self.add(p, q))
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.add(p, &q.neg())
    }

    /// `n · P` by double-and-add; negative `n` multiplies `-P`.
    pub fn scalar_mul(&self, n: i64, pt: &CurvePoint) -> CurvePoint {
        let mut base = if n < 0 { pt.neg() } else { *pt };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            base = self.add(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Order of `pt`, found by repeated addition (small groups only).
    pub fn order(&self, pt: &CurvePoint) -> u64 {
        let mut acc = *pt;
        let mut n = 1;
        while !acc.is_infinity() {
            acc = self.add(&acc, pt);
            n += 1;
        }
        n
    }

    /// All affine points, ascending in x then y.
    pub fn enumerate_affine(&self) -> Vec<CurvePoint> {
        self.enumerate_affine_with(&SquareTable::new(self.prime))
    }

    pub fn enumerate_affine_with(&self, squares: &SquareTable) -> Vec<CurvePoint> {
        debug_assert_eq!(squares.prime(), self.prime);
        let mut out = Vec::with_capacity(self.prime.get() as usize + 1);
        for x in self.prime.elements() {
            if let Some(r) = squares.sqrt_min(self.rhs(x)) {
                out.push(CurvePoint::affine(x, r));
                if !r.is_zero() {
                    out.push(CurvePoint::affine(x, -r));
                }
            }
        }
        out
    }

    /// `|E(F_p)|` including the point at infinity.
    pub fn group_order(&self) -> u64 {
        self.enumerate_affine().len() as u64 + 1
    }
}
