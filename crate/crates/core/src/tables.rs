//! Per-prime lookup tables: square roots and cubic residue symbols for every
//! residue. Built once in O(p) and shared read-only across fibers.

use crate::error::{Error, Result};
use crate::fp::{canonical_omega, cubic_symbol_with, CubicCharValue, FieldElement, Prime};

const NONE: u64 = u64::MAX;

/// Smallest-lift square root for every residue, or none.
#[derive(Debug, Clone)]
pub struct SquareTable {
    prime: Prime,
    root: Vec<u64>,
}

impl SquareTable {
    pub fn new(prime: Prime) -> Self {
        let p = prime.get();
        let mut root = vec![NONE; p as usize];
        for y in 0..=p / 2 {
            root[(y as u128 * y as u128 % p as u128) as usize] = y;
        }
        SquareTable { prime, root }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    /// Square root with the smaller lift, as [`FieldElement::sqrt_min`].
    #[inline]
    pub fn sqrt_min(&self, a: FieldElement) -> Option<FieldElement> {
        match self.root[a.lift() as usize] {
            NONE => None,
            r => Some(self.prime.elem(r)),
        }
    }

    #[inline]
    pub fn is_square(&self, a: FieldElement) -> bool {
        self.root[a.lift() as usize] != NONE
    }

    #[inline]
    pub fn legendre(&self, a: FieldElement) -> i8 {
        match self.root[a.lift() as usize] {
            0 => 0,
            NONE => -1,
            _ => 1,
        }
    }
}

/// Cubic residue symbol for every nonzero residue, relative to the canonical ω.
#[derive(Debug, Clone)]
pub struct CubicTable {
    prime: Prime,
    omega: FieldElement,
    exponent: Vec<u8>,
}

impl CubicTable {
    pub fn new(prime: Prime) -> Result<Self> {
        let omega = canonical_omega(prime)?;
        let p = prime.get();
        let g = primitive_root(prime);
        let base = cubic_symbol_with(g, omega)?.exponent();
        let mut exponent = vec![u8::MAX; p as usize];
        let mut acc = prime.one();
        let mut k = 0u8;
        for _ in 0..p - 1 {
            exponent[acc.lift() as usize] = k;
            acc *= g;
            k = (k + base) % 3;
        }
        debug_assert_eq!(acc.lift(), 1);
        Ok(CubicTable {
            prime,
            omega,
            exponent,
        })
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn omega(&self) -> FieldElement {
        self.omega
    }

    #[inline]
    pub fn symbol(&self, a: FieldElement) -> Result<CubicCharValue> {
        match self.exponent[a.lift() as usize] {
            u8::MAX => Err(Error::ZeroArgument),
            k => Ok(CubicCharValue::new(k as u64)),
        }
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of F_p^×.
pub fn primitive_root(prime: Prime) -> FieldElement {
    let order = prime.get() - 1;
    let factors = prime_factors(order);
    (2..prime.get())
        .map(|g| prime.elem(g))
        .find(|g| factors.iter().all(|&q| g.pow(order / q).lift() != 1))
        .expect("F_p^× is cyclic")
}

/// Both tables for a prime `p ≡ 1 (mod 3)`.
#[derive(Debug, Clone)]
pub struct FieldTables {
    pub squares: SquareTable,
    pub cubes: CubicTable,
}

impl FieldTables {
    pub fn new(prime: Prime) -> Result<Self> {
        Ok(FieldTables {
            cubes: CubicTable::new(prime)?,
            squares: SquareTable::new(prime),
        })
    }

    pub fn prime(&self) -> Prime {
        self.squares.prime()
    }
}
