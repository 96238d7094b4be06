//! `h*_p`: the class number of Q(√-p) when `p ≡ 3 (mod 4)`, zero otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::Prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassNumberMethod {
    Dirichlet,
    Forms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HStarResult {
    pub prime: Prime,
    pub h_star: u64,
    pub method: ClassNumberMethod,
}

/// `Σ_{x=1}^{p-1} x (x/p)`.
pub fn weighted_legendre_sum(p: Prime) -> i128 {
    p.elements()
        .skip(1)
        .map(|x| x.lift() as i128 * x.legendre() as i128)
        .sum()
}

/// Dirichlet: `Σ x (x/p) = -p h*_p`.
pub fn h_star_dirichlet(p: Prime) -> Result<HStarResult> {
    let result = |h| HStarResult {
        prime: p,
        h_star: h,
        method: ClassNumberMethod::Dirichlet,
    };
    if p.mod_4() == 1 {
        return Ok(result(0));
    }
    let sum = weighted_legendre_sum(p);
    let q = p.get() as i128;
    if sum % q != 0 || sum >= 0 {
        return Err(Error::IdentityViolation {
            what: "Σ x (x/p) is a negative multiple of p",
            p: p.get(),
            expected: -q,
            actual: sum,
        });
    }
    Ok(result((-sum / q) as u64))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Reduced primitive forms `(a, b, c)` of discriminant `-p`, `p ≡ 3 (mod 4)`.
pub fn reduced_forms(p: Prime) -> Vec<(u64, i64, u64)> {
    let n = p.get();
    let mut out = Vec::new();
    if n % 4 != 3 {
        return out;
    }
    // a ≤ sqrt(p/3) for reduced forms: 3a² ≤ 4ac - b² = p.
    let mut a = 1u64;
    while 3 * (a as u128) * (a as u128) <= n as u128 {
        // b odd, |b| ≤ a.
        let mut b = -(a as i64);
        if b % 2 == 0 {
            b += 1;
        }
        while b <= a as i64 {
            let b2 = (b as i128 * b as i128) as u128;
            let num = b2 + n as u128;
            let den = 4 * a as u128;
            if num.is_multiple_of(den) {
                let c = (num / den) as u64;
                let boundary = b.unsigned_abs() == a || a == c;
                let primitive = gcd(gcd(a, b.unsigned_abs()), c) == 1;
                if a <= c && primitive && !(boundary && b < 0) {
                    out.push((a, b, c));
                }
            }
            b += 2;
        }
        a += 1;
    }
    out
}

/// Counts reduced binary quadratic forms of discriminant `-p`.
pub fn h_star_forms(p: Prime) -> Result<HStarResult> {
    let h_star = if p.mod_4() == 1 {
        0
    } else {
        reduced_forms(p).len() as u64
    };
    Ok(HStarResult {
        prime: p,
        h_star,
        method: ClassNumberMethod::Forms,
    })
}
