//! The elliptic surface `y² = x³ + z²` with the singular fiber `z = 0` removed,
//! the fiber-gluing endomorphism τ, its character, and the global sum 𝕊_τ.
//!
//! The fiber over `w` is `E_{w²}`. The isogeny `τ_d` with `d = z²` lands in
//! `E_{-27z²} = E_{(βz)²}`, where `β² = -27`, so τ sends the fiber over `z` to
//! the fiber over `βz`. Every point of the surface is therefore a point of
//! some codomain `E_{d'}`, and `χ_τ` is evaluated there with `T = (0, w)`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fp::{CubicCharValue, FieldElement, Prime};
use crate::isogeny3::{square_classes, CyclotomicSum, FiberIsogeny, FiberSum};
use crate::tables::FieldTables;

/// `(x, y, z)` with `y² = x³ + z²` and `z ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfacePoint {
    pub x: FieldElement,
    pub y: FieldElement,
    pub z: FieldElement,
}

impl SurfacePoint {
    pub fn new(x: FieldElement, y: FieldElement, z: FieldElement) -> Result<Self> {
        if z.is_zero() || y.square() != x.cube() + z.square() {
            return Err(Error::NotOnCurve);
        }
        Ok(SurfacePoint { x, y, z })
    }

    /// The fibration `π(x, y, z) = z`.
    pub fn fiber(&self) -> FieldElement {
        self.z
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceMethod {
    Fiberwise,
    Direct,
    Fast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurfaceSumResult {
    pub prime: Prime,
    pub total: CyclotomicSum,
    pub integer_value: i128,
    pub quotient: i128,
    pub method: SurfaceMethod,
}

impl SurfaceSumResult {
    fn from_total(prime: Prime, total: CyclotomicSum, method: SurfaceMethod) -> Result<Self> {
        let integer_value = total.try_integer()?;
        let p = prime.get() as i128;
        if integer_value % p != 0 {
            return Err(Error::IdentityViolation {
                what: "global sum divisible by p",
                p: prime.get(),
                expected: 0,
                actual: integer_value % p,
            });
        }
        Ok(SurfaceSumResult {
            prime,
            total,
            integer_value,
            quotient: integer_value / p,
            method,
        })
    }
}

/// Shared per-prime state: lookup tables and the fixed `β = sqrt(-27)` of smaller lift.
#[derive(Debug, Clone)]
pub struct Surface {
    tables: Arc<FieldTables>,
    beta: FieldElement,
}

impl Surface {
    pub fn new(prime: Prime) -> Result<Self> {
        Self::with_tables(Arc::new(FieldTables::new(prime)?))
    }

    pub fn with_tables(tables: Arc<FieldTables>) -> Result<Self> {
        let p = tables.prime();
        let beta = tables
            .squares
            .sqrt_min(p.elem_i64(-27))
            .ok_or_else(|| Error::Internal("-27 must be a square when p ≡ 1 (mod 3)".into()))?;
        Ok(Surface { tables, beta })
    }

    pub fn prime(&self) -> Prime {
        self.tables.prime()
    }

    pub fn beta(&self) -> FieldElement {
        self.beta
    }

    pub fn tables(&self) -> &Arc<FieldTables> {
        &self.tables
    }

    /// `τ(x, y, z) = ((y² + 3z²)/x², y(x³ - 8z²)/x³, βz)`.
    pub fn tau_surface(&self, pt: &SurfacePoint) -> Result<SurfacePoint> {
        let SurfacePoint { x, y, z } = *pt;
        if x.is_zero() {
            return Err(Error::KernelPoint);
        }
        let p = self.prime();
        let d = z.square();
        let inv_x3 = x.cube().inv()?;
        let x_new = (y.square() + p.elem(3) * d) * inv_x3 * x;
        let y_new = y * (x.cube() - p.elem(8) * d) * inv_x3;
        SurfacePoint::new(x_new, y_new, self.beta * z)
            .map_err(|_| Error::Internal(format!("τ{pt:?} left the surface")))
    }

    /// `χ_τ` at a point of the fiber over `w`, read as a point of `E_{d'}` with
    /// `d = -w²/27` and `T = (0, w)`.
    pub fn chi_surface(&self, pt: &SurfacePoint) -> Result<CubicCharValue> {
        let SurfacePoint { x, y, z: w } = *pt;
        if !x.is_zero() {
            return self.tables.cubes.symbol(y - w);
        }
        let p = self.prime();
        // -4d = 4w²/27.
        let minus_4d = p.elem(4) * w.square() * p.elem(27).inv()?;
        let k = if y == w { 1 } else { 2 };
        Ok(self.tables.cubes.symbol(minus_4d)?.pow(k))
    }

    /// The fiber isogeny whose codomain is the surface fiber over `w`, oriented
    /// so that its `T` is `(0, w)`.
    pub fn fiber_isogeny_into(&self, w: FieldElement) -> Result<FiberIsogeny> {
        let p = self.prime();
        let inv27 = p.elem(27).inv()?;
        let d = -(w.square() * inv27);
        let alpha = w * p.elem(3).inv()?;
        FiberIsogeny::with_alpha(self.tables.clone(), d, alpha)
    }

    /// All points of the surface, ascending in `(x, y, z)` order of the fiber sweep.
    pub fn points(&self) -> Vec<SurfacePoint> {
        let p = self.prime();
        let mut out = Vec::new();
        for z in p.elements().skip(1) {
            for x in p.elements() {
                let rhs = x.cube() + z.square();
                if let Some(r) = self.tables.squares.sqrt_min(rhs) {
                    out.push(SurfacePoint { x, y: r, z });
                    if !r.is_zero() {
                        out.push(SurfacePoint { x, y: -r, z });
                    }
                }
            }
        }
        out
    }

    /// `s(x, y)` in closed form: 0 unless `y² - x³` is a nonzero square `r²`;
    /// then 2 if `y + r` is a cube and -1 otherwise.
    pub fn s_xy(&self, x: FieldElement, y: FieldElement) -> Result<i8> {
        if x.is_zero() {
            return Err(Error::KernelPoint);
        }
        let disc = y.square() - x.cube();
        if self.tables.squares.legendre(disc) != 1 {
            return Ok(0);
        }
        let r = self.tables.squares.sqrt_min(disc).expect("square");
        Ok(if self.tables.cubes.symbol(y + r)?.is_one() { 2 } else { -1 })
    }

    /// `Σ_{z ≠ 0} (y - βz / p)_3 e(x, y, z)` summed literally over `z`.
    pub fn s_xy_direct(&self, x: FieldElement, y: FieldElement) -> Result<CyclotomicSum> {
        let p = self.prime();
        let minus_27 = p.elem_i64(-27);
        let target = y.square() - x.cube();
        let mut acc = CyclotomicSum::default();
        for z in p.elements().skip(1) {
            if minus_27 * z.square() == target {
                acc.add_term(self.tables.cubes.symbol(y - self.beta * z)?, 1);
            }
        }
        Ok(acc)
    }

    /// `Σ_y s(x, y)`, checked against `-1 - (x/p)`.
    pub fn row_sum(&self, x: FieldElement) -> Result<i128> {
        let p = self.prime();
        let mut total = 0i128;
        for y in p.elements() {
            total += self.s_xy(x, y)? as i128;
        }
        let expected = -1 - x.legendre() as i128;
        if total != expected {
            return Err(Error::IdentityViolation {
                what: "row sum Σ_y s(x, y) = -1 - (x/p)",
                p: p.get(),
                expected,
                actual: total,
            });
        }
        Ok(total)
    }

    /// `|{y : ((y² - x³)/p) = 1}|`.
    pub fn count_y_quadratic(&self, x: FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::KernelPoint);
        }
        let x3 = x.cube();
        Ok(self
            .prime()
            .elements()
            .filter(|&y| self.tables.squares.legendre(y.square() - x3) == 1)
            .count() as u64)
    }

    /// `S_{τ_d}` for every square class `d`, ascending in `d`.
    pub fn fiber_sums(&self) -> Vec<Result<FiberSum>> {
        square_classes(self.prime())
            .par_iter()
            .map(|&d| FiberIsogeny::new(self.tables.clone(), d).and_then(|f| f.fiber_sum()))
            .collect()
    }

    /// `Σ_{(d/p)=1} 2·S_{τ_d}`, one fiber isogeny per square class.
    pub fn sum_fiberwise(&self) -> Result<SurfaceSumResult> {
        let sums = self.fiber_sums().into_iter().collect::<Result<Vec<_>>>()?;
        Self::assemble_fiberwise(self.prime(), &sums)
    }

    /// Each square `d` is hit by `z` and `-z`, hence the factor 2.
    pub fn assemble_fiberwise(p: Prime, sums: &[FiberSum]) -> Result<SurfaceSumResult> {
        let total: CyclotomicSum = sums.iter().map(|s| s.sum).sum();
        SurfaceSumResult::from_total(p, total * 2, SurfaceMethod::Fiberwise)
    }

    /// The triple sum over `z ≠ 0`, `y`, `x ≠ 0` with `y² = x³ - 27z²`, weight
    /// `x · (y - βz / p)_3`. The `x` with `e(x, y, z) = 1` are read off a cube-root table.
    pub fn sum_direct(&self) -> Result<SurfaceSumResult> {
        let p = self.prime();
        let roots = CubeRoots::new(p);
        let minus_27 = p.elem_i64(-27);
        let total = (1..p.get())
            .into_par_iter()
            .map(|z| {
                let z = p.elem(z);
                let shift = minus_27 * z.square();
                let bz = self.beta * z;
                let mut acc = CyclotomicSum::default();
                for y in p.elements() {
                    let xs = roots.of(y.square() - shift);
                    if xs.is_empty() {
                        continue;
                    }
                    let weight: i128 = xs.iter().map(|&x| x as i128).sum();
                    acc.add_term(self.tables.cubes.symbol(y - bz)?, weight);
                }
                Ok(acc)
            })
            .try_reduce(CyclotomicSum::default, |a, b| Ok(a + b))?;
        SurfaceSumResult::from_total(p, total, SurfaceMethod::Direct)
    }

    /// `Σ_x x · Σ_y s(x, y)` via the closed form of `s`; a fourth route used in tests.
    pub fn sum_by_rows(&self) -> Result<i128> {
        let p = self.prime();
        (1..p.get())
            .into_par_iter()
            .map(|x| {
                let xe = p.elem(x);
                let mut row = 0i128;
                for y in p.elements() {
                    row += self.s_xy(xe, y)? as i128;
                }
                Ok(x as i128 * row)
            })
            .try_reduce(|| 0, |a, b| Ok(a + b))
    }
}

/// Nonzero cube roots of each residue; three per cube when `p ≡ 1 (mod 3)`.
struct CubeRoots {
    roots: Vec<[u64; 3]>,
}

impl CubeRoots {
    fn new(p: Prime) -> Self {
        let mut roots = vec![[0u64; 3]; p.get() as usize];
        for x in 1..p.get() {
            let c = p.elem(x).cube().lift() as usize;
            let slot = roots[c].iter().position(|&r| r == 0).expect("at most three cube roots");
            roots[c][slot] = x;
        }
        CubeRoots { roots }
    }

    fn of(&self, c: FieldElement) -> &[u64] {
        let r = &self.roots[c.lift() as usize];
        let n = r.iter().take_while(|&&v| v != 0).count();
        &r[..n]
    }
}

pub fn surface_sum_fiberwise(p: Prime) -> Result<SurfaceSumResult> {
    Surface::new(p)?.sum_fiberwise()
}

pub fn surface_sum_direct(p: Prime) -> Result<SurfaceSumResult> {
    Surface::new(p)?.sum_direct()
}

/// `Σ_{x=1}^{p-1} x (-1 - (x/p))` in O(p) time and O(1) memory.
pub fn surface_sum_fast(p: Prime) -> Result<SurfaceSumResult> {
    p.require_one_mod_three()?;
    let total: i128 = p
        .elements()
        .skip(1)
        .map(|x| x.lift() as i128 * (-1 - x.legendre() as i128))
        .sum();
    SurfaceSumResult::from_total(p, CyclotomicSum::new(total, 0, 0), SurfaceMethod::Fast)
}
