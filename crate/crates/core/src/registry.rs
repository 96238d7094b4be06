//! Interchangeable methods, registered by name and selected at runtime.
//!
//! Three families share one [`Registry`] type:
//! - [`SurfaceSumMethod`]: `naive` (alias `fiberwise`), `direct`, `fast`.
//! - [`ClassNumberOracle`]: `dirichlet`, `forms`.
//! - [`FiberCharacter`]: `tate`, `coset`.

use std::sync::OnceLock;

use crate::class_number::{h_star_dirichlet, h_star_forms, HStarResult};
use crate::error::{Error, Result};
use crate::fp::Prime;
pub use crate::isogeny3::{CosetCharacter, FiberCharacter, TateCharacter};
use crate::surface::{surface_sum_fast, Surface, SurfaceMethod, SurfaceSumResult};

pub trait SurfaceSumMethod: Send + Sync {
    fn name(&self) -> &'static str;
    fn kind(&self) -> SurfaceMethod;
    /// True for the O(p²) enumerations that the sweep caps by default.
    fn quadratic_cost(&self) -> bool;
    fn compute(&self, surface: &Surface) -> Result<SurfaceSumResult>;
}

pub struct Fiberwise;
pub struct Direct;
pub struct Fast;

impl SurfaceSumMethod for Fiberwise {
    fn name(&self) -> &'static str {
        "naive"
    }
    fn kind(&self) -> SurfaceMethod {
        SurfaceMethod::Fiberwise
    }
    fn quadratic_cost(&self) -> bool {
        true
    }
    fn compute(&self, surface: &Surface) -> Result<SurfaceSumResult> {
        surface.sum_fiberwise()
    }
}

impl SurfaceSumMethod for Direct {
    fn name(&self) -> &'static str {
        "direct"
    }
    fn kind(&self) -> SurfaceMethod {
        SurfaceMethod::Direct
    }
    fn quadratic_cost(&self) -> bool {
        true
    }
    fn compute(&self, surface: &Surface) -> Result<SurfaceSumResult> {
        surface.sum_direct()
    }
}

impl SurfaceSumMethod for Fast {
    fn name(&self) -> &'static str {
        "fast"
    }
    fn kind(&self) -> SurfaceMethod {
        SurfaceMethod::Fast
    }
    fn quadratic_cost(&self) -> bool {
        false
    }
    fn compute(&self, surface: &Surface) -> Result<SurfaceSumResult> {
        surface_sum_fast(surface.prime())
    }
}

pub trait ClassNumberOracle: Send + Sync {
    fn name(&self) -> &'static str;
    fn compute(&self, p: Prime) -> Result<HStarResult>;
}

pub struct DirichletOracle;
pub struct FormsOracle;

impl ClassNumberOracle for DirichletOracle {
    fn name(&self) -> &'static str {
        "dirichlet"
    }
    fn compute(&self, p: Prime) -> Result<HStarResult> {
        h_star_dirichlet(p)
    }
}

impl ClassNumberOracle for FormsOracle {
    fn name(&self) -> &'static str {
        "forms"
    }
    fn compute(&self, p: Prime) -> Result<HStarResult> {
        h_star_forms(p)
    }
}

/// Name-keyed, insertion-ordered collection of trait objects.
pub struct Registry<T: ?Sized + 'static> {
    kind: &'static str,
    entries: Vec<Entry<T>>,
}

struct Entry<T: ?Sized + 'static> {
    name: &'static str,
    item: &'static T,
    alias: bool,
}

impl<T: ?Sized + 'static> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    pub fn register(&mut self, name: &'static str, item: &'static T) -> &mut Self {
        self.insert(name, item, false)
    }

    /// Another name for an already registered entry; `all` skips it.
    pub fn alias(&mut self, name: &'static str, target: &str) -> &mut Self {
        let item = self.get(target).expect("alias target registered first");
        self.insert(name, item, true)
    }

    fn insert(&mut self, name: &'static str, item: &'static T, alias: bool) -> &mut Self {
        self.entries.retain(|e| e.name != name);
        self.entries.push(Entry { name, item, alias });
        self
    }

    pub fn get(&self, name: &str) -> Result<&'static T> {
        self.entries
            .iter()
            .find(|e| e.name.eq_ignore_ascii_case(name))
            .map(|e| e.item)
            .ok_or_else(|| Error::UnknownMethod {
                kind: self.kind,
                name: name.to_string(),
                known: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name).collect()
    }

    /// Resolves a name, with `all` expanding to every non-alias entry in registration order.
    pub fn select(&self, name: &str) -> Result<Vec<&'static T>> {
        if name.eq_ignore_ascii_case("all") {
            return Ok(self.entries.iter().filter(|e| !e.alias).map(|e| e.item).collect());
        }
        Ok(vec![self.get(name)?])
    }
}

pub fn surface_methods() -> &'static Registry<dyn SurfaceSumMethod> {
    static REG: OnceLock<Registry<dyn SurfaceSumMethod>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut r: Registry<dyn SurfaceSumMethod> = Registry::new("surface-sum");
        r.register("naive", &Fiberwise)
            .alias("fiberwise", "naive")
            .register("direct", &Direct)
            .register("fast", &Fast);
        r
    })
}

pub fn class_number_oracles() -> &'static Registry<dyn ClassNumberOracle> {
    static REG: OnceLock<Registry<dyn ClassNumberOracle>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut r: Registry<dyn ClassNumberOracle> = Registry::new("class-number");
        r.register("dirichlet", &DirichletOracle)
            .register("forms", &FormsOracle);
        r
    })
}

pub fn fiber_characters() -> &'static Registry<dyn FiberCharacter> {
    static REG: OnceLock<Registry<dyn FiberCharacter>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut r: Registry<dyn FiberCharacter> = Registry::new("character");
        r.register("tate", &TateCharacter)
            .register("coset", &CosetCharacter);
        r
    })
}
