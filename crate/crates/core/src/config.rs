//! Numerical tolerances.
//!
//! Every comparison in the crate reads its threshold from a single
//! [`Tolerances`] record. The process-wide record defaults to the module
//! constants and can be replaced exactly once, before first use, with
//! [`Tolerances::install`] (the command-line tool does this from the
//! `HYPERELLIPTIC_TOL` environment variable).

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Width of the isotropic band, relative to the Euclidean norm of a representative.
pub const TOL_ISO: f64 = 1e-9;
/// Incidence tolerance for "point lies on geodesic" tests.
pub const TOL_GEO: f64 = 1e-9;
/// Minimum separation for two points to count as distinct.
pub const TOL_SEP: f64 = 1e-9;
/// Entrywise tolerance for a relation `R^{q_n}...R^{q_1} = ±1`.
pub const TOL_REL: f64 = 1e-8;
/// Band around `|trace| = 2` treated as parabolic.
pub const TOL_CLS: f64 = 1e-7;
/// Margin required when a bending has to push a point strictly across a geodesic.
pub const TOL_SIDE: f64 = 1e-7;
/// Absolute tolerance on areas (quantization, additivity, invariance).
pub const TOL_AREA: f64 = 1e-6;

/// Name of the environment variable read by [`Tolerances::from_env`].
pub const ENV_VAR: &str = "HYPERELLIPTIC_TOL";

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    pub iso: f64,
    pub geo: f64,
    pub sep: f64,
    pub rel: f64,
    pub cls: f64,
    pub side: f64,
    pub area: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            iso: TOL_ISO,
            geo: TOL_GEO,
            sep: TOL_SEP,
            rel: TOL_REL,
            cls: TOL_CLS,
            side: TOL_SIDE,
            area: TOL_AREA,
        }
    }
}

static GLOBAL: OnceLock<Tolerances> = OnceLock::new();

/// The process-wide tolerances.
pub fn tolerances() -> &'static Tolerances {
    GLOBAL.get_or_init(Tolerances::default)
}

impl Tolerances {
    /// Tolerance for "area is maximal", which grows with the number of summed triangles.
    pub fn maximal_area(&self, n: usize) -> f64 {
        self.area * n as f64
    }

    /// Parses overrides of the form `iso=1e-10,rel=1e-7` on top of the defaults.
    pub fn parse_overrides(overrides: &str) -> Result<Self> {
        let mut tol = Self::default();
        for item in overrides
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
        {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::Format(format!("tolerance override `{item}` is not key=value"))
            })?;
            let value: f64 = value.trim().parse().map_err(|_| {
                Error::Format(format!("tolerance `{key}` has non-numeric value `{value}`"))
            })?;
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::Format(format!("tolerance `{key}` must be positive")));
            }
            let slot = match key.trim() {
                "iso" => &mut tol.iso,
                "geo" => &mut tol.geo,
                "sep" => &mut tol.sep,
                "rel" => &mut tol.rel,
                "cls" => &mut tol.cls,
                "side" => &mut tol.side,
                "area" => &mut tol.area,
                other => return Err(Error::Format(format!("unknown tolerance `{other}`"))),
            };
            *slot = value;
        }
        Ok(tol)
    }

    /// Defaults, overridden by the environment variable when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(ENV_VAR) {
            Ok(value) => Self::parse_overrides(&value),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Installs `self` as the process-wide record. Fails if tolerances were already read.
    pub fn install(self) -> Result<()> {
        GLOBAL
            .set(self)
            .map_err(|_| Error::Format("tolerances already initialized".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_replace_only_named_fields() {
        let tol = Tolerances::parse_overrides("iso=1e-10, rel = 2e-7").unwrap();
        assert_eq!(tol.iso, 1e-10);
        assert_eq!(tol.rel, 2e-7);
        assert_eq!(tol.geo, TOL_GEO);
    }

    #[test]
    fn bad_overrides_are_rejected() {
        assert!(Tolerances::parse_overrides("iso").is_err());
        assert!(Tolerances::parse_overrides("iso=abc").is_err());
        assert!(Tolerances::parse_overrides("bogus=1e-3").is_err());
        assert!(Tolerances::parse_overrides("sep=-1").is_err());
    }
}
