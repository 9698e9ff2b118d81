//! Parameter grids for the verification suites.

use std::path::Path;

use mellin_core::numerics::{parse_rational, Rational};
use num_complex::Complex64;
use serde::Deserialize;

const DEFAULT_GRID: &str = include_str!("default_grid.toml");

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub seed: u64,
    pub laguerre: LaguerreGrid,
    pub hermite: HermiteGrid,
    pub zeros: ZerosGrid,
    pub oracle: OracleGrid,
    pub gf: GfGrid,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaguerreGrid {
    pub max_n: usize,
    pub alphas: Vec<String>,
    pub reciprocity_max: usize,
    pub scaling_betas: Vec<String>,
    pub scaling_points: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermiteGrid {
    pub max_n: usize,
    pub max_m: usize,
    pub odd_reciprocity_max: usize,
    pub gegenbauer_points: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZerosGrid {
    pub max_n: usize,
    pub alphas: Vec<String>,
    pub hermite_max_m: usize,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleGrid {
    pub laguerre_max_n: usize,
    pub hermite_max_n: usize,
    pub alphas: Vec<String>,
    pub samples: Vec<[f64; 2]>,
    pub random_samples: usize,
    pub orthogonality_max_n: usize,
    pub orthogonality_alphas: Vec<String>,
    pub hydrogen_states: Vec<[u32; 3]>,
    pub tol: f64,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GfGrid {
    pub s: Vec<[f64; 2]>,
    pub t: Vec<f64>,
    pub terms: usize,
    pub tol: f64,
}

impl Grid {
    pub fn default_grid() -> Grid {
        toml::from_str(DEFAULT_GRID).expect("embedded grid is valid")
    }

    /// Read a grid file; tables it omits are taken from the defaults.
    pub fn load(path: &Path) -> Result<Grid, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut merged: toml::Table = toml::from_str(DEFAULT_GRID).expect("embedded grid is valid");
        let user: toml::Table =
            toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        merge(&mut merged, user);
        let grid: Grid = toml::Value::Table(merged)
            .try_into()
            .map_err(|e| format!("{}: {e}", path.display()))?;
        grid.validate()?;
        Ok(grid)
    }

    fn validate(&self) -> Result<(), String> {
        for list in [
            &self.laguerre.alphas,
            &self.laguerre.scaling_betas,
            &self.laguerre.scaling_points,
            &self.hermite.gegenbauer_points,
            &self.zeros.alphas,
            &self.oracle.alphas,
            &self.oracle.orthogonality_alphas,
        ] {
            rationals(list)?;
        }
        Ok(())
    }
}

fn merge(base: &mut toml::Table, over: toml::Table) {
    for (key, value) in over {
        match (base.get_mut(&key), value) {
            (Some(toml::Value::Table(b)), toml::Value::Table(o)) => merge(b, o),
            (_, v) => {
                base.insert(key, v);
            }
        }
    }
}

pub fn rationals(list: &[String]) -> Result<Vec<Rational>, String> {
    list.iter()
        .map(|t| parse_rational(t).ok_or_else(|| format!("not a rational: {t:?}")))
        .collect()
}

pub fn points(list: &[[f64; 2]]) -> Vec<Complex64> {
    list.iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect()
}
