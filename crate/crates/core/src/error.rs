use std::path::PathBuf;

use thiserror::Error;

/// Errors raised anywhere in the discretization pipeline.
#[derive(Debug, Error)]
pub enum VemError {
    #[error("parameter {t} outside curve interval [{a}, {b}]")]
    Domain { t: f64, a: f64, b: f64 },

    #[error("degenerate parametrization: zero derivative at t = {t}")]
    DegenerateParametrization { t: f64 },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("mesh generation failed: {0}")]
    Generation(String),

    #[error("element {element}: clockwise or degenerate boundary (signed area {area:e})")]
    Orientation { element: usize, area: f64 },

    #[error("inconsistent mesh structure: {0}")]
    Structural(String),

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("element degeneracy: {0}")]
    ElementDegeneracy(String),

    #[error("inconsistent edge sharing: {0}")]
    Topology(String),

    #[error("non-positive pivot {pivot:e} at dof {dof}")]
    NotPositiveDefinite { dof: usize, pivot: f64 },

    #[error("assembly failed at global dof {dof} (pivot {pivot:e}), touching elements {elements:?}")]
    Assembly { dof: usize, pivot: f64, elements: Vec<usize> },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("mesh validation failed: {0}")]
    Validation(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("mesh file: {0}")]
    Format(#[from] serde_json::Error),
}

pub type Result<T, E = VemError> = std::result::Result<T, E>;

impl VemError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        VemError::Io { path: path.into(), source }
    }
}
