use thiserror::Error;

/// Errors raised by the special-function and field routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside the domain of {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("singular characteristic in {func}: n*sin^2(phi) = {value}")]
    SingularCharacteristic { func: &'static str, value: f64 },

    #[error("pole of {func} at u = {u}")]
    Pole { func: &'static str, u: f64 },

    #[error("{func} did not converge within {terms} terms")]
    NonConvergence { func: &'static str, terms: usize },

    #[error("{func}: m + A^2 = {sum} is too close to 1 (use the surface value)")]
    Boundary { func: &'static str, sum: f64 },

    #[error("observation point ({r}, {z}) lies on the edge circle of the body")]
    EdgeProximity { r: f64, z: f64 },

    #[error("observation point ({r}, {z}) lies on the charged sheet")]
    OnSurface { r: f64, z: f64 },

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("quadrature exhausted {0} subdivisions")]
    SubdivisionExhausted(usize),

    #[error("finite-difference stencil at ({r}, {z}) with h = {h} crosses a boundary")]
    StencilCrossesBoundary { r: f64, z: f64, h: f64 },

    #[error("observation point coincides with a source point")]
    CoincidentPoint,

    #[error("integration path touches a singularity near ({r}, {z})")]
    PathSingularity { r: f64, z: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
