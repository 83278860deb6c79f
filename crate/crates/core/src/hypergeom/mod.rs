//! Hypergeometric series and the integral I(m, A; theta).

pub mod appell;
pub mod ihyg;
pub mod series;

pub use appell::{appell_f1, appell_f2, appell_f2_double_series, F2Params};
pub use ihyg::{
    di_hyg_da, di_hyg_dm, i_hyg, i_hyg_alt, i_hyg_pi, i_hyg_surface, i_hyg_surface_quadrature,
    lauricella_f11_triple, IhygArgs,
};
pub use series::{gauss_2f1, gauss_2f1_series, pfq, pfq_4f3, pochhammer};
