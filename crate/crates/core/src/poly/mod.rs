//! Exact scalars: rationals, polynomials, rational functions.

mod factor;
mod mobius;
#[allow(clippy::module_inception)]
mod poly;
mod rat;
mod ratfn;

pub use factor::{split_over_rationals, FactoredPoly};
pub use mobius::{mobius_factored, mobius_tilde, mobius_untilde};
pub use poly::{Poly, NEG_INF};
pub use rat::{format_rat, parse_rat, rat, rat_frac, Rat};
pub use ratfn::RatFn;
