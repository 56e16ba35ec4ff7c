//! Polynomials over prime fields and degree-truncated Gröbner bases.

mod examples;
mod field;
mod groebner;
mod poly;

pub use examples::{
    check_quadruple, named_example, NamedExampleReport, QuadrupleReport, Verdict, NAMED_EXAMPLES,
};
pub use field::FieldSpec;
pub use groebner::{buchberger_truncated, derivative_ideal, pairwise_products, Division, GBasis};
pub use poly::{grevlex, Polynomial};
