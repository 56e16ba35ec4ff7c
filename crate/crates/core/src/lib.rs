//! Associated primes of powers of monomial ideals and of sums of ideals in
//! disjoint sets of variables.
//!
//! The crate is organized bottom-up:
//!
//! * [`ring`], [`monomial`], [`ideal`]: exact monomial-ideal arithmetic,
//!   including joins of rings and degreewise counts.
//! * [`ass`]: associated primes of `A/I` and `U/V` by two independent
//!   algorithms, and profiles across powers.
//! * [`sums`]: closed-form and brute-force associated primes of `(I+J)^n`.
//! * [`persistence`]: persistence, strong persistence, Ratliff–Rush closure.
//! * [`gb`]: prime-field polynomials and a degree-truncated Buchberger
//!   procedure for the non-monomial examples.
//! * [`parse`], [`corpus`]: the ideal file format and the seeded corpus.

pub mod ass;
pub mod corpus;
pub mod error;
pub mod gb;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod persistence;
pub mod prime;
pub mod ring;
pub mod sums;

pub use ass::{
    ass_module, ass_profile, ass_ring_quotient, irreducible_decomposition,
    irreducible_decomposition_splitting, union_ass_check, AssProfile, IrreducibleComponent,
};
pub use error::{Error, Result};
pub use gb::{FieldSpec, GBasis, Polynomial};
pub use ideal::{hilbert_count, minimalize, sum_disjoint, MonomialIdeal};
pub use monomial::Monomial;
pub use parse::{parse_ideal_file, IdealFile};
pub use prime::{AssSet, PrimeSupport};
pub use ring::{join_rings, Ring, Side};
