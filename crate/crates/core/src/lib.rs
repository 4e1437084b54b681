//! Irreducibility of integer polynomials via prime-divisibility criteria.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`] holds [`IntegerPolynomial`], exact arithmetic and p-adic valuations.
//! * [`newton`] builds the Newton diagram of a polynomial with respect to a prime.
//! * [`criteria`] implements the Eisenstein family of criteria, the Dumas criterion,
//!   the `k = 2` structure dichotomy and an automatic search with shift substitution.
//! * [`oracle`] is an independent brute-force factorizer (rational roots plus
//!   Kronecker's method) used to cross-check every verdict.
//!
//! Criteria are one-sided: a verdict is either a proof of irreducibility (or of the
//! two-halves dichotomy) or `Inconclusive`. Nothing in [`criteria`] ever claims a
//! polynomial is reducible; only the oracle can do that.

pub mod criteria;
pub mod error;
pub mod newton;
pub mod oracle;
pub mod poly;
pub mod primes;

pub use criteria::{
    auto_check, candidate_primes, dumas_check, eisenstein_check, generalized_check,
    k2_structure_check, reversed_eisenstein_check, AutoConfig, CandidatePrimes, CheckReport,
    Criterion, CriterionVerdict, InconclusiveReason, VerdictKind,
};
pub use error::Error;
pub use newton::{build_diagram, build_vertices, is_simple, lower_hull, DiagramVertex, NewtonDiagram, Segment};
pub use oracle::{
    check_factor_divisibility, kronecker_factor, rational_roots, verify_verdict, FactorizationResult,
    OracleError, OracleLimits, VerificationOutcome,
};
pub use poly::{valuation, IntegerPolynomial, Valuation};

pub type Result<T, E = Error> = std::result::Result<T, E>;
