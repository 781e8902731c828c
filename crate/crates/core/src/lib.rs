//! Exact higher-order Bernoulli and Euler polynomials over the rationals,
//! closed forms for integrals of their products, reciprocity relations for
//! sums of products, Dedekind and Hardy–Berndt sums, and the Laplace
//! transform of the periodic Euler function.

pub mod combinat;
pub mod error;
pub mod identities;
pub mod integrals;
pub mod laplace;
pub mod poly;
pub mod rat;
pub mod reciprocity;
pub mod report;
pub mod series;
pub mod special;
pub mod sums;
pub mod suites;

pub use error::Error;
pub use poly::Poly;
pub use rat::Rat;
pub use report::VerificationReport;
pub use series::Series;
pub use special::Family;
