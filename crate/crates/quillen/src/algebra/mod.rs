//! Exact arithmetic foundations: rationals, partitions, univariate and
//! graded polynomials, truncated power series, polynomial factorization,
//! and symmetric-function base changes.

pub mod factor;
pub mod graded;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod series;
pub mod symmetric;

pub use factor::{factor, Factorization};
pub use graded::GradedPolynomial;
pub use partition::{partitions, Partition};
pub use poly::Poly;
pub use rational::{rat, Rational};
pub use series::{PowerSeries, SeriesError};
