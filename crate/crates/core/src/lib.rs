//! Exact cohomology of decomposable vector bundles on products of projective
//! spaces `P^{n_1} x ... x P^{n_s}`.
//!
//! Bundles are finite direct sums of box products of line bundles `O(a)` and
//! twisted differentials `Omega^p(t)`. Their cohomology dimensions are computed
//! exactly from the line-bundle and Bott formulas and the Kunneth formula.
//! On top of that the crate decides multigraded Castelnuovo-Mumford
//! regularity, the aCM property, and three cohomological splitting criteria.
//! Every negative answer comes with a [`Witness`]: a nonzero cohomology group
//! pinned down by its degree, shift and twist.
//!
//! ```
//! use mpcoh::{expr, cohomology::bundle_cohomology};
//!
//! let space = expr::parse_space("1,2").unwrap();
//! let e = expr::parse_bundle("O(-2,-3) + box(O(0),Om(1,2))", &space).unwrap();
//! assert_eq!(bundle_cohomology(&e).to_string(), "(3, 0, 0, 1)");
//! ```
//!
//! With the default `parallel` feature, enumeration over summands and
//! vanishing instances runs on the rayon thread pool; without it everything is
//! sequential. Results are identical either way.

pub mod binom;
pub mod cohomology;
pub mod criteria;
pub mod error;
pub mod expr;
pub mod interval;
pub mod koszul;
mod par;
pub mod quantifier;
pub mod sheaf;
pub mod space;

pub use cohomology::CohTable;
pub use criteria::{Criterion, CriterionReport, Verdict};
pub use error::{Error, Result};
pub use interval::{ExtInt, TwistInterval};
pub use quantifier::{TwistConstraint, Witness};
pub use sheaf::{Atom, Bundle, FactorSheaf};
pub use space::{Multidegree, Space};
