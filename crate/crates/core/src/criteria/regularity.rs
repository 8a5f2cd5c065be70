use crate::error::{check_arity, Error, Result};
use crate::interval::{ExtInt, TwistInterval};
use crate::par;
use crate::quantifier::{nonvanishing_witness, term_supports, TwistConstraint, Witness};
use crate::sheaf::Bundle;
use crate::space::Multidegree;

use super::{sort_witnesses, Verdict};

/// Every `(i, k)` instance of the regularity condition at `p` that fails:
/// `H^i(E(p) (x) O(k)) != 0` with `sum k_j = -i`, `-n_j <= k_j <= 0`, `i >= 1`.
///
/// Witnesses refer to `E(p)`, so their `t` is always 0.
pub fn regularity_failures(bundle: &Bundle, p: &Multidegree) -> Result<Vec<Witness>> {
    let twisted = bundle.twist(p)?;
    let instances: Vec<Multidegree> = bundle
        .space()
        .box_degrees()
        .into_iter()
        .filter(|k| k.sum() < 0)
        .collect();
    let found = par::map(&instances, |k| {
        let i = (-k.sum()) as usize;
        nonvanishing_witness(&twisted, i, k, TwistConstraint::Fixed(0)).expect("degree in range")
    });
    let mut found: Vec<Witness> = found.into_iter().flatten().collect();
    sort_witnesses(&mut found);
    Ok(found)
}

/// Whether the bundle is `p`-regular (for a multidegree `p`).
pub fn is_regular_at(bundle: &Bundle, p: &Multidegree) -> Result<Verdict> {
    check_arity(bundle.space().factors(), p.len())?;
    Ok(Verdict::from_witness(
        regularity_failures(bundle, p)?.into_iter().next(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityResult {
    /// Least balanced `p` in the window with `E` `(p,...,p)`-regular.
    pub reg: Option<i64>,
    /// Inclusive search window.
    pub window: (i64, i64),
    /// All failing instances one step below `reg`.
    pub failures_below: Vec<Witness>,
}

/// The least `p` such that `E` is `(p,...,p)`-regular, searched over
/// `[-B-1, B+d+2]` with `B` the largest absolute parameter plus the largest
/// factor dimension.
///
/// Every `(i, k)` instance fails on a union of intervals of `p`; the answer is
/// the least point of the window outside all of them, so the search never
/// scans the window point by point.
pub fn balanced_regularity(bundle: &Bundle) -> Result<RegularityResult> {
    if bundle.is_empty() {
        return Err(Error::Domain(
            "regularity of the zero bundle is undefined".into(),
        ));
    }
    let space = bundle.space();
    let b = bundle.max_abs_parameter() + space.max_factor_dim() as i64;
    let window = (-b - 1, b + space.dim() as i64 + 2);
    let instances: Vec<Multidegree> = space
        .box_degrees()
        .into_iter()
        .filter(|k| k.sum() < 0)
        .collect();
    let bad: Vec<TwistInterval> = par::flat_map(&instances, |k| {
        let i = (-k.sum()) as usize;
        term_supports(bundle, i, k)
            .expect("arity matches")
            .into_iter()
            .map(|term| term.support)
            .collect()
    });
    let mut candidates: Vec<i64> = std::iter::once(window.0)
        .chain(bad.iter().filter_map(|iv| match iv.hi() {
            ExtInt::Finite(h) => Some(h + 1),
            _ => None,
        }))
        .filter(|&p| window.0 <= p && p <= window.1)
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    let reg = candidates
        .into_iter()
        .find(|&p| !bad.iter().any(|iv| iv.contains(p)));
    let failures_below = match reg {
        Some(r) => regularity_failures(bundle, &Multidegree::balanced(space.factors(), r - 1))?,
        None => Vec::new(),
    };
    Ok(RegularityResult {
        reg,
        window,
        failures_below,
    })
}
