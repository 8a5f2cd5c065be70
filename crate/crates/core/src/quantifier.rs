//! Elimination of the balanced-twist quantifier "for every integer t".
//!
//! For a fixed factor sheaf and cohomological degree, the twists `t` at which
//! `h^q` is nonzero form a ray, a point, or nothing. A Kunneth term of an atom
//! is nonzero exactly when every factor is, so its support in `t` is the
//! intersection of the factor supports. Since all Kunneth terms are
//! nonnegative, `H^i(E(t,...,t) (x) O(k))` is nonzero iff some term's support
//! contains `t`. This turns every "for all t" condition into finitely many
//! interval emptiness checks.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::cohomology::h_factor;
use crate::error::{check_arity, Error, Result};
use crate::interval::{ExtInt, TwistInterval};
use crate::par;
use crate::sheaf::{Atom, Bundle, FactorSheaf};
use crate::space::{Multidegree, Space};

/// Which balanced twists a query ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistConstraint {
    /// Every integer `t`.
    Any,
    /// Only the given `t`.
    Fixed(i64),
}

/// The exact set of `t` with `h^q(P^n, f (x) O(t + offset)) != 0`.
pub fn factor_support(n: usize, f: &FactorSheaf, q: usize, offset: i64) -> Result<TwistInterval> {
    if q > n {
        return Err(Error::Domain(format!("degree {q} outside 0..={n}")));
    }
    if !f.is_normalized(n) {
        return Err(Error::Domain(format!("{f:?} is not normalized on P^{n}")));
    }
    let ni = n as i64;
    Ok(match *f {
        FactorSheaf::Line(a) => {
            let base = -a - offset;
            if q == 0 {
                TwistInterval::at_least(base)
            } else if q == n {
                TwistInterval::at_most(base - ni - 1)
            } else {
                TwistInterval::EMPTY
            }
        }
        FactorSheaf::Diff { p, t: c } => {
            let base = -c - offset;
            let pi = p as i64;
            if q == 0 {
                TwistInterval::at_least(base + pi + 1)
            } else if q == p {
                TwistInterval::point(base)
            } else if q == n {
                TwistInterval::at_most(base + pi - ni - 1)
            } else {
                TwistInterval::EMPTY
            }
        }
    })
}

/// Support in `t` of the Kunneth term indexed by the degree tuple `q`, for the
/// atom twisted by `O(k + (t,...,t))`.
pub fn tuple_support(
    space: &Space,
    atom: &Atom,
    q: &[usize],
    k: &Multidegree,
) -> Result<TwistInterval> {
    check_arity(space.factors(), atom.arity())?;
    check_arity(space.factors(), q.len())?;
    check_arity(space.factors(), k.len())?;
    let mut acc = TwistInterval::ALL;
    for (((f, &n), &qj), &kj) in atom
        .factors()
        .iter()
        .zip(space.dims())
        .zip(q)
        .zip(k.as_slice())
    {
        acc = acc.intersect(&factor_support(n, f, qj, kj)?);
        if acc.is_empty() {
            break;
        }
    }
    Ok(acc)
}

/// Degree tuples `q` with `sum q_j = i`, restricted to degrees where each
/// factor can have cohomology at all. Lexicographic order.
pub(crate) fn degree_tuples(space: &Space, atom: &Atom, i: usize) -> Vec<Vec<usize>> {
    let per_slot: Vec<Vec<usize>> = atom
        .factors()
        .iter()
        .zip(space.dims())
        .map(|(f, &n)| match *f {
            FactorSheaf::Line(_) => vec![0, n],
            FactorSheaf::Diff { p, .. } => vec![0, p, n],
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(per_slot.len());
    fn walk(
        slots: &[Vec<usize>],
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        match slots.split_first() {
            None => {
                if remaining == 0 {
                    out.push(current.clone());
                }
            }
            Some((choices, rest)) => {
                for &q in choices {
                    if q <= remaining {
                        current.push(q);
                        walk(rest, remaining - q, current, out);
                        current.pop();
                    }
                }
            }
        }
    }
    walk(&per_slot, i, &mut current, &mut out);
    out
}

/// A nonzero Kunneth term of `H^i(E(t,...,t) (x) O(k))`: the concrete reason a
/// required vanishing fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    /// Index into the bundle's (canonically ordered) summand list.
    pub atom_index: usize,
    /// Cohomological degree `i`.
    pub degree: usize,
    pub k: Multidegree,
    pub t: i64,
    /// Per-factor degrees, summing to `degree`.
    pub q: Vec<usize>,
    /// Dimension of the term for a single copy of the atom (multiplicity
    /// not applied).
    pub dim: BigUint,
}

impl Witness {
    /// Recomputes the Kunneth product this witness claims is nonzero.
    pub fn recompute(&self, bundle: &Bundle) -> Result<BigUint> {
        let space = bundle.space();
        let atom = &bundle
            .summands()
            .get(self.atom_index)
            .ok_or_else(|| Error::Domain(format!("no summand {}", self.atom_index)))?
            .0;
        kunneth_term(space, atom, &self.q, &self.k, self.t)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "i={} k={} t={} q=({}) summand #{} dim={}",
            self.degree,
            self.k,
            self.t,
            self.q
                .iter()
                .map(|q| q.to_string())
                .collect::<Vec<_>>()
                .join(","),
            self.atom_index,
            self.dim
        )
    }
}

fn kunneth_term(
    space: &Space,
    atom: &Atom,
    q: &[usize],
    k: &Multidegree,
    t: i64,
) -> Result<BigUint> {
    let mut dim = BigUint::one();
    for (((f, &n), &qj), &kj) in atom
        .factors()
        .iter()
        .zip(space.dims())
        .zip(q)
        .zip(k.as_slice())
    {
        dim *= h_factor(n, &f.twisted(kj + t), qj)?;
    }
    Ok(dim)
}

/// A feasible Kunneth term: summand index, degree tuple, and its nonempty
/// support in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSupport {
    pub atom_index: usize,
    pub q: Vec<usize>,
    pub support: TwistInterval,
}

/// Every Kunneth term of `H^i(E(t,...,t) (x) O(k))` that is nonzero for some `t`.
pub fn term_supports(bundle: &Bundle, i: usize, k: &Multidegree) -> Result<Vec<TermSupport>> {
    let space = bundle.space();
    check_arity(space.factors(), k.len())?;
    let indexed: Vec<_> = bundle.summands().iter().enumerate().collect();
    let found = par::flat_map(&indexed, |(atom_index, (atom, _))| {
        degree_tuples(space, atom, i)
            .into_iter()
            .filter_map(|q| {
                let support = tuple_support(space, atom, &q, k).expect("arity checked");
                (!support.is_empty()).then_some(TermSupport {
                    atom_index: *atom_index,
                    q,
                    support,
                })
            })
            .collect()
    });
    Ok(found)
}

/// Finds a balanced twist `t` (subject to `constraint`) at which
/// `H^i(E(t,...,t) (x) O(k))` is nonzero, or proves there is none.
///
/// The witness is the smallest feasible `t`, then the lexicographically
/// smallest `q`, then the lowest summand index. A support that is unbounded
/// below has no smallest element; it sorts first and is reported at its upper
/// end.
pub fn nonvanishing_witness(
    bundle: &Bundle,
    i: usize,
    k: &Multidegree,
    constraint: TwistConstraint,
) -> Result<Option<Witness>> {
    let d = bundle.space().dim();
    if i == 0 || i > d {
        return Err(Error::Domain(format!("degree {i} outside 1..={d}")));
    }
    let terms = term_supports(bundle, i, k)?;
    let best = terms
        .into_iter()
        .filter_map(|term| {
            let t = match constraint {
                TwistConstraint::Fixed(t) => term.support.contains(t).then_some(t)?,
                TwistConstraint::Any => match term.support.lo() {
                    ExtInt::Finite(lo) => lo,
                    _ => term
                        .support
                        .hi()
                        .finite()
                        .expect("a term in positive degree is bounded above"),
                },
            };
            let rank = match constraint {
                TwistConstraint::Fixed(_) => ExtInt::Finite(t),
                TwistConstraint::Any => term.support.lo(),
            };
            Some(((rank, t, term.q, term.atom_index), t))
        })
        .min_by(|a, b| a.0.cmp(&b.0));
    let Some(((_, _, q, atom_index), t)) = best else {
        return Ok(None);
    };
    let atom = &bundle.summands()[atom_index].0;
    let dim = kunneth_term(bundle.space(), atom, &q, k, t)?;
    Ok(Some(Witness {
        atom_index,
        degree: i,
        k: k.clone(),
        t,
        q,
        dim,
    }))
}
