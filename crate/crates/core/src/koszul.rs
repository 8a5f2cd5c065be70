//! Slot-wise Koszul complexes of line bundles and the dimension identities
//! they imply.
//!
//! Write `w_j = -n_j - 1`. Resolving slot `j` means running the Koszul
//! complex of `P^{n_j}`,
//!
//! ```text
//! 0 -> O(w_j) -> O(w_j + 1)^C(n_j+1, n_j) -> ... -> O(-1)^C(n_j+1, 1) -> O -> 0,
//! ```
//!
//! with slots before `j` at twist 0 and slots after `j` at their canonical
//! twist. The resolution of slot `j` ends where that of slot `j + 1` starts,
//! so consecutive resolutions splice into one complex from `O(w_1, ..., w_s)`
//! to `O`. The shared term is dropped at each splice.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::binom::binomial;
use crate::cohomology::{atom_cohomology, euler_char};
use crate::sheaf::{Atom, Bundle};
use crate::space::{Multidegree, Space};

/// Which complex to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KoszulVariant {
    /// The resolution of the first slot, from `O(w_1, ..., w_s)` to
    /// `O(0, w_2, ..., w_s)`.
    FirstSlot,
    /// The remaining slots spliced, from `O(0, w_2, ..., w_s)` to `O`. Empty
    /// on a single factor.
    RemainingSlots,
    /// Every slot spliced, from `O(w_1, ..., w_s)` to `O`.
    Full,
}

impl KoszulVariant {
    pub const ALL: [KoszulVariant; 3] = [
        KoszulVariant::FirstSlot,
        KoszulVariant::RemainingSlots,
        KoszulVariant::Full,
    ];

    pub fn label(self) -> &'static str {
        match self {
            KoszulVariant::FirstSlot => "K1",
            KoszulVariant::RemainingSlots => "K2",
            KoszulVariant::Full => "K3",
        }
    }
}

/// One term `O(a)^m` of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTerm {
    pub position: usize,
    pub twist: Multidegree,
    pub multiplicity: u64,
}

impl ComplexTerm {
    pub fn bundle(&self, space: &Space) -> Bundle {
        Bundle::new(
            space.clone(),
            [(Atom::line(&self.twist), self.multiplicity)],
        )
        .expect("twist arity matches the space")
    }
}

impl fmt::Display for ComplexTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.twist)?;
        if self.multiplicity != 1 {
            write!(f, "^{}", self.multiplicity)?;
        }
        Ok(())
    }
}

/// Terms `(twist, multiplicity)` of the resolution of `slot`.
fn slot_resolution(space: &Space, slot: usize) -> Vec<(Multidegree, u64)> {
    let dims = space.dims();
    let n = dims[slot] as i64;
    (0..=n + 1)
        .map(|c| {
            let twist = dims
                .iter()
                .enumerate()
                .map(|(l, &nl)| match l.cmp(&slot) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => -n - 1 + c,
                    std::cmp::Ordering::Greater => -(nl as i64) - 1,
                })
                .collect();
            let m = u64::try_from(binomial(n + 1, n + 1 - c)).expect("binomial row fits in u64");
            (Multidegree(twist), m)
        })
        .collect()
}

fn splice(space: &Space, slots: std::ops::Range<usize>) -> Vec<(Multidegree, u64)> {
    let mut out: Vec<(Multidegree, u64)> = Vec::new();
    for slot in slots {
        let terms = slot_resolution(space, slot);
        if out.is_empty() {
            out = terms;
        } else {
            let joint = out.pop().expect("nonempty");
            debug_assert_eq!(joint, terms[0]);
            out.extend(terms.into_iter().skip(1));
        }
    }
    out
}

/// The terms of a Koszul complex, in order.
pub fn koszul_terms(space: &Space, variant: KoszulVariant) -> Vec<ComplexTerm> {
    let s = space.factors();
    let raw = match variant {
        KoszulVariant::FirstSlot => slot_resolution(space, 0),
        KoszulVariant::RemainingSlots => splice(space, 1..s),
        KoszulVariant::Full => splice(space, 0..s),
    };
    raw.into_iter()
        .enumerate()
        .map(|(position, (twist, multiplicity))| ComplexTerm {
            position,
            twist,
            multiplicity,
        })
        .collect()
}

/// `sum (-1)^position chi(term)`, which vanishes for an exact complex.
pub fn alternating_chi(space: &Space, variant: KoszulVariant) -> BigInt {
    koszul_terms(space, variant)
        .iter()
        .map(|term| {
            let chi = euler_char(&term.bundle(space));
            if term.position % 2 == 0 {
                chi
            } else {
                -chi
            }
        })
        .sum()
}

pub fn verify_chi_zero(space: &Space, variant: KoszulVariant) -> bool {
    alternating_chi(space, variant).is_zero()
}

/// One dimension equality `h^lhs_degree(O(lhs_twist)) = h^rhs_degree(O(rhs_twist))`,
/// both sides expected to be 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionIdentity {
    pub label: String,
    pub lhs_degree: usize,
    pub lhs_twist: Multidegree,
    pub lhs: BigUint,
    pub rhs_degree: usize,
    pub rhs_twist: Multidegree,
    pub rhs: BigUint,
}

impl DimensionIdentity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.lhs.is_one()
    }
}

impl fmt::Display for DimensionIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: h^{}(O{}) = {}, h^{}(O{}) = {}",
            self.label,
            self.lhs_degree,
            self.lhs_twist,
            self.lhs,
            self.rhs_degree,
            self.rhs_twist,
            self.rhs
        )
    }
}

fn h(space: &Space, twist: &Multidegree, q: usize) -> BigUint {
    atom_cohomology(space, &Atom::line(twist))
        .expect("twist arity matches the space")
        .get(q)
}

/// The cohomology isomorphisms read off from the Koszul complexes, checked as
/// dimension equalities (each side must be 1):
///
/// 1. `h^{n_s}(O(0,...,0,w_s)) = h^d(O(w_1,...,w_s))`
/// 2. `h^{n_j}(O(w_j e_j)) = h^d(O(w_1,...,w_s))` for every `j`
/// 3. `h^0(O) = h^{n_s}(O(0,...,0,w_s))`
/// 4. `h^0(O) = h^{n_j}(O(w_j e_j))` for every `j`
pub fn verify_isomorphisms(space: &Space) -> Vec<DimensionIdentity> {
    let s = space.factors();
    let d = space.dim();
    let dims = space.dims();
    let canonical = space.canonical();
    let zero = Multidegree::zero(s);
    let single = |j: usize| {
        let mut v = vec![0; s];
        v[j] = -(dims[j] as i64) - 1;
        Multidegree(v)
    };
    let identity =
        |label: String, lq: usize, lt: Multidegree, rq: usize, rt: Multidegree| DimensionIdentity {
            label,
            lhs: h(space, &lt, lq),
            lhs_degree: lq,
            lhs_twist: lt,
            rhs: h(space, &rt, rq),
            rhs_degree: rq,
            rhs_twist: rt,
        };
    let last = s - 1;
    let mut out = vec![identity(
        "last-slot top = canonical top".into(),
        dims[last],
        single(last),
        d,
        canonical.clone(),
    )];
    for (j, &n) in dims.iter().enumerate() {
        out.push(identity(
            format!("slot {} top = canonical top", j + 1),
            n,
            single(j),
            d,
            canonical.clone(),
        ));
    }
    out.push(identity(
        "h^0(O) = last-slot top".into(),
        0,
        zero.clone(),
        dims[last],
        single(last),
    ));
    for (j, &n) in dims.iter().enumerate() {
        out.push(identity(
            format!("h^0(O) = slot {} top", j + 1),
            0,
            zero.clone(),
            n,
            single(j),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(d: &[usize]) -> Space {
        Space::new(d.to_vec()).unwrap()
    }

    fn shape(terms: &[ComplexTerm]) -> Vec<(Vec<i64>, u64)> {
        terms
            .iter()
            .map(|t| (t.twist.0.clone(), t.multiplicity))
            .collect()
    }

    #[test]
    fn first_slot_terms() {
        let t = koszul_terms(&space(&[1, 2]), KoszulVariant::FirstSlot);
        assert_eq!(
            shape(&t),
            vec![(vec![-2, -3], 1), (vec![-1, -3], 2), (vec![0, -3], 1)]
        );
        let t = koszul_terms(&space(&[1, 1]), KoszulVariant::FirstSlot);
        assert_eq!(
            t.iter().map(|t| t.multiplicity).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
    }

    #[test]
    fn remaining_slots_end_at_structure_sheaf() {
        let t = koszul_terms(&space(&[1, 2]), KoszulVariant::RemainingSlots);
        assert_eq!(
            shape(&t),
            vec![
                (vec![0, -3], 1),
                (vec![0, -2], 3),
                (vec![0, -1], 3),
                (vec![0, 0], 1)
            ]
        );
        assert!(koszul_terms(&space(&[3]), KoszulVariant::RemainingSlots).is_empty());
    }

    #[test]
    fn full_complex_splices_without_repeats() {
        let x = space(&[1, 2]);
        let t = koszul_terms(&x, KoszulVariant::Full);
        assert_eq!(t.len(), 3 + 4 - 1 - 1);
        assert_eq!(t.first().unwrap().twist, x.canonical());
        assert_eq!(t.last().unwrap().twist, Multidegree::zero(2));
        assert!(t.iter().enumerate().all(|(i, term)| term.position == i));
    }

    #[test]
    fn chi_vanishes() {
        for dims in [&[1, 2][..], &[1, 1], &[2, 2], &[3], &[1, 2, 3]] {
            let x = space(dims);
            for v in KoszulVariant::ALL {
                assert!(verify_chi_zero(&x, v), "{dims:?} {v:?}");
            }
        }
    }

    #[test]
    fn isomorphisms_hold() {
        let x = space(&[1, 2]);
        let ids = verify_isomorphisms(&x);
        assert!(ids.iter().all(DimensionIdentity::holds));
        assert_eq!(ids.len(), 2 + 2 * x.factors());
        assert_eq!(ids[0].lhs_twist, Multidegree(vec![0, -3]));
        assert_eq!(ids[0].rhs_twist, Multidegree(vec![-2, -3]));
    }
}
