//! Decomposable sheaves: per-factor sheaves, their box products, and formal
//! direct sums of those.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::binom::binomial;
use crate::error::{check_arity, Error, Result};
use crate::space::{Multidegree, Space};

/// A sheaf on a single factor `P^n`: a line bundle `O(a)` or a twisted
/// bundle of differentials `Omega^p(t)`.
///
/// The factor dimension is not stored; it is that of the slot the sheaf sits
/// in. Normalized values satisfy `1 <= p <= n - 1` for `Diff`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorSheaf {
    Line(i64),
    Diff { p: usize, t: i64 },
}

impl FactorSheaf {
    /// `Omega^p(t)` on `P^n`, rewritten as a line bundle when `p` is `0` or `n`.
    pub fn diff(n: usize, p: usize, t: i64) -> Result<Self> {
        FactorSheaf::Diff { p, t }.normalized(n)
    }

    pub fn normalized(self, n: usize) -> Result<Self> {
        match self {
            FactorSheaf::Line(_) => Ok(self),
            FactorSheaf::Diff { p, .. } if p > n => Err(Error::Domain(format!(
                "exterior power {p} exceeds factor dimension {n}"
            ))),
            FactorSheaf::Diff { p: 0, t } => Ok(FactorSheaf::Line(t)),
            // Omega^n = O(-n-1)
            FactorSheaf::Diff { p, t } if p == n => Ok(FactorSheaf::Line(t - n as i64 - 1)),
            other => Ok(other),
        }
    }

    pub fn is_normalized(&self, n: usize) -> bool {
        match *self {
            FactorSheaf::Line(_) => true,
            FactorSheaf::Diff { p, .. } => 1 <= p && p < n,
        }
    }

    pub fn twisted(self, by: i64) -> Self {
        match self {
            FactorSheaf::Line(a) => FactorSheaf::Line(a + by),
            FactorSheaf::Diff { p, t } => FactorSheaf::Diff { p, t: t + by },
        }
    }

    /// `(Omega^p(t))^v = Omega^{n-p}(n+1-t)`.
    pub fn dual(self, n: usize) -> Self {
        match self {
            FactorSheaf::Line(a) => FactorSheaf::Line(-a),
            FactorSheaf::Diff { p, t } => FactorSheaf::Diff {
                p: n - p,
                t: n as i64 + 1 - t,
            },
        }
    }

    pub fn rank(&self, n: usize) -> BigUint {
        match *self {
            FactorSheaf::Line(_) => BigUint::one(),
            FactorSheaf::Diff { p, .. } => binomial(n as i64, p as i64),
        }
    }

    /// The twist parameter, used to size search windows.
    pub fn twist(&self) -> i64 {
        match *self {
            FactorSheaf::Line(a) => a,
            FactorSheaf::Diff { t, .. } => t,
        }
    }
}

/// A box product `F_1 [x] ... [x] F_s`, one factor sheaf per slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom(Vec<FactorSheaf>);

impl Atom {
    /// Validates arity against `space` and normalizes every factor.
    pub fn new(space: &Space, factors: Vec<FactorSheaf>) -> Result<Self> {
        check_arity(space.factors(), factors.len())?;
        let factors = factors
            .into_iter()
            .zip(space.dims())
            .map(|(f, &n)| f.normalized(n))
            .collect::<Result<_>>()?;
        Ok(Self(factors))
    }

    /// The line bundle `O(a_1, ..., a_s)`.
    pub fn line(a: &Multidegree) -> Self {
        Self(a.as_slice().iter().map(|&a| FactorSheaf::Line(a)).collect())
    }

    pub fn factors(&self) -> &[FactorSheaf] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// The twists if every factor is a line bundle.
    pub fn as_line(&self) -> Option<Multidegree> {
        self.0
            .iter()
            .map(|f| match f {
                FactorSheaf::Line(a) => Some(*a),
                FactorSheaf::Diff { .. } => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Multidegree)
    }

    pub fn twisted(&self, k: &Multidegree) -> Self {
        Self(
            self.0
                .iter()
                .zip(k.as_slice())
                .map(|(f, &b)| f.twisted(b))
                .collect(),
        )
    }

    pub fn dual(&self, space: &Space) -> Self {
        Self(
            self.0
                .iter()
                .zip(space.dims())
                .map(|(f, &n)| f.dual(n).normalized(n).expect("dual keeps p within 0..=n"))
                .collect(),
        )
    }

    pub fn rank(&self, space: &Space) -> BigUint {
        self.0
            .iter()
            .zip(space.dims())
            .map(|(f, &n)| f.rank(n))
            .product()
    }

    pub(crate) fn max_abs_parameter(&self) -> i64 {
        self.0
            .iter()
            .map(|f| match *f {
                FactorSheaf::Line(a) => a.abs(),
                FactorSheaf::Diff { p, t } => t.abs().max(p as i64),
            })
            .max()
            .unwrap_or(0)
    }
}

/// A formal direct sum `m_1 A_1 + ... + m_r A_r` of atoms over a fixed space.
///
/// Summands are kept sorted by atom with equal atoms merged, so two bundles
/// are equal exactly when they are the same sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bundle {
    space: Space,
    summands: Vec<(Atom, u64)>,
}

impl Bundle {
    pub fn new(space: Space, summands: impl IntoIterator<Item = (Atom, u64)>) -> Result<Self> {
        let mut merged: BTreeMap<Atom, u64> = BTreeMap::new();
        for (atom, m) in summands {
            check_arity(space.factors(), atom.arity())?;
            if let Some((j, _)) = atom
                .factors()
                .iter()
                .zip(space.dims())
                .enumerate()
                .find(|(_, (f, &n))| !f.is_normalized(n))
            {
                return Err(Error::Domain(format!(
                    "factor {} of {atom:?} is not normalized",
                    j + 1
                )));
            }
            if m == 0 {
                return Err(Error::Domain("multiplicities must be positive".into()));
            }
            let slot = merged.entry(atom).or_insert(0);
            *slot = slot
                .checked_add(m)
                .ok_or_else(|| Error::Domain("multiplicity overflow".into()))?;
        }
        Ok(Self {
            space,
            summands: merged.into_iter().collect(),
        })
    }

    pub fn zero(space: Space) -> Self {
        Self {
            space,
            summands: Vec::new(),
        }
    }

    pub fn from_atom(space: Space, atom: Atom) -> Result<Self> {
        Self::new(space, [(atom, 1)])
    }

    /// The line bundle `O(a)` as a one-summand bundle.
    pub fn line(space: Space, a: impl Into<Multidegree>) -> Result<Self> {
        let a = a.into();
        check_arity(space.factors(), a.len())?;
        Self::from_atom(space, Atom::line(&a))
    }

    /// Shorthand for the structure sheaf `O`.
    pub fn structure_sheaf(space: Space) -> Self {
        let s = space.factors();
        Self::line(space, Multidegree::zero(s)).expect("arity matches by construction")
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn summands(&self) -> &[(Atom, u64)] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Direct sum with another bundle on the same space.
    pub fn direct_sum(&self, other: &Bundle) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::Domain(format!(
                "cannot add bundles on {} and {}",
                self.space, other.space
            )));
        }
        Self::new(
            self.space.clone(),
            self.summands.iter().chain(&other.summands).cloned(),
        )
    }

    /// `E (x) O(k)`.
    pub fn twist(&self, k: &Multidegree) -> Result<Self> {
        check_arity(self.space.factors(), k.len())?;
        Ok(self.map_atoms(|a| a.twisted(k)))
    }

    pub fn twist_balanced(&self, t: i64) -> Self {
        self.map_atoms(|a| a.twisted(&Multidegree::balanced(self.space.factors(), t)))
    }

    pub fn dual(&self) -> Self {
        self.map_atoms(|a| a.dual(&self.space))
    }

    pub fn rank(&self) -> BigUint {
        self.summands
            .iter()
            .map(|(a, m)| a.rank(&self.space) * *m)
            .sum()
    }

    /// Largest absolute twist (or exterior power) occurring in any summand.
    pub fn max_abs_parameter(&self) -> i64 {
        self.summands
            .iter()
            .map(|(a, _)| a.max_abs_parameter())
            .max()
            .unwrap_or(0)
    }

    fn map_atoms(&self, f: impl Fn(&Atom) -> Atom) -> Self {
        // Twisting and dualizing are injective on normalized atoms, so
        // re-sorting is all that is needed.
        let mut summands: Vec<_> = self.summands.iter().map(|(a, m)| (f(a), *m)).collect();
        summands.sort();
        Self {
            space: self.space.clone(),
            summands,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(dims: &[usize]) -> Space {
        Space::new(dims.to_vec()).unwrap()
    }

    #[test]
    fn diff_normalizes_extreme_powers() {
        assert_eq!(FactorSheaf::diff(2, 0, 4).unwrap(), FactorSheaf::Line(4));
        assert_eq!(FactorSheaf::diff(2, 2, 3).unwrap(), FactorSheaf::Line(0));
        assert_eq!(
            FactorSheaf::diff(2, 1, 2).unwrap(),
            FactorSheaf::Diff { p: 1, t: 2 }
        );
        assert!(FactorSheaf::diff(2, 3, 0).is_err());
    }

    #[test]
    fn twist_examples() {
        let x = space(&[1, 2]);
        let e = Bundle::line(x.clone(), vec![1, -2]).unwrap();
        assert_eq!(
            e.twist(&Multidegree(vec![2, 2])).unwrap(),
            Bundle::line(x.clone(), vec![3, 0]).unwrap()
        );
        let omega = Atom::new(
            &x,
            vec![FactorSheaf::Line(0), FactorSheaf::Diff { p: 1, t: 2 }],
        )
        .unwrap();
        let e = Bundle::from_atom(x.clone(), omega).unwrap();
        let twisted = e.twist(&Multidegree(vec![0, -1])).unwrap();
        assert_eq!(
            twisted.summands()[0].0.factors()[1],
            FactorSheaf::Diff { p: 1, t: 1 }
        );
        assert_eq!(e.twist(&Multidegree::zero(2)).unwrap(), e);
        assert!(e.twist(&Multidegree(vec![1])).is_err());
    }

    #[test]
    fn dual_examples() {
        let x = space(&[1, 2]);
        assert_eq!(
            Bundle::line(x.clone(), vec![3, -1]).unwrap().dual(),
            Bundle::line(x.clone(), vec![-3, 1]).unwrap()
        );
        let p2 = space(&[2]);
        let omega = Atom::new(&p2, vec![FactorSheaf::Diff { p: 1, t: 2 }]).unwrap();
        assert_eq!(
            omega.dual(&p2).factors(),
            &[FactorSheaf::Diff { p: 1, t: 1 }]
        );
    }

    #[test]
    fn rank_examples() {
        let x = space(&[1, 2]);
        assert_eq!(
            Bundle::line(x.clone(), vec![1, 1]).unwrap().rank(),
            BigUint::from(1u32)
        );
        let omega = Atom::new(
            &x,
            vec![FactorSheaf::Line(0), FactorSheaf::Diff { p: 1, t: 2 }],
        )
        .unwrap();
        assert_eq!(
            Bundle::from_atom(x, omega).unwrap().rank(),
            BigUint::from(2u32)
        );
        let y = space(&[3, 3]);
        let a = Atom::new(
            &y,
            vec![
                FactorSheaf::Diff { p: 1, t: 1 },
                FactorSheaf::Diff { p: 2, t: 1 },
            ],
        )
        .unwrap();
        assert_eq!(Bundle::from_atom(y, a).unwrap().rank(), BigUint::from(9u32));
    }

    #[test]
    fn equal_atoms_merge() {
        let x = space(&[1, 1]);
        let a = Atom::line(&Multidegree(vec![0, 0]));
        let b = Atom::line(&Multidegree(vec![-1, 2]));
        let e = Bundle::new(x, [(a.clone(), 1), (b.clone(), 2), (a.clone(), 3)]).unwrap();
        assert_eq!(e.summands(), &[(b, 2), (a, 4)]);
    }

    #[test]
    fn rejects_bad_summands() {
        let x = space(&[1, 2]);
        assert!(Bundle::new(x.clone(), [(Atom::line(&Multidegree(vec![0])), 1)]).is_err());
        assert!(Bundle::new(x.clone(), [(Atom::line(&Multidegree(vec![0, 0])), 0)]).is_err());
        let raw = Atom(vec![FactorSheaf::Line(0), FactorSheaf::Diff { p: 2, t: 0 }]);
        assert!(Bundle::new(x, [(raw, 1)]).is_err());
    }
}
