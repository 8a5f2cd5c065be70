//! Cohomology dimensions of atoms and bundles.
//!
//! Single-factor dimensions come from the line-bundle formula and the Bott
//! formula; an atom's table is their Kunneth convolution over total degree.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::binom::{binomial, binomial_poly};
use crate::error::{check_arity, Error, Result};
use crate::par;
use crate::sheaf::{Atom, Bundle, FactorSheaf};
use crate::space::Space;

/// `h^q(P^n, O(a))`.
pub fn h_line(n: usize, a: i64, q: usize) -> Result<BigUint> {
    if n == 0 || q > n {
        return Err(Error::Domain(format!("degree {q} outside 0..={n}")));
    }
    let ni = n as i64;
    Ok(if q == 0 && a >= 0 {
        binomial(ni + a, ni)
    } else if q == n && a < -ni {
        binomial(-a - 1, ni)
    } else {
        BigUint::zero()
    })
}

/// `h^q(P^n, Omega^p(t))` by the Bott formula.
pub fn h_bott(n: usize, p: usize, t: i64, q: usize) -> Result<BigUint> {
    if n == 0 || p > n || q > n {
        return Err(Error::Domain(format!(
            "need 0 <= p, q <= n, got n={n}, p={p}, q={q}"
        )));
    }
    let (ni, pi) = (n as i64, p as i64);
    Ok(if q == 0 && t > pi {
        binomial(t + ni - pi, t) * binomial(t - 1, pi)
    } else if q == p && t == 0 {
        BigUint::one()
    } else if q == n && t < pi - ni {
        binomial(-t + pi, -t) * binomial(-t - 1, ni - pi)
    } else {
        BigUint::zero()
    })
}

/// `h^q(P^n, f)` for a factor sheaf.
pub fn h_factor(n: usize, f: &FactorSheaf, q: usize) -> Result<BigUint> {
    match *f {
        FactorSheaf::Line(a) => h_line(n, a, q),
        FactorSheaf::Diff { p, t } => h_bott(n, p, t, q),
    }
}

/// Nonzero entries of a factor's cohomology. These sit in degrees `0`, `p`
/// and `n` only.
fn factor_support(n: usize, f: &FactorSheaf) -> Vec<(usize, BigUint)> {
    let degrees: &[usize] = match *f {
        FactorSheaf::Line(_) => &[0, n],
        FactorSheaf::Diff { p, .. } => &[0, p, n],
    };
    degrees
        .iter()
        .filter_map(|&q| {
            let h = h_factor(n, f, q).expect("degrees within 0..=n");
            (!h.is_zero()).then_some((q, h))
        })
        .collect()
}

/// Cohomology dimensions `h^0, ..., h^d` of a sheaf on a space of dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohTable(Vec<BigUint>);

impl CohTable {
    pub fn zero(d: usize) -> Self {
        Self(vec![BigUint::zero(); d + 1])
    }

    /// `h^q`; zero above the top degree.
    pub fn get(&self, q: usize) -> BigUint {
        self.0.get(q).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn top_degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `sum_q (-1)^q h^q`.
    pub fn euler_char(&self) -> BigInt {
        self.0
            .iter()
            .enumerate()
            .map(|(q, h)| {
                let h = BigInt::from(h.clone());
                if q % 2 == 0 {
                    h
                } else {
                    -h
                }
            })
            .sum()
    }

    fn add_scaled(&mut self, other: &CohTable, m: u64) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b * m;
        }
    }
}

impl fmt::Display for CohTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (q, h) in self.0.iter().enumerate() {
            if q > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str(")")
    }
}

/// Kunneth: `h^m(A) = sum over q_1 + ... + q_s = m of prod_j h^{q_j}(F_j)`.
pub fn atom_cohomology(space: &Space, atom: &Atom) -> Result<CohTable> {
    check_arity(space.factors(), atom.arity())?;
    let mut table = vec![BigUint::zero(); space.dim() + 1];
    // Sparse partial convolution over the slots processed so far.
    let mut partial: Vec<(usize, BigUint)> = vec![(0, BigUint::one())];
    for (f, &n) in atom.factors().iter().zip(space.dims()) {
        if !f.is_normalized(n) {
            return Err(Error::Domain(format!("{f:?} is not normalized on P^{n}")));
        }
        let factor = factor_support(n, f);
        let mut next = Vec::with_capacity(partial.len() * factor.len());
        for (q0, h0) in &partial {
            for (q1, h1) in &factor {
                next.push((q0 + q1, h0 * h1));
            }
        }
        partial = next;
        if partial.is_empty() {
            break;
        }
    }
    for (q, h) in partial {
        table[q] += h;
    }
    Ok(CohTable(table))
}

/// Multiplicity-weighted sum of the summands' tables.
pub fn bundle_cohomology(bundle: &Bundle) -> CohTable {
    let space = bundle.space();
    let tables = par::map(bundle.summands(), |(atom, m)| {
        (
            atom_cohomology(space, atom).expect("bundle atoms are validated"),
            *m,
        )
    });
    let mut total = CohTable::zero(space.dim());
    for (t, m) in &tables {
        total.add_scaled(t, *m);
    }
    total
}

pub fn euler_char(bundle: &Bundle) -> BigInt {
    bundle_cohomology(bundle).euler_char()
}

/// `chi(O(a))` on `P^n` as the polynomial `C(n + a, n)`.
pub fn line_euler_poly(n: usize, a: i64) -> BigInt {
    binomial_poly(n as i64 + a, n as u64)
}

/// `chi` of a line-bundle atom from the product of per-factor polynomials;
/// `None` for atoms with a differential factor.
pub fn atom_euler_poly(space: &Space, atom: &Atom) -> Option<BigInt> {
    let a = atom.as_line()?;
    Some(
        a.as_slice()
            .iter()
            .zip(space.dims())
            .map(|(&a, &n)| line_euler_poly(n, a))
            .product(),
    )
}
