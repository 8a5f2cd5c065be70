use std::fmt;

use crate::error::{Error, Result};

/// A product of projective spaces `P^{n_1} x ... x P^{n_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Space {
    dims: Vec<usize>,
    total: usize,
}

impl Space {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Domain("a space needs at least one factor".into()));
        }
        if let Some(j) = dims.iter().position(|&n| n == 0) {
            return Err(Error::Domain(format!("factor {} has dimension 0", j + 1)));
        }
        let total = dims.iter().sum();
        Ok(Self { dims, total })
    }

    /// Factor dimensions `n_1, ..., n_s`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of factors `s`.
    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    /// Total dimension `d = n_1 + ... + n_s`.
    pub fn dim(&self) -> usize {
        self.total
    }

    pub fn max_factor_dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    /// Multidegree of the canonical bundle, `(-n_1 - 1, ..., -n_s - 1)`.
    pub fn canonical(&self) -> Multidegree {
        Multidegree(self.dims.iter().map(|&n| -(n as i64) - 1).collect())
    }

    /// All `k` with `-n_j <= k_j <= 0`, in lexicographic order.
    pub fn box_degrees(&self) -> Vec<Multidegree> {
        self.box_degrees_with(|n| -(n as i64))
    }

    /// All `k` with `-n_j < k_j <= 0`, in lexicographic order.
    pub fn open_box_degrees(&self) -> Vec<Multidegree> {
        self.box_degrees_with(|n| 1 - n as i64)
    }

    fn box_degrees_with(&self, lower: impl Fn(usize) -> i64) -> Vec<Multidegree> {
        let mut out = vec![Vec::with_capacity(self.factors())];
        for &n in &self.dims {
            let lo = lower(n);
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (lo..=0).map(move |k| {
                        let mut v = prefix.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Multidegree).collect()
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, n) in self.dims.iter().enumerate() {
            if j > 0 {
                f.write_str("x")?;
            }
            write!(f, "P^{n}")?;
        }
        Ok(())
    }
}

/// A multidegree `(k_1, ..., k_s)`, used both for twists and for the shifts
/// in vanishing conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn zero(s: usize) -> Self {
        Self(vec![0; s])
    }

    pub fn balanced(s: usize, t: i64) -> Self {
        Self(vec![t; s])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn shifted(&self, t: i64) -> Self {
        Self(self.0.iter().map(|k| k + t).collect())
    }
}

impl From<Vec<i64>> for Multidegree {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, k) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}
