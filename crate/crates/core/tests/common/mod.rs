//! Independent brute-force oracles and enumeration helpers shared by the
//! integration tests. Deliberately slow and duplicative of the engine; none of
//! this ships in the library.

#![allow(dead_code)]

use mpcoh::cohomology::{atom_cohomology, bundle_cohomology};
use mpcoh::{Atom, Bundle, FactorSheaf, Multidegree, Space};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

/// Number of degree-`a` monomials in `n + 1` variables, by direct enumeration.
pub fn h0_monomial(n: usize, a: i64) -> u64 {
    fn count(vars: usize, degree: i64) -> u64 {
        if vars == 1 {
            return 1;
        }
        (0..=degree)
            .map(|first| count(vars - 1, degree - first))
            .sum()
    }
    if a < 0 {
        0
    } else {
        count(n + 1, a)
    }
}

/// Pascal-triangle binomial, independent of the engine's multiplicative one.
pub fn pascal(x: i64, k: i64) -> BigInt {
    if k < 0 || x < k {
        return BigInt::zero();
    }
    let (x, k) = (x as usize, k as usize);
    let mut row = vec![BigInt::one()];
    for _ in 0..x {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[k].clone()
}

/// `chi(P^n, O(a))` from a monomial count and Serre duality:
/// `h^0(O(a)) + (-1)^n h^0(O(-a-n-1))`.
pub fn chi_line_oracle(n: usize, a: i64) -> BigInt {
    let h0 = BigInt::from(h0_monomial(n, a));
    let hn = BigInt::from(h0_monomial(n, -a - n as i64 - 1));
    if n.is_multiple_of(2) {
        h0 + hn
    } else {
        h0 - hn
    }
}

/// `chi(Omega^p(t))` on `P^n` from the Koszul resolution
/// `0 -> Omega^p(t) -> O(t-p)^C(n+1,p) -> ... -> O(t) -> 0`.
pub fn bott_chi_koszul(n: usize, p: usize, t: i64) -> BigInt {
    (0..=p)
        .map(|i| {
            let term =
                pascal(n as i64 + 1, (p - i) as i64) * chi_line_oracle(n, t - p as i64 + i as i64);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `h^0(Omega^p(t))` for `t > p` from the same resolution: all higher
/// cohomology of its terms vanishes there, so global sections are exact.
pub fn h0_differential_oracle(n: usize, p: usize, t: i64) -> BigInt {
    (0..=p)
        .map(|i| {
            let term = pascal(n as i64 + 1, (p - i) as i64)
                * BigInt::from(h0_monomial(n, t - p as i64 + i as i64));
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Radius of a bounded `t` scan.
#[derive(Debug, Clone, Copy)]
pub struct ScanBound(pub i64);

impl ScanBound {
    /// Largest parameter magnitude plus `d + 2`.
    pub fn for_bundle(bundle: &Bundle) -> Self {
        ScanBound(bundle.max_abs_parameter() + bundle.space().dim() as i64 + 2)
    }
}

/// Smallest `t` in `[-B, B]` with `H^i(E(t,...,t) (x) O(k)) != 0`, by direct
/// evaluation of full cohomology tables.
pub fn scan_condition(
    bundle: &Bundle,
    i: usize,
    k: &Multidegree,
    bound: ScanBound,
) -> Option<(i64, BigUint)> {
    let shifted = bundle.twist(k).unwrap();
    (-bound.0..=bound.0).find_map(|t| {
        let h = bundle_cohomology(&shifted.twist_balanced(t)).get(i);
        (!h.is_zero()).then_some((t, h))
    })
}

/// Whether the Kunneth term `q` of the atom twisted by `O(k + (t,...,t))` is
/// nonzero, evaluating each factor's full table.
pub fn term_nonzero(space: &Space, atom: &Atom, q: &[usize], k: &Multidegree, t: i64) -> bool {
    atom.factors()
        .iter()
        .zip(space.dims())
        .zip(q)
        .zip(k.as_slice())
        .all(|(((f, &n), &qj), &kj)| {
            let single = Space::new(vec![n]).unwrap();
            let factor = Atom::new(&single, vec![f.twisted(kj + t)]).unwrap();
            !atom_cohomology(&single, &factor).unwrap().get(qj).is_zero()
        })
}

/// All spaces with `s <= max_s` factors of dimension `<= max_n`.
pub fn spaces(max_s: usize, max_n: usize) -> Vec<Space> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_s {
        frontier = frontier
            .into_iter()
            .flat_map(|p| {
                (1..=max_n).map(move |n| {
                    let mut v = p.clone();
                    v.push(n);
                    v
                })
            })
            .collect();
        out.extend(frontier.iter().map(|d| Space::new(d.clone()).unwrap()));
    }
    out
}

/// Factor sheaves on `P^n` with parameters in `[-r, r]`, normalized.
pub fn factor_universe(n: usize, r: i64) -> Vec<FactorSheaf> {
    let mut out: Vec<FactorSheaf> = (-r..=r).map(FactorSheaf::Line).collect();
    for p in 1..n {
        out.extend((-r..=r).map(|t| FactorSheaf::Diff { p, t }));
    }
    out
}

/// Every atom on `space` built from [`factor_universe`].
pub fn atom_universe(space: &Space, r: i64) -> Vec<Atom> {
    let mut out: Vec<Vec<FactorSheaf>> = vec![vec![]];
    for &n in space.dims() {
        let options = factor_universe(n, r);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |f| {
                    let mut v = prefix.clone();
                    v.push(*f);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|f| Atom::new(space, f).unwrap())
        .collect()
}

/// Every line-bundle twist `a` on `space` with `|a_j| <= r`.
pub fn line_universe(space: &Space, r: i64) -> Vec<Multidegree> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..space.factors() {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-r..=r).map(move |a| {
                    let mut v = p.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Multidegree).collect()
}

/// A random normalized atom with parameters in `[-r, r]`.
pub fn random_atom(rng: &mut impl Rng, space: &Space, r: i64) -> Atom {
    let factors = space
        .dims()
        .iter()
        .map(|&n| {
            let p = rng.gen_range(0..=n);
            FactorSheaf::diff(n, p, rng.gen_range(-r..=r)).unwrap()
        })
        .collect();
    Atom::new(space, factors).unwrap()
}

pub fn random_space(rng: &mut impl Rng, max_s: usize, max_n: usize) -> Space {
    let s = rng.gen_range(1..=max_s);
    Space::new((0..s).map(|_| rng.gen_range(1..=max_n)).collect()).unwrap()
}

/// Half-width of the `t` window covered by [`NonzeroMask`].
pub const MASK_RADIUS: i64 = 31;

/// The set of `t` in `[-MASK_RADIUS, MASK_RADIUS]` at which something is
/// nonzero, as a bitset with bit `t + MASK_RADIUS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonzeroMask(pub u64);

impl NonzeroMask {
    pub const FULL: NonzeroMask = NonzeroMask((1u64 << (2 * MASK_RADIUS + 1)) - 1);

    /// Scans the single-factor table of `f(t)` on `P^n` in degree `q`.
    pub fn of_factor(n: usize, f: FactorSheaf, q: usize) -> Self {
        let single = Space::new(vec![n]).unwrap();
        let mut bits = 0u64;
        for t in -MASK_RADIUS..=MASK_RADIUS {
            let atom = Atom::new(&single, vec![f.twisted(t)]).unwrap();
            if !atom_cohomology(&single, &atom).unwrap().get(q).is_zero() {
                bits |= 1 << (t + MASK_RADIUS);
            }
        }
        NonzeroMask(bits)
    }

    pub fn and(self, other: NonzeroMask) -> Self {
        NonzeroMask(self.0 & other.0)
    }

    pub fn contains(self, t: i64) -> bool {
        (-MASK_RADIUS..=MASK_RADIUS).contains(&t) && self.0 >> (t + MASK_RADIUS) & 1 == 1
    }

    pub fn min(self) -> Option<i64> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as i64 - MASK_RADIUS)
    }

    /// Restriction to `[lo, hi]`.
    pub fn clip(self, lo: i64, hi: i64) -> Self {
        let mut out = self.0;
        for t in -MASK_RADIUS..=MASK_RADIUS {
            if t < lo || t > hi {
                out &= !(1 << (t + MASK_RADIUS));
            }
        }
        NonzeroMask(out)
    }
}

/// Per-slot factor options with their nonvanishing masks, indexed
/// `[option][q]`.
pub struct SlotTable {
    pub n: usize,
    pub options: Vec<FactorSheaf>,
    pub masks: Vec<Vec<NonzeroMask>>,
}

impl SlotTable {
    pub fn new(n: usize, r: i64) -> Self {
        let options = factor_universe(n, r);
        let masks = options
            .iter()
            .map(|&f| (0..=n).map(|q| NonzeroMask::of_factor(n, f, q)).collect())
            .collect();
        SlotTable { n, options, masks }
    }
}

/// Every tuple in `0..=dims[0] x ... x 0..=dims[s-1]`.
pub fn all_degree_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for &n in dims {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=n).map(move |q| {
                    let mut v = p.clone();
                    v.push(q);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every tuple of option indices for the given slot tables.
pub fn option_tuples(tables: &[&SlotTable]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for table in tables {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..table.options.len()).map(move |o| {
                    let mut v = p.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    out
}

/// Spaces with nondecreasing factor dimensions; every space is one of these up
/// to a permutation of factors.
pub fn sorted_spaces(max_s: usize, max_n: usize) -> Vec<Space> {
    spaces(max_s, max_n)
        .into_iter()
        .filter(|x| x.dims().windows(2).all(|w| w[0] <= w[1]))
        .collect()
}
