//! Cohomological splitting criteria.
//!
//! Each criterion pairs a vanishing condition with a decomposition shape.
//! The two are evaluated independently and the report records whether they
//! agree; agreement is never assumed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::par;
use crate::quantifier::{nonvanishing_witness, TwistConstraint, Witness};
use crate::sheaf::{Atom, Bundle, FactorSheaf};
use crate::space::{Multidegree, Space};

use super::regularity::balanced_regularity;
use super::sort_witnesses;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Sums of balanced line bundles `O(t_i,...,t_i)`.
    Balanced,
    /// Balanced twists of sums of `O` and the unit line bundles `O(e_j)`.
    UnitTwist,
    /// Regularity-zero bundles with a distinguished direct summand.
    Summand,
}

impl Criterion {
    pub const ALL: [Criterion; 3] = [
        Criterion::Balanced,
        Criterion::UnitTwist,
        Criterion::Summand,
    ];

    /// Stable identifier used on the command line and in JSON.
    pub fn id(self) -> &'static str {
        match self {
            Criterion::Balanced => "thm31",
            Criterion::UnitTwist => "thm32",
            Criterion::Summand => "thm33",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Domain(format!("unknown criterion `{s}`")))
    }
}

/// Outcome of the vanishing-condition half of a criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub holds: bool,
    /// Every failing instance, ordered by degree, `k`, then `t`.
    pub witnesses: Vec<Witness>,
    /// Number of `(i, k)` instances checked.
    pub instances: usize,
    /// No admissible instance existed, so the condition holds trivially.
    pub vacuous: bool,
}

/// One `(i, k)` vanishing requirement and the twists it ranges over.
struct Instance {
    degree: usize,
    k: Multidegree,
    twist: TwistConstraint,
}

fn run_instances(bundle: &Bundle, instances: Vec<Instance>) -> ConditionOutcome {
    let found = par::map(&instances, |inst| {
        nonvanishing_witness(bundle, inst.degree, &inst.k, inst.twist)
            .expect("instances are in range")
    });
    let mut witnesses: Vec<Witness> = found.into_iter().flatten().collect();
    sort_witnesses(&mut witnesses);
    ConditionOutcome {
        holds: witnesses.is_empty(),
        witnesses,
        instances: instances.len(),
        vacuous: instances.is_empty(),
    }
}

/// `(i, k)` with `1 <= i <= d-1`, `sum k_j = -i`, `-n_j <= k_j <= 0`, for
/// all balanced twists.
fn balanced_instances(space: &Space, skip: impl Fn(&Multidegree) -> bool) -> Vec<Instance> {
    let d = space.dim() as i64;
    space
        .box_degrees()
        .into_iter()
        .filter(|k| (1..d).contains(&-k.sum()) && !skip(k))
        .map(|k| Instance {
            degree: (-k.sum()) as usize,
            k,
            twist: TwistConstraint::Any,
        })
        .collect()
}

/// `k = -n_j e_j`.
fn is_single_slot_extreme(space: &Space, k: &Multidegree) -> bool {
    let nonzero: Vec<(usize, i64)> = k
        .as_slice()
        .iter()
        .copied()
        .enumerate()
        .filter(|&(_, v)| v != 0)
        .collect();
    matches!(nonzero.as_slice(), [(j, v)] if *v == -(space.dims()[*j] as i64))
}

fn require_nonempty(bundle: &Bundle) -> Result<()> {
    if bundle.is_empty() {
        Err(Error::Domain("criteria need a nonzero bundle".into()))
    } else {
        Ok(())
    }
}

fn balanced_condition(bundle: &Bundle) -> Result<ConditionOutcome> {
    require_nonempty(bundle)?;
    Ok(run_instances(
        bundle,
        balanced_instances(bundle.space(), |_| false),
    ))
}

fn unit_twist_condition(bundle: &Bundle) -> Result<ConditionOutcome> {
    require_nonempty(bundle)?;
    let space = bundle.space();
    Ok(run_instances(
        bundle,
        balanced_instances(space, |k| is_single_slot_extreme(space, k)),
    ))
}

/// The summand criterion's condition at the fixed twist `(-1,...,-1)`:
///
/// * `H^i(E(-1,...,-1) (x) O(k)) = 0` for `1 <= i <= min(r, d) - 1` and
///   `sum k_j >= -i` with `-n_j < k_j <= 0`;
/// * for each slot `j` and `1 <= a <= n_j - 1`, the group in degree
///   `a + sum_{l != j} n_l` of `E(-1,...,-1)` twisted by `-n_l` in the other
///   slots and `-a-1` in slot `j` vanishes.
///
/// Requires regularity exactly 0.
fn summand_condition(bundle: &Bundle) -> Result<ConditionOutcome> {
    require_nonempty(bundle)?;
    let reg = balanced_regularity(bundle)?.reg;
    if reg != Some(0) {
        let shown = reg.map_or_else(|| "none in window".to_string(), |r| r.to_string());
        return Err(Error::Precondition(format!(
            "regularity must be 0, found {shown}"
        )));
    }
    let space = bundle.space();
    let d = space.dim();
    let top = usize::try_from(&bundle.rank()).map_or(d, |r| r.min(d));
    let mut instances = Vec::new();
    for i in 1..top {
        for k in space.open_box_degrees() {
            if k.sum() >= -(i as i64) {
                instances.push(Instance {
                    degree: i,
                    k,
                    twist: TwistConstraint::Fixed(-1),
                });
            }
        }
    }
    let dims = space.dims();
    for (j, &nj) in dims.iter().enumerate() {
        for a in 1..nj {
            let k: Vec<i64> = dims
                .iter()
                .enumerate()
                .map(|(l, &nl)| {
                    if l == j {
                        -(a as i64) - 1
                    } else {
                        -(nl as i64)
                    }
                })
                .collect();
            instances.push(Instance {
                degree: d - nj + a,
                k: Multidegree(k),
                twist: TwistConstraint::Fixed(-1),
            });
        }
    }
    Ok(run_instances(bundle, instances))
}

/// Evaluates the vanishing condition of `criterion`.
pub fn condition(bundle: &Bundle, criterion: Criterion) -> Result<ConditionOutcome> {
    match criterion {
        Criterion::Balanced => balanced_condition(bundle),
        Criterion::UnitTwist => unit_twist_condition(bundle),
        Criterion::Summand => summand_condition(bundle),
    }
}

/// How a summand fits a balanced twist `O(t,...,t)` in the unit-twist shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitClass {
    /// `O(t,...,t)` itself.
    Balanced,
    /// `O(t,...,t) (x) O(e_j)`, slot index from 0.
    Raised(usize),
}

/// The distinguished summand found by the summand criterion's shape test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummandKind {
    /// `O`.
    Trivial,
    /// `O(e_j)`.
    Unit { slot: usize },
    /// `Omega^p(p+1)` in one slot, `O` elsewhere.
    Differential { slot: usize, p: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeCertificate {
    /// The multiset of balanced twists, as `(t, multiplicity)` sorted by `t`.
    Balanced { twists: Vec<(i64, u64)> },
    /// The common twist and the class of each summand, in summand order.
    UnitTwist { t: i64, classes: Vec<UnitClass> },
    Summand {
        atom_index: usize,
        kind: SummandKind,
    },
}

impl fmt::Display for ShapeCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeCertificate::Balanced { twists } => {
                let parts: Vec<String> = twists
                    .iter()
                    .map(|(t, m)| {
                        if *m == 1 {
                            t.to_string()
                        } else {
                            format!("{t} (x{m})")
                        }
                    })
                    .collect();
                write!(f, "balanced twists {{{}}}", parts.join(", "))
            }
            ShapeCertificate::UnitTwist { t, classes } => {
                let parts: Vec<String> = classes
                    .iter()
                    .map(|c| match c {
                        UnitClass::Balanced => "O".to_string(),
                        UnitClass::Raised(j) => format!("O(e_{})", j + 1),
                    })
                    .collect();
                write!(f, "t = {t}; summands {}", parts.join(", "))
            }
            ShapeCertificate::Summand { atom_index, kind } => {
                let kind = match kind {
                    SummandKind::Trivial => "O".to_string(),
                    SummandKind::Unit { slot } => format!("O(e_{})", slot + 1),
                    SummandKind::Differential { slot, p } => {
                        format!("Omega^{p}({}) in slot {}", p + 1, slot + 1)
                    }
                };
                write!(f, "summand #{atom_index} is {kind}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeMatch {
    pub holds: bool,
    pub certificate: Option<ShapeCertificate>,
}

impl ShapeMatch {
    fn from_certificate(certificate: Option<ShapeCertificate>) -> Self {
        Self {
            holds: certificate.is_some(),
            certificate,
        }
    }
}

/// Syntactic test of whether the (normalized) bundle has the decomposition
/// shape named by `criterion`.
pub fn shape_match(bundle: &Bundle, criterion: Criterion) -> ShapeMatch {
    let cert = match criterion {
        Criterion::Balanced => balanced_shape(bundle),
        Criterion::UnitTwist => unit_twist_shape(bundle),
        Criterion::Summand => summand_shape(bundle),
    };
    ShapeMatch::from_certificate(cert)
}

fn balanced_value(atom: &Atom) -> Option<i64> {
    let a = atom.as_line()?;
    let first = *a.as_slice().first()?;
    a.as_slice().iter().all(|&v| v == first).then_some(first)
}

fn balanced_shape(bundle: &Bundle) -> Option<ShapeCertificate> {
    if bundle.is_empty() {
        return None;
    }
    let mut twists = bundle
        .summands()
        .iter()
        .map(|(a, m)| balanced_value(a).map(|t| (t, *m)))
        .collect::<Option<Vec<_>>>()?;
    twists.sort_unstable();
    Some(ShapeCertificate::Balanced { twists })
}

fn unit_class(a: &Multidegree, t: i64) -> Option<UnitClass> {
    let mut raised = None;
    for (j, &v) in a.as_slice().iter().enumerate() {
        match v - t {
            0 => {}
            1 if raised.is_none() => raised = Some(j),
            _ => return None,
        }
    }
    Some(raised.map_or(UnitClass::Balanced, UnitClass::Raised))
}

fn unit_twist_shape(bundle: &Bundle) -> Option<ShapeCertificate> {
    let lines = bundle
        .summands()
        .iter()
        .map(|(a, _)| a.as_line())
        .collect::<Option<Vec<_>>>()?;
    let min = lines
        .iter()
        .flat_map(|a| a.as_slice().iter().copied())
        .min()?;
    // On a single factor O(m) is both O(m) and O(m-1) (x) O(e_1).
    [min, min - 1].into_iter().find_map(|t| {
        let classes = lines
            .iter()
            .map(|a| unit_class(a, t))
            .collect::<Option<Vec<_>>>()?;
        Some(ShapeCertificate::UnitTwist { t, classes })
    })
}

fn summand_kind(atom: &Atom) -> Option<SummandKind> {
    let mut special = None;
    for (j, f) in atom.factors().iter().enumerate() {
        let kind = match *f {
            FactorSheaf::Line(0) => continue,
            FactorSheaf::Line(1) => SummandKind::Unit { slot: j },
            FactorSheaf::Diff { p, t } if t == p as i64 + 1 => {
                SummandKind::Differential { slot: j, p }
            }
            _ => return None,
        };
        if special.replace(kind).is_some() {
            return None;
        }
    }
    Some(special.unwrap_or(SummandKind::Trivial))
}

fn summand_shape(bundle: &Bundle) -> Option<ShapeCertificate> {
    bundle
        .summands()
        .iter()
        .enumerate()
        .find_map(|(atom_index, (a, _))| {
            summand_kind(a).map(|kind| ShapeCertificate::Summand { atom_index, kind })
        })
}

/// Condition and shape of one criterion side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    criterion: Criterion,
    condition: ConditionOutcome,
    shape: ShapeMatch,
    consistent: bool,
}

impl CriterionReport {
    pub fn new(criterion: Criterion, condition: ConditionOutcome, shape: ShapeMatch) -> Self {
        let consistent = condition.holds == shape.holds;
        Self {
            criterion,
            condition,
            shape,
            consistent,
        }
    }

    pub fn criterion(&self) -> Criterion {
        self.criterion
    }

    pub fn condition_holds(&self) -> bool {
        self.condition.holds
    }

    pub fn condition_witnesses(&self) -> &[Witness] {
        &self.condition.witnesses
    }

    pub fn instances(&self) -> usize {
        self.condition.instances
    }

    pub fn vacuous(&self) -> bool {
        self.condition.vacuous
    }

    pub fn shape_holds(&self) -> bool {
        self.shape.holds
    }

    pub fn shape_certificate(&self) -> Option<&ShapeCertificate> {
        self.shape.certificate.as_ref()
    }

    /// Whether the condition and the shape agree.
    pub fn consistent(&self) -> bool {
        self.consistent
    }
}

/// Runs both halves of `criterion` and reports whether they agree.
pub fn verify_criterion(bundle: &Bundle, criterion: Criterion) -> Result<CriterionReport> {
    let condition = condition(bundle, criterion)?;
    Ok(CriterionReport::new(
        criterion,
        condition,
        shape_match(bundle, criterion),
    ))
}
