use crate::error::{check_arity, Result};
use crate::quantifier::{nonvanishing_witness, TwistConstraint};
use crate::sheaf::Bundle;
use crate::space::{Multidegree, Space};

use super::Verdict;

/// Whether `H^i(E(t,...,t)) = 0` for all `0 < i < d` and all integers `t`.
pub fn is_acm(bundle: &Bundle) -> Result<Verdict> {
    let space = bundle.space();
    let zero = Multidegree::zero(space.factors());
    for i in 1..space.dim() {
        if let Some(w) = nonvanishing_witness(bundle, i, &zero, TwistConstraint::Any)? {
            return Ok(Verdict::from_witness(Some(w)));
        }
    }
    Ok(Verdict::from_witness(None))
}

/// The pairwise closed-form test for a line bundle `O(a)`:
/// `a_i - a_j >= -n_i` for every ordered pair of factors.
///
/// This agrees with [`is_acm`] on two factors. With three or more factors it
/// can reject aCM line bundles, e.g. `O(0,2,1)` on `P^1 x P^3 x P^1`.
pub fn acm_closed_form_line(space: &Space, a: &Multidegree) -> Result<bool> {
    check_arity(space.factors(), a.len())?;
    let (a, n) = (a.as_slice(), space.dims());
    Ok((0..a.len()).all(|i| (0..a.len()).all(|j| a[i] - a[j] >= -(n[i] as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(d: &[usize]) -> Space {
        Space::new(d.to_vec()).unwrap()
    }

    #[test]
    fn acm_examples() {
        let x = space(&[1, 2]);
        assert!(
            is_acm(&Bundle::line(x.clone(), vec![0, 0]).unwrap())
                .unwrap()
                .holds
        );
        assert!(
            is_acm(&Bundle::line(x.clone(), vec![1, 0]).unwrap())
                .unwrap()
                .holds
        );
        let v = is_acm(&Bundle::line(x.clone(), vec![-2, 0]).unwrap()).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!((w.degree, w.t, w.q), (1, 0, vec![1, 0]));
    }

    #[test]
    fn closed_form_examples() {
        assert!(acm_closed_form_line(&space(&[1, 2]), &Multidegree(vec![0, 0])).unwrap());
        assert!(!acm_closed_form_line(&space(&[1, 2]), &Multidegree(vec![-2, 0])).unwrap());
        let x = space(&[2, 3]);
        let a = Multidegree(vec![1, 3]);
        assert!(acm_closed_form_line(&x, &a).unwrap());
        assert!(is_acm(&Bundle::line(x, a).unwrap()).unwrap().holds);
    }

    #[test]
    fn closed_form_is_stricter_on_three_factors() {
        let x = space(&[1, 3, 1]);
        let a = Multidegree(vec![0, 2, 1]);
        assert!(!acm_closed_form_line(&x, &a).unwrap());
        assert!(is_acm(&Bundle::line(x, a).unwrap()).unwrap().holds);
    }
}
