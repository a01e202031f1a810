//! Decision procedures for lattice identities and structural properties.
//!
//! Every predicate is an exhaustive scan that short-circuits on the first
//! violation. Each `is_*` function has a `*_counterexample` companion
//! returning the violating tuple, which is the useful artifact when a
//! check fails.

use alloc::vec;
use alloc::vec::Vec;

use crate::{ElementId, Error, Lattice};

/// A violating instance of the n-distributivity identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuhnCounterexample {
    pub x: ElementId,
    pub ys: Vec<ElementId>,
}

/// Modularity: `x ≤ z` implies `x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
pub fn is_modular(l: &Lattice) -> bool {
    modularity_counterexample(l).is_none()
}

/// A triple `(x, y, z)` with `x ≤ z` violating the modular law, if any.
pub fn modularity_counterexample(l: &Lattice) -> Option<(ElementId, ElementId, ElementId)> {
    for x in l.elements() {
        for z in l.elements() {
            if !l.leq(x, z) {
                continue;
            }
            for y in l.elements() {
                if l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Huhn n-distributivity: for all `x` and `(n+1)`-tuples `(y_0..y_n)`,
/// `x ∧ ⋁ y_i = ⋁_j (x ∧ ⋁_{i≠j} y_i)`. `n = 1` is ordinary
/// distributivity.
pub fn is_n_distributive(l: &Lattice, n: usize) -> bool {
    n_distributivity_counterexample(l, n).is_none()
}

pub fn n_distributivity_counterexample(l: &Lattice, n: usize) -> Option<HuhnCounterexample> {
    check_n_distributive(l, n, usize::MAX).expect("unlimited budget")
}

/// Budgeted identity scan. The budget counts y-tuples; exceeding it is
/// reported as `Overbudget`, distinct from a definite answer.
pub fn check_n_distributive(
    l: &Lattice,
    n: usize,
    budget: usize,
) -> Result<Option<HuhnCounterexample>, Error> {
    assert!(n >= 1, "n-distributivity needs n >= 1");
    let m = l.element_count();
    // The identity is symmetric in the y's, so nondecreasing tuples suffice.
    let tuples = multisets(m, n + 1);
    if tuples > budget {
        return Err(Error::Overbudget {
            what: "n-distributivity tuples",
            limit: budget,
            actual: tuples,
        });
    }

    let mut ys = vec![0 as ElementId; n + 1];
    loop {
        // prefix[i] = join of ys[..i]; suffix[i] = join of ys[i..].
        let mut prefix = vec![None; n + 2];
        for i in 0..=n {
            prefix[i + 1] = Some(match prefix[i] {
                None => ys[i],
                Some(p) => l.join(p, ys[i]),
            });
        }
        let mut suffix = vec![None; n + 2];
        for i in (0..=n).rev() {
            suffix[i] = Some(match suffix[i + 1] {
                None => ys[i],
                Some(s) => l.join(s, ys[i]),
            });
        }
        let all = prefix[n + 1].unwrap();
        for x in l.elements() {
            let lhs = l.meet(x, all);
            let mut rhs: Option<ElementId> = None;
            for j in 0..=n {
                let others = match (prefix[j], suffix[j + 1]) {
                    (None, None) => unreachable!("n >= 1"),
                    (Some(p), None) => p,
                    (None, Some(s)) => s,
                    (Some(p), Some(s)) => l.join(p, s),
                };
                let term = l.meet(x, others);
                rhs = Some(match rhs {
                    None => term,
                    Some(r) => l.join(r, term),
                });
            }
            if lhs != rhs.unwrap() {
                return Ok(Some(HuhnCounterexample { x, ys }));
            }
        }
        if !next_nondecreasing(&mut ys, m) {
            return Ok(None);
        }
    }
}

/// Number of nondecreasing k-tuples over m elements, saturating.
fn multisets(m: usize, k: usize) -> usize {
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(m + i);
        acc /= i + 1;
    }
    acc
}

fn next_nondecreasing(t: &mut [ElementId], m: usize) -> bool {
    for i in (0..t.len()).rev() {
        if t[i] + 1 < m {
            let v = t[i] + 1;
            for slot in &mut t[i..] {
                *slot = v;
            }
            return true;
        }
    }
    false
}

pub fn is_distributive(l: &Lattice) -> bool {
    is_n_distributive(l, 1)
}

/// Semimodularity: `a ∧ b ≺ a` implies `b ≺ a ∨ b`.
pub fn is_semimodular(l: &Lattice) -> bool {
    semimodularity_counterexample(l).is_none()
}

pub fn semimodularity_counterexample(l: &Lattice) -> Option<(ElementId, ElementId)> {
    for a in l.elements() {
        for b in l.elements() {
            if l.covers_pair(l.meet(a, b), a) && !l.covers_pair(b, l.join(a, b)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// The dual: `a ≺ a ∨ b` implies `a ∧ b ≺ b`.
pub fn is_lower_semimodular(l: &Lattice) -> bool {
    lower_semimodularity_counterexample(l).is_none()
}

pub fn lower_semimodularity_counterexample(l: &Lattice) -> Option<(ElementId, ElementId)> {
    for a in l.elements() {
        for b in l.elements() {
            if l.covers_pair(a, l.join(a, b)) && !l.covers_pair(l.meet(a, b), b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Ranked (graded): all maximal chains of every principal ideal have the
/// same length.
pub fn is_ranked(l: &Lattice) -> bool {
    rankedness_counterexample(l).is_none()
}

/// An element whose principal ideal has maximal chains of two different
/// lengths, reported as `(element, shortest, longest)`.
pub fn rankedness_counterexample(l: &Lattice) -> Option<(ElementId, usize, usize)> {
    let (shortest, longest) = l.chain_length_tables();
    l.elements()
        .find(|&x| shortest[x] != longest[x])
        .map(|x| (x, shortest[x], longest[x]))
}

pub fn is_complemented(l: &Lattice) -> bool {
    complementation_counterexample(l).is_none()
}

/// An element with no complement, if any.
pub fn complementation_counterexample(l: &Lattice) -> Option<ElementId> {
    let (bottom, top) = (l.bottom(), l.top());
    l.elements().find(|&x| {
        !l.elements()
            .any(|y| l.meet(x, y) == bottom && l.join(x, y) == top)
    })
}

pub fn is_boolean(l: &Lattice) -> bool {
    is_complemented(l) && is_distributive(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> Lattice {
        let covers: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
        Lattice::from_covers(k + 1, &covers).unwrap()
    }

    fn b2() -> Lattice {
        Lattice::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn b3() -> Lattice {
        // Subset order on {0,1,2}, element index = bitmask.
        let mut covers = Vec::new();
        for s in 0u32..8 {
            for i in 0..3 {
                if s & (1 << i) == 0 {
                    covers.push((s as usize, (s | 1 << i) as usize));
                }
            }
        }
        Lattice::from_covers(8, &covers).unwrap()
    }

    fn m3() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    fn n5() -> Lattice {
        Lattice::from_covers(5, &[(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn modularity() {
        assert!(is_modular(&b3()));
        assert!(is_modular(&m3()));
        assert!(!is_modular(&n5()));
        let (x, y, z) = modularity_counterexample(&n5()).unwrap();
        let l = n5();
        assert!(l.leq(x, z));
        assert_ne!(l.join(x, l.meet(y, z)), l.meet(l.join(x, y), z));
    }

    #[test]
    fn distributivity() {
        assert!(is_distributive(&b2()));
        assert!(is_distributive(&chain(4)));
        assert!(!is_distributive(&m3()));
        assert!(!is_distributive(&n5()));
    }

    #[test]
    fn huhn_identity_on_the_diamond() {
        assert!(!is_n_distributive(&m3(), 1));
        assert!(is_n_distributive(&m3(), 2));
        let cex = n_distributivity_counterexample(&m3(), 1).unwrap();
        assert_eq!(cex.ys.len(), 2);
    }

    #[test]
    fn overbudget_is_distinct() {
        let err = check_n_distributive(&b3(), 2, 10).unwrap_err();
        assert!(matches!(err, Error::Overbudget { .. }));
        // A definite answer within budget is untouched.
        assert_eq!(check_n_distributive(&b2(), 1, 1000).unwrap(), None);
    }

    #[test]
    fn semimodularity() {
        assert!(is_semimodular(&b3()));
        assert!(is_lower_semimodular(&b3()));
        assert!(is_semimodular(&m3()));
        assert!(is_lower_semimodular(&m3()));
        assert!(!is_semimodular(&n5()) || !is_lower_semimodular(&n5()));
        assert!(semimodularity_counterexample(&n5()).is_some());
    }

    #[test]
    fn rankedness() {
        assert!(is_ranked(&b3()));
        assert!(is_ranked(&chain(5)));
        assert!(!is_ranked(&n5()));
        let (x, s, l) = rankedness_counterexample(&n5()).unwrap();
        assert_eq!((x, s, l), (4, 2, 3));
    }

    #[test]
    fn complements() {
        assert!(is_complemented(&b3()));
        assert!(is_boolean(&b3()));
        assert!(!is_complemented(&chain(3)));
        assert!(is_complemented(&m3()));
        assert!(!is_boolean(&m3()));
        assert_eq!(complementation_counterexample(&chain(3)), Some(1));
    }

    #[test]
    fn boolean_cardinality() {
        let b = b3();
        assert!(is_boolean(&b));
        assert_eq!(b.element_count(), 1 << b.length());
    }

    #[test]
    fn implication_chain() {
        for l in [b2(), b3(), chain(4), m3()] {
            if is_distributive(&l) {
                assert!(is_modular(&l));
            }
            if is_modular(&l) {
                assert!(is_semimodular(&l) && is_lower_semimodular(&l));
            }
        }
    }

    #[test]
    fn huhn_identities_weaken_as_n_grows() {
        for l in [b2(), b3(), m3(), n5(), chain(4)] {
            for n in 1..=2 {
                if is_n_distributive(&l, n) {
                    assert!(is_n_distributive(&l, n + 1));
                }
            }
        }
    }
}
