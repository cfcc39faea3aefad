//! The binary operations `*` on `LR_1` and on `LR_1 x N`.
//!
//! Argument order follows the output convention `Z = Y * X`: the first
//! argument `x` plays the role of the sub-object, `y` the quotient.

use crate::partition::Partition;
use crate::tableau::{ExtTableau, LrTableau};

/// Counter values of the `LR_1` product, `counters[i] = n_i` for
/// `i = 0..=s`, where `s` is the number of loop iterations executed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StarTrace {
    pub counters: Vec<usize>,
}

impl StarTrace {
    /// `n_i`, 0 past the last executed iteration.
    pub fn counter(&self, i: usize) -> Option<usize> {
        self.counters.get(i).copied()
    }

    /// Number of `1` parts appended to `beta` in the final step.
    pub fn appended_ones(&self) -> usize {
        self.counters.last().copied().unwrap_or(0)
    }
}

/// `Y * X` on `LR_1`.
pub fn star_lr1(x: &LrTableau, y: &LrTableau) -> LrTableau {
    star_lr1_traced(x, y).0
}

/// `Y * X` on `LR_1` together with the running counters.
pub fn star_lr1_traced(x: &LrTableau, y: &LrTableau) -> (LrTableau, StarTrace) {
    let (bx, gx) = (x.beta(), x.gamma());
    let (by, gy) = (y.beta(), y.gamma());
    let gamma = gx.sum(gy);

    let common = bx.len().min(by.len());
    let mut beta = Vec::with_capacity(bx.len().max(by.len()) + 1);
    let mut counters = Vec::with_capacity(bx.len().max(by.len()) + 1);
    let mut n = 0usize;
    counters.push(n);

    for i in 0..common {
        beta.push(bx.part(i) + gy.part(i));
        if y.has_entry(i) {
            n += 1;
        }
        counters.push(n);
    }
    if bx.len() > common {
        for i in common..bx.len() {
            beta.push(bx.part(i));
            counters.push(n);
        }
    } else {
        for i in common..by.len() {
            // rows of Y without an entry absorb one pending entry each
            if !y.has_entry(i) && n > 0 {
                beta.push(by.part(i) + 1);
                n -= 1;
            } else {
                beta.push(by.part(i));
            }
            counters.push(n);
        }
    }

    let beta = Partition::new(beta)
        .expect("star product keeps beta non-increasing")
        .union(&Partition::ones(n));
    let z = LrTableau::new(gamma, beta).expect("star product yields a valid tableau");
    (z, StarTrace { counters })
}

/// `(∅, n) * (X, 0)`: places up to `n` new entries into the entry-free rows
/// of `x`, bottom row first. Returns the new tableau and the unused budget.
pub fn fill(x: &LrTableau, n: u64) -> (LrTableau, u64) {
    let mut budget = n;
    let mut gamma: Vec<u32> = x.gamma().parts().to_vec();
    gamma.resize(x.rows(), 0);
    for i in (0..x.rows()).rev() {
        if budget == 0 {
            break;
        }
        if !x.has_entry(i) {
            gamma[i] = x.beta().part(i) - 1;
            budget -= 1;
        }
    }
    let gamma = Partition::new(gamma).expect("fill keeps gamma non-increasing");
    let z = LrTableau::new(gamma, x.beta().clone()).expect("fill yields a valid tableau");
    (z, budget)
}

/// `(Y, n) * (X, m)` on `LR_1 x N`.
pub fn star_ext(xm: &ExtTableau, yn: &ExtTableau) -> ExtTableau {
    let (t, s) = fill(&xm.tab, yn.free);
    ExtTableau {
        tab: star_lr1(&t, &yn.tab),
        free: s + xm.free,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(beta: &[u32], gamma: &[u32]) -> LrTableau {
        LrTableau::new(
            Partition::new(gamma.to_vec()).unwrap(),
            Partition::new(beta.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn ext(beta: &[u32], gamma: &[u32], free: u64) -> ExtTableau {
        ExtTableau::new(tab(beta, gamma), free)
    }

    #[test]
    fn lr1_worked_example() {
        let x = tab(&[5, 4, 3, 3, 1], &[4, 4, 2, 2]);
        let y = tab(&[4, 3, 2, 2, 1, 1], &[3, 3, 2, 1, 1, 1]);
        let (z, trace) = star_lr1_traced(&x, &y);
        assert_eq!(z, tab(&[8, 7, 5, 4, 2, 2, 1], &[7, 7, 4, 3, 1, 1]));
        assert_eq!(trace.counter(5), Some(2));
        assert_eq!(trace.counter(6), Some(1));
        assert_eq!(trace.appended_ones(), 1);
    }

    #[test]
    fn lr1_identity() {
        let x = tab(&[5, 4, 3, 3, 1], &[4, 4, 2, 2]);
        assert_eq!(star_lr1(&x, &LrTableau::empty()), x);
        assert_eq!(star_lr1(&LrTableau::empty(), &x), x);
    }

    #[test]
    fn lr1_single_boxes() {
        let m = tab(&[1], &[1]);
        assert_eq!(star_lr1(&m, &m), tab(&[2], &[2]));
        let p = tab(&[1], &[]);
        // (P_1^1) * (P_0^1): the pending entry goes to a new row
        assert_eq!(star_lr1(&m, &p), tab(&[1, 1], &[1]));
    }

    #[test]
    fn fill_examples() {
        let x = tab(&[5, 4, 3, 3, 1], &[4, 4, 3, 2, 1]);
        assert_eq!(fill(&x, 2), (tab(&[5, 4, 3, 3, 1], &[4, 4, 2, 2]), 0));
        assert_eq!(fill(&x, 5), (tab(&[5, 4, 3, 3, 1], &[4, 3, 2, 2]), 2));
        assert_eq!(fill(&x, 0), (x.clone(), 0));
        assert_eq!(fill(&LrTableau::empty(), 3), (LrTableau::empty(), 3));
    }

    #[test]
    fn ext_examples() {
        let x = ext(&[5, 4, 3, 3, 1], &[4, 4, 3, 2, 1], 4);
        let y = ext(&[4, 3, 2, 2, 1, 1], &[3, 3, 2, 1, 1, 1], 2);
        assert_eq!(
            star_ext(&x, &y),
            ext(&[8, 7, 5, 4, 2, 2, 1], &[7, 7, 4, 3, 1, 1], 4)
        );

        let n = ext(&[], &[], 1);
        let m = ext(&[1], &[1], 0);
        assert_eq!(star_ext(&m, &n), ext(&[1], &[], 0));

        let x = ext(&[3, 1], &[2, 1], 0);
        let unit = ExtTableau::default();
        assert_eq!(star_ext(&x, &unit), x);
        assert_eq!(star_ext(&unit, &x), x);
    }

    #[test]
    fn ext_non_associative() {
        let n = ext(&[], &[], 1);
        let m = ext(&[1], &[1], 0);
        let nm = star_ext(&m, &n);
        let mm = star_ext(&m, &m);
        assert_eq!(mm, ext(&[2], &[2], 0));
        let left = star_ext(&m, &nm);
        let right = star_ext(&mm, &n);
        assert_eq!(left, ext(&[1, 1], &[1], 0));
        assert_eq!(right, ext(&[2], &[1], 0));
        assert_ne!(left, right);
    }
}
