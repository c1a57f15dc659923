use crate::perm::Perm;
use itertools::Itertools;
use serde::{Deserialize, Serialize};

/// Cartesian product of the pools; a single empty tuple when there are no
/// pools (f = 0).
fn cartesian(pools: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for pool in pools {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for tuple in &out {
            for &v in pool {
                let mut t = tuple.clone();
                t.push(v);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Which parametrization of the horizontal-edge coset representatives is
/// used: `Head` moves the contraction block at strands 1..f, `Tail` the
/// block at strands r-f+1..r (the one the cellular basis decorates).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum CosetFlavor {
    Head,
    Tail,
}

/// A decorated coset representative: the permutation pair, the index
/// tuples that define it, and the 0/1 decoration supported on the moved
/// top indices.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CosetDatum {
    pub top: Perm,
    pub bar: Perm,
    pub i_indices: Vec<usize>,
    pub j_indices: Vec<usize>,
    /// kappa[i-1] is the exponent decorating x_i; nonzero entries only on
    /// the i_indices.
    pub kappa: Vec<u8>,
}

fn kappa_choices(r: usize, support: &[usize]) -> Vec<Vec<u8>> {
    let f = support.len();
    (0..1usize << f)
        .map(|mask| {
            let mut kappa = vec![0u8; r];
            for (b, &i) in support.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    kappa[i - 1] = 1;
                }
            }
            kappa
        })
        .collect()
}

/// Enumerates the decorated coset representatives for f horizontal edges
/// in B_{k,r,t}. Each undecorated representative appears with all 2^f
/// decorations; the undecorated list is recovered by taking kappa = 0.
pub fn coset_reps(r: usize, t: usize, f: usize, flavor: CosetFlavor) -> Vec<CosetDatum> {
    assert!(f <= r.min(t));
    let mut out = Vec::new();
    match flavor {
        CosetFlavor::Head => {
            // s_{f,i_f} sbar_{f,j_f} ... s_{1,i_1} sbar_{1,j_1},
            // 1 <= i_1 < ... < i_f <= r, k <= j_k <= t.
            for is in (1..=r).combinations(f) {
                let j_ranges: Vec<Vec<usize>> = (1..=f).map(|k| (k..=t).collect()).collect();
                for js in cartesian(&j_ranges) {
                    let mut top = Perm::identity(r);
                    let mut bar = Perm::identity(t);
                    for k in (1..=f).rev() {
                        top = top.then(&Perm::s_chain(r, k, is[k - 1]));
                        bar = bar.then(&Perm::s_chain(t, k, js[k - 1]));
                    }
                    for kappa in kappa_choices(r, &is) {
                        out.push(CosetDatum {
                            top: top.clone(),
                            bar: bar.clone(),
                            i_indices: is.clone(),
                            j_indices: js.clone(),
                            kappa,
                        });
                    }
                }
            }
        }
        CosetFlavor::Tail => {
            // s_{r-f+1,i_{r-f+1}} sbar_{t-f+1,j_{t-f+1}} ... s_{r,i_r} sbar_{t,j_t},
            // r >= i_r > ... > i_{r-f+1} >= 1, max(1, k+f-t) <= j_k <= t.
            for is in (1..=r).combinations(f) {
                // is[l] is i_{r-f+1+l}, increasing with k as required.
                let j_ranges: Vec<Vec<usize>> = (t - f + 1..=t)
                    .map(|k| ((k + f).saturating_sub(t).max(1)..=t).collect())
                    .collect();
                for js in cartesian(&j_ranges) {
                    let mut top = Perm::identity(r);
                    let mut bar = Perm::identity(t);
                    for l in 0..f {
                        top = top.then(&Perm::s_chain(r, r - f + 1 + l, is[l]));
                        bar = bar.then(&Perm::s_chain(t, t - f + 1 + l, js[l]));
                    }
                    for kappa in kappa_choices(r, &is) {
                        out.push(CosetDatum {
                            top: top.clone(),
                            bar: bar.clone(),
                            i_indices: is.clone(),
                            j_indices: js.clone(),
                            kappa,
                        });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(r: usize, t: usize, f: usize, flavor: CosetFlavor) -> Vec<CosetDatum> {
        coset_reps(r, t, f, flavor)
            .into_iter()
            .filter(|c| c.kappa.iter().all(|&x| x == 0))
            .collect()
    }

    #[test]
    fn head_counts_match_diagram_count() {
        // sum over f of |D^f|^2 (r-f)! (t-f)! = (r+t)!.
        for (r, t) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let mut total = 0usize;
            for f in 0..=r.min(t) {
                let c = plain(r, t, f, CosetFlavor::Head).len();
                total += c * c * factorial(r - f) * factorial(t - f);
            }
            assert_eq!(total, factorial(r + t), "r={} t={}", r, t);
        }
    }

    #[test]
    fn tail_counts() {
        assert_eq!(plain(2, 2, 1, CosetFlavor::Tail).len(), 4);
        assert_eq!(coset_reps(2, 2, 1, CosetFlavor::Tail).len(), 8);
        assert_eq!(plain(2, 2, 2, CosetFlavor::Tail).len(), 2);
        assert_eq!(coset_reps(2, 2, 2, CosetFlavor::Tail).len(), 8);
        assert_eq!(coset_reps(1, 1, 0, CosetFlavor::Tail).len(), 1);
    }

    #[test]
    fn head_f_zero_is_identity() {
        let c = coset_reps(3, 2, 0, CosetFlavor::Head);
        assert_eq!(c.len(), 1);
        assert!(c[0].top.is_identity() && c[0].bar.is_identity());
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }
}
