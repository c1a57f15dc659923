//! Bipartitions, standard bitableaux, Young subgroup elements, and the
//! decorated coset representatives used by the walled Brauer bases.

mod partition;
mod tableau;
mod groupalg;
mod coset;

pub use partition::{enumerate_bipartitions, enumerate_partitions, dominance_leq, Bipartition, Partition};
pub use tableau::{standard_tableaux, t_row, t_col, tableau_perm, w_a_perm, w_lambda, BiTableau};
pub use groupalg::{young_symmetrizer, young_antisymmetrizer, GroupAlgebraElement};
pub use coset::{coset_reps, CosetDatum, CosetFlavor};

use crate::rat::Rat;

/// True iff the bipartition is Kleshchev with respect to (u1, u2): when
/// u1 - u2 is a nonnegative integer e, this demands
/// lambda^(1)_{e+i} <= lambda^(2)_i for all i >= 1; otherwise every
/// bipartition qualifies.
pub fn kleshchev(lambda: &Bipartition, u1: &Rat, u2: &Rat) -> bool {
    let d = u1 - u2;
    let e = match crate::rat::rat_as_i64(&d) {
        Some(v) if v >= 0 => v as usize,
        _ => return true,
    };
    let l2 = &lambda.second;
    for i in 1.. {
        let a = lambda.first.part(e + i);
        let b = l2.part(i);
        if a == 0 {
            break;
        }
        if a > b {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn kleshchev_examples() {
        // u1 - u2 = 0: ((2),(1)) fails since 2 > 1, ((1),(1)) passes.
        let l = Bipartition::new(vec![2], vec![1]);
        assert!(!kleshchev(&l, &rat(3), &rat(3)));
        let l = Bipartition::new(vec![1], vec![1]);
        assert!(kleshchev(&l, &rat(3), &rat(3)));
        // u1 - u2 = 1: ((2),(1)): lambda1_{1+1} = 0 <= 1, ok.
        let l = Bipartition::new(vec![2], vec![1]);
        assert!(kleshchev(&l, &rat(4), &rat(3)));
        // non-integral difference: everything passes.
        let l = Bipartition::new(vec![5, 5], vec![]);
        assert!(kleshchev(&l, &crate::rat::ratq(1, 2), &rat(0)));
        // negative integral difference: everything passes.
        assert!(kleshchev(&l, &rat(0), &rat(2)));
    }
}
