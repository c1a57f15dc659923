use crate::perm::Perm;
use crate::rat::{rat, Rat};
use num::Zero;
use std::collections::BTreeMap;

/// An element of the rational group algebra of S_n.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    pub degree: usize,
    pub terms: BTreeMap<Perm, Rat>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement { degree, terms: BTreeMap::new() }
    }

    pub fn one(degree: usize) -> Self {
        Self::from_perm(Perm::identity(degree))
    }

    pub fn from_perm(w: Perm) -> Self {
        let degree = w.degree();
        let mut terms = BTreeMap::new();
        terms.insert(w, rat(1));
        GroupAlgebraElement { degree, terms }
    }

    pub fn add_term(&mut self, w: Perm, c: Rat) {
        assert_eq!(w.degree(), self.degree);
        let e = self.terms.entry(w).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            let dead: Vec<Perm> = self
                .terms
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree);
        for (v, a) in &self.terms {
            for (w, b) in &other.terms {
                out.add_term(v.then(w), a * b);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Enumerates the Young subgroup of the composition placed at the given
/// 1-based offset inside S_n.
fn young_subgroup(composition: &[usize], offset: usize, n: usize) -> Vec<Perm> {
    let mut gens: Vec<Vec<Perm>> = Vec::new();
    let mut pos = offset;
    for &part in composition {
        if part > 0 {
            gens.push(Perm::all(part).into_iter().map(|w| w.embed(n, pos)).collect());
            pos += part;
        }
    }
    assert!(pos <= n);
    let mut out = vec![Perm::identity(n)];
    for block in gens {
        let mut next = Vec::with_capacity(out.len() * block.len());
        for w in &out {
            for b in &block {
                next.push(w.then(b));
            }
        }
        out = next;
    }
    out
}

/// x = sum of the Young subgroup of the composition, embedded at offset.
pub fn young_symmetrizer(composition: &[usize], offset: usize, n: usize) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(n);
    for w in young_subgroup(composition, offset, n) {
        out.add_term(w, rat(1));
    }
    out
}

/// y = signed sum of the Young subgroup of the composition, embedded at
/// offset.
pub fn young_antisymmetrizer(composition: &[usize], offset: usize, n: usize) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero(n);
    for w in young_subgroup(composition, offset, n) {
        let s = rat(w.sign());
        out.add_term(w, s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetrizer_sizes() {
        assert_eq!(young_symmetrizer(&[2, 1], 0, 3).terms.len(), 2);
        assert_eq!(young_symmetrizer(&[3], 0, 3).terms.len(), 6);
        assert_eq!(young_symmetrizer(&[2], 1, 3).terms.len(), 2);
    }

    #[test]
    fn antisymmetrizer_absorbs_sign() {
        let y = young_antisymmetrizer(&[3], 0, 3);
        let s = GroupAlgebraElement::from_perm(Perm::s(3, 1));
        // s1 * y = -y.
        assert_eq!(s.mul(&y), y.scale(&rat(-1)));
        // y * y = 6 y.
        assert_eq!(y.mul(&y), y.scale(&rat(6)));
    }

    #[test]
    fn x_y_commute_across_blocks() {
        let x = young_symmetrizer(&[2], 0, 4);
        let y = young_antisymmetrizer(&[2], 2, 4);
        assert_eq!(x.mul(&y), y.mul(&x));
    }
}
