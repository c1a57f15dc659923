//! Permutations of {1, ..., n} with the right action convention:
//! a permutation w sends i to `(i)w`, and (i)(v * w) = ((i)v)w.

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    /// One-line image: img[i-1] = (i)w.
    img: Vec<usize>,
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Perm{:?}", self.img)
    }
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (1..=n).collect() }
    }

    pub fn from_images(img: Vec<usize>) -> Self {
        let n = img.len();
        let mut seen = vec![false; n + 1];
        for &v in &img {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation: {:?}", img);
            seen[v] = true;
        }
        Perm { img }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i - 1]
    }

    /// Adjacent transposition s_i = (i, i+1).
    pub fn s(n: usize, i: usize) -> Self {
        Self::transposition(n, i, i + 1)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= n && b <= n && a != b);
        let mut img: Vec<usize> = (1..=n).collect();
        img.swap(a - 1, b - 1);
        Perm { img }
    }

    /// The chain s_{i,j}: s_i s_{i+1} ... s_{j-1} for i < j, identity for
    /// i = j, and s_{i-1} ... s_j for i > j.
    pub fn s_chain(n: usize, i: usize, j: usize) -> Self {
        let mut w = Perm::identity(n);
        if i < j {
            for l in i..j {
                w = w.then(&Perm::s(n, l));
            }
        } else {
            for l in (j..i).rev() {
                w = w.then(&Perm::s(n, l));
            }
        }
        w
    }

    /// Product self * other in the right action convention:
    /// (i)(self.then(other)) = ((i)self)other.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree());
        Perm {
            img: self.img.iter().map(|&v| other.img[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v - 1] = i + 1;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.img.len()];
        let mut sign = 1i64;
        for start in 0..self.img.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.img[cur] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn len_inversions(&self) -> usize {
        let n = self.img.len();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.img[a] > self.img[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word in adjacent transpositions whose product (left to
    /// right, right action) equals self.
    pub fn word(&self) -> Vec<usize> {
        let mut img = self.img.clone();
        let mut letters = Vec::new();
        // Sort img to the identity with adjacent swaps. Swapping slots p, p+1
        // replaces the current permutation c by s_{p+1} * c, so the swaps
        // j_1, ..., j_k in recorded order give self = s_{j_1} ... s_{j_k}.
        loop {
            let mut done = true;
            for p in 0..img.len().saturating_sub(1) {
                if img[p] > img[p + 1] {
                    img.swap(p, p + 1);
                    letters.push(p + 1);
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        letters
    }

    /// All permutations of degree n in lexicographic image order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut img: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm { img: img.clone() });
            // next lexicographic permutation
            let mut i = n.wrapping_sub(1);
            loop {
                if i == 0 || i == usize::MAX {
                    return out;
                }
                if img[i - 1] < img[i] {
                    break;
                }
                i -= 1;
            }
            let mut j = n - 1;
            while img[j] <= img[i - 1] {
                j -= 1;
            }
            img.swap(i - 1, j);
            img[i..].reverse();
        }
    }

    /// Embeds a permutation of {1..m} into degree n at 1-based offset + 1:
    /// letters offset+1 .. offset+m are permuted, the rest fixed.
    pub fn embed(&self, n: usize, offset: usize) -> Perm {
        let m = self.degree();
        assert!(offset + m <= n);
        let mut img: Vec<usize> = (1..=n).collect();
        for i in 1..=m {
            img[offset + i - 1] = offset + self.apply(i);
        }
        Perm { img }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        // v = s1, w = s2 in S3: (1)(v*w) = ((1)v)w = (2)w = 3.
        let v = Perm::s(3, 1);
        let w = Perm::s(3, 2);
        let vw = v.then(&w);
        assert_eq!(vw.apply(1), 3);
        assert_eq!(vw.apply(2), 1);
        assert_eq!(vw.apply(3), 2);
    }

    #[test]
    fn inverse_and_sign() {
        for w in Perm::all(4) {
            assert!(w.then(&w.inverse()).is_identity());
            assert_eq!(w.sign(), if w.len_inversions() % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn word_reconstructs() {
        for w in Perm::all(5) {
            let mut u = Perm::identity(5);
            for i in w.word() {
                u = u.then(&Perm::s(5, i));
            }
            assert_eq!(u, w);
            assert_eq!(w.word().len(), w.len_inversions());
        }
    }

    #[test]
    fn chain_examples() {
        // s_{1,3} = s1 s2 sends 1 -> 3 (wait: (1)s1 = 2, (2)s2 = 3).
        let w = Perm::s_chain(3, 1, 3);
        assert_eq!(w.apply(1), 3);
        // s_{3,1} = s2 s1 sends 3 -> 1.
        let w = Perm::s_chain(3, 3, 1);
        assert_eq!(w.apply(3), 1);
        assert!(Perm::s_chain(4, 2, 2).is_identity());
    }

    #[test]
    fn all_has_right_count() {
        assert_eq!(Perm::all(4).len(), 24);
        assert_eq!(Perm::all(1).len(), 1);
        assert_eq!(Perm::all(0).len(), 1);
    }

    #[test]
    fn embed_shifts_letters() {
        let w = Perm::s(2, 1).embed(5, 2);
        assert_eq!(w.apply(3), 4);
        assert_eq!(w.apply(4), 3);
        assert_eq!(w.apply(1), 1);
        assert_eq!(w.apply(5), 5);
    }
}
