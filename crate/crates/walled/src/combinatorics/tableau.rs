use super::partition::Bipartition;
use crate::perm::Perm;
use serde::{Deserialize, Serialize};

/// A filling of the Young diagram of a bipartition by 1..n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BiTableau {
    pub shape: Bipartition,
    pub rows1: Vec<Vec<usize>>,
    pub rows2: Vec<Vec<usize>>,
}

impl std::fmt::Debug for BiTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?},{:?})", self.rows1, self.rows2)
    }
}

impl BiTableau {
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Row reading word: rows of the first component, then the second.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows1.iter().chain(self.rows2.iter()).flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        for rows in [&self.rows1, &self.rows2] {
            for (ri, row) in rows.iter().enumerate() {
                for (ci, &v) in row.iter().enumerate() {
                    if ci + 1 < row.len() && row[ci + 1] <= v {
                        return false;
                    }
                    if ri + 1 < rows.len() && rows[ri + 1].len() > ci && rows[ri + 1][ci] <= v {
                        return false;
                    }
                }
            }
        }
        let mut all: Vec<usize> = self.reading_word();
        all.sort_unstable();
        all == (1..=self.size()).collect::<Vec<_>>()
    }

    /// Right action of a permutation on the entries.
    pub fn act(&self, w: &Perm) -> BiTableau {
        let map = |rows: &Vec<Vec<usize>>| {
            rows.iter()
                .map(|row| row.iter().map(|&v| w.apply(v)).collect())
                .collect()
        };
        BiTableau { shape: self.shape.clone(), rows1: map(&self.rows1), rows2: map(&self.rows2) }
    }
}

/// The row filling t^lambda: 1..n along the rows of the first component,
/// then the second.
pub fn t_row(shape: &Bipartition) -> BiTableau {
    let mut next = 1;
    let mut fill = |parts: &[usize]| -> Vec<Vec<usize>> {
        parts
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect()
    };
    let rows1 = fill(shape.first.parts());
    let rows2 = fill(shape.second.parts());
    BiTableau { shape: shape.clone(), rows1, rows2 }
}

/// The column filling t_lambda: 1..n down the columns of the second
/// component first, then down the columns of the first.
pub fn t_col(shape: &Bipartition) -> BiTableau {
    let mut next = 1;
    let mut fill = |parts: &[usize]| -> Vec<Vec<usize>> {
        let mut rows: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
        let cols = parts.first().copied().unwrap_or(0);
        for c in 0..cols {
            for row in rows.iter_mut() {
                if c < row.len() {
                    row[c] = next;
                    next += 1;
                }
            }
        }
        rows
    };
    let rows2 = fill(shape.second.parts());
    let rows1 = fill(shape.first.parts());
    BiTableau { shape: shape.clone(), rows1, rows2 }
}

/// All standard bitableaux of the given shape; the first element is
/// t^lambda and the rest follow in lexicographic reading-word order.
pub fn standard_tableaux(shape: &Bipartition) -> Vec<BiTableau> {
    let n = shape.size();
    let mut out = Vec::new();
    let mut cur = BiTableau {
        shape: shape.clone(),
        rows1: shape.first.parts().iter().map(|_| Vec::new()).collect(),
        rows2: shape.second.parts().iter().map(|_| Vec::new()).collect(),
    };
    fn rec(shape: &Bipartition, e: usize, n: usize, cur: &mut BiTableau, out: &mut Vec<BiTableau>) {
        if e > n {
            out.push(cur.clone());
            return;
        }
        for comp in 0..2 {
            let parts = if comp == 0 { shape.first.parts() } else { shape.second.parts() };
            for r in 0..parts.len() {
                let filled = if comp == 0 { cur.rows1[r].len() } else { cur.rows2[r].len() };
                if filled >= parts[r] {
                    continue;
                }
                let above_ok = if r == 0 {
                    true
                } else {
                    let prev = if comp == 0 { cur.rows1[r - 1].len() } else { cur.rows2[r - 1].len() };
                    prev > filled
                };
                if !above_ok {
                    continue;
                }
                if comp == 0 {
                    cur.rows1[r].push(e);
                } else {
                    cur.rows2[r].push(e);
                }
                rec(shape, e + 1, n, cur, out);
                if comp == 0 {
                    cur.rows1[r].pop();
                } else {
                    cur.rows2[r].pop();
                }
            }
        }
    }
    rec(shape, 1, n, &mut cur, &mut out);
    out.sort_by_key(|t| t.reading_word());
    debug_assert!(out.iter().all(|t| t.is_standard()));
    debug_assert_eq!(out[0], t_row(shape));
    out
}

/// The permutation d(t) with t^lambda . d(t) = t.
pub fn tableau_perm(t: &BiTableau) -> Perm {
    let base = t_row(&t.shape);
    let n = t.size();
    let mut img = vec![0usize; n];
    for (a, b) in base.reading_word().into_iter().zip(t.reading_word()) {
        img[a - 1] = b;
    }
    Perm::from_images(img)
}

/// w_lambda = d(t_lambda).
pub fn w_lambda(shape: &Bipartition) -> Perm {
    tableau_perm(&t_col(shape))
}

/// The block rotation w_a in S_r: i -> r-a+i for i <= a, a+j -> j.
pub fn w_a_perm(r: usize, a: usize) -> Perm {
    assert!(a <= r);
    let mut img = vec![0usize; r];
    for i in 1..=a {
        img[i - 1] = r - a + i;
    }
    for j in 1..=r - a {
        img[a + j - 1] = j;
    }
    Perm::from_images(img)
}
