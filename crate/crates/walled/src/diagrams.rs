//! Walled Brauer diagrams on 2(r+t) vertices and their concatenation.
//!
//! Vertices of the top row carry the labels r, ..., 2, 1, 1bar, ..., tbar
//! from left to right and the bottom row repeats them. Vertical edges
//! join opposite rows on the same side of the wall, horizontal edges join
//! the same row across the wall. Concatenation removes closed circles,
//! each accounting for one factor of the parameter omega_0.

use crate::perm::Perm;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Mutex;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WalledDiagram {
    pub r: usize,
    pub t: usize,
    /// pair[v] is the partner of vertex v. Vertices 0..r+t are the top row
    /// left to right, r+t..2(r+t) the bottom row.
    pair: Vec<usize>,
}

impl std::fmt::Debug for WalledDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D[")?;
        let n = self.r + self.t;
        let mut first = true;
        for v in 0..2 * n {
            if self.pair[v] > v {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}-{}", self.vertex_name(v), self.vertex_name(self.pair[v]))?;
                first = false;
            }
        }
        write!(f, "]")
    }
}

/// Where a strand entering a diagram comes out.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StrandEnd {
    /// Top row, unbarred label.
    TopPlain(usize),
    /// Top row, barred label.
    TopBar(usize),
    /// Bottom row, unbarred label.
    BottomPlain(usize),
    /// Bottom row, barred label.
    BottomBar(usize),
}

impl WalledDiagram {
    fn n(&self) -> usize {
        self.r + self.t
    }

    /// Top-row vertex index of the unbarred label l (1-based).
    pub fn top_plain(&self, l: usize) -> usize {
        assert!(l >= 1 && l <= self.r);
        self.r - l
    }

    /// Top-row vertex index of the barred label l (1-based).
    pub fn top_bar(&self, l: usize) -> usize {
        assert!(l >= 1 && l <= self.t);
        self.r + l - 1
    }

    pub fn bottom_plain(&self, l: usize) -> usize {
        self.n() + self.top_plain(l)
    }

    pub fn bottom_bar(&self, l: usize) -> usize {
        self.n() + self.top_bar(l)
    }

    fn vertex_name(&self, v: usize) -> String {
        let n = self.n();
        let (row, p) = if v < n { ("t", v) } else { ("b", v - n) };
        if p < self.r {
            format!("{}{}", row, self.r - p)
        } else {
            format!("{}{}'", row, p - self.r + 1)
        }
    }

    fn classify(&self, v: usize) -> StrandEnd {
        let n = self.n();
        let (top, p) = if v < n { (true, v) } else { (false, v - n) };
        if p < self.r {
            let l = self.r - p;
            if top {
                StrandEnd::TopPlain(l)
            } else {
                StrandEnd::BottomPlain(l)
            }
        } else {
            let l = p - self.r + 1;
            if top {
                StrandEnd::TopBar(l)
            } else {
                StrandEnd::BottomBar(l)
            }
        }
    }

    fn validate(&self) {
        let n = self.n();
        assert_eq!(self.pair.len(), 2 * n);
        for v in 0..2 * n {
            let w = self.pair[v];
            assert!(w < 2 * n && w != v && self.pair[w] == v, "not a matching");
            let (vt, vp) = (v < n, if v < n { v } else { v - n });
            let (wt, wp) = (w < n, if w < n { w } else { w - n });
            let (vb, wb) = (vp >= self.r, wp >= self.r);
            if vt == wt {
                assert!(vb != wb, "horizontal edge must cross the wall");
            } else {
                assert!(vb == wb, "vertical edge must stay on one side");
            }
        }
    }

    pub fn from_pairs(r: usize, t: usize, pair: Vec<usize>) -> Self {
        let d = WalledDiagram { r, t, pair };
        d.validate();
        d
    }

    pub fn partner(&self, v: usize) -> usize {
        self.pair[v]
    }

    pub fn partner_of(&self, end: StrandEnd) -> StrandEnd {
        let v = match end {
            StrandEnd::TopPlain(l) => self.top_plain(l),
            StrandEnd::TopBar(l) => self.top_bar(l),
            StrandEnd::BottomPlain(l) => self.bottom_plain(l),
            StrandEnd::BottomBar(l) => self.bottom_bar(l),
        };
        self.classify(self.pair[v])
    }

    pub fn identity(r: usize, t: usize) -> Self {
        let n = r + t;
        let mut pair = vec![0; 2 * n];
        for p in 0..n {
            pair[p] = n + p;
            pair[n + p] = p;
        }
        WalledDiagram { r, t, pair }
    }

    /// Diagram of a permutation pair: the unbarred label l on top joins the
    /// bottom label (l)w, barred labels follow wbar.
    pub fn from_perms(r: usize, t: usize, w: &Perm, wbar: &Perm) -> Self {
        assert_eq!(w.degree(), r);
        assert_eq!(wbar.degree(), t);
        let n = r + t;
        let mut pair = vec![usize::MAX; 2 * n];
        let mut join = |a: usize, b: usize| {
            pair[a] = b;
            pair[b] = a;
        };
        let probe = WalledDiagram::identity(r, t);
        for l in 1..=r {
            join(probe.top_plain(l), probe.bottom_plain(w.apply(l)));
        }
        for l in 1..=t {
            join(probe.top_bar(l), probe.bottom_bar(wbar.apply(l)));
        }
        WalledDiagram { r, t, pair }
    }

    pub fn s(r: usize, t: usize, i: usize) -> Self {
        Self::from_perms(r, t, &Perm::s(r, i), &Perm::identity(t))
    }

    pub fn sbar(r: usize, t: usize, j: usize) -> Self {
        Self::from_perms(r, t, &Perm::identity(r), &Perm::s(t, j))
    }

    /// The contraction e_{i,j}: horizontal edges joining labels i and jbar
    /// in both rows, all other strands vertical.
    pub fn e_ij(r: usize, t: usize, i: usize, j: usize) -> Self {
        let mut d = Self::identity(r, t);
        let (a, b) = (d.top_plain(i), d.top_bar(j));
        let n = d.n();
        d.pair[a] = b;
        d.pair[b] = a;
        d.pair[n + a] = n + b;
        d.pair[n + b] = n + a;
        d.validate();
        d
    }

    pub fn e1(r: usize, t: usize) -> Self {
        Self::e_ij(r, t, 1, 1)
    }

    /// Top-bottom mirror image (the diagram of the anti-involution).
    pub fn flip(&self) -> Self {
        let n = self.n();
        let sw = |v: usize| if v < n { v + n } else { v - n };
        let mut pair = vec![0; 2 * n];
        for v in 0..2 * n {
            pair[sw(v)] = sw(self.pair[v]);
        }
        WalledDiagram { r: self.r, t: self.t, pair }
    }

    /// Number of horizontal edges in the top row.
    pub fn horizontal_count(&self) -> usize {
        let n = self.n();
        (0..n).filter(|&v| self.pair[v] < n && self.pair[v] > v).count()
    }

    /// Concatenation self on top of other; returns the composite and the
    /// number of closed circles removed.
    pub fn concat(&self, other: &WalledDiagram) -> (WalledDiagram, usize) {
        assert_eq!((self.r, self.t), (other.r, other.t));
        let n = self.n();
        // Composite boundary: self top (0..n) and other bottom (n..2n).
        let mut pair = vec![usize::MAX; 2 * n];
        let mut seen_middle = vec![false; n];
        let resolve = |start_top: bool, start: usize, seen_middle: &mut Vec<bool>| -> (bool, usize) {
            // Walk from a boundary vertex to the other end of its strand.
            // State: (in_self, vertex index within that diagram).
            let (mut in_self, mut v) = (start_top, start);
            loop {
                let w = if in_self { self.pair[v] } else { other.pair[v] };
                if in_self && w < n {
                    return (true, w);
                }
                if !in_self && w >= n {
                    return (false, w);
                }
                // Crossing the middle layer.
                let mid = if in_self { w - n } else { w };
                seen_middle[mid] = true;
                if in_self {
                    in_self = false;
                    v = mid;
                } else {
                    in_self = true;
                    v = mid + n;
                }
            }
        };
        for start in 0..n {
            if pair[start] != usize::MAX {
                continue;
            }
            let (top_end, w) = resolve(true, start, &mut seen_middle);
            let end = if top_end { w } else { w };
            pair[start] = end;
            pair[end] = start;
            debug_assert!(top_end || end >= n);
        }
        for start in n..2 * n {
            if pair[start] != usize::MAX {
                continue;
            }
            let (_, end) = resolve(false, start, &mut seen_middle);
            pair[start] = end;
            pair[end] = start;
        }
        // Circles: cycles through middle vertices never touched by a
        // boundary path. They alternate between horizontal bottom edges of
        // self and horizontal top edges of other.
        let mut circles = 0;
        let mut visited = vec![false; n];
        for m in 0..n {
            if seen_middle[m] || visited[m] {
                continue;
            }
            circles += 1;
            let mut v = m;
            loop {
                visited[v] = true;
                let down = other.pair[v];
                debug_assert!(down < n, "circle strand must stay in the middle");
                visited[down] = true;
                let up = self.pair[down + n];
                debug_assert!(up >= n);
                v = up - n;
                if v == m {
                    break;
                }
            }
        }
        let d = WalledDiagram { r: self.r, t: self.t, pair };
        d.validate();
        (d, circles)
    }
}

/// The head-flavor factorization D = c^{-1} e^f w d of a walled diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramFactorization {
    pub f: usize,
    /// Head coset representative index pair acting on the top.
    pub c: (Perm, Perm),
    /// Permutation of the free strands f+1..r and barred f+1..t.
    pub w: (Perm, Perm),
    pub d: (Perm, Perm),
}

/// Builds e^f = e_1 e_2 ... e_f (contractions at strands 1..f).
pub fn e_power(r: usize, t: usize, f: usize) -> WalledDiagram {
    let mut d = WalledDiagram::identity(r, t);
    for i in 1..=f {
        let (next, c) = d.concat(&WalledDiagram::e_ij(r, t, i, i));
        assert_eq!(c, 0);
        d = next;
    }
    d
}

/// Builds the tail contraction chain e_{r,t} e_{r-1,t-1} ... over f factors.
pub fn e_power_tail(r: usize, t: usize, f: usize) -> WalledDiagram {
    let mut d = WalledDiagram::identity(r, t);
    for i in 0..f {
        let (next, c) = d.concat(&WalledDiagram::e_ij(r, t, r - i, t - i));
        assert_eq!(c, 0);
        d = next;
    }
    d
}

struct FactorTable {
    by_diagram: HashMap<WalledDiagram, DiagramFactorization>,
}

static FACTOR_TABLES: Mutex<Option<HashMap<(usize, usize), &'static FactorTable>>> = Mutex::new(None);

fn factor_table(r: usize, t: usize) -> &'static FactorTable {
    let mut guard = FACTOR_TABLES.lock().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    if let Some(tbl) = map.get(&(r, t)) {
        return tbl;
    }
    let mut by_diagram = HashMap::new();
    for f in 0..=r.min(t) {
        let ef = e_power(r, t, f);
        let reps = crate::combinatorics::coset_reps(r, t, f, crate::combinatorics::CosetFlavor::Head)
            .into_iter()
            .filter(|c| c.kappa.iter().all(|&x| x == 0))
            .collect::<Vec<_>>();
        for cd in &reps {
            let c_inv = WalledDiagram::from_perms(r, t, &cd.top.inverse(), &cd.bar.inverse());
            for w_top in Perm::all(r - f) {
                for w_bar in Perm::all(t - f) {
                    let w_diag = WalledDiagram::from_perms(
                        r,
                        t,
                        &w_top.embed(r, f),
                        &w_bar.embed(t, f),
                    );
                    for dd in &reps {
                        let d_diag = WalledDiagram::from_perms(r, t, &dd.top, &dd.bar);
                        let (m1, c1) = c_inv.concat(&ef);
                        let (m2, c2) = m1.concat(&w_diag);
                        let (m3, c3) = m2.concat(&d_diag);
                        assert_eq!(c1 + c2 + c3, 0, "factorization must not close circles");
                        let fact = DiagramFactorization {
                            f,
                            c: (cd.top.clone(), cd.bar.clone()),
                            w: (w_top.clone(), w_bar.clone()),
                            d: (dd.top.clone(), dd.bar.clone()),
                        };
                        let prev = by_diagram.insert(m3, fact);
                        assert!(prev.is_none(), "factorization not unique");
                    }
                }
            }
        }
    }
    let expected: usize = (1..=r + t).product();
    assert_eq!(by_diagram.len(), expected, "factorization must be a bijection");
    let tbl: &'static FactorTable = Box::leak(Box::new(FactorTable { by_diagram }));
    map.insert((r, t), tbl);
    tbl
}

/// All (r+t)! walled diagrams, sorted.
pub fn all_diagrams(r: usize, t: usize) -> Vec<WalledDiagram> {
    let mut v: Vec<WalledDiagram> = factor_table(r, t).by_diagram.keys().cloned().collect();
    v.sort();
    v
}

/// The unique head-flavor factorization of a walled diagram.
pub fn diagram_factorize(d: &WalledDiagram) -> DiagramFactorization {
    factor_table(d.r, d.t).by_diagram.get(d).expect("valid diagram").clone()
}

/// Evaluates a word of generator diagrams, returning the product diagram
/// and the number of circles removed.
pub fn diagram_from_word(r: usize, t: usize, word: &[WalledDiagram]) -> (WalledDiagram, usize) {
    let mut d = WalledDiagram::identity(r, t);
    let mut circles = 0;
    for g in word {
        let (next, c) = d.concat(g);
        circles += c;
        d = next;
    }
    (d, circles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_perm_roundtrip() {
        let d = WalledDiagram::from_perms(3, 2, &Perm::identity(3), &Perm::identity(2));
        assert_eq!(d, WalledDiagram::identity(3, 2));
        // diagram product matches permutation product
        for v in Perm::all(3) {
            for w in Perm::all(3) {
                let dv = WalledDiagram::from_perms(3, 0, &v, &Perm::identity(0));
                let dw = WalledDiagram::from_perms(3, 0, &w, &Perm::identity(0));
                let (p, c) = dv.concat(&dw);
                assert_eq!(c, 0);
                assert_eq!(p, WalledDiagram::from_perms(3, 0, &v.then(&w), &Perm::identity(0)));
            }
        }
    }

    #[test]
    fn e1_squares_to_circle() {
        let e = WalledDiagram::e1(2, 2);
        let (p, c) = e.concat(&e);
        assert_eq!(c, 1);
        assert_eq!(p, e);
    }

    #[test]
    fn e1_absorbs_s1_on_both_sides() {
        let e = WalledDiagram::e1(2, 1);
        let s1 = WalledDiagram::s(2, 1, 1);
        // e1 s1 e1 = e1.
        let (p1, c1) = e.concat(&s1);
        let (p2, c2) = p1.concat(&e);
        assert_eq!((p2, c1 + c2), (e.clone(), 0));
    }

    #[test]
    fn strand_classification() {
        let e = WalledDiagram::e1(2, 2);
        assert_eq!(e.partner_of(StrandEnd::BottomPlain(1)), StrandEnd::BottomBar(1));
        assert_eq!(e.partner_of(StrandEnd::BottomPlain(2)), StrandEnd::TopPlain(2));
        let s = WalledDiagram::s(2, 0, 1);
        assert_eq!(s.partner_of(StrandEnd::BottomPlain(1)), StrandEnd::TopPlain(2));
    }

    #[test]
    fn factorization_bijection_small() {
        for (r, t) in [(1, 1), (2, 1), (2, 2)] {
            // Building the table asserts bijectivity internally.
            let fact = diagram_factorize(&WalledDiagram::e1(r, t));
            assert_eq!(fact.f, 1);
            assert!(fact.c.0.is_identity() && fact.d.0.is_identity());
        }
        let id = WalledDiagram::identity(2, 2);
        let fact = diagram_factorize(&id);
        assert_eq!(fact.f, 0);
        assert!(fact.w.0.is_identity() && fact.w.1.is_identity());
    }

    #[test]
    fn e_powers() {
        let e2 = e_power(2, 2, 2);
        assert_eq!(e2.horizontal_count(), 2);
        let et = e_power_tail(2, 2, 2);
        assert_eq!(et.horizontal_count(), 2);
        assert_eq!(e_power(2, 2, 0), WalledDiagram::identity(2, 2));
    }

    #[test]
    fn flip_reverses_products() {
        let d = WalledDiagram::e1(2, 2);
        let s = WalledDiagram::s(2, 2, 1);
        let (p, _) = d.concat(&s);
        assert_eq!(p.flip().flip(), p);
        // flip(a b) = flip(b) flip(a); e1 and s1 are flip-symmetric.
        let (q, _) = s.concat(&d);
        assert_eq!(p.flip(), q);
    }
}
