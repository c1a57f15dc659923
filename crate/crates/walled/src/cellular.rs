//! Weakly cellular structure of the level two walled Brauer algebra.
//!
//! Cell labels are triples (f, mu, nu) where f counts contracted pairs and
//! mu, nu are bipartitions of r-f and t-f.  A basis element is
//! `x^{kappa_d} d^{-1} e^f n_{st} c x^{kappa_c}` with c, d decorated coset
//! representatives moving the contraction block to the tail strands, e^f
//! the chain of tail contractions, and n_{st} a pair of level two Hecke
//! cell elements living on the free strands of each side of the wall.

use crate::algebra::{AlgCtx, Elem, Gen, Mono};
use crate::combinatorics::{
    coset_reps, dominance_leq, enumerate_bipartitions, kleshchev, standard_tableaux, tableau_perm,
    young_antisymmetrizer, young_symmetrizer, BiTableau, Bipartition, CosetDatum, CosetFlavor,
    GroupAlgebraElement,
};
use crate::diagrams::{e_power_tail, WalledDiagram};
use crate::linalg::Matrix;
use crate::perm::Perm;
use crate::rat::Rat;
use num::{One, Zero};
use std::collections::BTreeMap;

/// The basis element given by a pair of side permutations.
pub fn perm_elem(alg: &AlgCtx, w: &Perm, wbar: &Perm) -> Elem {
    let (r, t) = (alg.r, alg.t);
    let m = Mono {
        alpha: vec![0; r],
        diag: WalledDiagram::from_perms(r, t, w, wbar),
        beta: vec![0; t],
    };
    Elem::single(m, Rat::one())
}

pub fn diagram_elem(alg: &AlgCtx, d: WalledDiagram) -> Elem {
    let (r, t) = (alg.r, alg.t);
    Elem::single(Mono { alpha: vec![0; r], diag: d, beta: vec![0; t] }, Rat::one())
}

/// The decoration monomial prod x_i^{kappa_i}.
pub fn x_kappa(alg: &AlgCtx, kappa: &[u8]) -> Elem {
    let word: Vec<Gen> = kappa
        .iter()
        .enumerate()
        .filter(|(_, &k)| k == 1)
        .map(|(i, _)| Gen::X(i + 1))
        .collect();
    alg.nf_word(&word)
}

pub fn group_elem_plain(alg: &AlgCtx, g: &GroupAlgebraElement) -> Elem {
    let mut out = Elem::zero();
    let id = Perm::identity(alg.t);
    for (w, c) in &g.terms {
        out.add_scaled(&perm_elem(alg, w, &id), c);
    }
    out
}

pub fn group_elem_bar(alg: &AlgCtx, g: &GroupAlgebraElement) -> Elem {
    let mut out = Elem::zero();
    let id = Perm::identity(alg.r);
    for (w, c) in &g.terms {
        out.add_scaled(&perm_elem(alg, &id, w), c);
    }
    out
}

/// prod_{i=1}^{a} (x_i - u_1), the eigenprojection factor on the plain
/// side.  The level two Hecke elements carry pi_a(u_1) on y letters;
/// under y_i = -x_i and negated parameters it turns into this product
/// up to a sign that rescales the basis element.
pub fn pi_plain(alg: &AlgCtx, a: usize) -> Elem {
    let u1 = alg.params.u[0].clone();
    let mut e = alg.one();
    for i in 1..=a {
        let mut next = alg.rmul_gen(&e, Gen::X(i));
        next.add_scaled(&e, &-u1.clone());
        e = next;
    }
    e
}

pub fn pi_bar(alg: &AlgCtx, b: usize) -> Elem {
    let ub1 = alg.params.g_roots()[0].clone();
    let mut e = alg.one();
    for j in 1..=b {
        let mut next = alg.rmul_gen(&e, Gen::Xb(j));
        next.add_scaled(&e, &-ub1.clone());
        e = next;
    }
    e
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellLabel {
    pub f: usize,
    pub mu: Bipartition,
    pub nu: Bipartition,
}

/// All cell labels for B_{2,r,t}, listed from the top of the poset down:
/// f descending, bipartition pairs in enumeration order within each layer.
pub fn cell_labels(r: usize, t: usize) -> Vec<CellLabel> {
    let mut out = Vec::new();
    for f in (0..=r.min(t)).rev() {
        for mu in enumerate_bipartitions(r - f) {
            for nu in enumerate_bipartitions(t - f) {
                out.push(CellLabel { f, mu: mu.clone(), nu });
            }
        }
    }
    out
}

/// The partial order: (f, mu, nu) >= (g, alpha, beta) iff f > g, or the
/// layers agree and both bipartitions dominate componentwise.
pub fn label_geq(a: &CellLabel, b: &CellLabel) -> bool {
    a.f > b.f || (a.f == b.f && dominance_leq(&b.mu, &a.mu) && dominance_leq(&b.nu, &a.nu))
}

pub fn label_gt(a: &CellLabel, b: &CellLabel) -> bool {
    a != b && label_geq(a, b)
}

/// One index into the cell module of a label: a pair of standard
/// bitableaux and a decorated coset representative.
#[derive(Clone, Debug)]
pub struct CellIndex {
    pub tab: (BiTableau, BiTableau),
    pub coset: CosetDatum,
}

pub fn cell_indices(r: usize, t: usize, label: &CellLabel) -> Vec<CellIndex> {
    let mu_tabs = standard_tableaux(&label.mu);
    let nu_tabs = standard_tableaux(&label.nu);
    let cosets = coset_reps(r, t, label.f, CosetFlavor::Tail);
    let mut out = Vec::new();
    for s1 in &mu_tabs {
        for s2 in &nu_tabs {
            for c in &cosets {
                out.push(CellIndex { tab: (s1.clone(), s2.clone()), coset: c.clone() });
            }
        }
    }
    out
}

pub fn label_dim(r: usize, t: usize, label: &CellLabel) -> usize {
    standard_tableaux(&label.mu).len()
        * standard_tableaux(&label.nu).len()
        * coset_reps(r, t, label.f, CosetFlavor::Tail).len()
}

/// Full change-of-basis data between the monomial basis and the cellular
/// basis, built once per parameter choice.  Construction fails if the
/// candidate set is not a basis.
pub struct CellCtx<'a> {
    pub alg: &'a AlgCtx,
    pub labels: Vec<CellLabel>,
    pub indices: Vec<Vec<CellIndex>>,
    basis: Vec<Mono>,
    /// Column j of `transition` holds the cellular element for
    /// `columns[j] = (label, left, right)` in monomial coordinates.
    pub columns: Vec<(usize, usize, usize)>,
    transition: Matrix,
    inverse: Matrix,
}

impl<'a> CellCtx<'a> {
    pub fn new(alg: &'a AlgCtx) -> Self {
        assert_eq!(alg.k, 2, "cellular structure is built for level two");
        let (r, t) = (alg.r, alg.t);
        let labels = cell_labels(r, t);
        let indices: Vec<Vec<CellIndex>> =
            labels.iter().map(|l| cell_indices(r, t, l)).collect();
        let basis = alg.basis();
        let index: BTreeMap<Mono, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = basis.len();
        let mut columns = Vec::new();
        let mut transition = Matrix::zero(n, n);
        let mut ctx = CellCtx {
            alg,
            labels,
            indices,
            basis,
            columns: Vec::new(),
            transition: Matrix::zero(0, 0),
            inverse: Matrix::zero(0, 0),
        };
        for li in 0..ctx.labels.len() {
            for a in 0..ctx.indices[li].len() {
                for b in 0..ctx.indices[li].len() {
                    let e = ctx.basis_element(li, a, b);
                    let j = columns.len();
                    for (m, c) in &e.terms {
                        transition[(index[m], j)] = c.clone();
                    }
                    columns.push((li, a, b));
                }
            }
        }
        assert_eq!(columns.len(), n, "cellular index count must match the rank");
        let inverse = transition.inverse().expect("cellular candidates are not a basis");
        ctx.columns = columns;
        ctx.transition = transition;
        ctx.inverse = inverse;
        ctx
    }

    /// The undecorated middle part n_{st}: the plain-side Hecke cell
    /// element (projector, symmetrizer on mu^(1), antisymmetrizer on
    /// mu^(2), conjugated by the tableau permutations) multiplied on the
    /// right by the bar-side one (projector, antisymmetrizer on nu^(1),
    /// symmetrizer on nu^(2)).  The plain factor must stay on the left
    /// since x_i and xbar_j do not commute.
    pub fn n_element(
        &self,
        label: &CellLabel,
        s: &(BiTableau, BiTableau),
        t: &(BiTableau, BiTableau),
    ) -> Elem {
        let (r, tt) = (self.alg.r, self.alg.t);
        let a = label.mu.first.size();
        let b = label.nu.first.size();
        let s1 = tableau_perm(&s.0).inverse().embed(r, 0);
        let s2 = tableau_perm(&s.1).inverse().embed(tt, 0);
        let t1 = tableau_perm(&t.0).embed(r, 0);
        let t2 = tableau_perm(&t.1).embed(tt, 0);
        let mut e = perm_elem(self.alg, &s1, &s2);
        e = self.alg.multiply(&e, &pi_plain(self.alg, a));
        e = self.alg.multiply(
            &e,
            &group_elem_plain(self.alg, &young_symmetrizer(label.mu.first.parts(), 0, r)),
        );
        e = self.alg.multiply(
            &e,
            &group_elem_plain(self.alg, &young_antisymmetrizer(label.mu.second.parts(), a, r)),
        );
        e = self.alg.multiply(&e, &pi_bar(self.alg, b));
        e = self.alg.multiply(
            &e,
            &group_elem_bar(self.alg, &young_antisymmetrizer(label.nu.first.parts(), 0, tt)),
        );
        e = self.alg.multiply(
            &e,
            &group_elem_bar(self.alg, &young_symmetrizer(label.nu.second.parts(), b, tt)),
        );
        self.alg.multiply(&e, &perm_elem(self.alg, &t1, &t2))
    }

    /// The cellular basis element for (label, left index, right index).
    pub fn basis_element(&self, label_idx: usize, left: usize, right: usize) -> Elem {
        let label = &self.labels[label_idx];
        let l = &self.indices[label_idx][left];
        let c = &self.indices[label_idx][right];
        let (r, t) = (self.alg.r, self.alg.t);
        let mut e = x_kappa(self.alg, &l.coset.kappa);
        e = self
            .alg
            .multiply(&e, &perm_elem(self.alg, &l.coset.top.inverse(), &l.coset.bar.inverse()));
        e = self.alg.multiply(&e, &diagram_elem(self.alg, e_power_tail(r, t, label.f)));
        e = self.alg.multiply(&e, &self.n_element(label, &l.tab, &c.tab));
        e = self.alg.multiply(&e, &perm_elem(self.alg, &c.coset.top, &c.coset.bar));
        self.alg.multiply(&e, &x_kappa(self.alg, &c.coset.kappa))
    }

    /// Exact coordinates of an element in the cellular basis, ordered as
    /// in `columns`.
    pub fn expand(&self, e: &Elem) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.basis.len()];
        let index: BTreeMap<&Mono, usize> =
            self.basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for (m, c) in &e.terms {
            v[index[m]] = c.clone();
        }
        (0..self.basis.len())
            .map(|i| {
                let mut acc = Rat::zero();
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        acc += &self.inverse[(i, j)] * vj;
                    }
                }
                acc
            })
            .collect()
    }

    fn column_of(&self, label_idx: usize, left: usize, right: usize) -> usize {
        self.columns
            .iter()
            .position(|&(l, a, b)| l == label_idx && a == left && b == right)
            .unwrap()
    }

    /// The matrix of the right action of `b` on the cell module of the
    /// given label, rows and columns indexed like `indices[label_idx]`.
    /// Panics if a product leaves the span of the label's row together
    /// with the strictly larger layers, which would contradict
    /// cellularity.
    pub fn action_matrix(&self, label_idx: usize, b: &Elem) -> Matrix {
        let dim = self.indices[label_idx].len();
        let mut out = Matrix::zero(dim, dim);
        for j in 0..dim {
            let row = self.basis_element(label_idx, 0, j);
            let coords = self.expand(&self.alg.multiply(&row, b));
            for (col, c) in coords.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (li, a, jp) = self.columns[col];
                if li == label_idx && a == 0 {
                    out[(j, jp)] = c.clone();
                } else {
                    assert!(
                        label_gt(&self.labels[li], &self.labels[label_idx]),
                        "product escapes the cell filtration"
                    );
                }
            }
        }
        out
    }

    /// Gram matrix of the invariant form: phi(j, j') is the coefficient
    /// of C_{00} in C_{0j} C_{j'0} after reduction modulo larger labels.
    pub fn gram_matrix(&self, label_idx: usize) -> Matrix {
        let dim = self.indices[label_idx].len();
        let col00 = self.column_of(label_idx, 0, 0);
        let mut out = Matrix::zero(dim, dim);
        for j in 0..dim {
            let left = self.basis_element(label_idx, 0, j);
            for jp in 0..dim {
                let right = self.basis_element(label_idx, jp, 0);
                let coords = self.expand(&self.alg.multiply(&left, &right));
                out[(j, jp)] = coords[col00].clone();
            }
        }
        out
    }

    /// Whether the simple head of the cell module is predicted to be
    /// nonzero: both bipartitions Kleshchev for the shifted parameters,
    /// and the degenerate layer f = r = t is excluded when both omega_0
    /// and omega_1 vanish.
    pub fn simple_predicted_nonzero(&self, label: &CellLabel) -> bool {
        let p = &self.alg.params;
        let mu_ok = kleshchev(&label.mu, &-p.u[0].clone(), &-p.u[1].clone());
        let g = p.g_roots();
        let nu_ok = kleshchev(&label.nu, &-g[0].clone(), &-g[1].clone());
        let degenerate = label.f == self.alg.r
            && self.alg.r == self.alg.t
            && p.omega_seed[0].is_zero()
            && p.omega_seed[1].is_zero();
        mu_ok && nu_ok && !degenerate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Parameters;
    use crate::rat::rat;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn dimension_squares_sum_to_rank() {
        for (r, t) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let total: usize = cell_labels(r, t)
                .iter()
                .map(|l| label_dim(r, t, l).pow(2))
                .sum();
            assert_eq!(total, (1usize << (r + t)) * factorial(r + t), "r={} t={}", r, t);
        }
    }

    #[test]
    fn layer_breakdown_two_two() {
        let mut by_f = [0usize; 3];
        for l in cell_labels(2, 2) {
            by_f[l.f] += label_dim(2, 2, &l).pow(2);
        }
        assert_eq!(by_f, [64, 256, 64]);
    }

    #[test]
    fn transition_is_invertible() {
        for (r, t) in [(1, 1), (2, 1)] {
            let alg = AlgCtx::new(r, t, Parameters::schur_weyl(2, 2, 0, 2));
            let cell = CellCtx::new(&alg);
            assert_eq!(cell.columns.len(), (1usize << (r + t)) * factorial(r + t));
        }
    }

    #[test]
    fn action_matrices_multiply() {
        let alg = AlgCtx::new(1, 1, Parameters::schur_weyl(2, 2, 0, 2));
        let cell = CellCtx::new(&alg);
        let gens: Vec<Elem> = [vec![Gen::E1], vec![Gen::X(1)], vec![Gen::Xb(1)]]
            .iter()
            .map(|w| alg.nf_word(w))
            .collect();
        for li in 0..cell.labels.len() {
            for a in &gens {
                for b in &gens {
                    let ab = alg.multiply(a, b);
                    let lhs = cell.action_matrix(li, &ab);
                    let rhs = cell.action_matrix(li, a).mul(&cell.action_matrix(li, b));
                    assert_eq!(lhs, rhs, "label {:?}", cell.labels[li]);
                }
            }
        }
    }

    fn gram_pattern(alg: &AlgCtx) -> Vec<(CellLabel, bool)> {
        let cell = CellCtx::new(alg);
        (0..cell.labels.len())
            .map(|li| (cell.labels[li].clone(), !cell.gram_matrix(li).is_zero()))
            .collect()
    }

    #[test]
    fn gram_nonvanishing_matches_prediction() {
        // Generic omega: only the layer-zero labels with a non-Kleshchev
        // bipartition drop out.
        let alg = AlgCtx::new(1, 1, Parameters::schur_weyl(2, 2, 0, 2));
        let cell = CellCtx::new(&alg);
        for (label, nonzero) in gram_pattern(&alg) {
            assert_eq!(
                nonzero,
                cell.simple_predicted_nonzero(&label),
                "label {:?}",
                label
            );
        }
        // omega_0 = omega_1 = 0: the fully contracted layer dies as well.
        let p = Parameters::new(
            vec![rat(1), rat(2)],
            Some(vec![rat(-1), rat(-2)]),
            vec![rat(0), rat(0)],
        );
        let alg = AlgCtx::new(1, 1, p);
        let cell = CellCtx::new(&alg);
        for (label, nonzero) in gram_pattern(&alg) {
            assert_eq!(
                nonzero,
                cell.simple_predicted_nonzero(&label),
                "label {:?}",
                label
            );
        }
    }

    #[test]
    fn gram_nonvanishing_two_one() {
        let alg = AlgCtx::new(2, 1, Parameters::schur_weyl(2, 2, 0, 2));
        let cell = CellCtx::new(&alg);
        for (label, nonzero) in gram_pattern(&alg) {
            assert_eq!(
                nonzero,
                cell.simple_predicted_nonzero(&label),
                "label {:?}",
                label
            );
        }
    }
}
