//! The level two degenerate Hecke algebra H_{2,r} with parameters u_1, u_2.
//!
//! Elements are kept in the monomial form y^eps w with w a permutation;
//! in the cyclotomic quotient all exponents stay below two, giving the
//! monomial basis of size 2^r r!. The module also builds the four cellular
//! bases obtained by decorating Young symmetrizers with the projections
//! pi_a(u), and an embedding into the walled Brauer engine with no bar
//! strands, which serves as an independent cross-check of both engines.

use crate::combinatorics::{
    standard_tableaux, tableau_perm, w_lambda, young_antisymmetrizer, young_symmetrizer,
    Bipartition, BiTableau, GroupAlgebraElement,
};
use crate::linalg::Matrix;
use crate::perm::Perm;
use crate::rat::Rat;
use num::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HMono {
    pub eps: Vec<usize>,
    pub w: Perm,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct HElem {
    pub terms: BTreeMap<HMono, Rat>,
}

impl HElem {
    pub fn zero() -> Self {
        HElem { terms: BTreeMap::new() }
    }

    pub fn single(m: HMono, c: Rat) -> Self {
        let mut e = HElem::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: HMono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_scaled(&mut self, other: &HElem, c: &Rat) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&mut self, other: &HElem) {
        self.add_scaled(other, &Rat::one());
    }

    pub fn sub(&mut self, other: &HElem) {
        self.add_scaled(other, &-Rat::one());
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.terms.clear();
        } else {
            for v in self.terms.values_mut() {
                *v *= c.clone();
            }
        }
    }
}

type YRule = (Rat, Vec<usize>, Perm);

pub struct HCtx {
    pub r: usize,
    pub u1: Rat,
    pub u2: Rat,
    reduce: bool,
    affine_cell: OnceLock<Box<HCtx>>,
    tables: Mutex<HashMap<usize, Arc<Vec<YRule>>>>,
}

impl HCtx {
    pub fn new(r: usize, u1: Rat, u2: Rat) -> Self {
        Self::new_inner(r, u1, u2, true)
    }

    fn new_inner(r: usize, u1: Rat, u2: Rat, reduce: bool) -> Self {
        HCtx {
            r,
            u1,
            u2,
            reduce,
            affine_cell: OnceLock::new(),
            tables: Mutex::new(HashMap::new()),
        }
    }

    fn affine(&self) -> &HCtx {
        if !self.reduce {
            return self;
        }
        self.affine_cell.get_or_init(|| {
            Box::new(HCtx::new_inner(self.r, self.u1.clone(), self.u2.clone(), false))
        })
    }

    pub fn one(&self) -> HElem {
        HElem::single(HMono { eps: vec![0; self.r], w: Perm::identity(self.r) }, Rat::one())
    }

    pub fn from_perm(&self, w: &Perm) -> HElem {
        HElem::single(HMono { eps: vec![0; self.r], w: w.clone() }, Rat::one())
    }

    pub fn from_group(&self, g: &GroupAlgebraElement) -> HElem {
        let mut e = HElem::zero();
        for (w, c) in &g.terms {
            e.add_term(HMono { eps: vec![0; self.r], w: w.clone() }, c.clone());
        }
        e
    }

    /// Rules rewriting y_i^2 as lower terms, from the normal form of
    /// (y'_i - u_1)(y'_i - u_2) in the affine algebra.
    fn table(&self, i: usize) -> Arc<Vec<YRule>> {
        if let Some(tbl) = self.tables.lock().unwrap().get(&i) {
            return tbl.clone();
        }
        let aff = self.affine();
        let c = Perm::s_chain(self.r, i, 1);
        let start = aff.from_perm(&c);
        let y1 = aff.rmul_y(&start, 1);
        let mut acc = aff.rmul_y(&y1, 1);
        acc.add_scaled(&y1, &-(&self.u1 + &self.u2));
        acc.add_scaled(&start, &(&self.u1 * &self.u2));
        let acc = aff.rmul_perm(&acc, &c.inverse());
        let mut lead = vec![0; self.r];
        lead[i - 1] = 2;
        let lead = HMono { eps: lead, w: Perm::identity(self.r) };
        assert!(acc.terms.get(&lead).map(|v| v.is_one()).unwrap_or(false));
        let mut rules = Vec::new();
        for (m, coeff) in &acc.terms {
            if *m == lead {
                continue;
            }
            assert!(m.eps.iter().sum::<usize>() < 2);
            rules.push((-coeff.clone(), m.eps.clone(), m.w.clone()));
        }
        let rules = Arc::new(rules);
        self.tables.lock().unwrap().insert(i, rules.clone());
        rules
    }

    fn reduce_into(&self, out: &mut HElem, m: HMono, c: Rat) {
        if c.is_zero() {
            return;
        }
        if !self.reduce {
            out.add_term(m, c);
            return;
        }
        if let Some(i) = m.eps.iter().position(|&e| e >= 2) {
            for (tc, te, tw) in self.table(i + 1).iter() {
                let mut e2 = m.eps.clone();
                e2[i] -= 2;
                for (slot, add) in e2.iter_mut().zip(te) {
                    *slot += add;
                }
                self.reduce_into(out, HMono { eps: e2, w: tw.then(&m.w) }, &c * tc);
            }
        } else {
            out.add_term(m, c);
        }
    }

    pub fn rmul_perm(&self, e: &HElem, v: &Perm) -> HElem {
        let mut out = HElem::zero();
        for (m, c) in &e.terms {
            out.add_term(HMono { eps: m.eps.clone(), w: m.w.then(v) }, c.clone());
        }
        out
    }

    pub fn rmul_y(&self, e: &HElem, j: usize) -> HElem {
        assert!(j >= 1 && j <= self.r);
        let mut out = HElem::zero();
        for (m, c) in &e.terms {
            // y_j = y'_j + L_j and w y'_j = y'_{j'} w with j' the strand
            // entering at j, where y'_j = y_j - L_j slides through crossings
            let jp = m.w.inverse().apply(j);
            let mut e2 = m.eps.clone();
            e2[jp - 1] += 1;
            self.reduce_into(&mut out, HMono { eps: e2, w: m.w.clone() }, c.clone());
            for i in 1..jp {
                let tr = Perm::transposition(self.r, i, jp);
                out.add_term(HMono { eps: m.eps.clone(), w: tr.then(&m.w) }, -c.clone());
            }
            for i in 1..j {
                let tr = Perm::transposition(self.r, i, j);
                out.add_term(HMono { eps: m.eps.clone(), w: m.w.then(&tr) }, c.clone());
            }
        }
        out
    }

    pub fn multiply(&self, a: &HElem, b: &HElem) -> HElem {
        let mut out = HElem::zero();
        for (m, c) in &b.terms {
            let mut cur = a.clone();
            for (i, &e) in m.eps.iter().enumerate() {
                for _ in 0..e {
                    cur = self.rmul_y(&cur, i + 1);
                }
            }
            cur = self.rmul_perm(&cur, &m.w);
            out.add_scaled(&cur, c);
        }
        out
    }

    /// The Jucys-Murphy element y_j as a normal form element.
    pub fn jucys_murphy(&self, j: usize) -> HElem {
        self.rmul_y(&self.one(), j)
    }

    /// The dotted strand element y'_j = y_j - sum of transpositions (i j).
    pub fn jucys_murphy_prime(&self, j: usize) -> HElem {
        let mut e = self.jucys_murphy(j);
        for i in 1..j {
            e.sub(&self.from_perm(&Perm::transposition(self.r, i, j)));
        }
        e
    }

    /// pi_a(u) = prod_{i=1}^a (y_i - u).
    pub fn pi(&self, a: usize, u: &Rat) -> HElem {
        let mut cur = self.one();
        for i in 1..=a {
            let mut next = self.rmul_y(&cur, i);
            next.add_scaled(&cur, &-u.clone());
            cur = next;
        }
        cur
    }

    pub fn basis(&self) -> Vec<HMono> {
        assert!(self.reduce);
        let mut out = Vec::new();
        for w in Perm::all(self.r) {
            for mask in 0..(1usize << self.r) {
                let eps: Vec<usize> = (0..self.r).map(|i| (mask >> i) & 1).collect();
                out.push(HMono { eps, w: w.clone() });
            }
        }
        out.sort();
        out
    }

    pub fn to_vector(&self, e: &HElem, index: &BTreeMap<HMono, usize>) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); index.len()];
        for (m, c) in &e.terms {
            v[*index.get(m).expect("monomial outside the basis")] = c.clone();
        }
        v
    }

    pub fn basis_index(&self) -> BTreeMap<HMono, usize> {
        self.basis().into_iter().enumerate().map(|(i, m)| (m, i)).collect()
    }

    /// Checks the defining relations; returns descriptions of failures.
    pub fn verify_presentation(&self) -> Vec<String> {
        let mut failures = Vec::new();
        let r = self.r;
        let mut check = |name: String, lhs: HElem, rhs: HElem| {
            if lhs != rhs {
                failures.push(name);
            }
        };
        let s = |i: usize| self.from_perm(&Perm::s(r, i));
        for i in 1..r {
            check(format!("s_{i}^2"), self.multiply(&s(i), &s(i)), self.one());
            if i + 1 < r {
                let lhs = self.multiply(&self.multiply(&s(i), &s(i + 1)), &s(i));
                let rhs = self.multiply(&self.multiply(&s(i + 1), &s(i)), &s(i + 1));
                check(format!("braid {i}"), lhs, rhs);
            }
            // s_i y_i - y_{i+1} s_i = -1 and y_i s_i - s_i y_{i+1} = -1
            let mut lhs = self.rmul_y(&s(i), i);
            lhs.sub(&self.multiply(&self.jucys_murphy(i + 1), &s(i)));
            let mut neg_one = self.one();
            neg_one.scale(&-Rat::one());
            check(format!("s_{i} y_{i} cross"), lhs, neg_one.clone());
            let mut lhs = self.multiply(&self.jucys_murphy(i), &s(i));
            lhs.sub(&self.rmul_y(&s(i), i + 1));
            check(format!("y_{i} s_{i} cross"), lhs, neg_one);
        }
        for i in 1..=r {
            for l in i + 1..=r {
                let lhs = self.rmul_y(&self.jucys_murphy(i), l);
                let rhs = self.rmul_y(&self.jucys_murphy(l), i);
                check(format!("y_{i} y_{l} commute"), lhs, rhs);
            }
        }
        // (y_1 - u_1)(y_1 - u_2) = 0
        let y1 = self.jucys_murphy(1);
        let mut f = self.rmul_y(&y1, 1);
        f.add_scaled(&y1, &-(&self.u1 + &self.u2));
        let mut c = self.one();
        c.scale(&(&self.u1 * &self.u2));
        f.add(&c);
        if !f.is_zero() {
            failures.push("cyclotomic relation".to_string());
        }
        failures
    }
}

/// The four flavors of cellular basis elements.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellKind {
    /// pi_a(u_2) x y
    X,
    /// pi_a(u_1) x y
    Y,
    /// pi_a(u_2) y x
    XBar,
    /// pi_a(u_1) y x
    YBar,
}

impl HCtx {
    /// The element m_lambda of the chosen flavor: the projection pi_a
    /// followed by a symmetrizer on the first component letters 1..a and an
    /// antisymmetrizer on the rest (or the other way round for the barred
    /// flavors).
    pub fn cell_head(&self, kind: CellKind, lambda: &Bipartition) -> HElem {
        assert_eq!(lambda.size(), self.r);
        let a = lambda.first.size();
        let u = match kind {
            CellKind::X | CellKind::XBar => &self.u2,
            CellKind::Y | CellKind::YBar => &self.u1,
        };
        let pi = self.pi(a, u);
        let (g1, g2) = match kind {
            CellKind::X | CellKind::Y => (
                young_symmetrizer(lambda.first.parts(), 0, self.r),
                young_antisymmetrizer(lambda.second.parts(), a, self.r),
            ),
            CellKind::XBar | CellKind::YBar => (
                young_antisymmetrizer(lambda.first.parts(), 0, self.r),
                young_symmetrizer(lambda.second.parts(), a, self.r),
            ),
        };
        let head = self.multiply(&pi, &self.from_group(&g1));
        self.multiply(&head, &self.from_group(&g2))
    }

    pub fn cell_element(
        &self,
        kind: CellKind,
        lambda: &Bipartition,
        s: &BiTableau,
        t: &BiTableau,
    ) -> HElem {
        let head = self.cell_head(kind, lambda);
        let left = self.from_perm(&tableau_perm(s).inverse());
        let right = self.from_perm(&tableau_perm(t));
        self.multiply(&self.multiply(&left, &head), &right)
    }

    /// All cell basis elements of one flavor, with their shape labels.
    pub fn cell_basis(&self, kind: CellKind) -> Vec<(Bipartition, BiTableau, BiTableau, HElem)> {
        let mut out = Vec::new();
        for lambda in crate::combinatorics::enumerate_bipartitions(self.r) {
            let tabs = standard_tableaux(&lambda);
            for s in &tabs {
                for t in &tabs {
                    out.push((
                        lambda.clone(),
                        s.clone(),
                        t.clone(),
                        self.cell_element(kind, &lambda, s, t),
                    ));
                }
            }
        }
        out
    }

    /// The span dimension of { head * d(t) : t standard }; for the head
    /// x_lambda w_lambda y_{lambda'} this is the cell module dimension.
    pub fn span_dimension(&self, elements: &[HElem]) -> usize {
        let index = self.basis_index();
        let rows: Vec<Vec<Rat>> = elements.iter().map(|e| self.to_vector(e, &index)).collect();
        Matrix::from_rows(rows).rank()
    }

    /// The generator of the principal module realizing the cell module of
    /// shape lambda': x_lambda w_lambda y_{lambda'}.  The conjugate of a
    /// bipartition swaps the components besides conjugating each one.
    pub fn delta_generator(&self, lambda: &Bipartition) -> HElem {
        let head = self.cell_head(CellKind::X, lambda);
        let wl = self.from_perm(&w_lambda(lambda));
        let tail = self.cell_head(CellKind::Y, &lambda.conjugate().swapped());
        self.multiply(&self.multiply(&head, &wl), &tail)
    }
}

/// The embedding of H_{2,r} into the walled Brauer algebra with no bar
/// strands: y_i goes to -x_i.
pub fn to_walled(ctx: &crate::algebra::AlgCtx, h: &HElem) -> crate::algebra::Elem {
    assert_eq!(ctx.t, 0);
    let mut out = crate::algebra::Elem::zero();
    for (m, c) in &h.terms {
        let sign = if m.eps.iter().sum::<usize>() % 2 == 0 { Rat::one() } else { -Rat::one() };
        out.add_term(
            crate::algebra::Mono {
                alpha: m.eps.clone(),
                diag: crate::diagrams::WalledDiagram::from_perms(
                    ctx.r,
                    0,
                    &m.w,
                    &Perm::identity(0),
                ),
                beta: vec![],
            },
            c * &sign,
        );
    }
    out
}

/// The walled Brauer parameters matching an H_{2,r} context under the
/// embedding above.
pub fn walled_params(u1: &Rat, u2: &Rat) -> crate::params::Parameters {
    crate::params::Parameters::new(
        vec![-u1.clone(), -u2.clone()],
        None,
        vec![Rat::zero(), Rat::zero()],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ctx(r: usize) -> HCtx {
        HCtx::new(r, rat(1), rat(-2))
    }

    #[test]
    fn presentation() {
        for r in 1..=3 {
            assert_eq!(ctx(r).verify_presentation(), Vec::<String>::new());
        }
    }

    #[test]
    fn cell_bases_are_bases() {
        for r in 1..=3 {
            let h = ctx(r);
            let index = h.basis_index();
            let n = index.len();
            assert_eq!(n, (1 << r) * (1..=r).product::<usize>());
            for kind in [CellKind::X, CellKind::Y, CellKind::XBar, CellKind::YBar] {
                let cb = h.cell_basis(kind);
                assert_eq!(cb.len(), n);
                let rows: Vec<Vec<Rat>> =
                    cb.iter().map(|(_, _, _, e)| h.to_vector(e, &index)).collect();
                assert_eq!(Matrix::from_rows(rows).rank(), n, "flavor {:?} at r={}", kind, r);
            }
        }
    }

    #[test]
    fn pi_sandwich_vanishes() {
        for r in 2..=3 {
            let h = ctx(r);
            let basis = h.basis();
            for a in 1..=r {
                for b in 1..=r {
                    if a + b <= r {
                        continue;
                    }
                    let pa = h.pi(a, &h.u2.clone());
                    let pb = h.pi(b, &h.u1.clone());
                    for m in &basis {
                        let mid = h.multiply(&pa, &HElem::single(m.clone(), Rat::one()));
                        assert!(h.multiply(&mid, &pb).is_zero(), "a={a} b={b} at r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn delta_module_dimensions() {
        let h = ctx(3);
        for lambda in crate::combinatorics::enumerate_bipartitions(3) {
            let gen = h.delta_generator(&lambda);
            let spanning: Vec<HElem> = Perm::all(3)
                .iter()
                .map(|w| h.rmul_perm(&gen, w))
                .collect();
            let expect = standard_tableaux(&lambda.conjugate().swapped()).len();
            assert_eq!(h.span_dimension(&spanning), expect, "lambda = {:?}", lambda);
        }
    }

    #[test]
    fn embedding_into_walled_is_multiplicative() {
        let r = 2;
        let h = ctx(r);
        let b = crate::algebra::AlgCtx::new(r, 0, walled_params(&h.u1, &h.u2));
        let basis = h.basis();
        for (i, a) in basis.iter().enumerate() {
            for (j, c) in basis.iter().enumerate() {
                if (i + j) % 3 != 0 {
                    continue;
                }
                let ea = HElem::single(a.clone(), Rat::one());
                let ec = HElem::single(c.clone(), Rat::one());
                let lhs = to_walled(&b, &h.multiply(&ea, &ec));
                let rhs = b.multiply(&to_walled(&b, &ea), &to_walled(&b, &ec));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn jucys_murphy_elements_commute() {
        let h = ctx(3);
        let y2 = h.jucys_murphy(2);
        let y3 = h.jucys_murphy(3);
        assert_eq!(h.multiply(&y2, &y3), h.multiply(&y3, &y2));
        // y'_j = y_j - transpositions below j
        let mut expect = h.jucys_murphy(3);
        expect.sub(&h.from_perm(&Perm::transposition(3, 1, 3)));
        expect.sub(&h.from_perm(&Perm::transposition(3, 2, 3)));
        assert_eq!(h.jucys_murphy_prime(3), expect);
    }
}
