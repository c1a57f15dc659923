//! Normal form engine for the level-k walled Brauer algebra B_{k,r,t}.
//!
//! Every element is written in the regular monomial form
//! `x^alpha D xbar^beta`
//! with D a walled diagram and all exponents below k. Multiplication is
//! realized entirely through right-multiplication by generators: a general
//! product A * B expands B into generator words and folds them onto A.
//! The rewriting steps implement the defining relations, with two derived
//! tables driving the closure:
//!
//! * the contraction table expressing xbar_1^b e_1 as a combination of
//!   x_1^i e_1 (this also produces the bar parameter sequence), and
//! * cyclotomic reduction tables expressing x_i^k and xbar_j^k through
//!   lower monomials, obtained by normalizing f(x'_i) and g(xbar'_j) in
//!   the affine (unreduced) engine.
//!
//! The bar polynomial g is not an input: it is read off from the normal
//! form of e_1 f(x_1), and cross-checked against explicitly given bar
//! roots when those are available.

use crate::diagrams::{all_diagrams, diagram_factorize, WalledDiagram};
use crate::diagrams::StrandEnd::{BottomBar, BottomPlain, TopPlain};
use crate::params::{poly_from_roots, Parameters};
use crate::perm::Perm;
use crate::rat::{rat_from_str, rat_to_string, Rat};
use num::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

/// Generators as letters of words, including the polynomial ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Gen {
    S(usize),
    Sb(usize),
    E1,
    X(usize),
    Xb(usize),
}

/// A regular monomial x^alpha D xbar^beta.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Mono {
    pub alpha: Vec<usize>,
    pub diag: WalledDiagram,
    pub beta: Vec<usize>,
}

impl Mono {
    pub fn identity(r: usize, t: usize) -> Self {
        Mono { alpha: vec![0; r], diag: WalledDiagram::identity(r, t), beta: vec![0; t] }
    }

    pub fn degree(&self) -> usize {
        self.alpha.iter().sum::<usize>() + self.beta.iter().sum::<usize>()
    }
}

/// A linear combination of regular monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Elem {
    pub terms: BTreeMap<Mono, Rat>,
}

impl Elem {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn single(m: Mono, c: Rat) -> Self {
        let mut e = Elem::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Elem, c: &Rat) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&mut self, other: &Elem) {
        self.add_scaled(other, &Rat::one());
    }

    pub fn sub(&mut self, other: &Elem) {
        self.add_scaled(other, &-Rat::one());
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v *= c.clone();
        }
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }
}

impl std::fmt::Display for Elem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({}) x^{:?} {:?} xb^{:?}", rat_to_string(c), m.alpha, m.diag, m.beta)?;
            first = false;
        }
        Ok(())
    }
}

thread_local! {
    static DEPTH: std::cell::Cell<usize> = const { std::cell::Cell::new(0) };
}

fn guarded<T>(f: impl FnOnce() -> T) -> T {
    DEPTH.with(|d| {
        let v = d.get() + 1;
        assert!(v < 3000, "rewriting recursion exceeded the depth bound");
        d.set(v);
    });
    let out = f();
    DEPTH.with(|d| d.set(d.get() - 1));
    out
}

type FRule = (Rat, Vec<usize>, WalledDiagram);
type GRule = (Rat, Vec<usize>, Perm);

pub struct AlgCtx {
    pub k: usize,
    pub r: usize,
    pub t: usize,
    pub params: Parameters,
    /// When false the engine works in the affine algebra: no exponent bound,
    /// no cyclotomic rewriting. Used internally to derive the tables.
    reduce: bool,
    affine_cell: OnceLock<Box<AlgCtx>>,
    g_cell: OnceLock<Vec<Rat>>,
    /// Rows of the contraction table: row b expresses xbar_1^b e_1 in the
    /// basis x_1^i e_1.
    t_rows: Mutex<Vec<Vec<Rat>>>,
    f_tables: Mutex<HashMap<usize, std::sync::Arc<Vec<FRule>>>>,
    g_tables: Mutex<HashMap<usize, std::sync::Arc<Vec<GRule>>>>,
    word_cache: Mutex<HashMap<WalledDiagram, std::sync::Arc<Vec<Gen>>>>,
    memo: Mutex<HashMap<(Mono, Gen), Elem>>,
    memo_xp: Mutex<HashMap<(Mono, usize), Elem>>,
}

impl AlgCtx {
    pub fn new(r: usize, t: usize, params: Parameters) -> Self {
        Self::new_inner(r, t, params, true)
    }

    fn new_inner(r: usize, t: usize, params: Parameters, reduce: bool) -> Self {
        AlgCtx {
            k: params.k,
            r,
            t,
            params,
            reduce,
            affine_cell: OnceLock::new(),
            g_cell: OnceLock::new(),
            t_rows: Mutex::new(vec![vec![Rat::one()]]),
            f_tables: Mutex::new(HashMap::new()),
            g_tables: Mutex::new(HashMap::new()),
            word_cache: Mutex::new(HashMap::new()),
            memo: Mutex::new(HashMap::new()),
            memo_xp: Mutex::new(HashMap::new()),
        }
    }

    /// The companion engine over the affine algebra (no cyclotomic rewriting).
    pub fn affine(&self) -> &AlgCtx {
        if !self.reduce {
            return self;
        }
        self.affine_cell
            .get_or_init(|| Box::new(AlgCtx::new_inner(self.r, self.t, self.params.clone(), false)))
    }

    pub fn one(&self) -> Elem {
        Elem::single(Mono::identity(self.r, self.t), Rat::one())
    }

    pub fn omega(&self, a: usize) -> Rat {
        self.params.omega(a)
    }

    // ----- contraction table and the bar omega sequence -----

    fn t_row(&self, b: usize) -> Vec<Rat> {
        let mut rows = self.t_rows.lock().unwrap();
        while rows.len() <= b {
            let prev = rows.last().unwrap().clone();
            let n = prev.len();
            let omega = self.params.omega_sequence(n + 1);
            // v[i] expands xbar_1 x_1^i e_1 in the basis x_1^j e_1
            let mut v: Vec<Vec<Rat>> = vec![vec![Rat::zero(), -Rat::one()]];
            for i in 1..n {
                let mut next = vec![Rat::zero()];
                next.extend(v[i - 1].iter().cloned());
                next[0] -= &omega[i];
                next[1] += &omega[i - 1];
                v.push(next);
            }
            let mut row = vec![Rat::zero(); n + 1];
            for i in 0..n {
                if prev[i].is_zero() {
                    continue;
                }
                for (j, c) in v[i].iter().enumerate() {
                    row[j] += &prev[i] * c;
                }
            }
            while row.len() > 1 && row.last().unwrap().is_zero() {
                row.pop();
            }
            rows.push(row);
        }
        rows[b].clone()
    }

    /// The bar parameter omega_bar_a, read off the contraction table.
    pub fn omega_bar(&self, a: usize) -> Rat {
        let row = self.t_row(a);
        let omega = self.params.omega_sequence(row.len());
        row.iter().zip(&omega).map(|(c, w)| c * w).sum()
    }

    // ----- the bar polynomial g -----

    /// Coefficients of g(xbar) indexed by exponent, g[k] = 1. Derived from
    /// the normal form of e_1 f(x_1) whenever r, t >= 1.
    pub fn g_coeffs(&self) -> &[Rat] {
        self.g_cell.get_or_init(|| {
            let k = self.k;
            assert!(self.t >= 1, "no bar strands, g is not defined");
            if self.r == 0 {
                let c = poly_from_roots(self.params.g_roots());
                return (0..=k).map(|e| c[k - e].clone()).collect();
            }
            let aff = self.affine();
            let f = self.params.f_coeffs();
            let mut acc = Elem::zero();
            for b in 0..=k {
                let coeff = f[k - b].clone();
                if coeff.is_zero() {
                    continue;
                }
                let mut word = vec![Gen::E1];
                word.extend(std::iter::repeat(Gen::X(1)).take(b));
                acc.add_scaled(&aff.nf_word(&word), &coeff);
            }
            let e1d = WalledDiagram::e1(self.r, self.t);
            let sign = if k % 2 == 0 { Rat::one() } else { -Rat::one() };
            let mut g = vec![Rat::zero(); k + 1];
            for (m, c) in &acc.terms {
                assert!(
                    m.alpha.iter().all(|&a| a == 0)
                        && m.diag == e1d
                        && m.beta.iter().skip(1).all(|&b| b == 0),
                    "e_1 f(x_1) did not normalize to the bar strand: {}",
                    acc
                );
                g[m.beta[0]] = c * &sign;
            }
            assert!(g[k].is_one(), "bar polynomial is not monic, parameters are not admissible");
            if let Some(ub) = &self.params.ubar {
                let pc = poly_from_roots(ub);
                for e in 0..=k {
                    assert_eq!(g[e], pc[k - e], "derived bar polynomial disagrees with bar roots");
                }
            }
            g
        })
    }

    // ----- cyclotomic reduction tables -----

    fn strand_word(chain: &[Gen], inner: Gen, b: usize) -> Vec<Gen> {
        let mut w: Vec<Gen> = chain.iter().rev().cloned().collect();
        w.extend(std::iter::repeat(inner).take(b));
        w.extend(chain.iter().cloned());
        w
    }

    /// Rules rewriting x_i^k as sum c * x^alpha' w'.
    fn f_table(&self, i: usize) -> std::sync::Arc<Vec<FRule>> {
        if let Some(tbl) = self.f_tables.lock().unwrap().get(&i) {
            return tbl.clone();
        }
        let k = self.k;
        let aff = self.affine();
        let f = self.params.f_coeffs();
        let chain: Vec<Gen> = (1..i).map(Gen::S).collect();
        let mut acc = Elem::zero();
        for b in 0..=k {
            let coeff = f[k - b].clone();
            if coeff.is_zero() {
                continue;
            }
            acc.add_scaled(&aff.nf_word(&Self::strand_word(&chain, Gen::X(1), b)), &coeff);
        }
        let mut lead = vec![0; self.r];
        lead[i - 1] = k;
        let lead = Mono { alpha: lead, diag: WalledDiagram::identity(self.r, self.t), beta: vec![0; self.t] };
        assert!(acc.coeff(&lead).is_one(), "reduction table has no unit leading term");
        let mut rules = Vec::new();
        for (m, c) in &acc.terms {
            if *m == lead {
                continue;
            }
            assert!(m.degree() < k, "non-leading term of degree >= k in reduction table");
            assert!(m.beta.iter().all(|&b| b == 0), "bar part leaked into the plain table");
            rules.push((-c.clone(), m.alpha.clone(), m.diag.clone()));
        }
        let rules = std::sync::Arc::new(rules);
        self.f_tables.lock().unwrap().insert(i, rules.clone());
        rules
    }

    /// Rules rewriting xbar_l^k as sum c * xbar^beta' wbar, with the bar
    /// permutation standing to the right of the bar variables.
    fn g_table(&self, l: usize) -> std::sync::Arc<Vec<GRule>> {
        if let Some(tbl) = self.g_tables.lock().unwrap().get(&l) {
            return tbl.clone();
        }
        let k = self.k;
        let aff = self.affine();
        let g: Vec<Rat> = self.g_coeffs().to_vec();
        let chain: Vec<Gen> = (1..l).map(Gen::Sb).collect();
        let mut acc = Elem::zero();
        for b in 0..=k {
            if g[b].is_zero() {
                continue;
            }
            acc.add_scaled(&aff.nf_word(&Self::strand_word(&chain, Gen::Xb(1), b)), &g[b]);
        }
        let mut lead = vec![0; self.t];
        lead[l - 1] = k;
        let lead = Mono { alpha: vec![0; self.r], diag: WalledDiagram::identity(self.r, self.t), beta: lead };
        assert!(acc.coeff(&lead).is_one(), "bar reduction table has no unit leading term");
        let mut rules = Vec::new();
        for (m, c) in &acc.terms {
            if *m == lead {
                continue;
            }
            assert!(m.degree() < k, "non-leading term of degree >= k in bar reduction table");
            assert!(m.alpha.iter().all(|&a| a == 0), "plain part leaked into the bar table");
            let (wp, wb) = perm_parts(&m.diag);
            assert!(wp.is_identity());
            // the rule is applied with bars kept on the left, which flips
            // the permutation part
            rules.push((-c.clone(), m.beta.clone(), wb.inverse()));
        }
        let rules = std::sync::Arc::new(rules);
        self.g_tables.lock().unwrap().insert(l, rules.clone());
        rules
    }

    fn reduce_into(&self, out: &mut Elem, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        if !self.reduce {
            out.add_term(m, c);
            return;
        }
        let k = self.k;
        if let Some(i) = m.alpha.iter().position(|&a| a >= k) {
            for (tc, ta, tw) in self.f_table(i + 1).iter() {
                let mut a2 = m.alpha.clone();
                a2[i] -= k;
                for (slot, add) in a2.iter_mut().zip(ta) {
                    *slot += add;
                }
                let (d2, circ) = tw.concat(&m.diag);
                assert_eq!(circ, 0);
                self.reduce_into(out, Mono { alpha: a2, diag: d2, beta: m.beta.clone() }, &c * tc);
            }
        } else if let Some(l) = m.beta.iter().position(|&b| b >= k) {
            for (tc, tb, wb) in self.g_table(l + 1).iter() {
                let mut b2 = m.beta.clone();
                b2[l] -= k;
                for (slot, add) in b2.iter_mut().zip(tb) {
                    *slot += add;
                }
                let base = Elem::single(
                    Mono { alpha: m.alpha.clone(), diag: m.diag.clone(), beta: b2 },
                    &c * tc,
                );
                let word: Vec<Gen> = wb.word().into_iter().map(Gen::Sb).collect();
                let res = self.rmul_word(&base, &word);
                for (m2, c2) in res.terms {
                    out.add_term(m2, c2);
                }
            }
        } else {
            out.add_term(m, c);
        }
    }

    // ----- generator words for diagrams -----

    /// The word for the contraction e_{i,l}, obtained by conjugating e_1
    /// with the transpositions (1 i) and (1bar lbar).
    fn word_e(&self, i: usize, l: usize) -> Vec<Gen> {
        let mut conj: Vec<Gen> = Vec::new();
        if i > 1 {
            conj.extend(Perm::transposition(self.r, 1, i).word().into_iter().map(Gen::S));
        }
        if l > 1 {
            conj.extend(Perm::transposition(self.t, 1, l).word().into_iter().map(Gen::Sb));
        }
        let mut w = conj.clone();
        w.push(Gen::E1);
        w.extend(conj);
        debug_assert!({
            let (d, circ) = self.eval_word_diagram(&w);
            circ == 0 && d == WalledDiagram::e_ij(self.r, self.t, i, l)
        });
        w
    }

    fn gen_diagram(&self, g: Gen) -> WalledDiagram {
        match g {
            Gen::S(i) => WalledDiagram::s(self.r, self.t, i),
            Gen::Sb(j) => WalledDiagram::sbar(self.r, self.t, j),
            Gen::E1 => WalledDiagram::e1(self.r, self.t),
            _ => panic!("polynomial generators have no diagram"),
        }
    }

    fn eval_word_diagram(&self, word: &[Gen]) -> (WalledDiagram, usize) {
        let mut d = WalledDiagram::identity(self.r, self.t);
        let mut circles = 0;
        for g in word {
            let (next, c) = d.concat(&self.gen_diagram(*g));
            circles += c;
            d = next;
        }
        (d, circles)
    }

    /// A generator word multiplying to the given diagram with no circles.
    pub fn word_of_diagram(&self, d: &WalledDiagram) -> std::sync::Arc<Vec<Gen>> {
        if let Some(w) = self.word_cache.lock().unwrap().get(d) {
            return w.clone();
        }
        let fact = diagram_factorize(d);
        let mut w: Vec<Gen> = Vec::new();
        w.extend(fact.c.0.inverse().word().into_iter().map(Gen::S));
        w.extend(fact.c.1.inverse().word().into_iter().map(Gen::Sb));
        for i in 1..=fact.f {
            w.extend(self.word_e(i, i));
        }
        w.extend(fact.w.0.embed(self.r, fact.f).word().into_iter().map(Gen::S));
        w.extend(fact.w.1.embed(self.t, fact.f).word().into_iter().map(Gen::Sb));
        w.extend(fact.d.0.word().into_iter().map(Gen::S));
        w.extend(fact.d.1.word().into_iter().map(Gen::Sb));
        let (check, circ) = self.eval_word_diagram(&w);
        assert!(circ == 0 && check == *d, "diagram word reconstruction failed");
        let w = std::sync::Arc::new(w);
        self.word_cache.lock().unwrap().insert(d.clone(), w.clone());
        w
    }

    // ----- right multiplication -----

    pub fn rmul_gen(&self, e: &Elem, g: Gen) -> Elem {
        let mut out = Elem::zero();
        for (m, c) in &e.terms {
            let part = self.mono_rmul(m, g);
            out.add_scaled(&part, c);
        }
        out
    }

    pub fn rmul_word(&self, e: &Elem, word: &[Gen]) -> Elem {
        let mut cur = e.clone();
        for g in word {
            cur = self.rmul_gen(&cur, *g);
        }
        cur
    }

    /// Normal form of a word in the generators.
    pub fn nf_word(&self, word: &[Gen]) -> Elem {
        self.rmul_word(&self.one(), word)
    }

    fn mono_rmul(&self, m: &Mono, g: Gen) -> Elem {
        let key = (m.clone(), g);
        if let Some(hit) = self.memo.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let res = guarded(|| self.mono_rmul_inner(m, g));
        self.memo.lock().unwrap().insert(key, res.clone());
        res
    }

    fn mono_rmul_inner(&self, m: &Mono, g: Gen) -> Elem {
        match g {
            Gen::S(i) => {
                assert!(i >= 1 && i < self.r);
                let (d, circ) = m.diag.concat(&self.gen_diagram(g));
                assert_eq!(circ, 0);
                Elem::single(Mono { alpha: m.alpha.clone(), diag: d, beta: m.beta.clone() }, Rat::one())
            }
            Gen::Sb(j) => {
                assert!(j >= 1 && j < self.t);
                if m.beta[j - 1] > 0 {
                    // xbar_j sbar_j = sbar_j xbar_{j+1} + 1
                    let mut m0 = m.clone();
                    m0.beta[j - 1] -= 1;
                    let rec = self.mono_rmul(&m0, g);
                    let mut out = self.rmul_gen(&rec, Gen::Xb(j + 1));
                    out.add_term(m0, Rat::one());
                    out
                } else if m.beta[j] > 0 {
                    // xbar_{j+1} sbar_j = sbar_j xbar_j - 1
                    let mut m0 = m.clone();
                    m0.beta[j] -= 1;
                    let rec = self.mono_rmul(&m0, g);
                    let mut out = self.rmul_gen(&rec, Gen::Xb(j));
                    out.add_term(m0, -Rat::one());
                    out
                } else {
                    let (d, circ) = m.diag.concat(&self.gen_diagram(g));
                    assert_eq!(circ, 0);
                    Elem::single(
                        Mono { alpha: m.alpha.clone(), diag: d, beta: m.beta.clone() },
                        Rat::one(),
                    )
                }
            }
            Gen::Xb(j) => {
                assert!(j >= 1 && j <= self.t);
                let mut m2 = m.clone();
                m2.beta[j - 1] += 1;
                let mut out = Elem::zero();
                self.reduce_into(&mut out, m2, Rat::one());
                out
            }
            Gen::X(i) => {
                assert!(i >= 1 && i <= self.r);
                // x_i = x'_i - sum of transpositions (j i), j < i
                let mut out = self.mono_rmul_xprime(m, i);
                for j in 1..i {
                    let tr = WalledDiagram::from_perms(
                        self.r,
                        self.t,
                        &Perm::transposition(self.r, j, i),
                        &Perm::identity(self.t),
                    );
                    let (d, circ) = m.diag.concat(&tr);
                    assert_eq!(circ, 0);
                    out.add_term(
                        Mono { alpha: m.alpha.clone(), diag: d, beta: m.beta.clone() },
                        -Rat::one(),
                    );
                }
                out
            }
            Gen::E1 => self.mono_rmul_e1(m),
        }
    }

    /// Right multiplication by the dotted strand element x'_i = x_i + L_i.
    fn mono_rmul_xprime(&self, m: &Mono, i: usize) -> Elem {
        let key = (m.clone(), i);
        if let Some(hit) = self.memo_xp.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let res = guarded(|| self.mono_rmul_xprime_inner(m, i));
        self.memo_xp.lock().unwrap().insert(key, res.clone());
        res
    }

    fn mono_rmul_xprime_inner(&self, m: &Mono, i: usize) -> Elem {
        if let Some(l) = (1..=self.t).rev().find(|&l| m.beta[l - 1] > 0) {
            // commute x'_i left past xbar_l:
            // xbar_l x'_i = x'_i xbar_l + x'_i e_{i,l} - e_{i,l} x'_i
            let mut m0 = m.clone();
            m0.beta[l - 1] -= 1;
            let a = self.mono_rmul_xprime(&m0, i);
            let ew = self.word_e(i, l);
            let mut out = self.rmul_gen(&a, Gen::Xb(l));
            out.add(&self.rmul_word(&a, &ew));
            let b = self.rmul_word(&Elem::single(m0, Rat::one()), &ew);
            for (bm, bc) in &b.terms {
                out.add_scaled(&self.mono_rmul_xprime(bm, i), &-bc.clone());
            }
            return out;
        }
        // slide the dot along the strand entering at the bottom label i
        let mut out = Elem::zero();
        match m.diag.partner_of(BottomPlain(i)) {
            TopPlain(j) => {
                // exits on top as x'_j = x_j + L_j
                let mut a2 = m.alpha.clone();
                a2[j - 1] += 1;
                self.reduce_into(
                    &mut out,
                    Mono { alpha: a2, diag: m.diag.clone(), beta: m.beta.clone() },
                    Rat::one(),
                );
                for jp in 1..j {
                    let tr = WalledDiagram::from_perms(
                        self.r,
                        self.t,
                        &Perm::transposition(self.r, jp, j),
                        &Perm::identity(self.t),
                    );
                    let (d, circ) = tr.concat(&m.diag);
                    assert_eq!(circ, 0);
                    out.add_term(
                        Mono { alpha: m.alpha.clone(), diag: d, beta: m.beta.clone() },
                        Rat::one(),
                    );
                }
            }
            BottomBar(l) => {
                // the strand turns around: D x'_i = -D xbar'_l
                let mut b2 = m.beta.clone();
                b2[l - 1] += 1;
                self.reduce_into(
                    &mut out,
                    Mono { alpha: m.alpha.clone(), diag: m.diag.clone(), beta: b2 },
                    -Rat::one(),
                );
                for lp in 1..l {
                    let tr = WalledDiagram::from_perms(
                        self.r,
                        self.t,
                        &Perm::identity(self.r),
                        &Perm::transposition(self.t, lp, l),
                    );
                    let (d, circ) = m.diag.concat(&tr);
                    assert_eq!(circ, 0);
                    out.add_term(
                        Mono { alpha: m.alpha.clone(), diag: d, beta: m.beta.clone() },
                        -Rat::one(),
                    );
                }
            }
            other => panic!("bottom plain strand cannot end at {:?}", other),
        }
        out
    }

    fn mono_rmul_e1(&self, m: &Mono) -> Elem {
        assert!(self.r >= 1 && self.t >= 1);
        if let Some(l) = (2..=self.t).rev().find(|&l| m.beta[l - 1] > 0) {
            // xbar_l e_1 = e_1 xbar_l + e_1 Lbar_l - Lbar_l e_1
            let mut m0 = m.clone();
            m0.beta[l - 1] -= 1;
            let a = self.mono_rmul_e1(&m0);
            let mut out = self.rmul_gen(&a, Gen::Xb(l));
            for jp in 1..l {
                let word: Vec<Gen> =
                    Perm::transposition(self.t, jp, l).word().into_iter().map(Gen::Sb).collect();
                out.add(&self.rmul_word(&a, &word));
                let b = self.rmul_word(&Elem::single(m0.clone(), Rat::one()), &word);
                for (bm, bc) in &b.terms {
                    out.add_scaled(&self.mono_rmul_e1(bm), &-bc.clone());
                }
            }
            return out;
        }
        let b1 = m.beta[0];
        if b1 > 0 {
            if m.diag.partner_of(BottomPlain(1)) == BottomBar(1) {
                // the bottom contraction closes a loop decorated with b1 dots
                return Elem::single(
                    Mono { alpha: m.alpha.clone(), diag: m.diag.clone(), beta: vec![0; self.t] },
                    self.omega_bar(b1),
                );
            }
            // contract through xbar_1^b1 e_1 = sum a_{b1,i} x_1^i e_1
            let row = self.t_row(b1);
            let base = Mono { alpha: m.alpha.clone(), diag: m.diag.clone(), beta: vec![0; self.t] };
            let mut out = Elem::zero();
            let mut cur = Elem::single(base, Rat::one());
            for coeff in row.iter() {
                if !coeff.is_zero() {
                    out.add_scaled(&self.rmul_gen(&cur, Gen::E1), coeff);
                }
                cur = self.rmul_gen(&cur, Gen::X(1));
            }
            return out;
        }
        let (d, circ) = m.diag.concat(&self.gen_diagram(Gen::E1));
        let mut c = Rat::one();
        for _ in 0..circ {
            c *= self.params.omega_seed[0].clone();
        }
        Elem::single(Mono { alpha: m.alpha.clone(), diag: d, beta: m.beta.clone() }, c)
    }

    // ----- products, the anti-involution, bases -----

    pub fn multiply(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (m, c) in &b.terms {
            let mut cur = a.clone();
            for (i, &e) in m.alpha.iter().enumerate() {
                for _ in 0..e {
                    cur = self.rmul_gen(&cur, Gen::X(i + 1));
                }
            }
            cur = self.rmul_word(&cur, &self.word_of_diagram(&m.diag));
            for (j, &e) in m.beta.iter().enumerate() {
                for _ in 0..e {
                    cur = self.rmul_gen(&cur, Gen::Xb(j + 1));
                }
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// The anti-involution fixing the generators and reversing products.
    pub fn sigma(&self, e: &Elem) -> Elem {
        let mut out = Elem::zero();
        for (m, c) in &e.terms {
            let start = Elem::single(
                Mono {
                    alpha: vec![0; self.r],
                    diag: WalledDiagram::identity(self.r, self.t),
                    beta: m.beta.clone(),
                },
                Rat::one(),
            );
            let mut cur = self.rmul_word(&start, &self.word_of_diagram(&m.diag.flip()));
            for (i, &ex) in m.alpha.iter().enumerate() {
                for _ in 0..ex {
                    cur = self.rmul_gen(&cur, Gen::X(i + 1));
                }
            }
            out.add_scaled(&cur, c);
        }
        out
    }

    /// The monomial basis: all x^alpha D xbar^beta with exponents below k.
    pub fn basis(&self) -> Vec<Mono> {
        assert!(self.reduce);
        let diagrams = all_diagrams(self.r, self.t);
        let mut out = Vec::new();
        for alpha in exponent_tuples(self.r, self.k) {
            for d in &diagrams {
                for beta in exponent_tuples(self.t, self.k) {
                    out.push(Mono { alpha: alpha.clone(), diag: d.clone(), beta });
                }
            }
        }
        out
    }

    /// Checks the defining relations as normal form identities; returns the
    /// descriptions of any failures.
    pub fn verify_presentation(&self, power_bound: usize) -> Vec<String> {
        use Gen::*;
        let mut checks: Vec<(String, Vec<Gen>, Elem)> = Vec::new();
        let nf = |w: &[Gen]| self.nf_word(w);
        let mut eq = |name: &str, lhs: Vec<Gen>, rhs: Elem| {
            checks.push((name.to_string(), lhs, rhs));
        };
        let (r, t) = (self.r, self.t);
        for i in 1..r {
            eq(&format!("s_{i}^2 = 1"), vec![S(i), S(i)], self.one());
            for ip in i + 2..r {
                eq(&format!("s_{i} s_{ip} commute"), vec![S(i), S(ip)], nf(&[S(ip), S(i)]));
            }
            if i + 1 < r {
                eq(
                    &format!("braid s_{i} s_{}", i + 1),
                    vec![S(i), S(i + 1), S(i)],
                    nf(&[S(i + 1), S(i), S(i + 1)]),
                );
            }
            for j in 1..t {
                eq(&format!("s_{i} sbar_{j} commute"), vec![S(i), Sb(j)], nf(&[Sb(j), S(i)]));
            }
        }
        for j in 1..t {
            eq(&format!("sbar_{j}^2 = 1"), vec![Sb(j), Sb(j)], self.one());
            if j + 1 < t {
                eq(
                    &format!("braid sbar_{j} sbar_{}", j + 1),
                    vec![Sb(j), Sb(j + 1), Sb(j)],
                    nf(&[Sb(j + 1), Sb(j), Sb(j + 1)]),
                );
            }
        }
        if r >= 1 && t >= 1 {
            let mut e1sq = self.nf_word(&[E1]);
            e1sq.scale(&self.params.omega_seed[0]);
            eq("e_1^2 = omega_0 e_1", vec![E1, E1], e1sq);
            if r >= 2 {
                eq("e_1 s_1 e_1 = e_1", vec![E1, S(1), E1], nf(&[E1]));
            }
            if t >= 2 {
                eq("e_1 sbar_1 e_1 = e_1", vec![E1, Sb(1), E1], nf(&[E1]));
            }
            eq("e_1 (x_1 + xbar_1) = 0", vec![E1, X(1)], {
                let mut v = nf(&[E1, Xb(1)]);
                v.scale(&-Rat::one());
                v
            });
            eq("(x_1 + xbar_1) e_1 = 0", vec![X(1), E1], {
                let mut v = nf(&[Xb(1), E1]);
                v.scale(&-Rat::one());
                v
            });
            eq(
                "x_1 xbar_1 - xbar_1 x_1 = e_1 x_1 - x_1 e_1",
                vec![X(1), Xb(1)],
                {
                    let mut v = nf(&[Xb(1), X(1)]);
                    v.add(&nf(&[E1, X(1)]));
                    v.sub(&nf(&[X(1), E1]));
                    v
                },
            );
            for i in 2..r {
                eq(&format!("e_1 s_{i} commute"), vec![E1, S(i)], nf(&[S(i), E1]));
            }
            for j in 2..t {
                eq(&format!("e_1 sbar_{j} commute"), vec![E1, Sb(j)], nf(&[Sb(j), E1]));
            }
            for a in 0..=power_bound {
                let mut w = vec![E1];
                w.extend(std::iter::repeat(X(1)).take(a));
                w.push(E1);
                let mut rhs = nf(&[E1]);
                rhs.scale(&self.omega(a));
                eq(&format!("e_1 x_1^{a} e_1 = omega_{a} e_1"), w, rhs);
                let mut wb = vec![E1];
                wb.extend(std::iter::repeat(Xb(1)).take(a));
                wb.push(E1);
                let mut rhsb = nf(&[E1]);
                rhsb.scale(&self.omega_bar(a));
                eq(&format!("e_1 xbar_1^{a} e_1 = omegabar_{a} e_1"), wb, rhsb);
            }
            if r >= 2 {
                eq(
                    "s_1 e_1 s_1 x_1 = x_1 s_1 e_1 s_1",
                    vec![S(1), E1, S(1), X(1)],
                    nf(&[X(1), S(1), E1, S(1)]),
                );
            }
            if t >= 2 {
                eq(
                    "sbar_1 e_1 sbar_1 xbar_1 = xbar_1 sbar_1 e_1 sbar_1",
                    vec![Sb(1), E1, Sb(1), Xb(1)],
                    nf(&[Xb(1), Sb(1), E1, Sb(1)]),
                );
            }
        }
        for i in 1..r {
            if t >= 1 {
                eq(&format!("s_{i} xbar_1 commute"), vec![S(i), Xb(1)], nf(&[Xb(1), S(i)]));
            }
        }
        for j in 1..t {
            if r >= 1 {
                eq(&format!("sbar_{j} x_1 commute"), vec![Sb(j), X(1)], nf(&[X(1), Sb(j)]));
            }
        }
        for i in 2..r {
            if r >= 1 {
                eq(&format!("s_{i} x_1 commute"), vec![S(i), X(1)], nf(&[X(1), S(i)]));
            }
        }
        if self.reduce && r >= 1 {
            // f(x_1) = 0
            let f = self.params.f_coeffs();
            let mut acc = Elem::zero();
            for b in 0..=self.k {
                let mut w = Vec::new();
                w.extend(std::iter::repeat(X(1)).take(b));
                acc.add_scaled(&nf(&w), &f[self.k - b]);
            }
            if !acc.is_zero() {
                return vec![format!("f(x_1) != 0: {}", acc)];
            }
        }
        let mut failures = Vec::new();
        for (name, lhs, rhs) in checks {
            let got = self.nf_word(&lhs);
            if got != rhs {
                failures.push(format!("{}: got {} expected {}", name, got, rhs));
            }
        }
        failures
    }

    // ----- persistent cache -----

    pub fn save_cache(&self, path: &std::path::Path) -> std::io::Result<()> {
        let memo = self.memo.lock().unwrap();
        let entries: Vec<(Mono, Gen, Vec<(Mono, String)>)> = memo
            .iter()
            .map(|((m, g), e)| {
                (
                    m.clone(),
                    *g,
                    e.terms.iter().map(|(tm, tc)| (tm.clone(), rat_to_string(tc))).collect(),
                )
            })
            .collect();
        let doc = serde_json::json!({
            "params": self.params.cache_key(),
            "r": self.r,
            "t": self.t,
            "entries": serde_json::to_value(&entries).unwrap(),
        });
        std::fs::write(path, serde_json::to_string(&doc).unwrap())
    }

    pub fn load_cache(&self, path: &std::path::Path) -> std::io::Result<usize> {
        let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if doc["params"] != serde_json::json!(self.params.cache_key())
            || doc["r"] != serde_json::json!(self.r)
            || doc["t"] != serde_json::json!(self.t)
        {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                "cache was written for different parameters",
            ));
        }
        let entries: Vec<(Mono, Gen, Vec<(Mono, String)>)> =
            serde_json::from_value(doc["entries"].clone())?;
        let n = entries.len();
        let mut memo = self.memo.lock().unwrap();
        for (m, g, terms) in entries {
            let mut e = Elem::zero();
            for (tm, tc) in terms {
                e.add_term(tm, rat_from_str(&tc).expect("bad rational in cache"));
            }
            memo.insert((m, g), e);
        }
        Ok(n)
    }
}

/// Splits a permutation diagram into its plain and bar permutations.
pub fn perm_parts(d: &WalledDiagram) -> (Perm, Perm) {
    let r = d.r;
    let t = d.t;
    let mut top = vec![0; r];
    for l in 1..=r {
        match d.partner_of(TopPlain(l)) {
            BottomPlain(j) => top[l - 1] = j,
            other => panic!("not a permutation diagram: {:?}", other),
        }
    }
    let mut bar = vec![0; t];
    for l in 1..=t {
        match d.partner_of(crate::diagrams::StrandEnd::TopBar(l)) {
            BottomBar(j) => bar[l - 1] = j,
            other => panic!("not a permutation diagram: {:?}", other),
        }
    }
    (Perm::from_images(top), Perm::from_images(bar))
}

fn exponent_tuples(len: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for base in &out {
            for v in 0..bound {
                let mut b = base.clone();
                b.push(v);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn ctx_level_one(omega0: i64) -> AlgCtx {
        let p = Parameters::new(vec![rat(0)], Some(vec![rat(0)]), vec![rat(omega0)]);
        AlgCtx::new(1, 1, p)
    }

    fn ctx_sw(r: usize, t: usize) -> AlgCtx {
        AlgCtx::new(r, t, Parameters::schur_weyl(2, 2, 0, 2))
    }

    #[test]
    fn level_one_matches_diagram_concatenation() {
        let ctx = ctx_level_one(7);
        let basis = ctx.basis();
        assert_eq!(basis.len(), 2);
        for a in &basis {
            for b in &basis {
                let prod = ctx.multiply(
                    &Elem::single(a.clone(), Rat::one()),
                    &Elem::single(b.clone(), Rat::one()),
                );
                let (d, circ) = a.diag.concat(&b.diag);
                let mut expect = Elem::single(
                    Mono { alpha: vec![0], diag: d, beta: vec![0] },
                    Rat::one(),
                );
                for _ in 0..circ {
                    expect.scale(&rat(7));
                }
                assert_eq!(prod, expect);
            }
        }
    }

    #[test]
    fn bar_polynomial_matches_bar_roots() {
        // u = (0,0), omega = (0,4) forces g(xbar) = xbar^2 - 4, roots 2, -2
        let ctx = ctx_sw(1, 1);
        let g = ctx.g_coeffs();
        assert_eq!(g.to_vec(), vec![rat(-4), rat(0), rat(1)]);
    }

    #[test]
    fn bar_omega_sequence() {
        let ctx = ctx_sw(1, 1);
        assert_eq!(ctx.omega_bar(0), rat(0));
        assert_eq!(ctx.omega_bar(1), rat(-4));
        assert_eq!(ctx.omega_bar(2), rat(0));
        // the bar side satisfies its own recursion with roots 2, -2:
        // omegabar_l = (2 + -2) omegabar_{l-1} - (2)(-2) omegabar_{l-2}
        assert_eq!(ctx.omega_bar(3), rat(4) * ctx.omega_bar(1));
        assert_eq!(ctx.omega_bar(4), rat(4) * ctx.omega_bar(2));
    }

    #[test]
    fn presentation_holds_small() {
        let ctx = ctx_sw(1, 1);
        assert_eq!(ctx.verify_presentation(4), Vec::<String>::new());
        let ctx = ctx_sw(2, 1);
        assert_eq!(ctx.verify_presentation(3), Vec::<String>::new());
    }

    #[test]
    fn presentation_holds_two_two() {
        let ctx = ctx_sw(2, 2);
        assert_eq!(ctx.verify_presentation(3), Vec::<String>::new());
    }

    #[test]
    fn jucys_murphy_recursion() {
        // s_1 x_1 s_1 = x_2 + s_1
        let ctx = ctx_sw(2, 1);
        let lhs = ctx.nf_word(&[Gen::S(1), Gen::X(1), Gen::S(1)]);
        let mut rhs = ctx.nf_word(&[Gen::X(2)]);
        rhs.add(&ctx.nf_word(&[Gen::S(1)]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn basis_count_and_closure() {
        let ctx = ctx_sw(1, 1);
        let basis = ctx.basis();
        assert_eq!(basis.len(), 4 * 2);
        for m in &basis {
            assert!(m.alpha.iter().chain(&m.beta).all(|&e| e < 2));
        }
    }

    #[test]
    fn associativity_small() {
        let ctx = ctx_sw(1, 1);
        let basis: Vec<Elem> =
            ctx.basis().into_iter().map(|m| Elem::single(m, Rat::one())).collect();
        for a in &basis {
            for b in &basis {
                let ab = ctx.multiply(a, b);
                for c in &basis {
                    let bc = ctx.multiply(b, c);
                    assert_eq!(ctx.multiply(&ab, c), ctx.multiply(a, &bc));
                }
            }
        }
    }

    #[test]
    fn sigma_is_an_anti_involution() {
        let ctx = ctx_sw(2, 1);
        let basis: Vec<Elem> =
            ctx.basis().into_iter().map(|m| Elem::single(m, Rat::one())).collect();
        for a in basis.iter().step_by(3) {
            assert_eq!(ctx.sigma(&ctx.sigma(a)), *a);
            for b in basis.iter().step_by(5) {
                let lhs = ctx.sigma(&ctx.multiply(a, b));
                let rhs = ctx.multiply(&ctx.sigma(b), &ctx.sigma(a));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn cache_round_trip() {
        let ctx = ctx_sw(1, 1);
        ctx.nf_word(&[Gen::E1, Gen::X(1), Gen::E1]);
        let dir = std::env::temp_dir().join("walled-cache-test.json");
        ctx.save_cache(&dir).unwrap();
        let fresh = ctx_sw(1, 1);
        let n = fresh.load_cache(&dir).unwrap();
        assert!(n > 0);
        assert_eq!(
            fresh.nf_word(&[Gen::E1, Gen::X(1), Gen::E1]),
            ctx.nf_word(&[Gen::E1, Gen::X(1), Gen::E1])
        );
        std::fs::remove_file(&dir).ok();
    }
}
