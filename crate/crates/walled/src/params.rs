//! Parameter data for level k: the cyclotomic roots u_1..u_k, optional bar
//! roots, and the omega sequence seeded by omega_0..omega_{k-1}.
//!
//! The higher omega_a are forced by admissibility: writing
//! f(x) = x^k + a_1 x^{k-1} + ... + a_k for the defining polynomial,
//! omega_l = -(a_1 omega_{l-1} + ... + a_k omega_{l-k}).

use crate::rat::{rat, rat_to_string, Rat};
use num::{One, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parameters {
    pub k: usize,
    pub u: Vec<Rat>,
    pub ubar: Option<Vec<Rat>>,
    /// Seeds omega_0 .. omega_{k-1}.
    pub omega_seed: Vec<Rat>,
}

impl Parameters {
    pub fn new(u: Vec<Rat>, ubar: Option<Vec<Rat>>, omega_seed: Vec<Rat>) -> Self {
        let k = u.len();
        assert!(k >= 1, "need at least one cyclotomic root");
        assert_eq!(omega_seed.len(), k, "need omega_0..omega_{{k-1}}");
        if let Some(ub) = &ubar {
            assert_eq!(ub.len(), k);
        }
        Parameters { k, u, ubar, omega_seed }
    }

    /// Parameters matching the action on mixed tensor powers of the natural
    /// gl(m|n) module twisted through the Kac module K(lambda_pq).
    pub fn schur_weyl(m: i64, n: i64, p: i64, q: i64) -> Self {
        let u = vec![rat(-p), rat(m - q)];
        let ubar = vec![rat(q), rat(p - n)];
        let omega_seed = vec![rat(m - n), rat(n * q - m * p)];
        Parameters::new(u, Some(ubar), omega_seed)
    }

    /// Coefficients of f(x) = prod (x - u_i) as [1, a_1, ..., a_k],
    /// highest degree first.
    pub fn f_coeffs(&self) -> Vec<Rat> {
        poly_from_roots(&self.u)
    }

    pub fn g_roots(&self) -> &[Rat] {
        self.ubar.as_ref().expect("bar roots not set").as_slice()
    }

    /// omega_0 .. omega_{len-1}, extending the seed by the admissibility
    /// recursion.
    pub fn omega_sequence(&self, len: usize) -> Vec<Rat> {
        let a = self.f_coeffs();
        let mut omega = self.omega_seed.clone();
        omega.truncate(len);
        while omega.len() < len {
            let l = omega.len();
            let mut next = Rat::zero();
            for i in 1..=self.k {
                next -= &a[i] * &omega[l - i];
            }
            omega.push(next);
        }
        omega
    }

    pub fn omega(&self, a: usize) -> Rat {
        self.omega_sequence(a + 1)[a].clone()
    }

    /// Stable identifier used to key structure constant caches.
    pub fn cache_key(&self) -> String {
        let fmt = |v: &[Rat]| v.iter().map(rat_to_string).collect::<Vec<_>>().join(",");
        let ub = self.ubar.as_ref().map_or_else(|| "-".into(), |v| fmt(v));
        format!("k{};u{};ub{};w{}", self.k, fmt(&self.u), ub, fmt(&self.omega_seed))
    }
}

/// Monic polynomial with the given roots, coefficients highest degree first.
pub fn poly_from_roots(roots: &[Rat]) -> Vec<Rat> {
    let mut c = vec![Rat::one()];
    for r in roots {
        c.push(Rat::zero());
        for i in (1..c.len()).rev() {
            let v = &c[i] - &(r * &c[i - 1]);
            c[i] = v;
        }
    }
    c
}
