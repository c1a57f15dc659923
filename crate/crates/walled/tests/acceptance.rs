//! End-to-end acceptance checks, one test per criterion. Each test prints
//! a single summary line; run with --nocapture to see them all.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use walled::algebra::{AlgCtx, Elem, Mono};
use walled::cellular::{cell_labels, label_dim, CellCtx};
use walled::combinatorics::{enumerate_bipartitions, standard_tableaux};
use walled::hecke::{to_walled, walled_params, CellKind, HCtx, HElem};
use walled::linalg::Matrix;
use walled::params::Parameters;
use walled::perm::Perm;
use walled::rat::{rat, Rat};
use walled::superalgebra::SuperCtx;
use walled::weightdiag;
use num::One;

fn level_params(k: usize) -> Parameters {
    match k {
        1 => Parameters::new(vec![rat(0)], Some(vec![rat(0)]), vec![rat(1)]),
        2 => Parameters::schur_weyl(2, 2, 0, 2),
        3 => Parameters::new(
            vec![rat(0), rat(1), rat(2)],
            None,
            vec![rat(1), rat(0), rat(0)],
        ),
        _ => panic!("no parameter family at level {}", k),
    }
}

fn mono_elem(m: &Mono) -> Elem {
    Elem::single(m.clone(), Rat::one())
}

#[test]
fn criterion_1_rank_theorem() {
    let cases = [
        (1usize, 1usize, 1usize),
        (1, 2, 2),
        (2, 1, 1),
        (2, 2, 1),
        (2, 1, 2),
        (2, 2, 2),
        (3, 1, 1),
    ];
    let mut rng = StdRng::seed_from_u64(2024);
    for &(k, r, t) in &cases {
        let ctx = AlgCtx::new(r, t, level_params(k));
        let basis = ctx.basis();
        let expected = k.pow((r + t) as u32) * (1..=r + t).product::<usize>();
        assert_eq!(basis.len(), expected, "rank at ({},{},{})", k, r, t);

        // closure of all basis pair products at the two designated cases
        if (k, r, t) == (2, 1, 1) || (k, r, t) == (2, 2, 1) {
            for a in &basis {
                for b in &basis {
                    let p = ctx.multiply(&mono_elem(a), &mono_elem(b));
                    for (m, _) in &p.terms {
                        assert!(
                            m.alpha.iter().chain(&m.beta).all(|&e| (e as usize) < k),
                            "closure at ({},{},{})",
                            k,
                            r,
                            t
                        );
                    }
                }
            }
        }

        for _ in 0..100 {
            let pick = |rng: &mut StdRng| mono_elem(&basis[rng.gen_range(0..basis.len())]);
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let lhs = ctx.multiply(&ctx.multiply(&a, &b), &c);
            let rhs = ctx.multiply(&a, &ctx.multiply(&b, &c));
            assert_eq!(lhs, rhs, "associativity at ({},{},{})", k, r, t);
        }
    }
    println!("criterion 1 (rank theorem, closure, associativity): pass");
}

#[test]
fn criterion_2_diagram_oracle() {
    let omega0 = 5i64;
    let params = Parameters::new(vec![rat(0)], Some(vec![rat(0)]), vec![rat(omega0)]);
    let ctx = AlgCtx::new(2, 2, params);
    let basis = ctx.basis();
    assert_eq!(basis.len(), 24);
    let mut pairs = 0usize;
    for a in &basis {
        for b in &basis {
            let prod = ctx.multiply(&mono_elem(a), &mono_elem(b));
            let (d, circles) = a.diag.concat(&b.diag);
            let mut expect = Elem::single(
                Mono { alpha: vec![0; 2], diag: d, beta: vec![0; 2] },
                Rat::one(),
            );
            for _ in 0..circles {
                expect.scale(&rat(omega0));
            }
            assert_eq!(prod, expect);
            pairs += 1;
        }
    }
    assert_eq!(pairs, 576);
    println!("criterion 2 (level-one diagram oracle, 576 pairs): pass");
}

#[test]
fn criterion_3_cellular_counts() {
    for (r, t) in [(1usize, 1usize), (2, 1), (2, 2)] {
        let labels = cell_labels(r, t);
        let total: usize = labels.iter().map(|l| label_dim(r, t, l).pow(2)).sum();
        assert_eq!(total, 2usize.pow((r + t) as u32) * (1..=r + t).product::<usize>());
        if (r, t) == (2, 2) {
            let by_f: Vec<usize> = (0..=2)
                .map(|f| {
                    labels
                        .iter()
                        .filter(|l| l.f == f)
                        .map(|l| label_dim(r, t, l).pow(2))
                        .sum()
                })
                .collect();
            assert_eq!(by_f, vec![64, 256, 64]);
        }
    }

    // the weakly cellular basis is a basis: the change of basis to regular
    // monomials is invertible
    for (r, t) in [(1usize, 1usize), (2, 1)] {
        let ctx = AlgCtx::new(r, t, Parameters::schur_weyl(2, 2, 0, 2));
        let n = ctx.basis().len();
        let cells = CellCtx::new(&ctx);
        let labels = cell_labels(r, t);
        let mut rows = Vec::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            let d = label_dim(r, t, l);
            for left in 0..d {
                for right in 0..d {
                    rows.push(cells.expand(&cells.basis_element(i, left, right)));
                }
            }
        }
        assert_eq!(rows.len(), n);
        assert_eq!(Matrix::from_rows(rows).rank(), n, "transition at ({},{})", r, t);
    }
    println!("criterion 3 (cell dimension counts, invertible transition): pass");
}

#[test]
fn criterion_4_hecke_layer() {
    let hctx = |r: usize| HCtx::new(r, rat(1), rat(-2));
    for r in 1..=3usize {
        let h = hctx(r);
        assert_eq!(h.verify_presentation(), Vec::<String>::new());
        let index = h.basis_index();
        let n = index.len();
        assert_eq!(n, (1 << r) * (1..=r).product::<usize>());
        for kind in [CellKind::X, CellKind::Y, CellKind::XBar, CellKind::YBar] {
            let cb = h.cell_basis(kind);
            assert_eq!(cb.len(), n);
            let rows: Vec<Vec<Rat>> = cb.iter().map(|(_, _, _, e)| h.to_vector(e, &index)).collect();
            assert_eq!(Matrix::from_rows(rows).rank(), n, "{:?} at r={}", kind, r);
        }

        // pi_a h pi_b = 0 whenever a + b > r
        if r >= 2 {
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
                        assert!(h.multiply(&mid, &pb).is_zero());
                    }
                }
            }
        }
    }

    // cell module dimensions are counts of standard tableaux
    let h = hctx(3);
    for lambda in enumerate_bipartitions(3) {
        let gen = h.delta_generator(&lambda);
        let spanning: Vec<HElem> = Perm::all(3).iter().map(|w| h.rmul_perm(&gen, w)).collect();
        let expect = standard_tableaux(&lambda.conjugate().swapped()).len();
        assert_eq!(h.span_dimension(&spanning), expect);
    }

    // the embedding into the walled Brauer algebra with no bar strands is
    // an algebra map on 100 random basis pairs
    let h = hctx(2);
    let b = AlgCtx::new(2, 0, walled_params(&h.u1, &h.u2));
    let basis = h.basis();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let a = HElem::single(basis[rng.gen_range(0..basis.len())].clone(), Rat::one());
        let c = HElem::single(basis[rng.gen_range(0..basis.len())].clone(), Rat::one());
        let lhs = to_walled(&b, &h.multiply(&a, &c));
        let rhs = b.multiply(&to_walled(&b, &a), &to_walled(&b, &c));
        assert_eq!(lhs, rhs);
    }
    println!("criterion 4 (Hecke bases, vanishing, cell dims, embedding): pass");
}

#[test]
fn criterion_5_schur_weyl_duality() {
    let s = SuperCtx::new(2, 2, 0, 2, 1, 1);
    let alg = AlgCtx::new(1, 1, Parameters::schur_weyl(2, 2, 0, 2));
    assert_eq!(s.verify_operator_relations(&alg), Vec::<String>::new());
    assert_eq!(alg.omega(0), rat(0));
    assert_eq!(alg.omega(1), rat(4));
    for a in 0..=4usize {
        assert_eq!(s.e1_sandwich_scalar(a, false), alg.omega(a), "omega_{}", a);
    }
    let (rank, kernel) = s.phi_rank(&alg, 11);
    assert_eq!((rank, kernel.len()), (8, 0));
    assert_eq!(s.commutant_dim(&alg, 3), 8);

    // gl(1|1): the map drops rank and the kernel elements certify it by
    // acting as zero on the whole module
    let s2 = SuperCtx::new(1, 1, 0, 1, 1, 1);
    let alg2 = AlgCtx::new(1, 1, Parameters::schur_weyl(1, 1, 0, 1));
    let (rank2, kernel2) = s2.phi_rank(&alg2, 11);
    assert!(rank2 < 8 && !kernel2.is_empty());
    for e in &kernel2 {
        assert!(!e.is_zero());
        for b in s2.basis() {
            let v = walled::superalgebra::MVec::single(b, Rat::one());
            assert!(s2.apply_elem(&alg2, e, &v).is_zero());
        }
    }
    println!("criterion 5 (operator relations, phi rank, commutant): pass");
}

#[test]
fn criterion_6_highest_weight_vectors() {
    for (r, t) in [(2usize, 0usize), (1, 1)] {
        let s = SuperCtx::new(2, 2, 0, 2, r, t);
        let alg = AlgCtx::new(r, t, Parameters::schur_weyl(2, 2, 0, 2));
        let cells = CellCtx::new(&alg);
        for label in cell_labels(r, t) {
            let vecs = s.hwv_construct(&alg, &label);
            for v in &vecs {
                assert!(s.is_highest_weight(v), "label {:?}", label);
            }
            assert_eq!(s.span_dim(&vecs), vecs.len(), "label {:?}", label);
            assert_eq!(
                vecs.len(),
                s.hwv_kernel_dim(&s.triple_weight(&label)),
                "label {:?}",
                label
            );
            assert!(s.hom_kac_dim(&alg, &cells, &label) >= 1, "label {:?}", label);
        }
    }
    println!("criterion 6 (hwv counts, raising operators, intertwiners): pass");
}

#[test]
fn criterion_7_weight_diagrams() {
    use weightdiag::{Symbol, WeightDiagram};
    let d = WeightDiagram::from_symbols([
        (1, Symbol::Cross),
        (2, Symbol::Cross),
        (4, Symbol::Cross),
        (5, Symbol::Greater),
        (7, Symbol::Cross),
        (8, Symbol::Less),
        (10, Symbol::Less),
    ]);
    let top = weightdiag::lambda_top(&d);
    assert_eq!(top.crosses(), vec![3, 6, 9, 11]);
    assert_eq!(top.vertices_with(Symbol::Greater), vec![5]);
    assert_eq!(top.vertices_with(Symbol::Less), vec![8, 10]);

    for (r, t, m, n) in [(1usize, 1usize, 2usize, 2usize), (2, 1, 3, 3)] {
        let (q, p) = (0i64, -(m as i64) - 1);
        for label in cell_labels(r, t) {
            let w = weightdiag::triple_to_weight(&label, m, n, p, q);
            assert_eq!(weightdiag::weight_to_triple(&w, r, t, p, q).unwrap(), label);
        }
    }

    for k in 0..=2i64 {
        let (m, n, q) = (3usize, 3usize, 0i64);
        let p = q - m as i64 - k;
        for r in 0..=3usize {
            for lam in enumerate_bipartitions(r) {
                if weightdiag::kleshchev_level2(&lam, k) {
                    assert!(
                        weightdiag::tilting_criterion_as_top(&lam, m, n, p, q),
                        "k={} lam={:?}",
                        k,
                        lam
                    );
                }
            }
        }
    }
    println!("criterion 7 (lambda-top example, roundtrips, Kleshchev): pass");
}

#[test]
fn criterion_8_parameter_engine() {
    for (m, n, p, q) in [(2i64, 2i64, 0i64, 2i64), (3, 2, -1, 4), (1, 3, 2, 7)] {
        let params = Parameters::schur_weyl(m, n, p, q);
        let omega = params.omega_sequence(11);
        assert_eq!(omega[0], rat(m - n));
        assert_eq!(omega[1], rat(n * q - m * p));
        for a in 2..=10usize {
            let expect = rat(m - p - q) * &omega[a - 1] - rat(p) * rat(q - m) * &omega[a - 2];
            assert_eq!(omega[a], expect, "omega_{} at ({},{},{},{})", a, m, n, p, q);
        }
    }

    let s = SuperCtx::new(2, 2, 0, 2, 1, 1);
    let alg = AlgCtx::new(1, 1, Parameters::schur_weyl(2, 2, 0, 2));
    for a in 0..=3usize {
        assert_eq!(s.e1_sandwich_scalar(a, true), alg.omega_bar(a), "omega_bar_{}", a);
    }
    println!("criterion 8 (omega recursion, bar omega oracle): pass");
}
