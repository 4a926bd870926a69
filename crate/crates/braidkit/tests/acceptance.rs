//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Every check is exact (zero tolerance); spectral grids are
//! deterministic under fixed seeds.

mod common;

use braidkit::baxterize::{CurrentR, SpectralSample};
use braidkit::fock::{
    boson_ops, ccr_check, eval_target_rep, mre_bosonization, relations_hold, FockBasis, FockMat,
};
use braidkit::ncalg::{
    build_presentation, det_re, elem_sym, generator_matrix, power_sum_re, power_sum_rtt,
    trace_power, GenId, IdealOracle, MatOverAlg, Membership, NCPoly, PresKind,
};
use braidkit::scalars::{qnum, QRat};
use braidkit::symmetries::{BiRank, Symmetry};
use braidkit::tensors::{flip, promote, LinOp};
use braidkit::yangian::{
    auxiliary_identities, build_yangian, det_centrality_abstract, eval_morphism_check,
    eval_target, expansion_equivalence_check, rtt_pair_presentation, weight_one_matches_mre,
    CurrentImage, RttCurrentImage, YangianMode,
};
use num_rational::BigRational;
use num_traits::One;

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn nonint_points(seed: u64, count: usize) -> Vec<QRat> {
    SpectralSample::generate_where(seed, count, |p| !p.denom().is_one()).qrat_points()
}

fn pair_grid(seed: u64, nu: usize, nv: usize) -> Vec<(QRat, QRat)> {
    let pts = nonint_points(seed, nu + nv);
    let mut out = Vec::new();
    for u in &pts[..nu] {
        for v in &pts[nu..] {
            out.push((u.clone(), v.clone()));
        }
    }
    out
}

fn jordan_parameter_pairs() -> Vec<(BigRational, BigRational)> {
    let pts = SpectralSample::generate(1701, 10).points;
    (0..5)
        .map(|i| (pts[2 * i].clone(), pts[2 * i + 1].clone()))
        .collect()
}

fn all_entries_member(oracle: &IdealOracle, m: &MatOverAlg) -> bool {
    let d = m.dim();
    for r in 0..d {
        for c in 0..d {
            let e = m.get(r, c);
            if !e.is_zero() && !oracle.membership(e).unwrap().is_member() {
                return false;
            }
        }
    }
    true
}

fn constant_suite_symmetries() -> Vec<(String, Symmetry)> {
    let mut out = vec![
        ("standard(2)".to_string(), Symmetry::standard(2)),
        ("standard(3)".to_string(), Symmetry::standard(3)),
        ("flip(2)".to_string(), Symmetry::flip(2)),
        ("flip(3)".to_string(), Symmetry::flip(3)),
    ];
    for (a, b) in jordan_parameter_pairs() {
        out.push((format!("jordan({a},{b})"), Symmetry::jordan(&a, &b)));
    }
    out
}

#[test]
fn criterion_01_constant_structure_suite() {
    for (name, sym) in constant_suite_symmetries() {
        let n = sym.n();
        // Yang-Baxter on three legs
        let r1 = sym.r_at(1, 3);
        let r2 = sym.r_at(2, 3);
        assert_eq!(&(&r1 * &r2) * &r1, &(&r2 * &r1) * &r2, "YBE for {name}");
        // quadratic condition
        let i2 = LinOp::identity(n, 2);
        let lhs = &i2.scale(sym.q()) - sym.r();
        let rhs = &i2.scale(&sym.q().inverse().unwrap()) + sym.r();
        assert!((&lhs * &rhs).is_zero(), "quadratic condition for {name}");
        // defining contraction of the skew-inverse
        let contraction = (&sym.r_at(1, 3) * &sym.psi().place_on_legs(3, 2).unwrap())
            .partial_trace(2)
            .unwrap();
        assert_eq!(contraction, flip(n), "skew-inverse contraction for {name}");
        // B and C commute with R pairwise
        for x in [sym.b_op(), sym.c_op()] {
            let pair = &x.place_on_legs(2, 1).unwrap() * &x.place_on_legs(2, 2).unwrap();
            assert_eq!(sym.r() * &pair, &pair * sym.r(), "pair commutation for {name}");
        }
        // Tr_{R(2)} R_12 = I
        assert_eq!(
            sym.r().r_trace(&[2], sym.c_op()).unwrap(),
            LinOp::identity(n, 1),
            "R-trace normalization for {name}"
        );
        // conjugation invariance on a basis of single-leg operators
        for i in 0..n {
            for j in 0..n {
                let x = LinOp::from_fn(n, 1, |r, c| {
                    if (r, c) == (i, j) {
                        QRat::one()
                    } else {
                        QRat::zero()
                    }
                });
                assert!(sym.conjugation_invariance(&x), "E_{i}{j} invariance for {name}");
            }
        }
    }
    println!("criterion 01 constant-structure suite: PASS");
}

#[test]
fn criterion_02_birank_and_trace_constants() {
    let cases = [
        (Symmetry::standard(2), 2usize),
        (Symmetry::standard(3), 3),
        (Symmetry::jordan(&rat(1, 1), &rat(0, 1)), 2),
        (Symmetry::jordan(&rat(3, 2), &rat(-2, 5)), 2),
    ];
    for (sym, m) in cases {
        assert_eq!(sym.birank(m + 2), BiRank::Even(m));
        let m_i = m as i64;
        let n = sym.n();
        // Tr_R I = q^-m m_q
        assert_eq!(
            sym.r_trace_one(&LinOp::identity(n, 1)),
            &sym.q_pow(-m_i) * &sym.qint(m_i)
        );
        // B C = q^-2m I
        assert_eq!(
            sym.b_op() * sym.c_op(),
            LinOp::identity(n, 1).scale(&sym.q_pow(-2 * m_i))
        );
        // Tr_{R(1..m)} P^(m) = q^(-m^2)
        let p = sym.skew_symmetrizer(m).unwrap();
        assert_eq!(p.r_trace_full(sym.c_op()).unwrap(), sym.q_pow(-m_i * m_i));
        // full partial-trace ladder
        for k in 0..m {
            let legs: Vec<usize> = (k + 1..=m).collect();
            let traced = p.r_trace(&legs, sym.c_op()).unwrap();
            let factor = &(&sym.q_pow(-m_i * (m_i - k as i64))
                * &(&sym.qint_fact(k as i64) * &sym.qint_fact(m_i - k as i64)))
                / &sym.qint_fact(m_i);
            let target = if k == 0 {
                LinOp::identity(n, 0).scale(&factor)
            } else {
                sym.skew_symmetrizer(k).unwrap().scale(&factor)
            };
            assert_eq!(traced, target, "ladder k = {k}, m = {m}");
        }
    }
    println!("criterion 02 bi-rank and trace constants: PASS");
}

#[test]
fn criterion_03_jordan_golden_values() {
    for (a, b) in [(rat(1, 1), rat(0, 1)), (rat(5, 1), rat(3, 1)), (rat(-2, 3), rat(7, 4))] {
        let sym = Symmetry::jordan(&a, &b);
        let uv = sym.uv_tensors().unwrap();
        let show = |v: &[QRat]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        assert_eq!(
            show(&uv.u),
            format!(
                "{},-1,1,0",
                QRat::from_rational(a.clone())
            ),
            "u table"
        );
        assert_eq!(
            show(&uv.v),
            format!(
                "0,(-1)/(2),(1)/(2),{}",
                QRat::from_rational(-&b / rat(2, 1))
            ),
            "v table"
        );
        let ops = sym.mn_ops(&uv);
        let expect_n = LinOp::from_fn(2, 1, |r, c| match (r, c) {
            (0, 0) | (1, 1) => QRat::one(),
            (0, 1) => QRat::from_rational(&a - &b),
            _ => QRat::zero(),
        });
        assert_eq!(ops.n_op, expect_n);
        assert_eq!(ops.n_scalar().is_some(), a == b, "N scalar iff a = b");
    }
    println!("criterion 03 golden u/v/N values: PASS");
}

#[test]
fn criterion_04_baxterization() {
    let sample = SpectralSample::generate(7, 7);
    let syms = [
        ("flip(2)", Symmetry::flip(2)),
        ("flip(3)", Symmetry::flip(3)),
        ("standard(2)", Symmetry::standard(2)),
        ("standard(3)", Symmetry::standard(3)),
        ("jordan(1,0)", Symmetry::jordan(&rat(1, 1), &rat(0, 1))),
    ];
    for (name, sym) in syms {
        let cr = CurrentR::new(&sym);
        let cert = cr.certify_param_ybe(&sample).unwrap();
        assert!(cert.pass, "grid certification for {name}");
        assert!(cert.triples_checked >= 7 * 6 * 5, "full grid for {name}");
        let rep = cr.unitarity_and_normalize(&sample, 10).unwrap();
        assert!(rep.unitarity_pass, "unitarity profile for {name}");
        assert!(rep.normalized_involutive_pass, "normalized product for {name}");
    }
    println!("criterion 04 baxterization: PASS");
}

#[test]
fn criterion_05_constant_qma_suite() {
    let cap = 3usize;
    let sym = Symmetry::standard(2);
    let (re_pres, l_mat) = build_presentation(&sym, PresKind::Re, &QRat::zero());
    let re_oracle = IdealOracle::new(re_pres.clone(), cap);
    let alphabet = re_pres.alphabet_len();

    // e_1, e_2 central in re, with witnesses, cross-checked brute force
    for k in 1..=2usize {
        let e = elem_sym(&sym, &l_mat, k);
        for g in 0..4u16 {
            let c = e.commutator(&NCPoly::from_gen(g));
            match re_oracle.membership(&c).unwrap() {
                Membership::Member(w) => {
                    // witness recombination is asserted inside membership;
                    // check agreement with the dense independent oracle
                    assert!(common::brute_membership(alphabet, &re_pres.relations, cap, &c));
                    let _ = w;
                }
                Membership::NotMember { .. } => panic!("e_{k} not central"),
            }
        }
    }

    // the projector-determinant matrix identity modulo the ideal
    let m = 2usize;
    let p = promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap());
    let prod = braidkit::ncalg::barred_product(&sym, &vec![l_mat.clone(); m]);
    let det = det_re(&sym, &l_mat, m);
    let target = p.scale_ring(&NCPoly::from_scalar(sym.q_pow(4)).mul(&det));
    assert!(all_entries_member(&re_oracle, &(&(&p * &prod) - &target)));
    assert!(all_entries_member(&re_oracle, &(&(&prod * &p) - &target)));

    // p_3 reduces to Tr_R L^3
    let p3 = power_sum_re(&sym, &l_mat, 3);
    let t3 = trace_power(&sym, &l_mat, 3);
    let query = p3.sub(&t3);
    assert!(re_oracle.membership(&query).unwrap().is_member());
    assert!(common::brute_membership(alphabet, &re_pres.relations, cap, &query));

    // Bethe subalgebra: commutative but not central; p_2 not reducible
    let (rtt_pres, t_mat) = build_presentation(&sym, PresKind::Rtt, &QRat::zero());
    let rtt_oracle = IdealOracle::new(rtt_pres.clone(), cap);
    let p1 = power_sum_rtt(&sym, &t_mat, 1);
    let p2 = power_sum_rtt(&sym, &t_mat, 2);
    let comm = p1.commutator(&p2);
    assert!(rtt_oracle.membership(&comm).unwrap().is_member());
    assert!(common::brute_membership(alphabet, &rtt_pres.relations, cap, &comm));
    let not_central = p1.commutator(&NCPoly::from_gen(1));
    assert!(!rtt_oracle.membership(&not_central).unwrap().is_member());
    assert!(!common::brute_membership(alphabet, &rtt_pres.relations, cap, &not_central));
    let not_reducible = p2.sub(&trace_power(&sym, &t_mat, 2));
    assert!(!rtt_oracle.membership(&not_reducible).unwrap().is_member());
    assert!(!common::brute_membership(alphabet, &rtt_pres.relations, cap, &not_reducible));

    // RTT determinant centrality across the three parameter cases
    for (sym, expect_central) in [
        (Symmetry::standard(2), true),
        (Symmetry::jordan(&rat(1, 1), &rat(0, 1)), false),
        (Symmetry::jordan(&rat(1, 1), &rat(1, 1)), true),
    ] {
        let (rtt_pres, t_mat) = build_presentation(&sym, PresKind::Rtt, &QRat::zero());
        let oracle = IdealOracle::new(rtt_pres.clone(), cap);
        let det = {
            let p = promote::<NCPoly>(&sym.skew_symmetrizer(2).unwrap());
            let mut prod = p;
            for j in 1..=2 {
                prod = &prod * &t_mat.place_on_legs(2, j).unwrap();
            }
            prod.r_trace_full(sym.c_op()).unwrap()
        };
        let mut central = true;
        for g in 0..4u16 {
            let c = det.commutator(&NCPoly::from_gen(g));
            let lib = oracle.membership(&c).unwrap().is_member();
            let brute = common::brute_membership(4, &rtt_pres.relations, cap, &c);
            assert_eq!(lib, brute, "oracle cross-check");
            if !lib {
                central = false;
            }
        }
        assert_eq!(central, expect_central);
        // agreement with the scalarity of N
        let uv = sym.uv_tensors().unwrap();
        assert_eq!(sym.mn_ops(&uv).n_scalar().is_some(), expect_central);
    }
    println!("criterion 05 constant quantum-matrix-algebra suite: PASS");
}

#[test]
fn criterion_06_yangian_presentations() {
    assert!(expansion_equivalence_check(
        &Symmetry::flip(2),
        2,
        YangianMode::Braided
    ));
    assert!(expansion_equivalence_check(
        &Symmetry::standard(2),
        2,
        YangianMode::Braided
    ));
    // weight-one braided relations reproduce mre(1) exactly
    assert!(weight_one_matches_mre(&Symmetry::flip(2)));
    assert!(weight_one_matches_mre(&Symmetry::jordan(&rat(1, 1), &rat(0, 1))));
    println!("criterion 06 yangian presentations: PASS");
}

#[test]
fn criterion_07_evaluation_morphisms() {
    // 3 x 3 grids: nine pairs, beyond the cleared-denominator degree
    // bound of two per variable
    for sym in [
        Symmetry::jordan(&rat(1, 1), &rat(0, 1)),
        Symmetry::jordan(&rat(2, 1), &rat(5, 2)),
    ] {
        let (oracle, mat) = eval_target(&sym, 2);
        assert!(eval_morphism_check(&sym, &oracle, &mat, &pair_grid(71, 3, 3)));
    }
    let sym = Symmetry::standard(2);
    let (oracle, mat) = eval_target(&sym, 2);
    assert!(eval_morphism_check(&sym, &oracle, &mat, &pair_grid(72, 3, 3)));
    println!("criterion 07 evaluation morphisms: PASS");
}

/// Both verification paths for one residual matrix: membership in the
/// target ideal and vanishing of the Fock image on the guarded range.
struct TwoPaths<'a> {
    oracle: &'a IdealOracle,
    basis: FockBasis,
    rep: Vec<braidkit::fock::FockOp>,
}

impl<'a> TwoPaths<'a> {
    fn new(sym: &Symmetry, oracle: &'a IdealOracle, d: usize) -> Self {
        let basis = FockBasis::build(sym, d);
        let ops = boson_ops(&basis, sym);
        let rep = eval_target_rep(&basis, sym, &ops);
        TwoPaths { oracle, basis, rep }
    }

    fn agree_zero(&self, m: &MatOverAlg) -> bool {
        let ideal = all_entries_member(self.oracle, m);
        let rep = |g: GenId| self.rep[g as usize].clone();
        let fock = FockMat::from_alg(&self.basis, &rep, m).is_zero_on(self.basis.d_max());
        ideal && fock
    }

    fn agree_zero_scalar(&self, p: &NCPoly) -> bool {
        let ideal = self.oracle.membership(p).unwrap().is_member();
        let rep = |g: GenId| self.rep[g as usize].clone();
        let fock = braidkit::fock::op_of_poly(&self.basis, &rep, p)
            .is_zero_on(self.basis.d_max());
        ideal && fock
    }
}

#[test]
fn criterion_08_hecke_identity_suite() {
    let sym = Symmetry::standard(2);
    let m = 2usize;
    let us = nonint_points(81, 3);

    // numeric auxiliary identities, exact
    for line in auxiliary_identities(&sym, m, &us) {
        assert!(line.pass, "auxiliary identity {}", line.name);
    }

    let (oracle, mat) = eval_target(&sym, 3);
    let ci = CurrentImage::new(&sym, mat);
    let paths = TwoPaths::new(&sym, &oracle, 4);
    for u in &us {
        for k in 1..=m {
            assert!(paths.agree_zero(&ci.chn_residual(u, k)), "chn k={k}");
            assert!(
                paths.agree_zero_scalar(&ci.newton_residual(u, k)),
                "newton k={k}"
            );
        }
        assert!(paths.agree_zero(&ci.ch_residual(u, m)), "cayley-hamilton");
        assert!(paths.agree_zero(&ci.pm_det_residual(u, m)), "pm-det");
        assert!(paths.agree_zero(&ci.mult_pow_residual(u, m)), "mult-pow");
    }
    for (u, v) in pair_grid(82, 2, 2) {
        assert!(paths.agree_zero(&ci.det_commutator(&u, &v, m)), "det centrality");
    }

    // abstract-mode direct membership at small Laurent weight
    let k_trunc = 3;
    let pres = build_yangian(&sym, k_trunc, YangianMode::Braided);
    let abstract_oracle = IdealOracle::new(pres, 3);
    assert!(det_centrality_abstract(&sym, m, k_trunc, &abstract_oracle).unwrap());
    println!("criterion 08 Hecke identity suite (both paths agree): PASS");
}

#[test]
fn criterion_09_involutive_identity_suite() {
    for (name, sym) in [
        ("jordan(1,0)", Symmetry::jordan(&rat(1, 1), &rat(0, 1))),
        ("flip(2)", Symmetry::flip(2)),
    ] {
        let m = 2usize;
        let (oracle, mat) = eval_target(&sym, 3);
        let ci = CurrentImage::new(&sym, mat.clone());
        let paths = TwoPaths::new(&sym, &oracle, 4);
        let us = nonint_points(91, 3);
        for u in &us {
            for k in 1..=m {
                assert!(paths.agree_zero(&ci.chn_residual(u, k)), "{name} chn k={k}");
                assert!(
                    paths.agree_zero_scalar(&ci.newton_residual(u, k)),
                    "{name} newton k={k}"
                );
            }
            assert!(paths.agree_zero(&ci.ch_residual(u, m)), "{name} cayley-hamilton");
        }
        for (u, v) in pair_grid(92, 2, 2) {
            assert!(paths.agree_zero(&ci.det_commutator(&u, &v, m)), "{name} det centrality");
        }
    }

    // classical cross-check for the flip: the coefficients are the
    // ordinary integers and the elementary polynomials are the classical
    // ones of the shifted matrix
    let sym = Symmetry::flip(2);
    let (_, mat) = eval_target(&sym, 3);
    let ci = CurrentImage::new(&sym, mat.clone());
    let u: QRat = "7/2".parse().unwrap();
    // e_1(u) = Tr L(u) = 2 + (l11 + l22)/u for the classical trace
    let e1 = ci.e_k(&u, 1);
    let expect = NCPoly::from_scalar(QRat::from_int(2))
        .add(&NCPoly::from_gen(0).add(&NCPoly::from_gen(3)).scale(&u.inverse().unwrap()));
    assert_eq!(e1, expect, "classical trace at q = 1");
    // and the Newton relation at k = 2 carries the plain integer 2
    let nres = ci.newton_residual(&u, 2);
    let direct = ci
        .e_k(&u, 2)
        .scale(&QRat::from_int(2))
        .add(&ci.p_k(&"5/2".parse::<QRat>().unwrap(), 1).mul(&ci.e_k(&u, 1)).scale(&-&QRat::one()))
        .add(&ci.p_k(&u, 2));
    assert_eq!(nres, direct, "integer Newton coefficients at q = 1");
    println!("criterion 09 involutive identity suite: PASS");
}

#[test]
fn criterion_10_rtt_type_top_wedge() {
    // The criterion asks for m_q T^wedge-m(u) = q^m e_m(u) N modulo the
    // image ideal. The identity that holds (uniquely, by solving for the
    // numeric matrix against the ideal-reduced remainders) carries the
    // identity matrix in place of N; the corrected form is verified here
    // for both symmetries and the N form is asserted as stated.
    let mut stated_failures = Vec::new();
    for (name, sym) in [
        ("standard(2)", Symmetry::standard(2)),
        ("jordan(1,0)", Symmetry::jordan(&rat(1, 1), &rat(0, 1))),
    ] {
        let (pres, t, tb) = rtt_pair_presentation(&sym);
        let oracle = IdealOracle::new(pres, 3);
        let img = RttCurrentImage { sym: &sym, t, tb };
        let uv = sym.uv_tensors().unwrap();
        let n_op = sym.mn_ops(&uv).n_op;
        for u in nonint_points(101, 2) {
            // the corrected identity holds exactly
            assert!(
                all_entries_member(&oracle, &img.wedge_top_vs_det_corrected(&u, 2)),
                "corrected top-wedge identity for {name}"
            );
            // the criterion as stated
            if !all_entries_member(&oracle, &img.wedge_top_vs_det(&u, 2, &n_op)) {
                stated_failures.push(format!("{name} at u = {u}"));
            }
        }
    }
    assert!(
        stated_failures.is_empty(),
        "criterion 10 as stated does not hold: m_q T^wedge-m(u) = q^m e_m(u) N fails at {:?}; \
         the identity provable from the presentations is m_q T^wedge-m(u) = q^m e_m(u) I \
         (see the corrected check above, which passes); the N operator instead governs the \
         intertwined commutation N e_m(u) T(v) = T(v) e_m(u) N, verified in the rtt-yangian \
         suite",
        stated_failures
    );
    println!("criterion 10 rtt-type top-wedge normalization: PASS");
}

#[test]
fn criterion_11_fock_suite() {
    // dimensions up to D = 5 against the dense independent rank oracle
    for sym in [
        Symmetry::flip(2),
        Symmetry::standard(2),
        Symmetry::jordan(&rat(1, 1), &rat(0, 1)),
    ] {
        let basis = FockBasis::build(&sym, 5);
        for k in 0..=5usize {
            assert_eq!(basis.dim_at(k), k + 1, "dim Sym^{k}");
            assert_eq!(basis.dim_at(k), common::brute_sym_dimension(&sym, k));
        }
    }

    for sym in [Symmetry::standard(2), Symmetry::jordan(&rat(1, 1), &rat(0, 1))] {
        let basis = FockBasis::build(&sym, 4);
        let ops = boson_ops(&basis, &sym);
        // permutation relations on guarded degrees
        for check in ccr_check(&basis, &sym, &ops) {
            assert!(check.pass, "{}", check.name);
        }
        // all sixteen mre relations as operator identities
        let rep = mre_bosonization(&basis, &sym, &ops);
        let (pres, _) = build_presentation(&sym, PresKind::Mre, &QRat::one());
        assert!(relations_hold(&basis, &rep, &pres.relations, basis.d_max()));
        // the Yangian representation at 6 sampled pairs
        let rep_vec = eval_target_rep(&basis, &sym, &ops);
        let rep = |g: GenId| rep_vec[g as usize].clone();
        let mat = generator_matrix(2, 0);
        let qd = &QRat::q() - &QRat::q_pow(-1);
        for (u, v) in pair_grid(111, 3, 2).into_iter().take(6) {
            let lu = braidkit::yangian::eval_at(&mat, &u);
            let lv = braidkit::yangian::eval_at(&mat, &v);
            let lhs = braidkit::yangian::braided_bracket(&sym, &lu, &lv).scale(&(&u - &v));
            let asym = &(&braidkit::ncalg::bar(&sym, &lu, 1, 2)
                * &braidkit::ncalg::bar(&sym, &lv, 2, 2))
                - &(&braidkit::ncalg::bar(&sym, &lv, 1, 2)
                    * &braidkit::ncalg::bar(&sym, &lu, 2, 2));
            let rhs = if sym.is_involutive() {
                asym
            } else {
                asym.scale(&(&u * &qd))
            };
            let res = &lhs - &rhs;
            assert!(FockMat::from_alg(&basis, &rep, &res).is_zero_on(basis.d_max()));
        }
        // D-stability: identical guarded blocks at D and D + 1
        let bigger = FockBasis::build(&sym, 5);
        let r_small = mre_bosonization(&basis, &sym, &ops);
        let r_big = mre_bosonization(&bigger, &sym, &boson_ops(&bigger, &sym));
        for g in 0..4 {
            for k in 0..=4usize {
                assert_eq!(
                    r_small[g].block(&basis, k, k),
                    r_big[g].block(&bigger, k, k)
                );
            }
        }
    }
    println!("criterion 11 fock suite: PASS");
}

#[test]
fn criterion_12_empirical_e_commutativity() {
    // commutativity of the elementary symmetric family is checked
    // empirically at desk scale; it is not claimed as a theorem here
    let sym = Symmetry::standard(2);
    let (oracle, mat) = eval_target(&sym, 3);
    let ci = CurrentImage::new(&sym, mat);
    for (u, v) in pair_grid(121, 3, 2).into_iter().take(6) {
        let c = ci.e_k(&u, 1).commutator(&ci.e_k(&v, 2));
        assert!(
            oracle.membership(&c).unwrap().is_member(),
            "[e_1({u}), e_2({v})]"
        );
    }
    println!("criterion 12 empirical commutativity of e_k (labeled empirical): PASS");
}
