//! Suite orchestration for the command-line driver.
//!
//! Every suite runs a fixed, documented list of checks against one
//! symmetry and assembles a deterministic report. Expected-negative
//! checks (non-centrality, non-reducibility) pass exactly when the
//! oracle returns the predicted negative answer.

use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::One;

use crate::baxterize::{CurrentR, SpectralSample};
use crate::fock::{
    boson_ops, ccr_check, dual_basis_consistency, dual_relations_match, eval_reps,
    eval_target_rep, matrix_relations_hold, mre_bosonization, relations_hold, FockBasis, FockMat,
};
use crate::ncalg::{
    bar, build_presentation, ch_element, det_re, elem_sym, generator_matrix, power_sum_re,
    power_sum_rtt, trace_power, BraidWord, GenId, IdealOracle, MatOverAlg,
    Membership, NCPoly, PresKind,
};
use crate::report::{timed_check, Report};
use crate::scalars::QRat;
use crate::symmetries::{BiRank, Symmetry};
use crate::tensors::{flip, promote, LinOp};
use crate::yangian::{
    arg_shift, auxiliary_identities, build_yangian, det_centrality_abstract, eval_morphism_check,
    eval_target, expansion_equivalence_check, rtt_pair_presentation, weight_one_matches_mre,
    Coalgebra, CurrentImage, RttCurrentImage, YangianMode,
};

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub symmetry: String,
    pub n: usize,
    pub q: Option<String>,
    pub a: BigRational,
    pub b: BigRational,
    pub truncation: usize,
    pub fock_degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub suite: String,
    pub report: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            symmetry: "standard".into(),
            n: 2,
            q: None,
            a: BigRational::one(),
            b: BigRational::from_integer(0.into()),
            truncation: 2,
            fock_degree: 4,
            samples: 8,
            seed: 1,
            suite: "core".into(),
            report: None,
        }
    }
}

impl RunConfig {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "symmetry": self.symmetry,
            "n": self.n,
            "q": self.q,
            "a": self.a.to_string(),
            "b": self.b.to_string(),
            "truncation": self.truncation,
            "fock_degree": self.fock_degree,
            "samples": self.samples,
            "seed": self.seed,
            "suite": self.suite,
        })
    }

    /// Build or load the configured symmetry; everything is re-validated.
    pub fn build_symmetry(&self) -> Result<Symmetry, String> {
        match self.symmetry.as_str() {
            "flip" => Ok(Symmetry::flip(self.n)),
            "superflip" => {
                if self.n < 2 {
                    return Err("superflip needs at least two dimensions".into());
                }
                Ok(Symmetry::superflip(self.n - 1, 1))
            }
            "standard" => match self.q.as_deref() {
                None | Some("sym") => Ok(Symmetry::standard(self.n)),
                Some(qs) => {
                    let q0: QRat = qs.parse().map_err(|e| format!("bad q: {e}"))?;
                    let q0 = q0
                        .as_rational()
                        .ok_or_else(|| "q must be rational or 'sym'".to_string())?;
                    Symmetry::standard_numeric(self.n, &q0).map_err(|e| e.to_string())
                }
            },
            "jordan" => Ok(Symmetry::jordan(&self.a, &self.b)),
            path => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {path}: {e}"))?;
                let v: serde_json::Value =
                    serde_json::from_str(&text).map_err(|e| e.to_string())?;
                Symmetry::from_json(&v).map_err(|e| e.to_string())
            }
        }
    }
}

fn nonint_points(seed: u64, count: usize) -> Vec<QRat> {
    use num_traits::One;
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

// ---- gen ----

pub fn cmd_gen(cfg: &RunConfig, out: &PathBuf) -> Result<(), String> {
    let sym = cfg.build_symmetry()?;
    let text = serde_json::to_string_pretty(&sym.to_json()).unwrap();
    std::fs::write(out, text).map_err(|e| e.to_string())?;
    Ok(())
}

// ---- baxterize ----

pub fn cmd_baxterize(cfg: &RunConfig) -> Result<Report, String> {
    let sym = cfg.build_symmetry()?;
    let mut report = Report::new("baxterize", cfg.to_json());
    let cr = CurrentR::new(&sym);
    let sample = SpectralSample::generate(cfg.seed, cfg.samples.max(7));
    report.push(timed_check("param-ybe-grid", "parameterized-yangbaxter", false, || {
        match cr.certify_param_ybe(&sample) {
            Ok(cert) => {
                let detail = format!(
                    "flavor {:?}, g = {}, {} triples on grid {:?}",
                    cr.flavor(),
                    cr.g_description(),
                    cert.triples_checked,
                    cert.grid
                );
                (cert.pass, Some(match cert.first_failure {
                    None => detail,
                    Some(f) => format!("{detail}; first failure {f:?}"),
                }))
            }
            Err(e) => (false, Some(e.to_string())),
        }
    }));
    report.push(timed_check("unitarity-profile", "unitarity-and-normalization", false, || {
        match cr.unitarity_and_normalize(&sample, 10) {
            Ok(rep) => (
                rep.unitarity_pass && rep.normalized_involutive_pass,
                Some(format!("profile {}", rep.profile)),
            ),
            Err(e) => (false, Some(e.to_string())),
        }
    }));
    Ok(report)
}

// ---- verify ----

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report, String> {
    let sym = cfg.build_symmetry()?;
    let mut report = Report::new(&cfg.suite, cfg.to_json());
    match cfg.suite.as_str() {
        "core" => core_suite(&sym, cfg, &mut report),
        "qma" => qma_suite(&sym, cfg, &mut report),
        "yangian-hecke" => {
            if sym.is_involutive() {
                return Err("yangian-hecke needs a Hecke symmetry".into());
            }
            yangian_suite(&sym, cfg, &mut report)
        }
        "yangian-involutive" => {
            if !sym.is_involutive() {
                return Err("yangian-involutive needs an involutive symmetry".into());
            }
            yangian_suite(&sym, cfg, &mut report)
        }
        "rtt-yangian" => rtt_yangian_suite(&sym, cfg, &mut report),
        "chn" => chn_suite(&sym, cfg, &mut report),
        "fock" => fock_suite(&sym, cfg, &mut report),
        "all" => {
            core_suite(&sym, cfg, &mut report);
            qma_suite(&sym, cfg, &mut report);
            yangian_suite(&sym, cfg, &mut report);
            rtt_yangian_suite(&sym, cfg, &mut report);
            chn_suite(&sym, cfg, &mut report);
            fock_suite(&sym, cfg, &mut report);
        }
        other => return Err(format!("unknown suite '{other}'")),
    }
    Ok(report)
}

fn core_suite(sym: &Symmetry, cfg: &RunConfig, report: &mut Report) {
    let n = sym.n();
    report.push(timed_check("ybe", "constant-yangbaxter", false, || {
        let r1 = sym.r_at(1, 3);
        let r2 = sym.r_at(2, 3);
        (&(&r1 * &r2) * &r1 == &(&r2 * &r1) * &r2, None)
    }));
    report.push(timed_check("quadratic-condition", "hecke-or-involutive", false, || {
        let i2 = LinOp::identity(n, 2);
        let l = &i2.scale(sym.q()) - sym.r();
        let r = &i2.scale(&sym.q().inverse().unwrap()) + sym.r();
        ((&l * &r).is_zero(), None)
    }));
    report.push(timed_check("skew-inverse-contraction", "skew-inverse", false, || {
        let c = (&sym.r_at(1, 3) * &sym.psi().place_on_legs(3, 2).unwrap())
            .partial_trace(2)
            .unwrap();
        (c == flip(n), None)
    }));
    report.push(timed_check("bc-commutation", "bc-operators", false, || {
        let ok = [sym.b_op(), sym.c_op()].iter().all(|x| {
            let pair = &x.place_on_legs(2, 1).unwrap() * &x.place_on_legs(2, 2).unwrap();
            sym.r() * &pair == &pair * sym.r()
        });
        (ok, None)
    }));
    report.push(timed_check("rtrace-of-r", "rtrace-normalization", false, || {
        (
            sym.r().r_trace(&[2], sym.c_op()).unwrap() == LinOp::identity(n, 1),
            None,
        )
    }));
    report.push(timed_check("conjugation-invariance", "rtrace-invariance", false, || {
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                let x = LinOp::from_fn(n, 1, |r, c| {
                    if (r, c) == (i, j) {
                        QRat::one()
                    } else {
                        QRat::zero()
                    }
                });
                if !sym.conjugation_invariance(&x) {
                    ok = false;
                }
            }
        }
        (ok, None)
    }));
    let birank = sym.birank(6.min(cfg.truncation.max(4)));
    report.push(timed_check("birank", "birank", false, || match birank {
        BiRank::Even(m) => (true, Some(format!("even of bi-rank ({m}|0)"))),
        BiRank::Indeterminate { cutoff } => {
            (true, Some(format!("indeterminate up to cutoff {cutoff}")))
        }
    }));
    if let BiRank::Even(m) = birank {
        let m_i = m as i64;
        report.push(timed_check("trace-constants", "even-trace-constants", false, || {
            let tr_i = sym.r_trace_one(&LinOp::identity(n, 1));
            let ok1 = tr_i == &sym.q_pow(-m_i) * &sym.qint(m_i);
            let ok2 = sym.b_op() * sym.c_op()
                == LinOp::identity(n, 1).scale(&sym.q_pow(-2 * m_i));
            let p = sym.skew_symmetrizer(m).unwrap();
            let ok3 = p.r_trace_full(sym.c_op()).unwrap() == sym.q_pow(-m_i * m_i);
            (ok1 && ok2 && ok3, None)
        }));
        report.push(timed_check("partial-trace-ladder", "partial-trace-ladder", false, || {
            let p = sym.skew_symmetrizer(m).unwrap();
            let mut ok = true;
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
                if traced != target {
                    ok = false;
                }
            }
            (ok, None)
        }));
        report.push(timed_check("uv-and-string", "uv-projector-contractions", false, || {
            let uv = match sym.uv_tensors() {
                Ok(uv) => uv,
                Err(e) => return (false, Some(e.to_string())),
            };
            let factor = sym.q_pow(-m_i * m_i);
            // C-contraction of u and of v rescale by q^(-m^2)
            let ckron = {
                let mut acc = sym.c_op().place_on_legs(m, 1).unwrap();
                for j in 2..=m {
                    acc = &acc * &sym.c_op().place_on_legs(m, j).unwrap();
                }
                acc
            };
            let dim = ckron.dim();
            let cu: Vec<QRat> = (0..dim)
                .map(|i| {
                    (0..dim).fold(QRat::zero(), |acc, j| {
                        &acc + &(ckron.get(i, j) * &uv.u[j])
                    })
                })
                .collect();
            let ok_u = cu
                .iter()
                .zip(uv.u.iter())
                .all(|(l, r)| *l == r * &factor);
            let cv: Vec<QRat> = (0..dim)
                .map(|j| {
                    (0..dim).fold(QRat::zero(), |acc, i| {
                        &acc + &(&uv.v[i] * ckron.get(i, j))
                    })
                })
                .collect();
            let ok_v = cv
                .iter()
                .zip(uv.v.iter())
                .all(|(l, r)| *l == r * &factor);
            let p = sym.skew_symmetrizer(m).unwrap();
            let ok_p =
                &ckron * &p == p.scale(&factor) && &p * &ckron == p.scale(&factor);
            let ops = sym.mn_ops(&uv);
            let ok_mn = ops.product_scalar().is_some();
            (
                ok_u && ok_v && ok_p && ok_mn,
                Some(format!(
                    "N scalar: {}",
                    ops.n_scalar().map(|s| s.to_string()).unwrap_or("no".into())
                )),
            )
        }));
    }
}

fn qma_suite(sym: &Symmetry, cfg: &RunConfig, report: &mut Report) {
    let cap = 3usize;
    let _ = cfg;
    let m = match sym.birank(4) {
        BiRank::Even(m) => m,
        BiRank::Indeterminate { .. } => {
            report.push(timed_check("qma-birank", "birank", false, || {
                (false, Some("symmetry is not even; qma suite needs a determinant".into()))
            }));
            return;
        }
    };
    let (re_pres, l_mat) = build_presentation(sym, PresKind::Re, &QRat::zero());
    let re_oracle = IdealOracle::new(re_pres, cap);
    for k in 1..=m.min(2) {
        let id = format!("e{k}-central-re");
        report.push(timed_check(&id, "elementary-symmetric-central", false, || {
            let e = elem_sym(sym, &l_mat, k);
            let mut witness = None;
            for g in 0..sym.n() * sym.n() {
                let c = e.commutator(&NCPoly::from_gen(g as GenId));
                match re_oracle.membership(&c).unwrap() {
                    Membership::Member(w) => {
                        if witness.is_none() && !w.terms.is_empty() {
                            witness =
                                Some(format!("first witness: {}", w.display(re_oracle.pres())));
                        }
                    }
                    Membership::NotMember { .. } => return (false, None),
                }
            }
            (true, witness)
        }));
    }
    report.push(timed_check("det-matrix-identity", "projector-determinant", false, || {
        // P L1b..Lmb = L1b..Lmb P = q^(m^2) det P, entry-wise mod ideal
        let p = promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap());
        let prod = crate::ncalg::barred_product(sym, &vec![l_mat.clone(); m]);
        let det = det_re(sym, &l_mat, m);
        let target = p.scale_ring(
            &NCPoly::from_scalar(sym.q_pow((m * m) as i64)).mul(&det),
        );
        let ok1 = all_entries_member(&re_oracle, &(&(&p * &prod) - &target));
        let ok2 = all_entries_member(&re_oracle, &(&(&prod * &p) - &target));
        (ok1 && ok2, None)
    }));
    report.push(timed_check("p3-reduces-to-trace", "power-sum-reduction", false, || {
        let p3 = power_sum_re(sym, &l_mat, 3);
        let t3 = trace_power(sym, &l_mat, 3);
        match re_oracle.membership(&p3.sub(&t3)).unwrap() {
            Membership::Member(_) => (true, None),
            Membership::NotMember { .. } => (false, None),
        }
    }));
    report.push(timed_check("characteristic-central", "characteristic-subalgebra", false, || {
        let words = [
            BraidWord::identity(2),
            BraidWord::generator(2, 1, false),
            BraidWord::generator(2, 1, true),
        ];
        for z in &words {
            let (left, right) = ch_element(sym, &l_mat, z);
            if left != right {
                return (false, Some("cyclic forms disagree".into()));
            }
            for g in 0..sym.n() * sym.n() {
                let c = left.commutator(&NCPoly::from_gen(g as GenId));
                if !re_oracle.membership(&c).unwrap().is_member() {
                    return (false, None);
                }
            }
        }
        (true, None)
    }));

    let (rtt_pres, t_mat) = build_presentation(sym, PresKind::Rtt, &QRat::zero());
    let rtt_oracle = IdealOracle::new(rtt_pres, cap);
    report.push(timed_check("rtt-p2-not-reducible", "bethe-non-reduction", true, || {
        let p2 = power_sum_rtt(sym, &t_mat, 2);
        // Tr_R T^2 with plain matrix square
        let t2 = trace_power(sym, &t_mat, 2);
        match rtt_oracle.membership(&p2.sub(&t2)).unwrap() {
            Membership::NotMember { .. } => (true, Some("non-member as predicted".into())),
            Membership::Member(_) => (false, Some("unexpectedly reducible".into())),
        }
    }));
    report.push(timed_check("bethe-commutes", "bethe-commutativity", false, || {
        let p1 = power_sum_rtt(sym, &t_mat, 1);
        let p2 = power_sum_rtt(sym, &t_mat, 2);
        (
            rtt_oracle.membership(&p1.commutator(&p2)).unwrap().is_member(),
            None,
        )
    }));
    report.push(timed_check("bethe-not-central", "bethe-non-centrality", true, || {
        let p1 = power_sum_rtt(sym, &t_mat, 1);
        let t12 = NCPoly::from_gen(1);
        match rtt_oracle.membership(&p1.commutator(&t12)).unwrap() {
            Membership::NotMember { .. } => (true, Some("non-member as predicted".into())),
            Membership::Member(_) => (false, None),
        }
    }));
    let uv = sym.uv_tensors().ok();
    let n_scalar = uv
        .as_ref()
        .map(|uv| sym.mn_ops(uv).n_scalar().is_some())
        .unwrap_or(false);
    report.push(timed_check(
        "rtt-det-centrality",
        "rtt-determinant-centrality",
        !n_scalar,
        || {
            let det = {
                let p = promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap());
                let mut prod = p;
                for j in 1..=m {
                    prod = &prod * &t_mat.place_on_legs(m, j).unwrap();
                }
                prod.r_trace_full(sym.c_op()).unwrap()
            };
            let mut central = true;
            for g in 0..sym.n() * sym.n() {
                let c = det.commutator(&NCPoly::from_gen(g as GenId));
                if !rtt_oracle.membership(&c).unwrap().is_member() {
                    central = false;
                }
            }
            (
                central == n_scalar,
                Some(format!("central: {central}, N scalar: {n_scalar}")),
            )
        },
    ));
}

fn yangian_suite(sym: &Symmetry, cfg: &RunConfig, report: &mut Report) {
    let k_trunc = cfg.truncation.max(2);
    report.push(timed_check("expansion-equivalence", "series-vs-resolved", false, || {
        (
            expansion_equivalence_check(sym, k_trunc, YangianMode::Braided),
            None,
        )
    }));
    if sym.is_involutive() {
        report.push(timed_check("weight-one-is-mre", "weight-one-relations", false, || {
            (weight_one_matches_mre(sym), None)
        }));
    }
    report.push(timed_check("coalgebra-axioms", "coproduct-counit", false, || {
        let c = Coalgebra::new(sym.n(), k_trunc.min(3));
        let pres = build_yangian(sym, k_trunc.min(3), YangianMode::Braided);
        (
            c.counit_axiom_holds()
                && c.coassociativity_holds()
                && c.counit_kills_relations(&pres),
            None,
        )
    }));
    let (oracle, mat) = eval_target(sym, 3);
    report.push(timed_check("evaluation-morphism", "evaluation-morphism", false, || {
        let pairs = pair_grid(cfg.seed, 3, 3);
        (eval_morphism_check(sym, &oracle, &mat, &pairs), None)
    }));
    let m = match sym.birank(4) {
        BiRank::Even(m) => m,
        BiRank::Indeterminate { .. } => return,
    };
    let ci = CurrentImage::new(sym, mat.clone());
    let us = nonint_points(cfg.seed + 1, cfg.samples.min(4).max(2));
    chn_core_checks(sym, &ci, &oracle, m, &us, cfg, report);
    if !sym.is_involutive() {
        report.push(timed_check("aux-identities", "projector-string-identities", false, || {
            let lines = auxiliary_identities(sym, m, &us);
            let bad: Vec<String> = lines
                .iter()
                .filter(|l| !l.pass)
                .map(|l| l.name.clone())
                .collect();
            (bad.is_empty(), Some(format!("{} identities", lines.len())))
        }));
        report.push(timed_check(
            "empirical-e-commutativity",
            "empirical: elementary symmetric commute",
            false,
            || {
                let pairs = pair_grid(cfg.seed + 2, 3, 2);
                for (u, v) in pairs.into_iter().take(6) {
                    let c = ci.e_k(&u, 1).commutator(&ci.e_k(&v, 2));
                    if !oracle.membership(&c).unwrap().is_member() {
                        return (false, None);
                    }
                }
                (true, Some("empirical desk-scale check, not a theorem".into()))
            },
        ));
        report.push(timed_check("abstract-det-centrality", "determinant-central-abstract", false, || {
            let kk = 3;
            let pres = build_yangian(sym, kk, YangianMode::Braided);
            let oracle = IdealOracle::new(pres, 3);
            (
                det_centrality_abstract(sym, m, kk, &oracle).unwrap(),
                Some("direct membership in the truncated presentation".into()),
            )
        }));
    }
}

fn chn_core_checks(
    sym: &Symmetry,
    ci: &CurrentImage,
    oracle: &IdealOracle,
    m: usize,
    us: &[QRat],
    cfg: &RunConfig,
    report: &mut Report,
) {
    let basis = FockBasis::build(sym, cfg.fock_degree.max(3));
    let ops = boson_ops(&basis, sym);
    let rep_vec = eval_target_rep(&basis, sym, &ops);
    let rep = move |g: GenId| rep_vec[g as usize].clone();
    let guard = basis.d_max();
    let fock_zero = |mat: &MatOverAlg| -> bool {
        FockMat::from_alg(&basis, &rep, mat).is_zero_on(guard)
    };
    for k in 1..=m {
        let id = format!("chn-k{k}");
        report.push(timed_check(&id, "cayley-hamilton-newton", false, || {
            for u in us {
                let res = ci.chn_residual(u, k);
                if !all_entries_member(oracle, &res) || !fock_zero(&res) {
                    return (false, Some(format!("at u = {u}")));
                }
            }
            (true, Some("ideal and Fock paths agree".into()))
        }));
        let id = format!("newton-k{k}");
        report.push(timed_check(&id, "newton-relations", false, || {
            for u in us {
                let res = ci.newton_residual(u, k);
                if !oracle.membership(&res).unwrap().is_member() {
                    return (false, Some(format!("at u = {u}")));
                }
                let f = crate::fock::op_of_poly(&basis, &rep, &res);
                if !f.is_zero_on(guard) {
                    return (false, Some(format!("fock path at u = {u}")));
                }
            }
            (true, Some("ideal and Fock paths agree".into()))
        }));
    }
    report.push(timed_check("cayley-hamilton", "cayley-hamilton", false, || {
        for u in us {
            let res = ci.ch_residual(u, m);
            if !all_entries_member(oracle, &res) || !fock_zero(&res) {
                return (false, Some(format!("at u = {u}")));
            }
        }
        (true, Some("ideal and Fock paths agree".into()))
    }));
    report.push(timed_check("det-centrality", "determinant-central", false, || {
        for (u, v) in pair_grid(cfg.seed + 3, 2, 2) {
            let res = ci.det_commutator(&u, &v, m);
            if !all_entries_member(oracle, &res) || !fock_zero(&res) {
                return (false, Some(format!("at ({u}, {v})")));
            }
        }
        (true, Some("ideal and Fock paths agree".into()))
    }));
    report.push(timed_check("pm-det", "projector-determinant-current", false, || {
        for u in us {
            let res = ci.pm_det_residual(u, m);
            if !all_entries_member(oracle, &res) || !fock_zero(&res) {
                return (false, None);
            }
        }
        (true, Some("ideal and Fock paths agree".into()))
    }));
    report.push(timed_check("mult-pow", "matrix-power-reduction", false, || {
        for u in us {
            let res = ci.mult_pow_residual(u, m);
            if !all_entries_member(oracle, &res) || !fock_zero(&res) {
                return (false, None);
            }
        }
        (true, Some("ideal and Fock paths agree".into()))
    }));
}

fn chn_suite(sym: &Symmetry, cfg: &RunConfig, report: &mut Report) {
    let m = match sym.birank(4) {
        BiRank::Even(m) => m,
        BiRank::Indeterminate { .. } => {
            report.push(timed_check("chn-birank", "birank", false, || {
                (false, Some("not even".into()))
            }));
            return;
        }
    };
    let (oracle, mat) = eval_target(sym, 3);
    let ci = CurrentImage::new(sym, mat);
    let us = nonint_points(cfg.seed + 1, cfg.samples.min(4).max(2));
    chn_core_checks(sym, &ci, &oracle, m, &us, cfg, report);
}

fn rtt_yangian_suite(sym: &Symmetry, cfg: &RunConfig, report: &mut Report) {
    let m = match sym.birank(4) {
        BiRank::Even(m) => m,
        BiRank::Indeterminate { .. } => return,
    };
    let (pres, t, tb) = rtt_pair_presentation(sym);
    let oracle = IdealOracle::new(pres, 3);
    let img = RttCurrentImage { sym, t, tb };
    report.push(timed_check("rtt-eval-morphism", "rtt-evaluation-morphism", false, || {
        let pairs = pair_grid(cfg.seed, 3, 3);
        (img.eval_morphism_check(&oracle, &pairs), None)
    }));
    let uv = match sym.uv_tensors() {
        Ok(uv) => uv,
        Err(_) => return,
    };
    let pair_ops = sym.mn_ops(&uv);
    let n_op = pair_ops.n_op.clone();
    let n_scalar = pair_ops.n_scalar().is_some();
    let us = nonint_points(cfg.seed + 1, 3);
    report.push(timed_check(
        "rtt-current-det-centrality",
        "current-determinant-centrality",
        !n_scalar,
        || {
            let mut central = true;
            for u in &us {
                if !img.det_central(&oracle, u, m) {
                    central = false;
                }
            }
            (
                central == n_scalar,
                Some(format!("central: {central}, N scalar: {n_scalar}")),
            )
        },
    ));
    report.push(timed_check("rtt-intertwined-det", "intertwined-determinant", false, || {
        for u in &us {
            let v = arg_shift(sym, u, 0);
            let v = &(&v + &QRat::from_int(1)) + &QRat::from_rational(BigRational::new(1.into(), 3.into()));
            let res = img.intertwined_det_commutator(u, &v, m, &n_op);
            if !all_entries_member(&oracle, &res) {
                return (false, None);
            }
            let res = img.intermediate_projector_identity(u, &v, m);
            if !all_entries_member(&oracle, &res) {
                return (false, Some("intermediate projector identity".into()));
            }
        }
        (true, None)
    }));
    let n_is_identity = n_op == LinOp::identity(sym.n(), 1);
    report.push(timed_check(
        "rtt-wedge-top-n-twisted",
        "top-wedge-vs-determinant (N-twisted normalization)",
        !n_is_identity,
        || {
            let mut holds = true;
            for u in &us {
                let res = img.wedge_top_vs_det(u, m, &n_op);
                if !all_entries_member(&oracle, &res) {
                    holds = false;
                }
            }
            (
                holds == n_is_identity,
                Some("the N-twisted form only holds when N = I; see the corrected check".into()),
            )
        },
    ));
    report.push(timed_check("rtt-wedge-top-corrected", "top-wedge-vs-determinant", false, || {
        for u in &us {
            let res = img.wedge_top_vs_det_corrected(u, m);
            if !all_entries_member(&oracle, &res) {
                return (false, None);
            }
        }
        (true, Some("m_q T-wedge-m(u) = q^m e_m(u) I".into()))
    }));
    report.push(timed_check("rtt-expansion-equivalence", "series-vs-resolved", false, || {
        (
            expansion_equivalence_check(sym, cfg.truncation.max(2), YangianMode::RttType),
            None,
        )
    }));
}

fn fock_suite(sym: &Symmetry, cfg: &RunConfig, report: &mut Report) {
    let d = cfg.fock_degree.max(3);
    let basis = FockBasis::build(sym, d);
    report.push(timed_check("fock-dimensions", "symmetric-algebra-dimensions", false, || {
        let dims = basis.dims();
        let ok = if sym.n() == 2 {
            dims.iter().enumerate().all(|(k, &dk)| dk == k + 1)
        } else {
            true
        };
        (ok, Some(format!("dims {dims:?}")))
    }));
    let ops = boson_ops(&basis, sym);
    for check in ccr_check(&basis, sym, &ops) {
        report.push(timed_check(&check.name, "bosonic-permutation-relations", false, || {
            (check.pass, Some(format!("guarded degrees 0..={}", check.guard)))
        }));
    }
    report.push(timed_check("mre-representation", "bosonization-of-mre", false, || {
        let rep = mre_bosonization(&basis, sym, &ops);
        let (pres, _) = build_presentation(sym, PresKind::Mre, &QRat::one());
        (relations_hold(&basis, &rep, &pres.relations, basis.d_max()), None)
    }));
    report.push(timed_check("covariant-contravariant", "evaluation-representations", false, || {
        let (pres, _) = build_presentation(sym, PresKind::Mre, &QRat::one());
        let (cov, contra) = eval_reps(sym);
        (
            matrix_relations_hold(sym.n(), &cov, &pres.relations)
                && matrix_relations_hold(sym.n(), &contra, &pres.relations),
            None,
        )
    }));
    report.push(timed_check("yangian-representation", "bosonization-of-yangian", false, || {
        let rep_vec = eval_target_rep(&basis, sym, &ops);
        let rep = |g: GenId| rep_vec[g as usize].clone();
        let mat = generator_matrix(sym.n(), 0);
        let pairs = pair_grid(cfg.seed, 3, 3);
        let qd = &QRat::q() - &QRat::q_pow(-1);
        for (u, v) in pairs.into_iter().take(6) {
            let lu = crate::yangian::eval_at(&mat, &u);
            let lv = crate::yangian::eval_at(&mat, &v);
            let du = &u - &v;
            let lhs = crate::yangian::braided_bracket(sym, &lu, &lv).scale(&du);
            let asym = &(&bar(sym, &lu, 1, 2) * &bar(sym, &lv, 2, 2))
                - &(&bar(sym, &lv, 1, 2) * &bar(sym, &lu, 2, 2));
            let rhs = if sym.is_involutive() {
                asym
            } else {
                asym.scale(&(&u * &qd))
            };
            let res = &lhs - &rhs;
            if !FockMat::from_alg(&basis, &rep, &res).is_zero_on(basis.d_max()) {
                return (false, Some(format!("pair ({u}, {v})")));
            }
        }
        (true, None)
    }));
    report.push(timed_check("dual-basis-consistency", "left-right-dual-bases", false, || {
        (
            dual_basis_consistency(&basis, sym, &ops) && dual_relations_match(sym),
            None,
        )
    }));
    report.push(timed_check("d-stability", "truncation-stability", false, || {
        let bigger = FockBasis::build(sym, d + 1);
        let r1 = mre_bosonization(&basis, sym, &ops);
        let r2 = mre_bosonization(&bigger, sym, &boson_ops(&bigger, sym));
        for g in 0..sym.n() * sym.n() {
            for k in 0..=d {
                if r1[g].block(&basis, k, k) != r2[g].block(&bigger, k, k) {
                    return (false, Some(format!("generator {g}, degree {k}")));
                }
            }
        }
        (true, None)
    }));
    // appended last so the record order stays stable: the ladder of
    // per-degree dimensions for the report body
    report.push(timed_check("fock-degree-ranges", "guarded-degree-ranges", false, || {
        (
            true,
            Some(format!(
                "creation guard {}, cross guard {}, annihilation guard {}",
                d - 2,
                d - 1,
                d
            )),
        )
    }));
}

