//! Laurent-truncated current algebras of braided and RTT type.
//!
//! The generating matrix expands as L(u) = sum L[w] u^(-w); braided mode
//! forces L[0] = I while RTT mode keeps T[0] as a generator. The defining
//! current relation R(u,v) L_1bar(u) L_2bar(v) = L_1bar(v) L_2bar(u) R(u,v)
//! resolves into coefficient-wise quadratic relations; this module builds
//! those presentations, compares them with the raw series expansion,
//! verifies the evaluation morphisms into the constant quantum matrix
//! algebras, and runs the determinant / Cayley-Hamilton-Newton identity
//! suite in the evaluation image via ideal membership.
//!
//! Spectral arguments are exact elements of Q(q); Hecke-flavor identities
//! shift them multiplicatively by powers of q^2, involutive ones
//! additively by integers.

use crate::ncalg::{
    bar, build_presentation, generator_matrix, mre_relations, r_string_desc, rtt_relations,
    spans_equal, GenId, IdealOracle, MatOverAlg, NCPoly, PresKind, Presentation, Word,
};
use crate::scalars::QRat;
use crate::symmetries::Symmetry;
use crate::tensors::{promote, LinOp};

use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YangianMode {
    /// L[0] = I.
    Braided,
    /// T[0] is a generic generator.
    RttType,
}

/// Argument shift used by the current identities: u q^(2t) for Hecke
/// symmetries, u + t for involutive ones.
pub fn arg_shift(sym: &Symmetry, u: &QRat, t: i64) -> QRat {
    if sym.is_involutive() {
        u + &QRat::from_int(t)
    } else {
        u * &sym.q_pow(2 * t)
    }
}

/// The constant spectral point "q^(2t)": the shift of the neutral
/// argument, which is 1 multiplicatively and 0 additively.
pub fn unit_point(sym: &Symmetry, t: i64) -> QRat {
    if sym.is_involutive() {
        QRat::from_int(t)
    } else {
        sym.q_pow(2 * t)
    }
}

/// Generator matrix L[w] over the Laurent alphabet. Braided mode stores
/// weights 1..=K at ids (w-1) n^2 .. w n^2; RTT mode stores 0..=K at
/// w n^2 ...
pub fn laurent_gen_matrix(n: usize, mode: YangianMode, w: usize) -> MatOverAlg {
    match (mode, w) {
        (YangianMode::Braided, 0) => promote::<NCPoly>(&LinOp::identity(n, 1)),
        (YangianMode::Braided, _) => generator_matrix(n, ((w - 1) * n * n) as GenId),
        (YangianMode::RttType, _) => generator_matrix(n, (w * n * n) as GenId),
    }
}

fn laurent_names(n: usize, mode: YangianMode, k_trunc: usize) -> (Vec<String>, Vec<i64>) {
    let letter = match mode {
        YangianMode::Braided => "l",
        YangianMode::RttType => "t",
    };
    let lo = match mode {
        YangianMode::Braided => 1,
        YangianMode::RttType => 0,
    };
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for w in lo..=k_trunc {
        for i in 0..n {
            for j in 0..n {
                names.push(format!("{letter}[{},{};{w}]", i + 1, j + 1));
                weights.push(w as i64);
            }
        }
    }
    (names, weights)
}

/// [A, B]_R = R A_1bar B_2bar - B_1bar A_2bar R on two legs.
pub fn braided_bracket(sym: &Symmetry, a: &MatOverAlg, b: &MatOverAlg) -> MatOverAlg {
    let r = promote::<NCPoly>(sym.r());
    let a1 = bar(sym, a, 1, 2);
    let b2 = bar(sym, b, 2, 2);
    let b1 = bar(sym, b, 1, 2);
    let a2 = bar(sym, a, 2, 2);
    &(&r * &(&a1 * &b2)) - &(&(&b1 * &a2) * &r)
}

/// R A_1 B_2 - B_1 A_2 R with plain placements.
pub fn plain_bracket(sym: &Symmetry, a: &MatOverAlg, b: &MatOverAlg) -> MatOverAlg {
    let r = promote::<NCPoly>(sym.r());
    let a1 = a.place_on_legs(2, 1).unwrap();
    let b2 = b.place_on_legs(2, 2).unwrap();
    let b1 = b.place_on_legs(2, 1).unwrap();
    let a2 = a.place_on_legs(2, 2).unwrap();
    &(&r * &(&a1 * &b2)) - &(&(&b1 * &a2) * &r)
}

fn nonzero_entries(m: &MatOverAlg) -> Vec<NCPoly> {
    let d = m.dim();
    let mut out = Vec::new();
    for r in 0..d {
        for c in 0..d {
            let e = m.get(r, c);
            if !e.is_zero() {
                out.push(e.clone());
            }
        }
    }
    out
}

/// The two-sided product difference A_1bar B_2bar - (A <-> B), barred or
/// plain depending on the mode.
fn antisym_product(
    sym: &Symmetry,
    mode: YangianMode,
    a: &MatOverAlg,
    b: &MatOverAlg,
) -> MatOverAlg {
    let lift = |m: &MatOverAlg, pos: usize| -> MatOverAlg {
        match mode {
            YangianMode::Braided => bar(sym, m, pos, 2),
            YangianMode::RttType => m.place_on_legs(2, pos).unwrap(),
        }
    };
    &(&lift(a, 1) * &lift(b, 2)) - &(&lift(b, 1) * &lift(a, 2))
}

fn bracket(sym: &Symmetry, mode: YangianMode, a: &MatOverAlg, b: &MatOverAlg) -> MatOverAlg {
    match mode {
        YangianMode::Braided => braided_bracket(sym, a, b),
        YangianMode::RttType => plain_bracket(sym, a, b),
    }
}

/// Resolved coefficient relation for the index pair (r, s); the matrices
/// lw[w] must provide L[w] for every weight that occurs.
fn resolved_relation(
    sym: &Symmetry,
    mode: YangianMode,
    lw: &[MatOverAlg],
    r: usize,
    s: usize,
) -> MatOverAlg {
    let lhs = bracket(sym, mode, &lw[r], &lw[s]);
    let mut rhs = MatOverAlg::zero(sym.n(), 2);
    if sym.is_involutive() {
        // sum_{a=1}^{min(r,s)} (L_1[a-1] L_2[r+s-a] - L_1[r+s-a] L_2[a-1])
        for a in 1..=r.min(s) {
            rhs = &rhs + &antisym_product(sym, mode, &lw[a - 1], &lw[r + s - a]);
        }
    } else {
        // (q - q^-1) sum_{a=0}^{min(r,s-1)} (L_1[a] L_2[r+s-a] - ...)
        if s >= 1 {
            let qd = &QRat::q() - &QRat::q_pow(-1);
            let mut acc = MatOverAlg::zero(sym.n(), 2);
            for a in 0..=r.min(s - 1) {
                acc = &acc + &antisym_product(sym, mode, &lw[a], &lw[r + s - a]);
            }
            rhs = acc.scale(&qd);
        }
    }
    &lhs - &rhs
}

/// Build the truncated presentation: all coefficient relations whose
/// generator weights stay within the truncation order.
pub fn build_yangian(sym: &Symmetry, k_trunc: usize, mode: YangianMode) -> Presentation {
    assert!(k_trunc >= 1);
    let n = sym.n();
    let (names, weights) = laurent_names(n, mode, k_trunc);
    let lw: Vec<MatOverAlg> = (0..=k_trunc)
        .map(|w| laurent_gen_matrix(n, mode, w))
        .collect();
    let mut relations = Vec::new();
    let lo = match mode {
        YangianMode::Braided => 1,
        YangianMode::RttType => 0,
    };
    for r in lo..=k_trunc {
        for s in lo..=k_trunc {
            // max weight on the right side
            let top = if sym.is_involutive() {
                if r.min(s) >= 1 {
                    r + s - 1
                } else {
                    r.max(s)
                }
            } else if s >= 1 {
                r + s
            } else {
                r.max(s)
            };
            if top > k_trunc {
                continue;
            }
            let rel = resolved_relation(sym, mode, &lw, r, s);
            relations.extend(nonzero_entries(&rel));
        }
    }
    let pres = Presentation {
        kind: match mode {
            YangianMode::Braided => PresKind::YangianBraided,
            YangianMode::RttType => PresKind::YangianRtt,
        },
        names,
        weights,
        relations,
    };
    // Laurent-weight structure: Hecke relations are weight homogeneous,
    // involutive ones mix the two adjacent weights r+s and r+s-1.
    for rel in &pres.relations {
        let ws = pres.poly_weights(rel);
        if sym.is_involutive() {
            assert!(ws.len() <= 2 && ws.windows(2).all(|p| p[1] - p[0] == 1));
        } else {
            assert!(ws.len() == 1);
        }
    }
    pres
}

/// Compare the raw series expansion of (u-v) [L(u), L(v)]_R = ... with the
/// resolved system, as linear spans in the free algebra. The raw
/// coefficient at (r, s) is X[r+1, s] - X[r, s+1] - Y(r, s) with
/// X[a, b] = [L[a], L[b]]_R, kept for r + s <= K - 1 (boundary indices -1
/// pick up the positive powers of the spectral parameters); the resolved
/// side keeps total weight r + s <= K.
pub fn expansion_equivalence_check(sym: &Symmetry, k_trunc: usize, mode: YangianMode) -> bool {
    let n = sym.n();
    let lw: Vec<MatOverAlg> = (0..=k_trunc)
        .map(|w| laurent_gen_matrix(n, mode, w))
        .collect();
    let zero2 = MatOverAlg::zero(n, 2);
    let x = |a: i64, b: i64| -> MatOverAlg {
        if a < 0 || b < 0 || a as usize > k_trunc || b as usize > k_trunc {
            zero2.clone()
        } else {
            bracket(sym, mode, &lw[a as usize], &lw[b as usize])
        }
    };
    let y = |a: i64, b: i64| -> MatOverAlg {
        if a < 0 || b < 0 || a as usize > k_trunc || b as usize > k_trunc {
            zero2.clone()
        } else {
            antisym_product(sym, mode, &lw[a as usize], &lw[b as usize])
        }
    };
    let qd = &QRat::q() - &QRat::q_pow(-1);
    let mut raw: Vec<NCPoly> = Vec::new();
    for r in -1..=(k_trunc as i64) {
        for s in -1..=(k_trunc as i64) {
            if (r, s) == (-1, -1) || r + s + 1 > k_trunc as i64 {
                continue;
            }
            let lhs = &x(r + 1, s) - &x(r, s + 1);
            let rhs = if sym.is_involutive() {
                y(r, s)
            } else {
                y(r + 1, s).scale(&qd)
            };
            raw.extend(nonzero_entries(&(&lhs - &rhs)));
        }
    }
    let lo = match mode {
        YangianMode::Braided => 1usize,
        YangianMode::RttType => 0,
    };
    let mut resolved: Vec<NCPoly> = Vec::new();
    for r in lo..=k_trunc {
        for s in lo..=k_trunc {
            if r + s > k_trunc {
                continue;
            }
            resolved.extend(nonzero_entries(&resolved_relation(sym, mode, &lw, r, s)));
        }
    }
    spans_equal(&raw, &resolved)
}

// ---- evaluation morphisms ----

/// The constant target of the braided evaluation morphism: the modified
/// reflection-equation algebra at h = 1 for involutive symmetries, the
/// plain reflection-equation algebra for Hecke ones.
pub fn eval_target(sym: &Symmetry, cap: usize) -> (IdealOracle, MatOverAlg) {
    let kind = if sym.is_involutive() {
        PresKind::Mre
    } else {
        PresKind::Re
    };
    let (pres, mat) = build_presentation(sym, kind, &QRat::one());
    (IdealOracle::new(pres, cap), mat)
}

/// L(x) = I + M/x.
pub fn eval_at(mat: &MatOverAlg, x: &QRat) -> MatOverAlg {
    let n = mat.n();
    assert!(!x.is_zero(), "evaluation pole at 0");
    &promote::<NCPoly>(&LinOp::identity(n, 1)) + &mat.scale(&x.inverse().unwrap())
}

/// Substitute L(u) = I + M/u into the series-form defining relation and
/// check every entry against the target ideal at each sampled pair.
pub fn eval_morphism_check(
    sym: &Symmetry,
    oracle: &IdealOracle,
    mat: &MatOverAlg,
    pairs: &[(QRat, QRat)],
) -> bool {
    let qd = &QRat::q() - &QRat::q_pow(-1);
    for (u, v) in pairs {
        let du = u - v;
        assert!(!du.is_zero(), "sampled pair hits the pole u = v");
        let lu = eval_at(mat, u);
        let lv = eval_at(mat, v);
        let lhs = braided_bracket(sym, &lu, &lv).scale(&du);
        let asym = &(&bar(sym, &lu, 1, 2) * &bar(sym, &lv, 2, 2))
            - &(&bar(sym, &lv, 1, 2) * &bar(sym, &lu, 2, 2));
        let rhs = if sym.is_involutive() {
            asym
        } else {
            asym.scale(&(u * &qd))
        };
        let residual = &lhs - &rhs;
        for e in nonzero_entries(&residual) {
            if !oracle.membership(&e).expect("degree within cap").is_member() {
                return false;
            }
        }
    }
    true
}

/// The injection direction of the involutive evaluation: the weight-one
/// braided relations reproduce the mre(1) relations exactly (as spans).
pub fn weight_one_matches_mre(sym: &Symmetry) -> bool {
    assert!(sym.is_involutive());
    let n = sym.n();
    let lw: Vec<MatOverAlg> = (0..=1)
        .map(|w| laurent_gen_matrix(n, YangianMode::Braided, w))
        .collect();
    let rel = resolved_relation(sym, YangianMode::Braided, &lw, 1, 1);
    let braided = nonzero_entries(&rel);
    // mre(1) relations written in the same alphabet (l_i^j -> l_i^j[1])
    let mre = mre_relations(sym, &lw[1], &QRat::one());
    spans_equal(&braided, &mre)
}

// ---- coproduct and counit at coefficient level ----

/// Element of the tensor square with word-valued legs.
pub type TensorPoly2 = BTreeMap<(Word, Word), QRat>;
pub type TensorPoly3 = BTreeMap<(Word, Word, Word), QRat>;

fn tp2_add(map: &mut TensorPoly2, k: (Word, Word), c: QRat) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(QRat::zero);
    *e = &*e + &c;
    if e.is_zero() {
        // normalize away cancelled terms
        let key = map
            .iter()
            .find(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone());
        if let Some(k) = key {
            map.remove(&k);
        }
    }
}

fn tp3_add(map: &mut TensorPoly3, k: (Word, Word, Word), c: QRat) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(QRat::zero);
    *e = &*e + &c;
    if e.is_zero() {
        let key = map
            .iter()
            .find(|(_, v)| v.is_zero())
            .map(|(k, _)| k.clone());
        if let Some(k) = key {
            map.remove(&k);
        }
    }
}

/// Coefficient-level coproduct data for a braided-mode truncation.
pub struct Coalgebra {
    n: usize,
    k_trunc: usize,
}

impl Coalgebra {
    pub fn new(n: usize, k_trunc: usize) -> Self {
        Coalgebra { n, k_trunc }
    }

    fn gen_word(&self, i: usize, j: usize, w: usize) -> Option<Word> {
        // weight-0 coefficient is the identity matrix, not a generator
        if w == 0 {
            return None;
        }
        Some(Word(vec![((w - 1) * self.n * self.n + i * self.n + j) as GenId]))
    }

    /// Delta(l_i^j[w]) = sum_{k=0}^{w} sum_a l_i^a[k] (x) l_a^j[w-k],
    /// with l[0] the Kronecker delta.
    pub fn coproduct(&self, i: usize, j: usize, w: usize) -> TensorPoly2 {
        assert!(w >= 1 && w <= self.k_trunc);
        let mut out = TensorPoly2::new();
        for k in 0..=w {
            for a in 0..self.n {
                let left = self.gen_word(i, a, k);
                let right = self.gen_word(a, j, w - k);
                match (left, right, k == 0, k == w) {
                    (None, Some(rw), true, _) => {
                        if a == i {
                            tp2_add(&mut out, (Word::empty(), rw), QRat::one());
                        }
                    }
                    (Some(lw), None, _, true) => {
                        if a == j {
                            tp2_add(&mut out, (lw, Word::empty()), QRat::one());
                        }
                    }
                    (Some(lw), Some(rw), _, _) => {
                        tp2_add(&mut out, (lw, rw), QRat::one());
                    }
                    _ => {}
                }
            }
        }
        out
    }

    /// epsilon(l_i^j[w]) = delta_{w,0} delta_i^j; on the braided alphabet
    /// every generator is sent to zero.
    pub fn counit_gen(&self, _g: GenId) -> QRat {
        QRat::zero()
    }

    /// (epsilon (x) id) Delta(l[w]) = l[w] and symmetrically.
    pub fn counit_axiom_holds(&self) -> bool {
        for w in 1..=self.k_trunc {
            for i in 0..self.n {
                for j in 0..self.n {
                    let delta = self.coproduct(i, j, w);
                    let mut left = BTreeMap::new();
                    let mut right = BTreeMap::new();
                    for ((lw, rw), c) in &delta {
                        // epsilon kills generators, keeps empty words
                        if lw.is_empty() {
                            tp2_add(&mut left, (Word::empty(), rw.clone()), c.clone());
                        }
                        if rw.is_empty() {
                            tp2_add(&mut right, (lw.clone(), Word::empty()), c.clone());
                        }
                    }
                    let expect = self.gen_word(i, j, w).unwrap();
                    let ok_l = left.len() == 1
                        && left
                            .get(&(Word::empty(), expect.clone()))
                            .map(|c| c.is_one())
                            .unwrap_or(false);
                    let ok_r = right.len() == 1
                        && right
                            .get(&(expect.clone(), Word::empty()))
                            .map(|c| c.is_one())
                            .unwrap_or(false);
                    if !ok_l || !ok_r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Coassociativity on generators: (Delta (x) id) Delta = (id (x) Delta) Delta.
    pub fn coassociativity_holds(&self) -> bool {
        for w in 1..=self.k_trunc {
            for i in 0..self.n {
                for j in 0..self.n {
                    let delta = self.coproduct(i, j, w);
                    let mut lhs = TensorPoly3::new();
                    let mut rhs = TensorPoly3::new();
                    for ((lw, rw), c) in &delta {
                        // expand the left leg
                        match self.word_coproduct(lw) {
                            Some(inner) => {
                                for ((a, b), ci) in inner {
                                    tp3_add(&mut lhs, (a, b, rw.clone()), &ci * c);
                                }
                            }
                            None => {
                                tp3_add(
                                    &mut lhs,
                                    (Word::empty(), Word::empty(), rw.clone()),
                                    c.clone(),
                                );
                            }
                        }
                        // expand the right leg
                        match self.word_coproduct(rw) {
                            Some(inner) => {
                                for ((a, b), ci) in inner {
                                    tp3_add(&mut rhs, (lw.clone(), a, b), &ci * c);
                                }
                            }
                            None => {
                                tp3_add(
                                    &mut rhs,
                                    (lw.clone(), Word::empty(), Word::empty()),
                                    c.clone(),
                                );
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn word_coproduct(&self, w: &Word) -> Option<TensorPoly2> {
        if w.is_empty() {
            return None;
        }
        assert_eq!(w.len(), 1, "coefficient-level coproduct acts on generators");
        let g = w.0[0] as usize;
        let nn = self.n * self.n;
        let weight = g / nn + 1;
        let i = (g % nn) / self.n;
        let j = g % self.n;
        Some(self.coproduct(i, j, weight))
    }

    /// epsilon applied to every defining relation must vanish.
    pub fn counit_kills_relations(&self, pres: &Presentation) -> bool {
        pres.relations
            .iter()
            .all(|r| r.eval_scalar(&|_| QRat::zero()).is_zero())
    }
}

// ---- current polynomials in the evaluation image ----

/// The evaluation image of the generating current. For a Hecke symmetry
/// the constant matrix is the reflection-equation generating matrix, for
/// an involutive one the mre(1) matrix.
pub struct CurrentImage<'a> {
    pub sym: &'a Symmetry,
    pub mat: MatOverAlg,
}

impl<'a> CurrentImage<'a> {
    pub fn new(sym: &'a Symmetry, mat: MatOverAlg) -> Self {
        CurrentImage { sym, mat }
    }

    pub fn l_at(&self, x: &QRat) -> MatOverAlg {
        eval_at(&self.mat, x)
    }

    pub fn shift(&self, u: &QRat, t: i64) -> QRat {
        arg_shift(self.sym, u, t)
    }

    /// Barred factors L_1bar(u) L_2bar(shift u) ... L_kbar(shift^(k-1) u).
    fn descending_chain(&self, u: &QRat, k: usize) -> Vec<MatOverAlg> {
        (0..k)
            .map(|j| self.l_at(&self.shift(u, -(j as i64))))
            .collect()
    }

    /// e_k(u) = Tr_{R(1..k)}(P^(k) L_1bar(u) ... L_kbar(q^(-2(k-1))u)).
    pub fn e_k(&self, u: &QRat, k: usize) -> NCPoly {
        if k == 0 {
            return NCPoly::one();
        }
        let p = promote::<NCPoly>(&self.sym.skew_symmetrizer(k).unwrap());
        let prod = crate::ncalg::barred_product(self.sym, &self.descending_chain(u, k));
        (&p * &prod).r_trace_full(self.sym.c_op()).unwrap()
    }

    /// Skew power L^(wedge k)(u): trace over legs 2..k only.
    pub fn wedge(&self, u: &QRat, k: usize) -> MatOverAlg {
        assert!(k >= 1);
        if k == 1 {
            return self.l_at(u);
        }
        let p = promote::<NCPoly>(&self.sym.skew_symmetrizer(k).unwrap());
        let prod = crate::ncalg::barred_product(self.sym, &self.descending_chain(u, k));
        let legs: Vec<usize> = (2..=k).collect();
        (&p * &prod).r_trace(&legs, self.sym.c_op()).unwrap()
    }

    /// Matrix power L^[k](u) =
    /// Tr_{R(2..k)}(L_1bar(shift^(k-1)u) ... L_kbar(u) R_{k-1}...R_1).
    pub fn mat_power(&self, u: &QRat, k: usize) -> MatOverAlg {
        assert!(k >= 1);
        if k == 1 {
            return self.l_at(u);
        }
        let factors: Vec<MatOverAlg> = (0..k)
            .map(|j| self.l_at(&self.shift(u, -((k - 1 - j) as i64))))
            .collect();
        let prod = crate::ncalg::barred_product(self.sym, &factors);
        let tail = promote::<NCPoly>(&r_string_desc(self.sym, k));
        let legs: Vec<usize> = (2..=k).collect();
        (&prod * &tail).r_trace(&legs, self.sym.c_op()).unwrap()
    }

    /// p_k(u) = Tr_R L^[k](u).
    pub fn p_k(&self, u: &QRat, k: usize) -> NCPoly {
        self.mat_power(u, k)
            .r_trace_full(self.sym.c_op())
            .unwrap()
    }

    /// Residual of the Cayley-Hamilton-Newton identity at level k:
    /// (-1)^(k+1) k_q L^(wedge k)(u) - sum_{p<k} (-q)^p L^[k-p](shift^p u) e_p(u).
    pub fn chn_residual(&self, u: &QRat, k: usize) -> MatOverAlg {
        let sym = self.sym;
        let mut sign = sym.qint(k as i64);
        if (k + 1) % 2 == 1 {
            sign = -&sign;
        }
        let mut acc = self.wedge(u, k).scale(&sign);
        for p in 0..k {
            let c = (-sym.q()).pow(p as i64);
            let term = self
                .mat_power(&self.shift(u, -(p as i64)), k - p)
                .scale_ring_right(&self.e_k(u, p))
                .scale(&c);
            acc = &acc - &term;
        }
        acc
    }

    /// Residual of the Newton identity at level k:
    /// k_q e_k(u) + sum_{j=1}^{k} (-1)^j q^(k-j) p_j(shift^(k-j) u) e_{k-j}(u).
    pub fn newton_residual(&self, u: &QRat, k: usize) -> NCPoly {
        let sym = self.sym;
        let mut acc = self.e_k(u, k).scale(&sym.qint(k as i64));
        for j in 1..=k {
            let mut c = sym.q_pow((k - j) as i64);
            if j % 2 == 1 {
                c = -&c;
            }
            let term = self
                .p_k(&self.shift(u, -((k - j) as i64)), j)
                .mul(&self.e_k(u, k - j))
                .scale(&c);
            acc = acc.add(&term);
        }
        acc
    }

    /// Residual of the Cayley-Hamilton identity:
    /// sum_{p=0}^{m} (-q)^p L^[m-p](shift^p u) e_p(u) with L^[0] = I.
    pub fn ch_residual(&self, u: &QRat, m: usize) -> MatOverAlg {
        let sym = self.sym;
        let mut acc = MatOverAlg::zero(sym.n(), 1);
        for p in 0..=m {
            let c = (-sym.q()).pow(p as i64);
            let power = if m == p {
                promote::<NCPoly>(&LinOp::identity(sym.n(), 1))
            } else {
                self.mat_power(&self.shift(u, -(p as i64)), m - p)
            };
            acc = &acc + &power.scale_ring_right(&self.e_k(u, p)).scale(&c);
        }
        acc
    }

    /// e_m(u) L(v) - L(v) e_m(u), entry-wise.
    pub fn det_commutator(&self, u: &QRat, v: &QRat, m: usize) -> MatOverAlg {
        let det = self.e_k(u, m);
        let lv = self.l_at(v);
        &lv.scale_ring(&det) - &lv.scale_ring_right(&det)
    }

    /// L^[k](u) - L(shift^(k-1) u) ... L(shift u) L(u).
    pub fn mult_pow_residual(&self, u: &QRat, k: usize) -> MatOverAlg {
        let mut prod = self.l_at(&self.shift(u, -((k - 1) as i64)));
        for j in (0..k - 1).rev() {
            prod = &prod * &self.l_at(&self.shift(u, -(j as i64)));
        }
        &self.mat_power(u, k) - &prod
    }

    /// P^(m) L_1bar(u)...L_mbar(shift^(m-1)u) - q^(m^2) e_m(u) P^(m).
    pub fn pm_det_residual(&self, u: &QRat, m: usize) -> MatOverAlg {
        let sym = self.sym;
        let p = promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap());
        let prod = crate::ncalg::barred_product(sym, &self.descending_chain(u, m));
        let lhs = &p * &prod;
        let factor = NCPoly::from_scalar(sym.q_pow((m * m) as i64)).mul(&self.e_k(u, m));
        &lhs - &p.scale_ring(&factor)
    }

    /// The string reversal: P^(m) L_1bar(u)...L_mbar(shift^(m-1)u) =
    /// L_1bar(shift^(m-1)u)...L_mbar(u) P^(m).
    pub fn pl_string_residual(&self, u: &QRat, m: usize) -> MatOverAlg {
        let sym = self.sym;
        let p = promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap());
        let desc = crate::ncalg::barred_product(sym, &self.descending_chain(u, m));
        let asc: Vec<MatOverAlg> = (0..m)
            .map(|j| self.l_at(&self.shift(u, -((m - 1 - j) as i64))))
            .collect();
        let asc = crate::ncalg::barred_product(sym, &asc);
        &(&p * &desc) - &(&asc * &p)
    }

    /// Every nonzero entry lies in the ideal?
    pub fn all_entries_member(&self, oracle: &IdealOracle, m: &MatOverAlg) -> bool {
        nonzero_entries(m)
            .iter()
            .all(|e| oracle.membership(e).expect("within cap").is_member())
    }
}

// ---- numeric auxiliary identities for the current R-matrix ----

/// R_i(x) on `total` legs: the current R-matrix evaluated at x, placed at
/// legs (i, i+1).
pub fn current_r_at(sym: &Symmetry, x: &QRat, i: usize, total: usize) -> LinOp {
    let cr = crate::baxterize::CurrentR::new(sym);
    cr.eval_x(x).expect("argument off the pole").place_on_legs(total, i).unwrap()
}

/// The ordered string R^(sign)_{i->j}(x) = R_i(x) R_{i+1}(shift x) ... with
/// arguments shifted by q^(2 sign) (Hecke) or by sign (involutive) at each
/// step.
pub fn r_string(sym: &Symmetry, x: &QRat, i: usize, j: usize, sign: i64, total: usize) -> LinOp {
    let mut acc = LinOp::identity(sym.n(), total);
    let steps: Vec<usize> = if j >= i {
        (i..=j).collect()
    } else {
        (j..=i).rev().collect()
    };
    for (t, leg) in steps.iter().enumerate() {
        let arg = arg_shift(sym, x, sign * t as i64);
        acc = &acc * &current_r_at(sym, &arg, *leg, total);
    }
    acc
}

/// One report line of a numeric identity check.
#[derive(Debug, Clone)]
pub struct IdentityLine {
    pub name: String,
    pub pass: bool,
}

/// The numeric identities of the highest skew-symmetrizer: the recursive
/// current presentations of P^(k+1), the projector string identity with
/// its scalar factor phi(u), the two product identities, and the partial
/// R-trace constant. All checks are exact; current arguments are sampled.
pub fn auxiliary_identities(sym: &Symmetry, m: usize, us: &[QRat]) -> Vec<IdentityLine> {
    let mut out = Vec::new();
    let n = sym.n();

    // recursive current presentations of the skew-symmetrizers, all four
    // orderings, k + 1 <= m + 1
    for k in 1..=m {
        let legs = k + 1;
        let p_k1 = sym
            .skew_symmetrizer(k + 1)
            .unwrap()
            .place_on_legs(legs, 1)
            .unwrap();
        let p_low_1 = sym
            .skew_symmetrizer(k)
            .unwrap()
            .place_on_legs(legs, 1)
            .unwrap();
        let p_low_2 = sym
            .skew_symmetrizer(k)
            .unwrap()
            .place_on_legs(legs, 2)
            .unwrap();
        let mut sign = (&QRat::one() / &sym.qint(k as i64 + 1)).clone();
        if k % 2 == 1 {
            sign = -&sign;
        }
        // ascending legs 1..k with arguments q^2, q^4, ..., q^(2k)
        let asc_args: Vec<QRat> = (1..=k as i64).map(|t| unit_point(sym, t)).collect();
        let up = |order: &[usize], args: &[QRat]| -> LinOp {
            let mut acc = LinOp::identity(n, legs);
            for (leg, a) in order.iter().zip(args.iter()) {
                acc = &acc * &current_r_at(sym, a, *leg, legs);
            }
            acc
        };
        let legs_asc: Vec<usize> = (1..=k).collect();
        let legs_desc: Vec<usize> = (1..=k).rev().collect();
        let args_rev: Vec<QRat> = asc_args.iter().rev().cloned().collect();
        let variants = [
            ("string-asc-left", &(&up(&legs_asc, &asc_args) * &p_low_1)),
            ("string-desc-left", &(&up(&legs_desc, &asc_args) * &p_low_2)),
            ("string-desc-right", &(&p_low_1 * &up(&legs_desc, &args_rev))),
            ("string-asc-right", &(&p_low_2 * &up(&legs_asc, &args_rev))),
        ];
        for (name, got) in variants {
            out.push(IdentityLine {
                name: format!("skew-recursion-{name}-k{k}"),
                pass: got.scale(&sign) == p_k1,
            });
        }
    }

    // string-through-projector, any u, k <= m
    for k in 1..=m {
        let legs = k + 1;
        let p_1 = sym
            .skew_symmetrizer(k)
            .unwrap()
            .place_on_legs(legs, 1)
            .unwrap();
        let p_2 = sym
            .skew_symmetrizer(k)
            .unwrap()
            .place_on_legs(legs, 2)
            .unwrap();
        let mut pass = true;
        for u in us {
            let lhs = &r_string(sym, &arg_shift(sym, u, -(k as i64 - 1)), 1, k, 1, legs) * &p_1;
            let rhs = &p_2 * &r_string(sym, u, 1, k, -1, legs);
            if lhs != rhs {
                pass = false;
            }
        }
        out.push(IdentityLine {
            name: format!("string-through-projector-k{k}"),
            pass,
        });
    }

    // the phi(u)-factor identities of the top skew-symmetrizer
    {
        let legs = m + 1;
        let p_1 = sym
            .skew_symmetrizer(m)
            .unwrap()
            .place_on_legs(legs, 1)
            .unwrap();
        let p_2 = sym
            .skew_symmetrizer(m)
            .unwrap()
            .place_on_legs(legs, 2)
            .unwrap();
        let pp = &p_2 * &p_1;
        let mut pass_a = true;
        let mut pass_b = true;
        for u in us {
            let phi = phi_factor(sym, m, u);
            let lhs_a = &r_string(sym, &arg_shift(sym, u, -(m as i64 - 1)), 1, m, 1, legs) * &p_1;
            if lhs_a != pp.scale(&phi) {
                pass_a = false;
            }
            let lhs_b = &p_2 * &r_string(sym, u, 1, m, -1, legs);
            if lhs_b != pp.scale(&phi) {
                pass_b = false;
            }
        }
        out.push(IdentityLine {
            name: "top-projector-string-phi-left".into(),
            pass: pass_a,
        });
        out.push(IdentityLine {
            name: "top-projector-string-phi-right".into(),
            pass: pass_b,
        });
    }

    // constant product identities of the top projector
    {
        let legs = m + 1;
        let p_1 = sym
            .skew_symmetrizer(m)
            .unwrap()
            .place_on_legs(legs, 1)
            .unwrap();
        let p_2 = sym
            .skew_symmetrizer(m)
            .unwrap()
            .place_on_legs(legs, 2)
            .unwrap();
        let mut desc = LinOp::identity(n, legs);
        for i in (1..=m).rev() {
            desc = &desc * &sym.r_at(i, legs);
        }
        let mut factor = sym.q() * &sym.qint(m as i64);
        if (m - 1) % 2 == 1 {
            factor = -&factor;
        }
        out.push(IdentityLine {
            name: "projector-times-r-string".into(),
            pass: &p_1 * &desc == (&p_1 * &p_2).scale(&factor),
        });
        // In the idempotent normalization fixed by the defining recursion
        // the sandwich collapses with the constant 1/m_q^2 (the inverse of
        // the constant for rescaled, non-idempotent antisymmetrizers).
        let m_q = sym.qint(m as i64);
        let m_q2_inv = (&m_q * &m_q).inverse().unwrap();
        out.push(IdentityLine {
            name: "projector-sandwich".into(),
            pass: &(&p_2 * &p_1) * &p_2 == p_2.scale(&m_q2_inv),
        });
    }

    // m_q Tr_{R(2..m)} P^(m) = q^(-m(m-1)) I
    {
        let p = sym.skew_symmetrizer(m).unwrap();
        let legs: Vec<usize> = (2..=m).collect();
        let traced = p.r_trace(&legs, sym.c_op()).unwrap();
        let target =
            LinOp::identity(n, 1).scale(&(&sym.q_pow(-(m as i64) * (m as i64 - 1)) / &sym.qint(m as i64)));
        out.push(IdentityLine {
            name: "partial-trace-constant".into(),
            pass: traced == target,
        });
    }

    out
}

/// phi(u) = (-1)^(m-1) q m_q (u - q^(2m)) / (q^2 u - q^(2m)); involutive
/// limit (-1)^(m-1) m (u - m)/(u + 1 - m).
pub fn phi_factor(sym: &Symmetry, m: usize, u: &QRat) -> QRat {
    let mut c = sym.q() * &sym.qint(m as i64);
    if (m - 1) % 2 == 1 {
        c = -&c;
    }
    let top = u - &unit_point(sym, m as i64);
    let bot = &arg_shift(sym, u, 1) - &unit_point(sym, m as i64);
    &c * &(&top / &bot)
}

// ---- RTT-type evaluation target and identities ----

/// Presentation of the pair algebra targeted by the RTT-type evaluation
/// T(u) = T + Tbar/u, together with the two generating matrices.
pub fn rtt_pair_presentation(sym: &Symmetry) -> (Presentation, MatOverAlg, MatOverAlg) {
    let n = sym.n();
    let t = generator_matrix(n, 0);
    let tb = generator_matrix(n, (n * n) as GenId);
    let mut names = Vec::new();
    for pref in ["t", "tb"] {
        for i in 0..n {
            for j in 0..n {
                names.push(format!("{pref}[{},{}]", i + 1, j + 1));
            }
        }
    }
    let r = promote::<NCPoly>(sym.r());
    let lift = |m: &MatOverAlg, pos| m.place_on_legs(2, pos).unwrap();
    let mut relations = rtt_relations(sym, &t);
    // R Tb1 Tb2 - Tb1 Tb2 R, minus the cross term in the involutive case
    let quad = &(&r * &(&lift(&tb, 1) * &lift(&tb, 2))) - &(&(&lift(&tb, 1) * &lift(&tb, 2)) * &r);
    let quad = if sym.is_involutive() {
        let cross = &(&lift(&t, 1) * &lift(&tb, 2)) - &(&lift(&tb, 1) * &lift(&t, 2));
        &quad - &cross
    } else {
        quad
    };
    relations.extend(nonzero_entries(&quad));
    // R Tb1 T2 - T1 Tb2 R
    let mixed = &(&r * &(&lift(&tb, 1) * &lift(&t, 2))) - &(&(&lift(&t, 1) * &lift(&tb, 2)) * &r);
    relations.extend(nonzero_entries(&mixed));
    (
        Presentation {
            kind: PresKind::RttPair,
            weights: vec![0; names.len()],
            names,
            relations,
        },
        t,
        tb,
    )
}

/// Evaluation image of an RTT-type current: T(u) = T + Tbar/u with plain
/// leg placements in all current polynomials.
pub struct RttCurrentImage<'a> {
    pub sym: &'a Symmetry,
    pub t: MatOverAlg,
    pub tb: MatOverAlg,
}

impl<'a> RttCurrentImage<'a> {
    pub fn t_at(&self, x: &QRat) -> MatOverAlg {
        assert!(!x.is_zero());
        &self.t + &self.tb.scale(&x.inverse().unwrap())
    }

    fn chain(&self, u: &QRat, k: usize) -> Vec<MatOverAlg> {
        (0..k)
            .map(|j| self.t_at(&arg_shift(self.sym, u, -(j as i64))))
            .collect()
    }

    /// e_k(u) with plain placements.
    pub fn e_k(&self, u: &QRat, k: usize) -> NCPoly {
        if k == 0 {
            return NCPoly::one();
        }
        let sym = self.sym;
        let p = promote::<NCPoly>(&sym.skew_symmetrizer(k).unwrap());
        let mut prod = p;
        for (j, f) in self.chain(u, k).iter().enumerate() {
            prod = &prod * &f.place_on_legs(k, j + 1).unwrap();
        }
        prod.r_trace_full(sym.c_op()).unwrap()
    }

    /// T^(wedge k)(u): trace over legs 2..k only.
    pub fn wedge(&self, u: &QRat, k: usize) -> MatOverAlg {
        assert!(k >= 2);
        let sym = self.sym;
        let p = promote::<NCPoly>(&sym.skew_symmetrizer(k).unwrap());
        let mut prod = p;
        for (j, f) in self.chain(u, k).iter().enumerate() {
            prod = &prod * &f.place_on_legs(k, j + 1).unwrap();
        }
        let legs: Vec<usize> = (2..=k).collect();
        prod.r_trace(&legs, sym.c_op()).unwrap()
    }

    /// The evaluation morphism property of the RTT-type current.
    pub fn eval_morphism_check(&self, oracle: &IdealOracle, pairs: &[(QRat, QRat)]) -> bool {
        let sym = self.sym;
        let qd = &QRat::q() - &QRat::q_pow(-1);
        for (u, v) in pairs {
            let du = u - v;
            assert!(!du.is_zero());
            let tu = self.t_at(u);
            let tv = self.t_at(v);
            let lhs = plain_bracket(sym, &tu, &tv).scale(&du);
            let asym = &(&tu.place_on_legs(2, 1).unwrap() * &tv.place_on_legs(2, 2).unwrap())
                - &(&tv.place_on_legs(2, 1).unwrap() * &tu.place_on_legs(2, 2).unwrap());
            let rhs = if sym.is_involutive() {
                asym
            } else {
                asym.scale(&(u * &qd))
            };
            for e in nonzero_entries(&(&lhs - &rhs)) {
                if !oracle.membership(&e).expect("within cap").is_member() {
                    return false;
                }
            }
        }
        true
    }

    /// m_q T^(wedge m)(u) - q^m e_m(u) X, entry-wise, for a supplied
    /// one-leg numeric matrix X. The N-twisted normalization takes
    /// X = N; the identity that actually holds in the evaluation image
    /// has X = I (the rank-one collapse
    /// P T_1(u)...T_m(..) P = q^(m^2) e_m(u) P is exact, so the partial
    /// R-trace constant of P^(m) forces the identity matrix; solving for
    /// X from the ideal-reduced remainders returns I uniquely, and the
    /// pair ideal is graded so the membership answers are cap-complete).
    pub fn wedge_top_residual(&self, u: &QRat, m: usize, x_op: &LinOp) -> MatOverAlg {
        let sym = self.sym;
        let lhs = self.wedge(u, m).scale(&sym.qint(m as i64));
        let det = NCPoly::from_scalar(sym.q_pow(m as i64)).mul(&self.e_k(u, m));
        let rhs = promote::<NCPoly>(x_op).scale_ring(&det);
        &lhs - &rhs
    }

    /// The N-twisted normalization.
    pub fn wedge_top_vs_det(&self, u: &QRat, m: usize, n_op: &LinOp) -> MatOverAlg {
        self.wedge_top_residual(u, m, n_op)
    }

    /// The corrected form with the identity matrix.
    pub fn wedge_top_vs_det_corrected(&self, u: &QRat, m: usize) -> MatOverAlg {
        self.wedge_top_residual(u, m, &LinOp::identity(self.sym.n(), 1))
    }

    /// N e_m(u) T(v) - T(v) e_m(u) N, entry-wise. The determinant sits
    /// between the two matrix factors: contracting the double projector
    /// P_{2..m+1} P_{1..m} with the u/v tensors links the first input leg
    /// to the last output leg through N, which puts e_m(u) strictly
    /// between the surviving T-factor and N on both sides. Moving e_m
    /// through T(v) is only possible when the determinant is already
    /// central, so this ordering is the content-bearing form.
    pub fn intertwined_det_commutator(
        &self,
        u: &QRat,
        v: &QRat,
        m: usize,
        n_op: &LinOp,
    ) -> MatOverAlg {
        let det = self.e_k(u, m);
        let tv = self.t_at(v);
        let n_mat = promote::<NCPoly>(n_op);
        let lhs = &n_mat.scale_ring_right(&det) * &tv;
        let rhs = &tv.scale_ring_right(&det) * &n_mat;
        &lhs - &rhs
    }

    /// The intermediate projector identity behind the intertwined form:
    /// P_{2..m+1} P_{1..m} e_m(u) T_{m+1}(v) = T_1(v) e_m(u) P_{2..m+1} P_{1..m}.
    pub fn intermediate_projector_identity(&self, u: &QRat, v: &QRat, m: usize) -> MatOverAlg {
        let sym = self.sym;
        let legs = m + 1;
        let p_high =
            promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap().place_on_legs(legs, 2).unwrap());
        let p_low =
            promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap().place_on_legs(legs, 1).unwrap());
        let pp = &p_high * &p_low;
        let det = self.e_k(u, m);
        let t_last = self.t_at(v).place_on_legs(legs, legs).unwrap();
        let t_first = self.t_at(v).place_on_legs(legs, 1).unwrap();
        let lhs = &pp.scale_ring_right(&det) * &t_last;
        let rhs = &t_first.scale_ring_right(&det) * &pp;
        &lhs - &rhs
    }

    /// Plain centrality of e_m(u) against both generating matrices.
    pub fn det_central(&self, oracle: &IdealOracle, u: &QRat, m: usize) -> bool {
        let det = self.e_k(u, m);
        for mat in [&self.t, &self.tb] {
            let comm = &mat.scale_ring(&det) - &mat.scale_ring_right(&det);
            for e in nonzero_entries(&comm) {
                if !oracle.membership(&e).expect("within cap").is_member() {
                    return false;
                }
            }
        }
        true
    }
}

// ---- abstract-mode machinery (Laurent coefficients, Hecke flavor) ----

/// Current matrix as an exact vector of Laurent coefficients.
#[derive(Clone)]
pub struct LaurentMat {
    /// coeffs[w] is the coefficient of u^(-w); exact for all stored w.
    pub coeffs: Vec<MatOverAlg>,
}

impl LaurentMat {
    pub fn generating(sym: &Symmetry, k_trunc: usize) -> Self {
        let n = sym.n();
        LaurentMat {
            coeffs: (0..=k_trunc)
                .map(|w| laurent_gen_matrix(n, YangianMode::Braided, w))
                .collect(),
        }
    }

    /// L(alpha u): multiplies the w-th coefficient by alpha^(-w).
    pub fn scale_arg(&self, alpha: &QRat) -> Self {
        LaurentMat {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(w, m)| m.scale(&alpha.pow(-(w as i64))))
                .collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&MatOverAlg) -> MatOverAlg) -> Self {
        LaurentMat { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.coeffs.len().min(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(len);
        for w in 0..len {
            let mut acc: Option<MatOverAlg> = None;
            for i in 0..=w {
                let term = &self.coeffs[i] * &other.coeffs[w - i];
                acc = Some(match acc {
                    None => term,
                    Some(a) => &a + &term,
                });
            }
            coeffs.push(acc.unwrap());
        }
        LaurentMat { coeffs }
    }
}

/// Laurent coefficients of e_m(u) in the abstract truncated braided
/// Yangian of a Hecke symmetry (multiplicative shifts).
pub fn abstract_e_m_coeffs(sym: &Symmetry, m: usize, k_trunc: usize) -> Vec<NCPoly> {
    assert!(!sym.is_involutive(), "abstract coefficients use multiplicative shifts");
    let l = LaurentMat::generating(sym, k_trunc);
    let mut prod: Option<LaurentMat> = None;
    for j in 0..m {
        let shifted = l.scale_arg(&sym.q_pow(-2 * j as i64));
        let barred = shifted.map(|c| bar(sym, c, j + 1, m));
        prod = Some(match prod {
            None => barred,
            Some(p) => p.mul(&barred),
        });
    }
    let prod = prod.unwrap();
    let p = promote::<NCPoly>(&sym.skew_symmetrizer(m).unwrap());
    prod.coeffs
        .iter()
        .map(|c| (&p * c).r_trace_full(sym.c_op()).unwrap())
        .collect()
}

/// Direct membership check of the determinant centrality in the abstract
/// truncated presentation: [e_m[w], l_i^j[s]] for all w + s <= K.
pub fn det_centrality_abstract(
    sym: &Symmetry,
    m: usize,
    k_trunc: usize,
    oracle: &IdealOracle,
) -> Result<bool, crate::ncalg::AlgError> {
    let coeffs = abstract_e_m_coeffs(sym, m, k_trunc);
    let nn = sym.n() * sym.n();
    for (w, em) in coeffs.iter().enumerate().skip(1) {
        for s in 1..=(k_trunc - w).max(0) {
            if w + s > k_trunc {
                continue;
            }
            for g in 0..nn {
                let gen = NCPoly::from_gen(((s - 1) * nn + g) as GenId);
                let c = em.commutator(&gen);
                if !oracle.membership(&c)?.is_member() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
