//! Constant braidings and their diagnostics.
//!
//! A [`Symmetry`] is a validated solution R of the constant Yang-Baxter
//! equation satisfying the quadratic condition (qI - R)(q^-1 I + R) = 0,
//! together with its cached skew-inverse Psi and the one-leg operators
//! B = Tr_1 Psi and C = Tr_2 Psi. Construction fails unless every
//! invariant holds exactly.
//!
//! Built-ins: the flip, super-flips, the standard Hecke symmetries of
//! U_q(sl(N)) with symbolic q, and the two-parameter involutive family on
//! a two-dimensional space whose N operator is non-scalar for a != b.

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalars::{qnum, QRat};
use crate::tensors::{flip, LinOp, TensorError};

pub const DEFAULT_BIRANK_CUTOFF: usize = 6;

#[derive(Debug, Error)]
pub enum SymmetryError {
    #[error("Yang-Baxter equation fails")]
    YbeViolation,
    #[error("quadratic Hecke/involutive condition fails")]
    HeckeViolation,
    #[error("braiding is not skew-invertible")]
    NotSkewInvertible,
    #[error("skew-inverse verification failed")]
    SkewInverseMismatch,
    #[error("B/C commutation relations fail")]
    BcRelationViolation,
    #[error("q is a root of unity of order {0}, q-integers degenerate")]
    RootOfUnity(usize),
    #[error("symmetry is not even up to the requested cutoff")]
    NotEven,
    #[error("top skew-symmetrizer has rank {0}, expected 1")]
    RankNotOne(usize),
    #[error("invalid symmetry file: {0}")]
    BadFile(String),
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetryKind {
    Involutive,
    Hecke,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiRank {
    /// Even of bi-rank (m|0).
    Even(usize),
    /// No vanishing skew-symmetrizer found up to the cutoff; possibly of
    /// bi-rank (m|n) with n > 0.
    Indeterminate { cutoff: usize },
}

/// A validated constant braiding with its skew-inverse data.
#[derive(Debug, Clone)]
pub struct Symmetry {
    n: usize,
    kind: SymmetryKind,
    q: QRat,
    r: LinOp,
    r_inv: LinOp,
    psi: LinOp,
    b: LinOp,
    c: LinOp,
}

/// Factorization data of the one-dimensional top skew-symmetrizer:
/// row i of P^(m) equals u_i * v, normalized so that u . v = 1.
///
/// The scaling freedom u -> lambda u, v -> v / lambda is fixed by pinning
/// the first nonzero lexicographic component of v: to -1/2 when m = 2 and
/// N = 2 (the convention of the two-dimensional involutive family), to 1
/// otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct UVTensors {
    pub m: usize,
    pub u: Vec<QRat>,
    pub v: Vec<QRat>,
}

/// The single-leg operators built from the u/v tensors. Their product is
/// always scalar; they are scalar separately iff the RTT determinant is
/// central.
#[derive(Debug, Clone, PartialEq)]
pub struct PairOps {
    pub m_op: LinOp,
    pub n_op: LinOp,
}

impl PairOps {
    pub fn m_scalar(&self) -> Option<QRat> {
        self.m_op.as_scalar_multiple_of_identity()
    }

    pub fn n_scalar(&self) -> Option<QRat> {
        self.n_op.as_scalar_multiple_of_identity()
    }

    pub fn product_scalar(&self) -> Option<QRat> {
        (&self.m_op * &self.n_op).as_scalar_multiple_of_identity()
    }
}

impl Symmetry {
    /// Validate a raw braiding and cache its skew-inverse structure.
    pub fn validate(n: usize, r: LinOp, q: QRat, kind: SymmetryKind) -> Result<Self, SymmetryError> {
        assert_eq!(r.legs(), 2, "braiding must act on two legs");
        assert_eq!(r.n(), n);
        if kind == SymmetryKind::Involutive {
            assert!(q.is_one(), "involutive symmetries are normalized to q = 1");
        }
        // Yang-Baxter on three legs.
        let r1 = r.place_on_legs(3, 1)?;
        let r2 = r.place_on_legs(3, 2)?;
        if &(&r1 * &r2) * &r1 != &(&r2 * &r1) * &r2 {
            return Err(SymmetryError::YbeViolation);
        }
        // (qI - R)(q^-1 I + R) = 0.
        let i2 = LinOp::identity(n, 2);
        let lhs = &i2.scale(&q) - &r;
        let rhs = &i2.scale(&q.inverse().expect("nonzero q")) + &r;
        if !(&lhs * &rhs).is_zero() {
            return Err(SymmetryError::HeckeViolation);
        }
        let r_inv = r.inverse().map_err(|_| SymmetryError::NotSkewInvertible)?;
        let psi = skew_inverse(&r)?;
        // Independent verification of the defining contraction
        // Tr_2 R_12 Psi_23 = P_13.
        let contraction = (&r.place_on_legs(3, 1)? * &psi.place_on_legs(3, 2)?).partial_trace(2)?;
        if contraction != flip(n) {
            return Err(SymmetryError::SkewInverseMismatch);
        }
        let b = psi.partial_trace(1)?;
        let c = psi.partial_trace(2)?;
        // R B_1 B_2 = B_1 B_2 R and likewise for C.
        for one_leg in [&b, &c] {
            let x1 = one_leg.place_on_legs(2, 1)?;
            let x2 = one_leg.place_on_legs(2, 2)?;
            let pair = &x1 * &x2;
            if &r * &pair != &pair * &r {
                return Err(SymmetryError::BcRelationViolation);
            }
        }
        Ok(Symmetry { n, kind, q, r, r_inv, psi, b, c })
    }

    /// The flip P.
    pub fn flip(n: usize) -> Self {
        Symmetry::validate(n, flip(n), QRat::one(), SymmetryKind::Involutive)
            .expect("flip is a symmetry")
    }

    /// The super-flip on a (m|n) graded space: x (x) y -> (-1)^(|x||y|) y (x) x.
    pub fn superflip(even: usize, odd: usize) -> Self {
        let n = even + odd;
        let r = LinOp::from_fn(n, 2, |row, col| {
            let (i, j) = (row / n, row % n);
            let (k, l) = (col / n, col % n);
            if k == j && l == i {
                if i >= even && j >= even {
                    -&QRat::one()
                } else {
                    QRat::one()
                }
            } else {
                QRat::zero()
            }
        });
        Symmetry::validate(n, r, QRat::one(), SymmetryKind::Involutive)
            .expect("super-flip is a symmetry")
    }

    /// The standard Hecke symmetry of U_q(sl(N)) with symbolic q:
    /// x_i x_j -> q x_i x_j (i = j), x_j x_i + (q - q^-1) x_i x_j (i < j),
    /// x_j x_i (i > j).
    pub fn standard(n: usize) -> Self {
        let q = QRat::q();
        let qd = &q - &q.inverse().unwrap();
        let r = LinOp::from_fn(n, 2, |row, col| {
            let (i, j) = (row / n, row % n);
            let (k, l) = (col / n, col % n);
            let mut v = QRat::zero();
            if i == j {
                if (k, l) == (i, j) {
                    v = q.clone();
                }
            } else {
                if (k, l) == (j, i) {
                    v = QRat::one();
                }
                if i < j && (k, l) == (i, j) {
                    v = qd.clone();
                }
            }
            v
        });
        Symmetry::validate(n, r, q, SymmetryKind::Hecke).expect("standard braiding is a symmetry")
    }

    /// The standard symmetry with the Hecke parameter specialized to an
    /// exact rational value. Rationals other than 0 and +-1 are never
    /// roots of unity, so the specialization stays generic.
    pub fn standard_numeric(n: usize, q0: &BigRational) -> Result<Self, SymmetryError> {
        if q0.is_zero() {
            return Err(SymmetryError::RootOfUnity(0));
        }
        if q0.is_one() || (-q0).is_one() {
            return Err(SymmetryError::RootOfUnity(if q0.is_one() { 1 } else { 2 }));
        }
        let sym = Symmetry::standard(n);
        let r = LinOp::from_fn(n, 2, |row, col| {
            QRat::from_rational(sym.r.get(row, col).eval_at(q0).expect("polynomial entries"))
        });
        Symmetry::validate(n, r, QRat::from_rational(q0.clone()), SymmetryKind::Hecke)
    }

    /// The two-parameter involutive symmetry on a two-dimensional space.
    pub fn jordan(a: &BigRational, b: &BigRational) -> Self {
        let qa = QRat::from_rational(a.clone());
        let qb = QRat::from_rational(b.clone());
        let qab = &qa * &qb;
        let one = QRat::one();
        let zero = QRat::zero();
        let rows = [
            [one.clone(), qa.clone(), -&qa, qab],
            [zero.clone(), zero.clone(), one.clone(), -&qb],
            [zero.clone(), one.clone(), zero.clone(), qb.clone()],
            [zero.clone(), zero.clone(), zero.clone(), one.clone()],
        ];
        let r = LinOp::from_fn(2, 2, |row, col| rows[row][col].clone());
        Symmetry::validate(2, r, QRat::one(), SymmetryKind::Involutive)
            .expect("the two-parameter family is involutive")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> SymmetryKind {
        self.kind
    }

    pub fn is_involutive(&self) -> bool {
        self.kind == SymmetryKind::Involutive
    }

    pub fn q(&self) -> &QRat {
        &self.q
    }

    pub fn r(&self) -> &LinOp {
        &self.r
    }

    pub fn r_inv(&self) -> &LinOp {
        &self.r_inv
    }

    pub fn psi(&self) -> &LinOp {
        &self.psi
    }

    pub fn b_op(&self) -> &LinOp {
        &self.b
    }

    pub fn c_op(&self) -> &LinOp {
        &self.c
    }

    /// q^e for this symmetry's Hecke parameter.
    pub fn q_pow(&self, e: i64) -> QRat {
        self.q.pow(e)
    }

    /// The q-integer k_q for this symmetry's parameter; the involutive
    /// limit gives the plain integer k.
    pub fn qint(&self, k: i64) -> QRat {
        if self.q.is_one() {
            QRat::from_int(k)
        } else if self.q.as_rational().is_none() {
            qnum(k)
        } else {
            let q = &self.q;
            let d = q - &q.inverse().unwrap();
            &(&q.pow(k) - &q.pow(-k)) / &d
        }
    }

    /// k_q! for this symmetry's parameter.
    pub fn qint_fact(&self, k: i64) -> QRat {
        assert!(k >= 0);
        let mut acc = QRat::one();
        for i in 1..=k {
            acc = &acc * &self.qint(i);
        }
        acc
    }

    /// R placed at legs (i, i+1) of a `total`-leg space.
    pub fn r_at(&self, i: usize, total: usize) -> LinOp {
        self.r.place_on_legs(total, i).expect("leg in range")
    }

    pub fn r_inv_at(&self, i: usize, total: usize) -> LinOp {
        self.r_inv.place_on_legs(total, i).expect("leg in range")
    }

    /// R-trace of a single-leg operator.
    pub fn r_trace_one(&self, x: &LinOp) -> QRat {
        x.r_trace_full(&self.c).expect("one leg")
    }

    fn root_of_unity_guard(&self, k: usize) -> Result<(), SymmetryError> {
        if self.kind == SymmetryKind::Involutive {
            return Ok(());
        }
        if let Some(q0) = self.q.as_rational() {
            if q0.is_zero() {
                return Err(SymmetryError::RootOfUnity(0));
            }
            let mut p = BigRational::one();
            for nn in 1..=(2 * k) {
                p *= &q0;
                if p.is_one() {
                    return Err(SymmetryError::RootOfUnity(nn));
                }
            }
        }
        Ok(())
    }

    /// The skew-symmetrizer P^(k), built by
    /// P^(k+1) = (k_q/(k+1)_q) P^(k) (q^k/k_q I - R_k) P^(k).
    pub fn skew_symmetrizer(&self, k: usize) -> Result<LinOp, SymmetryError> {
        assert!(k >= 1);
        self.root_of_unity_guard(k)?;
        let mut p = LinOp::identity(self.n, 1);
        for j in 1..k {
            let legs = j + 1;
            let pj = p.place_on_legs(legs, 1)?;
            let jq = self.qint(j as i64);
            let jq1 = self.qint(j as i64 + 1);
            let mid = &LinOp::identity(self.n, legs).scale(&(&self.q_pow(j as i64) / &jq))
                - &self.r_at(j, legs);
            p = (&(&pj * &mid) * &pj).scale(&(&jq / &jq1));
        }
        Ok(p)
    }

    /// Smallest m with rank P^(m) > 0 and rank P^(m+1) = 0, scanning up to
    /// the cutoff.
    pub fn birank(&self, cutoff: usize) -> BiRank {
        assert!(cutoff >= 2);
        for m in 1..=cutoff {
            let p_next = self
                .skew_symmetrizer(m + 1)
                .expect("guard already passed");
            if p_next.rank() == 0 {
                return BiRank::Even(m);
            }
        }
        BiRank::Indeterminate { cutoff }
    }

    /// Factor the rank-one top skew-symmetrizer as P^(m) = u (x) v.
    pub fn uv_tensors(&self) -> Result<UVTensors, SymmetryError> {
        let m = match self.birank(DEFAULT_BIRANK_CUTOFF) {
            BiRank::Even(m) => m,
            BiRank::Indeterminate { .. } => return Err(SymmetryError::NotEven),
        };
        let p = self.skew_symmetrizer(m)?;
        let rank = p.rank();
        if rank != 1 {
            return Err(SymmetryError::RankNotOne(rank));
        }
        let d = p.dim();
        // First nonzero row is proportional to v; the row scalars are u.
        let pivot_row = (0..d)
            .find(|&r| (0..d).any(|c| !p.get(r, c).is_zero()))
            .expect("rank one");
        let v_raw: Vec<QRat> = (0..d).map(|c| p.get(pivot_row, c).clone()).collect();
        let pivot_col = (0..d).find(|&c| !v_raw[c].is_zero()).unwrap();
        let u_raw: Vec<QRat> = (0..d)
            .map(|r| &p.get(r, pivot_col).clone() / &v_raw[pivot_col])
            .collect();
        for r in 0..d {
            for c in 0..d {
                assert_eq!(
                    *p.get(r, c),
                    &u_raw[r] * &v_raw[c],
                    "top skew-symmetrizer is not rank one"
                );
            }
        }
        // Pin the scaling by the first nonzero component of v.
        let target = if m == 2 && self.n == 2 {
            QRat::from_rational(BigRational::new((-1).into(), 2.into()))
        } else {
            QRat::one()
        };
        let lambda = &v_raw[pivot_col] / &target;
        let v: Vec<QRat> = v_raw.iter().map(|x| x / &lambda).collect();
        let u: Vec<QRat> = u_raw.iter().map(|x| x * &lambda).collect();
        let pairing = u
            .iter()
            .zip(v.iter())
            .fold(QRat::zero(), |acc, (a, b)| &acc + &(a * b));
        assert!(pairing.is_one(), "u . v = 1 fails");
        Ok(UVTensors { m, u, v })
    }

    /// The M and N operators of the even structure:
    /// M_i^j = (-1)^(m-1) q m_q u_{a...i} v^{j a...},
    /// N_i^j = (-1)^(m-1) q m_q u_{i a...} v^{a... j}.
    pub fn mn_ops(&self, uv: &UVTensors) -> PairOps {
        let n = self.n;
        let m = uv.m;
        let inner = n.pow((m - 1) as u32);
        let mut factor = &self.q * &self.qint(m as i64);
        if (m - 1) % 2 == 1 {
            factor = -&factor;
        }
        let m_op = LinOp::from_fn(n, 1, |i, j| {
            let mut acc = QRat::zero();
            for a in 0..inner {
                // u_{a_1..a_{m-1} i} v^{j a_1..a_{m-1}}
                acc = &acc + &(&uv.u[a * n + i] * &uv.v[j * inner + a]);
            }
            &acc * &factor
        });
        let n_op = LinOp::from_fn(n, 1, |i, j| {
            let mut acc = QRat::zero();
            for a in 0..inner {
                // u_{i a_1..a_{m-1}} v^{a_1..a_{m-1} j}
                acc = &acc + &(&uv.u[i * inner + a] * &uv.v[a * n + j]);
            }
            &acc * &factor
        });
        PairOps { m_op, n_op }
    }

    /// Both forms of the conjugation invariance of the R-trace:
    /// Tr_{R(2)}(R^-1 X_1 R) = Tr_{R(2)}(R X_1 R^-1) = Tr_R(X) I.
    pub fn conjugation_invariance(&self, x: &LinOp) -> bool {
        assert_eq!(x.legs(), 1);
        let x1 = x.place_on_legs(2, 1).unwrap();
        let lhs = (&(&self.r_inv * &x1) * &self.r)
            .r_trace(&[2], &self.c)
            .unwrap();
        let rhs = (&(&self.r * &x1) * &self.r_inv)
            .r_trace(&[2], &self.c)
            .unwrap();
        let target = LinOp::identity(self.n, 1).scale(&self.r_trace_one(x));
        lhs == target && rhs == target
    }

    // ---- serialization ----

    pub fn to_json(&self) -> serde_json::Value {
        let q = if self.q.as_rational().is_some() {
            self.q.to_string()
        } else {
            "sym".to_string()
        };
        serde_json::json!({
            "N": self.n,
            "q": q,
            "R": self.r.to_json(),
        })
    }

    /// Load and fully re-validate a symmetry file.
    pub fn from_json(v: &serde_json::Value) -> Result<Self, SymmetryError> {
        let n = v
            .get("N")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| SymmetryError::BadFile("missing N".into()))? as usize;
        let qs = v
            .get("q")
            .and_then(|x| x.as_str())
            .ok_or_else(|| SymmetryError::BadFile("missing q".into()))?;
        let q = if qs == "sym" {
            QRat::q()
        } else {
            qs.parse::<QRat>()
                .map_err(|e| SymmetryError::BadFile(e.to_string()))?
        };
        let r = LinOp::from_json(
            v.get("R")
                .ok_or_else(|| SymmetryError::BadFile("missing R".into()))?,
        )
        .map_err(SymmetryError::BadFile)?;
        if r.n() != n || r.legs() != 2 {
            return Err(SymmetryError::BadFile("R shape does not match N".into()));
        }
        let (q, kind) = match q.as_rational() {
            Some(q0) if q0.is_one() || (-&q).is_one() => (QRat::one(), SymmetryKind::Involutive),
            Some(q0) if q0.is_zero() => {
                return Err(SymmetryError::BadFile("q = 0".into()));
            }
            _ => (q, SymmetryKind::Hecke),
        };
        Symmetry::validate(n, r, q, kind)
    }
}

/// Solve the defining system R_ij^kl Psi_lp^jq = delta_i^q delta_p^k for
/// the skew-inverse.
///
/// Grouping the indices as A[(i,k)][(j,l)] = R[(i,j)][(k,l)] turns the
/// contraction into the matrix equation A X = D with X[(j,l)][(p,q)] =
/// Psi[(l,p)][(j,q)] and D the flip, so the N^4-unknown system reduces to
/// one N^2 x N^2 inversion. The caller re-verifies the contraction on the
/// result.
pub fn skew_inverse(r: &LinOp) -> Result<LinOp, SymmetryError> {
    let n = r.n();
    let a = LinOp::from_fn(n, 2, |row, col| {
        let (i, k) = (row / n, row % n);
        let (j, l) = (col / n, col % n);
        r.get(i * n + j, k * n + l).clone()
    });
    let a_inv = a.inverse().map_err(|_| SymmetryError::NotSkewInvertible)?;
    let x = &a_inv * &flip(n);
    Ok(LinOp::from_fn(n, 2, |row, col| {
        let (l, p) = (row / n, row % n);
        let (j, q) = (col / n, col % n);
        x.get(j * n + l, p * n + q).clone()
    }))
}
