//! Dense linear operators on tensor powers V^(x)k.
//!
//! # Index convention
//!
//! An operator on V^(x)k is stored as an N^k x N^k matrix. Multi-indices
//! (i_1, ..., i_k) are flattened lexicographically with leg 1 outermost:
//! `flat = i_1 * N^(k-1) + i_2 * N^(k-2) + ... + i_k`, all indices 0-based.
//!
//! Rows carry the *input* multi-index and columns the *output* multi-index:
//! an operator sends the basis vector `x_{i_1} (x) ... (x) x_{i_k}` to
//! `sum_j entries[i][j] * x_{j_1} (x) ... (x) x_{j_k}`. Under this layout
//! the product `a * b` (plain row-by-column) is "apply `a` first, then
//! `b`", which is exactly how operator strings such as `R L_1 R L_1` are
//! meant to be read index-wise; they transcribe verbatim into code. The
//! convention is pinned down by tests against the flip matrix.

use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalars::QRat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TensorError {
    #[error("operator on {op_legs} legs does not fit at leg {start} of {total}")]
    LegOverflow { op_legs: usize, start: usize, total: usize },
    #[error("leg index {leg} out of range 1..={legs}")]
    BadLeg { leg: usize, legs: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
}

/// Coefficient ring for operator entries. QRat gives numeric operators,
/// NCPoly gives matrices over a quantum algebra; QRat scalars commute with
/// everything.
pub trait CoeffRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Multiplication by a central QRat scalar.
    fn scale(&self, s: &QRat) -> Self;
}

impl CoeffRing for QRat {
    fn zero() -> Self {
        QRat::zero()
    }
    fn one() -> Self {
        QRat::one()
    }
    fn is_zero(&self) -> bool {
        QRat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &QRat) -> Self {
        self * s
    }
}

/// Dense square operator on V^(x)legs with entries in T.
#[derive(Clone, Debug, PartialEq)]
pub struct OpMat<T: CoeffRing> {
    n: usize,
    legs: usize,
    entries: Vec<T>,
}

/// Numeric operator over Q(q).
pub type LinOp = OpMat<QRat>;

impl<T: CoeffRing> OpMat<T> {
    pub fn dim_for(n: usize, legs: usize) -> usize {
        n.pow(legs as u32)
    }

    pub fn zero(n: usize, legs: usize) -> Self {
        let d = Self::dim_for(n, legs);
        OpMat { n, legs, entries: vec![T::zero(); d * d] }
    }

    pub fn identity(n: usize, legs: usize) -> Self {
        let d = Self::dim_for(n, legs);
        let mut m = Self::zero(n, legs);
        for i in 0..d {
            m.entries[i * d + i] = T::one();
        }
        m
    }

    pub fn from_fn(n: usize, legs: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let d = Self::dim_for(n, legs);
        let mut entries = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                entries.push(f(r, c));
            }
        }
        OpMat { n, legs, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        Self::dim_for(self.n, self.legs)
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.dim() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        let d = self.dim();
        self.entries[r * d + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, s: &QRat) -> Self {
        OpMat {
            n: self.n,
            legs: self.legs,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    /// Entry-wise ring multiple on the left (for scalar algebra elements).
    pub fn scale_ring(&self, s: &T) -> Self {
        OpMat {
            n: self.n,
            legs: self.legs,
            entries: self.entries.iter().map(|e| s.mul(e)).collect(),
        }
    }

    /// Entry-wise ring multiple on the right.
    pub fn scale_ring_right(&self, s: &T) -> Self {
        OpMat {
            n: self.n,
            legs: self.legs,
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
        }
    }

    /// Is this a T-multiple of the identity? Returns the multiplier.
    pub fn as_scalar_multiple_of_identity(&self) -> Option<T> {
        let d = self.dim();
        let s = self.get(0, 0).clone();
        for r in 0..d {
            for c in 0..d {
                let want = if r == c { s.clone() } else { T::zero() };
                if *self.get(r, c) != want {
                    return None;
                }
            }
        }
        Some(s)
    }

    /// For a 0-leg operator (a 1x1 matrix), the single entry.
    pub fn scalar(&self) -> &T {
        assert_eq!(self.dim(), 1, "scalar() on an operator with legs");
        &self.entries[0]
    }

    /// Embed `op` (acting on its own legs) at position `start` (1-based) of
    /// a `total`-leg space: I^(x)(start-1) (x) op (x) I^(x)(rest).
    pub fn place_on_legs(&self, total: usize, start: usize) -> Result<Self, TensorError> {
        let j = self.legs;
        if start == 0 || start + j - 1 > total {
            return Err(TensorError::LegOverflow { op_legs: j, start, total });
        }
        let pre = Self::dim_for(self.n, start - 1);
        let mid = self.dim();
        let post = Self::dim_for(self.n, total - start + 1 - j);
        let d = pre * mid * post;
        let mut out = OpMat {
            n: self.n,
            legs: total,
            entries: vec![T::zero(); d * d],
        };
        for p in 0..pre {
            for mr in 0..mid {
                for mc in 0..mid {
                    let e = self.get(mr, mc);
                    if e.is_zero() {
                        continue;
                    }
                    for s in 0..post {
                        let r = (p * mid + mr) * post + s;
                        let c = (p * mid + mc) * post + s;
                        out.entries[r * d + c] = e.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Standard partial trace over one leg (1-based).
    pub fn partial_trace(&self, leg: usize) -> Result<Self, TensorError> {
        if leg == 0 || leg > self.legs {
            return Err(TensorError::BadLeg { leg, legs: self.legs });
        }
        let n = self.n;
        let pre = Self::dim_for(n, leg - 1);
        let post = Self::dim_for(n, self.legs - leg);
        let dout = pre * post;
        let mut out = OpMat {
            n,
            legs: self.legs - 1,
            entries: vec![T::zero(); dout * dout],
        };
        for rp in 0..pre {
            for rs in 0..post {
                for cp in 0..pre {
                    for cs in 0..post {
                        let mut acc = T::zero();
                        for a in 0..n {
                            let r = (rp * n + a) * post + rs;
                            let c = (cp * n + a) * post + cs;
                            let e = self.get(r, c);
                            if !e.is_zero() {
                                acc = acc.add(e);
                            }
                        }
                        out.entries[(rp * post + rs) * dout + (cp * post + cs)] = acc;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Full trace.
    pub fn trace(&self) -> T {
        let d = self.dim();
        let mut acc = T::zero();
        for i in 0..d {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// R-trace over the given legs: insert the one-leg operator C on each
    /// selected leg, then take the partial traces. Legs commute, so the
    /// order of the set is immaterial.
    pub fn r_trace(&self, legs: &[usize], c: &LinOp) -> Result<Self, TensorError> {
        if c.n() != self.n || c.legs() != 1 {
            return Err(TensorError::ShapeMismatch(format!(
                "C operator on {} legs of dimension {} against site dimension {}",
                c.legs(),
                c.n(),
                self.n
            )));
        }
        let mut acc = self.clone();
        for &leg in legs {
            if leg == 0 || leg > self.legs {
                return Err(TensorError::BadLeg { leg, legs: self.legs });
            }
            let c_here = promote::<T>(c).place_on_legs(self.legs, leg)?;
            acc = acc.mul_ref(&c_here);
        }
        let mut sorted: Vec<usize> = legs.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), legs.len(), "repeated leg in r_trace");
        for &leg in sorted.iter().rev() {
            acc = acc.partial_trace(leg)?;
        }
        Ok(acc)
    }

    /// R-trace over all legs, yielding a ring element.
    pub fn r_trace_full(&self, c: &LinOp) -> Result<T, TensorError> {
        let legs: Vec<usize> = (1..=self.legs).collect();
        Ok(self.r_trace(&legs, c)?.scalar().clone())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "site dimension mismatch");
        assert_eq!(self.legs, other.legs, "leg count mismatch");
        let d = self.dim();
        let mut out = Self::zero(self.n, self.legs);
        for r in 0..d {
            for m in 0..d {
                let a = self.get(r, m);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(m, c);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    let cur = &out.entries[r * d + c];
                    out.entries[r * d + c] = cur.add(&t);
                }
            }
        }
        out
    }

    /// Kronecker product; `self` occupies the leading legs.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "site dimension mismatch");
        let da = self.dim();
        let db = other.dim();
        let d = da * db;
        let mut out = OpMat {
            n: self.n,
            legs: self.legs + other.legs,
            entries: vec![T::zero(); d * d],
        };
        for ra in 0..da {
            for ca in 0..da {
                let a = self.get(ra, ca);
                if a.is_zero() {
                    continue;
                }
                for rb in 0..db {
                    for cb in 0..db {
                        let b = other.get(rb, cb);
                        if b.is_zero() {
                            continue;
                        }
                        out.entries[(ra * db + rb) * d + (ca * db + cb)] = a.mul(b);
                    }
                }
            }
        }
        out
    }

    /// Apply to a coordinate row vector: out = v . M.
    pub fn apply_row(&self, v: &[T]) -> Vec<T> {
        let d = self.dim();
        assert_eq!(v.len(), d);
        let mut out = vec![T::zero(); d];
        for (r, vr) in v.iter().enumerate() {
            if vr.is_zero() {
                continue;
            }
            for c in 0..d {
                let e = self.get(r, c);
                if !e.is_zero() {
                    out[c] = out[c].add(&vr.mul(e));
                }
            }
        }
        out
    }
}

/// Embed a numeric operator into any coefficient ring.
pub fn promote<T: CoeffRing>(m: &LinOp) -> OpMat<T> {
    OpMat::from_fn(m.n(), m.legs(), |r, c| T::one().scale(m.get(r, c)))
}

impl<T: CoeffRing> Mul for &OpMat<T> {
    type Output = OpMat<T>;
    fn mul(self, other: &OpMat<T>) -> OpMat<T> {
        self.mul_ref(other)
    }
}

impl<T: CoeffRing> Add for &OpMat<T> {
    type Output = OpMat<T>;
    fn add(self, other: &OpMat<T>) -> OpMat<T> {
        assert_eq!(self.n, other.n);
        assert_eq!(self.legs, other.legs);
        OpMat {
            n: self.n,
            legs: self.legs,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

impl<T: CoeffRing> Sub for &OpMat<T> {
    type Output = OpMat<T>;
    fn sub(self, other: &OpMat<T>) -> OpMat<T> {
        assert_eq!(self.n, other.n);
        assert_eq!(self.legs, other.legs);
        OpMat {
            n: self.n,
            legs: self.legs,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

impl<T: CoeffRing> Neg for &OpMat<T> {
    type Output = OpMat<T>;
    fn neg(self) -> OpMat<T> {
        OpMat {
            n: self.n,
            legs: self.legs,
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }
}

impl LinOp {
    /// Inverse by Gauss-Jordan elimination over Q(q).
    pub fn inverse(&self) -> Result<LinOp, TensorError> {
        let d = self.dim();
        let mut a = self.entries.clone();
        let mut inv = LinOp::identity(self.n, self.legs).entries;
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| !a[r * d + col].is_zero())
                .ok_or(TensorError::Singular)?;
            if pivot != col {
                for k in 0..d {
                    a.swap(col * d + k, pivot * d + k);
                    inv.swap(col * d + k, pivot * d + k);
                }
            }
            let p = a[col * d + col].clone();
            let pinv = p.inverse().expect("nonzero pivot");
            for k in 0..d {
                a[col * d + k] = &a[col * d + k] * &pinv;
                inv[col * d + k] = &inv[col * d + k] * &pinv;
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let f = a[r * d + col].clone();
                if f.is_zero() {
                    continue;
                }
                for k in 0..d {
                    let t = &a[col * d + k] * &f;
                    a[r * d + k] = &a[r * d + k] - &t;
                    let t = &inv[col * d + k] * &f;
                    inv[r * d + k] = &inv[r * d + k] - &t;
                }
            }
        }
        Ok(LinOp { n: self.n, legs: self.legs, entries: inv })
    }

    /// Rank over Q(q) by row echelon reduction.
    pub fn rank(&self) -> usize {
        let d = self.dim();
        let mut a = self.entries.clone();
        let mut rank = 0;
        for col in 0..d {
            let pivot = match (rank..d).find(|&r| !a[r * d + col].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            if pivot != rank {
                for k in 0..d {
                    a.swap(rank * d + k, pivot * d + k);
                }
            }
            let p = a[rank * d + col].clone();
            let pinv = p.inverse().unwrap();
            for k in 0..d {
                a[rank * d + k] = &a[rank * d + k] * &pinv;
            }
            for r in 0..d {
                if r == rank {
                    continue;
                }
                let f = a[r * d + col].clone();
                if f.is_zero() {
                    continue;
                }
                for k in 0..d {
                    let t = &a[rank * d + k] * &f;
                    a[r * d + k] = &a[r * d + k] - &t;
                }
            }
            rank += 1;
            if rank == d {
                break;
            }
        }
        rank
    }
}

// ---- JSON serialization of numeric operators ----

#[derive(serde::Serialize, serde::Deserialize)]
struct LinOpJson {
    #[serde(rename = "N")]
    n: usize,
    legs: usize,
    rows: Vec<Vec<String>>,
}

impl LinOp {
    pub fn to_json(&self) -> serde_json::Value {
        let d = self.dim();
        let rows = (0..d)
            .map(|r| (0..d).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        serde_json::to_value(LinOpJson { n: self.n, legs: self.legs, rows }).unwrap()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LinOp, String> {
        let raw: LinOpJson =
            serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
        let d = LinOp::dim_for(raw.n, raw.legs);
        if raw.rows.len() != d || raw.rows.iter().any(|r| r.len() != d) {
            return Err(format!("expected a {d}x{d} matrix"));
        }
        let mut out = LinOp::zero(raw.n, raw.legs);
        for (r, row) in raw.rows.iter().enumerate() {
            for (c, s) in row.iter().enumerate() {
                let x: QRat = s.parse().map_err(|e| format!("entry ({r},{c}): {e}"))?;
                out.set(r, c, x);
            }
        }
        Ok(out)
    }
}

/// The flip (permutation) matrix P on two legs: P(x_i (x) x_j) = x_j (x) x_i.
pub fn flip(n: usize) -> LinOp {
    LinOp::from_fn(n, 2, |r, c| {
        let (i, j) = (r / n, r % n);
        let (k, l) = (c / n, c % n);
        if i == l && j == k {
            QRat::one()
        } else {
            QRat::zero()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qnum;

    fn e_mat(n: usize, i: usize, j: usize) -> LinOp {
        LinOp::from_fn(n, 1, |r, c| {
            if r == i && c == j {
                QRat::one()
            } else {
                QRat::zero()
            }
        })
    }

    #[test]
    fn index_convention_pinned_by_flip() {
        // Row (i,j) of P must be the basis vector e_(j,i): the flip sends
        // x_i (x) x_j to x_j (x) x_i and rows carry inputs.
        let p = flip(2);
        assert_eq!(*p.get(0b01, 0b10), QRat::one());
        assert_eq!(*p.get(0b01, 0b01), QRat::zero());
        let v = p.apply_row(&[
            QRat::zero(),
            QRat::one(),
            QRat::zero(),
            QRat::zero(),
        ]);
        // x_0 (x) x_1 -> x_1 (x) x_0 which is flat index 2
        assert_eq!(v[2], QRat::one());
        assert!(v[0].is_zero() && v[1].is_zero() && v[3].is_zero());
    }

    #[test]
    fn place_flip_at_leg_one() {
        let p = flip(2);
        let p1 = p.place_on_legs(3, 1).unwrap();
        assert_eq!(p1.dim(), 8);
        assert_eq!(p1, p.kron(&LinOp::identity(2, 1)));
        let p2 = p.place_on_legs(3, 2).unwrap();
        assert_eq!(p2, LinOp::identity(2, 1).kron(&p));
        assert!(p.place_on_legs(3, 3).is_err());
    }

    #[test]
    fn place_identity_is_identity() {
        let i1 = LinOp::identity(3, 1);
        assert_eq!(i1.place_on_legs(2, 2).unwrap(), LinOp::identity(3, 2));
    }

    #[test]
    fn place_is_multiplicative() {
        let a = flip(2);
        let b = LinOp::from_fn(2, 2, |r, c| {
            if r == c {
                qnum((r % 3) as i64 + 1)
            } else {
                QRat::from_int((r + 2 * c) as i64 % 3)
            }
        });
        let ab = &a * &b;
        let pa = a.place_on_legs(4, 2).unwrap();
        let pb = b.place_on_legs(4, 2).unwrap();
        assert_eq!(ab.place_on_legs(4, 2).unwrap(), &pa * &pb);
    }

    #[test]
    fn partial_trace_of_flip_is_identity() {
        for n in 2..=3 {
            let p = flip(n);
            assert_eq!(p.partial_trace(2).unwrap(), LinOp::identity(n, 1));
            assert_eq!(p.partial_trace(1).unwrap(), LinOp::identity(n, 1));
        }
    }

    #[test]
    fn partial_trace_of_kron() {
        // Tr_2 (A (x) B) = A * Tr(B)
        let a = LinOp::from_fn(2, 1, |r, c| QRat::from_int((2 * r + c) as i64));
        let b = LinOp::from_fn(2, 1, |r, c| QRat::from_int((r + 3 * c + 1) as i64));
        let t = a.kron(&b).partial_trace(2).unwrap();
        assert_eq!(t, a.scale(&b.trace()));
        let t1 = a.kron(&b).partial_trace(1).unwrap();
        assert_eq!(t1, b.scale(&a.trace()));
    }

    #[test]
    fn partial_traces_commute_over_disjoint_legs() {
        let a = flip(2).place_on_legs(3, 1).unwrap();
        let x = a.partial_trace(1).unwrap().partial_trace(2).unwrap();
        // tracing leg 3 first, then leg 1, hits the same pair
        let y = a.partial_trace(3).unwrap().partial_trace(1).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn r_trace_with_identity_c_is_trace() {
        let p = flip(2);
        let c = LinOp::identity(2, 1);
        assert_eq!(p.r_trace(&[2], &c).unwrap(), p.partial_trace(2).unwrap());
        assert_eq!(p.r_trace_full(&c).unwrap(), p.trace());
    }

    #[test]
    fn inverse_of_flip() {
        let p = flip(3);
        assert_eq!(p.inverse().unwrap(), p);
        let singular = LinOp::zero(2, 1);
        assert!(matches!(singular.inverse(), Err(TensorError::Singular)));
    }

    #[test]
    fn rank_of_projector() {
        let p = flip(2);
        let sym = &(&LinOp::identity(2, 2) + &p).scale(&QRat::from_rational(
            num_rational::BigRational::new(1.into(), 2.into()),
        ));
        assert_eq!(sym.rank(), 3);
    }

    #[test]
    fn json_round_trip() {
        let p = flip(2);
        let v = p.to_json();
        assert_eq!(LinOp::from_json(&v).unwrap(), p);
        let e = e_mat(3, 0, 2);
        assert_eq!(LinOp::from_json(&e.to_json()).unwrap(), e);
    }
}
