//! Current R-matrices from constant symmetries.
//!
//! An involutive symmetry R extends to the rational (additive) current
//! matrix R(u,v) = R - I/(u-v); a Hecke symmetry to the trigonometric
//! (multiplicative) one R(u,v) = R - u(q-q^-1)/(u-v) I, which depends on
//! the quotient u/v only. The parameterized Yang-Baxter equation is
//! certified by exhaustive evaluation on a rational grid: after clearing
//! the denominators (u-v)(u-w)(v-w) both sides are polynomial of degree
//! at most 3 in each spectral variable, so a grid with at least 7 distinct
//! values per variable (leaving >= 5 admissible values per line after
//! removing coincidences) proves the identity, it does not just sample it.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::scalars::QRat;
use crate::symmetries::Symmetry;
use crate::tensors::LinOp;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaxterizeError {
    #[error("current R-matrix has a pole at equal spectral arguments")]
    Pole,
    #[error("zero spectral argument for the multiplicative flavor")]
    ZeroArgument,
    #[error("sample too small: need at least {need} points, got {got}")]
    InsufficientSample { need: usize, got: usize },
    #[error("normalizer d(u,v) vanishes at a sampled pair; resample")]
    ZeroNormalizer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// g(u,v) = -1/(u-v); attached to involutive symmetries.
    RationalAdditive,
    /// g(u,v) = -u(q-q^-1)/(u-v); attached to Hecke symmetries.
    TrigMultiplicative,
}

/// A spectral-parameter R-matrix R(u,v) = R + g(u,v) I.
#[derive(Debug, Clone)]
pub struct CurrentR<'a> {
    sym: &'a Symmetry,
    flavor: Flavor,
}

/// A deterministic list of pairwise distinct rational spectral points.
#[derive(Debug, Clone)]
pub struct SpectralSample {
    pub points: Vec<BigRational>,
    pub seed: u64,
}

impl SpectralSample {
    pub fn generate(seed: u64, count: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<BigRational> = Vec::new();
        while points.len() < count {
            let num: i64 = rng.gen_range(1..=60);
            let den: i64 = rng.gen_range(1..=6);
            let p = BigRational::new(num.into(), den.into());
            if !points.contains(&p) {
                points.push(p);
            }
        }
        SpectralSample { points, seed }
    }

    /// Generate subject to an extra admissibility constraint.
    pub fn generate_where(seed: u64, count: usize, ok: impl Fn(&BigRational) -> bool) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points: Vec<BigRational> = Vec::new();
        while points.len() < count {
            let num: i64 = rng.gen_range(1..=60);
            let den: i64 = rng.gen_range(1..=6);
            let p = BigRational::new(num.into(), den.into());
            if ok(&p) && !points.contains(&p) {
                points.push(p);
            }
        }
        SpectralSample { points, seed }
    }

    pub fn qrat_points(&self) -> Vec<QRat> {
        self.points.iter().map(|p| QRat::from_rational(p.clone())).collect()
    }
}

/// Per-check certificate for the grid certification.
#[derive(Debug, Clone)]
pub struct YbeCertificate {
    pub seed: u64,
    pub grid: Vec<String>,
    pub triples_checked: usize,
    pub pass: bool,
    /// (u, v, w, row, col) of the first failing entry.
    pub first_failure: Option<(String, String, String, usize, usize)>,
}

#[derive(Debug, Clone)]
pub struct UnitarityReport {
    pub profile: String,
    pub pairs_checked: usize,
    pub unitarity_pass: bool,
    pub normalized_involutive_pass: bool,
}

impl<'a> CurrentR<'a> {
    /// The flavor is forced by the kind of the base symmetry.
    pub fn new(sym: &'a Symmetry) -> Self {
        let flavor = if sym.is_involutive() {
            Flavor::RationalAdditive
        } else {
            Flavor::TrigMultiplicative
        };
        CurrentR { sym, flavor }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn sym(&self) -> &Symmetry {
        self.sym
    }

    /// Human-readable description of g(u,v).
    pub fn g_description(&self) -> &'static str {
        match self.flavor {
            Flavor::RationalAdditive => "-1/(u-v)",
            Flavor::TrigMultiplicative => "-u*(q-q^-1)/(u-v)",
        }
    }

    /// g(u,v) for exact arguments in Q(q).
    pub fn g(&self, u: &QRat, v: &QRat) -> Result<QRat, BaxterizeError> {
        let d = u - v;
        if d.is_zero() {
            return Err(BaxterizeError::Pole);
        }
        match self.flavor {
            Flavor::RationalAdditive => Ok(-&d.inverse().unwrap()),
            Flavor::TrigMultiplicative => {
                let q = self.sym.q();
                let qd = q - &q.inverse().unwrap();
                Ok(-&(&(u * &qd) / &d))
            }
        }
    }

    /// R(x) in the single-variable writing: x = u - v for the rational
    /// flavor (pole at 0), x = u/v for the multiplicative one (pole at 1).
    pub fn eval_x(&self, x: &QRat) -> Result<LinOp, BaxterizeError> {
        let g = match self.flavor {
            Flavor::RationalAdditive => {
                if x.is_zero() {
                    return Err(BaxterizeError::Pole);
                }
                -&x.inverse().unwrap()
            }
            Flavor::TrigMultiplicative => {
                let den = x - &QRat::one();
                if den.is_zero() {
                    return Err(BaxterizeError::Pole);
                }
                let q = self.sym.q();
                let qd = q - &q.inverse().unwrap();
                -&(&(x * &qd) / &den)
            }
        };
        Ok(self.scaled_sum(&g))
    }

    /// R(u,v) = R + g(u,v) I.
    pub fn eval_pair(&self, u: &QRat, v: &QRat) -> Result<LinOp, BaxterizeError> {
        if self.flavor == Flavor::TrigMultiplicative && v.is_zero() {
            return Err(BaxterizeError::ZeroArgument);
        }
        let g = self.g(u, v)?;
        Ok(self.scaled_sum(&g))
    }

    fn scaled_sum(&self, g: &QRat) -> LinOp {
        let i = LinOp::identity(self.sym.n(), 2);
        &*self.sym.r() + &i.scale(g)
    }

    /// The scalar profile phi with R(u,v) R(v,u) = phi(u,v) I.
    pub fn unitarity_profile(&self, u: &QRat, v: &QRat) -> Result<QRat, BaxterizeError> {
        let d = u - v;
        if d.is_zero() {
            return Err(BaxterizeError::Pole);
        }
        let d2 = (&d * &d).inverse().unwrap();
        Ok(match self.flavor {
            Flavor::RationalAdditive => &QRat::one() - &d2,
            Flavor::TrigMultiplicative => {
                let q = self.sym.q();
                let qd = q - &q.inverse().unwrap();
                &QRat::one() - &(&(&(u * v) * &(&qd * &qd)) * &d2)
            }
        })
    }

    /// The normalizer d(u,v) with Rtilde = R(u,v)/d(u,v) involutive.
    pub fn normalizer(&self, u: &QRat, v: &QRat) -> Result<QRat, BaxterizeError> {
        let d = u - v;
        if d.is_zero() {
            return Err(BaxterizeError::Pole);
        }
        Ok(match self.flavor {
            Flavor::RationalAdditive => &QRat::one() - &d.inverse().unwrap(),
            Flavor::TrigMultiplicative => {
                let q = self.sym.q();
                let qd = q - &q.inverse().unwrap();
                q - &(&(u * &qd) / &d)
            }
        })
    }

    /// R(u,v)/d(u,v); errors when the normalizer vanishes at the pair.
    pub fn normalized_eval_pair(&self, u: &QRat, v: &QRat) -> Result<LinOp, BaxterizeError> {
        let d = self.normalizer(u, v)?;
        if d.is_zero() {
            return Err(BaxterizeError::ZeroNormalizer);
        }
        Ok(self
            .eval_pair(u, v)?
            .scale(&d.inverse().unwrap()))
    }

    /// Certify the parameterized Yang-Baxter equation
    /// R_12(u,v) R_23(u,w) R_12(v,w) = R_23(v,w) R_12(u,w) R_23(u,v)
    /// on the full grid of pairwise distinct triples from the sample.
    pub fn certify_param_ybe(&self, sample: &SpectralSample) -> Result<YbeCertificate, BaxterizeError> {
        let flavor = self.flavor;
        let me = self.clone();
        certify_grid(self.sym, sample, move |u, v| {
            let _ = flavor;
            me.g(u, v)
        })
    }
}

/// Grid certification engine over an arbitrary coefficient function g.
/// Exposed so tests can falsify perturbed coefficient functions.
pub fn certify_grid(
    sym: &Symmetry,
    sample: &SpectralSample,
    g: impl Fn(&QRat, &QRat) -> Result<QRat, BaxterizeError>,
) -> Result<YbeCertificate, BaxterizeError> {
    const NEED: usize = 7;
    if sample.points.len() < NEED {
        return Err(BaxterizeError::InsufficientSample {
            need: NEED,
            got: sample.points.len(),
        });
    }
    let n = sym.n();
    let r12 = sym.r_at(1, 3);
    let r23 = sym.r_at(2, 3);
    let id = LinOp::identity(n, 3);

    // Expand each side of the equation in the three scalar slots:
    // side = (F_0 + g_0 I)(F_1 + g_1 I)(F_2 + g_2 I)
    //      = sum over subsets S of (prod of the kept matrix factors) *
    //        (prod of the replaced scalars).
    let monomials = |f: [&LinOp; 3]| -> Vec<LinOp> {
        (0..8usize)
            .map(|mask| {
                let mut acc = id.clone();
                for (pos, fm) in f.iter().enumerate() {
                    if mask & (1 << pos) == 0 {
                        acc = &acc * fm;
                    }
                }
                acc
            })
            .collect()
    };
    let lhs_mono = monomials([&r12, &r23, &r12]);
    let rhs_mono = monomials([&r23, &r12, &r23]);

    let pts = sample.qrat_points();
    let mut triples = 0usize;
    for u in &pts {
        for v in &pts {
            if u == v {
                continue;
            }
            for w in &pts {
                if w == u || w == v {
                    continue;
                }
                let g_uv = g(u, v)?;
                let g_uw = g(u, w)?;
                let g_vw = g(v, w)?;
                // scalar slots per side, in factor order
                let lhs_slots = [&g_uv, &g_uw, &g_vw];
                let rhs_slots = [&g_vw, &g_uw, &g_uv];
                let combine = |mono: &[LinOp], slots: [&QRat; 3]| -> LinOp {
                    let mut acc = LinOp::zero(n, 3);
                    for (mask, m) in mono.iter().enumerate() {
                        let mut c = QRat::one();
                        for (pos, s) in slots.iter().enumerate() {
                            if mask & (1 << pos) != 0 {
                                c = &c * s;
                            }
                        }
                        acc = &acc + &m.scale(&c);
                    }
                    acc
                };
                let delta = &combine(&lhs_mono, lhs_slots) - &combine(&rhs_mono, rhs_slots);
                triples += 1;
                if !delta.is_zero() {
                    let d = delta.dim();
                    let (mut fr, mut fc) = (0, 0);
                    'scan: for r in 0..d {
                        for c in 0..d {
                            if !delta.get(r, c).is_zero() {
                                fr = r;
                                fc = c;
                                break 'scan;
                            }
                        }
                    }
                    return Ok(YbeCertificate {
                        seed: sample.seed,
                        grid: sample.points.iter().map(|p| p.to_string()).collect(),
                        triples_checked: triples,
                        pass: false,
                        first_failure: Some((
                            u.to_string(),
                            v.to_string(),
                            w.to_string(),
                            fr,
                            fc,
                        )),
                    });
                }
            }
        }
    }
    Ok(YbeCertificate {
        seed: sample.seed,
        grid: sample.points.iter().map(|p| p.to_string()).collect(),
        triples_checked: triples,
        pass: true,
        first_failure: None,
    })
}

impl<'a> CurrentR<'a> {
    /// Verify R(u,v) R(v,u) = phi(u,v) I at sampled pairs and that the
    /// normalized matrix is involutive: Rtilde(u,v) Rtilde(v,u) = I.
    pub fn unitarity_and_normalize(
        &self,
        sample: &SpectralSample,
        pairs_wanted: usize,
    ) -> Result<UnitarityReport, BaxterizeError> {
        let n = self.sym.n();
        let id = LinOp::identity(n, 2);
        let mut pairs = 0usize;
        let mut unitarity_pass = true;
        let mut normalized_pass = true;
        let pts = self.sample_points_qrat(sample);
        'outer: for u in &pts {
            for v in &pts {
                if u == v {
                    continue;
                }
                let d_uv = self.normalizer(u, v)?;
                let d_vu = self.normalizer(v, u)?;
                if d_uv.is_zero() || d_vu.is_zero() {
                    // admissibility: skip pairs where the normalizer
                    // degenerates (the caller sees them as resampled)
                    continue;
                }
                let fwd = self.eval_pair(u, v)?;
                let bwd = self.eval_pair(v, u)?;
                let phi = self.unitarity_profile(u, v)?;
                if &fwd * &bwd != id.scale(&phi) {
                    unitarity_pass = false;
                }
                let nf = self.normalized_eval_pair(u, v)?;
                let nb = self.normalized_eval_pair(v, u)?;
                if &nf * &nb != id {
                    normalized_pass = false;
                }
                pairs += 1;
                if pairs >= pairs_wanted {
                    break 'outer;
                }
            }
        }
        if pairs < pairs_wanted {
            return Err(BaxterizeError::InsufficientSample {
                need: pairs_wanted,
                got: pairs,
            });
        }
        Ok(UnitarityReport {
            profile: match self.flavor {
                Flavor::RationalAdditive => "1 - 1/(u-v)^2".to_string(),
                Flavor::TrigMultiplicative => "1 - u*v*(q-q^-1)^2/(u-v)^2".to_string(),
            },
            pairs_checked: pairs,
            unitarity_pass,
            normalized_involutive_pass: normalized_pass,
        })
    }

    fn sample_points_qrat(&self, sample: &SpectralSample) -> Vec<QRat> {
        sample.qrat_points()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::qnum;
    use crate::tensors::flip;

    fn rat(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn flip_baxterizes_to_the_yang_matrix() {
        let s = Symmetry::flip(2);
        let cr = CurrentR::new(&s);
        assert_eq!(cr.flavor(), Flavor::RationalAdditive);
        let u = QRat::from_int(5);
        let v = QRat::from_int(2);
        // P - I/(u-v)
        let expect = &flip(2)
            - &LinOp::identity(2, 2).scale(&QRat::from_rational(rat(1, 3)));
        assert_eq!(cr.eval_pair(&u, &v).unwrap(), expect);
    }

    #[test]
    fn standard_two_current_matrix_entries() {
        // the 4x4 current matrix: diag entries (q^-1 x - q)/(x-1) and the
        // middle block [[(q-q^-1)/(1-x), 1], [1, (q-q^-1) x/(1-x)]]
        let s = Symmetry::standard(2);
        let cr = CurrentR::new(&s);
        let x: QRat = "3".parse().unwrap();
        let m = cr.eval_x(&x).unwrap();
        let corner: QRat = "(q^-1*3 - q)/(3 - 1)".parse().unwrap();
        let mid00: QRat = "(q - q^-1)/(1 - 3)".parse().unwrap();
        let mid11: QRat = "(q - q^-1)*3/(1 - 3)".parse().unwrap();
        assert_eq!(*m.get(0, 0), corner);
        assert_eq!(*m.get(3, 3), corner);
        assert_eq!(*m.get(1, 1), mid00);
        assert_eq!(*m.get(1, 2), QRat::one());
        assert_eq!(*m.get(2, 1), QRat::one());
        assert_eq!(*m.get(2, 2), mid11);
    }

    #[test]
    fn trig_flavor_depends_on_quotient_only() {
        let s = Symmetry::standard(2);
        let cr = CurrentR::new(&s);
        let a = cr
            .eval_pair(&QRat::from_int(2), &QRat::from_int(1))
            .unwrap();
        let b = cr
            .eval_pair(&QRat::from_int(4), &QRat::from_int(2))
            .unwrap();
        assert_eq!(a, b);
        // rational flavor depends on the difference only
        let f = Symmetry::flip(2);
        let cf = CurrentR::new(&f);
        let a = cf
            .eval_pair(&QRat::from_int(7), &QRat::from_int(4))
            .unwrap();
        let b = cf
            .eval_pair(&QRat::from_int(5), &QRat::from_int(2))
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn pole_at_equal_arguments() {
        let s = Symmetry::flip(2);
        let cr = CurrentR::new(&s);
        let u = QRat::from_int(3);
        assert_eq!(cr.eval_pair(&u, &u), Err(BaxterizeError::Pole));
    }

    #[test]
    fn standard_at_q_powers_hits_the_skew_symmetrizer_points() {
        // R(q^(2k)) = R - (q^k / k_q) I
        let s = Symmetry::standard(2);
        let cr = CurrentR::new(&s);
        for k in 1..=3i64 {
            let x = QRat::q_pow(2 * k);
            let got = cr.eval_x(&x).unwrap();
            let expect = &*s.r()
                - &LinOp::identity(2, 2).scale(&(&QRat::q_pow(k) / &qnum(k)));
            assert_eq!(got, expect, "k = {k}");
        }
    }

    #[test]
    fn certification_passes_for_builtins() {
        let sample = SpectralSample::generate(7, 7);
        for s in [
            Symmetry::flip(2),
            Symmetry::standard(2),
            Symmetry::jordan(&rat(1, 1), &rat(0, 1)),
        ] {
            let cr = CurrentR::new(&s);
            let cert = cr.certify_param_ybe(&sample).unwrap();
            assert!(cert.pass);
            assert!(cert.triples_checked >= 7 * 6 * 5);
        }
    }

    #[test]
    fn insufficient_sample_is_refused() {
        let s = Symmetry::flip(2);
        let cr = CurrentR::new(&s);
        let small = SpectralSample::generate(1, 5);
        assert!(matches!(
            cr.certify_param_ybe(&small),
            Err(BaxterizeError::InsufficientSample { .. })
        ));
    }

    #[test]
    fn perturbed_coefficient_function_is_falsified() {
        // g = 1/(u-v)^2 is not a solution of the functional equation
        let s = Symmetry::flip(2);
        let sample = SpectralSample::generate(3, 7);
        let cert = certify_grid(&s, &sample, |u, v| {
            let d = u - v;
            if d.is_zero() {
                return Err(BaxterizeError::Pole);
            }
            Ok((&d * &d).inverse().unwrap())
        })
        .unwrap();
        assert!(!cert.pass);
        assert!(cert.first_failure.is_some());
    }

    #[test]
    fn mixing_flavors_fails() {
        // the involutive coefficient on a Hecke base violates the grid
        let s = Symmetry::standard(2);
        let sample = SpectralSample::generate(4, 7);
        let cert = certify_grid(&s, &sample, |u, v| {
            let d = u - v;
            if d.is_zero() {
                return Err(BaxterizeError::Pole);
            }
            Ok(-&d.inverse().unwrap())
        })
        .unwrap();
        assert!(!cert.pass);
    }

    #[test]
    fn unitarity_profiles_and_normalization() {
        let sample = SpectralSample::generate(11, 8);
        for s in [
            Symmetry::flip(2),
            Symmetry::standard(2),
            Symmetry::jordan(&rat(1, 1), &rat(1, 1)),
        ] {
            let cr = CurrentR::new(&s);
            let rep = cr.unitarity_and_normalize(&sample, 10).unwrap();
            assert!(rep.unitarity_pass, "{:?}", s.kind());
            assert!(rep.normalized_involutive_pass);
            assert_eq!(rep.pairs_checked, 10);
        }
    }

    #[test]
    fn hecke_quadratic_relation_shifts_with_g() {
        // (R(u,v) - (q+g) I)(R(u,v) + (q^-1 - g) I) = 0
        let s = Symmetry::standard(2);
        let cr = CurrentR::new(&s);
        let sample = SpectralSample::generate(9, 6);
        let pts = sample.qrat_points();
        let id = LinOp::identity(2, 2);
        for u in &pts {
            for v in &pts {
                if u == v {
                    continue;
                }
                let g = cr.g(u, v).unwrap();
                let m = cr.eval_pair(u, v).unwrap();
                let lhs = &m - &id.scale(&(&"q".parse::<QRat>().unwrap() + &g));
                let rhs = &m + &id.scale(&(&"q^-1".parse::<QRat>().unwrap() - &g));
                assert!((&lhs * &rhs).is_zero());
            }
        }
    }

    #[test]
    fn sample_generation_is_deterministic() {
        let a = SpectralSample::generate(42, 9);
        let b = SpectralSample::generate(42, 9);
        assert_eq!(a.points, b.points);
        let c = SpectralSample::generate(43, 9);
        assert_ne!(a.points, c.points);
    }
}
