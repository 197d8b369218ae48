//! Floating-point evaluation on the upper half plane: the Dedekind eta
//! function, the weight-12 discriminant, the normalized j-function with
//! j(i) = 1 and j(rho) = 0, flat-torus Laplacian eigenvalues, and the
//! analytic torsion in its closed form.
//!
//! All series and products run under an explicit truncation policy; there is
//! no hidden precision state.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num::complex::Complex64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModularError {
    #[error("tau must have positive imaginary part, got {0}")]
    NonPositiveImaginary(f64),
    #[error("tau must be finite")]
    NonFinite,
    #[error("series truncation not achieved within {0} terms")]
    TruncationExceeded(usize),
    #[error("j overflows near the cusp")]
    CuspOverflow,
    #[error("cannot parse {0:?} as a complex number a+bi")]
    Parse(String),
}

/// A point of the moduli space: tau in the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModuliPoint {
    tau: Complex64,
}

impl ModuliPoint {
    pub fn new(re: f64, im: f64) -> Result<Self, ModularError> {
        if !re.is_finite() || !im.is_finite() {
            return Err(ModularError::NonFinite);
        }
        if im <= 0.0 {
            return Err(ModularError::NonPositiveImaginary(im));
        }
        Ok(ModuliPoint { tau: Complex64::new(re, im) })
    }

    pub fn from_complex(tau: Complex64) -> Result<Self, ModularError> {
        ModuliPoint::new(tau.re, tau.im)
    }

    pub fn tau(&self) -> Complex64 {
        self.tau
    }

    pub fn im(&self) -> f64 {
        self.tau.im
    }
}

impl fmt::Display for ModuliPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tau.im >= 0.0 {
            write!(f, "{}+{}i", self.tau.re, self.tau.im)
        } else {
            write!(f, "{}{}i", self.tau.re, self.tau.im)
        }
    }
}

/// Parses "a+bi" decimal forms: "0.3+0.8i", "-0.4+1.2i", "2i", "1+i".
impl FromStr for ModuliPoint {
    type Err = ModularError;

    fn from_str(s: &str) -> Result<Self, ModularError> {
        let s = s.trim();
        let bad = || ModularError::Parse(s.to_string());
        let body = s.strip_suffix('i').ok_or_else(bad)?;
        // split before the sign of the imaginary part, skipping a leading
        // sign and exponent signs like "1e-2"
        let mut split = None;
        for (idx, ch) in body.char_indices().skip(1) {
            if (ch == '+' || ch == '-')
                && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
            {
                split = Some(idx);
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let re: f64 = re_str.trim().parse().map_err(|_| bad())?;
        let im_str = im_str.trim();
        let im: f64 = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => im_str.parse().map_err(|_| bad())?,
        };
        ModuliPoint::new(re, im)
    }
}

/// Truncation control for q-expansions: stop once the next term moves the
/// partial result by less than tail_bound, refuse after max_terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub tail_bound: f64,
    pub max_terms: usize,
}

impl TruncationPolicy {
    pub fn new(tail_bound: f64, max_terms: usize) -> Self {
        assert!(tail_bound > 0.0, "tail bound must be positive");
        assert!(max_terms >= 1, "need at least one term");
        TruncationPolicy { tail_bound, max_terms }
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        TruncationPolicy { tail_bound: 1e-16, max_terms: 10_000 }
    }
}

fn nome(tau: &ModuliPoint) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * tau.tau()).exp()
}

/// Truncated product prod_{r>=1} (1 - q^r)^weight; each factor differs from 1
/// by about weight*|q|^r, which drives the stopping rule.
fn q_pochhammer(
    q: Complex64,
    weight: i32,
    policy: &TruncationPolicy,
) -> Result<Complex64, ModularError> {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut q_pow = q;
    for _ in 0..policy.max_terms {
        if weight as f64 * q_pow.norm() < policy.tail_bound {
            return Ok(acc);
        }
        acc *= (Complex64::new(1.0, 0.0) - q_pow).powi(weight);
        q_pow *= q;
    }
    Err(ModularError::TruncationExceeded(policy.max_terms))
}

/// Dedekind eta: e^{pi i tau/12} prod (1 - q^r).
pub fn eta(tau: &ModuliPoint, policy: &TruncationPolicy) -> Result<Complex64, ModularError> {
    let prefactor = (Complex64::new(0.0, PI / 12.0) * tau.tau()).exp();
    Ok(prefactor * q_pochhammer(nome(tau), 1, policy)?)
}

/// Weight-12 discriminant: q prod (1 - q^r)^24.
pub fn discriminant_tau(
    tau: &ModuliPoint,
    policy: &TruncationPolicy,
) -> Result<Complex64, ModularError> {
    let q = nome(tau);
    Ok(q * q_pochhammer(q, 24, policy)?)
}

fn divisor_power_sum(n: u64, e: u32) -> f64 {
    let mut acc: u128 = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            acc += (d as u128).pow(e);
            let other = n / d;
            if other != d {
                acc += (other as u128).pow(e);
            }
        }
        d += 1;
    }
    acc as f64
}

fn eisenstein(tau: &ModuliPoint, policy: &TruncationPolicy) -> Result<(Complex64, Complex64), ModularError> {
    let q = nome(tau);
    let mut e4 = Complex64::new(1.0, 0.0);
    let mut e6 = Complex64::new(1.0, 0.0);
    let mut q_pow = q;
    for n in 1..=policy.max_terms as u64 {
        let s3 = divisor_power_sum(n, 3);
        let s5 = divisor_power_sum(n, 5);
        let t4 = 240.0 * s3 * q_pow;
        let t6 = 504.0 * s5 * q_pow;
        e4 += t4;
        e6 -= t6;
        if t4.norm() < policy.tail_bound && t6.norm() < policy.tail_bound {
            return Ok((e4, e6));
        }
        q_pow *= q;
    }
    Err(ModularError::TruncationExceeded(policy.max_terms))
}

/// The modular function normalized so j(i) = 1 and j(rho) = 0, computed as
/// E4^3/(E4^3 - E6^2). Overflow near the cusp is reported as an error.
pub fn j_normalized(tau: &ModuliPoint, policy: &TruncationPolicy) -> Result<Complex64, ModularError> {
    let (e4, e6) = eisenstein(tau, policy)?;
    let numer = e4.powu(3);
    let denom = numer - e6 * e6;
    if denom.norm() == 0.0 {
        return Err(ModularError::CuspOverflow);
    }
    let j = numer / denom;
    if !j.re.is_finite() || !j.im.is_finite() {
        return Err(ModularError::CuspOverflow);
    }
    Ok(j)
}

/// Flat-torus Laplacian spectrum slice: (2 pi / Im tau)^2 |n1 tau - n2|^2
/// over |n1|, |n2| <= n_max, returned sorted with multiplicity.
pub fn laplace_eigenvalues(tau: &ModuliPoint, n_max: u32) -> Vec<f64> {
    let scale = (2.0 * PI / tau.im()).powi(2);
    let n = n_max as i64;
    let mut out = Vec::with_capacity(((2 * n + 1) * (2 * n + 1)) as usize);
    for n1 in -n..=n {
        for n2 in -n..=n {
            let z = Complex64::new(n1 as f64, 0.0) * tau.tau()
                - Complex64::new(n2 as f64, 0.0);
            out.push(scale * z.norm_sqr());
        }
    }
    out.sort_by(|a, b| a.partial_cmp(b).unwrap());
    out
}

/// Analytic torsion of the flat-torus family in closed form:
/// (Im tau / 2 pi)^2 |Delta_tau|^{1/6}.
pub fn analytic_torsion(
    tau: &ModuliPoint,
    policy: &TruncationPolicy,
) -> Result<f64, ModularError> {
    let delta = discriminant_tau(tau, policy)?;
    Ok((tau.im() / (2.0 * PI)).powi(2) * delta.norm().powf(1.0 / 6.0))
}

/// Quillen norm squared of the canonical section; identical to the torsion
/// because the reference section has unit L2 norm.
pub fn quillen_norm_sq(
    tau: &ModuliPoint,
    policy: &TruncationPolicy,
) -> Result<f64, ModularError> {
    analytic_torsion(tau, policy)
}

#[cfg(test)]
mod tests {
    use super::*;

    const POLICY: TruncationPolicy = TruncationPolicy { tail_bound: 1e-16, max_terms: 10_000 };

    // Gamma(1/4)/(2 pi^{3/4}), high-precision reference
    const ETA_I: f64 = 0.768_225_422_326_056_659_002_594_179_576_180_644_5;
    const DELTA_I: f64 = 0.001_785_369_850_642_151_904_343_054_960_342_262_3;
    const TORSION_I: f64 = 0.008_822_566_950_681_819_055_589_078_929_046_454_4;

    fn pt(re: f64, im: f64) -> ModuliPoint {
        ModuliPoint::new(re, im).unwrap()
    }

    #[test]
    fn eta_at_i() {
        let v = eta(&pt(0.0, 1.0), &POLICY).unwrap();
        assert!((v.re - ETA_I).abs() < 1e-12);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn eta_translation() {
        let tau = pt(0.3, 0.8);
        let lhs = eta(&pt(1.3, 0.8), &POLICY).unwrap();
        let rhs = Complex64::new(0.0, PI / 12.0).exp() * eta(&tau, &POLICY).unwrap();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn eta_inversion() {
        let tau = Complex64::new(0.4, 1.0);
        let minus_inv = -1.0 / tau;
        let lhs = eta(&ModuliPoint::from_complex(minus_inv).unwrap(), &POLICY).unwrap();
        let rhs = (Complex64::new(0.0, -1.0) * tau).sqrt()
            * eta(&ModuliPoint::from_complex(tau).unwrap(), &POLICY).unwrap();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn discriminant_matches_eta_power() {
        let tau = pt(0.1, 1.5);
        let d = discriminant_tau(&tau, &POLICY).unwrap();
        let e = eta(&tau, &POLICY).unwrap().powu(24);
        assert!((d - e).norm() / d.norm() < 1e-10);

        let d_i = discriminant_tau(&pt(0.0, 1.0), &POLICY).unwrap();
        assert!((d_i.re - DELTA_I).abs() < 1e-14);
        assert!(d_i.im.abs() < 1e-15);
    }

    #[test]
    fn discriminant_translation_and_decay() {
        let d0 = discriminant_tau(&pt(0.2, 1.1), &POLICY).unwrap();
        let d1 = discriminant_tau(&pt(1.2, 1.1), &POLICY).unwrap();
        assert!((d0 - d1).norm() < 1e-12);

        let mags: Vec<f64> = [2.0, 4.0, 8.0]
            .iter()
            .map(|&y| discriminant_tau(&pt(0.0, y), &POLICY).unwrap().norm())
            .collect();
        assert!(mags[0] > mags[1] && mags[1] > mags[2]);
    }

    #[test]
    fn j_corner_values() {
        let j_i = j_normalized(&pt(0.0, 1.0), &POLICY).unwrap();
        assert!((j_i - Complex64::new(1.0, 0.0)).norm() < 1e-8);

        let rho = pt(-0.5, 3f64.sqrt() / 2.0);
        assert!(j_normalized(&rho, &POLICY).unwrap().norm() < 1e-8);
    }

    #[test]
    fn j_reference_points() {
        // classical j/1728 at CM points
        let j2i = j_normalized(&pt(0.0, 2.0), &POLICY).unwrap();
        assert!((j2i - Complex64::new(1331.0 / 8.0, 0.0)).norm() < 1e-8);
        let js2 = j_normalized(&pt(0.0, 2f64.sqrt()), &POLICY).unwrap();
        assert!((js2 - Complex64::new(125.0 / 27.0, 0.0)).norm() < 1e-8);
        let j7 = j_normalized(&pt(0.5, 7f64.sqrt() / 2.0), &POLICY).unwrap();
        assert!((j7 - Complex64::new(-125.0 / 64.0, 0.0)).norm() < 1e-8);
    }

    #[test]
    fn j_modular_invariance() {
        let tau = Complex64::new(0.2, 1.1);
        let base = j_normalized(&ModuliPoint::from_complex(tau).unwrap(), &POLICY).unwrap();
        let shifted = j_normalized(&ModuliPoint::from_complex(tau + 1.0).unwrap(), &POLICY).unwrap();
        let inverted = j_normalized(&ModuliPoint::from_complex(-1.0 / tau).unwrap(), &POLICY).unwrap();
        assert!((base - shifted).norm() < 1e-8);
        assert!((base - inverted).norm() < 1e-8);
    }

    #[test]
    fn eigenvalue_slice() {
        let tau = pt(0.0, 1.0);
        let evs = laplace_eigenvalues(&tau, 2);
        assert_eq!(evs.len(), 25);
        assert_eq!(evs[0], 0.0);
        let target = 4.0 * PI * PI;
        assert!(evs.iter().any(|&e| (e - target).abs() < 1e-9));
    }

    #[test]
    fn eigenvalue_reindexing() {
        // tau -> tau+1 with (n1, n2) -> (n1, n2+n1) is an exact bijection on
        // the lattice, so the small entries of the multisets agree
        let tau = Complex64::new(0.3, 0.9);
        let a = laplace_eigenvalues(&ModuliPoint::from_complex(tau).unwrap(), 5);
        let b = laplace_eigenvalues(&ModuliPoint::from_complex(tau + 1.0).unwrap(), 10);
        let scale = (2.0 * PI / 0.9).powi(2);
        for n1 in -5i64..=5 {
            for n2 in -5i64..=5 {
                let z = Complex64::new(n1 as f64, 0.0) * tau - Complex64::new(n2 as f64, 0.0);
                let ev = scale * z.norm_sqr();
                assert!(a.iter().any(|&x| (x - ev).abs() < 1e-9 * (1.0 + ev)));
                assert!(b.iter().any(|&x| (x - ev).abs() < 1e-9 * (1.0 + ev)));
            }
        }
    }

    #[test]
    fn torsion_values_and_covariance() {
        let t_i = analytic_torsion(&pt(0.0, 1.0), &POLICY).unwrap();
        assert!((t_i - TORSION_I).abs() < 1e-14);

        // translation invariance
        let a = analytic_torsion(&pt(0.3, 1.2), &POLICY).unwrap();
        let b = analytic_torsion(&pt(1.3, 1.2), &POLICY).unwrap();
        assert!((a - b).abs() < 1e-12);

        // inversion covariance: torsion(-1/tau) = torsion(tau)/|tau|^2
        let tau = Complex64::new(0.3, 1.2);
        let inv = analytic_torsion(
            &ModuliPoint::from_complex(-1.0 / tau).unwrap(),
            &POLICY,
        )
        .unwrap();
        assert!((inv - a / tau.norm_sqr()).abs() < 1e-10);

        // plug-in at 2i
        let t2 = analytic_torsion(&pt(0.0, 2.0), &POLICY).unwrap();
        let d2 = discriminant_tau(&pt(0.0, 2.0), &POLICY).unwrap();
        assert_eq!(t2, (1.0 / PI).powi(2) * d2.norm().powf(1.0 / 6.0));
    }

    #[test]
    fn quillen_equals_torsion() {
        for &(x, y) in &[(0.0, 0.5), (0.2, 1.0), (-0.3, 5.0)] {
            let tau = pt(x, y);
            assert_eq!(
                quillen_norm_sq(&tau, &POLICY).unwrap(),
                analytic_torsion(&tau, &POLICY).unwrap()
            );
            assert!(quillen_norm_sq(&tau, &POLICY).unwrap() > 0.0);
        }
        let decay: Vec<f64> = [5.0, 10.0, 20.0]
            .iter()
            .map(|&y| quillen_norm_sq(&pt(0.0, y), &POLICY).unwrap())
            .collect();
        assert!(decay[0] > decay[1] && decay[1] > decay[2]);
    }

    #[test]
    fn truncation_soundness() {
        let doubled = TruncationPolicy { max_terms: 20_000, ..POLICY };
        for &(x, y) in &[(0.0, 0.3), (0.4, 0.5), (-0.2, 1.0)] {
            let tau = pt(x, y);
            let a = eta(&tau, &POLICY).unwrap();
            let b = eta(&tau, &doubled).unwrap();
            assert!((a - b).norm() <= POLICY.tail_bound);
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            ModuliPoint::new(0.0, -1.0),
            Err(ModularError::NonPositiveImaginary(_))
        ));
        assert!(ModuliPoint::new(f64::NAN, 1.0).is_err());

        let tight = TruncationPolicy { tail_bound: 1e-16, max_terms: 10 };
        let low = pt(0.0, 1e-4);
        assert_eq!(
            eta(&low, &tight),
            Err(ModularError::TruncationExceeded(10))
        );
    }

    #[test]
    fn parse_points() {
        let p: ModuliPoint = "0.3+0.8i".parse().unwrap();
        assert_eq!(p.tau(), Complex64::new(0.3, 0.8));
        let p: ModuliPoint = "-0.4+1.2i".parse().unwrap();
        assert_eq!(p.tau(), Complex64::new(-0.4, 1.2));
        let p: ModuliPoint = "2i".parse().unwrap();
        assert_eq!(p.tau(), Complex64::new(0.0, 2.0));
        let p: ModuliPoint = "1+i".parse().unwrap();
        assert_eq!(p.tau(), Complex64::new(1.0, 1.0));
        let p: ModuliPoint = "1e-1+1.5i".parse().unwrap();
        assert_eq!(p.tau(), Complex64::new(0.1, 1.5));

        assert!("0.3-0.8i".parse::<ModuliPoint>().is_err()); // lower half plane
        assert!("abc".parse::<ModuliPoint>().is_err());
        assert!("1+2".parse::<ModuliPoint>().is_err());
    }
}
