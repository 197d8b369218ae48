//! Irreducible factorization of univariate rational polynomials.
//!
//! Classic Zassenhaus pipeline: Yun squarefree split over Q, reduction of
//! each primitive integer part modulo a good small prime, Cantor-Zassenhaus
//! factorization there, quadratic Hensel lifting of the modular factors past
//! the Landau-Mignotte coefficient bound, and subset recombination with trial
//! division. Everything is deterministic; the equal-degree splitting step
//! draws its random elements from a fixed-seed xorshift generator.

use num::{BigInt, Integer, One, Signed, Zero};

use super::poly::Poly;
use super::rational::Rational;

/// A factorization `unit * prod factor_i ^ mult_i` with monic irreducible
/// factors over Q, sorted by degree then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Factors a nonzero rational polynomial into monic irreducibles over Q.
pub fn factor(f: &Poly) -> Factorization {
    assert!(!f.is_zero(), "factorization of the zero polynomial");
    let unit = f.leading().clone();
    if f.degree() == Some(0) {
        return Factorization { unit, factors: Vec::new() };
    }
    let mut factors = Vec::new();
    for (part, mult) in f.monic().squarefree_decomposition() {
        let primitive = rational_to_primitive(&part);
        for irr in factor_squarefree_primitive(primitive) {
            factors.push((zpoly_to_poly(&irr).monic(), mult));
        }
    }
    factors.sort();
    Factorization { unit, factors }
}

// ---------------------------------------------------------------------------
// Integer polynomial plumbing. Coefficients ascending, no trailing zeros.

type ZPoly = Vec<BigInt>;

fn zp_trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn zp_deg(v: &[BigInt]) -> Option<usize> {
    v.len().checked_sub(1)
}

fn zp_norm(v: &[BigInt], m: &BigInt) -> ZPoly {
    zp_trim(v.iter().map(|c| c.mod_floor(m)).collect())
}

fn zp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push((a.get(i).unwrap_or(&zero) + b.get(i).unwrap_or(&zero)).mod_floor(m));
    }
    zp_trim(out)
}

fn zp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push((a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).mod_floor(m));
    }
    zp_trim(out)
}

fn zp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zp_norm(&out, m)
}

fn zp_scale(a: &[BigInt], c: &BigInt, m: &BigInt) -> ZPoly {
    zp_trim(a.iter().map(|x| (x * c).mod_floor(m)).collect())
}

/// Modular inverse; panics when gcd(a, m) != 1.
fn int_inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let eg = a.extended_gcd(m);
    let inv = eg.x.mod_floor(m);
    assert!(
        (a * &inv).mod_floor(m).is_one(),
        "noninvertible element in modular arithmetic"
    );
    inv
}

/// Division with remainder mod m; the divisor's leading coefficient must be
/// invertible mod m (always true for monic divisors).
fn zp_divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = zp_deg(b).expect("modular division by zero polynomial");
    let mut rem: ZPoly = a.to_vec();
    let da = match zp_deg(&rem) {
        Some(d) if d >= db => d,
        _ => return (Vec::new(), zp_trim(rem)),
    };
    let lead_inv = int_inv_mod(&b[db], m);
    let mut quot = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let q = (&rem[k + db] * &lead_inv).mod_floor(m);
        if q.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            let cur = &rem[k + i] - bc * &q;
            rem[k + i] = cur.mod_floor(m);
        }
        quot[k] = q;
    }
    (zp_trim(quot), zp_trim(rem))
}

/// Monic gcd of polynomials over the field Z/p.
fn zp_gcd(a: &[BigInt], b: &[BigInt], p: &BigInt) -> ZPoly {
    let mut r0 = zp_norm(a, p);
    let mut r1 = zp_norm(b, p);
    while !r1.is_empty() {
        let (_, r) = zp_divrem(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    if r0.is_empty() {
        return r0;
    }
    let inv = int_inv_mod(r0.last().unwrap(), p);
    zp_scale(&r0, &inv, p)
}

/// Bezout pair with s*a + t*b = 1 mod p for coprime a, b.
fn zp_xgcd(a: &[BigInt], b: &[BigInt], p: &BigInt) -> (ZPoly, ZPoly) {
    let (mut r0, mut r1) = (zp_norm(a, p), zp_norm(b, p));
    let (mut s0, mut s1) = (vec![BigInt::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![BigInt::one()]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        (r0, r1) = (r1, r);
        let ns = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        (s0, s1) = (s1, ns);
        let nt = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        (t0, t1) = (t1, nt);
    }
    assert_eq!(r0.len(), 1, "bezout pair requested for noncoprime polynomials");
    let inv = int_inv_mod(&r0[0], p);
    (zp_scale(&s0, &inv, p), zp_scale(&t0, &inv, p))
}

fn zp_derivative(a: &[BigInt], p: &BigInt) -> ZPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    zp_trim(
        a[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| (c * BigInt::from(i as u64 + 1)).mod_floor(p))
            .collect(),
    )
}

/// base^exp mod (f, m); f monic.
fn zp_powmod(base: &[BigInt], exp: &BigInt, f: &[BigInt], m: &BigInt) -> ZPoly {
    assert!(!exp.is_negative());
    let bits = exp.to_biguint().unwrap().to_radix_le(2);
    let mut acc = vec![BigInt::one()];
    let mut sq = zp_divrem(base, f, m).1;
    for (i, bit) in bits.iter().enumerate() {
        if *bit == 1 {
            acc = zp_divrem(&zp_mul(&acc, &sq, m), f, m).1;
        }
        if i + 1 < bits.len() {
            sq = zp_divrem(&zp_mul(&sq, &sq, m), f, m).1;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Factorization over Z/p for an odd prime p.

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }
}

fn random_poly(rng: &mut XorShift, deg_below: usize, p: u64) -> ZPoly {
    let coeffs = (0..deg_below)
        .map(|_| BigInt::from(rng.next() % p))
        .collect::<Vec<_>>();
    zp_trim(coeffs)
}

/// Splits a monic squarefree product of degree-d irreducibles over Z/p.
fn equal_degree_split(f: ZPoly, d: usize, p: u64, rng: &mut XorShift) -> Vec<ZPoly> {
    let deg = zp_deg(&f).unwrap();
    if deg == d {
        return vec![f];
    }
    let pb = BigInt::from(p);
    let exp = (pb.pow(d as u32) - BigInt::one()) / BigInt::from(2);
    loop {
        let r = random_poly(rng, 2 * d, p);
        if zp_deg(&r).is_none() {
            continue;
        }
        let u = zp_powmod(&r, &exp, &f, &pb);
        let g = zp_gcd(&zp_sub(&u, &[BigInt::one()], &pb), &f, &pb);
        if let Some(dg) = zp_deg(&g) {
            if dg > 0 && dg < deg {
                let (q, rem) = zp_divrem(&f, &g, &pb);
                debug_assert!(rem.is_empty());
                let mut out = equal_degree_split(g, d, p, rng);
                out.extend(equal_degree_split(q, d, p, rng));
                return out;
            }
        }
    }
}

/// Monic irreducible factors of a monic squarefree f over Z/p, p odd.
fn modp_factor(f: ZPoly, p: u64) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    let mut rng = XorShift(0x9E37_79B9_7F4A_7C15);
    let x: ZPoly = vec![BigInt::zero(), BigInt::one()];
    let mut out = Vec::new();
    let mut f0 = f;
    let mut h = zp_divrem(&x, &f0, &pb).1;
    let mut d = 0usize;
    while zp_deg(&f0).is_some_and(|n| n >= 1) {
        d += 1;
        let n = zp_deg(&f0).unwrap();
        if n < 2 * d {
            out.push(f0);
            break;
        }
        h = zp_powmod(&h, &pb, &f0, &pb);
        let g = zp_gcd(&zp_sub(&h, &x, &pb), &f0, &pb);
        if zp_deg(&g).is_some_and(|dg| dg >= 1) {
            out.extend(equal_degree_split(g.clone(), d, p, &mut rng));
            f0 = zp_divrem(&f0, &g, &pb).0;
            h = zp_divrem(&h, &f0, &pb).1;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Hensel lifting.

/// One quadratic step: from f = g*h and s*g + t*h = 1 mod m to the same
/// statements mod m^2, with h (and here also g) staying monic.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zp_sub(&zp_norm(f, &m2), &zp_mul(g, h, &m2), &m2);
    let (q, r) = zp_divrem(&zp_mul(s, &e, &m2), h, &m2);
    let g1 = zp_add(&zp_add(g, &zp_mul(t, &e, &m2), &m2), &zp_mul(&q, g, &m2), &m2);
    let h1 = zp_add(h, &r, &m2);
    let b = zp_sub(
        &zp_add(&zp_mul(s, &g1, &m2), &zp_mul(t, &h1, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zp_divrem(&zp_mul(s, &b, &m2), &h1, &m2);
    let s1 = zp_sub(s, &d, &m2);
    let t1 = zp_sub(&zp_sub(t, &zp_mul(t, &b, &m2), &m2), &zp_mul(&c, &g1, &m2), &m2);
    (g1, h1, s1, t1)
}

/// Lifts the monic factorization f = prod(leaves) mod p to mod m_target,
/// where m_target = p^(2^j). f must be monic mod m_target.
fn lift_tree(f: &[BigInt], leaves: &[ZPoly], p: &BigInt, m_target: &BigInt) -> Vec<ZPoly> {
    if leaves.len() == 1 {
        return vec![zp_norm(f, m_target)];
    }
    let (lo, hi) = leaves.split_at(leaves.len() / 2);
    let prod = |part: &[ZPoly]| {
        part.iter()
            .fold(vec![BigInt::one()], |acc, q| zp_mul(&acc, q, p))
    };
    let (mut g, mut h) = (prod(lo), prod(hi));
    let (mut s, mut t) = zp_xgcd(&g, &h, p);
    let mut m = p.clone();
    while m < *m_target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    let g = zp_norm(&g, m_target);
    let h = zp_norm(&h, m_target);
    debug_assert!(g.last().is_some_and(One::is_one) && h.last().is_some_and(One::is_one));
    let mut out = lift_tree(&g, lo, p, m_target);
    out.extend(lift_tree(&h, hi, p, m_target));
    out
}

// ---------------------------------------------------------------------------
// Zassenhaus recombination.

fn centered(v: &[BigInt], m: &BigInt) -> ZPoly {
    zp_trim(
        v.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if &r * 2 > *m {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Divides out the content and flips signs to a positive leading coefficient.
fn primitive_positive(v: ZPoly) -> ZPoly {
    let v = zp_trim(v);
    if v.is_empty() {
        return v;
    }
    let mut c = content(&v);
    if v.last().unwrap().is_negative() {
        c = -c;
    }
    v.into_iter().map(|x| x / &c).collect()
}

fn zpoly_to_poly(v: &[BigInt]) -> Poly {
    Poly::new(v.iter().map(|c| Rational::from(c.clone())).collect())
}

fn poly_to_zpoly(p: &Poly) -> Option<ZPoly> {
    p.coeffs()
        .iter()
        .map(|c| c.is_integer().then(|| c.numerator().clone()))
        .collect()
}

/// Exact division of primitive integer polynomials, via Gauss's lemma.
fn int_div_exact(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let q = zpoly_to_poly(f).div_exact(&zpoly_to_poly(g))?;
    Some(poly_to_zpoly(&q).expect("quotient of primitive polynomials is integral"))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    loop {
        if i == 0 {
            return false;
        }
        i -= 1;
        if idx[i] != n - k + i {
            break;
        }
    }
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

/// Searches subsets of the lifted modular factors of size `s` for one whose
/// product (times the leading coefficient, centered mod m) divides f.
fn find_subset(
    f: &[BigInt],
    modular: &[ZPoly],
    s: usize,
    m: &BigInt,
) -> Option<(Vec<usize>, ZPoly, ZPoly)> {
    let lc = f.last().unwrap().mod_floor(m);
    let mut idx: Vec<usize> = (0..s).collect();
    loop {
        let mut prod = vec![lc.clone()];
        for &i in &idx {
            prod = zp_mul(&prod, &modular[i], m);
        }
        let cand = primitive_positive(centered(&prod, m));
        if zp_deg(&cand).is_some_and(|d| d >= 1) {
            if let Some(q) = int_div_exact(f, &cand) {
                return Some((idx, cand, q));
            }
        }
        if !next_combination(&mut idx, modular.len()) {
            return None;
        }
    }
}

fn recombine(f: ZPoly, mut modular: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::new();
    let mut fcur = f;
    let mut s = 1;
    while 2 * s <= modular.len() {
        match find_subset(&fcur, &modular, s, m) {
            Some((idx, cand, quot)) => {
                out.push(cand);
                fcur = quot;
                for &i in idx.iter().rev() {
                    modular.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if zp_deg(&fcur).is_some_and(|d| d >= 1) {
        out.push(fcur);
    }
    out
}

// ---------------------------------------------------------------------------
// Driver for a single squarefree primitive integer polynomial.

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// max |coefficient|.
fn sup_norm(v: &[BigInt]) -> BigInt {
    v.iter().map(Signed::abs).max().unwrap_or_else(BigInt::zero)
}

/// Any integer divisor of f has sup norm at most
/// sqrt(n+1) * 2^n * |f|_inf * |lc(f)| (Landau-Mignotte).
fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = zp_deg(f).unwrap() as u32;
    let root = BigInt::from(n + 1).sqrt() + BigInt::one();
    root * (BigInt::one() << n) * sup_norm(f) * f.last().unwrap().abs()
}

/// Clears denominators and content: the positive primitive integer polynomial
/// proportional to the given monic rational polynomial.
fn rational_to_primitive(f: &Poly) -> ZPoly {
    let den_lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denominator()));
    let ints: ZPoly = f
        .coeffs()
        .iter()
        .map(|c| c.numerator() * (&den_lcm / c.denominator()))
        .collect();
    primitive_positive(ints)
}

/// Coprimality certificate: coprime images modulo a prime preserving both
/// leading coefficients force the gcd over Q to be constant. A nonconstant
/// modular gcd proves nothing (the prime may divide the resultant), so a
/// false return only means "undecided".
pub(crate) fn witnesses_coprime(a: &Poly, b: &Poly) -> bool {
    let az = rational_to_primitive(a);
    let bz = rational_to_primitive(b);
    let mut checked = 0;
    let mut p = 1_000_003u64;
    while checked < 3 && p < 1_100_000 {
        if is_small_prime(p) {
            let pb = BigInt::from(p);
            if !az.last().unwrap().mod_floor(&pb).is_zero()
                && !bz.last().unwrap().mod_floor(&pb).is_zero()
            {
                checked += 1;
                let g = zp_gcd(&zp_norm(&az, &pb), &zp_norm(&bz, &pb), &pb);
                if zp_deg(&g) == Some(0) {
                    return true;
                }
            }
        }
        p += 2;
    }
    false
}

fn factor_squarefree_primitive(f: ZPoly) -> Vec<ZPoly> {
    let n = zp_deg(&f).expect("factoring the zero polynomial");
    assert!(n >= 1, "squarefree driver needs a nonconstant polynomial");
    if n == 1 {
        return vec![f];
    }

    // A prime not dividing the leading coefficient and keeping f squarefree.
    let mut p = 3u64;
    let (p, fp, modular) = loop {
        assert!(p < 100_000, "no usable prime found for modular factorization");
        if is_small_prime(p) {
            let pb = BigInt::from(p);
            if !f.last().unwrap().mod_floor(&pb).is_zero() {
                let fp0 = zp_norm(&f, &pb);
                let inv = int_inv_mod(fp0.last().unwrap(), &pb);
                let fp = zp_scale(&fp0, &inv, &pb);
                let g = zp_gcd(&fp, &zp_derivative(&fp, &pb), &pb);
                if zp_deg(&g) == Some(0) {
                    break (p, fp.clone(), modp_factor(fp, p));
                }
            }
        }
        p += 2;
    };
    debug_assert_eq!(zp_deg(&fp), Some(n));
    if modular.len() == 1 {
        return vec![f];
    }

    // Lift to p^(2^j) beyond twice the divisor coefficient bound.
    let pb = BigInt::from(p);
    let bound = mignotte_bound(&f) * 2;
    let mut m = pb.clone();
    while m <= bound {
        m = &m * &m;
    }
    let lc_inv = int_inv_mod(f.last().unwrap(), &m);
    let f_monic = zp_scale(&zp_norm(&f, &m), &lc_inv, &m);
    let lifted = lift_tree(&f_monic, &modular, &pb, &m);
    recombine(f, lifted, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn monic_factors(f: &Poly) -> Vec<(String, u32)> {
        factor(f)
            .factors
            .into_iter()
            .map(|(p, m)| (p.to_string(), m))
            .collect()
    }

    #[test]
    fn difference_of_squares() {
        let f = Poly::from_ints(&[-1, 0, 1]);
        let fac = factor(&f);
        assert!(fac.unit.is_one());
        assert_eq!(
            monic_factors(&f),
            vec![("-1 + t".into(), 1), ("1 + t".into(), 1)]
        );
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn unit_and_linear_factors() {
        // 6t^2 + 6t = 6 * t * (t + 1)
        let f = Poly::from_ints(&[0, 6, 6]);
        let fac = factor(&f);
        assert_eq!(fac.unit, rat(6, 1));
        assert_eq!(monic_factors(&f), vec![("t".into(), 1), ("1 + t".into(), 1)]);

        // 3t + 2 = 3 * (t + 2/3)
        let g = Poly::from_ints(&[2, 3]);
        let gf = factor(&g);
        assert_eq!(gf.unit, rat(3, 1));
        assert_eq!(monic_factors(&g), vec![("2/3 + t".into(), 1)]);
        assert_eq!(gf.expand(), g);
    }

    #[test]
    fn irreducibles_stay_whole() {
        for f in [
            Poly::from_ints(&[1, 0, 1]),    // t^2 + 1
            Poly::from_ints(&[-2, 0, 1]),   // t^2 - 2
            Poly::from_ints(&[1, 1, 0, 1]), // t^3 + t + 1
        ] {
            assert_eq!(monic_factors(&f), vec![(f.to_string(), 1)]);
        }
    }

    #[test]
    fn reducible_modulo_every_prime() {
        // t^4 + 1 is irreducible over Q but splits mod every prime, so the
        // recombination step has to reject all proper subsets.
        let f = Poly::from_ints(&[1, 0, 0, 0, 1]);
        assert_eq!(monic_factors(&f), vec![("1 + t^4".into(), 1)]);
    }

    #[test]
    fn two_quadratic_surds() {
        // (t^2 - 2)(t^2 - 3)
        let f = Poly::from_ints(&[6, 0, -5, 0, 1]);
        assert_eq!(
            monic_factors(&f),
            vec![("-3 + t^2".into(), 1), ("-2 + t^2".into(), 1)]
        );
    }

    #[test]
    fn four_quadratics_from_degree_eight() {
        // t^8 - 16 = (t^2 - 2)(t^2 + 2)(t^2 - 2t + 2)(t^2 + 2t + 2)
        let f = Poly::from_ints(&[-16, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            monic_factors(&f),
            vec![
                ("2 - 2*t + t^2".into(), 1),
                ("-2 + t^2".into(), 1),
                ("2 + t^2".into(), 1),
                ("2 + 2*t + t^2".into(), 1),
            ]
        );
        assert_eq!(factor(&f).expand(), f);
    }

    #[test]
    fn sixth_cyclotomic_split() {
        // t^6 - 1
        let f = Poly::from_ints(&[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(
            monic_factors(&f),
            vec![
                ("-1 + t".into(), 1),
                ("1 + t".into(), 1),
                ("1 - t + t^2".into(), 1),
                ("1 + t + t^2".into(), 1),
            ]
        );
    }

    #[test]
    fn multiplicities_and_rational_unit() {
        // (5/3) * t^2 * (t-1)^3 * (t^2+1)
        let f = Poly::constant(rat(5, 3))
            * Poly::from_ints(&[0, 1]).pow(2)
            * Poly::from_ints(&[-1, 1]).pow(3)
            * Poly::from_ints(&[1, 0, 1]);
        let fac = factor(&f);
        assert_eq!(fac.unit, rat(5, 3));
        assert_eq!(
            monic_factors(&f),
            vec![
                ("-1 + t".into(), 3),
                ("t".into(), 2),
                ("1 + t^2".into(), 1),
            ]
        );
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn high_multiplicity_discriminant_shape() {
        // 19683 * t^2 * (t-1)^9
        let f = Poly::constant(rat(19683, 1))
            * Poly::from_ints(&[0, 1]).pow(2)
            * Poly::from_ints(&[-1, 1]).pow(9);
        let fac = factor(&f);
        assert_eq!(fac.unit, rat(19683, 1));
        assert_eq!(
            monic_factors(&f),
            vec![("-1 + t".into(), 9), ("t".into(), 2)]
        );
        assert_eq!(fac.expand(), f);
    }

    #[test]
    fn rational_coefficients_are_cleared() {
        // (t/2 - 1/3)(t + 1/5) expanded with fractions
        let f = &Poly::new(vec![rat(-1, 3), rat(1, 2)]) * &Poly::new(vec![rat(1, 5), rat(1, 1)]);
        let fac = factor(&f);
        assert_eq!(fac.unit, rat(1, 2));
        assert_eq!(
            monic_factors(&f),
            vec![("-2/3 + t".into(), 1), ("1/5 + t".into(), 1)]
        );
        assert_eq!(fac.expand(), f);
    }
}
