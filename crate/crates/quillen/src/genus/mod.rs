//! The signature genus: its characteristic series, the associated
//! multiplicative sequence, evaluation on Pontrjagin data, and the twisted
//! index formula.
//!
//! Two independent algorithms produce the signature polynomials. The primary
//! construction is analytic: take log of the characteristic series, convert
//! powers of the formal root to power sums via Newton's identities, and
//! exponentiate in the graded ring. The second sets up one signature
//! equation per product of even complex projective spaces and solves the
//! exact linear system; agreement of the two is a strong end-to-end oracle.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::graded::GradedPolynomial;
use crate::algebra::partition::{partitions, Partition};
use crate::algebra::rational::Rational;
use crate::algebra::series::PowerSeries;
use crate::algebra::symmetric::{monomial_in_elementary, power_sum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenusError {
    #[error("partition {partition} has weight {found}, expected {expected}")]
    PartitionWeight {
        partition: Partition,
        found: u32,
        expected: u32,
    },
    #[error("polynomial weight {found:?} does not match the manifold weight {expected}")]
    EvaluationWeight { expected: u32, found: Option<u32> },
    #[error("product factor {0} is not a positive even integer")]
    InvalidFactor(u32),
    #[error("empty product factor list")]
    EmptyFactors,
    #[error("generator linear system is singular")]
    SingularSystem,
}

/// Characteristic series of a genus: the coefficients b_0..b_k of Q(z),
/// with b_0 = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusSeries {
    q: PowerSeries,
}

impl GenusSeries {
    pub fn new(q: PowerSeries) -> Self {
        assert!(q.coeff(0).is_one(), "characteristic series must start at 1");
        GenusSeries { q }
    }

    pub fn coefficients(&self) -> &PowerSeries {
        &self.q
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.q.coeff(i)
    }

    pub fn order(&self) -> usize {
        self.q.order()
    }
}

/// The series sqrt(z)/tanh(sqrt(z)) through order k, by exact division of
/// sum z^m/(2m)! by sum z^m/(2m+1)!.
pub fn l_series(k: u32) -> GenusSeries {
    let k = k as usize;
    let mut fact = Rational::one();
    let mut numer = Vec::with_capacity(k + 1);
    let mut denom = Vec::with_capacity(k + 1);
    for m in 0..=k {
        if m > 0 {
            // advance (2m-2)! to (2m)!
            fact *= Rational::from((2 * m - 1) as i64) * Rational::from((2 * m) as i64);
        }
        numer.push(fact.recip());
        denom.push((fact.clone() * Rational::from((2 * m + 1) as i64)).recip());
    }
    let q = PowerSeries::new(numer)
        .div(&PowerSeries::new(denom))
        .expect("division by a unit series");
    GenusSeries::new(q)
}

/// The weight-k polynomial of the multiplicative sequence attached to a
/// characteristic series, in the Pontrjagin variables.
///
/// Construction: with log Q = sum c_j z^j, the log of the total class is
/// sum c_j P_j(p); exponentiate by the weight-graded recurrence
/// n E_n = sum_{j=1..n} j A_j E_{n-j} and take the weight-k part.
pub fn genus_polynomial(series: &GenusSeries, k: u32) -> GradedPolynomial {
    assert!(k >= 1, "genus polynomials are indexed from 1");
    assert!(series.order() >= k as usize, "series order too small for weight {k}");
    let c = series
        .coefficients()
        .log()
        .expect("characteristic series starts at 1");
    // A_j = c_j P_j, the weight-j piece of the logarithm of the total class.
    let a: Vec<GradedPolynomial> = (1..=k)
        .map(|j| power_sum(j).scale(&c.coeff(j as usize)))
        .collect();
    let mut e: Vec<GradedPolynomial> = vec![GradedPolynomial::one()];
    for n in 1..=k {
        let mut acc = GradedPolynomial::zero();
        for j in 1..=n {
            let term = &a[j as usize - 1] * &e[(n - j) as usize];
            acc = &acc + &term.scale(&Rational::from(j as i64));
        }
        e.push(acc.scale(&Rational::from(n as i64).recip()));
    }
    e.pop().unwrap()
}

/// Same polynomial through the monomial-symmetric basis: the total class is
/// sum over partitions of (prod b_(lambda_j)) m_lambda, so the weight-k part
/// is a finite sum of exact base-change polynomials.
pub fn genus_polynomial_via_monomials(series: &GenusSeries, k: u32) -> GradedPolynomial {
    assert!(k >= 1, "genus polynomials are indexed from 1");
    let mut acc = GradedPolynomial::zero();
    for lambda in partitions(k) {
        let mut b = Rational::one();
        for &part in lambda.parts() {
            b *= series.coeff(part as usize);
        }
        acc = &acc + &monomial_in_elementary(&lambda).scale(&b);
    }
    acc
}

/// The signature polynomial of weight k.
pub fn l_polynomial(k: u32) -> GradedPolynomial {
    genus_polynomial(&l_series(k), k)
}

/// A 4k-manifold presented by its Pontrjagin numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldDescriptor {
    dim4k: u32,
    pontrjagin: BTreeMap<Partition, Rational>,
}

impl ManifoldDescriptor {
    /// Validates that every partition key has weight exactly k. Zero values
    /// are dropped; absent keys read as zero.
    pub fn new(
        dim4k: u32,
        numbers: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self, GenusError> {
        let mut pontrjagin = BTreeMap::new();
        for (partition, value) in numbers {
            if partition.weight() != dim4k {
                return Err(GenusError::PartitionWeight {
                    found: partition.weight(),
                    partition,
                    expected: dim4k,
                });
            }
            if !value.is_zero() {
                pontrjagin.insert(partition, value);
            }
        }
        Ok(ManifoldDescriptor { dim4k, pontrjagin })
    }

    pub fn dim4k(&self) -> u32 {
        self.dim4k
    }

    /// The Pontrjagin number indexed by a partition of k; missing keys are 0.
    pub fn pontrjagin_number(&self, partition: &Partition) -> Rational {
        self.pontrjagin
            .get(partition)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn numbers(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.pontrjagin.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct DescriptorRepr {
    k: u32,
    pontrjagin: BTreeMap<String, String>,
}

impl Serialize for ManifoldDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = DescriptorRepr {
            k: self.dim4k,
            pontrjagin: self
                .pontrjagin
                .iter()
                .map(|(p, v)| (p.to_string(), v.to_string()))
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ManifoldDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = DescriptorRepr::deserialize(deserializer)?;
        let mut numbers = Vec::new();
        for (key, value) in repr.pontrjagin {
            let partition: Partition = key.parse().map_err(D::Error::custom)?;
            let rational: Rational = value.parse().map_err(D::Error::custom)?;
            numbers.push((partition, rational));
        }
        ManifoldDescriptor::new(repr.k, numbers).map_err(D::Error::custom)
    }
}

fn binomial(n: u32, r: u32) -> Rational {
    if r > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..r {
        acc *= Rational::new((n - i) as i64, (i + 1) as i64);
    }
    acc
}

/// Total Pontrjagin class of CP^(2k): (1 + H^2)^(2k+1) truncated above
/// H^(4k). The returned polynomial uses variable i for the class p_i, whose
/// value is binom(2k+1, i) H^(2i); the constant term is 1.
pub fn cp_pontrjagin(k: u32) -> GradedPolynomial {
    assert!(k >= 1, "projective space factors are indexed from 1");
    let mut acc = GradedPolynomial::one();
    for i in 1..=k {
        acc = &acc + &GradedPolynomial::variable(i).scale(&binomial(2 * k + 1, i));
    }
    acc
}

/// Multivariate truncated ring Q[x_1..x_m]/(x_j^(caps_j + 1)) used for
/// Kunneth evaluation of product manifolds; x_j stands for H_j^2.
struct TruncatedRing {
    caps: Vec<u32>,
}

type RingElement = BTreeMap<Vec<u32>, Rational>;

impl TruncatedRing {
    fn one(&self) -> RingElement {
        let mut m = RingElement::new();
        m.insert(vec![0; self.caps.len()], Rational::one());
        m
    }

    fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = RingElement::new();
        'terms: for ((ea, ca), (eb, cb)) in
            a.iter().flat_map(|x| b.iter().map(move |y| (x, y)))
        {
            let mut e = vec![0u32; self.caps.len()];
            for i in 0..e.len() {
                e[i] = ea[i] + eb[i];
                if e[i] > self.caps[i] {
                    continue 'terms;
                }
            }
            let c = self.entry_add(&mut out, e, ca * cb);
            let _ = c;
        }
        out
    }

    fn entry_add(&self, m: &mut RingElement, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = m.entry(e).or_insert_with(Rational::zero);
        *entry += c;
    }

    /// Part of total cohomological weight w (sum of exponents).
    fn weight_part(&self, a: &RingElement, w: u32) -> RingElement {
        a.iter()
            .filter(|(e, _)| e.iter().sum::<u32>() == w)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect()
    }

    /// Coefficient of the top monomial x_1^cap_1 ... x_m^cap_m.
    fn top_coefficient(&self, a: &RingElement) -> Rational {
        a.get(&self.caps).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Pontrjagin numbers of CP^(f_1) x ... x CP^(f_m) for even factors f_j=2i_j,
/// by expanding the product of total classes and reading off top-degree
/// coefficients.
pub fn product_manifold(factors: &[u32]) -> Result<ManifoldDescriptor, GenusError> {
    if factors.is_empty() {
        return Err(GenusError::EmptyFactors);
    }
    let mut caps = Vec::with_capacity(factors.len());
    for &f in factors {
        if f == 0 || f % 2 != 0 {
            return Err(GenusError::InvalidFactor(f));
        }
        caps.push(f / 2);
    }
    let k: u32 = caps.iter().sum();
    let ring = TruncatedRing { caps };

    // Total class prod_j (1 + x_j)^(2 i_j + 1), truncated per factor.
    let mut total = ring.one();
    for (j, &i) in ring.caps.clone().iter().enumerate() {
        let mut factor = RingElement::new();
        for a in 0..=i {
            let mut e = vec![0u32; ring.caps.len()];
            e[j] = a;
            factor.insert(e, binomial(2 * i + 1, a));
        }
        total = ring.mul(&total, &factor);
    }

    // p_i of the product is the weight-i part of the total class.
    let classes: Vec<RingElement> = (1..=k).map(|i| ring.weight_part(&total, i)).collect();

    let mut numbers = Vec::new();
    for lambda in partitions(k) {
        let mut prod = ring.one();
        for &part in lambda.parts() {
            prod = ring.mul(&prod, &classes[part as usize - 1]);
        }
        let value = ring.top_coefficient(&prod);
        if !value.is_zero() {
            numbers.push((lambda, value));
        }
    }
    ManifoldDescriptor::new(k, numbers)
}

/// Pairs a weight-k polynomial in the p_i with stored Pontrjagin numbers.
pub fn evaluate_genus(
    m: &ManifoldDescriptor,
    poly: &GradedPolynomial,
) -> Result<Rational, GenusError> {
    if poly.is_zero() {
        return Ok(Rational::zero());
    }
    let found = poly.homogeneous_degree();
    if found != Some(m.dim4k) {
        return Err(GenusError::EvaluationWeight { expected: m.dim4k, found });
    }
    let mut acc = Rational::zero();
    for (lambda, coeff) in poly.sorted_terms() {
        acc += coeff * m.pontrjagin_number(&lambda);
    }
    Ok(acc)
}

/// Exact Gaussian elimination; None when the matrix is singular.
fn solve_linear(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

/// Recovers the weight-k signature polynomial from the normalization
/// sign = 1 on every product of even projective spaces indexed by a
/// partition of k, solving the exact linear system for the coefficients.
pub fn solve_l_via_generators(k: u32) -> Result<GradedPolynomial, GenusError> {
    assert!(k >= 1, "genus polynomials are indexed from 1");
    let lambdas = partitions(k);
    let mut matrix = Vec::with_capacity(lambdas.len());
    for mu in &lambdas {
        let factors: Vec<u32> = mu.parts().iter().map(|&i| 2 * i).collect();
        let generator = product_manifold(&factors)?;
        let row: Vec<Rational> = lambdas
            .iter()
            .map(|lambda| generator.pontrjagin_number(lambda))
            .collect();
        matrix.push(row);
    }
    let rhs = vec![Rational::one(); lambdas.len()];
    let solution = solve_linear(matrix, rhs).ok_or(GenusError::SingularSystem)?;
    let mut acc = GradedPolynomial::zero();
    for (lambda, coeff) in lambdas.iter().zip(solution) {
        acc = &acc + &GradedPolynomial::partition_monomial(lambda).scale(&coeff);
    }
    Ok(acc)
}

/// Index of the twisted operator: rank times untwisted index minus the
/// second Chern integral of the twisting bundle.
pub fn twisted_index(r: i64, ind: i64, c2_integral: i64) -> i64 {
    assert!(r >= 1, "twisting rank must be positive");
    r * ind - c2_integral
}

impl fmt::Display for GenusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}
