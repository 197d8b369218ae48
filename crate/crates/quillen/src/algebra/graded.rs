//! Polynomials in the Pontrjagin variables p1, p2, ... with the weighted
//! grading deg p_i = i.
//!
//! Terms are kept in a BTreeMap from exponent vectors (entry i-1 is the
//! exponent of p_i, trailing zeros trimmed) to nonzero rational coefficients,
//! so iteration order and equality are canonical. Display sorts terms by
//! weight and, within a weight, by the corresponding partition in reverse
//! lexicographic order, largest parts first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::partition::Partition;
use super::rational::Rational;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct GradedPolynomial {
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn trim(mut expo: Vec<u32>) -> Vec<u32> {
    while expo.last() == Some(&0) {
        expo.pop();
    }
    expo
}

/// Weighted degree of an exponent vector.
fn weight_of(expo: &[u32]) -> u32 {
    expo.iter()
        .enumerate()
        .map(|(i, e)| (i as u32 + 1) * e)
        .sum()
}

/// Partition with e_i copies of the part i, largest first.
fn exponents_to_partition(expo: &[u32]) -> Partition {
    let mut parts = Vec::new();
    for (i, &e) in expo.iter().enumerate() {
        for _ in 0..e {
            parts.push(i as u32 + 1);
        }
    }
    Partition::new(parts)
}

fn partition_to_exponents(p: &Partition) -> Vec<u32> {
    let mut expo = vec![0u32; p.parts().first().map_or(0, |&m| m as usize)];
    for &part in p.parts() {
        expo[part as usize - 1] += 1;
    }
    expo
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        GradedPolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = GradedPolynomial::zero();
        p.insert(Vec::new(), c);
        p
    }

    pub fn one() -> Self {
        GradedPolynomial::constant(Rational::one())
    }

    /// The variable p_i, i >= 1.
    pub fn variable(i: u32) -> Self {
        assert!(i >= 1, "Pontrjagin variables are indexed from 1");
        let mut expo = vec![0u32; i as usize];
        expo[i as usize - 1] = 1;
        let mut p = GradedPolynomial::zero();
        p.insert(expo, Rational::one());
        p
    }

    /// The monomial p_lambda = prod p_(lambda_j).
    pub fn partition_monomial(lambda: &Partition) -> Self {
        let mut p = GradedPolynomial::zero();
        p.insert(partition_to_exponents(lambda), Rational::one());
        p
    }

    fn insert(&mut self, expo: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(trim(expo)) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial p_lambda.
    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms
            .get(&trim(partition_to_exponents(lambda)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Common weight of all terms, or None for the zero polynomial and for
    /// mixed-weight polynomials.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| weight_of(e));
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// Keeps only the terms of the given weight.
    pub fn weight_part(&self, w: u32) -> GradedPolynomial {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| weight_of(e) == w)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> GradedPolynomial {
        if c.is_zero() {
            return GradedPolynomial::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// Substitutes a value for each variable, p_i = value_of(i).
    pub fn evaluate(&self, value_of: impl Fn(u32) -> Rational) -> Rational {
        let mut acc = Rational::zero();
        for (expo, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in expo.iter().enumerate() {
                if e > 0 {
                    term *= value_of(i as u32 + 1).pow(e as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Terms as (partition, coefficient), sorted by weight and then by the
    /// partition in reverse lexicographic order (largest parts first).
    pub fn sorted_terms(&self) -> Vec<(Partition, Rational)> {
        let mut out: Vec<(Partition, Rational)> = self
            .terms
            .iter()
            .map(|(e, c)| (exponents_to_partition(e), c.clone()))
            .collect();
        out.sort_by(|(a, _), (b, _)| {
            a.weight()
                .cmp(&b.weight())
                .then_with(|| b.parts().cmp(a.parts()))
        });
        out
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), -c);
        }
        out
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let n = e1.len().max(e2.len());
                let mut expo = Vec::with_capacity(n);
                for i in 0..n {
                    expo.push(e1.get(i).unwrap_or(&0) + e2.get(i).unwrap_or(&0));
                }
                out.insert(expo, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        GradedPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (lambda, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let expo = partition_to_exponents(&lambda);
            if lambda.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            let mut first_var = true;
            for (i, &e) in expo.iter().enumerate().rev() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                write!(f, "p{}", i + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                first_var = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
