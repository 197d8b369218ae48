//! Symmetric-function change of basis into the Pontrjagin variables.
//!
//! The p_i play the role of the elementary symmetric polynomials of the
//! underlying formal roots. Two conversions are needed for genus work: power
//! sums via Newton's identities, and monomial symmetric polynomials via the
//! set-partition expansion of augmented monomials into power-sum products.

use super::graded::GradedPolynomial;
use super::partition::Partition;
use super::rational::Rational;

fn factorial(n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 2..=n as i64 {
        acc *= Rational::from(i);
    }
    acc
}

/// The power sum P_n of the formal roots, written in the p_i. Newton:
/// P_n = sum_{i=1}^{n-1} (-1)^(i-1) p_i P_(n-i) + (-1)^(n-1) n p_n.
pub fn power_sum(n: u32) -> GradedPolynomial {
    assert!(n >= 1, "power sums are indexed from 1");
    let mut ps: Vec<GradedPolynomial> = Vec::with_capacity(n as usize);
    for m in 1..=n {
        let mut acc = GradedPolynomial::zero();
        for i in 1..m {
            let term = &GradedPolynomial::variable(i) * &ps[(m - i) as usize - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        let last = GradedPolynomial::variable(m).scale(&Rational::from(m as i64));
        acc = if m % 2 == 1 { &acc + &last } else { &acc - &last };
        ps.push(acc);
    }
    ps.pop().unwrap()
}

/// All partitions of {0, .., n-1} into nonempty blocks.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, current: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(current.clone());
            return;
        }
        for b in 0..current.len() {
            current[b].push(i);
            rec(i + 1, n, current, out);
            current[b].pop();
        }
        current.push(vec![i]);
        rec(i + 1, n, current, out);
        current.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

/// The monomial symmetric polynomial m_lambda of the formal roots, written
/// in the p_i.
///
/// The augmented monomial (m_lambda times the part-multiplicity factorials)
/// expands over set partitions pi of the index set of lambda as
/// sum_pi prod_{B in pi} (-1)^(|B|-1) (|B|-1)! P_(sum of lambda over B).
pub fn monomial_in_elementary(lambda: &Partition) -> GradedPolynomial {
    if lambda.is_empty() {
        return GradedPolynomial::one();
    }
    let parts = lambda.parts();
    let mut total = GradedPolynomial::zero();
    for sp in set_partitions(parts.len()) {
        let mut term = GradedPolynomial::one();
        let mut coeff = Rational::one();
        for block in &sp {
            let s: u32 = block.iter().map(|&j| parts[j]).sum();
            term = &term * &power_sum(s);
            let f = factorial(block.len() - 1);
            coeff *= if block.len() % 2 == 1 { f } else { -f };
        }
        total = &total + &term.scale(&coeff);
    }
    let mut denom = Rational::one();
    for (_, mult) in lambda.multiplicities() {
        denom *= factorial(mult as usize);
    }
    total.scale(&denom.recip())
}
