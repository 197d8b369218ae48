//! Truncated power series over the rationals.
//!
//! A series carries its truncation order explicitly: order n means the
//! coefficients of z^0 .. z^n are stored and everything higher is unknown.
//! Binary operations insist on matching orders instead of silently taking
//! minima, so precision loss is always a visible decision at the call site.

use std::fmt;

use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series division needs a nonzero constant term in the divisor")]
    NonUnitDivisor,
    #[error("series exponential needs a vanishing constant term")]
    ExpConstantTerm,
    #[error("series logarithm needs constant term one")]
    LogConstantTerm,
    #[error("series composition needs a vanishing inner constant term")]
    ComposeConstantTerm,
}

/// A power series truncated at a fixed order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    /// Coefficients of z^0 .. z^n; the length fixes the order.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "power series needs at least a constant term");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Builds coefficient i from the closure, for i = 0..=order.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rational) -> Self {
        PowerSeries { coeffs: (0..=order).map(|i| f(i)).collect() }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Drops coefficients above the new (not larger) order.
    pub fn truncate(&self, order: usize) -> PowerSeries {
        assert!(order <= self.order(), "truncation cannot raise the order");
        PowerSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn check_order(&self, other: &PowerSeries) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// self / other, requiring an invertible (nonzero) constant term below.
    pub fn div(&self, other: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_order(other)?;
        if other.coeffs[0].is_zero() {
            return Err(SeriesError::NonUnitDivisor);
        }
        let n = self.order();
        let inv0 = other.coeffs[0].recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc -= &other.coeffs[i] * &out[k - i];
            }
            out.push(acc * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn recip(&self) -> Result<PowerSeries, SeriesError> {
        PowerSeries::one(self.order()).div(self)
    }

    /// exp of a series with zero constant term, by the standard recurrence
    /// n E_n = sum_{j=1..n} j a_j E_{n-j}.
    pub fn exp(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpConstantTerm);
        }
        let n = self.order();
        let mut out = vec![Rational::one()];
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &Rational::from(j as i64)) * &out[k - j];
            }
            out.push(acc / Rational::from(k as i64));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// log of a series with constant term one, the inverse recurrence
    /// n f_n = sum_{j=1..n} j L_j f_{n-j}.
    pub fn log(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstantTerm);
        }
        let n = self.order();
        let mut out = vec![Rational::zero()];
        for k in 1..=n {
            let mut acc = &self.coeffs[k] * &Rational::from(k as i64);
            for j in 1..k {
                acc -= &(&out[j] * &Rational::from(j as i64)) * &self.coeffs[k - j];
            }
            out.push(acc / Rational::from(k as i64));
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// self(inner) for an inner series with zero constant term.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeConstantTerm);
        }
        let n = self.order();
        let mut acc = PowerSeries::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if !wrote {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "z")?;
                } else {
                    write!(f, "z^{i}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
