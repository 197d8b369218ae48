//! The determinant-line anomaly ledger: generalized first Chern class as
//! symbolic currents plus a continuous degree, holonomy of the twelfth root
//! of the discriminant, residues of the flat meromorphic connection, the
//! spectral double cover, and the twisted cancellation check.
//!
//! A current is a symbolic (place, coefficient) pair; a place of degree d
//! stands for d geometric base points, so every degree tally weights the
//! coefficient by the place degree.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::algebra::poly::Poly;
use crate::algebra::rational::Rational;
use crate::surface::{Place, WeierstrassModel};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LedgerError {
    #[error("model is not minimal at {0}")]
    NonMinimal(Place),
    #[error("twisting rank must be at least 1")]
    InvalidRank,
    #[error("current coefficient {0} does not have denominator dividing 12")]
    BadCoefficient(Rational),
    #[error("a2 must not vanish identically")]
    ZeroA2,
    #[error("deg {poly} = {degree} exceeds the bound {bound}")]
    DegreeBound {
        poly: &'static str,
        degree: usize,
        bound: i64,
    },
}

/// Generalized first Chern class of a determinant line bundle: delta
/// currents supported on singular places plus a smooth part of integer
/// degree on the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnomalyLedger {
    currents: Vec<(Place, Rational)>,
    continuous_degree: i64,
}

impl AnomalyLedger {
    /// Coefficients must have denominator dividing 12 (times the twisting
    /// rank; integrality of 12 times the coefficient is what is checked).
    pub fn new(
        currents: Vec<(Place, Rational)>,
        continuous_degree: i64,
    ) -> Result<Self, LedgerError> {
        for (_, coeff) in &currents {
            if !(coeff * Rational::from(12)).is_integer() {
                return Err(LedgerError::BadCoefficient(coeff.clone()));
            }
        }
        Ok(AnomalyLedger { currents, continuous_degree })
    }

    pub fn currents(&self) -> &[(Place, Rational)] {
        &self.currents
    }

    pub fn continuous_degree(&self) -> i64 {
        self.continuous_degree
    }

    /// Degree of the full class: sum of current coefficients weighted by
    /// place degree, plus the continuous degree. Zero for every ledger of a
    /// minimal model.
    pub fn total_degree(&self) -> Rational {
        let current_sum: Rational = self
            .currents
            .iter()
            .map(|(p, c)| c * Rational::from(p.degree() as i64))
            .sum();
        current_sum + Rational::from(self.continuous_degree)
    }
}

/// Ledger JSON: currents with stringified places and coefficients, the
/// continuous degree, and the holonomy order of the generated U(1) subgroup.
impl Serialize for AnomalyLedger {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Currents<'a>(&'a [(Place, Rational)]);
        impl Serialize for Currents<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
                for (place, coeff) in self.0 {
                    let mut entry = std::collections::BTreeMap::new();
                    entry.insert("place", place.to_string());
                    entry.insert("coeff", coeff.to_string());
                    seq.serialize_element(&entry)?;
                }
                seq.end()
            }
        }
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("currents", &Currents(&self.currents))?;
        map.serialize_entry("continuous_degree", &self.continuous_degree)?;
        map.serialize_entry("holonomy_order", &holonomy_group(self))?;
        map.end()
    }
}

fn gated_places(m: &WeierstrassModel) -> Result<Vec<crate::surface::PlaceData>, LedgerError> {
    let places = m.places_and_orders();
    if let Some(data) = places.iter().find(|d| d.ord_g2 >= 4 && d.ord_g3 >= 6) {
        return Err(LedgerError::NonMinimal(data.place.clone()));
    }
    Ok(places)
}

/// Chern class of the determinant line of the fiberwise dbar operator with
/// its Quillen metric: coefficient -ord(Delta)/12 at every singular place
/// and a continuous part of degree n.
pub fn det_line_chern(m: &WeierstrassModel) -> Result<AnomalyLedger, LedgerError> {
    let currents = gated_places(m)?
        .into_iter()
        .map(|d| (d.place, Rational::new(-(d.ord_delta as i64), 12)))
        .collect();
    Ok(AnomalyLedger { currents, continuous_degree: m.n() as i64 })
}

/// Order of the subgroup of U(1) generated by the holonomy phases
/// e^{2 pi i ord/12} of the ledger's currents: 12/gcd(12, gcd of the
/// integers -12 x coefficient). Empty current list gives the trivial group.
pub fn holonomy_group(ledger: &AnomalyLedger) -> u32 {
    let mut g: u64 = 0;
    for (_, coeff) in ledger.currents() {
        let scaled = coeff * Rational::from(-12);
        assert!(scaled.is_integer(), "ledger coefficient out of 1/12 lattice");
        let value = scaled
            .to_i64()
            .expect("ledger order fits machine integers")
            .unsigned_abs();
        g = num::integer::gcd(g, value);
    }
    (12 / num::integer::gcd(12u64, g)) as u32
}

/// Residues of the flat meromorphic connection on the determinant line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionData {
    residues: Vec<(Place, Rational)>,
    /// True when some place has ord(Delta) > 1: the simple-pole normal form
    /// is then an order-weighted extension of the nodal statement.
    derived_extension: bool,
}

impl ConnectionData {
    pub fn residues(&self) -> &[(Place, Rational)] {
        &self.residues
    }

    pub fn is_derived_extension(&self) -> bool {
        self.derived_extension
    }

    /// Sum of residues weighted by place degree; equals -n.
    pub fn residue_sum(&self) -> Rational {
        self.residues
            .iter()
            .map(|(p, c)| c * Rational::from(p.degree() as i64))
            .sum()
    }
}

/// Residue -ord(Delta)/12 at each singular place (infinity included).
pub fn meromorphic_connection(m: &WeierstrassModel) -> Result<ConnectionData, LedgerError> {
    let places = gated_places(m)?;
    let derived_extension = places.iter().any(|d| d.ord_delta > 1);
    let residues = places
        .into_iter()
        .map(|d| (d.place, Rational::new(-(d.ord_delta as i64), 12)))
        .collect();
    Ok(ConnectionData { residues, derived_extension })
}

/// Twisting by a rank-r bundle with c1 = 0 scales the currents by r and
/// shifts the continuous degree to r n - degR.
pub fn twisted_det_chern(
    m: &WeierstrassModel,
    r: u32,
    deg_r: u32,
) -> Result<AnomalyLedger, LedgerError> {
    if r == 0 {
        return Err(LedgerError::InvalidRank);
    }
    let base = det_line_chern(m)?;
    let currents = base
        .currents
        .into_iter()
        .map(|(p, c)| (p, c * Rational::from(r as i64)))
        .collect();
    let continuous_degree = r as i64 * m.n() as i64 - deg_r as i64;
    Ok(AnomalyLedger { currents, continuous_degree })
}

/// The unique twisting-bundle degree that cancels the continuous part of the
/// rank-r twisted determinant: r n.
pub fn cancellation_degree(r: u32, n: u32) -> u32 {
    assert!(r >= 1, "twisting rank must be positive");
    assert!(n >= 1, "bundle weight must be positive");
    r * n
}

/// Sections (a0, a2) of the twisting data: the section w = a0 - a2 x cuts
/// the spectral double cover out of the fibration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralCoverData {
    pub deg_r: u32,
    pub a0: Poly,
    pub a2: Poly,
}

impl SpectralCoverData {
    pub fn new(deg_r: u32, a0: Poly, a2: Poly) -> Result<Self, LedgerError> {
        if a2.is_zero() {
            return Err(LedgerError::ZeroA2);
        }
        if let Some(degree) = a0.degree() {
            if degree > deg_r as usize {
                return Err(LedgerError::DegreeBound {
                    poly: "a0",
                    degree,
                    bound: deg_r as i64,
                });
            }
        }
        Ok(SpectralCoverData { deg_r, a0, a2 })
    }
}

/// Fiberwise description of the spectral double cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    /// x-coordinate a0/a2 of the two cover points, reduced, denominator monic.
    pub x: (Poly, Poly),
    /// Branch polynomial 4 a0^3 - g2 a0 a2^2 - g3 a2^3: the fiberwise
    /// y-coordinate vanishes exactly on its zero locus, where the two cover
    /// points coincide.
    pub branch: Poly,
    /// Degree bound 3 degR; attained generically.
    pub branch_degree_bound: usize,
}

pub fn spectral_cover(
    m: &WeierstrassModel,
    s: &SpectralCoverData,
) -> Result<CoverReport, LedgerError> {
    let a2_bound = s.deg_r as i64 - 2 * m.n() as i64;
    let a2_degree = s.a2.degree().expect("a2 is nonzero") as i64;
    if a2_degree > a2_bound {
        return Err(LedgerError::DegreeBound {
            poly: "a2",
            degree: a2_degree as usize,
            bound: a2_bound,
        });
    }
    let x = if s.a0.is_zero() {
        (Poly::zero(), Poly::one())
    } else {
        let g = s.a0.gcd(&s.a2);
        let num = s.a0.div_exact(&g).expect("gcd divides");
        let den = s.a2.div_exact(&g).expect("gcd divides");
        let lead = den.leading().recip();
        (num.scale(&lead), den.scale(&lead))
    };
    let a2_sq = &s.a2 * &s.a2;
    let a0_cubed = &(&s.a0 * &s.a0) * &s.a0;
    let quartic = a0_cubed.scale(&Rational::from(4));
    let g2_term = &(m.g2() * &s.a0) * &a2_sq;
    let g3_term = &(m.g3() * &a2_sq) * &s.a2;
    let branch = &(&quartic - &g2_term) - &g3_term;
    Ok(CoverReport { x, branch, branch_degree_bound: 3 * s.deg_r as usize })
}
