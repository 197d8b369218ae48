//! Weierstrass models of Jacobian elliptic surfaces over the projective
//! line: discriminant, the j-map as a reduced rational function, places and
//! vanishing orders (including the place at infinity), Kodaira fiber
//! classification, quadratic twists, and minimality.
//!
//! A model y^2 = 4x^3 - g2(t) x - g3(t) with deg g2 <= 4n, deg g3 <= 6n is
//! compactified by the bundle weight n: the orders at infinity are
//! 4n - deg g2, 6n - deg g3, 12n - deg Delta, and the order sum over all
//! places is exactly 12n. Every valid model has at least one singular place.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::factor::factor;
use crate::algebra::poly::Poly;
use crate::algebra::rational::Rational;

/// Sentinel order for an identically zero polynomial.
pub const ORD_INFINITE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("bundle weight n must be at least 1")]
    InvalidN,
    #[error("deg {poly} = {degree} exceeds the bound {bound}")]
    DegreeBound {
        poly: &'static str,
        degree: usize,
        bound: usize,
    },
    #[error("discriminant vanishes identically")]
    DegenerateDiscriminant,
    #[error("model is not minimal at {place}")]
    NonMinimal { place: Place },
    #[error("orders (g2, g3, delta) = ({}, {}, {}) match no fiber type", fmt_ord(*.0), fmt_ord(*.1), .2)]
    NoTableRow(u32, u32, u32),
    #[error("twist polynomial must be nonzero, squarefree, of degree at most 2")]
    InvalidTwist,
    #[error("minimal reduction would reach bundle weight 0 (trivial family)")]
    TrivialFamily,
    #[error("order sum {found} differs from 12n = {expected}")]
    ConservationViolation { expected: u32, found: u32 },
}

fn fmt_ord(o: u32) -> String {
    if o == ORD_INFINITE { "inf".into() } else { o.to_string() }
}

/// A closed point of the base projective line: a monic irreducible
/// polynomial, or the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Place {
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn degree(&self) -> u32 {
        match self {
            Place::Finite(f) => f.degree().expect("finite place is nonconstant") as u32,
            Place::Infinity => 1,
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Place::Infinity)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "infinity"),
        }
    }
}

/// Vanishing orders of (g2, g3, Delta) at one place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaceData {
    pub place: Place,
    pub ord_g2: u32,
    pub ord_g3: u32,
    pub ord_delta: u32,
}

/// Kodaira fiber types of relatively minimal elliptic fibrations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KodairaType {
    I(u32),
    II,
    III,
    IV,
    IStar(u32),
    IVStar,
    IIIStar,
    IIStar,
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaType::I(d) => write!(f, "I_{d}"),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(d) => write!(f, "I_{d}*"),
            KodairaType::IVStar => write!(f, "IV*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IIStar => write!(f, "II*"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceType {
    Rational,
    K3,
    Other(u32),
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceType::Rational => write!(f, "rational elliptic surface"),
            SurfaceType::K3 => write!(f, "elliptic K3 surface"),
            SurfaceType::Other(n) => write!(f, "elliptic surface of bundle weight {n}"),
        }
    }
}

/// Fiber type from the order triple (a, b, d) at a singular place.
/// Non-minimal triples (a >= 4 and b >= 6) are rejected.
pub fn classify_triple(a: u32, b: u32, d: u32) -> Result<KodairaType, SurfaceError> {
    assert!(d >= 1, "classification is for singular places");
    use KodairaType::*;
    if a >= 4 && b >= 6 {
        return Err(SurfaceError::NoTableRow(a, b, d));
    }
    let ty = match (a, b, d) {
        (0, 0, d) => I(d),
        (_, 1, 2) if a >= 1 => II,
        (1, _, 3) if b >= 2 => III,
        (_, 2, 4) if a >= 2 => IV,
        (_, _, 6) if a >= 2 && b >= 3 => IStar(0),
        (2, 3, d) if d >= 7 => IStar(d - 6),
        (_, 4, 8) if a >= 3 => IVStar,
        (3, _, 9) if b >= 5 => IIIStar,
        (_, 5, 10) if a >= 4 => IIStar,
        _ => return Err(SurfaceError::NoTableRow(a, b, d)),
    };
    Ok(ty)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeierstrassModel {
    g2: Poly,
    g3: Poly,
    n: u32,
}

fn ord_at(p: &Poly, f: &Poly) -> u32 {
    if p.is_zero() {
        ORD_INFINITE
    } else {
        p.order_of(f)
    }
}

fn ord_infinity(p: &Poly, bound: u32) -> u32 {
    match p.degree() {
        Some(d) => bound - d as u32,
        None => ORD_INFINITE,
    }
}

impl WeierstrassModel {
    pub fn new(g2: Poly, g3: Poly, n: u32) -> Result<Self, SurfaceError> {
        if n == 0 {
            return Err(SurfaceError::InvalidN);
        }
        for (poly, p, bound) in [("g2", &g2, 4 * n as usize), ("g3", &g3, 6 * n as usize)] {
            if let Some(degree) = p.degree() {
                if degree > bound {
                    return Err(SurfaceError::DegreeBound { poly, degree, bound });
                }
            }
        }
        let model = WeierstrassModel { g2, g3, n };
        if model.discriminant().is_zero() {
            return Err(SurfaceError::DegenerateDiscriminant);
        }
        Ok(model)
    }

    pub fn g2(&self) -> &Poly {
        &self.g2
    }

    pub fn g3(&self) -> &Poly {
        &self.g3
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Delta = g2^3 - 27 g3^2, not identically zero for a valid model.
    pub fn discriminant(&self) -> Poly {
        let g2cube = &(&self.g2 * &self.g2) * &self.g2;
        let g3sq = (&self.g3 * &self.g3).scale(&Rational::from(27));
        &g2cube - &g3sq
    }

    /// The j-map g2^3/Delta as a reduced fraction with monic denominator.
    pub fn j_map(&self) -> (Poly, Poly) {
        let num = &(&self.g2 * &self.g2) * &self.g2;
        let den = self.discriminant();
        if num.is_zero() {
            return (Poly::zero(), Poly::one());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.leading().recip();
        (num.scale(&lead), den.scale(&lead))
    }

    /// All singular places with their order triples: the monic irreducible
    /// factors of Delta, then infinity when 12n - deg Delta > 0.
    pub fn places_and_orders(&self) -> Vec<PlaceData> {
        let delta = self.discriminant();
        let mut out = Vec::new();
        for (f, mult) in factor(&delta).factors {
            out.push(PlaceData {
                ord_g2: ord_at(&self.g2, &f),
                ord_g3: ord_at(&self.g3, &f),
                ord_delta: mult,
                place: Place::Finite(f),
            });
        }
        let d_inf = ord_infinity(&delta, 12 * self.n);
        if d_inf > 0 {
            out.push(PlaceData {
                place: Place::Infinity,
                ord_g2: ord_infinity(&self.g2, 4 * self.n),
                ord_g3: ord_infinity(&self.g3, 6 * self.n),
                ord_delta: d_inf,
            });
        }
        out
    }

    /// Kodaira types at every singular place. Fails on a non-minimal place.
    pub fn kodaira_classify(&self) -> Result<Vec<(PlaceData, KodairaType)>, SurfaceError> {
        let mut out = Vec::new();
        for data in self.places_and_orders() {
            if data.ord_g2 >= 4 && data.ord_g3 >= 6 {
                return Err(SurfaceError::NonMinimal { place: data.place });
            }
            let ty = classify_triple(data.ord_g2, data.ord_g3, data.ord_delta)?;
            out.push((data, ty));
        }
        Ok(out)
    }

    /// True when no place (finite or infinite) admits a twist reduction,
    /// i.e. no place has ord g2 >= 4 and ord g3 >= 6 simultaneously.
    pub fn minimality_check(&self) -> bool {
        self.places_and_orders()
            .iter()
            .all(|d| d.ord_g2 < 4 || d.ord_g3 < 6)
    }

    /// Twist by a nonzero squarefree q of degree at most 2:
    /// (g2, g3, n) -> (g2 q^2, g3 q^3, n+1). A degree-1 twist also moves the
    /// orders at infinity; a degree-2 twist leaves infinity alone.
    pub fn quadratic_twist(&self, q: &Poly) -> Result<WeierstrassModel, SurfaceError> {
        if q.is_zero() || q.degree().unwrap_or(0) > 2 || !q.is_squarefree() {
            return Err(SurfaceError::InvalidTwist);
        }
        let q2 = q * q;
        let q3 = &q2 * q;
        WeierstrassModel::new(&self.g2 * &q2, &self.g3 * &q3, self.n + 1)
    }

    /// Removes every twist reduction: divides out f^4 | g2, f^6 | g3 at
    /// finite places and lowers n at infinity, until minimal. Errors if the
    /// family would collapse to bundle weight 0.
    pub fn minimal_model(&self) -> Result<WeierstrassModel, SurfaceError> {
        let mut g2 = self.g2.clone();
        let mut g3 = self.g3.clone();
        let mut n = self.n;
        'outer: loop {
            let model = WeierstrassModel { g2: g2.clone(), g3: g3.clone(), n };
            for data in model.places_and_orders() {
                if data.ord_g2 >= 4 && data.ord_g3 >= 6 {
                    if n == 1 {
                        return Err(SurfaceError::TrivialFamily);
                    }
                    n -= 1;
                    if let Place::Finite(f) = &data.place {
                        let f4 = &(f * f) * &(f * f);
                        let f6 = &f4 * &(f * f);
                        g2 = g2.div_exact(&f4).expect("order at least 4");
                        g3 = g3.div_exact(&f6).expect("order at least 6");
                    }
                    continue 'outer;
                }
            }
            return Ok(model);
        }
    }

    /// Surface class by bundle weight, cross-checked against the order sum
    /// conservation law: sum over all places of ord Delta times place degree
    /// equals 12n.
    pub fn surface_type(&self) -> Result<SurfaceType, SurfaceError> {
        let expected = 12 * self.n;
        let found: u32 = self
            .places_and_orders()
            .iter()
            .map(|d| d.ord_delta * d.place.degree())
            .sum();
        if found != expected {
            return Err(SurfaceError::ConservationViolation { expected, found });
        }
        Ok(match self.n {
            1 => SurfaceType::Rational,
            2 => SurfaceType::K3,
            n => SurfaceType::Other(n),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct ModelRepr {
    n: u32,
    g2: Poly,
    g3: Poly,
}

impl Serialize for WeierstrassModel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ModelRepr { n: self.n, g2: self.g2.clone(), g3: self.g3.clone() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeierstrassModel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ModelRepr::deserialize(deserializer)?;
        WeierstrassModel::new(repr.g2, repr.g3, repr.n).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    /// g2 = 27 t (t-1)^3, g3 = 27 t (t-1)^5: the family with j-map exactly t.
    pub(crate) fn universal_family() -> WeierstrassModel {
        let g2 = Poly::from_ints(&[0, -27, 81, -81, 27]);
        let g3 = Poly::from_ints(&[0, -27, 135, -270, 270, -135, 27]);
        WeierstrassModel::new(g2, g3, 1).unwrap()
    }

    /// Rational elliptic surface with twelve I_1 fibers over rational points:
    /// g2 = 3(t^2+3)^2, g3 = (t^2+3)^3 + (343/15) t (t^2-1)(t^2-9).
    pub(crate) fn split_nodal_family() -> WeierstrassModel {
        let g2 = Poly::from_ints(&[27, 0, 18, 0, 3]);
        let g3 = Poly::new(vec![
            rat(27, 1),
            rat(1029, 5),
            rat(27, 1),
            rat(-686, 3),
            rat(9, 1),
            rat(343, 15),
            rat(1, 1),
        ]);
        WeierstrassModel::new(g2, g3, 1).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(
            WeierstrassModel::new(Poly::from_ints(&[3]), Poly::one(), 1),
            Err(SurfaceError::DegenerateDiscriminant)
        );
        assert_eq!(
            WeierstrassModel::new(Poly::zero(), Poly::one(), 0),
            Err(SurfaceError::InvalidN)
        );
        assert_eq!(
            WeierstrassModel::new(Poly::monomial(rat(1, 1), 5), Poly::one(), 1),
            Err(SurfaceError::DegreeBound { poly: "g2", degree: 5, bound: 4 })
        );
        let m = WeierstrassModel::new(Poly::zero(), Poly::one(), 1).unwrap();
        assert_eq!(m.discriminant(), Poly::from_ints(&[-27]));
    }

    #[test]
    fn universal_family_discriminant() {
        let m = universal_family();
        let delta = m.discriminant();
        // 19683 t^2 (t-1)^9
        let expected = Poly::from_roots(&vec![rat(0, 1); 2])
            * Poly::from_roots(&vec![rat(1, 1); 9]).scale(&rat(19683, 1));
        assert_eq!(delta, expected);
    }

    #[test]
    fn universal_family_j_map() {
        let (num, den) = universal_family().j_map();
        assert_eq!(num, Poly::t());
        assert_eq!(den, Poly::one());
    }

    #[test]
    fn j_map_degenerate_directions() {
        // g3 = 0: j is constantly 1
        let m = WeierstrassModel::new(Poly::from_ints(&[0, 1]), Poly::zero(), 1).unwrap();
        assert_eq!(m.j_map(), (Poly::one(), Poly::one()));
        // g2 = 0: j is constantly 0
        let m = WeierstrassModel::new(Poly::zero(), Poly::from_ints(&[0, 1]), 1).unwrap();
        assert_eq!(m.j_map(), (Poly::zero(), Poly::one()));
    }

    #[test]
    fn universal_family_fibers() {
        let m = universal_family();
        let classified = m.kodaira_classify().unwrap();
        assert_eq!(classified.len(), 3);

        let at = |place: &Place| {
            classified
                .iter()
                .find(|(d, _)| &d.place == place)
                .map(|(d, ty)| (d.clone(), *ty))
                .unwrap()
        };
        let (d0, t0) = at(&Place::Finite(Poly::t()));
        assert_eq!((d0.ord_g2, d0.ord_g3, d0.ord_delta), (1, 1, 2));
        assert_eq!(t0, KodairaType::II);

        let (d1, t1) = at(&Place::Finite(Poly::from_ints(&[-1, 1])));
        assert_eq!((d1.ord_g2, d1.ord_g3, d1.ord_delta), (3, 5, 9));
        assert_eq!(t1, KodairaType::IIIStar);

        let (di, ti) = at(&Place::Infinity);
        assert_eq!((di.ord_g2, di.ord_g3, di.ord_delta), (0, 0, 1));
        assert_eq!(ti, KodairaType::I(1));

        assert_eq!(m.surface_type().unwrap(), SurfaceType::Rational);
        assert!(m.minimality_check());
    }

    #[test]
    fn split_nodal_family_fibers() {
        let m = split_nodal_family();
        let classified = m.kodaira_classify().unwrap();
        assert_eq!(classified.len(), 12);
        for (data, ty) in &classified {
            assert_eq!(*ty, KodairaType::I(1), "at {}", data.place);
            assert_eq!(data.place.degree(), 1);
        }
        assert!(classified.iter().any(|(d, _)| d.place.is_infinity()));
        assert_eq!(m.surface_type().unwrap(), SurfaceType::Rational);
    }

    #[test]
    fn local_type_table() {
        // small models pinning one row each of the classification table
        let t = Poly::t();
        let t0 = Place::Finite(t.clone());
        let cases: Vec<(Poly, Poly, KodairaType)> = vec![
            (Poly::from_ints(&[3, 1]), Poly::one(), KodairaType::I(1)),
            (t.clone(), t.clone(), KodairaType::II),
            (t.clone(), &t * &t, KodairaType::III),
            (&t * &t, &t * &t, KodairaType::IV),
            (&t * &t, &(&t * &t) * &t, KodairaType::IStar(0)),
            (
                (&t * &t).scale(&rat(3, 1)),
                &(&(&t * &t) * &t) * &Poly::from_ints(&[1, 1]),
                KodairaType::IStar(1),
            ),
            (&(&t * &t) * &t, (&t * &t) * (&t * &t), KodairaType::IVStar),
            (
                &(&t * &t) * &t,
                &(&(&t * &t) * &(&t * &t)) * &t,
                KodairaType::IIIStar,
            ),
            (
                (&t * &t) * (&t * &t),
                &(&(&t * &t) * &(&t * &t)) * &t,
                KodairaType::IIStar,
            ),
        ];
        for (g2, g3, expected) in cases {
            let m = WeierstrassModel::new(g2, g3, 1).unwrap();
            let classified = m.kodaira_classify().unwrap();
            let found = classified
                .iter()
                .find(|(d, _)| d.place == t0)
                .map(|(_, ty)| *ty)
                .unwrap();
            assert_eq!(found, expected);
        }
    }

    #[test]
    fn order_sum_is_12n() {
        for m in [universal_family(), split_nodal_family()] {
            let total: u32 = m
                .places_and_orders()
                .iter()
                .map(|d| d.ord_delta * d.place.degree())
                .sum();
            assert_eq!(total, 12 * m.n());
        }
    }

    #[test]
    fn twist_and_reduce_roundtrip() {
        let m = universal_family();
        for q in [
            Poly::t(),
            Poly::from_ints(&[-2, 1]),
            Poly::from_ints(&[-2, 0, 1]),
            Poly::from_ints(&[1, 1, 1]),
        ] {
            let twice = m.quadratic_twist(&q).unwrap().quadratic_twist(&q).unwrap();
            assert_eq!(twice.n(), 3);
            assert_eq!(twice.minimal_model().unwrap(), m, "q = {q}");
        }
    }

    #[test]
    fn twist_moves_fibers_to_star() {
        // a degree-1 twist adds (2, 3, 6) at the twist point and at infinity:
        // the smooth fiber over t = 5 becomes I_0* and the I_1 at infinity
        // becomes I_1*
        let m = universal_family();
        let tw = m.quadratic_twist(&Poly::from_ints(&[-5, 1])).unwrap();
        assert_eq!(tw.n(), 2);
        let classified = tw.kodaira_classify().unwrap();
        let ty_at = |place: Place| {
            classified
                .iter()
                .find(|(d, _)| d.place == place)
                .map(|(_, ty)| *ty)
                .unwrap()
        };
        assert_eq!(ty_at(Place::Finite(Poly::from_ints(&[-5, 1]))), KodairaType::IStar(0));
        assert_eq!(ty_at(Place::Infinity), KodairaType::IStar(1));
        assert_eq!(ty_at(Place::Finite(Poly::t())), KodairaType::II);
        assert!(tw.minimality_check());
    }

    #[test]
    fn twist_rejections() {
        let m = universal_family();
        assert_eq!(
            m.quadratic_twist(&Poly::from_ints(&[0, 0, 0, 1])),
            Err(SurfaceError::InvalidTwist)
        );
        assert_eq!(
            m.quadratic_twist(&(Poly::t() * Poly::t())),
            Err(SurfaceError::InvalidTwist)
        );
        assert_eq!(m.quadratic_twist(&Poly::zero()), Err(SurfaceError::InvalidTwist));
    }

    #[test]
    fn constant_j_zero_family_reduces_at_infinity() {
        // g2 = 0, g3 = 1: all vanishing concentrates at infinity with orders
        // (inf, 6, 12), so the model is a twist of a trivial family
        let m = WeierstrassModel::new(Poly::zero(), Poly::one(), 1).unwrap();
        assert!(!m.minimality_check());
        assert!(matches!(
            m.kodaira_classify(),
            Err(SurfaceError::NonMinimal { place: Place::Infinity })
        ));
        assert_eq!(m.minimal_model(), Err(SurfaceError::TrivialFamily));
    }

    #[test]
    fn nonminimal_finite_place() {
        let g2 = &Poly::from_ints(&[3, 1]) * &Poly::monomial(rat(1, 1), 4);
        let g3 = Poly::monomial(rat(1, 1), 6);
        let m = WeierstrassModel::new(g2, g3, 3).unwrap();
        assert!(!m.minimality_check());
        let reduced = m.minimal_model().unwrap();
        assert_eq!(reduced.n(), 1);
        assert_eq!(reduced.g2(), &Poly::from_ints(&[3, 1]));
        assert_eq!(reduced.g3(), &Poly::one());
    }

    #[test]
    fn model_serde() {
        let m = universal_family();
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(
            js,
            r#"{"n":1,"g2":["0","-27","81","-81","27"],"g3":["0","-27","135","-270","270","-135","27"]}"#
        );
        let back: WeierstrassModel = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);

        let bad: Result<WeierstrassModel, _> =
            serde_json::from_str(r#"{"n":1,"g2":["3"],"g3":["1"]}"#);
        assert!(bad.is_err());
    }
}
