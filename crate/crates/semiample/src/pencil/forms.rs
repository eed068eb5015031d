//! Homogeneous forms in three variables over the rationals, plus the affine
//! charts used to turn them into integer bivariate polynomials for
//! elimination.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fields::{parse_rational, rational_to_string};
use crate::poly::{Polynomial, ZPoly, ZPoly2};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];
}

/// Homogeneous polynomial of fixed degree in x, y, z with rational
/// coefficients, stored sparsely.  Zero coefficients are never stored, so
/// structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousForm {
    degree: usize,
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl HomogeneousForm {
    pub fn new(
        degree: usize,
        terms: impl IntoIterator<Item = ([u32; 3], BigRational)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            let sum = e[0] as usize + e[1] as usize + e[2] as usize;
            if sum != degree {
                return Err(Error::Dimension(format!(
                    "exponent triple {e:?} does not sum to degree {degree}"
                )));
            }
            if c.is_zero() {
                continue;
            }
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                map.remove(&e);
            }
        }
        Ok(HomogeneousForm { degree, terms: map })
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_integer_terms(degree: usize, terms: &[([u32; 3], i64)]) -> Result<Self> {
        Self::new(
            degree,
            terms
                .iter()
                .map(|&(e, c)| (e, BigRational::from(BigInt::from(c)))),
        )
    }

    pub fn zero(degree: usize) -> Self {
        HomogeneousForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree {
            return Err(Error::Dimension(format!(
                "cannot add forms of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        Self::new(
            self.degree,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }

    pub fn neg(&self) -> Self {
        HomogeneousForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        HomogeneousForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree + other.degree;
        let mut out = HomogeneousForm::zero(degree);
        for (e, a) in &self.terms {
            for (f, b) in &other.terms {
                let g = [e[0] + f[0], e[1] + f[1], e[2] + f[2]];
                let entry = out.terms.entry(g).or_insert_with(BigRational::zero);
                *entry += a * b;
                if entry.is_zero() {
                    out.terms.remove(&g);
                }
            }
        }
        out
    }

    /// Formal partial derivative; drops the degree by one (the derivative of
    /// a constant form is the zero form of degree zero).
    pub fn partial(&self, var: Var) -> Self {
        let degree = self.degree.saturating_sub(1);
        let i = var.index();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = *e;
            f[i] -= 1;
            terms.insert(f, c * BigRational::from(BigInt::from(e[i])));
        }
        HomogeneousForm { degree, terms }
    }

    pub fn evaluate(&self, point: &[BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..3 {
                term *= num_traits::pow(point[i].clone(), e[i] as usize);
            }
            acc += term;
        }
        acc
    }

    /// True iff all three partials (and hence, by the Euler relation, the
    /// form itself) vanish at the point.
    pub fn is_singular_at(&self, p: &ProjectivePoint) -> bool {
        Var::ALL
            .iter()
            .all(|&v| self.partial(v).evaluate(p.coords()).is_zero())
    }
}

impl Serialize for HomogeneousForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = FormRepr {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    e: *e,
                    c: rational_to_string(c),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HomogeneousForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FormRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in &repr.terms {
            let c = parse_rational(&t.c).map_err(D::Error::custom)?;
            terms.push((t.e, c));
        }
        HomogeneousForm::new(repr.degree, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: [u32; 3],
    c: String,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    degree: usize,
    terms: Vec<TermRepr>,
}

/// Point of P²(Q), stored with the last nonzero coordinate normalized to 1
/// so that equality and ordering are projective.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ProjectivePoint {
    coords: [BigRational; 3],
}

impl ProjectivePoint {
    pub fn new(coords: [BigRational; 3]) -> Result<Self> {
        let last = coords
            .iter()
            .rposition(|c| !c.is_zero())
            .ok_or_else(|| Error::Config("projective point cannot be [0:0:0]".into()))?;
        let scale = coords[last].clone();
        let mut c = coords;
        for x in &mut c {
            *x /= scale.clone();
        }
        Ok(ProjectivePoint { coords: c })
    }

    pub fn from_integers(coords: [i64; 3]) -> Result<Self> {
        Self::new(coords.map(|c| BigRational::from(BigInt::from(c))))
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    /// Index of the last nonzero (hence = 1) coordinate.
    pub fn chart_index(&self) -> usize {
        self.coords.iter().rposition(|c| !c.is_zero()).unwrap()
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}:{}:{}]",
            rational_to_string(&self.coords[0]),
            rational_to_string(&self.coords[1]),
            rational_to_string(&self.coords[2])
        )
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr: Vec<String> = self.coords.iter().map(rational_to_string).collect();
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = <[String; 3]>::deserialize(deserializer)?;
        let mut coords = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        for (i, s) in repr.iter().enumerate() {
            coords[i] = parse_rational(s).map_err(D::Error::custom)?;
        }
        ProjectivePoint::new(coords).map_err(D::Error::custom)
    }
}

/// Affine chart of P² where one coordinate is set to 1.  The two remaining
/// coordinates are the chart variables (u, v), chosen cyclically so that on
/// the z-chart v = y is eliminated first, then u = x, and likewise on the
/// other charts.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Chart {
    /// z = 1, (u, v) = (x, y)
    Z,
    /// y = 1, (u, v) = (z, x)
    Y,
    /// x = 1, (u, v) = (y, z)
    X,
}

impl Chart {
    pub const ALL: [Chart; 3] = [Chart::Z, Chart::Y, Chart::X];

    /// Chart for the point's normalized (= 1) coordinate.
    pub fn of_point(p: &ProjectivePoint) -> Chart {
        match p.chart_index() {
            0 => Chart::X,
            1 => Chart::Y,
            _ => Chart::Z,
        }
    }

    /// Indices (u, v, w) into [x, y, z]: chart variables and the
    /// homogenizing coordinate.
    pub fn axes(self) -> (usize, usize, usize) {
        match self {
            Chart::Z => (0, 1, 2),
            Chart::Y => (2, 0, 1),
            Chart::X => (1, 2, 0),
        }
    }

    pub fn point(self, u: &BigRational, v: &BigRational) -> ProjectivePoint {
        let (ui, vi, wi) = self.axes();
        let mut coords = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
        coords[ui] = u.clone();
        coords[vi] = v.clone();
        coords[wi] = BigRational::one();
        ProjectivePoint::new(coords).expect("chart point is never [0:0:0]")
    }

}

/// Dehomogenize on the chart and clear denominators: the result is an
/// integer polynomial in v whose coefficients are polynomials in u, equal to
/// the restricted form times a positive integer.
pub fn chart_poly(f: &HomogeneousForm, chart: Chart) -> ZPoly2 {
    let (ui, vi, _) = chart.axes();
    let mut denom = <BigInt as One>::one();
    for (_, c) in f.terms() {
        denom = denom.lcm(c.denom());
    }
    let mut coeffs: Vec<Vec<BigInt>> = Vec::new();
    for (e, c) in f.terms() {
        let (du, dv) = (e[ui] as usize, e[vi] as usize);
        let int = (c * BigRational::from(denom.clone())).to_integer();
        if coeffs.len() <= dv {
            coeffs.resize(dv + 1, Vec::new());
        }
        let row = &mut coeffs[dv];
        if row.len() <= du {
            row.resize(du + 1, <BigInt as Zero>::zero());
        }
        row[du] += int;
    }
    Polynomial::from_coeffs(
        coeffs
            .into_iter()
            .map(|row| ZPoly::from_coeffs(row))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    pub(crate) fn random_form(rng: &mut ChaCha8Rng, degree: usize) -> HomogeneousForm {
        let mut terms = Vec::new();
        for i in 0..=degree as u32 {
            for j in 0..=(degree as u32 - i) {
                let k = degree as u32 - i - j;
                terms.push(([i, j, k], rng.gen_range(-5..=5)));
            }
        }
        HomogeneousForm::from_integer_terms(degree, &terms).unwrap()
    }

    #[test]
    fn partial_and_evaluate() {
        // d/dx (x^3) = 3x^2
        let x3 = HomogeneousForm::from_integer_terms(3, &[([3, 0, 0], 1)]).unwrap();
        let px = x3.partial(Var::X);
        assert_eq!(
            px,
            HomogeneousForm::from_integer_terms(2, &[([2, 0, 0], 3)]).unwrap()
        );
        // d0 = 4x(yz - x^2) vanishes at [1:1:1]
        let d0 = HomogeneousForm::from_integer_terms(3, &[([1, 1, 1], 4), ([3, 0, 0], -4)]).unwrap();
        assert!(d0.evaluate(&[rat(1), rat(1), rat(1)]).is_zero());
        assert_eq!(d0.evaluate(&[rat(1), rat(2), rat(3)]), rat(20));
    }

    #[test]
    fn euler_relation_on_random_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for degree in [1usize, 2, 3, 5] {
            let f = random_form(&mut rng, degree);
            // x f_x + y f_y + z f_z = d f
            let x = HomogeneousForm::from_integer_terms(1, &[([1, 0, 0], 1)]).unwrap();
            let y = HomogeneousForm::from_integer_terms(1, &[([0, 1, 0], 1)]).unwrap();
            let z = HomogeneousForm::from_integer_terms(1, &[([0, 0, 1], 1)]).unwrap();
            let lhs = x
                .mul(&f.partial(Var::X))
                .add(&y.mul(&f.partial(Var::Y)))
                .unwrap()
                .add(&z.mul(&f.partial(Var::Z)))
                .unwrap();
            assert_eq!(lhs, f.scale(&rat(degree as i64)));
        }
    }

    #[test]
    fn arithmetic_respects_degrees() {
        let x = HomogeneousForm::from_integer_terms(1, &[([1, 0, 0], 1)]).unwrap();
        let y = HomogeneousForm::from_integer_terms(1, &[([0, 1, 0], 2)]).unwrap();
        assert!(x.add(&x.mul(&y)).is_err());
        let s = x.add(&y).unwrap();
        assert_eq!(s.degree(), 1);
        assert!(s.sub(&s).unwrap().is_zero());
        assert!(HomogeneousForm::from_integer_terms(2, &[([1, 0, 0], 1)]).is_err());
    }

    #[test]
    fn projective_points_normalize() {
        let p = ProjectivePoint::from_integers([2, 4, 2]).unwrap();
        let q = ProjectivePoint::from_integers([1, 2, 1]).unwrap();
        assert_eq!(p, q);
        let r = ProjectivePoint::from_integers([3, 0, 0]).unwrap();
        assert_eq!(r, ProjectivePoint::from_integers([1, 0, 0]).unwrap());
        assert_eq!(r.chart_index(), 0);
        assert!(ProjectivePoint::from_integers([0, 0, 0]).is_err());
    }

    #[test]
    fn chart_polys_restrict_correctly() {
        // f = x^2 z + y^3 on the z-chart is u^2 + v^3
        let f =
            HomogeneousForm::from_integer_terms(3, &[([2, 0, 1], 1), ([0, 3, 0], 1)]).unwrap();
        let p = chart_poly(&f, Chart::Z);
        assert_eq!(p.coeff(0), crate::poly::zpoly(&[0, 0, 1]));
        assert_eq!(p.coeff(3), crate::poly::zpoly(&[1]));
        // chart evaluation agrees with homogeneous evaluation
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_form(&mut rng, 3);
            for chart in Chart::ALL {
                let cp = chart_poly(&g, chart);
                let (u, v) = (rat(rng.gen_range(-4..=4)), rat(rng.gen_range(-4..=4)));
                let (ui, vi, wi) = chart.axes();
                let mut coords = [rat(0), rat(0), rat(0)];
                coords[ui] = u.clone();
                coords[vi] = v.clone();
                coords[wi] = rat(1);
                let direct = g.evaluate(&coords);
                // evaluate cp at (u, v): both are integers here
                let ui = u.to_integer();
                let vi = v.to_integer();
                let val = cp.map_coeffs(|c: &ZPoly| c.eval(&ui)).eval(&vi);
                // cp is an integer multiple of the restriction; with integer
                // coefficients in random_form the multiple is 1
                assert_eq!(BigRational::from(val), direct, "{chart:?}");
            }
        }
    }

    #[test]
    fn form_json_roundtrip() {
        let f = HomogeneousForm::new(
            2,
            [
                ([2, 0, 0], BigRational::new(BigInt::from(1), BigInt::from(2))),
                ([0, 1, 1], rat(-3)),
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.contains("\"degree\":2"));
        assert!(json.contains("1/2"));
        let back: HomogeneousForm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        // invalid exponent sums are rejected on parse
        let bad = r#"{"degree":2,"terms":[{"e":[1,0,0],"c":"1"}]}"#;
        assert!(serde_json::from_str::<HomogeneousForm>(bad).is_err());
    }

    #[test]
    fn point_json_roundtrip() {
        let p = ProjectivePoint::from_integers([-2, 5, 1]).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"["-2","5","1"]"#);
        let back: ProjectivePoint = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
