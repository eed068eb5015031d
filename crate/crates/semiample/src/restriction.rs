//! Restriction of divisor classes to the anticanonical cubic: the
//! homomorphism ι* : Pic(X) → Pic(E).
//!
//! A restricted class is recorded as (degree, Abel–Jacobi point) with base
//! point O = the inflection at infinity of the Weierstrass model.  Since
//! the line class cuts E in three collinear points, ℓ_E ~ 3·O, and the
//! degree-zero part of 𝒪_E(aℓ − Σbᵢpᵢ) is represented by the group element
//! ⊖ Σ [bᵢ] pᵢ.

use serde::{Deserialize, Serialize};

use crate::ellcurve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::piclattice::{
    anticanonical_class, intersect, perp_basis, DivisorClass, GramMatrix,
};

/// Blow-up of the plane at distinct points of a smooth Weierstrass cubic.
#[derive(Clone, PartialEq, Debug)]
pub struct ConcreteBlowup {
    curve: WeierstrassCurve,
    points: Vec<CurvePoint>,
    antican_effective: bool,
    /// least positive e with |−eK| nonempty; 1 exactly when −K is effective
    e: u32,
}

/// Curve configuration given only by intersection numbers: a Gram matrix
/// and the degrees −K·Cᵢ.  Enough for block construction, not for the
/// torsion criterion.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AbstractConfiguration {
    pub gram: GramMatrix,
    pub k_degrees: Vec<i64>,
}

#[derive(Clone, PartialEq, Debug)]
pub enum SurfaceModel {
    Concrete(ConcreteBlowup),
    Abstract(AbstractConfiguration),
}

impl ConcreteBlowup {
    pub fn new(
        curve: WeierstrassCurve,
        points: Vec<CurvePoint>,
        antican_effective: bool,
        e: u32,
    ) -> Result<Self> {
        let points = points
            .iter()
            .map(|p| p.reinterpret_on(&curve))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::Config(format!(
                        "blown-up points {i} and {j} coincide"
                    )));
                }
            }
        }
        if e == 0 {
            return Err(Error::Config("e must be a positive integer".into()));
        }
        if antican_effective != (e == 1) {
            return Err(Error::Config(
                "antican_effective must hold exactly when e = 1".into(),
            ));
        }
        Ok(ConcreteBlowup {
            curve,
            points,
            antican_effective,
            e,
        })
    }

    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn r(&self) -> usize {
        self.points.len()
    }

    pub fn antican_effective(&self) -> bool {
        self.antican_effective
    }

    pub fn e(&self) -> u32 {
        self.e
    }
}

/// Image of a divisor class in Pic(E): degree and Abel–Jacobi point.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct RestrictedClass {
    pub degree: i64,
    pub point: CurvePoint,
}

/// ι*(D) for D = aℓ − Σ bᵢEᵢ: degree D·(−K) = 3a − Σbᵢ and Abel–Jacobi
/// point ⊖ Σ [bᵢ] pᵢ.
pub fn restrict(s: &ConcreteBlowup, d: &DivisorClass) -> Result<RestrictedClass> {
    if d.rank() != s.r() {
        return Err(Error::Dimension(format!(
            "divisor has r = {} but the surface has r = {}",
            d.rank(),
            s.r()
        )));
    }
    let degree = intersect(d, &anticanonical_class(s.r()))?;
    let e = s.curve();
    let mut sum = CurvePoint::Infinity;
    for (bi, pi) in d.b.iter().zip(s.points()) {
        sum = e.add(&sum, &e.scalar_mul(*bi, pi)?)?;
    }
    Ok(RestrictedClass {
        degree,
        point: e.negate(&sum)?,
    })
}

/// Componentwise sum in Pic(E); used to check the homomorphism law.
pub fn add_restricted(
    s: &ConcreteBlowup,
    x: &RestrictedClass,
    y: &RestrictedClass,
) -> Result<RestrictedClass> {
    Ok(RestrictedClass {
        degree: x.degree + y.degree,
        point: s.curve().add(&x.point, &y.point)?,
    })
}

/// Generators of Γ, the image in Pic(E) of the nef classes orthogonal to K:
/// for r ≥ 10 the restrictions of a basis of ⟨−K⟩⊥; for r = 9 the single
/// class ι*(−K) (Γ is cyclic); for r ≤ 8 the empty list (Γ is trivial
/// because −K is big).
pub fn gamma_generators(s: &ConcreteBlowup) -> Result<Vec<RestrictedClass>> {
    if !s.antican_effective() {
        return Err(Error::Config(
            "gamma generators require an effective anticanonical curve (e = 1)".into(),
        ));
    }
    let r = s.r();
    if r <= 8 {
        return Ok(Vec::new());
    }
    let mk = anticanonical_class(r);
    if r == 9 {
        return Ok(vec![restrict(s, &mk)?]);
    }
    let basis = perp_basis(&[mk], r)?;
    basis.vectors.iter().map(|v| restrict(s, v)).collect()
}

/// A restricted class is torsion iff its degree vanishes and its
/// Abel–Jacobi point has finite order.
pub fn is_torsion_class(s: &ConcreteBlowup, rc: &RestrictedClass) -> Result<bool> {
    if rc.degree != 0 {
        return Ok(false);
    }
    s.curve().is_torsion(&rc.point)
}

/// JSON shape: {"kind": "concrete", ...} or {"kind": "abstract", ...}.
impl Serialize for SurfaceModel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        match self {
            SurfaceModel::Concrete(c) => {
                let mut m = ser.serialize_map(Some(5))?;
                m.serialize_entry("kind", "concrete")?;
                m.serialize_entry("curve", &c.curve)?;
                m.serialize_entry("points", &c.points)?;
                m.serialize_entry("antican_effective", &c.antican_effective)?;
                m.serialize_entry("e", &c.e)?;
                m.end()
            }
            SurfaceModel::Abstract(a) => {
                let mut m = ser.serialize_map(Some(3))?;
                m.serialize_entry("kind", "abstract")?;
                m.serialize_entry("gram", &a.gram)?;
                m.serialize_entry("k_degrees", &a.k_degrees)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for SurfaceModel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(tag = "kind")]
        enum Repr {
            #[serde(rename = "concrete")]
            Concrete {
                curve: WeierstrassCurve,
                points: Vec<CurvePoint>,
                antican_effective: bool,
                e: u32,
            },
            #[serde(rename = "abstract")]
            Abstract {
                gram: Vec<Vec<i64>>,
                k_degrees: Vec<i64>,
            },
        }
        match Repr::deserialize(d)? {
            Repr::Concrete {
                curve,
                points,
                antican_effective,
                e,
            } => ConcreteBlowup::new(curve, points, antican_effective, e)
                .map(SurfaceModel::Concrete)
                .map_err(D::Error::custom),
            Repr::Abstract { gram, k_degrees } => {
                let gram = GramMatrix::new(gram).map_err(D::Error::custom)?;
                if gram.size() != k_degrees.len() {
                    return Err(D::Error::custom(
                        "k_degrees length does not match the Gram matrix",
                    ));
                }
                Ok(SurfaceModel::Abstract(AbstractConfiguration {
                    gram,
                    k_degrees,
                }))
            }
        }
    }
}
