//! Exact arithmetic on smooth Weierstrass cubics
//!     y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆
//! over Q or F_p (p >= 5), with point orders and torsion tests.
//!
//! Torsion over Q is decided by the uniform bound: a rational torsion point
//! has order at most 12, so checking n·P for n = 1..12 settles finiteness.
//! Over F_p the group order is found by exhaustive point counting, which is
//! why the field size carries a hard capability bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::{ExactField, FieldElem};

/// Largest prime for which exhaustive point counting is allowed.
pub const MAX_COUNTING_PRIME: u64 = 100_000;

/// Largest possible order of a rational torsion point (Mazur's bound).
pub const RATIONAL_TORSION_BOUND: i64 = 12;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassCurve {
    field: ExactField,
    /// a₁, a₂, a₃, a₄, a₆ in that order.
    a: [FieldElem; 5],
}

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine(FieldElem, FieldElem),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PointOrder {
    Finite(u64),
    Infinite,
}

impl WeierstrassCurve {
    pub fn new(field: ExactField, a: [FieldElem; 5]) -> Result<Self> {
        let a = [
            a[0].reinterpret(&field)?,
            a[1].reinterpret(&field)?,
            a[2].reinterpret(&field)?,
            a[3].reinterpret(&field)?,
            a[4].reinterpret(&field)?,
        ];
        let curve = WeierstrassCurve { field, a };
        if field.is_zero(&curve.discriminant()?)? {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn field(&self) -> &ExactField {
        &self.field
    }

    pub fn coefficients(&self) -> &[FieldElem; 5] {
        &self.a
    }

    fn f(&self) -> &ExactField {
        &self.field
    }

    /// Standard discriminant via the b-invariants.
    pub fn discriminant(&self) -> Result<FieldElem> {
        let f = self.f();
        let [a1, a2, a3, a4, a6] = &self.a;
        let sq = |x: &FieldElem| f.mul(x, x);
        let b2 = f.add(&sq(a1)?, &f.mul(&f.from_i64(4), a2)?)?;
        let b4 = f.add(&f.mul(&f.from_i64(2), a4)?, &f.mul(a1, a3)?)?;
        let b6 = f.add(&sq(a3)?, &f.mul(&f.from_i64(4), a6)?)?;
        let b8 = {
            let t1 = f.mul(&sq(a1)?, a6)?;
            let t2 = f.mul(&f.from_i64(4), &f.mul(a2, a6)?)?;
            let t3 = f.mul(a1, &f.mul(a3, a4)?)?;
            let t4 = f.mul(a2, &sq(a3)?)?;
            let t5 = sq(a4)?;
            f.sub(&f.add(&f.add(&t1, &t2)?, &t4)?, &f.add(&t3, &t5)?)?
        };
        // Δ = −b2²·b8 − 8·b4³ − 27·b6² + 9·b2·b4·b6
        let d1 = f.mul(&sq(&b2)?, &b8)?;
        let d2 = f.mul(&f.from_i64(8), &f.mul(&b4, &sq(&b4)?)?)?;
        let d3 = f.mul(&f.from_i64(27), &sq(&b6)?)?;
        let d4 = f.mul(&f.from_i64(9), &f.mul(&b2, &f.mul(&b4, &b6)?)?)?;
        f.sub(&d4, &f.add(&f.add(&d1, &d2)?, &d3)?)
    }

    pub fn on_curve(&self, p: &CurvePoint) -> Result<bool> {
        let (x, y) = match p {
            CurvePoint::Infinity => return Ok(true),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let f = self.f();
        let [a1, a2, a3, a4, a6] = &self.a;
        let x2 = f.mul(x, x)?;
        let lhs = f.add(
            &f.mul(y, y)?,
            &f.add(&f.mul(a1, &f.mul(x, y)?)?, &f.mul(a3, y)?)?,
        )?;
        let rhs = f.add(
            &f.add(&f.mul(x, &x2)?, &f.mul(a2, &x2)?)?,
            &f.add(&f.mul(a4, x)?, a6)?,
        )?;
        Ok(lhs == rhs)
    }

    fn require_on_curve(&self, p: &CurvePoint) -> Result<()> {
        if self.on_curve(p)? {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        let f = self.f();
        Ok(match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => {
                // -(x, y) = (x, -y - a1 x - a3)
                let [a1, _, a3, _, _] = &self.a;
                let ny = f.neg(&f.add(y, &f.add(&f.mul(a1, x)?, a3)?)?)?;
                CurvePoint::Affine(x.clone(), ny)
            }
        })
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        let f = self.f();
        let (x1, y1) = match p {
            CurvePoint::Infinity => return Ok(q.clone()),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return Ok(p.clone()),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let [a1, a2, a3, a4, _] = &self.a;
        let lambda = if x1 == x2 {
            // vertical line (q = -p) gives the identity
            let ysum = f.add(&f.add(y1, y2)?, &f.add(&f.mul(a1, x1)?, a3)?)?;
            if f.is_zero(&ysum)? {
                return Ok(CurvePoint::Infinity);
            }
            // tangent slope: (3x² + 2a2 x + a4 - a1 y) / (2y + a1 x + a3)
            let num = f.sub(
                &f.add(
                    &f.mul(&f.from_i64(3), &f.mul(x1, x1)?)?,
                    &f.add(&f.mul(&f.from_i64(2), &f.mul(a2, x1)?)?, a4)?,
                )?,
                &f.mul(a1, y1)?,
            )?;
            let den = f.add(
                &f.mul(&f.from_i64(2), y1)?,
                &f.add(&f.mul(a1, x1)?, a3)?,
            )?;
            f.div(&num, &den)?
        } else {
            f.div(&f.sub(y2, y1)?, &f.sub(x2, x1)?)?
        };
        let nu = f.sub(y1, &f.mul(&lambda, x1)?)?;
        // x3 = λ² + a1 λ - a2 - x1 - x2 ;  y3 = -(λ + a1) x3 - ν - a3
        let x3 = f.sub(
            &f.add(&f.mul(&lambda, &lambda)?, &f.mul(a1, &lambda)?)?,
            &f.add(a2, &f.add(x1, x2)?)?,
        )?;
        let y3 = f.neg(&f.add(
            &f.mul(&f.add(&lambda, a1)?, &x3)?,
            &f.add(&nu, a3)?,
        )?)?;
        Ok(CurvePoint::Affine(x3, y3))
    }

    pub fn sub(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        let nq = self.negate(q)?;
        self.add(p, &nq)
    }

    pub fn scalar_mul(&self, n: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.require_on_curve(p)?;
        let (mut n, base) = if n < 0 {
            (n.unsigned_abs(), self.negate(p)?)
        } else {
            (n as u64, p.clone())
        };
        let mut acc = CurvePoint::Infinity;
        let mut pow = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &pow)?;
            }
            n >>= 1;
            if n > 0 {
                pow = self.add(&pow, &pow)?;
            }
        }
        Ok(acc)
    }

    /// Number of F_p-rational points including infinity, by exhaustive
    /// count of the quadratic in y per x.  Asserts the Hasse bound.
    pub fn group_order(&self) -> Result<u64> {
        let p = match self.field {
            ExactField::Prime(p) => p,
            ExactField::Rationals => {
                return Err(Error::Capability(
                    "group order is only computed over finite fields".into(),
                ))
            }
        };
        if p > MAX_COUNTING_PRIME {
            return Err(Error::Capability(format!(
                "p = {p} exceeds the exhaustive point-counting bound {MAX_COUNTING_PRIME}; \
                 this tool is meant for desk-scale fields"
            )));
        }
        let f = &self.field;
        let mut count: u64 = 1; // infinity
        for x in 0..p {
            let xe = FieldElem::Fp(x);
            // y² + (a1 x + a3) y - (x³ + a2 x² + a4 x + a6) = 0
            let [a1, a2, a3, a4, a6] = &self.a;
            let b = f.add(&f.mul(a1, &xe)?, a3)?;
            let x2 = f.mul(&xe, &xe)?;
            let c = f.neg(&f.add(
                &f.add(&f.mul(&xe, &x2)?, &f.mul(a2, &x2)?)?,
                &f.add(&f.mul(a4, &xe)?, a6)?,
            )?)?;
            // discriminant b² - 4c; p >= 5 so the usual formula applies
            let disc = f.sub(&f.mul(&b, &b)?, &f.mul(&f.from_i64(4), &c)?)?;
            count += match disc {
                FieldElem::Fp(0) => 1,
                FieldElem::Fp(d) => {
                    if legendre(d, p) == 1 {
                        2
                    } else {
                        0
                    }
                }
                FieldElem::Rat(_) => unreachable!(),
            };
        }
        // Hasse: |#E - (p+1)| <= 2 sqrt(p)
        let diff = count as i64 - (p as i64 + 1);
        assert!(
            (diff * diff) as u64 <= 4 * p,
            "point count {count} violates the Hasse window for p = {p}"
        );
        Ok(count)
    }

    /// Every F_p point, in scan order.  Subject to the counting bound.
    pub fn all_points(&self) -> Result<Vec<CurvePoint>> {
        let p = match self.field {
            ExactField::Prime(p) => p,
            ExactField::Rationals => {
                return Err(Error::Capability(
                    "point enumeration is only available over finite fields".into(),
                ))
            }
        };
        if p > MAX_COUNTING_PRIME {
            return Err(Error::Capability(format!(
                "p = {p} exceeds the enumeration bound {MAX_COUNTING_PRIME}"
            )));
        }
        let mut out = vec![CurvePoint::Infinity];
        for x in 0..p {
            for y in 0..p {
                let pt = CurvePoint::Affine(FieldElem::Fp(x), FieldElem::Fp(y));
                if self.on_curve(&pt)? {
                    out.push(pt);
                }
            }
        }
        Ok(out)
    }

    pub fn order_of(&self, p: &CurvePoint) -> Result<PointOrder> {
        self.require_on_curve(p)?;
        if *p == CurvePoint::Infinity {
            return Ok(PointOrder::Finite(1));
        }
        match self.field {
            ExactField::Prime(_) => {
                let n = self.group_order()?;
                for d in 1..=n {
                    if n % d == 0 && self.scalar_mul(d as i64, p)? == CurvePoint::Infinity {
                        return Ok(PointOrder::Finite(d));
                    }
                }
                Err(Error::Internal(
                    "point order does not divide the group order".into(),
                ))
            }
            ExactField::Rationals => {
                // Reduction shortcut: for an odd prime of good reduction,
                // rational torsion injects into E(F_q), so a torsion point
                // and its reduction have the same order.  This avoids
                // accumulating sums of points with enormous coordinates
                // when the point is (as usual) non-torsion.
                for q in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43] {
                    let fq = ExactField::Prime(q);
                    let coeffs = self
                        .a
                        .iter()
                        .map(|c| c.reinterpret(&fq))
                        .collect::<Result<Vec<_>>>();
                    let coeffs = match coeffs {
                        Ok(c) => c,
                        Err(_) => continue, // q divides a denominator
                    };
                    let reduced = match WeierstrassCurve::new(
                        fq,
                        [0, 1, 2, 3, 4].map(|i| coeffs[i].clone()),
                    ) {
                        Ok(e) => e,
                        Err(_) => continue, // bad reduction
                    };
                    let rp = match p {
                        CurvePoint::Infinity => unreachable!(),
                        CurvePoint::Affine(x, y) => {
                            match (x.reinterpret(&fq), y.reinterpret(&fq)) {
                                (Ok(x), Ok(y)) => CurvePoint::Affine(x, y),
                                // q in a coordinate denominator: the point
                                // reduces to infinity, impossible for a
                                // nonzero torsion point
                                _ => return Ok(PointOrder::Infinite),
                            }
                        }
                    };
                    if !reduced.on_curve(&rp)? {
                        return Err(Error::Internal(
                            "reduction of a curve point left the curve".into(),
                        ));
                    }
                    let m = match reduced.order_of(&rp)? {
                        PointOrder::Finite(m) => m,
                        PointOrder::Infinite => unreachable!(),
                    };
                    if m > RATIONAL_TORSION_BOUND as u64 {
                        return Ok(PointOrder::Infinite);
                    }
                    // a torsion point must have order exactly m; verify
                    return Ok(if self.scalar_mul(m as i64, p)? == CurvePoint::Infinity {
                        PointOrder::Finite(m)
                    } else {
                        PointOrder::Infinite
                    });
                }
                // no good prime in the list (cannot happen for the curves
                // this crate builds); fall back to repeated addition
                let mut acc = CurvePoint::Infinity;
                for n in 1..=RATIONAL_TORSION_BOUND {
                    acc = self.add(&acc, p)?;
                    if acc == CurvePoint::Infinity {
                        return Ok(PointOrder::Finite(n as u64));
                    }
                }
                Ok(PointOrder::Infinite)
            }
        }
    }

    pub fn is_torsion(&self, p: &CurvePoint) -> Result<bool> {
        Ok(self.order_of(p)? != PointOrder::Infinite)
    }
}

fn legendre(a: u64, p: u64) -> i32 {
    // Euler's criterion; a nonzero mod p
    let mut r = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}

impl CurvePoint {
    /// Coerce parsed rational literals into the curve's field and check
    /// membership.
    pub fn reinterpret_on(&self, curve: &WeierstrassCurve) -> Result<CurvePoint> {
        let pt = match self {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(
                x.reinterpret(curve.field())?,
                y.reinterpret(curve.field())?,
            ),
        };
        if !curve.on_curve(&pt)? {
            return Err(Error::NotOnCurve);
        }
        Ok(pt)
    }
}

/// Point JSON: the string "inf" or {"x": "...", "y": "..."}.
impl Serialize for CurvePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CurvePoint::Infinity => s.serialize_str("inf"),
            CurvePoint::Affine(x, y) => {
                use serde::ser::SerializeMap;
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("x", x)?;
                m.serialize_entry("y", y)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for CurvePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Tag(String),
            Affine { x: FieldElem, y: FieldElem },
        }
        match Repr::deserialize(d)? {
            Repr::Tag(s) if s == "inf" => Ok(CurvePoint::Infinity),
            Repr::Tag(s) => Err(D::Error::custom(format!("unknown point tag {s:?}"))),
            Repr::Affine { x, y } => Ok(CurvePoint::Affine(x, y)),
        }
    }
}

/// Curve JSON: {"field": "Q" | {"p": n}, "a": [a1, a2, a3, a4, a6]}.
impl Serialize for WeierstrassCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("field", &self.field)?;
        m.serialize_entry("a", &self.a)?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for WeierstrassCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Repr {
            field: ExactField,
            a: [FieldElem; 5],
        }
        let r = Repr::deserialize(d)?;
        WeierstrassCurve::new(r.field, r.a).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::parse_rational;

    fn q_curve(a: [i64; 5]) -> WeierstrassCurve {
        let f = ExactField::Rationals;
        WeierstrassCurve::new(f, a.map(|c| f.from_i64(c))).unwrap()
    }

    fn qpt(x: i64, y: i64) -> CurvePoint {
        let f = ExactField::Rationals;
        CurvePoint::Affine(f.from_i64(x), f.from_i64(y))
    }

    /// y² = x³ + 1
    fn e_x3_plus_1() -> WeierstrassCurve {
        q_curve([0, 0, 0, 0, 1])
    }

    #[test]
    fn smoothness_check() {
        // y² = x³ is a cusp: discriminant 0
        let f = ExactField::Rationals;
        assert!(matches!(
            WeierstrassCurve::new(f, [0, 0, 0, 0, 0].map(|c| f.from_i64(c))),
            Err(Error::SingularCurve)
        ));
        assert!(!ExactField::Rationals
            .is_zero(&e_x3_plus_1().discriminant().unwrap())
            .unwrap());
    }

    #[test]
    fn membership() {
        let e = e_x3_plus_1();
        assert!(e.on_curve(&CurvePoint::Infinity).unwrap());
        assert!(e.on_curve(&qpt(2, 3)).unwrap());
        assert!(!e.on_curve(&qpt(1, 1)).unwrap());
    }

    #[test]
    fn addition_oracles() {
        let e = e_x3_plus_1();
        let p = qpt(2, 3);
        assert_eq!(e.add(&p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(e.add(&p, &p).unwrap(), qpt(0, 1));
        assert_eq!(e.add(&qpt(-1, 0), &qpt(-1, 0)).unwrap(), CurvePoint::Infinity);
        assert_eq!(e.scalar_mul(3, &p).unwrap(), qpt(-1, 0));
        assert_eq!(e.scalar_mul(6, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(e.scalar_mul(0, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(
            e.scalar_mul(-3, &p).unwrap(),
            e.negate(&e.scalar_mul(3, &p).unwrap()).unwrap()
        );
    }

    #[test]
    fn rational_orders() {
        let e = e_x3_plus_1();
        assert_eq!(e.order_of(&qpt(2, 3)).unwrap(), PointOrder::Finite(6));
        assert_eq!(e.order_of(&qpt(0, 1)).unwrap(), PointOrder::Finite(3));
        assert_eq!(e.order_of(&qpt(-1, 0)).unwrap(), PointOrder::Finite(2));
        // y² = x³ - 2 with the rank generator (3, 5)
        let e2 = q_curve([0, 0, 0, 0, -2]);
        assert!(e2.on_curve(&qpt(3, 5)).unwrap());
        assert_eq!(e2.order_of(&qpt(3, 5)).unwrap(), PointOrder::Infinite);
        assert!(!e2.is_torsion(&qpt(3, 5)).unwrap());
    }

    #[test]
    fn f5_group_is_z6() {
        let f = ExactField::prime(5).unwrap();
        let e = WeierstrassCurve::new(f, [0, 0, 0, 0, 1].map(|c| f.from_i64(c))).unwrap();
        assert_eq!(e.group_order().unwrap(), 6);
        let pts = e.all_points().unwrap();
        assert_eq!(pts.len(), 6);
        for p in &pts {
            match e.order_of(p).unwrap() {
                PointOrder::Finite(n) => assert_eq!(6 % n, 0),
                PointOrder::Infinite => panic!("finite field point has finite order"),
            }
        }
    }

    #[test]
    fn f5_group_axioms_exhaustive() {
        let f = ExactField::prime(5).unwrap();
        let e = WeierstrassCurve::new(f, [0, 0, 0, 0, 1].map(|c| f.from_i64(c))).unwrap();
        let pts = e.all_points().unwrap();
        for p in &pts {
            assert_eq!(&e.add(p, &CurvePoint::Infinity).unwrap(), p);
            assert_eq!(
                e.add(p, &e.negate(p).unwrap()).unwrap(),
                CurvePoint::Infinity
            );
            for q in &pts {
                assert_eq!(e.add(p, q).unwrap(), e.add(q, p).unwrap());
                for r in &pts {
                    let lhs = e.add(&e.add(p, q).unwrap(), r).unwrap();
                    let rhs = e.add(p, &e.add(q, r).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn supersingular_counts() {
        // y² = x³ + 1 is supersingular for p = 2 mod 3: #E = p + 1
        for p in [5u64, 11] {
            let f = ExactField::prime(p).unwrap();
            let e = WeierstrassCurve::new(f, [0, 0, 0, 0, 1].map(|c| f.from_i64(c))).unwrap();
            assert_eq!(e.group_order().unwrap(), p + 1);
        }
        // p = 7 = 1 mod 3: count is 12 (computed by the same exhaustive scan
        // that the library uses; cross-checked by an independent prototype)
        let f = ExactField::prime(7).unwrap();
        let e = WeierstrassCurve::new(f, [0, 0, 0, 0, 1].map(|c| f.from_i64(c))).unwrap();
        assert_eq!(e.group_order().unwrap(), 12);
    }

    #[test]
    fn capability_bound_enforced() {
        let f = ExactField::prime(100_003).unwrap();
        let e = WeierstrassCurve::new(f, [0, 0, 0, 0, 1].map(|c| f.from_i64(c))).unwrap();
        assert!(matches!(e.group_order(), Err(Error::Capability(_))));
    }

    #[test]
    fn general_coefficients_group_law() {
        // a1..a6 all nonzero: y² + xy + 3y = x³ + 2x² + 4x + 5 over Q
        let e = q_curve([1, 2, 3, 4, 5]);
        // find a rational point by scanning small x
        let f = ExactField::Rationals;
        let p = CurvePoint::Affine(f.from_i64(1), f.from_i64(2));
        assert!(e.on_curve(&p).unwrap());
        // scalar_mul distributes over addition
        let a = e.scalar_mul(3, &p).unwrap();
        let b = e.scalar_mul(4, &p).unwrap();
        assert_eq!(e.add(&a, &b).unwrap(), e.scalar_mul(7, &p).unwrap());
        // negation really is the group inverse with a1, a3 nonzero
        assert_eq!(
            e.add(&p, &e.negate(&p).unwrap()).unwrap(),
            CurvePoint::Infinity
        );
    }

    #[test]
    fn json_roundtrip() {
        let e: WeierstrassCurve =
            serde_json::from_str(r#"{"field":"Q","a":["0","0","0","0","1"]}"#).unwrap();
        assert_eq!(e, e_x3_plus_1());
        let p: CurvePoint = serde_json::from_str(r#"{"x":"2","y":"3"}"#).unwrap();
        assert_eq!(p.reinterpret_on(&e).unwrap(), qpt(2, 3));
        let inf: CurvePoint = serde_json::from_str(r#""inf""#).unwrap();
        assert_eq!(inf, CurvePoint::Infinity);
        // singular curves are rejected at parse time
        assert!(serde_json::from_str::<WeierstrassCurve>(
            r#"{"field":"Q","a":["0","0","0","0","0"]}"#
        )
        .is_err());
        let back = serde_json::to_string(&e).unwrap();
        let e2: WeierstrassCurve = serde_json::from_str(&back).unwrap();
        assert_eq!(e2, e_x3_plus_1());
        // fractional coordinates parse exactly
        let frac: CurvePoint = serde_json::from_str(r#"{"x":"1/4","y":"-9/8"}"#).unwrap();
        match frac {
            CurvePoint::Affine(x, _) => {
                assert_eq!(x.as_rational().unwrap(), &parse_rational("1/4").unwrap())
            }
            _ => panic!(),
        }
    }
}
