//! Singular members of a pencil of plane curves.
//!
//! For a pencil s·f₀ + t·f∞ the parameters reported are those where the
//! member is *more singular than the generic member*: it acquires a
//! singular point outside the fixed singular locus (points singular on
//! every member), or its singularity at a generically-nodal fixed point
//! degenerates.  For a pencil whose generic member is smooth the two
//! notions coincide and this is simply the set of singular members.
//!
//! Candidate parameters come from chart-wise elimination (iterated
//! resultants in the two affine variables), from the line at infinity of
//! the chart, and from the Hessian determinants at fixed singular points;
//! every candidate is then verified or refuted by an independent
//! singularity analysis of the member itself, so spurious resultant roots
//! never survive.  Candidates that can be neither verified nor refuted
//! (irrational residuals) are reported separately.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pencil::forms::{chart_poly, Chart, HomogeneousForm, ProjectivePoint, Var};
use crate::pencil::member::{singularity_report, strip_rational_roots};
use crate::poly::{resultant_prs, resultant_with_degrees, GcdRing, Polynomial, Ring, ZPoly, ZPoly2, ZPoly3};

/// Point (s:t) of the parameter line, stored as a reduced integer pair
/// with the first nonzero entry positive.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Parameter {
    s: i64,
    t: i64,
}

impl Parameter {
    pub fn new(s: i64, t: i64) -> Result<Self> {
        if s == 0 && t == 0 {
            return Err(Error::Config("parameter (0:0) is not a point of P^1".into()));
        }
        let g = s.gcd(&t);
        let (mut s, mut t) = (s / g, t / g);
        if s < 0 || (s == 0 && t < 0) {
            s = -s;
            t = -t;
        }
        Ok(Parameter { s, t })
    }

    /// Parameter (num : den) for the affine value num/den.
    pub fn from_root(r: &BigRational) -> Result<Self> {
        let s = r
            .numer()
            .to_i64()
            .ok_or_else(|| Error::Capability("parameter numerator exceeds i64".into()))?;
        let t = r
            .denom()
            .to_i64()
            .ok_or_else(|| Error::Capability("parameter denominator exceeds i64".into()))?;
        Parameter::new(s, t)
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn t(&self) -> i64 {
        self.t
    }
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

impl Serialize for Parameter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.s, self.t].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Parameter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [s, t] = <[i64; 2]>::deserialize(deserializer)?;
        Parameter::new(s, t).map_err(serde::de::Error::custom)
    }
}

/// One member s·f₀ + t·f∞ of a pencil.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PencilMember {
    parameter: Parameter,
    form: HomogeneousForm,
}

impl PencilMember {
    pub fn new(
        parameter: Parameter,
        f0: &HomogeneousForm,
        finf: &HomogeneousForm,
    ) -> Result<Self> {
        let form = f0
            .scale(&BigRational::from(BigInt::from(parameter.s)))
            .add(&finf.scale(&BigRational::from(BigInt::from(parameter.t))))?;
        Ok(PencilMember { parameter, form })
    }

    pub fn parameter(&self) -> Parameter {
        self.parameter
    }

    pub fn form(&self) -> &HomogeneousForm {
        &self.form
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PencilReport {
    /// Parameters whose member is verified to be more singular than the
    /// generic member.
    pub parameters: Vec<Parameter>,
    /// Rational candidates the verification could neither confirm nor
    /// refute (the member analysis left irrational residuals).
    pub unresolved: Vec<Parameter>,
    /// Points singular on every member of the pencil.
    pub fixed_singular_points: Vec<ProjectivePoint>,
    /// Fixed singular points where already the generic member is worse
    /// than a node: further degeneration there is not detected.
    pub undetectable_fixed_points: Vec<ProjectivePoint>,
    /// Total degree of elimination-polynomial factors without rational
    /// roots (possible irrational singular parameters), plus one for each
    /// elimination stage that could not be carried out.
    pub residual_degree: usize,
}

pub fn singular_parameters(
    f0: &HomogeneousForm,
    finf: &HomogeneousForm,
) -> Result<PencilReport> {
    if f0.degree() != finf.degree() {
        return Err(Error::Dimension(format!(
            "pencil generators have degrees {} and {}",
            f0.degree(),
            finf.degree()
        )));
    }
    if f0.is_zero() || finf.is_zero() || f0.degree() == 0 {
        return Err(Error::Config(
            "pencil generators must be nonzero forms of positive degree".into(),
        ));
    }
    // scale both generators by one common constant so that all coefficients
    // are integers; a common scale does not move the parameters
    let (f0, finf) = integerize_pair(f0, finf);
    check_no_common_component(&f0, &finf)?;

    // points singular on both generators are singular on every member
    let fixed = fixed_singular_points(&f0, &finf)?;
    let mut verified: BTreeSet<Parameter> = BTreeSet::new();
    let mut residual = 0usize;
    let mut undetectable = Vec::new();
    for p in &fixed {
        match hessian_parameters(&f0, &finf, p)? {
            HessianAtFixedPoint::GenericallyDegenerate => undetectable.push(p.clone()),
            HessianAtFixedPoint::DegeneratesAt { parameters, residual_degree } => {
                verified.extend(parameters);
                residual += residual_degree;
            }
        }
    }

    // elimination candidates from the first usable chart, plus the pencil
    // endpoints and the chart's line at infinity
    let mut candidates: BTreeSet<Parameter> = BTreeSet::new();
    candidates.insert(Parameter::new(1, 0)?);
    candidates.insert(Parameter::new(0, 1)?);
    let mut used = None;
    for chart in Chart::ALL {
        if eliminate_on_chart(chart, &f0, &finf, &mut candidates, &mut residual)? {
            used = Some(chart);
            break;
        }
    }
    let used = used.ok_or_else(|| {
        Error::DegeneratePencil(
            "elimination resultants vanish identically on every chart".into(),
        )
    })?;
    line_scan(used, &f0, &finf, &mut candidates, &mut residual)?;

    // sanity: a member away from every candidate must be smooth beyond the
    // fixed locus, otherwise almost all members are singular
    let generic = {
        let mut n = 2i64;
        loop {
            let p = Parameter::new(n, 1)?;
            if !candidates.contains(&p) && !verified.contains(&p) {
                break p;
            }
            n += 1;
        }
    };
    let generic_rep =
        singularity_report(PencilMember::new(generic, &f0, &finf)?.form(), &fixed)?;
    if generic_rep.singular_beyond_excluded() {
        return Err(Error::DegeneratePencil(
            "a generic member is singular beyond the fixed singular locus".into(),
        ));
    }

    // verify every candidate against the member itself
    let mut unresolved: BTreeSet<Parameter> = BTreeSet::new();
    for cand in &candidates {
        if verified.contains(cand) {
            continue;
        }
        let member = PencilMember::new(*cand, &f0, &finf)?;
        let rep = singularity_report(member.form(), &fixed)?;
        if rep.singular_beyond_excluded() {
            verified.insert(*cand);
        } else if !rep.certified_smooth_beyond_excluded() {
            unresolved.insert(*cand);
        }
    }
    Ok(PencilReport {
        parameters: verified.into_iter().collect(),
        unresolved: unresolved.into_iter().collect(),
        fixed_singular_points: fixed,
        undetectable_fixed_points: undetectable,
        residual_degree: residual,
    })
}

fn integerize_pair(
    f0: &HomogeneousForm,
    finf: &HomogeneousForm,
) -> (HomogeneousForm, HomogeneousForm) {
    let mut denom = <BigInt as One>::one();
    for (_, c) in f0.terms().chain(finf.terms()) {
        denom = denom.lcm(c.denom());
    }
    let mu = BigRational::from(denom);
    (f0.scale(&mu), finf.scale(&mu))
}

fn check_no_common_component(f0: &HomogeneousForm, finf: &HomogeneousForm) -> Result<()> {
    // a common factor either is a power of z or survives dehomogenizing at z
    let zpow = |f: &HomogeneousForm| f.terms().map(|(e, _)| e[2]).min().unwrap_or(0);
    if zpow(f0) >= 1 && zpow(finf) >= 1 {
        return Err(Error::DegeneratePencil(
            "the generators share the component z = 0".into(),
        ));
    }
    let g = chart_poly(f0, Chart::Z).gcd(&chart_poly(finf, Chart::Z));
    if g.deg_or_zero() >= 1 || g.coeff(0).deg_or_zero() >= 1 {
        return Err(Error::DegeneratePencil(
            "the generators share a common component".into(),
        ));
    }
    Ok(())
}

fn fixed_singular_points(
    f0: &HomogeneousForm,
    finf: &HomogeneousForm,
) -> Result<Vec<ProjectivePoint>> {
    let r0 = singularity_report(f0, &[])?;
    let ri = singularity_report(finf, &[])?;
    let mut fixed = BTreeSet::new();
    for p in r0.points.iter().chain(ri.points.iter()) {
        if f0.is_singular_at(p) && finf.is_singular_at(p) {
            fixed.insert(p.clone());
        }
    }
    Ok(fixed.into_iter().collect())
}

enum HessianAtFixedPoint {
    /// The Hessian determinant vanishes for every parameter: the generic
    /// member is already worse than a node here.
    GenericallyDegenerate,
    /// Parameters where the determinant vanishes, i.e. the generically
    /// nodal singularity degenerates.
    DegeneratesAt {
        parameters: Vec<Parameter>,
        residual_degree: usize,
    },
}

/// Determinant of the 2x2 Hessian of the dehomogenized member at a fixed
/// singular point, as a binary quadratic form in (s, t); its roots are
/// parameters where the member degenerates at that point.
fn hessian_parameters(
    f0: &HomogeneousForm,
    finf: &HomogeneousForm,
    p: &ProjectivePoint,
) -> Result<HessianAtFixedPoint> {
    let chart = Chart::of_point(p);
    let (ui, vi, _) = chart.axes();
    let second = |f: &HomogeneousForm| -> [BigRational; 3] {
        let fu = f.partial(Var::ALL[ui]);
        [
            fu.partial(Var::ALL[ui]).evaluate(p.coords()),
            fu.partial(Var::ALL[vi]).evaluate(p.coords()),
            f.partial(Var::ALL[vi])
                .partial(Var::ALL[vi])
                .evaluate(p.coords()),
        ]
    };
    let a = second(f0);
    let b = second(finf);
    // det(s·A + t·B) = q2 s^2 + q1 s t + q0 t^2
    let q2 = &a[0] * &a[2] - &a[1] * &a[1];
    let q1 = &a[0] * &b[2] + &b[0] * &a[2] - BigRational::from(BigInt::from(2)) * &a[1] * &b[1];
    let q0 = &b[0] * &b[2] - &b[1] * &b[1];
    if q2.is_zero() && q1.is_zero() && q0.is_zero() {
        return Ok(HessianAtFixedPoint::GenericallyDegenerate);
    }
    let denom = q2
        .denom()
        .lcm(q1.denom())
        .lcm(q0.denom());
    let mu = BigRational::from(denom);
    let quad = ZPoly::from_coeffs(vec![
        (&q0 * &mu).to_integer(),
        (&q1 * &mu).to_integer(),
        (&q2 * &mu).to_integer(),
    ]);
    let mut parameters = Vec::new();
    if q2.is_zero() {
        parameters.push(Parameter::new(1, 0)?);
    }
    let (roots, rest) = strip_rational_roots(&quad);
    for r in &roots {
        parameters.push(Parameter::from_root(r)?);
    }
    Ok(HessianAtFixedPoint::DegeneratesAt {
        parameters,
        residual_degree: rest.deg_or_zero(),
    })
}

/// Lift a bivariate chart polynomial to the pencil: each integer
/// coefficient becomes c·s^k in Z[s].
fn lift(p: &ZPoly2, s_power: usize) -> ZPoly3 {
    p.map_coeffs(|c: &ZPoly| c.map_coeffs(|g: &BigInt| ZPoly::monomial(g.clone(), s_power)))
}

/// Collect the rational roots of an elimination polynomial in s as
/// candidate parameters; unfactored degree goes into the residual.
fn add_roots(
    p: &ZPoly,
    candidates: &mut BTreeSet<Parameter>,
    residual: &mut usize,
) -> Result<()> {
    let (roots, rest) = strip_rational_roots(p);
    for r in &roots {
        candidates.insert(Parameter::from_root(r)?);
    }
    *residual += rest.deg_or_zero();
    Ok(())
}

/// Eliminate the two chart variables from {member, d/du, d/dv} by iterated
/// resultants.  Returns false (chart unusable) when a resultant vanishes
/// identically.
fn eliminate_on_chart(
    chart: Chart,
    f0: &HomogeneousForm,
    finf: &HomogeneousForm,
    candidates: &mut BTreeSet<Parameter>,
    residual: &mut usize,
) -> Result<bool> {
    // A(v; u, s) = s·f0 + f∞ on the chart; the endpoint s = ∞ is the
    // always-present candidate (1:0)
    let a = Ring::add(&lift(&chart_poly(f0, chart), 1), &lift(&chart_poly(finf, chart), 0));
    let au: ZPoly3 = a.map_coeffs(|c: &ZPoly2| c.derivative());
    let av = a.derivative();
    let r1: ZPoly2 = resultant_prs(&a, &au);
    let r2: ZPoly2 = resultant_prs(&a, &av);
    if r1.is_zero() || r2.is_zero() {
        return Ok(false);
    }
    // content in Z[s]: parameters killing a whole elimination polynomial
    let mut primitive = Vec::with_capacity(2);
    for r in [r1, r2] {
        let cont = r.content();
        if cont.deg_or_zero() >= 1 {
            add_roots(&cont, candidates, residual)?;
        }
        primitive.push(r.primitive_part());
    }
    let (r1p, r2p) = (primitive.remove(0), primitive.remove(0));
    let g = r1p.gcd(&r2p);
    let (r1q, r2q) = if g.deg_or_zero() >= 1 {
        // the eliminations share u-lines; rational ones are handled by
        // re-evaluating the cofactors there, the rest is residual
        let h = vertical_line_part(&g);
        if h.deg_or_zero() >= 1 {
            let (u_roots, h_rest) = strip_rational_roots(&h);
            *residual += h_rest.deg_or_zero();
            for u0 in &u_roots {
                let e1 = strip_line_and_eval(&r1p, u0);
                let e2 = strip_line_and_eval(&r2p, u0);
                let gs = e1.gcd(&e2);
                add_roots(&gs, candidates, residual)?;
            }
        } else {
            *residual += g.deg_or_zero();
        }
        let r1q = r1p
            .exact_div_poly(&g)
            .ok_or_else(|| Error::Internal("gcd must divide".into()))?;
        let r2q = r2p
            .exact_div_poly(&g)
            .ok_or_else(|| Error::Internal("gcd must divide".into()))?;
        (r1q, r2q)
    } else {
        (r1p, r2p)
    };
    let p: ZPoly = resultant_prs(&r1q, &r2q);
    if p.is_zero() {
        // coprime after gcd division, so this should not happen
        return Err(Error::Internal("vanishing final resultant".into()));
    }
    add_roots(&p, candidates, residual)?;
    Ok(true)
}

/// The u-polynomial whose roots are the vertical lines u = u0 contained in
/// V(g) for every s: gcd of the coefficient polynomials of each s-power.
fn vertical_line_part(g: &ZPoly2) -> ZPoly {
    let max_s = g.coeffs().iter().map(|c| c.deg_or_zero()).max().unwrap_or(0);
    let mut h = ZPoly::zero();
    for j in 0..=max_s {
        let gj = ZPoly::from_coeffs(g.coeffs().iter().map(|c| c.coeff(j)).collect());
        h = h.gcd(&gj);
    }
    h
}

/// Divide out the line u = u0 completely, then evaluate at u = u0 with
/// denominators cleared: a nonzero polynomial in s.
fn strip_line_and_eval(p: &ZPoly2, u0: &BigRational) -> ZPoly {
    let lin: ZPoly2 = Polynomial::from_coeffs(vec![
        ZPoly::constant(-u0.numer().clone()),
        ZPoly::constant(u0.denom().clone()),
    ]);
    let mut r = p.clone();
    while let Some(q) = r.exact_div_poly(&lin) {
        r = q;
    }
    let d = r.deg_or_zero();
    let mut acc = ZPoly::zero();
    let mut pw_num = <BigInt as One>::one();
    let mut pows = Vec::with_capacity(d + 1);
    for i in 0..=d {
        pows.push(pw_num.clone());
        if i < d {
            pw_num *= u0.numer();
        }
    }
    let mut pw_den = <BigInt as One>::one();
    for i in (0..=d).rev() {
        acc = Ring::add(&acc, &r.coeff(i).scale(&(&pows[i] * &pw_den)));
        pw_den *= u0.denom();
    }
    acc
}

/// Candidates from singular points on the chart's line at infinity: the
/// three partials restricted to that line are binary forms whose pairwise
/// resultants (with declared degrees, so roots at the forms' infinity
/// count) lie in Z[s].
fn line_scan(
    chart: Chart,
    f0: &HomogeneousForm,
    finf: &HomogeneousForm,
    candidates: &mut BTreeSet<Parameter>,
    residual: &mut usize,
) -> Result<()> {
    let d = f0.degree() - 1;
    let (ui, _, wi) = chart.axes();
    let mut forms: Vec<Polynomial<ZPoly>> = Vec::new();
    for var in Var::ALL {
        let b0 = binary_on_line(&f0.partial(var), ui, wi);
        let bi = binary_on_line(&finf.partial(var), ui, wi);
        let b = Ring::add(
            &b0.map_coeffs(|c: &BigInt| ZPoly::monomial(c.clone(), 1)),
            &bi.map_coeffs(|c: &BigInt| ZPoly::constant(c.clone())),
        );
        if !b.is_zero() {
            forms.push(b);
        }
    }
    if forms.len() < 2 {
        *residual += 1;
        return Ok(());
    }
    let mut g: Option<ZPoly> = None;
    for i in 0..forms.len() {
        for j in i + 1..forms.len() {
            let r: ZPoly = resultant_with_degrees(&forms[i], &forms[j], d, d);
            if r.is_zero() {
                continue;
            }
            g = Some(match g {
                None => r,
                Some(acc) => acc.gcd(&r),
            });
        }
    }
    match g {
        // every pair shares a root for all s: a fixed singular point on
        // the line; nothing to localize here
        None => *residual += 1,
        Some(g) => add_roots(&g, candidates, residual)?,
    }
    Ok(())
}

/// Coefficients of an integer form restricted to the line w = 0, indexed
/// by the exponent of the u-coordinate.
fn binary_on_line(f: &HomogeneousForm, ui: usize, wi: usize) -> ZPoly {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (e, c) in f.terms() {
        if e[wi] != 0 {
            continue;
        }
        let k = e[ui] as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, <BigInt as Zero>::zero());
        }
        // generators are integerized before restriction
        coeffs[k] += c.numer();
    }
    ZPoly::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::member::{node_test, rational_singular_points, NodeKind};
    use crate::poly::zpoly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn form(degree: usize, terms: &[([u32; 3], i64)]) -> HomogeneousForm {
        HomogeneousForm::from_integer_terms(degree, terms).unwrap()
    }

    fn param(s: i64, t: i64) -> Parameter {
        Parameter::new(s, t).unwrap()
    }

    /// d0 = 4x(yz - x^2)
    fn d0() -> HomogeneousForm {
        form(3, &[([1, 1, 1], 4), ([3, 0, 0], -4)])
    }

    /// dinf = z(y+z)^2 - x^2(y+2z)
    fn dinf() -> HomogeneousForm {
        form(
            3,
            &[
                ([0, 2, 1], 1),
                ([0, 1, 2], 2),
                ([0, 0, 3], 1),
                ([2, 1, 0], -1),
                ([2, 0, 1], -2),
            ],
        )
    }

    /// c0 = 4x^2 (x^2 - yz)^2
    fn c0() -> HomogeneousForm {
        let x2 = form(2, &[([2, 0, 0], 4)]);
        let inner = form(2, &[([2, 0, 0], 1), ([0, 1, 1], -1)]);
        x2.mul(&inner).mul(&inner)
    }

    /// cinf = (2x^2 y - x^2 z + y^3 - 2y^2 z + y z^2)
    ///      * (2x^2 y + x^2 z - y^3 - 2y^2 z - y z^2)
    fn cinf() -> HomogeneousForm {
        let g1 = form(
            3,
            &[
                ([2, 1, 0], 2),
                ([2, 0, 1], -1),
                ([0, 3, 0], 1),
                ([0, 2, 1], -2),
                ([0, 1, 2], 1),
            ],
        );
        let g2 = form(
            3,
            &[
                ([2, 1, 0], 2),
                ([2, 0, 1], 1),
                ([0, 3, 0], -1),
                ([0, 2, 1], -2),
                ([0, 1, 2], -1),
            ],
        );
        g1.mul(&g2)
    }

    fn fermat() -> HomogeneousForm {
        form(3, &[([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], 1)])
    }

    #[test]
    fn parameter_normalization() {
        assert_eq!(param(2, -2), param(-1, 1));
        assert_eq!(param(0, -3), param(0, 1));
        assert_eq!(param(-5, 0), param(1, 0));
        assert!(Parameter::new(0, 0).is_err());
        let r = BigRational::new(BigInt::from(-1), BigInt::from(1));
        assert_eq!(Parameter::from_root(&r).unwrap(), param(1, -1));
        assert_eq!(serde_json::to_string(&param(1, -1)).unwrap(), "[1,-1]");
    }

    #[test]
    fn cubic_pencil_singular_parameters() {
        let rep = singular_parameters(&d0(), &dinf()).unwrap();
        assert_eq!(
            rep.parameters,
            vec![param(0, 1), param(1, -1), param(1, 0), param(1, 1)]
        );
        assert!(rep.unresolved.is_empty());
        assert!(rep.fixed_singular_points.is_empty());
        assert_eq!(rep.residual_degree, 0);
    }

    #[test]
    fn cubic_pencil_members_are_nodal() {
        // s = 1 and s = -1: exactly one singular point each, a node
        for (s, expect) in [(1i64, [-2, 5, 1]), (-1, [2, 5, 1])] {
            let m = PencilMember::new(param(s, 1), &d0(), &dinf()).unwrap();
            let rep = rational_singular_points(m.form()).unwrap();
            let p = ProjectivePoint::from_integers(expect).unwrap();
            assert_eq!(rep.points, vec![p.clone()], "s = {s}");
            assert!(rep.certified_smooth_beyond_excluded() || rep.points.len() == 1);
            assert_eq!(rep.residual_degree, 0);
            assert_eq!(node_test(m.form(), &p), NodeKind::Node);
        }
        // s = 0: dinf has a unique node at [0:1:-1]
        let rep = rational_singular_points(&dinf()).unwrap();
        let p = ProjectivePoint::from_integers([0, 1, -1]).unwrap();
        assert_eq!(rep.points, vec![p.clone()]);
        assert_eq!(node_test(&dinf(), &p), NodeKind::Node);
    }

    #[test]
    fn sextic_pencil_singular_parameters() {
        let rep = singular_parameters(&c0(), &cinf()).unwrap();
        for p in [param(1, 0), param(0, 1), param(1, 1), param(1, -1)] {
            assert!(rep.parameters.contains(&p), "missing {p}");
        }
        // the base points are singular on every member
        let fixed: Vec<ProjectivePoint> = [[0, 0, 1], [0, 1, 1], [0, 1, -1]]
            .into_iter()
            .map(|c| ProjectivePoint::from_integers(c).unwrap())
            .collect();
        let mut expect = fixed;
        expect.sort();
        assert_eq!(rep.fixed_singular_points, expect);
        // [0:0:1] is worse than a node on every member
        assert_eq!(
            rep.undetectable_fixed_points,
            vec![ProjectivePoint::from_integers([0, 0, 1]).unwrap()]
        );
    }

    #[test]
    fn sextic_members_degenerate_at_the_base_points() {
        // at s = 1 the node at [0:1:1] degenerates, the one at [0:1:-1]
        // stays a node; at s = -1 the roles swap
        let plus = PencilMember::new(param(1, 1), &c0(), &cinf()).unwrap();
        let minus = PencilMember::new(param(1, -1), &c0(), &cinf()).unwrap();
        let p_plus = ProjectivePoint::from_integers([0, 1, 1]).unwrap();
        let p_minus = ProjectivePoint::from_integers([0, 1, -1]).unwrap();
        assert_eq!(node_test(plus.form(), &p_plus), NodeKind::NonNodeSingular);
        assert_eq!(node_test(plus.form(), &p_minus), NodeKind::Node);
        assert_eq!(node_test(minus.form(), &p_minus), NodeKind::NonNodeSingular);
        assert_eq!(node_test(minus.form(), &p_plus), NodeKind::Node);
        // generic members keep nodes at both
        let gen = PencilMember::new(param(7, 1), &c0(), &cinf()).unwrap();
        assert_eq!(node_test(gen.form(), &p_plus), NodeKind::Node);
        assert_eq!(node_test(gen.form(), &p_minus), NodeKind::Node);
    }

    #[test]
    fn triangle_in_the_hesse_pencil() {
        // f0 = xyz: the triangle member (1:0) is singular; the only other
        // rational singular member of this pencil is -3·xyz + fermat
        let xyz = form(3, &[([1, 1, 1], 1)]);
        let rep = singular_parameters(&xyz, &fermat()).unwrap();
        assert!(rep.parameters.contains(&param(1, 0)));
        assert!(rep.parameters.contains(&param(3, -1)));
        assert_eq!(rep.parameters.len(), 2);
        // the two complex-conjugate singular members show up as residual
        assert!(rep.residual_degree >= 2);
        assert!(rep.fixed_singular_points.is_empty());
    }

    #[test]
    fn swap_invariance() {
        let ab = singular_parameters(&d0(), &dinf()).unwrap();
        let ba = singular_parameters(&dinf(), &d0()).unwrap();
        let swapped: BTreeSet<Parameter> = ab
            .parameters
            .iter()
            .map(|p| Parameter::new(p.t(), p.s()).unwrap())
            .collect();
        let got: BTreeSet<Parameter> = ba.parameters.iter().copied().collect();
        assert_eq!(got, swapped);
    }

    #[test]
    fn unimodular_reparameterization() {
        // (g0, ginf) = (f0 + finf, finf): the member s·g0 + t·ginf equals
        // s·f0 + (s+t)·finf, so new parameters map by (s:t) -> (s:s+t)
        let g0 = d0().add(&dinf()).unwrap();
        let rep = singular_parameters(&g0, &dinf()).unwrap();
        let mapped: BTreeSet<Parameter> = rep
            .parameters
            .iter()
            .map(|p| Parameter::new(p.s(), p.s() + p.t()).unwrap())
            .collect();
        let original: BTreeSet<Parameter> = singular_parameters(&d0(), &dinf())
            .unwrap()
            .parameters
            .into_iter()
            .collect();
        assert_eq!(mapped, original);
    }

    #[test]
    fn degenerate_pencils_are_rejected() {
        // proportional generators
        let err = singular_parameters(&d0(), &d0().scale(&BigRational::from(BigInt::from(3))));
        assert!(matches!(err, Err(Error::DegeneratePencil(_))));
        // common component x
        let x = form(1, &[([1, 0, 0], 1)]);
        let q1 = x.mul(&form(1, &[([0, 1, 0], 1)]));
        let q2 = x.mul(&form(1, &[([0, 0, 1], 1)]));
        let err = singular_parameters(&q1, &q2);
        assert!(matches!(err, Err(Error::DegeneratePencil(_))));
        // degree mismatch
        let err = singular_parameters(&x, &q1);
        assert!(matches!(err, Err(Error::Dimension(_))));
    }

    #[test]
    fn resultant_vanishes_iff_gcd_nonconstant() {
        // random univariate pairs, sometimes with a planted common factor
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for trial in 0..100 {
            let rand_poly = |rng: &mut ChaCha8Rng, deg: usize| -> ZPoly {
                let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-6..=6)).collect();
                if *c.last().unwrap() == 0 {
                    *c.last_mut().unwrap() = 1;
                }
                zpoly(&c)
            };
            let da = rng.gen_range(1..=4);
            let db = rng.gen_range(1..=4);
            let mut a = rand_poly(&mut rng, da);
            let mut b = rand_poly(&mut rng, db);
            if trial % 2 == 0 {
                let dc = rng.gen_range(1..=2);
                let common = rand_poly(&mut rng, dc);
                a = a.mul(&common);
                b = b.mul(&common);
            }
            let res: BigInt = resultant_prs(&a, &b);
            assert_eq!(Ring::is_zero(&res), !a.gcd(&b).is_constant(), "{a:?} {b:?}");
        }
    }
}
