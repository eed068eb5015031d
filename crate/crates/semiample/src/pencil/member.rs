//! Singular points of a single plane curve: rational singular-point
//! location by chart-wise elimination, the node test, and the probabilistic
//! reducedness check on random lines.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::modroots::rational_roots;
use crate::pencil::forms::{chart_poly, Chart, HomogeneousForm, ProjectivePoint, Var};
use crate::poly::{is_squarefree, resultant_prs, GcdRing, Ring, ZPoly, ZPoly2};

/// Outcome of locating the singular points of one curve.  Only rational
/// points carry coordinates; everything the elimination could not resolve
/// into rational points is reported through the other fields so that a
/// "no singular points" conclusion is sound exactly when
/// `certified_smooth_beyond_excluded` holds.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SingularityReport {
    /// Rational singular points outside the excluded set.
    pub points: Vec<ProjectivePoint>,
    /// Excluded points that are indeed singular on this curve.
    pub excluded_points: Vec<ProjectivePoint>,
    /// The singular locus contains a curve (the form has a repeated or
    /// non-reduced component); point lists are then incomplete.
    pub one_dimensional: bool,
    /// The curve provably has a singular point with irrational coordinates
    /// (a common root survived after removing all rational ones).
    pub certified_irrational: bool,
    /// Total degree of elimination-polynomial factors with no rational
    /// roots: potential irrational singular points, not individually
    /// certified.
    pub residual_degree: usize,
}

impl SingularityReport {
    /// The curve is certainly singular somewhere outside the excluded set.
    pub fn singular_beyond_excluded(&self) -> bool {
        self.one_dimensional || self.certified_irrational || !self.points.is_empty()
    }

    /// The curve is certainly smooth outside the excluded set.
    pub fn certified_smooth_beyond_excluded(&self) -> bool {
        !self.singular_beyond_excluded() && self.residual_degree == 0
    }
}

/// All rational points of P²(Q) where the three partials (hence the form)
/// vanish, plus diagnostics for anything irrational.
pub fn rational_singular_points(f: &HomogeneousForm) -> Result<SingularityReport> {
    singularity_report(f, &[])
}

/// Like `rational_singular_points`, but points in `exclude` are reported
/// separately; used to look past the fixed singular locus of a pencil.
pub fn singularity_report(
    f: &HomogeneousForm,
    exclude: &[ProjectivePoint],
) -> Result<SingularityReport> {
    if f.is_zero() || f.degree() == 0 {
        return Err(Error::Config(
            "singularity analysis needs a nonzero form of positive degree".into(),
        ));
    }
    let partials: Vec<HomogeneousForm> = Var::ALL.iter().map(|&v| f.partial(v)).collect();
    let mut found: BTreeSet<ProjectivePoint> = BTreeSet::new();
    let mut one_dimensional = false;
    let mut certified_irrational = false;
    let mut residual_degree = 0usize;
    for chart in Chart::ALL {
        let ps: Vec<ZPoly2> = partials
            .iter()
            .map(|p| chart_poly(p, chart))
            .filter(|p| !p.is_zero())
            .collect();
        if ps.is_empty() {
            // all partials vanish identically: impossible for a nonzero
            // form of positive degree in characteristic zero
            return Err(Error::Internal("identically vanishing gradient".into()));
        }
        let mut g = ps[0].clone();
        for p in &ps[1..] {
            g = g.gcd(p);
        }
        if biv_nonconstant(&g) {
            // the partials share a curve component: 1-dimensional singular
            // locus; rational-point extraction is skipped on this chart
            one_dimensional = true;
            continue;
        }
        // u-candidates: common roots of all pairwise eliminations
        let mut cand: Option<ZPoly> = None;
        let mut all_pairs_degenerate = ps.len() >= 2;
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                let r = pair_candidates(&ps[i], &ps[j]);
                if r.is_zero() {
                    continue;
                }
                all_pairs_degenerate = false;
                cand = Some(match cand {
                    None => r,
                    Some(c) => c.gcd(&r),
                });
            }
        }
        if all_pairs_degenerate {
            // every pair shares a factor although the triple gcd is trivial;
            // cannot localize on this chart
            residual_degree += 1;
            continue;
        }
        let cand = match cand {
            Some(c) => c,
            // a single nonzero partial that is constant: no singular points
            // on this chart
            None => continue,
        };
        if cand.is_constant() {
            continue;
        }
        let (u_roots, u_residual) = strip_rational_roots(&cand);
        residual_degree += u_residual.deg_or_zero();
        for u0 in &u_roots {
            // back-substitute: common v-roots of all partials on u = u0
            let mut gv: Option<ZPoly> = None;
            for p in &ps {
                let s = eval_inner_cleared(p, u0);
                gv = Some(match gv {
                    None => s,
                    Some(g) => g.gcd(&s),
                });
            }
            let gv = gv.unwrap();
            if gv.is_zero() {
                // all partials vanish on the whole line u = u0, which the
                // constant triple gcd should have ruled out
                return Err(Error::Internal("unexpected singular line".into()));
            }
            if gv.is_constant() {
                continue; // spurious resultant root
            }
            let (v_roots, v_residual) = strip_rational_roots(&gv);
            if v_residual.deg_or_zero() >= 1 {
                certified_irrational = true;
            }
            for v0 in &v_roots {
                found.insert(chart.point(u0, v0));
            }
        }
    }
    let exclude: BTreeSet<&ProjectivePoint> = exclude.iter().collect();
    let (excluded_points, points): (Vec<_>, Vec<_>) =
        found.into_iter().partition(|p| exclude.contains(p));
    Ok(SingularityReport {
        points,
        excluded_points,
        one_dimensional,
        certified_irrational,
        residual_degree,
    })
}

/// A polynomial in u that vanishes at the u-coordinate of every common
/// affine root of a and b: the resultant in v, or the u-part of a v-free
/// input.  Zero only if the pair shares a v-dependent factor.
fn pair_candidates(a: &ZPoly2, b: &ZPoly2) -> ZPoly {
    if a.deg_or_zero() == 0 {
        return a.coeff(0);
    }
    if b.deg_or_zero() == 0 {
        return b.coeff(0);
    }
    resultant_prs(a, b)
}

fn biv_nonconstant(g: &ZPoly2) -> bool {
    g.deg_or_zero() >= 1 || g.coeff(0).deg_or_zero() >= 1
}

/// Substitute u = u0 into the inner variable, clearing denominators
/// uniformly: the result is a nonzero-multiple of the specialization.
fn eval_inner_cleared(p: &ZPoly2, u0: &BigRational) -> ZPoly {
    let d = p
        .coeffs()
        .iter()
        .map(|c| c.deg_or_zero())
        .max()
        .unwrap_or(0);
    let (num, den) = (u0.numer(), u0.denom());
    let out: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let mut acc = <BigInt as Zero>::zero();
            let mut pw_num = <BigInt as One>::one();
            let mut values = Vec::with_capacity(d + 1);
            for i in 0..=d {
                values.push(pw_num.clone());
                if i < d {
                    pw_num *= num;
                }
            }
            let mut pw_den = <BigInt as One>::one();
            for i in (0..=d).rev() {
                // values[i] = num^i; multiply by den^(d-i)
                acc += c.coeff(i) * &values[i] * &pw_den;
                pw_den *= den;
            }
            acc
        })
        .collect();
    ZPoly::from_coeffs(out)
}

/// Distinct rational roots together with the cofactor left after dividing
/// out each root to its full multiplicity.
pub(crate) fn strip_rational_roots(p: &ZPoly) -> (Vec<BigRational>, ZPoly) {
    let roots = rational_roots(p);
    let mut rest = p.clone();
    for r in &roots {
        // primitive linear factor den*x - num divides exactly (Gauss)
        let lin = ZPoly::from_coeffs(vec![-r.numer().clone(), r.denom().clone()]);
        while let Some(q) = rest.exact_div_poly(&lin) {
            rest = q;
        }
    }
    (roots, rest)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum NodeKind {
    Smooth,
    Node,
    NonNodeSingular,
}

/// Classify a rational point of the curve: smooth, an ordinary double point
/// (nondegenerate 2x2 Hessian of the dehomogenization), or a worse
/// singularity.
pub fn node_test(f: &HomogeneousForm, p: &ProjectivePoint) -> NodeKind {
    let grad: Vec<HomogeneousForm> = Var::ALL.iter().map(|&v| f.partial(v)).collect();
    if grad.iter().any(|g| !g.evaluate(p.coords()).is_zero()) {
        return NodeKind::Smooth;
    }
    // dehomogenize on the chart of the normalized coordinate; second
    // partials of the dehomogenization are second partials of the form
    let chart = Chart::of_point(p);
    let (ui, vi, _) = chart.axes();
    let fu = &grad[ui];
    let fuu = fu.partial(Var::ALL[ui]).evaluate(p.coords());
    let fuv = fu.partial(Var::ALL[vi]).evaluate(p.coords());
    let fvv = grad[vi].partial(Var::ALL[vi]).evaluate(p.coords());
    let det = &fuu * &fvv - &fuv * &fuv;
    if det.is_zero() {
        NodeKind::NonNodeSingular
    } else {
        NodeKind::Node
    }
}

/// Restrict f to `trials` random rational lines and squarefree-test each
/// restriction.  A repeated component of f forces a repeated factor on
/// every line, so `false` is certain; `true` is probabilistic (one-sided).
/// Lines have integer coefficients in [-10, 10] drawn from a seeded
/// generator for reproducibility.
pub fn is_reduced_on_random_lines(f: &HomogeneousForm, trials: u32, seed: u64) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Config("reducedness test needs a nonzero form".into()));
    }
    // clear denominators once: squarefreeness is scale-invariant
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut attempts = 0;
        let restriction = loop {
            attempts += 1;
            if attempts > 100 {
                return Err(Error::Internal(
                    "could not sample a line meeting the curve properly".into(),
                ));
            }
            let p: [i64; 3] = [(); 3].map(|_| rng.gen_range(-10..=10));
            let q: [i64; 3] = [(); 3].map(|_| rng.gen_range(-10..=10));
            // require genuinely distinct projective points
            let cross = [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ];
            if cross.iter().all(|&c| c == 0) {
                continue;
            }
            let g = restrict_to_line(f, p, q);
            if g.is_zero() {
                // the sampled line lies inside the curve; resample
                continue;
            }
            break g;
        };
        if restriction.deg_or_zero() >= 1 && !is_squarefree(&restriction) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// f(P + tQ) as an integer polynomial in t (after clearing the coefficient
/// denominators of f).
fn restrict_to_line(f: &HomogeneousForm, p: [i64; 3], q: [i64; 3]) -> ZPoly {
    use num_integer::Integer;
    let mut denom = <BigInt as One>::one();
    for (_, c) in f.terms() {
        denom = denom.lcm(c.denom());
    }
    let lines: [ZPoly; 3] = [0usize, 1, 2]
        .map(|i| ZPoly::from_coeffs(vec![BigInt::from(p[i]), BigInt::from(q[i])]));
    let mut acc = ZPoly::zero();
    for (e, c) in f.terms() {
        let int = (c * BigRational::from(denom.clone())).to_integer();
        let mut term = ZPoly::constant(int);
        for i in 0..3 {
            for _ in 0..e[i] {
                term = term.mul(&lines[i]);
            }
        }
        acc = Ring::add(&acc, &term);
    }
    acc
}
