//! The decision procedures: per-divisor semiampleness, the global
//! "every nef divisor is semiample" classification, and block construction
//! on negative-definite curve configurations.
//!
//! The logic follows the trichotomy on the number of blown-up points:
//! for r ≤ 8 the anticanonical class is big and nothing can fail; for
//! r = 9 the group Γ is cyclic, generated by the restriction of −K; for
//! r ≥ 10 the verdict is the torsion test on the restrictions of a basis
//! of ⟨−K⟩⊥.  A nef class pairing positively with −K is always semiample;
//! one pairing to zero is semiample exactly when its restriction to the
//! cubic is torsion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::rational_to_string;
use crate::piclattice::{
    anticanonical_class, enumerate_negative_classes, intersect, is_negative_definite,
    perp_basis, DivisorClass, GramMatrix,
};
use crate::restriction::{
    gamma_generators, is_torsion_class, restrict, ConcreteBlowup, RestrictedClass, SurfaceModel,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Answer {
    #[serde(rename = "yes")]
    Yes,
    #[serde(rename = "no")]
    No,
    #[serde(rename = "conditional")]
    ConditionalOnNef,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Branch {
    /// −K·N > 0: big anticanonical pairing forces semiampleness.
    BigAnticanonicalPairing,
    /// Torsion test on restrictions to the anticanonical cubic.
    TorsionCriterion,
    /// −K not effective but −eK effective for some e ≥ 2: always semiample.
    NotEffectiveAnticanonical,
    /// r ≤ 8: −K is big, the orthogonal part is negative definite.
    PositiveDefiniteE,
    /// r = 9: Γ is cyclic, generated by the restriction of −K.
    CyclicGamma,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Witness {
    /// Preimage class in Pic(X), when one is attached to the check.
    pub divisor: Option<DivisorClass>,
    pub restricted: RestrictedClass,
    pub torsion: bool,
}

#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    pub branch: Branch,
    pub witnesses: Vec<Witness>,
}

/// How the caller vouches for nefness of the class under test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NefAssumption {
    /// Caller asserts the class is nef; verdicts are unconditional.
    Asserted,
    /// Check N against the negative classes enumerated up to this degree
    /// bound (necessary, not sufficient); verdicts become conditional.
    CheckedUpTo(i64),
}

/// Is the nef class N semiample?  −K·N > 0 is an immediate yes; −K·N = 0
/// reduces to the torsion test on the restriction; −K·N < 0 contradicts
/// nefness against the effective anticanonical curve.
pub fn is_semiample(
    s: &ConcreteBlowup,
    n: &DivisorClass,
    nef: NefAssumption,
) -> Result<Verdict> {
    let r = s.r();
    let mk = anticanonical_class(r);
    let answer_if_ok = match nef {
        NefAssumption::Asserted => Answer::Yes,
        NefAssumption::CheckedUpTo(bound) => {
            let curves = enumerate_negative_classes(r, bound);
            if !is_nef_against(n, &curves)? {
                return Err(Error::NotNef(format!(
                    "class pairs negatively with an enumerated negative class \
                     (bound {bound}) or has negative self-intersection"
                )));
            }
            Answer::ConditionalOnNef
        }
    };
    let pairing = intersect(n, &mk)?;
    if pairing < 0 {
        if s.antican_effective() {
            return Err(Error::NotNef(format!(
                "-K.N = {pairing} < 0 contradicts nefness against the effective \
                 anticanonical curve"
            )));
        }
        return Err(Error::Config(
            "-K.N < 0 with -K not effective is outside the decision procedure".into(),
        ));
    }
    if pairing > 0 {
        return Ok(Verdict {
            answer: answer_if_ok,
            branch: Branch::BigAnticanonicalPairing,
            witnesses: vec![],
        });
    }
    let rc = restrict(s, n)?;
    let torsion = is_torsion_class(s, &rc)?;
    let witness = Witness {
        divisor: Some(n.clone()),
        restricted: rc,
        torsion,
    };
    Ok(Verdict {
        answer: if torsion { answer_if_ok } else { Answer::No },
        branch: Branch::TorsionCriterion,
        witnesses: vec![witness],
    })
}

/// The global question: is every nef divisor on X semiample?
pub fn classify_surface(s: &SurfaceModel) -> Result<Verdict> {
    let c = match s {
        SurfaceModel::Concrete(c) => c,
        SurfaceModel::Abstract(_) => {
            return Err(Error::UnsupportedKind(
                "classification needs a concrete blow-up; an abstract configuration \
                 carries no point data for the torsion test"
                    .into(),
            ))
        }
    };
    let r = c.r();
    if !c.antican_effective() {
        // -eK effective for some e >= 2: every nef divisor is semiample
        return Ok(Verdict {
            answer: Answer::Yes,
            branch: Branch::NotEffectiveAnticanonical,
            witnesses: vec![],
        });
    }
    if r <= 8 {
        return Ok(Verdict {
            answer: Answer::Yes,
            branch: Branch::PositiveDefiniteE,
            witnesses: vec![],
        });
    }
    if r == 9 {
        let mk = anticanonical_class(r);
        let rc = restrict(c, &mk)?;
        let torsion = is_torsion_class(c, &rc)?;
        // in the non-torsion case -K spans the unique nef ray that fails
        return Ok(Verdict {
            answer: if torsion { Answer::Yes } else { Answer::No },
            branch: Branch::CyclicGamma,
            witnesses: vec![Witness {
                divisor: Some(mk),
                restricted: rc,
                torsion,
            }],
        });
    }
    // r >= 10: torsion test over a basis of <-K>^perp
    let basis = perp_basis(&[anticanonical_class(r)], r)?;
    let generators = gamma_generators(c)?;
    debug_assert_eq!(basis.vectors.len(), generators.len());
    let mut witnesses = Vec::new();
    let mut all_torsion = true;
    for (v, rc) in basis.vectors.iter().zip(generators) {
        let torsion = is_torsion_class(c, &rc)?;
        all_torsion &= torsion;
        witnesses.push(Witness {
            divisor: Some(v.clone()),
            restricted: rc,
            torsion,
        });
    }
    Ok(Verdict {
        answer: if all_torsion { Answer::Yes } else { Answer::No },
        branch: Branch::TorsionCriterion,
        witnesses,
    })
}

/// Bounded nefness surrogate: N·C ≥ 0 against every supplied class and
/// N² ≥ 0.  Necessary relative to the list, never a proof of nefness.
pub fn is_nef_against(n: &DivisorClass, curves: &[DivisorClass]) -> Result<bool> {
    if intersect(n, n)? < 0 {
        return Ok(false);
    }
    for c in curves {
        if intersect(n, c)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An effective divisor B = Σ mᵢCᵢ on a negative-definite configuration
/// with B·Cᵢ < min{0, −K·Cᵢ} for every component.
#[derive(Clone, PartialEq, Debug)]
pub struct BlockSolution {
    pub multiplicities: Vec<BigInt>,
    /// B·Cᵢ − min{0, −K·Cᵢ}, all strictly negative.
    pub slacks: Vec<BigRational>,
}

impl Serialize for BlockSolution {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = ser.serialize_map(Some(2))?;
        m.serialize_entry(
            "multiplicities",
            &self
                .multiplicities
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>(),
        )?;
        m.serialize_entry(
            "slacks",
            &self
                .slacks
                .iter()
                .map(rational_to_string)
                .collect::<Vec<_>>(),
        )?;
        m.end()
    }
}

/// Find a block on the configuration (G, k) with kᵢ = −K·Cᵢ: solve
/// G·m = v with vᵢ = min{0, kᵢ} − 1 per connected component of the dual
/// graph, scale to integers, and re-verify every strict inequality.
/// Positivity of m is guaranteed by inverse-positivity of −G (negative
/// definite with non-negative off-diagonal entries is the M-matrix case),
/// but is asserted rather than trusted.
pub fn find_block(g: &GramMatrix, k_degrees: &[i64]) -> Result<BlockSolution> {
    let n = g.size();
    if k_degrees.len() != n {
        return Err(Error::Dimension(format!(
            "{} K-degrees for a {n}x{n} Gram matrix",
            k_degrees.len()
        )));
    }
    if !is_negative_definite(g) {
        return Err(Error::Config(
            "block construction requires a negative-definite Gram matrix".into(),
        ));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && g.entries[i][j] < 0 {
                return Err(Error::Config(
                    "distinct curves must meet non-negatively".into(),
                ));
            }
        }
    }
    // connected components of the dual graph
    let mut comp = vec![usize::MAX; n];
    let mut ncomp = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            if comp[i] != usize::MAX {
                continue;
            }
            comp[i] = ncomp;
            for j in 0..n {
                if j != i && g.entries[i][j] != 0 && comp[j] == usize::MAX {
                    stack.push(j);
                }
            }
        }
        ncomp += 1;
    }
    let mut m = vec![BigRational::zero(); n];
    for c in 0..ncomp {
        let idx: Vec<usize> = (0..n).filter(|&i| comp[i] == c).collect();
        let a: Vec<Vec<BigRational>> = idx
            .iter()
            .map(|&i| {
                idx.iter()
                    .map(|&j| BigRational::from(BigInt::from(g.entries[i][j])))
                    .collect()
            })
            .collect();
        let v: Vec<BigRational> = idx
            .iter()
            .map(|&i| BigRational::from(BigInt::from(k_degrees[i].min(0) - 1)))
            .collect();
        let sol = solve_linear(a, v).ok_or_else(|| {
            Error::Internal("negative-definite Gram block is singular".into())
        })?;
        for (&i, x) in idx.iter().zip(sol) {
            if !x.is_positive() {
                return Err(Error::Internal(format!(
                    "solved multiplicity {} for component {} is not positive",
                    rational_to_string(&x),
                    i
                )));
            }
            m[i] = x;
        }
    }
    // scale to a common integer multiple (scaling by λ ≥ 1 preserves the
    // strict inequalities since the targets are ≤ min{0, kᵢ} − 1)
    let mut lcm = BigInt::from(1);
    for x in &m {
        lcm = num_integer::Integer::lcm(&lcm, x.denom());
    }
    let multiplicities: Vec<BigInt> = m
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    // post-hoc verification by direct Gram multiplication
    let mut slacks = Vec::with_capacity(n);
    for i in 0..n {
        let mut bd = BigInt::zero();
        for j in 0..n {
            bd += BigInt::from(g.entries[i][j]) * &multiplicities[j];
        }
        let slack =
            BigRational::from(bd - BigInt::from(k_degrees[i].min(0)));
        if !slack.is_negative() {
            return Err(Error::Internal(format!(
                "block inequality fails at component {i}"
            )));
        }
        slacks.push(slack);
    }
    Ok(BlockSolution {
        multiplicities,
        slacks,
    })
}

/// Solve A·x = b by Gaussian elimination with exact rationals; `None` if A
/// is singular.
fn solve_linear(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = a.len();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, pivot);
        b.swap(k, pivot);
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
            let t = &f * &b[k];
            b[i] -= t;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = b[k].clone();
        for j in k + 1..n {
            acc -= &a[k][j] * &x[j];
        }
        x[k] = acc / &a[k][k];
    }
    Some(x)
}
