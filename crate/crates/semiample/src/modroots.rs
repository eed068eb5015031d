//! Rational-root finding for integer polynomials via modular scanning.
//!
//! Roots are collected mod two primes near 10^5, lifted by CRT, and turned
//! into rational candidates by lattice (continued-fraction) reconstruction;
//! every candidate is then verified exactly over Z, so no false positives
//! are possible.  The method is complete for roots a/b with |a|, |b| below
//! roughly sqrt(p1*p2/2) ~ 7*10^4, which covers everything this crate
//! produces; degree <= 2 polynomials are solved exactly instead.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::poly::ZPoly;

const PRIMES: [u64; 6] = [99991, 100003, 100019, 100043, 99989, 100057];

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(a: &BigInt, p: u64) -> u64 {
    let m = a % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().unwrap()
}

/// Reduce an integer polynomial mod p (dense, ascending, trimmed).
pub fn reduce_mod(poly: &ZPoly, p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = poly.coeffs().iter().map(|c| bigint_mod(c, p)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn eval_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = (mul_mod(acc, x, p) + c) % p;
    }
    acc
}

/// All roots of a nonzero polynomial mod p, by exhaustive scan.
fn roots_mod(coeffs: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for x in 0..p {
        if eval_mod(coeffs, x, p) == 0 {
            out.push(x);
        }
    }
    out
}

/// Reconstruct a rational a/b = u (mod m) with |a|, b <= sqrt(m/2), via the
/// extended Euclidean algorithm on (m, u).
fn rational_reconstruct(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound_sq = m / BigInt::from(2);
    let (mut r0, mut r1) = (m.clone(), u.clone());
    let (mut t0, mut t1) = (BigInt::from(0), BigInt::from(1));
    while &r1 * &r1 > bound_sq {
        if Zero::is_zero(&r1) {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if Zero::is_zero(&t1) || &t1 * &t1 > bound_sq {
        return None;
    }
    if t1.is_negative() {
        r1 = -r1;
        t1 = -t1;
    }
    Some(BigRational::new(r1, t1))
}

/// Exact check that x is a root, via b^deg clearing of denominators.
pub fn is_rational_root(poly: &ZPoly, x: &BigRational) -> bool {
    let d = match poly.degree() {
        Some(d) => d,
        None => return true,
    };
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::from(0);
    let mut bpow = BigInt::from(1);
    // sum c_i a^i b^(d-i), running Horner from the top for a-powers
    for i in (0..=d).rev() {
        acc = acc * a + poly.coeff(i) * &bpow;
        if i > 0 {
            bpow *= b;
        }
    }
    Zero::is_zero(&acc)
}

fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// All rational roots of an integer polynomial, each verified exactly.
/// Sorted and deduplicated.  Complete up to the reconstruction height bound
/// (~7*10^4 in numerator and denominator) for degree >= 3; exact for
/// degree <= 2.  The zero polynomial is rejected by the caller.
pub fn rational_roots(poly: &ZPoly) -> Vec<BigRational> {
    let mut p = poly.clone();
    let mut roots: Vec<BigRational> = Vec::new();
    // factor out powers of x first
    let tz = p.trailing_zeros();
    if tz > 0 {
        roots.push(BigRational::from(BigInt::from(0)));
        p = p.div_xn(tz);
    }
    match p.degree() {
        None | Some(0) => {}
        Some(1) => {
            roots.push(BigRational::new(-p.coeff(0), p.coeff(1)));
        }
        Some(2) => {
            let (a, b, c) = (p.coeff(2), p.coeff(1), p.coeff(0));
            let disc = &b * &b - BigInt::from(4) * &a * &c;
            if let Some(s) = integer_sqrt_exact(&disc) {
                let two_a = BigInt::from(2) * &a;
                roots.push(BigRational::new(-&b + &s, two_a.clone()));
                roots.push(BigRational::new(-&b - &s, two_a));
            }
        }
        Some(_) => {
            roots.extend(rational_roots_modular(&p));
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn rational_roots_modular(p: &ZPoly) -> Vec<BigRational> {
    // pick two primes where the reduction keeps full degree (so no roots
    // are lost to a vanishing leading coefficient)
    let deg = p.deg_or_zero();
    let mut chosen: Vec<(u64, Vec<u64>)> = Vec::new();
    for &q in PRIMES.iter() {
        let red = reduce_mod(p, q);
        if red.len() == deg + 1 {
            chosen.push((q, roots_mod(&red, q)));
            if chosen.len() == 2 {
                break;
            }
        }
    }
    if chosen.len() < 2 {
        // leading coefficient divisible by all sample primes: fall back to
        // the classical p/q search over divisors (coefficients are small
        // enough in practice that this branch is never hot)
        return rational_roots_divisors(p);
    }
    let (p1, roots1) = &chosen[0];
    let (p2, roots2) = &chosen[1];
    let m1 = BigInt::from(*p1);
    let m2 = BigInt::from(*p2);
    let m12 = &m1 * &m2;
    let inv = BigInt::from(inv_mod(*p1 % *p2, *p2));
    let mut candidates: Vec<BigRational> = Vec::new();
    for &u1 in roots1 {
        // single-prime reconstruction catches tiny roots cheaply
        if let Some(c) = rational_reconstruct(&BigInt::from(u1), &m1) {
            candidates.push(c);
        }
        for &u2 in roots2 {
            // CRT lift to mod p1*p2
            let diff = BigInt::from((u2 + p2 - u1 % p2) % p2);
            let u = BigInt::from(u1) + &m1 * ((diff * &inv) % &m2);
            if let Some(c) = rational_reconstruct(&u, &m12) {
                candidates.push(c);
            }
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates
        .into_iter()
        .filter(|c| is_rational_root(p, c))
        .collect()
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if Zero::is_zero(&(&n % &d)) {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

fn rational_roots_divisors(p: &ZPoly) -> Vec<BigRational> {
    let mut out = Vec::new();
    let c0 = p.coeff(0);
    let lc = p.lc();
    for num in divisors_of(&c0) {
        for den in divisors_of(&lc) {
            for sgn in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(sgn) * &num, den.clone());
                if is_rational_root(p, &cand) {
                    out.push(cand);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{zpoly, Ring};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn roots_of_factored_polynomial() {
        // (2x - 3)(x + 5)(3x + 1)(x^2 + 1)
        let p = zpoly(&[-3, 2])
            .mul(&zpoly(&[5, 1]))
            .mul(&zpoly(&[1, 3]))
            .mul(&zpoly(&[1, 0, 1]));
        let roots = rational_roots(&p);
        assert_eq!(roots, vec![rat(-5, 1), rat(-1, 3), rat(3, 2)]);
    }

    #[test]
    fn zero_and_quadratic_roots() {
        // x^2 (x^2 - 2) (4x^2 - 9)
        let p = zpoly(&[0, 0, 1])
            .mul(&zpoly(&[-2, 0, 1]))
            .mul(&zpoly(&[-9, 0, 4]));
        let roots = rational_roots(&p);
        assert_eq!(roots, vec![rat(-3, 2), rat(0, 1), rat(3, 2)]);
    }

    #[test]
    fn no_rational_roots() {
        assert!(rational_roots(&zpoly(&[1, 0, 1])).is_empty());
        assert!(rational_roots(&zpoly(&[-2, 0, 1])).is_empty());
        // x^3 - 2
        assert!(rational_roots(&zpoly(&[-2, 0, 0, 1])).is_empty());
    }

    #[test]
    fn large_height_root_within_bound() {
        // root 12345/6789 (coprime? 12345 = 3*5*823, 6789 = 3*31*73 -> reduce)
        let p = zpoly(&[-12345, 6789]).mul(&zpoly(&[1, 0, 0, 1, 1]));
        let roots = rational_roots(&p);
        assert!(roots.contains(&rat(12345, 6789)));
    }

    #[test]
    fn exact_root_check() {
        let p = zpoly(&[-3, 2]); // 2x - 3
        assert!(is_rational_root(&p, &rat(3, 2)));
        assert!(!is_rational_root(&p, &rat(2, 3)));
    }
}
