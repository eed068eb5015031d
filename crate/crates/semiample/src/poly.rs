//! Generic dense polynomials over a commutative ring, built up recursively:
//! `Polynomial<BigInt>` is Z[x], `Polynomial<Polynomial<BigInt>>` is Z[x][y],
//! and so on.  This is enough to run the resultant eliminations needed for
//! pencils of plane curves entirely in exact integer arithmetic.
//!
//! Gcds use the primitive polynomial remainder sequence; resultants are
//! Sylvester-matrix determinants computed by fraction-free (Bareiss)
//! elimination, so every intermediate division is exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Minimal commutative-ring interface.  `exact_div` must return `None`
/// whenever the division is not exact; callers rely on this to detect
/// non-divisibility rather than silently truncating.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn exact_div(&self, other: &Self) -> Option<Self>;
}

/// Rings with a gcd (up to units).  Needed for contents and primitive parts.
pub trait GcdRing: Ring {
    fn gcd(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

impl GcdRing for BigInt {
    fn gcd(&self, other: &Self) -> Self {
        num_integer::Integer::gcd(self, other)
    }
}

/// Dense univariate polynomial, coefficients in ascending degree order with
/// no trailing zeros (the zero polynomial has an empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<R: Ring> {
    coeffs: Vec<R>,
}

pub type ZPoly = Polynomial<BigInt>;
/// Z[inner][outer]: coefficients of the outer variable live in Z[inner].
pub type ZPoly2 = Polynomial<ZPoly>;
pub type ZPoly3 = Polynomial<ZPoly2>;

impl<R: Ring> Polynomial<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial c * x^n.
    pub fn monomial(c: R, n: usize) -> Self {
        let mut coeffs = vec![R::zero(); n];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn coeff(&self, n: usize) -> R {
        self.coeffs.get(n).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|a| a.mul(c))
    }

    pub fn derivative(&self) -> Self {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            // multiply c by the integer i through repeated doubling
            let mut acc = R::zero();
            let mut base = c.clone();
            let mut n = i;
            while n > 0 {
                if n & 1 == 1 {
                    acc = acc.add(&base);
                }
                base = base.add(&base);
                n >>= 1;
            }
            out.push(acc);
        }
        Polynomial::from_coeffs(out)
    }

    pub fn mul_xn(&self, n: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Largest n with x^n dividing self (0 for the zero polynomial).
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn div_xn(&self, n: usize) -> Self {
        Polynomial::from_coeffs(self.coeffs.iter().skip(n).cloned().collect())
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with
    /// deg r < deg b.  Panics if b is zero.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo_rem by zero polynomial");
        let mut r = self.clone();
        let lb = b.lc();
        let mut steps = match r.degree() {
            Some(dr) if dr >= db => dr - db + 1,
            _ => 0,
        };
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lead = r.lc();
            r = r.scale(&lb).sub_poly(&b.mul_xn(dr - db).scale(&lead));
            steps -= 1;
            if let Some(d2) = r.degree() {
                debug_assert!(d2 < dr);
            }
        }
        // keep the pseudo-remainder convention exact: pad remaining powers
        for _ in 0..steps {
            r = r.scale(&lb);
        }
        r
    }

    fn sub_poly(&self, other: &Self) -> Self {
        Ring::sub(self, other)
    }

    /// Exact division; `None` if other does not divide self in R[x].
    pub fn exact_div_poly(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = other.lc();
        let mut r = self.clone();
        let mut q = vec![R::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().exact_div(&lb)?;
            q[dr - db] = c.clone();
            r = r.sub_poly(&other.mul_xn(dr - db).scale(&c));
            if r.is_zero() {
                return Some(Polynomial::from_coeffs(q));
            }
        }
        Some(Polynomial::from_coeffs(q))
    }
}

impl<R: GcdRing> Polynomial<R> {
    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        self.map_coeffs(|a| a.exact_div(&c).expect("content must divide"))
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Polynomial::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&other.coeff(i)));
        }
        Polynomial::from_coeffs(out)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::from_coeffs(out)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.exact_div_poly(other)
    }
}

impl<R: GcdRing> GcdRing for Polynomial<R> {
    /// Primitive PRS gcd; the result is primitive times gcd of the contents.
    /// Determined only up to units, like any gcd over a ring.
    fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg_or_zero() < b.deg_or_zero() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_zero() {
                return a.scale(&cont);
            }
            if b.is_constant() {
                // primitive constant: the primitive gcd is a unit
                return Polynomial::constant(cont);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
    }
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).  All
/// divisions are exact in R; row swaps flip the sign.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division must be exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Resultant of a and b with respect to the polynomial variable, as the
/// determinant of the Sylvester matrix.  Res lives in the coefficient ring.
pub fn resultant<R: Ring>(a: &Polynomial<R>, b: &Polynomial<R>) -> R {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        // Res(0, g) is 0 unless g is a nonzero constant (empty matrix).
        (None, Some(0)) | (Some(0), None) => return R::one(),
        _ => return R::zero(),
    };
    resultant_with_degrees(a, b, da, db)
}

/// Sylvester resultant with explicitly declared degrees.  When `da`/`db`
/// exceed the actual degrees, this computes the resultant of the inputs
/// viewed as binary forms of those degrees dehomogenized at one variable --
/// which also accounts for common roots "at infinity" (vanishing leading
/// coefficients).  Used for forms restricted to a line.
pub fn resultant_with_degrees<R: Ring>(
    a: &Polynomial<R>,
    b: &Polynomial<R>,
    da: usize,
    db: usize,
) -> R {
    assert!(da >= a.deg_or_zero() || a.is_zero());
    assert!(db >= b.deg_or_zero() || b.is_zero());
    if da == 0 && db == 0 {
        return R::one();
    }
    let n = da + db;
    let mut m = vec![vec![R::zero(); n]; n];
    // db rows of a's coefficients (highest first), then da rows of b's
    for row in 0..db {
        for i in 0..=da {
            m[row][row + i] = a.coeff(da - i);
        }
    }
    for row in 0..da {
        for i in 0..=db {
            m[db + row][row + i] = b.coeff(db - i);
        }
    }
    bareiss_det(m)
}

/// Resultant via a primitive pseudo-remainder sequence.  Agrees exactly
/// with the Sylvester determinant (`resultant`) but is much faster when
/// the coefficients are themselves polynomials, because remainders are
/// kept primitive instead of letting Bareiss entries grow.
///
/// The recursion uses Res(A,B) = (−1)^{mn} Res(B,A) together with
/// Res(B, prem(A,B)) = lc(B)^{deg r − m + n(m−n+1)} · Res(B, A)
/// and Res(B, c·R) = c^{deg B} · Res(B, R); all divisions are exact.
pub fn resultant_prs<R: GcdRing>(a: &Polynomial<R>, b: &Polynomial<R>) -> R {
    let (da, db) = match (a.degree(), b.degree()) {
        (Some(da), Some(db)) => (da, db),
        (None, Some(0)) | (Some(0), None) => return R::one(),
        _ => return R::zero(),
    };
    if da == 0 && db == 0 {
        return R::one();
    }
    if db == 0 {
        return pow(&b.lc(), da);
    }
    if da == 0 {
        return pow(&a.lc(), db);
    }
    // pull contents out first: Res(ca·A', cb·B') = ca^db · cb^da · Res(A', B')
    let ca = a.content();
    let cb = b.content();
    let ap = a.primitive_part();
    let bp = b.primitive_part();
    let core = if da >= db {
        res_rec(&ap, &bp)
    } else {
        let r = res_rec(&bp, &ap);
        if da * db % 2 == 1 {
            r.neg()
        } else {
            r
        }
    };
    pow(&ca, db).mul(&pow(&cb, da)).mul(&core)
}

fn pow<R: Ring>(x: &R, mut e: usize) -> R {
    let mut acc = R::one();
    let mut base = x.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base);
        }
        base = base.mul(&base);
        e >>= 1;
    }
    acc
}

/// Res(a, b) for deg a >= deg b >= 1.
fn res_rec<R: GcdRing>(a: &Polynomial<R>, b: &Polynomial<R>) -> R {
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    debug_assert!(m >= n && n >= 1);
    let r = a.pseudo_rem(b);
    if r.is_zero() {
        return R::zero();
    }
    let dr = r.degree().unwrap();
    let ct = r.content();
    let rp = r.primitive_part();
    // Res(b, r) = ct^n · Res(b, r/ct)
    let sub = if dr == 0 {
        // Res(b, const c) = c^n
        pow(&rp.lc(), n)
    } else {
        res_rec(b, &rp)
    };
    let num = pow(&ct, n).mul(&sub);
    let e = n * (m - n + 1) + dr - m;
    let val = num
        .exact_div(&pow(&b.lc(), e))
        .expect("resultant PRS division must be exact");
    if m * n % 2 == 1 {
        val.neg()
    } else {
        val
    }
}

/// Discriminant-style squarefreeness test: p (nonzero) is squarefree over
/// the fraction field iff gcd(p, p') is constant.
pub fn is_squarefree(p: &ZPoly) -> bool {
    match p.degree() {
        None => false,
        Some(0) => true,
        Some(_) => p.gcd(&p.derivative()).is_constant(),
    }
}

/// Normalize the sign of an integer polynomial so its leading coefficient
/// is positive.  Handy for comparing gcds in tests.
pub fn normalize_sign(p: &ZPoly) -> ZPoly {
    if p.lc().is_negative() {
        Ring::neg(p)
    } else {
        p.clone()
    }
}

pub fn zpoly(coeffs: &[i64]) -> ZPoly {
    Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}
