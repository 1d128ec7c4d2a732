//! The cyclotomic field Q(ζ_N) with elements stored in the power basis
//! `1, ζ, …, ζ^{φ(N)−1}`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use smallvec::SmallVec;

use super::rational::Rational;
use crate::error::Error;

/// Integer polynomial, coefficients from low to high degree.
type IntPoly = Vec<i64>;

/// An element of Q(ζ_N), reduced modulo Φ_N.
///
/// The coefficient vector always has length exactly φ(N), so equality is
/// coefficientwise. Addition and negation need no field data and are
/// implemented directly; multiplication and inversion go through
/// [`CyclotomicField`].
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    coeffs: SmallVec<[Rational; 2]>,
}

impl Scalar {
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when only the constant coefficient can be nonzero.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        debug_assert_eq!(self.degree(), rhs.degree());
        Scalar { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        debug_assert_eq!(self.degree(), rhs.degree());
        Scalar { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { coeffs: self.coeffs.iter().map(Rational::neg).collect() }
    }

    pub fn add_assign(&mut self, rhs: &Scalar) {
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a = a.add(b);
            }
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Scalar {
        Scalar { coeffs: self.coeffs.iter().map(|a| a.mul(r)).collect() }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rational elements print as `p/q`; everything else as the coefficient
/// tuple `(c0, c1, …)` in the ζ-power basis.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

struct FieldInner {
    order: u32,
    phi: IntPoly,
    degree: usize,
    /// `reduction[k]` is ζ^k in the power basis, for `k < 2·degree − 1`.
    reduction: Vec<IntPoly>,
    /// ζ^k for `0 ≤ k < order`.
    powers: Vec<Scalar>,
}

/// Q(ζ_N) for a fixed N ≥ 2. Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct CyclotomicField {
    inner: Arc<FieldInner>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.order == other.inner.order
    }
}

impl Eq for CyclotomicField {}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.inner.order)
    }
}

/// Exact quotient of `num` by the monic polynomial `den`; `None` if the
/// remainder is nonzero.
fn divide_exact(num: &[i64], den: &[i64]) -> Option<IntPoly> {
    debug_assert_eq!(den.last(), Some(&1));
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return if rem.iter().all(|&c| c == 0) { Some(vec![0]) } else { None };
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
    }
    if rem.iter().all(|&c| c == 0) {
        Some(quot)
    } else {
        None
    }
}

/// Φ_n as the quotient of x^n − 1 by Φ_d over the proper divisors d of n.
pub fn cyclotomic_polynomial(n: u32) -> IntPoly {
    let mut cache: Vec<Option<IntPoly>> = vec![None; n as usize + 1];
    fn go(n: u32, cache: &mut Vec<Option<IntPoly>>) -> IntPoly {
        if let Some(p) = &cache[n as usize] {
            return p.clone();
        }
        let mut p = vec![0i64; n as usize + 1];
        p[0] = -1;
        p[n as usize] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                let phi_d = go(d, cache);
                p = divide_exact(&p, &phi_d).expect("cyclotomic factor divides x^n - 1");
            }
        }
        cache[n as usize] = Some(p.clone());
        p
    }
    go(n, &mut cache)
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Self, Error> {
        if order < 2 {
            return Err(Error::InvalidFieldOrder(order));
        }
        let phi = cyclotomic_polynomial(order);
        let degree = phi.len() - 1;
        // x^k mod Φ for k up to the largest product degree
        let span = (2 * degree - 1).max(order as usize);
        let mut reduction: Vec<IntPoly> = Vec::with_capacity(span);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..span {
            reduction.push(cur.clone());
            // multiply by x, then fold the x^degree term back with Φ monic
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] -= top * phi[j];
                }
            }
        }
        let powers = (0..order as usize)
            .map(|k| Scalar { coeffs: reduction[k].iter().map(|&c| Rational::from_integer(c)).collect() })
            .collect();
        Ok(CyclotomicField { inner: Arc::new(FieldInner { order, phi, degree, reduction, powers }) })
    }

    /// N, the order of the distinguished root of unity ζ.
    pub fn order(&self) -> u32 {
        self.inner.order
    }

    /// φ(N), the dimension of Q(ζ_N) over Q.
    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    /// Coefficients of Φ_N from the constant term up; monic.
    pub fn cyclotomic_poly(&self) -> &[i64] {
        &self.inner.phi
    }

    pub fn zero(&self) -> Scalar {
        Scalar { coeffs: (0..self.degree()).map(|_| Rational::zero()).collect() }
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> Scalar {
        let mut s = self.zero();
        s.coeffs[0] = r;
        s
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(n))
    }

    /// Builds an element from power-basis coefficients of any length,
    /// reducing higher powers of ζ modulo Φ_N.
    pub fn from_coeffs(&self, coeffs: &[Rational]) -> Scalar {
        let mut out = self.zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = self.zeta_pow(k as i64).scale_rational(c);
            out.add_assign(&term);
        }
        out
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(&self, k: i64) -> Scalar {
        let n = self.order() as i64;
        self.inner.powers[k.rem_euclid(n) as usize].clone()
    }

    /// q = ζ^a, rejecting exponents that do not give a primitive root.
    pub fn q_root(&self, a: i64) -> Result<Scalar, Error> {
        let n = self.order() as i64;
        if a.gcd(&n) != 1 {
            return Err(Error::NotPrimitiveRoot { exponent: a, order: self.order() });
        }
        Ok(self.zeta_pow(a))
    }

    /// [n]_q = 1 + q + … + q^{n−1}.
    pub fn q_integer(&self, q: &Scalar, n: usize) -> Scalar {
        let mut acc = self.zero();
        let mut pow = self.one();
        for _ in 0..n {
            acc.add_assign(&pow);
            pow = self.mul(&pow, q);
        }
        acc
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if b.is_rational() {
            return a.scale_rational(&b.coeffs[0]);
        }
        if a.is_rational() {
            return b.scale_rational(&a.coeffs[0]);
        }
        let d = self.degree();
        let mut prod: Vec<Rational> = vec![Rational::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = prod[i + j].add(&x.mul(y));
                }
            }
        }
        let mut out = self.zero();
        for (k, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, &r) in out.coeffs.iter_mut().zip(&self.inner.reduction[k]) {
                if r != 0 {
                    *slot = slot.add(&c.mul(&Rational::from_integer(r)));
                }
            }
        }
        out
    }

    /// `acc += a·b`
    pub fn mul_add_assign(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        if a.is_rational() && b.is_rational() {
            let p = a.coeffs[0].mul(&b.coeffs[0]);
            acc.coeffs[0] = acc.coeffs[0].add(&p);
        } else {
            acc.add_assign(&self.mul(a, b));
        }
    }

    pub fn pow(&self, a: &Scalar, mut e: u32) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        if a.is_rational() {
            return Some(self.from_rational(a.coeffs[0].recip()));
        }
        // Solve (multiplication-by-a) · x = 1 over Q.
        let d = self.degree();
        let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::zero(); d + 1]; d];
        for j in 0..d {
            let col = self.mul(a, &self.zeta_pow(j as i64));
            for i in 0..d {
                rows[i][j] = col.coeffs[i].clone();
            }
        }
        rows[0][d] = Rational::one();
        for c in 0..d {
            let p = (c..d).find(|&r| !rows[r][c].is_zero())?;
            rows.swap(c, p);
            let piv = rows[c][c].recip();
            for x in rows[c].iter_mut() {
                *x = x.mul(&piv);
            }
            for r in 0..d {
                if r != c && !rows[r][c].is_zero() {
                    let f = rows[r][c].clone();
                    let pivot_row = rows[c].clone();
                    for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                        *x = x.sub(&f.mul(y));
                    }
                }
            }
        }
        Some(Scalar { coeffs: rows.iter().map(|r| r[d].clone()).collect() })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|inv| self.mul(a, &inv))
    }

    /// Checks that a scalar has the coefficient length of this field.
    pub fn owns(&self, s: &Scalar) -> bool {
        s.degree() == self.degree()
    }
}
