//! Dense univariate polynomials over a GCD domain.
//!
//! Nesting `UPoly<UPoly<BigInt>>` gives ℤ[q][u], which is all the
//! coefficient field needs to reduce fractions to lowest terms. GCDs use the
//! primitive pseudo-remainder sequence, so no field of fractions is ever
//! formed and coefficients stay integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// The operations the gcd recursion needs from a coefficient ring.
pub(crate) trait GcdDomain: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(self / other)` when the division is exact.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    /// A gcd with non-negative leading coefficient.
    fn gcd(&self, other: &Self) -> Self;
    /// Whether the leading coefficient is negative.
    fn is_negative(&self) -> bool;
    /// Image in `F_p`, evaluating any inner variable at `r`.
    fn eval_mod(&self, r: u64) -> u64;
}

/// The Mersenne prime `2^61 - 1`.
const P: u64 = (1 << 61) - 1;
/// Evaluation point for the inner variable.
const POINT: u64 = 1_000_003;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    acc
}

/// Degree of the gcd of two polynomials over `F_p`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), P - 2);
        while a.len() >= b.len() {
            let c = mul_mod(*a.last().unwrap(), inv);
            let off = a.len() - b.len();
            for (i, &bi) in b.iter().enumerate() {
                a[off + i] = (a[off + i] + P - mul_mod(c, bi)) % P;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

impl GcdDomain for BigInt {
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
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (quot, rem) = self.div_rem(other);
        Zero::is_zero(&rem).then_some(quot)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn eval_mod(&self, _: u64) -> u64 {
        let r = self % P;
        let r = if Signed::is_negative(&r) { r + P } else { r };
        r.try_into().expect("reduced below p")
    }
}

/// Coefficients in ascending degree order, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly<R> {
    pub(crate) coeffs: Vec<R>,
}

impl<R: GcdDomain> UPoly<R> {
    pub(crate) fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    fn constant(c: R) -> Self {
        UPoly::new(vec![c])
    }

    /// Degree; the zero polynomial reports `None`.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    fn scale(&self, c: &R) -> Self {
        UPoly::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    fn shifted_scale(&self, c: &R, shift: usize) -> Self {
        let mut coeffs = vec![R::zero(); shift];
        coeffs.extend(self.coeffs.iter().map(|x| x.mul(c)));
        UPoly::new(coeffs)
    }

    fn div_scalar(&self, c: &R) -> Option<Self> {
        let coeffs = self.coeffs.iter().map(|x| x.exact_div(c)).collect::<Option<Vec<_>>>()?;
        Some(UPoly::new(coeffs))
    }

    /// Gcd of the coefficients, signed like the leading coefficient.
    fn content(&self) -> R {
        let g = self.content_with(R::zero());
        if GcdDomain::is_negative(self) {
            g.neg()
        } else {
            g
        }
    }

    /// Gcd of `seed` and all coefficients, with non-negative leading
    /// coefficient.
    fn content_with(&self, seed: R) -> R {
        let one = R::one();
        let mut g = R::zero().gcd(&seed);
        for c in &self.coeffs {
            if g == one {
                break;
            }
            g = g.gcd(c);
        }
        g
    }

    fn primitive_part(&self) -> Self {
        if GcdDomain::is_zero(self) {
            return self.clone();
        }
        let c = self.content();
        self.div_scalar(&c).expect("content divides every coefficient")
    }

    fn image(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.eval_mod(POINT)).collect()
    }

    /// `lead(b)^(deg a - deg b + 1) * a mod b`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lead().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            r = r.scale(&lb).sub(&b.shifted_scale(&lr, dr - db));
        }
        r
    }
}

impl<R: GcdDomain> GcdDomain for UPoly<R> {
    fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    fn one() -> Self {
        UPoly::constant(R::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = R::zero();
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = other.coeffs.get(i).unwrap_or(&zero);
                    a.add(b)
                })
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if GcdDomain::is_zero(self) || GcdDomain::is_zero(other) {
            return GcdDomain::zero();
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
        UPoly::new(out)
    }

    fn neg(&self) -> Self {
        UPoly { coeffs: self.coeffs.iter().map(R::neg).collect() }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let lb = other.lead().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![R::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = rem.degree() {
            if dr < db {
                return None;
            }
            let c = rem.lead().unwrap().exact_div(lb)?;
            rem = rem.sub(&other.shifted_scale(&c, dr - db));
            quot[dr - db] = c;
        }
        Some(UPoly::new(quot))
    }

    fn gcd(&self, other: &Self) -> Self {
        if GcdDomain::is_zero(self) {
            return if GcdDomain::is_negative(other) { other.neg() } else { other.clone() };
        }
        if GcdDomain::is_zero(other) {
            return if GcdDomain::is_negative(self) { self.neg() } else { self.clone() };
        }
        for (x, y) in [(self, other), (other, self)] {
            if x.degree() == Some(0) {
                return UPoly::constant(y.content_with(x.coeffs[0].clone()));
            }
        }
        let (ca, cb) = (self.content(), other.content());
        let content = ca.gcd(&cb);
        let mut a = self.div_scalar(&ca).expect("content divides");
        let mut b = other.div_scalar(&cb).expect("content divides");
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        // A constant gcd of the images forces a constant gcd, provided the
        // leading coefficients survive the reduction.
        let (ia, ib) = (a.image(), b.image());
        if ia.last() != Some(&0) && ib.last() != Some(&0) && gcd_degree_mod(ia, ib) == 0 {
            return UPoly::constant(content);
        }
        loop {
            if b.degree() == Some(0) {
                return UPoly::constant(content);
            }
            let r = a.pseudo_rem(&b);
            if GcdDomain::is_zero(&r) {
                return b.primitive_part().scale(&content);
            }
            a = b;
            b = r.primitive_part();
        }
    }

    fn is_negative(&self) -> bool {
        self.lead().is_some_and(R::is_negative)
    }

    fn eval_mod(&self, r: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, c| (mul_mod(acc, r) + c.eval_mod(r)) % P)
    }
}
