use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};

/// Exponent pair `(q-exponent, u-exponent)`.
pub type Exponents = (i64, i64);

/// Sparse Laurent polynomial in `q` and `u` with arbitrary-precision
/// integer coefficients. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

/// ℤ[q][u] with `u` as the outer variable.
pub(crate) type Bivariate = UPoly<UPoly<BigInt>>;

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, eq: i64, eu: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, eu), c);
        }
        LaurentPoly { terms }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn u_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// The integer value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Highest term in `(q, u)` lexicographic order.
    pub fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `q^dq u^du`.
    pub fn shift(&self, dq: i64, du: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((a + dq, b + du), c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect() }
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub(crate) fn scale_down(&self, c: &BigInt) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, x)| (e, x / c)).collect() }
    }

    /// Substitutes `u ↦ u⁻¹`.
    pub fn invert_u(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((a, -b), c.clone())).collect() }
    }

    fn single_coeff(&self) -> Option<&BigInt> {
        match self.terms.len() {
            1 => self.terms.values().next(),
            _ => None,
        }
    }

    /// `(min q-exponent, min u-exponent)`; `(0, 0)` for zero.
    fn min_exponents(&self) -> Exponents {
        let mq = self.terms.keys().map(|e| e.0).min().unwrap_or(0);
        let mu = self.terms.keys().map(|e| e.1).min().unwrap_or(0);
        (mq, mu)
    }

    /// Splits off the largest monomial factor: `self = q^a u^b · rest`
    /// where `rest` is an ordinary polynomial.
    pub(crate) fn to_bivariate(&self) -> (Exponents, Bivariate) {
        let (mq, mu) = self.min_exponents();
        let max_u = self.terms.keys().map(|e| e.1).max().unwrap_or(mu);
        let mut outer: Vec<Vec<BigInt>> = vec![Vec::new(); (max_u - mu + 1) as usize];
        for (&(a, b), c) in &self.terms {
            let row = &mut outer[(b - mu) as usize];
            let i = (a - mq) as usize;
            if row.len() <= i {
                row.resize(i + 1, BigInt::zero());
            }
            row[i] = c.clone();
        }
        let poly = UPoly::new(outer.into_iter().map(UPoly::new).collect());
        ((mq, mu), poly)
    }

    pub(crate) fn from_bivariate(shift: Exponents, poly: &Bivariate) -> Self {
        let mut terms = BTreeMap::new();
        for (j, row) in poly.coeffs.iter().enumerate() {
            for (i, c) in row.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    terms.insert((shift.0 + i as i64, shift.1 + j as i64), c.clone());
                }
            }
        }
        LaurentPoly { terms }
    }

    /// Exact value at `(q0, u0)`; both must be nonzero when negative powers
    /// occur.
    pub fn eval(&self, q0: &BigRational, u0: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(a, b), c)| BigRational::from_integer(c.clone()) * rational_pow(q0, a) * rational_pow(u0, b))
            .fold(BigRational::zero(), |acc, x| acc + x)
    }

    /// `Some(self / other)` when `other` divides `self` exactly in the
    /// Laurent ring.
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        if let Some((&(dq, du), c)) = other.leading().filter(|_| other.len() == 1) {
            let mut terms = BTreeMap::new();
            for (&(a, b), x) in &self.terms {
                let (quot, rem) = x.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                terms.insert((a - dq, b - du), quot);
            }
            return Some(LaurentPoly { terms });
        }
        let (sa, a) = self.to_bivariate();
        let (sb, b) = other.to_bivariate();
        let quot = upoly::GcdDomain::exact_div(&a, &b)?;
        Some(LaurentPoly::from_bivariate((sa.0 - sb.0, sa.1 - sb.1), &quot))
    }

    /// Gcd up to units: no monomial factor, positive leading coefficient.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        if let Some(c) = self.single_coeff().or_else(|| other.single_coeff()) {
            let g =
                self.terms
                    .values()
                    .chain(other.terms.values())
                    .fold(c.abs(), |g, x| if g.is_one() { g } else { g.gcd(x) });
            return LaurentPoly::constant(g);
        }
        let (_, a) = self.to_bivariate();
        let (_, b) = other.to_bivariate();
        LaurentPoly::from_bivariate((0, 0), &upoly::GcdDomain::gcd(&a, &b))
    }

    /// Plain-text rendering. Even `u`-powers print as powers of `gamma`.
    pub fn to_text(&self) -> String {
        self.render(TermStyle::Text)
    }

    pub fn to_latex(&self) -> String {
        self.render(TermStyle::Latex)
    }

    fn render(&self, style: TermStyle) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&render_monomial(&c.abs(), a, b, style));
        }
        out
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

#[derive(Clone, Copy)]
enum TermStyle {
    Text,
    Latex,
}

/// Renders `c q^a u^b` for a positive integer `c`.
fn render_monomial(c: &BigInt, a: i64, b: i64, style: TermStyle) -> String {
    let mut factors = Vec::new();
    let power = |name: &str, e: i64| -> String {
        match (style, e) {
            (_, 1) => name.to_string(),
            (TermStyle::Text, _) => format!("{name}^{e}"),
            (TermStyle::Latex, _) => format!("{name}^{{{e}}}"),
        }
    };
    if a != 0 {
        factors.push(power("q", a));
    }
    if b != 0 {
        let gamma = match style {
            TermStyle::Text => "gamma",
            TermStyle::Latex => "\\gamma",
        };
        if b % 2 == 0 {
            factors.push(power(gamma, b / 2));
        } else {
            factors.push(power("u", b));
        }
    }
    let sep = match style {
        TermStyle::Text => "*",
        TermStyle::Latex => " ",
    };
    if factors.is_empty() {
        c.to_string()
    } else if c.is_one() {
        factors.join(sep)
    } else {
        format!("{c}{sep}{}", factors.join(sep))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self.to_text())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_is_empty() {
        let p = LaurentPoly::q_pow(1);
        assert!((&p - &p).is_zero());
        assert!(LaurentPoly::constant(0).is_zero());
    }

    #[test]
    fn text_rendering() {
        let p = &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1);
        assert_eq!(p.to_text(), "q - q^-1");
        let g = &LaurentPoly::monomial(3, 2, 4) - &LaurentPoly::u_pow(-1);
        assert_eq!(g.to_text(), "3*q^2*gamma^2 - u^-1");
        assert_eq!(LaurentPoly::u_pow(2).to_text(), "gamma");
        assert_eq!(LaurentPoly::constant(-5).to_text(), "-5");
    }

    #[test]
    fn bivariate_round_trip() {
        let p = LaurentPoly::from_terms([((-2, 3), BigInt::from(4)), ((1, -1), BigInt::from(-7))]);
        let (shift, b) = p.to_bivariate();
        assert_eq!(shift, (-2, -1));
        assert_eq!(LaurentPoly::from_bivariate(shift, &b), p);
    }

    #[test]
    fn laurent_exact_division() {
        let qm = &LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1);
        let prod = &qm * &(&LaurentPoly::u_pow(-3) + &LaurentPoly::constant(2));
        assert_eq!(prod.exact_div(&qm), Some(&LaurentPoly::u_pow(-3) + &LaurentPoly::constant(2)));
    }
}
