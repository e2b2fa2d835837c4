use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::upoly::GcdDomain;
use super::CoeffError;

/// A rational function in `q` and `u = γ^{1/2}` over the integers.
///
/// Values are kept in lowest terms: the numerator and denominator are
/// coprime, the denominator is a primitive polynomial whose exponent range
/// in each variable is centred on zero (so `1/(q - q^-1)` rather than
/// `q/(q^2 - 1)`), and its leading coefficient is positive. Two equal
/// functions are therefore structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(n))
    }

    pub fn from_ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self, CoeffError> {
        RatFunc::new(LaurentPoly::constant(n), LaurentPoly::constant(d))
    }

    /// A Laurent polynomial is already canonical with denominator one.
    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFunc { num, den: LaurentPoly::one() }
    }

    pub fn q_pow(e: i64) -> Self {
        RatFunc::from_poly(LaurentPoly::q_pow(e))
    }

    pub fn u_pow(e: i64) -> Self {
        RatFunc::from_poly(LaurentPoly::u_pow(e))
    }

    /// `γ^e = u^{2e}`.
    pub fn gamma_pow(e: i64) -> Self {
        RatFunc::u_pow(2 * e)
    }

    /// `q - q⁻¹`.
    pub fn q_minus_q_inv() -> Self {
        RatFunc::from_poly(&LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(RatFunc::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        if g.is_one() {
            return RatFunc::normalized(num, den);
        }
        RatFunc::normalized(
            num.exact_div(&g).expect("gcd divides numerator"),
            den.exact_div(&g).expect("gcd divides denominator"),
        )
    }

    /// `self · c q^eq u^eu`; only the integer `c` can cancel.
    fn times_term(&self, c: &BigInt, eq: i64, eu: i64) -> Self {
        let g = if self.den.is_one() {
            <BigInt as One>::one()
        } else {
            self.den.terms().fold(c.abs(), |g, (_, x)| if g.is_one() { g } else { Integer::gcd(&g, x) })
        };
        let c = c / &g;
        let num = self.num.shift(eq, eu);
        RatFunc {
            num: if c.is_one() { num } else { num.scale(&c) },
            den: if g.is_one() { self.den.clone() } else { self.den.scale_down(&g) },
        }
    }

    /// `num / den` where `den` is already a canonical denominator.
    fn over_canonical(num: LaurentPoly, den: &LaurentPoly) -> Self {
        let g = num.gcd(den);
        if g.is_one() {
            return RatFunc { num, den: den.clone() };
        }
        RatFunc::normalized(
            num.exact_div(&g).expect("gcd divides numerator"),
            den.exact_div(&g).expect("gcd divides denominator"),
        )
    }

    /// Fixes the sign and centring of an already coprime pair.
    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let (Some((&(dq, du), c)), 1) = (den.leading(), den.len()) {
            let num = num.shift(-dq, -du);
            return if Signed::is_negative(c) {
                RatFunc { num: -&num, den: LaurentPoly::constant(-c) }
            } else {
                RatFunc { num, den: LaurentPoly::constant(c.clone()) }
            };
        }
        let (ns, n) = num.to_bivariate();
        let (ds, mut d) = den.to_bivariate();
        let mut n = n;
        if d.is_negative() {
            n = n.neg();
            d = d.neg();
        }
        // d has no monomial factor, so its exponents start at zero.
        let du = d.degree().unwrap_or(0) as i64;
        let dq = d.coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0) as i64;
        let (cq, cu) = (dq.div_euclid(2), du.div_euclid(2));
        RatFunc {
            num: LaurentPoly::from_bivariate((ns.0 - ds.0 - cq, ns.1 - ds.1 - cu), &n),
            den: LaurentPoly::from_bivariate((-cq, -cu), &d),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The polynomial itself when the denominator is one.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Substitutes `u ↦ u⁻¹`.
    pub fn invert_u(&self) -> Self {
        RatFunc::canonical(self.num.invert_u(), self.den.invert_u())
    }

    pub fn eval(&self, q0: &BigRational, u0: &BigRational) -> Result<BigRational, CoeffError> {
        if q0.is_zero() || u0.is_zero() {
            return Err(CoeffError::ZeroEvaluationPoint);
        }
        let den = self.den.eval(q0, u0);
        if den.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(self.num.eval(q0, u0) / den)
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            return self.num.to_text();
        }
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            return self.num.to_latex();
        }
        format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
    }
}

fn wrap(p: &LaurentPoly) -> String {
    if p.len() > 1 {
        format!("({})", p.to_text())
    } else {
        p.to_text()
    }
}

/// Exact sum.
pub fn rf_add(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &b.num;
        if num.is_zero() {
            return RatFunc::zero();
        }
        if a.den.is_one() {
            return RatFunc::from_poly(num);
        }
        return RatFunc::over_canonical(num, &a.den);
    }
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        return RatFunc::canonical(&(&a.num * &b.den) + &(&b.num * &a.den), &a.den * &b.den);
    }
    let (ra, rb) = (cofactor(&a.den, &g), cofactor(&b.den, &g));
    let num = &(&a.num * &rb) + &(&b.num * &ra);
    if num.is_zero() {
        return RatFunc::zero();
    }
    // only factors of g can cancel
    let h = num.gcd(&g);
    RatFunc::normalized(cofactor(&num, &h), &(&ra * &rb) * &cofactor(&g, &h))
}

fn cofactor(p: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if g.is_one() {
        return p.clone();
    }
    p.exact_div(g).expect("gcd divides")
}

/// Exact product.
pub fn rf_mul(a: &RatFunc, b: &RatFunc) -> RatFunc {
    if a.is_zero() || b.is_zero() {
        return RatFunc::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return RatFunc::from_poly(&a.num * &b.num);
    }
    for (x, y) in [(a, b), (b, a)] {
        if let (Some((&(eq, eu), c)), 1, true) = (x.num.leading(), x.num.len(), x.den.is_one()) {
            return y.times_term(c, eq, eu);
        }
    }
    if a.den.is_one() {
        return RatFunc::over_canonical(&a.num * &b.num, &b.den);
    }
    if b.den.is_one() {
        return RatFunc::over_canonical(&a.num * &b.num, &a.den);
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    RatFunc::normalized(
        &cofactor(&a.num, &g1) * &cofactor(&b.num, &g2),
        &cofactor(&b.den, &g1) * &cofactor(&a.den, &g2),
    )
}

/// Multiplicative inverse; fails on zero.
pub fn rf_inv(a: &RatFunc) -> Result<RatFunc, CoeffError> {
    a.inv()
}

/// Exact value at the rational point `(q0, u0)`.
pub fn rf_eval(a: &RatFunc, q0: &BigRational, u0: &BigRational) -> Result<BigRational, CoeffError> {
    a.eval(q0, u0)
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        rf_add(self, rhs)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        rf_add(self, &-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        rf_mul(self, rhs)
    }
}

/// Panics on division by zero; use [`RatFunc::inv`] to handle it.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        rf_mul(self, &rhs.inv().expect("division by zero rational function"))
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.to_text())
    }
}
