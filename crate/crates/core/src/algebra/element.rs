use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::RatFunc;

use super::word::{Generator, Monomial};

/// A finite linear combination of monomials with rational-function
/// coefficients. Zero coefficients are never stored and terms iterate in
/// [`Monomial`] order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, RatFunc>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Element::term(Monomial::unit(), c)
    }

    pub fn term(m: Monomial, c: RatFunc) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn monomial(m: Monomial) -> Self {
        Element::term(m, RatFunc::one())
    }

    pub fn generator(g: Generator) -> Self {
        Element::monomial(Monomial::new(vec![g], 0))
    }

    pub fn x_plus(k: i64) -> Self {
        Element::generator(Generator::XPlus(k))
    }

    pub fn x_minus(k: i64) -> Self {
        Element::generator(Generator::XMinus(k))
    }

    /// `a_n`; panics for `n = 0`, use [`Generator::a`] to handle that case.
    pub fn a(n: i64) -> Self {
        Element::generator(Generator::a(n).expect("a_0 is not a generator"))
    }

    pub fn k_pow(e: i64) -> Self {
        Element::monomial(Monomial::k_pow(e))
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, RatFunc)>) -> Self {
        let mut e = Element::zero();
        for (m, c) in iter {
            e.add_term(m, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, RatFunc> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&RatFunc> {
        self.terms.get(m)
    }

    /// The coefficient if this is a pure scalar (empty word, no `K`).
    pub fn as_scalar(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&Monomial::unit()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &RatFunc) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Applies `f` to every coefficient, dropping the ones that vanish.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Element {
        Element::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Terms whose words contain no `x±` generator.
    pub fn project_x_free(&self) -> Element {
        Element { terms: self.terms.iter().filter(|(m, _)| !m.has_x()).map(|(m, c)| (m.clone(), c.clone())).collect() }
    }
}

/// Algebra product: words concatenate and the left factor's `K`-power is
/// moved to the right, picking up `q^{±2}` per `x±` it crosses. No other
/// reordering happens here.
pub fn el_mul(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            let (m, qexp) = ma.concat(mb);
            let mut c = ca * cb;
            if qexp != 0 {
                c = &c * &RatFunc::q_pow(qexp);
            }
            out.add_term(m, c);
        }
    }
    out
}

/// Exposes the isolated x-free projection as a free function too.
pub fn project_x_free(a: &Element) -> Element {
    a.project_x_free()
}

impl IntoIterator for Element {
    type Item = (Monomial, RatFunc);
    type IntoIter = btree_map::IntoIter<Monomial, RatFunc>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl From<RatFunc> for Element {
    fn from(c: RatFunc) -> Self {
        Element::scalar(c)
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        el_mul(self, rhs)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Element {
            type Output = Element;
            fn $m(self, rhs: Element) -> Element {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Element> for Element {
            type Output = Element;
            fn $m(self, rhs: &Element) -> Element {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// Plain-text rendering, e.g. `(q - q^-1)*a[1]*K - 2*x+[0]`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.num().len() == 1 && c.num().leading().is_some_and(|(_, x)| x < &0.into());
            let shown = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let coeff =
                if shown.den().is_one() && shown.num().len() > 1 { format!("({shown})") } else { shown.to_text() };
            match (m.is_unit(), shown.is_one()) {
                (true, _) => f.write_str(&coeff)?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{coeff}*{m}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}
