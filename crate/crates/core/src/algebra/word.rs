use std::cmp::Ordering;
use std::fmt;
use std::num::NonZeroI64;

use super::AlgebraError;

/// A loop generator. `K` and `γ` are not generators here: `K` is carried as
/// the exponent of a [`Monomial`] and `γ` lives in the coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    XPlus(i64),
    XMinus(i64),
    A(NonZeroI64),
}

impl Generator {
    pub fn a(n: i64) -> Result<Generator, AlgebraError> {
        NonZeroI64::new(n).map(Generator::A).ok_or(AlgebraError::ZeroHeisenbergIndex)
    }

    /// The mode index `k` of `x±_k` or `a_k`.
    pub fn index(self) -> i64 {
        match self {
            Generator::XPlus(k) | Generator::XMinus(k) => k,
            Generator::A(n) => n.get(),
        }
    }

    /// Exponent of `q²` picked up when `K` passes this generator from the
    /// left: `K g = q^{2·weight} g K`.
    pub fn weight(self) -> i64 {
        match self {
            Generator::XPlus(_) => 1,
            Generator::XMinus(_) => -1,
            Generator::A(_) => 0,
        }
    }

    pub fn is_x(self) -> bool {
        !matches!(self, Generator::A(_))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::XPlus(k) => write!(f, "x+[{k}]"),
            Generator::XMinus(k) => write!(f, "x-[{k}]"),
            Generator::A(n) => write!(f, "a[{n}]"),
        }
    }
}

/// A word in the loop generators followed by `K^kexp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub word: Vec<Generator>,
    pub kexp: i64,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn new(word: Vec<Generator>, kexp: i64) -> Self {
        Monomial { word, kexp }
    }

    pub fn k_pow(kexp: i64) -> Self {
        Monomial { word: Vec::new(), kexp }
    }

    pub fn is_unit(&self) -> bool {
        self.word.is_empty() && self.kexp == 0
    }

    /// Net `x⁺` minus `x⁻` count.
    pub fn weight(&self) -> i64 {
        self.word.iter().map(|g| g.weight()).sum()
    }

    pub fn has_x(&self) -> bool {
        self.word.iter().any(|g| g.is_x())
    }

    /// Concatenation, moving `K^{self.kexp}` to the right past `other.word`.
    /// Returns the product and the `q`-exponent it picks up.
    pub fn concat(&self, other: &Monomial) -> (Monomial, i64) {
        let mut word = Vec::with_capacity(self.word.len() + other.word.len());
        word.extend_from_slice(&self.word);
        word.extend_from_slice(&other.word);
        let qexp = 2 * self.kexp * other.weight();
        (Monomial::new(word, self.kexp + other.kexp), qexp)
    }

    fn subword(&self, pick: fn(&Generator) -> bool) -> impl Iterator<Item = i64> + '_ {
        self.word.iter().filter(move |g| pick(g)).map(|g| g.index())
    }
}

/// x⁺-subword, then x⁻-subword, then a-subword, then `K`-exponent; the full
/// word breaks remaining ties between non-normal words.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let xp = |g: &Generator| matches!(g, Generator::XPlus(_));
        let xm = |g: &Generator| matches!(g, Generator::XMinus(_));
        let a = |g: &Generator| matches!(g, Generator::A(_));
        self.subword(xp)
            .cmp(other.subword(xp))
            .then_with(|| self.subword(xm).cmp(other.subword(xm)))
            .then_with(|| self.subword(a).cmp(other.subword(a)))
            .then_with(|| self.kexp.cmp(&other.kexp))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.word.iter().map(|g| g.to_string()).collect();
        match self.kexp {
            0 => {}
            1 => parts.push("K".into()),
            e => parts.push(format!("K^{e}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn zero_heisenberg_mode_rejected() {
        assert_eq!(Generator::a(0), Err(AlgebraError::ZeroHeisenbergIndex));
        assert_eq!(Generator::a(-2).unwrap().index(), -2);
    }

    #[test]
    fn k_passes_with_weight() {
        let k = Monomial::k_pow(1);
        let x = Monomial::new(vec![XPlus(0)], 0);
        assert_eq!(k.concat(&x), (Monomial::new(vec![XPlus(0)], 1), 2));
        let kinv = Monomial::k_pow(-1);
        let y = Monomial::new(vec![XMinus(0)], 0);
        assert_eq!(kinv.concat(&y), (Monomial::new(vec![XMinus(0)], -1), 2));
        let a = Monomial::new(vec![Generator::a(1).unwrap()], 0);
        assert_eq!(k.concat(&a).1, 0);
    }

    #[test]
    fn order_groups_by_kind() {
        let m1 = Monomial::new(vec![XPlus(0), XMinus(5)], 0);
        let m2 = Monomial::new(vec![XPlus(1)], 0);
        assert!(m1 < m2);
        // same subwords, different interleaving: still totally ordered
        let m3 = Monomial::new(vec![XMinus(5), XPlus(0)], 0);
        assert_ne!(m1.cmp(&m3), Ordering::Equal);
    }
}
