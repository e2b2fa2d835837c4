//! Normal ordering.
//!
//! Rules, all applied to an adjacent pair inside a word:
//!
//! * R2 `a_k a_l → a_l a_k + δ_{k,-l} [2k]/k (γ^k - γ^{-k})/(q - q⁻¹)` for `k > l`
//! * R3 `a_n x±_k → x±_k a_n ± [2n]/n γ^{∓|n|/2} x±_{n+k}`
//! * R4 `x⁻_i x⁺_j → x⁺_j x⁻_i - (γ^{(j-i)/2} ψ_{j+i} - γ^{(i-j)/2} φ_{j+i})/(q - q⁻¹)`
//! * R5 (abelian-x only) `x±_i x±_j → x±_j x±_i` for `i > j`
//!
//! `K` is always kept rightmost by [`el_mul`]. The measure (x-count, a-count,
//! inversions) drops at every step, so reduction terminates. R5 is only
//! applied to words with no R2–R4 redex: letting it interleave freely with R4
//! makes the system non-confluent, because the ψ/φ corrections of R4 do not
//! commute with `x±`.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::coeff::{qint, RatFunc};
use crate::drinfeld::{phi, psi};

use super::element::{el_mul, Element};
use super::word::{Generator, Monomial};

/// Which quotient of the free algebra to compute in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum RelationMode {
    /// Same-sign `x` generators are kept in their original relative order.
    #[default]
    Strict,
    /// Same-sign `x` generators additionally commute and are sorted by index.
    AbelianX,
}

impl RelationMode {
    pub fn name(self) -> &'static str {
        match self {
            RelationMode::Strict => "strict",
            RelationMode::AbelianX => "abelianx",
        }
    }
}

impl std::str::FromStr for RelationMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "strict" => Ok(RelationMode::Strict),
            "abelianx" | "abelian-x" | "abelian" => Ok(RelationMode::AbelianX),
            other => Err(format!("unknown relation mode `{other}` (expected strict or abelianx)")),
        }
    }
}

/// Chooses which redex to rewrite when several are available.
pub trait RedexSelector {
    /// `positions` is nonempty and sorted; return one of its entries.
    fn select(&mut self, word: &Monomial, positions: &[usize]) -> usize;
}

impl<S: RedexSelector + ?Sized> RedexSelector for &mut S {
    fn select(&mut self, word: &Monomial, positions: &[usize]) -> usize {
        (**self).select(word, positions)
    }
}

/// Always rewrites the leftmost redex.
#[derive(Clone, Copy, Debug, Default)]
pub struct Leftmost;

impl RedexSelector for Leftmost {
    fn select(&mut self, _: &Monomial, positions: &[usize]) -> usize {
        positions[0]
    }
}

/// Always rewrites the rightmost redex.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rightmost;

impl RedexSelector for Rightmost {
    fn select(&mut self, _: &Monomial, positions: &[usize]) -> usize {
        *positions.last().unwrap()
    }
}

fn is_primary_redex(left: Generator, right: Generator) -> bool {
    use Generator::*;
    match (left, right) {
        (A(k), A(l)) => k > l,
        (A(_), XPlus(_) | XMinus(_)) => true,
        (XMinus(_), XPlus(_)) => true,
        _ => false,
    }
}

fn is_abelian_redex(left: Generator, right: Generator) -> bool {
    use Generator::*;
    match (left, right) {
        (XPlus(i), XPlus(j)) | (XMinus(i), XMinus(j)) => i > j,
        _ => false,
    }
}

/// Positions `i` such that `(word[i], word[i+1])` can be rewritten.
pub fn redex_positions(m: &Monomial, mode: RelationMode) -> Vec<usize> {
    let pairs = || m.word.windows(2).enumerate();
    let primary: Vec<usize> = pairs().filter(|(_, w)| is_primary_redex(w[0], w[1])).map(|(i, _)| i).collect();
    if !primary.is_empty() || mode == RelationMode::Strict {
        return primary;
    }
    pairs().filter(|(_, w)| is_abelian_redex(w[0], w[1])).map(|(i, _)| i).collect()
}

/// `[2n]/n`.
fn heisenberg_factor(n: i64) -> RatFunc {
    &qint(2 * n) * &RatFunc::from_ratio(1, n).expect("n is nonzero")
}

/// `[a_k, a_{-k}] = [2k]/k (γ^k - γ^{-k})/(q - q⁻¹)`.
pub fn heisenberg_central(k: i64) -> RatFunc {
    let gammas = RatFunc::gamma_pow(k) - RatFunc::gamma_pow(-k);
    &(&heisenberg_factor(k) * &gammas) / &RatFunc::q_minus_q_inv()
}

/// `[x⁺_n, x⁻_k] = (γ^{(n-k)/2} ψ_{n+k} - γ^{-(n-k)/2} φ_{n+k})/(q - q⁻¹)`.
pub fn cross_commutator(n: i64, k: i64) -> Element {
    let inv = RatFunc::q_minus_q_inv().inv().unwrap();
    let mut out = psi(n + k).scale(&(&RatFunc::u_pow(n - k) * &inv));
    out.add_scaled(&phi(n + k), &(&RatFunc::u_pow(k - n) * &-&inv));
    out
}

/// One rewrite of `m` at position `i`. The result has coefficient-one
/// leading part and is not yet normal.
fn rewrite_at(m: &Monomial, i: usize) -> Element {
    use Generator::*;
    let (left, right) = (m.word[i], m.word[i + 1]);
    let with_middle = |middle: &[Generator]| {
        let mut word = Vec::with_capacity(m.word.len());
        word.extend_from_slice(&m.word[..i]);
        word.extend_from_slice(middle);
        word.extend_from_slice(&m.word[i + 2..]);
        Monomial::new(word, m.kexp)
    };
    let mut out = Element::monomial(with_middle(&[right, left]));
    match (left, right) {
        (A(k), A(l)) => {
            if k.get() == -l.get() {
                out.add_term(with_middle(&[]), heisenberg_central(k.get()));
            }
        }
        (A(n), XPlus(k)) => {
            let c = &heisenberg_factor(n.get()) * &RatFunc::u_pow(-n.get().abs());
            out.add_term(with_middle(&[XPlus(n.get() + k)]), c);
        }
        (A(n), XMinus(k)) => {
            let c = &heisenberg_factor(n.get()) * &RatFunc::u_pow(n.get().abs());
            out.add_term(with_middle(&[XMinus(n.get() + k)]), -c);
        }
        (XMinus(lo), XPlus(hi)) => {
            let prefix = Element::monomial(Monomial::new(m.word[..i].to_vec(), 0));
            let suffix = Element::monomial(Monomial::new(m.word[i + 2..].to_vec(), m.kexp));
            let correction = el_mul(&el_mul(&prefix, &cross_commutator(hi, lo)), &suffix);
            out = &out - &correction;
        }
        (XPlus(_), XPlus(_)) | (XMinus(_), XMinus(_)) => {}
        _ => unreachable!("not a redex"),
    }
    out
}

struct Rewriter<'s> {
    mode: RelationMode,
    selector: &'s mut dyn RedexSelector,
    /// Normal forms of `K`-free words.
    memo: HashMap<Vec<Generator>, Element>,
}

impl Rewriter<'_> {
    fn normalize(&mut self, a: &Element) -> Element {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            let nf = self.normalize_word(&m.word);
            if m.kexp == 0 {
                out.add_scaled(&nf, c);
            } else {
                // K sits to the right of every rewrite, so it rides along.
                for (n, x) in nf.terms() {
                    out.add_term(Monomial::new(n.word.clone(), n.kexp + m.kexp), x * c);
                }
            }
        }
        out
    }

    fn normalize_word(&mut self, word: &[Generator]) -> Element {
        if let Some(hit) = self.memo.get(word) {
            return hit.clone();
        }
        let m = Monomial::new(word.to_vec(), 0);
        let positions = redex_positions(&m, self.mode);
        let result = if positions.is_empty() {
            Element::monomial(m)
        } else {
            let i = self.selector.select(&m, &positions);
            debug_assert!(positions.contains(&i));
            let step = rewrite_at(&m, i);
            self.normalize(&step)
        };
        self.memo.insert(word.to_vec(), result.clone());
        result
    }
}

thread_local! {
    /// Rightmost-first normal forms are deterministic, so they are shared
    /// across calls on the same thread.
    static SHARED_MEMO: RefCell<[HashMap<Vec<Generator>, Element>; 2]> = RefCell::default();
}

/// Entries kept per mode before the shared memo is flushed.
const SHARED_MEMO_LIMIT: usize = 200_000;

/// Reduces `a` to its normal form: x⁺-block, x⁻-block, ascending a-block,
/// then the `K`-power.
pub fn normal_form(a: &Element, mode: RelationMode) -> Element {
    let slot = mode as usize;
    let mut memo = SHARED_MEMO.with(|m| std::mem::take(&mut m.borrow_mut()[slot]));
    if memo.len() > SHARED_MEMO_LIMIT {
        memo.clear();
    }
    let mut selector = Rightmost;
    let mut rw = Rewriter { mode, selector: &mut selector, memo };
    let out = rw.normalize(a);
    let memo = rw.memo;
    SHARED_MEMO.with(|m| m.borrow_mut()[slot] = memo);
    out
}

/// Like [`normal_form`], but lets `selector` pick the rewrite position in
/// every word the first time that word is reduced.
pub fn normal_form_with(a: &Element, mode: RelationMode, selector: &mut dyn RedexSelector) -> Element {
    Reducer::new(mode, selector).reduce(a)
}

/// A reduction strategy with its own memo, reusable across many inputs.
/// Every cached word was reduced with positions chosen by `selector`.
pub struct Reducer<S: RedexSelector> {
    mode: RelationMode,
    selector: S,
    memo: HashMap<Vec<Generator>, Element>,
}

impl<S: RedexSelector> Reducer<S> {
    pub fn new(mode: RelationMode, selector: S) -> Self {
        Reducer { mode, selector, memo: HashMap::new() }
    }

    pub fn reduce(&mut self, a: &Element) -> Element {
        let mut rw = Rewriter { mode: self.mode, selector: &mut self.selector, memo: std::mem::take(&mut self.memo) };
        let out = rw.normalize(a);
        self.memo = rw.memo;
        out
    }
}

pub fn is_normal(a: &Element, mode: RelationMode) -> bool {
    a.terms().all(|(m, _)| redex_positions(m, mode).is_empty())
}

/// `[a, b]`, normal-ordered.
pub fn commutator(a: &Element, b: &Element, mode: RelationMode) -> Element {
    normal_form(&(&(a * b) - &(b * a)), mode)
}

/// `[a, b]_{K^p} = a K^p b - b K^p a`, normal-ordered.
pub fn deformed_commutator(a: &Element, b: &Element, p: i64, mode: RelationMode) -> Element {
    let kp = Element::k_pow(p);
    let ab = &(a * &kp) * b;
    let ba = &(b * &kp) * a;
    normal_form(&(&ab - &ba), mode)
}

/// Equality in the implemented quotient. This is sound but does not decide
/// equality in the full algebra, since the quadratic `x±x±` relation is not
/// imposed.
pub fn equals(a: &Element, b: &Element, mode: RelationMode) -> bool {
    normal_form(&(a - b), mode).is_zero()
}

/// Generators used to test centrality.
pub fn centrality_probes() -> Vec<Element> {
    let mut probes = Vec::new();
    for k in -2..=2 {
        probes.push(Element::x_plus(k));
        probes.push(Element::x_minus(k));
    }
    for n in [-2, -1, 1, 2] {
        probes.push(Element::a(n));
    }
    probes.push(Element::k_pow(1));
    probes
}

/// Whether `a` commutes with every probe generator.
pub fn is_central(a: &Element, mode: RelationMode) -> bool {
    centrality_probes().iter().all(|g| commutator(a, g, mode).is_zero())
}
