//! Normal-ordered elements of the Weyl algebra `pq − qp = c`.
//!
//! An element is a finite sum `Σ coeff_{a,b} · qᵃ pᵇ` with every `q` to the
//! left of every `p` and coefficients in ℚ(i)[c]. The only nontrivial product
//! rule is the reordering
//!
//! ```text
//! pᵇ qᵃ = Σ_k k!·C(b,k)·C(a,k)·cᵏ · q^{a−k} p^{b−k}
//! ```
//!
//! An [`Algebra`] either keeps `c` formal or substitutes a fixed value for it
//! during every product, so that specialized computations never carry
//! growing powers of `c` around.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, One, Zero};

use crate::arith::{binomial_q, factorial_q, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::poly::{CPoly, RatPoly};
use crate::text;

/// Default number of `ad` iterations before a Hadamard series is declared non-terminating.
pub const DEFAULT_HADAMARD_CAP: usize = 64;

/// `(q exponent, p exponent)`.
pub type Monomial = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylElement {
    terms: BTreeMap<Monomial, CPoly>,
}

fn accumulate(map: &mut BTreeMap<Monomial, CPoly>, key: Monomial, coeff: CPoly) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl WeylElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(CPoly::one())
    }

    pub fn q() -> Self {
        Self::monomial(1, 0)
    }

    pub fn p() -> Self {
        Self::monomial(0, 1)
    }

    /// `qᵃ pᵇ`.
    pub fn monomial(q_exp: u32, p_exp: u32) -> Self {
        Self::term(q_exp, p_exp, CPoly::one())
    }

    pub fn term(q_exp: u32, p_exp: u32, coeff: CPoly) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, (q_exp, p_exp), coeff);
        Self { terms }
    }

    /// A central element.
    pub fn scalar(coeff: CPoly) -> Self {
        Self::term(0, 0, coeff)
    }

    pub fn from_gaussian(g: GaussianRational) -> Self {
        Self::scalar(CPoly::constant(g))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_gaussian(GaussianRational::real(r))
    }

    /// The central element `c` itself.
    pub fn c() -> Self {
        Self::scalar(CPoly::c())
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, CPoly)>,
    {
        let mut map = BTreeMap::new();
        for (key, coeff) in terms {
            accumulate(&mut map, key, coeff);
        }
        Self { terms: map }
    }

    /// `f(p) = Σ f_k pᵏ`.
    pub fn poly_in_p(f: &RatPoly) -> Self {
        Self::from_terms(f.terms().map(|(k, g)| ((0, k), CPoly::constant(g.clone()))))
    }

    /// `g(q) = Σ g_k qᵏ`.
    pub fn poly_in_q(g: &RatPoly) -> Self {
        Self::from_terms(g.terms().map(|(k, a)| ((k, 0), CPoly::constant(a.clone()))))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &CPoly)> + '_ {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coeff(&self, q_exp: u32, p_exp: u32) -> CPoly {
        self.terms
            .get(&(q_exp, p_exp))
            .cloned()
            .unwrap_or_else(CPoly::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `a + b` over the stored monomials.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// True when every coefficient is free of `c`.
    pub fn is_c_free(&self) -> bool {
        self.terms.values().all(CPoly::is_constant)
    }

    pub fn scale(&self, k: &CPoly) -> Self {
        Self::from_terms(self.terms.iter().map(|(&key, v)| (key, v * k)))
    }

    pub fn scale_gauss(&self, g: &GaussianRational) -> Self {
        if g.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&key, v)| (key, v.scale(g)))
                .collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&key, v)| (key, v.scale_rat(r)))
                .collect(),
        }
    }

    /// Exact division by the central symbol `c`.
    pub fn div_c(&self) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (&key, v) in &self.terms {
            let reduced = v
                .shift_down(1)
                .ok_or_else(|| Error::NonDivisible(self.to_string()))?;
            terms.insert(key, reduced);
        }
        Ok(Self { terms })
    }

    /// Evaluates every coefficient at `c = v`.
    pub fn specialize_c(&self, v: &GaussianRational) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&key, coeff)| (key, CPoly::constant(coeff.subst(v)))),
        )
    }
}

pub fn specialize_c(w: &WeylElement, v: &GaussianRational) -> WeylElement {
    w.specialize_c(v)
}

impl<'a> Add<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn add(self, o: &WeylElement) -> WeylElement {
        let mut terms = self.terms.clone();
        for (&key, v) in &o.terms {
            accumulate(&mut terms, key, v.clone());
        }
        WeylElement { terms }
    }
}

impl<'a> Sub<&'a WeylElement> for &'a WeylElement {
    type Output = WeylElement;
    fn sub(self, o: &WeylElement) -> WeylElement {
        let mut terms = self.terms.clone();
        for (&key, v) in &o.terms {
            accumulate(&mut terms, key, -v);
        }
        WeylElement { terms }
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        -&self
    }
}

impl Add for WeylElement {
    type Output = WeylElement;
    fn add(self, o: WeylElement) -> WeylElement {
        &self + &o
    }
}

impl Sub for WeylElement {
    type Output = WeylElement;
    fn sub(self, o: WeylElement) -> WeylElement {
        &self - &o
    }
}

impl std::iter::Sum for WeylElement {
    fn sum<I: Iterator<Item = WeylElement>>(iter: I) -> Self {
        iter.fold(WeylElement::zero(), |acc, w| &acc + &w)
    }
}

/// Multiplication context: formal `c`, or `c` fixed to a value.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    central_value: Option<GaussianRational>,
    hadamard_cap: usize,
}

impl Default for Algebra {
    fn default() -> Self {
        Self::formal()
    }
}

impl Algebra {
    pub fn formal() -> Self {
        Self {
            central_value: None,
            hadamard_cap: DEFAULT_HADAMARD_CAP,
        }
    }

    pub fn specialized(v: GaussianRational) -> Self {
        Self {
            central_value: Some(v),
            hadamard_cap: DEFAULT_HADAMARD_CAP,
        }
    }

    /// `c = −i`, i.e. `qp − pq = i`: the harmonic-oscillator convention.
    pub fn oscillator() -> Self {
        Self::specialized(-GaussianRational::i())
    }

    pub fn with_hadamard_cap(mut self, cap: usize) -> Self {
        self.hadamard_cap = cap;
        self
    }

    pub fn central_value(&self) -> Option<&GaussianRational> {
        self.central_value.as_ref()
    }

    pub fn hadamard_cap(&self) -> usize {
        self.hadamard_cap
    }

    fn c_powers(&self, max: u32) -> Vec<CPoly> {
        match &self.central_value {
            None => (0..=max)
                .map(|k| CPoly::monomial(k, GaussianRational::one()))
                .collect(),
            Some(v) => {
                let mut out = Vec::with_capacity(max as usize + 1);
                let mut acc = GaussianRational::one();
                for _ in 0..=max {
                    out.push(CPoly::constant(acc.clone()));
                    acc = &acc * v;
                }
                out
            }
        }
    }

    /// Brings an element into this algebra (substitutes `c` if specialized).
    pub fn settle(&self, w: WeylElement) -> WeylElement {
        match &self.central_value {
            Some(v) if !w.is_c_free() => w.specialize_c(v),
            _ => w,
        }
    }

    /// Normal-ordered product.
    pub fn mul(&self, lhs: &WeylElement, rhs: &WeylElement) -> WeylElement {
        let max_k = lhs
            .terms
            .keys()
            .map(|&(_, b)| b)
            .max()
            .unwrap_or(0)
            .min(rhs.terms.keys().map(|&(a, _)| a).max().unwrap_or(0));
        let c_pow = self.c_powers(max_k);
        let mut out = BTreeMap::new();
        for (&(a1, b1), x) in &lhs.terms {
            for (&(a2, b2), y) in &rhs.terms {
                let xy = x * y;
                let mut weight = BigInt::one();
                for k in 0..=b1.min(a2) {
                    if k > 0 {
                        weight = weight * (b1 - k + 1) * (a2 - k + 1) / k;
                    }
                    let coeff = (&xy * &c_pow[k as usize])
                        .scale_rat(&Rational::from_integer(weight.clone()));
                    accumulate(&mut out, (a1 + a2 - k, b1 + b2 - k), coeff);
                }
            }
        }
        self.settle(WeylElement { terms: out })
    }

    pub fn pow(&self, w: &WeylElement, e: u32) -> WeylElement {
        (0..e).fold(WeylElement::one(), |acc, _| self.mul(&acc, w))
    }

    pub fn commutator(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        &self.mul(a, b) - &self.mul(b, a)
    }

    pub fn anticommutator(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        &self.mul(a, b) + &self.mul(b, a)
    }

    /// `[w, v]_n = [[w, v]_{n−1}, v]`, with `[w, v]_0 = w`.
    pub fn nested_commutator(&self, w: &WeylElement, v: &WeylElement, n: u32) -> WeylElement {
        (0..n).fold(self.settle(w.clone()), |acc, _| self.commutator(&acc, v))
    }

    /// `{w, v}_n = {{w, v}_{n−1}, v}`, with `{w, v}_0 = w`.
    pub fn nested_anticommutator(&self, w: &WeylElement, v: &WeylElement, n: u32) -> WeylElement {
        (0..n).fold(self.settle(w.clone()), |acc, _| {
            self.anticommutator(&acc, v)
        })
    }

    /// `ad_xⁿ(h) = [x, [x, …, [x, h]]]`.
    pub fn left_nested_commutator(&self, h: &WeylElement, x: &WeylElement, n: u32) -> WeylElement {
        (0..n).fold(self.settle(h.clone()), |acc, _| self.commutator(x, &acc))
    }

    /// `Σ_k C(n,k) a^{n−k} {w, v}_k`.
    pub fn shifted_nested_anticomm(
        &self,
        w: &WeylElement,
        v: &WeylElement,
        a: &Rational,
        n: u32,
    ) -> WeylElement {
        let mut nested = self.settle(w.clone());
        let mut total = WeylElement::zero();
        for k in 0..=n {
            let weight = binomial_q(n, k) * num::pow(a.clone(), (n - k) as usize);
            total = &total + &nested.scale_rat(&weight);
            if k < n {
                nested = self.anticommutator(&nested, v);
            }
        }
        total
    }

    /// `P(w) = Σ P_k wᵏ`.
    pub fn poly_of_element(&self, poly: &RatPoly, w: &WeylElement) -> WeylElement {
        let Some(top) = poly.degree() else {
            return WeylElement::zero();
        };
        let mut acc = WeylElement::zero();
        for k in (0..=top).rev() {
            acc = self.mul(&acc, w);
            let coeff = poly.coeff(k);
            if !coeff.is_zero() {
                acc = &acc + &WeylElement::from_gaussian(coeff);
            }
        }
        self.settle(acc)
    }

    /// `[w, ad_x(w), ad_x²(w), …]` up to the last nonzero iterate.
    pub fn ad_iterates(&self, x: &WeylElement, w: &WeylElement) -> Result<Vec<WeylElement>> {
        let mut out = Vec::new();
        let mut current = self.settle(w.clone());
        for _ in 0..self.hadamard_cap {
            if current.is_zero() {
                return Ok(out);
            }
            let next = self.commutator(x, &current);
            out.push(current);
            current = next;
        }
        if current.is_zero() {
            Ok(out)
        } else {
            Err(Error::NonTerminatingSeries {
                cap: self.hadamard_cap,
            })
        }
    }

    /// `e^{tx} w e^{−tx} = Σ tⁿ/n! ad_xⁿ(w)`, finite when `ad_x` is nilpotent on `w`.
    pub fn hadamard_conjugate(
        &self,
        x: &WeylElement,
        w: &WeylElement,
        t: &Rational,
    ) -> Result<WeylElement> {
        let iterates = self.ad_iterates(x, w)?;
        let mut t_pow = Rational::one();
        let mut total = WeylElement::zero();
        for (n, it) in iterates.iter().enumerate() {
            total = &total + &it.scale_rat(&(&t_pow / factorial_q(n as u32)));
            t_pow *= t;
        }
        Ok(total)
    }
}

pub fn normal_mul(a: &WeylElement, b: &WeylElement) -> WeylElement {
    Algebra::formal().mul(a, b)
}

pub fn commutator(a: &WeylElement, b: &WeylElement) -> WeylElement {
    Algebra::formal().commutator(a, b)
}

pub fn anticommutator(a: &WeylElement, b: &WeylElement) -> WeylElement {
    Algebra::formal().anticommutator(a, b)
}

pub fn nested_commutator(w: &WeylElement, v: &WeylElement, n: u32) -> WeylElement {
    Algebra::formal().nested_commutator(w, v, n)
}

pub fn nested_anticommutator(w: &WeylElement, v: &WeylElement, n: u32) -> WeylElement {
    Algebra::formal().nested_anticommutator(w, v, n)
}

pub fn left_nested_commutator(h: &WeylElement, x: &WeylElement, n: u32) -> WeylElement {
    Algebra::formal().left_nested_commutator(h, x, n)
}

pub fn poly_of_element(poly: &RatPoly, w: &WeylElement) -> WeylElement {
    Algebra::formal().poly_of_element(poly, w)
}

pub fn hadamard_conjugate(x: &WeylElement, w: &WeylElement, t: &Rational) -> Result<WeylElement> {
    Algebra::formal().hadamard_conjugate(x, w, t)
}

/// `H = (p² + q²)/2` in the oscillator algebra (`c = −i`).
#[derive(Debug, Clone)]
pub struct Hamiltonian {
    algebra: Algebra,
    element: WeylElement,
}

impl Default for Hamiltonian {
    fn default() -> Self {
        Self::new()
    }
}

impl Hamiltonian {
    pub fn new() -> Self {
        let algebra = Algebra::oscillator();
        let half = Rational::new(1.into(), 2.into());
        let element =
            (&WeylElement::monomial(0, 2) + &WeylElement::monomial(2, 0)).scale_rat(&half);
        let i = GaussianRational::i();
        assert_eq!(
            algebra.commutator(&WeylElement::q(), &element),
            WeylElement::p().scale_gauss(&i),
            "[q, H] = i p"
        );
        assert_eq!(
            algebra.commutator(&WeylElement::p(), &element),
            WeylElement::q().scale_gauss(&-i),
            "[p, H] = -i q"
        );
        Self { algebra, element }
    }

    pub fn element(&self) -> &WeylElement {
        &self.element
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    /// `H + s` for a rational shift `s`.
    pub fn shifted(&self, s: &Rational) -> WeylElement {
        &self.element + &WeylElement::from_rational(s.clone())
    }

    /// `{q, H}_n` with `{q, H}_0 = q`.
    pub fn nested_anticomm_q(&self, n: u32) -> WeylElement {
        self.algebra
            .nested_anticommutator(&WeylElement::q(), &self.element, n)
    }

    /// `({q, H} + a)_n = Σ_k C(n,k) a^{n−k} {q, H}_k`.
    pub fn shifted_nested_anticomm(&self, a: &Rational, n: u32) -> WeylElement {
        self.algebra
            .shifted_nested_anticomm(&WeylElement::q(), &self.element, a, n)
    }
}

fn fmt_monomial(q_exp: u32, p_exp: u32) -> String {
    let factor = |name: char, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        e => Some(format!("{name}^{e}")),
    };
    [factor('q', q_exp), factor('p', p_exp)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Terms `coeff * q^a p^b` joined by `" + "`, sorted by `(a, b)`.
/// Multi-term coefficients are parenthesized; unit exponents are elided.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&(a, b), coeff)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mono = fmt_monomial(a, b);
            let multi = coeff.terms().count() > 1;
            match (mono.is_empty(), multi) {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "({coeff}) * {mono}")?,
                (false, false) => write!(f, "{coeff} * {mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A word of generator powers such as `q^2 p` or `p q`, multiplied out formally.
fn parse_word(word: &str) -> Result<WeylElement> {
    let mut acc = WeylElement::one();
    for token in word.split_whitespace() {
        let (name, exp) = match token.split_once('^') {
            Some((name, e)) => (
                name,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in {token:?}")))?,
            ),
            None => (token, 1),
        };
        let factor = match name {
            "q" => WeylElement::monomial(exp, 0),
            "p" => WeylElement::monomial(0, exp),
            other => return Err(Error::Parse(format!("unknown generator {other:?}"))),
        };
        acc = normal_mul(&acc, &factor);
    }
    Ok(acc)
}

/// Parses the rendered form. Monomial words need not be normal-ordered:
/// `p q` is read as the product and normal-ordered with formal `c`.
impl FromStr for WeylElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut total = WeylElement::zero();
        for term in text::split_top_level(s, " + ") {
            let term = term.trim();
            let parts = text::split_top_level(term, " * ");
            let element = match parts.as_slice() {
                [single] if single.starts_with(['q', 'p']) => parse_word(single)?,
                [single] => WeylElement::scalar(single.parse()?),
                [coeff, word] => parse_word(word)?.scale(&coeff.parse()?),
                _ => return Err(Error::Parse(format!("malformed term {term:?}"))),
            };
            total = &total + &element;
        }
        Ok(total)
    }
}
