//! Sparse univariate polynomials over ℚ(i).
//!
//! One generic type serves two roles, distinguished by a marker for the
//! indeterminate: [`CPoly`] is a polynomial in the central symbol `c` (the
//! coefficient ring of the Weyl algebra), [`RatPoly`] is a polynomial in an
//! ordinary commuting variable `x` (Euler polynomials, `f(p)`, `g(q)`, ...).

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{One, Zero};

use crate::arith::{binomial_q, GaussianRational, Rational};
use crate::error::{Error, Result};
use crate::text;

pub trait Indeterminate: Copy + Eq + Hash + fmt::Debug + Default + Send + Sync + 'static {
    const NAME: char;
}

/// The central element `c = pq − qp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymC;

impl Indeterminate for SymC {
    const NAME: char = 'c';
}

/// A plain commuting variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SymX;

impl Indeterminate for SymX {
    const NAME: char = 'x';
}

/// Canonical sparse polynomial: degree → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<V: Indeterminate> {
    coeffs: BTreeMap<u32, GaussianRational>,
    _var: PhantomData<V>,
}

/// Polynomial in the central symbol `c`.
pub type CPoly = Poly<SymC>;

/// Polynomial in a commuting indeterminate.
pub type RatPoly = Poly<SymX>;

fn accumulate(map: &mut BTreeMap<u32, GaussianRational>, k: u32, g: &GaussianRational) {
    if g.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(g.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += g;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl<V: Indeterminate> Poly<V> {
    pub fn zero() -> Self {
        Self {
            coeffs: BTreeMap::new(),
            _var: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(g: GaussianRational) -> Self {
        Self::monomial(0, g)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(1, GaussianRational::one())
    }

    pub fn monomial(k: u32, g: GaussianRational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !g.is_zero() {
            coeffs.insert(k, g);
        }
        Self {
            coeffs,
            _var: PhantomData,
        }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, GaussianRational)>,
    {
        let mut coeffs = BTreeMap::new();
        for (k, g) in terms {
            accumulate(&mut coeffs, k, &g);
        }
        Self {
            coeffs,
            _var: PhantomData,
        }
    }

    /// Dense ascending rational coefficients, `[a0, a1, ...]`.
    pub fn from_rationals(dense: &[Rational]) -> Self {
        Self::from_terms(
            dense
                .iter()
                .enumerate()
                .map(|(k, r)| (k as u32, GaussianRational::real(r.clone()))),
        )
    }

    pub fn coeff(&self, k: u32) -> GaussianRational {
        self.coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &GaussianRational)> + '_ {
        self.coeffs.iter().map(|(&k, g)| (k, g))
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> GaussianRational {
        self.coeffs
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|&k| k == 0)
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(0)
    }

    /// True when every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.coeffs.values().all(GaussianRational::is_real)
    }

    pub fn scale(&self, g: &GaussianRational) -> Self {
        if g.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, a)| (k, a * g)).collect(),
            _var: PhantomData,
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(&k, a)| (k, a.scale(r))).collect(),
            _var: PhantomData,
        }
    }

    /// Multiply by `varᵏ`.
    pub fn shift_up(&self, k: u32) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, a)| (d + k, a.clone()))
                .collect(),
            _var: PhantomData,
        }
    }

    /// Exact division by `varᵏ`; `None` when a lower-degree term is present.
    pub fn shift_down(&self, k: u32) -> Option<Self> {
        if self.coeffs.keys().next().is_some_and(|&d| d < k) {
            return None;
        }
        Some(Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, a)| (d - k, a.clone()))
                .collect(),
            _var: PhantomData,
        })
    }

    /// Exact evaluation (Horner).
    pub fn eval(&self, v: &GaussianRational) -> GaussianRational {
        let Some(top) = self.degree() else {
            return GaussianRational::zero();
        };
        let mut acc = GaussianRational::zero();
        for k in (0..=top).rev() {
            acc = &acc * v;
            if let Some(a) = self.coeffs.get(&k) {
                acc += a;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .filter(|(&k, _)| k > 0)
                .map(|(&k, a)| (k - 1, a.scale(&Rational::from_integer(k.into())))),
        )
    }

    pub fn nth_derivative(&self, n: u32) -> Self {
        (0..n).fold(self.clone(), |acc, _| acc.derivative())
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        Self::from_terms(
            self.coeffs
                .iter()
                .map(|(&k, a)| (k + 1, a.scale(&Rational::new(1.into(), (k + 1).into())))),
        )
    }

    /// `P(var + a)`.
    pub fn translate(&self, a: &GaussianRational) -> Self {
        let mut out = BTreeMap::new();
        for (&k, coeff) in &self.coeffs {
            let mut a_pow = GaussianRational::one();
            for j in (0..=k).rev() {
                let term = (coeff * &a_pow).scale(&binomial_q(k, j));
                accumulate(&mut out, j, &term);
                a_pow = &a_pow * a;
            }
        }
        Self {
            coeffs: out,
            _var: PhantomData,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<'a, V: Indeterminate> Add<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn add(self, o: &Poly<V>) -> Poly<V> {
        let mut coeffs = self.coeffs.clone();
        for (&k, g) in &o.coeffs {
            accumulate(&mut coeffs, k, g);
        }
        Poly {
            coeffs,
            _var: PhantomData,
        }
    }
}

impl<'a, V: Indeterminate> Sub<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn sub(self, o: &Poly<V>) -> Poly<V> {
        let mut coeffs = self.coeffs.clone();
        for (&k, g) in &o.coeffs {
            accumulate(&mut coeffs, k, &-g);
        }
        Poly {
            coeffs,
            _var: PhantomData,
        }
    }
}

impl<'a, V: Indeterminate> Mul<&'a Poly<V>> for &'a Poly<V> {
    type Output = Poly<V>;
    fn mul(self, o: &Poly<V>) -> Poly<V> {
        let mut coeffs = BTreeMap::new();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &o.coeffs {
                accumulate(&mut coeffs, i + j, &(a * b));
            }
        }
        Poly {
            coeffs,
            _var: PhantomData,
        }
    }
}

impl<V: Indeterminate> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            coeffs: self.coeffs.iter().map(|(&k, g)| (k, -g)).collect(),
            _var: PhantomData,
        }
    }
}

impl<V: Indeterminate> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident) => {
        impl<V: Indeterminate> $tr<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, o: Poly<V>) -> Poly<V> {
                (&self).$method(&o)
            }
        }
        impl<'a, V: Indeterminate> $tr<&'a Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, o: &'a Poly<V>) -> Poly<V> {
                (&self).$method(o)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl CPoly {
    /// The formal symbol `c`.
    pub fn c() -> Self {
        Self::var()
    }

    /// Substitute a value for `c`.
    pub fn subst(&self, v: &GaussianRational) -> GaussianRational {
        self.eval(v)
    }
}

/// Evaluate `p` at `c = v`.
pub fn cpoly_subst(p: &CPoly, v: &GaussianRational) -> GaussianRational {
    p.subst(v)
}

/// Ascending powers joined by `" + "`, e.g. `1 + 4*c + 2*c^2`.
impl<V: Indeterminate> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&k, g)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{g}")?;
                continue;
            }
            if g.is_one() {
            } else if (-g).is_one() {
                write!(f, "-")?;
            } else if g.is_compound() {
                write!(f, "({g})*")?;
            } else {
                write!(f, "{g}*")?;
            }
            write!(f, "{}", V::NAME)?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl<V: Indeterminate> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_term<V: Indeterminate>(term: &str) -> Result<(u32, GaussianRational)> {
    let term = term.trim();
    let Some(pos) = term.rfind(V::NAME) else {
        return Ok((0, term.parse()?));
    };
    let exponent = match &term[pos + 1..] {
        "" => 1,
        rest => rest
            .strip_prefix('^')
            .and_then(|e| e.parse::<u32>().ok())
            .ok_or_else(|| Error::Parse(format!("bad exponent in {term:?}")))?,
    };
    let head = term[..pos].trim();
    let head = head.strip_suffix('*').unwrap_or(head).trim();
    let coeff = match head {
        "" | "+" => GaussianRational::one(),
        "-" => -GaussianRational::one(),
        other => other.parse()?,
    };
    Ok((exponent, coeff))
}

impl<V: Indeterminate> FromStr for Poly<V> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = text::strip_outer_parens(s.trim());
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        for part in text::split_top_level(s, " + ") {
            terms.push(parse_term::<V>(part)?);
        }
        Ok(Self::from_terms(terms))
    }
}
