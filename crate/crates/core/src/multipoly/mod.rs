//! Sparse multivariate polynomials over the rationals.
//!
//! Monomials are totally ordered by deg-lex with x1 > x2 > ... > xm; the
//! leading term of a polynomial is its maximal monomial in that order. The
//! module also provides the contraction action g(d1,...,dm) applied to a
//! polynomial, the associated pairing, dual-basis coordinate extraction and
//! deterministic monomial frame enumeration.

mod parse;

pub use parse::{parse, parse_with_names, ParseError};

use crate::exactlin::Rational;
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial has {0} variables, expected {1}")]
    VariableCountMismatch(usize, usize),
    #[error("term {0} lies outside the coordinate frame")]
    TermOutsideFrame(String),
    #[error("variable index {0} out of range 1..={1}")]
    VariableOutOfRange(usize, usize),
}

/// A power product of the variables, with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars])
    }

    /// The single variable x_{index+1} (0-based index).
    pub fn variable(num_vars: usize, index: usize) -> Self {
        let mut exps = vec![0; num_vars];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Componentwise difference self - other, when other divides self.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        let mut exps = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial::new(exps))
    }

    /// alpha! as a big integer.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.exponents {
            for k in 2..=e {
                acc *= BigInt::from(k);
            }
        }
        acc
    }

    /// Falling factorial alpha!/(alpha-beta)! used by the contraction; the
    /// caller guarantees beta divides alpha.
    fn contraction_factor(&self, beta: &Monomial) -> BigInt {
        let mut acc = BigInt::one();
        for (&a, &b) in self.exponents.iter().zip(&beta.exponents) {
            for k in (a - b + 1)..=a {
                acc *= BigInt::from(k);
            }
        }
        acc
    }

    /// Re-embed into a ring with more variables (existing variables keep
    /// their indices, optionally shifted right by `offset`).
    pub fn embed(&self, num_vars: usize, offset: usize) -> Monomial {
        assert!(self.num_vars() + offset <= num_vars);
        let mut exps = vec![0; num_vars];
        exps[offset..offset + self.num_vars()].copy_from_slice(&self.exponents);
        Monomial::new(exps)
    }
}

/// Deg-lex with x1 > ... > xm: compare total degree first, then exponent
/// vectors lexicographically.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_monomial(self, None))
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: Option<&[String]>) -> String {
    if m.is_constant() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (i, &e) in m.exponents.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = match names {
            Some(ns) => ns[i].clone(),
            None => format!("x{}", i + 1),
        };
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(format!("{}^{}", name, e));
        }
    }
    parts.join(" ")
}

/// Sparse polynomial with exact rational coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    num_vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(num_vars: usize) -> Self {
        Poly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Self {
        let mut p = Poly::zero(num_vars);
        p.add_term(Monomial::one(num_vars), c);
        p
    }

    pub fn monomial(num_vars: usize, m: Monomial) -> Self {
        let mut p = Poly::zero(num_vars);
        p.add_term(m, Rational::one());
        p
    }

    /// The variable x_{index+1} (0-based index).
    pub fn variable(num_vars: usize, index: usize) -> Self {
        Poly::monomial(num_vars, Monomial::variable(num_vars, index))
    }

    pub fn from_terms(num_vars: usize, terms: Vec<(Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(num_vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Rational> {
        self.terms.get(m)
    }

    /// Total degree; undefined (None) for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Largest monomial in deg-lex order; None for the zero polynomial.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        debug_assert_eq!(m.num_vars(), self.num_vars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.num_vars);
        }
        Poly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// self -= c * other, in place.
    pub fn sub_scaled(&mut self, c: &Rational, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), -(c * v));
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.num_vars, other.num_vars);
        let mut out = Poly::zero(self.num_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    /// Discard all terms of degree strictly above `d`.
    pub fn truncate_above(&self, d: u32) -> Poly {
        Poly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to x_{var+1} (0-based index).
    pub fn derivative(&self, var: usize) -> Poly {
        assert!(var < self.num_vars, "variable index out of range");
        let mut out = Poly::zero(self.num_vars);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] = e - 1;
            out.add_term(Monomial::new(exps), c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Contraction g(d1,...,dm) applied to self, term by term:
    /// x^b acting on x^a gives (a!/(a-b)!) x^(a-b) when b divides a, else 0.
    pub fn contract(g: &Poly, p: &Poly) -> Poly {
        debug_assert_eq!(g.num_vars, p.num_vars);
        let mut out = Poly::zero(p.num_vars);
        for (mg, cg) in &g.terms {
            for (mp, cp) in &p.terms {
                if let Some(q) = mp.checked_div(mg) {
                    let factor = Rational::from_integer(mp.contraction_factor(mg));
                    out.add_term(q, cg * cp * factor);
                }
            }
        }
        out
    }

    /// The pairing (g, p) -> (g contracted into p)(0). Monomials pair to zero
    /// unless equal, and <x^a, x^a> = a!.
    pub fn pairing(g: &Poly, p: &Poly) -> Rational {
        debug_assert_eq!(g.num_vars, p.num_vars);
        let mut acc = Rational::zero();
        for (m, cg) in &g.terms {
            if let Some(cp) = p.terms.get(m) {
                acc += cg * cp * Rational::from_integer(m.factorial());
            }
        }
        acc
    }

    /// Homogeneous part of top degree.
    pub fn leading_form(&self) -> Result<Poly, PolyError> {
        let d = self.degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    pub fn homogeneous_component(&self, d: u32) -> Poly {
        Poly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.keys().all(|m| m.degree() == d),
        }
    }

    /// Coordinates of self in the dual basis { x^a / a! } of the frame:
    /// the entry for x^a is a! times the plain coefficient. Every term of
    /// self must lie inside the frame.
    pub fn dual_coeff_vector(&self, frame: &MonomialFrame) -> Result<Vec<Rational>, PolyError> {
        let mut out = vec![Rational::zero(); frame.len()];
        for (m, c) in &self.terms {
            let idx = frame
                .position(m)
                .ok_or_else(|| PolyError::TermOutsideFrame(format_monomial(m, None)))?;
            out[idx] = c * Rational::from_integer(m.factorial());
        }
        Ok(out)
    }

    /// Plain coefficient vector over the frame; terms must lie inside it.
    pub fn coeff_vector(&self, frame: &MonomialFrame) -> Result<Vec<Rational>, PolyError> {
        let mut out = vec![Rational::zero(); frame.len()];
        for (m, c) in &self.terms {
            let idx = frame
                .position(m)
                .ok_or_else(|| PolyError::TermOutsideFrame(format_monomial(m, None)))?;
            out[idx] = c.clone();
        }
        Ok(out)
    }

    /// Rebuild a polynomial from dual-basis coordinates over a frame.
    pub fn from_dual_coeff_vector(frame: &MonomialFrame, coords: &[Rational]) -> Poly {
        assert_eq!(coords.len(), frame.len());
        let mut p = Poly::zero(frame.num_vars());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let m = frame.monomial(i).clone();
                let fact = Rational::from_integer(m.factorial());
                p.add_term(m, c / fact);
            }
        }
        p
    }

    pub fn from_coeff_vector(frame: &MonomialFrame, coords: &[Rational]) -> Poly {
        assert_eq!(coords.len(), frame.len());
        let mut p = Poly::zero(frame.num_vars());
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(frame.monomial(i).clone(), c.clone());
            }
        }
        p
    }

    /// Re-embed into a ring with more variables.
    pub fn embed(&self, num_vars: usize, offset: usize) -> Poly {
        let mut p = Poly::zero(num_vars);
        for (m, c) in &self.terms {
            p.add_term(m.embed(num_vars, offset), c.clone());
        }
        p
    }

    pub fn to_string_with_names(&self, names: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // Leading term first: iterate monomials in descending deg-lex order.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = if abs.is_one() && !m.is_constant() {
                String::new()
            } else {
                abs.to_string()
            };
            let mono_part = if m.is_constant() {
                String::new()
            } else {
                format_monomial(m, names)
            };
            match (coeff_part.is_empty(), mono_part.is_empty()) {
                (true, _) => out.push_str(&mono_part),
                (false, true) => out.push_str(&coeff_part),
                (false, false) => {
                    out.push_str(&coeff_part);
                    out.push(' ');
                    out.push_str(&mono_part);
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with_names(None))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Whether a frame lists the monomials of one exact degree or of all degrees
/// up to a bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FrameMode {
    Exact,
    UpTo,
}

/// Deterministic ordered list of monomials: ascending by degree, and within
/// a degree in descending lex order (x1^d first), matching deg-lex with
/// x1 > ... > xm.
#[derive(Clone)]
pub struct MonomialFrame {
    num_vars: usize,
    degree: u32,
    mode: FrameMode,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl MonomialFrame {
    pub fn new(num_vars: usize, degree: u32, mode: FrameMode) -> Self {
        assert!(num_vars >= 1, "frame needs at least one variable");
        let mut monomials = Vec::new();
        match mode {
            FrameMode::Exact => collect_degree(num_vars, degree, &mut monomials),
            FrameMode::UpTo => {
                for d in 0..=degree {
                    collect_degree(num_vars, d, &mut monomials);
                }
            }
        }
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonomialFrame {
            num_vars,
            degree,
            mode,
            monomials,
            index,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mode(&self) -> FrameMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Number of frame monomials of degree strictly below `d` (for UpTo
    /// frames these occupy a prefix).
    pub fn prefix_len_below(&self, d: u32) -> usize {
        self.monomials.iter().take_while(|m| m.degree() < d).count()
    }
}

/// All monomials of exact degree d in descending lex order.
fn collect_degree(num_vars: usize, degree: u32, out: &mut Vec<Monomial>) {
    let mut exps = vec![0u32; num_vars];
    fill_degree(num_vars, degree, 0, &mut exps, out);
}

fn fill_degree(num_vars: usize, remaining: u32, var: usize, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if var == num_vars - 1 {
        exps[var] = remaining;
        out.push(Monomial::new(exps.clone()));
        exps[var] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e;
        fill_degree(num_vars, remaining - e, var + 1, exps, out);
    }
    exps[var] = 0;
}
