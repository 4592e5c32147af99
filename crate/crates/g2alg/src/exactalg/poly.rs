//! Sparse multivariate polynomials over explicit variable sets.
//!
//! A [`MultiPoly`] stores a map from dense exponent vectors to nonzero
//! rational coefficients. Every polynomial carries its [`VarSet`]; two
//! polynomials combine only when their variable sets are identical, with
//! one deliberate exception — a polynomial over the *empty* variable set
//! is a plain rational constant and lifts canonically into any ring. That
//! single embedding keeps generic scalar code (which needs a context-free
//! `zero()` and `one()`) honest without ever aliasing named variables.
//!
//! Key operations: ring arithmetic, exponentiation, substitution,
//! rational evaluation, a parser/printer pair with a canonical text form
//! (terms in descending graded-lexicographic order, e.g.
//! `-3*t1^2*t2 - 3*t1*t2^2`), the symmetric-to-Chern rewrite [`to_chern`],
//! and the torus-weight reader [`weight_of`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::weight::WeightVector;
use super::{ExactAlgError, Rational};

/// An ordered set of variable names defining a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Arc<[String]>,
}

impl VarSet {
    /// Declares a variable set. Panics on invalid declarations (empty or
    /// duplicate names, or names that are not identifiers); use
    /// [`VarSet::try_new`] for fallible construction from user input.
    pub fn new(names: &[&str]) -> VarSet {
        Self::try_new(names).expect("invalid variable set")
    }

    /// Fallible variant of [`VarSet::new`].
    pub fn try_new(names: &[&str]) -> Result<VarSet, ExactAlgError> {
        let mut seen = std::collections::BTreeSet::new();
        for name in names {
            if !is_identifier(name) {
                return Err(ExactAlgError::InvalidVarSet(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if !seen.insert(*name) {
                return Err(ExactAlgError::InvalidVarSet(format!(
                    "duplicate variable `{name}`"
                )));
            }
        }
        Ok(VarSet {
            names: names.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// The empty variable set: its polynomials are plain constants.
    pub fn empty() -> VarSet {
        VarSet {
            names: Arc::from(Vec::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Position of `name` in the declared order.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(", "))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Sparse multivariate polynomial with rational coefficients over an
/// explicit variable set.
#[derive(Debug, Clone)]
pub struct MultiPoly {
    vars: VarSet,
    /// Exponent vector (length `vars.len()`) -> nonzero coefficient.
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    /// The zero polynomial in the given ring.
    pub fn zero(vars: &VarSet) -> MultiPoly {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one(vars: &VarSet) -> MultiPoly {
        Self::constant(vars, Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(vars: &VarSet, value: Rational) -> MultiPoly {
        let mut p = Self::zero(vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; vars.len()], value);
        }
        p
    }

    /// The polynomial consisting of a single named variable.
    pub fn var(vars: &VarSet, name: &str) -> Result<MultiPoly, ExactAlgError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        let mut p = Self::zero(vars);
        p.terms.insert(exps, Rational::one());
        Ok(p)
    }

    /// A single term `coeff * prod(vars[i]^exps[i])`.
    pub fn term(vars: &VarSet, coeff: Rational, exps: &[u32]) -> MultiPoly {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = Self::zero(vars);
        if !coeff.is_zero() {
            p.terms.insert(exps.to_vec(), coeff);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for constants (including zero).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    /// `Some(value)` when the polynomial is constant (has no variable of
    /// positive exponent), regardless of how many variables the ring has.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (exps, coeff) = self.terms.iter().next().unwrap();
                if exps.iter().all(|&e| e == 0) {
                    Some(coeff.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Iterates over `(exponent vector, coefficient)` pairs in storage order.
    pub fn iter_terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exps: Vec<u32>, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    /// Lifts both operands into a common ring. Identical variable sets are
    /// used as-is; a constant over the empty set embeds into the other
    /// ring. Any other combination is a programming error and panics.
    fn unified(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        if self.vars == other.vars {
            (self.clone(), other.clone())
        } else if self.vars.is_empty() {
            (self.lift_into(&other.vars), other.clone())
        } else if other.vars.is_empty() {
            (self.clone(), other.lift_into(&self.vars))
        } else {
            panic!(
                "variable set mismatch: {} vs {}; operands must share a ring",
                self.vars, other.vars
            );
        }
    }

    fn lift_into(&self, vars: &VarSet) -> MultiPoly {
        debug_assert!(self.vars.is_empty());
        match self.constant_value() {
            Some(v) => MultiPoly::constant(vars, v),
            None => unreachable!("polynomial over the empty ring is constant"),
        }
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unified(other);
        for (exps, coeff) in b.terms {
            a.insert_term(exps, coeff);
        }
        a
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let (a, b) = self.unified(other);
        let mut out = MultiPoly::zero(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * k))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitutes polynomials for variables, fully expanding the result
    /// in the ring `target`. Unmapped variables pass through and must
    /// exist in `target`; every image must live in `target` (constants
    /// over the empty set are accepted).
    pub fn substitute(
        &self,
        images: &[(&str, MultiPoly)],
        target: &VarSet,
    ) -> Result<MultiPoly, ExactAlgError> {
        let mut image_of: Vec<Option<&MultiPoly>> = vec![None; self.vars.len()];
        for (name, img) in images {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
            if &img.vars != target && !img.vars.is_empty() {
                return Err(ExactAlgError::VarSetMismatch(format!(
                    "image of `{name}` lives in {} but the substitution target is {target}",
                    img.vars
                )));
            }
            image_of[idx] = Some(img);
        }
        // Unmapped variables must pass through into the target ring.
        let mut passthrough: Vec<Option<MultiPoly>> = vec![None; self.vars.len()];
        for (i, name) in self.vars.names().iter().enumerate() {
            if image_of[i].is_none() {
                let occurs = self.terms.keys().any(|e| e[i] > 0);
                if occurs {
                    if !target.contains(name) {
                        return Err(ExactAlgError::UnknownVariable(format!(
                            "{name} (unmapped and absent from the target ring {target})"
                        )));
                    }
                    passthrough[i] = Some(MultiPoly::var(target, name)?);
                }
            }
        }
        let mut out = MultiPoly::zero(target);
        for (exps, coeff) in &self.terms {
            let mut term = MultiPoly::constant(target, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let base = match (&image_of[i], &passthrough[i]) {
                    (Some(img), _) => (*img).clone(),
                    (None, Some(p)) => p.clone(),
                    (None, None) => unreachable!("variable occurs but has no image"),
                };
                term = term.mul(&base.pow(e));
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Evaluates the polynomial at rational values. Every declared
    /// variable must receive a value.
    pub fn eval_rational(&self, values: &[(&str, Rational)]) -> Result<Rational, ExactAlgError> {
        let mut value_of: Vec<Option<&Rational>> = vec![None; self.vars.len()];
        for (name, v) in values {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
            value_of[idx] = Some(v);
        }
        if let Some(i) = value_of.iter().position(|v| v.is_none()) {
            return Err(ExactAlgError::MissingAssignment(
                self.vars.name(i).to_string(),
            ));
        }
        let mut total = Rational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term *= value_of[i].unwrap();
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Parses the canonical text grammar: signed terms joined by `+`/`-`,
    /// each term a `*`-product of factors, where a factor is a rational
    /// coefficient, a `var^exp` power, or a parenthesized subexpression
    /// with an optional exponent. Examples: `-3*t1^2*t2 - 3*t1*t2^2`,
    /// `2/3*a1 + 1`, `2*(t1 + t2)^2`.
    pub fn parse(vars: &VarSet, input: &str) -> Result<MultiPoly, ExactAlgError> {
        Parser::new(vars, input).parse()
    }

    /// Exponent comparison in graded-lexicographic order (total degree
    /// first, then lexicographic in the declared variable order).
    fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        da.cmp(&db).then_with(|| a.cmp(b))
    }

    /// Terms in descending graded-lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, Rational)> {
        let mut terms: Vec<(Vec<u32>, Rational)> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        terms.sort_by(|(ea, _), (eb, _)| Self::grlex_cmp(eb, ea));
        terms
    }
}

/// Structural equality: identical variable sets and identical terms.
/// Constants compare equal across rings (the canonical embedding of the
/// empty ring makes `zero()` and `one()` ring-agnostic).
impl PartialEq for MultiPoly {
    fn eq(&self, other: &MultiPoly) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        match (self.constant_value(), other.constant_value()) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in self.sorted_terms() {
            let neg = coeff.is_negative();
            let abs = coeff.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const_term = exps.iter().all(|&e| e == 0);
            let mut wrote_factor = false;
            if !abs.is_one() || is_const_term {
                write!(f, "{abs}")?;
                wrote_factor = true;
            }
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                wrote_factor = true;
                write!(f, "{}", self.vars.name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    vars: &'a VarSet,
    input: &'a str,
    bytes: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(vars: &'a VarSet, input: &'a str) -> Parser<'a> {
        // Normalize to ASCII minus so typeset text round-trips.
        let bytes: Vec<char> = input
            .chars()
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        Parser {
            vars,
            input,
            bytes,
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ExactAlgError {
        ExactAlgError::Parse {
            input: self.input.to_string(),
            pos: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<MultiPoly, ExactAlgError> {
        let out = self.parse_expression()?;
        match self.peek() {
            None => Ok(out),
            Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
        }
    }

    fn parse_expression(&mut self) -> Result<MultiPoly, ExactAlgError> {
        let mut out = MultiPoly::zero(self.vars);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            Some(_) => 1,
            None => return Err(self.error("empty input")),
        };
        loop {
            let term = self.parse_term()?;
            out = if sign < 0 {
                out.sub(&term)
            } else {
                out.add(&term)
            };
            match self.peek() {
                None | Some(')') => break,
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => return Err(self.error(format!("expected `+` or `-`, found `{c}`"))),
            }
        }
        Ok(out)
    }

    fn parse_term(&mut self) -> Result<MultiPoly, ExactAlgError> {
        let mut product = MultiPoly::one(self.vars);
        // Every pass through the loop consumes a factor or errors out, so
        // a term is never empty.
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.parse_number()?;
                    product = product.scale(&n);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let (idx, e) = self.parse_power()?;
                    let mut exps = vec![0u32; self.vars.len()];
                    exps[idx] = e;
                    product = product.mul(&MultiPoly::term(self.vars, Rational::one(), &exps));
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.parse_expression()?;
                    if self.peek() != Some(')') {
                        return Err(self.error("expected `)`"));
                    }
                    self.pos += 1;
                    let exp = self.parse_optional_exponent()?;
                    product = product.mul(&inner.pow(exp));
                }
                Some(c) => return Err(self.error(format!("unexpected character `{c}`"))),
                None => return Err(self.error("unexpected end of input")),
            }
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(product)
    }

    fn parse_optional_exponent(&mut self) -> Result<u32, ExactAlgError> {
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.parse_integer()?;
            u32::try_from(&e).map_err(|_| self.error("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn parse_number(&mut self) -> Result<Rational, ExactAlgError> {
        let numer = self.parse_integer()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let denom = self.parse_integer()?;
            if denom.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn parse_integer(&mut self) -> Result<num::BigInt, ExactAlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.bytes[start..self.pos].iter().collect();
        digits.parse().map_err(|e| self.error(format!("{e}")))
    }

    fn parse_power(&mut self) -> Result<(usize, u32), ExactAlgError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == '_')
        {
            self.pos += 1;
        }
        let name: String = self.bytes[start..self.pos].iter().collect();
        let idx = self
            .vars
            .index_of(&name)
            .ok_or(ExactAlgError::UnknownVariable(name))?;
        let exp = self.parse_optional_exponent()?;
        Ok((idx, exp))
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// Rewrites a symmetric polynomial in two Chern roots `x1, x2` as a
/// polynomial in the Chern classes `c1 = x1 + x2`, `c2 = x1*x2`.
///
/// The input must be symmetric under swapping the two variables;
/// otherwise a [`ExactAlgError::NotSymmetric`] error reports the swapped
/// polynomial. The rewrite subtracts `c`-monomials against the
/// lexicographic leading term until nothing remains, which terminates
/// because each step strictly lowers that leading term.
pub fn to_chern(p: &MultiPoly) -> Result<MultiPoly, ExactAlgError> {
    let vars = p.vars();
    if vars.len() != 2 {
        return Err(ExactAlgError::VarSetMismatch(format!(
            "to_chern expects a two-variable ring of Chern roots, got {vars}"
        )));
    }
    // Symmetry check: swapping the two variables must fix p.
    let x1 = MultiPoly::var(vars, vars.name(0))?;
    let x2 = MultiPoly::var(vars, vars.name(1))?;
    let swapped = p.substitute(&[(vars.name(0), x2.clone()), (vars.name(1), x1.clone())], vars)?;
    if &swapped != p {
        return Err(ExactAlgError::NotSymmetric {
            original: p.to_string(),
            swapped: swapped.to_string(),
        });
    }
    let chern = VarSet::new(&["c1", "c2"]);
    let e1 = &x1 + &x2;
    let e2 = &x1 * &x2;
    let mut rest = p.clone();
    let mut out = MultiPoly::zero(&chern);
    while !rest.is_zero() {
        // Lexicographic leading exponent (x1 outranks x2); symmetry
        // guarantees i >= j there.
        let (exps, coeff) = rest
            .terms
            .iter()
            .max_by(|(ea, _), (eb, _)| ea.cmp(eb))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let (i, j) = (exps[0], exps[1]);
        debug_assert!(i >= j, "leading term of a symmetric polynomial has i >= j");
        let c_term = MultiPoly::term(&chern, coeff.clone(), &[i - j, j]);
        out = out.add(&c_term);
        let expansion = e1.pow(i - j).mul(&e2.pow(j)).scale(&coeff);
        rest = rest.sub(&expansion);
    }
    Ok(out)
}

/// Reads off the torus weight of a weight-homogeneous polynomial given a
/// weight for every variable (all in the same basis). Fails with the two
/// offending monomials when the polynomial mixes weights.
pub fn weight_of(
    p: &MultiPoly,
    weights: &[(&str, WeightVector)],
) -> Result<WeightVector, ExactAlgError> {
    let vars = p.vars();
    let mut weight_of_var: Vec<Option<&WeightVector>> = vec![None; vars.len()];
    let mut basis = None;
    for (name, w) in weights {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| ExactAlgError::UnknownVariable(name.to_string()))?;
        match basis {
            None => basis = Some(w.basis()),
            Some(b) if b == w.basis() => {}
            Some(b) => {
                return Err(ExactAlgError::BasisMismatch {
                    expected: b,
                    found: w.basis(),
                })
            }
        }
        weight_of_var[idx] = Some(w);
    }
    let fallback = basis.unwrap_or(super::weight::Basis::Alpha);
    let monomial_weight = |exps: &[u32]| -> Result<WeightVector, ExactAlgError> {
        let mut total = WeightVector::zero(fallback);
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let w = weight_of_var[i].ok_or_else(|| {
                ExactAlgError::MissingAssignment(vars.name(i).to_string())
            })?;
            total = total.add(&w.scaled(e as i64))?;
        }
        Ok(total)
    };
    let mut terms = p.terms.iter();
    let first = match terms.next() {
        // The zero polynomial is homogeneous of every weight; report it
        // as weight zero in the declared basis (or alpha by default).
        None => return Ok(WeightVector::zero(fallback)),
        Some((exps, _)) => exps.clone(),
    };
    let first_weight = monomial_weight(&first)?;
    for (exps, _) in terms {
        let w = monomial_weight(exps)?;
        if w != first_weight {
            let show = |e: &[u32]| {
                MultiPoly::term(vars, Rational::one(), e).to_string()
            };
            return Err(ExactAlgError::Inhomogeneous {
                first: show(&first),
                first_weight: first_weight.to_string(),
                second: show(exps),
                second_weight: w.to_string(),
            });
        }
    }
    Ok(first_weight)
}
