//! Sparse multivariate polynomials over [`ExactScalar`] in a fixed alphabet.
//!
//! The alphabet is closed: `z1 z2 u v x y t r1 s1 r2 s2`. Exponent vectors are
//! fixed-width arrays and terms are kept in a `BTreeMap` ordered
//! graded-lexicographically, so iteration and serialization are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::error::PolyError;
use crate::exact::ExactScalar;

pub const NVARS: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    Z1,
    Z2,
    U,
    V,
    X,
    Y,
    T,
    R1,
    S1,
    R2,
    S2,
}

impl Variable {
    pub const ALL: [Variable; NVARS] = [
        Variable::Z1,
        Variable::Z2,
        Variable::U,
        Variable::V,
        Variable::X,
        Variable::Y,
        Variable::T,
        Variable::R1,
        Variable::S1,
        Variable::R2,
        Variable::S2,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Variable::Z1 => "z1",
            Variable::Z2 => "z2",
            Variable::U => "u",
            Variable::V => "v",
            Variable::X => "x",
            Variable::Y => "y",
            Variable::T => "t",
            Variable::R1 => "r1",
            Variable::S1 => "s1",
            Variable::R2 => "r2",
            Variable::S2 => "s2",
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variable {
    type Err = PolyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variable::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| PolyError::UnknownVariable(s.to_string()))
    }
}

/// Exponent vector, one entry per alphabet variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial::one().with(v, 1)
    }

    pub fn with(mut self, v: Variable, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }

    pub fn exponent(&self, v: Variable) -> u16 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn degree_in(&self, vars: &[Variable]) -> u32 {
        vars.iter().map(|&v| u32::from(self.exponent(v))).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn product(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += *b;
        }
        out
    }

    fn text(&self) -> String {
        let mut parts = Vec::new();
        for v in Variable::ALL {
            match self.exponent(v) {
                0 => {}
                1 => parts.push(v.name().to_string()),
                e => parts.push(format!("{}^{e}", v.name())),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then exponents in alphabet order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, ExactScalar>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        SparsePoly::term(Monomial::one(), c)
    }

    pub fn var(v: Variable) -> Self {
        SparsePoly::term(Monomial::var(v), ExactScalar::one())
    }

    pub fn term(m: Monomial, c: ExactScalar) -> Self {
        let mut p = SparsePoly::zero();
        p.add_term(m, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, ExactScalar)>>(terms: I) -> Self {
        let mut p = SparsePoly::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: &ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactScalar)> {
        self.terms.iter()
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

    pub fn coeff(&self, m: &Monomial) -> ExactScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> ExactScalar {
        self.coeff(&Monomial::one())
    }

    /// Total degree; −1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.total_degree()))
            .max()
            .unwrap_or(-1)
    }

    /// Degree in a single variable; −1 for the zero polynomial.
    pub fn degree_in(&self, v: Variable) -> i64 {
        self.terms
            .keys()
            .map(|m| i64::from(m.exponent(v)))
            .max()
            .unwrap_or(-1)
    }

    /// Variables that occur with a positive exponent.
    pub fn variables(&self) -> Vec<Variable> {
        Variable::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exponent(v) > 0))
            .collect()
    }

    pub fn scale(&self, c: &ExactScalar) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, v: Variable) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let factor = ExactScalar::from_int(i64::from(e));
            out.add_term(m.with(v, e - 1), &(c * &factor));
        }
        out
    }

    /// Simultaneous affine substitution; unmapped variables are left alone.
    pub fn substitute(&self, map: &AffineMap) -> SparsePoly {
        let mut images: BTreeMap<Variable, Vec<SparsePoly>> = BTreeMap::new();
        for (&v, form) in &map.images {
            let max_e = self.degree_in(v).max(0) as usize;
            let base = form.to_poly();
            let mut powers = Vec::with_capacity(max_e + 1);
            powers.push(SparsePoly::one());
            for k in 1..=max_e {
                let next = &powers[k - 1] * &base;
                powers.push(next);
            }
            images.insert(v, powers);
        }
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut acc = SparsePoly::zero();
            acc.add_term(Monomial::one(), c);
            for (v, powers) in &images {
                let e = rest.exponent(*v);
                rest = rest.with(*v, 0);
                if e > 0 {
                    acc = &acc * &powers[usize::from(e)];
                }
            }
            for (am, ac) in acc.terms {
                out.add_term(am.product(&rest), &ac);
            }
        }
        out
    }

    /// `exp(c·∂_a∂_b) p = Σ_k c^k/k! ∂_a^k ∂_b^k p`, which terminates on
    /// polynomials after `min(deg_a p, deg_b p)` steps.
    pub fn mixed_exp_operator(&self, c: &ExactScalar, a: Variable, b: Variable) -> SparsePoly {
        let mut result = self.clone();
        let mut current = self.clone();
        let mut k = 1i64;
        loop {
            current = current.partial_derivative(a).partial_derivative(b);
            if current.is_zero() {
                return result;
            }
            current = current.scale(&(c * &ExactScalar::ratio(1, k)));
            result = &result + &current;
            k += 1;
        }
    }

    /// Product with every term of total degree `> max_degree` in `svars` dropped.
    pub fn series_mul(
        &self,
        other: &SparsePoly,
        svars: &[Variable],
        max_degree: u32,
    ) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            let da = ma.degree_in(svars);
            if da > max_degree {
                continue;
            }
            for (mb, cb) in &other.terms {
                if da + mb.degree_in(svars) > max_degree {
                    continue;
                }
                out.add_term(ma.product(mb), &(ca * cb));
            }
        }
        out
    }

    /// `Σ_{k=0}^{D} p^k/k!` truncated at total degree `D` in `svars`.
    /// Every term of `p` must have positive degree in `svars`.
    pub fn series_exp(&self, svars: &[Variable], max_degree: u32) -> Result<SparsePoly, PolyError> {
        if self.terms.keys().any(|m| m.degree_in(svars) == 0) {
            return Err(PolyError::SeriesConstantTerm);
        }
        let mut result = SparsePoly::one();
        let mut power = SparsePoly::one();
        for k in 1..=max_degree {
            power = power
                .series_mul(self, svars, max_degree)
                .scale(&ExactScalar::ratio(1, i64::from(k)));
            if power.is_zero() {
                break;
            }
            result = &result + &power;
        }
        Ok(result)
    }

    /// The polynomial in the remaining variables that multiplies the monomial
    /// given by `assignment` (variables not listed are untouched).
    pub fn coefficient_of(&self, assignment: &[(Variable, u16)]) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            if assignment.iter().all(|&(v, e)| m.exponent(v) == e) {
                let rest = assignment.iter().fold(*m, |acc, &(v, _)| acc.with(v, 0));
                out.add_term(rest, c);
            }
        }
        out
    }

    pub fn evaluate(
        &self,
        point: &BTreeMap<Variable, ExactScalar>,
    ) -> Result<ExactScalar, PolyError> {
        for v in self.variables() {
            if !point.contains_key(&v) {
                return Err(PolyError::UnboundVariable(v));
            }
        }
        let mut powers: BTreeMap<(Variable, u16), ExactScalar> = BTreeMap::new();
        let mut total = ExactScalar::zero();
        for (m, c) in &self.terms {
            let mut acc = c.clone();
            for v in Variable::ALL {
                let e = m.exponent(v);
                if e == 0 {
                    continue;
                }
                let pw = powers
                    .entry((v, e))
                    .or_insert_with(|| point[&v].pow(u32::from(e)));
                acc = &acc * pw;
            }
            total += &acc;
        }
        Ok(total)
    }

    /// Floating evaluation by nested Horner schemes, one variable at a time.
    pub fn evaluate_float(
        &self,
        point: &BTreeMap<Variable, Complex64>,
    ) -> Result<Complex64, PolyError> {
        for v in self.variables() {
            if !point.contains_key(&v) {
                return Err(PolyError::UnboundVariable(v));
            }
        }
        let terms: Vec<(Monomial, Complex64)> = self
            .terms
            .iter()
            .map(|(m, c)| Ok((*m, c.to_complex()?)))
            .collect::<Result<_, PolyError>>()?;
        Ok(horner(&terms, 0, point))
    }

    pub fn conjugate_coefficients(&self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.conj())).collect(),
        }
    }

    /// Rename variables by permutation; entries not listed keep their place.
    pub fn rename(&self, pairs: &[(Variable, Variable)]) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut next = *m;
            for &(from, _) in pairs {
                next = next.with(from, 0);
            }
            for &(from, to) in pairs {
                next = next.with(to, next.exponent(to) + m.exponent(from));
            }
            out.add_term(next, c);
        }
        out
    }

    /// `{"terms":[{"exp":{"z1":1},"coeff":"…"}]}`, leading term first.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut exp = serde_json::Map::new();
                for v in Variable::ALL {
                    let e = m.exponent(v);
                    if e > 0 {
                        exp.insert(v.name().to_string(), json!(e));
                    }
                }
                json!({"exp": exp, "coeff": c.to_string()})
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<SparsePoly, PolyError> {
        let bad = |what: &str| PolyError::Json(what.to_string());
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"terms\" array"))?;
        let mut p = SparsePoly::zero();
        for term in terms {
            let exp = term
                .get("exp")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("term without \"exp\" object"))?;
            let mut m = Monomial::one();
            for (name, e) in exp {
                let v: Variable = name.parse()?;
                let e = e
                    .as_u64()
                    .and_then(|e| u16::try_from(e).ok())
                    .ok_or_else(|| bad("exponent is not a small nonnegative integer"))?;
                m = m.with(v, e);
            }
            let coeff: ExactScalar = term
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("term without \"coeff\" string"))?
                .parse()?;
            p.add_term(m, &coeff);
        }
        Ok(p)
    }
}

fn horner(
    terms: &[(Monomial, Complex64)],
    var: usize,
    point: &BTreeMap<Variable, Complex64>,
) -> Complex64 {
    if terms.is_empty() {
        return Complex64::new(0.0, 0.0);
    }
    if var == NVARS {
        return terms.iter().map(|(_, c)| *c).sum();
    }
    let v = Variable::ALL[var];
    let mut by_exponent: BTreeMap<u16, Vec<(Monomial, Complex64)>> = BTreeMap::new();
    for (m, c) in terms {
        by_exponent.entry(m.exponent(v)).or_default().push((*m, *c));
    }
    let max_e = *by_exponent.keys().next_back().unwrap();
    if max_e == 0 {
        return horner(terms, var + 1, point);
    }
    let x = point[&v];
    let mut acc = Complex64::new(0.0, 0.0);
    for e in (0..=max_e).rev() {
        acc *= x;
        if let Some(group) = by_exponent.get(&e) {
            acc += horner(group, var + 1, point);
        }
    }
    acc
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let several = self.len() > 1;
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let ctext = c.to_string();
            let compound = ctext[1..].contains(['+', '-']) || ctext.starts_with('(');
            let text = if m.is_one() {
                if compound && several {
                    format!("({ctext})")
                } else {
                    ctext
                }
            } else if c.is_one() {
                m.text()
            } else if (-c).is_one() {
                format!("-{}", m.text())
            } else if compound {
                format!("({ctext})*{}", m.text())
            } else {
                format!("{ctext}*{}", m.text())
            };
            if k > 0 && !text.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&text)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.product(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&ExactScalar::from_int(-1))
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<ExactScalar> for SparsePoly {
    fn from(c: ExactScalar) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<Variable> for SparsePoly {
    fn from(v: Variable) -> Self {
        SparsePoly::var(v)
    }
}

impl From<BigInt> for SparsePoly {
    fn from(n: BigInt) -> Self {
        SparsePoly::constant(n.into())
    }
}

impl From<BigRational> for SparsePoly {
    fn from(q: BigRational) -> Self {
        SparsePoly::constant(q.into())
    }
}

/// `Σ cᵢ·vᵢ + constant`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearForm {
    pub terms: Vec<(Variable, ExactScalar)>,
    pub constant: ExactScalar,
}

impl LinearForm {
    pub fn new() -> Self {
        LinearForm::default()
    }

    pub fn var(v: Variable) -> Self {
        LinearForm::new().plus(v, ExactScalar::one())
    }

    pub fn plus(mut self, v: Variable, c: ExactScalar) -> Self {
        self.terms.push((v, c));
        self
    }

    pub fn offset(mut self, c: ExactScalar) -> Self {
        self.constant += &c;
        self
    }

    pub fn to_poly(&self) -> SparsePoly {
        let mut p = SparsePoly::constant(self.constant.clone());
        for (v, c) in &self.terms {
            p.add_term(Monomial::var(*v), c);
        }
        p
    }
}

/// A simultaneous substitution `v ↦ linear form` for some alphabet variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AffineMap {
    images: BTreeMap<Variable, LinearForm>,
}

impl AffineMap {
    pub fn new() -> Self {
        AffineMap::default()
    }

    pub fn with(mut self, v: Variable, image: LinearForm) -> Self {
        self.images.insert(v, image);
        self
    }

    /// `v ↦ v + c` for each listed pair.
    pub fn shift(pairs: &[(Variable, ExactScalar)]) -> Self {
        pairs.iter().fold(AffineMap::new(), |map, (v, c)| {
            map.with(*v, LinearForm::var(*v).offset(c.clone()))
        })
    }
}
