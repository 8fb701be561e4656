//! Exact scalars in ℚ(i, √2).
//!
//! Every coefficient in this crate is an [`ExactScalar`], stored as
//! `unit + radical·√2` where both parts are [`GaussianRational`]s. Rationals
//! are reduced after every operation, so equality is structural.
//!
//! The canonical text form is also the interchange form used in JSON output:
//!
//! | value              | text               |
//! |--------------------|--------------------|
//! | 0                  | `0`                |
//! | −3/4               | `-3/4`             |
//! | 1/2 + (1/3)i       | `1/2+1/3i`         |
//! | −i                 | `-i`               |
//! | 3 − 2√2            | `3-2√2`            |
//! | (1+2i) + (3−i)√2   | `(1+2i)+(3-i)√2`   |

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ExactError;

/// Sign of a real exact value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_rational(q: &BigRational) -> Sign {
        match q.cmp(&BigRational::zero()) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

fn rational_text(q: &BigRational) -> String {
    struct R<'a>(&'a BigRational);
    impl fmt::Display for R<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_rational(f, self.0)
        }
    }
    R(q).to_string()
}

/// Text of `q` used as a coefficient in front of a symbol (`i`, `√2`, `i√2`):
/// unit coefficients collapse to the bare symbol.
fn coefficient_text(q: &BigRational, symbol: &str) -> String {
    if q.is_one() {
        symbol.to_string()
    } else if (-q).is_one() {
        format!("-{symbol}")
    } else {
        format!("{}{symbol}", rational_text(q))
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integers(re: i64, im: i64) -> Self {
        GaussianRational::new(BigInt::from(re).into(), BigInt::from(im).into())
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::from_integers(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `re² + im²`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    /// Number of nonzero components; used to decide parenthesization.
    fn parts(&self) -> usize {
        usize::from(!self.re.is_zero()) + usize::from(!self.im.is_zero())
    }

    fn text_with_symbol(&self, symbol: &str) -> String {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => coefficient_text(&self.re, symbol),
            (true, false) => coefficient_text(&self.im, &format!("i{symbol}")),
            (false, false) => format!("({self}){symbol}"),
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write_rational(f, &self.re),
            (true, false) => f.write_str(&coefficient_text(&self.im, "i")),
            (false, false) => {
                write_rational(f, &self.re)?;
                let im = coefficient_text(&self.im, "i");
                if !im.starts_with('-') {
                    f.write_str("+")?;
                }
                f.write_str(&im)
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

/// An element `unit + radical·√2` of ℚ(i, √2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactScalar {
    pub unit: GaussianRational,
    pub radical: GaussianRational,
}

impl ExactScalar {
    pub fn new(unit: GaussianRational, radical: GaussianRational) -> Self {
        ExactScalar { unit, radical }
    }

    pub fn zero() -> Self {
        ExactScalar::default()
    }

    pub fn one() -> Self {
        ExactScalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::from(BigInt::from(n))
    }

    /// The rational `num/den`. Panics if `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Self {
        ExactScalar::from(BigRational::new(num.into(), den.into()))
    }

    pub fn gaussian(re: i64, im: i64) -> Self {
        ExactScalar::from(GaussianRational::from_integers(re, im))
    }

    pub fn i() -> Self {
        ExactScalar::gaussian(0, 1)
    }

    pub fn sqrt2() -> Self {
        ExactScalar::new(
            GaussianRational::zero(),
            GaussianRational::from_integers(1, 0),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.radical.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.radical.is_zero() && self.unit.im.is_zero() && self.unit.re.is_one()
    }

    /// True when both imaginary components vanish.
    pub fn is_real(&self) -> bool {
        self.unit.im.is_zero() && self.radical.im.is_zero()
    }

    /// True when the √2 component vanishes, i.e. the value lies in ℚ(i).
    pub fn is_gaussian(&self) -> bool {
        self.radical.is_zero()
    }

    /// The value as a Gaussian rational, if it has no √2 component.
    pub fn as_gaussian(&self) -> Option<&GaussianRational> {
        self.is_gaussian().then_some(&self.unit)
    }

    /// Complex conjugation. √2 is real, so both components are conjugated.
    pub fn conj(&self) -> Self {
        ExactScalar::new(self.unit.conj(), self.radical.conj())
    }

    /// Multiplicative inverse: first rationalize the √2 part against
    /// `unit − radical·√2`, then invert the remaining Gaussian rational.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        // (a + b√2)(a − b√2) = a² − 2b², nonzero because √2 ∉ ℚ(i).
        let two = GaussianRational::from_integers(2, 0);
        let norm = &(&self.unit * &self.unit) - &(&two * &(&self.radical * &self.radical));
        let norm_inv = norm.inv()?;
        Ok(ExactScalar::new(
            &self.unit * &norm_inv,
            &(-&self.radical) * &norm_inv,
        ))
    }

    /// `self^e` by repeated squaring; `0^0 = 1`.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = ExactScalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e` for a possibly negative exponent.
    pub fn powi(&self, e: i32) -> Result<Self, ExactError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// Exact sign of a real element `a + b√2`.
    pub fn sign(&self) -> Result<Sign, ExactError> {
        if !self.is_real() {
            return Err(ExactError::NotReal(self.to_string()));
        }
        let a = &self.unit.re;
        let b = &self.radical.re;
        let (sa, sb) = (Sign::of_rational(a), Sign::of_rational(b));
        Ok(match (sa, sb) {
            (s, Sign::Zero) => s,
            (Sign::Zero, s) => s,
            (s, t) if s == t => s,
            _ => {
                // Opposite signs: the larger of a² and 2b² wins.
                let two = BigRational::from_integer(2.into());
                if a * a > &two * b * b {
                    sa
                } else {
                    sb
                }
            }
        })
    }

    /// Nearest complex double. Opposite-signed `a + b√2` combinations are
    /// evaluated as `(a² − 2b²)/(a − b√2)` to avoid cancellation.
    pub fn to_complex(&self) -> Result<Complex64, ExactError> {
        let re = real_to_f64(&self.unit.re, &self.radical.re)?;
        let im = real_to_f64(&self.unit.im, &self.radical.im)?;
        Ok(Complex64::new(re, im))
    }

    /// Real part `a` and √2-coefficient `b` of a real element.
    pub fn real_parts(&self) -> Option<(&BigRational, &BigRational)> {
        self.is_real().then_some((&self.unit.re, &self.radical.re))
    }
}

fn rational_to_f64(q: &BigRational) -> Result<f64, ExactError> {
    let v = q.to_f64().unwrap_or(f64::NAN);
    if !v.is_finite() {
        return Err(ExactError::Overflow(rational_text(q)));
    }
    Ok(v)
}

fn real_to_f64(a: &BigRational, b: &BigRational) -> Result<f64, ExactError> {
    if b.is_zero() {
        return rational_to_f64(a);
    }
    let sqrt2 = std::f64::consts::SQRT_2;
    if a.is_zero() || a.is_positive() == b.is_positive() {
        let v = rational_to_f64(a)? + rational_to_f64(b)? * sqrt2;
        return if v.is_finite() {
            Ok(v)
        } else {
            Err(ExactError::Overflow(format!(
                "{}+{}√2",
                rational_text(a),
                rational_text(b)
            )))
        };
    }
    let two = BigRational::from_integer(2.into());
    let numer = rational_to_f64(&(a * a - &two * b * b))?;
    let denom = rational_to_f64(a)? - rational_to_f64(b)? * sqrt2;
    Ok(numer / denom)
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            return fmt::Display::fmt(&self.unit, f);
        }
        let radical = self.radical.text_with_symbol("√2");
        if self.unit.is_zero() {
            return f.write_str(&radical);
        }
        if self.unit.parts() == 2 {
            write!(f, "({})", self.unit)?;
        } else {
            write!(f, "{}", self.unit)?;
        }
        if !radical.starts_with('-') {
            f.write_str("+")?;
        }
        f.write_str(&radical)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        ExactScalar::from(BigRational::from_integer(n))
    }
}

impl From<BigRational> for ExactScalar {
    fn from(q: BigRational) -> Self {
        ExactScalar::from(GaussianRational::real(q))
    }
}

impl From<GaussianRational> for ExactScalar {
    fn from(g: GaussianRational) -> Self {
        ExactScalar::new(g, GaussianRational::zero())
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_int(n)
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.unit + &rhs.unit, &self.radical + &rhs.radical)
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.unit - &rhs.unit, &self.radical - &rhs.radical)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        if self.radical.is_zero() && rhs.radical.is_zero() {
            return ExactScalar::from(&self.unit * &rhs.unit);
        }
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let bd = &self.radical * &rhs.radical;
        let unit = &(&self.unit * &rhs.unit) + &(&bd + &bd);
        let radical = &(&self.unit * &rhs.radical) + &(&self.radical * &rhs.unit);
        ExactScalar::new(unit, radical)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.unit, -&self.radical)
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.unit = &self.unit + &rhs.unit;
        if !rhs.radical.is_zero() {
            self.radical = &self.radical + &rhs.radical;
        }
    }
}

impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        self.unit = &self.unit - &rhs.unit;
        if !rhs.radical.is_zero() {
            self.radical = &self.radical - &rhs.radical;
        }
    }
}

impl MulAssign<&ExactScalar> for ExactScalar {
    fn mul_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |acc, x| &acc * &x)
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    I,
    Sqrt2,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ExactError> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        match c {
            c if c.is_whitespace() => k += 1,
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().map(|&(_, c)| c).collect();
                let n = digits.parse::<BigInt>().map_err(|_| ExactError::Parse {
                    input: input.to_string(),
                    token: digits.clone(),
                })?;
                tokens.push((pos, Token::Int(n)));
            }
            '/' => {
                tokens.push((pos, Token::Slash));
                k += 1;
            }
            '+' => {
                tokens.push((pos, Token::Plus));
                k += 1;
            }
            '-' | '−' => {
                tokens.push((pos, Token::Minus));
                k += 1;
            }
            '*' | '·' => {
                tokens.push((pos, Token::Star));
                k += 1;
            }
            'i' => {
                tokens.push((pos, Token::I));
                k += 1;
            }
            '(' => {
                tokens.push((pos, Token::LParen));
                k += 1;
            }
            ')' => {
                tokens.push((pos, Token::RParen));
                k += 1;
            }
            '√' => {
                if k + 1 < chars.len() && chars[k + 1].1 == '2' {
                    tokens.push((pos, Token::Sqrt2));
                    k += 2;
                } else {
                    return Err(ExactError::Parse {
                        input: input.to_string(),
                        token: "√".to_string(),
                    });
                }
            }
            's' if input[pos..].starts_with("sqrt2") => {
                tokens.push((pos, Token::Sqrt2));
                k += 5;
            }
            other => {
                return Err(ExactError::Parse {
                    input: input.to_string(),
                    token: other.to_string(),
                })
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    input: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn error_here(&self) -> ExactError {
        let token = match self.tokens.get(self.pos) {
            Some(&(at, _)) => {
                let rest = &self.input[at..];
                rest.chars().next().map(String::from).unwrap_or_default()
            }
            None => "<end of input>".to_string(),
        };
        ExactError::Parse {
            input: self.input.to_string(),
            token,
        }
    }

    fn expr(&mut self) -> Result<ExactScalar, ExactError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExactScalar, ExactError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc * self.factor()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    acc = acc * self.factor()?.inv()?;
                }
                Some(Token::Int(_) | Token::I | Token::Sqrt2 | Token::LParen) => {
                    acc = acc * self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ExactScalar, ExactError> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                Ok(ExactScalar::from(n))
            }
            Some(Token::I) => {
                self.pos += 1;
                Ok(ExactScalar::i())
            }
            Some(Token::Sqrt2) => {
                self.pos += 1;
                Ok(ExactScalar::sqrt2())
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.error_here());
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.error_here()),
        }
    }
}

impl FromStr for ExactScalar {
    type Err = ExactError;

    /// Parses the canonical text form, and more generally any sum of
    /// products and quotients of integers, `i`, `√2` (or `sqrt2`) and
    /// parenthesized subexpressions. Juxtaposition multiplies, so `1/3i`
    /// reads as `(1/3)·i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(ExactError::Parse {
                input: s.to_string(),
                token: "<empty>".to_string(),
            });
        }
        let mut parser = Parser {
            input: s,
            tokens,
            pos: 0,
        };
        let value = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error_here());
        }
        Ok(value)
    }
}

impl FromStr for GaussianRational {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let x: ExactScalar = s.parse()?;
        if !x.is_gaussian() {
            return Err(ExactError::NotGaussian(s.to_string()));
        }
        Ok(x.unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> ExactScalar {
        text.parse().unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(
            ExactScalar::one() * ExactScalar::sqrt2(),
            ExactScalar::sqrt2()
        );
        assert_eq!(
            ExactScalar::sqrt2() * ExactScalar::sqrt2(),
            ExactScalar::from_int(2)
        );
        assert_eq!(
            ExactScalar::i() * ExactScalar::i(),
            ExactScalar::from_int(-1)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            ExactScalar::from_int(2).inv().unwrap(),
            ExactScalar::ratio(1, 2)
        );
        assert_eq!(ExactScalar::sqrt2().inv().unwrap(), s("1/2√2"));
        let x = s("1+√2");
        let y = s("-1+√2");
        assert_eq!(&x * &y, ExactScalar::one());
        assert_eq!(x.inv().unwrap(), y);
        assert_eq!(ExactScalar::zero().inv(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn conjugation() {
        assert_eq!(ExactScalar::i().conj(), s("-i"));
        assert_eq!(s("(1+2i)+(3-i)√2").conj(), s("(1-2i)+(3+i)√2"));
        let r = s("3-2√2");
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn sign_examples() {
        assert_eq!(s("3-2√2").sign().unwrap(), Sign::Positive);
        assert_eq!(s("1-√2").sign().unwrap(), Sign::Negative);
        assert_eq!(ExactScalar::zero().sign().unwrap(), Sign::Zero);
        assert_eq!(s("-2+√2").sign().unwrap(), Sign::Negative);
        assert!(matches!(s("1+i").sign(), Err(ExactError::NotReal(_))));
    }

    #[test]
    fn float_conversion() {
        let z = s("1/2+1/2i").to_complex().unwrap();
        assert_eq!(z, Complex64::new(0.5, 0.5));
        assert_eq!(
            ExactScalar::sqrt2().to_complex().unwrap().re,
            std::f64::consts::SQRT_2
        );
        let big = ExactScalar::from(num_traits::pow(BigInt::from(10), 400));
        assert!(matches!(big.to_complex(), Err(ExactError::Overflow(_))));
        // 99 - 70√2 ≈ 0.00505; naive evaluation loses most digits.
        let tiny = s("99-70√2").to_complex().unwrap().re;
        let expected = 1.0 / (99.0 + 70.0 * std::f64::consts::SQRT_2);
        assert!((tiny - expected).abs() <= 4.0 * f64::EPSILON * expected);
    }

    #[test]
    fn canonical_text() {
        let cases = [
            ("0", "0"),
            ("-6/8", "-3/4"),
            ("1/2+1/3i", "1/2+1/3i"),
            ("0-i", "-i"),
            ("2i", "2i"),
            ("3-2√2", "3-2√2"),
            ("√2", "√2"),
            ("-√2", "-√2"),
            ("i√2", "i√2"),
            ("1/2 sqrt2", "1/2√2"),
            ("(1+2i)+(3-i)√2", "(1+2i)+(3-i)√2"),
            ("(1+i)√2", "(1+i)√2"),
            ("i + (2 - i)*sqrt2", "i+(2-i)√2"),
            ("1-1/3i", "1-1/3i"),
            ("i/3", "1/3i"),
            ("1/(1+i)", "1/2-1/2i"),
        ];
        for (input, text) in cases {
            assert_eq!(s(input).to_string(), text, "input {input}");
        }
    }

    #[test]
    fn parse_errors_name_the_token() {
        match "1+x".parse::<ExactScalar>() {
            Err(ExactError::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            "1/".parse::<ExactScalar>(),
            Err(ExactError::Parse { .. })
        ));
        assert!(matches!(
            "".parse::<ExactScalar>(),
            Err(ExactError::Parse { .. })
        ));
        assert_eq!(
            "3/0".parse::<ExactScalar>(),
            Err(ExactError::DivisionByZero)
        );
        assert!(matches!(
            "√2".parse::<GaussianRational>(),
            Err(ExactError::NotGaussian(_))
        ));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
    }
}
