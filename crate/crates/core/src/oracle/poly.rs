//! Dense integer polynomials and rational functions in one indeterminate.
//!
//! `R(nat+)` is isomorphic to the polynomials with zero constant term via
//! `n ↦ xⁿ`, and its fraction field embeds in `ℚ(x)`. These types are the
//! reference model for that correspondence and double as the target field
//! for homomorphism lifts.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::formal::CanonicalSum;
use crate::semigroup::{Element, Semigroup};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c·xᵏ`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        let mut p = Self::new(self.coeffs.iter().map(|c| c / &g).collect());
        if p.leading().is_some_and(Signed::is_negative) {
            p = p.neg();
        }
        p
    }

    /// Pseudo-remainder of `self` by `divisor`.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        while let Some(deg) = r.degree().filter(|&k| k >= d) {
            let top = r.leading().expect("nonzero").clone();
            r = r.scale(&lead).sub(&divisor.mul(&Self::monomial(top, deg - d)));
        }
        r
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact division; `None` if `divisor` does not divide `self` over ℤ.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(deg) = r.degree().filter(|&k| k >= d) {
            let (quot, rem) = r.leading()?.div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&divisor.mul(&Self::monomial(quot.clone(), deg - d)));
            q[deg - d] = quot;
        }
        r.is_zero().then(|| Self::new(q))
    }

    fn write_in(&self, var: &str, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if k == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => f.write_str(var)?,
                _ => write!(f, "{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_in("x", f)
    }
}

fn require_naturals(h: &Semigroup) -> Result<()> {
    if *h == Semigroup::naturals() {
        Ok(())
    } else {
        Err(Error::WrongHandle {
            expected: "nat+".into(),
            found: h.id().to_owned(),
        })
    }
}

/// Maps a sum over `nat+` to the polynomial `Σ c_n xⁿ`.
pub fn to_poly(x: &CanonicalSum) -> Result<IntPolynomial> {
    require_naturals(x.handle())?;
    let mut coeffs = Vec::new();
    for (e, c) in x.terms() {
        let Element::Natural(n) = e else {
            unreachable!("nat+ elements are naturals")
        };
        let n = usize::try_from(*n).expect("degree fits in memory");
        if coeffs.len() <= n {
            coeffs.resize(n + 1, BigInt::zero());
        }
        coeffs[n] = c.clone();
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Inverse of [`to_poly`]; the constant term must vanish.
pub fn from_poly(h: &Semigroup, p: &IntPolynomial) -> Result<CanonicalSum> {
    require_naturals(h)?;
    if !p.coeff(0).is_zero() {
        return Err(Error::MalformedSpec(format!("{p} has a nonzero constant term")));
    }
    let terms = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (Element::Natural(k as u64), c.clone()));
    CanonicalSum::from_terms(h, terms)
}

/// Quotient of integer polynomials with nonzero denominator, compared by
/// cross-multiplication.
#[derive(Debug, Clone)]
pub struct RatFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl PartialEq for RatFunction {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for RatFunction {}

impl RatFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunction { num, den })
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        RatFunction {
            num: p,
            den: IntPolynomial::constant(1),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPolynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::constant(0)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate.
    pub fn t() -> Self {
        Self::from_poly(IntPolynomial::x())
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == self.den.mul(&other.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunction {
            num: self.num.mul(&other.den).add(&self.den.mul(&other.num)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn neg(&self) -> Self {
        RatFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Lowest terms: numerator and denominator divided by their gcd (up to
    /// an integer content that is also cancelled), denominator with
    /// positive leading coefficient.
    pub fn reduced(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = self.num.gcd(&self.den);
        let mut num = self.num.exact_div(&g).expect("gcd divides numerator");
        let mut den = self.den.exact_div(&g).expect("gcd divides denominator");
        let c = num.content().gcd(&den.content());
        num = IntPolynomial::new(num.coeffs.iter().map(|x| x / &c).collect());
        den = IntPolynomial::new(den.coeffs.iter().map(|x| x / &c).collect());
        if den.leading().is_some_and(Signed::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        RatFunction { num, den }
    }

    /// Parses expressions in `t` built from integers, `+ - * /`, `^` with a
    /// nonnegative integer exponent, and parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = RatParser {
            chars: text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(),
            pos: 0,
        };
        let value = p.expr()?;
        if p.pos < p.chars.len() {
            return Err(p.error("unexpected input"));
        }
        Ok(value)
    }
}

impl fmt::Display for RatFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        if r.den == IntPolynomial::constant(1) {
            r.num.write_in("t", f)
        } else {
            f.write_str("(")?;
            r.num.write_in("t", f)?;
            f.write_str(")/(")?;
            r.den.write_in("t", f)?;
            f.write_str(")")
        }
    }
}

struct RatParser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl RatParser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, message: &str) -> Error {
        let pos = self.chars.get(self.pos).map_or(usize::MAX, |&(i, _)| i);
        Error::Syntax {
            pos: if pos == usize::MAX {
                self.chars.last().map_or(0, |&(i, _)| i + 1)
            } else {
                pos
            },
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<RatFunction> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunction> {
        let mut acc = self.factor()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if op == '*' {
                acc.mul(&rhs)
            } else {
                acc.div(&rhs).map_err(|_| self.error("division by zero"))?
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunction> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(digits.parse().expect("digits"))
    }

    fn base(&mut self) -> Result<RatFunction> {
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(RatFunction::t())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunction::constant(self.integer()?)),
            _ => Err(self.error("expected `t`, an integer or `(`")),
        }
    }
}
