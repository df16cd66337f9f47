//! Formal signed sums over a semigroup and the ring `R(H)` of their classes.
//!
//! Two formal sums are identified when one can be turned into the other by
//! cancelling `+h`/`-h` pairs and permuting entries. The net integer
//! coefficient of each element is a complete invariant of that closure, so a
//! class is stored as a sparse map `element -> nonzero coefficient`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::semigroup::{Element, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedEntry {
    pub sign: Sign,
    pub element: Element,
}

impl SignedEntry {
    pub fn new(sign: Sign, element: Element) -> Self {
        SignedEntry { sign, element }
    }
}

/// A raw formal sum `⟨±x₁ ±x₂ … ±x_N⟩`; order and repetitions are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum {
    handle: Semigroup,
    entries: Vec<SignedEntry>,
}

impl FormalSum {
    pub fn new(handle: &Semigroup, entries: Vec<SignedEntry>) -> Result<Self> {
        for entry in &entries {
            handle.check(&entry.element)?;
        }
        Ok(FormalSum {
            handle: handle.clone(),
            entries,
        })
    }

    pub fn empty(handle: &Semigroup) -> Self {
        FormalSum {
            handle: handle.clone(),
            entries: Vec::new(),
        }
    }

    pub fn handle(&self) -> &Semigroup {
        &self.handle
    }

    pub fn entries(&self) -> &[SignedEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reduces the sum to its class: signs are summed per element and zero
    /// coefficients dropped.
    pub fn normalize(&self) -> CanonicalSum {
        let mut coeffs: BTreeMap<Element, BigInt> = BTreeMap::new();
        for entry in &self.entries {
            let delta = match entry.sign {
                Sign::Plus => BigInt::one(),
                Sign::Minus => -BigInt::one(),
            };
            accumulate(&mut coeffs, entry.element.clone(), delta);
        }
        CanonicalSum {
            handle: self.handle.clone(),
            coeffs,
        }
    }
}

impl fmt::Display for FormalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟨")?;
        for (i, entry) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(
                f,
                "{}{}",
                entry.sign.symbol(),
                self.handle.element_token(&entry.element)
            )?;
        }
        f.write_str("⟩")
    }
}

/// Free-function form of [`FormalSum::normalize`].
pub fn normalize(x: &FormalSum) -> CanonicalSum {
    x.normalize()
}

fn accumulate(coeffs: &mut BTreeMap<Element, BigInt>, element: Element, delta: BigInt) {
    match coeffs.entry(element) {
        Entry::Vacant(slot) => {
            if !delta.is_zero() {
                slot.insert(delta);
            }
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += delta;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

/// An element of `R(H)`: a map from semigroup elements to nonzero integer
/// coefficients. The empty map is the zero class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSum {
    handle: Semigroup,
    coeffs: BTreeMap<Element, BigInt>,
}

impl CanonicalSum {
    pub fn zero(handle: &Semigroup) -> Self {
        CanonicalSum {
            handle: handle.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds a sum from `(element, coefficient)` pairs; repeated elements
    /// are merged and zero coefficients dropped.
    pub fn from_terms<C: Into<BigInt>>(
        handle: &Semigroup,
        terms: impl IntoIterator<Item = (Element, C)>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (element, c) in terms {
            handle.check(&element)?;
            accumulate(&mut coeffs, element, c.into());
        }
        Ok(CanonicalSum {
            handle: handle.clone(),
            coeffs,
        })
    }

    /// The embedding `a ↦ [⟨+a⟩]`.
    pub fn embed(handle: &Semigroup, a: &Element) -> Result<Self> {
        Self::from_terms(handle, [(a.clone(), 1)])
    }

    /// `[⟨+1_H⟩]` when the semigroup has an identity.
    pub fn unit(handle: &Semigroup) -> Option<Self> {
        handle
            .identity()
            .map(|e| Self::embed(handle, &e).expect("identity is a member"))
    }

    pub fn handle(&self) -> &Semigroup {
        &self.handle
    }

    pub fn coeff(&self, e: &Element) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    /// Terms in element order.
    pub fn terms(&self) -> impl Iterator<Item = (&Element, &BigInt)> {
        self.coeffs.iter()
    }

    /// Number of distinct elements with nonzero coefficient.
    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Length of the minimal representative, `Σ|c|`.
    pub fn weight(&self) -> BigInt {
        self.coeffs.values().map(BigInt::abs).sum()
    }

    /// The shortest formal sum in the class: elements in order, `|c|`
    /// copies each with the sign of `c`.
    pub fn minimal_representative(&self) -> FormalSum {
        let mut entries = Vec::new();
        for (element, c) in &self.coeffs {
            let sign = if c.is_negative() { Sign::Minus } else { Sign::Plus };
            let mut k = c.abs();
            while k.is_positive() {
                entries.push(SignedEntry::new(sign, element.clone()));
                k -= 1;
            }
        }
        FormalSum {
            handle: self.handle.clone(),
            entries,
        }
    }

    pub fn add(&self, other: &CanonicalSum) -> Result<CanonicalSum> {
        self.handle.ensure_same(&other.handle)?;
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            accumulate(&mut coeffs, e.clone(), c.clone());
        }
        Ok(CanonicalSum {
            handle: self.handle.clone(),
            coeffs,
        })
    }

    pub fn neg(&self) -> CanonicalSum {
        CanonicalSum {
            handle: self.handle.clone(),
            coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &CanonicalSum) -> Result<CanonicalSum> {
        self.add(&other.neg())
    }

    /// `Σ c_g d_h [g·h]` over all pairs of terms; the sign of each product
    /// term is the product of the operand signs.
    pub fn mul(&self, other: &CanonicalSum) -> Result<CanonicalSum> {
        self.handle.ensure_same(&other.handle)?;
        let mut coeffs = BTreeMap::new();
        for (g, c) in &self.coeffs {
            for (h, d) in &other.coeffs {
                accumulate(&mut coeffs, self.handle.product(g, h), c * d);
            }
        }
        Ok(CanonicalSum {
            handle: self.handle.clone(),
            coeffs,
        })
    }

    /// Multiplies every coefficient by an integer (the `k`-fold sum).
    pub fn scale(&self, k: &BigInt) -> CanonicalSum {
        let coeffs = if k.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(e, c)| (e.clone(), c * k)).collect()
        };
        CanonicalSum {
            handle: self.handle.clone(),
            coeffs,
        }
    }

    /// Class equality; errors when the operands live over different semigroups.
    pub fn equals(&self, other: &CanonicalSum) -> Result<bool> {
        self.handle.ensure_same(&other.handle)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Parses the canonical printing, e.g. `+2·ab -ba` or `0`.
    pub fn parse(handle: &Semigroup, text: &str) -> Result<CanonicalSum> {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::zero(handle));
        }
        let mut terms = Vec::new();
        let mut offset = 0;
        for token in text.split_whitespace() {
            let pos = text[offset..].find(token).map_or(offset, |p| p + offset);
            offset = pos + token.len();
            let syntax = |message: &str| Error::Syntax {
                pos,
                message: format!("{message} in term `{token}`"),
            };
            let (sign, rest) = match token.chars().next() {
                Some('+') => (1, &token[1..]),
                Some('-') => (-1, &token[1..]),
                _ => return Err(syntax("expected a leading sign")),
            };
            let (magnitude, element) = match rest.split_once(['·', '*']) {
                Some((digits, element)) => {
                    let k: BigInt = digits.parse().map_err(|_| syntax("bad coefficient"))?;
                    (k, element)
                }
                None => (BigInt::one(), rest),
            };
            let element = element
                .strip_prefix('[')
                .and_then(|e| e.strip_suffix(']'))
                .unwrap_or(element);
            if element.is_empty() {
                return Err(syntax("missing element"));
            }
            terms.push((handle.parse_element(element)?, magnitude * sign));
        }
        if terms.is_empty() {
            return Err(Error::Syntax {
                pos: 0,
                message: "empty sum (write `0` for the zero class)".into(),
            });
        }
        Self::from_terms(handle, terms)
    }
}

impl fmt::Display for CanonicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if c.is_negative() { "-" } else { "+" })?;
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            f.write_str(&self.handle.element_token(e))?;
        }
        Ok(())
    }
}

/// Shorthand for [`CanonicalSum::embed`].
pub fn embed_e1(handle: &Semigroup, a: &Element) -> Result<CanonicalSum> {
    CanonicalSum::embed(handle, a)
}

/// Shorthand for [`CanonicalSum::unit`].
pub fn unit_of(handle: &Semigroup) -> Option<CanonicalSum> {
    CanonicalSum::unit(handle)
}
