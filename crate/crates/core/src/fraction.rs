//! Formal quotients `p/q` over `R(H)` for commutative `H`, and the field
//! operations on their classes.
//!
//! Fractions are never reduced. Two fractions denote the same class when
//! their cross products agree. Every product taken here is checked: if two
//! nonzero sums multiply to zero the ring is not a domain, the construction
//! is not well defined, and the operation fails with `ZeroDivisorDetected`.

use std::fmt;

use crate::error::{Error, Result};
use crate::formal::CanonicalSum;
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    num: CanonicalSum,
    den: CanonicalSum,
}

/// Product of two sums that fails when both factors are nonzero but the
/// product vanishes.
pub fn checked_mul(x: &CanonicalSum, y: &CanonicalSum) -> Result<CanonicalSum> {
    let product = x.mul(y)?;
    if product.is_zero() && !x.is_zero() && !y.is_zero() {
        return Err(Error::ZeroDivisorDetected {
            left: x.to_string(),
            right: y.to_string(),
        });
    }
    Ok(product)
}

/// The fixed nonzero sum used to build `0_F`, `1_F` and the embedding of
/// `R(H)`: the unit when `H` has an identity, otherwise `[⟨+g₀⟩]` for the
/// least element `g₀`.
pub fn reference_denominator(h: &Semigroup) -> CanonicalSum {
    CanonicalSum::unit(h)
        .unwrap_or_else(|| CanonicalSum::embed(h, &h.least_element()).expect("least element is a member"))
}

fn require_commutative(h: &Semigroup) -> Result<()> {
    if h.is_commutative() {
        Ok(())
    } else {
        Err(Error::NoncommutativeSemigroup(h.id().to_owned()))
    }
}

impl Fraction {
    /// Stores `p/q` as given.
    pub fn new(num: CanonicalSum, den: CanonicalSum) -> Result<Fraction> {
        num.handle().ensure_same(den.handle())?;
        require_commutative(num.handle())?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Fraction { num, den })
    }

    pub fn zero(h: &Semigroup) -> Result<Fraction> {
        Fraction::new(CanonicalSum::zero(h), reference_denominator(h))
    }

    pub fn one(h: &Semigroup) -> Result<Fraction> {
        let d = reference_denominator(h);
        Fraction::new(d.clone(), d)
    }

    /// The embedding `R(H) → F(H)`. Uses `x/1` when `H` has an identity
    /// and `(x·d)/d` otherwise.
    pub fn embed(x: &CanonicalSum) -> Result<Fraction> {
        let h = x.handle();
        require_commutative(h)?;
        match CanonicalSum::unit(h) {
            Some(unit) => Fraction::new(x.clone(), unit),
            None => {
                let d = reference_denominator(h);
                Fraction::new(checked_mul(x, &d)?, d)
            }
        }
    }

    pub fn numerator(&self) -> &CanonicalSum {
        &self.num
    }

    pub fn denominator(&self) -> &CanonicalSum {
        &self.den
    }

    pub fn handle(&self) -> &Semigroup {
        self.num.handle()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `p/q + x/y = (p·y + q·x)/(q·y)`.
    pub fn add(&self, other: &Fraction) -> Result<Fraction> {
        self.handle().ensure_same(other.handle())?;
        let left = checked_mul(&self.num, &other.den)?;
        let right = checked_mul(&self.den, &other.num)?;
        let den = checked_mul(&self.den, &other.den)?;
        Fraction::new(left.add(&right)?, den)
    }

    pub fn neg(&self) -> Fraction {
        Fraction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Fraction) -> Result<Fraction> {
        self.add(&other.neg())
    }

    /// `p/q · r/s = (p·r)/(q·s)`.
    pub fn mul(&self, other: &Fraction) -> Result<Fraction> {
        self.handle().ensure_same(other.handle())?;
        let num = checked_mul(&self.num, &other.num)?;
        let den = checked_mul(&self.den, &other.den)?;
        Fraction::new(num, den)
    }

    /// `[r/s]⁻¹ = [s/r]`.
    pub fn inv(&self) -> Result<Fraction> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZeroClass);
        }
        Ok(Fraction {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    /// `(r/s)/(h/g) = (r·g)/(s·h)`.
    pub fn div(&self, other: &Fraction) -> Result<Fraction> {
        self.handle().ensure_same(other.handle())?;
        self.mul(&other.inv()?)
    }

    /// Class equality by cross-multiplication: `p/q = r/s` iff `p·s = q·r`.
    pub fn equals(&self, other: &Fraction) -> Result<bool> {
        self.handle().ensure_same(other.handle())?;
        let left = checked_mul(&self.num, &other.den)?;
        let right = checked_mul(&self.den, &other.num)?;
        left.equals(&right)
    }
}

impl fmt::Display for Fraction {
    /// `0` and `1` for the zero and one classes, `(p) / (q)` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num.is_zero() {
            f.write_str("0")
        } else if self.num == self.den {
            f.write_str("1")
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Shorthand for [`Fraction::embed`].
pub fn embed_e2(x: &CanonicalSum) -> Result<Fraction> {
    Fraction::embed(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_nonzero_sum, random_sum, rng_from_seed};

    fn nat() -> Semigroup {
        Semigroup::naturals()
    }

    fn sum(h: &Semigroup, text: &str) -> CanonicalSum {
        CanonicalSum::parse(h, text).unwrap()
    }

    fn frac(h: &Semigroup, num: &str, den: &str) -> Fraction {
        Fraction::new(sum(h, num), sum(h, den)).unwrap()
    }

    fn z2() -> Semigroup {
        Semigroup::from_table_text("elements: e g\ntable:\ne g\ng e\n").unwrap()
    }

    #[test]
    fn constructor_guards() {
        let h = nat();
        assert!(Fraction::new(CanonicalSum::zero(&h), sum(&h, "+[1]"))
            .unwrap()
            .is_zero());
        assert_eq!(
            Fraction::new(sum(&h, "+[1]"), CanonicalSum::zero(&h)),
            Err(Error::ZeroDenominator)
        );
        let free = Semigroup::parse("free:a,b").unwrap();
        assert!(matches!(
            Fraction::new(sum(&free, "+a"), sum(&free, "+b")),
            Err(Error::NoncommutativeSemigroup(_))
        ));
        let other = Semigroup::parse("freecomm:x").unwrap();
        assert!(matches!(
            Fraction::new(sum(&h, "+[1]"), sum(&other, "+x")),
            Err(Error::HandleMismatch { .. })
        ));
    }

    #[test]
    fn addition_examples() {
        let h = nat();
        let a = frac(&h, "+[1]", "+[2]");
        let s = a.add(&a).unwrap();
        assert_eq!(s, frac(&h, "+2·[3]", "+[4]"));
        assert!(s.equals(&frac(&h, "+2·[1]", "+[2]")).unwrap());
        assert!(a.add(&Fraction::zero(&h).unwrap()).unwrap().equals(&a).unwrap());

        let fc1 = Semigroup::parse("freecomm1:x").unwrap();
        let one = frac(&fc1, "+[1]", "+[1]");
        let total = one.add(&Fraction::zero(&fc1).unwrap()).unwrap();
        assert!(total.equals(&Fraction::one(&fc1).unwrap()).unwrap());
    }

    #[test]
    fn multiplication_examples() {
        let h = nat();
        let a = frac(&h, "+[2]", "+[1]");
        let b = frac(&h, "+[1]", "+[2]");
        let p = a.mul(&b).unwrap();
        assert_eq!(p, frac(&h, "+[3]", "+[3]"));
        assert!(p.equals(&Fraction::one(&h).unwrap()).unwrap());
        assert!(a.mul(&Fraction::zero(&h).unwrap()).unwrap().is_zero());
        assert!(a.mul(&Fraction::one(&h).unwrap()).unwrap().equals(&a).unwrap());
    }

    #[test]
    fn equality_examples() {
        let h = nat();
        let r = sum(&h, "+[1] -2·[3]");
        let x = sum(&h, "+[2]");
        let y = sum(&h, "+[1] +[4]");
        let scaled = Fraction::new(r.mul(&x).unwrap(), r.mul(&y).unwrap()).unwrap();
        assert!(scaled.equals(&Fraction::new(x, y).unwrap()).unwrap());
        assert!(frac(&h, "+[2]", "+[1]").equals(&frac(&h, "+[3]", "+[2]")).unwrap());
        assert!(!frac(&h, "+[1]", "+[2]").equals(&frac(&h, "+[2]", "+[1]")).unwrap());
    }

    #[test]
    fn negation_and_inverse() {
        let h = nat();
        assert!(Fraction::zero(&h).unwrap().neg().is_zero());
        assert_eq!(frac(&h, "+[1]", "+[2]").neg(), frac(&h, "-[1]", "+[2]"));
        assert_eq!(frac(&h, "+[2]", "+[1]").inv().unwrap(), frac(&h, "+[1]", "+[2]"));
        assert_eq!(Fraction::zero(&h).unwrap().inv(), Err(Error::DivisionByZeroClass));
        let one = Fraction::one(&h).unwrap();
        assert!(one.inv().unwrap().equals(&one).unwrap());
    }

    #[test]
    fn division_examples() {
        let h = nat();
        let a = frac(&h, "+[3]", "+[1]");
        let b = frac(&h, "+[2]", "+[1]");
        assert!(a.div(&b).unwrap().equals(&frac(&h, "+[2]", "+[1]")).unwrap());
        assert!(a.div(&Fraction::one(&h).unwrap()).unwrap().equals(&a).unwrap());
        assert!(a.div(&a).unwrap().equals(&Fraction::one(&h).unwrap()).unwrap());
        assert_eq!(a.div(&Fraction::zero(&h).unwrap()), Err(Error::DivisionByZeroClass));
    }

    #[test]
    fn neutral_elements() {
        let h = nat();
        assert!(Fraction::one(&h).unwrap().equals(&frac(&h, "+[1]", "+[1]")).unwrap());
        let zero = Fraction::new(CanonicalSum::zero(&h), sum(&h, "+[2]")).unwrap();
        assert!(Fraction::zero(&h).unwrap().equals(&zero).unwrap());
        assert_eq!(Fraction::one(&h).unwrap().to_string(), "1");
        assert_eq!(zero.to_string(), "0");
        assert_eq!(frac(&h, "+[1]", "+[2]").to_string(), "(+[1]) / (+[2])");
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let mut rng = rng_from_seed(11);
        for d in ["nat+", "freecomm:x,y", "freecomm1:x"] {
            let h = Semigroup::parse(d).unwrap();
            assert!(embed_e2(&CanonicalSum::zero(&h)).unwrap().is_zero());
            for _ in 0..100 {
                let x = random_sum(&h, &mut rng, 3, 4);
                let y = random_sum(&h, &mut rng, 3, 4);
                let (ex, ey) = (embed_e2(&x).unwrap(), embed_e2(&y).unwrap());
                let sum = embed_e2(&x.add(&y).unwrap()).unwrap();
                assert!(sum.equals(&ex.add(&ey).unwrap()).unwrap());
                let prod = embed_e2(&x.mul(&y).unwrap()).unwrap();
                assert!(prod.equals(&ex.mul(&ey).unwrap()).unwrap());
            }
        }
        let free = Semigroup::parse("free:a,b").unwrap();
        assert!(matches!(
            embed_e2(&CanonicalSum::parse(&free, "+a").unwrap()),
            Err(Error::NoncommutativeSemigroup(_))
        ));
    }

    #[test]
    fn cancellation() {
        let h = nat();
        let mut rng = rng_from_seed(12);
        let random_frac =
            |rng: &mut _| Fraction::new(random_sum(&h, rng, 3, 3), random_nonzero_sum(&h, rng, 3, 3)).unwrap();
        for _ in 0..200 {
            let x = loop {
                let x = random_frac(&mut rng);
                if !x.is_zero() {
                    break x;
                }
            };
            let y = random_frac(&mut rng);
            // z = y scaled, so x·y = x·z must hold and imply y = z
            let r = random_nonzero_sum(&h, &mut rng, 2, 3);
            let z = Fraction::new(y.numerator().mul(&r).unwrap(), y.denominator().mul(&r).unwrap()).unwrap();
            assert!(x.mul(&y).unwrap().equals(&x.mul(&z).unwrap()).unwrap());
            assert!(y.equals(&z).unwrap());
            let w = random_frac(&mut rng);
            if x.mul(&y).unwrap().equals(&x.mul(&w).unwrap()).unwrap() {
                assert!(y.equals(&w).unwrap());
            }
        }
    }

    #[test]
    fn zero_divisors_are_reported() {
        let h = z2();
        let a = frac(&h, "+e +g", "+e");
        let b = frac(&h, "+e -g", "+e");
        assert!(matches!(a.mul(&b), Err(Error::ZeroDivisorDetected { .. })));
        let c = frac(&h, "+e", "+e -g");
        assert!(matches!(a.equals(&c), Err(Error::ZeroDivisorDetected { .. })));
        assert!(matches!(a.add(&c), Err(Error::ZeroDivisorDetected { .. })));
    }
}
