//! Universal properties: a semigroup homomorphism `f: H → (R, ·)` into a
//! ring extends uniquely to a ring homomorphism `f♯: R(H) → R`, and, for
//! commutative `H` and a field target, to `g∇: F(H) → F`.
//!
//! Targets are described by the [`RingAdapter`] and [`FieldAdapter`]
//! traits. Integers, rationals and rational functions in `t` are provided.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::formal::CanonicalSum;
use crate::fraction::Fraction;
use crate::oracle::RatFunction;
use crate::sample::{random_nonzero_sum, random_sum, rng_from_seed};
use crate::semigroup::{Element, Semigroup};

/// A ring given by its operations. Laws are assumed, not checked.
pub trait RingAdapter {
    type Value: Clone + fmt::Debug;

    /// Short description of the carrier, e.g. `"integers"`.
    fn describe(&self) -> String;
    fn zero(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn equals(&self, a: &Self::Value, b: &Self::Value) -> bool;
    fn format(&self, a: &Self::Value) -> String;
    fn parse(&self, text: &str) -> Result<Self::Value>;
}

/// A field: a ring with one and a partial inverse.
pub trait FieldAdapter: RingAdapter {
    fn one(&self) -> Self::Value;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Value) -> Option<Self::Value>;
}

/// `k·v` as a `|k|`-fold sum computed by doubling, negated for `k < 0`.
pub fn integer_multiple<A: RingAdapter>(target: &A, v: &A::Value, k: &BigInt) -> A::Value {
    let mut acc = target.zero();
    let mut base = v.clone();
    let mut n = k.magnitude().clone();
    while !n.is_zero() {
        if n.bit(0) {
            acc = target.add(&acc, &base);
        }
        base = target.add(&base, &base);
        n >>= 1;
    }
    if k.is_negative() {
        target.neg(&acc)
    } else {
        acc
    }
}

/// `v^k` for `k ≥ 1` by square-and-multiply.
fn power<A: RingAdapter>(target: &A, v: &A::Value, k: u64) -> A::Value {
    debug_assert!(k >= 1);
    let mut result: Option<A::Value> = None;
    let mut base = v.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(r) => target.mul(&r, &base),
            });
        }
        k >>= 1;
        if k > 0 {
            base = target.mul(&base, &base);
        }
    }
    result.expect("k >= 1")
}

/// `(ℤ, +, ·)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl RingAdapter for Integers {
    type Value = BigInt;

    fn describe(&self) -> String {
        "integers".into()
    }
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn equals(&self, a: &BigInt, b: &BigInt) -> bool {
        a == b
    }
    fn format(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<BigInt> {
        BigInt::from_str(text.trim()).map_err(|_| Error::MalformedSpec(format!("`{text}` is not an integer")))
    }
}

/// `(ℚ, +, ·)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl RingAdapter for Rationals {
    type Value = BigRational;

    fn describe(&self) -> String {
        "rationals".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn equals(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }
    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<BigRational> {
        BigRational::from_str(text.trim())
            .map_err(|_| Error::MalformedSpec(format!("`{text}` is not a rational number")))
    }
}

impl FieldAdapter for Rationals {
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

/// `ℚ(t)`, backed by [`RatFunction`].
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalFunctions;

impl RingAdapter for RationalFunctions {
    type Value = RatFunction;

    fn describe(&self) -> String {
        "rational functions in t".into()
    }
    fn zero(&self) -> RatFunction {
        RatFunction::zero()
    }
    fn add(&self, a: &RatFunction, b: &RatFunction) -> RatFunction {
        a.add(b)
    }
    fn neg(&self, a: &RatFunction) -> RatFunction {
        a.neg()
    }
    fn mul(&self, a: &RatFunction, b: &RatFunction) -> RatFunction {
        a.mul(b)
    }
    fn equals(&self, a: &RatFunction, b: &RatFunction) -> bool {
        a.equals(b)
    }
    fn format(&self, a: &RatFunction) -> String {
        a.to_string()
    }
    fn parse(&self, text: &str) -> Result<RatFunction> {
        RatFunction::parse(text)
    }
}

impl FieldAdapter for RationalFunctions {
    fn one(&self) -> RatFunction {
        RatFunction::one()
    }
    fn inv(&self, a: &RatFunction) -> Option<RatFunction> {
        a.inv().ok()
    }
}

type ElementFn<V> = Arc<dyn Fn(&Element) -> V + Send + Sync>;

#[derive(Clone)]
enum HomMap<V> {
    /// Images of generators, extended multiplicatively. Entries for
    /// non-generators take precedence over the extension.
    Generators(BTreeMap<Element, V>),
    Function(ElementFn<V>),
}

/// A map `f: H → R` intended to satisfy `f(a·b) = f(a)·f(b)`.
#[derive(Clone)]
pub struct SemigroupHom<A: RingAdapter> {
    source: Semigroup,
    target: A,
    map: HomMap<A::Value>,
}

impl<A: RingAdapter + fmt::Debug> fmt::Debug for SemigroupHom<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SemigroupHom")
            .field("source", &self.source.id())
            .field("target", &self.target)
            .finish_non_exhaustive()
    }
}

impl<A: RingAdapter> SemigroupHom<A> {
    /// Map given on generators. Every generator needs an image.
    pub fn from_generators(
        source: &Semigroup,
        target: A,
        images: impl IntoIterator<Item = (Element, A::Value)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (e, v) in images {
            source.check(&e)?;
            map.insert(e, v);
        }
        if let Some(gens) = source.generators() {
            if let Some(missing) = gens.iter().find(|g| !map.contains_key(*g)) {
                return Err(Error::MalformedSpec(format!(
                    "no image given for generator {}",
                    source.format_element(missing)
                )));
            }
        }
        Ok(SemigroupHom {
            source: source.clone(),
            target,
            map: HomMap::Generators(map),
        })
    }

    /// Parses `g1=v1,g2=v2,...`, with element names in the source's syntax
    /// and values in the target's.
    pub fn parse_map(source: &Semigroup, target: A, text: &str) -> Result<Self> {
        let mut images = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::MalformedSpec(format!("`{item}` is not of the form g=v")))?;
            let key = key.trim();
            let key = key.strip_prefix('[').and_then(|k| k.strip_suffix(']')).unwrap_or(key);
            let element = match source.generator(key) {
                Some(e) => e,
                None => source.parse_element(key)?,
            };
            images.push((element, target.parse(value)?));
        }
        Self::from_generators(source, target, images)
    }

    /// Map given as a total function on elements.
    pub fn from_fn(source: &Semigroup, target: A, f: impl Fn(&Element) -> A::Value + Send + Sync + 'static) -> Self {
        SemigroupHom {
            source: source.clone(),
            target,
            map: HomMap::Function(Arc::new(f)),
        }
    }

    pub fn source(&self) -> &Semigroup {
        &self.source
    }

    pub fn target(&self) -> &A {
        &self.target
    }

    /// `f(e)`.
    pub fn image(&self, e: &Element) -> Result<A::Value> {
        self.source.check(e)?;
        match &self.map {
            HomMap::Function(f) => Ok(f(e)),
            HomMap::Generators(images) => {
                if let Some(v) = images.get(e) {
                    return Ok(v.clone());
                }
                let factors = self.source.factorize(e).ok_or_else(|| {
                    Error::MalformedSpec(format!(
                        "no image for {} and {} is not finitely generated",
                        self.source.format_element(e),
                        self.source.id()
                    ))
                })?;
                let mut acc: Option<A::Value> = None;
                for (g, k) in factors {
                    let v = images.get(&g).ok_or_else(|| {
                        Error::MalformedSpec(format!("no image for generator {}", self.source.format_element(&g)))
                    })?;
                    let p = power(&self.target, v, k);
                    acc = Some(match acc {
                        None => p,
                        Some(a) => self.target.mul(&a, &p),
                    });
                }
                Ok(acc.expect("factorizations are nonempty"))
            }
        }
    }
}

/// A pair `(a, b)` with `f(a·b) ≠ f(a)·f(b)`.
#[derive(Debug, Clone)]
pub struct HomViolation<V> {
    pub a: Element,
    pub b: Element,
    pub image_of_product: V,
    pub product_of_images: V,
}

#[derive(Debug, Clone)]
pub struct HomReport<V> {
    pub pairs_checked: usize,
    pub exhaustive: bool,
    pub violations: Vec<HomViolation<V>>,
}

impl<V> HomReport<V> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `f(a·b) = f(a)·f(b)`: over all pairs for finite sources,
/// otherwise over all pairs of generators followed by `samples` random
/// pairs.
pub fn check_semigroup_hom<A: RingAdapter>(
    hom: &SemigroupHom<A>,
    samples: usize,
    seed: u64,
) -> Result<HomReport<A::Value>> {
    let h = &hom.source;
    let mut pairs = Vec::new();
    let exhaustive = h.is_finite();
    if let Some(all) = h.elements() {
        for a in &all {
            for b in &all {
                pairs.push((a.clone(), b.clone()));
            }
        }
    } else {
        let gens = h.generators().unwrap_or_else(|| h.small_elements(3));
        for a in &gens {
            for b in &gens {
                pairs.push((a.clone(), b.clone()));
            }
        }
        let mut rng = rng_from_seed(seed);
        for _ in 0..samples {
            pairs.push((h.random_element(&mut rng), h.random_element(&mut rng)));
        }
    }
    let mut violations = Vec::new();
    for (a, b) in &pairs {
        let lhs = hom.image(&h.product(a, b))?;
        let rhs = hom.target.mul(&hom.image(a)?, &hom.image(b)?);
        if !hom.target.equals(&lhs, &rhs) {
            violations.push(HomViolation {
                a: a.clone(),
                b: b.clone(),
                image_of_product: lhs,
                product_of_images: rhs,
            });
        }
    }
    Ok(HomReport {
        pairs_checked: pairs.len(),
        exhaustive,
        violations,
    })
}

/// The ring homomorphism `f♯: R(H) → R` with `f♯(Σ cₕ[h]) = Σ cₕ·f(h)`.
#[derive(Clone, Debug)]
pub struct RingLift<A: RingAdapter> {
    hom: SemigroupHom<A>,
}

pub fn lift_to_ring<A: RingAdapter>(hom: SemigroupHom<A>) -> RingLift<A> {
    RingLift { hom }
}

impl<A: RingAdapter> RingLift<A> {
    pub fn hom(&self) -> &SemigroupHom<A> {
        &self.hom
    }

    pub fn target(&self) -> &A {
        &self.hom.target
    }

    pub fn apply(&self, x: &CanonicalSum) -> Result<A::Value> {
        self.hom.source.ensure_same(x.handle())?;
        let t = &self.hom.target;
        let mut acc = t.zero();
        for (e, c) in x.terms() {
            let term = integer_multiple(t, &self.hom.image(e)?, c);
            acc = t.add(&acc, &term);
        }
        Ok(acc)
    }
}

/// Outcome of [`check_ring_hom`].
#[derive(Debug, Clone)]
pub struct RingHomReport {
    pub pairs_checked: usize,
    pub zero_preserved: bool,
    pub additivity: Vec<(CanonicalSum, CanonicalSum)>,
    pub multiplicativity: Vec<(CanonicalSum, CanonicalSum)>,
    /// Elements `e` with `f♯(e₁(e)) ≠ f(e)`.
    pub diagram: Vec<Element>,
    pub diagram_checked: usize,
}

impl RingHomReport {
    pub fn passed(&self) -> bool {
        self.zero_preserved && self.additivity.is_empty() && self.multiplicativity.is_empty() && self.diagram.is_empty()
    }
}

/// Checks `f♯(0) = 0`, additivity and multiplicativity on `samples` random
/// pairs (support ≤ 4, coefficients in `[-5, 5]`), and `f = f♯ ∘ e₁` on the
/// generators plus `samples` random elements.
pub fn check_ring_hom<A: RingAdapter>(lift: &RingLift<A>, samples: usize, seed: u64) -> Result<RingHomReport> {
    let h = &lift.hom.source;
    let t = &lift.hom.target;
    let mut rng = rng_from_seed(seed);
    let zero_preserved = t.equals(&lift.apply(&CanonicalSum::zero(h))?, &t.zero());
    let mut additivity = Vec::new();
    let mut multiplicativity = Vec::new();
    for _ in 0..samples {
        let x = random_sum(h, &mut rng, 4, 5);
        let y = random_sum(h, &mut rng, 4, 5);
        let (fx, fy) = (lift.apply(&x)?, lift.apply(&y)?);
        if !t.equals(&lift.apply(&x.add(&y)?)?, &t.add(&fx, &fy)) {
            additivity.push((x.clone(), y.clone()));
        }
        if !t.equals(&lift.apply(&x.mul(&y)?)?, &t.mul(&fx, &fy)) {
            multiplicativity.push((x, y));
        }
    }
    let mut elements = h.generators().unwrap_or_else(|| h.small_elements(8));
    elements.extend((0..samples).map(|_| h.random_element(&mut rng)));
    let mut diagram = Vec::new();
    for e in &elements {
        let via_lift = lift.apply(&CanonicalSum::embed(h, e)?)?;
        if !t.equals(&via_lift, &lift.hom.image(e)?) && !diagram.contains(e) {
            diagram.push(e.clone());
        }
    }
    Ok(RingHomReport {
        pairs_checked: samples,
        zero_preserved,
        additivity,
        multiplicativity,
        diagram,
        diagram_checked: elements.len(),
    })
}

/// The field homomorphism `g∇: F(H) → F`, `g∇([p/q]) = g♯(p)·g♯(q)⁻¹`.
#[derive(Clone, Debug)]
pub struct FieldLift<F: FieldAdapter> {
    ring: RingLift<F>,
}

/// Refuses noncommutative sources, for which `F(H)` is not defined.
pub fn lift_to_field<F: FieldAdapter>(hom: SemigroupHom<F>) -> Result<FieldLift<F>> {
    if !hom.source.is_commutative() {
        return Err(Error::NoncommutativeSemigroup(hom.source.id().to_owned()));
    }
    Ok(FieldLift {
        ring: lift_to_ring(hom),
    })
}

impl<F: FieldAdapter> FieldLift<F> {
    pub fn ring_lift(&self) -> &RingLift<F> {
        &self.ring
    }

    /// Fails with `DenominatorMapsToZero` when `g♯(q) = 0`, which can only
    /// happen when `g♯` is not injective.
    pub fn apply(&self, w: &Fraction) -> Result<F::Value> {
        let t = self.ring.target();
        let den = self.ring.apply(w.denominator())?;
        let inv = t
            .inv(&den)
            .filter(|_| !t.equals(&den, &t.zero()))
            .ok_or_else(|| Error::DenominatorMapsToZero {
                denominator: w.denominator().to_string(),
            })?;
        Ok(t.mul(&self.ring.apply(w.numerator())?, &inv))
    }
}

/// Outcome of [`check_field_lift`].
#[derive(Debug, Clone)]
pub struct FieldLiftReport {
    pub samples: usize,
    /// Samples skipped because a denominator was mapped to zero.
    pub skipped: usize,
    pub zero_preserved: bool,
    pub one_preserved: bool,
    /// Sums `x` with `g∇(e₂(x)) ≠ g♯(x)`.
    pub embedding: Vec<CanonicalSum>,
    /// Fractions `p/q` and scalars `r` with `g∇((r·p)/(r·q)) ≠ g∇(p/q)`.
    pub scaling: Vec<(Fraction, CanonicalSum)>,
    /// Elements `e` with `g∇(e₂(e₁(e))) ≠ g(e)`.
    pub diagram: Vec<Element>,
}

impl FieldLiftReport {
    pub fn passed(&self) -> bool {
        self.zero_preserved
            && self.one_preserved
            && self.embedding.is_empty()
            && self.scaling.is_empty()
            && self.diagram.is_empty()
    }
}

/// Checks `g∇(0) = 0`, `g∇(1) = 1`, `g∇ ∘ e₂ = g♯`, `g∇ ∘ e₂ ∘ e₁ = g`
/// and invariance under rescaling `p/q ↦ (r·p)/(r·q)` on `samples` random
/// inputs. Inputs whose denominators map to zero are skipped and counted.
pub fn check_field_lift<F: FieldAdapter>(lift: &FieldLift<F>, samples: usize, seed: u64) -> Result<FieldLiftReport> {
    let ring = &lift.ring;
    let h = ring.hom.source.clone();
    let t = ring.target();
    let mut rng = rng_from_seed(seed);
    let mut skipped = 0;
    let mut embedding = Vec::new();
    let mut scaling = Vec::new();
    let mut diagram = Vec::new();

    let zero_preserved = match lift.apply(&Fraction::zero(&h)?) {
        Ok(v) => t.equals(&v, &t.zero()),
        Err(Error::DenominatorMapsToZero { .. }) => false,
        Err(e) => return Err(e),
    };
    let one_preserved = match lift.apply(&Fraction::one(&h)?) {
        Ok(v) => t.equals(&v, &t.one()),
        Err(Error::DenominatorMapsToZero { .. }) => false,
        Err(e) => return Err(e),
    };

    let mut elements = h.generators().unwrap_or_else(|| h.small_elements(8));
    for _ in 0..samples {
        let x = random_sum(&h, &mut rng, 3, 4);
        let p = random_sum(&h, &mut rng, 3, 4);
        let q = random_nonzero_sum(&h, &mut rng, 3, 4);
        let r = random_nonzero_sum(&h, &mut rng, 2, 3);
        elements.push(h.random_element(&mut rng));

        match lift.apply(&Fraction::embed(&x)?) {
            Ok(v) => {
                if !t.equals(&v, &ring.apply(&x)?) {
                    embedding.push(x);
                }
            }
            Err(Error::DenominatorMapsToZero { .. }) => skipped += 1,
            Err(err) => return Err(err),
        }

        let w = Fraction::new(p.clone(), q.clone())?;
        let scaled = Fraction::new(r.mul(&p)?, r.mul(&q)?)?;
        match (lift.apply(&w), lift.apply(&scaled)) {
            (Ok(a), Ok(b)) => {
                if !t.equals(&a, &b) {
                    scaling.push((w, r));
                }
            }
            (Err(Error::DenominatorMapsToZero { .. }), _) | (_, Err(Error::DenominatorMapsToZero { .. })) => {
                skipped += 1
            }
            (Err(err), _) | (_, Err(err)) => return Err(err),
        }
    }
    for e in elements {
        match lift.apply(&Fraction::embed(&CanonicalSum::embed(&h, &e)?)?) {
            Ok(v) => {
                if !t.equals(&v, &ring.hom.image(&e)?) && !diagram.contains(&e) {
                    diagram.push(e);
                }
            }
            Err(Error::DenominatorMapsToZero { .. }) => skipped += 1,
            Err(err) => return Err(err),
        }
    }
    Ok(FieldLiftReport {
        samples,
        skipped,
        zero_preserved,
        one_preserved,
        embedding,
        scaling,
        diagram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat() -> Semigroup {
        Semigroup::naturals()
    }

    fn pow2(e: &Element) -> BigInt {
        let Element::Natural(n) = e else { unreachable!() };
        BigInt::one() << *n
    }

    fn sum(h: &Semigroup, text: &str) -> CanonicalSum {
        CanonicalSum::parse(h, text).unwrap()
    }

    #[test]
    fn exponential_is_a_homomorphism() {
        let hom = SemigroupHom::from_fn(&nat(), Integers, pow2);
        assert!(check_semigroup_hom(&hom, 200, 1).unwrap().passed());
        let by_generator = SemigroupHom::parse_map(&nat(), Integers, "1=2").unwrap();
        assert!(check_semigroup_hom(&by_generator, 200, 1).unwrap().passed());
    }

    #[test]
    fn identity_map_is_not() {
        let hom = SemigroupHom::from_fn(&nat(), Integers, |e| {
            let Element::Natural(n) = e else { unreachable!() };
            BigInt::from(*n)
        });
        let report = check_semigroup_hom(&hom, 50, 1).unwrap();
        let first = &report.violations[0];
        assert_eq!(
            (first.a.clone(), first.b.clone()),
            (Element::Natural(1), Element::Natural(1))
        );
        assert_eq!(first.image_of_product, BigInt::from(2));
        assert_eq!(first.product_of_images, BigInt::from(1));
    }

    #[test]
    fn sign_character_of_z2() {
        let z2 = Semigroup::from_table_text("elements: e g\ntable:\ne g\ng e\n").unwrap();
        let hom = SemigroupHom::parse_map(&z2, Rationals, "e=1,g=-1").unwrap();
        let report = check_semigroup_hom(&hom, 0, 0).unwrap();
        assert!(report.exhaustive);
        assert_eq!(report.pairs_checked, 4);
        assert!(report.passed());
    }

    #[test]
    fn ring_lift_examples() {
        let h = nat();
        let lift = lift_to_ring(SemigroupHom::parse_map(&h, Integers, "1=2").unwrap());
        assert_eq!(lift.apply(&CanonicalSum::zero(&h)).unwrap(), BigInt::zero());
        assert_eq!(lift.apply(&sum(&h, "+[1] +[2]")).unwrap(), BigInt::from(6));
        let e3 = CanonicalSum::embed(&h, &Element::Natural(3)).unwrap();
        assert_eq!(lift.apply(&e3).unwrap(), BigInt::from(8));
        assert_eq!(lift.apply(&sum(&h, "-3·[2]")).unwrap(), BigInt::from(-12));
        assert!(check_ring_hom(&lift, 300, 2).unwrap().passed());
    }

    #[test]
    fn mutated_map_is_caught() {
        let h = nat();
        let hom = SemigroupHom::parse_map(&h, Integers, "1=2,2=5").unwrap();
        assert!(!check_semigroup_hom(&hom, 100, 3).unwrap().passed());
        let report = check_ring_hom(&lift_to_ring(hom), 300, 3).unwrap();
        assert!(!report.passed());
        assert!(!report.multiplicativity.is_empty());
    }

    #[test]
    fn map_parsing_errors() {
        let h = Semigroup::parse("free:a,b").unwrap();
        assert!(matches!(
            SemigroupHom::parse_map(&h, Integers, "a=1"),
            Err(Error::MalformedSpec(_))
        ));
        assert!(SemigroupHom::parse_map(&h, Integers, "a=1,b=x").is_err());
        assert!(SemigroupHom::parse_map(&h, Integers, "a=1,c=2").is_err());
        assert!(SemigroupHom::parse_map(&h, Integers, "a1").is_err());
        let ok = SemigroupHom::parse_map(&h, Integers, "a=2,b=3").unwrap();
        assert_eq!(ok.image(&h.parse_element("aab").unwrap()).unwrap(), BigInt::from(12));
    }

    #[test]
    fn integer_multiples() {
        for k in -20..=20 {
            assert_eq!(
                integer_multiple(&Integers, &BigInt::from(7), &BigInt::from(k)),
                BigInt::from(7 * k)
            );
        }
    }

    #[test]
    fn field_lift_examples() {
        let h = nat();
        let g = SemigroupHom::parse_map(&h, RationalFunctions, "1=t").unwrap();
        let lift = lift_to_field(g).unwrap();
        let w = Fraction::new(sum(&h, "+[2]"), sum(&h, "+[1]")).unwrap();
        assert!(lift.apply(&w).unwrap().equals(&RatFunction::t()));
        assert!(lift
            .apply(&Fraction::one(&h).unwrap())
            .unwrap()
            .equals(&RatFunction::one()));
        assert!(check_field_lift(&lift, 100, 4).unwrap().passed());
    }

    #[test]
    fn evaluation_at_two_kills_a_denominator() {
        let h = nat();
        let lift = lift_to_field(SemigroupHom::parse_map(&h, Rationals, "1=2").unwrap()).unwrap();
        let killer = sum(&h, "+[2] -2·[1]");
        let as_numerator = Fraction::new(killer.clone(), sum(&h, "+[1]")).unwrap();
        assert_eq!(lift.apply(&as_numerator).unwrap(), BigRational::zero());
        let as_denominator = Fraction::new(sum(&h, "+[1]"), killer).unwrap();
        assert!(matches!(
            lift.apply(&as_denominator),
            Err(Error::DenominatorMapsToZero { .. })
        ));
    }

    #[test]
    fn field_lift_needs_commutativity() {
        let h = Semigroup::parse("free:a,b").unwrap();
        let hom = SemigroupHom::parse_map(&h, Rationals, "a=1,b=2").unwrap();
        assert!(matches!(lift_to_field(hom), Err(Error::NoncommutativeSemigroup(_))));
    }
}
