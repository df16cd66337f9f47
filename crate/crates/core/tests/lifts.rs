use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};
use sgr_core::homlift::RingLift;
use sgr_core::oracle::RatFunction;
use sgr_core::sample::{random_nonzero_sum, random_sum};
use sgr_core::{
    check_field_lift, check_ring_hom, check_semigroup_hom, embed_e1, embed_e2, lift_to_field, lift_to_ring,
    rng_from_seed, CanonicalSum, Element, Error, Fraction, Integers, RationalFunctions, Rationals, Semigroup,
    SemigroupHom,
};

fn nat(e: &Element) -> u64 {
    match e {
        Element::Natural(n) => *n,
        other => panic!("not a natural: {other:?}"),
    }
}

fn two_pow_on_generators() -> RingLift<Integers> {
    let h = Semigroup::naturals();
    lift_to_ring(SemigroupHom::from_generators(&h, Integers, [(Element::Natural(1), BigInt::from(2))]).unwrap())
}

fn two_pow_everywhere() -> RingLift<Integers> {
    let h = Semigroup::naturals();
    lift_to_ring(SemigroupHom::from_fn(&h, Integers, |e| BigInt::from(2).pow(nat(e))))
}

#[test]
fn lifts_are_determined_by_generators() {
    let h = Semigroup::naturals();
    let (f, g) = (two_pow_on_generators(), two_pow_everywhere());
    let mut rng = rng_from_seed(61);
    for _ in 0..1_000 {
        let x = random_sum(&h, &mut rng, 4, 5);
        assert_eq!(f.apply(&x).unwrap(), g.apply(&x).unwrap(), "{x}");
    }

    let free = Semigroup::parse("free:a,b").unwrap();
    let by_map = lift_to_ring(SemigroupHom::parse_map(&free, Integers, "a=2,b=3").unwrap());
    let by_fn = lift_to_ring(SemigroupHom::from_fn(&free, Integers, |e| match e {
        Element::Word(w) => w.iter().map(|&l| BigInt::from(if l == 0 { 2 } else { 3 })).product(),
        other => panic!("{other:?}"),
    }));
    for _ in 0..1_000 {
        let x = random_sum(&free, &mut rng, 4, 5);
        assert_eq!(by_map.apply(&x).unwrap(), by_fn.apply(&x).unwrap(), "{x}");
    }
}

#[test]
fn diagram_commutes_on_generators_and_random_elements() {
    let f = two_pow_on_generators();
    let h = f.hom().source().clone();
    let mut rng = rng_from_seed(62);
    let mut elements = h.generators().unwrap();
    elements.extend((0..1_000).map(|_| h.random_element(&mut rng)));
    elements.extend((1..=20).map(Element::Natural));
    for e in elements {
        let lifted = f.apply(&embed_e1(&h, &e).unwrap()).unwrap();
        assert_eq!(lifted, BigInt::from(2).pow(nat(&e)));
    }
}

#[test]
fn ring_hom_checks() {
    let f = two_pow_on_generators();
    assert!(f.apply(&CanonicalSum::zero(f.hom().source())).unwrap() == BigInt::from(0));
    let report = check_ring_hom(&f, 1_000, 63).unwrap();
    assert!(report.passed());
    assert_eq!(report.pairs_checked, 1_000);

    let h = Semigroup::naturals();
    let mutated = lift_to_ring(SemigroupHom::parse_map(&h, Integers, "1=2,2=5").unwrap());
    assert!(!check_semigroup_hom(mutated.hom(), 200, 63).unwrap().passed());
    let report = check_ring_hom(&mutated, 200, 63).unwrap();
    assert!(!report.multiplicativity.is_empty());
}

#[test]
fn rational_function_target() {
    let h = Semigroup::naturals();
    let hom = SemigroupHom::from_generators(&h, RationalFunctions, [(Element::Natural(1), RatFunction::t())]).unwrap();
    let g = lift_to_field(hom).unwrap();
    let mut rng = rng_from_seed(64);
    for _ in 0..200 {
        let x = random_sum(&h, &mut rng, 4, 5);
        let via_field = g.apply(&embed_e2(&x).unwrap()).unwrap();
        assert!(via_field.equals(&g.ring_lift().apply(&x).unwrap()));

        let p = random_sum(&h, &mut rng, 3, 4);
        let q = random_nonzero_sum(&h, &mut rng, 3, 4);
        let r = random_nonzero_sum(&h, &mut rng, 3, 4);
        let w = Fraction::new(p.clone(), q.clone()).unwrap();
        let scaled = Fraction::new(r.mul(&p).unwrap(), r.mul(&q).unwrap()).unwrap();
        assert!(g.apply(&w).unwrap().equals(&g.apply(&scaled).unwrap()));
    }
    assert!(g
        .apply(&Fraction::one(&h).unwrap())
        .unwrap()
        .equals(&RatFunction::one()));
    let report = check_field_lift(&g, 200, 65).unwrap();
    assert!(report.passed());
    assert_eq!(report.skipped, 0);
}

#[test]
fn evaluation_at_two_is_not_injective() {
    let h = Semigroup::naturals();
    let hom = SemigroupHom::from_generators(
        &h,
        Rationals,
        [(Element::Natural(1), BigRational::from_integer(2.into()))],
    )
    .unwrap();
    let g = lift_to_field(hom).unwrap();
    let killed = CanonicalSum::parse(&h, "+[2] -2·[1]").unwrap();
    assert!(g.ring_lift().apply(&killed).unwrap() == BigRational::from_integer(0.into()));
    let num = Fraction::new(killed.clone(), CanonicalSum::parse(&h, "+[1]").unwrap()).unwrap();
    assert!(g.apply(&num).unwrap() == BigRational::from_integer(0.into()));
    let den = Fraction::new(CanonicalSum::parse(&h, "+[1]").unwrap(), killed).unwrap();
    assert!(matches!(g.apply(&den), Err(Error::DenominatorMapsToZero { .. })));
    assert!(g.apply(&Fraction::one(&h).unwrap()).unwrap().is_one());
}

#[test]
fn field_lift_refuses_noncommutative_sources() {
    let free = Semigroup::parse("free:a,b").unwrap();
    let hom = SemigroupHom::parse_map(&free, Rationals, "a=2,b=3").unwrap();
    assert!(matches!(lift_to_field(hom), Err(Error::NoncommutativeSemigroup(_))));
}
