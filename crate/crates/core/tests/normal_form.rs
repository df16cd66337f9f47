use sgr_core::oracle::RewriteClosure;
use sgr_core::sample::random_sum;
use sgr_core::{normalize, rng_from_seed, CanonicalSum, FormalSum, Semigroup, Sign, SignedEntry};

/// Every formal sum of length at most `max_len` over `±a, ±b`.
fn all_sums(h: &Semigroup, max_len: usize) -> Vec<FormalSum> {
    let letters = [h.generator("a").unwrap(), h.generator("b").unwrap()];
    let entries: Vec<SignedEntry> = letters
        .iter()
        .flat_map(|e| {
            [
                SignedEntry::new(Sign::Plus, e.clone()),
                SignedEntry::new(Sign::Minus, e.clone()),
            ]
        })
        .collect();
    let mut layer = vec![Vec::new()];
    let mut out = Vec::new();
    for _ in 0..=max_len {
        out.extend(
            layer
                .iter()
                .map(|es: &Vec<SignedEntry>| FormalSum::new(h, es.clone()).unwrap()),
        );
        layer = layer
            .iter()
            .flat_map(|es| {
                entries.iter().map(move |e| {
                    let mut es = es.clone();
                    es.push(e.clone());
                    es
                })
            })
            .collect();
    }
    out
}

#[test]
fn normalize_matches_rewrite_closure_on_full_grid() {
    let h = Semigroup::parse("free:a,b").unwrap();
    let sums = all_sums(&h, 4);
    assert_eq!(sums.len(), 341);
    let mut closure = RewriteClosure::new(&h, h.generators().unwrap(), 6);
    let classes: Vec<usize> = sums.iter().map(|x| closure.class(x).unwrap()).collect();
    let normal: Vec<CanonicalSum> = sums.iter().map(normalize).collect();
    let mut pairs = 0;
    for i in 0..sums.len() {
        for j in i..sums.len() {
            assert_eq!(
                normal[i] == normal[j],
                classes[i] == classes[j],
                "{} vs {}",
                sums[i],
                sums[j]
            );
            pairs += 1;
        }
    }
    assert_eq!(pairs, 341 * 342 / 2);
}

#[test]
fn examples() {
    let h = Semigroup::parse("free:a,b").unwrap();
    let a = h.generator("a").unwrap();
    let b = h.generator("b").unwrap();
    let plus = |e: &sgr_core::Element| SignedEntry::new(Sign::Plus, e.clone());
    let minus = |e: &sgr_core::Element| SignedEntry::new(Sign::Minus, e.clone());

    let x = FormalSum::new(&h, vec![plus(&a), plus(&b), plus(&a)]).unwrap();
    assert_eq!(
        normalize(&x),
        CanonicalSum::from_terms(&h, [(a.clone(), 2), (b.clone(), 1)]).unwrap()
    );

    let cancel = FormalSum::new(&h, vec![plus(&a), minus(&a), plus(&b), minus(&b)]).unwrap();
    assert!(normalize(&cancel).is_zero());

    let y = CanonicalSum::from_terms(&h, [(a.clone(), 2), (b.clone(), -1)]).unwrap();
    let rep = y.minimal_representative();
    assert_eq!(rep.entries(), &[plus(&a), plus(&a), minus(&b)]);
}

#[test]
fn minimal_representative_round_trips() {
    let mut rng = rng_from_seed(31);
    for d in ["free:a,b", "freecomm:x,y", "nat+", "natmax"] {
        let h = Semigroup::parse(d).unwrap();
        for _ in 0..1_000 {
            let x = random_sum(&h, &mut rng, 4, 5);
            let rep = x.minimal_representative();
            assert_eq!(rep.len() as u64, u64::try_from(x.weight()).unwrap());
            assert_eq!(normalize(&rep), x);
        }
    }
}
