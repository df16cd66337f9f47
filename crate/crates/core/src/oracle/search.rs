//! Exhaustive searches over small semigroups and small sums.

use num_bigint::BigInt;

use crate::error::Result;
use crate::formal::CanonicalSum;
use crate::semigroup::{CayleyTable, Element, Semigroup};

/// Iterates over every associative table of order `n` (labelled, so
/// isomorphic copies are all listed), in odometer order over the `n^(n²)`
/// candidate tables.
///
/// # Panics
///
/// If `n` is not in `1..=3`.
pub fn enumerate_semigroups(n: usize) -> impl Iterator<Item = CayleyTable> {
    assert!((1..=3).contains(&n), "enumeration supports orders 1 to 3, got {n}");
    let cells = n * n;
    let total = n.pow(cells as u32);
    (0..total).filter_map(move |mut code| {
        let mut raw = vec![vec![0; n]; n];
        for cell in (0..cells).rev() {
            raw[cell / n][cell % n] = code % n;
            code /= n;
        }
        CayleyTable::validate(&raw).ok()
    })
}

/// Coefficients `1, -1, 2, -2, …, b, -b`.
fn coefficient_sequence(bound: i64) -> Vec<i64> {
    (1..=bound.max(1)).flat_map(|k| [k, -k]).collect()
}

/// Steps a mixed-radix counter whose last digit varies fastest; `false`
/// once it wraps around.
fn advance(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All nonzero sums supported on at most `max_support` of the given
/// elements with coefficients in `[-coeff_bound, coeff_bound]`, ordered by
/// support size, then by element subset, then by coefficients in the order
/// `1, -1, 2, -2, …` with the least element varying slowest.
pub fn sums_in_box(
    h: &Semigroup,
    universe: &[Element],
    max_support: usize,
    coeff_bound: i64,
) -> Result<Vec<CanonicalSum>> {
    let mut universe = universe.to_vec();
    universe.sort();
    universe.dedup();
    let coeffs = coefficient_sequence(coeff_bound);
    let mut out = Vec::new();
    for k in 1..=max_support.min(universe.len()) {
        for subset in combinations(universe.len(), k) {
            let mut digits = vec![0usize; k];
            loop {
                let terms = subset
                    .iter()
                    .zip(&digits)
                    .map(|(&e, &d)| (universe[e].clone(), BigInt::from(coeffs[d])));
                out.push(CanonicalSum::from_terms(h, terms)?);
                if !advance(&mut digits, coeffs.len()) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Looks for nonzero `x`, `y` with `x·y = 0` among the sums of
/// [`sums_in_box`]; the first witness in `(x, y)` enumeration order is
/// returned.
pub fn zero_divisor_search_in(
    h: &Semigroup,
    universe: &[Element],
    max_support: usize,
    coeff_bound: i64,
) -> Result<Option<(CanonicalSum, CanonicalSum)>> {
    let sums = sums_in_box(h, universe, max_support, coeff_bound)?;
    for x in &sums {
        for y in &sums {
            if x.mul(y)?.is_zero() {
                return Ok(Some((x.clone(), y.clone())));
            }
        }
    }
    Ok(None)
}

/// [`zero_divisor_search_in`] over all elements of a finite semigroup.
/// Infinite semigroups are searched over their first 4 elements.
pub fn zero_divisor_search(
    h: &Semigroup,
    max_support: usize,
    coeff_bound: i64,
) -> Result<Option<(CanonicalSum, CanonicalSum)>> {
    let universe = h.elements().unwrap_or_else(|| h.small_elements(4));
    zero_divisor_search_in(h, &universe, max_support, coeff_bound)
}
