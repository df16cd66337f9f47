//! Breadth-first closure of formal sums under pair cancellation and
//! permutation of entries. Deliberately independent of
//! [`FormalSum::normalize`](crate::formal::FormalSum::normalize).

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::formal::{FormalSum, Sign};
use crate::semigroup::{Element, Semigroup};

/// Hard cap on the number of sums a single component search may visit.
const MAX_STATES: usize = 2_000_000;

type State = Vec<(Sign, u16)>;

/// Equivalence classes of formal sums over a fixed alphabet, discovered
/// lazily by exhaustive search. Sums longer than `bound` are never visited.
///
/// Moves: delete any `+h`/`-h` pair, append a `+h -h` pair for an alphabet
/// element `h` while staying within `bound`, and swap adjacent entries.
/// Adjacent swaps generate every permutation, and an appended pair can be
/// moved anywhere, so this realizes the full closure restricted to sums of
/// length at most `bound`.
#[derive(Debug)]
pub struct RewriteClosure {
    handle: Semigroup,
    alphabet: Vec<Element>,
    bound: usize,
    class_of: HashMap<State, usize>,
    classes: usize,
}

impl RewriteClosure {
    pub fn new(handle: &Semigroup, mut alphabet: Vec<Element>, bound: usize) -> Self {
        alphabet.sort();
        alphabet.dedup();
        RewriteClosure {
            handle: handle.clone(),
            alphabet,
            bound,
            class_of: HashMap::new(),
            classes: 0,
        }
    }

    /// Number of sums visited so far.
    pub fn visited(&self) -> usize {
        self.class_of.len()
    }

    pub fn equivalent(&mut self, x: &FormalSum, y: &FormalSum) -> Result<bool> {
        let cx = self.class(x)?;
        let cy = self.class(y)?;
        Ok(cx == cy)
    }

    /// Identifier of the component containing `x`.
    pub fn class(&mut self, x: &FormalSum) -> Result<usize> {
        self.handle.ensure_same(x.handle())?;
        if x.len() > self.bound {
            return Err(Error::BoundExceeded { bound: self.bound });
        }
        let state = self.encode(x)?;
        if let Some(&c) = self.class_of.get(&state) {
            return Ok(c);
        }
        let id = self.classes;
        self.classes += 1;
        let mut queue = VecDeque::from([state.clone()]);
        self.class_of.insert(state, id);
        while let Some(s) = queue.pop_front() {
            for next in self.moves(&s) {
                if !self.class_of.contains_key(&next) {
                    if self.class_of.len() >= MAX_STATES {
                        return Err(Error::BoundExceeded { bound: self.bound });
                    }
                    self.class_of.insert(next.clone(), id);
                    queue.push_back(next);
                }
            }
        }
        Ok(id)
    }

    fn encode(&self, x: &FormalSum) -> Result<State> {
        x.entries()
            .iter()
            .map(|entry| {
                self.alphabet
                    .binary_search(&entry.element)
                    .map(|i| (entry.sign, i as u16))
                    .map_err(|_| {
                        Error::MalformedSpec(format!(
                            "element {} is outside the search alphabet",
                            self.handle.format_element(&entry.element)
                        ))
                    })
            })
            .collect()
    }

    fn moves(&self, s: &State) -> Vec<State> {
        let mut out = Vec::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i].1 == s[j].1 && s[i].0 != s[j].0 {
                    let mut t = s.clone();
                    t.remove(j);
                    t.remove(i);
                    out.push(t);
                }
            }
        }
        if s.len() + 2 <= self.bound {
            for h in 0..self.alphabet.len() as u16 {
                let mut t = s.clone();
                t.push((Sign::Plus, h));
                t.push((Sign::Minus, h));
                out.push(t);
            }
        }
        for i in 0..s.len().saturating_sub(1) {
            if s[i] != s[i + 1] {
                let mut t = s.clone();
                t.swap(i, i + 1);
                out.push(t);
            }
        }
        out
    }
}

/// Decides whether `y` is reachable from `x` by cancellations, insertions
/// of cancelling pairs (over the elements occurring in `x` and `y`) and
/// permutations, never exceeding length `bound`.
pub fn rewrite_closure_equiv(x: &FormalSum, y: &FormalSum, bound: usize) -> Result<bool> {
    x.handle().ensure_same(y.handle())?;
    let alphabet = x
        .entries()
        .iter()
        .chain(y.entries())
        .map(|e| e.element.clone())
        .collect();
    RewriteClosure::new(x.handle(), alphabet, bound).equivalent(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formal::SignedEntry;

    fn free() -> Semigroup {
        Semigroup::parse("free:a,b").unwrap()
    }

    fn formal(h: &Semigroup, text: &str) -> FormalSum {
        let entries = text
            .split_whitespace()
            .map(|t| {
                let sign = if t.starts_with('-') { Sign::Minus } else { Sign::Plus };
                SignedEntry::new(sign, h.parse_element(&t[1..]).unwrap())
            })
            .collect();
        FormalSum::new(h, entries).unwrap()
    }

    #[test]
    fn examples() {
        let h = free();
        assert!(rewrite_closure_equiv(&formal(&h, "+a -a"), &FormalSum::empty(&h), 4).unwrap());
        assert!(rewrite_closure_equiv(&formal(&h, "+a +b"), &formal(&h, "+b +a"), 4).unwrap());
        assert!(!rewrite_closure_equiv(&formal(&h, "+a"), &formal(&h, "+b"), 5).unwrap());
        assert!(rewrite_closure_equiv(&formal(&h, "-a +b +a"), &formal(&h, "+b"), 3).unwrap());
        assert!(!rewrite_closure_equiv(&formal(&h, "+a +a"), &formal(&h, "+a"), 4).unwrap());
    }

    #[test]
    fn insertion_reaches_longer_sums() {
        let h = free();
        let x = formal(&h, "+a");
        let y = formal(&h, "+b +a -b");
        assert!(rewrite_closure_equiv(&x, &y, 3).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let h = free();
        let long = formal(&h, "+a +a +a");
        assert_eq!(
            rewrite_closure_equiv(&long, &FormalSum::empty(&h), 2),
            Err(Error::BoundExceeded { bound: 2 })
        );
    }

    #[test]
    fn alphabet_is_enforced() {
        let h = free();
        let a = h.parse_element("a").unwrap();
        let mut closure = RewriteClosure::new(&h, vec![a], 4);
        assert!(closure.class(&formal(&h, "+b")).is_err());
    }
}
