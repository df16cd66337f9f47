//! Randomized axiom checks for `R(H)` and, over commutative semigroups,
//! for `F(H)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::formal::CanonicalSum;
use crate::fraction::Fraction;
use crate::sample::{random_nonzero_sum, random_sum, rng_from_seed};
use crate::semigroup::Semigroup;

/// Sampling parameters for [`check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomConfig {
    pub samples: usize,
    pub seed: u64,
    pub max_support: usize,
    pub coeff_bound: i64,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig {
            samples: 1000,
            seed: 0,
            max_support: 4,
            coeff_bound: 5,
        }
    }
}

/// Outcome of one law over the sampled inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    /// First counterexample or a witness, already formatted.
    pub detail: Option<String>,
}

impl LawResult {
    fn new(name: &'static str) -> Self {
        LawResult {
            name,
            checked: 0,
            failures: 0,
            detail: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.detail.is_none() {
                self.detail = Some(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSection {
    /// The semigroup is not commutative, so there is no fraction field.
    Skipped,
    Checked(Vec<LawResult>),
    /// Fraction arithmetic hit a zero divisor; the remaining laws were not run.
    Aborted {
        laws: Vec<LawResult>,
        error: Error,
    },
}

/// Everything `sgr axioms` reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub semigroup: String,
    pub config: AxiomConfig,
    pub ring: Vec<LawResult>,
    pub field: FieldSection,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        let field_ok = match &self.field {
            FieldSection::Skipped => true,
            FieldSection::Checked(laws) => laws.iter().all(LawResult::passed),
            FieldSection::Aborted { .. } => false,
        };
        field_ok && self.ring.iter().all(LawResult::passed)
    }
}

fn write_law(f: &mut fmt::Formatter<'_>, law: &LawResult) -> fmt::Result {
    let tag = if law.passed() { "PASS" } else { "FAIL" };
    write!(
        f,
        "  [{tag}] {:<34} {}/{}",
        law.name,
        law.checked - law.failures,
        law.checked
    )?;
    if let Some(d) = &law.detail {
        write!(f, "  {d}")?;
    }
    writeln!(f)
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "semigroup: {}", self.semigroup)?;
        writeln!(
            f,
            "samples: {}  seed: {}  max-support: {}  coeff-bound: {}",
            c.samples, c.seed, c.max_support, c.coeff_bound
        )?;
        writeln!(f, "ring R(H):")?;
        for law in &self.ring {
            write_law(f, law)?;
        }
        match &self.field {
            FieldSection::Skipped => writeln!(f, "field F(H): skipped (semigroup is not commutative)")?,
            FieldSection::Checked(laws) => {
                writeln!(f, "field F(H):")?;
                for law in laws {
                    write_law(f, law)?;
                }
            }
            FieldSection::Aborted { laws, error } => {
                writeln!(f, "field F(H):")?;
                for law in laws {
                    write_law(f, law)?;
                }
                writeln!(f, "  [FAIL] aborted: error[{}] {error}", error.kind())?;
            }
        }
        writeln!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn triple(x: &CanonicalSum, y: &CanonicalSum, z: &CanonicalSum) -> String {
    format!("x = {x}; y = {y}; z = {z}")
}

fn ring_laws(h: &Semigroup, cfg: &AxiomConfig) -> Result<Vec<LawResult>> {
    let mut rng = rng_from_seed(cfg.seed);
    let mut add_assoc = LawResult::new("addition associative");
    let mut add_comm = LawResult::new("addition commutative");
    let mut zero = LawResult::new("zero is additive identity");
    let mut negation = LawResult::new("additive inverses");
    let mut mul_assoc = LawResult::new("multiplication associative");
    let mut left = LawResult::new("left distributive");
    let mut right = LawResult::new("right distributive");
    let mut comm = LawResult::new(if h.is_commutative() {
        "multiplication commutative"
    } else {
        "multiplication noncommutative"
    });
    let mut unit = h.identity().map(|_| LawResult::new("unit is multiplicative identity"));
    let zero_sum = CanonicalSum::zero(h);
    let unit_sum = CanonicalSum::unit(h);
    let mut witness = None;

    for _ in 0..cfg.samples {
        let x = random_sum(h, &mut rng, cfg.max_support, cfg.coeff_bound);
        let y = random_sum(h, &mut rng, cfg.max_support, cfg.coeff_bound);
        let z = random_sum(h, &mut rng, cfg.max_support, cfg.coeff_bound);
        let t = || triple(&x, &y, &z);
        add_assoc.record(x.add(&y)?.add(&z)? == x.add(&y.add(&z)?)?, t);
        add_comm.record(x.add(&y)? == y.add(&x)?, t);
        zero.record(x.add(&zero_sum)? == x, t);
        negation.record(x.add(&x.neg())?.is_zero(), t);
        mul_assoc.record(x.mul(&y)?.mul(&z)? == x.mul(&y.mul(&z)?)?, t);
        left.record(x.mul(&y.add(&z)?)? == x.mul(&y)?.add(&x.mul(&z)?)?, t);
        right.record(x.add(&y)?.mul(&z)? == x.mul(&z)?.add(&y.mul(&z)?)?, t);
        let commutes = x.mul(&y)? == y.mul(&x)?;
        if h.is_commutative() {
            comm.record(commutes, t);
        } else if !commutes && witness.is_none() {
            witness = Some(format!("witness: x = {x}; y = {y}"));
        }
        if let (Some(law), Some(u)) = (unit.as_mut(), unit_sum.as_ref()) {
            law.record(u.mul(&x)? == x && x.mul(u)? == x, t);
        }
    }
    if !h.is_commutative() {
        // a noncommutative semigroup has a noncommuting generator pair
        if witness.is_none() {
            let gens = h.generators().unwrap_or_else(|| h.small_elements(8));
            'outer: for a in &gens {
                for b in &gens {
                    let x = CanonicalSum::embed(h, a)?;
                    let y = CanonicalSum::embed(h, b)?;
                    if x.mul(&y)? != y.mul(&x)? {
                        witness = Some(format!("witness: x = {x}; y = {y}"));
                        break 'outer;
                    }
                }
            }
        }
        comm.checked = 1;
        match witness {
            Some(w) => comm.detail = Some(w),
            None => {
                comm.failures = 1;
                comm.detail = Some("no noncommuting pair found".into());
            }
        }
    }
    let mut laws = vec![add_assoc, add_comm, zero, negation, mul_assoc, left, right, comm];
    laws.extend(unit);
    Ok(laws)
}

fn random_fraction(h: &Semigroup, rng: &mut impl rand::Rng, support: usize, bound: i64) -> Result<Fraction> {
    let p = random_sum(h, rng, support, bound);
    let q = random_nonzero_sum(h, rng, support, bound);
    Fraction::new(p, q)
}

fn field_laws(h: &Semigroup, cfg: &AxiomConfig, laws: &mut Vec<LawResult>) -> Result<()> {
    // fraction laws multiply three denominators together; keep them small
    let support = cfg.max_support.min(3);
    let bound = cfg.coeff_bound.min(3);
    let mut rng = rng_from_seed(cfg.seed.wrapping_add(1));
    let zero = Fraction::zero(h)?;
    let one = Fraction::one(h)?;
    let names = [
        "addition associative",
        "addition commutative",
        "zero is additive identity",
        "additive inverses",
        "multiplication associative",
        "multiplication commutative",
        "one is multiplicative identity",
        "distributive",
        "nonzero elements invertible",
    ];
    laws.extend(names.iter().map(|&n| LawResult::new(n)));
    for _ in 0..cfg.samples {
        let a = random_fraction(h, &mut rng, support, bound)?;
        let b = random_fraction(h, &mut rng, support, bound)?;
        let c = random_fraction(h, &mut rng, support, bound)?;
        let t = || format!("a = {a}; b = {b}; c = {c}");
        let checks = [
            a.add(&b)?.add(&c)?.equals(&a.add(&b.add(&c)?)?)?,
            a.add(&b)?.equals(&b.add(&a)?)?,
            a.add(&zero)?.equals(&a)?,
            a.add(&a.neg())?.equals(&zero)?,
            a.mul(&b)?.mul(&c)?.equals(&a.mul(&b.mul(&c)?)?)?,
            a.mul(&b)?.equals(&b.mul(&a)?)?,
            a.mul(&one)?.equals(&a)?,
            a.mul(&b.add(&c)?)?.equals(&a.mul(&b)?.add(&a.mul(&c)?)?)?,
        ];
        for (law, ok) in laws.iter_mut().zip(checks) {
            law.record(ok, t);
        }
        if !a.is_zero() {
            laws[8].record(a.mul(&a.inv()?)?.equals(&one)?, t);
        }
    }
    Ok(())
}

/// Runs the ring laws on `cfg.samples` random triples, then the field laws
/// when `h` is commutative. The report is a pure function of `h` and `cfg`.
pub fn check_axioms(h: &Semigroup, cfg: AxiomConfig) -> Result<AxiomReport> {
    let ring = ring_laws(h, &cfg)?;
    let field = if h.is_commutative() {
        let mut laws = Vec::new();
        match field_laws(h, &cfg, &mut laws) {
            Ok(()) => FieldSection::Checked(laws),
            Err(error @ Error::ZeroDivisorDetected { .. }) => FieldSection::Aborted { laws, error },
            Err(e) => return Err(e),
        }
    } else {
        FieldSection::Skipped
    };
    Ok(AxiomReport {
        semigroup: h.id().to_owned(),
        config: cfg,
        ring,
        field,
    })
}
