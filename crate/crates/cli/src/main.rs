//! `sgr`: command-line access to semigroup rings and their fraction fields.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sgr_core::homlift::{FieldLift, RingLift};
use sgr_core::oracle::{zero_divisor_search, zero_divisor_search_in};
use sgr_core::{
    check_axioms, check_field_lift, check_ring_hom, check_semigroup_hom, eval_ring, eval_str, lift_to_field,
    lift_to_ring, AxiomConfig, Error, FieldAdapter, Fraction, Integers, RationalFunctions, Rationals, RingAdapter,
    Semigroup, SemigroupHom, Value,
};

#[derive(Parser)]
#[command(name = "sgr", version, about = "Rings and fields of fractions built from semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form of a ring expression.
    Normalize(ExprArgs),
    /// Evaluate an expression; division produces a fraction.
    Eval(ExprArgs),
    /// Validate a Cayley table file.
    CheckTable { path: PathBuf },
    /// Check ring (and field, when commutative) axioms on random samples.
    Axioms {
        #[arg(long)]
        semigroup: String,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_support: usize,
        #[arg(long, default_value_t = 5)]
        coeff_bound: i64,
    },
    /// Audit claims that need extra hypotheses.
    Audit {
        #[command(subcommand)]
        audit: Audit,
    },
    /// Evaluate the lift of a semigroup map on an expression.
    Lift {
        #[arg(long)]
        semigroup: String,
        /// Generator images, e.g. `a=2,b=3` or `1=t`.
        #[arg(long)]
        map: String,
        #[arg(long, value_enum)]
        target: Target,
        /// Also verify the lift against the map on samples.
        #[arg(long)]
        check_diagram: bool,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

#[derive(Args)]
struct ExprArgs {
    #[arg(long)]
    semigroup: String,
    #[arg(allow_hyphen_values = true)]
    expr: String,
}

#[derive(Subcommand)]
enum Audit {
    /// Search a box of small sums for x, y nonzero with x*y = 0.
    ZeroDivisors {
        #[arg(long, conflicts_with = "semigroup", required_unless_present = "semigroup")]
        table: Option<PathBuf>,
        #[arg(long)]
        semigroup: Option<String>,
        #[arg(long, default_value_t = 2)]
        max_support: usize,
        #[arg(long, default_value_t = 2)]
        coeff_bound: i64,
        /// Number of elements to search over for infinite semigroups.
        #[arg(long)]
        universe: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Int,
    Rat,
    Ratfunc,
}

/// Command outcome: output text and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn pass(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::UnknownGenerator(_)
            | Error::MalformedSpec(_)
            | Error::UnknownInstance(_)
            | Error::Io(_)
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(if is_usage(&e) { 2 } else { 1 })
        }
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Normalize(args) => {
            let h = Semigroup::parse(&args.semigroup)?;
            Ok(Outcome::pass(format!("{}\n", eval_ring(&args.expr, &h)?)))
        }
        Command::Eval(args) => {
            let h = Semigroup::parse(&args.semigroup)?;
            Ok(Outcome::pass(format!("{}\n", eval_str(&args.expr, &h)?)))
        }
        Command::CheckTable { path } => check_table(&path),
        Command::Axioms {
            semigroup,
            samples,
            seed,
            max_support,
            coeff_bound,
        } => {
            let h = Semigroup::parse(&semigroup)?;
            let report = check_axioms(
                &h,
                AxiomConfig {
                    samples,
                    seed,
                    max_support,
                    coeff_bound,
                },
            )?;
            Ok(Outcome {
                ok: report.passed(),
                text: report.to_string(),
            })
        }
        Command::Audit {
            audit:
                Audit::ZeroDivisors {
                    table,
                    semigroup,
                    max_support,
                    coeff_bound,
                    universe,
                },
        } => {
            let h = match (table, semigroup) {
                (Some(path), _) => Semigroup::load_table(path)?,
                (None, Some(s)) => Semigroup::parse(&s)?,
                (None, None) => return Err(Error::MalformedSpec("give --table or --semigroup".into())),
            };
            audit_zero_divisors(&h, max_support, coeff_bound, universe)
        }
        Command::Lift {
            semigroup,
            map,
            target,
            check_diagram,
            samples,
            seed,
            expr,
        } => {
            let h = Semigroup::parse(&semigroup)?;
            let value = eval_str(&expr, &h)?;
            let lift = LiftRun {
                h: &h,
                map: &map,
                value: &value,
                check: check_diagram.then_some((samples, seed)),
            };
            match target {
                Target::Int => lift.ring(Integers),
                Target::Rat => lift.field(Rationals),
                Target::Ratfunc => lift.field(RationalFunctions),
            }
        }
    }
}

fn check_table(path: &PathBuf) -> Result<Outcome, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    match Semigroup::from_table_text(&text) {
        Ok(h) => {
            let t = h.cayley_table().expect("finite");
            let identity = h.identity().map_or("none".to_owned(), |e| h.format_element(&e));
            let mut out = String::new();
            writeln!(out, "valid semigroup table").unwrap();
            writeln!(out, "order: {}", t.order()).unwrap();
            writeln!(out, "commutative: {}", if t.is_commutative() { "yes" } else { "no" }).unwrap();
            writeln!(out, "identity: {identity}").unwrap();
            Ok(Outcome::pass(out))
        }
        Err(e @ (Error::NotAssociative { .. } | Error::EntryOutOfRange { .. })) => Ok(Outcome {
            text: format!("invalid semigroup table\nerror[{}]: {e}\n", e.kind()),
            ok: false,
        }),
        Err(e) => Err(e),
    }
}

fn audit_zero_divisors(
    h: &Semigroup,
    max_support: usize,
    coeff_bound: i64,
    universe: Option<usize>,
) -> Result<Outcome, Error> {
    let mut out = String::new();
    writeln!(out, "semigroup: {}", h.id()).unwrap();
    let found = match (h.elements(), universe) {
        (Some(_), _) | (None, None) => {
            let n = h.elements().map_or(4, |e| e.len());
            writeln!(
                out,
                "search: {n} elements, support <= {max_support}, |coeff| <= {coeff_bound}"
            )
            .unwrap();
            zero_divisor_search(h, max_support, coeff_bound)?
        }
        (None, Some(n)) => {
            writeln!(
                out,
                "search: {n} elements, support <= {max_support}, |coeff| <= {coeff_bound}"
            )
            .unwrap();
            zero_divisor_search_in(h, &h.small_elements(n), max_support, coeff_bound)?
        }
    };
    match found {
        Some((x, y)) => {
            writeln!(out, "zero divisor found").unwrap();
            writeln!(out, "  x = {x}").unwrap();
            writeln!(out, "  y = {y}").unwrap();
            writeln!(out, "  x*y = {}", x.mul(&y)?).unwrap();
            if h.is_commutative() {
                let e = Fraction::embed(&x)?.mul(&Fraction::embed(&y)?);
                if let Err(e) = e {
                    writeln!(out, "  fraction product e2(x)*e2(y): error[{}]", e.kind()).unwrap();
                }
            }
            writeln!(out, "R(H) is not an integral domain; F(H) is undefined").unwrap();
            Ok(Outcome { text: out, ok: false })
        }
        None => {
            writeln!(out, "no zero divisor in the search box").unwrap();
            Ok(Outcome::pass(out))
        }
    }
}

struct LiftRun<'a> {
    h: &'a Semigroup,
    map: &'a str,
    value: &'a Value,
    check: Option<(usize, u64)>,
}

impl LiftRun<'_> {
    fn ring<A: RingAdapter>(&self, target: A) -> Result<Outcome, Error> {
        self.ring_with(lift_to_ring(SemigroupHom::parse_map(self.h, target, self.map)?))
    }

    fn ring_with<A: RingAdapter>(&self, lift: RingLift<A>) -> Result<Outcome, Error> {
        let x = match self.value {
            Value::Ring(x) => x,
            Value::Field(_) if !self.h.is_commutative() => {
                return Err(Error::NoncommutativeSemigroup(self.h.id().to_owned()))
            }
            Value::Field(_) => {
                return Err(Error::MalformedSpec(format!(
                    "the {} are not a field; division needs --target rat or ratfunc",
                    lift.target().describe()
                )))
            }
        };
        let v = lift.apply(x)?;
        let mut out = format!("{}\n", lift.target().format(&v));
        let ok = match self.check {
            Some((samples, seed)) => self.check_ring(&lift, samples, seed, &mut out)?,
            None => true,
        };
        Ok(Outcome { text: out, ok })
    }

    fn field<F: FieldAdapter>(&self, target: F) -> Result<Outcome, Error> {
        let hom = SemigroupHom::parse_map(self.h, target, self.map)?;
        if !self.h.is_commutative() {
            // no fraction field, but the ring lift still makes sense
            return self.ring_with(lift_to_ring(hom));
        }
        let lift = lift_to_field(hom)?;
        let v = match self.value {
            Value::Ring(x) => lift.ring_lift().apply(x)?,
            Value::Field(w) => lift.apply(w)?,
        };
        let mut out = format!("{}\n", lift.ring_lift().target().format(&v));
        let ok = match self.check {
            Some((samples, seed)) => {
                let ring_ok = self.check_ring(lift.ring_lift(), samples, seed, &mut out)?;
                check_field(&lift, samples, seed, &mut out)? && ring_ok
            }
            None => true,
        };
        Ok(Outcome { text: out, ok })
    }

    fn check_ring<A: RingAdapter>(
        &self,
        lift: &RingLift<A>,
        samples: usize,
        seed: u64,
        out: &mut String,
    ) -> Result<bool, Error> {
        let t = lift.target();
        let sg = check_semigroup_hom(lift.hom(), samples, seed)?;
        let mode = if sg.exhaustive { "all pairs" } else { "sampled pairs" };
        writeln!(
            out,
            "map is a semigroup homomorphism: {} ({} {mode})",
            verdict(sg.passed()),
            sg.pairs_checked
        )
        .unwrap();
        if let Some(v) = sg.violations.first() {
            writeln!(
                out,
                "  f({}) = {} but f({})*f({}) = {}",
                self.h.format_element(&self.h.op(&v.a, &v.b)?),
                t.format(&v.image_of_product),
                self.h.format_element(&v.a),
                self.h.format_element(&v.b),
                t.format(&v.product_of_images)
            )
            .unwrap();
        }
        let r = check_ring_hom(lift, samples, seed)?;
        writeln!(
            out,
            "lift is a ring homomorphism: {} ({} pairs)",
            verdict(r.passed()),
            r.pairs_checked
        )
        .unwrap();
        if !r.zero_preserved {
            writeln!(out, "  zero is not preserved").unwrap();
        }
        if let Some((x, y)) = r.additivity.first() {
            writeln!(out, "  not additive at x = {x}; y = {y}").unwrap();
        }
        if let Some((x, y)) = r.multiplicativity.first() {
            writeln!(out, "  not multiplicative at x = {x}; y = {y}").unwrap();
        }
        writeln!(
            out,
            "f = lift o e1: {} ({} elements)",
            verdict(r.diagram.is_empty()),
            r.diagram_checked
        )
        .unwrap();
        if let Some(e) = r.diagram.first() {
            writeln!(out, "  differs at {}", self.h.format_element(e)).unwrap();
        }
        Ok(sg.passed() && r.passed())
    }
}

fn check_field<F: FieldAdapter>(
    lift: &FieldLift<F>,
    samples: usize,
    seed: u64,
    out: &mut String,
) -> Result<bool, Error> {
    let r = check_field_lift(lift, samples, seed)?;
    writeln!(
        out,
        "field lift: {} ({} samples, {} skipped: denominator maps to zero)",
        verdict(r.passed()),
        r.samples,
        r.skipped
    )
    .unwrap();
    if !r.zero_preserved {
        writeln!(out, "  zero is not preserved").unwrap();
    }
    if !r.one_preserved {
        writeln!(out, "  one is not preserved").unwrap();
    }
    if let Some(x) = r.embedding.first() {
        writeln!(out, "  lift o e2 differs from ring lift at {x}").unwrap();
    }
    if let Some((w, s)) = r.scaling.first() {
        writeln!(out, "  not invariant under scaling {w} by {s}").unwrap();
    }
    if let Some(e) = r.diagram.first() {
        writeln!(
            out,
            "  lift o e2 o e1 differs from the map at {}",
            lift.ring_lift().hom().source().format_element(e)
        )
        .unwrap();
    }
    Ok(r.passed())
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
