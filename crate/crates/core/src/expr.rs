//! Expression syntax over a semigroup.
//!
//! ```text
//! expr    := sum ('/' sum)*
//! sum     := product (('+' | '-') product)*
//! product := factor (('*' | '·') factor)*
//! factor  := ('+' | '-') factor | word
//! word    := atom ('.' atom)*
//! atom    := NAME | '[' ELEMENT ']' | INTEGER | '(' expr ')'
//! ```
//!
//! `.` is the semigroup product and only joins element atoms. Integers are
//! scalars: `3*a` means `a + a + a`. A name is looked up as a generator
//! first and then in the semigroup's element syntax, so `ab` denotes the
//! word `a.b` over single-letter alphabets and canonical printings parse
//! back. Brackets quote elements that do not look like names, e.g. `[3]`
//! over `nat+`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::formal::CanonicalSum;
use crate::fraction::Fraction;
use crate::semigroup::{Element, Semigroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// A generator or element name; bracketed literals keep their brackets.
    Generator(String),
    SgProduct(Box<Expr>, Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    IntScalar(BigInt, Box<Expr>),
    /// The literal `0`, so that printed zero sums parse back.
    Zero,
}

impl Expr {
    pub fn generator(name: &str) -> Expr {
        Expr::Generator(name.to_owned())
    }

    fn is_word(&self) -> bool {
        matches!(self, Expr::Generator(_) | Expr::SgProduct(..))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Bracket(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Dot,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(n) => write!(f, "`{n}`"),
            Tok::Bracket(b) => write!(f, "`[{b}]`"),
            Tok::Int(k) => write!(f, "`{k}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

fn syntax(pos: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' | '·' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '.' => Some(Tok::Dot),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((pos, tok));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Int(digits.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || matches!(chars[i].1, '_' | '^')) {
                i += 1;
            }
            out.push((pos, Tok::Name(chars[start..i].iter().map(|&(_, c)| c).collect())));
        } else if c == '[' {
            let start = i + 1;
            let close = chars[start..]
                .iter()
                .position(|&(_, c)| c == ']')
                .ok_or_else(|| syntax(pos, "unclosed `[`"))?;
            let inner: String = chars[start..start + close].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Bracket(inner)));
            i = start + close + 1;
        } else {
            return Err(syntax(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

enum Factor {
    Scalar(BigInt),
    Term(Expr),
}

fn word_operand(f: Factor, pos: usize) -> Result<Expr> {
    match f {
        Factor::Term(e) if e.is_word() => Ok(e),
        _ => Err(syntax(pos, "`.` joins semigroup elements only")),
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.sum()?;
        while self.eat(&Tok::Slash) {
            acc = Expr::Div(Box::new(acc), Box::new(self.sum()?));
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = self.product()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
            } else if self.eat(&Tok::Minus) {
                acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let start = self.here();
        let mut scalar: Option<BigInt> = None;
        let mut term: Option<Expr> = None;
        loop {
            match self.factor()? {
                Factor::Scalar(k) => scalar = Some(scalar.map_or(k.clone(), |s| s * k)),
                Factor::Term(e) => {
                    term = Some(match term {
                        None => e,
                        Some(t) => Expr::Mul(Box::new(t), Box::new(e)),
                    })
                }
            }
            if !self.eat(&Tok::Star) {
                break;
            }
        }
        let term = match (term, &scalar) {
            (Some(t), _) => t,
            (None, Some(k)) if k.is_zero() => return Ok(Expr::Zero),
            (None, _) => return Err(syntax(start, "an integer scalar needs a ring operand")),
        };
        Ok(match scalar {
            Some(k) => Expr::IntScalar(k, Box::new(term)),
            None => term,
        })
    }

    fn factor(&mut self) -> Result<Factor> {
        if self.eat(&Tok::Plus) {
            return self.factor();
        }
        if self.eat(&Tok::Minus) {
            return Ok(match self.factor()? {
                Factor::Scalar(k) => Factor::Scalar(-k),
                Factor::Term(e) => Factor::Term(Expr::Neg(Box::new(e))),
            });
        }
        let start = self.here();
        let first = self.atom()?;
        if self.peek() != Some(&Tok::Dot) {
            return Ok(first);
        }
        let mut acc = word_operand(first, start)?;
        while self.eat(&Tok::Dot) {
            let start = self.here();
            let next = word_operand(self.atom()?, start)?;
            acc = Expr::SgProduct(Box::new(acc), Box::new(next));
        }
        Ok(Factor::Term(acc))
    }

    fn atom(&mut self) -> Result<Factor> {
        let pos = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(syntax(pos, "unexpected end of input"));
        };
        self.pos += 1;
        match tok {
            Tok::Name(n) => Ok(Factor::Term(Expr::Generator(n))),
            Tok::Bracket(b) => Ok(Factor::Term(Expr::Generator(format!("[{b}]")))),
            Tok::Int(k) => Ok(Factor::Scalar(k)),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.here(), "expected `)`"));
                }
                Ok(Factor::Term(inner))
            }
            other => Err(syntax(pos, format!("unexpected {other}"))),
        }
    }
}

/// Parses an expression; errors carry the byte offset of the problem.
pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(syntax(p.here(), format!("unexpected {tok}")));
    }
    Ok(e)
}

/// Result of evaluating an expression: a ring element, or a field element
/// once a division has occurred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Ring(CanonicalSum),
    Field(Fraction),
}

impl Value {
    pub fn to_fraction(&self) -> Result<Fraction> {
        match self {
            Value::Ring(x) => Fraction::embed(x),
            Value::Field(w) => Ok(w.clone()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Ring(x) => x.fmt(f),
            Value::Field(w) => w.fmt(f),
        }
    }
}

/// Resolves a name or bracketed literal to an element of `h`.
pub fn resolve_element(h: &Semigroup, name: &str) -> Result<Element> {
    if let Some(inner) = name.strip_prefix('[').and_then(|n| n.strip_suffix(']')) {
        return h
            .parse_element(inner)
            .map_err(|_| Error::UnknownGenerator(name.to_owned()));
    }
    h.generator(name)
        .map_or_else(|| h.parse_element(name), Ok)
        .map_err(|_| Error::UnknownGenerator(name.to_owned()))
}

fn eval_word(e: &Expr, h: &Semigroup) -> Result<Element> {
    match e {
        Expr::Generator(name) => resolve_element(h, name),
        Expr::SgProduct(a, b) => h.op(&eval_word(a, h)?, &eval_word(b, h)?),
        _ => Err(syntax(0, "`.` joins semigroup elements only")),
    }
}

fn binary(
    a: Value,
    b: Value,
    ring: impl FnOnce(&CanonicalSum, &CanonicalSum) -> Result<CanonicalSum>,
    field: impl FnOnce(&Fraction, &Fraction) -> Result<Fraction>,
) -> Result<Value> {
    match (&a, &b) {
        (Value::Ring(x), Value::Ring(y)) => ring(x, y).map(Value::Ring),
        _ => field(&a.to_fraction()?, &b.to_fraction()?).map(Value::Field),
    }
}

/// Evaluates in `R(H)`; any division moves the computation to `F(H)`.
pub fn eval_expr(e: &Expr, h: &Semigroup) -> Result<Value> {
    Ok(match e {
        Expr::Zero => Value::Ring(CanonicalSum::zero(h)),
        Expr::Generator(_) | Expr::SgProduct(..) => Value::Ring(CanonicalSum::embed(h, &eval_word(e, h)?)?),
        Expr::Add(a, b) => binary(eval_expr(a, h)?, eval_expr(b, h)?, CanonicalSum::add, Fraction::add)?,
        Expr::Sub(a, b) => binary(eval_expr(a, h)?, eval_expr(b, h)?, CanonicalSum::sub, Fraction::sub)?,
        Expr::Mul(a, b) => binary(eval_expr(a, h)?, eval_expr(b, h)?, CanonicalSum::mul, Fraction::mul)?,
        Expr::Neg(a) => match eval_expr(a, h)? {
            Value::Ring(x) => Value::Ring(x.neg()),
            Value::Field(w) => Value::Field(w.neg()),
        },
        Expr::IntScalar(k, a) => match eval_expr(a, h)? {
            Value::Ring(x) => Value::Ring(x.scale(k)),
            Value::Field(w) => Value::Field(Fraction::new(w.numerator().scale(k), w.denominator().clone())?),
        },
        Expr::Div(a, b) => {
            if !h.is_commutative() {
                return Err(Error::NoncommutativeSemigroup(h.id().to_owned()));
            }
            match (eval_expr(a, h)?, eval_expr(b, h)?) {
                (Value::Ring(x), Value::Ring(y)) => Value::Field(Fraction::new(x, y)?),
                (x, y) => Value::Field(x.to_fraction()?.div(&y.to_fraction()?)?),
            }
        }
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, h: &Semigroup) -> Result<Value> {
    eval_expr(&parse_expr(text)?, h)
}

/// Evaluates an expression that must stay in `R(H)`.
pub fn eval_ring(text: &str, h: &Semigroup) -> Result<CanonicalSum> {
    match eval_str(text, h)? {
        Value::Ring(x) => Ok(x),
        Value::Field(_) => Err(syntax(0, "expression contains a division; use `eval` instead")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{random_sum, rng_from_seed};

    fn g(n: &str) -> Box<Expr> {
        Box::new(Expr::generator(n))
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_expr("(a + b)*(a - b)").unwrap(),
            Expr::Mul(Box::new(Expr::Add(g("a"), g("b"))), Box::new(Expr::Sub(g("a"), g("b"))))
        );
        assert_eq!(
            parse_expr("a.b - b.a").unwrap(),
            Expr::Sub(
                Box::new(Expr::SgProduct(g("a"), g("b"))),
                Box::new(Expr::SgProduct(g("b"), g("a")))
            )
        );
        assert_eq!(
            parse_expr("x*x / x").unwrap(),
            Expr::Div(Box::new(Expr::Mul(g("x"), g("x"))), g("x"))
        );
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse_expr("a + b / c + d").unwrap(),
            Expr::Div(Box::new(Expr::Add(g("a"), g("b"))), Box::new(Expr::Add(g("c"), g("d"))))
        );
        assert_eq!(
            parse_expr("a * b.c").unwrap(),
            Expr::Mul(g("a"), Box::new(Expr::SgProduct(g("b"), g("c"))))
        );
        assert_eq!(
            parse_expr("-a.b").unwrap(),
            Expr::Neg(Box::new(Expr::SgProduct(g("a"), g("b"))))
        );
        assert_eq!(parse_expr("3*a").unwrap(), Expr::IntScalar(3.into(), g("a")));
        assert_eq!(parse_expr("-2·a").unwrap(), Expr::IntScalar((-2).into(), g("a")));
        assert_eq!(
            parse_expr("a*2*b").unwrap(),
            Expr::IntScalar(2.into(), Box::new(Expr::Mul(g("a"), g("b"))))
        );
        assert_eq!(parse_expr("[3]").unwrap(), Expr::Generator("[3]".into()));
        assert_eq!(parse_expr("0").unwrap(), Expr::Zero);
        assert_eq!(parse_expr("-0").unwrap(), Expr::Zero);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let cases = [
            ("a +", 3),
            ("(a + b", 6),
            ("a $ b", 2),
            ("3", 0),
            ("a.(b+c)", 2),
            ("a.3", 2),
            ("a b", 2),
            ("[x", 0),
        ];
        for (text, pos) in cases {
            match parse_expr(text) {
                Err(Error::Syntax { pos: p, .. }) => assert_eq!(p, pos, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn eval_examples() {
        let free = Semigroup::parse("free:a,b").unwrap();
        let v = eval_str("(a+b)*(a-b)", &free).unwrap();
        assert_eq!(v.to_string(), "+aa -ab +ba -bb");
        assert_eq!(eval_str("a - a", &free).unwrap().to_string(), "0");
        assert_eq!(eval_str("a.b - b.a", &free).unwrap().to_string(), "+ab -ba");
        assert_eq!(eval_str("3*a + b.a.b", &free).unwrap().to_string(), "+3·a +bab");

        let fc = Semigroup::parse("freecomm:x").unwrap();
        let Value::Field(w) = eval_str("(x.x)/x", &fc).unwrap() else {
            panic!("expected a fraction")
        };
        assert_eq!(w.to_string(), "(+x^2) / (+x)");
        let x = CanonicalSum::parse(&fc, "+x").unwrap();
        assert!(w.equals(&Fraction::embed(&x).unwrap()).unwrap());
    }

    #[test]
    fn eval_errors() {
        let free = Semigroup::parse("free:a,b").unwrap();
        assert!(matches!(eval_str("a + c", &free), Err(Error::UnknownGenerator(_))));
        assert!(matches!(
            eval_str("a / b", &free),
            Err(Error::NoncommutativeSemigroup(_))
        ));
        let nat = Semigroup::naturals();
        assert_eq!(eval_str("[1] / ([1] - [1])", &nat), Err(Error::ZeroDenominator));
        assert_eq!(
            eval_str("[1] / (([1]/[2]) - ([1]/[2]))", &nat),
            Err(Error::DivisionByZeroClass)
        );
        let z2 = Semigroup::from_table_text("elements: e g\ntable:\ne g\ng e\n").unwrap();
        assert!(matches!(
            eval_str("((e + g)/e) * ((e - g)/e)", &z2),
            Err(Error::ZeroDivisorDetected { .. })
        ));
    }

    #[test]
    fn division_matches_embedding_route() {
        let nat = Semigroup::naturals();
        let mut rng = rng_from_seed(21);
        for _ in 0..50 {
            let x = random_sum(&nat, &mut rng, 3, 3);
            let y = crate::sample::random_nonzero_sum(&nat, &mut rng, 3, 3);
            let direct = eval_str(&format!("({x}) / ({y})"), &nat)
                .unwrap()
                .to_fraction()
                .unwrap();
            let via = Fraction::embed(&x).unwrap().div(&Fraction::embed(&y).unwrap()).unwrap();
            assert!(direct.equals(&via).unwrap());
        }
    }

    #[test]
    fn printed_sums_evaluate_back() {
        let mut rng = rng_from_seed(22);
        for d in ["free:a,b", "free:x1,y", "freecomm1:x,y", "nat+", "natmax"] {
            let h = Semigroup::parse(d).unwrap();
            for _ in 0..50 {
                let x = random_sum(&h, &mut rng, 4, 5);
                let back = eval_ring(&x.to_string(), &h);
                assert_eq!(back.as_ref(), Ok(&x), "{d}: {x}");
            }
        }
    }
}
