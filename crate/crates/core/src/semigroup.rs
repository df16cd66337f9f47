//! Semigroups: the element domain, built-in instances and finite Cayley tables.
//!
//! A [`Semigroup`] is a cheap, clonable handle. Elements do not carry their
//! handle; membership is checked by the handle ([`Semigroup::check`]) and
//! every binary operation on sums first checks that both operands share a
//! handle.

use std::cmp::Ordering;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use rand::Rng;

use crate::error::{Error, Result};

/// An element of some semigroup.
///
/// The total order is per encoding: words compare by length first and then
/// letter by letter in alphabet order, exponent vectors lexicographically,
/// naturals and table indices numerically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// Nonempty word over the alphabet of a free semigroup (letter indices).
    Word(Vec<u16>),
    /// Exponent vector of a free commutative semigroup or monoid.
    Monomial(Vec<u32>),
    /// Positive integer.
    Natural(u64),
    /// Row/column index into a Cayley table.
    Index(usize),
}

impl Element {
    fn rank(&self) -> u8 {
        match self {
            Element::Word(_) => 0,
            Element::Monomial(_) => 1,
            Element::Natural(_) => 2,
            Element::Index(_) => 3,
        }
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Element::Word(a), Element::Word(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            (Element::Monomial(a), Element::Monomial(b)) => a.cmp(b),
            (Element::Natural(a), Element::Natural(b)) => a.cmp(b),
            (Element::Index(a), Element::Index(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A validated finite multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<usize>,
    commutative: bool,
    identity: Option<usize>,
}

impl CayleyTable {
    /// Validates a raw `n × n` index matrix: shape, entry range and
    /// associativity over all `n³` triples. Commutativity and the identity
    /// are detected by exhaustive scan.
    pub fn validate(raw: &[Vec<usize>]) -> Result<Self> {
        let order = raw.len();
        if order == 0 {
            return Err(Error::MalformedSpec("a Cayley table needs at least one element".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (row, values) in raw.iter().enumerate() {
            if values.len() != order {
                return Err(Error::MalformedSpec(format!(
                    "row {row} has {} entries, expected {order}",
                    values.len()
                )));
            }
            for (col, &value) in values.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange { row, col, value, order });
                }
                entries.push(value);
            }
        }
        let at = |a: usize, b: usize| entries[a * order + b];
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    let left = at(ab, c);
                    let right = at(a, at(b, c));
                    if left != right {
                        return Err(Error::NotAssociative { a, b, c, left, right });
                    }
                }
            }
        }
        let commutative = (0..order).all(|a| (0..order).all(|b| at(a, b) == at(b, a)));
        let identity = (0..order).find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a));
        Ok(CayleyTable {
            order,
            entries,
            commutative,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b]
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries.chunks(self.order).map(<[usize]>::to_vec).collect()
    }
}

/// Shorthand for [`CayleyTable::validate`].
pub fn validate_cayley(raw: &[Vec<usize>]) -> Result<CayleyTable> {
    CayleyTable::validate(raw)
}

/// Parses the Cayley-table text format into element names and a raw index
/// matrix. The matrix is not validated.
///
/// ```text
/// elements: e g
/// table:
/// e g
/// g e
/// ```
pub fn parse_table_text(text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedSpec("empty table file".into()))?;
    let names: Vec<String> = header
        .strip_prefix("elements:")
        .ok_or_else(|| Error::MalformedSpec("first line must start with `elements:`".into()))?
        .split_whitespace()
        .map(str::to_owned)
        .collect();
    validate_table_names(&names)?;
    match lines.next() {
        Some((_, "table:")) => {}
        Some((no, _)) => return Err(Error::MalformedSpec(format!("line {no}: expected `table:`"))),
        None => return Err(Error::MalformedSpec("missing `table:` line".into())),
    }
    let mut raw = Vec::with_capacity(names.len());
    for (no, line) in lines {
        let row = line
            .split_whitespace()
            .map(|tok| {
                names
                    .iter()
                    .position(|n| n == tok)
                    .ok_or_else(|| Error::MalformedSpec(format!("line {no}: unknown element `{tok}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        raw.push(row);
    }
    if raw.len() != names.len() {
        return Err(Error::MalformedSpec(format!(
            "expected {} table rows, found {}",
            names.len(),
            raw.len()
        )));
    }
    Ok((names, raw))
}

/// Renders a table in the text format accepted by [`parse_table_text`].
pub fn format_table_text(names: &[String], table: &CayleyTable) -> String {
    let mut out = format!("elements: {}\ntable:\n", names.join(" "));
    for row in table.rows() {
        let line: Vec<&str> = row.iter().map(|&i| names[i].as_str()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn validate_table_names(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::MalformedSpec("a Cayley table needs at least one element".into()));
    }
    for (i, name) in names.iter().enumerate() {
        if name.contains(['[', ']']) {
            return Err(Error::MalformedSpec(format!(
                "element name `{name}` may not contain brackets"
            )));
        }
        if names[..i].contains(name) {
            return Err(Error::MalformedSpec(format!("duplicate element name `{name}`")));
        }
    }
    Ok(())
}

fn validate_identifiers(names: &[String]) -> Result<()> {
    if names.is_empty() {
        return Err(Error::MalformedSpec("at least one generator is required".into()));
    }
    if names.len() > usize::from(u16::MAX) {
        return Err(Error::MalformedSpec("too many generators".into()));
    }
    for (i, name) in names.iter().enumerate() {
        let mut chars = name.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::MalformedSpec(format!("`{name}` is not a valid generator name")));
        }
        if names[..i].contains(name) {
            return Err(Error::MalformedSpec(format!("duplicate generator `{name}`")));
        }
    }
    Ok(())
}

#[derive(Debug, PartialEq, Eq)]
enum Kind {
    Free { letters: Vec<String> },
    FreeCommutative { vars: Vec<String>, monoid: bool },
    NatAdd,
    NatMax,
    Table { names: Vec<String>, table: CayleyTable },
}

#[derive(Debug)]
struct Inner {
    id: String,
    kind: Kind,
}

/// Handle to a semigroup `(H, ·)`.
#[derive(Debug, Clone)]
pub struct Semigroup(Arc<Inner>);

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl Eq for Semigroup {}

impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.id)
    }
}

impl Semigroup {
    fn new(id: String, kind: Kind) -> Self {
        Semigroup(Arc::new(Inner { id, kind }))
    }

    /// Builds a handle from a descriptor string: `free:a,b`, `freecomm:x,y`,
    /// `freecomm1:x,y`, `nat+`, `natmax` or `table:<path>`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        let descriptor = descriptor.trim();
        match descriptor {
            "nat+" => return Ok(Self::naturals()),
            "natmax" => return Ok(Self::naturals_max()),
            _ => {}
        }
        let Some((family, rest)) = descriptor.split_once(':') else {
            return Err(Error::UnknownInstance(descriptor.to_owned()));
        };
        let names = || -> Vec<String> { rest.split(',').map(|s| s.trim().to_owned()).collect() };
        match family {
            "free" => Self::free(names()),
            "freecomm" => Self::free_commutative(names(), false),
            "freecomm1" => Self::free_commutative(names(), true),
            "table" => {
                if rest.is_empty() {
                    return Err(Error::MalformedSpec("`table:` needs a path".into()));
                }
                Self::load_table(rest)
            }
            _ => Err(Error::UnknownInstance(descriptor.to_owned())),
        }
    }

    /// Free (noncommutative) semigroup of nonempty words.
    pub fn free<S: Into<String>>(letters: impl IntoIterator<Item = S>) -> Result<Self> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        validate_identifiers(&letters)?;
        let id = format!("free:{}", letters.join(","));
        Ok(Self::new(id, Kind::Free { letters }))
    }

    /// Free commutative semigroup on the given variables; with `monoid` the
    /// empty monomial is included as identity.
    pub fn free_commutative<S: Into<String>>(vars: impl IntoIterator<Item = S>, monoid: bool) -> Result<Self> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        validate_identifiers(&vars)?;
        let prefix = if monoid { "freecomm1" } else { "freecomm" };
        let id = format!("{prefix}:{}", vars.join(","));
        Ok(Self::new(id, Kind::FreeCommutative { vars, monoid }))
    }

    /// Positive integers under addition.
    pub fn naturals() -> Self {
        Self::new("nat+".into(), Kind::NatAdd)
    }

    /// Positive integers under `max`; `1` is the identity.
    pub fn naturals_max() -> Self {
        Self::new("natmax".into(), Kind::NatMax)
    }

    /// Finite semigroup from a validated table with element names.
    pub fn from_table(names: Vec<String>, table: CayleyTable) -> Result<Self> {
        validate_table_names(&names)?;
        if names.len() != table.order() {
            return Err(Error::MalformedSpec(format!(
                "{} names for a table of order {}",
                names.len(),
                table.order()
            )));
        }
        let id = format!("table:{}", names.join(","));
        Ok(Self::new(id, Kind::Table { names, table }))
    }

    /// Finite semigroup whose elements are named by their indices.
    pub fn from_cayley(table: CayleyTable) -> Self {
        let names = (0..table.order()).map(|i| i.to_string()).collect();
        Self::from_table(names, table).expect("index names are distinct")
    }

    /// Parses and validates a table in the text format.
    pub fn from_table_text(text: &str) -> Result<Self> {
        let (names, raw) = parse_table_text(text)?;
        let table = CayleyTable::validate(&raw)?;
        Self::from_table(names, table)
    }

    pub fn load_table(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut handle = Self::from_table_text(&text)?;
        let inner = Arc::get_mut(&mut handle.0).expect("fresh handle");
        inner.id = format!("table:{}", path.display());
        Ok(handle)
    }

    pub fn id(&self) -> &str {
        &self.0.id
    }

    pub fn is_commutative(&self) -> bool {
        match &self.0.kind {
            Kind::Free { letters } => letters.len() == 1,
            Kind::FreeCommutative { .. } | Kind::NatAdd | Kind::NatMax => true,
            Kind::Table { table, .. } => table.is_commutative(),
        }
    }

    pub fn identity(&self) -> Option<Element> {
        match &self.0.kind {
            Kind::Free { .. } | Kind::NatAdd => None,
            Kind::FreeCommutative { vars, monoid } => monoid.then(|| Element::Monomial(vec![0; vars.len()])),
            Kind::NatMax => Some(Element::Natural(1)),
            Kind::Table { table, .. } => table.identity().map(Element::Index),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, Kind::Table { .. })
    }

    pub fn cayley_table(&self) -> Option<&CayleyTable> {
        match &self.0.kind {
            Kind::Table { table, .. } => Some(table),
            _ => None,
        }
    }

    /// All elements of a finite semigroup in order.
    pub fn elements(&self) -> Option<Vec<Element>> {
        self.cayley_table()
            .map(|t| (0..t.order()).map(Element::Index).collect())
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (&self.0.kind, e) {
            (Kind::Free { letters }, Element::Word(w)) => {
                !w.is_empty() && w.iter().all(|&l| usize::from(l) < letters.len())
            }
            (Kind::FreeCommutative { vars, monoid }, Element::Monomial(m)) => {
                m.len() == vars.len() && (*monoid || m.iter().any(|&x| x > 0))
            }
            (Kind::NatAdd | Kind::NatMax, Element::Natural(n)) => *n >= 1,
            (Kind::Table { table, .. }, Element::Index(i)) => *i < table.order(),
            _ => false,
        }
    }

    /// Rejects elements that do not belong to this handle.
    pub fn check(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                element: format!("{e:?}"),
                semigroup: self.0.id.clone(),
            })
        }
    }

    /// Errors with `HandleMismatch` unless both handles denote the same semigroup.
    pub fn ensure_same(&self, other: &Semigroup) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::HandleMismatch {
                left: self.0.id.clone(),
                right: other.0.id.clone(),
            })
        }
    }

    /// `a · b`, after checking membership of both operands.
    pub fn op(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.product(a, b))
    }

    /// `a · b` for operands already known to belong to this handle.
    pub(crate) fn product(&self, a: &Element, b: &Element) -> Element {
        match (&self.0.kind, a, b) {
            (Kind::Free { .. }, Element::Word(x), Element::Word(y)) => {
                let mut w = Vec::with_capacity(x.len() + y.len());
                w.extend_from_slice(x);
                w.extend_from_slice(y);
                Element::Word(w)
            }
            (Kind::FreeCommutative { .. }, Element::Monomial(x), Element::Monomial(y)) => {
                Element::Monomial(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            (Kind::NatAdd, Element::Natural(x), Element::Natural(y)) => {
                Element::Natural(x.checked_add(*y).expect("natural number overflow"))
            }
            (Kind::NatMax, Element::Natural(x), Element::Natural(y)) => Element::Natural(*x.max(y)),
            (Kind::Table { table, .. }, Element::Index(x), Element::Index(y)) => Element::Index(table.product(*x, *y)),
            _ => unreachable!("element does not match semigroup {}", self.0.id),
        }
    }

    /// The least element in the element order.
    pub fn least_element(&self) -> Element {
        match &self.0.kind {
            Kind::Free { .. } => Element::Word(vec![0]),
            Kind::FreeCommutative { vars, monoid } => {
                let mut m = vec![0; vars.len()];
                if !monoid {
                    *m.last_mut().expect("nonempty") = 1;
                }
                Element::Monomial(m)
            }
            Kind::NatAdd | Kind::NatMax => Element::Natural(1),
            Kind::Table { .. } => Element::Index(0),
        }
    }

    /// Generating set for finitely generated instances. `natmax` has none.
    ///
    /// Finite tables list every element; the monoid variant of the free
    /// commutative instance includes its identity.
    pub fn generators(&self) -> Option<Vec<Element>> {
        match &self.0.kind {
            Kind::Free { letters } => Some((0..letters.len()).map(|i| Element::Word(vec![i as u16])).collect()),
            Kind::FreeCommutative { vars, monoid } => {
                let mut gens: Vec<Element> = (0..vars.len()).map(|i| unit_vector(vars.len(), i)).collect();
                if *monoid {
                    gens.insert(0, Element::Monomial(vec![0; vars.len()]));
                }
                Some(gens)
            }
            Kind::NatAdd => Some(vec![Element::Natural(1)]),
            Kind::NatMax => None,
            Kind::Table { table, .. } => Some((0..table.order()).map(Element::Index).collect()),
        }
    }

    /// Writes `e` as an ordered product of generator powers, so that
    /// `e = g₁^k₁ · g₂^k₂ ⋯`.
    pub fn factorize(&self, e: &Element) -> Option<Vec<(Element, u64)>> {
        if !self.contains(e) {
            return None;
        }
        match (&self.0.kind, e) {
            (Kind::Free { .. }, Element::Word(w)) => {
                let mut runs: Vec<(Element, u64)> = Vec::new();
                for &l in w {
                    match runs.last_mut() {
                        Some((Element::Word(g), k)) if g[0] == l => *k += 1,
                        _ => runs.push((Element::Word(vec![l]), 1)),
                    }
                }
                Some(runs)
            }
            (Kind::FreeCommutative { vars, .. }, Element::Monomial(m)) => {
                if m.iter().all(|&x| x == 0) {
                    return Some(vec![(e.clone(), 1)]);
                }
                Some(
                    m.iter()
                        .enumerate()
                        .filter(|(_, &k)| k > 0)
                        .map(|(i, &k)| (unit_vector(vars.len(), i), u64::from(k)))
                        .collect(),
                )
            }
            (Kind::NatAdd, Element::Natural(n)) => Some(vec![(Element::Natural(1), *n)]),
            (Kind::Table { .. }, _) => Some(vec![(e.clone(), 1)]),
            _ => None,
        }
    }

    /// Looks up a generator by name.
    pub fn generator(&self, name: &str) -> Option<Element> {
        match &self.0.kind {
            Kind::Free { letters } => letters
                .iter()
                .position(|l| l == name)
                .map(|i| Element::Word(vec![i as u16])),
            Kind::FreeCommutative { vars, .. } => {
                vars.iter().position(|v| v == name).map(|i| unit_vector(vars.len(), i))
            }
            Kind::NatAdd => (name == "1").then_some(Element::Natural(1)),
            Kind::NatMax => None,
            Kind::Table { names, .. } => names.iter().position(|n| n == name).map(Element::Index),
        }
    }

    /// `limit` small elements: the first ones in element order, except that
    /// monomials are listed by total degree first (plain lexicographic order
    /// has infinitely many elements below `x`). Finite semigroups smaller
    /// than `limit` return all elements.
    pub fn small_elements(&self, limit: usize) -> Vec<Element> {
        match &self.0.kind {
            Kind::Free { letters } => {
                let n = letters.len();
                let mut out = Vec::new();
                let mut layer: Vec<Vec<u16>> = vec![vec![]];
                while out.len() < limit {
                    let mut next = Vec::with_capacity(layer.len() * n);
                    for w in &layer {
                        for l in 0..n {
                            let mut w = w.clone();
                            w.push(l as u16);
                            next.push(w);
                        }
                    }
                    out.extend(next.iter().cloned().map(Element::Word));
                    layer = next;
                }
                out.truncate(limit);
                out
            }
            Kind::FreeCommutative { vars, monoid } => {
                let n = vars.len();
                let mut out = Vec::new();
                let mut degree = if *monoid { 0 } else { 1 };
                while out.len() < limit {
                    let mut layer = Vec::new();
                    monomials_of_degree(n, degree, &mut vec![], &mut layer);
                    let mut layer: Vec<Element> = layer.into_iter().map(Element::Monomial).collect();
                    layer.sort();
                    out.extend(layer);
                    degree += 1;
                }
                out.truncate(limit);
                out
            }
            Kind::NatAdd | Kind::NatMax => (1..=limit as u64).map(Element::Natural).collect(),
            Kind::Table { table, .. } => (0..table.order().min(limit)).map(Element::Index).collect(),
        }
    }

    /// Draws a small random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Element {
        match &self.0.kind {
            Kind::Free { letters } => {
                let len = rng.gen_range(1..=3);
                Element::Word((0..len).map(|_| rng.gen_range(0..letters.len()) as u16).collect())
            }
            Kind::FreeCommutative { vars, monoid } => loop {
                let m: Vec<u32> = (0..vars.len()).map(|_| rng.gen_range(0..=2)).collect();
                if *monoid || m.iter().any(|&x| x > 0) {
                    break Element::Monomial(m);
                }
            },
            Kind::NatAdd | Kind::NatMax => Element::Natural(rng.gen_range(1..=6)),
            Kind::Table { table, .. } => Element::Index(rng.gen_range(0..table.order())),
        }
    }

    /// Human-readable rendering of an element.
    pub fn format_element(&self, e: &Element) -> String {
        match (&self.0.kind, e) {
            (Kind::Free { letters }, Element::Word(w)) => {
                let sep = separator(letters);
                w.iter()
                    .map(|&l| letters[usize::from(l)].as_str())
                    .collect::<Vec<_>>()
                    .join(sep)
            }
            (Kind::FreeCommutative { vars, .. }, Element::Monomial(m)) => {
                if m.iter().all(|&x| x == 0) {
                    return "1".into();
                }
                let parts: Vec<String> = m
                    .iter()
                    .zip(vars)
                    .filter(|(&k, _)| k > 0)
                    .map(|(&k, v)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
                    .collect();
                parts.join(separator(vars))
            }
            (Kind::NatAdd | Kind::NatMax, Element::Natural(n)) => n.to_string(),
            (Kind::Table { names, .. }, Element::Index(i)) if *i < names.len() => names[*i].clone(),
            _ => format!("{e:?}"),
        }
    }

    /// Rendering used inside sums and expressions: bare when the text lexes
    /// as one identifier-like token, otherwise wrapped in brackets.
    pub fn element_token(&self, e: &Element) -> String {
        let text = self.format_element(e);
        let mut chars = text.chars();
        let bare = chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '^' || c == '.');
        if bare {
            text
        } else {
            format!("[{text}]")
        }
    }

    /// Parses the output of [`Semigroup::format_element`]. Words and
    /// monomials additionally accept `.` separators and `^k` powers.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let text = text.trim();
        let foreign = || Error::ForeignElement {
            element: text.to_owned(),
            semigroup: self.0.id.clone(),
        };
        match &self.0.kind {
            Kind::Free { letters } => {
                let powers = parse_powers(text, letters).ok_or_else(foreign)?;
                let word: Vec<u16> = powers
                    .into_iter()
                    .flat_map(|(l, k)| std::iter::repeat_n(l as u16, k as usize))
                    .collect();
                let e = Element::Word(word);
                self.check(&e).map_err(|_| foreign())?;
                Ok(e)
            }
            Kind::FreeCommutative { vars, monoid } => {
                if text == "1" && *monoid {
                    return Ok(Element::Monomial(vec![0; vars.len()]));
                }
                let powers = parse_powers(text, vars).ok_or_else(foreign)?;
                let mut m = vec![0u32; vars.len()];
                for (v, k) in powers {
                    m[v] = m[v].checked_add(k).ok_or_else(foreign)?;
                }
                let e = Element::Monomial(m);
                self.check(&e).map_err(|_| foreign())?;
                Ok(e)
            }
            Kind::NatAdd | Kind::NatMax => match text.parse::<u64>() {
                Ok(n) if n >= 1 => Ok(Element::Natural(n)),
                _ => Err(foreign()),
            },
            Kind::Table { names, .. } => names
                .iter()
                .position(|n| n == text)
                .map(Element::Index)
                .ok_or_else(foreign),
        }
    }
}

fn unit_vector(len: usize, i: usize) -> Element {
    let mut m = vec![0; len];
    m[i] = 1;
    Element::Monomial(m)
}

fn monomials_of_degree(n: usize, degree: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == n {
        prefix.push(degree);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for k in 0..=degree {
        prefix.push(k);
        monomials_of_degree(n, degree - k, prefix, out);
        prefix.pop();
    }
}

fn separator(names: &[String]) -> &'static str {
    if names.iter().all(|n| n.chars().count() == 1) {
        ""
    } else {
        "."
    }
}

/// Splits `a^2b.cd` into `(name index, power)` pairs by longest-prefix
/// matching against `names`. Names longer than one character must be
/// separated by `.`.
fn parse_powers(text: &str, names: &[String]) -> Option<Vec<(usize, u32)>> {
    let juxtapose = separator(names).is_empty();
    let mut out = Vec::new();
    for piece in text.split('.') {
        let mut rest = piece;
        if rest.is_empty() {
            return None;
        }
        while !rest.is_empty() {
            let (idx, name) = names
                .iter()
                .enumerate()
                .filter(|(_, n)| rest.starts_with(n.as_str()))
                .max_by_key(|(_, n)| n.len())?;
            rest = &rest[name.len()..];
            let mut power = 1;
            if let Some(tail) = rest.strip_prefix('^') {
                let digits = tail.chars().take_while(char::is_ascii_digit).count();
                power = tail[..digits].parse().ok().filter(|&p| p > 0)?;
                rest = &tail[digits..];
            }
            out.push((idx, power));
            if !juxtapose && !rest.is_empty() {
                return None;
            }
        }
    }
    Some(out)
}
