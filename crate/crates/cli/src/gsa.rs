//! The `.gsa` definition format.
//!
//! Line oriented, `#` starts a comment. A section header `[kind NAME ...] key=value ...` is followed
//! by entry lines `prefix.(i,j,...,k) = p/q` (the prefix only where a section holds several tables).
//! Indices are 1-based in the file and 0-based in memory; the last index of an entry is the output.

use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use superlr::cohomology::Theory;
use superlr::constructions::SuperTrace;
use superlr::deformations::{FormalAutomorphism, FormalDeformation};
use superlr::scalar::{format_scalar, parse_scalar};
use superlr::structures::{
    LieRinehartStructure, RepresentationAction, SuperCommutativeAlgebra, ThreeLieRinehartStructure,
};
use superlr::{GradedSpace, MultilinearMap, Parity, Scalar};
use thiserror::Error;

pub const HEADER: &str = "# superlr definitions, canonical form";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolveError {
    #[error("no {kind} named `{name}`")]
    Missing { kind: &'static str, name: String },
    #[error("`{name}`: {message}")]
    Invalid { name: String, message: String },
}

pub type Table = BTreeMap<Vec<usize>, Scalar>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Space { parity: Vec<Parity> },
    Algebra { space: String, unit: Option<usize>, product: Table },
    Bracket { space: String, arity: usize, parity: Parity, table: Table },
    Action { algebra: String, space: String, table: Table },
    Anchor { space: String, power: usize, algebra: String, table: Table },
    Trace { space: String, table: Table },
    Structure { theory: Theory, algebra: String, space: String, bracket: String, action: String, anchor: String },
    Module { carrier: String, structure: String, rep: Table, a: Table },
    Cochain { space: String, arity: usize, target: String, parity: Parity, table: Table },
    Deformation { base: String, order: usize, terms: BTreeMap<usize, Table> },
    Automorphism { space: String, order: usize, terms: BTreeMap<usize, Table> },
    Homomorphism { source: String, target: String, f: Table, g: Table },
}

impl Item {
    pub fn kind(&self) -> &'static str {
        match self {
            Item::Space { .. } => "space",
            Item::Algebra { .. } => "algebra",
            Item::Bracket { .. } => "bracket",
            Item::Action { .. } => "action",
            Item::Anchor { .. } => "anchor",
            Item::Trace { .. } => "trace",
            Item::Structure { .. } => "structure",
            Item::Module { .. } => "module",
            Item::Cochain { .. } => "cochain",
            Item::Deformation { .. } => "deformation",
            Item::Automorphism { .. } => "automorphism",
            Item::Homomorphism { .. } => "homomorphism",
        }
    }

    fn rank(&self) -> usize {
        KINDS.iter().position(|k| *k == self.kind()).expect("known kind")
    }
}

const KINDS: [&str; 12] = [
    "space",
    "algebra",
    "bracket",
    "action",
    "anchor",
    "trace",
    "structure",
    "module",
    "cochain",
    "deformation",
    "automorphism",
    "homomorphism",
];

/// Named definitions sharing one namespace.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Workspace {
    items: BTreeMap<String, Item>,
}

fn theory_name(t: Theory) -> &'static str {
    match t {
        Theory::Lr => "lr",
        Theory::ThreeLr => "3lr",
    }
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.items.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.items.contains_key(name)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Items in canonical order: by kind, then by name.
    pub fn items(&self) -> Vec<(&String, &Item)> {
        let mut v: Vec<_> = self.items.iter().collect();
        v.sort_by_key(|(n, i)| (i.rank(), n.to_string()));
        v
    }

    pub fn names_of(&self, kind: &str) -> Vec<String> {
        self.items().into_iter().filter(|(_, i)| i.kind() == kind).map(|(n, _)| n.clone()).collect()
    }

    pub fn insert(&mut self, name: impl Into<String>, item: Item) -> Result<(), ResolveError> {
        let name = name.into();
        if self.items.contains_key(&name) {
            return Err(ResolveError::Invalid { name, message: "duplicate name".into() });
        }
        self.items.insert(name, item);
        Ok(())
    }

    fn lookup(&self, kind: &'static str, name: &str) -> Result<&Item, ResolveError> {
        match self.items.get(name) {
            Some(i) if i.kind() == kind => Ok(i),
            _ => Err(ResolveError::Missing { kind, name: name.to_string() }),
        }
    }

    pub fn space(&self, name: &str) -> Result<GradedSpace, ResolveError> {
        match self.lookup("space", name)? {
            Item::Space { parity } => GradedSpace::new(name, parity.clone())
                .map_err(|e| ResolveError::Invalid { name: name.into(), message: e.to_string() }),
            _ => unreachable!(),
        }
    }

    pub fn algebra(&self, name: &str) -> Result<SuperCommutativeAlgebra, ResolveError> {
        match self.lookup("algebra", name)? {
            Item::Algebra { space, unit, product } => {
                let sp = self.space(space)?;
                let map = fill(MultilinearMap::power(&sp, 2, &sp, 0), product);
                Ok(SuperCommutativeAlgebra::new(sp, map, *unit))
            }
            _ => unreachable!(),
        }
    }

    pub fn bracket(&self, name: &str) -> Result<MultilinearMap, ResolveError> {
        match self.lookup("bracket", name)? {
            Item::Bracket { space, arity, parity, table } => {
                let sp = self.space(space)?;
                Ok(fill(MultilinearMap::power(&sp, *arity, &sp, *parity), table))
            }
            _ => unreachable!(),
        }
    }

    pub fn action(&self, name: &str) -> Result<MultilinearMap, ResolveError> {
        match self.lookup("action", name)? {
            Item::Action { algebra, space, table } => {
                let a = self.algebra(algebra)?;
                let sp = self.space(space)?;
                Ok(fill(MultilinearMap::new(vec![a.space, sp.clone()], sp, 0), table))
            }
            _ => unreachable!(),
        }
    }

    pub fn anchor(&self, name: &str) -> Result<(usize, MultilinearMap), ResolveError> {
        match self.lookup("anchor", name)? {
            Item::Anchor { space, power, algebra, table } => {
                let a = self.algebra(algebra)?;
                let sp = self.space(space)?;
                let mut doms = vec![sp; *power];
                doms.push(a.space.clone());
                Ok((*power, fill(MultilinearMap::new(doms, a.space, 0), table)))
            }
            _ => unreachable!(),
        }
    }

    pub fn trace(&self, name: &str) -> Result<SuperTrace, ResolveError> {
        match self.lookup("trace", name)? {
            Item::Trace { space, table } => {
                let sp = self.space(space)?;
                let mut v = vec![Scalar::from_integer(0.into()); sp.dim()];
                for (k, c) in table {
                    v[k[0]] = c.clone();
                }
                Ok(SuperTrace::new(v))
            }
            _ => unreachable!(),
        }
    }

    pub fn theory_of(&self, name: &str) -> Result<Theory, ResolveError> {
        match self.lookup("structure", name)? {
            Item::Structure { theory, .. } => Ok(*theory),
            _ => unreachable!(),
        }
    }

    fn parts(
        &self,
        name: &str,
        want: Theory,
    ) -> Result<(SuperCommutativeAlgebra, GradedSpace, MultilinearMap, MultilinearMap, MultilinearMap), ResolveError>
    {
        let Item::Structure { theory, algebra, space, bracket, action, anchor } = self.lookup("structure", name)?
        else {
            unreachable!()
        };
        let invalid = |m: &str| ResolveError::Invalid { name: name.into(), message: m.into() };
        if *theory != want {
            return Err(invalid(&format!("is a {} structure", theory_name(*theory))));
        }
        let arity = match want {
            Theory::Lr => 2,
            Theory::ThreeLr => 3,
        };
        let a = self.algebra(algebra)?;
        let sp = self.space(space)?;
        let br = self.bracket(bracket)?;
        let act = self.action(action)?;
        let (power, anc) = self.anchor(anchor)?;
        if br.arity() != arity || power != arity - 1 {
            return Err(invalid("bracket arity or anchor power does not match the theory"));
        }
        if br.domain(0) != &sp
            || act.domain(0) != &a.space
            || act.codomain() != &sp
            || anc.codomain() != &a.space
            || anc.domain(0) != &sp
        {
            return Err(invalid("components live on different spaces"));
        }
        Ok((a, sp, br, act, anc))
    }

    pub fn lr(&self, name: &str) -> Result<LieRinehartStructure, ResolveError> {
        let (a, sp, br, act, anc) = self.parts(name, Theory::Lr)?;
        Ok(LieRinehartStructure::new(a, sp, br, act, anc))
    }

    pub fn three_lr(&self, name: &str) -> Result<ThreeLieRinehartStructure, ResolveError> {
        let (a, sp, br, act, anc) = self.parts(name, Theory::ThreeLr)?;
        Ok(ThreeLieRinehartStructure::new(a, sp, br, act, anc))
    }

    /// The module and the structure it is declared for.
    pub fn module(&self, name: &str) -> Result<(String, RepresentationAction), ResolveError> {
        let Item::Module { carrier, structure, rep, a } = self.lookup("module", name)? else { unreachable!() };
        let theory = self.theory_of(structure)?;
        let (alg, sp) = match theory {
            Theory::Lr => {
                let s = self.lr(structure)?;
                (s.algebra, s.space)
            }
            Theory::ThreeLr => {
                let s = self.three_lr(structure)?;
                (s.algebra, s.space)
            }
        };
        let m = self.space(carrier)?;
        let k = if theory == Theory::Lr { 1 } else { 2 };
        let mut doms = vec![sp; k];
        doms.push(m.clone());
        let action = fill(MultilinearMap::new(doms, m.clone(), 0), rep);
        let a_action = fill(MultilinearMap::new(vec![alg.space, m.clone()], m.clone(), 0), a);
        Ok((structure.clone(), RepresentationAction::new(m, action, a_action)))
    }

    pub fn cochain(&self, name: &str) -> Result<MultilinearMap, ResolveError> {
        let Item::Cochain { space, arity, target, parity, table } = self.lookup("cochain", name)? else {
            unreachable!()
        };
        let sp = self.space(space)?;
        let t = self.space(target)?;
        Ok(fill(MultilinearMap::new(vec![sp; *arity], t, *parity), table))
    }

    pub fn deformation(&self, name: &str) -> Result<FormalDeformation, ResolveError> {
        let Item::Deformation { base, order, terms } = self.lookup("deformation", name)? else { unreachable!() };
        let s = self.three_lr(base)?;
        let maps = (1..=*order)
            .map(|i| {
                let m = MultilinearMap::power(&s.space, 3, &s.space, 0);
                terms.get(&i).map(|t| fill(m.clone(), t)).unwrap_or(m)
            })
            .collect();
        FormalDeformation::new(s, maps).map_err(|e| ResolveError::Invalid { name: name.into(), message: e.to_string() })
    }

    pub fn automorphism(&self, name: &str) -> Result<FormalAutomorphism, ResolveError> {
        let Item::Automorphism { space, order, terms } = self.lookup("automorphism", name)? else { unreachable!() };
        let sp = self.space(space)?;
        let maps = (1..=*order)
            .map(|i| {
                let m = MultilinearMap::power(&sp, 1, &sp, 0);
                terms.get(&i).map(|t| fill(m.clone(), t)).unwrap_or(m)
            })
            .collect();
        FormalAutomorphism::new(sp, maps)
            .map_err(|e| ResolveError::Invalid { name: name.into(), message: e.to_string() })
    }

    /// `(g: A -> A', f: L -> L', source, target)`.
    pub fn homomorphism(
        &self,
        name: &str,
    ) -> Result<(MultilinearMap, MultilinearMap, ThreeLieRinehartStructure, ThreeLieRinehartStructure), ResolveError>
    {
        let Item::Homomorphism { source, target, f, g } = self.lookup("homomorphism", name)? else { unreachable!() };
        let src = self.three_lr(source)?;
        let dst = self.three_lr(target)?;
        let gm = fill(MultilinearMap::new(vec![src.algebra.space.clone()], dst.algebra.space.clone(), 0), g);
        let fm = fill(MultilinearMap::new(vec![src.space.clone()], dst.space.clone(), 0), f);
        Ok((gm, fm, src, dst))
    }

    /// Name of a space with these parities: `preferred` if free or already equal, else a fresh variant.
    fn add_space(&mut self, preferred: &str, space: &GradedSpace) -> String {
        let item = Item::Space { parity: space.parities().to_vec() };
        self.add_named(preferred, item)
    }

    fn add_item(&mut self, preferred: &str, item: Item) -> String {
        if let Some((name, _)) = self.items.iter().find(|(_, i)| **i == item) {
            return name.clone();
        }
        self.add_named(preferred, item)
    }

    fn add_named(&mut self, preferred: &str, item: Item) -> String {
        let preferred = sanitize_name(preferred);
        let preferred = preferred.as_str();
        let mut name = preferred.to_string();
        let mut k = 2;
        loop {
            match self.items.get(&name) {
                Some(existing) if *existing == item => return name,
                Some(_) => {
                    name = format!("{preferred}_{k}");
                    k += 1;
                }
                None => {
                    self.items.insert(name.clone(), item);
                    return name;
                }
            }
        }
    }

    fn add_algebra(&mut self, preferred: &str, a: &SuperCommutativeAlgebra) -> String {
        let space = self.add_space(a.space.label(), &a.space);
        self.add_item(preferred, Item::Algebra { space, unit: a.unit, product: table_of(&a.product) })
    }

    fn add_components(
        &mut self,
        name: &str,
        theory: Theory,
        algebra: &SuperCommutativeAlgebra,
        space: &GradedSpace,
        parts: [&MultilinearMap; 3],
    ) -> String {
        let [bracket, action, anchor] = parts;
        let alg = self.add_algebra(&format!("{}_algebra", name), algebra);
        let sp = self.add_space(space.label(), space);
        let br = self.add_item(
            &format!("{name}_bracket"),
            Item::Bracket {
                space: sp.clone(),
                arity: bracket.arity(),
                parity: bracket.parity(),
                table: table_of(bracket),
            },
        );
        let act = self.add_item(
            &format!("{name}_action"),
            Item::Action { algebra: alg.clone(), space: sp.clone(), table: table_of(action) },
        );
        let anc = self.add_item(
            &format!("{name}_anchor"),
            Item::Anchor {
                space: sp.clone(),
                power: anchor.arity() - 1,
                algebra: alg.clone(),
                table: table_of(anchor),
            },
        );
        self.add_item(name, Item::Structure { theory, algebra: alg, space: sp, bracket: br, action: act, anchor: anc })
    }

    /// Adds a binary structure and its components, reusing identical existing definitions.
    pub fn add_lr(&mut self, name: &str, s: &LieRinehartStructure) -> String {
        self.add_components(name, Theory::Lr, &s.algebra, &s.space, [&s.bracket, &s.action, &s.anchor])
    }

    pub fn add_three_lr(&mut self, name: &str, s: &ThreeLieRinehartStructure) -> String {
        self.add_components(name, Theory::ThreeLr, &s.algebra, &s.space, [&s.bracket, &s.action, &s.anchor])
    }

    pub fn add_trace(&mut self, name: &str, space: &GradedSpace, tau: &SuperTrace) -> String {
        let sp = self.add_space(space.label(), space);
        let table =
            tau.values.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i], c.clone())).collect();
        self.add_item(name, Item::Trace { space: sp, table })
    }

    pub fn add_automorphism(&mut self, name: &str, phi: &FormalAutomorphism) -> String {
        let space = self.add_space(phi.space.label(), &phi.space);
        let terms =
            phi.terms().iter().enumerate().filter(|(_, m)| !m.is_zero()).map(|(i, m)| (i + 1, table_of(m))).collect();
        self.add_item(name, Item::Automorphism { space, order: phi.order(), terms })
    }

    pub fn add_cochain(&mut self, name: &str, map: &MultilinearMap) -> String {
        let sp = self.add_space(map.domain(0).label(), map.domain(0));
        let target = self.add_space(map.codomain().label(), map.codomain());
        self.add_item(
            name,
            Item::Cochain { space: sp, arity: map.arity(), target, parity: map.parity(), table: table_of(map) },
        )
    }

    pub fn add_deformation(&mut self, name: &str, base: &str, d: &FormalDeformation) -> String {
        let terms =
            d.terms().iter().enumerate().filter(|(_, m)| !m.is_zero()).map(|(i, m)| (i + 1, table_of(m))).collect();
        self.add_item(name, Item::Deformation { base: base.to_string(), order: d.order(), terms })
    }
}

fn fill(mut map: MultilinearMap, table: &Table) -> MultilinearMap {
    for (k, c) in table {
        let (out, ins) = k.split_last().expect("nonempty key");
        map.set_unchecked(ins, *out, c.clone());
    }
    map
}

/// Entries of a map as a table keyed by `(inputs..., output)`.
pub fn table_of(map: &MultilinearMap) -> Table {
    map.entries()
        .map(|(ins, out, c)| {
            let mut k = ins.clone();
            k.push(out);
            (k, c.clone())
        })
        .collect()
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn err(&self, at: &str, message: impl Into<String>) -> ParseError {
        let column = match self.text.find(at) {
            Some(i) if !at.is_empty() => self.text[..i].chars().count() + 1,
            _ => 1,
        };
        ParseError { line: self.line, column, message: message.into() }
    }
}

struct Header {
    kind: String,
    name: String,
    positional: Vec<String>,
    attrs: BTreeMap<String, String>,
}

fn tokenize(s: &str) -> Vec<String> {
    let s = s.replace("->", " -> ");
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0;
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c if c.is_whitespace() => {}
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_header(cur: &Cursor, line: &str) -> Result<Header, ParseError> {
    let close = line.find(']').ok_or_else(|| cur.err("[", "unterminated section header"))?;
    let inner = &line[1..close];
    let tail = &line[close + 1..];
    let mut toks = tokenize(inner).into_iter();
    let kind = toks.next().ok_or_else(|| cur.err("[", "empty section header"))?;
    if !KINDS.contains(&kind.as_str()) {
        return Err(cur.err(&kind, format!("unknown section `{kind}`")));
    }
    let name = toks.next().ok_or_else(|| cur.err(&kind, "section needs a name"))?;
    if !valid_name(&name) {
        return Err(cur.err(&name, format!("invalid name `{name}`")));
    }
    let mut positional = Vec::new();
    let mut attrs = BTreeMap::new();
    for t in toks.chain(tokenize(tail)) {
        match t.split_once('=') {
            Some((k, v)) => {
                if attrs.insert(k.to_string(), v.to_string()).is_some() {
                    return Err(cur.err(&t, format!("repeated attribute `{k}`")));
                }
            }
            None if line[close..].contains(t.as_str()) => {
                return Err(cur.err(&t, format!("expected key=value, got `{t}`")))
            }
            None => positional.push(t),
        }
    }
    Ok(Header { kind, name, positional, attrs })
}

fn sanitize_name(s: &str) -> String {
    let out: String = s.chars().map(|c| if valid_name(&c.to_string()) { c } else { '_' }).collect();
    if valid_name(&out) {
        out
    } else {
        "item".into()
    }
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || "_+-.'".contains(c)) && s != "->"
}

fn parse_usize(cur: &Cursor, s: &str) -> Result<usize, ParseError> {
    s.parse::<usize>().map_err(|_| cur.err(s, format!("expected a non-negative integer, got `{s}`")))
}

fn parse_parity(cur: &Cursor, s: &str) -> Result<Parity, ParseError> {
    match s {
        "0" => Ok(0),
        "1" => Ok(1),
        _ => Err(cur.err(s, format!("parity must be 0 or 1, got `{s}`"))),
    }
}

/// Reads `words` against a pattern of literal keywords and `$` placeholders.
fn shape<'a>(cur: &Cursor, h: &'a Header, pattern: &[&str]) -> Result<Vec<&'a str>, ParseError> {
    let want = pattern.join(" ");
    if h.positional.len() != pattern.len() {
        return Err(cur.err(&h.name, format!("`{}` header expects `{} NAME {}`", h.kind, h.kind, want)));
    }
    let mut out = Vec::new();
    for (w, p) in h.positional.iter().zip(pattern) {
        if *p == "$" {
            out.push(w.as_str());
        } else if w != p {
            return Err(cur.err(w, format!("expected `{p}` in `{} NAME {}`", h.kind, want)));
        }
    }
    Ok(out)
}

fn attr<'a>(cur: &Cursor, h: &'a Header, key: &str) -> Result<&'a str, ParseError> {
    h.attrs.get(key).map(|s| s.as_str()).ok_or_else(|| cur.err(&h.name, format!("missing attribute `{key}=`")))
}

fn check_attrs(cur: &Cursor, h: &Header, allowed: &[&str]) -> Result<(), ParseError> {
    for k in h.attrs.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(cur.err(k, format!("unknown attribute `{k}` for {}", h.kind)));
        }
    }
    Ok(())
}

/// `SPACE^k`.
fn power(cur: &Cursor, s: &str) -> Result<(String, usize), ParseError> {
    match s.split_once('^') {
        Some((sp, k)) => Ok((sp.to_string(), parse_usize(cur, k)?)),
        None => Ok((s.to_string(), 1)),
    }
}

fn item_from_header(cur: &Cursor, h: &Header) -> Result<Item, ParseError> {
    Ok(match h.kind.as_str() {
        "space" => {
            shape(cur, h, &[])?;
            check_attrs(cur, h, &["dim", "parity"])?;
            let dim = parse_usize(cur, attr(cur, h, "dim")?)?;
            let raw = attr(cur, h, "parity")?;
            let body = raw
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| cur.err(raw, "parity must be written [p1,p2,...]"))?;
            let parity = if body.is_empty() {
                vec![]
            } else {
                body.split(',').map(|p| parse_parity(cur, p.trim())).collect::<Result<Vec<_>, _>>()?
            };
            if parity.len() != dim {
                return Err(cur.err(raw, format!("parity vector has length {}, dim is {dim}", parity.len())));
            }
            Item::Space { parity }
        }
        "algebra" => {
            let p = shape(cur, h, &["on", "$"])?;
            check_attrs(cur, h, &["unit"])?;
            let unit = match h.attrs.get("unit") {
                Some(u) => Some(index(cur, u)?),
                None => None,
            };
            Item::Algebra { space: p[0].into(), unit, product: Table::new() }
        }
        "bracket" => {
            let p = shape(cur, h, &["on", "$", "arity", "$", "parity", "$"])?;
            check_attrs(cur, h, &[])?;
            Item::Bracket {
                space: p[0].into(),
                arity: parse_usize(cur, p[1])?,
                parity: parse_parity(cur, p[2])?,
                table: Table::new(),
            }
        }
        "action" => {
            let p = shape(cur, h, &["$", "->", "$"])?;
            check_attrs(cur, h, &[])?;
            Item::Action { algebra: p[0].into(), space: p[1].into(), table: Table::new() }
        }
        "anchor" => {
            let p = shape(cur, h, &["$", "->", "$"])?;
            check_attrs(cur, h, &[])?;
            let (space, power) = power(cur, p[0])?;
            Item::Anchor { space, power, algebra: p[1].into(), table: Table::new() }
        }
        "trace" => {
            let p = shape(cur, h, &["on", "$"])?;
            check_attrs(cur, h, &[])?;
            Item::Trace { space: p[0].into(), table: Table::new() }
        }
        "structure" => {
            let p = shape(cur, h, &["$"])?;
            check_attrs(cur, h, &["algebra", "space", "bracket", "action", "anchor"])?;
            let theory = match p[0] {
                "lr" => Theory::Lr,
                "3lr" => Theory::ThreeLr,
                other => return Err(cur.err(other, format!("theory must be lr or 3lr, got `{other}`"))),
            };
            Item::Structure {
                theory,
                algebra: attr(cur, h, "algebra")?.into(),
                space: attr(cur, h, "space")?.into(),
                bracket: attr(cur, h, "bracket")?.into(),
                action: attr(cur, h, "action")?.into(),
                anchor: attr(cur, h, "anchor")?.into(),
            }
        }
        "module" => {
            let p = shape(cur, h, &["on", "$", "for", "$"])?;
            check_attrs(cur, h, &[])?;
            Item::Module { carrier: p[0].into(), structure: p[1].into(), rep: Table::new(), a: Table::new() }
        }
        "cochain" => {
            let p = shape(cur, h, &["$", "->", "$"])?;
            check_attrs(cur, h, &["parity"])?;
            let (space, arity) = power(cur, p[0])?;
            Item::Cochain {
                space,
                arity,
                target: p[1].into(),
                parity: parse_parity(cur, attr(cur, h, "parity")?)?,
                table: Table::new(),
            }
        }
        "deformation" => {
            shape(cur, h, &[])?;
            check_attrs(cur, h, &["base", "order"])?;
            Item::Deformation {
                base: attr(cur, h, "base")?.into(),
                order: parse_usize(cur, attr(cur, h, "order")?)?,
                terms: BTreeMap::new(),
            }
        }
        "automorphism" => {
            let p = shape(cur, h, &["on", "$"])?;
            check_attrs(cur, h, &["order"])?;
            Item::Automorphism {
                space: p[0].into(),
                order: parse_usize(cur, attr(cur, h, "order")?)?,
                terms: BTreeMap::new(),
            }
        }
        "homomorphism" => {
            let p = shape(cur, h, &["$", "->", "$"])?;
            check_attrs(cur, h, &[])?;
            Item::Homomorphism { source: p[0].into(), target: p[1].into(), f: Table::new(), g: Table::new() }
        }
        _ => unreachable!("kind checked"),
    })
}

/// A 1-based index in the file.
fn index(cur: &Cursor, s: &str) -> Result<usize, ParseError> {
    let i = parse_usize(cur, s)?;
    if i == 0 {
        return Err(cur.err(s, "indices start at 1"));
    }
    Ok(i - 1)
}

struct Entry {
    prefix: Option<String>,
    key: Vec<usize>,
    value: Scalar,
}

fn parse_entry(cur: &Cursor, line: &str) -> Result<Entry, ParseError> {
    let open = line.find('(').ok_or_else(|| cur.err(line, "expected an entry `(i,...) = value`"))?;
    let prefix = line[..open].trim();
    let prefix = if prefix.is_empty() {
        None
    } else {
        let p = prefix.strip_suffix('.').ok_or_else(|| cur.err(prefix, "table prefix must end with `.`"))?;
        Some(p.to_string())
    };
    let close = line[open..].find(')').map(|i| i + open).ok_or_else(|| cur.err("(", "unclosed `(`"))?;
    let key = line[open + 1..close].split(',').map(|s| index(cur, s.trim())).collect::<Result<Vec<_>, _>>()?;
    let rest = line[close + 1..].trim();
    let value = rest.strip_prefix('=').ok_or_else(|| cur.err(rest, "expected `=` after the index tuple"))?.trim();
    let value = parse_scalar(value).map_err(|e| cur.err(value, e.to_string()))?;
    Ok(Entry { prefix, key, value })
}

fn term_number(cur: &Cursor, prefix: &str, stem: &str) -> Result<Option<usize>, ParseError> {
    match prefix.strip_prefix(stem) {
        Some(n) if !n.is_empty() && n.chars().all(|c| c.is_ascii_digit()) => {
            let k = parse_usize(cur, n)?;
            if k == 0 {
                return Err(cur.err(prefix, "terms are numbered from 1"));
            }
            Ok(Some(k))
        }
        _ => Ok(None),
    }
}

fn add_entry(cur: &Cursor, item: &mut Item, e: Entry) -> Result<(), ParseError> {
    let p = e.prefix.as_deref();
    let bad = |cur: &Cursor| cur.err(p.unwrap_or("("), format!("unexpected table prefix `{}`", p.unwrap_or("")));
    let table: &mut Table = match item {
        Item::Space { .. } | Item::Structure { .. } => {
            return Err(cur.err("(", "this section takes no entries"));
        }
        Item::Algebra { product: t, .. }
        | Item::Bracket { table: t, .. }
        | Item::Action { table: t, .. }
        | Item::Anchor { table: t, .. }
        | Item::Trace { table: t, .. }
        | Item::Cochain { table: t, .. } => {
            if p.is_some() {
                return Err(bad(cur));
            }
            t
        }
        Item::Module { rep, a, .. } => match p {
            Some("rep") => rep,
            Some("a") => a,
            _ => return Err(bad(cur)),
        },
        Item::Homomorphism { f, g, .. } => match p {
            Some("f") => f,
            Some("g") => g,
            _ => return Err(bad(cur)),
        },
        Item::Deformation { terms, order, .. } => {
            let k = p.map(|p| term_number(cur, p, "m")).transpose()?.flatten().ok_or_else(|| bad(cur))?;
            if k > *order {
                return Err(cur.err(p.unwrap_or(""), format!("term m{k} beyond order {order}")));
            }
            terms.entry(k).or_default()
        }
        Item::Automorphism { terms, order, .. } => {
            let k = p.map(|p| term_number(cur, p, "phi")).transpose()?.flatten().ok_or_else(|| bad(cur))?;
            if k > *order {
                return Err(cur.err(p.unwrap_or(""), format!("term phi{k} beyond order {order}")));
            }
            terms.entry(k).or_default()
        }
    };
    if table.insert(e.key, e.value).is_some() {
        return Err(cur.err("(", "repeated entry"));
    }
    Ok(())
}

/// Dimensions each table's keys must respect, per table prefix.
fn key_dims(ws: &Workspace, name: &str, item: &Item) -> Result<Vec<(Option<String>, Vec<usize>)>, ResolveError> {
    let dim = |s: &str| ws.space(s).map(|sp| sp.dim());
    let alg_dim = |a: &str| ws.algebra(a).map(|x| x.dim());
    Ok(match item {
        Item::Space { .. } | Item::Structure { .. } => vec![],
        Item::Algebra { space, unit, .. } => {
            let d = dim(space)?;
            if unit.map(|u| u >= d).unwrap_or(false) {
                return Err(ResolveError::Invalid { name: name.into(), message: "unit index out of range".into() });
            }
            vec![(None, vec![d; 3])]
        }
        Item::Bracket { space, arity, .. } => vec![(None, vec![dim(space)?; arity + 1])],
        Item::Action { algebra, space, .. } => vec![(None, vec![alg_dim(algebra)?, dim(space)?, dim(space)?])],
        Item::Anchor { space, power, algebra, .. } => {
            let mut v = vec![dim(space)?; *power];
            v.extend([alg_dim(algebra)?, alg_dim(algebra)?]);
            vec![(None, v)]
        }
        Item::Trace { space, .. } => vec![(None, vec![dim(space)?])],
        Item::Module { carrier, structure, .. } => {
            let k = if ws.theory_of(structure)? == Theory::Lr { 1 } else { 2 };
            let Item::Structure { space, algebra, .. } = ws.lookup("structure", structure)? else { unreachable!() };
            let m = dim(carrier)?;
            let mut rep = vec![dim(space)?; k];
            rep.extend([m, m]);
            vec![(Some("rep".into()), rep), (Some("a".into()), vec![alg_dim(algebra)?, m, m])]
        }
        Item::Cochain { space, arity, target, .. } => {
            let mut v = vec![dim(space)?; *arity];
            v.push(dim(target)?);
            vec![(None, v)]
        }
        Item::Deformation { base, order, .. } => {
            let Item::Structure { space, .. } = ws.lookup("structure", base)? else { unreachable!() };
            let d = dim(space)?;
            (1..=*order).map(|k| (Some(format!("m{k}")), vec![d; 4])).collect()
        }
        Item::Automorphism { space, order, .. } => {
            let d = dim(space)?;
            (1..=*order).map(|k| (Some(format!("phi{k}")), vec![d; 2])).collect()
        }
        Item::Homomorphism { source, target, .. } => {
            let parts = |s: &str| -> Result<(String, String), ResolveError> {
                let Item::Structure { space, algebra, .. } = ws.lookup("structure", s)? else { unreachable!() };
                Ok((space.clone(), algebra.clone()))
            };
            let (ls, as_) = parts(source)?;
            let (lt, at) = parts(target)?;
            vec![
                (Some("f".into()), vec![dim(&ls)?, dim(&lt)?]),
                (Some("g".into()), vec![alg_dim(&as_)?, alg_dim(&at)?]),
            ]
        }
    })
}

fn tables(item: &Item) -> Vec<(Option<String>, &Table)> {
    match item {
        Item::Space { .. } | Item::Structure { .. } => vec![],
        Item::Algebra { product: t, .. }
        | Item::Bracket { table: t, .. }
        | Item::Action { table: t, .. }
        | Item::Anchor { table: t, .. }
        | Item::Trace { table: t, .. }
        | Item::Cochain { table: t, .. } => vec![(None, t)],
        Item::Module { rep, a, .. } => vec![(Some("rep".into()), rep), (Some("a".into()), a)],
        Item::Homomorphism { f, g, .. } => vec![(Some("f".into()), f), (Some("g".into()), g)],
        Item::Deformation { terms, .. } => terms.iter().map(|(k, t)| (Some(format!("m{k}")), t)).collect(),
        Item::Automorphism { terms, .. } => terms.iter().map(|(k, t)| (Some(format!("phi{k}")), t)).collect(),
    }
}

/// Parses a definition file, checking references, index ranges and tuple lengths.
pub fn parse(text: &str) -> Result<Workspace, ParseError> {
    let mut ws = Workspace::new();
    let mut lines: BTreeMap<String, usize> = BTreeMap::new();
    let mut entry_lines: BTreeMap<(String, Option<String>, Vec<usize>), (usize, String)> = BTreeMap::new();
    let mut current: Option<(String, Item)> = None;
    let flush = |ws: &mut Workspace, cur: Option<(String, Item)>| {
        if let Some((n, i)) = cur {
            ws.items.insert(n, i);
        }
    };
    for (ln, raw) in text.lines().enumerate() {
        let cur = Cursor { line: ln + 1, text: raw };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('[') {
            let h = parse_header(&cur, line)?;
            let item = item_from_header(&cur, &h)?;
            flush(&mut ws, current.take());
            if ws.items.contains_key(&h.name) || lines.contains_key(&h.name) {
                return Err(cur.err(&h.name, format!("duplicate name `{}`", h.name)));
            }
            lines.insert(h.name.clone(), ln + 1);
            current = Some((h.name, item));
        } else {
            let (name, item) = current.as_mut().ok_or_else(|| cur.err(line, "entry outside any section"))?;
            let e = parse_entry(&cur, line)?;
            entry_lines.insert((name.clone(), e.prefix.clone(), e.key.clone()), (ln + 1, raw.to_string()));
            add_entry(&cur, item, e)?;
        }
    }
    flush(&mut ws, current.take());
    for (name, item) in &ws.items {
        let line = lines[name];
        let at = |m: String| ParseError { line, column: 1, message: m };
        let dims = key_dims(&ws, name, item).map_err(|e| at(e.to_string()))?;
        for (prefix, table) in tables(item) {
            let want = dims.iter().find(|(p, _)| *p == prefix).map(|(_, d)| d.clone()).unwrap_or_default();
            for key in table.keys() {
                let (l, text) = entry_lines[&(name.clone(), prefix.clone(), key.clone())].clone();
                let cur = Cursor { line: l, text: &text };
                if key.len() != want.len() {
                    return Err(cur.err("(", format!("expected {} indices, got {}", want.len(), key.len())));
                }
                for (pos, (&i, &d)) in key.iter().zip(&want).enumerate() {
                    if i >= d {
                        let col = nth_index_column(&text, pos).unwrap_or(1);
                        return Err(ParseError {
                            line: l,
                            column: col,
                            message: format!("index {} out of range 1..={d}", i + 1),
                        });
                    }
                }
            }
        }
        if let Item::Structure { .. } = item {
            let r = match ws.theory_of(name) {
                Ok(Theory::Lr) => ws.lr(name).map(|_| ()),
                Ok(Theory::ThreeLr) => ws.three_lr(name).map(|_| ()),
                Err(e) => Err(e),
            };
            r.map_err(|e| at(e.to_string()))?;
        }
    }
    Ok(ws)
}

fn nth_index_column(text: &str, n: usize) -> Option<usize> {
    let open = text.find('(')?;
    let mut pos = open + 1;
    for (k, part) in text[open + 1..].split(',').enumerate() {
        if k == n {
            let lead = part.len() - part.trim_start().len();
            return Some(text[..pos + lead].chars().count() + 1);
        }
        pos += part.len() + 1;
    }
    None
}

fn write_table(out: &mut String, prefix: Option<&str>, t: &Table) {
    for (k, c) in t {
        let idx: Vec<String> = k.iter().map(|i| (i + 1).to_string()).collect();
        if let Some(p) = prefix {
            let _ = write!(out, "{p}.");
        }
        let _ = writeln!(out, "({}) = {}", idx.join(","), format_scalar(c));
    }
}

/// Canonical text: header comment, sections by kind then name, entries sorted, one blank line between sections.
pub fn serialize(ws: &Workspace) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for (name, item) in ws.items() {
        out.push('\n');
        let header = match item {
            Item::Space { parity } => {
                let p: Vec<String> = parity.iter().map(|x| x.to_string()).collect();
                format!("[space {name}] dim={} parity=[{}]", parity.len(), p.join(","))
            }
            Item::Algebra { space, unit, .. } => match unit {
                Some(u) => format!("[algebra {name} on {space}] unit={}", u + 1),
                None => format!("[algebra {name} on {space}]"),
            },
            Item::Bracket { space, arity, parity, .. } => {
                format!("[bracket {name} on {space} arity {arity} parity {parity}]")
            }
            Item::Action { algebra, space, .. } => format!("[action {name} {algebra} -> {space}]"),
            Item::Anchor { space, power, algebra, .. } => format!("[anchor {name} {space}^{power} -> {algebra}]"),
            Item::Trace { space, .. } => format!("[trace {name} on {space}]"),
            Item::Structure { theory, algebra, space, bracket, action, anchor } => format!(
                "[structure {name} {}] algebra={algebra} space={space} bracket={bracket} action={action} anchor={anchor}",
                theory_name(*theory)
            ),
            Item::Module { carrier, structure, .. } => format!("[module {name} on {carrier} for {structure}]"),
            Item::Cochain { space, arity, target, parity, .. } => {
                format!("[cochain {name} {space}^{arity} -> {target}] parity={parity}")
            }
            Item::Deformation { base, order, .. } => format!("[deformation {name}] base={base} order={order}"),
            Item::Automorphism { space, order, .. } => format!("[automorphism {name} on {space}] order={order}"),
            Item::Homomorphism { source, target, .. } => format!("[homomorphism {name} {source} -> {target}]"),
        };
        out.push_str(&header);
        out.push('\n');
        for (prefix, t) in tables(item) {
            write_table(&mut out, prefix.as_deref(), t);
        }
    }
    out
}
