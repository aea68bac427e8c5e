//! The line-based workspace format.
//!
//! ```text
//! semigroup Z2
//! elements 0 1
//! gammas g
//! op 0 g 0 = 0
//! op 0 g 1 = 1
//! op 1 g 0 = 1
//! op 1 g 1 = 0
//! end
//!
//! hom f : Z2 -> Z2
//! map 0 -> 0
//! map 1 -> 1
//! gmap g -> g
//! end
//!
//! amalgam A
//! core U
//! parts S1 S2
//! maps f1 f2
//! mode same-gamma
//! end
//! ```
//!
//! `#` starts a comment. Blocks may refer to blocks declared later. A `gmap`
//! line may be omitted when the target has a gamma of the same name, and the
//! `mode` line defaults to `same-gamma`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{is_valid_token, AlgebraError, RawEntry, RawTable};
use crate::amalgam::{AmalgamViolation, GammaAmalgam};
use crate::{Elem, Gam, GammaHomomorphism, GammaSemigroup, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {expected}, found {found}")]
    Syntax { expected: String, found: String },
    #[error("unresolved reference `{0}`")]
    UnresolvedReference(String),
    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("`{0}` is mapped twice")]
    DuplicateMapping(String),
    #[error("block is not closed by `end`")]
    UnterminatedBlock,
    #[error(transparent)]
    Table(AlgebraError),
    #[error("invalid amalgam: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Amalgam(Vec<AmalgamViolation>),
}

/// Rejected programmatic additions to a [`Workspace`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkspaceError {
    #[error("duplicate {kind} name `{name}`")]
    DuplicateName { kind: &'static str, name: String },
    #[error("`{0}` is not a valid token")]
    InvalidName(String),
    #[error("`{0}` is not declared in this workspace")]
    UnresolvedReference(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Semigroup,
    Hom,
    Amalgam,
}

/// Named semigroups, homomorphisms and amalgams, in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Workspace {
    semigroups: Vec<Arc<GammaSemigroup>>,
    homomorphisms: Vec<GammaHomomorphism>,
    amalgams: Vec<GammaAmalgam>,
    order: Vec<(Kind, usize)>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn semigroups(&self) -> &[Arc<GammaSemigroup>] {
        &self.semigroups
    }

    pub fn homomorphisms(&self) -> &[GammaHomomorphism] {
        &self.homomorphisms
    }

    pub fn amalgams(&self) -> &[GammaAmalgam] {
        &self.amalgams
    }

    pub fn semigroup(&self, name: &str) -> Option<&Arc<GammaSemigroup>> {
        self.semigroups.iter().find(|s| s.name() == name)
    }

    pub fn homomorphism(&self, name: &str) -> Option<&GammaHomomorphism> {
        self.homomorphisms.iter().find(|h| h.name() == name)
    }

    pub fn amalgam(&self, name: &str) -> Option<&GammaAmalgam> {
        self.amalgams.iter().find(|a| a.name() == name)
    }

    fn check_name(&self, kind: Kind, name: &str) -> Result<(), WorkspaceError> {
        if !is_valid_token(name) {
            return Err(WorkspaceError::InvalidName(name.to_owned()));
        }
        let taken = match kind {
            Kind::Semigroup => self.semigroup(name).is_some(),
            Kind::Hom => self.homomorphism(name).is_some(),
            Kind::Amalgam => self.amalgam(name).is_some(),
        };
        if taken {
            return Err(WorkspaceError::DuplicateName {
                kind: kind.keyword(),
                name: name.to_owned(),
            });
        }
        Ok(())
    }

    fn require_semigroup(&self, s: &GammaSemigroup) -> Result<(), WorkspaceError> {
        match self.semigroup(s.name()) {
            Some(t) if **t == *s => Ok(()),
            _ => Err(WorkspaceError::UnresolvedReference(s.name().to_owned())),
        }
    }

    /// Adds a semigroup whose name and identifiers are valid tokens.
    pub fn add_semigroup(&mut self, s: Arc<GammaSemigroup>) -> Result<(), WorkspaceError> {
        self.check_name(Kind::Semigroup, s.name())?;
        if let Some(bad) = s
            .element_names()
            .iter()
            .chain(s.gamma_names())
            .find(|t| !is_valid_token(t))
        {
            return Err(WorkspaceError::InvalidName(bad.clone()));
        }
        self.order.push((Kind::Semigroup, self.semigroups.len()));
        self.semigroups.push(s);
        Ok(())
    }

    /// Adds a homomorphism between semigroups already in the workspace.
    pub fn add_homomorphism(&mut self, h: GammaHomomorphism) -> Result<(), WorkspaceError> {
        self.check_name(Kind::Hom, h.name())?;
        self.require_semigroup(h.source())?;
        self.require_semigroup(h.target())?;
        self.order.push((Kind::Hom, self.homomorphisms.len()));
        self.homomorphisms.push(h);
        Ok(())
    }

    /// Adds an amalgam whose tables and maps are already in the workspace.
    pub fn add_amalgam(&mut self, a: GammaAmalgam) -> Result<(), WorkspaceError> {
        use crate::amalgam::Part;
        self.check_name(Kind::Amalgam, a.name())?;
        self.require_semigroup(a.core())?;
        for p in Part::BOTH {
            self.require_semigroup(a.part(p))?;
            match self.homomorphism(a.map(p).name()) {
                Some(h) if h == a.map(p) => {}
                _ => {
                    return Err(WorkspaceError::UnresolvedReference(
                        a.map(p).name().to_owned(),
                    ))
                }
            }
        }
        self.order.push((Kind::Amalgam, self.amalgams.len()));
        self.amalgams.push(a);
        Ok(())
    }
}

impl Kind {
    fn keyword(self) -> &'static str {
        match self {
            Kind::Semigroup => "semigroup",
            Kind::Hom => "hom",
            Kind::Amalgam => "amalgam",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

#[derive(Debug)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    /// Column just past the last character, for "found end of line".
    end_column: usize,
}

fn lex_line<'a>(number: usize, raw: &'a str) -> Line<'a> {
    let content: &'a str = raw.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = 0;
    let mut chars = content.char_indices().peekable();
    let flush = |tokens: &mut Vec<Token<'a>>, start: &mut Option<(usize, usize)>, end: usize| {
        if let Some((b, col)) = start.take() {
            tokens.push(Token {
                text: &content[b..end],
                column: col,
            });
        }
    };
    while let Some((i, c)) = chars.next() {
        column += 1;
        if c.is_whitespace() {
            flush(&mut tokens, &mut start, i);
        } else if c == '=' {
            flush(&mut tokens, &mut start, i);
            tokens.push(Token {
                text: &content[i..i + 1],
                column,
            });
        } else if c == '-' && matches!(chars.peek(), Some((_, '>'))) {
            flush(&mut tokens, &mut start, i);
            tokens.push(Token {
                text: &content[i..i + 2],
                column,
            });
            chars.next();
            column += 1;
        } else if start.is_none() {
            start = Some((i, column));
        }
    }
    flush(&mut tokens, &mut start, content.len());
    Line {
        number,
        tokens,
        end_column: column + 1,
    }
}

fn err(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

fn syntax(line: &Line<'_>, index: usize, expected: &str) -> ParseError {
    let (column, found) = match line.tokens.get(index) {
        Some(t) => (t.column, format!("`{}`", t.text)),
        None => (line.end_column, "end of line".to_owned()),
    };
    err(
        line.number,
        column,
        ParseErrorKind::Syntax {
            expected: expected.to_owned(),
            found,
        },
    )
}

fn is_name(t: &Token<'_>) -> bool {
    t.text != "=" && t.text != "->"
}

/// A name reference with its position.
#[derive(Debug, Clone)]
struct Located {
    name: String,
    line: usize,
    column: usize,
}

impl Located {
    fn new(line: &Line<'_>, t: &Token<'_>) -> Self {
        Self {
            name: t.text.to_owned(),
            line: line.number,
            column: t.column,
        }
    }

    fn unresolved(&self) -> ParseError {
        err(
            self.line,
            self.column,
            ParseErrorKind::UnresolvedReference(self.name.clone()),
        )
    }
}

#[derive(Debug)]
struct SemigroupBlock {
    header: Located,
    elements: Vec<Located>,
    gammas: Vec<Located>,
    /// `x g y = z` and the line it came from.
    ops: Vec<([Located; 4], usize)>,
    end_line: usize,
}

#[derive(Debug)]
struct HomBlock {
    header: Located,
    source: Located,
    target: Located,
    maps: Vec<(Located, Located)>,
    gmaps: Vec<(Located, Located)>,
}

#[derive(Debug)]
struct AmalgamBlock {
    header: Located,
    core: Located,
    parts: [Located; 2],
    maps: [Located; 2],
    mode: Mode,
}

#[derive(Debug)]
enum Block {
    Semigroup(SemigroupBlock),
    Hom(HomBlock),
    Amalgam(AmalgamBlock),
}

/// Tokens of a line that must be exactly `keyword name+`.
fn names_after<'a>(line: &'a Line<'a>, min: usize, what: &str) -> Result<Vec<Located>, ParseError> {
    let rest = &line.tokens[1..];
    if let Some(i) = rest.iter().position(|t| !is_name(t)) {
        return Err(syntax(line, i + 1, what));
    }
    if rest.len() < min {
        return Err(syntax(line, line.tokens.len(), what));
    }
    Ok(rest.iter().map(|t| Located::new(line, t)).collect())
}

fn exact_names(line: &Line<'_>, count: usize, what: &str) -> Result<Vec<Located>, ParseError> {
    let names = names_after(line, count, what)?;
    if names.len() > count {
        return Err(syntax(line, count + 1, "end of line"));
    }
    Ok(names)
}

/// `keyword a -> b`.
fn arrow_pair(line: &Line<'_>) -> Result<(Located, Located), ParseError> {
    let t = &line.tokens;
    let name_at = |i: usize, what: &str| match t.get(i) {
        Some(tok) if is_name(tok) => Ok(Located::new(line, tok)),
        _ => Err(syntax(line, i, what)),
    };
    let a = name_at(1, "a name")?;
    match t.get(2) {
        Some(tok) if tok.text == "->" => {}
        _ => return Err(syntax(line, 2, "`->`")),
    }
    let b = name_at(3, "a name")?;
    if t.len() > 4 {
        return Err(syntax(line, 4, "end of line"));
    }
    Ok((a, b))
}

struct Lines<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<&Line<'a>> {
        let line = self.lines.get(self.pos)?;
        self.pos += 1;
        Some(line)
    }
}

fn parse_blocks(text: &str) -> Result<Vec<Block>, ParseError> {
    let lines: Vec<Line<'_>> = text
        .lines()
        .enumerate()
        .map(|(i, l)| lex_line(i + 1, l))
        .filter(|l| !l.tokens.is_empty())
        .collect();
    let mut input = Lines { lines, pos: 0 };
    let mut blocks = Vec::new();
    while let Some(line) = input.next() {
        let keyword = line.tokens[0].text;
        let header = match keyword {
            "semigroup" | "amalgam" => exact_names(line, 1, "a block name")?.remove(0),
            "hom" => {
                let t = &line.tokens;
                let name = match t.get(1) {
                    Some(tok) if is_name(tok) && tok.text != ":" => Located::new(line, tok),
                    _ => return Err(syntax(line, 1, "a homomorphism name")),
                };
                match t.get(2) {
                    Some(tok) if tok.text == ":" => {}
                    _ => return Err(syntax(line, 2, "`:`")),
                }
                let (source, target) = {
                    let shifted = Line {
                        number: line.number,
                        tokens: t[2..].to_vec(),
                        end_column: line.end_column,
                    };
                    arrow_pair(&shifted)?
                };
                let number = line.number;
                let block = parse_hom_body(&mut input, name, source, target, number)?;
                blocks.push(Block::Hom(block));
                continue;
            }
            _ => return Err(syntax(line, 0, "`semigroup`, `hom` or `amalgam`")),
        };
        let number = line.number;
        let block = if keyword == "semigroup" {
            Block::Semigroup(parse_semigroup_body(&mut input, header, number)?)
        } else {
            Block::Amalgam(parse_amalgam_body(&mut input, header, number)?)
        };
        blocks.push(block);
    }
    Ok(blocks)
}

fn unterminated(header_line: usize) -> ParseError {
    err(header_line, 1, ParseErrorKind::UnterminatedBlock)
}

fn missing(line: usize, what: &str) -> ParseError {
    err(
        line,
        1,
        ParseErrorKind::Syntax {
            expected: format!("a `{what}` line"),
            found: "`end`".to_owned(),
        },
    )
}

fn duplicate_line(line: &Line<'_>) -> ParseError {
    syntax(line, 0, "each keyword at most once per block")
}

fn parse_semigroup_body(
    input: &mut Lines<'_>,
    header: Located,
    header_line: usize,
) -> Result<SemigroupBlock, ParseError> {
    let mut elements = None;
    let mut gammas = None;
    let mut ops = Vec::new();
    loop {
        let line = input.next().ok_or_else(|| unterminated(header_line))?;
        match line.tokens[0].text {
            "end" => {
                exact_names(line, 0, "end of line")?;
                let elements = elements.ok_or_else(|| missing(line.number, "elements"))?;
                let gammas = gammas.ok_or_else(|| missing(line.number, "gammas"))?;
                return Ok(SemigroupBlock {
                    header,
                    elements,
                    gammas,
                    ops,
                    end_line: line.number,
                });
            }
            "elements" if elements.is_none() => {
                elements = Some(names_after(line, 1, "an element name")?)
            }
            "gammas" if gammas.is_none() => gammas = Some(names_after(line, 1, "a gamma name")?),
            "elements" | "gammas" => return Err(duplicate_line(line)),
            "op" => {
                let t = &line.tokens;
                let name_at = |i: usize| match t.get(i) {
                    Some(tok) if is_name(tok) => Ok(Located::new(line, tok)),
                    _ => Err(syntax(line, i, "a name")),
                };
                let (x, g, y) = (name_at(1)?, name_at(2)?, name_at(3)?);
                match t.get(4) {
                    Some(tok) if tok.text == "=" => {}
                    _ => return Err(syntax(line, 4, "`=`")),
                }
                let z = name_at(5)?;
                if t.len() > 6 {
                    return Err(syntax(line, 6, "end of line"));
                }
                ops.push(([x, g, y, z], line.number));
            }
            _ => return Err(syntax(line, 0, "`elements`, `gammas`, `op` or `end`")),
        }
    }
}

fn parse_hom_body(
    input: &mut Lines<'_>,
    header: Located,
    source: Located,
    target: Located,
    header_line: usize,
) -> Result<HomBlock, ParseError> {
    let mut maps = Vec::new();
    let mut gmaps = Vec::new();
    loop {
        let line = input.next().ok_or_else(|| unterminated(header_line))?;
        match line.tokens[0].text {
            "end" => {
                exact_names(line, 0, "end of line")?;
                return Ok(HomBlock {
                    header,
                    source,
                    target,
                    maps,
                    gmaps,
                });
            }
            "map" => maps.push(arrow_pair(line)?),
            "gmap" => gmaps.push(arrow_pair(line)?),
            _ => return Err(syntax(line, 0, "`map`, `gmap` or `end`")),
        }
    }
}

fn parse_amalgam_body(
    input: &mut Lines<'_>,
    header: Located,
    header_line: usize,
) -> Result<AmalgamBlock, ParseError> {
    let mut core = None;
    let mut parts = None;
    let mut maps = None;
    let mut mode = None;
    loop {
        let line = input.next().ok_or_else(|| unterminated(header_line))?;
        let keyword = line.tokens[0].text;
        let seen = match keyword {
            "core" => core.is_some(),
            "parts" => parts.is_some(),
            "maps" => maps.is_some(),
            "mode" => mode.is_some(),
            _ => false,
        };
        if seen {
            return Err(duplicate_line(line));
        }
        match keyword {
            "end" => {
                exact_names(line, 0, "end of line")?;
                let core = core.ok_or_else(|| missing(line.number, "core"))?;
                let parts: [Located; 2] = parts.ok_or_else(|| missing(line.number, "parts"))?;
                let maps: [Located; 2] = maps.ok_or_else(|| missing(line.number, "maps"))?;
                return Ok(AmalgamBlock {
                    header,
                    core,
                    parts,
                    maps,
                    mode: mode.unwrap_or(Mode::SameGamma),
                });
            }
            "core" => core = Some(exact_names(line, 1, "a semigroup name")?.remove(0)),
            "parts" => parts = Some(two(exact_names(line, 2, "a semigroup name")?)),
            "maps" => maps = Some(two(exact_names(line, 2, "a homomorphism name")?)),
            "mode" => {
                let m = exact_names(line, 1, "`same-gamma` or `disjoint`")?;
                mode = Some(
                    Mode::from_keyword(&m[0].name)
                        .ok_or_else(|| syntax(line, 1, "`same-gamma` or `disjoint`"))?,
                );
            }
            _ => return Err(syntax(line, 0, "`core`, `parts`, `maps`, `mode` or `end`")),
        }
    }
}

fn two(mut v: Vec<Located>) -> [Located; 2] {
    let b = v.pop().expect("exactly two names");
    let a = v.pop().expect("exactly two names");
    [a, b]
}

fn located(at: &Located, kind: ParseErrorKind) -> ParseError {
    err(at.line, at.column, kind)
}

fn declare<'a>(
    seen: &mut HashMap<&'a str, ()>,
    kind: &'static str,
    at: &'a Located,
) -> Result<(), ParseError> {
    if seen.insert(at.name.as_str(), ()).is_some() {
        return Err(located(
            at,
            ParseErrorKind::DuplicateName {
                kind,
                name: at.name.clone(),
            },
        ));
    }
    Ok(())
}

fn build_semigroup(b: &SemigroupBlock) -> Result<GammaSemigroup, ParseError> {
    let mut elements = HashMap::new();
    for e in &b.elements {
        declare(&mut elements, "element", e)?;
    }
    let mut gammas = HashMap::new();
    for g in &b.gammas {
        declare(&mut gammas, "gamma", g)?;
    }
    let mut entries = Vec::with_capacity(b.ops.len());
    let mut cells: HashMap<(&str, &str, &str), &str> = HashMap::new();
    for ([x, g, y, z], _) in &b.ops {
        for (name, pool) in [(x, &elements), (g, &gammas), (y, &elements), (z, &elements)] {
            if !pool.contains_key(name.name.as_str()) {
                return Err(name.unresolved());
            }
        }
        let key = (x.name.as_str(), g.name.as_str(), y.name.as_str());
        if let Some(prev) = cells.insert(key, z.name.as_str()) {
            if prev != z.name {
                return Err(located(
                    x,
                    ParseErrorKind::Table(AlgebraError::DuplicateEntry {
                        a: x.name.clone(),
                        gamma: g.name.clone(),
                        b: y.name.clone(),
                    }),
                ));
            }
        }
        entries.push(RawEntry::new(&x.name, &g.name, &y.name, &z.name));
    }
    let raw = RawTable {
        name: b.header.name.clone(),
        elements: b.elements.iter().map(|e| e.name.clone()).collect(),
        gammas: b.gammas.iter().map(|g| g.name.clone()).collect(),
        entries,
    };
    GammaSemigroup::validate_table(&raw).map_err(|e| err(b.end_line, 1, ParseErrorKind::Table(e)))
}

fn build_hom(
    b: &HomBlock,
    semigroups: &HashMap<&str, Arc<GammaSemigroup>>,
) -> Result<GammaHomomorphism, ParseError> {
    let source = semigroups
        .get(b.source.name.as_str())
        .ok_or_else(|| b.source.unresolved())?;
    let target = semigroups
        .get(b.target.name.as_str())
        .ok_or_else(|| b.target.unresolved())?;
    let mut carrier: Vec<Option<Elem>> = vec![None; source.size()];
    for (x, y) in &b.maps {
        let xi = source.element(&x.name).ok_or_else(|| x.unresolved())?;
        let yi = target.element(&y.name).ok_or_else(|| y.unresolved())?;
        if carrier[xi.0].replace(yi).is_some_and(|prev| prev != yi) {
            return Err(located(x, ParseErrorKind::DuplicateMapping(x.name.clone())));
        }
    }
    let mut gamma: Vec<Option<Gam>> = vec![None; source.gamma_count()];
    let mut explicit = vec![false; source.gamma_count()];
    for (g, h) in &b.gmaps {
        let gi = source.gamma(&g.name).ok_or_else(|| g.unresolved())?;
        let hi = target.gamma(&h.name).ok_or_else(|| h.unresolved())?;
        if explicit[gi.0] && gamma[gi.0] != Some(hi) {
            return Err(located(g, ParseErrorKind::DuplicateMapping(g.name.clone())));
        }
        explicit[gi.0] = true;
        gamma[gi.0] = Some(hi);
    }
    for g in source.gammas() {
        if gamma[g.0].is_none() {
            gamma[g.0] = target.gamma(source.gamma_name(g));
        }
    }
    let not_total = |what| {
        located(
            &b.header,
            ParseErrorKind::Table(AlgebraError::MapNotTotal {
                map: b.header.name.clone(),
                what,
            }),
        )
    };
    let carrier = carrier
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| not_total("carrier"))?;
    let gamma = gamma
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| not_total("gamma"))?;
    GammaHomomorphism::new(
        &b.header.name,
        Arc::clone(source),
        Arc::clone(target),
        carrier,
        gamma,
    )
    .map_err(|e| located(&b.header, ParseErrorKind::Table(e)))
}

fn build_amalgam(
    b: &AmalgamBlock,
    semigroups: &HashMap<&str, Arc<GammaSemigroup>>,
    homs: &HashMap<&str, GammaHomomorphism>,
) -> Result<GammaAmalgam, ParseError> {
    let semigroup = |at: &Located| {
        semigroups
            .get(at.name.as_str())
            .cloned()
            .ok_or_else(|| at.unresolved())
    };
    let hom = |at: &Located| {
        homs.get(at.name.as_str())
            .cloned()
            .ok_or_else(|| at.unresolved())
    };
    let a = GammaAmalgam::new(
        &b.header.name,
        semigroup(&b.core)?,
        [semigroup(&b.parts[0])?, semigroup(&b.parts[1])?],
        [hom(&b.maps[0])?, hom(&b.maps[1])?],
        b.mode,
    );
    a.validate()
        .map_err(|v| located(&b.header, ParseErrorKind::Amalgam(v)))?;
    Ok(a)
}

/// Parses a workspace. Never panics; every error carries a position.
pub fn parse(text: &str) -> Result<Workspace, ParseError> {
    let blocks = parse_blocks(text)?;

    let mut names: [HashMap<&str, ()>; 3] = Default::default();
    for block in &blocks {
        let (slot, kind, header) = match block {
            Block::Semigroup(b) => (0, "semigroup", &b.header),
            Block::Hom(b) => (1, "hom", &b.header),
            Block::Amalgam(b) => (2, "amalgam", &b.header),
        };
        declare(&mut names[slot], kind, header)?;
    }

    let mut semigroups = HashMap::new();
    for block in &blocks {
        if let Block::Semigroup(b) = block {
            semigroups.insert(b.header.name.as_str(), Arc::new(build_semigroup(b)?));
        }
    }
    let mut homs = HashMap::new();
    for block in &blocks {
        if let Block::Hom(b) = block {
            homs.insert(b.header.name.as_str(), build_hom(b, &semigroups)?);
        }
    }

    let mut w = Workspace::new();
    for block in &blocks {
        match block {
            Block::Semigroup(b) => {
                w.order.push((Kind::Semigroup, w.semigroups.len()));
                w.semigroups
                    .push(Arc::clone(&semigroups[b.header.name.as_str()]));
            }
            Block::Hom(b) => {
                w.order.push((Kind::Hom, w.homomorphisms.len()));
                w.homomorphisms.push(homs[b.header.name.as_str()].clone());
            }
            Block::Amalgam(b) => {
                let a = build_amalgam(b, &semigroups, &homs)?;
                w.order.push((Kind::Amalgam, w.amalgams.len()));
                w.amalgams.push(a);
            }
        }
    }
    Ok(w)
}

struct Emit<'a>(&'a Workspace);

impl fmt::Display for Emit<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.0;
        for (i, &(kind, ix)) in w.order.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            match kind {
                Kind::Semigroup => write_semigroup(f, &w.semigroups[ix])?,
                Kind::Hom => write_hom(f, &w.homomorphisms[ix])?,
                Kind::Amalgam => write_amalgam(f, &w.amalgams[ix])?,
            }
        }
        Ok(())
    }
}

fn write_semigroup(f: &mut fmt::Formatter<'_>, s: &GammaSemigroup) -> fmt::Result {
    writeln!(f, "semigroup {}", s.name())?;
    writeln!(f, "elements {}", s.element_names().join(" "))?;
    writeln!(f, "gammas {}", s.gamma_names().join(" "))?;
    for a in s.elements() {
        for g in s.gammas() {
            for b in s.elements() {
                writeln!(
                    f,
                    "op {} {} {} = {}",
                    s.element_name(a),
                    s.gamma_name(g),
                    s.element_name(b),
                    s.element_name(s.op(a, g, b))
                )?;
            }
        }
    }
    writeln!(f, "end")
}

fn write_hom(f: &mut fmt::Formatter<'_>, h: &GammaHomomorphism) -> fmt::Result {
    let (s, t) = (h.source(), h.target());
    writeln!(f, "hom {} : {} -> {}", h.name(), s.name(), t.name())?;
    for x in s.elements() {
        writeln!(
            f,
            "map {} -> {}",
            s.element_name(x),
            t.element_name(h.apply(x))
        )?;
    }
    for g in s.gammas() {
        writeln!(
            f,
            "gmap {} -> {}",
            s.gamma_name(g),
            t.gamma_name(h.apply_gamma(g))
        )?;
    }
    writeln!(f, "end")
}

fn write_amalgam(f: &mut fmt::Formatter<'_>, a: &GammaAmalgam) -> fmt::Result {
    use crate::amalgam::Part;
    writeln!(f, "amalgam {}", a.name())?;
    writeln!(f, "core {}", a.core().name())?;
    writeln!(
        f,
        "parts {} {}",
        a.part(Part::First).name(),
        a.part(Part::Second).name()
    )?;
    writeln!(
        f,
        "maps {} {}",
        a.map(Part::First).name(),
        a.map(Part::Second).name()
    )?;
    writeln!(f, "mode {}", a.mode())?;
    writeln!(f, "end")
}

/// Canonical text: blocks in declaration order separated by blank lines, op
/// lines in index order, every map and gamma map written out.
pub fn serialize(w: &Workspace) -> String {
    Emit(w).to_string()
}
