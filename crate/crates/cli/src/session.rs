//! Session files: field, ring, complete intersection, module and options.
//!
//! ```text
//! field GF(101)
//! ring x, y, z [weights 1, 1, 1]
//! ci x^3, y^3, z^3
//! module coker [[x^3, y^3, z^3, x*z, y*z^2]]
//! ```
//!
//! A module may instead be an explicit complex with its strict action:
//!
//! ```text
//! complex d1 [[x, y]] d2 [[-y], [x]]
//! action e1 [[x], [0]] [[0, x]]
//! action e2 [[0], [y]] [[-y, 0]]
//! ```
//!
//! Statements run to the end of the line, or further while a bracket is
//! open or the next line is indented. `#` starts a comment. Optional lines `truncation N`, `seed S` and
//! `output PATH` set defaults for the command line.

use std::fmt;
use std::path::PathBuf;
use std::sync::Arc;

use jumploci_core::resolution::{DgComplex, ModuleInput, RingData};
use jumploci_core::{Bideg, Error as CoreError, Field, Poly, PolyMatrix, PolyRing};
use thiserror::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub truncation: Option<usize>,
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: RingData,
    pub module: ModuleInput,
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

/// Source text with comments blanked out, so byte offsets still map to
/// lines and columns of the original.
struct Source {
    text: String,
    line_starts: Vec<usize>,
}

impl Source {
    fn new(raw: &str) -> Source {
        let mut bytes = raw.as_bytes().to_vec();
        let mut in_comment = false;
        for b in bytes.iter_mut() {
            match *b {
                b'\n' => in_comment = false,
                b'#' => in_comment = true,
                _ => {}
            }
            if in_comment {
                *b = b' ';
            }
        }
        let text = String::from_utf8(bytes).expect("comments are blanked whole");
        let mut line_starts = vec![0];
        line_starts.extend(text.match_indices('\n').map(|(i, _)| i + 1));
        Source { text, line_starts }
    }

    fn error(&self, pos: usize, msg: impl Into<String>) -> ParseError {
        let line = self.line_starts.partition_point(|&s| s <= pos);
        let col = pos - self.line_starts[line - 1] + 1;
        ParseError { line, col, msg: msg.into() }
    }

    /// Logical lines `(start, end)`: a newline ends a statement unless a
    /// bracket is still open.
    fn statements(&self) -> Result<Vec<(usize, usize)>, ParseError> {
        let mut out = Vec::new();
        let (mut depth, mut start) = (0i64, 0);
        for (i, c) in self.text.char_indices() {
            match c {
                '[' => depth += 1,
                ']' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(self.error(i, "unbalanced `]`"));
                    }
                }
                '\n' if depth == 0 => {
                    let next = &self.text[i + 1..];
                    let indented = next.starts_with([' ', '\t']) && !next.lines().next().unwrap_or("").trim().is_empty();
                    let here = !self.text[start..i].trim().is_empty();
                    if indented && (here || !out.is_empty()) {
                        if !here {
                            start = out.pop().map_or(start, |s: (usize, usize)| s.0);
                        }
                        continue;
                    }
                    if here {
                        out.push((start, i));
                    }
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth > 0 {
            return Err(self.error(self.text.len(), "unclosed `[`"));
        }
        if !self.text[start..].trim().is_empty() {
            out.push((start, self.text.len()));
        }
        Ok(out)
    }
}

/// A cursor over one statement.
struct Cursor<'a> {
    src: &'a Source,
    pos: usize,
    end: usize,
}

impl<'a> Cursor<'a> {
    fn text(&self) -> &'a str {
        &self.src.text[self.pos..self.end]
    }

    fn skip_ws(&mut self) {
        let t = self.text();
        self.pos += t.len() - t.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.end
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.src.error(self.pos, format!("expected `{c}`")))
        }
    }

    /// An identifier-like word, or `None` when the next character cannot
    /// start one.
    fn word(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let t = self.text();
        let len = t.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(t.len());
        if len == 0 {
            return None;
        }
        let start = self.pos;
        self.pos += len;
        Some((start, &t[..len]))
    }

    fn peek_word(&mut self) -> Option<(usize, &'a str)> {
        let save = self.pos;
        let w = self.word();
        self.pos = save;
        w
    }

    fn expect_word(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let pos = self.pos;
        self.word().ok_or_else(|| self.src.error(pos, format!("expected {what}")))
    }

    fn integer<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, ParseError> {
        let (pos, w) = self.expect_word(what)?;
        w.parse().map_err(|_| self.src.error(pos, format!("expected {what}, found `{w}`")))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.src.error(self.pos, format!("unexpected `{}`", self.text().trim_end())))
        }
    }

    /// Comma-separated items up to the end of the statement or a stop word,
    /// split at commas outside parentheses.
    fn items(&mut self, stop: Option<&str>) -> Vec<(usize, &'a str)> {
        let t = self.text();
        let mut limit = t.len();
        if let Some(stop) = stop {
            for (i, _) in t.match_indices(stop) {
                let before = t[..i].chars().next_back();
                let after = t[i + stop.len()..].chars().next();
                let boundary = |c: Option<char>| !c.is_some_and(|c| c.is_ascii_alphanumeric() || c == '_');
                if boundary(before) && boundary(after) {
                    limit = t[..i].trim_end().trim_end_matches('[').len();
                    break;
                }
            }
        }
        let out = split_top(&t[..limit], self.pos);
        self.pos += limit;
        out
    }

    /// `[[a, b], [c, d]]` as rows of raw entries with their offsets.
    fn matrix(&mut self) -> Result<RawMatrix<'a>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        self.expect('[')?;
        let mut rows = Vec::new();
        if self.eat(']') {
            return Ok((start, rows));
        }
        loop {
            self.expect('[')?;
            let t = self.text();
            let close = t.find(']').ok_or_else(|| self.src.error(self.pos, "unclosed row"))?;
            if t[..close].contains('[') {
                return Err(self.src.error(self.pos, "nested brackets inside a row"));
            }
            let row = if t[..close].trim().is_empty() { Vec::new() } else { split_top(&t[..close], self.pos) };
            rows.push(row);
            self.pos += close + 1;
            if self.eat(']') {
                return Ok((start, rows));
            }
            self.expect(',')?;
        }
    }
}

fn split_top(t: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i64, 0);
    let mut push = |s: usize, e: usize| {
        let piece = &t[s..e];
        let lead = piece.len() - piece.trim_start().len();
        out.push((offset + s + lead, piece.trim()));
    };
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                push(start, i);
                start = i + 1;
            }
            _ => {}
        }
    }
    push(start, t.len());
    out
}

fn core_error(src: &Source, pos: usize, e: CoreError) -> ParseError {
    match e {
        CoreError::Syntax { pos: p, msg } => src.error(pos + p, msg),
        other => src.error(pos, other.to_string()),
    }
}

fn poly(src: &Source, ring: &Arc<PolyRing>, (pos, text): (usize, &str)) -> Result<Poly, ParseError> {
    if text.is_empty() {
        return Err(src.error(pos, "empty entry"));
    }
    Poly::parse(ring, text).map_err(|e| core_error(src, pos, e))
}

type RawMatrix<'a> = (usize, Vec<Vec<(usize, &'a str)>>);

fn poly_rows(src: &Source, ring: &Arc<PolyRing>, m: &RawMatrix) -> Result<Vec<Vec<Poly>>, ParseError> {
    let (pos, rows) = m;
    let width = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != width) {
        return Err(src.error(*pos, "rows have different lengths"));
    }
    rows.iter().map(|r| r.iter().map(|&e| poly(src, ring, e)).collect()).collect()
}

/// A matrix whose rows are generators of the given degrees; column degrees
/// are read off the entries.
fn inferred(src: &Source, ring: &Arc<PolyRing>, m: &RawMatrix, rows: Vec<Bideg>) -> Result<PolyMatrix, ParseError> {
    let data = poly_rows(src, ring, m)?;
    if data.len() != rows.len() {
        return Err(src.error(m.0, format!("expected {} rows, found {}", rows.len(), data.len())));
    }
    PolyMatrix::from_rows_infer(ring, rows, data).map_err(|e| src.error(m.0, e.to_string()))
}

#[derive(Default)]
struct Draft<'a> {
    field: Option<Field>,
    ring: Option<Arc<PolyRing>>,
    ci: Option<(usize, Vec<Poly>)>,
    presentation: Option<(usize, RawMatrix<'a>)>,
    differentials: Vec<(usize, RawMatrix<'a>)>,
    actions: Vec<(usize, usize, Vec<RawMatrix<'a>>)>,
    options: Options,
}

impl<'a> Draft<'a> {
    fn ring(&self, src: &Source, pos: usize) -> Result<Arc<PolyRing>, ParseError> {
        self.ring.clone().ok_or_else(|| src.error(pos, "`ring` must come first"))
    }

    fn statement(&mut self, src: &'a Source, c: &mut Cursor<'a>) -> Result<(), ParseError> {
        let (pos, key) = c.expect_word("a statement")?;
        match key {
            "field" => {
                if self.field.is_some() {
                    return Err(src.error(pos, "duplicate `field`"));
                }
                let (p, w) = c.expect_word("GF(p) or QQ")?;
                let field = match w {
                    "QQ" => Field::Rationals,
                    "GF" => {
                        c.expect('(')?;
                        let at = c.pos;
                        let n: u64 = c.integer("a prime")?;
                        c.expect(')')?;
                        Field::prime(n).map_err(|e| src.error(at, e.to_string()))?
                    }
                    _ => return Err(src.error(p, format!("unknown field `{w}`"))),
                };
                c.finish()?;
                self.field = Some(field);
            }
            "ring" => {
                if self.ring.is_some() {
                    return Err(src.error(pos, "duplicate `ring`"));
                }
                let field = self.field.ok_or_else(|| src.error(pos, "`field` must come before `ring`"))?;
                let names: Vec<(usize, &str)> = c.items(Some("weights"));
                let mut weights = vec![1; names.len()];
                if !c.at_end() {
                    let bracket = c.eat('[');
                    c.expect_word("`weights`")?;
                    let items = if bracket {
                        let close = c.text().find(']').ok_or_else(|| src.error(c.pos, "expected `]`"))?;
                        let out = split_top(&c.text()[..close], c.pos);
                        c.pos += close + 1;
                        out
                    } else {
                        c.items(None)
                    };
                    if items.len() != names.len() {
                        return Err(src.error(c.pos, "one weight per variable is required"));
                    }
                    weights = items
                        .iter()
                        .map(|&(p, w)| w.parse().map_err(|_| src.error(p, format!("invalid weight `{w}`"))))
                        .collect::<Result<_, _>>()?;
                }
                c.finish()?;
                for &(p, n) in &names {
                    if n.is_empty() {
                        return Err(src.error(p, "missing variable name"));
                    }
                }
                let ring = PolyRing::base(field, names.iter().map(|n| n.1.to_string()).collect(), weights)
                    .map_err(|e| src.error(pos, e.to_string()))?;
                self.ring = Some(ring);
            }
            "ci" => {
                let ring = self.ring(src, pos)?;
                let gens = c.items(None).into_iter().map(|e| poly(src, &ring, e)).collect::<Result<Vec<_>, _>>()?;
                self.ci = Some((pos, gens));
            }
            "module" => {
                let (p, kind) = c.expect_word("`coker`")?;
                if kind != "coker" {
                    return Err(src.error(p, format!("unknown module kind `{kind}`")));
                }
                let m = c.matrix()?;
                c.finish()?;
                self.presentation = Some((pos, m));
            }
            "complex" | "action" => {
                // complex d1 M d2 M ... [action eI M M ...]*
                let mut key = key;
                let mut at = pos;
                loop {
                    if key == "action" {
                        let (p, name) = c.expect_word("an action name e1, e2, …")?;
                        let i = name.strip_prefix('e').and_then(|k| k.parse::<usize>().ok()).filter(|&k| k >= 1);
                        let i = i.ok_or_else(|| src.error(p, format!("expected e1, e2, …, found `{name}`")))?;
                        let mut ms = Vec::new();
                        while c.peek() == Some('[') {
                            ms.push(c.matrix()?);
                        }
                        self.actions.push((at, i, ms));
                    } else {
                        while let Some((p, name)) = c.peek_word() {
                            if name == "action" {
                                break;
                            }
                            c.word();
                            let k = name.strip_prefix('d').and_then(|k| k.parse::<usize>().ok());
                            if k != Some(self.differentials.len() + 1) {
                                return Err(src.error(p, format!("expected d{}, found `{name}`", self.differentials.len() + 1)));
                            }
                            self.differentials.push((p, c.matrix()?));
                        }
                    }
                    if c.at_end() {
                        break;
                    }
                    let (p, next) = c.expect_word("`action`")?;
                    if next != "action" {
                        return Err(src.error(p, format!("unexpected `{next}`")));
                    }
                    key = "action";
                    at = p;
                }
            }
            "truncation" => {
                self.options.truncation = Some(c.integer("a nonnegative integer")?);
                c.finish()?;
            }
            "seed" => {
                self.options.seed = Some(c.integer("a nonnegative integer")?);
                c.finish()?;
            }
            "output" => {
                let path = c.text().trim();
                if path.is_empty() {
                    return Err(src.error(c.pos, "expected a path"));
                }
                self.options.output = Some(PathBuf::from(path));
                c.pos = c.end;
            }
            _ => return Err(src.error(pos, format!("unknown statement `{key}`"))),
        }
        Ok(())
    }

    fn finish(self, src: &Source) -> Result<Session, ParseError> {
        let end = src.text.len();
        let ring = self.ring.ok_or_else(|| src.error(end, "missing `ring`"))?;
        let (ci_pos, ci) = self.ci.ok_or_else(|| src.error(end, "missing `ci`"))?;
        let ring_data = RingData::new(&ring, ci).map_err(|e| src.error(ci_pos, e.to_string()))?;
        let module = match (self.presentation, self.differentials.is_empty()) {
            (Some(_), false) => return Err(src.error(end, "give either `module` or `complex`, not both")),
            (None, true) => return Err(src.error(end, "missing `module` or `complex`")),
            (Some((_, m)), true) => {
                let rows = vec![Bideg::ZERO; m.1.len()];
                ModuleInput::Presentation(inferred(src, &ring, &m, rows)?)
            }
            (None, false) => {
                let mut differentials: Vec<PolyMatrix> = Vec::new();
                for (_, m) in &self.differentials {
                    let rows = differentials.last().map_or_else(|| vec![Bideg::ZERO; m.1.len()], |d| d.col_degrees().to_vec());
                    differentials.push(inferred(src, &ring, m, rows)?);
                }
                let mut degrees = vec![differentials[0].row_degrees().to_vec()];
                degrees.extend(differentials.iter().map(|d| d.col_degrees().to_vec()));
                let ci_degrees = ring_data.ci_degrees();
                let mut actions: Vec<Option<Vec<PolyMatrix>>> = vec![None; ring_data.c()];
                for (at, i, ms) in &self.actions {
                    if *i > ring_data.c() {
                        return Err(src.error(*at, format!("e{i} but there are only {} ci generators", ring_data.c())));
                    }
                    if actions[i - 1].is_some() {
                        return Err(src.error(*at, format!("duplicate action e{i}")));
                    }
                    if ms.len() != differentials.len() {
                        return Err(src.error(*at, format!("e{i} needs {} matrices, found {}", differentials.len(), ms.len())));
                    }
                    let mut blocks = Vec::new();
                    for (p, m) in ms.iter().enumerate() {
                        let data = poly_rows(src, &ring, m)?;
                        let (rows, cols) = (degrees[p + 1].clone(), degrees[p].clone());
                        if data.len() != rows.len() || data.first().map_or(0, |r| r.len()) != cols.len() && !rows.is_empty() {
                            return Err(src.error(
                                m.0,
                                format!("e{i} on F_{p} must be {}x{}", rows.len(), cols.len()),
                            ));
                        }
                        let shift = Bideg::new(0, ci_degrees[i - 1]);
                        blocks.push(PolyMatrix::from_rows(&ring, rows, cols, shift, data).map_err(|e| src.error(m.0, e.to_string()))?);
                    }
                    actions[i - 1] = Some(blocks);
                }
                let actions = actions
                    .into_iter()
                    .enumerate()
                    .map(|(i, a)| a.ok_or_else(|| src.error(end, format!("missing action e{}", i + 1))))
                    .collect::<Result<Vec<_>, _>>()?;
                ModuleInput::Complex(DgComplex { differentials, actions })
            }
        };
        Ok(Session { ring: ring_data, module, options: self.options })
    }
}

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let src = Source::new(text);
    let mut draft = Draft::default();
    for (start, end) in src.statements()? {
        let mut c = Cursor { src: &src, pos: start, end };
        draft.statement(&src, &mut c)?;
    }
    draft.finish(&src)
}

impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring.ring();
        match ring.field() {
            Field::Prime(p) => writeln!(f, "field GF({p})")?,
            Field::Rationals => writeln!(f, "field QQ")?,
        }
        write!(f, "ring {}", ring.names().join(", "))?;
        if ring.weights().iter().any(|&w| w != 1) {
            let w: Vec<String> = ring.weights().iter().map(|w| w.to_string()).collect();
            write!(f, " [weights {}]", w.join(", "))?;
        }
        writeln!(f)?;
        let ci: Vec<String> = self.ring.ci().iter().map(|p| p.to_string()).collect();
        writeln!(f, "ci {}", ci.join(", "))?;
        match &self.module {
            ModuleInput::Presentation(p) => writeln!(f, "module coker {}", matrix_text(p))?,
            ModuleInput::Complex(dg) => {
                write!(f, "complex")?;
                for (k, d) in dg.differentials.iter().enumerate() {
                    write!(f, " d{} {}", k + 1, matrix_text(d))?;
                }
                writeln!(f)?;
                for (i, blocks) in dg.actions.iter().enumerate() {
                    write!(f, "action e{}", i + 1)?;
                    for m in blocks {
                        write!(f, " {}", matrix_text(m))?;
                    }
                    writeln!(f)?;
                }
            }
        }
        if let Some(n) = self.options.truncation {
            writeln!(f, "truncation {n}")?;
        }
        if let Some(s) = self.options.seed {
            writeln!(f, "seed {s}")?;
        }
        if let Some(p) = &self.options.output {
            writeln!(f, "output {}", p.display())?;
        }
        Ok(())
    }
}

fn matrix_text(m: &PolyMatrix) -> String {
    if m.nrows() == 0 {
        "[]".into()
    } else {
        m.to_string()
    }
}

impl PartialEq for Session {
    fn eq(&self, other: &Session) -> bool {
        let same_module = match (&self.module, &other.module) {
            (ModuleInput::Presentation(a), ModuleInput::Presentation(b)) => a == b,
            (ModuleInput::Complex(a), ModuleInput::Complex(b)) => {
                a.differentials == b.differentials && a.actions == b.actions
            }
            _ => false,
        };
        self.ring.ring() == other.ring.ring()
            && self.ring.ci() == other.ring.ci()
            && same_module
            && self.options == other.options
    }
}
