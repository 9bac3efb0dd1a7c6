use std::collections::HashSet;
use std::fmt::Write as _;

use crate::factorization::{Factorization, SignedTwist, TwistSign};
use crate::surface::{CurveClass, Surface, SurfaceError};
use crate::Int;

/// Syntax or validation error with its source position (1-based).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// A named word: the token list as written plus the resolved letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordDecl {
    pub name: String,
    pub tokens: Vec<(String, TwistSign)>,
    pub factorization: Factorization,
}

/// A named assembly: references to a positive and a negative word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssemblyDecl {
    pub name: String,
    pub positive: String,
    pub negative: String,
}

/// One `expect` line from a fixture file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub key: String,
    pub value: String,
    pub provenance: String,
    pub line: usize,
}

/// A parsed document: one surface, then named curves, words and
/// assemblies, each label unique and declared before use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub surface: Surface,
    pub curves: Vec<(String, CurveClass)>,
    pub words: Vec<WordDecl>,
    pub assemblies: Vec<AssemblyDecl>,
    pub expectations: Vec<Expectation>,
}

impl Document {
    pub fn curve(&self, name: &str) -> Option<&CurveClass> {
        self.curves.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn word(&self, name: &str) -> Option<&WordDecl> {
        self.words.iter().find(|w| w.name == name)
    }

    pub fn assembly(&self, name: &str) -> Option<&AssemblyDecl> {
        self.assemblies.iter().find(|a| a.name == name)
    }

    /// Canonical DSL text; `parse(serialize(doc)) == doc`.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "surface g={} m={}",
            self.surface.genus(),
            self.surface.boundary_components()
        );
        for (name, c) in &self.curves {
            let _ = writeln!(out, "curve {name} = {c}");
        }
        for w in &self.words {
            let mut line = format!("word {} =", w.name);
            for (label, sign) in &w.tokens {
                match sign {
                    TwistSign::Positive => {
                        let _ = write!(line, " {label}");
                    }
                    TwistSign::Negative => {
                        let _ = write!(line, " -{label}");
                    }
                }
            }
            let _ = writeln!(out, "{line}");
        }
        for a in &self.assemblies {
            let _ = writeln!(
                out,
                "assembly {} = pos:{} neg:{}",
                a.name, a.positive, a.negative
            );
        }
        for e in &self.expectations {
            let _ = writeln!(out, "expect {} = {} # {}", e.key, e.value, e.provenance);
        }
        out
    }
}

/// Parses a document, failing on the first error with its position.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut surface: Option<Surface> = None;
    let mut curves: Vec<(String, CurveClass)> = Vec::new();
    let mut words: Vec<WordDecl> = Vec::new();
    let mut assemblies: Vec<AssemblyDecl> = Vec::new();
    let mut expectations: Vec<Expectation> = Vec::new();
    let mut labels: HashSet<String> = HashSet::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let is_expect = raw.trim_start().starts_with("expect");
        let line = if is_expect {
            raw
        } else {
            raw.split('#').next().unwrap_or("")
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let keyword = trimmed.split_whitespace().next().unwrap_or("");
        let col_of = |needle: &str| raw.find(needle).map_or(1, |p| p + 1);
        match keyword {
            "surface" => {
                if surface.is_some() {
                    return Err(ParseError::new(lineno, 1, "surface already declared"));
                }
                let rest = trimmed["surface".len()..].trim();
                let mut g: Option<usize> = None;
                let mut m: Option<usize> = None;
                for part in rest.split_whitespace() {
                    let (key, val) = part.split_once('=').ok_or_else(|| {
                        ParseError::new(
                            lineno,
                            col_of(part),
                            format!("expected g=<int> or m=<int>, got `{part}`"),
                        )
                    })?;
                    let n: usize = val.parse().map_err(|_| {
                        ParseError::new(lineno, col_of(val), format!("bad count `{val}`"))
                    })?;
                    match key {
                        "g" => g = Some(n),
                        "m" => m = Some(n),
                        _ => {
                            return Err(ParseError::new(
                                lineno,
                                col_of(part),
                                format!("unknown surface field `{key}`"),
                            ))
                        }
                    }
                }
                match (g, m) {
                    (Some(g), Some(m)) => surface = Some(Surface::new(g, m)),
                    _ => {
                        return Err(ParseError::new(
                            lineno,
                            1,
                            "surface needs both g=<int> and m=<int>",
                        ))
                    }
                }
            }
            "curve" => {
                let s = require_surface(&surface, lineno)?;
                let (name, rhs) = split_decl(trimmed, "curve", lineno)?;
                check_fresh_label(&mut labels, &name, lineno, col_of(&name))?;
                let coords = parse_vector(rhs, lineno, col_of(rhs))?;
                let class = CurveClass::new(s, coords)
                    .map_err(|e| ParseError::new(lineno, col_of(rhs), surface_error_text(&e, s)))?;
                curves.push((name, class));
            }
            "word" => {
                let s = require_surface(&surface, lineno)?;
                let (name, rhs) = split_decl(trimmed, "word", lineno)?;
                check_fresh_label(&mut labels, &name, lineno, col_of(&name))?;
                let tokens = parse_word_tokens(rhs, lineno, col_of(rhs))?;
                let mut letters = Vec::with_capacity(tokens.len());
                for (label, sign) in &tokens {
                    let class = curves
                        .iter()
                        .find(|(n, _)| n == label)
                        .map(|(_, c)| c.clone())
                        .ok_or_else(|| {
                            ParseError::new(
                                lineno,
                                col_of(label),
                                format!("undeclared curve `{label}`"),
                            )
                        })?;
                    letters.push(SignedTwist {
                        curve: class,
                        sign: *sign,
                    });
                }
                let factorization =
                    Factorization::new(s, letters).expect("letters come from one surface");
                words.push(WordDecl {
                    name,
                    tokens,
                    factorization,
                });
            }
            "assembly" => {
                require_surface(&surface, lineno)?;
                let (name, rhs) = split_decl(trimmed, "assembly", lineno)?;
                check_fresh_label(&mut labels, &name, lineno, col_of(&name))?;
                let mut positive = None;
                let mut negative = None;
                for part in rhs.split_whitespace() {
                    let (side, label) = part.split_once(':').ok_or_else(|| {
                        ParseError::new(
                            lineno,
                            col_of(part),
                            format!("expected pos:<word> or neg:<word>, got `{part}`"),
                        )
                    })?;
                    if words.iter().all(|w| w.name != label) {
                        return Err(ParseError::new(
                            lineno,
                            col_of(label),
                            format!("undeclared word `{label}`"),
                        ));
                    }
                    match side {
                        "pos" => positive = Some(label.to_string()),
                        "neg" => negative = Some(label.to_string()),
                        _ => {
                            return Err(ParseError::new(
                                lineno,
                                col_of(part),
                                format!("unknown assembly side `{side}`"),
                            ))
                        }
                    }
                }
                match (positive, negative) {
                    (Some(positive), Some(negative)) => assemblies.push(AssemblyDecl {
                        name,
                        positive,
                        negative,
                    }),
                    _ => {
                        return Err(ParseError::new(
                            lineno,
                            1,
                            "assembly needs both pos:<word> and neg:<word>",
                        ))
                    }
                }
            }
            "expect" => {
                let body = trimmed["expect".len()..].trim();
                let (kv, provenance) = match body.split_once('#') {
                    Some((kv, tag)) => (kv.trim(), tag.trim().to_string()),
                    None => (body, String::new()),
                };
                let (key, value) = kv
                    .split_once('=')
                    .ok_or_else(|| ParseError::new(lineno, 1, "expect needs <key> = <value>"))?;
                expectations.push(Expectation {
                    key: key.trim().to_string(),
                    value: value.trim().to_string(),
                    provenance,
                    line: lineno,
                });
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    col_of(other),
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let surface = surface.ok_or_else(|| ParseError::new(1, 1, "no surface declared"))?;
    Ok(Document {
        surface,
        curves,
        words,
        assemblies,
        expectations,
    })
}

fn require_surface(surface: &Option<Surface>, line: usize) -> Result<Surface, ParseError> {
    surface.ok_or_else(|| ParseError::new(line, 1, "surface must be declared first"))
}

fn split_decl<'a>(
    trimmed: &'a str,
    keyword: &str,
    line: usize,
) -> Result<(String, &'a str), ParseError> {
    let rest = trimmed[keyword.len()..].trim();
    let (name, rhs) = rest
        .split_once('=')
        .ok_or_else(|| ParseError::new(line, 1, format!("{keyword} declaration needs `= ...`")))?;
    let name = name.trim();
    if name.is_empty() || !is_label(name) {
        return Err(ParseError::new(
            line,
            1,
            format!("bad {keyword} label `{name}`"),
        ));
    }
    Ok((name.to_string(), rhs.trim()))
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn check_fresh_label(
    labels: &mut HashSet<String>,
    name: &str,
    line: usize,
    col: usize,
) -> Result<(), ParseError> {
    if !labels.insert(name.to_string()) {
        return Err(ParseError::new(
            line,
            col,
            format!("label `{name}` already declared"),
        ));
    }
    Ok(())
}

fn parse_vector(text: &str, line: usize, col: usize) -> Result<Vec<Int>, ParseError> {
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| ParseError::new(line, col, "vector must look like [1,0,...]"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<Int>()
                .map_err(|_| ParseError::new(line, col, format!("bad integer `{part}`")))
        })
        .collect()
}

fn surface_error_text(e: &SurfaceError, s: Surface) -> String {
    match e {
        SurfaceError::RankMismatch { expected, got } => {
            format!("vector has rank {got}, but {s} has rank {expected}")
        }
        other => other.to_string(),
    }
}

/// Recursive-descent tokenizer for word bodies: `label`, `-label`, and
/// `( ... )^n` groups, nestable.
fn parse_word_tokens(
    text: &str,
    line: usize,
    base_col: usize,
) -> Result<Vec<(String, TwistSign)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let tokens = parse_group(&chars, &mut pos, line, base_col, false)?;
    Ok(tokens)
}

fn parse_group(
    chars: &[char],
    pos: &mut usize,
    line: usize,
    base_col: usize,
    inside_parens: bool,
) -> Result<Vec<(String, TwistSign)>, ParseError> {
    let mut out = Vec::new();
    loop {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
        if *pos >= chars.len() {
            if inside_parens {
                return Err(ParseError::new(line, base_col + *pos, "unclosed `(`"));
            }
            return Ok(out);
        }
        match chars[*pos] {
            ')' => {
                if !inside_parens {
                    return Err(ParseError::new(line, base_col + *pos, "unmatched `)`"));
                }
                return Ok(out);
            }
            '(' => {
                *pos += 1;
                let inner = parse_group(chars, pos, line, base_col, true)?;
                // at the closing paren now
                *pos += 1;
                if *pos >= chars.len() || chars[*pos] != '^' {
                    return Err(ParseError::new(
                        line,
                        base_col + *pos,
                        "group needs a repetition count: (...)^n",
                    ));
                }
                *pos += 1;
                let start = *pos;
                while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                    *pos += 1;
                }
                if start == *pos {
                    return Err(ParseError::new(
                        line,
                        base_col + start,
                        "missing repetition count after `^`",
                    ));
                }
                let n: usize = chars[start..*pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| {
                        ParseError::new(line, base_col + start, "repetition count too large")
                    })?;
                for _ in 0..n {
                    out.extend(inner.iter().cloned());
                }
            }
            '-' => {
                *pos += 1;
                let label = read_label(chars, pos, line, base_col)?;
                out.push((label, TwistSign::Negative));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let label = read_label(chars, pos, line, base_col)?;
                out.push((label, TwistSign::Positive));
            }
            c => {
                return Err(ParseError::new(
                    line,
                    base_col + *pos,
                    format!("unexpected character `{c}` in word"),
                ));
            }
        }
    }
}

fn read_label(
    chars: &[char],
    pos: &mut usize,
    line: usize,
    base_col: usize,
) -> Result<String, ParseError> {
    let start = *pos;
    while *pos < chars.len() && (chars[*pos].is_ascii_alphanumeric() || chars[*pos] == '_') {
        *pos += 1;
    }
    if start == *pos {
        return Err(ParseError::new(
            line,
            base_col + start,
            "expected a curve label",
        ));
    }
    Ok(chars[start..*pos].iter().collect())
}
