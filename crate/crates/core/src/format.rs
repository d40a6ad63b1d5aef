//! Text formats for posets and Greechie diagrams.
//!
//! Poset documents are line oriented:
//!
//! ```text
//! # comment
//! format: 1
//! title: four-element Boolean algebra
//! elements: 0 f f' 1
//! covers: 0<f 0<f' f<1 f'<1
//! involution: 0:1 f:f'
//! expect: boolean lattice
//! ```
//!
//! `elements`, `covers` and `involution` may be repeated; their tokens are
//! concatenated. An involution pair `a:b` also fixes `b' = a` unless `b` has
//! its own pair. `expect` records verdicts the document is known to satisfy
//! (`name` for pass, `name=fail` for fail). A JSON object with the same
//! fields is accepted as well.
//!
//! Greechie documents use `atoms: ...` and one `block: ...` line per block.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::constructors::greechie::GreechieDiagram;
use crate::error::{Error, Result};
use crate::poset::{FinitePoset, RelationMode};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    #[serde(default = "default_version")]
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub involution: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expect: Vec<(String, bool)>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

impl PosetDocument {
    pub fn to_poset(&self) -> Result<FinitePoset> {
        let inv = (!self.involution.is_empty()).then_some(self.involution.as_slice());
        FinitePoset::build(&self.elements, &self.covers, RelationMode::Covers, inv)
    }

    pub fn from_poset(p: &FinitePoset) -> Self {
        let involution = match p.involution() {
            Some(inv) => (0..p.len())
                .filter(|&x| x <= inv[x] || inv[inv[x]] != x)
                .map(|x| (p.name(x).to_string(), p.name(inv[x]).to_string()))
                .collect(),
            None => Vec::new(),
        };
        PosetDocument {
            format: FORMAT_VERSION,
            title: None,
            elements: p.names().to_vec(),
            covers: p.covers_named(),
            involution,
            expect: Vec::new(),
        }
    }
}

/// Content digest used to identify inputs in reports.
pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    parse_poset_document(text)?.to_poset()
}

pub fn parse_poset_document(text: &str) -> Result<PosetDocument> {
    if text.trim_start().starts_with('{') {
        return parse_json_document(text);
    }
    let mut doc = PosetDocument {
        format: FORMAT_VERSION,
        ..Default::default()
    };
    let mut seen = HashSet::new();
    let mut pending_refs: Vec<(usize, usize, String)> = Vec::new();
    for (line_no, key, rest, rest_col) in lines(text)? {
        match key {
            "format" => {
                doc.format = rest.trim().parse().map_err(|_| {
                    Error::parse(line_no, rest_col, "format version must be an integer")
                })?;
                if doc.format != FORMAT_VERSION {
                    return Err(Error::parse(
                        line_no,
                        rest_col,
                        format!("unsupported format {}", doc.format),
                    ));
                }
            }
            "title" => doc.title = Some(rest.trim().to_string()),
            "elements" => {
                for (col, tok) in tokens(rest, rest_col) {
                    check_name(tok, line_no, col)?;
                    if !seen.insert(tok.to_string()) {
                        return Err(Error::parse(
                            line_no,
                            col,
                            format!("duplicate element `{tok}`"),
                        ));
                    }
                    doc.elements.push(tok.to_string());
                }
            }
            "covers" => {
                for (col, tok) in tokens(rest, rest_col) {
                    let (a, b) = tok.split_once('<').ok_or_else(|| {
                        Error::parse(line_no, col, format!("expected `a<b`, found `{tok}`"))
                    })?;
                    pending_refs.push((line_no, col, a.to_string()));
                    pending_refs.push((line_no, col + a.len() + 1, b.to_string()));
                    doc.covers.push((a.to_string(), b.to_string()));
                }
            }
            "involution" => {
                for (col, tok) in tokens(rest, rest_col) {
                    let (a, b) = tok.split_once(':').ok_or_else(|| {
                        Error::parse(line_no, col, format!("expected `a:b`, found `{tok}`"))
                    })?;
                    pending_refs.push((line_no, col, a.to_string()));
                    pending_refs.push((line_no, col + a.len() + 1, b.to_string()));
                    doc.involution.push((a.to_string(), b.to_string()));
                }
            }
            "expect" => doc.expect.extend(parse_expect(rest, rest_col, line_no)?),
            other => {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("unknown section `{other}`"),
                ))
            }
        }
    }
    if doc.elements.is_empty() {
        return Err(Error::parse(1, 1, "document declares no elements"));
    }
    for (line, col, name) in pending_refs {
        if !seen.contains(&name) {
            return Err(Error::parse(line, col, format!("unknown element `{name}`")));
        }
    }
    Ok(doc)
}

fn parse_json_document(text: &str) -> Result<PosetDocument> {
    let doc: PosetDocument = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let mut seen = HashSet::new();
    for name in &doc.elements {
        check_name(name, 0, 0)?;
        if !seen.insert(name) {
            return Err(Error::parse(0, 0, format!("duplicate element `{name}`")));
        }
    }
    for (a, b) in doc.covers.iter().chain(&doc.involution) {
        for name in [a, b] {
            if !seen.contains(name) {
                return Err(Error::parse(0, 0, format!("unknown element `{name}`")));
            }
        }
    }
    Ok(doc)
}

/// Canonical text form: covers in carrier order, wrapped eight per line.
pub fn serialize_poset(p: &FinitePoset) -> String {
    serialize_document(&PosetDocument::from_poset(p))
}

pub fn serialize_document(doc: &PosetDocument) -> String {
    let mut out = format!("format: {}\n", doc.format);
    if let Some(title) = &doc.title {
        out.push_str(&format!("title: {title}\n"));
    }
    out.push_str(&format!("elements: {}\n", doc.elements.join(" ")));
    for chunk in doc.covers.chunks(8) {
        let toks: Vec<String> = chunk.iter().map(|(a, b)| format!("{a}<{b}")).collect();
        out.push_str(&format!("covers: {}\n", toks.join(" ")));
    }
    for chunk in doc.involution.chunks(8) {
        let toks: Vec<String> = chunk.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        out.push_str(&format!("involution: {}\n", toks.join(" ")));
    }
    if !doc.expect.is_empty() {
        out.push_str(&format!("expect: {}\n", render_expect(&doc.expect)));
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GreechieDocument {
    pub title: Option<String>,
    pub diagram: GreechieDiagram,
    pub expect: Vec<(String, bool)>,
}

pub fn parse_greechie(text: &str) -> Result<GreechieDiagram> {
    Ok(parse_greechie_document(text)?.diagram)
}

pub fn parse_greechie_document(text: &str) -> Result<GreechieDocument> {
    let mut doc = GreechieDocument::default();
    let mut seen = HashSet::new();
    let mut have_atoms = false;
    for (line_no, key, rest, rest_col) in lines(text)? {
        match key {
            "title" => doc.title = Some(rest.trim().to_string()),
            "atoms" => {
                have_atoms = true;
                for (col, tok) in tokens(rest, rest_col) {
                    check_name(tok, line_no, col)?;
                    if !seen.insert(tok.to_string()) {
                        return Err(Error::parse(
                            line_no,
                            col,
                            format!("duplicate atom `{tok}`"),
                        ));
                    }
                    doc.diagram.atoms.push(tok.to_string());
                }
            }
            "block" => {
                if !have_atoms {
                    return Err(Error::parse(line_no, 1, "`block` before `atoms`"));
                }
                let mut block = Vec::new();
                for (col, tok) in tokens(rest, rest_col) {
                    if !seen.contains(tok) {
                        return Err(Error::parse(line_no, col, format!("unknown atom `{tok}`")));
                    }
                    block.push(tok.to_string());
                }
                if block.is_empty() {
                    return Err(Error::parse(line_no, rest_col, "empty block"));
                }
                doc.diagram.blocks.push(block);
            }
            "expect" => doc.expect.extend(parse_expect(rest, rest_col, line_no)?),
            other => {
                return Err(Error::parse(
                    line_no,
                    1,
                    format!("unknown section `{other}`"),
                ))
            }
        }
    }
    if doc.diagram.atoms.is_empty() {
        return Err(Error::parse(1, 1, "document declares no atoms"));
    }
    Ok(doc)
}

pub fn serialize_greechie(g: &GreechieDiagram) -> String {
    let mut out = format!("atoms: {}\n", g.atoms.join(" "));
    for b in &g.blocks {
        out.push_str(&format!("block: {}\n", b.join(" ")));
    }
    out
}

/// True when the text looks like a Greechie document rather than a poset.
pub fn is_greechie_text(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#') && !l.starts_with("title:"))
        .is_some_and(|l| l.starts_with("atoms:"))
}

fn render_expect(expect: &[(String, bool)]) -> String {
    expect
        .iter()
        .map(|(k, v)| if *v { k.clone() } else { format!("{k}=fail") })
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_expect(rest: &str, rest_col: usize, line_no: usize) -> Result<Vec<(String, bool)>> {
    tokens(rest, rest_col)
        .map(|(col, tok)| match tok.split_once('=') {
            None => Ok((tok.to_string(), true)),
            Some((k, "pass")) => Ok((k.to_string(), true)),
            Some((k, "fail")) => Ok((k.to_string(), false)),
            Some(_) => Err(Error::parse(
                line_no,
                col,
                format!("bad expectation `{tok}`"),
            )),
        })
        .collect()
}

/// Non-comment lines split at the first `:` into (line, key, rest, rest column).
fn lines(text: &str) -> Result<Vec<(usize, &str, &str, usize)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| Error::parse(line_no, 1, "expected `section: ...`"))?;
        out.push((line_no, key.trim(), rest, key.len() + 2));
    }
    Ok(out)
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(rest: &str, rest_col: usize) -> impl Iterator<Item = (usize, &str)> {
    let base = rest.as_ptr() as usize;
    rest.split_whitespace()
        .map(move |tok| (rest_col + (tok.as_ptr() as usize - base), tok))
}

fn check_name(name: &str, line: usize, col: usize) -> Result<()> {
    if name.is_empty() || name.contains(['<', ':', '#']) || name.contains(char::is_whitespace) {
        return Err(Error::parse(
            line,
            col,
            format!("invalid element name `{name}`"),
        ));
    }
    Ok(())
}
