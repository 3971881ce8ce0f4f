//! The line-oriented split preorder format.
//!
//! ```text
//! split <m> <n>
//! s0 t1
//! t1 s1
//! ```
//!
//! Each body line is one pair. The loader closes the listed pairs under
//! reflexivity and transitivity; the emitter writes the whole strict part,
//! sorted. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::splitpre::{SplitPreorder, TaggedNode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct TextError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, TextError> {
    Err(TextError {
        line,
        message: message.into(),
    })
}

pub fn parse_split_text(text: &str) -> Result<SplitPreorder, TextError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((header_line, header)) = lines.next() else {
        return err(1, "missing `split <m> <n>` header");
    };
    let words: Vec<&str> = header.split_whitespace().collect();
    let (src, tgt) = match words.as_slice() {
        ["split", m, n] => match (m.parse::<usize>(), n.parse::<usize>()) {
            (Ok(m), Ok(n)) => (m, n),
            _ => return err(header_line, format!("bad sizes in header `{header}`")),
        },
        _ => {
            return err(
                header_line,
                format!("expected `split <m> <n>`, found `{header}`"),
            )
        }
    };

    let mut pairs = Vec::new();
    for (line, body) in lines {
        let words: Vec<&str> = body.split_whitespace().collect();
        let [u, v] = words.as_slice() else {
            return err(line, format!("expected two nodes, found `{body}`"));
        };
        let u: TaggedNode = u.parse().or_else(|m| err(line, m))?;
        let v: TaggedNode = v.parse().or_else(|m| err(line, m))?;
        for node in [u, v] {
            let bound = match node.tag {
                crate::splitpre::NodeTag::Source => src,
                crate::splitpre::NodeTag::Target => tgt,
            };
            if node.index >= bound {
                return err(
                    line,
                    format!("node {node} is out of range for split {src} {tgt}"),
                );
            }
        }
        pairs.push((u, v));
    }
    SplitPreorder::generated_by(src, tgt, pairs).or_else(|e| err(1, e.to_string()))
}

pub fn emit_split_text(r: &SplitPreorder) -> String {
    let mut out = format!("split {} {}\n", r.src(), r.tgt());
    for (u, v) in r.strict_pairs() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}
