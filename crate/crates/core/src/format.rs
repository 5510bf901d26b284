//! The `.b1a` algebra file format.
//!
//! ```text
//! # comment
//! elements 0 a 1
//! zero 0
//! one 1
//! add
//! 0 a 1
//! a a 1
//! 1 1 1
//! mul
//! 0 0 0
//! 0 a a
//! 0 a 1
//! ```
//!
//! Tokens are whitespace-separated and `#` starts a comment. Each table row
//! sits on its own line; row `i`, column `j` is `elements[i] ∘ elements[j]`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::algebra::{build_algebra, FiniteB1Algebra};
use crate::error::{Error, Result};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, (byte, ch)) in body.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, c))) => {
                    tokens.push(Token {
                        text: &body[b..byte],
                        column: c + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            tokens.push(Token {
                text: &body[b..],
                column: c + 1,
            });
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: i + 1,
                tokens,
            });
        }
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses and validates an algebra definition.
pub fn parse_algebra(text: &str) -> Result<FiniteB1Algebra> {
    let lines = tokenize(text);
    let mut names: Option<Vec<String>> = None;
    let mut zero: Option<String> = None;
    let mut one: Option<String> = None;
    let mut add: Option<Vec<Vec<String>>> = None;
    let mut mul: Option<Vec<Vec<String>>> = None;

    let mut i = 0;
    while i < lines.len() {
        let line = &lines[i];
        let head = &line.tokens[0];
        let args = &line.tokens[1..];
        let duplicate = |seen: bool| {
            if seen {
                Err(syntax(
                    line.number,
                    head.column,
                    format!("duplicate directive `{}`", head.text),
                ))
            } else {
                Ok(())
            }
        };
        match head.text {
            "elements" => {
                duplicate(names.is_some())?;
                if args.is_empty() {
                    return Err(syntax(
                        line.number,
                        head.column,
                        "`elements` needs at least one label",
                    ));
                }
                let mut seen = HashSet::new();
                for t in args {
                    if t.text.contains(',') {
                        return Err(syntax(
                            line.number,
                            t.column,
                            format!("label `{}` contains ','", t.text),
                        ));
                    }
                    if !seen.insert(t.text) {
                        return Err(syntax(
                            line.number,
                            t.column,
                            format!("duplicate label `{}`", t.text),
                        ));
                    }
                }
                names = Some(args.iter().map(|t| t.text.to_string()).collect());
                i += 1;
            }
            "zero" | "one" => {
                let slot = if head.text == "zero" {
                    &mut zero
                } else {
                    &mut one
                };
                duplicate(slot.is_some())?;
                match args {
                    [t] => *slot = Some(t.text.to_string()),
                    [] => {
                        return Err(syntax(
                            line.number,
                            head.column,
                            format!("`{}` needs a label", head.text),
                        ))
                    }
                    [_, extra, ..] => {
                        return Err(syntax(line.number, extra.column, "unexpected token"))
                    }
                }
                i += 1;
            }
            "add" | "mul" => {
                let table: &'static str = if head.text == "add" { "add" } else { "mul" };
                let slot = if table == "add" { &mut add } else { &mut mul };
                duplicate(slot.is_some())?;
                if let Some(extra) = args.first() {
                    return Err(syntax(
                        line.number,
                        extra.column,
                        "table rows must start on the next line",
                    ));
                }
                let labels = names.as_ref().ok_or_else(|| {
                    syntax(
                        line.number,
                        head.column,
                        "`elements` must precede the tables",
                    )
                })?;
                let n = labels.len();
                let rows = &lines[i + 1..(i + 1 + n).min(lines.len())];
                if rows.len() < n {
                    return Err(Error::Dimension {
                        table,
                        detail: format!(
                            "expected {n} rows, found {} before end of file",
                            rows.len()
                        ),
                    });
                }
                let mut parsed = Vec::with_capacity(n);
                for (r, row) in rows.iter().enumerate() {
                    if row.tokens.len() != n {
                        return Err(Error::Dimension {
                            table,
                            detail: format!(
                                "row `{}` (line {}) has {} entries, expected {n}",
                                labels[r],
                                row.number,
                                row.tokens.len()
                            ),
                        });
                    }
                    for t in &row.tokens {
                        if !labels.iter().any(|l| l == t.text) {
                            return Err(syntax(
                                row.number,
                                t.column,
                                format!("unknown label `{}`", t.text),
                            ));
                        }
                    }
                    parsed.push(row.tokens.iter().map(|t| t.text.to_string()).collect());
                }
                *slot = Some(parsed);
                i += 1 + n;
            }
            other => {
                return Err(syntax(
                    line.number,
                    head.column,
                    format!("unknown directive `{other}`"),
                ));
            }
        }
    }

    let names = names.ok_or(Error::MissingDirective("elements"))?;
    let zero = zero.ok_or(Error::MissingDirective("zero"))?;
    let one = one.ok_or(Error::MissingDirective("one"))?;
    let add = add.ok_or(Error::MissingDirective("add"))?;
    let mul = mul.ok_or(Error::MissingDirective("mul"))?;
    build_algebra(&names, &add, &mul, &zero, &one)
}

/// Serializes an algebra; `parse_algebra` of the output reproduces it exactly.
pub fn write_algebra(alg: &FiniteB1Algebra) -> String {
    let mut out = String::new();
    let names = alg.names();
    let _ = writeln!(out, "elements {}", names.join(" "));
    let _ = writeln!(out, "zero {}", alg.name(alg.zero()));
    let _ = writeln!(out, "one {}", alg.name(alg.one()));
    for (title, op) in [
        (
            "add",
            FiniteB1Algebra::add as fn(&FiniteB1Algebra, _, _) -> _,
        ),
        ("mul", FiniteB1Algebra::mul),
    ] {
        out.push_str(title);
        out.push('\n');
        for a in alg.elements() {
            let row: Vec<&str> = alg.elements().map(|b| alg.name(op(alg, a, b))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
