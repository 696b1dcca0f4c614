//! Plain-text Cayley tables.
//!
//! ```text
//! # U2
//! size 2
//! identity 1
//! zero e
//! 1: 1 e
//! e: e e
//! ```
//!
//! Rows give the carrier in order; the entry in row `x`, column `y` is `xy`.
//! Labels may not contain whitespace, `:` or `#`.

use std::collections::HashMap;

use coact_core::monoid::Violation;
use coact_core::FiniteMonoid;

use crate::error::{CliError, Result};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str, offset: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..i],
                    column: offset + line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

struct Row<'a> {
    line: usize,
    head: Token<'a>,
    entries: Vec<Token<'a>>,
}

/// Parses a table and validates the monoid laws. Carriers larger than `cap`
/// are rejected before any table is built.
pub fn parse_table(text: &str, cap: usize) -> Result<FiniteMonoid> {
    let mut size: Option<(usize, usize)> = None;
    let mut identity: Option<(usize, Token)> = None;
    let mut zero: Option<(usize, Token)> = None;
    let mut rows: Vec<Row> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        if let Some(colon) = body.find(':') {
            let head = tokens(&body[..colon], 0);
            if head.len() != 1 {
                let column = head.get(1).map_or(colon + 1, |t| t.column);
                return Err(CliError::parse(
                    line_no,
                    column,
                    "a row starts with exactly one label before `:`",
                ));
            }
            let offset = body[..=colon].chars().count();
            let head = head.into_iter().next().unwrap();
            rows.push(Row {
                line: line_no,
                head,
                entries: tokens(&body[colon + 1..], offset),
            });
            continue;
        }
        let toks = tokens(body, 0);
        let directive = &toks[0];
        if toks.len() != 2 {
            let column = toks.get(2).map_or(body.chars().count() + 1, |t| t.column);
            return Err(CliError::parse(
                line_no,
                column,
                format!("`{}` takes exactly one argument", directive.text),
            ));
        }
        let arg = Token {
            text: toks[1].text,
            column: toks[1].column,
        };
        let seen = match directive.text {
            "size" => {
                let n = arg
                    .text
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| CliError::parse(line_no, arg.column, "size must be a positive integer"))?;
                if n > cap {
                    return Err(coact_core::Error::TooLarge { size: n, cap }.into());
                }
                size.replace((n, line_no)).is_some()
            }
            "identity" => identity.replace((line_no, arg)).is_some(),
            "zero" => zero.replace((line_no, arg)).is_some(),
            other => {
                return Err(CliError::parse(
                    line_no,
                    directive.column,
                    format!("unknown directive `{other}`; expected size, identity, zero or a row `label: ...`"),
                ))
            }
        };
        if seen {
            return Err(CliError::parse(
                line_no,
                directive.column,
                format!("`{}` given twice", directive.text),
            ));
        }
    }

    let (n, size_line) = size.ok_or_else(|| CliError::parse(1, 1, "missing `size` line"))?;
    if rows.len() != n {
        let (line, column) = rows
            .get(n)
            .map_or((last_line.max(size_line), 1), |r| (r.line, r.head.column));
        return Err(CliError::parse(
            line,
            column,
            format!(
                "size {n} declared on line {size_line} but {} rows given",
                rows.len()
            ),
        ));
    }
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, row) in rows.iter().enumerate() {
        if index.insert(row.head.text, i).is_some() {
            return Err(CliError::parse(
                row.line,
                row.head.column,
                format!("label `{}` used for two rows", row.head.text),
            ));
        }
    }
    let lookup = |line: usize, t: &Token| -> Result<usize> {
        index
            .get(t.text)
            .copied()
            .ok_or_else(|| CliError::parse(line, t.column, format!("unknown label `{}`", t.text)))
    };
    let mut table = Vec::with_capacity(n);
    for row in &rows {
        if row.entries.len() != n {
            let column = row.entries.get(n).map_or(
                row.entries
                    .last()
                    .map_or(row.head.column, |t| t.column + t.text.chars().count()),
                |t| t.column,
            );
            return Err(CliError::parse(
                row.line,
                column,
                format!(
                    "row `{}` has {} entries, expected {n}",
                    row.head.text,
                    row.entries.len()
                ),
            ));
        }
        table.push(
            row.entries
                .iter()
                .map(|t| lookup(row.line, t))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    let (id_line, id_tok) =
        identity.ok_or_else(|| CliError::parse(size_line, 1, "missing `identity` line"))?;
    let one = lookup(id_line, &id_tok)?;
    let zero = zero.map(|(line, t)| lookup(line, &t)).transpose()?;
    let labels = rows.iter().map(|r| r.head.text.to_string()).collect();
    let m = FiniteMonoid::unchecked(table, one, zero, Some(labels))?;
    m.validate()
        .map_err(|v| CliError::Invalid(describe_violation(&m, &v)))?;
    Ok(m)
}

/// A violation written with element labels.
pub fn describe_violation(m: &FiniteMonoid, v: &Violation) -> String {
    let l = |x: usize| m.label(x);
    match *v {
        Violation::Associativity { a, b, c } => format!(
            "not associative at ({}, {}, {}): ({}{})·{} = {} but {}·({}{}) = {}",
            l(a),
            l(b),
            l(c),
            l(a),
            l(b),
            l(c),
            l(m.mul(m.mul(a, b), c)),
            l(a),
            l(b),
            l(c),
            l(m.mul(a, m.mul(b, c)))
        ),
        Violation::LeftIdentity { a } => {
            format!("identity {} fails on the left of {}", l(m.identity()), l(a))
        }
        Violation::RightIdentity { a } => format!(
            "identity {} fails on the right of {}",
            l(m.identity()),
            l(a)
        ),
        Violation::Zero { a } => format!(
            "declared zero {} does not absorb {}",
            l(m.zero().expect("zero declared")),
            l(a)
        ),
    }
}

/// Writes `m` in the format read by [`parse_table`].
pub fn emit_table(m: &FiniteMonoid) -> String {
    let mut out = format!("size {}\nidentity {}\n", m.size(), m.label(m.identity()));
    if let Some(z) = m.zero() {
        out.push_str(&format!("zero {}\n", m.label(z)));
    }
    for (x, row) in m.rows().iter().enumerate() {
        out.push_str(m.label(x));
        out.push(':');
        for &y in row {
            out.push(' ');
            out.push_str(m.label(y));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::*;

    const U2: &str = "# U2\nsize 2\nidentity 1\nzero e\n1: 1 e\ne: e e\n";

    #[test]
    fn reads_u2() {
        let m = parse_table(U2, 100).unwrap();
        assert_eq!(m.size(), 2);
        assert_eq!(m.zero(), Some(1));
        assert_eq!(m.rows(), u2().rows());
    }

    #[test]
    fn round_trips_builtins() {
        for m in [
            trivial(),
            z3(),
            u2(),
            nilpotent(),
            symmetric_inverse(2),
            full_transformation(3),
        ] {
            assert_eq!(parse_table(&emit_table(&m), 5000).unwrap(), m);
        }
    }

    fn parse_err(text: &str) -> (usize, usize) {
        match parse_table(text, 100) {
            Err(CliError::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn short_row_points_past_the_last_entry() {
        assert_eq!(parse_err("size 2\nidentity 1\n1: 1 e\ne: e\n"), (4, 5));
    }

    #[test]
    fn unknown_entry_is_located() {
        assert_eq!(parse_err("size 2\nidentity 1\n1: 1 e\ne: e  x\n"), (4, 7));
    }

    #[test]
    fn unknown_directive_and_missing_size() {
        assert_eq!(parse_err("sise 2\n"), (1, 1));
        assert_eq!(parse_err("identity 1\n1: 1\n"), (1, 1));
        assert_eq!(parse_err("size 1\nsize 1\n"), (2, 1));
    }

    #[test]
    fn violations_name_labels() {
        let bad = "size 2\nidentity 1\n1: 1 a\na: a 1\n";
        assert!(parse_table(bad, 10).is_ok());
        let bad = "size 2\nidentity 1\nzero 1\n1: 1 a\na: a 1\n";
        let err = parse_table(bad, 10).unwrap_err().to_string();
        assert!(err.contains("does not absorb"), "{err}");
        let bad = "size 3\nidentity 1\n1: 1 a b\na: a b b\nb: b a a\n";
        let err = parse_table(bad, 10).unwrap_err().to_string();
        assert!(err.contains("not associative"), "{err}");
    }

    #[test]
    fn cap_applies_before_parsing_rows() {
        assert!(matches!(
            parse_table("size 9\n", 8),
            Err(CliError::Core(coact_core::Error::TooLarge {
                size: 9,
                cap: 8
            }))
        ));
    }
}
