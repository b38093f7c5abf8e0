//! Text formats: `.hmat` matrices, `.graph` edge lists and `.roots` lists.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Line
//! numbers in errors are 1-based positions in the original text.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graphs::{EdgeRecord, GraphSpec, RecordKind};
use crate::interlace::RealRootedPoly;
use crate::matrix::HermitianMatrix;
use crate::scalar::{parse_rational, Field, Scalar};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, line)| (k + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

fn expect_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    what: &str,
    last_line: usize,
) -> Result<(usize, &'a str)> {
    lines
        .next()
        .ok_or_else(|| Error::parse(last_line, "", format!("missing {what}")))
}

/// Parses
///
/// ```text
/// hmat v1
/// field complex|q(-1)|q(-3)
/// n <dim>
/// <row 1>
/// ...
/// ```
///
/// with full rows of whitespace-separated entries.
pub fn parse_hmat(text: &str) -> Result<HermitianMatrix> {
    let total = text.lines().count().max(1);
    let mut lines = content_lines(text);

    let (line, header) = expect_line(&mut lines, "header `hmat v1`", total)?;
    if header.split_whitespace().collect::<Vec<_>>() != ["hmat", "v1"] {
        return Err(Error::parse(line, header, "expected `hmat v1`"));
    }

    let (line, field_line) = expect_line(&mut lines, "field line", total)?;
    let field = match field_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["field", name] => name
            .parse::<Field>()
            .map_err(|_| Error::parse(line, name, "unknown field"))?,
        _ => return Err(Error::parse(line, field_line, "expected `field <name>`")),
    };

    let (line, n_line) = expect_line(&mut lines, "dimension line", total)?;
    let n = match n_line.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| Error::parse(line, count, "dimension must be a nonnegative integer"))?,
        _ => return Err(Error::parse(line, n_line, "expected `n <dim>`")),
    };

    let mut rows = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, row) = expect_line(&mut lines, "matrix row", total)?;
        let tokens: Vec<&str> = row.split_whitespace().collect();
        if tokens.len() != n {
            return Err(Error::parse(
                line,
                row,
                format!("expected {n} entries, found {}", tokens.len()),
            ));
        }
        let entries = tokens
            .iter()
            .map(|t| {
                Scalar::parse(t, field)
                    .ok_or_else(|| Error::parse(line, *t, format!("not a {field} scalar")))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(entries);
        row_lines.push(line);
    }
    if let Some((line, extra)) = lines.next() {
        return Err(Error::parse(line, extra, "unexpected content after the last row"));
    }

    HermitianMatrix::from_rows(field, rows).map_err(|e| match e {
        Error::NotHermitian { row, col } => Error::parse(
            row_lines[row],
            format!("({row}, {col})"),
            "entry is not the conjugate of its transpose",
        ),
        Error::NonRealDiagonal { index } => {
            Error::parse(row_lines[index], format!("({index}, {index})"), "diagonal entry is not real")
        }
        other => other,
    })
}

pub fn write_hmat(a: &HermitianMatrix) -> String {
    let mut out = format!("hmat v1\nfield {}\nn {}\n", a.field(), a.n());
    for row in a.rows_as_strings() {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses
///
/// ```text
/// graph v1 n=<count>
/// edge U V [weight=W] [sign=+|-]
/// arc U V [weight=W]
/// digon U V [weight=W]
/// ```
pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    let total = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (line, header) = expect_line(&mut lines, "header `graph v1 n=<count>`", total)?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["graph", "v1", count] => count
            .strip_prefix("n=")
            .and_then(|c| c.parse::<usize>().ok())
            .ok_or_else(|| Error::parse(line, count, "expected `n=<count>`"))?,
        _ => return Err(Error::parse(line, header, "expected `graph v1 n=<count>`")),
    };

    let mut records = Vec::new();
    let mut record_lines = Vec::new();
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let kind = match tokens[0] {
            "edge" => RecordKind::Edge,
            "arc" => RecordKind::Arc,
            "digon" => RecordKind::Digon,
            other => return Err(Error::parse(line, other, "expected edge, arc or digon")),
        };
        if tokens.len() < 3 {
            return Err(Error::parse(line, text, "expected two vertex indices"));
        }
        let vertex = |t: &str| {
            t.parse::<usize>()
                .ok()
                .filter(|&v| v < n)
                .ok_or_else(|| Error::parse(line, t, format!("not a vertex index below {n}")))
        };
        let mut record = EdgeRecord { kind, u: vertex(tokens[1])?, v: vertex(tokens[2])?, ..EdgeRecord::edge(0, 0) };
        let (mut seen_weight, mut seen_sign) = (false, false);
        for &option in &tokens[3..] {
            if let Some(w) = option.strip_prefix("weight=") {
                if seen_weight {
                    return Err(Error::parse(line, option, "weight given twice"));
                }
                seen_weight = true;
                record.weight = parse_rational(w)
                    .ok_or_else(|| Error::parse(line, option, "weight must be a rational or decimal"))?;
            } else if let Some(s) = option.strip_prefix("sign=") {
                if seen_sign || kind != RecordKind::Edge {
                    return Err(Error::parse(line, option, "sign is allowed once, on edges only"));
                }
                seen_sign = true;
                record.sign = match s {
                    "+" | "+1" => 1,
                    "-" | "-1" => -1,
                    _ => return Err(Error::parse(line, option, "sign must be + or -")),
                };
            } else {
                return Err(Error::parse(line, option, "unknown option"));
            }
        }
        records.push(record);
        record_lines.push((line, text));
    }
    GraphSpec::new(n, records).map_err(|e| match e {
        Error::InvalidGraph(message) => {
            // messages start with `record <k>:`
            let k = message
                .strip_prefix("record ")
                .and_then(|rest| rest.split(':').next())
                .and_then(|k| k.parse::<usize>().ok());
            match k {
                Some(k) => Error::parse(record_lines[k].0, record_lines[k].1, message),
                None => Error::InvalidGraph(message),
            }
        }
        other => other,
    })
}

pub fn write_graph(g: &GraphSpec) -> String {
    let mut out = format!("graph v1 n={}\n", g.n());
    for r in g.records() {
        write!(out, "{} {} {}", r.kind, r.u, r.v).unwrap();
        if r.weight != num_traits::One::one() {
            write!(out, " weight={}", r.weight).unwrap();
        }
        if r.sign == -1 {
            out.push_str(" sign=-");
        }
        out.push('\n');
    }
    out
}

/// Parses root lists, one per line, either as a JSON array (`[3, 1]`) or as
/// whitespace-separated numbers. Each list must be nonincreasing.
pub fn parse_roots(text: &str) -> Result<Vec<RealRootedPoly>> {
    content_lines(text)
        .map(|(line, body)| {
            let values: Vec<f64> = if body.starts_with('[') {
                serde_json::from_str(body).map_err(|e| Error::parse(line, body, e.to_string()))?
            } else {
                body.split_whitespace()
                    .map(|t| {
                        t.parse::<f64>()
                            .ok()
                            .filter(|x| x.is_finite())
                            .ok_or_else(|| Error::parse(line, t, "not a finite number"))
                    })
                    .collect::<Result<_>>()?
            };
            RealRootedPoly::from_descending(values).map_err(|e| Error::parse(line, body, e.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, QuadExt};

    #[test]
    fn hmat_round_trip() {
        let text = "hmat v1\nfield q(-3)\nn 2\n0 1/2+1/2*s\n1/2-1/2*s 0\n";
        let a = parse_hmat(text).unwrap();
        assert_eq!(a.get(0, 1), Scalar::Quad(QuadExt::omega()));
        assert_eq!(parse_hmat(&write_hmat(&a)).unwrap(), a);

        let c = parse_hmat("# comment\nhmat v1\nfield complex\nn 2\n1 2-1i\n2+1i -3\n").unwrap();
        assert_eq!(parse_hmat(&write_hmat(&c)).unwrap(), c);
    }

    #[test]
    fn hmat_errors_name_line_and_token() {
        let asymmetric = "hmat v1\nfield q(-1)\nn 2\n1 2\n3 1\n";
        assert!(matches!(parse_hmat(asymmetric), Err(Error::Parse { line: 5, .. })));
        let bad_token = "hmat v1\nfield complex\nn 1\nfoo\n";
        match parse_hmat(bad_token) {
            Err(Error::Parse { line, token, .. }) => assert_eq!((line, token.as_str()), (4, "foo")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_hmat("hmat v2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_hmat("hmat v1\nfield complex\nn 2\n1 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_hmat("hmat v1\nfield complex\nn 1\n1i\n"),
            Err(Error::Parse { line: 4, .. })
        ));
    }

    #[test]
    fn graph_round_trip() {
        let text = "graph v1 n=4\nedge 0 1 weight=3/2 sign=-\narc 1 2\ndigon 2 3 weight=0.5\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.records()[0], EdgeRecord::edge(0, 1).with_weight(rational(3, 2)).with_sign(-1));
        assert_eq!(g.records()[2].weight, rational(1, 2));
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn graph_errors() {
        for (text, line) in [
            ("graph v1 n=2\nedge 0 2\n", 2),
            ("graph v1 n=2\nedge 0 1\nedge 1 0\n", 3),
            ("graph v1 n=2\nloop 0 1\n", 2),
            ("graph v1 n=2\narc 0 1 sign=-\n", 2),
            ("graph v1 n=2\nedge 0 1 weight=x\n", 2),
            ("graph v1 n=2\nedge 0 1 weight=0\n", 2),
            ("graph v1\n", 1),
        ] {
            match parse_graph(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn roots_lists() {
        let lists = parse_roots("[3, 1]\n2 0\n\n[]\n").unwrap();
        assert_eq!(lists.len(), 3);
        assert_eq!(lists[1].roots(), &[2.0, 0.0]);
        assert_eq!(lists[2].degree(), 0);
        assert!(matches!(parse_roots("1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_roots("1 x\n"), Err(Error::Parse { line: 1, .. })));
    }
}
