//! graph6 and DIMACS edge-list encoders and decoders.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6: byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graph6: input ended early")]
    Truncated,
    #[error("graph6: {0} trailing bytes")]
    Trailing(usize),
    #[error("dimacs line {line}: {message}")]
    Dimacs { line: usize, message: String },
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let mut data = Vec::with_capacity(bytes.len());
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadByte(b));
        }
        data.push(b - 63);
    }
    let (n, mut pos) = match data.as_slice() {
        [] => return Err(FormatError::Truncated),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(FormatError::Truncated);
            }
            (rest[..6].iter().fold(0usize, |a, &d| (a << 6) | d as usize), 8)
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(FormatError::Truncated);
            }
            (rest[..3].iter().fold(0usize, |a, &d| (a << 6) | d as usize), 4)
        }
        [d, ..] => (*d as usize, 1),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if data.len() < pos + needed {
        return Err(FormatError::Truncated);
    }
    if data.len() > pos + needed {
        return Err(FormatError::Trailing(data.len() - pos - needed));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[pos + k / 6];
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    pos += needed;
    debug_assert_eq!(pos, data.len());
    Ok(g)
}

/// DIMACS edge format: a `p edge V E` line, then `e u v` with 1-based
/// vertices, edges in lexicographic order.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn from_dimacs(s: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, message: &str| FormatError::Dimacs {
        line,
        message: message.to_string(),
    };
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = 0;
    for (i, raw) in s.lines().enumerate() {
        let line = i + 1;
        let mut parts = raw.split_whitespace();
        match parts.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err(line, "second problem line"));
                }
                if parts.next() != Some("edge") {
                    return Err(err(line, "expected `p edge V E`"));
                }
                let v: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line, "bad vertex count"))?;
                let e: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line, "bad edge count"))?;
                graph = Some((Graph::empty(v), e));
            }
            Some("e") => {
                let (g, _) = graph.as_mut().ok_or_else(|| err(line, "edge before problem line"))?;
                let mut endpoint = || -> Result<usize, FormatError> {
                    let x: usize = parts
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err(line, "bad endpoint"))?;
                    if x == 0 || x > g.order() {
                        return Err(err(line, "endpoint out of range"));
                    }
                    Ok(x - 1)
                };
                let (a, b) = (endpoint()?, endpoint()?);
                if a == b {
                    return Err(err(line, "loop"));
                }
                g.link(a, b);
                seen += 1;
            }
            Some(other) => return Err(err(line, &format!("unknown line type `{other}`"))),
        }
    }
    let (g, declared) = graph.ok_or_else(|| err(0, "missing problem line"))?;
    if seen != declared {
        return Err(err(0, &format!("declared {declared} edges, found {seen}")));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        // Reference encodings from the format description.
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::path(2)), "A_");
        let pentagon = Graph::cycle(5);
        assert_eq!(to_graph6(&pentagon), "Dhc");
        let petersen = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.order(), 10);
        assert_eq!(petersen.edge_count(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::cycle(100);
        let s = to_graph6(&g);
        assert_eq!(&s[..4], "~?@c");
        assert_eq!(from_graph6(&s).unwrap().rows(), g.rows());
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(from_graph6(""), Err(FormatError::Truncated));
        assert_eq!(from_graph6("C"), Err(FormatError::Truncated));
        assert_eq!(from_graph6("C~~"), Err(FormatError::Trailing(1)));
        assert_eq!(from_graph6("C\u{1}"), Err(FormatError::BadByte(1)));
    }

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::cycle(4);
        let s = to_dimacs(&g);
        assert_eq!(s, "p edge 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n");
        assert_eq!(from_dimacs(&format!("c hello\n{s}")).unwrap().rows(), g.rows());
        assert!(from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(from_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(from_dimacs("e 1 2\n").is_err());
    }
}
