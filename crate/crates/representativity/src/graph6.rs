//! graph6 ingestion and emission (McKay convention, no header line).
//! Only the one-byte size prefix is supported, i.e. graphs on at most 62
//! vertices; corpora are newline-separated graph6 lines.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph the encoder/decoder handles (one-byte size prefix).
pub const GRAPH6_MAX_N: usize = 62;

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    // graph6 upper-triangle order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

/// Decodes one graph6 line. Errors name the byte offset of the offending input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { offset: 0, reason: "empty input".into() });
    }
    if bytes[0] == b'~' {
        // Multi-byte size prefix means n >= 63, beyond this implementation.
        return Err(Error::UnsupportedSize { n: 63, limit: GRAPH6_MAX_N });
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::Graph6 {
            offset: 0,
            reason: format!("invalid size character {:?}", bytes[0] as char),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let needed = bit_count.div_ceil(6);
    if bytes.len() < 1 + needed {
        return Err(Error::Graph6 {
            offset: bytes.len(),
            reason: format!("truncated: need {} edge bytes for n={}", needed, n),
        });
    }
    if bytes.len() > 1 + needed {
        return Err(Error::Graph6 {
            offset: 1 + needed,
            reason: "trailing garbage after encoded graph".into(),
        });
    }
    let mut g = Graph::edgeless(n);
    let mut bit = 0usize;
    let mut pair_iter = pairs(n);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                offset: 1 + i,
                reason: format!("byte {:?} outside the graph6 alphabet", b as char),
            });
        }
        let value = b - 63;
        for k in (0..6).rev() {
            let set = value >> k & 1 == 1;
            if bit < bit_count {
                let (u, v) = pair_iter.next().unwrap();
                if set {
                    g.add_edge(u, v);
                }
            } else if set {
                return Err(Error::Graph6 {
                    offset: 1 + i,
                    reason: "nonzero padding bits".into(),
                });
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Minimal-length graph6 encoding; inverse of [`parse_graph6`].
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::UnsupportedSize { n, limit: GRAPH6_MAX_N });
    }
    let mut out = vec![63 + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for (u, v) in pairs(n) {
        acc = acc << 1 | g.has_edge(u, v) as u8;
        filled += 1;
        if filled == 6 {
            out.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).unwrap())
}

/// A corpus file parsed line by line; bad lines are recorded, not fatal.
#[derive(Debug, Default)]
pub struct CorpusLoad {
    pub graphs: Vec<Graph>,
    /// One entry per rejected line: "line L: <error>".
    pub errors: Vec<String>,
}

pub fn parse_corpus(text: &str) -> CorpusLoad {
    let mut load = CorpusLoad::default();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match parse_graph6(line) {
            Ok(g) => load.graphs.push(g),
            Err(e) => load.errors.push(format!("line {}: {}", i + 1, e)),
        }
    }
    load
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, VertexSet};

    #[test]
    fn hand_encoded_examples() {
        // Hand-derived from the bit layout: n prefix, then the upper triangle
        // in column order packed big-endian six bits per byte.
        assert_eq!(to_graph6(&Graph::edgeless(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(to_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(to_graph6(&Graph::path(3)).unwrap(), "Bg");

        assert_eq!(parse_graph6("@").unwrap(), Graph::edgeless(1));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("Bw").unwrap(), Graph::complete(3));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match parse_graph6("B") {
            Err(crate::error::Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected truncation error, got {other:?}"),
        }
        match parse_graph6("A_x") {
            Err(crate::error::Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("expected trailing-garbage error, got {other:?}"),
        }
        match parse_graph6("A\n") {
            Err(crate::error::Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected alphabet error, got {other:?}"),
        }
        assert!(matches!(
            parse_graph6("~??"),
            Err(crate::error::Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn oversized_graph_rejected_by_encoder() {
        let g = Graph::edgeless(63);
        assert!(matches!(to_graph6(&g), Err(crate::error::Error::UnsupportedSize { .. })));
    }

    #[test]
    fn round_trip_on_assorted_graphs() {
        for g in [
            Graph::petersen(),
            Graph::chair_d5(),
            Graph::complete(7),
            Graph::cycle(9).unwrap(),
            Graph::edgeless(4),
            Graph::complete(1),
        ] {
            let enc = to_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn corpus_parsing_continues_past_bad_lines() {
        let load = parse_corpus("Bw\n\nnot-graph6!\nA_\n");
        assert_eq!(load.graphs.len(), 2);
        assert_eq!(load.errors.len(), 1);
        assert!(load.errors[0].starts_with("line 3:"));
    }

    #[test]
    fn delete_all_is_empty_graph() {
        let g = Graph::complete(3);
        let (h, _) = g.delete_vertices(VertexSet::full(3)).unwrap();
        assert_eq!(to_graph6(&h).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }
}
