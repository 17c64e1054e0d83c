//! graph6 encoding of labeled graphs (McKay's format), bit-exact for n <= 64.
//!
//! The upper triangle is written column by column: `(0,1), (0,2), (1,2),
//! (0,3), ...`, six bits per byte, each byte offset by 63. No canonical
//! relabelling is performed.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // n <= 64 here; the 4-byte form covers up to 258047
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. A single trailing `\n` (or `\r\n`) and the
/// optional `>>graph6<<` header are accepted; anything else is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(text);
    let base = if line.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &line.as_bytes()[base..];

    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + k, format!("byte 0x{b:02x} outside the graph6 range 63..=126")));
        }
    }
    let (n, header_len) = decode_order(bytes, base)?;
    if n > MAX_VERTICES {
        return Err(err(base, format!("order {n} exceeds the supported maximum of {MAX_VERTICES}")));
    }

    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < body_len {
        return Err(err(
            base + bytes.len(),
            format!("truncated edge field: expected {body_len} bytes, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(err(base + header_len + body_len, "trailing bytes after edge field"));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    if pairs % 6 != 0 {
        let last = body[body_len - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + header_len + body_len - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let sixes = |from: usize, count: usize| -> Result<usize> {
        if bytes.len() < from + count {
            return Err(err(base + bytes.len(), "truncated order header"));
        }
        Ok(bytes[from..from + count]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63)))
    };
    match bytes.first() {
        None => Err(err(base, "empty input")),
        Some(&b'~') => {
            if bytes.get(1) == Some(&b'~') {
                Ok((sixes(2, 6)?, 8))
            } else {
                Ok((sixes(1, 3)?, 4))
            }
        }
        Some(&b) => Ok((usize::from(b - 63), 1)),
    }
}

/// Parses a multi-line graph6 corpus, skipping blank lines.
/// Errors carry the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> std::result::Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| parse_graph6(l.trim_end()).map_err(|e| (k + 1, e)))
        .collect()
}

/// Graphs serialize as their graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn k2_and_small_orders() {
        assert_eq!(encode_graph6(&named::complete(2)), "A_");
        assert_eq!(encode_graph6(&Graph::empty(3)), "B?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!(k2.order(), 2);
        assert!(k2.has_edge(0, 1));
        let one = parse_graph6("@").unwrap();
        assert_eq!(one.order(), 1);
        assert_eq!(one.edge_count(), 0);
    }

    #[test]
    fn d_question_brace_is_star_on_five() {
        // 'D' = 5 vertices, bits 0000001111: vertex 4 joined to 0..3
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode_graph6(&g), "D?{");
    }

    #[test]
    fn known_nauty_strings() {
        let c5 = named::cycle(5);
        assert_eq!(encode_graph6(&c5), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), c5);
        assert_eq!(encode_graph6(&named::complete(4)), "C~");
    }

    #[test]
    fn long_header_for_large_orders() {
        let g = named::cycle(63);
        let text = encode_graph6(&g);
        assert!(text.starts_with("~??~"));
        assert_eq!(parse_graph6(&text).unwrap(), g);
        let g = named::path(64);
        assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), named::complete(2));
        assert_eq!(parse_graph6("A_\r\n").unwrap(), named::complete(2));
    }

    #[test]
    fn malformed_inputs_name_offsets() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
        // 5 vertices need 2 body bytes
        assert!(matches!(parse_graph6("D?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("A_?"), Err(Error::Graph6 { offset: 2, .. })));
        assert!(matches!(parse_graph6("A_ "), Err(Error::Graph6 { offset: 2, .. })));
        // padding bit set: 'A' + 0b100001
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { .. })));
        // 65 vertices
        assert!(matches!(parse_graph6("~?@@"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn corpus_reports_line_numbers() {
        let text = "A_\n\nB?\nzz\n";
        let (line, _) = parse_graph6_lines(text).unwrap_err();
        assert_eq!(line, 4);
        assert_eq!(parse_graph6_lines("A_\nB?\n").unwrap().len(), 2);
    }
}
