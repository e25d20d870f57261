//! graph6 encoding (McKay's ASCII format for undirected simple graphs).
//!
//! The upper triangle is packed column by column: `x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`, six bits per byte offset by 63. Only graphs on at most
//! 64 vertices can be decoded into [`Graph`].

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, MAX_VERTICES};

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
}

/// Encodes the upper-triangle bits, without the order prefix.
pub(crate) fn encode_body(n: usize, rows: &[u64], out: &mut Vec<u8>) {
    let mut acc = 0u8;
    let mut filled = 0;
    for (j, &col) in rows.iter().enumerate().take(n).skip(1) {
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
}

pub fn to_graph6_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    encode_body(n, g.rows(), &mut out);
    out
}

pub fn to_graph6(g: &Graph) -> String {
    // graph6 output is always printable ASCII
    String::from_utf8(to_graph6_bytes(g)).expect("graph6 is ASCII")
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 8-byte order field".into()));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 4-byte order field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::Graph6(format!(
            "order {n} unsupported (need 1..={MAX_VERTICES})"
        )));
    }
    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!(
            "expected {need} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = body[need - 1] - 63;
        if pad & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Graph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_bnm;
    use proptest::prelude::*;

    #[test]
    fn known_vectors() {
        // 5 vertices, edges 0-2 0-4 1-3 3-4
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        // hub 0 with triangles {1,2}, {3,4} and pendant 5, packed by hand:
        // 111100 100110 000(000) -> '{' 'e' '?'
        assert_eq!(to_graph6(&build_bnm(6, 3).unwrap()), "E{e?");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::empty(64).unwrap().add_edge(0, 63).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err()); // missing data
        assert!(from_graph6("DQcc").is_err()); // extra data
        assert!(from_graph6("B@").is_err()); // padding bit set: n=2 has 1 data bit
        assert!(from_graph6("D Qc").is_err());
        assert!(from_graph6("?").is_err()); // n = 0
    }

    #[test]
    fn header_and_whitespace() {
        assert_eq!(to_graph6(&from_graph6(">>graph6<<DQc\n").unwrap()), "DQc");
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=20, seed in any::<u64>()) {
            let mut rows = vec![0u64; n];
            let mut s = seed;
            for j in 1..n {
                for i in 0..j {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if s >> 63 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
            }
            let g = Graph::from_rows(rows).unwrap();
            let text = to_graph6(&g);
            prop_assert_eq!(&from_graph6(&text).unwrap(), &g);
            prop_assert_eq!(to_graph6(&from_graph6(&text).unwrap()), text);
        }
    }
}
