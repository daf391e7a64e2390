//! Plain-text ring tables.
//!
//! Line 1 holds `N`; the next `N` lines are the addition table, the `N` after
//! that the multiplication table. Element 0 is the additive identity and
//! element 1 the multiplicative identity.

use super::{Elem, FiniteRing, RingSpec, MAX_RING_ORDER};
use crate::error::{Result, RingError};

pub(crate) fn read_table(path: &str, spec: RingSpec) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path).map_err(|e| RingError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    parse_table(&text, spec)
}

pub(crate) fn parse_table(text: &str, spec: RingSpec) -> Result<FiniteRing> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let bad = |line: usize, message: String| RingError::TableFormat { line, message };

    let (line, first) = lines
        .next()
        .ok_or_else(|| bad(1, "empty table file".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| bad(line, format!("expected the ring order, found {first:?}")))?;
    if n < 2 {
        return Err(bad(line, format!("order {n} is below 2")));
    }
    if n > MAX_RING_ORDER {
        return Err(RingError::OrderTooLarge {
            what: "table ring",
            order: n,
            bound: MAX_RING_ORDER,
        });
    }
    let mut read_block = |name: &str| -> Result<Vec<u32>> {
        let mut out = Vec::with_capacity(n * n);
        for row in 0..n {
            let (line, text) = lines
                .next()
                .ok_or_else(|| bad(0, format!("{name} table has only {row} rows")))?;
            let before = out.len();
            for tok in text.split_whitespace() {
                let v: u32 = tok
                    .parse()
                    .map_err(|_| bad(line, format!("not an element index: {tok:?}")))?;
                if v as usize >= n {
                    return Err(bad(line, format!("index {v} out of range")));
                }
                out.push(v);
            }
            if out.len() - before != n {
                return Err(bad(
                    line,
                    format!(
                        "{name} row has {} entries, expected {n}",
                        out.len() - before
                    ),
                ));
            }
        }
        Ok(out)
    };
    let add = read_block("addition")?;
    let mul = read_block("multiplication")?;
    if let Some((line, _)) = lines.next() {
        return Err(bad(
            line,
            "trailing data after the multiplication table".into(),
        ));
    }
    FiniteRing::from_tables(add, mul, Elem(0), Elem(1), spec, None)
}
