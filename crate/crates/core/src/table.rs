//! Table files for colorings and orders: one record per line,
//! `⌜tuple⌝ <space> value`, naturals in decimal.

use crate::coloring::Coloring;
use crate::tournament::Tournament;
use crate::tuple::{decode_tuple, encode_tuple, Tuple};
use std::collections::BTreeMap;
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("line {line}: expected `code value`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {err}")]
    BadNumber {
        line: usize,
        err: std::num::ParseIntError,
    },
    #[error("line {line}: tuple {tuple} has length {got}, table arity is {want}")]
    ArityMismatch {
        line: usize,
        tuple: Tuple,
        got: usize,
        want: usize,
    },
    #[error("queried tuple {0} is missing from the table")]
    Missing(Tuple),
}

/// A coloring backed by an explicit finite table.
pub struct TableColoring {
    arity: usize,
    map: BTreeMap<u64, u64>,
}

impl TableColoring {
    pub fn parse(text: &str, arity: usize) -> Result<Self, TableError> {
        let mut map = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let mut it = t.split_whitespace();
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(TableError::Malformed {
                        line,
                        text: t.to_string(),
                    })
                }
            };
            let code: u64 = a.parse().map_err(|err| TableError::BadNumber { line, err })?;
            let value: u64 = b.parse().map_err(|err| TableError::BadNumber { line, err })?;
            let tuple = decode_tuple(code);
            if tuple.len() != arity {
                return Err(TableError::ArityMismatch {
                    line,
                    got: tuple.len(),
                    want: arity,
                    tuple,
                });
            }
            map.insert(code, value);
        }
        Ok(TableColoring { arity, map })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (code, value) in &self.map {
            out.push_str(&format!("{code} {value}\n"));
        }
        out
    }

    pub fn get(&self, t: &Tuple) -> Result<u64, TableError> {
        self.map
            .get(&encode_tuple(t))
            .copied()
            .ok_or_else(|| TableError::Missing(t.clone()))
    }

    /// A pair table read as a tournament: for `x < y`, value 1 puts
    /// `x R y` and value 0 puts `y R x`. Queries off the table panic,
    /// so callers restrict themselves to the tabulated support.
    pub fn into_tournament(self) -> Tournament {
        assert_eq!(self.arity, 2);
        let me = Rc::new(self);
        Tournament::from_coloring(
            "table",
            Rc::new(move |x, y| {
                me.get(&Tuple::from_slice(&[x, y]))
                    .expect("tournament query off the tabulated support") as u8
            }),
        )
    }
}

impl Coloring for TableColoring {
    fn arity(&self) -> usize {
        self.arity
    }
    fn color(&self, t: &Tuple) -> u64 {
        self.get(t).expect("coloring query off the tabulated support")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::subsets;
    use crate::tournament::is_transitive;

    #[test]
    fn roundtrip_and_query() {
        let mut text = String::new();
        for s in subsets(&[0, 1, 2, 3, 4], 2) {
            text.push_str(&format!("{} {}\n", encode_tuple(&s), s.elements()[0] + 1));
        }
        let table = TableColoring::parse(&text, 2).unwrap();
        assert_eq!(table.get(&Tuple::from_slice(&[1, 4])).unwrap(), 2);
        let reparsed = TableColoring::parse(&table.render(), 2).unwrap();
        assert_eq!(reparsed.render(), table.render());
    }

    #[test]
    fn rejects_malformed_and_wrong_arity() {
        assert!(matches!(
            TableColoring::parse("1 2 3\n", 2),
            Err(TableError::Malformed { line: 1, .. })
        ));
        let code1 = encode_tuple(&Tuple::singleton(4));
        assert!(matches!(
            TableColoring::parse(&format!("{code1} 0\n"), 2),
            Err(TableError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn order_table_as_tournament() {
        // tabulate the usual order on 0..6 as a pair coloring
        let mut text = String::new();
        for s in subsets(&[0, 1, 2, 3, 4, 5], 2) {
            text.push_str(&format!("{} 1\n", encode_tuple(&s)));
        }
        let r = TableColoring::parse(&text, 2).unwrap().into_tournament();
        assert!(r.beats(2, 5) && !r.beats(5, 2));
        assert!(is_transitive(&r, &Tuple::from_slice(&[0, 2, 3, 5])));
    }
}
