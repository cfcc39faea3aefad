//! LR-tableaux with all entries equal to 1, stored as the pair of shapes
//! `(gamma, beta)`, and their extension by a free counter.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{parse_at, Partition, DEFAULT_PART_LIMIT};

/// A skew shape `beta / gamma` that is a horizontal strip, every box
/// holding the entry 1.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LrTableau {
    beta: Partition,
    gamma: Partition,
}

/// Drawing conventions for [`LrTableau::render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Row `i` has `gamma_i` inner boxes followed by the entry, if any.
    Definition,
    /// Conjugate shapes: columns drawn as rows.
    Conjugate,
}

impl LrTableau {
    /// The empty tableau.
    pub fn empty() -> Self {
        LrTableau::default()
    }

    /// Validates `gamma ⊆ beta` and `gamma_i <= beta_i <= gamma_i + 1`.
    pub fn new(gamma: Partition, beta: Partition) -> Result<Self> {
        if !beta.contains(&gamma) {
            return Err(Error::NotContained {
                gamma: gamma.to_string(),
                beta: beta.to_string(),
            });
        }
        if let Some(i) = (0..beta.len()).find(|&i| beta.part(i) > gamma.part(i) + 1) {
            return Err(Error::NotHorizontalStrip {
                row: i + 1,
                beta_i: beta.part(i),
                bound: gamma.part(i) + 1,
            });
        }
        Ok(LrTableau { beta, gamma })
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn is_empty(&self) -> bool {
        self.beta.is_empty()
    }

    /// Number of rows of the outer shape.
    pub fn rows(&self) -> usize {
        self.beta.len()
    }

    /// Whether row `i` (0-indexed) carries an entry.
    pub fn has_entry(&self, i: usize) -> bool {
        self.beta.part(i) == self.gamma.part(i) + 1
    }

    /// 1-based rows carrying an entry 1.
    pub fn entry_rows(&self) -> Vec<usize> {
        (0..self.rows())
            .filter(|&i| self.has_entry(i))
            .map(|i| i + 1)
            .collect()
    }

    /// 1-based rows of the outer shape without an entry.
    pub fn empty_rows(&self) -> Vec<usize> {
        (0..self.rows())
            .filter(|&i| !self.has_entry(i))
            .map(|i| i + 1)
            .collect()
    }

    /// `|alpha|`, the number of entries.
    pub fn entry_count(&self) -> usize {
        (self.beta.weight() - self.gamma.weight()) as usize
    }

    /// ASCII drawing, `.` for inner boxes and `1` for entries, one row per line.
    pub fn render(&self, convention: Convention) -> String {
        let (outer, inner) = match convention {
            Convention::Definition => (self.beta.clone(), self.gamma.clone()),
            Convention::Conjugate => (self.beta.dual(), self.gamma.dual()),
        };
        let mut out = String::new();
        for i in 0..outer.len() {
            let dots = inner.part(i) as usize;
            let ones = (outer.part(i) - inner.part(i)) as usize;
            out.push_str(&".".repeat(dots));
            out.push_str(&"1".repeat(ones));
            out.push('\n');
        }
        out
    }

    /// All tableaux whose outer shape has weight `b`.
    pub fn all_of_weight(b: u32) -> Vec<LrTableau> {
        let mut out = Vec::new();
        for beta in Partition::all_of(b) {
            // each row independently keeps or drops its last box
            let rows = beta.len();
            for mask in 0u64..(1u64 << rows) {
                let gamma: Vec<u32> = (0..rows)
                    .map(|i| beta.part(i) - ((mask >> i) & 1) as u32)
                    .collect();
                if let Ok(gamma) = Partition::new(gamma) {
                    out.push(LrTableau {
                        beta: beta.clone(),
                        gamma,
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta={};gamma={}", self.beta, self.gamma)
    }
}

impl fmt::Debug for LrTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LrTableau[{self}]")
    }
}

/// An element of `LR_1 x N`: a tableau plus a free counter.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExtTableau {
    pub tab: LrTableau,
    pub free: u64,
}

impl ExtTableau {
    pub fn new(tab: LrTableau, free: u64) -> Self {
        ExtTableau { tab, free }
    }
}

impl From<LrTableau> for ExtTableau {
    fn from(tab: LrTableau) -> Self {
        ExtTableau { tab, free: 0 }
    }
}

impl fmt::Display for ExtTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};free={}", self.tab, self.free)
    }
}

impl fmt::Debug for ExtTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtTableau[{self}]")
    }
}

/// Result of parsing the serialized form: with or without `free=`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTableau {
    Plain(LrTableau),
    Ext(ExtTableau),
}

impl AnyTableau {
    pub fn is_ext(&self) -> bool {
        matches!(self, AnyTableau::Ext(_))
    }

    pub fn tab(&self) -> &LrTableau {
        match self {
            AnyTableau::Plain(t) => t,
            AnyTableau::Ext(e) => &e.tab,
        }
    }

    /// Promotes a plain tableau `t` to `(t, 0)`.
    pub fn into_ext(self) -> ExtTableau {
        match self {
            AnyTableau::Plain(t) => t.into(),
            AnyTableau::Ext(e) => e,
        }
    }
}

impl fmt::Display for AnyTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyTableau::Plain(t) => t.fmt(f),
            AnyTableau::Ext(e) => e.fmt(f),
        }
    }
}

/// Parses `beta=<partition>;gamma=<partition>[;free=<n>]`.
pub fn parse(text: &str) -> Result<AnyTableau> {
    let mut beta = None;
    let mut gamma = None;
    let mut free = None;
    let mut pos = 0;
    for field in text.split(';') {
        let lead = field.len() - field.trim_start().len();
        let Some(eq) = field.find('=') else {
            return Err(Error::Parse {
                pos: pos + lead,
                msg: format!("expected key=value, found {:?}", field.trim()),
            });
        };
        let key = field[..eq].trim();
        let value = &field[eq + 1..];
        let value_pos = pos + eq + 1;
        let duplicate = || Error::Parse {
            pos: pos + lead,
            msg: format!("duplicate key {key:?}"),
        };
        match key {
            "beta" => {
                if beta.is_some() {
                    return Err(duplicate());
                }
                beta = Some(parse_at(value, value_pos, DEFAULT_PART_LIMIT)?);
            }
            "gamma" => {
                if gamma.is_some() {
                    return Err(duplicate());
                }
                gamma = Some(parse_at(value, value_pos, DEFAULT_PART_LIMIT)?);
            }
            "free" => {
                if free.is_some() {
                    return Err(duplicate());
                }
                let v = value.trim();
                free = Some(v.parse::<u64>().map_err(|_| Error::Parse {
                    pos: value_pos + (value.len() - value.trim_start().len()),
                    msg: format!("expected a natural number, found {v:?}"),
                })?);
            }
            other => {
                return Err(Error::Parse {
                    pos: pos + lead,
                    msg: format!("unknown key {other:?}"),
                })
            }
        }
        pos += field.len() + 1;
    }
    let missing = |k: &str| Error::Parse {
        pos: text.len(),
        msg: format!("missing key {k:?}"),
    };
    let beta = beta.ok_or_else(|| missing("beta"))?;
    let gamma = gamma.ok_or_else(|| missing("gamma"))?;
    let tab = LrTableau::new(gamma, beta)?;
    Ok(match free {
        Some(free) => AnyTableau::Ext(ExtTableau { tab, free }),
        None => AnyTableau::Plain(tab),
    })
}

impl FromStr for AnyTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

impl FromStr for LrTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(parse(s)?.tab().clone())
    }
}

impl FromStr for ExtTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(parse(s)?.into_ext())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(beta: &[u32], gamma: &[u32]) -> LrTableau {
        LrTableau::new(
            Partition::new(gamma.to_vec()).unwrap(),
            Partition::new(beta.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn make_examples() {
        let x = tab(&[7, 7, 5, 2, 2, 1], &[7, 6, 4, 1, 1, 1]);
        assert_eq!(x.entry_count(), 4);
        assert!(tab(&[], &[]).is_empty());
        let err = LrTableau::new(Partition::new(vec![1]).unwrap(), Partition::new(vec![3]).unwrap());
        assert!(matches!(err, Err(Error::NotHorizontalStrip { row: 1, .. })));
        let err = LrTableau::new(Partition::new(vec![2]).unwrap(), Partition::new(vec![1]).unwrap());
        assert!(matches!(err, Err(Error::NotContained { .. })));
    }

    #[test]
    fn row_classification() {
        let x = tab(&[5, 4, 3, 3, 1], &[4, 4, 3, 2, 1]);
        assert_eq!(x.entry_rows(), vec![1, 4]);
        assert_eq!(x.empty_rows(), vec![2, 3, 5]);
        assert!(LrTableau::empty().entry_rows().is_empty());
        assert!(LrTableau::empty().empty_rows().is_empty());
        let x = tab(&[7, 7, 5, 2, 2, 1], &[7, 6, 4, 1, 1, 1]);
        assert_eq!(x.entry_rows(), vec![2, 3, 4, 5]);
        let p1 = tab(&[6], &[5]);
        assert!(p1.empty_rows().is_empty());
    }

    #[test]
    fn render_definition() {
        assert_eq!(tab(&[2, 1], &[1, 1]).render(Convention::Definition), ".1\n.\n");
        assert_eq!(LrTableau::empty().render(Convention::Definition), "");
        assert_eq!(LrTableau::empty().render(Convention::Conjugate), "");
    }

    #[test]
    fn render_conjugate_shapes() {
        let x = tab(&[7, 7, 5, 2, 2, 1], &[7, 6, 4, 1, 1, 1]);
        let drawn = x.render(Convention::Conjugate);
        let lines: Vec<&str> = drawn.lines().collect();
        let lens: Vec<usize> = lines.iter().map(|l| l.len()).collect();
        assert_eq!(lens, vec![6, 5, 3, 3, 3, 2, 2]);
        assert_eq!(lines, vec!["......", "...11", "...", "...", "..1", "..", ".1"]);
    }

    #[test]
    fn parse_examples() {
        let x: AnyTableau = "beta=5,4,3,3,1;gamma=4,4,2,2".parse().unwrap();
        assert_eq!(x, AnyTableau::Plain(tab(&[5, 4, 3, 3, 1], &[4, 4, 2, 2])));
        let e: AnyTableau = " beta = 0 ; gamma=0;free=1".parse().unwrap();
        assert_eq!(e, AnyTableau::Ext(ExtTableau::new(LrTableau::empty(), 1)));
        assert!(matches!(parse("beta=1;gamma=2"), Err(Error::NotContained { .. })));
        assert!(matches!(parse("beta=1"), Err(Error::Parse { .. })));
        assert!(matches!(parse("beta=1;gamma=1;beta=1"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse("beta=1;delta=1"),
            Err(Error::Parse { pos: 7, .. })
        ));
        assert!(matches!(
            parse("beta=2,x;gamma=1"),
            Err(Error::Parse { pos: 7, .. })
        ));
        assert!(matches!(
            parse("beta=1;gamma=1;free=-1"),
            Err(Error::Parse { pos: 20, .. })
        ));
    }

    #[test]
    fn enumeration_by_weight() {
        // weight 2: (2) with gamma (2),(1); (1,1) with gamma (1,1),(1),(0)
        assert_eq!(LrTableau::all_of_weight(2).len(), 5);
        assert_eq!(LrTableau::all_of_weight(0), vec![LrTableau::empty()]);
    }
}
