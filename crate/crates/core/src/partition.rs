//! Integer partitions and their elementary calculus.
//!
//! A partition is stored in canonical form: a non-increasing list of
//! positive parts with no trailing zeros. The zero partition is the empty
//! list, and every operation reads absent parts as 0.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Default upper bound on a single part accepted by the text parser.
pub const DEFAULT_PART_LIMIT: u64 = 1_000_000;

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The zero partition `(0)`.
    pub fn zero() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a non-increasing list. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if let Some(w) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                pos: w + 1,
                msg: format!("parts must be non-increasing: {parts:?}"),
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order (multiset semantics).
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of positive parts, i.e. the first part of the dual partition.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-indexed), 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(0)
    }

    /// `|p|`, the sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// The conjugate partition: `dual[i] = #{j : p[j] >= i + 1}`.
    pub fn dual(&self) -> Partition {
        let mut out = Vec::with_capacity(self.largest() as usize);
        for i in 1..=self.largest() {
            // parts are sorted, so the count is a prefix length
            let count = self.parts.partition_point(|&p| p >= i);
            out.push(count as u32);
        }
        Partition { parts: out }
    }

    /// Pointwise sum after zero padding.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts: Vec<u32> = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    /// True iff `other[i] <= self[i]` for every `i`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(q, p)| q <= p)
    }

    /// Parses the shared text form, rejecting parts above `limit`.
    pub fn parse_with_limit(text: &str, limit: u64) -> Result<Partition> {
        parse_at(text, 0, limit)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Parses a partition whose text starts at byte `offset` of a larger input,
/// so that error positions refer to the larger input.
pub(crate) fn parse_at(text: &str, offset: usize, limit: u64) -> Result<Partition> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(Partition::zero());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for token in text.split(',') {
        let lead = token.len() - token.trim_start().len();
        let t = token.trim();
        let value: u64 = t.parse().map_err(|_| Error::Parse {
            pos: pos + lead,
            msg: format!("expected a positive integer, found {t:?}"),
        })?;
        if value == 0 {
            return Err(Error::Parse {
                pos: pos + lead,
                msg: "parts must be positive".into(),
            });
        }
        if value > limit {
            return Err(Error::PartTooLarge { part: value, limit });
        }
        if let Some(&prev) = parts.last() {
            if u64::from(prev) < value {
                return Err(Error::Parse {
                    pos: pos + lead,
                    msg: "parts must be non-increasing".into(),
                });
            }
        }
        parts.push(value as u32);
        pos += token.len() + 1;
    }
    Ok(Partition { parts })
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse_with_limit(s, DEFAULT_PART_LIMIT)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Componentwise containment order; `None` for incomparable pairs.
pub fn containment_cmp(p: &Partition, q: &Partition) -> Option<Ordering> {
    match (p.contains(q), q.contains(p)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Greater),
        (false, true) => Some(Ordering::Less),
        (false, false) => None,
    }
}
