//! Objects of `H_1` up to isomorphism, as multisets of pickets, and the
//! Hom-dimension calculus on them.
//!
//! The indecomposables are `P0^m` (no subspace), `P1^m` (a one-dimensional
//! subspace in the socle of a block of length `m`) and `P1^0` (a
//! one-dimensional source mapping to zero). Dimensions of Hom spaces
//! between them are given by a closed table and extend bilinearly.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::tableau::{ExtTableau, LrTableau};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Picket {
    eps: u8,
    m: u32,
}

impl Picket {
    pub fn new(eps: u8, m: u32) -> Result<Self> {
        match (eps, m) {
            (0, 0) => Err(Error::InvalidPicket { eps, m }),
            (0 | 1, _) => Ok(Picket { eps, m }),
            _ => Err(Error::InvalidPicket { eps, m }),
        }
    }

    /// `P0^m`, `m >= 1`.
    pub fn p0(m: u32) -> Self {
        Picket::new(0, m).expect("P0^0 is the zero object")
    }

    /// `P1^m`, `m >= 0`.
    pub fn p1(m: u32) -> Self {
        Picket { eps: 1, m }
    }

    /// `P1^0`.
    pub fn free() -> Self {
        Picket { eps: 1, m: 0 }
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_free(&self) -> bool {
        self.eps == 1 && self.m == 0
    }
}

/// Canonical order: `m` descending, then `P0` before `P1`.
impl Ord for Picket {
    fn cmp(&self, other: &Self) -> Ordering {
        other.m.cmp(&self.m).then(self.eps.cmp(&other.eps))
    }
}

impl PartialOrd for Picket {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Picket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}^{}", self.eps, self.m)
    }
}

impl fmt::Debug for Picket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_picket(token: &str, pos: usize) -> Result<Picket> {
    let bad = || Error::Parse {
        pos,
        msg: format!("expected P0^m or P1^m, found {token:?}"),
    };
    let rest = token.strip_prefix('P').ok_or_else(bad)?;
    let (eps, m) = rest.split_once('^').ok_or_else(bad)?;
    let eps: u8 = match eps.trim() {
        "0" => 0,
        "1" => 1,
        _ => return Err(bad()),
    };
    let m: u32 = m.trim().parse().map_err(|_| bad())?;
    Picket::new(eps, m)
}

impl FromStr for Picket {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_picket(s.trim(), 0)
    }
}

/// Hom dimension between two pickets.
pub fn hom_dim_picket(p: Picket, q: Picket) -> usize {
    let (l, m) = (p.m as usize, q.m as usize);
    match (p.eps, p.m, q.eps, q.m) {
        // source P1^0
        (1, 0, 1, 0) => 1,
        (1, 0, _, _) => 0,
        // target P1^0
        (1, _, 1, 0) => 1,
        (0, _, 1, 0) => 0,
        (0, _, _, _) => l.min(m),
        (1, _, 0, _) => (l - 1).min(m),
        (1, _, 1, _) => l.min(m),
        _ => unreachable!("pickets are validated at construction"),
    }
}

/// An isomorphism class of `H_1`: a canonically sorted multiset of pickets.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct H1Object {
    pickets: Vec<Picket>,
}

impl H1Object {
    pub fn empty() -> Self {
        H1Object::default()
    }

    pub fn from_pickets(mut pickets: Vec<Picket>) -> Self {
        pickets.sort();
        H1Object { pickets }
    }

    /// `(P1^0)^n`.
    pub fn free(n: usize) -> Self {
        H1Object {
            pickets: vec![Picket::free(); n],
        }
    }

    pub fn pickets(&self) -> &[Picket] {
        &self.pickets
    }

    pub fn is_empty(&self) -> bool {
        self.pickets.is_empty()
    }

    /// `|alpha|`: the number of `P1` summands, including `P1^0`.
    pub fn a(&self) -> usize {
        self.pickets.iter().filter(|p| p.eps == 1).count()
    }

    /// `|beta|`.
    pub fn b(&self) -> usize {
        self.pickets.iter().map(|p| p.m as usize).sum()
    }

    /// Multiplicity of `P1^0`.
    pub fn free_count(&self) -> usize {
        self.pickets.iter().filter(|p| p.is_free()).count()
    }

    /// Whether the object lies in `S_1`, i.e. has no `P1^0` summand.
    pub fn in_s1(&self) -> bool {
        self.free_count() == 0
    }

    /// The summand without its `P1^0` part.
    pub fn s1_part(&self) -> H1Object {
        H1Object {
            pickets: self.pickets.iter().copied().filter(|p| !p.is_free()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &H1Object) -> H1Object {
        let mut pickets = self.pickets.clone();
        pickets.extend_from_slice(&other.pickets);
        H1Object::from_pickets(pickets)
    }

    pub fn multiplicity(&self, p: Picket) -> usize {
        self.pickets.iter().filter(|&&q| q == p).count()
    }

    /// Whether `other` is a direct summand (as a sub-multiset).
    pub fn has_summand(&self, other: &H1Object) -> bool {
        let mut it = self.pickets.iter().peekable();
        'outer: for q in &other.pickets {
            for p in it.by_ref() {
                match p.cmp(q) {
                    Ordering::Equal => continue 'outer,
                    Ordering::Less => continue,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// The invariant `(beta, gamma, free)`.
    pub fn gamma_hat(&self) -> ExtTableau {
        let mut beta = Vec::new();
        let mut gamma = Vec::new();
        for p in &self.pickets {
            if p.m > 0 {
                beta.push(p.m);
                gamma.push(p.m - p.eps as u32);
            }
        }
        let tab = LrTableau::new(Partition::from_multiset(gamma), Partition::from_multiset(beta))
            .expect("picket rows form a horizontal strip");
        ExtTableau::new(tab, self.free_count() as u64)
    }

    /// Inverse of [`H1Object::gamma_hat`]: row `i` gives `P0^{beta_i}` or
    /// `P1^{beta_i}`, plus `free` copies of `P1^0`.
    pub fn from_ext_tableau(t: &ExtTableau) -> H1Object {
        let mut pickets: Vec<Picket> = (0..t.tab.rows())
            .map(|i| {
                let m = t.tab.beta().part(i);
                if t.tab.has_entry(i) {
                    Picket::p1(m)
                } else {
                    Picket::p0(m)
                }
            })
            .collect();
        pickets.extend(std::iter::repeat_n(Picket::free(), t.free as usize));
        H1Object::from_pickets(pickets)
    }

    /// All objects of `S_1` with `|beta| = b`.
    pub fn all_s1_of_weight(b: u32) -> Vec<H1Object> {
        let mut out: Vec<H1Object> = LrTableau::all_of_weight(b)
            .into_iter()
            .map(|t| H1Object::from_ext_tableau(&t.into()))
            .collect();
        out.sort();
        out
    }

    /// All objects with `|alpha| = a` and `|beta| = b`, in canonical order.
    pub fn all_with_invariants(a: usize, b: u32) -> Vec<H1Object> {
        let mut out: Vec<H1Object> = H1Object::all_s1_of_weight(b)
            .into_iter()
            .filter(|m| m.a() <= a)
            .map(|m| {
                let k = a - m.a();
                m.direct_sum(&H1Object::free(k))
            })
            .collect();
        out.sort();
        out
    }

    /// All objects with `|beta| <= max_b` and at most `max_free` copies of `P1^0`.
    pub fn all_bounded(max_b: u32, max_free: usize) -> Vec<H1Object> {
        let mut out = Vec::new();
        for b in 0..=max_b {
            for s in H1Object::all_s1_of_weight(b) {
                for k in 0..=max_free {
                    out.push(s.direct_sum(&H1Object::free(k)));
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for H1Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pickets.is_empty() {
            return f.write_str("0");
        }
        for (i, p) in self.pickets.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for H1Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for H1Object {
    type Err = Error;

    /// `+`-separated pickets; `0` or the empty string is the zero object.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(H1Object::empty());
        }
        let mut pickets = Vec::new();
        let mut pos = 0;
        for token in s.split('+') {
            let lead = token.len() - token.trim_start().len();
            pickets.push(parse_picket(token.trim(), pos + lead)?);
            pos += token.len() + 1;
        }
        Ok(H1Object::from_pickets(pickets))
    }
}

impl From<&ExtTableau> for H1Object {
    fn from(t: &ExtTableau) -> Self {
        H1Object::from_ext_tableau(t)
    }
}

/// `[M, N] = dim Hom(M, N)`.
pub fn hom_dim(m: &H1Object, n: &H1Object) -> usize {
    m.pickets
        .iter()
        .flat_map(|&p| n.pickets.iter().map(move |&q| hom_dim_picket(p, q)))
        .sum()
}

/// `dim End(M)`.
pub fn end_dim(m: &H1Object) -> usize {
    hom_dim(m, m)
}

fn hom_dim_from(p: Picket, n: &H1Object) -> usize {
    n.pickets.iter().map(|&q| hom_dim_picket(p, q)).sum()
}

fn hom_dim_to(m: &H1Object, q: Picket) -> usize {
    m.pickets.iter().map(|&p| hom_dim_picket(p, q)).sum()
}

/// The picket test objects used by [`hom_leq`] for objects whose largest
/// block is at most `max_m`.
pub fn test_pickets(max_m: u32) -> Vec<Picket> {
    let mut out = vec![Picket::free()];
    for l in 1..=max_m + 1 {
        out.push(Picket::p0(l));
        out.push(Picket::p1(l));
    }
    out
}

/// Hom-order `M <=_hom N` inside `H_a^b`, tested against picket objects in
/// both variances.
pub fn hom_leq(m: &H1Object, n: &H1Object) -> Result<bool> {
    if m.a() != n.a() || m.b() != n.b() {
        return Err(Error::IncomparableInvariants {
            a_left: m.a(),
            b_left: m.b(),
            a_right: n.a(),
            b_right: n.b(),
        });
    }
    let bound = m.pickets.iter().chain(&n.pickets).map(|p| p.m).max().unwrap_or(0);
    Ok(test_pickets(bound)
        .into_iter()
        .all(|p| hom_dim_from(p, m) <= hom_dim_from(p, n) && hom_dim_to(m, p) <= hom_dim_to(n, p)))
}
