//! Exhaustive and randomized verification drivers, shared by the CLI and
//! the acceptance tests.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::field::{FieldParam, FiniteField};
use crate::generic_ext::generic_extension;
use crate::oracle::{self, EndDimCache, OracleConfig};
use crate::picket::{hom_dim, hom_dim_picket, hom_leq, H1Object, Picket};
use crate::star::star_lr1;
use crate::tableau::{ExtTableau, LrTableau};
use crate::with_field;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table,
    Roundtrip,
    Main,
    Assoc,
    Lemmas,
    Fields,
    Routes,
    Minimal,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Table,
        Suite::Roundtrip,
        Suite::Main,
        Suite::Assoc,
        Suite::Lemmas,
        Suite::Fields,
        Suite::Routes,
        Suite::Minimal,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Roundtrip => "roundtrip",
            Suite::Main => "main",
            Suite::Assoc => "assoc",
            Suite::Lemmas => "lemmas",
            Suite::Fields => "fields",
            Suite::Routes => "routes",
            Suite::Minimal => "minimal",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown suite {s:?}"),
            })
    }
}

/// Parameters of a verification run.
#[derive(Debug, Clone, Copy)]
pub struct VerifyParams {
    /// Bound on `|beta|` (per pair for `main`, per object elsewhere).
    pub max_b: u32,
    /// Bound on the number of `P1^0` summands per object.
    pub max_free: usize,
    pub field: FieldParam,
    /// Number of random triples for `assoc`.
    pub trials: usize,
    /// Bound on `|beta|` of the random tableaux for `assoc`.
    pub assoc_weight: u32,
    pub seed: u64,
    pub oracle: OracleConfig,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            max_b: 5,
            max_free: 2,
            field: FieldParam::default(),
            trials: 10_000,
            assoc_weight: 12,
            seed: 0x5eed,
            oracle: OracleConfig::default(),
        }
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} checked, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.checked,
            self.failures.len()
        )
    }
}

struct Recorder {
    checked: usize,
    failures: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, suite: Suite, start: Instant) -> Report {
        Report {
            suite: suite.name(),
            checked: self.checked,
            failures: self.failures,
            elapsed: start.elapsed(),
        }
    }
}

pub fn run(suite: Suite, params: &VerifyParams) -> Result<Report> {
    let start = Instant::now();
    let rec = match suite {
        Suite::Table => with_field!(params.field, F => table::<F>(params)),
        Suite::Roundtrip => with_field!(params.field, F => roundtrip::<F>(params)),
        Suite::Main => with_field!(params.field, F => generic_against_brute::<F>(params))?,
        Suite::Assoc => assoc(params),
        Suite::Lemmas => with_field!(params.field, F => lemmas::<F>(params))?,
        Suite::Fields => fields(params)?,
        Suite::Routes => with_field!(params.field, F => routes::<F>(params))?,
        Suite::Minimal => with_field!(params.field, F => minimal::<F>(params))?,
    };
    Ok(rec.finish(suite, start))
}

fn all_pickets(max_m: u32) -> Vec<Picket> {
    let mut out = vec![Picket::free()];
    for m in 1..=max_m {
        out.push(Picket::p0(m));
        out.push(Picket::p1(m));
    }
    out
}

/// Matrix Hom dimensions between pickets against the closed table.
fn table<F: FiniteField>(params: &VerifyParams) -> Recorder {
    let mut rec = Recorder::new();
    let pickets = all_pickets(params.max_b);
    for &p in &pickets {
        for &q in &pickets {
            let (op, oq) = (H1Object::from_pickets(vec![p]), H1Object::from_pickets(vec![q]));
            let dim = oracle::hom_space(&oracle::realize::<F>(&op), &oracle::realize::<F>(&oq)).len();
            let expected = hom_dim_picket(p, q);
            rec.check(dim == expected, || {
                format!("[{p}, {q}]: matrix {dim}, table {expected}")
            });
        }
    }
    rec
}

/// Tableau/picket bijection and matrix realization round trips.
fn roundtrip<F: FiniteField>(params: &VerifyParams) -> Recorder {
    let mut rec = Recorder::new();
    for w in 0..=8 {
        for tab in LrTableau::all_of_weight(w) {
            for free in 0..=3 {
                let t = ExtTableau::new(tab.clone(), free);
                let obj = H1Object::from_ext_tableau(&t);
                rec.check(obj.gamma_hat() == t, || {
                    format!("gamma_hat(from({t})) = {}", obj.gamma_hat())
                });
                let back = H1Object::from_ext_tableau(&obj.gamma_hat());
                rec.check(back == obj, || format!("from(gamma_hat({obj})) = {back}"));
            }
        }
    }
    for obj in H1Object::all_bounded(params.max_b, params.max_free) {
        let got = oracle::identify(&oracle::realize::<F>(&obj));
        rec.check(got.as_ref() == Ok(&obj), || {
            format!("identify(realize({obj})) = {got:?}")
        });
    }
    rec
}

/// All ordered pairs `(N, M)` with `b_N + b_M <= max_b`.
pub fn bounded_pairs(max_b: u32, max_free: usize) -> Vec<(H1Object, H1Object)> {
    let objs = H1Object::all_bounded(max_b, max_free);
    let mut out = Vec::new();
    for n in &objs {
        for m in &objs {
            if n.b() + m.b() <= max_b as usize {
                out.push((n.clone(), m.clone()));
            }
        }
    }
    out
}

/// Combinatorial generic extension against exhaustive minimization.
fn generic_against_brute<F: FiniteField>(params: &VerifyParams) -> Result<Recorder> {
    let mut rec = Recorder::new();
    let mut cache = EndDimCache::default();
    for (n, m) in bounded_pairs(params.max_b, params.max_free) {
        let expected = generic_extension(&n, &m);
        match oracle::brute_generic_ext_cached::<F>(&n, &m, &params.oracle, &mut cache) {
            Ok(res) => rec.check(res.generic == expected, || {
                format!("N={n} M={m}: oracle {}, combinatorial {expected}", res.generic)
            }),
            Err(e @ Error::NonUniqueMinimum { .. }) => rec.check(false, || format!("N={n} M={m}: {e}")),
            Err(e) => return Err(e),
        }
    }
    Ok(rec)
}

/// Associativity of the `LR_1` product on random triples.
fn assoc(params: &VerifyParams) -> Recorder {
    let mut rec = Recorder::new();
    let by_weight: Vec<Vec<LrTableau>> = (0..=params.assoc_weight).map(LrTableau::all_of_weight).collect();
    let mut rng = StdRng::seed_from_u64(params.seed);
    let pick = |rng: &mut StdRng| {
        let w = rng.gen_range(0..by_weight.len());
        by_weight[w][rng.gen_range(0..by_weight[w].len())].clone()
    };
    for _ in 0..params.trials {
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        // A * B is star_lr1(B, A)
        let left = star_lr1(&c, &star_lr1(&b, &a));
        let right = star_lr1(&star_lr1(&c, &b), &a);
        rec.check(left == right, || format!("A={a} B={b} C={c}: {left} vs {right}"));
    }
    rec
}

/// Properties of `P1^0` and the two hom-order inequalities between pickets.
fn lemmas<F: FiniteField>(params: &VerifyParams) -> Result<Recorder> {
    let mut rec = Recorder::new();
    let free = H1Object::free(1);
    let rfree = oracle::realize::<F>(&free);
    for b in 0..=params.max_b {
        for m in H1Object::all_s1_of_weight(b) {
            let table = hom_dim(&free, &m);
            let matrix = oracle::hom_space(&rfree, &oracle::realize::<F>(&m)).len();
            rec.check(table == 0 && matrix == 0, || {
                format!("[P1^0, {m}]: table {table}, matrix {matrix}")
            });
            let splits = oracle::check_ext_vanishing::<F>(&m, &params.oracle)?;
            rec.check(splits, || format!("non-split extension of {m} by P1^0"));
        }
    }
    for m in 1..=params.max_b {
        for k in 1..m {
            let lhs = H1Object::from_pickets(vec![Picket::p0(m), Picket::p1(k)]);
            let rhs = H1Object::from_pickets(vec![Picket::p1(m), Picket::p0(k)]);
            rec.check(hom_leq(&lhs, &rhs)?, || format!("{lhs} <=_hom {rhs} fails"));
        }
        let lhs = H1Object::from_pickets(vec![Picket::p1(m)]);
        let rhs = H1Object::from_pickets(vec![Picket::p0(m), Picket::free()]);
        rec.check(hom_leq(&lhs, &rhs)?, || format!("{lhs} <=_hom {rhs} fails"));
    }
    Ok(rec)
}

/// The oracle's answers over `F_2` and `F_3` coincide.
fn fields(params: &VerifyParams) -> Result<Recorder> {
    let mut rec = Recorder::new();
    let max_b = params.max_b.min(4);
    let (mut c2, mut c3) = (EndDimCache::default(), EndDimCache::default());
    for (n, m) in bounded_pairs(max_b, params.max_free) {
        let g2 = oracle::brute_generic_ext_cached::<crate::Gf2>(&n, &m, &params.oracle, &mut c2)?;
        let g3 = oracle::brute_generic_ext_cached::<crate::Gf3>(&n, &m, &params.oracle, &mut c3)?;
        rec.check(g2.generic == g3.generic, || {
            format!("N={n} M={m}: F_2 {}, F_3 {}", g2.generic, g3.generic)
        });
    }
    Ok(rec)
}

/// Coset enumeration of extensions against the injection search.
fn routes<F: FiniteField>(params: &VerifyParams) -> Result<Recorder> {
    let mut rec = Recorder::new();
    let max_b = params.max_b.min(3);
    for (n, m) in bounded_pairs(max_b, params.max_free.min(1)) {
        let cosets = oracle::all_extensions::<F>(&n, &m, &params.oracle)?;
        let injections = oracle::all_extensions_by_injection::<F>(&n, &m, &params.oracle)?;
        rec.check(cosets == injections, || {
            format!("N={n} M={m}: cosets {cosets:?}, injections {injections:?}")
        });
    }
    Ok(rec)
}

/// The combinatorial generic extension is hom-order minimal among all
/// extensions, and every extension keeps the `P1^0` summands of `M`.
fn minimal<F: FiniteField>(params: &VerifyParams) -> Result<Recorder> {
    let mut rec = Recorder::new();
    let max_b = params.max_b.min(4);
    for (n, m) in bounded_pairs(max_b, params.max_free) {
        let g = generic_extension(&n, &m);
        let exts = oracle::all_extensions::<F>(&n, &m, &params.oracle)?;
        rec.check(exts.contains(&n.direct_sum(&m)), || {
            format!("N={n} M={m}: split extension missing")
        });
        let m_free = H1Object::free(m.free_count());
        for u in &exts {
            rec.check(hom_leq(&g, u)?, || format!("N={n} M={m}: {g} not <=_hom {u}"));
            rec.check(u.has_summand(&m_free), || {
                format!("N={n} M={m}: {u} lacks {m_free}")
            });
        }
    }
    Ok(rec)
}
