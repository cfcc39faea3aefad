//! Brute-force linear algebra over a small prime field.
//!
//! Objects of `H_1` are realized as a pair of matrices: a nilpotent operator
//! `J` on the target space and a map `f` from a source space with zero
//! action. Isomorphism classes are read off rank invariants, morphisms are
//! solved for directly, and extensions are enumerated exhaustively. Nothing
//! here uses the tableau operations or the Hom table.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::field::{FieldParam, FiniteField};
use crate::linalg::Matrix;
use crate::partition::Partition;
use crate::picket::H1Object;
use crate::tableau::{ExtTableau, LrTableau};

/// Default cap on the dimension of an enumerated space (`p^dim` elements).
pub const DEFAULT_ENUM_LIMIT: usize = 20;
/// Default cap on `b_M + b_N`.
pub const DEFAULT_SIZE_BOUND: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub enum_limit: usize,
    pub size_bound: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            enum_limit: DEFAULT_ENUM_LIMIT,
            size_bound: DEFAULT_SIZE_BOUND,
        }
    }
}

/// A concrete object `(k^a, (k^n, J), f)` with `J` nilpotent and `J f = 0`.
#[derive(Clone, PartialEq, Eq)]
pub struct MatObject<F> {
    j: Matrix<F>,
    f: Matrix<F>,
}

impl<F: FiniteField> MatObject<F> {
    pub fn new(j: Matrix<F>, f: Matrix<F>) -> Result<Self> {
        if !j.is_square() {
            return Err(Error::MalformedObject(format!(
                "operator must be square, got {}x{}",
                j.rows(),
                j.cols()
            )));
        }
        if f.rows() != j.rows() {
            return Err(Error::MalformedObject(format!(
                "map has {} rows, operator has size {}",
                f.rows(),
                j.rows()
            )));
        }
        if !j.is_nilpotent() {
            return Err(Error::NotNilpotent { size: j.rows() });
        }
        if !(&j * &f).is_zero() {
            return Err(Error::MalformedObject("J f != 0".into()));
        }
        Ok(MatObject { j, f })
    }

    /// Dimension of the source.
    pub fn a(&self) -> usize {
        self.f.cols()
    }

    /// Dimension of the target.
    pub fn n(&self) -> usize {
        self.j.rows()
    }

    pub fn j(&self) -> &Matrix<F> {
        &self.j
    }

    pub fn f(&self) -> &Matrix<F> {
        &self.f
    }

    pub fn dump(&self) -> String {
        format!(
            "a={} n={}\nJ\n{}f\n{}",
            self.a(),
            self.n(),
            self.j.dump(),
            self.f.dump()
        )
    }
}

impl<F: FiniteField> std::fmt::Debug for MatObject<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MatObject {{ J: {:?}, f: {:?} }}", self.j, self.f)
    }
}

/// Canonical block-diagonal realization. Blocks follow the canonical picket
/// order; inside a block of length `m` the basis runs from the generator
/// down to the socle, `J e_k = e_{k+1}`. A `P1^m` column hits the socle.
pub fn realize<F: FiniteField>(obj: &H1Object) -> MatObject<F> {
    let n = obj.b();
    let a = obj.a();
    let mut j = Matrix::zeros(n, n);
    let mut f = Matrix::zeros(n, a);
    let (mut off, mut col) = (0, 0);
    for p in obj.pickets() {
        let m = p.m() as usize;
        for k in 0..m.saturating_sub(1) {
            j[(off + k + 1, off + k)] = F::one();
        }
        if p.eps() == 1 {
            if m > 0 {
                f[(off + m - 1, col)] = F::one();
            }
            col += 1;
        }
        off += m;
    }
    MatObject { j, f }
}

/// Partition from the rank sequence `ranks[0] = dim, ..., ranks[last] = 0`
/// of the powers of a nilpotent operator.
fn partition_from_ranks(ranks: &[usize]) -> Partition {
    // ranks[i-1] - ranks[i] blocks have size >= i
    let at_least: Vec<u32> = ranks.windows(2).map(|w| (w[0] - w[1]) as u32).collect();
    Partition::new(at_least)
        .expect("block counts are non-increasing")
        .dual()
}

/// Jordan type of a nilpotent matrix.
pub fn jordan_type<F: FiniteField>(a: &Matrix<F>) -> Result<Partition> {
    if !a.is_nilpotent() {
        return Err(Error::NotNilpotent { size: a.rows() });
    }
    let mut ranks = vec![a.rows()];
    let mut power = Matrix::identity(a.rows());
    while *ranks.last().unwrap() > 0 {
        power = &power * a;
        ranks.push(power.rank());
    }
    Ok(partition_from_ranks(&ranks))
}

/// Isomorphism class from rank invariants: `beta` is the Jordan type of
/// `J`, `gamma` that of the operator induced on `target / im f`, and the
/// free count is `dim ker f`.
pub fn identify<F: FiniteField>(obj: &MatObject<F>) -> Result<H1Object> {
    let beta = jordan_type(&obj.j)?;
    let image_rank = obj.f.rank();
    let mut ranks = vec![obj.n() - image_rank];
    let mut power = Matrix::identity(obj.n());
    while *ranks.last().unwrap() > 0 {
        power = &power * &obj.j;
        ranks.push(power.hstack(&obj.f).rank() - image_rank);
        if ranks.len() > obj.n() + 2 {
            return Err(Error::NotNilpotent { size: obj.n() });
        }
    }
    let gamma = partition_from_ranks(&ranks);
    let tab = LrTableau::new(gamma, beta)?;
    let free = (obj.a() - image_rank) as u64;
    Ok(H1Object::from_ext_tableau(&ExtTableau::new(tab, free)))
}

/// A morphism `(phi1, phi2)` between matrix objects: `phi1` on sources,
/// `phi2` on targets.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism<F> {
    pub phi1: Matrix<F>,
    pub phi2: Matrix<F>,
}

impl<F: FiniteField> std::fmt::Debug for Morphism<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism {{ phi1: {:?}, phi2: {:?} }}", self.phi1, self.phi2)
    }
}

/// Basis of `Hom(M, N)`: pairs with `phi2 J_M = J_N phi2` and
/// `phi2 f_M = f_N phi1`.
pub fn hom_space<F: FiniteField>(m: &MatObject<F>, n: &MatObject<F>) -> Vec<Morphism<F>> {
    let (am, an, nm, nn) = (m.a(), n.a(), m.n(), n.n());
    let phi1_len = an * am;
    let unknowns = phi1_len + nn * nm;
    let eqs = nn * nm + nn * am;
    let phi1_var = |k: usize, c: usize| k * am + c;
    let phi2_var = |r: usize, c: usize| phi1_len + r * nm + c;

    let mut sys = Matrix::<F>::zeros(eqs, unknowns);
    // (phi2 J_M - J_N phi2)[r][c']
    for r in 0..nn {
        for cp in 0..nm {
            let row = r * nm + cp;
            for c in 0..nm {
                let v = m.j[(c, cp)];
                if !v.is_zero() {
                    sys[(row, phi2_var(r, c))] = sys[(row, phi2_var(r, c))] + v;
                }
            }
            for k in 0..nn {
                let v = n.j[(r, k)];
                if !v.is_zero() {
                    sys[(row, phi2_var(k, cp))] = sys[(row, phi2_var(k, cp))] - v;
                }
            }
        }
    }
    // (phi2 f_M - f_N phi1)[r][c']
    for r in 0..nn {
        for cp in 0..am {
            let row = nn * nm + r * am + cp;
            for c in 0..nm {
                let v = m.f[(c, cp)];
                if !v.is_zero() {
                    sys[(row, phi2_var(r, c))] = sys[(row, phi2_var(r, c))] + v;
                }
            }
            for k in 0..an {
                let v = n.f[(r, k)];
                if !v.is_zero() {
                    sys[(row, phi1_var(k, cp))] = sys[(row, phi1_var(k, cp))] - v;
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|v| Morphism {
            phi1: Matrix::from_rows(an, am, v[..phi1_len].to_vec()),
            phi2: Matrix::from_rows(nn, nm, v[phi1_len..].to_vec()),
        })
        .collect()
}

/// `dim End(M)` computed from the matrix realization.
pub fn end_dim_matrix<F: FiniteField>(obj: &H1Object) -> usize {
    let r = realize::<F>(obj);
    hom_space(&r, &r).len()
}

/// Calls `visit` on every linear combination of `basis` (all `p^d` of them)
/// until it returns `true`.
fn any_combination<T, F: FiniteField>(
    basis: &[T],
    combine: impl Fn(&[F]) -> T,
    mut visit: impl FnMut(T) -> bool,
) -> bool {
    let d = basis.len();
    let mut coeffs = vec![F::zero(); d];
    loop {
        if visit(combine(&coeffs)) {
            return true;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == d {
                return false;
            }
            let next = coeffs[i].to_u32() + 1;
            if next == F::ORDER {
                coeffs[i] = F::zero();
                i += 1;
            } else {
                coeffs[i] = F::from_u32(next);
                break;
            }
        }
    }
}

fn combine_vectors<F: FiniteField>(basis: &[Vec<F>], coeffs: &[F], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (b, &c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, &x) in out.iter_mut().zip(b) {
            *o = *o + c * x;
        }
    }
    out
}

/// Quotient coordinates for `k^n / im(sub)` with `sub` injective: returns
/// `(q, s)` where `q` maps `k^n` onto the quotient and `s` is a section by
/// standard basis vectors.
fn quotient_maps<F: FiniteField>(sub: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    let n = sub.rows();
    let k = sub.cols();
    let stacked = sub.hstack(&Matrix::identity(n));
    let chosen: Vec<usize> = stacked
        .independent_columns()
        .into_iter()
        .filter(|&c| c >= k)
        .map(|c| c - k)
        .collect();
    let mut section = Matrix::zeros(n, chosen.len());
    for (col, &e) in chosen.iter().enumerate() {
        section[(e, col)] = F::one();
    }
    let basis = sub.hstack(&section);
    let inv = basis.inverse().expect("image plus chosen vectors form a basis");
    let mut q = Matrix::zeros(n - k, n);
    for i in 0..n - k {
        for j in 0..n {
            q[(i, j)] = inv[(k + i, j)];
        }
    }
    (q, section)
}

/// The cokernel object of an injective morphism into `u`.
pub fn cokernel<F: FiniteField>(u: &MatObject<F>, mor: &Morphism<F>) -> MatObject<F> {
    let (q_tgt, s_tgt) = quotient_maps(&mor.phi2);
    let (_, s_src) = quotient_maps(&mor.phi1);
    let j = &(&q_tgt * &u.j) * &s_tgt;
    let f = &(&q_tgt * &u.f) * &s_src;
    MatObject { j, f }
}

fn check_size(n: &H1Object, m: &H1Object, cfg: &OracleConfig) -> Result<()> {
    let b = n.b() + m.b();
    if b > cfg.size_bound {
        return Err(Error::SizeGuard {
            b,
            bound: cfg.size_bound,
        });
    }
    Ok(())
}

/// Decides whether `u` is an extension of `n` by `m` by enumerating every
/// morphism `m -> u`, keeping those injective in both components, and
/// identifying their cokernels.
pub fn is_extension_by_injection<F: FiniteField>(
    n: &H1Object,
    m: &H1Object,
    u: &H1Object,
    cfg: &OracleConfig,
) -> Result<bool> {
    if u.a() != n.a() + m.a() || u.b() != n.b() + m.b() {
        return Ok(false);
    }
    let (rm, ru) = (realize::<F>(m), realize::<F>(u));
    let basis = hom_space(&rm, &ru);
    if basis.len() > cfg.enum_limit {
        return Err(Error::SearchSpaceTooLarge {
            dim: basis.len(),
            limit: cfg.enum_limit,
        });
    }
    let (am, nm) = (rm.a(), rm.n());
    let mut failure = None;
    let found = any_combination(
        &basis,
        |coeffs: &[F]| {
            let mut phi1 = Matrix::zeros(ru.a(), am);
            let mut phi2 = Matrix::zeros(ru.n(), nm);
            for (b, &c) in basis.iter().zip(coeffs) {
                if !c.is_zero() {
                    phi1 = phi1.add(&b.phi1.scale(c));
                    phi2 = phi2.add(&b.phi2.scale(c));
                }
            }
            Morphism { phi1, phi2 }
        },
        |mor| {
            if mor.phi1.rank() < am || mor.phi2.rank() < nm {
                return false;
            }
            match identify(&cokernel(&ru, &mor)) {
                Ok(q) => q == *n,
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        },
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(found),
    }
}

/// Extensions of `n` by `m` found by testing every candidate with the
/// invariants `(a_M + a_N, b_M + b_N)` through
/// [`is_extension_by_injection`].
pub fn all_extensions_by_injection<F: FiniteField>(
    n: &H1Object,
    m: &H1Object,
    cfg: &OracleConfig,
) -> Result<BTreeSet<H1Object>> {
    check_size(n, m, cfg)?;
    let mut out = BTreeSet::new();
    for u in H1Object::all_with_invariants(n.a() + m.a(), (n.b() + m.b()) as u32) {
        if is_extension_by_injection::<F>(n, m, &u, cfg)? {
            out.insert(u);
        }
    }
    Ok(out)
}

/// Every extension `0 -> M -> U -> N -> 0` with `U` in `H_1`, up to
/// isomorphism.
///
/// In adapted bases such a `U` has operator `[[J_M, C], [0, J_N]]` and map
/// `[[f_M, D], [0, f_N]]`, subject to `J_M D + C f_N = 0`. Pairs differing
/// by a change of adapted basis give isomorphic sequences, so one
/// representative `(C, D)` per coset of that subspace is enough.
pub fn all_extensions<F: FiniteField>(
    n: &H1Object,
    m: &H1Object,
    cfg: &OracleConfig,
) -> Result<BTreeSet<H1Object>> {
    check_size(n, m, cfg)?;
    let (rm, rn) = (realize::<F>(m), realize::<F>(n));
    let (am, an, nm, nn) = (rm.a(), rn.a(), rm.n(), rn.n());
    let c_len = nm * nn;
    let len = c_len + nm * an;
    let c_var = |i: usize, j: usize| i * nn + j;
    let d_var = |i: usize, j: usize| c_len + i * an + j;

    // cocycle condition (J_M D + C f_N)[i][j] = 0
    let mut cond = Matrix::<F>::zeros(nm * an, len);
    for i in 0..nm {
        for j in 0..an {
            let row = i * an + j;
            for k in 0..nm {
                let v = rm.j[(i, k)];
                if !v.is_zero() {
                    cond[(row, d_var(k, j))] = cond[(row, d_var(k, j))] + v;
                }
            }
            for k in 0..nn {
                let v = rn.f[(k, j)];
                if !v.is_zero() {
                    cond[(row, c_var(i, k))] = cond[(row, c_var(i, k))] + v;
                }
            }
        }
    }
    let cocycles = cond.kernel();

    // basis changes (X, Y) act by C += X J_N - J_M X, D += X f_N - f_M Y
    let x_len = nm * nn;
    let mut boundary = Matrix::<F>::zeros(len, x_len + am * an);
    for xi in 0..nm {
        for xj in 0..nn {
            let col = xi * nn + xj;
            // X J_N: entry (xi, l) gains J_N[xj][l]
            for l in 0..nn {
                let v = rn.j[(xj, l)];
                if !v.is_zero() {
                    boundary[(c_var(xi, l), col)] = boundary[(c_var(xi, l), col)] + v;
                }
            }
            // -J_M X: entry (r, xj) loses J_M[r][xi]
            for r in 0..nm {
                let v = rm.j[(r, xi)];
                if !v.is_zero() {
                    boundary[(c_var(r, xj), col)] = boundary[(c_var(r, xj), col)] - v;
                }
            }
            // X f_N: entry (xi, l) gains f_N[xj][l]
            for l in 0..an {
                let v = rn.f[(xj, l)];
                if !v.is_zero() {
                    boundary[(d_var(xi, l), col)] = boundary[(d_var(xi, l), col)] + v;
                }
            }
        }
    }
    for yi in 0..am {
        for yj in 0..an {
            let col = x_len + yi * an + yj;
            // -f_M Y: entry (r, yj) loses f_M[r][yi]
            for r in 0..nm {
                let v = rm.f[(r, yi)];
                if !v.is_zero() {
                    boundary[(d_var(r, yj), col)] = boundary[(d_var(r, yj), col)] - v;
                }
            }
        }
    }

    let mut stacked = boundary.clone();
    for z in &cocycles {
        stacked = stacked.hstack(&Matrix::column(z.clone()));
    }
    let offset = boundary.cols();
    let reps: Vec<Vec<F>> = stacked
        .independent_columns()
        .into_iter()
        .filter(|&c| c >= offset)
        .map(|c| cocycles[c - offset].clone())
        .collect();
    if reps.len() > cfg.enum_limit {
        return Err(Error::SearchSpaceTooLarge {
            dim: reps.len(),
            limit: cfg.enum_limit,
        });
    }

    let (au, nu) = (am + an, nm + nn);
    let mut out = BTreeSet::new();
    let mut failure = None;
    any_combination(
        &reps,
        |coeffs: &[F]| combine_vectors(&reps, coeffs, len),
        |v| {
            let mut j = Matrix::zeros(nu, nu);
            j.set_block(0, 0, &rm.j);
            j.set_block(nm, nm, &rn.j);
            j.set_block(0, nm, &Matrix::from_rows(nm, nn, v[..c_len].to_vec()));
            let mut f = Matrix::zeros(nu, au);
            f.set_block(0, 0, &rm.f);
            f.set_block(nm, am, &rn.f);
            f.set_block(0, am, &Matrix::from_rows(nm, an, v[c_len..].to_vec()));
            match identify(&MatObject { j, f }) {
                Ok(u) => {
                    out.insert(u);
                    false
                }
                Err(e) => {
                    failure = Some(e);
                    true
                }
            }
        },
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Caches matrix-computed endomorphism dimensions across queries.
#[derive(Debug, Default)]
pub struct EndDimCache {
    dims: HashMap<H1Object, usize>,
}

impl EndDimCache {
    pub fn get<F: FiniteField>(&mut self, obj: &H1Object) -> usize {
        if let Some(&d) = self.dims.get(obj) {
            return d;
        }
        let d = end_dim_matrix::<F>(obj);
        self.dims.insert(obj.clone(), d);
        d
    }
}

/// The extension of minimal endomorphism dimension, with the whole set of
/// extensions it was chosen from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteResult {
    pub generic: H1Object,
    pub end_dim: usize,
    pub extensions: BTreeSet<H1Object>,
}

pub fn brute_generic_ext_cached<F: FiniteField>(
    n: &H1Object,
    m: &H1Object,
    cfg: &OracleConfig,
    cache: &mut EndDimCache,
) -> Result<BruteResult> {
    let extensions = all_extensions::<F>(n, m, cfg)?;
    let dims: Vec<(usize, &H1Object)> = extensions.iter().map(|u| (cache.get::<F>(u), u)).collect();
    let min = dims
        .iter()
        .map(|d| d.0)
        .min()
        .expect("the split extension always exists");
    let minimizers: Vec<&H1Object> = dims.iter().filter(|d| d.0 == min).map(|d| d.1).collect();
    if minimizers.len() != 1 {
        return Err(Error::NonUniqueMinimum {
            count: minimizers.len(),
            end_dim: min,
        });
    }
    Ok(BruteResult {
        generic: minimizers[0].clone(),
        end_dim: min,
        extensions,
    })
}

/// Generic extension of `n` by `m` by exhaustive minimization of `dim End`.
pub fn brute_generic_ext<F: FiniteField>(n: &H1Object, m: &H1Object, cfg: &OracleConfig) -> Result<H1Object> {
    Ok(brute_generic_ext_cached::<F>(n, m, cfg, &mut EndDimCache::default())?.generic)
}

/// Whether every extension of `m` by `P1^0` splits.
pub fn check_ext_vanishing<F: FiniteField>(m: &H1Object, cfg: &OracleConfig) -> Result<bool> {
    if !m.in_s1() {
        return Err(Error::NotInS1);
    }
    let free = H1Object::free(1);
    let exts = all_extensions::<F>(m, &free, cfg)?;
    Ok(exts.len() == 1 && exts.contains(&m.direct_sum(&free)))
}

/// Field-dispatching wrappers keyed by a runtime [`FieldParam`].
pub mod dyn_field {
    use super::*;
    use crate::with_field;

    pub fn all_extensions(
        n: &H1Object,
        m: &H1Object,
        fp: FieldParam,
        cfg: &OracleConfig,
    ) -> Result<BTreeSet<H1Object>> {
        with_field!(fp, F => super::all_extensions::<F>(n, m, cfg))
    }

    pub fn brute_generic_ext(
        n: &H1Object,
        m: &H1Object,
        fp: FieldParam,
        cfg: &OracleConfig,
    ) -> Result<BruteResult> {
        with_field!(fp, F => brute_generic_ext_cached::<F>(n, m, cfg, &mut EndDimCache::default()))
    }

    pub fn check_ext_vanishing(m: &H1Object, fp: FieldParam, cfg: &OracleConfig) -> Result<bool> {
        with_field!(fp, F => super::check_ext_vanishing::<F>(m, cfg))
    }

    pub fn hom_dim(m: &H1Object, n: &H1Object, fp: FieldParam) -> usize {
        with_field!(fp, F => hom_space(&realize::<F>(m), &realize::<F>(n)).len())
    }

    pub fn realize_dump(m: &H1Object, fp: FieldParam) -> String {
        with_field!(fp, F => realize::<F>(m).dump())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Gf2, Gf3};

    fn obj(s: &str) -> H1Object {
        s.parse().unwrap()
    }

    #[test]
    fn realize_examples() {
        let r = realize::<Gf2>(&obj("P1^2"));
        assert_eq!(r.a(), 1);
        assert_eq!(r.j(), &Matrix::from_u32(2, 2, &[0, 0, 1, 0]));
        assert_eq!(r.f(), &Matrix::from_u32(2, 1, &[0, 1]));

        let r = realize::<Gf2>(&H1Object::free(3));
        assert_eq!((r.a(), r.n()), (3, 0));

        let r = realize::<Gf2>(&obj("P0^1+P1^1"));
        assert_eq!(r.j(), &Matrix::zeros(2, 2));
        assert_eq!(r.f(), &Matrix::from_u32(2, 1, &[0, 1]));
    }

    #[test]
    fn jordan_type_examples() {
        let z = Matrix::<Gf2>::zeros(3, 3);
        assert_eq!(jordan_type(&z).unwrap().to_string(), "1,1,1");
        let block = realize::<Gf3>(&obj("P0^4"));
        assert_eq!(jordan_type(block.j()).unwrap().to_string(), "4");
        let r = realize::<Gf2>(&obj("P0^2+P1^2+P0^1"));
        assert_eq!(jordan_type(r.j()).unwrap().to_string(), "2,2,1");
        let not = Matrix::<Gf2>::identity(2);
        assert_eq!(jordan_type(&not), Err(Error::NotNilpotent { size: 2 }));
    }

    #[test]
    fn jordan_type_of_conjugated_block() {
        // P J P^-1 for a 3-block and an invertible P
        let j = realize::<Gf3>(&obj("P0^3")).j().clone();
        let p = Matrix::<Gf3>::from_u32(3, 3, &[1, 2, 0, 0, 1, 1, 1, 0, 2]);
        let conj = &(&p * &j) * &p.inverse().unwrap();
        assert_eq!(jordan_type(&conj).unwrap().to_string(), "3");
    }

    #[test]
    fn identify_examples() {
        let m = MatObject::new(Matrix::<Gf2>::zeros(1, 1), Matrix::zeros(1, 1)).unwrap();
        assert_eq!(identify(&m).unwrap(), obj("P0^1+P1^0"));
        assert_eq!(identify(&realize::<Gf2>(&obj("P1^2"))).unwrap(), obj("P1^2"));
        let u = obj("P0^3+P1^3+P1^1+P1^0");
        assert_eq!(identify(&realize::<Gf3>(&u)).unwrap(), u);
    }

    #[test]
    fn mat_object_validation() {
        let j = Matrix::<Gf2>::from_u32(2, 2, &[0, 0, 1, 0]);
        // image of f not in ker J
        let f = Matrix::from_u32(2, 1, &[1, 0]);
        assert!(matches!(
            MatObject::new(j.clone(), f),
            Err(Error::MalformedObject(_))
        ));
        assert!(matches!(
            MatObject::new(Matrix::<Gf2>::identity(1), Matrix::zeros(1, 0)),
            Err(Error::NotNilpotent { .. })
        ));
        assert!(MatObject::new(j, Matrix::from_u32(2, 1, &[0, 1])).is_ok());
    }

    #[test]
    fn hom_space_examples() {
        let dim = |a: &str, b: &str| hom_space(&realize::<Gf2>(&obj(a)), &realize::<Gf2>(&obj(b))).len();
        assert_eq!(dim("P1^3", "P0^2"), 2);
        assert_eq!(dim("P1^0", "P0^4"), 0);
        assert_eq!(dim("P0^1+P1^1", "P0^1+P1^1"), 3);
    }

    #[test]
    fn hom_space_elements_are_morphisms() {
        let m = realize::<Gf3>(&obj("P1^2+P0^1+P1^0"));
        let n = realize::<Gf3>(&obj("P1^3+P1^1"));
        for mor in hom_space(&m, &n) {
            assert_eq!(&mor.phi2 * m.j(), n.j() * &mor.phi2);
            assert_eq!(&mor.phi2 * m.f(), n.f() * &mor.phi1);
        }
    }

    #[test]
    fn extensions_of_free_by_point() {
        let cfg = OracleConfig::default();
        let exts = all_extensions::<Gf2>(&obj("P1^0"), &obj("P0^1"), &cfg).unwrap();
        assert_eq!(exts, [obj("P1^1"), obj("P0^1+P1^0")].into_iter().collect());
        let exts = all_extensions::<Gf2>(&obj("P0^1"), &obj("P0^1"), &cfg).unwrap();
        assert!(exts.contains(&obj("P0^2")));
        assert!(exts.contains(&obj("P0^1+P0^1")));
    }

    #[test]
    fn brute_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(
            brute_generic_ext::<Gf2>(&obj("P1^0"), &obj("P0^1"), &cfg).unwrap(),
            obj("P1^1")
        );
        assert_eq!(
            brute_generic_ext::<Gf2>(&obj("P1^0"), &obj("P0^2"), &cfg).unwrap(),
            obj("P1^2")
        );
        let m = obj("P1^2+P0^1");
        assert_eq!(brute_generic_ext::<Gf2>(&H1Object::empty(), &m, &cfg).unwrap(), m);
    }

    #[test]
    fn ext_vanishing_examples() {
        let cfg = OracleConfig::default();
        assert!(check_ext_vanishing::<Gf2>(&obj("P0^2"), &cfg).unwrap());
        assert!(check_ext_vanishing::<Gf2>(&obj("P1^1"), &cfg).unwrap());
        assert!(check_ext_vanishing::<Gf2>(&H1Object::empty(), &cfg).unwrap());
        assert_eq!(
            check_ext_vanishing::<Gf2>(&obj("P1^0"), &cfg),
            Err(Error::NotInS1)
        );
    }

    #[test]
    fn injection_route_examples() {
        let cfg = OracleConfig::default();
        let n = obj("P1^0");
        let m = obj("P0^1");
        assert!(is_extension_by_injection::<Gf2>(&n, &m, &obj("P1^1"), &cfg).unwrap());
        assert!(is_extension_by_injection::<Gf2>(&n, &m, &obj("P0^1+P1^0"), &cfg).unwrap());
        assert!(!is_extension_by_injection::<Gf2>(&n, &m, &obj("P0^2"), &cfg).unwrap());
    }

    #[test]
    fn guards() {
        let cfg = OracleConfig {
            enum_limit: 20,
            size_bound: 3,
        };
        let r = all_extensions::<Gf2>(&obj("P0^2"), &obj("P0^2"), &cfg);
        assert_eq!(r, Err(Error::SizeGuard { b: 4, bound: 3 }));
        let tight = OracleConfig {
            enum_limit: 0,
            size_bound: 6,
        };
        let r = all_extensions::<Gf2>(&obj("P1^0"), &obj("P0^1"), &tight);
        assert!(matches!(r, Err(Error::SearchSpaceTooLarge { .. })));
        let r = is_extension_by_injection::<Gf2>(&obj("P1^0"), &obj("P0^1"), &obj("P1^1"), &tight);
        assert!(matches!(r, Err(Error::SearchSpaceTooLarge { .. })));
    }
}
