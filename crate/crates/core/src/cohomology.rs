//! Cochains of a finite group with coefficients in the permutation module
//! `(Q/Z)^S`.
//!
//! A value `q` in `Q/Z` stands for the root of unity `exp(2 pi i q)`, so the
//! multiplicative group `(C^x)^S` is written additively throughout. The group
//! acts on vectors by `(g.v)_i = v_{g^-1 . i}`, and
//!
//! ```text
//! (d b)(g, h)    = g.b(h) - b(gh) + b(g)
//! (d c)(g, h, k) = g.c(h, k) - c(gh, k) + c(g, hk) - c(g, h)
//! ```

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::permgrp::{left_coset_reps, Perm, PermGroup, Subgroup};
use crate::zlinalg::SmithReduction;

/// Default bound on the number of rows of any linear system built here.
pub const DEFAULT_ROW_CAP: usize = 400_000;

/// An element of `Q/Z`, stored as `num/den` with `0 <= num < den` in lowest
/// terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QZ {
    num: u64,
    den: u64,
}

impl Default for QZ {
    fn default() -> Self {
        QZ::ZERO
    }
}

impl QZ {
    pub const ZERO: QZ = QZ { num: 0, den: 1 };

    /// `num/den` reduced modulo 1.
    pub fn new(num: i128, den: u64) -> QZ {
        assert!(den > 0, "zero denominator");
        let d = den as i128;
        let r = num.rem_euclid(d);
        let g = r.gcd(&d);
        QZ {
            num: (r / g) as u64,
            den: (d / g) as u64,
        }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn times(self, k: i64) -> QZ {
        QZ::new(self.num as i128 * k as i128, self.den)
    }

    pub fn to_ratio(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    /// Reduces an arbitrary rational modulo 1.
    pub fn from_ratio(q: &BigRational) -> Result<QZ> {
        let den = q.denom().to_u64().ok_or_else(|| {
            Error::validation(format!("denominator of {q} does not fit in 64 bits"))
        })?;
        let num = q.numer().mod_floor(q.denom()).to_i128().expect("bounded by den");
        Ok(QZ::new(num, den))
    }
}

impl Add for QZ {
    type Output = QZ;
    fn add(self, o: QZ) -> QZ {
        let l = self.den.lcm(&o.den);
        let n = self.num as i128 * (l / self.den) as i128 + o.num as i128 * (l / o.den) as i128;
        QZ::new(n, l)
    }
}

impl AddAssign for QZ {
    fn add_assign(&mut self, o: QZ) {
        *self = *self + o;
    }
}

impl Neg for QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        QZ::new(-(self.num as i128), self.den)
    }
}

impl Sub for QZ {
    type Output = QZ;
    fn sub(self, o: QZ) -> QZ {
        self + (-o)
    }
}

impl std::iter::Sum for QZ {
    fn sum<I: Iterator<Item = QZ>>(iter: I) -> QZ {
        iter.fold(QZ::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for QZ {
    type Err = Error;

    /// Accepts `"p/q"` with any integer `p` and positive `q`, or a bare integer.
    fn from_str(s: &str) -> Result<QZ> {
        let bad = || Error::validation(format!("bad fraction {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i128 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(QZ::new(p, q))
    }
}

/// `(g.v)_i = v_{g^-1 . i}`
pub fn act(g: usize, v: &[QZ], s: &GSet) -> Result<Vec<QZ>> {
    if v.len() != s.size() {
        return Err(Error::Dimension(format!(
            "vector of length {} for a G-set of size {}",
            v.len(),
            s.size()
        )));
    }
    let gi = s.group().inv(g);
    Ok((0..s.size()).map(|i| v[s.act(gi, i)]).collect())
}

/// A map `G -> (Q/Z)^S`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain1 {
    gset: Arc<GSet>,
    values: Vec<QZ>,
}

impl Cochain1 {
    pub fn zero(gset: Arc<GSet>) -> Self {
        let len = gset.group().order() * gset.size();
        Cochain1 {
            gset,
            values: vec![QZ::ZERO; len],
        }
    }

    pub fn from_fn(gset: Arc<GSet>, f: impl Fn(usize, usize) -> QZ) -> Self {
        let (n, m) = (gset.group().order(), gset.size());
        let values = (0..n * m).map(|x| f(x / m, x % m)).collect();
        Cochain1 { gset, values }
    }

    pub fn gset(&self) -> &Arc<GSet> {
        &self.gset
    }

    pub fn get(&self, g: usize) -> &[QZ] {
        let m = self.gset.size();
        &self.values[g * m..(g + 1) * m]
    }

    #[inline]
    pub fn at(&self, g: usize, i: usize) -> QZ {
        self.values[g * self.gset.size() + i]
    }

    pub fn set(&mut self, g: usize, i: usize, q: QZ) {
        let m = self.gset.size();
        self.values[g * m + i] = q;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(QZ::is_zero)
    }

    pub fn neg(&self) -> Cochain1 {
        Cochain1 {
            gset: self.gset.clone(),
            values: self.values.iter().map(|&q| -q).collect(),
        }
    }

    pub fn plus(&self, other: &Cochain1) -> Result<Cochain1> {
        if self.gset != other.gset {
            return Err(Error::GroupMismatch("cochains over different G-sets".into()));
        }
        Ok(Cochain1 {
            gset: self.gset.clone(),
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| a + b).collect(),
        })
    }
}

/// A map `G x G -> (Q/Z)^S`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain2 {
    gset: Arc<GSet>,
    values: Vec<QZ>,
}

impl Cochain2 {
    pub fn zero(gset: Arc<GSet>) -> Self {
        let n = gset.group().order();
        let len = n * n * gset.size();
        Cochain2 {
            gset,
            values: vec![QZ::ZERO; len],
        }
    }

    pub fn from_fn(gset: Arc<GSet>, f: impl Fn(usize, usize, usize) -> QZ) -> Self {
        let (n, m) = (gset.group().order(), gset.size());
        let values = (0..n * n * m)
            .map(|x| f(x / (n * m), (x / m) % n, x % m))
            .collect();
        Cochain2 { gset, values }
    }

    pub fn gset(&self) -> &Arc<GSet> {
        &self.gset
    }

    pub fn get(&self, g: usize, h: usize) -> &[QZ] {
        let (n, m) = (self.gset.group().order(), self.gset.size());
        let base = (g * n + h) * m;
        &self.values[base..base + m]
    }

    #[inline]
    pub fn at(&self, g: usize, h: usize, i: usize) -> QZ {
        let (n, m) = (self.gset.group().order(), self.gset.size());
        self.values[(g * n + h) * m + i]
    }

    pub fn set(&mut self, g: usize, h: usize, i: usize, q: QZ) {
        let (n, m) = (self.gset.group().order(), self.gset.size());
        self.values[(g * n + h) * m + i] = q;
    }

    pub fn values(&self) -> &[QZ] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(QZ::is_zero)
    }

    /// Least common multiple of all value denominators.
    pub fn denominator_lcm(&self) -> u64 {
        self.values.iter().fold(1u64, |acc, q| acc.lcm(&q.den()))
    }

    fn zip_with(&self, other: &Cochain2, f: impl Fn(QZ, QZ) -> QZ) -> Result<Cochain2> {
        if self.gset != other.gset {
            return Err(Error::GroupMismatch("cochains over different G-sets".into()));
        }
        Ok(Cochain2 {
            gset: self.gset.clone(),
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    pub fn plus(&self, other: &Cochain2) -> Result<Cochain2> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn minus(&self, other: &Cochain2) -> Result<Cochain2> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn times(&self, k: i64) -> Cochain2 {
        Cochain2 {
            gset: self.gset.clone(),
            values: self.values.iter().map(|q| q.times(k)).collect(),
        }
    }

    /// Same values viewed over another (equal) G-set handle.
    pub fn with_gset(&self, gset: Arc<GSet>) -> Result<Cochain2> {
        if *gset != *self.gset {
            return Err(Error::GroupMismatch("re-homing a cochain onto a different G-set".into()));
        }
        Ok(Cochain2 {
            gset,
            values: self.values.clone(),
        })
    }

    /// `(f.c)_i = c_{f^-1(i)}`, living over `target`, which must be the
    /// relabeled G-set `f rho f^-1`.
    pub fn transport(&self, f: &Perm, target: Arc<GSet>) -> Result<Cochain2> {
        if f.degree() != self.gset.size() || target.size() != self.gset.size() {
            return Err(Error::Dimension("relabeling of the wrong size".into()));
        }
        let finv = f.inverse();
        Ok(Cochain2::from_fn(target, |g, h, i| self.at(g, h, finv.apply(i))))
    }

    /// Components at `points`, over the sub-G-set `target` on those points.
    pub fn restrict(&self, points: &[usize], target: Arc<GSet>) -> Cochain2 {
        Cochain2::from_fn(target, |g, h, k| self.at(g, h, points[k]))
    }
}

/// `(d b)(g,h) = g.b(h) - b(gh) + b(g)`
pub fn delta1(b: &Cochain1) -> Cochain2 {
    let s = b.gset().clone();
    let g = s.group().clone();
    Cochain2::from_fn(s.clone(), |x, y, i| {
        b.at(y, s.act(g.inv(x), i)) - b.at(g.mul(x, y), i) + b.at(x, i)
    })
}

/// Least `(g, h, k, component)` at which the cocycle identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleFailure {
    pub g: usize,
    pub h: usize,
    pub k: usize,
    pub component: usize,
    pub value: QZ,
}

impl From<CocycleFailure> for Error {
    fn from(f: CocycleFailure) -> Error {
        Error::NotCocycle {
            g: f.g,
            h: f.h,
            k: f.k,
            component: f.component,
            value: f.value.to_string(),
        }
    }
}

/// `(d c)(g,h,k)_i`
#[inline]
fn delta2_at(c: &Cochain2, g: usize, h: usize, k: usize, i: usize) -> QZ {
    let s = c.gset();
    let grp = s.group();
    c.at(h, k, s.act(grp.inv(g), i)) - c.at(grp.mul(g, h), k, i) + c.at(g, grp.mul(h, k), i)
        - c.at(g, h, i)
}

pub fn cocycle_failure(c: &Cochain2) -> Option<CocycleFailure> {
    let n = c.gset().group().order();
    let m = c.gset().size();
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                for i in 0..m {
                    let v = delta2_at(c, g, h, k, i);
                    if !v.is_zero() {
                        return Some(CocycleFailure {
                            g,
                            h,
                            k,
                            component: i,
                            value: v,
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_cocycle(c: &Cochain2) -> bool {
    cocycle_failure(c).is_none()
}

/// Dense integer matrix of `d: C^1 -> C^2` in the coordinates
/// `(g, i) -> g * |S| + i` and `(g, h, i) -> (g * |G| + h) * |S| + i`.
fn coboundary_matrix(s: &GSet) -> (usize, usize, Vec<i64>) {
    let g = s.group();
    let (n, m) = (g.order(), s.size());
    let (rows, cols) = (n * n * m, n * m);
    let mut a = vec![0i64; rows * cols];
    for x in 0..n {
        let xi = g.inv(x);
        for y in 0..n {
            let xy = g.mul(x, y);
            for i in 0..m {
                let r = ((x * n + y) * m + i) * cols;
                a[r + y * m + s.act(xi, i)] += 1;
                a[r + xy * m + i] -= 1;
                a[r + x * m + i] += 1;
            }
        }
    }
    (rows, cols, a)
}

/// Decides `c' - c = d b` over divisible coefficients for many right-hand
/// sides on one G-set, reusing a single Smith reduction.
#[derive(Clone, Debug)]
pub struct CoboundarySolver {
    gset: Arc<GSet>,
    reduction: SmithReduction,
}

impl CoboundarySolver {
    pub fn new(gset: Arc<GSet>) -> Result<Self> {
        Self::with_cap(gset, DEFAULT_ROW_CAP)
    }

    pub fn with_cap(gset: Arc<GSet>, row_cap: usize) -> Result<Self> {
        let n = gset.group().order();
        let rows = n * n * gset.size();
        if rows > row_cap {
            return Err(Error::ResourceCap(format!(
                "coboundary system has {rows} rows, cap is {row_cap}"
            )));
        }
        let (rows, cols, a) = coboundary_matrix(&gset);
        let reduction = SmithReduction::from_i64(rows, cols, &a, true, true);
        Ok(CoboundarySolver { gset, reduction })
    }

    /// A 1-cochain `b` with `d b = diff`, if one exists.
    pub fn preimage(&self, diff: &Cochain2) -> Result<Option<Cochain1>> {
        if diff.gset() != &self.gset {
            return Err(Error::GroupMismatch("right-hand side over another G-set".into()));
        }
        let rhs: Vec<BigRational> = diff.values().iter().map(|q| q.to_ratio()).collect();
        let Some(sol) = self.reduction.divisible_preimage(&rhs) else {
            return Ok(None);
        };
        let values = sol.iter().map(QZ::from_ratio).collect::<Result<Vec<_>>>()?;
        let b = Cochain1 {
            gset: self.gset.clone(),
            values,
        };
        if delta1(&b) != *diff {
            return Err(Error::Internal(
                "coboundary witness failed verification".into(),
            ));
        }
        Ok(Some(b))
    }
}

/// A witness `b` with `d b = c' - c`, or `None` when the classes differ.
pub fn are_cohomologous(c: &Cochain2, c_prime: &Cochain2) -> Result<Option<Cochain1>> {
    if c.gset() != c_prime.gset() {
        return Err(Error::GroupMismatch("cocycles over different G-sets".into()));
    }
    for x in [c, c_prime] {
        if let Some(f) = cocycle_failure(x) {
            return Err(f.into());
        }
    }
    let diff = c_prime.minus(c)?;
    if diff.is_zero() {
        return Ok(Some(Cochain1::zero(c.gset().clone())));
    }
    CoboundarySolver::new(c.gset().clone())?.preimage(&diff)
}

/// Returns `(c + d b, b)` with `c'(1, g) = c'(g, 1) = 0`.
///
/// The shift is `b(1) = -c(1,1)` and `b = 0` elsewhere.
pub fn normalize_cocycle(c: &Cochain2) -> Result<(Cochain2, Cochain1)> {
    if let Some(f) = cocycle_failure(c) {
        return Err(f.into());
    }
    let s = c.gset().clone();
    let mut b = Cochain1::zero(s);
    for i in 0..c.gset().size() {
        b.set(0, i, -c.at(0, 0, i));
    }
    let normalized = c.plus(&delta1(&b))?;
    debug_assert!((0..s_order(c)).all(|g| c_is_normal_at(&normalized, g)));
    Ok((normalized, b))
}

fn s_order(c: &Cochain2) -> usize {
    c.gset().group().order()
}

fn c_is_normal_at(c: &Cochain2, g: usize) -> bool {
    c.get(0, g).iter().chain(c.get(g, 0)).all(QZ::is_zero)
}

/// `H^2(G; (Q/Z)^S)` restricted to classes with `(1/K)Z/Z` representatives.
#[derive(Clone, Debug)]
pub struct H2Group {
    pub modulus: u64,
    /// Elementary divisors greater than one, each dividing the next.
    pub divisors: Vec<u64>,
    /// One normalized cocycle generating each cyclic factor.
    pub representatives: Vec<Cochain2>,
}

impl H2Group {
    pub fn order(&self) -> u64 {
        self.divisors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.divisors.is_empty()
    }

    /// `sum_j coeffs[j] * representatives[j]`.
    pub fn combination(&self, gset: &Arc<GSet>, coeffs: &[i64]) -> Result<Cochain2> {
        let mut c = Cochain2::zero(gset.clone());
        for (r, &k) in self.representatives.iter().zip(coeffs) {
            c = c.plus(&r.times(k))?;
        }
        Ok(c)
    }

    /// Every class once, as coefficient vectors in `[0, d_1) x [0, d_2) x ..`.
    pub fn all_coefficients(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &d in &self.divisors {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d as i64).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// Linear parametrization of normalized 2-cocycles by their values on
/// `X x G x S`, `X` the generators of `G`.
///
/// A normalized cocycle is recovered from those values through
/// `c(xh, k) = x.c(h, k) + c(x, hk) - c(x, h)` along a breadth-first spanning
/// tree of the Cayley graph; a normalized cochain satisfying the cocycle
/// identity for every first argument in `X` satisfies it everywhere. The
/// parameters therefore embed `Z^2` and the remaining identities cut it out.
struct CocycleParams {
    gset: Arc<GSet>,
    params: usize,
    // phi[((w * n + k) * m + i) * params + p]
    phi: Vec<i64>,
    // the constraint system: rows x params
    constraints: Vec<i64>,
    constraint_rows: usize,
}

impl CocycleParams {
    fn build(gset: Arc<GSet>, row_cap: usize) -> Result<Self> {
        let g = gset.group().clone();
        let (n, m) = (g.order(), gset.size());
        let gens: Vec<usize> = g.generators().to_vec();
        let xs = gens.len();
        let params = xs * (n - 1) * m;
        let total_rows = n * n * m;
        if total_rows.max(xs * (n - 1) * (n - 1) * m) > row_cap {
            return Err(Error::ResourceCap(format!(
                "cocycle system for |G| = {n}, |S| = {m} exceeds the cap of {row_cap} rows"
            )));
        }
        let mut phi = vec![0i64; total_rows * params];
        let row = |w: usize, k: usize, i: usize| ((w * n + k) * m + i) * params;

        let mut defined = vec![false; n];
        defined[0] = true;
        for (xp, &x) in gens.iter().enumerate() {
            for k in 1..n {
                for i in 0..m {
                    phi[row(x, k, i) + (xp * (n - 1) + (k - 1)) * m + i] = 1;
                }
            }
            defined[x] = true;
        }
        let mut order = vec![0usize];
        let mut parent = vec![(0usize, 0usize); n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let h = order[head];
            head += 1;
            for &x in &gens {
                let w = g.mul(x, h);
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = (x, h);
                    order.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Internal("generators do not generate the group".into()));
        }
        for &w in &order[1..] {
            if defined[w] {
                continue;
            }
            let (x, h) = parent[w];
            let xinv = g.inv(x);
            for k in 1..n {
                let hk = g.mul(h, k);
                for i in 0..m {
                    let dst = row(w, k, i);
                    let a = row(h, k, gset.act(xinv, i));
                    let b = row(x, hk, i);
                    let c = row(x, h, i);
                    for p in 0..params {
                        phi[dst + p] = phi[a + p] + phi[b + p] - phi[c + p];
                    }
                }
            }
            defined[w] = true;
        }

        let mut seen_rows: HashSet<Vec<i64>> = HashSet::new();
        let mut constraints = Vec::new();
        for &x in &gens {
            let xinv = g.inv(x);
            for h in 1..n {
                let xh = g.mul(x, h);
                for k in 1..n {
                    let hk = g.mul(h, k);
                    for i in 0..m {
                        let a = row(h, k, gset.act(xinv, i));
                        let b = row(xh, k, i);
                        let c = row(x, hk, i);
                        let d = row(x, h, i);
                        let r: Vec<i64> = (0..params)
                            .map(|p| phi[a + p] - phi[b + p] + phi[c + p] - phi[d + p])
                            .collect();
                        if r.iter().any(|&v| v != 0) && seen_rows.insert(r.clone()) {
                            constraints.extend_from_slice(&r);
                        }
                    }
                }
            }
        }
        let constraint_rows = seen_rows.len();
        Ok(CocycleParams {
            gset,
            params,
            phi,
            constraints,
            constraint_rows,
        })
    }

    /// The normalized cochain with parameters `num / den`.
    fn cochain(&self, num: &[BigInt], den: u64) -> Cochain2 {
        let p = self.params;
        let small: Vec<i128> = num
            .iter()
            .map(|x| x.mod_floor(&BigInt::from(den)).to_i128().expect("reduced"))
            .collect();
        let values = (0..self.phi.len() / p.max(1))
            .map(|r| {
                let acc: i128 = (0..p)
                    .filter(|&q| self.phi[r * p + q] != 0)
                    .map(|q| (self.phi[r * p + q] as i128 * small[q]).rem_euclid(den as i128))
                    .sum();
                QZ::new(acc, den)
            })
            .collect();
        Cochain2 {
            gset: self.gset.clone(),
            values,
        }
    }

    fn reduce(&self) -> SmithReduction {
        SmithReduction::from_i64(
            self.constraint_rows,
            self.params,
            &self.constraints,
            false,
            true,
        )
    }
}

/// Computes `H^2(G; (Q/Z)^S)` (classes with `(1/K)Z/Z` representatives; the
/// default `K = |G|` reaches every class).
pub fn h2_compute(s: &Arc<GSet>, modulus: Option<u64>) -> Result<H2Group> {
    h2_compute_capped(s, modulus, DEFAULT_ROW_CAP)
}

pub fn h2_compute_capped(s: &Arc<GSet>, modulus: Option<u64>, row_cap: usize) -> Result<H2Group> {
    let n = s.group().order();
    let k = modulus.unwrap_or(n as u64);
    if k == 0 {
        return Err(Error::validation("modulus must be at least 1"));
    }
    if n == 1 || s.size() == 0 {
        return Ok(H2Group {
            modulus: k,
            divisors: vec![],
            representatives: vec![],
        });
    }
    let params = CocycleParams::build(s.clone(), row_cap)?;
    let red = params.reduce();
    let kk = BigInt::from(k);
    let mut divisors = Vec::new();
    let mut representatives = Vec::new();
    for (t, e) in red.diag().iter().enumerate() {
        let g = e.gcd(&kk).to_u64().expect("divides K");
        if g > 1 {
            let rep = params.cochain(&red.v_column(t), g);
            if let Some(f) = cocycle_failure(&rep) {
                return Err(Error::Internal(format!(
                    "H^2 representative is not a cocycle: {:?}",
                    f
                )));
            }
            divisors.push(g);
            representatives.push(rep);
        }
    }
    Ok(H2Group {
        modulus: k,
        divisors,
        representatives,
    })
}

/// Generators of the group of normalized cocycles with values in
/// `(1/K)Z/Z`.
pub fn normalized_cocycle_generators(s: &Arc<GSet>, modulus: u64) -> Result<Vec<Cochain2>> {
    if s.group().order() == 1 || s.size() == 0 {
        return Ok(vec![]);
    }
    let params = CocycleParams::build(s.clone(), DEFAULT_ROW_CAP)?;
    let red = params.reduce();
    let kk = BigInt::from(modulus);
    let mut out = Vec::new();
    for t in 0..params.params {
        let den = match red.diag().get(t) {
            Some(e) => e.gcd(&kk).to_u64().expect("divides K"),
            None => modulus,
        };
        if den > 1 {
            out.push(params.cochain(&red.v_column(t), den));
        }
    }
    Ok(out)
}

/// Divisor lists of `H^2(H; Q/Z)` and `H^2(G; (Q/Z)^{G/H})`, which agree by
/// Shapiro's lemma.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapiroReport {
    pub agree: bool,
    pub subgroup_divisors: Vec<u64>,
    pub induced_divisors: Vec<u64>,
}

pub fn shapiro_compare(g: &Arc<PermGroup>, h: &Subgroup) -> Result<ShapiroReport> {
    let point = Arc::new(GSet::point(h.as_group()));
    let reps = left_coset_reps(g, h)?;
    let cosets = Arc::new(GSet::cosets(g.clone(), &reps));
    let sub = h2_compute(&point, None)?;
    let ind = h2_compute(&cosets, None)?;
    Ok(ShapiroReport {
        agree: sub.divisors == ind.divisors,
        subgroup_divisors: sub.divisors,
        induced_divisors: ind.divisors,
    })
}
