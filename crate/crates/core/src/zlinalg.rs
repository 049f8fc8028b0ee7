//! Exact integer linear algebra: Smith normal form and the two solvers built
//! on it.
//!
//! The elimination runs on `i128` with checked arithmetic and restarts on
//! `BigInt` if any intermediate overflows, so results are always exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} for a matrix with {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    /// Bareiss fraction-free determinant of a square matrix.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = v / &prev;
                }
            }
            prev = m[k * n + k].clone();
        }
        Ok(sign * &m[n * n - 1])
    }

    fn to_i128(&self) -> Option<Vec<i128>> {
        self.entries.iter().map(|x| x.to_i128()).collect()
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `D`, length `min(rows, cols)`, each dividing the next,
    /// zeros last.
    pub divisors: Vec<BigInt>,
    pub rank: usize,
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let red = SmithReduction::new(a, true, true);
    let (rows, cols) = (a.rows, a.cols);
    let mut u = IntMatrix::identity(rows);
    for j in 0..rows {
        let mut col: Vec<BigInt> = (0..rows).map(|i| u.get(i, j).clone()).collect();
        red.apply_u(&mut col);
        for (i, x) in col.into_iter().enumerate() {
            u.set(i, j, x);
        }
    }
    let mut v = IntMatrix::zeros(cols, cols);
    let vm = red.v.as_ref().expect("tracked");
    for i in 0..cols {
        for j in 0..cols {
            v.set(i, j, vm[i * cols + j].clone());
        }
    }
    let mut d = IntMatrix::zeros(rows, cols);
    let mut divisors = vec![BigInt::zero(); rows.min(cols)];
    for (t, x) in red.diag.iter().enumerate() {
        d.set(t, t, x.clone());
        divisors[t] = x.clone();
    }
    SnfResult {
        u,
        d,
        v,
        divisors,
        rank: red.rank(),
    }
}

/// Solves `A x = v (mod k)`, returning a solution reduced into `[0, k)`.
pub fn solve_mod(a: &IntMatrix, v: &[BigInt], k: &BigInt) -> Result<Option<Vec<BigInt>>> {
    if v.len() != a.rows {
        return Err(Error::Dimension(format!(
            "right-hand side has length {} for {} rows",
            v.len(),
            a.rows
        )));
    }
    if !k.is_positive() {
        return Err(Error::validation("modulus must be at least 1"));
    }
    Ok(SmithReduction::new(a, true, true).solve_mod(v, k))
}

/// Decides whether `A b = d (mod Z^rows)` has a rational solution `b`, and
/// returns one with entries in `[0, 1)` when it does.
pub fn divisible_preimage(a: &IntMatrix, d: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
    if d.len() != a.rows {
        return Err(Error::Dimension(format!(
            "right-hand side has length {} for {} rows",
            d.len(),
            a.rows
        )));
    }
    Ok(SmithReduction::new(a, true, true).divisible_preimage(d))
}

trait Scalar:
    Clone + PartialOrd + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64>
{
}

impl<T> Scalar for T where
    T: Clone + PartialOrd + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul + From<i64>
{
}

#[derive(Debug)]
struct Overflow;

#[derive(Clone, Debug)]
enum RowOp<T> {
    Swap(usize, usize),
    /// `row[target] += factor * row[src]`
    AddMul { target: usize, src: usize, factor: T },
    Negate(usize),
}

/// `x - q * y`, checked.
#[inline]
fn sub_mul<T: Scalar>(x: &T, q: &T, y: &T) -> std::result::Result<T, Overflow> {
    q.checked_mul(y)
        .and_then(|p| x.checked_sub(&p))
        .ok_or(Overflow)
}

/// The outcome of a Smith reduction of `A`: the diagonal, the recorded row
/// operations (which multiply out to `U`), and optionally `V`.
#[derive(Clone, Debug)]
pub struct SmithReduction {
    rows: usize,
    cols: usize,
    diag: Vec<BigInt>,
    ops: Option<Vec<RowOp<BigInt>>>,
    v: Option<Vec<BigInt>>,
}

impl SmithReduction {
    /// Reduces `a`; `track_u` records row operations, `track_v` accumulates
    /// the column transform.
    pub fn new(a: &IntMatrix, track_u: bool, track_v: bool) -> Self {
        if let Some(small) = a.to_i128() {
            if let Ok(r) = Reducer::run(small, a.rows, a.cols, track_u, track_v) {
                return r.into_big();
            }
        }
        Reducer::run(a.entries.clone(), a.rows, a.cols, track_u, track_v)
            .unwrap_or_else(|_| unreachable!("BigInt arithmetic cannot overflow"))
            .into_big()
    }

    /// Same as [`SmithReduction::new`] for a matrix given as `i64` rows.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64], track_u: bool, track_v: bool) -> Self {
        let small: Vec<i128> = entries.iter().map(|&x| x as i128).collect();
        if let Ok(r) = Reducer::run(small, rows, cols, track_u, track_v) {
            return r.into_big();
        }
        let big = entries.iter().map(|&x| BigInt::from(x)).collect();
        Reducer::run(big, rows, cols, track_u, track_v)
            .unwrap_or_else(|_| unreachable!("BigInt arithmetic cannot overflow"))
            .into_big()
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Nonzero diagonal entries of `D`, positive, each dividing the next.
    pub fn diag(&self) -> &[BigInt] {
        &self.diag
    }

    /// Column `j` of `V`.
    pub fn v_column(&self, j: usize) -> Vec<BigInt> {
        let v = self.v.as_ref().expect("column transform was not tracked");
        (0..self.cols).map(|i| v[i * self.cols + j].clone()).collect()
    }

    /// Replaces `w` by `U w`.
    pub fn apply_u(&self, w: &mut [BigInt]) {
        let ops = self.ops.as_ref().expect("row operations were not tracked");
        for op in ops {
            match op {
                RowOp::Swap(a, b) => w.swap(*a, *b),
                RowOp::AddMul {
                    target,
                    src,
                    factor,
                } => {
                    if !w[*src].is_zero() {
                        let add = factor * &w[*src];
                        w[*target] += add;
                    }
                }
                RowOp::Negate(a) => w[*a] = -std::mem::take(&mut w[*a]),
            }
        }
    }

    fn v_times(&self, x: &[BigInt]) -> Vec<BigInt> {
        let v = self.v.as_ref().expect("column transform was not tracked");
        let n = self.cols;
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| !x[j].is_zero())
                    .map(|j| &v[i * n + j] * &x[j])
                    .sum()
            })
            .collect()
    }

    pub fn solve_mod(&self, rhs: &[BigInt], k: &BigInt) -> Option<Vec<BigInt>> {
        let mut y = rhs.to_vec();
        self.apply_u(&mut y);
        let mut x = vec![BigInt::zero(); self.cols];
        for (t, yt) in y.iter().enumerate() {
            if t < self.rank() {
                let d = &self.diag[t];
                let g = d.gcd(k);
                if !yt.is_multiple_of(&g) {
                    return None;
                }
                let km = k / &g;
                let dm = (d / &g).mod_floor(&km);
                let inv = mod_inverse(&dm, &km)?;
                x[t] = ((yt / &g) * inv).mod_floor(&km);
            } else if !yt.is_multiple_of(k) {
                return None;
            }
        }
        Some(
            self.v_times(&x)
                .into_iter()
                .map(|e| e.mod_floor(k))
                .collect(),
        )
    }

    pub fn divisible_preimage(&self, d: &[BigRational]) -> Option<Vec<BigRational>> {
        let l = d
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let mut y: Vec<BigInt> = d.iter().map(|q| q.numer() * (&l / q.denom())).collect();
        self.apply_u(&mut y);
        // rows of D that vanish impose integrality of (U d)_t
        if y[self.rank()..].iter().any(|yt| !yt.is_multiple_of(&l)) {
            return None;
        }
        // b' = (U d)_t / d_t on the rank rows, as a fraction over a common
        // denominator l * lcm(d_t)
        let dl = self.diag.iter().fold(BigInt::one(), |acc, x| acc.lcm(x));
        let den = &l * &dl;
        let mut num = vec![BigInt::zero(); self.cols];
        for t in 0..self.rank() {
            num[t] = &y[t] * (&dl / &self.diag[t]);
        }
        Some(
            self.v_times(&num)
                .into_iter()
                .map(|e| BigRational::new(e.mod_floor(&den), den.clone()))
                .collect(),
        )
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    if !e.gcd.is_one() {
        return None;
    }
    Some(e.x.mod_floor(m))
}

struct Reducer<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
    ops: Option<Vec<RowOp<T>>>,
    v: Option<Vec<T>>,
    rank: usize,
}

impl<T: Scalar> Reducer<T> {
    fn run(
        a: Vec<T>,
        rows: usize,
        cols: usize,
        track_u: bool,
        track_v: bool,
    ) -> std::result::Result<Self, Overflow> {
        let v = track_v.then(|| {
            let mut v = vec![T::zero(); cols * cols];
            for i in 0..cols {
                v[i * cols + i] = T::one();
            }
            v
        });
        let mut r = Reducer {
            rows,
            cols,
            a,
            ops: track_u.then(Vec::new),
            v,
            rank: 0,
        };
        r.reduce()?;
        Ok(r)
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            self.a.swap(i * self.cols + j, k * self.cols + j);
        }
        if let Some(ops) = &mut self.ops {
            ops.push(RowOp::Swap(i, k));
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.rows {
            self.a.swap(i * self.cols + j, i * self.cols + k);
        }
        if let Some(v) = &mut self.v {
            for i in 0..self.cols {
                v.swap(i * self.cols + j, i * self.cols + k);
            }
        }
    }

    /// `row[target] -= q * row[src]` over columns `from..`.
    fn row_sub(&mut self, target: usize, src: usize, q: &T, from: usize) -> std::result::Result<(), Overflow> {
        for j in from..self.cols {
            let y = self.a[src * self.cols + j].clone();
            if y.is_zero() {
                continue;
            }
            let x = &mut self.a[target * self.cols + j];
            *x = sub_mul(x, q, &y)?;
        }
        if let Some(ops) = &mut self.ops {
            ops.push(RowOp::AddMul {
                target,
                src,
                factor: -q.clone(),
            });
        }
        Ok(())
    }

    /// `col[target] -= q * col[src]` over rows `from..`, mirrored into `V`.
    fn col_sub(&mut self, target: usize, src: usize, q: &T, from: usize) -> std::result::Result<(), Overflow> {
        for i in from..self.rows {
            let y = self.a[i * self.cols + src].clone();
            if y.is_zero() {
                continue;
            }
            let x = &mut self.a[i * self.cols + target];
            *x = sub_mul(x, q, &y)?;
        }
        if let Some(v) = &mut self.v {
            for i in 0..self.cols {
                let y = v[i * self.cols + src].clone();
                if y.is_zero() {
                    continue;
                }
                let x = &mut v[i * self.cols + target];
                *x = sub_mul(x, q, &y)?;
            }
        }
        Ok(())
    }

    /// Least absolute nonzero entry of the trailing submatrix, row-major first.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = self.at(i, j);
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().map_or(true, |b| ax < b.2) {
                    let one = ax.is_one();
                    best = Some((i, j, ax));
                    if one {
                        return best.map(|b| (b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }

    fn reduce(&mut self) -> std::result::Result<(), Overflow> {
        let min = self.rows.min(self.cols);
        let mut t = 0;
        while t < min {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.at(t, t).clone();
                let mut dirty = false;
                for i in t + 1..self.rows {
                    let x = self.at(i, t);
                    if x.is_zero() {
                        continue;
                    }
                    let q = x.div_floor(&p);
                    if !q.is_zero() {
                        self.row_sub(i, t, &q, t)?;
                    }
                    dirty |= !self.at(i, t).is_zero();
                }
                for j in t + 1..self.cols {
                    let x = self.at(t, j);
                    if x.is_zero() {
                        continue;
                    }
                    let q = x.div_floor(&p);
                    if !q.is_zero() {
                        self.col_sub(j, t, &q, t)?;
                    }
                    dirty |= !self.at(t, j).is_zero();
                }
                if dirty {
                    // a remainder smaller than the pivot survived; promote it
                    let mut best: Option<(usize, usize, T)> = None;
                    for i in t + 1..self.rows {
                        let x = self.at(i, t);
                        if !x.is_zero() && best.as_ref().map_or(true, |b| x.abs() < b.2) {
                            best = Some((i, t, x.abs()));
                        }
                    }
                    for j in t + 1..self.cols {
                        let x = self.at(t, j);
                        if !x.is_zero() && best.as_ref().map_or(true, |b| x.abs() < b.2) {
                            best = Some((t, j, x.abs()));
                        }
                    }
                    let (bi, bj, _) = best.expect("dirty implies a nonzero remainder");
                    self.swap_rows(t, bi);
                    self.swap_cols(t, bj);
                    continue;
                }
                let bad = (t + 1..self.rows).find(|&i| {
                    (t + 1..self.cols).any(|j| !self.at(i, j).is_multiple_of(&p))
                });
                match bad {
                    Some(i) => {
                        let minus_one = T::from(-1);
                        self.row_sub(t, i, &minus_one, t)?;
                    }
                    None => break,
                }
            }
            if self.at(t, t).is_negative() {
                for j in t..self.cols {
                    let idx = t * self.cols + j;
                    self.a[idx] = -self.a[idx].clone();
                }
                if let Some(ops) = &mut self.ops {
                    ops.push(RowOp::Negate(t));
                }
            }
            t += 1;
        }
        self.rank = t;
        Ok(())
    }
}

trait IntoBig {
    fn into_big(self) -> BigInt;
}

impl IntoBig for i128 {
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl IntoBig for BigInt {
    fn into_big(self) -> BigInt {
        self
    }
}

impl<T: Scalar + IntoBig> Reducer<T> {
    fn into_big(self) -> SmithReduction {
        let cols = self.cols;
        let diag = (0..self.rank)
            .map(|t| self.a[t * cols + t].clone().into_big())
            .collect();
        let ops = self.ops.map(|ops| {
            ops.into_iter()
                .map(|op| match op {
                    RowOp::Swap(a, b) => RowOp::Swap(a, b),
                    RowOp::AddMul {
                        target,
                        src,
                        factor,
                    } => RowOp::AddMul {
                        target,
                        src,
                        factor: factor.into_big(),
                    },
                    RowOp::Negate(a) => RowOp::Negate(a),
                })
                .collect()
        });
        SmithReduction {
            rows: self.rows,
            cols,
            diag,
            ops,
            v: self.v.map(|v| v.into_iter().map(IntoBig::into_big).collect()),
        }
    }
}
