//! Exact elements of `Z[zeta_K]`.
//!
//! A value of order `K` is stored by its coefficients on `1, z, .., z^(phi(K)-1)`
//! with `z = exp(2 pi i / K)`, i.e. reduced modulo the cyclotomic polynomial
//! `Phi_K`. Values of different orders are compared inside `Z[zeta_lcm]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use crate::cohomology::QZ;

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Phi_n`, constant term first.
///
/// `x^n - 1` divided exactly by `Phi_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n > 0);
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        num = divide_exact(&num, &cyclotomic_polynomial(d));
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, p.clone());
    p
}

/// Quotient of `a` by the monic `b`; panics if the remainder is nonzero.
fn divide_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db];
        q[k] = c;
        if c != 0 {
            for (t, &bt) in b.iter().enumerate() {
                rem[k + t] -= c * bt;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    q
}

/// Reduces a polynomial modulo the monic `phi` in place and truncates.
fn reduce_mod(mut p: Vec<i64>, phi: &[i64]) -> Vec<i64> {
    let deg = phi.len() - 1;
    for k in (deg..p.len()).rev() {
        let c = p[k];
        if c != 0 {
            for (t, &pt) in phi.iter().enumerate() {
                p[k - deg + t] -= c * pt;
            }
        }
    }
    p.truncate(deg);
    p.resize(deg, 0);
    p
}

#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u64,
    coeffs: Vec<i64>,
}

impl Cyclo {
    pub fn zero() -> Cyclo {
        Cyclo::from_int(0)
    }

    pub fn from_int(n: i64) -> Cyclo {
        Cyclo {
            order: 1,
            coeffs: vec![n],
        }
    }

    /// `sum_j coeffs[j] z^j` for `z = zeta_K`, any length.
    pub fn from_powers(order: u64, powers: &[i64]) -> Cyclo {
        assert!(order > 0);
        let mut p = vec![0i64; order as usize];
        for (j, &c) in powers.iter().enumerate() {
            p[j % order as usize] += c;
        }
        let phi = cyclotomic_polynomial(order);
        Cyclo {
            order,
            coeffs: reduce_mod(p, &phi),
        }
    }

    /// `exp(2 pi i q)`.
    pub fn root(q: QZ) -> Cyclo {
        Cyclo::from_terms(&[q])
    }

    /// `sum_t exp(2 pi i q_t)` in `Z[zeta_K]`, `K` the lcm of denominators.
    pub fn from_terms(terms: &[QZ]) -> Cyclo {
        let k = terms.iter().fold(1u64, |acc, q| acc.lcm(&q.den()));
        let mut p = vec![0i64; k as usize];
        for q in terms {
            p[(q.num() * (k / q.den())) as usize] += 1;
        }
        Cyclo::from_powers(k, &p)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients on `1, z, .., z^(phi(K)-1)`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The same value in `Z[zeta_target]`; `target` must be a multiple of the
    /// order.
    pub fn embed(&self, target: u64) -> Cyclo {
        assert!(target % self.order == 0, "{target} is not a multiple of {}", self.order);
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut p = vec![0i64; target as usize];
        for (j, &c) in self.coeffs.iter().enumerate() {
            p[j * step] += c;
        }
        Cyclo::from_powers(target, &p)
    }

    fn common(&self, other: &Cyclo) -> (Cyclo, Cyclo) {
        let k = self.order.lcm(&other.order);
        (self.embed(k), other.embed(k))
    }

    pub fn add(&self, other: &Cyclo) -> Cyclo {
        let (a, b) = self.common(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyclo {
            order: a.order,
            coeffs,
        }
    }

    pub fn neg(&self) -> Cyclo {
        self.scale(-1)
    }

    pub fn sub(&self, other: &Cyclo) -> Cyclo {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Cyclo {
        Cyclo {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclo) -> Cyclo {
        let (a, b) = self.common(other);
        let k = a.order as usize;
        let mut p = vec![0i64; k];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                p[(i + j) % k] += x * y;
            }
        }
        Cyclo::from_powers(a.order, &p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as an integer, if it is one.
    pub fn to_int(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Floating-point value `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let k = self.order as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, &c)| {
            let t = std::f64::consts::TAU * j as f64 / k;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    /// Integers print plainly; other values as sums of `E(K)^j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.to_int() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match j {
                0 => String::new(),
                1 => format!("E({})", self.order),
                _ => format!("E({})^{}", self.order, j),
            };
            let mag = c.unsigned_abs();
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            if j == 0 {
                write!(f, "{sign}{mag}")?;
            } else if mag == 1 {
                write!(f, "{sign}{term}")?;
            } else {
                write!(f, "{sign}{mag}*{term}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i128, d: u64) -> QZ {
        QZ::new(n, d)
    }

    /// Naive evaluation of a polynomial at `exp(2 pi i / n)`.
    fn eval_at_root(p: &[i64], n: u64) -> (f64, f64) {
        p.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, &c)| {
            let t = std::f64::consts::TAU * j as f64 / n as f64;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // first coefficient of absolute value 2
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
        for n in 1..=60u64 {
            let p = cyclotomic_polynomial(n);
            let phi = (1..=n).filter(|k| k.gcd(&n) == 1).count();
            assert_eq!(p.len() - 1, phi, "degree of Phi_{n}");
            let (re, im) = eval_at_root(&p, n);
            assert!(re.abs() < 1e-9 && im.abs() < 1e-9, "Phi_{n} at its root");
        }
    }

    #[test]
    fn make_examples() {
        assert_eq!(Cyclo::from_terms(&[QZ::ZERO, QZ::ZERO]).to_int(), Some(2));
        let s = Cyclo::from_terms(&[q(0, 1), q(1, 3), q(2, 3)]);
        assert!(s.is_zero());
        assert_eq!(Cyclo::root(q(1, 2)).to_int(), Some(-1));
        assert_eq!(Cyclo::from_terms(&[]).to_int(), Some(0));
        let i = Cyclo::root(q(1, 4));
        assert_eq!(i.mul(&i).to_int(), Some(-1));
        assert_eq!(i.to_int(), None);
    }

    #[test]
    fn cross_order_equality() {
        assert_eq!(Cyclo::root(q(1, 2)), Cyclo::from_int(-1));
        assert_eq!(Cyclo::root(q(2, 6)), Cyclo::root(q(1, 3)));
        // zeta_6 = -zeta_3^2
        assert_eq!(Cyclo::root(q(1, 6)), Cyclo::root(q(2, 3)).neg());
        assert_ne!(Cyclo::root(q(1, 4)), Cyclo::root(q(3, 4)));
    }

    #[test]
    fn display() {
        assert_eq!(Cyclo::from_int(-3).to_string(), "-3");
        assert_eq!(Cyclo::root(q(1, 3)).to_string(), "E(3)");
        assert_eq!(Cyclo::from_terms(&[q(1, 4), q(1, 4), q(0, 1)]).to_string(), "1+2*E(4)");
        assert_eq!(Cyclo::root(q(2, 3)).to_string(), "-1-E(3)");
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-7 && (a.1 - b.1).abs() < 1e-7
    }

    fn terms() -> impl Strategy<Value = Vec<QZ>> {
        prop::collection::vec((0i128..24, prop::sample::select(vec![1u64, 2, 3, 4, 6, 8, 12])), 0..8)
            .prop_map(|v| v.into_iter().map(|(n, d)| QZ::new(n, d)).collect())
    }

    proptest! {
        #[test]
        fn ring_ops_match_complex_evaluation(a in terms(), b in terms()) {
            let (x, y) = (Cyclo::from_terms(&a), Cyclo::from_terms(&b));
            let naive = |ts: &[QZ]| ts.iter().fold((0.0, 0.0), |(re, im), q| {
                let t = std::f64::consts::TAU * q.num() as f64 / q.den() as f64;
                (re + t.cos(), im + t.sin())
            });
            let (xa, yb) = (naive(&a), naive(&b));
            prop_assert!(close(x.to_complex(), xa));
            prop_assert!(close(x.add(&y).to_complex(), (xa.0 + yb.0, xa.1 + yb.1)));
            let prod = (xa.0 * yb.0 - xa.1 * yb.1, xa.0 * yb.1 + xa.1 * yb.0);
            prop_assert!(close(x.mul(&y).to_complex(), prod));
            let numerically_equal = close(x.to_complex(), y.to_complex());
            prop_assert_eq!(x == y, numerically_equal);
            prop_assert_eq!(x.embed(x.order() * 6), x.clone());
            prop_assert_eq!(x.sub(&x).is_zero(), true);
        }
    }
}
