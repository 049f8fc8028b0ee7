#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use twochar::cohomology::{delta1, h2_compute, Cochain1, Cochain2, QZ};
use twochar::permgrp::{left_coset_reps, NamedGroup, Perm, PermGroup};
use twochar::{GSet, TwoRep};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn named(spec: &str) -> Arc<PermGroup> {
    Arc::new(PermGroup::named(&NamedGroup::parse(spec).unwrap()).unwrap())
}

/// Quaternion group by left multiplication on `+-1, +-i, +-j, +-k`,
/// point `4 s + u` for sign `s` and unit `u` in `1, i, j, k`.
pub fn quaternion() -> Arc<PermGroup> {
    // unit products: (sign, unit)
    let table = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let left = |u: usize| {
        Perm::new(
            (0..8)
                .map(|p| {
                    let (s, v) = (p / 4, p % 4);
                    let (s2, w) = table[u][v];
                    ((s + s2) % 2) * 4 + w
                })
                .collect(),
        )
        .unwrap()
    };
    Arc::new(PermGroup::from_generators(&[left(1), left(2)], 8).unwrap())
}

pub fn alternating4() -> Arc<PermGroup> {
    let a = Perm::from_cycles("(012)", 4).unwrap();
    let b = Perm::from_cycles("(01)(23)", 4).unwrap();
    Arc::new(PermGroup::from_generators(&[a, b], 4).unwrap())
}

/// Every corpus group with a short name.
pub fn corpus_groups() -> Vec<(String, Arc<PermGroup>)> {
    let mut out: Vec<(String, Arc<PermGroup>)> = vec![("trivial".into(), named("cyclic:1"))];
    for n in 2..=8 {
        out.push((format!("C{n}"), named(&format!("cyclic:{n}"))));
    }
    out.push(("V4".into(), named("klein4")));
    out.push(("S3".into(), named("symmetric:3")));
    out.push(("D4".into(), named("dihedral:4")));
    out.push(("Q8".into(), quaternion()));
    out.push(("C2xC4".into(), named("cyclic:2*cyclic:4")));
    out.push(("C2^3".into(), named("klein4*cyclic:2")));
    out.push(("A4".into(), alternating4()));
    out.push(("D6".into(), named("dihedral:6")));
    out
}

/// Point, natural, regular and proper nontrivial coset sets, without
/// repeats.
pub fn corpus_gsets(g: &Arc<PermGroup>) -> Vec<(String, Arc<GSet>)> {
    let mut out: Vec<(String, Arc<GSet>)> = Vec::new();
    let mut push = |name: String, s: GSet| {
        if !out.iter().any(|(_, t)| **t == s) {
            out.push((name, Arc::new(s)));
        }
    };
    push("point".into(), GSet::point(g.clone()));
    push("natural".into(), GSet::natural(g.clone()));
    push("regular".into(), GSet::regular(g.clone()));
    for h in g.subgroup_classes() {
        if h.order() == 1 || h.order() == g.order() {
            continue;
        }
        let reps = left_coset_reps(g, &h).unwrap();
        push(format!("G/H{}", h.order()), GSet::cosets(g.clone(), &reps));
    }
    out
}

/// Zero cocycle, each H^2 representative and, with two or more factors,
/// their sum.
pub fn cocycles_for(s: &Arc<GSet>) -> Vec<(String, Cochain2)> {
    let h = h2_compute(s, None).unwrap();
    let mut out = vec![("zero".to_string(), Cochain2::zero(s.clone()))];
    for (k, r) in h.representatives.iter().enumerate() {
        out.push((format!("rep{k}/{}", h.divisors[k]), r.clone()));
    }
    if h.representatives.len() >= 2 {
        let ones = vec![1; h.divisors.len()];
        out.push(("sum".into(), h.combination(s, &ones).unwrap()));
    }
    out
}

pub struct CorpusRep {
    pub label: String,
    pub rep: TwoRep,
}

pub fn corpus_reps() -> Vec<CorpusRep> {
    let mut out = Vec::new();
    for (gname, g) in corpus_groups() {
        for (sname, s) in corpus_gsets(&g) {
            for (cname, c) in cocycles_for(&s) {
                out.push(CorpusRep {
                    label: format!("{gname}/{sname}/{cname}"),
                    rep: TwoRep::new(s.clone(), c).unwrap(),
                });
            }
        }
    }
    out
}

pub fn random_qz(rng: &mut impl Rng) -> QZ {
    let d = *[1u64, 2, 3, 4, 6, 8, 12, 24].choose(rng).unwrap();
    QZ::new(rng.gen_range(0..d) as i128, d)
}

pub fn random_cochain1(s: &Arc<GSet>, rng: &mut impl Rng) -> Cochain1 {
    let (n, m) = (s.group().order(), s.size());
    let vals: Vec<QZ> = (0..n * m).map(|_| random_qz(rng)).collect();
    Cochain1::from_fn(s.clone(), |g, i| vals[g * m + i])
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::new(v).unwrap()
}

/// `R` relabeled by a random `f` and shifted by a random coboundary.
pub fn random_equivalent(r: &TwoRep, rng: &mut impl Rng) -> TwoRep {
    let f = random_perm(r.dim(), rng);
    let moved = r.relabel(&f).unwrap();
    let b = random_cochain1(moved.gset(), rng);
    moved.shift(&b).unwrap()
}

/// Coboundary-shifted copy on the same G-set.
pub fn random_shift(r: &TwoRep, rng: &mut impl Rng) -> TwoRep {
    let b = random_cochain1(r.gset(), rng);
    r.shift(&b).unwrap()
}

/// `|H^2(G; Q/Z)|` restricted to `(1/N)Z/Z` classes, by enumeration: the
/// number of normalized `Z/N` cocycles over the number of distinct normalized
/// coboundaries `d b` of cochains `b` with values in `(1/(N|G|))Z/Z` that land in
/// `(1/N)Z/Z`.
pub fn brute_force_h2_order(g: &PermGroup, modulus: u64) -> u64 {
    let n = g.order();
    if n == 1 {
        return 1;
    }
    let nm = modulus as i64;
    // normalized cocycles: c(g,h) for g,h != 1, stored in z[g][h]
    let vars: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut c = vec![vec![0i64; n]; n];
    let mut assigned = vec![vec![false; n]; n];
    for x in 0..n {
        assigned[0][x] = true;
        assigned[x][0] = true;
    }
    fn holds(g: &PermGroup, c: &[Vec<i64>], a: &[Vec<bool>], m: i64, x: usize, y: usize) -> bool {
        // every identity involving (x, y) whose four entries are known
        let n = g.order();
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let entries = [
                        (q, r),
                        (g.mul(p, q), r),
                        (p, g.mul(q, r)),
                        (p, q),
                    ];
                    if !entries.contains(&(x, y)) {
                        continue;
                    }
                    if entries.iter().all(|&(u, v)| a[u][v]) {
                        let v = c[q][r] - c[g.mul(p, q)][r] + c[p][g.mul(q, r)] - c[p][q];
                        if v.rem_euclid(m) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
    fn dfs(
        g: &PermGroup,
        vars: &[(usize, usize)],
        k: usize,
        c: &mut Vec<Vec<i64>>,
        a: &mut Vec<Vec<bool>>,
        m: i64,
    ) -> u64 {
        if k == vars.len() {
            return 1;
        }
        let (x, y) = vars[k];
        let mut total = 0;
        a[x][y] = true;
        for v in 0..m {
            c[x][y] = v;
            if holds(g, c, a, m, x, y) {
                total += dfs(g, vars, k + 1, c, a, m);
            }
        }
        a[x][y] = false;
        c[x][y] = 0;
        total
    }
    let cocycles = dfs(g, &vars, 0, &mut c, &mut assigned, nm);

    // coboundaries: b(1) = 0, b(x) in Z/(N n), d b must be divisible by n
    let big = nm * n as i64;
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut b = vec![0i64; n];
    let total = (big as u64).pow((n - 1) as u32);
    for code in 0..total {
        let mut t = code;
        for slot in b.iter_mut().skip(1) {
            *slot = (t % big as u64) as i64;
            t /= big as u64;
        }
        let mut db = Vec::with_capacity((n - 1) * (n - 1));
        let mut ok = true;
        for &(x, y) in &vars {
            let v = (b[y] - b[g.mul(x, y)] + b[x]).rem_euclid(big);
            if v % n as i64 != 0 {
                ok = false;
                break;
            }
            db.push(v / n as i64);
        }
        if ok {
            seen.insert(db);
        }
    }
    cocycles / seen.len() as u64
}

/// Index of the element written in cycle notation.
pub fn sym(g: &Arc<PermGroup>, text: &str) -> usize {
    g.index_of(&Perm::from_cycles(text, g.degree()).unwrap()).unwrap()
}

pub fn coboundary_of(s: &Arc<GSet>, rng: &mut impl Rng) -> Cochain2 {
    delta1(&random_cochain1(s, rng))
}
