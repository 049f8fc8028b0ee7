//! 2-characters: `chi(g, h)` for commuting `g, h`, the trace of conjugation
//! by `g` on the categorical trace of `rho_h`.
//!
//! For a 2-representation with G-set `S` and cocycle `c`,
//!
//! ```text
//! chi(g, h) = sum over i fixed by g and h of
//!             exp 2 pi i (-c_i(g, g^-1) - c_i(1, 1) + c_i(h, g^-1) + c_i(g, h g^-1))
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cohomology::QZ;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::permgrp::{CosetReps, PermGroup, Subgroup};
use crate::tworep::{are_equivalent, induce, TwoRep};

fn check_commuting(g: &PermGroup, x: usize, y: usize) -> Result<()> {
    if x >= g.order() || y >= g.order() {
        return Err(Error::Domain(format!("element index out of range: ({x}, {y})")));
    }
    if !g.commute(x, y) {
        return Err(Error::Domain(format!(
            "elements {x} and {y} do not commute"
        )));
    }
    Ok(())
}

/// `chi(g, h)` by the closed formula.
pub fn two_character(r: &TwoRep, g: usize, h: usize) -> Result<Cyclo> {
    let grp = r.group();
    check_commuting(grp, g, h)?;
    let s = r.gset();
    let c = r.cocycle();
    let gi = grp.inv(g);
    let hgi = grp.mul(h, gi);
    let terms: Vec<QZ> = (0..s.size())
        .filter(|&i| s.act(g, i) == i && s.act(h, i) == i)
        .map(|i| -c.at(g, gi, i) - c.at(0, 0, i) + c.at(h, gi, i) + c.at(g, hgi, i))
        .collect();
    Ok(Cyclo::from_terms(&terms))
}

/// Conjugation by `g` on the categorical trace of `rho_h`, on the basis
/// `e_j`, `j` fixed by `h`: `e_j -> scalar * e_{g.j}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsiMap {
    pub g: usize,
    pub h: usize,
    pub domain: Vec<usize>,
    /// `(j, g.j, scalar)` for each `j` in the domain.
    pub entries: Vec<(usize, usize, QZ)>,
}

impl PsiMap {
    /// Ordinary trace: the scalars on basis vectors sent to themselves.
    pub fn trace(&self) -> Cyclo {
        let terms: Vec<QZ> = self
            .entries
            .iter()
            .filter(|(j, t, _)| j == t)
            .map(|&(_, _, q)| q)
            .collect();
        Cyclo::from_terms(&terms)
    }
}

/// Builds the conjugation map structurally.
///
/// A 2-morphism `a: 1 -> rho_h` supported at `j` is whiskered to
/// `rho_g a rho_{g^-1}`, supported at `i = g.j`, and composed with the
/// structure 2-cells `phi_{g,g^-1}^-1 phi_1^-1` on the source and
/// `phi_{gh, g^-1} (phi_{g,h} rho_{g^-1})` on the target. The resulting
/// scalar is `-c_i(1,1) - c_i(g,g^-1) + c_i(g,h) + c_i(gh,g^-1)`.
pub fn psi_map(r: &TwoRep, g: usize, h: usize) -> Result<PsiMap> {
    let grp = r.group();
    check_commuting(grp, g, h)?;
    let s = r.gset();
    let c = r.cocycle();
    let gi = grp.inv(g);
    let gh = grp.mul(g, h);
    let domain = s.fixed_points(h);
    let entries: Vec<(usize, usize, QZ)> = domain
        .iter()
        .map(|&j| {
            let i = s.act(g, j);
            let q = -c.at(0, 0, i) - c.at(g, gi, i) + c.at(g, h, i) + c.at(gh, gi, i);
            (j, i, q)
        })
        .collect();
    let mut targets: Vec<usize> = entries.iter().map(|e| e.1).collect();
    targets.sort_unstable();
    if targets != domain {
        return Err(Error::Internal(
            "conjugation does not preserve the fixed points of rho_h".into(),
        ));
    }
    Ok(PsiMap {
        g,
        h,
        domain,
        entries,
    })
}

pub fn character_via_psi(r: &TwoRep, g: usize, h: usize) -> Result<Cyclo> {
    Ok(psi_map(r, g, h)?.trace())
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableEntry {
    pub g: usize,
    pub h: usize,
    pub value: Cyclo,
}

/// One value per class of commuting pairs under simultaneous conjugation.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    entries: Vec<TableEntry>,
    // pair -> entry position
    class_of: BTreeMap<(usize, usize), usize>,
}

impl CharacterTable {
    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    /// The value at any commuting pair, looked up through its class.
    pub fn value(&self, g: usize, h: usize) -> Option<&Cyclo> {
        self.class_of.get(&(g, h)).map(|&k| &self.entries[k].value)
    }

    /// Plain-text table, one class per line.
    pub fn to_text(&self) -> String {
        let name = |x: usize| self.group.element(x).to_string();
        let rows: Vec<(String, String, String)> = self
            .entries
            .iter()
            .map(|e| (name(e.g), name(e.h), e.value.to_string()))
            .collect();
        let wg = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(1);
        let wh = rows.iter().map(|r| r.1.len()).max().unwrap_or(0).max(1);
        let mut out = format!("{:<wg$}  {:<wh$}  chi\n", "g", "h");
        for (g, h, v) in rows {
            out.push_str(&format!("{g:<wg$}  {h:<wh$}  {v}\n"));
        }
        out
    }
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.entries == other.entries
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn character_table(r: &TwoRep) -> Result<CharacterTable> {
    let group = r.group().clone();
    let mut entries = Vec::new();
    let mut class_of = BTreeMap::new();
    for (k, class) in group.simultaneous_pair_classes().into_iter().enumerate() {
        let (g, h) = class.rep;
        entries.push(TableEntry {
            g,
            h,
            value: two_character(r, g, h)?,
        });
        for p in class.members {
            class_of.insert(p, k);
        }
    }
    Ok(CharacterTable {
        group,
        entries,
        class_of,
    })
}

/// Outcome of comparing `|H| chi_ind(g, h)` with the conjugate sum.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedCheck {
    pub holds: bool,
    pub pairs_checked: usize,
    /// First failing pair with both sides.
    pub discrepancy: Option<(usize, usize, Cyclo, Cyclo)>,
}

/// Checks `|H| chi_ind(g,h) = sum over s with s^-1 g s, s^-1 h s in H of
/// chi(s^-1 g s, s^-1 h s)` at every commuting pair of `G`.
pub fn induced_character_check(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    r_h: &TwoRep,
    reps: &CosetReps,
) -> Result<InducedCheck> {
    let ind = induce(g, h, r_h, reps)?;
    let order_h = h.order() as i64;
    let pairs = g.commuting_pairs();
    for &(x, y) in &pairs {
        let lhs = two_character(&ind, x, y)?.scale(order_h);
        let mut rhs = Cyclo::zero();
        for s in 0..g.order() {
            let si = g.inv(s);
            let xs = g.mul(g.mul(si, x), s);
            let ys = g.mul(g.mul(si, y), s);
            if let (Some(a), Some(b)) = (h.local_index(xs), h.local_index(ys)) {
                rhs = rhs.add(&two_character(r_h, a, b)?);
            }
        }
        if lhs != rhs {
            return Ok(InducedCheck {
                holds: false,
                pairs_checked: pairs.len(),
                discrepancy: Some((x, y, lhs, rhs)),
            });
        }
    }
    Ok(InducedCheck {
        holds: true,
        pairs_checked: pairs.len(),
        discrepancy: None,
    })
}

/// Dimensions of the vector-space entries of a square 2-matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl DimMatrix {
    pub fn new(n: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "{} entries for a {n} x {n} matrix",
                entries.len()
            )));
        }
        Ok(DimMatrix { n, entries })
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        Self::new(n, rows.concat())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    /// Dimension of the categorical trace, `sum_i F_ii`.
    pub fn trace_dim(&self) -> u64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Block sum.
    pub fn dim_sum(&self, other: &DimMatrix) -> DimMatrix {
        let n = self.n + other.n;
        let mut e = vec![0u64; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                e[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                e[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        DimMatrix { n, entries: e }
    }

    /// Entry `((i,i'), (j,j'))` is `F_ij G_i'j'`, pairs ordered
    /// `(1,1), (1,2), ..`.
    pub fn dim_tensor(&self, other: &DimMatrix) -> DimMatrix {
        let m = other.n;
        let n = self.n * m;
        let entries = (0..n * n)
            .map(|x| {
                let (r, c) = (x / n, x % n);
                self.get(r / m, c / m) * other.get(r % m, c % m)
            })
            .collect();
        DimMatrix { n, entries }
    }
}

/// Untwisted 2-representations sharing a character table without being
/// equivalent, each described as a multiset of transitive G-sets `G/H`.
#[derive(Clone, Debug)]
pub struct CollisionReport {
    /// Representatives of the conjugacy classes of subgroups.
    pub subgroups: Vec<Subgroup>,
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub candidates: usize,
}

/// Default bound on the number of multisets examined.
pub const DEFAULT_COLLISION_CAP: usize = 100_000;

/// `sum over k in multiset of G/H_k` with the zero cocycle.
pub fn rep_from_multiset(
    g: &Arc<PermGroup>,
    subgroups: &[Subgroup],
    multiset: &[usize],
) -> Result<TwoRep> {
    let mut acc = TwoRep::zero_dim(g.clone());
    for &k in multiset {
        let reps = crate::permgrp::left_coset_reps(g, &subgroups[k])?;
        acc = acc.direct_sum(&TwoRep::untwisted(Arc::new(GSet::cosets(g.clone(), &reps))))?;
    }
    Ok(acc)
}

/// Searches all `n`-dimensional untwisted representations for collisions.
pub fn collision_search(g: &Arc<PermGroup>, n: usize, cap: usize) -> Result<CollisionReport> {
    let subgroups = g.subgroup_classes();
    let sizes: Vec<usize> = subgroups.iter().map(|h| g.order() / h.order()).collect();
    let mut multisets = Vec::new();
    let mut cur = Vec::new();
    enumerate_multisets(&sizes, 0, n, &mut cur, &mut multisets, cap)?;

    // group by table, keeping first-seen order
    let mut groups: Vec<(Vec<Cyclo>, Vec<usize>)> = Vec::new();
    let mut reps = Vec::with_capacity(multisets.len());
    for (idx, m) in multisets.iter().enumerate() {
        let r = rep_from_multiset(g, &subgroups, m)?;
        let t: Vec<Cyclo> = character_table(&r)?.entries.into_iter().map(|e| e.value).collect();
        match groups.iter_mut().find(|(k, _)| *k == t) {
            Some((_, v)) => v.push(idx),
            None => groups.push((t, vec![idx])),
        }
        reps.push(r);
    }
    let mut pairs = Vec::new();
    for (_, members) in &groups {
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                if are_equivalent(&reps[x], &reps[y])?.is_none() {
                    pairs.push((multisets[x].clone(), multisets[y].clone()));
                }
            }
        }
    }
    Ok(CollisionReport {
        subgroups,
        pairs,
        candidates: multisets.len(),
    })
}

fn enumerate_multisets(
    sizes: &[usize],
    start: usize,
    remaining: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if remaining == 0 {
        if out.len() >= cap {
            return Err(Error::ResourceCap(format!(
                "more than {cap} candidate G-sets"
            )));
        }
        out.push(cur.clone());
        return Ok(());
    }
    for k in start..sizes.len() {
        if sizes[k] <= remaining {
            cur.push(k);
            enumerate_multisets(sizes, k, remaining - sizes[k], cur, out, cap)?;
            cur.pop();
        }
    }
    Ok(())
}
