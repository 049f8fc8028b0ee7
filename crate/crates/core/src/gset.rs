//! Finite left G-sets: the permutation part `rho: G -> Sym(S)` of a
//! 2-representation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::permgrp::{CosetReps, Perm, PermGroup, Subgroup};

/// A validated left action of an enumerated group on `{0, .., size-1}`.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<PermGroup>,
    size: usize,
    // action[g * size + s] = g.s
    action: Vec<u32>,
}

impl PartialEq for GSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.action == other.action && self.group == other.group
    }
}

impl GSet {
    /// Validates `table[g][s] = g.s` against the action axioms.
    pub fn from_action(group: Arc<PermGroup>, size: usize, table: &[Vec<usize>]) -> Result<Self> {
        let n = group.order();
        if table.len() != n {
            return Err(Error::validation(format!(
                "action table has {} rows but the group has {n} elements",
                table.len()
            )));
        }
        let mut action = Vec::with_capacity(n * size);
        for (g, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::validation(format!(
                    "action row {g} has length {} but the set has {size} points",
                    row.len()
                )));
            }
            let mut seen = vec![false; size];
            for (s, &t) in row.iter().enumerate() {
                if t >= size || seen[t] {
                    return Err(Error::validation(format!(
                        "action of element {g} is not a bijection (point {s} -> {t})"
                    )));
                }
                seen[t] = true;
                action.push(t as u32);
            }
        }
        let set = GSet {
            group,
            size,
            action,
        };
        set.check_axioms()?;
        Ok(set)
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.group.order();
        for s in 0..self.size {
            if self.act(0, s) != s {
                return Err(Error::validation(format!(
                    "identity axiom fails: 1.{s} = {}",
                    self.act(0, s)
                )));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = self.group.mul(g, h);
                for s in 0..self.size {
                    if self.act(g, self.act(h, s)) != self.act(gh, s) {
                        return Err(Error::validation(format!(
                            "compatibility axiom fails at (g,h,s) = ({g},{h},{s})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn from_fn(group: Arc<PermGroup>, size: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let n = group.order();
        let mut action = Vec::with_capacity(n * size);
        for g in 0..n {
            for s in 0..size {
                action.push(f(g, s) as u32);
            }
        }
        GSet {
            group,
            size,
            action,
        }
    }

    /// `size` points, every element acting as the identity.
    pub fn trivial(group: Arc<PermGroup>, size: usize) -> Self {
        Self::from_fn(group, size, |_, s| s)
    }

    pub fn point(group: Arc<PermGroup>) -> Self {
        Self::trivial(group, 1)
    }

    pub fn empty(group: Arc<PermGroup>) -> Self {
        Self::trivial(group, 0)
    }

    /// Left multiplication of the group on its own element indices.
    pub fn regular(group: Arc<PermGroup>) -> Self {
        let g2 = group.clone();
        Self::from_fn(group.clone(), group.order(), move |g, s| g2.mul(g, s))
    }

    /// The defining action on the group's `degree` points.
    pub fn natural(group: Arc<PermGroup>) -> Self {
        let g2 = group.clone();
        Self::from_fn(group.clone(), group.degree(), move |g, s| g2.element(g).apply(s))
    }

    /// Left cosets `G/H` labeled by the positions of `reps`.
    pub fn cosets(group: Arc<PermGroup>, reps: &CosetReps) -> Self {
        let g2 = group.clone();
        let r = reps.clone();
        Self::from_fn(group, reps.index(), move |g, j| {
            r.coset_of(g2.mul(g, r.reps()[j]))
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, g: usize, s: usize) -> usize {
        self.action[g * self.size + s] as usize
    }

    /// Action table rows in element order, as serialized.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.group.order())
            .map(|g| (0..self.size).map(|s| self.act(g, s)).collect())
            .collect()
    }

    pub fn perm_of(&self, g: usize) -> Perm {
        Perm::new((0..self.size).map(|s| self.act(g, s)).collect()).expect("action row")
    }

    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.size).filter(|&s| self.act(g, s) == s).collect()
    }

    pub fn stabilizer(&self, s: usize) -> Subgroup {
        let members: Vec<usize> = (0..self.group.order())
            .filter(|&g| self.act(g, s) == s)
            .collect();
        Subgroup::new(self.group.clone(), &members).expect("stabilizers are subgroups")
    }

    pub fn orbit(&self, s: usize) -> Vec<usize> {
        let mut pts: Vec<usize> = (0..self.group.order()).map(|g| self.act(g, s)).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// Orbits in order of least point, each with base point its least point.
    pub fn orbits_with_stabilizers(&self) -> OrbitDecomposition {
        let mut point_to_orbit = vec![usize::MAX; self.size];
        let mut orbits = Vec::new();
        for s in 0..self.size {
            if point_to_orbit[s] != usize::MAX {
                continue;
            }
            let points = self.orbit(s);
            for &p in &points {
                point_to_orbit[p] = orbits.len();
            }
            orbits.push(Orbit {
                points,
                base: s,
                stabilizer: self.stabilizer(s),
            });
        }
        OrbitDecomposition {
            orbits,
            point_to_orbit,
        }
    }

    fn check_same_group(&self, other: &GSet) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch("G-sets over different groups".into()));
        }
        Ok(())
    }

    /// Disjoint union, `self` first.
    pub fn sum(&self, other: &GSet) -> Result<GSet> {
        self.check_same_group(other)?;
        let n = self.size;
        Ok(Self::from_fn(self.group.clone(), n + other.size, |g, s| {
            if s < n {
                self.act(g, s)
            } else {
                n + other.act(g, s - n)
            }
        }))
    }

    /// Diagonal action on pairs `(i, i')` labeled `i * |other| + i'`.
    pub fn product(&self, other: &GSet) -> Result<GSet> {
        self.check_same_group(other)?;
        let m = other.size;
        Ok(Self::from_fn(self.group.clone(), self.size * m, |g, s| {
            self.act(g, s / m) * m + other.act(g, s % m)
        }))
    }

    /// Transports the action along the bijection `f`: the new action is
    /// `f rho_g f^-1`.
    pub fn relabel(&self, f: &Perm) -> Result<GSet> {
        if f.degree() != self.size {
            return Err(Error::Dimension(format!(
                "relabeling permutation has degree {} for a set of {} points",
                f.degree(),
                self.size
            )));
        }
        let finv = f.inverse();
        Ok(Self::from_fn(self.group.clone(), self.size, |g, s| {
            f.apply(self.act(g, finv.apply(s)))
        }))
    }

    /// The sub-G-set on a union of orbits, points renumbered in the order given.
    pub fn restrict(&self, points: &[usize]) -> Result<GSet> {
        let mut pos = vec![usize::MAX; self.size];
        for (k, &p) in points.iter().enumerate() {
            pos[p] = k;
        }
        for &p in points {
            for g in 0..self.group.order() {
                if pos[self.act(g, p)] == usize::MAX {
                    return Err(Error::validation("restriction to a non-invariant subset"));
                }
            }
        }
        Ok(Self::from_fn(self.group.clone(), points.len(), |g, k| {
            pos[self.act(g, points[k])]
        }))
    }
}

/// One orbit with its base point and the base point's stabilizer.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<usize>,
    pub base: usize,
    pub stabilizer: Subgroup,
}

#[derive(Clone, Debug)]
pub struct OrbitDecomposition {
    pub orbits: Vec<Orbit>,
    pub point_to_orbit: Vec<usize>,
}

/// `G x_H S`, labeled `(r_i, s) -> i * |S| + s`.
///
/// `g.(r_j, s) = (r_i, h.s)` where `g r_j = r_i h`. Returns the G-set and the
/// label of each point.
pub fn induced_gset(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    s_h: &GSet,
    reps: &CosetReps,
) -> Result<(GSet, Vec<(usize, usize)>)> {
    if h.ambient().as_ref() != g.as_ref() {
        return Err(Error::GroupMismatch("subgroup of a different group".into()));
    }
    if s_h.group().as_ref() != h.as_group().as_ref() {
        return Err(Error::GroupMismatch(
            "the H-set is not over the given subgroup".into(),
        ));
    }
    if reps.subgroup_members() != h.members() || reps.index() * h.order() != g.order() {
        return Err(Error::validation("coset representatives do not match the subgroup"));
    }
    let m = s_h.size();
    let set = GSet::from_fn(g.clone(), reps.index() * m, |x, label| {
        let (j, s) = (label / m, label % m);
        let (i, hh) = coset_step(g, h, reps, x, j);
        i * m + s_h.act(hh, s)
    });
    let labels = (0..reps.index())
        .flat_map(|i| (0..m).map(move |s| (i, s)))
        .collect();
    Ok((set, labels))
}

/// For `x r_j = r_i h`, returns `(i, local index of h)`.
pub(crate) fn coset_step(
    g: &PermGroup,
    h: &Subgroup,
    reps: &CosetReps,
    x: usize,
    j: usize,
) -> (usize, usize) {
    let y = g.mul(x, reps.reps()[j]);
    let i = reps.coset_of(y);
    let hh = g.mul(g.inv(reps.reps()[i]), y);
    (i, h.local_index(hh).expect("r_i^-1 x r_j lies in H"))
}
