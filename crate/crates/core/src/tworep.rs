//! 2-representations of a finite group on 2-vector spaces, as classified by a
//! G-set together with a 2-cocycle valued in the permutation module.

use std::collections::HashMap;
use std::sync::Arc;

use crate::cohomology::{cocycle_failure, delta1, Cochain1, Cochain2, CoboundarySolver};
use crate::error::{Error, Result};
use crate::gset::{coset_step, induced_gset, GSet};
use crate::permgrp::{left_coset_reps, CosetReps, Perm, PermGroup, Subgroup};

/// A G-set `S` with a 2-cocycle `c: G x G -> (Q/Z)^S`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoRep {
    gset: Arc<GSet>,
    cocycle: Cochain2,
}

impl TwoRep {
    /// Rejects cochains over another G-set and cochains failing the cocycle
    /// identity.
    pub fn new(gset: Arc<GSet>, cocycle: Cochain2) -> Result<Self> {
        if **cocycle.gset() != *gset {
            return Err(Error::GroupMismatch(
                "cochain is defined over a different G-set".into(),
            ));
        }
        let cocycle = cocycle.with_gset(gset.clone())?;
        if let Some(f) = cocycle_failure(&cocycle) {
            return Err(f.into());
        }
        Ok(TwoRep { gset, cocycle })
    }

    /// The G-set with the zero cocycle.
    pub fn untwisted(gset: Arc<GSet>) -> Self {
        let cocycle = Cochain2::zero(gset.clone());
        TwoRep { gset, cocycle }
    }

    /// The zero-dimensional representation, unit for the direct sum.
    pub fn zero_dim(group: Arc<PermGroup>) -> Self {
        Self::untwisted(Arc::new(GSet::empty(group)))
    }

    /// The one-dimensional representation with the trivial class.
    pub fn trivial(group: Arc<PermGroup>) -> Self {
        Self::untwisted(Arc::new(GSet::point(group)))
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        self.gset.group()
    }

    pub fn gset(&self) -> &Arc<GSet> {
        &self.gset
    }

    pub fn cocycle(&self) -> &Cochain2 {
        &self.cocycle
    }

    pub fn dim(&self) -> usize {
        self.gset.size()
    }

    fn check_group(&self, other: &TwoRep) -> Result<()> {
        if self.group() != other.group() {
            return Err(Error::GroupMismatch(
                "2-representations of different groups".into(),
            ));
        }
        Ok(())
    }

    /// Block sum; the components of `self` come first.
    pub fn direct_sum(&self, other: &TwoRep) -> Result<TwoRep> {
        self.check_group(other)?;
        let gset = Arc::new(self.gset.sum(&other.gset)?);
        let n = self.dim();
        let cocycle = Cochain2::from_fn(gset.clone(), |g, h, i| {
            if i < n {
                self.cocycle.at(g, h, i)
            } else {
                other.cocycle.at(g, h, i - n)
            }
        });
        Ok(TwoRep { gset, cocycle })
    }

    /// Component `(i, i')`, labeled `i * dim(other) + i'`, carries
    /// `c_i + c'_{i'}`.
    pub fn tensor(&self, other: &TwoRep) -> Result<TwoRep> {
        self.check_group(other)?;
        let gset = Arc::new(self.gset.product(&other.gset)?);
        let m = other.dim();
        let cocycle = Cochain2::from_fn(gset.clone(), |g, h, i| {
            self.cocycle.at(g, h, i / m) + other.cocycle.at(g, h, i % m)
        });
        Ok(TwoRep { gset, cocycle })
    }

    /// The representation `f rho f^-1` with cocycle `f.c`.
    pub fn relabel(&self, f: &Perm) -> Result<TwoRep> {
        let gset = Arc::new(self.gset.relabel(f)?);
        let cocycle = self.cocycle.transport(f, gset.clone())?;
        Ok(TwoRep { gset, cocycle })
    }

    /// Same G-set, cocycle `c + d b`.
    pub fn shift(&self, b: &Cochain1) -> Result<TwoRep> {
        if **b.gset() != *self.gset {
            return Err(Error::GroupMismatch("1-cochain over a different G-set".into()));
        }
        let db = delta1(b).with_gset(self.gset.clone())?;
        Ok(TwoRep {
            gset: self.gset.clone(),
            cocycle: self.cocycle.plus(&db)?,
        })
    }

    /// The same action table and cocycle read over `group`, which must have
    /// the same multiplication table under element indices.
    pub fn rebase(&self, group: Arc<PermGroup>) -> Result<TwoRep> {
        let old = self.group();
        let n = old.order();
        if group.order() != n || (0..n).any(|a| (0..n).any(|b| group.mul(a, b) != old.mul(a, b))) {
            return Err(Error::GroupMismatch(
                "groups differ as multiplication tables".into(),
            ));
        }
        let gset = Arc::new(GSet::from_action(group, self.dim(), &self.gset.table())?);
        let c = &self.cocycle;
        let cocycle = Cochain2::from_fn(gset.clone(), |g, h, i| c.at(g, h, i));
        Ok(TwoRep { gset, cocycle })
    }
}

/// `f` and `b` with `rho'_g = f rho_g f^-1` and `d b = c' - f.c`.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceWitness {
    pub f: Perm,
    pub b: Cochain1,
}

impl EquivalenceWitness {
    /// Checks the witness against `R -> R'` from scratch.
    pub fn verify(&self, r: &TwoRep, r_prime: &TwoRep) -> bool {
        let Ok(moved) = r.relabel(&self.f) else {
            return false;
        };
        if *moved.gset != *r_prime.gset || **self.b.gset() != *r_prime.gset {
            return false;
        }
        let Ok(diff) = r_prime.cocycle.minus(&moved.cocycle.with_gset(r_prime.gset.clone()).unwrap())
        else {
            return false;
        };
        delta1(&self.b).values() == diff.values()
    }
}

/// Induction along `reps`, a system of left coset representatives of `H`.
///
/// The point `(r_i, s)` is labeled `i * dim(R_H) + s`. Writing
/// `g1 r_j = r_i h1` and `g2 r_k = r_j h2`, the induced cocycle is
/// `(ind c)_{(r_i, s)}(g1, g2) = c_s(h1, h2)`.
pub fn induce(
    g: &Arc<PermGroup>,
    h: &Subgroup,
    r_h: &TwoRep,
    reps: &CosetReps,
) -> Result<TwoRep> {
    let (set, _) = induced_gset(g, h, r_h.gset(), reps)?;
    let gset = Arc::new(set);
    let m = r_h.dim();
    let n = g.order();
    let idx = reps.index();
    // back[x * idx + i] = (j, h) with x r_j = r_i h
    let mut back = vec![(0usize, 0usize); n * idx];
    for x in 0..n {
        for j in 0..idx {
            let (i, hh) = coset_step(g, h, reps, x, j);
            back[x * idx + i] = (j, hh);
        }
    }
    let cocycle = Cochain2::from_fn(gset.clone(), |g1, g2, label| {
        let (i, s) = (label / m, label % m);
        let (j, h1) = back[g1 * idx + i];
        let (_, h2) = back[g2 * idx + j];
        r_h.cocycle().at(h1, h2, s)
    });
    if let Some(f) = cocycle_failure(&cocycle) {
        return Err(Error::Internal(format!(
            "induced cochain fails the cocycle identity at ({}, {}, {}), component {}",
            f.g, f.h, f.k, f.component
        )));
    }
    Ok(TwoRep { gset, cocycle })
}

/// Induction along the least-index coset representatives.
pub fn induce_default(g: &Arc<PermGroup>, h: &Subgroup, r_h: &TwoRep) -> Result<TwoRep> {
    let reps = left_coset_reps(g, h)?;
    induce(g, h, r_h, &reps)
}

/// One transitive summand: stabilizer `H` of the base point and the
/// one-dimensional `H`-representation `d(h1, h2) = c_base(h1, h2)`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub subgroup: Subgroup,
    pub rep: TwoRep,
}

/// Splits `R` into induced one-dimensional representations, one per orbit.
pub fn decompose(r: &TwoRep) -> Vec<Factor> {
    let orbits = r.gset.orbits_with_stabilizers();
    orbits
        .orbits
        .into_iter()
        .map(|o| {
            let sub = o.stabilizer;
            let hg = sub.as_group();
            let point = Arc::new(GSet::point(hg.clone()));
            let cocycle = Cochain2::from_fn(point.clone(), |a, b, _| {
                r.cocycle.at(sub.ambient_index(a), sub.ambient_index(b), o.base)
            });
            Factor {
                subgroup: sub,
                rep: TwoRep::new(point, cocycle).expect("restriction of a cocycle"),
            }
        })
        .collect()
}

/// `sum_i ind(H_i, d_i)`.
pub fn recompose(g: &Arc<PermGroup>, factors: &[Factor]) -> Result<TwoRep> {
    let mut acc = TwoRep::zero_dim(g.clone());
    for f in factors {
        acc = acc.direct_sum(&induce_default(g, &f.subgroup, &f.rep)?)?;
    }
    Ok(acc)
}

struct OrbitData {
    points: Vec<usize>,
    base: usize,
    stabilizer: Subgroup,
    // the restricted G-set and cocycle
    rep: TwoRep,
}

fn orbit_data(r: &TwoRep) -> Result<Vec<OrbitData>> {
    r.gset
        .orbits_with_stabilizers()
        .orbits
        .into_iter()
        .map(|o| {
            let sub = Arc::new(r.gset.restrict(&o.points)?);
            let c = r.cocycle.restrict(&o.points, sub.clone());
            Ok(OrbitData {
                base: o.base,
                stabilizer: o.stabilizer,
                rep: TwoRep {
                    gset: sub,
                    cocycle: c,
                },
                points: o.points,
            })
        })
        .collect()
}

/// Decides whether `R` and `R'` are equivalent and returns a witness.
///
/// Any `f` must be G-equivariant, so it is assembled orbit by orbit: each
/// orbit of `R'` (in order) is matched with an unused orbit of `R` and a
/// target for that orbit's base point with the same stabilizer. The
/// cohomology condition splits over orbits, so each choice is tested locally
/// and the search backtracks; the first witness in this order is returned.
pub fn are_equivalent(r: &TwoRep, r_prime: &TwoRep) -> Result<Option<EquivalenceWitness>> {
    r.check_group(r_prime)?;
    if r.dim() != r_prime.dim() {
        return Ok(None);
    }
    let g = r.group().clone();
    let src = orbit_data(r)?;
    let dst = orbit_data(r_prime)?;
    if src.len() != dst.len() {
        return Ok(None);
    }
    let mut solvers: HashMap<usize, CoboundarySolver> = HashMap::new();
    let mut memo: HashMap<(usize, usize, usize), Option<(Vec<usize>, Cochain1)>> = HashMap::new();

    // Local test: orbit j of R onto orbit k of R' with base_j -> t.
    // Returns the local map (position in src[j] -> position in dst[k]) and b.
    let mut try_pair = |j: usize, k: usize, t: usize| -> Result<Option<(Vec<usize>, Cochain1)>> {
        if let Some(v) = memo.get(&(j, k, t)) {
            return Ok(v.clone());
        }
        let (o, o2) = (&src[j], &dst[k]);
        let pos2: HashMap<usize, usize> =
            o2.points.iter().enumerate().map(|(p, &x)| (x, p)).collect();
        let mut map = vec![usize::MAX; o.points.len()];
        for (p, &x) in o.points.iter().enumerate() {
            // x = s . base for some s; send it to s . t
            let s = (0..g.order())
                .find(|&s| r.gset.act(s, o.base) == x)
                .expect("orbit point");
            map[p] = pos2[&r_prime.gset.act(s, t)];
        }
        let f = Perm::new(map.clone())?;
        let moved = o.rep.relabel(&f)?;
        let result = if *moved.gset != *o2.rep.gset {
            None
        } else {
            let moved_c = moved.cocycle.with_gset(o2.rep.gset.clone())?;
            let diff = o2.rep.cocycle.minus(&moved_c)?;
            if diff.is_zero() {
                Some((map, Cochain1::zero(o2.rep.gset.clone())))
            } else {
                if !solvers.contains_key(&k) {
                    solvers.insert(k, CoboundarySolver::new(o2.rep.gset.clone())?);
                }
                solvers[&k].preimage(&diff)?.map(|b| (map, b))
            }
        };
        memo.insert((j, k, t), result.clone());
        Ok(result)
    };

    // candidates[k]: (j, t) pairs in search order
    let candidates: Vec<Vec<(usize, usize)>> = dst
        .iter()
        .map(|o2| {
            let mut v = Vec::new();
            for (j, o) in src.iter().enumerate() {
                if o.points.len() != o2.points.len() {
                    continue;
                }
                for &t in &o2.points {
                    if r_prime.gset.stabilizer(t).members() == o.stabilizer.members() {
                        v.push((j, t));
                    }
                }
            }
            v
        })
        .collect();

    let kk = dst.len();
    let mut choice = vec![0usize; kk];
    let mut used = vec![false; src.len()];
    let mut found: Vec<Option<(usize, Vec<usize>, Cochain1)>> = vec![None; kk];
    let mut k = 0usize;
    loop {
        if k == kk {
            break;
        }
        let mut advanced = false;
        while choice[k] < candidates[k].len() {
            let (j, t) = candidates[k][choice[k]];
            choice[k] += 1;
            if used[j] {
                continue;
            }
            if let Some((map, b)) = try_pair(j, k, t)? {
                used[j] = true;
                found[k] = Some((j, map, b));
                advanced = true;
                break;
            }
        }
        if advanced {
            k += 1;
            if k < kk {
                choice[k] = 0;
            }
        } else {
            if k == 0 {
                return Ok(None);
            }
            choice[k] = 0;
            k -= 1;
            let (j, _, _) = found[k].take().expect("assigned");
            used[j] = false;
        }
    }

    let n = r.dim();
    let mut f = vec![usize::MAX; n];
    let mut b = Cochain1::zero(r_prime.gset.clone());
    for (k, entry) in found.into_iter().enumerate() {
        let (j, map, bk) = entry.expect("complete assignment");
        for (p, &x) in src[j].points.iter().enumerate() {
            f[x] = dst[k].points[map[p]];
        }
        for x in 0..g.order() {
            for (p, &y) in dst[k].points.iter().enumerate() {
                b.set(x, y, bk.at(x, p));
            }
        }
    }
    let w = EquivalenceWitness {
        f: Perm::new(f)?,
        b,
    };
    if !w.verify(r, r_prime) {
        return Err(Error::Internal("equivalence witness failed verification".into()));
    }
    Ok(Some(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{are_cohomologous, h2_compute, QZ};
    use crate::permgrp::NamedGroup;

    fn named(s: &str) -> Arc<PermGroup> {
        Arc::new(PermGroup::named(&NamedGroup::parse(s).unwrap()).unwrap())
    }

    fn cosets(g: &Arc<PermGroup>, gens: &str) -> TwoRep {
        let h = Subgroup::from_cycle_string(g.clone(), gens).unwrap();
        let reps = left_coset_reps(g, &h).unwrap();
        TwoRep::untwisted(Arc::new(GSet::cosets(g.clone(), &reps)))
    }

    #[test]
    fn rebase_onto_isomorphic_table() {
        let s3 = named("symmetric:3");
        let h = Subgroup::from_cycle_string(s3.clone(), "(01)").unwrap();
        let r = TwoRep::trivial(named("cyclic:2"));
        let moved = r.rebase(h.as_group()).unwrap();
        assert!(Arc::ptr_eq(moved.group(), &h.as_group()));
        assert!(r.rebase(named("cyclic:3")).is_err());
        let reps = left_coset_reps(&s3, &h).unwrap();
        assert_eq!(induce(&s3, &h, &moved, &reps).unwrap().dim(), 3);
    }

    fn example_pair() -> (TwoRep, TwoRep) {
        let g = named("symmetric:3");
        let reg = TwoRep::untwisted(Arc::new(GSet::regular(g.clone())));
        let triv = TwoRep::trivial(g.clone());
        let rho = reg.direct_sum(&triv).unwrap().direct_sum(&triv).unwrap();
        let c2 = cosets(&g, "(01)");
        let c3 = cosets(&g, "(012)");
        let rho_p = c2.direct_sum(&c2).unwrap().direct_sum(&c3).unwrap();
        (rho, rho_p)
    }

    fn klein_rep() -> TwoRep {
        let g = named("klein4");
        let pt = Arc::new(GSet::point(g.clone()));
        let h = h2_compute(&pt, None).unwrap();
        TwoRep::new(pt, h.representatives[0].clone()).unwrap()
    }

    #[test]
    fn constructor_rejects_non_cocycles() {
        let g = named("symmetric:3");
        let s = Arc::new(GSet::natural(g.clone()));
        assert!(TwoRep::new(s.clone(), Cochain2::zero(s.clone())).is_ok());
        let mut c = Cochain2::zero(s.clone());
        c.set(1, 0, 0, QZ::new(1, 2));
        assert!(matches!(TwoRep::new(s.clone(), c), Err(Error::NotCocycle { .. })));
        let other = Arc::new(GSet::regular(g));
        assert!(matches!(
            TwoRep::new(other, Cochain2::zero(s)),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn sums_and_products() {
        let (rho, rho_p) = example_pair();
        assert_eq!(rho.dim(), 8);
        assert_eq!(rho_p.dim(), 8);
        let z = TwoRep::zero_dim(rho.group().clone());
        assert_eq!(rho.direct_sum(&z).unwrap(), rho);
        let t = TwoRep::trivial(rho.group().clone());
        assert_eq!(rho.tensor(&t).unwrap(), rho);
        assert_eq!(rho.tensor(&rho_p).unwrap().dim(), 64);

        let k = klein_rep();
        let kk = k.tensor(&k).unwrap();
        assert_eq!(kk.dim(), 1);
        let zero = Cochain2::zero(kk.gset().clone());
        assert!(are_cohomologous(kk.cocycle(), &zero).unwrap().is_some());
        assert!(are_cohomologous(k.cocycle(), &zero.with_gset(k.gset().clone()).unwrap())
            .unwrap()
            .is_none());
    }

    #[test]
    fn induction_examples() {
        let g = named("symmetric:3");
        let whole = Subgroup::whole(g.clone());
        let r = TwoRep::untwisted(Arc::new(GSet::natural(whole.as_group())));
        let ind = induce_default(&g, &whole, &r).unwrap();
        assert_eq!(ind.dim(), 3);
        assert!(are_equivalent(&ind, &TwoRep::untwisted(Arc::new(GSet::natural(g.clone()))))
            .unwrap()
            .is_some());

        let c3 = Subgroup::from_cycle_string(g.clone(), "(012)").unwrap();
        let ind = induce_default(&g, &c3, &TwoRep::trivial(c3.as_group())).unwrap();
        assert_eq!(ind.dim(), 2);
        assert!(ind.cocycle().is_zero());

        let one = Subgroup::trivial(g.clone());
        let ind = induce_default(&g, &one, &TwoRep::trivial(one.as_group())).unwrap();
        assert_eq!(*ind.gset().as_ref(), GSet::regular(g.clone()));
    }

    #[test]
    fn induced_twisted_cocycles_are_cocycles() {
        let g = named("dihedral:4");
        let v = Subgroup::from_cycle_string(g.clone(), "(02);(13)").unwrap();
        assert_eq!(v.order(), 4);
        let pt = Arc::new(GSet::point(v.as_group()));
        let h = h2_compute(&pt, None).unwrap();
        assert_eq!(h.divisors, vec![2]);
        let r = TwoRep::new(pt, h.representatives[0].clone()).unwrap();
        let ind = induce_default(&g, &v, &r).unwrap();
        assert_eq!(ind.dim(), 2);
        let back = decompose(&ind);
        assert_eq!(back.len(), 1);
        assert_eq!(back[0].subgroup.members(), v.members());
        assert!(are_cohomologous(back[0].rep.cocycle(), r.cocycle()).unwrap().is_some());
    }

    #[test]
    fn equivalence_examples() {
        let (rho, rho_p) = example_pair();
        let w = are_equivalent(&rho, &rho).unwrap().unwrap();
        assert!(w.f.is_identity() && w.b.is_zero());
        assert!(are_equivalent(&rho, &rho_p).unwrap().is_none());
        assert!(are_equivalent(&rho_p, &rho).unwrap().is_none());

        let f0 = Perm::from_cycles("(0,5,2)(3,7)", 8).unwrap();
        let moved = rho.relabel(&f0).unwrap();
        let w = are_equivalent(&rho, &moved).unwrap().unwrap();
        assert!(w.verify(&rho, &moved));

        let k = klein_rep();
        let f1 = Perm::from_cycles("(01)", 2).unwrap();
        let kk = k.direct_sum(&TwoRep::trivial(k.group().clone())).unwrap();
        let moved = kk.relabel(&f1).unwrap();
        let w = are_equivalent(&kk, &moved).unwrap().unwrap();
        assert_eq!(w.f, f1);
        let other = TwoRep::trivial(k.group().clone())
            .direct_sum(&TwoRep::trivial(k.group().clone()))
            .unwrap();
        assert!(are_equivalent(&kk, &other).unwrap().is_none());
    }

    #[test]
    fn decomposition_examples() {
        let (rho, rho_p) = example_pair();
        let d = decompose(&rho);
        let orders: Vec<usize> = d.iter().map(|f| f.subgroup.order()).collect();
        assert_eq!(orders, vec![1, 6, 6]);
        assert!(d.iter().all(|f| f.rep.cocycle().is_zero()));
        let d2 = decompose(&rho_p);
        let orders: Vec<usize> = d2.iter().map(|f| f.subgroup.order()).collect();
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(sorted, vec![2, 2, 3]);
        for (r, d) in [(&rho, &d), (&rho_p, &d2)] {
            let back = recompose(r.group(), d).unwrap();
            assert!(are_equivalent(r, &back).unwrap().is_some());
        }
        let k = klein_rep();
        let d = decompose(&k);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].subgroup.order(), 4);
        assert_eq!(d[0].rep.cocycle().values(), k.cocycle().values());
    }
}
