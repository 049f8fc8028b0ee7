//! Finite groups realized as fully enumerated permutation groups.
//!
//! Elements are addressed by dense index into the enumerated element list,
//! with index 0 always the identity. Multiplication and inversion are table
//! lookups. Composition follows `(p * q)(x) = p(q(x))`: the right factor acts
//! first, so a group acts on its points from the left.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Default bound on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// A permutation of `{0, .., d-1}` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for (x, &y) in images.iter().enumerate() {
            if y >= d {
                return Err(Error::validation(format!(
                    "permutation image {y} of point {x} is out of range for degree {d}"
                )));
            }
            if seen[y] {
                return Err(Error::validation(format!(
                    "permutation is not injective: {y} is hit twice"
                )));
            }
            seen[y] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `"(012)(3)"` or
    /// `"(0,1,12)"`.
    ///
    /// Inside a cycle, points are separated by commas when present; otherwise
    /// every non-whitespace character is a single-digit point. Whitespace is
    /// ignored everywhere. Points not mentioned are fixed.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in parse_cycles(text)? {
            for &p in &cycle {
                if p >= degree {
                    return Err(Error::validation(format!(
                        "point {p} in cycle string {text:?} exceeds degree {degree}"
                    )));
                }
                if touched[p] {
                    return Err(Error::validation(format!(
                        "point {p} appears twice in cycle string {text:?}"
                    )));
                }
                touched[p] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self * other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Embeds into a larger point set, shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<usize> = (0..degree).collect();
        for (x, &y) in self.images.iter().enumerate() {
            images[x + offset] = y + offset;
        }
        Perm { images }
    }

    /// Non-trivial cycles in order of their least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let wide = self.degree() > 10;
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            if wide {
                write!(f, "({})", parts.join(","))?;
            } else {
                write!(f, "({})", parts.concat())?;
            }
        }
        Ok(())
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(Error::validation(format!(
                "expected '(' in cycle string {text:?}"
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::validation(format!("unclosed cycle in {text:?}")))?;
        let body = &rest[1..close];
        let points: Vec<usize> = if body.contains(',') {
            body.split(',')
                .map(|t| t.trim())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::validation(format!("bad point {t:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::validation(format!("bad point {c:?} in {text:?}")))
                })
                .collect::<Result<_>>()?
        };
        if !points.is_empty() {
            out.push(points);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(out)
}

/// Parses a list of generators separated by `;`, each given in cycle notation.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Perm>> {
    text.split(';')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| Perm::from_cycles(s, degree))
        .collect()
}

/// A finite group of permutations with index-based Cayley tables.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Closure of `gens` under composition, enumerated breadth-first from the
    /// identity, right-multiplying by generators in the order given.
    pub fn from_generators(gens: &[Perm], degree: usize) -> Result<Self> {
        Self::from_generators_capped(gens, degree, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(gens: &[Perm], degree: usize, cap: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::validation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for s in gens {
                let y = elements[x].compose(s);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::ResourceCap(format!(
                            "group order exceeds the cap of {cap} elements"
                        )));
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let mut generators = Vec::new();
        for s in gens {
            let i = index[s];
            if i != 0 && !generators.contains(&i) {
                generators.push(i);
            }
        }
        Ok(Self::from_parts(degree, elements, index, generators))
    }

    /// Builds the tables for an element list already known to be a group with
    /// the identity first.
    fn from_parts(
        degree: usize,
        elements: Vec<Perm>,
        index: HashMap<Perm, usize>,
        generators: Vec<usize>,
    ) -> Self {
        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                let c = index[&elements[a].compose(&elements[b])];
                mul[a * n + b] = c as u32;
                if c == 0 {
                    inv[a] = b as u32;
                }
            }
        }
        PermGroup {
            degree,
            elements,
            index,
            mul,
            inv,
            generators,
        }
    }

    pub fn named(spec: &NamedGroup) -> Result<Self> {
        let (gens, degree) = spec.generators()?;
        Self::from_generators(&gens, degree)
    }

    pub fn trivial() -> Self {
        Self::from_generators(&[], 1).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `s * g * s^-1`
    #[inline]
    pub fn conj(&self, s: usize, g: usize) -> usize {
        self.mul(self.mul(s, g), self.inv(s))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.commute(a, b)))
    }

    /// Conjugacy classes, each sorted, in order of least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for g in 0..n {
            if seen[g] {
                continue;
            }
            let class: BTreeSet<usize> = (0..n).map(|s| self.conj(s, g)).collect();
            for &x in &class {
                seen[x] = true;
            }
            out.push(class.into_iter().collect());
        }
        out
    }

    /// All ordered pairs `(g, h)` with `gh = hg`, lexicographic by index.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        let mut out = Vec::new();
        for g in 0..n {
            for h in 0..n {
                if self.commute(g, h) {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// Orbits of `s.(g, h) = (sgs^-1, shs^-1)` on commuting pairs.
    pub fn simultaneous_pair_classes(&self) -> Vec<PairClass> {
        let n = self.order();
        let mut seen = vec![false; n * n];
        let mut out = Vec::new();
        for (g, h) in self.commuting_pairs() {
            if seen[g * n + h] {
                continue;
            }
            let members: BTreeSet<(usize, usize)> = (0..n)
                .map(|s| (self.conj(s, g), self.conj(s, h)))
                .collect();
            for &(a, b) in &members {
                seen[a * n + b] = true;
            }
            // lexicographic scan: the first unseen pair is the least in its orbit
            out.push(PairClass {
                rep: (g, h),
                members: members.into_iter().collect(),
            });
        }
        out
    }

    /// Every subgroup, sorted by order and then by member list.
    pub fn all_subgroups(self: &Arc<Self>) -> Vec<Subgroup> {
        let n = self.order();
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let mut list: Vec<Vec<usize>> = Vec::new();
        for g in 0..n {
            let c = self.closure(&[g]);
            if found.insert(c.clone()) {
                list.push(c);
            }
        }
        let cyclic = list.clone();
        let mut frontier = list.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &cyclic {
                    if b.iter().all(|x| a.binary_search(x).is_ok()) {
                        continue;
                    }
                    let mut gens = a.clone();
                    gens.extend_from_slice(b);
                    let c = self.closure(&gens);
                    if found.insert(c.clone()) {
                        next.push(c.clone());
                        list.push(c);
                    }
                }
            }
            frontier = next;
        }
        list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        list.into_iter()
            .map(|members| Subgroup::from_sorted(self.clone(), members))
            .collect()
    }

    /// Subgroups up to conjugacy; each class represented by its least member
    /// list, classes in the order of [`PermGroup::all_subgroups`].
    pub fn subgroup_classes(self: &Arc<Self>) -> Vec<Subgroup> {
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut out = Vec::new();
        for h in self.all_subgroups() {
            if seen.contains(h.members()) {
                continue;
            }
            for s in 0..self.order() {
                seen.insert(h.conjugate(s).members().to_vec());
            }
            out.push(h);
        }
        out
    }

    /// Sorted member indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::from([0usize]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set.into_iter().collect()
    }
}

/// One orbit of simultaneous conjugation on commuting pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub rep: (usize, usize),
    pub members: Vec<(usize, usize)>,
}

/// A subgroup of an enumerated permutation group.
///
/// `members` are sorted ambient indices. Viewed as a group in its own right
/// ([`Subgroup::as_group`]) its elements are enumerated in that same order, so
/// local index `k` is ambient index `members[k]`.
#[derive(Clone, Debug)]
pub struct Subgroup {
    ambient: Arc<PermGroup>,
    members: Vec<usize>,
    local: HashMap<usize, usize>,
    group: OnceLock<Arc<PermGroup>>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.ambient == other.ambient
    }
}

impl Subgroup {
    pub fn new(ambient: Arc<PermGroup>, members: &[usize]) -> Result<Self> {
        let mut m: Vec<usize> = members.to_vec();
        m.sort_unstable();
        m.dedup();
        let n = ambient.order();
        if m.iter().any(|&x| x >= n) {
            return Err(Error::validation("subgroup member index out of range"));
        }
        if m.first() != Some(&0) {
            return Err(Error::validation("subgroup does not contain the identity"));
        }
        for &a in &m {
            if m.binary_search(&ambient.inv(a)).is_err() {
                return Err(Error::validation(format!(
                    "subgroup is not closed under inverse at element {a}"
                )));
            }
            for &b in &m {
                if m.binary_search(&ambient.mul(a, b)).is_err() {
                    return Err(Error::validation(format!(
                        "subgroup is not closed under product of {a} and {b}"
                    )));
                }
            }
        }
        Ok(Self::from_sorted(ambient, m))
    }

    fn from_sorted(ambient: Arc<PermGroup>, members: Vec<usize>) -> Self {
        let local = members.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        Subgroup {
            ambient,
            members,
            local,
            group: OnceLock::new(),
        }
    }

    pub fn generated_by(ambient: Arc<PermGroup>, gens: &[usize]) -> Self {
        let members = ambient.closure(gens);
        Self::from_sorted(ambient, members)
    }

    /// Subgroup generated by permutations given in cycle notation.
    pub fn from_cycle_string(ambient: Arc<PermGroup>, text: &str) -> Result<Self> {
        let perms = parse_generators(text, ambient.degree())?;
        let mut gens = Vec::new();
        for p in &perms {
            gens.push(ambient.index_of(p).ok_or_else(|| {
                Error::validation(format!("{p} is not an element of the group"))
            })?);
        }
        Ok(Self::generated_by(ambient, &gens))
    }

    pub fn whole(ambient: Arc<PermGroup>) -> Self {
        let members = (0..ambient.order()).collect();
        Self::from_sorted(ambient, members)
    }

    pub fn trivial(ambient: Arc<PermGroup>) -> Self {
        Self::from_sorted(ambient, vec![0])
    }

    pub fn ambient(&self) -> &Arc<PermGroup> {
        &self.ambient
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.local.contains_key(&g)
    }

    /// Local index of an ambient element, if it lies in the subgroup.
    pub fn local_index(&self, g: usize) -> Option<usize> {
        self.local.get(&g).copied()
    }

    pub fn ambient_index(&self, k: usize) -> usize {
        self.members[k]
    }

    /// `s H s^-1`
    pub fn conjugate(&self, s: usize) -> Subgroup {
        let mut m: Vec<usize> = self.members.iter().map(|&h| self.ambient.conj(s, h)).collect();
        m.sort_unstable();
        Self::from_sorted(self.ambient.clone(), m)
    }

    pub fn is_conjugate_to(&self, other: &Subgroup) -> bool {
        self.order() == other.order()
            && (0..self.ambient.order()).any(|s| self.conjugate(s).members == other.members)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|g| other.contains(*g))
    }

    /// The subgroup as a standalone permutation group, elements in member order.
    pub fn as_group(&self) -> Arc<PermGroup> {
        self.group
            .get_or_init(|| {
                let elements: Vec<Perm> = self
                    .members
                    .iter()
                    .map(|&g| self.ambient.element(g).clone())
                    .collect();
                let index = elements
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (p.clone(), k))
                    .collect();
                let generators = (1..elements.len()).collect();
                let mut g = PermGroup::from_parts(self.ambient.degree(), elements, index, generators);
                g.generators = minimal_generators(&g);
                Arc::new(g)
            })
            .clone()
    }
}

/// A short generating list: greedily add elements not yet generated.
fn minimal_generators(g: &PermGroup) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = g.closure(&gens);
    for x in 1..g.order() {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = g.closure(&gens);
        }
    }
    gens
}

/// Left coset representatives `r_1 = 1, r_2, .., r_m` of `H` in `G`.
#[derive(Clone, Debug, PartialEq)]
pub struct CosetReps {
    subgroup: Vec<usize>,
    reps: Vec<usize>,
    coset_of: Vec<usize>,
}

impl CosetReps {
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// Position of the representative of the coset `gH`.
    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub(crate) fn subgroup_members(&self) -> &[usize] {
        &self.subgroup
    }
}

/// Representatives chosen as least-index elements not yet covered.
pub fn left_coset_reps(g: &PermGroup, h: &Subgroup) -> Result<CosetReps> {
    if h.ambient().as_ref() != g {
        return Err(Error::GroupMismatch(
            "subgroup belongs to a different ambient group".into(),
        ));
    }
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let i = reps.len();
        reps.push(x);
        for &hh in h.members() {
            let y = g.mul(x, hh);
            if coset_of[y] != usize::MAX {
                return Err(Error::validation("subgroup is not closed: cosets overlap"));
            }
            coset_of[y] = i;
        }
    }
    Ok(CosetReps {
        subgroup: h.members().to_vec(),
        reps,
        coset_of,
    })
}

/// Canonical permutation realizations of a few standard groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGroup {
    Cyclic(usize),
    Symmetric(usize),
    Dihedral(usize),
    Klein4,
    Product(Box<NamedGroup>, Box<NamedGroup>),
}

impl NamedGroup {
    /// Parses `cyclic:4`, `symmetric:3`, `dihedral:4`, `klein4`, and products
    /// joined by `*` such as `klein4*cyclic:2`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split('*').map(|s| s.trim()).collect();
        let mut iter = parts.iter();
        let first = Self::parse_atom(iter.next().copied().unwrap_or(""))?;
        iter.try_fold(first, |acc, p| {
            Ok(NamedGroup::Product(Box::new(acc), Box::new(Self::parse_atom(p)?)))
        })
    }

    fn parse_atom(text: &str) -> Result<Self> {
        let (name, param) = match text.split_once(':') {
            Some((a, b)) => {
                let n = b.trim().parse::<usize>().map_err(|_| {
                    Error::validation(format!("bad group parameter in {text:?}"))
                })?;
                (a.trim(), Some(n))
            }
            None => (text.trim(), None),
        };
        Self::from_name(name, param)
    }

    pub fn from_name(name: &str, param: Option<usize>) -> Result<Self> {
        let need = |p: Option<usize>| {
            p.ok_or_else(|| Error::validation(format!("group {name:?} needs a parameter")))
        };
        let g = match name.to_ascii_lowercase().as_str() {
            "cyclic" | "c" | "z" => NamedGroup::Cyclic(need(param)?),
            "symmetric" | "s" | "sym" => NamedGroup::Symmetric(need(param)?),
            "dihedral" | "d" => NamedGroup::Dihedral(need(param)?),
            "klein4" | "v4" => NamedGroup::Klein4,
            other => return Err(Error::UnknownName(format!("group {other:?}"))),
        };
        g.check_range()?;
        Ok(g)
    }

    fn check_range(&self) -> Result<()> {
        match *self {
            NamedGroup::Cyclic(n) if n == 0 => {
                Err(Error::validation("cyclic group needs n >= 1"))
            }
            NamedGroup::Symmetric(n) if n == 0 => {
                Err(Error::validation("symmetric group needs n >= 1"))
            }
            NamedGroup::Dihedral(n) if n < 3 => {
                Err(Error::validation("dihedral group needs n >= 3"))
            }
            _ => Ok(()),
        }
    }

    /// Generators and degree of the canonical realization.
    pub fn generators(&self) -> Result<(Vec<Perm>, usize)> {
        self.check_range()?;
        Ok(match self {
            NamedGroup::Cyclic(n) => {
                let n = *n;
                let gens = if n > 1 {
                    vec![Perm::new((0..n).map(|x| (x + 1) % n).collect())?]
                } else {
                    vec![]
                };
                (gens, n)
            }
            NamedGroup::Symmetric(n) => {
                let n = *n;
                let mut gens = Vec::new();
                if n >= 2 {
                    let mut t: Vec<usize> = (0..n).collect();
                    t.swap(0, 1);
                    gens.push(Perm::new(t)?);
                }
                if n >= 3 {
                    gens.push(Perm::new((0..n).map(|x| (x + 1) % n).collect())?);
                }
                (gens, n)
            }
            NamedGroup::Dihedral(n) => {
                let n = *n;
                let rot = Perm::new((0..n).map(|x| (x + 1) % n).collect())?;
                let refl = Perm::new((0..n).map(|x| (n - x) % n).collect())?;
                (vec![rot, refl], n)
            }
            NamedGroup::Klein4 => (
                vec![Perm::new(vec![1, 0, 3, 2])?, Perm::new(vec![2, 3, 0, 1])?],
                4,
            ),
            NamedGroup::Product(a, b) => {
                let (ga, da) = a.generators()?;
                let (gb, db) = b.generators()?;
                let d = da + db;
                let mut gens: Vec<Perm> = ga.iter().map(|p| p.shifted(0, d)).collect();
                gens.extend(gb.iter().map(|p| p.shifted(da, d)));
                (gens, d)
            }
        })
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGroup::Cyclic(n) => write!(f, "cyclic:{n}"),
            NamedGroup::Symmetric(n) => write!(f, "symmetric:{n}"),
            NamedGroup::Dihedral(n) => write!(f, "dihedral:{n}"),
            NamedGroup::Klein4 => write!(f, "klein4"),
            NamedGroup::Product(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(s: &str) -> Arc<PermGroup> {
        Arc::new(PermGroup::named(&NamedGroup::parse(s).unwrap()).unwrap())
    }

    #[test]
    fn closure_orders() {
        let g = PermGroup::from_generators(&[], 3).unwrap();
        assert_eq!(g.order(), 1);
        let s3 = PermGroup::from_generators(
            &[
                Perm::from_cycles("(01)", 3).unwrap(),
                Perm::from_cycles("(012)", 3).unwrap(),
            ],
            3,
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        let c4 = PermGroup::from_generators(&[Perm::from_cycles("(0123)", 4).unwrap()], 4).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(c4.is_abelian());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::from_cycles("(01)", 3).unwrap();
        let b = Perm::from_cycles("(12)", 3).unwrap();
        let ab = a.compose(&b);
        // b sends 1 -> 2, then a fixes 2
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
    }

    #[test]
    fn named_groups() {
        assert_eq!(named("cyclic:1").order(), 1);
        assert_eq!(named("symmetric:3").order(), 6);
        assert_eq!(named("dihedral:4").order(), 8);
        assert_eq!(named("cyclic:2*cyclic:3").order(), 6);
        let v = named("klein4");
        assert_eq!(v.order(), 4);
        assert!((1..4).all(|g| v.mul(g, g) == 0));
        assert!(NamedGroup::parse("frobnicate:3").is_err());
        assert!(NamedGroup::parse("dihedral:2").is_err());
        assert!(NamedGroup::parse("cyclic:0").is_err());
    }

    #[test]
    fn order_cap() {
        let s7 = NamedGroup::Symmetric(7);
        assert!(matches!(PermGroup::named(&s7), Err(Error::ResourceCap(_))));
    }

    #[test]
    fn malformed_permutation() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3]).is_err());
        assert!(Perm::from_cycles("(01)(1 2)", 3).is_err());
        assert!(Perm::from_cycles("(05)", 3).is_err());
    }

    #[test]
    fn cycle_syntax() {
        let p = Perm::from_cycles(" ( 0 1 2 ) (3)", 4).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 3]);
        let q = Perm::from_cycles("(0,11)", 12).unwrap();
        assert_eq!(q.apply(11), 0);
        assert_eq!(p.to_string(), "(012)");
    }

    #[test]
    fn commuting_pair_counts() {
        assert_eq!(named("cyclic:4").commuting_pairs().len(), 16);
        assert_eq!(named("symmetric:3").commuting_pairs().len(), 18);
        assert_eq!(named("cyclic:1").commuting_pairs(), vec![(0, 0)]);
    }

    #[test]
    fn pair_class_counts() {
        assert_eq!(named("symmetric:3").simultaneous_pair_classes().len(), 8);
        assert_eq!(named("cyclic:1").simultaneous_pair_classes().len(), 1);
        assert_eq!(named("klein4").simultaneous_pair_classes().len(), 16);
    }

    #[test]
    fn group_axioms_on_tables() {
        for s in ["symmetric:4", "dihedral:5", "klein4*cyclic:3"] {
            let g = named(s);
            let n = g.order();
            for x in 0..n {
                assert_eq!(g.mul(x, g.inv(x)), 0);
                assert_eq!(g.mul(0, x), x);
                assert_eq!(g.mul(x, 0), x);
                for y in 0..n {
                    for z in (0..n).step_by(3) {
                        assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn commuting_pairs_match_class_count() {
        for s in ["symmetric:3", "symmetric:4", "dihedral:4", "dihedral:6", "klein4*cyclic:2"] {
            let g = named(s);
            assert_eq!(
                g.commuting_pairs().len(),
                g.order() * g.conjugacy_classes().len(),
                "{s}"
            );
        }
    }

    #[test]
    fn pair_classes_partition() {
        let g = named("dihedral:4");
        let classes = g.simultaneous_pair_classes();
        let mut all: Vec<(usize, usize)> = classes.iter().flat_map(|c| c.members.clone()).collect();
        all.sort();
        assert_eq!(all, g.commuting_pairs());
        for c in &classes {
            assert_eq!(c.rep, c.members[0]);
            for &(a, b) in &c.members {
                assert!((0..g.order()).any(|s| g.conj(s, a) == c.rep.0 && g.conj(s, b) == c.rep.1));
            }
        }
    }

    #[test]
    fn coset_reps() {
        let g = named("symmetric:3");
        let whole = Subgroup::whole(g.clone());
        let r = left_coset_reps(&g, &whole).unwrap();
        assert_eq!(r.reps(), &[0]);
        let c3 = Subgroup::from_cycle_string(g.clone(), "(012)").unwrap();
        let r = left_coset_reps(&g, &c3).unwrap();
        assert_eq!(r.index(), 2);
        assert_eq!(r.reps()[0], 0);
        let triv = Subgroup::trivial(g.clone());
        let r = left_coset_reps(&g, &triv).unwrap();
        assert_eq!(r.reps(), &[0, 1, 2, 3, 4, 5]);
        for x in 0..6 {
            for &h in c3.members() {
                let rr = left_coset_reps(&g, &c3).unwrap();
                assert_eq!(rr.coset_of(x), rr.coset_of(g.mul(x, h)));
            }
        }
    }

    #[test]
    fn subgroup_validation() {
        let g = named("symmetric:3");
        // a transposition alone plus a 3-cycle is not closed
        let t = g.index_of(&Perm::from_cycles("(01)", 3).unwrap()).unwrap();
        let c = g.index_of(&Perm::from_cycles("(012)", 3).unwrap()).unwrap();
        assert!(Subgroup::new(g.clone(), &[0, t, c]).is_err());
        assert!(Subgroup::new(g.clone(), &[t]).is_err());
        assert!(Subgroup::new(g.clone(), &[0, t]).is_ok());
    }

    #[test]
    fn subgroup_lattices() {
        let s3 = named("symmetric:3");
        assert_eq!(s3.all_subgroups().len(), 6);
        assert_eq!(s3.subgroup_classes().len(), 4);
        let s4 = named("symmetric:4");
        assert_eq!(s4.all_subgroups().len(), 30);
        assert_eq!(s4.subgroup_classes().len(), 11);
        let d4 = named("dihedral:4");
        assert_eq!(d4.all_subgroups().len(), 10);
    }

    #[test]
    fn subgroup_as_group_keeps_member_order() {
        let g = named("symmetric:3");
        let h = Subgroup::from_cycle_string(g.clone(), "(012)").unwrap();
        let hg = h.as_group();
        assert_eq!(hg.order(), 3);
        for k in 0..3 {
            assert_eq!(hg.element(k), g.element(h.ambient_index(k)));
        }
        assert_eq!(hg.element(0), &Perm::identity(3));
    }
}
