//! JSON encodings of groups, G-sets, cochains, 2-representations and reports.
//!
//! ```text
//! group    {"degree": d, "generators": [[images..], ..]}
//!          {"named": "symmetric", "n": 3}
//!          {"named": "product", "factors": [<group>, <group>]}
//!          "symmetric:3"
//! gset     {"group": <group>, "size": n, "action": [[g.0, g.1, ..], ..]}
//!          (without "action" every element acts trivially)
//! cochain  {"values": {"g,h": ["p/q", ..], ..}}      (missing entries are 0)
//! tworep   {"gset": <gset>, "cocycle": <cochain>}
//! ```
//!
//! Element indices refer to the deterministic enumeration of the group:
//! breadth first from the identity, generators in the order given.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::character::CharacterTable;
use crate::cohomology::{Cochain1, Cochain2, H2Group, QZ};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::permgrp::{NamedGroup, Perm, PermGroup};
use crate::tworep::{EquivalenceWitness, TwoRep};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Spec(String),
    Named {
        named: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factors: Option<Vec<GroupJson>>,
    },
    Explicit {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupJson {
    fn to_named(&self) -> Result<Option<NamedGroup>> {
        match self {
            GroupJson::Spec(s) => Ok(Some(NamedGroup::parse(s)?)),
            GroupJson::Named { named, n, factors } => {
                if named.eq_ignore_ascii_case("product") {
                    let fs = factors
                        .as_ref()
                        .ok_or_else(|| Error::validation("product group needs \"factors\""))?;
                    let mut parts = Vec::new();
                    for f in fs {
                        parts.push(f.to_named()?.ok_or_else(|| {
                            Error::validation("product factors must be named groups")
                        })?);
                    }
                    let mut it = parts.into_iter();
                    let first = it
                        .next()
                        .ok_or_else(|| Error::validation("product of no factors"))?;
                    Ok(Some(it.fold(first, |a, b| {
                        NamedGroup::Product(Box::new(a), Box::new(b))
                    })))
                } else {
                    Ok(Some(NamedGroup::from_name(named, *n)?))
                }
            }
            GroupJson::Explicit { .. } => Ok(None),
        }
    }

    pub fn build(&self, cap: usize) -> Result<Arc<PermGroup>> {
        if let Some(named) = self.to_named()? {
            let (gens, degree) = named.generators()?;
            return Ok(Arc::new(PermGroup::from_generators_capped(&gens, degree, cap)?));
        }
        let GroupJson::Explicit { degree, generators } = self else {
            unreachable!()
        };
        let gens = generators
            .iter()
            .map(|g| {
                if g.len() != *degree {
                    return Err(Error::validation(format!(
                        "generator {g:?} does not have {degree} images"
                    )));
                }
                Perm::new(g.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(PermGroup::from_generators_capped(&gens, *degree, cap)?))
    }

    pub fn from_group(g: &PermGroup) -> Self {
        GroupJson::Explicit {
            degree: g.degree(),
            generators: g
                .generators()
                .iter()
                .map(|&x| g.element(x).images().to_vec())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GSetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupJson>,
    pub size: usize,
    /// `action[g][s] = g.s`; omitted means every element acts trivially.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<usize>>>,
}

impl GSetJson {
    pub fn from_gset(s: &GSet) -> Self {
        GSetJson {
            group: Some(GroupJson::from_group(s.group())),
            size: s.size(),
            action: Some(s.table()),
        }
    }

    /// Builds the G-set over its own group, or over `fallback` if it names
    /// none.
    pub fn build(&self, fallback: Option<&Arc<PermGroup>>, cap: usize) -> Result<Arc<GSet>> {
        let group = match (&self.group, fallback) {
            (Some(g), _) => g.build(cap)?,
            (None, Some(g)) => g.clone(),
            (None, None) => return Err(Error::validation("G-set without a group")),
        };
        match &self.action {
            Some(table) => Ok(Arc::new(GSet::from_action(group, self.size, table)?)),
            None => Ok(Arc::new(GSet::trivial(group, self.size))),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CochainJson {
    pub values: BTreeMap<String, Vec<String>>,
}

fn parse_pair(key: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::validation(format!("bad cochain key {key:?}; expected \"g,h\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a >= n || b >= n {
        return Err(Error::validation(format!(
            "cochain key {key:?} out of range for a group of order {n}"
        )));
    }
    Ok((a, b))
}

fn parse_vector(v: &[String], m: usize, key: &str) -> Result<Vec<QZ>> {
    if v.len() != m {
        return Err(Error::Dimension(format!(
            "entry {key:?} has {} components, expected {m}",
            v.len()
        )));
    }
    v.iter().map(|x| x.parse()).collect()
}

impl CochainJson {
    /// Nonzero entries only.
    pub fn from_cochain2(c: &Cochain2) -> Self {
        let n = c.gset().group().order();
        let mut values = BTreeMap::new();
        for g in 0..n {
            for h in 0..n {
                let v = c.get(g, h);
                if v.iter().any(|q| !q.is_zero()) {
                    values.insert(format!("{g},{h}"), v.iter().map(QZ::to_string).collect());
                }
            }
        }
        CochainJson { values }
    }

    pub fn to_cochain2(&self, gset: Arc<GSet>) -> Result<Cochain2> {
        let n = gset.group().order();
        let m = gset.size();
        let mut c = Cochain2::zero(gset);
        for (key, v) in &self.values {
            let (g, h) = parse_pair(key, n)?;
            for (i, q) in parse_vector(v, m, key)?.into_iter().enumerate() {
                c.set(g, h, i, q);
            }
        }
        Ok(c)
    }

    pub fn from_cochain1(b: &Cochain1) -> Self {
        let n = b.gset().group().order();
        let mut values = BTreeMap::new();
        for g in 0..n {
            let v = b.get(g);
            if v.iter().any(|q| !q.is_zero()) {
                values.insert(g.to_string(), v.iter().map(QZ::to_string).collect());
            }
        }
        CochainJson { values }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwoRepJson {
    pub gset: GSetJson,
    #[serde(default)]
    pub cocycle: CochainJson,
}

impl TwoRepJson {
    pub fn from_rep(r: &TwoRep) -> Self {
        TwoRepJson {
            gset: GSetJson::from_gset(r.gset()),
            cocycle: CochainJson::from_cochain2(r.cocycle()),
        }
    }

    pub fn build(&self, fallback: Option<&Arc<PermGroup>>, cap: usize) -> Result<TwoRep> {
        let gset = self.gset.build(fallback, cap)?;
        let c = self.cocycle.to_cochain2(gset.clone())?;
        TwoRep::new(gset, c)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::validation(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::validation(format!("{}: {e}", path.display())))
}

pub fn cyclo_to_json(v: &Cyclo) -> Value {
    match v.to_int() {
        Some(n) => json!({ "int": n }),
        None => json!({ "order": v.order(), "coeffs": v.coeffs() }),
    }
}

pub fn table_to_json(t: &CharacterTable) -> Value {
    let g = t.group();
    let classes: Vec<Value> = t
        .entries()
        .iter()
        .map(|e| {
            json!({
                "g": e.g,
                "h": e.h,
                "g_cycles": g.element(e.g).to_string(),
                "h_cycles": g.element(e.h).to_string(),
                "value": cyclo_to_json(&e.value),
                "display": e.value.to_string(),
            })
        })
        .collect();
    json!({ "classes": classes })
}

pub fn witness_to_json(w: Option<&EquivalenceWitness>) -> Value {
    match w {
        Some(w) => json!({
            "equivalent": true,
            "f": w.f.images(),
            "b": CochainJson::from_cochain1(&w.b),
        }),
        None => json!({ "equivalent": false }),
    }
}

pub fn h2_to_json(h: &H2Group) -> Value {
    json!({
        "modulus": h.modulus,
        "divisors": h.divisors,
        "order": h.order(),
        "representatives": h.representatives.iter().map(CochainJson::from_cochain2).collect::<Vec<_>>(),
    })
}
