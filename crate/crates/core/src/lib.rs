//! Exact computation with 2-representations of finite groups in 2-vector spaces.
//!
//! A 2-representation of a finite group `G` is classified by a finite `G`-set
//! `S` together with a class in `H^2(G; (C^x)^S)`. This crate works with that
//! classification data directly:
//!
//! * [`permgrp`]: finite groups as fully enumerated permutation groups.
//! * [`gset`]: finite left `G`-sets, orbits, induction, sums and products.
//! * [`zlinalg`]: Smith normal form and the integer solvers behind every
//!   cohomology decision.
//! * [`cohomology`]: cochains with values in `Q/Z` (roots of unity written
//!   additively), coboundaries, `H^2` and the Shapiro comparison.
//! * [`tworep`]: validated 2-representations, direct sum, tensor product,
//!   induction, equivalence and decomposition.
//! * [`cyclo`] and [`character`]: exact 2-character values in `Z[zeta_K]`.
//! * [`cli`] and [`io`]: the JSON formats and the command-line front end.

pub mod character;
pub mod cli;
pub mod cohomology;
pub mod cyclo;
pub mod error;
pub mod gset;
pub mod io;
pub mod permgrp;
pub mod tworep;
pub mod zlinalg;

pub use character::{
    character_table, character_via_psi, collision_search, induced_character_check, psi_map,
    two_character, CharacterTable, DimMatrix, PsiMap,
};
pub use cohomology::{
    act, are_cohomologous, delta1, h2_compute, is_cocycle, normalize_cocycle, shapiro_compare,
    Cochain1, Cochain2, H2Group, QZ,
};
pub use cyclo::Cyclo;
pub use error::{Error, Result};
pub use gset::{GSet, OrbitDecomposition};
pub use permgrp::{CosetReps, NamedGroup, Perm, PermGroup, Subgroup};
pub use tworep::{EquivalenceWitness, TwoRep};
pub use zlinalg::{divisible_preimage, smith_normal_form, solve_mod, IntMatrix, SnfResult};
