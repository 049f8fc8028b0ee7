//! The `twochar` command-line tool.
//!
//! Exit codes: 0 success, 1 a requested check failed, 2 invalid input,
//! 3 a cochain that is not a cocycle, 4 a resource cap was hit.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::character::{character_table, collision_search, two_character, DEFAULT_COLLISION_CAP};
use crate::cohomology::{h2_compute, shapiro_compare};
use crate::error::{Error, Result};
use crate::gset::GSet;
use crate::io::{
    h2_to_json, read_json, table_to_json, witness_to_json, CochainJson, GSetJson, GroupJson,
    TwoRepJson,
};
use crate::permgrp::{left_coset_reps, Perm, PermGroup, Subgroup, DEFAULT_ORDER_CAP};
use crate::tworep::{are_equivalent, decompose, induce, TwoRep};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "twochar", version, about = "Exact 2-representations of finite groups")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest group order to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    pub cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Named group (`symmetric:3`, `klein4*cyclic:2`, ..) or a group JSON file.
    #[arg(long)]
    pub group: Option<String>,
    /// Named group.
    #[arg(long)]
    pub named: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order and commuting-pair statistics of a group.
    Group {
        #[command(flatten)]
        group: GroupArg,
        /// Group JSON file.
        file: Option<PathBuf>,
    },
    /// 2-character table of a representation.
    Chartable { rep: PathBuf },
    /// Decide equivalence of two representations.
    Equiv { a: PathBuf, b: PathBuf },
    /// Induce a representation of a subgroup.
    Induce {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup generators in cycle notation, separated by `;`.
        #[arg(long)]
        subgroup: String,
        /// Representation of the subgroup; element indices follow the
        /// subgroup's own enumeration (ascending ambient index).
        #[arg(long)]
        rep: PathBuf,
    },
    /// Split a representation into induced one-dimensional pieces.
    Decompose { rep: PathBuf },
    /// Second cohomology with coefficients in (Q/Z)^S.
    H2 {
        #[command(flatten)]
        group: GroupArg,
        /// Coefficients on a single point.
        #[arg(long, conflicts_with = "gset")]
        point: bool,
        /// G-set JSON file.
        #[arg(long)]
        gset: Option<PathBuf>,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Compare H^2 of a subgroup with H^2 of the group on its cosets.
    Shapiro {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        subgroup: String,
    },
    /// Search untwisted representations of one dimension for character
    /// collisions.
    Collision {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = DEFAULT_COLLISION_CAP)]
        max_candidates: usize,
    },
    /// Two inequivalent 8-dimensional representations of S3 with one
    /// character.
    PaperExample {
        /// Also run the collision search in this dimension.
        #[arg(long)]
        collision_search: Option<usize>,
        /// Write both representations as JSON into this directory.
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

/// A finished command: the machine-readable report, its text rendering and
/// whether the checks it ran passed.
pub struct Report {
    pub json: Value,
    pub text: String,
    pub passed: bool,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            passed: true,
        }
    }
}

fn load_group(arg: &GroupArg, file: Option<&Path>, cap: usize) -> Result<Arc<PermGroup>> {
    let spec = match (&arg.named, &arg.group, file) {
        (Some(n), _, _) => GroupJson::Spec(n.clone()),
        (None, Some(g), _) if Path::new(g).is_file() => read_json(Path::new(g))?,
        (None, Some(g), _) => GroupJson::Spec(g.clone()),
        (None, None, Some(f)) => read_json(f)?,
        (None, None, None) => return Err(Error::validation("no group given")),
    };
    spec.build(cap)
}

fn load_rep(path: &Path, fallback: Option<&Arc<PermGroup>>, cap: usize) -> Result<TwoRep> {
    let j: TwoRepJson = read_json(path)?;
    j.build(fallback, cap)
}

/// The pair `R = S3 + 2 pt` and `R' = 2 S3/<(01)> + S3/<(012)>`.
pub fn example_pair() -> Result<(TwoRep, TwoRep)> {
    let g = Arc::new(PermGroup::named(&crate::permgrp::NamedGroup::Symmetric(3))?);
    let cosets = |gens: &str| -> Result<TwoRep> {
        let h = Subgroup::from_cycle_string(g.clone(), gens)?;
        let reps = left_coset_reps(&g, &h)?;
        Ok(TwoRep::untwisted(Arc::new(GSet::cosets(g.clone(), &reps))))
    };
    let triv = TwoRep::trivial(g.clone());
    let rho = TwoRep::untwisted(Arc::new(GSet::regular(g.clone())))
        .direct_sum(&triv)?
        .direct_sum(&triv)?;
    let c2 = cosets("(01)")?;
    let rho_p = c2.direct_sum(&c2)?.direct_sum(&cosets("(012)")?)?;
    Ok((rho, rho_p))
}

fn cmd_paper_example(collision: Option<usize>, write: Option<&Path>) -> Result<Report> {
    let (rho, rho_p) = example_pair()?;
    let g = rho.group().clone();
    let inequivalent = are_equivalent(&rho, &rho_p)?.is_none();
    let t = character_table(&rho)?;
    let t_p = character_table(&rho_p)?;
    let tables_equal = t == t_p;

    let value = |r: &TwoRep, a: usize, b: usize| two_character(r, a, b).map(|v| v.to_int());
    let mut at_identity = true;
    for r in [&rho, &rho_p] {
        at_identity &= value(r, 0, 0)? == Some(8);
        for x in 1..g.order() {
            at_identity &= value(r, 0, x)? == Some(2);
        }
    }
    let c = g
        .index_of(&Perm::from_cycles("(012)", 3)?)
        .expect("3-cycle in S3");
    let ci = g.inv(c);
    let at_rotation = value(&rho, c, ci)? == Some(2) && value(&rho_p, c, ci)? == Some(2);

    let mut json = json!({
        "non_equivalent": inequivalent,
        "tables_equal": tables_equal,
        "chi_1_1": value(&rho, 0, 0)?,
        "chi_1_g": (1..g.order()).map(|x| value(&rho, 0, x)).collect::<Result<Vec<_>>>()?,
        "chi_123_132": value(&rho, c, ci)?,
        "table": table_to_json(&t),
    });
    let mut text = format!(
        "non-equivalent: {inequivalent}; tables equal: {tables_equal}; chi(1,1)={}; chi(1,g)={} for g != 1; chi((0,1,2),(0,2,1))={}\n",
        fmt_opt(value(&rho, 0, 0)?),
        if at_identity { "2" } else { "mismatch" },
        fmt_opt(value(&rho, c, ci)?),
    );
    text.push_str(&t.to_text());

    let mut found = true;
    if let Some(n) = collision {
        let report = collision_search(&g, n, DEFAULT_COLLISION_CAP)?;
        let order = |k: usize| report.subgroups[k].order();
        let orders = |m: &[usize]| {
            let mut v: Vec<usize> = m.iter().map(|&k| order(k)).collect();
            v.sort_unstable();
            v
        };
        found = report.pairs.iter().any(|(a, b)| {
            let (x, y) = (orders(a), orders(b));
            (x == [1, 6, 6] && y == [2, 2, 3]) || (x == [2, 2, 3] && y == [1, 6, 6])
        });
        json["collision_search"] = collision_json(&report);
        json["collision_search"]["contains_example"] = json!(found);
        text.push_str(&format!(
            "collision search in dimension {n}: {} pair(s); contains this pair: {found}\n",
            report.pairs.len()
        ));
    }
    if let Some(dir) = write {
        std::fs::create_dir_all(dir)?;
        for (name, r) in [("rho.json", &rho), ("rho_prime.json", &rho_p)] {
            let s = serde_json::to_string_pretty(&TwoRepJson::from_rep(r))?;
            std::fs::write(dir.join(name), s + "\n")?;
        }
    }
    let passed = inequivalent && tables_equal && at_identity && at_rotation && found;
    json["passed"] = json!(passed);
    Ok(Report { json, text, passed })
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "non-integer".into(), |n| n.to_string())
}

fn collision_json(r: &crate::character::CollisionReport) -> Value {
    let describe = |m: &[usize]| -> Vec<String> {
        m.iter()
            .map(|&k| {
                let h = &r.subgroups[k];
                let gens: Vec<String> = h
                    .as_group()
                    .generators()
                    .iter()
                    .map(|&x| h.as_group().element(x).to_string())
                    .collect();
                format!("G/<{}>", gens.join(", "))
            })
            .collect()
    };
    json!({
        "candidates": r.candidates,
        "pairs": r.pairs.iter().map(|(a, b)| json!([describe(a), describe(b)])).collect::<Vec<_>>(),
    })
}

fn rep_summary(r: &TwoRep) -> String {
    let orbits = r.gset().orbits_with_stabilizers();
    format!(
        "dimension {}, {} orbit(s), cocycle denominators dividing {}",
        r.dim(),
        orbits.orbits.len(),
        r.cocycle().denominator_lcm()
    )
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let cap = cli.cap;
    match &cli.command {
        Command::Group { group, file } => {
            let g = load_group(group, file.as_deref(), cap)?;
            let classes = g.conjugacy_classes().len();
            let pairs = g.commuting_pairs().len();
            let pair_classes = g.simultaneous_pair_classes().len();
            let json = json!({
                "order": g.order(),
                "degree": g.degree(),
                "conjugacy_classes": classes,
                "commuting_pairs": pairs,
                "pair_classes": pair_classes,
            });
            let text = format!(
                "order {}\nconjugacy classes {classes}\ncommuting pairs {pairs}\nsimultaneous conjugacy classes of pairs {pair_classes}\n",
                g.order()
            );
            Ok(Report::ok(json, text))
        }
        Command::Chartable { rep } => {
            let r = load_rep(rep, None, cap)?;
            let t = character_table(&r)?;
            Ok(Report::ok(table_to_json(&t), t.to_text()))
        }
        Command::Equiv { a, b } => {
            let ra = load_rep(a, None, cap)?;
            let rb = load_rep(b, Some(ra.group()), cap)?;
            let w = are_equivalent(&ra, &rb)?;
            let text = match &w {
                Some(w) => format!("equivalent: true\nf = {}\n", w.f),
                None => "equivalent: false\n".to_string(),
            };
            Ok(Report::ok(witness_to_json(w.as_ref()), text))
        }
        Command::Induce {
            group,
            subgroup,
            rep,
        } => {
            let g = load_group(group, None, cap)?;
            let h = Subgroup::from_cycle_string(g.clone(), subgroup)?;
            let r_h = load_rep(rep, Some(&h.as_group()), cap)?.rebase(h.as_group())?;
            let reps = left_coset_reps(&g, &h)?;
            let ind = induce(&g, &h, &r_h, &reps)?;
            let json = serde_json::to_value(TwoRepJson::from_rep(&ind))?;
            let text = serde_json::to_string_pretty(&json)? + "\n";
            Ok(Report::ok(json, text))
        }
        Command::Decompose { rep } => {
            let r = load_rep(rep, None, cap)?;
            let factors = decompose(&r);
            let mut text = format!("{}\n", rep_summary(&r));
            let mut items = Vec::new();
            for f in &factors {
                let hg = f.subgroup.as_group();
                let gens: Vec<String> = hg
                    .generators()
                    .iter()
                    .map(|&x| hg.element(x).to_string())
                    .collect();
                text.push_str(&format!(
                    "ind from H = <{}> (order {}), cocycle {}\n",
                    gens.join(", "),
                    f.subgroup.order(),
                    if f.rep.cocycle().is_zero() { "zero" } else { "nonzero" }
                ));
                items.push(json!({
                    "subgroup": f.subgroup.members(),
                    "generators": gens,
                    "cocycle": CochainJson::from_cochain2(f.rep.cocycle()),
                }));
            }
            Ok(Report::ok(json!({ "factors": items }), text))
        }
        Command::H2 {
            group,
            point,
            gset,
            modulus,
        } => {
            let g = load_group(group, None, cap)?;
            let s = match (point, gset) {
                (_, Some(path)) => {
                    let j: GSetJson = read_json(path)?;
                    j.build(Some(&g), cap)?
                }
                _ => Arc::new(GSet::point(g.clone())),
            };
            let h = h2_compute(&s, *modulus)?;
            let text = format!(
                "H^2 divisors {:?} (order {}, modulus {})\n",
                h.divisors,
                h.order(),
                h.modulus
            );
            Ok(Report::ok(h2_to_json(&h), text))
        }
        Command::Shapiro { group, subgroup } => {
            let g = load_group(group, None, cap)?;
            let h = Subgroup::from_cycle_string(g.clone(), subgroup)?;
            let r = shapiro_compare(&g, &h)?;
            let json = json!({
                "agree": r.agree,
                "subgroup_divisors": r.subgroup_divisors,
                "induced_divisors": r.induced_divisors,
            });
            let text = format!(
                "H^2(H) divisors {:?}; H^2(G; G/H) divisors {:?}; agree: {}\n",
                r.subgroup_divisors, r.induced_divisors, r.agree
            );
            Ok(Report {
                json,
                text,
                passed: r.agree,
            })
        }
        Command::Collision {
            group,
            dim,
            max_candidates,
        } => {
            let g = load_group(group, None, cap)?;
            let r = collision_search(&g, *dim, *max_candidates)?;
            let json = collision_json(&r);
            let mut text = format!(
                "{} candidate(s), {} colliding pair(s)\n",
                r.candidates,
                r.pairs.len()
            );
            for p in json["pairs"].as_array().expect("array") {
                text.push_str(&format!("{} vs {}\n", p[0], p[1]));
            }
            Ok(Report::ok(json, text))
        }
        Command::PaperExample {
            collision_search,
            write,
        } => cmd_paper_example(*collision_search, write.as_deref()),
    }
}

/// Parses `args`, runs the command and writes the report. Returns the exit
/// code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json") + "\n",
                Format::Text => report.text,
            };
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &body).map_err(Error::from),
                None => stdout.write_all(body.as_bytes()).map_err(Error::from),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: {e}");
                return e.exit_code();
            }
            if report.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
