//! The `semifree` command line.
//!
//! Exit status is 0 on success (including an undetermined equivalence), 2 when
//! the answer is a negative verdict and 1 on bad input.

mod input;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::actions5::{
    actions_equivalent, allowed_fixed_point_counts, cohomology_chain, make_action,
    ActionDescriptor5, EquivalenceStatus, ResolvedAction,
};
use crate::actions8::{
    check_obstructions, euler_class_generator_note, orbit_complement_cohomology,
    total_space_cohomology, ObstructionReport, Verdict,
};
use crate::anchors;
use crate::constructions::{
    connected_sum_8, equivariant_connected_sum, equivariant_fibre_sum, torus_quotient, Family,
    TorusCircleParams,
};
use crate::forms::{LatticeVector, DEFAULT_DEPTH, FORM_CATALOG};
use crate::manifolds::{
    EightManifoldDesc, FiveManifoldDesc, FiveOrbitDesc, FourManifoldDesc, EIGHT_CATALOG,
};

use input::load;

pub const DEPTH_ENV: &str = "SEMIFREE_DEPTH";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "semifree",
    version,
    about = "Invariants of semi-free S1 actions on 5-manifolds and S3 actions on 8-manifolds"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Isometry search depth (overrides SEMIFREE_DEPTH).
    #[arg(long, global = true, value_parser = parse_depth)]
    depth: Option<usize>,

    /// List the built-in catalog names and exit.
    #[arg(long)]
    catalog_list: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Total space of an action with the given orbit space and fixed circles.
    Classify5 {
        /// Orbit 4-manifold: catalog name, JSON, or JSON file.
        #[arg(long)]
        orbit: String,
        #[arg(long)]
        n: u32,
        /// Comma-separated coordinates of the class ē (default 0).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        ebar: Option<Vec<i64>>,
    },
    /// Cohomology of the complements of the fixed set.
    Cohom5 {
        #[arg(long)]
        orbit: String,
        #[arg(long)]
        n: u32,
    },
    /// Possible numbers of fixed circles on a 5-manifold.
    Counts {
        /// 5-manifold label or JSON.
        manifold: String,
    },
    /// Decide whether two actions are equivariantly equivalent.
    Equiv { first: String, second: String },
    /// Run the obstruction battery on one or more 8-manifolds.
    Obstruct8 {
        #[arg(required = true)]
        manifolds: Vec<String>,
        /// Append the Euler class condition to admissible reports.
        #[arg(long)]
        euler_note: bool,
    },
    /// Cohomology of an 8-manifold with an S3 action over the given orbit space.
    Cohom8 {
        /// Orbit 5-manifold: label or JSON with H2, H3, spin.
        #[arg(long)]
        orbit: String,
        #[arg(long)]
        n: u32,
    },
    /// Equivariant constructions.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
}

#[derive(Subcommand, Debug)]
enum Construct {
    /// Equivariant connected sum of two circle actions.
    Connsum5 { first: String, second: String },
    /// Fibre sum of an action with a free circle action over `--base`.
    Fibresum {
        #[arg(long)]
        base: String,
        action: String,
        /// Euler class of the free action on H2 of the base (default 0).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        base_ebar: Option<Vec<i64>>,
    },
    /// Free circle quotient of S3xS3 by a torus subcircle.
    Torusquot {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Fixed points of an equivariant connected sum of S3 actions.
    Connsum8 { n1: u32, n2: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Spin,
    Nonspin,
}

fn parse_depth(s: &str) -> Result<usize, String> {
    match s.trim().parse::<usize>() {
        Ok(d) if d > 0 => Ok(d),
        _ => Err(format!("expected a positive integer, got '{s}'")),
    }
}

struct Outcome {
    text: Vec<String>,
    json: Value,
    negative: bool,
}

impl Outcome {
    fn positive(text: Vec<String>, json: Value) -> Self {
        Self {
            text,
            json,
            negative: false,
        }
    }
}

type CliResult<T> = std::result::Result<T, String>;

fn ctx<T>(field: &str, r: crate::Result<T>) -> CliResult<T> {
    r.map_err(|e| format!("{field}: {e}"))
}

/// Runs the command line `args` (including the program name) and returns the
/// exit status. `env_depth` is the value of `SEMIFREE_DEPTH`, if set.
pub fn run<I, T>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
    env_depth: Option<String>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let rendered = e.render().to_string();
            let _ = if ok {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return if ok { EXIT_OK } else { EXIT_ERROR };
        }
    };

    let result = if cli.catalog_list {
        Ok(catalog_list())
    } else {
        match &cli.command {
            None => Err("no command given; see --help".to_string()),
            Some(cmd) => dispatch(cmd, cli.depth, env_depth.as_deref()),
        }
    };

    match result {
        Ok(outcome) => {
            let written = match cli.format {
                Format::Text => outcome.text.iter().try_for_each(|l| writeln!(out, "{l}")),
                Format::Json => serde_json::to_string_pretty(&outcome.json)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}")),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_ERROR;
            }
            if outcome.negative {
                EXIT_NEGATIVE
            } else {
                EXIT_OK
            }
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn resolve_depth(flag: Option<usize>, env: Option<&str>) -> CliResult<usize> {
    match (flag, env) {
        (Some(d), _) => Ok(d),
        (None, Some(v)) => parse_depth(v).map_err(|e| format!("{DEPTH_ENV}: {e}")),
        (None, None) => Ok(DEFAULT_DEPTH),
    }
}

fn dispatch(cmd: &Command, depth: Option<usize>, env_depth: Option<&str>) -> CliResult<Outcome> {
    match cmd {
        Command::Classify5 { orbit, n, ebar } => classify5(orbit, *n, ebar.as_deref()),
        Command::Cohom5 { orbit, n } => cohom5(orbit, *n),
        Command::Counts { manifold } => counts(manifold),
        Command::Equiv { first, second } => equiv(first, second, resolve_depth(depth, env_depth)?),
        Command::Obstruct8 {
            manifolds,
            euler_note,
        } => obstruct8(manifolds, *euler_note),
        Command::Cohom8 { orbit, n } => cohom8(orbit, *n),
        Command::Construct { kind } => construct(kind),
    }
}

fn catalog_list() -> Outcome {
    let mut text = vec![format!(
        "4-manifolds (orbit spaces): {}",
        FORM_CATALOG.join(", ")
    )];
    text.push("  sums are written with '#', e.g. CP2#CP2bar or E8#E8".to_string());
    text.push(
        "5-manifolds: S5, S3xS2, S3x~S2, #k(S3xS2), (S3x~S2)#S3xS2, (S3x~S2)##k(S3xS2)".to_string(),
    );
    text.push(format!("8-manifolds: {}", EIGHT_CATALOG.join(", ")));
    Outcome::positive(
        text,
        json!({
            "forms": FORM_CATALOG,
            "eight_manifolds": EIGHT_CATALOG,
        }),
    )
}

fn vector_arg(field: &str, coords: Option<&[i64]>, len: usize) -> CliResult<LatticeVector> {
    match coords {
        None => Ok(LatticeVector::zero(len)),
        Some(c) if c.len() == len => Ok(LatticeVector::new(c.iter().copied())),
        Some(c) => Err(format!(
            "{field}: expected {len} coordinates, got {}",
            c.len()
        )),
    }
}

fn orbit_line(orbit: &FourManifoldDesc) -> String {
    let f = orbit.form();
    format!(
        "orbit space: {} (homeo), b2={}, signature {}, {}",
        orbit.label(),
        f.rank(),
        f.signature(),
        f.parity()
    )
}

fn action_lines(r: &ResolvedAction) -> Vec<String> {
    let d = &r.descriptor;
    vec![
        orbit_line(d.orbit()),
        format!("fixed circles: {}", d.n()),
        format!("ebar: {} ({})", d.ebar(), anchors::CLASSIFICATION_INVARIANT),
        format!("total space: {} ({})", r.total_space, anchors::TOTAL_SPACE),
    ]
}

fn action_json(r: &ResolvedAction) -> Value {
    json!({
        "action": r.descriptor,
        "orbit_label": r.descriptor.orbit().label(),
        "total_space": r.total_space,
        "anchor": anchors::TOTAL_SPACE,
    })
}

fn classify5(orbit: &str, n: u32, ebar: Option<&[i64]>) -> CliResult<Outcome> {
    let orbit: FourManifoldDesc = load("orbit", orbit)?;
    let ebar = vector_arg("ebar", ebar, orbit.b2())?;
    let resolved = make_action(orbit, ebar, n).map_err(|e| match e {
        crate::Error::TooFewFixedPoints { .. } => format!("n: {e}"),
        crate::Error::DimensionMismatch { .. } => format!("ebar: {e}"),
        _ => format!("orbit: {e}"),
    })?;
    let counts = allowed_fixed_point_counts(&resolved.total_space);
    let mut text = action_lines(&resolved);
    text.push(format!(
        "allowed fixed-circle counts on the total space: {} ({})",
        join(&counts),
        anchors::FIXED_POINT_COUNTS
    ));
    let mut json = action_json(&resolved);
    json["allowed_counts"] = json!(counts);
    Ok(Outcome::positive(text, json))
}

fn cohom5(orbit: &str, n: u32) -> CliResult<Outcome> {
    let orbit: FourManifoldDesc = load("orbit", orbit)?;
    let k = orbit.b2();
    let chain = ctx("n", cohomology_chain(k, n))?;
    let a = anchors::COHOMOLOGY_CHAIN;
    let text = vec![
        orbit_line(&orbit),
        format!("H2(M*\\F) = {} ({a})", chain.h2_orbit_complement),
        format!("H3(M*\\F) = {} ({a})", chain.h3_orbit_complement),
        format!("H3(M\\F) = {} ({a})", chain.h3_complement),
        format!("H3(M) = H2(M) = {} ({a})", chain.h3_total),
    ];
    Ok(Outcome::positive(
        text,
        json!({ "k": k, "n": n, "chain": chain, "anchor": a }),
    ))
}

fn counts(manifold: &str) -> CliResult<Outcome> {
    let m: FiveManifoldDesc = load("manifold", manifold)?;
    let counts = allowed_fixed_point_counts(&m);
    let text = vec![format!(
        "{m}: allowed fixed-circle counts {} ({})",
        if counts.is_empty() {
            "none".to_string()
        } else {
            join(&counts)
        },
        anchors::FIXED_POINT_COUNTS
    )];
    Ok(Outcome::positive(
        text,
        json!({ "manifold": m, "counts": counts, "anchor": anchors::FIXED_POINT_COUNTS }),
    ))
}

fn equiv(first: &str, second: &str, depth: usize) -> CliResult<Outcome> {
    let a1: ActionDescriptor5 = load("first", first)?;
    let a2: ActionDescriptor5 = load("second", second)?;
    let v = ctx("ebar", actions_equivalent(&a1, &a2, depth))?;
    let status = match v.status {
        EquivalenceStatus::NotEquivalent => "NOT_EQUIVALENT",
        EquivalenceStatus::EquivalentWitnessed => "EQUIVALENT_WITNESSED",
        EquivalenceStatus::Undetermined => "UNDETERMINED",
    };
    let mut text = vec![format!("verdict: {status} ({})", anchors::EQUIVALENCE)];
    if let Some(w) = &v.witness {
        text.push(format!("witness: {w}"));
    }
    if let Some(r) = &v.reason {
        text.push(format!("reason: {r}"));
    }
    if let Some(c) = &v.caveat {
        text.push(format!("caveat: {c}"));
    }
    let mut json = serde_json::to_value(&v).map_err(|e| e.to_string())?;
    json["anchor"] = json!(anchors::EQUIVALENCE);
    json["depth"] = json!(depth);
    Ok(Outcome {
        text,
        json,
        negative: v.status == EquivalenceStatus::NotEquivalent,
    })
}

fn report_lines(label: &str, r: &ObstructionReport) -> Vec<String> {
    let mut text = vec![format!("{label}:")];
    let width = |s: &str| s.chars().count();
    let dw = r
        .conditions
        .iter()
        .map(|c| width(c.description))
        .max()
        .unwrap_or(0);
    let ww = r
        .conditions
        .iter()
        .map(|c| width(&c.witness))
        .max()
        .unwrap_or(0);
    for c in &r.conditions {
        text.push(format!(
            "  {} {}  {}{}  {}{}  ({})",
            c.id,
            if c.passed { "pass" } else { "FAIL" },
            c.description,
            " ".repeat(dw - width(c.description)),
            c.witness,
            " ".repeat(ww - width(&c.witness)),
            c.anchor
        ));
    }
    text.push(format!(
        "  verdict: {} ({})",
        r.verdict,
        anchors::COROLLARY_4
    ));
    if let Some(f) = &r.forced {
        text.push(format!(
            "  forced orbit space: H2={}, H3={}; n={} fixed points ({})",
            f.orbit.h2(),
            f.orbit.h3(),
            f.n,
            f.anchor
        ));
        text.push(format!(
            "  forced orbit space is {} ({})",
            if f.orbit.is_spin() {
                "spin"
            } else {
                "non-spin"
            },
            f.spin_anchor
        ));
    }
    for a in &r.annotations {
        text.push(format!("  note: {} ({})", a.text, a.anchor));
    }
    text
}

fn obstruct8(refs: &[String], euler_note: bool) -> CliResult<Outcome> {
    let manifolds = refs
        .iter()
        .enumerate()
        .map(|(i, r)| load::<EightManifoldDesc>(&format!("manifolds[{i}]"), r))
        .collect::<CliResult<Vec<_>>>()?;
    let mut text = Vec::new();
    let mut reports = Vec::new();
    let mut negative = false;
    for (r, m) in refs.iter().zip(&manifolds) {
        let mut report = check_obstructions(m);
        if euler_note && report.verdict == Verdict::AdmissibleAtThisLevel {
            report = ctx("euler_note", euler_class_generator_note(&report))?;
        }
        negative |= report.verdict == Verdict::Obstructed;
        text.extend(report_lines(m.name.as_deref().unwrap_or(r), &report));
        reports.push(json!({ "manifold": m, "report": report }));
    }
    Ok(Outcome {
        text,
        json: json!({ "reports": reports }),
        negative,
    })
}

fn cohom8(orbit: &str, n: u32) -> CliResult<Outcome> {
    let orbit: FiveOrbitDesc = load("orbit", orbit)?;
    let complement = ctx("n", orbit_complement_cohomology(&orbit, n))?;
    let total = ctx("n", total_space_cohomology(&orbit, n))?;
    let mut text = Vec::new();
    for (j, g) in complement.iter().enumerate() {
        text.push(format!("H{j}(M*\\F) = {g} ({})", anchors::ORBIT_COMPLEMENT));
    }
    for (j, g) in total.groups.iter().enumerate() {
        text.push(format!("H{j}(M) = {g} ({})", anchors::TOTAL_COHOMOLOGY_8));
    }
    text.push(format!(
        "chi(M) = {} ({})",
        total.euler_char,
        anchors::TOTAL_COHOMOLOGY_8
    ));
    Ok(Outcome::positive(
        text,
        json!({
            "orbit": orbit,
            "n": n,
            "orbit_complement": complement,
            "total": total,
            "anchors": [anchors::ORBIT_COMPLEMENT, anchors::TOTAL_COHOMOLOGY_8],
        }),
    ))
}

fn construct(kind: &Construct) -> CliResult<Outcome> {
    match kind {
        Construct::Connsum5 { first, second } => {
            let a1: ActionDescriptor5 = load("first", first)?;
            let a2: ActionDescriptor5 = load("second", second)?;
            let r = ctx("orbit", equivariant_connected_sum(&a1, &a2))?;
            let mut text = action_lines(&r);
            text.insert(
                0,
                format!("equivariant connected sum ({})", anchors::CONNECTED_SUM_5),
            );
            let mut json = action_json(&r);
            json["construction"] = json!(anchors::CONNECTED_SUM_5);
            Ok(Outcome::positive(text, json))
        }
        Construct::Fibresum {
            base,
            action,
            base_ebar,
        } => {
            let base: FourManifoldDesc = load("base", base)?;
            let a: ActionDescriptor5 = load("action", action)?;
            let e = vector_arg("base_ebar", base_ebar.as_deref(), base.b2())?;
            let r = ctx("base", equivariant_fibre_sum(&base, &a, Some(e)))?;
            let mut text = action_lines(&r);
            text.insert(
                0,
                format!("equivariant fibre sum ({})", anchors::FIBRE_SUM_5),
            );
            let mut json = action_json(&r);
            json["construction"] = json!(anchors::FIBRE_SUM_5);
            Ok(Outcome::positive(text, json))
        }
        Construct::Torusquot { family, a, b } => {
            let family = match family {
                FamilyArg::Spin => Family::SpinFamily,
                FamilyArg::Nonspin => Family::NonspinFamily,
            };
            let q = ctx(
                "subcircle",
                torus_quotient(TorusCircleParams::new(family, *a, *b)),
            )?;
            let anchor = anchors::TORUS_QUOTIENT;
            let text = vec![
                format!("family: {family}, subcircle ({a}, {b})"),
                format!(
                    "z-exponents: {:?}, sum {} ({anchor})",
                    q.exponents.exponents, q.exponent_sum
                ),
                format!("w2 = {} ({anchor})", q.w2),
                format!("quotient: {} (diffeo) ({anchor})", q.quotient_label),
                format!(
                    "orbit space of the induced circle action: {} (homeo) ({anchor})",
                    q.orbit_label
                ),
            ];
            let mut json = serde_json::to_value(&q).map_err(|e| e.to_string())?;
            json["anchor"] = json!(anchor);
            Ok(Outcome::positive(text, json))
        }
        Construct::Connsum8 { n1, n2 } => {
            let n = connected_sum_8(*n1, *n2).map_err(|e| format!("n1/n2: {e}"))?;
            Ok(Outcome::positive(
                vec![format!("fixed points: {n} ({})", anchors::CONNECTED_SUM_8)],
                json!({ "n1": n1, "n2": n2, "n": n, "anchor": anchors::CONNECTED_SUM_8 }),
            ))
        }
    }
}

fn join<'a, I: IntoIterator<Item = &'a u32>>(xs: I) -> String {
    xs.into_iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}
