//! `g2alg` — exact octonion arithmetic, orbit classification, and
//! equivariant class computations from the command line.
//!
//! Exit codes: `0` on success, `1` when a verification or oracle
//! comparison fails, `2` on usage or input errors.

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use g2alg::classes::{locus_class, locus_from_orbit, orbit_class, orbit_for_rank};
use g2alg::exactalg::{parse_rational, rat, Basis, Rational};
use g2alg::multidegree::orbit_class_oracle;
use g2alg::octonion::OctonionElement;
use g2alg::orbits::{classify_full, OrbitLabel};
use g2alg::verify::{self, Scope, VerifyConfig};
use g2alg::weyl::{
    billey_restriction, parse_word, pinned_convention, restriction_with_convention, word_to_string,
    WeylGroup,
};

#[derive(Parser)]
#[command(
    name = "g2alg",
    version,
    about = "Exact octonion algebra, orbit classification, and equivariant class computations"
)]
struct Cli {
    /// Emit machine-readable JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the self-verification suite and report every check.
    Verify(VerifyArgs),
    /// Classify a five-coordinate map into its orbit.
    Classify(ClassifyArgs),
    /// Print the orbit-closure classes or the degeneracy-locus classes.
    Classes(ClassesArgs),
    /// Exact arithmetic on eight-coordinate algebra elements.
    Octonion(OctonionArgs),
    /// Reflection-group data and localization restrictions.
    Weyl(WeylArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Which part of the library to verify
    /// (all, octonion, triality, orbits, classes, weyl).
    #[arg(long, default_value = "all")]
    scope: Scope,

    /// Number of random samples for the sampled checks.
    #[arg(long, default_value_t = 1000)]
    samples: usize,

    /// Base seed for the deterministic sampler.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Deliberately corrupt one oracle comparison, to demonstrate that
    /// the suite detects failures.
    #[arg(long, hide = true)]
    inject_failure: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// The five map coordinates as exact rationals (e.g. `3`, `-1/2`).
    #[arg(num_args = 5, allow_hyphen_values = true, value_names = ["A", "B", "C", "D", "Z"])]
    coords: Vec<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ClassBasis {
    /// Simple-root basis a1, a2.
    Alpha,
    /// Torus basis t1, t2.
    T,
    /// Chern-root and Chern-class presentation of the rank loci.
    Chern,
}

#[derive(Args)]
struct ClassesArgs {
    /// Output basis for the classes.
    #[arg(long, value_enum, default_value_t = ClassBasis::T)]
    basis: ClassBasis,

    /// Re-derive every class through the independent route and compare.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct OctonionArgs {
    #[command(subcommand)]
    op: OctonionOp,
}

#[derive(Subcommand)]
enum OctonionOp {
    /// Multiply two elements.
    Mul {
        /// Left factor: eight comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        /// Right factor: eight comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Quadratic-form value of one element.
    Norm {
        /// The element: eight comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        of: String,
    },
    /// Bilinear pairing of two elements.
    Bilinear {
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
}

#[derive(Args)]
struct WeylArgs {
    #[command(subcommand)]
    op: WeylOp,
}

#[derive(Subcommand)]
enum WeylOp {
    /// Group order and every element with its length and permutation.
    Info,
    /// The three distinguished locus elements and their classes.
    RankTable,
    /// Restriction of the class of `w` at a fixed point.
    Restrict {
        /// Word in the generators `s`, `t` for the class element.
        w: String,
        /// Word for the restriction point (omit with --pinned).
        v: Option<String>,
        /// Restrict at the pinned point with the pinned sign convention.
        #[arg(long)]
        pinned: bool,
    },
}

fn main() -> ExitCode {
    // Die quietly when a downstream pipe closes (e.g. `g2alg ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let json = cli.json;
    match dispatch(cli.command, json) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command, json: bool) -> Result<u8> {
    match command {
        Command::Verify(args) => cmd_verify(args, json),
        Command::Classify(args) => cmd_classify(args, json),
        Command::Classes(args) => cmd_classes(args, json),
        Command::Octonion(args) => cmd_octonion(args, json),
        Command::Weyl(args) => cmd_weyl(args, json),
    }
}

fn cmd_verify(args: VerifyArgs, json: bool) -> Result<u8> {
    let config = VerifyConfig {
        scope: args.scope,
        samples: args.samples,
        seed: args.seed,
    };
    let report = if args.inject_failure {
        verify::run_with_corruption(&config)
    } else {
        verify::run(&config)
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.render_text());
    }
    Ok(if report.all_passed { 0 } else { 1 })
}

fn cmd_classify(args: ClassifyArgs, json: bool) -> Result<u8> {
    let mut coords = Vec::with_capacity(5);
    for (name, text) in ["a", "b", "c", "d", "z"].iter().zip(&args.coords) {
        let value = parse_rational(text)
            .map_err(|e| anyhow!("coordinate {name} = `{text}`: {e}"))?;
        coords.push(value);
    }
    let [a, b, c, d, z]: [Rational; 5] = coords.try_into().expect("five coordinates");
    let map = g2alg::triality::TrialitySymmetricMap { a, b, c, d, z };
    let full = classify_full(&map);
    if !full.agree() {
        bail!(
            "internal classifier disagreement: {} vs {}",
            full.label.name(),
            full.by_multiplicity.name()
        );
    }
    let profile_text = match &full.root_profile {
        Some(profile) => format!("{profile:?}"),
        None => "none (zero cubic)".to_string(),
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "label": full.label.name(),
                "codim": full.label.codim(),
                "cubic": full.cubic.as_poly().to_string(),
                "discriminant": full.discriminant.to_string(),
                "minor_rank": full.minor_rank,
                "root_profile": full.root_profile,
                "z": full.z.to_string(),
            }))?
        );
    } else {
        println!("orbit:         {} (codim {})", full.label.name(), full.label.codim());
        println!("cubic:         {}", full.cubic.as_poly());
        println!("discriminant:  {}", full.discriminant);
        println!("minor rank:    {}", full.minor_rank);
        println!("root profile:  {profile_text}");
        println!("z coordinate:  {}", full.z);
    }
    Ok(0)
}

fn cmd_classes(args: ClassesArgs, json: bool) -> Result<u8> {
    let mut all_match = true;
    let mut rows = Vec::new();
    match args.basis {
        ClassBasis::Alpha | ClassBasis::T => {
            let basis = if args.basis == ClassBasis::Alpha {
                Basis::Alpha
            } else {
                Basis::T
            };
            for label in OrbitLabel::all() {
                let class = orbit_class(label, basis);
                let mut row = json!({
                    "label": label.name(),
                    "codim": label.codim(),
                    "class": class.to_string(),
                });
                if args.oracle {
                    let oracle = orbit_class_oracle(label, basis);
                    let matches = oracle.class == class;
                    all_match &= matches;
                    row["oracle_matches"] = json!(matches);
                    row["oracle_route"] = json!(oracle.route);
                }
                rows.push(row);
            }
        }
        ClassBasis::Chern => {
            for rank in [2usize, 1, 0] {
                let class = locus_class(rank);
                let mut row = json!({
                    "rank": rank,
                    "orbit": orbit_for_rank(rank).name(),
                    "in_roots": class.in_roots.to_string(),
                    "in_chern": class.in_chern.to_string(),
                });
                if args.oracle {
                    let matches = locus_from_orbit(rank) == class.in_roots;
                    all_match &= matches;
                    row["oracle_matches"] = json!(matches);
                    row["oracle_route"] = json!("orbit class specialized along t -> -x");
                }
                rows.push(row);
            }
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&json!(rows))?);
    } else {
        for row in &rows {
            let head = match args.basis {
                ClassBasis::Chern => format!(
                    "rank {} ({}): roots {} | chern {}",
                    row["rank"], row["orbit"].as_str().unwrap_or(""),
                    row["in_roots"].as_str().unwrap_or(""),
                    row["in_chern"].as_str().unwrap_or("")
                ),
                _ => format!(
                    "{} (codim {}): {}",
                    row["label"].as_str().unwrap_or(""),
                    row["codim"],
                    row["class"].as_str().unwrap_or("")
                ),
            };
            if args.oracle {
                let mark = if row["oracle_matches"].as_bool().unwrap_or(false) {
                    "matches oracle"
                } else {
                    "DIFFERS FROM ORACLE"
                };
                println!("{head}  [{mark}: {}]", row["oracle_route"].as_str().unwrap_or(""));
            } else {
                println!("{head}");
            }
        }
    }
    Ok(if all_match { 0 } else { 1 })
}

fn cmd_octonion(args: OctonionArgs, json: bool) -> Result<u8> {
    match args.op {
        OctonionOp::Mul { lhs, rhs } => {
            let product = parse_element(&lhs)?.multiply(&parse_element(&rhs)?);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!(product.to_canonical_strings()))?
                );
            } else {
                println!("{}", element_text(&product));
            }
        }
        OctonionOp::Norm { of } => {
            let value = parse_element(&of)?.norm();
            if json {
                println!("{}", serde_json::to_string_pretty(&json!(value.to_string()))?);
            } else {
                println!("{value}");
            }
        }
        OctonionOp::Bilinear { lhs, rhs } => {
            let value = parse_element(&lhs)?.bilinear(&parse_element(&rhs)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&json!(value.to_string()))?);
            } else {
                println!("{value}");
            }
        }
    }
    Ok(0)
}

fn cmd_weyl(args: WeylArgs, json: bool) -> Result<u8> {
    let group = WeylGroup::get();
    match args.op {
        WeylOp::Info => {
            let rows: Vec<_> = group
                .elements()
                .iter()
                .map(|w| {
                    json!({
                        "word": display_word(w.canonical_word()),
                        "length": w.length(),
                        "permutation": w.permutation(),
                    })
                })
                .collect();
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "order": group.order(),
                        "elements": rows,
                    }))?
                );
            } else {
                println!("order: {}", group.order());
                for row in &rows {
                    println!(
                        "  {:<7} length {}  permutation {}",
                        row["word"].as_str().unwrap_or(""),
                        row["length"],
                        row["permutation"]
                    );
                }
            }
        }
        WeylOp::RankTable => {
            let mut rows = Vec::new();
            for rank in [2usize, 1, 0] {
                let w = group.locus_element(rank);
                let label = orbit_for_rank(rank);
                rows.push(json!({
                    "rank": rank,
                    "word": display_word(w.canonical_word()),
                    "length": w.length(),
                    "r22": w.rank(2, 2),
                    "orbit": label.name(),
                    "class_t": orbit_class(label, Basis::T).to_string(),
                }));
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&json!(rows))?);
            } else {
                for row in &rows {
                    println!(
                        "rank {} -> {:<7} length {}  r(2,2) = {}  orbit {}  class {}",
                        row["rank"],
                        row["word"].as_str().unwrap_or(""),
                        row["length"],
                        row["r22"],
                        row["orbit"].as_str().unwrap_or(""),
                        row["class_t"].as_str().unwrap_or("")
                    );
                }
            }
        }
        WeylOp::Restrict { w, v, pinned } => {
            let w_elt = group.element_from_word(&parse_word(&w).map_err(|e| anyhow!(e))?);
            let (value, point_word) = if pinned {
                if v.is_some() {
                    bail!("--pinned fixes the restriction point; do not pass one");
                }
                let convention = pinned_convention();
                (
                    restriction_with_convention(w_elt, &convention.point, convention.sign),
                    display_word(convention.point.canonical_word()),
                )
            } else {
                let v_text = v.ok_or_else(|| {
                    anyhow!("pass a restriction point word, or use --pinned")
                })?;
                let v_elt = group.element_from_word(&parse_word(&v_text).map_err(|e| anyhow!(e))?);
                (billey_restriction(w_elt, v_elt), display_word(v_elt.canonical_word()))
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "w": display_word(w_elt.canonical_word()),
                        "point": point_word,
                        "pinned": pinned,
                        "restriction": value.to_string(),
                    }))?
                );
            } else {
                println!("{value}");
            }
        }
    }
    Ok(0)
}

/// Parses eight comma-separated rationals into an algebra element.
fn parse_element(text: &str) -> Result<OctonionElement<Rational>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 8 {
        bail!(
            "an element needs exactly 8 comma-separated coordinates, got {}",
            parts.len()
        );
    }
    let mut coords = Vec::with_capacity(8);
    for (i, part) in parts.iter().enumerate() {
        let value = parse_rational(part)
            .map_err(|e| anyhow!("coordinate {} = `{part}`: {e}", i + 1))
            .context("expected an exact rational like 3 or -1/2")?;
        coords.push(value);
    }
    Ok(OctonionElement::from_coords(
        coords.try_into().expect("eight coordinates"),
    ))
}

/// Writes an element as a signed combination of the basis vectors.
fn element_text(e: &OctonionElement<Rational>) -> String {
    let zero = rat(0);
    let one = rat(1);
    let mut out = String::new();
    for (i, c) in e.coords.iter().enumerate() {
        if *c == zero {
            continue;
        }
        let positive = c > &zero;
        if out.is_empty() {
            if !positive {
                out.push('-');
            }
        } else {
            out.push_str(if positive { " + " } else { " - " });
        }
        let magnitude = if positive { c.clone() } else { -c.clone() };
        if magnitude != one {
            out.push_str(&format!("{magnitude}*"));
        }
        out.push_str(&format!("v{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn display_word(word: &[g2alg::weyl::Gen]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word_to_string(word)
    }
}
