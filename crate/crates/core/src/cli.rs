//! Command-line front end. Every command produces a [`Report`]; the binary
//! prints it as text or JSON.

use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::hamilton::{self, LinearHamiltonianModel};
use crate::largeness::{class_verdicts, prop526_verify, verify_table1};
use crate::report::{Report, Row, Status};
use crate::repthy::{freudenthal_weights, parse_weight, weyl_dim};
use crate::rootsys::{build_root_system, Family, RootSystem};
use crate::subsys::{enumerate_perpendicular_sets, is_subsystem, normalizer_dim_idx};

pub const SEED_ENV: &str = "INVMOMENT_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "invmoment",
    version,
    about = "Root systems, large reflection subgroups and moment-map invariants"
)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<std::path::PathBuf>,
    /// Seed for sampled checks (default: $INVMOMENT_SEED or 0).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the roots of a root system such as `B3` or `B 3`.
    Roots {
        #[arg(value_name = "SYSTEM", num_args = 1..=2, required = true)]
        system: Vec<String>,
    },
    /// Maximal subsystems from the (extended) Dynkin diagram.
    MaximalSubsystems {
        #[arg(value_name = "SYSTEM", num_args = 1..=2, required = true)]
        system: Vec<String>,
    },
    /// Completely perpendicular root sets up to conjugacy.
    Perp {
        #[arg(value_name = "SYSTEM", num_args = 1..=2, required = true)]
        system: Vec<String>,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
    /// Classify subsystem classes by whether their reflection group is large.
    Large {
        #[arg(value_name = "SYSTEM", num_args = 1..=2, required = true)]
        system: Vec<String>,
    },
    /// Compare the brute-force large classes with the stored classical table.
    VerifyTable1 {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
    },
    /// Large versus maximal of characteristic at most 2, simply-laced types.
    VerifyProp526 {
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
    },
    /// Weights of an irreducible module, e.g. `weights B3 pi:0,0,1` or `weights B 3 pi:0,0,1`.
    Weights {
        #[arg(value_name = "SYSTEM [RANK] WEIGHT", num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// Check the stored symplectic modules end to end.
    VerifyTable2 {
        /// Only this row (1-based).
        #[arg(long)]
        row: Option<usize>,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// Generic invariants of a module expression such as `sp4:taut+2*pwedge2`.
    Moment {
        expr: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
    /// The four-dimensional example with a reducible zero fiber.
    DemoKnop {
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Roots { .. } => "roots",
            Command::MaximalSubsystems { .. } => "maximal-subsystems",
            Command::Perp { .. } => "perp",
            Command::Large { .. } => "large",
            Command::VerifyTable1 { .. } => "verify-table1",
            Command::VerifyProp526 { .. } => "verify-prop526",
            Command::Weights { .. } => "weights",
            Command::VerifyTable2 { .. } => "verify-table2",
            Command::Moment { .. } => "moment",
            Command::DemoKnop { .. } => "demo-knop",
        }
    }
}

/// `"B3"` → (B, 3).
/// Joins `["B", "3"]` or `["B3"]` before parsing.
fn system_from_parts(parts: &[String]) -> Result<RootSystem> {
    parse_system(&parts.concat())
}

pub fn parse_system(s: &str) -> Result<RootSystem> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad root system '{s}' (expected e.g. A3, B4, E6)"));
    let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
    let family: Family = head.parse()?;
    let rank: usize = tail.parse().map_err(|_| bad())?;
    build_root_system(family, rank)
}

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var(SEED_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
    })
    .unwrap_or(0)
}

/// Systems covered by the table comparison, filtered by rank.
pub fn table1_systems(max_rank: usize) -> Vec<(Family, usize)> {
    [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 4),
    ]
    .into_iter()
    .filter(|&(_, l)| l <= max_rank)
    .collect()
}

pub fn prop526_systems(max_rank: usize) -> Vec<(Family, usize)> {
    [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::D, 4),
    ]
    .into_iter()
    .filter(|&(_, l)| l <= max_rank)
    .collect()
}

fn execute(cmd: &Command, seed: u64, report: &mut Report) -> Result<()> {
    match cmd {
        Command::Roots { system } => {
            let rs = system_from_parts(system)?;
            for i in 0..rs.len() {
                report.push(
                    Row::new(format!("{}", i + 1), true)
                        .with("root", rs.root(i).to_strings())
                        .with("positive", rs.is_positive(i))
                        .with("height", rs.height(i))
                        .with("length", rs.length_class(i).to_string()),
                );
            }
        }
        Command::MaximalSubsystems { system } => {
            let rs = system_from_parts(system)?;
            for m in crate::subsys::maximal_subsystems(&rs)? {
                let set = m.subsystem.roots();
                report.push(
                    Row::new(
                        m.subsystem.type_label(),
                        is_subsystem(&rs, set) && set.len() < rs.len(),
                    )
                    .with("characteristic", m.characteristic)
                    .with("kind", m.kind)
                    .with("deleted_node", m.deleted_node)
                    .with("roots", set.len()),
                );
            }
        }
        Command::Perp { system, max_size } => {
            let rs = system_from_parts(system)?;
            for set in enumerate_perpendicular_sets(&rs, *max_size)? {
                let roots: Vec<String> = set.iter().map(|&i| rs.root(i).to_string()).collect();
                report.push(
                    Row::new(roots.join(" "), true)
                        .with("size", set.len())
                        .with("normalizer_dim", normalizer_dim_idx(&rs, &set)?),
                );
            }
        }
        Command::Large { system } => {
            let rs = system_from_parts(system)?;
            for v in class_verdicts(&rs)? {
                let j = v.to_json(&rs);
                report.push(
                    Row::new(j.class, true)
                        .with("roots", j.roots.len())
                        .with("large", j.large)
                        .with("maximal", j.maximal)
                        .with("characteristic", j.characteristic),
                );
            }
        }
        Command::VerifyTable1 { max_rank } => {
            for (f, l) in table1_systems(*max_rank) {
                let rs = build_root_system(f, l)?;
                let check = verify_table1(&rs)?;
                let ok = check.ok();
                report.extend(check.rows);
                report.push(
                    Row::new(format!("{} summary", check.system), ok).with(
                        "collapsed",
                        check
                            .collapsed
                            .iter()
                            .map(|(label, rows)| format!("{label} <- {}", rows.join(", ")))
                            .collect::<Vec<_>>(),
                    ),
                );
            }
        }
        Command::VerifyProp526 { max_rank } => {
            for (f, l) in prop526_systems(*max_rank) {
                let rs = build_root_system(f, l)?;
                report.extend(prop526_verify(&rs, *max_rank)?);
            }
        }
        Command::Weights { args } => {
            let (weight, system) = args.split_last().expect("clap requires two arguments");
            let rs = system_from_parts(system)?;
            let lambda = parse_weight(&rs, weight)?;
            let m = freudenthal_weights(&rs, &lambda)?;
            let expected = weyl_dim(&rs, &lambda)?;
            for (w, mult) in m.weights() {
                report.push(Row::new(w.to_string(), true).with("mult", mult));
            }
            report.push(
                Row::new("dimension", m.dim() == expected)
                    .with("weight_count", m.dim())
                    .with("weyl_dimension", expected),
            );
        }
        Command::VerifyTable2 { row, samples } => match row {
            Some(r) if *r >= 1 => report.push(hamilton::verify_row(r - 1, *samples, seed)?),
            Some(_) => return Err(Error::Parse("rows are numbered from 1".into())),
            None => report.extend(hamilton::verify_table2(*samples, seed)?),
        },
        Command::Moment { expr, samples } => {
            let model = LinearHamiltonianModel::build(expr)?;
            let inv = hamilton::invariants(&model, *samples, seed)?;
            let v = &hamilton::moment::sample_points(model.dim(), 1, seed)[0];
            let check = hamilton::check_moment_identities(&model, v)?;
            report.push(
                Row::new("blocks", true).with(
                    "blocks",
                    model
                        .blocks()
                        .iter()
                        .map(|b| format!("{}:{}", b.label, b.dim))
                        .collect::<Vec<_>>(),
                ),
            );
            report.push(
                Row::new("invariants", true)
                    .with("dim_v", inv.dim_v)
                    .with("dim_g", inv.dim_g)
                    .with("rank", inv.rank_g)
                    .with("orbit_dim", inv.orbit_dim)
                    .with("defect", inv.defect)
                    .with("corank", inv.corank)
                    .with("orbit_bound", inv.orbit_bound)
                    .with("samples", inv.samples_used),
            );
            report.push(
                Row::new("identities", check.ok())
                    .with("pairs", check.pairs)
                    .with("bracket", check.bracket_ok)
                    .with("equivariance", check.equivariance_ok)
                    .with("coordinates", check.coordinates_ok),
            );
        }
        Command::DemoKnop { samples } => {
            report.extend(hamilton::knop_example_suite(*samples, seed)?)
        }
    }
    Ok(())
}

/// Exit code for a finished report: 0 pass, 1 failed or partial.
pub fn exit_code(report: &Report) -> i32 {
    match report.status {
        Status::Pass => 0,
        Status::Fail | Status::Partial => 1,
    }
}

/// Parses `argv` (including the program name) and runs the command.
/// Usage and library errors give exit code 2 and a failed report.
pub fn run<I, T>(argv: I) -> (i32, Report, Option<Cli>)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let mut r = Report::new("usage", resolve_seed(None));
            r.push(Row::new("usage", code == 0).with("message", e.to_string()));
            return (code, r, None);
        }
    };
    let seed = resolve_seed(cli.seed);
    let mut report = Report::new(cli.command.name(), seed);
    let start = Instant::now();
    let result = execute(&cli.command, seed, &mut report);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    let code = match result {
        Ok(()) => exit_code(&report),
        Err(e) => {
            if matches!(
                e,
                Error::PartialEnumeration { .. } | Error::CapExceeded { .. }
            ) && !report.rows.is_empty()
            {
                report.mark_partial();
            } else {
                report.push(Row::new("error", false).with("message", e.to_string()));
            }
            2
        }
    };
    (code, report, Some(cli))
}

/// Renders the report in the requested format.
pub fn render(report: &Report, json: bool) -> String {
    if json {
        let mut s = report.to_json();
        s.push('\n');
        s
    } else {
        report.to_text()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, Report) {
        let mut v = vec!["invmoment"];
        v.extend_from_slice(args);
        let (c, r, _) = run(v);
        (c, r)
    }

    #[test]
    fn system_names() {
        assert_eq!(parse_system("B3").unwrap().name(), "B3");
        assert_eq!(parse_system("e6").unwrap().len(), 72);
        assert!(parse_system("B").is_err());
        assert!(parse_system("X3").is_err());
        assert!(parse_system("B1").is_err());
    }

    #[test]
    fn roots_command() {
        let (code, r) = go(&["roots", "A2"]);
        assert_eq!(code, 0);
        assert_eq!(r.rows.len(), 6);
        assert_eq!(r.command, "roots");
    }

    #[test]
    fn errors_exit_2() {
        assert_eq!(go(&["roots", "Q7"]).0, 2);
        assert_eq!(go(&["no-such-command"]).0, 2);
        assert_eq!(go(&["moment", "sl3:taut"]).0, 2);
        assert_eq!(go(&["verify-table2", "--row", "9"]).0, 2);
    }

    #[test]
    fn seeds() {
        assert_eq!(go(&["--seed", "42", "roots", "A1"]).1.seed, 42);
        assert_eq!(go(&["demo-knop", "--seed", "9"]).1.seed, 9);
    }

    #[test]
    fn weights_command() {
        let (code, r) = go(&["weights", "B3", "pi:0,0,1"]);
        assert_eq!(code, 0);
        assert_eq!(r.rows.last().unwrap().field("weyl_dimension").unwrap(), 8);
        let (code, split) = go(&["weights", "B", "3", "pi:0,0,1"]);
        assert_eq!(code, 0);
        assert_eq!(split.rows, r.rows);
    }

    #[test]
    fn family_and_rank_as_separate_arguments() {
        let (code, joined) = go(&["roots", "D4"]);
        let (_, split) = go(&["roots", "D", "4"]);
        assert_eq!(code, 0);
        assert_eq!(joined.rows, split.rows);
        assert_eq!(go(&["large", "B", "3", "4"]).0, 2);
    }

    #[test]
    fn small_verifications() {
        assert_eq!(go(&["verify-table1", "--max-rank", "2"]).0, 0);
        assert_eq!(go(&["verify-prop526", "--max-rank", "3"]).0, 0);
        assert_eq!(go(&["verify-table2", "--row", "2"]).0, 0);
        assert_eq!(go(&["moment", "sp4:taut+2*pwedge2"]).0, 0);
        assert_eq!(go(&["perp", "B3"]).0, 0);
        assert_eq!(go(&["large", "C2"]).0, 0);
        assert_eq!(go(&["maximal-subsystems", "E6"]).0, 0);
    }
}
