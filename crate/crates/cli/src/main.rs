use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use duality::concrete::{
    check_pairing_invariance, dualize_symbolic, random_g3, seeded_rng, solve_dual_oracle_with,
    BuildingDims, ConcreteError, IndexFrame, OracleConfig,
};
use duality::group::{dg2_report, dg3_report, GroupReport};
use duality::symbolic::{
    describe_row, element_order, eval_word, matrix6, RhoStyle, GENERATOR_TABLE_ORDER,
};
use duality::verify::{criterion_id, run_criteria, verify_paper_tables};
use duality::word::{format_word, parse_word, Generator, Word};

#[derive(Parser)]
#[command(
    name = "duality",
    version,
    about = "Duality groups of double and triple vector bundles"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupName {
    Dg2,
    Dg3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Axis {
    X,
    Y,
    Z,
}

impl From<Axis> for Generator {
    fn from(a: Axis) -> Self {
        match a {
            Axis::X => Generator::X,
            Axis::Y => Generator::Y,
            Axis::Z => Generator::Z,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical element of a word.
    Parse { word: String },
    /// Whether two words give the same element.
    Eq { first: String, second: String },
    /// Order of the element.
    Order { word: String },
    /// Action on G₃ in the column order γ, β, α, λ, μ, ν, ρ.
    Act { word: String },
    /// Signed 6×6 matrix of the action on the six slots.
    Matrix { word: String },
    /// Permutation of the indices {0,1,2,3}, in cycle notation.
    Pi { word: String },
    /// Order, classes, normal subgroups and extension structure.
    Enumerate {
        #[arg(long, value_enum, default_value = "dg3")]
        group: GroupName,
    },
    /// Run the acceptance checks.
    Verify {
        /// Only the rows of one printed table (2 to 6).
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=6), conflicts_with = "check")]
        table: Option<u8>,
        /// Only one named check, e.g. `split`, or its number.
        #[arg(long)]
        check: Option<String>,
    },
    /// Compare the pairing-invariance oracle with the symbolic dual.
    Oracle {
        /// Dimensions of E1, E2, E3, E12, E13, E23, E123.
        #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "2,2,2,2,2,2,2")]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Compatible pairs used for the pairing-invariance check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Dualization axis; all three when omitted.
        #[arg(long, value_enum, ignore_case = true)]
        dual: Option<Axis>,
    },
}

/// Result of a command: exit status, text rendering, JSON rendering.
struct Output {
    ok: bool,
    text: String,
    json: Value,
}

struct UsageError(String);

fn word(text: &str) -> Result<Word, UsageError> {
    parse_word(text).map_err(|e| UsageError(format!("{text:?}: {e}")))
}

fn run(cmd: &Command) -> Result<(&'static str, Output), UsageError> {
    let out = match cmd {
        Command::Parse { word: w } => ("parse", parse_cmd(&word(w)?)),
        Command::Eq { first, second } => {
            let same = eval_word(&word(first)?) == eval_word(&word(second)?);
            (
                "eq",
                Output {
                    ok: true,
                    text: same.to_string(),
                    json: json!(same),
                },
            )
        }
        Command::Order { word: w } => {
            let n = element_order(&eval_word(&word(w)?));
            (
                "order",
                Output {
                    ok: true,
                    text: n.to_string(),
                    json: json!(n),
                },
            )
        }
        Command::Act { word: w } => {
            let row = describe_row(&eval_word(&word(w)?))
                .render(&GENERATOR_TABLE_ORDER, RhoStyle::PairsFirst);
            (
                "act",
                Output {
                    ok: true,
                    text: row.clone(),
                    json: json!(row),
                },
            )
        }
        Command::Matrix { word: w } => {
            let m = matrix6(&eval_word(&word(w)?));
            let text = m
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| format!("{x:>2}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join("\n");
            (
                "matrix",
                Output {
                    ok: true,
                    text,
                    json: json!(m),
                },
            )
        }
        Command::Pi { word: w } => {
            let p = eval_word(&word(w)?).perm.to_string();
            (
                "pi",
                Output {
                    ok: true,
                    text: p.clone(),
                    json: json!(p),
                },
            )
        }
        Command::Enumerate { group } => ("enumerate", enumerate_cmd(*group)?),
        Command::Verify { table, check } => ("verify", verify_cmd(*table, check.as_deref())?),
        Command::Oracle {
            dims,
            seed,
            samples,
            dual,
        } => ("oracle", oracle_cmd(dims, *seed, *samples, *dual)?),
    };
    Ok(out)
}

fn parse_cmd(w: &Word) -> Output {
    let e = eval_word(w);
    let row = describe_row(&e).render(&GENERATOR_TABLE_ORDER, RhoStyle::PairsFirst);
    Output {
        ok: true,
        text: format!("word {}\nperm {}\nrow  {row}", format_word(w), e.perm),
        json: json!({
            "word": format_word(w),
            "perm": e.perm.to_string(),
            "row": row,
            "element": serde_json::to_value(&e).expect("elements serialize"),
        }),
    }
}

fn enumerate_cmd(group: GroupName) -> Result<Output, UsageError> {
    let report = match group {
        GroupName::Dg2 => dg2_report(),
        GroupName::Dg3 => dg3_report(),
    }
    .map_err(|e| UsageError(e.to_string()))?;
    Ok(Output {
        ok: true,
        text: render_report(&report),
        json: serde_json::to_value(&report).expect("reports serialize"),
    })
}

fn render_report(r: &GroupReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {}\norder {}", r.group, r.order);
    let _ = writeln!(s, "classes {}", r.classes.len());
    for c in &r.classes {
        let _ = writeln!(
            s,
            "  {:<10} size {:>2}  order {}",
            format_word(&c.rep),
            c.size,
            c.order
        );
    }
    let _ = writeln!(s, "normal subgroups {}", r.normal_subgroups.len());
    for n in &r.normal_subgroups {
        let gens: Vec<String> = n.generators.iter().map(format_word).collect();
        let _ = writeln!(
            s,
            "  size {:>2}  generated by {{{}}}",
            n.size,
            gens.join(", ")
        );
    }
    let kernel: Vec<String> = r.kernel.iter().map(format_word).collect();
    let _ = writeln!(s, "kernel of π {{{}}}", kernel.join(", "));
    if let Some(h) = &r.semidirect {
        let _ = writeln!(
            s,
            "semidirect {}: a, b, c orders {:?}, |H| = {}, |⟨X,Y⟩| = {}, H ∩ ⟨X,Y⟩ = 1 {}, conjugation action {:?}",
            if h.ok { "ok" } else { "FAILED" },
            h.orders,
            h.h_order,
            h.s3_order,
            h.trivial_intersection,
            h.conjugation_action
        );
    }
    if let Some(m) = &r.k4_module {
        let pairs: Vec<String> = m
            .bijection
            .iter()
            .map(|p| format!("{} ↦ {}", format_word(&p.kernel_element), p.klein_element))
            .collect();
        let _ = writeln!(
            s,
            "kernel as S₄-module {}: {}",
            if m.ok { "ok" } else { "FAILED" },
            pairs.join(", ")
        );
    }
    if let Some(sp) = &r.split {
        if sp.split {
            let _ = writeln!(s, "split");
        } else {
            let _ = writeln!(
                s,
                "not split: {}/{} sections fail",
                sp.failing, sp.candidates
            );
        }
    }
    s.trim_end().to_string()
}

fn verify_cmd(table: Option<u8>, check: Option<&str>) -> Result<Output, UsageError> {
    if let Some(n) = table {
        let t = duality::group::enumerate_dg3().map_err(|e| UsageError(e.to_string()))?;
        let report = verify_paper_tables(&t).for_table(n);
        let text = report
            .checks
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Output {
            ok: report.all_pass(),
            text,
            json: serde_json::to_value(&report).expect("reports serialize"),
        });
    }
    let ids = match check {
        Some(name) => {
            vec![criterion_id(name).ok_or_else(|| UsageError(format!("unknown check {name:?}")))?]
        }
        None => Vec::new(),
    };
    let results = run_criteria(&ids);
    let ok = results.iter().all(|r| r.pass);
    let text = if check.is_some() {
        results
            .iter()
            .map(|r| r.detail.clone())
            .collect::<Vec<_>>()
            .join("\n")
    } else {
        let mut lines: Vec<String> = results.iter().map(ToString::to_string).collect();
        let passed = results.iter().filter(|r| r.pass).count();
        lines.push(format!("{passed}/{} criteria pass", results.len()));
        lines.join("\n")
    };
    Ok(Output {
        ok,
        text,
        json: serde_json::to_value(&results).expect("results serialize"),
    })
}

fn oracle_cmd(
    dims: &[usize],
    seed: u64,
    samples: usize,
    dual: Option<Axis>,
) -> Result<Output, UsageError> {
    let dims: [usize; 7] = dims
        .try_into()
        .map_err(|_| UsageError(format!("--dims takes 7 integers, got {}", dims.len())))?;
    let dims = BuildingDims::from_array(dims);
    let g = random_g3(dims, seed);
    let axes: Vec<Generator> = match dual {
        Some(a) => vec![a.into()],
        None => Generator::ALL.to_vec(),
    };
    let mut rng = seeded_rng(seed);
    let mut ok = true;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for axis in axes {
        let mut run = || -> Result<_, ConcreteError> {
            let (symbolic, _) = dualize_symbolic(&g, IndexFrame::identity(), axis)?;
            let solved = solve_dual_oracle_with(&g, axis, OracleConfig::default())?;
            let inv = check_pairing_invariance(&g, &symbolic, axis, samples, &mut rng)?;
            Ok((
                solved.dual == symbolic,
                solved.unknowns,
                solved.samples_used,
                inv.violations,
            ))
        };
        let (equal, unknowns, used, violations) = run().map_err(|e| UsageError(e.to_string()))?;
        ok &= equal && violations == 0;
        lines.push(format!(
            "{axis}: oracle {} symbolic dual ({unknowns} unknowns, {used} samples); pairing violations {violations}/{samples}",
            if equal { "equals" } else { "DIFFERS FROM" }
        ));
        rows.push(json!({
            "axis": axis.to_string(),
            "equal": equal,
            "unknowns": unknowns,
            "samples_used": used,
            "pairing_samples": samples,
            "violations": violations,
        }));
    }
    Ok(Output {
        ok,
        text: lines.join("\n"),
        json: json!({ "dims": dims.to_array(), "seed": seed, "axes": rows }),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((name, out)) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "command": name, "result": out.json }))
                        .expect("json output")
                ),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
