use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};

use liebound::bounds::general_parabolic_certificate;
use liebound::homotopy::{rational_homotopy_type, weyl_degrees};
use liebound::parabolic::{levi_decomposition, NodeSet};
use liebound::search::{certificate, good_nodes, standard_node, ParabolicCertificate};
use liebound::tables::{emit_table, TableId};
use liebound::{audit, parse_expr, verdict, EmbedQuery, RootSystem, SimpleType};

/// Exit status for any error; 0-2 encode verdicts.
const EXIT_ERROR: u8 = 3;

#[derive(Parser)]
#[command(name = "liebound", version, about = "Embedding-dimension bounds for algebraic groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether every d-dimensional smooth affine variety embeds into
    /// the target. Exit status: 0 embeds, 1 a non-embeddable variety exists,
    /// 2 unknown. Enter groups in Levi-decomposed form, e.g. `A2 x Aff3`.
    Verdict {
        /// Target group, e.g. `B4 x C3`, `A1^3`, `A2 x Aff1`.
        expr: String,
        #[arg(long = "dim", short = 'd')]
        dim: u64,
        #[arg(long)]
        json: bool,
        /// Also report the best product-parabolic certificate for the
        /// general criterion. It does not affect the verdict.
        #[arg(long)]
        diagnose: bool,
    },
    /// Regenerate a table: dims, parabolic-classical, parabolic-exceptional,
    /// homotopy or margins.
    Tables {
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Dimension profile of maximal parabolics of a simple type. Without
    /// options, the standard node is used.
    Parabolic {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Node to delete (Bourbaki numbering).
        #[arg(long, conflicts_with = "all")]
        node: Option<usize>,
        /// Every maximal parabolic.
        #[arg(long)]
        all: bool,
    },
    /// Weyl degrees and rational homotopy type of a simple type.
    Homotopy {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
    /// Run every internal audit; nonzero exit on any failure.
    Verify,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_ERROR),
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Verdict {
            expr,
            dim,
            json,
            diagnose,
        } => {
            let target = parse_expr(expr)?;
            let query = EmbedQuery::new(target, *dim);
            let v = verdict(&query)?;
            let cert = if *diagnose {
                general_parabolic_certificate(&query)?
            } else {
                None
            };
            let text = if *json {
                let mut value = v.to_json();
                if *diagnose {
                    value["parabolic_certificate"] = serde_json::to_value(&cert)?;
                }
                serde_json::to_string_pretty(&value)? + "\n"
            } else {
                let mut s = format!(
                    "target: {}\nverdict: {}\nrule: {}\ninequality: {}\ntotal_dim: {}\nd: {}\nsemantics: {}\n",
                    query.target,
                    v.kind,
                    v.witness.map_or("-", |r| r.name()),
                    v.inequality,
                    v.total_dim,
                    v.d,
                    v.semantics()
                );
                if *diagnose {
                    match &cert {
                        Some(c) => {
                            let parts: Vec<String> = c
                                .factors
                                .iter()
                                .map(|f| {
                                    let nodes: Vec<String> = f.deleted.iter().map(usize::to_string).collect();
                                    format!("{} minus {{{}}}", f.ty, nodes.join(", "))
                                })
                                .collect();
                            s.push_str(&format!(
                                "parabolic: {} (dim R_u = {}, dim P^u = {}, certifies: {})\nparabolic_inequality: {}\n",
                                parts.join(" x "),
                                c.dim_unip_rad,
                                c.dim_pu,
                                if c.certifies { "yes" } else { "no" },
                                c.inequality
                            ));
                        }
                        None => s.push_str("parabolic: none (no simple factor)\n"),
                    }
                }
                s
            };
            emit(&cli.out, &text)?;
            Ok(v.kind.exit_code() as u8)
        }
        Command::Tables { id, format } => {
            let id: TableId = id.parse()?;
            let report = emit_table(id)?;
            let text = match format {
                Format::Tsv => report.to_tsv(),
                Format::Json => report.to_json(),
            };
            emit(&cli.out, &text)?;
            Ok(0)
        }
        Command::Parabolic { ty, node, all } => {
            let ty: SimpleType = ty.parse()?;
            let rs = RootSystem::new(ty);
            let nodes: Vec<usize> = if *all {
                (1..=ty.rank()).collect()
            } else {
                vec![node.unwrap_or_else(|| standard_node(ty))]
            };
            let good = good_nodes(&rs)?;
            let mut text = String::from(
                "type\tdeleted_node\tlevi\tdim_g\tdim_levi_ss\tdim_unip_rad\tdim_p\tdim_pu\tpu_le_3ru\tmargin\tstandard\n",
            );
            for s in nodes {
                let c: ParabolicCertificate = certificate(&rs, s)?;
                let levi = levi_decomposition(&rs, &NodeSet::maximal(ty.rank(), s)?)?;
                let p = &c.profile;
                debug_assert_eq!(c.satisfies_3ru, good.contains(&s));
                text.push_str(&format!(
                    "{}\t{s}\t{levi}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
                    ty.subscripted(),
                    p.dim_g,
                    p.dim_levi_ss,
                    p.dim_unip_rad,
                    p.dim_p,
                    p.dim_pu,
                    if c.satisfies_3ru { "yes" } else { "no" },
                    c.margin,
                    if s == standard_node(ty) { "yes" } else { "no" },
                ));
            }
            emit(&cli.out, &text)?;
            Ok(0)
        }
        Command::Homotopy { ty } => {
            let ty: SimpleType = ty.parse()?;
            let degrees: Vec<String> = weyl_degrees(ty).0.iter().map(u64::to_string).collect();
            let ht = rational_homotopy_type(ty)?;
            let text = format!(
                "type: {}\ndim: {}\ndegrees: {}\nrational_homotopy_type: {ht}\n",
                ty.subscripted(),
                ty.dim(),
                degrees.join(", ")
            );
            emit(&cli.out, &text)?;
            Ok(0)
        }
        Command::Verify => {
            let outcomes = audit::run_all();
            let mut text = String::new();
            for o in &outcomes {
                text.push_str(&format!(
                    "{} {}: {}\n",
                    if o.passed { "PASS" } else { "FAIL" },
                    o.name,
                    o.detail
                ));
            }
            let failed = outcomes.iter().filter(|o| !o.passed).count();
            emit(&cli.out, &text)?;
            if failed > 0 {
                bail!("{failed} of {} checks failed", outcomes.len());
            }
            Ok(0)
        }
    }
}
