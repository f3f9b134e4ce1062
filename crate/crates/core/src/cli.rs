//! The `dnbranch` command line.
//!
//! [`run`] executes one command line and returns the process exit code.
//! Output goes to the supplied writers.
//!
//! Exit codes: 0 success, 1 runtime error or failed suite, 2 usage error
//! (including an invalid `e`), 3 bipartition not Kleshchev.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::branching::{self, InvolutionSummary, Sign};
use crate::crystal::Lattice;
use crate::diagram::Bipartition;
use crate::error::{Error, Result};
use crate::io::{self, Cache, Document, Payload};
use crate::oracle::{self, Status};
use crate::params::{classify_regime, CrystalParams, Modulus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "dnbranch",
    version,
    about = "Branching rules for type-D Hecke algebras via Kleshchev bipartitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Quantum characteristic: an integer >= 2 or "inf".
    #[arg(long, global = true, default_value = "inf")]
    pub e: String,

    /// Rank of the algebra; defaults to the size of --bipartition when given.
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// A bipartition such as "2,1|1,1" or "-|2".
    #[arg(long, global = true)]
    pub bipartition: Option<String>,

    /// Sign of a split label, "+" or "-".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sign: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Oracle suite for `verify`.
    #[arg(long, global = true)]
    pub suite: Option<String>,

    /// Build lattices from scratch and leave the cache untouched.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Levels and arrows of the good lattice up to level n.
    Lattice,
    /// Labels of the irreducible modules at level n.
    Labels,
    /// Socle of the restriction of one label, or the whole branching graph.
    Branch,
    /// The involution h at a bipartition.
    Involution,
    /// Number of standard bitableaux of a bipartition.
    Dims,
    /// Run an oracle suite.
    Verify,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidE(_)
        | Error::InvalidArgument(_)
        | Error::Parse { .. }
        | Error::SizeMismatch { .. }
        | Error::NotSemisimple { .. }
        | Error::SchemaMismatch(_) => 2,
        Error::NotKleshchev(_) => 3,
        _ => 1,
    }
}

struct Context<'a> {
    cli: &'a Cli,
    e: Modulus,
}

impl Context<'_> {
    fn bipartition(&self) -> Result<Option<Bipartition>> {
        self.cli.bipartition.as_deref().map(str::parse).transpose()
    }

    fn require_bipartition(&self, command: &str) -> Result<Bipartition> {
        self.bipartition()?
            .ok_or_else(|| Error::InvalidArgument(format!("{command} needs --bipartition")))
    }

    fn sign(&self) -> Result<Option<Sign>> {
        self.cli
            .sign
            .as_deref()
            .map(|s| Sign::parse(s).ok_or_else(|| Error::InvalidArgument(format!("--sign must be + or -, got {s:?}"))))
            .transpose()
    }

    /// `--n`, or the size of `lambda`; the two must agree when both are given.
    fn rank(&self, lambda: Option<&Bipartition>, command: &str) -> Result<usize> {
        match (self.cli.n, lambda) {
            (Some(n), Some(b)) if b.size() != n => Err(Error::SizeMismatch { left: b.size(), right: n }),
            (Some(n), _) => Ok(n),
            (None, Some(b)) => Ok(b.size()),
            (None, None) => Err(Error::InvalidArgument(format!("{command} needs --n"))),
        }
    }

    fn lattice(&self, n: usize, params: CrystalParams) -> Result<Lattice> {
        if self.cli.no_cache {
            return Lattice::build(n, params);
        }
        match Cache::from_env() {
            Ok(cache) => cache.load_or_build(n, params),
            Err(e) => {
                log::warn!("lattice cache unavailable: {e}");
                Lattice::build(n, params)
            }
        }
    }

    fn reject_dot(&self, command: &str) -> Result<()> {
        if self.cli.format == Format::Dot {
            return Err(Error::InvalidArgument(format!(
                "--format dot is only available for lattice and branch, not {command}"
            )));
        }
        Ok(())
    }
}

fn header(params: &CrystalParams, n: usize) -> String {
    format!("# {params} n={n}")
}

fn json(out: &mut dyn Write, params: CrystalParams, payload: Payload) -> Result<()> {
    write_all(out, &io::serialize_json(&Document::new(params, payload)))
}

fn write_all(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let ctx = Context {
        cli,
        e: Modulus::parse_e(&cli.e)?,
    };
    match cli.command {
        Command::Lattice => cmd_lattice(&ctx, out),
        Command::Labels => cmd_labels(&ctx, out),
        Command::Branch => cmd_branch(&ctx, out),
        Command::Involution => cmd_involution(&ctx, out),
        Command::Dims => cmd_dims(&ctx, out),
        Command::Verify => cmd_verify(&ctx, out),
    }
}

fn counted(k: usize, one: &str, many: &str) -> String {
    format!("{k} {}", if k == 1 { one } else { many })
}

fn cmd_lattice(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    let n = ctx.rank(None, "lattice")?;
    let params = classify_regime(n, ctx.e)?;
    let lattice = ctx.lattice(n, params)?;
    match ctx.cli.format {
        Format::Json => json(out, params, Payload::Lattice(lattice))?,
        Format::Dot => write_all(out, &io::lattice_dot(&lattice))?,
        Format::Text => {
            let mut text = header(&params, n) + "\n";
            for (m, level) in lattice.levels().iter().enumerate() {
                text += &format!("level {m}: {}\n", counted(level.len(), "vertex", "vertices"));
                for b in level {
                    text += &format!("  {b}\n");
                }
                if m < n {
                    for edge in lattice.edges_from_level(m) {
                        text += &format!("  {} -[{}]-> {}\n", edge.from, edge.color.residue, edge.to);
                    }
                }
            }
            write_all(out, &text)?;
        }
    }
    Ok(0)
}

fn cmd_labels(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    ctx.reject_dot("labels")?;
    let n = ctx.rank(None, "labels")?;
    let params = classify_regime(n, ctx.e)?;
    let lattice = ctx.lattice(n, params)?;
    let labels = branching::labels(n, &lattice)?;
    match ctx.cli.format {
        Format::Json => json(out, params, Payload::Labels { n, labels })?,
        _ => {
            let split = labels.iter().filter(|l| l.is_split()).count();
            let mut text = header(&params, n) + "\n";
            text += &format!(
                "{} ({} unsplit, {} split)\n",
                counted(labels.len(), "label", "labels"),
                labels.len() - split,
                split
            );
            for l in &labels {
                text += &format!("{l}\n");
            }
            write_all(out, &text)?;
        }
    }
    Ok(0)
}

fn cmd_branch(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    let lambda = ctx.bipartition()?;
    let n = ctx.rank(lambda.as_ref(), "branch")?;
    let params = classify_regime(n, ctx.e)?;
    let sign = ctx.sign()?;
    if lambda.is_none() && sign.is_some() {
        return Err(Error::InvalidArgument("--sign needs --bipartition".into()));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("branching needs n >= 1".into()));
    }
    let lattice = ctx.lattice(n, params)?;
    let socles = match &lambda {
        None => branching::branching_graph(n, &lattice)?,
        Some(b) => {
            lattice.require(b)?;
            let labels = if sign.is_none() && branching::is_fixed(b, &lattice)? && !b.is_empty() {
                vec![
                    branching::label_for(b, Some(Sign::Plus), &lattice)?,
                    branching::label_for(b, Some(Sign::Minus), &lattice)?,
                ]
            } else {
                vec![branching::label_for(b, sign, &lattice)?]
            };
            labels
                .iter()
                .map(|l| branching::socle_restriction(l, &lattice))
                .collect::<Result<Vec<_>>>()?
        }
    };
    match ctx.cli.format {
        Format::Json => json(out, params, Payload::Branching { n, socles })?,
        Format::Dot => write_all(out, &io::branching_dot(&params, n, &socles))?,
        Format::Text => {
            let mut text = header(&params, n) + "\n";
            if let (Some(b), Some(first)) = (&lambda, socles.first()) {
                if &first.source.rep != b {
                    text += &format!("# {b} is labelled by its class representative {}\n", first.source.rep);
                }
            }
            for s in &socles {
                text += &format!("{s}\n");
            }
            write_all(out, &text)?;
        }
    }
    Ok(0)
}

fn cmd_involution(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    ctx.reject_dot("involution")?;
    let lambda = ctx.require_bipartition("involution")?;
    let n = ctx.rank(Some(&lambda), "involution")?;
    let params = classify_regime(n, ctx.e)?;
    let lattice = ctx.lattice(n, params)?;
    let summary = InvolutionSummary::compute(&lambda, &lattice)?;
    match ctx.cli.format {
        Format::Json => json(out, params, Payload::Involution(summary))?,
        _ => {
            let counts: Vec<String> = summary.residue_counts.0.iter().map(|(r, c)| format!("{r}:{c}")).collect();
            let balance = if summary.residue_counts.is_balanced(&params) {
                "balanced"
            } else {
                "not balanced"
            };
            let special = match summary.special {
                Some(node) => format!("yes, special node {node}"),
                None => "no".to_string(),
            };
            let text = format!(
                "{}\nbipartition: {}\nh: {}\nfixed point: {}\nalmost symmetric: {special}\nresidue counts: {} ({balance})\n",
                header(&params, n),
                summary.lambda,
                summary.image,
                if summary.fixed { "yes" } else { "no" },
                counts.join(" "),
            );
            write_all(out, &text)?;
        }
    }
    Ok(0)
}

fn cmd_dims(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    ctx.reject_dot("dims")?;
    let lambda = ctx.require_bipartition("dims")?;
    let n = ctx.rank(Some(&lambda), "dims")?;
    let params = classify_regime(n, ctx.e)?;
    let dimension = oracle::bipartition_dimension(&lambda)?;
    match ctx.cli.format {
        Format::Json => json(out, params, Payload::Dimension { lambda, dimension })?,
        _ => write_all(out, &format!("{dimension}\n"))?,
    }
    Ok(0)
}

fn cmd_verify(ctx: &Context, out: &mut dyn Write) -> Result<i32> {
    ctx.reject_dot("verify")?;
    let suite = ctx.cli.suite.as_deref().ok_or_else(|| {
        Error::InvalidArgument(format!("verify needs --suite, one of {}", oracle::SUITES.join(", ")))
    })?;
    let n = ctx.rank(None, "verify")?;
    let params = classify_regime(n, ctx.e)?;
    let report = oracle::run_suite(suite, n, &params)?;
    let code = if report.status() == Status::Pass { 0 } else { 1 };
    match ctx.cli.format {
        Format::Json => json(out, report.params, Payload::Report(report))?,
        _ => write_all(out, &format!("{}\n{report}", header(&params, n)))?,
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["dnbranch", "--no-cache"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["lattice", "--e", "1", "--n", "3"]).0, 2);
        assert_eq!(call(&["lattice"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["dims", "--bipartition", "2,3|-"]).0, 2);
        assert_eq!(call(&["labels", "--n", "3", "--format", "dot"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("involution"));
    }

    #[test]
    fn dims_text() {
        assert_eq!(call(&["dims", "--bipartition", "2,1|1,1"]), (0, "20\n".into(), String::new()));
    }

    #[test]
    fn sign_on_non_fixed_is_usage_error() {
        let (code, _, err) = call(&["branch", "--e", "inf", "--n", "5", "--bipartition", "2,1|1,1", "--sign", "-"]);
        assert_eq!(code, 2, "{err}");
    }

    #[test]
    fn not_kleshchev_exits_three() {
        let (code, _, err) = call(&["involution", "--e", "4", "--bipartition", "3|-"]);
        assert_eq!(code, 3, "{err}");
    }
}
