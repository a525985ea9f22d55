//! Command-line front end. Every command maps to one library operation.
//!
//! Algebra arguments accept a file path, `-` for standard input,
//! `catalog:NAME`, or a bare catalog name. Exit codes: 0 on success, 2 on
//! invalid input, 1 on internal errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::LieAlgebra;
use crate::catalog;
use crate::coadjoint::{coadjoint_matrix, invariant_report};
use crate::exterior::{dual_names, format_mc_system, FormStyle};
use crate::fingerprint::fingerprint;
use crate::genproduct::{enumerate_types, generator_product, solvability_index_product, theorem1_for, verify_prop4, GeneratorProduct};
use crate::io::{emit_algebra, parse_algebra, parse_matrix};
use crate::linalg::{QMatrix, Subspace};
use crate::prodstruct::{
    check_product_structure, corollary2_construct, enumerate_extensions, example_10d_product, example_10d_signs, extend_to_product,
    free_pairs, DiagonalSigns, Extension, StructureReport,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Internal(String),
    /// The reader of standard output went away.
    #[error("output closed")]
    Closed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
            CliError::Closed => 0,
        }
    }
}

fn input<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Input(format!("{context}: {e}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Machine,
}

#[derive(Parser, Debug)]
#[command(name = "liegen", version, about = "Generator products, coadjoint invariants and product structures of solvable Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    /// Seed for the random-evaluation rank oracle.
    #[arg(long, env = "LIEGEN_SEED", default_value_t = 1, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structural invariants and fingerprint.
    Info { algebra: String },
    /// Generator product of two algebras, printed in the text format.
    Product {
        a: String,
        b: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Coadjoint invariant count by symbolic rank and by wedge powers.
    Invariants { algebra: String },
    /// Dimension identities for the product of A and B.
    Theorem1 { a: String, b: String },
    /// Decomposition types (d1,m1;d2,m2) of products of a given dimension.
    Classify {
        #[arg(long)]
        dim: usize,
    },
    /// Checks whether a matrix defines a product structure.
    Structures {
        algebra: String,
        /// Matrix file, or inline `diag:1,-1,..` / rows separated by `;`.
        #[arg(long = "E")]
        e: String,
    },
    /// Extends diagonal structures on A and B to their product. With B
    /// omitted, A must be `paper_example_10d`, taken as a literal product.
    Extend {
        a: String,
        b: Option<String>,
        #[arg(long = "E1")]
        e1: Option<String>,
        #[arg(long = "E2")]
        e2: Option<String>,
        /// Signs for the free pairs in order, e.g. `+-`.
        #[arg(long, conflicts_with = "all")]
        choices: Option<String>,
        /// Every sign choice (the default when --choices is absent).
        #[arg(long)]
        all: bool,
    },
    /// Paracomplex structure on GPLUS x GMINUS with b1 = 2m on both sides.
    ParacomplexBuild {
        gplus: String,
        gminus: String,
        #[arg(long)]
        m: usize,
    },
    /// Lists the built-in algebras, or prints one.
    Catalog { name: Option<String> },
}

struct Ctx<'a> {
    format: OutputFormat,
    seed: u64,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) -> Result<(), CliError> {
        writeln!(self.out, "{}", s.as_ref()).map_err(write_error)
    }

    fn machine(&self) -> bool {
        self.format == OutputFormat::Machine
    }

    fn algebra(&mut self, arg: &str) -> Result<LieAlgebra, CliError> {
        if arg == "-" {
            let mut text = String::new();
            self.stdin.read_to_string(&mut text).map_err(input("stdin"))?;
            return parse_algebra(&text).map_err(input("stdin"));
        }
        if let Some(name) = arg.strip_prefix("catalog:") {
            return catalog::get(name).map(|e| e.algebra).map_err(input(arg));
        }
        if Path::new(arg).is_file() {
            let text = std::fs::read_to_string(arg).map_err(input(arg))?;
            return parse_algebra(&text).map_err(input(arg));
        }
        catalog::get(arg)
            .map(|e| e.algebra)
            .map_err(|_| CliError::Input(format!("{arg}: no such file or catalog entry")))
    }
}

fn write_error(e: std::io::Error) -> CliError {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        CliError::Closed
    } else {
        CliError::Internal(e.to_string())
    }
}

fn matrix_arg(arg: &str) -> Result<QMatrix, CliError> {
    let text = if !arg.starts_with("diag:") && Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(input(arg))?
    } else {
        arg.to_string()
    };
    parse_matrix(&text).map_err(input(arg))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn fmt_subspace(g: &LieAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    format!("span{{{}}}", join(s.basis().iter().map(|v| g.format_vector(v)), ", "))
}

fn cmd_info(ctx: &mut Ctx, arg: &str) -> Result<(), CliError> {
    let g = ctx.algebra(arg)?;
    let fp = fingerprint(&g);
    let s = &fp.series;
    let gens = join(g.minimal_generators().iter().map(|&i| g.label(i)), " ");
    let index = s.solvability_index.map_or("none".to_string(), |j| j.to_string());
    if ctx.machine() {
        ctx.line(format!("dim={}", fp.dim))?;
        ctx.line(format!("labels={}", join(g.labels(), ",")))?;
        ctx.line(format!("derived_dims={}", join(&s.derived_dims, ",")))?;
        ctx.line(format!("lower_central_dims={}", join(&s.lower_central_dims, ",")))?;
        ctx.line(format!("center_dim={}", s.center_dim))?;
        ctx.line(format!("b1={}", s.b1))?;
        ctx.line(format!("minimal_generators={}", gens.replace(' ', ",")))?;
        ctx.line(format!("solvable={}", s.solvable))?;
        ctx.line(format!("solvability_index={index}"))?;
        ctx.line(format!("nilpotent={}", s.nilpotent))?;
        ctx.line(format!("n_invariants={}", fp.n_invariants))?;
        ctx.line(format!("j0={}", fp.j0))?;
        return Ok(());
    }
    ctx.line(format!("dim {}  labels {}", fp.dim, join(g.labels(), " ")))?;
    ctx.line(format!("derived series dims       {}", join(&s.derived_dims, " ")))?;
    ctx.line(format!("lower central series dims {}", join(&s.lower_central_dims, " ")))?;
    ctx.line(format!("center {} (dim {})", fmt_subspace(&g, &g.center()), s.center_dim))?;
    ctx.line(format!("b1 {}  minimal generators {gens}", s.b1))?;
    ctx.line(format!("solvable {} (index {index})  nilpotent {}", yes(s.solvable), yes(s.nilpotent)))?;
    ctx.line(format!("N {}  j0 {}", fp.n_invariants, fp.j0))?;
    ctx.line("Maurer-Cartan system:")?;
    for l in format_mc_system(&g, FormStyle::Ascii) {
        ctx.line(format!("  {l}"))?;
    }
    Ok(())
}

fn cmd_product(ctx: &mut Ctx, a: &str, b: &str, output: Option<&Path>) -> Result<(), CliError> {
    let (g1, g2) = (ctx.algebra(a)?, ctx.algebra(b)?);
    let gp = generator_product(&g1, &g2).map_err(input("product"))?;
    let text = emit_algebra(&gp.algebra);
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))?;
            ctx.line(format!("wrote {} (dim {})", path.display(), gp.dim()))
        }
        None => {
            for w in &gp.warnings {
                ctx.line(format!("# warning: {w}"))?;
            }
            write!(ctx.out, "{text}").map_err(write_error)
        }
    }
}

fn cmd_invariants(ctx: &mut Ctx, arg: &str) -> Result<(), CliError> {
    let g = ctx.algebra(arg)?;
    let r = invariant_report(&g);
    let oracle = coadjoint_matrix(&g).certified_random_rank(20, ctx.seed);
    let names = dual_names(&g, FormStyle::Ascii);
    let witness = r.witness_form.format_with(&names, FormStyle::Ascii);
    let mono = join(r.certificate_monomial.iter().map(|&i| names[i].as_str()), "^");
    let coeffs = join(r.witness_coeffs.iter().map(crate::poly::fmt_rational), ",");
    if ctx.machine() {
        ctx.line(format!("n_rank={}", r.n_rank))?;
        ctx.line(format!("j0={}", r.j0))?;
        ctx.line(format!("n_wedge={}", r.n_wedge))?;
        ctx.line(format!("rank={}", r.rank))?;
        ctx.line(format!("oracle_rank={oracle}"))?;
        ctx.line(format!("seed={}", ctx.seed))?;
        ctx.line(format!("certificate_monomial={mono}"))?;
        ctx.line(format!("certificate={}", r.generic_certificate))?;
        ctx.line(format!("witness_coeffs={coeffs}"))?;
        ctx.line(format!("witness={witness}"))?;
        ctx.line(format!("consistent={}", r.consistent() && oracle == r.rank))?;
        return Ok(());
    }
    ctx.line(format!("N_rank={} j0={} N_wedge={}", r.n_rank, r.j0, r.n_wedge))?;
    ctx.line(format!("rank A(g) = {} (random-point oracle, seed {}: {oracle})", r.rank, ctx.seed))?;
    if r.j0 > 0 {
        ctx.line(format!("certificate: coefficient of {mono} in theta^{} is {}", r.j0, r.generic_certificate))?;
        ctx.line(format!("witness: {witness}"))?;
    }
    if !r.consistent() || oracle != r.rank {
        return Err(CliError::Internal("counting routes disagree".into()));
    }
    Ok(())
}

fn cmd_theorem1(ctx: &mut Ctx, a: &str, b: &str) -> Result<(), CliError> {
    let (g1, g2) = (ctx.algebra(a)?, ctx.algebra(b)?);
    let gp = generator_product(&g1, &g2).map_err(input("product"))?;
    let r = theorem1_for(&g1, &g2, &gp);
    let p4 = verify_prop4(&gp);
    let idx = solvability_index_product(&g1, &g2).ok();
    if ctx.machine() {
        let kv = |key: &str, c: &crate::genproduct::Check| format!("{key}={},{},{}", c.lhs, c.rhs, c.holds());
        ctx.line(format!("dim={}", gp.dim()))?;
        ctx.line(kv("b1", &r.b1))?;
        ctx.line(kv("derived1", &r.derived1))?;
        for (i, c) in r.higher_derived.iter().enumerate() {
            ctx.line(kv(&format!("derived{}", i + 2), c))?;
        }
        ctx.line(kv("center", &r.center))?;
        ctx.line(kv("center_exact", &r.center_exact))?;
        ctx.line(kv("prop4_derived", &p4.derived))?;
        ctx.line(kv("prop4_center", &p4.center))?;
        ctx.line(kv("prop4_dim", &p4.dim))?;
        if let Some(s) = idx {
            ctx.line(format!("solvability_index={},{}", s.observed, s.claimed))?;
        }
        return Ok(());
    }
    ctx.line(format!("product dimension {}", gp.dim()))?;
    for c in r.stated() {
        ctx.line(c.to_string())?;
    }
    ctx.line(r.center_exact.to_string())?;
    for c in [&p4.derived, &p4.center, &p4.dim] {
        ctx.line(c.to_string())?;
    }
    if let Some(s) = idx {
        ctx.line(format!("solvability index {} (max of factor indices {})", s.observed, s.claimed))?;
    }
    for w in &r.warnings {
        ctx.line(format!("warning: {w}"))?;
    }
    Ok(())
}

fn cmd_classify(ctx: &mut Ctx, dim: usize) -> Result<(), CliError> {
    for t in enumerate_types(dim) {
        if ctx.machine() {
            ctx.line(format!("type={},{},{},{} nilpotent={}", t.d1, t.m1, t.d2, t.m2, t.nilpotent()))?;
        } else if t.nilpotent() {
            ctx.line(format!("{t} nilpotent"))?;
        } else {
            ctx.line(t.to_string())?;
        }
    }
    Ok(())
}

fn structure_lines(ctx: &mut Ctx, g: &LieAlgebra, r: &StructureReport, prefix: &str) -> Result<(), CliError> {
    let (p, m) = r.dims();
    if ctx.machine() {
        ctx.line(format!(
            "{prefix}involutive={} nontrivial={} automorphism={} integrable={} valid={} plus_dim={p} minus_dim={m} plus_closed={} minus_closed={} paracomplex={}",
            r.involutive, r.nontrivial, r.automorphism, r.integrable, r.valid(), r.plus_closed, r.minus_closed, r.balanced()
        ))
    } else {
        ctx.line(format!(
            "{prefix}involutive {}  nontrivial {}  automorphism {}  integrable {}  => {}",
            yes(r.involutive),
            yes(r.nontrivial),
            yes(r.automorphism),
            yes(r.integrable),
            if r.valid() { "product structure" } else { "not a product structure" }
        ))?;
        ctx.line(format!("{prefix}g+ = {} (dim {p}, subalgebra {})", fmt_subspace(g, &r.plus), yes(r.plus_closed)))?;
        ctx.line(format!("{prefix}g- = {} (dim {m}, subalgebra {})", fmt_subspace(g, &r.minus), yes(r.minus_closed)))?;
        ctx.line(format!("{prefix}equal eigenspace dimensions: {}", yes(r.balanced())))
    }
}

fn cmd_structures(ctx: &mut Ctx, arg: &str, e: &str) -> Result<(), CliError> {
    let g = ctx.algebra(arg)?;
    let m = matrix_arg(e)?;
    let r = check_product_structure(&g, &m).map_err(input(e))?;
    structure_lines(ctx, &g, &r, "")
}

fn parse_choices(s: &str) -> Result<Vec<i8>, CliError> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            _ => Err(CliError::Input(format!("--choices: `{c}` is not + or -"))),
        })
        .collect()
}

fn signs_arg(arg: &str) -> Result<DiagonalSigns, CliError> {
    DiagonalSigns::from_matrix(&matrix_arg(arg)?).map_err(input(arg))
}

fn cmd_extend(
    ctx: &mut Ctx,
    a: &str,
    b: Option<&str>,
    e1: Option<&str>,
    e2: Option<&str>,
    choices: Option<&str>,
) -> Result<(), CliError> {
    let (gp, defaults): (GeneratorProduct, Option<(DiagonalSigns, DiagonalSigns)>) = match b {
        Some(b) => {
            let (g1, g2) = (ctx.algebra(a)?, ctx.algebra(b)?);
            (generator_product(&g1, &g2).map_err(input("product"))?, None)
        }
        None if a.trim_start_matches("catalog:") == "paper_example_10d" => (example_10d_product(), Some(example_10d_signs())),
        None => return Err(CliError::Input("extend needs two algebras (or the literal paper_example_10d)".into())),
    };
    let pick = |arg: Option<&str>, default: Option<DiagonalSigns>, name: &str| match (arg, default) {
        (Some(s), _) => signs_arg(s),
        (None, Some(d)) => Ok(d),
        (None, None) => Err(CliError::Input(format!("--{name} is required"))),
    };
    let (d1, d2) = defaults.map_or((None, None), |(x, y)| (Some(x), Some(y)));
    let s1 = pick(e1, d1, "E1")?;
    let s2 = pick(e2, d2, "E2")?;
    let exts: Vec<Extension> = match choices {
        Some(c) => vec![extend_to_product(&gp, &s1, &s2, &parse_choices(c)?).map_err(input("extend"))?],
        None => enumerate_extensions(&gp, &s1, &s2).map_err(input("extend"))?,
    };
    let free = free_pairs(&gp, &s1, &s2);
    let g = &gp.algebra;
    if ctx.machine() {
        ctx.line(format!("dim={}", gp.dim()))?;
        ctx.line(format!("free_pairs={}", join(free.iter().map(|p| g.label(p.central)), ",")))?;
    } else {
        ctx.line(format!(
            "product dimension {}, free central elements: {}",
            gp.dim(),
            if free.is_empty() { "none".to_string() } else { join(free.iter().map(|p| g.label(p.central)), " ") }
        ))?;
    }
    for x in &exts {
        let choice: String = x.choice.iter().map(|&s| if s > 0 { '+' } else { '-' }).collect();
        let diag = join((0..g.dim()).map(|i| crate::poly::fmt_rational(x.map.get(i, i))), ",");
        if ctx.machine() {
            ctx.line(format!("choice={choice} diag={diag}"))?;
            structure_lines(ctx, g, &x.report, "  ")?;
        } else {
            let (p, m) = x.dims();
            ctx.line(format!(
                "choice [{choice}]  E = diag({diag})  dims ({p},{m})  paracomplex {}",
                yes(x.is_paracomplex())
            ))?;
            structure_lines(ctx, g, &x.report, "  ")?;
        }
    }
    Ok(())
}

fn cmd_paracomplex(ctx: &mut Ctx, gplus: &str, gminus: &str, m: usize) -> Result<(), CliError> {
    let (a, b) = (ctx.algebra(gplus)?, ctx.algebra(gminus)?);
    let (gp, x) = corollary2_construct(&a, &b, m).map_err(input("paracomplex-build"))?;
    let diag = join((0..gp.dim()).map(|i| crate::poly::fmt_rational(x.map.get(i, i))), ",");
    if ctx.machine() {
        ctx.line(format!("dim={}", gp.dim()))?;
        ctx.line(format!("diag={diag}"))?;
    } else {
        ctx.line(format!("product dimension {}  E = diag({diag})", gp.dim()))?;
    }
    structure_lines(ctx, &gp.algebra, &x.report, "")
}

fn cmd_catalog(ctx: &mut Ctx, name: Option<&str>) -> Result<(), CliError> {
    match name {
        None => {
            for e in catalog::listed() {
                if ctx.machine() {
                    ctx.line(format!("name={} dim={}", e.name, e.algebra.dim()))?;
                } else {
                    ctx.line(format!("{:<18} dim {:<3} {}", e.name, e.algebra.dim(), e.provenance))?;
                }
            }
            if !ctx.machine() {
                ctx.line("families: abelian_<n> (or L<n>), rn_<n> for n >= 4")?;
            }
            Ok(())
        }
        Some(n) => {
            let e = catalog::get(n.trim_start_matches("catalog:")).map_err(input(n))?;
            ctx.line(format!("# {}: {}", e.name, e.provenance))?;
            write!(ctx.out, "{}", emit_algebra(&e.algebra)).map_err(write_error)
        }
    }
}

pub fn execute(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), CliError> {
    let mut ctx = Ctx {
        format: cli.format,
        seed: cli.seed,
        stdin,
        out,
    };
    match &cli.command {
        Command::Info { algebra } => cmd_info(&mut ctx, algebra),
        Command::Product { a, b, output } => cmd_product(&mut ctx, a, b, output.as_deref()),
        Command::Invariants { algebra } => cmd_invariants(&mut ctx, algebra),
        Command::Theorem1 { a, b } => cmd_theorem1(&mut ctx, a, b),
        Command::Classify { dim } => cmd_classify(&mut ctx, *dim),
        Command::Structures { algebra, e } => cmd_structures(&mut ctx, algebra, e),
        Command::Extend { a, b, e1, e2, choices, .. } => {
            cmd_extend(&mut ctx, a, b.as_deref(), e1.as_deref(), e2.as_deref(), choices.as_deref())
        }
        Command::ParacomplexBuild { gplus, gminus, m } => cmd_paracomplex(&mut ctx, gplus, gminus, *m),
        Command::Catalog { name } => cmd_catalog(&mut ctx, name.as_deref()),
    }
}

/// Parses arguments, runs, and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli, stdin, out) {
        Ok(()) | Err(CliError::Closed) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
