//! Argument parsing and dispatch for the `qcy` binary.

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use qcy_core::classify::{classify, gamma_max_table, ClassifyOptions, Evaluation, FilterOutcome, PermClass};
use qcy_core::cycpoly::{palindromicity, Palindromicity};
use qcy_core::realize::{bundled_group, ore_type, parse_group_file, twist_type, RealizedGroup};
use qcy_core::typealg::text::{format_matrix, parse_matrix, parse_permutation};
use qcy_core::typealg::{hilbert_prefix, IntMat, NegativeEntry, Permutation, QuiverType};
use serde::Serialize;

use crate::golden::{golden_dir, Golden};
use crate::report::{render_gamma_table, render_table, Report, TypeJson};
use crate::verify::{classify_diffs, verify_all};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFF: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qcy", version, about = "Classify four-vertex quiver types of twisted graded Calabi-Yau algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Perm {
    Four,
    Three,
    #[value(name = "two-two")]
    TwoTwo,
}

impl From<Perm> for PermClass {
    fn from(p: Perm) -> Self {
        match p {
            Perm::Four => PermClass::FourCycle,
            Perm::Three => PermClass::ThreeCycle,
            Perm::TwoTwo => PermClass::TwoTwo,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    Pre,
    Full,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    #[arg(long = "M", value_name = "MATRIX")]
    pub m: String,
    #[arg(long = "P", value_name = "PERM")]
    pub p: String,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=5))]
    pub s: u32,
}

impl TypeArgs {
    fn parse(&self) -> Result<QuiverType> {
        parse_type(&self.m, &self.p, self.s)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate and filter the types with a given permutation class.
    Classify {
        #[arg(long)]
        perm: Perm,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=4))]
        s: u32,
        #[arg(long, value_enum, default_value = "full")]
        stage: Stage,
        /// Entry bound for the two-two search (default 6 - s).
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long, default_value_t = qcy_core::classify::DEFAULT_HILBERT_TERMS)]
        hilbert_terms: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Full filter report for a single type.
    Check {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = qcy_core::classify::DEFAULT_HILBERT_TERMS)]
        terms: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print H_0..H_N of the Hilbert series p(t)^-1.
    Hilbert {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        terms: usize,
    },
    /// Run a McKay, Ore or twist construction.
    Construct {
        #[command(subcommand)]
        kind: Construct,
    },
    /// Largest admissible gamma for each diagonal pair (a, g) of a two-two type.
    GammaTable {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=4))]
        s: u32,
    },
    /// Replay the classification and constructions against the golden tables.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// Bundled group name or path to a group file.
    #[arg(long, conflicts_with_all = ["m", "p"])]
    pub group: Option<String>,
    /// Linear character giving the vertex permutation.
    #[arg(long = "char", requires = "group", conflicts_with = "perm")]
    pub character: Option<String>,
    /// Vertex permutation given directly.
    #[arg(long)]
    pub perm: Option<String>,
    #[arg(long = "M", value_name = "MATRIX", requires = "p")]
    pub m: Option<String>,
    #[arg(long = "P", value_name = "PERM", requires = "m")]
    pub p: Option<String>,
    #[arg(long)]
    pub s: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// McKay matrix, winding permutation and type of a group action.
    Mckay {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Ore extension type (M + P'^-1, P P'^-1, 3) of a dimension-2 type.
    Ore {
        #[command(flatten)]
        args: TransformArgs,
        /// Alias of --perm for inline inputs.
        #[arg(long = "Pprime", conflicts_with = "perm")]
        pprime: Option<String>,
    },
    /// Graded twist type (N M, N P, s).
    Twist {
        #[command(flatten)]
        args: TransformArgs,
        /// Alias of --perm for inline inputs.
        #[arg(long = "N", conflicts_with = "perm")]
        n: Option<String>,
    },
}

fn parse_type(m: &str, p: &str, s: u32) -> Result<QuiverType> {
    let m = parse_matrix(m).map_err(|e| anyhow!("--M: {e}"))?;
    let p = parse_permutation(p).map_err(|e| anyhow!("--P: {e}"))?;
    QuiverType::new(m, p, s).map_err(|e| anyhow!("{e}"))
}

pub fn load_group(name_or_path: &str) -> Result<RealizedGroup> {
    let data = if Path::new(name_or_path).is_file() {
        let text = std::fs::read_to_string(name_or_path).with_context(|| format!("reading {name_or_path}"))?;
        parse_group_file(&text).with_context(|| format!("parsing {name_or_path}"))?
    } else {
        bundled_group(name_or_path)?
    };
    Ok(RealizedGroup::new(data)?)
}

/// The input type and vertex permutation of an Ore or twist construction.
fn transform_inputs(args: &TransformArgs, alias: Option<&str>, default_s: u32) -> Result<(QuiverType, Permutation)> {
    let perm_text = args.perm.as_deref().or(alias);
    if let Some(name) = &args.group {
        let g = load_group(name)?;
        let base = g.mckay_type()?;
        let by = match (&args.character, perm_text) {
            (Some(c), _) => g.character_permutation(c)?,
            (None, Some(p)) => parse_permutation(p).map_err(|e| anyhow!("--perm: {e}"))?,
            (None, None) => bail!("give --char or --perm"),
        };
        return Ok((base, by));
    }
    let (Some(m), Some(p)) = (&args.m, &args.p) else {
        bail!("give --group or both --M and --P");
    };
    let base = parse_type(m, p, args.s.unwrap_or(default_s))?;
    let by = parse_permutation(perm_text.ok_or_else(|| anyhow!("give the vertex permutation"))?)
        .map_err(|e| anyhow!("{e}"))?;
    Ok((base, by))
}

#[derive(Debug, Serialize)]
struct CheckJson {
    #[serde(rename = "M")]
    m: IntMat,
    #[serde(rename = "P")]
    p: String,
    s: u32,
    det: String,
    factorization: Option<String>,
    palindromicity: Option<Palindromicity>,
    root1_multiplicity: u32,
    orbit_connected: bool,
    strongly_connected: bool,
    normal: bool,
    spectral_radius_is_target: Option<bool>,
    hilbert_terms: usize,
    first_negative: Option<NegativeEntry>,
    filters: Vec<FilterOutcome>,
    passes_pre: bool,
    passes_full: bool,
}

fn check_report(t: &QuiverType, terms: usize) -> CheckJson {
    let e = Evaluation::full(t, terms);
    CheckJson {
        m: t.m,
        p: t.p.to_string(),
        s: t.s,
        det: e.det.to_string(),
        factorization: e.factorization.as_ref().map(|f| f.to_string()),
        palindromicity: palindromicity(&e.det).ok(),
        root1_multiplicity: e.root1,
        orbit_connected: e.orbit_connected,
        strongly_connected: e.strongly_connected,
        normal: e.normal,
        spectral_radius_is_target: e.spectral,
        hilbert_terms: terms,
        first_negative: e.first_negative,
        filters: e.outcomes(),
        passes_pre: e.passes_pre(),
        passes_full: e.passes_full(),
    }
}

fn render_check(c: &CheckJson) -> String {
    let opt = |b: Option<bool>| b.map(|x| x.to_string()).unwrap_or_else(|| "n/a".into());
    let mut out = vec![
        format!("type               (M={}, P={}, s={})", format_matrix(&c.m), c.p, c.s),
        format!("det p(t)           {}", c.det),
        format!(
            "factorization      {}",
            c.factorization.clone().unwrap_or_else(|| "not a product of cyclotomic polynomials".into())
        ),
        format!(
            "palindromicity     {}",
            c.palindromicity.map(|p| format!("{p:?}").to_lowercase()).unwrap_or_else(|| "n/a".into())
        ),
        format!("multiplicity at 1  {}", c.root1_multiplicity),
        format!("orbit_connected    {}", c.orbit_connected),
        format!("strongly_connected {}", c.strongly_connected),
        format!("normal             {}", c.normal),
        format!("spectral radius {}  {}", 6 - c.s as i64, opt(c.spectral_radius_is_target)),
        match c.first_negative {
            None => format!("hilbert            nonnegative through degree {}", c.hilbert_terms),
            Some(n) => format!("hilbert            negative at degree {}, entry ({}, {})", n.degree, n.row + 1, n.col + 1),
        },
    ];
    out.push(format!("passes pre         {}", c.passes_pre));
    out.push(format!("passes full        {}", c.passes_full));
    out.join("\n") + "\n"
}

#[derive(Debug, Serialize)]
struct McKayJson {
    group: String,
    order: usize,
    irreps: Vec<String>,
    matrix: Vec<Vec<i64>>,
    defect: Vec<i64>,
    winding: Vec<usize>,
    #[serde(rename = "type")]
    ty: Option<TypeJson>,
}

fn run_mckay(name: &str, format: Format) -> Result<String> {
    let g = load_group(name)?;
    let irreps = g.verified_irreps()?;
    let mk = g.mckay()?;
    let winding = g.winding(&g.hdet()?)?;
    let ty = g.mckay_type().ok();
    let out = McKayJson {
        group: g.data.name.clone(),
        order: g.group.order(),
        irreps: irreps.iter().map(|i| i.name.clone()).collect(),
        matrix: mk.matrix.clone(),
        defect: mk.defect.clone(),
        winding: winding.clone(),
        ty: ty.as_ref().map(TypeJson::from),
    };
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(&out)? + "\n");
    }
    let mut s = format!("group   {} (order {})\nirreps  {}\nmckay\n", out.group, out.order, out.irreps.join(" "));
    for row in &out.matrix {
        s.push_str(&format!("  {}\n", row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")));
    }
    s.push_str(&format!("defect  {:?}\n", out.defect));
    let images: Vec<String> = winding.iter().map(|w| out.irreps[*w].clone()).collect();
    s.push_str(&format!("winding {}\n", images.join(" ")));
    if let Some(t) = ty {
        s.push_str(&format!("type    {t}\n"));
    }
    Ok(s)
}

/// Runs a parsed command, returning its output and exit code.
pub fn run(cli: Cli) -> Result<(String, i32)> {
    Ok(match cli.command {
        Command::Classify { perm, s, stage, bound, hilbert_terms, format } => {
            let stage = if stage == Stage::Pre { "pre" } else { "full" };
            let c = classify(perm.into(), s, &ClassifyOptions { bound, hilbert_terms });
            let mut report = Report::new(&c, stage);
            if bound.is_none() && hilbert_terms == qcy_core::classify::DEFAULT_HILBERT_TERMS {
                if let Ok(g) = Golden::load(&golden_dir()) {
                    report.diffs = classify_diffs(&g, &c, stage);
                }
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Table => render_table(&report),
            };
            (text, EXIT_OK)
        }
        Command::Check { ty, terms, format } => {
            let c = check_report(&ty.parse()?, terms);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&c)? + "\n",
                Format::Table => render_check(&c),
            };
            (text, EXIT_OK)
        }
        Command::Hilbert { ty, terms } => {
            let h = hilbert_prefix(&ty.parse()?, terms);
            let mut out = String::new();
            for (k, term) in h.terms.iter().enumerate() {
                let rows: Vec<String> =
                    term.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
                out.push_str(&format!("H{k} = {}\n", rows.join(";")));
            }
            (out, EXIT_OK)
        }
        Command::Construct { kind } => match kind {
            Construct::Mckay { group, format } => (run_mckay(&group, format)?, EXIT_OK),
            Construct::Ore { args, pprime } => {
                let (base, by) = transform_inputs(&args, pprime.as_deref(), 2)?;
                let t = ore_type(&base, &by)?;
                (format!("input  {base}\nP'     {by}\noutput {t}\n"), EXIT_OK)
            }
            Construct::Twist { args, n } => {
                let (base, by) = transform_inputs(&args, n.as_deref(), 3)?;
                let t = twist_type(&base, &by);
                (format!("input  {base}\nN      {by}\noutput {t}\n"), EXIT_OK)
            }
        },
        Command::GammaTable { s } => (render_gamma_table(s, &gamma_max_table(s)), EXIT_OK),
        Command::VerifyPaper { format } => {
            let golden = Golden::load(&golden_dir())?;
            let report = verify_all(&golden);
            let code = if report.passed() { EXIT_OK } else { EXIT_DIFF };
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Table => report.render_text(),
            };
            (text, code)
        }
    })
}

/// Parses `args` (program name first) and runs; usage and input errors map to exit 2.
pub fn run_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                (text, String::new(), code)
            } else {
                (String::new(), text, code)
            }
        }
        Ok(cli) => match run(cli) {
            Ok((out, code)) => (out, String::new(), code),
            Err(e) => (String::new(), format!("error: {e:#}\n"), EXIT_USAGE),
        },
    }
}
