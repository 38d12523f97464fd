//! File formats, reports and subcommands behind the `liecoh` binary.
//!
//! Every command returns a [`Report`]; rendering and exit codes are decided
//! by the caller. Indices in files are 0-based.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cecomplex::{increasing_tuples, Cochain};
use crate::cohomology::CeComplex;
use crate::error::{Error, Result};
use crate::extensions;
use crate::gmod::{module_from_spec, GModule};
use crate::liealg::{LieAlgebra, Subalgebra};
use crate::ratlin::{parse_rational, Matrix, Rational, Vector};
use crate::verify::{self, Mutation, SuiteOptions};
use crate::volume::{format_pi_squared, seifert_volume, sl2tilde_volume};

pub const FILE_VERSION: u32 = 1;
pub const REPORT_FORMAT: &str = "liecoh-report";
pub const REPORT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

const RELATIVE_CAVEAT: &str = "computed at the Lie algebra level; equals invariant-form \
cohomology of G/H when the isotropy group is connected";

// ---------------------------------------------------------------------------
// Algebra files

/// On-disk description of a Lie algebra with an optional subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub version: u32,
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `"[i,j]"` with `i < j` to a sparse coefficient map `{"k": "p/q"}`.
    #[serde(default)]
    pub brackets: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_subalgebra: Option<Vec<Vec<String>>>,
}

fn json_error(origin: &str, e: &serde_json::Error) -> Error {
    Error::parse(
        format!("{origin}:{}:{}", e.line(), e.column()),
        e.to_string(),
    )
}

fn parse_index(s: &str, dim: usize, field: &str) -> Result<usize> {
    let i: usize = s
        .trim()
        .parse()
        .map_err(|_| Error::parse(field, format!("`{s}` is not an index")))?;
    if i >= dim {
        return Err(Error::parse(field, format!("index {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

fn parse_pair_key(key: &str, dim: usize, field: &str) -> Result<(usize, usize)> {
    let inner = key
        .trim()
        .strip_prefix('[')
        .and_then(|k| k.strip_suffix(']'))
        .ok_or_else(|| Error::parse(field, "expected a key of the form \"[i,j]\""))?;
    let (a, b) = inner
        .split_once(',')
        .ok_or_else(|| Error::parse(field, "expected a key of the form \"[i,j]\""))?;
    let i = parse_index(a, dim, field)?;
    let j = parse_index(b, dim, field)?;
    if i >= j {
        return Err(Error::parse(field, format!("bracket key needs i < j, got [{i},{j}]")));
    }
    Ok((i, j))
}

fn parse_field_rational(s: &str, field: &str) -> Result<Rational> {
    parse_rational(s).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(field, format!("`{s}`: {message}")),
        other => other,
    })
}

fn parse_vector(entries: &[String], dim: usize, field: &str) -> Result<Vector> {
    if entries.len() != dim {
        return Err(Error::parse(
            field,
            format!("{} coordinates, expected {dim}", entries.len()),
        ));
    }
    entries
        .iter()
        .enumerate()
        .map(|(i, s)| parse_field_rational(s, &format!("{field}[{i}]")))
        .collect()
}

impl AlgebraFile {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(origin, &e))
    }

    /// Validates the file and builds the algebra and its subalgebra.
    pub fn build(&self) -> Result<(Arc<LieAlgebra>, Option<Subalgebra>)> {
        if self.version != FILE_VERSION {
            return Err(Error::parse(
                "version",
                format!("unsupported version {}, expected {FILE_VERSION}", self.version),
            ));
        }
        let dim = self.dim;
        if self.basis.len() != dim {
            return Err(Error::parse(
                "basis",
                format!("{} names for dimension {dim}", self.basis.len()),
            ));
        }
        let mut table = BTreeMap::new();
        for (key, coeffs) in &self.brackets {
            let field = format!("brackets[\"{key}\"]");
            let pair = parse_pair_key(key, dim, &field)?;
            let mut v = vec![Rational::from_integer(0.into()); dim];
            for (k, c) in coeffs {
                let sub = format!("{field}[\"{k}\"]");
                v[parse_index(k, dim, &sub)?] = parse_field_rational(c, &sub)?;
            }
            if table.insert(pair, v).is_some() {
                return Err(Error::parse(field, "duplicate bracket"));
            }
        }
        let algebra = Arc::new(LieAlgebra::new(self.name.clone(), self.basis.clone(), table)?);
        let h = match &self.h_subalgebra {
            None => None,
            Some(rows) => {
                let vectors = rows
                    .iter()
                    .enumerate()
                    .map(|(r, row)| parse_vector(row, dim, &format!("h_subalgebra[{r}]")))
                    .collect::<Result<Vec<_>>>()?;
                Some(Subalgebra::new(&algebra, vectors)?)
            }
        };
        Ok((algebra, h))
    }

    pub fn from_algebra(g: &LieAlgebra, h: Option<&Subalgebra>) -> Self {
        let brackets = g
            .nonzero_brackets()
            .into_iter()
            .map(|((i, j), v)| {
                let coeffs = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                    .map(|(k, c)| (k.to_string(), c.to_string()))
                    .collect();
                (format!("[{i},{j}]"), coeffs)
            })
            .collect();
        AlgebraFile {
            version: FILE_VERSION,
            name: g.name().to_string(),
            dim: g.dim(),
            basis: g.basis_names().to_vec(),
            brackets,
            h_subalgebra: h.map(|h| {
                h.vectors()
                    .iter()
                    .map(|v| v.iter().map(ToString::to_string).collect())
                    .collect()
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Explicit action matrices, one `vdim x vdim` matrix per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub version: u32,
    #[serde(default)]
    pub label: Option<String>,
    pub vdim: usize,
    pub actions: Vec<Vec<Vec<String>>>,
}

impl ModuleFile {
    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| json_error(origin, &e))
    }

    pub fn build(&self, g: &Arc<LieAlgebra>) -> Result<GModule> {
        if self.version != FILE_VERSION {
            return Err(Error::parse(
                "version",
                format!("unsupported version {}, expected {FILE_VERSION}", self.version),
            ));
        }
        if self.actions.len() != g.dim() {
            return Err(Error::parse(
                "actions",
                format!("{} matrices for an algebra of dimension {}", self.actions.len(), g.dim()),
            ));
        }
        let mut mats = Vec::with_capacity(self.actions.len());
        for (a, rows) in self.actions.iter().enumerate() {
            if rows.len() != self.vdim {
                return Err(Error::parse(
                    format!("actions[{a}]"),
                    format!("{} rows, expected {}", rows.len(), self.vdim),
                ));
            }
            let parsed = rows
                .iter()
                .enumerate()
                .map(|(r, row)| parse_vector(row, self.vdim, &format!("actions[{a}][{r}]")))
                .collect::<Result<Vec<_>>>()?;
            mats.push(Matrix::from_rows(parsed)?);
        }
        let label = self.label.clone().unwrap_or_else(|| "file".to_string());
        GModule::new(g, self.vdim, mats, label)
    }
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| Error::Io(format!("{path}: {e}")))
}

/// A loaded algebra together with the bytes that identify it.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub algebra: Arc<LieAlgebra>,
    pub h: Option<Subalgebra>,
    pub digest_input: Vec<u8>,
}

/// Loads `builtin:<name>` from the catalog or a JSON algebra file from disk.
pub fn load_algebra(source: &str) -> Result<Loaded> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let entry = extensions::builtin(name)?;
        let file = AlgebraFile::from_algebra(&entry.algebra, entry.h.as_ref());
        return Ok(Loaded {
            algebra: entry.algebra,
            h: entry.h,
            digest_input: file.to_json().into_bytes(),
        });
    }
    let text = read_file(source)?;
    let (algebra, h) = AlgebraFile::parse(&text, source)?.build()?;
    Ok(Loaded {
        algebra,
        h,
        digest_input: text.into_bytes(),
    })
}

/// A coefficient module from `file:<path>` or a spec string such as `adjoint`.
pub fn load_module(g: &Arc<LieAlgebra>, spec: &str) -> Result<(GModule, Vec<u8>)> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = read_file(path)?;
        let m = ModuleFile::parse(&text, path)?.build(g)?;
        return Ok((m, text.into_bytes()));
    }
    Ok((module_from_spec(g, spec)?, spec.as_bytes().to_vec()))
}

fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    hex::encode(h.finalize())
}

// ---------------------------------------------------------------------------
// Reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
pub enum Value {
    Flag(bool),
    Count(usize),
    Counts(Vec<usize>),
    Rational(String),
    /// Exact rational coefficient of π².
    PiSquared(String),
    Text(String),
    Check {
        criterion: u32,
        pass: bool,
        anchor: String,
        detail: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    #[serde(flatten)]
    pub value: Value,
    /// Shown in the human table only, e.g. timings.
    #[serde(skip)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Header {
    format: String,
    version: u32,
    command: String,
    inputs_digest: String,
}

impl Report {
    fn new(command: String, inputs_digest: String) -> Self {
        Report {
            command,
            inputs_digest,
            entries: Vec::new(),
        }
    }

    fn push(&mut self, key: impl Into<String>, value: Value) {
        self.entries.push(Entry {
            key: key.into(),
            value,
            note: None,
        });
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.entries.iter().find(|e| e.key == key).map(|e| &e.value)
    }

    /// JSON Lines: a versioned header, then one object per entry.
    pub fn to_machine(&self) -> String {
        let header = Header {
            format: REPORT_FORMAT.to_string(),
            version: REPORT_VERSION,
            command: self.command.clone(),
            inputs_digest: self.inputs_digest.clone(),
        };
        let mut out = serde_json::to_string(&header).expect("header serializes");
        out.push('\n');
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("entry serializes"));
            out.push('\n');
        }
        out
    }

    pub fn parse_machine(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines
            .next()
            .ok_or_else(|| Error::parse("report:1", "empty report"))?;
        let header: Header = serde_json::from_str(first)
            .map_err(|e| Error::parse("report:1", e.to_string()))?;
        if header.format != REPORT_FORMAT || header.version != REPORT_VERSION {
            return Err(Error::parse(
                "report:1",
                format!("unsupported report {} v{}", header.format, header.version),
            ));
        }
        let mut report = Report::new(header.command, header.inputs_digest);
        for (n, line) in lines {
            let e: Entry = serde_json::from_str(line)
                .map_err(|e| Error::parse(format!("report:{}", n + 1), e.to_string()))?;
            report.entries.push(e);
        }
        Ok(report)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "inputs digest: {}", self.inputs_digest);
        let checks = self.entries.iter().any(|e| matches!(e.value, Value::Check { .. }));
        if checks {
            let _ = writeln!(out, "{:<6} {:<4} {:<22} detail", "result", "crit", "row");
        }
        for e in &self.entries {
            let line = match &e.value {
                Value::Check {
                    criterion,
                    pass,
                    anchor,
                    detail,
                } => format!(
                    "{:<6} {:<4} {:<22} {detail} [{anchor}]",
                    if *pass { "PASS" } else { "FAIL" },
                    criterion,
                    e.key
                ),
                v => format!("{}: {}", e.key, human_value(v)),
            };
            out.push_str(&line);
            if let Some(note) = &e.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
        }
        out
    }
}

fn human_value(v: &Value) -> String {
    match v {
        Value::Flag(b) => if *b { "yes" } else { "no" }.to_string(),
        Value::Count(n) => n.to_string(),
        Value::Counts(ns) => format!(
            "({})",
            ns.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ),
        Value::Rational(s) | Value::Text(s) => s.clone(),
        Value::PiSquared(s) => {
            format_pi_squared(&parse_rational(s).expect("reports hold valid rationals"))
        }
        Value::Check { pass, detail, .. } => format!("{} {detail}", if *pass { "PASS" } else { "FAIL" }),
    }
}

/// A cochain as a sum of terms `c·X*∧Y*⊗v_i`, with 1-based module indices.
pub fn render_cochain(c: &Cochain, names: &[String]) -> String {
    let tuples = increasing_tuples(c.algebra_dim, c.degree);
    let mut terms = Vec::new();
    for (t, tuple) in tuples.iter().enumerate() {
        for v in 0..c.vdim {
            let coeff = &c.coords[t * c.vdim + v];
            if num_traits::Zero::is_zero(coeff) {
                continue;
            }
            let form = tuple
                .iter()
                .map(|&i| format!("{}*", names[i]))
                .collect::<Vec<_>>()
                .join("∧");
            let mut term = coeff.to_string();
            if !form.is_empty() {
                term.push('·');
                term.push_str(&form);
            }
            if c.vdim > 1 || c.degree == 0 {
                let _ = write!(term, "⊗v{}", v + 1);
            }
            terms.push(term);
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

// ---------------------------------------------------------------------------
// Commands

#[derive(Debug, Parser)]
#[command(name = "liecoh", version, about = "Exact Lie algebra cohomology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra and print its structure data.
    Check(CheckArgs),
    /// Betti numbers, optionally relative to the file's subalgebra.
    Cohomology(CohomologyArgs),
    /// Closed-form volume constants as exact multiples of π².
    Volume(VolumeArgs),
    /// Run the reproducibility table on the built-in catalog.
    VerifyPaper(VerifyArgs),
    /// Print a built-in catalog entry in the algebra file format.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Algebra file, or `builtin:<name>`.
    pub source: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeSel {
    All,
    One(usize),
}

fn parse_degree(s: &str) -> std::result::Result<DegreeSel, String> {
    if s == "all" {
        return Ok(DegreeSel::All);
    }
    s.parse()
        .map(DegreeSel::One)
        .map_err(|_| format!("expected a degree or `all`, got `{s}`"))
}

#[derive(Debug, Args)]
pub struct CohomologyArgs {
    pub source: String,
    /// `trivial`, `trivial:n`, `adjoint`, `coadjoint`, `dual:<spec>`,
    /// `sum:<a>+<b>` or `file:<path>`.
    #[arg(long, default_value = "trivial")]
    pub coeffs: String,
    #[arg(long)]
    pub relative: bool,
    #[arg(long, default_value = "all", value_parser = parse_degree)]
    pub degree: DegreeSel,
    #[arg(long)]
    pub representatives: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VolumeKind {
    Seifert,
    Sl2tilde,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    pub kind: VolumeKind,
    /// Orbifold Euler characteristic (seifert).
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<String>,
    /// Euler number.
    #[arg(long, allow_hyphen_values = true)]
    pub e: String,
    /// Integer multiplier (sl2tilde).
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MutationArg {
    None,
    CoadjointSign,
    DropDiagonal,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub json: bool,
    /// Inject a known defect; the table is expected to fail.
    #[arg(long, value_enum, default_value = "none")]
    pub mutate: MutationArg,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Catalog name, e.g. `sl2_so2_pair` or `fivedim_ext:2`.
    pub name: String,
}

pub fn cmd_check(source: &str) -> Result<Report> {
    let loaded = load_algebra(source)?;
    let g = &loaded.algebra;
    let s = g.structure_report();
    let mut r = Report::new(format!("check {source}"), digest(&[&loaded.digest_input]));
    r.push("algebra", Value::Text(g.name().to_string()));
    r.push("dim", Value::Count(g.dim()));
    r.push("jacobi", Value::Text("ok".into()));
    r.push("semisimple", Value::Flag(s.is_semisimple));
    r.push("reductive", Value::Flag(s.is_reductive));
    r.push("killing det", Value::Rational(s.killing_det.to_string()));
    r.push("killing rank", Value::Count(s.killing_rank));
    r.push("center dim", Value::Count(s.center.dim()));
    r.push("derived dim", Value::Count(s.derived.dim()));
    if let Some(h) = &loaded.h {
        r.push("h dim", Value::Count(h.dim()));
    }
    Ok(r)
}

pub fn cmd_cohomology(args: &CohomologyArgs) -> Result<Report> {
    let loaded = load_algebra(&args.source)?;
    let g = &loaded.algebra;
    let (module, module_bytes) = load_module(g, &args.coeffs)?;
    let h = if args.relative {
        Some(loaded.h.as_ref().ok_or_else(|| {
            Error::parse("h_subalgebra", "--relative needs an h_subalgebra in the input")
        })?)
    } else {
        None
    };
    let complex = CeComplex::new(&module, h);
    let top = complex.top_degree();
    let degrees: Vec<usize> = match args.degree {
        DegreeSel::All => (0..=top).collect(),
        DegreeSel::One(k) => vec![k],
    };

    let mut echo = format!("cohomology {} --coeffs {}", args.source, args.coeffs);
    if args.relative {
        echo.push_str(" --relative");
    }
    match args.degree {
        DegreeSel::All => echo.push_str(" --degree all"),
        DegreeSel::One(k) => {
            let _ = write!(echo, " --degree {k}");
        }
    }
    if args.representatives {
        echo.push_str(" --representatives");
    }
    let mut r = Report::new(echo, digest(&[&loaded.digest_input, &module_bytes]));
    r.push("algebra", Value::Text(g.name().to_string()));
    r.push("coeffs", Value::Text(module.label().to_string()));
    r.push("relative", Value::Flag(args.relative));
    if let Some(h) = h {
        r.push("h dim", Value::Count(h.dim()));
        r.push("caveat", Value::Text(RELATIVE_CAVEAT.into()));
    }
    r.push("degrees", Value::Counts(degrees.clone()));

    let mut betti = Vec::with_capacity(degrees.len());
    let mut reps = Vec::new();
    for &k in &degrees {
        let res = complex.cohomology(k)?;
        betti.push(res.betti);
        if args.representatives {
            for (i, c) in res.cocycle_representatives.iter().enumerate() {
                reps.push((format!("rep H^{k} #{}", i + 1), render_cochain(c, g.basis_names())));
            }
        }
    }
    r.push("betti", Value::Counts(betti));
    for (key, text) in reps {
        r.push(key, Value::Text(text));
    }
    Ok(r)
}

pub fn cmd_volume(args: &VolumeArgs) -> Result<Report> {
    let e = parse_field_rational(&args.e, "--e")?;
    let mut r;
    let value = match args.kind {
        VolumeKind::Seifert => {
            let chi_s = args
                .chi
                .as_deref()
                .ok_or_else(|| Error::parse("--chi", "seifert needs --chi"))?;
            let chi = parse_field_rational(chi_s, "--chi")?;
            r = Report::new(
                format!("volume seifert --chi {chi} --e {e}"),
                digest(&[chi.to_string().as_bytes(), e.to_string().as_bytes()]),
            );
            r.push("chi", Value::Rational(chi.to_string()));
            seifert_volume(&chi, &e)?
        }
        VolumeKind::Sl2tilde => {
            let n = args.n.ok_or_else(|| Error::parse("--n", "sl2tilde needs --n"))?;
            r = Report::new(
                format!("volume sl2tilde --n {n} --e {e}"),
                digest(&[n.to_string().as_bytes(), e.to_string().as_bytes()]),
            );
            r.push("n", Value::Rational(n.to_string()));
            sl2tilde_volume(n, &e)
        }
    };
    r.push("e", Value::Rational(e.to_string()));
    r.push("volume", Value::PiSquared(value.to_string()));
    Ok(r)
}

pub fn mutation_of(arg: MutationArg) -> Mutation {
    match arg {
        MutationArg::None => Mutation::None,
        MutationArg::CoadjointSign => Mutation::CoadjointSign,
        MutationArg::DropDiagonal => Mutation::DropDiagonal,
    }
}

/// Runs the table; the flag is true iff every row passes.
pub fn cmd_verify_paper(mutation: Mutation) -> (Report, bool) {
    let opts = SuiteOptions {
        mutation,
        ..SuiteOptions::default()
    };
    let rows = verify::run_suite(&opts);
    let mut echo = "verify-paper".to_string();
    if mutation != Mutation::None {
        let _ = write!(echo, " --mutate {mutation:?}");
    }
    let seed = format!("seed={} samples={}", opts.seed, opts.random_samples);
    let mut r = Report::new(echo, digest(&[seed.as_bytes()]));
    let all = rows.iter().all(|row| row.pass);
    for row in rows {
        r.entries.push(Entry {
            key: row.id,
            value: Value::Check {
                criterion: row.criterion,
                pass: row.pass,
                anchor: row.anchor,
                detail: row.detail,
            },
            note: row.elapsed_ms.map(|ms| format!("{ms} ms")),
        });
    }
    r.push("all pass", Value::Flag(all));
    (r, all)
}

pub fn cmd_export(name: &str) -> Result<String> {
    let entry = extensions::builtin(name)?;
    Ok(AlgebraFile::from_algebra(&entry.algebra, entry.h.as_ref()).to_json())
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Io(_)
        | Error::UnknownModuleSpec(_)
        | Error::UnknownName(_)
        | Error::InvalidSlope(_) => EXIT_PARSE,
        _ => EXIT_VALIDATION,
    }
}

/// Executes a parsed command line, returning stdout text and the exit code.
/// Errors are rendered as a single `error: ...` line.
pub fn run(cli: Cli) -> (String, i32) {
    let render = |r: Result<Report>, json: bool| match r {
        Ok(rep) => (
            if json { rep.to_machine() } else { rep.to_human() },
            EXIT_OK,
        ),
        Err(e) => (format!("error: {e}\n"), exit_code(&e)),
    };
    match cli.command {
        Command::Check(a) => render(cmd_check(&a.source), a.json),
        Command::Cohomology(a) => render(cmd_cohomology(&a), a.json),
        Command::Volume(a) => render(cmd_volume(&a), a.json),
        Command::VerifyPaper(a) => {
            let (rep, all) = cmd_verify_paper(mutation_of(a.mutate));
            let text = if a.json { rep.to_machine() } else { rep.to_human() };
            (text, if all { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Export(a) => match cmd_export(&a.name) {
            Ok(s) => (s + "\n", EXIT_OK),
            Err(e) => (format!("error: {e}\n"), exit_code(&e)),
        },
    }
}
