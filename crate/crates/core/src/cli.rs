//! The command surface behind the `streamtri` binary.
//!
//! Every verb prints a `key=value` report, one pair per line, in a fixed
//! order. Exit status: 0 on success, 1 on a negative verdict, 2 on an
//! input error (the message goes to stderr as `error=…`).

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::cone::{factor_conal_isometry, format_qvec, format_ray, triangulability, RationalCone};
use crate::error::{Error, Result};
use crate::group::{quotient, GroupPresentation, Quotient};
use crate::rational::{fmt_q, parse_q, Q};
use crate::simplicial::{
    euler_characteristic, f_vector, verify_identities, FiniteSet, Presentation,
    SimplicialSet, Window,
};
use crate::stream::{
    canonicalize_point, line_point, line_value, parse_point, parse_samples, quotient_order_oracle,
    region_order, OracleRegion, Region, StreamPoint,
};

#[derive(Parser, Debug)]
#[command(name = "streamtri", version, about = "Directed triangulations of flat conal manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SetArgs {
    /// `xi^<n>` or a simplicial-set file.
    #[arg(long)]
    pub set: Option<String>,
    /// Group file; with `--set xi^<n>` (or alone) the quotient `Ξⁿ/G` is used.
    #[arg(long)]
    pub group: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the five families of simplicial identities.
    VerifyIdentities {
        #[command(flatten)]
        input: SetArgs,
        /// `<k>` for the box `[0,k]ⁿ`, or `<lo>:<hi>`.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
        /// Stop after this many simplices.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Product of two presentations.
    Product {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        /// Write the product table (finite factors only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The quotient `Ξⁿ/G`.
    Quotient {
        #[arg(long)]
        group: PathBuf,
        /// Write the quotient table.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Nondegenerate cells per dimension.
    Fvector {
        #[command(flatten)]
        input: SetArgs,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Euler characteristic of a finite presentation.
    Euler {
        #[command(flatten)]
        input: SetArgs,
    },
    /// Generating / free predicates and extremal rays of a cone.
    CheckCone { cone: PathBuf },
    /// Factor an affine map preserving the positive orthant.
    FactorIsometry {
        /// Rows separated by `;`, entries by spaces.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, allow_hyphen_values = true)]
        trans: String,
    },
    /// Triangulability verdict for `ℝⁿ/G` with a constant cone.
    Triangulable {
        #[arg(long)]
        cone: PathBuf,
        #[arg(long)]
        group: Option<PathBuf>,
    },
    /// Causal preorder of a region on sample points.
    RegionOrder {
        #[command(flatten)]
        input: SetArgs,
        /// `whole`, `window <lo1> <hi1> …` or `star <cell>`.
        #[arg(long, allow_hyphen_values = true)]
        region: String,
        /// File of `point <cell> <t1> … <tk>` lines.
        #[arg(long)]
        samples: PathBuf,
        /// Print the witness chain of every related pair.
        #[arg(long)]
        witnesses: bool,
    },
    /// Convert between `|Ξ|` and the real line.
    LineCompare {
        /// Rationals to place on `|Ξ|`.
        #[arg(long = "value", allow_hyphen_values = true)]
        values: Vec<String>,
        /// Points `<cell> <t>` of `|Ξ|` to evaluate.
        #[arg(long = "point")]
        points: Vec<String>,
    },
    /// Compare the region order on `Ξⁿ/G` with the geometric oracle.
    OracleCompare {
        #[arg(long)]
        group: PathBuf,
        /// Defaults to the barycenter of every cell.
        #[arg(long)]
        samples: Option<PathBuf>,
    },
}

/// Outcome of one invocation.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses the arguments (program name first) and runs the verb.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    stdout: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    stderr: text,
                    code,
                    ..Outcome::default()
                }
            }
        }
        Ok(cli) => execute(&cli.command),
    }
}

/// Entry point for the binary.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let o = run(args);
    print!("{}", o.stdout);
    eprint!("{}", o.stderr);
    let _ = std::io::stdout().flush();
    o.code
}

pub fn execute(cmd: &Command) -> Outcome {
    let mut r = Report::default();
    match dispatch(cmd, &mut r) {
        Ok(ok) => Outcome {
            stdout: r.text,
            stderr: String::new(),
            code: if ok { 0 } else { 1 },
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error={e}\n"),
            code: 2,
        },
    }
}

#[derive(Default)]
struct Report {
    text: String,
}

impl Report {
    fn kv(&mut self, k: &str, v: impl std::fmt::Display) {
        let _ = writeln!(self.text, "{k}={v}");
    }
}

fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let s: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", s.join(","))
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn read_group(path: &Path) -> Result<GroupPresentation> {
    GroupPresentation::parse(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    }
}

/// A loaded simplicial set.
pub enum Loaded {
    Presentation(Presentation),
    Quotient(Box<Quotient>),
}

impl Loaded {
    pub fn as_set(&self) -> &dyn SimplicialSet {
        match self {
            Loaded::Presentation(p) => p,
            Loaded::Quotient(q) => q.as_ref(),
        }
    }
}

/// `xi^<n>` or the path of a simplicial-set file.
pub fn load_presentation(text: &str) -> Result<Presentation> {
    if let Some(p) = Presentation::parse_inline(text) {
        return Ok(p);
    }
    let path = Path::new(text);
    let set = FiniteSet::parse(&read(path)?).map_err(|e| in_file(path, e))?;
    Ok(Presentation::Finite(set))
}

fn load(input: &SetArgs) -> Result<Loaded> {
    match (&input.set, &input.group) {
        (None, None) => Err(Error::parse(0, "one of --set or --group is required")),
        (Some(s), None) => Ok(Loaded::Presentation(load_presentation(s)?)),
        (set, Some(g)) => {
            let group = read_group(g)?;
            if let Some(s) = set {
                match Presentation::parse_inline(s) {
                    Some(Presentation::Xi(x)) if x.n == group.n => {}
                    Some(Presentation::Xi(x)) => {
                        return Err(Error::dims(
                            format!("--set {s} vs --group {}", g.display()),
                            x.n,
                            group.n,
                        ))
                    }
                    _ => {
                        return Err(Error::parse(
                            0,
                            format!("quotients need `--set xi^<n>`, got `{s}`"),
                        ))
                    }
                }
            }
            Ok(Loaded::Quotient(Box::new(quotient(&group)?)))
        }
    }
}

/// `<k>` for `[0,k]ⁿ` or `<lo>:<hi>` for `[lo,hi]ⁿ`.
pub fn parse_window(text: &str, n: usize) -> Result<Window> {
    let bad = || Error::parse(0, format!("bad window `{text}`: expected `<k>` or `<lo>:<hi>`"));
    let (lo, hi) = match text.split_once(':') {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => (0, text.parse().map_err(|_| bad())?),
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(Window::cube(n, lo, hi))
}

fn window_for(s: &dyn SimplicialSet, text: Option<&str>) -> Result<Option<Window>> {
    match text {
        Some(w) if s.coord_arity() > 0 => Ok(Some(parse_window(w, s.coord_arity())?)),
        Some(_) | None if s.is_finite() => Ok(None),
        _ => Err(Error::WindowRequired),
    }
}

fn counts(s: &dyn SimplicialSet, w: Option<&Window>) -> Result<Vec<usize>> {
    if w.is_none() {
        return f_vector(s);
    }
    (0..=s.max_cell_dim()).map(|d| Ok(s.cells(d, w)?.len())).collect()
}

/// Writes a finite presentation in the table format; the file parses back
/// to an isomorphic table.
pub fn export_simplicial<S: SimplicialSet + ?Sized>(s: &S, path: &Path) -> Result<()> {
    let table = FiniteSet::tabulate(s)?;
    std::fs::write(path, table.export()).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_row(s: &str) -> Result<Vec<Q>> {
    s.split_whitespace()
        .map(|t| parse_q(t).ok_or_else(|| Error::parse(0, format!("bad rational `{t}`"))))
        .collect()
}

fn report_quotient(r: &mut Report, q: &Quotient) {
    let st = q.structure();
    r.kv("dim", q.dim());
    r.kv("point_group_order", st.point_group_order());
    for (k, row) in st.lattice().basis().iter().enumerate() {
        r.kv(&format!("lattice_row{k}"), tuple(row));
    }
    r.kv("lattice_index", st.lattice().index().unwrap_or(0));
    let fp = st.fixed_points();
    r.kv("free_action", fp.free);
    if let Some((g, p)) = fp.witness {
        r.kv("fixed_point_element", g);
        r.kv("fixed_point", format_qvec(&p));
    }
    r.kv("f_vector", tuple(&q.f_vector()));
    r.kv("euler", q.euler_characteristic());
    r.kv("stabilized_cells", q.stabilized_cells().len());
    for (name, rep) in q.representatives() {
        r.kv(&format!("cell.{name}"), rep);
    }
}

fn dispatch(cmd: &Command, r: &mut Report) -> Result<bool> {
    match cmd {
        Command::VerifyIdentities {
            input,
            window,
            maxdim,
            budget,
        } => {
            let loaded = load(input)?;
            let s = loaded.as_set();
            let w = window_for(s, window.as_deref())?;
            let v = verify_identities(s, *maxdim, w.as_ref(), *budget)?;
            r.kv("verb", "verify-identities");
            r.kv("max_dim", maxdim);
            if let Some(w) = &w {
                r.kv("window", format!("{}:{}", w.lo[0], w.hi[0]));
            }
            r.kv("violations", v.len());
            for x in &v {
                r.kv("violation", x);
            }
            Ok(v.is_empty())
        }
        Command::Product {
            left,
            right,
            window,
            out,
        } => {
            let p = Presentation::product(load_presentation(left)?, load_presentation(right)?);
            let w = window_for(&p, window.as_deref())?;
            r.kv("verb", "product");
            r.kv("finite", p.is_finite());
            if let Some(w) = &w {
                r.kv("window", format!("{}:{}", w.lo[0], w.hi[0]));
            }
            let c = counts(&p, w.as_ref())?;
            r.kv(if w.is_some() { "cells_in_window" } else { "f_vector" }, tuple(&c));
            if w.is_none() {
                r.kv("euler", euler_characteristic(&p)?);
            }
            if let Some(path) = out {
                export_simplicial(&p, path)?;
                r.kv("written", path.display());
            }
            Ok(true)
        }
        Command::Quotient { group, out } => {
            let q = quotient(&read_group(group)?)?;
            r.kv("verb", "quotient");
            report_quotient(r, &q);
            if let Some(path) = out {
                export_simplicial(q.set(), path)?;
                r.kv("written", path.display());
            }
            Ok(true)
        }
        Command::Fvector { input, window } => {
            let loaded = load(input)?;
            let s = loaded.as_set();
            let w = window_for(s, window.as_deref())?;
            r.kv("verb", "fvector");
            let c = counts(s, w.as_ref())?;
            r.kv(if w.is_some() { "cells_in_window" } else { "f_vector" }, tuple(&c));
            Ok(true)
        }
        Command::Euler { input } => {
            let loaded = load(input)?;
            r.kv("verb", "euler");
            r.kv("euler", euler_characteristic(loaded.as_set())?);
            Ok(true)
        }
        Command::CheckCone { cone } => {
            let c = RationalCone::parse(&read(cone)?).map_err(|e| in_file(cone, e))?;
            let rep = c.report();
            r.kv("verb", "check-cone");
            r.kv("dim", rep.n);
            r.kv("rays", c.rays().len());
            r.kv("span_rank", rep.span_rank);
            r.kv("extremal_rays", rep.extremal_rays.len());
            for ray in &rep.extremal_rays {
                r.kv("extremal_ray", format_ray(ray));
            }
            r.kv("generating", rep.generating);
            r.kv("free", rep.free);
            Ok(rep.generating && rep.free)
        }
        Command::FactorIsometry { matrix, trans } => {
            let a: Vec<Vec<Q>> = matrix.split(';').map(parse_row).collect::<Result<_>>()?;
            let t = parse_row(trans)?;
            if a.iter().any(|row| row.len() != a.len()) {
                return Err(Error::dims("matrix row length (rows vs columns)", a.len(), a[0].len()));
            }
            if t.len() != a.len() {
                return Err(Error::dims("--trans length vs --matrix size", a.len(), t.len()));
            }
            r.kv("verb", "factor-isometry");
            match factor_conal_isometry(&a, &t) {
                Ok(f) => {
                    r.kv("factorizable", true);
                    r.kv("perm", tuple(&f.perm.iter().map(|p| p + 1).collect::<Vec<_>>()));
                    r.kv("trans", format_qvec(&f.trans));
                    if let Some(g) = f.to_group_element() {
                        r.kv("group_element", g);
                    }
                    Ok(true)
                }
                Err(e @ (Error::NotOrthogonal | Error::NotConePreserving { .. } | Error::NotPermutation { .. })) => {
                    r.kv("factorizable", false);
                    r.kv("reason", e);
                    Ok(false)
                }
                Err(e) => Err(e),
            }
        }
        Command::Triangulable { cone, group } => {
            let c = RationalCone::parse(&read(cone)?).map_err(|e| in_file(cone, e))?;
            let g = group.as_deref().map(read_group).transpose()?;
            let v = triangulability(&c, g.as_ref()).map_err(|e| match e {
                Error::DimensionMismatch { expected, found, .. } => Error::dims(
                    format!(
                        "--cone {} vs --group {}",
                        cone.display(),
                        group.as_deref().map(|p| p.display().to_string()).unwrap_or_default()
                    ),
                    expected,
                    found,
                ),
                other => other,
            })?;
            r.kv("verb", "triangulable");
            r.kv("generating", v.report.generating);
            r.kv("free", v.report.free);
            r.kv("triangulable", v.triangulable);
            if let Some(q) = &v.witness {
                r.kv("witness_f_vector", tuple(&q.f_vector()));
                r.kv("witness_euler", q.euler_characteristic());
            }
            Ok(v.triangulable)
        }
        Command::RegionOrder {
            input,
            region,
            samples,
            witnesses,
        } => {
            let loaded = load(input)?;
            let s = loaded.as_set();
            let region = Region::parse(region)?;
            let pts = parse_samples(s, &read(samples)?).map_err(|e| in_file(samples, e))?;
            let ord = region_order(s, &region, &pts)?;
            r.kv("verb", "region-order");
            r.kv("region", &region);
            r.kv("guarantee", "sound");
            r.kv("samples", ord.len());
            for (i, p) in ord.samples.iter().enumerate() {
                r.kv(&format!("sample{i}"), p);
            }
            let pairs = (0..ord.len())
                .flat_map(|i| (0..ord.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| ord.leq(i, j))
                .count();
            r.kv("related_pairs", pairs);
            r.kv("preorder", ord.is_preorder());
            r.kv("total", ord.is_total());
            for i in 0..ord.len() {
                let row: String = (0..ord.len()).map(|j| if ord.leq(i, j) { '1' } else { '0' }).collect();
                r.kv(&format!("row{i}"), row);
            }
            if *witnesses {
                for i in 0..ord.len() {
                    for j in 0..ord.len() {
                        if i == j || !ord.leq(i, j) {
                            continue;
                        }
                        let chain = ord.witness(i, j).unwrap_or(&[]);
                        let steps: Vec<String> = chain
                            .iter()
                            .map(|st| format!("{}:{}<={}", st.cell, format_qvec(&st.from), format_qvec(&st.to)))
                            .collect();
                        r.kv(&format!("witness{i}_{j}"), steps.join(" "));
                    }
                }
            }
            Ok(true)
        }
        Command::LineCompare { values, points } => {
            let line = Presentation::xi(1);
            r.kv("verb", "line-compare");
            for v in values {
                let x = parse_q(v).ok_or_else(|| Error::parse(0, format!("bad rational `{v}`")))?;
                r.kv(&format!("point_of[{}]", fmt_q(&x)), line_point(&x));
            }
            for p in points {
                let sp = parse_point(&line, p)?;
                r.kv(&format!("value_of[{sp}]"), fmt_q(&line_value(&sp)?));
            }
            Ok(true)
        }
        Command::OracleCompare { group, samples } => {
            let q = quotient(&read_group(group)?)?;
            let pts = match samples {
                Some(path) => parse_samples(&q, &read(path)?).map_err(|e| in_file(path, e))?,
                None => default_quotient_samples(&q)?,
            };
            let cmp = compare_with_oracle(&q, &pts)?;
            r.kv("verb", "oracle-compare");
            r.kv("samples", pts.len());
            r.kv("pairs", cmp.pairs);
            r.kv("region_order_total", cmp.region_total);
            r.kv("oracle_total", cmp.oracle_total);
            r.kv("disagreements", cmp.disagreements.len());
            for (i, j) in &cmp.disagreements {
                r.kv("disagreement", format!("{} vs {}", pts[*i], pts[*j]));
            }
            Ok(cmp.disagreements.is_empty())
        }
    }
}

/// The barycenter of every cell of a quotient, vertices included.
pub fn default_quotient_samples(q: &Quotient) -> Result<Vec<StreamPoint>> {
    let mut out = Vec::new();
    for d in 0..=q.dim() {
        for c in q.cells(d, None)? {
            out.push(StreamPoint::barycenter(c, d));
        }
    }
    Ok(out)
}

/// Region order on the whole quotient against the oracle on `ℝⁿ/G`.
pub struct OracleComparison {
    pub pairs: usize,
    pub region_total: bool,
    pub oracle_total: bool,
    pub disagreements: Vec<(usize, usize)>,
}

pub fn compare_with_oracle(q: &Quotient, samples: &[StreamPoint]) -> Result<OracleComparison> {
    let ord = region_order(q, &Region::Whole, samples)?;
    let coords: Vec<Vec<Q>> = samples
        .iter()
        .map(|p| {
            let p = canonicalize_point(q, &p.cell, &p.coords)?;
            q.realize_rep(&p.cell, &p.coords)
                .ok_or_else(|| Error::UnknownCell(p.cell.cell.to_string()))
        })
        .collect::<Result<_>>()?;
    let n = samples.len();
    let mut disagreements = Vec::new();
    let mut oracle_total = true;
    for i in 0..n {
        for j in 0..n {
            let o = quotient_order_oracle(q.structure(), &coords[i], &coords[j], &OracleRegion::Whole)?.related;
            oracle_total &= o;
            if o != ord.leq(i, j) {
                disagreements.push((i, j));
            }
        }
    }
    Ok(OracleComparison {
        pairs: n * n,
        region_total: ord.is_total(),
        oracle_total,
        disagreements,
    })
}
