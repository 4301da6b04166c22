use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::Path;

use fextremal::enumerate::{
    generate_free_trees, max_f_search, EnumConfig, EnumError, EnumFilter, MaxFReport,
};
use fextremal::ilp::IlpSolution;
use fextremal::invariants::{self, IndexError};
use fextremal::io::{parse_tree, to_dot, to_edge_list, to_json, LoadError};
use fextremal::routes::{
    render_table, run_routes, table_rows, Erratum, Route, RouteError, RouteReport, TableColumn,
    TableFormat,
};
use fextremal::transform::{construct_extremal, extremalize_traced, TransformError};
use fextremal::{ExtremalSpec, Tree};
use serde::Serialize;

use crate::{ExportFormat, Failure, IndexName, ReportFormat, TreeFormat};

type CmdResult = Result<(), Failure>;

fn load_tree(path: &Path) -> Result<Tree, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::new(Failure::PARSE, format!("reading standard input: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| Failure::new(Failure::PARSE, format!("reading {}: {e}", path.display())))?
    };
    parse_tree(&text).map_err(|e| match e {
        LoadError::Parse(p) => Failure::new(Failure::PARSE, format!("{}: {p}", path.display())),
        LoadError::Invalid(t) => {
            Failure::new(Failure::INVALID_TREE, format!("{}: {t}", path.display()))
        }
    })
}

fn unwritable(path: &Path, e: io::Error) -> Failure {
    Failure::new(
        Failure::UNWRITABLE,
        format!("cannot write {}: {e}", path.display()),
    )
}

/// Writes `content` to `out`, or to standard output when `out` is `None`.
fn emit(out: Option<&Path>, content: &str) -> CmdResult {
    match out {
        Some(p) => fs::write(p, content).map_err(|e| unwritable(p, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::new(Failure::UNWRITABLE, format!("standard output: {e}")))
        }
    }
}

fn route_failure(e: RouteError) -> Failure {
    match e {
        RouteError::Disagreement { .. } => Failure::new(Failure::DISAGREEMENT, e.to_string()),
        RouteError::Unverified => Failure::new(Failure::INTERNAL, e.to_string()),
        other => Failure::new(Failure::PARSE, other.to_string()),
    }
}

fn enum_failure(e: EnumError) -> Failure {
    Failure::new(Failure::PARSE, e.to_string())
}

fn enum_config(ceiling: usize) -> EnumConfig {
    EnumConfig {
        ceiling,
        ..EnumConfig::default()
    }
}

pub fn compute(input: &Path, index: IndexName, alpha: Option<f64>) -> CmdResult {
    let t = load_tree(input)?;
    let need_alpha =
        || alpha.ok_or_else(|| Failure::new(Failure::PARSE, "--alpha is required for this index"));
    let bad_alpha = |e: IndexError| Failure::new(Failure::PARSE, e.to_string());
    let value = match index {
        IndexName::F => invariants::f_index(&t),
        IndexName::M1 => invariants::first_zagreb(&t),
        IndexName::M2 => invariants::second_zagreb(&t),
        IndexName::M1alpha => {
            invariants::general_first_zagreb(&t, need_alpha()?).map_err(bad_alpha)?
        }
        IndexName::R0alpha => {
            invariants::zeroth_order_general_randic(&t, need_alpha()?).map_err(bad_alpha)?
        }
        IndexName::Randic => invariants::randic_index(&t),
    };
    emit(None, &format!("{value}\n"))
}

pub fn extremal(
    n: u64,
    delta: u64,
    route: Route,
    format: ReportFormat,
    ceiling: usize,
) -> CmdResult {
    let report = run_routes(n, delta, route, &enum_config(ceiling)).map_err(route_failure)?;
    let text = match format {
        ReportFormat::Text => report_text(&report, route),
        ReportFormat::Json => report_json(&report, route),
    };
    emit(None, &text)
}

fn report_text(r: &RouteReport, route: Route) -> String {
    let mut s = format!("n={} delta={}\n", r.n, r.delta);
    if let Some(c) = &r.closed {
        let case = match c.residue() {
            None => "divisible".to_string(),
            Some(x) => format!("residue x={x}"),
        };
        let _ = writeln!(s, "closed: F={} spec={} case={case}", c.f_value, c.spec);
    }
    if let Some(sol) = &r.ilp {
        let vars: Vec<String> = sol
            .nonzero_vars()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(
            s,
            "ilp: F={} spec={} nonzero={}",
            sol.objective,
            sol.degree_spec(),
            vars.join(" ")
        );
    }
    if let Some(e) = &r.enumeration {
        for g in &e.groups {
            let _ = writeln!(s, "enum: F={} spec={} count={}", e.f_max, g.spec, g.count);
        }
    }
    if route == Route::All {
        s.push_str("agreement: all routes agree\n");
    }
    let computed = r.erratum.and_then(|e| match e.column {
        TableColumn::F => Some(r.f_value().to_string()),
        TableColumn::TreeCount => r.enum_count().map(|c| c.to_string()),
    });
    if let (Some(err), Some(value)) = (r.erratum, computed) {
        let label = err.column.label();
        let _ = writeln!(
            s,
            "ERRATUM: the published table prints {label}={} for n={}, delta={}; computed {label}={value}",
            err.printed, err.n, err.delta
        );
    }
    s
}

#[derive(Serialize)]
struct JsonReport<'a> {
    n: u64,
    delta: u64,
    f: u128,
    spec: String,
    closed: Option<&'a ExtremalSpec>,
    ilp: Option<&'a IlpSolution>,
    #[serde(rename = "enum")]
    enumeration: Option<&'a MaxFReport>,
    agree: bool,
    erratum: Option<Erratum>,
}

fn report_json(r: &RouteReport, route: Route) -> String {
    let report = JsonReport {
        n: r.n,
        delta: r.delta,
        f: r.f_value(),
        spec: r.spec().to_string(),
        closed: r.closed.as_ref(),
        ilp: r.ilp.as_ref(),
        enumeration: r.enumeration.as_ref(),
        agree: route == Route::All,
        erratum: r.erratum,
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

pub fn table(
    delta: u64,
    n_min: u64,
    n_max: u64,
    format: TableFormat,
    out: Option<&Path>,
    ceiling: usize,
) -> CmdResult {
    let rows = table_rows(delta, n_min, n_max, &enum_config(ceiling)).map_err(route_failure)?;
    emit(out, &render_table(&rows, format))
}

pub fn export(n: u64, delta: u64, format: ExportFormat, out: &Path, ceiling: usize) -> CmdResult {
    // validate before touching the file system
    let spec = fextremal::extremal_spec(n, delta)
        .map_err(|e| Failure::new(Failure::PARSE, e.to_string()))?;
    let trees: Vec<Tree> = if n as usize <= ceiling {
        let cfg = EnumConfig {
            ceiling,
            representatives: usize::MAX,
        };
        let report = max_f_search(n as usize, spec.delta as usize, &cfg).map_err(enum_failure)?;
        report
            .groups
            .into_iter()
            .flat_map(|g| g.representatives)
            .collect()
    } else {
        vec![construct_extremal(n, delta)
            .map_err(|e| Failure::new(Failure::PARSE, e.to_string()))?]
    };
    fs::create_dir_all(out).map_err(|e| unwritable(out, e))?;
    let width = trees.len().to_string().len();
    for (k, t) in trees.iter().enumerate() {
        let stem = format!("extremal_n{n}_d{}_{:0width$}", spec.delta, k + 1);
        let (path, body) = match format {
            ExportFormat::Dot => (
                out.join(format!("{stem}.dot")),
                to_dot(t, &format!("T{}", k + 1)),
            ),
            ExportFormat::Json => (
                out.join(format!("{stem}.json")),
                format!("{}\n", to_json(t)),
            ),
        };
        fs::write(&path, body).map_err(|e| unwritable(&path, e))?;
    }
    eprintln!("wrote {} file(s) to {}", trees.len(), out.display());
    Ok(())
}

pub fn enumerate(n: usize, delta: Option<usize>, out: Option<&Path>, ceiling: usize) -> CmdResult {
    let filter = delta.map(EnumFilter::max_degree).unwrap_or_default();
    let trees = generate_free_trees(n, &filter, &enum_config(ceiling)).map_err(enum_failure)?;
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(fs::File::create(p).map_err(|e| unwritable(p, e))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    let target = out.map_or_else(|| Path::new("<stdout>").to_path_buf(), Path::to_path_buf);
    for t in trees {
        writeln!(w, "{}", to_json(&t)).map_err(|e| unwritable(&target, e))?;
    }
    w.flush().map_err(|e| unwritable(&target, e))
}

pub fn extremalize(
    input: &Path,
    delta: usize,
    format: TreeFormat,
    trace: bool,
    out: Option<&Path>,
) -> CmdResult {
    let t = load_tree(input)?;
    let (result, steps) = extremalize_traced(&t, delta).map_err(|e| match e {
        TransformError::DegreeBoundViolated { .. } => {
            Failure::new(Failure::INVALID_TREE, e.to_string())
        }
        TransformError::Domain(_) => Failure::new(Failure::PARSE, e.to_string()),
        other => Failure::new(Failure::INTERNAL, other.to_string()),
    })?;
    let body = match format {
        TreeFormat::Edges => to_edge_list(&result),
        TreeFormat::Json => format!("{}\n", to_json(&result)),
        TreeFormat::Dot => to_dot(&result, "T"),
    };
    if trace {
        let mut lines = String::new();
        for s in &steps {
            lines.push_str(&serde_json::to_string(s).expect("record serializes"));
            lines.push('\n');
        }
        emit(None, &lines)?;
        if let Some(p) = out {
            emit(Some(p), &body)?;
        }
        Ok(())
    } else {
        emit(out, &body)
    }
}
