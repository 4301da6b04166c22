//! The three independent routes to the F-maximal degree spec (closed form,
//! integer program, exhaustive enumeration), their agreement check, and the
//! tabulation built on top of them.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::enumerate::{max_f_search, EnumConfig, EnumError, MaxFReport};
use crate::extremal::{extremal_spec, DomainError, ExtremalSpec};
use crate::graph::DegreeSpec;
use crate::ilp::{build_instance, solve, verify_solution, IlpError, IlpSolution};

/// Environment variable capping worker threads.
pub const THREADS_ENV: &str = "FEXTREMAL_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RouteError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Ilp(#[from] IlpError),
    #[error(transparent)]
    Enum(#[from] EnumError),
    #[error("integer program returned a solution that fails verification")]
    Unverified,
    #[error("routes disagree for n={n}, delta={delta}: {detail}")]
    Disagreement { n: u64, delta: u64, detail: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Closed,
    Ilp,
    Enum,
    All,
}

impl FromStr for Route {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "closed" => Ok(Self::Closed),
            "ilp" => Ok(Self::Ilp),
            "enum" => Ok(Self::Enum),
            "all" => Ok(Self::All),
            other => Err(format!("unknown route `{other}` (closed|ilp|enum|all)")),
        }
    }
}

/// Column of a published table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TableColumn {
    TreeCount,
    F,
}

impl TableColumn {
    pub fn label(self) -> &'static str {
        match self {
            Self::TreeCount => "#T",
            Self::F => "F",
        }
    }
}

/// A published extremal-tree table entry known to be misprinted. The
/// computed value is authoritative; the printed one is kept for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub delta: u64,
    pub n: u64,
    pub column: TableColumn,
    pub printed: u128,
}

impl Erratum {
    pub fn note(&self) -> String {
        format!(
            "printed {}={} is an erratum",
            self.column.label(),
            self.printed
        )
    }
}

/// * `delta = 5, n = 11`: spec `5^2,2^1,1^8` is realized by 2 trees (the
///   degree-2 vertex sits between the two hubs or hangs off one of them).
/// * `delta = 5, n = 14`: the listed spec `5^3,1^11` has cube sum 386, not 326.
/// * `delta = 4, n = 15`: spec `4^4,2^1,1^10` is realized by 7 non-isomorphic
///   trees (the internal 5-vertex tree is a path with 3 placements of the
///   degree-2 vertex, a chair with 3, or a star with 1), not 6.
pub const KNOWN_ERRATA: &[Erratum] = &[
    Erratum {
        delta: 4,
        n: 15,
        column: TableColumn::TreeCount,
        printed: 6,
    },
    Erratum {
        delta: 5,
        n: 11,
        column: TableColumn::TreeCount,
        printed: 1,
    },
    Erratum {
        delta: 5,
        n: 14,
        column: TableColumn::F,
        printed: 326,
    },
];

pub fn erratum_for(n: u64, delta: u64) -> Option<Erratum> {
    KNOWN_ERRATA
        .iter()
        .copied()
        .find(|e| e.n == n && e.delta == delta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteReport {
    pub n: u64,
    pub delta: u64,
    pub closed: Option<ExtremalSpec>,
    pub ilp: Option<IlpSolution>,
    pub enumeration: Option<MaxFReport>,
    pub erratum: Option<Erratum>,
}

impl RouteReport {
    /// The agreed F value (every route run reports the same one).
    pub fn f_value(&self) -> u128 {
        self.closed
            .as_ref()
            .map(|c| c.f_value)
            .or(self.ilp.as_ref().map(|s| s.objective))
            .or(self.enumeration.as_ref().map(|r| r.f_max))
            .expect("at least one route ran")
    }

    pub fn spec(&self) -> DegreeSpec {
        self.closed
            .as_ref()
            .map(|c| c.spec.clone())
            .or(self.ilp.as_ref().map(IlpSolution::degree_spec))
            .or(self
                .enumeration
                .as_ref()
                .and_then(|r| r.unique())
                .map(|g| g.spec.clone()))
            .expect("at least one route ran")
    }

    pub fn enum_count(&self) -> Option<u64> {
        self.enumeration
            .as_ref()
            .and_then(|r| r.unique())
            .map(|g| g.count)
    }
}

/// Runs the requested route(s). With [`Route::All`] every route must report
/// the same F and the same unique degree spec, else
/// [`RouteError::Disagreement`].
///
/// The integer program is built with the bound clamped to `n - 1`, so it
/// needs `n >= 3`.
pub fn run_routes(
    n: u64,
    delta: u64,
    route: Route,
    cfg: &EnumConfig,
) -> Result<RouteReport, RouteError> {
    let want = |r: Route| route == r || route == Route::All;
    let closed = want(Route::Closed)
        .then(|| extremal_spec(n, delta))
        .transpose()?;
    let ilp = if want(Route::Ilp) {
        if delta < 2 {
            return Err(DomainError::BoundTooSmall(delta).into());
        }
        let inst = build_instance(n, delta.min(n.saturating_sub(1)))?;
        let sol = solve(&inst)?;
        if !verify_solution(&inst, &sol) {
            return Err(RouteError::Unverified);
        }
        Some(sol)
    } else {
        None
    };
    let enumeration = if want(Route::Enum) {
        if n < 2 {
            return Err(DomainError::OrderTooSmall(n).into());
        }
        if delta < 2 {
            return Err(DomainError::BoundTooSmall(delta).into());
        }
        let n_usize = usize::try_from(n).unwrap_or(usize::MAX);
        Some(max_f_search(n_usize, delta.min(n - 1) as usize, cfg)?)
    } else {
        None
    };
    let report = RouteReport {
        n,
        delta,
        closed,
        ilp,
        enumeration,
        erratum: erratum_for(n, delta),
    };
    check_agreement(&report)?;
    Ok(report)
}

fn check_agreement(r: &RouteReport) -> Result<(), RouteError> {
    let mut seen: Vec<(&str, u128, Option<DegreeSpec>)> = Vec::new();
    if let Some(c) = &r.closed {
        seen.push(("closed", c.f_value, Some(c.spec.clone())));
    }
    if let Some(s) = &r.ilp {
        seen.push(("ilp", s.objective, Some(s.degree_spec())));
    }
    if let Some(e) = &r.enumeration {
        seen.push(("enum", e.f_max, e.unique().map(|g| g.spec.clone())));
    }
    let Some((first_name, f0, spec0)) = seen.first().cloned() else {
        return Ok(());
    };
    for (name, f, spec) in &seen {
        if spec.is_none() {
            return Err(RouteError::Disagreement {
                n: r.n,
                delta: r.delta,
                detail: format!("{name} found several optimal degree specs"),
            });
        }
        if *f != f0 || *spec != spec0 {
            return Err(RouteError::Disagreement {
                n: r.n,
                delta: r.delta,
                detail: format!(
                    "{first_name} gives F={f0} spec={}, {name} gives F={f} spec={}",
                    spec0.as_ref().map(|s| s.to_string()).unwrap_or_default(),
                    spec.as_ref().map(|s| s.to_string()).unwrap_or_default()
                ),
            });
        }
    }
    Ok(())
}

/// One row of an extremal-tree table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub degree_spec: DegreeSpec,
    pub tree_count: u64,
    pub nonzero_ilp_vars: Vec<(String, u64)>,
    pub f_value: u128,
    pub erratum: Option<Erratum>,
}

impl TableRow {
    fn ilp_text(&self) -> String {
        self.nonzero_ilp_vars
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn erratum_text(&self) -> String {
        self.erratum.map(|e| e.note()).unwrap_or_default()
    }
}

/// Rows for `n_min..=n_max`, each backed by all three routes in agreement.
/// Rows are computed in parallel and returned in increasing `n`.
pub fn table_rows(
    delta: u64,
    n_min: u64,
    n_max: u64,
    cfg: &EnumConfig,
) -> Result<Vec<TableRow>, RouteError> {
    if n_min < 3 {
        return Err(DomainError::OutOfRange(format!(
            "tables start at n >= 3, got n_min = {n_min}"
        ))
        .into());
    }
    (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let r = run_routes(n, delta, Route::All, cfg)?;
            let group = r
                .enumeration
                .as_ref()
                .and_then(|e| e.unique())
                .expect("agreement checked");
            let sol = r.ilp.as_ref().expect("ilp ran");
            Ok(TableRow {
                n,
                degree_spec: group.spec.clone(),
                tree_count: group.count,
                nonzero_ilp_vars: sol.nonzero_vars(),
                f_value: r.f_value(),
                erratum: r.erratum,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            "md" | "markdown" => Ok(Self::Markdown),
            other => Err(format!("unknown table format `{other}` (csv|json|md)")),
        }
    }
}

pub const CSV_HEADER: [&str; 6] = [
    "n",
    "degree_spec",
    "tree_count",
    "ilp_nonzero",
    "f",
    "erratum",
];

pub fn render_table(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_HEADER).expect("in-memory write");
            for r in rows {
                w.write_record([
                    r.n.to_string(),
                    r.degree_spec.to_string(),
                    r.tree_count.to_string(),
                    r.ilp_text(),
                    r.f_value.to_string(),
                    r.erratum_text(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        TableFormat::Markdown => {
            let mut s = String::from("| n | D(T) | #T | Non-zero variables | F | Note |\n");
            s.push_str("|---|------|----|--------------------|---|------|\n");
            for r in rows {
                let _ = writeln!(
                    s,
                    "| {} | [{}] | {} | {} | {} | {} |",
                    r.n,
                    r.degree_spec,
                    r.tree_count,
                    r.ilp_text(),
                    r.f_value,
                    r.erratum_text()
                );
            }
            s
        }
    }
}

/// Installs the global worker pool, honoring [`THREADS_ENV`]. Later calls
/// are no-ops.
pub fn init_thread_pool() {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0);
    if let Some(t) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}
