use std::fmt;
use std::fmt::Write as _;

use hasse_paths::closed::{
    asymptotic_report, classification_report, edge_count_formula, hasse_index_exact, Quantity,
};
use hasse_paths::order::{
    covers_by_order, delta_polynomial_enum, edge_count_enum, nabla_edge_count_enum,
    nabla_polynomial_enum, Caps,
};
use hasse_paths::series::{
    base_series, catalog_delta_series, edge_series_closed, edge_series_via_delta, format_rational,
    vertex_series, BaseSeries,
};
use hasse_paths::young::{
    corner_cells, ideal_size, young_edges, young_edges_bruteforce, Partition, DEFAULT_IDEAL_CAP,
};
use hasse_paths::{ClassKind, Error};
use serde_json::json;

use crate::{Format, RouteName};

/// Raises the ideal-size cap of the brute-force Young route.
const MAX_CELLS_VAR: &str = "HASSE_PATHS_MAX_CELLS";

/// Row order of the edge table.
const TABLE_ROWS: [ClassKind; 8] = [
    ClassKind::FF,
    ClassKind::GF,
    ClassKind::DD,
    ClassKind::GD,
    ClassKind::MM,
    ClassKind::GM,
    ClassKind::SS,
    ClassKind::GS,
];

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Mismatch { report: String, detail: String },
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Mismatch { .. } | Failure::Internal(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    pub fn partial_output(&self) -> Option<&str> {
        match self {
            Failure::Mismatch { report, .. } => Some(report),
            _ => None,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Cap(m) => write!(f, "{m} (use --force to override)"),
            Failure::Mismatch { detail, .. } => write!(f, "mismatch: {detail}"),
            Failure::Internal(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Usage(m) => Failure::Usage(m),
            Error::Contract(_) => Failure::Usage(e.to_string()),
            Error::ResourceCap { .. } => Failure::Cap(e.to_string()),
            Error::Series(_) | Error::Invariant(_) => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c == 0 {
                let _ = write!(line, "{cell:<w$}", w = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn table(max_n: usize, format: Format) -> Outcome {
    let mut rows = Vec::new();
    for kind in TABLE_ROWS {
        let values = (0..=max_n)
            .map(|n| edge_count_formula(kind, n).map(|v| v.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((kind, values));
    }
    Ok(match format {
        Format::Text | Format::Csv => {
            let mut grid = vec![std::iter::once("n".to_string())
                .chain((0..=max_n).map(|n| n.to_string()))
                .collect::<Vec<_>>()];
            for (kind, values) in &rows {
                grid.push(
                    std::iter::once(kind.code().to_string())
                        .chain(values.iter().cloned())
                        .collect(),
                );
            }
            if format == Format::Text {
                aligned(&grid)
            } else {
                grid[0][0] = "class".into();
                grid.iter().map(|r| r.join(",") + "\n").collect()
            }
        }
        Format::Json => pretty(&json!(rows
            .iter()
            .map(|(kind, values)| json!({ "class": kind.code(), "edges": values }))
            .collect::<Vec<_>>())),
    })
}

fn parse_fault(spec: &str) -> Result<(ClassKind, usize), Failure> {
    let bad = || Failure::Usage(format!("fault spec {spec:?} is not CLASS:N"));
    let (class, n) = spec.split_once(':').ok_or_else(bad)?;
    let kind = class.parse::<ClassKind>().map_err(|_| bad())?;
    let n = n.parse::<usize>().map_err(|_| bad())?;
    Ok((kind, n))
}

pub fn verify(
    target: &str,
    max_n: usize,
    routes: &[RouteName],
    force: bool,
    inject_fault: Option<&str>,
) -> Outcome {
    let classes: Vec<ClassKind> = if target.eq_ignore_ascii_case("all") {
        ClassKind::ALL.to_vec()
    } else {
        vec![target.parse::<ClassKind>()?]
    };
    let mut routes = routes.to_vec();
    routes.sort();
    routes.dedup();
    if routes.is_empty() {
        return Err(Failure::Usage("no routes selected".into()));
    }
    let fault = inject_fault.map(parse_fault).transpose()?;
    if fault.is_some() && !routes.contains(&RouteName::Enum) {
        return Err(Failure::Usage(
            "fault injection needs the enum route".into(),
        ));
    }

    // refuse oversized requests before producing any output
    for &kind in &classes {
        let caps = if force {
            Caps::unlimited()
        } else {
            Caps::default_for(kind)
        };
        if routes.contains(&RouteName::Enum) && max_n > caps.enumeration {
            return Err(Error::ResourceCap {
                what: format!("enumerating {kind}"),
                n: max_n,
                cap: caps.enumeration,
            }
            .into());
        }
        if routes.contains(&RouteName::Order) && max_n > caps.order {
            return Err(Error::ResourceCap {
                what: format!("order matrix of {kind}"),
                n: max_n,
                cap: caps.order,
            }
            .into());
        }
    }

    let mut grid = vec![std::iter::once("class".to_string())
        .chain(std::iter::once("n".to_string()))
        .chain(routes.iter().map(|r| format!("{r:?}").to_lowercase()))
        .chain(std::iter::once("status".to_string()))
        .collect::<Vec<_>>()];
    let mut first_mismatch: Option<String> = None;
    let mut cells = 0;

    for &kind in &classes {
        let caps = if force {
            Caps::unlimited()
        } else {
            Caps::default_for(kind)
        };
        let series = if routes.contains(&RouteName::Series) {
            Some((
                edge_series_via_delta(kind, max_n)?,
                edge_series_closed(kind, max_n)?,
            ))
        } else {
            None
        };
        for n in 0..=max_n {
            let mut values = Vec::new();
            let mut notes = Vec::new();
            for route in &routes {
                let v = match route {
                    RouteName::Enum => {
                        let mut up = edge_count_enum(kind, n, caps)?;
                        if fault == Some((kind, n)) {
                            up += 1u32;
                        }
                        let down = nabla_edge_count_enum(kind, n, caps)?;
                        if up != down {
                            notes.push(format!("Σ|Δ| = {up} but Σ|∇| = {down}"));
                        }
                        up.to_string()
                    }
                    RouteName::Series => {
                        let (via, closed) = series.as_ref().expect("built above");
                        let a = format_rational(via.coefficient(n)?);
                        let b = format_rational(closed.coefficient(n)?);
                        if a != b {
                            notes.push(format!("Δ-series {a} but closed series {b}"));
                        }
                        a
                    }
                    RouteName::Formula => edge_count_formula(kind, n)?.to_string(),
                    RouteName::Order => covers_by_order(kind, n, caps)?.edges.len().to_string(),
                };
                values.push(v);
            }
            if values.iter().any(|v| *v != values[0]) {
                let shown: Vec<String> = routes
                    .iter()
                    .zip(&values)
                    .map(|(r, v)| format!("{}={v}", format!("{r:?}").to_lowercase()))
                    .collect();
                notes.push(shown.join(", "));
            }
            let ok = notes.is_empty();
            if !ok && first_mismatch.is_none() {
                first_mismatch = Some(format!("{kind} n={n}: {}", notes.join("; ")));
            }
            grid.push(
                [kind.code().to_string(), n.to_string()]
                    .into_iter()
                    .chain(values)
                    .chain(std::iter::once(
                        if ok { "ok" } else { "MISMATCH" }.to_string(),
                    ))
                    .collect(),
            );
            cells += 1;
        }
    }

    let mut report = aligned(&grid);
    match first_mismatch {
        None => {
            let _ = writeln!(report, "all {cells} cells agree");
            Ok(report)
        }
        Some(detail) => Err(Failure::Mismatch { report, detail }),
    }
}

enum SeriesName {
    Edge,
    EdgeViaDelta,
    Delta,
    Vertex,
    Base(BaseSeries),
}

fn parse_series_name(name: &str) -> Result<SeriesName, Failure> {
    Ok(match name {
        "edge" => SeriesName::Edge,
        "edge-via-delta" => SeriesName::EdgeViaDelta,
        "delta" => SeriesName::Delta,
        "vertex" => SeriesName::Vertex,
        _ => match name.strip_prefix("base:") {
            Some(b) => SeriesName::Base(b.parse()?),
            None => return Err(Failure::Usage(format!(
                "unknown series {name:?}; expected edge, edge-via-delta, delta, vertex or base:X"
            ))),
        },
    })
}

pub fn series(name: &str, class: Option<ClassKind>, order: usize, format: Format) -> Outcome {
    let parsed = parse_series_name(name)?;
    let need_class = || class.ok_or_else(|| Failure::Usage(format!("series {name} needs --class")));
    let coeffs: Vec<String> = match parsed {
        SeriesName::Base(b) => {
            if class.is_some() {
                return Err(Failure::Usage(format!("series {name} takes no --class")));
            }
            base_series(b, order)?
                .coeffs()
                .iter()
                .map(format_rational)
                .collect()
        }
        SeriesName::Edge => edge_series_closed(need_class()?, order)?
            .coeffs()
            .iter()
            .map(format_rational)
            .collect(),
        SeriesName::EdgeViaDelta => edge_series_via_delta(need_class()?, order)?
            .coeffs()
            .iter()
            .map(format_rational)
            .collect(),
        SeriesName::Vertex => vertex_series(need_class()?, order)?
            .coeffs()
            .iter()
            .map(format_rational)
            .collect(),
        SeriesName::Delta => catalog_delta_series(need_class()?, order)?
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    let multiline = matches!(parse_series_name(name)?, SeriesName::Delta);
    Ok(match format {
        Format::Text if multiline => coeffs.iter().map(|c| format!("{c}\n")).collect(),
        Format::Text => coeffs.join(",") + "\n",
        Format::Csv => std::iter::once("n,coefficient\n".to_string())
            .chain(coeffs.iter().enumerate().map(|(n, c)| format!("{n},{c}\n")))
            .collect(),
        Format::Json => pretty(&json!({
            "series": name,
            "class": class.map(ClassKind::code),
            "order": order,
            "coefficients": coeffs,
        })),
    })
}

fn ideal_cap(force: bool) -> Result<usize, Failure> {
    if force {
        return Ok(usize::MAX);
    }
    match std::env::var(MAX_CELLS_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Failure::Usage(format!("{MAX_CELLS_VAR}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_IDEAL_CAP),
    }
}

pub fn young(partition: &str, full: bool, brute: bool, force: bool) -> Outcome {
    let lambda = Partition::parse(partition)?;
    let edges = if brute {
        young_edges_bruteforce(&lambda, ideal_cap(force)?)?
    } else {
        young_edges(&lambda)
    };
    if !full {
        return Ok(format!("{edges}\n"));
    }
    let corners: Vec<[u64; 2]> = corner_cells(&lambda)
        .iter()
        .map(|c| [c.i as u64, c.j as u64])
        .collect();
    Ok(pretty(&json!({
        "partition": lambda.parts(),
        "ideal_size": ideal_size(&lambda).to_string(),
        "edges": edges.to_string(),
        "corner_cells": corners,
    })))
}

pub fn index(kind: ClassKind, n: usize, asymptotic: bool) -> Outcome {
    let value = hasse_index_exact(kind, n)?;
    let report = classification_report(kind)?;
    let mut out = format!("{value} ({})\n", report.category);
    if asymptotic {
        let _ = writeln!(out, "form: i({kind}_n) {}", report.index_form);
        let _ = writeln!(
            out,
            "slope: {} = {:.6} (c = {:.6})",
            report.slope_form, report.slope, report.c
        );
        let _ = writeln!(
            out,
            "tamed: {} (partner {})",
            if report.tamed { "yes" } else { "no" },
            kind.partner()
        );
        if let Ok(a) = asymptotic_report(Quantity::Edges(kind), n) {
            let _ = writeln!(
                out,
                "edges: exact {}, estimate {:.6e}, ratio {:.6}",
                a.exact, a.estimate, a.ratio
            );
        }
    }
    Ok(out)
}

pub fn distribution(kind: ClassKind, n: usize, force: bool) -> Outcome {
    let caps = if force {
        Caps::unlimited()
    } else {
        Caps::default_for(kind)
    };
    let up = delta_polynomial_enum(kind, n, caps)?;
    let down = nabla_polynomial_enum(kind, n, caps)?;
    Ok(format!("Δ: {up}\n∇: {down}\n"))
}
