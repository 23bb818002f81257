//! Output rendering: text grids shaped like the published tables, long-form
//! CSV, and single-line JSON.

use ramsey_core::bounds::BestInterval;
use std::fmt::Write;

fn cell_text(cell: &BestInterval) -> String {
    if cell.interval.is_exact() {
        cell.interval.lower.to_string()
    } else {
        format!("[{}, {}]", cell.interval.lower, cell.interval.upper)
    }
}

/// Grid with rows m and columns n, cells right-aligned per column; exact
/// cells print the value, open cells print `[lo, hi]`.
pub fn table_text(cells: &[BestInterval]) -> String {
    let mut ms: Vec<usize> = cells.iter().map(|c| c.m).collect();
    ms.dedup();
    let mut ns: Vec<usize> = cells.iter().map(|c| c.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let family = cells[0].family;
    let rows: Vec<Vec<String>> = ms
        .iter()
        .map(|&m| {
            let mut row = vec![m.to_string()];
            for &n in &ns {
                let cell = cells
                    .iter()
                    .find(|c| c.m == m && c.n == n)
                    .expect("rectangular table");
                row.push(cell_text(cell));
            }
            row
        })
        .collect();
    let mut header = vec!["m \\ n".to_string()];
    header.extend(ns.iter().map(|n| n.to_string()));
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            rows.iter()
                .map(|r| r[i].len())
                .chain([header[i].len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut out = format!("family: {family} (r = 3)\n");
    for row in std::iter::once(&header).chain(rows.iter()) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

/// Long form, one row per cell, with goodness status and both provenance
/// tags.
pub fn table_csv(cells: &[BestInterval]) -> String {
    let mut out = String::from("family,m,n,lower,upper,status,lower_source,upper_source\n");
    for c in cells {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            c.family,
            c.m,
            c.n,
            c.interval.lower,
            c.interval.upper,
            c.status,
            c.interval.lower_src.source,
            c.interval.upper_src.source
        )
        .unwrap();
    }
    out
}

pub fn table_json(cells: &[BestInterval]) -> String {
    let mut out = serde_json::to_string(cells).expect("table cells serialize");
    out.push('\n');
    out
}

/// Full audit view of a single cell: interval, goodness verdict, the chosen
/// records, everything else considered, and the bounds that did not apply.
pub fn cell_detail(cell: &BestInterval) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{} of order {} vs K_{} (r = {})",
        cell.family, cell.m, cell.n, cell.r
    )
    .unwrap();
    let exactness = if cell.interval.is_exact() {
        "exact"
    } else {
        "open"
    };
    writeln!(
        out,
        "interval: [{}, {}] ({exactness})",
        cell.interval.lower, cell.interval.upper
    )
    .unwrap();
    writeln!(out, "goodness value {}: {}", cell.target, cell.status).unwrap();
    writeln!(
        out,
        "lower: {} = {} ({})",
        cell.interval.lower_src.source, cell.interval.lower_src.value, cell.interval.lower_src.conditions
    )
    .unwrap();
    writeln!(
        out,
        "upper: {} = {} ({})",
        cell.interval.upper_src.source, cell.interval.upper_src.value, cell.interval.upper_src.conditions
    )
    .unwrap();
    let chosen = [&cell.interval.lower_src, &cell.interval.upper_src];
    let rest: Vec<_> = cell
        .considered
        .iter()
        .filter(|b| !chosen.contains(b))
        .collect();
    if !rest.is_empty() {
        writeln!(out, "also considered:").unwrap();
        for b in rest {
            writeln!(out, "  {} {} = {} ({})", b.direction, b.source, b.value, b.conditions)
                .unwrap();
        }
    }
    if !cell.inapplicable.is_empty() {
        writeln!(out, "inapplicable:").unwrap();
        for i in &cell.inapplicable {
            writeln!(out, "  {}: {}", i.source, i.reason).unwrap();
        }
    }
    out
}
