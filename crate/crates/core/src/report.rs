//! Rendering of index reports and per-`n` tables as text, JSON and CSV.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::generator_graph::GeneratorGraph;
use crate::graph_core::diameter;
use crate::metric_dim::metric_dimension_formula;
use crate::numeric::format_sig;
use crate::topo_indices::{index_report_for, IndexReport};

/// Significant digits for every float written to CSV or text.
pub const FLOAT_DIGITS: usize = 12;

pub const INDEX_CSV_HEADER: [&str; 7] = [
    "n",
    "s",
    "index",
    "brute_force",
    "formula",
    "abs_difference",
    "agrees",
];

pub const TABLE_CSV_HEADER: [&str; 10] = [
    "n",
    "phi",
    "edges",
    "diameter",
    "wiener",
    "gutman",
    "harmonic",
    "randic",
    "sombor",
    "metric_dimension",
];

fn fmt(x: f64) -> String {
    format_sig(x, FLOAT_DIGITS)
}

pub fn index_report_json(r: &IndexReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes") + "\n"
}

pub fn index_report_csv(reports: &[IndexReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(INDEX_CSV_HEADER).expect("in-memory write");
    for r in reports {
        for row in r.rows() {
            w.write_record([
                r.n.to_string(),
                r.s.to_string(),
                row.name.to_string(),
                fmt(row.brute_force),
                fmt(row.formula),
                fmt(row.abs_difference),
                row.agrees.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn index_report_text(r: &IndexReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "Generator graph of Z_{} (n = {}, |S| = {})",
        r.n, r.n, r.s
    )
    .unwrap();
    writeln!(
        out,
        "{:<16}{:>20}{:>20}{:>16}  agrees",
        "index", "brute force", "formula", "|diff|"
    )
    .unwrap();
    for row in r.rows() {
        let verdict = match (row.agrees, row.name) {
            (true, _) => "yes",
            (false, "harmonic_paper") => "no (informational)",
            (false, _) => "NO",
        };
        writeln!(
            out,
            "{:<16}{:>20}{:>20}{:>16}  {}",
            row.name,
            fmt(row.brute_force),
            fmt(row.formula),
            fmt(row.abs_difference),
            verdict
        )
        .unwrap();
    }
    if !r.harmonic.paper_agrees {
        writeln!(
            out,
            "note: published Harmonic closed form exceeds the edge sum by {} = (n-s)(n-s-1)/(2s)",
            fmt(r.harmonic.paper_difference)
        )
        .unwrap();
    }
    out
}

/// Brute-force summary of Γ(Z_n) for tabulation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: u64,
    pub phi: u64,
    pub edges: usize,
    pub diameter: u32,
    pub wiener: u64,
    pub gutman: u64,
    pub harmonic: f64,
    pub randic: f64,
    pub sombor: f64,
    pub metric_dimension: u64,
}

pub fn table_row(n: u64) -> Result<TableRow> {
    let gg = GeneratorGraph::new(n)?;
    let r = index_report_for(&gg)?;
    Ok(TableRow {
        n,
        phi: gg.generator_count(),
        edges: gg.graph().edge_count(),
        diameter: diameter(gg.graph())
            .value()
            .expect("generator graphs are connected"),
        wiener: r.wiener.brute_force,
        gutman: r.gutman.brute_force,
        harmonic: r.harmonic.brute_force,
        randic: r.randic.brute_force,
        sombor: r.sombor.brute_force,
        metric_dimension: metric_dimension_formula(n)?,
    })
}

/// Rows for `from..=to`, computed in parallel and returned in ascending `n`.
pub fn table_rows(from: u64, to: u64) -> Result<Vec<TableRow>> {
    (from..=to).into_par_iter().map(table_row).collect()
}

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(TABLE_CSV_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.phi.to_string(),
            r.edges.to_string(),
            r.diameter.to_string(),
            r.wiener.to_string(),
            r.gutman.to_string(),
            fmt(r.harmonic),
            fmt(r.randic),
            fmt(r.sombor),
            r.metric_dimension.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn table_json(rows: &[TableRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize") + "\n"
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>5} {:>5} {:>7} {:>4} {:>10} {:>14} {:>14} {:>14} {:>16} {:>5}",
        "n", "phi", "edges", "diam", "wiener", "gutman", "harmonic", "randic", "sombor", "mdim"
    )
    .unwrap();
    for r in rows {
        writeln!(
            out,
            "{:>5} {:>5} {:>7} {:>4} {:>10} {:>14} {:>14} {:>14} {:>16} {:>5}",
            r.n,
            r.phi,
            r.edges,
            r.diameter,
            r.wiener,
            r.gutman,
            format_sig(r.harmonic, 9),
            format_sig(r.randic, 9),
            format_sig(r.sombor, 11),
            r.metric_dimension
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topo_indices::compute_index_report;

    #[test]
    fn table_rows_for_small_n() {
        let rows = table_rows(2, 10).unwrap();
        assert_eq!(rows.len(), 9);
        let r6 = &rows[4];
        assert_eq!(
            (r6.n, r6.phi, r6.edges, r6.diameter, r6.metric_dimension),
            (6, 2, 9, 2, 4)
        );
        let r7 = &rows[5];
        assert_eq!(
            (r7.n, r7.phi, r7.edges, r7.diameter, r7.metric_dimension),
            (7, 6, 21, 1, 6)
        );
        let csv = table_csv(&rows);
        assert_eq!(csv.lines().count(), 10);
        assert!(csv.starts_with(
            "n,phi,edges,diameter,wiener,gutman,harmonic,randic,sombor,metric_dimension\n"
        ));
        assert!(csv.contains("\n6,2,9,2,"));
    }

    #[test]
    fn index_csv_has_six_rows_per_n() {
        let r = compute_index_report(4).unwrap();
        let csv = index_report_csv(&[r]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 7);
        assert_eq!(
            lines[0],
            "n,s,index,brute_force,formula,abs_difference,agrees"
        );
        assert_eq!(lines[1], "4,2,wiener,7,7,0,true");
        assert_eq!(
            lines[4],
            "4,2,harmonic_paper,1.93333333333,2.43333333333,0.5,false"
        );
    }

    #[test]
    fn text_flags_harmonic_gap() {
        let text = index_report_text(&compute_index_report(4).unwrap());
        assert!(text.contains("no (informational)"));
        assert!(text.contains("by 0.5"));
        let text = index_report_text(&compute_index_report(5).unwrap());
        assert!(!text.contains("informational"));
    }
}
