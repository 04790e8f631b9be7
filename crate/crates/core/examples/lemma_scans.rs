//! Every region lemma on a 50×50 grid per symmetry order.
//!
//! ```text
//! cargo run --release --example lemma_scans -- 50
//! ```

use qisop::families::{lemma_scan, LemmaId, ScanReport};

pub fn run(grid: usize) -> qisop::Result<Vec<ScanReport>> {
    let mut out = Vec::new();
    for id in LemmaId::all() {
        let r = lemma_scan(id, grid)?;
        println!(
            "{:<9} N {:>2}..{:<2} {:>6} pts  worst {:>12.4e}  {}",
            r.lemma_id,
            r.n_range.0,
            r.n_range.1,
            r.evaluated,
            r.worst_margin.unwrap_or(f64::NAN),
            if r.pass { "PASS" } else { "FAIL" }
        );
        out.push(r);
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    let grid = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(50);
    run(grid).map(|_| ())
}
