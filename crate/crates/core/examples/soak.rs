//! Random shapes from several generators; the smallest quotient found.
//!
//! ```text
//! cargo run --release --example soak -- 1000 42
//! ```

use qisop::families::{soak_random, SoakReport};

pub fn run(n: usize, seed: u64) -> qisop::Result<SoakReport> {
    let r = soak_random(n, seed)?;
    println!("samples   {} (near-ball {})", r.count, r.near_ball);
    if let Some(m) = &r.min_sample {
        println!("min F     {:.7} from {:?} #{}", m.value, m.kind, m.index);
    }
    println!("anomalies {}", r.failures.len());
    Ok(r)
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    run(n, seed).map(|_| ())
}
