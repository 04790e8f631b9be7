//! The best stadium, with the optimal ball pinned at its center, then checked
//! against a free search for the ball.

use qisop::families::{stadium_construct, stadium_optimize, StadiumConfig};
use qisop::fraenkel::{functional, SearchConfig};

pub fn run() -> qisop::Result<(f64, f64, f64)> {
    let (r, value) = stadium_optimize(&StadiumConfig::default())?;
    let free = functional(&stadium_construct(r)?, &SearchConfig::default())?;
    println!("cap radius r = {r:.6}");
    println!("F (pinned)   = {value:.6}");
    println!("F (searched) = {:.6}", free.value);
    Ok((r, value, free.value))
}

#[allow(dead_code)]
fn main() -> qisop::Result<()> {
    run().map(|_| ())
}
