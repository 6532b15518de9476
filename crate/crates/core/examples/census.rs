//! Census of characteristic matrices over connected sums of 3-simplices.
//!
//!     cargo run --release --example census -- 3 2 1

use std::time::Instant;

use torus_genus::exactalg::fmt_rational;
use torus_genus::theorems::finiteness_census;

fn main() -> torus_genus::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k, bound) = match args[..] {
        [n, k, b] => (n, k, b as i64),
        _ => (3, 2, 1),
    };
    let start = Instant::now();
    let r = finiteness_census(n, k, bound)?;
    println!("n={n} k={k} bound={bound}: {} matrices, {} of connected-sum type", r.total, r.matched);
    for beta in &r.betas {
        let shown: Vec<String> = beta.iter().map(fmt_rational).collect();
        println!("  β = ({})", shown.join(", "));
    }
    println!("violations: {}  ({:.2?})", r.violations.len(), start.elapsed());
    Ok(())
}
