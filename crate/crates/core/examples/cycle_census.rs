//! Enumerate every realization of the n-cycle pattern for small n.
//!
//! Usage: `cargo run --example cycle_census -- 6`

use trimatrix::cycles::{enumerate_realizations, MAX_ORACLE_N};

fn main() -> trimatrix::Result<()> {
    let max_n = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be an integer"))
        .unwrap_or(MAX_ORACLE_N);

    for n in 3..=max_n {
        let found = enumerate_realizations(n)?;
        println!("n = {n}: {} realization(s) up to relabeling", found.len());
        for r in &found {
            let class = match &r.class {
                Ok(c) => c.to_string(),
                Err(_) => "unclassified".to_string(),
            };
            let tris: Vec<String> = r
                .realization
                .triangles()
                .iter()
                .map(|t| t.to_string())
                .collect();
            println!(
                "  {class:12} {:?} {} vertices: {}",
                r.shape,
                r.vertex_count,
                tris.join(" | ")
            );
        }
    }
    Ok(())
}
