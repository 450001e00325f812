//! Rebuild a triangulation from nothing but its intersection matrix.

use trimatrix::catalog;
use trimatrix::intersection::intersection_matrix;
use trimatrix::reconstruct::reconstruct;

fn main() -> trimatrix::Result<()> {
    for (name, k) in catalog::corpus() {
        let m = intersection_matrix(&k);
        let r = reconstruct(&m)?;
        assert_eq!(intersection_matrix(&r.complex), m);
        println!(
            "{name:12} {:2} triangles  solutions={} isomorphic={} ambiguity={} nodes={}",
            m.len(),
            r.solution_count,
            r.all_solutions_isomorphic,
            r.ambiguity,
            r.nodes
        );
    }
    Ok(())
}
