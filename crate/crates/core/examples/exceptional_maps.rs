//! Intersection preserving self-maps that do not come from any vertex map.

use trimatrix::catalog;
use trimatrix::intersection::{
    extend_to_simplicial, find_intersection_preserving_bijections, intersection_matrix,
};
use trimatrix::ExtensionResult;

fn main() -> trimatrix::Result<()> {
    for (name, k) in catalog::corpus() {
        let m = intersection_matrix(&k);
        let maps = find_intersection_preserving_bijections(&m, &m, None);
        let mut witness = None;
        let mut extendable = 0;
        for f in &maps {
            match extend_to_simplicial(&k, &k, f)? {
                ExtensionResult::Extended(_) => extendable += 1,
                ExtensionResult::NonExtendable(v) => {
                    witness.get_or_insert((f.clone(), v));
                }
            }
        }
        print!(
            "{name:12} preserving={:4} extendable={:4}",
            maps.len(),
            extendable
        );
        match witness {
            Some((f, v)) => println!("  e.g. [{f}] fails at {v}"),
            None => println!(),
        }
    }
    Ok(())
}
