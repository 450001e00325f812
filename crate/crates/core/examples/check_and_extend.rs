//! Check a hand-written triangle bijection, then extend it to vertices.

use trimatrix::catalog;
use trimatrix::intersection::{extend_to_simplicial, is_intersection_preserving};
use trimatrix::{ExtensionResult, TriangleBijection};

fn main() -> trimatrix::Result<()> {
    let oct = catalog::octahedron();
    let reversed: Vec<usize> = (0..oct.len()).rev().collect();
    let shuffled = oct.reordered(&reversed)?;

    // reading triangle i of `oct` as triangle len-1-i of `shuffled`
    let f = TriangleBijection::parse("7 6 5 4 3 2 1 0")?;
    println!(
        "preserving: {}",
        is_intersection_preserving(&oct, &shuffled, &f)?
    );
    if let ExtensionResult::Extended(h) = extend_to_simplicial(&oct, &shuffled, &f)? {
        for (x, y) in &h {
            println!("  {x} -> {y}");
        }
    }

    let tp10 = catalog::tp10();
    let swap = TriangleBijection::parse("5 7 9 6 8 0 2 4 1 3")?;
    println!(
        "\ntp10 swap preserving: {}",
        is_intersection_preserving(&tp10, &tp10, &swap)?
    );
    println!(
        "tp10 swap extension: {:?}",
        extend_to_simplicial(&tp10, &tp10, &swap)?
    );

    let bad = TriangleBijection::parse("5 1 2 3 4 0 6 7 8 9")?;
    println!(
        "s0 <-> r0 preserving: {}",
        is_intersection_preserving(&tp10, &tp10, &bad)?
    );
    Ok(())
}
