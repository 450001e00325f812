//! Build the intersection matrix of a small closed surface and print it.

use trimatrix::catalog;
use trimatrix::intersection::intersection_matrix;

fn main() {
    let k = catalog::tp10();
    println!("{} triangles on {} vertices", k.len(), k.vertices().len());
    for (i, t) in k.triangles().iter().enumerate() {
        println!("  s{i}: {t}");
    }

    let m = intersection_matrix(&k);
    println!("\n{}", m.to_imat_string());
    m.check_surface_shape()
        .expect("closed surface matrices have three 1s per row");
}
