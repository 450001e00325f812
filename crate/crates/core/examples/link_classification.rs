//! Classify vertex stars and other cyclic triangle chains.

use trimatrix::catalog;
use trimatrix::complex::vertex_star;
use trimatrix::cycles::classify_realization;
use trimatrix::VertexLabel;

fn main() -> trimatrix::Result<()> {
    let k = catalog::icosahedron();
    for v in k.vertices().iter().take(3) {
        let star: Vec<_> = vertex_star(&k, v)?
            .into_iter()
            .map(|i| k.triangles()[i].clone())
            .collect();
        println!(
            "star of {v} in icosahedron: {}",
            classify_realization(&star)?
        );
    }

    // The five "r" triangles of TP10 close up into a band, not a disk.
    let tp10 = catalog::tp10();
    let band: Vec<_> = [5, 7, 9, 6, 8]
        .iter()
        .map(|&i| tp10.triangles()[i].clone())
        .collect();
    println!("r0 r2 r4 r1 r3 in tp10: {}", classify_realization(&band)?);

    let x = VertexLabel::new("x")?;
    let star: Vec<_> = vertex_star(&tp10, &x)?
        .into_iter()
        .map(|i| tp10.triangles()[i].clone())
        .collect();
    println!("star of x in tp10: {}", classify_realization(&star)?);

    // Three triangles on a common edge satisfy the 3-cycle pattern but are
    // neither a disk nor a band.
    let book = trimatrix::Triangulation::from_triples(&[
        ["p", "q", "a"],
        ["p", "q", "b"],
        ["p", "q", "c"],
    ]);
    match classify_realization(book.triangles()) {
        Ok(c) => println!("book: {c}"),
        Err(e) => println!("book: {e}"),
    }
    Ok(())
}
