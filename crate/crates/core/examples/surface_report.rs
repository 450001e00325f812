//! Parse `.tri` text and report its surface invariants.

use trimatrix::complex::validate_closed_surface;
use trimatrix::Triangulation;

const TORUS: &str = "\
# the seven-vertex torus
v0 v1 v3
v0 v2 v3
v1 v2 v4
v1 v3 v4
v2 v3 v5
v2 v4 v5
v3 v4 v6
v3 v5 v6
v4 v5 v0
v4 v6 v0
v5 v6 v1
v5 v0 v1
v6 v0 v2
v6 v1 v2
";

fn main() -> trimatrix::Result<()> {
    let k: Triangulation = TORUS.parse()?;
    let report = validate_closed_surface(&k);
    println!("closed surface: {}", report.is_closed_surface());
    println!(
        "V={} E={} F={}",
        k.vertices().len(),
        k.edges().len(),
        k.len()
    );
    println!("euler characteristic: {}", report.euler_characteristic);
    println!("orientable: {:?}", report.orientable);

    match Triangulation::parse("a b c\na b\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("bad input: {e}"),
    }
    Ok(())
}
