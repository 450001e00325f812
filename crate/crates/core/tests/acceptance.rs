//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test -p trimatrix --test acceptance`.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use trimatrix::catalog;
use trimatrix::complex::{analyze_patch, validate_closed_surface};
use trimatrix::cycles::{classify_realization, enumerate_realizations, CycleClass, PatchShape};
use trimatrix::intersection::{
    extend_to_simplicial, find_intersection_preserving_bijections, intersection_matrix,
    TriangleBijection,
};
use trimatrix::reconstruct::{detect_exceptional, reconstruct, Ambiguity};
use trimatrix::Triangulation;

use common::{
    induced_triangle_maps, isomorphic, orientable_brute_force, triangles, TP10_SETS, TP12_SETS,
};

const SEED: u64 = 20_261_016;

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> (bool, String),
}

/// TP10 (V,E,F)=(6,15,10), TP12 (7,18,12), both chi=1 and non-orientable.
fn catalog_soundness() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, built, sets, want) in [
        (
            "tp10",
            catalog::tp10(),
            &TP10_SETS[..],
            (6usize, 15usize, 10usize),
        ),
        ("tp12", catalog::tp12(), &TP12_SETS[..], (7, 18, 12)),
    ] {
        let by_hand = Triangulation::new(triangles(sets)).unwrap();
        let v: BTreeSet<&str> = sets.iter().flatten().copied().collect();
        let e: BTreeSet<(&str, &str)> = sets
            .iter()
            .flat_map(|t| {
                let mut s = *t;
                s.sort();
                [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])]
            })
            .collect();
        let counts = (v.len(), e.len(), sets.len());
        let chi = v.len() as i64 - e.len() as i64 + sets.len() as i64;
        let report = validate_closed_surface(&built);
        let good = built == by_hand
            && counts == want
            && chi == 1
            && report.is_closed_surface()
            && report.euler_characteristic == 1
            && report.orientable == Some(false)
            && !orientable_brute_force(&built);
        ok &= good;
        parts.push(format!(
            "{name} (V,E,F)={counts:?} chi={chi} non-orientable={}",
            !orientable_brute_force(&built)
        ));
    }
    (ok, parts.join("; "))
}

/// Exhaustive n-cycle realizations for n = 3..8 give exactly
/// {Disk} for n in {3,4,7,8}, {Disk, Moebius5} for 5, {Disk, Moebius6} for 6,
/// and the classifier agrees with a topological reading on every one.
fn lemma_trichotomy() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 3..=8 {
        let found = enumerate_realizations(n).unwrap();
        let mut want = BTreeSet::from([CycleClass::Disk(n)]);
        if n == 5 {
            want.insert(CycleClass::Moebius5);
        }
        if n == 6 {
            want.insert(CycleClass::Moebius6);
        }
        let mut classes = BTreeSet::new();
        let mut unclassified = 0;
        let mut disagreements = 0;
        for r in &found {
            let tris = r.realization.triangles();
            let patch = analyze_patch(tris);
            // topological reading, independent of the templates
            let topo = if patch.manifold
                && patch.boundary_cycles.as_deref() == Some(&[n][..])
                && patch.orientable == Some(true)
                && patch.vertex_count == n + 1
            {
                Some(CycleClass::Disk(n))
            } else if patch.manifold
                && patch.orientable == Some(false)
                && patch.euler_characteristic == 0
                && patch.boundary_cycles.as_deref() == Some(&[n][..])
                && patch.vertex_count == n
                && (n == 5 || n == 6)
            {
                Some(if n == 5 {
                    CycleClass::Moebius5
                } else {
                    CycleClass::Moebius6
                })
            } else {
                None
            };
            match classify_realization(tris) {
                Ok(c) => {
                    classes.insert(c);
                    disagreements += usize::from(topo != Some(c));
                }
                Err(_) => {
                    unclassified += 1;
                    disagreements += usize::from(topo.is_some() || r.shape != PatchShape::Other);
                }
            }
        }
        let good = unclassified == 0 && disagreements == 0 && classes == want;
        ok &= good;
        let names: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
        let extra = if unclassified > 0 {
            format!(" +{unclassified} unclassified")
        } else {
            String::new()
        };
        parts.push(format!("n={n} {{{}}}{extra}", names.join(",")));
    }
    (ok, parts.join("; "))
}

/// reconstruct(M_K) is isomorphic to K for every corpus member and all
/// solutions found are isomorphic.
fn matrix_round_trip() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, k) in catalog::corpus() {
        let m = intersection_matrix(&k);
        let r = reconstruct(&m).unwrap();
        let same_matrix = intersection_matrix(&r.complex) == m;
        let iso = isomorphic(&k, &r.complex);
        // the bijection relating K and the reconstruction must itself be
        // intersection preserving and extendable
        let extendable = induced_triangle_maps(&k, &r.complex).iter().any(|p| {
            let f = TriangleBijection::new(p.clone()).unwrap();
            extend_to_simplicial(&k, &r.complex, &f).is_ok_and(|e| e.is_extended())
        });
        let good = same_matrix && iso && extendable && r.all_solutions_isomorphic;
        ok &= good;
        parts.push(format!("{name}: iso={iso} solutions={}", r.solution_count));
    }
    (ok, parts.join("; "))
}

fn census(k: &Triangulation) -> (usize, usize, usize, bool) {
    let m = intersection_matrix(k);
    let maps = find_intersection_preserving_bijections(&m, &m, None);
    let induced = induced_triangle_maps(k, k);
    let mut extendable = 0;
    let mut consistent = true;
    for f in &maps {
        let extended = extend_to_simplicial(k, k, f).unwrap().is_extended();
        extendable += usize::from(extended);
        consistent &= extended == induced.contains(f.images());
    }
    (maps.len(), extendable, induced.len(), consistent)
}

/// Tetrahedron: all 24 preserving self-maps extend. Octahedron and
/// icosahedron: extendable count equals the automorphism count, 48 and 120.
fn extension_counts() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, k, want) in [
        ("tetrahedron", catalog::tetrahedron(), 24),
        ("octahedron", catalog::octahedron(), 48),
        ("icosahedron", catalog::icosahedron(), 120),
    ] {
        let (preserving, extendable, automorphisms, consistent) = census(&k);
        let good = consistent && extendable == automorphisms && automorphisms == want;
        let good = good && (name != "tetrahedron" || preserving == 24);
        ok &= good;
        parts.push(format!(
            "{name}: preserving={preserving} extendable={extendable} automorphisms={automorphisms}"
        ));
    }
    (ok, parts.join("; "))
}

/// Non-extendable preserving self-maps exist for TP10 and TP12 only.
fn non_extension_witnesses() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, k) in catalog::corpus() {
        let (preserving, extendable, _, consistent) = census(&k);
        let non = preserving - extendable;
        let exceptional = matches!(name, "tp10" | "tp12");
        ok &= consistent && (non > 0) == exceptional;
        parts.push(format!("{name}: {non} of {preserving} non-extendable"));
    }
    (ok, parts.join(", "))
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// TP10/TP12 detected on canonical matrices and 20 random row/column
/// permutations each; None for every other corpus matrix.
fn exceptional_detection() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = true;
    let mut parts = Vec::new();
    for (name, k) in catalog::corpus() {
        let want = match name {
            "tp10" => Ambiguity::Tp10,
            "tp12" => Ambiguity::Tp12,
            _ => Ambiguity::None,
        };
        let mut hits = usize::from(detect_exceptional(&intersection_matrix(&k)) == want);
        let mut total = 1;
        if want != Ambiguity::None {
            for _ in 0..20 {
                let order = shuffled(k.len(), &mut rng);
                let m = intersection_matrix(&k.reordered(&order).unwrap());
                hits += usize::from(detect_exceptional(&m) == want);
                total += 1;
            }
        }
        ok &= hits == total;
        parts.push(format!("{name} {hits}/{total}"));
    }
    (ok, parts.join(", "))
}

/// Symmetry, diagonal 2, three 1-entries per row on the corpus and on 100
/// random triangle relabelings; the reconstruction class is unchanged.
fn matrix_invariants() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let corpus = catalog::corpus();
    let baseline: Vec<Triangulation> = corpus
        .iter()
        .map(|(_, k)| reconstruct(&intersection_matrix(k)).unwrap().complex)
        .collect();
    let check = |k: &Triangulation| {
        let m = intersection_matrix(k);
        let n = m.len();
        (0..n).all(|i| {
            m.get(i, i) == 2
                && (0..n).all(|j| m.get(i, j) == m.get(j, i))
                && (0..n).filter(|&j| m.get(i, j) == 1).count() == 3
        })
    };
    let mut ok = corpus.iter().all(|(_, k)| check(k));
    let mut failures = Vec::new();
    for trial in 0..100 {
        let pick = trial % corpus.len();
        let (name, k) = &corpus[pick];
        let order = shuffled(k.len(), &mut rng);
        let relabeled = k.reordered(&order).unwrap();
        let r = reconstruct(&intersection_matrix(&relabeled)).unwrap();
        let good = check(&relabeled)
            && isomorphic(&r.complex, &baseline[pick])
            && r.ambiguity == detect_exceptional(&intersection_matrix(k));
        if !good {
            ok = false;
            failures.push(format!("trial {trial} ({name})"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{} corpus matrices + 100 relabelings", corpus.len())
    } else {
        failures.join(", ")
    };
    (ok, detail)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            name: "catalog soundness",
            budget: Some(Duration::from_secs(1)),
            run: catalog_soundness,
        },
        Criterion {
            id: 2,
            name: "n-cycle trichotomy, n=3..8",
            budget: Some(Duration::from_secs(300)),
            run: lemma_trichotomy,
        },
        Criterion {
            id: 3,
            name: "matrix round trip",
            budget: Some(Duration::from_secs(300)),
            run: matrix_round_trip,
        },
        Criterion {
            id: 4,
            name: "extension counts",
            budget: None,
            run: extension_counts,
        },
        Criterion {
            id: 5,
            name: "non-extension witnesses",
            budget: Some(Duration::from_secs(300)),
            run: non_extension_witnesses,
        },
        Criterion {
            id: 6,
            name: "exceptional detection",
            budget: None,
            run: exceptional_detection,
        },
        Criterion {
            id: 7,
            name: "matrix invariants",
            budget: None,
            run: matrix_invariants,
        },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let (mut passed, mut detail) = (c.run)();
        let elapsed = start.elapsed();
        if let Some(limit) = c.budget {
            if elapsed > limit {
                passed = false;
                detail.push_str(&format!(" (over time budget {limit:?})"));
            }
        }
        failed += usize::from(!passed);
        println!(
            "acceptance #{} {} ... {} [{elapsed:.2?}] {detail}",
            c.id,
            c.name,
            if passed { "PASS" } else { "FAIL" }
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
