//! Corpus-level checks: each [`Check`] runs one property over the catalog
//! and reports pass/fail with a short detail line. Used by the
//! `verify-corpus` and `verify-lemma` subcommands and by the acceptance
//! test target.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::complex::{validate_closed_surface, Triangulation, VertexLabel};
use crate::cycles::{enumerate_realizations, CycleClass, EnumeratedRealization, PatchShape};
use crate::error::Result;
use crate::intersection::{
    extend_unchecked, find_intersection_preserving_bijections, find_simplicial_isomorphism,
    intersection_matrix, IntersectionMatrix, TriangleBijection,
};
use crate::reconstruct::{detect_exceptional, reconstruct, Ambiguity};

/// Seed for the randomized checks; fixed so reports are reproducible.
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_7a1a;

/// Outcome of one corpus property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] #{} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

fn timed(
    id: u8,
    name: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce() -> (bool, String),
) -> Check {
    let start = Instant::now();
    let (mut passed, mut detail) = body();
    let elapsed = start.elapsed();
    if let Some(limit) = budget {
        if elapsed > limit {
            passed = false;
            detail.push_str(&format!("; took {elapsed:?}, limit {limit:?}"));
        }
    }
    Check {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

/// Counts simplicial automorphisms by searching vertex permutations that map
/// triangles to triangles. Independent of intersection matrices.
pub fn simplicial_automorphism_count(k: &Triangulation) -> usize {
    let vertices: Vec<VertexLabel> = k.vertices().into_iter().collect();
    let index: BTreeMap<&VertexLabel, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let tris: Vec<[usize; 3]> = k
        .triangles()
        .iter()
        .map(|t| t.vertices().clone().map(|v| index[&v]))
        .collect();
    let faces: BTreeSet<[usize; 3]> = tris.iter().copied().collect();
    // triangles whose largest vertex is v, checked once v is mapped
    let mut closing: Vec<Vec<[usize; 3]>> = vec![Vec::new(); vertices.len()];
    for t in &tris {
        closing[t[2]].push(*t);
    }

    fn go(
        v: usize,
        image: &mut Vec<usize>,
        used: &mut [bool],
        closing: &[Vec<[usize; 3]>],
        faces: &BTreeSet<[usize; 3]>,
    ) -> usize {
        if v == used.len() {
            return 1;
        }
        let mut count = 0;
        for w in 0..used.len() {
            if used[w] {
                continue;
            }
            image.push(w);
            let ok = closing[v].iter().all(|t| {
                let mut mapped = t.map(|u| image[u]);
                mapped.sort_unstable();
                faces.contains(&mapped)
            });
            if ok {
                used[w] = true;
                count += go(v + 1, image, used, closing, faces);
                used[w] = false;
            }
            image.pop();
        }
        count
    }

    let mut used = vec![false; vertices.len()];
    go(0, &mut Vec::new(), &mut used, &closing, &faces)
}

/// Self-bijections of `M_K` split into (extendable, non-extendable).
pub fn self_map_census(k: &Triangulation) -> (usize, usize) {
    let m = intersection_matrix(k);
    let maps = find_intersection_preserving_bijections(&m, &m, None);
    let extendable = maps
        .iter()
        .filter(|f| extend_unchecked(k, k, f).is_extended())
        .count();
    (extendable, maps.len() - extendable)
}

/// #1: vertex/edge/triangle counts and topology of TP10 and TP12.
pub fn catalog_soundness() -> Check {
    timed(1, "catalog soundness", Some(Duration::from_secs(1)), || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (name, k, want) in [
            ("tp10", catalog::tp10(), (6, 15, 10)),
            ("tp12", catalog::tp12(), (7, 18, 12)),
        ] {
            let report = validate_closed_surface(&k);
            let counts = (k.vertices().len(), k.edges().len(), k.len());
            let good = counts == want
                && report.is_closed_surface()
                && report.euler_characteristic == 1
                && report.orientable == Some(false);
            ok &= good;
            parts.push(format!(
                "{name} (V,E,F)={counts:?} chi={} orientable={:?}",
                report.euler_characteristic, report.orientable
            ));
        }
        (ok, parts.join("; "))
    })
}

/// Oracle summary for one cycle length.
#[derive(Debug, Clone)]
pub struct LemmaRow {
    pub n: usize,
    pub realizations: Vec<EnumeratedRealization>,
    /// Every realization is one of the expected classes for `n`, and every
    /// expected class occurs.
    pub trichotomy_holds: bool,
    /// Template classifier and topological reading agree on every realization.
    pub classifier_agrees: bool,
}

impl LemmaRow {
    pub fn class_names(&self) -> Vec<String> {
        self.realizations
            .iter()
            .map(|r| match &r.class {
                Ok(c) => c.to_string(),
                Err(_) => "UNCLASSIFIED".to_string(),
            })
            .collect()
    }
}

/// Classes the three-type trichotomy allows for an n-cycle.
pub fn expected_classes(n: usize) -> BTreeSet<CycleClass> {
    let mut set = BTreeSet::from([CycleClass::Disk(n)]);
    match n {
        5 => {
            set.insert(CycleClass::Moebius5);
        }
        6 => {
            set.insert(CycleClass::Moebius6);
        }
        _ => {}
    }
    set
}

pub fn lemma_row(n: usize) -> Result<LemmaRow> {
    let realizations = enumerate_realizations(n)?;
    let found: std::result::Result<BTreeSet<CycleClass>, ()> = realizations
        .iter()
        .map(|r| r.class.clone().map_err(|_| ()))
        .collect();
    let trichotomy_holds = found.is_ok_and(|set| set == expected_classes(n));
    let classifier_agrees = realizations.iter().all(|r| {
        matches!(
            (&r.class, r.shape),
            (Ok(CycleClass::Disk(_)), PatchShape::Disk)
                | (
                    Ok(CycleClass::Moebius5 | CycleClass::Moebius6),
                    PatchShape::MoebiusBand
                )
                | (Err(_), PatchShape::Other)
        )
    });
    Ok(LemmaRow {
        n,
        realizations,
        trichotomy_holds,
        classifier_agrees,
    })
}

/// One row per `n` in `3..=max_n`.
pub fn lemma_table(max_n: usize) -> Result<Vec<LemmaRow>> {
    (3..=max_n).map(lemma_row).collect()
}

/// Tab-separated oracle table, one line per realization plus a `#` summary
/// line per `n`. Representatives are `.tri` lines joined by ` | `.
pub fn render_lemma_table(rows: &[LemmaRow]) -> String {
    let mut out = String::from("n\tclass\tshape\tvertices\trepresentative\n");
    for row in rows {
        for r in &row.realizations {
            let class = match &r.class {
                Ok(c) => c.to_string(),
                Err(_) => "UNCLASSIFIED".to_string(),
            };
            let rep: Vec<String> = r
                .realization
                .triangles()
                .iter()
                .map(|t| t.to_string())
                .collect();
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                row.n,
                class,
                r.shape,
                r.vertex_count,
                rep.join(" | ")
            ));
        }
        out.push_str(&format!(
            "# n={} trichotomy={} classifier_agrees={}\n",
            row.n,
            if row.trichotomy_holds {
                "holds"
            } else {
                "FAILS"
            },
            row.classifier_agrees
        ));
    }
    out
}

/// #2: exhaustive n-cycle realizations fall into exactly the three types.
pub fn lemma_trichotomy(max_n: usize) -> Check {
    timed(
        2,
        "link trichotomy",
        Some(Duration::from_secs(300)),
        || match lemma_table(max_n) {
            Ok(rows) => {
                let ok = rows
                    .iter()
                    .all(|r| r.trichotomy_holds && r.classifier_agrees);
                let parts: Vec<String> = rows
                    .iter()
                    .map(|r| format!("n={} {{{}}}", r.n, r.class_names().join(",")))
                    .collect();
                (ok, parts.join("; "))
            }
            Err(e) => (false, e.to_string()),
        },
    )
}

/// #3: reconstruction from the matrix returns an isomorphic complex.
pub fn matrix_round_trip() -> Check {
    timed(
        3,
        "matrix round trip",
        Some(Duration::from_secs(300)),
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for (name, k) in catalog::corpus() {
                let m = intersection_matrix(&k);
                match reconstruct(&m) {
                    Ok(r) => {
                        let iso = find_simplicial_isomorphism(&k, &r.complex).is_some();
                        let same_matrix = intersection_matrix(&r.complex) == m;
                        ok &= iso && same_matrix && r.all_solutions_isomorphic;
                        parts.push(format!(
                            "{name}: iso={iso} solutions={} all_isomorphic={}",
                            r.solution_count, r.all_solutions_isomorphic
                        ));
                    }
                    Err(e) => {
                        ok = false;
                        parts.push(format!("{name}: {e}"));
                    }
                }
            }
            (ok, parts.join("; "))
        },
    )
}

/// #4: extendable self-maps of the Platonic corpus match the automorphism
/// groups counted independently.
pub fn extension_counts() -> Check {
    timed(4, "extension counts", None, || {
        let mut ok = true;
        let mut parts = Vec::new();
        for (name, k, want) in [
            ("tetrahedron", catalog::tetrahedron(), 24),
            ("octahedron", catalog::octahedron(), 48),
            ("icosahedron", catalog::icosahedron(), 120),
        ] {
            let (extendable, non) = self_map_census(&k);
            let automorphisms = simplicial_automorphism_count(&k);
            let good = extendable == automorphisms && automorphisms == want && non == 0;
            ok &= good;
            parts.push(format!(
                "{name}: preserving={} extendable={extendable} automorphisms={automorphisms}",
                extendable + non
            ));
        }
        (ok, parts.join("; "))
    })
}

/// #5: non-extendable self-maps exist for TP10 and TP12 and nowhere else.
pub fn non_extension_witnesses() -> Check {
    timed(
        5,
        "non-extension witnesses",
        Some(Duration::from_secs(300)),
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for (name, k) in catalog::corpus() {
                let (extendable, non) = self_map_census(&k);
                let exceptional = matches!(name, "tp10" | "tp12");
                ok &= (non > 0) == exceptional;
                parts.push(format!("{name}: {extendable}+{non}"));
            }
            (
                ok,
                format!("extendable+non-extendable: {}", parts.join(", ")),
            )
        },
    )
}

fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> TriangleBijection {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    TriangleBijection::new(p).expect("shuffle is a permutation")
}

/// #6: TP10/TP12 detected on canonical and 20 shuffled matrices each, and
/// nothing else flagged.
pub fn exceptional_detection(seed: u64) -> Check {
    timed(6, "exceptional detection", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ok = true;
        let mut parts = Vec::new();
        for (name, k) in catalog::corpus() {
            let m = intersection_matrix(&k);
            let want = match name {
                "tp10" => Ambiguity::Tp10,
                "tp12" => Ambiguity::Tp12,
                _ => Ambiguity::None,
            };
            let mut hits = usize::from(detect_exceptional(&m) == want);
            let mut total = 1;
            if want != Ambiguity::None {
                for _ in 0..20 {
                    let p = random_permutation(m.len(), &mut rng);
                    let shuffled = m.permuted(&p).expect("sizes agree");
                    hits += usize::from(detect_exceptional(&shuffled) == want);
                    total += 1;
                }
            }
            ok &= hits == total;
            parts.push(format!("{name}->{want} {hits}/{total}"));
        }
        (ok, parts.join(", "))
    })
}

fn surface_shape_ok(m: &IntersectionMatrix) -> bool {
    m.is_symmetric() && m.has_unit_diagonal() && (0..m.len()).all(|i| m.count_in_row(i, 1) == 3)
}

/// #7: matrix invariants on the corpus and on 100 random reorderings, with
/// the reconstruction class unchanged by reordering.
pub fn matrix_invariants(seed: u64) -> Check {
    timed(7, "matrix invariants", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let corpus = catalog::corpus();
        let mut ok = true;
        let mut failures = Vec::new();
        let mut baseline = Vec::new();
        for (name, k) in &corpus {
            let m = intersection_matrix(k);
            if !surface_shape_ok(&m) {
                ok = false;
                failures.push(format!("{name}: shape"));
            }
            baseline.push(reconstruct(&m).ok());
        }
        const TRIALS: usize = 100;
        for trial in 0..TRIALS {
            let pick = trial % corpus.len();
            let (name, k) = &corpus[pick];
            let order = random_permutation(k.len(), &mut rng);
            let shuffled = k.reordered(order.images()).expect("same triangles");
            let m = intersection_matrix(&shuffled);
            let shape = surface_shape_ok(&m);
            let same_class = match (&baseline[pick], reconstruct(&m)) {
                (Some(base), Ok(r)) => {
                    r.ambiguity == base.ambiguity
                        && find_simplicial_isomorphism(&base.complex, &r.complex).is_some()
                }
                _ => false,
            };
            if !(shape && same_class) {
                ok = false;
                failures.push(format!(
                    "trial {trial} ({name}): shape={shape} class={same_class}"
                ));
            }
        }
        let detail = if failures.is_empty() {
            format!("{} corpus matrices + {TRIALS} reorderings", corpus.len())
        } else {
            failures.join("; ")
        };
        (ok, detail)
    })
}

/// Runs every corpus check in order.
pub fn run_corpus(max_n: usize, seed: u64) -> Vec<Check> {
    vec![
        catalog_soundness(),
        lemma_trichotomy(max_n),
        matrix_round_trip(),
        extension_counts(),
        non_extension_witnesses(),
        exceptional_detection(seed),
        matrix_invariants(seed),
    ]
}
