//! Brute-force oracles shared by the integration tests. Nothing here goes
//! through intersection matrices or the library's bijection search.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use trimatrix::{Triangle, Triangulation};

/// Vertex sets of a complex as sorted integer triples plus the label table.
pub fn integer_faces(k: &Triangulation) -> (Vec<String>, Vec<[usize; 3]>) {
    let labels: Vec<String> = k.vertices().iter().map(|v| v.to_string()).collect();
    let index: BTreeMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let faces = k
        .triangles()
        .iter()
        .map(|t| {
            let mut f = t.vertices().clone().map(|v| index[v.as_str()]);
            f.sort_unstable();
            f
        })
        .collect();
    (labels, faces)
}

/// Every vertex bijection `h: V(k) -> V(k2)` carrying the triangle set of
/// `k` onto that of `k2`, as the induced triangle permutation
/// (`perm[i] = index in k2 of h(s_i)`).
pub fn induced_triangle_maps(k: &Triangulation, k2: &Triangulation) -> BTreeSet<Vec<usize>> {
    let (labels, faces) = integer_faces(k);
    let (labels2, faces2) = integer_faces(k2);
    let mut out = BTreeSet::new();
    if labels.len() != labels2.len() || faces.len() != faces2.len() {
        return out;
    }
    let target: BTreeMap<[usize; 3], usize> =
        faces2.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let n = labels.len();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        v: usize,
        perm: &mut [usize],
        used: &mut [bool],
        faces: &[[usize; 3]],
        target: &BTreeMap<[usize; 3], usize>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let n = perm.len();
        if v == n {
            let induced = faces
                .iter()
                .map(|f| {
                    let mut g = f.map(|u| perm[u]);
                    g.sort_unstable();
                    target[&g]
                })
                .collect();
            out.insert(induced);
            return;
        }
        for w in 0..n {
            if used[w] {
                continue;
            }
            perm[v] = w;
            let ok = faces.iter().filter(|f| f[2] == v).all(|f| {
                let mut g = f.map(|u| perm[u]);
                g.sort_unstable();
                target.contains_key(&g)
            });
            if ok {
                used[w] = true;
                go(v + 1, perm, used, faces, target, out);
                used[w] = false;
            }
        }
        perm[v] = usize::MAX;
    }
    go(0, &mut perm, &mut used, &faces, &target, &mut out);
    out
}

pub fn isomorphic(k: &Triangulation, k2: &Triangulation) -> bool {
    !induced_triangle_maps(k, k2).is_empty()
}

/// Orientability by trying every sign assignment with the first triangle
/// fixed. Only for small closed surfaces.
pub fn orientable_brute_force(k: &Triangulation) -> bool {
    let (_, faces) = integer_faces(k);
    let n = faces.len();
    assert!(n <= 20, "brute force is exponential");
    let directed = |f: &[usize; 3], sign: bool| -> [(usize, usize); 3] {
        let [a, b, c] = *f;
        if sign {
            [(a, b), (b, c), (c, a)]
        } else {
            [(b, a), (c, b), (a, c)]
        }
    };
    (0..(1u32 << (n - 1))).any(|mask| {
        let mut seen = BTreeSet::new();
        faces.iter().enumerate().all(|(i, f)| {
            let sign = i == 0 || mask & (1 << (i - 1)) != 0;
            directed(f, sign).into_iter().all(|e| seen.insert(e))
        })
    })
}

pub fn triangles(sets: &[[&str; 3]]) -> Vec<Triangle> {
    sets.iter()
        .map(|[a, b, c]| Triangle::from_labels(a, b, c).unwrap())
        .collect()
}

/// TP10 vertex sets written out by hand, in s0..s4, r0..r4 order.
pub const TP10_SETS: [[&str; 3]; 10] = [
    ["a0", "a1", "x"],
    ["a1", "a2", "x"],
    ["a2", "a3", "x"],
    ["a3", "a4", "x"],
    ["a4", "a0", "x"],
    ["a0", "a1", "a3"],
    ["a1", "a2", "a4"],
    ["a2", "a3", "a0"],
    ["a3", "a4", "a1"],
    ["a4", "a0", "a2"],
];

/// TP12 vertex sets written out by hand, in s0..s5, r0..r5 order.
pub const TP12_SETS: [[&str; 3]; 12] = [
    ["a0", "a1", "x"],
    ["a1", "a2", "x"],
    ["a2", "a3", "x"],
    ["a3", "a4", "x"],
    ["a4", "a5", "x"],
    ["a5", "a0", "x"],
    ["a0", "a1", "a4"],
    ["a1", "a2", "a4"],
    ["a2", "a3", "a0"],
    ["a3", "a4", "a0"],
    ["a4", "a5", "a2"],
    ["a5", "a0", "a2"],
];
