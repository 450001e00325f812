//! n-cycle intersection patterns and their realizations.
//!
//! An n-cycle pattern asks for `n` triangles where cyclically consecutive
//! triangles share an edge and every other pair shares exactly one vertex.
//! The triangles around a vertex of a closed surface realize it as a fan.
//! Two more realizations exist, both Möbius bands: one on five triangles and
//! one on six. [`classify_realization`] recognises the three shapes by
//! template matching and [`enumerate_realizations`] searches exhaustively
//! for every realization up to relabeling and dihedral symmetry.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{analyze_patch, Triangle, Triangulation};
use crate::error::{Error, Result};
use crate::intersection::{triangles_matrix, IntersectionMatrix};

/// Largest cycle length accepted by the exhaustive oracle.
pub const MAX_ORACLE_N: usize = 8;

/// The three possible shapes of an n-cycle realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CycleClass {
    /// Fan of `n` triangles around a common vertex.
    Disk(usize),
    /// Five-triangle Möbius band.
    Moebius5,
    /// Six-triangle Möbius band.
    Moebius6,
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Disk(n) => write!(f, "Disk({n})"),
            Self::Moebius5 => f.write_str("Moebius5"),
            Self::Moebius6 => f.write_str("Moebius6"),
        }
    }
}

/// Expected entry `(i, j)` of the n-cycle pattern.
fn pattern_entry(n: usize, i: usize, j: usize) -> i8 {
    if i == j {
        2
    } else if (i + 1) % n == j || (j + 1) % n == i {
        1
    } else {
        0
    }
}

/// The n-cycle pattern matrix, wraparound pair included.
pub fn ncycle_matrix(n: usize) -> Result<IntersectionMatrix> {
    if n < 3 {
        return Err(Error::CycleLength(n, "n >= 3"));
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| pattern_entry(n, i, j)).collect())
        .collect();
    IntersectionMatrix::from_rows(rows)
}

/// Triangles realizing an n-cycle pattern, in cycle order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleRealization {
    triangles: Vec<Triangle>,
}

impl CycleRealization {
    pub fn new(triangles: Vec<Triangle>) -> Result<Self> {
        let n = triangles.len();
        if n < 3 || triangles_matrix(&triangles) != ncycle_matrix(n)? {
            return Err(Error::NotACycleRealization(n));
        }
        Ok(Self { triangles })
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn to_triangulation(&self) -> Triangulation {
        Triangulation::new(self.triangles.clone()).expect("cycle triangles are distinct")
    }
}

// Templates on abstract vertices 0.., in cycle order.

fn disk_template(n: usize) -> Vec<[usize; 3]> {
    (0..n).map(|i| [i, (i + 1) % n, n]).collect()
}

const MOEBIUS5: [[usize; 3]; 5] = [[0, 2, 1], [1, 3, 2], [2, 4, 3], [3, 0, 4], [4, 1, 0]];

const MOEBIUS6: [[usize; 3]; 6] = [
    [0, 1, 2],
    [1, 2, 4],
    [2, 3, 4],
    [3, 0, 4],
    [0, 5, 4],
    [5, 2, 0],
];

/// Index sequence of dihedral symmetry `d` (`0..2n`) applied to `0..n`.
fn dihedral(n: usize, d: usize) -> impl Iterator<Item = usize> {
    (0..n).map(move |i| {
        if d < n {
            (i + d) % n
        } else {
            (d - n + n - i) % n
        }
    })
}

/// Whether some vertex bijection carries `tris[order[i]]` onto
/// `template[i]` for every `i`, for some dihedral `order`.
fn matches_template(tris: &[[usize; 3]], vertex_count: usize, template: &[[usize; 3]]) -> bool {
    let n = tris.len();
    if template.len() != n {
        return false;
    }
    let template_vertices = template.iter().flatten().collect::<BTreeSet<_>>().len();
    if template_vertices != vertex_count {
        return false;
    }
    (0..2 * n).any(|d| {
        let ordered: Vec<[usize; 3]> = dihedral(n, d).map(|i| tris[i]).collect();
        let mut fwd = vec![usize::MAX; vertex_count];
        let mut bwd = vec![usize::MAX; template_vertices];
        match_from(&ordered, template, 0, &mut fwd, &mut bwd)
    })
}

fn match_from(
    tris: &[[usize; 3]],
    template: &[[usize; 3]],
    pos: usize,
    fwd: &mut [usize],
    bwd: &mut [usize],
) -> bool {
    if pos == tris.len() {
        return true;
    }
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let src = tris[pos];
    let dst = template[pos];
    for perm in PERMS {
        let mut assigned = Vec::new();
        let mut ok = true;
        for k in 0..3 {
            let (u, w) = (src[k], dst[perm[k]]);
            if fwd[u] == usize::MAX && bwd[w] == usize::MAX {
                fwd[u] = w;
                bwd[w] = u;
                assigned.push(u);
            } else if fwd[u] != w {
                ok = false;
                break;
            }
        }
        if ok && match_from(tris, template, pos + 1, fwd, bwd) {
            return true;
        }
        for u in assigned {
            bwd[fwd[u]] = usize::MAX;
            fwd[u] = usize::MAX;
        }
    }
    false
}

/// Integer form of a triangle list with vertices numbered by label order.
fn to_indices(triangles: &[Triangle]) -> (Vec<[usize; 3]>, usize) {
    let labels: Vec<_> = triangles
        .iter()
        .flat_map(|t| t.vertices().iter())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let tris = triangles
        .iter()
        .map(|t| {
            let [a, b, c] = t.vertices();
            let ix = |v| labels.binary_search(&v).expect("label present");
            [ix(a), ix(b), ix(c)]
        })
        .collect();
    (tris, labels.len())
}

/// Which of the three link shapes a cycle realization has.
///
/// Fails if the triangles do not realize the n-cycle pattern, and fails
/// loudly if they realize it by some fourth shape.
pub fn classify_realization(triangles: &[Triangle]) -> Result<CycleClass> {
    let n = triangles.len();
    CycleRealization::new(triangles.to_vec())?;
    let (tris, vertex_count) = to_indices(triangles);

    let has_common_vertex = (0..vertex_count).any(|v| tris.iter().all(|t| t.contains(&v)));
    if has_common_vertex && matches_template(&tris, vertex_count, &disk_template(n)) {
        return Ok(CycleClass::Disk(n));
    }
    if n == 5 && matches_template(&tris, vertex_count, &MOEBIUS5) {
        return Ok(CycleClass::Moebius5);
    }
    if n == 6 && matches_template(&tris, vertex_count, &MOEBIUS6) {
        return Ok(CycleClass::Moebius6);
    }
    let listing: Vec<String> = triangles.iter().map(|t| format!("{{{t}}}")).collect();
    Err(Error::UnclassifiedRealization(listing.join(", ")))
}

/// Topological shape of a realization, computed without any template.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatchShape {
    /// Orientable manifold disk with one interior vertex.
    Disk,
    /// Non-orientable manifold with Euler characteristic 0 and one boundary cycle.
    MoebiusBand,
    /// Anything else.
    Other,
}

impl fmt::Display for PatchShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::Disk => "disk",
            Self::MoebiusBand => "moebius band",
            Self::Other => "other",
        };
        f.write_str(s)
    }
}

pub fn patch_shape(triangles: &[Triangle]) -> PatchShape {
    let p = analyze_patch(triangles);
    let one_boundary = p.boundary_cycles.as_ref().is_some_and(|c| c.len() == 1);
    if !(p.manifold && p.connected && one_boundary) {
        return PatchShape::Other;
    }
    match (p.euler_characteristic, p.orientable) {
        (1, Some(true)) if p.interior_vertices == 1 => PatchShape::Disk,
        (0, Some(false)) => PatchShape::MoebiusBand,
        _ => PatchShape::Other,
    }
}

/// One realization found by the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumeratedRealization {
    /// Canonical representative on vertices `0..`.
    pub realization: CycleRealization,
    /// Template classification; `Err` marks a realization of none of the
    /// three shapes.
    pub class: std::result::Result<CycleClass, String>,
    /// Independent topological reading of the same triangles.
    pub shape: PatchShape,
    pub vertex_count: usize,
}

/// Every realization of the n-cycle pattern up to vertex relabeling and the
/// dihedral symmetries of the cycle, sorted by canonical encoding.
pub fn enumerate_realizations(n: usize) -> Result<Vec<EnumeratedRealization>> {
    if !(3..=MAX_ORACLE_N).contains(&n) {
        return Err(Error::CycleLength(n, "3 <= n <= 8"));
    }
    let mut raw = Vec::new();
    let mut current = vec![[0, 1, 2]];
    raw_search(n, &mut current, 3, &mut raw);

    let canon: BTreeSet<Vec<[usize; 3]>> = raw.iter().map(|r| canonical_form(r)).collect();
    Ok(canon
        .into_iter()
        .map(|tris| {
            let vertex_count = tris.iter().flatten().collect::<BTreeSet<_>>().len();
            let triangles: Vec<Triangle> = tris
                .iter()
                .map(|t| {
                    Triangle::from_labels(&t[0].to_string(), &t[1].to_string(), &t[2].to_string())
                        .expect("distinct vertices")
                })
                .collect();
            let class = classify_realization(&triangles).map_err(|e| e.to_string());
            let shape = patch_shape(&triangles);
            EnumeratedRealization {
                realization: CycleRealization::new(triangles)
                    .expect("search output realizes the pattern"),
                class,
                shape,
                vertex_count,
            }
        })
        .collect())
}

/// Backtracking over vertex sets. New vertices are introduced in increasing
/// order, so `used` is the number of labels taken so far.
fn raw_search(
    n: usize,
    current: &mut Vec<[usize; 3]>,
    used: usize,
    out: &mut Vec<Vec<[usize; 3]>>,
) {
    let i = current.len();
    if i == n {
        out.push(current.clone());
        return;
    }
    // choose k new vertices (labels used..used+k) and 3-k old ones
    for new in 0..=3usize {
        let old = 3 - new;
        for olds in combinations(used, old) {
            let mut t = [0; 3];
            t[..old].copy_from_slice(&olds);
            for k in 0..new {
                t[old + k] = used + k;
            }
            let ok = current.iter().enumerate().all(|(j, s)| {
                let shared = s.iter().filter(|v| t.contains(v)).count() as i8;
                shared - 1 == pattern_entry(n, i, j)
            });
            if ok {
                current.push(t);
                raw_search(n, current, used + new, out);
                current.pop();
            }
        }
    }
}

fn combinations(universe: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(
        start: usize,
        universe: usize,
        k: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for v in start..universe {
            acc.push(v);
            go(v + 1, universe, k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(0, universe, k, &mut Vec::new(), &mut out);
    out
}

/// Lexicographically smallest encoding (sequence of sorted triples) over all
/// dihedral reorderings and vertex relabelings.
///
/// Only first-occurrence labelings can be minimal, so it suffices to branch
/// over the order in which the new vertices of each triangle are numbered.
pub fn canonical_form(tris: &[[usize; 3]]) -> Vec<[usize; 3]> {
    let n = tris.len();
    let mut best: Option<Vec<[usize; 3]>> = None;
    for d in 0..2 * n {
        let ordered: Vec<[usize; 3]> = dihedral(n, d).map(|i| tris[i]).collect();
        let max_vertex = ordered.iter().flatten().copied().max().unwrap_or(0);
        let mut relabel = vec![usize::MAX; max_vertex + 1];
        let mut encoding = Vec::with_capacity(n);
        minimize(&ordered, &mut relabel, 0, &mut encoding, &mut best);
    }
    best.expect("non-empty cycle")
}

fn minimize(
    tris: &[[usize; 3]],
    relabel: &mut Vec<usize>,
    next: usize,
    encoding: &mut Vec<[usize; 3]>,
    best: &mut Option<Vec<[usize; 3]>>,
) {
    let pos = encoding.len();
    if let Some(b) = best.as_ref() {
        // prune once the prefix is already larger
        if encoding[..] > b[..pos] {
            return;
        }
    }
    if pos == tris.len() {
        if best.as_ref().is_none_or(|b| *encoding < *b) {
            *best = Some(encoding.clone());
        }
        return;
    }
    let fresh: Vec<usize> = tris[pos]
        .iter()
        .copied()
        .filter(|&v| relabel[v] == usize::MAX)
        .collect();
    for order in permutations(&fresh) {
        for (k, &v) in order.iter().enumerate() {
            relabel[v] = next + k;
        }
        let mut t = tris[pos].map(|v| relabel[v]);
        t.sort_unstable();
        encoding.push(t);
        minimize(tris, relabel, next + fresh.len(), encoding, best);
        encoding.pop();
        for &v in &order {
            relabel[v] = usize::MAX;
        }
    }
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}
