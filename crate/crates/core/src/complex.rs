//! Abstract simplicial 2-complexes given by their triangles.
//!
//! A [`Triangulation`] is an ordered list of distinct [`Triangle`]s. The order
//! is part of its identity: triangle `i` is row `i` of the intersection
//! matrix. Vertices and edges are never stored on their own, they exist only
//! as faces of triangles.
//!
//! The `.tri` text format has one triangle per line as three
//! whitespace-separated labels. `#` starts a comment, blank lines are
//! skipped, and the triangle index is the order of occurrence.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Opaque vertex identifier: a non-empty token without whitespace or `#`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(Error::InvalidLabel(label));
        }
        Ok(Self(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

/// A 2-simplex: three distinct vertices kept in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    vertices: [VertexLabel; 3],
}

impl Triangle {
    pub fn new(a: VertexLabel, b: VertexLabel, c: VertexLabel) -> Result<Self> {
        let mut vertices = [a, b, c];
        vertices.sort();
        if vertices[0] == vertices[1] || vertices[1] == vertices[2] {
            return Err(Error::BadTriangle(format!(
                "{} {} {}",
                vertices[0], vertices[1], vertices[2]
            )));
        }
        Ok(Self { vertices })
    }

    /// Builds a triangle from three label tokens.
    pub fn from_labels(a: &str, b: &str, c: &str) -> Result<Self> {
        Self::new(a.parse()?, b.parse()?, c.parse()?)
    }

    pub fn vertices(&self) -> &[VertexLabel; 3] {
        &self.vertices
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.vertices.contains(v)
    }

    /// Number of vertices shared with `other`.
    pub fn shared_vertices(&self, other: &Triangle) -> usize {
        self.vertices.iter().filter(|v| other.contains(v)).count()
    }

    /// The three edges, each as a sorted pair.
    pub fn edges(&self) -> [(VertexLabel, VertexLabel); 3] {
        let [a, b, c] = &self.vertices;
        [
            (a.clone(), b.clone()),
            (a.clone(), c.clone()),
            (b.clone(), c.clone()),
        ]
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.vertices;
        write!(f, "{a} {b} {c}")
    }
}

/// A finite pure 2-complex with an indexed list of triangles.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triangulation {
    triangles: Vec<Triangle>,
}

impl Triangulation {
    pub fn new(triangles: Vec<Triangle>) -> Result<Self> {
        if triangles.is_empty() {
            return Err(Error::EmptyTriangulation);
        }
        let mut seen = HashSet::with_capacity(triangles.len());
        for t in &triangles {
            if !seen.insert(t) {
                return Err(Error::DuplicateTriangle(t.to_string()));
            }
        }
        Ok(Self { triangles })
    }

    /// Convenience constructor from label triples; panics on malformed input.
    ///
    /// Intended for fixed fixtures such as the catalog entries.
    pub fn from_triples<S: AsRef<str>>(triples: &[[S; 3]]) -> Self {
        let triangles = triples
            .iter()
            .map(|[a, b, c]| Triangle::from_labels(a.as_ref(), b.as_ref(), c.as_ref()))
            .collect::<Result<Vec<_>>>()
            .expect("malformed triangle triple");
        Self::new(triangles).expect("malformed triangulation")
    }

    /// Parses the `.tri` format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut triangles = Vec::new();
        let mut first_line: HashMap<Triangle, usize> = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            if tokens.len() != 3 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected 3 vertex labels, found {}", tokens.len()),
                });
            }
            let triangle =
                Triangle::from_labels(tokens[0], tokens[1], tokens[2]).map_err(|e| match e {
                    Error::BadTriangle(_) => Error::Parse {
                        line: line_no,
                        message: format!("repeated vertex in {:?}", content.trim()),
                    },
                    other => Error::Parse {
                        line: line_no,
                        message: other.to_string(),
                    },
                })?;
            if let Some(prev) = first_line.get(&triangle) {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("duplicate triangle {triangle} (first seen on line {prev})"),
                });
            }
            first_line.insert(triangle.clone(), line_no);
            triangles.push(triangle);
        }
        Self::new(triangles)
    }

    /// Serializes to the `.tri` format, one sorted triangle per line.
    pub fn to_tri_string(&self) -> String {
        let mut out = String::new();
        for t in &self.triangles {
            out.push_str(&t.to_string());
            out.push('\n');
        }
        out
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

    pub fn vertices(&self) -> BTreeSet<VertexLabel> {
        self.triangles
            .iter()
            .flat_map(|t| t.vertices().iter().cloned())
            .collect()
    }

    pub fn edges(&self) -> BTreeSet<(VertexLabel, VertexLabel)> {
        self.triangles.iter().flat_map(|t| t.edges()).collect()
    }

    /// Indices of the triangles containing `v`, ascending.
    pub fn triangles_at(&self, v: &VertexLabel) -> Vec<usize> {
        (0..self.triangles.len())
            .filter(|&i| self.triangles[i].contains(v))
            .collect()
    }

    /// Reorders triangles so that new index `k` holds old triangle `order[k]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::SizeMismatch {
                left: order.len(),
                right: self.len(),
            });
        }
        Self::new(order.iter().map(|&i| self.triangles[i].clone()).collect())
    }

    /// Applies a vertex renaming; labels missing from `map` are kept.
    pub fn relabeled(&self, map: &BTreeMap<VertexLabel, VertexLabel>) -> Result<Self> {
        let rename = |v: &VertexLabel| map.get(v).cloned().unwrap_or_else(|| v.clone());
        let triangles = self
            .triangles
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                Triangle::new(rename(a), rename(b), rename(c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(triangles)
    }
}

impl FromStr for Triangulation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tri_string())
    }
}

/// Integer-indexed copy of a triangle list, used by the combinatorial routines.
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub labels: Vec<VertexLabel>,
    pub tris: Vec<[usize; 3]>,
}

impl Indexed {
    pub fn from_triangles(triangles: &[Triangle]) -> Self {
        let labels: Vec<VertexLabel> = triangles
            .iter()
            .flat_map(|t| t.vertices().iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: HashMap<&VertexLabel, usize> =
            labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
        let tris = triangles
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                [index[a], index[b], index[c]]
            })
            .collect();
        Self { labels, tris }
    }

    /// Map from sorted edge to the triangles containing it.
    pub fn edge_triangles(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (ti, t) in self.tris.iter().enumerate() {
            for (u, w) in tri_edges(t) {
                map.entry((u, w)).or_default().push(ti);
            }
        }
        map
    }
}

/// Sorted edges of a sorted triple.
fn tri_edges(t: &[usize; 3]) -> [(usize, usize); 3] {
    [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
}

/// Direction (+1/-1) in which the edge `(u, w)`, `u < w`, is traversed by the
/// positive orientation `t[0] -> t[1] -> t[2] -> t[0]` of a sorted triple.
fn edge_direction(t: &[usize; 3], u: usize, w: usize) -> i8 {
    if (u, w) == (t[0], t[2]) {
        -1
    } else {
        1
    }
}

/// Shape of a vertex link: the graph of edges opposite the vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LinkShape {
    Cycle,
    Path,
    Other,
}

fn link_shape(ix: &Indexed, v: usize) -> LinkShape {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in ix.tris.iter().filter(|t| t.contains(&v)) {
        let rest: Vec<usize> = t.iter().copied().filter(|&u| u != v).collect();
        adj.entry(rest[0]).or_default().push(rest[1]);
        adj.entry(rest[1]).or_default().push(rest[0]);
    }
    let Some(&start) = adj.keys().next() else {
        return LinkShape::Other;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != adj.len() {
        return LinkShape::Other;
    }
    let ones = adj.values().filter(|n| n.len() == 1).count();
    let twos = adj.values().filter(|n| n.len() == 2).count();
    if twos == adj.len() {
        LinkShape::Cycle
    } else if ones == 2 && ones + twos == adj.len() {
        LinkShape::Path
    } else {
        LinkShape::Other
    }
}

fn connected_components(ix: &Indexed) -> usize {
    let mut parent: Vec<usize> = (0..ix.labels.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for t in &ix.tris {
        for k in 1..3 {
            let (a, b) = (find(&mut parent, t[0]), find(&mut parent, t[k]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    (0..ix.labels.len())
        .filter(|&x| find(&mut parent, x) == x)
        .count()
}

/// Propagates triangle orientations across edges shared by exactly two
/// triangles. Returns false on a conflict.
fn orient(ix: &Indexed) -> bool {
    let edges = ix.edge_triangles();
    let mut sign = vec![0i8; ix.tris.len()];
    for root in 0..ix.tris.len() {
        if sign[root] != 0 {
            continue;
        }
        sign[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for (u, w) in tri_edges(&ix.tris[t]) {
                let owners = &edges[&(u, w)];
                if owners.len() != 2 {
                    continue;
                }
                let other = if owners[0] == t { owners[1] } else { owners[0] };
                let want = -sign[t]
                    * edge_direction(&ix.tris[t], u, w)
                    * edge_direction(&ix.tris[other], u, w);
                if sign[other] == 0 {
                    sign[other] = want;
                    queue.push_back(other);
                } else if sign[other] != want {
                    return false;
                }
            }
        }
    }
    true
}

/// Topological summary of a closed-surface candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceReport {
    pub connected: bool,
    /// Every edge lies in exactly two triangles.
    pub closed: bool,
    /// Every vertex star is a single cycle.
    pub links_ok: bool,
    pub euler_characteristic: i64,
    /// Defined only for connected closed surfaces.
    pub orientable: Option<bool>,
    pub per_vertex_degree: BTreeMap<VertexLabel, usize>,
}

impl SurfaceReport {
    pub fn is_closed_surface(&self) -> bool {
        self.connected && self.closed && self.links_ok
    }
}

/// Reports whether `k` is a connected closed surface, without failing.
pub fn validate_closed_surface(k: &Triangulation) -> SurfaceReport {
    let ix = Indexed::from_triangles(k.triangles());
    let edges = ix.edge_triangles();
    let connected = connected_components(&ix) == 1;
    let closed = edges.values().all(|owners| owners.len() == 2);
    let links_ok = (0..ix.labels.len()).all(|v| link_shape(&ix, v) == LinkShape::Cycle);
    let euler_characteristic = ix.labels.len() as i64 - edges.len() as i64 + ix.tris.len() as i64;
    let orientable = (connected && closed && links_ok).then(|| orient(&ix));
    let mut per_vertex_degree = BTreeMap::new();
    for t in k.triangles() {
        for v in t.vertices() {
            *per_vertex_degree.entry(v.clone()).or_insert(0) += 1;
        }
    }
    SurfaceReport {
        connected,
        closed,
        links_ok,
        euler_characteristic,
        orientable,
        per_vertex_degree,
    }
}

/// `|V| - |E| + |F|`.
pub fn euler_characteristic(k: &Triangulation) -> i64 {
    k.vertices().len() as i64 - k.edges().len() as i64 + k.len() as i64
}

/// Orientability of a connected closed surface.
pub fn orientability(k: &Triangulation) -> Result<bool> {
    validate_closed_surface(k)
        .orientable
        .ok_or_else(|| Error::NotClosedSurface("orientability needs a closed surface".into()))
}

/// Triangles around `v`, in cyclic order.
///
/// The walk starts at the lowest triangle index and moves first towards the
/// lower-indexed of its two neighbours, so the output is deterministic.
pub fn vertex_star(k: &Triangulation, v: &VertexLabel) -> Result<Vec<usize>> {
    let star = k.triangles_at(v);
    if star.is_empty() {
        return Err(Error::VertexAbsent(v.to_string()));
    }
    let not_cycle = || Error::StarNotCycle(v.to_string());
    // neighbours of each star triangle across the two edges through v
    let mut next: HashMap<usize, Vec<usize>> = HashMap::new();
    for &t in &star {
        let mut nbrs = Vec::with_capacity(2);
        for u in k.triangles()[t].vertices().iter().filter(|u| *u != v) {
            let across: Vec<usize> = star
                .iter()
                .copied()
                .filter(|&s| s != t && k.triangles()[s].contains(u))
                .collect();
            if across.len() != 1 {
                return Err(not_cycle());
            }
            nbrs.push(across[0]);
        }
        if nbrs[0] == nbrs[1] && star.len() != 2 {
            return Err(not_cycle());
        }
        next.insert(t, nbrs);
    }
    let start = star[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = *next[&start].iter().min().expect("two neighbours");
    while cur != start {
        if order.len() > star.len() {
            return Err(not_cycle());
        }
        order.push(cur);
        let n = &next[&cur];
        let step = if n[0] == prev { n[1] } else { n[0] };
        prev = cur;
        cur = step;
    }
    if order.len() != star.len() {
        return Err(not_cycle());
    }
    Ok(order)
}

/// Topology of an arbitrary triangle patch, possibly with boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchReport {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub triangle_count: usize,
    pub euler_characteristic: i64,
    /// Every edge in at most two triangles and every link a path or a cycle.
    pub manifold: bool,
    pub boundary_edges: usize,
    /// Lengths of the boundary cycles, sorted; `None` if the boundary edges
    /// do not split into disjoint cycles.
    pub boundary_cycles: Option<Vec<usize>>,
    pub interior_vertices: usize,
    /// Defined for manifolds only.
    pub orientable: Option<bool>,
    pub connected: bool,
}

/// Computes a [`PatchReport`] for a list of distinct triangles.
pub fn analyze_patch(triangles: &[Triangle]) -> PatchReport {
    let ix = Indexed::from_triangles(triangles);
    let edges = ix.edge_triangles();
    let shapes: Vec<LinkShape> = (0..ix.labels.len()).map(|v| link_shape(&ix, v)).collect();
    let manifold =
        edges.values().all(|o| o.len() <= 2) && shapes.iter().all(|s| *s != LinkShape::Other);
    let boundary: Vec<(usize, usize)> = edges
        .iter()
        .filter(|(_, o)| o.len() == 1)
        .map(|(e, _)| *e)
        .collect();
    PatchReport {
        vertex_count: ix.labels.len(),
        edge_count: edges.len(),
        triangle_count: ix.tris.len(),
        euler_characteristic: ix.labels.len() as i64 - edges.len() as i64 + ix.tris.len() as i64,
        manifold,
        boundary_edges: boundary.len(),
        boundary_cycles: cycle_lengths(&boundary),
        interior_vertices: shapes.iter().filter(|s| **s == LinkShape::Cycle).count(),
        orientable: manifold.then(|| orient(&ix)),
        connected: connected_components(&ix) == 1,
    }
}

fn cycle_lengths(edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, w) in edges {
        adj.entry(u).or_default().push(w);
        adj.entry(w).or_default().push(u);
    }
    if adj.values().any(|n| n.len() != 2) {
        return None;
    }
    let mut seen = BTreeSet::new();
    let mut lengths = Vec::new();
    for &start in adj.keys() {
        if !seen.insert(start) {
            continue;
        }
        let mut len = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[&u] {
                if seen.insert(w) {
                    len += 1;
                    stack.push(w);
                }
            }
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Some(lengths)
}
