//! Intersection matrices and intersection-preserving triangle bijections.
//!
//! Entry `(i, j)` of the intersection matrix is the dimension of `s_i ∩ s_j`,
//! i.e. the number of shared vertices minus one, with the empty set at `-1`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::complex::{validate_closed_surface, Triangle, Triangulation, VertexLabel};
use crate::error::{Error, Result};

/// Dimension of the intersection of two triangles, in `{-1, 0, 1, 2}`.
pub fn intersection_dim(t1: &Triangle, t2: &Triangle) -> i8 {
    t1.shared_vertices(t2) as i8 - 1
}

/// Square matrix of pairwise intersection dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl IntersectionMatrix {
    /// Builds a matrix from rows; entries must lie in `{-1, 0, 1, 2}`.
    ///
    /// No symmetry requirement is imposed here, see [`Self::check_surface_shape`].
    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|e| !(-1..=2).contains(*e)) {
                return Err(Error::InvalidMatrix(format!("entry {bad} in row {i}")));
            }
            entries.extend(row);
        }
        Ok(Self { n, entries })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 2)
    }

    /// Number of entries equal to `value` in row `i`.
    pub fn count_in_row(&self, i: usize, value: i8) -> usize {
        self.row(i).iter().filter(|&&e| e == value).count()
    }

    /// Counts of `-1, 0, 1, 2` in row `i`.
    pub fn row_signature(&self, i: usize) -> [usize; 4] {
        let mut sig = [0; 4];
        for &e in self.row(i) {
            sig[(e + 1) as usize] += 1;
        }
        sig
    }

    /// Checks the necessary conditions for a closed-surface matrix:
    /// symmetric, diagonal 2, exactly three 1-entries per row.
    pub fn check_surface_shape(&self) -> Result<()> {
        if !self.is_symmetric() {
            return Err(Error::InvalidMatrix("not symmetric".into()));
        }
        if !self.has_unit_diagonal() {
            return Err(Error::InvalidMatrix("diagonal entries must be 2".into()));
        }
        if let Some(i) = (0..self.n).find(|&i| self.count_in_row(i, 1) != 3) {
            return Err(Error::InvalidMatrix(format!(
                "row {i} has {} edge-neighbours, expected 3",
                self.count_in_row(i, 1)
            )));
        }
        Ok(())
    }

    /// The matrix with rows and columns permuted: entry `(p[i], p[j])` of the
    /// result equals entry `(i, j)` of `self`.
    pub fn permuted(&self, f: &TriangleBijection) -> Result<Self> {
        if f.len() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: f.len(),
            });
        }
        let mut entries = vec![0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[f.apply(i) * self.n + f.apply(j)] = self.get(i, j);
            }
        }
        Ok(Self { n: self.n, entries })
    }

    /// Parses the `.imat` format: `n` on the first line, then `n` rows.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first_no, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing size line".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line: first_no,
            message: format!("expected matrix size, found {first:?}"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for (line_no, line) in lines {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i8>()
                        .ok()
                        .filter(|e| (-1..=2).contains(e))
                        .ok_or_else(|| Error::Parse {
                            line: line_no,
                            message: format!("entry {tok:?} is not in {{-1,0,1,2}}"),
                        })
                })
                .collect::<Result<Vec<i8>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: first_no,
                message: format!("declared {n} rows, found {}", rows.len()),
            });
        }
        Self::from_rows(rows)
    }

    pub fn to_imat_string(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl FromStr for IntersectionMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for IntersectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_imat_string())
    }
}

/// The intersection matrix of `k`, rows in triangle index order.
pub fn intersection_matrix(k: &Triangulation) -> IntersectionMatrix {
    triangles_matrix(k.triangles())
}

pub(crate) fn triangles_matrix(triangles: &[Triangle]) -> IntersectionMatrix {
    let n = triangles.len();
    let mut entries = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = intersection_dim(&triangles[i], &triangles[j]);
        }
    }
    IntersectionMatrix { n, entries }
}

/// A permutation of triangle indices, `i ↦ forward[i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangleBijection {
    forward: Vec<usize>,
}

impl TriangleBijection {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; forward.len()];
        for &img in &forward {
            if img >= forward.len() || std::mem::replace(&mut seen[img], true) {
                return Err(Error::InvalidBijection(format!(
                    "{forward:?} is not a permutation of 0..{}",
                    forward.len()
                )));
            }
        }
        Ok(Self { forward })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            forward: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.forward[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.forward.len()];
        for (i, &img) in self.forward.iter().enumerate() {
            inv[img] = i;
        }
        Self { forward: inv }
    }

    /// `other ∘ self`: first `self`, then `other`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Self {
            forward: self.forward.iter().map(|&i| other.forward[i]).collect(),
        })
    }

    /// Parses a single line of whitespace- or comma-separated image indices.
    pub fn parse(text: &str) -> Result<Self> {
        let content: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        if content.len() != 1 {
            return Err(Error::InvalidBijection(format!(
                "expected one line of indices, found {}",
                content.len()
            )));
        }
        let forward = content[0]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidBijection(format!("bad index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(forward)
    }
}

impl FromStr for TriangleBijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for TriangleBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.forward.iter().map(|i| i.to_string()).collect();
        f.write_str(&cells.join(" "))
    }
}

/// Whether `f` preserves every pairwise intersection dimension.
pub fn is_intersection_preserving(
    k: &Triangulation,
    k2: &Triangulation,
    f: &TriangleBijection,
) -> Result<bool> {
    if k.len() != k2.len() || f.len() != k.len() {
        return Err(Error::SizeMismatch {
            left: k.len(),
            right: k2.len().max(f.len()),
        });
    }
    Ok(preserves(
        &intersection_matrix(k),
        &intersection_matrix(k2),
        f,
    ))
}

pub(crate) fn preserves(
    m: &IntersectionMatrix,
    m2: &IntersectionMatrix,
    f: &TriangleBijection,
) -> bool {
    let n = m.len();
    (0..n).all(|i| (0..n).all(|j| m.get(i, j) == m2.get(f.apply(i), f.apply(j))))
}

/// All bijections `g` with `m2[g(i), g(j)] = m[i, j]`, in lexicographic order
/// of their image sequences, truncated to `limit` when given.
pub fn find_intersection_preserving_bijections(
    m: &IntersectionMatrix,
    m2: &IntersectionMatrix,
    limit: Option<usize>,
) -> Vec<TriangleBijection> {
    let mut out = Vec::new();
    if m.len() != m2.len() || limit == Some(0) {
        return out;
    }
    let n = m.len();
    let sig: Vec<[usize; 4]> = (0..n).map(|i| m.row_signature(i)).collect();
    let sig2: Vec<[usize; 4]> = (0..n).map(|i| m2.row_signature(i)).collect();
    // candidate images per row, ascending
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&c| sig2[c] == sig[i]).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return out;
    }
    let mut search = BijectionSearch {
        m,
        m2,
        candidates,
        image: Vec::with_capacity(n),
        used: vec![false; n],
        limit,
        out: &mut out,
    };
    search.extend();
    out
}

struct BijectionSearch<'a> {
    m: &'a IntersectionMatrix,
    m2: &'a IntersectionMatrix,
    candidates: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    limit: Option<usize>,
    out: &'a mut Vec<TriangleBijection>,
}

impl BijectionSearch<'_> {
    /// Returns false once the limit is reached.
    fn extend(&mut self) -> bool {
        let i = self.image.len();
        if i == self.m.len() {
            self.out.push(TriangleBijection {
                forward: self.image.clone(),
            });
            return self.limit.is_none_or(|l| self.out.len() < l);
        }
        for k in 0..self.candidates[i].len() {
            let c = self.candidates[i][k];
            if self.used[c] {
                continue;
            }
            let consistent = self
                .image
                .iter()
                .enumerate()
                .all(|(j, &cj)| self.m2.get(c, cj) == self.m.get(i, j));
            if !consistent {
                continue;
            }
            self.used[c] = true;
            self.image.push(c);
            let more = self.extend();
            self.image.pop();
            self.used[c] = false;
            if !more {
                return false;
            }
        }
        true
    }
}

/// Outcome of trying to induce a triangle map from a vertex map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionResult {
    Extended(BTreeMap<VertexLabel, VertexLabel>),
    NonExtendable(VertexLabel),
}

impl ExtensionResult {
    pub fn is_extended(&self) -> bool {
        matches!(self, Self::Extended(_))
    }
}

/// Tries to extend an intersection-preserving `f` to a simplicial isomorphism.
///
/// Each vertex `x` is sent to the common vertex of the images of the
/// triangles around it. The first vertex (by label order) for which that
/// intersection is not a single vertex, or which breaks bijectivity or the
/// triangle correspondence, is returned as the witness.
pub fn extend_to_simplicial(
    k: &Triangulation,
    k2: &Triangulation,
    f: &TriangleBijection,
) -> Result<ExtensionResult> {
    if !is_intersection_preserving(k, k2, f)? {
        return Err(Error::NotIntersectionPreserving);
    }
    for (which, complex) in [("source", k), ("target", k2)] {
        if !validate_closed_surface(complex).is_closed_surface() {
            return Err(Error::NotClosedSurface(format!(
                "{which} complex is not a connected closed surface"
            )));
        }
    }
    Ok(extend_unchecked(k, k2, f))
}

/// The extension step without the precondition checks.
pub(crate) fn extend_unchecked(
    k: &Triangulation,
    k2: &Triangulation,
    f: &TriangleBijection,
) -> ExtensionResult {
    let mut map = BTreeMap::new();
    for x in k.vertices() {
        let mut common: Option<Vec<VertexLabel>> = None;
        for t in k.triangles_at(&x) {
            let img = k2.triangles()[f.apply(t)].vertices();
            common = Some(match common {
                None => img.to_vec(),
                Some(c) => c.into_iter().filter(|v| img.contains(v)).collect(),
            });
        }
        match common.as_deref() {
            Some([single]) => {
                map.insert(x, single.clone());
            }
            _ => return ExtensionResult::NonExtendable(x),
        }
    }
    // injectivity: report the lowest label that collides with another
    let mut preimages: BTreeMap<&VertexLabel, Vec<&VertexLabel>> = BTreeMap::new();
    for (x, y) in &map {
        preimages.entry(y).or_default().push(x);
    }
    if let Some(x) = map.keys().find(|x| preimages[&map[*x]].len() > 1) {
        return ExtensionResult::NonExtendable(x.clone());
    }
    if map.len() != k2.vertices().len() {
        let first = map.keys().next().cloned().expect("non-empty complex");
        return ExtensionResult::NonExtendable(first);
    }
    for (i, t) in k.triangles().iter().enumerate() {
        let image = k2.triangles()[f.apply(i)].vertices();
        if let Some(bad) = t.vertices().iter().find(|v| !image.contains(&map[*v])) {
            return ExtensionResult::NonExtendable(bad.clone());
        }
    }
    ExtensionResult::Extended(map)
}

/// An intersection-preserving bijection from `k` to `k2` that extends to a
/// simplicial isomorphism, if one exists. The first such bijection in
/// lexicographic order is returned.
pub fn find_simplicial_isomorphism(
    k: &Triangulation,
    k2: &Triangulation,
) -> Option<TriangleBijection> {
    if k.len() != k2.len() || k.vertices().len() != k2.vertices().len() {
        return None;
    }
    find_intersection_preserving_bijections(&intersection_matrix(k), &intersection_matrix(k2), None)
        .into_iter()
        .find(|f| extend_unchecked(k, k2, f).is_extended())
}
