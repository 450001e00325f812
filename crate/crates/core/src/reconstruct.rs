//! Rebuilding a closed-surface triangulation from its intersection matrix.
//!
//! Every triangle owns three vertex slots. A solution is a partition of the
//! slots into vertices such that triangles `i` and `j` share exactly
//! `M[i][j] + 1` vertices. The search places triangles one at a time in
//! breadth-first order over edge adjacency, choosing which earlier vertices
//! the new triangle reuses and how many fresh vertices it opens. Fresh
//! vertices are numbered in order of first use, so each partition is
//! visited once.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use crate::catalog;
use crate::complex::{validate_closed_surface, Triangle, Triangulation};
use crate::error::{Error, Result};
use crate::intersection::{
    extend_unchecked, find_intersection_preserving_bijections, intersection_matrix,
    IntersectionMatrix, TriangleBijection,
};

/// Default cap on search nodes.
pub const DEFAULT_NODE_LIMIT: u64 = 1_000_000;

/// Whether the matrix is one of the two whose complexes admit
/// intersection-preserving self-maps that are not simplicial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambiguity {
    None,
    Tp10,
    Tp12,
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::None => "None",
            Self::Tp10 => "TP10",
            Self::Tp12 => "TP12",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReconstructOptions {
    pub node_limit: u64,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        Self {
            node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionResult {
    /// First solution in search order, vertices labelled `v0, v1, ...`.
    pub complex: Triangulation,
    pub ambiguity: Ambiguity,
    /// Every solution found is simplicially isomorphic to `complex`.
    pub all_solutions_isomorphic: bool,
    /// Number of distinct vertex partitions that realize the matrix.
    pub solution_count: usize,
    /// Search nodes visited.
    pub nodes: u64,
}

/// Reconstructs with [`ReconstructOptions::default`].
pub fn reconstruct(m: &IntersectionMatrix) -> Result<ReconstructionResult> {
    reconstruct_with(m, ReconstructOptions::default())
}

pub fn reconstruct_with(
    m: &IntersectionMatrix,
    options: ReconstructOptions,
) -> Result<ReconstructionResult> {
    m.check_surface_shape()?;
    let mut search = SlotSearch::new(m, options.node_limit);
    search.run()?;
    let nodes = search.nodes;
    let solutions = search.solutions;
    let Some(first) = solutions.first() else {
        return Err(Error::NoSolution);
    };

    let mut all_solutions_isomorphic = true;
    if solutions.len() > 1 {
        let automorphisms = find_intersection_preserving_bijections(m, m, None);
        all_solutions_isomorphic = solutions[1..].iter().all(|other| {
            automorphisms
                .iter()
                .any(|g| extend_unchecked(first, other, g).is_extended())
        });
    }
    Ok(ReconstructionResult {
        complex: first.clone(),
        ambiguity: detect_exceptional(m),
        all_solutions_isomorphic,
        solution_count: solutions.len(),
        nodes,
    })
}

/// Breadth-first order over the `1`-entries, restarting at the lowest
/// unvisited index.
fn placement_order(m: &IntersectionMatrix) -> Vec<usize> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            order.push(i);
            for (j, entry) in m.row(i).iter().enumerate() {
                if *entry == 1 && !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    order
}

struct SlotSearch<'a> {
    m: &'a IntersectionMatrix,
    order: Vec<usize>,
    placed: Vec<Option<[usize; 3]>>,
    edge_use: HashMap<(usize, usize), u8>,
    node_limit: u64,
    nodes: u64,
    solutions: Vec<Triangulation>,
}

impl<'a> SlotSearch<'a> {
    fn new(m: &'a IntersectionMatrix, node_limit: u64) -> Self {
        Self {
            m,
            order: placement_order(m),
            placed: vec![None; m.len()],
            edge_use: HashMap::new(),
            node_limit,
            nodes: 0,
            solutions: Vec::new(),
        }
    }

    fn run(&mut self) -> Result<()> {
        self.step(0, 0)
    }

    fn step(&mut self, k: usize, used: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Error::BudgetExceeded(self.node_limit));
        }
        if k == self.order.len() {
            self.accept();
            return Ok(());
        }
        let t = self.order[k];
        // old vertices may only come from triangles that meet t
        let mut banned = vec![false; used];
        for (j, p) in self.placed.iter().enumerate() {
            if let Some(p) = p {
                if self.m.get(t, j) == -1 {
                    p.iter().for_each(|&v| banned[v] = true);
                }
            }
        }
        let pool: Vec<usize> = (0..used).filter(|&v| !banned[v]).collect();
        for fresh in 0..=3usize {
            for olds in subsets(&pool, 3 - fresh) {
                let mut tri = [0; 3];
                tri[..olds.len()].copy_from_slice(&olds);
                for f in 0..fresh {
                    tri[olds.len() + f] = used + f;
                }
                if !self.fits(t, &tri) {
                    continue;
                }
                self.place(t, tri);
                let result = self.step(k + 1, used + fresh);
                self.unplace(t, tri);
                result?;
            }
        }
        Ok(())
    }

    fn fits(&self, t: usize, tri: &[usize; 3]) -> bool {
        let meets_correctly = self.placed.iter().enumerate().all(|(j, p)| match p {
            Some(p) => {
                let shared = p.iter().filter(|v| tri.contains(v)).count() as i8;
                shared - 1 == self.m.get(t, j)
            }
            None => true,
        });
        meets_correctly
            && edges(tri)
                .iter()
                .all(|e| self.edge_use.get(e).copied().unwrap_or(0) < 2)
    }

    fn place(&mut self, t: usize, tri: [usize; 3]) {
        for e in edges(&tri) {
            *self.edge_use.entry(e).or_insert(0) += 1;
        }
        self.placed[t] = Some(tri);
    }

    fn unplace(&mut self, t: usize, tri: [usize; 3]) {
        for e in edges(&tri) {
            let c = self.edge_use.get_mut(&e).expect("placed edge");
            *c -= 1;
            if *c == 0 {
                self.edge_use.remove(&e);
            }
        }
        self.placed[t] = None;
    }

    fn accept(&mut self) {
        let triangles: Vec<Triangle> = self
            .placed
            .iter()
            .map(|p| {
                let [a, b, c] = p.expect("all placed").map(|v| format!("v{v}"));
                Triangle::from_labels(&a, &b, &c).expect("distinct slots")
            })
            .collect();
        let Ok(k) = Triangulation::new(triangles) else {
            return;
        };
        if !validate_closed_surface(&k).is_closed_surface() || intersection_matrix(&k) != *self.m {
            return;
        }
        // the first triangle's labels are interchangeable, so the same
        // partition can be reached more than once
        let identity = TriangleBijection::identity(k.len());
        let seen = self
            .solutions
            .iter()
            .any(|s| extend_unchecked(s, &k, &identity).is_extended());
        if !seen {
            self.solutions.push(k);
        }
    }
}

fn edges(t: &[usize; 3]) -> [(usize, usize); 3] {
    let mut s = *t;
    s.sort_unstable();
    [(s[0], s[1]), (s[0], s[2]), (s[1], s[2])]
}

fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for i in start..pool.len() {
            acc.push(pool[i]);
            go(pool, k, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Whether `m` is a row/column permutation of the TP10 or TP12 matrix.
pub fn detect_exceptional(m: &IntersectionMatrix) -> Ambiguity {
    let (template, verdict) = match m.len() {
        10 => (catalog::tp10(), Ambiguity::Tp10),
        12 => (catalog::tp12(), Ambiguity::Tp12),
        _ => return Ambiguity::None,
    };
    let canonical = intersection_matrix(&template);
    if find_intersection_preserving_bijections(m, &canonical, Some(1)).is_empty() {
        Ambiguity::None
    } else {
        verdict
    }
}
