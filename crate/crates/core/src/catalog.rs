//! Fixed triangulations used as fixtures and corpus.
//!
//! Labelings:
//! - `tp10`: apex `x`, pentagon `a0..a4`; triangles `s0..s4` then `r0..r4`
//!   with `s_i = {a_i, a_{i+1}, x}` and `r_i = {a_i, a_{i+1}, a_{i-2}}`.
//! - `tp12`: apex `x`, hexagon `a0..a5`; triangles `s0..s5` then `r0..r5`
//!   with `s_i = {a_i, a_{i+1}, x}` and `r_i = {a_i, a_{i+1}, a_{i+4}}` for
//!   even `i`, `{a_i, a_{i+1}, a_{i+3}}` for odd `i` (indices mod 6).
//! - `tetrahedron`: `a b c d`.
//! - `octahedron`: poles `n s`, equator `e0..e3`.
//! - `icosahedron`: poles `t b`, upper ring `u0..u4`, lower ring `l0..l4`.
//! - `torus7`: vertices `v0..v6`, triangles `{i, i+1, i+3}` and
//!   `{i, i+2, i+3}` mod 7 (the 7-vertex torus).
//! - `disk_fan(n)`: `{a_i, a_{i+1}, x}`, `i = 0..n-1`.
//! - `moebius5`, `moebius6`: the two Möbius-band cycle realizations on
//!   `a0..a4` and `a0..a5`.

use crate::complex::Triangulation;
use crate::error::{Error, Result};

fn build(triples: Vec<[String; 3]>) -> Triangulation {
    Triangulation::from_triples(&triples)
}

fn a(i: usize) -> String {
    format!("a{i}")
}

pub fn tp10() -> Triangulation {
    let mut t: Vec<[String; 3]> = (0..5).map(|i| [a(i), a((i + 1) % 5), "x".into()]).collect();
    t.extend((0..5).map(|i| [a(i), a((i + 1) % 5), a((i + 3) % 5)]));
    build(t)
}

pub fn tp12() -> Triangulation {
    let mut t: Vec<[String; 3]> = (0..6).map(|i| [a(i), a((i + 1) % 6), "x".into()]).collect();
    t.extend((0..6).map(|i| {
        let apex = if i % 2 == 0 { i + 4 } else { i + 3 };
        [a(i), a((i + 1) % 6), a(apex % 6)]
    }));
    build(t)
}

pub fn tetrahedron() -> Triangulation {
    Triangulation::from_triples(&[
        ["a", "b", "c"],
        ["a", "b", "d"],
        ["a", "c", "d"],
        ["b", "c", "d"],
    ])
}

pub fn octahedron() -> Triangulation {
    let e = |i: usize| format!("e{}", i % 4);
    let mut t = Vec::new();
    for pole in ["n", "s"] {
        for i in 0..4 {
            t.push([pole.to_string(), e(i), e(i + 1)]);
        }
    }
    build(t)
}

pub fn icosahedron() -> Triangulation {
    let u = |i: usize| format!("u{}", i % 5);
    let l = |i: usize| format!("l{}", i % 5);
    let mut t = Vec::new();
    for i in 0..5 {
        t.push(["t".to_string(), u(i), u(i + 1)]);
    }
    for i in 0..5 {
        t.push([u(i), u(i + 1), l(i)]);
        t.push([l(i), l(i + 1), u(i + 1)]);
    }
    for i in 0..5 {
        t.push(["b".to_string(), l(i), l(i + 1)]);
    }
    build(t)
}

pub fn torus7() -> Triangulation {
    let v = |i: usize| format!("v{}", i % 7);
    let mut t = Vec::new();
    for i in 0..7 {
        t.push([v(i), v(i + 1), v(i + 3)]);
        t.push([v(i), v(i + 2), v(i + 3)]);
    }
    build(t)
}

/// Fan of `n >= 3` triangles around `x`; a disk, not a closed surface.
pub fn disk_fan(n: usize) -> Result<Triangulation> {
    if n < 3 {
        return Err(Error::CycleLength(n, "n >= 3"));
    }
    Ok(build(
        (0..n).map(|i| [a(i), a((i + 1) % n), "x".into()]).collect(),
    ))
}

pub fn moebius5() -> Triangulation {
    build(
        (0..5)
            .map(|i| [a(i), a((i + 2) % 5), a((i + 1) % 5)])
            .collect(),
    )
}

pub fn moebius6() -> Triangulation {
    Triangulation::from_triples(&[
        ["a0", "a1", "a2"],
        ["a1", "a2", "a4"],
        ["a2", "a3", "a4"],
        ["a3", "a0", "a4"],
        ["a0", "a5", "a4"],
        ["a5", "a2", "a0"],
    ])
}

/// Expected invariants of a closed catalog surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub triangles: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub builder: fn() -> Triangulation,
    /// `None` for entries with boundary.
    pub expected: Option<Expected>,
}

const fn closed(euler_characteristic: i64, orientable: bool, triangles: usize) -> Option<Expected> {
    Some(Expected {
        euler_characteristic,
        orientable,
        triangles,
    })
}

/// Every fixed-size entry, closed surfaces first.
pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "tetrahedron",
        builder: tetrahedron,
        expected: closed(2, true, 4),
    },
    CatalogEntry {
        name: "octahedron",
        builder: octahedron,
        expected: closed(2, true, 8),
    },
    CatalogEntry {
        name: "icosahedron",
        builder: icosahedron,
        expected: closed(2, true, 20),
    },
    CatalogEntry {
        name: "torus7",
        builder: torus7,
        expected: closed(0, true, 14),
    },
    CatalogEntry {
        name: "tp10",
        builder: tp10,
        expected: closed(1, false, 10),
    },
    CatalogEntry {
        name: "tp12",
        builder: tp12,
        expected: closed(1, false, 12),
    },
    CatalogEntry {
        name: "moebius5",
        builder: moebius5,
        expected: None,
    },
    CatalogEntry {
        name: "moebius6",
        builder: moebius6,
        expected: None,
    },
];

/// The closed surfaces of the catalog, in [`ENTRIES`] order.
pub fn corpus() -> Vec<(&'static str, Triangulation)> {
    ENTRIES
        .iter()
        .filter(|e| e.expected.is_some())
        .map(|e| (e.name, (e.builder)()))
        .collect()
}

/// Looks up an entry by name; `disk_fan(n)` and `disk_fan:n` take a size.
pub fn standard(name: &str) -> Result<Triangulation> {
    if let Some(entry) = ENTRIES.iter().find(|e| e.name == name) {
        return Ok((entry.builder)());
    }
    let size = name
        .strip_prefix("disk_fan(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| name.strip_prefix("disk_fan:"));
    match size.map(str::parse::<usize>) {
        Some(Ok(n)) => disk_fan(n),
        _ => Err(Error::UnknownCatalogEntry(name.to_string())),
    }
}

/// Names accepted by [`standard`], for help output.
pub fn names() -> Vec<String> {
    let mut names: Vec<String> = ENTRIES.iter().map(|e| e.name.to_string()).collect();
    names.push("disk_fan(n)".into());
    names
}
