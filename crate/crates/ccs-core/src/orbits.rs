//! Rotation orbits of cycles and the path-to-cycle expansion.
//!
//! The rotation `ρ: v -> v + 1 (mod n)` acts on cycles. The orbit length of
//! a cycle `C` is the least `k > 0` with `ρ^k(C) = C`; it always divides
//! `n`. A cycle with a short orbit is determined by a subpath: if a path
//! `P` starts at 0 and ends at `e != 0`, the concatenation of
//! `P, ρ^e(P), ρ^{2e}(P), ...` closes up after `n / gcd(e, n)` copies and,
//! when no vertex repeats, yields a simple cycle whose edge lengths are
//! those of `P` repeated.

use crate::circulant::{length_multiset, length_set, mod_length, Edge, Order, RotCycle};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Divisors of `n` in ascending order.
fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// The least `k > 0` with `ρ^k(C) = C`. Always a divisor of `n`.
pub fn orbit_length(cycle: &RotCycle, n: Order) -> u32 {
    let base: BTreeSet<Edge> = cycle.edges(n).into_iter().collect();
    for k in divisors(n.get()) {
        let shifted: BTreeSet<Edge> = cycle
            .translate(k as i64, n)
            .edges(n)
            .into_iter()
            .collect();
        if shifted == base {
            return k;
        }
    }
    n.get()
}

/// The distinct translates `ρ^j(C)` for `0 <= j < orbit_length`.
pub fn expand_orbit(cycle: &RotCycle, n: Order) -> Vec<RotCycle> {
    let k = orbit_length(cycle, n);
    (0..k).map(|j| cycle.translate(j as i64, n)).collect()
}

/// A path on `Z_n` starting at 0, used as the repeating block of a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePath {
    vertices: Vec<u32>,
}

impl BasePath {
    pub fn new(vertices: Vec<u32>, n: Order) -> Result<BasePath> {
        if vertices.len() < 2 {
            return Err(Error::EmptyPath);
        }
        if vertices[0] != 0 {
            return Err(Error::PathNotAtZero(vertices[0]));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if v >= n.get() {
                return Err(Error::VertexOutOfRange { v, n: n.get() });
            }
            if !seen.insert(v) {
                return Err(Error::RepeatedVertex { v });
            }
        }
        Ok(BasePath { vertices })
    }

    pub fn from_i64(vertices: &[i64], n: Order) -> Result<BasePath> {
        BasePath::new(vertices.iter().map(|&v| n.reduce(v)).collect(), n)
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn endpoint(&self) -> u32 {
        *self.vertices.last().expect("path is nonempty")
    }
}

/// Expands a base path into the cycle `P ∪ ρ^e(P) ∪ ρ^{2e}(P) ∪ ...` where
/// `e` is the path endpoint. The result has `s * (|P| - 1)` edges for
/// `s = n / gcd(e, n)`.
///
/// # Errors
///
/// Fails with [`Error::TranslateCollision`] naming the first repeated
/// residue if the translates share a vertex, and with
/// [`Error::ZeroEndpoint`] when the path ends at 0.
pub fn cycle_from_path(path: &BasePath, n: Order) -> Result<RotCycle> {
    let e = path.endpoint();
    if e == 0 {
        return Err(Error::ZeroEndpoint);
    }
    let s = n.get() as u64 / gcd(e as u64, n.get() as u64);
    let block = &path.vertices()[..path.vertices().len() - 1];
    let mut vertices = Vec::with_capacity(block.len() * s as usize);
    let mut seen = BTreeSet::new();
    for j in 0..s {
        let shift = (j * e as u64) as i64;
        for &v in block {
            let w = n.reduce(v as i64 + shift);
            if !seen.insert(w) {
                return Err(Error::TranslateCollision(w));
            }
            vertices.push(w);
        }
    }
    RotCycle::new(vertices, n)
}

/// One failed structural property of a cycle, named by what it violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFailure {
    pub property: &'static str,
    pub detail: String,
}

/// Structural profile of a cycle under rotation.
///
/// Every cycle that can appear in a cyclic m-cycle system satisfies all of
/// these; `failures` lists the ones this cycle breaks.
#[derive(Debug, Clone)]
pub struct StructureReport {
    pub orbit_length: u32,
    pub failures: Vec<StructureFailure>,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the structural properties every base cycle of a cyclic system
/// satisfies, given the cycle alone.
///
/// With `m` the cycle length and `k` its orbit length: the cycle carries
/// `mk/n` distinct edge lengths, each on `n/k` edges; `n/k` divides
/// `gcd(m, n)`; if some length is divisible by `k` then `m = n / gcd(l, n)`;
/// and the subpath of `mk/n` edges from vertex 0 ends at a multiple `kx` of
/// `k` with `gcd(x, n/k) = 1`, visits distinct residues mod `k`, carries
/// every length of the cycle, and tiles the cycle by `ρ^{jk}` translates.
pub fn structure_check(cycle: &RotCycle, n: Order) -> StructureReport {
    let mut failures = Vec::new();
    let nn = n.get() as u64;
    let m = cycle.len() as u64;
    let k = orbit_length(cycle, n) as u64;

    let lengths = length_multiset(cycle, n);
    let distinct = length_set(cycle, n);

    if m * k % nn != 0 || distinct.len() as u64 != m * k / nn {
        failures.push(StructureFailure {
            property: "distinct-length-count",
            detail: format!(
                "expected m*k/n = {}*{}/{} distinct lengths, found {}",
                m,
                k,
                nn,
                distinct.len()
            ),
        });
    }

    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for l in &lengths {
        *counts.entry(l.0).or_insert(0) += 1;
    }
    for (l, c) in &counts {
        if *c != nn / k {
            failures.push(StructureFailure {
                property: "edges-per-length",
                detail: format!("length {} occurs {} times, expected n/k = {}", l, c, nn / k),
            });
        }
    }

    let g = gcd(m, nn);
    if g % (nn / k) != 0 {
        failures.push(StructureFailure {
            property: "orbit-index-divides-gcd",
            detail: format!("n/k = {} does not divide gcd(m, n) = {}", nn / k, g),
        });
    }

    for l in &distinct {
        if k > 0 && (l.0 as u64) % k == 0 {
            let expect = nn / gcd(l.0 as u64, nn);
            if m != expect {
                failures.push(StructureFailure {
                    property: "divisible-length-forces-cycle-length",
                    detail: format!(
                        "length {} divisible by k = {} but m = {} != n/gcd(l, n) = {}",
                        l.0, k, m, expect
                    ),
                });
            }
        }
    }

    if k > 1 && m * k % nn == 0 {
        let d = (m * k / nn) as usize;
        for path in subpaths_from_zero(cycle, d) {
            check_subpath(&path, cycle, n, k, &mut failures);
        }
    }

    StructureReport {
        orbit_length: k as u32,
        failures,
    }
}

/// The two directed subpaths of `d` edges starting at vertex 0 (one per
/// traversal direction). Empty when 0 is not on the cycle.
fn subpaths_from_zero(cycle: &RotCycle, d: usize) -> Vec<Vec<u32>> {
    let m = cycle.len();
    let Some(pos) = cycle.vertices().iter().position(|&v| v == 0) else {
        return Vec::new();
    };
    if d > m {
        return Vec::new();
    }
    let fwd: Vec<u32> = (0..=d).map(|i| cycle.vertices()[(pos + i) % m]).collect();
    let bwd: Vec<u32> = (0..=d).map(|i| cycle.vertices()[(pos + m - i % m) % m]).collect();
    vec![fwd, bwd]
}

fn check_subpath(
    path: &[u32],
    cycle: &RotCycle,
    n: Order,
    k: u64,
    failures: &mut Vec<StructureFailure>,
) {
    let nn = n.get() as u64;
    let end = *path.last().expect("subpath is nonempty") as u64;

    if end % k != 0 {
        failures.push(StructureFailure {
            property: "subpath-endpoint-multiple-of-k",
            detail: format!("subpath ends at {} which is not a multiple of k = {}", end, k),
        });
    } else {
        let x = end / k;
        if gcd(x, nn / k) != 1 {
            failures.push(StructureFailure {
                property: "subpath-endpoint-unit",
                detail: format!("endpoint {} = k*{} with gcd({}, n/k) != 1", end, x, x),
            });
        }
    }

    let mut residues = BTreeSet::new();
    for &v in &path[1..] {
        if !residues.insert(v as u64 % k) {
            failures.push(StructureFailure {
                property: "subpath-residues-distinct-mod-k",
                detail: format!("residue {} mod k repeats on subpath", v as u64 % k),
            });
        }
    }

    let path_lengths: BTreeSet<u32> = path
        .windows(2)
        .map(|w| {
            mod_length(w[1] as i64 - w[0] as i64, n)
                .expect("cycle edges are loops-free")
                .0
        })
        .collect();
    let cycle_lengths: BTreeSet<u32> = length_set(cycle, n).iter().map(|l| l.0).collect();
    if path_lengths != cycle_lengths {
        failures.push(StructureFailure {
            property: "subpath-carries-all-lengths",
            detail: format!(
                "subpath lengths {:?} differ from cycle lengths {:?}",
                path_lengths, cycle_lengths
            ),
        });
    }

    let mut tiled: BTreeSet<Edge> = BTreeSet::new();
    let mut dup = false;
    for j in 0..(nn / k) {
        for w in path.windows(2) {
            let shift = (j * k) as i64;
            let e = Edge::new(w[0] as i64 + shift, w[1] as i64 + shift, n)
                .expect("translated edge is loop-free");
            if !tiled.insert(e) {
                dup = true;
            }
        }
    }
    let cycle_edges: BTreeSet<Edge> = cycle.edges(n).into_iter().collect();
    if dup || tiled != cycle_edges {
        failures.push(StructureFailure {
            property: "subpath-translates-tile-cycle",
            detail: "ρ^{jk} translates of the subpath do not partition the cycle edges".into(),
        });
    }
}
