//! Residues mod n, modulo-n edge lengths, circulant edge sets, and cycles.
//!
//! The edge `{a, b}` of `K_n` has length `|a - b|_n`, the representative of
//! `a - b` in `1..=n/2`. For a set `L` of lengths, `<L>_n` is the circulant
//! graph on `Z_n` whose edges are exactly those with length in `L`. For even
//! `n`, `K_n - I` is `<{1, ..., n/2 - 1}>_n`: removing the length-`n/2`
//! class removes a perfect matching.

use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// The order `n >= 3` of the vertex set `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(u32);

impl Order {
    pub fn new(n: u32) -> Result<Order> {
        if n < 3 {
            return Err(Error::OrderTooSmall(n as u64));
        }
        Ok(Order(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Largest possible edge length, `floor(n/2)`.
    pub fn max_length(self) -> u32 {
        self.0 / 2
    }

    /// Reduces an integer to its residue in `0..n`.
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A modulo-n edge length, in `1..=n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModLength(pub u32);

impl fmt::Display for ModLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The modulo-n length of `x`: the representative of `±x` in `1..=n/2`.
///
/// # Errors
///
/// Fails when `x ≡ 0 (mod n)`, which names no edge.
pub fn mod_length(x: i64, n: Order) -> Result<ModLength> {
    let r = n.reduce(x);
    if r == 0 {
        return Err(Error::ZeroLength { x, n: n.get() });
    }
    Ok(ModLength(r.min(n.get() - r)))
}

/// An undirected edge of `K_n` in canonical form (`a < b`, both reduced).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub a: u32,
    pub b: u32,
}

impl Edge {
    pub fn new(u: i64, v: i64, n: Order) -> Result<Edge> {
        let (u, v) = (n.reduce(u), n.reduce(v));
        if u == v {
            return Err(Error::SelfLoop { v: u, n: n.get() });
        }
        Ok(Edge {
            a: u.min(v),
            b: u.max(v),
        })
    }

    pub fn length(&self, n: Order) -> ModLength {
        mod_length(self.b as i64 - self.a as i64, n).expect("endpoints differ")
    }

    /// The edge translated by `g` (rotation `ρ^g`).
    pub fn translate(&self, g: i64, n: Order) -> Edge {
        Edge::new(self.a as i64 + g, self.b as i64 + g, n).expect("translation keeps endpoints distinct")
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

/// A circulant graph `<lengths>_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    n: Order,
    lengths: BTreeSet<ModLength>,
}

impl CirculantSpec {
    pub fn new(n: Order, lengths: impl IntoIterator<Item = u32>) -> Result<CirculantSpec> {
        let mut set = BTreeSet::new();
        for value in lengths {
            if value < 1 || value > n.max_length() {
                return Err(Error::LengthOutOfRange {
                    value,
                    n: n.get(),
                    max: n.max_length(),
                });
            }
            set.insert(ModLength(value));
        }
        Ok(CirculantSpec { n, lengths: set })
    }

    pub fn order(&self) -> Order {
        self.n
    }

    pub fn lengths(&self) -> &BTreeSet<ModLength> {
        &self.lengths
    }

    /// Number of edges: `n` per length class, except `n/2` for the class
    /// with `2l = n` (each edge `{g, g + n/2}` arises twice).
    pub fn edge_count(&self) -> u64 {
        let n = self.n.get() as u64;
        self.lengths
            .iter()
            .map(|l| if 2 * l.0 == self.n.get() { n / 2 } else { n })
            .sum()
    }
}

/// `K_n - I` as a circulant for even `n >= 4`: every length except `n/2`.
pub fn kn_minus_i_spec(n: Order) -> Result<CirculantSpec> {
    if n.get() % 2 != 0 {
        return Err(Error::OddOrder(n.get()));
    }
    CirculantSpec::new(n, 1..n.get() / 2)
}

/// Enumerates the edge set of a circulant graph, each edge exactly once.
pub fn edges_of(spec: &CirculantSpec) -> Vec<Edge> {
    let n = spec.order();
    let mut edges = Vec::with_capacity(spec.edge_count() as usize);
    for l in spec.lengths() {
        let reps = if 2 * l.0 == n.get() { n.get() / 2 } else { n.get() };
        for g in 0..reps {
            edges.push(Edge::new(g as i64, g as i64 + l.0 as i64, n).expect("length is nonzero"));
        }
    }
    edges
}

/// An m-cycle on `Z_n`, stored as its vertex sequence.
///
/// Two vertex sequences denote the same cycle when they differ by rotation
/// or reflection; equality and hashing go through the canonical form.
#[derive(Debug, Clone)]
pub struct RotCycle {
    vertices: Vec<u32>,
}

impl RotCycle {
    pub fn new(vertices: Vec<u32>, n: Order) -> Result<RotCycle> {
        if vertices.len() < 3 {
            return Err(Error::CycleTooShort(vertices.len()));
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
        Ok(RotCycle { vertices })
    }

    pub fn from_i64(vertices: &[i64], n: Order) -> Result<RotCycle> {
        RotCycle::new(vertices.iter().map(|&v| n.reduce(v)).collect(), n)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn translate(&self, g: i64, n: Order) -> RotCycle {
        RotCycle {
            vertices: self.vertices.iter().map(|&v| n.reduce(v as i64 + g)).collect(),
        }
    }

    pub fn edges(&self, n: Order) -> Vec<Edge> {
        let m = self.vertices.len();
        (0..m)
            .map(|i| {
                Edge::new(
                    self.vertices[i] as i64,
                    self.vertices[(i + 1) % m] as i64,
                    n,
                )
                .expect("cycle vertices are distinct")
            })
            .collect()
    }

    /// Lexicographically least vertex sequence over all rotations of both
    /// traversal directions.
    pub fn canonical(&self) -> Vec<u32> {
        let m = self.vertices.len();
        let mut best: Option<Vec<u32>> = None;
        let mut consider = |seq: Vec<u32>| match &best {
            Some(b) if *b <= seq => {}
            _ => best = Some(seq),
        };
        for start in 0..m {
            let fwd: Vec<u32> = (0..m).map(|i| self.vertices[(start + i) % m]).collect();
            let rev: Vec<u32> = (0..m).map(|i| self.vertices[(start + m - i) % m]).collect();
            consider(fwd);
            consider(rev);
        }
        best.expect("cycle is nonempty")
    }
}

impl PartialEq for RotCycle {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Eq for RotCycle {}

impl PartialOrd for RotCycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RotCycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical().cmp(&other.canonical())
    }
}

/// The multiset of edge lengths of a cycle, sorted ascending.
pub fn length_multiset(cycle: &RotCycle, n: Order) -> Vec<ModLength> {
    let mut lengths: Vec<ModLength> = cycle.edges(n).iter().map(|e| e.length(n)).collect();
    lengths.sort();
    lengths
}

/// The set of distinct edge lengths of a cycle.
pub fn length_set(cycle: &RotCycle, n: Order) -> BTreeSet<ModLength> {
    cycle.edges(n).iter().map(|e| e.length(n)).collect()
}
