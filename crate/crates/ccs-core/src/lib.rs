//! Construction engine and verifier for cyclic m-cycle systems of the
//! complete graph minus a 1-factor.
//!
//! For even `n = m*t`, the graph `K_n - I` is the complete graph on the
//! vertex set `Z_n` with a perfect matching removed. A decomposition of its
//! edges into m-cycles is *cyclic* when the rotation `v -> v + 1 (mod n)`
//! maps cycles to cycles. Such a decomposition is generated by a small set
//! of base cycles, one per rotation orbit.
//!
//! This crate decides for which `(m, t)` a cyclic m-cycle system of
//! `K_{mt} - I` exists, builds explicit generating sets for every feasible
//! pair, and verifies claimed systems by brute-force orbit expansion:
//!
//! * [`circulant`]: residue arithmetic, edge lengths, circulant edge sets.
//! * [`orbits`]: rotation orbits of cycles and path-to-cycle expansion.
//! * [`tuples`]: difference tuples, sign patterns, and array rows.
//! * [`feasibility`]: the existence criterion and parity obstructions.
//! * [`ham`]: cyclic hamiltonian cycle systems of `K_m - I` (search + cache).
//! * [`constructions`]: the case-by-case generating-set constructions.
//! * [`verifier`]: full verification and bounded exhaustive search.
//! * [`document`]: the JSON interchange format.

pub mod circulant;
pub mod constructions;
pub mod document;
pub mod feasibility;
pub mod ham;
pub mod orbits;
pub mod tuples;
pub mod verifier;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("order must be at least 3, got {0}")]
    OrderTooSmall(u64),

    #[error("order must be even, got {0}")]
    OddOrder(u32),

    #[error("{x} is congruent to 0 mod {n} and has no modulo-{n} length")]
    ZeroLength { x: i64, n: u32 },

    #[error("length {value} is outside 1..={max} for order {n}")]
    LengthOutOfRange { value: u32, n: u32, max: u32 },

    #[error("self-loop {v} has no edge in Z_{n}")]
    SelfLoop { v: u32, n: u32 },

    #[error("cycle must have at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    #[error("vertex {v} repeats in cycle")]
    RepeatedVertex { v: u32 },

    #[error("vertex {v} is not a residue mod {n}")]
    VertexOutOfRange { v: u32, n: u32 },

    #[error("path must start at 0, starts at {0}")]
    PathNotAtZero(u32),

    #[error("path must have at least 1 edge")]
    EmptyPath,

    #[error("path endpoint 0 gives no translation step")]
    ZeroEndpoint,

    #[error("translate collision at residue {0} while expanding path")]
    TranslateCollision(u32),

    #[error("difference tuple invalid: {0}")]
    InvalidTuple(String),

    #[error("array row invalid: {0}")]
    InvalidRow(String),

    #[error("pattern {pattern} needs m = {expected}, row has {got} entries")]
    PatternWidth {
        pattern: String,
        expected: usize,
        got: usize,
    },

    #[error("parameters invalid: {0}")]
    BadParams(String),

    #[error("no cyclic {m}-cycle system of K_{n} - I exists: {reason}")]
    Infeasible { m: u32, n: u32, reason: String },

    #[error("construction {route} failed: {detail}")]
    ConstructionCheck { route: String, detail: String },

    #[error("no cyclic hamiltonian cycle system of K_{m} - I exists: {reason}")]
    NoHamSystem { m: u32, reason: String },

    #[error("search budget of {budget_secs}s exceeded for m = {m}")]
    BudgetExceeded { m: u32, budget_secs: u64 },

    #[error("order {n} exceeds exhaustive search bound {bound}")]
    SearchBoundExceeded { n: u32, bound: u32 },

    #[error("cache io: {0}")]
    CacheIo(#[from] std::io::Error),

    #[error("cache parse: {0}")]
    CacheParse(#[from] serde_json::Error),

    #[error("document invalid: {0}")]
    BadDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
