//! Explicit constructions of minimum generating sets.
//!
//! [`build`] first decides existence, then dispatches on the residues of `m`
//! mod 8 and `t` mod 4 to the matching construction, and finally certifies
//! the produced cycles with the verifier before handing them back. Nothing
//! that leaves this module is taken on faith.

mod mod8_0;
mod mod8_4;
mod t0mod4;
mod t1mod4;
mod t3mod4;

pub use t0mod4::t_four_unpatched;

use std::collections::BTreeSet;

use crate::circulant::{Order, RotCycle};
use crate::feasibility::{feasible, Params};
use crate::ham::ham_system;
use crate::orbits::{cycle_from_path, BasePath};
use crate::tuples::{row_condition, ArrayRow, DifferenceTuple, TuplePattern};
use crate::verifier::verify;
use crate::{Error, Result};

/// A certified minimum generating set for a cyclic m-cycle system of
/// `K_n - I` with `n = mt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    pub params: Params,
    /// Base cycles; their rotation orbits partition the edge set.
    pub cycles: Vec<RotCycle>,
    /// How each base cycle was produced, parallel to `cycles`.
    pub routes: Vec<String>,
}

impl GeneratingSet {
    pub fn order(&self) -> Order {
        Order::new(self.params.n()).expect("admissible params give a valid order")
    }
}

/// Builds and certifies a minimum generating set, or explains why none
/// exists.
pub fn build(params: Params) -> Result<GeneratingSet> {
    let decision = feasible(params);
    if !decision.feasible {
        return Err(Error::Infeasible {
            m: params.m,
            n: params.n(),
            reason: decision.reason,
        });
    }
    let (cycles, routes) = dispatch(params)?;
    let set = GeneratingSet { params, cycles, routes };
    let report = verify(params.m as usize, set.order(), &set.cycles)?;
    if !report.ok() {
        return Err(Error::ConstructionCheck {
            route: format!("m = {}, t = {}", params.m, params.t),
            detail: report.summary(),
        });
    }
    Ok(set)
}

pub(crate) type Pieces = (Vec<RotCycle>, Vec<String>);

fn dispatch(params: Params) -> Result<Pieces> {
    let Params { m, t } = params;
    if t == 1 {
        return ham_pieces(m);
    }
    match m % 8 {
        0 => {
            if t == 2 {
                mod8_0::t_two(m)
            } else {
                mod8_0::t_even(m, t)
            }
        }
        4 => {
            if t % 2 == 1 {
                mod8_4::t_odd(m, t)
            } else {
                mod8_4::t_even(m, t)
            }
        }
        2 | 6 => match t % 4 {
            0 if t == 4 => t0mod4::t_four(m),
            0 => t0mod4::t_multiple(m, t),
            1 if m == 10 => t1mod4::m10(t),
            1 if t == 5 => t1mod4::t_five(m),
            1 => t1mod4::general(m, t),
            3 if t == 3 => t3mod4::t_three(m),
            3 if m == 6 => t3mod4::m6(t),
            3 if m == 14 => t3mod4::m14(t),
            3 => t3mod4::general(m, t),
            _ => unreachable!("feasibility admits only t ≡ 0, 1, 3 (mod 4) here"),
        },
        _ => unreachable!("m is even, so m mod 8 is even"),
    }
}

fn ham_pieces(m: u32) -> Result<Pieces> {
    let cycles = ham_system(m)?;
    let routes = vec!["hamiltonian".to_string(); cycles.len()];
    Ok((cycles, routes))
}

/// Accumulates base cycles together with the route tag of the step that
/// produced each one, converting low-level errors into construction
/// failures that name the offending route.
pub(crate) struct SetBuilder {
    n: Order,
    cycles: Vec<RotCycle>,
    routes: Vec<String>,
}

impl SetBuilder {
    fn new(n: Order) -> SetBuilder {
        SetBuilder { n, cycles: Vec::new(), routes: Vec::new() }
    }

    fn push(&mut self, cycle: RotCycle, route: String) {
        self.cycles.push(cycle);
        self.routes.push(route);
    }

    /// A cycle given directly by its vertices.
    fn push_cycle(&mut self, vertices: &[i64], route: &str) -> Result<()> {
        let cycle = RotCycle::from_i64(vertices, self.n).map_err(|e| fail(route, e))?;
        self.push(cycle, route.to_string());
        Ok(())
    }

    /// A cycle assembled from translates of a short path anchored at 0.
    fn push_path(&mut self, vertices: &[i64], route: &str) -> Result<()> {
        let path = BasePath::from_i64(vertices, self.n).map_err(|e| fail(route, e))?;
        let cycle = cycle_from_path(&path, self.n).map_err(|e| fail(route, e))?;
        self.push(cycle, route.to_string());
        Ok(())
    }

    /// A cycle given by a signed difference tuple.
    fn push_tuple(&mut self, entries: Vec<i64>, route: &str) -> Result<()> {
        let tuple = DifferenceTuple::new(entries, self.n);
        let cycle = tuple.to_cycle().map_err(|e| fail(route, e))?;
        self.push(cycle, route.to_string());
        Ok(())
    }

    /// One cycle per array row, checking each row's zero-sum condition
    /// before folding it through the sign pattern.
    fn push_rows(&mut self, rows: Vec<ArrayRow>, pattern: &TuplePattern, route: &str) -> Result<()> {
        for row in rows {
            if !row_condition(&row, pattern.condition) {
                return Err(Error::ConstructionCheck {
                    route: route.to_string(),
                    detail: format!(
                        "row {:?} fails the {} condition",
                        row.values(),
                        pattern.name
                    ),
                });
            }
            let entries = pattern.apply(&row).map_err(|e| fail(route, e))?;
            self.push_tuple(entries, route)?;
        }
        Ok(())
    }

    /// Re-embeds a generating set on `n / factor` points by scaling every
    /// vertex, so each cycle covers the lengths `factor` times its old ones.
    fn push_lifted(&mut self, inner: Pieces, factor: u32) -> Result<()> {
        let (cycles, routes) = inner;
        for (cycle, route) in cycles.into_iter().zip(routes) {
            let vertices: Vec<u32> = cycle.vertices().iter().map(|&v| v * factor).collect();
            let lifted = RotCycle::new(vertices, self.n).map_err(|e| fail(&route, e))?;
            self.push(lifted, format!("lift{factor}:{route}"));
        }
        Ok(())
    }

    fn finish(self) -> Pieces {
        (self.cycles, self.routes)
    }
}

fn fail(route: &str, err: Error) -> Error {
    Error::ConstructionCheck { route: route.to_string(), detail: err.to_string() }
}

/// The lengths `1..n/2 - 1` not claimed by `covered`, ascending.
fn complement(n: u32, covered: &[u64]) -> Result<Vec<u64>> {
    let max = u64::from(n / 2 - 1);
    let set: BTreeSet<u64> = covered.iter().copied().collect();
    if set.len() != covered.len() {
        return Err(Error::ConstructionCheck {
            route: "two-step-orbit".to_string(),
            detail: "short paths claim a length twice".to_string(),
        });
    }
    if let Some(&bad) = set.iter().find(|&&v| v == 0 || v > max) {
        return Err(Error::ConstructionCheck {
            route: "two-step-orbit".to_string(),
            detail: format!("claimed length {bad} is outside 1..{max}"),
        });
    }
    Ok((1..=max).filter(|v| !set.contains(v)).collect())
}

/// Splits the leftover lengths into `2s` array rows of width `m`.
///
/// The first `8s` values feed the head columns in chunks of four, the next
/// `4s` fill columns five and six interleaved across row pairs, and the
/// rest is dealt out in order. Each region must decompose into adjacent
/// pairs exactly as the fold patterns require; the shape checks below fail
/// loudly if a caller hands over a leftover set that does not.
fn array_rows(m: usize, s: usize, leftover: Vec<u64>) -> Result<Vec<ArrayRow>> {
    let rows = 2 * s;
    let shape_err = |detail: String| Error::ConstructionCheck {
        route: "row-fold".to_string(),
        detail,
    };
    if leftover.len() != rows * m {
        return Err(shape_err(format!(
            "{} leftover lengths cannot fill {rows} rows of width {m}",
            leftover.len()
        )));
    }
    if leftover.windows(2).any(|w| w[0] >= w[1]) {
        return Err(shape_err("leftover lengths are not strictly ascending".to_string()));
    }
    let prefix = &leftover[..8 * s];
    let block = &leftover[8 * s..12 * s];
    let rest = &leftover[12 * s..];
    for c in prefix.chunks(4) {
        if c[1] != c[0] + 1 || c[3] != c[2] + 1 {
            return Err(shape_err(format!("head chunk {c:?} is not two adjacent pairs")));
        }
    }
    for c in block.chunks(4) {
        if c[1] != c[0] + 1 || c[2] != c[0] + 2 || c[3] != c[0] + 3 {
            return Err(shape_err(format!("middle chunk {c:?} is not a run of four")));
        }
    }
    for c in rest.chunks(2) {
        if c[1] != c[0] + 1 {
            return Err(shape_err(format!("tail pair {c:?} is not adjacent")));
        }
    }
    let per_row = m - 6;
    let mut out = Vec::with_capacity(rows);
    for i in 0..rows {
        let mut vals = Vec::with_capacity(m);
        vals.extend_from_slice(&prefix[4 * i..4 * i + 4]);
        let u = i / 2;
        if i % 2 == 0 {
            vals.push(block[4 * u]);
            vals.push(block[4 * u + 2]);
        } else {
            vals.push(block[4 * u + 1]);
            vals.push(block[4 * u + 3]);
        }
        vals.extend_from_slice(&rest[per_row * i..per_row * (i + 1)]);
        out.push(ArrayRow::new(vals)?);
    }
    Ok(out)
}
