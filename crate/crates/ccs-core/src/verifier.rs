//! Brute-force certification of claimed generating sets, and an exhaustive
//! search usable as a ground-truth oracle at small orders.
//!
//! [`verify`] expands every base cycle into its full rotation orbit and
//! checks, edge by edge, that the expansion covers `K_n - I` exactly once.
//! It trusts nothing about how the base cycles were produced.
//!
//! [`exhaustive_search`] decides existence at small `n` by complete
//! backtracking over length classes, so a `None` answer is a proof of
//! non-existence rather than a timeout.

use crate::circulant::{edges_of, kn_minus_i_spec, Edge, Order, RotCycle};
use crate::orbits::{expand_orbit, orbit_length, structure_check, StructureReport};
use crate::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// Everything [`verify`] measured about a claimed generating set.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n: u32,
    pub m: usize,
    pub base_cycles: usize,
    pub expanded_cycles: usize,
    /// `n(n-2)/(2m)` when that is an integer.
    pub expected_cycles: Option<u64>,
    /// Distinct edges covered by the expansion.
    pub covered_edges: usize,
    /// `n(n-2)/2`, the size of `K_n - I`.
    pub expected_edges: u64,
    /// Base cycle indices whose length differs from `m`.
    pub wrong_length: Vec<usize>,
    /// Edges covered more than once, with their multiplicity.
    pub duplicate_edges: Vec<(Edge, usize)>,
    /// Edges of `K_n - I` not covered at all.
    pub missing_edges: Vec<Edge>,
    /// Pairs of base cycle indices whose orbits share a cycle.
    pub shared_orbits: Vec<(usize, usize)>,
    /// Base cycles failing internal orbit-structure invariants.
    pub structure_failures: Vec<(usize, StructureReport)>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.wrong_length.is_empty()
            && self.duplicate_edges.is_empty()
            && self.missing_edges.is_empty()
            && self.shared_orbits.is_empty()
            && self.structure_failures.is_empty()
            && self.covered_edges as u64 == self.expected_edges
    }

    /// Distinct modulo-n lengths among the missing edges.
    pub fn missing_lengths(&self) -> BTreeSet<u32> {
        let n = Order::new(self.n).expect("report order is valid");
        self.missing_edges.iter().map(|e| e.length(n).0).collect()
    }

    pub fn summary(&self) -> String {
        if self.ok() {
            return format!(
                "ok: {} base cycles expand to {} cycles covering all {} edges of K_{} - I exactly once",
                self.base_cycles, self.expanded_cycles, self.covered_edges, self.n
            );
        }
        let mut parts = Vec::new();
        if !self.wrong_length.is_empty() {
            parts.push(format!(
                "{} base cycles of wrong length {:?}",
                self.wrong_length.len(),
                self.wrong_length
            ));
        }
        if !self.duplicate_edges.is_empty() {
            parts.push(format!("{} duplicated edges", self.duplicate_edges.len()));
        }
        if !self.missing_edges.is_empty() {
            parts.push(format!(
                "{} missing edges with lengths {:?}",
                self.missing_edges.len(),
                self.missing_lengths()
            ));
        }
        if !self.shared_orbits.is_empty() {
            parts.push(format!("orbit overlaps {:?}", self.shared_orbits));
        }
        if !self.structure_failures.is_empty() {
            let idx: Vec<usize> = self.structure_failures.iter().map(|f| f.0).collect();
            parts.push(format!("structure invariant failures at {idx:?}"));
        }
        format!("failed: {}", parts.join("; "))
    }
}

/// Expands the orbit of each base cycle and checks exact coverage of
/// `K_n - I` by m-cycles, one orbit representative per base cycle.
pub fn verify(m: usize, n: Order, base_cycles: &[RotCycle]) -> Result<VerificationReport> {
    let nn = n.get() as u64;
    let spec = kn_minus_i_spec(n)?;
    let expected_edges = spec.edge_count();
    let expected_cycles = if (nn * (nn - 2) / 2) % m as u64 == 0 {
        Some(nn * (nn - 2) / (2 * m as u64))
    } else {
        None
    };

    let mut wrong_length = Vec::new();
    let mut structure_failures = Vec::new();
    let mut shared_orbits = Vec::new();
    let mut expanded_cycles = 0usize;
    let mut edge_mult: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut owner_of: BTreeMap<RotCycle, usize> = BTreeMap::new();

    for (i, c) in base_cycles.iter().enumerate() {
        if c.len() != m {
            wrong_length.push(i);
        }
        let report = structure_check(c, n);
        if !report.ok() {
            structure_failures.push((i, report));
        }
        for translate in expand_orbit(c, n) {
            expanded_cycles += 1;
            for e in translate.edges(n) {
                *edge_mult.entry(e).or_insert(0) += 1;
            }
            match owner_of.get(&translate) {
                Some(&j) if !shared_orbits.contains(&(j, i)) => shared_orbits.push((j, i)),
                Some(_) => {}
                None => {
                    owner_of.insert(translate, i);
                }
            }
        }
    }

    let duplicate_edges: Vec<(Edge, usize)> = edge_mult
        .iter()
        .filter(|&(_, &c)| c > 1)
        .map(|(&e, &c)| (e, c))
        .collect();
    let missing_edges: Vec<Edge> = edges_of(&spec)
        .into_iter()
        .filter(|e| !edge_mult.contains_key(e))
        .collect();

    Ok(VerificationReport {
        n: n.get(),
        m,
        base_cycles: base_cycles.len(),
        expanded_cycles,
        expected_cycles,
        covered_edges: edge_mult.len(),
        expected_edges,
        wrong_length,
        duplicate_edges,
        missing_edges,
        shared_orbits,
        structure_failures,
    })
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Default order cap for [`exhaustive_search`].
pub const SEARCH_BOUND: u32 = 24;

pub(crate) enum SearchOutcome {
    Found(Vec<RotCycle>),
    /// The whole space was explored without success.
    Exhausted,
    /// The deadline fired before the space was exhausted.
    Deadline,
}

struct SearchCtx {
    n: u32,
    m: usize,
    /// `uncovered[l]` for lengths `1 ..= n/2 - 1`.
    uncovered: Vec<bool>,
    uncovered_count: usize,
    found: Vec<RotCycle>,
    deadline: Option<std::time::Instant>,
    nodes: u64,
    timed_out: bool,
}

impl SearchCtx {
    fn order(&self) -> Order {
        Order::new(self.n).unwrap()
    }

    fn smallest_uncovered(&self) -> Option<u32> {
        (1..self.uncovered.len() as u32).find(|&l| self.uncovered[l as usize])
    }

    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.nodes += 1;
        if self.nodes % 2048 == 0 {
            if let Some(deadline) = self.deadline {
                if std::time::Instant::now() >= deadline {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn solve(&mut self) -> bool {
        if self.out_of_time() {
            return false;
        }
        let anchor = match self.smallest_uncovered() {
            Some(l) => l,
            None => return true,
        };
        // Orbit length k needs k | n and (n/k) | m; the base cycle then
        // carries d = mk/n distinct lengths, d <= m.
        let mut ks: Vec<u32> = (1..=self.n)
            .filter(|&k| self.n % k == 0 && self.m as u32 % (self.n / k) == 0)
            .collect();
        ks.sort_unstable_by(|a, b| b.cmp(a));
        for k in ks {
            let d = (self.m as u64 * k as u64 / self.n as u64) as usize;
            if d == 0 || d > self.uncovered_count {
                continue;
            }
            let mut path = vec![0u32, anchor];
            self.uncovered[anchor as usize] = false;
            self.uncovered_count -= 1;
            if self.extend(&mut path, k, d) {
                self.uncovered[anchor as usize] = true;
                self.uncovered_count += 1;
                return true;
            }
            self.uncovered[anchor as usize] = true;
            self.uncovered_count += 1;
        }
        false
    }

    /// Extends `path` (which already uses its lengths) to `d` edges, then
    /// closes it into a base cycle of orbit length `k` and recurses.
    fn extend(&mut self, path: &mut Vec<u32>, k: u32, d: usize) -> bool {
        if self.out_of_time() {
            return false;
        }
        if path.len() == d + 1 {
            return self.close(path, k);
        }
        let last = *path.last().unwrap();
        let candidates: Vec<u32> = (1..self.uncovered.len() as u32)
            .filter(|&l| self.uncovered[l as usize])
            .collect();
        for l in candidates {
            for next in [
                (last + l) % self.n,
                (last + self.n - l) % self.n,
            ] {
                if path.contains(&next) {
                    continue;
                }
                // Vertices of one tiling block must be distinct mod k, and
                // only the endpoint may return to 0 mod k.
                let interior = path.len() < d;
                if interior {
                    if next % k == 0 || path.iter().any(|&v| v % k == next % k) {
                        continue;
                    }
                } else if next % k != 0 {
                    continue;
                }
                path.push(next);
                self.uncovered[l as usize] = false;
                self.uncovered_count -= 1;
                if self.extend(path, k, d) {
                    return true;
                }
                self.uncovered[l as usize] = true;
                self.uncovered_count += 1;
                path.pop();
            }
        }
        false
    }

    fn close(&mut self, path: &[u32], k: u32) -> bool {
        let n = self.order();
        let end = *path.last().unwrap();
        let cycle = if k == self.n {
            if end != 0 {
                return false;
            }
            match RotCycle::new(path[..path.len() - 1].to_vec(), n) {
                Ok(c) => c,
                Err(_) => return false,
            }
        } else {
            if end == 0 || gcd(end, self.n) != k {
                return false;
            }
            let base = match crate::orbits::BasePath::new(path.to_vec(), n) {
                Ok(b) => b,
                Err(_) => return false,
            };
            match crate::orbits::cycle_from_path(&base, n) {
                Ok(c) => c,
                Err(_) => return false,
            }
        };
        if cycle.len() != self.m || orbit_length(&cycle, n) != k {
            return false;
        }
        self.found.push(cycle);
        if self.solve() {
            return true;
        }
        self.found.pop();
        false
    }
}

/// Backtracking search over base cycles anchored at the smallest uncovered
/// length class. Explores the whole space unless a deadline is given.
pub(crate) fn dfs_decompose(
    m: u32,
    n: u32,
    deadline: Option<std::time::Instant>,
) -> Result<SearchOutcome> {
    Order::new(n)?;
    if n % 2 != 0 {
        return Err(Error::OddOrder(n));
    }
    if m < 3 || m > n {
        return Err(Error::BadParams(format!(
            "cycle length {m} out of range for order {n}"
        )));
    }
    let classes = (n / 2 - 1) as usize;
    let total_edges = n as u64 * classes as u64;
    if total_edges % m as u64 != 0 {
        return Ok(SearchOutcome::Exhausted);
    }
    let mut ctx = SearchCtx {
        n,
        m: m as usize,
        uncovered: {
            let mut v = vec![false; classes + 1];
            for l in 1..=classes {
                v[l] = true;
            }
            v
        },
        uncovered_count: classes,
        found: Vec::new(),
        deadline,
        nodes: 0,
        timed_out: false,
    };
    if ctx.solve() {
        Ok(SearchOutcome::Found(ctx.found))
    } else if ctx.timed_out {
        Ok(SearchOutcome::Deadline)
    } else {
        Ok(SearchOutcome::Exhausted)
    }
}

/// Complete backtracking search for a cyclic m-cycle system of `K_n - I`.
///
/// Returns `Ok(Some(base_cycles))` on success and `Ok(None)` only after
/// exhausting the whole search space. Orders above `bound` (default
/// [`SEARCH_BOUND`]) are refused with [`Error::SearchBoundExceeded`] since
/// the search is exponential.
pub fn exhaustive_search(m: u32, n: u32, bound: Option<u32>) -> Result<Option<Vec<RotCycle>>> {
    let bound = bound.unwrap_or(SEARCH_BOUND);
    if n > bound {
        return Err(Error::SearchBoundExceeded { n, bound });
    }
    match dfs_decompose(m, n, None)? {
        SearchOutcome::Found(cycles) => Ok(Some(cycles)),
        SearchOutcome::Exhausted => Ok(None),
        SearchOutcome::Deadline => unreachable!("no deadline was set"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::RotCycle;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    fn cyc(vs: &[i64], n: u32) -> RotCycle {
        RotCycle::from_i64(vs, ord(n)).unwrap()
    }

    #[test]
    fn verify_accepts_known_system() {
        // A cyclic 8-cycle system of K_16 - I.
        let cycles = vec![
            cyc(&[0, -3, 3, 7, 8, 5, 11, 15], 16),
            cyc(&[0, 2, 4, 6, 8, 10, 12, 14], 16),
            cyc(&[0, 5, 12, 1, 8, 13, 4, 9], 16),
        ];
        let report = verify(8, ord(16), &cycles).unwrap();
        assert!(report.ok(), "{}", report.summary());
        assert_eq!(report.expanded_cycles, 14);
        assert_eq!(report.covered_edges, 112);
    }

    #[test]
    fn verify_flags_missing_and_duplicates() {
        let cycles = vec![cyc(&[0, 2, 4, 6, 8, 10, 12, 14], 16)];
        let report = verify(8, ord(16), &cycles).unwrap();
        assert!(!report.ok());
        assert_eq!(report.covered_edges, 16);
        assert_eq!(report.missing_edges.len(), 96);
        assert!(report.duplicate_edges.is_empty());
        assert_eq!(
            report.missing_lengths(),
            [1u32, 3, 4, 5, 6, 7].into_iter().collect()
        );

        let twice = vec![
            cyc(&[0, 2, 4, 6, 8, 10, 12, 14], 16),
            cyc(&[1, 3, 5, 7, 9, 11, 13, 15], 16),
        ];
        let report = verify(8, ord(16), &twice).unwrap();
        assert!(!report.ok());
        assert_eq!(report.duplicate_edges.len(), 16);
        assert_eq!(report.shared_orbits, vec![(0, 1)]);
    }

    #[test]
    fn verify_flags_wrong_length() {
        let cycles = vec![cyc(&[0, 1, 2, 3], 16)];
        let report = verify(8, ord(16), &cycles).unwrap();
        assert_eq!(report.wrong_length, vec![0]);
        assert!(!report.ok());
    }

    #[test]
    fn search_finds_small_systems() {
        for (m, n) in [(4u32, 4u32), (4, 8), (8, 16), (4, 12), (6, 18), (12, 12)] {
            let found = exhaustive_search(m, n, None)
                .unwrap()
                .unwrap_or_else(|| panic!("expected a system for ({m},{n})"));
            let report = verify(m as usize, ord(n), &found).unwrap();
            assert!(report.ok(), "({m},{n}): {}", report.summary());
        }
    }

    #[test]
    fn search_proves_absence() {
        for (m, n) in [(8u32, 8u32), (6, 12), (10, 10), (6, 6)] {
            assert!(
                exhaustive_search(m, n, None).unwrap().is_none(),
                "unexpected system for ({m},{n})"
            );
        }
    }

    #[test]
    fn search_bound_is_enforced() {
        match exhaustive_search(8, 32, None) {
            Err(Error::SearchBoundExceeded { n: 32, bound: 24 }) => {}
            other => panic!("expected bound error, got {other:?}"),
        }
        let found = exhaustive_search(4, 28, Some(28)).unwrap().unwrap();
        let report = verify(4, ord(28), &found).unwrap();
        assert!(report.ok(), "{}", report.summary());
    }
}
