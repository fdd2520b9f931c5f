//! Cyclic hamiltonian cycle systems of `K_m - I`, the `t = 1` case.
//!
//! These exist exactly for `m ≡ 2, 4 (mod 8)` with `m` not twice an odd
//! prime power. They are found by backtracking rather than by formula, so
//! the search runs under a wall-clock budget and known systems are kept in
//! a store: one compiled into the crate, optionally overlaid by a JSON
//! cache file named in the `CCS_CACHE` environment variable. Every stored
//! system is re-verified before being handed out.

use crate::circulant::{Order, RotCycle};
use crate::feasibility::{feasible, Params};
use crate::verifier::{dfs_decompose, verify, SearchOutcome};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

/// Default wall-clock budget for [`ham_search`].
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

/// Environment variable naming a JSON cache file for found systems.
pub const CACHE_ENV: &str = "CCS_CACHE";

const BUILTIN: &str = include_str!("../data/ham_systems.json");

type StoreMap = BTreeMap<String, Vec<Vec<u32>>>;

/// A set of known hamiltonian systems keyed by order.
#[derive(Debug, Clone, Default)]
pub struct HamStore {
    entries: StoreMap,
}

impl HamStore {
    /// The store compiled into the crate.
    pub fn builtin() -> Result<HamStore> {
        Ok(HamStore {
            entries: serde_json::from_str(BUILTIN)?,
        })
    }

    pub fn from_file(path: &Path) -> Result<HamStore> {
        let text = std::fs::read_to_string(path)?;
        Ok(HamStore {
            entries: serde_json::from_str(&text)?,
        })
    }

    pub fn orders(&self) -> Vec<u32> {
        self.entries.keys().filter_map(|k| k.parse().ok()).collect()
    }

    /// Returns the stored system for `m` after re-verifying it.
    ///
    /// # Errors
    ///
    /// A stored entry that fails verification is reported, not returned.
    pub fn get(&self, m: u32) -> Result<Option<Vec<RotCycle>>> {
        let entry = match self.entries.get(&m.to_string()) {
            Some(e) => e,
            None => return Ok(None),
        };
        let n = Order::new(m)?;
        let cycles: Vec<RotCycle> = entry
            .iter()
            .map(|vs| RotCycle::new(vs.clone(), n))
            .collect::<Result<_>>()?;
        let report = verify(m as usize, n, &cycles)?;
        if !report.ok() {
            return Err(Error::ConstructionCheck {
                route: "ham-store".into(),
                detail: format!("stored system for m = {m} is invalid: {}", report.summary()),
            });
        }
        Ok(Some(cycles))
    }

    pub fn insert(&mut self, m: u32, cycles: &[RotCycle]) {
        self.entries.insert(
            m.to_string(),
            cycles.iter().map(|c| c.vertices().to_vec()).collect(),
        );
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.entries)?;
        std::fs::write(path, text)?;
        Ok(())
    }
}

/// Searches for a cyclic hamiltonian cycle system of `K_m - I` within the
/// given wall-clock budget.
///
/// Orders ruled out by the feasibility test are refused immediately with
/// [`Error::NoHamSystem`]; running out of budget is [`Error::BudgetExceeded`]
/// and says nothing about existence.
pub fn ham_search(m: u32, budget: Duration) -> Result<Vec<RotCycle>> {
    let params = Params::new(m, 1)?;
    let decision = feasible(params);
    if !decision.feasible {
        return Err(Error::NoHamSystem {
            m,
            reason: decision.reason,
        });
    }
    match dfs_decompose(m, m, Some(Instant::now() + budget))? {
        SearchOutcome::Found(cycles) => Ok(cycles),
        SearchOutcome::Exhausted => Err(Error::NoHamSystem {
            m,
            reason: "exhaustive search found no system".into(),
        }),
        SearchOutcome::Deadline => Err(Error::BudgetExceeded {
            m,
            budget_secs: budget.as_secs(),
        }),
    }
}

/// Produces a cyclic hamiltonian cycle system of `K_m - I`, consulting the
/// builtin store, then the cache file (if any), then [`ham_search`] with
/// the default budget. Fresh finds are appended to the cache file.
pub fn ham_system_with_cache(m: u32, cache: Option<&Path>) -> Result<Vec<RotCycle>> {
    let params = Params::new(m, 1)?;
    let decision = feasible(params);
    if !decision.feasible {
        return Err(Error::NoHamSystem {
            m,
            reason: decision.reason,
        });
    }
    if let Some(cycles) = HamStore::builtin()?.get(m)? {
        return Ok(cycles);
    }
    if let Some(path) = cache {
        if path.exists() {
            if let Some(cycles) = HamStore::from_file(path)?.get(m)? {
                return Ok(cycles);
            }
        }
    }
    let cycles = ham_search(m, DEFAULT_BUDGET)?;
    if let Some(path) = cache {
        let mut store = if path.exists() {
            HamStore::from_file(path)?
        } else {
            HamStore::default()
        };
        store.insert(m, &cycles);
        store.save(path)?;
    }
    Ok(cycles)
}

/// [`ham_system_with_cache`] with the cache file taken from `CCS_CACHE`.
pub fn ham_system(m: u32) -> Result<Vec<RotCycle>> {
    match std::env::var_os(CACHE_ENV) {
        Some(path) => ham_system_with_cache(m, Some(Path::new(&path))),
        None => ham_system_with_cache(m, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    #[test]
    fn search_succeeds_at_small_orders() {
        for m in [4u32, 12, 20] {
            let cycles = ham_search(m, DEFAULT_BUDGET).unwrap();
            let report = verify(m as usize, ord(m), &cycles).unwrap();
            assert!(report.ok(), "m = {m}: {}", report.summary());
            assert_eq!(report.expanded_cycles as u64, (m as u64 - 2) / 2);
        }
    }

    #[test]
    fn search_refuses_infeasible_orders() {
        for m in [8u32, 16, 24, 6, 14, 22] {
            match ham_search(m, DEFAULT_BUDGET) {
                Err(Error::NoHamSystem { m: got, .. }) => assert_eq!(got, m),
                other => panic!("expected refusal for m = {m}, got {other:?}"),
            }
        }
    }

    #[test]
    fn search_refuses_twice_odd_prime_powers() {
        for m in [10u32, 18, 26, 34, 50] {
            match ham_search(m, DEFAULT_BUDGET) {
                Err(Error::NoHamSystem { m: got, reason }) => {
                    assert_eq!(got, m);
                    assert!(reason.contains("prime power"), "{reason}");
                }
                other => panic!("expected refusal for m = {m}, got {other:?}"),
            }
        }
    }

    #[test]
    fn builtin_store_entries_verify() {
        let store = HamStore::builtin().unwrap();
        let mut orders = store.orders();
        orders.sort_unstable();
        assert_eq!(orders, vec![4, 12, 20, 28]);
        for m in orders {
            let cycles = store.get(m).unwrap().unwrap();
            assert_eq!(cycles[0].len(), m as usize);
        }
    }

    #[test]
    fn cache_file_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = dir.path().join("systems.json");
        let cycles = ham_search(12, DEFAULT_BUDGET).unwrap();
        let mut store = HamStore::default();
        store.insert(12, &cycles);
        store.save(&cache).unwrap();
        let got = HamStore::from_file(&cache).unwrap().get(12).unwrap().unwrap();
        let report = verify(12, ord(12), &got).unwrap();
        assert!(report.ok());
        let via = ham_system_with_cache(12, Some(&cache)).unwrap();
        assert!(verify(12, ord(12), &via).unwrap().ok());
    }

    #[test]
    fn store_rejects_corrupt_entry() {
        let mut store = HamStore::default();
        // An orbit of (0, 2, ..., 14) never covers odd lengths; storing it
        // as the whole system for m = 16 must fail verification.
        let c = RotCycle::new((0..16).step_by(2).map(|v| v as u32).collect(), ord(16)).unwrap();
        store.entries.insert("16".into(), vec![c.vertices().to_vec()]);
        match store.get(16) {
            Err(Error::ConstructionCheck { route, .. }) => assert_eq!(route, "ham-store"),
            other => panic!("expected verification failure, got {other:?}"),
        }
    }
}
