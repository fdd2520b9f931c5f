//! Regenerates the bundled hamiltonian generating sets.
//!
//! Searches each order that ships with the crate and rewrites
//! `data/ham_systems.json`. Run from the workspace root with
//! `cargo run --release -p ccs-core --example gen_ham`.

use std::path::Path;
use std::time::{Duration, Instant};

use ccs_core::ham::{ham_search, HamStore};

const ORDERS: [u32; 4] = [4, 12, 20, 28];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/ham_systems.json");
    let mut store = HamStore::builtin()?;
    for m in ORDERS {
        let start = Instant::now();
        let cycles = ham_search(m, Duration::from_secs(600))?;
        store.insert(m, &cycles);
        println!("m = {m}: {} base cycles in {:.2?}", cycles.len(), start.elapsed());
    }
    store.save(&path)?;
    println!("wrote {}", path.display());
    Ok(())
}
