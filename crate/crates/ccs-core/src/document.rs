//! JSON interchange format for generated and externally claimed systems.
//!
//! A [`SystemDocument`] is self-describing: parameters, the base cycles
//! with their derived data, and optionally the full orbit expansion.
//! Serialization is deterministic (sorted cycles, fixed field order), so a
//! document written twice from the same system is byte-identical.

use serde::{Deserialize, Serialize};

use crate::circulant::{length_set, Order, RotCycle};
use crate::constructions::GeneratingSet;
use crate::feasibility::Params;
use crate::orbits::{expand_orbit, orbit_length};
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

/// One base cycle and the data derived from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    /// Distinct edge lengths, ascending.
    pub lengths: Vec<u32>,
    pub orbit_length: u32,
    /// Route tag of the construction step that produced the cycle.
    pub provenance: String,
    /// Canonical rotation of the cycle.
    pub vertices: Vec<u32>,
}

/// A claimed cyclic m-cycle system of `K_n - I` in serialized form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemDocument {
    /// Every cycle of the system, present only when expansion was asked
    /// for; consumers normally re-expand from the generating set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expanded: Option<Vec<Vec<u32>>>,
    pub format_version: u32,
    pub generating_set: Vec<CycleRecord>,
    pub m: u32,
    pub n: u32,
    pub t: u32,
}

impl SystemDocument {
    pub fn from_set(set: &GeneratingSet, expand: bool) -> SystemDocument {
        let n = set.order();
        let mut records: Vec<CycleRecord> = set
            .cycles
            .iter()
            .zip(&set.routes)
            .map(|(cycle, route)| CycleRecord {
                lengths: length_set(cycle, n).into_iter().map(|l| l.0).collect(),
                orbit_length: orbit_length(cycle, n),
                provenance: route.clone(),
                vertices: cycle.canonical(),
            })
            .collect();
        records.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        let expanded = expand.then(|| {
            let mut all: Vec<Vec<u32>> = set
                .cycles
                .iter()
                .flat_map(|c| expand_orbit(c, n))
                .map(|c| c.canonical())
                .collect();
            all.sort();
            all
        });
        SystemDocument {
            expanded,
            format_version: FORMAT_VERSION,
            generating_set: records,
            m: set.params.m,
            n: set.params.n(),
            t: set.params.t,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<SystemDocument> {
        serde_json::from_str(text).map_err(|e| Error::BadDocument(e.to_string()))
    }

    pub fn params(&self) -> Result<Params> {
        let params = Params::new(self.m, self.t)?;
        if params.n() != self.n {
            return Err(Error::BadDocument(format!(
                "n = {} does not match m·t = {}",
                self.n,
                params.n()
            )));
        }
        Ok(params)
    }

    /// The base cycles, rebuilt and revalidated from the raw vertex lists.
    pub fn cycles(&self) -> Result<Vec<RotCycle>> {
        let n = Order::new(self.n)?;
        self.generating_set
            .iter()
            .map(|rec| {
                RotCycle::new(rec.vertices.clone(), n)
                    .map_err(|e| Error::BadDocument(e.to_string()))
            })
            .collect()
    }

    /// Checks that every derived field matches what the vertex lists imply.
    /// This is a syntactic audit; whether the cycles form a system is the
    /// verifier's business.
    pub fn check_consistency(&self) -> Result<()> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::BadDocument(format!(
                "format version {} is not {FORMAT_VERSION}",
                self.format_version
            )));
        }
        self.params()?;
        let n = Order::new(self.n)?;
        for (idx, rec) in self.generating_set.iter().enumerate() {
            if rec.vertices.len() != self.m as usize {
                return Err(Error::BadDocument(format!(
                    "cycle {idx} has {} vertices, expected m = {}",
                    rec.vertices.len(),
                    self.m
                )));
            }
            let cycle = RotCycle::new(rec.vertices.clone(), n)
                .map_err(|e| Error::BadDocument(format!("cycle {idx}: {e}")))?;
            let lengths: Vec<u32> = length_set(&cycle, n).into_iter().map(|l| l.0).collect();
            if lengths != rec.lengths {
                return Err(Error::BadDocument(format!(
                    "cycle {idx} lists lengths {:?} but has {lengths:?}",
                    rec.lengths
                )));
            }
            let orbit = orbit_length(&cycle, n);
            if orbit != rec.orbit_length {
                return Err(Error::BadDocument(format!(
                    "cycle {idx} lists orbit length {} but has {orbit}",
                    rec.orbit_length
                )));
            }
        }
        if let Some(expanded) = &self.expanded {
            let total: u64 = self
                .generating_set
                .iter()
                .map(|rec| u64::from(rec.orbit_length))
                .sum();
            if expanded.len() as u64 != total {
                return Err(Error::BadDocument(format!(
                    "expansion lists {} cycles but the orbits sum to {total}",
                    expanded.len()
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build;
    use crate::verifier::verify;

    fn doc(m: u32, t: u32, expand: bool) -> SystemDocument {
        let set = build(Params::new(m, t).unwrap()).unwrap();
        SystemDocument::from_set(&set, expand)
    }

    #[test]
    fn roundtrip_is_byte_stable() {
        let d = doc(8, 2, true);
        let text = d.to_json();
        let back = SystemDocument::from_json(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn field_order_is_fixed() {
        let d = doc(8, 2, false);
        let text = d.to_json();
        assert!(text.starts_with("{\n  \"format_version\""));
        let expanded = doc(8, 2, true).to_json();
        assert!(expanded.starts_with("{\n  \"expanded\""));
    }

    #[test]
    fn reconstructed_cycles_verify() {
        let d = doc(6, 4, false);
        d.check_consistency().unwrap();
        let cycles = d.cycles().unwrap();
        let n = Order::new(d.n).unwrap();
        let report = verify(d.m as usize, n, &cycles).unwrap();
        assert!(report.ok());
    }

    #[test]
    fn tampered_documents_are_rejected() {
        let mut d = doc(8, 2, false);
        d.generating_set[0].orbit_length += 1;
        assert!(d.check_consistency().is_err());

        let mut d = doc(8, 2, false);
        d.n += 2;
        assert!(d.check_consistency().is_err());

        let mut d = doc(8, 2, true);
        d.expanded.as_mut().unwrap().pop();
        assert!(d.check_consistency().is_err());

        let mut d = doc(8, 2, false);
        d.generating_set[0].vertices = vec![0, 1, 2];
        assert!(d.check_consistency().is_err());

        assert!(SystemDocument::from_json("{\"m\": 8}").is_err());
    }

    #[test]
    fn expansion_lists_every_cycle() {
        let d = doc(8, 2, true);
        let expanded = d.expanded.as_ref().unwrap();
        assert_eq!(expanded.len(), 14);
        d.check_consistency().unwrap();
    }
}
