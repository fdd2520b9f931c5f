//! Existence decision for cyclic m-cycle systems of `K_{mt} - I`.
//!
//! For even `m >= 4` and `t >= 1`, a cyclic m-cycle system of the complete
//! graph on `mt` vertices minus a 1-factor exists exactly when:
//!
//! * `m ≡ 0 (mod 8)`: `t ≡ 0, 2 (mod 4)`,
//! * `m ≡ 2 (mod 8)`: `t ≡ 0, 1 (mod 4)`, except `t = 1` when `m` is twice
//!   an odd prime power,
//! * `m ≡ 4 (mod 8)`: every `t`,
//! * `m ≡ 6 (mod 8)`: `t ≡ 0, 3 (mod 4)`.
//!
//! The necessity side rests on a counting argument: rotation partitions the
//! cycles of a system into orbits, each orbit covers whole length classes,
//! and tallying odd- and even-length classes modulo 2 pins down the parity
//! of `t`. [`parity_constraint`] exposes that tally; every feasible pair
//! must satisfy it.

use crate::{Error, Result};

/// Problem size: cycles of length `m`, `t` of each length class family,
/// `n = mt` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub m: u32,
    pub t: u32,
}

impl Params {
    pub fn new(m: u32, t: u32) -> Result<Params> {
        if m < 4 || m % 2 != 0 {
            return Err(Error::BadParams(format!(
                "cycle length must be even and at least 4, got {m}"
            )));
        }
        if t == 0 {
            return Err(Error::BadParams("t must be at least 1".into()));
        }
        let n = (m as u64) * (t as u64);
        if n > u32::MAX as u64 {
            return Err(Error::BadParams(format!("order {n} too large")));
        }
        Ok(Params { m, t })
    }

    pub fn n(&self) -> u32 {
        self.m * self.t
    }
}

/// What the length-class parity count forces on `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityConstraint {
    Unconstrained,
    RequiresEvenT,
    RequiresOddT,
    /// Both parities are forced at once; no system exists at this order.
    Impossible,
}

impl ParityConstraint {
    /// Whether a given `t` satisfies the constraint.
    pub fn admits(&self, t: u32) -> bool {
        match self {
            ParityConstraint::Unconstrained => true,
            ParityConstraint::RequiresEvenT => t % 2 == 0,
            ParityConstraint::RequiresOddT => t % 2 == 1,
            ParityConstraint::Impossible => false,
        }
    }
}

/// Parity forced on `t` by counting odd and even length classes of
/// `K_{mt} - I`.
///
/// The graph has length classes `1 ..= mt/2 - 1` (the class `mt/2` is the
/// removed 1-factor). An orbit of cycles covers each of its length classes
/// with all `n` edges, and the per-orbit tallies force: an odd number of
/// even classes requires even `t`, an odd number of odd classes requires
/// odd `t`.
pub fn parity_constraint(params: Params) -> ParityConstraint {
    let n = params.n() as u64;
    let classes = n / 2 - 1;
    let evens = classes / 2;
    let odds = classes - evens;
    match (evens % 2 == 1, odds % 2 == 1) {
        (false, false) => ParityConstraint::Unconstrained,
        (true, false) => ParityConstraint::RequiresEvenT,
        (false, true) => ParityConstraint::RequiresOddT,
        (true, true) => ParityConstraint::Impossible,
    }
}

/// `Some((p, a))` when `m = 2 * p^a` for an odd prime `p` and `a >= 1`.
pub fn twice_odd_prime_power(m: u32) -> Option<(u32, u32)> {
    if m % 2 != 0 {
        return None;
    }
    let mut h = m / 2;
    if h < 3 || h % 2 == 0 {
        return None;
    }
    let mut p = 3;
    while p * p <= h {
        if h % p == 0 {
            let mut a = 0;
            while h % p == 0 {
                h /= p;
                a += 1;
            }
            return if h == 1 { Some((p, a)) } else { None };
        }
        p += 2;
    }
    Some((h, 1))
}

/// The existence decision with the clause that settled it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub params: Params,
    pub feasible: bool,
    /// Residue class of `m` the decision falls under, e.g. `"m ≡ 2 (mod 8)"`.
    pub clause: String,
    pub reason: String,
    pub parity: ParityConstraint,
}

/// Decides existence for the given parameters.
pub fn feasible(params: Params) -> Decision {
    let Params { m, t } = params;
    let parity = parity_constraint(params);
    let clause = format!("m ≡ {} (mod 8)", m % 8);
    let (feasible, reason) = match m % 8 {
        0 => (
            t % 2 == 0,
            if t % 2 == 0 {
                format!("t = {t} is even")
            } else {
                format!("t = {t} is odd; this residue class needs even t")
            },
        ),
        2 => {
            if t % 4 > 1 {
                (
                    false,
                    format!("t = {t} ≡ {} (mod 4); this residue class needs t ≡ 0, 1 (mod 4)", t % 4),
                )
            } else if t == 1 {
                match twice_odd_prime_power(m) {
                    Some((p, a)) => (
                        false,
                        format!("t = 1 and m = 2·{p}^{a}; no cyclic hamiltonian system at twice an odd prime power"),
                    ),
                    None => (true, "t = 1 and m is not twice an odd prime power".into()),
                }
            } else {
                (true, format!("t = {t} ≡ {} (mod 4)", t % 4))
            }
        }
        4 => (true, format!("every t is admissible; t = {t}")),
        6 => {
            let ok = t % 4 == 0 || t % 4 == 3;
            (
                ok,
                if ok {
                    format!("t = {t} ≡ {} (mod 4)", t % 4)
                } else {
                    format!("t = {t} ≡ {} (mod 4); this residue class needs t ≡ 0, 3 (mod 4)", t % 4)
                },
            )
        }
        _ => unreachable!("m validated even"),
    };
    Decision {
        params,
        feasible,
        clause,
        reason,
        parity,
    }
}

/// Convenience wrapper validating parameters and returning the bare bool.
pub fn is_feasible(m: u32, t: u32) -> Result<bool> {
    Ok(feasible(Params::new(m, t)?).feasible)
}
