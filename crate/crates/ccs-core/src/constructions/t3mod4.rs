//! Constructions for m ≡ 6 (mod 8) and t ≡ 3 (mod 4).

use super::{complement, Pieces, SetBuilder};
use crate::circulant::Order;
use crate::tuples::{fold_six, fold_three_head, ArrayRow};
use crate::{Error, Result};

/// t = 3, any m = 8r + 6. Two-edge paths with a power-of-two stride pair
/// off 4r lengths, one chained tuple walks through {1, 3, 5, 6, 7, 8} and
/// the remaining adjacent pairs, and the path (0, 2, 6) covers {2, 4}.
pub(super) fn t_three(m: u32) -> Result<Pieces> {
    let r = i64::from((m - 6) / 8);
    let n = Order::new(3 * m)?;
    let mut b = SetBuilder::new(n);
    let mut covered: Vec<u64> = Vec::new();
    if r > 0 {
        let q = (2 * r - 2) / 4;
        let bb = (2 * r - 2) % 4;
        let mut a = 1u32;
        while (1i64 << (a - 1)) < q + 1 {
            a += 1;
        }
        if 3 * (1i64 << a) > 18 * q + 9 + 5 * bb {
            return Err(Error::ConstructionCheck {
                route: "two-step-orbit".to_string(),
                detail: format!("no translate stride fits r = {r}"),
            });
        }
        let step = 3 * (1i64 << a);
        let d = |i: i64, j: i64| 6 * (2 * r - i) + j;
        let mut spans: Vec<(i64, i64)> = vec![(0, 7), (0, 8)];
        for i in 0..q {
            for j in 1..=4 {
                spans.push((i, j));
            }
        }
        for j in (5 - bb)..=4 {
            spans.push((q, j));
        }
        for &(i, j) in &spans {
            let dd = d(i, j);
            b.push_path(&[0, dd, step], "two-step-orbit")?;
            covered.push(dd as u64);
            covered.push((dd - step) as u64);
        }
    }
    let leftover = complement(n.get(), &covered)?;
    let head: Vec<u64> = (1..=8).collect();
    if leftover.len() != 8 + 8 * r as usize || leftover[..8] != head[..] {
        return Err(Error::ConstructionCheck {
            route: "chain-tuple".to_string(),
            detail: format!("leftover lengths {leftover:?} do not start with 1..8"),
        });
    }
    let pairs = &leftover[8..];
    for c in pairs.chunks(2) {
        if c[1] != c[0] + 1 {
            return Err(Error::ConstructionCheck {
                route: "chain-tuple".to_string(),
                detail: format!("leftover pair {c:?} is not adjacent"),
            });
        }
    }
    let bvals: Vec<i64> = pairs.chunks(2).map(|c| c[0] as i64).collect();
    let mut entries = vec![1i64, -3, 6, -7];
    let mut sign = 1;
    for &v in &bvals {
        entries.push(sign * v);
        sign = -sign;
    }
    let mut sign = -1;
    for &v in bvals.iter().rev().skip(1) {
        entries.push(sign * (v + 1));
        sign = -sign;
    }
    entries.push(8);
    entries.push(-5);
    if let Some(&last) = bvals.last() {
        entries.push(last + 1);
    }
    b.push_tuple(entries, "chain-tuple")?;
    b.push_path(&[0, 2, 6], "two-step-orbit")?;
    Ok(b.finish())
}

pub(super) fn m6(t: u32) -> Result<Pieces> {
    let s = u64::from(t - 3) / 4;
    let ti = i64::from(t);
    let n = Order::new(6 * t)?;
    let mut b = SetBuilder::new(n);
    for i in 1..=4 {
        b.push_path(&[0, 3 * ti - i, 2 * ti], "two-step-orbit")?;
    }
    let leftover: Vec<u64> = (1..=4 * s - 2).chain(4 * s + 3..=12 * s + 4).collect();
    let rows = super::array_rows(6, s as usize, leftover)?;
    b.push_rows(rows, &fold_six(), "row-fold")?;
    Ok(b.finish())
}

pub(super) fn m14(t: u32) -> Result<Pieces> {
    let s = u64::from(t - 3) / 4;
    let ti = i64::from(t);
    let n = Order::new(14 * t)?;
    let mut b = SetBuilder::new(n);
    let pattern = fold_three_head(14)?;
    if t == 7 {
        // The i = 7 path would run 0, 42, 14 with 42 ≡ 0 (mod 14), so its
        // translates collide; worse, 28 and 42 are both multiples of 14, so
        // no cycle with a fourteen-fold orbit covers them. A substitute
        // path takes {38, 24} and two bespoke rows absorb 28 and 42.
        for i in 1..=10 {
            if i == 7 {
                continue;
            }
            b.push_path(&[0, 7 * ti - i, 2 * ti], "two-step-orbit")?;
        }
        b.push_path(&[0, 38, 14], "two-step-orbit")?;
        let rows = vec![
            ArrayRow::new(vec![1, 2, 3, 4, 9, 11, 13, 14, 15, 16, 21, 22, 35, 36])?,
            ArrayRow::new(vec![5, 6, 7, 8, 10, 12, 17, 18, 19, 20, 23, 28, 37, 42])?,
        ];
        b.push_rows(rows, &pattern, "row-fold")?;
        return Ok(b.finish());
    }
    for i in 1..=10 {
        b.push_path(&[0, 7 * ti - i, 2 * ti], "two-step-orbit")?;
    }
    let leftover: Vec<u64> = (1..=20 * s + 4).chain(20 * s + 15..=28 * s + 10).collect();
    let rows = super::array_rows(14, s as usize, leftover)?;
    b.push_rows(rows, &pattern, "row-fold")?;
    Ok(b.finish())
}

/// m = 8r + 6, r >= 2, t = 4s + 3, s >= 1. The count 6r + 4 of paired
/// lengths splits as (t - 1)ℓ + (2t - 2)q + b with ℓ in {0, 1}; the paths
/// stride by 2t and the leftover feeds 2s rows.
pub(super) fn general(m: u32, t: u32) -> Result<Pieces> {
    let r = i64::from((m - 6) / 8);
    let s = i64::from(t - 3) / 4;
    let ti = i64::from(t);
    let n = Order::new(m * t)?;
    let mut b = SetBuilder::new(n);
    let target = 6 * r + 4;
    let ell = i64::from(target >= ti - 1);
    let rem = target - (ti - 1) * ell;
    let q = rem / (2 * ti - 2);
    let bb = rem % (2 * ti - 2);
    let d = |i: i64, j: i64| 2 * ti * (2 * r - 2 * i - 1) + j;
    let mut spans: Vec<(i64, i64)> = Vec::new();
    if ell == 1 {
        for j in 1..=ti - 1 {
            spans.push((-1, j));
        }
    }
    for i in 0..q {
        for j in 1..=2 * ti - 2 {
            spans.push((i, j));
        }
    }
    for j in (2 * ti - 1 - bb)..=2 * ti - 2 {
        spans.push((q, j));
    }
    let mut covered = Vec::new();
    for &(i, j) in &spans {
        let dd = d(i, j);
        b.push_path(&[0, dd, 2 * ti], "two-step-orbit")?;
        covered.push(dd as u64);
        covered.push((dd - 2 * ti) as u64);
    }
    let leftover = complement(n.get(), &covered)?;
    let rows = super::array_rows(m as usize, s as usize, leftover)?;
    b.push_rows(rows, &fold_three_head(m as usize)?, "row-fold")?;
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_triple_t_tuple_matches_hand_expansion() {
        let (cycles, routes) = t_three(14).unwrap();
        assert_eq!(routes.iter().filter(|r| *r == "chain-tuple").count(), 1);
        let n = Order::new(42).unwrap();
        let idx = routes.iter().position(|r| r == "chain-tuple").unwrap();
        let expected = crate::tuples::DifferenceTuple::new(
            vec![1, -3, 6, -7, 9, -11, 15, -17, -16, 12, -10, 8, -5, 18],
            n,
        )
        .to_cycle()
        .unwrap();
        assert_eq!(cycles[idx], expected);
    }
}
