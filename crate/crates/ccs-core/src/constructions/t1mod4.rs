//! Constructions for m ≡ 2 (mod 8) and t ≡ 1 (mod 4), t > 1.
//!
//! Every case pairs the lengths near the top of the range off into
//! two-edge paths and folds the remaining lengths through array rows.

use super::{complement, Pieces, SetBuilder};
use crate::circulant::Order;
use crate::tuples::fold_three_head;
use crate::{Error, Result};

pub(super) fn m10(t: u32) -> Result<Pieces> {
    let s = u64::from(t - 1) / 4;
    let ti = i64::from(t);
    let n = Order::new(10 * t)?;
    let mut b = SetBuilder::new(n);
    b.push_path(&[0, 5 * ti - 1, 2 * ti], "two-step-orbit")?;
    b.push_path(&[0, 5 * ti - 2, 2 * ti], "two-step-orbit")?;
    let leftover: Vec<u64> = (1..=12 * s).chain(12 * s + 3..=20 * s + 2).collect();
    let rows = super::array_rows(10, s as usize, leftover)?;
    b.push_rows(rows, &fold_three_head(10)?, "row-fold")?;
    Ok(b.finish())
}

/// m = 8r + 2, r >= 2, t = 5. The path count 2r splits as 6q + 4 + b with
/// b in {0, 2, 4}; the translate stride is 5 times a power of two chosen
/// so no path collides with its own translates.
pub(super) fn t_five(m: u32) -> Result<Pieces> {
    let r = i64::from((m - 2) / 8);
    let n = Order::new(5 * m)?;
    let mut b = SetBuilder::new(n);
    let q = (2 * r - 4) / 6;
    let bb = (2 * r - 4) % 6;
    let mut a = 1u32;
    while (1i64 << (a - 1)) < q + 2 {
        a += 1;
    }
    if (1i64 << (a - 1)) > 5 * q + 2 {
        return Err(Error::ConstructionCheck {
            route: "two-step-orbit".to_string(),
            detail: format!("no translate stride fits r = {r}"),
        });
    }
    let step = 5 * (1i64 << a);
    let d = |i: i64, j: i64| 10 * (2 * r - i) + j;
    let mut spans: Vec<(i64, i64)> = (1..=4).map(|j| (0, j)).collect();
    for i in 1..=q {
        for j in 1..=6 {
            spans.push((i, j));
        }
    }
    for j in (7 - bb)..=6 {
        spans.push((q + 1, j));
    }
    let mut covered = Vec::new();
    for &(i, j) in &spans {
        let dd = d(i, j);
        b.push_path(&[0, dd, step], "two-step-orbit")?;
        covered.push(dd as u64);
        covered.push((dd - step) as u64);
    }
    let leftover = complement(n.get(), &covered)?;
    let rows = super::array_rows(m as usize, 1, leftover)?;
    b.push_rows(rows, &fold_three_head(m as usize)?, "row-fold")?;
    Ok(b.finish())
}

/// m = 8r + 2, r >= 2, t = 4s + 1, s >= 2. Half of r, minus parity, splits
/// as qs + b; the paths stride by 4t and the leftover feeds 2s rows.
pub(super) fn general(m: u32, t: u32) -> Result<Pieces> {
    let r = i64::from((m - 2) / 8);
    let s = i64::from(t - 1) / 4;
    let ti = i64::from(t);
    let n = Order::new(m * t)?;
    let mut b = SetBuilder::new(n);
    let w = r / 2;
    let delta = r % 2;
    let q = w / s;
    let bb = w % s;
    let d = |i: i64, j: i64| 4 * (r - 2 * i) * ti + j;
    let mut spans: Vec<(i64, i64)> = Vec::new();
    for i in 0..q {
        for j in 1..=ti - 1 {
            spans.push((i, j));
        }
    }
    for j in (ti - 4 * bb - 2 * delta)..=ti - 1 {
        spans.push((q, j));
    }
    let mut covered = Vec::new();
    for &(i, j) in &spans {
        let dd = d(i, j);
        b.push_path(&[0, dd, 4 * ti], "two-step-orbit")?;
        covered.push(dd as u64);
        covered.push((dd - 4 * ti) as u64);
    }
    let leftover = complement(n.get(), &covered)?;
    let rows = super::array_rows(m as usize, s as usize, leftover)?;
    b.push_rows(rows, &fold_three_head(m as usize)?, "row-fold")?;
    Ok(b.finish())
}
