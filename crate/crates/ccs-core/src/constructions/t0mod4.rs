//! Constructions for m ≡ 2 (mod 4) and t ≡ 0 (mod 4).

use super::{Pieces, SetBuilder};
use crate::circulant::{Order, RotCycle};
use crate::tuples::{fold_even_odd, ArrayRow};
use crate::Result;

/// n = 4m: one long signed tuple covers {1, 2, 3} and the lengths
/// ≡ 2 (mod 4) and ≡ 0 (mod 4) except 4, the stride-4 loop covers 4, and
/// two-edge paths pair off the odd lengths from 5 up.
pub(super) fn t_four(m: u32) -> Result<Pieces> {
    t_four_inner(m, true)
}

/// The t = 4 family as first published. At m = 6 its single tail path
/// leaves the length classes {7, 9} uncovered; [`t_four`] adds the second
/// tail path that closes the gap. Kept verbatim so the defect stays pinned
/// by a test.
pub fn t_four_unpatched(m: u32) -> Result<Vec<RotCycle>> {
    Ok(t_four_inner(m, false)?.0)
}

fn t_four_inner(m: u32, patched: bool) -> Result<Pieces> {
    let n = Order::new(4 * m)?;
    let mut b = SetBuilder::new(n);
    let mi = i64::from(m);

    let mut entries = vec![1i64, -2];
    let mut sign = 1;
    for mag in (6..=2 * mi - 2).step_by(4) {
        entries.push(sign * mag);
        sign = -sign;
    }
    entries.push(-3);
    let mut sign = 1;
    for mag in (8..=2 * mi - 8).step_by(4) {
        entries.push(sign * mag);
        sign = -sign;
    }
    entries.push(2 * mi - 4);
    b.push_tuple(entries, "long-run-tuple")?;

    let loop4: Vec<i64> = (0..mi).map(|v| 4 * v).collect();
    b.push_cycle(&loop4, "stride-loop")?;

    for i in 0..i64::from(m / 8) {
        b.push_path(&[0, 13 + 16 * i, 8], "two-step-orbit")?;
        b.push_path(&[0, 15 + 16 * i, 8], "two-step-orbit")?;
        b.push_path(&[0, 17 + 16 * i, 8], "two-step-orbit")?;
        b.push_path(&[0, 19 + 16 * i, 8], "two-step-orbit")?;
    }
    if m % 8 == 6 {
        if patched || m > 6 {
            b.push_path(&[0, 2 * mi - 1, -8], "two-step-orbit")?;
            b.push_path(&[0, 2 * mi - 3, -8], "two-step-orbit")?;
        } else {
            b.push_path(&[0, 13, 8], "two-step-orbit")?;
        }
    }
    Ok(b.finish())
}

/// t = 4k, k >= 2: the t = 4 set lifted by k plus 2k - 2 rows whose quads
/// telescope.
pub(super) fn t_multiple(m: u32, t: u32) -> Result<Pieces> {
    let k = u64::from(t) / 4;
    let n = Order::new(m * t)?;
    let mut b = SetBuilder::new(n);
    b.push_lifted(t_four(m)?, k as u32)?;
    let mut rows = Vec::new();
    for i in (1..=2 * k).filter(|&i| i != k && i != 2 * k) {
        let vals: Vec<u64> = (1..=u64::from(m))
            .map(|j| match j {
                1 => i,
                2 => 4 * k - i,
                _ => (2 * j - 2) * k + i,
            })
            .collect();
        rows.push(ArrayRow::new(vals)?);
    }
    b.push_rows(rows, &fold_even_odd(m as usize)?, "row-fold")?;
    Ok(b.finish())
}
