//! Constructions for m ≡ 4 (mod 8), where systems exist for every t.
//!
//! Both cases ride on a hamiltonian generating set for the n = m system:
//! lifting it by t covers the multiples of a stride, arithmetic rows cover
//! the bulk, and for even t a run of two-edge paths mops up the lengths
//! adjacent to the multiples of 4k.

use super::{ham_pieces, Pieces, SetBuilder};
use crate::circulant::Order;
use crate::tuples::{fold_odd_even, ArrayRow};
use crate::Result;

/// t = 2k + 1, k >= 1; t = 1 itself is served straight from the
/// hamiltonian store.
pub(super) fn t_odd(m: u32, t: u32) -> Result<Pieces> {
    let k = u64::from(t - 1) / 2;
    let n = Order::new(m * t)?;
    let mut b = SetBuilder::new(n);
    b.push_lifted(ham_pieces(m)?, t)?;
    let mut rows = Vec::new();
    for i in 1..=k {
        let vals: Vec<u64> = (0..u64::from(m)).map(|j| j * k + i + j / 2).collect();
        rows.push(ArrayRow::new(vals)?);
    }
    b.push_rows(rows, &fold_odd_even(m as usize)?, "row-fold")?;
    Ok(b.finish())
}

/// t = 2k, k >= 1.
pub(super) fn t_even(m: u32, t: u32) -> Result<Pieces> {
    let k = u64::from(t) / 2;
    let n = Order::new(m * t)?;
    let mut b = SetBuilder::new(n);
    b.push_lifted(ham_pieces(m)?, t)?;
    if k >= 2 {
        let mut rows = Vec::new();
        for i in 1..k {
            let vals: Vec<u64> = (1..=u64::from(m))
                .map(|j| {
                    let off = match j % 4 {
                        1 => 2,
                        2 | 3 => 1,
                        _ => 0,
                    };
                    (j - 1) * k + off + (i - 1)
                })
                .collect();
            rows.push(ArrayRow::new(vals)?);
        }
        b.push_rows(rows, &fold_odd_even(m as usize)?, "row-fold")?;
    }

    let r = m / 4;
    let ki = k as i64;
    // Ascending list 1, 4k - 1, 4k + 1, 8k - 1, ... of the lengths the rows
    // and the lift skip; each path pairs two of them.
    let d = |idx: u32| -> i64 {
        let i = i64::from((idx + 1) / 2);
        if idx % 2 == 1 {
            4 * (i - 1) * ki + 1
        } else {
            4 * i * ki - 1
        }
    };
    if r % 2 == 0 {
        for i in 1..=r {
            let mid = if i % 2 == 1 { d(2 * i + 1) } else { d(2 * i) };
            b.push_path(&[0, mid, 4 * ki], "two-step-orbit")?;
        }
    } else {
        b.push_path(&[0, 1, 4 * ki], "two-step-orbit")?;
        for i in 2..=r {
            let mid = if i % 2 == 0 { d(2 * i + 1) } else { d(2 * i) };
            b.push_path(&[0, mid, 4 * ki], "two-step-orbit")?;
        }
    }
    Ok(b.finish())
}
