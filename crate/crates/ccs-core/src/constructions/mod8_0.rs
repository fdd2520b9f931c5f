//! Constructions for m ≡ 0 (mod 8), where systems exist exactly for even t.

use super::{Pieces, SetBuilder};
use crate::circulant::Order;
use crate::tuples::{fold_odd_even, ArrayRow};
use crate::Result;

/// n = 2m. One cycle doubled up from a half path covers lengths {1, 3} and
/// every even length except 2, the stride-2 loop covers 2, and two-edge
/// paths pair off the remaining odd lengths.
pub(super) fn t_two(m: u32) -> Result<Pieces> {
    let n = Order::new(2 * m)?;
    let mut b = SetBuilder::new(n);
    let r = i64::from(m / 8);

    b.push_path(&half_path(r), "halved-zigzag")?;

    let loop2: Vec<i64> = (0..i64::from(m)).map(|v| 2 * v).collect();
    b.push_cycle(&loop2, "stride-loop")?;

    for i in 0..r - 1 {
        b.push_path(&[0, 9 + 8 * i, 4], "two-step-orbit")?;
        b.push_path(&[0, 11 + 8 * i, 4], "two-step-orbit")?;
    }
    b.push_path(&[0, 8 * r - 3, -4], "two-step-orbit")?;

    Ok(b.finish())
}

/// The half path from 0 to m = 8r: an alternating run through ±3, ±7, ...,
/// ±(4r - 1), then a tail whose steps use up 1 and the multiples of 4 up
/// to 8r - 4, with one step of length 4r + 4 or 12r - 4 closing the gap.
fn half_path(r: i64) -> Vec<i64> {
    let mut vertices = vec![0i64];
    for j in 0..r {
        vertices.push(-(4 * j + 3));
        vertices.push(4 * j + 3);
    }
    let mut steps: Vec<i64> = Vec::new();
    if r == 1 {
        steps.extend([4, 1]);
    } else {
        let odd = r % 2 == 1;
        steps.extend([if odd { 4 * r } else { -4 * r }, -4, 1]);
        let mut sign = 1;
        for mag in (8..=4 * r - 4).step_by(4) {
            steps.push(sign * mag);
            sign = -sign;
        }
        let mut sign = if odd { -1 } else { 1 };
        for mag in (4 * r + 8..=8 * r - 4).step_by(4) {
            steps.push(sign * mag);
            sign = -sign;
        }
        steps.push(if odd { 4 * r + 4 } else { 12 * r - 4 });
    }
    let mut cur = 4 * r - 1;
    for d in steps {
        cur += d;
        vertices.push(cur);
    }
    vertices
}

/// n = 2mk for t = 2k, k >= 2: the n = 2m set lifted by k covers the
/// multiples of k, and k - 1 arithmetic rows cover everything else.
pub(super) fn t_even(m: u32, t: u32) -> Result<Pieces> {
    let k = t / 2;
    let n = Order::new(m * t)?;
    let mut b = SetBuilder::new(n);
    b.push_lifted(t_two(m)?, k)?;
    let mut rows = Vec::new();
    for i in 1..u64::from(k) {
        let vals: Vec<u64> = (0..u64::from(m)).map(|j| j * u64::from(k) + i).collect();
        rows.push(ArrayRow::new(vals)?);
    }
    b.push_rows(rows, &fold_odd_even(m as usize)?, "row-fold")?;
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_path_ends_at_m_for_each_width() {
        for r in 1..=12i64 {
            let path = half_path(r);
            assert_eq!(path.len() as i64, 4 * r + 1, "r = {r}");
            assert_eq!(*path.last().unwrap(), 8 * r, "r = {r}");
        }
    }

    #[test]
    fn half_path_matches_worked_small_cases() {
        assert_eq!(half_path(1), vec![0, -3, 3, 7, 8]);
        assert_eq!(half_path(2), vec![0, -3, 3, -7, 7, -1, -5, -4, 16]);
        assert_eq!(
            half_path(3),
            vec![0, -3, 3, -7, 7, -11, 11, 23, 19, 20, 28, 8, 24]
        );
    }
}
