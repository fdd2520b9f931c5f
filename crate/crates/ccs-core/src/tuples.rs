//! Difference tuples, sign patterns over array rows, and row conditions.
//!
//! A difference m-tuple `(d_1, ..., d_m)` over `Z_n` satisfies:
//!
//! 1. every `d_i` is an integer (guaranteed by the type),
//! 2. the modulo-n lengths `|d_i|_n` are defined and pairwise distinct,
//! 3. `d_1 + ... + d_m ≡ 0 (mod n)`,
//! 4. the partial sums `d_1 + ... + d_r` for `1 <= r <= m` are pairwise
//!    distinct mod `n`.
//!
//! Its prefix sums then walk a simple m-cycle through 0 whose `n` rotation
//! translates are pairwise edge-disjoint and cover each of the m length
//! classes `|d_i|_n` exactly once.
//!
//! The bulk constructions produce tuples by applying a fixed sign-and-order
//! pattern to a strictly increasing row of integers. A pattern guarantees
//! signed sum 0 over the integers whenever the row satisfies its matching
//! linear row condition; distinctness of partial sums still depends on `n`
//! and is always re-validated at runtime.

use crate::circulant::{mod_length, Order, RotCycle};
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;

/// A difference tuple over `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTuple {
    pub entries: Vec<i64>,
    pub n: Order,
}

/// Per-condition validation outcome with offending indices (0-based).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TupleReport {
    /// Indices whose entry is `≡ 0 (mod n)` and so has no length.
    pub zero_steps: Vec<usize>,
    /// Pairs `(i, j)` with equal modulo-n length, plus that length. An
    /// entry of length exactly `n/2` is its own negation and collides with
    /// itself under translation; it is recorded as the pair `(i, i)`.
    pub repeated_lengths: Vec<(usize, usize, u32)>,
    /// `Σ d_i mod n`; nonzero means the walk does not close.
    pub sum_residue: u32,
    /// Pairs `(r, s)` of prefix lengths with equal partial sums mod n.
    pub partial_sum_collisions: Vec<(usize, usize, u32)>,
}

impl TupleReport {
    pub fn distinct_lengths_ok(&self) -> bool {
        self.zero_steps.is_empty() && self.repeated_lengths.is_empty()
    }

    pub fn sum_ok(&self) -> bool {
        self.sum_residue == 0
    }

    pub fn partial_sums_ok(&self) -> bool {
        self.partial_sum_collisions.is_empty()
    }

    pub fn ok(&self) -> bool {
        self.distinct_lengths_ok() && self.sum_ok() && self.partial_sums_ok()
    }

    fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.zero_steps.is_empty() {
            parts.push(format!("zero-length steps at {:?}", self.zero_steps));
        }
        if !self.repeated_lengths.is_empty() {
            parts.push(format!("repeated lengths {:?}", self.repeated_lengths));
        }
        if self.sum_residue != 0 {
            parts.push(format!("sum ≡ {} (mod n)", self.sum_residue));
        }
        if !self.partial_sum_collisions.is_empty() {
            parts.push(format!(
                "partial sum collisions {:?}",
                self.partial_sum_collisions
            ));
        }
        parts.join("; ")
    }
}

impl DifferenceTuple {
    pub fn new(entries: Vec<i64>, n: Order) -> DifferenceTuple {
        DifferenceTuple { entries, n }
    }

    /// Checks conditions 2-4 and reports every violation.
    pub fn validate(&self) -> TupleReport {
        let n = self.n;
        let mut report = TupleReport::default();

        let mut lengths: Vec<Option<u32>> = Vec::with_capacity(self.entries.len());
        for (i, &d) in self.entries.iter().enumerate() {
            match mod_length(d, n) {
                Ok(l) => lengths.push(Some(l.0)),
                Err(_) => {
                    report.zero_steps.push(i);
                    lengths.push(None);
                }
            }
        }
        let mut first_seen: BTreeMap<u32, usize> = BTreeMap::new();
        for (i, l) in lengths.iter().enumerate() {
            if let Some(l) = l {
                if 2 * l == n.get() {
                    report.repeated_lengths.push((i, i, *l));
                }
                match first_seen.get(l) {
                    Some(&j) => report.repeated_lengths.push((j, i, *l)),
                    None => {
                        first_seen.insert(*l, i);
                    }
                }
            }
        }

        let mut partials = Vec::with_capacity(self.entries.len());
        let mut acc: i64 = 0;
        for &d in &self.entries {
            acc += d;
            partials.push(n.reduce(acc));
        }
        report.sum_residue = *partials.last().unwrap_or(&0);

        let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
        for (r, &p) in partials.iter().enumerate() {
            match seen.get(&p) {
                Some(&q) => report.partial_sum_collisions.push((q + 1, r + 1, p)),
                None => {
                    seen.insert(p, r);
                }
            }
        }
        report
    }

    /// The m-cycle `(0, d_1, d_1 + d_2, ...)` walked by the prefix sums.
    ///
    /// # Errors
    ///
    /// Fails when the tuple is not valid, quoting the violated conditions.
    pub fn to_cycle(&self) -> Result<RotCycle> {
        let report = self.validate();
        if !report.ok() {
            return Err(Error::InvalidTuple(report.summary()));
        }
        let mut vertices = Vec::with_capacity(self.entries.len());
        let mut acc: i64 = 0;
        vertices.push(0u32);
        for &d in &self.entries[..self.entries.len() - 1] {
            acc += d;
            vertices.push(self.n.reduce(acc));
        }
        RotCycle::new(vertices, self.n)
    }
}

/// A strictly increasing row of positive integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayRow {
    values: Vec<u64>,
}

impl ArrayRow {
    pub fn new(values: Vec<u64>) -> Result<ArrayRow> {
        if values.is_empty() {
            return Err(Error::InvalidRow("row is empty".into()));
        }
        if values[0] == 0 {
            return Err(Error::InvalidRow("row entries must be positive".into()));
        }
        for w in values.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidRow(format!(
                    "row not strictly increasing at {} >= {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(ArrayRow { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn width(&self) -> usize {
        self.values.len()
    }

    /// 1-based column access.
    fn col(&self, j: usize) -> u64 {
        self.values[j - 1]
    }
}

/// Linear conditions a row must satisfy for its pattern to sum to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowCondition {
    /// Columns `≡ 0, 1 (mod 4)` and `≡ 2, 3 (mod 4)` have equal sums.
    /// Width `≡ 0 (mod 4)`.
    QuarterBalance,
    /// `a_j + a_{j+3} = a_{j+1} + a_{j+2}` for every `j ≡ 3 (mod 4)` with
    /// `j <= m - 3`, and `a_1 + a_2 + a_{m-3} + a_{m-1} = a_{m-2} + a_m`.
    /// Width `≡ 2 (mod 4)`.
    QuadTelescope,
    /// `a_2 + Σ_{j ≡ 0,1 (4)} a_j = a_1 + Σ_{j ≡ 2,3 (4)} a_j`, sums over
    /// `3 <= j <= m`. Width `≡ 2 (mod 4)`.
    QuarterOffset,
}

/// Whether a row satisfies the given condition.
pub fn row_condition(row: &ArrayRow, kind: RowCondition) -> bool {
    let m = row.width();
    match kind {
        RowCondition::QuarterBalance => {
            if m % 4 != 0 {
                return false;
            }
            let mut balance: i128 = 0;
            for j in 1..=m {
                let v = row.col(j) as i128;
                if j % 4 == 0 || j % 4 == 1 {
                    balance += v;
                } else {
                    balance -= v;
                }
            }
            balance == 0
        }
        RowCondition::QuadTelescope => {
            if m % 4 != 2 || m < 6 {
                return false;
            }
            let mut j = 3;
            while j + 3 <= m {
                if row.col(j) + row.col(j + 3) != row.col(j + 1) + row.col(j + 2) {
                    return false;
                }
                j += 4;
            }
            row.col(1) + row.col(2) + row.col(m - 3) + row.col(m - 1)
                == row.col(m - 2) + row.col(m)
        }
        RowCondition::QuarterOffset => {
            if m % 4 != 2 || m < 6 {
                return false;
            }
            let mut balance: i128 = row.col(2) as i128 - row.col(1) as i128;
            for j in 3..=m {
                let v = row.col(j) as i128;
                if j % 4 == 0 || j % 4 == 1 {
                    balance += v;
                } else {
                    balance -= v;
                }
            }
            balance == 0
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, v: u64) -> i64 {
        match self {
            Sign::Plus => v as i64,
            Sign::Minus => -(v as i64),
        }
    }
}

/// A reordering of row columns with signs. Applying it to a row yields a
/// candidate difference tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuplePattern {
    pub name: &'static str,
    pub condition: RowCondition,
    /// `(column, sign)` with 1-based columns; every column appears once.
    entries: Vec<(usize, Sign)>,
}

impl fmt::Display for TuplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .entries
            .iter()
            .map(|(c, s)| match s {
                Sign::Plus => format!("+a{c}"),
                Sign::Minus => format!("-a{c}"),
            })
            .collect();
        write!(f, "{}({})", self.name, body.join(","))
    }
}

impl TuplePattern {
    pub fn width(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Sign)] {
        &self.entries
    }

    /// Signs and reorders the row into a difference tuple.
    pub fn apply(&self, row: &ArrayRow) -> Result<Vec<i64>> {
        if row.width() != self.width() {
            return Err(Error::PatternWidth {
                pattern: self.name.to_string(),
                expected: self.width(),
                got: row.width(),
            });
        }
        Ok(self
            .entries
            .iter()
            .map(|&(c, s)| s.apply(row.col(c)))
            .collect())
    }
}

/// Signs and reorders `row` by `pattern`.
pub fn apply_pattern(pattern: &TuplePattern, row: &ArrayRow) -> Result<Vec<i64>> {
    pattern.apply(row)
}

/// Odd columns rising then even columns falling, final column last:
/// `(+a_1, -a_3, +a_5, ..., -a_{m-2}, +a_{m-4}, ..., -a_2, +a_m)` with sign
/// `+` exactly on columns `≡ 0, 1 (mod 4)`. Width `m ≡ 0 (mod 4)`.
pub fn fold_odd_even(m: usize) -> Result<TuplePattern> {
    if m % 4 != 0 || m < 4 {
        return Err(Error::BadParams(format!(
            "odd-even fold needs width ≡ 0 (mod 4), got {m}"
        )));
    }
    let mut entries = Vec::with_capacity(m);
    for c in (1..m).step_by(2) {
        entries.push((c, plus_iff_quarter(c)));
    }
    for c in (2..=m - 2).rev().step_by(2) {
        entries.push((c, plus_iff_quarter(c)));
    }
    entries.push((m, plus_iff_quarter(m)));
    Ok(TuplePattern {
        name: "odd-even-fold",
        condition: RowCondition::QuarterBalance,
        entries,
    })
}

/// Head `(+a_1, +a_2)`, even columns rising, `-a_m`, odd columns falling,
/// `+a_{m-1}` last. Width `m ≡ 2 (mod 4)`, `m >= 6`.
pub fn fold_even_odd(m: usize) -> Result<TuplePattern> {
    if m % 4 != 2 || m < 6 {
        return Err(Error::BadParams(format!(
            "even-odd fold needs width ≡ 2 (mod 4) and >= 6, got {m}"
        )));
    }
    let mut entries = vec![(1, Sign::Plus), (2, Sign::Plus)];
    for c in (4..=m - 2).step_by(2) {
        entries.push((c, if c % 4 == 0 { Sign::Minus } else { Sign::Plus }));
    }
    entries.push((m, Sign::Minus));
    for c in (3..=m - 3).rev().step_by(2) {
        entries.push((c, if c % 4 == 3 { Sign::Plus } else { Sign::Minus }));
    }
    entries.push((m - 1, Sign::Plus));
    Ok(TuplePattern {
        name: "even-odd-fold",
        condition: RowCondition::QuadTelescope,
        entries,
    })
}

/// Head `(+a_1, -a_2, +a_3)`, odd columns rising from 5, even columns
/// falling to 4, `+a_m` last. Width `m ≡ 2 (mod 4)`, `m >= 10`.
pub fn fold_three_head(m: usize) -> Result<TuplePattern> {
    if m % 4 != 2 || m < 10 {
        return Err(Error::BadParams(format!(
            "three-head fold needs width ≡ 2 (mod 4) and >= 10, got {m}"
        )));
    }
    let mut entries = vec![(1, Sign::Plus), (2, Sign::Minus), (3, Sign::Plus)];
    for c in (5..m).step_by(2) {
        entries.push((c, if c % 4 == 1 { Sign::Minus } else { Sign::Plus }));
    }
    for c in (4..=m - 2).rev().step_by(2) {
        entries.push((c, if c % 4 == 0 { Sign::Minus } else { Sign::Plus }));
    }
    entries.push((m, Sign::Plus));
    Ok(TuplePattern {
        name: "three-head-fold",
        condition: RowCondition::QuarterOffset,
        entries,
    })
}

/// The width-6 variant `(+a_1, -a_2, +a_3, -a_4, -a_5, +a_6)`.
pub fn fold_six() -> TuplePattern {
    TuplePattern {
        name: "six-fold",
        condition: RowCondition::QuarterOffset,
        entries: vec![
            (1, Sign::Plus),
            (2, Sign::Minus),
            (3, Sign::Plus),
            (4, Sign::Minus),
            (5, Sign::Minus),
            (6, Sign::Plus),
        ],
    }
}

fn plus_iff_quarter(c: usize) -> Sign {
    if c % 4 == 0 || c % 4 == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// All builtin patterns applicable at width `m`.
pub fn builtin_patterns(m: usize) -> Vec<TuplePattern> {
    let mut out = Vec::new();
    if let Ok(p) = fold_odd_even(m) {
        out.push(p);
    }
    if let Ok(p) = fold_even_odd(m) {
        out.push(p);
    }
    if let Ok(p) = fold_three_head(m) {
        out.push(p);
    }
    if m == 6 {
        out.push(fold_six());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    fn row(values: &[u64]) -> ArrayRow {
        ArrayRow::new(values.to_vec()).unwrap()
    }

    #[test]
    fn validate_known_good_tuple() {
        let t = DifferenceTuple::new(vec![1, -2, 6, -10, -3, 8], ord(24));
        let report = t.validate();
        assert!(report.ok(), "{report:?}");
        let c = t.to_cycle().unwrap();
        assert_eq!(c.vertices(), &[0, 1, 23, 5, 19, 16]);
    }

    #[test]
    fn validate_repeated_length() {
        let t = DifferenceTuple::new(vec![1, -1, 2], ord(8));
        let report = t.validate();
        assert_eq!(report.repeated_lengths, vec![(0, 1, 1)]);
        assert!(!report.ok());
        assert!(t.to_cycle().is_err());
    }

    #[test]
    fn validate_half_length_collides_with_itself() {
        // |5|_10 = 5 = 10/2: the edge it walks recurs at translate 5.
        let t = DifferenceTuple::new(vec![1, 5, -6], ord(10));
        let report = t.validate();
        assert_eq!(report.repeated_lengths, vec![(1, 1, 5)]);
        assert!(!report.ok());
    }

    #[test]
    fn validate_length_collision_across_representatives() {
        // 10 ≡ 1 (mod 9) as a length: |1|_9 = |10|_9 = 1.
        let t = DifferenceTuple::new(vec![1, 10, -11], ord(9));
        let report = t.validate();
        assert_eq!(report.repeated_lengths, vec![(0, 1, 1)]);
    }

    #[test]
    fn validate_zero_step_and_sum() {
        let t = DifferenceTuple::new(vec![9, 1, -2], ord(9));
        let report = t.validate();
        assert_eq!(report.zero_steps, vec![0]);
        assert_eq!(report.sum_residue, 8);
        assert!(!report.ok());
    }

    #[test]
    fn validate_partial_sum_collision() {
        // Partial sums 1, 3, 1: the r=1 and r=3 prefixes collide mod 8.
        let t = DifferenceTuple::new(vec![1, 2, -2, 7], ord(8));
        let report = t.validate();
        assert!(report
            .partial_sum_collisions
            .iter()
            .any(|&(r, s, _)| (r, s) == (1, 3)));
    }

    #[test]
    fn row_condition_examples() {
        assert!(row_condition(&row(&[1, 2, 3, 4]), RowCondition::QuarterBalance));
        assert!(!row_condition(&row(&[1, 2, 3, 5]), RowCondition::QuarterBalance));
        // Arithmetic-progression rows of width ≡ 0 (mod 4) always balance.
        assert!(row_condition(
            &row(&[3, 7, 11, 15, 19, 23, 27, 31]),
            RowCondition::QuarterBalance
        ));

        assert!(row_condition(
            &row(&[1, 2, 3, 4, 9, 11, 15, 16, 17, 18]),
            RowCondition::QuarterOffset
        ));
        assert!(row_condition(
            &row(&[3, 5, 11, 15, 19, 23]),
            RowCondition::QuadTelescope
        ));
        assert!(!row_condition(
            &row(&[3, 5, 11, 15, 19, 24]),
            RowCondition::QuadTelescope
        ));
    }

    #[test]
    fn fold_odd_even_shape_at_width_8() {
        let p = fold_odd_even(8).unwrap();
        let t = p.apply(&row(&[1, 2, 3, 4, 5, 6, 7, 8])).unwrap();
        assert_eq!(t, vec![1, -3, 5, -7, -6, 4, -2, 8]);
    }

    #[test]
    fn fold_even_odd_shape_at_width_6() {
        let p = fold_even_odd(6).unwrap();
        let t = p.apply(&row(&[1, 2, 3, 4, 5, 6])).unwrap();
        assert_eq!(t, vec![1, 2, -4, -6, 3, 5]);
    }

    #[test]
    fn fold_three_head_shape_at_width_10() {
        let p = fold_three_head(10).unwrap();
        let t = p.apply(&row(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10])).unwrap();
        assert_eq!(t, vec![1, -2, 3, -5, 7, -9, -8, 6, -4, 10]);
    }

    #[test]
    fn three_head_fold_row_to_cycle() {
        let p = fold_three_head(10).unwrap();
        let r = row(&[1, 2, 3, 4, 9, 11, 15, 16, 17, 18]);
        assert!(row_condition(&r, p.condition));
        let t = p.apply(&r).unwrap();
        assert_eq!(t, vec![1, -2, 3, -9, 15, -17, -16, 11, -4, 18]);
        let dt = DifferenceTuple::new(t, ord(50));
        let c = dt.to_cycle().unwrap();
        assert_eq!(c.vertices(), &[0, 1, 49, 2, 43, 8, 41, 25, 36, 32]);
    }

    #[test]
    fn patterns_are_permutations() {
        for m in [4usize, 6, 8, 10, 12, 14, 16, 20] {
            for p in builtin_patterns(m) {
                let mut cols: Vec<usize> = p.entries().iter().map(|&(c, _)| c).collect();
                cols.sort_unstable();
                assert_eq!(cols, (1..=m).collect::<Vec<_>>(), "{}", p.name);
            }
        }
    }

    /// Any row meeting a pattern's row condition signs to an exact zero sum
    /// over the integers, before any reduction mod n.
    #[test]
    fn satisfied_row_condition_gives_integer_zero_sum() {
        let samples: Vec<(TuplePattern, Vec<ArrayRow>)> = vec![
            (
                fold_odd_even(8).unwrap(),
                vec![
                    row(&[1, 2, 3, 4, 5, 6, 7, 8]),
                    row(&[2, 5, 8, 11, 14, 17, 20, 23]),
                    row(&[1, 3, 10, 12, 14, 16, 23, 25]),
                ],
            ),
            (
                fold_even_odd(10).unwrap(),
                vec![
                    row(&[3, 5, 21, 25, 29, 33, 37, 41, 45, 49]),
                    row(&[1, 7, 9, 13, 17, 21, 25, 29, 33, 37]),
                ],
            ),
            (
                fold_three_head(10).unwrap(),
                vec![
                    row(&[1, 2, 3, 4, 9, 11, 15, 16, 17, 18]),
                    row(&[5, 6, 7, 8, 10, 12, 19, 20, 21, 22]),
                ],
            ),
            (
                fold_six(),
                vec![row(&[1, 2, 3, 4, 13, 15]), row(&[5, 6, 7, 8, 14, 16])],
            ),
        ];
        for (p, rows) in samples {
            for r in rows {
                assert!(row_condition(&r, p.condition), "{} on {:?}", p.name, r);
                let t = p.apply(&r).unwrap();
                assert_eq!(t.iter().sum::<i64>(), 0, "{} on {:?}", p.name, r);
            }
        }
    }
}
