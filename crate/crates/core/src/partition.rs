//! Partitions, Young diagrams and the diagonal hook statistics.
//!
//! For the `i`-th diagonal box of a Young diagram we record
//!
//! * the hook number `d_i`: boxes to its right in its row, boxes below it in
//!   its column, and the box itself;
//! * the leg number `q_i`: boxes below it in its column **plus the box
//!   itself**. This is one more than the usual leg length;
//! * the leg increment `ℓ_i = q_i - q_{i+1}` (with `q_{k+1} = 0`).
//!
//! Diagrams with `ℓ` rows and `d` boxes are in bijection with sequences
//! `(d_1, ℓ_1), ..., (d_k, ℓ_k)` that are *admissible*: every `ℓ_i >= 1`,
//! `d_i > d_{i+1} + ℓ_i` for `i < k`, and `d_k >= ℓ_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Number of boxes on the main diagonal.
    pub fn diagonal_len(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Rows of `□`, one line per part.
    pub fn young_diagram(&self) -> String {
        self.parts
            .iter()
            .map(|&n| "□".repeat(n))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts, e.g. `7,7,5,4,3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Statistics of one diagonal box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalBox {
    pub hook: usize,
    pub leg: usize,
    pub increment: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookLegProfile {
    pub boxes: Vec<DiagonalBox>,
}

impl HookLegProfile {
    /// The `(d_i, ℓ_i)` sequence indexing the basis element of this diagram.
    pub fn hook_increment_pairs(&self) -> Vec<(usize, usize)> {
        self.boxes.iter().map(|b| (b.hook, b.increment)).collect()
    }

    pub fn hook_leg_pairs(&self) -> Vec<(usize, usize)> {
        self.boxes.iter().map(|b| (b.hook, b.leg)).collect()
    }
}

/// All partitions of `d` with exactly `len` parts, in decreasing
/// lexicographic order.
pub fn partitions_with_length(d: usize, len: usize) -> Vec<Partition> {
    fn fill(rem: usize, slots: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if rem == 0 {
                out.push(Partition { parts: prefix.clone() });
            }
            return;
        }
        // every remaining slot needs at least 1; the first part caps the rest
        if rem < slots || rem > slots * max {
            return;
        }
        let hi = max.min(rem - (slots - 1));
        let lo = rem.div_ceil(slots);
        for part in (lo..=hi).rev() {
            prefix.push(part);
            fill(rem - part, slots - 1, part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if len == 0 {
        if d == 0 {
            out.push(Partition { parts: Vec::new() });
        }
        return out;
    }
    fill(d, len, d, &mut Vec::with_capacity(len), &mut out);
    out
}

/// `p(d, len)` via `p(d, len) = p(d-1, len-1) + p(d-len, len)`.
pub fn count_partitions(d: usize, len: usize) -> u128 {
    if len > d {
        return 0;
    }
    if len == 0 {
        return u128::from(d == 0);
    }
    // table[j][n] = p(n, j) for n <= d - len + j
    let mut prev = vec![0u128; d + 1];
    prev[0] = 1;
    for j in 1..=len {
        let mut cur = vec![0u128; d + 1];
        for n in j..=d {
            cur[n] = prev[n - 1] + cur[n - j];
        }
        prev = cur;
    }
    prev[d]
}

pub fn hook_leg_profile(p: &Partition) -> Result<HookLegProfile> {
    if p.is_empty() {
        return Err(Error::InvalidPartition("empty partition has no diagonal".into()));
    }
    let cols = p.conjugate();
    let k = p.diagonal_len();
    // rows and columns are 1-indexed in the formulas below
    let legs: Vec<usize> = (1..=k).map(|i| cols.parts[i - 1] - i + 1).collect();
    let boxes = (1..=k)
        .map(|i| {
            let hook = p.parts[i - 1] + cols.parts[i - 1] + 1 - 2 * i;
            let next_leg = legs.get(i).copied().unwrap_or(0);
            DiagonalBox {
                hook,
                leg: legs[i - 1],
                increment: legs[i - 1] - next_leg,
            }
        })
        .collect();
    Ok(HookLegProfile { boxes })
}

/// `ℓ_i >= 1`, `d_i > d_{i+1} + ℓ_i` for `i < k`, and `d_k >= ℓ_k`.
/// The empty sequence is not admissible.
pub fn is_admissible(seq: &[(usize, usize)]) -> bool {
    let Some(&(d_last, l_last)) = seq.last() else {
        return false;
    };
    seq.iter().all(|&(_, l)| l >= 1)
        && seq.windows(2).all(|w| w[0].0 > w[1].0 + w[0].1)
        && d_last >= l_last
}

/// Inverse of [`hook_leg_profile`] on the `(d_i, ℓ_i)` pairs.
pub fn profile_to_partition(seq: &[(usize, usize)]) -> Result<Partition> {
    if !is_admissible(seq) {
        return Err(Error::Inadmissible(format!("{seq:?}")));
    }
    let k = seq.len();
    // q_i = ℓ_i + ... + ℓ_k
    let mut legs = vec![0usize; k + 1];
    for i in (0..k).rev() {
        legs[i] = legs[i + 1] + seq[i].1;
    }
    let rows = legs[0];
    // column i (1-indexed, i <= k) has length q_i + i - 1
    let col_len = |i: usize| legs[i - 1] + i - 1;
    let mut parts = Vec::with_capacity(rows);
    for i in 1..=k {
        parts.push(seq[i - 1].0 + i - legs[i - 1]);
    }
    for r in k + 1..=rows {
        parts.push((1..=k).filter(|&i| col_len(i) >= r).count());
    }
    let p = Partition::new(parts)
        .map_err(|e| Error::Internal(format!("profile {seq:?} produced a non-partition: {e}")))?;
    if p.diagonal_len() != k {
        return Err(Error::Internal(format!(
            "profile {seq:?} produced {p} with the wrong diagonal"
        )));
    }
    Ok(p)
}

/// Admissible sequences with `Σ d_i = d` and `Σ ℓ_i = len`, sorted in
/// strictly decreasing lexicographic `≻` order (larger `d` first, then
/// smaller `ℓ` first).
pub fn admissible_sequences(d: usize, len: usize) -> Vec<Vec<(usize, usize)>> {
    fn extend(
        d_rem: usize,
        l_rem: usize,
        bound: usize,
        prefix: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if l_rem == 0 {
            if d_rem == 0 && !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        // next hook must stay strictly below `bound`
        let top = d_rem.min(bound.saturating_sub(1));
        for di in (1..=top).rev() {
            for li in 1..=l_rem.min(di) {
                let (d_next, l_next) = (d_rem - di, l_rem - li);
                if (d_next == 0) != (l_next == 0) || d_next < l_next {
                    continue;
                }
                prefix.push((di, li));
                extend(d_next, l_next, di - li, prefix, out);
                prefix.pop();
            }
        }
    }

    let mut out = Vec::new();
    if len == 0 || d < len {
        return out;
    }
    extend(d, len, d + 1, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(partitions_with_length(4, 2), vec![part(&[3, 1]), part(&[2, 2])]);
        assert_eq!(partitions_with_length(3, 3), vec![part(&[1, 1, 1])]);
        assert_eq!(partitions_with_length(12, 4).len(), 15);
        assert!(partitions_with_length(2, 3).is_empty());
        assert!(partitions_with_length(3, 0).is_empty());
    }

    #[test]
    fn counts() {
        assert_eq!(count_partitions(12, 4), 15);
        assert_eq!(count_partitions(4, 2), 2);
        for d in 1..30 {
            assert_eq!(count_partitions(d, 1), 1);
            assert_eq!(count_partitions(d, d), 1);
        }
        assert_eq!(count_partitions(0, 0), 1);
        assert_eq!(count_partitions(5, 0), 0);
        assert_eq!(count_partitions(3, 4), 0);
        let total: u128 = (0..=100).map(|l| count_partitions(100, l)).sum();
        assert_eq!(total, 190_569_292);
    }

    #[test]
    fn worked_diagram() {
        let prof = hook_leg_profile(&part(&[7, 7, 5, 4, 3, 2])).unwrap();
        assert_eq!(prof.hook_leg_pairs(), vec![(12, 6), (10, 5), (5, 3), (1, 1)]);
        let inc: Vec<_> = prof.boxes.iter().map(|b| b.increment).collect();
        assert_eq!(inc, vec![1, 2, 2, 1]);
    }

    #[test]
    fn row_and_column() {
        let row = hook_leg_profile(&part(&[6])).unwrap();
        assert_eq!(row.boxes, vec![DiagonalBox { hook: 6, leg: 1, increment: 1 }]);
        let col = hook_leg_profile(&part(&[1, 1, 1])).unwrap();
        assert_eq!(col.boxes, vec![DiagonalBox { hook: 3, leg: 3, increment: 3 }]);
        assert!(hook_leg_profile(&Partition::new(vec![]).unwrap()).is_err());
    }

    #[test]
    fn inverse_profile() {
        assert_eq!(
            profile_to_partition(&[(12, 1), (10, 2), (5, 2), (1, 1)]).unwrap(),
            part(&[7, 7, 5, 4, 3, 2])
        );
        assert_eq!(profile_to_partition(&[(9, 1)]).unwrap(), part(&[9]));
        assert_eq!(profile_to_partition(&[(3, 3)]).unwrap(), part(&[1, 1, 1]));
        assert!(profile_to_partition(&[(2, 1), (1, 1)]).is_err());
        assert!(profile_to_partition(&[]).is_err());
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&[(4, 2)]));
        assert!(is_admissible(&[(3, 1), (1, 1)]));
        assert!(!is_admissible(&[(2, 1), (1, 1)]));
        assert!(!is_admissible(&[(2, 3)]));
        assert!(!is_admissible(&[(5, 0)]));
        assert!(!is_admissible(&[]));
    }

    #[test]
    fn admissible_enumeration() {
        assert_eq!(admissible_sequences(4, 2), vec![vec![(4, 2)], vec![(3, 1), (1, 1)]]);
        assert_eq!(admissible_sequences(3, 2), vec![vec![(3, 2)]]);
        assert_eq!(admissible_sequences(12, 4).len(), 15);
        assert!(admissible_sequences(2, 3).is_empty());
        for seq in admissible_sequences(13, 4) {
            assert!(is_admissible(&seq));
        }
    }

    #[test]
    fn partition_parsing() {
        assert_eq!("7,7,5,4,3,2".parse::<Partition>().unwrap(), part(&[7, 7, 5, 4, 3, 2]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(part(&[7, 7, 5, 4, 3, 2]).conjugate(), part(&[6, 6, 5, 4, 3, 2, 2]));
        assert_eq!(part(&[3, 1]).conjugate().conjugate(), part(&[3, 1]));
    }
}
