//! Integer partitions as Young diagrams, and pairs of them.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{factorial, Int};
use crate::{Error, Result};

/// A partition: weakly decreasing list of positive parts. The empty list is
/// the empty partition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition", "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition", "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`; `n = 0` gives the empty partition.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Cells whose removal leaves a partition, as 1-indexed `(row, column)`
    /// pairs in top-to-bottom order. A cell `(i, lambda_i)` qualifies exactly
    /// when row `i` is strictly longer than row `i+1`.
    pub fn removable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                out.push((i + 1, self.parts[i] as usize));
            }
        }
        out
    }

    /// Positions where a box may be added, 1-indexed, top to bottom. There is
    /// always at least one: below the last row.
    pub fn addable_positions(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i == 0 || self.parts[i - 1] > self.parts[i] {
                out.push((i + 1, self.parts[i] as usize + 1));
            }
        }
        out.push((self.parts.len() + 1, 1));
        out
    }

    /// Removes the box at the end of the given 1-indexed row.
    pub fn remove_box(&self, row: usize) -> Result<Self> {
        let i = row - 1;
        if !self.removable_boxes().iter().any(|&(r, _)| r == row) {
            return Err(Error::invalid("box removal", format!("row {row} of {self} is not removable")));
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Adds a box at the end of the given 1-indexed row (`len+1` starts a new row).
    pub fn add_box(&self, row: usize) -> Result<Self> {
        if !self.addable_positions().iter().any(|&(r, _)| r == row) {
            return Err(Error::invalid("box addition", format!("row {row} of {self} is not addable")));
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all_of(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            let top = remaining.min(max);
            for p in (1..=top).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    fn conjugate_parts(&self) -> Vec<u32> {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        (0..cols).map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32).collect()
    }

    /// Number of standard Young tableaux of this shape, by the hook length
    /// formula `n! / prod(hooks)`.
    pub fn hook_dimension(&self) -> Int {
        let n = self.size();
        let conj = self.conjugate_parts();
        let mut denom = Int::from(1u32);
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len as usize {
                let hook = (len as usize - j - 1) + (conj[j] as usize - i - 1) + 1;
                denom *= Int::from(hook as u64);
            }
        }
        factorial(n) / denom
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the canonical text form `(3,2,1)`; `()` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::invalid("partition", format!("{s:?} is not parenthesised")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::invalid("partition", format!("part {p:?}: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts)
    }
}

/// An ordered pair of partitions; the states of the type B and D move graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DoublePartition {
    pub first: Partition,
    pub second: Partition,
}

impl DoublePartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        DoublePartition { first, second }
    }

    /// `((n), {})`, the starting state for the type B walks.
    pub fn row_first(n: u32) -> Self {
        DoublePartition::new(Partition::row(n), Partition::empty())
    }

    pub fn total_size(&self) -> u64 {
        self.first.size() + self.second.size()
    }

    /// All double partitions of total size `n`, grouped by the size of the
    /// first component in decreasing order.
    pub fn all_of(n: u32) -> Vec<DoublePartition> {
        let mut out = Vec::new();
        for first_size in (0..=n).rev() {
            for a in Partition::all_of(first_size) {
                for b in Partition::all_of(n - first_size) {
                    out.push(DoublePartition::new(a.clone(), b));
                }
            }
        }
        out
    }
}

impl fmt::Display for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

impl fmt::Debug for DoublePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn removable_boxes_examples() {
        assert!(Partition::empty().removable_boxes().is_empty());
        assert_eq!(p(&[2, 1]).removable_boxes().len(), 2);
        assert_eq!(p(&[3, 3, 1]).removable_boxes(), vec![(2, 3), (3, 1)]);
    }

    #[test]
    fn removable_matches_single_box_deletions() {
        // Oracle: try deleting every cell and keep those that leave a partition.
        for n in 1..=9u32 {
            for q in Partition::all_of(n) {
                let mut expected = Vec::new();
                for i in 0..q.len() {
                    let mut parts = q.parts().to_vec();
                    parts[i] -= 1;
                    if parts[i] == 0 && i + 1 == parts.len() {
                        parts.pop();
                    }
                    if Partition::new(parts).is_ok() {
                        expected.push((i + 1, q.parts()[i] as usize));
                    }
                }
                assert_eq!(q.removable_boxes(), expected, "shape {q}");
            }
        }
    }

    #[test]
    fn addable_positions_examples() {
        assert_eq!(Partition::empty().addable_positions(), vec![(1, 1)]);
        assert_eq!(p(&[2, 1]).addable_positions().len(), 3);
        assert_eq!(p(&[4]).addable_positions(), vec![(1, 5), (2, 1)]);
    }

    #[test]
    fn staircase_property() {
        // For every nonempty partition, addable positions exceed removable
        // boxes by exactly one.
        for n in 1..=12u32 {
            for q in Partition::all_of(n) {
                assert_eq!(q.removable_boxes().len() + 1, q.addable_positions().len(), "shape {q}");
            }
        }
    }

    #[test]
    fn add_remove_round_trip() {
        let q = p(&[3, 3, 1]);
        assert_eq!(q.remove_box(2).unwrap(), p(&[3, 2, 1]));
        assert_eq!(q.remove_box(3).unwrap(), p(&[3, 3]));
        assert!(q.remove_box(1).is_err());
        assert_eq!(q.add_box(1).unwrap(), p(&[4, 3, 1]));
        assert_eq!(q.add_box(4).unwrap(), p(&[3, 3, 1, 1]));
        assert!(q.add_box(2).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[5]).hook_dimension(), int(1));
        assert_eq!(p(&[2, 1]).hook_dimension(), int(2));
        assert_eq!(p(&[2, 2]).hook_dimension(), int(2));
        // Sum of squares of dimensions is n!.
        for n in 1..=8u32 {
            let total: Int = Partition::all_of(n)
                .iter()
                .map(|q| {
                    let d = q.hook_dimension();
                    &d * &d
                })
                .sum();
            assert_eq!(total, factorial(n as u64), "n = {n}");
        }
    }

    #[test]
    fn text_round_trip() {
        for s in ["(3,2,1)", "()", "(7)", "(2,2,1,1)"] {
            let q: Partition = s.parse().unwrap();
            assert_eq!(q.to_string(), s);
        }
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(0)".parse::<Partition>().is_err());
        assert!("3,2".parse::<Partition>().is_err());
    }

    #[test]
    fn double_partitions_of_3() {
        let all = DoublePartition::all_of(3);
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], DoublePartition::row_first(3));
    }
}
