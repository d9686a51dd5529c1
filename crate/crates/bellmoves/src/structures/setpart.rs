//! Set partitions of `{1..t}`, optionally with marks, and their exhaustive
//! enumerators. Spacing constraints are pruned during generation so ground
//! sets up to t = 14 or so stay cheap.

use std::fmt;

use crate::algebra::Int;
use num_traits::Zero;

/// Restriction on which elements may share a block.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpacingRule {
    /// No restriction.
    None,
    /// No block contains both `i` and `i+1`, nor both `1` and `t`
    /// (cyclically spaced). For `t = 1` the cyclic pair degenerates to the
    /// single element, so nothing qualifies.
    CyclicSpaced,
    /// No block contains both `i` and `i+1`; the ends are unconstrained.
    Spaced,
}

/// Marks forced by adjacent elements sharing a block. Under every rule each
/// block must carry an even number of marks.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ForcedMarkRule {
    /// Marks are free apart from the evenness requirement.
    None,
    /// If `i` and `i+1` share a block then `i+1` is marked, and if `1` and
    /// `t` share a block then `1` is marked. For `t = 1` the cyclic pair
    /// forces a mark on the lone element, which evenness then rejects.
    CyclicFlip,
    /// If `i` and `i+1` share a block then `i+1` is marked.
    Flip,
}

/// A set partition of `{1..t}` with a (possibly empty) set of marked
/// elements. Blocks are kept sorted internally and ordered by their minima,
/// the restricted-growth normal form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedSetPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
    marks: Vec<usize>,
}

impl MarkedSetPartition {
    pub fn new(ground: usize, mut blocks: Vec<Vec<usize>>, mut marks: Vec<usize>) -> crate::Result<Self> {
        let mut seen = vec![false; ground + 1];
        for b in &mut blocks {
            b.sort_unstable();
            if b.is_empty() {
                return Err(crate::Error::invalid("set partition", "empty block"));
            }
            for &x in b.iter() {
                if x == 0 || x > ground || seen[x] {
                    return Err(crate::Error::invalid(
                        "set partition",
                        format!("element {x} repeated or out of range"),
                    ));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|&s| !s) {
            return Err(crate::Error::invalid("set partition", "blocks do not cover the ground set"));
        }
        blocks.sort_by_key(|b| b[0]);
        marks.sort_unstable();
        marks.dedup();
        let part = MarkedSetPartition { ground, blocks, marks };
        for b in &part.blocks {
            if b.iter().filter(|x| part.is_marked(**x)).count() % 2 != 0 {
                return Err(crate::Error::invalid("set partition", "a block has an odd number of marks"));
            }
        }
        Ok(part)
    }

    pub fn empty() -> Self {
        MarkedSetPartition { ground: 0, blocks: Vec::new(), marks: Vec::new() }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    pub fn is_marked(&self, x: usize) -> bool {
        self.marks.binary_search(&x).is_ok()
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element within ground set")
    }
}

impl fmt::Display for MarkedSetPartition {
    /// Canonical text form `{1*,3|2}`: blocks ordered by minima, separated by
    /// `|`, with `*` after each marked element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (bi, b) in self.blocks.iter().enumerate() {
            if bi > 0 {
                write!(f, "|")?;
            }
            for (i, x) in b.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
                if self.is_marked(*x) {
                    write!(f, "*")?;
                }
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for MarkedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Walker<'a, F> {
    t: usize,
    max_blocks: usize,
    rule: SpacingRule,
    assignment: Vec<usize>,
    callback: &'a mut F,
}

impl<F: FnMut(&[usize], usize)> Walker<'_, F> {
    /// Depth-first over restricted growth strings; `assignment[i]` is the
    /// 1-based block of element `i+1`. Spacing violations prune immediately,
    /// except the cyclic pair which is checked when `t` is placed.
    fn walk(&mut self, i: usize, used: usize) {
        if i == self.t {
            (self.callback)(&self.assignment, used);
            return;
        }
        let limit = (used + 1).min(self.max_blocks);
        for b in 1..=limit {
            match self.rule {
                SpacingRule::Spaced | SpacingRule::CyclicSpaced
                    if i > 0 && self.assignment[i - 1] == b =>
                {
                    continue
                }
                _ => {}
            }
            if self.rule == SpacingRule::CyclicSpaced && i == self.t - 1 && b == 1 {
                // last element may not join the block of element 1 (block 1);
                // for t = 1 this rejects everything, matching the degenerate
                // reading of the cyclic condition
                continue;
            }
            self.assignment.push(b);
            self.walk(i + 1, used.max(b));
            self.assignment.pop();
        }
    }
}

fn blocks_from_assignment(t: usize, assignment: &[usize], used: usize) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); used];
    for x in 1..=t {
        blocks[assignment[x - 1] - 1].push(x);
    }
    blocks
}

/// Visits every set partition of `{1..t}` into at most `max_blocks` blocks
/// that satisfies the spacing rule, in restricted-growth order. `t = 0`
/// yields the empty partition once, for any rule.
pub fn for_each_set_partition(
    t: usize,
    max_blocks: usize,
    rule: SpacingRule,
    f: &mut impl FnMut(&MarkedSetPartition),
) {
    if t == 0 {
        f(&MarkedSetPartition::empty());
        return;
    }
    if max_blocks == 0 {
        return;
    }
    let mut cb = |assignment: &[usize], used: usize| {
        let part = MarkedSetPartition {
            ground: t,
            blocks: blocks_from_assignment(t, assignment, used),
            marks: Vec::new(),
        };
        f(&part);
    };
    let mut w = Walker { t, max_blocks, rule, assignment: Vec::with_capacity(t), callback: &mut cb };
    w.walk(0, 0);
}

pub fn set_partitions(t: usize, max_blocks: usize, rule: SpacingRule) -> Vec<MarkedSetPartition> {
    let mut out = Vec::new();
    for_each_set_partition(t, max_blocks, rule, &mut |p| out.push(p.clone()));
    out
}

pub fn count_set_partitions(t: usize, max_blocks: usize, rule: SpacingRule) -> Int {
    let mut n = Int::zero();
    for_each_set_partition(t, max_blocks, rule, &mut |_| n += 1);
    n
}

/// Count of partitions with exactly `blocks` blocks.
pub fn count_set_partitions_exact(t: usize, blocks: usize, rule: SpacingRule) -> Int {
    let mut n = Int::zero();
    for_each_set_partition(t, blocks, rule, &mut |p| {
        if p.block_count() == blocks {
            n += 1;
        }
    });
    n
}

fn forced_marks(block: &[usize], t: usize, rule: ForcedMarkRule) -> Vec<usize> {
    let mut forced = Vec::new();
    if rule == ForcedMarkRule::None {
        return forced;
    }
    for &x in block {
        if x >= 2 && block.binary_search(&(x - 1)).is_ok() {
            forced.push(x);
        }
    }
    if rule == ForcedMarkRule::CyclicFlip
        && block.binary_search(&1).is_ok()
        && block.binary_search(&t).is_ok()
        && !forced.contains(&1)
    {
        forced.insert(0, 1);
    }
    forced
}

/// Visits every marked set partition of `{1..t}` into at most `max_blocks`
/// blocks: each block carries an even number of marks, including any marks
/// the rule forces.
pub fn for_each_marked_partition(
    t: usize,
    max_blocks: usize,
    rule: ForcedMarkRule,
    f: &mut impl FnMut(&MarkedSetPartition),
) {
    for_each_set_partition(t, max_blocks, SpacingRule::None, &mut |p| {
        // per block: the forced marks plus any parity-correct completion
        // from the free elements
        let per_block: Vec<(Vec<usize>, Vec<usize>)> = p
            .blocks()
            .iter()
            .map(|b| {
                let forced = forced_marks(b, t, rule);
                let free: Vec<usize> = b.iter().copied().filter(|x| !forced.contains(x)).collect();
                (forced, free)
            })
            .collect();

        fn assign(
            per_block: &[(Vec<usize>, Vec<usize>)],
            bi: usize,
            marks: &mut Vec<usize>,
            base: &MarkedSetPartition,
            f: &mut impl FnMut(&MarkedSetPartition),
        ) {
            if bi == per_block.len() {
                let mut out = base.clone();
                out.marks = marks.clone();
                out.marks.sort_unstable();
                f(&out);
                return;
            }
            let (forced, free) = &per_block[bi];
            let parity = forced.len() % 2;
            // subsets of the free elements whose size has the right parity
            for mask in 0u32..(1u32 << free.len()) {
                if (mask.count_ones() as usize) % 2 != parity {
                    continue;
                }
                let start = marks.len();
                marks.extend(forced.iter().copied());
                for (j, x) in free.iter().enumerate() {
                    if mask >> j & 1 == 1 {
                        marks.push(*x);
                    }
                }
                assign(per_block, bi + 1, marks, base, f);
                marks.truncate(start);
            }
        }

        assign(&per_block, 0, &mut Vec::new(), p, f);
    });
}

pub fn marked_partitions(t: usize, max_blocks: usize, rule: ForcedMarkRule) -> Vec<MarkedSetPartition> {
    let mut out = Vec::new();
    for_each_marked_partition(t, max_blocks, rule, &mut |p| out.push(p.clone()));
    out
}

pub fn count_marked_partitions(t: usize, max_blocks: usize, rule: ForcedMarkRule) -> Int {
    count_marked(t, max_blocks, rule, None)
}

pub fn count_marked_partitions_exact(t: usize, blocks: usize, rule: ForcedMarkRule) -> Int {
    count_marked(t, blocks, rule, Some(blocks))
}

fn count_marked(t: usize, max_blocks: usize, rule: ForcedMarkRule, exact: Option<usize>) -> Int {
    // Counting does not materialize mark sets: each block contributes
    // 2^(free-1) completions when it has free elements, and otherwise 1 or 0
    // according to the parity of its forced marks.
    let mut total = Int::zero();
    for_each_set_partition(t, max_blocks, SpacingRule::None, &mut |p| {
        if let Some(b) = exact {
            if p.block_count() != b {
                return;
            }
        }
        let mut ways = Int::from(1u32);
        for block in p.blocks() {
            let forced = forced_marks(block, t, rule);
            let free = block.len() - forced.len();
            if free == 0 {
                if forced.len() % 2 != 0 {
                    return;
                }
            } else {
                ways <<= free - 1;
            }
        }
        total += ways;
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{binomial, int};

    #[test]
    fn plain_enumeration_counts() {
        assert_eq!(count_set_partitions(3, 3, SpacingRule::None), int(5));
        assert_eq!(count_set_partitions(0, 4, SpacingRule::None), int(1));
        assert_eq!(count_set_partitions(4, 2, SpacingRule::None), int(8));
        // Bell numbers when the block bound is slack.
        let bells: Vec<Int> =
            (0..=8).map(|t| count_set_partitions(t, t.max(1), SpacingRule::None)).collect();
        assert_eq!(bells, [1, 1, 2, 5, 15, 52, 203, 877, 4140].map(int));
    }

    #[test]
    fn bell_recurrence() {
        // B_{t+1} = sum_k C(t,k) B_k
        let b: Vec<Int> =
            (0..=11).map(|t| count_set_partitions(t, t.max(1), SpacingRule::None)).collect();
        for t in 0..=10usize {
            let rhs: Int = (0..=t).map(|k| binomial(t as u64, k as i64) * &b[k]).sum();
            assert_eq!(b[t + 1], rhs, "t = {t}");
        }
    }

    #[test]
    fn cyclically_spaced_enumeration() {
        let got = set_partitions(4, 4, SpacingRule::CyclicSpaced);
        let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["{1,3|2,4}", "{1,3|2|4}", "{1|2,4|3}", "{1|2|3|4}"]);
        // t = 1: the single element is cyclically adjacent to itself.
        assert_eq!(count_set_partitions(1, 1, SpacingRule::CyclicSpaced), int(0));
        assert_eq!(count_set_partitions(0, 0, SpacingRule::CyclicSpaced), int(1));
        // A000296 prefix.
        let prefix: Vec<Int> =
            (0..=9).map(|t| count_set_partitions(t, t.max(1), SpacingRule::CyclicSpaced)).collect();
        assert_eq!(prefix, [1, 0, 1, 1, 4, 11, 41, 162, 715, 3425].map(int));
    }

    #[test]
    fn spaced_differs_from_cyclic_at_the_ends() {
        // {1,3} is spaced but not cyclically spaced when t = 3.
        assert_eq!(count_set_partitions(3, 3, SpacingRule::Spaced), int(2));
        assert_eq!(count_set_partitions(3, 3, SpacingRule::CyclicSpaced), int(1));
    }

    #[test]
    fn marked_enumeration_small() {
        let got = marked_partitions(2, 2, ForcedMarkRule::None);
        let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["{1,2}", "{1*,2*}", "{1|2}"]);
        assert_eq!(count_marked_partitions(1, 1, ForcedMarkRule::None), int(1));
        // Marked Bell numbers (type B analogue of the Bell sequence).
        let prefix: Vec<Int> =
            (0..=7).map(|t| count_marked_partitions(t, t.max(1), ForcedMarkRule::None)).collect();
        assert_eq!(prefix, [1, 1, 3, 11, 49, 257, 1539, 10299].map(int));
    }

    #[test]
    fn marked_counts_match_enumeration() {
        for t in 0..=6usize {
            for rule in [ForcedMarkRule::None, ForcedMarkRule::CyclicFlip, ForcedMarkRule::Flip] {
                let fast = count_marked_partitions(t, t.max(1), rule);
                let slow = int(marked_partitions(t, t.max(1), rule).len() as i64);
                assert_eq!(fast, slow, "t = {t}, rule {rule:?}");
            }
        }
    }

    #[test]
    fn cyclic_flip_rule_small_cases() {
        // t = 1: the lone block {1} needs a forced mark, odd, so rejected.
        assert_eq!(count_marked_partitions(1, 1, ForcedMarkRule::CyclicFlip), int(0));
        // t = 2: {1,2} must mark both ends; {1|2} carries no marks.
        let got = marked_partitions(2, 2, ForcedMarkRule::CyclicFlip);
        let shown: Vec<String> = got.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["{1*,2*}", "{1|2}"]);
    }

    #[test]
    fn marks_per_block_scaling() {
        // With free marks, exactly n blocks: 2^(t-n) times the unmarked count.
        for t in 1..=7usize {
            for n in 1..=t {
                let marked = count_marked_partitions_exact(t, n, ForcedMarkRule::None);
                let plain = count_set_partitions_exact(t, n, SpacingRule::None);
                assert_eq!(marked, (plain << (t - n)), "t={t} n={n}");
            }
        }
    }

    #[test]
    fn canonical_block_order_and_validation() {
        let p = MarkedSetPartition::new(3, vec![vec![2], vec![3, 1]], vec![1, 3]).unwrap();
        assert_eq!(p.to_string(), "{1*,3*|2}");
        assert_eq!(p.block_of(2), 1);
        assert!(MarkedSetPartition::new(3, vec![vec![1, 2]], vec![]).is_err());
        assert!(MarkedSetPartition::new(2, vec![vec![1, 2]], vec![1]).is_err());
    }
}
