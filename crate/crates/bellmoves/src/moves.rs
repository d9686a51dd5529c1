//! Box-move graphs on Young diagrams and exact path counting.
//!
//! A move removes a removable box and adds a box at an addable position of
//! the intermediate diagram; a double-move does the same on an ordered pair
//! of diagrams, with no requirement that the box return to the diagram it
//! left. The exceptional move is the removal and re-addition, in place, of
//! the lowest removable box (of the first nonempty diagram, for pairs); the
//! primed variants exclude exactly that one self-loop. Path counts are
//! integer transfer-matrix powers over the eagerly materialized state space.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::{Int, IntMatrix};
use crate::structures::{DoublePartition, Partition};
use crate::{Error, Result};

/// All legal moves out of `p`, one entry per (removable box, addable
/// position) pair, so repeated targets appear with multiplicity. The primed
/// variant omits the exceptional self-loop, leaving `r - 1` copies of `p`
/// itself when `p` has `r` removable boxes.
pub fn move_targets(p: &Partition, primed: bool) -> Vec<Partition> {
    let mut out = Vec::new();
    for (row, _) in p.removable_boxes() {
        let intermediate = p.remove_box(row).expect("removable");
        for (add_row, _) in intermediate.addable_positions() {
            out.push(intermediate.add_box(add_row).expect("addable"));
        }
    }
    if primed && !p.is_empty() {
        // the exceptional move re-adds the lowest removable box in place,
        // producing p itself
        let pos = out.iter().position(|q| q == p).expect("self-loop present");
        out.remove(pos);
    }
    out
}

/// All legal double-moves out of `d`: remove from either diagram, add to
/// either diagram. The exceptional self-loop concerns the lowest removable
/// box of `first`, or of `second` when `first` is empty.
pub fn double_move_targets(d: &DoublePartition, primed: bool) -> Vec<DoublePartition> {
    let mut out = Vec::new();
    let removals: Vec<DoublePartition> = {
        let mut v = Vec::new();
        for (row, _) in d.first.removable_boxes() {
            v.push(DoublePartition::new(d.first.remove_box(row).unwrap(), d.second.clone()));
        }
        for (row, _) in d.second.removable_boxes() {
            v.push(DoublePartition::new(d.first.clone(), d.second.remove_box(row).unwrap()));
        }
        v
    };
    for mid in removals {
        for (row, _) in mid.first.addable_positions() {
            out.push(DoublePartition::new(mid.first.add_box(row).unwrap(), mid.second.clone()));
        }
        for (row, _) in mid.second.addable_positions() {
            out.push(DoublePartition::new(mid.first.clone(), mid.second.add_box(row).unwrap()));
        }
    }
    if primed && d.total_size() > 0 {
        let pos = out.iter().position(|q| q == d).expect("self-loop present");
        out.remove(pos);
    }
    out
}

/// A move graph over an eagerly materialized state space with integer edge
/// multiplicities; paths of length `t` are counted by the `t`-th power of
/// the adjacency matrix.
pub struct MoveGraph<S> {
    states: Vec<S>,
    index: HashMap<S, usize>,
    adjacency: IntMatrix,
}

impl<S: Clone + Eq + std::hash::Hash + std::fmt::Display> MoveGraph<S> {
    fn build(states: Vec<S>, targets: impl Fn(&S) -> Vec<S>) -> Self {
        let index: HashMap<S, usize> =
            states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut adjacency = IntMatrix::zero(states.len(), states.len());
        for (i, s) in states.iter().enumerate() {
            for target in targets(s) {
                let j = index[&target];
                let cur = adjacency.get(i, j).clone();
                adjacency.set(i, j, cur + Int::one());
            }
        }
        MoveGraph { states, index, adjacency }
    }

    pub fn states(&self) -> &[S] {
        &self.states
    }

    pub fn adjacency(&self) -> &IntMatrix {
        &self.adjacency
    }

    pub fn index_of(&self, s: &S) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Multiplicity of the single move `from -> to`.
    pub fn multiplicity(&self, from: &S, to: &S) -> Int {
        match (self.index.get(from), self.index.get(to)) {
            (Some(&i), Some(&j)) => self.adjacency.get(i, j).clone(),
            _ => Int::zero(),
        }
    }

    /// Number of length-`t` move sequences from `from` to `to`.
    pub fn path_count(&self, from: &S, to: &S, t: u64) -> Result<Int> {
        let i = self
            .index
            .get(from)
            .ok_or_else(|| Error::invalid("move graph", format!("unknown state {from}")))?;
        let j = self
            .index
            .get(to)
            .ok_or_else(|| Error::invalid("move graph", format!("unknown state {to}")))?;
        Ok(self.adjacency.pow(t)?.get(*i, *j).clone())
    }

    /// JSON adjacency list keyed by canonical state strings; entries are
    /// `[target, multiplicity]` pairs in state order.
    pub fn to_json(&self) -> String {
        let mut map = serde_json::Map::new();
        for (i, s) in self.states.iter().enumerate() {
            let row: Vec<serde_json::Value> = self
                .states
                .iter()
                .enumerate()
                .filter(|(j, _)| !self.adjacency.get(i, *j).is_zero())
                .map(|(j, target)| {
                    serde_json::json!([target.to_string(), self.adjacency.get(i, j).to_string()])
                })
                .collect();
            map.insert(s.to_string(), serde_json::Value::Array(row));
        }
        serde_json::Value::Object(map).to_string()
    }
}

/// Move graph on all partitions of `n`.
pub fn partition_move_graph(n: u32, primed: bool) -> MoveGraph<Partition> {
    MoveGraph::build(Partition::all_of(n), |p| move_targets(p, primed))
}

/// Double-move graph on all double partitions of total size `n`.
pub fn double_move_graph(n: u32, primed: bool) -> MoveGraph<DoublePartition> {
    MoveGraph::build(DoublePartition::all_of(n), |d| double_move_targets(d, primed))
}

/// Number of length-`t` move sequences between two partitions of equal size.
pub fn count_partition_moves(start: &Partition, end: &Partition, t: u64, primed: bool) -> Result<Int> {
    if start.size() != end.size() {
        return Err(Error::SizeMismatch(start.size(), end.size()));
    }
    partition_move_graph(start.size() as u32, primed).path_count(start, end, t)
}

/// Number of length-`t` double-move sequences between double partitions of
/// equal total size.
pub fn count_double_moves(
    start: &DoublePartition,
    end: &DoublePartition,
    t: u64,
    primed: bool,
) -> Result<Int> {
    if start.total_size() != end.total_size() {
        return Err(Error::SizeMismatch(start.total_size(), end.total_size()));
    }
    double_move_graph(start.total_size() as u32, primed).path_count(start, end, t)
}

/// Type A count: moves from `(n)` back to `(n)`. For the empty deck the
/// graph has one state and no moves, so only `t = 0` contributes.
pub fn move_return_count(n: u32, t: u64, primed: bool) -> Int {
    let row = Partition::row(n);
    count_partition_moves(&row, &row, t, primed).expect("equal sizes")
}

/// Type B count: double-moves from `((n), ())` back to itself.
pub fn double_move_return_count(n: u32, t: u64, primed: bool) -> Int {
    let start = DoublePartition::row_first(n);
    count_double_moves(&start, &start, t, primed).expect("equal sizes")
}

/// Type D count: double-moves from `((n), ())` finishing at either
/// `((n), ())` or `((), (n))`.
pub fn d_move_count(n: u32, t: u64, primed: bool) -> Result<Int> {
    if n == 0 {
        return Err(Error::invalid("type D move count", "n must be at least 1"));
    }
    let graph = double_move_graph(n, primed);
    let start = DoublePartition::row_first(n);
    let swapped = DoublePartition::new(Partition::empty(), Partition::row(n));
    Ok(graph.path_count(&start, &start, t)? + graph.path_count(&start, &swapped, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn sorted_strings<S: std::fmt::Display>(v: &[S]) -> Vec<String> {
        let mut out: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        out.sort();
        out
    }

    #[test]
    fn move_targets_of_two_one() {
        let plain = move_targets(&p(&[2, 1]), false);
        assert_eq!(sorted_strings(&plain), vec!["(1,1,1)", "(2,1)", "(2,1)", "(3)"]);
        let primed = move_targets(&p(&[2, 1]), true);
        assert_eq!(sorted_strings(&primed), vec!["(1,1,1)", "(2,1)", "(3)"]);
    }

    #[test]
    fn move_targets_of_a_row() {
        let plain = move_targets(&p(&[4]), false);
        assert_eq!(sorted_strings(&plain), vec!["(3,1)", "(4)"]);
        assert!(move_targets(&Partition::empty(), false).is_empty());
    }

    #[test]
    fn diagonal_multiplicity_counts_removable_boxes() {
        for n in 1..=8u32 {
            let plain = partition_move_graph(n, false);
            let primed = partition_move_graph(n, true);
            for q in Partition::all_of(n) {
                let r = int(q.removable_boxes().len() as i64);
                assert_eq!(plain.multiplicity(&q, &q), r, "{q}");
                assert_eq!(primed.multiplicity(&q, &q), &r - 1, "{q}");
            }
        }
    }

    #[test]
    fn adjacency_is_symmetric() {
        for n in 1..=8u32 {
            let g = partition_move_graph(n, false);
            assert_eq!(g.adjacency(), &g.adjacency().transpose(), "n = {n}");
        }
        for n in 1..=4u32 {
            let g = double_move_graph(n, false);
            assert_eq!(g.adjacency(), &g.adjacency().transpose(), "double n = {n}");
        }
    }

    #[test]
    fn double_move_targets_on_one_box() {
        let d = DoublePartition::row_first(1);
        assert_eq!(sorted_strings(&double_move_targets(&d, false)), vec!["((),(1))", "((1),())"]);
        assert_eq!(sorted_strings(&double_move_targets(&d, true)), vec!["((),(1))"]);
        let swapped = DoublePartition::new(Partition::empty(), Partition::row(1));
        assert_eq!(sorted_strings(&double_move_targets(&swapped, true)), vec!["((1),())"]);
    }

    #[test]
    fn return_count_examples() {
        assert_eq!(move_return_count(2, 2, false), int(2));
        // M'_1(lambda, lambda) = r - 1 at lambda = (3,2)
        assert_eq!(count_partition_moves(&p(&[3, 2]), &p(&[3, 2]), 1, true).unwrap(), int(1));
        // one oriented box: 2^{t-1} walks back
        for t in 1..=8u64 {
            assert_eq!(double_move_return_count(1, t, false), Int::from(1u64 << (t - 1)));
        }
        // empty deck convention
        assert_eq!(move_return_count(0, 0, false), int(1));
        assert_eq!(move_return_count(0, 3, false), int(0));
        assert_eq!(double_move_return_count(0, 0, true), int(1));
        assert_eq!(double_move_return_count(0, 2, true), int(0));
    }

    #[test]
    fn type_d_counts() {
        for t in 0..=10u64 {
            assert_eq!(d_move_count(1, t, false).unwrap(), Int::from(1u64) << t as usize);
            assert_eq!(d_move_count(1, t, true).unwrap(), int(1));
        }
        assert_eq!(d_move_count(2, 2, false).unwrap(), int(4));
        assert!(d_move_count(0, 1, false).is_err());
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(matches!(
            count_partition_moves(&p(&[2]), &p(&[2, 1]), 1, false),
            Err(Error::SizeMismatch(2, 3))
        ));
    }

    #[test]
    fn graph_json_is_keyed_by_canonical_strings() {
        let g = partition_move_graph(2, false);
        let json = g.to_json();
        let v: serde_json::Value = json.parse().unwrap();
        assert!(v.get("(2)").is_some());
        assert!(v.get("(1,1)").is_some());
    }
}
