//! Row insertion shapes, shape trajectories of shuffle sequences, and the
//! exhaustive search showing that matching shapes step by step does not
//! biject identity shuffle sequences with move paths.
//!
//! The insertion shape of a product of random-to-top shuffles changes by a
//! single box move at every step, so each identity sequence of length `t`
//! traces a trajectory through the move graph from `(n)` back to `(n)`.
//! Summed over all trajectories, sequences and move paths agree (both count
//! the same total); trajectory by trajectory they agree for small `t` but
//! not in general, and the search below reproduces the explicit length-8
//! counterexample on five cards.

use std::collections::HashMap;

use num_traits::Zero;

use crate::algebra::Int;
use crate::moves::{move_targets, partition_move_graph};
use crate::structures::{enumerate_group, GroupFamily, Partition, Permutation};
use crate::{Error, Result};

/// Shape of the insertion tableau under Schensted row insertion of the
/// one-line word, inserted left to right.
pub fn rsk_shape(p: &Permutation) -> Partition {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &x in p.one_line() {
        let mut carry = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > carry) {
                Some(i) => std::mem::swap(&mut row[i], &mut carry),
                None => {
                    row.push(carry);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as u32).collect()).expect("row lengths decrease")
}

/// Whether right-multiplying `tau` by the random-to-top shuffle `sigma_m`
/// changes the insertion shape by a legal move (self-loops included).
pub fn verify_move_step(tau: &Permutation, m: usize) -> bool {
    let before = rsk_shape(tau);
    let after = rsk_shape(&tau.then(&Permutation::random_to_top(tau.n(), m)));
    move_targets(&before, false).contains(&after)
}

/// A prescribed list of insertion shapes `shape_0, .., shape_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShapeTrajectory {
    shapes: Vec<Partition>,
}

impl ShapeTrajectory {
    pub fn new(shapes: Vec<Partition>) -> Result<Self> {
        if shapes.is_empty() {
            return Err(Error::invalid("trajectory", "at least one shape is required"));
        }
        let n = shapes[0].size();
        if shapes.iter().any(|s| s.size() != n) {
            return Err(Error::invalid("trajectory", "shapes must all have the same size"));
        }
        Ok(ShapeTrajectory { shapes })
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn steps(&self) -> usize {
        self.shapes.len() - 1
    }

    /// The length-8 five-card trajectory realized by no shuffle sequence.
    pub fn unreachable_example() -> Self {
        let shapes = ["(5)", "(4,1)", "(3,2)", "(4,1)", "(3,2)", "(2,2,1)", "(3,2)", "(4,1)", "(5)"]
            .iter()
            .map(|s| s.parse().expect("literal shapes parse"))
            .collect();
        ShapeTrajectory { shapes }
    }

    /// Number of move paths following exactly these shapes: the product of
    /// one-step multiplicities.
    pub fn move_path_count(&self) -> Int {
        let n = self.shapes[0].size() as u32;
        let graph = partition_move_graph(n, false);
        let mut acc = Int::from(1u32);
        for w in self.shapes.windows(2) {
            acc *= graph.multiplicity(&w[0], &w[1]);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }
}

impl std::fmt::Display for ShapeTrajectory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, s) in self.shapes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ShapeTrajectory {
    type Err = Error;

    /// Parses a comma-separated list of partition strings,
    /// e.g. `(5),(4,1),(3,2)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut shapes = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| Error::invalid("trajectory", "unbalanced parentheses"))?
                }
                ',' if depth == 0 => {
                    shapes.push(s[start..i].parse()?);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(Error::invalid("trajectory", "unbalanced parentheses"));
        }
        let tail = s[start..].trim();
        if !tail.is_empty() {
            shapes.push(tail.parse()?);
        }
        ShapeTrajectory::new(shapes)
    }
}

/// All sequences `(m_1, .., m_t)` of random-to-top shuffles of `n` cards
/// whose partial products trace exactly the given shapes, found by
/// depth-first search pruned on shape mismatch.
pub fn search_trajectory(n: usize, trajectory: &ShapeTrajectory) -> Result<Vec<Vec<usize>>> {
    if trajectory.shapes()[0].size() != n as u64 {
        return Err(Error::SizeMismatch(trajectory.shapes()[0].size(), n as u64));
    }
    let mut out = Vec::new();
    if rsk_shape(&Permutation::identity(n)) != trajectory.shapes()[0] {
        return Ok(out);
    }
    let gens: Vec<Permutation> = (1..=n).map(|m| Permutation::random_to_top(n, m)).collect();
    let mut prefix = Vec::new();
    fn dfs(
        tau: &Permutation,
        step: usize,
        trajectory: &ShapeTrajectory,
        gens: &[Permutation],
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if step == trajectory.steps() {
            out.push(prefix.clone());
            return;
        }
        for (m, g) in gens.iter().enumerate() {
            let next = tau.then(g);
            if rsk_shape(&next) == trajectory.shapes()[step + 1] {
                prefix.push(m + 1);
                dfs(&next, step + 1, trajectory, gens, prefix, out);
                prefix.pop();
            }
        }
    }
    dfs(&Permutation::identity(n), 0, trajectory, &gens, &mut prefix, &mut out);
    Ok(out)
}

/// The full pruned search tree as JSON. Vertices are labelled by the deck
/// order, i.e. the inverse of the running product; edges carry the shuffle
/// index `m`.
pub fn search_trajectory_tree(n: usize, trajectory: &ShapeTrajectory) -> Result<String> {
    fn node(
        tau: &Permutation,
        step: usize,
        trajectory: &ShapeTrajectory,
        gens: &[Permutation],
    ) -> serde_json::Value {
        let mut children = Vec::new();
        if step < trajectory.steps() {
            for (m, g) in gens.iter().enumerate() {
                let next = tau.then(g);
                if rsk_shape(&next) == trajectory.shapes()[step + 1] {
                    let mut child = node(&next, step + 1, trajectory, gens);
                    child["shuffle"] = serde_json::json!(m + 1);
                    children.push(child);
                }
            }
        }
        serde_json::json!({
            "deck": tau.inverse().to_string(),
            "shape": rsk_shape(tau).to_string(),
            "complete": step == trajectory.steps(),
            "children": children,
        })
    }
    if trajectory.shapes()[0].size() != n as u64 {
        return Err(Error::SizeMismatch(trajectory.shapes()[0].size(), n as u64));
    }
    let gens: Vec<Permutation> = (1..=n).map(|m| Permutation::random_to_top(n, m)).collect();
    let root = node(&Permutation::identity(n), 0, trajectory, &gens);
    Ok(root.to_string())
}

/// A trajectory on which shuffle sequences and move paths disagree.
#[derive(Clone, Debug)]
pub struct TrajectoryMismatch {
    pub trajectory: ShapeTrajectory,
    pub sequences: Int,
    pub move_paths: Int,
}

/// Outcome of comparing, trajectory by trajectory, the number of length-`t`
/// identity shuffle sequences with the number of move paths from `(n)` to
/// `(n)` along the same shapes.
pub struct BijectionReport {
    pub n: usize,
    pub t: u64,
    pub trajectories: usize,
    pub mismatches: Vec<TrajectoryMismatch>,
    pub total_sequences: Int,
    pub total_move_paths: Int,
}

impl BijectionReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Walks the move graph from `(n)` over all length-`t` trajectories ending
/// back at `(n)`, carrying the count of shuffle sequences realizing each
/// trajectory prefix alongside the move-path multiplicity. Sequence counts
/// stay below `n^t`, so `u64` arithmetic suffices at the supported sizes.
pub fn bijection_check(n: usize, t: u64) -> Result<BijectionReport> {
    if n == 0 || n > 6 || t > 8 {
        return Err(Error::ResourceBound(format!(
            "bijection_check needs 1 <= n <= 6 and t <= 8, got n={n} t={t}"
        )));
    }
    let elements: Vec<Permutation> = enumerate_group(GroupFamily::A, n)?
        .iter()
        .map(|g| g.to_permutation().expect("type A"))
        .collect();
    let index: HashMap<Permutation, usize> =
        elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
    let step_tables: Vec<Vec<usize>> = (1..=n)
        .map(|m| {
            let g = Permutation::random_to_top(n, m);
            elements.iter().map(|e| index[&e.then(&g)]).collect()
        })
        .collect();
    let graph = partition_move_graph(n as u32, false);
    let shape_index: Vec<usize> = elements
        .iter()
        .map(|e| graph.index_of(&rsk_shape(e)).expect("shape of a partition of n"))
        .collect();
    let shape_count = graph.states().len();
    let start_shape = graph.index_of(&Partition::row(n as u32)).expect("(n) present");
    let adjacency: Vec<Vec<(usize, u64)>> = (0..shape_count)
        .map(|i| {
            (0..shape_count)
                .filter_map(|j| {
                    let m = graph.adjacency().get(i, j);
                    if m.is_zero() {
                        None
                    } else {
                        Some((j, u64::try_from(m.clone()).expect("small multiplicity")))
                    }
                })
                .collect()
        })
        .collect();

    struct Search<'a> {
        t: u64,
        start_shape: usize,
        shape_index: &'a [usize],
        step_tables: &'a [Vec<usize>],
        adjacency: &'a [Vec<(usize, u64)>],
        graph_states: &'a [Partition],
        path: Vec<usize>,
        mismatches: Vec<TrajectoryMismatch>,
        trajectories: usize,
        total_sequences: u64,
        total_move_paths: u64,
    }

    impl Search<'_> {
        /// `counts[g] = number of sequences realizing the current prefix
        /// with product g`; `move_paths` multiplies the one-step move
        /// multiplicities along the prefix.
        fn visit(
            &mut self,
            shape: usize,
            counts: &HashMap<usize, u64>,
            move_paths: u64,
            depth: u64,
        ) {
            if depth == self.t {
                if shape == self.start_shape {
                    self.trajectories += 1;
                    let sequences: u64 = counts.values().sum();
                    self.total_sequences += sequences;
                    self.total_move_paths += move_paths;
                    if sequences != move_paths {
                        let shapes =
                            self.path.iter().map(|&i| self.graph_states[i].clone()).collect();
                        self.mismatches.push(TrajectoryMismatch {
                            trajectory: ShapeTrajectory::new(shapes).expect("nonempty"),
                            sequences: Int::from(sequences),
                            move_paths: Int::from(move_paths),
                        });
                    }
                }
                return;
            }
            // split the prefix counts by the shape reached next
            let mut split: Vec<HashMap<usize, u64>> = vec![HashMap::new(); self.adjacency.len()];
            for (&g, &c) in counts {
                for table in self.step_tables {
                    let h = table[g];
                    *split[self.shape_index[h]].entry(h).or_default() += c;
                }
            }
            for &(next_shape, mult) in &self.adjacency[shape] {
                self.path.push(next_shape);
                self.visit(next_shape, &split[next_shape], move_paths * mult, depth + 1);
                self.path.pop();
            }
        }
    }

    let identity_index = index[&Permutation::identity(n)];
    let mut search = Search {
        t,
        start_shape,
        shape_index: &shape_index,
        step_tables: &step_tables,
        adjacency: &adjacency,
        graph_states: graph.states(),
        path: vec![start_shape],
        mismatches: Vec::new(),
        trajectories: 0,
        total_sequences: 0,
        total_move_paths: 0,
    };
    let mut initial = HashMap::new();
    initial.insert(identity_index, 1u64);
    search.visit(start_shape, &initial, 1, 0);

    Ok(BijectionReport {
        n,
        t,
        trajectories: search.trajectories,
        mismatches: search.mismatches,
        total_sequences: Int::from(search.total_sequences),
        total_move_paths: Int::from(search.total_move_paths),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::shuffles::count_identity_sequences;
    use crate::shuffles::ShuffleFamily;

    #[test]
    fn shapes_of_extreme_words() {
        for n in 1..=6usize {
            assert_eq!(rsk_shape(&Permutation::identity(n)), Partition::row(n as u32));
            let reverse = Permutation::new((1..=n as u32).rev().collect()).unwrap();
            assert_eq!(rsk_shape(&reverse), Partition::new(vec![1; n]).unwrap());
        }
        let p = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(rsk_shape(&p).to_string(), "(2,1)");
    }

    #[test]
    fn shape_is_inverse_invariant() {
        for n in 1..=5usize {
            for g in enumerate_group(GroupFamily::A, n).unwrap() {
                let p = g.to_permutation().unwrap();
                assert_eq!(rsk_shape(&p), rsk_shape(&p.inverse()), "{p}");
            }
        }
    }

    #[test]
    fn move_step_property() {
        let id = Permutation::identity(4);
        assert!(verify_move_step(&id, 1));
        assert!(verify_move_step(&id, 2));
        // exhaustive over S_4
        for g in enumerate_group(GroupFamily::A, 4).unwrap() {
            let p = g.to_permutation().unwrap();
            for m in 1..=4 {
                assert!(verify_move_step(&p, m), "tau = {p}, m = {m}");
            }
        }
    }

    #[test]
    fn trajectory_parsing() {
        let t: ShapeTrajectory = "(5),(4,1),(3,2)".parse().unwrap();
        assert_eq!(t.steps(), 2);
        assert_eq!(t.to_string(), "(5),(4,1),(3,2)");
        assert!("(2),(1,1),(3)".parse::<ShapeTrajectory>().is_err());
        assert!("".parse::<ShapeTrajectory>().is_err());
        assert!("(2),(2".parse::<ShapeTrajectory>().is_err());
    }

    #[test]
    fn search_small_trajectories() {
        // ((n)) alone is realized by the empty sequence
        let t: ShapeTrajectory = "(3)".parse().unwrap();
        assert_eq!(search_trajectory(3, &t).unwrap(), vec![Vec::<usize>::new()]);

        // (2),(2): only the identity shuffle preserves the row shape
        let t: ShapeTrajectory = "(2),(2)".parse().unwrap();
        assert_eq!(search_trajectory(2, &t).unwrap(), vec![vec![1]]);

        let t: ShapeTrajectory = "(2),(1,1),(2)".parse().unwrap();
        assert_eq!(search_trajectory(2, &t).unwrap(), vec![vec![2, 2]]);
    }

    #[test]
    fn unreachable_trajectory_has_move_paths_but_no_sequences() {
        let t = ShapeTrajectory::unreachable_example();
        assert_eq!(t.steps(), 8);
        assert_eq!(search_trajectory(5, &t).unwrap().len(), 0);
        assert_eq!(t.move_path_count(), int(1));
    }

    #[test]
    fn search_tree_labels_decks() {
        let t: ShapeTrajectory = "(2),(1,1)".parse().unwrap();
        let tree: serde_json::Value = search_trajectory_tree(2, &t).unwrap().parse().unwrap();
        assert_eq!(tree["deck"], "[1,2]");
        assert_eq!(tree["children"][0]["deck"], "[2,1]");
        assert_eq!(tree["children"][0]["shuffle"], 2);
    }

    #[test]
    fn bijection_check_small() {
        let report = bijection_check(2, 2).unwrap();
        assert!(report.agrees());
        assert_eq!(report.total_sequences, int(2));
        assert_eq!(report.total_move_paths, int(2));
        assert!(bijection_check(7, 2).is_err());
    }

    #[test]
    fn bijection_marginals_match_the_counts() {
        for n in 2..=4usize {
            for t in 0..=5u64 {
                let report = bijection_check(n, t).unwrap();
                let family = ShuffleFamily::random_to_top(GroupFamily::A, n, false).unwrap();
                let s = count_identity_sequences(&family, t).unwrap();
                let m = crate::moves::move_return_count(n as u32, t, false);
                assert_eq!(report.total_sequences, s, "n={n} t={t}");
                assert_eq!(report.total_move_paths, m, "n={n} t={t}");
            }
        }
    }
}
