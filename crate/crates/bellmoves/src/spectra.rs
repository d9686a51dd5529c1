//! Transition matrices of the `k`-shuffle Markov chains, permutation
//! characters counted as fixed points, and exact verification of the
//! eigenvalue theorems by power sums.
//!
//! For a chain whose step multiplies by one of `N` shuffle procedures chosen
//! uniformly, the claimed eigenvalue multiset is `{ char(g) / N : g in G }`,
//! where `char` counts fixed points of `g` on `k`-subsets (type A) or on the
//! signed `k`-subset model (types B and D). Excluding the identity rescales
//! to `(char(g) - c) / (N - c)` with `c` the multiplicity of the identity
//! among the procedures. Equality of the eigenvalue multiset with the claim
//! is certified exactly: the trace of the `t`-th power of the transition
//! matrix is `|G| * w_t / N^t` with `w_t` the identity-walk count, and
//! matching the first `|G|` power sums pins the multiset by Newton's
//! identities.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::algebra::{format_rat, power_sums_equal, rat_from_int, Int, Rat, RatMatrix};
use crate::moves::partition_move_graph;
use crate::shuffles::{ShuffleFamily, WalkTable, DEFAULT_GROUP_CAP};
use crate::structures::{GroupFamily, Partition, SignedPermutation};
use crate::{Error, Result};

/// Fixed points of `g` acting on the `k`-subset model carrying the shuffle
/// chain's permutation character.
///
/// Type A counts `k`-subsets of `{1..n}` fixed setwise. Types B and D count
/// fixed `k`-subsets of the signed points `{±1, .., ±n}` containing at most
/// one of each pair `{i, -i}`; type D is the same action restricted to
/// `D_n`, so the only difference is the membership check.
pub fn perm_char(family: GroupFamily, n: usize, k: usize, g: &SignedPermutation) -> Result<Int> {
    if g.n() != n {
        return Err(Error::OutsideGroup(format!("{g} acts on {} points, not {n}", g.n())));
    }
    match family {
        GroupFamily::A if !g.is_all_positive() => {
            return Err(Error::OutsideGroup(format!("{g} is not all-positive")))
        }
        GroupFamily::D if !g.is_type_d() => {
            return Err(Error::OutsideGroup(format!("{g} has oddly many sign changes")))
        }
        _ => {}
    }
    let mut fixed = Int::zero();
    match family {
        GroupFamily::A => {
            for subset in (1..=n as i32).combinations(k) {
                let image: Vec<i32> = subset.iter().map(|&x| g.apply(x)).sorted().collect();
                if image == subset {
                    fixed += 1;
                }
            }
        }
        GroupFamily::B | GroupFamily::D => {
            for subset in (1..=n as i32).combinations(k) {
                for mask in 0u32..(1u32 << k) {
                    let signed: Vec<i32> = subset
                        .iter()
                        .enumerate()
                        .map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x })
                        .collect();
                    let image: Vec<i32> =
                        signed.iter().map(|&x| g.apply(x)).sorted_by_key(|x| x.abs()).collect();
                    if image == signed {
                        fixed += 1;
                    }
                }
            }
        }
    }
    Ok(fixed)
}

/// Row-stochastic transition matrix of the chain, indexed by the group
/// enumeration order: entry `(sigma, tau)` is `#(procedures g with
/// sigma g = tau) / N`.
pub fn transition_matrix(chain: &ShuffleFamily, cap: u64) -> Result<RatMatrix> {
    let gens = chain.generators();
    if gens.is_empty() {
        return Err(Error::invalid("chain", "no generators remain after excluding the identity"));
    }
    let table = WalkTable::new(chain.family, chain.n, &gens, cap)?;
    let n_rat = rat_from_int(Int::from(gens.len()));
    let order = table.order();
    let mut counts = vec![0u64; order * order];
    for (i, e) in table.elements().iter().enumerate() {
        for g in &gens {
            let j = table.index_of(&e.then(g)).expect("product stays in the group");
            counts[i * order + j] += 1;
        }
    }
    Ok(RatMatrix::from_fn(order, order, |r, c| {
        rat_from_int(Int::from(counts[r * order + c])) / &n_rat
    }))
}

/// Outcome of an exact spectrum verification.
pub struct SpectrumReport {
    pub chain: ShuffleFamily,
    /// Claimed eigenvalues with multiplicities, in decreasing order.
    pub predicted: Vec<(Rat, usize)>,
    pub moments_checked: usize,
    pub verdict: bool,
}

impl SpectrumReport {
    pub fn to_json(&self) -> String {
        let predicted: Vec<serde_json::Value> = self
            .predicted
            .iter()
            .map(|(v, m)| serde_json::json!([format_rat(v), m]))
            .collect();
        serde_json::json!({
            "family": self.chain.family.to_string(),
            "n": self.chain.n,
            "k": self.chain.k,
            "exclude_identity": self.chain.exclude_identity,
            "predicted": predicted,
            "moments_checked": self.moments_checked,
            "verdict": if self.verdict { "pass" } else { "fail" },
        })
        .to_string()
    }
}

/// Verifies that the chain's eigenvalue multiset equals the fixed-point
/// prediction, by comparing all `|G|` exact moments. The `t`-th moment of
/// the spectrum is recovered without rational matrix powers: walks of the
/// Cayley graph give `Tr P^t = |G| w_t / N^t`.
pub fn verify_spectrum(chain: &ShuffleFamily, cap: u64) -> Result<SpectrumReport> {
    let gens = chain.generators();
    if gens.is_empty() {
        return Err(Error::invalid("chain", "no generators remain after excluding the identity"));
    }
    let offset = if chain.exclude_identity {
        Int::from(chain.identity_multiplicity())
    } else {
        Int::zero()
    };
    let table = WalkTable::new(chain.family, chain.n, &gens, cap)?;
    let order = table.order();
    let n_rat = rat_from_int(Int::from(gens.len()));

    let predicted: Vec<Rat> = table
        .elements()
        .iter()
        .map(|g| {
            let chi = perm_char(chain.family, chain.n, chain.k, g)?;
            Ok(rat_from_int(chi - &offset) / &n_rat)
        })
        .collect::<Result<_>>()?;

    let walks = table.identity_walk_counts(order as u64);
    let group_order = Int::from(order);
    let mut scale = Rat::one();
    let mut moments = Vec::with_capacity(order);
    for w in walks.iter().skip(1) {
        scale /= &n_rat;
        moments.push(rat_from_int(&group_order * w) * &scale);
    }

    let verdict = power_sums_equal(&predicted, &moments)?;

    let mut grouped: BTreeMap<Rat, usize> = BTreeMap::new();
    for v in predicted {
        *grouped.entry(v).or_default() += 1;
    }
    Ok(SpectrumReport {
        chain: *chain,
        predicted: grouped.into_iter().rev().collect(),
        moments_checked: order,
        verdict,
    })
}

/// Exact comparison of two distributions on partitions of `n`:
/// the `t`-step restriction chain started at `(n)`, whose step from `lambda`
/// moves to `mu` with probability `M_1(lambda, mu)/n * dim(mu)/dim(lambda)`,
/// against the distribution of the insertion shape of a product of `t`
/// uniform random-to-top shuffles.
pub struct ShapeDistributions {
    pub chain: BTreeMap<Partition, Rat>,
    pub shuffle: BTreeMap<Partition, Rat>,
    pub agree: bool,
}

pub fn fulman_vs_rsk(n: usize, t: u64) -> Result<ShapeDistributions> {
    if n > 6 || t > 8 {
        return Err(Error::ResourceBound(format!(
            "fulman_vs_rsk needs n <= 6 and t <= 8, got n={n} t={t}"
        )));
    }
    if n == 0 {
        return Err(Error::invalid("shape distribution", "n must be at least 1"));
    }

    // restriction chain side
    let graph = partition_move_graph(n as u32, false);
    let shapes = graph.states().to_vec();
    let dims: Vec<Int> = shapes.iter().map(|p| p.hook_dimension()).collect();
    let n_rat = rat_from_int(Int::from(n));
    let start = shapes.iter().position(|p| p == &Partition::row(n as u32)).expect("(n) present");
    let mut chain: Vec<Rat> = vec![Rat::zero(); shapes.len()];
    chain[start] = Rat::one();
    for _ in 0..t {
        let mut next = vec![Rat::zero(); shapes.len()];
        for (i, p) in chain.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for j in 0..shapes.len() {
                let mult = graph.adjacency().get(i, j);
                if mult.is_zero() {
                    continue;
                }
                let step = rat_from_int(mult.clone()) / &n_rat * rat_from_int(dims[j].clone())
                    / rat_from_int(dims[i].clone());
                next[j] += p * step;
            }
        }
        chain = next;
    }

    // shuffle side: endpoint counts projected through the insertion shape
    let family = ShuffleFamily::random_to_top(GroupFamily::A, n, false)?;
    let table = WalkTable::new(GroupFamily::A, n, &family.generators(), DEFAULT_GROUP_CAP)?;
    let endpoint = table.endpoint_counts(t);
    let total = rat_from_int(Int::from(n).pow(t as u32));
    let mut shuffle: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (i, count) in endpoint.iter().enumerate() {
        if count.is_zero() {
            continue;
        }
        let shape = crate::rsk::rsk_shape(&table.elements()[i].to_permutation().expect("type A"));
        let entry = shuffle.entry(shape).or_insert_with(Rat::zero);
        *entry += rat_from_int(count.clone()) / &total;
    }

    let chain_map: BTreeMap<Partition, Rat> =
        shapes.into_iter().zip(chain).filter(|(_, p)| !p.is_zero()).collect();
    let agree = chain_map == shuffle;
    Ok(ShapeDistributions { chain: chain_map, shuffle, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::structures::enumerate_group;

    fn chain(family: GroupFamily, n: usize, k: usize, exclude: bool) -> ShuffleFamily {
        ShuffleFamily::new(family, n, k, exclude).unwrap()
    }

    #[test]
    fn char_counts_type_a() {
        let id = SignedPermutation::identity(4);
        assert_eq!(perm_char(GroupFamily::A, 4, 2, &id).unwrap(), int(6));
        let transposition: SignedPermutation = "[2,1,3]".parse().unwrap();
        assert_eq!(perm_char(GroupFamily::A, 3, 1, &transposition).unwrap(), int(1));
        let cycle: SignedPermutation = "[2,3,1]".parse().unwrap();
        assert_eq!(perm_char(GroupFamily::A, 3, 1, &cycle).unwrap(), int(0));
    }

    #[test]
    fn char_counts_type_b_top_model() {
        // k = n: 2^d fixed sign vectors when every orbit's sign product is
        // positive, otherwise zero.
        let id = SignedPermutation::identity(3);
        assert_eq!(perm_char(GroupFamily::B, 3, 3, &id).unwrap(), int(8));
        let swap: SignedPermutation = "[2,1,3]".parse().unwrap();
        // orbits {1,2}, {3}: 2^2
        assert_eq!(perm_char(GroupFamily::B, 3, 3, &swap).unwrap(), int(4));
        let neg: SignedPermutation = "[-1,2,3]".parse().unwrap();
        // orbit {1} has sign product -1
        assert_eq!(perm_char(GroupFamily::B, 3, 3, &neg).unwrap(), int(0));
        // B_1, k = 1: identity fixes both signed points, the flip neither
        let b1 = enumerate_group(GroupFamily::B, 1).unwrap();
        let vals: Vec<Int> =
            b1.iter().map(|g| perm_char(GroupFamily::B, 1, 1, g).unwrap()).collect();
        assert_eq!(vals, vec![int(2), int(0)]);
    }

    #[test]
    fn membership_is_checked() {
        let neg: SignedPermutation = "[-1,2]".parse().unwrap();
        assert!(matches!(perm_char(GroupFamily::A, 2, 1, &neg), Err(Error::OutsideGroup(_))));
        assert!(matches!(perm_char(GroupFamily::D, 2, 1, &neg), Err(Error::OutsideGroup(_))));
        assert!(perm_char(GroupFamily::B, 2, 1, &neg).is_ok());
    }

    #[test]
    fn transition_matrix_small_cases() {
        // two cards, random-to-top: every entry 1/2
        let p = transition_matrix(&chain(GroupFamily::A, 2, 1, false), 1000).unwrap();
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(p.get(r, c), &rat(1, 2));
            }
        }
        // k = n in type A: the only shuffle is the identity
        let p = transition_matrix(&chain(GroupFamily::A, 3, 3, false), 1000).unwrap();
        assert_eq!(p, RatMatrix::identity(6));
    }

    #[test]
    fn transition_matrices_are_row_stochastic() {
        for (fam, n, k, ex) in [
            (GroupFamily::A, 3, 1, false),
            (GroupFamily::A, 3, 2, true),
            (GroupFamily::B, 2, 1, false),
            (GroupFamily::B, 2, 2, true),
            (GroupFamily::D, 3, 1, false),
            (GroupFamily::D, 3, 3, true),
        ] {
            let p = transition_matrix(&chain(fam, n, k, ex), 1000).unwrap();
            for r in 0..p.rows() {
                let total: Rat = p.row(r).iter().fold(Rat::zero(), |acc, v| {
                    assert!(v >= &Rat::zero());
                    acc + v
                });
                assert_eq!(total, Rat::one(), "{fam:?} n={n} k={k} ex={ex} row {r}");
            }
        }
    }

    #[test]
    fn spectrum_s3_random_to_top() {
        let report = verify_spectrum(&chain(GroupFamily::A, 3, 1, false), 1000).unwrap();
        assert!(report.verdict);
        assert_eq!(report.predicted, vec![(rat(1, 1), 1), (rat(1, 3), 3), (rat(0, 1), 2)]);
        assert_eq!(report.moments_checked, 6);
    }

    #[test]
    fn spectrum_excluded_identity_two_cards() {
        let report = verify_spectrum(&chain(GroupFamily::A, 2, 1, true), 1000).unwrap();
        assert!(report.verdict);
        assert_eq!(report.predicted, vec![(rat(1, 1), 1), (rat(-1, 1), 1)]);
    }

    #[test]
    fn spectrum_b1_random_to_top() {
        let report = verify_spectrum(&chain(GroupFamily::B, 1, 1, false), 1000).unwrap();
        assert!(report.verdict);
        assert_eq!(report.predicted, vec![(rat(1, 1), 1), (rat(0, 1), 1)]);
    }

    #[test]
    fn type_d_spectrum_is_the_type_b_restriction() {
        // eigenvalues of the type D chain = type B values on D_n elements
        for (n, k) in [(2, 1), (3, 1), (3, 2), (3, 3)] {
            let d_report = verify_spectrum(&chain(GroupFamily::D, n, k, false), 1000).unwrap();
            assert!(d_report.verdict, "D n={n} k={k}");
            let mut from_b: BTreeMap<Rat, usize> = BTreeMap::new();
            let scale =
                rat_from_int(Int::from(chain(GroupFamily::B, n, k, false).generators().len()));
            for g in enumerate_group(GroupFamily::D, n).unwrap() {
                let chi = perm_char(GroupFamily::B, n, k, &g).unwrap();
                *from_b.entry(rat_from_int(chi) / &scale).or_default() += 1;
            }
            let expected: Vec<(Rat, usize)> = from_b.into_iter().rev().collect();
            assert_eq!(d_report.predicted, expected, "D n={n} k={k}");
        }
    }

    #[test]
    fn walk_moments_match_literal_matrix_powers() {
        // dual route: the moments verify_spectrum derives from walk counts
        // equal traces of actual rational matrix powers, and both certify
        // the fixed-point multiset
        use crate::algebra::{power_sums_equal, rat_from_int};
        for (fam, n, k, ex) in [
            (GroupFamily::A, 3, 1, false),
            (GroupFamily::A, 3, 2, true),
            (GroupFamily::B, 2, 1, false),
            (GroupFamily::D, 2, 2, false),
        ] {
            let spec = chain(fam, n, k, ex);
            let p = transition_matrix(&spec, 1000).unwrap();
            let mut moments = Vec::new();
            let mut power = RatMatrix::identity(p.rows());
            for _ in 0..p.rows() {
                power = power.mul(&p).unwrap();
                moments.push(power.trace());
            }
            let gens = spec.generators();
            let offset =
                if ex { Int::from(spec.identity_multiplicity()) } else { Int::from(0u32) };
            let scale = rat_from_int(Int::from(gens.len()));
            let predicted: Vec<Rat> = enumerate_group(fam, n)
                .unwrap()
                .iter()
                .map(|g| {
                    rat_from_int(perm_char(fam, n, k, g).unwrap() - &offset) / &scale
                })
                .collect();
            assert!(
                power_sums_equal(&predicted, &moments).unwrap(),
                "{fam:?} n={n} k={k} ex={ex}"
            );
        }
    }

    #[test]
    fn excluded_chains_keep_eigenvalue_one_at_the_identity() {
        // (char(id) - c)/(N - c) = 1 because char(id) counts the whole
        // model, of size N
        for (fam, n, k) in [
            (GroupFamily::A, 3, 1),
            (GroupFamily::A, 4, 2),
            (GroupFamily::B, 2, 2),
            (GroupFamily::D, 2, 2),
            (GroupFamily::D, 3, 3),
        ] {
            let report = verify_spectrum(&chain(fam, n, k, true), 1000).unwrap();
            assert!(report.verdict, "{fam:?} n={n} k={k}");
            assert_eq!(report.predicted[0], (Rat::one(), 1), "{fam:?} n={n} k={k}");
        }
    }

    #[test]
    fn spectrum_json_format() {
        let report = verify_spectrum(&chain(GroupFamily::A, 2, 1, false), 1000).unwrap();
        let v: serde_json::Value = report.to_json().parse().unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["moments_checked"], 2);
        assert_eq!(v["predicted"][0][0], "1");
    }

    #[test]
    fn fulman_matches_rsk_shapes_small() {
        let d = fulman_vs_rsk(2, 0).unwrap();
        assert!(d.agree);
        assert_eq!(d.chain.len(), 1);

        let d = fulman_vs_rsk(2, 1).unwrap();
        assert!(d.agree);
        let two: Partition = "(2)".parse().unwrap();
        let one_one: Partition = "(1,1)".parse().unwrap();
        assert_eq!(d.chain[&two], rat(1, 2));
        assert_eq!(d.chain[&one_one], rat(1, 2));

        let d = fulman_vs_rsk(3, 2).unwrap();
        assert!(d.agree);
        assert!(fulman_vs_rsk(7, 2).is_err());
    }
}
