//! Shuffle generator sets in types A, B and D, exact counting of shuffle
//! sequences multiplying to the identity, and the explicit bijection between
//! set partitions and random-to-top shuffle sequences.
//!
//! Generator conventions, in the deck picture where a permutation moves the
//! card in position `i` to position `|i sigma|` and flips it when the image
//! is negative:
//!
//! * type A `k`-shuffle: pick `k` positions and move those cards to the top,
//!   preserving their relative order — one generator per position set;
//! * type B oriented `k`-shuffle: additionally pick a subset of the chosen
//!   cards to flip; the unflipped cards land on top in order, the flipped
//!   ones under them in reversed order, negated — `2^k C(n,k)` generators;
//! * type D cheating `k`-shuffle: each oriented `k`-shuffle, composed with a
//!   flip of the bottom card whenever that is needed to land in `D_n`.
//!
//! The type D list is constructed as a multiset of `2^k C(n,k)` procedures.
//! Its entries are pairwise distinct except in the boundary case `k = n`,
//! where exactly two procedures (flip nothing; flip only the bottom card)
//! yield the identity. Spectral verification needs the multiset with that
//! multiplicity, while sequence counting uses the distinct elements, which
//! is what makes the one-card deck count one sequence rather than `2^t`.

use std::collections::HashMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::algebra::{binomial, pow2, Int};
use crate::structures::{
    enumerate_group, GroupFamily, MarkedSetPartition, Permutation, SignedPermutation,
};
use crate::{Error, Result};

/// Default cap on the number of group elements materialized by the walk
/// dynamic programming.
pub const DEFAULT_GROUP_CAP: u64 = 10_000;

/// A family of shuffle generators: the `k`-shuffles of an `n`-card deck in
/// the chosen type, optionally with the identity generator excluded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShuffleFamily {
    pub family: GroupFamily,
    pub n: usize,
    pub k: usize,
    pub exclude_identity: bool,
}

impl ShuffleFamily {
    pub fn new(family: GroupFamily, n: usize, k: usize, exclude_identity: bool) -> Result<Self> {
        if n == 0 || k == 0 || k > n {
            return Err(Error::invalid("shuffle family", format!("need 1 <= k <= n, got k={k}, n={n}")));
        }
        Ok(ShuffleFamily { family, n, k, exclude_identity })
    }

    /// Random-to-top shuffles (`k = 1`) of the given type.
    pub fn random_to_top(family: GroupFamily, n: usize, exclude_identity: bool) -> Result<Self> {
        Self::new(family, n, 1, exclude_identity)
    }

    /// Number of shuffle procedures, identity included: `C(n,k)` in type A
    /// and `2^k C(n,k)` in types B and D.
    pub fn procedure_count(&self) -> Int {
        let c = binomial(self.n as u64, self.k as i64);
        match self.family {
            GroupFamily::A => c,
            GroupFamily::B | GroupFamily::D => c * pow2(self.k as u64),
        }
    }

    /// The full generator list as a multiset of procedures, identity
    /// included regardless of `exclude_identity`. Entries are distinct
    /// except for type D with `k = n`, where the identity occurs twice.
    pub fn procedures(&self) -> Vec<SignedPermutation> {
        let n = self.n;
        let k = self.k;
        let mut out = Vec::new();
        for positions in (1..=n).combinations(k) {
            match self.family {
                GroupFamily::A => out.push(oriented_shuffle(n, &positions, &[])),
                GroupFamily::B | GroupFamily::D => {
                    for flips in positions.iter().copied().powerset() {
                        let g = oriented_shuffle(n, &positions, &flips);
                        if self.family == GroupFamily::B {
                            out.push(g);
                        } else {
                            out.push(into_type_d(g));
                        }
                    }
                }
            }
        }
        debug_assert_eq!(Int::from(out.len()), self.procedure_count());
        debug_assert!(self.duplicates_are_expected(&out));
        out
    }

    fn duplicates_are_expected(&self, procedures: &[SignedPermutation]) -> bool {
        let mut counts: HashMap<&SignedPermutation, usize> = HashMap::new();
        for g in procedures {
            *counts.entry(g).or_default() += 1;
        }
        if self.family == GroupFamily::D && self.k == self.n {
            counts.iter().all(|(g, &c)| if g.is_identity() { c == 2 } else { c == 1 })
        } else {
            counts.values().all(|&c| c == 1)
        }
    }

    /// Multiplicity of the identity among the procedures.
    pub fn identity_multiplicity(&self) -> usize {
        if self.family == GroupFamily::D && self.k == self.n {
            2
        } else {
            1
        }
    }

    /// The generator multiset actually driving a chain or count: all
    /// procedures, minus every identity copy when `exclude_identity` is set.
    pub fn generators(&self) -> Vec<SignedPermutation> {
        let mut gens = self.procedures();
        if self.exclude_identity {
            gens.retain(|g| !g.is_identity());
        }
        gens
    }

    /// The distinct generator set, in first-appearance order.
    pub fn distinct_generators(&self) -> Vec<SignedPermutation> {
        let mut seen = HashMap::new();
        let mut out = Vec::new();
        for g in self.generators() {
            if seen.insert(g.clone(), ()).is_none() {
                out.push(g);
            }
        }
        out
    }
}

/// Builds the oriented `k`-shuffle for a set of chosen positions and a
/// subset of them to flip. With no flips this is the type A `k`-shuffle.
fn oriented_shuffle(n: usize, positions: &[usize], flips: &[usize]) -> SignedPermutation {
    let k = positions.len();
    let mut images = vec![0i32; n];
    let mut next_plain = 1;
    // unflipped chosen cards keep their order on top
    for &p in positions {
        if !flips.contains(&p) {
            images[p - 1] = next_plain;
            next_plain += 1;
        }
    }
    // flipped cards go below them, reversed and negated
    for (b, &p) in flips.iter().enumerate() {
        images[p - 1] = -((k - b) as i32);
    }
    // everything else shifts down, order preserved
    let mut next_rest = (k + 1) as i32;
    for p in 1..=n {
        if !positions.contains(&p) {
            images[p - 1] = next_rest;
            next_rest += 1;
        }
    }
    SignedPermutation::new(images).expect("construction yields a valid signed permutation")
}

/// Flips the card sent to the bottom position whenever that is needed to
/// land in `D_n`.
fn into_type_d(g: SignedPermutation) -> SignedPermutation {
    if g.is_type_d() {
        g
    } else {
        let n = g.n();
        let mut swap: Vec<i32> = (1..=n as i32).collect();
        swap[n - 1] = -(n as i32);
        g.then(&SignedPermutation::new(swap).unwrap())
    }
}

/// True when `p` moves some `k` cards to the top preserving their relative
/// order: the preimages of `1..=k` and of `k+1..=n` must each appear in
/// increasing order.
pub fn is_k_shuffle(p: &Permutation, k: usize) -> bool {
    let n = p.n();
    if k > n {
        return false;
    }
    let inv = p.inverse();
    let top: Vec<usize> = (1..=k).map(|i| inv.apply(i)).collect();
    let rest: Vec<usize> = (k + 1..=n).map(|i| inv.apply(i)).collect();
    top.windows(2).all(|w| w[0] < w[1]) && rest.windows(2).all(|w| w[0] < w[1])
}

/// Precomputed multiplication tables for walks on a group's Cayley graph.
pub struct WalkTable {
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
    /// one map per generator: `step[g][i] = index of elements[i] * g`
    steps: Vec<Vec<usize>>,
    identity: usize,
}

impl WalkTable {
    pub fn new(family: GroupFamily, n: usize, generators: &[SignedPermutation], cap: u64) -> Result<Self> {
        let order = crate::structures::group_order(family, n);
        if order > Int::from(cap) {
            return Err(Error::GroupTooLarge {
                order: u64::try_from(order.clone()).unwrap_or(u64::MAX),
                cap,
            });
        }
        let elements = enumerate_group(family, n)?;
        let index: HashMap<SignedPermutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let steps = generators
            .iter()
            .map(|g| elements.iter().map(|e| index[&e.then(g)]).collect())
            .collect();
        let identity = index[&SignedPermutation::identity(n)];
        Ok(WalkTable { elements, index, steps, identity })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn index_of(&self, g: &SignedPermutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Number of generator sequences of each length `0..=t_max` whose
    /// product is the identity. One step advances every endpoint count by
    /// every generator, so a sequence is counted once per choice of
    /// procedure even when procedures coincide as group elements.
    pub fn identity_walk_counts(&self, t_max: u64) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.elements.len()];
        v[self.identity] = Int::one();
        let mut out = vec![Int::one()];
        for _ in 0..t_max {
            let mut w = vec![Int::zero(); self.elements.len()];
            for step in &self.steps {
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        w[step[i]] += c;
                    }
                }
            }
            v = w;
            out.push(v[self.identity].clone());
        }
        out
    }

    /// Endpoint distribution after exactly `t` steps: entry `i` counts the
    /// generator sequences of length `t` whose product is `elements[i]`.
    pub fn endpoint_counts(&self, t: u64) -> Vec<Int> {
        let mut v = vec![Int::zero(); self.elements.len()];
        v[self.identity] = Int::one();
        for _ in 0..t {
            let mut w = vec![Int::zero(); self.elements.len()];
            for step in &self.steps {
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        w[step[i]] += c;
                    }
                }
            }
            v = w;
        }
        v
    }
}

/// Exact number of length-`t` sequences of the family's distinct shuffles
/// whose product is the identity, by dynamic programming over group
/// elements. `n = 0` is not accepted here; the count tables apply the
/// empty-deck convention themselves.
pub fn count_identity_sequences(family: &ShuffleFamily, t: u64) -> Result<Int> {
    count_identity_sequences_with_cap(family, t, DEFAULT_GROUP_CAP)
}

pub fn count_identity_sequences_with_cap(family: &ShuffleFamily, t: u64, cap: u64) -> Result<Int> {
    let gens = family.distinct_generators();
    let table = WalkTable::new(family.family, family.n, &gens, cap)?;
    Ok(table.identity_walk_counts(t).pop().expect("counts nonempty"))
}

/// One random-to-top step: the position lifted, and whether the lifted card
/// is flipped (types B and D only).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ShuffleStep {
    pub position: usize,
    pub flip: bool,
}

/// A sequence of random-to-top shuffles of a fixed type and deck size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShuffleSequence {
    pub family: GroupFamily,
    pub n: usize,
    pub steps: Vec<ShuffleStep>,
}

impl ShuffleSequence {
    /// The group element of one step. In type D the flip step is the
    /// cheating shuffle `rhobar_m (-n,n)`.
    pub fn step_element(&self, step: ShuffleStep) -> SignedPermutation {
        let m = step.position;
        let base = if step.flip {
            oriented_shuffle(self.n, &[m], &[m])
        } else {
            oriented_shuffle(self.n, &[m], &[])
        };
        match self.family {
            GroupFamily::A | GroupFamily::B => base,
            GroupFamily::D => {
                if step.flip {
                    into_type_d(base)
                } else {
                    base
                }
            }
        }
    }

    pub fn product(&self) -> SignedPermutation {
        let mut acc = SignedPermutation::identity(self.n);
        for &s in &self.steps {
            acc = acc.then(&self.step_element(s));
        }
        acc
    }

    /// Generator name of one step: `s3`, `rho2`, `rhobar2`, `cheat-rhobar2`.
    pub fn step_name(&self, step: ShuffleStep) -> String {
        match (self.family, step.flip) {
            (GroupFamily::A, _) => format!("s{}", step.position),
            (GroupFamily::B, false) | (GroupFamily::D, false) => format!("rho{}", step.position),
            (GroupFamily::B, true) => format!("rhobar{}", step.position),
            (GroupFamily::D, true) => format!("cheat-rhobar{}", step.position),
        }
    }

    /// JSON list of generator names.
    pub fn to_json(&self) -> String {
        let names: Vec<serde_json::Value> = self
            .steps
            .iter()
            .map(|&s| serde_json::Value::String(self.step_name(s)))
            .collect();
        serde_json::Value::Array(names).to_string()
    }
}

/// Converts a (marked) set partition into the unique sequence of
/// random-to-top shuffles fixing the deck whose lift-time sets are the
/// blocks. Block labels are forced greedily: the block containing the
/// largest not-yet-claimed time belongs to the smallest unused card label.
/// Marks, allowed in type B only, become flips of the lifted card.
pub fn partition_to_sequence(
    p: &MarkedSetPartition,
    family: GroupFamily,
    n: usize,
) -> Result<ShuffleSequence> {
    if family == GroupFamily::D {
        return Err(Error::Unsupported(
            "type D shuffle sequences have no direct set-partition description".into(),
        ));
    }
    if family == GroupFamily::A && !p.marks().is_empty() {
        return Err(Error::invalid("set partition", "marks require the type B family"));
    }
    let t = p.ground_size();
    let m = p.block_count();
    if m > n {
        return Err(Error::TooManyBlocks { blocks: m, n });
    }

    // label blocks: card c's lift times are the block holding the greatest
    // unclaimed time
    let mut unclaimed: Vec<bool> = vec![true; t + 1];
    let mut card_of_block = vec![0usize; m];
    for card in 1..=m {
        let top = (1..=t).rev().find(|&s| unclaimed[s]).expect("times remain");
        let b = p.block_of(top);
        card_of_block[b] = card;
        for &s in &p.blocks()[b] {
            unclaimed[s] = false;
        }
    }
    let mut lifted_card = vec![0usize; t + 1];
    for (b, block) in p.blocks().iter().enumerate() {
        for &s in block {
            lifted_card[s] = card_of_block[b];
        }
    }

    // replay the deck to find each lifted card's position
    let mut deck: Vec<usize> = (1..=n).collect();
    let mut steps = Vec::with_capacity(t);
    for s in 1..=t {
        let card = lifted_card[s];
        let pos = deck.iter().position(|&c| c == card).expect("card in deck") + 1;
        steps.push(ShuffleStep { position: pos, flip: p.is_marked(s) });
        deck.remove(pos - 1);
        deck.insert(0, card);
    }
    let seq = ShuffleSequence { family, n, steps };
    debug_assert!(seq.product().is_identity());
    Ok(seq)
}

/// Inverse of [`partition_to_sequence`]: reads off which card each shuffle
/// lifts and groups lift times by card; flip times become marks. The
/// product over the whole sequence must be the identity.
pub fn sequence_to_partition(seq: &ShuffleSequence) -> Result<MarkedSetPartition> {
    if seq.family == GroupFamily::D {
        return Err(Error::Unsupported(
            "type D shuffle sequences have no direct set-partition description".into(),
        ));
    }
    if !seq.product().is_identity() {
        return Err(Error::NotIdentityProduct);
    }
    let n = seq.n;
    let mut deck: Vec<usize> = (1..=n).collect();
    let mut lift_times: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let mut marks = Vec::new();
    for (s, &step) in seq.steps.iter().enumerate() {
        let time = s + 1;
        let card = deck[step.position - 1];
        lift_times[card].push(time);
        if step.flip {
            marks.push(time);
        }
        deck.remove(step.position - 1);
        deck.insert(0, card);
    }
    let blocks: Vec<Vec<usize>> = lift_times.into_iter().filter(|b| !b.is_empty()).collect();
    MarkedSetPartition::new(seq.steps.len(), blocks, marks)
}
