//! Grids of the generalized Bell and Stirling numbers, filled by whichever
//! of the independent algorithms applies: direct enumeration, column
//! recurrences, closed-form sums, transfer-matrix powers, or the shuffle
//! dynamic programming. Cross-method agreement is what the test suite
//! leans on, so each method is kept free of the others' machinery.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::algebra::{as_integer, binomial, factorial, pow2, rat_from_int, Int, Rat};
use crate::moves::{double_move_graph, partition_move_graph};
use crate::shuffles::{ShuffleFamily, WalkTable, DEFAULT_GROUP_CAP};
use crate::structures::{
    for_each_set_partition, DoublePartition, ForcedMarkRule, GroupFamily, Partition, SpacingRule,
};
use crate::{Error, Result};

/// The count families a table can hold.
///
/// `Bell*` count set partitions into at most `n` blocks (column-cumulative),
/// `Stir*` the exactly-`n`-block differences. The `B` suffixes are the
/// marked (type B) analogues, `Star` the spaced variants, and the `D`
/// variants are the type D move counts and their differences.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    Bell,
    BellPrime,
    BellB,
    BellBPrime,
    Stir,
    StirPrime,
    StirB,
    StirBPrime,
    StirStar,
    StirBStar,
    StirD,
    StirDPrime,
    MoveD,
    MoveDPrime,
}

impl Variant {
    pub const ALL: [Variant; 14] = [
        Variant::Bell,
        Variant::BellPrime,
        Variant::BellB,
        Variant::BellBPrime,
        Variant::Stir,
        Variant::StirPrime,
        Variant::StirB,
        Variant::StirBPrime,
        Variant::StirStar,
        Variant::StirBStar,
        Variant::StirD,
        Variant::StirDPrime,
        Variant::MoveD,
        Variant::MoveDPrime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Bell => "B",
            Variant::BellPrime => "Bprime",
            Variant::BellB => "Bdagger",
            Variant::BellBPrime => "Bdaggerprime",
            Variant::Stir => "stir",
            Variant::StirPrime => "stirprime",
            Variant::StirB => "stirdagger",
            Variant::StirBPrime => "stirdaggerprime",
            Variant::StirStar => "stirstar",
            Variant::StirBStar => "stirdaggerstar",
            Variant::StirD => "stirddagger",
            Variant::StirDPrime => "stirddaggerprime",
            Variant::MoveD => "Mddagger",
            Variant::MoveDPrime => "Mddaggerprime",
        }
    }

    /// Methods able to fill this variant's table.
    pub fn methods(self) -> &'static [Method] {
        use Method::*;
        match self {
            Variant::Bell | Variant::BellPrime | Variant::BellB | Variant::BellBPrime => {
                &[Enumeration, Recurrence, ClosedForm, TransferMatrix, ShuffleDp]
            }
            Variant::Stir | Variant::StirPrime | Variant::StirB | Variant::StirBPrime => {
                &[Enumeration, Recurrence, ClosedForm, TransferMatrix, ShuffleDp]
            }
            Variant::StirStar | Variant::StirBStar => &[Enumeration, Recurrence, ClosedForm],
            Variant::StirD | Variant::StirDPrime | Variant::MoveD | Variant::MoveDPrime => {
                &[TransferMatrix]
            }
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .iter()
            .copied()
            .find(|v| v.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid("variant", format!("unknown variant {s:?}")))
    }
}

/// The independent algorithms a table can be filled by.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Enumeration,
    Recurrence,
    ClosedForm,
    TransferMatrix,
    ShuffleDp,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Enumeration,
        Method::Recurrence,
        Method::ClosedForm,
        Method::TransferMatrix,
        Method::ShuffleDp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Enumeration => "enumeration",
            Method::Recurrence => "recurrence",
            Method::ClosedForm => "closed-form",
            Method::TransferMatrix => "transfer-matrix",
            Method::ShuffleDp => "shuffle-dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .iter()
            .copied()
            .find(|m| m.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid("method", format!("unknown method {s:?}")))
    }
}

/// A filled `(t, n)` grid, `0 <= t <= t_max`, `0 <= n <= n_max`, tagged with
/// the algorithm that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    pub variant: Variant,
    pub method: Method,
    t_max: u64,
    n_max: u32,
    grid: Vec<Int>,
}

impl CountTable {
    pub fn t_max(&self) -> u64 {
        self.t_max
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn get(&self, t: u64, n: u32) -> &Int {
        assert!(t <= self.t_max && n <= self.n_max, "cell ({t},{n}) outside the table");
        &self.grid[t as usize * (self.n_max as usize + 1) + n as usize]
    }

    /// Diagonal entry `(t, t)`, the unrestricted count.
    pub fn diagonal(&self, t: u64) -> &Int {
        self.get(t, u32::try_from(t).expect("diagonal within n range"))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,n,value\n");
        for t in 0..=self.t_max {
            for n in 0..=self.n_max {
                out.push_str(&format!("{t},{n},{}\n", self.get(t, n)));
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = (0..=self.t_max)
            .map(|t| {
                serde_json::Value::Array(
                    (0..=self.n_max)
                        .map(|n| serde_json::Value::String(self.get(t, n).to_string()))
                        .collect(),
                )
            })
            .collect();
        serde_json::json!({
            "variant": self.variant.name(),
            "method": self.method.name(),
            "t_max": self.t_max,
            "n_max": self.n_max,
            "rows": rows,
        })
        .to_string()
    }
}

/// Fills the `(t, n)` grid of the variant by the chosen method, or reports a
/// variant/method mismatch.
pub fn table(variant: Variant, t_max: u64, n_max: u32, method: Method) -> Result<CountTable> {
    if !variant.methods().contains(&method) {
        return Err(Error::invalid(
            "table method",
            format!("{} cannot be filled by {}", variant.name(), method.name()),
        ));
    }
    let grid = match method {
        Method::Enumeration => enumeration_grid(variant, t_max, n_max),
        Method::Recurrence => recurrence_grid(variant, t_max, n_max),
        Method::ClosedForm => closed_form_grid(variant, t_max, n_max),
        Method::TransferMatrix => transfer_grid(variant, t_max, n_max),
        Method::ShuffleDp => shuffle_grid(variant, t_max, n_max)?,
    };
    Ok(CountTable { variant, method, t_max, n_max, grid })
}

fn idx(t: u64, n: u32, n_max: u32) -> usize {
    t as usize * (n_max as usize + 1) + n as usize
}

// ---------------------------------------------------------------- recurrence

/// `stir(t,n) = stir(t-1,n-1) + n stir(t-1,n)`.
fn stir_grid(t_max: u64, n_max: u32) -> Vec<Int> {
    let mut g = vec![Int::zero(); (t_max as usize + 1) * (n_max as usize + 1)];
    g[0] = Int::one();
    for t in 1..=t_max {
        for n in 1..=n_max {
            let carry = g[idx(t - 1, n - 1, n_max)].clone();
            let stay = &g[idx(t - 1, n, n_max)] * Int::from(n);
            g[idx(t, n, n_max)] = carry + stay;
        }
    }
    g
}

/// `stir_B(t,n) = stir_B(t-1,n-1) + 2n stir_B(t-1,n)`.
fn stir_b_grid(t_max: u64, n_max: u32) -> Vec<Int> {
    let mut g = vec![Int::zero(); (t_max as usize + 1) * (n_max as usize + 1)];
    g[0] = Int::one();
    for t in 1..=t_max {
        for n in 1..=n_max {
            let carry = g[idx(t - 1, n - 1, n_max)].clone();
            let stay = &g[idx(t - 1, n, n_max)] * Int::from(2 * n as u64);
            g[idx(t, n, n_max)] = carry + stay;
        }
    }
    g
}

fn cumulative(diff: &[Int], t_max: u64, n_max: u32) -> Vec<Int> {
    let mut g = vec![Int::zero(); diff.len()];
    for t in 0..=t_max {
        let mut acc = Int::zero();
        for n in 0..=n_max {
            acc += &diff[idx(t, n, n_max)];
            g[idx(t, n, n_max)] = acc.clone();
        }
    }
    g
}

fn differences(cum: &[Int], t_max: u64, n_max: u32) -> Vec<Int> {
    let mut g = vec![Int::zero(); cum.len()];
    for t in 0..=t_max {
        for n in 0..=n_max {
            let prev = if n == 0 { Int::zero() } else { cum[idx(t, n - 1, n_max)].clone() };
            g[idx(t, n, n_max)] = &cum[idx(t, n, n_max)] - prev;
        }
    }
    g
}

/// `B'_t(n) = B_{t-1}(n-1) - B'_{t-1}(n)`, seeded by `B'_0(n) = 1`.
fn bell_prime_grid(t_max: u64, n_max: u32) -> Vec<Int> {
    let bell = cumulative(&stir_grid(t_max, n_max), t_max, n_max);
    let mut g = vec![Int::zero(); bell.len()];
    for n in 0..=n_max {
        g[idx(0, n, n_max)] = Int::one();
    }
    for t in 1..=t_max {
        for n in 1..=n_max {
            g[idx(t, n, n_max)] = &bell[idx(t - 1, n - 1, n_max)] - &g[idx(t - 1, n, n_max)];
        }
    }
    g
}

/// `B_B'_t(n) = sum_s C(t-1,s) B_B_s(n-1) - B_B'_{t-1}(n)`, seeded at t = 0.
fn bell_b_prime_grid(t_max: u64, n_max: u32) -> Vec<Int> {
    let bell_b = cumulative(&stir_b_grid(t_max, n_max), t_max, n_max);
    let mut g = vec![Int::zero(); bell_b.len()];
    for n in 0..=n_max {
        g[idx(0, n, n_max)] = Int::one();
    }
    for t in 1..=t_max {
        for n in 1..=n_max {
            let mut sum = Int::zero();
            for s in 0..t {
                sum += binomial(t - 1, s as i64) * &bell_b[idx(s, n - 1, n_max)];
            }
            g[idx(t, n, n_max)] = sum - &g[idx(t - 1, n, n_max)];
        }
    }
    g
}

/// Sum of a difference grid with its shift one row up:
/// `star(t,n) = diff(t,n) + diff(t-1,n)` for `t >= 1`; row 0 is copied.
fn star_grid(diff: &[Int], t_max: u64, n_max: u32) -> Vec<Int> {
    let mut g = diff.to_vec();
    for t in 1..=t_max {
        for n in 0..=n_max {
            g[idx(t, n, n_max)] = &diff[idx(t, n, n_max)] + &diff[idx(t - 1, n, n_max)];
        }
    }
    g
}

fn recurrence_grid(variant: Variant, t_max: u64, n_max: u32) -> Vec<Int> {
    match variant {
        Variant::Bell => cumulative(&stir_grid(t_max, n_max), t_max, n_max),
        Variant::BellPrime => bell_prime_grid(t_max, n_max),
        Variant::BellB => cumulative(&stir_b_grid(t_max, n_max), t_max, n_max),
        Variant::BellBPrime => bell_b_prime_grid(t_max, n_max),
        Variant::Stir => stir_grid(t_max, n_max),
        Variant::StirPrime => differences(&bell_prime_grid(t_max, n_max), t_max, n_max),
        Variant::StirB => stir_b_grid(t_max, n_max),
        Variant::StirBPrime => differences(&bell_b_prime_grid(t_max, n_max), t_max, n_max),
        Variant::StirStar => {
            star_grid(&differences(&bell_prime_grid(t_max, n_max), t_max, n_max), t_max, n_max)
        }
        Variant::StirBStar => {
            star_grid(&differences(&bell_b_prime_grid(t_max, n_max), t_max, n_max), t_max, n_max)
        }
        _ => unreachable!("method table rejects other variants"),
    }
}

// --------------------------------------------------------------- enumeration

/// One enumeration pass per row `t`: count set partitions by block count,
/// then accumulate. The marked variants weight each partition by the number
/// of valid mark assignments per block.
fn enumeration_grid(variant: Variant, t_max: u64, n_max: u32) -> Vec<Int> {
    let size = (t_max as usize + 1) * (n_max as usize + 1);
    let mut by_blocks = vec![Int::zero(); size];

    // the star variants are defined as shifted sums of the primed counts,
    // so their enumeration enumerates the primed family
    let (spacing, mark_rule): (SpacingRule, Option<ForcedMarkRule>) = match variant {
        Variant::Bell | Variant::Stir => (SpacingRule::None, None),
        Variant::BellPrime | Variant::StirPrime | Variant::StirStar => {
            (SpacingRule::CyclicSpaced, None)
        }
        Variant::BellB | Variant::StirB => (SpacingRule::None, Some(ForcedMarkRule::None)),
        Variant::BellBPrime | Variant::StirBPrime | Variant::StirBStar => {
            (SpacingRule::None, Some(ForcedMarkRule::CyclicFlip))
        }
        _ => unreachable!("method table rejects other variants"),
    };

    for t in 0..=t_max {
        for_each_set_partition(t as usize, n_max as usize, spacing, &mut |p| {
            let blocks = p.block_count() as u32;
            let weight = match mark_rule {
                None => Int::one(),
                Some(rule) => {
                    let mut ways = Int::one();
                    for block in p.blocks() {
                        let forced = block
                            .iter()
                            .filter(|&&x| {
                                (rule != ForcedMarkRule::None
                                    && x >= 2
                                    && block.binary_search(&(x - 1)).is_ok())
                                    || (rule == ForcedMarkRule::CyclicFlip
                                        && x == 1
                                        && block.binary_search(&(t as usize)).is_ok())
                            })
                            .count();
                        let free = block.len() - forced;
                        if free == 0 {
                            if forced % 2 != 0 {
                                ways = Int::zero();
                                break;
                            }
                        } else {
                            ways <<= free - 1;
                        }
                    }
                    ways
                }
            };
            by_blocks[idx(t, blocks, n_max)] += weight;
        });
    }

    match variant {
        Variant::Bell | Variant::BellPrime | Variant::BellB | Variant::BellBPrime => {
            cumulative(&by_blocks, t_max, n_max)
        }
        Variant::StirStar | Variant::StirBStar => star_grid(&by_blocks, t_max, n_max),
        _ => by_blocks,
    }
}

// --------------------------------------------------------------- closed form

/// Closed form for the four Stirling variants. The primed forms are the
/// stated formulas only for `n >= 2`; smaller `n` is rejected.
pub fn closed_form(variant: Variant, t: u64, n: u32) -> Result<Int> {
    let value: Rat = match variant {
        Variant::Stir => {
            let mut sum = Rat::zero();
            for k in 0..=n {
                sum += term((n - k) as i64, t, n, k);
            }
            sum / rat_from_int(factorial(n as u64))
        }
        Variant::StirB => {
            let mut sum = Rat::zero();
            for k in 0..=n {
                sum += term(2 * (n - k) as i64, t, n, k);
            }
            sum / rat_from_int(factorial(n as u64) * pow2(n as u64))
        }
        Variant::StirPrime => {
            if n < 2 {
                return Err(Error::invalid("closed form", "the primed formula needs n >= 2"));
            }
            let mut sum = Rat::zero();
            for k in 0..n {
                sum += term((n - k) as i64 - 1, t, n, k);
            }
            sum += alternating(n, t);
            sum / rat_from_int(factorial(n as u64))
        }
        Variant::StirBPrime => {
            if n < 2 {
                return Err(Error::invalid("closed form", "the primed formula needs n >= 2"));
            }
            let mut sum = Rat::zero();
            for k in 0..n {
                sum += term(2 * (n - k) as i64 - 1, t, n, k);
            }
            sum += alternating(n, t);
            sum / rat_from_int(factorial(n as u64) * pow2(n as u64))
        }
        other => {
            return Err(Error::invalid(
                "closed form",
                format!("no closed form is defined for {}", other.name()),
            ))
        }
    };
    Ok(as_integer(&value).expect("closed forms evaluate to integers"))
}

/// `(-1)^k C(n,k) base^t` as a rational, with `0^0 = 1`.
fn term(base: i64, t: u64, n: u32, k: u32) -> Rat {
    let power = if base == 0 && t == 0 {
        Int::one()
    } else {
        Int::from(base).pow(u32::try_from(t).expect("t fits u32"))
    };
    let signed = if k % 2 == 0 { power } else { -power };
    rat_from_int(binomial(n as u64, k as i64) * signed)
}

/// `(-1)^(n+t)` as a rational.
fn alternating(n: u32, t: u64) -> Rat {
    if (n as u64 + t) % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

/// Closed-form cell with the out-of-validity columns patched by their
/// elementary values, so whole grids can be filled.
fn closed_cell(variant: Variant, t: u64, n: u32) -> Int {
    match variant {
        Variant::Stir | Variant::StirB => closed_form(variant, t, n).expect("always valid"),
        Variant::StirPrime => match n {
            0 => Int::from((t == 0) as u64),
            // a single block puts 1 and t together, so nothing survives
            1 => Int::from(0u32),
            _ => closed_form(variant, t, n).expect("n >= 2"),
        },
        Variant::StirBPrime => match n {
            0 => Int::from((t == 0) as u64),
            // a single block forces marks on every element, so t must be
            // even and positive
            1 => Int::from((t >= 2 && t % 2 == 0) as u64),
            _ => closed_form(variant, t, n).expect("n >= 2"),
        },
        _ => unreachable!("closed cells exist only for the stirling variants"),
    }
}

fn closed_form_grid(variant: Variant, t_max: u64, n_max: u32) -> Vec<Int> {
    let base = |v: Variant| {
        let mut g = vec![Int::zero(); (t_max as usize + 1) * (n_max as usize + 1)];
        for t in 0..=t_max {
            for n in 0..=n_max {
                g[idx(t, n, n_max)] = closed_cell(v, t, n);
            }
        }
        g
    };
    match variant {
        Variant::Stir | Variant::StirPrime | Variant::StirB | Variant::StirBPrime => base(variant),
        Variant::Bell => cumulative(&base(Variant::Stir), t_max, n_max),
        Variant::BellPrime => cumulative(&base(Variant::StirPrime), t_max, n_max),
        Variant::BellB => cumulative(&base(Variant::StirB), t_max, n_max),
        Variant::BellBPrime => cumulative(&base(Variant::StirBPrime), t_max, n_max),
        Variant::StirStar => star_grid(&base(Variant::StirPrime), t_max, n_max),
        Variant::StirBStar => star_grid(&base(Variant::StirBPrime), t_max, n_max),
        _ => unreachable!("method table rejects other variants"),
    }
}

// ------------------------------------------------------------ transfer matrix

/// Walk counts per column `n` by iterating the move-graph adjacency on an
/// endpoint vector; one graph per column.
fn transfer_column(variant: Variant, n: u32, t_max: u64) -> Vec<Int> {
    enum Walk {
        Partition(bool),
        Double(bool),
        DoubleUnion(bool),
    }
    let walk = match variant {
        Variant::Bell => Walk::Partition(false),
        Variant::BellPrime => Walk::Partition(true),
        Variant::BellB => Walk::Double(false),
        Variant::BellBPrime => Walk::Double(true),
        Variant::MoveD | Variant::StirD => Walk::DoubleUnion(false),
        Variant::MoveDPrime | Variant::StirDPrime => Walk::DoubleUnion(true),
        _ => unreachable!("transfer columns exist for bell and type D variants"),
    };

    match walk {
        Walk::Partition(primed) => {
            let graph = partition_move_graph(n, primed);
            let start = graph.index_of(&Partition::row(n)).expect("row state");
            column_walk(graph.adjacency(), start, &[start], t_max)
        }
        Walk::Double(primed) => {
            let graph = double_move_graph(n, primed);
            let start = graph.index_of(&DoublePartition::row_first(n)).expect("row state");
            column_walk(graph.adjacency(), start, &[start], t_max)
        }
        Walk::DoubleUnion(primed) => {
            if n == 0 {
                // both named endpoints collapse to the empty pair
                let graph = double_move_graph(0, primed);
                let start = graph.index_of(&DoublePartition::row_first(0)).expect("empty state");
                return column_walk(graph.adjacency(), start, &[start], t_max);
            }
            let graph = double_move_graph(n, primed);
            let start = graph.index_of(&DoublePartition::row_first(n)).expect("row state");
            let swapped = graph
                .index_of(&DoublePartition::new(Partition::empty(), Partition::row(n)))
                .expect("swapped state");
            column_walk(graph.adjacency(), start, &[start, swapped], t_max)
        }
    }
}

fn column_walk(
    adjacency: &crate::algebra::IntMatrix,
    start: usize,
    targets: &[usize],
    t_max: u64,
) -> Vec<Int> {
    let size = adjacency.rows();
    let mut v = vec![Int::zero(); size];
    v[start] = Int::one();
    let mut out = Vec::with_capacity(t_max as usize + 1);
    out.push(targets.iter().map(|&j| v[j].clone()).sum());
    for _ in 0..t_max {
        let mut w = vec![Int::zero(); size];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..size {
                let m = adjacency.get(i, j);
                if !m.is_zero() {
                    w[j] += c * m;
                }
            }
        }
        v = w;
        out.push(targets.iter().map(|&j| v[j].clone()).sum());
    }
    out
}

fn transfer_grid(variant: Variant, t_max: u64, n_max: u32) -> Vec<Int> {
    let base = |v: Variant| {
        let mut g = vec![Int::zero(); (t_max as usize + 1) * (n_max as usize + 1)];
        for n in 0..=n_max {
            let column = transfer_column(v, n, t_max);
            for t in 0..=t_max {
                g[idx(t, n, n_max)] = column[t as usize].clone();
            }
        }
        g
    };
    match variant {
        Variant::Bell | Variant::BellPrime | Variant::BellB | Variant::BellBPrime => base(variant),
        Variant::MoveD | Variant::MoveDPrime => base(variant),
        Variant::Stir => differences(&base(Variant::Bell), t_max, n_max),
        Variant::StirPrime => differences(&base(Variant::BellPrime), t_max, n_max),
        Variant::StirB => differences(&base(Variant::BellB), t_max, n_max),
        Variant::StirBPrime => differences(&base(Variant::BellBPrime), t_max, n_max),
        Variant::StirD => differences(&base(Variant::MoveD), t_max, n_max),
        Variant::StirDPrime => differences(&base(Variant::MoveDPrime), t_max, n_max),
        _ => unreachable!("method table rejects other variants"),
    }
}

// ------------------------------------------------------------------ shuffles

fn shuffle_column(family: GroupFamily, exclude: bool, n: u32, t_max: u64) -> Result<Vec<Int>> {
    if n == 0 {
        let mut out = vec![Int::zero(); t_max as usize + 1];
        out[0] = Int::one();
        return Ok(out);
    }
    let spec = ShuffleFamily::random_to_top(family, n as usize, exclude)?;
    let table = WalkTable::new(family, n as usize, &spec.distinct_generators(), DEFAULT_GROUP_CAP)?;
    Ok(table.identity_walk_counts(t_max))
}

fn shuffle_grid(variant: Variant, t_max: u64, n_max: u32) -> Result<Vec<Int>> {
    let base = |family: GroupFamily, exclude: bool| -> Result<Vec<Int>> {
        let mut g = vec![Int::zero(); (t_max as usize + 1) * (n_max as usize + 1)];
        for n in 0..=n_max {
            let column = shuffle_column(family, exclude, n, t_max)?;
            for t in 0..=t_max {
                g[idx(t, n, n_max)] = column[t as usize].clone();
            }
        }
        Ok(g)
    };
    Ok(match variant {
        Variant::Bell => base(GroupFamily::A, false)?,
        Variant::BellPrime => base(GroupFamily::A, true)?,
        Variant::BellB => base(GroupFamily::B, false)?,
        Variant::BellBPrime => base(GroupFamily::B, true)?,
        Variant::Stir => differences(&base(GroupFamily::A, false)?, t_max, n_max),
        Variant::StirPrime => differences(&base(GroupFamily::A, true)?, t_max, n_max),
        Variant::StirB => differences(&base(GroupFamily::B, false)?, t_max, n_max),
        Variant::StirBPrime => differences(&base(GroupFamily::B, true)?, t_max, n_max),
        _ => unreachable!("method table rejects other variants"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn variant_and_method_names_round_trip() {
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        for m in Method::ALL {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("nonsense".parse::<Variant>().is_err());
    }

    #[test]
    fn method_mismatch_is_an_error() {
        assert!(table(Variant::MoveD, 4, 2, Method::Enumeration).is_err());
        assert!(table(Variant::StirStar, 4, 2, Method::ShuffleDp).is_err());
        assert!(table(Variant::MoveD, 4, 2, Method::TransferMatrix).is_ok());
    }

    #[test]
    fn known_columns() {
        let stir = table(Variant::Stir, 8, 4, Method::Recurrence).unwrap();
        assert_eq!(stir.get(4, 2), &int(7));
        assert_eq!(stir.get(0, 0), &int(1));
        assert_eq!(stir.get(3, 0), &int(0));

        // stir'(t,2): 1 for even t >= 2, else 0
        let sp = table(Variant::StirPrime, 9, 3, Method::Recurrence).unwrap();
        for t in 0..=9u64 {
            let expect = int((t >= 2 && t % 2 == 0) as i64);
            assert_eq!(sp.get(t, 2), &expect, "t = {t}");
        }

        // stir_B(t,1) = 2^(t-1) and stir_B(t,2) = 2^(t-2) (2^(t-1) - 1);
        // the cumulative column B_B_t(2) carries the 2^(t-2) (2^(t-1) + 1)
        // closed form
        let sb = table(Variant::StirB, 10, 3, Method::Recurrence).unwrap();
        let bb = table(Variant::BellB, 10, 3, Method::Recurrence).unwrap();
        for t in 1..=10u64 {
            assert_eq!(sb.get(t, 1), &pow2(t - 1), "t = {t}");
        }
        for t in 2..=10u64 {
            assert_eq!(sb.get(t, 2), &(pow2(t - 2) * (pow2(t - 1) - 1)), "t = {t}");
            assert_eq!(bb.get(t, 2), &(pow2(t - 2) * (pow2(t - 1) + 1)), "t = {t}");
        }
    }

    #[test]
    fn diagonals_are_the_unrestricted_sequences() {
        let bell = table(Variant::Bell, 8, 8, Method::Recurrence).unwrap();
        let diag: Vec<Int> = (0..=8).map(|t| bell.diagonal(t).clone()).collect();
        assert_eq!(diag, [1, 1, 2, 5, 15, 52, 203, 877, 4140].map(int));

        let bp = table(Variant::BellPrime, 8, 8, Method::Recurrence).unwrap();
        let diag: Vec<Int> = (0..=8).map(|t| bp.diagonal(t).clone()).collect();
        assert_eq!(diag, [1, 0, 1, 1, 4, 11, 41, 162, 715].map(int));

        let bb = table(Variant::BellB, 8, 8, Method::Recurrence).unwrap();
        let diag: Vec<Int> = (0..=8).map(|t| bb.diagonal(t).clone()).collect();
        assert_eq!(diag, [1, 1, 3, 11, 49, 257, 1539, 10299, 75905].map(int));

        let bbp = table(Variant::BellBPrime, 8, 8, Method::Recurrence).unwrap();
        let diag: Vec<Int> = (0..=8).map(|t| bbp.diagonal(t).clone()).collect();
        assert_eq!(diag, [1, 0, 2, 4, 20, 96, 552, 3536, 25104].map(int));
    }

    #[test]
    fn all_methods_agree_on_a_small_grid() {
        for variant in Variant::ALL {
            let tables: Vec<CountTable> = variant
                .methods()
                .iter()
                .map(|&m| table(variant, 6, 4, m).unwrap())
                .collect();
            for pair in tables.windows(2) {
                for t in 0..=6 {
                    for n in 0..=4 {
                        assert_eq!(
                            pair[0].get(t, n),
                            pair[1].get(t, n),
                            "{} ({} vs {}) at t={t} n={n}",
                            variant.name(),
                            pair[0].method.name(),
                            pair[1].method.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn type_d_columns() {
        let md = table(Variant::MoveD, 6, 3, Method::TransferMatrix).unwrap();
        for t in 0..=6u64 {
            assert_eq!(md.get(t, 1), &pow2(t), "t = {t}");
        }
        let got: Vec<Int> = (0..=6).map(|t| md.get(t, 3).clone()).collect();
        assert_eq!(got, [1, 1, 3, 12, 60, 336, 1968].map(int));

        let mdp = table(Variant::MoveDPrime, 6, 3, Method::TransferMatrix).unwrap();
        for t in 0..=6u64 {
            assert_eq!(mdp.get(t, 1), &int(1), "t = {t}");
        }
        let got: Vec<Int> = (0..=6).map(|t| mdp.get(t, 2).clone()).collect();
        assert_eq!(got, [1, 0, 3, 6, 21, 60, 183].map(int));
    }

    #[test]
    fn closed_form_validity() {
        assert!(closed_form(Variant::StirPrime, 4, 1).is_err());
        assert!(closed_form(Variant::Bell, 4, 2).is_err());
        assert_eq!(closed_form(Variant::Stir, 4, 2).unwrap(), int(7));
        assert_eq!(closed_form(Variant::StirPrime, 4, 2).unwrap(), int(1));
        // stir_B'(2,2) equals the marked-partition difference
        let grid = table(Variant::StirBPrime, 4, 3, Method::Enumeration).unwrap();
        assert_eq!(closed_form(Variant::StirBPrime, 2, 2).unwrap(), grid.get(2, 2).clone());
    }

    #[test]
    fn csv_and_json_exports() {
        let t = table(Variant::Stir, 2, 2, Method::Recurrence).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("t,n,value\n0,0,1\n"));
        assert!(csv.contains("\n2,2,1\n"));
        let v: serde_json::Value = t.to_json().parse().unwrap();
        assert_eq!(v["variant"], "stir");
        assert_eq!(v["rows"][2][1], "1");
    }
}
