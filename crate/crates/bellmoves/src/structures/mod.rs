//! Core combinatorial objects: partitions and double partitions, (marked)
//! set partitions, permutations and signed permutations, together with
//! exhaustive enumerators for each and for the groups of types A, B and D.

mod partition;
mod setpart;
mod signed;

pub use partition::{DoublePartition, Partition};
pub use setpart::{
    count_marked_partitions, count_marked_partitions_exact, count_set_partitions,
    count_set_partitions_exact, for_each_marked_partition, for_each_set_partition,
    marked_partitions, set_partitions, ForcedMarkRule, MarkedSetPartition, SpacingRule,
};
pub use signed::{
    enumerate_group, group_order, GroupFamily, Permutation, SignedPermutation,
};
