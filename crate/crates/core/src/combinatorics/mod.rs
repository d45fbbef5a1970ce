//! Permutations, cyclic intervals, subsets and descent statistics.

mod descent;
mod interval;
mod perm;
mod subset;

pub use descent::{
    circuit_subsets, cyclic_left_descent_set, cyclic_left_descents, descent_count, restrict,
};
pub use interval::{cyclic_order_key, CyclicInterval};
pub use perm::Permutation;
pub use subset::{gale_leq, KSubset, MAX_N};

/// Maps any integer into `1..=n` modulo `n`.
#[inline]
pub fn wrap(i: i64, n: usize) -> usize {
    let n = n as i64;
    ((i - 1).rem_euclid(n) + 1) as usize
}
