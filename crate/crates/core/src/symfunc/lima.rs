use super::Partition;
use crate::fp::Prime;

/// The p-Lima partitions LP(bp, ap): each ν ∈ P(b, a) with every box blown
/// up to a p×p square.
pub fn lima_partitions(b: usize, a: usize, p: Prime) -> Vec<Partition> {
    let mut out: Vec<Partition> = Partition::in_box(b, a).iter().map(|nu| nu.expand(p.get() as u16)).collect();
    out.sort();
    out
}
