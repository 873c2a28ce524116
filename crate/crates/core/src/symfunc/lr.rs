//! Littlewood–Richardson coefficients by enumeration of LR tableaux.

use std::collections::BTreeMap;

use super::Partition;

/// c^ν_{λμ} for all ν with at most `max_rows` rows, as a map ν ↦ c.
pub fn lr_product(lambda: &Partition, mu: &Partition, max_rows: Option<usize>) -> BTreeMap<Partition, u64> {
    let (big, small) = if lambda.size() >= mu.size() { (lambda, mu) } else { (mu, lambda) };
    let mut out = BTreeMap::new();
    let limit = max_rows.unwrap_or(usize::MAX);
    if big.rows() > limit {
        return out;
    }
    let labels = small.parts().to_vec();
    let mut shape: Vec<u16> = big.parts().to_vec();
    let mut counts: Vec<Vec<u16>> = Vec::new();
    add_label(0, &labels, &mut shape, &mut counts, limit, &mut out);
    out
}

/// Adds the horizontal strip of label k+1 (k 0-based) and recurses.
fn add_label(
    k: usize,
    labels: &[u16],
    shape: &mut Vec<u16>,
    counts: &mut Vec<Vec<u16>>,
    limit: usize,
    out: &mut BTreeMap<Partition, u64>,
) {
    if k == labels.len() {
        *out.entry(Partition::from_parts_unchecked(shape.clone())).or_insert(0) += 1;
        return;
    }
    let old = shape.clone();
    let rows = (old.len() + 1).min(limit);
    counts.push(vec![0; rows]);
    place_row(k, 0, labels[k], 0, 0, labels, &old, shape, counts, limit, out);
    counts.pop();
}

#[allow(clippy::too_many_arguments)]
fn place_row(
    k: usize,
    r: usize,
    remaining: u16,
    placed_so_far: u16,
    prev_cum: u16,
    labels: &[u16],
    old: &[u16],
    shape: &mut Vec<u16>,
    counts: &mut Vec<Vec<u16>>,
    limit: usize,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        let saved = shape.clone();
        while shape.last() == Some(&0) {
            shape.pop();
        }
        add_label(k + 1, labels, shape, counts, limit, out);
        *shape = saved;
        return;
    }
    let rows = counts[k].len();
    if r >= rows {
        return;
    }
    let cur = old.get(r).copied().unwrap_or(0);
    let strip_max = if r == 0 { remaining } else { old[r - 1] - cur };
    let lattice_max = if k == 0 {
        remaining
    } else {
        let prev_upper = prev_cum;
        prev_upper.saturating_sub(placed_so_far)
    };
    let max_here = remaining.min(strip_max).min(lattice_max);
    let next_prev_cum = if k == 0 { 0 } else { prev_cum + counts[k - 1].get(r).copied().unwrap_or(0) };
    for n in (0..=max_here).rev() {
        if shape.len() <= r {
            shape.resize(r + 1, 0);
        }
        shape[r] = cur + n;
        counts[k][r] = n;
        place_row(k, r + 1, remaining - n, placed_so_far + n, next_prev_cum, labels, old, shape, counts, limit, out);
        counts[k][r] = 0;
        shape[r] = cur;
    }
}

/// Skew LR expansion s_{λ/μ} = Σ_ν c^λ_{μν} s_ν, restricted to ν with at
/// most `max_label` rows.
pub fn skew_lr(lambda: &Partition, mu: &Partition, max_label: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !lambda.contains(mu) {
        return out;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.rows())
        .flat_map(|r| ((mu.part(r) as usize)..(lambda.part(r) as usize)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut content = vec![0u16; max_label + 1];
    fill_skew(0, &cells, mu, &mut filling, &mut content, max_label, &mut out);
    out
}

fn fill_skew(
    i: usize,
    cells: &[(usize, usize)],
    mu: &Partition,
    filling: &mut BTreeMap<(usize, usize), usize>,
    content: &mut Vec<u16>,
    max_label: usize,
    out: &mut BTreeMap<Partition, u64>,
) {
    if i == cells.len() {
        let parts: Vec<u16> = content[1..].iter().copied().take_while(|&x| x > 0).collect();
        *out.entry(Partition::from_parts_unchecked(parts)).or_insert(0) += 1;
        return;
    }
    let (r, c) = cells[i];
    let upper = filling.get(&(r, c + 1)).copied().unwrap_or(max_label);
    let lower = if r > 0 && c >= mu.part(r - 1) as usize { filling[&(r - 1, c)] + 1 } else { 1 };
    for label in lower..=upper.min(max_label) {
        if label > 1 && content[label] + 1 > content[label - 1] {
            continue;
        }
        content[label] += 1;
        filling.insert((r, c), label);
        fill_skew(i + 1, cells, mu, filling, content, max_label, out);
        filling.remove(&(r, c));
        content[label] -= 1;
    }
}
