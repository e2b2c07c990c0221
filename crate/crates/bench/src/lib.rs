//! Fixtures for the criterion benches.

use std::sync::Arc;

use globcat::fincat::FinCategory;
use globcat::gen::{self, CospanMode, Family};
use globcat::{AdjointEquivalence, GlobularMap};

/// Cospans of the given dimension with at most `max_cells` cells per dimension.
pub fn cospans(seed: u64, count: usize, dim: usize, max_cells: usize) -> Vec<(GlobularMap, GlobularMap)> {
    (0..count)
        .map(|i| gen::random_cospan(&mut gen::rng(seed + i as u64), dim, max_cells, CospanMode::CoverLike))
        .collect()
}

pub fn equivalences(seed: u64, count: usize) -> Vec<AdjointEquivalence> {
    (0..count)
        .map(|i| gen::random_equivalence(&mut gen::rng(seed + i as u64), &Family::ALL))
        .collect()
}

/// Pairs for the exhaustive search, equivalent and not.
pub fn search_pairs() -> Vec<(&'static str, Arc<FinCategory>, Arc<FinCategory>)> {
    let iso = Arc::new(gen::walking_iso());
    let one = Arc::new(FinCategory::terminal());
    let z2 = Arc::new(gen::cyclic_group(2));
    let doubled = gen::inflate(&z2, &[2]).category;
    let two = Arc::new(FinCategory::discrete(["p", "q"]));
    vec![
        ("iso_vs_point", iso, one.clone()),
        ("z2_vs_doubled", z2, doubled),
        ("two_vs_point", two, one),
    ]
}
