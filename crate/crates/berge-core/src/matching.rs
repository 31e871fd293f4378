//! Bipartite maximum matching and systems of distinct representatives.
//!
//! Every Berge certificate in this crate is ultimately produced by one
//! matching computation (pattern pairs on the left, hyperedges on the right),
//! so determinism matters: augmenting paths explore right vertices in
//! ascending index order and left vertices are processed in ascending order,
//! which makes certificates reproducible.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

/// A bipartite graph given by left-side adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Adjacency lists are sorted and deduplicated; out-of-range entries are
    /// a caller bug and panic.
    pub fn new(left_count: usize, right_count: usize, adjacency: Vec<Vec<usize>>) -> BipartiteGraph {
        assert_eq!(adjacency.len(), left_count, "one adjacency list per left vertex");
        let mut adjacency = adjacency;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            if let Some(&v) = list.last() {
                assert!(v < right_count, "right vertex {v} out of range");
            }
        }
        BipartiteGraph { left_count, right_count, adjacency }
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adjacency[left]
    }
}

/// An injective partial map from left vertices to right vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    left_to_right: Vec<Option<usize>>,
    right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_to_right.iter().filter(|p| p.is_some()).count()
    }

    pub fn right_of(&self, left: usize) -> Option<usize> {
        self.left_to_right[left]
    }

    pub fn left_of(&self, right: usize) -> Option<usize> {
        self.right_to_left[right]
    }

    pub fn saturates_all_left(&self) -> bool {
        self.left_to_right.iter().all(|p| p.is_some())
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

fn augment(g: &BipartiteGraph, left: usize, visited: &mut [bool], right_to_left: &mut [Option<usize>]) -> bool {
    for &r in g.neighbors(left) {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        match right_to_left[r] {
            None => {
                right_to_left[r] = Some(left);
                return true;
            }
            Some(owner) => {
                if augment(g, owner, visited, right_to_left) {
                    right_to_left[r] = Some(left);
                    return true;
                }
            }
        }
    }
    false
}

/// Maximum-cardinality matching by augmenting paths (Kuhn's algorithm).
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let mut right_to_left: Vec<Option<usize>> = vec![None; g.right_count];
    for left in 0..g.left_count {
        let mut visited = vec![false; g.right_count];
        augment(g, left, &mut visited, &mut right_to_left);
    }
    let mut left_to_right = vec![None; g.left_count];
    for (r, owner) in right_to_left.iter().enumerate() {
        if let Some(l) = owner {
            left_to_right[*l] = Some(r);
        }
    }
    Matching { left_to_right, right_to_left }
}

/// An ordered family of finite sets over a non-negative integer ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    sets: Vec<BTreeSet<usize>>,
}

impl SetFamily {
    pub fn new(sets: Vec<BTreeSet<usize>>) -> SetFamily {
        SetFamily { sets }
    }

    pub fn from_slices(sets: &[&[usize]]) -> SetFamily {
        SetFamily {
            sets: sets.iter().map(|s| s.iter().copied().collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> &[BTreeSet<usize>] {
        &self.sets
    }
}

/// A family of set indices violating Hall's condition: the union of the
/// indexed sets is smaller than the number of indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallWitness {
    pub indices: Vec<usize>,
}

impl HallWitness {
    /// Direct re-check of the violation, independent of how it was found.
    pub fn violates(&self, family: &SetFamily) -> bool {
        let mut union: BTreeSet<usize> = BTreeSet::new();
        for &i in &self.indices {
            union.extend(family.sets()[i].iter().copied());
        }
        union.len() < self.indices.len()
    }
}

/// Result of an SDR computation; absence is a value, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SdrOutcome {
    /// `representatives[i]` is a member of set `i`; all entries distinct.
    Representatives(Vec<usize>),
    /// No SDR exists; the witness shows a concrete Hall violation.
    HallViolation(HallWitness),
}

impl SdrOutcome {
    pub fn representatives(&self) -> Option<&[usize]> {
        match self {
            SdrOutcome::Representatives(r) => Some(r),
            SdrOutcome::HallViolation(_) => None,
        }
    }
}

/// Finds a system of distinct representatives for `family`, or a Hall
/// witness when none exists.
pub fn sdr(family: &SetFamily) -> SdrOutcome {
    // Ground elements are mapped to dense ids in ascending element order, so
    // the matcher's right-ascending tie-breaking is ascending-by-element.
    let mut all: BTreeSet<usize> = BTreeSet::new();
    for set in family.sets() {
        all.extend(set.iter().copied());
    }
    let elements: Vec<usize> = all.into_iter().collect();
    let id: BTreeMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let adjacency: Vec<Vec<usize>> = family
        .sets()
        .iter()
        .map(|s| s.iter().map(|x| id[x]).collect())
        .collect();
    let g = BipartiteGraph::new(family.len(), elements.len(), adjacency);
    let matching = max_matching(&g);
    if matching.saturates_all_left() {
        let reps = (0..family.len())
            .map(|i| elements[matching.right_of(i).unwrap()])
            .collect();
        return SdrOutcome::Representatives(reps);
    }
    // Alternating reachability from the unsaturated left vertices yields a
    // set whose neighborhood is fully matched into it, hence too small.
    let mut reached_left = vec![false; family.len()];
    let mut reached_right = vec![false; elements.len()];
    let mut stack: Vec<usize> = (0..family.len())
        .filter(|&l| matching.right_of(l).is_none())
        .collect();
    for &l in &stack {
        reached_left[l] = true;
    }
    while let Some(l) = stack.pop() {
        for &r in g.neighbors(l) {
            if reached_right[r] {
                continue;
            }
            reached_right[r] = true;
            if let Some(owner) = matching.left_of(r) {
                if !reached_left[owner] {
                    reached_left[owner] = true;
                    stack.push(owner);
                }
            }
        }
    }
    let indices: Vec<usize> = (0..family.len()).filter(|&l| reached_left[l]).collect();
    SdrOutcome::HallViolation(HallWitness { indices })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_3x3_has_perfect_matching() {
        let g = BipartiteGraph::new(3, 3, vec![vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]]);
        assert_eq!(max_matching(&g).size(), 3);
    }

    #[test]
    fn star_with_isolated_lefts() {
        let g = BipartiteGraph::new(3, 3, vec![vec![0, 1, 2], vec![], vec![]]);
        let m = max_matching(&g);
        assert_eq!(m.size(), 1);
        assert_eq!(m.right_of(0), Some(0));
    }

    #[test]
    fn matching_is_deterministic() {
        let g = BipartiteGraph::new(3, 4, vec![vec![1, 3], vec![1, 2], vec![2, 3]]);
        let a = max_matching(&g);
        let b = max_matching(&g);
        assert_eq!(a, b);
        assert_eq!(a.size(), 3);
    }

    #[test]
    fn sdr_simple_family() {
        let f = SetFamily::from_slices(&[&[1, 2], &[2, 3], &[3, 1]]);
        match sdr(&f) {
            SdrOutcome::Representatives(reps) => {
                for (i, rep) in reps.iter().enumerate() {
                    assert!(f.sets()[i].contains(rep));
                }
                let mut sorted = reps.clone();
                sorted.sort_unstable();
                sorted.dedup();
                assert_eq!(sorted.len(), reps.len());
            }
            SdrOutcome::HallViolation(_) => panic!("SDR expected"),
        }
    }

    #[test]
    fn sdr_hall_violation() {
        let f = SetFamily::from_slices(&[&[1], &[2], &[1, 2]]);
        match sdr(&f) {
            SdrOutcome::Representatives(_) => panic!("no SDR exists"),
            SdrOutcome::HallViolation(w) => {
                assert!(w.violates(&f));
                assert_eq!(w.indices, vec![0, 1, 2]);
            }
        }
    }

    #[test]
    fn sdr_empty_set_blocks() {
        let f = SetFamily::from_slices(&[&[], &[0, 1]]);
        match sdr(&f) {
            SdrOutcome::Representatives(_) => panic!("no SDR exists"),
            SdrOutcome::HallViolation(w) => {
                assert!(w.indices.contains(&0));
                assert!(w.violates(&f));
            }
        }
    }

    #[test]
    fn cyclic_shift_family_has_sdr() {
        // A_i = {1..5} \ {i, i+1} for i = 1..4; the shifted representatives
        // (3, 4, 5, 1) must be one valid choice.
        let sets: Vec<BTreeSet<usize>> = (1..=4usize)
            .map(|i| (1..=5).filter(|&x| x != i && x != i + 1).collect())
            .collect();
        let f = SetFamily::new(sets);
        assert!(matches!(sdr(&f), SdrOutcome::Representatives(_)));
        let shifted = [3usize, 4, 5, 1];
        for (i, rep) in shifted.iter().enumerate() {
            assert!(f.sets()[i].contains(rep), "shifted pattern must be a valid SDR");
        }
        let mut sorted = shifted;
        sorted.sort_unstable();
        assert!(sorted.windows(2).all(|w| w[0] != w[1]));
    }
}
