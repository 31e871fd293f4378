//! Brute-force oracles for the detection and matching layers.
//!
//! The enumerators here are deliberately independent of the library's search
//! paths: detection is checked by enumerating every injective (core,
//! assignment) pair, matching by trying every way of matching left vertices.

use berge_core::matching::{max_matching, sdr, BipartiteGraph, SdrOutcome, SetFamily};
use berge_core::{
    check_certificate, find_berge_clique, find_berge_copy, find_berge_cycle, FamilySpec,
    Hypergraph, PatternGraph,
};

/// Deterministic pseudorandom stream (splitmix64).
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Does `h` contain a Berge copy of the pattern (given as edges over
/// vertices 0..k)? Pure enumeration of injective cores and assignments.
fn oracle_contains(h: &Hypergraph, pattern: &[(usize, usize)], k: usize) -> bool {
    if k > h.vertex_count() || pattern.len() > h.edge_count() {
        return false;
    }
    let mut core = vec![usize::MAX; k];
    let mut used_vertex = vec![false; h.vertex_count()];
    enumerate_cores(h, pattern, k, 0, &mut core, &mut used_vertex)
}

fn enumerate_cores(
    h: &Hypergraph,
    pattern: &[(usize, usize)],
    k: usize,
    depth: usize,
    core: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if depth == k {
        let mut taken = vec![false; h.edge_count()];
        return assign_edges(h, pattern, core, 0, &mut taken);
    }
    for v in 0..h.vertex_count() {
        if used[v] {
            continue;
        }
        core[depth] = v;
        used[v] = true;
        if enumerate_cores(h, pattern, k, depth + 1, core, used) {
            return true;
        }
        used[v] = false;
    }
    false
}

fn assign_edges(
    h: &Hypergraph,
    pattern: &[(usize, usize)],
    core: &[usize],
    idx: usize,
    taken: &mut Vec<bool>,
) -> bool {
    if idx == pattern.len() {
        return true;
    }
    let (a, b) = pattern[idx];
    let bits = (1u64 << core[a]) | (1u64 << core[b]);
    for e in 0..h.edge_count() {
        if taken[e] || h.edge_vertex_mask(e) & bits != bits {
            continue;
        }
        taken[e] = true;
        if assign_edges(h, pattern, core, idx + 1, taken) {
            return true;
        }
        taken[e] = false;
    }
    false
}

fn cycle_pattern(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn clique_pattern(m: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((i, j));
        }
    }
    edges
}

/// Every subset of K_n^3 with at most `max_edges` edges, as index vectors.
fn small_hosts(n: usize, max_edges: usize) -> Vec<Hypergraph> {
    let base = Hypergraph::complete(n, 3).unwrap();
    let m = base.edge_count();
    let mut hosts = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let edges: Vec<Vec<usize>> = (0..m)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| base.edge(i).to_vec())
            .collect();
        hosts.push(Hypergraph::new(n, 3, edges).unwrap());
    }
    hosts
}

#[test]
fn detection_matches_oracle_on_all_small_hosts() {
    for n in 3..=5 {
        for h in small_hosts(n, 6) {
            for len in 3..=n {
                let fast = find_berge_cycle(&h, len).unwrap();
                let truth = oracle_contains(&h, &cycle_pattern(len), len);
                assert_eq!(fast.is_some(), truth, "cycle {len} on {h:?}");
                if let Some(cert) = fast {
                    check_certificate(&h, &cert, &FamilySpec::Cycle(len), None).unwrap();
                }
            }
            for m in 2..=n {
                let fast = find_berge_clique(&h, m).unwrap();
                let truth = oracle_contains(&h, &clique_pattern(m), m);
                assert_eq!(fast.is_some(), truth, "clique {m} on {h:?}");
                if let Some(cert) = fast {
                    check_certificate(&h, &cert, &FamilySpec::Clique(m), None).unwrap();
                }
            }
        }
    }
}

#[test]
fn pattern_search_matches_oracle_on_paths_and_stars() {
    // A couple of non-cycle non-clique shapes over every 4-vertex host.
    let path4 = [(0, 1), (1, 2), (2, 3)];
    let star4 = [(0, 1), (0, 2), (0, 3)];
    for h in small_hosts(4, 4) {
        for (name, pattern) in [("path", &path4[..]), ("star", &star4[..])] {
            let g = PatternGraph::new(4, pattern.to_vec()).unwrap();
            let fast = find_berge_copy(&h, &g).unwrap();
            let truth = oracle_contains(&h, pattern, 4);
            assert_eq!(fast.is_some(), truth, "{name} on {h:?}");
            if let Some(cert) = fast {
                check_certificate(&h, &cert, &FamilySpec::Pattern(g), None).unwrap();
            }
        }
    }
}

#[test]
fn detection_is_monotone_under_edge_addition() {
    let mut rng = Rng(7);
    let base = Hypergraph::complete(6, 3).unwrap();
    for _ in 0..200 {
        let mut small = Vec::new();
        let mut big = Vec::new();
        for i in 0..base.edge_count() {
            let roll = rng.below(4);
            if roll == 0 {
                small.push(base.edge(i).to_vec());
            }
            if roll <= 1 {
                big.push(base.edge(i).to_vec());
            }
        }
        let h_small = Hypergraph::new(6, 3, small.clone()).unwrap();
        let mut all = small;
        all.extend(big);
        let h_big = Hypergraph::new(
            6,
            3,
            {
                let mut dedup = all;
                dedup.sort();
                dedup.dedup();
                dedup
            },
        )
        .unwrap();
        for len in [3, 4, 5] {
            if find_berge_cycle(&h_small, len).unwrap().is_some() {
                assert!(
                    find_berge_cycle(&h_big, len).unwrap().is_some(),
                    "cycle {len} lost under edge addition"
                );
            }
        }
        if find_berge_clique(&h_small, 3).unwrap().is_some() {
            assert!(find_berge_clique(&h_big, 3).unwrap().is_some());
        }
    }
}

// ---------------------------------------------------------------------------
// matching oracles
// ---------------------------------------------------------------------------

/// Maximum matching size by trying, for each left vertex, every free right
/// vertex and the option of leaving it unmatched.
fn brute_matching_size(adj: &[Vec<usize>], right_count: usize) -> usize {
    fn rec(adj: &[Vec<usize>], left: usize, used: &mut Vec<bool>) -> usize {
        if left == adj.len() {
            return 0;
        }
        let mut best = rec(adj, left + 1, used); // leave `left` unmatched
        for &r in &adj[left] {
            if !used[r] {
                used[r] = true;
                best = best.max(1 + rec(adj, left + 1, used));
                used[r] = false;
            }
        }
        best
    }
    let mut used = vec![false; right_count];
    rec(adj, 0, &mut used)
}

#[test]
fn matching_matches_brute_force_exhaustively_3x3() {
    for mask in 0u32..(1 << 9) {
        let adj: Vec<Vec<usize>> = (0..3)
            .map(|l| (0..3).filter(|r| mask & (1 << (l * 3 + r)) != 0).collect())
            .collect();
        let g = BipartiteGraph::new(3, 3, adj.clone());
        assert_eq!(max_matching(&g).size(), brute_matching_size(&adj, 3), "mask={mask}");
    }
}

#[test]
fn matching_matches_brute_force_on_random_8x8() {
    let mut rng = Rng(42);
    for _ in 0..400 {
        let adj: Vec<Vec<usize>> = (0..8)
            .map(|_| (0..8).filter(|_| rng.below(3) == 0).collect())
            .collect();
        let g = BipartiteGraph::new(8, 8, adj.clone());
        assert_eq!(max_matching(&g).size(), brute_matching_size(&adj, 8));
    }
}

#[test]
fn hall_shaped_graphs_saturate_the_left_side() {
    // Left degrees >= 2, right degrees <= 2: the bipartite shape produced by
    // the lifting lemmas. Hall's condition forces a perfect left matching.
    let mut rng = Rng(99);
    for _ in 0..200 {
        let lefts = 3 + rng.below(5);
        let rights = 2 * lefts;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); lefts];
        let mut right_degree = vec![0usize; rights];
        for (l, list) in adj.iter_mut().enumerate() {
            while list.len() < 2 {
                let r = rng.below(rights);
                if right_degree[r] < 2 && !list.contains(&r) {
                    right_degree[r] += 1;
                    list.push(r);
                }
            }
            let _ = l;
        }
        let g = BipartiteGraph::new(lefts, rights, adj.clone());
        let m = max_matching(&g);
        assert!(m.saturates_all_left(), "left saturation must hold: {adj:?}");
        assert_eq!(m.size(), brute_matching_size(&adj, rights));
    }
}

#[test]
fn sdr_agrees_with_matching_and_witnesses_check() {
    let mut rng = Rng(5);
    for _ in 0..500 {
        let sets: Vec<std::collections::BTreeSet<usize>> = (0..(2 + rng.below(5)))
            .map(|_| {
                let size = rng.below(4);
                (0..size).map(|_| rng.below(6)).collect()
            })
            .collect();
        let family = SetFamily::new(sets.clone());
        match sdr(&family) {
            SdrOutcome::Representatives(reps) => {
                let mut distinct = reps.clone();
                distinct.sort_unstable();
                distinct.dedup();
                assert_eq!(distinct.len(), reps.len(), "representatives repeat");
                for (i, rep) in reps.iter().enumerate() {
                    assert!(sets[i].contains(rep), "rep not a member");
                }
            }
            SdrOutcome::HallViolation(w) => {
                assert!(w.violates(&family), "witness must be checkable: {w:?} on {sets:?}");
            }
        }
    }
}

#[test]
fn large_sets_in_small_families_always_have_sdrs() {
    // |family| <= k and every set of size >= k makes Hall automatic.
    let mut rng = Rng(11);
    for _ in 0..200 {
        let k = 2 + rng.below(5);
        let sets: Vec<std::collections::BTreeSet<usize>> = (0..k)
            .map(|_| {
                let mut s = std::collections::BTreeSet::new();
                while s.len() < k {
                    s.insert(rng.below(3 * k));
                }
                s
            })
            .collect();
        assert!(matches!(sdr(&SetFamily::new(sets)), SdrOutcome::Representatives(_)));
    }
}
