//! Exact arrowing decisions, Ramsey numbers, and Turan maxima at desk scale.
//!
//! Coloring state is one bitmask per color over the C(N,3) edges of the
//! complete host in lexicographic order; the DFS assigns edges in that fixed
//! order. After coloring edge e, detection is restricted to copies through e:
//! since every earlier prefix was verified copy-free, any new monochromatic
//! member must use the edge just colored, so seeding candidate cores with
//! the pairs inside e loses nothing. In debug builds every prune is
//! re-certified through the independent certificate checker.
//!
//! Symmetry pruning is a lex-leader test over all vertex permutations of the
//! host (at most 8! at this scale), applied every `stride` levels. A partial
//! coloring is discarded when some permutation provably maps every extension
//! of it to a lexicographically smaller coloring, which keeps the
//! lexicographic minimum of every counterexample orbit reachable.
//!
//! The kernel is single-threaded; [`split_jobs`]/[`run_job`] expose the same
//! search as a partitioned job list so a driver with threads can run it in
//! parallel without changing the verdict.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::berge::{self, BergeError, FamilySpec};
use crate::hypergraph::Hypergraph;
use crate::shadow::ColoredHypergraph;

/// The dense kernel keeps one u64 per color; C(N,3) must fit in it.
pub const MAX_TRIPLES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    ScaleExceeded { vertices: usize, triples: usize },
    TooFewVertices { vertices: usize },
    NoSpecs,
    InvalidSpec(BergeError),
    /// turan-first needs three colors with a Berge triangle in the last slot.
    StrategyMismatch,
    InvalidWorkerCount,
    NotFoundWithinBound { n_max: usize },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SearchError::*;
        match self {
            ScaleExceeded { vertices, triples } => write!(
                f,
                "{vertices} vertices give {triples} triples, beyond the {MAX_TRIPLES}-edge kernel; \
                 use the lower-bound generators instead"
            ),
            TooFewVertices { vertices } => write!(f, "need at least 3 vertices, got {vertices}"),
            NoSpecs => write!(f, "at least one family per color is required"),
            InvalidSpec(e) => write!(f, "invalid family spec: {e}"),
            StrategyMismatch => write!(
                f,
                "turan-first strategy requires exactly 3 colors with BC:3 as the third family"
            ),
            InvalidWorkerCount => write!(f, "worker count must be at least 1"),
            NotFoundWithinBound { n_max } => write!(f, "no N <= {n_max} arrows"),
        }
    }
}

impl core::error::Error for SearchError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Plain DFS over all colors edge by edge.
    Dfs,
    /// Enumerate the Berge-triangle-free green classes first, then 2-color
    /// the remaining edges; mirrors the proof shape of the small cases.
    TuranFirst,
}

/// An arrowing instance: does every t-coloring of the complete 3-uniform
/// host on `vertex_count` vertices contain, for some color i, a member of
/// `specs[i]` in color i?
#[derive(Clone, Debug)]
pub struct ArrowingProblem {
    pub vertex_count: usize,
    pub specs: Vec<FamilySpec>,
    pub strategy: Strategy,
    pub symmetry: bool,
    /// Honored by the parallel driver; the in-crate kernel always runs one
    /// worker and ignores larger values (the verdict does not depend on it).
    pub worker_count: usize,
    /// Apply the lex-leader test every this many levels; `None` picks 1 for
    /// hosts up to 5 vertices and 3 beyond.
    pub symmetry_stride: Option<usize>,
}

impl ArrowingProblem {
    pub fn new(vertex_count: usize, specs: Vec<FamilySpec>) -> ArrowingProblem {
        ArrowingProblem {
            vertex_count,
            specs,
            strategy: Strategy::Dfs,
            symmetry: true,
            worker_count: 1,
            symmetry_stride: None,
        }
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> ArrowingProblem {
        self.strategy = strategy;
        self
    }

    pub fn with_symmetry(mut self, on: bool) -> ArrowingProblem {
        self.symmetry = on;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> ArrowingProblem {
        self.worker_count = workers;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.vertex_count < 3 {
            return Err(SearchError::TooFewVertices { vertices: self.vertex_count });
        }
        let triples = triple_count(self.vertex_count);
        if triples > MAX_TRIPLES {
            return Err(SearchError::ScaleExceeded { vertices: self.vertex_count, triples });
        }
        if self.specs.is_empty() {
            return Err(SearchError::NoSpecs);
        }
        for spec in &self.specs {
            spec.validate().map_err(SearchError::InvalidSpec)?;
        }
        if self.worker_count == 0 {
            return Err(SearchError::InvalidWorkerCount);
        }
        if self.strategy == Strategy::TuranFirst
            && (self.specs.len() != 3 || self.specs[2] != FamilySpec::Cycle(3))
        {
            return Err(SearchError::StrategyMismatch);
        }
        Ok(())
    }

    fn stride(&self) -> usize {
        self.symmetry_stride
            .unwrap_or(if self.vertex_count <= 5 { 1 } else { 3 })
            .max(1)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes_mono: u64,
    pub prunes_sym: u64,
    /// Wall time; filled in by drivers that can measure it.
    pub elapsed_ms: u64,
}

impl SearchStats {
    pub fn merge(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.prunes_mono += other.prunes_mono;
        self.prunes_sym += other.prunes_sym;
        self.elapsed_ms = self.elapsed_ms.max(other.elapsed_ms);
    }
}

#[derive(Clone, Debug)]
pub enum Verdict {
    Arrows,
    Counterexample(ColoredHypergraph),
}

impl Verdict {
    pub fn arrows(&self) -> bool {
        matches!(self, Verdict::Arrows)
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub verdict: Verdict,
    pub stats: SearchStats,
}

fn triple_count(n: usize) -> usize {
    n * (n - 1) * (n - 2) / 6
}

/// Precomputed host tables: edges of the complete 3-uniform hypergraph in
/// lexicographic order, pair-to-edge masks, and the edge permutations induced
/// by all vertex permutations.
struct Kernel {
    n: usize,
    base: Hypergraph,
    edge_count: usize,
    pair_uv: Vec<(usize, usize)>,
    pair_edges: Vec<u64>,
    pairs_of_edge: Vec<[usize; 3]>,
    /// Non-identity edge permutations; empty when symmetry is off.
    perms: Vec<Vec<u16>>,
}

impl Kernel {
    fn new(n: usize, symmetry: bool) -> Kernel {
        let base = Hypergraph::complete(n, 3).expect("kernel sizes are validated upstream");
        let edge_count = base.edge_count();
        let mut pair_uv = Vec::new();
        let mut pair_index = vec![usize::MAX; n * n];
        for u in 0..n {
            for v in u + 1..n {
                pair_index[u * n + v] = pair_uv.len();
                pair_uv.push((u, v));
            }
        }
        let mut pair_edges = vec![0u64; pair_uv.len()];
        let mut pairs_of_edge = Vec::with_capacity(edge_count);
        for (i, e) in base.edges().iter().enumerate() {
            let ps = [
                pair_index[e[0] * n + e[1]],
                pair_index[e[0] * n + e[2]],
                pair_index[e[1] * n + e[2]],
            ];
            for &p in &ps {
                pair_edges[p] |= 1u64 << i;
            }
            pairs_of_edge.push(ps);
        }
        let perms = if symmetry { edge_permutations(&base) } else { Vec::new() };
        Kernel { n, base, edge_count, pair_uv, pair_edges, pairs_of_edge, perms }
    }

    fn pair_mask(&self, u: usize, v: usize) -> u64 {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        // Position of (a,b) in lexicographic pair order.
        let idx = a * self.n - a * (a + 1) / 2 + (b - a - 1);
        self.pair_edges[idx]
    }

    fn materialize(&self, class: u64) -> (Hypergraph, Vec<usize>) {
        let mut edges = Vec::new();
        let mut global = Vec::new();
        for i in 0..self.edge_count {
            if class & (1u64 << i) != 0 {
                edges.push(self.base.edge(i).to_vec());
                global.push(i);
            }
        }
        let h = Hypergraph::new(self.n, 3, edges).expect("class edges come from the base");
        (h, global)
    }

    /// Is there a member of `spec` inside `class` that uses `edge`? Returns
    /// its core and (global) assignment when one exists. Complete under the
    /// invariant that `class` minus `edge` contains no member.
    fn member_with_edge(&self, class: u64, spec: &FamilySpec, edge: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let found = match spec {
            FamilySpec::Cycle(len) => self.cycle_with_edge(class, *len, edge),
            FamilySpec::Clique(m) => self.clique_with_edge(class, *m, edge),
            FamilySpec::Pattern(g) => {
                let (h, global) = self.materialize(class);
                match berge::find_berge_copy(&h, g) {
                    Ok(Some(cert)) => {
                        Some((cert.core, cert.assignment.iter().map(|&i| global[i]).collect()))
                    }
                    Ok(None) => None,
                    Err(_) => None,
                }
            }
        };
        #[cfg(debug_assertions)]
        if let Some((core, assignment)) = &found {
            self.certify_prune(class, spec, core, assignment);
        }
        found
    }

    #[cfg(debug_assertions)]
    fn certify_prune(&self, class: u64, spec: &FamilySpec, core: &[usize], assignment: &[usize]) {
        let (h, global) = self.materialize(class);
        let local: Vec<usize> = assignment
            .iter()
            .map(|&g| global.binary_search(&g).expect("assignment inside class"))
            .collect();
        let cert = berge::BergeCertificate { core: core.to_vec(), assignment: local };
        berge::check_certificate(&h, &cert, spec, None)
            .expect("prune-time certificate must validate");
    }

    fn cycle_with_edge(&self, class: u64, len: usize, edge: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if len > self.n || (class.count_ones() as usize) < len {
            return None;
        }
        for &p in &self.pairs_of_edge[edge] {
            let (u, v) = self.pair_uv[p];
            let mut seq = Vec::with_capacity(len);
            seq.push(u);
            seq.push(v);
            if let Some(found) = self.extend_cycle(class, len, &mut seq) {
                return Some(found);
            }
        }
        None
    }

    fn extend_cycle(&self, class: u64, len: usize, seq: &mut Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
        if seq.len() == len {
            if self.pair_mask(seq[len - 1], seq[0]) & class == 0 {
                return None;
            }
            let sets: Vec<u64> = (0..len)
                .map(|i| self.pair_mask(seq[i], seq[(i + 1) % len]) & class)
                .collect();
            return sdr_masks(&sets).map(|assignment| (seq.clone(), assignment));
        }
        let prev = *seq.last().unwrap();
        for cand in 0..self.n {
            if seq.contains(&cand) || self.pair_mask(prev, cand) & class == 0 {
                continue;
            }
            seq.push(cand);
            if let Some(found) = self.extend_cycle(class, len, seq) {
                return Some(found);
            }
            seq.pop();
        }
        None
    }

    fn clique_with_edge(&self, class: u64, m: usize, edge: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        if m > self.n || (class.count_ones() as usize) < m * (m - 1) / 2 {
            return None;
        }
        for &p in &self.pairs_of_edge[edge] {
            let (u, v) = self.pair_uv[p];
            let mut chosen = vec![u, v];
            if let Some(found) = self.extend_clique(class, m, 0, &mut chosen) {
                return Some(found);
            }
        }
        None
    }

    fn extend_clique(&self, class: u64, m: usize, from: usize, chosen: &mut Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == m {
            let mut core = chosen.clone();
            core.sort_unstable();
            let mut sets = Vec::with_capacity(m * (m - 1) / 2);
            for i in 0..m {
                for j in i + 1..m {
                    sets.push(self.pair_mask(core[i], core[j]) & class);
                }
            }
            return sdr_masks(&sets).map(|assignment| (core, assignment));
        }
        for cand in from..self.n {
            if chosen.contains(&cand) {
                continue;
            }
            if !chosen.iter().all(|&w| self.pair_mask(w, cand) & class != 0) {
                continue;
            }
            chosen.push(cand);
            if let Some(found) = self.extend_clique(class, m, cand + 1, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    fn image_of_mask(&self, mask: u64, perm: &[u16]) -> u64 {
        let mut out = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1u64 << perm[i];
        }
        out
    }
}

/// All edge-index permutations induced by non-identity vertex permutations.
fn edge_permutations(base: &Hypergraph) -> Vec<Vec<u16>> {
    let n = base.vertex_count();
    let mut perms = Vec::new();
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    permute_vertices(n, &mut current, &mut used, &mut |perm| {
        if perm.iter().enumerate().all(|(i, &v)| i == v) {
            return;
        }
        let table: Vec<u16> = base
            .edges()
            .iter()
            .map(|e| {
                let mut image = [perm[e[0]], perm[e[1]], perm[e[2]]];
                image.sort_unstable();
                base.edges()
                    .binary_search_by(|probe| probe.as_slice().cmp(&image[..]))
                    .expect("image of a triple is a triple") as u16
            })
            .collect();
        perms.push(table);
    });
    perms
}

fn permute_vertices(n: usize, current: &mut Vec<usize>, used: &mut [bool], visit: &mut impl FnMut(&[usize])) {
    if current.len() == n {
        visit(current);
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            current.push(v);
            permute_vertices(n, current, used, visit);
            current.pop();
            used[v] = false;
        }
    }
}

/// SDR over bitmask sets (elements are bit positions); deterministic
/// ascending-bit Kuhn matching.
fn sdr_masks(sets: &[u64]) -> Option<Vec<usize>> {
    fn try_assign(i: usize, sets: &[u64], visited: &mut u64, owner: &mut [usize; 64]) -> bool {
        let mut avail = sets[i] & !*visited;
        while avail != 0 {
            let b = avail.trailing_zeros() as usize;
            avail &= avail - 1;
            *visited |= 1u64 << b;
            if owner[b] == usize::MAX || try_assign(owner[b], sets, visited, owner) {
                owner[b] = i;
                return true;
            }
        }
        false
    }
    let mut owner = [usize::MAX; 64];
    for i in 0..sets.len() {
        let mut visited = 0u64;
        if !try_assign(i, sets, &mut visited, &mut owner) {
            return None;
        }
    }
    let mut reps = vec![usize::MAX; sets.len()];
    for (b, &o) in owner.iter().enumerate() {
        if o != usize::MAX {
            reps[o] = b;
        }
    }
    Some(reps)
}

/// Lex-leader test on a partial assignment. `perms` maps positions to the
/// positions of their images; a position at or beyond the assigned prefix
/// ends the comparison for that permutation (image unknown).
fn lex_leader_ok(colors: &[u8], perms: &[Vec<u16>]) -> bool {
    let k = colors.len();
    'perm: for table in perms {
        for j in 0..k {
            let i = table[j] as usize;
            if i >= k {
                continue 'perm;
            }
            if colors[i] < colors[j] {
                return false;
            }
            if colors[i] > colors[j] {
                continue 'perm;
            }
        }
    }
    true
}

/// One task for the DFS engine: assign `order` in sequence from the colors in
/// `palette`, on top of `base_masks`.
struct DfsTask<'a> {
    kernel: &'a Kernel,
    specs: &'a [FamilySpec],
    order: Vec<u16>,
    palette: Vec<u8>,
    pos_perms: Vec<Vec<u16>>,
    stride: usize, // 0 disables the lex-leader test
    base_masks: Vec<u64>,
}

struct DfsRun<'a, 'b> {
    task: &'b DfsTask<'a>,
    abort: Option<&'b AtomicBool>,
    aborted: bool,
    stats: SearchStats,
}

impl<'a, 'b> DfsRun<'a, 'b> {
    fn new(task: &'b DfsTask<'a>, abort: Option<&'b AtomicBool>) -> DfsRun<'a, 'b> {
        DfsRun { task, abort, aborted: false, stats: SearchStats::default() }
    }

    /// Continues the search below a prefix; returns full class masks of the
    /// first counterexample in assignment order.
    fn dfs(&mut self, colors: &mut Vec<u8>, masks: &mut Vec<u64>) -> Option<Vec<u64>> {
        self.stats.nodes += 1;
        if let Some(flag) = self.abort {
            if self.stats.nodes.is_multiple_of(1024) && flag.load(Ordering::Relaxed) {
                self.aborted = true;
            }
        }
        if self.aborted {
            return None;
        }
        let depth = colors.len();
        if depth == self.task.order.len() {
            return Some(masks.clone());
        }
        let edge = self.task.order[depth] as usize;
        for &color in &self.task.palette {
            let c = color as usize;
            let bit = 1u64 << edge;
            let grown = masks[c] | bit;
            if self.task.kernel.member_with_edge(grown, &self.task.specs[c], edge).is_some() {
                self.stats.prunes_mono += 1;
                continue;
            }
            colors.push(color);
            let old = masks[c];
            masks[c] = grown;
            let sym_cut = self.task.stride > 0
                && colors.len().is_multiple_of(self.task.stride)
                && !lex_leader_ok(colors, &self.task.pos_perms);
            if sym_cut {
                self.stats.prunes_sym += 1;
            } else if let Some(found) = self.dfs(colors, masks) {
                return Some(found);
            }
            masks[c] = old;
            colors.pop();
            if self.aborted {
                return None;
            }
        }
        None
    }

    /// Enumerates the surviving prefixes at `depth` instead of descending
    /// past them; used to split the search into jobs.
    fn prefixes(&mut self, depth: usize, colors: &mut Vec<u8>, masks: &mut Vec<u64>, out: &mut Vec<Vec<u8>>) {
        self.stats.nodes += 1;
        if colors.len() == depth || colors.len() == self.task.order.len() {
            out.push(colors.clone());
            return;
        }
        let edge = self.task.order[colors.len()] as usize;
        for &color in &self.task.palette {
            let c = color as usize;
            let bit = 1u64 << edge;
            let grown = masks[c] | bit;
            if self.task.kernel.member_with_edge(grown, &self.task.specs[c], edge).is_some() {
                self.stats.prunes_mono += 1;
                continue;
            }
            colors.push(color);
            let old = masks[c];
            masks[c] = grown;
            let sym_cut = self.task.stride > 0
                && colors.len().is_multiple_of(self.task.stride)
                && !lex_leader_ok(colors, &self.task.pos_perms);
            if sym_cut {
                self.stats.prunes_sym += 1;
            } else {
                self.prefixes(depth, colors, masks, out);
            }
            masks[c] = old;
            colors.pop();
        }
    }
}

fn dfs_task<'a>(kernel: &'a Kernel, p: &'a ArrowingProblem) -> DfsTask<'a> {
    let stride = if p.symmetry { p.stride() } else { 0 };
    DfsTask {
        kernel,
        specs: &p.specs,
        order: (0..kernel.edge_count as u16).collect(),
        palette: (0..p.specs.len() as u8).collect(),
        pos_perms: kernel.perms.clone(),
        stride,
        base_masks: vec![0; p.specs.len()],
    }
}

/// The 2-coloring task left after fixing a green class.
fn green_task<'a>(kernel: &'a Kernel, p: &'a ArrowingProblem, green: u64) -> DfsTask<'a> {
    let order: Vec<u16> =
        (0..kernel.edge_count as u16).filter(|&i| green & (1u64 << i) == 0).collect();
    let mut pos_of = vec![u16::MAX; kernel.edge_count];
    for (k, &e) in order.iter().enumerate() {
        pos_of[e as usize] = k as u16;
    }
    // Only permutations stabilizing the green class act on the residual
    // 2-coloring; others would move fixed green edges.
    let pos_perms: Vec<Vec<u16>> = kernel
        .perms
        .iter()
        .filter(|perm| kernel.image_of_mask(green, perm) == green)
        .map(|perm| order.iter().map(|&e| pos_of[perm[e as usize] as usize]).collect())
        .collect();
    let stride = if p.symmetry { p.stride() } else { 0 };
    let mut base_masks = vec![0u64; 3];
    base_masks[2] = green;
    DfsTask {
        kernel,
        specs: &p.specs,
        order,
        palette: vec![0, 1],
        pos_perms,
        stride,
        base_masks,
    }
}

/// All Berge-triangle-free subsets of the host edges with at most `cap`
/// edges, as bitmasks. When `canonical` is set only the numerically smallest
/// member of each orbit is kept.
fn triangle_free_classes(kernel: &Kernel, cap: usize, canonical: bool) -> Vec<u64> {
    let mut all = Vec::new();
    fn rec(kernel: &Kernel, cap: usize, from: usize, mask: u64, size: usize, out: &mut Vec<u64>) {
        out.push(mask);
        if size == cap {
            return;
        }
        for e in from..kernel.edge_count {
            let grown = mask | (1u64 << e);
            if kernel.member_with_edge(grown, &FamilySpec::Cycle(3), e).is_none() {
                rec(kernel, cap, e + 1, grown, size + 1, out);
            }
        }
    }
    rec(kernel, cap, 0, 0, 0, &mut all);
    if canonical {
        all.retain(|&mask| kernel.perms.iter().all(|perm| kernel.image_of_mask(mask, perm) >= mask));
    }
    all.sort_unstable();
    all
}

fn masks_to_coloring(kernel: &Kernel, masks: &[u64]) -> ColoredHypergraph {
    let mut colors = vec![0usize; kernel.edge_count];
    for (c, &mask) in masks.iter().enumerate() {
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            colors[i] = c;
        }
    }
    ColoredHypergraph::new(kernel.base.clone(), masks.len(), colors)
        .expect("search masks form a total coloring")
}

/// Re-certifies a counterexample class by class with the full detector; the
/// search's own pruning is never the sole witness.
fn certify_counterexample(kernel: &Kernel, specs: &[FamilySpec], masks: &[u64]) -> ColoredHypergraph {
    for (c, spec) in specs.iter().enumerate() {
        let (class, _) = kernel.materialize(masks[c]);
        let found = berge::find_member(&class, spec).expect("specs validated upstream");
        assert!(
            found.is_none(),
            "internal error: color {c} of a claimed counterexample contains {spec}"
        );
    }
    masks_to_coloring(kernel, masks)
}

/// One unit of search work, as produced by [`split_jobs`].
#[derive(Clone, Debug)]
pub enum SearchJob {
    /// Continue the plain DFS below this color prefix.
    Prefix(Vec<u8>),
    /// Run the full 2-coloring phase for this green class.
    GreenClass(u64),
}

/// Splits the problem into at least `min_jobs` independent jobs when
/// possible. Running every job (in any order, under any interleaving) and
/// reporting a counterexample iff some job finds one reproduces the verdict
/// of [`decide_arrowing`]; enumeration work is charged to the returned stats.
pub fn split_jobs(p: &ArrowingProblem, min_jobs: usize) -> Result<(Vec<SearchJob>, SearchStats), SearchError> {
    p.validate()?;
    let kernel = Kernel::new(p.vertex_count, p.symmetry);
    let mut stats = SearchStats::default();
    match p.strategy {
        Strategy::TuranFirst => {
            let cap = p.vertex_count * p.vertex_count / 8;
            let classes = triangle_free_classes(&kernel, cap, p.symmetry);
            Ok((classes.into_iter().map(SearchJob::GreenClass).collect(), stats))
        }
        Strategy::Dfs => {
            let task = dfs_task(&kernel, p);
            let mut depth = 0;
            let mut jobs = vec![Vec::new()];
            while jobs.len() < min_jobs && depth < kernel.edge_count {
                depth += 1;
                let mut run = DfsRun::new(&task, None);
                let mut colors = Vec::new();
                let mut masks = task.base_masks.clone();
                let mut out = Vec::new();
                run.prefixes(depth, &mut colors, &mut masks, &mut out);
                stats = run.stats;
                jobs = out;
                if jobs.is_empty() {
                    break; // everything pruned: arrows with no work left
                }
            }
            Ok((jobs.into_iter().map(SearchJob::Prefix).collect(), stats))
        }
    }
}

/// Runs one job to completion (or until `abort` is raised), returning a
/// certified counterexample if the job's subtree contains one.
pub fn run_job(
    p: &ArrowingProblem,
    job: &SearchJob,
    abort: Option<&AtomicBool>,
) -> Result<(Option<ColoredHypergraph>, SearchStats), SearchError> {
    p.validate()?;
    let kernel = Kernel::new(p.vertex_count, p.symmetry);
    match job {
        SearchJob::Prefix(prefix) => {
            let task = dfs_task(&kernel, p);
            let mut colors = prefix.clone();
            let mut masks = task.base_masks.clone();
            for (depth, &c) in prefix.iter().enumerate() {
                masks[c as usize] |= 1u64 << task.order[depth];
            }
            let mut run = DfsRun::new(&task, abort);
            let found = run.dfs(&mut colors, &mut masks);
            let cex = found.map(|m| certify_counterexample(&kernel, &p.specs, &m));
            Ok((cex, run.stats))
        }
        SearchJob::GreenClass(green) => {
            let task = green_task(&kernel, p, *green);
            let mut colors = Vec::new();
            let mut masks = task.base_masks.clone();
            let mut run = DfsRun::new(&task, abort);
            let found = run.dfs(&mut colors, &mut masks);
            let cex = found.map(|m| certify_counterexample(&kernel, &p.specs, &m));
            Ok((cex, run.stats))
        }
    }
}

/// Decides the arrowing instance exactly, single-threaded. Counterexamples
/// are re-certified by the detectors before being returned; with one worker
/// the returned counterexample is deterministic for a fixed strategy.
pub fn decide_arrowing(p: &ArrowingProblem) -> Result<SearchOutcome, SearchError> {
    decide_arrowing_with_abort(p, None)
}

/// As [`decide_arrowing`], stopping early (verdict-safe) when `abort` is set
/// by another worker that already found a counterexample.
pub fn decide_arrowing_with_abort(
    p: &ArrowingProblem,
    abort: Option<&AtomicBool>,
) -> Result<SearchOutcome, SearchError> {
    p.validate()?;
    let kernel = Kernel::new(p.vertex_count, p.symmetry);
    let mut stats = SearchStats::default();
    match p.strategy {
        Strategy::Dfs => {
            let task = dfs_task(&kernel, p);
            let mut run = DfsRun::new(&task, abort);
            let mut colors = Vec::new();
            let mut masks = task.base_masks.clone();
            let found = run.dfs(&mut colors, &mut masks);
            stats.merge(&run.stats);
            let verdict = match found {
                Some(masks) => Verdict::Counterexample(certify_counterexample(&kernel, &p.specs, &masks)),
                None => Verdict::Arrows,
            };
            Ok(SearchOutcome { verdict, stats })
        }
        Strategy::TuranFirst => {
            let cap = p.vertex_count * p.vertex_count / 8;
            let classes = triangle_free_classes(&kernel, cap, p.symmetry);
            for green in classes {
                let task = green_task(&kernel, p, green);
                let mut run = DfsRun::new(&task, abort);
                let mut colors = Vec::new();
                let mut masks = task.base_masks.clone();
                let found = run.dfs(&mut colors, &mut masks);
                stats.merge(&run.stats);
                if let Some(masks) = found {
                    let cex = certify_counterexample(&kernel, &p.specs, &masks);
                    return Ok(SearchOutcome { verdict: Verdict::Counterexample(cex), stats });
                }
            }
            Ok(SearchOutcome { verdict: Verdict::Arrows, stats })
        }
    }
}

#[derive(Clone, Debug)]
pub struct RamseyResult {
    /// The least vertex count that arrows.
    pub value: usize,
    /// A certified counterexample one vertex below, when that size was tried.
    pub counterexample_below: Option<ColoredHypergraph>,
    pub stats: SearchStats,
}

/// Least N <= n_max whose complete host arrows the given families, scanning
/// upward from 3. Uses turan-first when the instance qualifies.
pub fn ramsey_number(specs: &[FamilySpec], n_max: usize) -> Result<RamseyResult, SearchError> {
    let mut stats = SearchStats::default();
    let mut below = None;
    for n in 3..=n_max {
        let mut p = ArrowingProblem::new(n, specs.to_vec());
        if specs.len() == 3 && specs[2] == FamilySpec::Cycle(3) {
            p = p.with_strategy(Strategy::TuranFirst);
        }
        let outcome = decide_arrowing(&p)?;
        stats.merge(&outcome.stats);
        match outcome.verdict {
            Verdict::Arrows => {
                return Ok(RamseyResult { value: n, counterexample_below: below, stats });
            }
            Verdict::Counterexample(cex) => below = Some(cex),
        }
    }
    Err(SearchError::NotFoundWithinBound { n_max })
}

#[derive(Clone, Debug)]
pub struct TuranResult {
    pub max_edges: usize,
    /// A spec-free subhypergraph attaining the maximum, certified by the
    /// detector before being returned.
    pub witness: Hypergraph,
    pub stats: SearchStats,
}

/// Exact maximum edge count of a spec-free subhypergraph of the complete
/// host, by branch and bound over the edge list (include-first, counting
/// bound, monochromatic and lex-leader pruning).
pub fn turan_max(n: usize, spec: &FamilySpec) -> Result<TuranResult, SearchError> {
    if n < 3 {
        return Err(SearchError::TooFewVertices { vertices: n });
    }
    let triples = triple_count(n);
    if triples > MAX_TRIPLES {
        return Err(SearchError::ScaleExceeded { vertices: n, triples });
    }
    spec.validate().map_err(SearchError::InvalidSpec)?;
    let kernel = Kernel::new(n, true);
    let stride = if n <= 5 { 1 } else { 3 };
    let mut best_mask = 0u64;
    let mut best_count = 0usize;
    let mut stats = SearchStats::default();
    let mut decisions: Vec<u8> = Vec::with_capacity(kernel.edge_count);

    struct Bb<'a> {
        kernel: &'a Kernel,
        spec: &'a FamilySpec,
        stride: usize,
    }
    impl<'a> Bb<'a> {
        #[allow(clippy::too_many_arguments)]
        fn rec(
            &self,
            idx: usize,
            mask: u64,
            count: usize,
            decisions: &mut Vec<u8>,
            best_mask: &mut u64,
            best_count: &mut usize,
            stats: &mut SearchStats,
        ) {
            stats.nodes += 1;
            // Every explored prefix is itself spec-free, so it is a candidate witness.
            if count > *best_count {
                *best_count = count;
                *best_mask = mask;
            }
            if idx == self.kernel.edge_count || count + (self.kernel.edge_count - idx) <= *best_count {
                return;
            }
            // include
            let grown = mask | (1u64 << idx);
            if self.kernel.member_with_edge(grown, self.spec, idx).is_none() {
                decisions.push(1);
                let cut = self.stride > 0
                    && decisions.len().is_multiple_of(self.stride)
                    && !lex_leader_ok(decisions, &self.kernel.perms);
                if cut {
                    stats.prunes_sym += 1;
                } else {
                    self.rec(idx + 1, grown, count + 1, decisions, best_mask, best_count, stats);
                }
                decisions.pop();
            } else {
                stats.prunes_mono += 1;
            }
            // exclude
            decisions.push(0);
            let cut = self.stride > 0
                && decisions.len().is_multiple_of(self.stride)
                && !lex_leader_ok(decisions, &self.kernel.perms);
            if cut {
                stats.prunes_sym += 1;
            } else {
                self.rec(idx + 1, mask, count, decisions, best_mask, best_count, stats);
            }
            decisions.pop();
        }
    }

    let bb = Bb { kernel: &kernel, spec, stride };
    bb.rec(0, 0, 0, &mut decisions, &mut best_mask, &mut best_count, &mut stats);

    let (witness, _) = kernel.materialize(best_mask);
    let found = berge::find_member(&witness, spec).map_err(SearchError::InvalidSpec)?;
    assert!(found.is_none(), "internal error: Turan witness contains {spec}");
    Ok(TuranResult { max_edges: best_count, witness, stats })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn specs_ccc(n: usize) -> Vec<FamilySpec> {
        vec![FamilySpec::Cycle(n), FamilySpec::Cycle(n), FamilySpec::Cycle(3)]
    }

    #[test]
    fn c4_c4_c3_arrows_at_five() {
        let p = ArrowingProblem::new(5, specs_ccc(4));
        let out = decide_arrowing(&p).unwrap();
        assert!(out.verdict.arrows());
        assert!(out.stats.nodes > 0);
    }

    #[test]
    fn c4_c4_c3_has_counterexample_at_four() {
        let p = ArrowingProblem::new(4, specs_ccc(4));
        let out = decide_arrowing(&p).unwrap();
        match out.verdict {
            Verdict::Counterexample(cex) => {
                for (c, spec) in p.specs.iter().enumerate() {
                    let class = cex.color_class(c).unwrap();
                    assert!(berge::find_member(&class, spec).unwrap().is_none());
                }
            }
            Verdict::Arrows => panic!("N=4 must not arrow"),
        }
    }

    #[test]
    fn clique_vs_cycle_small_cases() {
        let specs = vec![FamilySpec::Clique(4), FamilySpec::Cycle(4)];
        let at5 = decide_arrowing(&ArrowingProblem::new(5, specs.clone())).unwrap();
        assert!(at5.verdict.arrows());
        let at4 = decide_arrowing(&ArrowingProblem::new(4, specs)).unwrap();
        assert!(!at4.verdict.arrows());

        let specs = vec![FamilySpec::Clique(3), FamilySpec::Cycle(3)];
        let out = decide_arrowing(&ArrowingProblem::new(5, specs)).unwrap();
        assert!(out.verdict.arrows());
    }

    #[test]
    fn ramsey_number_of_c4_c4_c3() {
        let r = ramsey_number(&specs_ccc(4), 6).unwrap();
        assert_eq!(r.value, 5);
        assert!(r.counterexample_below.is_some());
    }

    #[test]
    fn verdicts_agree_across_strategies_and_symmetry() {
        for len in [4, 5] {
            for n in 4..=5 {
                let base = ArrowingProblem::new(n, specs_ccc(len));
                let dfs = decide_arrowing(&base).unwrap();
                let tf = decide_arrowing(&base.clone().with_strategy(Strategy::TuranFirst)).unwrap();
                let nosym = decide_arrowing(&base.clone().with_symmetry(false)).unwrap();
                assert_eq!(dfs.verdict.arrows(), tf.verdict.arrows(), "strategy mismatch at n={n}");
                assert_eq!(dfs.verdict.arrows(), nosym.verdict.arrows(), "symmetry mismatch at n={n}");
            }
        }
    }

    #[test]
    fn counterexamples_are_deterministic() {
        let p = ArrowingProblem::new(4, specs_ccc(4));
        let a = decide_arrowing(&p).unwrap();
        let b = decide_arrowing(&p).unwrap();
        match (a.verdict, b.verdict) {
            (Verdict::Counterexample(x), Verdict::Counterexample(y)) => assert_eq!(x, y),
            _ => panic!("both runs must find the counterexample"),
        }
    }

    #[test]
    fn split_jobs_reproduce_the_verdict() {
        for n in [4, 5] {
            let p = ArrowingProblem::new(n, specs_ccc(4));
            let direct = decide_arrowing(&p).unwrap();
            let (jobs, _) = split_jobs(&p, 4).unwrap();
            let mut found = None;
            for job in &jobs {
                let (cex, _) = run_job(&p, job, None).unwrap();
                if let Some(cex) = cex {
                    found = Some(cex);
                    break;
                }
            }
            assert_eq!(direct.verdict.arrows(), found.is_none(), "n={n}");
        }
    }

    #[test]
    fn arrowing_is_monotone_for_c4_instance() {
        // Once N=5 arrows, N=6 must as well.
        let p5 = ArrowingProblem::new(5, specs_ccc(4)).with_strategy(Strategy::TuranFirst);
        assert!(decide_arrowing(&p5).unwrap().verdict.arrows());
        let p6 = ArrowingProblem::new(6, specs_ccc(4)).with_strategy(Strategy::TuranFirst);
        assert!(decide_arrowing(&p6).unwrap().verdict.arrows());
    }

    #[test]
    fn strategies_agree_on_the_six_vertex_c5_instance() {
        let dfs = decide_arrowing(&ArrowingProblem::new(6, specs_ccc(5))).unwrap();
        let tf = decide_arrowing(
            &ArrowingProblem::new(6, specs_ccc(5)).with_strategy(Strategy::TuranFirst),
        )
        .unwrap();
        assert!(dfs.verdict.arrows());
        assert!(tf.verdict.arrows());
    }

    #[test]
    fn turan_maxima_small() {
        let r = turan_max(5, &FamilySpec::Clique(4)).unwrap();
        assert_eq!(r.max_edges, 5);
        assert_eq!(r.witness.edge_count(), 5);

        let r = turan_max(4, &FamilySpec::Cycle(3)).unwrap();
        assert_eq!(r.max_edges, 2);

        let r = turan_max(5, &FamilySpec::Cycle(3)).unwrap();
        assert_eq!(r.max_edges, 3);
    }

    #[test]
    fn scale_is_enforced() {
        assert!(matches!(
            decide_arrowing(&ArrowingProblem::new(9, specs_ccc(4))),
            Err(SearchError::ScaleExceeded { .. })
        ));
        assert!(matches!(
            turan_max(9, &FamilySpec::Cycle(3)),
            Err(SearchError::ScaleExceeded { .. })
        ));
    }

    #[test]
    fn turan_first_requires_green_triangle() {
        let p = ArrowingProblem::new(5, vec![FamilySpec::Cycle(4), FamilySpec::Cycle(4)])
            .with_strategy(Strategy::TuranFirst);
        assert!(matches!(decide_arrowing(&p), Err(SearchError::StrategyMismatch)));
    }

    #[test]
    fn single_color_arrowing_is_containment() {
        // With one color the only coloring is monochromatic, so arrowing
        // reduces to membership in the complete host.
        let arrows = decide_arrowing(&ArrowingProblem::new(5, vec![FamilySpec::Cycle(3)])).unwrap();
        assert!(arrows.verdict.arrows());
        let too_long = decide_arrowing(&ArrowingProblem::new(4, vec![FamilySpec::Cycle(5)])).unwrap();
        assert!(!too_long.verdict.arrows());
    }

    #[test]
    fn green_cap_is_tight_at_every_kernel_size() {
        // turan-first only enumerates green classes up to floor(N^2/8); if a
        // larger Berge-triangle-free family existed the strategy would skip
        // it. Triangle-free families are downward closed, so finding none of
        // size cap+1 proves none larger exists either.
        for n in 4..=8 {
            let kernel = Kernel::new(n, false);
            let cap = n * n / 8;
            let classes = triangle_free_classes(&kernel, cap + 1, false);
            let max_size = classes.iter().map(|m| m.count_ones() as usize).max().unwrap();
            assert!(max_size <= cap, "a {max_size}-edge triangle-free family at N={n}");
        }
    }

    #[test]
    fn turan_witness_is_deterministic() {
        let a = turan_max(6, &FamilySpec::Clique(5)).unwrap();
        let b = turan_max(6, &FamilySpec::Clique(5)).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.max_edges, b.max_edges);
    }

    #[test]
    fn ramsey_number_without_a_smaller_counterexample() {
        // Any nonempty color class contains a Berge K_2, so the scan arrows
        // at its starting size and has no counterexample below to return.
        let r = ramsey_number(&[FamilySpec::Clique(2), FamilySpec::Clique(2)], 5).unwrap();
        assert_eq!(r.value, 3);
        assert!(r.counterexample_below.is_none());

        assert!(matches!(
            ramsey_number(&[FamilySpec::Cycle(5), FamilySpec::Cycle(5)], 4),
            Err(SearchError::NotFoundWithinBound { n_max: 4 })
        ));
    }
}
