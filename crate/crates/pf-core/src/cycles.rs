use std::cmp::Reverse;

use crate::digraph::FunctionalDigraph;
use crate::pref::PrefSequence;

/// Cycle data of a functional digraph.
///
/// `cycle_lengths` is sorted by descending length, ties broken by ascending
/// smallest vertex on the cycle, so equal inputs always produce equal output.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleStats {
    n: usize,
    cyclic_points: u32,
    cycle_lengths: Vec<u32>,
}

impl CycleStats {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices lying on a cycle.
    pub fn cyclic_points(&self) -> u32 {
        self.cyclic_points
    }

    /// Number of cycles, which equals the number of components.
    pub fn num_cycles(&self) -> usize {
        self.cycle_lengths.len()
    }

    /// Cycle lengths, descending, ties by ascending smallest vertex.
    pub fn cycle_lengths(&self) -> &[u32] {
        &self.cycle_lengths
    }

    /// Length of the `r`-th longest cycle (1-indexed), 0 if there are fewer
    /// than `r` cycles.
    pub fn longest(&self, r: usize) -> u32 {
        assert!(r >= 1, "cycle rank is 1-indexed");
        self.cycle_lengths.get(r - 1).copied().unwrap_or(0)
    }

    /// Number of cycles of length exactly `k`.
    pub fn count_of_length(&self, k: u32) -> usize {
        self.cycle_lengths.iter().filter(|&&l| l == k).count()
    }
}

/// Reusable buffers for [`cycle_stats_with`]. One per worker thread is enough;
/// the buffers grow to the largest `n` seen.
#[derive(Debug, Default)]
pub struct CycleScratch {
    indegree: Vec<u32>,
    stack: Vec<u32>,
}

/// Cycle statistics of `prefs` (1-indexed preferences) using caller-provided
/// scratch. This is the allocation-light path for tight sampling loops.
pub fn cycle_stats_with(prefs: &[u32], scratch: &mut CycleScratch) -> CycleStats {
    stats_kernel(prefs.len(), |i| (prefs[i] - 1) as usize, scratch)
}

/// Cycle statistics of a digraph.
///
/// Cyclic points are found by repeatedly removing vertices of indegree zero;
/// the survivors are exactly the vertices on cycles. O(n) time and space.
pub fn cycle_stats(g: &FunctionalDigraph) -> CycleStats {
    let succ = g.succ0();
    stats_kernel(g.n(), |i| succ[i] as usize, &mut CycleScratch::default())
}

/// Cycle statistics straight from a preference sequence, without building the
/// intermediate digraph.
pub fn cycle_stats_of(seq: &PrefSequence) -> CycleStats {
    cycle_stats_with(seq.prefs(), &mut CycleScratch::default())
}

/// Elementwise [`cycle_stats_of`] over a stream of sequences, order-preserving.
pub fn cycle_stats_batch<I>(seqs: I) -> impl Iterator<Item = CycleStats>
where
    I: IntoIterator<Item = PrefSequence>,
{
    let mut scratch = CycleScratch::default();
    seqs.into_iter()
        .map(move |seq| cycle_stats_with(seq.prefs(), &mut scratch))
}

fn stats_kernel(
    n: usize,
    succ: impl Fn(usize) -> usize,
    scratch: &mut CycleScratch,
) -> CycleStats {
    let indegree = &mut scratch.indegree;
    let stack = &mut scratch.stack;
    indegree.clear();
    indegree.resize(n, 0);
    stack.clear();

    for v in 0..n {
        indegree[succ(v)] += 1;
    }
    for v in 0..n {
        if indegree[v] == 0 {
            stack.push(v as u32);
        }
    }
    let mut peeled = 0usize;
    while let Some(v) = stack.pop() {
        peeled += 1;
        let u = succ(v as usize);
        indegree[u] -= 1;
        if indegree[u] == 0 {
            stack.push(u as u32);
        }
    }
    let cyclic_points = (n - peeled) as u32;

    // Survivors have indegree > 0. Walking from the smallest unvisited cyclic
    // vertex discovers each cycle at its smallest vertex; zeroing indegree
    // marks visits.
    let mut cycles: Vec<(u32, u32)> = Vec::new(); // (length, smallest vertex)
    for v in 0..n {
        if indegree[v] > 0 {
            let mut len = 0u32;
            let mut w = v;
            while indegree[w] > 0 {
                indegree[w] = 0;
                len += 1;
                w = succ(w);
            }
            cycles.push((len, v as u32));
        }
    }
    cycles.sort_unstable_by_key(|&(len, v)| (Reverse(len), v));

    CycleStats {
        n,
        cyclic_points,
        cycle_lengths: cycles.into_iter().map(|(len, _)| len).collect(),
    }
}
