use crate::pref::PrefSequence;

/// The functional digraph of a map `[n] -> [n]`: one outgoing edge per
/// vertex, from `i` to `successor(i)`.
///
/// Vertices are 1-indexed in the public API; storage is 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionalDigraph {
    succ: Vec<u32>,
}

impl FunctionalDigraph {
    pub fn n(&self) -> usize {
        self.succ.len()
    }

    /// Successor of vertex `v` (both 1-indexed).
    pub fn successor(&self, v: u32) -> u32 {
        self.succ[(v - 1) as usize] + 1
    }

    /// Successors as a 0-indexed slice: entry `i` is `f(i+1) - 1`.
    pub(crate) fn succ0(&self) -> &[u32] {
        &self.succ
    }
}

/// Builds the digraph with an edge `i -> seq(i)` for every car `i`.
pub fn build_digraph(seq: &PrefSequence) -> FunctionalDigraph {
    FunctionalDigraph {
        succ: seq.prefs().iter().map(|&p| p - 1).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32]) -> PrefSequence {
        PrefSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn digraph_is_definitional() {
        let g = build_digraph(&seq(&[1, 1, 2]));
        assert_eq!(g.n(), 3);
        assert_eq!(g.successor(1), 1);
        assert_eq!(g.successor(2), 1);
        assert_eq!(g.successor(3), 2);

        let g = build_digraph(&seq(&[2, 3, 1]));
        assert_eq!((g.successor(1), g.successor(2), g.successor(3)), (2, 3, 1));

        let g = build_digraph(&seq(&[1]));
        assert_eq!(g.successor(1), 1);
    }
}
