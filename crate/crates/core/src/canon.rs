//! Canonical labelling by partition refinement and backtracking.
//!
//! The search refines the unit partition to an equitable ordered partition,
//! then individualizes vertices of the first non-singleton cell and refines
//! again until every cell is a singleton. Each leaf is a relabelling; the
//! canonical form is the lexicographically smallest upper-triangle bit string
//! over all leaves.
//!
//! Two prunings keep highly symmetric graphs cheap. A leaf whose bit string
//! equals an earlier one yields an automorphism; the search then returns to
//! the deepest common ancestor of the two leaves, because the remaining
//! subtree is an automorphic image of one already explored. Automorphisms that
//! fix the current prefix pointwise also let a node skip children in the
//! orbit of an explored child. Neither pruning changes the set of leaf
//! strings, so the minimum is the same as for the unpruned search.

use crate::graph::{Graph, VertexIter};

/// Upper-triangle adjacency bits of the canonical relabelling.
///
/// Bits are ordered column-major (`(0,1), (0,2), (1,2), (0,3), ..`) and packed
/// most-significant first, so comparing `bits` lexicographically compares the
/// bit strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    order: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.order;
        let mut rows = vec![0u64; n];
        for j in 1..n {
            for i in 0..j {
                let p = pair_index(i, j);
                if self.bits[p / 64] >> (63 - p % 64) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

fn code_words(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(64).max(1)
}

/// Computes the canonical form of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let mut search = Search::new(g.rows());
    let mut cells = vec![g.vertex_set().bits()];
    search.refine(&mut cells);
    let mut prefix = Vec::with_capacity(n);
    search.visit(cells, &mut prefix);
    CanonicalForm {
        order: n,
        bits: search.best_code,
    }
}

/// Relabelling `perm` (vertex -> new label) that maps `g` to its canonical form.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut search = Search::new(g.rows());
    let mut cells = vec![g.vertex_set().bits()];
    search.refine(&mut cells);
    let mut prefix = Vec::new();
    search.visit(cells, &mut prefix);
    let mut perm = vec![0; g.order()];
    for (label, &v) in search.best_labels.iter().enumerate() {
        perm[v as usize] = label;
    }
    perm
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first_code: Vec<u64>,
    first_path: Vec<u8>,
    first_labels: Vec<u8>,
    best_code: Vec<u64>,
    best_path: Vec<u8>,
    best_labels: Vec<u8>,
    scratch: Vec<u64>,
    /// Discovered automorphisms as vertex images.
    automorphisms: Vec<Vec<u8>>,
    have_leaf: bool,
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64]) -> Self {
        let n = adj.len();
        let words = code_words(n);
        Search {
            adj,
            n,
            first_code: vec![0; words],
            first_path: Vec::new(),
            first_labels: Vec::new(),
            best_code: vec![0; words],
            best_path: Vec::new(),
            best_labels: Vec::new(),
            scratch: vec![0; words],
            automorphisms: Vec::new(),
            have_leaf: false,
        }
    }

    /// Refines an ordered partition (cells as vertex masks) to an equitable one.
    ///
    /// Every choice depends only on cell positions and neighbour counts, so the
    /// result commutes with relabelling.
    fn refine(&self, cells: &mut Vec<u64>) {
        let mut counts = [0u8; 64];
        loop {
            let mut changed = false;
            let mut s = 0;
            while s < cells.len() {
                if cells.len() == self.n {
                    return;
                }
                let splitter = cells[s];
                let mut i = 0;
                while i < cells.len() {
                    let cell = cells[i];
                    if cell.count_ones() < 2 {
                        i += 1;
                        continue;
                    }
                    let (mut lo, mut hi) = (u8::MAX, 0u8);
                    for v in VertexIter(cell) {
                        let c = (self.adj[v] & splitter).count_ones() as u8;
                        counts[v] = c;
                        lo = lo.min(c);
                        hi = hi.max(c);
                    }
                    if lo == hi {
                        i += 1;
                        continue;
                    }
                    let mut parts = Vec::new();
                    for c in lo..=hi {
                        let part = VertexIter(cell)
                            .filter(|&v| counts[v] == c)
                            .fold(0u64, |m, v| m | 1 << v);
                        if part != 0 {
                            parts.push(part);
                        }
                    }
                    let k = parts.len();
                    cells.splice(i..=i, parts);
                    if s > i {
                        s += k - 1;
                    }
                    i += k;
                    changed = true;
                }
                s += 1;
            }
            if !changed {
                return;
            }
        }
    }

    /// Depth-first search below the node with the given partition and prefix.
    /// Returns `Some(level)` to abandon every node deeper than `level`.
    fn visit(&mut self, cells: Vec<u64>, prefix: &mut Vec<u8>) -> Option<usize> {
        let level = prefix.len();
        if cells.len() == self.n {
            return self.leaf(&cells, prefix);
        }
        let (target_idx, target) = cells
            .iter()
            .copied()
            .enumerate()
            .find(|(_, c)| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");

        let mut explored = 0u64;
        for v in VertexIter(target) {
            if explored != 0 && self.orbit_closure(explored, prefix) >> v & 1 == 1 {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            self.refine(&mut child);
            prefix.push(v as u8);
            let jump = self.visit(child, prefix);
            prefix.pop();
            if let Some(t) = jump {
                if t < level {
                    return Some(t);
                }
            }
        }
        None
    }

    /// Closure of `set` under the stored automorphisms that fix `prefix` pointwise.
    fn orbit_closure(&self, set: u64, prefix: &[u8]) -> u64 {
        let mut closure = set;
        loop {
            let before = closure;
            for gamma in &self.automorphisms {
                if prefix.iter().any(|&p| gamma[p as usize] != p) {
                    continue;
                }
                for v in VertexIter(closure) {
                    closure |= 1 << gamma[v];
                }
            }
            if closure == before {
                return closure;
            }
        }
    }

    fn leaf(&mut self, cells: &[u64], path: &[u8]) -> Option<usize> {
        let labels: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut code = std::mem::take(&mut self.scratch);
        code.iter_mut().for_each(|w| *w = 0);
        for j in 1..self.n {
            let row = self.adj[labels[j] as usize];
            for (i, &l) in labels[..j].iter().enumerate() {
                if row >> l & 1 == 1 {
                    let p = pair_index(i, j);
                    code[p / 64] |= 1 << (63 - p % 64);
                }
            }
        }

        let result = if !self.have_leaf {
            self.have_leaf = true;
            self.first_code.copy_from_slice(&code);
            self.first_path = path.to_vec();
            self.first_labels = labels.clone();
            self.best_code.copy_from_slice(&code);
            self.best_path = path.to_vec();
            self.best_labels = labels;
            None
        } else if code == self.first_code {
            let first_labels = std::mem::take(&mut self.first_labels);
            self.record_automorphism(&first_labels, &labels);
            self.first_labels = first_labels;
            Some(common_prefix(path, &self.first_path))
        } else if code == self.best_code {
            let best_labels = self.best_labels.clone();
            self.record_automorphism(&best_labels, &labels);
            Some(common_prefix(path, &self.best_path))
        } else {
            if code < self.best_code {
                self.best_code.copy_from_slice(&code);
                self.best_path = path.to_vec();
                self.best_labels = labels;
            }
            None
        };
        self.scratch = code;
        result
    }

    /// Both labellings produce the same relabelled graph, so mapping
    /// `from[i] -> to[i]` is an automorphism.
    fn record_automorphism(&mut self, from: &[u8], to: &[u8]) {
        let mut gamma = vec![0u8; self.n];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a as usize] = b;
        }
        if gamma.iter().enumerate().all(|(i, &g)| g as usize == i) {
            return;
        }
        debug_assert!(self.is_automorphism(&gamma));
        self.automorphisms.push(gamma);
    }

    fn is_automorphism(&self, gamma: &[u8]) -> bool {
        (0..self.n).all(|u| {
            let image = VertexIter(self.adj[u]).fold(0u64, |m, v| m | 1 << gamma[v]);
            image == self.adj[gamma[u] as usize]
        })
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
