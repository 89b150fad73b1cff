//! Shared test support: independent oracles (union-find connectivity,
//! exhaustive subset scans, relator-move search) and small-graph
//! enumeration. Everything here deliberately avoids the library's own
//! algorithms for the quantities it checks.

#![allow(dead_code)]

use raag::{Graph, Letter, VertexSet, Word};
use std::collections::{HashSet, VecDeque};

pub fn word(g: &Graph, s: &str) -> Word {
    Word::parse(g, s).unwrap()
}

pub fn set(labels: &[&str]) -> VertexSet {
    VertexSet::from_labels(labels.iter().copied())
}

pub fn p3() -> Graph {
    Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
}

pub fn c4() -> Graph {
    Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
}

pub fn free_xy() -> Graph {
    Graph::new(["x", "y"], []).unwrap()
}

// ---------------------------------------------------------------- union-find

pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Component count of the graph minus `removed`, by union-find.
pub fn uf_component_count(g: &Graph, removed: &VertexSet) -> usize {
    let labels: Vec<&str> = g.labels().collect();
    let keep: Vec<bool> = labels.iter().map(|l| !removed.contains(l)).collect();
    let mut uf = UnionFind::new(labels.len());
    for (u, v) in g.edge_labels() {
        let iu = labels.iter().position(|l| *l == u).unwrap();
        let iv = labels.iter().position(|l| *l == v).unwrap();
        if keep[iu] && keep[iv] {
            uf.union(iu, iv);
        }
    }
    (0..labels.len()).filter(|&i| keep[i] && uf.find(i) == i).count()
}

pub fn oracle_is_separating(g: &Graph, s: &VertexSet) -> bool {
    uf_component_count(g, s) >= 2
}

pub fn oracle_separates(g: &Graph, s: &VertexSet, u: &str, v: &str) -> bool {
    let labels: Vec<&str> = g.labels().collect();
    let mut uf = UnionFind::new(labels.len());
    for (a, b) in g.edge_labels() {
        let ia = labels.iter().position(|l| *l == a).unwrap();
        let ib = labels.iter().position(|l| *l == b).unwrap();
        if !s.contains(&a) && !s.contains(&b) {
            uf.union(ia, ib);
        }
    }
    let iu = labels.iter().position(|l| *l == u).unwrap();
    let iv = labels.iter().position(|l| *l == v).unwrap();
    uf.find(iu) != uf.find(iv)
}

/// Every subset of the vertex labels, in mask order.
pub fn all_subsets(g: &Graph) -> Vec<VertexSet> {
    let labels: Vec<&str> = g.labels().collect();
    (0u32..1 << labels.len())
        .map(|m| {
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| m & (1 << i) != 0)
                .map(|(_, l)| l.to_string())
                .collect()
        })
        .collect()
}

pub fn oracle_cut_vertices(g: &Graph) -> VertexSet {
    g.labels().filter(|l| oracle_is_separating(g, &set(&[l]))).map(str::to_string).collect()
}

pub fn oracle_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let separating: Vec<VertexSet> =
        all_subsets(g).into_iter().filter(|s| oracle_is_separating(g, s)).collect();
    let mut minimal: Vec<VertexSet> = separating
        .iter()
        .filter(|s| !separating.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
        .cloned()
        .collect();
    minimal.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    minimal.dedup();
    minimal
}

fn induces_clique(g: &Graph, s: &VertexSet) -> bool {
    let labels: Vec<&str> = s.iter().collect();
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            if !g.adjacent(labels[i], labels[j]).unwrap() {
                return false;
            }
        }
    }
    true
}

pub fn oracle_cut_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = all_subsets(g)
        .into_iter()
        .filter(|s| induces_clique(g, s) && oracle_is_separating(g, s))
        .collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

// ------------------------------------------------------- graph enumeration

pub const LABELS: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

fn edge_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let pairs = edge_pairs(n);
    let edges: Vec<(&str, &str)> = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask & (1 << k) != 0)
        .map(|(_, &(i, j))| (LABELS[i], LABELS[j]))
        .collect();
    Graph::new(LABELS[..n].iter().copied(), edges).unwrap()
}

/// Every labeled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let bits = n * (n - 1) / 2;
    (0u32..1 << bits).map(|m| graph_from_mask(n, m)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, items, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut items, &mut out);
    out
}

/// One labeled representative per isomorphism class: the masks that are
/// minimal in their relabeling orbit.
pub fn iso_representatives(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let pairs = edge_pairs(n);
    let mut table = [[0usize; 8]; 8];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        table[i][j] = k;
        table[j][i] = k;
    }
    let bits = pairs.len();
    let mut out = Vec::new();
    'masks: for mask in 0u32..1 << bits {
        for p in &perms {
            let mut permuted = 0u32;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    permuted |= 1 << table[p[i]][p[j]];
                }
            }
            if permuted < mask {
                continue 'masks;
            }
        }
        out.push(graph_from_mask(n, mask));
    }
    out
}

pub fn connected_iso_representatives(n: usize) -> Vec<Graph> {
    iso_representatives(n).into_iter().filter(Graph::is_connected).collect()
}

/// All simple paths between two vertices, as label sequences.
pub fn simple_paths(g: &Graph, from: &str, to: &str) -> Vec<Vec<String>> {
    let labels: Vec<String> = g.labels().map(str::to_string).collect();
    let mut out = Vec::new();
    let mut path = vec![from.to_string()];
    let mut used: HashSet<String> = HashSet::from([from.to_string()]);
    fn dfs(
        g: &Graph,
        labels: &[String],
        to: &str,
        path: &mut Vec<String>,
        used: &mut HashSet<String>,
        out: &mut Vec<Vec<String>>,
    ) {
        let last = path.last().unwrap().clone();
        if last == to {
            out.push(path.clone());
            return;
        }
        for next in labels {
            if !used.contains(next) && g.adjacent(&last, next).unwrap() {
                used.insert(next.clone());
                path.push(next.clone());
                dfs(g, labels, to, path, used, out);
                path.pop();
                used.remove(next);
            }
        }
    }
    dfs(g, &labels, to, &mut path, &mut used, &mut out);
    out
}

// ------------------------------------------------------ relator-move oracle

/// One defining-relation move on a spelling: swap two adjacent commuting
/// letters, delete an adjacent cancelling pair, or insert one.
#[derive(Clone, Debug)]
pub enum RelatorMove {
    Swap(usize),
    DeletePair(usize),
    InsertPair { pos: usize, letter: Letter },
}

pub fn valid_moves(g: &Graph, letters: &[Letter], max_len: usize) -> Vec<RelatorMove> {
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        let (a, b) = (letters[i], letters[i + 1]);
        if a.vertex() != b.vertex() && g.adjacent(g.label(a.vertex()), g.label(b.vertex())).unwrap() {
            out.push(RelatorMove::Swap(i));
        }
        if a.vertex() == b.vertex() && a.is_inverse() != b.is_inverse() {
            out.push(RelatorMove::DeletePair(i));
        }
    }
    if letters.len() + 2 <= max_len {
        for pos in 0..=letters.len() {
            for v in 0..g.vertex_count() {
                for inv in [false, true] {
                    out.push(RelatorMove::InsertPair { pos, letter: Letter::new(v, inv) });
                }
            }
        }
    }
    out
}

pub fn apply_move(letters: &[Letter], mv: &RelatorMove) -> Vec<Letter> {
    let mut out = letters.to_vec();
    match *mv {
        RelatorMove::Swap(i) => out.swap(i, i + 1),
        RelatorMove::DeletePair(i) => {
            out.remove(i + 1);
            out.remove(i);
        }
        RelatorMove::InsertPair { pos, letter } => {
            out.insert(pos, letter.inverted());
            out.insert(pos, letter);
        }
    }
    out
}

/// Every spelling reachable by swaps and deletions (lengths never grow,
/// so this terminates); contains every reduced spelling of the element.
pub fn reach_set(g: &Graph, start: &[Letter]) -> HashSet<Vec<Letter>> {
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([start.to_vec()]);
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::from([start.to_vec()]);
    while let Some(cur) = queue.pop_front() {
        for mv in valid_moves(g, &cur, cur.len()) {
            if matches!(mv, RelatorMove::InsertPair { .. }) {
                continue;
            }
            let next = apply_move(&cur, &mv);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Brute-force equality: two spellings name the same element iff their
/// reach sets meet (both contain all reduced spellings of the element).
pub fn oracle_equal(g: &Graph, w1: &Word, w2: &Word) -> bool {
    let r1 = reach_set(g, w1.letters());
    if r1.contains(w2.letters()) {
        return true;
    }
    let mut seen: HashSet<Vec<Letter>> = HashSet::from([w2.letters().to_vec()]);
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::from([w2.letters().to_vec()]);
    while let Some(cur) = queue.pop_front() {
        if r1.contains(&cur) {
            return true;
        }
        for mv in valid_moves(g, &cur, cur.len()) {
            if matches!(mv, RelatorMove::InsertPair { .. }) {
                continue;
            }
            let next = apply_move(&cur, &mv);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Brute-force special-subgroup membership: some reachable spelling uses
/// only letters from `lam`.
pub fn oracle_member(g: &Graph, lam: &VertexSet, w: &Word) -> bool {
    reach_set(g, w.letters())
        .iter()
        .any(|spelling| spelling.iter().all(|l| lam.contains(g.label(l.vertex()))))
}

pub fn oracle_trivial(g: &Graph, w: &Word) -> bool {
    reach_set(g, w.letters()).contains(&Vec::new())
}
