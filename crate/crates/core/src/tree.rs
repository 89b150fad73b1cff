//! Exact finite pieces of the tree acted on by an amalgam splitting.
//!
//! Tree vertices are cosets of the two vertex groups, edges are cosets of
//! the edge group. A ball collects every edge coset that has a
//! representative of normal-form length at most `radius` (a word-length
//! truncation: metric balls are infinite whenever the edge group has
//! infinite index). All coset questions inside a ball are decided exactly
//! through word-problem membership, never approximated.
//!
//! Coset representatives are canonicalized by stripping the movable tail:
//! repeatedly delete a letter of the coset's subgroup that commutes past
//! everything after it, then re-canonicalize. This yields the shortest
//! representative and makes deduplication a hash lookup; equality is still
//! definable through the exact membership test, which the tests exercise.

use crate::graph::Graph;
use crate::splittings::{AmalgamSplitting, Classification, Side, SideChoice, SplitError};
use crate::words::{
    invert_letters, nf_letters, support_mask, validate_letters, Letter, Word, WordError,
};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

/// Visited-words cap is this multiple of the vertex budget; it bounds the
/// enumeration even when almost all words fall into few cosets.
const VISIT_FACTOR: usize = 64;

#[derive(Debug, Error)]
pub enum TreeError {
    #[error("vertex budget exhausted: more than {budget} cosets found")]
    Budget { budget: usize },
    #[error("enumeration budget exhausted after visiting {visited} words")]
    EnumerationBudget { visited: usize },
    #[error("vertex is not in the ball")]
    VertexNotInBall,
    #[error("no vertex of the ball is mapped back into the ball")]
    NoApplicableVertex,
    #[error("the element is elliptic, it has no axis")]
    EllipticHasNoAxis,
    #[error("the fixed sets meet: their segments on the connecting path overlap")]
    FixedSetsOverlap,
    #[error("no fixed vertex of `{0}` lies inside the ball")]
    FixedSetMissing(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A coset of one of the two vertex groups, named by its canonical
/// (shortest, lexicographically least) representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeVertex {
    side: Side,
    rep: Vec<Letter>,
}

impl TreeVertex {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn rep_letters(&self) -> &[Letter] {
        &self.rep
    }

    pub fn rep_word(&self) -> Word {
        Word::from_letters(self.rep.clone())
    }

    pub fn display(&self, g: &Graph) -> String {
        format!("{}*A({})", crate::words::display_letters(&self.rep, g), self.side.number())
    }
}

/// A coset of the edge group, named by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeEdge {
    rep: Vec<Letter>,
}

impl TreeEdge {
    pub fn rep_letters(&self) -> &[Letter] {
        &self.rep
    }

    pub fn rep_word(&self) -> Word {
        Word::from_letters(self.rep.clone())
    }

    pub fn display(&self, g: &Graph) -> String {
        crate::words::display_letters(&self.rep, g)
    }
}

/// Delete subgroup letters that commute past the whole suffix, then
/// re-canonicalize: the canonical representative of `letters * <mask>`.
fn coset_rep(g: &Graph, letters: Vec<Letter>, subgroup_mask: u64) -> Vec<Letter> {
    let mut letters = nf_letters(g, letters);
    loop {
        let mut blockers: u64 = 0;
        let mut found = None;
        for i in (0..letters.len()).rev() {
            let v = letters[i].vertex();
            if subgroup_mask & (1 << v) != 0 && blockers & !g.adj_mask(v) == 0 {
                found = Some(i);
                break;
            }
            blockers |= 1 << v;
        }
        match found {
            Some(i) => {
                letters.remove(i);
            }
            None => break,
        }
    }
    nf_letters(g, letters)
}

/// The vertex coset reached from the base vertex of `side` by `letters`.
pub(crate) fn vertex_from_letters(s: &AmalgamSplitting, letters: Vec<Letter>, side: Side) -> TreeVertex {
    TreeVertex { side, rep: coset_rep(s.ambient(), letters, s.side_mask(side)) }
}

pub(crate) fn edge_from_letters(s: &AmalgamSplitting, letters: Vec<Letter>) -> TreeEdge {
    TreeEdge { rep: coset_rep(s.ambient(), letters, s.lam_mask()) }
}

/// Coset vertex `w * A(side)`.
pub fn coset_vertex(s: &AmalgamSplitting, w: &Word, side: Side) -> Result<TreeVertex, WordError> {
    validate_letters(s.ambient(), w.letters())?;
    Ok(vertex_from_letters(s, w.letters().to_vec(), side))
}

/// Coset edge `w * A(lambda)`.
pub fn coset_edge(s: &AmalgamSplitting, w: &Word) -> Result<TreeEdge, WordError> {
    validate_letters(s.ambient(), w.letters())?;
    Ok(edge_from_letters(s, w.letters().to_vec()))
}

/// The action of `g` on a vertex coset.
pub fn act(s: &AmalgamSplitting, g: &Word, v: &TreeVertex) -> Result<TreeVertex, WordError> {
    validate_letters(s.ambient(), g.letters())?;
    let mut letters = g.letters().to_vec();
    letters.extend_from_slice(&v.rep);
    Ok(vertex_from_letters(s, letters, v.side))
}

pub fn act_edge(s: &AmalgamSplitting, g: &Word, e: &TreeEdge) -> Result<TreeEdge, WordError> {
    validate_letters(s.ambient(), g.letters())?;
    let mut letters = g.letters().to_vec();
    letters.extend_from_slice(&e.rep);
    Ok(edge_from_letters(s, letters))
}

fn conjugate_into(rep: &[Letter], g: &[Letter]) -> Vec<Letter> {
    let mut out = invert_letters(rep);
    out.extend_from_slice(g);
    out.extend_from_slice(rep);
    out
}

/// Exact test: does `g` fix the vertex coset? True iff the conjugate of
/// `g` by the representative is supported on the vertex's side.
pub fn vertex_fixed_by(s: &AmalgamSplitting, g: &Word, v: &TreeVertex) -> Result<bool, WordError> {
    validate_letters(s.ambient(), g.letters())?;
    let conj = conjugate_into(&v.rep, g.letters());
    Ok(support_mask(s.ambient(), &conj) & !s.side_mask(v.side) == 0)
}

/// Exact test: does `g` stabilize the edge coset? True iff the conjugate
/// of `g` by the representative lies in the edge group.
pub fn fixes_edge(s: &AmalgamSplitting, g: &Word, e: &TreeEdge) -> Result<bool, WordError> {
    validate_letters(s.ambient(), g.letters())?;
    let conj = conjugate_into(&e.rep, g.letters());
    Ok(support_mask(s.ambient(), &conj) & !s.lam_mask() == 0)
}

/// Tree distance between two vertex cosets, computed algebraically from
/// the syllable decomposition of the difference; no ball required.
pub fn tree_distance(s: &AmalgamSplitting, x: &TreeVertex, y: &TreeVertex) -> usize {
    let mut delta = invert_letters(&x.rep);
    delta.extend_from_slice(&y.rep);
    let delta = nf_letters(s.ambient(), delta);
    let mut d = 0usize;
    let mut cur = x.side;
    for (choice, _) in s.decompose_letters(&delta) {
        match choice {
            SideChoice::Either => {}
            SideChoice::One => {
                if cur != Side::One {
                    d += 1;
                    cur = Side::One;
                }
            }
            SideChoice::Two => {
                if cur != Side::Two {
                    d += 1;
                    cur = Side::Two;
                }
            }
        }
    }
    if cur != y.side {
        d += 1;
    }
    d
}

/// A finite window onto the tree: every edge coset with a representative
/// of normal-form length at most the radius, with its endpoints, rooted
/// for distance queries. Within the window it is a genuine subtree, so
/// paths inside it are true geodesics.
#[derive(Clone, Debug)]
pub struct TreeBall {
    splitting: AmalgamSplitting,
    radius: usize,
    vertices: Vec<TreeVertex>,
    edges: Vec<TreeEdge>,
    endpoints: Vec<[usize; 2]>,
    incident: Vec<Vec<usize>>,
    vertex_index: HashMap<TreeVertex, usize>,
    edge_index: HashMap<Vec<Letter>, usize>,
    parent: Vec<usize>,
    parent_edge: Vec<usize>,
    depth: Vec<u32>,
}

const NO_PARENT: usize = usize::MAX;

/// Enumerate every canonical normal form of length at most `radius` (the
/// canonical forms are closed under prefixes, so extension by one letter
/// with a canonicity check visits each exactly once), project each onto
/// its edge coset, and assemble the ball.
pub fn build_ball(s: &AmalgamSplitting, radius: usize, vertex_budget: usize) -> Result<TreeBall, TreeError> {
    let g = s.ambient().clone();
    let all_letters: Vec<Letter> = (0..g.vertex_count())
        .flat_map(|i| [Letter::new(i, false), Letter::new(i, true)])
        .collect();

    let mut vertices: Vec<TreeVertex> = Vec::new();
    let mut edges: Vec<TreeEdge> = Vec::new();
    let mut endpoints: Vec<[usize; 2]> = Vec::new();
    let mut vertex_index: HashMap<TreeVertex, usize> = HashMap::new();
    let mut edge_index: HashMap<Vec<Letter>, usize> = HashMap::new();

    let visit_cap = vertex_budget.saturating_mul(VISIT_FACTOR).max(1 << 20);
    let mut visited = 0usize;

    let mut register = |letters: &[Letter]| -> Result<(), TreeError> {
        let e = edge_from_letters(s, letters.to_vec());
        if edge_index.contains_key(&e.rep) {
            return Ok(());
        }
        let mut ends = [0usize; 2];
        for (k, side) in [Side::One, Side::Two].into_iter().enumerate() {
            let v = vertex_from_letters(s, letters.to_vec(), side);
            let id = match vertex_index.get(&v) {
                Some(&id) => id,
                None => {
                    let id = vertices.len();
                    if id >= vertex_budget {
                        return Err(TreeError::Budget { budget: vertex_budget });
                    }
                    vertices.push(v.clone());
                    vertex_index.insert(v, id);
                    id
                }
            };
            ends[k] = id;
        }
        edge_index.insert(e.rep.clone(), edges.len());
        edges.push(e);
        endpoints.push(ends);
        Ok(())
    };

    register(&[])?;
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(word) = stack.pop() {
        if word.len() == radius {
            continue;
        }
        for &l in &all_letters {
            visited += 1;
            if visited > visit_cap {
                return Err(TreeError::EnumerationBudget { visited });
            }
            let mut cand = word.clone();
            cand.push(l);
            let nf = nf_letters(&g, cand.clone());
            if nf.len() == cand.len() && nf == cand {
                register(&cand)?;
                stack.push(cand);
            }
        }
    }

    // Restrict to the connected component of the base edge, then sort
    // everything into canonical order and re-index.
    let mut incident_tmp: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    for (e, ends) in endpoints.iter().enumerate() {
        incident_tmp[ends[0]].push(e);
        incident_tmp[ends[1]].push(e);
    }
    let base_edge = edge_index[&Vec::new()];
    let mut edge_seen = vec![false; edges.len()];
    let mut vertex_seen = vec![false; vertices.len()];
    let mut queue = vec![base_edge];
    edge_seen[base_edge] = true;
    while let Some(e) = queue.pop() {
        for &v in &endpoints[e] {
            if !vertex_seen[v] {
                vertex_seen[v] = true;
                for &e2 in &incident_tmp[v] {
                    if !edge_seen[e2] {
                        edge_seen[e2] = true;
                        queue.push(e2);
                    }
                }
            }
        }
    }

    let rep_key = |rep: &[Letter]| (rep.len(), rep.to_vec());
    let mut vertex_order: Vec<usize> = (0..vertices.len()).filter(|&v| vertex_seen[v]).collect();
    vertex_order.sort_by_key(|&v| (rep_key(&vertices[v].rep), vertices[v].side.number()));
    let mut edge_order: Vec<usize> = (0..edges.len()).filter(|&e| edge_seen[e]).collect();
    edge_order.sort_by_key(|&e| rep_key(&edges[e].rep));

    let mut vertex_remap = vec![usize::MAX; vertices.len()];
    for (new, &old) in vertex_order.iter().enumerate() {
        vertex_remap[old] = new;
    }
    let new_vertices: Vec<TreeVertex> = vertex_order.iter().map(|&v| vertices[v].clone()).collect();
    let new_edges: Vec<TreeEdge> = edge_order.iter().map(|&e| edges[e].clone()).collect();
    let new_endpoints: Vec<[usize; 2]> =
        edge_order.iter().map(|&e| [vertex_remap[endpoints[e][0]], vertex_remap[endpoints[e][1]]]).collect();

    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); new_vertices.len()];
    for (e, ends) in new_endpoints.iter().enumerate() {
        incident[ends[0]].push(e);
        incident[ends[1]].push(e);
    }

    let vertex_index: HashMap<TreeVertex, usize> =
        new_vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let edge_index: HashMap<Vec<Letter>, usize> =
        new_edges.iter().enumerate().map(|(i, e)| (e.rep.clone(), i)).collect();

    // Root at the base side-1 vertex and orient every edge towards it.
    let mut parent = vec![NO_PARENT; new_vertices.len()];
    let mut parent_edge = vec![NO_PARENT; new_vertices.len()];
    let mut depth = vec![0u32; new_vertices.len()];
    let root = 0usize;
    let mut seen = vec![false; new_vertices.len()];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &e in &incident[v] {
            let [a, b] = new_endpoints[e];
            let w = if a == v { b } else { a };
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                parent_edge[w] = e;
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(TreeError::Internal("ball is not connected after restriction".into()));
    }
    if new_vertices.len() != new_edges.len() + 1 {
        return Err(TreeError::Internal(format!(
            "ball is not a tree: {} vertices, {} edges",
            new_vertices.len(),
            new_edges.len()
        )));
    }

    Ok(TreeBall {
        splitting: s.clone(),
        radius,
        vertices: new_vertices,
        edges: new_edges,
        endpoints: new_endpoints,
        incident,
        vertex_index,
        edge_index,
        parent,
        parent_edge,
        depth,
    })
}

impl TreeBall {
    pub fn splitting(&self) -> &AmalgamSplitting {
        &self.splitting
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[TreeVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn vertex(&self, id: usize) -> &TreeVertex {
        &self.vertices[id]
    }

    pub fn edge(&self, id: usize) -> &TreeEdge {
        &self.edges[id]
    }

    pub fn endpoints(&self, edge: usize) -> [usize; 2] {
        self.endpoints[edge]
    }

    pub fn incident(&self, vertex: usize) -> &[usize] {
        &self.incident[vertex]
    }

    /// The identity-coset vertex on the given side.
    pub fn base_vertex(&self, side: Side) -> usize {
        self.vertex_index[&TreeVertex { side, rep: Vec::new() }]
    }

    /// The identity-coset edge.
    pub fn base_edge(&self) -> usize {
        self.edge_index[&Vec::new()]
    }

    pub fn locate_vertex(&self, v: &TreeVertex) -> Option<usize> {
        self.vertex_index.get(v).copied()
    }

    pub fn locate_edge(&self, e: &TreeEdge) -> Option<usize> {
        self.edge_index.get(&e.rep).copied()
    }

    pub fn distance(&self, a: usize, b: usize) -> usize {
        let (mut x, mut y) = (a, b);
        let mut d = 0;
        while self.depth[x] > self.depth[y] {
            x = self.parent[x];
            d += 1;
        }
        while self.depth[y] > self.depth[x] {
            y = self.parent[y];
            d += 1;
        }
        while x != y {
            x = self.parent[x];
            y = self.parent[y];
            d += 2;
        }
        d
    }

    /// The unique path between two ball vertices, as vertex ids. Inside the
    /// ball this is the true tree geodesic.
    pub fn geodesic(&self, a: usize, b: usize) -> Vec<usize> {
        let (mut x, mut y) = (a, b);
        let mut head = vec![x];
        let mut tail = vec![y];
        while self.depth[x] > self.depth[y] {
            x = self.parent[x];
            head.push(x);
        }
        while self.depth[y] > self.depth[x] {
            y = self.parent[y];
            tail.push(y);
        }
        while x != y {
            x = self.parent[x];
            head.push(x);
            y = self.parent[y];
            tail.push(y);
        }
        tail.pop();
        tail.reverse();
        head.extend(tail);
        head
    }

    /// Edge ids along the geodesic, in path order.
    pub fn path_edges(&self, a: usize, b: usize) -> Vec<usize> {
        let path = self.geodesic(a, b);
        path.windows(2).map(|pair| self.connecting_edge(pair[0], pair[1]).expect("adjacent on path")).collect()
    }

    /// The edge joining two adjacent ball vertices.
    pub fn connecting_edge(&self, a: usize, b: usize) -> Option<usize> {
        if self.parent[a] == b {
            return Some(self.parent_edge[a]);
        }
        if self.parent[b] == a {
            return Some(self.parent_edge[b]);
        }
        None
    }

    /// Exact coset equality between two stored vertices through the
    /// membership test, independently of representative canonicalization.
    pub fn same_vertex_coset(&self, a: usize, b: usize) -> Result<bool, WordError> {
        let (va, vb) = (&self.vertices[a], &self.vertices[b]);
        if va.side != vb.side {
            return Ok(false);
        }
        let mut diff = invert_letters(&va.rep);
        diff.extend_from_slice(&vb.rep);
        Ok(support_mask(self.splitting.ambient(), &diff) & !self.splitting.side_mask(va.side) == 0)
    }

    pub fn export(&self) -> BallExport {
        let g = self.splitting.ambient();
        BallExport {
            radius: self.radius,
            vertex_count: self.vertices.len(),
            edge_count: self.edges.len(),
            vertices: self
                .vertices
                .iter()
                .map(|v| ExportVertex {
                    side: v.side.number(),
                    rep: crate::words::display_letters(&v.rep, g),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| ExportEdge { rep: e.display(g), endpoints: self.endpoints[i] })
                .collect(),
            adjacency: self.incident.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExportVertex {
    pub side: u8,
    pub rep: String,
}

#[derive(Debug, Serialize)]
pub struct ExportEdge {
    pub rep: String,
    pub endpoints: [usize; 2],
}

#[derive(Debug, Serialize)]
pub struct BallExport {
    pub radius: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub vertices: Vec<ExportVertex>,
    pub edges: Vec<ExportEdge>,
    pub adjacency: Vec<Vec<usize>>,
}

/// Ball vertices fixed by `g`, decided exactly; ascending ids.
pub fn fixed_vertices(s: &AmalgamSplitting, g: &Word, ball: &TreeBall) -> Result<Vec<usize>, WordError> {
    validate_letters(s.ambient(), g.letters())?;
    let mut out = Vec::new();
    for (id, v) in ball.vertices.iter().enumerate() {
        if vertex_fixed_by(s, g, v)? {
            out.push(id);
        }
    }
    Ok(out)
}

/// Certificate produced by [`bridge_edge`]: the chosen fixed vertices, the
/// path between them, and where each fixed set stops along it. Disjoint
/// segments prove the fixed sets are disjoint in the whole tree, because
/// any common point would project to a common path vertex.
#[derive(Clone, Debug)]
pub struct BridgeCertificate {
    pub path: Vec<usize>,
    /// Last path index still fixed by the first element.
    pub first_segment_end: usize,
    /// First path index fixed by the second element.
    pub second_segment_start: usize,
    pub edge: usize,
}

/// An edge on the path between the fixed sets of two elliptic elements,
/// with a global disjointness certificate; errors when the segments
/// overlap (the fixed sets meet) or a fixed set misses the ball.
pub fn bridge_edge(
    s: &AmalgamSplitting,
    u: &Word,
    v: &Word,
    ball: &TreeBall,
) -> Result<BridgeCertificate, TreeError> {
    let g = s.ambient();
    let fix_u = fixed_vertices(s, u, ball)?;
    let fix_v = fixed_vertices(s, v, ball)?;
    let x = *fix_u.first().ok_or_else(|| TreeError::FixedSetMissing(u.display(g)))?;
    let y = *fix_v.first().ok_or_else(|| TreeError::FixedSetMissing(v.display(g)))?;
    let path = ball.geodesic(x, y);
    let u_flags: Vec<bool> =
        path.iter().map(|&p| vertex_fixed_by(s, u, &ball.vertices[p])).collect::<Result<_, _>>()?;
    let v_flags: Vec<bool> =
        path.iter().map(|&p| vertex_fixed_by(s, v, &ball.vertices[p])).collect::<Result<_, _>>()?;
    let first_end = u_flags.iter().take_while(|&&f| f).count() - 1;
    let second_start = path.len() - v_flags.iter().rev().take_while(|&&f| f).count();
    if u_flags[first_end + 1..].iter().any(|&f| f) || v_flags[..second_start].iter().any(|&f| f) {
        return Err(TreeError::Internal("fixed set meets the path in a non-contiguous segment".into()));
    }
    if first_end >= second_start {
        return Err(TreeError::FixedSetsOverlap);
    }
    let edge = ball
        .connecting_edge(path[first_end], path[first_end + 1])
        .ok_or_else(|| TreeError::Internal("path vertices are not adjacent".into()))?;
    Ok(BridgeCertificate { path, first_segment_end: first_end, second_segment_start: second_start, edge })
}

/// Minimum of `d(v, g v)` over ball vertices whose image stays in the
/// ball. For balls large relative to `g` this equals the translation
/// length (zero for elliptic elements).
pub fn displacement(s: &AmalgamSplitting, g: &Word, ball: &TreeBall) -> Result<usize, TreeError> {
    validate_letters(s.ambient(), g.letters())?;
    let mut best: Option<usize> = None;
    for (id, v) in ball.vertices.iter().enumerate() {
        let image = act(s, g, v)?;
        if let Some(img_id) = ball.locate_vertex(&image) {
            let d = ball.distance(id, img_id);
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best.ok_or(TreeError::NoApplicableVertex)
}

/// Ball vertices realizing the minimal displacement of a hyperbolic
/// element: exactly the axis vertices visible in the ball (testable where
/// the image also lies in the ball).
pub fn axis_vertices(s: &AmalgamSplitting, g: &Word, ball: &TreeBall) -> Result<Vec<usize>, TreeError> {
    let cls = s.classify(g)?;
    if cls.is_elliptic() {
        return Err(TreeError::EllipticHasNoAxis);
    }
    let len = cls.translation_length();
    let mut out = Vec::new();
    for (id, v) in ball.vertices.iter().enumerate() {
        let image = act(s, g, v)?;
        if let Some(img_id) = ball.locate_vertex(&image) {
            if ball.distance(id, img_id) == len {
                out.push(id);
            }
        }
    }
    Ok(out)
}

/// A consecutive run of axis vertices and edges of a hyperbolic element,
/// spanning `periods` fundamental domains on both sides of the base
/// point. Built algebraically from the cyclically reduced core, so no
/// ball is required; every membership test on it stays exact.
#[derive(Clone, Debug)]
pub struct AxisSegment {
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<TreeEdge>,
}

pub fn axis_segment(
    s: &AmalgamSplitting,
    cls: &Classification,
    periods: usize,
) -> Result<AxisSegment, TreeError> {
    let Classification::Hyperbolic { conjugator, core, .. } = cls else {
        return Err(TreeError::EllipticHasNoAxis);
    };
    let g = s.ambient();
    let syls = s.decompose_letters(core.letters());
    let sides: Vec<Side> = syls
        .iter()
        .map(|(choice, _)| match choice {
            SideChoice::One => Ok(Side::One),
            SideChoice::Two => Ok(Side::Two),
            SideChoice::Either => {
                Err(TreeError::Internal("cyclically reduced core has an edge-group syllable".into()))
            }
        })
        .collect::<Result<_, _>>()?;
    // Prefix products of the core's syllables.
    let mut prefixes: Vec<Vec<Letter>> = vec![Vec::new()];
    for (_, letters) in &syls {
        let mut next = prefixes.last().unwrap().clone();
        next.extend_from_slice(letters);
        prefixes.push(next);
    }
    let core_word = Word::from_letters(core.letters().to_vec());
    let n = syls.len();
    let span = periods as i64;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for k in -span..=span {
        let base = conjugator.concat(&core_word.pow(k));
        if k < span {
            for j in 0..n {
                let mut letters = base.letters().to_vec();
                letters.extend_from_slice(&prefixes[j]);
                vertices.push(vertex_from_letters(s, letters.clone(), sides[j]));
                letters.extend_from_slice(&syls[j].1);
                edges.push(edge_from_letters(s, nf_letters(g, letters)));
            }
        } else {
            vertices.push(vertex_from_letters(s, base.letters().to_vec(), sides[0]));
        }
    }
    Ok(AxisSegment { vertices, edges })
}
