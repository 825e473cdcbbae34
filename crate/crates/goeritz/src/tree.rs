//! Finite balls of the Bass-Serre tree of the splitting.
//!
//! The tree has black vertices for the left cosets of the disk stabilizer,
//! white vertices for the left cosets of the setwise pair stabilizer, and
//! edges for the left cosets of the edge group; the edge with representative
//! g joins the black and white vertices with the same representative. The
//! group acts by left multiplication. White vertices have valency exactly
//! two; black vertices have infinite valency, truncated here to an explicit
//! branch bound.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::algebra::{tau_power, NormalForm};
use crate::error::Error;
use crate::subgroup::{same_left_coset, SubgroupId};

/// Caps keeping ball construction at desk scale.
pub const MAX_RADIUS: usize = 6;
pub const MAX_BRANCH_BOUND: usize = 12;

/// Vertex color: black vertices are disk cosets, white vertices pair cosets.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn stabilizer(self) -> SubgroupId {
        match self {
            Color::Black => SubgroupId::StabE,
            Color::White => SubgroupId::StabPairSetwise,
        }
    }
}

/// A tree vertex: a colored coset with a chosen representative. Equality is
/// coset equality, not representative equality.
#[derive(Clone, Debug)]
pub struct TreeVertex {
    color: Color,
    rep: NormalForm,
}

impl TreeVertex {
    pub fn new(color: Color, rep: NormalForm) -> Self {
        TreeVertex { color, rep }
    }

    pub fn base(color: Color) -> Self {
        TreeVertex::new(color, NormalForm::identity())
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn rep(&self) -> &NormalForm {
        &self.rep
    }
}

impl PartialEq for TreeVertex {
    fn eq(&self, other: &Self) -> bool {
        self.color == other.color
            && same_left_coset(&self.rep, &other.rep, self.color.stabilizer())
    }
}

/// An edge: a coset of the edge group. The edge with representative g joins
/// the black vertex of g and the white vertex of g.
#[derive(Clone, Debug)]
pub struct TreeEdge {
    rep: NormalForm,
}

impl TreeEdge {
    pub fn new(rep: NormalForm) -> Self {
        TreeEdge { rep }
    }

    pub fn rep(&self) -> &NormalForm {
        &self.rep
    }

    pub fn black_endpoint(&self) -> TreeVertex {
        TreeVertex::new(Color::Black, self.rep.clone())
    }

    pub fn white_endpoint(&self) -> TreeVertex {
        TreeVertex::new(Color::White, self.rep.clone())
    }
}

impl PartialEq for TreeEdge {
    fn eq(&self, other: &Self) -> bool {
        same_left_coset(&self.rep, &other.rep, SubgroupId::StabPairPointwise)
    }
}

/// Left multiplication on vertices; preserves color and adjacency.
pub fn act(g: &NormalForm, v: &TreeVertex) -> TreeVertex {
    TreeVertex::new(v.color, g.multiply(&v.rep))
}

/// Left multiplication on edges.
pub fn act_edge(g: &NormalForm, e: &TreeEdge) -> TreeEdge {
    TreeEdge::new(g.multiply(&e.rep))
}

/// The edge-coset multipliers hanging off a black vertex, in a fixed
/// deterministic order: the identity first, then tau^m gamma for
/// m = 0, 1, -1, 2, -2, ... Distinct multipliers give distinct edge cosets.
fn black_edge_multiplier(index: usize) -> NormalForm {
    if index == 0 {
        return NormalForm::identity();
    }
    let k = index - 1;
    let m: i64 = if k == 0 {
        0
    } else if k % 2 == 1 {
        k.div_ceil(2) as i64
    } else {
        -((k / 2) as i64)
    };
    tau_power(m).multiply(&NormalForm::gamma())
}

/// A finite portion of the tree: everything within the given radius of the
/// base edge, with black branching truncated at `branch_bound`.
#[derive(Clone, Debug)]
pub struct TreeBall {
    radius: usize,
    branch_bound: usize,
    vertices: Vec<TreeVertex>,
    vertex_dist: Vec<usize>,
    /// (edge, black endpoint id, white endpoint id)
    edges: Vec<(TreeEdge, usize, usize)>,
    /// vertex id -> incident edge ids
    adjacency: Vec<Vec<usize>>,
}

/// Breadth-first closure from the base edge. White vertices contribute their
/// two incident edge cosets (multipliers identity and sigma); black vertices
/// contribute edge cosets until `branch_bound` incident edges exist.
pub fn build_ball(radius: usize, branch_bound: usize) -> Result<TreeBall, Error> {
    if radius > MAX_RADIUS {
        return Err(Error::ResourceCap(format!(
            "radius {radius} exceeds {MAX_RADIUS}"
        )));
    }
    if branch_bound == 0 || branch_bound > MAX_BRANCH_BOUND {
        return Err(Error::ResourceCap(format!(
            "branch bound {branch_bound} outside 1..={MAX_BRANCH_BOUND}"
        )));
    }

    let mut ball = TreeBall {
        radius,
        branch_bound,
        vertices: Vec::new(),
        vertex_dist: Vec::new(),
        edges: Vec::new(),
        adjacency: Vec::new(),
    };
    let base = NormalForm::identity();
    let black = ball.insert_vertex(TreeVertex::new(Color::Black, base.clone()), 0);
    let white = ball.insert_vertex(TreeVertex::new(Color::White, base.clone()), 0);
    ball.insert_edge(TreeEdge::new(base), black, white);

    let mut queue: VecDeque<usize> = VecDeque::from([black, white]);
    while let Some(vid) = queue.pop_front() {
        let dist = ball.vertex_dist[vid];
        if dist >= radius {
            continue;
        }
        let rep = ball.vertices[vid].rep.clone();
        match ball.vertices[vid].color {
            Color::White => {
                for mult in [NormalForm::identity(), NormalForm::sigma()] {
                    ball.attach_edge(vid, rep.multiply(&mult), &mut queue);
                }
            }
            Color::Black => {
                let mut index = 0;
                while ball.adjacency[vid].len() < branch_bound {
                    let mult = black_edge_multiplier(index);
                    index += 1;
                    ball.attach_edge(vid, rep.multiply(&mult), &mut queue);
                }
            }
        }
    }
    Ok(ball)
}

impl TreeBall {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn branch_bound(&self) -> usize {
        self.branch_bound
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

    /// The base edge the ball was grown from.
    pub fn center(&self) -> &TreeEdge {
        &self.edges[0].0
    }

    pub fn edges(&self) -> impl Iterator<Item = &TreeEdge> {
        self.edges.iter().map(|(e, _, _)| e)
    }

    pub fn endpoints(&self, edge_id: usize) -> (usize, usize) {
        let (_, b, w) = &self.edges[edge_id];
        (*b, *w)
    }

    pub fn vertex_dist(&self, id: usize) -> usize {
        self.vertex_dist[id]
    }

    /// Interior vertices are fully expanded; vertices on the boundary
    /// sphere are exempt from valency checks.
    pub fn is_interior(&self, id: usize) -> bool {
        self.vertex_dist[id] < self.radius
    }

    pub fn valency(&self, id: usize) -> usize {
        self.adjacency[id].len()
    }

    /// Index of the ball vertex equal (as a coset) to the given one.
    pub fn find_vertex(&self, v: &TreeVertex) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }

    fn insert_vertex(&mut self, v: TreeVertex, dist: usize) -> usize {
        self.vertices.push(v);
        self.vertex_dist.push(dist);
        self.adjacency.push(Vec::new());
        self.vertices.len() - 1
    }

    fn insert_edge(&mut self, e: TreeEdge, black: usize, white: usize) -> usize {
        self.edges.push((e, black, white));
        let id = self.edges.len() - 1;
        self.adjacency[black].push(id);
        self.adjacency[white].push(id);
        id
    }

    /// Add the edge coset with representative `rep` if it is new, hanging
    /// any new endpoint one step further out than the expanding vertex.
    fn attach_edge(&mut self, from: usize, rep: NormalForm, queue: &mut VecDeque<usize>) {
        let edge = TreeEdge::new(rep);
        if self.edges.iter().any(|(e, _, _)| *e == edge) {
            return;
        }
        let dist = self.vertex_dist[from] + 1;
        let mut locate = |ball: &mut TreeBall, v: TreeVertex| match ball.find_vertex(&v) {
            Some(id) => id,
            None => {
                let id = ball.insert_vertex(v, dist);
                queue.push_back(id);
                id
            }
        };
        let black = locate(self, edge.black_endpoint());
        let white = locate(self, edge.white_endpoint());
        self.insert_edge(edge, black, white);
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &eid in &self.adjacency[v] {
                let (b, w) = self.endpoints(eid);
                let other = if b == v { w } else { b };
                if !seen[other] {
                    seen[other] = true;
                    count += 1;
                    queue.push_back(other);
                }
            }
        }
        count == self.vertices.len()
    }

    /// A connected graph is a tree iff it has one edge fewer than vertices.
    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// Every edge joins a black vertex to a white vertex.
    pub fn is_bipartite(&self) -> bool {
        self.edges.iter().all(|(_, b, w)| {
            self.vertices[*b].color == Color::Black && self.vertices[*w].color == Color::White
        })
    }

    /// Edge-count distance between two ball vertices; the geodesic of a
    /// tree between vertices of a connected subgraph stays inside it.
    pub fn distance(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return Some(0);
        }
        let mut dist = vec![usize::MAX; self.vertices.len()];
        dist[a] = 0;
        let mut queue = VecDeque::from([a]);
        while let Some(v) = queue.pop_front() {
            for &eid in &self.adjacency[v] {
                let (x, y) = self.endpoints(eid);
                let other = if x == v { y } else { x };
                if dist[other] == usize::MAX {
                    dist[other] = dist[v] + 1;
                    if other == b {
                        return Some(dist[other]);
                    }
                    queue.push_back(other);
                }
            }
        }
        None
    }

    /// Transitivity check: the inverse of each representative carries its
    /// vertex (or edge) back to the base one, so each color forms a single
    /// orbit and there is a single edge orbit.
    pub fn orbit_and_quotient_check(&self) -> OrbitReport {
        let base_black = TreeVertex::base(Color::Black);
        let base_white = TreeVertex::base(Color::White);
        let base_edge = TreeEdge::new(NormalForm::identity());
        let mut report = OrbitReport {
            black_vertices: 0,
            white_vertices: 0,
            edges: self.edges.len(),
            black_orbits: 1,
            white_orbits: 1,
            edge_orbits: 1,
            all_translate_to_base: true,
        };
        for v in &self.vertices {
            let translated = act(&v.rep.inverse(), v);
            match v.color {
                Color::Black => {
                    report.black_vertices += 1;
                    if translated != base_black {
                        report.all_translate_to_base = false;
                    }
                }
                Color::White => {
                    report.white_vertices += 1;
                    if translated != base_white {
                        report.all_translate_to_base = false;
                    }
                }
            }
        }
        for (e, _, _) in &self.edges {
            if act_edge(&e.rep.inverse(), e) != base_edge {
                report.all_translate_to_base = false;
            }
        }
        report
    }

    /// Deterministic DOT rendering: black vertices as filled circles, white
    /// as open circles, node ids derived from the serialized coset
    /// representatives.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("graph goeritz_ball {\n");
        out.push_str("  node [shape=circle label=\"\"];\n");
        for v in &self.vertices {
            match v.color {
                Color::Black => {
                    let _ = writeln!(
                        out,
                        "  \"B {}\" [style=filled fillcolor=black];",
                        v.rep
                    );
                }
                Color::White => {
                    let _ = writeln!(
                        out,
                        "  \"W {}\" [style=filled fillcolor=white];",
                        v.rep
                    );
                }
            }
        }
        for (_, b, w) in &self.edges {
            let _ = writeln!(
                out,
                "  \"B {}\" -- \"W {}\";",
                self.vertices[*b].rep, self.vertices[*w].rep
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Result of the orbit and quotient verification on a ball.
#[derive(Clone, Copy, Debug)]
pub struct OrbitReport {
    pub black_vertices: usize,
    pub white_vertices: usize,
    pub edges: usize,
    pub black_orbits: usize,
    pub white_orbits: usize,
    pub edge_orbits: usize,
    pub all_translate_to_base: bool,
}

impl OrbitReport {
    pub fn is_single_edge_quotient(&self) -> bool {
        self.all_translate_to_base
            && self.black_orbits == 1
            && self.white_orbits == 1
            && self.edge_orbits == 1
    }
}
