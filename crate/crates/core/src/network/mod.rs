//! Electrical networks in a disk: boundary vertices `1..=n+1` in circular
//! order, opaque interior vertex ids, and positive edge conductances.

mod json;
mod moves;

pub use json::NetworkJson;
pub use moves::{applicable_moves, apply_local_move, LocalMove, MoveKind};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{schur_complement, Mat, Rat};

/// A vertex of a network.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    /// Boundary vertex, labelled `1..=n+1`.
    Boundary(usize),
    Interior(String),
}

impl Node {
    pub fn interior(id: &str) -> Node {
        Node::Interior(id.to_string())
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, Node::Boundary(_))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Boundary(k) => write!(f, "{k}"),
            Node::Interior(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: Node,
    pub v: Node,
    pub weight: Rat,
}

impl Edge {
    pub fn new(u: Node, v: Node, weight: Rat) -> Self {
        Edge { u, v, weight }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, node: &Node) -> bool {
        &self.u == node || &self.v == node
    }

    /// The endpoint opposite `node`, assuming the edge touches it.
    pub fn other(&self, node: &Node) -> &Node {
        if &self.u == node {
            &self.v
        } else {
            &self.u
        }
    }

    fn key(&self) -> (Node, Node, Rat) {
        let (a, b) = if self.u <= self.v {
            (&self.u, &self.v)
        } else {
            (&self.v, &self.u)
        };
        (a.clone(), b.clone(), self.weight.clone())
    }
}

/// Weighted graph with ordered boundary vertices.
///
/// Planarity is not checked; every formula here is graph-theoretic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    boundary: usize,
    interior: Vec<String>,
    edges: Vec<Edge>,
}

impl Network {
    /// The empty network `N₀` on `boundary` boundary vertices.
    pub fn empty(boundary: usize) -> Self {
        Network {
            boundary,
            interior: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn new(boundary: usize, interior: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        let mut net = Network {
            boundary,
            interior: Vec::new(),
            edges: Vec::new(),
        };
        for id in interior {
            net.add_interior(&id)?;
        }
        for e in edges {
            net.add_edge(e.u, e.v, e.weight)?;
        }
        Ok(net)
    }

    pub fn boundary_count(&self) -> usize {
        self.boundary
    }

    pub fn interior(&self) -> &[String] {
        &self.interior
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.boundary + self.interior.len()
    }

    pub fn contains(&self, node: &Node) -> bool {
        match node {
            Node::Boundary(k) => (1..=self.boundary).contains(k),
            Node::Interior(id) => self.interior.iter().any(|x| x == id),
        }
    }

    /// Row/column of `node` in the Kirchhoff matrix: boundary first in
    /// label order, then interior in insertion order.
    pub fn vertex_index(&self, node: &Node) -> Option<usize> {
        match node {
            Node::Boundary(k) if (1..=self.boundary).contains(k) => Some(k - 1),
            Node::Boundary(_) => None,
            Node::Interior(id) => self
                .interior
                .iter()
                .position(|x| x == id)
                .map(|p| self.boundary + p),
        }
    }

    pub fn add_interior(&mut self, id: &str) -> Result<()> {
        if id.is_empty() {
            return Err(Error::Validation("empty interior vertex id".into()));
        }
        if let Ok(k) = id.parse::<usize>() {
            if (1..=self.boundary).contains(&k) {
                return Err(Error::Validation(format!(
                    "interior id {id:?} collides with a boundary label"
                )));
            }
        }
        if self.interior.iter().any(|x| x == id) {
            return Err(Error::Validation(format!("duplicate interior id {id:?}")));
        }
        self.interior.push(id.to_string());
        Ok(())
    }

    pub fn add_edge(&mut self, u: Node, v: Node, weight: Rat) -> Result<()> {
        if !weight.is_positive() {
            return Err(Error::Validation(format!(
                "edge {u}—{v} has non-positive weight {weight}"
            )));
        }
        for x in [&u, &v] {
            if !self.contains(x) {
                return Err(Error::Validation(format!(
                    "edge endpoint {x} is not a vertex"
                )));
            }
        }
        self.edges.push(Edge { u, v, weight });
        Ok(())
    }

    /// Edges incident to `node`, as indices; a loop is listed once.
    pub fn incident(&self, node: &Node) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.touches(node))
            .map(|(i, _)| i)
            .collect()
    }

    /// Number of edge ends at `node` (a loop counts twice).
    pub fn degree(&self, node: &Node) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(&e.u == node) + usize::from(&e.v == node))
            .sum()
    }

    /// A new interior id of the form `{prefix}{k}` not already in use.
    pub fn fresh_id(&self, prefix: &str) -> String {
        (0..)
            .map(|k| format!("{prefix}{k}"))
            .find(|id| {
                !self.interior.contains(id)
                    && id
                        .parse::<usize>()
                        .map_or(true, |k| !(1..=self.boundary).contains(&k))
            })
            .expect("unbounded search")
    }

    pub(crate) fn edges_mut(&mut self) -> &mut Vec<Edge> {
        &mut self.edges
    }

    pub(crate) fn remove_interior(&mut self, id: &str) {
        self.interior.retain(|x| x != id);
    }

    /// Renames boundary vertex `k` to the interior id `id` in every edge.
    pub(crate) fn demote_boundary(&mut self, k: usize, id: &str) {
        let from = Node::Boundary(k);
        let to = Node::interior(id);
        for e in &mut self.edges {
            if e.u == from {
                e.u = to.clone();
            }
            if e.v == from {
                e.v = to.clone();
            }
        }
        self.interior.push(id.to_string());
    }

    /// Edge multiset in a canonical order, for structural comparison.
    pub fn canonical_edges(&self) -> Vec<(Node, Node, Rat)> {
        let mut keys: Vec<_> = self.edges.iter().map(Edge::key).collect();
        keys.sort();
        keys
    }

    pub fn interior_set(&self) -> BTreeSet<&str> {
        self.interior.iter().map(String::as_str).collect()
    }
}

/// Kirchhoff matrix over all vertices, boundary first then interior.
///
/// A self-loop carries no current, so it contributes nothing; every row
/// sums to zero.
pub fn kirchhoff(net: &Network) -> Mat {
    let mut k = Mat::zeros(net.vertex_count(), net.vertex_count());
    for e in net.edges() {
        if e.is_loop() {
            continue;
        }
        let i = net.vertex_index(&e.u).expect("validated endpoint");
        let j = net.vertex_index(&e.v).expect("validated endpoint");
        k[(i, j)] -= &e.weight;
        k[(j, i)] -= &e.weight;
        k[(i, i)] += &e.weight;
        k[(j, j)] += &e.weight;
    }
    k
}

/// Response matrix `L(N) = K / K_I`.
pub fn response(net: &Network) -> Result<ResponseMatrix> {
    let k = kirchhoff(net);
    let interior: Vec<usize> = (net.boundary_count()..net.vertex_count()).collect();
    Ok(ResponseMatrix(schur_complement(&k, &interior)?))
}

/// Symmetric boundary-indexed matrix with zero row sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResponseMatrix(Mat);

impl ResponseMatrix {
    /// `L₀`, the response of the empty network.
    pub fn zero(size: usize) -> Self {
        ResponseMatrix(Mat::zeros(size, size))
    }

    pub fn new(m: Mat) -> Result<Self> {
        if !m.is_symmetric() {
            return Err(Error::Validation(
                "response matrix must be symmetric".into(),
            ));
        }
        if (0..m.rows()).any(|i| !m.row(i).iter().sum::<Rat>().is_zero()) {
            return Err(Error::Validation(
                "response matrix rows must sum to zero".into(),
            ));
        }
        Ok(ResponseMatrix(m))
    }

    /// Wraps a matrix without checking the invariants.
    pub fn new_unchecked(m: Mat) -> Self {
        ResponseMatrix(m)
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn mat(&self) -> &Mat {
        &self.0
    }

    pub fn into_mat(self) -> Mat {
        self.0
    }

    /// Entry `x_{ij}` with 1-based indices.
    pub fn x(&self, i: usize, j: usize) -> &Rat {
        &self.0[(i - 1, j - 1)]
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl Serialize for ResponseMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ResponseMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = Mat::deserialize(d)?;
        ResponseMatrix::new(m).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn b(k: usize) -> Node {
        Node::Boundary(k)
    }

    fn star(a: Rat, bb: Rat, c: Rat) -> Network {
        Network::new(
            3,
            vec!["v".into()],
            vec![
                Edge::new(b(1), Node::interior("v"), a),
                Edge::new(b(2), Node::interior("v"), bb),
                Edge::new(b(3), Node::interior("v"), c),
            ],
        )
        .unwrap()
    }

    #[test]
    fn kirchhoff_single_edge() {
        let w = q(5, 2);
        let net = Network::new(2, vec![], vec![Edge::new(b(1), b(2), w.clone())]).unwrap();
        let k = kirchhoff(&net);
        assert_eq!(k[(0, 0)], w);
        assert_eq!(k[(0, 1)], -&w);
        assert_eq!(k[(1, 1)], w);
    }

    #[test]
    fn kirchhoff_empty_and_star() {
        assert!(kirchhoff(&Network::empty(3)).is_zero());
        let k = kirchhoff(&star(q(1, 1), q(2, 1), q(3, 1)));
        assert_eq!(k.row(3), &[q(-1, 1), q(-2, 1), q(-3, 1), q(6, 1)][..]);
    }

    #[test]
    fn response_examples() {
        assert!(response(&Network::empty(4)).unwrap().is_zero());

        let l = response(&star(q(1, 1), q(1, 1), q(1, 1))).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                assert_eq!(l.x(i, j), &if i == j { q(2, 3) } else { q(-1, 3) });
            }
        }

        let (a, c) = (q(3, 2), q(5, 7));
        let path = Network::new(
            2,
            vec!["v".into()],
            vec![
                Edge::new(b(1), Node::interior("v"), a.clone()),
                Edge::new(Node::interior("v"), b(2), c.clone()),
            ],
        )
        .unwrap();
        let s = &(&a * &c) / &(&a + &c);
        let l = response(&path).unwrap();
        assert_eq!(l.x(1, 1), &s);
        assert_eq!(l.x(1, 2), &-&s);
    }

    #[test]
    fn isolated_interior_is_singular() {
        let net = Network::new(2, vec!["lonely".into()], vec![]).unwrap();
        assert_eq!(response(&net), Err(Error::SingularInterior));
    }

    #[test]
    fn validation() {
        assert!(Network::new(2, vec![], vec![Edge::new(b(1), b(2), Rat::zero())]).is_err());
        assert!(Network::new(2, vec![], vec![Edge::new(b(1), b(3), Rat::one())]).is_err());
        assert!(Network::new(2, vec!["2".into()], vec![]).is_err());
        assert!(Network::new(2, vec!["x".into(), "x".into()], vec![]).is_err());
        assert!(Network::new(
            2,
            vec!["9".into()],
            vec![Edge::new(b(1), Node::interior("9"), Rat::one())]
        )
        .is_ok());
    }

    #[test]
    fn response_matrix_checks_invariants() {
        assert!(ResponseMatrix::new(Mat::from_ints(&[&[1, -1], &[-1, 1]])).is_ok());
        assert!(ResponseMatrix::new(Mat::from_ints(&[&[1, 0], &[0, 1]])).is_err());
        assert!(ResponseMatrix::new(Mat::from_ints(&[&[1, -1], &[0, 0]])).is_err());
    }

    #[test]
    fn fresh_ids_skip_used_ones() {
        let net = Network::new(2, vec!["s0".into(), "s1".into()], vec![]).unwrap();
        assert_eq!(net.fresh_id("s"), "s2");
    }
}
