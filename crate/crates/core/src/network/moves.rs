use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{Edge, Network, Node};
use crate::error::{Error, Result};
use crate::exact::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Series,
    Parallel,
    Loop,
    Pendant,
    YToDelta,
    DeltaToY,
}

impl MoveKind {
    pub const ALL: [MoveKind; 6] = [
        MoveKind::Series,
        MoveKind::Parallel,
        MoveKind::Loop,
        MoveKind::Pendant,
        MoveKind::YToDelta,
        MoveKind::DeltaToY,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Series => "series",
            MoveKind::Parallel => "parallel",
            MoveKind::Loop => "loop",
            MoveKind::Pendant => "pendant",
            MoveKind::YToDelta => "y_to_delta",
            MoveKind::DeltaToY => "delta_to_y",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MoveKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MoveKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown move kind {s:?}")))
    }
}

/// A response-preserving local rewrite and the place it applies.
///
/// Edges are referred to by their index in [`Network::edges`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalMove {
    /// Merge the two edges at an interior degree-2 vertex.
    Series { vertex: String },
    /// Merge two edges with the same endpoints.
    Parallel { edges: (usize, usize) },
    /// Delete a self-loop.
    Loop { edge: usize },
    /// Delete an interior degree-1 vertex with its edge.
    Pendant { vertex: String },
    /// Replace an interior degree-3 star by a triangle.
    YToDelta { vertex: String },
    /// Replace a triangle by a star around a new interior vertex
    /// (`center`, or a fresh id when `None`).
    DeltaToY {
        edges: [usize; 3],
        center: Option<String>,
    },
}

impl LocalMove {
    pub fn kind(&self) -> MoveKind {
        match self {
            LocalMove::Series { .. } => MoveKind::Series,
            LocalMove::Parallel { .. } => MoveKind::Parallel,
            LocalMove::Loop { .. } => MoveKind::Loop,
            LocalMove::Pendant { .. } => MoveKind::Pendant,
            LocalMove::YToDelta { .. } => MoveKind::YToDelta,
            LocalMove::DeltaToY { .. } => MoveKind::DeltaToY,
        }
    }

    /// Build a move from a kind and a textual site: an interior vertex id
    /// for vertex moves, comma-separated edge indices otherwise.
    pub fn parse(kind: MoveKind, site: &str) -> Result<LocalMove> {
        let indices = || -> Result<Vec<usize>> {
            site.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad edge index {t:?}")))
                })
                .collect()
        };
        let count_err =
            |n: usize| Error::Parse(format!("{kind} expects {n} edge indices, got {site:?}"));
        Ok(match kind {
            MoveKind::Series => LocalMove::Series {
                vertex: site.to_string(),
            },
            MoveKind::Pendant => LocalMove::Pendant {
                vertex: site.to_string(),
            },
            MoveKind::YToDelta => LocalMove::YToDelta {
                vertex: site.to_string(),
            },
            MoveKind::Loop => match indices()?.as_slice() {
                [e] => LocalMove::Loop { edge: *e },
                _ => return Err(count_err(1)),
            },
            MoveKind::Parallel => match indices()?.as_slice() {
                [a, b] => LocalMove::Parallel { edges: (*a, *b) },
                _ => return Err(count_err(2)),
            },
            MoveKind::DeltaToY => match indices()?.as_slice() {
                [a, b, c] => LocalMove::DeltaToY {
                    edges: [*a, *b, *c],
                    center: None,
                },
                _ => return Err(count_err(3)),
            },
        })
    }
}

fn not_applicable(msg: impl Into<String>) -> Error {
    Error::MoveNotApplicable(msg.into())
}

fn interior_node(net: &Network, id: &str, kind: MoveKind) -> Result<Node> {
    let node = Node::interior(id);
    if !net.contains(&node) {
        return Err(not_applicable(format!(
            "{kind}: {id:?} is not an interior vertex"
        )));
    }
    Ok(node)
}

fn edge_at(net: &Network, i: usize, kind: MoveKind) -> Result<&Edge> {
    net.edges().get(i).ok_or_else(|| {
        not_applicable(format!(
            "{kind}: no edge {i} (network has {})",
            net.edges().len()
        ))
    })
}

/// The interior vertex's incident edges, requiring exactly `deg` of them
/// and no self-loop.
fn spokes(net: &Network, node: &Node, deg: usize, kind: MoveKind) -> Result<Vec<usize>> {
    let inc = net.incident(node);
    if inc.iter().any(|&i| net.edges()[i].is_loop()) {
        return Err(not_applicable(format!(
            "{kind}: {node} carries a self-loop"
        )));
    }
    if inc.len() != deg {
        return Err(not_applicable(format!(
            "{kind}: {node} has degree {}, needs {deg}",
            inc.len()
        )));
    }
    Ok(inc)
}

fn remove_edges(net: &mut Network, idx: &[usize]) {
    let mut sorted = idx.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    for i in sorted {
        net.edges_mut().remove(i);
    }
}

/// Apply `m` to a copy of `net`.
pub fn apply_local_move(net: &Network, m: &LocalMove) -> Result<Network> {
    let kind = m.kind();
    let mut out = net.clone();
    match m {
        LocalMove::Series { vertex } => {
            let v = interior_node(net, vertex, kind)?;
            let inc = spokes(net, &v, 2, kind)?;
            let (e1, e2) = (&net.edges()[inc[0]], &net.edges()[inc[1]]);
            let w = &(&e1.weight * &e2.weight) / &(&e1.weight + &e2.weight);
            let (x, y) = (e1.other(&v).clone(), e2.other(&v).clone());
            remove_edges(&mut out, &inc);
            out.remove_interior(vertex);
            out.edges_mut().push(Edge::new(x, y, w));
        }
        LocalMove::Parallel { edges: (i, j) } => {
            if i == j {
                return Err(not_applicable(format!("{kind}: edge {i} given twice")));
            }
            let (a, b) = (edge_at(net, *i, kind)?, edge_at(net, *j, kind)?);
            let same = (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
            if !same {
                return Err(not_applicable(format!(
                    "{kind}: edges {i} ({}—{}) and {j} ({}—{}) do not share endpoints",
                    a.u, a.v, b.u, b.v
                )));
            }
            let w = &a.weight + &b.weight;
            out.edges_mut()[*i].weight = w;
            out.edges_mut().remove(*j);
        }
        LocalMove::Loop { edge } => {
            let e = edge_at(net, *edge, kind)?;
            if !e.is_loop() {
                return Err(not_applicable(format!(
                    "{kind}: edge {edge} ({}—{}) is not a self-loop",
                    e.u, e.v
                )));
            }
            out.edges_mut().remove(*edge);
        }
        LocalMove::Pendant { vertex } => {
            let v = interior_node(net, vertex, kind)?;
            let inc = spokes(net, &v, 1, kind)?;
            remove_edges(&mut out, &inc);
            out.remove_interior(vertex);
        }
        LocalMove::YToDelta { vertex } => {
            let v = interior_node(net, vertex, kind)?;
            let inc = spokes(net, &v, 3, kind)?;
            let arms: Vec<(Node, Rat)> = inc
                .iter()
                .map(|&i| {
                    (
                        net.edges()[i].other(&v).clone(),
                        net.edges()[i].weight.clone(),
                    )
                })
                .collect();
            if arms[0].0 == arms[1].0 || arms[0].0 == arms[2].0 || arms[1].0 == arms[2].0 {
                return Err(not_applicable(format!(
                    "{kind}: neighbours of {vertex} are not distinct"
                )));
            }
            let total: Rat = arms.iter().map(|(_, w)| w).sum();
            remove_edges(&mut out, &inc);
            out.remove_interior(vertex);
            // The side opposite arm k gets the product of the other two arms over the sum.
            for k in 0..3 {
                let (p, r) = ((k + 1) % 3, (k + 2) % 3);
                let w = &(&arms[p].1 * &arms[r].1) / &total;
                out.edges_mut()
                    .push(Edge::new(arms[p].0.clone(), arms[r].0.clone(), w));
            }
        }
        LocalMove::DeltaToY { edges, center } => {
            let [i, j, k] = *edges;
            if i == j || j == k || i == k {
                return Err(not_applicable(format!(
                    "{kind}: edge indices must be distinct"
                )));
            }
            let sides: Vec<&Edge> = edges
                .iter()
                .map(|&e| edge_at(net, e, kind))
                .collect::<Result<_>>()?;
            if sides.iter().any(|e| e.is_loop()) {
                return Err(not_applicable(format!(
                    "{kind}: a triangle side is a self-loop"
                )));
            }
            let mut count: BTreeMap<&Node, usize> = BTreeMap::new();
            for e in &sides {
                *count.entry(&e.u).or_default() += 1;
                *count.entry(&e.v).or_default() += 1;
            }
            if count.len() != 3 || count.values().any(|&c| c != 2) {
                return Err(not_applicable(format!(
                    "{kind}: edges {i},{j},{k} do not form a triangle"
                )));
            }
            let pairwise: Rat = &(&(&sides[0].weight * &sides[1].weight)
                + &(&sides[0].weight * &sides[2].weight))
                + &(&sides[1].weight * &sides[2].weight);
            let c = match center {
                Some(id) => {
                    if net.contains(&Node::interior(id)) {
                        return Err(not_applicable(format!(
                            "{kind}: centre id {id:?} already in use"
                        )));
                    }
                    id.clone()
                }
                None => net.fresh_id("y"),
            };
            out.add_interior(&c)
                .map_err(|e| not_applicable(format!("{kind}: {e}")))?;
            // Each corner is opposite exactly one side.
            let mut arms = Vec::new();
            for (corner, _) in &count {
                let opposite = sides
                    .iter()
                    .find(|e| !e.touches(corner))
                    .expect("triangle side opposite corner");
                arms.push(((*corner).clone(), &pairwise / &opposite.weight));
            }
            remove_edges(&mut out, edges);
            for (corner, w) in arms {
                out.edges_mut()
                    .push(Edge::new(Node::interior(&c), corner, w));
            }
        }
    }
    Ok(out)
}

/// Every site where some move applies, in a fixed order: vertex moves
/// by interior id, then parallel pairs, loops and triangles by edge index.
pub fn applicable_moves(net: &Network) -> Vec<LocalMove> {
    let mut candidates = Vec::new();
    for id in net.interior() {
        candidates.push(LocalMove::Series { vertex: id.clone() });
        candidates.push(LocalMove::Pendant { vertex: id.clone() });
        candidates.push(LocalMove::YToDelta { vertex: id.clone() });
    }
    let edges = net.edges();
    for i in 0..edges.len() {
        if edges[i].is_loop() {
            candidates.push(LocalMove::Loop { edge: i });
            continue;
        }
        for j in i + 1..edges.len() {
            candidates.push(LocalMove::Parallel { edges: (i, j) });
        }
    }
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            for k in j + 1..edges.len() {
                let mut ends: Vec<&Node> = [i, j, k]
                    .iter()
                    .flat_map(|&x| [&edges[x].u, &edges[x].v])
                    .collect();
                ends.sort();
                ends.dedup();
                if ends.len() == 3 {
                    candidates.push(LocalMove::DeltaToY {
                        edges: [i, j, k],
                        center: None,
                    });
                }
            }
        }
    }
    candidates.retain(|m| apply_local_move(net, m).is_ok());
    candidates
}
