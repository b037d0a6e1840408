use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exact::Mat;
use crate::network::{Network, Node, ResponseMatrix};

struct FlowEdge {
    to: usize,
    cap: u32,
}

/// Residual graph for unit-capacity max-flow.
struct Flow {
    edges: Vec<FlowEdge>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            edges: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.edges.len());
        self.edges.push(FlowEdge { to, cap });
        self.adj[to].push(self.edges.len());
        self.edges.push(FlowEdge { to: from, cap: 0 });
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via: Vec<Option<usize>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            if x == t {
                break;
            }
            for &e in &self.adj[x] {
                let y = self.edges[e].to;
                if self.edges[e].cap > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = Some(e);
                    queue.push_back(y);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut y = t;
        while let Some(e) = via[y] {
            self.edges[e].cap -= 1;
            self.edges[e ^ 1].cap += 1;
            y = self.edges[e ^ 1].to;
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, enough: usize) -> usize {
        let mut f = 0;
        while f < enough && self.augment(s, t) {
            f += 1;
        }
        f
    }
}

/// Sources `i..i+K−1` and sinks `j−K+1..j` with `K = ⌊(j−i+1)/2⌋`.
fn terminals(size: usize, i: usize, j: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if i == 0 || j > size {
        return Err(Error::IndexOutOfRange {
            index: if i == 0 { i } else { j },
            max: size,
        });
    }
    if i >= j {
        return Err(Error::Validation(format!("need i < j, got ({i},{j})")));
    }
    let k = (j - i + 1) / 2;
    Ok(((i..i + k).collect(), (j + 1 - k..=j).collect()))
}

/// Whether `⌊(j−i+1)/2⌋` vertex-disjoint paths join `i, i+1, …` to
/// `j, j−1, …` through interior vertices only.
pub fn is_ij_connected(net: &Network, i: usize, j: usize) -> Result<bool> {
    let (sources, sinks) = terminals(net.boundary_count(), i, j)?;
    let v = net.vertex_count();
    let usable = |node: &Node| match node {
        Node::Boundary(b) => sources.contains(b) || sinks.contains(b),
        Node::Interior(_) => true,
    };
    // Vertex x splits into 2x (in) and 2x+1 (out).
    let (src, dst) = (2 * v, 2 * v + 1);
    let mut flow = Flow::new(2 * v + 2);
    for x in 0..v {
        flow.add(2 * x, 2 * x + 1, 1);
    }
    for e in net.edges() {
        if e.is_loop() || !usable(&e.u) || !usable(&e.v) {
            continue;
        }
        let a = net.vertex_index(&e.u).expect("valid endpoint");
        let b = net.vertex_index(&e.v).expect("valid endpoint");
        flow.add(2 * a + 1, 2 * b, 1);
        flow.add(2 * b + 1, 2 * a, 1);
    }
    for &s in &sources {
        flow.add(src, 2 * (s - 1), 1);
    }
    for &t in &sinks {
        flow.add(2 * (t - 1) + 1, dst, 1);
    }
    Ok(flow.max_flow(src, dst, sources.len()) == sources.len())
}

/// The same property read off a response matrix: the minor on rows
/// `i..i+K−1` and columns `j−K+1..j` is nonzero.
pub fn minor_connected(l: &ResponseMatrix, i: usize, j: usize) -> Result<bool> {
    let (sources, sinks) = terminals(l.size(), i, j)?;
    let rows: Vec<usize> = sources.iter().map(|s| s - 1).collect();
    let cols: Vec<usize> = sinks.iter().map(|t| t - 1).collect();
    let minor: Mat = l.mat().select(&rows, &cols);
    Ok(!minor.det()?.is_zero())
}

/// `is_ij_connected` for every `1 ≤ i < j ≤ boundary`, in lexicographic order.
pub fn connection_profile(net: &Network) -> Vec<((usize, usize), bool)> {
    let b = net.boundary_count();
    let mut out = Vec::new();
    for i in 1..=b {
        for j in i + 1..=b {
            out.push((
                (i, j),
                is_ij_connected(net, i, j).expect("indices in range"),
            ));
        }
    }
    out
}
