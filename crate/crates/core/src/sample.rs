//! Seeded random inputs for the self-check suites and tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{Mat, Rat};
use crate::network::{Network, Node};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `1 ≤ p, q ≤ 9`.
pub fn positive_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(rng.gen_range(1..=9), rng.gen_range(1..=9))
}

/// `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 9`.
pub fn any_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(rng.gen_range(-9..=9), rng.gen_range(1..=9))
}

pub fn positive_rats(rng: &mut impl Rng, count: usize) -> Vec<Rat> {
    (0..count).map(|_| positive_rat(rng)).collect()
}

/// Square matrix with entries from [`any_rat`].
pub fn any_mat(rng: &mut impl Rng, n: usize) -> Mat {
    Mat::from_rows(
        (0..n)
            .map(|_| (0..n).map(|_| any_rat(rng)).collect())
            .collect(),
    )
    .expect("square")
}

/// Shape of a [`random_network`].
#[derive(Clone, Copy, Debug)]
pub struct NetworkShape {
    pub boundary: usize,
    pub interior: usize,
    pub extra_edges: usize,
    pub loops: usize,
}

/// A random network in which every interior vertex `v{k}` is joined to an
/// earlier vertex, so every interior component reaches the boundary and
/// the response is defined.
pub fn random_network(rng: &mut impl Rng, shape: NetworkShape) -> Network {
    let mut net = Network::empty(shape.boundary);
    let mut nodes: Vec<Node> = (1..=shape.boundary).map(Node::Boundary).collect();
    for k in 0..shape.interior {
        let id = format!("v{k}");
        net.add_interior(&id).expect("fresh id");
        let v = Node::interior(&id);
        if !nodes.is_empty() {
            let anchor = nodes[rng.gen_range(0..nodes.len())].clone();
            net.add_edge(anchor, v.clone(), positive_rat(rng))
                .expect("valid edge");
        }
        nodes.push(v);
    }
    if nodes.len() >= 2 {
        for _ in 0..shape.extra_edges {
            let a = rng.gen_range(0..nodes.len());
            let mut b = rng.gen_range(0..nodes.len() - 1);
            if b >= a {
                b += 1;
            }
            net.add_edge(nodes[a].clone(), nodes[b].clone(), positive_rat(rng))
                .expect("valid edge");
        }
    }
    if !nodes.is_empty() {
        for _ in 0..shape.loops {
            let a = nodes[rng.gen_range(0..nodes.len())].clone();
            net.add_edge(a.clone(), a, positive_rat(rng))
                .expect("valid edge");
        }
    }
    net
}

/// A [`random_network`] with `2..=max_boundary` boundary and `0..=max_interior`
/// interior vertices, a few extra edges and no loops.
pub fn small_network(rng: &mut impl Rng, max_boundary: usize, max_interior: usize) -> Network {
    let boundary = rng.gen_range(2..=max_boundary.max(2));
    let interior = rng.gen_range(0..=max_interior);
    let extra_edges = rng.gen_range(0..=boundary + interior);
    random_network(
        rng,
        NetworkShape {
            boundary,
            interior,
            extra_edges,
            loops: 0,
        },
    )
}
