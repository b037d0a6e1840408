use serde::{Deserialize, Serialize};

use super::{Edge, Network, Node};
use crate::error::{Error, Result};
use crate::exact::Rat;

/// On-disk form of a [`Network`]:
/// `{"boundary": 3, "interior": ["v"], "edges": [{"u": "1", "v": "v", "w": "3/2"}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkJson {
    pub boundary: usize,
    #[serde(default)]
    pub interior: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub u: String,
    pub v: String,
    pub w: Rat,
}

impl NetworkJson {
    pub fn into_network(self) -> Result<Network> {
        let mut net = Network::empty(self.boundary);
        for id in &self.interior {
            net.add_interior(id)?;
        }
        for (i, e) in self.edges.into_iter().enumerate() {
            let u =
                resolve(&net, &e.u).map_err(|m| Error::Validation(format!("edges[{i}].u: {m}")))?;
            let v =
                resolve(&net, &e.v).map_err(|m| Error::Validation(format!("edges[{i}].v: {m}")))?;
            net.add_edge(u, v, e.w).map_err(|err| match err {
                Error::Validation(m) => Error::Validation(format!("edges[{i}]: {m}")),
                other => other,
            })?;
        }
        Ok(net)
    }
}

fn resolve(net: &Network, label: &str) -> std::result::Result<Node, String> {
    if let Ok(k) = label.parse::<usize>() {
        if (1..=net.boundary_count()).contains(&k) {
            return Ok(Node::Boundary(k));
        }
    }
    if net.interior().iter().any(|x| x == label) {
        return Ok(Node::interior(label));
    }
    Err(format!(
        "{label:?} is neither a boundary label 1..={} nor an interior id",
        net.boundary_count()
    ))
}

impl From<&Network> for NetworkJson {
    fn from(net: &Network) -> Self {
        NetworkJson {
            boundary: net.boundary_count(),
            interior: net.interior().to_vec(),
            edges: net
                .edges()
                .iter()
                .map(|e: &Edge| EdgeJson {
                    u: e.u.to_string(),
                    v: e.v.to_string(),
                    w: e.weight.clone(),
                })
                .collect(),
        }
    }
}

impl Network {
    /// Parse and validate the JSON network format.
    pub fn from_json_str(s: &str) -> Result<Network> {
        let raw: NetworkJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.into_network()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&NetworkJson::from(self)).expect("network serializes")
    }
}
