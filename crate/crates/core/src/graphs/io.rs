use serde::{Deserialize, Serialize};

use super::{Graph, LogEntry};
use crate::error::{Error, Result};

/// Serialized form of a [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub faces: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub log: Option<Vec<LogDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub main_edge: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogDoc {
    pub vertex: usize,
    pub neighbors: Vec<usize>,
}

impl From<&Graph> for GraphDoc {
    fn from(g: &Graph) -> Self {
        GraphDoc {
            vertex_count: g.vertex_count(),
            edges: g.edges().collect(),
            faces: g.faces.clone(),
            log: g.log.as_ref().map(|log| {
                log.iter()
                    .map(|e| LogDoc {
                        vertex: e.vertex,
                        neighbors: e.neighbors.clone(),
                    })
                    .collect()
            }),
            main_edge: g.main_edge,
            levels: g.levels.clone(),
            roles: g.roles.clone(),
        }
    }
}

impl TryFrom<GraphDoc> for Graph {
    type Error = Error;

    fn try_from(doc: GraphDoc) -> Result<Graph> {
        let n = doc.vertex_count;
        let mut g = Graph::from_edges(n, &doc.edges)?;
        let bad = |what: &str| Error::Parse(format!("{what} refers to a vertex outside 0..{n}"));
        if let Some(faces) = &doc.faces {
            if faces.iter().flatten().any(|&v| v >= n) {
                return Err(bad("face list"));
            }
        }
        if let Some((a, b)) = doc.main_edge {
            if !g.has_edge(a, b) {
                return Err(Error::Parse(format!("main edge {a}-{b} is not an edge")));
            }
        }
        if doc.levels.as_ref().is_some_and(|l| l.len() != n) {
            return Err(Error::Parse(
                "level list length differs from vertex count".into(),
            ));
        }
        if doc.roles.as_ref().is_some_and(|r| r.len() != n) {
            return Err(Error::Parse(
                "role list length differs from vertex count".into(),
            ));
        }
        if let Some(log) = doc.log {
            let mut entries = Vec::with_capacity(log.len());
            for e in log {
                if e.vertex >= n || e.neighbors.iter().any(|&u| u >= n) {
                    return Err(bad("construction log"));
                }
                if !g.is_clique(&e.neighbors)
                    || e.neighbors.iter().any(|&u| !g.has_edge(u, e.vertex))
                {
                    return Err(Error::Parse(format!(
                        "logged neighborhood of vertex {} is not a clique joined to it",
                        e.vertex
                    )));
                }
                entries.push(LogEntry {
                    vertex: e.vertex,
                    neighbors: e.neighbors,
                });
            }
            g.log = Some(entries);
        }
        g.faces = doc.faces;
        g.main_edge = doc.main_edge;
        g.levels = doc.levels;
        g.roles = doc.roles;
        Ok(g)
    }
}

impl Graph {
    /// JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(GraphDoc::from(self)).expect("graph documents serialize");
        serde_json::to_string(&value).expect("json values serialize")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphDoc = serde_json::from_str(text)?;
        Graph::try_from(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{leveled_outerplanar, outerplanar_u, plus4_gadget, stacked_triangulation};

    #[test]
    fn round_trips() {
        let graphs = [
            stacked_triangulation(2),
            outerplanar_u(3),
            plus4_gadget(&outerplanar_u(1), 2).unwrap(),
            leveled_outerplanar(2, 3, 100).unwrap(),
        ];
        for g in graphs {
            let text = g.to_json();
            assert_eq!(Graph::from_json(&text).unwrap(), g);
            assert_eq!(Graph::from_json(&text).unwrap().to_json(), text);
        }
    }

    #[test]
    fn keys_are_sorted() {
        let text = stacked_triangulation(0).to_json();
        let edges = text.find("\"edges\"").unwrap();
        let faces = text.find("\"faces\"").unwrap();
        let vc = text.find("\"vertex_count\"").unwrap();
        assert!(edges < faces && faces < vc);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Graph::from_json(r#"{"vertex_count":2,"edges":[[0,2]]}"#).is_err());
        assert!(Graph::from_json(r#"{"vertex_count":2,"edges":[[1,1]]}"#).is_err());
        assert!(
            Graph::from_json(r#"{"vertex_count":3,"edges":[[0,1]],"main_edge":[0,2]}"#).is_err()
        );
        let not_clique =
            r#"{"vertex_count":3,"edges":[[0,2],[1,2]],"log":[{"vertex":2,"neighbors":[0,1]}]}"#;
        assert!(Graph::from_json(not_clique).is_err());
        assert!(Graph::from_json("[1,2]").is_err());
    }
}
