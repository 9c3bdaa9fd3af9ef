//! JSON instance and coloring files.
//!
//! Instances:
//!
//! ```text
//! {"type":"chain","n":8}
//! {"type":"ring","n":8}
//! {"type":"tree","n":4,"edges":[[0,1],[1,2],[1,3]]}
//! {"type":"tree_of_rings","rings":[[0,1,2,3],[0,4,5,6]]}
//! ```
//!
//! Colorings are `{"colors":[c0,c1,...]}`, indexed by vertex id. Writers
//! emit compact JSON followed by a newline.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Instance;
use crate::graph::{Color, Coloring, GraphError, Tree, TreeOfRings, VertexId};

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("malformed JSON: {0}")]
    Parse(#[source] serde_json::Error),
    #[error("document does not match the schema: {0}")]
    Schema(#[source] serde_json::Error),
    #[error("invalid instance: {0}")]
    Validation(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("a {kind} needs at least {min} vertices, got {n}")]
    TooSmall {
        kind: &'static str,
        n: usize,
        min: usize,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum InstanceDoc {
    Chain {
        n: usize,
    },
    Ring {
        n: usize,
    },
    Tree {
        n: usize,
        edges: Vec<[VertexId; 2]>,
    },
    TreeOfRings {
        rings: Vec<Vec<VertexId>>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ColoringDoc {
    colors: Vec<Color>,
}

fn parse<T: serde::de::DeserializeOwned>(bytes: &[u8]) -> Result<T, InstanceError> {
    let value: serde_json::Value = serde_json::from_slice(bytes).map_err(InstanceError::Parse)?;
    serde_json::from_value(value).map_err(InstanceError::Schema)
}

fn emit<T: Serialize>(doc: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec(doc).expect("documents always serialize");
    out.push(b'\n');
    out
}

pub fn read_instance(bytes: &[u8]) -> Result<Instance, InstanceError> {
    let instance = match parse::<InstanceDoc>(bytes)? {
        InstanceDoc::Chain { n } if n < 1 => {
            return Err(ValidationError::TooSmall {
                kind: "chain",
                n,
                min: 1,
            }
            .into())
        }
        InstanceDoc::Chain { n } => Instance::Chain { n },
        InstanceDoc::Ring { n } if n < 3 => {
            return Err(ValidationError::TooSmall {
                kind: "ring",
                n,
                min: 3,
            }
            .into())
        }
        InstanceDoc::Ring { n } => Instance::Ring { n },
        InstanceDoc::Tree { n, edges } => {
            let edges: Vec<_> = edges.into_iter().map(|[u, v]| (u, v)).collect();
            Instance::Tree(Tree::from_edges(n, &edges).map_err(ValidationError::from)?)
        }
        InstanceDoc::TreeOfRings { rings } => {
            Instance::TreeOfRings(TreeOfRings::new(rings).map_err(ValidationError::from)?)
        }
    };
    Ok(instance)
}

pub fn write_instance(instance: &Instance) -> Vec<u8> {
    let doc = match instance {
        Instance::Chain { n } => InstanceDoc::Chain { n: *n },
        Instance::Ring { n } => InstanceDoc::Ring { n: *n },
        Instance::Tree(t) => InstanceDoc::Tree {
            n: t.vertex_count(),
            edges: t.graph().edges().into_iter().map(|(u, v)| [u, v]).collect(),
        },
        Instance::TreeOfRings(t) => InstanceDoc::TreeOfRings {
            rings: t.rings().to_vec(),
        },
    };
    emit(&doc)
}

pub fn read_coloring(bytes: &[u8]) -> Result<Coloring, InstanceError> {
    let doc: ColoringDoc = parse(bytes)?;
    Ok(Coloring::new(doc.colors).map_err(ValidationError::from)?)
}

pub fn write_coloring(coloring: &Coloring) -> Vec<u8> {
    emit(&ColoringDoc {
        colors: coloring.as_slice().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_each_kind() {
        assert_eq!(
            read_instance(br#"{"type":"ring","n":8}"#).unwrap(),
            Instance::Ring { n: 8 }
        );
        let two = read_instance(br#"{"type":"tree_of_rings","rings":[[0,1,2,3],[0,4,5,6]]}"#)
            .unwrap();
        assert_eq!(two.vertex_count(), 7);
        let tree = read_instance(br#"{"type":"tree","n":3,"edges":[[1,0],[1,2]]}"#).unwrap();
        assert_eq!(
            write_instance(&tree),
            b"{\"type\":\"tree\",\"n\":3,\"edges\":[[0,1],[1,2]]}\n".to_vec()
        );
    }

    #[test]
    fn error_classes() {
        assert!(matches!(
            read_instance(br#"{"type":"tree_of_rings","rings":[[0,1,2,3],[0,1,4,5]]}"#),
            Err(InstanceError::Validation(ValidationError::Graph(
                GraphError::MultiVertexIntersection { .. }
            )))
        ));
        assert!(matches!(read_instance(b"{\"type\":"), Err(InstanceError::Parse(_))));
        assert!(matches!(
            read_instance(br#"{"type":"hexagon","n":6}"#),
            Err(InstanceError::Schema(_))
        ));
        assert!(matches!(
            read_instance(br#"{"type":"ring","n":8,"extra":1}"#),
            Err(InstanceError::Schema(_))
        ));
        assert!(matches!(
            read_instance(br#"{"type":"ring","n":2}"#),
            Err(InstanceError::Validation(ValidationError::TooSmall { .. }))
        ));
        assert!(matches!(
            read_instance(br#"{"type":"chain","n":-1}"#),
            Err(InstanceError::Schema(_))
        ));
    }

    #[test]
    fn coloring_files() {
        let c = read_coloring(br#"{"colors":[3,2,3,1]}"#).unwrap();
        assert_eq!(c.as_slice(), &[3, 2, 3, 1]);
        assert_eq!(write_coloring(&c), b"{\"colors\":[3,2,3,1]}\n".to_vec());
        assert!(matches!(
            read_coloring(br#"{"colors":[1,0]}"#),
            Err(InstanceError::Validation(_))
        ));
    }
}
