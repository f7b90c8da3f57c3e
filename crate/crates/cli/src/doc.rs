//! Versioned JSON instance documents.
//!
//! ```json
//! {"version": 1, "kind": "grid", "k": 1, "grid": {...}}
//! ```
//!
//! `kind` names the one payload field that must be present. Serialisation
//! is pretty-printed with a fixed field order, so canonical documents
//! round-trip byte for byte.

use holant_core::reductions::{MatrixModP, VcspInstance};
use holant_core::{Hypergraph, Signature, SignatureGrid};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DOCUMENT_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid document at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("unsupported document version {0} (expected {DOCUMENT_VERSION})")]
    Version(u32),
    #[error("document of kind `{kind}` must carry a `{field}` field")]
    MissingPayload {
        kind: &'static str,
        field: &'static str,
    },
    #[error("document of kind `{kind}` has a stray `{field}` field")]
    StrayPayload {
        kind: &'static str,
        field: &'static str,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Grid,
    Signatures,
    Vcsp,
    Hypergraph,
    MatrixModP,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Grid => "grid",
            Kind::Signatures => "signatures",
            Kind::Vcsp => "vcsp",
            Kind::Hypergraph => "hypergraph",
            Kind::MatrixModP => "matrix-mod-p",
        }
    }

    fn field(self) -> &'static str {
        match self {
            Kind::MatrixModP => "matrix",
            other => other.name(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: u32,
    kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grid: Option<SignatureGrid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    signatures: Option<Vec<Signature>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vcsp: Option<VcspInstance>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hypergraph: Option<Hypergraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<MatrixModP>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Grid(SignatureGrid),
    Signatures(Vec<Signature>),
    Vcsp(VcspInstance),
    Hypergraph(Hypergraph),
    MatrixModP(MatrixModP),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Grid(_) => Kind::Grid,
            Instance::Signatures(_) => Kind::Signatures,
            Instance::Vcsp(_) => Kind::Vcsp,
            Instance::Hypergraph(_) => Kind::Hypergraph,
            Instance::MatrixModP(_) => Kind::MatrixModP,
        }
    }
}

/// An instance plus the optional parameter `k` carried alongside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDocument {
    pub instance: Instance,
    pub k: Option<usize>,
}

impl InstanceDocument {
    pub fn new(instance: Instance, k: Option<usize>) -> Self {
        InstanceDocument { instance, k }
    }

    pub fn from_value(value: serde_json::Value) -> Result<Self, DocError> {
        let raw: RawDocument =
            serde_path_to_error::deserialize(value).map_err(|e| DocError::Schema {
                path: e.path().to_string(),
                message: e.inner().to_string(),
            })?;
        Self::from_raw(raw)
    }

    fn from_raw(raw: RawDocument) -> Result<Self, DocError> {
        if raw.version != DOCUMENT_VERSION {
            return Err(DocError::Version(raw.version));
        }
        let kind = raw.kind;
        let present = [
            (Kind::Grid, raw.grid.is_some()),
            (Kind::Signatures, raw.signatures.is_some()),
            (Kind::Vcsp, raw.vcsp.is_some()),
            (Kind::Hypergraph, raw.hypergraph.is_some()),
            (Kind::MatrixModP, raw.matrix.is_some()),
        ];
        if let Some((stray, _)) = present.iter().find(|(k, p)| *p && *k != kind) {
            return Err(DocError::StrayPayload {
                kind: kind.name(),
                field: stray.field(),
            });
        }
        let missing = || DocError::MissingPayload {
            kind: kind.name(),
            field: kind.field(),
        };
        let instance = match kind {
            Kind::Grid => Instance::Grid(raw.grid.ok_or_else(missing)?),
            Kind::Signatures => Instance::Signatures(raw.signatures.ok_or_else(missing)?),
            Kind::Vcsp => Instance::Vcsp(raw.vcsp.ok_or_else(missing)?),
            Kind::Hypergraph => Instance::Hypergraph(raw.hypergraph.ok_or_else(missing)?),
            Kind::MatrixModP => Instance::MatrixModP(raw.matrix.ok_or_else(missing)?),
        };
        Ok(InstanceDocument { instance, k: raw.k })
    }

    fn to_raw(&self) -> RawDocument {
        let mut raw = RawDocument {
            version: DOCUMENT_VERSION,
            kind: self.instance.kind(),
            k: self.k,
            grid: None,
            signatures: None,
            vcsp: None,
            hypergraph: None,
            matrix: None,
        };
        match &self.instance {
            Instance::Grid(g) => raw.grid = Some(g.clone()),
            Instance::Signatures(s) => raw.signatures = Some(s.clone()),
            Instance::Vcsp(v) => raw.vcsp = Some(v.clone()),
            Instance::Hypergraph(h) => raw.hypergraph = Some(h.clone()),
            Instance::MatrixModP(m) => raw.matrix = Some(m.clone()),
        }
        raw
    }

    pub fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_raw()).expect("documents serialise")
    }
}

/// Parses one document from JSON text.
pub fn parse_instance(text: &str) -> Result<InstanceDocument, DocError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let raw: RawDocument =
        serde_path_to_error::deserialize(&mut de).map_err(|e| DocError::Schema {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
    de.end().map_err(|e| DocError::Schema {
        path: ".".into(),
        message: e.to_string(),
    })?;
    InstanceDocument::from_raw(raw)
}

/// Canonical text: pretty-printed, fixed field order, trailing newline.
pub fn serialize_instance(doc: &InstanceDocument) -> String {
    let mut s = serde_json::to_string_pretty(&doc.to_raw()).expect("documents serialise");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use holant_core::hypergraph::named;

    #[test]
    fn grid_round_trips_byte_identically() {
        let grid = SignatureGrid::uniform(named::complete_graph(3), Signature::hw_le1()).unwrap();
        let text = serialize_instance(&InstanceDocument::new(Instance::Grid(grid), Some(1)));
        let back = parse_instance(&text).unwrap();
        assert_eq!(serialize_instance(&back), text);
    }

    #[test]
    fn matrix_document() {
        let doc = parse_instance(
            r#"{"version":1,"kind":"matrix-mod-p","matrix":{"p":2,"rows":[[1,1]]}}"#,
        )
        .unwrap();
        let Instance::MatrixModP(m) = doc.instance else {
            panic!("wrong kind")
        };
        assert_eq!((m.rows.len(), m.columns()), (1, 2));
    }

    #[test]
    fn float_scalars_rejected_with_path() {
        let text = r#"{"version":1,"kind":"signatures","signatures":[{"table":["1", "0.333"],"tail":{"kind":"zero"}}]}"#;
        let err = parse_instance(text).unwrap_err();
        assert!(err.to_string().contains("signatures[0]"), "{err}");
    }

    #[test]
    fn payload_must_match_kind() {
        let text = r#"{"version":1,"kind":"grid","hypergraph":{"n":1,"edges":[]}}"#;
        assert!(matches!(
            parse_instance(text),
            Err(DocError::StrayPayload { .. })
        ));
        assert!(matches!(
            parse_instance(r#"{"version":1,"kind":"grid"}"#),
            Err(DocError::MissingPayload { .. })
        ));
        assert!(matches!(
            parse_instance(r#"{"version":2,"kind":"grid"}"#),
            Err(DocError::Version(2))
        ));
    }
}
