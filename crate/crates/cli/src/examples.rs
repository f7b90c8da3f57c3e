//! Small built-in instance documents.

use holant_core::hypergraph::named;
use holant_core::reductions::{Constraint, MatrixModP, VcspInstance};
use holant_core::{ExactScalar, Signature, SignatureGrid};

use crate::doc::{Instance, InstanceDocument};

pub const NAMES: &[&str] = &[
    "k3-matchings",
    "c4-parity",
    "petersen-matchings",
    "t1-path",
    "type-probe",
    "parity-vcsp",
    "code-11-mod2",
    "path-hitting",
];

pub fn example(name: &str) -> Option<InstanceDocument> {
    let grid = |g, s| Instance::Grid(SignatureGrid::uniform(g, s).expect("valid example"));
    let doc = match name {
        "k3-matchings" => {
            InstanceDocument::new(grid(named::complete_graph(3), Signature::hw_le1()), Some(1))
        }
        "c4-parity" => InstanceDocument::new(grid(named::cycle(4), Signature::mod_p(2)), Some(2)),
        "petersen-matchings" => {
            InstanceDocument::new(grid(named::petersen(), Signature::hw_le1()), Some(5))
        }
        "t1-path" => InstanceDocument::new(
            grid(
                named::path(6),
                Signature::geometric(ExactScalar::from_int(2)),
            ),
            Some(3),
        ),
        "type-probe" => InstanceDocument::new(
            Instance::Signatures(vec![
                Signature::hw_le1(),
                Signature::mod_p(2),
                Signature::geometric(ExactScalar::ratio(1, 2)),
            ]),
            None,
        ),
        "parity-vcsp" => InstanceDocument::new(
            Instance::Vcsp(VcspInstance {
                n_variables: 2,
                constraints: vec![Constraint {
                    function: Signature::mod_p(2),
                    scope: vec![0, 1],
                }],
                k: 2,
            }),
            None,
        ),
        "code-11-mod2" => InstanceDocument::new(
            Instance::MatrixModP(MatrixModP::new(2, vec![vec![1, 1]]).expect("valid matrix")),
            Some(2),
        ),
        "path-hitting" => InstanceDocument::new(
            Instance::Hypergraph(
                holant_core::Hypergraph::new(3, [[0, 1], [1, 2]]).expect("valid hypergraph"),
            ),
            Some(1),
        ),
        _ => return None,
    };
    Some(doc)
}
