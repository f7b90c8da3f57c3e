//! Homomorphism-basis machinery: the partition-lattice Möbius function,
//! quotients, Hom/Emb/Aut/Sub counts, catalogues of uniform hypergraphs,
//! ζ-coefficients, tensor products and exact interpolation.

mod catalogue;
mod hom;
mod interpolate;
pub mod linalg;
mod mobius;
mod quotient;
mod tensor;
mod zeta;

pub use catalogue::{
    enumerate_uniform_hypergraphs, enumerate_uniform_hypergraphs_upto, CatalogueCaps,
};
pub use hom::{count_aut, count_emb, count_emb_mobius, count_hom, count_sub};
pub use interpolate::dedekind_interpolate;
pub use mobius::{
    colour_consistent, colour_consistent_partitions, mobius, mobius_bottom, VertexPartition,
};
pub use quotient::quotient;
pub use tensor::tensor_product;
pub use zeta::{hom_expansion, zeta_coefficient, HomExpansion};
