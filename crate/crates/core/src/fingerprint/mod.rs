//! Set partitions, signature fingerprints and the three-way type classifier.

mod chi;
mod classify;
mod partition;

pub use chi::{fingerprint, fingerprint_capped, fingerprint_fast, fingerprints_fast, Fingerprint};
pub use classify::{classify, SignatureType, TypeTag, Witness, DEFAULT_BOUND};
pub use partition::{
    bell_number, enumerate_set_partitions, SetPartition, SetPartitions, DEFAULT_PARTITION_CAP,
};
