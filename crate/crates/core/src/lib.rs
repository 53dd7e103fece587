//! Certifying graphical regular representations of finite groups.
//!
//! The crate covers permutation arithmetic and stabilizer chains, enumerated
//! group tables, Cayley graphs, graph automorphism groups, certificates for
//! the valency-`k` construction `Γ_k(G, x, y)`, and random sampling in
//! permutation groups.

pub mod autgraph;
pub mod cayley;
pub mod graph;
pub mod grouptab;
pub mod grrcert;
pub mod numtheory;
pub mod perm;
pub mod sampler;

pub use autgraph::{automorphism_group, AutGroup, Coloring};
pub use cayley::{
    build_cayley, gamma_k_connection_set, CayleyGraph, ConnectionSet, CosetPartition,
};
pub use graph::Graph;
pub use grouptab::GroupTable;
pub use grrcert::{certify_theorem1, construct_an, GrrCertificate, Verdict};
pub use perm::{Permutation, StabilizerChain};
pub use sampler::{GroupSampler, SamplerConfig};
