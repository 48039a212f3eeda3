//! Instance families with known answers, and reductions that come with a
//! certificate mapping source objects to edges and vertices.

mod certificate;
mod clean3sat;
mod gadgets;
mod mis;
mod random;

pub use certificate::{CertKind, GadgetRange, MisEntry, ReductionCertificate, VarEdges};
pub use clean3sat::{
    gen_from_clean3sat_multigraph, gen_from_clean3sat_simple, gen_random_clean3cnf,
    validate_clean, Clean3Cnf,
};
pub use gadgets::{expand_to_simple, gen_odd_square, gen_uncutable};
pub use mis::{gen_from_mis, has_colorful_independent_set, MisInstance};
pub use random::{gen_matching_cut, gen_random, ConflictModel};
