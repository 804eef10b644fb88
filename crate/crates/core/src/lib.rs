//! Finite-model laboratory for relational rough-set approximations.
//!
//! Relations live on small indexed universes as bit matrices. On top of
//! them sit the dual (successor/successor) and non-dual
//! (successor/predecessor) lower and upper approximation operators, the
//! Pawlak granule form, and the covering-based C_t operators. The
//! [`properties`] module turns the 23 classical approximation properties
//! into predicates and searches relation classes exhaustively for minimal
//! counterexamples; [`characterization`] checks which properties pin down
//! reflexive, symmetric, transitive, equivalence and pre-order relations.

pub mod approx;
pub mod characterization;
pub mod cli;
pub mod config;
pub mod covering;
pub mod error;
pub mod io;
pub mod logic;
pub mod properties;
pub mod relation;
pub mod sample;
pub mod subset;

pub use approx::{lower, upper, Approximation, OperatorPairing, PairedOperators};
pub use characterization::{check_biconditional, proof_witness, CharacterizationId, ConsistencyRecord};
pub use config::Capacity;
pub use covering::{verify_reduction, Covering, DefinableFamily};
pub use error::{Error, Result};
pub use logic::ImplicationFrame;
pub use properties::{
    check_relation, eval_property, generate_table, search_class, PropertyId, PropertyVerdict, TableReport,
    VerdictStatus,
};
pub use relation::{enumerate_relations, BinaryRelation, RelationClass, RelationClassFlags, Universe};
pub use subset::SubsetOfV;
