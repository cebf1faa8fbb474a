//! Finite groups given by permutations, matrices over GF(p), products and
//! Cayley tables, with the tools needed to study rational groups: conjugacy
//! classes, Sylow subgroups, prime graphs, modules over GF(p), induced
//! modules and bounded searches.

pub mod cli;
pub mod construct;
pub mod element;
pub mod error;
pub mod facts;
pub mod fp;
pub mod graph;
pub mod group;
pub mod module;
pub mod numtheory;
pub mod perm;
pub mod rationality;
pub mod search;
pub mod spec;
pub mod twisted;

pub use construct::{direct_product, named_group, semidirect_product};
pub use element::{Convention, GroupElement, MulRule};
pub use error::{Error, Result};
pub use fp::{FpMatrix, FpVector};
pub use graph::{Figure, PrimeGraph};
pub use group::{FiniteGroup, Subgroup};
pub use module::ModuleAction;
pub use perm::Perm;
