//! Classification of tournament score sequences by their directed linking
//! behavior: whether every realizing tournament embeds with no consistently
//! oriented non-split link ("linkless"), whether some realization is
//! intrinsically linked as a directed graph, or whether the rule set leaves
//! the question open.
//!
//! The crate bundles the combinatorial machinery the classification runs on:
//! score-sequence arithmetic ([`scoreseq`]), tournaments and post-contraction
//! digraphs ([`digraph`]), the 21-link certificate search on seven vertices
//! ([`cg`]), the rule engine with provenance traces ([`rules`]), executable
//! constructions and witnesses ([`constructions`]), and the acceptance checks
//! ([`verify`]).

pub mod cache;
pub mod cg;
pub mod constructions;
pub mod digraph;
pub mod output;
pub mod rules;
pub mod scoreseq;
pub mod verify;

pub use digraph::{Cycle, Digraph, Tournament};
pub use rules::{ClassificationTable, Classifier, Status, Verdict};
pub use scoreseq::{enumerate, landau_check, Fragment, LandauViolation, ScoreSequence};
