//! Combinatorial core of the workbench: tuple coding, stage-approximated
//! colorings, and decision procedures for the Ramsey-type notions
//! (homogeneous, transitive, free, thin, rainbow, cohesive).
//!
//! Everything here is a pure function of its inputs and safe to call
//! concurrently; there is no shared mutable state.

pub mod coloring;
pub mod pairing;
pub mod sets;
pub mod stage_fn;
pub mod table;
pub mod tournament;
pub mod tuple;

pub use coloring::{
    extract_subrainbow, is_free, is_homogeneous, rainbow_report, subsets, thin_report, Coloring,
    FnColoring,
};
pub use sets::{cohesive_violations, sads_enumerator, DecSet, OrderRel, SadsError};
pub use stage_fn::{
    limit_coloring, parse_stage_family, settle_series, stable_limit, FnStageFn, LimitEntry,
    SettleReport, StageFn,
};
pub use table::{TableColoring, TableError};
pub use tournament::{is_transitive, Tournament};
pub use tuple::{decode_tuple, encode_tuple, Tuple, TupleError};
