//! Decision procedures for the fifteen normal modal logics of the modal cube,
//! based on eight-valued non-deterministic matrices.

pub mod decision;
pub mod error;
pub mod export;
pub mod formula;
pub mod gen;
pub mod kripke;
pub mod logics;
pub mod nmatrix;
pub mod par;
pub mod values;
pub mod xcheck;

pub use decision::{decide, filter_model, Decision, Options, TableModel, Verdict};
pub use error::{Error, Result};
pub use formula::{closure, parse, Closure, Formula};
pub use kripke::{forces, oracle_decide, to_kripke, KripkeModel, OracleVerdict};
pub use logics::{Family, FrameProp, FrameProps, Logic};
pub use nmatrix::Nmatrix;
pub use par::Exec;
pub use values::{NamedSet, TruthValue, ValueSet};
