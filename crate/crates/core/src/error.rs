use thiserror::Error;

use crate::values::TruthValue;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("`bot` is reserved and cannot be used as an atom name (position {position})")]
    ReservedAtom { position: usize },
    #[error("unknown logic `{name}`; valid names: {valid}")]
    UnknownLogic { name: String, valid: String },
    #[error("unknown truth value `{0}`")]
    UnknownValue(String),
    #[error("value {value} is not admissible in logic {logic}")]
    ValueNotInLogic {
        value: TruthValue,
        logic: &'static str,
    },
    #[error("metavariable `{0}` has no binding")]
    UnboundMetavariable(String),
    #[error("row count {count} exceeds the cap of {cap} rows")]
    RowCapExceeded { count: usize, cap: usize },
    #[error("formula `{0}` has an immediate subformula outside the model's closure")]
    MissingSubformula(String),
    #[error("formula `{0}` is already in the model's closure")]
    DuplicateFormula(String),
    #[error("cannot make the relation {property} within the admissible pairs: {detail}")]
    ClosureImpossible {
        property: &'static str,
        detail: String,
    },
    #[error("model space of {worlds} worlds over {atoms} atoms exceeds the oracle budget")]
    OracleBudget { worlds: usize, atoms: usize },
    #[error("no extension value for `{formula}` at row {row}: {detail}")]
    Extension {
        formula: String,
        row: usize,
        detail: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
