//! Expression language, printers and the claim-verification driver on top of
//! [`uqsl2_core`].

pub mod eval;
pub mod parse;
pub mod print;
pub mod suite;

pub use eval::{eval_ast, eval_str, EvalContext, EvalError};
pub use parse::{parse, Ast, GenKind, ParseError};
pub use print::{from_json, print_element, to_json, Format, JsonError};
pub use suite::{run_verify_suite, ConfigError, ReportDoc, SuiteConfig};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const DISCREPANCY: i32 = 1;
    pub const USAGE: i32 = 2;
}
