//! Line-oriented text DSL for surfaces, curves, monodromy words and
//! assemblies, the commands the CLI exposes over it, and the bundled
//! example fixtures.
//!
//! ```text
//! # comments run to end of line
//! surface g=1 m=1
//! curve a = [1,0]
//! curve b = [0,1]
//! word w = -a -b (b a)^4
//! assembly x = pos:w neg:w
//! ```
//!
//! Word tokens read left to right as first-acting-first, matching the
//! library's order convention. Fixture files additionally carry
//! `expect <key> = <value> # [TAG: note]` lines.

mod fixture;
mod parse;
mod run;

pub use fixture::{
    fixture_names, fixture_source, verify_paper, CheckResult, FixtureError, FixtureOutcome,
};
pub use parse::{parse, AssemblyDecl, Document, ParseError, WordDecl};
pub use run::{run, Command, RunError};
