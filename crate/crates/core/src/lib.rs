//! Finite rough-set workbench: approximation spaces, granular operator
//! spaces, mixed-domain and dialectical partial algebras, parthoods,
//! negations, figures of opposition and primitive counting.

pub mod approx;
pub mod cera;
pub mod counting;
pub mod crad;
pub mod error;
pub mod expr;
pub mod granular;
pub mod model;
pub mod negation;
pub mod opposition;
pub mod parthood;
pub mod prerough;
pub mod propsys;
pub mod report;

pub use approx::{ApproxTriple, ApproximationSpace, Definiteness, RoughClass, RoughOrderPoset, Subset, Universe};
pub use cera::{CeraModel, MixedElement};
pub use crad::{CradModel, DialecticalPair};
pub use error::{Error, Result};
pub use expr::{eval_str, Expr};
pub use model::ModelFile;
pub use opposition::Figure;
pub use report::{AxiomCheck, AxiomReport};
