//! Rigorous complex ball and 1-jet arithmetic, jet matrices modelling
//! PSL(2,C), and a certified box-subdivision verifier driven by advice.

pub mod complex;
pub mod conditions;
pub mod jet;
pub mod roundoff;
pub mod sl2;
pub mod verifier;

pub use complex::{BallComplex, ExactComplex};
pub use conditions::{inequality_holds, BoxAddress, Condition, ConditionError, ConditionKind};
pub use jet::Jet;
pub use roundoff::{initialize_roundoff, FpEnvironment, RoundoffError, EPS, HALF_EPS};
pub use sl2::JetMatrix;
pub use verifier::{run_cli, verify, AdviceStream, ConditionList, ConditionSource, VerifyError, VerifyStats};
