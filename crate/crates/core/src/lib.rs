//! Exact classification of irreducible semisimple coherent and parabolic
//! families of weight modules over a finite-dimensional simple Lie algebra.
//!
//! The input is a level and the list of highest weights of the simple
//! highest-weight modules over a quotient of the enveloping algebra (for
//! instance the Zhu algebra of a simple affine vertex algebra). The output
//! is a [`ClassificationReport`]: every standard parabolic family and
//! coherent family those modules generate, with central weights, Casimir
//! eigenvalues, small Weyl groups and the number of Weyl-group twists.
//!
//! All arithmetic is exact over the rationals.
//!
//! ```
//! use weightfam_core::{classify, HighestWeightInput, RootSystem, Weight, rational::frac};
//!
//! let sl3 = RootSystem::new("A2".parse().unwrap());
//! let inputs = vec![
//!     HighestWeightInput::new("0", Weight::zero(2)),
//!     HighestWeightInput::new("L1", Weight::new(vec![frac(-3, 2), frac(0, 1)])),
//!     HighestWeightInput::new("L2", Weight::new(vec![frac(0, 1), frac(-3, 2)])),
//!     HighestWeightInput::new("L3", Weight::new(vec![frac(-1, 2), frac(-1, 2)])),
//! ];
//! let report = classify(&sl3, &frac(-3, 2), &inputs, 1_000_000).unwrap();
//! assert_eq!(report.totals.parabolic, 6);
//! assert_eq!(report.totals.coherent, 1);
//! ```

pub mod bounded;
pub mod classify;
pub mod error;
mod linalg;
pub mod parabolic;
pub mod rational;
pub mod report;
pub mod rootsys;
pub mod smallweyl;

pub use bounded::ComponentClass;
pub use classify::{
    classify, family_key, sl2_admissible, ClassificationReport, FamilyRecord, HighestWeightInput, HighestWeightSummary,
    Totals,
};
pub use error::{Error, Result};
pub use parabolic::{levi, LeviDecomposition, SimpleIdeal};
pub use rational::Q;
pub use rootsys::{AlgebraType, LevelDiagnostic, RootSystem, Series, Weight, WeightClass, DEFAULT_ORBIT_CAP};
pub use smallweyl::SmallWeylGroup;
