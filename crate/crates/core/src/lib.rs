//! A laboratory for finite commutative rings: build small rings from ring
//! expressions, enumerate their ideals, decide nil-prime style ideal classes,
//! and check the theorems relating those classes by exhaustive search.
//!
//! ```
//! use nilring::{parse, Classifier, FiniteRing, Ideal};
//!
//! let ring = FiniteRing::build(&parse("Z8").unwrap()).unwrap();
//! let c = Classifier::new(&ring).unwrap();
//! let zero = Ideal::zero(&ring);
//! assert!(!c.is_prime(&zero).unwrap());
//! assert_eq!(c.nil_prime_witnesses(&zero).unwrap(), vec![4]);
//! ```

pub mod catalog;
pub mod classify;
pub mod error;
pub mod expr;
pub mod ideal;
pub mod ring;
pub mod theorems;

pub use catalog::{default_catalog, parse_catalog, CatalogError};
pub use classify::{ClassificationReport, Classifier, Witnesses};
pub use error::{Error, ParseError, Result};
pub use expr::{parse, render};
pub use ideal::{all_ideals, generate, principal, Ideal, IdealLattice};
pub use ring::{Element, FiniteRing, QuotientMap, RingDescriptor, DEFAULT_SIZE_CAP};
pub use theorems::{
    find_separators, revalidate, verify_all, verify_catalog, Counterexample, NilMaximalSummary,
    SeparatorInstance, SeparatorResult, Status, TheoremEntry, TheoremReport, SEPARATOR_PAIRS,
};
