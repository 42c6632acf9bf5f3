//! Domino ideals of 2×n tilings.
//!
//! Every domino tiling of the 2×n board is read as a squarefree monomial in
//! the variables `x_1 < … < x_{2n-2} < y_1 < … < y_n` (horizontal dominoes in
//! the top row are `x_1..x_{n-1}`, in the bottom row `x_n..x_{2n-2}`, vertical
//! dominoes are `y_k`). The crate builds the ideal `I_n` they generate and
//! computes its graded Betti numbers exactly, by two independent routes:
//!
//! * [`betti::betti_hochster`]: sum of reduced homology of complements of
//!   induced subcollections of the facet complex;
//! * [`betti::betti_koszul`]: reduced homology of the upper Koszul simplicial
//!   complex at every squarefree multidegree.
//!
//! Homology is computed from boundary matrices, over ℤ via a Smith normal
//! form on unbounded integers and over ℚ or 𝔽_p via exact elimination.
//! The [`ideal::splitting`] and [`recursion`] modules check the
//! Eliahou–Kervaire splitting `I_n = V_n + U_n` and the closed recursion it
//! yields for `β_{i,j}(I_n)`.
//!
//! ```
//! use domino_ideals::{betti, homology::FieldSpec, tiling};
//!
//! let ideal = tiling::domino_ideal(3).unwrap();
//! let table = betti::betti_koszul(&ideal, FieldSpec::Rationals).graded;
//! assert_eq!(table.get(2, 7), 1);
//! assert_eq!(betti::projective_dimension(&table).unwrap(), 2);
//! assert_eq!(betti::regularity(&table).unwrap(), 5);
//! ```

pub mod betti;
pub mod cli;
pub mod error;
pub mod homology;
pub mod ideal;
pub mod recursion;
pub mod simplicial;
pub mod tiling;

pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, SquarefreeMonomial, Universe, VariableId, VariableKind};
pub use simplicial::SimplicialComplex;
