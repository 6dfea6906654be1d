//! Exact arithmetic for graduated orders over one- and two-dimensional local
//! rings, group-algebra idempotents and central conductor exponents of
//! completed group rings.

pub mod cyclotomic;
pub mod formats;
pub mod group;
pub mod ideal;
pub mod iwasawa;
pub mod order;

pub use ideal::{Backend, FracIdeal, IdealError, Monomial};
pub use order::{BlockSizes, GraduatedOrder, IdealMatrix, OrderError};
pub use group::{CharacterTable, GroupError};
pub use iwasawa::{ChiProfile, IwasawaError};
