pub mod cli;
pub mod exact;
pub mod lazard;
pub mod monomial;
pub mod plane;
pub mod regularity;
pub mod semigroup;
