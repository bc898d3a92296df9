pub mod cox;
pub mod cyclotomic;
pub mod ncpoly;
pub mod ore;
pub mod picard;
pub mod thcr;
pub mod verify;
