pub mod geometry;
pub mod drawing;
pub mod plycore;
pub mod format;
pub mod constructions;
pub mod analysis;
pub mod search;
