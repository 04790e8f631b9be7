pub mod cli;
pub mod error;
pub mod families;
pub mod fraenkel;
pub mod geometry;
pub mod optim;
pub mod render;
pub mod special;
pub mod symmetrization;

pub use error::{Error, Result};
