pub mod classify;
pub mod cli;
pub mod degeneration;
pub mod error;
pub mod fforacle;
pub mod linalg;
pub mod melnikov;
pub mod normalform;
pub mod olp;
pub mod quiver;
pub mod sampling;

pub use error::{Error, Result};
