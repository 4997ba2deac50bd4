pub mod basis;
pub mod cantor;
pub mod cli;
pub mod cuntz;
pub mod entropy;
pub mod error;
pub mod function_space;
pub mod numeric;
pub mod verify;

pub use error::{Error, Result};
