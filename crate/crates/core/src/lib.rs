//! Sliding-window BP-OSD decoding of quantum LDPC codes under phenomenological
//! noise, with Monte Carlo memory-lifetime estimation.

pub mod error;
pub mod bposd;
pub mod cli;
pub mod codes;
pub mod gf2;
pub mod lifetime;
pub mod noise;
pub mod window;

pub use error::{Error, Result};
