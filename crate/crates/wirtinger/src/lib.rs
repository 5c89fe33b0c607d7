//! Wirtinger presentations of diagram complements, peripheral words of
//! circle components and Tietze simplification.

mod build;
mod presentation;
mod tietze;
pub mod word;

pub use build::{arcs, crossing_signs, peripheral_words, presentation_from_diagram, Arcs};
pub use presentation::{integer_rank, Peripheral, Presentation};
pub use tietze::tietze_simplify;
pub use word::{Letter, Word};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WirtingerError {
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("component {0} has trivalent vertices")]
    NotCircle(usize),
    #[error("component {0} not found")]
    NoComponent(usize),
}
