use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    BadAlphabet(String),
    #[error("letter refers to generator {generator} but the alphabet has {size} generators")]
    InvalidLetter { generator: usize, size: usize },
    #[error("word uses generators outside the alphabet")]
    AlphabetMismatch,
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid permutation: {0}")]
    BadPerm(String),
    #[error("image group exceeds the ceiling of {0} elements")]
    ImageTooLarge(usize),
    #[error("coset {coset} out of range for a table with {index} cosets")]
    BadCoset { coset: usize, index: usize },
    #[error("invalid coset table: {0}")]
    BadTable(String),
    #[error("invalid presentation: {0}")]
    BadPresentation(String),
    #[error("seed is not prefix-closed: missing {0}")]
    BadSeed(String),
    #[error("seed words {0} and {1} trace to the same coset")]
    SeedCollision(String, String),
    #[error("word is not in the subgroup")]
    NotInSubgroup,
    #[error("initial segments of the word are not separated by the table")]
    PrefixesNotSeparated,
    #[error("bound out of range: {0}")]
    BadBound(String),
    #[error("genus {0} out of range")]
    BadGenus(usize),
    #[error("relator {relator} is not killed at coset {coset}")]
    RelatorNotKilled { relator: String, coset: usize },
    #[error("malformed certificate: {0}")]
    Schema(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
