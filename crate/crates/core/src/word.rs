//! Free words over a finite alphabet of single-letter generators.
//!
//! Generators are lowercase ASCII letters; the inverse of a generator is
//! written as the same letter in uppercase, and the identity prints as `1`.
//! A [`FreeWord`] is always freely reduced.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(generator: usize, sign: Sign) -> Self {
        Letter { generator, sign }
    }

    pub fn pos(generator: usize) -> Self {
        Letter::new(generator, Sign::Pos)
    }

    pub fn neg(generator: usize) -> Self {
        Letter::new(generator, Sign::Neg)
    }

    pub fn inverse(self) -> Self {
        Letter::new(self.generator, self.sign.flip())
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

/// Ordered generator names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<char>,
}

impl Alphabet {
    pub fn new(names: Vec<char>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::BadAlphabet("alphabet must have at least one generator".into()));
        }
        for (i, &c) in names.iter().enumerate() {
            if !c.is_ascii_lowercase() {
                return Err(Error::BadAlphabet(format!("generator name {c:?} is not a lowercase letter")));
            }
            if names[..i].contains(&c) {
                return Err(Error::BadAlphabet(format!("generator name {c:?} repeated")));
            }
        }
        Ok(Alphabet { names })
    }

    /// The first `m` letters `a, b, c, ...`.
    pub fn standard(m: usize) -> Result<Self> {
        if m > 26 {
            return Err(Error::BadAlphabet(format!("{m} generators exceed the 26 available letters")));
        }
        Alphabet::new((0..m).map(|i| (b'a' + i as u8) as char).collect())
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[char] {
        &self.names
    }

    pub fn name(&self, generator: usize) -> char {
        self.names[generator]
    }

    pub fn index_of(&self, name: char) -> Option<usize> {
        self.names.iter().position(|&c| c == name)
    }

    pub fn letter_char(&self, letter: Letter) -> char {
        let c = self.names[letter.generator];
        match letter.sign {
            Sign::Pos => c,
            Sign::Neg => c.to_ascii_uppercase(),
        }
    }

    pub fn contains_word(&self, w: &FreeWord) -> bool {
        w.letters.iter().all(|l| l.generator < self.size())
    }

    pub fn check_word(&self, w: &FreeWord) -> Result<()> {
        if self.contains_word(w) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Freely reduces a raw letter sequence, rejecting letters outside the alphabet.
    pub fn free_reduce(&self, raw: &[Letter]) -> Result<FreeWord> {
        if let Some(l) = raw.iter().find(|l| l.generator >= self.size()) {
            return Err(Error::InvalidLetter { generator: l.generator, size: self.size() });
        }
        Ok(FreeWord::reduce(raw.iter().copied()))
    }

    pub fn concat_reduce(&self, u: &FreeWord, v: &FreeWord) -> Result<FreeWord> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(u * v)
    }

    /// Parses the word syntax: lowercase generator, uppercase inverse,
    /// `1` or the empty string for the identity.
    pub fn parse_word(&self, text: &str) -> Result<FreeWord> {
        if text == "1" {
            return Ok(FreeWord::identity());
        }
        let mut raw = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let letter = if c.is_ascii_lowercase() {
                self.index_of(c).map(Letter::pos)
            } else if c.is_ascii_uppercase() {
                self.index_of(c.to_ascii_lowercase()).map(Letter::neg)
            } else {
                None
            };
            match letter {
                Some(l) => raw.push(l),
                None => return Err(Error::Parse { position, message: format!("unexpected character {c:?}") }),
            }
        }
        Ok(FreeWord::reduce(raw))
    }

    pub fn format_word(&self, w: &FreeWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters.iter().map(|&l| self.letter_char(l)).collect()
    }

    pub fn display<'a>(&'a self, w: &'a FreeWord) -> WordDisplay<'a> {
        WordDisplay { alphabet: self, word: w }
    }
}

pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a FreeWord,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(self.word))
    }
}

/// A freely reduced word. Generator indices are not bounded by any alphabet
/// here; words over the fresh basis symbols of a rewritten presentation use
/// the same type.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    /// Single-pass stack reduction; the result is the unique reduced form.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Self {
        let mut letters: Vec<Letter> = Vec::new();
        for l in raw {
            match letters.last() {
                Some(&top) if top.is_inverse_of(l) => {
                    letters.pop();
                }
                _ => letters.push(l),
            }
        }
        FreeWord { letters }
    }

    pub fn generator(g: usize) -> Self {
        FreeWord { letters: vec![Letter::pos(g)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| !p[0].is_inverse_of(p[1]))
    }

    pub fn inverse(&self) -> Self {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        FreeWord::reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn push(&self, letter: Letter) -> Self {
        FreeWord::reduce(self.letters.iter().copied().chain(std::iter::once(letter)))
    }

    /// The prefix of length `k`. A prefix of a reduced word is reduced.
    pub fn prefix(&self, k: usize) -> Self {
        FreeWord { letters: self.letters[..k].to_vec() }
    }

    /// All proper initial segments, from the empty word up to the word minus
    /// its last letter.
    pub fn prefixes(&self) -> Result<Vec<FreeWord>> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok((0..self.len()).map(|k| self.prefix(k)).collect())
    }

    pub fn starts_with(&self, other: &FreeWord) -> bool {
        self.letters.starts_with(&other.letters)
    }

    /// Cyclically reduced: first and last letters are not mutually inverse.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) if self.len() > 1 => !a.is_inverse_of(b),
            _ => true,
        }
    }

    /// Applies a letter substitution letter by letter and reduces.
    pub fn map_letters<F: FnMut(Letter) -> Letter>(&self, f: F) -> Self {
        FreeWord::reduce(self.letters.iter().copied().map(f))
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.concat(rhs)
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        FreeWord::reduce(iter)
    }
}
