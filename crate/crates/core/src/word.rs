//! Vertex labels of Sierpinski graphs: length-t words over the base
//! graph's vertex alphabet, with a canonical integer encoding.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("word length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("letter {letter} out of range for alphabet size {alphabet}")]
    LetterOutOfRange { letter: u32, alphabet: usize },
    #[error("empty word: length must be at least 1")]
    Empty,
}

/// A word `u1 u2 .. ut` over the alphabet `0..n`.
///
/// The canonical code is big-endian base-n: `sum(u_i * n^(t-i))`, a
/// bijection between length-t words and `0..n^t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
}

impl Word {
    pub fn new(letters: Vec<u32>, alphabet: usize) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::Empty);
        }
        for &l in &letters {
            if l as usize >= alphabet {
                return Err(WordError::LetterOutOfRange { letter: l, alphabet });
            }
        }
        Ok(Word { letters })
    }

    /// Decodes a canonical code into the length-t word it represents.
    pub fn from_code(code: u64, alphabet: usize, t: u32) -> Self {
        let n = alphabet as u64;
        let mut letters = vec![0u32; t as usize];
        let mut rest = code;
        for slot in letters.iter_mut().rev() {
            *slot = (rest % n) as u32;
            rest /= n;
        }
        debug_assert_eq!(rest, 0, "code {code} exceeds alphabet^t");
        Word { letters }
    }

    pub fn code(&self, alphabet: usize) -> u64 {
        let n = alphabet as u64;
        self.letters.iter().fold(0u64, |acc, &l| acc * n + l as u64)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn last(&self) -> u32 {
        *self.letters.last().expect("words are non-empty")
    }

    /// The constant word `x^t`.
    pub fn constant(letter: u32, t: u32) -> Self {
        Word { letters: vec![letter; t as usize] }
    }

    pub fn is_constant(&self) -> bool {
        self.letters.iter().all(|&l| l == self.letters[0])
    }

    /// `self` followed by `letter`.
    pub fn append(&self, letter: u32) -> Self {
        let mut letters = self.letters.clone();
        letters.push(letter);
        Word { letters }
    }

    /// Concatenated-digit display, shifted by one when `one_indexed`.
    pub fn display(&self, one_indexed: bool) -> String {
        let off = u32::from(one_indexed);
        self.letters.iter().map(|&l| (l + off).to_string()).collect()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.display(false))
    }
}
