use std::fmt;

use crate::error::{Error, Result};

/// A finite sequence of letter indices, acting left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// Renders with letter names `a`, `b`, ... when the alphabet has at most
    /// 26 letters, otherwise as space-separated indices. The empty word
    /// renders as an empty string.
    pub fn render(&self, letters: usize) -> String {
        if letters <= 26 {
            self.0.iter().map(|&a| letter_name(a)).collect()
        } else {
            self.0
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }

    /// Inverse of [`Word::render`].
    pub fn parse(text: &str, letters: usize) -> Result<Word> {
        let bad = |message: String| Error::Parse { line: 1, message };
        let word: Vec<usize> = if letters <= 26 {
            text.trim()
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| {
                    if c.is_ascii_lowercase() {
                        Ok(c as usize - 'a' as usize)
                    } else {
                        Err(bad(format!("unexpected character {c:?} in word")))
                    }
                })
                .collect::<Result<_>>()?
        } else {
            text.split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| bad(format!("bad letter index {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        if let Some(&a) = word.iter().find(|&&a| a >= letters) {
            return Err(Error::LetterOutOfRange { letter: a, letters });
        }
        Ok(Word(word))
    }
}

pub fn letter_name(letter: usize) -> char {
    debug_assert!(letter < 26);
    (b'a' + letter as u8) as char
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

impl FromIterator<usize> for Word {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        let k = self.0.iter().max().map_or(0, |m| m + 1);
        write!(f, "{}", self.render(k))
    }
}
