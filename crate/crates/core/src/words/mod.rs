//! Alphabets, words, uniform morphisms and codings.
//!
//! A [`UniformMorphism`] stores its images as indices into its [`Alphabet`], so
//! fixed-point letters can be produced from the base-`d` digit recurrence
//! `v(n) = φ(v(⌊n/d⌋))[n mod d]` without materialising `φ^k(a)`.

mod builtin;

use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Deref;

use crate::error::{Error, Result};

pub use builtin::{
    build_general_morphism, builtin_morphism, cantor, dekking6, dekking6_coding, dekking8,
    dekking8_coding, lambda, thue_morse as thue_morse_morphism, thue_morse_coding, BuiltinMorphism,
    DekkingLetter, Symbol, BUILTIN_NAMES,
};

/// Anything usable as a letter.
pub trait Letter: Copy + Eq + Hash + Debug + Display {}

impl<L: Copy + Eq + Hash + Debug + Display> Letter for L {}

/// A finite string of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word<L>(Vec<L>);

impl<L> Word<L> {
    pub fn new(letters: Vec<L>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn into_inner(self) -> Vec<L> {
        self.0
    }

    pub fn as_slice(&self) -> &[L] {
        &self.0
    }
}

impl<L> Deref for Word<L> {
    type Target = [L];

    fn deref(&self) -> &[L] {
        &self.0
    }
}

impl<L> From<Vec<L>> for Word<L> {
    fn from(letters: Vec<L>) -> Self {
        Word(letters)
    }
}

impl<L> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<L> IntoIterator for Word<L> {
    type Item = L;
    type IntoIter = std::vec::IntoIter<L>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, L> IntoIterator for &'a Word<L> {
    type Item = &'a L;
    type IntoIter = std::slice::Iter<'a, L>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// An explicitly declared, ordered, duplicate-free set of letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet<L: Letter> {
    letters: Vec<L>,
    index: HashMap<L, usize>,
}

impl<L: Letter> Alphabet<L> {
    pub fn new(letters: impl IntoIterator<Item = L>) -> Result<Self> {
        let letters: Vec<L> = letters.into_iter().collect();
        let mut index = HashMap::with_capacity(letters.len());
        for (i, &letter) in letters.iter().enumerate() {
            if index.insert(letter, i).is_some() {
                return Err(Error::DuplicateLetter(letter.to_string()));
            }
        }
        Ok(Alphabet { letters, index })
    }

    pub fn letters(&self) -> &[L] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, letter: &L) -> bool {
        self.index.contains_key(letter)
    }

    pub fn index_of(&self, letter: &L) -> Result<usize> {
        self.index
            .get(letter)
            .copied()
            .ok_or_else(|| Error::UnknownLetter(letter.to_string()))
    }

    /// Checks that every letter of `word` belongs to the alphabet.
    pub fn check(&self, word: &[L]) -> Result<()> {
        word.iter().try_for_each(|l| self.index_of(l).map(drop))
    }

    /// True when every letter prints as a single character.
    pub fn is_single_char(&self) -> bool {
        self.letters
            .iter()
            .all(|l| l.to_string().chars().count() == 1)
    }

    /// Text form of a word: letters concatenated for single-character
    /// alphabets, separated by single spaces otherwise.
    pub fn render(&self, word: &[L]) -> String {
        let sep = if self.is_single_char() { "" } else { " " };
        word.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// A morphism of the free monoid whose images all have the same length `d ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformMorphism<L: Letter> {
    alphabet: Alphabet<L>,
    images: Vec<Word<L>>,
    image_indices: Vec<Vec<usize>>,
    length: usize,
}

impl<L: Letter> UniformMorphism<L> {
    /// Builds a morphism from `(letter, image)` rules; the alphabet is the
    /// list of rule letters in order.
    pub fn new(rules: impl IntoIterator<Item = (L, Vec<L>)>) -> Result<Self> {
        let (letters, images): (Vec<L>, Vec<Vec<L>>) = rules.into_iter().unzip();
        let alphabet = Alphabet::new(letters)?;
        if alphabet.is_empty() {
            return Err(Error::Domain("a morphism needs a nonempty alphabet".into()));
        }
        let length = images[0].len();
        if length == 0 {
            return Err(Error::Domain("uniform length must be positive".into()));
        }
        let mut image_indices = Vec::with_capacity(images.len());
        for (letter, image) in alphabet.letters().iter().zip(&images) {
            if image.len() != length {
                return Err(Error::NotUniform {
                    letter: letter.to_string(),
                    expected: length,
                    found: image.len(),
                });
            }
            image_indices.push(
                image
                    .iter()
                    .map(|l| alphabet.index_of(l))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Ok(UniformMorphism {
            alphabet,
            images: images.into_iter().map(Word::new).collect(),
            image_indices,
            length,
        })
    }

    pub fn alphabet(&self) -> &Alphabet<L> {
        &self.alphabet
    }

    /// The uniform length `d`.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn image(&self, letter: &L) -> Result<&Word<L>> {
        Ok(&self.images[self.alphabet.index_of(letter)?])
    }

    /// `(letter, image)` pairs in alphabet order.
    pub fn rules(&self) -> impl Iterator<Item = (L, &Word<L>)> {
        self.alphabet.letters().iter().copied().zip(&self.images)
    }

    pub fn apply(&self, word: &[L]) -> Result<Word<L>> {
        let mut out = Vec::with_capacity(word.len() * self.length);
        for letter in word {
            out.extend_from_slice(self.image(letter)?);
        }
        Ok(Word(out))
    }

    /// `φ^k(word)` by repeated application.
    pub fn iterate(&self, word: &[L], k: u32) -> Result<Word<L>> {
        let mut current = Word(word.to_vec());
        for _ in 0..k {
            current = self.apply(&current)?;
        }
        Ok(current)
    }

    pub fn is_prolongable(&self, seed: &L) -> bool {
        self.image(seed).is_ok_and(|image| image[0] == *seed)
    }

    fn seed_index(&self, seed: &L) -> Result<usize> {
        let idx = self.alphabet.index_of(seed)?;
        if self.image_indices[idx][0] != idx {
            return Err(Error::NotProlongable(seed.to_string()));
        }
        Ok(idx)
    }

    /// The first `n` letters of the fixed point starting with `seed`.
    pub fn fixed_point_prefix(&self, seed: &L, n: usize) -> Result<Word<L>> {
        Ok(self
            .fixed_point_indices(seed, n)?
            .into_iter()
            .map(|i| self.alphabet.letters[i])
            .collect())
    }

    fn fixed_point_indices(&self, seed: &L, n: usize) -> Result<Vec<usize>> {
        let seed = self.seed_index(seed)?;
        let d = self.length;
        let mut out = Vec::with_capacity(n);
        if n > 0 {
            out.push(seed);
        }
        for pos in 1..n {
            let parent = out[pos / d];
            out.push(self.image_indices[parent][pos % d]);
        }
        Ok(out)
    }

    /// Lazily streams the fixed point starting with `seed`.
    ///
    /// The iterator walks the base-`d` digits of each position from the most
    /// significant down, so it holds only `O(log n)` state.
    pub fn fixed_point_iter(&self, seed: &L) -> Result<FixedPointIter<'_, L>> {
        let seed = self.seed_index(seed)?;
        Ok(FixedPointIter {
            morphism: self,
            seed,
            position: 0,
        })
    }

    /// The letter at `position` of the fixed point starting with `seed`.
    pub fn fixed_point_letter(&self, seed: &L, position: u64) -> Result<L> {
        let seed = self.seed_index(seed)?;
        Ok(self.alphabet.letters[self.letter_index_at(seed, position)])
    }

    fn letter_index_at(&self, seed: usize, position: u64) -> usize {
        let d = self.length as u64;
        let mut digits = Vec::new();
        let mut rest = position;
        while rest > 0 {
            digits.push((rest % d) as usize);
            rest /= d;
        }
        digits
            .iter()
            .rev()
            .fold(seed, |letter, &digit| self.image_indices[letter][digit])
    }

    /// Relabels every letter through `f`, which must be injective.
    pub fn map_letters<M: Letter>(&self, f: impl Fn(L) -> M) -> Result<UniformMorphism<M>> {
        UniformMorphism::new(
            self.rules()
                .map(|(l, image)| (f(l), image.iter().map(|&x| f(x)).collect())),
        )
    }

    pub fn render(&self, word: &[L]) -> String {
        self.alphabet.render(word)
    }
}

pub struct FixedPointIter<'a, L: Letter> {
    morphism: &'a UniformMorphism<L>,
    seed: usize,
    position: u64,
}

impl<L: Letter> Iterator for FixedPointIter<'_, L> {
    type Item = L;

    fn next(&mut self) -> Option<L> {
        let idx = self.morphism.letter_index_at(self.seed, self.position);
        self.position += 1;
        Some(self.morphism.alphabet.letters[idx])
    }
}

/// A letterwise map from one alphabet to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding<L: Letter, M: Letter> {
    source: Alphabet<L>,
    targets: Vec<M>,
}

impl<L: Letter, M: Letter> Coding<L, M> {
    pub fn new(pairs: impl IntoIterator<Item = (L, M)>) -> Result<Self> {
        let (letters, targets): (Vec<L>, Vec<M>) = pairs.into_iter().unzip();
        Ok(Coding {
            source: Alphabet::new(letters)?,
            targets,
        })
    }

    pub fn source(&self) -> &Alphabet<L> {
        &self.source
    }

    /// The distinct target letters, in first-appearance order.
    pub fn target_alphabet(&self) -> Alphabet<M> {
        let mut seen = Vec::new();
        for t in &self.targets {
            if !seen.contains(t) {
                seen.push(*t);
            }
        }
        Alphabet::new(seen).expect("deduplicated")
    }

    pub fn get(&self, letter: &L) -> Result<M> {
        Ok(self.targets[self.source.index_of(letter)?])
    }

    pub fn apply(&self, word: &[L]) -> Result<Word<M>> {
        word.iter().map(|l| self.get(l)).collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (L, M)> + '_ {
        self.source
            .letters()
            .iter()
            .copied()
            .zip(self.targets.iter().copied())
    }
}

impl<L: Letter> Coding<L, L> {
    pub fn identity(alphabet: &Alphabet<L>) -> Self {
        Coding {
            source: alphabet.clone(),
            targets: alphabet.letters().to_vec(),
        }
    }
}
