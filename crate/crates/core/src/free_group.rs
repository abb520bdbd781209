//! Reduced words and automorphisms of finitely generated free groups.
//!
//! Words are stored freely reduced at all times, so equality is plain
//! sequence comparison. Letters are encoded as nonzero signed integers:
//! `+i` is the generator `x_i` (1-based), `-i` its inverse.

use std::fmt;

use thiserror::Error;

/// Hard cap on word length. Automorphism images can grow exponentially
/// under composition; we fail loudly instead of thrashing.
pub const MAX_WORD_LEN: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeGroupError {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i64, rank: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("word length {len} exceeds the cap of {cap} letters")]
    WordTooLong { len: usize, cap: usize },
    #[error("expected {rank} generator images, got {found}")]
    WrongImageCount { rank: usize, found: usize },
    #[error("images do not define a mutually inverse automorphism pair")]
    NotInvertible,
}

/// A freely reduced word in the free group of a fixed rank.
///
/// The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<i32>,
}

impl Word {
    /// The identity element of the rank-`rank` free group.
    pub fn identity(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// The generator `x_index` (1-based).
    pub fn generator(rank: usize, index: usize) -> Result<Self, FreeGroupError> {
        Self::from_letters(rank, &[index as i64 as i32])
    }

    /// Freely reduces a raw letter sequence. Idempotent: feeding a reduced
    /// word back in returns it unchanged.
    pub fn from_letters(rank: usize, letters: &[i32]) -> Result<Self, FreeGroupError> {
        let mut reduced: Vec<i32> = Vec::with_capacity(letters.len());
        for &l in letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > rank {
                return Err(FreeGroupError::IndexOutOfRange { index: l as i64, rank });
            }
            push_reduced(&mut reduced, l);
        }
        if reduced.len() > MAX_WORD_LEN {
            return Err(FreeGroupError::WordTooLong { len: reduced.len(), cap: MAX_WORD_LEN });
        }
        Ok(Word { rank, letters: reduced })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The reduced letter sequence (signed 1-based generator indices).
    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced concatenation `self · other`.
    pub fn mul(&self, other: &Word) -> Result<Word, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        if letters.len() > MAX_WORD_LEN {
            return Err(FreeGroupError::WordTooLong { len: letters.len(), cap: MAX_WORD_LEN });
        }
        Ok(Word { rank: self.rank, letters })
    }

    /// Reverses the sequence and flips signs; `w · w⁻¹` is the identity.
    pub fn inverse(&self) -> Word {
        let letters = self.letters.iter().rev().map(|&l| -l).collect();
        Word { rank: self.rank, letters }
    }

    pub fn pow(&self, exp: i64) -> Result<Word, FreeGroupError> {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity(self.rank);
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }
}

fn push_reduced(letters: &mut Vec<i32>, l: i32) {
    if letters.last() == Some(&-l) {
        letters.pop();
    } else {
        letters.push(l);
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(rank {}, {})", self.rank, self)
    }
}

impl fmt::Display for Word {
    /// Writes the word in the CLI grammar (`x[1]*x[2]^-1`), with runs of a
    /// letter collapsed into powers. The identity word prints as `1`, which
    /// the grammar itself cannot express.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            let exp = if l < 0 { -(run as i64) } else { run as i64 };
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if exp == 1 {
                write!(f, "x[{}]", l.unsigned_abs())?;
            } else {
                write!(f, "x[{}]^{}", l.unsigned_abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// An automorphism of a free group, given by generator images.
///
/// Both the images and the images of the inverse automorphism are stored,
/// and the public constructor checks that the two compose to the identity
/// in both orders. Inverting is then free and every value in circulation
/// is a certified automorphism.
#[derive(Clone)]
pub struct FreeAut {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl FreeAut {
    pub fn identity(rank: usize) -> Self {
        let images: Vec<Word> = (1..=rank)
            .map(|i| Word::generator(rank, i).expect("generator in range"))
            .collect();
        FreeAut { rank, images: images.clone(), inverse_images: images }
    }

    /// Builds an automorphism from generator images together with the images
    /// of its inverse, verifying that the pair is mutually inverse.
    pub fn new(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(FreeGroupError::WrongImageCount { rank, found: inverse_images.len() });
        }
        for w in images.iter().chain(inverse_images.iter()) {
            if w.rank != rank {
                return Err(FreeGroupError::RankMismatch { left: rank, right: w.rank });
            }
        }
        let aut = FreeAut { rank, images, inverse_images };
        if !aut.inverse_pair_checks_out()? {
            return Err(FreeGroupError::NotInvertible);
        }
        Ok(aut)
    }

    fn inverse_pair_checks_out(&self) -> Result<bool, FreeGroupError> {
        for i in 1..=self.rank {
            let x = Word::generator(self.rank, i)?;
            let fwd = apply_images(&self.inverse_images, &self.images[i - 1])?;
            let bwd = apply_images(&self.images, &self.inverse_images[i - 1])?;
            if fwd != x || bwd != x {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of `x_index` (1-based).
    pub fn image(&self, index: usize) -> &Word {
        &self.images[index - 1]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters.len() == 1 && w.letters[0] == (i + 1) as i32)
    }

    /// Applies the automorphism: substitutes generator images and reduces.
    /// Homomorphic: `apply(uv) = apply(u)·apply(v)`.
    pub fn apply(&self, w: &Word) -> Result<Word, FreeGroupError> {
        if w.rank != self.rank {
            return Err(FreeGroupError::RankMismatch { left: self.rank, right: w.rank });
        }
        apply_images(&self.images, w)
    }

    /// `self` then `g`, composing left to right: the image of `x_i` is
    /// `g.apply(self.image(i))`, so `compose(f, g).apply(w) = g.apply(f.apply(w))`.
    pub fn compose(&self, g: &FreeAut) -> Result<FreeAut, FreeGroupError> {
        if self.rank != g.rank {
            return Err(FreeGroupError::RankMismatch { left: self.rank, right: g.rank });
        }
        let images = self
            .images
            .iter()
            .map(|w| apply_images(&g.images, w))
            .collect::<Result<Vec<_>, _>>()?;
        // (f then g)⁻¹ = g⁻¹ then f⁻¹
        let inverse_images = g
            .inverse_images
            .iter()
            .map(|w| apply_images(&self.inverse_images, w))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FreeAut { rank: self.rank, images, inverse_images })
    }

    pub fn inverse(&self) -> FreeAut {
        FreeAut {
            rank: self.rank,
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    pub fn pow(&self, exp: i64) -> Result<FreeAut, FreeGroupError> {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeAut::identity(self.rank);
        for _ in 0..exp.unsigned_abs() {
            out = out.compose(&base)?;
        }
        Ok(out)
    }
}

fn apply_images(images: &[Word], w: &Word) -> Result<Word, FreeGroupError> {
    let rank = images.len();
    let mut letters: Vec<i32> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            for &m in &img.letters {
                push_reduced(&mut letters, m);
            }
        } else {
            for &m in img.letters.iter().rev() {
                push_reduced(&mut letters, -m);
            }
        }
        if letters.len() > MAX_WORD_LEN {
            return Err(FreeGroupError::WordTooLong { len: letters.len(), cap: MAX_WORD_LEN });
        }
    }
    Ok(Word { rank, letters })
}

/// Equality of automorphisms is equality of reduced generator images.
/// The inverse is uniquely determined, so it does not participate.
impl PartialEq for FreeAut {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for FreeAut {}

impl fmt::Debug for FreeAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAut(rank {}", self.rank)?;
        for (i, w) in self.images.iter().enumerate() {
            write!(f, ", x[{}] -> {}", i + 1, w)?;
        }
        write!(f, ")")
    }
}

/// Uniform random freely reduced word of exactly `len` letters.
pub fn random_reduced_word<R: rand::Rng + ?Sized>(rng: &mut R, rank: usize, len: usize) -> Word {
    assert!(rank >= 1, "need at least one generator");
    let mut letters: Vec<i32> = Vec::with_capacity(len);
    for _ in 0..len {
        loop {
            let idx = rng.random_range(1..=rank as i32);
            let l = if rng.random_bool(0.5) { idx } else { -idx };
            if letters.last() != Some(&-l) {
                letters.push(l);
                break;
            }
        }
    }
    Word { rank, letters }
}
