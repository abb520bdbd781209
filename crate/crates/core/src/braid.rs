//! Framed pure braid groups through the Artin action.
//!
//! A framed pure braid on `n` strands is a free-group automorphism (the
//! Artin action on `F_n`) plus an integer framing per strand. The Artin
//! representation is faithful, so equality of braids is equality of reduced
//! generator images; no rewriting theory is involved.
//!
//! Conventions, fixed once and certified by the lantern check itself:
//! the Artin generator acts by `x_k -> x_k x_{k+1} x_k⁻¹`, `x_{k+1} -> x_k`,
//! and maps compose left to right (a braid word acts letter by letter, top
//! to bottom).

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::free_group::{FreeAut, FreeGroupError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand index {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("need at least {min} strands, got {strands}")]
    TooFewStrands { strands: usize, min: usize },
    #[error("band twists are only supported on the full strand set 1..={strands}")]
    UnsupportedBand { strands: usize },
    #[error("pair twist needs i < j, got ({i}, {j})")]
    BadPair { i: usize, j: usize },
    #[error("operation requires the 3-strand group, got {strands} strands")]
    NotThreeStrands { strands: usize },
    #[error(transparent)]
    FreeGroup(#[from] FreeGroupError),
}

/// The Artin generator `σ_k` as an automorphism of `F_n`,
/// `1 <= k <= n-1`.
pub fn sigma(k: usize, n: usize) -> Result<FreeAut, BraidError> {
    if k < 1 || k + 1 > n {
        return Err(BraidError::StrandOutOfRange { index: k, strands: n });
    }
    let mut images = identity_images(n);
    let mut inverse_images = identity_images(n);
    let (ki, kj) = (k as i32, (k + 1) as i32);
    images[k - 1] = Word::from_letters(n, &[ki, kj, -ki])?;
    images[k] = Word::from_letters(n, &[ki])?;
    inverse_images[k - 1] = Word::from_letters(n, &[kj])?;
    inverse_images[k] = Word::from_letters(n, &[-kj, ki, kj])?;
    Ok(FreeAut::new(images, inverse_images)?)
}

fn identity_images(n: usize) -> Vec<Word> {
    (1..=n)
        .map(|i| Word::generator(n, i).expect("index within rank"))
        .collect()
}

/// Composes a word in the Artin generators (signed indices, left to right).
pub fn artin_word(letters: &[i32], n: usize) -> Result<FreeAut, BraidError> {
    let mut out = FreeAut::identity(n);
    for &l in letters {
        let s = sigma(l.unsigned_abs() as usize, n)?;
        let s = if l < 0 { s.inverse() } else { s };
        out = out.compose(&s)?;
    }
    Ok(out)
}

/// Does the automorphism fix the product word `x_1 x_2 ... x_n`?
/// Braid-group membership certificate.
pub fn fixes_product(aut: &FreeAut) -> bool {
    let n = aut.rank();
    let letters: Vec<i32> = (1..=n as i32).collect();
    let product = Word::from_letters(n, &letters).expect("product word in range");
    match aut.apply(&product) {
        Ok(image) => image == product,
        Err(_) => false,
    }
}

/// Does the automorphism send each `x_i` to a conjugate `w x_i w⁻¹`?
/// Pure-braid certificate: no strand permutation.
pub fn sends_generators_to_conjugates(aut: &FreeAut) -> bool {
    (1..=aut.rank()).all(|i| {
        let img = aut.image(i).letters();
        if img.len() % 2 != 1 {
            return false;
        }
        let mid = img.len() / 2;
        img[mid] == i as i32
            && img[..mid]
                .iter()
                .zip(img[mid + 1..].iter().rev())
                .all(|(&a, &b)| a == -b)
    })
}

/// A framed pure braid: Artin-action automorphism plus framing vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FramedBraid {
    aut: FreeAut,
    framing: Vec<i64>,
}

impl FramedBraid {
    pub fn identity(n: usize) -> Self {
        FramedBraid { aut: FreeAut::identity(n), framing: vec![0; n] }
    }

    pub(crate) fn from_parts(aut: FreeAut, framing: Vec<i64>) -> Self {
        debug_assert_eq!(aut.rank(), framing.len());
        debug_assert!(fixes_product(&aut), "braid certificate violated");
        debug_assert!(sends_generators_to_conjugates(&aut), "pure-braid certificate violated");
        FramedBraid { aut, framing }
    }

    pub fn strands(&self) -> usize {
        self.framing.len()
    }

    pub fn aut(&self) -> &FreeAut {
        &self.aut
    }

    pub fn framing(&self) -> &[i64] {
        &self.framing
    }

    /// `self` then `other`; framings add componentwise.
    pub fn mul(&self, other: &FramedBraid) -> Result<FramedBraid, BraidError> {
        if self.strands() != other.strands() {
            return Err(BraidError::StrandMismatch {
                left: self.strands(),
                right: other.strands(),
            });
        }
        let aut = self.aut.compose(&other.aut)?;
        let framing = self
            .framing
            .iter()
            .zip(&other.framing)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FramedBraid::from_parts(aut, framing))
    }

    pub fn inverse(&self) -> FramedBraid {
        FramedBraid {
            aut: self.aut.inverse(),
            framing: self.framing.iter().map(|f| -f).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Result<FramedBraid, BraidError> {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut out = FramedBraid::identity(self.strands());
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// True iff the braid commutes with every `τ_i` and every `τ_{ij}`,
    /// which generate the framed group.
    pub fn is_central(&self) -> Result<bool, BraidError> {
        let n = self.strands();
        // Framing twists have identity action and central framing, so they
        // commute with everything; check them anyway as stated.
        for i in 1..=n {
            let t = tau_frame(i, n)?;
            if self.mul(&t)? != t.mul(self)? {
                return Ok(false);
            }
        }
        for i in 1..=n {
            for j in (i + 1)..=n {
                let t = tau_pair(i, j, n)?;
                if self.mul(&t)? != t.mul(self)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `τ_i`: a +1 framing twist on strand `i`. Identity action, central.
pub fn tau_frame(i: usize, n: usize) -> Result<FramedBraid, BraidError> {
    if i < 1 || i > n {
        return Err(BraidError::StrandOutOfRange { index: i, strands: n });
    }
    let mut framing = vec![0; n];
    framing[i - 1] = 1;
    Ok(FramedBraid::from_parts(FreeAut::identity(n), framing))
}

/// `τ_{ij}`: a +1 band twist on strands `i < j`. The action is the pure
/// braid generator `A_{ij} = (σ_{j-1}···σ_{i+1}) σ_i² (σ_{i+1}⁻¹···σ_{j-1}⁻¹)`
/// and the band adds +1 framing to each contained strand.
pub fn tau_pair(i: usize, j: usize, n: usize) -> Result<FramedBraid, BraidError> {
    if i >= j {
        return Err(BraidError::BadPair { i, j });
    }
    if i < 1 || j > n {
        return Err(BraidError::StrandOutOfRange { index: j.max(i), strands: n });
    }
    let mut letters: Vec<i32> = Vec::with_capacity(2 * (j - i));
    for k in ((i + 1)..j).rev() {
        letters.push(k as i32);
    }
    letters.push(i as i32);
    letters.push(i as i32);
    for k in (i + 1)..j {
        letters.push(-(k as i32));
    }
    let aut = artin_word(&letters, n)?;
    let mut framing = vec![0; n];
    framing[i - 1] = 1;
    framing[j - 1] = 1;
    Ok(FramedBraid::from_parts(aut, framing))
}

/// `τ_{12…n}`: a +1 band twist on the full strand set. The action is the
/// full twist `Δ_n² = (σ_1···σ_{n-1})ⁿ`. Only the full band is supported.
pub fn tau_band(strands: &[usize], n: usize) -> Result<FramedBraid, BraidError> {
    let full: Vec<usize> = (1..=n).collect();
    if strands != full.as_slice() {
        return Err(BraidError::UnsupportedBand { strands: n });
    }
    Ok(tau_band_full(n)?)
}

fn tau_band_full(n: usize) -> Result<FramedBraid, BraidError> {
    let round: Vec<i32> = (1..n as i32).collect();
    let letters: Vec<i32> = std::iter::repeat_with(|| round.iter().copied())
        .take(n)
        .flatten()
        .collect();
    let aut = artin_word(&letters, n)?;
    Ok(FramedBraid::from_parts(aut, vec![1; n]))
}

/// Ordering of the pair-twist product in the generalized lantern identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairOrder {
    Lexicographic,
    ReverseLexicographic,
}

impl PairOrder {
    pub fn pairs(self, n: usize) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .collect();
        if self == PairOrder::ReverseLexicographic {
            pairs.reverse();
        }
        pairs
    }
}

impl fmt::Display for PairOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairOrder::Lexicographic => write!(f, "lex"),
            PairOrder::ReverseLexicographic => write!(f, "revlex"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LanternReport {
    pub strands: usize,
    pub order: PairOrder,
    pub holds: bool,
    pub framing_lhs: Vec<i64>,
    pub framing_rhs: Vec<i64>,
    /// Smallest generator index whose image differs between the sides.
    pub lowest_discrepancy: Option<usize>,
}

/// Checks `τ_{12…n} · Π τ_i^{n-2}  =  Π_{i<j} τ_{ij}` with the pair product
/// taken in the given order.
pub fn verify_lantern(n: usize, order: PairOrder) -> Result<LanternReport, BraidError> {
    if n < 2 {
        return Err(BraidError::TooFewStrands { strands: n, min: 2 });
    }
    let mut lhs = tau_band_full(n)?;
    for i in 1..=n {
        lhs = lhs.mul(&tau_frame(i, n)?.pow(n as i64 - 2)?)?;
    }
    let mut rhs = FramedBraid::identity(n);
    for (i, j) in order.pairs(n) {
        rhs = rhs.mul(&tau_pair(i, j, n)?)?;
    }
    let lowest_discrepancy =
        (1..=n).find(|&i| lhs.aut.image(i) != rhs.aut.image(i));
    let holds = lowest_discrepancy.is_none() && lhs.framing == rhs.framing;
    Ok(LanternReport {
        strands: n,
        order,
        holds,
        framing_lhs: lhs.framing,
        framing_rhs: rhs.framing,
        lowest_discrepancy,
    })
}

/// A generator letter of the framed braid alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidGen {
    /// `τ_i`, framing twist on one strand.
    Frame(usize),
    /// `τ_{ij}`, pair band twist, `i < j`.
    Pair(usize, usize),
    /// `τ_{12…n}`, band twist on the full strand set.
    Band,
}

/// A word in the framed generator alphabet with signed integer powers,
/// evaluated left to right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(BraidGen, i64)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(BraidGen, i64)>) -> Result<Self, BraidError> {
        for (gen, _) in &letters {
            match *gen {
                BraidGen::Frame(i) => {
                    if i < 1 || i > strands {
                        return Err(BraidError::StrandOutOfRange { index: i, strands });
                    }
                }
                BraidGen::Pair(i, j) => {
                    if i >= j {
                        return Err(BraidError::BadPair { i, j });
                    }
                    if i < 1 || j > strands {
                        return Err(BraidError::StrandOutOfRange { index: j, strands });
                    }
                }
                BraidGen::Band => {}
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(BraidGen, i64)] {
        &self.letters
    }

    pub fn eval(&self) -> Result<FramedBraid, BraidError> {
        let n = self.strands;
        let mut out = FramedBraid::identity(n);
        for &(gen, exp) in &self.letters {
            let b = match gen {
                BraidGen::Frame(i) => tau_frame(i, n)?,
                BraidGen::Pair(i, j) => tau_pair(i, j, n)?,
                BraidGen::Band => tau_band_full(n)?,
            };
            out = out.mul(&b.pow(exp)?)?;
        }
        Ok(out)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (pos, &(gen, exp)) in self.letters.iter().enumerate() {
            if pos > 0 {
                write!(f, "*")?;
            }
            match gen {
                BraidGen::Frame(i) => write!(f, "t[{i}]")?,
                BraidGen::Pair(i, j) => write!(f, "A[{i},{j}]")?,
                BraidGen::Band => {
                    write!(f, "T[")?;
                    for i in 1..=self.strands {
                        if i > 1 {
                            write!(f, ",")?;
                        }
                        write!(f, "{i}")?;
                    }
                    write!(f, "]")?;
                }
            }
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Normal form of a framed 3-strand braid: `P_3 ≅ F_2 × Z × Z³` with the
/// free part on `a := A_{12}`, `b := A_{13}`, the integer the power of the
/// central full twist `Δ_3²`, plus the framing vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P3NormalForm {
    /// Word in the rank-2 free group: generator 1 is `A_{12}`, generator 2
    /// is `A_{13}`.
    pub free: Word,
    /// Power of the central full twist `Δ_3²`.
    pub twist: i64,
    pub framing: [i64; 3],
}

impl P3NormalForm {
    /// Re-expands through the Artin action; used as the certificate that the
    /// rewriting preserved the braid.
    pub fn reexpand(&self) -> Result<FramedBraid, BraidError> {
        let a12 = tau_pair(1, 2, 3)?;
        let a13 = tau_pair(1, 3, 3)?;
        let mut aut = FreeAut::identity(3);
        for &l in self.free.letters() {
            let factor = if l.abs() == 1 { a12.aut() } else { a13.aut() };
            let factor = if l < 0 { factor.inverse() } else { factor.clone() };
            aut = aut.compose(&factor)?;
        }
        aut = aut.compose(&tau_band_full(3)?.aut().pow(self.twist)?)?;
        Ok(FramedBraid::from_parts(aut, self.framing.to_vec()))
    }
}

/// Rewrites a word in the framed 3-strand alphabet to its normal form,
/// using `A_{23} = A_{13}⁻¹ A_{12}⁻¹ Δ_3²` and centrality of `Δ_3²`.
pub fn p3_normal_form(word: &BraidWord) -> Result<P3NormalForm, BraidError> {
    if word.strands != 3 {
        return Err(BraidError::NotThreeStrands { strands: word.strands });
    }
    let a = Word::generator(2, 1).expect("rank 2");
    let b = Word::generator(2, 2).expect("rank 2");
    let b_inv_a_inv = b.inverse().mul(&a.inverse()).expect("rank 2");

    let mut free = Word::identity(2);
    let mut twist = 0i64;
    let mut framing = [0i64; 3];
    for &(gen, exp) in &word.letters {
        match gen {
            BraidGen::Frame(i) => framing[i - 1] += exp,
            BraidGen::Pair(1, 2) => {
                free = free.mul(&a.pow(exp)?)?;
                framing[0] += exp;
                framing[1] += exp;
            }
            BraidGen::Pair(1, 3) => {
                free = free.mul(&b.pow(exp)?)?;
                framing[0] += exp;
                framing[2] += exp;
            }
            BraidGen::Pair(2, 3) => {
                free = free.mul(&b_inv_a_inv.pow(exp)?)?;
                twist += exp;
                framing[1] += exp;
                framing[2] += exp;
            }
            BraidGen::Band => {
                twist += exp;
                framing[0] += exp;
                framing[1] += exp;
                framing[2] += exp;
            }
            BraidGen::Pair(..) => unreachable!("validated at construction"),
        }
    }
    let nf = P3NormalForm { free, twist, framing };
    debug_assert_eq!(nf.reexpand()?, word.eval()?, "normal form certificate");
    Ok(nf)
}

/// Uniform random word in the framed 3-strand alphabet, for round-trip
/// checks of the normal form.
pub fn random_p3_word<R: rand::Rng + ?Sized>(rng: &mut R, max_len: usize) -> BraidWord {
    const GENS: [BraidGen; 7] = [
        BraidGen::Frame(1),
        BraidGen::Frame(2),
        BraidGen::Frame(3),
        BraidGen::Pair(1, 2),
        BraidGen::Pair(1, 3),
        BraidGen::Pair(2, 3),
        BraidGen::Band,
    ];
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let gen = GENS[rng.random_range(0..GENS.len())];
            let exp = if rng.random_bool(0.5) { 1 } else { -1 };
            (gen, exp)
        })
        .collect();
    BraidWord { strands: 3, letters }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn w(rank: usize, letters: &[i32]) -> Word {
        Word::from_letters(rank, letters).unwrap()
    }

    #[test]
    fn sigma_examples() {
        let s = sigma(1, 2).unwrap();
        assert_eq!(s.image(1), &w(2, &[1, 2, -1]));
        assert_eq!(s.image(2), &w(2, &[1]));

        let s13 = sigma(1, 3).unwrap();
        assert_eq!(s13.image(3), &w(3, &[3]));

        let product = w(2, &[1, 2]);
        assert_eq!(s.apply(&product).unwrap(), product);

        assert!(sigma(2, 2).is_err());
        assert!(sigma(0, 3).is_err());
    }

    #[test]
    fn tau_pair_examples() {
        assert_eq!(tau_pair(1, 2, 2).unwrap().framing(), &[1, 1]);

        // A_12 = σ_1² in P_3
        let s1 = sigma(1, 3).unwrap();
        let a12 = tau_pair(1, 2, 3).unwrap();
        assert_eq!(a12.aut(), &s1.compose(&s1).unwrap());

        // A_13 sends x2 to a conjugate of x2
        let a13 = tau_pair(1, 3, 3).unwrap();
        assert!(sends_generators_to_conjugates(a13.aut()));
        assert!(tau_pair(2, 1, 3).is_err());
    }

    // Expected images computed independently by direct substitution through
    // the five σ-factors of the defining formula.
    #[test]
    fn tau_pair_frozen_images() {
        let a12 = tau_pair(1, 2, 3).unwrap();
        assert_eq!(a12.aut().image(1), &w(3, &[1, 2, 1, -2, -1]));
        assert_eq!(a12.aut().image(2), &w(3, &[1, 2, -1]));
        assert_eq!(a12.aut().image(3), &w(3, &[3]));

        let a13 = tau_pair(1, 3, 3).unwrap();
        assert_eq!(a13.aut().image(1), &w(3, &[1, 3, 1, -3, -1]));
        assert_eq!(a13.aut().image(2), &w(3, &[1, 3, -1, -3, 2, 3, 1, -3, -1]));
        assert_eq!(a13.aut().image(3), &w(3, &[1, 3, -1]));

        let a23 = tau_pair(2, 3, 3).unwrap();
        assert_eq!(a23.aut().image(1), &w(3, &[1]));
        assert_eq!(a23.aut().image(2), &w(3, &[2, 3, 2, -3, -2]));
        assert_eq!(a23.aut().image(3), &w(3, &[2, 3, -2]));
    }

    #[test]
    fn tau_frame_examples() {
        assert_eq!(tau_frame(2, 3).unwrap().framing(), &[0, 1, 0]);
        assert!(tau_frame(1, 3).unwrap().aut().is_identity());
        let all = tau_frame(1, 3)
            .unwrap()
            .mul(&tau_frame(2, 3).unwrap())
            .unwrap()
            .mul(&tau_frame(3, 3).unwrap())
            .unwrap();
        assert_eq!(all.framing(), &[1, 1, 1]);
        assert!(tau_frame(4, 3).is_err());
    }

    #[test]
    fn tau_band_examples() {
        assert_eq!(tau_band(&[1, 2], 2).unwrap(), tau_pair(1, 2, 2).unwrap());
        assert_eq!(tau_band(&[1, 2, 3], 3).unwrap().framing(), &[1, 1, 1]);
        assert!(tau_band(&[1, 2], 3).is_err());
        assert!(tau_band(&[2, 3], 3).is_err());

        // band twist action = action of τ12·τ13·τ23 (framings differ)
        let band = tau_band(&[1, 2, 3], 3).unwrap();
        let prod = tau_pair(1, 2, 3)
            .unwrap()
            .mul(&tau_pair(1, 3, 3).unwrap())
            .unwrap()
            .mul(&tau_pair(2, 3, 3).unwrap())
            .unwrap();
        assert_eq!(band.aut(), prod.aut());
        assert_eq!(prod.framing(), &[2, 2, 2]);
    }

    #[test]
    fn braid_mul_and_eq() {
        let b = tau_pair(1, 2, 3).unwrap();
        assert_eq!(b.mul(&FramedBraid::identity(3)).unwrap(), b);

        let t1 = tau_frame(1, 3).unwrap();
        let t12 = tau_pair(1, 2, 3).unwrap();
        assert_eq!(t1.mul(&t12).unwrap(), t12.mul(&t1).unwrap());

        let t2 = tau_frame(2, 3).unwrap();
        assert_ne!(t1, t2);
        assert!(t1.mul(&tau_frame(1, 2).unwrap()).is_err());
    }

    #[test]
    fn braid_relations_up_to_six_strands() {
        for n in 2..=6 {
            for i in 1..n {
                for j in 1..n {
                    let si = sigma(i, n).unwrap();
                    let sj = sigma(j, n).unwrap();
                    if i.abs_diff(j) >= 2 {
                        assert_eq!(
                            si.compose(&sj).unwrap(),
                            sj.compose(&si).unwrap(),
                            "commutation failed for ({i},{j}) in n={n}"
                        );
                    }
                }
                if i + 1 < n {
                    let si = sigma(i, n).unwrap();
                    let sj = sigma(i + 1, n).unwrap();
                    let lhs = si.compose(&sj).unwrap().compose(&si).unwrap();
                    let rhs = sj.compose(&si).unwrap().compose(&sj).unwrap();
                    assert_eq!(lhs, rhs, "braid relation failed at i={i}, n={n}");
                }
            }
        }
    }

    #[test]
    fn lantern_holds_lexicographically() {
        for n in 2..=6 {
            let report = verify_lantern(n, PairOrder::Lexicographic).unwrap();
            assert!(report.holds, "lantern failed for n={n}");
            let expected = vec![n as i64 - 1; n];
            assert_eq!(report.framing_lhs, expected);
            assert_eq!(report.framing_rhs, expected);
            assert_eq!(report.lowest_discrepancy, None);
        }
    }

    #[test]
    fn lantern_order_sensitivity() {
        // n = 2 is degenerate (a single pair), n >= 3 is order sensitive
        assert!(verify_lantern(2, PairOrder::ReverseLexicographic).unwrap().holds);
        let report = verify_lantern(3, PairOrder::ReverseLexicographic).unwrap();
        assert!(!report.holds);
        assert!(report.lowest_discrepancy.is_some());
        // framings balance regardless of order
        assert_eq!(report.framing_lhs, report.framing_rhs);
        assert!(verify_lantern(1, PairOrder::Lexicographic).is_err());
    }

    #[test]
    fn centrality_examples() {
        assert!(tau_frame(2, 3).unwrap().is_central().unwrap());
        assert!(tau_band(&[1, 2, 3], 3).unwrap().is_central().unwrap());
        assert!(!tau_pair(1, 2, 3).unwrap().is_central().unwrap());
    }

    #[test]
    fn certificates_for_all_generators() {
        for n in 2..=6 {
            let mut elements = vec![tau_band(&(1..=n).collect::<Vec<_>>(), n).unwrap()];
            for i in 1..=n {
                elements.push(tau_frame(i, n).unwrap());
                for j in (i + 1)..=n {
                    elements.push(tau_pair(i, j, n).unwrap());
                }
            }
            for b in &elements {
                assert!(fixes_product(b.aut()));
                assert!(sends_generators_to_conjugates(b.aut()));
            }
        }
    }

    fn p3(letters: Vec<(BraidGen, i64)>) -> BraidWord {
        BraidWord::new(3, letters).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let nf = p3_normal_form(&p3(vec![(BraidGen::Pair(1, 2), 1)])).unwrap();
        assert_eq!(nf.free, w(2, &[1]));
        assert_eq!(nf.twist, 0);
        assert_eq!(nf.framing, [1, 1, 0]);

        let nf = p3_normal_form(&p3(vec![(BraidGen::Pair(2, 3), 1)])).unwrap();
        assert_eq!(nf.free, w(2, &[-2, -1]));
        assert_eq!(nf.twist, 1);
        assert_eq!(nf.framing, [0, 1, 1]);

        let nf = p3_normal_form(&p3(vec![(BraidGen::Band, 1)])).unwrap();
        assert!(nf.free.is_identity());
        assert_eq!(nf.twist, 1);
        assert_eq!(nf.framing, [1, 1, 1]);

        let four = BraidWord::new(4, vec![(BraidGen::Band, 1)]).unwrap();
        assert!(matches!(p3_normal_form(&four), Err(BraidError::NotThreeStrands { strands: 4 })));
    }

    #[test]
    fn normal_form_round_trips_on_random_words() {
        let mut rng = ChaCha12Rng::seed_from_u64(0x6c616e7465726e);
        for _ in 0..500 {
            let word = random_p3_word(&mut rng, 20);
            let nf = p3_normal_form(&word).unwrap();
            assert_eq!(nf.reexpand().unwrap(), word.eval().unwrap(), "word {word}");
        }
    }
}
