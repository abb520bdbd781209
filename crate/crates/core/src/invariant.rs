//! Laurent-polynomial character bookkeeping for the third exterior power of
//! surface homology.
//!
//! The homology of a genus-`g` surface splits as `L ⊕ L⋆` with torus
//! eigenvalues `x_1..x_g` on `L` and their inverses on `L⋆`. Characters are
//! Laurent polynomials with exact integer coefficients; invariant dimensions
//! come from constant terms, with the GL case going through the constant-term
//! form of Weyl integration: `(1/g!)·CT(f · Π_{i≠j}(1 - x_i x_j⁻¹))`.
//! Divisibility by `g!` is checked on every computation and a failure
//! signals a non-character input.
//!
//! Character powers explode combinatorially, so every product is guarded by
//! a configurable cap on the number of monomial products it would form.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

/// Default cap on the monomial products formed by a single multiplication.
pub const DEFAULT_TERM_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("genus {genus} below the minimum {min} for this computation")]
    GenusTooSmall { genus: usize, min: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },
    #[error("term guard: multiplication would form {estimate} monomial products, cap is {cap}")]
    TermCapExceeded { estimate: usize, cap: usize },
    #[error("constant term not divisible by {divisor}!: input is not a character")]
    NonIntegerInvariant { divisor: usize },
    #[error("dimension does not fit in 64 bits")]
    DimensionOverflow,
}

/// Multivariate Laurent polynomial with exact integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: usize) -> Self {
        LaurentPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        Self::monomial(vec![0; vars], BigInt::one())
    }

    pub fn monomial(exponents: Vec<i32>, coefficient: BigInt) -> Self {
        let vars = exponents.len();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponents, coefficient);
        }
        LaurentPoly { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[i32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient of the zero exponent vector.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.vars])
    }

    /// Value at `x_i = 1` for all `i`: the dimension of a character.
    pub fn eval_all_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn accumulate(&mut self, exponents: Vec<i32>, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, InvariantError> {
        if self.vars != other.vars {
            return Err(InvariantError::VarMismatch { left: self.vars, right: other.vars });
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    /// Product, refusing up front when it would form more monomial products
    /// than `term_cap` allows.
    pub fn mul(&self, other: &LaurentPoly, term_cap: usize) -> Result<LaurentPoly, InvariantError> {
        if self.vars != other.vars {
            return Err(InvariantError::VarMismatch { left: self.vars, right: other.vars });
        }
        let estimate = self.terms.len().saturating_mul(other.terms.len());
        if estimate > term_cap {
            return Err(InvariantError::TermCapExceeded { estimate, cap: term_cap });
        }
        let mut out = LaurentPoly::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.accumulate(e, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: usize, term_cap: usize) -> Result<LaurentPoly, InvariantError> {
        let mut out = LaurentPoly::one(self.vars);
        for _ in 0..exp {
            out = out.mul(self, term_cap)?;
        }
        Ok(out)
    }

    /// Substitutes `x_i -> x_i⁻¹` for every variable.
    pub fn invert_vars(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().map(|&k| -k).collect(), c.clone()))
            .collect();
        LaurentPoly { vars: self.vars, terms }
    }

    /// Relabels variables: exponent of `x_i` moves to `x_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        assert_eq!(perm.len(), self.vars, "permutation length mismatch");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = vec![0; self.vars];
                for (i, &k) in e.iter().enumerate() {
                    out[perm[i]] = k;
                }
                (out, c.clone())
            })
            .collect();
        LaurentPoly { vars: self.vars, terms }
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut out: i64 = 1;
    for i in 0..k {
        out = out * (n - i) as i64 / (i + 1) as i64;
    }
    out
}

/// Character of `H = L ⊕ L⋆`: `Σ x_i + Σ x_i⁻¹`.
pub fn char_h(g: usize) -> Result<LaurentPoly, InvariantError> {
    if g < 1 {
        return Err(InvariantError::GenusTooSmall { genus: g, min: 1 });
    }
    let mut out = LaurentPoly::zero(g);
    for i in 0..g {
        for sign in [1, -1] {
            let mut e = vec![0; g];
            e[i] = sign;
            out.accumulate(e, &BigInt::one());
        }
    }
    Ok(out)
}

/// Character of `Λ³H`: the third elementary symmetric function of the `2g`
/// torus eigenvalues. Its value at all-ones is `C(2g, 3)`.
pub fn char_lambda3h(g: usize) -> Result<LaurentPoly, InvariantError> {
    if g < 1 {
        return Err(InvariantError::GenusTooSmall { genus: g, min: 1 });
    }
    let eigen: Vec<(usize, i32)> = (0..g)
        .map(|i| (i, 1))
        .chain((0..g).map(|i| (i, -1)))
        .collect();
    let mut out = LaurentPoly::zero(g);
    for a in 0..eigen.len() {
        for b in (a + 1)..eigen.len() {
            for c in (b + 1)..eigen.len() {
                let mut e = vec![0; g];
                for &(i, s) in [&eigen[a], &eigen[b], &eigen[c]] {
                    e[i] += s;
                }
                out.accumulate(e, &BigInt::one());
            }
        }
    }
    Ok(out)
}

/// Elementary symmetric function `e_k(x_1..x_g)` as a character in `g`
/// variables (the character of `Λ^k L`).
pub fn elem_sym(g: usize, k: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero(g);
    let mut pick = vec![0usize; k];
    fn rec(out: &mut LaurentPoly, g: usize, k: usize, start: usize, depth: usize, pick: &mut [usize]) {
        if depth == k {
            let mut e = vec![0; g];
            for &i in pick.iter() {
                e[i] += 1;
            }
            out.accumulate(e, &BigInt::one());
            return;
        }
        for i in start..g {
            pick[depth] = i;
            rec(out, g, k, i + 1, depth + 1, pick);
        }
    }
    rec(&mut out, g, k, 0, 0, &mut pick);
    out
}

/// Dimension of `U = Λ³H / H`: `C(2g, 3) - 2g`, defined for `g >= 2` where
/// the rational embedding of `H` is available.
pub fn dim_u(g: usize) -> Result<i64, InvariantError> {
    if g < 2 {
        return Err(InvariantError::GenusTooSmall { genus: g, min: 2 });
    }
    Ok(binomial(2 * g, 3) - 2 * g as i64)
}

/// Checks the splitting of `Λ³H` into
/// `Λ³L + Λ²L⊗L⋆ + Λ²L⋆⊗L + Λ³L⋆`, both as the integer identity
/// `C(2g,3) = 2·C(g,3) + 2·g·C(g,2)` and as an identity of characters.
pub fn decomposition_check(g: usize) -> Result<bool, InvariantError> {
    if g < 1 {
        return Err(InvariantError::GenusTooSmall { genus: g, min: 1 });
    }
    let numeric = binomial(2 * g, 3)
        == 2 * binomial(g, 3) + 2 * (g as i64) * binomial(g, 2);

    let cap = DEFAULT_TERM_CAP;
    let e1 = elem_sym(g, 1);
    let e2 = elem_sym(g, 2);
    let e3 = elem_sym(g, 3);
    let sum = e3
        .add(&e2.mul(&e1.invert_vars(), cap)?)?
        .add(&e2.invert_vars().mul(&e1, cap)?)?
        .add(&e3.invert_vars())?;
    Ok(numeric && sum == char_lambda3h(g)?)
}

/// Dimension of the torus-invariant subspace: the constant term of the
/// character. An upper bound for the GL-invariant dimension.
pub fn torus_invariant_dim(f: &LaurentPoly) -> BigInt {
    f.constant_term()
}

/// The Weyl factor `Π_{i≠j} (1 - x_i x_j⁻¹)`, expanded with the term guard.
pub fn weyl_product(g: usize, term_cap: usize) -> Result<LaurentPoly, InvariantError> {
    let mut out = LaurentPoly::one(g);
    for i in 0..g {
        for j in 0..g {
            if i == j {
                continue;
            }
            let mut e = vec![0; g];
            e[i] = 1;
            e[j] = -1;
            let factor = LaurentPoly::one(g).add(&LaurentPoly::monomial(e, -BigInt::one()))?;
            out = out.mul(&factor, term_cap)?;
        }
    }
    Ok(out)
}

/// GL-invariant dimension of a character by constant-term Weyl integration:
/// `(1/g!) · CT(f(x) · Π_{i≠j}(1 - x_i x_j⁻¹))`. Errors when the constant
/// term is not divisible by `g!`, which flags a non-character input.
pub fn gl_invariant_dim(f: &LaurentPoly, term_cap: usize) -> Result<BigInt, InvariantError> {
    let g = f.vars();
    let weyl = weyl_product(g, term_cap)?;
    // constant term of f·W as a dot product, no full expansion needed
    let (small, large) = if f.num_terms() <= weyl.num_terms() {
        (f, &weyl)
    } else {
        (&weyl, f)
    };
    let mut total = BigInt::zero();
    for (e, c) in small.terms() {
        let neg: Vec<i32> = e.iter().map(|&k| -k).collect();
        total += c * large.coefficient(&neg);
    }
    let mut divisor = BigInt::one();
    for k in 2..=g {
        divisor *= BigInt::from(k);
    }
    if (&total % &divisor) != BigInt::zero() {
        return Err(InvariantError::NonIntegerInvariant { divisor: g });
    }
    let dim = total / divisor;
    debug_assert!(!dim.is_negative(), "invariant dimension must be nonnegative");
    Ok(dim)
}

#[derive(Debug, Clone, Serialize)]
pub struct ParityCell {
    pub genus: usize,
    pub power: usize,
    pub dimension: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParityTable {
    pub cells: Vec<ParityCell>,
    /// All odd-power entries vanished, as parity of the character forces.
    pub odd_entries_zero: bool,
}

/// Torus-invariant dimensions of `char(Λ³H)^m` over a grid of genus and
/// power. Every monomial of the character has odd total degree, so all odd
/// powers must give 0.
pub fn parity_table(
    g_max: usize,
    m_max: usize,
    term_cap: usize,
) -> Result<ParityTable, InvariantError> {
    let mut cells = Vec::new();
    let mut odd_entries_zero = true;
    for g in 1..=g_max {
        let ch = char_lambda3h(g)?;
        let mut power = LaurentPoly::one(g);
        for m in 0..=m_max {
            if m > 0 {
                power = power.mul(&ch, term_cap)?;
            }
            let dim = torus_invariant_dim(&power)
                .to_i64()
                .ok_or(InvariantError::DimensionOverflow)?;
            if m % 2 == 1 && dim != 0 {
                odd_entries_zero = false;
            }
            cells.push(ParityCell { genus: g, power: m, dimension: dim });
        }
    }
    Ok(ParityTable { cells, odd_entries_zero })
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityCell {
    pub genus: usize,
    pub dimension: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub power: usize,
    pub cells: Vec<StabilityCell>,
    /// The value at the top of the genus range stopped moving. Reported as
    /// evidence of stabilization, not asserted as a theorem.
    pub stabilized: bool,
}

/// GL-invariant dimensions of `char(Λ³H)^m` across a genus range.
pub fn stability_probe(
    m: usize,
    g_min: usize,
    g_max: usize,
    term_cap: usize,
) -> Result<StabilityReport, InvariantError> {
    if g_min < 1 {
        return Err(InvariantError::GenusTooSmall { genus: g_min, min: 1 });
    }
    let mut cells = Vec::new();
    for g in g_min..=g_max {
        let f = char_lambda3h(g)?.pow(m, term_cap)?;
        let dim = gl_invariant_dim(&f, term_cap)?
            .to_i64()
            .ok_or(InvariantError::DimensionOverflow)?;
        cells.push(StabilityCell { genus: g, dimension: dim });
    }
    let stabilized = cells.len() >= 2
        && cells[cells.len() - 1].dimension == cells[cells.len() - 2].dimension;
    Ok(StabilityReport { power: m, cells, stabilized })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = DEFAULT_TERM_CAP;

    #[test]
    fn char_h_examples() {
        let c = char_h(1).unwrap();
        assert_eq!(c.num_terms(), 2);
        assert_eq!(c.eval_all_ones(), BigInt::from(2));
        assert_eq!(c.coefficient(&[1]), BigInt::one());
        assert_eq!(c.coefficient(&[-1]), BigInt::one());
        assert!(char_h(0).is_err());
    }

    #[test]
    fn char_lambda3h_dimensions() {
        for (g, want) in [(1, 0), (2, 4), (3, 20), (4, 56)] {
            let c = char_lambda3h(g).unwrap();
            assert_eq!(c.eval_all_ones(), BigInt::from(want), "g = {g}");
            assert_eq!(want, binomial(2 * g, 3));
        }
    }

    #[test]
    fn dim_u_examples() {
        assert_eq!(dim_u(2).unwrap(), 0);
        assert_eq!(dim_u(3).unwrap(), 14);
        assert_eq!(dim_u(4).unwrap(), 48);
        assert!(matches!(dim_u(1), Err(InvariantError::GenusTooSmall { .. })));
    }

    #[test]
    fn decomposition_examples() {
        assert!(decomposition_check(1).unwrap());
        assert!(decomposition_check(2).unwrap());
        assert!(decomposition_check(3).unwrap());
    }

    #[test]
    fn decomposition_holds_through_genus_thirty() {
        for g in 1..=30 {
            assert!(decomposition_check(g).unwrap(), "g = {g}");
        }
    }

    #[test]
    fn torus_invariant_examples() {
        for g in 1..=4 {
            assert_eq!(torus_invariant_dim(&char_h(g).unwrap()), BigInt::zero());
        }
        let sq = char_h(1).unwrap().pow(2, CAP).unwrap();
        assert_eq!(torus_invariant_dim(&sq), BigInt::from(2));
        assert_eq!(torus_invariant_dim(&char_lambda3h(2).unwrap()), BigInt::zero());
    }

    #[test]
    fn gl_invariant_examples() {
        // L ⊗ L⋆ has a one-dimensional invariant space (the trace)
        for g in 1..=4 {
            let f = elem_sym(g, 1)
                .mul(&elem_sym(g, 1).invert_vars(), CAP)
                .unwrap();
            assert_eq!(gl_invariant_dim(&f, CAP).unwrap(), BigInt::one(), "g = {g}");
        }
        let sq = char_h(2).unwrap().pow(2, CAP).unwrap();
        assert_eq!(gl_invariant_dim(&sq, CAP).unwrap(), BigInt::from(2));
        assert_eq!(
            gl_invariant_dim(&char_lambda3h(2).unwrap(), CAP).unwrap(),
            BigInt::zero()
        );
        // trivial representation for every genus
        for g in 1..=5 {
            assert_eq!(gl_invariant_dim(&LaurentPoly::one(g), CAP).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn non_character_input_is_flagged() {
        let f = LaurentPoly::monomial(vec![1, -1], BigInt::one());
        assert!(matches!(
            gl_invariant_dim(&f, CAP),
            Err(InvariantError::NonIntegerInvariant { divisor: 2 })
        ));
    }

    #[test]
    fn parity_table_odd_entries_vanish() {
        let table = parity_table(4, 4, CAP).unwrap();
        assert!(table.odd_entries_zero);
        for cell in &table.cells {
            if cell.power % 2 == 1 {
                assert_eq!(cell.dimension, 0, "g = {}, m = {}", cell.genus, cell.power);
            }
            if cell.power == 0 {
                assert_eq!(cell.dimension, 1);
            }
        }
    }

    #[test]
    fn stability_probe_m0_and_m1() {
        let r0 = stability_probe(0, 1, 4, CAP).unwrap();
        assert!(r0.cells.iter().all(|c| c.dimension == 1));
        assert!(r0.stabilized);
        let r1 = stability_probe(1, 1, 4, CAP).unwrap();
        assert!(r1.cells.iter().all(|c| c.dimension == 0));
    }

    #[test]
    fn term_guard_trips_on_large_powers() {
        let ch = char_lambda3h(30).unwrap();
        assert!(matches!(
            ch.pow(4, CAP),
            Err(InvariantError::TermCapExceeded { .. })
        ));
        // a generous cap clears the same multiplication size check
        assert!(char_lambda3h(2).unwrap().pow(4, CAP).is_ok());
    }

    #[test]
    fn gl_dimension_never_exceeds_torus_dimension() {
        for g in 1..=3 {
            for m in [0, 1, 2] {
                let f = char_lambda3h(g).unwrap().pow(m, CAP).unwrap();
                let gl = gl_invariant_dim(&f, CAP).unwrap();
                let torus = torus_invariant_dim(&f);
                assert!(gl <= torus, "g = {g}, m = {m}");
            }
            let f = char_h(g).unwrap().pow(2, CAP).unwrap();
            assert!(gl_invariant_dim(&f, CAP).unwrap() <= torus_invariant_dim(&f));
        }
    }

    #[test]
    fn gl_dimension_is_symmetric_in_the_variables() {
        let perms3 = [[0, 1, 2], [1, 0, 2], [2, 0, 1], [1, 2, 0], [0, 2, 1], [2, 1, 0]];
        let f = char_lambda3h(3).unwrap().pow(2, CAP).unwrap();
        let base = gl_invariant_dim(&f, CAP).unwrap();
        for perm in perms3 {
            let permuted = f.permute_vars(&perm);
            assert_eq!(gl_invariant_dim(&permuted, CAP).unwrap(), base);
            assert_eq!(torus_invariant_dim(&permuted), torus_invariant_dim(&f));
        }
    }

    #[test]
    fn permute_vars_moves_exponents() {
        let f = LaurentPoly::monomial(vec![1, 0], BigInt::from(2))
            .add(&LaurentPoly::monomial(vec![0, -1], BigInt::one()))
            .unwrap();
        let swapped = f.permute_vars(&[1, 0]);
        assert_eq!(swapped.coefficient(&[0, 1]), BigInt::from(2));
        assert_eq!(swapped.coefficient(&[-1, 0]), BigInt::one());
    }
}
