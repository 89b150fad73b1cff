//! Group elements over a defining graph: words in the vertex generators,
//! a canonical normal form, and the derived queries (equality, support,
//! special-subgroup membership, retractions, abelianization).
//!
//! The canonical form is computed in two stages. First, iterated
//! reduction: cancel a pair `x^e ... x^-e` whenever every letter in
//! between commutes with `x` (its vertex is adjacent to `x`). Second,
//! canonical sorting: among all commutation-equivalent spellings of the
//! reduced word, take the lexicographically least under the graph's
//! declared vertex order, by greedily emitting the least letter whose
//! remaining predecessors all commute with it.

use crate::graph::{Graph, GraphError, VertexSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid word token `{0}`")]
    InvalidToken(String),
    #[error("letter refers to vertex index {0}, outside the graph")]
    LetterOutOfRange(usize),
    #[error("integer vector has {got} entries, the graph has {expected} vertices")]
    VectorLength { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A signed generator. Ordering is (vertex index, sign) with the positive
/// letter first; this is the order canonical forms minimize against.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    vertex: u16,
    inverse: bool,
}

impl Letter {
    pub fn new(vertex: usize, inverse: bool) -> Self {
        Self { vertex: vertex as u16, inverse }
    }

    pub fn vertex(&self) -> usize {
        self.vertex as usize
    }

    pub fn is_inverse(&self) -> bool {
        self.inverse
    }

    pub fn inverted(&self) -> Letter {
        Letter { vertex: self.vertex, inverse: !self.inverse }
    }

    pub fn token(&self, g: &Graph) -> String {
        if self.inverse {
            format!("{}^-1", g.label(self.vertex()))
        } else {
            g.label(self.vertex()).to_string()
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.inverse { "-" } else { "+" }, self.vertex)
    }
}

/// A word in the generators. Words are plain spellings: they are never
/// normalized implicitly, so tests can tell spellings apart.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn generator(g: &Graph, label: &str) -> Result<Self, WordError> {
        let i = g.index_of(label).map_err(|_| WordError::UnknownGenerator(label.to_string()))?;
        Ok(Self { letters: vec![Letter::new(i, false)] })
    }

    /// Parse whitespace-separated tokens: `a` for a generator, `a^-1` (or
    /// `A`, for single-word lowercase labels) for its inverse, `a^k` for
    /// powers, `1` for the identity.
    pub fn parse(g: &Graph, text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            if let Some((base, exp)) = tok.split_once('^') {
                let i = g.index_of(base).map_err(|_| WordError::UnknownGenerator(base.to_string()))?;
                let e: i64 = exp.parse().map_err(|_| WordError::InvalidToken(tok.to_string()))?;
                for _ in 0..e.unsigned_abs() {
                    letters.push(Letter::new(i, e < 0));
                }
            } else if g.contains(tok) {
                letters.push(Letter::new(g.index_of(tok)?, false));
            } else {
                let lower = tok.to_lowercase();
                if tok.chars().all(|c| c.is_ascii_uppercase()) && g.contains(&lower) {
                    letters.push(Letter::new(g.index_of(&lower)?, true));
                } else {
                    return Err(WordError::UnknownGenerator(tok.to_string()));
                }
            }
        }
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn inverse(&self) -> Word {
        Word { letters: invert_letters(&self.letters) }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(self.letters.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// `u * self * u^-1`.
    pub fn conjugated_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }

    pub fn display(&self, g: &Graph) -> String {
        display_letters(&self.letters, g)
    }
}

/// The canonical spelling of a group element. Only produced by
/// [`normal_form`]; holding one is the proof that it is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    letters: Vec<Letter>,
}

impl NormalForm {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn word(&self) -> Word {
        Word { letters: self.letters.clone() }
    }

    pub fn display(&self, g: &Graph) -> String {
        display_letters(&self.letters, g)
    }
}

pub(crate) fn display_letters(letters: &[Letter], g: &Graph) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters.iter().map(|l| l.token(g)).collect::<Vec<_>>().join(" ")
}

pub(crate) fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(Letter::inverted).collect()
}

pub(crate) fn validate_letters(g: &Graph, letters: &[Letter]) -> Result<(), WordError> {
    for l in letters {
        if l.vertex() >= g.vertex_count() {
            return Err(WordError::LetterOutOfRange(l.vertex()));
        }
    }
    Ok(())
}

/// Remove every cancellable pair: `x^e ... x^-e` with all letters in
/// between adjacent to `x`.
pub(crate) fn reduce_letters(g: &Graph, letters: &mut Vec<Letter>) {
    'outer: loop {
        for i in 0..letters.len() {
            let v = letters[i].vertex();
            let adj = g.adj_mask(v);
            for j in i + 1..letters.len() {
                let w = letters[j].vertex();
                if w == v {
                    if letters[j].inverse != letters[i].inverse {
                        letters.remove(j);
                        letters.remove(i);
                        continue 'outer;
                    }
                    break; // same sign blocks any later partner
                }
                if adj & (1 << w) == 0 {
                    break; // non-commuting letter blocks
                }
            }
        }
        return;
    }
}

/// Lexicographically least shuffle of a reduced word: repeatedly emit the
/// least letter all of whose remaining predecessors commute with it.
pub(crate) fn canonical_sort(g: &Graph, letters: &[Letter]) -> Vec<Letter> {
    let mut rem: Vec<Letter> = letters.to_vec();
    let mut out = Vec::with_capacity(rem.len());
    while !rem.is_empty() {
        let mut seen: u64 = 0;
        let mut best: Option<(Letter, usize)> = None;
        for (i, &l) in rem.iter().enumerate() {
            if seen & !g.adj_mask(l.vertex()) == 0 && best.is_none_or(|(b, _)| l < b) {
                best = Some((l, i));
            }
            seen |= 1 << l.vertex();
        }
        let (l, i) = best.expect("some first letter is always available");
        rem.remove(i);
        out.push(l);
    }
    out
}

pub(crate) fn nf_letters(g: &Graph, mut letters: Vec<Letter>) -> Vec<Letter> {
    reduce_letters(g, &mut letters);
    canonical_sort(g, &letters)
}

/// Canonical form of `w`. Idempotent; `w` and its normal form spell the
/// same group element.
pub fn normal_form(g: &Graph, w: &Word) -> Result<NormalForm, WordError> {
    validate_letters(g, w.letters())?;
    Ok(NormalForm { letters: nf_letters(g, w.letters().to_vec()) })
}

/// Word-problem equality: `w1` and `w2` spell the same element.
pub fn equal(g: &Graph, w1: &Word, w2: &Word) -> Result<bool, WordError> {
    validate_letters(g, w1.letters())?;
    validate_letters(g, w2.letters())?;
    let mut cat = w1.letters().to_vec();
    cat.extend(invert_letters(w2.letters()));
    Ok(nf_letters(g, cat).is_empty())
}

pub(crate) fn support_mask(g: &Graph, letters: &[Letter]) -> u64 {
    nf_letters(g, letters.to_vec()).iter().fold(0u64, |m, l| m | (1 << l.vertex()))
}

/// Vertices appearing in the canonical form; independent of the spelling.
pub fn support(g: &Graph, w: &Word) -> Result<VertexSet, WordError> {
    validate_letters(g, w.letters())?;
    Ok(g.set_from_mask(support_mask(g, w.letters())))
}

/// Membership in the subgroup generated by `lam`: exactly the elements
/// supported on `lam`.
pub fn in_special_subgroup(g: &Graph, lam: &VertexSet, w: &Word) -> Result<bool, WordError> {
    validate_letters(g, w.letters())?;
    let lam_mask = g.mask_of(lam)?;
    Ok(support_mask(g, w.letters()) & !lam_mask == 0)
}

/// Delete every letter whose vertex is outside `lam`. The induced map is
/// the retraction homomorphism onto the subgroup generated by `lam`.
pub fn retract(g: &Graph, lam: &VertexSet, w: &Word) -> Result<Word, WordError> {
    validate_letters(g, w.letters())?;
    let lam_mask = g.mask_of(lam)?;
    Ok(Word::from_letters(
        w.letters().iter().copied().filter(|l| lam_mask & (1 << l.vertex()) != 0).collect(),
    ))
}

/// Exponent sums per vertex, as an element of the integer lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerVector {
    values: Vec<i64>,
}

impl IntegerVector {
    pub fn zeros(g: &Graph) -> Self {
        Self { values: vec![0; g.vertex_count()] }
    }

    pub fn ones(g: &Graph) -> Self {
        Self { values: vec![1; g.vertex_count()] }
    }

    /// Values aligned with the graph's vertex declaration order.
    pub fn from_values(g: &Graph, values: Vec<i64>) -> Result<Self, WordError> {
        if values.len() != g.vertex_count() {
            return Err(WordError::VectorLength { expected: g.vertex_count(), got: values.len() });
        }
        Ok(Self { values })
    }

    pub fn from_pairs<'a, I>(g: &Graph, pairs: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (&'a str, i64)>,
    {
        let mut v = Self::zeros(g);
        for (label, value) in pairs {
            v.values[g.index_of(label)?] = value;
        }
        Ok(v)
    }

    pub fn value(&self, vertex: usize) -> i64 {
        self.values[vertex]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn dot(&self, other: &IntegerVector) -> i64 {
        debug_assert_eq!(self.values.len(), other.values.len());
        self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum()
    }

    pub fn display(&self, g: &Graph) -> String {
        g.labels()
            .enumerate()
            .map(|(i, l)| format!("{l}:{}", self.values[i]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Signed letter counts of `w`; the image of `w` in the abelianization.
pub fn abelianization(g: &Graph, w: &Word) -> Result<IntegerVector, WordError> {
    validate_letters(g, w.letters())?;
    let mut v = IntegerVector::zeros(g);
    for l in w.letters() {
        v.values[l.vertex()] += if l.is_inverse() { -1 } else { 1 };
    }
    Ok(v)
}

/// Image of `w` under the homomorphism to the integers described by `phi`.
pub fn z_image(g: &Graph, phi: &IntegerVector, w: &Word) -> Result<i64, WordError> {
    if phi.values.len() != g.vertex_count() {
        return Err(WordError::VectorLength { expected: g.vertex_count(), got: phi.values.len() });
    }
    Ok(phi.dot(&abelianization(g, w)?))
}
