//! Splitting descriptors and the algebraic classification of elements
//! acting on the associated tree.
//!
//! Three kinds of splitting are modeled: amalgams built from a separating
//! vertex set, actions on a line given by a homomorphism to the integers,
//! and actions induced by a homomorphism into a group that already splits.

use crate::graph::{Graph, GraphError, VertexSet};
use crate::words::{
    self, in_special_subgroup, invert_letters, nf_letters, normal_form, validate_letters,
    IntegerVector, Letter, Word, WordError,
};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SplitError {
    #[error("{0} does not separate the graph")]
    NotSeparating(String),
    #[error("pick vertex `{0}` lies in the separating set")]
    PickInSeparator(String),
    #[error("inconsistent sides: {0}")]
    BadSides(String),
    #[error("images of `{0}` and `{1}` do not commute, but the vertices are adjacent")]
    HomViolation(String, String),
    #[error("missing image for generator `{0}`")]
    MissingImage(String),
    #[error("homomorphism target does not match the splitting's ambient graph")]
    TargetMismatch,
    #[error("the exponent vector is identically zero, the line action would be trivial")]
    ZeroVector,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// One of the two vertex groups of an amalgam.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }

    pub(crate) fn idx(self) -> usize {
        match self {
            Side::One => 0,
            Side::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.idx() as u8 + 1
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "side{}", self.number())
    }
}

/// Side assignment of a syllable. `Either` marks words supported entirely
/// on the separating set, which live in both vertex groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SideChoice {
    One,
    Two,
    Either,
}

impl SideChoice {
    pub fn allows(self, side: Side) -> bool {
        matches!(
            (self, side),
            (SideChoice::Either, _) | (SideChoice::One, Side::One) | (SideChoice::Two, Side::Two)
        )
    }

    fn from_mask(mask: u8) -> SideChoice {
        match mask {
            0b01 => SideChoice::One,
            0b10 => SideChoice::Two,
            0b11 => SideChoice::Either,
            _ => unreachable!("empty side mask"),
        }
    }
}

impl fmt::Display for SideChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SideChoice::One => write!(f, "side1"),
            SideChoice::Two => write!(f, "side2"),
            SideChoice::Either => write!(f, "either"),
        }
    }
}

/// JSON form of an amalgam splitting, relative to a known ambient graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingDescriptor {
    pub lambda: Vec<String>,
    pub side1: Vec<String>,
    pub side2: Vec<String>,
}

/// An amalgam decomposition of the group of `ambient` along the
/// separating set `lam`: the two factors are generated by `side1` and
/// `side2`, glued along the subgroup generated by `lam`.
#[derive(Clone, Debug)]
pub struct AmalgamSplitting {
    ambient: Graph,
    lam: VertexSet,
    sides: [VertexSet; 2],
    lam_mask: u64,
    side_masks: [u64; 2],
}

impl AmalgamSplitting {
    /// Build the splitting with `side1` the component of `pick` in the
    /// complement of `lam` (plus `lam`), and `side2` everything else.
    pub fn from_separator(g: &Graph, lam: &VertexSet, pick: &str) -> Result<Self, SplitError> {
        if !g.is_separating(lam)? {
            return Err(SplitError::NotSeparating(lam.to_string()));
        }
        let lam_mask = g.mask_of(lam)?;
        let pick_idx = g.index_of(pick)?;
        if lam_mask & (1 << pick_idx) != 0 {
            return Err(SplitError::PickInSeparator(pick.to_string()));
        }
        let comps = g.mask_components(g.full_mask() & !lam_mask);
        let pick_comp = comps
            .iter()
            .copied()
            .find(|c| c & (1 << pick_idx) != 0)
            .ok_or_else(|| SplitError::Internal("pick vertex not in any component".into()))?;
        let side1 = pick_comp | lam_mask;
        let side2 = (g.full_mask() & !side1) | lam_mask;
        Ok(Self {
            ambient: g.clone(),
            lam: lam.clone(),
            sides: [g.set_from_mask(side1), g.set_from_mask(side2)],
            lam_mask,
            side_masks: [side1, side2],
        })
    }

    /// Rebuild a splitting from explicitly given sides, validating the
    /// amalgam invariants.
    pub fn from_parts(
        g: &Graph,
        lam: &VertexSet,
        side1: &VertexSet,
        side2: &VertexSet,
    ) -> Result<Self, SplitError> {
        let lam_mask = g.mask_of(lam)?;
        let m1 = g.mask_of(side1)?;
        let m2 = g.mask_of(side2)?;
        if m1 & m2 != lam_mask {
            return Err(SplitError::BadSides("side1 and side2 must intersect exactly in lambda".into()));
        }
        if m1 | m2 != g.full_mask() {
            return Err(SplitError::BadSides("side1 and side2 must cover every vertex".into()));
        }
        if m1 == lam_mask || m2 == lam_mask {
            return Err(SplitError::BadSides("each side must contain a vertex outside lambda".into()));
        }
        for i in 0..g.vertex_count() {
            if m1 & !lam_mask & (1 << i) != 0 && g.adj_mask(i) & m2 & !lam_mask != 0 {
                return Err(SplitError::BadSides(format!(
                    "edge joins `{}` to the far side of lambda",
                    g.label(i)
                )));
            }
        }
        Ok(Self {
            ambient: g.clone(),
            lam: lam.clone(),
            sides: [side1.clone(), side2.clone()],
            lam_mask,
            side_masks: [m1, m2],
        })
    }

    pub fn from_descriptor(g: &Graph, d: &SplittingDescriptor) -> Result<Self, SplitError> {
        Self::from_parts(
            g,
            &VertexSet::from_labels(d.lambda.iter().cloned()),
            &VertexSet::from_labels(d.side1.iter().cloned()),
            &VertexSet::from_labels(d.side2.iter().cloned()),
        )
    }

    pub fn to_descriptor(&self) -> SplittingDescriptor {
        SplittingDescriptor {
            lambda: self.lam.to_vec(),
            side1: self.sides[0].to_vec(),
            side2: self.sides[1].to_vec(),
        }
    }

    pub fn ambient(&self) -> &Graph {
        &self.ambient
    }

    pub fn lam(&self) -> &VertexSet {
        &self.lam
    }

    pub fn side(&self, side: Side) -> &VertexSet {
        &self.sides[side.idx()]
    }

    pub(crate) fn lam_mask(&self) -> u64 {
        self.lam_mask
    }

    pub(crate) fn side_mask(&self, side: Side) -> u64 {
        self.side_masks[side.idx()]
    }

    fn vertex_side_mask(&self, vertex: usize) -> u8 {
        let bit = 1u64 << vertex;
        (u8::from(self.side_masks[0] & bit != 0)) | (u8::from(self.side_masks[1] & bit != 0) << 1)
    }

    /// Greedy left-to-right decomposition of the canonical form into
    /// alternating syllables. Letters on the separating set attach to the
    /// open syllable, so interior syllables never land in the edge group
    /// and the sequence is reduced.
    pub(crate) fn decompose_letters(&self, letters: &[Letter]) -> Vec<(SideChoice, Vec<Letter>)> {
        let mut out: Vec<(SideChoice, Vec<Letter>)> = Vec::new();
        let mut cur: Vec<Letter> = Vec::new();
        let mut cur_mask = 0b11u8;
        for &l in letters {
            let m = self.vertex_side_mask(l.vertex());
            if cur.is_empty() || cur_mask & m != 0 {
                cur_mask &= m;
                cur.push(l);
            } else {
                out.push((SideChoice::from_mask(cur_mask), cur));
                cur = vec![l];
                cur_mask = m;
            }
        }
        if !cur.is_empty() {
            out.push((SideChoice::from_mask(cur_mask), cur));
        }
        out
    }

    /// Alternating syllable decomposition of `w`. The concatenation of the
    /// syllables is the canonical form of `w`; the empty list is the
    /// identity; no interior syllable lies in the edge group.
    pub fn syllable_decompose(&self, w: &Word) -> Result<Vec<Syllable>, SplitError> {
        validate_letters(&self.ambient, w.letters())?;
        let nf = nf_letters(&self.ambient, w.letters().to_vec());
        Ok(self
            .decompose_letters(&nf)
            .into_iter()
            .map(|(side, letters)| {
                let in_edge_group = letters.iter().all(|l| self.lam_mask & (1 << l.vertex()) != 0);
                Syllable { side, word: Word::from_letters(letters), in_edge_group }
            })
            .collect())
    }

    /// Classify the tree isometry of `w`: cyclically reduce the syllable
    /// sequence by folding same-side ends together; at most one syllable
    /// left means elliptic, otherwise hyperbolic with translation length
    /// the number of syllables.
    pub fn classify(&self, w: &Word) -> Result<Classification, SplitError> {
        validate_letters(&self.ambient, w.letters())?;
        let mut cur = nf_letters(&self.ambient, w.letters().to_vec());
        let mut conj: Vec<Letter> = Vec::new();
        let cap = self.decompose_letters(&cur).len() + 1;
        for _ in 0..=cap {
            let syls = self.decompose_letters(&cur);
            match syls.len() {
                0 => {
                    return Ok(Classification::Elliptic {
                        conjugator: Word::from_letters(conj),
                        core: normal_form(&self.ambient, &Word::from_letters(cur))?,
                        side: SideChoice::Either,
                    })
                }
                1 => {
                    let side = syls[0].0;
                    return Ok(Classification::Elliptic {
                        conjugator: Word::from_letters(conj),
                        core: normal_form(&self.ambient, &Word::from_letters(cur))?,
                        side,
                    });
                }
                n => {
                    let first = syls[0].0;
                    let last = syls[n - 1].0;
                    if first != last {
                        return Ok(Classification::Hyperbolic {
                            conjugator: Word::from_letters(conj),
                            core: normal_form(&self.ambient, &Word::from_letters(cur))?,
                            translation_length: n,
                        });
                    }
                    // Conjugate by the last syllable t: w -> t w t^-1,
                    // which folds t into the first syllable.
                    let t = syls[n - 1].1.clone();
                    let keep = cur.len() - t.len();
                    let mut next: Vec<Letter> = t.clone();
                    next.extend_from_slice(&cur[..keep]);
                    cur = nf_letters(&self.ambient, next);
                    conj.extend(invert_letters(&t));
                    conj = nf_letters(&self.ambient, std::mem::take(&mut conj));
                }
            }
        }
        Err(SplitError::Internal("cyclic reduction did not terminate within its cap".into()))
    }
}

/// One factor of an alternating decomposition.
#[derive(Clone, Debug)]
pub struct Syllable {
    pub side: SideChoice,
    pub word: Word,
    pub in_edge_group: bool,
}

/// How an element acts on the tree of a splitting. Both variants carry a
/// conjugator `u` with `w = u * core * u^-1`; for elliptic elements the
/// core lies in a vertex group, for hyperbolic elements the core is
/// cyclically reduced and its syllable count is the translation length.
#[derive(Clone, Debug)]
pub enum Classification {
    Elliptic { conjugator: Word, core: crate::words::NormalForm, side: SideChoice },
    Hyperbolic { conjugator: Word, core: crate::words::NormalForm, translation_length: usize },
}

impl Classification {
    pub fn is_elliptic(&self) -> bool {
        matches!(self, Classification::Elliptic { .. })
    }

    pub fn translation_length(&self) -> usize {
        match self {
            Classification::Elliptic { .. } => 0,
            Classification::Hyperbolic { translation_length, .. } => *translation_length,
        }
    }

    pub fn conjugator(&self) -> &Word {
        match self {
            Classification::Elliptic { conjugator, .. } | Classification::Hyperbolic { conjugator, .. } => {
                conjugator
            }
        }
    }

    pub fn core(&self) -> &crate::words::NormalForm {
        match self {
            Classification::Elliptic { core, .. } | Classification::Hyperbolic { core, .. } => core,
        }
    }

    pub fn kind_str(&self) -> &'static str {
        if self.is_elliptic() {
            "elliptic"
        } else {
            "hyperbolic"
        }
    }

    pub fn describe(&self, g: &Graph) -> String {
        match self {
            Classification::Elliptic { conjugator, core, side } => format!(
                "elliptic (length 0): conjugate of `{}` in {} by `{}`",
                core.display(g),
                side,
                conjugator.display(g),
            ),
            Classification::Hyperbolic { conjugator, core, translation_length } => format!(
                "hyperbolic (length {translation_length}): cyclically reduced core `{}` conjugated by `{}`",
                core.display(g),
                conjugator.display(g),
            ),
        }
    }
}

/// Action on a line through an exponent vector: each element translates
/// the line by its image in the integers.
#[derive(Clone, Debug)]
pub struct LineAction {
    ambient: Graph,
    phi: IntegerVector,
}

impl LineAction {
    pub fn new(g: &Graph, phi: IntegerVector) -> Result<Self, SplitError> {
        if phi.values().len() != g.vertex_count() {
            return Err(SplitError::Word(WordError::VectorLength {
                expected: g.vertex_count(),
                got: phi.values().len(),
            }));
        }
        if phi.is_zero() {
            return Err(SplitError::ZeroVector);
        }
        Ok(Self { ambient: g.clone(), phi })
    }

    pub fn ambient(&self) -> &Graph {
        &self.ambient
    }

    pub fn phi(&self) -> &IntegerVector {
        &self.phi
    }

    /// Translation amount of `w` on the line; zero means `w` lies in the
    /// kernel and acts trivially.
    pub fn translation(&self, w: &Word) -> Result<i64, SplitError> {
        Ok(words::z_image(&self.ambient, &self.phi, w)?)
    }
}

/// JSON form of a homomorphism between two groups given by graphs.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomSpec {
    pub source: crate::graph::GraphSpec,
    pub target: crate::graph::GraphSpec,
    /// Generator label to word string over the target graph.
    pub images: BTreeMap<String, String>,
}

/// Result of checking the defining relations under a homomorphism.
#[derive(Clone, Debug)]
pub struct HomCheck {
    pub ok: bool,
    /// Source edges whose generator images fail to commute.
    pub violations: Vec<(String, String)>,
}

/// A candidate homomorphism, given by a word image for every source
/// generator. Whether it respects the defining relations is a separate
/// check, so ill-defined candidates can be constructed and reported on.
#[derive(Clone, Debug)]
pub struct RaagHom {
    source: Graph,
    target: Graph,
    images: Vec<Word>,
}

impl RaagHom {
    pub fn new(source: &Graph, target: &Graph, images: Vec<Word>) -> Result<Self, SplitError> {
        if images.len() != source.vertex_count() {
            return Err(SplitError::MissingImage(
                source.labels().nth(images.len()).unwrap_or("<none>").to_string(),
            ));
        }
        for w in &images {
            validate_letters(target, w.letters())?;
        }
        Ok(Self { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(g: &Graph) -> Self {
        let images = (0..g.vertex_count()).map(|i| Word::from_letters(vec![Letter::new(i, false)])).collect();
        Self { source: g.clone(), target: g.clone(), images }
    }

    pub fn from_spec(spec: &HomSpec) -> Result<Self, SplitError> {
        let source = Graph::from_spec(&spec.source)?;
        let target = Graph::from_spec(&spec.target)?;
        let mut images = Vec::with_capacity(source.vertex_count());
        for label in source.labels() {
            let text = spec.images.get(label).ok_or_else(|| SplitError::MissingImage(label.to_string()))?;
            images.push(Word::parse(&target, text)?);
        }
        Ok(Self { source, target, images })
    }

    pub fn to_spec(&self) -> HomSpec {
        HomSpec {
            source: self.source.to_spec(),
            target: self.target.to_spec(),
            images: self
                .source
                .labels()
                .enumerate()
                .map(|(i, l)| {
                    let w = &self.images[i];
                    (l.to_string(), if w.is_empty() { String::new() } else { w.display(&self.target) })
                })
                .collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn image(&self, vertex: usize) -> &Word {
        &self.images[vertex]
    }

    /// Verify every edge relation: adjacent generators must have commuting
    /// images. Violating edges are listed.
    pub fn check(&self) -> HomCheck {
        let mut violations = Vec::new();
        for (u, v) in self.source.edge_labels() {
            let iu = self.source.index_of(&u).expect("edge endpoint");
            let iv = self.source.index_of(&v).expect("edge endpoint");
            let uv = self.images[iu].concat(&self.images[iv]);
            let vu = self.images[iv].concat(&self.images[iu]);
            if !words::equal(&self.target, &uv, &vu).expect("validated images") {
                violations.push((u, v));
            }
        }
        HomCheck { ok: violations.is_empty(), violations }
    }

    pub fn is_valid(&self) -> bool {
        self.check().ok
    }

    /// Substitute generator images through `w`.
    pub fn apply(&self, w: &Word) -> Word {
        let mut letters = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.vertex()];
            if l.is_inverse() {
                letters.extend(invert_letters(img.letters()));
            } else {
                letters.extend_from_slice(img.letters());
            }
        }
        Word::from_letters(letters)
    }
}

/// A group acting on the tree of a splitting of another group, through a
/// homomorphism.
#[derive(Clone, Debug)]
pub struct InducedAction {
    hom: RaagHom,
    base: AmalgamSplitting,
}

impl InducedAction {
    pub fn new(hom: RaagHom, base: AmalgamSplitting) -> Result<Self, SplitError> {
        if hom.target() != base.ambient() {
            return Err(SplitError::TargetMismatch);
        }
        let check = hom.check();
        if let Some((u, v)) = check.violations.first() {
            return Err(SplitError::HomViolation(u.clone(), v.clone()));
        }
        Ok(Self { hom, base })
    }

    pub fn hom(&self) -> &RaagHom {
        &self.hom
    }

    pub fn base(&self) -> &AmalgamSplitting {
        &self.base
    }

    /// Source elements act through their images.
    pub fn classify(&self, w: &Word) -> Result<Classification, SplitError> {
        validate_letters(self.hom.source(), w.letters())?;
        self.base.classify(&self.hom.apply(w))
    }

    /// Source vertices whose images land in the edge group of the base
    /// splitting.
    pub fn lambda_from_hom(&self) -> Result<VertexSet, SplitError> {
        let mut out = VertexSet::new();
        for (i, label) in self.hom.source().labels().enumerate() {
            if in_special_subgroup(self.base.ambient(), self.base.lam(), self.hom.image(i))? {
                out.insert(label.to_string());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> Graph {
        Graph::new(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap()
    }

    fn c4() -> Graph {
        Graph::new(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap()
    }

    fn two_points() -> Graph {
        Graph::new(["x", "y"], []).unwrap()
    }

    fn set(labels: &[&str]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied())
    }

    fn p3_split() -> AmalgamSplitting {
        AmalgamSplitting::from_separator(&p3(), &set(&["b"]), "a").unwrap()
    }

    fn w(g: &Graph, s: &str) -> Word {
        Word::parse(g, s).unwrap()
    }

    #[test]
    fn separator_splitting_examples() {
        let s = p3_split();
        assert_eq!(s.side(Side::One), &set(&["a", "b"]));
        assert_eq!(s.side(Side::Two), &set(&["b", "c"]));

        let s = AmalgamSplitting::from_separator(&c4(), &set(&["a", "c"]), "b").unwrap();
        assert_eq!(s.side(Side::One), &set(&["a", "b", "c"]));
        assert_eq!(s.side(Side::Two), &set(&["a", "c", "d"]));

        let s = AmalgamSplitting::from_separator(&two_points(), &set(&[]), "x").unwrap();
        assert_eq!(s.side(Side::One), &set(&["x"]));
        assert_eq!(s.side(Side::Two), &set(&["y"]));

        assert!(matches!(
            AmalgamSplitting::from_separator(&p3(), &set(&["a"]), "b"),
            Err(SplitError::NotSeparating(_))
        ));
        assert!(matches!(
            AmalgamSplitting::from_separator(&p3(), &set(&["b"]), "b"),
            Err(SplitError::PickInSeparator(_))
        ));
    }

    #[test]
    fn descriptor_round_trip() {
        let s = p3_split();
        let d = s.to_descriptor();
        assert_eq!(d.lambda, vec!["b"]);
        let back = AmalgamSplitting::from_descriptor(&p3(), &d).unwrap();
        assert_eq!(back.to_descriptor(), d);
        let bad = SplittingDescriptor {
            lambda: vec!["b".into()],
            side1: vec!["a".into(), "b".into()],
            side2: vec!["b".into()],
        };
        assert!(AmalgamSplitting::from_descriptor(&p3(), &bad).is_err());
    }

    #[test]
    fn syllable_examples() {
        let s = p3_split();
        let g = p3();

        let syls = s.syllable_decompose(&w(&g, "a")).unwrap();
        assert_eq!(syls.len(), 1);
        assert!(syls[0].side.allows(Side::One));
        assert!(!syls[0].in_edge_group);

        let syls = s.syllable_decompose(&w(&g, "b")).unwrap();
        assert_eq!(syls.len(), 1);
        assert!(matches!(syls[0].side, SideChoice::Either));
        assert!(syls[0].in_edge_group);

        let syls = s.syllable_decompose(&w(&g, "a c")).unwrap();
        assert_eq!(syls.len(), 2);
        assert!(matches!(syls[0].side, SideChoice::One));
        assert!(matches!(syls[1].side, SideChoice::Two));
        assert!(!syls[0].in_edge_group && !syls[1].in_edge_group);

        assert!(s.syllable_decompose(&Word::empty()).unwrap().is_empty());
    }

    #[test]
    fn classify_examples() {
        let s = p3_split();
        let g = p3();

        let c = s.classify(&w(&g, "a")).unwrap();
        assert!(c.is_elliptic());
        assert_eq!(c.translation_length(), 0);

        let c = s.classify(&w(&g, "a c")).unwrap();
        assert!(!c.is_elliptic());
        assert_eq!(c.translation_length(), 2);

        let c = s.classify(&w(&g, "a c a^-1")).unwrap();
        assert!(c.is_elliptic());
        // The witness conjugates the core back into a vertex group.
        if let Classification::Elliptic { conjugator, core, .. } = &c {
            let back = core.word().conjugated_by(conjugator);
            assert!(words::equal(&g, &back, &w(&g, "a c a^-1")).unwrap());
        }
    }

    #[test]
    fn classify_longer_hyperbolic() {
        let s = p3_split();
        let g = p3();
        let c = s.classify(&w(&g, "a c a c")).unwrap();
        assert_eq!(c.translation_length(), 4);
        // Conjugates have the same length.
        let c = s.classify(&w(&g, "c a c a c c^-1")).unwrap();
        assert_eq!(c.translation_length(), 4);
    }

    #[test]
    fn line_action_examples() {
        let g = p3();
        let line = LineAction::new(&g, IntegerVector::ones(&g)).unwrap();
        assert_eq!(line.translation(&w(&g, "a b c")).unwrap(), 3);
        assert_eq!(line.translation(&w(&g, "a c^-1")).unwrap(), 0);

        let phi = IntegerVector::from_values(&g, vec![1, 0, 0]).unwrap();
        let line = LineAction::new(&g, phi).unwrap();
        assert_eq!(line.translation(&w(&g, "b")).unwrap(), 0);

        assert!(matches!(
            LineAction::new(&g, IntegerVector::zeros(&g)),
            Err(SplitError::ZeroVector)
        ));
    }

    #[test]
    fn hom_check_examples() {
        let src = p3();
        let tgt = two_points();
        let hom = RaagHom::new(
            &src,
            &tgt,
            vec![w(&tgt, "x"), Word::empty(), w(&tgt, "y")],
        )
        .unwrap();
        assert!(hom.check().ok);

        let edge = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        let free = two_points();
        let bad = RaagHom::new(&edge, &free, vec![w(&free, "x"), w(&free, "y")]).unwrap();
        let check = bad.check();
        assert!(!check.ok);
        assert_eq!(check.violations, vec![("u".to_string(), "v".to_string())]);

        assert!(RaagHom::identity(&c4()).check().ok);
    }

    #[test]
    fn induced_action_examples() {
        let free = two_points();
        let base = AmalgamSplitting::from_separator(&free, &set(&[]), "x").unwrap();
        let f2 = Graph::new(["u", "w"], []).unwrap();
        let hom = RaagHom::new(&f2, &free, vec![w(&free, "x y"), w(&free, "x")]).unwrap();
        let ia = InducedAction::new(hom, base).unwrap();

        let c = ia.classify(&w(&f2, "u")).unwrap();
        assert_eq!(c.translation_length(), 2);
        let c = ia.classify(&w(&f2, "w")).unwrap();
        assert!(c.is_elliptic());
        let c = ia.classify(&Word::empty()).unwrap();
        assert!(c.is_elliptic());
        assert_eq!(c.translation_length(), 0);
    }

    #[test]
    fn lambda_from_hom_examples() {
        let free = two_points();
        let base = AmalgamSplitting::from_separator(&free, &set(&[]), "x").unwrap();
        let src = p3();
        let hom = RaagHom::new(&src, &free, vec![w(&free, "x"), Word::empty(), w(&free, "y")]).unwrap();
        let ia = InducedAction::new(hom, base).unwrap();
        assert_eq!(ia.lambda_from_hom().unwrap(), set(&["b"]));

        let g = p3();
        let base = AmalgamSplitting::from_separator(&g, &set(&["b"]), "a").unwrap();
        let ia = InducedAction::new(RaagHom::identity(&g), base).unwrap();
        assert_eq!(ia.lambda_from_hom().unwrap(), set(&["b"]));
    }

    #[test]
    fn induced_action_rejects_mismatches() {
        let free = two_points();
        let base = AmalgamSplitting::from_separator(&free, &set(&[]), "x").unwrap();
        let edge = Graph::new(["u", "v"], [("u", "v")]).unwrap();
        let bad = RaagHom::new(&edge, &free, vec![w(&free, "x"), w(&free, "y")]).unwrap();
        assert!(matches!(InducedAction::new(bad, base.clone()), Err(SplitError::HomViolation(_, _))));

        let other = p3();
        let hom = RaagHom::identity(&other);
        assert!(matches!(InducedAction::new(hom, base), Err(SplitError::TargetMismatch)));
    }
}
