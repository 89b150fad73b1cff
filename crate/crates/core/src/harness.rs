//! Randomized harnesses: commuting-pair checks of the fixed-set and axis
//! lemmas on a splitting, and the word samplers they share with the test
//! suite. Everything is seeded, so a fixed seed reproduces a run exactly.
//!
//! The three checks, for commuting `g`, `h`:
//! * `g` hyperbolic, `h` elliptic: every visible axis vertex of `g` is
//!   fixed by `h`;
//! * both hyperbolic: the visible axes agree wherever both are testable;
//! * both elliptic: the fixed sets meet, witnessed by overlapping
//!   segments on the path between them.

use crate::graph::Graph;
use crate::splittings::{AmalgamSplitting, SplitError, SplittingDescriptor};
use crate::tree::{act, axis_vertices, build_ball, fixed_vertices, vertex_fixed_by, TreeBall, TreeError};
use crate::words::{equal, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Word(#[from] crate::words::WordError),
}

#[derive(Clone, Debug)]
pub struct LemmaConfig {
    pub seed: u64,
    pub random_pairs: usize,
    pub radius: usize,
    pub vertex_budget: usize,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        Self { seed: 0, random_pairs: 100, radius: 5, vertex_budget: 100_000 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaCheck {
    pub name: String,
    pub tested: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub splitting: SplittingDescriptor,
    pub radius: usize,
    pub generator_pairs: usize,
    pub random_pairs: usize,
    pub checks: Vec<LemmaCheck>,
    pub failures: Vec<String>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty() && self.checks.iter().all(|c| c.tested == c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

/// A uniformly random word of exactly the requested letter count.
pub fn random_word(rng: &mut impl Rng, g: &Graph, len: usize) -> Word {
    let n = g.vertex_count();
    Word::from_letters((0..len).map(|_| Letter::new(rng.gen_range(0..n), rng.gen_bool(0.5))).collect())
}

/// A random commuting pair, one of three shapes (conjugated by a common
/// random word): an adjacent generator pair, two powers of one base word,
/// or a word with a generator adjacent to its whole support.
pub fn random_commuting_pair(rng: &mut impl Rng, g: &Graph) -> (Word, Word) {
    let conj_len = rng.gen_range(0..=2);
    let conj = random_word(rng, g, conj_len);
    let edges = g.edge_labels();
    match rng.gen_range(0..3u8) {
        0 if !edges.is_empty() => {
            let (u, v) = &edges[rng.gen_range(0..edges.len())];
            let a = Word::generator(g, u).expect("edge endpoint");
            let b = Word::generator(g, v).expect("edge endpoint");
            (a.conjugated_by(&conj), b.conjugated_by(&conj))
        }
        1 => {
            // Powers of one base; half the time the base is built from a
            // non-adjacent vertex pair, which tends to act hyperbolically.
            let nonadjacent: Vec<(usize, usize)> = (0..g.vertex_count())
                .flat_map(|i| (0..g.vertex_count()).map(move |j| (i, j)))
                .filter(|&(i, j)| i < j && g.adj_mask(i) & (1 << j) == 0)
                .collect();
            let base = if !nonadjacent.is_empty() && rng.gen_bool(0.5) {
                let (i, j) = nonadjacent[rng.gen_range(0..nonadjacent.len())];
                Word::from_letters(vec![
                    Letter::new(i, rng.gen_bool(0.5)),
                    Letter::new(j, rng.gen_bool(0.5)),
                ])
            } else {
                let base_len = rng.gen_range(1..=2);
                random_word(rng, g, base_len)
            };
            let m = rng.gen_range(1..=2);
            let n = rng.gen_range(1..=2);
            (base.pow(m).conjugated_by(&conj), base.pow(n).conjugated_by(&conj))
        }
        _ => {
            // A word drawn from one vertex's neighborhood commutes with
            // that vertex; this is the shape that mixes kinds.
            let centers: Vec<usize> = (0..g.vertex_count()).filter(|&i| g.adj_mask(i) != 0).collect();
            if centers.is_empty() {
                let base_len = rng.gen_range(1..=2);
                let w = random_word(rng, g, base_len);
                let m = rng.gen_range(1..=2);
                return (w.conjugated_by(&conj), w.pow(m).conjugated_by(&conj));
            }
            let center = centers[rng.gen_range(0..centers.len())];
            let neighbors: Vec<usize> =
                (0..g.vertex_count()).filter(|&i| g.adj_mask(center) & (1 << i) != 0).collect();
            let len = rng.gen_range(1..=4);
            let w = Word::from_letters(
                (0..len)
                    .map(|_| Letter::new(neighbors[rng.gen_range(0..neighbors.len())], rng.gen_bool(0.5)))
                    .collect(),
            );
            let h = Word::from_letters(vec![Letter::new(center, false)]);
            (w.conjugated_by(&conj), h.conjugated_by(&conj))
        }
    }
}

/// Count canonical normal forms of length at most `radius`; `None` once
/// the count passes `cap`. Cheap feasibility probe for ball building.
pub fn count_elements(g: &Graph, radius: usize, cap: usize) -> Option<usize> {
    let letters: Vec<Letter> =
        (0..g.vertex_count()).flat_map(|i| [Letter::new(i, false), Letter::new(i, true)]).collect();
    let mut count = 1usize;
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(word) = stack.pop() {
        if word.len() == radius {
            continue;
        }
        for &l in &letters {
            let mut cand = word.clone();
            cand.push(l);
            let nf = crate::words::nf_letters(g, cand.clone());
            if nf.len() == cand.len() && nf == cand {
                count += 1;
                if count > cap {
                    return None;
                }
                stack.push(cand);
            }
        }
    }
    Some(count)
}

struct Tally {
    name: &'static str,
    tested: usize,
    passed: usize,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self { name, tested: 0, passed: 0 }
    }

    fn record(&mut self, pass: bool) {
        self.tested += 1;
        self.passed += usize::from(pass);
    }
}

fn check_pair(
    s: &AmalgamSplitting,
    ball: &TreeBall,
    g: &Word,
    h: &Word,
    tallies: &mut [Tally; 3],
    failures: &mut Vec<String>,
) -> Result<bool, HarnessError> {
    let ambient = s.ambient();
    debug_assert!(equal(ambient, &g.concat(h), &h.concat(g))?);
    let cg = s.classify(g)?;
    let ch = s.classify(h)?;
    let describe = |which: &str| format!("{which}: g=`{}`, h=`{}`", g.display(ambient), h.display(ambient));
    match (cg.is_elliptic(), ch.is_elliptic()) {
        (false, true) | (true, false) => {
            let (hyp, ell) = if cg.is_elliptic() { (h, g) } else { (g, h) };
            let axis = axis_vertices(s, hyp, ball)?;
            if axis.is_empty() {
                return Ok(false);
            }
            let mut pass = true;
            for v in axis {
                pass &= vertex_fixed_by(s, ell, ball.vertex(v))?;
            }
            tallies[0].record(pass);
            if !pass {
                failures.push(describe("axis not inside the commuting elliptic's fixed set"));
            }
            Ok(true)
        }
        (false, false) => {
            let ag = axis_vertices(s, g, ball)?;
            let ah = axis_vertices(s, h, ball)?;
            // Compare on the common testable domain: vertices whose images
            // under both elements stay in the ball.
            let mut tested_any = false;
            let mut pass = true;
            for id in 0..ball.vertex_count() {
                let v = ball.vertex(id);
                let g_ok = ball.locate_vertex(&act(s, g, v)?).is_some();
                let h_ok = ball.locate_vertex(&act(s, h, v)?).is_some();
                if g_ok && h_ok {
                    tested_any = true;
                    pass &= ag.contains(&id) == ah.contains(&id);
                }
            }
            if !tested_any {
                return Ok(false);
            }
            tallies[1].record(pass);
            if !pass {
                failures.push(describe("commuting hyperbolic elements with different visible axes"));
            }
            Ok(true)
        }
        (true, true) => {
            let fg = fixed_vertices(s, g, ball)?;
            let fh = fixed_vertices(s, h, ball)?;
            let (Some(&x), Some(&y)) = (fg.first(), fh.first()) else {
                return Ok(false);
            };
            let path = ball.geodesic(x, y);
            // The fixed sets meet iff their segments on the path overlap.
            let pass = path.iter().any(|&p| {
                let v = ball.vertex(p);
                vertex_fixed_by(s, g, v).unwrap_or(false) && vertex_fixed_by(s, h, v).unwrap_or(false)
            });
            tallies[2].record(pass);
            if !pass {
                failures.push(describe("commuting elliptic elements with disjoint fixed segments"));
            }
            Ok(true)
        }
    }
}

/// Check the commuting-pair lemmas on every adjacent generator pair and a
/// seeded batch of random commuting pairs. Pairs whose witnesses fall
/// outside the ball are re-sampled rather than silently passed.
pub fn run_lemma_harness(s: &AmalgamSplitting, cfg: &LemmaConfig) -> Result<LemmaReport, HarnessError> {
    let ambient = s.ambient().clone();
    let ball = build_ball(s, cfg.radius, cfg.vertex_budget)?;
    let mut tallies = [
        Tally::new("hyperbolic_elliptic_axis_in_fixed_set"),
        Tally::new("hyperbolic_pair_same_axis"),
        Tally::new("elliptic_pair_fixed_sets_meet"),
    ];
    let mut failures = Vec::new();

    let mut generator_pairs = 0;
    for (u, v) in ambient.edge_labels() {
        let a = Word::generator(&ambient, &u)?;
        let b = Word::generator(&ambient, &v)?;
        if check_pair(s, &ball, &a, &b, &mut tallies, &mut failures)? {
            generator_pairs += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut random_pairs = 0;
    let mut attempts = 0;
    while random_pairs < cfg.random_pairs && attempts < cfg.random_pairs * 40 {
        attempts += 1;
        let (g, h) = random_commuting_pair(&mut rng, &ambient);
        if check_pair(s, &ball, &g, &h, &mut tallies, &mut failures)? {
            random_pairs += 1;
        }
    }

    Ok(LemmaReport {
        splitting: s.to_descriptor(),
        radius: cfg.radius,
        generator_pairs,
        random_pairs,
        checks: tallies
            .into_iter()
            .map(|t| LemmaCheck { name: t.name.to_string(), tested: t.tested, passed: t.passed })
            .collect(),
        failures,
    })
}
