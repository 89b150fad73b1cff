//! Run-wide budgets and bounds.

/// Budgets shared by the tree and checker layers. All bounds are hard:
/// exceeding one is an error, never a silently wrong answer.
#[derive(Clone, Debug)]
pub struct Config {
    /// Largest ball radius (normal-form word length) the checker may use.
    pub ball_radius: usize,
    /// Number of axis periods used by bounded point-wise certification.
    pub axis_bound: usize,
    /// Cap on distinct tree vertices per ball.
    pub vertex_budget: usize,
    /// Seed for randomized harnesses; fixed seed means identical output.
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Self { ball_radius: 6, axis_bound: 8, vertex_budget: 100_000, seed: 0 }
    }
}
