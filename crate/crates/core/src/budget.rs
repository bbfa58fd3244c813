/// Resource limits for the search-heavy operations.
///
/// Every bounded construction (lazy automata, word enumeration, candidate
/// ideal search) takes a budget and fails with [`crate::Error::Resource`]
/// instead of running away. The environment variable `SUBSEQ_RESOURCE_CAP`
/// overrides the state/word budget when building via [`Budget::from_env`].
#[derive(Debug, Clone)]
pub struct Budget {
    /// Maximum number of automaton states any lazy construction may intern.
    pub state_cap: usize,
    /// Maximum number of words an enumeration may visit.
    pub word_cap: usize,
    /// Infinity-norm bound for bounded counter-automaton oracles.
    pub counter_bound: i64,
    /// Walk-length bound for bounded closure-membership searches.
    pub walk_bound: usize,
    /// Maximum candidate ideal length tried by grammar decomposition.
    pub decomposition_depth_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            state_cap: 2_000_000,
            word_cap: 10_000_000,
            counter_bound: 256,
            walk_bound: 4096,
            decomposition_depth_cap: 8,
        }
    }
}

impl Budget {
    /// Default budget with the state/word caps overridden by
    /// `SUBSEQ_RESOURCE_CAP` when the variable is set to a natural number.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var("SUBSEQ_RESOURCE_CAP") {
            if let Ok(cap) = v.trim().parse::<usize>() {
                b.state_cap = cap;
                b.word_cap = cap;
            }
        }
        b
    }

    /// Budget with a reduced state cap, used by constructions that probe
    /// whether an automaton is materializable before committing to it.
    pub fn with_state_cap(&self, cap: usize) -> Self {
        let mut b = self.clone();
        b.state_cap = cap;
        b
    }
}
