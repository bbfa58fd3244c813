//! Finite automata: product, determinization, complement, inclusion,
//! downward closure of an NFA, and the short-witness machinery.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::alphabet::{Alphabet, SymId, Word};
use crate::budget::Budget;
use crate::error::Error;
use crate::Result;

/// State index. States of an automaton are always `0..state_count`.
pub type StateId = u32;

/// Nondeterministic finite automaton with optional ε-transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    state_count: u32,
    /// Transitions `(source, label, target)`; `None` is ε.
    transitions: BTreeSet<(StateId, Option<SymId>, StateId)>,
    initial: StateId,
    finals: BTreeSet<StateId>,
}

impl Nfa {
    pub fn new(
        alphabet: Alphabet,
        state_count: u32,
        initial: StateId,
        finals: impl IntoIterator<Item = StateId>,
    ) -> Result<Nfa> {
        if state_count == 0 {
            return Err(Error::invalid("an NFA needs at least one state"));
        }
        if initial >= state_count {
            return Err(Error::invalid("initial state out of range"));
        }
        let finals: BTreeSet<StateId> = finals.into_iter().collect();
        if finals.iter().any(|&q| q >= state_count) {
            return Err(Error::invalid("final state out of range"));
        }
        Ok(Nfa { alphabet, state_count, transitions: BTreeSet::new(), initial, finals })
    }

    pub fn add_transition(&mut self, from: StateId, label: Option<SymId>, to: StateId) -> Result<()> {
        if from >= self.state_count || to >= self.state_count {
            return Err(Error::invalid("transition endpoint out of range"));
        }
        if let Some(s) = label {
            if s as usize >= self.alphabet.len() {
                return Err(Error::invalid("transition label out of range"));
            }
        }
        self.transitions.insert((from, label, to));
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> u32 {
        self.state_count
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn transitions(&self) -> impl Iterator<Item = &(StateId, Option<SymId>, StateId)> {
        self.transitions.iter()
    }

    /// ε-closure of a state set.
    pub fn eps_closure(&self, states: &BTreeSet<StateId>) -> BTreeSet<StateId> {
        let mut out = states.clone();
        let mut queue: VecDeque<StateId> = states.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for &(f, l, t) in self.transitions.range((q, None, 0)..=(q, None, StateId::MAX)) {
                debug_assert!(f == q && l.is_none());
                if out.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        out
    }

    fn step(&self, states: &BTreeSet<StateId>, sym: SymId) -> BTreeSet<StateId> {
        let mut out = BTreeSet::new();
        for &q in states {
            for &(_, l, t) in self.transitions.range((q, Some(sym), 0)..=(q, Some(sym), StateId::MAX)) {
                if l == Some(sym) {
                    out.insert(t);
                }
            }
        }
        self.eps_closure(&out)
    }

    /// Membership test by subset simulation.
    pub fn accepts(&self, w: &Word) -> bool {
        debug_assert_eq!(w.alphabet(), &self.alphabet);
        let mut cur = self.eps_closure(&BTreeSet::from([self.initial]));
        for &s in w.symbols() {
            if cur.is_empty() {
                return false;
            }
            cur = self.step(&cur, s);
        }
        cur.iter().any(|q| self.finals.contains(q))
    }

    /// True iff no final state is reachable from the initial state.
    pub fn is_empty_language(&self) -> bool {
        let mut seen = BTreeSet::from([self.initial]);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            if self.finals.contains(&q) {
                return false;
            }
            for &(f, _, t) in self.transitions.range((q, None, 0)..=(q, Some(SymId::MAX), StateId::MAX)) {
                debug_assert_eq!(f, q);
                if seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        true
    }

    /// States from which a final state is reachable.
    fn coreachable(&self) -> BTreeSet<StateId> {
        let mut rev: BTreeMap<StateId, Vec<StateId>> = BTreeMap::new();
        for &(f, _, t) in &self.transitions {
            rev.entry(t).or_default().push(f);
        }
        let mut out = self.finals.clone();
        let mut queue: VecDeque<StateId> = out.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            if let Some(preds) = rev.get(&q) {
                for &p in preds {
                    if out.insert(p) {
                        queue.push_back(p);
                    }
                }
            }
        }
        out
    }

    /// Longest word length accepted, or `None` when the language is infinite
    /// (a useful cycle exists) or empty.
    pub fn max_word_len(&self) -> Option<usize> {
        if self.is_empty_language() {
            return None;
        }
        // trim to useful states
        let co = self.coreachable();
        let mut reach = BTreeSet::from([self.initial]);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            for &(f, _, t) in self.transitions.range((q, None, 0)..=(q, Some(SymId::MAX), StateId::MAX)) {
                debug_assert_eq!(f, q);
                if reach.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        let useful: BTreeSet<StateId> = reach.intersection(&co).copied().collect();
        // longest path in the useful subgraph counting lettered edges;
        // any cycle among useful states that contains a letter makes it infinite,
        // and ε-cycles contribute 0, so contract ε-SCCs first via Tarjan-free
        // iterative DP with cycle detection.
        let edges: Vec<(StateId, usize, StateId)> = self
            .transitions
            .iter()
            .filter(|(f, _, t)| useful.contains(f) && useful.contains(t))
            .map(|&(f, l, t)| (f, usize::from(l.is_some()), t))
            .collect();
        // Bellman-Ford style longest path; |useful| rounds, detect improvement after.
        let mut dist: BTreeMap<StateId, usize> = BTreeMap::new();
        dist.insert(self.initial, 0);
        let rounds = useful.len() + 1;
        for round in 0..=rounds {
            let mut changed = false;
            for &(f, w, t) in &edges {
                if let Some(&df) = dist.get(&f) {
                    let cand = df + w;
                    if dist.get(&t).map_or(true, |&dt| cand > dt) {
                        dist.insert(t, cand);
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
            if round == rounds {
                return None; // still improving: a useful lettered cycle exists
            }
        }
        self.finals.iter().filter_map(|q| dist.get(q)).max().copied()
    }
}

/// Deterministic finite automaton with a total transition function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: u32,
    /// `delta[state * |X| + sym]`
    delta: Vec<StateId>,
    initial: StateId,
    finals: BTreeSet<StateId>,
    /// Levels witnessing orderedness: every non-loop transition strictly
    /// increases the level, so the DFA is acyclic except for loops.
    ordered_witness: Option<Vec<u32>>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        state_count: u32,
        delta: Vec<StateId>,
        initial: StateId,
        finals: BTreeSet<StateId>,
        ordered_witness: Option<Vec<u32>>,
    ) -> Result<Dfa> {
        if state_count == 0 || initial >= state_count {
            return Err(Error::invalid("bad DFA states"));
        }
        if delta.len() != state_count as usize * alphabet.len() {
            return Err(Error::invalid("DFA transition table is not total"));
        }
        if delta.iter().any(|&q| q >= state_count) {
            return Err(Error::invalid("DFA transition target out of range"));
        }
        let dfa = Dfa { alphabet, state_count, delta, initial, finals, ordered_witness };
        if dfa.ordered_witness.is_some() && !dfa.validate_ordered() {
            return Err(Error::invalid("ordered witness does not validate"));
        }
        Ok(dfa)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> u32 {
        self.state_count
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn next(&self, q: StateId, sym: SymId) -> StateId {
        self.delta[q as usize * self.alphabet.len() + sym as usize]
    }

    /// Checks that every non-loop transition strictly increases the witness level.
    pub fn validate_ordered(&self) -> bool {
        let Some(levels) = &self.ordered_witness else {
            return false;
        };
        if levels.len() != self.state_count as usize {
            return false;
        }
        (0..self.state_count).all(|q| {
            self.alphabet.ids().all(|s| {
                let t = self.next(q, s);
                t == q || levels[q as usize] < levels[t as usize]
            })
        })
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered_witness.is_some()
    }

    pub fn accepts(&self, w: &Word) -> bool {
        debug_assert_eq!(w.alphabet(), &self.alphabet);
        let mut q = self.initial;
        for &s in w.symbols() {
            q = self.next(q, s);
        }
        self.finals.contains(&q)
    }

    /// Complement; total DFAs complement by flipping final states.
    pub fn complement(&self) -> Dfa {
        let finals = (0..self.state_count).filter(|q| !self.finals.contains(q)).collect();
        Dfa { finals, ..self.clone() }
    }

    /// View as an NFA (forgetting totality and order).
    pub fn as_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(self.alphabet.clone(), self.state_count, self.initial, self.finals.iter().copied())
            .expect("valid dfa");
        for q in 0..self.state_count {
            for s in self.alphabet.ids() {
                nfa.add_transition(q, Some(s), self.next(q, s)).expect("in range");
            }
        }
        nfa
    }
}

/// Saturates an NFA so it accepts the downward closure of its language:
/// every lettered transition gets an ε-twin, letting runs skip letters.
/// The state count is unchanged.
pub fn downward_close_nfa(a: &Nfa) -> Nfa {
    let mut out = a.clone();
    let lettered: Vec<(StateId, StateId)> = a
        .transitions()
        .filter(|(_, l, _)| l.is_some())
        .map(|&(f, _, t)| (f, t))
        .collect();
    for (f, t) in lettered {
        out.transitions.insert((f, None, t));
    }
    out
}

/// Subset construction after ε-elimination. Only reachable subsets are
/// materialized; the result is total (the empty subset acts as sink).
pub fn determinize(a: &Nfa) -> Result<Dfa> {
    determinize_with(a, &Budget::default())
}

pub fn determinize_with(a: &Nfa, budget: &Budget) -> Result<Dfa> {
    let alpha = a.alphabet().clone();
    let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
    let mut subsets: Vec<BTreeSet<StateId>> = Vec::new();
    let mut delta: Vec<StateId> = Vec::new();
    let start = a.eps_closure(&BTreeSet::from([a.initial()]));
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut next = 0usize;
    while next < subsets.len() {
        let cur = subsets[next].clone();
        for s in alpha.ids() {
            let succ = a.step(&cur, s);
            let id = match index.get(&succ) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= budget.state_cap {
                        return Err(Error::resource("determinization state cap"));
                    }
                    let id = subsets.len() as StateId;
                    index.insert(succ.clone(), id);
                    subsets.push(succ);
                    id
                }
            };
            delta.push(id);
        }
        next += 1;
    }
    let finals: BTreeSet<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, p)| p.iter().any(|q| a.finals().contains(q)))
        .map(|(i, _)| i as StateId)
        .collect();
    Dfa::new(alpha, subsets.len() as u32, delta, 0, finals, None)
}

/// Product construction; accepts the intersection of the two languages.
pub fn intersect(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut trans: Vec<(StateId, Option<SymId>, StateId)> = Vec::new();
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let get = |pairs: &mut Vec<(StateId, StateId)>, index: &mut HashMap<(StateId, StateId), StateId>, p: (StateId, StateId)| {
        *index.entry(p).or_insert_with(|| {
            pairs.push(p);
            (pairs.len() - 1) as StateId
        })
    };
    let init = get(&mut pairs, &mut index, (a.initial(), b.initial()));
    let mut next = 0usize;
    while next < pairs.len() {
        let (p, q) = pairs[next];
        let src = next as StateId;
        next += 1;
        for &(_, l, p2) in a.transitions.range((p, None, 0)..=(p, Some(SymId::MAX), StateId::MAX)) {
            match l {
                None => {
                    let dst = get(&mut pairs, &mut index, (p2, q));
                    trans.push((src, None, dst));
                }
                Some(s) => {
                    for &(_, l2, q2) in b.transitions.range((q, Some(s), 0)..=(q, Some(s), StateId::MAX)) {
                        if l2 == Some(s) {
                            let dst = get(&mut pairs, &mut index, (p2, q2));
                            trans.push((src, Some(s), dst));
                        }
                    }
                }
            }
        }
        for &(_, l, q2) in b.transitions.range((q, None, 0)..=(q, None, StateId::MAX)) {
            debug_assert!(l.is_none());
            let dst = get(&mut pairs, &mut index, (p, q2));
            trans.push((src, None, dst));
        }
    }
    let finals: Vec<StateId> = pairs
        .iter()
        .enumerate()
        .filter(|(_, (p, q))| a.finals().contains(p) && b.finals().contains(q))
        .map(|(i, _)| i as StateId)
        .collect();
    let mut out = Nfa::new(a.alphabet().clone(), pairs.len() as u32, init, finals)?;
    for (f, l, t) in trans {
        out.add_transition(f, l, t)?;
    }
    Ok(out)
}

/// Union via a fresh initial state with ε-edges into both operands.
pub fn union(a: &Nfa, b: &Nfa) -> Result<Nfa> {
    a.alphabet().ensure_same(b.alphabet())?;
    let off_a = 1u32;
    let off_b = 1 + a.state_count();
    let total = 1 + a.state_count() + b.state_count();
    let finals = a
        .finals()
        .iter()
        .map(|&q| q + off_a)
        .chain(b.finals().iter().map(|&q| q + off_b));
    let mut out = Nfa::new(a.alphabet().clone(), total, 0, finals)?;
    out.add_transition(0, None, a.initial() + off_a)?;
    out.add_transition(0, None, b.initial() + off_b)?;
    for &(f, l, t) in a.transitions() {
        out.add_transition(f + off_a, l, t + off_a)?;
    }
    for &(f, l, t) in b.transitions() {
        out.add_transition(f + off_b, l, t + off_b)?;
    }
    Ok(out)
}

/// Language inclusion `L(a) ⊆ L(b)`, decided on the fly as emptiness of
/// `a × complement(determinize(b))`: explore pairs of an `a`-state and a
/// `b`-subset, and fail on a pair that is `a`-final with no `b`-final inside.
pub fn nfa_inclusion(a: &Nfa, b: &Nfa) -> Result<bool> {
    nfa_inclusion_with(a, b, &Budget::default())
}

pub fn nfa_inclusion_with(a: &Nfa, b: &Nfa, budget: &Budget) -> Result<bool> {
    Ok(inclusion_counterexample(a, b, budget)?.is_none())
}

/// Shortest word in `L(a) ∖ L(b)`, or `None` when `L(a) ⊆ L(b)`.
pub fn inclusion_counterexample(a: &Nfa, b: &Nfa, budget: &Budget) -> Result<Option<Word>> {
    a.alphabet().ensure_same(b.alphabet())?;
    let alpha = a.alphabet().clone();
    type Key = (BTreeSet<StateId>, BTreeSet<StateId>);
    // pair the ε-closed a-subset with the b-subset so witness extraction is a BFS
    let start: Key = (
        a.eps_closure(&BTreeSet::from([a.initial()])),
        b.eps_closure(&BTreeSet::from([b.initial()])),
    );
    let mut parent: HashMap<Key, Option<(Key, SymId)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some((pa, pb)) = queue.pop_front() {
        let a_final = pa.iter().any(|q| a.finals().contains(q));
        let b_final = pb.iter().any(|q| b.finals().contains(q));
        if a_final && !b_final {
            // reconstruct the witness
            let mut w = Vec::new();
            let mut cur = (pa, pb);
            while let Some(Some((prev, s))) = parent.get(&cur) {
                w.push(*s);
                cur = prev.clone();
            }
            w.reverse();
            return Ok(Some(alpha.word(w)));
        }
        for s in alpha.ids() {
            let na = a.step(&pa, s);
            if na.is_empty() {
                continue; // nothing left of L(a); no counterexample down here
            }
            let nb = b.step(&pb, s);
            let key = (na, nb);
            if !parent.contains_key(&key) {
                if parent.len() >= budget.state_cap {
                    return Err(Error::resource("inclusion product cap"));
                }
                parent.insert(key.clone(), Some(((pa.clone(), pb.clone()), s)));
                queue.push_back(key);
            }
        }
    }
    Ok(None)
}

/// All words over `alpha` of length at most `maxlen`, in length-lex order.
pub fn all_words(alpha: &Alphabet, maxlen: usize) -> Vec<Word> {
    let mut out = vec![alpha.empty_word()];
    let mut level: Vec<Vec<SymId>> = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for w in &level {
            for s in alpha.ids() {
                let mut v = w.clone();
                v.push(s);
                out.push(alpha.word(v.clone()));
                next.push(v);
            }
        }
        level = next;
    }
    out
}

/// Exactly `L(a) ∩ X^{≤maxlen}`, by prefix search with dead-subset pruning.
/// Desk-scale oracle; errors past the word budget.
pub fn enumerate_upto(a: &Nfa, maxlen: usize) -> Result<BTreeSet<Word>> {
    enumerate_upto_with(a, maxlen, &Budget::default())
}

pub fn enumerate_upto_with(a: &Nfa, maxlen: usize, budget: &Budget) -> Result<BTreeSet<Word>> {
    let alpha = a.alphabet().clone();
    let mut out = BTreeSet::new();
    let start = a.eps_closure(&BTreeSet::from([a.initial()]));
    let mut level: Vec<(Vec<SymId>, BTreeSet<StateId>)> = vec![(Vec::new(), start)];
    let mut visited = 1usize;
    for len in 0..=maxlen {
        for (w, states) in &level {
            debug_assert_eq!(w.len(), len);
            if states.iter().any(|q| a.finals().contains(q)) {
                out.insert(alpha.word(w.clone()));
            }
        }
        if len == maxlen {
            break;
        }
        let mut next = Vec::new();
        for (w, states) in &level {
            for s in alpha.ids() {
                let succ = a.step(states, s);
                if succ.is_empty() {
                    continue;
                }
                visited += 1;
                if visited > budget.word_cap {
                    return Err(Error::resource("enumeration word cap"));
                }
                let mut v = w.clone();
                v.push(s);
                next.push((v, succ));
            }
        }
        level = next;
    }
    Ok(out)
}

/// DFA for `X* ∖ ↓L(a)`.
///
/// States are subsets of `a`'s states, starting from the full set; reading
/// `x` keeps exactly the states reachable via a path on which `x` occurs.
/// A word is accepted when the surviving set contains no final state, i.e.
/// it is a subword of no accepted word.
pub fn subset_reject_dfa(a: &Nfa) -> Result<Dfa> {
    subset_reject_dfa_with(a, &Budget::default())
}

pub fn subset_reject_dfa_with(a: &Nfa, budget: &Budget) -> Result<Dfa> {
    let alpha = a.alphabet().clone();
    let all: BTreeSet<StateId> = (0..a.state_count()).collect();
    // reach_any = reflexive-transitive closure over all edges;
    // one x-step sandwiched between closures gives "path on which x occurs".
    let reach_any = |from: &BTreeSet<StateId>| -> BTreeSet<StateId> {
        let mut out = from.clone();
        let mut queue: VecDeque<StateId> = from.iter().copied().collect();
        while let Some(q) = queue.pop_front() {
            for &(_, _, t) in a.transitions.range((q, None, 0)..=(q, Some(SymId::MAX), StateId::MAX)) {
                if out.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        out
    };
    let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
    let mut subsets = vec![all.clone()];
    index.insert(all, 0);
    let mut delta = Vec::new();
    let mut next = 0usize;
    while next < subsets.len() {
        let cur = subsets[next].clone();
        next += 1;
        let closed = reach_any(&cur);
        for s in alpha.ids() {
            let mut stepped = BTreeSet::new();
            for &q in &closed {
                for &(_, l, t) in a.transitions.range((q, Some(s), 0)..=(q, Some(s), StateId::MAX)) {
                    if l == Some(s) {
                        stepped.insert(t);
                    }
                }
            }
            let succ = reach_any(&stepped);
            let id = match index.get(&succ) {
                Some(&id) => id,
                None => {
                    if subsets.len() >= budget.state_cap {
                        return Err(Error::resource("subset-reject state cap"));
                    }
                    let id = subsets.len() as StateId;
                    index.insert(succ.clone(), id);
                    subsets.push(succ);
                    id
                }
            };
            delta.push(id);
        }
    }
    let finals: BTreeSet<StateId> = subsets
        .iter()
        .enumerate()
        .filter(|(_, p)| p.is_disjoint(a.finals()))
        .map(|(i, _)| i as StateId)
        .collect();
    Dfa::new(alpha, subsets.len() as u32, delta, 0, finals, None)
}

/// Searches for a short witness `w ∈ ↓K ∖ ↓L(a)`.
///
/// `member_k` must decide membership in `↓K`. All words of length at most
/// `|a| + 1` are tried in length-lexicographic order; if none qualifies,
/// `↓K ⊆ ↓L(a)` holds and `None` is returned. Completeness of this bound is
/// exactly the short-witness guarantee.
pub fn find_short_witness(
    member_k: &mut dyn FnMut(&Word) -> bool,
    a: &Nfa,
    alphabet: &Alphabet,
    budget: &Budget,
) -> Result<Option<Word>> {
    alphabet.ensure_same(a.alphabet())?;
    let reject = subset_reject_dfa_with(a, budget)?;
    let bound = a.state_count() as usize + 1;
    let mut level: Vec<Vec<SymId>> = vec![Vec::new()];
    let mut visited = 0usize;
    for len in 0..=bound {
        for w in &level {
            visited += 1;
            if visited > budget.word_cap {
                return Err(Error::resource("short-witness word cap"));
            }
            let word = alphabet.word(w.clone());
            if reject.accepts(&word) && member_k(&word) {
                return Ok(Some(word));
            }
        }
        if len == bound {
            break;
        }
        let mut next = Vec::new();
        for w in &level {
            for s in alphabet.ids() {
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        level = next;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha_ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    /// NFA accepting exactly the given finite set of words (trie-shaped).
    pub(crate) fn nfa_for_words(alpha: &Alphabet, words: &[&str]) -> Nfa {
        let words: Vec<Word> = words.iter().map(|w| alpha.parse_word(w).unwrap()).collect();
        crate::nfa::nfa_from_word_set(alpha, &words.into_iter().collect())
    }

    fn star(alpha: &Alphabet, syms: &[&str]) -> Nfa {
        // single state looping on the given symbols
        let mut a = Nfa::new(alpha.clone(), 1, 0, [0]).unwrap();
        for s in syms {
            a.add_transition(0, Some(alpha.id_of(s).unwrap()), 0).unwrap();
        }
        a
    }

    fn ab_star(alpha: &Alphabet) -> Nfa {
        // (ab)*
        let mut a = Nfa::new(alpha.clone(), 2, 0, [0]).unwrap();
        a.add_transition(0, Some(alpha.id_of("a").unwrap()), 1).unwrap();
        a.add_transition(1, Some(alpha.id_of("b").unwrap()), 0).unwrap();
        a
    }

    #[test]
    fn downward_close_examples() {
        let x = alpha_ab();
        let ab = nfa_for_words(&x, &["a b"]);
        let closed = downward_close_nfa(&ab);
        let langs = enumerate_upto(&closed, 2).unwrap();
        let expect: BTreeSet<Word> =
            ["", "a", "b", "a b"].iter().map(|w| x.parse_word(w).unwrap()).collect();
        assert_eq!(langs, expect);
        assert_eq!(closed.state_count(), ab.state_count());

        let empty = Nfa::new(x.clone(), 1, 0, []).unwrap();
        assert!(downward_close_nfa(&empty).is_empty_language());
    }

    #[test]
    fn downward_close_abstar_is_full() {
        // ↓(ab)* = {a,b}*: every word w of length ≤ 6 embeds into (ab)^6
        let x = alpha_ab();
        let closed = downward_close_nfa(&ab_star(&x));
        let got = enumerate_upto(&closed, 6).unwrap();
        let all: BTreeSet<Word> = all_words(&x, 6).into_iter().collect();
        assert_eq!(got, all);
        assert!(nfa_inclusion(&closed, &star(&x, &["a", "b"])).unwrap());
    }

    #[test]
    fn intersect_and_empty() {
        let x = alpha_ab();
        let astar = star(&x, &["a"]);
        let bstar = star(&x, &["b"]);
        let both = intersect(&astar, &bstar).unwrap();
        let words = enumerate_upto(&both, 3).unwrap();
        assert_eq!(words, BTreeSet::from([x.empty_word()]));

        let no_finals = Nfa::new(x.clone(), 2, 0, []).unwrap();
        assert!(no_finals.is_empty_language());
    }

    #[test]
    fn accepts_examples() {
        let x = alpha_ab();
        let a = ab_star(&x);
        assert!(a.accepts(&x.parse_word("a b a b").unwrap()));
        assert!(!a.accepts(&x.parse_word("a a").unwrap()));
    }

    #[test]
    fn inclusion_examples() {
        let x = alpha_ab();
        let ab = nfa_for_words(&x, &["a b"]);
        let full = star(&x, &["a", "b"]);
        assert!(nfa_inclusion(&ab, &full).unwrap());
        assert!(!nfa_inclusion(&star(&x, &["a"]), &ab).unwrap());
        let mismatch = star(&Alphabet::new(["a"]).unwrap(), &["a"]);
        assert!(nfa_inclusion(&mismatch, &full).is_err());
    }

    #[test]
    fn inclusion_agrees_with_reference_construction() {
        // on-the-fly check vs explicit product with the complement DFA
        let x = alpha_ab();
        let corpus = [
            ab_star(&x),
            star(&x, &["a"]),
            star(&x, &["a", "b"]),
            nfa_for_words(&x, &["a b", "b"]),
            downward_close_nfa(&ab_star(&x)),
            Nfa::new(x.clone(), 1, 0, []).unwrap(),
        ];
        for a in &corpus {
            for b in &corpus {
                let reference = {
                    let comp = determinize(b).unwrap().complement();
                    intersect(a, &comp.as_nfa()).unwrap().is_empty_language()
                };
                assert_eq!(nfa_inclusion(a, b).unwrap(), reference);
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let x = alpha_ab();
        let astar = star(&x, &["a"]);
        let words = enumerate_upto(&astar, 2).unwrap();
        let expect: BTreeSet<Word> = ["", "a", "a a"].iter().map(|w| x.parse_word(w).unwrap()).collect();
        assert_eq!(words, expect);

        let ab = nfa_for_words(&x, &["a b"]);
        assert!(enumerate_upto(&ab, 1).unwrap().is_empty());
        let closed = downward_close_nfa(&ab);
        let got = enumerate_upto(&closed, 2).unwrap();
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn subset_reject_examples() {
        let x = alpha_ab();
        // L = {ε}: rejector accepts X⁺
        let eps_only = Nfa::new(x.clone(), 1, 0, [0]).unwrap();
        let d = subset_reject_dfa(&eps_only).unwrap();
        for w in all_words(&x, 3) {
            assert_eq!(d.accepts(&w), !w.is_empty(), "{w}");
        }
        // L = X*: rejector accepts ∅
        let full = star(&x, &["a", "b"]);
        let d = subset_reject_dfa(&full).unwrap();
        for w in all_words(&x, 3) {
            assert!(!d.accepts(&w));
        }
        // L = {ab}: rejector rejects exactly ↓{ab} = {ε,a,b,ab}
        let ab = nfa_for_words(&x, &["a b"]);
        let d = subset_reject_dfa(&ab).unwrap();
        let closed = downward_close_nfa(&ab);
        for w in all_words(&x, 4) {
            assert_eq!(d.accepts(&w), !closed.accepts(&w), "{w}");
        }
    }

    #[test]
    fn subset_reject_agrees_with_complement_of_closure() {
        let x = alpha_ab();
        let corpus = [ab_star(&x), star(&x, &["a"]), nfa_for_words(&x, &["a b", "b a"]), Nfa::new(x.clone(), 2, 0, []).unwrap()];
        for a in &corpus {
            let rej = subset_reject_dfa(a).unwrap();
            let reference = determinize(&downward_close_nfa(a)).unwrap().complement();
            for w in all_words(&x, a.state_count() as usize + 2) {
                assert_eq!(rej.accepts(&w), reference.accepts(&w), "{w}");
            }
        }
    }

    #[test]
    fn short_witness_examples() {
        let x = alpha_ab();
        let budget = Budget::default();
        // K = {ab} vs A = {a,b}*: inclusion holds, no witness
        let full = star(&x, &["a", "b"]);
        let k_ab = downward_close_nfa(&nfa_for_words(&x, &["a b"]));
        let mut member = |w: &Word| k_ab.accepts(w);
        assert!(find_short_witness(&mut member, &full, &x, &budget).unwrap().is_none());

        // K = {a} vs A = b*: witness "a"
        let bstar = star(&x, &["b"]);
        let k_a = downward_close_nfa(&nfa_for_words(&x, &["a"]));
        let mut member = |w: &Word| k_a.accepts(w);
        let wit = find_short_witness(&mut member, &bstar, &x, &budget).unwrap().unwrap();
        assert_eq!(wit, x.parse_word("a").unwrap());

        // K = ↓(ab)* vs A = ↓{(ab)^2} with 5 states: witness of length ≤ |A|+1
        let k = downward_close_nfa(&ab_star(&x));
        let mut a2 = Nfa::new(x.clone(), 5, 0, [0, 1, 2, 3, 4]).unwrap();
        for (i, s) in ["a", "b", "a", "b"].iter().enumerate() {
            let sid = x.id_of(s).unwrap();
            a2.add_transition(i as StateId, Some(sid), i as StateId + 1).unwrap();
            a2.add_transition(i as StateId, None, i as StateId + 1).unwrap();
        }
        let mut member = |w: &Word| k.accepts(w);
        let wit = find_short_witness(&mut member, &a2, &x, &budget).unwrap().unwrap();
        assert!(wit.len() <= a2.state_count() as usize + 1);
        // cross-check against brute force: shortest word in ↓K ∖ ↓L(A)
        let closed_a2 = downward_close_nfa(&a2);
        let shortest = all_words(&x, 6)
            .into_iter()
            .find(|w| k.accepts(w) && !closed_a2.accepts(w))
            .unwrap();
        assert_eq!(wit.len(), shortest.len());
        assert_eq!(wit.len(), 5);
    }

    #[test]
    fn de_morgan_on_enumerations() {
        let x = alpha_ab();
        let a = ab_star(&x);
        let b = star(&x, &["a"]);
        let da = determinize(&a).unwrap();
        let db = determinize(&b).unwrap();
        // ¬(L(a) ∪ L(b)) = ¬L(a) ∩ ¬L(b) on words up to length 5
        let union_ab = union(&a, &b).unwrap();
        let lhs = determinize(&union_ab).unwrap().complement();
        let rhs = intersect(&da.complement().as_nfa(), &db.complement().as_nfa()).unwrap();
        for w in all_words(&x, 5) {
            assert_eq!(lhs.accepts(&w), rhs.accepts(&w));
        }
    }

    #[test]
    fn max_word_len_detects_finiteness() {
        let x = alpha_ab();
        assert_eq!(nfa_for_words(&x, &["a b", "b"]).max_word_len(), Some(2));
        assert_eq!(star(&x, &["a"]).max_word_len(), None);
        assert_eq!(Nfa::new(x.clone(), 1, 0, []).unwrap().max_word_len(), None);
        // ε-cycle does not make the language infinite
        let mut e = Nfa::new(x.clone(), 3, 0, [2]).unwrap();
        e.add_transition(0, None, 1).unwrap();
        e.add_transition(1, None, 0).unwrap();
        e.add_transition(1, Some(0), 2).unwrap();
        assert_eq!(e.max_word_len(), Some(1));
    }
}

/// Trie-shaped NFA accepting exactly the given finite word set.
pub fn nfa_from_word_set(alpha: &Alphabet, words: &BTreeSet<Word>) -> Nfa {
    // node 0 is the root; edges added per word prefix
    let mut children: Vec<BTreeMap<SymId, StateId>> = vec![BTreeMap::new()];
    let mut finals: BTreeSet<StateId> = BTreeSet::new();
    for w in words {
        let mut cur: StateId = 0;
        for &s in w.symbols() {
            cur = match children[cur as usize].get(&s) {
                Some(&t) => t,
                None => {
                    let t = children.len() as StateId;
                    children.push(BTreeMap::new());
                    children[cur as usize].insert(s, t);
                    t
                }
            };
        }
        finals.insert(cur);
    }
    let mut nfa = Nfa::new(alpha.clone(), children.len() as u32, 0, finals).expect("trie");
    for (f, map) in children.iter().enumerate() {
        for (&s, &t) in map {
            nfa.add_transition(f as StateId, Some(s), t).expect("in range");
        }
    }
    nfa
}
