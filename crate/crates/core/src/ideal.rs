//! Ideals of the subword order: normalization, length measures, membership,
//! ordered DFAs, witnesses, and decomposition of downward-closed regular
//! languages into ideals.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;

use crate::alphabet::{Alphabet, SymId, Word};
use crate::budget::Budget;
use crate::error::Error;
use crate::nfa::{self, Dfa, Nfa};
use crate::Result;

/// One factor of an ideal expression: `Y*` or `{x, ε}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum IdealAtom {
    /// `Y*`; the empty set denotes `{ε}`.
    StarSet(BTreeSet<SymId>),
    /// `{x, ε}`.
    OptionalLetter(SymId),
}

/// A product of star-set and optional-letter atoms over an ambient alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealExpr {
    pub atoms: Vec<IdealAtom>,
    pub ambient: Alphabet,
}

impl IdealExpr {
    pub fn new(ambient: Alphabet, atoms: Vec<IdealAtom>) -> Result<IdealExpr> {
        for a in &atoms {
            let ok = match a {
                IdealAtom::StarSet(y) => y.iter().all(|&s| (s as usize) < ambient.len()),
                IdealAtom::OptionalLetter(x) => (*x as usize) < ambient.len(),
            };
            if !ok {
                return Err(Error::invalid("ideal atom outside ambient alphabet"));
            }
        }
        Ok(IdealExpr { atoms, ambient })
    }

    /// Number of atoms.
    pub fn expr_length(&self) -> usize {
        self.atoms.len()
    }
}

/// An ideal in alternating normal form `Y_0* x_1? Y_1* ... x_n? Y_n*`.
///
/// Blocks and separators alternate; a separator is either an optional letter
/// or nothing. Stored separators satisfy: a letter never belongs to one of
/// its neighbor blocks (it would be absorbable), and an empty separator only
/// stands between ⊆-incomparable blocks (comparable neighbors would merge).
/// The length is the number of separators, which upper-bounds the minimal
/// number of optional-letter factors in any product form of the language.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ideal {
    blocks: Vec<BTreeSet<SymId>>,
    seps: Vec<Option<SymId>>,
    ambient: Alphabet,
}

impl Ideal {
    pub fn ambient(&self) -> &Alphabet {
        &self.ambient
    }

    /// Star blocks `Y_0..Y_n`.
    pub fn blocks(&self) -> &[BTreeSet<SymId>] {
        &self.blocks
    }

    /// Separators between consecutive blocks; `Some(x)` is the optional letter.
    pub fn seps(&self) -> &[Option<SymId>] {
        &self.seps
    }

    /// Normal-form length `n` (number of separators).
    pub fn length(&self) -> usize {
        self.seps.len()
    }

    /// The normal form written back as an expression, skipping empty blocks.
    pub fn to_expr(&self) -> IdealExpr {
        let mut atoms = Vec::new();
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                if let Some(x) = self.seps[i - 1] {
                    atoms.push(IdealAtom::OptionalLetter(x));
                }
            }
            if !b.is_empty() {
                atoms.push(IdealAtom::StarSet(b.clone()));
            }
        }
        IdealExpr { atoms, ambient: self.ambient.clone() }
    }

    /// Construct directly from a normal form; validates the invariants.
    pub fn from_normal_form(
        ambient: Alphabet,
        blocks: Vec<BTreeSet<SymId>>,
        seps: Vec<Option<SymId>>,
    ) -> Result<Ideal> {
        if blocks.len() != seps.len() + 1 {
            return Err(Error::invalid("blocks and separators must alternate"));
        }
        for (i, s) in seps.iter().enumerate() {
            match s {
                Some(x) => {
                    if blocks[i].contains(x) || blocks[i + 1].contains(x) {
                        return Err(Error::invalid("absorbable separator letter"));
                    }
                }
                None => {
                    let (l, r) = (&blocks[i], &blocks[i + 1]);
                    if l.is_subset(r) || r.is_subset(l) {
                        return Err(Error::invalid("mergeable adjacent star blocks"));
                    }
                }
            }
        }
        for b in &blocks {
            if b.iter().any(|&s| s as usize >= ambient.len()) {
                return Err(Error::invalid("block outside ambient alphabet"));
            }
        }
        Ok(Ideal { blocks, seps, ambient })
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expr = self.to_expr();
        if expr.atoms.is_empty() {
            return write!(f, "[]");
        }
        let mut parts = Vec::new();
        for atom in &expr.atoms {
            match atom {
                IdealAtom::StarSet(y) => {
                    let toks: Vec<&str> = y.iter().map(|&s| self.ambient.symbol(s)).collect();
                    parts.push(format!("[{}]", toks.join(" ")));
                }
                IdealAtom::OptionalLetter(x) => parts.push(format!("{}?", self.ambient.symbol(*x))),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Rewrites an expression into normal form without changing its language:
/// drop `∅*` atoms, absorb an optional letter into an adjacent star block
/// containing it, merge ⊆-comparable adjacent star blocks, then pack the
/// result into alternating blocks and separators. Adjacent star blocks are
/// NOT merged by union in general (`Y*Z* ≠ (Y∪Z)*`); only comparable pairs
/// collapse.
pub fn normalize(e: &IdealExpr) -> Ideal {
    let mut atoms: Vec<IdealAtom> = e
        .atoms
        .iter()
        .filter(|a| !matches!(a, IdealAtom::StarSet(y) if y.is_empty()))
        .cloned()
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < atoms.len() {
            let action = match (&atoms[i], &atoms[i + 1]) {
                (IdealAtom::StarSet(y), IdealAtom::OptionalLetter(x)) if y.contains(x) => Some((i + 1, None)),
                (IdealAtom::OptionalLetter(x), IdealAtom::StarSet(y)) if y.contains(x) => Some((i, None)),
                (IdealAtom::StarSet(y), IdealAtom::StarSet(z))
                    if y.is_subset(z) || z.is_subset(y) =>
                {
                    let merged: BTreeSet<SymId> = y.union(z).copied().collect();
                    Some((i, Some(merged)))
                }
                _ => None,
            };
            match action {
                Some((pos, None)) => {
                    atoms.remove(pos);
                    changed = true;
                }
                Some((pos, Some(merged))) => {
                    atoms[pos] = IdealAtom::StarSet(merged);
                    atoms.remove(pos + 1);
                    changed = true;
                }
                None => i += 1,
            }
        }
        if !changed {
            break;
        }
    }
    // pack into alternation
    let mut blocks = Vec::new();
    let mut seps = Vec::new();
    let mut cur: Option<BTreeSet<SymId>> = None;
    for atom in atoms {
        match atom {
            IdealAtom::StarSet(y) => {
                if let Some(c) = cur.take() {
                    blocks.push(c);
                    seps.push(None);
                }
                cur = Some(y);
            }
            IdealAtom::OptionalLetter(x) => {
                blocks.push(cur.take().unwrap_or_default());
                seps.push(Some(x));
            }
        }
    }
    blocks.push(cur.take().unwrap_or_default());
    Ideal { blocks, seps, ambient: e.ambient.clone() }
}

/// The canonical word of a sub-alphabet: each letter exactly once, in the
/// ambient order.
pub fn canonical_word(ambient: &Alphabet, y: &BTreeSet<SymId>) -> Word {
    ambient.word(y.iter().copied().collect())
}

/// The pumped witness `w_{Y_0}^m x_1 w_{Y_1}^m ... x_n w_{Y_n}^m`.
///
/// For `m` at least one more than a bound on the target's ideal length, this
/// word is in a downward-closed language iff the whole ideal is.
pub fn ideal_witness(i: &Ideal, m: usize) -> Word {
    debug_assert!(m >= 1);
    let mut syms: Vec<SymId> = Vec::new();
    for (idx, b) in i.blocks.iter().enumerate() {
        if idx > 0 {
            if let Some(x) = i.seps[idx - 1] {
                syms.push(x);
            }
        }
        for _ in 0..m {
            syms.extend(b.iter().copied());
        }
    }
    i.ambient.word(syms)
}

/// Single-letter membership in the segment `Y_i* x_{i+1}? ... x_j? Y_j*`.
fn letter_in_segment(i: &Ideal, from: usize, to: usize, a: SymId) -> bool {
    (from..=to).any(|p| i.blocks[p].contains(&a))
        || (from + 1..=to).any(|p| i.seps[p - 1] == Some(a))
}

/// Ordered DFA with `n + 2` states accepting exactly the ideal.
///
/// State `i ≤ n` means the prefix read so far fits in the first `i` blocks
/// and in no fewer; `n + 1` is the reject sink. Reading `a` in state `i`
/// moves to the least `j ≥ i` whose segment from `i` can consume `a`.
pub fn ordered_dfa(i: &Ideal) -> Dfa {
    let n = i.length();
    let states = (n + 2) as u32;
    let sink = (n + 1) as u32;
    let alpha = i.ambient.clone();
    let mut delta = Vec::with_capacity(states as usize * alpha.len());
    for q in 0..=(n + 1) {
        for a in alpha.ids() {
            if q == n + 1 {
                delta.push(sink);
                continue;
            }
            let j = (q..=n).find(|&j| {
                i.blocks[j].contains(&a) || (j > q && i.seps[j - 1] == Some(a))
            });
            debug_assert_eq!(
                j,
                (q..=n).find(|&j| letter_in_segment(i, q, j, a)),
                "minimal segment index must be reachable at its own block"
            );
            delta.push(j.map_or(sink, |j| j as u32));
        }
    }
    let finals: BTreeSet<u32> = (0..=n as u32).collect();
    let levels: Vec<u32> = (0..states).collect();
    Dfa::new(alpha, states, delta, 0, finals, Some(levels)).expect("ordered dfa construction")
}

/// Greedy membership: keep a pointer into the normal form that never moves
/// left; agrees with running the ordered DFA.
pub fn ideal_member(i: &Ideal, w: &Word) -> bool {
    debug_assert_eq!(w.alphabet(), &i.ambient);
    let n = i.length();
    let mut at = 0usize;
    'letters: for &a in w.symbols() {
        for j in at..=n {
            if i.blocks[j].contains(&a) || (j > at && i.seps[j - 1] == Some(a)) {
                at = j;
                continue 'letters;
            }
        }
        return false;
    }
    true
}

/// `I ⊆ J`, decided by one ideal witness for `I` pumped past `J`'s length.
pub fn ideal_inclusion(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.ambient.ensure_same(&j.ambient)?;
    let w = ideal_witness(i, j.length() + 1);
    Ok(ideal_member(j, &w))
}

/// `|X| * (n+1)^{|X|}`: length bound for witnesses over a fixed alphabet.
pub fn small_alphabet_bound(alpha_size: usize, ideal_len_bound: usize) -> BigUint {
    BigUint::from(alpha_size) * BigUint::from(ideal_len_bound + 1).pow(alpha_size as u32)
}

/// `f_n(k) = Σ_{i=1..k} (n-1)^i`, the word length beyond which every ordered
/// `n`-state DFA is forced to cycle somewhere.
pub fn f_bound(n: usize, k: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::ParamRange("f_bound needs n ≥ 1".into()));
    }
    let base = BigUint::from(n - 1);
    let mut acc = BigUint::default();
    for i in 1..=k {
        acc += base.pow(i as u32);
    }
    Ok(acc)
}

/// Finds a position of `w` read by a loop in *every* total ordered `n`-state
/// DFA over `w`'s alphabet, by exhaustive enumeration of those DFAs.
/// Desk-scale support operation: `n ≤ 3` and alphabets of at most 2 letters.
pub fn verify_cycling(w: &Word, n: usize) -> Result<Option<usize>> {
    let alpha = w.alphabet();
    if n == 0 || n > 3 || alpha.len() > 2 {
        return Err(Error::ParamRange("verify_cycling supports n ≤ 3, |X| ≤ 2".into()));
    }
    if w.is_empty() {
        return Ok(None);
    }
    let syms = alpha.len();
    let table_size = n * syms;
    let mut candidates: Vec<bool> = vec![true; w.len()];
    let mut delta = vec![0usize; table_size];
    // odometer over all total transition tables
    loop {
        if table_is_ordered(&delta, n, syms) {
            for q0 in 0..n {
                let mut q = q0;
                for (pos, &a) in w.symbols().iter().enumerate() {
                    let t = delta[q * syms + a as usize];
                    if t != q {
                        candidates[pos] = false;
                    }
                    q = t;
                }
            }
        }
        // increment
        let mut i = 0;
        loop {
            if i == table_size {
                let first = candidates.iter().position(|&c| c);
                return Ok(first);
            }
            delta[i] += 1;
            if delta[i] < n {
                break;
            }
            delta[i] = 0;
            i += 1;
        }
    }
}

/// Ordered = the non-loop transition graph is acyclic.
fn table_is_ordered(delta: &[usize], n: usize, syms: usize) -> bool {
    // Kahn-style: repeatedly remove states with no incoming non-loop edge.
    let mut indeg = vec![0usize; n];
    for q in 0..n {
        for a in 0..syms {
            let t = delta[q * syms + a];
            if t != q {
                indeg[t] += 1;
            }
        }
    }
    let mut removed = vec![false; n];
    for _ in 0..n {
        let Some(q) = (0..n).find(|&q| !removed[q] && indeg[q] == 0) else {
            return false;
        };
        removed[q] = true;
        for a in 0..syms {
            let t = delta[q * syms + a];
            if t != q && !removed[t] {
                indeg[t] -= 1;
            }
        }
    }
    true
}

/// Splits a downward-closed regular language into maximal ideals.
///
/// Candidates are enumerated by increasing length up to `|states|` (lengths
/// beyond that cannot be needed for a closed language of this state count),
/// kept when included in the language, pruned when subsumed by an accepted
/// ideal, until the accepted union covers the whole language.
pub fn decompose_downward_closed(a: &Nfa) -> Result<Vec<Ideal>> {
    decompose_downward_closed_with(a, &Budget::default())
}

pub fn decompose_downward_closed_with(a: &Nfa, budget: &Budget) -> Result<Vec<Ideal>> {
    let closed = nfa::downward_close_nfa(a);
    if !nfa::nfa_inclusion_with(&closed, a, budget)? {
        return Err(Error::invalid("input language is not downward closed"));
    }
    if a.is_empty_language() {
        return Ok(Vec::new());
    }
    let alpha = a.alphabet().clone();
    let max_len = a.state_count() as usize;
    let mut accepted: Vec<Ideal> = Vec::new();
    for d in 0..=max_len {
        for cand in enumerate_ideals(&alpha, d) {
            if accepted.iter().any(|acc| ideal_inclusion(&cand, acc).unwrap_or(false)) {
                continue;
            }
            let cand_nfa = ordered_dfa(&cand).as_nfa();
            if nfa::nfa_inclusion_with(&cand_nfa, a, budget)? {
                accepted.retain(|acc| !ideal_inclusion(acc, &cand).unwrap_or(false));
                accepted.push(cand);
            }
        }
        if !accepted.is_empty() && covers(a, &accepted, budget)? {
            accepted.sort_by_key(|i| i.to_string());
            return Ok(accepted);
        }
    }
    Err(Error::invalid(
        "coverage not reached within the state-count length bound; input is not a downward-closed language of this automaton size",
    ))
}

fn covers(a: &Nfa, ideals: &[Ideal], budget: &Budget) -> Result<bool> {
    let mut acc: Option<Nfa> = None;
    for i in ideals {
        let n = ordered_dfa(i).as_nfa();
        acc = Some(match acc {
            None => n,
            Some(u) => nfa::union(&u, &n)?,
        });
    }
    match acc {
        None => Ok(a.is_empty_language()),
        Some(u) => nfa::nfa_inclusion_with(a, &u, budget),
    }
}

/// All normal-form ideals over `alpha` with exactly `len` separators, in a
/// fixed deterministic order.
pub fn enumerate_ideals(alpha: &Alphabet, len: usize) -> Vec<Ideal> {
    let subsets = all_subsets(alpha);
    let mut out = Vec::new();
    // choose blocks then separators, depth-first in lexicographic order
    fn rec(
        alpha: &Alphabet,
        subsets: &[BTreeSet<SymId>],
        len: usize,
        blocks: &mut Vec<BTreeSet<SymId>>,
        seps: &mut Vec<Option<SymId>>,
        out: &mut Vec<Ideal>,
    ) {
        if blocks.len() == len + 1 {
            out.push(Ideal {
                blocks: blocks.clone(),
                seps: seps.clone(),
                ambient: alpha.clone(),
            });
            return;
        }
        let first = blocks.is_empty();
        let prev = if first { None } else { Some(blocks.last().unwrap().clone()) };
        for b in subsets {
            if !first {
                // choose the separator between prev and b
                let prev = prev.as_ref().unwrap();
                // empty separator: incomparable neighbors only
                if !prev.is_subset(b) && !b.is_subset(prev) {
                    blocks.push(b.clone());
                    seps.push(None);
                    rec(alpha, subsets, len, blocks, seps, out);
                    seps.pop();
                    blocks.pop();
                }
                for x in alpha.ids() {
                    if prev.contains(&x) || b.contains(&x) {
                        continue;
                    }
                    blocks.push(b.clone());
                    seps.push(Some(x));
                    rec(alpha, subsets, len, blocks, seps, out);
                    seps.pop();
                    blocks.pop();
                }
            } else {
                blocks.push(b.clone());
                rec(alpha, subsets, len, blocks, seps, out);
                blocks.pop();
            }
        }
    }
    let mut blocks = Vec::new();
    let mut seps = Vec::new();
    rec(alpha, &subsets, len, &mut blocks, &mut seps, &mut out);
    out
}

fn all_subsets(alpha: &Alphabet) -> Vec<BTreeSet<SymId>> {
    let n = alpha.len();
    (0..(1usize << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| i as SymId)
                .collect()
        })
        .collect()
}
