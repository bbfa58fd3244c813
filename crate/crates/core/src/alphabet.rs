//! Ordered alphabets, words and the subword order.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

/// Index of a symbol within its alphabet.
pub type SymId = u32;

#[derive(Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct AlphabetInner {
    symbols: Vec<String>,
}

/// A finite, linearly ordered alphabet of distinct single-token symbols.
///
/// The declaration order is the canonical order used by canonical words and
/// by length-lexicographic witness search. Cloning is cheap; equality
/// compares the symbol sequences, not identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(Arc<AlphabetInner>);

impl Alphabet {
    /// Builds an alphabet from symbol tokens, rejecting duplicates.
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Alphabet> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.contains(char::is_whitespace) {
                return Err(Error::invalid(format!("bad symbol token {s:?}")));
            }
            if s == "eps" {
                return Err(Error::invalid("`eps` is reserved for the empty word"));
            }
            if symbols[..i].contains(s) {
                return Err(Error::invalid(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(Alphabet(Arc::new(AlphabetInner { symbols })))
    }

    pub fn len(&self) -> usize {
        self.0.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.symbols.is_empty()
    }

    pub fn symbol(&self, id: SymId) -> &str {
        &self.0.symbols[id as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = SymId> {
        0..self.len() as SymId
    }

    /// Looks a token up, returning its index in canonical order.
    pub fn id_of(&self, token: &str) -> Option<SymId> {
        self.0.symbols.iter().position(|s| s == token).map(|i| i as SymId)
    }

    /// Errors unless `other` is the same alphabet (same symbols, same order).
    pub fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::mismatch(format!("{self} vs {other}")))
        }
    }

    /// Parses a whitespace-separated word over this alphabet; `eps` denotes ε.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut symbols = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "eps" {
                continue;
            }
            match self.id_of(tok) {
                Some(id) => symbols.push(id),
                None => return Err(Error::invalid(format!("symbol {tok:?} not in alphabet"))),
            }
        }
        Ok(Word { alphabet: self.clone(), symbols })
    }

    pub fn word(&self, symbols: Vec<SymId>) -> Word {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < self.len()));
        Word { alphabet: self.clone(), symbols }
    }

    pub fn empty_word(&self) -> Word {
        Word { alphabet: self.clone(), symbols: Vec::new() }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.symbols.join(" "))
    }
}

/// A finite word over a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<SymId>,
    alphabet: Alphabet,
}

impl Word {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[SymId] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Word { alphabet: self.alphabet.clone(), symbols }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "eps");
        }
        let toks: Vec<&str> = self.symbols.iter().map(|&s| self.alphabet.symbol(s)).collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// Decides whether `u` embeds into `w` preserving order.
///
/// Greedy left-to-right matching: advance through `w`, consuming the next
/// letter of `u` whenever it appears. Greedy matching is exact for the
/// subword order, since any embedding can be shifted left.
pub fn is_subword(u: &Word, w: &Word) -> bool {
    let mut i = 0;
    let us = u.symbols();
    for &x in w.symbols() {
        if i < us.len() && us[i] == x {
            i += 1;
        }
    }
    i == us.len()
}

/// Subword check on raw symbol slices; used by oracles that already share an alphabet.
pub fn is_subword_syms(u: &[SymId], w: &[SymId]) -> bool {
    let mut i = 0;
    for &x in w {
        if i < u.len() && u[i] == x {
            i += 1;
        }
    }
    i == u.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    #[test]
    fn subword_examples() {
        let x = ab();
        let w = |s: &str| x.parse_word(s).unwrap();
        assert!(is_subword(&w(""), &w("a b c")));
        assert!(is_subword(&w("a b"), &w("a c b")));
        assert!(!is_subword(&w("b a"), &w("a b")));
    }

    #[test]
    fn duplicate_symbols_rejected() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["eps"]).is_err());
    }

    #[test]
    fn word_parse_roundtrip() {
        let x = ab();
        let w = x.parse_word("a b a").unwrap();
        assert_eq!(w.to_string(), "a b a");
        assert_eq!(x.parse_word("eps").unwrap().len(), 0);
        assert!(x.parse_word("d").is_err());
    }

    /// Reference embedding check by exhaustive position choice.
    fn embeds_bruteforce(u: &[SymId], w: &[SymId]) -> bool {
        if u.is_empty() {
            return true;
        }
        if w.is_empty() {
            return false;
        }
        (u[0] == w[0] && embeds_bruteforce(&u[1..], &w[1..])) || embeds_bruteforce(u, &w[1..])
    }

    #[test]
    fn greedy_matches_bruteforce() {
        let x = Alphabet::new(["a", "b"]).unwrap();
        // all pairs of words up to length 5
        let words = crate::nfa::all_words(&x, 5);
        for u in &words {
            for w in &words {
                assert_eq!(
                    is_subword(u, w),
                    embeds_bruteforce(u.symbols(), w.symbols()),
                    "u={u} w={w}"
                );
            }
        }
    }
}
