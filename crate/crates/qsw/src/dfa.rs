//! Classical deterministic finite automata and synchronizing words.
//!
//! A word synchronizes an automaton when it drives every state to one fixed
//! state. [`Dfa::shortest_sync_word`] finds a minimum-length such word by
//! breadth-first search over the power automaton (subsets of states packed
//! into bit masks); [`Dfa::greedy_sync_word`] is a pair-merging heuristic
//! for automata too large for the exhaustive search. States carry the
//! 1-based labels `1..=N` on every public surface; storage is 0-based.

use std::collections::{HashMap, VecDeque};

use serde::Deserialize;

use crate::{Error, Result};

/// State-count cap for the exhaustive subset BFS; beyond it the subset
/// space no longer fits the fixed-width masks this search relies on.
pub const MAX_BFS_STATES: usize = 24;

/// A deterministic finite automaton: `n_states` states and one total
/// transition map per letter.
#[derive(Clone, Debug)]
pub struct Dfa {
    n_states: usize,
    // letter -> images, 0-based on both sides
    letters: Vec<(char, Vec<usize>)>,
}

impl Dfa {
    /// Builds an automaton from 1-based transition tables: position `i`
    /// (0-based) of each table holds the image of state `i + 1`.
    pub fn new(
        n_states: usize,
        letters: impl IntoIterator<Item = (char, Vec<usize>)>,
    ) -> Result<Self> {
        if n_states == 0 {
            return Err(Error::Validation("automaton needs at least one state".into()));
        }
        let mut table: Vec<(char, Vec<usize>)> = Vec::new();
        for (name, images) in letters {
            if table.iter().any(|(n, _)| *n == name) {
                return Err(Error::Validation(format!(
                    "duplicate letter {name:?} in transition table"
                )));
            }
            if images.len() != n_states {
                return Err(Error::Validation(format!(
                    "letter {name:?} maps {} states, automaton has {n_states}",
                    images.len()
                )));
            }
            let mut zero_based = Vec::with_capacity(n_states);
            for (i, &img) in images.iter().enumerate() {
                if !(1..=n_states).contains(&img) {
                    return Err(Error::Validation(format!(
                        "letter {name:?} sends state {} to {img}, outside 1..={n_states}",
                        i + 1
                    )));
                }
                zero_based.push(img - 1);
            }
            table.push((name, zero_based));
        }
        if table.is_empty() {
            return Err(Error::Validation("automaton needs at least one letter".into()));
        }
        table.sort_by_key(|(name, _)| *name);
        Ok(Dfa {
            n_states,
            letters: table,
        })
    }

    /// Parses the JSON file format
    /// `{ "n_states": 3, "letters": { "A": [2,3,1], "B": [2,1,1] } }`
    /// where position `i` (1-based) holds the image of state `i`.
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: DfaFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("DFA file: {e}")))?;
        let mut letters = Vec::with_capacity(spec.letters.len());
        for (name, images) in spec.letters {
            let mut chars = name.chars();
            let (Some(ch), None) = (chars.next(), chars.next()) else {
                return Err(Error::Parse(format!(
                    "letter name {name:?} must be a single character"
                )));
            };
            letters.push((ch, images));
        }
        Dfa::new(spec.n_states, letters)
    }

    pub fn n_states(&self) -> usize {
        self.n_states
    }

    pub fn letter_names(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.iter().map(|(name, _)| *name)
    }

    fn images(&self, letter: char) -> Result<&[usize]> {
        self.letters
            .iter()
            .find(|(name, _)| *name == letter)
            .map(|(_, images)| images.as_slice())
            .ok_or_else(|| Error::Validation(format!("unknown letter {letter:?}")))
    }

    /// Runs a word from a 1-based state, returning the 1-based final state.
    pub fn apply_word(&self, word: &str, state: usize) -> Result<usize> {
        if !(1..=self.n_states).contains(&state) {
            return Err(Error::Validation(format!(
                "state {state} outside 1..={}",
                self.n_states
            )));
        }
        let mut current = state - 1;
        for ch in word.chars() {
            current = self.images(ch)?[current];
        }
        Ok(current + 1)
    }

    /// `Some(merged_state)` when the word drives every state to one single
    /// state, `None` otherwise. The merged state is 1-based.
    pub fn is_synchronizing(&self, word: &str) -> Result<Option<usize>> {
        let mut image = None;
        for start in 1..=self.n_states {
            let end = self.apply_word(word, start)?;
            match image {
                None => image = Some(end),
                Some(prev) if prev != end => return Ok(None),
                Some(_) => {}
            }
        }
        Ok(image)
    }

    fn mask_image(&self, mask: u32, images: &[usize]) -> u32 {
        let mut out = 0u32;
        let mut rest = mask;
        while rest != 0 {
            let s = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << images[s];
        }
        out
    }

    /// Minimum-length synchronizing word, or `None` when the automaton is
    /// not synchronizable. Among equal-length words returns the
    /// lexicographically least by letter name.
    ///
    /// Breadth-first search over subsets of states. Letters are explored in
    /// lexicographic order and the first subset reaching a singleton wins,
    /// which makes the result deterministic.
    pub fn shortest_sync_word(&self) -> Result<Option<String>> {
        if self.n_states > MAX_BFS_STATES {
            return Err(Error::Refused(format!(
                "subset BFS supports at most {MAX_BFS_STATES} states, automaton has {}; \
                 use greedy_sync_word",
                self.n_states
            )));
        }
        let full: u32 = if self.n_states == 32 {
            u32::MAX
        } else {
            (1u32 << self.n_states) - 1
        };
        if full.count_ones() == 1 {
            return Ok(Some(String::new()));
        }
        // parent map doubles as the visited set
        let mut parent: HashMap<u32, (u32, char)> = HashMap::new();
        parent.insert(full, (full, '\0'));
        let mut queue = VecDeque::from([full]);
        while let Some(mask) = queue.pop_front() {
            for (name, images) in &self.letters {
                let next = self.mask_image(mask, images);
                if parent.contains_key(&next) {
                    continue;
                }
                parent.insert(next, (mask, *name));
                if next.count_ones() == 1 {
                    let mut word = Vec::new();
                    let mut at = next;
                    while at != full {
                        let (prev, letter) = parent[&at];
                        word.push(letter);
                        at = prev;
                    }
                    word.reverse();
                    return Ok(Some(word.into_iter().collect()));
                }
                queue.push_back(next);
            }
        }
        Ok(None)
    }

    /// Pair-merge tables: for every unordered pair of distinct states, the
    /// length of its shortest merging word and the first letter of one such
    /// word (smallest letter among the valid choices). Built by one
    /// backward BFS from the diagonal over the pair graph.
    fn pair_merge_tables(&self) -> (Vec<u32>, Vec<char>) {
        let n = self.n_states;
        let idx = |p: usize, q: usize| p * n + q; // requires p <= q
        let mut dist = vec![u32::MAX; n * n];
        let mut first_letter = vec!['\0'; n * n];

        // reverse adjacency: rev[v] lists pairs u with an edge u -> v
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); n * n];
        for p in 0..n {
            for q in (p + 1)..n {
                for (_, images) in &self.letters {
                    let (a, b) = (images[p], images[q]);
                    let v = idx(a.min(b), a.max(b));
                    rev[v].push(idx(p, q));
                }
            }
        }

        let mut queue = VecDeque::new();
        for s in 0..n {
            dist[idx(s, s)] = 0;
            queue.push_back(idx(s, s));
        }
        while let Some(v) = queue.pop_front() {
            for &u in &rev[v] {
                if dist[u] == u32::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }

        // choose the smallest letter that makes one step of progress
        for p in 0..n {
            for q in (p + 1)..n {
                let u = idx(p, q);
                if dist[u] == u32::MAX {
                    continue;
                }
                for (name, images) in &self.letters {
                    let (a, b) = (images[p], images[q]);
                    let v = idx(a.min(b), a.max(b));
                    if dist[v] == dist[u] - 1 {
                        first_letter[u] = *name;
                        break;
                    }
                }
            }
        }
        (dist, first_letter)
    }

    /// A synchronizing word built by repeatedly merging the pair of states
    /// with the shortest merging word (ties broken by smallest state
    /// labels). Not necessarily shortest. `None` exactly when some pair of
    /// states cannot be merged, which is the synchronizability criterion.
    pub fn greedy_sync_word(&self) -> Result<Option<String>> {
        let n = self.n_states;
        let idx = |p: usize, q: usize| p * n + q;
        let (dist, first_letter) = self.pair_merge_tables();
        for p in 0..n {
            for q in (p + 1)..n {
                if dist[idx(p, q)] == u32::MAX {
                    return Ok(None);
                }
            }
        }

        let mut current: Vec<usize> = (0..n).collect();
        let mut word = String::new();
        while current.len() > 1 {
            // pair of current states with the shortest merging word
            let (mut bp, mut bq) = (current[0], current[1]);
            for (i, &p) in current.iter().enumerate() {
                for &q in &current[i + 1..] {
                    if dist[idx(p, q)] < dist[idx(bp, bq)] {
                        (bp, bq) = (p, q);
                    }
                }
            }
            // walk that pair down to the diagonal, dragging the whole set
            let (mut p, mut q) = (bp, bq);
            while p != q {
                let letter = first_letter[idx(p.min(q), p.max(q))];
                word.push(letter);
                let images = self.images(letter)?;
                p = images[p];
                q = images[q];
                let mut next: Vec<usize> = current.iter().map(|&s| images[s]).collect();
                next.sort_unstable();
                next.dedup();
                current = next;
            }
        }
        Ok(Some(word))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DfaFile {
    n_states: usize,
    letters: std::collections::BTreeMap<String, Vec<usize>>,
}

/// The classical extremal family on `n` states: letter `a` cycles
/// `1 -> 2 -> ... -> n -> 1`, letter `b` maps `1 -> 2` and fixes every other
/// state. Its shortest synchronizing word has length `(n-1)^2`.
pub fn cerny_automaton(n: usize) -> Result<Dfa> {
    if n < 2 {
        return Err(Error::Validation(format!(
            "the cyclic family needs n >= 2, got {n}"
        )));
    }
    let a: Vec<usize> = (1..=n).map(|s| s % n + 1).collect();
    let b: Vec<usize> = (1..=n).map(|s| if s == 1 { 2 } else { s }).collect();
    Dfa::new(n, [('a', a), ('b', b)])
}
