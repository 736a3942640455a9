//! Letters, words, the extended sign function and perfect matchings.
//!
//! Letters are plain non-negative ids ordered by value. For bipartite forms a
//! row letter `x` is encoded as id `2x` and its barred column `x̄` as `2x+1`;
//! see [`Letter::row`] and [`Letter::bar`].

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    /// Row letter `x` of a bipartite index set.
    pub fn row(x: u32) -> Letter {
        Letter(2 * x)
    }

    /// Barred column letter `x̄` of a bipartite index set.
    pub fn bar(x: u32) -> Letter {
        Letter(2 * x + 1)
    }

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn is_barred(self) -> bool {
        self.0 % 2 == 1
    }

    /// The underlying row/column index of a bipartite letter.
    pub fn base(self) -> u32 {
        self.0 / 2
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Letter {
    fn from(id: u32) -> Self {
        Letter(id)
    }
}

/// A finite sequence of letters; repeats are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn from_ids(ids: impl IntoIterator<Item = u32>) -> Self {
        Word(ids.into_iter().map(Letter).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: Letter) -> bool {
        self.0.contains(&x)
    }

    pub fn position(&self, x: Letter) -> Option<usize> {
        self.0.iter().position(|&l| l == x)
    }

    pub fn has_repeats(&self) -> bool {
        first_repeat(&self.0).is_some()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    pub fn with(&self, x: Letter) -> Word {
        let mut w = self.clone();
        w.push(x);
        w
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }

    /// Renders a bipartite word with apostrophes on barred letters.
    pub fn to_bipartite_string(&self) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| if l.is_barred() { format!("{}'", l.base()) } else { l.base().to_string() })
            .collect();
        parts.join(" ")
    }

    /// Parses whitespace-separated ids. If any token carries an apostrophe
    /// the whole word is read in the bipartite encoding: `x` is a row letter
    /// and `x'` its barred column.
    pub fn parse(text: &str) -> Result<Word> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        let bipartite = tokens.iter().any(|t| t.ends_with('\''));
        let mut letters = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let (digits, barred) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let id: u32 = digits
                .parse()
                .map_err(|e| Error::parse("word", format!("bad letter {tok:?}: {e}")))?;
            letters.push(match (bipartite, barred) {
                (false, _) => Letter(id),
                (true, false) => Letter::row(id),
                (true, true) => Letter::bar(id),
            });
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub(crate) fn first_repeat(letters: &[Letter]) -> Option<Letter> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}

/// Parity of the number of inversions of a sequence of distinct keys.
fn inversion_sign(keys: &[usize]) -> i8 {
    let mut odd = false;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                odd = !odd;
            }
        }
    }
    if odd {
        -1
    } else {
        1
    }
}

/// The extended sign `s(alpha, beta)`.
///
/// Zero if either word repeats a letter or `beta` uses a letter missing from
/// `alpha`; otherwise the sign of the permutation taking `alpha` to
/// `beta · (alpha \ beta)`.
pub fn sign(alpha: &Word, beta: &Word) -> i8 {
    sign_of(&alpha.0, &beta.0)
}

pub(crate) fn sign_of(alpha: &[Letter], beta: &[Letter]) -> i8 {
    if first_repeat(alpha).is_some() || first_repeat(beta).is_some() {
        return 0;
    }
    let mut keys = Vec::with_capacity(alpha.len());
    let mut taken = vec![false; alpha.len()];
    for b in beta {
        match alpha.iter().position(|a| a == b) {
            Some(p) => {
                keys.push(p);
                taken[p] = true;
            }
            None => return 0,
        }
    }
    keys.extend((0..alpha.len()).filter(|&p| !taken[p]));
    inversion_sign(&keys)
}

/// `alpha \ beta`: `alpha` with the letters of `beta` removed, order kept.
pub fn word_diff(alpha: &Word, beta: &Word) -> Result<Word> {
    if let Some(x) = first_repeat(&beta.0) {
        return Err(Error::RepeatedLetter(x));
    }
    if let Some(&x) = beta.0.iter().find(|b| !alpha.0.contains(b)) {
        return Err(Error::NotInWord(x));
    }
    Ok(Word(alpha.0.iter().copied().filter(|a| !beta.0.contains(a)).collect()))
}

/// Removes the given letters, ignoring any that are absent. Used internally
/// where membership has already been checked.
pub(crate) fn remove_letters(alpha: &Word, drop: &[Letter]) -> Word {
    Word(alpha.0.iter().copied().filter(|a| !drop.contains(a)).collect())
}

/// The reverse complement `ȳₙ…ȳ₂ȳ₁` of a word of row letters.
pub fn reverse_complement(beta: &Word) -> Result<Word> {
    beta.0
        .iter()
        .rev()
        .map(|&l| if l.is_barred() { Err(Error::AlreadyBarred(l)) } else { Ok(Letter::bar(l.base())) })
        .collect()
}

/// A perfect matching in canonical shape: first letters strictly increasing
/// and each pair ordered, carrying `s(alpha, x₁y₁…xₙyₙ)` for its source word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(Letter, Letter)>,
    pub sign: i8,
}

impl Matching {
    pub fn flatten(&self) -> Word {
        self.pairs.iter().flat_map(|&(x, y)| [x, y]).collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.sign < 0 { "-" } else { "+" })?;
        for (x, y) in &self.pairs {
            write!(f, " ({x} {y})")?;
        }
        Ok(())
    }
}

/// Lazily enumerates the `(2n-1)!!` canonical perfect matchings of a word of
/// distinct letters.
///
/// The smallest unmatched letter is always matched first, so matchings come
/// out in canonical shape and in lexicographic order of partners.
pub fn enumerate_matchings(alpha: &Word) -> Result<Matchings> {
    Matchings::new(alpha)
}

pub struct Matchings {
    /// letters sorted by id
    sorted: Vec<Letter>,
    /// position in the source word of each sorted letter
    pos: Vec<usize>,
    used: Vec<bool>,
    /// per level: (first, partner) as indices into `sorted`
    stack: Vec<(usize, usize)>,
    /// cumulative sign after each level
    signs: Vec<i8>,
    state: State,
}

#[derive(PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Matchings {
    fn new(alpha: &Word) -> Result<Self> {
        if alpha.len() % 2 == 1 {
            return Err(Error::OddLength(alpha.len()));
        }
        if let Some(x) = first_repeat(&alpha.0) {
            return Err(Error::RepeatedLetter(x));
        }
        let mut order: Vec<usize> = (0..alpha.len()).collect();
        order.sort_unstable_by_key(|&p| alpha.0[p]);
        Ok(Matchings {
            sorted: order.iter().map(|&p| alpha.0[p]).collect(),
            pos: order,
            used: vec![false; alpha.len()],
            stack: Vec::with_capacity(alpha.len() / 2),
            signs: Vec::with_capacity(alpha.len() / 2),
            state: State::Fresh,
        })
    }

    /// Sign of extracting the pair `(a, b)` (sorted indices) to the front of
    /// the remaining word: `a` moves past `p` letters, then `b` past `q - 1`
    /// or `q` depending on whether it was behind `a`.
    fn pair_sign(&self, a: usize, b: usize) -> i8 {
        let (pa, pb) = (self.pos[a], self.pos[b]);
        let mut p = 0;
        let mut q = 0;
        for k in 0..self.sorted.len() {
            if self.used[k] || k == a || k == b {
                continue;
            }
            if self.pos[k] < pa {
                p += 1;
            }
            if self.pos[k] < pb {
                q += 1;
            }
        }
        // p, q count the other remaining letters ahead of a and b
        let moves = p + q + usize::from(pb < pa);
        if moves % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn assign(&mut self, a: usize, b: usize) {
        let s = self.pair_sign(a, b) * self.signs.last().copied().unwrap_or(1);
        self.used[a] = true;
        self.used[b] = true;
        self.stack.push((a, b));
        self.signs.push(s);
    }

    fn unassign(&mut self) -> Option<(usize, usize)> {
        let (a, b) = self.stack.pop()?;
        self.signs.pop();
        self.used[a] = false;
        self.used[b] = false;
        Some((a, b))
    }

    /// Completes the stack greedily with the smallest available partners.
    fn descend(&mut self) {
        while let Some(a) = (0..self.sorted.len()).find(|&k| !self.used[k]) {
            let b = (a + 1..self.sorted.len()).find(|&k| !self.used[k]).expect("even count");
            self.assign(a, b);
        }
    }

    fn advance(&mut self) -> bool {
        while let Some((a, b)) = self.unassign() {
            if let Some(next) = (b + 1..self.sorted.len()).find(|&k| !self.used[k] && k != a) {
                self.assign(a, next);
                self.descend();
                return true;
            }
        }
        false
    }

    fn current(&self) -> Matching {
        Matching {
            pairs: self.stack.iter().map(|&(a, b)| (self.sorted[a], self.sorted[b])).collect(),
            sign: self.signs.last().copied().unwrap_or(1),
        }
    }

    /// Visits every matching without allocating per matching.
    pub fn for_each_raw(mut self, mut visit: impl FnMut(&[(usize, usize)], &[Letter], i8)) {
        if self.state == State::Done {
            return;
        }
        if self.state == State::Fresh {
            self.descend();
        }
        loop {
            visit(&self.stack, &self.sorted, self.signs.last().copied().unwrap_or(1));
            if !self.advance() {
                return;
            }
        }
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        match self.state {
            State::Done => return None,
            State::Fresh => {
                self.descend();
                self.state = State::Running;
            }
            State::Running => {
                if !self.advance() {
                    self.state = State::Done;
                    return None;
                }
            }
        }
        Some(self.current())
    }
}

/// `(2n-1)!!`, the number of perfect matchings of `2n` letters.
pub fn matching_count(n: u32) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}
