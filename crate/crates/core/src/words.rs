//! Basic words of the free Lie algebra on letters `z1..zk`.
//!
//! The Hall set used throughout is the set of Lyndon words with their
//! standard bracketing: a Lyndon word `w` of length at least two splits as
//! `w = uv` with `v` the longest proper suffix of `w` that is itself Lyndon,
//! and brackets as `[u, v]`. Everything downstream only consumes the
//! letter content of each word, and the number of basic words with a given
//! letter content is the same for every Hall set.
//!
//! Words are ordered by weight, then by multidegree (more copies of the
//! lower letters first), then lexicographically on the letter string.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{invalid, Result};

/// A generator `z_i`, with `z1` the first (minimal) letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u16);

impl Letter {
    /// `index` is 1-based.
    pub fn new(index: usize) -> Result<Letter> {
        match u16::try_from(index) {
            Ok(i) if i >= 1 => Ok(Letter(i)),
            _ => Err(invalid(format!("letter index {index} out of range"))),
        }
    }

    pub fn index(self) -> usize {
        usize::from(self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}", self.0)
    }
}

/// Letter-count vector `(d_1, .., d_k)` of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MultiDegree(Vec<u32>);

impl MultiDegree {
    pub fn new(degrees: Vec<u32>) -> MultiDegree {
        MultiDegree(degrees)
    }

    pub fn zero(k: usize) -> MultiDegree {
        MultiDegree(vec![0; k])
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of letters other than `z1`.
    pub fn alpha(&self) -> u32 {
        self.0.iter().skip(1).sum()
    }

    /// Number of copies of `z1`.
    pub fn beta(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }
}

impl Ord for MultiDegree {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reverse lexicographic within a weight is lexicographic order on the
        // sorted letter content: (2,1) = "z1 z1 z2" precedes (1,2) = "z1 z2 z2".
        self.weight().cmp(&other.weight()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for MultiDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Lyndon word, read as a bracketed Lie monomial through its standard
/// factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasicWord {
    letters: Vec<Letter>,
    multidegree: MultiDegree,
}

/// One level of the bracket structure of a [`BasicWord`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Letter(Letter),
    Bracket(BasicWord, BasicWord),
}

impl BasicWord {
    /// Builds the basic word with the given 1-based letter string in an
    /// alphabet of `k` letters. Fails unless the string is a Lyndon word.
    pub fn from_letters(k: usize, letters: &[usize]) -> Result<BasicWord> {
        let letters = letters
            .iter()
            .map(|&i| {
                if i > k {
                    Err(invalid(format!("letter z{i} outside alphabet z1..z{k}")))
                } else {
                    Letter::new(i)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if !is_lyndon(&letters) {
            return Err(invalid(format!(
                "{} is not a Lyndon word",
                letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
            )));
        }
        Ok(Self::from_lyndon_unchecked(k, letters))
    }

    fn from_lyndon_unchecked(k: usize, letters: Vec<Letter>) -> BasicWord {
        let mut degrees = vec![0u32; k];
        for l in &letters {
            degrees[l.index() - 1] += 1;
        }
        BasicWord {
            letters,
            multidegree: MultiDegree(degrees),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn multidegree(&self) -> &MultiDegree {
        &self.multidegree
    }

    pub fn weight(&self) -> u32 {
        self.multidegree.weight()
    }

    pub fn alpha(&self) -> u32 {
        self.multidegree.alpha()
    }

    pub fn beta(&self) -> u32 {
        self.multidegree.beta()
    }

    /// Whether every letter `z2..zk` occurs at least once.
    pub fn involves_all_but_first(&self) -> bool {
        self.multidegree.0.iter().skip(1).all(|&d| d >= 1)
    }

    pub fn shape(&self) -> Shape {
        if self.letters.len() == 1 {
            return Shape::Letter(self.letters[0]);
        }
        let split = standard_split(&self.letters);
        let k = self.multidegree.k();
        Shape::Bracket(
            Self::from_lyndon_unchecked(k, self.letters[..split].to_vec()),
            Self::from_lyndon_unchecked(k, self.letters[split..].to_vec()),
        )
    }

    /// Evaluates the bracket tree bottom-up.
    pub fn fold<T>(&self, leaf: &mut impl FnMut(Letter) -> T, node: &mut impl FnMut(T, T) -> T) -> T {
        fold_slice(&self.letters, leaf, node)
    }
}

fn fold_slice<T>(letters: &[Letter], leaf: &mut impl FnMut(Letter) -> T, node: &mut impl FnMut(T, T) -> T) -> T {
    if letters.len() == 1 {
        return leaf(letters[0]);
    }
    let split = standard_split(letters);
    let left = fold_slice(&letters[..split], leaf, node);
    let right = fold_slice(&letters[split..], leaf, node);
    node(left, right)
}

/// Start of the longest proper Lyndon suffix.
fn standard_split(letters: &[Letter]) -> usize {
    (1..letters.len())
        .find(|&i| is_lyndon(&letters[i..]))
        .expect("a single letter is always a Lyndon suffix")
}

impl Ord for BasicWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.multidegree
            .cmp(&other.multidegree)
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for BasicWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.fold(&mut |l| l.to_string(), &mut |a, b| format!("[{a},{b}]"));
        f.write_str(&text)
    }
}

impl Serialize for BasicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Lyndon test: strictly smaller than each of its proper rotations.
pub(crate) fn is_lyndon<T: Ord>(s: &[T]) -> bool {
    if s.is_empty() {
        return false;
    }
    let (mut i, mut j) = (0, 1);
    while j < s.len() {
        match s[i].cmp(&s[j]) {
            Ordering::Less => i = 0,
            Ordering::Equal => i += 1,
            Ordering::Greater => return false,
        }
        j += 1;
    }
    i == 0
}

/// All basic words with letter content exactly `content`, in lexicographic
/// order of their letter strings.
pub fn basic_words_with_content(content: &MultiDegree) -> Vec<BasicWord> {
    let k = content.k();
    let n = content.weight() as usize;
    let Some(first) = content.0.iter().position(|&d| d > 0) else {
        return Vec::new();
    };

    // Fixed-content variant of the Fredricksen-Kessler-Maiorana recursion:
    // extend prenecklaces one letter at a time and keep those of period n.
    struct Gen<'a> {
        k: usize,
        n: usize,
        word: Vec<u16>,
        remaining: Vec<u32>,
        out: &'a mut Vec<BasicWord>,
    }

    impl Gen<'_> {
        fn run(&mut self, t: usize, p: usize) {
            if t > self.n {
                if p == self.n {
                    let letters = self.word[1..].iter().map(|&i| Letter(i)).collect();
                    self.out.push(BasicWord::from_lyndon_unchecked(self.k, letters));
                }
                return;
            }
            let from = self.word[t - p] as usize;
            for j in from..=self.k {
                if self.remaining[j - 1] == 0 {
                    continue;
                }
                self.remaining[j - 1] -= 1;
                self.word[t] = j as u16;
                self.run(t + 1, if j == from { p } else { t });
                self.remaining[j - 1] += 1;
            }
        }
    }

    let mut out = Vec::new();
    let mut gen = Gen {
        k,
        n,
        word: vec![0; n + 1],
        remaining: content.0.clone(),
        out: &mut out,
    };
    gen.word[1] = (first + 1) as u16;
    gen.remaining[first] -= 1;
    gen.run(2, 1);
    out
}

/// All multidegrees in `k` letters of total weight `weight`.
pub fn multidegrees_of_weight(k: usize, weight: u32) -> Vec<MultiDegree> {
    fn go(k: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
        if acc.len() + 1 == k {
            acc.push(left);
            out.push(MultiDegree(acc.clone()));
            acc.pop();
            return;
        }
        for d in (0..=left).rev() {
            acc.push(d);
            go(k, left - d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(k, weight, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Basic words in `z1..zk` of weight at most `max_weight`, in canonical order.
pub fn enumerate_basic_words(k: usize, max_weight: u32) -> Result<Vec<BasicWord>> {
    if k == 0 {
        return Err(invalid("letter count k must be at least 1"));
    }
    if k > usize::from(u16::MAX) {
        return Err(invalid(format!("letter count {k} is too large")));
    }
    if max_weight == 0 {
        return Err(invalid("max_weight must be at least 1"));
    }
    let mut words = Vec::new();
    for weight in 1..=max_weight {
        // multidegrees_of_weight already yields the canonical multidegree order
        for d in multidegrees_of_weight(k, weight) {
            words.extend(basic_words_with_content(&d));
        }
    }
    debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
    Ok(words)
}

pub fn alpha(w: &BasicWord) -> u32 {
    w.alpha()
}

pub fn beta(w: &BasicWord) -> u32 {
    w.beta()
}

pub fn involves_all_but_first(w: &BasicWord) -> bool {
    w.involves_all_but_first()
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn multinomial(parts: impl Iterator<Item = u64>) -> u128 {
    // product of binomials C(d_1 + .. + d_i, d_i)
    let mut total: u128 = 0;
    let mut acc: u128 = 1;
    for d in parts {
        for j in 1..=u128::from(d) {
            total += 1;
            acc = acc
                .checked_mul(total)
                .expect("witt_count overflow: multidegree too large")
                / j;
        }
    }
    acc
}

/// Number of basic words with letter content `d`, by the necklace formula
/// `(1/W) Σ_{e | g} μ(e) (W/e)! / Π (d_i/e)!` with `W` the weight and `g`
/// the gcd of the degrees.
///
/// Panics if an intermediate multinomial exceeds `u128`.
pub fn witt_count(d: &MultiDegree) -> u128 {
    let weight = u64::from(d.weight());
    if weight == 0 {
        return 0;
    }
    let g = d.0.iter().fold(0u64, |g, &x| gcd(g, u64::from(x)));
    let mut sum: i128 = 0;
    for e in (1..=g).filter(|e| g % e == 0) {
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        let m = multinomial(d.0.iter().map(|&x| u64::from(x) / e)) as i128;
        sum += i128::from(mu) * m;
    }
    debug_assert!(sum >= 0 && sum % i128::from(weight) == 0);
    (sum / i128::from(weight)) as u128
}
