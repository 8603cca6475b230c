//! Alphabets, finite words, morphisms and sequence descriptions.
//!
//! A sequence is described symbolically (morphic fixed point, periodic
//! repetition, or a literal prefix) and expanded on demand; everything
//! downstream works on expanded prefixes. Letters are stored as indices
//! into an [`Alphabet`], whose order fixes lexicographic comparisons and
//! every deterministic listing in the crate.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

/// An ordered set of at least two distinct symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<char>,
}

impl Alphabet {
    pub fn new(chars: Vec<char>) -> Result<Self> {
        if chars.len() < 2 {
            return Err(Error::InvalidAlphabet(format!(
                "need at least 2 letters, got {}",
                chars.len()
            )));
        }
        if chars.len() > 26 {
            return Err(Error::InvalidAlphabet(format!(
                "at most 26 letters supported, got {}",
                chars.len()
            )));
        }
        let mut sorted = chars.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != chars.len() {
            return Err(Error::InvalidAlphabet("letters must be distinct".into()));
        }
        if sorted != chars {
            return Err(Error::InvalidAlphabet(
                "letters must be listed in sorted order".into(),
            ));
        }
        Ok(Alphabet { chars })
    }

    /// The two-letter alphabet `{a, b}` used by all built-in sequences.
    pub fn binary() -> Self {
        Alphabet { chars: vec!['a', 'b'] }
    }

    pub fn size(&self) -> usize {
        self.chars.len()
    }

    /// Letter indices in order.
    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.chars.len() as u8).into_iter()
    }

    pub fn char_of(&self, letter: u8) -> char {
        self.chars[letter as usize]
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.chars.iter().position(|&x| x == c).map(|i| i as u8)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match self.index_of(c) {
                Some(i) => letters.push(i),
                None => {
                    return Err(Error::InvalidWord(format!(
                        "character '{c}' is not in the alphabet"
                    )))
                }
            }
        }
        Ok(Word { letters })
    }

    pub fn render(&self, w: &Word) -> String {
        w.letters.iter().map(|&i| self.char_of(i)).collect()
    }
}

/// A finite word over some alphabet, stored as letter indices.
/// Comparison is lexicographic in index order; among words this crate
/// groups by length, so ties in length compare letter by letter.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> u8 {
        self.letters[i]
    }

    /// First `k` letters; `k` must not exceed the length.
    pub fn prefix(&self, k: usize) -> Word {
        Word { letters: self.letters[..k].to_vec() }
    }

    /// Last `k` letters; `k` must not exceed the length.
    pub fn suffix(&self, k: usize) -> Word {
        Word { letters: self.letters[self.letters.len() - k..].to_vec() }
    }

    pub fn subword(&self, start: usize, len: usize) -> Word {
        Word { letters: self.letters[start..start + len].to_vec() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn extended(&self, letter: u8) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(letter);
        Word { letters }
    }

    /// True if `other` occurs in `self` as a contiguous block.
    pub fn contains_subword(&self, other: &Word) -> bool {
        if other.is_empty() {
            return true;
        }
        self.letters
            .windows(other.len())
            .any(|w| w == other.letters.as_slice())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[")?;
        for &l in &self.letters {
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// A substitution sending each letter to a nonempty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    images: Vec<Word>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != alphabet.size() {
            return Err(Error::InvalidMorphism(format!(
                "expected {} images, got {}",
                alphabet.size(),
                images.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(Error::InvalidMorphism(format!(
                    "image of '{}' is empty",
                    alphabet.char_of(i as u8)
                )));
            }
            if img.letters().iter().any(|&l| l as usize >= alphabet.size()) {
                return Err(Error::InvalidMorphism(format!(
                    "image of '{}' uses letters outside the alphabet",
                    alphabet.char_of(i as u8)
                )));
            }
        }
        Ok(Morphism { alphabet, images })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn image(&self, letter: u8) -> &Word {
        &self.images[letter as usize]
    }

    pub fn apply(&self, w: &Word) -> Word {
        let total: usize = w.letters().iter().map(|&l| self.images[l as usize].len()).sum();
        let mut letters = Vec::with_capacity(total);
        for &l in w.letters() {
            letters.extend_from_slice(self.images[l as usize].letters());
        }
        Word::from_letters(letters)
    }

    /// Prolongable from `seed`: the image of `seed` starts with `seed`
    /// and has at least one more letter, so iterating the morphism from
    /// `seed` produces strictly growing prefixes of a fixed point.
    pub fn is_prolongable_from(&self, seed: u8) -> bool {
        let img = &self.images[seed as usize];
        img.len() >= 2 && img.letter(0) == seed
    }

    /// Counts of each letter in each image: `matrix[i][j]` is the number
    /// of occurrences of letter `j` in the image of letter `i`.
    pub fn incidence_matrix(&self) -> Vec<Vec<u64>> {
        let s = self.alphabet.size();
        let mut m = vec![vec![0u64; s]; s];
        for (i, img) in self.images.iter().enumerate() {
            for &l in img.letters() {
                m[i][l as usize] += 1;
            }
        }
        m
    }

    /// True if some power of the incidence matrix up to exponent
    /// `size^2` is entrywise positive. Positivity is monotone under
    /// further powers because every image is nonempty, so the bound is
    /// exhaustive.
    pub fn is_primitive(&self) -> bool {
        let s = self.alphabet.size();
        let m = self.incidence_matrix();
        let mut p = m.clone();
        for _ in 0..s * s {
            if p.iter().all(|row| row.iter().all(|&x| x > 0)) {
                return true;
            }
            p = mat_mul(&p, &m);
        }
        p.iter().all(|row| row.iter().all(|&x| x > 0))
    }
}

fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut c = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] = c[i][j].saturating_add(aik.saturating_mul(b[k][j]));
            }
        }
    }
    c
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecVariant {
    /// Fixed point of a morphism prolongable from `seed`.
    MorphicFixedPoint { morphism: Morphism, seed: u8 },
    /// Infinite repetition of a nonempty word.
    Periodic { word: Word },
    /// A literal finite prefix; nothing beyond it is known.
    ExplicitPrefix { word: Word },
}

/// A symbolic description of an infinite (or finite, for explicit
/// prefixes) sequence, expandable to any requested prefix length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceSpec {
    name: String,
    alphabet: Alphabet,
    variant: SpecVariant,
}

impl SequenceSpec {
    pub fn morphic(name: &str, morphism: Morphism, seed: u8) -> Result<Self> {
        if !morphism.is_prolongable_from(seed) {
            return Err(Error::NonProlongable {
                seed: morphism.alphabet().char_of(seed),
            });
        }
        Ok(SequenceSpec {
            name: name.to_string(),
            alphabet: morphism.alphabet().clone(),
            variant: SpecVariant::MorphicFixedPoint { morphism, seed },
        })
    }

    /// Periodic repetition of `word` over the binary alphabet.
    pub fn periodic(name: &str, word: &str) -> Result<Self> {
        let alphabet = Alphabet::binary();
        let word = alphabet.parse_word(word)?;
        if word.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(SequenceSpec {
            name: name.to_string(),
            alphabet,
            variant: SpecVariant::Periodic { word },
        })
    }

    /// A literal prefix over the binary alphabet.
    pub fn explicit(name: &str, word: &str) -> Result<Self> {
        let alphabet = Alphabet::binary();
        let word = alphabet.parse_word(word)?;
        if word.is_empty() {
            return Err(Error::InvalidSpec("explicit prefix is empty".into()));
        }
        Ok(SequenceSpec {
            name: name.to_string(),
            alphabet,
            variant: SpecVariant::ExplicitPrefix { word },
        })
    }

    /// `a -> ab, b -> a`, fixed point from `a`.
    pub fn fibonacci() -> Self {
        Self::binary_morphic("fibonacci", "ab", "a")
    }

    /// `a -> ab, b -> ba`, fixed point from `a`.
    pub fn thue_morse() -> Self {
        Self::binary_morphic("thue-morse", "ab", "ba")
    }

    /// `a -> ab, b -> aa`, fixed point from `a`.
    pub fn period_doubling() -> Self {
        Self::binary_morphic("period-doubling", "ab", "aa")
    }

    fn binary_morphic(name: &str, image_a: &str, image_b: &str) -> Self {
        let alphabet = Alphabet::binary();
        let images = vec![
            alphabet.parse_word(image_a).unwrap(),
            alphabet.parse_word(image_b).unwrap(),
        ];
        let morphism = Morphism::new(alphabet, images).unwrap();
        SequenceSpec::morphic(name, morphism, 0).unwrap()
    }

    /// Resolve a built-in name: `fibonacci`, `thue-morse`,
    /// `period-doubling`, or `periodic:<word>`.
    pub fn builtin(name: &str) -> Option<Result<Self>> {
        match name {
            "fibonacci" => Some(Ok(Self::fibonacci())),
            "thue-morse" => Some(Ok(Self::thue_morse())),
            "period-doubling" => Some(Ok(Self::period_doubling())),
            _ => name
                .strip_prefix("periodic:")
                .map(|w| Self::periodic(&format!("periodic:{w}"), w)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn variant(&self) -> &SpecVariant {
        &self.variant
    }

    /// Whether the construction guarantees that every subword recurs with
    /// bounded gaps. True for periodic words and for fixed points of
    /// primitive morphisms (which are linearly recurrent); false for
    /// explicit prefixes and non-primitive fixed points, where a new
    /// subword can first appear beyond any fixed horizon. Only this
    /// guarantee lets a stalled prefix scan certify completeness.
    pub fn uniformly_recurrent(&self) -> bool {
        match &self.variant {
            SpecVariant::MorphicFixedPoint { morphism, .. } => morphism.is_primitive(),
            SpecVariant::Periodic { .. } => true,
            SpecVariant::ExplicitPrefix { .. } => false,
        }
    }

    pub fn is_periodic_variant(&self) -> bool {
        matches!(self.variant, SpecVariant::Periodic { .. })
    }

    pub fn is_explicit_variant(&self) -> bool {
        matches!(self.variant, SpecVariant::ExplicitPrefix { .. })
    }

    /// For explicit prefixes, the number of available letters.
    pub fn explicit_len(&self) -> Option<usize> {
        match &self.variant {
            SpecVariant::ExplicitPrefix { word } => Some(word.len()),
            _ => None,
        }
    }

    /// The first `n` letters of the described sequence.
    pub fn expand_prefix(&self, n: usize) -> Result<Word> {
        match &self.variant {
            SpecVariant::MorphicFixedPoint { morphism, seed } => {
                let mut w = Word::from_letters(vec![*seed]);
                while w.len() < n {
                    w = morphism.apply(&w);
                }
                Ok(w.prefix(n))
            }
            SpecVariant::Periodic { word } => {
                let mut letters = Vec::with_capacity(n);
                while letters.len() < n {
                    let take = (n - letters.len()).min(word.len());
                    letters.extend_from_slice(&word.letters()[..take]);
                }
                Ok(Word::from_letters(letters))
            }
            SpecVariant::ExplicitPrefix { word } => {
                if n > word.len() {
                    Err(Error::PrefixTooShort { available: word.len(), requested: n })
                } else {
                    Ok(word.prefix(n))
                }
            }
        }
    }

    /// Load a spec from its JSON description. The schema:
    /// `{"name": ..., "variant": "morphic"|"periodic"|"explicit",
    ///   "images": {letter: word}, "seed": letter, "word": string}`
    /// where `images` and `seed` apply to morphic specs and `word` to the
    /// other two variants.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(text)
            .map_err(|e| Error::InvalidSpec(format!("malformed JSON: {e}")))?;
        match raw.variant.as_str() {
            "morphic" => {
                let images = raw.images.ok_or_else(|| {
                    Error::InvalidSpec("morphic spec needs an \"images\" map".into())
                })?;
                let seed_str = raw
                    .seed
                    .ok_or_else(|| Error::InvalidSpec("morphic spec needs a \"seed\"".into()))?;
                let chars: Vec<char> = images.keys().copied().collect();
                let alphabet = Alphabet::new(chars)?;
                let mut image_words = Vec::with_capacity(alphabet.size());
                for (_, img) in images.iter() {
                    image_words.push(alphabet.parse_word(img)?);
                }
                let morphism = Morphism::new(alphabet.clone(), image_words)?;
                let seed = single_char(&seed_str, "seed")?;
                let seed = alphabet.index_of(seed).ok_or_else(|| {
                    Error::InvalidSpec(format!("seed '{seed}' is not in the alphabet"))
                })?;
                SequenceSpec::morphic(&raw.name, morphism, seed)
            }
            "periodic" => {
                let word = raw.word.ok_or_else(|| {
                    Error::InvalidSpec("periodic spec needs a \"word\"".into())
                })?;
                SequenceSpec::periodic(&raw.name, &word)
            }
            "explicit" => {
                let word = raw.word.ok_or_else(|| {
                    Error::InvalidSpec("explicit spec needs a \"word\"".into())
                })?;
                SequenceSpec::explicit(&raw.name, &word)
            }
            other => Err(Error::InvalidSpec(format!("unknown variant \"{other}\""))),
        }
    }
}

fn single_char(s: &str, field: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::InvalidSpec(format!(
            "\"{field}\" must be a single character, got \"{s}\""
        ))),
    }
}

#[derive(Deserialize)]
struct RawSpec {
    name: String,
    variant: String,
    #[serde(default)]
    images: Option<BTreeMap<char, String>>,
    #[serde(default)]
    seed: Option<String>,
    #[serde(default)]
    word: Option<String>,
}

/// Smallest period `p <= |w|/2` such that `w` is a prefix of the
/// infinite repetition of its first `p` letters, if any. Used to flag
/// sequences that look periodic at prefix scale.
pub fn is_eventually_periodic_prefix(w: &Word) -> Option<usize> {
    let n = w.len();
    for p in 1..=n / 2 {
        if (p..n).all(|i| w.letter(i) == w.letter(i - p)) {
            return Some(p);
        }
    }
    None
}
