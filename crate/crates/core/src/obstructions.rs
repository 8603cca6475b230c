//! Minimal forbidden words and the cogrowth count.
//!
//! A word is an obstruction of a sequence when it is not a factor but
//! every proper subword is. For a factor-closed language this reduces to
//! a local test: `u = x·w·y` is an obstruction exactly when `x·w` and
//! `w·y` are factors while `u` itself is not, which the enumerator
//! checks by grouping the length-(n-1) stratum by shared middles. The
//! definitional all-proper-subwords scan stays available as a
//! brute-force oracle for small lengths.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::{self, Exec};
use crate::factors::{self, FactorLanguage, SaturatedIndex};
use crate::words::{Alphabet, SequenceSpec, Word};

/// Obstructions of length `1..=n_max`, sorted by length then
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionSet {
    alphabet: Alphabet,
    words: Vec<Word>,
    n_max: usize,
    source: String,
    from_certified: bool,
}

impl ObstructionSet {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// False when the underlying factor language was not certified; the
    /// set is then only as trustworthy as the scanned prefix.
    pub fn from_certified(&self) -> bool {
        self.from_certified
    }

    /// Number of obstructions of length at most `n` (the cogrowth count).
    pub fn cogrowth(&self, n: usize) -> Result<usize> {
        if n > self.n_max {
            return Err(Error::OutOfRange { k: n, k_max: self.n_max });
        }
        Ok(self.words.partition_point(|w| w.len() <= n))
    }

    /// Words of length exactly `n`.
    pub fn of_length(&self, n: usize) -> &[Word] {
        let lo = self.words.partition_point(|w| w.len() < n);
        let hi = self.words.partition_point(|w| w.len() <= n);
        &self.words[lo..hi]
    }

    /// Same stratified text listing as factor exports.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for n in 1..=self.n_max {
            let stratum = self.of_length(n);
            out.push_str(&format!("# k={} count={}\n", n, stratum.len()));
            for w in stratum {
                out.push_str(&self.alphabet.render(w));
                out.push('\n');
            }
        }
        out
    }
}

/// Sort key used throughout: length first, then lexicographic.
fn by_length_then_lex(a: &Word, b: &Word) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Core of the adjacent-strata enumeration, shared between the
/// materializing and the streaming callers. `f_prev` holds the sorted
/// length-(n-1) factors as raw letter slices; `contains_cur` answers
/// membership in the length-n stratum. Candidates are emitted in
/// arbitrary order.
fn enumerate_maws_at<'a>(
    alphabet_size: usize,
    f_prev: &[&'a [u8]],
    contains_cur: impl Fn(&[u8]) -> bool,
    mut emit: impl FnMut(Vec<u8>),
) {
    debug_assert!(alphabet_size <= 32);
    // groups[w] = (left letters x with x·w a factor, right letters y with w·y a factor)
    let mut groups: HashMap<&'a [u8], (u32, u32)> = HashMap::new();
    for v in f_prev {
        let len = v.len();
        groups.entry(&v[..len - 1]).or_default().1 |= 1 << v[len - 1];
        groups.entry(&v[1..]).or_default().0 |= 1 << v[0];
    }
    let mut buf = Vec::new();
    for (w, (lefts, rights)) in groups {
        for x in 0..alphabet_size as u8 {
            if lefts & (1 << x) == 0 {
                continue;
            }
            for y in 0..alphabet_size as u8 {
                if rights & (1 << y) == 0 {
                    continue;
                }
                buf.clear();
                buf.push(x);
                buf.extend_from_slice(w);
                buf.push(y);
                if !contains_cur(&buf) {
                    emit(buf.clone());
                }
            }
        }
    }
}

fn absent_letters(alphabet: &Alphabet, f1: impl Iterator<Item = u8>) -> Vec<Word> {
    let mut present = vec![false; alphabet.size()];
    for l in f1 {
        present[l as usize] = true;
    }
    alphabet
        .letters()
        .filter(|&l| !present[l as usize])
        .map(|l| Word::from_letters(vec![l]))
        .collect()
}

/// Enumerate all obstructions of length `1..=n_max` from stratified
/// factors, using the local `x·w·y` characterization.
pub fn minimal_forbidden(fl: &FactorLanguage, n_max: usize) -> Result<ObstructionSet> {
    if n_max < 1 {
        return Err(Error::PreconditionFailed("n_max must be at least 1".into()));
    }
    if n_max > fl.k_max() {
        return Err(Error::InsufficientStrata { k_max: fl.k_max(), needed: n_max });
    }
    let alphabet = fl.alphabet();
    let mut words = absent_letters(
        alphabet,
        fl.stratum(1).iter().map(|w| w.letter(0)),
    );
    for n in 2..=n_max {
        let prev: Vec<&[u8]> = fl.stratum(n - 1).iter().map(Word::letters).collect();
        let cur = fl.stratum(n);
        let mut found = Vec::new();
        enumerate_maws_at(
            alphabet.size(),
            &prev,
            |cand| cur.binary_search_by(|w| w.letters().cmp(cand)).is_ok(),
            |cand| found.push(Word::from_letters(cand)),
        );
        words.append(&mut found);
    }
    words.sort_unstable_by(by_length_then_lex);
    Ok(ObstructionSet {
        alphabet: alphabet.clone(),
        words,
        n_max,
        source: fl.source().to_string(),
        from_certified: fl.certified(),
    })
}

/// Maximum length the definitional brute-force enumeration accepts.
pub const BRUTE_FORCE_LIMIT: usize = 16;

/// Definitional oracle: enumerate every word of length `1..=n_max` and
/// test it against the extracted factor language literally (not a factor,
/// all proper subwords factors). Exponential; binary alphabets and
/// `n_max <= 16` only.
pub fn brute_force_minimal_forbidden(
    spec: &SequenceSpec,
    n_max: usize,
) -> Result<ObstructionSet> {
    brute_force_minimal_forbidden_exec(spec, n_max, Exec::Auto)
}

pub fn brute_force_minimal_forbidden_exec(
    spec: &SequenceSpec,
    n_max: usize,
    exec: Exec,
) -> Result<ObstructionSet> {
    if n_max > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { n_max, limit: BRUTE_FORCE_LIMIT });
    }
    if n_max < 1 {
        return Err(Error::PreconditionFailed("n_max must be at least 1".into()));
    }
    if spec.alphabet().size() > 2 {
        return Err(Error::PreconditionFailed(
            "brute-force enumeration is limited to binary alphabets".into(),
        ));
    }
    let fl = factors::extract_factors(spec, n_max)?;
    let per_length: Vec<Vec<Word>> = exec::map_range(exec, n_max, |i| {
        let k = i + 1;
        let mut found = Vec::new();
        let mut letters = vec![0u8; k];
        for code in 0u64..(1u64 << k) {
            for (pos, l) in letters.iter_mut().enumerate() {
                *l = ((code >> pos) & 1) as u8;
            }
            let w = Word::from_letters(letters.clone());
            if is_minimal_forbidden_literal(&fl, &w) {
                found.push(w);
            }
        }
        found.sort_unstable();
        found
    });
    let words: Vec<Word> = per_length.into_iter().flatten().collect();
    let from_certified = fl.certified();
    Ok(ObstructionSet {
        alphabet: spec.alphabet().clone(),
        words,
        n_max,
        source: spec.name().to_string(),
        from_certified,
    })
}

/// The definition, applied verbatim: `w` is not a factor and every
/// proper contiguous subword of `w` is.
fn is_minimal_forbidden_literal(fl: &FactorLanguage, w: &Word) -> bool {
    if fl.contains(w).unwrap() {
        return false;
    }
    let k = w.len();
    for len in 1..k {
        for start in 0..=k - len {
            if !fl.contains(&w.subword(start, len)).unwrap() {
                return false;
            }
        }
    }
    true
}

/// One profile row: the cogrowth count at `n` against the base-3
/// logarithm, plus the running maximum of the ratio.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub cogrowth: usize,
    pub log3_n: f64,
    pub ratio: f64,
    pub running_max: f64,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CogrowthProfile {
    pub source: String,
    pub n_max: usize,
    pub certified: bool,
    pub prefix_len: usize,
    pub rows: Vec<ProfileRow>,
}

impl CogrowthProfile {
    pub fn running_max(&self) -> f64 {
        self.rows.last().map_or(0.0, |r| r.running_max)
    }

    /// The first row attaining the running maximum.
    pub fn max_row(&self) -> Option<&ProfileRow> {
        let max = self.running_max();
        self.rows.iter().find(|r| r.ratio == max)
    }

    /// CSV with the fixed `n,cogrowth,log3n,ratio,running_max` header.
    /// `header_comment` lines (without the leading `#`) go first.
    pub fn to_csv(&self, header_comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = header_comment {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str("n,cogrowth,log3n,ratio,running_max\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.6},{:.6},{:.6}\n",
                r.n, r.cogrowth, r.log3_n, r.ratio, r.running_max
            ));
        }
        out
    }
}

/// Cogrowth counts for every `n` in `2..=n_max`, computed by streaming
/// two adjacent strata at a time over a saturated prefix index. Memory
/// stays proportional to one stratum, so profiles to `n` in the
/// thousands are fine even where materializing every stratum would not
/// be.
pub fn cogrowth_profile(spec: &SequenceSpec, n_max: usize) -> Result<CogrowthProfile> {
    if n_max < 2 {
        return Err(Error::PreconditionFailed("n_max must be at least 2".into()));
    }
    let (idx, certified) = if spec.is_explicit_variant() {
        let len = spec.explicit_len().unwrap();
        let w = spec.expand_prefix(len)?;
        (factors::PrefixIndex::new(w.letters().to_vec()), false)
    } else {
        match factors::saturated_index(spec, n_max)? {
            // A stall only certifies the counts when subwords are
            // guaranteed to recur with bounded gaps.
            SaturatedIndex::Certified(idx) => (idx, spec.uniformly_recurrent()),
            SaturatedIndex::Capped(_) => {
                // Mirror extraction's contract: report the failure with a
                // recoverable low-strata language rather than a profile of
                // uncertain counts.
                let capped_k = n_max.min(64);
                let fl = factors::extract_factors_with_prefix(
                    spec,
                    capped_k,
                    factors::SATURATION_CAP,
                )?;
                return Err(Error::SaturationFailed {
                    cap: factors::SATURATION_CAP,
                    result: Box::new(fl),
                });
            }
        }
    };
    let alphabet_size = spec.alphabet().size();
    let mut counts = vec![0usize; n_max + 1];
    let f1: Vec<&[u8]> = idx.distinct_kmers(1).collect();
    counts[1] = alphabet_size - f1.len();
    let mut prev = f1;
    for n in 2..=n_max {
        let cur: Vec<&[u8]> = idx.distinct_kmers(n).collect();
        let mut found = 0usize;
        enumerate_maws_at(
            alphabet_size,
            &prev,
            |cand| cur.binary_search_by(|s| (*s).cmp(cand)).is_ok(),
            |_| found += 1,
        );
        counts[n] = found;
        prev = cur;
    }

    let ln3 = 3f64.ln();
    let mut rows = Vec::with_capacity(n_max - 1);
    let mut cumulative = counts[1];
    let mut running_max = f64::MIN;
    for n in 2..=n_max {
        cumulative += counts[n];
        let log3_n = (n as f64).ln() / ln3;
        let ratio = cumulative as f64 / log3_n;
        running_max = running_max.max(ratio);
        rows.push(ProfileRow { n, cogrowth: cumulative, log3_n, ratio, running_max });
    }
    Ok(CogrowthProfile {
        source: spec.name().to_string(),
        n_max,
        certified,
        prefix_len: idx.len(),
        rows,
    })
}
