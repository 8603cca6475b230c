//! Stratified factor languages: the sets of length-k subwords of a
//! sequence, for k up to a requested bound.
//!
//! Extraction scans an expanded prefix and certifies the result by
//! saturation: the strata are recomputed from a doubled prefix and must
//! not change. Prefixes of a longer prefix only ever add subwords, so
//! per-length counts agreeing is the same as the sets agreeing, and the
//! cheap count comparison is exact.

mod index;

pub(crate) use index::PrefixIndex;

use crate::error::{Error, Result};
use crate::words::{Alphabet, SequenceSpec, Word};

/// Hard ceiling on the scanned prefix length during saturation.
pub const SATURATION_CAP: usize = 1 << 22;

/// Distinct subwords of a sequence, grouped by length `0..=k_max`,
/// each stratum sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorLanguage {
    alphabet: Alphabet,
    strata: Vec<Vec<Word>>,
    source: String,
    certified: bool,
    prefix_len: usize,
}

impl FactorLanguage {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Name of the sequence the strata were extracted from.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// True when the strata were stable under prefix doubling. Explicit
    /// prefixes are never certified: nothing beyond the given letters is
    /// known.
    pub fn certified(&self) -> bool {
        self.certified
    }

    /// Length of the prefix the strata were scanned from.
    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn k_max(&self) -> usize {
        self.strata.len() - 1
    }

    /// The sorted stratum of length-`k` factors. Panics beyond `k_max`;
    /// fallible accessors are [`complexity`](Self::complexity) and
    /// [`contains`](Self::contains).
    pub fn stratum(&self, k: usize) -> &[Word] {
        &self.strata[k]
    }

    pub fn complexity(&self, k: usize) -> Result<usize> {
        self.strata
            .get(k)
            .map(Vec::len)
            .ok_or(Error::OutOfRange { k, k_max: self.k_max() })
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        let k = w.len();
        match self.strata.get(k) {
            Some(stratum) => Ok(stratum.binary_search(w).is_ok()),
            None => Err(Error::OutOfRange { k, k_max: self.k_max() }),
        }
    }

    /// Stratified text listing: a `# k=<len> count=<n>` header per
    /// length, then one word per line.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        for (k, stratum) in self.strata.iter().enumerate() {
            out.push_str(&format!("# k={} count={}\n", k, stratum.len()));
            for w in stratum {
                out.push_str(&self.alphabet.render(w));
                out.push('\n');
            }
        }
        out
    }

    fn from_index(
        spec: &SequenceSpec,
        idx: &PrefixIndex,
        k_max: usize,
        certified: bool,
    ) -> Self {
        let mut strata = Vec::with_capacity(k_max + 1);
        strata.push(vec![Word::empty()]);
        for k in 1..=k_max {
            strata.push(
                idx.distinct_kmers(k)
                    .map(|s| Word::from_letters(s.to_vec()))
                    .collect(),
            );
        }
        FactorLanguage {
            alphabet: spec.alphabet().clone(),
            strata,
            source: spec.name().to_string(),
            certified,
            prefix_len: idx.len(),
        }
    }
}

pub(crate) enum SaturatedIndex {
    /// Strata stable between the prefix and its double.
    Certified(PrefixIndex),
    /// Still changing at the cap; the capped index rides along.
    Capped(PrefixIndex),
}

/// Grow the scanned prefix until the per-length subword counts stop
/// changing. Starts at `max(64, 8 * k_max)` letters and doubles.
pub(crate) fn saturated_index(spec: &SequenceSpec, k_max: usize) -> Result<SaturatedIndex> {
    let mut n = 64usize.max(8 * k_max);
    let mut small: Option<PrefixIndex> = None;
    loop {
        let double = 2 * n;
        if double > SATURATION_CAP {
            let w = spec.expand_prefix(SATURATION_CAP)?;
            return Ok(SaturatedIndex::Capped(PrefixIndex::new(w.letters().to_vec())));
        }
        let w = spec.expand_prefix(double)?;
        let small_idx = match small.take() {
            Some(idx) if idx.len() == n => idx,
            _ => PrefixIndex::new(w.letters()[..n].to_vec()),
        };
        let big_idx = PrefixIndex::new(w.letters().to_vec());
        if small_idx.complexity_profile(k_max) == big_idx.complexity_profile(k_max) {
            return Ok(SaturatedIndex::Certified(big_idx));
        }
        small = Some(big_idx);
        n = double;
    }
}

/// Extract the strata of all subword lengths `0..=k_max`.
///
/// Morphic and periodic specs go through the saturation loop; failure to
/// stabilize under [`SATURATION_CAP`] is an error that still carries the
/// uncertified result. Explicit prefixes are scanned whole and returned
/// uncertified.
///
/// A stall of the per-length counts only proves completeness when the
/// source recurs with bounded gaps, so certification additionally
/// requires [`SequenceSpec::uniformly_recurrent`]. Without it the stall
/// is just a stopping rule: the fixed point of a -> aaab, b -> b stalls
/// at prefix 256 yet grows a new length-5 subword near position 360.
pub fn extract_factors(spec: &SequenceSpec, k_max: usize) -> Result<FactorLanguage> {
    if k_max < 1 {
        return Err(Error::PreconditionFailed("k_max must be at least 1".into()));
    }
    if spec.is_explicit_variant() {
        let len = spec.explicit_len().unwrap();
        let w = spec.expand_prefix(len)?;
        let idx = PrefixIndex::new(w.letters().to_vec());
        return Ok(FactorLanguage::from_index(spec, &idx, k_max, false));
    }
    match saturated_index(spec, k_max)? {
        SaturatedIndex::Certified(idx) => {
            let certified = spec.uniformly_recurrent();
            Ok(FactorLanguage::from_index(spec, &idx, k_max, certified))
        }
        SaturatedIndex::Capped(idx) => Err(Error::SaturationFailed {
            cap: SATURATION_CAP,
            result: Box::new(FactorLanguage::from_index(spec, &idx, k_max, false)),
        }),
    }
}

/// Extract strata from a prefix of exactly `prefix_len` letters, with no
/// saturation check. The result is marked uncertified.
pub fn extract_factors_with_prefix(
    spec: &SequenceSpec,
    k_max: usize,
    prefix_len: usize,
) -> Result<FactorLanguage> {
    if k_max < 1 {
        return Err(Error::PreconditionFailed("k_max must be at least 1".into()));
    }
    let w = spec.expand_prefix(prefix_len)?;
    let idx = PrefixIndex::new(w.letters().to_vec());
    Ok(FactorLanguage::from_index(spec, &idx, k_max, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn render_stratum(fl: &FactorLanguage, k: usize) -> Vec<String> {
        fl.stratum(k).iter().map(|w| fl.alphabet().render(w)).collect()
    }

    #[test]
    fn fibonacci_low_strata() {
        let fl = extract_factors(&SequenceSpec::fibonacci(), 3).unwrap();
        assert!(fl.certified());
        assert_eq!(render_stratum(&fl, 0), vec![""]);
        assert_eq!(render_stratum(&fl, 1), vec!["a", "b"]);
        assert_eq!(render_stratum(&fl, 2), vec!["aa", "ab", "ba"]);
        assert_eq!(render_stratum(&fl, 3), vec!["aab", "aba", "baa", "bab"]);
    }

    #[test]
    fn fibonacci_complexity_is_k_plus_one() {
        let fl = extract_factors(&SequenceSpec::fibonacci(), 24).unwrap();
        for k in 1..=24 {
            assert_eq!(fl.complexity(k).unwrap(), k + 1, "k={k}");
        }
    }

    #[test]
    fn thue_morse_low_strata() {
        let fl = extract_factors(&SequenceSpec::thue_morse(), 3).unwrap();
        assert_eq!(render_stratum(&fl, 2), vec!["aa", "ab", "ba", "bb"]);
        assert_eq!(
            render_stratum(&fl, 3),
            vec!["aab", "aba", "abb", "baa", "bab", "bba"]
        );
    }

    #[test]
    fn periodic_strata_are_rotations() {
        let spec = SequenceSpec::periodic("periodic:ab", "ab").unwrap();
        let fl = extract_factors(&spec, 5).unwrap();
        assert!(fl.certified());
        for k in 2..=5 {
            assert_eq!(fl.complexity(k).unwrap(), 2, "k={k}");
        }
    }

    #[test]
    fn single_letter_period_keeps_binary_alphabet() {
        let spec = SequenceSpec::periodic("periodic:a", "a").unwrap();
        let fl = extract_factors(&spec, 4).unwrap();
        assert_eq!(fl.alphabet().size(), 2);
        assert_eq!(render_stratum(&fl, 1), vec!["a"]);
        assert_eq!(render_stratum(&fl, 4), vec!["aaaa"]);
    }

    #[test]
    fn explicit_prefix_is_uncertified_and_exact() {
        let spec = SequenceSpec::explicit("x", "abaab").unwrap();
        let fl = extract_factors(&spec, 6).unwrap();
        assert!(!fl.certified());
        assert_eq!(fl.prefix_len(), 5);
        assert_eq!(render_stratum(&fl, 2), vec!["aa", "ab", "ba"]);
        assert_eq!(render_stratum(&fl, 5), vec!["abaab"]);
        assert_eq!(fl.complexity(6).unwrap(), 0);
    }

    #[test]
    fn sparse_fixed_point_stall_is_not_certified() {
        // a -> aaab, b -> b has the fixed point s, s s s b, ... whose
        // b-runs lengthen forever and first appear at exponentially
        // sparse positions. Its counts stall across one doubling (the
        // prefix of 256 letters misses bbbbb, first seen near 360), so a
        // bare stall must not count as a certificate here.
        let m = crate::words::Morphism::new(
            Alphabet::binary(),
            vec![
                Word::from_letters(vec![0, 0, 0, 1]),
                Word::from_letters(vec![1]),
            ],
        )
        .unwrap();
        let spec = SequenceSpec::morphic("sparse", m, 0).unwrap();
        assert!(!spec.uniformly_recurrent());
        let fl = extract_factors(&spec, 5).unwrap();
        assert!(!fl.certified());
        let again = extract_factors_with_prefix(&spec, 5, 2 * fl.prefix_len()).unwrap();
        assert!(
            fl.stratum(5).len() < again.stratum(5).len(),
            "the stall at prefix {} was genuine after all",
            fl.prefix_len()
        );
    }

    #[test]
    fn strata_match_naive_window_scan() {
        for spec in [
            SequenceSpec::fibonacci(),
            SequenceSpec::thue_morse(),
            SequenceSpec::period_doubling(),
            SequenceSpec::periodic("p", "aab").unwrap(),
        ] {
            let prefix_len = 200;
            let k_max = 6;
            let fl = extract_factors_with_prefix(&spec, k_max, prefix_len).unwrap();
            let w = spec.expand_prefix(prefix_len).unwrap();
            for k in 1..=k_max {
                let naive: BTreeSet<Word> = w
                    .letters()
                    .windows(k)
                    .map(|s| Word::from_letters(s.to_vec()))
                    .collect();
                let naive: Vec<Word> = naive.into_iter().collect();
                assert_eq!(fl.stratum(k), naive.as_slice(), "{} k={k}", spec.name());
            }
        }
    }

    #[test]
    fn certified_strata_stable_under_further_doubling() {
        for spec in [SequenceSpec::fibonacci(), SequenceSpec::thue_morse()] {
            let k_max = 10;
            let fl = extract_factors(&spec, k_max).unwrap();
            assert!(fl.certified());
            let again = extract_factors_with_prefix(&spec, k_max, 2 * fl.prefix_len()).unwrap();
            for k in 0..=k_max {
                assert_eq!(fl.stratum(k), again.stratum(k), "{} k={k}", spec.name());
            }
        }
    }

    #[test]
    fn factor_closedness() {
        let fl = extract_factors(&SequenceSpec::thue_morse(), 8).unwrap();
        for k in 1..=8 {
            for w in fl.stratum(k) {
                assert!(fl.contains(&w.prefix(k - 1)).unwrap());
                assert!(fl.contains(&w.suffix(k - 1)).unwrap());
            }
        }
    }

    #[test]
    fn right_extendability_of_certified_strata() {
        for spec in [
            SequenceSpec::fibonacci(),
            SequenceSpec::period_doubling(),
            SequenceSpec::periodic("p", "abb").unwrap(),
        ] {
            let fl = extract_factors(&spec, 7).unwrap();
            assert!(fl.certified());
            for k in 0..7 {
                for w in fl.stratum(k) {
                    let extends = fl
                        .alphabet()
                        .letters()
                        .any(|l| fl.contains(&w.extended(l)).unwrap());
                    assert!(extends, "{} k={k}", spec.name());
                }
            }
        }
    }

    #[test]
    fn contains_rejects_lengths_beyond_strata() {
        let fl = extract_factors(&SequenceSpec::fibonacci(), 2).unwrap();
        let w = fl.alphabet().parse_word("aba").unwrap();
        assert!(matches!(
            fl.contains(&w),
            Err(Error::OutOfRange { k: 3, k_max: 2 })
        ));
        assert!(matches!(
            fl.complexity(9),
            Err(Error::OutOfRange { k: 9, k_max: 2 })
        ));
    }

    #[test]
    fn export_text_is_stratified() {
        let fl = extract_factors(&SequenceSpec::fibonacci(), 2).unwrap();
        let text = fl.export_text();
        assert_eq!(
            text,
            "# k=0 count=1\n\n# k=1 count=2\na\nb\n# k=2 count=3\naa\nab\nba\n"
        );
    }

    #[test]
    fn empty_word_always_present() {
        let fl = extract_factors(&SequenceSpec::fibonacci(), 1).unwrap();
        assert!(fl.contains(&Word::empty()).unwrap());
        assert_eq!(fl.complexity(0).unwrap(), 1);
    }
}
