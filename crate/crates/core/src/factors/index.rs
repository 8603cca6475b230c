//! Suffix-array index over an expanded prefix. One build amortizes the
//! per-length subword scans: distinct subwords of every length come out
//! of a single sorted-suffix walk instead of one hashing pass per length.

/// Sorted suffix positions plus longest-common-prefix lengths for a
/// prefix of letter indices.
pub(crate) struct PrefixIndex {
    text: Vec<u8>,
    sa: Vec<u32>,
    lcp: Vec<u32>,
}

impl PrefixIndex {
    pub fn new(text: Vec<u8>) -> Self {
        let sa = suffix_array(&text);
        let lcp = lcp_array(&text, &sa);
        PrefixIndex { text, sa, lcp }
    }

    pub fn len(&self) -> usize {
        self.text.len()
    }

    /// Number of distinct subwords of each length `0..=k_max`.
    /// Index 0 is always 1 (the empty word).
    pub fn complexity_profile(&self, k_max: usize) -> Vec<usize> {
        let n = self.text.len();
        let mut diff = vec![0i64; k_max + 2];
        for r in 0..n {
            let rem = n - self.sa[r] as usize;
            let lo = self.lcp[r] as usize + 1;
            let hi = rem.min(k_max);
            if lo <= hi {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut out = Vec::with_capacity(k_max + 1);
        out.push(1);
        let mut acc = 0i64;
        for k in 1..=k_max {
            acc += diff[k];
            out.push(acc as usize);
        }
        out
    }

    /// Distinct length-`k` subwords in lexicographic order (`k >= 1`).
    /// A suffix contributes when it is long enough and its k-prefix
    /// differs from the previous suffix's; the previous suffix is always
    /// long enough in that case because an LCP of `k` or more needs `k`
    /// letters on both sides.
    pub fn distinct_kmers(&self, k: usize) -> impl Iterator<Item = &[u8]> + '_ {
        debug_assert!(k >= 1);
        let n = self.text.len();
        (0..n).filter_map(move |r| {
            let start = self.sa[r] as usize;
            if n - start >= k && (self.lcp[r] as usize) < k {
                Some(&self.text[start..start + k])
            } else {
                None
            }
        })
    }
}

/// Suffix array by rank doubling: O(n log^2 n), adequate for the prefix
/// sizes the saturation loop produces.
fn suffix_array(text: &[u8]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = text.iter().map(|&b| b as u32).collect();
    let mut tmp = vec![0u32; n];
    let mut k = 1usize;
    loop {
        let key = |i: u32| -> (u32, u32) {
            let i = i as usize;
            let second = if i + k < n { rank[i + k] + 1 } else { 0 };
            (rank[i], second)
        };
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0] as usize] = 0;
        for j in 1..n {
            let bump = u32::from(key(sa[j]) != key(sa[j - 1]));
            tmp[sa[j] as usize] = tmp[sa[j - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        k *= 2;
    }
    sa
}

/// Kasai's algorithm: `lcp[r]` is the common-prefix length of the
/// suffixes at sorted positions `r-1` and `r` (`lcp[0] = 0`).
fn lcp_array(text: &[u8], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut rank = vec![0u32; n];
    for (r, &s) in sa.iter().enumerate() {
        rank[s as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
