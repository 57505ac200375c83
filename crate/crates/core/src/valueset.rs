//! Bounded-below, cofinite subsets of `Z` stored as a dense bit window.
//!
//! A [`ValueSet`] is kept in normal form: `min` is its least element,
//! `conductor` is the least `c` with `[c, ∞)` inside the set, and the bits
//! of `[min, conductor)` are stored little-endian in 64-bit words. Every
//! integer below `min` is absent and every integer at or above `conductor`
//! is present. Equality of normal forms is set equality.

const WORD: i64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueSet {
    min: i64,
    conductor: i64,
    words: Vec<u64>,
}

fn word_count(len: i64) -> usize {
    ((len + WORD - 1) / WORD) as usize
}

/// 64 membership bits starting at relative offset `rel` of a raw window of
/// `len` stored bits, treating everything below 0 as absent and everything
/// at or above `len` as present.
fn extract(words: &[u64], len: i64, rel: i64) -> u64 {
    if rel >= len {
        return !0;
    }
    if rel <= -WORD {
        return 0;
    }
    let raw = if rel >= 0 {
        let w = (rel / WORD) as usize;
        let off = (rel % WORD) as u32;
        let lo = words.get(w).copied().unwrap_or(0) >> off;
        let hi = if off == 0 {
            0
        } else {
            words.get(w + 1).copied().unwrap_or(0) << (64 - off)
        };
        lo | hi
    } else {
        words.first().copied().unwrap_or(0) << ((-rel) as u32)
    };
    let tail = len - rel;
    if tail < WORD {
        raw | (!0u64 << tail)
    } else {
        raw
    }
}

fn tail_mask(remaining: i64) -> u64 {
    if remaining >= WORD {
        !0
    } else {
        (1u64 << remaining) - 1
    }
}

impl ValueSet {
    /// The interval `[min, ∞)`.
    pub fn interval_from(min: i64) -> Self {
        ValueSet {
            min,
            conductor: min,
            words: Vec::new(),
        }
    }

    /// Members of `[lo, hi)` chosen by `member`, together with `[hi, ∞)`.
    pub fn from_fn(lo: i64, hi: i64, member: impl Fn(i64) -> bool) -> Self {
        let hi = hi.max(lo);
        let len = hi - lo;
        let mut words = vec![0u64; word_count(len)];
        for rel in 0..len {
            if member(lo + rel) {
                words[(rel / WORD) as usize] |= 1 << (rel % WORD);
            }
        }
        Self::normalize(lo, len, words)
    }

    /// Word-level constructor: `chunk(s)` returns the membership bits of
    /// `[s, s + 64)` for each `s = lo + 64k` below `hi`; `[hi, ∞)` is added.
    pub fn from_chunks(lo: i64, hi: i64, mut chunk: impl FnMut(i64) -> u64) -> Self {
        let hi = hi.max(lo);
        let len = hi - lo;
        let n = word_count(len);
        let mut words = Vec::with_capacity(n);
        for k in 0..n as i64 {
            let start = lo + k * WORD;
            words.push(chunk(start) & tail_mask(hi - start));
        }
        Self::normalize(lo, len, words)
    }

    fn normalize(lo: i64, len: i64, words: Vec<u64>) -> Self {
        let first_set = words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i as i64 * WORD + w.trailing_zeros() as i64);
        let Some(p) = first_set.filter(|&p| p < len) else {
            return Self::interval_from(lo + len);
        };
        let mut last_clear = None;
        for (i, &w) in words.iter().enumerate().rev() {
            let valid = tail_mask(len - i as i64 * WORD);
            let clear = !w & valid;
            if clear != 0 {
                last_clear = Some(i as i64 * WORD + 63 - clear.leading_zeros() as i64);
                break;
            }
        }
        match last_clear {
            Some(q) if q > p => {
                let new_len = q + 1 - p;
                let words = (0..word_count(new_len) as i64)
                    .map(|k| extract(&words, len, p + k * WORD) & tail_mask(new_len - k * WORD))
                    .collect();
                ValueSet {
                    min: lo + p,
                    conductor: lo + q + 1,
                    words,
                }
            }
            _ => Self::interval_from(lo + p),
        }
    }

    pub fn least(&self) -> i64 {
        self.min
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    fn len(&self) -> i64 {
        self.conductor - self.min
    }

    pub fn contains(&self, z: i64) -> bool {
        if z < self.min {
            false
        } else if z >= self.conductor {
            true
        } else {
            let rel = z - self.min;
            self.words[(rel / WORD) as usize] >> (rel % WORD) & 1 == 1
        }
    }

    /// Membership bits of `[start, start + 64)`.
    pub fn chunk(&self, start: i64) -> u64 {
        extract(&self.words, self.len(), start - self.min)
    }

    pub fn shift(&self, s: i64) -> Self {
        ValueSet {
            min: self.min + s,
            conductor: self.conductor + s,
            words: self.words.clone(),
        }
    }

    /// Same set up to translation.
    pub fn same_shape(&self, other: &ValueSet) -> bool {
        self.len() == other.len() && self.words == other.words
    }

    /// Elements of `[min, conductor)` in increasing order.
    pub fn finite_part(&self) -> Vec<i64> {
        (self.min..self.conductor).filter(|&z| self.contains(z)).collect()
    }

    fn fold_window(lo: i64, hi: i64, mut f: impl FnMut(i64, u64) -> bool) -> bool {
        let mut start = lo;
        while start < hi {
            if !f(start, tail_mask(hi - start)) {
                return false;
            }
            start += WORD;
        }
        true
    }

    pub fn is_subset(&self, other: &ValueSet) -> bool {
        let hi = self.conductor.max(other.conductor);
        Self::fold_window(self.min, hi, |s, mask| {
            self.chunk(s) & !other.chunk(s) & mask == 0
        })
    }

    /// `|self \ other|`; always finite since both sets are cofinite.
    pub fn count_minus(&self, other: &ValueSet) -> usize {
        let hi = self.conductor.max(other.conductor);
        let mut total = 0usize;
        Self::fold_window(self.min, hi, |s, mask| {
            total += (self.chunk(s) & !other.chunk(s) & mask).count_ones() as usize;
            true
        });
        total
    }

    pub fn union(&self, other: &ValueSet) -> ValueSet {
        let lo = self.min.min(other.min);
        let hi = self.conductor.max(other.conductor);
        ValueSet::from_chunks(lo, hi, |s| self.chunk(s) | other.chunk(s))
    }

    pub fn intersection(&self, other: &ValueSet) -> ValueSet {
        let lo = self.min.max(other.min);
        let hi = self.conductor.max(other.conductor).max(lo);
        ValueSet::from_chunks(lo, hi, |s| self.chunk(s) & other.chunk(s))
    }
}
