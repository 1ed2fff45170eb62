//! Size limits for the brute-force generators.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("size {size} exceeds the {family} oracle bound {bound}")]
pub struct SizeTooLargeForOracle {
    pub family: &'static str,
    pub size: usize,
    pub bound: usize,
}

/// Largest object size each brute-force generator accepts.
///
/// Sizes are object sizes: a symmetric tree-like tableau of size `2n+1` is
/// checked against `tlt_sym` as `2n+1`, a symmetric alternative tableau of
/// size `2n` against `at_sym` as `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub tlt: usize,
    pub tlt_sym: usize,
    pub at: usize,
    pub at_star: usize,
    pub at_sym: usize,
    pub at_b: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            tlt: 5,
            tlt_sym: 9,
            at: 5,
            at_star: 5,
            at_sym: 10,
            at_b: 5,
        }
    }
}

pub(crate) fn check(family: &'static str, size: usize, bound: usize) -> Result<(), SizeTooLargeForOracle> {
    if size > bound {
        Err(SizeTooLargeForOracle { family, size, bound })
    } else {
        Ok(())
    }
}

/// All words of length `len` over `{S, W}`, optionally pinned to start with
/// `S` and end with `W`, in lexicographic order.
pub(crate) fn border_words(len: usize, pinned_ends: bool) -> Vec<Vec<crate::diagrams::Step>> {
    use crate::diagrams::Step;
    if pinned_ends && len < 2 {
        return Vec::new();
    }
    let free = if pinned_ends { len - 2 } else { len };
    let mut words = Vec::with_capacity(1 << free);
    for mask in 0u64..(1u64 << free) {
        let mut word = Vec::with_capacity(len);
        if pinned_ends {
            word.push(Step::S);
        }
        for bit in (0..free).rev() {
            word.push(if mask >> bit & 1 == 1 { Step::W } else { Step::S });
        }
        if pinned_ends {
            word.push(Step::W);
        }
        words.push(word);
    }
    words
}
