use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest `n` for which `NC(n)` is enumerated.
pub const NC_BOUND: usize = 10;

/// A non-crossing partition of `{0, .., n-1}` (displayed 1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl NcPartition {
    /// Validates and normalizes a set partition; rejects crossings.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for b in &mut blocks {
            b.sort_unstable();
            if b.is_empty() {
                return Err(Error::InvalidArgument("empty block".into()));
            }
        }
        blocks.sort_by_key(|b| b[0]);
        for (bi, b) in blocks.iter().enumerate() {
            for &i in b {
                if i >= n || block_of[i] != usize::MAX {
                    return Err(Error::InvalidArgument(format!("{i} is out of range or repeated")));
                }
                block_of[i] = bi;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(Error::InvalidArgument("blocks do not cover 0..n".into()));
        }
        let p = NcPartition { n, blocks, block_of };
        if p.is_crossing() {
            return Err(Error::InvalidArgument(format!("{p} is crossing")));
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Blocks as increasing index lists, ordered by their minimum.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// The one-block partition `1_n`.
    pub fn is_full(&self) -> bool {
        self.blocks.len() == 1
    }

    fn is_crossing(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.block_of[a] != self.block_of[c] || self.block_of[a] == self.block_of[b] {
                        continue;
                    }
                    for d in c + 1..n {
                        if self.block_of[d] == self.block_of[b] {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

static CACHE: [OnceLock<Vec<NcPartition>>; NC_BOUND + 1] = [const { OnceLock::new() }; NC_BOUND + 1];

/// All non-crossing partitions of an `n`-element set, in restricted-growth
/// order. Memoized per `n`.
pub fn enumerate_nc(n: usize) -> Result<&'static [NcPartition]> {
    if n == 0 {
        return Err(Error::InvalidArgument("NC(0) is not enumerated".into()));
    }
    if n > NC_BOUND {
        return Err(Error::ArityBound { n, bound: NC_BOUND });
    }
    Ok(CACHE[n].get_or_init(|| generate(n)))
}

fn generate(n: usize) -> Vec<NcPartition> {
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    extend(n, 0, &mut blocks, &mut out);
    out
}

fn extend(n: usize, i: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<NcPartition>) {
    if i == n {
        let mut block_of = vec![0; n];
        for (bi, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = bi;
            }
        }
        out.push(NcPartition {
            n,
            blocks: blocks.clone(),
            block_of,
        });
        return;
    }
    for bi in 0..blocks.len() {
        if joining_crosses(blocks, bi, i) {
            continue;
        }
        blocks[bi].push(i);
        extend(n, i + 1, blocks, out);
        blocks[bi].pop();
    }
    blocks.push(vec![i]);
    extend(n, i + 1, blocks, out);
    blocks.pop();
}

/// Adding `i` to block `bi` crosses iff some other block has elements both
/// before and after the current last element of `bi`.
fn joining_crosses(blocks: &[Vec<usize>], bi: usize, i: usize) -> bool {
    let last = *blocks[bi].last().expect("blocks are nonempty");
    blocks
        .iter()
        .enumerate()
        .any(|(ci, c)| ci != bi && c.iter().any(|&x| x > last && x < i) && c.iter().any(|&x| x < last))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: all set partitions via restricted growth strings,
    /// filtered by the four-index crossing test.
    fn brute_force_count(n: usize) -> usize {
        fn rec(n: usize, rgs: &mut Vec<usize>, count: &mut usize) {
            if rgs.len() == n {
                let crossing = (0..n).any(|a| {
                    (a + 1..n).any(|b| {
                        (b + 1..n).any(|c| (c + 1..n).any(|d| rgs[a] == rgs[c] && rgs[b] == rgs[d] && rgs[a] != rgs[b]))
                    })
                });
                if !crossing {
                    *count += 1;
                }
                return;
            }
            let max = rgs.iter().copied().max().map_or(0, |m| m + 1);
            for k in 0..=max {
                rgs.push(k);
                rec(n, rgs, count);
                rgs.pop();
            }
        }
        let mut count = 0;
        rec(n, &mut Vec::new(), &mut count);
        count
    }

    #[test]
    fn small_examples() {
        assert_eq!(enumerate_nc(1).unwrap().len(), 1);
        let nc3: Vec<String> = enumerate_nc(3).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(nc3, ["{1,2,3}", "{1,2}{3}", "{1,3}{2}", "{1}{2,3}", "{1}{2}{3}"]);
        assert_eq!(enumerate_nc(4).unwrap().len(), 14);
        assert!(!enumerate_nc(4).unwrap().iter().any(|p| p.to_string() == "{1,3}{2,4}"));
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=8 {
            assert_eq!(enumerate_nc(n).unwrap().len(), brute_force_count(n), "n = {n}");
        }
    }

    #[test]
    fn bound_and_zero() {
        assert_eq!(
            enumerate_nc(11).unwrap_err(),
            Error::ArityBound { n: 11, bound: NC_BOUND }
        );
        assert!(enumerate_nc(0).is_err());
        assert_eq!(enumerate_nc(10).unwrap().len(), 16796);
    }

    #[test]
    fn blocks_ordered_and_first_is_full() {
        for n in 1..=6 {
            let all = enumerate_nc(n).unwrap();
            assert!(all[0].is_full());
            assert_eq!(all.iter().filter(|p| p.is_full()).count(), 1);
            for p in all {
                assert!(p.blocks().windows(2).all(|w| w[0][0] < w[1][0]));
                assert!(NcPartition::new(n, p.blocks().to_vec()).is_ok());
            }
        }
    }

    #[test]
    fn constructor_rejects_crossing() {
        assert!(NcPartition::new(4, vec![vec![0, 2], vec![1, 3]]).is_err());
        assert!(NcPartition::new(3, vec![vec![0, 1]]).is_err());
        let p = NcPartition::new(4, vec![vec![3, 0], vec![2, 1]]).unwrap();
        assert_eq!(p.to_string(), "{1,4}{2,3}");
    }
}
