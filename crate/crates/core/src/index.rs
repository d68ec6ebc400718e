//! Degree vectors and multi-dimensional summation ranges.

use crate::error::{Error, Result};

/// A degree vector n = (n_1, ..., n_p) with total N and tail sums
/// N_j = n_j + n_{j+1} + ... + n_p (1-based j, as `tail(j)` with j in 1..=p+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndex {
    entries: Vec<usize>,
}

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParams("degree vector must be nonempty".into()));
        }
        Ok(MultiIndex { entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: usize) -> usize {
        self.entries[k]
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Total degree N.
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Tail sum N_j = sum_{k >= j} n_k for 1-based j; N_{p+1} = 0.
    pub fn tail(&self, j: usize) -> usize {
        assert!(j >= 1 && j <= self.entries.len() + 1);
        self.entries[j - 1..].iter().sum()
    }

    /// Head sum n_1 + ... + n_j (j entries; j = 0 gives 0).
    pub fn head(&self, j: usize) -> usize {
        self.entries[..j].iter().sum()
    }
}

impl std::fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over all multi-indices j with 0 <= j_k <= bounds[k], in
/// odometer order (last coordinate fastest).
pub struct MultiRange {
    bounds: Vec<usize>,
    state: Option<Vec<usize>>,
}

pub fn multi_range(bounds: &[usize]) -> MultiRange {
    MultiRange {
        bounds: bounds.to_vec(),
        state: Some(vec![0; bounds.len()]),
    }
}

impl Iterator for MultiRange {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let state = self.state.as_mut()?;
        let item = state.clone();
        // advance odometer
        let mut k = state.len();
        loop {
            if k == 0 {
                self.state = None;
                break;
            }
            k -= 1;
            if state[k] < self.bounds[k] {
                state[k] += 1;
                break;
            }
            state[k] = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tails_and_totals() {
        let n = MultiIndex::new(vec![2, 0, 3]).unwrap();
        assert_eq!(n.total(), 5);
        assert_eq!(n.tail(1), 5);
        assert_eq!(n.tail(2), 3);
        assert_eq!(n.tail(3), 3);
        assert_eq!(n.tail(4), 0);
        assert_eq!(n.head(0), 0);
        assert_eq!(n.head(2), 2);
    }

    #[test]
    fn odometer_covers_product_space() {
        let all: Vec<_> = multi_range(&[1, 2]).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 0],
                vec![1, 1],
                vec![1, 2]
            ]
        );
        assert_eq!(multi_range(&[3]).count(), 4);
        assert_eq!(multi_range(&[]).count(), 1);
    }
}
