//! Complete sequences of `Z_n`.
//!
//! A sequence `(γ_1, ..., γ_n)` is complete when it sums to zero and its
//! partial sums run through every residue. Elements are residues `0..n`.

use std::collections::BTreeSet;

use super::elementary::ElementaryGrading;
use super::structure::Grade;
use crate::error::{Error, Result};

/// Largest `n` for which complete sequences are enumerated.
pub const MAX_COMPLETE_SEQUENCE_LEN: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompleteSequence(Vec<usize>);

impl CompleteSequence {
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self> {
        if is_complete_sequence(n, &seq)? {
            Ok(CompleteSequence(seq))
        } else {
            Err(Error::Precondition(format!(
                "{seq:?} is not a complete sequence of Z_{n}"
            )))
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn is_complete_sequence(n: usize, seq: &[usize]) -> Result<bool> {
    if seq.len() != n {
        return Err(Error::WrongLength {
            expected: n,
            got: seq.len(),
        });
    }
    if seq.iter().any(|&g| g >= n) {
        return Err(Error::Precondition(format!(
            "{seq:?} has entries outside Z_{n}"
        )));
    }
    let mut sum = 0;
    let mut partial = BTreeSet::new();
    for &g in seq {
        sum = (sum + g) % n;
        partial.insert(sum);
    }
    Ok(sum == 0 && partial.len() == n)
}

/// Searches for matrix units `e_{i_1 j_1}, ..., e_{i_n j_n}` of `Z_n`-degrees
/// `γ_1, ..., γ_n` forming a closed chain through every row.
///
/// Returns 1-based `(i, j)` pairs, or `None` when no such chain exists
/// (including a sequence of the wrong length).
pub fn complete_sequence_unit_witness(n: usize, seq: &[usize]) -> Option<Vec<(usize, usize)>> {
    if seq.len() != n || seq.iter().any(|&g| g >= n) {
        return None;
    }
    let grading = ElementaryGrading::zn(n).ok()?;
    'start: for first in 1..=n {
        let mut units = Vec::with_capacity(n);
        let mut row = first;
        for &gamma in seq {
            let Some(col) = grading.step(row, &Grade::Elem(gamma)) else {
                continue 'start;
            };
            units.push((row, col));
            row = col;
        }
        let rows: BTreeSet<usize> = units.iter().map(|&(i, _)| i).collect();
        if rows.len() == n && row == first {
            return Some(units);
        }
    }
    None
}

/// All complete sequences of length `n`, in lexicographic order.
///
/// Built from orderings of the nonzero partial sums; each complete
/// sequence is the difference sequence of `(p_1, ..., p_{n-1}, 0)` for a
/// permutation `p` of `1..n`.
pub fn enumerate_complete_sequences(n: usize) -> Result<Vec<CompleteSequence>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if n > MAX_COMPLETE_SEQUENCE_LEN {
        return Err(Error::BoundExceeded(format!(
            "complete sequences of length {n} (limit {MAX_COMPLETE_SEQUENCE_LEN})"
        )));
    }
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (1..n).collect();
    loop {
        let mut prev = 0;
        let mut seq = Vec::with_capacity(n);
        for &p in perm.iter().chain(std::iter::once(&0)) {
            seq.push((p + n - prev) % n);
            prev = p;
        }
        out.push(CompleteSequence(seq));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_sequences(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|s| {
                    (0..n).map(move |g| {
                        let mut t = s.clone();
                        t.push(g);
                        t
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn definition_examples() {
        assert!(is_complete_sequence(2, &[1, 1]).unwrap());
        assert!(!is_complete_sequence(2, &[0, 0]).unwrap());
        assert!(!is_complete_sequence(3, &[1, 2, 0]).unwrap());
        assert!(matches!(
            is_complete_sequence(3, &[1, 2]),
            Err(Error::WrongLength {
                expected: 3,
                got: 2
            })
        ));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(
            complete_sequence_unit_witness(2, &[1, 1]),
            Some(vec![(1, 2), (2, 1)])
        );
        assert_eq!(complete_sequence_unit_witness(2, &[0, 0]), None);
        assert_eq!(
            complete_sequence_unit_witness(3, &[1, 1, 1]),
            Some(vec![(1, 2), (2, 3), (3, 1)])
        );
    }

    #[test]
    fn enumeration_matches_brute_force() {
        assert_eq!(
            enumerate_complete_sequences(1).unwrap(),
            vec![CompleteSequence(vec![0])]
        );
        assert_eq!(
            enumerate_complete_sequences(2).unwrap(),
            vec![CompleteSequence(vec![1, 1])]
        );
        for n in 1..=5 {
            let brute: Vec<CompleteSequence> = all_sequences(n)
                .into_iter()
                .filter(|s| is_complete_sequence(n, s).unwrap())
                .map(CompleteSequence)
                .collect();
            assert_eq!(enumerate_complete_sequences(n).unwrap(), brute, "n = {n}");
        }
        // Two of the 27 sequences of length 3: (1,1,1) and (2,2,2).
        assert_eq!(enumerate_complete_sequences(3).unwrap().len(), 2);
        assert!(enumerate_complete_sequences(MAX_COMPLETE_SEQUENCE_LEN + 1).is_err());
    }

    #[test]
    fn witness_agrees_with_definition() {
        for n in 1..=4 {
            for s in all_sequences(n) {
                let witness = complete_sequence_unit_witness(n, &s);
                assert_eq!(
                    witness.is_some(),
                    is_complete_sequence(n, &s).unwrap(),
                    "{s:?}"
                );
                if let Some(units) = witness {
                    let g = ElementaryGrading::zn(n).unwrap();
                    for (l, &(i, j)) in units.iter().enumerate() {
                        assert_eq!(g.degree_of_unit(i, j).unwrap(), Grade::Elem(s[l]));
                        if l + 1 < n {
                            assert_eq!(units[l + 1].0, j);
                        }
                    }
                    assert_eq!(units[0].0, units[n - 1].1);
                }
            }
        }
    }
}
