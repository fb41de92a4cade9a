use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A non-empty proper subset of `{0, ..., n-1}`, members ascending.
///
/// Subsets order first by size, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    n: u8,
    members: Vec<u8>,
}

impl Subset {
    pub fn new(n: usize, members: impl IntoIterator<Item = u8>) -> Result<Self> {
        let mut members: Vec<u8> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if n > u8::MAX as usize {
            return Err(Error::InvalidSubset(format!("base set size {n} too large")));
        }
        if members.is_empty() {
            return Err(Error::InvalidSubset("empty".into()));
        }
        if let Some(&x) = members.iter().find(|&&x| x as usize >= n) {
            return Err(Error::InvalidSubset(format!(
                "{x} outside base set of size {n}"
            )));
        }
        if members.len() == n {
            return Err(Error::InvalidSubset("whole base set is not proper".into()));
        }
        Ok(Self {
            n: n as u8,
            members,
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn members(&self) -> &[u8] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u8) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Position of `x` within the sorted members.
    pub fn position(&self, x: u8) -> Option<usize> {
        self.members.binary_search(&x).ok()
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.n == other.n && self.members.iter().all(|&x| other.contains(x))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.members.len(), &self.members).cmp(&(
            other.n,
            other.members.len(),
            &other.members,
        ))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_sorts_and_validates() {
        let s = Subset::new(3, [2, 0, 2]).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        assert!(Subset::new(3, []).is_err());
        assert!(Subset::new(3, [0, 1, 2]).is_err());
        assert!(Subset::new(3, [3]).is_err());
    }

    #[test]
    fn ordering_is_size_then_lexicographic() {
        let mut v = [
            Subset::new(3, [1, 2]).unwrap(),
            Subset::new(3, [2]).unwrap(),
            Subset::new(3, [0, 1]).unwrap(),
            Subset::new(3, [0]).unwrap(),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{0}", "{2}", "{0,1}", "{1,2}"]);
    }
}
