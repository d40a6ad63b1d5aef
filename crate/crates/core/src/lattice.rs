//! Join and meet tables for posets that happen to be lattices.

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

#[derive(Debug, Clone)]
pub struct FiniteLattice<'a> {
    poset: &'a FinitePoset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

impl<'a> FiniteLattice<'a> {
    /// Fails with the first pair (in carrier order) lacking a join or meet.
    pub fn new(poset: &'a FinitePoset) -> Result<Self> {
        let n = poset.len();
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for x in 0..n {
            for y in x..n {
                let j = poset.join(x, y).ok_or_else(|| {
                    Error::NotALattice(poset.name(x).into(), poset.name(y).into(), "join")
                })?;
                let m = poset.meet(x, y).ok_or_else(|| {
                    Error::NotALattice(poset.name(x).into(), poset.name(y).into(), "meet")
                })?;
                join[x * n + y] = j;
                join[y * n + x] = j;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }
        if n == 0 {
            return Err(Error::MissingBounds("bottom"));
        }
        Ok(FiniteLattice { poset, join, meet })
    }

    pub fn poset(&self) -> &'a FinitePoset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.poset.leq(x, y)
    }

    pub fn bottom(&self) -> usize {
        self.poset
            .bottom()
            .expect("finite nonempty lattices are bounded")
    }

    pub fn top(&self) -> usize {
        self.poset
            .top()
            .expect("finite nonempty lattices are bounded")
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.bottom(), |acc, x| self.join(acc, x))
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items
            .into_iter()
            .fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// First `(a, b, c)` with `a <= c` and `a ∨ (b ∧ c) != (a ∨ b) ∧ c`.
    pub fn modular_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for c in 0..n {
                if !self.leq(a, c) {
                    continue;
                }
                for b in 0..n {
                    if self.join(a, self.meet(b, c)) != self.meet(self.join(a, b), c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn bowtie_is_rejected() {
        let p = corpus::poset("bowtie").unwrap();
        assert!(matches!(
            FiniteLattice::new(&p),
            Err(Error::NotALattice(..))
        ));
    }

    #[test]
    fn n5_is_not_modular_but_m3_is() {
        let n5 = corpus::poset("n5").unwrap();
        assert!(FiniteLattice::new(&n5)
            .unwrap()
            .modular_violation()
            .is_some());
        let m3 = corpus::poset("m3").unwrap();
        assert_eq!(FiniteLattice::new(&m3).unwrap().modular_violation(), None);
    }

    #[test]
    fn tables_are_commutative_and_absorptive() {
        let p = corpus::poset("mo3").unwrap();
        let l = FiniteLattice::new(&p).unwrap();
        for x in 0..l.len() {
            for y in 0..l.len() {
                assert_eq!(l.join(x, y), l.join(y, x));
                assert_eq!(l.join(x, l.meet(x, y)), x);
                assert_eq!(l.meet(x, l.join(x, y)), x);
            }
        }
    }
}
