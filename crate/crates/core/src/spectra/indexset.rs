use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

/// A subset of the natural numbers that is eventually periodic: a periodic
/// pattern `residues mod modulus` corrected by finitely many exceptions.
///
/// Invariants: `residues ⊆ 0..modulus`, the period is minimal, every element
/// of `plus` lies outside the pattern and every element of `minus` inside it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IndexSet {
    modulus: usize,
    residues: BTreeSet<usize>,
    plus: BTreeSet<usize>,
    minus: BTreeSet<usize>,
}

impl IndexSet {
    pub fn empty() -> Self {
        IndexSet { modulus: 1, residues: BTreeSet::new(), plus: BTreeSet::new(), minus: BTreeSet::new() }
    }

    pub fn all() -> Self {
        IndexSet::cofinite(std::iter::empty())
    }

    pub fn finite(items: impl IntoIterator<Item = usize>) -> Self {
        IndexSet { modulus: 1, residues: BTreeSet::new(), plus: items.into_iter().collect(), minus: BTreeSet::new() }
    }

    pub fn singleton(j: usize) -> Self {
        IndexSet::finite([j])
    }

    pub fn cofinite(except: impl IntoIterator<Item = usize>) -> Self {
        IndexSet { modulus: 1, residues: [0].into(), plus: BTreeSet::new(), minus: except.into_iter().collect() }
    }

    /// `{ j : j mod modulus ∈ residues }`.
    pub fn periodic(modulus: usize, residues: impl IntoIterator<Item = usize>) -> Self {
        let m = modulus.max(1);
        let r = residues.into_iter().map(|r| r % m).collect();
        IndexSet { modulus: m, residues: r, plus: BTreeSet::new(), minus: BTreeSet::new() }.normalized()
    }

    fn pattern(&self, j: usize) -> bool {
        self.residues.contains(&(j % self.modulus))
    }

    pub fn contains(&self, j: usize) -> bool {
        if self.pattern(j) {
            !self.minus.contains(&j)
        } else {
            self.plus.contains(&j)
        }
    }

    pub fn is_infinite(&self) -> bool {
        !self.residues.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty() && self.plus.is_empty()
    }

    pub fn is_cofinite(&self) -> bool {
        self.modulus == 1 && !self.residues.is_empty()
    }

    /// Members when finite.
    pub fn finite_members(&self) -> Option<&BTreeSet<usize>> {
        self.is_finite().then_some(&self.plus)
    }

    /// Non-members when cofinite.
    pub fn cofinite_exceptions(&self) -> Option<&BTreeSet<usize>> {
        self.is_cofinite().then_some(&self.minus)
    }

    /// Ascending members; unbounded for infinite sets.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bound = if self.is_finite() { self.plus.last().map_or(0, |m| m + 1) } else { usize::MAX };
        (0..bound).filter(move |&j| self.contains(j))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn exception_bound(&self) -> usize {
        let a = self.plus.last().map_or(0, |m| m + 1);
        let b = self.minus.last().map_or(0, |m| m + 1);
        a.max(b)
    }

    fn normalized(mut self) -> Self {
        let m = self.modulus;
        let mut best = m;
        for d in 1..m {
            if m % d == 0 && (0..m).all(|r| self.residues.contains(&r) == self.residues.contains(&(r % d))) {
                best = d;
                break;
            }
        }
        if best != m {
            self.residues = self.residues.iter().copied().filter(|&r| r < best).collect();
            self.modulus = best;
        }
        if self.residues.is_empty() {
            self.modulus = 1;
        }
        let pat: Vec<usize> = self.plus.iter().copied().filter(|&j| self.pattern(j)).collect();
        for j in pat {
            self.plus.remove(&j);
        }
        let out: Vec<usize> = self.minus.iter().copied().filter(|&j| !self.pattern(j)).collect();
        for j in out {
            self.minus.remove(&j);
        }
        self
    }

    fn combine(&self, other: &IndexSet, f: impl Fn(bool, bool) -> bool) -> IndexSet {
        let m = self.modulus.lcm(&other.modulus);
        let residues: BTreeSet<usize> = (0..m).filter(|&r| f(self.pattern(r), other.pattern(r))).collect();
        let shell = IndexSet { modulus: m, residues, plus: BTreeSet::new(), minus: BTreeSet::new() };
        let bound = self.exception_bound().max(other.exception_bound());
        let mut plus = BTreeSet::new();
        let mut minus = BTreeSet::new();
        for j in 0..bound {
            let actual = f(self.contains(j), other.contains(j));
            match (shell.pattern(j), actual) {
                (false, true) => {
                    plus.insert(j);
                }
                (true, false) => {
                    minus.insert(j);
                }
                _ => {}
            }
        }
        IndexSet { plus, minus, ..shell }.normalized()
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> IndexSet {
        IndexSet::all().difference(self)
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        self.difference(other).is_empty()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<usize>| s.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
        if self.is_finite() {
            return write!(f, "{{{}}}", list(&self.plus));
        }
        if self.is_cofinite() {
            return if self.minus.is_empty() { write!(f, "all") } else { write!(f, "all except {{{}}}", list(&self.minus)) };
        }
        write!(f, "j mod {} in {{{}}}", self.modulus, list(&self.residues))?;
        if !self.plus.is_empty() {
            write!(f, " plus {{{}}}", list(&self.plus))?;
        }
        if !self.minus.is_empty() {
            write!(f, " except {{{}}}", list(&self.minus))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexSet({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_algebra_is_canonical() {
        let evens = IndexSet::periodic(2, [0]);
        let odds = IndexSet::periodic(2, [1]);
        assert_eq!(evens.union(&odds), IndexSet::all());
        assert_eq!(evens.complement(), odds);
        assert!(evens.intersection(&odds).is_empty());
        let a = IndexSet::cofinite([1, 2]);
        assert_eq!(a.complement(), IndexSet::finite([1, 2]));
        assert_eq!(IndexSet::periodic(4, [0, 2]), evens);
        let e = evens.union(&IndexSet::finite([3]));
        assert!(e.contains(3) && !e.contains(5) && e.contains(8));
        assert_eq!(e.to_string(), "j mod 2 in {0} plus {3}");
    }

    #[test]
    fn finite_iteration() {
        let s = IndexSet::finite([5, 1]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 5]);
        assert_eq!(IndexSet::cofinite([0, 1]).first(), Some(2));
    }
}
