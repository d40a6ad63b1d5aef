//! Dedekind-MacNeille completion as the system of LU-closed sets.
//!
//! Closed sets are enumerated in lectic order with NextClosure, so each one
//! is produced exactly once and non-closed subsets are never stored. The
//! position of a closed set in that order is its index everywhere else.

use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::report::CheckReport;

pub const DEFAULT_MAX_CLOSED_SETS: usize = 100_000;

/// `LU(s)`.
pub fn closure(p: &FinitePoset, s: &ElementSet) -> ElementSet {
    p.lower_cone(&p.upper_cone(s))
}

/// The completion of a poset: closed sets, inclusion, embedding and, when
/// the poset has an antitone involution, the induced one.
#[derive(Debug, Clone)]
pub struct DmLattice {
    poset: FinitePoset,
    closed: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    /// `above[i]` holds every `j` with `closed[i] ⊆ closed[j]`.
    above: Vec<ElementSet>,
    embed: Vec<usize>,
    involution: Option<Vec<usize>>,
}

pub fn complete(p: &FinitePoset) -> Result<DmLattice> {
    complete_with_cap(p, DEFAULT_MAX_CLOSED_SETS)
}

pub fn complete_with_cap(p: &FinitePoset, cap: usize) -> Result<DmLattice> {
    let closed = next_closure_all(p, cap)?;
    let k = closed.len();
    let index: HashMap<ElementSet, usize> = closed
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let above: Vec<ElementSet> = closed
        .iter()
        .map(|x| ElementSet::from_iter_in(k, (0..k).filter(|&j| x.is_subset(&closed[j]))))
        .collect();
    let embed: Vec<usize> = (0..p.len()).map(|x| index[p.down(x)]).collect();
    let mut dm = DmLattice {
        poset: p.clone(),
        closed,
        index,
        above,
        embed,
        involution: None,
    };
    if p.involution().is_some() && p.is_antitone_involution()?.holds {
        dm.involution = Some(dm.build_involution()?);
    }
    Ok(dm)
}

/// Lectic enumeration: starting from `LU(∅)`, the successor of `A` is
/// `LU((A ∩ {0..i-1}) ∪ {i})` for the largest `i ∉ A` whose closure adds no
/// element below `i`.
fn next_closure_all(p: &FinitePoset, cap: usize) -> Result<Vec<ElementSet>> {
    let n = p.len();
    let mut current = closure(p, &p.empty_set());
    let mut out = vec![current.clone()];
    loop {
        if current.is_full() {
            return Ok(out);
        }
        let mut next = None;
        let mut prefix = current.clone();
        for i in (0..n).rev() {
            if current.contains(i) {
                prefix.remove(i);
                continue;
            }
            let mut seed = prefix.clone();
            seed.insert(i);
            let candidate = closure(p, &seed);
            if candidate
                .difference(&current)
                .first()
                .is_some_and(|first| first >= i)
            {
                next = Some(candidate);
                break;
            }
        }
        current = next.expect("the full carrier is always reachable");
        if out.len() == cap {
            return Err(Error::SizeLimitExceeded(cap));
        }
        out.push(current.clone());
    }
}

impl DmLattice {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.closed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.closed.is_empty()
    }

    pub fn closed_sets(&self) -> &[ElementSet] {
        &self.closed
    }

    pub fn set(&self, i: usize) -> &ElementSet {
        &self.closed[i]
    }

    pub fn index_of(&self, s: &ElementSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Index of `L(x)`.
    pub fn embed(&self, x: usize) -> usize {
        self.embed[x]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embed
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.closed.len() - 1
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    pub fn require_involution(&self) -> Result<&[usize]> {
        self.involution().ok_or(Error::MissingInvolution)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.index[&self.closed[i].intersection(&self.closed[j])]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.index[&closure(&self.poset, &self.closed[i].union(&self.closed[j]))]
    }

    pub fn join_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        let mut acc = self.poset.empty_set();
        for i in items {
            acc.union_with(&self.closed[i]);
        }
        self.index[&closure(&self.poset, &acc)]
    }

    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        let mut acc = self.poset.full_set();
        for i in items {
            acc.intersect_with(&self.closed[i]);
        }
        self.index[&acc]
    }

    /// `X* = L({x' : x ∈ X})` for a closed set given as a set of elements.
    pub fn star_set(&self, x: &ElementSet) -> Result<ElementSet> {
        Ok(self.poset.lower_cone(&self.poset.image(x)?))
    }

    /// Display name: the element itself for `L(x)`, otherwise the maximal
    /// elements of the set in braces.
    pub fn name(&self, i: usize) -> String {
        let s = &self.closed[i];
        match self.poset.maximum(s) {
            Some(x) => self.poset.name(x).to_string(),
            None => {
                let max = ElementSet::from_iter_in(self.poset.len(), self.poset.maximal(s));
                self.poset.render_set(&max)
            }
        }
    }

    /// The completion as a poset on closed-set indices.
    pub fn to_poset(&self) -> FinitePoset {
        let names = (0..self.len()).map(|i| self.name(i)).collect();
        FinitePoset::from_leq(names, |i, j| self.leq(i, j), self.involution.clone())
            .expect("inclusion of distinct closed sets is a partial order")
    }

    fn build_involution(&self) -> Result<Vec<usize>> {
        let p = &self.poset;
        let inv = p.require_involution()?;
        let mut map = Vec::with_capacity(self.len());
        for x in &self.closed {
            let star = self.star_set(x)?;
            let j = self.index.get(&star).copied().ok_or_else(|| {
                Error::InvariantViolated(format!("X* of {} is not closed", p.render_set(x)))
            })?;
            map.push(j);
        }
        for i in 0..self.len() {
            if map[map[i]] != i {
                return Err(Error::InvariantViolated(format!(
                    "X** != X at {}",
                    self.name(i)
                )));
            }
            for j in &self.above[i] {
                if !self.leq(map[j], map[i]) {
                    return Err(Error::InvariantViolated(format!(
                        "induced involution is not antitone at {} <= {}",
                        self.name(i),
                        self.name(j)
                    )));
                }
            }
        }
        for x in 0..p.len() {
            if map[self.embed[x]] != self.embed[inv[x]] {
                return Err(Error::InvariantViolated(format!(
                    "L({x})* != L({x}')",
                    x = p.name(x)
                )));
            }
        }
        Ok(map)
    }
}

/// Every closed set is the join of the embedded elements below it and the
/// meet of the embedded elements above it.
pub fn check_join_meet_density(p: &FinitePoset, d: &DmLattice) -> CheckReport {
    const PROPERTY: &str = "density";
    for i in 0..d.len() {
        let below = (0..p.len()).map(|x| d.embed(x)).filter(|&e| d.leq(e, i));
        if d.join_all(below) != i {
            return CheckReport::fail(
                PROPERTY,
                vec![d.name(i)],
                "not the join of embedded elements below it",
            );
        }
        let above = (0..p.len()).map(|x| d.embed(x)).filter(|&e| d.leq(i, e));
        if d.meet_all(above) != i {
            return CheckReport::fail(
                PROPERTY,
                vec![d.name(i)],
                "not the meet of embedded elements above it",
            );
        }
    }
    CheckReport::pass(PROPERTY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn brute_closed_sets(p: &FinitePoset) -> BTreeSet<ElementSet> {
        (0u64..1 << p.len())
            .map(|mask| {
                let a = ElementSet::from_mask(p.len(), mask);
                p.lower_cone(&a)
            })
            .collect()
    }

    #[test]
    fn chain_completion_is_itself() {
        let p = corpus::poset("chain2").unwrap();
        let d = complete(&p).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.to_poset(), p);
    }

    #[test]
    fn empty_closure_is_bottom() {
        let p = corpus::fig3();
        assert_eq!(closure(&p, &p.empty_set()), p.set_of(&["0"]).unwrap());
    }

    #[test]
    fn fig3_completion_contains_the_gap() {
        let p = corpus::fig3();
        let d = complete(&p).unwrap();
        assert!(d.len() > 18);
        let vz = p.set_of(&["v", "z"]).unwrap();
        let gap = p.set_of(&["0", "v", "z"]).unwrap();
        assert_eq!(closure(&p, &vz), gap);
        let (v, z) = (p.index_of("v").unwrap(), p.index_of("z").unwrap());
        assert_eq!(d.set(d.join(d.embed(v), d.embed(z))), &gap);
        let g = d.index_of(&gap).unwrap();
        let inv = d.involution().unwrap();
        assert_eq!(inv[inv[g]], g);
        assert_eq!(
            d.set(inv[g]),
            &p.lower_cone(&p.set_of(&["v'", "z'"]).unwrap())
        );
    }

    #[test]
    fn lectic_enumeration_matches_brute_force() {
        for name in [
            "chain3", "ba4", "ba8", "mo2", "mo3", "o6", "m3", "n5", "bowtie",
        ] {
            let p = corpus::poset(name).unwrap();
            let d = complete(&p).unwrap();
            let listed: BTreeSet<ElementSet> = d.closed_sets().iter().cloned().collect();
            assert_eq!(listed.len(), d.len(), "{name}: duplicates");
            assert_eq!(listed, brute_closed_sets(&p), "{name}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let p = corpus::fig3();
        assert_eq!(
            complete_with_cap(&p, 5).unwrap_err(),
            Error::SizeLimitExceeded(5)
        );
    }

    #[test]
    fn bounds_swap_and_embedding_extends() {
        for name in corpus::POSET_NAMES.iter().chain(corpus::GREECHIE_NAMES) {
            let p = corpus::poset(name).unwrap();
            let d = complete(&p).unwrap();
            assert!(check_join_meet_density(&p, &d).holds, "{name}");
            if let Some(inv) = d.involution() {
                assert_eq!(inv[d.bottom()], d.top());
                let pinv = p.involution().unwrap();
                for x in 0..p.len() {
                    assert_eq!(inv[d.embed(x)], d.embed(pinv[x]));
                }
            }
        }
    }

    #[test]
    fn embedding_preserves_existing_joins() {
        let p = corpus::fig2();
        let d = complete(&p).unwrap();
        for x in 0..p.len() {
            for y in 0..p.len() {
                if let Some(j) = p.join(x, y) {
                    assert_eq!(d.join(d.embed(x), d.embed(y)), d.embed(j));
                }
                if let Some(m) = p.meet(x, y) {
                    assert_eq!(d.meet(d.embed(x), d.embed(y)), d.embed(m));
                }
            }
        }
    }

    fn arb_set(n: usize) -> impl Strategy<Value = ElementSet> {
        proptest::collection::vec(any::<bool>(), n)
            .prop_map(move |bits| ElementSet::from_iter_in(n, (0..n).filter(|&i| bits[i])))
    }

    fn sparse_set(n: usize) -> impl Strategy<Value = ElementSet> {
        proptest::collection::vec(proptest::bool::weighted(0.2), n)
            .prop_map(move |bits| ElementSet::from_iter_in(n, (0..n).filter(|&i| bits[i])))
    }

    proptest! {
        #[test]
        fn closure_operator_laws(a in arb_set(18), b in arb_set(18)) {
            let p = corpus::fig3();
            let ca = closure(&p, &a);
            prop_assert!(a.is_subset(&ca));
            prop_assert_eq!(closure(&p, &ca), ca.clone());
            let ab = a.union(&b);
            prop_assert!(ca.is_subset(&closure(&p, &ab)));
        }

        /// For `B <= C`, the join of `B` equals the meet of `C` in the
        /// completion exactly when `L(C) <= U(B)` elementwise.
        #[test]
        fn join_meet_gap_criterion(b in sparse_set(14), c in sparse_set(14)) {
            let p = corpus::fig2();
            let b = b.intersection(&p.lower_cone(&c));
            let d = complete(&p).unwrap();
            let join_b = d.join_all(b.iter().map(|x| d.embed(x)));
            let meet_c = d.meet_all(c.iter().map(|y| d.embed(y)));
            let lc = p.lower_cone(&c);
            let ub = p.upper_cone(&b);
            let criterion = lc.iter().all(|x| ub.iter().all(|y| p.leq(x, y)));
            prop_assert_eq!(join_b == meet_c, criterion);
        }
    }
}
