//! Finite bounded posets with an optional antitone involution.
//!
//! The order is stored twice as packed rows: `down[x]` is the principal
//! lower cone `L(x)` and `up[x]` the principal upper cone `U(x)`. Every cone
//! query is an intersection of such rows.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::report::CheckReport;

/// How the relation passed to [`FinitePoset::build`] is to be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationMode {
    /// Cover pairs; the order is their reflexive-transitive closure.
    Covers,
    /// The complete order relation; reflexive pairs may be omitted.
    Full,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    down: Vec<ElementSet>,
    up: Vec<ElementSet>,
    bottom: Option<usize>,
    top: Option<usize>,
    involution: Option<Vec<usize>>,
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinitePoset")
            .field("names", &self.names)
            .field("covers", &self.covers_named())
            .field("involution", &self.involution)
            .finish()
    }
}

impl FinitePoset {
    /// Builds a poset from named elements and a relation given by name.
    pub fn build<S: AsRef<str>>(
        names: &[S],
        relation: &[(S, S)],
        mode: RelationMode,
        involution: Option<&[(S, S)]>,
    ) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let index = name_index(&names)?;
        let n = names.len();
        let lookup = |s: &S| -> Result<usize> {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let mut pairs = Vec::with_capacity(relation.len());
        for (a, b) in relation {
            pairs.push((lookup(a)?, lookup(b)?));
        }
        let inv = match involution {
            Some(list) => {
                let mut idx = Vec::with_capacity(list.len());
                for (a, b) in list {
                    idx.push((lookup(a)?, lookup(b)?));
                }
                Some(involution_from_pairs(&names, &idx)?)
            }
            None => None,
        };
        let up = match mode {
            RelationMode::Covers => transitive_closure(n, &pairs),
            RelationMode::Full => {
                let mut up: Vec<ElementSet> = (0..n).map(|i| ElementSet::singleton(n, i)).collect();
                for &(a, b) in &pairs {
                    up[a].insert(b);
                }
                up
            }
        };
        Self::from_up_sets(names, up, inv)
    }

    /// Builds a poset from index-level data; `leq(x, y)` decides `x <= y`.
    pub fn from_leq(
        names: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        involution: Option<Vec<usize>>,
    ) -> Result<Self> {
        let n = names.len();
        let up = (0..n)
            .map(|x| ElementSet::from_iter_in(n, (0..n).filter(|&y| x == y || leq(x, y))))
            .collect();
        Self::from_up_sets(names, up, involution)
    }

    fn from_up_sets(
        names: Vec<String>,
        up: Vec<ElementSet>,
        involution: Option<Vec<usize>>,
    ) -> Result<Self> {
        let index = name_index(&names)?;
        let n = names.len();
        let mut down = vec![ElementSet::empty(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            // antisymmetry: anything both above and below x must be x
            let both = up[x].intersection(&down[x]);
            if let Some(y) = both.iter().find(|&y| y != x) {
                return Err(Error::Cycle(names[x].clone(), names[y].clone()));
            }
            for y in &up[x] {
                if let Some(z) = up[y].first_not_in(&up[x]) {
                    return Err(Error::NotTransitive(
                        names[x].clone(),
                        names[y].clone(),
                        names[z].clone(),
                    ));
                }
            }
        }
        if let Some(inv) = &involution {
            check_bijection(&names, inv)?;
        }
        let bottom = (0..n).find(|&x| up[x].is_full());
        let top = (0..n).find(|&x| down[x].is_full());
        Ok(FinitePoset {
            names,
            index,
            down,
            up,
            bottom,
            top,
            involution,
        })
    }

    /// Same order, different (or no) involution.
    pub fn with_involution(&self, involution: Option<Vec<usize>>) -> Result<Self> {
        if let Some(inv) = &involution {
            check_bijection(&self.names, inv)?;
        }
        let mut p = self.clone();
        p.involution = involution;
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Looks up several names at once, failing on the first unknown one.
    pub fn indices<S: AsRef<str>>(&self, names: &[S]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownElement(s.as_ref().into()))
            })
            .collect()
    }

    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElementSet> {
        Ok(ElementSet::from_iter_in(self.len(), self.indices(names)?))
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// `L(x)`.
    #[inline]
    pub fn down(&self, x: usize) -> &ElementSet {
        &self.down[x]
    }

    /// `U(x)`.
    #[inline]
    pub fn up(&self, x: usize) -> &ElementSet {
        &self.up[x]
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn require_bottom(&self) -> Result<usize> {
        self.bottom.ok_or(Error::MissingBounds("least element"))
    }

    pub fn require_top(&self) -> Result<usize> {
        self.top.ok_or(Error::MissingBounds("greatest element"))
    }

    pub fn involution(&self) -> Option<&[usize]> {
        self.involution.as_deref()
    }

    pub fn require_involution(&self) -> Result<&[usize]> {
        self.involution.as_deref().ok_or(Error::MissingInvolution)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.len())
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    /// `L(M)`: every element below all of `m`. `L(∅)` is the whole carrier.
    pub fn lower_cone(&self, m: &ElementSet) -> ElementSet {
        let mut out = self.full_set();
        for y in m {
            out.intersect_with(&self.down[y]);
        }
        out
    }

    /// `U(M)`: every element above all of `m`. `U(∅)` is the whole carrier.
    pub fn upper_cone(&self, m: &ElementSet) -> ElementSet {
        let mut out = self.full_set();
        for y in m {
            out.intersect_with(&self.up[y]);
        }
        out
    }

    /// `L(x, y)`.
    pub fn lower_pair(&self, x: usize, y: usize) -> ElementSet {
        self.down[x].intersection(&self.down[y])
    }

    /// `U(x, y)`.
    pub fn upper_pair(&self, x: usize, y: usize) -> ElementSet {
        self.up[x].intersection(&self.up[y])
    }

    /// Least element of `s`, if `s` has one.
    pub fn minimum(&self, s: &ElementSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(&self.up[m]))
    }

    /// Greatest element of `s`, if `s` has one.
    pub fn maximum(&self, s: &ElementSet) -> Option<usize> {
        s.iter().find(|&m| s.is_subset(&self.down[m]))
    }

    /// Supremum of `s` in the poset, if it exists.
    pub fn join_of(&self, s: &ElementSet) -> Option<usize> {
        self.minimum(&self.upper_cone(s))
    }

    /// Infimum of `s` in the poset, if it exists.
    pub fn meet_of(&self, s: &ElementSet) -> Option<usize> {
        self.maximum(&self.lower_cone(s))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.minimum(&self.upper_pair(x, y))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.maximum(&self.lower_pair(x, y))
    }

    /// Elementwise image of `s` under the involution.
    pub fn image(&self, s: &ElementSet) -> Result<ElementSet> {
        let inv = self.require_involution()?;
        Ok(s.map(|x| inv[x]))
    }

    /// Maximal elements of `s`.
    pub fn maximal(&self, s: &ElementSet) -> Vec<usize> {
        s.iter()
            .filter(|&x| self.up[x].intersection(s).len() == 1)
            .collect()
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in &self.up[x] {
                if y == x {
                    continue;
                }
                let mut between = self.up[x].intersection(&self.down[y]);
                between.remove(x);
                between.remove(y);
                if between.is_empty() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn covers_named(&self) -> Vec<(String, String)> {
        self.covers()
            .into_iter()
            .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
            .collect()
    }

    /// Renders a set as `{a,b,c}` in carrier order.
    pub fn render_set(&self, s: &ElementSet) -> String {
        let parts: Vec<&str> = s.iter().map(|x| self.names[x].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }

    // ---------------------------------------------------------------------
    // involution checks

    /// `x <= y ⇒ y' <= x'` and `x'' = x`.
    pub fn is_antitone_involution(&self) -> Result<CheckReport> {
        let inv = self.require_involution()?;
        const NAME: &str = "antitone-involution";
        for x in 0..self.len() {
            if inv[inv[x]] != x {
                return Ok(CheckReport::fail(
                    NAME,
                    vec![self.names[x].clone()],
                    format!("x'' = {} differs from x", self.names[inv[inv[x]]]),
                ));
            }
        }
        for x in 0..self.len() {
            for y in &self.up[x] {
                if !self.leq(inv[y], inv[x]) {
                    return Ok(CheckReport::fail(
                        NAME,
                        vec![self.names[x].clone(), self.names[y].clone()],
                        "x <= y but not y' <= x'",
                    ));
                }
            }
        }
        Ok(CheckReport::pass(NAME))
    }

    /// Antitone involution with `L(x, x') = {0}` and `U(x, x') = {1}`.
    pub fn is_complementation(&self) -> Result<CheckReport> {
        let inv = self.require_involution()?;
        let bottom = self.require_bottom()?;
        let top = self.require_top()?;
        const NAME: &str = "complementation";
        let base = self.is_antitone_involution()?;
        if !base.holds {
            return Ok(CheckReport {
                property: NAME.into(),
                ..base
            });
        }
        let zero = ElementSet::singleton(self.len(), bottom);
        let one = ElementSet::singleton(self.len(), top);
        for x in 0..self.len() {
            let l = self.lower_pair(x, inv[x]);
            if l != zero {
                return Ok(CheckReport::fail(
                    NAME,
                    vec![self.names[x].clone()],
                    format!("L(x,x') = {}", self.render_set(&l)),
                ));
            }
            let u = self.upper_pair(x, inv[x]);
            if u != one {
                return Ok(CheckReport::fail(
                    NAME,
                    vec![self.names[x].clone()],
                    format!("U(x,x') = {}", self.render_set(&u)),
                ));
            }
        }
        Ok(CheckReport::pass(NAME))
    }

    /// Errors with [`Error::NotComplemented`] unless the involution is a
    /// complementation.
    pub fn require_complemented(&self) -> Result<&[usize]> {
        let r = self.is_complementation()?;
        if !r.holds {
            return Err(Error::NotComplemented(r.witness.join(",")));
        }
        self.require_involution()
    }

    /// `x ⊥ y` iff `x <= y'`.
    pub fn orthogonal_pair(&self, x: usize, y: usize) -> Result<bool> {
        let inv = self.require_involution()?;
        Ok(self.leq(x, inv[y]))
    }

    /// True iff `s <= t'` for all distinct `s, t` in the set.
    pub fn is_orthogonal(&self, s: &ElementSet) -> Result<bool> {
        let inv = self.require_involution()?;
        let members = s.to_vec();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !self.leq(a, inv[b]) || !self.leq(b, inv[a]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Elements `a` with `0 < a` and nothing strictly between.
    pub fn atoms(&self) -> Result<ElementSet> {
        let bottom = self.require_bottom()?;
        let mut out = self.empty_set();
        for (a, b) in self.covers() {
            if a == bottom {
                out.insert(b);
            }
        }
        Ok(out)
    }

    // ---------------------------------------------------------------------
    // structural predicates

    pub fn is_lattice(&self) -> CheckReport {
        const NAME: &str = "lattice";
        for x in 0..self.len() {
            for y in x + 1..self.len() {
                if self.join(x, y).is_none() {
                    return CheckReport::fail(NAME, self.pair_names(x, y), "no join");
                }
                if self.meet(x, y).is_none() {
                    return CheckReport::fail(NAME, self.pair_names(x, y), "no meet");
                }
            }
        }
        CheckReport::pass(NAME)
    }

    /// Every `b > 0` has an atom below it.
    pub fn is_atomic(&self) -> Result<CheckReport> {
        let bottom = self.require_bottom()?;
        let atoms = self.atoms()?;
        for b in 0..self.len() {
            if b != bottom && atoms.is_disjoint(&self.down[b]) {
                return Ok(CheckReport::fail(
                    "atomic",
                    vec![self.names[b].clone()],
                    "no atom below",
                ));
            }
        }
        Ok(CheckReport::pass("atomic"))
    }

    /// Every element is the join of the atoms below it.
    pub fn is_atomistic(&self) -> Result<CheckReport> {
        let atoms = self.atoms()?;
        for x in 0..self.len() {
            let below = atoms.intersection(&self.down[x]);
            if self.join_of(&below) != Some(x) {
                return Ok(CheckReport::fail(
                    "atomistic",
                    vec![self.names[x].clone()],
                    format!("atoms below: {}", self.render_set(&below)),
                ));
            }
        }
        Ok(CheckReport::pass("atomistic"))
    }

    /// Calls `visit` on every orthogonal set of nonzero elements (including
    /// the empty set) until it returns `false`.
    pub fn for_each_orthogonal_set(
        &self,
        mut visit: impl FnMut(&ElementSet) -> bool,
    ) -> Result<()> {
        let inv = self.require_involution()?;
        let n = self.len();
        let candidates: Vec<usize> = (0..n).filter(|&x| Some(x) != self.bottom).collect();
        // orth[x] = nonzero y != x with x <= y' and y <= x'
        let orth: Vec<ElementSet> = (0..n)
            .map(|x| {
                ElementSet::from_iter_in(
                    n,
                    candidates
                        .iter()
                        .copied()
                        .filter(|&y| y != x && self.leq(x, inv[y]) && self.leq(y, inv[x])),
                )
            })
            .collect();
        fn rec(
            current: &mut ElementSet,
            allowed: &ElementSet,
            orth: &[ElementSet],
            visit: &mut dyn FnMut(&ElementSet) -> bool,
        ) -> bool {
            if !visit(current) {
                return false;
            }
            for y in allowed {
                current.insert(y);
                let mut next = allowed.intersection(&orth[y]);
                // only extend with larger indices so each set is seen once
                for z in 0..=y {
                    next.remove(z);
                }
                if !rec(current, &next, orth, visit) {
                    return false;
                }
                current.remove(y);
            }
            true
        }
        let allowed = ElementSet::from_iter_in(n, candidates);
        let mut current = self.empty_set();
        rec(&mut current, &allowed, &orth, &mut visit);
        Ok(())
    }

    /// Every orthogonal subset has a supremum.
    pub fn is_orthocomplete(&self) -> Result<CheckReport> {
        let mut failure = None;
        self.for_each_orthogonal_set(|s| {
            if self.join_of(s).is_none() {
                failure = Some(s.clone());
                false
            } else {
                true
            }
        })?;
        Ok(match failure {
            Some(s) => CheckReport::fail(
                "orthocomplete",
                s.iter().map(|x| self.names[x].clone()).collect(),
                "orthogonal set without join",
            ),
            None => CheckReport::pass("orthocomplete"),
        })
    }

    /// Largest cardinality of an orthogonal set of nonzero elements.
    pub fn max_orthogonal_size(&self) -> Result<usize> {
        let mut best = 0;
        self.for_each_orthogonal_set(|s| {
            best = best.max(s.len());
            true
        })?;
        Ok(best)
    }

    /// The structural flags in one pass; orthogonality-based entries are
    /// `None` when the poset has no involution.
    pub fn structural_predicates(&self) -> Result<StructuralSummary> {
        let atomic = self.is_atomic()?;
        let atomistic = self.is_atomistic()?;
        let lattice = self.is_lattice();
        let (orthocomplete, max_orthogonal_size) = if self.involution.is_some() {
            (
                Some(self.is_orthocomplete()?),
                Some(self.max_orthogonal_size()?),
            )
        } else {
            (None, None)
        };
        Ok(StructuralSummary {
            atomic,
            atomistic,
            orthocomplete,
            lattice,
            max_orthogonal_size,
        })
    }

    pub(crate) fn pair_names(&self, x: usize, y: usize) -> Vec<String> {
        vec![self.names[x].clone(), self.names[y].clone()]
    }
}

#[derive(Debug, Clone)]
pub struct StructuralSummary {
    pub atomic: CheckReport,
    pub atomistic: CheckReport,
    pub orthocomplete: Option<CheckReport>,
    pub lattice: CheckReport,
    pub max_orthogonal_size: Option<usize>,
}

fn name_index(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateName(name.clone()));
        }
    }
    Ok(index)
}

/// Reflexive-transitive closure of `pairs` by repeated squaring of the
/// boolean relation matrix. Returns the up-set rows.
fn transitive_closure(n: usize, pairs: &[(usize, usize)]) -> Vec<ElementSet> {
    let mut rows: Vec<ElementSet> = (0..n).map(|i| ElementSet::singleton(n, i)).collect();
    for &(a, b) in pairs {
        rows[a].insert(b);
    }
    loop {
        let squared: Vec<ElementSet> = rows
            .iter()
            .map(|row| {
                let mut acc = row.clone();
                for j in row {
                    acc.union_with(&rows[j]);
                }
                acc
            })
            .collect();
        if squared == rows {
            return rows;
        }
        rows = squared;
    }
}

/// Turns a pair list into a total map. A pair `a:b` also sets `b' = a`
/// unless `b` is mapped explicitly.
fn involution_from_pairs(names: &[String], pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
    let n = names.len();
    let mut map: Vec<Option<usize>> = vec![None; n];
    for &(a, b) in pairs {
        match map[a] {
            Some(c) if c != b => {
                return Err(Error::NotAFunction(format!(
                    "`{}` is mapped to both `{}` and `{}`",
                    names[a], names[c], names[b]
                )))
            }
            _ => map[a] = Some(b),
        }
    }
    let explicit: Vec<bool> = map.iter().map(Option::is_some).collect();
    for &(a, b) in pairs {
        if !explicit[b] {
            match map[b] {
                Some(c) if c != a => {
                    return Err(Error::NotAFunction(format!(
                        "`{}` is the image of both `{}` and `{}`",
                        names[b], names[c], names[a]
                    )))
                }
                _ => map[b] = Some(a),
            }
        }
    }
    let total: Vec<usize> = map
        .iter()
        .enumerate()
        .map(|(i, m)| m.ok_or_else(|| Error::NotAFunction(format!("`{}` has no image", names[i]))))
        .collect::<Result<_>>()?;
    check_bijection(names, &total)?;
    Ok(total)
}

fn check_bijection(names: &[String], map: &[usize]) -> Result<()> {
    if map.len() != names.len() {
        return Err(Error::NotAFunction(format!(
            "map has {} entries for {} elements",
            map.len(),
            names.len()
        )));
    }
    let mut seen = vec![false; map.len()];
    for (x, &y) in map.iter().enumerate() {
        if y >= map.len() {
            return Err(Error::NotAFunction(format!(
                "`{}` maps outside the carrier",
                names[x]
            )));
        }
        if std::mem::replace(&mut seen[y], true) {
            return Err(Error::NotAFunction(format!("`{}` is hit twice", names[y])));
        }
    }
    Ok(())
}
