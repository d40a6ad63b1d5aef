//! Operator pairs `(M, R)` on posets and residuated operations on their
//! completions.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bitset::ElementSet;
use crate::closure::DmLattice;
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    /// `M(x,y) = L(x,y)`, `R(x,y) = L(U(x',y))`.
    Boolean,
    /// `M(x,y) = L(x,y)`, `R(x,y) = L(x*y)`.
    RelPseudo,
    /// `M(x,y) = L(U(x,y'),y)`, `R(x,y) = L(U(L(x,y),x'))`.
    PseudoOm,
    Custom,
}

impl OperatorKind {
    pub const BUILT_IN: [OperatorKind; 3] = [
        OperatorKind::Boolean,
        OperatorKind::RelPseudo,
        OperatorKind::PseudoOm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorKind::Boolean => "boolean",
            OperatorKind::RelPseudo => "relpseudo",
            OperatorKind::PseudoOm => "pseudo_om",
            OperatorKind::Custom => "custom",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "boolean" => Ok(OperatorKind::Boolean),
            "relpseudo" => Ok(OperatorKind::RelPseudo),
            "pseudo_om" | "pseudo-om" => Ok(OperatorKind::PseudoOm),
            other => Err(format!(
                "unknown operator kind `{other}` (boolean, relpseudo, pseudo_om)"
            )),
        }
    }
}

/// Materialized `M` and `R` tables plus the negation used by the
/// `R(x,0) = L(x')` axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorPair {
    pub kind: OperatorKind,
    n: usize,
    m: Vec<ElementSet>,
    r: Vec<ElementSet>,
    negation: Vec<usize>,
}

impl OperatorPair {
    pub fn custom(
        p: &FinitePoset,
        negation: Vec<usize>,
        m: impl Fn(usize, usize) -> ElementSet,
        r: impl Fn(usize, usize) -> ElementSet,
    ) -> Self {
        let n = p.len();
        OperatorPair {
            kind: OperatorKind::Custom,
            n,
            m: (0..n * n).map(|i| m(i / n, i % n)).collect(),
            r: (0..n * n).map(|i| r(i / n, i % n)).collect(),
            negation,
        }
    }

    pub fn m(&self, x: usize, y: usize) -> &ElementSet {
        &self.m[x * self.n + y]
    }

    pub fn r(&self, x: usize, y: usize) -> &ElementSet {
        &self.r[x * self.n + y]
    }

    pub fn negation(&self) -> &[usize] {
        &self.negation
    }
}

/// Greatest `c` with `L(a,c) ⊆ L(b)`, if there is one.
pub fn relative_pseudocomplement(p: &FinitePoset, a: usize, b: usize) -> Option<usize> {
    let candidates = ElementSet::from_iter_in(
        p.len(),
        (0..p.len()).filter(|&c| p.lower_pair(a, c).is_subset(p.down(b))),
    );
    p.maximum(&candidates)
}

/// The full `x*y` table, or the first pair without a relative
/// pseudocomplement.
pub fn relative_pseudocomplements(p: &FinitePoset) -> Result<Vec<usize>> {
    let n = p.len();
    (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            relative_pseudocomplement(p, a, b).ok_or_else(|| {
                Error::NoRelativePseudocomplement(p.name(a).into(), p.name(b).into())
            })
        })
        .collect()
}

pub fn is_relatively_pseudocomplemented(p: &FinitePoset) -> CheckReport {
    match relative_pseudocomplements(p) {
        Ok(_) => CheckReport::pass("relatively-pseudocomplemented"),
        Err(Error::NoRelativePseudocomplement(a, b)) => CheckReport::fail(
            "relatively-pseudocomplemented",
            vec![a, b],
            "x*y does not exist",
        ),
        Err(e) => CheckReport::fail("relatively-pseudocomplemented", vec![], e.to_string()),
    }
}

/// Builds the `(M, R)` pair of the given kind. For `relpseudo` the negation
/// is `x' := x*0`.
pub fn operator_pair(p: &FinitePoset, kind: OperatorKind) -> Result<OperatorPair> {
    let n = p.len();
    let (negation, m, r): (Vec<usize>, Vec<ElementSet>, Vec<ElementSet>) = match kind {
        OperatorKind::Boolean => {
            let inv = p.require_involution()?.to_vec();
            let m = pairs(n, |x, y| p.lower_pair(x, y));
            let r = pairs(n, |x, y| p.lower_cone(&p.upper_pair(inv[x], y)));
            (inv, m, r)
        }
        OperatorKind::RelPseudo => {
            let bottom = p.require_bottom()?;
            let star = relative_pseudocomplements(p)?;
            let negation = (0..n).map(|x| star[x * n + bottom]).collect();
            let m = pairs(n, |x, y| p.lower_pair(x, y));
            let r = pairs(n, |x, y| p.down(star[x * n + y]).clone());
            (negation, m, r)
        }
        OperatorKind::PseudoOm => {
            let inv = p.require_involution()?.to_vec();
            let m = pairs(n, |x, y| {
                p.lower_cone(&p.upper_pair(x, inv[y]))
                    .intersection(p.down(y))
            });
            let r = pairs(n, |x, y| {
                let mut s = p.lower_pair(x, y);
                s.insert(inv[x]);
                p.lower_cone(&p.upper_cone(&s))
            });
            (inv, m, r)
        }
        OperatorKind::Custom => {
            return Err(Error::InvariantViolated(
                "custom pairs are built with OperatorPair::custom".into(),
            ))
        }
    };
    Ok(OperatorPair {
        kind,
        n,
        m,
        r,
        negation,
    })
}

fn pairs(n: usize, f: impl Fn(usize, usize) -> ElementSet + Sync) -> Vec<ElementSet> {
    (0..n * n)
        .into_par_iter()
        .map(|i| f(i / n, i % n))
        .collect()
}

/// The three axioms of operator left residuation plus `R(x,y) = P ⟺ x ≤ y`.
/// The unit and negation axioms are tried before the adjunction.
pub fn verify_operator_left_residuation(
    p: &FinitePoset,
    pair: &OperatorPair,
) -> Result<CheckReport> {
    let property = format!("operator-residuation[{}]", pair.kind);
    let (bottom, top) = (p.require_bottom()?, p.require_top()?);
    let n = p.len();
    let named = |xs: &[usize]| {
        xs.iter()
            .map(|&x| p.name(x).to_string())
            .collect::<Vec<_>>()
    };
    for x in 0..n {
        if pair.m(x, top) != p.down(x) || pair.m(top, x) != p.down(x) {
            return Ok(CheckReport::fail(
                property,
                named(&[x]),
                "axiom M(x,1) = M(1,x) = L(x)",
            ));
        }
    }
    for x in 0..n {
        if pair.r(x, bottom) != p.down(pair.negation[x]) {
            return Ok(CheckReport::fail(
                property,
                named(&[x]),
                "axiom R(x,0) = L(x')",
            ));
        }
    }
    let adjunction = (0..n * n).into_par_iter().find_first(|&i| {
        let (x, y) = (i / n, i % n);
        (0..n).any(|z| pair.m(x, y).is_subset(p.down(z)) != p.down(x).is_subset(pair.r(y, z)))
    });
    if let Some(i) = adjunction {
        let (x, y) = (i / n, i % n);
        let z = (0..n)
            .find(|&z| pair.m(x, y).is_subset(p.down(z)) != p.down(x).is_subset(pair.r(y, z)))
            .expect("found above");
        return Ok(CheckReport::fail(
            property,
            named(&[x, y, z]),
            "axiom M(x,y) ⊆ L(z) ⟺ L(x) ⊆ R(y,z)",
        ));
    }
    for x in 0..n {
        for y in 0..n {
            if pair.r(x, y).is_full() != p.leq(x, y) {
                return Ok(CheckReport::fail(
                    property,
                    named(&[x, y]),
                    "derived law R(x,y) = P ⟺ x ≤ y",
                ));
            }
        }
    }
    Ok(CheckReport::pass(property))
}

/// `X⊛Y = ⋂ { L(a*b) : a ∈ X, b ∈ U(Y) }` on closed-set indices, checked to
/// make the completion relatively pseudocomplemented.
pub fn star_on_dm(d: &DmLattice) -> Result<Vec<usize>> {
    let p = d.poset();
    let n = p.len();
    let star = relative_pseudocomplements(p)?;
    let k = d.len();
    let table: Vec<usize> = (0..k * k)
        .into_par_iter()
        .map(|i| {
            let (x, y) = (d.set(i / k), d.set(i % k));
            let uy = p.upper_cone(y);
            let mut acc = p.full_set();
            for a in x {
                for b in &uy {
                    acc.intersect_with(p.down(star[a * n + b]));
                }
            }
            d.index_of(&acc)
                .expect("intersections of principal ideals are closed")
        })
        .collect();
    let bad = (0..k * k).into_par_iter().find_first(|&i| {
        let (x, y) = (i / k, i % k);
        (0..k).any(|z| d.leq(d.meet(x, z), y) != d.leq(z, table[i]))
    });
    if let Some(i) = bad {
        return Err(Error::InvariantViolated(format!(
            "⊛ is not a relative pseudocomplement at ({}, {})",
            d.name(i / k),
            d.name(i % k)
        )));
    }
    Ok(table)
}

/// `⊙` and `→` as tables over a lattice carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduatedOps {
    pub kind: OperatorKind,
    n: usize,
    odot: Vec<usize>,
    arrow: Vec<usize>,
}

impl ResiduatedOps {
    pub fn from_fns(
        kind: OperatorKind,
        n: usize,
        odot: impl Fn(usize, usize) -> usize,
        arrow: impl Fn(usize, usize) -> usize,
    ) -> Self {
        ResiduatedOps {
            kind,
            n,
            odot: (0..n * n).map(|i| odot(i / n, i % n)).collect(),
            arrow: (0..n * n).map(|i| arrow(i / n, i % n)).collect(),
        }
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.odot[x * self.n + y]
    }

    pub fn arrow(&self, x: usize, y: usize) -> usize {
        self.arrow[x * self.n + y]
    }
}

/// Operations on the completion obtained by reading `L(..)` as a meet and
/// `U(..)`, `LU(..)` as a join in each kind's `(M, R)`.
pub fn bdm_transform(d: &DmLattice, kind: OperatorKind) -> Result<ResiduatedOps> {
    let k = d.len();
    match kind {
        OperatorKind::Boolean => {
            let inv = d.require_involution()?;
            Ok(ResiduatedOps::from_fns(
                kind,
                k,
                |x, y| d.meet(x, y),
                |x, y| d.join(inv[x], y),
            ))
        }
        OperatorKind::RelPseudo => {
            let star = star_on_dm(d)?;
            Ok(ResiduatedOps::from_fns(
                kind,
                k,
                |x, y| d.meet(x, y),
                |x, y| star[x * k + y],
            ))
        }
        OperatorKind::PseudoOm => {
            let inv = d.require_involution()?;
            Ok(ResiduatedOps::from_fns(
                kind,
                k,
                |x, y| d.meet(d.join(x, inv[y]), y),
                |x, y| d.join(d.meet(x, y), inv[x]),
            ))
        }
        OperatorKind::Custom => Err(Error::InvariantViolated(
            "no transform for custom pairs".into(),
        )),
    }
}

/// Same operations computed from lattice tables, for lattices given as posets.
pub fn lattice_ops(l: &FiniteLattice<'_>, kind: OperatorKind) -> Result<ResiduatedOps> {
    let inv = l.poset().require_involution()?;
    let n = l.len();
    match kind {
        OperatorKind::Boolean => Ok(ResiduatedOps::from_fns(
            kind,
            n,
            |x, y| l.meet(x, y),
            |x, y| l.join(inv[x], y),
        )),
        OperatorKind::PseudoOm => Ok(ResiduatedOps::from_fns(
            kind,
            n,
            |x, y| l.meet(l.join(x, inv[y]), y),
            |x, y| l.join(l.meet(x, y), inv[x]),
        )),
        _ => Err(Error::InvariantViolated(format!(
            "no lattice form for {kind}"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResiduationReport {
    /// `x⊙1 = x = 1⊙x` and `x⊙y ≤ z ⟺ x ≤ y→z`.
    pub left_residuated: CheckReport,
    pub commutative: CheckReport,
    /// Reported only; never required.
    pub associative: CheckReport,
}

impl ResiduationReport {
    /// Left-residuated with commutative `⊙`.
    pub fn residuated(&self) -> bool {
        self.left_residuated.holds && self.commutative.holds
    }

    pub fn summary(&self) -> &'static str {
        match (self.left_residuated.holds, self.commutative.holds) {
            (true, true) => "residuated (commutative)",
            (true, false) => "left-residuated (not commutative)",
            (false, _) => "not left-residuated",
        }
    }
}

pub fn verify_left_residuated_lattice(
    p: &FinitePoset,
    ops: &ResiduatedOps,
) -> Result<ResiduationReport> {
    let top = p.require_top()?;
    let n = p.len();
    let named = |xs: &[usize]| {
        xs.iter()
            .map(|&x| p.name(x).to_string())
            .collect::<Vec<_>>()
    };
    let mut left = CheckReport::pass("left-residuated");
    if let Some(x) = (0..n).find(|&x| ops.odot(x, top) != x || ops.odot(top, x) != x) {
        left = CheckReport::fail("left-residuated", named(&[x]), "requ1: x⊙1 = x = 1⊙x");
    } else {
        let bad = (0..n * n).into_par_iter().find_first(|&i| {
            let (x, y) = (i / n, i % n);
            (0..n).any(|z| p.leq(ops.odot(x, y), z) != p.leq(x, ops.arrow(y, z)))
        });
        if let Some(i) = bad {
            let (x, y) = (i / n, i % n);
            let z = (0..n)
                .find(|&z| p.leq(ops.odot(x, y), z) != p.leq(x, ops.arrow(y, z)))
                .expect("found above");
            left = CheckReport::fail(
                "left-residuated",
                named(&[x, y, z]),
                "requ2: x⊙y ≤ z ⟺ x ≤ y→z",
            );
        }
    }
    let commutative = match (0..n * n).find(|&i| ops.odot(i / n, i % n) != ops.odot(i % n, i / n)) {
        None => CheckReport::pass("commutative"),
        Some(i) => CheckReport::fail("commutative", named(&[i / n, i % n]), "x⊙y != y⊙x"),
    };
    let associative = (0..n * n * n)
        .find(|&i| {
            let (x, y, z) = (i / (n * n), i / n % n, i % n);
            ops.odot(ops.odot(x, y), z) != ops.odot(x, ops.odot(y, z))
        })
        .map_or(CheckReport::pass("associative"), |i| {
            CheckReport::fail(
                "associative",
                named(&[i / (n * n), i / n % n, i % n]),
                "(x⊙y)⊙z != x⊙(y⊙z)",
            )
        });
    Ok(ResiduationReport {
        left_residuated: left,
        commutative,
        associative,
    })
}
