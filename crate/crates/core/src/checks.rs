//! Decision procedures for the poset and lattice classes, each returning the
//! first witness in carrier order on failure.
//!
//! Where a class has two equivalent defining identities both are evaluated
//! and a disagreement is reported as [`Error::InvariantViolated`].

use crate::bitset::ElementSet;
use crate::closure::{complete, DmLattice};
use crate::error::{Error, Result};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::report::CheckReport;

fn names(p: &FinitePoset, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| p.name(x).to_string()).collect()
}

fn agree(property: &str, first: CheckReport, second: &CheckReport) -> Result<CheckReport> {
    if first.holds != second.holds {
        return Err(Error::InvariantViolated(format!(
            "{property}: equivalent identities disagree ({} vs {})",
            first.holds, second.holds
        )));
    }
    Ok(first)
}

/// `L(U(x,y),z) = LU(L(x,z),L(y,z))` and its order dual, over all triples.
pub fn is_distributive_poset(p: &FinitePoset) -> Result<CheckReport> {
    const PROPERTY: &str = "distributive";
    let n = p.len();
    let lu_pair: Vec<ElementSet> = (0..n * n)
        .map(|i| p.lower_cone(&p.upper_pair(i / n, i % n)))
        .collect();
    let ul_pair: Vec<ElementSet> = (0..n * n)
        .map(|i| p.upper_cone(&p.lower_pair(i / n, i % n)))
        .collect();
    let mut lower_form = None;
    let mut upper_form = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if lower_form.is_none() {
                    let lhs = lu_pair[x * n + y].intersection(p.down(z));
                    let rhs =
                        p.lower_cone(&p.upper_cone(&p.lower_pair(x, z).union(&p.lower_pair(y, z))));
                    if lhs != rhs {
                        lower_form = Some((x, y, z));
                    }
                }
                if upper_form.is_none() {
                    let lhs = ul_pair[x * n + y].intersection(p.up(z));
                    let rhs =
                        p.upper_cone(&p.lower_cone(&p.upper_pair(x, z).union(&p.upper_pair(y, z))));
                    if lhs != rhs {
                        upper_form = Some((x, y, z));
                    }
                }
                if lower_form.is_some() && upper_form.is_some() {
                    break 'outer;
                }
            }
        }
    }
    let report = |w: Option<(usize, usize, usize)>, form: &str| match w {
        None => CheckReport::pass(PROPERTY),
        Some((x, y, z)) => CheckReport::fail(
            PROPERTY,
            names(p, &[x, y, z]),
            format!("{form} fails at (x,y,z)"),
        ),
    };
    agree(
        PROPERTY,
        report(lower_form, "L(U(x,y),z) = LU(L(x,z),L(y,z))"),
        &report(upper_form, "U(L(x,y),z) = UL(U(x,z),U(y,z))"),
    )
}

/// Distributive, with the involution a complementation.
pub fn is_boolean_poset(p: &FinitePoset) -> Result<CheckReport> {
    let complemented = p.is_complementation()?;
    let distributive = is_distributive_poset(p)?;
    Ok(CheckReport::all("boolean", [complemented, distributive]))
}

/// Orthogonal joins exist, and `((x∧y)∨y')∧y = x∧y` wherever `x∧y :=
/// (x'∨y')'` is defined. Every later subterm is an orthogonal join, so a
/// pair is skipped only when `x'∨y'` does not exist.
pub fn is_orthomodular_poset(p: &FinitePoset) -> Result<CheckReport> {
    const PROPERTY: &str = "orthomodular-poset";
    let inv = p.require_complemented()?;
    let n = p.len();
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, inv[y]) && p.join(x, y).is_none() {
                return Ok(CheckReport::fail(
                    PROPERTY,
                    names(p, &[x, y]),
                    "orthogonal pair without a join",
                ));
            }
        }
    }
    let ojoin = |a: usize, b: usize| p.join(a, b).expect("orthogonal joins exist");
    for x in 0..n {
        for y in 0..n {
            let Some(j) = p.join(inv[x], inv[y]) else {
                continue;
            };
            let m = inv[j];
            let k = ojoin(m, inv[y]);
            let lhs = inv[ojoin(inv[k], inv[y])];
            if lhs != m {
                return Ok(CheckReport::fail(
                    PROPERTY,
                    names(p, &[x, y]),
                    format!(
                        "((x∧y)∨y')∧y = {} but x∧y = {}; pairs with undefined x∧y are skipped",
                        p.name(lhs),
                        p.name(m)
                    ),
                ));
            }
        }
    }
    Ok(CheckReport::pass(PROPERTY).with_details("pairs with undefined x∧y are skipped"))
}

/// `x∨y = ((x∨y)∧y')∨y` on a complemented lattice, cross-checked against
/// "x ≤ y and x'∧y = 0 imply x = y".
pub fn is_orthomodular_lattice(p: &FinitePoset) -> Result<CheckReport> {
    const PROPERTY: &str = "orthomodular-lattice";
    let l = FiniteLattice::new(p)?;
    let inv = p.require_complemented()?;
    let n = p.len();
    let mut identity = CheckReport::pass(PROPERTY);
    'identity: for x in 0..n {
        for y in 0..n {
            let j = l.join(x, y);
            let rhs = l.join(l.meet(j, inv[y]), y);
            if rhs != j {
                identity = CheckReport::fail(
                    PROPERTY,
                    names(p, &[x, y]),
                    format!("x∨y = {} but ((x∨y)∧y')∨y = {}", p.name(j), p.name(rhs)),
                );
                break 'identity;
            }
        }
    }
    let mut kalmbach = CheckReport::pass(PROPERTY);
    'kalmbach: for x in 0..n {
        for y in 0..n {
            if x != y && p.leq(x, y) && l.meet(inv[x], y) == l.bottom() {
                kalmbach = CheckReport::fail(PROPERTY, names(p, &[x, y]), "x < y with x'∧y = 0");
                break 'kalmbach;
            }
        }
    }
    agree(PROPERTY, identity, &kalmbach)
}

/// `L(U(L(x,y),y'),y) = L(x,y)` and its dual, over all pairs.
pub fn is_pseudo_orthomodular(p: &FinitePoset) -> Result<CheckReport> {
    const PROPERTY: &str = "pseudo-orthomodular";
    let inv = p.require_complemented()?;
    let n = p.len();
    let mut lower = None;
    let mut upper = None;
    for x in 0..n {
        for y in 0..n {
            if lower.is_none() {
                let mut s = p.lower_pair(x, y);
                s.insert(inv[y]);
                let lhs = p.lower_cone(&p.upper_cone(&s)).intersection(p.down(y));
                if lhs != p.lower_pair(x, y) {
                    lower = Some((x, y));
                }
            }
            if upper.is_none() {
                let mut s = p.upper_pair(x, y);
                s.insert(inv[y]);
                let lhs = p.upper_cone(&p.lower_cone(&s)).intersection(p.up(y));
                if lhs != p.upper_pair(x, y) {
                    upper = Some((x, y));
                }
            }
        }
    }
    let report = |w: Option<(usize, usize)>, form: &str| match w {
        None => CheckReport::pass(PROPERTY),
        Some((x, y)) => CheckReport::fail(
            PROPERTY,
            names(p, &[x, y]),
            format!("{form} fails at (x,y)"),
        ),
    };
    agree(
        PROPERTY,
        report(lower, "L(U(L(x,y),y'),y) = L(x,y)"),
        &report(upper, "U(L(U(x,y),y'),y) = U(x,y)"),
    )
}

pub const SDC_READING: &str = "⋀(C ∪ B') = 0 read as L(C ∪ B') = {0}";

/// Strong D-continuity. For `B <= C` the condition depends only on the
/// closed sets `X = LU(B)` and `Y = L(C)`, with `X ⊆ Y`, where it reads
/// `Y ∩ X* = {0}  ⟺  X = Y`. Each such pair is checked once, represented
/// by `(B, C) = (X, U(Y))`.
pub fn is_strongly_d_continuous(p: &FinitePoset) -> Result<CheckReport> {
    let d = complete(p)?;
    strongly_d_continuous_on(p, &d)
}

pub fn strongly_d_continuous_on(p: &FinitePoset, d: &DmLattice) -> Result<CheckReport> {
    const PROPERTY: &str = "strongly-d-continuous";
    p.require_complemented()?;
    let zero = p.set_of(&[p.name(p.require_bottom()?)])?;
    let star = d.require_involution()?;
    for xi in 0..d.len() {
        let x = d.set(xi);
        let x_star = d.set(star[xi]);
        for yi in 0..d.len() {
            if !d.leq(xi, yi) {
                continue;
            }
            let y = d.set(yi);
            let lhs = y.intersection(x_star) == zero;
            let rhs = xi == yi;
            if rhs && !lhs {
                return Err(Error::InvariantViolated(format!(
                    "X ∩ X* != {{0}} for X = {} in a complemented poset",
                    p.render_set(x)
                )));
            }
            if lhs != rhs {
                return Ok(CheckReport::fail(
                    PROPERTY,
                    vec![p.render_set(x), p.render_set(&p.upper_cone(y))],
                    format!("(B,C) with L(C ∪ B') = {{0}} but L(C) ≰ U(B); {SDC_READING}"),
                ));
            }
        }
    }
    Ok(CheckReport::pass(PROPERTY).with_details(SDC_READING))
}

/// Every maximal orthogonal subset of a closed set `X ≠ LU(∅)` generates
/// `X` again under `LU`.
pub fn finch_criterion(p: &FinitePoset) -> Result<CheckReport> {
    let d = complete(p)?;
    finch_criterion_on(p, &d)
}

pub fn finch_criterion_on(p: &FinitePoset, d: &DmLattice) -> Result<CheckReport> {
    const PROPERTY: &str = "finch";
    let inv = p.require_complemented()?;
    let bottom = p.require_bottom()?;
    for i in 1..d.len() {
        let x = d.set(i);
        let mut members = x.clone();
        members.remove(bottom);
        let mut witness = None;
        maximal_cliques(&members, &|a, b| p.leq(a, inv[b]), &mut |s| {
            if crate::closure::closure(p, s) != *x {
                witness = Some(s.clone());
                return false;
            }
            true
        });
        if let Some(s) = witness {
            return Ok(CheckReport::fail(
                PROPERTY,
                vec![p.render_set(x), p.render_set(&s)],
                "maximal orthogonal subset S of closed X with LU(S) != X",
            ));
        }
    }
    Ok(CheckReport::pass(PROPERTY))
}

/// Bron–Kerbosch with pivoting over `vertices`; `visit` returns false to stop.
fn maximal_cliques(
    vertices: &ElementSet,
    adjacent: &dyn Fn(usize, usize) -> bool,
    visit: &mut dyn FnMut(&ElementSet) -> bool,
) {
    let u = vertices.universe();
    let neighbours: Vec<ElementSet> = (0..u)
        .map(|a| {
            if vertices.contains(a) {
                ElementSet::from_iter_in(u, vertices.iter().filter(|&b| b != a && adjacent(a, b)))
            } else {
                ElementSet::empty(u)
            }
        })
        .collect();
    fn rec(
        r: &mut ElementSet,
        mut cand: ElementSet,
        mut excl: ElementSet,
        nb: &[ElementSet],
        visit: &mut dyn FnMut(&ElementSet) -> bool,
    ) -> bool {
        if cand.is_empty() && excl.is_empty() {
            return visit(r);
        }
        let pivot = cand
            .union(&excl)
            .iter()
            .max_by_key(|&v| nb[v].intersection(&cand).len())
            .expect("nonempty");
        for v in cand.difference(&nb[pivot]).to_vec() {
            r.insert(v);
            if !rec(
                r,
                cand.intersection(&nb[v]),
                excl.intersection(&nb[v]),
                nb,
                visit,
            ) {
                return false;
            }
            r.remove(v);
            cand.remove(v);
            excl.insert(v);
        }
        true
    }
    rec(
        &mut ElementSet::empty(u),
        vertices.clone(),
        ElementSet::empty(u),
        &neighbours,
        visit,
    );
}

/// `X` contains the bounds, is closed under `'`, and every element is both
/// the join of the members of `X` below it and the meet of those above it.
pub fn is_complement_closed_doubly_dense(p: &FinitePoset, x: &ElementSet) -> Result<CheckReport> {
    const PROPERTY: &str = "complement-closed-doubly-dense";
    let l = FiniteLattice::new(p)?;
    let inv = p.require_complemented()?;
    for a in 0..p.len() {
        if l.join_all(p.down(a).intersection(x).iter()) != a {
            return Ok(CheckReport::fail(
                PROPERTY,
                vec![p.name(a).into()],
                "(i) a != ⋁(L(a) ∩ X)",
            ));
        }
        if l.meet_all(p.up(a).intersection(x).iter()) != a {
            return Ok(CheckReport::fail(
                PROPERTY,
                vec![p.name(a).into()],
                "(i) a != ⋀(U(a) ∩ X)",
            ));
        }
    }
    if let Some(a) = x.iter().find(|&a| !x.contains(inv[a])) {
        return Ok(CheckReport::fail(
            PROPERTY,
            vec![p.name(a).into()],
            "(ii) X is not closed under '",
        ));
    }
    for b in [l.bottom(), l.top()] {
        if !x.contains(b) {
            return Ok(CheckReport::fail(
                PROPERTY,
                vec![p.name(b).into()],
                "(iii) bound missing from X",
            ));
        }
    }
    Ok(CheckReport::pass(PROPERTY))
}

/// The completion, with its induced involution, is an orthomodular lattice.
pub fn completion_is_orthomodular(d: &DmLattice) -> Result<CheckReport> {
    let mut r = is_orthomodular_lattice(&d.to_poset())?;
    r.property = "completion-orthomodular".into();
    Ok(r)
}
