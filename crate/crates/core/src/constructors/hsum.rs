use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::closure::{complete_with_cap, DmLattice};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Where an element of a horizontal sum came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Bottom,
    Top,
    /// `(part, index within part)`.
    Part(usize, usize),
}

#[derive(Debug, Clone)]
pub struct HorizontalSum {
    pub poset: FinitePoset,
    pub origin: Vec<Origin>,
}

/// Glues bounded posets along their bottoms and tops.
///
/// Interior elements keep their names; a name that occurs in two parts gets
/// an `@k` suffix with the part number. The bounds are named after the first
/// part's.
pub fn horizontal_sum(parts: &[FinitePoset]) -> Result<FinitePoset> {
    Ok(horizontal_sum_with_origin(parts)?.poset)
}

pub fn horizontal_sum_with_origin(parts: &[FinitePoset]) -> Result<HorizontalSum> {
    if parts.is_empty() {
        return Err(Error::UnboundedPart(0));
    }
    let mut bounds = Vec::with_capacity(parts.len());
    for (k, p) in parts.iter().enumerate() {
        match (p.bottom(), p.top()) {
            (Some(b), Some(t)) if p.len() >= 2 => bounds.push((b, t)),
            _ => return Err(Error::UnboundedPart(k)),
        }
    }
    let with_inv = parts.iter().filter(|p| p.involution().is_some()).count();
    if with_inv != 0 && with_inv != parts.len() {
        return Err(Error::MixedInvolution);
    }

    let mut origin = vec![Origin::Bottom];
    for (k, p) in parts.iter().enumerate() {
        let (b, t) = bounds[k];
        origin.extend(
            (0..p.len())
                .filter(|&x| x != b && x != t)
                .map(|x| Origin::Part(k, x)),
        );
    }
    origin.push(Origin::Top);

    let mut counts = HashMap::new();
    for o in &origin {
        if let Origin::Part(k, x) = *o {
            *counts.entry(parts[k].name(x)).or_insert(0) += 1;
        }
    }
    let (b0, t0) = bounds[0];
    let names: Vec<String> = origin
        .iter()
        .map(|o| match *o {
            Origin::Bottom => parts[0].name(b0).to_string(),
            Origin::Top => parts[0].name(t0).to_string(),
            Origin::Part(k, x) => {
                let base = parts[k].name(x);
                if counts[base] > 1 || base == parts[0].name(b0) || base == parts[0].name(t0) {
                    format!("{base}@{k}")
                } else {
                    base.to_string()
                }
            }
        })
        .collect();

    let n = origin.len();
    let position: HashMap<(usize, usize), usize> = origin
        .iter()
        .enumerate()
        .filter_map(|(i, o)| match *o {
            Origin::Part(k, x) => Some(((k, x), i)),
            _ => None,
        })
        .collect();
    let locate = |k: usize, x: usize| -> usize {
        let (b, t) = bounds[k];
        if x == b {
            0
        } else if x == t {
            n - 1
        } else {
            position[&(k, x)]
        }
    };
    let leq = |i: usize, j: usize| match (origin[i], origin[j]) {
        (Origin::Bottom, _) | (_, Origin::Top) => true,
        (Origin::Part(k, x), Origin::Part(l, y)) => k == l && parts[k].leq(x, y),
        _ => false,
    };
    let involution = (with_inv > 0).then(|| {
        origin
            .iter()
            .map(|o| match *o {
                Origin::Bottom => {
                    let inv = parts[0].involution().unwrap();
                    locate(0, inv[b0])
                }
                Origin::Top => {
                    let inv = parts[0].involution().unwrap();
                    locate(0, inv[t0])
                }
                Origin::Part(k, x) => locate(k, parts[k].involution().unwrap()[x]),
            })
            .collect()
    });
    let poset = FinitePoset::from_leq(names, leq, involution)?;
    Ok(HorizontalSum { poset, origin })
}

/// Restriction of the order (and, when asked, the involution) to `subset`.
pub fn induced_subposet(
    p: &FinitePoset,
    subset: &ElementSet,
    keep_involution: bool,
) -> Result<FinitePoset> {
    let members = subset.to_vec();
    if members.is_empty() {
        return Err(Error::InvariantViolated(
            "induced subposet of the empty set".into(),
        ));
    }
    let involution = if keep_involution {
        let inv = p.require_involution()?;
        if let Some(&x) = members.iter().find(|&&x| !subset.contains(inv[x])) {
            return Err(Error::NotComplementClosed(
                p.name(x).into(),
                p.name(inv[x]).into(),
            ));
        }
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        Some(members.iter().map(|&x| pos[&inv[x]]).collect())
    } else {
        None
    };
    let names = members.iter().map(|&x| p.name(x).to_string()).collect();
    FinitePoset::from_leq(names, |i, j| p.leq(members[i], members[j]), involution)
}

/// The completion of a horizontal sum next to the horizontal sum of the
/// parts' completions, with an order isomorphism between them.
#[derive(Debug, Clone)]
pub struct CompletionIsomorphism {
    pub completion: DmLattice,
    pub sum_of_completions: FinitePoset,
    /// Closed-set index in `completion` to element of `sum_of_completions`.
    pub map: Vec<usize>,
}

/// Every closed set of the sum other than the bounds lives inside a single
/// part; it is sent to the matching closed set of that part's completion.
/// The map is checked to be a bijection that preserves and reflects order.
pub fn completion_isomorphism(parts: &[FinitePoset], cap: usize) -> Result<CompletionIsomorphism> {
    let sum = horizontal_sum_with_origin(parts)?;
    let completion = complete_with_cap(&sum.poset, cap)?;
    let part_completions = parts
        .iter()
        .map(|p| complete_with_cap(p, cap))
        .collect::<Result<Vec<_>>>()?;
    let target = horizontal_sum_with_origin(
        &part_completions
            .iter()
            .map(DmLattice::to_poset)
            .collect::<Vec<_>>(),
    )?;
    let position: HashMap<(usize, usize), usize> = target
        .origin
        .iter()
        .enumerate()
        .filter_map(|(i, o)| match *o {
            Origin::Part(k, x) => Some(((k, x), i)),
            _ => None,
        })
        .collect();
    let n_target = target.poset.len();
    let mut map = Vec::with_capacity(completion.len());
    for i in 0..completion.len() {
        if i == completion.bottom() {
            map.push(0);
            continue;
        }
        if i == completion.top() {
            map.push(n_target - 1);
            continue;
        }
        let set = completion.set(i);
        let mut part = None;
        let mut members = Vec::new();
        for x in set {
            match sum.origin[x] {
                Origin::Bottom => {}
                Origin::Top => {
                    return Err(Error::InvariantViolated(
                        "proper closed set contains the top".into(),
                    ))
                }
                Origin::Part(k, y) => {
                    if part.is_some_and(|q| q != k) {
                        return Err(Error::InvariantViolated(format!(
                            "closed set {} meets two parts",
                            sum.poset.render_set(set)
                        )));
                    }
                    part = Some(k);
                    members.push(y);
                }
            }
        }
        let k = part.ok_or_else(|| {
            Error::InvariantViolated("second closed set without part members".into())
        })?;
        let p = &parts[k];
        let mut local = ElementSet::from_iter_in(p.len(), members);
        local.insert(p.bottom().expect("checked by horizontal_sum"));
        let j = part_completions[k].index_of(&local).ok_or_else(|| {
            Error::InvariantViolated(format!(
                "{} is not closed in part {k}",
                p.render_set(&local)
            ))
        })?;
        let pos = position.get(&(k, j)).copied().ok_or_else(|| {
            Error::InvariantViolated(format!(
                "closed set {} maps to a bound of part {k}",
                p.render_set(&local)
            ))
        })?;
        map.push(pos);
    }
    let mut hit = vec![false; n_target];
    for &m in &map {
        if std::mem::replace(&mut hit[m], true) {
            return Err(Error::InvariantViolated(
                "completion map is not injective".into(),
            ));
        }
    }
    if map.len() != n_target {
        return Err(Error::InvariantViolated(format!(
            "{} closed sets against {n_target} elements",
            map.len()
        )));
    }
    for a in 0..map.len() {
        for b in 0..map.len() {
            if completion.leq(a, b) != target.poset.leq(map[a], map[b]) {
                return Err(Error::InvariantViolated(format!(
                    "order differs at {} / {}",
                    completion.name(a),
                    completion.name(b)
                )));
            }
        }
    }
    Ok(CompletionIsomorphism {
        completion,
        sum_of_completions: target.poset,
        map,
    })
}
