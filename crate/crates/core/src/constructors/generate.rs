//! Small bounded posets with antitone involution, for property suites.
//!
//! Exhaustive mode builds every naturally labelled poset on the interior
//! (each new element sits above an order ideal of the earlier ones), attaches
//! every involutive anti-automorphism, adds the bounds, and keeps the first
//! member of each isomorphism class. Random mode grows a self-dual relation
//! edge by edge from a seeded ChaCha stream.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::ElementSet;
use crate::checks;
use crate::constructors::canon::canonical_code;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

pub const EXHAUSTIVE_CAP: usize = 8;
pub const RANDOM_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Any,
    Complemented,
    PseudoOrthomodular,
}

impl Constraint {
    pub fn admits(self, p: &FinitePoset) -> bool {
        match self {
            Constraint::Any => true,
            Constraint::Complemented => p.is_complementation().is_ok_and(|r| r.holds),
            Constraint::PseudoOrthomodular => {
                p.is_complementation().is_ok_and(|r| r.holds)
                    && checks::is_pseudo_orthomodular(p).is_ok_and(|r| r.holds)
            }
        }
    }
}

/// Every bounded poset with antitone involution on `2..=max_n` elements,
/// one per isomorphism class, filtered by `constraint`.
pub fn exhaustive(max_n: usize, constraint: Constraint) -> Result<Vec<FinitePoset>> {
    if max_n > EXHAUSTIVE_CAP {
        return Err(Error::SizeLimitExceeded(EXHAUSTIVE_CAP));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let m = n - 2;
        if constraint != Constraint::Any && m % 2 == 1 {
            // a complementation has no interior fixed point
            continue;
        }
        let mut seen = HashSet::new();
        for_each_natural_poset(m, &mut |up: &[ElementSet]| {
            if !degree_profile_self_dual(up) {
                return;
            }
            for sigma in anti_involutions(up) {
                let p = bounded(up, &sigma);
                if seen.insert(canonical_code(&p)) && constraint.admits(&p) {
                    out.push(p);
                }
            }
        });
    }
    Ok(out)
}

/// `count` seeded random posets with `min_n <= n <= max_n` satisfying
/// `constraint`. The same seed always yields the same list.
pub fn random(
    seed: u64,
    count: usize,
    min_n: usize,
    max_n: usize,
    constraint: Constraint,
) -> Result<Vec<FinitePoset>> {
    if max_n > RANDOM_CAP {
        return Err(Error::SizeLimitExceeded(RANDOM_CAP));
    }
    let min_n = min_n.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > count.max(1) * 10_000 {
            return Err(Error::InvariantViolated(format!(
                "random generator found only {} of {count} admissible posets",
                out.len()
            )));
        }
        let n = rng.random_range(min_n..=max_n);
        let m = n - 2;
        let fixed = if constraint == Constraint::Any {
            let f = rng.random_range(0..=m);
            if (m - f) % 2 == 1 {
                f + 1
            } else {
                f
            }
        } else if m % 2 == 1 {
            continue;
        } else {
            0
        };
        let sigma = random_pairing(&mut rng, m, fixed);
        let density = rng.random_range(0.05..0.5);
        let up = random_self_dual_order(&mut rng, m, &sigma, density);
        let p = bounded(&up, &sigma);
        if constraint.admits(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

fn interior_name(i: usize, m: usize) -> String {
    if m <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("e{i}")
    }
}

/// Adds `0` below and `1` above an interior order given by up-sets.
fn bounded(up: &[ElementSet], sigma: &[usize]) -> FinitePoset {
    let m = up.len();
    let n = m + 2;
    let mut names = vec!["0".to_string()];
    names.extend((0..m).map(|i| interior_name(i, m)));
    names.push("1".to_string());
    let mut involution = vec![n - 1];
    involution.extend(sigma.iter().map(|&s| s + 1));
    involution.push(0);
    FinitePoset::from_leq(
        names,
        |x, y| x == 0 || y == n - 1 || (x != n - 1 && y != 0 && up[x - 1].contains(y - 1)),
        Some(involution),
    )
    .expect("generated relation is a bounded poset")
}

/// Calls `visit` with the up-sets of every naturally labelled poset on `m`
/// elements (element `k` is never below an element with smaller index).
fn for_each_natural_poset(m: usize, visit: &mut dyn FnMut(&[ElementSet])) {
    fn rec(k: usize, m: usize, down: &mut Vec<ElementSet>, visit: &mut dyn FnMut(&[ElementSet])) {
        if k == m {
            let mut up = vec![ElementSet::empty(m); m];
            for (x, d) in down.iter().enumerate() {
                for y in d {
                    up[y].insert(x);
                }
            }
            visit(&up);
            return;
        }
        // every order ideal of {0..k-1} is a legal strict down-set for k
        for mask in 0u64..(1 << k) {
            let ideal = ElementSet::from_mask(m, mask);
            if ideal
                .iter()
                .all(|y| down[y].is_subset(&ideal.union(&ElementSet::singleton(m, y))))
            {
                let mut d = ideal;
                d.insert(k);
                down.push(d);
                rec(k + 1, m, down, visit);
                down.pop();
            }
        }
    }
    assert!(m < 64);
    rec(0, m, &mut Vec::with_capacity(m), visit);
}

/// Cheap necessary condition for an order anti-automorphism.
fn degree_profile_self_dual(up: &[ElementSet]) -> bool {
    let m = up.len();
    let mut down_sizes = vec![0usize; m];
    for row in up {
        for y in row {
            down_sizes[y] += 1;
        }
    }
    let mut profile: Vec<(usize, usize)> = (0..m).map(|x| (down_sizes[x], up[x].len())).collect();
    let mut dual: Vec<(usize, usize)> = profile.iter().map(|&(d, u)| (u, d)).collect();
    profile.sort_unstable();
    dual.sort_unstable();
    profile == dual
}

/// All involutions `σ` on the interior with `x <= y ⟺ σy <= σx`.
fn anti_involutions(up: &[ElementSet]) -> Vec<Vec<usize>> {
    let m = up.len();
    let leq = |x: usize, y: usize| up[x].contains(y);
    let mut out = Vec::new();
    let mut sigma: Vec<Option<usize>> = vec![None; m];
    fn consistent(sigma: &[Option<usize>], leq: &dyn Fn(usize, usize) -> bool, x: usize) -> bool {
        let sx = sigma[x].unwrap();
        sigma.iter().enumerate().all(|(y, sy)| match sy {
            Some(sy) => leq(x, y) == leq(*sy, sx) && leq(y, x) == leq(sx, *sy),
            None => true,
        })
    }
    fn rec(
        sigma: &mut Vec<Option<usize>>,
        leq: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(x) = sigma.iter().position(Option::is_none) else {
            out.push(sigma.iter().map(|s| s.unwrap()).collect());
            return;
        };
        for y in x..sigma.len() {
            if sigma[y].is_some() {
                continue;
            }
            sigma[x] = Some(y);
            sigma[y] = Some(x);
            if consistent(sigma, leq, x) && consistent(sigma, leq, y) {
                rec(sigma, leq, out);
            }
            sigma[x] = None;
            sigma[y] = None;
        }
    }
    rec(&mut sigma, &leq, &mut out);
    out
}

fn random_pairing(rng: &mut ChaCha8Rng, m: usize, fixed: usize) -> Vec<usize> {
    let mut items: Vec<usize> = (0..m).collect();
    for i in (1..m).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
    let mut sigma: Vec<usize> = (0..m).collect();
    for pair in items[fixed.min(m)..].chunks(2) {
        if let [a, b] = *pair {
            sigma[a] = b;
            sigma[b] = a;
        }
    }
    sigma
}

/// Random order on `0..m` closed under `x < y ⇒ σy < σx`.
fn random_self_dual_order(
    rng: &mut ChaCha8Rng,
    m: usize,
    sigma: &[usize],
    density: f64,
) -> Vec<ElementSet> {
    let mut up: Vec<ElementSet> = (0..m).map(|i| ElementSet::singleton(m, i)).collect();
    fn add(up: &mut [ElementSet], x: usize, y: usize) -> bool {
        if up[y].contains(x) {
            return false;
        }
        let above = up[y].clone();
        for a in 0..up.len() {
            if up[a].contains(x) {
                up[a].union_with(&above);
            }
        }
        true
    }
    if m < 2 {
        return up;
    }
    let tries = ((m * (m - 1)) as f64 * density).ceil() as usize;
    for _ in 0..tries {
        let x = rng.random_range(0..m);
        let y = rng.random_range(0..m);
        if x == y || up[x].contains(y) {
            continue;
        }
        let saved = up.clone();
        if !(add(&mut up, x, y) && add_dual_ok(&mut up, sigma, x, y, add)) {
            up = saved;
        }
    }
    up
}

fn add_dual_ok(
    up: &mut [ElementSet],
    sigma: &[usize],
    x: usize,
    y: usize,
    add: fn(&mut [ElementSet], usize, usize) -> bool,
) -> bool {
    let (dx, dy) = (sigma[y], sigma[x]);
    if up[dx].contains(dy) {
        return true;
    }
    if !add(up, dx, dy) {
        return false;
    }
    // closing under transitivity can create new pairs whose duals are missing
    loop {
        let mut missing = None;
        'scan: for a in 0..up.len() {
            for b in &up[a] {
                if a != b && !up[sigma[b]].contains(sigma[a]) {
                    missing = Some((sigma[b], sigma[a]));
                    break 'scan;
                }
            }
        }
        match missing {
            None => return true,
            Some((a, b)) => {
                if !add(up, a, b) {
                    return false;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::canon::isomorphic;
    use crate::corpus;

    #[test]
    fn exhaustive_two_is_the_chain() {
        let all = exhaustive(2, Constraint::Any).unwrap();
        assert_eq!(all.len(), 1);
        assert!(isomorphic(&all[0], &corpus::poset("chain2").unwrap()));
    }

    #[test]
    fn exhaustive_four_complemented_has_the_square() {
        let all = exhaustive(4, Constraint::Complemented).unwrap();
        let ba4 = corpus::poset("ba4").unwrap();
        assert!(all.iter().any(|p| isomorphic(p, &ba4)));
    }

    #[test]
    fn exhaustive_six_complemented_has_benzene_and_mo2() {
        let all = exhaustive(6, Constraint::Complemented).unwrap();
        for name in ["o6", "mo2"] {
            let target = corpus::poset(name).unwrap();
            assert!(all.iter().any(|p| isomorphic(p, &target)), "{name}");
        }
    }

    /// Independent count: every relation on the four interior points of a
    /// six-element bounded poset, every involution, deduplicated by trying
    /// all 24 relabellings.
    #[test]
    fn complemented_six_element_count_matches_brute_force() {
        let generated = exhaustive(6, Constraint::Complemented).unwrap();
        let six = generated.iter().filter(|p| p.len() == 6).count();

        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .filter(|(a, b)| a != b)
            .collect();
        let perms: Vec<[usize; 4]> = {
            let mut v = Vec::new();
            for a in 0..4 {
                for b in 0..4 {
                    for c in 0..4 {
                        for d in 0..4 {
                            let p = [a, b, c, d];
                            let mut s = p;
                            s.sort();
                            if s == [0, 1, 2, 3] {
                                v.push(p);
                            }
                        }
                    }
                }
            }
            v
        };
        let involutions: Vec<[usize; 4]> = perms
            .iter()
            .copied()
            .filter(|s| (0..4).all(|i| s[s[i]] == i))
            .collect();
        let mut classes: HashSet<(Vec<bool>, [usize; 4])> = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut rel = [[false; 4]; 4];
            for (i, &(a, b)) in pairs.iter().enumerate() {
                rel[a][b] = mask >> i & 1 == 1;
            }
            let partial_order = (0..4).all(|a| {
                (0..4).all(|b| {
                    !(rel[a][b] && rel[b][a])
                        && (0..4).all(|c| !(rel[a][b] && rel[b][c]) || rel[a][c] || a == c)
                })
            });
            if !partial_order {
                continue;
            }
            let le = |a: usize, b: usize| a == b || rel[a][b];
            for s in &involutions {
                let antitone = (0..4).all(|a| (0..4).all(|b| !le(a, b) || le(s[b], s[a])));
                // interior meets are 0 and joins are 1 exactly when x and x'
                // share no interior lower or upper bound
                let complemented = (0..4).all(|x| {
                    (0..4).all(|z| !(le(z, x) && le(z, s[x])) && !(le(x, z) && le(s[x], z)))
                });
                if !antitone || !complemented {
                    continue;
                }
                let key = perms
                    .iter()
                    .map(|p| {
                        let mut r = vec![false; 16];
                        let mut inv = [0usize; 4];
                        for a in 0..4 {
                            for b in 0..4 {
                                r[p[a] * 4 + p[b]] = le(a, b);
                            }
                            inv[p[a]] = p[s[a]];
                        }
                        (r, inv)
                    })
                    .min()
                    .unwrap();
                classes.insert(key);
            }
        }
        assert_eq!(six, classes.len());
    }

    #[test]
    fn random_is_seed_deterministic() {
        let a = random(7, 20, 4, 10, Constraint::Complemented).unwrap();
        let b = random(7, 20, 4, 10, Constraint::Complemented).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.is_complementation().unwrap().holds));
        assert!(a.iter().all(|p| (4..=10).contains(&p.len())));
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            exhaustive(9, Constraint::Any).unwrap_err(),
            Error::SizeLimitExceeded(EXHAUSTIVE_CAP)
        );
        assert_eq!(
            random(1, 1, 2, 13, Constraint::Any).unwrap_err(),
            Error::SizeLimitExceeded(RANDOM_CAP)
        );
    }
}
