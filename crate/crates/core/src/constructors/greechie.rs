//! Greechie diagrams and their pasted orthomodular posets.
//!
//! Each block `e` contributes the Boolean algebra of its atom subsets.
//! Pairs `(e, S)` and `(f, T)` are identified when `S = T` or
//! `e \ S = f \ T`, closed transitively. A class lies below another when
//! some block holds representatives of both with subset inclusion.

use std::collections::{BTreeSet, HashMap};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::report::CheckReport;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GreechieDiagram {
    pub atoms: Vec<String>,
    pub blocks: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct GreechieValidation {
    pub report: CheckReport,
    /// Smallest order of any loop in the diagram (2 and 3 make it invalid).
    pub min_loop_order: Option<usize>,
    pub has_loop_of_order_4: bool,
}

/// Atoms are capped so a block subset fits in one machine word.
const MAX_ATOMS: usize = 64;
/// Each block expands to `2^|block|` pairs before identification.
const MAX_BLOCK: usize = 16;

impl GreechieDiagram {
    pub fn new<S: AsRef<str>>(atoms: &[S], blocks: &[&[S]]) -> Self {
        GreechieDiagram {
            atoms: atoms.iter().map(|a| a.as_ref().to_string()).collect(),
            blocks: blocks
                .iter()
                .map(|b| b.iter().map(|a| a.as_ref().to_string()).collect())
                .collect(),
        }
    }

    fn block_sets(&self) -> Result<Vec<ElementSet>> {
        let index: HashMap<&str, usize> = self
            .atoms
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect();
        if index.len() != self.atoms.len() {
            return Err(Error::InvalidDiagram("duplicate atom".into()));
        }
        self.blocks
            .iter()
            .map(|b| {
                let mut s = ElementSet::empty(self.atoms.len());
                for a in b {
                    let i = *index
                        .get(a.as_str())
                        .ok_or_else(|| Error::InvalidDiagram(format!("unknown atom `{a}`")))?;
                    if s.contains(i) {
                        return Err(Error::InvalidDiagram(format!(
                            "atom `{a}` repeated in a block"
                        )));
                    }
                    s.insert(i);
                }
                Ok(s)
            })
            .collect()
    }

    /// Checks the five Greechie conditions and measures loops.
    pub fn validate(&self) -> Result<GreechieValidation> {
        const NAME: &str = "greechie-diagram";
        let blocks = self.block_sets()?;
        let fail =
            |witness: Vec<String>, details: String| CheckReport::fail(NAME, witness, details);
        let min_loop_order = (2..=blocks.len()).find(|&k| has_loop(&blocks, k));
        let has_loop_of_order_4 = blocks.len() >= 4 && has_loop(&blocks, 4);
        let mut report = CheckReport::pass(NAME);

        let distinct: BTreeSet<_> = blocks.iter().collect();
        if self.atoms.is_empty() {
            report = fail(vec![], "no atoms".into());
        } else if distinct.len() != blocks.len() {
            report = fail(vec![], "repeated block".into());
        } else if let Some(a) =
            (0..self.atoms.len()).find(|&a| !blocks.iter().any(|b| b.contains(a)))
        {
            report = fail(vec![self.atoms[a].clone()], "(1) atom in no block".into());
        } else if let Some(i) =
            (0..blocks.len()).find(|&i| self.atoms.len() >= 2 && blocks[i].len() < 2)
        {
            report = fail(
                self.blocks[i].clone(),
                "(2) block with fewer than two atoms".into(),
            );
        } else if let Some(i) = (0..blocks.len()).find(|&i| {
            blocks[i].len() < 3
                && (0..blocks.len()).any(|j| j != i && !blocks[i].is_disjoint(&blocks[j]))
        }) {
            report = fail(
                self.blocks[i].clone(),
                "(3) intersecting block with fewer than three atoms".into(),
            );
        } else if let Some((i, j)) = (0..blocks.len())
            .flat_map(|i| (i + 1..blocks.len()).map(move |j| (i, j)))
            .find(|&(i, j)| blocks[i].intersection(&blocks[j]).len() > 1)
        {
            let mut w = self.blocks[i].clone();
            w.extend(self.blocks[j].iter().cloned());
            report = fail(w, "(4) blocks share more than one atom".into());
        } else if min_loop_order == Some(3) {
            report = fail(vec![], "(5) loop of order 3".into());
        }
        if report.holds {
            if let Some(k) = min_loop_order {
                report.details = format!("minimum loop order {k}");
            }
        }
        Ok(GreechieValidation {
            report,
            min_loop_order,
            has_loop_of_order_4,
        })
    }

    /// Pastes the Boolean blocks into an orthomodular poset.
    pub fn to_omp(&self) -> Result<FinitePoset> {
        let validation = self.validate()?;
        if !validation.report.holds {
            return Err(Error::InvalidDiagram(validation.report.details));
        }
        if self.atoms.len() > MAX_ATOMS {
            return Err(Error::InvalidDiagram(format!(
                "more than {MAX_ATOMS} atoms"
            )));
        }
        if let Some(b) = self.blocks.iter().find(|b| b.len() > MAX_BLOCK) {
            return Err(Error::InvalidDiagram(format!(
                "block of {} atoms exceeds {MAX_BLOCK}",
                b.len()
            )));
        }
        let blocks: Vec<u64> = self
            .block_sets()?
            .iter()
            .map(|s| s.iter().fold(0u64, |m, a| m | 1 << a))
            .collect();

        // every (block, subset) pair
        let mut nodes: Vec<(usize, u64)> = Vec::new();
        for (b, &mask) in blocks.iter().enumerate() {
            let mut sub = 0u64;
            loop {
                nodes.push((b, sub));
                if sub == mask {
                    break;
                }
                sub = (sub.wrapping_sub(mask)) & mask;
            }
        }
        let mut uf = UnionFind::new(nodes.len());
        let mut by_subset: HashMap<u64, usize> = HashMap::new();
        let mut by_cosubset: HashMap<u64, usize> = HashMap::new();
        for (i, &(b, s)) in nodes.iter().enumerate() {
            if let Some(&j) = by_subset.get(&s) {
                uf.union(i, j);
            } else {
                by_subset.insert(s, i);
            }
            let co = blocks[b] & !s;
            if let Some(&j) = by_cosubset.get(&co) {
                uf.union(i, j);
            } else {
                by_cosubset.insert(co, i);
            }
        }

        let mut class_of_root: HashMap<usize, usize> = HashMap::new();
        let mut members: Vec<Vec<(usize, u64)>> = Vec::new();
        for (i, &node) in nodes.iter().enumerate() {
            let root = uf.find(i);
            let c = *class_of_root.entry(root).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[c].push(node);
        }

        let classes: Vec<ClassInfo> = members
            .iter()
            .map(|reps| ClassInfo::describe(reps, &blocks, &self.atoms))
            .collect();
        let mut order: Vec<usize> = (0..classes.len()).collect();
        order.sort_by(|&a, &b| classes[a].sort_key.cmp(&classes[b].sort_key));
        let mut position = vec![0; classes.len()];
        for (pos, &c) in order.iter().enumerate() {
            position[c] = pos;
        }

        let rep_in_block = |c: usize, g: usize| {
            members[c]
                .iter()
                .filter(move |(b, _)| *b == g)
                .map(|(_, s)| *s)
        };
        let leq = |x: usize, y: usize| {
            let (cx, cy) = (order[x], order[y]);
            (0..blocks.len())
                .any(|g| rep_in_block(cx, g).any(|sx| rep_in_block(cy, g).any(|sy| sx & !sy == 0)))
        };
        let node_class: HashMap<(usize, u64), usize> = members
            .iter()
            .enumerate()
            .flat_map(|(c, reps)| reps.iter().map(move |&r| (r, c)))
            .collect();
        let involution: Vec<usize> = order
            .iter()
            .map(|&c| {
                let (b, s) = members[c][0];
                position[node_class[&(b, blocks[b] & !s)]]
            })
            .collect();
        let names: Vec<String> = order.iter().map(|&c| classes[c].name.clone()).collect();
        FinitePoset::from_leq(names, leq, Some(involution))
            .map_err(|e| Error::InvalidDiagram(format!("pasting is not a poset: {e}")))
    }
}

struct ClassInfo {
    name: String,
    sort_key: (u8, usize, Vec<usize>),
}

impl ClassInfo {
    fn describe(reps: &[(usize, u64)], blocks: &[u64], atoms: &[String]) -> Self {
        let bits = |m: u64| (0..64).filter(move |i| m >> i & 1 == 1);
        if reps.iter().any(|&(_, s)| s == 0) {
            return ClassInfo {
                name: "0".into(),
                sort_key: (0, 0, vec![]),
            };
        }
        if reps.iter().any(|&(b, s)| s == blocks[b]) {
            return ClassInfo {
                name: "1".into(),
                sort_key: (3, 0, vec![]),
            };
        }
        let min_size = reps
            .iter()
            .map(|(_, s)| s.count_ones() as usize)
            .min()
            .unwrap_or(0);
        if let Some(&(_, s)) = reps.iter().find(|(_, s)| s.count_ones() == 1) {
            let a = s.trailing_zeros() as usize;
            return ClassInfo {
                name: atoms[a].clone(),
                sort_key: (1, 1, vec![a]),
            };
        }
        if let Some(&(b, s)) = reps
            .iter()
            .find(|&&(b, s)| (blocks[b] & !s).count_ones() == 1)
        {
            let a = (blocks[b] & !s).trailing_zeros() as usize;
            return ClassInfo {
                name: format!("{}'", atoms[a]),
                sort_key: (2, min_size, vec![a]),
            };
        }
        let canonical = reps
            .iter()
            .map(|&(_, s)| (s.count_ones(), bits(s).collect::<Vec<_>>()))
            .min()
            .expect("class is non-empty")
            .1;
        let name = canonical
            .iter()
            .map(|&a| atoms[a].as_str())
            .collect::<Vec<_>>()
            .join("+");
        ClassInfo {
            name,
            sort_key: (1, min_size, canonical),
        }
    }
}

/// Is there a loop of exactly `k` mutually different blocks joined by
/// mutually distinct atoms?
fn has_loop(blocks: &[ElementSet], k: usize) -> bool {
    fn extend(
        blocks: &[ElementSet],
        k: usize,
        path: &mut Vec<usize>,
        used_atoms: &mut ElementSet,
    ) -> bool {
        let first = path[0];
        let last = *path.last().unwrap();
        if path.len() == k {
            let closing = blocks[last]
                .intersection(&blocks[first])
                .difference(used_atoms);
            return !closing.is_empty();
        }
        for next in first + 1..blocks.len() {
            if path.contains(&next) {
                continue;
            }
            let shared = blocks[last]
                .intersection(&blocks[next])
                .difference(used_atoms);
            for atom in &shared {
                path.push(next);
                used_atoms.insert(atom);
                if extend(blocks, k, path, used_atoms) {
                    return true;
                }
                used_atoms.remove(atom);
                path.pop();
            }
        }
        false
    }
    if k < 2 || blocks.len() < k {
        return false;
    }
    let universe = blocks.first().map_or(0, ElementSet::universe);
    // the smallest block index of the loop is taken as its start
    (0..blocks.len()).any(|start| {
        let mut path = vec![start];
        let mut used = ElementSet::empty(universe);
        extend(blocks, k, &mut path, &mut used)
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
