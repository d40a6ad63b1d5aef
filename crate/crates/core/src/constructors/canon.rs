//! Canonical codes for small posets with involution, used to drop
//! isomorphic duplicates.
//!
//! Elements are first split into cells by iterated invariant refinement
//! (cone sizes, neighbour cells, involution partner's cell); the code is
//! the lexicographically least adjacency/involution encoding over all
//! orderings that respect the cell order.

use crate::poset::FinitePoset;

/// Encoding: row-major order bits, then the involution as positions
/// (or nothing when absent).
pub type Code = Vec<u8>;

pub fn canonical_code(p: &FinitePoset) -> Code {
    let cells = refined_cells(p);
    let mut best: Option<Code> = None;
    let mut order = Vec::with_capacity(p.len());
    search(p, &cells, 0, &mut order, &mut best);
    best.unwrap_or_default()
}

pub fn isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    p.len() == q.len()
        && p.involution().is_some() == q.involution().is_some()
        && canonical_code(p) == canonical_code(q)
}

pub(crate) fn encode(p: &FinitePoset, order: &[usize]) -> Code {
    let n = order.len();
    let mut code = Vec::with_capacity(n * n + n);
    for &x in order {
        for &y in order {
            code.push(p.leq(x, y) as u8);
        }
    }
    if let Some(inv) = p.involution() {
        let mut pos = vec![0usize; n];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        code.extend(order.iter().map(|&x| pos[inv[x]] as u8));
    }
    code
}

fn search(
    p: &FinitePoset,
    cells: &[Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut Option<Code>,
) {
    if cell == cells.len() {
        let code = encode(p, order);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    permute(
        &cells[cell],
        &mut vec![false; cells[cell].len()],
        order,
        &mut |order| search(p, cells, cell + 1, order, best),
    );
}

fn permute(
    items: &[usize],
    used: &mut [bool],
    order: &mut Vec<usize>,
    k: &mut dyn FnMut(&mut Vec<usize>),
) {
    if used.iter().all(|&u| u) {
        k(order);
        return;
    }
    for i in 0..items.len() {
        if !used[i] {
            used[i] = true;
            order.push(items[i]);
            permute(items, used, order, k);
            order.pop();
            used[i] = false;
        }
    }
}

/// Ordered partition of the carrier into invariant cells.
fn refined_cells(p: &FinitePoset) -> Vec<Vec<usize>> {
    let n = p.len();
    let inv = p.involution();
    let mut color: Vec<usize> = (0..n)
        .map(|x| {
            let fixed = inv.map_or(0, |i| (i[x] == x) as usize);
            (p.down(x).len() * (n + 1) + p.up(x).len()) * 2 + fixed
        })
        .collect();
    color = normalize(&color);
    loop {
        let signature: Vec<(usize, Vec<usize>, Vec<usize>, usize)> = (0..n)
            .map(|x| {
                let mut below: Vec<usize> = p.down(x).iter().map(|y| color[y]).collect();
                let mut above: Vec<usize> = p.up(x).iter().map(|y| color[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (color[x], below, above, inv.map_or(0, |i| color[i[x]]))
            })
            .collect();
        let next = normalize(&signature);
        let stable = distinct(&next) == distinct(&color);
        color = next;
        if stable {
            break;
        }
    }
    let k = distinct(&color);
    let mut cells = vec![Vec::new(); k];
    for (x, &c) in color.iter().enumerate() {
        cells[c].push(x);
    }
    cells
}

fn normalize<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

fn distinct(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}
