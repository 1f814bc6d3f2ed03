//! Hierarchical problems evaluated over a symbol tree: HTrapK, HIFF, and
//! AsymHTrapK.
//!
//! The lowest level of the tree holds the genes; each level above maps groups
//! of `k` symbols to one symbol of {0, 1, '-'}, and every group at every level
//! contributes to the fitness with weight k^h (h = 1 at the lowest level).

use crate::types::Genotype;

/// Ternary symbol used inside hierarchical evaluation; `Null` is the
/// undefined symbol '-'. Any group containing it contributes 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    Zero,
    One,
    Null,
}

impl Symbol {
    fn from_bit(b: u8) -> Self {
        if b == 1 {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }
}

/// Returns d ≥ 1 with base^d = n, if it exists.
pub fn exact_log(n: usize, base: usize) -> Option<usize> {
    debug_assert!(base >= 2);
    let mut value = base;
    let mut d = 1;
    while value < n {
        value = value.checked_mul(base)?;
        d += 1;
    }
    (value == n).then_some(d)
}

fn group_unitation(group: &[Symbol]) -> Option<usize> {
    let mut u = 0;
    for &s in group {
        match s {
            Symbol::One => u += 1,
            Symbol::Zero => {}
            Symbol::Null => return None,
        }
    }
    Some(u)
}

/// Hierarchical trap: ℓ must be an exact power of k. Groups of k identical
/// symbols map upward; mixed groups map to '-'. A group at height h scores
/// k^h · g where g is 1 at u = k, 0 on '-', and w(h)·(k−u−1)/(k−1) otherwise
/// with w = 0.9 at the top-most level and 1 elsewhere.
pub fn eval_htrapk(g: &Genotype, k: usize) -> f64 {
    let depth = exact_log(g.len(), k).expect("HTrap requires ℓ = k^D");
    let mut symbols: Vec<Symbol> = g.as_slice().iter().map(|&b| Symbol::from_bit(b)).collect();
    let mut total = 0.0;
    let mut weight = 1.0;
    for h in 1..=depth {
        weight *= k as f64;
        let w = if h == depth { 0.9 } else { 1.0 };
        let mut next = Vec::with_capacity(symbols.len() / k);
        for group in symbols.chunks(k) {
            total += weight * htrap_group_score(group, k, w);
            next.push(merge_uniform(group));
        }
        symbols = next;
    }
    total
}

fn htrap_group_score(group: &[Symbol], k: usize, w: f64) -> f64 {
    match group_unitation(group) {
        None => 0.0,
        Some(u) if u == k => 1.0,
        Some(u) => w * (k - u - 1) as f64 / (k - 1) as f64,
    }
}

fn merge_uniform(group: &[Symbol]) -> Symbol {
    let first = group[0];
    if first != Symbol::Null && group.iter().all(|&s| s == first) {
        first
    } else {
        Symbol::Null
    }
}

/// Hierarchical if-and-only-if: ℓ must be a power of two. Every node of the
/// full binary tree (leaves included) covering a block of size s contributes
/// s when all covered bits are equal; the optimum is ℓ·(log₂ℓ + 1).
pub fn eval_hiff(g: &Genotype) -> f64 {
    exact_log(g.len(), 2).expect("HIFF requires ℓ = 2^D");
    // Leaves: a single bit is trivially uniform.
    let mut total = g.len() as f64;
    let mut symbols: Vec<Symbol> = g.as_slice().iter().map(|&b| Symbol::from_bit(b)).collect();
    let mut size = 1usize;
    while symbols.len() > 1 {
        size *= 2;
        let mut next = Vec::with_capacity(symbols.len() / 2);
        for pair in symbols.chunks(2) {
            let merged = merge_uniform(pair);
            if merged != Symbol::Null {
                total += size as f64;
            }
            next.push(merged);
        }
        symbols = next;
    }
    total
}

/// Asymmetric hierarchical trap: ℓ must be an exact power of k. The optimal
/// block is one 0 followed by ones; it maps to 0 when the group is the first
/// child of its parent group and to 1 otherwise, so stacked optimal blocks
/// reproduce the optimal pattern at every level. All-zero groups map to 0 and
/// anything else to '-'. Every group at height h scores k^h · g per the
/// asymmetric subfunction with the 0.9 factor at every level.
pub fn eval_asymhtrapk(g: &Genotype, k: usize) -> f64 {
    let depth = exact_log(g.len(), k).expect("AsymHTrap requires ℓ = k^D");
    let mut symbols: Vec<Symbol> = g.as_slice().iter().map(|&b| Symbol::from_bit(b)).collect();
    let mut total = 0.0;
    let mut weight = 1.0;
    for _h in 1..=depth {
        weight *= k as f64;
        let mut next = Vec::with_capacity(symbols.len() / k);
        for (index, group) in symbols.chunks(k).enumerate() {
            total += weight * asym_group_score(group, k);
            next.push(asym_merge(group, index, k));
        }
        symbols = next;
    }
    total
}

fn is_asym_optimal(group: &[Symbol], k: usize) -> bool {
    group[0] == Symbol::Zero && group_unitation(group) == Some(k - 1)
}

fn asym_group_score(group: &[Symbol], k: usize) -> f64 {
    match group_unitation(group) {
        None => 0.0,
        Some(_) if is_asym_optimal(group, k) => 1.0,
        Some(u) => 0.9 * (k - u) as f64 / k as f64,
    }
}

fn asym_merge(group: &[Symbol], index: usize, k: usize) -> Symbol {
    if group.iter().all(|&s| s == Symbol::Zero) {
        Symbol::Zero
    } else if is_asym_optimal(group, k) {
        // First child of its parent group maps to 0, the rest to 1.
        if index % k == 0 {
            Symbol::Zero
        } else {
            Symbol::One
        }
    } else {
        Symbol::Null
    }
}

/// Number of tree levels (heights 1..=D, block size k^h) at which variables
/// `i` and `j` fall inside the same block. Drives the hierarchical wvigDSM
/// fill k^(q−1).
pub fn shared_levels(i: usize, j: usize, ell: usize, k: usize) -> usize {
    let depth = exact_log(ell, k).expect("ℓ must be a power of k");
    let mut q = 0;
    let mut block = 1usize;
    for _h in 1..=depth {
        block *= k;
        if i / block == j / block {
            q += 1;
        }
    }
    q
}
