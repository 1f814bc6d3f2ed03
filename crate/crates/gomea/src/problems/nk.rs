//! Consecutively overlapping NK landscapes (NK-S1): ℓ−k+1 subfunctions of k
//! consecutive genes with a shift of one, plus an exact dynamic-programming
//! optimum over the sliding (k−1)-bit boundary state.

use rand::Rng;

use crate::rng::RngStream;
use crate::types::Genotype;

/// Per-subfunction weight tables. Table `i` covers genes [i, i+k) and holds
/// 2^k weights indexed by the window's genes read left-to-right as a
/// big-endian integer.
#[derive(Debug, Clone, PartialEq)]
pub struct NkTables {
    k: usize,
    tables: Vec<Vec<f64>>,
}

impl NkTables {
    pub fn new(k: usize, tables: Vec<Vec<f64>>) -> Self {
        assert!(!tables.is_empty());
        assert!(tables.iter().all(|t| t.len() == 1 << k));
        Self { k, tables }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of subfunctions, ℓ − k + 1.
    pub fn subfunction_count(&self) -> usize {
        self.tables.len()
    }

    pub fn ell(&self) -> usize {
        self.tables.len() + self.k - 1
    }

    pub fn tables(&self) -> &[Vec<f64>] {
        &self.tables
    }
}

/// Generates NK-S1 weight tables: each subfunction holds 2^k weights drawn
/// uniformly from [0, 10^6).
pub fn gen_nk_tables(ell: usize, k: usize, rng: &mut RngStream) -> NkTables {
    assert!(ell >= k, "NK-S1 requires ℓ ≥ k");
    let tables = (0..ell - k + 1)
        .map(|_| (0..1usize << k).map(|_| rng.gen::<f64>() * 1e6).collect())
        .collect();
    NkTables::new(k, tables)
}

#[inline]
fn window_index(g: &Genotype, start: usize, k: usize) -> usize {
    let mut idx = 0usize;
    for t in 0..k {
        idx = (idx << 1) | g.get(start + t) as usize;
    }
    idx
}

/// Sum of all subfunction weights selected by the genotype's windows.
pub fn eval_nk(g: &Genotype, nk: &NkTables) -> f64 {
    debug_assert_eq!(g.len(), nk.ell());
    let k = nk.k;
    let mut total = 0.0;
    for (i, table) in nk.tables.iter().enumerate() {
        total += table[window_index(g, i, k)];
    }
    total
}

/// Exact global maximizer via dynamic programming over the sliding (k−1)-bit
/// boundary state, O(ℓ·2^k). Returns an optimal genotype; the optimal value
/// is `eval_nk` of it, which reproduces the evaluator's summation order
/// exactly.
pub fn nk_optimum_genotype(nk: &NkTables) -> Genotype {
    let k = nk.k;
    let ell = nk.ell();
    let m = nk.tables.len();
    let state_count = 1usize << (k - 1);
    let state_mask = state_count - 1;

    // Window 0: best full config per boundary state (low k−1 bits).
    let mut best = vec![f64::NEG_INFINITY; state_count];
    let mut first_config = vec![0u32; state_count];
    for config in 0..1usize << k {
        let score = nk.tables[0][config];
        let state = config & state_mask;
        if score > best[state] {
            best[state] = score;
            first_config[state] = config as u32;
        }
    }

    // Windows 1..m: extend each boundary state by one new gene.
    let mut back: Vec<Vec<u32>> = Vec::with_capacity(m.saturating_sub(1));
    for table in &nk.tables[1..] {
        let mut next_best = vec![f64::NEG_INFINITY; state_count];
        let mut choice = vec![0u32; state_count];
        for (state, &score) in best.iter().enumerate() {
            if score == f64::NEG_INFINITY {
                continue;
            }
            for bit in 0..2usize {
                let config = (state << 1) | bit;
                let next_score = score + table[config];
                let next_state = config & state_mask;
                if next_score > next_best[next_state] {
                    next_best[next_state] = next_score;
                    choice[next_state] = config as u32;
                }
            }
        }
        back.push(choice);
        best = next_best;
    }

    // Reconstruct: walk back from the best final state.
    let mut state = best
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(s, _)| s)
        .unwrap();
    let mut bits = vec![0u8; ell];
    for i in (1..m).rev() {
        let config = back[i - 1][state] as usize;
        bits[i + k - 1] = (config & 1) as u8;
        state = config >> 1;
    }
    let config0 = first_config[state] as usize;
    for (t, bit) in bits.iter_mut().take(k).enumerate() {
        *bit = ((config0 >> (k - 1 - t)) & 1) as u8;
    }
    Genotype::from_bits(bits)
}

/// Exact global maximum of the instance (DP value re-evaluated through the
/// standard evaluator).
pub fn nk_optimum(nk: &NkTables) -> f64 {
    eval_nk(&nk_optimum_genotype(nk), nk)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_optimum(nk: &NkTables) -> f64 {
        let ell = nk.ell();
        assert!(ell <= 20);
        let mut best = f64::NEG_INFINITY;
        for pattern in 0..1u64 << ell {
            let bits: Vec<u8> = (0..ell).map(|t| ((pattern >> (ell - 1 - t)) & 1) as u8).collect();
            let f = eval_nk(&Genotype::from_bits(bits), nk);
            if f > best {
                best = f;
            }
        }
        best
    }

    #[test]
    fn single_table_instance_is_its_max() {
        let mut rng = RngStream::new(11);
        let nk = gen_nk_tables(5, 5, &mut rng);
        assert_eq!(nk.subfunction_count(), 1);
        assert_eq!(nk.tables()[0].len(), 32);
        let table_max = nk.tables()[0].iter().cloned().fold(f64::MIN, f64::max);
        assert_eq!(nk_optimum(&nk), table_max);
    }

    #[test]
    fn shift_one_window_layout() {
        let mut rng = RngStream::new(3);
        let nk = gen_nk_tables(6, 5, &mut rng);
        assert_eq!(nk.subfunction_count(), 2);
        // Window 0 covers genes 0..4, window 1 covers 1..5: flipping gene 0
        // never changes table-1 lookups, flipping gene 5 never changes
        // table-0 lookups.
        let a = Genotype::parse("000000");
        let b = Genotype::parse("100000");
        let delta = eval_nk(&b, &nk) - eval_nk(&a, &nk);
        assert_eq!(delta, nk.tables()[0][16] - nk.tables()[0][0]);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = gen_nk_tables(12, 5, &mut RngStream::new(99));
        let b = gen_nk_tables(12, 5, &mut RngStream::new(99));
        assert_eq!(a, b);
    }

    #[test]
    fn weights_lie_in_range() {
        let nk = gen_nk_tables(10, 5, &mut RngStream::new(1));
        for t in nk.tables() {
            assert!(t.iter().all(|&w| (0.0..1e6).contains(&w)));
        }
    }

    #[test]
    fn dp_matches_brute_force_on_small_instances() {
        for seed in 0..25 {
            let mut rng = RngStream::new(seed);
            let nk = gen_nk_tables(10, 5, &mut rng);
            assert_eq!(nk_optimum(&nk), brute_force_optimum(&nk), "seed {seed}");
        }
        for seed in 100..110 {
            let mut rng = RngStream::new(seed);
            let nk = gen_nk_tables(13, 4, &mut rng);
            assert_eq!(nk_optimum(&nk), brute_force_optimum(&nk), "seed {seed}");
        }
    }

    #[test]
    fn constant_tables_sum_exactly() {
        let m = 7;
        let c = 123.25;
        let nk = NkTables::new(5, vec![vec![c; 32]; m]);
        assert_eq!(nk_optimum(&nk), m as f64 * c);
    }
}
