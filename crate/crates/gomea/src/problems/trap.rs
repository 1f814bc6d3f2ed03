//! Concatenated trap subfunctions: deceptive, bimodal, and asymmetric.

use crate::types::Genotype;

/// Deceptive trap subfunction over a block of size `k`: 1 at the all-ones
/// optimum, otherwise (k − u − 1) / k, which rewards walking away from it.
pub fn trap_sub(u: usize, k: usize) -> f64 {
    debug_assert!(u <= k);
    if u == k {
        1.0
    } else {
        (k - u - 1) as f64 / k as f64
    }
}

/// Bimodal trap subfunction: optima at u = 0 and u = k (k even), local
/// optimum at the balanced centre, 0 next to either optimum.
pub fn bimtrap_sub(u: usize, k: usize) -> f64 {
    debug_assert!(u <= k && k % 2 == 0);
    if u == 0 || u == k {
        1.0
    } else {
        let spread = (2 * u as i64 - k as i64).abs();
        (k as i64 - spread - 2) as f64 / k as f64
    }
}

/// Asymmetric trap subfunction over a block: 1 when the block is one 0
/// followed by all ones; otherwise (k − u) / (k + 1), which sends the former
/// all-ones optimum to 0.
pub fn asymtrap_sub(block: &[u8]) -> f64 {
    let k = block.len();
    let u: usize = block.iter().map(|&b| b as usize).sum();
    if u == k - 1 && block[0] == 0 {
        1.0
    } else {
        (k - u) as f64 / (k + 1) as f64
    }
}

/// Sum of [`trap_sub`] over consecutive non-overlapping blocks of size `k`.
pub fn eval_trapk(g: &Genotype, k: usize) -> f64 {
    block_sum(g, k, |block| {
        let u = block.iter().map(|&b| b as usize).sum();
        trap_sub(u, k)
    })
}

/// Sum of [`bimtrap_sub`] over consecutive non-overlapping blocks of size `k`.
pub fn eval_bimtrapk(g: &Genotype, k: usize) -> f64 {
    block_sum(g, k, |block| {
        let u = block.iter().map(|&b| b as usize).sum();
        bimtrap_sub(u, k)
    })
}

/// Sum of [`asymtrap_sub`] over consecutive non-overlapping blocks of size `k`.
pub fn eval_asymtrapk(g: &Genotype, k: usize) -> f64 {
    block_sum(g, k, asymtrap_sub)
}

fn block_sum(g: &Genotype, k: usize, sub: impl Fn(&[u8]) -> f64) -> f64 {
    debug_assert!(k >= 1 && g.len() % k == 0);
    g.as_slice().chunks(k).map(sub).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trap_sub_table() {
        assert_eq!(trap_sub(5, 5), 1.0);
        assert_eq!(trap_sub(0, 5), 0.8);
        assert_eq!(trap_sub(4, 5), 0.0);
    }

    #[test]
    fn trap5_block_sums() {
        assert_eq!(eval_trapk(&Genotype::parse("1111111111"), 5), 2.0);
        assert_eq!(eval_trapk(&Genotype::parse("0000000000"), 5), 1.6);
        assert_eq!(eval_trapk(&Genotype::parse("1111100000"), 5), 1.8);
    }

    #[test]
    fn bimtrap_sub_table() {
        assert_eq!(bimtrap_sub(0, 10), 1.0);
        assert_eq!(bimtrap_sub(10, 10), 1.0);
        assert_eq!(bimtrap_sub(5, 10), 0.8);
        assert_eq!(bimtrap_sub(1, 10), 0.0);
    }

    #[test]
    fn asymtrap_sub_table() {
        assert_eq!(asymtrap_sub(&[0, 1, 1, 1, 1]), 1.0);
        assert_eq!(asymtrap_sub(&[1, 1, 1, 1, 1]), 0.0);
        assert_eq!(asymtrap_sub(&[0, 0, 0, 0, 0]), 5.0 / 6.0);
        // u = k−1 but the zero is not in the first location.
        assert_eq!(asymtrap_sub(&[1, 1, 1, 1, 0]), 1.0 / 6.0);
    }

    #[test]
    fn subfunction_outputs_stay_in_unit_interval() {
        for k in [2usize, 4, 5, 6, 8, 10] {
            for u in 0..=k {
                let t = trap_sub(u, k);
                assert!((0.0..=1.0).contains(&t), "trap_sub({u},{k}) = {t}");
                if k % 2 == 0 {
                    let b = bimtrap_sub(u, k);
                    assert!((0.0..=1.0).contains(&b), "bimtrap_sub({u},{k}) = {b}");
                }
            }
            // Asymmetric trap over every block pattern of size k (k ≤ 10).
            for pattern in 0..(1u32 << k) {
                let block: Vec<u8> = (0..k).map(|t| ((pattern >> (k - 1 - t)) & 1) as u8).collect();
                let a = asymtrap_sub(&block);
                assert!((0.0..=1.0).contains(&a), "asymtrap_sub({block:?}) = {a}");
            }
        }
    }

    #[test]
    fn trap_attractor_is_complement_of_optimum() {
        // The best non-optimal unitation is u = 0: the deceptive attractor is
        // the complement of the all-ones block optimum.
        for k in [3usize, 5, 8] {
            let best_sub_optimal = (0..k).map(|u| trap_sub(u, k)).fold(f64::MIN, f64::max);
            assert_eq!(best_sub_optimal, trap_sub(0, k));
        }
    }
}
