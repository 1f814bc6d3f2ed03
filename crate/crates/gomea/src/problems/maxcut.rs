//! Fully connected MaxCut instances: Beta(100,1)-weighted (Full) and floored
//! Euclidean distances of random points (Geo), plus an exhaustive optimum for
//! small dimensionalities.

use rand::Rng;

use crate::rng::RngStream;
use crate::types::Genotype;

pub const EXHAUSTIVE_VTR_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaxCutFlavor {
    Full,
    Geo,
}

/// Symmetric edge weights for a fully connected graph, stored as the upper
/// triangle (i < j).
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeWeights {
    n: usize,
    weights: Vec<f64>,
}

impl EdgeWeights {
    pub fn new(n: usize, weights: Vec<f64>) -> Self {
        assert!(n >= 2);
        assert_eq!(weights.len(), n * (n - 1) / 2);
        Self { n, weights }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    fn offset(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        if i < j {
            self.weights[self.offset(i, j)]
        } else {
            self.weights[self.offset(j, i)]
        }
    }

    /// Upper-triangle edges in (i, j) lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (i + 1..self.n).map(move |j| (i, j, self.weight(i, j)))
        })
    }
}

/// MaxCut-Full weights: 1 + 4·b with b ~ Beta(100, 1), sampled by inverse
/// CDF u^(1/100); every weight lies in [1, 5].
pub fn gen_maxcut_full(ell: usize, rng: &mut RngStream) -> EdgeWeights {
    assert!(ell >= 2);
    let weights = (0..ell * (ell - 1) / 2)
        .map(|_| 1.0 + 4.0 * rng.gen::<f64>().powf(1.0 / 100.0))
        .collect();
    EdgeWeights::new(ell, weights)
}

/// MaxCut-Geo weights: ℓ points uniform in a 1000×1000 square; the weight of
/// each edge is the floored Euclidean distance between its endpoints.
pub fn gen_maxcut_geo(ell: usize, rng: &mut RngStream) -> EdgeWeights {
    assert!(ell >= 2);
    let points: Vec<(f64, f64)> = (0..ell)
        .map(|_| (rng.gen::<f64>() * 1000.0, rng.gen::<f64>() * 1000.0))
        .collect();
    let mut weights = Vec::with_capacity(ell * (ell - 1) / 2);
    for i in 0..ell {
        for j in i + 1..ell {
            let dx = points[i].0 - points[j].0;
            let dy = points[i].1 - points[j].1;
            weights.push((dx * dx + dy * dy).sqrt().floor());
        }
    }
    EdgeWeights::new(ell, weights)
}

/// Cut value: sum of weights of edges whose endpoints lie in different sets.
pub fn eval_maxcut(g: &Genotype, w: &EdgeWeights) -> f64 {
    debug_assert_eq!(g.len(), w.n);
    let bits = g.as_slice();
    let mut total = 0.0;
    let mut idx = 0;
    for i in 0..w.n {
        for j in i + 1..w.n {
            if bits[i] != bits[j] {
                total += w.weights[idx];
            }
            idx += 1;
        }
    }
    total
}

/// Exhaustive maximum cut for ℓ ≤ 24 via Gray-code enumeration with vertex 0
/// fixed (cut values are complement-invariant). Candidates within a small
/// margin of the running best are re-scored through `eval_maxcut` so the
/// returned value matches the evaluator bit-exactly.
pub fn exhaustive_optimum(w: &EdgeWeights) -> (f64, Genotype) {
    let n = w.n;
    assert!(n <= EXHAUSTIVE_VTR_LIMIT, "exhaustive MaxCut limited to ℓ ≤ 24");
    let mut side = vec![0u8; n];
    let mut best_value = 0.0; // all-same assignment cuts nothing
    let mut best_side = side.clone();
    let mut running = 0.0f64;
    const MARGIN: f64 = 1e-5;
    for step in 1u64..1u64 << (n - 1) {
        let v = step.trailing_zeros() as usize + 1;
        // Flipping v toggles every edge at v: cut edges leave, uncut enter.
        let mut delta = 0.0;
        for u in 0..n {
            if u != v {
                let wt = w.weight(u.min(v), u.max(v));
                if side[u] == side[v] {
                    delta += wt;
                } else {
                    delta -= wt;
                }
            }
        }
        running += delta;
        side[v] ^= 1;
        if running >= best_value - MARGIN {
            let exact = eval_maxcut(&Genotype::from_bits(side.clone()), w);
            if exact > best_value {
                best_value = exact;
                best_side.copy_from_slice(&side);
            }
        }
    }
    (best_value, Genotype::from_bits(best_side))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> EdgeWeights {
        // w01=1, w02=2, w12=3
        EdgeWeights::new(3, vec![1.0, 2.0, 3.0])
    }

    #[test]
    fn empty_cut_when_all_bits_equal() {
        let w = triangle();
        assert_eq!(eval_maxcut(&Genotype::parse("000"), &w), 0.0);
        assert_eq!(eval_maxcut(&Genotype::parse("111"), &w), 0.0);
    }

    #[test]
    fn triangle_cut_values() {
        let w = triangle();
        assert_eq!(eval_maxcut(&Genotype::parse("011"), &w), 3.0);
        assert_eq!(eval_maxcut(&Genotype::parse("001"), &w), 5.0);
        assert_eq!(eval_maxcut(&Genotype::parse("010"), &w), 4.0);
    }

    #[test]
    fn cut_is_complement_invariant() {
        let w = gen_maxcut_full(9, &mut RngStream::new(4));
        let mut rng = RngStream::new(77);
        for _ in 0..50 {
            let bits: Vec<u8> = (0..9).map(|_| rng.gen_range(0..2u8)).collect();
            let g = Genotype::from_bits(bits);
            assert_eq!(eval_maxcut(&g, &w), eval_maxcut(&g.complement(), &w));
        }
    }

    #[test]
    fn full_weights_lie_in_range() {
        let w = gen_maxcut_full(20, &mut RngStream::new(8));
        for (_, _, wt) in w.edges() {
            assert!((1.0..=5.0).contains(&wt), "weight {wt} outside [1,5]");
        }
    }

    #[test]
    fn geo_distances_floor() {
        // Coincident points → 0; (0,0)–(3,4) → 5.
        let w = EdgeWeights::new(2, vec![((3.0f64).powi(2) + (4.0f64).powi(2)).sqrt().floor()]);
        assert_eq!(w.weight(0, 1), 5.0);
        let geo = gen_maxcut_geo(12, &mut RngStream::new(5));
        for (_, _, wt) in geo.edges() {
            assert_eq!(wt, wt.floor());
            assert!((0.0..1415.0).contains(&wt));
        }
    }

    #[test]
    fn generation_is_deterministic() {
        assert_eq!(
            gen_maxcut_geo(10, &mut RngStream::new(21)),
            gen_maxcut_geo(10, &mut RngStream::new(21))
        );
        assert_eq!(
            gen_maxcut_full(10, &mut RngStream::new(22)),
            gen_maxcut_full(10, &mut RngStream::new(22))
        );
    }

    fn brute_force_optimum(w: &EdgeWeights) -> f64 {
        let n = w.vertex_count();
        let mut best = f64::NEG_INFINITY;
        for pattern in 0..1u32 << n {
            let bits: Vec<u8> = (0..n).map(|t| ((pattern >> t) & 1) as u8).collect();
            best = best.max(eval_maxcut(&Genotype::from_bits(bits), w));
        }
        best
    }

    #[test]
    fn exhaustive_optimum_matches_plain_enumeration() {
        for seed in 0..8 {
            let w = gen_maxcut_full(10, &mut RngStream::new(seed));
            let (value, genotype) = exhaustive_optimum(&w);
            assert_eq!(value, brute_force_optimum(&w), "full seed {seed}");
            assert_eq!(eval_maxcut(&genotype, &w), value);

            let w = gen_maxcut_geo(10, &mut RngStream::new(seed));
            let (value, genotype) = exhaustive_optimum(&w);
            assert_eq!(value, brute_force_optimum(&w), "geo seed {seed}");
            assert_eq!(eval_maxcut(&genotype, &w), value);
        }
    }
}
