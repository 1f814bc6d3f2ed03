//! The benchmark-problem suite: exact fitness functions, instance
//! generators, value-to-reach oracles, and per-problem weighted-VIG DSM
//! suppliers.

mod hierarchical;
pub mod io;
mod maxcut;
mod nk;
mod trap;

pub use hierarchical::{eval_asymhtrapk, eval_hiff, eval_htrapk, exact_log, shared_levels, Symbol};
pub use maxcut::{
    eval_maxcut, exhaustive_optimum, gen_maxcut_full, gen_maxcut_geo, EdgeWeights, MaxCutFlavor,
    EXHAUSTIVE_VTR_LIMIT,
};
pub use nk::{eval_nk, gen_nk_tables, nk_optimum, nk_optimum_genotype, NkTables};
pub use trap::{
    asymtrap_sub, bimtrap_sub, eval_asymtrapk, eval_bimtrapk, eval_trapk, trap_sub,
};

use thiserror::Error;

use crate::linkage::Dsm;
use crate::rng::RngStream;
use crate::types::{Genotype, Problem};

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("k={k} must divide ℓ={ell}")]
    BlockMismatch { ell: usize, k: usize },
    #[error("ℓ={ell} must be an exact power of {base}")]
    NotPowerOf { ell: usize, base: usize },
    #[error("ℓ={ell} must be at least {min}")]
    TooSmall { ell: usize, min: usize },
    #[error("k={k} is invalid for {kind:?}")]
    InvalidK { kind: ProblemKind, k: usize },
    #[error("{kind:?} does not define a weighted VIG")]
    UnsupportedVig { kind: ProblemKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Trap,
    HTrap,
    Hiff,
    BimTrap,
    AsymTrap,
    AsymHTrap,
    NkS1,
    MaxCut,
}

#[derive(Debug, Clone)]
enum Payload {
    None,
    Nk(NkTables),
    MaxCut {
        flavor: MaxCutFlavor,
        weights: EdgeWeights,
    },
}

/// An evaluatable benchmark instance: kind, dimensionality, instance data,
/// and the value-to-reach that defines success.
///
/// Immutable after construction; safe for concurrent reads by parallel runs.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    kind: ProblemKind,
    ell: usize,
    k: Option<usize>,
    payload: Payload,
    vtr: Option<f64>,
    seed: Option<u64>,
}

impl ProblemInstance {
    pub fn trap(ell: usize, k: usize) -> Result<Self, ProblemError> {
        Self::block_problem(ProblemKind::Trap, ell, k)
    }

    pub fn bimtrap(ell: usize, k: usize) -> Result<Self, ProblemError> {
        if k % 2 != 0 {
            return Err(ProblemError::InvalidK {
                kind: ProblemKind::BimTrap,
                k,
            });
        }
        Self::block_problem(ProblemKind::BimTrap, ell, k)
    }

    pub fn asymtrap(ell: usize, k: usize) -> Result<Self, ProblemError> {
        Self::block_problem(ProblemKind::AsymTrap, ell, k)
    }

    fn block_problem(kind: ProblemKind, ell: usize, k: usize) -> Result<Self, ProblemError> {
        if k < 2 {
            return Err(ProblemError::InvalidK { kind, k });
        }
        if ell == 0 || ell % k != 0 {
            return Err(ProblemError::BlockMismatch { ell, k });
        }
        Ok(Self {
            kind,
            ell,
            k: Some(k),
            payload: Payload::None,
            vtr: Some((ell / k) as f64),
            seed: None,
        })
    }

    pub fn htrap(ell: usize, k: usize) -> Result<Self, ProblemError> {
        if k < 2 {
            return Err(ProblemError::InvalidK {
                kind: ProblemKind::HTrap,
                k,
            });
        }
        let depth = exact_log(ell, k).ok_or(ProblemError::NotPowerOf { ell, base: k })?;
        Ok(Self {
            kind: ProblemKind::HTrap,
            ell,
            k: Some(k),
            payload: Payload::None,
            vtr: Some((ell * depth) as f64),
            seed: None,
        })
    }

    pub fn asymhtrap(ell: usize, k: usize) -> Result<Self, ProblemError> {
        if k < 2 {
            return Err(ProblemError::InvalidK {
                kind: ProblemKind::AsymHTrap,
                k,
            });
        }
        let depth = exact_log(ell, k).ok_or(ProblemError::NotPowerOf { ell, base: k })?;
        Ok(Self {
            kind: ProblemKind::AsymHTrap,
            ell,
            k: Some(k),
            payload: Payload::None,
            vtr: Some((ell * depth) as f64),
            seed: None,
        })
    }

    pub fn hiff(ell: usize) -> Result<Self, ProblemError> {
        let depth = exact_log(ell, 2).ok_or(ProblemError::NotPowerOf { ell, base: 2 })?;
        Ok(Self {
            kind: ProblemKind::Hiff,
            ell,
            k: Some(2),
            payload: Payload::None,
            vtr: Some((ell * (depth + 1)) as f64),
            seed: None,
        })
    }

    /// Generates an NK-S1 instance: ℓ−k+1 subfunctions with a shift of one;
    /// the VTR is the exact dynamic-programming optimum.
    pub fn nks1(ell: usize, k: usize, seed: u64) -> Result<Self, ProblemError> {
        if k < 2 || k > 20 {
            return Err(ProblemError::InvalidK {
                kind: ProblemKind::NkS1,
                k,
            });
        }
        if ell < k {
            return Err(ProblemError::TooSmall { ell, min: k });
        }
        let mut rng = RngStream::new(seed);
        let tables = gen_nk_tables(ell, k, &mut rng);
        let vtr = nk_optimum(&tables);
        Ok(Self {
            kind: ProblemKind::NkS1,
            ell,
            k: Some(k),
            payload: Payload::Nk(tables),
            vtr: Some(vtr),
            seed: Some(seed),
        })
    }

    /// Rebuilds an NK-S1 instance from stored tables (instance-file loading).
    pub fn nks1_from_tables(
        tables: NkTables,
        seed: Option<u64>,
        vtr: Option<f64>,
    ) -> Self {
        let ell = tables.ell();
        let k = tables.k();
        Self {
            kind: ProblemKind::NkS1,
            ell,
            k: Some(k),
            payload: Payload::Nk(tables),
            vtr,
            seed,
        }
    }

    /// Generates a MaxCut instance of the given flavor. The VTR is the exact
    /// optimum for ℓ ≤ 24 and absent otherwise (to be settled and recorded in
    /// the instance file).
    pub fn maxcut(flavor: MaxCutFlavor, ell: usize, seed: u64) -> Result<Self, ProblemError> {
        if ell < 2 {
            return Err(ProblemError::TooSmall { ell, min: 2 });
        }
        let mut rng = RngStream::new(seed);
        let weights = match flavor {
            MaxCutFlavor::Full => gen_maxcut_full(ell, &mut rng),
            MaxCutFlavor::Geo => gen_maxcut_geo(ell, &mut rng),
        };
        let vtr = (ell <= EXHAUSTIVE_VTR_LIMIT).then(|| exhaustive_optimum(&weights).0);
        Ok(Self {
            kind: ProblemKind::MaxCut,
            ell,
            k: None,
            payload: Payload::MaxCut { flavor, weights },
            vtr,
            seed: Some(seed),
        })
    }

    /// Rebuilds a MaxCut instance from stored edge weights.
    pub fn maxcut_from_weights(
        flavor: MaxCutFlavor,
        weights: EdgeWeights,
        seed: Option<u64>,
        vtr: Option<f64>,
    ) -> Self {
        let ell = weights.vertex_count();
        Self {
            kind: ProblemKind::MaxCut,
            ell,
            k: None,
            payload: Payload::MaxCut { flavor, weights },
            vtr,
            seed,
        }
    }

    pub fn kind(&self) -> ProblemKind {
        self.kind
    }

    /// Block / subfunction size, where applicable (2 for HIFF).
    pub fn k(&self) -> Option<usize> {
        self.k
    }

    /// Value-to-reach; `None` only for generated MaxCut instances above the
    /// exhaustive limit that have not been settled yet.
    pub fn vtr(&self) -> Option<f64> {
        self.vtr
    }

    /// Overrides the recorded value-to-reach (instance settling).
    pub fn set_vtr(&mut self, vtr: f64) {
        self.vtr = Some(vtr);
    }

    /// Seed the instance payload was generated from, when it has one.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn nk_tables(&self) -> Option<&NkTables> {
        match &self.payload {
            Payload::Nk(t) => Some(t),
            _ => None,
        }
    }

    pub fn maxcut_weights(&self) -> Option<(&EdgeWeights, MaxCutFlavor)> {
        match &self.payload {
            Payload::MaxCut { flavor, weights } => Some((weights, *flavor)),
            _ => None,
        }
    }

    /// Short problem name used in result tables, e.g. `trap5`, `maxcut-geo`.
    pub fn label(&self) -> String {
        match self.kind {
            ProblemKind::Trap => format!("trap{}", self.k.unwrap()),
            ProblemKind::HTrap => format!("htrap{}", self.k.unwrap()),
            ProblemKind::Hiff => "hiff".to_string(),
            ProblemKind::BimTrap => format!("bimtrap{}", self.k.unwrap()),
            ProblemKind::AsymTrap => format!("asymtrap{}", self.k.unwrap()),
            ProblemKind::AsymHTrap => format!("asymhtrap{}", self.k.unwrap()),
            ProblemKind::NkS1 => "nks1".to_string(),
            ProblemKind::MaxCut => match &self.payload {
                Payload::MaxCut {
                    flavor: MaxCutFlavor::Full,
                    ..
                } => "maxcut-full".to_string(),
                _ => "maxcut-geo".to_string(),
            },
        }
    }

    /// Weighted-VIG dependency matrix for this instance.
    ///
    /// Trap-family problems use a constant 1 for every in-block pair;
    /// hierarchical problems use k^(q−1) with q the number of tree levels in
    /// which the pair shares a subfunction; NK-S1 counts shared subfunctions;
    /// MaxCut uses the absolute edge weights.
    pub fn wvig_dsm(&self) -> Result<Dsm, ProblemError> {
        let ell = self.ell;
        let mut dsm = Dsm::zeros(ell);
        match self.kind {
            ProblemKind::Trap | ProblemKind::BimTrap | ProblemKind::AsymTrap => {
                let k = self.k.unwrap();
                for i in 0..ell {
                    for j in i + 1..ell {
                        if i / k == j / k {
                            dsm.set(i, j, 1.0);
                        }
                    }
                }
            }
            ProblemKind::HTrap | ProblemKind::AsymHTrap | ProblemKind::Hiff => {
                let k = self.k.unwrap();
                for i in 0..ell {
                    for j in i + 1..ell {
                        let q = shared_levels(i, j, ell, k);
                        if q > 0 {
                            dsm.set(i, j, (k as f64).powi(q as i32 - 1));
                        }
                    }
                }
            }
            ProblemKind::NkS1 => {
                let k = self.k.unwrap();
                let m = ell - k + 1;
                for i in 0..ell {
                    for j in i + 1..ell {
                        // Windows covering both i and j (i < j): w ≤ i and
                        // j ≤ w + k − 1, clamped to [0, m).
                        if j - i < k {
                            let lo = j.saturating_sub(k - 1);
                            let hi = i.min(m - 1);
                            if hi >= lo {
                                dsm.set(i, j, (hi - lo + 1) as f64);
                            }
                        }
                    }
                }
            }
            ProblemKind::MaxCut => {
                let (weights, _) = self.maxcut_weights().unwrap();
                for (i, j, w) in weights.edges() {
                    dsm.set(i, j, w.abs());
                }
            }
        }
        Ok(dsm)
    }
}

impl Problem for ProblemInstance {
    fn len(&self) -> usize {
        self.ell
    }

    fn fitness(&self, g: &Genotype) -> f64 {
        match (&self.kind, &self.payload) {
            (ProblemKind::Trap, _) => eval_trapk(g, self.k.unwrap()),
            (ProblemKind::HTrap, _) => eval_htrapk(g, self.k.unwrap()),
            (ProblemKind::Hiff, _) => eval_hiff(g),
            (ProblemKind::BimTrap, _) => eval_bimtrapk(g, self.k.unwrap()),
            (ProblemKind::AsymTrap, _) => eval_asymtrapk(g, self.k.unwrap()),
            (ProblemKind::AsymHTrap, _) => eval_asymhtrapk(g, self.k.unwrap()),
            (ProblemKind::NkS1, Payload::Nk(tables)) => eval_nk(g, tables),
            (ProblemKind::MaxCut, Payload::MaxCut { weights, .. }) => eval_maxcut(g, weights),
            _ => unreachable!("payload mismatch"),
        }
    }
}
