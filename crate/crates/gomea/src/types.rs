//! Foundational data types shared by every module: genotypes, individuals
//! with cached fitness, populations, and the evaluation ledger.

use thiserror::Error;

/// Raised when charging one more evaluation would exceed a finite budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("evaluation budget exhausted")]
pub struct BudgetExhausted;

/// Fixed-length binary vector; the unit of evaluation.
///
/// Length never changes after creation and every element is 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Genotype {
    bits: Vec<u8>,
}

impl Genotype {
    /// Builds a genotype from raw bits. Panics if any element is not 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "genotype bits must be 0 or 1");
        Self { bits }
    }

    /// Parses a genotype from a string of '0'/'1' characters (test fixtures).
    pub fn parse(s: &str) -> Self {
        Self::from_bits(
            s.chars()
                .map(|c| match c {
                    '0' => 0,
                    '1' => 1,
                    _ => panic!("invalid genotype character {c:?}"),
                })
                .collect(),
        )
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![0; len] }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        self.bits[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u8) {
        debug_assert!(value <= 1);
        self.bits[i] = value;
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.bits
    }

    /// Bitwise complement, used by the symmetry tests.
    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|&b| 1 - b).collect(),
        }
    }
}

/// Number of 1-bits in a genotype.
pub fn unitation(g: &Genotype) -> usize {
    g.as_slice().iter().map(|&b| b as usize).sum()
}

/// Anything that can score a genotype. Implemented by benchmark problem
/// instances and by test doubles (e.g. counting evaluators).
pub trait Problem {
    /// Problem dimensionality ℓ.
    fn len(&self) -> usize;

    /// Fitness of a genotype of length `len()`. Higher is better.
    fn fitness(&self, g: &Genotype) -> f64;
}

/// A genotype with cached fitness.
///
/// When `evaluated` is true the cached fitness equals the problem evaluator
/// applied to the genotype.
#[derive(Debug, Clone)]
pub struct Individual {
    pub genotype: Genotype,
    fitness: f64,
    evaluated: bool,
}

impl Individual {
    pub fn new(genotype: Genotype) -> Self {
        Self {
            genotype,
            fitness: f64::NAN,
            evaluated: false,
        }
    }

    pub fn evaluated(&self) -> bool {
        self.evaluated
    }

    /// Cached fitness. Panics if the individual has not been evaluated.
    pub fn fitness(&self) -> f64 {
        assert!(self.evaluated, "fitness read before evaluation");
        self.fitness
    }

    /// Replaces the genotype and invalidates the fitness cache.
    pub fn set_genotype(&mut self, genotype: Genotype) {
        self.genotype = genotype;
        self.fitness = f64::NAN;
        self.evaluated = false;
    }

    fn set_fitness(&mut self, fitness: f64) {
        self.fitness = fitness;
        self.evaluated = true;
    }
}

/// Counts fitness evaluations against an optional budget.
///
/// `used` is incremented exactly once per evaluator call and never exceeds a
/// finite budget; the increment that would exceed it raises
/// [`BudgetExhausted`] instead.
#[derive(Debug, Clone)]
pub struct EvaluationLedger {
    used: u64,
    budget: Option<u64>,
}

impl EvaluationLedger {
    /// `budget = None` means unlimited.
    pub fn new(budget: Option<u64>) -> Self {
        if let Some(b) = budget {
            assert!(b >= 1, "finite budget must be positive");
        }
        Self { used: 0, budget }
    }

    pub fn unlimited() -> Self {
        Self::new(None)
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    /// Charges one evaluation.
    pub fn charge(&mut self) -> Result<(), BudgetExhausted> {
        if let Some(b) = self.budget {
            if self.used >= b {
                return Err(BudgetExhausted);
            }
        }
        self.used += 1;
        Ok(())
    }
}

/// Evaluates an individual against a problem, charging the ledger only on a
/// cache miss. Returns the (possibly cached) fitness.
pub fn evaluate<P: Problem>(
    ind: &mut Individual,
    problem: &P,
    ledger: &mut EvaluationLedger,
) -> Result<f64, BudgetExhausted> {
    if ind.evaluated() {
        return Ok(ind.fitness());
    }
    debug_assert_eq!(ind.genotype.len(), problem.len());
    ledger.charge()?;
    let f = problem.fitness(&ind.genotype);
    ind.set_fitness(f);
    Ok(f)
}

/// Ordered list of individuals sharing one genotype length.
#[derive(Debug, Clone)]
pub struct Population {
    members: Vec<Individual>,
}

impl Population {
    pub fn new(members: Vec<Individual>) -> Self {
        assert!(members.len() >= 2, "population needs at least 2 members");
        let ell = members[0].genotype.len();
        assert!(
            members.iter().all(|m| m.genotype.len() == ell),
            "all members must share one genotype length"
        );
        Self { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Genotype length ℓ shared by all members.
    pub fn genotype_len(&self) -> usize {
        self.members[0].genotype.len()
    }

    pub fn member(&self, i: usize) -> &Individual {
        &self.members[i]
    }

    pub fn member_mut(&mut self, i: usize) -> &mut Individual {
        &mut self.members[i]
    }

    pub fn members(&self) -> &[Individual] {
        &self.members
    }

    pub fn members_mut(&mut self) -> &mut [Individual] {
        &mut self.members
    }

    /// Per-locus count of ones across the population (the gene-invariance
    /// observable).
    pub fn ones_per_locus(&self) -> Vec<usize> {
        let ell = self.genotype_len();
        let mut counts = vec![0usize; ell];
        for m in &self.members {
            for (i, c) in counts.iter_mut().enumerate() {
                *c += m.genotype.get(i) as usize;
            }
        }
        counts
    }

    /// True when every genotype is identical (GOMEA's stall condition).
    pub fn converged(&self) -> bool {
        self.members[1..]
            .iter()
            .all(|m| m.genotype == self.members[0].genotype)
    }
}
