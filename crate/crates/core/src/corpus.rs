//! Seeded corpus of random monomial ideals.
//!
//! The stream is a pure function of `(seed, params)`. It draws from
//! ChaCha8 seeded with `seed_from_u64(seed)`, and every bounded draw is
//! `next_u64() % bound`. For each ideal: the variable count is
//! `1 + draw(max_vars)`, the generator count is `1 + draw(max_gens)`, and
//! each generator is an exponent vector with entries `draw(max_deg + 1)`,
//! redrawn while it is the zero vector. The generators are then
//! minimalized. Left ideals use variables `x1, x2, ...` and right ideals use
//! `y1, y2, ...`. A pair draws its left ideal first.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::ring::Ring;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorpusParams {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_deg: u32,
}

impl CorpusParams {
    pub fn new(max_vars: usize, max_gens: usize, max_deg: u32) -> Result<Self> {
        if max_vars == 0 || max_gens == 0 || max_deg == 0 {
            return Err(Error::InvalidParameter(
                "corpus needs max-vars, max-gens and max-deg of at least 1".into(),
            ));
        }
        Ok(CorpusParams {
            max_vars,
            max_gens,
            max_deg,
        })
    }
}

pub struct Corpus {
    rng: ChaCha8Rng,
    params: CorpusParams,
}

impl Corpus {
    pub fn new(seed: u64, params: CorpusParams) -> Self {
        Corpus {
            rng: ChaCha8Rng::seed_from_u64(seed),
            params,
        }
    }

    fn draw(&mut self, bound: u64) -> u64 {
        self.rng.next_u64() % bound
    }

    fn ideal_with_prefix(&mut self, prefix: &str) -> MonomialIdeal {
        loop {
            let nvars = 1 + self.draw(self.params.max_vars as u64) as usize;
            let ngens = 1 + self.draw(self.params.max_gens as u64) as usize;
            let names: Vec<String> = (1..=nvars).map(|i| format!("{prefix}{i}")).collect();
            let ring = Ring::new(&names).expect("generated names are distinct");
            let mut gens = Vec::with_capacity(ngens);
            for _ in 0..ngens {
                let exps = loop {
                    let e: Vec<u32> = (0..nvars)
                        .map(|_| self.draw(self.params.max_deg as u64 + 1) as u32)
                        .collect();
                    if e.iter().any(|&x| x > 0) {
                        break e;
                    }
                };
                gens.push(Monomial::new(exps));
            }
            let ideal = MonomialIdeal::from_trusted(ring, gens);
            if ideal.is_proper_nonzero() {
                return ideal;
            }
        }
    }

    /// Next single ideal, in variables `x1, x2, ...`.
    pub fn next_ideal(&mut self) -> MonomialIdeal {
        self.ideal_with_prefix("x")
    }

    /// Next pair on disjoint variable blocks.
    pub fn next_pair(&mut self) -> (MonomialIdeal, MonomialIdeal) {
        let left = self.ideal_with_prefix("x");
        let right = self.ideal_with_prefix("y");
        (left, right)
    }

    pub fn pairs(
        seed: u64,
        params: CorpusParams,
        count: usize,
    ) -> Vec<(MonomialIdeal, MonomialIdeal)> {
        let mut c = Corpus::new(seed, params);
        (0..count).map(|_| c.next_pair()).collect()
    }

    pub fn ideals(seed: u64, params: CorpusParams, count: usize) -> Vec<MonomialIdeal> {
        let mut c = Corpus::new(seed, params);
        (0..count).map(|_| c.next_ideal()).collect()
    }
}
