//! Number theory for Z_n: generators, Euler's totient and primality.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The cyclic group Z_n together with its generator set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicGroup {
    order: u64,
    generators: Vec<u64>,
    is_prime_order: bool,
}

impl CyclicGroup {
    /// Describes Z_n. The generators are the residues in `[1, n)` coprime to `n`,
    /// in ascending order.
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::TrivialGroup(n));
        }
        let generators: Vec<u64> = (1..n).filter(|k| k.gcd(&n) == 1).collect();
        let is_prime_order = generators.len() as u64 == n - 1;
        Ok(Self {
            order: n,
            generators,
            is_prime_order,
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn generator_count(&self) -> u64 {
        self.generators.len() as u64
    }

    /// Number of non-generators, identity included.
    pub fn non_generator_count(&self) -> u64 {
        self.order - self.generator_count()
    }

    pub fn non_generators(&self) -> Vec<u64> {
        (0..self.order).filter(|&k| !self.is_generator(k)).collect()
    }

    pub fn is_prime_order(&self) -> bool {
        self.is_prime_order
    }

    pub fn is_generator(&self, element: u64) -> bool {
        self.generators.binary_search(&element).is_ok()
    }
}

/// Shorthand for [`CyclicGroup::new`].
pub fn describe_group(n: u64) -> Result<CyclicGroup> {
    CyclicGroup::new(n)
}

/// Euler's totient by trial-division factorization. `totient(0)` is 0.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
