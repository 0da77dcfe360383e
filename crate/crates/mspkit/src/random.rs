//! Seeded generators for random identity inputs.
//!
//! Integer coefficients are uniform in `[-99, 99]`; each candidate term or
//! series coefficient is present with probability 1/2. Rationals have a
//! numerator in `[-99, 99]` and a denominator in `[1, 9]`.

use mspkit_core::poly::{MPoly, Monomial};
use mspkit_core::series::EgfCoeffs;
use mspkit_core::{BigInt, BigRational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const COEFF_BOUND: i64 = 99;
pub const DENSITY: f64 = 0.5;

pub struct Gen(ChaCha8Rng);

/// FNV-1a, used to give every named check its own stream.
fn stream_of(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

impl Gen {
    /// Generator for `seed`, independent across distinct `stream` names.
    pub fn new(seed: u64, stream: &str) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream_of(stream));
        Gen(rng)
    }

    pub fn coeff(&mut self) -> i64 {
        self.0.gen_range(-COEFF_BOUND..=COEFF_BOUND)
    }

    pub fn present(&mut self) -> bool {
        self.0.gen_bool(DENSITY)
    }

    pub fn below(&mut self, n: u32) -> u32 {
        self.0.gen_range(0..n)
    }

    pub fn rational(&mut self) -> BigRational {
        let p = self.coeff();
        let q = self.0.gen_range(1..=9i64);
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn nonzero_rational(&mut self) -> BigRational {
        loop {
            let r = self.rational();
            if r != BigRational::from_integer(BigInt::from(0)) {
                return r;
            }
        }
    }

    /// Random polynomial in `X1..X_vars` supported on monomials of total
    /// degree at most `max_deg`.
    pub fn poly(&mut self, vars: usize, max_deg: u32) -> MPoly {
        let mut terms = Vec::new();
        let mut e = vec![0u32; vars];
        loop {
            if e.iter().sum::<u32>() <= max_deg && self.present() {
                terms.push((Monomial::new(e.clone()), BigInt::from(self.coeff())));
            }
            let mut i = 0;
            while i < vars && e[i] == max_deg {
                e[i] = 0;
                i += 1;
            }
            if i == vars {
                break;
            }
            e[i] += 1;
        }
        MPoly::from_terms(terms)
    }

    /// Invertible series of the given order: `f_1 != 0`, later coefficients
    /// present with probability 1/2.
    pub fn series(&mut self, order: u32) -> EgfCoeffs {
        let mut c = vec![self.nonzero_rational()];
        for _ in 1..order {
            c.push(if self.present() {
                self.rational()
            } else {
                BigRational::from_integer(BigInt::from(0))
            });
        }
        EgfCoeffs::new(c).expect("order is at least 1")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<i64> = (0..8).map(|_| Gen::new(7, "x").coeff()).collect();
        let mut g = Gen::new(7, "x");
        let b: Vec<i64> = (0..8).map(|_| g.coeff()).collect();
        assert!(a.iter().all(|v| *v == a[0]));
        let mut g2 = Gen::new(7, "x");
        let c: Vec<i64> = (0..8).map(|_| g2.coeff()).collect();
        assert_eq!(b, c);
        let mut h = Gen::new(7, "y");
        let d: Vec<i64> = (0..8).map(|_| h.coeff()).collect();
        assert_ne!(b, d);
        assert!(b.iter().all(|v| v.abs() <= COEFF_BOUND));
    }
}
