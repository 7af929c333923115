//! Deterministic structural hashes (FNV-1a). Used only to order tower
//! variables reproducibly across runs; never as an equality test.

use super::poly::QPoly;
use num_rational::BigRational;
use std::hash::{Hash, Hasher};

pub(crate) struct Fnv(u64);

impl Default for Fnv {
    fn default() -> Self {
        Fnv(0xcbf2_9ce4_8422_2325)
    }
}

impl Hasher for Fnv {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        for b in bytes {
            self.0 ^= u64::from(*b);
            self.0 = self.0.wrapping_mul(0x0100_0000_01b3);
        }
    }
}

pub(crate) fn hash_rational(q: &BigRational) -> u64 {
    let mut h = Fnv::default();
    q.numer().hash(&mut h);
    q.denom().hash(&mut h);
    h.finish()
}

pub(crate) fn hash_generator(poly: &QPoly, init: &(BigRational, BigRational)) -> u64 {
    let mut h = Fnv::default();
    0xfeedu16.hash(&mut h);
    for c in poly.coeffs() {
        hash_rational(c).hash(&mut h);
    }
    hash_rational(&init.0).hash(&mut h);
    hash_rational(&init.1).hash(&mut h);
    h.finish()
}

pub(crate) fn combine(parts: &[u64]) -> u64 {
    let mut h = Fnv::default();
    for p in parts {
        p.hash(&mut h);
    }
    h.finish()
}
