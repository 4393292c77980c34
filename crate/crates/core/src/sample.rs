//! Seeded exact random sampling.
//!
//! All generators are deterministic in the seed; parallel trials use
//! disjoint seeds (trial `k` takes `base_seed + k`).

use crate::clifford::{NormalVec, Spinor, TangentVec};
use crate::scalar::{Cx, Real};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic source of small exact scalars.
pub struct ExactRng {
    inner: ChaCha8Rng,
    max_num: i64,
    max_den: i64,
}

impl ExactRng {
    pub fn seeded(seed: u64) -> Self {
        ExactRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
            max_num: 4,
            max_den: 3,
        }
    }

    /// Small rational with numerator in `[-max_num, max_num]` and denominator
    /// in `[1, max_den]`; magnitudes stay small so long exact products stay fast.
    pub fn small<R: Real>(&mut self) -> R {
        let n = self.inner.gen_range(-self.max_num..=self.max_num);
        let d = self.inner.gen_range(1..=self.max_den);
        R::from_ratio(n, d)
    }

    /// Small nonzero rational.
    pub fn small_nonzero<R: Real>(&mut self) -> R {
        loop {
            let v = self.small::<R>();
            if !num_traits::Zero::is_zero(&v) {
                return v;
            }
        }
    }

    pub fn sign<R: Real>(&mut self) -> R {
        if self.inner.gen_bool(0.5) {
            R::one()
        } else {
            -R::one()
        }
    }

    pub fn bool(&mut self) -> bool {
        self.inner.gen_bool(0.5)
    }
}

pub fn scalar<R: Real>(rng: &mut ExactRng) -> Cx<R> {
    Cx::new(rng.small(), rng.small())
}

pub fn spinor<R: Real>(rng: &mut ExactRng) -> Spinor<R> {
    Spinor::new(scalar(rng), scalar(rng), scalar(rng), scalar(rng))
}

/// Spinor with both total-grading halves nonzero.
pub fn spinor_nondegenerate<R: Real>(rng: &mut ExactRng) -> Spinor<R> {
    loop {
        let phi = spinor::<R>(rng);
        if !phi.plus_is_zero() && !phi.minus_is_zero() {
            return phi;
        }
    }
}

pub fn tangent<R: Real>(rng: &mut ExactRng) -> TangentVec<R> {
    TangentVec::new(rng.small(), rng.small())
}

pub fn normal<R: Real>(rng: &mut ExactRng) -> NormalVec<R> {
    NormalVec::new(rng.small(), rng.small())
}
