//! Clifford algebra of the rank-4 twisted bundle fiber.
//!
//! The fiber is a tensor product of two rank-2 spinor modules, one for the
//! tangent plane (frame `e1, e2`) and one for the normal plane (frame
//! `nu1, nu2`). The chosen gamma matrices are
//!
//! ```text
//! gamma(e1) = i*sigma_x = [[0, i], [i, 0]]
//! gamma(e2) = i*sigma_y = [[0, 1], [-1, 0]]
//! ```
//!
//! on each factor, so each volume element `i*gamma_1*gamma_2 = sigma_z` is
//! diagonal. Components are indexed by the pair of volume gradings:
//! `pp, pm, mp, mm` with the first sign the tangent grading and the second
//! the normal grading. The twisted product rules are
//!
//! ```text
//! X . (alpha (x) sigma)  = (X . alpha) (x) conj(sigma)   for tangent X
//! xi . (alpha (x) sigma) =  alpha (x) (xi . sigma)       for normal xi
//! ```
//!
//! The `conj` sign twist on the normal factor lives in [`tangent_mul`] and
//! nowhere else.

use crate::scalar::{cx_i, cx_mag, cx_re, cx_zero, is_zero, Cx, Real};
use std::ops::{Add, Mul, Neg, Sub};

/// Tangent-plane vector in the orthonormal frame `{e1, e2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TangentVec<R> {
    pub x1: R,
    pub x2: R,
}

/// Normal-plane vector in the orthonormal frame `{nu1, nu2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalVec<R> {
    pub n1: R,
    pub n2: R,
}

/// Direct-sum vector of the two planes.
#[derive(Clone, Debug, PartialEq)]
pub struct AmbientVec<R> {
    pub tangent: TangentVec<R>,
    pub normal: NormalVec<R>,
}

impl<R: Real> TangentVec<R> {
    pub fn new(x1: R, x2: R) -> Self {
        TangentVec { x1, x2 }
    }

    pub fn zero() -> Self {
        TangentVec::new(R::zero(), R::zero())
    }

    pub fn e1() -> Self {
        TangentVec::new(R::one(), R::zero())
    }

    pub fn e2() -> Self {
        TangentVec::new(R::zero(), R::one())
    }

    pub fn basis(k: usize) -> Self {
        match k {
            1 => Self::e1(),
            2 => Self::e2(),
            _ => panic!("tangent frame index out of range: {k}"),
        }
    }

    pub fn dot(&self, other: &Self) -> R {
        self.x1.clone() * other.x1.clone() + self.x2.clone() * other.x2.clone()
    }

    pub fn scale(&self, c: &R) -> Self {
        TangentVec::new(self.x1.clone() * c.clone(), self.x2.clone() * c.clone())
    }
}

impl<R: Real> NormalVec<R> {
    pub fn new(n1: R, n2: R) -> Self {
        NormalVec { n1, n2 }
    }

    pub fn zero() -> Self {
        NormalVec::new(R::zero(), R::zero())
    }

    pub fn nu1() -> Self {
        NormalVec::new(R::one(), R::zero())
    }

    pub fn nu2() -> Self {
        NormalVec::new(R::zero(), R::one())
    }

    pub fn basis(l: usize) -> Self {
        match l {
            1 => Self::nu1(),
            2 => Self::nu2(),
            _ => panic!("normal frame index out of range: {l}"),
        }
    }

    pub fn dot(&self, other: &Self) -> R {
        self.n1.clone() * other.n1.clone() + self.n2.clone() * other.n2.clone()
    }

    pub fn norm_sq(&self) -> R {
        self.dot(self)
    }

    pub fn scale(&self, c: &R) -> Self {
        NormalVec::new(self.n1.clone() * c.clone(), self.n2.clone() * c.clone())
    }

    /// `u1*v2 - u2*v1`, the oriented area of the pair.
    pub fn cross(&self, other: &Self) -> R {
        self.n1.clone() * other.n2.clone() - self.n2.clone() * other.n1.clone()
    }
}

impl<R: Real> Add for TangentVec<R> {
    type Output = TangentVec<R>;
    fn add(self, rhs: Self) -> Self {
        TangentVec::new(self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl<R: Real> Add for NormalVec<R> {
    type Output = NormalVec<R>;
    fn add(self, rhs: Self) -> Self {
        NormalVec::new(self.n1 + rhs.n1, self.n2 + rhs.n2)
    }
}

impl<R: Real> Sub for NormalVec<R> {
    type Output = NormalVec<R>;
    fn sub(self, rhs: Self) -> Self {
        NormalVec::new(self.n1 - rhs.n1, self.n2 - rhs.n2)
    }
}

impl<R: Real> Neg for NormalVec<R> {
    type Output = NormalVec<R>;
    fn neg(self) -> Self {
        NormalVec::new(-self.n1, -self.n2)
    }
}

impl<R: Real> AmbientVec<R> {
    pub fn new(tangent: TangentVec<R>, normal: NormalVec<R>) -> Self {
        AmbientVec { tangent, normal }
    }

    pub fn from_tangent(t: TangentVec<R>) -> Self {
        AmbientVec::new(t, NormalVec::zero())
    }

    pub fn from_normal(n: NormalVec<R>) -> Self {
        AmbientVec::new(TangentVec::zero(), n)
    }

    pub fn basis(a: usize) -> Self {
        match a {
            1 | 2 => Self::from_tangent(TangentVec::basis(a)),
            3 | 4 => Self::from_normal(NormalVec::basis(a - 2)),
            _ => panic!("ambient frame index out of range: {a}"),
        }
    }

    pub fn dot(&self, other: &Self) -> R {
        self.tangent.dot(&other.tangent) + self.normal.dot(&other.normal)
    }
}

/// Element of the rank-4 twisted fiber, graded by the two volume elements.
#[derive(Clone, Debug, PartialEq)]
pub struct Spinor<R> {
    pub pp: Cx<R>,
    pub pm: Cx<R>,
    pub mp: Cx<R>,
    pub mm: Cx<R>,
}

impl<R: Real> Spinor<R> {
    pub fn new(pp: Cx<R>, pm: Cx<R>, mp: Cx<R>, mm: Cx<R>) -> Self {
        Spinor { pp, pm, mp, mm }
    }

    pub fn zero() -> Self {
        Spinor::new(cx_zero(), cx_zero(), cx_zero(), cx_zero())
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.pp) && is_zero(&self.pm) && is_zero(&self.mp) && is_zero(&self.mm)
    }

    /// Positive half under the total grading: the `pp` and `mm` components.
    pub fn plus(&self) -> Self {
        Spinor::new(self.pp.clone(), cx_zero(), cx_zero(), self.mm.clone())
    }

    /// Negative half under the total grading: the `pm` and `mp` components.
    pub fn minus(&self) -> Self {
        Spinor::new(cx_zero(), self.pm.clone(), self.mp.clone(), cx_zero())
    }

    pub fn plus_is_zero(&self) -> bool {
        is_zero(&self.pp) && is_zero(&self.mm)
    }

    pub fn minus_is_zero(&self) -> bool {
        is_zero(&self.pm) && is_zero(&self.mp)
    }

    pub fn scale(&self, c: &Cx<R>) -> Self {
        Spinor::new(
            self.pp.clone() * c.clone(),
            self.pm.clone() * c.clone(),
            self.mp.clone() * c.clone(),
            self.mm.clone() * c.clone(),
        )
    }

    pub fn scale_re(&self, c: &R) -> Self {
        self.scale(&cx_re(c.clone()))
    }

    /// Largest component magnitude, for float-mode residual reporting.
    pub fn max_mag(&self) -> f64 {
        cx_mag(&self.pp)
            .max(cx_mag(&self.pm))
            .max(cx_mag(&self.mp))
            .max(cx_mag(&self.mm))
    }
}

impl<R: Real> Add for Spinor<R> {
    type Output = Spinor<R>;
    fn add(self, rhs: Self) -> Self {
        Spinor::new(
            self.pp + rhs.pp,
            self.pm + rhs.pm,
            self.mp + rhs.mp,
            self.mm + rhs.mm,
        )
    }
}

impl<R: Real> Sub for Spinor<R> {
    type Output = Spinor<R>;
    fn sub(self, rhs: Self) -> Self {
        Spinor::new(
            self.pp - rhs.pp,
            self.pm - rhs.pm,
            self.mp - rhs.mp,
            self.mm - rhs.mm,
        )
    }
}

impl<R: Real> Neg for Spinor<R> {
    type Output = Spinor<R>;
    fn neg(self) -> Self {
        Spinor::new(-self.pp, -self.pm, -self.mp, -self.mm)
    }
}

impl<R: Real> Mul<Spinor<R>> for Cx<R> {
    type Output = Spinor<R>;
    fn mul(self, rhs: Spinor<R>) -> Spinor<R> {
        rhs.scale(&self)
    }
}

/// Clifford product by a tangent vector. Flips the tangent grading and
/// carries the conjugation twist on the normal factor.
pub fn tangent_mul<R: Real>(x: &TangentVec<R>, phi: &Spinor<R>) -> Spinor<R> {
    // gamma_M(X) maps (a+, a-) to ((i x1 + x2) a-, (i x1 - x2) a+).
    let cp = Cx::new(x.x2.clone(), x.x1.clone()); // x2 + i x1
    let cm = Cx::new(-x.x2.clone(), x.x1.clone()); // -x2 + i x1
    Spinor::new(
        cp.clone() * phi.mp.clone(),
        -(cp * phi.mm.clone()),
        cm.clone() * phi.pp.clone(),
        -(cm * phi.pm.clone()),
    )
}

/// Clifford product by a normal vector. Flips the normal grading.
pub fn normal_mul<R: Real>(xi: &NormalVec<R>, phi: &Spinor<R>) -> Spinor<R> {
    let cp = Cx::new(xi.n2.clone(), xi.n1.clone());
    let cm = Cx::new(-xi.n2.clone(), xi.n1.clone());
    Spinor::new(
        cp.clone() * phi.pm.clone(),
        cm.clone() * phi.pp.clone(),
        cp * phi.mm.clone(),
        cm * phi.mp.clone(),
    )
}

/// Clifford product by a direct-sum vector.
pub fn ambient_mul<R: Real>(v: &AmbientVec<R>, phi: &Spinor<R>) -> Spinor<R> {
    tangent_mul(&v.tangent, phi) + normal_mul(&v.normal, phi)
}

/// Frame shorthand: `e_k . phi`.
pub fn e_mul<R: Real>(k: usize, phi: &Spinor<R>) -> Spinor<R> {
    tangent_mul(&TangentVec::basis(k), phi)
}

/// Frame shorthand: `nu_l . phi`.
pub fn nu_mul<R: Real>(l: usize, phi: &Spinor<R>) -> Spinor<R> {
    normal_mul(&NormalVec::basis(l), phi)
}

/// `e1 . e2 . phi`.
pub fn e12_mul<R: Real>(phi: &Spinor<R>) -> Spinor<R> {
    e_mul(1, &e_mul(2, phi))
}

/// `nu1 . nu2 . phi`.
pub fn nu12_mul<R: Real>(phi: &Spinor<R>) -> Spinor<R> {
    nu_mul(1, &nu_mul(2, phi))
}

/// Conjugation by the total volume grading: `plus - minus`.
///
/// Anticommutes with Clifford product by any single frame vector.
pub fn conjugate<R: Real>(phi: &Spinor<R>) -> Spinor<R> {
    Spinor::new(
        phi.pp.clone(),
        -phi.pm.clone(),
        -phi.mp.clone(),
        phi.mm.clone(),
    )
}

/// Hermitian product, linear in the first slot, antilinear in the second.
pub fn hermitian<R: Real>(a: &Spinor<R>, b: &Spinor<R>) -> Cx<R> {
    a.pp.clone() * b.pp.conj()
        + a.pm.clone() * b.pm.conj()
        + a.mp.clone() * b.mp.conj()
        + a.mm.clone() * b.mm.conj()
}

/// Squared norm, a real scalar.
pub fn norm_sq<R: Real>(phi: &Spinor<R>) -> R {
    hermitian(phi, phi).re
}

/// Mixed 2-form with components in the tangent plane, the mixed block and
/// the normal plane; acts by sums of Clifford products of frame pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct FormT<R> {
    /// Coefficient of `e1 ^ e2`.
    pub tangent: R,
    /// `mixed[k][l]` is the coefficient of `e_{k+1} ^ nu_{l+1}`.
    pub mixed: [[R; 2]; 2],
    /// Coefficient of `nu1 ^ nu2`.
    pub normal: R,
}

impl<R: Real> FormT<R> {
    pub fn zero() -> Self {
        FormT {
            tangent: R::zero(),
            mixed: [
                [R::zero(), R::zero()],
                [R::zero(), R::zero()],
            ],
            normal: R::zero(),
        }
    }

    pub fn new(tangent: R, mixed: [[R; 2]; 2], normal: R) -> Self {
        FormT {
            tangent,
            mixed,
            normal,
        }
    }

    /// The six real coefficients in a fixed order:
    /// `(e1^e2, e1^nu1, e1^nu2, e2^nu1, e2^nu2, nu1^nu2)`.
    pub fn coefficients(&self) -> [R; 6] {
        [
            self.tangent.clone(),
            self.mixed[0][0].clone(),
            self.mixed[0][1].clone(),
            self.mixed[1][0].clone(),
            self.mixed[1][1].clone(),
            self.normal.clone(),
        ]
    }

    pub fn basis(idx: usize) -> Self {
        let mut t = Self::zero();
        match idx {
            0 => t.tangent = R::one(),
            1 => t.mixed[0][0] = R::one(),
            2 => t.mixed[0][1] = R::one(),
            3 => t.mixed[1][0] = R::one(),
            4 => t.mixed[1][1] = R::one(),
            5 => t.normal = R::one(),
            _ => panic!("form basis index out of range: {idx}"),
        }
        t
    }

    pub fn max_mag(&self) -> f64 {
        self.coefficients()
            .iter()
            .map(|c| c.abs().to_f64())
            .fold(0.0, f64::max)
    }
}

/// Clifford action of a mixed 2-form.
pub fn form_action<R: Real>(t: &FormT<R>, phi: &Spinor<R>) -> Spinor<R> {
    let mut out = e12_mul(phi).scale_re(&t.tangent);
    for k in 1..=2 {
        for l in 1..=2 {
            let c = &t.mixed[k - 1][l - 1];
            out = out + e_mul(k, &nu_mul(l, phi)).scale_re(c);
        }
    }
    out + nu12_mul(phi).scale_re(&t.normal)
}

/// `i e1 . e2 . conj(phi) = i nu1 . nu2 . phi`: the grading identity that
/// trades the conjugated tangent volume for the normal volume.
pub fn volume_swap_identity_residual<R: Real>(phi: &Spinor<R>) -> Spinor<R> {
    let lhs = e12_mul(&conjugate(phi)).scale(&cx_i());
    let rhs = nu12_mul(phi).scale(&cx_i());
    lhs - rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{self, ExactRng};
    use crate::scalar::{cx_one, is_zero};
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn rational_spinor(rng: &mut ExactRng) -> Spinor<Q> {
        sample::spinor(rng)
    }

    #[test]
    fn unit_vectors_square_to_minus_one() {
        let mut rng = ExactRng::seeded(11);
        let phi = rational_spinor(&mut rng);
        for k in 1..=2 {
            let twice = e_mul(k, &e_mul(k, &phi));
            assert_eq!(twice, -phi.clone());
            let twice = nu_mul(k, &nu_mul(k, &phi));
            assert_eq!(twice, -phi.clone());
        }
    }

    #[test]
    fn anticommutation_on_basis_pairs() {
        let mut rng = ExactRng::seeded(12);
        let phi = rational_spinor(&mut rng);
        for a in 1..=4usize {
            for b in 1..=4usize {
                let va = AmbientVec::<Q>::basis(a);
                let vb = AmbientVec::<Q>::basis(b);
                let lhs = ambient_mul(&va, &ambient_mul(&vb, &phi))
                    + ambient_mul(&vb, &ambient_mul(&va, &phi));
                let rhs = phi.scale_re(&(-(q(2) * va.dot(&vb))));
                assert_eq!(lhs, rhs, "frame pair ({a},{b})");
            }
        }
    }

    #[test]
    fn anticommutation_on_random_vectors() {
        let mut rng = ExactRng::seeded(13);
        for _ in 0..50 {
            let v = AmbientVec::new(
                TangentVec::new(rng.small(), rng.small()),
                NormalVec::new(rng.small(), rng.small()),
            );
            let w = AmbientVec::new(
                TangentVec::new(rng.small(), rng.small()),
                NormalVec::new(rng.small(), rng.small()),
            );
            let phi = rational_spinor(&mut rng);
            let lhs =
                ambient_mul(&v, &ambient_mul(&w, &phi)) + ambient_mul(&w, &ambient_mul(&v, &phi));
            let rhs = phi.scale_re(&(-(q(2) * v.dot(&w))));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn volume_gradings_are_diagonal() {
        let mut rng = ExactRng::seeded(14);
        let phi = rational_spinor(&mut rng);
        let wm = e12_mul(&phi).scale(&cx_i());
        assert_eq!(wm.pp, phi.pp);
        assert_eq!(wm.pm, phi.pm);
        assert_eq!(wm.mp, -phi.mp.clone());
        assert_eq!(wm.mm, -phi.mm.clone());
        let we = nu12_mul(&phi).scale(&cx_i());
        assert_eq!(we.pp, phi.pp);
        assert_eq!(we.pm, -phi.pm.clone());
        assert_eq!(we.mp, phi.mp);
        assert_eq!(we.mm, -phi.mm.clone());
    }

    #[test]
    fn grading_flip_from_pp() {
        let phi = Spinor::<Q>::new(cx_one(), cx_zero(), cx_zero(), cx_zero());
        let t = e_mul(1, &phi);
        assert!(is_zero(&t.pp) && is_zero(&t.pm) && is_zero(&t.mm));
        assert!(!is_zero(&t.mp));
        let n = nu_mul(1, &phi);
        assert!(is_zero(&n.pp) && is_zero(&n.mp) && is_zero(&n.mm));
        assert!(!is_zero(&n.pm));
    }

    #[test]
    fn conjugate_is_involution_and_anticommutes() {
        let mut rng = ExactRng::seeded(15);
        for _ in 0..20 {
            let phi = rational_spinor(&mut rng);
            assert_eq!(conjugate(&conjugate(&phi)), phi);
            for a in 1..=4usize {
                let v = AmbientVec::<Q>::basis(a);
                let lhs = conjugate(&ambient_mul(&v, &phi));
                let rhs = -ambient_mul(&v, &conjugate(&phi));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn hermitian_is_antisymmetric_under_clifford() {
        let mut rng = ExactRng::seeded(16);
        for _ in 0..20 {
            let phi = rational_spinor(&mut rng);
            let psi = rational_spinor(&mut rng);
            let v = AmbientVec::new(sample::tangent(&mut rng), sample::normal(&mut rng));
            let s = hermitian(&ambient_mul(&v, &phi), &psi) + hermitian(&phi, &ambient_mul(&v, &psi));
            assert!(is_zero(&s));
        }
    }

    #[test]
    fn hermitian_positive_definite_and_gradings_orthogonal() {
        let mut rng = ExactRng::seeded(17);
        let phi = rational_spinor(&mut rng);
        let n = norm_sq(&phi);
        assert!(n >= Q::zero());
        assert!(!phi.is_zero());
        assert!(n > Q::zero());
        // cross-grading pairs pair to zero
        let a = Spinor::<Q>::new(cx_one(), cx_zero(), cx_zero(), cx_zero());
        let b = Spinor::<Q>::new(cx_zero(), cx_one(), cx_zero(), cx_zero());
        assert!(is_zero(&hermitian(&a, &b)));
    }

    #[test]
    fn form_action_examples() {
        let mut rng = ExactRng::seeded(18);
        let phi = rational_spinor(&mut rng);
        assert!(form_action(&FormT::<Q>::zero(), &phi).is_zero());
        // e1^e2 acts as -i on the pp grading
        let t = FormT::<Q>::basis(0);
        let acted = form_action(&t, &Spinor::new(cx_one(), cx_zero(), cx_zero(), cx_zero()));
        assert_eq!(acted.pp, -cx_i::<Q>());
    }

    #[test]
    fn volume_swap_identity_holds() {
        let mut rng = ExactRng::seeded(19);
        for _ in 0..20 {
            let phi = rational_spinor(&mut rng);
            assert!(volume_swap_identity_residual(&phi).is_zero());
        }
    }
}
