//! Bernstein elements `θ_λ`, the commutative subalgebra they generate, and
//! the center basis `z_μ` of the generic Iwahori–Hecke algebra.
//!
//! For dominant `λ` the Bernstein element is the costandard class of
//! `t(λ)`; for antidominant `λ` the standard class. A general `λ` is split
//! as `λ = λ₁ - λ₂` with both parts dominant and
//! `θ_λ = q^e · θ_{λ₁} · θ_{λ₂}^{-1}`, `e = (l(t(λ)) + l(t(λ₂)) - l(t(λ₁)))/2`.
//! The resulting coefficients always land back in `Z[q]`; the constructor
//! asserts this. The construction depends on a Borel orientation; the
//! opposite orientation swaps the roles of dominant and antidominant.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::affine::{AffineWeyl, ExtAffineElement};
use crate::error::{Error, Result};
use crate::hecke::{costandard_class, HeckeElement};
use crate::poly::LaurentPoly;
use crate::rootdata::Cocharacter;

/// Which Borel the Wakimoto-side construction is oriented by.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Orientation {
    #[default]
    Standard,
    Opposite,
}

impl Orientation {
    fn is_dominant(self, ctx: &AffineWeyl, lam: &Cocharacter) -> bool {
        match self {
            Orientation::Standard => ctx.root_datum().is_dominant(lam),
            Orientation::Opposite => ctx.root_datum().is_antidominant(lam),
        }
    }
}

/// `θ_λ` for the given orientation.
pub fn theta(
    ctx: &Arc<AffineWeyl>,
    lam: &Cocharacter,
    orientation: Orientation,
) -> Result<HeckeElement> {
    theta_with_parts(ctx, lam, orientation).map(|(h, _)| h)
}

/// `θ_λ` together with the dominant decomposition used, for tests of
/// decomposition independence.
pub fn theta_with_parts(
    ctx: &Arc<AffineWeyl>,
    lam: &Cocharacter,
    orientation: Orientation,
) -> Result<(HeckeElement, (Cocharacter, Cocharacter))> {
    // Smallest N with λ + N·δ on the dominant side, δ the sum of positive
    // coroots (strictly dominant, in every cocharacter lattice).
    let delta = match orientation {
        Orientation::Standard => ctx.root_datum().sum_positive_coroots(),
        Orientation::Opposite => ctx.root_datum().sum_positive_coroots().neg(),
    };
    let mut n = 0i64;
    loop {
        let shifted = lam.add(&delta.scale(n));
        if orientation.is_dominant(ctx, &shifted) {
            break;
        }
        n += 1;
    }
    let lam2 = delta.scale(n);
    let lam1 = lam.add(&lam2);
    let h = theta_from_decomposition(ctx, lam, &lam1, &lam2, orientation)?;
    Ok((h, (lam1, lam2)))
}

/// `θ_λ` from an explicit decomposition `λ = λ₁ - λ₂` with both parts on
/// the dominant side of the orientation.
pub fn theta_from_decomposition(
    ctx: &Arc<AffineWeyl>,
    lam: &Cocharacter,
    lam1: &Cocharacter,
    lam2: &Cocharacter,
    orientation: Orientation,
) -> Result<HeckeElement> {
    if lam1.sub(lam2) != *lam {
        return Err(Error::Parse("decomposition does not sum to λ".into()));
    }
    if !orientation.is_dominant(ctx, lam1) || !orientation.is_dominant(ctx, lam2) {
        return Err(Error::NotDominant);
    }
    let l = ctx.length(&ExtAffineElement::from_translation(lam.clone()));
    let l1 = ctx.length(&ExtAffineElement::from_translation(lam1.clone()));
    let l2 = ctx.length(&ExtAffineElement::from_translation(lam2.clone()));
    if (l + l2 - l1) % 2 != 0 {
        return Err(Error::ParityViolation(format!(
            "(l(t(λ)) + l(t(λ₂)) - l(t(λ₁))) = {} is odd",
            l + l2 - l1
        )));
    }
    let e = (l + l2 - l1) / 2;

    // On the dominant side of either orientation the element is the
    // costandard class of the translation; the orientation only decides
    // which cocharacters that applies to.
    let dominant_theta = |m: &Cocharacter| -> HeckeElement {
        costandard_class(ctx, &ExtAffineElement::from_translation(m.clone()))
    };

    if lam2.is_zero() {
        return Ok(dominant_theta(lam));
    }
    // θ_{λ₂}^{-1} = q^{-l₂} (-1)^{l₂} T_{t(-λ₂)}, from [Δ_v][∇_{v^{-1}}] = q^{l(v)}.
    let sign = if l2 % 2 == 0 { 1 } else { -1 };
    let scale = LaurentPoly::monomial(e - l2, sign);
    let result = dominant_theta(lam1)
        .right_mul_basis(&ExtAffineElement::from_translation(lam2.neg()))
        .scale(&scale);
    if !result.is_integral() {
        return Err(Error::IntegralityViolation(format!(
            "θ at {:?} has a coefficient outside Z[q]",
            lam
        )));
    }
    Ok(result)
}

/// The exponent in `θ_λ θ_μ = q^e θ_{λ+μ}`:
/// `e = (l(t(λ)) + l(t(μ)) - l(t(λ+μ)))/2`.
pub fn theta_relation_exponent(
    ctx: &AffineWeyl,
    lam: &Cocharacter,
    mu: &Cocharacter,
) -> Result<i64> {
    let l1 = ctx.length(&ExtAffineElement::from_translation(lam.clone()));
    let l2 = ctx.length(&ExtAffineElement::from_translation(mu.clone()));
    let l12 = ctx.length(&ExtAffineElement::from_translation(lam.add(mu)));
    let twice = l1 + l2 - l12;
    if twice % 2 != 0 || twice < 0 {
        return Err(Error::ParityViolation(format!(
            "exponent 2e = {twice} for {:?}, {:?}",
            lam, mu
        )));
    }
    Ok(twice / 2)
}

/// True iff `h` commutes with every `T_s` for the affine simple reflections
/// and with `T_ω` for generators of `Ω`; those generate the algebra.
pub fn is_central(h: &HeckeElement) -> Result<bool> {
    let ctx = h.context().clone();
    for g in 0..ctx.generator_count() {
        if h.right_mul_gen(g) != h.left_mul_gen(g) {
            return Ok(false);
        }
    }
    for omega in ctx.omega_generators() {
        if h.right_mul_lengthzero(&omega) != h.left_mul_lengthzero(&omega) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The center basis element `z_μ = Σ_{λ ∈ W_0(μ)} θ_λ` for dominant `μ`.
/// Centrality is verified on construction.
pub fn z_basis_element(ctx: &Arc<AffineWeyl>, mu: &Cocharacter) -> Result<HeckeElement> {
    z_basis_element_oriented(ctx, mu, Orientation::Standard)
}

pub fn z_basis_element_oriented(
    ctx: &Arc<AffineWeyl>,
    mu: &Cocharacter,
    orientation: Orientation,
) -> Result<HeckeElement> {
    if !ctx.root_datum().is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    let mut acc = HeckeElement::zero(ctx.clone());
    for lam in ctx.root_datum().weyl_orbit(mu) {
        acc = acc.add(&theta(ctx, &lam, orientation)?)?;
    }
    if !is_central(&acc)? {
        return Err(Error::CentralityViolation(format!(
            "z at {:?} fails to commute with a generator",
            mu
        )));
    }
    Ok(acc)
}

/// Memo table for Bernstein elements. Entries are idempotent.
pub struct ThetaTable {
    ctx: Arc<AffineWeyl>,
    orientation: Orientation,
    cache: RwLock<HashMap<Cocharacter, Arc<HeckeElement>>>,
}

impl ThetaTable {
    pub fn new(ctx: Arc<AffineWeyl>, orientation: Orientation) -> Self {
        ThetaTable {
            ctx,
            orientation,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn context(&self) -> &Arc<AffineWeyl> {
        &self.ctx
    }

    pub fn theta(&self, lam: &Cocharacter) -> Result<Arc<HeckeElement>> {
        if let Some(t) = self.cache.read().unwrap().get(lam) {
            return Ok(t.clone());
        }
        let t = Arc::new(theta(&self.ctx, lam, self.orientation)?);
        self.cache
            .write()
            .unwrap()
            .entry(lam.clone())
            .or_insert_with(|| t.clone());
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{invert_basis, standard_class};
    use crate::rootdata::RootDatum;

    fn ctx(name: &str) -> Arc<AffineWeyl> {
        Arc::new(AffineWeyl::new(Arc::new(RootDatum::preset(name).unwrap())))
    }

    fn coch(v: &[i64]) -> Cocharacter {
        Cocharacter(v.to_vec())
    }

    #[test]
    fn theta_zero_is_unit() {
        let c = ctx("SL3");
        let th = theta(&c, &coch(&[0, 0]), Orientation::Standard).unwrap();
        assert_eq!(th, HeckeElement::unit(c));
    }

    #[test]
    fn theta_dominant_is_costandard() {
        for name in ["SL2", "PGL2", "SL3", "Sp4"] {
            let c = ctx(name);
            let mu = c.root_datum().sum_positive_coroots();
            let th = theta(&c, &mu, Orientation::Standard).unwrap();
            let nabla = costandard_class(&c, &ExtAffineElement::from_translation(mu));
            assert_eq!(th, nabla, "{name}");
        }
    }

    #[test]
    fn theta_antidominant_is_standard_class() {
        let c = ctx("SL2");
        let lam = coch(&[-2]);
        let th = theta(&c, &lam, Orientation::Standard).unwrap();
        let delta = standard_class(&c, &ExtAffineElement::from_translation(lam));
        assert_eq!(th, delta);
    }

    #[test]
    fn theta_times_theta_neg_is_q_power() {
        for name in ["SL2", "PGL2", "SL3"] {
            let c = ctx(name);
            for lam in [coch(&[1]), coch(&[-2]), coch(&[2])] {
                let lam = if c.rank() == 2 {
                    Cocharacter(vec![lam.0[0], 1])
                } else {
                    lam
                };
                let t1 = theta(&c, &lam, Orientation::Standard).unwrap();
                let t2 = theta(&c, &lam.neg(), Orientation::Standard).unwrap();
                let l = c.length(&ExtAffineElement::from_translation(lam.clone()));
                let expected = HeckeElement::unit(c.clone()).scale(&LaurentPoly::q_pow(l));
                assert_eq!(t1.mul(&t2).unwrap(), expected, "{name} {:?}", lam);
            }
        }
    }

    #[test]
    fn theta_relation_exponent_examples() {
        let sl2 = ctx("SL2");
        let lam = coch(&[1]);
        assert_eq!(
            theta_relation_exponent(&sl2, &lam, &lam.neg()).unwrap(),
            2
        );
        // Both dominant: lengths add, exponent zero.
        assert_eq!(
            theta_relation_exponent(&sl2, &coch(&[1]), &coch(&[2])).unwrap(),
            0
        );
        // (α^∨, -2α^∨): (2 + 4 - 2)/2 = 2.
        assert_eq!(
            theta_relation_exponent(&sl2, &coch(&[1]), &coch(&[-2])).unwrap(),
            2
        );
    }

    #[test]
    fn theta_relation_on_a_box() {
        for name in ["SL2", "PGL2"] {
            let c = ctx(name);
            for a in -3..=3i64 {
                for b in -3..=3i64 {
                    let lam = coch(&[a]);
                    let mu = coch(&[b]);
                    let ta = theta(&c, &lam, Orientation::Standard).unwrap();
                    let tb = theta(&c, &mu, Orientation::Standard).unwrap();
                    let e = theta_relation_exponent(&c, &lam, &mu).unwrap();
                    let expected = theta(&c, &lam.add(&mu), Orientation::Standard)
                        .unwrap()
                        .scale(&LaurentPoly::q_pow(e));
                    assert_eq!(ta.mul(&tb).unwrap(), expected, "{name} ({a},{b})");
                    assert_eq!(tb.mul(&ta).unwrap(), expected, "{name} ({a},{b}) swapped");
                }
            }
        }
    }

    #[test]
    fn theta_integral_and_decomposition_independent() {
        let c = ctx("SL3");
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                let lam = coch(&[a, b]);
                let (th, (lam1, lam2)) =
                    theta_with_parts(&c, &lam, Orientation::Standard).unwrap();
                assert!(th.is_integral(), "θ({a},{b}) not in Z[q]");
                // Shift the decomposition by δ twice more.
                let delta = c.root_datum().sum_positive_coroots();
                for extra in 1..=2i64 {
                    let l1 = lam1.add(&delta.scale(extra));
                    let l2 = lam2.add(&delta.scale(extra));
                    let alt =
                        theta_from_decomposition(&c, &lam, &l1, &l2, Orientation::Standard)
                            .unwrap();
                    assert_eq!(alt, th, "decomposition dependence at ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn theta_leading_term_is_signed_translation() {
        // Support below t(λ) with leading coefficient (-1)^{l(t(λ))}: the
        // triangularity that makes {θ_λ} independent over Z[q^{±1}].
        let c = ctx("SL2");
        for a in -3..=3i64 {
            let lam = coch(&[a]);
            let t_lam = ExtAffineElement::from_translation(lam.clone());
            let th = theta(&c, &lam, Orientation::Standard).unwrap();
            let sign = if c.length(&t_lam) % 2 == 0 { 1 } else { -1 };
            assert_eq!(th.coeff(&t_lam), LaurentPoly::constant(sign));
            for (v, _) in th.terms() {
                assert!(c.bruhat_leq(v, &t_lam), "support escapes at {a}");
            }
        }
    }

    #[test]
    fn inverse_route_matches_direct_inverse() {
        // θ_{-λ} for dominant λ equals q^{-l}θ... rather: θ_λ·θ_{-λ} is a
        // q-power, so θ_{-λ} agrees with the Hecke inverse up to that power.
        let c = ctx("SL2");
        let lam = coch(&[2]);
        let t_lam = ExtAffineElement::from_translation(lam.clone());
        let l = c.length(&t_lam);
        let th_neg = theta(&c, &lam.neg(), Orientation::Standard).unwrap();
        let nabla = costandard_class(&c, &t_lam);
        let prod = nabla.mul(&th_neg).unwrap();
        assert_eq!(
            prod,
            HeckeElement::unit(c.clone()).scale(&LaurentPoly::q_pow(l))
        );
        // And the T-basis inverse of the translation is consistent.
        let direct = invert_basis(&c, &t_lam);
        assert_eq!(
            direct.mul(&HeckeElement::basis(c.clone(), t_lam.clone())).unwrap(),
            HeckeElement::unit(c.clone())
        );
    }

    #[test]
    fn central_detector_rejects_generators() {
        let c = ctx("SL2");
        assert!(is_central(&HeckeElement::unit(c.clone())).unwrap());
        let ts = HeckeElement::basis(c.clone(), c.generator(1).clone());
        assert!(!is_central(&ts).unwrap());
    }

    #[test]
    fn z_elements_are_central() {
        let sl2 = ctx("SL2");
        let z = z_basis_element(&sl2, &coch(&[1])).unwrap();
        let expected = theta(&sl2, &coch(&[1]), Orientation::Standard)
            .unwrap()
            .add(&theta(&sl2, &coch(&[-1]), Orientation::Standard).unwrap())
            .unwrap();
        assert_eq!(z, expected);

        let pgl2 = ctx("PGL2");
        let z = z_basis_element(&pgl2, &coch(&[1])).unwrap();
        assert!(is_central(&z).unwrap());

        let z0 = z_basis_element(&sl2, &coch(&[0])).unwrap();
        assert_eq!(z0, HeckeElement::unit(sl2));
    }

    #[test]
    fn z_from_opposite_borel_agrees() {
        for name in ["SL2", "PGL2", "SL3"] {
            let c = ctx(name);
            let mus: Vec<Cocharacter> = match name {
                "SL3" => vec![coch(&[1, 1]), coch(&[2, 1])],
                _ => vec![coch(&[1]), coch(&[2])],
            };
            for mu in mus {
                let std = z_basis_element_oriented(&c, &mu, Orientation::Standard).unwrap();
                let opp = z_basis_element_oriented(&c, &mu, Orientation::Opposite).unwrap();
                assert_eq!(std, opp, "{name} {:?}", mu);
            }
        }
    }

    #[test]
    fn theta_box_linear_independence_via_triangularity() {
        // Within a box the matrix of θ's against the T-basis is triangular
        // with unit diagonal along t(λ), hence of full rank over Z[q^{±1}].
        let c = ctx("PGL2");
        for a in -2..=2i64 {
            let lam = coch(&[a]);
            let th = theta(&c, &lam, Orientation::Standard).unwrap();
            let t_lam = ExtAffineElement::from_translation(lam.clone());
            let lead = th.coeff(&t_lam);
            assert!(
                lead == LaurentPoly::one() || lead == LaurentPoly::constant(-1),
                "unit leading coefficient"
            );
            for (v, _) in th.terms() {
                assert!(c.length(v) <= c.length(&t_lam));
                if c.length(v) == c.length(&t_lam) {
                    assert_eq!(v, &t_lam);
                }
            }
        }
    }
}
