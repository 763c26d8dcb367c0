//! Weight multiplicities and tensor decompositions for the Langlands dual
//! group: the dual system has the coroots of the datum as its roots and the
//! cocharacter lattice as its weight lattice, so every computation here
//! runs on the same `RootDatum` with the two sides of the pairing swapped.
//!
//! Multiplicities come from the Freudenthal recursion; an independent Weyl
//! character formula oracle (alternating sums and exact group-ring
//! division) cross-checks every call.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::GroupRingElement;
use crate::rootdata::{dot, Cocharacter, RootDatum};

/// A weight multiset of a dual-group representation: finitely supported
/// multiplicities on the cocharacter lattice, invariant under the Weyl
/// group, with all extremal weights of multiplicity one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub highest_weight: Cocharacter,
    mults: std::collections::BTreeMap<Cocharacter, u64>,
}

impl Character {
    pub fn multiplicity(&self, nu: &Cocharacter) -> u64 {
        self.mults.get(nu).copied().unwrap_or(0)
    }

    pub fn weights(&self) -> impl Iterator<Item = (&Cocharacter, u64)> {
        self.mults.iter().map(|(w, &m)| (w, m))
    }

    pub fn dimension(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn support_len(&self) -> usize {
        self.mults.len()
    }

    /// The character as a group-ring element `Σ m(ν) e^ν`.
    pub fn to_group_ring(&self) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (w, m) in self.weights() {
            out.add_term(w.0.clone(), BigInt::from(m));
        }
        out
    }
}

/// `Σ_w det(w) · (w-translate of a)`: the alternating Weyl symmetrization
/// of a group-ring element.
pub fn weyl_symmetrize(rd: &RootDatum, a: &GroupRingElement) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for w in rd.weyl_elements() {
        let det = BigInt::from(rd.weyl_det(w));
        for (v, c) in a.terms() {
            out.add_term(w.matrix.apply(v), c * &det);
        }
    }
    out
}

/// Invariant bilinear form `B(x, y) = Σ_{α>0} ⟨α, x⟩⟨α, y⟩` on the
/// cocharacter lattice; Weyl-invariant and positive on the coroot span.
fn invariant_form(rd: &RootDatum, x: &[i64], y: &[i64]) -> i64 {
    rd.positive_roots()
        .iter()
        .map(|rp| dot(&rp.root, x) * dot(&rp.root, y))
        .sum()
}

/// Weight multiplicities of the irreducible dual-group representation of
/// highest weight `mu`, by the Freudenthal recursion, cross-checked against
/// the Weyl character formula oracle.
pub fn weight_multiplicities(rd: &RootDatum, mu: &Cocharacter) -> Result<Character> {
    if !rd.is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    let freudenthal = freudenthal_character(rd, mu)?;
    let oracle = weyl_character_oracle(rd, mu)?;
    if freudenthal != oracle {
        return Err(Error::OracleMismatch(format!(
            "Freudenthal and Weyl-division disagree at highest weight {:?}",
            mu
        )));
    }
    Ok(freudenthal)
}

/// Freudenthal recursion on the dual root system. Both routes to the
/// multiplicities live in this module; callers that want the cross-check
/// should go through [`weight_multiplicities`].
pub fn freudenthal_character(rd: &RootDatum, mu: &Cocharacter) -> Result<Character> {
    if !rd.is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    // Dual positive roots are the positive coroots of the datum.
    let dual_roots: Vec<Vec<i64>> = rd
        .positive_roots()
        .iter()
        .map(|rp| rp.coroot.clone())
        .collect();
    let two_rho_hat = rd.sum_positive_coroots();

    // Candidates mu - (nonnegative integer sums of simple dual roots),
    // level by level in the height Σc_i. Since ⟨2ρ, α_i^∨⟩ = 2, heights are
    // rho-grades and all weights of V(mu) appear within height ⟨2ρ, mu⟩.
    let simple_dual: Vec<Vec<i64>> = (0..rd.num_simple())
        .map(|i| rd.simple_coroot(i).to_vec())
        .collect();
    let height_max = rd.rho_pairing(mu);
    let mut levels: Vec<Vec<Cocharacter>> = vec![vec![mu.clone()]];
    let mut seen: std::collections::BTreeSet<Cocharacter> = [mu.clone()].into();
    for _ in 0..height_max {
        let last = levels.last().unwrap();
        let mut next = std::collections::BTreeSet::new();
        for nu in last {
            for d in &simple_dual {
                let cand = Cocharacter(nu.0.iter().zip(d).map(|(a, b)| a - b).collect());
                if !seen.contains(&cand) {
                    next.insert(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        seen.extend(next.iter().cloned());
        levels.push(next.into_iter().collect());
    }

    let norm = |x: &Cocharacter| -> i64 {
        invariant_form(rd, &x.0, &x.0) + invariant_form(rd, &two_rho_hat.0, &x.0)
    };
    let c_mu = norm(mu);
    let mut mults: HashMap<Cocharacter, BigInt> = HashMap::new();
    mults.insert(mu.clone(), BigInt::from(1));

    for level in levels.iter().skip(1) {
        for nu in level {
            let dom = rd.dominant_representative(nu).0;
            if dom != *nu {
                // Weyl invariance: the dominant representative sits at a
                // strictly smaller height, hence is already settled.
                let v = mults.get(&dom).cloned().unwrap_or_else(BigInt::zero);
                if !v.is_zero() {
                    mults.insert(nu.clone(), v);
                }
                continue;
            }
            // Dominant nu below mu: a genuine weight, with positive
            // Freudenthal denominator.
            let denom = c_mu - norm(nu);
            if denom <= 0 {
                return Err(Error::OracleMismatch(format!(
                    "Freudenthal denominator {denom} at {:?}",
                    nu
                )));
            }
            let grade_nu = rd.rho_pairing(nu);
            let mut rhs = BigInt::zero();
            for alpha in &dual_roots {
                let step = rd.rho_pairing(&Cocharacter(alpha.clone()));
                let mut k = 1i64;
                while grade_nu + k * step <= height_max {
                    let shifted = Cocharacter(
                        nu.0.iter().zip(alpha).map(|(a, b)| a + k * b).collect(),
                    );
                    if let Some(m) = mults.get(&shifted) {
                        let pairing = invariant_form(rd, &shifted.0, alpha);
                        rhs += m * BigInt::from(2 * pairing);
                    }
                    k += 1;
                }
            }
            if rhs.is_zero() {
                continue;
            }
            let denom_big = BigInt::from(denom);
            let q = &rhs / &denom_big;
            if &q * &denom_big != rhs || q.is_negative() {
                return Err(Error::OracleMismatch(format!(
                    "Freudenthal division not exact at {:?}",
                    nu
                )));
            }
            if !q.is_zero() {
                mults.insert(nu.clone(), q);
            }
        }
    }

    let mut out = std::collections::BTreeMap::new();
    for (nu, m) in mults {
        let m = m
            .to_u64()
            .ok_or_else(|| Error::OracleMismatch("multiplicity overflow".into()))?;
        if m > 0 {
            out.insert(nu, m);
        }
    }
    Ok(Character {
        highest_weight: mu.clone(),
        mults: out,
    })
}

/// True iff `mu - nu` is a nonnegative rational combination of simple dual
/// roots (positive coroots); both are expected dominant.
fn in_root_cone(rd: &RootDatum, mu: &Cocharacter, nu: &Cocharacter) -> bool {
    let diff = mu.sub(nu);
    nonneg_coroot_combination(rd, &diff).is_some()
}

/// Expresses `v` as a rational combination of simple coroots if possible,
/// returning the (numerator, denominator) coordinates when all are
/// nonnegative.
fn nonneg_coroot_combination(rd: &RootDatum, v: &Cocharacter) -> Option<Vec<(i64, i64)>> {
    // Solve Σ c_i α_i^∨ = v by pairing with simple roots: the Cartan matrix
    // ⟨α_j, α_i^∨⟩ is invertible over Q on the coroot span.
    let k = rd.num_simple();
    if k == 0 {
        return if v.is_zero() { Some(vec![]) } else { None };
    }
    let mut aug: Vec<Vec<i64>> = (0..k)
        .map(|j| {
            let mut row: Vec<i64> = (0..k)
                .map(|i| dot(rd.simple_root(j), rd.simple_coroot(i)))
                .collect();
            row.push(dot(rd.simple_root(j), &v.0));
            row
        })
        .collect();
    // Fraction-free elimination.
    for col in 0..k {
        let pivot = (col..k).find(|&r| aug[r][col] != 0)?;
        aug.swap(col, pivot);
        for r in 0..k {
            if r != col && aug[r][col] != 0 {
                let (a, b) = (aug[col][col], aug[r][col]);
                for c in 0..=k {
                    aug[r][c] = aug[r][c] * a - aug[col][c] * b;
                }
            }
        }
    }
    let mut coords = Vec::with_capacity(k);
    for i in 0..k {
        let den = aug[i][i];
        let num = aug[i][k];
        if den == 0 {
            return None;
        }
        if num * den < 0 {
            return None;
        }
        coords.push((num, den));
    }
    // Verify the combination reproduces v exactly (v must lie in the span).
    let mut check = vec![0i64; rd.rank()];
    let common: i64 = coords.iter().map(|&(_, d)| d.abs()).product();
    for (i, &(num, den)) in coords.iter().enumerate() {
        let scale = num * (common / den);
        for (c, &co) in check.iter_mut().zip(rd.simple_coroot(i)) {
            *c += scale * co;
        }
    }
    if check.iter().zip(&v.0).all(|(a, b)| *a == b * common) {
        Some(coords)
    } else {
        None
    }
}

/// Dominance order on the dual weight lattice: `nu ⊴ mu` iff `mu - nu` is a
/// nonnegative rational combination of positive coroots.
pub fn dominance_leq(rd: &RootDatum, nu: &Cocharacter, mu: &Cocharacter) -> bool {
    in_root_cone(rd, mu, nu)
}

/// Independent multiplicity oracle: the Weyl character formula evaluated by
/// exact division of alternating sums in the group ring. Half-integral
/// `ρ̂`-shifts are handled by doubling the lattice.
pub fn weyl_character_oracle(rd: &RootDatum, mu: &Cocharacter) -> Result<Character> {
    if !rd.is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    let two_rho_hat = rd.sum_positive_coroots();
    let top = mu.scale(2).add(&two_rho_hat); // 2(mu + ρ̂)
    let numerator = weyl_symmetrize(rd, &GroupRingElement::basis(top.0));
    let denominator = weyl_symmetrize(rd, &GroupRingElement::basis(two_rho_hat.0.clone()));
    let quotient = numerator.divide_exact(&denominator)?;
    let mut mults = std::collections::BTreeMap::new();
    for (v, c) in quotient.terms() {
        if v.iter().any(|x| x % 2 != 0) {
            return Err(Error::OracleMismatch(
                "Weyl quotient has odd support on the doubled lattice".into(),
            ));
        }
        let m = c
            .to_u64()
            .ok_or_else(|| Error::NegativeMultiplicity(format!("at weight {:?}", v)))?;
        let half = Cocharacter(v.iter().map(|x| x / 2).collect());
        if m > 0 {
            mults.insert(half, m);
        }
    }
    Ok(Character {
        highest_weight: mu.clone(),
        mults,
    })
}

/// Weyl dimension formula on the dual system:
/// `dim V(mu) = Π_{α>0} ⟨α, 2μ+2ρ̂⟩ / ⟨α, 2ρ̂⟩`.
pub fn weyl_dimension(rd: &RootDatum, mu: &Cocharacter) -> Result<BigInt> {
    if !rd.is_dominant(mu) {
        return Err(Error::NotDominant);
    }
    let two_rho_hat = rd.sum_positive_coroots();
    let shifted = mu.scale(2).add(&two_rho_hat);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for rp in rd.positive_roots() {
        num *= BigInt::from(dot(&rp.root, &shifted.0));
        den *= BigInt::from(dot(&rp.root, &two_rho_hat.0));
    }
    let q = &num / &den;
    if &q * &den != num {
        return Err(Error::OracleMismatch("Weyl dimension not integral".into()));
    }
    Ok(q)
}

/// Tensor product decomposition by highest-weight stripping of the product
/// character: returns the multiset of dominant constituents.
pub fn tensor_multiplicities(
    rd: &RootDatum,
    mu: &Cocharacter,
    mu2: &Cocharacter,
) -> Result<std::collections::BTreeMap<Cocharacter, u64>> {
    let a = weight_multiplicities(rd, mu)?;
    let b = weight_multiplicities(rd, mu2)?;
    let mut product = a.to_group_ring().mul(&b.to_group_ring());
    let mut out = std::collections::BTreeMap::new();
    while !product.is_zero() {
        // The grade-maximal weights include a dominant one; strip it.
        let top = product
            .terms()
            .map(|(v, _)| Cocharacter(v.clone()))
            .max_by_key(|v| (rd.rho_pairing(v), v.clone()))
            .unwrap();
        let (dom, _) = rd.dominant_representative(&top);
        let grade = rd.rho_pairing(&top);
        let candidate = if dom == top {
            top
        } else {
            // Among max-grade weights a dominant member must exist.
            let best = product
                .terms()
                .map(|(v, _)| Cocharacter(v.clone()))
                .filter(|v| rd.rho_pairing(v) == grade && rd.is_dominant(v))
                .max_by_key(|v| v.clone());
            match best {
                Some(v) => v,
                None => {
                    return Err(Error::NegativeMultiplicity(format!(
                        "no dominant weight at top grade {grade}"
                    )))
                }
            }
        };
        let c = product.coeff(&candidate.0);
        let mult = c.to_u64().ok_or_else(|| {
            Error::NegativeMultiplicity(format!("coefficient {} at {:?}", c, candidate))
        })?;
        if mult == 0 {
            return Err(Error::NegativeMultiplicity(format!(
                "vanishing top coefficient at {:?}",
                candidate
            )));
        }
        let constituent = weight_multiplicities(rd, &candidate)?;
        product = product.sub(&constituent.to_group_ring().scale(BigInt::from(mult)));
        *out.entry(candidate).or_insert(0) += mult;
    }
    Ok(out)
}

/// Memoized multiplicity table. Entries are idempotent; concurrent
/// recomputation is harmless.
pub struct WeightTable {
    rd: Arc<RootDatum>,
    cache: RwLock<HashMap<Cocharacter, Arc<Character>>>,
}

impl WeightTable {
    pub fn new(rd: Arc<RootDatum>) -> Self {
        WeightTable {
            rd,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn character(&self, mu: &Cocharacter) -> Result<Arc<Character>> {
        if let Some(ch) = self.cache.read().unwrap().get(mu) {
            return Ok(ch.clone());
        }
        let ch = Arc::new(weight_multiplicities(&self.rd, mu)?);
        self.cache
            .write()
            .unwrap()
            .entry(mu.clone())
            .or_insert_with(|| ch.clone());
        Ok(ch)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd(name: &str) -> Arc<RootDatum> {
        Arc::new(RootDatum::preset(name).unwrap())
    }

    #[test]
    fn trivial_representation() {
        let sl2 = rd("SL2");
        let ch = weight_multiplicities(&sl2, &Cocharacter(vec![0])).unwrap();
        assert_eq!(ch.dimension(), 1);
        assert_eq!(ch.multiplicity(&Cocharacter(vec![0])), 1);
    }

    #[test]
    fn sl2_strings() {
        // Dual group of SL2 is PGL2 on the coroot lattice; V(kα^∨) is the
        // (2k+1)-dimensional representation with multiplicity-one weights.
        let sl2 = rd("SL2");
        for k in 1..=4i64 {
            let ch = weight_multiplicities(&sl2, &Cocharacter(vec![k])).unwrap();
            assert_eq!(ch.dimension(), (2 * k + 1) as u64);
            for j in -k..=k {
                assert_eq!(ch.multiplicity(&Cocharacter(vec![j])), 1, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn sl3_adjoint_has_zero_weight_two() {
        let sl3 = rd("SL3");
        let mu = Cocharacter(vec![1, 1]);
        let ch = weight_multiplicities(&sl3, &mu).unwrap();
        assert_eq!(ch.dimension(), 8);
        assert_eq!(ch.multiplicity(&Cocharacter(vec![0, 0])), 2);
        assert_eq!(
            weyl_dimension(&sl3, &mu).unwrap(),
            num_bigint::BigInt::from(8)
        );
    }

    #[test]
    fn weyl_dimension_examples() {
        let sl2 = rd("SL2");
        assert_eq!(
            weyl_dimension(&sl2, &Cocharacter(vec![0])).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            weyl_dimension(&sl2, &Cocharacter(vec![1])).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn dimension_sums_match_formula() {
        for (name, mus) in [
            ("SL2", vec![vec![2], vec![3]]),
            ("PGL2", vec![vec![1], vec![2]]),
            ("SL3", vec![vec![1, 1], vec![2, 1]]),
            ("Sp4", vec![vec![1, 0], vec![1, 1]]),
            ("G2", vec![vec![1, 2]]),
        ] {
            let datum = rd(name);
            for mu in mus {
                let mu = Cocharacter(mu);
                let ch = weight_multiplicities(&datum, &mu).unwrap();
                let dim = weyl_dimension(&datum, &mu).unwrap();
                assert_eq!(BigInt::from(ch.dimension()), dim, "{name} {:?}", mu);
            }
        }
    }

    #[test]
    fn characters_are_weyl_invariant_and_extremal_multiplicity_one() {
        for (name, mu) in [("SL3", vec![2, 1]), ("Sp4", vec![1, 1]), ("SO5", vec![1, 0])] {
            let datum = rd(name);
            let mu = Cocharacter(mu);
            let ch = weight_multiplicities(&datum, &mu).unwrap();
            for (w, m) in ch.weights() {
                for elt in datum.weyl_elements() {
                    let moved = Cocharacter(elt.matrix.apply(&w.0));
                    assert_eq!(ch.multiplicity(&moved), m, "{name}");
                }
            }
            for lam in datum.weyl_orbit(&mu) {
                assert_eq!(ch.multiplicity(&lam), 1, "{name}: extremal weight");
            }
        }
    }

    #[test]
    fn freudenthal_matches_oracle_in_a_box() {
        // The cross-check is built into weight_multiplicities; this drives
        // it over dominant weights of bounded pairing.
        for name in ["SL2", "PGL2", "SL3", "Sp4"] {
            let datum = rd(name);
            for mu in dominant_box(&datum, 12) {
                weight_multiplicities(&datum, &mu).unwrap();
            }
        }
    }

    fn dominant_box(datum: &RootDatum, bound: i64) -> Vec<Cocharacter> {
        let n = datum.rank();
        let mut out = Vec::new();
        let mut stack = vec![vec![]];
        while let Some(partial) = stack.pop() {
            if partial.len() == n {
                let mu = Cocharacter(partial);
                if datum.is_dominant(&mu) && datum.rho_pairing(&mu) <= bound {
                    out.push(mu);
                }
                continue;
            }
            for c in -bound..=bound {
                let mut next = partial.clone();
                next.push(c);
                stack.push(next);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn gl2_weights() {
        let gl2 = rd("GL2");
        let ch = weight_multiplicities(&gl2, &Cocharacter(vec![2, 0])).unwrap();
        assert_eq!(ch.dimension(), 3);
        for j in 0..=2 {
            assert_eq!(ch.multiplicity(&Cocharacter(vec![2 - j, j])), 1);
        }
    }

    #[test]
    fn tensor_sl2_adjoint_square() {
        // Dual-side 3 ⊗ 3 = 5 ⊕ 3 ⊕ 1.
        let sl2 = rd("SL2");
        let result =
            tensor_multiplicities(&sl2, &Cocharacter(vec![1]), &Cocharacter(vec![1])).unwrap();
        let expected: std::collections::BTreeMap<Cocharacter, u64> = [
            (Cocharacter(vec![2]), 1),
            (Cocharacter(vec![1]), 1),
            (Cocharacter(vec![0]), 1),
        ]
        .into();
        assert_eq!(result, expected);
    }

    #[test]
    fn tensor_with_trivial() {
        let sl3 = rd("SL3");
        let mu = Cocharacter(vec![1, 1]);
        let result = tensor_multiplicities(&sl3, &Cocharacter(vec![0, 0]), &mu).unwrap();
        assert_eq!(result, [(mu, 1)].into());
    }

    #[test]
    fn tensor_pgl2_fundamental_square() {
        // Dual-side 2 ⊗ 2 = 3 ⊕ 1 for the dual SL2.
        let pgl2 = rd("PGL2");
        let result =
            tensor_multiplicities(&pgl2, &Cocharacter(vec![1]), &Cocharacter(vec![1])).unwrap();
        let expected: std::collections::BTreeMap<Cocharacter, u64> =
            [(Cocharacter(vec![2]), 1), (Cocharacter(vec![0]), 1)].into();
        assert_eq!(result, expected);
    }

    #[test]
    fn tensor_dimension_is_multiplicative() {
        let sp4 = rd("Sp4");
        let a = Cocharacter(vec![1, 0]);
        let b = Cocharacter(vec![1, 1]);
        let result = tensor_multiplicities(&sp4, &a, &b).unwrap();
        let total: BigInt = result
            .iter()
            .map(|(nu, m)| weyl_dimension(&sp4, nu).unwrap() * BigInt::from(*m))
            .sum();
        let expected = weyl_dimension(&sp4, &a).unwrap() * weyl_dimension(&sp4, &b).unwrap();
        assert_eq!(total, expected);
    }

    #[test]
    fn symmetrize_rank_one() {
        let sl2 = rd("SL2");
        let sym = weyl_symmetrize(&sl2, &GroupRingElement::basis(vec![1]));
        let expected =
            GroupRingElement::basis(vec![1]).sub(&GroupRingElement::basis(vec![-1]));
        assert_eq!(sym, expected);
    }

    #[test]
    fn weight_table_memoizes() {
        let datum = rd("SL3");
        let table = WeightTable::new(datum);
        let a = table.character(&Cocharacter(vec![1, 1])).unwrap();
        let b = table.character(&Cocharacter(vec![1, 1])).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
