//! The extended affine Weyl group `W = X_*(T) ⋊ W_0` with its
//! Iwahori–Matsumoto length, reduced words, Bruhat order, length-zero
//! subgroup `Ω`, parabolic (facet) subgroups, double cosets, and admissible
//! sets.
//!
//! Elements are stored as translation/finite pairs, never as words; words
//! are derived data. The affine simple reflections are indexed so that `0`
//! is the affine node of the first irreducible component, `1..=k` are the
//! finite simple reflections, and further affine nodes (for reducible
//! systems) follow after `k`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rootdata::{dot, Cocharacter, FiniteWeylElement, Matrix, RootDatum};

/// Cap on parabolic subgroup enumeration.
const PARABOLIC_CAP: usize = 1_000_000;

/// Box bound for listing the free part of an infinite `Ω`.
const OMEGA_FREE_BOX: i64 = 1;

/// An element `t(λ)·w` of the extended affine Weyl group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtAffineElement {
    pub translation: Cocharacter,
    pub finite: FiniteWeylElement,
}

impl ExtAffineElement {
    pub fn identity(rank: usize) -> Self {
        ExtAffineElement {
            translation: Cocharacter::zero(rank),
            finite: FiniteWeylElement {
                matrix: Matrix::identity(rank),
            },
        }
    }

    pub fn from_translation(lam: Cocharacter) -> Self {
        let rank = lam.0.len();
        ExtAffineElement {
            translation: lam,
            finite: FiniteWeylElement {
                matrix: Matrix::identity(rank),
            },
        }
    }

    pub fn from_finite(w: FiniteWeylElement) -> Self {
        let rank = w.matrix.dim();
        ExtAffineElement {
            translation: Cocharacter::zero(rank),
            finite: w,
        }
    }

    /// `(λ1, w1)(λ2, w2) = (λ1 + w1 λ2, w1 w2)`.
    pub fn mul(&self, other: &ExtAffineElement) -> ExtAffineElement {
        ExtAffineElement {
            translation: self
                .translation
                .add(&Cocharacter(self.finite.matrix.apply(&other.translation.0))),
            finite: FiniteWeylElement {
                matrix: self.finite.matrix.mul(&other.finite.matrix),
            },
        }
    }

    pub fn inverse(&self) -> ExtAffineElement {
        let w_inv = self.finite.matrix.inverse_unimodular();
        ExtAffineElement {
            translation: Cocharacter(w_inv.apply(&self.translation.0)).neg(),
            finite: FiniteWeylElement { matrix: w_inv },
        }
    }

    pub fn is_identity(&self) -> bool {
        self.translation.is_zero() && self.finite.matrix.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.finite.matrix.is_identity()
    }
}

impl fmt::Debug for ExtAffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t({:?}){:?}", self.translation, self.finite)
    }
}

/// A facet of the standard alcove, given by the subset of affine simple
/// reflections fixing it. The empty set is the alcove `a0` (Iwahori), the
/// full finite subset `{1..=k}` is the hyperspecial facet `f0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Facet {
    pub gens: BTreeSet<usize>,
}

impl Facet {
    pub fn alcove() -> Self {
        Facet {
            gens: BTreeSet::new(),
        }
    }

    pub fn hyperspecial(num_simple: usize) -> Self {
        Facet {
            gens: (1..=num_simple).collect(),
        }
    }

    pub fn from_gens(gens: impl IntoIterator<Item = usize>) -> Self {
        Facet {
            gens: gens.into_iter().collect(),
        }
    }
}

/// A double coset `W_f · x · W_f'` with its unique minimal-length
/// representative and full (finite) element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub facet_left: Facet,
    pub facet_right: Facet,
    pub min_rep: ExtAffineElement,
    elements: Vec<ExtAffineElement>,
}

impl DoubleCoset {
    pub fn elements(&self) -> &[ExtAffineElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Listing of the length-zero subgroup `Ω ≅ X_*(T)/ZΦ^∨`. When the quotient
/// is infinite (e.g. `GL2`) the listing covers the torsion part and a box of
/// the free part and is flagged as truncated.
#[derive(Clone, Debug)]
pub struct OmegaListing {
    pub elements: Vec<ExtAffineElement>,
    pub truncated: bool,
    pub free_rank: usize,
}

/// Diagonalization data for the quotient `X_*(T) / ZΦ^∨`.
struct LatticeQuotient {
    /// Diagonal entries (positive) of `U · M · V`, one per pivot.
    diag: Vec<i64>,
    u: Matrix,
    u_inv: Matrix,
    rank: usize,
    n: usize,
}

impl LatticeQuotient {
    /// Diagonalizes the n×k matrix whose columns span the sublattice.
    fn new(n: usize, columns: &[Vec<i64>]) -> LatticeQuotient {
        let k = columns.len();
        let mut m = vec![vec![0i64; k]; n];
        for (j, col) in columns.iter().enumerate() {
            for i in 0..n {
                m[i][j] = col[i];
            }
        }
        let mut u = Matrix::identity(n);
        let mut u_inv = Matrix::identity(n);

        // Row operations act on U (and inversely on U_inv as column ops);
        // column operations need no tracking.
        let row_swap = |m: &mut Vec<Vec<i64>>, u: &mut Matrix, ui: &mut Matrix, a: usize, b: usize| {
            m.swap(a, b);
            for j in 0..n {
                let (x, y) = (u.get(a, j), u.get(b, j));
                u.set(a, j, y);
                u.set(b, j, x);
            }
            for i in 0..n {
                let (x, y) = (ui.get(i, a), ui.get(i, b));
                ui.set(i, a, y);
                ui.set(i, b, x);
            }
        };
        let row_axpy = |m: &mut Vec<Vec<i64>>, u: &mut Matrix, ui: &mut Matrix, c: i64, src: usize, dst: usize| {
            // row dst += c * row src; U_inv col src -= c * col dst.
            for j in 0..k {
                m[dst][j] += c * m[src][j];
            }
            for j in 0..n {
                let v = u.get(dst, j) + c * u.get(src, j);
                u.set(dst, j, v);
            }
            for i in 0..n {
                let v = ui.get(i, src) - c * ui.get(i, dst);
                ui.set(i, src, v);
            }
        };
        let row_negate = |m: &mut Vec<Vec<i64>>, u: &mut Matrix, ui: &mut Matrix, r: usize| {
            for j in 0..k {
                m[r][j] = -m[r][j];
            }
            for j in 0..n {
                u.set(r, j, -u.get(r, j));
            }
            for i in 0..n {
                ui.set(i, r, -ui.get(i, r));
            }
        };

        let mut t = 0usize;
        while t < n && t < k {
            // Find a pivot in the remaining submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..k {
                    if m[i][j] != 0
                        && pivot.map_or(true, |(pi, pj)| m[i][j].abs() < m[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            if pi != t {
                row_swap(&mut m, &mut u, &mut u_inv, pi, t);
            }
            if pj != t {
                for row in m.iter_mut() {
                    row.swap(pj, t);
                }
            }
            // Clear column t below/above and row t to the right.
            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in 0..n {
                    if i != t && m[i][t] != 0 {
                        let c = -(m[i][t] / m[t][t]);
                        row_axpy(&mut m, &mut u, &mut u_inv, c, t, i);
                        if m[i][t] != 0 {
                            row_swap(&mut m, &mut u, &mut u_inv, i, t);
                            dirty = true;
                        }
                    }
                }
                for j in 0..k {
                    if j != t && m[t][j] != 0 {
                        let c = -(m[t][j] / m[t][t]);
                        for row in m.iter_mut() {
                            let v = row[t];
                            row[j] += c * v;
                        }
                        if m[t][j] != 0 {
                            for row in m.iter_mut() {
                                row.swap(j, t);
                            }
                            dirty = true;
                        }
                    }
                }
            }
            if m[t][t] < 0 {
                row_negate(&mut m, &mut u, &mut u_inv, t);
            }
            t += 1;
        }
        let diag: Vec<i64> = (0..t).map(|i| m[i][i]).collect();
        LatticeQuotient {
            diag,
            u,
            u_inv,
            rank: t,
            n,
        }
    }

    /// Canonical residue of a lattice vector in the quotient: torsion
    /// residues followed by free coordinates.
    fn residue(&self, lam: &[i64]) -> Vec<i64> {
        let y = self.u.apply(lam);
        let mut sig = Vec::with_capacity(self.n);
        for i in 0..self.rank {
            sig.push(y[i].rem_euclid(self.diag[i]));
        }
        for item in y.iter().take(self.n).skip(self.rank) {
            sig.push(*item);
        }
        sig
    }

    /// A lattice representative of the class with the given residue.
    fn representative(&self, sig: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.n];
        for (i, &v) in sig.iter().enumerate().take(self.n) {
            y[i] = v;
        }
        self.u_inv.apply(&y)
    }

    fn torsion_sizes(&self) -> Vec<i64> {
        self.diag.clone()
    }

    fn free_rank(&self) -> usize {
        self.n - self.rank
    }
}

/// The extended affine Weyl group of a root datum, with cached affine
/// generators and the lattice quotient behind `Ω`. Pure value semantics;
/// safe to share across threads.
pub struct AffineWeyl {
    rd: Arc<RootDatum>,
    generators: Vec<ExtAffineElement>,
    num_simple: usize,
    quotient: LatticeQuotient,
}

impl AffineWeyl {
    pub fn new(rd: Arc<RootDatum>) -> AffineWeyl {
        let k = rd.num_simple();
        let mut generators = Vec::new();
        let components = rd.components().to_vec();
        let highest = rd.highest_roots().to_vec();
        // Index 0: affine node of component 0 (if any roots exist).
        if !components.is_empty() {
            let theta = &highest[0];
            generators.push(ExtAffineElement {
                translation: Cocharacter(theta.coroot.clone()),
                finite: rd.reflection_for(&theta.root, &theta.coroot),
            });
        }
        for i in 0..k {
            generators.push(ExtAffineElement::from_finite(rd.simple_reflection(i)));
        }
        for theta in highest.iter().skip(1) {
            generators.push(ExtAffineElement {
                translation: Cocharacter(theta.coroot.clone()),
                finite: rd.reflection_for(&theta.root, &theta.coroot),
            });
        }
        let quotient = LatticeQuotient::new(
            rd.rank(),
            &(0..k).map(|i| rd.simple_coroot(i).to_vec()).collect::<Vec<_>>(),
        );
        AffineWeyl {
            rd,
            generators,
            num_simple: k,
            quotient,
        }
    }

    pub fn root_datum(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn rank(&self) -> usize {
        self.rd.rank()
    }

    pub fn identity(&self) -> ExtAffineElement {
        ExtAffineElement::identity(self.rd.rank())
    }

    /// All affine simple reflections, ordered by their index.
    pub fn affine_simple_reflections(&self) -> &[ExtAffineElement] {
        &self.generators
    }

    pub fn generator(&self, idx: usize) -> &ExtAffineElement {
        &self.generators[idx]
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn num_simple(&self) -> usize {
        self.num_simple
    }

    /// Iwahori–Matsumoto length:
    /// `l(t(λ)w) = Σ_{α>0, w⁻¹α>0} |⟨α,λ⟩| + Σ_{α>0, w⁻¹α<0} |⟨α,λ⟩ - 1|`.
    pub fn length(&self, x: &ExtAffineElement) -> i64 {
        let mut total = 0i64;
        for rp in self.rd.positive_roots() {
            let pairing = dot(&rp.root, &x.translation.0);
            let w_inv_alpha = x.finite.matrix.apply_transpose(&rp.root);
            if self.rd.is_positive_root(&w_inv_alpha) {
                total += pairing.abs();
            } else {
                total += (pairing - 1).abs();
            }
        }
        total
    }

    /// Class of an element in `W/W_aff ≅ X_*(T)/ZΦ^∨`, as a canonical
    /// residue vector. Two elements are Bruhat-comparable only if their
    /// classes agree.
    pub fn omega_class(&self, x: &ExtAffineElement) -> Vec<i64> {
        self.quotient.residue(&x.translation.0)
    }

    /// Greedy descent stripping: returns affine generator indices
    /// `[i1, ..., ik]` and `ω` with `x = s_{i1}···s_{ik}·ω`, `k = l(x)`,
    /// `l(ω) = 0`. Always strips the smallest descent index.
    pub fn reduced_word(&self, x: &ExtAffineElement) -> (Vec<usize>, ExtAffineElement) {
        let mut cur = x.clone();
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len.max(0) as usize);
        'outer: while len > 0 {
            for (g, s) in self.generators.iter().enumerate() {
                let next = s.mul(&cur);
                let next_len = self.length(&next);
                if next_len < len {
                    word.push(g);
                    cur = next;
                    len = next_len;
                    continue 'outer;
                }
            }
            unreachable!("element of positive length has a left descent");
        }
        (word, cur)
    }

    /// Rebuilds an element from a word of affine generator indices and a
    /// length-zero part.
    pub fn from_word(&self, word: &[usize], omega: &ExtAffineElement) -> ExtAffineElement {
        let mut acc = self.identity();
        for &g in word {
            acc = acc.mul(&self.generators[g]);
        }
        acc.mul(omega)
    }

    /// Extended Bruhat order: the standard lifting recursion within each
    /// `Ω`-coset; elements of distinct cosets are incomparable.
    pub fn bruhat_leq(&self, v: &ExtAffineElement, w: &ExtAffineElement) -> bool {
        if v == w {
            return true;
        }
        let lv = self.length(v);
        let lw = self.length(w);
        if lv > lw || self.omega_class(v) != self.omega_class(w) {
            return false;
        }
        self.bruhat_leq_inner(v.clone(), lv, w.clone(), lw)
    }

    fn bruhat_leq_inner(
        &self,
        v: ExtAffineElement,
        lv: i64,
        w: ExtAffineElement,
        lw: i64,
    ) -> bool {
        if v == w {
            return true;
        }
        if lv > lw || lw == 0 {
            return false;
        }
        for s in &self.generators {
            let sw = s.mul(&w);
            let lsw = self.length(&sw);
            if lsw < lw {
                let sv = s.mul(&v);
                let lsv = self.length(&sv);
                return if lsv < lv {
                    self.bruhat_leq_inner(sv, lsv, sw, lsw)
                } else {
                    self.bruhat_leq_inner(v, lv, sw, lsw)
                };
            }
        }
        unreachable!("element of positive length has a left descent")
    }

    /// Elements of `W_aff` with length at most `max_len`, ordered by
    /// (length, translation, matrix).
    pub fn ball(&self, max_len: i64) -> Vec<ExtAffineElement> {
        let mut out = vec![self.identity()];
        let mut seen: HashSet<ExtAffineElement> = out.iter().cloned().collect();
        let mut level: Vec<ExtAffineElement> = out.clone();
        for l in 1..=max_len {
            let mut next = BTreeSet::new();
            for x in &level {
                for s in &self.generators {
                    let y = s.mul(x);
                    if !seen.contains(&y) && self.length(&y) == l {
                        next.insert(y);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            for y in &next {
                seen.insert(y.clone());
            }
            level = next.iter().cloned().collect();
            out.extend(next);
        }
        out
    }

    /// Elements of `W` with length at most `max_len`: the `W_aff` ball
    /// translated by each listed `Ω` element. The boolean reports whether
    /// the `Ω` listing (hence the result) is truncated.
    pub fn ball_extended(&self, max_len: i64) -> (Vec<ExtAffineElement>, bool) {
        let omega = self.omega_elements();
        let ball = self.ball(max_len);
        let mut out = Vec::with_capacity(ball.len() * omega.elements.len());
        for om in &omega.elements {
            for x in &ball {
                out.push(x.mul(om));
            }
        }
        out.sort_by_cached_key(|x| (self.length(x), x.clone()));
        (out, omega.truncated)
    }

    /// All length-zero elements, one per class of `X_*(T)/ZΦ^∨`. For
    /// infinite quotients the free directions are listed within a small box
    /// and the listing is flagged truncated.
    pub fn omega_elements(&self) -> OmegaListing {
        self.omega_elements_with_box(OMEGA_FREE_BOX)
    }

    pub fn omega_elements_with_box(&self, free_box: i64) -> OmegaListing {
        let torsion = self.quotient.torsion_sizes();
        let free_rank = self.quotient.free_rank();
        let mut sigs: Vec<Vec<i64>> = vec![vec![]];
        for &d in &torsion {
            let mut next = Vec::new();
            for sig in &sigs {
                for c in 0..d {
                    let mut s = sig.clone();
                    s.push(c);
                    next.push(s);
                }
            }
            sigs = next;
        }
        if free_rank > 0 {
            for _ in 0..free_rank {
                let mut next = Vec::new();
                for sig in &sigs {
                    for c in -free_box..=free_box {
                        let mut s = sig.clone();
                        s.push(c);
                        next.push(s);
                    }
                }
                sigs = next;
            }
        }
        let mut elements: Vec<ExtAffineElement> = sigs
            .iter()
            .map(|sig| self.omega_of_class(sig))
            .collect();
        elements.sort();
        elements.dedup();
        OmegaListing {
            elements,
            truncated: free_rank > 0,
            free_rank,
        }
    }

    /// Generators of `Ω`: one per torsion factor and one per free factor of
    /// `X_*(T)/ZΦ^∨`. An element commuting with these (and their implied
    /// inverses) commutes with all of `Ω`.
    pub fn omega_generators(&self) -> Vec<ExtAffineElement> {
        let torsion = self.quotient.torsion_sizes();
        let free_rank = self.quotient.free_rank();
        let mut out = Vec::new();
        for (i, &d) in torsion.iter().enumerate() {
            if d > 1 {
                let mut sig = vec![0i64; torsion.len() + free_rank];
                sig[i] = 1;
                out.push(self.omega_of_class(&sig));
            }
        }
        for j in 0..free_rank {
            let mut sig = vec![0i64; torsion.len() + free_rank];
            sig[torsion.len() + j] = 1;
            out.push(self.omega_of_class(&sig));
        }
        out
    }

    /// The length-zero element in the class with the given residue signature.
    fn omega_of_class(&self, sig: &[i64]) -> ExtAffineElement {
        let lam = self.quotient.representative(sig);
        let t = ExtAffineElement::from_translation(Cocharacter(lam));
        let (_, omega) = self.reduced_word(&t);
        debug_assert_eq!(self.length(&omega), 0);
        omega
    }

    /// Enumerates the finite parabolic subgroup `W_f` generated by a facet,
    /// ordered by (length, translation, matrix).
    pub fn parabolic_elements(&self, facet: &Facet) -> Result<Vec<ExtAffineElement>> {
        for &g in &facet.gens {
            if g >= self.generators.len() {
                return Err(Error::Parse(format!("facet generator {g} out of range")));
            }
        }
        let gens: Vec<&ExtAffineElement> = facet.gens.iter().map(|&g| &self.generators[g]).collect();
        let mut seen: HashSet<ExtAffineElement> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        let mut frontier = 0usize;
        while frontier < out.len() {
            let end = out.len();
            for idx in frontier..end {
                let x = out[idx].clone();
                for s in &gens {
                    let y = s.mul(&x);
                    if seen.insert(y.clone()) {
                        if out.len() >= PARABOLIC_CAP {
                            return Err(Error::InfiniteParabolic);
                        }
                        out.push(y);
                    }
                }
            }
            frontier = end;
        }
        out.sort_by_cached_key(|x| (self.length(x), x.clone()));
        Ok(out)
    }

    /// `P_f(q) = Σ_{w ∈ W_f} q^{l(w)}`.
    pub fn poincare_polynomial(&self, facet: &Facet) -> Result<LaurentPoly> {
        let elems = self.parabolic_elements(facet)?;
        Ok(LaurentPoly::from_pairs(
            elems.iter().map(|x| (self.length(x), 1i64)),
        ))
    }

    /// The full double coset `W_f · x · W_f'` with its minimal-length
    /// representative.
    pub fn double_coset(
        &self,
        facet_left: &Facet,
        x: &ExtAffineElement,
        facet_right: &Facet,
    ) -> Result<DoubleCoset> {
        let left: Vec<&ExtAffineElement> =
            facet_left.gens.iter().map(|&g| &self.generators[g]).collect();
        let right: Vec<&ExtAffineElement> =
            facet_right.gens.iter().map(|&g| &self.generators[g]).collect();
        for &g in facet_left.gens.iter().chain(&facet_right.gens) {
            if g >= self.generators.len() {
                return Err(Error::Parse(format!("facet generator {g} out of range")));
            }
        }
        // Closure under the facet generators on both sides; the coset is
        // finite of size at most |W_f|·|W_f'|.
        let mut seen: HashSet<ExtAffineElement> = HashSet::new();
        let mut stack = vec![x.clone()];
        seen.insert(x.clone());
        while let Some(y) = stack.pop() {
            for s in &left {
                let z = s.mul(&y);
                if seen.insert(z.clone()) {
                    if seen.len() > PARABOLIC_CAP {
                        return Err(Error::InfiniteParabolic);
                    }
                    stack.push(z);
                }
            }
            for s in &right {
                let z = y.mul(s);
                if seen.insert(z.clone()) {
                    if seen.len() > PARABOLIC_CAP {
                        return Err(Error::InfiniteParabolic);
                    }
                    stack.push(z);
                }
            }
        }
        let mut elements: Vec<ExtAffineElement> = seen.into_iter().collect();
        elements.sort_by_cached_key(|e| (self.length(e), e.clone()));
        let min_rep = elements[0].clone();
        Ok(DoubleCoset {
            facet_left: facet_left.clone(),
            facet_right: facet_right.clone(),
            min_rep,
            elements,
        })
    }

    /// All double cosets whose minimal representative has length at most
    /// `length_bound`, ordered by (length, representative). The boolean
    /// reports `Ω` truncation.
    pub fn enumerate_double_cosets(
        &self,
        facet_left: &Facet,
        facet_right: &Facet,
        length_bound: i64,
    ) -> Result<(Vec<DoubleCoset>, bool)> {
        let (ball, truncated) = self.ball_extended(length_bound);
        let mut reps: HashMap<ExtAffineElement, DoubleCoset> = HashMap::new();
        let mut known: HashSet<ExtAffineElement> = HashSet::new();
        for x in ball {
            if known.contains(&x) {
                continue;
            }
            let coset = self.double_coset(facet_left, &x, facet_right)?;
            for e in coset.elements() {
                known.insert(e.clone());
            }
            reps.entry(coset.min_rep.clone()).or_insert(coset);
        }
        let mut out: Vec<DoubleCoset> = reps
            .into_values()
            .filter(|c| self.length(&c.min_rep) <= length_bound)
            .collect();
        out.sort_by_cached_key(|c| (self.length(&c.min_rep), c.min_rep.clone()));
        Ok((out, truncated))
    }

    /// The μ-admissible set `{w ∈ W : w ≤ t(λ), λ ∈ W_0(μ)}` for dominant μ,
    /// ordered by (length, translation, matrix).
    pub fn admissible_set(&self, mu: &Cocharacter) -> Result<Vec<ExtAffineElement>> {
        if !self.rd.is_dominant(mu) {
            return Err(Error::NotDominant);
        }
        let targets: Vec<ExtAffineElement> = self
            .rd
            .weyl_orbit(mu)
            .into_iter()
            .map(|lam| ExtAffineElement::from_translation(lam))
            .collect();
        let bound = self.length(&targets[0]);
        debug_assert!(targets.iter().all(|t| self.length(t) == bound));
        // All candidates live in the Ω-coset of t(μ): enumerate the W_aff
        // ball times that coset's length-zero element.
        let (_, omega) = self.reduced_word(&ExtAffineElement::from_translation(mu.clone()));
        let mut out = Vec::new();
        for x in self.ball(bound) {
            let cand = x.mul(&omega);
            if targets.iter().any(|t| self.bruhat_leq(&cand, t)) {
                out.push(cand);
            }
        }
        out.sort_by_cached_key(|x| (self.length(x), x.clone()));
        Ok(out)
    }

    /// The image of the μ-admissible set in `W_f \ W / W_f`.
    pub fn admissible_set_f(&self, mu: &Cocharacter, facet: &Facet) -> Result<Vec<DoubleCoset>> {
        let adm = self.admissible_set(mu)?;
        let mut reps: HashMap<ExtAffineElement, DoubleCoset> = HashMap::new();
        for x in adm {
            let coset = self.double_coset(facet, &x, facet)?;
            reps.entry(coset.min_rep.clone()).or_insert(coset);
        }
        let mut out: Vec<DoubleCoset> = reps.into_values().collect();
        out.sort_by_cached_key(|c| (self.length(&c.min_rep), c.min_rep.clone()));
        Ok(out)
    }
}

impl fmt::Debug for AffineWeyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineWeyl({})", self.rd.name())
    }
}
