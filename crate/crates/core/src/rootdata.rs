//! Based root data of split reductive groups and the finite Weyl group
//! acting on the cocharacter lattice.
//!
//! A datum is given by explicit simple root and coroot vectors in dual
//! copies of `Z^n` paired by the dot product, so that isogenous groups
//! (`SL2` vs `PGL2`) and non-semisimple groups (`GL2`) stay distinguishable.
//! Construction validates the Cartan conditions, enumerates the finite Weyl
//! group with canonical reduced words, and closes the root system.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on Weyl group enumeration; exceeding it means the datum is
/// not of finite type at desk scale.
pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// A square integer matrix acting on the cocharacter lattice, row-major.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    n: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in &rows {
            assert_eq!(r.len(), n, "matrix rows must be square");
            data.extend_from_slice(r);
        }
        Matrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        Matrix { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n];
        for i in 0..n {
            for j in 0..n {
                out[i] += self.data[i * n + j] * v[j];
            }
        }
        out
    }

    /// Applies the transpose, i.e. the inverse contragredient action on the
    /// character lattice: if `self` is the matrix of `w` on cocharacters,
    /// `apply_transpose(chi)` computes `w^{-1}(chi)`.
    pub fn apply_transpose(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n];
        for j in 0..n {
            let c = v[j];
            if c == 0 {
                continue;
            }
            for i in 0..n {
                out[i] += self.data[j * n + i] * c;
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    pub fn det(&self) -> i64 {
        let n = self.n;
        match n {
            0 => 1,
            1 => self.data[0],
            _ => {
                let mut acc = 0i64;
                for j in 0..n {
                    let a = self.get(0, j);
                    if a == 0 {
                        continue;
                    }
                    let minor = self.minor(0, j);
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    acc += sign * a * minor.det();
                }
                acc
            }
        }
    }

    fn minor(&self, row: usize, col: usize) -> Matrix {
        let n = self.n;
        let mut data = Vec::with_capacity((n - 1) * (n - 1));
        for i in 0..n {
            if i == row {
                continue;
            }
            for j in 0..n {
                if j == col {
                    continue;
                }
                data.push(self.get(i, j));
            }
        }
        Matrix { n: n - 1, data }
    }

    /// Inverse of a matrix with determinant ±1, via the adjugate.
    pub fn inverse_unimodular(&self) -> Matrix {
        let n = self.n;
        let d = self.det();
        assert!(d == 1 || d == -1, "matrix is not unimodular");
        if n == 0 {
            return self.clone();
        }
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                // adj[j][i] = sign * minor(i, j)
                data[j * n + i] = sign * self.minor(i, j).det() * d;
            }
        }
        Matrix { n, data }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{:?}", &self.data[i * self.n..(i + 1) * self.n])?;
        }
        write!(f, "]")
    }
}

/// A cocharacter, i.e. a vector in `X_*(T) = Z^n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn zero(rank: usize) -> Self {
        Cocharacter(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Cocharacter) -> Cocharacter {
        Cocharacter(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Cocharacter) -> Cocharacter {
        Cocharacter(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Cocharacter {
        Cocharacter(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> Cocharacter {
        Cocharacter(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An element of the finite Weyl group, identified by its matrix on the
/// cocharacter lattice. Reduced words and lengths are cached in the datum's
/// enumeration table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteWeylElement {
    pub matrix: Matrix,
}

impl fmt::Debug for FiniteWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.matrix)
    }
}

/// One positive root together with its coroot and its coordinates in the
/// simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootPair {
    /// The root as a character vector.
    pub root: Vec<i64>,
    /// The corresponding coroot as a cocharacter vector.
    pub coroot: Vec<i64>,
    /// Coordinates of `root` in the simple roots; all nonnegative.
    pub simple_coords: Vec<i64>,
}

impl RootPair {
    pub fn height(&self) -> i64 {
        self.simple_coords.iter().sum()
    }
}

struct W0Entry {
    element: FiniteWeylElement,
    /// Canonical reduced word in 1-based simple reflection indices,
    /// lexicographically smallest among the shortest.
    word: Vec<usize>,
    inverse: usize,
}

/// JSON wire format for a root datum.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RootDatumSpec {
    pub name: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

/// A validated based root datum with its cached Weyl group and root system.
/// Immutable after construction; share freely across threads.
pub struct RootDatum {
    name: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<RootPair>,
    positive_root_set: HashMap<Vec<i64>, usize>,
    two_rho: Vec<i64>,
    sum_positive_coroots: Vec<i64>,
    w0: Vec<W0Entry>,
    w0_index: HashMap<Matrix, usize>,
    components: Vec<Vec<usize>>,
    highest_roots: Vec<RootPair>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
    }
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}, rank {})", self.name, self.rank)
    }
}

impl RootDatum {
    /// Validates and builds a root datum, enumerating the Weyl group (with
    /// the given element cap) and the positive root system.
    pub fn build(spec: &RootDatumSpec, cap: usize) -> Result<RootDatum> {
        let n = spec.rank;
        if spec.simple_roots.len() != spec.simple_coroots.len() {
            return Err(Error::NotGcm(
                "simple roots and coroots must come in pairs".into(),
            ));
        }
        for v in spec.simple_roots.iter().chain(&spec.simple_coroots) {
            if v.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let k = spec.simple_roots.len();

        // Cartan matrix and generalized-Cartan conditions.
        let mut cartan = vec![vec![0i64; k]; k];
        for i in 0..k {
            for j in 0..k {
                cartan[i][j] = dot(&spec.simple_roots[i], &spec.simple_coroots[j]);
            }
        }
        for i in 0..k {
            if cartan[i][i] != 2 {
                return Err(Error::NotGcm(format!(
                    "diagonal entry C[{i}][{i}] = {} != 2",
                    cartan[i][i]
                )));
            }
            for j in 0..k {
                if i != j {
                    if cartan[i][j] > 0 {
                        return Err(Error::NotGcm(format!(
                            "off-diagonal entry C[{i}][{j}] = {} > 0",
                            cartan[i][j]
                        )));
                    }
                    if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                        return Err(Error::NotGcm(format!(
                            "zero pattern asymmetric at ({i},{j})"
                        )));
                    }
                }
            }
        }
        if integer_rank(&spec.simple_roots) != k {
            return Err(Error::NotGcm("simple roots are linearly dependent".into()));
        }
        if integer_rank(&spec.simple_coroots) != k {
            return Err(Error::NotGcm(
                "simple coroots are linearly dependent".into(),
            ));
        }

        // Simple reflection matrices on X_*: s_i = 1 - alpha_i^v ⊗ alpha_i.
        let mut gens = Vec::with_capacity(k);
        for i in 0..k {
            let mut m = Matrix::identity(n);
            for r in 0..n {
                for c in 0..n {
                    m.data[r * n + c] -= spec.simple_coroots[i][r] * spec.simple_roots[i][c];
                }
            }
            gens.push(m);
        }

        // Breadth-first enumeration of W0; first discovery fixes the
        // canonical (shortest, lex-smallest) reduced word of each element.
        let mut w0: Vec<W0Entry> = Vec::new();
        let mut w0_index: HashMap<Matrix, usize> = HashMap::new();
        let identity = Matrix::identity(n);
        w0_index.insert(identity.clone(), 0);
        w0.push(W0Entry {
            element: FiniteWeylElement { matrix: identity },
            word: vec![],
            inverse: 0,
        });
        let mut frontier = 0usize;
        while frontier < w0.len() {
            let end = w0.len();
            for idx in frontier..end {
                for (i, g) in gens.iter().enumerate() {
                    let m = w0[idx].element.matrix.mul(g);
                    if !w0_index.contains_key(&m) {
                        if w0.len() >= cap {
                            return Err(Error::NotFiniteType { cap });
                        }
                        let mut word = w0[idx].word.clone();
                        word.push(i + 1);
                        w0_index.insert(m.clone(), w0.len());
                        w0.push(W0Entry {
                            element: FiniteWeylElement { matrix: m },
                            word,
                            inverse: 0,
                        });
                    }
                }
            }
            frontier = end;
        }
        // Inverses by reversed-word products.
        for idx in 0..w0.len() {
            let mut m = Matrix::identity(n);
            for &i in w0[idx].word.iter().rev() {
                m = m.mul(&gens[i - 1]);
            }
            let inv = *w0_index.get(&m).expect("inverse must lie in the group");
            w0[idx].inverse = inv;
        }

        // Root system closure, tracking (root, coroot, simple coordinates).
        let mut roots: Vec<RootPair> = Vec::new();
        let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
        for i in 0..k {
            let mut coords = vec![0i64; k];
            coords[i] = 1;
            let rp = RootPair {
                root: spec.simple_roots[i].clone(),
                coroot: spec.simple_coroots[i].clone(),
                simple_coords: coords,
            };
            seen.insert(rp.root.clone(), roots.len());
            roots.push(rp);
        }
        let mut frontier = 0usize;
        while frontier < roots.len() {
            let end = roots.len();
            for idx in frontier..end {
                for j in 0..k {
                    let pairing = dot(&roots[idx].root, &spec.simple_coroots[j]);
                    let co_pairing = dot(&spec.simple_roots[j], &roots[idx].coroot);
                    let new_root: Vec<i64> = roots[idx]
                        .root
                        .iter()
                        .zip(&spec.simple_roots[j])
                        .map(|(a, b)| a - pairing * b)
                        .collect();
                    if seen.contains_key(&new_root) {
                        continue;
                    }
                    let new_coroot: Vec<i64> = roots[idx]
                        .coroot
                        .iter()
                        .zip(&spec.simple_coroots[j])
                        .map(|(a, b)| a - co_pairing * b)
                        .collect();
                    let mut coords = roots[idx].simple_coords.clone();
                    coords[j] -= pairing;
                    let rp = RootPair {
                        root: new_root,
                        coroot: new_coroot,
                        simple_coords: coords,
                    };
                    seen.insert(rp.root.clone(), roots.len());
                    roots.push(rp);
                    if roots.len() > 4 * cap {
                        return Err(Error::NotFiniteType { cap });
                    }
                }
            }
            frontier = end;
        }
        let mut positive_roots: Vec<RootPair> = roots
            .into_iter()
            .filter(|r| r.simple_coords.iter().all(|&c| c >= 0))
            .collect();
        // Graded lexicographic: by height, then by simple coordinates.
        positive_roots.sort_by(|a, b| {
            (a.height(), &a.simple_coords).cmp(&(b.height(), &b.simple_coords))
        });
        let positive_root_set: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.root.clone(), i))
            .collect();

        let mut two_rho = vec![0i64; n];
        let mut sum_positive_coroots = vec![0i64; n];
        for r in &positive_roots {
            for i in 0..n {
                two_rho[i] += r.root[i];
                sum_positive_coroots[i] += r.coroot[i];
            }
        }

        // Irreducible components of the Cartan graph.
        let mut comp_of = vec![usize::MAX; k];
        let mut components: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            if comp_of[i] != usize::MAX {
                continue;
            }
            let c = components.len();
            let mut stack = vec![i];
            let mut comp = Vec::new();
            comp_of[i] = c;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for u in 0..k {
                    if comp_of[u] == usize::MAX && cartan[v][u] != 0 {
                        comp_of[u] = c;
                        stack.push(u);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        // Highest root of each component: maximal height among roots
        // supported on that component.
        let mut highest_roots = Vec::new();
        for comp in &components {
            let best = positive_roots
                .iter()
                .filter(|r| {
                    r.simple_coords
                        .iter()
                        .enumerate()
                        .all(|(j, &c)| c == 0 || comp.contains(&j))
                })
                .max_by_key(|r| (r.height(), r.simple_coords.clone()))
                .expect("component has at least its simple root");
            highest_roots.push(best.clone());
        }

        Ok(RootDatum {
            name: spec.name.clone(),
            rank: n,
            simple_roots: spec.simple_roots.clone(),
            simple_coroots: spec.simple_coroots.clone(),
            cartan,
            positive_roots,
            positive_root_set,
            two_rho,
            sum_positive_coroots,
            w0,
            w0_index,
            components,
            highest_roots,
        })
    }

    /// The standard based root datum of a named group.
    pub fn preset(name: &str) -> Result<RootDatum> {
        let spec = match name {
            "SL2" => RootDatumSpec {
                name: "SL2".into(),
                rank: 1,
                simple_roots: vec![vec![2]],
                simple_coroots: vec![vec![1]],
            },
            "PGL2" => RootDatumSpec {
                name: "PGL2".into(),
                rank: 1,
                simple_roots: vec![vec![1]],
                simple_coroots: vec![vec![2]],
            },
            "GL2" => RootDatumSpec {
                name: "GL2".into(),
                rank: 2,
                simple_roots: vec![vec![1, -1]],
                simple_coroots: vec![vec![1, -1]],
            },
            "SL3" => RootDatumSpec {
                name: "SL3".into(),
                rank: 2,
                simple_roots: vec![vec![2, -1], vec![-1, 2]],
                simple_coroots: vec![vec![1, 0], vec![0, 1]],
            },
            "PGL3" => RootDatumSpec {
                name: "PGL3".into(),
                rank: 2,
                simple_roots: vec![vec![1, 0], vec![0, 1]],
                simple_coroots: vec![vec![2, -1], vec![-1, 2]],
            },
            "Sp4" => RootDatumSpec {
                name: "Sp4".into(),
                rank: 2,
                simple_roots: vec![vec![1, -1], vec![0, 2]],
                simple_coroots: vec![vec![1, -1], vec![0, 1]],
            },
            "SO5" => RootDatumSpec {
                name: "SO5".into(),
                rank: 2,
                simple_roots: vec![vec![1, -1], vec![0, 1]],
                simple_coroots: vec![vec![1, -1], vec![0, 2]],
            },
            "G2" => RootDatumSpec {
                name: "G2".into(),
                rank: 2,
                simple_roots: vec![vec![2, -1], vec![-3, 2]],
                simple_coroots: vec![vec![1, 0], vec![0, 1]],
            },
            other => return Err(Error::UnknownPreset(other.into())),
        };
        RootDatum::build(&spec, DEFAULT_WEYL_CAP)
    }

    pub const PRESET_NAMES: [&'static str; 8] =
        ["SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SO5", "G2"];

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots (may be smaller than the rank).
    pub fn num_simple(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.simple_roots[i]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.simple_coroots[i]
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in graded lexicographic order.
    pub fn positive_roots(&self) -> &[RootPair] {
        &self.positive_roots
    }

    pub fn is_positive_root(&self, v: &[i64]) -> bool {
        self.positive_root_set.contains_key(v)
    }

    /// Indices of simple roots per irreducible component.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// The highest root of each irreducible component.
    pub fn highest_roots(&self) -> &[RootPair] {
        &self.highest_roots
    }

    /// `⟨2ρ, λ⟩ = Σ_{α>0} ⟨α, λ⟩`.
    pub fn rho_pairing(&self, lam: &Cocharacter) -> i64 {
        dot(&self.two_rho, &lam.0)
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// The sum of all positive coroots, a strictly dominant cocharacter of
    /// the coroot lattice.
    pub fn sum_positive_coroots(&self) -> Cocharacter {
        Cocharacter(self.sum_positive_coroots.clone())
    }

    pub fn weyl_order(&self) -> usize {
        self.w0.len()
    }

    /// Elements of `W_0` in enumeration order (by length, then by the lex
    /// order of canonical words).
    pub fn weyl_elements(&self) -> impl Iterator<Item = &FiniteWeylElement> {
        self.w0.iter().map(|e| &e.element)
    }

    pub fn weyl_identity(&self) -> FiniteWeylElement {
        FiniteWeylElement {
            matrix: Matrix::identity(self.rank),
        }
    }

    pub fn simple_reflection(&self, i: usize) -> FiniteWeylElement {
        self.reflection_for(self.simple_root(i), self.simple_coroot(i))
    }

    /// The reflection `λ ↦ λ - ⟨α, λ⟩ α^∨` attached to a root/coroot pair.
    pub fn reflection_for(&self, root: &[i64], coroot: &[i64]) -> FiniteWeylElement {
        let mut m = Matrix::identity(self.rank);
        let n = self.rank;
        for r in 0..n {
            for c in 0..n {
                m.data[r * n + c] -= coroot[r] * root[c];
            }
        }
        FiniteWeylElement { matrix: m }
    }

    fn w0_entry(&self, w: &FiniteWeylElement) -> &W0Entry {
        let idx = self
            .w0_index
            .get(&w.matrix)
            .expect("matrix is not an element of this Weyl group");
        &self.w0[*idx]
    }

    /// Canonical reduced word of a Weyl element as 1-based simple indices.
    pub fn weyl_word(&self, w: &FiniteWeylElement) -> &[usize] {
        &self.w0_entry(w).word
    }

    pub fn weyl_length(&self, w: &FiniteWeylElement) -> usize {
        self.w0_entry(w).word.len()
    }

    /// `det(w) = (-1)^{l(w)}`.
    pub fn weyl_det(&self, w: &FiniteWeylElement) -> i64 {
        if self.weyl_length(w) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn weyl_inverse(&self, w: &FiniteWeylElement) -> FiniteWeylElement {
        self.w0[self.w0_entry(w).inverse].element.clone()
    }

    pub fn weyl_from_word(&self, word: &[usize]) -> Result<FiniteWeylElement> {
        let mut m = Matrix::identity(self.rank);
        for &i in word {
            if i == 0 || i > self.num_simple() {
                return Err(Error::Parse(format!("simple reflection index {i} out of range")));
            }
            m = m.mul(&self.simple_reflection(i - 1).matrix);
        }
        Ok(FiniteWeylElement { matrix: m })
    }

    pub fn is_dominant(&self, lam: &Cocharacter) -> bool {
        (0..self.num_simple()).all(|i| dot(&self.simple_roots[i], &lam.0) >= 0)
    }

    pub fn is_antidominant(&self, lam: &Cocharacter) -> bool {
        (0..self.num_simple()).all(|i| dot(&self.simple_roots[i], &lam.0) <= 0)
    }

    /// The unique dominant representative of the orbit `W_0(λ)` together
    /// with a minimal-length `w` such that `w(λ)` is dominant.
    pub fn dominant_representative(&self, lam: &Cocharacter) -> (Cocharacter, FiniteWeylElement) {
        for entry in &self.w0 {
            let moved = Cocharacter(entry.element.matrix.apply(&lam.0));
            if self.is_dominant(&moved) {
                return (moved, entry.element.clone());
            }
        }
        unreachable!("every orbit contains a dominant cocharacter")
    }

    /// The full orbit `W_0(λ)` as a sorted, deduplicated list.
    pub fn weyl_orbit(&self, lam: &Cocharacter) -> Vec<Cocharacter> {
        let mut orbit: Vec<Cocharacter> = self
            .w0
            .iter()
            .map(|e| Cocharacter(e.element.matrix.apply(&lam.0)))
            .collect();
        orbit.sort();
        orbit.dedup();
        orbit
    }

    /// Pairing `⟨χ, λ⟩` of a character with a cocharacter.
    pub fn pairing(&self, chi: &[i64], lam: &Cocharacter) -> i64 {
        dot(chi, &lam.0)
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank of an integer matrix given as a list of row vectors, via
/// fraction-free Gaussian elimination.
fn integer_rank(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let ncols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < m.len() && col < ncols {
        let pivot = (rank..m.len()).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                for c in 0..ncols {
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}
