//! Brute-force ground truth on `sl_n(R)` with block gradations.
//!
//! Everything here is computed from explicit matrices: brackets by matrix
//! multiplication, the Killing form as `2n·tr(XY)`, and Ricci curvature from
//! the general formula for a metric Lie algebra with an orthogonal (not
//! orthonormal) basis, so that no square roots appear. Nothing in this module
//! uses the symbolic recursion of [`crate::curvature`] except
//! [`compare_with_symbolic`], whose whole purpose is to compare the two.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::curvature::{einstein_verdict, mean_curvature};
use crate::error::{Error, Result};
use crate::gradation::make_gradation;
use crate::linalg::{self, Matrix};
use crate::rational::{self, frac, int, Q};
use crate::rootsys::{
    killing_normalize, Family, MultiplicityProfile, RestrictedRootData, RootSystem,
};

/// A basis vector of `sl_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    /// `E_ij`, `i ≠ j`, 0-based.
    Unit(usize, usize),
    /// `E_kk − E_{k+1,k+1}`.
    Diagonal(usize),
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::Unit(i, j) => write!(f, "E{}{}", i + 1, j + 1),
            BasisElement::Diagonal(k) => write!(f, "H{}", k + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct MatrixModel {
    n: usize,
    blocks: Vec<usize>,
    block_of: Vec<usize>,
    basis: Vec<BasisElement>,
    killing: Matrix,
    degree: Vec<i64>,
}

fn zero_matrix(n: usize) -> Matrix {
    vec![vec![Q::zero(); n]; n]
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let ab = linalg::mat_mul(a, b);
    let ba = linalg::mat_mul(b, a);
    ab.iter()
        .zip(&ba)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

fn trace_product(a: &Matrix, b: &Matrix) -> Q {
    let n = a.len();
    let mut t = Q::zero();
    for i in 0..n {
        for k in 0..n {
            t += a[i][k] * b[k][i];
        }
    }
    t
}

/// Builds `sl_n` with `n = Σ blocks` and the gradation by block position.
pub fn build_model(blocks: &[usize]) -> Result<MatrixModel> {
    if blocks.len() < 2 {
        return Err(Error::InvalidBlocks(format!(
            "need at least 2 blocks, got {}",
            blocks.len()
        )));
    }
    if blocks.contains(&0) {
        return Err(Error::InvalidBlocks("block sizes must be positive".into()));
    }
    let n: usize = blocks.iter().sum();
    let block_of: Vec<usize> = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
        .collect();

    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(BasisElement::Unit(i, j));
            }
        }
    }
    basis.extend((0..n - 1).map(BasisElement::Diagonal));

    let degree = basis
        .iter()
        .map(|b| match *b {
            BasisElement::Unit(i, j) => block_of[j] as i64 - block_of[i] as i64,
            BasisElement::Diagonal(_) => 0,
        })
        .collect();

    let mut model = MatrixModel {
        n,
        blocks: blocks.to_vec(),
        block_of,
        basis,
        killing: Vec::new(),
        degree,
    };
    let mats: Vec<Matrix> = (0..model.basis.len()).map(|a| model.element(a)).collect();
    let scale = int(2 * n as i128);
    model.killing = mats
        .iter()
        .map(|x| mats.iter().map(|y| scale * trace_product(x, y)).collect())
        .collect();
    model.check()?;
    Ok(model)
}

impl MatrixModel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// `B(X_a, X_b) = 2n·tr(X_a X_b)` on basis pairs.
    pub fn killing(&self) -> &Matrix {
        &self.killing
    }

    pub fn degree(&self, a: usize) -> i64 {
        self.degree[a]
    }

    pub fn kind(&self) -> u32 {
        (self.blocks.len() - 1) as u32
    }

    /// The basis element as an `n × n` matrix.
    pub fn element(&self, a: usize) -> Matrix {
        let mut m = zero_matrix(self.n);
        match self.basis[a] {
            BasisElement::Unit(i, j) => m[i][j] = int(1),
            BasisElement::Diagonal(k) => {
                m[k][k] = int(1);
                m[k + 1][k + 1] = int(-1);
            }
        }
        m
    }

    /// `σ(X_a) = −X_aᵀ` as `(sign, index)`.
    pub fn sigma(&self, a: usize) -> (i32, usize) {
        match self.basis[a] {
            BasisElement::Unit(i, j) => (-1, self.index(BasisElement::Unit(j, i))),
            BasisElement::Diagonal(_) => (-1, a),
        }
    }

    fn index(&self, b: BasisElement) -> usize {
        self.basis
            .iter()
            .position(|&x| x == b)
            .expect("basis element present")
    }

    /// `B_σ(X_a, X_b) = −B(X_a, σX_b)`.
    pub fn b_sigma(&self, a: usize, b: usize) -> Q {
        let (s, sb) = self.sigma(b);
        -self.killing[a][sb] * int(s as i128)
    }

    /// Coordinates of a traceless matrix in the model basis.
    pub fn coordinates(&self, m: &Matrix) -> Vec<Q> {
        let mut prefix = Q::zero();
        self.basis
            .iter()
            .map(|b| match *b {
                BasisElement::Unit(i, j) => m[i][j],
                BasisElement::Diagonal(k) => {
                    prefix += m[k][k];
                    prefix
                }
            })
            .collect()
    }

    /// Positive-degree units `E_ij` (`i < j` in different blocks), spanning `n`.
    pub fn nilradical_units(&self) -> Vec<(usize, usize)> {
        self.basis
            .iter()
            .zip(&self.degree)
            .filter_map(|(b, &d)| match *b {
                BasisElement::Unit(i, j) if d > 0 => Some((i, j)),
                _ => None,
            })
            .collect()
    }

    /// Characteristic coefficients on `A_{n−1}`: node `k` is marked when
    /// `k` and `k+1` lie in different blocks.
    pub fn characteristic(&self) -> Vec<u32> {
        (0..self.n - 1)
            .map(|k| (self.block_of[k + 1] - self.block_of[k]) as u32)
            .collect()
    }

    /// The positive root of `A_{n−1}` carried by `E_ij`, `i < j`.
    pub fn root_of(&self, i: usize, j: usize) -> Vec<i32> {
        (0..self.n - 1).map(|k| (i <= k && k < j) as i32).collect()
    }

    /// Diagonal of the characteristic matrix `Z`: `α(Z)` equals the degree.
    pub fn z_diagonal(&self) -> Vec<Q> {
        let mean = frac(
            (0..self.n).map(|i| self.block_of[i] as i128).sum::<i128>(),
            self.n as i128,
        );
        (0..self.n)
            .map(|i| mean - int(self.block_of[i] as i128))
            .collect()
    }

    fn check(&self) -> Result<()> {
        let dim = self.basis.len();
        let gram: Matrix = (0..dim)
            .map(|a| (0..dim).map(|b| self.b_sigma(a, b)).collect())
            .collect();
        if !linalg::is_positive_definite(&gram) {
            return Err(Error::Consistency(
                "B_σ is not positive definite on the model".into(),
            ));
        }
        let two_n = int(2 * self.n as i128);
        for (a, b) in self.basis.iter().enumerate() {
            if let BasisElement::Unit(..) = b {
                if gram[a][a] != two_n {
                    return Err(Error::Consistency(format!("B_σ({b}, {b}) ≠ 2n")));
                }
            }
            let (_, s) = self.sigma(a);
            if self.degree[s] != -self.degree[a] {
                return Err(Error::Consistency(format!(
                    "σ does not reverse the degree of {b}"
                )));
            }
        }
        let units: Vec<usize> = (0..dim)
            .filter(|&a| matches!(self.basis[a], BasisElement::Unit(..)))
            .collect();
        for &a in &units {
            for &b in &units {
                let br = self.coordinates(&commutator(&self.element(a), &self.element(b)));
                for (c, v) in br.iter().enumerate() {
                    if !v.is_zero() && self.degree[c] != self.degree[a] + self.degree[b] {
                        return Err(Error::Consistency(format!(
                            "[{}, {}] leaves degree {}",
                            self.basis[a],
                            self.basis[b],
                            self.degree[a] + self.degree[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `tr(ad X_a ∘ ad X_b)` on `sl_n`, for checking the `2n·tr` normalization.
    pub fn killing_by_trace(&self, a: usize, b: usize) -> Q {
        let xa = self.element(a);
        let xb = self.element(b);
        (0..self.basis.len())
            .map(|c| {
                let y = commutator(&xa, &commutator(&xb, &self.element(c)));
                self.coordinates(&y)[c]
            })
            .fold(Q::zero(), |s, x| s + x)
    }
}

/// A Lie algebra with an orthogonal basis of squared norms `weights`.
///
/// `ad[a][c][b]` is the `e_c` coefficient of `[e_a, e_b]`.
struct MetricAlgebra {
    weights: Vec<Q>,
    ad: Vec<Matrix>,
}

impl MetricAlgebra {
    fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Adjoint with respect to the diagonal metric: `A*[c][b] = A[b][c]·w_b/w_c`.
    fn adjoint(&self, m: &Matrix) -> Matrix {
        let d = self.dim();
        (0..d)
            .map(|c| {
                (0..d)
                    .map(|b| m[b][c] * self.weights[b] / self.weights[c])
                    .collect()
            })
            .collect()
    }

    /// Ricci operator of the left-invariant metric:
    /// `Σ_a |e_a|⁻² (¼ ad_a ad_a* − ½ ad_a* ad_a) − ½ B − S(ad_H)`,
    /// with `B` the Killing form as an operator and `H` the mean curvature
    /// vector, `⟨H, X⟩ = tr ad_X`.
    fn ricci(&self) -> Matrix {
        let d = self.dim();
        let mut r = zero_matrix(d);
        let add = |r: &mut Matrix, m: &Matrix, s: Q| {
            for (row, mrow) in r.iter_mut().zip(m) {
                for (x, y) in row.iter_mut().zip(mrow) {
                    *x += *y * s;
                }
            }
        };
        for a in 0..d {
            let m = &self.ad[a];
            let ms = self.adjoint(m);
            let w = self.weights[a];
            add(&mut r, &linalg::mat_mul(m, &ms), frac(1, 4) / w);
            add(&mut r, &linalg::mat_mul(&ms, m), frac(-1, 2) / w);
        }
        let traces: Vec<Q> = self
            .ad
            .iter()
            .map(|m| (0..d).map(|i| m[i][i]).fold(Q::zero(), |s, x| s + x))
            .collect();
        for c in 0..d {
            for b in 0..d {
                let kill = trace_product(&self.ad[c], &self.ad[b]);
                r[c][b] -= frac(1, 2) * kill / self.weights[c];
            }
        }
        let mut ad_h = zero_matrix(d);
        for a in 0..d {
            if !traces[a].is_zero() {
                add(&mut ad_h, &self.ad[a], traces[a] / self.weights[a]);
            }
        }
        let ad_h_star = self.adjoint(&ad_h);
        add(&mut r, &ad_h, frac(-1, 2));
        add(&mut r, &ad_h_star, frac(-1, 2));
        r
    }
}

fn diagonal_of(r: &Matrix, labels: &[String]) -> Result<Vec<Q>> {
    for (c, row) in r.iter().enumerate() {
        for (b, v) in row.iter().enumerate() {
            if c != b && !v.is_zero() {
                return Err(Error::Consistency(format!(
                    "Ricci has an off-diagonal entry {} between {} and {}",
                    rational::format(v),
                    labels[c],
                    labels[b]
                )));
            }
        }
    }
    Ok((0..r.len()).map(|i| r[i][i]).collect())
}

impl MatrixModel {
    /// `ad` matrices of `n` in the unit basis `F = nilradical_units()`.
    fn nilradical_ad(&self) -> (Vec<(usize, usize)>, Vec<Matrix>) {
        let units = self.nilradical_units();
        let pos: BTreeMap<(usize, usize), usize> =
            units.iter().enumerate().map(|(k, &u)| (u, k)).collect();
        let d = units.len();
        let mut ad = vec![zero_matrix(d); d];
        for (a, &(i, j)) in units.iter().enumerate() {
            for (b, &(k, l)) in units.iter().enumerate() {
                // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
                if j == k {
                    ad[a][pos[&(i, l)]][b] += int(1);
                }
                if l == i {
                    ad[a][pos[&(k, j)]][b] -= int(1);
                }
            }
        }
        (units, ad)
    }

    /// Checks `(ad_U)* V = [V, σU]_n` against the metric transpose.
    fn check_adjoint_formula(&self, units: &[(usize, usize)], alg: &MetricAlgebra) -> Result<()> {
        for (a, &(i, j)) in units.iter().enumerate() {
            let star = alg.adjoint(&alg.ad[a]);
            let mut sigma_u = zero_matrix(self.n);
            sigma_u[j][i] = int(-1);
            for (b, &(k, l)) in units.iter().enumerate() {
                let mut v = zero_matrix(self.n);
                v[k][l] = int(1);
                let br = commutator(&v, &sigma_u);
                for (c, &(p, q)) in units.iter().enumerate() {
                    if br[p][q] != star[c][b] {
                        return Err(Error::Consistency(format!(
                            "(ad E{}{})* disagrees with [·, σE{}{}] on n",
                            i + 1,
                            j + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Ricci eigenvalue of `(n, B_σ)` on each unit `E_ij` of `n`.
pub fn brute_ricci(model: &MatrixModel) -> Result<BTreeMap<(usize, usize), Q>> {
    let (units, ad) = model.nilradical_ad();
    let w = int(2 * model.n as i128);
    let alg = MetricAlgebra {
        weights: vec![w; units.len()],
        ad,
    };
    model.check_adjoint_formula(&units, &alg)?;
    let labels: Vec<String> = units
        .iter()
        .map(|&(i, j)| format!("E{}{}", i + 1, j + 1))
        .collect();
    let diag = diagonal_of(&alg.ricci(), &labels)?;
    Ok(units.into_iter().zip(diag).collect())
}

/// `Z_k` and `H₀` as diagonal matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalMeanCurvature {
    pub zk: Vec<Vec<Q>>,
    pub h0: Vec<Q>,
}

/// `Z_k = Σ [σ(E), E] / B_σ(E, E)` over units of degree `k`, checked against
/// `2 Σ k Z_k = Z` and `B_σ(Z_k, Z) = k·dim g_k`.
pub fn brute_mean_curvature(model: &MatrixModel) -> Result<DiagonalMeanCurvature> {
    let n = model.n;
    let nu = model.kind() as usize;
    let two_n = int(2 * n as i128);
    let mut zk = vec![vec![Q::zero(); n]; nu];
    let mut dims = vec![0i128; nu];
    for (i, j) in model.nilradical_units() {
        let k = model.block_of[j] - model.block_of[i];
        let mut e = zero_matrix(n);
        e[i][j] = int(1);
        let mut s = zero_matrix(n);
        s[j][i] = int(-1);
        let br = commutator(&s, &e);
        for t in 0..n {
            zk[k - 1][t] += br[t][t] / two_n;
        }
        dims[k - 1] += 1;
    }
    let z = model.z_diagonal();
    let mut weighted = vec![Q::zero(); n];
    for (k, zkv) in zk.iter().enumerate() {
        let b: Q = zkv
            .iter()
            .zip(&z)
            .map(|(x, y)| two_n * x * y)
            .fold(Q::zero(), |s, x| s + x);
        if b != int((k as i128 + 1) * dims[k]) {
            return Err(Error::Consistency(format!(
                "B_σ(Z_{}, Z) ≠ k·dim g_k on the model",
                k + 1
            )));
        }
        for (w, x) in weighted.iter_mut().zip(zkv) {
            *w += int(2 * (k as i128 + 1)) * x;
        }
    }
    if weighted != z {
        return Err(Error::Consistency("2 Σ k Z_k ≠ Z on the model".into()));
    }
    let h0 = (0..n)
        .map(|t| zk.iter().fold(Q::zero(), |s, v| s + v[t]))
        .collect();
    Ok(DiagonalMeanCurvature { zk, h0 })
}

/// Ricci eigenvalues of the extension `s = R·H + n` with metric
/// `c·B_σ` on `R·H` and `B_σ` on `n`, computed from structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteSolvRicci {
    pub on_h: Q,
    pub on_n: BTreeMap<(usize, usize), Q>,
}

/// `h` is a traceless diagonal with positive values on `n`; only its
/// direction matters.
pub fn brute_solv_ricci(model: &MatrixModel, h: &[Q], c: Q) -> Result<BruteSolvRicci> {
    if !c.is_positive() {
        return Err(Error::NonPositiveConstant);
    }
    let (units, nil_ad) = model.nilradical_ad();
    let d = units.len();
    let two_n = int(2 * model.n as i128);
    let h_norm = two_n * h.iter().map(|x| x * x).fold(Q::zero(), |s, x| s + x) * c;
    if h_norm.is_zero() {
        return Err(Error::ZeroVector);
    }
    // basis: e_0 = H, e_{1+a} = units[a]
    let mut ad = vec![zero_matrix(d + 1); d + 1];
    for (a, &(i, j)) in units.iter().enumerate() {
        let v = h[i] - h[j];
        if !v.is_positive() {
            return Err(Error::NotPositive(format!(
                "ad_H has eigenvalue {} on E{}{}",
                rational::format(&v),
                i + 1,
                j + 1
            )));
        }
        ad[0][a + 1][a + 1] = v;
        ad[a + 1][a + 1][0] = -v;
        for b in 0..d {
            for e in 0..d {
                ad[a + 1][e + 1][b + 1] = nil_ad[a][e][b];
            }
        }
    }
    let mut weights = vec![h_norm];
    weights.extend(std::iter::repeat_n(two_n, d));
    let alg = MetricAlgebra { weights, ad };
    let mut labels = vec!["H".to_string()];
    labels.extend(units.iter().map(|&(i, j)| format!("E{}{}", i + 1, j + 1)));
    let diag = diagonal_of(&alg.ricci(), &labels)?;
    Ok(BruteSolvRicci {
        on_h: diag[0],
        on_n: units.into_iter().zip(diag.into_iter().skip(1)).collect(),
    })
}

/// Split `A_{n−1}` with mult 1.
pub fn split_a(n: usize) -> Result<RestrictedRootData> {
    let rs = RootSystem::new(Family::A, n - 1)?;
    let profile = MultiplicityProfile::uniform(&rs, 1);
    killing_normalize(format!("sl({n},R)"), rs, profile)
}

/// Symbolic `H_α`-coordinates mapped to a diagonal: `H_{α_k} ↦ (E_kk − E_{k+1,k+1})/2n`.
pub fn symbolic_to_diagonal(coords: &[Q]) -> Vec<Q> {
    let n = coords.len() + 1;
    let two_n = int(2 * n as i128);
    (0..n)
        .map(|t| {
            let here = if t < n - 1 { coords[t] } else { Q::zero() };
            let before = if t > 0 { coords[t - 1] } else { Q::zero() };
            (here - before) / two_n
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleRow {
    pub unit: (usize, usize),
    pub root: Vec<i32>,
    pub level: u32,
    pub symbolic_nil: Q,
    pub brute_nil: Q,
    pub symbolic_solv: Q,
    pub brute_solv: Q,
}

impl OracleRow {
    pub fn passed(&self) -> bool {
        self.symbolic_nil == self.brute_nil && self.symbolic_solv == self.brute_solv
    }
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub blocks: Vec<usize>,
    pub rows: Vec<OracleRow>,
    pub mean_curvature_agrees: bool,
    pub symbolic_ric_h: Q,
    pub brute_ric_h: Q,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mean_curvature_agrees
            && self.symbolic_ric_h == self.brute_ric_h
            && self.rows.iter().all(OracleRow::passed)
    }
}

/// Runs the model and the symbolic engine on the same block gradation and
/// records both answers root space by root space. `H₀` and `c = 2` are used
/// for the extension.
pub fn compare_with_symbolic(model: &MatrixModel) -> Result<OracleReport> {
    let rrd = split_a(model.n)?;
    let g = make_gradation(&rrd, &model.characteristic())?;
    let mc = mean_curvature(&g)?;
    let report = einstein_verdict(&g)?;

    let brute_mc = brute_mean_curvature(model)?;
    let mut mc_ok = symbolic_to_diagonal(mc.h0().coords()) == brute_mc.h0;
    for (k, z) in brute_mc.zk.iter().enumerate() {
        mc_ok &= symbolic_to_diagonal(mc.zk(k as u32 + 1).coords()) == *z;
    }

    let nil = brute_ricci(model)?;
    let solv = brute_solv_ricci(model, &brute_mc.h0, int(2))?;
    let by_root: BTreeMap<Vec<i32>, _> = report.roots.iter().map(|r| (r.root.clone(), r)).collect();
    let mut rows = Vec::new();
    for (&(i, j), &brute_nil) in &nil {
        let root = model.root_of(i, j);
        let sym = by_root.get(&root).ok_or_else(|| {
            Error::Consistency(format!(
                "root {root:?} missing from the symbolic nilradical"
            ))
        })?;
        rows.push(OracleRow {
            unit: (i, j),
            root: root.clone(),
            level: sym.level,
            symbolic_nil: sym.nil_ricci,
            brute_nil,
            symbolic_solv: sym.solv_ricci,
            brute_solv: solv.on_n[&(i, j)],
        });
    }
    if rows.len() != report.roots.len() {
        return Err(Error::Consistency(
            "model and symbolic nilradicals differ in size".into(),
        ));
    }
    Ok(OracleReport {
        blocks: model.blocks.clone(),
        rows,
        mean_curvature_agrees: mc_ok,
        symbolic_ric_h: report.ric_h0,
        brute_ric_h: solv.on_h,
    })
}

/// All ordered partitions of `n` into at least two positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    // each subset of the n−1 gaps is a cut set
    for mask in 1u32..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut last = 0;
        for gap in 0..n - 1 {
            if mask & (1 << gap) != 0 {
                parts.push(gap + 1 - last);
                last = gap + 1;
            }
        }
        parts.push(n - last);
        out.push(parts);
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_short_partitions() {
        assert!(matches!(build_model(&[3]), Err(Error::InvalidBlocks(_))));
        assert!(matches!(
            build_model(&[2, 0, 1]),
            Err(Error::InvalidBlocks(_))
        ));
    }

    #[test]
    fn sl2_is_flat() {
        let m = build_model(&[1, 1]).unwrap();
        assert_eq!(m.nilradical_units(), vec![(0, 1)]);
        let ric = brute_ricci(&m).unwrap();
        assert_eq!(ric[&(0, 1)], int(0));
        let mc = brute_mean_curvature(&m).unwrap();
        assert_eq!(mc.zk[0], vec![frac(1, 4), frac(-1, 4)]);
        let s = brute_solv_ricci(&m, &mc.h0, int(2)).unwrap();
        assert_eq!(s.on_h, frac(-1, 4));
        assert_eq!(s.on_n[&(0, 1)], frac(-1, 4));
    }

    #[test]
    fn sl3_degrees() {
        let m = build_model(&[1, 1, 1]).unwrap();
        let degs: Vec<i64> = m
            .nilradical_units()
            .iter()
            .map(|&(i, j)| m.degree(m.index(BasisElement::Unit(i, j))))
            .collect();
        assert_eq!(degs, vec![1, 2, 1]);
    }

    #[test]
    fn sl4_second_kind_dims() {
        let m = build_model(&[1, 2, 1]).unwrap();
        let mut dims = [0, 0];
        for (i, j) in m.nilradical_units() {
            dims[m.degree(m.index(BasisElement::Unit(i, j))) as usize - 1] += 1;
        }
        assert_eq!(dims, [4, 1]);
        let rep = compare_with_symbolic(&m).unwrap();
        assert!(rep.passed());
        assert!(rep.rows.iter().all(|r| r.brute_solv == frac(-1, 4)));
    }

    #[test]
    fn killing_normalization_matches_trace_of_ad() {
        let m = build_model(&[1, 2]).unwrap();
        for a in 0..m.basis().len() {
            for b in [0, 3, m.basis().len() - 1] {
                assert_eq!(m.killing_by_trace(a, b), m.killing()[a][b]);
            }
        }
    }

    #[test]
    fn symbolic_agreement_small() {
        for n in 2..=4 {
            for blocks in compositions(n) {
                let m = build_model(&blocks).unwrap();
                let rep = compare_with_symbolic(&m).unwrap();
                assert!(rep.passed(), "{blocks:?}: {rep:?}");
            }
        }
    }

    #[test]
    fn three_block_carnot_step() {
        let m = build_model(&[1, 1, 2]).unwrap();
        let rrd = split_a(4).unwrap();
        let g = make_gradation(&rrd, &m.characteristic()).unwrap();
        assert_eq!(crate::curvature::carnot_step(&g).unwrap(), 6);
        let h0 = brute_mean_curvature(&m).unwrap().h0;
        let vals: Vec<Q> = m
            .nilradical_units()
            .iter()
            .map(|&(i, j)| h0[i] - h0[j])
            .collect();
        let mut distinct = vals.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(
            rational::coprime_scaling(&distinct).unwrap().last(),
            Some(&5)
        );
    }

    #[test]
    fn extension_off_the_einstein_point() {
        // A direction other than H₀ and c ≠ 2: both sides must still agree.
        let m = build_model(&[1, 2, 2]).unwrap();
        let rrd = split_a(5).unwrap();
        let g = make_gradation(&rrd, &m.characteristic()).unwrap();
        let h_diag = vec![int(3), int(1), int(1), int(-2), int(-3)];
        let brute = brute_solv_ricci(&m, &h_diag, frac(3, 2)).unwrap();
        // H_{α_k} ↦ (E_kk − E_{k+1,k+1})/2n, so coordinate k is 2n·(h_1 + … + h_k).
        let mut acc = Q::zero();
        let coords: Vec<Q> = h_diag[..4]
            .iter()
            .map(|x| {
                acc += x;
                acc * int(10)
            })
            .collect();
        let h = crate::rootsys::CartanVector::new(coords);
        assert_eq!(symbolic_to_diagonal(h.coords()), h_diag);
        let mut distinct = std::collections::BTreeSet::new();
        for (&(i, j), v) in &brute.on_n {
            let sym = crate::curvature::solv_ricci(&g, &m.root_of(i, j), &h, frac(3, 2)).unwrap();
            assert_eq!(sym, *v, "E{}{}", i + 1, j + 1);
            distinct.insert(*v);
        }
        assert_eq!(
            crate::curvature::solv_ricci_h(&g, &h, frac(3, 2)).unwrap(),
            brute.on_h
        );
        assert!(distinct.len() > 1);
        assert_eq!(
            crate::curvature::einstein_probe(&g, &h, frac(3, 2)).unwrap(),
            None
        );
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2), vec![vec![1, 1]]);
        assert_eq!(compositions(4).len(), 7);
        assert_eq!(compositions(6).len(), 31);
    }
}
