//! Mean curvature vectors, Ricci curvature of the attached nilmanifold and of
//! its one-dimensional solvable extensions, and the Einstein verdict.
//!
//! Every operator involved (`ad Z_k`, the recursion operators `A_m`, `B_m`,
//! and both Ricci operators) acts on a restricted root space `g_α` as a
//! scalar, because all of them are built from elements of `a`. Ricci
//! curvatures are therefore stored as one rational per positive root.
//!
//! All entry points first pass to the type-α₀ reduction of the gradation,
//! which has the same nilradical.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gradation::{CharacteristicElement, Gradation};
use crate::rational::{self, frac, int, Q};
use crate::rootsys::{CartanVector, RestrictedRootData};

/// `Z_1, …, Z_ν` and `H₀ = Σ Z_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanCurvature {
    zk: Vec<CartanVector>,
    h0: CartanVector,
}

impl MeanCurvature {
    /// `Z_k` for `1 ≤ k ≤ ν`.
    pub fn zk(&self, k: u32) -> &CartanVector {
        &self.zk[k as usize - 1]
    }

    pub fn all_zk(&self) -> &[CartanVector] {
        &self.zk
    }

    pub fn h0(&self) -> &CartanVector {
        &self.h0
    }
}

/// `Z_k = Σ_{α∈Δ_k} mult(α) H_α`, with the defining identities checked:
/// `B_σ(Z_k, Z) = k·dim g_k`, `2 Σ k Z_k = Z`, `Z_k` in the span of the
/// support duals, and positive support coefficients of `H₀`.
pub fn mean_curvature(g: &Gradation<'_>) -> Result<MeanCurvature> {
    let rrd = g.root_data();
    let r = rrd.rank();
    let roots = rrd.root_system().positive_roots();
    let mut zk = vec![CartanVector::zero(r); g.kind() as usize];
    let mut acc: Vec<Vec<i128>> = vec![vec![0; r]; g.kind() as usize];
    for (i, root) in roots.iter().enumerate() {
        let l = g.level(i);
        if l == 0 {
            continue;
        }
        let m = rrd.mult(i) as i128;
        for (a, &n) in acc[l as usize - 1].iter_mut().zip(root) {
            *a += m * n as i128;
        }
    }
    for (k, a) in acc.iter().enumerate() {
        zk[k] = CartanVector::new(a.iter().map(|&x| int(x)).collect());
    }
    let h0 = zk.iter().fold(CartanVector::zero(r), |s, z| &s + z);
    let mc = MeanCurvature { zk, h0 };
    check_mean_curvature(g, &mc)?;
    Ok(mc)
}

fn check_mean_curvature(g: &Gradation<'_>, mc: &MeanCurvature) -> Result<()> {
    let rrd = g.root_data();
    let z = g.z_vector();
    let support = g.characteristic().support();
    let mut weighted = CartanVector::zero(rrd.rank());
    for k in 1..=g.kind() {
        let zk = mc.zk(k);
        let lhs = rrd.inner(zk, &z);
        let rhs = int(k as i128 * g.dim(k) as i128);
        if lhs != rhs {
            return Err(Error::Consistency(format!(
                "B_σ(Z_{k}, Z) = {lhs}, expected {rhs}"
            )));
        }
        let duals = rrd.dual_coords(zk);
        if duals
            .iter()
            .enumerate()
            .any(|(i, c)| !support.contains(&i) && !c.is_zero())
        {
            return Err(Error::Consistency(format!(
                "Z_{k} leaves the span of the support duals"
            )));
        }
        weighted = &weighted + &(zk * int(2 * k as i128));
    }
    if weighted != z {
        return Err(Error::Consistency("2 Σ k Z_k ≠ Z".into()));
    }
    let h = rrd.dual_coords(&mc.h0);
    if support.iter().any(|&i| !h[i].is_positive()) {
        return Err(Error::Consistency(
            "H₀ has a nonpositive support coefficient".into(),
        ));
    }
    Ok(())
}

/// Precomputed `α(Z_k)` and `α(H₀)` tables for the α₀ reduction of a
/// gradation.
struct Evaluator<'a> {
    g: Gradation<'a>,
    mc: MeanCurvature,
    zk_duals: Vec<Vec<Q>>,
    h0_dual: Vec<Q>,
}

impl<'a> Evaluator<'a> {
    fn new(g: &Gradation<'a>) -> Result<Self> {
        let g = g.alpha0_reduction();
        let mc = mean_curvature(&g)?;
        let rrd = g.root_data();
        let zk_duals = mc.all_zk().iter().map(|z| rrd.dual_coords(z)).collect();
        let h0_dual = rrd.dual_coords(mc.h0());
        Ok(Evaluator {
            g,
            mc,
            zk_duals,
            h0_dual,
        })
    }

    fn rrd(&self) -> &'a RestrictedRootData {
        self.g.root_data()
    }

    fn root(&self, i: usize) -> &[i32] {
        &self.rrd().root_system().positive_roots()[i]
    }

    /// Resolves a root to its index, requiring positive level.
    fn index(&self, alpha: &[i32]) -> Result<usize> {
        let rs = self.rrd().root_system();
        if alpha.len() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: alpha.len(),
            });
        }
        if !rs.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_vec()));
        }
        let level: i64 = alpha
            .iter()
            .zip(self.g.characteristic().coeffs())
            .map(|(&n, &c)| n as i64 * c as i64)
            .sum();
        match rs.index_of(alpha) {
            Some(i) if level > 0 => Ok(i),
            _ => Err(Error::NonPositiveLevel {
                root: alpha.to_vec(),
                level,
            }),
        }
    }

    /// `α(Z_k)` for `k = 1..=ν`.
    fn zk_values(&self, i: usize) -> Vec<Q> {
        let root = self.root(i);
        self.zk_duals
            .iter()
            .map(|d| self.rrd().eval(root, d))
            .collect()
    }

    fn h0_value(&self, i: usize) -> Q {
        self.rrd().eval(self.root(i), &self.h0_dual)
    }

    /// `a_m(α)` for `m = 1..=ν` (index `m − 1`).
    ///
    /// Solves `A_m = A_{m+l} − ad Z_m` on `g_l` with `A_m = 0` for `m > ν`:
    /// `a_m(α) = −Σ_{j≥0} α(Z_{m+jl})`.
    fn a_scalars(&self, i: usize) -> Vec<Q> {
        let l = self.g.level(i) as usize;
        let nu = self.g.kind() as usize;
        let vals = self.zk_values(i);
        let mut suffix = vec![Q::zero(); nu + l + 1];
        for m in (1..=nu).rev() {
            suffix[m] = vals[m - 1] + suffix[m + l];
        }
        (1..=nu).map(|m| -suffix[m]).collect()
    }

    /// `Ric^n` on `g_α`: `−¼ Σ_{m<l} a_m + ½ Σ_{m>l} a_m`.
    fn nil_ricci(&self, i: usize) -> Q {
        let l = self.g.level(i) as usize;
        let a = self.a_scalars(i);
        let below = a[..l - 1].iter().fold(Q::zero(), |s, x| s + x);
        let above = a[l..].iter().fold(Q::zero(), |s, x| s + x);
        -below * frac(1, 4) + above * frac(1, 2)
    }

    /// Rescales `H` to be the mean curvature vector of `(R·H + n, B_σ)`:
    /// `B_σ(H, H) = tr(ad_H|n)`.
    fn normalize(&self, h: &CartanVector) -> Result<CartanVector> {
        if h.is_zero() {
            return Err(Error::ZeroVector);
        }
        let rrd = self.rrd();
        let d = rrd.dual_coords(h);
        let mut trace = Q::zero();
        for i in self.g.nilradical_roots() {
            let v = rrd.eval(self.root(i), &d);
            if !v.is_positive() {
                return Err(Error::NotPositive(format!(
                    "α(H) = {} for α = {:?}",
                    rational::format(&v),
                    self.root(i)
                )));
            }
            trace += int(rrd.mult(i) as i128) * v;
        }
        Ok(h * (trace / rrd.inner(h, h)))
    }

    fn solv_ricci_normalized(&self, i: usize, h_dual: &[Q], c: Q) -> Q {
        self.nil_ricci(i) - self.rrd().eval(self.root(i), h_dual) / c
    }

    /// `Ric^c(H) = −tr(ad_H)² / (c · tr(ad^g_H)²)`; scale invariant in `H`.
    fn solv_ricci_h(&self, h: &CartanVector, c: Q) -> Result<Q> {
        if h.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !c.is_positive() {
            return Err(Error::NonPositiveConstant);
        }
        let rrd = self.rrd();
        let d = rrd.dual_coords(h);
        let on_n = self
            .g
            .nilradical_roots()
            .into_iter()
            .fold(Q::zero(), |s, i| {
                let v = rrd.eval(self.root(i), &d);
                s + int(rrd.mult(i) as i128) * v * v
            });
        Ok(-on_n / (c * rrd.killing_square(h)))
    }
}

/// `a_m(α)`: the scalar by which the recursion operator `A_m` acts on `g_α`.
pub fn a_scalar(g: &Gradation<'_>, alpha: &[i32], m: u32) -> Result<Q> {
    let ev = Evaluator::new(g)?;
    let i = ev.index(alpha)?;
    if m == 0 || m > ev.g.kind() {
        return Err(Error::LayerOutOfRange {
            m,
            kind: ev.g.kind(),
        });
    }
    Ok(ev.a_scalars(i)[m as usize - 1])
}

/// Ricci eigenvalue of the nilmanifold `(n, B_σ)` on `g_α`.
pub fn nil_ricci(g: &Gradation<'_>, alpha: &[i32]) -> Result<Q> {
    let ev = Evaluator::new(g)?;
    let i = ev.index(alpha)?;
    Ok(ev.nil_ricci(i))
}

/// Ricci eigenvalue on `g_α` of the extension `(R·H + n, c·B_σ|_{RH} + B_σ|_n)`.
///
/// `H` is first rescaled so that `B_σ(H, H) = tr(ad_H|n)`, which is the
/// normalization under which `Ric^c(U) = Ric^n(U) − (1/c)[H, U]`. `ad_H`
/// must be positive on `n`.
pub fn solv_ricci(g: &Gradation<'_>, alpha: &[i32], h: &CartanVector, c: Q) -> Result<Q> {
    if !c.is_positive() {
        return Err(Error::NonPositiveConstant);
    }
    let ev = Evaluator::new(g)?;
    let i = ev.index(alpha)?;
    let h = ev.normalize(h)?;
    Ok(ev.solv_ricci_normalized(i, &ev.rrd().dual_coords(&h), c))
}

/// Ricci eigenvalue of the same extension in the `H` direction.
pub fn solv_ricci_h(g: &Gradation<'_>, h: &CartanVector, c: Q) -> Result<Q> {
    Evaluator::new(g)?.solv_ricci_h(h, c)
}

/// Einstein constant of `(R·H + n, ⟨,⟩^c)` if all Ricci eigenvalues agree.
pub fn einstein_probe(g: &Gradation<'_>, h: &CartanVector, c: Q) -> Result<Option<Q>> {
    if !c.is_positive() {
        return Err(Error::NonPositiveConstant);
    }
    let ev = Evaluator::new(g)?;
    let hn = ev.normalize(h)?;
    let d = ev.rrd().dual_coords(&hn);
    let first = ev.solv_ricci_h(h, c)?;
    for i in ev.g.nilradical_roots() {
        if ev.solv_ricci_normalized(i, &d, c) != first {
            return Ok(None);
        }
    }
    Ok(Some(first))
}

/// Sweeps the given extension constants and directions and returns every
/// Einstein point found, as `(c, normalized H)`.
pub fn einstein_points(
    g: &Gradation<'_>,
    constants: &[Q],
    directions: &[CartanVector],
) -> Result<Vec<(Q, CartanVector)>> {
    let ev = Evaluator::new(g)?;
    let mut found = Vec::new();
    for &c in constants {
        for h in directions {
            if einstein_probe(g, h, c)?.is_some() {
                found.push((c, ev.normalize(h)?));
            }
        }
    }
    Ok(found)
}

/// Coprime integer spectrum `(μ_1 < … < μ_m; d_1, …, d_m)` of `ad_{λH₀}` on `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EigenvalueType {
    pub values: Vec<u64>,
    pub mults: Vec<u64>,
}

impl EigenvalueType {
    pub fn max_value(&self) -> u64 {
        self.values.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for EigenvalueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(u64::to_string).collect();
        let d: Vec<String> = self.mults.iter().map(u64::to_string).collect();
        write!(f, "({}; {})", v.join("<"), d.join(","))
    }
}

/// Ricci data on one positive root space of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCurvature {
    pub root: Vec<i32>,
    pub level: u32,
    pub mult: u32,
    /// `α(H₀)`.
    pub h0_value: Q,
    pub nil_ricci: Q,
    /// Natural extension: `H = H₀`, `c = 2`.
    pub solv_ricci: Q,
}

/// Roots of `n` sharing `(α(Z), α(H₀))`; Ricci is constant on each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciClass {
    pub level: u32,
    pub h0_value: Q,
    pub dim: u64,
    pub nil_ricci: Q,
    pub solv_ricci: Q,
}

#[derive(Clone, Debug)]
pub struct CurvatureReport {
    /// Characteristic element as given.
    pub nominal: CharacteristicElement,
    pub nominal_kind: u32,
    /// Type-α₀ reduction, on which everything below is computed.
    pub characteristic: CharacteristicElement,
    pub kind: u32,
    pub dims: Vec<u64>,
    pub mean_curvature: MeanCurvature,
    pub roots: Vec<RootCurvature>,
    pub classes: Vec<RicciClass>,
    /// Ricci eigenvalue of the natural extension on `R·H₀`.
    pub ric_h0: Q,
    pub einstein_constant: Option<Q>,
    pub eigenvalue_type: EigenvalueType,
    pub carnot_step: u64,
}

impl CurvatureReport {
    pub fn is_einstein(&self) -> bool {
        self.einstein_constant.is_some()
    }
}

fn quarter() -> Q {
    frac(-1, 4)
}

/// Evaluates the natural extension `(R·H₀ + n, ⟨,⟩²)` and decides whether it
/// is Einstein.
pub fn einstein_verdict(g: &Gradation<'_>) -> Result<CurvatureReport> {
    let ev = Evaluator::new(g)?;
    let rrd = ev.rrd();
    let two = int(2);
    let ric_h0 = ev.solv_ricci_h(ev.mc.h0(), two)?;

    let mut roots = Vec::new();
    for i in ev.g.nilradical_roots() {
        let nil = ev.nil_ricci(i);
        let solv = ev.solv_ricci_normalized(i, &ev.h0_dual, two);
        let level = ev.g.level(i);
        if level <= 2 && solv != quarter() {
            return Err(Error::Consistency(format!(
                "natural extension has Ric = {} on level-{level} root {:?}",
                rational::format(&solv),
                ev.root(i)
            )));
        }
        roots.push(RootCurvature {
            root: ev.root(i).to_vec(),
            level,
            mult: rrd.mult(i),
            h0_value: ev.h0_value(i),
            nil_ricci: nil,
            solv_ricci: solv,
        });
    }

    let mut grouped: BTreeMap<(u32, Q), RicciClass> = BTreeMap::new();
    for rc in &roots {
        let entry = grouped
            .entry((rc.level, rc.h0_value))
            .or_insert(RicciClass {
                level: rc.level,
                h0_value: rc.h0_value,
                dim: 0,
                nil_ricci: rc.nil_ricci,
                solv_ricci: rc.solv_ricci,
            });
        if entry.nil_ricci != rc.nil_ricci {
            return Err(Error::Consistency(format!(
                "Ricci is not constant on the class (level {}, α(H₀) = {})",
                rc.level,
                rational::format(&rc.h0_value)
            )));
        }
        entry.dim += rc.mult as u64;
    }
    let classes: Vec<RicciClass> = grouped.into_values().collect();

    let einstein = ric_h0 == quarter() && roots.iter().all(|r| r.solv_ricci == quarter());
    let eigenvalue_type = spectrum(&roots)?;
    let carnot_step = eigenvalue_type.max_value() + 1;

    Ok(CurvatureReport {
        nominal: g.characteristic().clone(),
        nominal_kind: g.kind(),
        characteristic: ev.g.characteristic().clone(),
        kind: ev.g.kind(),
        dims: ev.g.dims(),
        mean_curvature: ev.mc.clone(),
        roots,
        classes,
        ric_h0,
        einstein_constant: einstein.then(quarter),
        eigenvalue_type,
        carnot_step,
    })
}

fn spectrum(roots: &[RootCurvature]) -> Result<EigenvalueType> {
    let mut by_value: BTreeMap<Q, u64> = BTreeMap::new();
    for r in roots {
        *by_value.entry(r.h0_value).or_default() += r.mult as u64;
    }
    let values: Vec<Q> = by_value.keys().copied().collect();
    let scaled = rational::coprime_scaling(&values)
        .ok_or_else(|| Error::Consistency("ad_{H₀} has a nonpositive eigenvalue on n".into()))?;
    Ok(EigenvalueType {
        values: scaled.into_iter().map(|v| v as u64).collect(),
        mults: by_value.into_values().collect(),
    })
}

/// Eigenvalue type of `ad_{H₀}` on `n`, defined whether or not the natural
/// extension is Einstein.
pub fn eigenvalue_type(g: &Gradation<'_>) -> Result<EigenvalueType> {
    let ev = Evaluator::new(g)?;
    let roots: Vec<RootCurvature> =
        ev.g.nilradical_roots()
            .into_iter()
            .map(|i| RootCurvature {
                root: ev.root(i).to_vec(),
                level: ev.g.level(i),
                mult: ev.rrd().mult(i),
                h0_value: ev.h0_value(i),
                nil_ricci: Q::zero(),
                solv_ricci: Q::zero(),
            })
            .collect();
    spectrum(&roots)
}

/// `(k+1)` where `k` is the largest normalized eigenvalue of `ad_{H₀}`.
pub fn carnot_step(g: &Gradation<'_>) -> Result<u64> {
    Ok(eigenvalue_type(g)?.max_value() + 1)
}

/// Dimension criteria for the Einstein condition in low kinds, valid when
/// every `Z_k` is parallel to `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Shortcut {
    NotApplicable,
    Predicate { kind: u32, holds: bool },
}

/// - kind 1, 2: always Einstein;
/// - kind 3: `dim g₁ = 2 dim g₂`;
/// - kind 4: `dim g₁ = 3 dim g₃` and `dim g₁ + 4 dim g₄ = 2 dim g₂`.
pub fn kind_shortcut(g: &Gradation<'_>) -> Result<Shortcut> {
    let g = g.alpha0_reduction();
    let mc = mean_curvature(&g)?;
    let rrd = g.root_data();
    let z = rrd.dual_coords(&g.z_vector());
    let all_parallel = mc
        .all_zk()
        .iter()
        .all(|zk| rational::parallel(&rrd.dual_coords(zk), &z));
    if !all_parallel {
        return Ok(Shortcut::NotApplicable);
    }
    let d = g.dims();
    let holds = match g.kind() {
        1 | 2 => true,
        3 => d[0] == 2 * d[1],
        4 => d[0] == 3 * d[2] && d[0] + 4 * d[3] == 2 * d[1],
        _ => return Ok(Shortcut::NotApplicable),
    };
    Ok(Shortcut::Predicate {
        kind: g.kind(),
        holds,
    })
}

/// Mean curvature vector of the Iwasawa solvmanifold: `H₀ = Σ h_i H^i` with
/// `h_i = (mult(α_i) + 2·mult(2α_i)) ⟨α_i, α_i⟩_B`.
///
/// The only positive roots with `β(Z) = β(H^i)` are `α_i` and `2α_i`, and
/// `h_i = Σ mult(β) ⟨α_i, β⟩_B` over them. The doubled root contributes
/// `⟨α_i, 2α_i⟩ = 2⟨α_i, α_i⟩`; the squared length `⟨2α_i, 2α_i⟩` would
/// give 4 and disagree with `Σ mult(β) H_β` on every BC system.
pub fn symmetric_mean_curvature(rrd: &RestrictedRootData) -> CartanVector {
    let r = rrd.rank();
    let coeffs: Vec<Q> = (0..r)
        .map(|i| {
            let mut alpha = vec![0i32; r];
            alpha[i] = 1;
            let mut twice = vec![0i32; r];
            twice[i] = 2;
            let m = rrd.mult_of(&alpha).unwrap_or(0) as i128
                + 2 * rrd.mult_of(&twice).unwrap_or(0) as i128;
            int(m) * rrd.gram()[i][i]
        })
        .collect();
    rrd.from_dual_coords(&coeffs)
}
