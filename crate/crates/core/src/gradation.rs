//! Gradations `g = Σ g_k` given by characteristic elements `Z = Σ c_i H^i`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Q};
use crate::rootsys::{CartanVector, RestrictedRootData};

/// Nonnegative integer coefficients `(c_1, …, c_r)`, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharacteristicElement(Vec<u32>);

impl CharacteristicElement {
    pub fn new(coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::ZeroCharacteristic);
        }
        Ok(CharacteristicElement(coeffs))
    }

    /// `H^{i_1} + … + H^{i_s}` for the given 0-based nodes.
    pub fn from_support(rank: usize, nodes: &[usize]) -> Result<Self> {
        let mut c = vec![0; rank];
        for &i in nodes {
            if i >= rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            c[i] = 1;
        }
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    /// 0-based indices with positive coefficient.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_alpha0(&self) -> bool {
        self.0.iter().all(|&c| c <= 1)
    }

    /// Every positive coefficient replaced by 1.
    pub fn reduced(&self) -> Self {
        CharacteristicElement(self.0.iter().map(|&c| c.min(1)).collect())
    }

    pub fn as_rationals(&self) -> Vec<Q> {
        self.0.iter().map(|&c| int(c as i128)).collect()
    }
}

impl fmt::Display for CharacteristicElement {
    /// `H^1 + 2H^3` style, 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("H^{}", i + 1)
                } else {
                    format!("{c}H^{}", i + 1)
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct Gradation<'a> {
    rrd: &'a RestrictedRootData,
    z: CharacteristicElement,
    /// `α(Z)` for each positive root, aligned with the root system.
    levels: Vec<u32>,
    kind: u32,
}

/// Builds the gradation of `rrd` with characteristic element `Σ c_i H^i`.
pub fn make_gradation<'a>(rrd: &'a RestrictedRootData, coeffs: &[u32]) -> Result<Gradation<'a>> {
    if coeffs.len() != rrd.rank() {
        return Err(Error::RankMismatch {
            expected: rrd.rank(),
            got: coeffs.len(),
        });
    }
    let z = CharacteristicElement::new(coeffs.to_vec())?;
    Ok(Gradation::new(rrd, z))
}

impl<'a> Gradation<'a> {
    pub fn new(rrd: &'a RestrictedRootData, z: CharacteristicElement) -> Self {
        assert_eq!(z.coeffs().len(), rrd.rank(), "characteristic element rank");
        let levels: Vec<u32> = rrd
            .root_system()
            .positive_roots()
            .iter()
            .map(|root| {
                root.iter()
                    .zip(z.coeffs())
                    .map(|(&n, &c)| n as u32 * c)
                    .sum()
            })
            .collect();
        let kind = levels.iter().copied().max().unwrap_or(0);
        Gradation {
            rrd,
            z,
            levels,
            kind,
        }
    }

    pub fn root_data(&self) -> &'a RestrictedRootData {
        self.rrd
    }

    pub fn characteristic(&self) -> &CharacteristicElement {
        &self.z
    }

    /// `Z` as a Cartan vector.
    pub fn z_vector(&self) -> CartanVector {
        self.rrd.from_dual_coords(&self.z.as_rationals())
    }

    /// `α(Z)` for the positive root with the given index.
    pub fn level(&self, root_index: usize) -> u32 {
        self.levels[root_index]
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// The kind `ν`: largest `k` with `g_k ≠ 0`.
    pub fn kind(&self) -> u32 {
        self.kind
    }

    pub fn is_alpha0(&self) -> bool {
        self.z.is_alpha0()
    }

    /// Root indices of `Δ_k`; `k = 0` gives the positive roots at level zero.
    pub fn layer(&self, k: u32) -> Vec<usize> {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == k)
            .map(|(i, _)| i)
            .collect()
    }

    /// Root indices with positive level (the roots of `n`).
    pub fn nilradical_roots(&self) -> Vec<usize> {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l > 0)
            .map(|(i, _)| i)
            .collect()
    }

    /// `dim g_k = Σ_{α∈Δ_k} mult(α)`.
    pub fn dim(&self, k: u32) -> u64 {
        self.levels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == k)
            .map(|(i, _)| self.rrd.mult(i) as u64)
            .sum()
    }

    /// `(dim g_1, …, dim g_ν)`.
    pub fn dims(&self) -> Vec<u64> {
        let mut dims = vec![0u64; self.kind as usize];
        for (i, &l) in self.levels.iter().enumerate() {
            if l > 0 {
                dims[l as usize - 1] += self.rrd.mult(i) as u64;
            }
        }
        dims
    }

    pub fn nilradical_dim(&self) -> u64 {
        self.dims().iter().sum()
    }

    /// First kind: `n` is abelian.
    pub fn is_abelian(&self) -> bool {
        self.kind == 1
    }

    /// The type-α₀ gradation with the same nilradical.
    pub fn alpha0_reduction(&self) -> Gradation<'a> {
        Gradation::new(self.rrd, self.z.reduced())
    }

    /// Regular characteristic element: every simple coefficient is positive.
    pub fn is_longest(&self) -> bool {
        self.z.coeffs().iter().all(|&c| c > 0)
    }
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    /// Restrict to coefficients in `{0, 1}`.
    pub alpha0_only: bool,
    /// Upper bound on each coefficient when `alpha0_only` is false.
    pub max_coefficient: u32,
    /// Keep only gradations of at most this kind.
    pub max_kind: Option<u32>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            alpha0_only: true,
            max_coefficient: 1,
            max_kind: None,
        }
    }
}

/// One gradation per diagram-automorphism orbit of characteristic elements.
///
/// The representative of each orbit is its lexicographically least
/// coefficient vector. Output is sorted by support size, then by the sorted
/// list of support nodes, then by coefficient vector.
pub fn enumerate_gradations<'a>(
    rrd: &'a RestrictedRootData,
    options: &EnumerateOptions,
) -> Vec<Gradation<'a>> {
    let rs = rrd.root_system();
    let r = rs.rank();
    let bound = if options.alpha0_only {
        1
    } else {
        options.max_coefficient.max(1)
    };

    let mut reps: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut c = vec![0u32; r];
    loop {
        // odometer increment over {0..=bound}^r
        let mut i = 0;
        while i < r && c[i] == bound {
            c[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
        c[i] += 1;
        let rep = rs
            .automorphism_orbit(&c)
            .into_iter()
            .next()
            .expect("orbit contains c");
        reps.insert(rep);
    }

    let mut out: Vec<Gradation<'a>> = reps
        .into_iter()
        .map(|c| Gradation::new(rrd, CharacteristicElement(c)))
        .filter(|g| options.max_kind.is_none_or(|m| g.kind() <= m))
        .collect();
    out.sort_by(|a, b| {
        let (sa, sb) = (a.z.support(), b.z.support());
        sa.len()
            .cmp(&sb.len())
            .then_with(|| sa.cmp(&sb))
            .then_with(|| a.z.cmp(&b.z))
    });
    out
}
