//! Root systems, restricted-root multiplicities and the Killing-normalized
//! inner product on the Cartan subspace.
//!
//! Roots are integer coefficient vectors in the basis of simple roots
//! (Bourbaki numbering, 1-based in user-facing text, 0-based in code).
//! Cartan-space vectors are rational coordinate vectors in the basis
//! `{H_{α_1}, …, H_{α_r}}`, where `H_α` is defined by `B_σ(H_α, H) = α(H)`.
//! With this choice `β(H)` is a single contraction with the Gram matrix.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{int, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
    BC,
}

impl Family {
    pub fn validate_rank(self, rank: usize) -> Result<()> {
        let ok = match self {
            Family::A | Family::BC => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
            Family::F4 => rank == 4,
            Family::G2 => rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidRank { family: self, rank })
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(
            self,
            Family::A | Family::D | Family::E6 | Family::E7 | Family::E8
        )
    }

    /// `A3`, `BC2`, `F4`, ...
    pub fn label(self, rank: usize) -> String {
        match self {
            Family::A | Family::B | Family::C | Family::D | Family::BC => format!("{self}{rank}"),
            _ => self.to_string(),
        }
    }

    /// Number of positive roots, counting the doubled roots of BC.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
            Family::BC => rank * rank + rank,
            Family::E6 => 36,
            Family::E7 => 63,
            Family::E8 => 120,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "F4" => Family::F4,
            "G2" => Family::G2,
            "BC" => Family::BC,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

/// Gram matrix of the simple roots in an integral normalization
/// (shortest reduced roots have squared length 2).
fn simple_form(family: Family, rank: usize) -> Vec<Vec<i64>> {
    let mut f = vec![vec![0i64; rank]; rank];
    let link = |f: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        f[i][j] = v;
        f[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..rank {
                f[i][i] = 2;
                if i + 1 < rank {
                    link(&mut f, i, i + 1, -1);
                }
            }
        }
        // α_i = e_i − e_{i+1} (long), α_r = e_r (short), with e_i·e_i = 2.
        Family::B | Family::BC => {
            for i in 0..rank {
                f[i][i] = if i + 1 == rank { 2 } else { 4 };
                if i + 1 < rank {
                    link(&mut f, i, i + 1, -2);
                }
            }
        }
        // α_i = e_i − e_{i+1} (short), α_r = 2e_r (long), with e_i·e_i = 1.
        Family::C => {
            for i in 0..rank {
                f[i][i] = if i + 1 == rank { 4 } else { 2 };
                if i + 1 < rank {
                    link(&mut f, i, i + 1, if i + 2 == rank { -2 } else { -1 });
                }
            }
        }
        Family::D => {
            for i in 0..rank {
                f[i][i] = 2;
            }
            for i in 0..rank - 2 {
                link(&mut f, i, i + 1, -1);
            }
            link(&mut f, rank - 3, rank - 1, -1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for i in 0..rank {
                f[i][i] = 2;
            }
            link(&mut f, 0, 2, -1);
            link(&mut f, 1, 3, -1);
            for i in 2..rank - 1 {
                link(&mut f, i, i + 1, -1);
            }
        }
        Family::F4 => {
            f[0][0] = 4;
            f[1][1] = 4;
            f[2][2] = 2;
            f[3][3] = 2;
            link(&mut f, 0, 1, -2);
            link(&mut f, 1, 2, -2);
            link(&mut f, 2, 3, -1);
        }
        Family::G2 => {
            f[0][0] = 2;
            f[1][1] = 6;
            link(&mut f, 0, 1, -3);
        }
    }
    f
}

/// Generators of the Dynkin-diagram automorphism group, as 0-based
/// permutations `p` with node `i ↦ p[i]`.
fn diagram_automorphisms(family: Family, rank: usize) -> Vec<Vec<usize>> {
    match family {
        Family::A if rank >= 2 => vec![(0..rank).rev().collect()],
        Family::D => {
            let mut swap: Vec<usize> = (0..rank).collect();
            swap.swap(rank - 2, rank - 1);
            if rank == 4 {
                // triality: 1 → 3 → 4 → 1 (1-based)
                vec![swap, vec![2, 1, 3, 0]]
            } else {
                vec![swap]
            }
        }
        Family::E6 => vec![vec![5, 1, 4, 3, 2, 0]],
        _ => Vec::new(),
    }
}

/// An irreducible block of a (possibly reducible) root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    /// Index of the component's first simple root.
    pub offset: usize,
}

impl Component {
    pub fn nodes(&self) -> std::ops::Range<usize> {
        self.offset..self.offset + self.rank
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LengthClass {
    Long,
    Short,
    /// `2β` for a short root `β` of a BC system.
    Doubled,
}

/// Weyl-orbit class of a root: irreducible component plus length class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootClass {
    pub component: usize,
    pub length: LengthClass,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    components: Vec<Component>,
    base_form: Vec<Vec<i64>>,
    positive: Vec<Vec<i32>>,
    index: HashMap<Vec<i32>, usize>,
    classes: Vec<RootClass>,
    automorphisms: Vec<Vec<usize>>,
}

impl RootSystem {
    /// Builds the irreducible root system of the given family and rank.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Self::from_components(&[(family, rank)])
    }

    /// Orthogonal direct sum of irreducible systems, in the given order.
    pub fn from_components(parts: &[(Family, usize)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Schema(
                "a root system needs at least one component".into(),
            ));
        }
        let mut components = Vec::with_capacity(parts.len());
        let mut offset = 0;
        for &(family, rank) in parts {
            family.validate_rank(rank)?;
            components.push(Component {
                family,
                rank,
                offset,
            });
            offset += rank;
        }
        let total = offset;

        let mut base_form = vec![vec![0i64; total]; total];
        let mut positive = Vec::new();
        let mut classes = Vec::new();
        let mut automorphisms = Vec::new();
        for (ci, comp) in components.iter().enumerate() {
            let local = simple_form(comp.family, comp.rank);
            for i in 0..comp.rank {
                for j in 0..comp.rank {
                    base_form[comp.offset + i][comp.offset + j] = local[i][j];
                }
            }
            let roots = component_roots(comp.family, comp.rank, &local)?;
            let local_classes = classify(comp.family, &local, &roots);
            for (root, length) in roots.into_iter().zip(local_classes) {
                let mut full = vec![0i32; total];
                full[comp.nodes()].copy_from_slice(&root);
                positive.push(full);
                classes.push(RootClass {
                    component: ci,
                    length,
                });
            }
            for gen in diagram_automorphisms(comp.family, comp.rank) {
                let mut full: Vec<usize> = (0..total).collect();
                for (i, &p) in gen.iter().enumerate() {
                    full[comp.offset + i] = comp.offset + p;
                }
                automorphisms.push(full);
            }
        }
        // Isomorphic components may be exchanged; adjacent transpositions
        // within each isomorphism class generate all such exchanges.
        for (i, a) in components.iter().enumerate() {
            if let Some(b) = components[i + 1..]
                .iter()
                .find(|b| b.family == a.family && b.rank == a.rank)
            {
                let mut swap: Vec<usize> = (0..total).collect();
                for k in 0..a.rank {
                    swap[a.offset + k] = b.offset + k;
                    swap[b.offset + k] = a.offset + k;
                }
                automorphisms.push(swap);
            }
        }

        let mut order: Vec<usize> = (0..positive.len()).collect();
        order.sort_by(|&x, &y| {
            let hx: i32 = positive[x].iter().sum();
            let hy: i32 = positive[y].iter().sum();
            hx.cmp(&hy).then_with(|| positive[y].cmp(&positive[x]))
        });
        let positive: Vec<Vec<i32>> = order.iter().map(|&i| positive[i].clone()).collect();
        let classes: Vec<RootClass> = order.iter().map(|&i| classes[i]).collect();
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        Ok(RootSystem {
            components,
            base_form,
            positive,
            index,
            classes,
            automorphisms,
        })
    }

    pub fn rank(&self) -> usize {
        self.base_form.len()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Family of an irreducible system; `None` for a direct sum.
    pub fn family(&self) -> Option<Family> {
        match self.components.as_slice() {
            [c] => Some(c.family),
            _ => None,
        }
    }

    /// `A3`, `F4`, `A1+A1`, ...
    pub fn label(&self) -> String {
        self.components
            .iter()
            .map(|c| c.family.label(c.rank))
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Simple-root Gram matrix in the integral standard normalization.
    pub fn base_form(&self) -> &[Vec<i64>] {
        &self.base_form
    }

    /// Positive roots ordered by height, then by reverse lexicographic
    /// coefficient vector (so `α_1` precedes `α_2`).
    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive
    }

    pub fn root_class(&self, index: usize) -> RootClass {
        self.classes[index]
    }

    pub fn diagram_automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    /// Index of a positive root.
    pub fn index_of(&self, root: &[i32]) -> Option<usize> {
        self.index.get(root).copied()
    }

    /// Index of the positive root `±root`.
    pub fn index_up_to_sign(&self, root: &[i32]) -> Option<usize> {
        if let Some(i) = self.index_of(root) {
            return Some(i);
        }
        let neg: Vec<i32> = root.iter().map(|x| -x).collect();
        self.index_of(&neg)
    }

    pub fn is_root(&self, root: &[i32]) -> bool {
        root.len() == self.rank() && self.index_up_to_sign(root).is_some()
    }

    /// Highest root of each irreducible component.
    pub fn highest_roots(&self) -> Vec<Vec<i32>> {
        self.components
            .iter()
            .enumerate()
            .map(|(ci, _)| {
                self.positive
                    .iter()
                    .zip(&self.classes)
                    .filter(|(_, c)| c.component == ci)
                    .map(|(r, _)| r)
                    .max_by_key(|r| r.iter().sum::<i32>())
                    .cloned()
                    .expect("component has roots")
            })
            .collect()
    }

    pub fn base_inner(&self, a: &[i32], b: &[i32]) -> i64 {
        let mut s = 0i64;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                s += x as i64 * y as i64 * self.base_form[i][j];
            }
        }
        s
    }

    /// Simple reflection `s_j(β) = β − 2⟨α_j,β⟩/⟨α_j,α_j⟩ · α_j`.
    pub fn reflect(&self, j: usize, beta: &[i32]) -> Result<Vec<i32>> {
        if j >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: j,
                rank: self.rank(),
            });
        }
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_vec()));
        }
        Ok(reflect_with(&self.base_form, j, beta))
    }

    /// Applies a node permutation to a vector indexed by simple roots.
    pub fn permute<T: Clone>(perm: &[usize], v: &[T]) -> Vec<T> {
        let mut out = v.to_vec();
        for (i, &p) in perm.iter().enumerate() {
            out[p] = v[i].clone();
        }
        out
    }

    /// All images of `v` under the diagram automorphism group.
    pub fn automorphism_orbit<T: Clone + Eq + std::hash::Hash + Ord>(
        &self,
        v: &[T],
    ) -> Vec<Vec<T>> {
        let mut seen: HashSet<Vec<T>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(v.to_vec());
        queue.push_back(v.to_vec());
        while let Some(cur) = queue.pop_front() {
            for g in &self.automorphisms {
                let img = Self::permute(g, &cur);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut orbit: Vec<Vec<T>> = seen.into_iter().collect();
        orbit.sort();
        orbit
    }
}

fn reflect_with(form: &[Vec<i64>], j: usize, beta: &[i32]) -> Vec<i32> {
    let num: i64 = 2 * beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b as i64 * form[i][j])
        .sum::<i64>();
    let den = form[j][j];
    debug_assert_eq!(num % den, 0, "non-integral Cartan pairing");
    let mut out = beta.to_vec();
    out[j] -= (num / den) as i32;
    out
}

/// Positive roots of an irreducible system: the Weyl orbit of the simple
/// roots (plus `2α_r` for BC), keeping the positive half.
fn component_roots(family: Family, rank: usize, form: &[Vec<i64>]) -> Result<Vec<Vec<i32>>> {
    let mut seeds: Vec<Vec<i32>> = (0..rank)
        .map(|i| {
            let mut e = vec![0; rank];
            e[i] = 1;
            e
        })
        .collect();
    if family == Family::BC {
        let mut e = vec![0; rank];
        e[rank - 1] = 2;
        seeds.push(e);
    }
    let mut all: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
    for s in seeds {
        let neg: Vec<i32> = s.iter().map(|x| -x).collect();
        for r in [s, neg] {
            if all.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    while let Some(beta) = queue.pop_front() {
        for j in 0..rank {
            let img = reflect_with(form, j, &beta);
            if all.insert(img.clone()) {
                queue.push_back(img);
            }
        }
    }
    for r in &all {
        let pos = r.iter().all(|&x| x >= 0);
        let neg = r.iter().all(|&x| x <= 0);
        if !(pos || neg) {
            return Err(Error::Consistency(format!(
                "mixed-sign root {r:?} in {family}{rank}"
            )));
        }
    }
    let positive: Vec<Vec<i32>> = all
        .into_iter()
        .filter(|r| r.iter().all(|&x| x >= 0))
        .collect();
    let expected = family.positive_root_count(rank);
    if positive.len() != expected {
        return Err(Error::Consistency(format!(
            "{family}{rank}: generated {} positive roots, expected {expected}",
            positive.len()
        )));
    }
    Ok(positive)
}

fn classify(family: Family, form: &[Vec<i64>], roots: &[Vec<i32>]) -> Vec<LengthClass> {
    let norm = |r: &[i32]| -> i64 {
        let mut s = 0;
        for i in 0..r.len() {
            for j in 0..r.len() {
                s += r[i] as i64 * r[j] as i64 * form[i][j];
            }
        }
        s
    };
    let set: HashSet<&[i32]> = roots.iter().map(|r| r.as_slice()).collect();
    let doubled: Vec<bool> = roots
        .iter()
        .map(|r| {
            family == Family::BC && r.iter().all(|x| x % 2 == 0) && {
                let half: Vec<i32> = r.iter().map(|x| x / 2).collect();
                set.contains(half.as_slice())
            }
        })
        .collect();
    let long = roots
        .iter()
        .zip(&doubled)
        .filter(|(_, &d)| !d)
        .map(|(r, _)| norm(r))
        .max()
        .unwrap_or(0);
    roots
        .iter()
        .zip(&doubled)
        .map(|(r, &d)| {
            let twice: Vec<i32> = r.iter().map(|x| 2 * x).collect();
            if d {
                LengthClass::Doubled
            } else if family == Family::BC {
                if set.contains(twice.as_slice()) {
                    LengthClass::Short
                } else {
                    LengthClass::Long
                }
            } else if norm(r) == long {
                LengthClass::Long
            } else {
                LengthClass::Short
            }
        })
        .collect()
}

/// `dim g_α` for every positive root, aligned with
/// [`RootSystem::positive_roots`]. Negative roots share the multiplicity of
/// their negatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    mult: Vec<u32>,
}

impl MultiplicityProfile {
    pub fn uniform(rs: &RootSystem, m: u32) -> Self {
        MultiplicityProfile {
            mult: vec![m; rs.positive_roots().len()],
        }
    }

    /// Assigns one multiplicity per Weyl-orbit class.
    pub fn from_classes(rs: &RootSystem, f: impl Fn(RootClass) -> u32) -> Self {
        let mult = (0..rs.positive_roots().len())
            .map(|i| f(rs.root_class(i)))
            .collect();
        MultiplicityProfile { mult }
    }

    /// Raw per-root assignment. Not checked for Weyl invariance here; see
    /// [`MultiplicityProfile::check_weyl_invariant`].
    pub fn from_root_mults(rs: &RootSystem, mult: Vec<u32>) -> Result<Self> {
        if mult.len() != rs.positive_roots().len() {
            return Err(Error::RankMismatch {
                expected: rs.positive_roots().len(),
                got: mult.len(),
            });
        }
        Ok(MultiplicityProfile { mult })
    }

    pub fn get(&self, index: usize) -> u32 {
        self.mult[index]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.mult
    }

    pub fn check_weyl_invariant(&self, rs: &RootSystem) -> Result<()> {
        if self.mult.len() != rs.positive_roots().len() {
            return Err(Error::RankMismatch {
                expected: rs.positive_roots().len(),
                got: self.mult.len(),
            });
        }
        if self.mult.contains(&0) {
            return Err(Error::ZeroMultiplicity);
        }
        for (i, beta) in rs.positive_roots().iter().enumerate() {
            for j in 0..rs.rank() {
                let img = rs.reflect(j, beta)?;
                let k = rs.index_up_to_sign(&img).ok_or_else(|| {
                    Error::Consistency(format!("reflection left the root set at {img:?}"))
                })?;
                if self.mult[k] != self.mult[i] {
                    return Err(Error::NotWeylInvariant(format!(
                        "mult{beta:?} = {} but mult{:?} = {} (reflection s_{})",
                        self.mult[i],
                        rs.positive_roots()[k],
                        self.mult[k],
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A vector of the Cartan subspace `a`, in the basis `{H_{α_i}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanVector(Vec<Q>);

impl CartanVector {
    pub fn new(coords: Vec<Q>) -> Self {
        CartanVector(coords)
    }

    pub fn zero(rank: usize) -> Self {
        CartanVector(vec![Q::zero(); rank])
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl Add for &CartanVector {
    type Output = CartanVector;

    fn add(self, rhs: &CartanVector) -> CartanVector {
        CartanVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &CartanVector {
    type Output = CartanVector;

    fn sub(self, rhs: &CartanVector) -> CartanVector {
        CartanVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<Q> for &CartanVector {
    type Output = CartanVector;

    fn mul(self, rhs: Q) -> CartanVector {
        CartanVector(self.0.iter().map(|a| a * rhs).collect())
    }
}

/// Root system with multiplicities and the inner product induced by the
/// Killing form.
#[derive(Clone, Debug)]
pub struct RestrictedRootData {
    name: String,
    rs: RootSystem,
    profile: MultiplicityProfile,
    scales: Vec<Q>,
    gram: Matrix,
    dual_basis: Matrix,
}

/// Normalizes the inner product so that it is the one induced by the Killing
/// form: `⟨λ,μ⟩_B = Σ_{γ∈Δ} mult(γ) ⟨γ,λ⟩_B ⟨γ,μ⟩_B`.
///
/// On each irreducible component the Weyl-invariant form is a multiple
/// `t·⟨,⟩₀` of the standard one, and the identity above fixes
/// `t = ⟨α,α⟩₀ / Σ_γ mult(γ)⟨γ,α⟩₀²` for any root `α` of the component.
pub fn killing_normalize(
    name: impl Into<String>,
    rs: RootSystem,
    profile: MultiplicityProfile,
) -> Result<RestrictedRootData> {
    profile.check_weyl_invariant(&rs)?;
    let r = rs.rank();

    let mut scales = Vec::with_capacity(rs.components().len());
    for (ci, comp) in rs.components().iter().enumerate() {
        let mut alpha = vec![0i32; r];
        alpha[comp.offset] = 1;
        let norm = rs.base_inner(&alpha, &alpha);
        let mut sum: i128 = 0;
        for (k, gamma) in rs.positive_roots().iter().enumerate() {
            if rs.root_class(k).component != ci {
                continue;
            }
            let p = rs.base_inner(gamma, &alpha) as i128;
            // ±γ both contribute.
            sum += 2 * profile.get(k) as i128 * p * p;
        }
        scales.push(Q::new(norm as i128, sum));
    }

    let comp_of = |i: usize| {
        rs.components()
            .iter()
            .position(|c| c.nodes().contains(&i))
            .expect("node belongs to a component")
    };
    let gram: Matrix = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let f = rs.base_form()[i][j];
                    if f == 0 {
                        Q::zero()
                    } else {
                        int(f as i128) * scales[comp_of(i)]
                    }
                })
                .collect()
        })
        .collect();
    let dual_basis = linalg::invert(&gram)
        .ok_or_else(|| Error::Consistency("Gram matrix is singular".into()))?;

    let rrd = RestrictedRootData {
        name: name.into(),
        rs,
        profile,
        scales,
        gram,
        dual_basis,
    };
    rrd.verify()?;
    Ok(rrd)
}

impl RestrictedRootData {
    fn verify(&self) -> Result<()> {
        if !linalg::is_positive_definite(&self.gram) {
            return Err(Error::Consistency(
                "Gram matrix is not positive definite".into(),
            ));
        }
        if linalg::mat_mul(&self.gram, &self.dual_basis) != linalg::identity(self.rank()) {
            return Err(Error::Consistency(
                "dual basis does not satisfy α_i(H^j) = δ_ij".into(),
            ));
        }
        if let Some((i, j)) = self.killing_defect() {
            return Err(Error::Consistency(format!(
                "Killing consistency fails at (α_{}, α_{})",
                i + 1,
                j + 1
            )));
        }
        Ok(())
    }

    /// First pair `(i, j)` violating the Killing consistency identity, if any.
    pub fn killing_defect(&self) -> Option<(usize, usize)> {
        let r = self.rank();
        // dual coordinates (⟨γ, α_i⟩_B)_i of each positive root
        let duals: Vec<Vec<Q>> = self
            .rs
            .positive_roots()
            .iter()
            .map(|g| linalg::mat_vec(&self.gram, &to_q(g)))
            .collect();
        for i in 0..r {
            for j in i..r {
                let mut sum = Q::zero();
                for (k, d) in duals.iter().enumerate() {
                    sum += int(2 * self.profile.get(k) as i128) * d[i] * d[j];
                }
                if sum != self.gram[i][j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn profile(&self) -> &MultiplicityProfile {
        &self.profile
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `G_ij = ⟨α_i, α_j⟩_B`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// Column `j` holds `H^j` in the `{H_{α_i}}` basis.
    pub fn dual_basis(&self) -> &Matrix {
        &self.dual_basis
    }

    /// The factor `t` with `⟨,⟩_B = t·⟨,⟩₀` on the given component.
    pub fn killing_scale(&self, component: usize) -> Q {
        self.scales[component]
    }

    pub fn mult(&self, index: usize) -> u32 {
        self.profile.get(index)
    }

    /// Multiplicity of any root (positive or negative); `None` for non-roots.
    pub fn mult_of(&self, root: &[i32]) -> Option<u32> {
        self.rs.index_up_to_sign(root).map(|i| self.profile.get(i))
    }

    pub fn reflect(&self, j: usize, beta: &[i32]) -> Result<Vec<i32>> {
        self.rs.reflect(j, beta)
    }

    /// `H_β` for a dual-space vector `β` given in simple-root coordinates.
    pub fn root_vector(&self, beta: &[i32]) -> CartanVector {
        CartanVector(to_q(beta))
    }

    /// `H^j` (0-based `j`).
    pub fn dual_vector(&self, j: usize) -> CartanVector {
        CartanVector(self.dual_basis.iter().map(|row| row[j]).collect())
    }

    /// `Σ c_j H^j`.
    pub fn from_dual_coords(&self, c: &[Q]) -> CartanVector {
        CartanVector(linalg::mat_vec(&self.dual_basis, c))
    }

    /// `(α_1(H), …, α_r(H))`, i.e. the coordinates of `H` in the dual basis.
    pub fn dual_coords(&self, h: &CartanVector) -> Vec<Q> {
        linalg::mat_vec(&self.gram, &h.0)
    }

    /// `β(H)` for `β` in simple-root coordinates.
    pub fn pairing(&self, beta: &[Q], h: &CartanVector) -> Result<Q> {
        if beta.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: beta.len(),
            });
        }
        if h.0.len() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: h.0.len(),
            });
        }
        Ok(linalg::dot(beta, &self.dual_coords(h)))
    }

    /// `β(H)` for an integral `β`; lengths are assumed to match.
    pub fn eval(&self, beta: &[i32], dual_coords: &[Q]) -> Q {
        beta.iter()
            .zip(dual_coords)
            .filter(|(b, _)| **b != 0)
            .fold(Q::zero(), |acc, (&b, c)| acc + int(b as i128) * c)
    }

    /// `B_σ(H, H')`.
    pub fn inner(&self, h: &CartanVector, k: &CartanVector) -> Q {
        linalg::dot(&h.0, &linalg::mat_vec(&self.gram, &k.0))
    }

    /// `⟨β, γ⟩_B` for dual-space vectors in simple-root coordinates.
    pub fn root_inner(&self, beta: &[i32], gamma: &[i32]) -> Q {
        self.inner(&self.root_vector(beta), &self.root_vector(gamma))
    }

    /// `tr(ad_H)²` on the whole algebra: `Σ_{γ∈Δ} mult(γ) γ(H)²`.
    pub fn killing_square(&self, h: &CartanVector) -> Q {
        let d = self.dual_coords(h);
        self.rs
            .positive_roots()
            .iter()
            .enumerate()
            .fold(Q::zero(), |acc, (k, g)| {
                let v = self.eval(g, &d);
                acc + int(2 * self.mult(k) as i128) * v * v
            })
    }

    /// Sum of `mult(γ)` over all positive roots (half of `dim g − dim g_0`).
    pub fn positive_dimension(&self) -> u64 {
        self.profile.as_slice().iter().map(|&m| m as u64).sum()
    }

    pub fn is_positive_vector(&self, h: &CartanVector) -> bool {
        self.dual_coords(h).iter().all(|c| c.is_positive())
    }
}

pub(crate) fn to_q(v: &[i32]) -> Vec<Q> {
    v.iter().map(|&x| int(x as i128)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn g2_positive_roots_in_order() {
        let rs = RootSystem::new(Family::G2, 2).unwrap();
        let expect: Vec<Vec<i32>> = vec![
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![3, 2],
        ];
        assert_eq!(rs.positive_roots(), expect.as_slice());
    }

    #[test]
    fn a1_single_root() {
        let rs = RootSystem::new(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[vec![1]]);
        assert!(rs.diagram_automorphisms().is_empty());
    }

    #[test]
    fn f4_lengths() {
        let rs = RootSystem::new(Family::F4, 4).unwrap();
        assert_eq!(rs.positive_roots().len(), 24);
        let long = (0..24)
            .filter(|&i| rs.root_class(i).length == LengthClass::Long)
            .count();
        assert_eq!(long, 12);
        assert_eq!(rs.highest_roots(), vec![vec![2, 3, 4, 2]]);
    }

    #[test]
    fn classical_counts_and_highest_roots() {
        let cases: &[(Family, usize, &[i32])] = &[
            (Family::A, 4, &[1, 1, 1, 1]),
            (Family::B, 3, &[1, 2, 2]),
            (Family::C, 3, &[2, 2, 1]),
            (Family::D, 5, &[1, 2, 2, 1, 1]),
            (Family::E6, 6, &[1, 2, 2, 3, 2, 1]),
            (Family::E7, 7, &[2, 2, 3, 4, 3, 2, 1]),
            (Family::E8, 8, &[2, 3, 4, 6, 5, 4, 3, 2]),
            (Family::G2, 2, &[3, 2]),
            (Family::BC, 2, &[2, 2]),
        ];
        for &(family, rank, highest) in cases {
            let rs = RootSystem::new(family, rank).unwrap();
            assert_eq!(rs.positive_roots().len(), family.positive_root_count(rank));
            assert_eq!(rs.highest_roots()[0], highest, "{family}{rank}");
        }
    }

    #[test]
    fn bc_has_each_doubled_root_once() {
        for rank in 1..=4 {
            let rs = RootSystem::new(Family::BC, rank).unwrap();
            let doubled: Vec<_> = (0..rs.positive_roots().len())
                .filter(|&i| rs.root_class(i).length == LengthClass::Doubled)
                .collect();
            assert_eq!(doubled.len(), rank);
            for i in doubled {
                let half: Vec<i32> = rs.positive_roots()[i].iter().map(|x| x / 2).collect();
                assert_eq!(
                    rs.root_class(rs.index_of(&half).unwrap()).length,
                    LengthClass::Short
                );
            }
        }
    }

    #[test]
    fn no_doubled_roots_outside_bc() {
        for (family, rank) in [
            (Family::B, 3),
            (Family::C, 3),
            (Family::F4, 4),
            (Family::G2, 2),
        ] {
            let rs = RootSystem::new(family, rank).unwrap();
            for r in rs.positive_roots() {
                let twice: Vec<i32> = r.iter().map(|x| 2 * x).collect();
                assert!(!rs.is_root(&twice));
            }
        }
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(RootSystem::new(Family::F4, 3).is_err());
        assert!(RootSystem::new(Family::G2, 3).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
        assert!(RootSystem::new(Family::D, 3).is_err());
        assert!("X7".parse::<Family>().is_err());
    }

    #[test]
    fn reflection_examples() {
        let a2 = RootSystem::new(Family::A, 2).unwrap();
        assert_eq!(a2.reflect(0, &[1, 0]).unwrap(), vec![-1, 0]);
        assert_eq!(a2.reflect(0, &[0, 1]).unwrap(), vec![1, 1]);
        let g2 = RootSystem::new(Family::G2, 2).unwrap();
        assert_eq!(g2.reflect(1, &[3, 1]).unwrap(), vec![3, 2]);
        assert!(matches!(a2.reflect(0, &[2, 0]), Err(Error::NotARoot(_))));
        assert!(matches!(
            a2.reflect(2, &[1, 0]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn automorphisms_preserve_base_form() {
        let systems = [
            RootSystem::new(Family::A, 5).unwrap(),
            RootSystem::new(Family::D, 4).unwrap(),
            RootSystem::new(Family::D, 6).unwrap(),
            RootSystem::new(Family::E6, 6).unwrap(),
            RootSystem::from_components(&[(Family::A, 2), (Family::G2, 2), (Family::A, 2)])
                .unwrap(),
        ];
        for rs in &systems {
            assert!(!rs.diagram_automorphisms().is_empty());
            for g in rs.diagram_automorphisms() {
                for i in 0..rs.rank() {
                    for j in 0..rs.rank() {
                        assert_eq!(rs.base_form()[g[i]][g[j]], rs.base_form()[i][j]);
                    }
                }
            }
        }
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        assert_eq!(d4.automorphism_orbit(&[1, 0, 0, 0]).len(), 3);
    }

    #[test]
    fn killing_normalization_rank_one() {
        // sl2(R): B(H,H) = Σ_γ γ(H)² with mult 1 gives ⟨α,α⟩ = 1/2;
        // sl2(C) viewed as real doubles every multiplicity, giving 1/4.
        let rs = RootSystem::new(Family::A, 1).unwrap();
        let split =
            killing_normalize("sl2(R)", rs.clone(), MultiplicityProfile::uniform(&rs, 1)).unwrap();
        assert_eq!(split.gram()[0][0], frac(1, 2));
        let complex =
            killing_normalize("sl2(C)", rs.clone(), MultiplicityProfile::uniform(&rs, 2)).unwrap();
        assert_eq!(complex.gram()[0][0], frac(1, 4));
    }

    #[test]
    fn non_invariant_profile_rejected() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let p = MultiplicityProfile::from_root_mults(&rs, vec![1, 2, 1]).unwrap();
        assert!(matches!(
            killing_normalize("bad", rs.clone(), p),
            Err(Error::NotWeylInvariant(_))
        ));
        let zero = MultiplicityProfile::uniform(&rs, 0);
        assert!(matches!(
            killing_normalize("bad", rs, zero),
            Err(Error::ZeroMultiplicity)
        ));
    }

    #[test]
    fn reducible_scales_per_component() {
        let rs = RootSystem::from_components(&[(Family::A, 1), (Family::A, 2)]).unwrap();
        let profile =
            MultiplicityProfile::from_classes(&rs, |c| if c.component == 0 { 2 } else { 1 });
        let rrd = killing_normalize("sl2(C)+sl3(R)", rs, profile).unwrap();
        assert_eq!(rrd.gram()[0][0], frac(1, 4));
        // sl3(R): ⟨α,α⟩ = 1/3 (sl_n split: 1/n).
        assert_eq!(rrd.gram()[1][1], frac(1, 3));
        assert_eq!(rrd.killing_defect(), None);
    }

    #[test]
    fn pairing_examples() {
        let rs = RootSystem::new(Family::G2, 2).unwrap();
        let rrd =
            killing_normalize("g2(2)", rs.clone(), MultiplicityProfile::uniform(&rs, 1)).unwrap();
        let h1 = rrd.dual_vector(0);
        assert_eq!(rrd.pairing(&to_q(&[3, 2]), &h1).unwrap(), int(3));
        for i in 0..2 {
            for j in 0..2 {
                let mut e = vec![0; 2];
                e[i] = 1;
                let expect = if i == j { int(1) } else { int(0) };
                assert_eq!(rrd.pairing(&to_q(&e), &rrd.dual_vector(j)).unwrap(), expect);
            }
        }
        let alpha = [1, 1];
        assert_eq!(
            rrd.pairing(&to_q(&alpha), &rrd.root_vector(&alpha))
                .unwrap(),
            rrd.root_inner(&alpha, &alpha)
        );
        assert!(rrd.pairing(&to_q(&[1]), &h1).is_err());
    }
}
