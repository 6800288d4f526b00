//! Positive roots of finite Cartan matrices and what is built from them.
//!
//! Roots live in simple-root coordinates, weights in fundamental-weight
//! coordinates. The pairing of a root `beta = sum c_j alpha_j` with a simple
//! root is `<beta, alpha_i> = sum_j c_j M[j][i]`, and the simple reflection is
//! `s_i(beta) = beta - <beta, alpha_i> alpha_i`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{classify, CartanMatrix, Kind};
use crate::linalg::{self, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("matrix is not of finite type")]
    NotFinite,
    #[error("root coordinates have mixed signs or are zero")]
    MixedSigns,
    #[error("root is negative")]
    NegativeRoot,
    #[error("{0:?} is not a positive root")]
    NotARoot(Vec<i64>),
    #[error("no filtration step found for position {0}")]
    NoStepFound(usize),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("anticanonical coefficients disagree with the positive-root sum")]
    CrossCheckFailed,
    #[error("marking covers every node")]
    FullSubset,
    #[error("marking is empty")]
    EmptyMarking,
    #[error("node {0} is out of range")]
    IndexOutOfRange(usize),
}

/// A root in simple-root coordinates: nonzero, all coordinates of one sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Result<Self, RootError> {
        let pos = coords.iter().all(|&c| c >= 0);
        let neg = coords.iter().all(|&c| c <= 0);
        if coords.iter().all(|&c| c == 0) || !(pos || neg) {
            return Err(RootError::MixedSigns);
        }
        Ok(Self(coords))
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Self(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    /// Sum of coordinates; defined for positive roots only.
    pub fn height(&self) -> Result<i64, RootError> {
        if !self.is_positive() {
            return Err(RootError::NegativeRoot);
        }
        Ok(self.0.iter().sum())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i + 1)
    }
}

pub fn height(r: &RootVector) -> Result<i64, RootError> {
    r.height()
}

/// A weight in fundamental-weight coordinates: `coords[i] = <w, alpha_i>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn pairing(&self, i: usize) -> i64 {
        self.0[i - 1]
    }
}

/// `<beta, alpha_i>` for all `i`, i.e. `beta` in weight coordinates.
pub fn root_to_weight(m: &CartanMatrix, coords: &[i64]) -> WeightVector {
    let n = m.rank();
    WeightVector(
        (0..n)
            .map(|i| (0..n).map(|j| coords[j] * m.entry(j, i)).sum())
            .collect(),
    )
}

/// Applies the simple reflection `s_i` (1-based) to a coordinate vector.
pub fn reflect(m: &CartanMatrix, i: usize, coords: &[i64]) -> Vec<i64> {
    let k = i - 1;
    let pairing: i64 = (0..m.rank()).map(|j| coords[j] * m.entry(j, k)).sum();
    let mut out = coords.to_vec();
    out[k] -= pairing;
    out
}

/// The positive roots of a finite Cartan matrix, in filtration order:
/// height ascending, ties by ascending lexicographic coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    positive: Vec<RootVector>,
    index: BTreeMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(m: &CartanMatrix) -> Result<Self, RootError> {
        if classify(m).kind != Kind::Finite {
            return Err(RootError::NotFinite);
        }
        let n = m.rank();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 1..=n {
            let s = RootVector::simple(n, i).0;
            seen.insert(s.clone());
            queue.push_back(s);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 1..=n {
                let image = reflect(m, i, &beta);
                if image.iter().all(|&c| c >= 0) && seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive: Vec<RootVector> = seen.into_iter().map(RootVector).collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| a.0.cmp(&b.0))
        });
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.0.clone(), k))
            .collect();
        Ok(Self {
            cartan: m.clone(),
            positive,
            index,
        })
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    /// 0-based position of a positive root in the filtration order.
    pub fn position(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_positive_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    /// Any root, positive or negative.
    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.is_positive_root(coords) || {
            let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
            self.is_positive_root(&neg)
        }
    }

    /// Positive roots supported on the 1-based node set `s`.
    pub fn phi_plus_sub(&self, s: &[usize]) -> Result<Vec<RootVector>, RootError> {
        let s = self.checked(s)?;
        Ok(self
            .positive
            .iter()
            .filter(|r| r.support().all(|i| s.contains(&i)))
            .cloned()
            .collect())
    }

    /// True when every positive-root decomposition of a member has both
    /// summands in the set.
    pub fn is_admissible(&self, psi: &[RootVector]) -> Result<bool, RootError> {
        let set: BTreeSet<&[i64]> = psi.iter().map(|r| r.coords()).collect();
        if let Some(bad) = psi.iter().find(|r| !self.is_positive_root(r.coords())) {
            return Err(RootError::NotARoot(bad.0.clone()));
        }
        for gamma in psi {
            for alpha in &self.positive {
                let rest: Vec<i64> = gamma.0.iter().zip(&alpha.0).map(|(g, a)| g - a).collect();
                if self.is_positive_root(&rest)
                    && !(set.contains(alpha.coords()) && set.contains(rest.as_slice()))
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// One witness `beta_k = beta_j + alpha_l` per non-simple position, with
    /// `beta_j' + alpha_l` in `V_k` (a root among the first `k`, or not a
    /// root) for every `j' < j`. Smallest `j`, then smallest `l`.
    pub fn build_filtration(&self) -> Result<Vec<FiltrationStep>, RootError> {
        let n = self.rank();
        let mut steps = Vec::new();
        for (k, beta_k) in self.positive.iter().enumerate() {
            if beta_k.0.iter().sum::<i64>() == 1 {
                continue;
            }
            let in_vk = |coords: &[i64]| match self.position(coords) {
                Some(p) => p <= k,
                None => true,
            };
            let step = (0..k).find_map(|j| {
                (1..=n).find_map(|l| {
                    let mut sum = self.positive[j].0.clone();
                    sum[l - 1] += 1;
                    if sum != beta_k.0 {
                        return None;
                    }
                    let prefix_ok = (0..j).all(|jp| {
                        let mut s = self.positive[jp].0.clone();
                        s[l - 1] += 1;
                        in_vk(&s)
                    });
                    prefix_ok.then_some(FiltrationStep {
                        k: k + 1,
                        j: j + 1,
                        l,
                    })
                })
            });
            steps.push(step.ok_or(RootError::NoStepFound(k + 1))?);
        }
        Ok(steps)
    }

    /// Solves `v^T M = 2 * 1^T` and checks it against the positive-root sum.
    pub fn anticanonical_coefficients(&self) -> Result<Vec<Rational>, RootError> {
        let n = self.rank();
        let mt: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| rat(self.cartan.entry(j, i))).collect())
            .collect();
        let v = linalg::solve(&mt, &vec![rat(2); n]).ok_or(RootError::SingularSystem)?;
        let sum = sum_roots_coords(n, &self.positive);
        if v.iter().zip(&sum).any(|(a, &b)| *a != rat(b)) {
            return Err(RootError::CrossCheckFailed);
        }
        Ok(v)
    }

    /// Coefficients `m_i`, `i` outside `marked`, of the sum of positive
    /// roots supported away from the marking.
    pub fn relative_canonical_coefficients(
        &self,
        marked: &[usize],
    ) -> Result<BTreeMap<usize, i64>, RootError> {
        let marked = self.checked(marked)?;
        if marked.len() == self.rank() {
            return Err(RootError::FullSubset);
        }
        let rest: Vec<usize> = (1..=self.rank()).filter(|i| !marked.contains(i)).collect();
        let sum = sum_roots_coords(self.rank(), &self.phi_plus_sub(&rest)?);
        Ok(rest.into_iter().map(|i| (i, sum[i - 1])).collect())
    }

    /// `|Phi+| - |Phi+(I)|` where `Phi+(I)` is generated by the unmarked
    /// simple roots.
    pub fn flag_dimension(&self, marked: &[usize]) -> Result<usize, RootError> {
        let marked = self.checked(marked)?;
        if marked.is_empty() {
            return Err(RootError::EmptyMarking);
        }
        let rest: Vec<usize> = (1..=self.rank()).filter(|i| !marked.contains(i)).collect();
        Ok(self.len() - self.phi_plus_sub(&rest)?.len())
    }

    fn checked(&self, nodes: &[usize]) -> Result<Vec<usize>, RootError> {
        self.cartan.check_nodes(nodes).map_err(|e| match e {
            crate::cartan::CartanError::IndexOutOfRange(i) => RootError::IndexOutOfRange(i),
            _ => RootError::EmptyMarking,
        })
    }
}

/// Witness that `beta_k = beta_j + alpha_l` (1-based positions and node).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiltrationStep {
    pub k: usize,
    pub j: usize,
    pub l: usize,
}

pub fn positive_roots(m: &CartanMatrix) -> Result<Vec<RootVector>, RootError> {
    RootSystem::new(m).map(|rs| rs.positive)
}

pub fn phi_plus_sub(m: &CartanMatrix, s: &[usize]) -> Result<Vec<RootVector>, RootError> {
    RootSystem::new(m)?.phi_plus_sub(s)
}

pub fn is_admissible(m: &CartanMatrix, psi: &[RootVector]) -> Result<bool, RootError> {
    RootSystem::new(m)?.is_admissible(psi)
}

pub fn build_filtration(m: &CartanMatrix) -> Result<Vec<FiltrationStep>, RootError> {
    RootSystem::new(m)?.build_filtration()
}

pub fn anticanonical_coefficients(m: &CartanMatrix) -> Result<Vec<Rational>, RootError> {
    RootSystem::new(m)?.anticanonical_coefficients()
}

pub fn relative_canonical_coefficients(
    m: &CartanMatrix,
    marked: &[usize],
) -> Result<BTreeMap<usize, i64>, RootError> {
    RootSystem::new(m)?.relative_canonical_coefficients(marked)
}

pub fn flag_dimension(m: &CartanMatrix, marked: &[usize]) -> Result<usize, RootError> {
    RootSystem::new(m)?.flag_dimension(marked)
}

/// Componentwise sum of root coordinates in rank `n`.
pub fn sum_roots_coords(n: usize, roots: &[RootVector]) -> Vec<i64> {
    let mut acc = vec![0; n];
    for r in roots {
        for (a, c) in acc.iter_mut().zip(&r.0) {
            *a += c;
        }
    }
    acc
}
