//! Weyl group actions, reduced words and the 0-Hecke (Coxeter) monoid.
//!
//! Elements are canonicalized by their integer action on the simple roots,
//! so equality is extensional. The monoid `W'` lives on the same set as `W`
//! with the Demazure product `x * s_i = x s_i` if that raises the length,
//! `x` otherwise.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanError, CartanMatrix};
use crate::rootsys::{reflect, RootError, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("letter {0} is not a node index")]
    BadLetter(usize),
    #[error("rank {0} exceeds the reduced-word enumeration bound {1}")]
    RankTooLarge(usize, usize),
    #[error(transparent)]
    Cartan(#[from] CartanError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// A word in the simple generators, 1-based letters.
pub type Word = Vec<usize>;

/// Coxeter exponents `a_ij` (2, 3, 4, 6 for 0..=3 edges), keyed by `(i, j)`
/// with `i < j`, 1-based.
pub fn coxeter_exponents(m: &CartanMatrix) -> Result<BTreeMap<(usize, usize), u32>, CoxeterError> {
    let n = m.rank();
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let product = m.entry(i, j) * m.entry(j, i);
            let a = match product {
                0 => 2,
                1 => 3,
                2 => 4,
                3 => 6,
                _ => return Err(CartanError::MultiplicityOverflow(i + 1, j + 1, product).into()),
            };
            out.insert((i + 1, j + 1), a);
        }
    }
    Ok(out)
}

/// Alternating word `i j i j ...` of the given length.
pub fn alternating(i: usize, j: usize, len: usize) -> Word {
    (0..len).map(|k| if k % 2 == 0 { i } else { j }).collect()
}

/// Weyl group element as an `n x n` integer matrix; column `j` is the image
/// of `alpha_j` in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    n: usize,
    action: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut action = vec![0; n * n];
        for i in 0..n {
            action[i * n + i] = 1;
        }
        Self { n, action }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Image of simple root `alpha_j` (1-based), in root coordinates.
    pub fn image_of_simple(&self, j: usize) -> Vec<i64> {
        (0..self.n)
            .map(|i| self.action[i * self.n + j - 1])
            .collect()
    }

    pub fn apply(&self, coords: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.action[i * self.n + j] * coords[j])
                    .sum()
            })
            .collect()
    }

    /// Matrix rows of the action.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.action.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// `self * other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.n;
        let mut action = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.action[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    action[i * n + j] += a * other.action[k * n + j];
                }
            }
        }
        Self { n, action }
    }
}

/// Element of the 0-Hecke monoid, carried by a Weyl group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeckeElement(pub WeylElement);

impl HeckeElement {
    pub fn carrier(&self) -> &WeylElement {
        &self.0
    }
}

/// A finite Weyl group with its root system, the context for lengths and
/// Demazure products.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    roots: RootSystem,
    generators: Vec<WeylElement>,
}

/// Default rank bound for reduced-word enumeration.
pub const REDUCED_WORDS_RANK_BOUND: usize = 4;

impl WeylGroup {
    pub fn new(m: &CartanMatrix) -> Result<Self, CoxeterError> {
        let roots = RootSystem::new(m)?;
        let n = m.rank();
        let generators = (1..=n)
            .map(|i| {
                let mut action = vec![0; n * n];
                for j in 1..=n {
                    let mut e = vec![0; n];
                    e[j - 1] = 1;
                    let img = reflect(m, i, &e);
                    for (r, v) in img.into_iter().enumerate() {
                        action[r * n + j - 1] = v;
                    }
                }
                WeylElement { n, action }
            })
            .collect();
        Ok(Self { roots, generators })
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn generator(&self, i: usize) -> Result<&WeylElement, CoxeterError> {
        if i == 0 || i > self.rank() {
            return Err(CoxeterError::BadLetter(i));
        }
        Ok(&self.generators[i - 1])
    }

    fn check_word(&self, w: &[usize]) -> Result<(), CoxeterError> {
        match w.iter().find(|&&i| i == 0 || i > self.rank()) {
            Some(&bad) => Err(CoxeterError::BadLetter(bad)),
            None => Ok(()),
        }
    }

    /// `s_{w_1} s_{w_2} ... s_{w_k}` as an action.
    pub fn element_of_word(&self, w: &[usize]) -> Result<WeylElement, CoxeterError> {
        self.check_word(w)?;
        Ok(w.iter().fold(self.identity(), |acc, &i| {
            acc.compose(&self.generators[i - 1])
        }))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.roots
            .positive_roots()
            .iter()
            .filter(|beta| w.apply(beta.coords()).iter().any(|&c| c < 0))
            .count()
    }

    pub fn is_reduced(&self, w: &[usize]) -> Result<bool, CoxeterError> {
        Ok(self.length(&self.element_of_word(w)?) == w.len())
    }

    /// One Demazure step `x * s_i`.
    pub fn demazure_step(&self, x: &HeckeElement, i: usize) -> Result<HeckeElement, CoxeterError> {
        let next = x.0.compose(self.generator(i)?);
        Ok(if self.length(&next) > self.length(&x.0) {
            HeckeElement(next)
        } else {
            x.clone()
        })
    }

    pub fn demazure_product(&self, w: &[usize]) -> Result<HeckeElement, CoxeterError> {
        self.check_word(w)?;
        w.iter().try_fold(HeckeElement(self.identity()), |acc, &i| {
            self.demazure_step(&acc, i)
        })
    }

    /// All distinct group elements, by breadth-first search over right
    /// multiplication by generators.
    pub fn enumerate_group(&self) -> BTreeSet<WeylElement> {
        let mut seen = BTreeSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// All monoid elements reachable from the identity under Demazure
    /// products, with their lengths.
    pub fn enumerate_monoid(&self) -> BTreeMap<HeckeElement, usize> {
        let id = HeckeElement(self.identity());
        let mut seen = BTreeMap::from([(id.clone(), 0)]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for i in 1..=self.rank() {
                let y = self.demazure_step(&x, i).expect("generator index in range");
                if !seen.contains_key(&y) {
                    let l = self.length(&y.0);
                    seen.insert(y.clone(), l);
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// The unique element of maximal length, found by monoid search, and its
    /// length. The length is checked against `|Phi+|`.
    pub fn longest_element(&self) -> (HeckeElement, usize) {
        let monoid = self.enumerate_monoid();
        let max = monoid.values().copied().max().unwrap_or(0);
        let mut longest = monoid
            .into_iter()
            .filter(|&(_, l)| l == max)
            .map(|(h, _)| h);
        let h = longest.next().expect("monoid is nonempty");
        assert!(longest.next().is_none(), "longest element is not unique");
        assert_eq!(max, self.roots.len(), "longest length differs from |Phi+|");
        (h, max)
    }

    /// Words of length `l(h)` whose Demazure product is `h`.
    pub fn reduced_words(&self, h: &HeckeElement) -> Result<BTreeSet<Word>, CoxeterError> {
        self.reduced_words_bounded(h, REDUCED_WORDS_RANK_BOUND)
    }

    pub fn reduced_words_bounded(
        &self,
        h: &HeckeElement,
        rank_bound: usize,
    ) -> Result<BTreeSet<Word>, CoxeterError> {
        if self.rank() > rank_bound {
            return Err(CoxeterError::RankTooLarge(self.rank(), rank_bound));
        }
        let target = self.length(&h.0);
        let mut out = BTreeSet::new();
        let h_inversions = self.inversion_set(&h.0);
        let mut word = Vec::with_capacity(target);
        self.extend_reduced(
            &HeckeElement(self.identity()),
            h,
            &h_inversions,
            target,
            &mut word,
            &mut out,
        );
        Ok(out)
    }

    fn extend_reduced(
        &self,
        x: &HeckeElement,
        h: &HeckeElement,
        h_inversions: &BTreeSet<Vec<i64>>,
        target: usize,
        word: &mut Word,
        out: &mut BTreeSet<Word>,
    ) {
        if word.len() == target {
            if x == h {
                out.insert(word.clone());
            }
            return;
        }
        for i in 1..=self.rank() {
            let y = self.demazure_step(x, i).expect("generator index in range");
            // every letter of a reduced word raises the length
            if y == *x {
                continue;
            }
            // y must stay a prefix of h (right weak order)
            if !self.inversion_set(&y.0).is_subset(h_inversions) {
                continue;
            }
            word.push(i);
            self.extend_reduced(&y, h, h_inversions, target, word, out);
            word.pop();
        }
    }

    /// `Phi+ ∩ w(Phi-)`, the positive roots `-w(gamma)` for positive `gamma`
    /// with `w(gamma) < 0`. Prefixes of reduced words have nested sets.
    pub fn inversion_set(&self, w: &WeylElement) -> BTreeSet<Vec<i64>> {
        self.roots
            .positive_roots()
            .iter()
            .filter_map(|gamma| {
                let img = w.apply(gamma.coords());
                img.iter()
                    .any(|&c| c < 0)
                    .then(|| img.iter().map(|c| -c).collect())
            })
            .collect()
    }

    pub fn chain_dimension(&self, w: &[usize]) -> Result<usize, CoxeterError> {
        Ok(self.length(&self.demazure_product(w)?.0))
    }

    pub fn chain_equal(&self, w1: &[usize], w2: &[usize]) -> Result<bool, CoxeterError> {
        Ok(self.demazure_product(w1)? == self.demazure_product(w2)?)
    }
}
