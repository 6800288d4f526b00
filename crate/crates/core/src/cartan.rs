//! Generalized Cartan matrices and Dynkin diagrams.
//!
//! A [`CartanMatrix`] is the ground truth; a [`DynkinDiagram`] is derived
//! display data. The arrow on a multiple edge `{i, j}` points to `i` when
//! `M[i][j] > M[j][i]`, so the arrowhead sits on the endpoint carrying the
//! `-1` entry.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, ToPrimitive};

use crate::linalg::{self, rat, Rational};
use crate::normalize_nodes;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CartanError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry ({0},{0}) is not 2")]
    BadDiagonal(usize),
    #[error("positive off-diagonal entry at ({0},{1})")]
    PositiveOffDiagonal(usize, usize),
    #[error("zero-asymmetry at ({0},{1})")]
    ZeroAsymmetry(usize, usize),
    #[error("edge ({0},{1}) has multiplicity {2}, not drawable (must be at most 3)")]
    MultiplicityOverflow(usize, usize, i64),
    #[error("node subset is empty")]
    EmptySubset,
    #[error("node {0} is out of range")]
    IndexOutOfRange(usize),
    #[error("{0}{1} is not a finite Dynkin type")]
    IllegalType(Family, usize),
    #[error("invalid diagram edge ({0},{1})")]
    InvalidEdge(usize, usize),
}

/// A validated generalized Cartan matrix.
///
/// Entries satisfy `M[i][i] = 2`, `M[i][j] <= 0` off the diagonal and
/// `M[i][j] = 0` exactly when `M[j][i] = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

/// Checks the three sign conditions and returns the validated matrix.
pub fn validate_gcm(raw: &[Vec<i64>]) -> Result<CartanMatrix, CartanError> {
    CartanMatrix::new(raw)
}

impl CartanMatrix {
    pub fn new(raw: &[Vec<i64>]) -> Result<Self, CartanError> {
        let n = raw.len();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        if raw.iter().any(|r| r.len() != n) {
            return Err(CartanError::NotSquare);
        }
        for (i, row) in raw.iter().enumerate() {
            if row[i] != 2 {
                return Err(CartanError::BadDiagonal(i + 1));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && raw[i][j] > 0 {
                    return Err(CartanError::PositiveOffDiagonal(i + 1, j + 1));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if (raw[i][j] == 0) != (raw[j][i] == 0) {
                    return Err(CartanError::ZeroAsymmetry(i + 1, j + 1));
                }
            }
        }
        Ok(Self {
            n,
            entries: raw.iter().flatten().copied().collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// 0-based entry `M[i][j]`.
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = vec![0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[j * self.n + i] = self.entry(i, j);
            }
        }
        Self { n: self.n, entries }
    }

    /// Simultaneous row/column relabelling: `new[i][j] = old[perm[i]][perm[j]]`
    /// with a 0-based permutation.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut entries = Vec::with_capacity(self.n * self.n);
        for &pi in perm {
            for &pj in perm {
                entries.push(self.entry(pi, pj));
            }
        }
        Self { n: self.n, entries }
    }

    /// Block-diagonal sum, nodes numbered consecutively.
    pub fn direct_sum(blocks: &[CartanMatrix]) -> Result<Self, CartanError> {
        let n: usize = blocks.iter().map(|b| b.n).sum();
        if n == 0 {
            return Err(CartanError::Empty);
        }
        let mut entries = vec![0; n * n];
        let mut offset = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    entries[(offset + i) * n + offset + j] = b.entry(i, j);
                }
            }
            offset += b.n;
        }
        Ok(Self { n, entries })
    }

    /// Principal submatrix on the 1-based node subset, in ascending order.
    pub fn principal_submatrix(&self, nodes: &[usize]) -> Result<Self, CartanError> {
        let nodes = self.check_nodes(nodes)?;
        if nodes.is_empty() {
            return Err(CartanError::EmptySubset);
        }
        let idx: Vec<usize> = nodes.iter().map(|i| i - 1).collect();
        let mut entries = Vec::with_capacity(idx.len() * idx.len());
        for &i in &idx {
            for &j in &idx {
                entries.push(self.entry(i, j));
            }
        }
        Ok(Self {
            n: idx.len(),
            entries,
        })
    }

    /// Sorts, deduplicates and range-checks a 1-based node list.
    pub fn check_nodes(&self, nodes: &[usize]) -> Result<Vec<usize>, CartanError> {
        if let Some(&bad) = nodes.iter().find(|&&i| i == 0 || i > self.n) {
            return Err(CartanError::IndexOutOfRange(bad));
        }
        Ok(normalize_nodes(nodes))
    }

    /// All nodes `{1, ..., n}`.
    pub fn nodes(&self) -> Vec<usize> {
        (1..=self.n).collect()
    }

    /// Nodes adjacent to the 1-based node `i`.
    pub fn adjacent(&self, i: usize) -> Vec<usize> {
        (1..=self.n)
            .filter(|&j| j != i && self.entry(i - 1, j - 1) != 0)
            .collect()
    }

    /// Connected components of the zero pattern, each ascending, listed by
    /// smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.n, |i, j| self.entry(i, j) != 0)
    }

    /// Components of the subgraph induced on the given 1-based nodes.
    pub fn components_within(&self, nodes: &[usize]) -> Vec<Vec<usize>> {
        let nodes = normalize_nodes(nodes);
        components_of(nodes.len(), |a, b| {
            self.entry(nodes[a] - 1, nodes[b] - 1) != 0
        })
        .into_iter()
        .map(|c| c.into_iter().map(|k| nodes[k - 1]).collect())
        .collect()
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.entry(i, j) * self.entry(j, i) <= 1))
    }

    pub fn to_diagram(&self) -> Result<DynkinDiagram, CartanError> {
        to_diagram(self)
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (r, row) in self.entries.chunks(self.n).enumerate() {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn components_of(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start + 1];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if !seen[v] && v != u && adjacent(u, v) {
                    seen[v] = true;
                    comp.push(v + 1);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A (possibly multiple) edge of a Dynkin diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub multiplicity: u8,
    /// 1-based node the arrow points to; `None` for simple edges.
    pub head: Option<usize>,
}

/// Dynkin diagram on nodes `{1, ..., n}`; edges keyed by `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    n: usize,
    edges: BTreeMap<(usize, usize), Edge>,
}

impl DynkinDiagram {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = ((usize, usize), Edge)>,
    ) -> Result<Self, CartanError> {
        if n == 0 {
            return Err(CartanError::Empty);
        }
        let mut map = BTreeMap::new();
        for ((a, b), e) in edges {
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i == 0 || j > n || i == j {
                return Err(CartanError::InvalidEdge(a, b));
            }
            let arrow_ok = match e.multiplicity {
                1 => e.head.is_none(),
                2 | 3 => matches!(e.head, Some(h) if h == i || h == j),
                _ => false,
            };
            if !arrow_ok || map.insert((i, j), e).is_some() {
                return Err(CartanError::InvalidEdge(a, b));
            }
        }
        Ok(Self { n, edges: map })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), Edge)> + '_ {
        self.edges.iter().map(|(&k, &e)| (k, e))
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<Edge> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.edges.get(&key).copied()
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| match () {
                _ if a == i => Some(b),
                _ if b == i => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }
}

pub fn to_diagram(m: &CartanMatrix) -> Result<DynkinDiagram, CartanError> {
    let mut edges = BTreeMap::new();
    for i in 0..m.n {
        for j in i + 1..m.n {
            let (a, b) = (m.entry(i, j), m.entry(j, i));
            let product = a * b;
            if product == 0 {
                continue;
            }
            if product > 3 {
                return Err(CartanError::MultiplicityOverflow(i + 1, j + 1, product));
            }
            let head = match a.cmp(&b) {
                core::cmp::Ordering::Greater => Some(i + 1),
                core::cmp::Ordering::Less => Some(j + 1),
                core::cmp::Ordering::Equal => None,
            };
            edges.insert(
                (i + 1, j + 1),
                Edge {
                    multiplicity: product as u8,
                    head,
                },
            );
        }
    }
    Ok(DynkinDiagram { n: m.n, edges })
}

pub fn from_diagram(d: &DynkinDiagram) -> CartanMatrix {
    let n = d.n;
    let mut entries = vec![0i64; n * n];
    for i in 0..n {
        entries[i * n + i] = 2;
    }
    for (&(i, j), e) in &d.edges {
        let m = i64::from(e.multiplicity);
        let (head, tail) = match e.head {
            Some(h) if h == j => (j, i),
            _ => (i, j),
        };
        // the arrowhead endpoint carries the -1
        entries[(head - 1) * n + tail - 1] = -1;
        entries[(tail - 1) * n + head - 1] = -m;
    }
    CartanMatrix { n, entries }
}

pub fn principal_submatrix(m: &CartanMatrix, nodes: &[usize]) -> Result<CartanMatrix, CartanError> {
    m.principal_submatrix(nodes)
}

pub fn connected_components(d: &DynkinDiagram) -> Vec<Vec<usize>> {
    components_of(d.n, |i, j| d.edge(i + 1, j + 1).is_some())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn from_letter(c: char) -> Option<Self> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn is_legal_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B => n >= 2,
            Family::C => n >= 3,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A connected finite Dynkin type such as `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, CartanError> {
        if family.is_legal_rank(rank) {
            Ok(Self { family, rank })
        } else {
            Err(CartanError::IllegalType(family, rank))
        }
    }

    pub fn cartan_matrix(self) -> CartanMatrix {
        build_catalog(self.family, self.rank)
    }

    /// Every legal type of the given rank.
    pub fn of_rank(rank: usize) -> impl Iterator<Item = CartanType> {
        Family::ALL
            .into_iter()
            .filter(move |f| f.is_legal_rank(rank))
            .map(move |family| CartanType { family, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// The fixed catalog matrix for a finite type.
///
/// Orientation: `A_n` is the path `1-2-...-n`; `B_n` has its double edge on
/// `{n-1, n}` with `(n-1, n) = -1`, `(n, n-1) = -2`; `C_n` is the transpose
/// of `B_n`; `D_n` forks at `n-2`; `E_n` uses the chain `1-3-4-5-...-n`
/// with node 2 attached to 4; `F_4` is `1-2=3-4` with `(2,3) = -2`,
/// `(3,2) = -1` (arrow on node 3); `G_2` is `[[2,-1],[-3,2]]`.
pub fn catalog(family: Family, n: usize) -> Result<CartanMatrix, CartanError> {
    CartanType::new(family, n).map(CartanType::cartan_matrix)
}

fn build_catalog(family: Family, n: usize) -> CartanMatrix {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize, ab: i64, ba: i64| {
        m[a - 1][b - 1] = ab;
        m[b - 1][a - 1] = ba;
    };
    match family {
        Family::A => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B | Family::C => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            if family == Family::B {
                link(n - 1, n, -1, -2);
            } else {
                link(n - 1, n, -2, -1);
            }
        }
        Family::D => {
            (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n, -1, -1);
        }
        Family::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            (3..n).for_each(|i| link(i, i + 1, -1, -1));
        }
        Family::F => {
            link(1, 2, -1, -1);
            link(2, 3, -2, -1);
            link(3, 4, -1, -1);
        }
        Family::G => link(1, 2, -1, -3),
    }
    CartanMatrix::new(&m).expect("catalog matrices are valid")
}

/// Finite / affine / indefinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Finite,
    Affine,
    Indefinite,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Finite => "Finite",
            Kind::Affine => "Affine",
            Kind::Indefinite => "Indefinite",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// 1-based nodes of the component, ascending.
    pub nodes: Vec<usize>,
    pub kind: Kind,
    /// Catalog type, present exactly for finite components.
    pub cartan_type: Option<CartanType>,
    /// Coprime positive kernel vector, present exactly for affine components.
    pub kernel: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub kind: Kind,
    pub components: Vec<Component>,
    /// For affine verdicts: the affine components' kernels, zero on finite
    /// components, scaled to coprime integers. `M v = 0` holds.
    pub affine_kernel: Option<Vec<i64>>,
}

/// Classifies a validated matrix component by component.
///
/// Finiteness is decided twice, by positive-definiteness of the
/// symmetrization and by catalog isomorphism; the two must agree.
pub fn classify(m: &CartanMatrix) -> ClassificationVerdict {
    let components: Vec<Component> = m
        .components()
        .into_iter()
        .map(|nodes| {
            let sub = m
                .principal_submatrix(&nodes)
                .expect("component nodes are in range");
            classify_connected(&sub, nodes)
        })
        .collect();
    let kind = if components.iter().all(|c| c.kind == Kind::Finite) {
        Kind::Finite
    } else if components.iter().all(|c| c.kind != Kind::Indefinite) {
        Kind::Affine
    } else {
        Kind::Indefinite
    };
    let affine_kernel = (kind == Kind::Affine).then(|| {
        let mut v = vec![rat(0); m.rank()];
        for c in &components {
            if let Some(k) = &c.kernel {
                for (&node, &x) in c.nodes.iter().zip(k) {
                    v[node - 1] = rat(x);
                }
            }
        }
        linalg::primitive_integer_vector(&v)
            .into_iter()
            .map(|x| x.to_i64().expect("affine kernel entries are small"))
            .collect()
    });
    ClassificationVerdict {
        kind,
        components,
        affine_kernel,
    }
}

fn classify_connected(sub: &CartanMatrix, nodes: Vec<usize>) -> Component {
    let definite = is_positive_definite_symmetrizable(sub);
    let cartan_type = match_catalog(sub);
    assert_eq!(
        definite,
        cartan_type.is_some(),
        "finiteness tests disagree on {sub}: definiteness={definite}, catalog={cartan_type:?}"
    );
    if definite {
        return Component {
            nodes,
            kind: Kind::Finite,
            cartan_type,
            kernel: None,
        };
    }
    let kernel = affine_kernel(sub);
    Component {
        nodes,
        kind: if kernel.is_some() {
            Kind::Affine
        } else {
            Kind::Indefinite
        },
        cartan_type: None,
        kernel,
    }
}

/// Positive column scaling `e` with `M diag(e)` symmetric, if one exists.
/// Assumes `m` is connected.
pub fn symmetrizer(m: &CartanMatrix) -> Option<Vec<Rational>> {
    let n = m.rank();
    let mut e: Vec<Option<Rational>> = vec![None; n];
    e[0] = Some(rat(1));
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let ei = e[i].clone().expect("visited");
        for j in 0..n {
            if i == j || m.entry(i, j) == 0 {
                continue;
            }
            // M[i][j] e_j = M[j][i] e_i
            let ej = &ei * rat(m.entry(j, i)) / rat(m.entry(i, j));
            match &e[j] {
                Some(existing) if *existing != ej => return None,
                Some(_) => {}
                None => {
                    e[j] = Some(ej);
                    queue.push_back(j);
                }
            }
        }
    }
    e.into_iter().collect()
}

fn is_positive_definite_symmetrizable(m: &CartanMatrix) -> bool {
    let Some(e) = symmetrizer(m) else {
        return false;
    };
    let n = m.rank();
    let sym: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| rat(m.entry(i, j)) * &e[j]).collect())
        .collect();
    linalg::leading_minors(&sym).iter().all(Signed::is_positive)
}

/// Coprime positive kernel vector when the kernel is one-dimensional and
/// spanned by a strictly positive vector.
fn affine_kernel(m: &CartanMatrix) -> Option<Vec<i64>> {
    let q = linalg::to_rational(&m.rows());
    let basis = linalg::kernel(&q);
    if basis.len() != 1 {
        return None;
    }
    let mut v = basis.into_iter().next().expect("one basis vector");
    if v.iter().all(Signed::is_negative) {
        v = v.into_iter().map(|x| -x).collect();
    }
    if !linalg::is_strictly_positive(&v) {
        return None;
    }
    Some(
        linalg::primitive_integer_vector(&v)
            .into_iter()
            .map(|x| x.to_i64().expect("affine kernel entries are small"))
            .collect(),
    )
}

/// Catalog type isomorphic to a connected matrix, if any.
pub fn match_catalog(m: &CartanMatrix) -> Option<CartanType> {
    CartanType::of_rank(m.rank()).find(|t| find_isomorphism(m, &t.cartan_matrix()).is_some())
}

fn signature(m: &CartanMatrix, i: usize) -> Vec<(i64, i64)> {
    let mut s: Vec<(i64, i64)> = (0..m.rank())
        .filter(|&j| j != i && m.entry(i, j) != 0)
        .map(|j| (m.entry(i, j), m.entry(j, i)))
        .collect();
    s.sort_unstable();
    s
}

/// 0-based map `p` from nodes of `b` to nodes of `a` with
/// `a[p[i]][p[j]] = b[i][j]`, i.e. `a.permuted(p) == b`.
pub fn find_isomorphism(a: &CartanMatrix, b: &CartanMatrix) -> Option<Vec<usize>> {
    let n = a.rank();
    if n != b.rank() {
        return None;
    }
    let sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    // assign b-nodes in an order where each one touches an earlier one
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for root in 0..n {
        if placed[root] {
            continue;
        }
        placed[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for v in 0..n {
                if !placed[v] && b.entry(u, v) != 0 {
                    placed[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        order: &[usize],
        a: &CartanMatrix,
        b: &CartanMatrix,
        sig_a: &[Vec<(i64, i64)>],
        sig_b: &[Vec<(i64, i64)>],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&bi) = order.get(depth) else {
            return true;
        };
        for ai in 0..a.rank() {
            if used[ai] || sig_a[ai] != sig_b[bi] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&bj| {
                let aj = map[bj];
                a.entry(ai, aj) == b.entry(bi, bj) && a.entry(aj, ai) == b.entry(bj, bi)
            });
            if !consistent {
                continue;
            }
            map[bi] = ai;
            used[ai] = true;
            if extend(depth + 1, order, a, b, sig_a, sig_b, map, used) {
                return true;
            }
            used[ai] = false;
        }
        false
    }
    extend(0, &order, a, b, &sig_a, &sig_b, &mut map, &mut used).then_some(map)
}
