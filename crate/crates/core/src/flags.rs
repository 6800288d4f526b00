//! Marked Dynkin diagrams: fibers of contractions, neighbours, exposed short
//! nodes, the one-step extension `I -> I ∪ N(i)` and induction sequences.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::cartan::{CartanError, CartanMatrix, CartanType, Family};
use crate::normalize_nodes;
use crate::rootsys::WeightVector;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FlagError {
    #[error("marking {inner:?} is not contained in {outer:?}")]
    NotNested {
        inner: Vec<usize>,
        outer: Vec<usize>,
    },
    #[error("residual marking is empty")]
    EmptyResidualMarking,
    #[error("node {0} is not marked")]
    NodeNotMarked(usize),
    #[error("marking is empty")]
    EmptyMarking,
    #[error("no valid induction sequence from {0:?}")]
    NoValidSequence(Vec<usize>),
    #[error(transparent)]
    Cartan(#[from] CartanError),
}

/// A finite Cartan matrix with a nonempty set of marked nodes.
///
/// `labels[k]` is the node of the ambient diagram that node `k + 1` of
/// `matrix` came from; for a diagram that was not cut out of a larger one
/// it is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDiagram {
    pub matrix: CartanMatrix,
    pub marked: Vec<usize>,
    pub labels: Vec<usize>,
}

impl MarkedDiagram {
    pub fn new(matrix: CartanMatrix, marked: &[usize]) -> Result<Self, FlagError> {
        let marked = matrix.check_nodes(marked)?;
        if marked.is_empty() {
            return Err(FlagError::EmptyMarking);
        }
        let labels = matrix.nodes();
        Ok(Self {
            matrix,
            marked,
            labels,
        })
    }

    /// Weight `sum_{i in I} lambda_i` of the minimal homogeneous embedding.
    pub fn minimal_ample_weight(&self) -> WeightVector {
        let mut w = vec![0; self.matrix.rank()];
        for &i in &self.marked {
            w[i - 1] = 1;
        }
        WeightVector(w)
    }
}

pub fn minimal_ample_weight(md: &MarkedDiagram) -> WeightVector {
    md.minimal_ample_weight()
}

/// Fiber of `F(J) -> F(I)`: drop the nodes of `I`, mark `J \ I`.
/// `I = ∅` is the full diagram marked by `J`.
pub fn fiber_diagram(
    m: &CartanMatrix,
    j: &[usize],
    i: &[usize],
) -> Result<MarkedDiagram, FlagError> {
    let j = m.check_nodes(j)?;
    let i = m.check_nodes(i)?;
    if !i.iter().all(|x| j.contains(x)) {
        return Err(FlagError::NotNested { inner: i, outer: j });
    }
    let residual: Vec<usize> = j.iter().copied().filter(|x| !i.contains(x)).collect();
    if residual.is_empty() {
        return Err(FlagError::EmptyResidualMarking);
    }
    let kept: Vec<usize> = m.nodes().into_iter().filter(|x| !i.contains(x)).collect();
    let matrix = m.principal_submatrix(&kept)?;
    let marked = residual
        .iter()
        .map(|r| {
            kept.iter()
                .position(|k| k == r)
                .expect("residual node is kept")
                + 1
        })
        .collect();
    Ok(MarkedDiagram {
        matrix,
        marked,
        labels: kept,
    })
}

pub fn neighbors(m: &CartanMatrix, i: usize) -> Result<Vec<usize>, FlagError> {
    if i == 0 || i > m.rank() {
        return Err(CartanError::IndexOutOfRange(i).into());
    }
    Ok(m.adjacent(i))
}

/// Whether `i` is an exposed short node for `I`.
///
/// Looks at the component of `i` in the subdiagram on `D \ (I \ {i})`. An
/// arrow on the edge `{a, b}` with head `b` points towards `i` when `b` is
/// strictly closer to `i` than `a` in that component; an arrow whose head is
/// `i` itself always does.
pub fn is_exposed_short(m: &CartanMatrix, marked: &[usize], i: usize) -> Result<bool, FlagError> {
    let marked = m.check_nodes(marked)?;
    if !marked.contains(&i) {
        return Err(FlagError::NodeNotMarked(i));
    }
    let support: Vec<usize> = m
        .nodes()
        .into_iter()
        .filter(|x| *x == i || !marked.contains(x))
        .collect();
    let dist = distances_within(m, &support, i);
    for (a, &da) in dist.iter().enumerate() {
        let Some(da) = da else { continue };
        for (b, &db) in dist.iter().enumerate() {
            let Some(db) = db else { continue };
            let (mab, mba) = (m.entry(a, b), m.entry(b, a));
            // arrowhead on a when M[a][b] > M[b][a]
            if a != b && mab * mba >= 2 && mab > mba && da < db {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Graph distances from `from` inside the subgraph on `support`, 0-based
/// by node; `None` outside the component.
fn distances_within(m: &CartanMatrix, support: &[usize], from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; m.rank()];
    dist[from - 1] = Some(0);
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u - 1].expect("queued nodes have distances");
        for v in m.adjacent(u) {
            if support.contains(&v) && dist[v - 1].is_none() {
                dist[v - 1] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Hypotheses of the one-step extension that can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepFailure {
    ExposedShortNode,
    /// `|I'| != |I| + 1`.
    NotOneNewNode,
    /// `|I'| < 3`.
    TooSmall,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneStep {
    /// `I' = I ∪ N(i)`.
    pub extended: Vec<usize>,
    /// `J' = (I \ {i}) ∪ N(i)`.
    pub extended_base: Vec<usize>,
    pub failures: Vec<StepFailure>,
}

impl OneStep {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn onestep_extend(m: &CartanMatrix, marked: &[usize], i: usize) -> Result<OneStep, FlagError> {
    let marked = m.check_nodes(marked)?;
    if !marked.contains(&i) {
        return Err(FlagError::NodeNotMarked(i));
    }
    let nbrs = m.adjacent(i);
    let mut extended = marked.clone();
    extended.extend(&nbrs);
    let extended = normalize_nodes(&extended);
    let mut extended_base: Vec<usize> = marked.iter().copied().filter(|&x| x != i).collect();
    extended_base.extend(&nbrs);
    let extended_base = normalize_nodes(&extended_base);

    let mut failures = Vec::new();
    if is_exposed_short(m, &marked, i)? {
        failures.push(StepFailure::ExposedShortNode);
    }
    if extended.len() != marked.len() + 1 {
        failures.push(StepFailure::NotOneNewNode);
    }
    if extended.len() < 3 {
        failures.push(StepFailure::TooSmall);
    }
    Ok(OneStep {
        extended,
        extended_base,
        failures,
    })
}

/// One pair `(I_k, i_k)` of an induction sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionStep {
    pub marked: Vec<usize>,
    pub node: usize,
}

/// Starting marking for a connected type, numbered as in the catalog.
pub fn induction_start(t: CartanType) -> Vec<usize> {
    let n = t.rank;
    match t.family {
        Family::A | Family::B | Family::C | Family::D => normalize_nodes(&[1, n]),
        Family::E => vec![2, n],
        Family::F => vec![1, 2],
        Family::G => vec![1, 2],
    }
}

pub fn induction_sequence(family: Family, n: usize) -> Result<Vec<InductionStep>, FlagError> {
    let t = CartanType::new(family, n)?;
    induction_sequence_from(&t.cartan_matrix(), &induction_start(t))
}

/// Searches for a sequence `(I_1, i_1), ..., (I_r, i_r)` with `I_1 = start`,
/// `I_{k+1} = I_k ∪ N(i_k) = I_k ∪ {i_{k+1}}`, each transition passing
/// [`onestep_extend`], and `I_r = D`.
///
/// After the first choice of `i_1` the sequence is forced, so the search
/// tries `i_1` in ascending order.
pub fn induction_sequence_from(
    m: &CartanMatrix,
    start: &[usize],
) -> Result<Vec<InductionStep>, FlagError> {
    let start = m.check_nodes(start)?;
    if start.is_empty() {
        return Err(FlagError::EmptyMarking);
    }
    let all = m.nodes();
    if start == all {
        return Ok(vec![InductionStep {
            marked: start.clone(),
            node: start[0],
        }]);
    }
    'first: for &first in &start {
        let mut seq = vec![InductionStep {
            marked: start.clone(),
            node: first,
        }];
        loop {
            let last = seq.last().expect("sequence is nonempty");
            if last.marked == all {
                return Ok(seq);
            }
            let step = onestep_extend(m, &last.marked, last.node)?;
            if !step.is_valid() {
                continue 'first;
            }
            let node = *step
                .extended
                .iter()
                .find(|x| !last.marked.contains(x))
                .expect("valid step adds one node");
            seq.push(InductionStep {
                marked: step.extended,
                node,
            });
        }
    }
    Err(FlagError::NoValidSequence(start))
}

/// Checks the sequence conditions step by step; `Err` names the first
/// violated condition.
pub fn check_induction_sequence(
    m: &CartanMatrix,
    start: &[usize],
    seq: &[InductionStep],
) -> Result<(), &'static str> {
    let first = seq.first().ok_or("empty sequence")?;
    if first.marked != normalize_nodes(start) {
        return Err("sequence does not begin at the start set");
    }
    for s in seq {
        if !s.marked.contains(&s.node) {
            return Err("node not in its marking");
        }
    }
    for pair in seq.windows(2) {
        let (cur, next) = (&pair[0], &pair[1]);
        let step = onestep_extend(m, &cur.marked, cur.node).map_err(|_| "invalid step")?;
        if !step.is_valid() {
            return Err("onestep hypotheses fail");
        }
        let mut with_next = cur.marked.clone();
        with_next.push(next.node);
        if normalize_nodes(&with_next) != next.marked || next.marked.len() != cur.marked.len() + 1 {
            return Err("I_{k+1} != I_k ∪ {i_{k+1}}");
        }
        if step.extended != next.marked {
            return Err("I_{k+1} != I_k ∪ N(i_k)");
        }
    }
    if seq.last().map(|s| &s.marked) != Some(&m.nodes()) {
        return Err("sequence does not end at D");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::catalog;

    fn a(n: usize) -> CartanMatrix {
        catalog(Family::A, n).unwrap()
    }

    fn b2() -> CartanMatrix {
        catalog(Family::B, 2).unwrap()
    }

    #[test]
    fn fiber_examples() {
        let f = fiber_diagram(&a(3), &[1, 2, 3], &[1, 3]).unwrap();
        assert_eq!(f.matrix, a(1));
        assert_eq!(f.marked, vec![1]);
        assert_eq!(f.labels, vec![2]);

        let f = fiber_diagram(&a(3), &[1, 3], &[1]).unwrap();
        assert_eq!(f.matrix, a(2));
        assert_eq!(f.labels, vec![2, 3]);
        assert_eq!(f.marked, vec![2]);

        let full = fiber_diagram(&a(3), &[1, 2, 3], &[]).unwrap();
        assert_eq!(full.matrix, a(3));
        assert_eq!(full.marked, vec![1, 2, 3]);
    }

    #[test]
    fn fiber_errors() {
        assert!(matches!(
            fiber_diagram(&a(3), &[1], &[2]),
            Err(FlagError::NotNested { .. })
        ));
        assert_eq!(
            fiber_diagram(&a(3), &[1, 2], &[1, 2]),
            Err(FlagError::EmptyResidualMarking)
        );
    }

    #[test]
    fn neighbor_examples() {
        assert_eq!(neighbors(&a(4), 2), Ok(vec![1, 3]));
        assert_eq!(neighbors(&a(4), 1), Ok(vec![2]));
        let iso = CartanMatrix::new(&[vec![2, 0], vec![0, 2]]).unwrap();
        assert_eq!(neighbors(&iso, 1), Ok(vec![]));
        assert!(neighbors(&a(4), 5).is_err());
    }

    #[test]
    fn exposed_examples() {
        assert_eq!(is_exposed_short(&b2(), &[1], 1), Ok(true));
        assert_eq!(is_exposed_short(&b2(), &[2], 2), Ok(false));
        assert_eq!(is_exposed_short(&a(4), &[1, 3], 3), Ok(false));
        assert_eq!(
            is_exposed_short(&b2(), &[2], 1),
            Err(FlagError::NodeNotMarked(1))
        );
    }

    #[test]
    fn exposed_through_a_path() {
        // B3 here: 1 - 2 => arrow on 2 (entries (2,3) = -1, (3,2) = -2)
        let b3 = catalog(Family::B, 3).unwrap();
        // head 2 is closer to 1 than tail 3
        assert_eq!(is_exposed_short(&b3, &[1], 1), Ok(true));
        // head 2 is farther from 3 than tail 3 is
        assert_eq!(is_exposed_short(&b3, &[3], 3), Ok(false));
        // marking 2 cuts node 3 off from 1
        assert_eq!(is_exposed_short(&b3, &[1, 2], 1), Ok(false));
        let c3 = catalog(Family::C, 3).unwrap();
        assert_eq!(is_exposed_short(&c3, &[1], 1), Ok(false));
        assert_eq!(is_exposed_short(&c3, &[3], 3), Ok(true));
    }

    #[test]
    fn onestep_examples() {
        let s = onestep_extend(&a(4), &[1, 4], 1).unwrap();
        assert_eq!(s.extended, vec![1, 2, 4]);
        assert_eq!(s.extended_base, vec![2, 4]);
        assert!(s.is_valid());

        let s = onestep_extend(&a(4), &[2], 2).unwrap();
        assert_eq!(s.extended, vec![1, 2, 3]);
        assert_eq!(s.failures, vec![StepFailure::NotOneNewNode]);

        let s = onestep_extend(&b2(), &[1, 2], 1).unwrap();
        assert_eq!(s.extended, vec![1, 2]);
        assert!(s.failures.contains(&StepFailure::NotOneNewNode));
        assert!(s.failures.contains(&StepFailure::TooSmall));
        assert!(!s.is_valid());
    }

    #[test]
    fn induction_examples() {
        let step = |marked: &[usize], node| InductionStep {
            marked: marked.to_vec(),
            node,
        };
        assert_eq!(
            induction_sequence(Family::A, 4).unwrap(),
            vec![
                step(&[1, 4], 1),
                step(&[1, 2, 4], 2),
                step(&[1, 2, 3, 4], 3)
            ]
        );
        assert_eq!(
            induction_sequence(Family::A, 3).unwrap(),
            vec![step(&[1, 3], 1), step(&[1, 2, 3], 2)]
        );
        let d4 = induction_sequence(Family::D, 4).unwrap();
        assert_eq!(d4.first().unwrap().marked, vec![1, 4]);
        assert_eq!(d4.last().unwrap().marked, vec![1, 2, 3, 4]);
        check_induction_sequence(&catalog(Family::D, 4).unwrap(), &[1, 4], &d4).unwrap();
    }

    #[test]
    fn induction_for_exceptional_types() {
        for (f, n) in [
            (Family::E, 6),
            (Family::E, 7),
            (Family::E, 8),
            (Family::F, 4),
        ] {
            let t = CartanType::new(f, n).unwrap();
            let seq = induction_sequence(f, n).unwrap();
            check_induction_sequence(&t.cartan_matrix(), &induction_start(t), &seq).unwrap();
        }
    }

    #[test]
    fn rank_two_sequences_are_trivial() {
        for (f, n) in [
            (Family::A, 2),
            (Family::B, 2),
            (Family::G, 2),
            (Family::A, 1),
        ] {
            let seq = induction_sequence(f, n).unwrap();
            assert_eq!(seq.len(), 1);
            assert_eq!(seq[0].marked, (1..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn failing_start_reports_no_sequence() {
        // arrow on node 2 makes it exposed from {1, 2}
        let f4_other = catalog(Family::F, 4).unwrap().transpose();
        assert_eq!(
            induction_sequence_from(&f4_other, &[1, 2]),
            Err(FlagError::NoValidSequence(vec![1, 2]))
        );
    }

    #[test]
    fn weights() {
        let md = MarkedDiagram::new(a(3), &[1, 3]).unwrap();
        assert_eq!(md.minimal_ample_weight().0, vec![1, 0, 1]);
        let md = MarkedDiagram::new(a(2), &[1, 2]).unwrap();
        assert_eq!(minimal_ample_weight(&md).0, vec![1, 1]);
        let md = MarkedDiagram::new(a(4), &[2]).unwrap();
        assert_eq!(md.minimal_ample_weight().0, vec![0, 1, 0, 0]);
        assert_eq!(MarkedDiagram::new(a(4), &[]), Err(FlagError::EmptyMarking));
    }
}
