//! Verification of candidate intersection matrices `(-K_i . Gamma_j)`.
//!
//! [`ingest`] applies the rank-two constraints (sign pattern plus
//! `m_ij m_ji ∈ {1, 2, 3}` for nonzero pairs); [`verdict`] classifies and
//! states whether the result is compatible with a finite diagram.

use alloc::vec::Vec;

use crate::cartan::{classify, CartanError, CartanMatrix, CartanType, ClassificationVerdict, Kind};
use crate::rootsys::RootSystem;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FtError {
    #[error(transparent)]
    Invalid(#[from] CartanError),
    #[error(
        "product m_ij*m_ji = {2} at ({0},{1}) is not 1, 2 or 3; no rank-two contraction realizes it"
    )]
    ProductOutOfRange(usize, usize, i64),
    #[error("matrix is not of finite type")]
    NotFinite,
}

/// Raw intersection numbers; row `i`, column `j` holds `-K_i . Gamma_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionData(pub Vec<Vec<i64>>);

pub fn ingest(raw: &IntersectionData) -> Result<CartanMatrix, FtError> {
    let m = CartanMatrix::new(&raw.0)?;
    let n = m.rank();
    for i in 0..n {
        for j in i + 1..n {
            let p = m.entry(i, j) * m.entry(j, i);
            if p != 0 && !(1..=3).contains(&p) {
                return Err(FtError::ProductOutOfRange(i + 1, j + 1, p));
            }
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    Consistent,
    ContradictsFiniteness,
}

/// Smallest connected principal configuration that is not finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub nodes: Vec<usize>,
    pub kind: Kind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FtReport {
    pub verdict: ClassificationVerdict,
    /// `dim G/B`, present exactly for finite verdicts.
    pub dimension_bound: Option<usize>,
    /// Positive integer kernel vector, present exactly for affine verdicts.
    pub affine_witness: Option<Vec<i64>>,
    /// Connected components (product factors), 1-based.
    pub product_factors: Vec<Vec<usize>>,
    pub consistency: Consistency,
    pub violation: Option<Violation>,
}

/// Subsets are searched for a minimal violation only up to this rank.
pub const VIOLATION_SEARCH_RANK: usize = 16;

pub fn verdict(m: &CartanMatrix) -> FtReport {
    let verdict = classify(m);
    let product_factors = m.components();
    let (dimension_bound, affine_witness, consistency, violation) = match verdict.kind {
        Kind::Finite => {
            let roots = RootSystem::new(m).expect("finite verdicts have root systems");
            (Some(roots.len()), None, Consistency::Consistent, None)
        }
        Kind::Affine => (
            None,
            verdict.affine_kernel.clone(),
            Consistency::ContradictsFiniteness,
            minimal_violation(m),
        ),
        Kind::Indefinite => (
            None,
            None,
            Consistency::ContradictsFiniteness,
            minimal_violation(m),
        ),
    };
    FtReport {
        verdict,
        dimension_bound,
        affine_witness,
        product_factors,
        consistency,
        violation,
    }
}

/// Smallest connected node subset (ties broken lexicographically) whose
/// principal submatrix is not finite.
pub fn minimal_violation(m: &CartanMatrix) -> Option<Violation> {
    let n = m.rank();
    if n > VIOLATION_SEARCH_RANK {
        return None;
    }
    let mut subsets: Vec<Vec<usize>> = (1u32..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets.into_iter().find_map(|nodes| {
        if m.components_within(&nodes).len() != 1 {
            return None;
        }
        let sub = m.principal_submatrix(&nodes).expect("nodes in range");
        let kind = classify(&sub).kind;
        (kind != Kind::Finite).then_some(Violation { nodes, kind })
    })
}

/// Components of a finite matrix with their catalog types.
pub fn decompose_product(m: &CartanMatrix) -> Result<Vec<(Vec<usize>, CartanType)>, FtError> {
    let v = classify(m);
    if v.kind != Kind::Finite {
        return Err(FtError::NotFinite);
    }
    Ok(v.components
        .into_iter()
        .map(|c| {
            (
                c.nodes,
                c.cartan_type.expect("finite components carry a type"),
            )
        })
        .collect())
}

/// `dim G/B` of each factor, in component order.
pub fn component_dimensions(m: &CartanMatrix) -> Result<Vec<usize>, FtError> {
    decompose_product(m)?
        .into_iter()
        .map(|(nodes, _)| {
            let sub = m.principal_submatrix(&nodes)?;
            RootSystem::new(&sub)
                .map(|r| r.len())
                .map_err(|_| FtError::NotFinite)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{catalog, Family};
    use alloc::vec;

    fn data(rows: &[&[i64]]) -> IntersectionData {
        IntersectionData(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn ingest_examples() {
        assert!(ingest(&data(&[&[2, -1], &[-2, 2]])).is_ok());
        assert_eq!(
            ingest(&data(&[&[2, -2], &[-2, 2]])),
            Err(FtError::ProductOutOfRange(1, 2, 4))
        );
        assert!(ingest(&data(&[&[2, -1], &[-1, 2]])).is_ok());
        assert_eq!(
            ingest(&data(&[&[2, -1], &[0, 2]])),
            Err(FtError::Invalid(CartanError::ZeroAsymmetry(1, 2)))
        );
    }

    #[test]
    fn verdict_examples() {
        let r = verdict(&catalog(Family::A, 3).unwrap());
        assert_eq!(r.verdict.kind, Kind::Finite);
        assert_eq!(r.dimension_bound, Some(6));
        assert_eq!(r.consistency, Consistency::Consistent);
        assert_eq!(r.affine_witness, None);

        let cycle = ingest(&data(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]])).unwrap();
        let r = verdict(&cycle);
        assert_eq!(r.verdict.kind, Kind::Affine);
        assert_eq!(r.affine_witness, Some(vec![1, 1, 1]));
        assert_eq!(r.consistency, Consistency::ContradictsFiniteness);
        assert_eq!(r.dimension_bound, None);

        let ind = ingest(&data(&[&[2, -1, -1], &[-1, 2, -2], &[-1, -1, 2]])).unwrap();
        let r = verdict(&ind);
        assert_eq!(r.verdict.kind, Kind::Indefinite);
        assert_eq!(r.consistency, Consistency::ContradictsFiniteness);
        assert_eq!(
            r.violation,
            Some(Violation {
                nodes: vec![1, 2, 3],
                kind: Kind::Indefinite
            })
        );
    }

    #[test]
    fn violation_is_minimal() {
        // affine A2~ cycle on {1,2,3} plus a pendant node 4
        let m = CartanMatrix::new(&[
            vec![2, -1, -1, 0],
            vec![-1, 2, -1, 0],
            vec![-1, -1, 2, -1],
            vec![0, 0, -1, 2],
        ])
        .unwrap();
        let r = verdict(&m);
        assert_eq!(r.verdict.kind, Kind::Indefinite);
        assert_eq!(
            r.violation,
            Some(Violation {
                nodes: vec![1, 2, 3],
                kind: Kind::Affine
            })
        );
    }

    #[test]
    fn decompose_examples() {
        let iso = CartanMatrix::new(&[vec![2, 0], vec![0, 2]]).unwrap();
        let a1 = CartanType::new(Family::A, 1).unwrap();
        assert_eq!(
            decompose_product(&iso).unwrap(),
            vec![(vec![1], a1), (vec![2], a1)]
        );
        let a2a1 = CartanMatrix::direct_sum(&[
            catalog(Family::A, 2).unwrap(),
            catalog(Family::A, 1).unwrap(),
        ])
        .unwrap();
        assert_eq!(
            decompose_product(&a2a1).unwrap(),
            vec![
                (vec![1, 2], CartanType::new(Family::A, 2).unwrap()),
                (vec![3], a1)
            ]
        );
        assert_eq!(
            decompose_product(&catalog(Family::G, 2).unwrap()).unwrap(),
            vec![(vec![1, 2], CartanType::new(Family::G, 2).unwrap())]
        );
        let cycle =
            CartanMatrix::new(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap();
        assert_eq!(decompose_product(&cycle), Err(FtError::NotFinite));
    }

    #[test]
    fn dimension_bound_is_additive() {
        let m = CartanMatrix::direct_sum(&[
            catalog(Family::B, 3).unwrap(),
            catalog(Family::G, 2).unwrap(),
            catalog(Family::A, 1).unwrap(),
        ])
        .unwrap();
        let dims = component_dimensions(&m).unwrap();
        assert_eq!(dims, vec![9, 6, 1]);
        assert_eq!(verdict(&m).dimension_bound, Some(16));
    }
}
