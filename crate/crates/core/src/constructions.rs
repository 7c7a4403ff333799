//! Closed-form witness families on the cylinder and prism graphs, generated
//! in global indices. Every generator pins its anchor in layer V_k to the
//! unique compatible vertex x_{(k-1)n + anchor}; each family carries the list
//! of properties claimed for it so callers (and the test suites) can check
//! the claims against the predicates instead of trusting the formulas.
//!
//! Naming: M/N are the two-element resolving pairs on odd-n cylinders, A/B
//! extend them to doubly resolving triples, A1/B1 are their copy-1 embeddings
//! into the prism, C/D add the copy-2/copy-m twin of the anchor, the E series
//! is the even-n counterpart, and T is the 2n-vertex strong resolving set
//! taking layer V_1 of the first and last copies.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, LabeledGraph, VertexId};
use crate::products::{explicit_cylinder, explicit_prism};
use crate::resolving::{
    is_doubly_resolving, is_resolving, is_strong_resolving, representation, VertexSet,
};

/// Catalog of generated families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    M,
    N,
    A,
    B,
    A1,
    B1,
    C,
    D,
    E1,
    E2,
    E3,
    E31,
    E4,
    T,
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilyId::M => "M",
            FamilyId::N => "N",
            FamilyId::A => "A",
            FamilyId::B => "B",
            FamilyId::A1 => "A1",
            FamilyId::B1 => "B1",
            FamilyId::C => "C",
            FamilyId::D => "D",
            FamilyId::E1 => "E1",
            FamilyId::E2 => "E2",
            FamilyId::E3 => "E3",
            FamilyId::E31 => "E3_1",
            FamilyId::E4 => "E4",
            FamilyId::T => "T",
        })
    }
}

/// What a family is claimed to be on its target graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimedProperty {
    Resolving,
    DoublyResolving,
    StrongResolving,
    NotDoublyResolving,
    NotResolving,
}

impl fmt::Display for ClaimedProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimedProperty::Resolving => "resolving",
            ClaimedProperty::DoublyResolving => "doubly resolving",
            ClaimedProperty::StrongResolving => "strong resolving",
            ClaimedProperty::NotDoublyResolving => "not doubly resolving",
            ClaimedProperty::NotResolving => "not resolving",
        })
    }
}

/// The graph a witness family lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetGraph {
    Cylinder { n: usize, k: usize },
    Prism { n: usize, k: usize, m: usize },
}

impl TargetGraph {
    pub fn build(&self) -> Result<LabeledGraph> {
        match *self {
            TargetGraph::Cylinder { n, k } => Ok(explicit_cylinder(n, k)?.into_graph()),
            TargetGraph::Prism { n, k, m } => Ok(explicit_prism(n, k, m)?.into_graph()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            TargetGraph::Cylinder { n, k } => n * k,
            TargetGraph::Prism { n, k, m } => n * k * m,
        }
    }
}

/// A generated set plus the claims made for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFamily {
    pub family_id: FamilyId,
    pub target: TargetGraph,
    /// The i (or j) parameter for the indexed families; None for E and T.
    pub index: Option<usize>,
    pub set: VertexSet,
    pub claimed: Vec<ClaimedProperty>,
}

/// One claim checked against the predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: ClaimedProperty,
    pub holds: bool,
}

impl WitnessFamily {
    fn assemble(
        family_id: FamilyId,
        target: TargetGraph,
        index: Option<usize>,
        members: Vec<usize>,
        claimed: Vec<ClaimedProperty>,
    ) -> Result<WitnessFamily> {
        let set = VertexSet::from_indices(&members)?;
        // generators only emit in-range indices; keep the invariant checked
        if let Some(&v) = set.members().iter().find(|v| v.index() > target.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                index: v.index(),
                vertex_count: target.vertex_count(),
            });
        }
        Ok(WitnessFamily {
            family_id,
            target,
            index,
            set,
            claimed,
        })
    }

    /// Builds the target graph and evaluates every claim.
    pub fn verify_claims(&self) -> Result<Vec<ClaimOutcome>> {
        let g = self.target.build()?;
        let d = all_pairs_distances(&g)?;
        self.claimed
            .iter()
            .map(|&claim| {
                let holds = match claim {
                    ClaimedProperty::Resolving => is_resolving(&self.set, &d)?.holds(),
                    ClaimedProperty::DoublyResolving => is_doubly_resolving(&self.set, &d)?.holds(),
                    ClaimedProperty::StrongResolving => {
                        is_strong_resolving(&self.set, &g, &d)?.holds()
                    }
                    ClaimedProperty::NotDoublyResolving => {
                        !is_doubly_resolving(&self.set, &d)?.holds()
                    }
                    ClaimedProperty::NotResolving => !is_resolving(&self.set, &d)?.holds(),
                };
                Ok(ClaimOutcome { claim, holds })
            })
            .collect()
    }

    /// True iff every claim verifies.
    pub fn claims_hold(&self) -> Result<bool> {
        Ok(self.verify_claims()?.iter().all(|c| c.holds))
    }
}

fn require_odd(n: usize, family: &str) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "family {family} requires odd n >= 3, got n={n}"
        )));
    }
    Ok(())
}

fn require_even(n: usize, family: &str) -> Result<()> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "family {family} requires even n >= 4, got n={n}"
        )));
    }
    Ok(())
}

fn require_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::domain(format!("the cylinder factor needs k >= 3, got k={k}")));
    }
    Ok(())
}

fn require_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::domain(format!("the prism factor needs m >= 2, got m={m}")));
    }
    Ok(())
}

fn require_anchor(value: usize, upper: usize, name: &str) -> Result<()> {
    if value < 1 || value > upper {
        return Err(Error::domain(format!(
            "index {name}={value} outside 1..={upper}"
        )));
    }
    Ok(())
}

/// ceil(n/2) for the anchor arithmetic.
fn half_up(n: usize) -> usize {
    n.div_ceil(2)
}

/// The unique layer-V_k vertex compatible with cylinder vertex `anchor`.
fn top_layer_twin(anchor: usize, n: usize, k: usize) -> usize {
    (k - 1) * n + anchor
}

/// Pair {x_i, x_{ceil(n/2)+i-1}}: resolving on the odd-n cylinder, but never
/// doubly resolving there.
pub fn make_m(i: usize, n: usize, k: usize) -> Result<WitnessFamily> {
    require_odd(n, "M")?;
    require_k(k)?;
    require_anchor(i, half_up(n), "i")?;
    WitnessFamily::assemble(
        FamilyId::M,
        TargetGraph::Cylinder { n, k },
        Some(i),
        vec![i, half_up(n) + i - 1],
        vec![
            ClaimedProperty::Resolving,
            ClaimedProperty::NotDoublyResolving,
        ],
    )
}

/// Pair {x_j, x_{ceil(n/2)+j}}: the other resolving pair shape on odd n.
pub fn make_n(j: usize, n: usize, k: usize) -> Result<WitnessFamily> {
    require_odd(n, "N")?;
    require_k(k)?;
    require_anchor(j, n / 2, "j")?;
    WitnessFamily::assemble(
        FamilyId::N,
        TargetGraph::Cylinder { n, k },
        Some(j),
        vec![j, half_up(n) + j],
        vec![ClaimedProperty::Resolving],
    )
}

/// M_i plus the top-layer twin of x_i: doubly resolving on the odd-n cylinder.
pub fn make_a(i: usize, n: usize, k: usize) -> Result<WitnessFamily> {
    let m = make_m(i, n, k)?;
    let mut members = m.set.indices();
    members.push(top_layer_twin(i, n, k));
    WitnessFamily::assemble(
        FamilyId::A,
        m.target,
        Some(i),
        members,
        vec![ClaimedProperty::DoublyResolving],
    )
}

/// N_j plus the top-layer twin of x_j: doubly resolving on the odd-n cylinder.
pub fn make_b(j: usize, n: usize, k: usize) -> Result<WitnessFamily> {
    let nj = make_n(j, n, k)?;
    let mut members = nj.set.indices();
    members.push(top_layer_twin(j, n, k));
    WitnessFamily::assemble(
        FamilyId::B,
        nj.target,
        Some(j),
        members,
        vec![ClaimedProperty::DoublyResolving],
    )
}

/// Copy-1 embedding of A_i into the prism: resolving there, but not doubly
/// resolving (the copy-2 shadow of the anchor defeats it with λ = −1).
pub fn make_a1(i: usize, n: usize, k: usize, m: usize) -> Result<WitnessFamily> {
    require_m(m)?;
    let a = make_a(i, n, k)?;
    WitnessFamily::assemble(
        FamilyId::A1,
        TargetGraph::Prism { n, k, m },
        Some(i),
        a.set.indices(),
        vec![
            ClaimedProperty::Resolving,
            ClaimedProperty::NotDoublyResolving,
        ],
    )
}

/// Copy-1 embedding of B_j into the prism: resolving there.
pub fn make_b1(j: usize, n: usize, k: usize, m: usize) -> Result<WitnessFamily> {
    require_m(m)?;
    let b = make_b(j, n, k)?;
    WitnessFamily::assemble(
        FamilyId::B1,
        TargetGraph::Prism { n, k, m },
        Some(j),
        b.set.indices(),
        vec![ClaimedProperty::Resolving],
    )
}

/// A_i^(1) plus the copy-2 twin of the anchor: doubly resolving on the
/// two-copy prism.
pub fn make_c(i: usize, n: usize, k: usize) -> Result<WitnessFamily> {
    let a1 = make_a1(i, n, k, 2)?;
    let mut members = a1.set.indices();
    members.push(n * k + top_layer_twin(i, n, k));
    WitnessFamily::assemble(
        FamilyId::C,
        a1.target,
        Some(i),
        members,
        vec![ClaimedProperty::DoublyResolving],
    )
}

/// A_i^(1) plus the copy-m twin of the anchor: doubly resolving on the
/// m-copy prism. Coincides with C_i at m = 2.
pub fn make_d(i: usize, n: usize, k: usize, m: usize) -> Result<WitnessFamily> {
    let a1 = make_a1(i, n, k, m)?;
    let mut members = a1.set.indices();
    members.push((m - 1) * n * k + top_layer_twin(i, n, k));
    WitnessFamily::assemble(
        FamilyId::D,
        a1.target,
        Some(i),
        members,
        vec![ClaimedProperty::DoublyResolving],
    )
}

/// The even-n cylinder series. Variant 1 is {x_1, x_2, x_c} (not doubly
/// resolving), variant 2 is {x_1, x_{n/2}, x_{n/2+1}} (resolving, not doubly),
/// variant 3 adds x_c to variant 2 and is doubly resolving.
pub fn make_e(variant: usize, n: usize, k: usize) -> Result<WitnessFamily> {
    require_even(n, "E")?;
    require_k(k)?;
    let xc = top_layer_twin(1, n, k);
    let (family_id, members, claimed) = match variant {
        1 => (
            FamilyId::E1,
            vec![1, 2, xc],
            vec![ClaimedProperty::NotDoublyResolving],
        ),
        2 => (
            FamilyId::E2,
            vec![1, n / 2, n / 2 + 1],
            vec![
                ClaimedProperty::Resolving,
                ClaimedProperty::NotDoublyResolving,
            ],
        ),
        3 => (
            FamilyId::E3,
            vec![1, n / 2, n / 2 + 1, xc],
            vec![ClaimedProperty::DoublyResolving],
        ),
        other => {
            return Err(Error::domain(format!(
                "family E has variants 1..=3, got {other}"
            )))
        }
    };
    WitnessFamily::assemble(
        family_id,
        TargetGraph::Cylinder { n, k },
        None,
        members,
        claimed,
    )
}

/// Copy-1 embedding of E_3 into the prism: resolving there, not doubly.
pub fn make_e3_1(n: usize, k: usize, m: usize) -> Result<WitnessFamily> {
    require_m(m)?;
    let e3 = make_e(3, n, k)?;
    WitnessFamily::assemble(
        FamilyId::E31,
        TargetGraph::Prism { n, k, m },
        None,
        e3.set.indices(),
        vec![
            ClaimedProperty::Resolving,
            ClaimedProperty::NotDoublyResolving,
        ],
    )
}

/// E_3^(1) plus the copy-m twin of x_c: doubly resolving on the prism.
pub fn make_e4(n: usize, k: usize, m: usize) -> Result<WitnessFamily> {
    let e31 = make_e3_1(n, k, m)?;
    let mut members = e31.set.indices();
    members.push((m - 1) * n * k + top_layer_twin(1, n, k));
    WitnessFamily::assemble(
        FamilyId::E4,
        e31.target,
        None,
        members,
        vec![ClaimedProperty::DoublyResolving],
    )
}

/// Layer V_1 of copy 1 and of copy m — 2n vertices, strong resolving on any
/// prism.
pub fn make_t(n: usize, k: usize, m: usize) -> Result<WitnessFamily> {
    if n < 3 {
        return Err(Error::domain(format!("the cycle factor needs n >= 3, got n={n}")));
    }
    require_k(k)?;
    require_m(m)?;
    let offset = (m - 1) * n * k;
    let members: Vec<usize> = (1..=n).chain(offset + 1..=offset + n).collect();
    WitnessFamily::assemble(
        FamilyId::T,
        TargetGraph::Prism { n, k, m },
        None,
        members,
        vec![ClaimedProperty::StrongResolving],
    )
}

/// The pair certifying that M_i is not doubly resolving: x_{i+n} and
/// x_{i+2n} have representations against M_i differing by the constant
/// vector −1. The claim is recomputed from `d`, not assumed; an error means
/// the distances contradict the formula.
pub fn counterexample_m(
    i: usize,
    n: usize,
    k: usize,
    d: &DistanceMatrix,
) -> Result<((VertexId, VertexId), i64)> {
    let family = make_m(i, n, k)?;
    if d.vertex_count() != n * k {
        return Err(Error::VertexCountMismatch {
            left: n * k,
            right: d.vertex_count(),
        });
    }
    let u = VertexId::new(i + n)?;
    let v = VertexId::new(i + 2 * n)?;
    let ru = representation(u, &family.set, d)?;
    let rv = representation(v, &family.set, d)?;
    let diffs: Vec<i64> = ru
        .coords()
        .iter()
        .zip(rv.coords())
        .map(|(&a, &b)| a as i64 - b as i64)
        .collect();
    if diffs.iter().any(|&x| x != -1) {
        return Err(Error::VerificationFailed(format!(
            "expected constant difference -1 for ({u}, {v}) against M_{i}, got {diffs:?}"
        )));
    }
    Ok(((u, v), -1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn indices(f: &WitnessFamily) -> Vec<usize> {
        f.set.indices()
    }

    #[test]
    fn m_and_n_pairs() {
        assert_eq!(indices(&make_m(1, 5, 4).unwrap()), vec![1, 3]);
        assert_eq!(indices(&make_m(1, 3, 3).unwrap()), vec![1, 2]);
        assert_eq!(indices(&make_m(3, 5, 3).unwrap()), vec![3, 5]);
        assert_eq!(indices(&make_n(1, 5, 3).unwrap()), vec![1, 4]);
        assert_eq!(indices(&make_n(1, 3, 3).unwrap()), vec![1, 3]);
        assert_eq!(indices(&make_n(2, 5, 3).unwrap()), vec![2, 5]);
    }

    #[test]
    fn a_and_b_triples() {
        assert_eq!(indices(&make_a(1, 5, 4).unwrap()), vec![1, 3, 16]);
        assert_eq!(indices(&make_a(1, 3, 3).unwrap()), vec![1, 2, 7]);
        assert_eq!(indices(&make_a(2, 5, 3).unwrap()), vec![2, 4, 12]);
        assert_eq!(indices(&make_b(1, 5, 4).unwrap()), vec![1, 4, 16]);
        assert_eq!(indices(&make_b(1, 3, 3).unwrap()), vec![1, 3, 7]);
        assert_eq!(indices(&make_b(2, 5, 3).unwrap()), vec![2, 5, 12]);
    }

    #[test]
    fn prism_embeddings_and_extensions() {
        let a1 = make_a1(1, 5, 4, 4).unwrap();
        assert_eq!(indices(&a1), vec![1, 3, 16]);
        assert_eq!(a1.target, TargetGraph::Prism { n: 5, k: 4, m: 4 });
        assert_eq!(indices(&make_b1(1, 3, 3, 2).unwrap()), vec![1, 3, 7]);
        assert_eq!(indices(&make_a1(1, 3, 3, 2).unwrap()), vec![1, 2, 7]);

        assert_eq!(indices(&make_c(1, 3, 3).unwrap()), vec![1, 2, 7, 16]);
        assert_eq!(indices(&make_c(1, 5, 4).unwrap()), vec![1, 3, 16, 36]);
        assert_eq!(indices(&make_c(2, 3, 3).unwrap()), vec![2, 3, 8, 17]);

        assert_eq!(indices(&make_d(1, 5, 4, 4).unwrap()), vec![1, 3, 16, 76]);
        assert_eq!(
            make_d(1, 3, 3, 2).unwrap().set,
            make_c(1, 3, 3).unwrap().set
        );
        assert_eq!(indices(&make_d(2, 5, 3, 3).unwrap()), vec![2, 4, 12, 42]);
    }

    #[test]
    fn e_series() {
        assert_eq!(indices(&make_e(1, 4, 3).unwrap()), vec![1, 2, 9]);
        assert_eq!(indices(&make_e(2, 6, 3).unwrap()), vec![1, 3, 4]);
        assert_eq!(indices(&make_e(3, 4, 3).unwrap()), vec![1, 2, 3, 9]);
        assert_eq!(indices(&make_e3_1(4, 3, 4).unwrap()), vec![1, 2, 3, 9]);
        assert_eq!(indices(&make_e4(4, 3, 4).unwrap()), vec![1, 2, 3, 9, 45]);
        assert_eq!(indices(&make_e4(4, 3, 2).unwrap()), vec![1, 2, 3, 9, 21]);
    }

    #[test]
    fn t_takes_both_end_layers() {
        assert_eq!(
            indices(&make_t(4, 3, 2).unwrap()),
            vec![1, 2, 3, 4, 13, 14, 15, 16]
        );
        assert_eq!(indices(&make_t(3, 3, 2).unwrap()), vec![1, 2, 3, 10, 11, 12]);
        for n in [3, 4, 5] {
            assert_eq!(make_t(n, 3, 3).unwrap().set.len(), 2 * n);
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(make_m(0, 5, 3).is_err());
        assert!(make_m(4, 5, 3).is_err()); // ceil(5/2) = 3
        assert!(make_m(1, 4, 3).is_err()); // even n
        assert!(make_m(1, 5, 2).is_err()); // k too small
        assert!(make_n(3, 5, 3).is_err()); // floor(5/2) = 2
        assert!(make_e(1, 5, 3).is_err()); // odd n
        assert!(make_e(4, 4, 3).is_err()); // no such variant
        assert!(make_e(0, 4, 3).is_err());
        assert!(make_a1(1, 5, 3, 1).is_err()); // m too small
        assert!(make_t(2, 3, 2).is_err());
    }

    #[test]
    fn counterexample_pairs_verify() {
        let c = explicit_cylinder(3, 3).unwrap();
        let d = all_pairs_distances(c.graph()).unwrap();
        let ((u, v), lambda) = counterexample_m(1, 3, 3, &d).unwrap();
        assert_eq!((u.index(), v.index(), lambda), (4, 7, -1));

        let c = explicit_cylinder(5, 4).unwrap();
        let d = all_pairs_distances(c.graph()).unwrap();
        let ((u, v), lambda) = counterexample_m(1, 5, 4, &d).unwrap();
        assert_eq!((u.index(), v.index(), lambda), (6, 11, -1));

        let c = explicit_cylinder(5, 3).unwrap();
        let d = all_pairs_distances(c.graph()).unwrap();
        let ((u, v), lambda) = counterexample_m(2, 5, 3, &d).unwrap();
        assert_eq!((u.index(), v.index(), lambda), (7, 12, -1));

        // wrong distance matrix is rejected, not silently accepted
        let c = explicit_cylinder(3, 3).unwrap();
        let d = all_pairs_distances(c.graph()).unwrap();
        assert!(matches!(
            counterexample_m(1, 5, 4, &d),
            Err(Error::VertexCountMismatch { left: 20, right: 9 })
        ));
    }

    #[test]
    fn claims_verify_on_small_instances() {
        for family in [
            make_m(1, 3, 3).unwrap(),
            make_n(1, 3, 3).unwrap(),
            make_a(1, 3, 3).unwrap(),
            make_b(1, 3, 3).unwrap(),
            make_a1(1, 3, 3, 2).unwrap(),
            make_b1(1, 3, 3, 2).unwrap(),
            make_c(1, 3, 3).unwrap(),
            make_d(1, 3, 3, 3).unwrap(),
            make_e(1, 4, 3).unwrap(),
            make_e(2, 4, 3).unwrap(),
            make_e(3, 4, 3).unwrap(),
            make_e3_1(4, 3, 2).unwrap(),
            make_e4(4, 3, 2).unwrap(),
            make_t(3, 3, 2).unwrap(),
            make_t(4, 3, 2).unwrap(),
        ] {
            let outcomes = family.verify_claims().unwrap();
            assert!(!outcomes.is_empty());
            for outcome in &outcomes {
                assert!(
                    outcome.holds,
                    "claim {} fails for {:?} {}",
                    outcome.claim, family.family_id, family.set
                );
            }
            assert!(family.claims_hold().unwrap());
        }
    }
}
