//! Structural queries: element orders, center, derived subgroup, quotients.

use super::concrete::{ConcreteGroup, Subgroup};
use super::GroupError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderProfile {
    /// Order of each element, by index.
    pub orders: Vec<usize>,
    pub involutions: usize,
}

impl OrderProfile {
    /// Orders sorted ascending, for multiset comparison.
    pub fn multiset(&self) -> Vec<usize> {
        let mut m = self.orders.clone();
        m.sort_unstable();
        m
    }
}

pub fn element_orders(g: &ConcreteGroup) -> OrderProfile {
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let involutions = orders.iter().filter(|&&o| o == 2).count();
    OrderProfile {
        orders,
        involutions,
    }
}

pub fn center(g: &ConcreteGroup) -> Subgroup {
    let z: Vec<usize> = g
        .elements()
        .filter(|&a| g.elements().all(|b| g.commute(a, b)))
        .collect();
    Subgroup::from_indices(g, &z).expect("center is a subgroup")
}

pub fn is_central(g: &ConcreteGroup, a: usize) -> bool {
    g.elements().all(|b| g.commute(a, b))
}

pub fn centralizer_size(g: &ConcreteGroup, a: usize) -> usize {
    g.elements().filter(|&b| g.commute(a, b)).count()
}

/// Subgroup generated by all commutators `[a, b]`.
pub fn commutator_subgroup(g: &ConcreteGroup) -> Subgroup {
    let mut comms: Vec<usize> = g
        .elements()
        .flat_map(|a| g.elements().map(move |b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    comms.sort_unstable();
    comms.dedup();
    Subgroup::generated(g, &comms)
}

pub fn is_normal(g: &ConcreteGroup, n: &Subgroup) -> bool {
    n.embedding.iter().all(|&k| {
        g.elements()
            .all(|x| n.contains(g.mul(g.mul(g.inv(x), k), x)))
    })
}

/// `G/N` with the bookkeeping needed to map elements to cosets.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: ConcreteGroup,
    /// Coset index of each element of `G`.
    pub coset_of: Vec<usize>,
    /// First element (by index) of each coset.
    pub representatives: Vec<usize>,
}

pub fn quotient(g: &ConcreteGroup, n: &Subgroup) -> Result<Quotient, GroupError> {
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut representatives = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(x);
        for &k in &n.embedding {
            coset_of[g.mul(x, k)] = c;
        }
    }
    let table = representatives
        .iter()
        .map(|&a| {
            representatives
                .iter()
                .map(|&b| coset_of[g.mul(a, b)])
                .collect()
        })
        .collect();
    let labels = representatives
        .iter()
        .map(|&r| format!("{}N", g.label(r)))
        .collect();
    let group = ConcreteGroup::from_table(table, Some(labels), format!("{}/N", g.provenance()))?;
    Ok(Quotient {
        group,
        coset_of,
        representatives,
    })
}

/// Orders of the elements of `G/[G,G]`, sorted.
pub fn abelianization_invariants(g: &ConcreteGroup) -> Vec<usize> {
    let derived = commutator_subgroup(g);
    let q = quotient(g, &derived).expect("derived subgroup is normal");
    element_orders(&q.group).multiset()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::zoo;

    #[test]
    fn quaternion_involutions() {
        assert_eq!(element_orders(&zoo::quaternion()).involutions, 1);
    }

    #[test]
    fn dihedral_involutions() {
        assert_eq!(element_orders(&zoo::dihedral8()).involutions, 5);
    }

    #[test]
    fn cyclic_orders() {
        assert_eq!(element_orders(&zoo::cyclic(4)).orders, vec![1, 4, 2, 4]);
    }

    #[test]
    fn centers_and_derived_subgroups() {
        let q8 = zoo::quaternion();
        let d8 = zoo::dihedral8();
        assert_eq!(center(&q8).order(), 2);
        assert_eq!(center(&d8).order(), 2);
        assert_eq!(commutator_subgroup(&q8).order(), 2);
        assert_eq!(commutator_subgroup(&d8).order(), 2);
        let z6 = zoo::cyclic(6);
        assert_eq!(center(&z6).order(), 6);
        assert_eq!(commutator_subgroup(&z6).order(), 1);
    }

    #[test]
    fn central_quotients_are_klein() {
        for g in [zoo::quaternion(), zoo::dihedral8()] {
            let q = quotient(&g, &center(&g)).unwrap();
            assert_eq!(q.group.order(), 4);
            assert_eq!(element_orders(&q.group).involutions, 3);
        }
    }

    #[test]
    fn quotient_needs_normal_subgroup() {
        let d8 = zoo::dihedral8();
        let s = d8.element("s").unwrap();
        let h = Subgroup::generated(&d8, &[s]);
        assert!(matches!(quotient(&d8, &h), Err(GroupError::NotNormal)));
    }

    #[test]
    fn pauli_derived_subgroup_is_plus_minus_identity() {
        let p = zoo::pauli();
        let d = commutator_subgroup(&p);
        let labels: Vec<&str> = d.embedding.iter().map(|&i| p.label(i)).collect();
        assert_eq!(d.order(), 2);
        assert!(labels.contains(&"I") && labels.contains(&"-I"));
    }
}
