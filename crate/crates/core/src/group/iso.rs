//! Isomorphism testing for small groups: invariant screening followed by a
//! backtracking search over images of a greedy generating set.

use super::concrete::ConcreteGroup;
use super::structure::{
    abelianization_invariants, center, centralizer_size, commutator_subgroup, element_orders,
};

/// Isomorphism invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub order: usize,
    pub order_multiset: Vec<usize>,
    pub center_size: usize,
    pub derived_size: usize,
    pub abelianization: Vec<usize>,
    /// Sorted `(element order, centralizer size)` pairs.
    pub class_profile: Vec<(usize, usize)>,
}

pub fn invariants(g: &ConcreteGroup) -> Invariants {
    let orders = element_orders(g);
    let mut class_profile: Vec<(usize, usize)> = g
        .elements()
        .map(|x| (orders.orders[x], centralizer_size(g, x)))
        .collect();
    class_profile.sort_unstable();
    Invariants {
        order: g.order(),
        order_multiset: orders.multiset(),
        center_size: center(g).order(),
        derived_size: commutator_subgroup(g).order(),
        abelianization: abelianization_invariants(g),
        class_profile,
    }
}

/// Greedy generating set: repeatedly add the highest-order element not yet
/// in the span.
pub fn greedy_generators(g: &ConcreteGroup) -> Vec<usize> {
    let orders = element_orders(g).orders;
    let mut candidates: Vec<usize> = g.elements().collect();
    candidates.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
    let mut gens = Vec::new();
    let mut span = vec![g.identity()];
    for x in candidates {
        if span.len() == g.order() {
            break;
        }
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = g.generated(&gens);
        }
    }
    gens
}

/// An explicit isomorphism `G → H`, as an index map, or `None`.
pub fn find_isomorphism(g: &ConcreteGroup, h: &ConcreteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() || invariants(g) != invariants(h) {
        return None;
    }
    let gens = greedy_generators(g);
    let g_orders = element_orders(g).orders;
    let h_orders = element_orders(h).orders;
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| {
            let key = (g_orders[x], centralizer_size(g, x));
            h.elements()
                .filter(|&y| (h_orders[y], centralizer_size(h, y)) == key)
                .collect()
        })
        .collect();
    let span_sizes: Vec<usize> = (1..=gens.len())
        .map(|k| g.generated(&gens[..k]).len())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &span_sizes, &mut images)
}

fn search(
    g: &ConcreteGroup,
    h: &ConcreteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    span_sizes: &[usize],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        return extend(g, h, gens, images);
    }
    for &y in &candidates[depth] {
        images.push(y);
        if h.generated(images).len() == span_sizes[depth] {
            if let Some(map) = search(g, h, gens, candidates, span_sizes, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

/// Extends generator images along the right Cayley graph; succeeds iff the
/// result is a well-defined bijection (hence an isomorphism).
fn extend(
    g: &ConcreteGroup,
    h: &ConcreteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = h.identity();
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&gen, &img) in gens.iter().zip(images) {
            let y = g.mul(x, gen);
            let my = h.mul(map[x], img);
            if map[y] == usize::MAX {
                map[y] = my;
                queue.push_back(y);
            } else if map[y] != my {
                return None;
            }
        }
    }
    let mut hit = vec![false; h.order()];
    for &m in &map {
        if m == usize::MAX || hit[m] {
            return None;
        }
        hit[m] = true;
    }
    Some(map)
}

pub fn is_isomorphic(g: &ConcreteGroup, h: &ConcreteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Checks that `map` is a bijective homomorphism `G → H`.
pub fn verify_isomorphism(g: &ConcreteGroup, h: &ConcreteGroup, map: &[usize]) -> bool {
    if map.len() != g.order() || g.order() != h.order() {
        return false;
    }
    let mut hit = vec![false; h.order()];
    for &m in map {
        if m >= h.order() || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    g.elements().all(|a| {
        g.elements()
            .all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b]))
    })
}
