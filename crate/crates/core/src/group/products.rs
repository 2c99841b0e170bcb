//! Direct, fiber (subdirect) and central products.

use super::concrete::{ConcreteGroup, Subgroup};
use super::hom::GroupHom;
use super::iso::is_isomorphic;
use super::structure::{element_orders, is_central, quotient};
use super::GroupError;

/// `G × H` with element `(a, b)` at index `a·|H| + b`.
pub fn direct_product(g: &ConcreteGroup, h: &ConcreteGroup) -> ConcreteGroup {
    let (n, m) = (g.order(), h.order());
    let table = (0..n * m)
        .map(|x| {
            let (a, b) = (x / m, x % m);
            (0..n * m)
                .map(|y| g.mul(a, y / m) * m + h.mul(b, y % m))
                .collect()
        })
        .collect();
    let labels = (0..n * m)
        .map(|x| format!("({},{})", g.label(x / m), h.label(x % m)))
        .collect();
    let gens = g
        .generators()
        .iter()
        .map(|&a| a * m + h.identity())
        .chain(h.generators().iter().map(|&b| g.identity() * m + b))
        .collect();
    ConcreteGroup::from_table(
        table,
        Some(labels),
        format!("{} x {}", g.provenance(), h.provenance()),
    )
    .expect("direct product of groups is a group")
    .with_generators(gens)
    .expect("generator indices in range")
}

/// Outcome of the checks run on a fiber product `G ⊆ G₁ × G₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberChecks {
    /// Both projections δᵢ: G → Gᵢ are onto.
    pub projections_surjective: bool,
    /// ker δ₁ ≅ K₂ and ker δ₂ ≅ K₁.
    pub kernels_match: bool,
    /// ker δ₁ · ker δ₂ = K₁ × K₂ as subsets of G₁ × G₂.
    pub kernel_product: bool,
    /// G/(K₁ × K₂) ≅ H.
    pub quotient_is_target: bool,
}

impl FiberChecks {
    pub fn all(&self) -> bool {
        self.projections_surjective
            && self.kernels_match
            && self.kernel_product
            && self.quotient_is_target
    }
}

#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub direct: ConcreteGroup,
    /// The fiber product as a subgroup of `direct`.
    pub fiber: Subgroup,
    /// Components `(g₁, g₂)` of each element of `fiber.group`.
    pub pairs: Vec<(usize, usize)>,
    /// Kernels of the projections, as subgroups of `fiber.group`.
    pub ker_delta1: Subgroup,
    pub ker_delta2: Subgroup,
    pub checks: FiberChecks,
}

impl FiberProduct {
    pub fn group(&self) -> &ConcreteGroup {
        &self.fiber.group
    }
}

/// Pairs `(g₁, g₂)` with `ε₁(g₁) = ε₂(g₂)`, for epimorphisms onto a common
/// group (compared by table).
pub fn fiber_product(eps1: &GroupHom, eps2: &GroupHom) -> Result<FiberProduct, GroupError> {
    if eps1.target().table() != eps2.target().table() {
        return Err(GroupError::TargetMismatch);
    }
    if !eps1.is_surjective() || !eps2.is_surjective() {
        return Err(GroupError::NotSurjective);
    }
    let (g1, g2, h) = (eps1.source(), eps2.source(), eps1.target());
    let m = g2.order();
    let direct = direct_product(g1, g2);
    let members: Vec<usize> = direct
        .elements()
        .filter(|&x| eps1.apply(x / m) == eps2.apply(x % m))
        .collect();
    let fiber = Subgroup::from_indices(&direct, &members)?;
    let pairs: Vec<(usize, usize)> = fiber.embedding.iter().map(|&x| (x / m, x % m)).collect();

    let local = |pred: &dyn Fn(usize, usize) -> bool| -> Vec<usize> {
        pairs
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| pred(a, b))
            .map(|(k, _)| k)
            .collect()
    };
    let (e1, e2) = (g1.identity(), g2.identity());
    let ker_delta1 = Subgroup::from_indices(&fiber.group, &local(&|a, _| a == e1))?;
    let ker_delta2 = Subgroup::from_indices(&fiber.group, &local(&|_, b| b == e2))?;

    let k1 = eps1.kernel();
    let k2 = eps2.kernel();

    let proj1: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let proj2: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let projections_surjective = Subgroup::from_indices(g1, &proj1)?.order() == g1.order()
        && Subgroup::from_indices(g2, &proj2)?.order() == g2.order();

    let kernels_match =
        is_isomorphic(&ker_delta1.group, &k2.group) && is_isomorphic(&ker_delta2.group, &k1.group);

    let mut product: Vec<usize> = ker_delta1
        .embedding
        .iter()
        .flat_map(|&x| ker_delta2.embedding.iter().map(move |&y| (x, y)))
        .map(|(x, y)| fiber.group.mul(x, y))
        .collect();
    product.sort_unstable();
    product.dedup();
    let mut k1k2: Vec<usize> = local(&|a, b| k1.contains(a) && k2.contains(b));
    k1k2.sort_unstable();
    let kernel_product = product == k1k2 && k1k2.len() == k1.order() * k2.order();

    let k1k2_sub = Subgroup::from_indices(&fiber.group, &k1k2)?;
    let quotient_is_target = quotient(&fiber.group, &k1k2_sub)
        .map(|q| is_isomorphic(&q.group, h))
        .unwrap_or(false);

    Ok(FiberProduct {
        direct,
        fiber,
        pairs,
        ker_delta1,
        ker_delta2,
        checks: FiberChecks {
            projections_surjective,
            kernels_match,
            kernel_product,
            quotient_is_target,
        },
    })
}

/// `(A × B)/⟨(z_A, z_B⁻¹)⟩` with the images of both factors.
#[derive(Clone, Debug)]
pub struct CentralProduct {
    pub group: ConcreteGroup,
    /// Image of each element of `A`.
    pub embed_a: Vec<usize>,
    /// Image of each element of `B`.
    pub embed_b: Vec<usize>,
}

impl CentralProduct {
    /// Images of A and B commute elementwise and together give every element.
    pub fn factors_commute_and_generate(&self) -> bool {
        let g = &self.group;
        let commute = self
            .embed_a
            .iter()
            .all(|&a| self.embed_b.iter().all(|&b| g.commute(a, b)));
        let mut products: Vec<usize> = self
            .embed_a
            .iter()
            .flat_map(|&a| self.embed_b.iter().map(move |&b| g.mul(a, b)))
            .collect();
        products.sort_unstable();
        products.dedup();
        commute && products.len() == g.order()
    }
}

pub fn central_product_quotient(
    a: &ConcreteGroup,
    z_a: usize,
    b: &ConcreteGroup,
    z_b: usize,
) -> Result<CentralProduct, GroupError> {
    if z_a >= a.order() || z_b >= b.order() {
        return Err(GroupError::InvalidElement);
    }
    if !is_central(a, z_a) || !is_central(b, z_b) {
        return Err(GroupError::NotCentral);
    }
    let (oa, ob) = (a.element_order(z_a), b.element_order(z_b));
    if oa != ob {
        return Err(GroupError::OrderMismatch(oa, ob));
    }
    let m = b.order();
    let d = direct_product(a, b);
    let z = Subgroup::generated(&d, &[z_a * m + b.inv(z_b)]);
    let q = quotient(&d, &z)?;
    let embed_a = a
        .elements()
        .map(|x| q.coset_of[x * m + b.identity()])
        .collect();
    let embed_b = b
        .elements()
        .map(|y| q.coset_of[a.identity() * m + y])
        .collect();
    let labels = q
        .representatives
        .iter()
        .map(|&r| format!("{}·{}", a.label(r / m), b.label(r % m)))
        .collect();
    let gens = d.generators().iter().map(|&x| q.coset_of[x]).collect();
    let group = q
        .group
        .with_labels(labels)?
        .with_generators(gens)?
        .with_provenance(format!("({} o {})", a.provenance(), b.provenance()));
    Ok(CentralProduct {
        group,
        embed_a,
        embed_b,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralProductCheck {
    pub is_central_product: bool,
    /// Every element is some `ab`.
    pub factorizes: bool,
    /// `[a, b] = 1` for all pairs.
    pub commute: bool,
    pub intersection: Vec<usize>,
    /// `A ∩ B ⊆ Z(A) ∩ Z(B)`.
    pub intersection_central: bool,
}

/// Decides whether `G = AB` with `[A, B] = 1` for subgroups given as index
/// sets of `G`.
pub fn is_central_product(
    g: &ConcreteGroup,
    a: &[usize],
    b: &[usize],
) -> Result<CentralProductCheck, GroupError> {
    let a = Subgroup::from_indices(g, a)?;
    let b = Subgroup::from_indices(g, b)?;
    let mut products: Vec<usize> = a
        .embedding
        .iter()
        .flat_map(|&x| b.embedding.iter().map(move |&y| (x, y)))
        .map(|(x, y)| g.mul(x, y))
        .collect();
    products.sort_unstable();
    products.dedup();
    let factorizes = products.len() == g.order();
    let commute = a
        .embedding
        .iter()
        .all(|&x| b.embedding.iter().all(|&y| g.commute(x, y)));
    let intersection: Vec<usize> = a
        .embedding
        .iter()
        .copied()
        .filter(|&x| b.contains(x))
        .collect();
    let central_in = |s: &Subgroup, x: usize| s.embedding.iter().all(|&y| g.commute(x, y));
    let intersection_central = intersection
        .iter()
        .all(|&x| central_in(&a, x) && central_in(&b, x));
    Ok(CentralProductCheck {
        is_central_product: factorizes && commute,
        factorizes,
        commute,
        intersection,
        intersection_central,
    })
}

/// `Q₈ ∘ ℤ(2m)` identifying `-1` with the involution of the cyclic factor.
pub fn quaternion_central_cyclic(m: usize) -> Result<CentralProduct, GroupError> {
    let q8 = super::zoo::quaternion();
    let c = super::zoo::cyclic_named(2 * m, "y");
    central_product_quotient(&q8, q8.element("-1")?, &c, m)
}

/// Involution count of a group, convenience for product reports.
pub fn involutions(g: &ConcreteGroup) -> usize {
    element_orders(g).involutions
}
