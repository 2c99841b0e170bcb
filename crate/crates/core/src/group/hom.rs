//! Homomorphisms between concrete groups, and homomorphisms out of presented
//! groups determined by generator images.

use super::concrete::{ConcreteGroup, Subgroup};
use super::structure::quotient;
use super::GroupError;
use crate::presentation::{Presentation, Word};

/// A homomorphism stored as a full index map on the source.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: ConcreteGroup,
    target: ConcreteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        source: ConcreteGroup,
        target: ConcreteGroup,
        map: Vec<usize>,
    ) -> Result<Self, GroupError> {
        if map.len() != source.order() || map.iter().any(|&m| m >= target.order()) {
            return Err(GroupError::NotHomomorphism);
        }
        let ok = source.elements().all(|a| {
            source
                .elements()
                .all(|b| map[source.mul(a, b)] == target.mul(map[a], map[b]))
        });
        if !ok {
            return Err(GroupError::NotHomomorphism);
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    /// The homomorphism determined by images of `source.generators()`,
    /// extended along the Cayley graph.
    pub fn from_generator_images(
        source: ConcreteGroup,
        target: ConcreteGroup,
        images: &[usize],
    ) -> Result<Self, GroupError> {
        let gens = source.generators().to_vec();
        if gens.len() != images.len() {
            return Err(GroupError::ImageCount {
                expected: gens.len(),
                got: images.len(),
            });
        }
        let mut map = vec![usize::MAX; source.order()];
        map[source.identity()] = target.identity();
        let mut queue = std::collections::VecDeque::from([source.identity()]);
        while let Some(x) = queue.pop_front() {
            for (&g, &img) in gens.iter().zip(images) {
                let y = source.mul(x, g);
                let my = target.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = my;
                    queue.push_back(y);
                } else if map[y] != my {
                    return Err(GroupError::NotHomomorphism);
                }
            }
        }
        if map.contains(&usize::MAX) {
            return Err(GroupError::NotHomomorphism);
        }
        Self::new(source, target, map)
    }

    /// The canonical projection `G → G/N`.
    pub fn quotient_map(g: &ConcreteGroup, n: &Subgroup) -> Result<Self, GroupError> {
        let q = quotient(g, n)?;
        Self::new(g.clone(), q.group, q.coset_of)
    }

    pub fn source(&self) -> &ConcreteGroup {
        &self.source
    }

    pub fn target(&self) -> &ConcreteGroup {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn kernel(&self) -> Subgroup {
        let k: Vec<usize> = self
            .source
            .elements()
            .filter(|&x| self.map[x] == self.target.identity())
            .collect();
        Subgroup::from_indices(&self.source, &k).expect("kernel is a subgroup")
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_indices(&self.target, &self.map).expect("image is a subgroup")
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.target.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupHom) -> Result<Self, GroupError> {
        if other.source.table() != self.target.table() {
            return Err(GroupError::TargetMismatch);
        }
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        Self::new(self.source.clone(), other.target.clone(), map)
    }
}

/// A homomorphism from a presented group into a concrete group, known only
/// through generator images.
#[derive(Clone, Debug)]
pub struct PresentationImage {
    pub images: Vec<usize>,
    /// Subgroup of the target generated by the images.
    pub image: Subgroup,
    pub surjective: bool,
}

/// Evaluates a word in `target` with generator `k` of `pres` sent to
/// `images[k]`.
pub fn evaluate_word(
    pres: &Presentation,
    word: &Word,
    images: &[usize],
    target: &ConcreteGroup,
) -> Result<usize, GroupError> {
    let mut acc = target.identity();
    for letter in word.letters() {
        let k = pres
            .generator_index(&letter.gen)
            .ok_or_else(|| GroupError::UnknownLabel(letter.gen.clone()))?;
        let x = if letter.inverse {
            target.inv(images[k])
        } else {
            images[k]
        };
        acc = target.mul(acc, x);
    }
    Ok(acc)
}

/// Accepts the assignment iff every relator of `pres` evaluates to the
/// identity of `target`; reports the image subgroup and surjectivity.
pub fn hom_from_generator_images(
    pres: &Presentation,
    images: &[usize],
    target: &ConcreteGroup,
) -> Result<PresentationImage, GroupError> {
    if images.len() != pres.generators().len() {
        return Err(GroupError::ImageCount {
            expected: pres.generators().len(),
            got: images.len(),
        });
    }
    if images.iter().any(|&x| x >= target.order()) {
        return Err(GroupError::InvalidElement);
    }
    for (index, rel) in pres.relators().iter().enumerate() {
        if evaluate_word(pres, rel, images, target)? != target.identity() {
            return Err(GroupError::RelatorFails {
                index,
                relator: rel.to_string(),
            });
        }
    }
    let image = Subgroup::generated(target, images);
    let surjective = image.order() == target.order();
    Ok(PresentationImage {
        images: images.to_vec(),
        image,
        surjective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::zoo;
    use crate::presentation::bundled;

    #[test]
    fn pauli_presentation_maps_onto_matrices() {
        let p = zoo::pauli();
        let pres = bundled::pauli_xyz();
        let images = ["X", "Y", "Z"].map(|l| p.element(l).unwrap());
        let h = hom_from_generator_images(&pres, &images, &p).unwrap();
        assert!(h.surjective);
    }

    #[test]
    fn z4_into_scalars() {
        let p = zoo::pauli();
        let pres = bundled::z4();
        let iy = p.element("iI").unwrap();
        let h = hom_from_generator_images(&pres, &[iy], &p).unwrap();
        assert_eq!(h.image.order(), 4);
        // Involutions satisfy y⁴ = 1 too, with a smaller image.
        let x = p.element("X").unwrap();
        let h = hom_from_generator_images(&pres, &[x], &p).unwrap();
        assert_eq!(h.image.order(), 2);
        assert!(!h.surjective);
    }

    #[test]
    fn failing_relator_rejected() {
        let q8 = zoo::quaternion();
        let pres = bundled::d8();
        // s must be an involution; i has order 4.
        let images = [q8.element("i").unwrap(), q8.element("j").unwrap()];
        let err = hom_from_generator_images(&pres, &images, &q8).unwrap_err();
        assert!(
            matches!(err, GroupError::RelatorFails { index: 1, .. }),
            "{err:?}"
        );
    }

    #[test]
    fn quotient_map_kernel() {
        let z4 = zoo::cyclic(4);
        let n = Subgroup::generated(&z4, &[2]);
        let pi = GroupHom::quotient_map(&z4, &n).unwrap();
        assert_eq!(pi.kernel().embedding, vec![0, 2]);
        assert!(pi.is_surjective());
        assert!(!pi.is_injective());
    }

    #[test]
    fn non_homomorphism_rejected() {
        let z4 = zoo::cyclic(4);
        let z2 = zoo::cyclic(2);
        assert!(GroupHom::new(z4, z2, vec![0, 1, 1, 0]).is_err());
    }
}
