//! Presentations built from other presentations: quotients, amalgamated
//! free products and central products.

use std::collections::HashSet;

use serde::Serialize;

use super::{todd_coxeter, CosetStatus, Presentation, PresentationError, Word};

/// Adds `extra_relators` to `p`, keeping its generators.
pub fn quotient_presentation(
    p: &Presentation,
    extra_relators: &[Word],
) -> Result<Presentation, PresentationError> {
    let mut q = p.clone();
    q.add_relators(extra_relators.iter().cloned())?;
    Ok(q)
}

fn fresh_name(name: &str, taken: &HashSet<String>) -> String {
    let mut k = 2;
    loop {
        let candidate = format!("{name}_{k}");
        if !taken.contains(&candidate) {
            return candidate;
        }
        k += 1;
    }
}

/// `⟨S₁ ∪ S₂ | R₁ ∪ R₂ ∪ {w_U w_V⁻¹}⟩`. Generators of `pv` that clash with
/// those of `pu` are renamed with a numeric suffix; each rename is noted in
/// the provenance. An empty amalgam gives the free product.
pub fn svk_presentation(
    pu: &Presentation,
    pv: &Presentation,
    amalgam: &[(Word, Word)],
) -> Result<Presentation, PresentationError> {
    for (wu, wv) in amalgam {
        pu.check_word(wu)?;
        pv.check_word(wv)?;
    }
    let mut taken: HashSet<String> = pu.generators().iter().cloned().collect();
    taken.extend(pv.generators().iter().cloned());
    let mut renames = Vec::new();
    let mut used: HashSet<String> = pu.generators().iter().cloned().collect();
    let mut gens = pu.generators().to_vec();
    for g in pv.generators() {
        let name = if used.contains(g) {
            let fresh = fresh_name(g, &taken);
            taken.insert(fresh.clone());
            renames.push((g.clone(), fresh.clone()));
            fresh
        } else {
            g.clone()
        };
        used.insert(name.clone());
        gens.push(name);
    }
    let rename = |g: &str| {
        renames
            .iter()
            .find(|(old, _)| old == g)
            .map_or_else(|| g.to_string(), |(_, new)| new.clone())
    };
    let mut rels: Vec<Word> = pu.relators().to_vec();
    rels.extend(pv.relators().iter().map(|r| r.rename(rename)));
    rels.extend(
        amalgam
            .iter()
            .map(|(wu, wv)| Word::relation(wu, &wv.rename(rename))),
    );
    let mut out = Presentation::new(gens, rels)?;
    for (old, new) in &renames {
        out = out.with_note(format!("renamed {old} to {new}"));
    }
    Ok(out)
}

/// `⟨S ∪ T | R_A ∪ R_B ∪ {[s, t]} ∪ {w_A w_B}⟩`. Requires disjoint
/// generator sets.
pub fn central_product_presentation(
    pa: &Presentation,
    pb: &Presentation,
    pairing: &[(Word, Word)],
) -> Result<Presentation, PresentationError> {
    if let Some(g) = pb
        .generators()
        .iter()
        .find(|g| pa.generator_index(g).is_some())
    {
        return Err(PresentationError::OverlappingGenerators(g.clone()));
    }
    for (wa, wb) in pairing {
        pa.check_word(wa)?;
        pb.check_word(wb)?;
    }
    let mut gens = pa.generators().to_vec();
    gens.extend(pb.generators().iter().cloned());
    let mut rels: Vec<Word> = pa.relators().to_vec();
    rels.extend(pb.relators().iter().cloned());
    for s in pa.generators() {
        for t in pb.generators() {
            rels.push(Word::commutator(&Word::gen(s), &Word::gen(t)));
        }
    }
    rels.extend(pairing.iter().map(|(wa, wb)| wa.concat(wb)));
    Presentation::new(gens, rels)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditStep {
    pub bound: usize,
    pub status: CosetStatus,
    pub live_cosets: usize,
    pub defined_cosets: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderAudit {
    pub steps: Vec<AuditStep>,
    /// The order, if some bound sufficed.
    pub order: Option<usize>,
    /// Whether `order` is a multiple of the known quotient order.
    pub divisible: Option<bool>,
}

impl OrderAudit {
    pub fn completed(&self) -> bool {
        self.order.is_some()
    }
}

/// Runs coset enumeration at each bound in turn, stopping at the first
/// complete run. `quotient_order` is the order of a known finite quotient;
/// a complete order must be a multiple of it.
pub fn presentation_order_audit(
    p: &Presentation,
    bounds: &[usize],
    quotient_order: Option<usize>,
) -> Result<OrderAudit, PresentationError> {
    let mut steps = Vec::new();
    let mut order = None;
    for &bound in bounds {
        let t = todd_coxeter(p, &[], bound)?;
        steps.push(AuditStep {
            bound,
            status: t.status(),
            live_cosets: t.coset_count(),
            defined_cosets: t.defined_total(),
        });
        if t.is_complete() {
            order = Some(t.coset_count());
            break;
        }
    }
    let divisible = order.zip(quotient_order).map(|(n, q)| q != 0 && n % q == 0);
    Ok(OrderAudit {
        steps,
        order,
        divisible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{bundled, w};

    fn order(p: &Presentation) -> Option<usize> {
        let t = todd_coxeter(p, &[], 2000).unwrap();
        t.is_complete().then(|| t.coset_count())
    }

    #[test]
    fn quotient_of_free_cyclic() {
        let q = quotient_presentation(&Presentation::free(&["a"]).unwrap(), &[w("a^4")]).unwrap();
        assert_eq!(q, Presentation::from_strs(&["a"], &["a^4"]).unwrap());
        let again = quotient_presentation(&q, &[w("a^4"), w("a^2 a^2")]).unwrap();
        assert_eq!(again.relators(), q.relators());
        assert_eq!(
            quotient_presentation(&q, &[w("b")]).unwrap_err(),
            PresentationError::UnknownGenerator("b".into())
        );
    }

    #[test]
    fn svk_identifies_two_involutions() {
        let a = Presentation::from_strs(&["a"], &["a^2"]).unwrap();
        let b = Presentation::from_strs(&["b"], &["b^2"]).unwrap();
        let p = svk_presentation(&a, &b, &[(w("a"), w("b"))]).unwrap();
        assert_eq!(p.generators(), ["a", "b"]);
        assert_eq!(order(&p), Some(2));
    }

    #[test]
    fn svk_renames_clashing_generators() {
        let a = Presentation::from_strs(&["a"], &["a^2"]).unwrap();
        let p = svk_presentation(&a, &a, &[(w("a"), w("a"))]).unwrap();
        assert_eq!(p.generators(), ["a", "a_2"]);
        assert!(p.relators().contains(&w("a a_2^-1")));
        assert_eq!(p.provenance(), ["renamed a to a_2"]);
        assert_eq!(order(&p), Some(2));
    }

    #[test]
    fn svk_amalgam_gives_order_sixteen() {
        let p = svk_presentation(&bundled::q8(), &bundled::z4(), &[(w("u^2"), w("y^2"))]).unwrap();
        assert_eq!(p.generators(), ["u", "xy", "y"]);
        assert!(p.relators().contains(&w("u^2 y^-2")));
        // The amalgamated product alone is infinite.
        assert_eq!(
            todd_coxeter(&p, &[], 500).unwrap().status(),
            CosetStatus::BoundExceeded
        );
        let commuting = [w("u y u^-1 y^-1"), w("xy y xy^-1 y^-1")];
        assert_eq!(
            order(&quotient_presentation(&p, &commuting).unwrap()),
            Some(16)
        );
    }

    #[test]
    fn central_products() {
        let q8 = bundled::q8();
        let z4 = bundled::z4();
        let p = central_product_presentation(&q8, &z4, &[(w("u^2"), w("y^-2"))]).unwrap();
        assert_eq!(order(&p), Some(16));
        let direct = central_product_presentation(&q8, &z4, &[]).unwrap();
        assert_eq!(order(&direct), Some(32));
        let a = Presentation::from_strs(&["a"], &["a^2"]).unwrap();
        let b = Presentation::from_strs(&["b"], &["b^2"]).unwrap();
        assert_eq!(
            order(&central_product_presentation(&a, &b, &[(w("a"), w("b"))]).unwrap()),
            Some(2)
        );
        assert!(matches!(
            central_product_presentation(&a, &a, &[]),
            Err(PresentationError::OverlappingGenerators(_))
        ));
    }

    #[test]
    fn audit_small_cases() {
        let a = presentation_order_audit(&bundled::z4(), &[10], None).unwrap();
        assert_eq!(a.order, Some(4));
        assert_eq!(a.steps.len(), 1);
        let s = presentation_order_audit(&bundled::seifquo(), &[100], Some(16)).unwrap();
        assert_eq!(s.order, Some(16));
        assert_eq!(s.divisible, Some(true));
        let f = presentation_order_audit(&Presentation::free(&["a"]).unwrap(), &[5, 10], Some(2))
            .unwrap();
        assert_eq!(f.order, None);
        assert_eq!(f.divisible, None);
        assert!(f
            .steps
            .iter()
            .all(|s| s.status == CosetStatus::BoundExceeded));
    }
}
