//! Bundled small groups.
//!
//! D₈ uses the presentation `⟨r, s | r⁴ = s² = 1, srs = r⁻¹⟩`, realised by
//! the integer matrices `r = [[0, −1], [1, 0]]`, `s = [[1, 0], [0, −1]]`.

use super::concrete::{close_under_product, Closure, ConcreteGroup};
use super::products::direct_product;
use crate::numeric::{pauli_label, unit_label, ExactMatrix, ExactQuaternion};

/// `ℤ(n)` with index `k` standing for `g^k`.
pub fn cyclic(n: usize) -> ConcreteGroup {
    cyclic_named(n, "g")
}

pub fn cyclic_named(n: usize, gen: &str) -> ConcreteGroup {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => gen.to_string(),
            _ => format!("{gen}^{k}"),
        })
        .collect();
    let gens = if n > 1 { vec![1] } else { vec![0] };
    ConcreteGroup::from_table(table, Some(labels), format!("Z({n})"))
        .expect("cyclic table is a group")
        .with_generators(gens)
        .unwrap()
}

/// `ℤ(4) = ⟨y | y⁴⟩`.
pub fn z4() -> ConcreteGroup {
    cyclic_named(4, "y")
}

/// `ℤ(2) × ℤ(2)`.
pub fn klein() -> ConcreteGroup {
    direct_product(&cyclic(2), &cyclic(2)).with_provenance("Z(2)xZ(2)")
}

/// The unit quaternions `{±1, ±i, ±j, ±k}` as a closure of `{i, j}`.
pub fn quaternion_closure() -> Closure<ExactQuaternion> {
    let gens = [ExactQuaternion::i(), ExactQuaternion::j()];
    close_under_product(&gens, |a, b| a * b, |a, b| a == b, 8)
        .expect("Q8 closes at 8")
        .relabel(|q| unit_label(q).expect("unit quaternion").to_string())
}

pub fn quaternion() -> ConcreteGroup {
    quaternion_closure().group.with_provenance("Q8")
}

pub fn dihedral8_closure() -> Closure<ExactMatrix> {
    let r = ExactMatrix::from_parts([[(0, 0), (-1, 0)], [(1, 0), (0, 0)]]);
    let s = ExactMatrix::from_parts([[(1, 0), (0, 0)], [(0, 0), (-1, 0)]]);
    let names: Vec<(ExactMatrix, String)> = (0..4)
        .flat_map(|a| [(a, false), (a, true)])
        .map(|(a, with_s)| {
            let mut m = r.pow(a);
            if with_s {
                m = &m * &s;
            }
            let rp = match a {
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{a}"),
            };
            let label = match (rp.is_empty(), with_s) {
                (true, false) => "1".to_string(),
                (true, true) => "s".to_string(),
                (false, false) => rp,
                (false, true) => format!("{rp} s"),
            };
            (m, label)
        })
        .collect();
    close_under_product(&[r, s], |a, b| a * b, |a, b| a == b, 8)
        .expect("D8 closes at 8")
        .relabel(|m| {
            names
                .iter()
                .find(|(n, _)| n == m)
                .expect("r^a s^b form")
                .1
                .clone()
        })
}

pub fn dihedral8() -> ConcreteGroup {
    dihedral8_closure().group.with_provenance("D8")
}

pub fn pauli_generators() -> [ExactMatrix; 3] {
    [
        ExactMatrix::pauli_x(),
        ExactMatrix::pauli_y(),
        ExactMatrix::pauli_z(),
    ]
}

/// Closure of the exact Pauli matrices `{X, Y, Z}`.
pub fn pauli_closure() -> Closure<ExactMatrix> {
    close_under_product(&pauli_generators(), |a, b| a * b, |a, b| a == b, 64)
        .expect("Pauli group is finite")
        .relabel(|m| pauli_label(m).expect("phase times Pauli matrix"))
}

pub fn pauli() -> ConcreteGroup {
    pauli_closure()
        .group
        .with_provenance("Pauli matrices <X,Y,Z>")
}

/// Named groups used for reflexivity/symmetry checks and the CLI.
pub fn all() -> Vec<(&'static str, ConcreteGroup)> {
    vec![
        ("Z2", cyclic(2)),
        ("Z4", z4()),
        ("Z2xZ2", klein()),
        ("Q8", quaternion()),
        ("D8", dihedral8()),
        ("P", pauli()),
    ]
}

pub fn by_name(name: &str) -> Option<ConcreteGroup> {
    all()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, g)| g)
}

/// A designated central involution, used to form central products of
/// bundled groups.
pub fn central_involution(name: &str, g: &ConcreteGroup) -> Option<usize> {
    let label = match name.to_ascii_uppercase().as_str() {
        "Z2" => "g",
        "Z4" => "y^2",
        "Q8" => "-1",
        "D8" => "r^2",
        "P" => "-I",
        _ => return None,
    };
    g.find_label(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        for (name, g) in all() {
            g.audit().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert_eq!(quaternion().order(), 8);
        assert_eq!(dihedral8().order(), 8);
        assert_eq!(pauli().order(), 16);
        assert_eq!(cyclic(1).order(), 1);
    }

    #[test]
    fn dihedral_relation_holds() {
        let d = dihedral8();
        let r = d.element("r").unwrap();
        let s = d.element("s").unwrap();
        assert_eq!(d.mul(d.mul(s, r), s), d.inv(r));
        assert_eq!(d.element_order(r), 4);
    }

    #[test]
    fn labels_are_distinct() {
        for (_, g) in all() {
            let mut l = g.labels().to_vec();
            l.sort();
            l.dedup();
            assert_eq!(l.len(), g.order());
        }
    }
}
