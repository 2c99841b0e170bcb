//! Presentations shipped with the crate.

use super::Presentation;

pub const FILES: [(&str, &str); 7] = [
    ("pauli_xyz", include_str!("../../data/pauli_xyz.pres")),
    ("pauli_uxy", include_str!("../../data/pauli_uxy.pres")),
    ("q8", include_str!("../../data/q8.pres")),
    ("z4", include_str!("../../data/z4.pres")),
    ("d8", include_str!("../../data/d8.pres")),
    ("seifquo", include_str!("../../data/seifquo.pres")),
    ("q8_free_z4", include_str!("../../data/q8_free_z4.pres")),
];

pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn by_name(name: &str) -> Option<Presentation> {
    source(name).map(|s| Presentation::parse(s).expect("bundled presentation parses"))
}

fn load(name: &str) -> Presentation {
    by_name(name).expect("bundled presentation exists")
}

/// `⟨X, Y, Z | X², Y², Z², (YZ)⁴, (ZX)⁴, (XY)⁴⟩`.
pub fn pauli_xyz() -> Presentation {
    load("pauli_xyz")
}

/// The presentation on `u, xy, y` with `x := xy·y⁻¹`.
pub fn pauli_uxy() -> Presentation {
    load("pauli_uxy")
}

pub fn q8() -> Presentation {
    load("q8")
}

pub fn z4() -> Presentation {
    load("z4")
}

pub fn d8() -> Presentation {
    load("d8")
}

pub fn seifquo() -> Presentation {
    load("seifquo")
}

pub fn q8_free_z4() -> Presentation {
    load("q8_free_z4")
}
