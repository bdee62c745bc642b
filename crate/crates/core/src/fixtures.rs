//! The four worked examples: the non-orientable map `m0` and hypermap `hm0`
//! on the projective plane, and the orientable map `m1` and hypermap `hm1` on
//! the sphere, with their flag labels.

use crate::sigma::OrientedHypermap;
use crate::tau::FlagHypermap;

pub fn m0() -> FlagHypermap {
    FlagHypermap::parse(
        12,
        "(1 11)(2 12)(3 10)(4 9)(5 8)(6 7)",
        "(1 2)(3 4)(5 6)(7 9)(8 10)(11 12)",
        "(1 6)(2 3)(4 5)(7 11)(8 9)(10 12)",
    )
    .expect("m0 fixture")
}

pub fn hm0() -> FlagHypermap {
    FlagHypermap::parse(6, "(1 2)(3 5)(4 6)", "(1 2)(3 4)(5 6)", "(1 6)(2 3)(4 5)")
        .expect("hm0 fixture")
}

pub fn m1() -> FlagHypermap {
    FlagHypermap::parse(
        12,
        "(1 11)(2 12)(3 10)(4 8)(5 9)(6 7)",
        "(1 2)(3 4)(5 6)(7 9)(8 10)(11 12)",
        "(1 6)(2 3)(4 5)(7 11)(8 9)(10 12)",
    )
    .expect("m1 fixture")
}

pub fn hm1() -> FlagHypermap {
    FlagHypermap::parse(6, "(1 2)(3 4)(5 6)", "(1 2)(3 4)(5 6)", "(1 6)(2 3)(4 5)")
        .expect("hm1 fixture")
}

/// Half-edge model of `m1` on the half-edges `{1,3,5,7,8,12}` inside the
/// flag numbering.
pub fn m1_sigma() -> OrientedHypermap {
    OrientedHypermap::parse(
        12,
        &[1, 3, 5, 7, 8, 12],
        "(1 3 5)(7 8 12)",
        "(1 7)(3 12)(5 8)",
    )
    .expect("m1 sigma fixture")
}

/// Half-edge model of `hm1` on the half-edges `{1,3,5}`.
pub fn hm1_sigma() -> OrientedHypermap {
    OrientedHypermap::parse(6, &[1, 3, 5], "(1 3 5)", "(1 5 3)").expect("hm1 sigma fixture")
}

/// All flag-model fixtures with their names.
pub fn named_tau() -> Vec<(&'static str, FlagHypermap)> {
    vec![("m0", m0()), ("hm0", hm0()), ("m1", m1()), ("hm1", hm1())]
}

pub fn all_tau() -> Vec<FlagHypermap> {
    named_tau().into_iter().map(|(_, hm)| hm).collect()
}

pub fn named_sigma() -> Vec<(&'static str, OrientedHypermap)> {
    vec![("m1", m1_sigma()), ("hm1", hm1_sigma())]
}
