#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use jmult::ideal::{IdealHandle, QuotientRing};
use jmult::parse::parse_polynomial;
use jmult::poly::Polynomial;
use jmult::ring::PolyRing;

pub const P: u64 = 32003;

#[derive(Debug, Clone, Copy)]
pub struct Case {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub relations: &'static [&'static str],
    pub gens: &'static [&'static str],
    /// `R` is reduced.
    pub reduced: bool,
}

impl Case {
    pub fn ambient(&self) -> Arc<PolyRing> {
        PolyRing::with_vars(P, self.vars).unwrap()
    }

    pub fn parse(&self, list: &[&str]) -> Vec<Polynomial> {
        let s = self.ambient();
        list.iter()
            .map(|t| parse_polynomial(t, &s).unwrap())
            .collect()
    }

    pub fn build(&self) -> (QuotientRing, IdealHandle) {
        let s = self.ambient();
        let rels = self
            .relations
            .iter()
            .map(|t| parse_polynomial(t, &s).unwrap())
            .collect();
        let r = QuotientRing::new(&s, rels).unwrap();
        let gens = self
            .gens
            .iter()
            .map(|t| parse_polynomial(t, &s).unwrap())
            .collect();
        let i = r.ideal(gens).unwrap();
        (r, i)
    }

    /// Generators of `I + K` in the ambient ring.
    pub fn all_generators(&self) -> Vec<Polynomial> {
        let mut v = self.parse(self.gens);
        v.extend(self.parse(self.relations));
        v
    }
}

const XY: &[&str] = &["x", "y"];
const XYZ: &[&str] = &["x", "y", "z"];
const Y3: &[&str] = &["y0", "y1", "y2"];
const Y4: &[&str] = &["y0", "y1", "y2", "y3"];
const X4: &[&str] = &["x0", "x1", "x2", "x3"];

macro_rules! case {
    ($name:expr, $vars:expr, [$($r:expr),*], [$($g:expr),*]) => {
        Case { name: $name, vars: $vars, relations: &[$($r),*], gens: &[$($g),*], reduced: true }
    };
}

/// Equigenerated ideals in reduced standard graded rings.
pub const CORPUS: &[Case] = &[
    case!("max ideal of k[x,y]", XY, [], ["x", "y"]),
    case!("(x) in k[x,y]", XY, [], ["x"]),
    case!("veronese conic", XY, [], ["x^2", "x*y", "y^2"]),
    case!("(x^2, y^2)", XY, [], ["x^2", "y^2"]),
    case!("x times m in k[x,y]", XY, [], ["x^2", "x*y"]),
    case!("xy times m in k[x,y]", XY, [], ["x^2*y", "x*y^2"]),
    case!("max ideal of k[x,y,z]", XYZ, [], ["x", "y", "z"]),
    case!(
        "m^2 in k[x,y,z]",
        XYZ,
        [],
        ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]
    ),
    case!("coordinate axes", XYZ, [], ["x*y", "x*z", "y*z"]),
    case!(
        "complete intersection x^2,y^2,z^2",
        XYZ,
        [],
        ["x^2", "y^2", "z^2"]
    ),
    case!("complete intersection xy,z^2", XYZ, [], ["x*y", "z^2"]),
    case!("x times m in k[x,y,z]", XYZ, [], ["x^2", "x*y", "x*z"]),
    case!("z times (x,y)", XYZ, [], ["x*z", "y*z"]),
    case!("(x^3, y^3, xyz)", XYZ, [], ["x^3", "y^3", "x*y*z"]),
    case!(
        "(x^2, y^2) on the quadric cone",
        XYZ,
        ["x*y - z^2"],
        ["x^2", "y^2"]
    ),
    case!("(x, z) on the quadric cone", XYZ, ["x*y - z^2"], ["x", "z"]),
    case!(
        "twisted cubic",
        X4,
        [],
        ["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]
    ),
    case!(
        "jacobian of the smooth conic",
        Y3,
        ["y0*y2 - y1^2"],
        ["y2", "-2*y1", "y0"]
    ),
    case!(
        "jacobian of the cuspidal cubic",
        Y3,
        ["y1^2*y2 - y0^3"],
        ["-3*y0^2", "2*y1*y2", "y1^2"]
    ),
    case!(
        "jacobian of the nodal cubic",
        Y3,
        ["y1^2*y2 - y0^3 - y0^2*y2"],
        ["-3*y0^2 - 2*y0*y2", "2*y1*y2", "y1^2 - y0^2"]
    ),
    case!(
        "jacobian of the fermat cubic curve",
        Y3,
        ["y0^3 + y1^3 + y2^3"],
        ["3*y0^2", "3*y1^2", "3*y2^2"]
    ),
    case!(
        "jacobian of the triangle",
        Y3,
        ["y0*y1*y2"],
        ["y1*y2", "y0*y2", "y0*y1"]
    ),
    case!(
        "jacobian of the conic and tangent line",
        Y3,
        ["y2*y0*y2 - y2*y1^2"],
        ["y2^2", "-2*y1*y2", "2*y0*y2 - y1^2"]
    ),
    case!(
        "jacobian of the cubic surface",
        Y4,
        ["y1^2*y3 - y2^2*y0"],
        ["-y2^2", "2*y1*y3", "-2*y0*y2", "y1^2"]
    ),
];

/// Ideals whose ring carries `0 :_R <I> != 0`, supported in dimension below `dim R`.
pub const TORSION_CORPUS: &[Case] = &[
    Case {
        name: "embedded origin on a line",
        vars: XY,
        relations: &["x^2", "x*y"],
        gens: &["x", "y"],
        reduced: false,
    },
    Case {
        name: "plane with a line through (x,y)",
        vars: XYZ,
        relations: &["x*z", "y*z"],
        gens: &["x", "y"],
        reduced: true,
    },
    Case {
        name: "embedded origin in a plane",
        vars: XYZ,
        relations: &["x^2", "x*y", "x*z"],
        gens: &["y", "z"],
        reduced: false,
    },
    Case {
        name: "embedded line in a plane",
        vars: XYZ,
        relations: &["x^2", "x*y"],
        gens: &["x", "y"],
        reduced: false,
    },
    Case {
        name: "two planes meeting in a point",
        vars: &["x", "y", "z", "w"],
        relations: &["x*z", "x*w", "y*z", "y*w"],
        gens: &["x", "y"],
        reduced: true,
    },
    Case {
        name: "two planes with an embedded line",
        vars: XYZ,
        relations: &["x^2*y", "x*y*z"],
        gens: &["x", "z"],
        reduced: false,
    },
    Case {
        name: "plane and line, squared ideal",
        vars: XYZ,
        relations: &["x*z", "y*z"],
        gens: &["x^2", "x*y", "y^2"],
        reduced: true,
    },
];

/// Ideals primary to the maximal ideal, in at most three variables.
pub const M_PRIMARY: &[Case] = &[
    case!("m in k[x,y]", XY, [], ["x", "y"]),
    case!("m in k[x,y,z]", XYZ, [], ["x", "y", "z"]),
    case!("m on the quadric cone", XYZ, ["x*z - y^2"], ["x", "y", "z"]),
    case!("m on a plane cubic", XY, ["x^3 + y^3"], ["x", "y"]),
    case!(
        "m on the fermat cubic",
        XYZ,
        ["x^3 + y^3 + z^3"],
        ["x", "y", "z"]
    ),
    case!("m on two lines", XY, ["x*y"], ["x", "y"]),
    case!("(x^2, y^2)", XY, [], ["x^2", "y^2"]),
    case!("m^2 in k[x,y]", XY, [], ["x^2", "x*y", "y^2"]),
    case!("(x^2 + y^2, xy)", XY, [], ["x^2 + y^2", "x*y"]),
    case!("(x^2, y^2, z^2)", XYZ, [], ["x^2", "y^2", "z^2"]),
    case!("(x^2, y^2, z^2, xy)", XYZ, [], ["x^2", "y^2", "z^2", "x*y"]),
    case!(
        "(x^2, y^2) on a plane cubic",
        XY,
        ["x^3 + y^3"],
        ["x^2", "y^2"]
    ),
];
