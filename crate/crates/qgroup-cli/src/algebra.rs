//! The four element types reachable from the command line.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use qgroup::hopf::DualPair;
use qgroup::tensor::{BasisAlgebra, MonomialNames};
use qgroup::{CycField, CycScalar, FAlgebra, FElement, HAlgebra, HElement, Plane, PlaneElement, WzComplex, WzForm};
use serde_json::{json, Value};

use crate::expr::{evaluate, parse, Evaluate, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Plane,
    H,
    F,
    Wz,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::Plane, Algebra::H, Algebra::F, Algebra::Wz];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Plane => "plane",
            Algebra::H => "H",
            Algebra::F => "F",
            Algebra::Wz => "wz",
        }
    }
}

impl FromStr for Algebra {
    type Err = String;

    fn from_str(s: &str) -> Result<Algebra, String> {
        match s {
            "plane" | "M" => Ok(Algebra::Plane),
            "H" | "h" => Ok(Algebra::H),
            "F" | "f" => Ok(Algebra::F),
            "wz" | "omega" => Ok(Algebra::Wz),
            _ => Err(format!("unknown algebra '{s}' (expected plane, H, F or wz)")),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum Element {
    Plane(PlaneElement),
    H(HElement),
    F(FElement),
    Wz(WzForm),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Plane(e) => write!(f, "{e}"),
            Element::H(e) => write!(f, "{e}"),
            Element::F(e) => write!(f, "{e}"),
            Element::Wz(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn unit_name(s: String) -> String {
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl Element {
    pub fn algebra(&self) -> Algebra {
        match self {
            Element::Plane(_) => Algebra::Plane,
            Element::H(_) => Algebra::H,
            Element::F(_) => Algebra::F,
            Element::Wz(_) => Algebra::Wz,
        }
    }

    /// `(monomial, coefficient)` in the basis order.
    pub fn terms(&self) -> Vec<(String, CycScalar)> {
        match self {
            Element::Plane(e) => e.terms().iter().map(|(&(r, s), c)| (monomial_name(&[("x", r), ("y", s)]), c.clone())).collect(),
            Element::H(e) => {
                let n = e.field().n() as usize;
                e.terms().iter().map(|(&i, c)| (unit_name(HAlgebra::monomial_name(n, i)), c.clone())).collect()
            }
            Element::F(e) => {
                let n = e.field().n() as usize;
                e.terms().iter().map(|(&i, c)| (unit_name(FAlgebra::monomial_name(n, i)), c.clone())).collect()
            }
            Element::Wz(e) => e
                .terms()
                .map(|(w, r, s, c)| {
                    let d = match w {
                        qgroup::wz::Word::One => "",
                        qgroup::wz::Word::Dx => "dx",
                        qgroup::wz::Word::Dy => "dy",
                        qgroup::wz::Word::DxDy => "dx*dy",
                    };
                    let m = monomial_name(&[("x", r), ("y", s)]);
                    let name = match (m.as_str(), d) {
                        ("1", "") => "1".to_string(),
                        ("1", d) => d.to_string(),
                        (m, "") => m.to_string(),
                        (m, d) => format!("{m}*{d}"),
                    };
                    (name, c.clone())
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "algebra": self.algebra().name(),
            "text": self.to_string(),
            "terms": self.terms().into_iter().map(|(m, c)| json!([m, c.to_string()])).collect::<Vec<_>>(),
        })
    }
}

fn monomial_name(parts: &[(&str, usize)]) -> String {
    let v: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if v.is_empty() {
        "1".into()
    } else {
        v.join("*")
    }
}

/// Everything built for one root of unity.
pub struct Context {
    pub field: Arc<CycField>,
    pub pair: Arc<DualPair>,
    pub plane: Plane,
    pub wz: WzComplex,
}

impl Context {
    pub fn new(n: u32) -> qgroup::error::Result<Context> {
        let field = CycField::new(n)?;
        let pair = Arc::new(DualPair::new(&field));
        Ok(Context { plane: Plane::new(&field), wz: WzComplex::new(&field), pair, field })
    }

    pub fn n(&self) -> u32 {
        self.field.n()
    }

    pub fn parse(&self, algebra: Algebra, text: &str) -> Result<Element, ParseError> {
        let e = parse(text)?;
        Ok(match algebra {
            Algebra::Plane => Element::Plane(evaluate(&PlaneEval(self), &e)?),
            Algebra::H => Element::H(evaluate(&HEval(self), &e)?),
            Algebra::F => Element::F(evaluate(&FEval(self), &e)?),
            Algebra::Wz => Element::Wz(evaluate(&WzEval(self), &e)?),
        })
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Option<Element> {
        Some(match (a, b) {
            (Element::Plane(x), Element::Plane(y)) => Element::Plane(x.mul(y)),
            (Element::H(x), Element::H(y)) => Element::H(self.pair.h.mul(x, y)),
            (Element::F(x), Element::F(y)) => Element::F(self.pair.f.mul(x, y)),
            (Element::Wz(x), Element::Wz(y)) => Element::Wz(self.wz.mul(x, y)),
            _ => return None,
        })
    }
}

struct PlaneEval<'a>(&'a Context);
struct HEval<'a>(&'a Context);
struct FEval<'a>(&'a Context);
struct WzEval<'a>(&'a Context);

impl Evaluate for PlaneEval<'_> {
    type Value = PlaneElement;

    fn scalar(&self, c: CycScalar) -> PlaneElement {
        PlaneElement::scalar(&self.0.field, c)
    }
    fn generator(&self, name: &str) -> Option<PlaneElement> {
        match name {
            "x" => Some(self.0.plane.x()),
            "y" => Some(self.0.plane.y()),
            _ => None,
        }
    }
    fn invertible(&self, name: &str) -> bool {
        matches!(name, "x" | "y")
    }
    fn order(&self) -> u32 {
        self.0.n()
    }
    fn add(&self, a: &PlaneElement, b: &PlaneElement) -> PlaneElement {
        a.add(b)
    }
    fn sub(&self, a: &PlaneElement, b: &PlaneElement) -> PlaneElement {
        a.sub(b)
    }
    fn mul(&self, a: &PlaneElement, b: &PlaneElement) -> PlaneElement {
        a.mul(b)
    }
    fn field(&self) -> &Arc<CycField> {
        &self.0.field
    }
    fn algebra_name(&self) -> &'static str {
        "plane"
    }
}

impl Evaluate for HEval<'_> {
    type Value = HElement;

    fn scalar(&self, c: CycScalar) -> HElement {
        self.0.pair.h.scalar(c)
    }
    fn generator(&self, name: &str) -> Option<HElement> {
        let h = &self.0.pair.h;
        match name {
            "K" => Some(h.k()),
            "Xp" => Some(h.xp()),
            "Xm" => Some(h.xm()),
            _ => None,
        }
    }
    fn invertible(&self, name: &str) -> bool {
        name == "K"
    }
    fn order(&self) -> u32 {
        self.0.n()
    }
    fn add(&self, a: &HElement, b: &HElement) -> HElement {
        a.add(b)
    }
    fn sub(&self, a: &HElement, b: &HElement) -> HElement {
        a.sub(b)
    }
    fn mul(&self, a: &HElement, b: &HElement) -> HElement {
        self.0.pair.h.mul(a, b)
    }
    fn field(&self) -> &Arc<CycField> {
        &self.0.field
    }
    fn algebra_name(&self) -> &'static str {
        "H"
    }
}

impl Evaluate for FEval<'_> {
    type Value = FElement;

    fn scalar(&self, c: CycScalar) -> FElement {
        self.0.pair.f.scalar(c)
    }
    fn generator(&self, name: &str) -> Option<FElement> {
        let f = &self.0.pair.f;
        match name {
            "a" => Some(f.a()),
            "b" => Some(f.b()),
            "c" => Some(f.c()),
            "d" => Some(f.d()),
            _ => None,
        }
    }
    fn invertible(&self, _name: &str) -> bool {
        false
    }
    fn order(&self) -> u32 {
        self.0.n()
    }
    fn add(&self, a: &FElement, b: &FElement) -> FElement {
        a.add(b)
    }
    fn sub(&self, a: &FElement, b: &FElement) -> FElement {
        a.sub(b)
    }
    fn mul(&self, a: &FElement, b: &FElement) -> FElement {
        self.0.pair.f.mul(a, b)
    }
    fn field(&self) -> &Arc<CycField> {
        &self.0.field
    }
    fn algebra_name(&self) -> &'static str {
        "F"
    }
}

impl Evaluate for WzEval<'_> {
    type Value = WzForm;

    fn scalar(&self, c: CycScalar) -> WzForm {
        WzForm::function(&PlaneElement::scalar(&self.0.field, c))
    }
    fn generator(&self, name: &str) -> Option<WzForm> {
        let field = &self.0.field;
        match name {
            "x" => Some(WzForm::function(&self.0.plane.x())),
            "y" => Some(WzForm::function(&self.0.plane.y())),
            "dx" => Some(WzForm::dx(field)),
            "dy" => Some(WzForm::dy(field)),
            _ => None,
        }
    }
    fn invertible(&self, name: &str) -> bool {
        matches!(name, "x" | "y")
    }
    fn order(&self) -> u32 {
        self.0.n()
    }
    fn add(&self, a: &WzForm, b: &WzForm) -> WzForm {
        a.add(b)
    }
    fn sub(&self, a: &WzForm, b: &WzForm) -> WzForm {
        a.sub(b)
    }
    fn mul(&self, a: &WzForm, b: &WzForm) -> WzForm {
        self.0.wz.mul(a, b)
    }
    fn field(&self) -> &Arc<CycField> {
        &self.0.field
    }
    fn algebra_name(&self) -> &'static str {
        "wz"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms_n3() {
        let ctx = Context::new(3).unwrap();
        let yx = ctx.parse(Algebra::Plane, "y*x").unwrap();
        assert_eq!(yx, ctx.parse(Algebra::Plane, "q^2*x*y").unwrap());
        assert_eq!(ctx.parse(Algebra::Plane, "x^-1").unwrap(), ctx.parse(Algebra::Plane, "x^2").unwrap());
        assert_eq!(ctx.parse(Algebra::H, "K^-1*K").unwrap(), ctx.parse(Algebra::H, "1").unwrap());
        let h = &ctx.pair.h;
        let inv = (CycScalar::q(&ctx.field) - CycScalar::qpow(&ctx.field, -1)).inv().unwrap();
        let expected = h.mul(&h.xm(), &h.xp()).add(&h.k().sub(&h.mul(&h.k(), &h.k())).scale(&inv));
        assert_eq!(ctx.parse(Algebra::H, "Xp*Xm").unwrap(), Element::H(expected));
        assert!(ctx.parse(Algebra::Plane, "x*a").is_err());
        assert!(ctx.parse(Algebra::H, "Xp^-1").is_err());
        assert!(ctx.parse(Algebra::Wz, "dx^-1").is_err());
        assert!(ctx.parse(Algebra::F, "b^-2").is_err());
        assert_eq!(ctx.parse(Algebra::Wz, "x*dx").unwrap().to_string(), "x*dx");
    }
}
