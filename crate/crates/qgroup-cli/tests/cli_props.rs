use std::sync::OnceLock;

use proptest::prelude::*;
use qgroup::CycScalar;
use qgroup_cli::algebra::{Algebra, Context, Element};
use qgroup_cli::run_args;

fn ctx() -> &'static Context {
    static CELL: OnceLock<Context> = OnceLock::new();
    CELL.get_or_init(|| Context::new(3).unwrap())
}

/// Sums of products of generators with small rational coefficients.
fn expression(algebra: Algebra) -> impl Strategy<Value = String> {
    let gens: &'static [&'static str] = match algebra {
        Algebra::Plane => &["x", "y", "x^-1", "y^2"],
        Algebra::H => &["K", "K^-1", "Xp", "Xm"],
        Algebra::F => &["a", "b", "c", "d"],
        Algebra::Wz => &["x", "y", "dx", "dy"],
    };
    let coeff = (-5i64..=5, 1i64..=3, 0u32..3).prop_map(|(a, b, k)| format!("({a}/{b})*q^{k}"));
    let monomial = prop::collection::vec(prop::sample::select(gens), 1..=3).prop_map(|g| g.join("*"));
    prop::collection::vec((coeff, monomial), 1..=4).prop_map(|terms| terms.into_iter().map(|(c, m)| format!("{c}*{m}")).collect::<Vec<_>>().join(" + "))
}

fn roundtrip(algebra: Algebra, text: &str) -> Result<(), TestCaseError> {
    let e = ctx().parse(algebra, text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
    let printed = e.to_string();
    let back = ctx().parse(algebra, &printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
    prop_assert_eq!(back, e);
    Ok(())
}

proptest! {
    #[test]
    fn plane_roundtrip(t in expression(Algebra::Plane)) { roundtrip(Algebra::Plane, &t)?; }

    #[test]
    fn h_roundtrip(t in expression(Algebra::H)) { roundtrip(Algebra::H, &t)?; }

    #[test]
    fn f_roundtrip(t in expression(Algebra::F)) { roundtrip(Algebra::F, &t)?; }

    #[test]
    fn wz_roundtrip(t in expression(Algebra::Wz)) { roundtrip(Algebra::Wz, &t)?; }

    #[test]
    fn arbitrary_input_never_panics(t in "[-+*/^() xyqKXpmabcd0-9]{0,20}") {
        for alg in Algebra::ALL {
            if let Err(e) = ctx().parse(alg, &t) {
                prop_assert!(e.position <= t.len());
            }
        }
    }

    #[test]
    fn mul_command_matches_library(a in expression(Algebra::H), b in expression(Algebra::H)) {
        let out = run_args(["qgroup", "mul", "H", a.as_str(), b.as_str()]);
        prop_assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        let c = ctx();
        let want = c.mul(&c.parse(Algebra::H, &a).unwrap(), &c.parse(Algebra::H, &b).unwrap()).unwrap();
        prop_assert_eq!(&v["payload"]["result"], &want.to_json());
        prop_assert_eq!(run_args(["qgroup", "mul", "H", a.as_str(), b.as_str()]), out);
    }
}

#[test]
fn scalars_print_as_q_polynomials() {
    let c = ctx();
    let e = c.parse(Algebra::Plane, "(1/3 + 2*q^2)*x").unwrap();
    let Element::Plane(p) = &e else { unreachable!() };
    let (_, coeff) = p.terms().iter().next().map(|(k, v)| (*k, v.clone())).unwrap();
    assert_eq!(coeff, &CycScalar::from_int(&c.field, 1) * &CycScalar::from_int(&c.field, 3).inv().unwrap() + CycScalar::qpow(&c.field, 2).scale_int(2));
    assert_eq!(c.parse(Algebra::Plane, &coeff.to_string()).unwrap(), Element::Plane(qgroup::PlaneElement::scalar(&c.field, coeff)));
}

#[test]
fn mixing_algebras_is_an_error() {
    let out = run_args(["qgroup", "normalize", "plane", "x*K"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("not a generator of plane"), "{}", out.stderr);
    assert_eq!(run_args(["qgroup", "normalize", "H", "Xm^-1"]).code, 2);
    assert_eq!(run_args(["qgroup", "normalize", "wz", "dy^-2"]).code, 2);
}

#[test]
fn larger_roots_of_unity() {
    let out = run_args(["qgroup", "curvature", "y*dx", "--N", "5", "--format", "text"]);
    assert_eq!(out.code, 0);
    let out = run_args(["qgroup", "check", "diffops", "--N", "5"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.contains("n3_forms"));
}
