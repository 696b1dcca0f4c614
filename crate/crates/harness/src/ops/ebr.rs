//! Principal right ideals and ideal quotients in `EBR(G, θ)¹`, inside a box.

use coact_core::computable::{ComputableMonoid, Element, ExtendedBruckReilly};
use coact_core::constructions::Endomorphism;
use coact_core::FiniteMonoid;
use rand::Rng;
use serde_json::json;

use crate::error::{HarnessError, Result};
use crate::random::rng;
use crate::report::ConstructionReport;

pub const NAME: &str = "prop36_ebr_check";
pub const ANCHOR: &str =
    "in EBR(G, θ)¹ the principal right ideal of (i,g,k) is R_i = {(j,h,l) : j ≥ i}; \
for e = (i,1,i) and a = (p,c,q) with p < i, (eS, a) = (q+i−p, 1, q+i−p)S; (eS, a) = S when a ∈ eS \
and (eS, 1) = eS";

fn first(x: &Element) -> Option<i64> {
    match *x {
        Element::Triple(i, _, _) => Some(i),
        _ => None,
    }
}

pub fn prop36_ebr_check(
    group: &FiniteMonoid,
    theta: Endomorphism,
    radius: usize,
    samples: usize,
    seed: u64,
) -> Result<ConstructionReport> {
    if radius < 3 {
        return Err(HarnessError::param(
            "radius",
            "must be at least 3 to hold the sampled elements",
        ));
    }
    let s = ExtendedBruckReilly::new(group, theta)?;
    let one_g = group.identity();
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!("{} inside the box of radius {radius}", s.describe()),
    );
    report.bound_relative = true;
    let ball = s.ball(radius);

    // Principal right ideals of elements of a small box.
    let mut checked_ideals = 0;
    for x in s.ball(radius.min(2)) {
        let Some(i) = first(&x) else {
            continue;
        };
        let xi = s.inverse(&x);
        for y in &ball {
            let pattern = first(y).is_some_and(|j| j >= i);
            report.require(
                s.in_principal_right_ideal(&x, y) == pattern,
                "xS = R_i by the idempotent test",
                [s.render(&x), s.render(y)],
            );
            if pattern {
                let t = s.multiply(&xi, y);
                report.require(
                    s.multiply(&x, &t) == *y,
                    "x·(x'y) = y for y ∈ R_i",
                    [s.render(&x), s.render(y)],
                );
            }
        }
        for t in &ball {
            let xt = s.multiply(&x, t);
            report.require(
                first(&xt).is_some_and(|j| j >= i),
                "x·t ∈ R_i",
                [s.render(&x), s.render(t)],
            );
        }
        checked_ideals += 1;
    }

    let b = (radius / 3) as i64;
    let mut r = rng(seed, 36);
    let mut cases = Vec::new();
    for _ in 0..samples {
        let i = r.gen_range(-b..=b);
        let p = r.gen_range(i - b..i);
        let q = r.gen_range(-b..=b);
        let c = r.gen_range(0..group.size());
        let e = Element::Triple(i, one_g, i);
        let a = Element::Triple(p, c, q);
        let j = q + i - p;
        let f = Element::Triple(j, one_g, j);
        let in_e = |y: &Element| s.multiply(&e, y) == *y;
        let mut mismatches = Vec::new();
        for t in &ball {
            let lhs = in_e(&s.multiply(&a, t));
            let rhs = s.multiply(&f, t) == *t;
            if lhs != rhs {
                mismatches.push(s.render(t));
            }
        }
        report.require(
            mismatches.is_empty(),
            "(eS, a) = (q+i−p, 1, q+i−p)S on the box",
            json!({ "e": s.render(&e), "a": s.render(&a), "t": mismatches.first() }),
        );
        let ea = s.multiply(&e, &a);
        report.require(
            ball.iter().all(|t| in_e(&s.multiply(&ea, t))),
            "(eS, a) = S for a ∈ eS",
            [s.render(&e), s.render(&ea)],
        );
        report.require(
            ball.iter()
                .all(|t| in_e(t) == first(t).is_some_and(|k| k >= i)),
            "(eS, 1) = eS = R_i",
            [s.render(&e)],
        );
        cases.push(json!({
            "e": s.render(&e),
            "a": s.render(&a),
            "formula_generator": s.render(&f),
        }));
    }
    report.artifact("box_size", ball.len());
    report.artifact("principal_ideals_checked", checked_ideals);
    report.artifact("samples", cases);
    report.note(
        "the monoid is infinite; every comparison is exact on the box and says nothing beyond it",
    );
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::z2;

    #[test]
    fn sample_generator_colon_ideal() {
        let g = z2();
        let s = ExtendedBruckReilly::new(&g, Endomorphism::identity(&g)).unwrap();
        let e = Element::Triple(2, 0, 2);
        let a = Element::Triple(0, 1, 1);
        let f = Element::Triple(3, 0, 3);
        for t in s.ball(6) {
            let at = s.multiply(&a, &t);
            assert_eq!(s.multiply(&e, &at) == at, s.multiply(&f, &t) == t);
        }
    }

    #[test]
    fn small_box_verifies() {
        let g = z2();
        let r = prop36_ebr_check(&g, Endomorphism::identity(&g), 4, 5, 0).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert!(r.bound_relative);
    }

    #[test]
    fn tiny_radius_is_rejected() {
        let g = z2();
        assert!(prop36_ebr_check(&g, Endomorphism::identity(&g), 2, 1, 0).is_err());
    }
}
