//! Retractions onto monoid subsemigroups.

use coact_core::constructions::direct_product;
use coact_core::{ElementId, FiniteMonoid};
use serde_json::json;

use super::check_element;
use crate::error::{HarnessError, Result};
use crate::report::ConstructionReport;
use crate::support::elem_labels;

pub const NAME: &str = "retraction_checks";
pub const ANCHOR: &str =
    "θ: S → S is a retraction onto T when (xy)θ = xθ·yθ, Im θ = T and θ|_T is the identity; \
built-ins: a ↦ ea for an ideal with identity e, and (s, t) ↦ (s, 1_T) on a direct product";

/// Checks that `theta` (a table indexed by element) retracts `s` onto `t`.
pub fn retraction_check(
    s: &FiniteMonoid,
    t: &[ElementId],
    theta: &[ElementId],
    instance: &str,
) -> Result<ConstructionReport> {
    if theta.len() != s.size() {
        return Err(HarnessError::param(
            "theta",
            format!("{} images for {} elements", theta.len(), s.size()),
        ));
    }
    for &x in theta.iter().chain(t) {
        check_element(s, x, "theta")?;
    }
    let mut report = ConstructionReport::new(NAME, ANCHOR, instance);
    let mut t: Vec<ElementId> = t.to_vec();
    t.sort_unstable();
    t.dedup();
    report.require(
        s.is_subsemigroup(&t),
        "T is a subsemigroup",
        elem_labels(s, &t),
    );
    let mut morphism_failure = None;
    'outer: for x in s.elements() {
        for y in s.elements() {
            if theta[s.mul(x, y)] != s.mul(theta[x], theta[y]) {
                morphism_failure = Some([s.label(x), s.label(y)]);
                break 'outer;
            }
        }
    }
    report.require(
        morphism_failure.is_none(),
        "θ is a morphism",
        morphism_failure,
    );
    let mut image: Vec<ElementId> = theta.to_vec();
    image.sort_unstable();
    image.dedup();
    report.require(
        image == t,
        "Im θ = T",
        json!({ "image": elem_labels(s, &image), "T": elem_labels(s, &t) }),
    );
    for &x in &t {
        report.require(theta[x] == x, "θ fixes T", s.label(x));
    }
    report.artifact("T", elem_labels(s, &t));
    report.artifact(
        "theta",
        s.elements()
            .map(|x| [s.label(x), s.label(theta[x])])
            .collect::<Vec<_>>(),
    );
    Ok(report.finish())
}

/// `a ↦ ea` onto a two-sided ideal `ideal` whose identity is `e`.
pub fn ideal_retraction(s: &FiniteMonoid, ideal: &[ElementId]) -> Result<ConstructionReport> {
    for &x in ideal {
        check_element(s, x, "ideal")?;
    }
    let mask = s.mask(ideal);
    for x in ideal {
        for y in s.elements() {
            if !mask[s.mul(*x, y)] || !mask[s.mul(y, *x)] {
                return Err(HarnessError::Precondition(format!(
                    "{} is not a two-sided ideal",
                    elem_labels(s, ideal).join(",")
                )));
            }
        }
    }
    let e = s
        .identity_of(ideal)
        .ok_or_else(|| HarnessError::Precondition("the ideal has no identity".into()))?;
    let theta: Vec<ElementId> = s.elements().map(|a| s.mul(e, a)).collect();
    let mut r = retraction_check(
        s,
        ideal,
        &theta,
        &format!(
            "a ↦ {}·a onto an ideal of order {}",
            s.label(e),
            ideal.len()
        ),
    )?;
    r.artifact("e", s.label(e));
    Ok(r)
}

/// `(x, y) ↦ (x, 1_T)` on `S × T`.
pub fn product_projection(s: &FiniteMonoid, t: &FiniteMonoid) -> Result<ConstructionReport> {
    let p = direct_product(s, t);
    let nt = t.size();
    let theta: Vec<ElementId> = p.elements().map(|x| (x / nt) * nt + t.identity()).collect();
    let image: Vec<ElementId> = s.elements().map(|x| x * nt + t.identity()).collect();
    retraction_check(
        &p,
        &image,
        &theta,
        &format!(
            "(s, t) ↦ (s, 1) on a product of orders {} and {}",
            s.size(),
            nt
        ),
    )
}

/// The identity map, a retraction onto the whole monoid.
pub fn identity_retraction(s: &FiniteMonoid) -> Result<ConstructionReport> {
    let all: Vec<ElementId> = s.elements().collect();
    retraction_check(s, &all, &all, "identity map")
}
