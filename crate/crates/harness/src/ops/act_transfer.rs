//! Acts over `S × T` with `T` finite, viewed as `S`-acts via `as = a(s, 1_T)`.

use coact_core::congruence::congruence_generating_set;
use coact_core::constructions::direct_product;
use coact_core::oracle::bfs_closure;
use coact_core::{FiniteMonoid, FiniteRightAct, Pair, Partition, Subact};

use crate::error::{HarnessError, Result};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "prop65_act_transfer";
pub const ANCHOR: &str = "an S × T-act A is an S-act by as = a(s,1_T); X generates A over S × T iff \
{x(1_S,t)} generates it over S, and H' = {(x_{u(1_S,c't)}c, x_{v(1_S,d't)}d) : (x_u(c,c'), x_v(d,d')) ∈ H, t ∈ T} \
presents it over S, while H' = {(x_u(s,1_T), x_v(t,1_T)) : (x_u s, x_v t) ∈ H} ∪ {(x_u(1_S,t), x_{u(1_S,t)})} \
presents it over S × T";

/// `A = F_{S×T}(X)/⟨h⟩` with `|X| = generators`; `h` indexes the free act,
/// `(x, (s,t))` having index `x·|S||T| + s·|T| + t`.
pub fn prop65_act_transfer(
    s: &FiniteMonoid,
    t: &FiniteMonoid,
    generators: usize,
    h: &[Pair],
) -> Result<ConstructionReport> {
    if generators == 0 {
        return Err(HarnessError::param("generators", "must be positive"));
    }
    let p = direct_product(s, t);
    let (ns, nt) = (s.size(), t.size());
    let pair_of = |a: usize, b: usize| a * nt + b;
    let basis: Vec<String> = (1..=generators).map(|i| format!("x{i}")).collect();
    let free_p = FiniteRightAct::free(&p, &basis);
    for &(x, y) in h {
        if x >= free_p.size() || y >= free_p.size() {
            return Err(HarnessError::param("H", "element outside the free act"));
        }
    }
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|S| = {ns}, |T| = {nt}, |X| = {generators}, H = {:?}",
            pair_labels(&free_p, h)
        ),
    );
    let rho = bfs_closure(&free_p, h);
    let a = free_p.quotient(&rho)?;
    let phi: Vec<usize> = s.elements().map(|x| pair_of(x, t.identity())).collect();
    let a_s = a.restrict_scalars(s, &phi)?;
    let gen_class = |x: usize, q: usize| rho.class_of(FiniteRightAct::free_element(&p, x, q));

    // Part (i).
    let u: Vec<usize> = (0..generators)
        .map(|x| gen_class(x, p.identity()))
        .collect();
    let whole = Subact::whole(&a);
    report.require(
        Subact::generated(&a, &u) == whole,
        "X generates A over S × T",
        labels(&a, &u),
    );
    let mut x_prime: Vec<usize> = (0..generators)
        .flat_map(|x| t.elements().map(move |c| (x, c)))
        .map(|(x, c)| gen_class(x, pair_of(s.identity(), c)))
        .collect();
    x_prime.sort_unstable();
    x_prime.dedup();
    let whole_s = Subact::whole(&a_s);
    report.require(
        Subact::generated(&a_s, &x_prime) == whole_s,
        "{x(1_S,t)} generates A over S",
        labels(&a, &x_prime),
    );
    let pos = |c: usize| x_prime.binary_search(&c).expect("closed under (1_S, t)");

    // (⇐): a presentation over S from one over S × T.
    let basis_s: Vec<String> = x_prime
        .iter()
        .map(|&c| format!("x{}", a.label(c)))
        .collect();
    let free_s = FiniteRightAct::free(s, &basis_s);
    let psi = |e: usize| a_s.act(x_prime[e / ns], e % ns);
    let ker_psi = Partition::from_key(free_s.size(), psi);
    let mut h_s: Vec<Pair> = Vec::new();
    for &(l, r) in h {
        let (xu, cu) = (l / p.size(), l % p.size());
        let (xv, cv) = (r / p.size(), r % p.size());
        let (c, c2) = (cu / nt, cu % nt);
        let (d, d2) = (cv / nt, cv % nt);
        for tt in t.elements() {
            let lu = pos(gen_class(xu, pair_of(s.identity(), t.mul(c2, tt))));
            let lv = pos(gen_class(xv, pair_of(s.identity(), t.mul(d2, tt))));
            h_s.push((
                FiniteRightAct::free_element(s, lu, c),
                FiniteRightAct::free_element(s, lv, d),
            ));
        }
    }
    h_s.sort_unstable();
    h_s.dedup();
    let generated = bfs_closure(&free_s, &h_s);
    report.require(
        generated == ker_psi,
        "ker ψ = ⟨H'⟩ on F_S(X')",
        partition_mismatch(&free_s, &generated, &ker_psi),
    );

    // (⇒): a presentation over S × T from one over S.
    let theta_gens = congruence_generating_set(&free_s, &ker_psi);
    let free_p2 = FiniteRightAct::free(&p, &basis_s);
    let np = p.size();
    let mut h_p: Vec<Pair> = theta_gens
        .iter()
        .map(|&(l, r)| {
            (
                FiniteRightAct::free_element(&p, l / ns, pair_of(l % ns, t.identity())),
                FiniteRightAct::free_element(&p, r / ns, pair_of(r % ns, t.identity())),
            )
        })
        .collect();
    for (i, &xu) in x_prime.iter().enumerate() {
        for tt in t.elements() {
            let target = pos(a.act(xu, pair_of(s.identity(), tt)));
            h_p.push((
                FiniteRightAct::free_element(&p, i, pair_of(s.identity(), tt)),
                FiniteRightAct::free_element(&p, target, p.identity()),
            ));
        }
    }
    h_p.sort_unstable();
    h_p.dedup();
    let ker_psi2 = Partition::from_key(free_p2.size(), |e| a.act(x_prime[e / np], e % np));
    let generated2 = bfs_closure(&free_p2, &h_p);
    report.require(
        generated2 == ker_psi2,
        "ker ψ = ⟨H'⟩ on F_{S×T}(X')",
        partition_mismatch(&free_p2, &generated2, &ker_psi2),
    );

    report.artifact("A_size", a.size());
    report.artifact("X_prime", labels(&a, &x_prime));
    report.artifact("H_prime_over_S", pair_labels(&free_s, &h_s));
    report.artifact("H_over_S", pair_labels(&free_s, &theta_gens));
    report.artifact("H_prime_over_SxT", pair_labels(&free_p2, &h_p));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::*;

    #[test]
    fn trivial_t() {
        let s = u2();
        let r = prop65_act_transfer(&s, &trivial(), 1, &[(0, 1)]).unwrap();
        assert!(r.verified, "{:?}", r.failures);
    }

    #[test]
    fn free_act_has_trivial_kernels() {
        let r = prop65_act_transfer(&u2(), &z2(), 1, &[]).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["A_size"], 4);
        assert_eq!(r.artifacts["H_prime_over_S"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn one_pair_over_u2_z2() {
        let r = prop65_act_transfer(&u2(), &z2(), 1, &[(0, 3)]).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        let r = prop65_act_transfer(&u2(), &z2(), 2, &[(1, 4)]).unwrap();
        assert!(r.verified, "{:?}", r.failures);
    }
}
