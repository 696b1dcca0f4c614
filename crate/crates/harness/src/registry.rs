//! Check names, their parameters, and dispatch.

use coact_core::constructions::{adjoin_identity, direct_product, BrandtMonoid, SandwichMatrix};
use coact_core::FiniteRightAct;

use crate::error::{HarnessError, Result};
use crate::ops::brandt::{BrandtCase, BrandtCongruenceData};
use crate::ops::*;
use crate::params::{parse_row, Params, Resolver};
use crate::report::ConstructionReport;

type Runner = fn(&Params, Resolver) -> Result<ConstructionReport>;

pub struct CheckInfo {
    pub name: &'static str,
    pub params: &'static str,
    run: Runner,
}

const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        name: annihilator::NAME,
        params: "S X a",
        run: run_thm32,
    },
    CheckInfo {
        name: rees::NAME,
        params: "G [P | rows cols] samples seed",
        run: run_prop34,
    },
    CheckInfo {
        name: brandt_zero::NAME,
        params: "G n i g",
        run: run_prop35,
    },
    CheckInfo {
        name: ebr::NAME,
        params: "G theta radius samples seed",
        run: run_prop36,
    },
    CheckInfo {
        name: retraction::NAME,
        params: "S kind=ideal|product|identity [I | T]",
        run: run_retraction,
    },
    CheckInfo {
        name: identity::NAME,
        params: "M H a",
        run: run_prop43,
    },
    CheckInfo {
        name: jclass::NAME,
        params: "S j H a b",
        run: run_thm48,
    },
    CheckInfo {
        name: tilde::NAME,
        params: "S e E [Mset] samples seed",
        run: run_prop49,
    },
    CheckInfo {
        name: tilde::BR_NAME,
        params: "M theta radius",
        run: run_prop49_br,
    },
    CheckInfo {
        name: brandt::NORMALIZE,
        params: "M n K bullet",
        run: run_lemma51,
    },
    CheckInfo {
        name: brandt::TRANSFER,
        params: "M n A bullet",
        run: run_lemma52,
    },
    CheckInfo {
        name: brandt::ANNIHILATOR,
        params: "M n [K | case A B i] bullet a",
        run: run_lemma53,
    },
    CheckInfo {
        name: brandt::INTERSECTION,
        params: "M n [K | case A B i] bullet a b",
        run: run_lemma54,
    },
    CheckInfo {
        name: zero::NAME,
        params: "M H a b",
        run: run_cor56,
    },
    CheckInfo {
        name: product::NAME,
        params: "n_max radius cap samples seed",
        run: run_ex62,
    },
    CheckInfo {
        name: act_transfer::NAME,
        params: "S T X H",
        run: run_prop65,
    },
    CheckInfo {
        name: fuzz::NAME,
        params: "seed count max_size inject_fault",
        run: run_fuzz,
    },
    CheckInfo {
        name: fuzz::ORACLE_NAME,
        params: "seed count max_monoid max_act max_pairs",
        run: run_oracle,
    },
];

pub fn checks() -> &'static [CheckInfo] {
    CHECKS
}

pub fn available_checks() -> Vec<String> {
    CHECKS.iter().map(|c| c.name.to_string()).collect()
}

/// Exact names, or a prefix up to the first `_` such as `ex62`.
pub fn resolve_check(name: &str) -> Result<&'static CheckInfo> {
    if let Some(c) = CHECKS.iter().find(|c| c.name == name) {
        return Ok(c);
    }
    let prefixed: Vec<&CheckInfo> = CHECKS
        .iter()
        .filter(|c| c.name.split('_').next() == Some(name))
        .collect();
    match prefixed.as_slice() {
        [c] => Ok(c),
        _ => Err(HarnessError::UnknownCheck {
            name: name.to_string(),
            available: available_checks(),
        }),
    }
}

pub fn run_check(name: &str, params: &Params, resolve: Resolver) -> Result<ConstructionReport> {
    (resolve_check(name)?.run)(params, resolve)
}

fn run_thm32(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let s = p.monoid("S", r)?;
    annihilator::thm32_annihilator_gens(&s, &p.pairs(&s, "X")?, p.element(&s, "a")?)
}

fn run_prop34(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let g = p.monoid("G", r)?;
    let sandwich = match p.get("P") {
        Some(text) => {
            let rows: Vec<&str> = text.split(';').collect();
            let mut entries = Vec::new();
            let mut cols = None;
            for row in &rows {
                let items: Vec<&str> = row.split(',').map(str::trim).collect();
                if cols.is_some_and(|c| c != items.len()) {
                    return Err(HarnessError::param("P", "rows differ in length"));
                }
                cols = Some(items.len());
                for l in items {
                    entries.push(Some(g.element(l).map_err(|_| {
                        HarnessError::param("P", format!("no element {l:?}"))
                    })?));
                }
            }
            SandwichMatrix::new(rows.len(), cols.unwrap_or(0), entries)?
        }
        None => SandwichMatrix::constant(p.number("rows", 2)?, p.number("cols", 2)?, g.identity())?,
    };
    rees::prop34_rees_check(&g, sandwich, p.number("samples", 20)?, p.number("seed", 1)?)
}

fn run_prop35(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let g = p.monoid("G", r)?;
    let n = p.number("n", 2)?;
    let i = p.row("i", n, Some(1))?;
    let gen = match p.get("g") {
        Some(_) => p.element(&g, "g")?,
        None => g.identity(),
    };
    brandt_zero::prop35_brandt_zero_closure(&g, n, i, gen)
}

fn run_prop36(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let g = p.monoid("G", r)?;
    let theta = p.endomorphism(&g, "theta")?;
    ebr::prop36_ebr_check(
        &g,
        theta,
        p.number("radius", 12)?,
        p.number("samples", 20)?,
        p.number("seed", 1)?,
    )
}

fn run_retraction(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let s = p.monoid("S", r)?;
    match p.get("kind").unwrap_or("identity") {
        "ideal" => retraction::ideal_retraction(&s, &p.elements(&s, "I")?),
        "product" => retraction::product_projection(&s, &p.monoid("T", r)?),
        "identity" => retraction::identity_retraction(&s),
        k => Err(HarnessError::param(
            "kind",
            format!("{k:?} is not ideal, product or identity"),
        )),
    }
}

fn run_prop43(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let m = p.monoid("M", r)?;
    let m1 = adjoin_identity(&m);
    identity::prop43_identity_transfer(&m, &p.pairs(&m1, "H")?, p.element(&m, "a")?)
}

fn run_thm48(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let s = p.monoid("S", r)?;
    jclass::thm48_jclass_constructions(
        &s,
        p.element(&s, "j")?,
        &p.pairs(&s, "H")?,
        p.element(&s, "a")?,
        p.element(&s, "b")?,
    )
}

fn run_prop49(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let s = p.monoid("S", r)?;
    let e_set = match p.get("E") {
        Some(_) => p.elements(&s, "E")?,
        None => s.idempotents(),
    };
    let m_set = match p.get("Mset") {
        Some(_) => Some(p.elements(&s, "Mset")?),
        None => None,
    };
    tilde::prop49_conditions_check(
        &s,
        p.element(&s, "e")?,
        &e_set,
        m_set.as_deref(),
        p.number("samples", 10)?,
        p.number("seed", 1)?,
    )
}

fn run_prop49_br(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let m = p.monoid("M", r)?;
    let theta = p.endomorphism(&m, "theta")?;
    tilde::prop49_bruck_reilly(&m, theta, p.number("radius", 6)?)
}

fn brandt_setup(
    p: &Params,
    r: Resolver,
) -> Result<(coact_core::FiniteMonoid, usize, BrandtMonoid, usize)> {
    let m = p.monoid("M", r)?;
    // `I` is accepted as another name for the index count.
    let n = match p.get("I") {
        Some(_) => p.number("I", 2)?,
        None => p.number("n", 2)?,
    };
    let br = BrandtMonoid::new(&m, n, true)?;
    let bullet = p.row("bullet", n, Some(1))?;
    Ok((m, n, br, bullet))
}

fn quadruples(
    p: &Params,
    m: &coact_core::FiniteMonoid,
    n: usize,
) -> Result<Vec<(usize, usize, usize, usize)>> {
    p.groups("A", 4)?
        .iter()
        .map(|g| {
            let el = |l: &str| {
                m.element(l)
                    .map_err(|_| HarnessError::param("A", format!("no element {l:?}")))
            };
            Ok((
                parse_row("A", &g[0], n)?,
                el(&g[1])?,
                parse_row("A", &g[2], n)?,
                el(&g[3])?,
            ))
        })
        .collect()
}

fn brandt_data(
    p: &Params,
    m: &coact_core::FiniteMonoid,
    n: usize,
    br: &BrandtMonoid,
    bullet: usize,
) -> Result<BrandtCongruenceData> {
    if p.get("K").is_some() {
        let k = p.pairs_with_bullet(br.monoid(), "K", bullet)?;
        return brandt::normalize(br, &k, bullet);
    }
    let case = match p.get("case").unwrap_or("ii") {
        "i" => return Ok(BrandtCongruenceData::universal(bullet)),
        "ii" => BrandtCase::IdentityAlone,
        "iii" => BrandtCase::IdentityLinked,
        c => {
            return Err(HarnessError::param(
                "case",
                format!("{c:?} is not i, ii or iii"),
            ))
        }
    };
    let b = p
        .groups("B", 2)?
        .iter()
        .map(|g| {
            let d = m
                .element(&g[1])
                .map_err(|_| HarnessError::param("B", format!("no element {:?}", g[1])))?;
            Ok((parse_row("B", &g[0], n)?, d))
        })
        .collect::<Result<Vec<_>>>()?;
    let index_i = match p.get("i") {
        Some(_) => Some(p.row("i", n, None)?),
        None => None,
    };
    let data = BrandtCongruenceData {
        case,
        a: quadruples(p, m, n)?,
        b,
        bullet,
        index_i,
    };
    data.check(br)?;
    Ok(data)
}

fn run_lemma51(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let (m, n, br, bullet) = brandt_setup(p, r)?;
    let k = p.pairs_with_bullet(br.monoid(), "K", bullet)?;
    Ok(brandt::lemma51_normalize(&m, n, &k, bullet)?.0)
}

fn run_lemma52(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let (m, n, _, bullet) = brandt_setup(p, r)?;
    brandt::lemma52_transfer(&m, n, &quadruples(p, &m, n)?, bullet)
}

fn run_lemma53(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let (m, n, br, bullet) = brandt_setup(p, r)?;
    let data = brandt_data(p, &m, n, &br, bullet)?;
    let a = p.element_with_bullet(br.monoid(), "a", bullet)?;
    brandt::lemma53_annihilator(&m, n, &data, a)
}

fn run_lemma54(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let (m, n, br, bullet) = brandt_setup(p, r)?;
    let data = brandt_data(p, &m, n, &br, bullet)?;
    let a = p.element_with_bullet(br.monoid(), "a", bullet)?;
    let b = p.element_with_bullet(br.monoid(), "b", bullet)?;
    brandt::lemma54_intersection(&m, n, &data, a, b)
}

fn run_cor56(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let m = p.monoid("M", r)?;
    zero::cor56_zero_transfer(
        &m,
        &p.pairs(&m, "H")?,
        p.element(&m, "a")?,
        p.element(&m, "b")?,
    )
}

fn run_ex62(p: &Params, _: Resolver) -> Result<ConstructionReport> {
    product::ex62_product_check(
        p.number("n_max", 3)?,
        p.number("radius", 10)?,
        p.number("cap", 3)?,
        p.number("samples", 50)?,
        p.number("seed", 1)?,
    )
}

fn run_prop65(p: &Params, r: Resolver) -> Result<ConstructionReport> {
    let s = p.monoid("S", r)?;
    let t = p.monoid("T", r)?;
    let k = p.number("X", 1)?;
    let basis: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let free = FiniteRightAct::free(&direct_product(&s, &t), &basis);
    act_transfer::prop65_act_transfer(&s, &t, k, &p.act_pairs(&free, "H")?)
}

fn run_fuzz(p: &Params, _: Resolver) -> Result<ConstructionReport> {
    Ok(fuzz::fuzz_implications(
        p.number("seed", 1)?,
        p.number("count", 50)?,
        p.number("max_size", 7)?,
        p.flag("inject_fault")?,
    ))
}

fn run_oracle(p: &Params, _: Resolver) -> Result<ConstructionReport> {
    Ok(fuzz::oracle_equivalence(
        p.number("seed", 1)?,
        p.number("count", 50)?,
        p.number("max_monoid", 8)?,
        p.number("max_act", 12)?,
        p.number("max_pairs", 4)?,
    ))
}
