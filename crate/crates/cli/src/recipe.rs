//! Monoid specifications: Cayley tables, builtin names and JSON recipe trees.
//!
//! A recipe is `{"base": <spec>, "op": <op>, "params": {...}}` where a spec
//! is a builtin name (`trivial`, `Z2`, `U2`, `bicyclic`, `free{a,b}`, ...),
//! `{"table": "<cayley text>"}`, `{"file": "<path>"}` or another recipe.
//!
//! | op | params |
//! |---|---|
//! | `adjoin_identity`, `adjoin_zero` | none |
//! | `product` | `with`: spec |
//! | `rees` | `I`, `Lambda`, `P` (Λ rows of labels or null), `zero`, `adjoin_one` |
//! | `brandt` | `I`, `adjoin_one` (default true) |
//! | `bruck_reilly`, `ebr` | `theta`: `"identity"`, `"trivial"` or a list of labels |

use std::path::{Path, PathBuf};

use coact_core::computable::{
    BruckReilly, ComputableMonoid, Element, ExtendedBruckReilly, FiniteAsComputable, FreeMonoid,
    ProductMonoid, WithIdentity, WithZero,
};
use coact_core::constructions::{
    adjoin_identity, adjoin_zero, brandt, direct_product, Endomorphism, ReesMatrixMonoid,
    SandwichMatrix,
};
use coact_core::monoid::builtin;
use coact_core::FiniteMonoid;
use serde_json::Value;

use crate::cayley::parse_table;
use crate::error::{CliError, Result};

/// Default for `COACT_MAX_ELEMENTS`.
pub const DEFAULT_MAX_ELEMENTS: usize = 5000;

#[derive(Debug)]
pub enum Built {
    Finite(FiniteMonoid),
    Computable(Box<dyn ComputableMonoid>),
}

impl Built {
    pub fn finite(self, what: &str) -> Result<FiniteMonoid> {
        match self {
            Built::Finite(m) => Ok(m),
            Built::Computable(m) => Err(CliError::Recipe(format!(
                "{what} needs a finite monoid, got {}",
                m.describe()
            ))),
        }
    }

    fn computable(self) -> Box<dyn ComputableMonoid> {
        match self {
            Built::Finite(m) => Box::new(FiniteAsComputable::new(&m)),
            Built::Computable(m) => m,
        }
    }
}

/// Builds monoids from specs, relative to a directory for `file` references.
pub struct Loader {
    pub cap: usize,
    pub dir: PathBuf,
}

fn recipe_err(msg: impl Into<String>) -> CliError {
    CliError::Recipe(msg.into())
}

fn check_cap(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(coact_core::Error::TooLarge { size, cap }.into());
    }
    Ok(())
}

impl Loader {
    pub fn new(cap: usize) -> Self {
        Loader {
            cap,
            dir: PathBuf::from("."),
        }
    }

    /// Reads a spec file: JSON if it starts with `{` or `"`, a Cayley table
    /// otherwise.
    pub fn load_file(&self, path: &Path) -> Result<Built> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(&path.display().to_string(), e))?;
        let inner = Loader {
            cap: self.cap,
            dir: path
                .parent()
                .map_or_else(|| PathBuf::from("."), Path::to_path_buf),
        };
        inner.parse_text(&text)
    }

    pub fn parse_text(&self, text: &str) -> Result<Built> {
        let t = text.trim_start();
        if t.starts_with('{') || t.starts_with('"') {
            let v: Value = serde_json::from_str(text)
                .map_err(|e| CliError::parse(e.line(), e.column(), e.to_string()))?;
            self.build(&v)
        } else {
            Ok(Built::Finite(parse_table(text, self.cap)?))
        }
    }

    /// A command-line argument: an existing file, or else a spec string.
    pub fn load_arg(&self, arg: &str) -> Result<Built> {
        let path = Path::new(arg);
        if path.is_file() {
            self.load_file(path)
        } else {
            self.named(arg)
        }
    }

    pub fn named(&self, name: &str) -> Result<Built> {
        if name == "bicyclic" {
            return Ok(Built::Computable(Box::new(BruckReilly::bicyclic())));
        }
        if let Some(rest) = name.strip_prefix("free{").and_then(|r| r.strip_suffix('}')) {
            let letters: Vec<&str> = rest
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            return Ok(Built::Computable(Box::new(FreeMonoid::new(&letters)?)));
        }
        let m = builtin::by_name(name).ok_or_else(|| {
            recipe_err(format!(
                "unknown monoid {name:?}; builtins are trivial, Z<n>, U2, nil3, I<n>, T<n>, bicyclic, free{{a,b,...}}, or give a file path"
            ))
        })?;
        check_cap(m.size(), self.cap)?;
        Ok(Built::Finite(m))
    }

    pub fn build(&self, v: &Value) -> Result<Built> {
        match v {
            Value::String(name) => self.named(name),
            Value::Object(map) => {
                if let Some(t) = map.get("table") {
                    let text = t
                        .as_str()
                        .ok_or_else(|| recipe_err("`table` must be a string"))?;
                    return Ok(Built::Finite(parse_table(text, self.cap)?));
                }
                if let Some(f) = map.get("file") {
                    let f = f
                        .as_str()
                        .ok_or_else(|| recipe_err("`file` must be a string"))?;
                    return self.load_file(&self.dir.join(f));
                }
                let op = map
                    .get("op")
                    .and_then(Value::as_str)
                    .ok_or_else(|| recipe_err("a recipe needs `op` (or `table` / `file`)"))?;
                let base = self.build(
                    map.get("base")
                        .ok_or_else(|| recipe_err(format!("`{op}` needs a `base`")))?,
                )?;
                let empty = serde_json::Map::new();
                let params = match map.get("params") {
                    None => &empty,
                    Some(Value::Object(p)) => p,
                    Some(_) => return Err(recipe_err("`params` must be an object")),
                };
                self.apply(op, base, params)
            }
            _ => Err(recipe_err("a spec is a builtin name or an object")),
        }
    }

    fn apply(&self, op: &str, base: Built, p: &serde_json::Map<String, Value>) -> Result<Built> {
        let usize_param = |key: &str, default: Option<usize>| -> Result<usize> {
            match p.get(key) {
                None => default.ok_or_else(|| recipe_err(format!("`{op}` needs `{key}`"))),
                Some(v) => v
                    .as_u64()
                    .filter(|&n| n > 0)
                    .map(|n| n as usize)
                    .ok_or_else(|| recipe_err(format!("`{key}` must be a positive integer"))),
            }
        };
        let bool_param = |key: &str, default: bool| -> Result<bool> {
            match p.get(key) {
                None => Ok(default),
                Some(v) => v
                    .as_bool()
                    .ok_or_else(|| recipe_err(format!("`{key}` must be true or false"))),
            }
        };
        match op {
            "adjoin_identity" => Ok(match base {
                Built::Finite(m) => {
                    check_cap(m.size() + 1, self.cap)?;
                    Built::Finite(adjoin_identity(&m))
                }
                Built::Computable(m) => Built::Computable(Box::new(WithIdentity::new(m))),
            }),
            "adjoin_zero" => Ok(match base {
                Built::Finite(m) => {
                    check_cap(m.size() + 1, self.cap)?;
                    Built::Finite(adjoin_zero(&m))
                }
                Built::Computable(m) => Built::Computable(Box::new(WithZero::new(m))),
            }),
            "product" => {
                let other = self.build(p.get("with").ok_or_else(|| recipe_err("`product` needs `with`"))?)?;
                Ok(match (base, other) {
                    (Built::Finite(s), Built::Finite(t)) => {
                        check_cap(s.size().saturating_mul(t.size()), self.cap)?;
                        Built::Finite(direct_product(&s, &t))
                    }
                    (s, t) => Built::Computable(Box::new(ProductMonoid::new(s.computable(), t.computable()))),
                })
            }
            "brandt" => {
                let m = base.finite("brandt")?;
                let n = usize_param("I", None)?;
                let one = bool_param("adjoin_one", true)?;
                check_cap(n.saturating_mul(n).saturating_mul(m.size()) + 1 + usize::from(one), self.cap)?;
                Ok(Built::Finite(brandt(&m, n, one)?))
            }
            "rees" => {
                let m = base.finite("rees")?;
                let (ni, nl) = (usize_param("I", None)?, usize_param("Lambda", None)?);
                let (zero, one) = (bool_param("zero", false)?, bool_param("adjoin_one", false)?);
                check_cap(
                    ni.saturating_mul(nl).saturating_mul(m.size()) + usize::from(zero) + usize::from(one),
                    self.cap,
                )?;
                let sandwich = match p.get("P") {
                    None => SandwichMatrix::constant(nl, ni, m.identity())?,
                    Some(v) => sandwich(&m, v, nl, ni)?,
                };
                Ok(Built::Finite(ReesMatrixMonoid::new(&m, sandwich, zero, one)?.into_monoid()))
            }
            "bruck_reilly" => {
                let m = base.finite("bruck_reilly")?;
                let theta = endomorphism(&m, p.get("theta"))?;
                Ok(Built::Computable(Box::new(BruckReilly::new(&m, theta))))
            }
            "ebr" => {
                let m = base.finite("ebr")?;
                let theta = endomorphism(&m, p.get("theta"))?;
                Ok(Built::Computable(Box::new(ExtendedBruckReilly::new(&m, theta)?)))
            }
            other => Err(recipe_err(format!(
                "unknown op {other:?}; expected adjoin_identity, adjoin_zero, product, rees, brandt, bruck_reilly or ebr"
            ))),
        }
    }
}

fn label(m: &FiniteMonoid, v: &Value) -> Result<usize> {
    let s = v
        .as_str()
        .ok_or_else(|| recipe_err(format!("expected an element label, got {v}")))?;
    Ok(m.element(s)?)
}

fn sandwich(m: &FiniteMonoid, v: &Value, rows: usize, cols: usize) -> Result<SandwichMatrix> {
    let shape = || recipe_err(format!("`P` must be {rows} rows of {cols} labels or nulls"));
    let rs = v.as_array().filter(|r| r.len() == rows).ok_or_else(shape)?;
    let mut entries = Vec::with_capacity(rows * cols);
    for r in rs {
        let r = r.as_array().filter(|r| r.len() == cols).ok_or_else(shape)?;
        for e in r {
            entries.push(if e.is_null() {
                None
            } else {
                Some(label(m, e)?)
            });
        }
    }
    Ok(SandwichMatrix::new(rows, cols, entries)?)
}

fn endomorphism(m: &FiniteMonoid, v: Option<&Value>) -> Result<Endomorphism> {
    match v {
        None => Ok(Endomorphism::trivial(m)),
        Some(Value::String(s)) if s == "trivial" => Ok(Endomorphism::trivial(m)),
        Some(Value::String(s)) if s == "identity" => Ok(Endomorphism::identity(m)),
        Some(Value::Array(images)) => {
            let map = images
                .iter()
                .map(|x| label(m, x))
                .collect::<Result<Vec<_>>>()?;
            Ok(Endomorphism::new(m, map)?)
        }
        Some(other) => Err(recipe_err(format!(
            "`theta` must be \"identity\", \"trivial\" or a list of labels, got {other}"
        ))),
    }
}

/// Checks associativity on triples drawn from a small ball and returns the
/// first failing triple, rendered.
pub fn validate_computable(
    m: &dyn ComputableMonoid,
    radius: usize,
    limit: usize,
) -> Option<[String; 3]> {
    let ball: Vec<Element> = m.ball(radius).into_iter().take(limit).collect();
    for a in &ball {
        for b in &ball {
            let ab = m.multiply(a, b);
            for c in &ball {
                if m.multiply(&ab, c) != m.multiply(a, &m.multiply(b, c)) {
                    return Some([m.render(a), m.render(b), m.render(c)]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn size(v: Value) -> usize {
        Loader::new(DEFAULT_MAX_ELEMENTS)
            .build(&v)
            .unwrap()
            .finite("test")
            .unwrap()
            .size()
    }

    #[test]
    fn brandt_over_z2_with_identity() {
        assert_eq!(
            size(json!({"base": "Z2", "op": "brandt", "params": {"I": 2}})),
            10
        );
        assert_eq!(
            size(json!({"base": "Z2", "op": "brandt", "params": {"I": 1, "adjoin_one": false}})),
            3
        );
        let two_rows =
            json!({"base": "Z2", "op": "brandt", "params": {"I": 2, "adjoin_one": false}});
        assert!(matches!(
            Loader::new(100).build(&two_rows),
            Err(CliError::Core(coact_core::Error::NoIdentity))
        ));
    }

    #[test]
    fn nested_recipes() {
        let v = json!({
            "base": {"base": "U2", "op": "product", "params": {"with": "Z2"}},
            "op": "adjoin_zero"
        });
        assert_eq!(size(v), 5);
        let v = json!({"base": "Z2", "op": "rees", "params": {"I": 2, "Lambda": 1, "P": [["1", null]], "zero": true, "adjoin_one": true}});
        assert_eq!(size(v), 6);
    }

    #[test]
    fn computable_recipes() {
        let l = Loader::new(DEFAULT_MAX_ELEMENTS);
        for v in [
            json!("bicyclic"),
            json!("free{a,b}"),
            json!({"base": "Z2", "op": "ebr", "params": {"theta": "identity"}}),
            json!({"base": "U2", "op": "bruck_reilly", "params": {"theta": ["1", "1"]}}),
            json!({"base": "free{a}", "op": "product", "params": {"with": "U2"}}),
            json!({"base": "bicyclic", "op": "adjoin_zero"}),
        ] {
            match l.build(&v).unwrap() {
                Built::Computable(m) => {
                    assert_eq!(validate_computable(m.as_ref(), 2, 30), None, "{v}")
                }
                Built::Finite(_) => panic!("{v} should be computable"),
            }
        }
    }

    #[test]
    fn cap_is_checked_before_building() {
        let l = Loader::new(9);
        let err = l
            .build(&json!({"base": "Z2", "op": "brandt", "params": {"I": 2}}))
            .unwrap_err();
        assert!(matches!(
            err,
            CliError::Core(coact_core::Error::TooLarge { size: 10, cap: 9 })
        ));
    }

    #[test]
    fn bad_recipes() {
        let l = Loader::new(100);
        assert!(l.build(&json!({"base": "Z2", "op": "twist"})).is_err());
        assert!(l.build(&json!({"base": "Z2", "op": "brandt"})).is_err());
        assert!(l
            .build(&json!({"base": "bicyclic", "op": "brandt", "params": {"I": 1}}))
            .is_err());
        assert!(l.build(&json!({"base": "U2", "op": "ebr"})).is_err());
        assert!(l.build(&json!("Q8")).is_err());
    }
}
