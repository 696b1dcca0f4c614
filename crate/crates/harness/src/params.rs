//! `key=value` parameters for checks.
//!
//! Lists use `,` between items and `;` between groups; pairs are written
//! `x~y`. Rows of Brandt and Rees constructions are 1-based.

use std::collections::BTreeMap;

use coact_core::constructions::Endomorphism;
use coact_core::monoid::builtin;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair};

use crate::error::{HarnessError, Result};

/// Resolves monoid names such as `Z2` or a file reference.
pub type Resolver<'a> = &'a dyn Fn(&str) -> Result<FiniteMonoid>;

pub fn builtin_resolver(name: &str) -> Result<FiniteMonoid> {
    builtin::by_name(name)
        .ok_or_else(|| HarnessError::param("monoid", format!("unknown monoid {name:?}")))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params {
    values: BTreeMap<String, String>,
}

fn split_list(s: &str, sep: char) -> Vec<&str> {
    if s.trim().is_empty() {
        return Vec::new();
    }
    // Separators inside parentheses belong to labels such as "(1,g,2)".
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0usize);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

impl Params {
    /// Parses `key=value` items; a repeated key keeps the last value.
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for item in items {
            let item = item.as_ref();
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| HarnessError::param(item, "expected key=value"))?;
            values.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params { values })
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.values.insert(key.into(), value.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn require(&self, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| HarnessError::param(key, "missing"))
    }

    pub fn number<T: std::str::FromStr>(&self, key: &str, default: T) -> Result<T> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => v
                .parse()
                .map_err(|_| HarnessError::param(key, format!("{v:?} is not a number"))),
        }
    }

    pub fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes") => Ok(true),
            Some("false" | "0" | "no") => Ok(false),
            Some(v) => Err(HarnessError::param(key, format!("{v:?} is not a boolean"))),
        }
    }

    /// A 1-based row, returned 0-based.
    pub fn row(&self, key: &str, rows: usize, default: Option<usize>) -> Result<usize> {
        let r = match (self.get(key), default) {
            (None, Some(d)) => d,
            _ => self.number::<usize>(key, 0)?,
        };
        if r == 0 || r > rows {
            return Err(HarnessError::param(
                key,
                format!("row {r} outside 1..={rows}"),
            ));
        }
        Ok(r - 1)
    }

    pub fn monoid(&self, key: &str, resolve: Resolver) -> Result<FiniteMonoid> {
        resolve(self.require(key)?)
    }

    fn label(m: &FiniteMonoid, key: &str, label: &str, bullet: Option<usize>) -> Result<ElementId> {
        let label = match bullet {
            Some(b) => label.replace(['•', '@'], &(b + 1).to_string()),
            None => label.to_string(),
        };
        m.element(&label)
            .map_err(|_| HarnessError::param(key, format!("no element labelled {label:?}")))
    }

    pub fn element(&self, m: &FiniteMonoid, key: &str) -> Result<ElementId> {
        Self::label(m, key, self.require(key)?, None)
    }

    /// An element whose label may use `•` or `@` for the bullet row.
    pub fn element_with_bullet(
        &self,
        m: &FiniteMonoid,
        key: &str,
        bullet: usize,
    ) -> Result<ElementId> {
        Self::label(m, key, self.require(key)?, Some(bullet))
    }

    pub fn elements(&self, m: &FiniteMonoid, key: &str) -> Result<Vec<ElementId>> {
        split_list(self.require(key)?, ',')
            .into_iter()
            .map(|l| Self::label(m, key, l, None))
            .collect()
    }

    pub fn pairs(&self, m: &FiniteMonoid, key: &str) -> Result<Vec<Pair>> {
        self.pairs_by(key, |l| Self::label(m, key, l, None))
    }

    pub fn pairs_with_bullet(
        &self,
        m: &FiniteMonoid,
        key: &str,
        bullet: usize,
    ) -> Result<Vec<Pair>> {
        self.pairs_by(key, |l| Self::label(m, key, l, Some(bullet)))
    }

    pub fn act_pairs(&self, act: &FiniteRightAct, key: &str) -> Result<Vec<Pair>> {
        self.pairs_by(key, |l| {
            act.element(l)
                .map_err(|_| HarnessError::param(key, format!("no act element labelled {l:?}")))
        })
    }

    fn pairs_by(&self, key: &str, f: impl Fn(&str) -> Result<usize>) -> Result<Vec<Pair>> {
        let Some(v) = self.get(key) else {
            return Ok(Vec::new());
        };
        split_list(v, ';')
            .into_iter()
            .map(|p| {
                let (x, y) = p.split_once('~').ok_or_else(|| {
                    HarnessError::param(key, format!("{p:?} is not of the form x~y"))
                })?;
                Ok((f(x.trim())?, f(y.trim())?))
            })
            .collect()
    }

    /// Groups of `width` comma-separated items, e.g. `1,g,2,1;2,1,2,g`.
    pub fn groups(&self, key: &str, width: usize) -> Result<Vec<Vec<String>>> {
        let Some(v) = self.get(key) else {
            return Ok(Vec::new());
        };
        split_list(v, ';')
            .into_iter()
            .map(|g| {
                let items: Vec<String> =
                    split_list(g, ',').into_iter().map(str::to_string).collect();
                if items.len() != width {
                    return Err(HarnessError::param(
                        key,
                        format!("{g:?} needs {width} items"),
                    ));
                }
                Ok(items)
            })
            .collect()
    }

    /// `trivial`, `identity`, or the images of the elements in order.
    pub fn endomorphism(&self, m: &FiniteMonoid, key: &str) -> Result<Endomorphism> {
        match self.get(key).unwrap_or("trivial") {
            "trivial" => Ok(Endomorphism::trivial(m)),
            "identity" => Ok(Endomorphism::identity(m)),
            list => {
                let map = split_list(list, ',')
                    .into_iter()
                    .map(|l| Self::label(m, key, l, None))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Endomorphism::new(m, map)?)
            }
        }
    }
}

/// A 1-based row written as text, returned 0-based.
pub fn parse_row(key: &str, s: &str, rows: usize) -> Result<usize> {
    match s.parse::<usize>() {
        Ok(r) if (1..=rows).contains(&r) => Ok(r - 1),
        _ => Err(HarnessError::param(
            key,
            format!("{s:?} is not a row in 1..={rows}"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_outside_parentheses() {
        assert_eq!(
            split_list("(1,g,2)~1!;0!~(2,1,1)", ';'),
            ["(1,g,2)~1!", "0!~(2,1,1)"]
        );
        assert!(split_list(" ", ',').is_empty());
    }

    #[test]
    fn reads_pairs_and_numbers() {
        let m = builtin::z2();
        let p = Params::parse(&["H=1~g", "n=3"]).unwrap();
        assert_eq!(p.pairs(&m, "H").unwrap(), vec![(0, 1)]);
        assert_eq!(p.number("n", 0usize).unwrap(), 3);
        assert_eq!(p.number("missing", 7usize).unwrap(), 7);
        assert!(Params::parse(&["oops"]).is_err());
    }
}
