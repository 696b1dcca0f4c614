//! Infinite monoids with canonical element forms.
//!
//! Equality of elements is equality of their canonical representation.
//! `norm` measures an element and `ball(r)` lists every element of norm at
//! most `r`; for finitely generated monoids the norm is the word length over
//! the listed generators.

use std::cmp::max;
use std::fmt::Debug;

use crate::constructions::Endomorphism;
use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};

/// Canonical element representation shared by all computable monoids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// A word over an alphabet, as symbol indices.
    Word(Vec<u32>),
    /// `(i, g, j)` in a Bruck–Reilly style extension.
    Triple(i64, ElementId, i64),
    Pair(Box<Element>, Box<Element>),
    /// An adjoined identity.
    One,
    /// An adjoined zero.
    Zero,
    /// An element of the monoid underneath an adjoined identity or zero.
    Inner(Box<Element>),
}

impl Element {
    pub fn pair(a: Element, b: Element) -> Element {
        Element::Pair(Box::new(a), Box::new(b))
    }

    pub fn inner(a: Element) -> Element {
        Element::Inner(Box::new(a))
    }
}

pub trait ComputableMonoid: Send + Sync + Debug {
    fn multiply(&self, x: &Element, y: &Element) -> Element;
    fn identity(&self) -> Element;
    fn zero(&self) -> Option<Element> {
        None
    }
    fn generators(&self) -> Vec<Element>;
    fn norm(&self, x: &Element) -> usize;
    /// All elements of norm `≤ r`, sorted.
    fn ball(&self, r: usize) -> Vec<Element>;
    /// Whether `x` is a well-formed element of this monoid.
    fn contains(&self, x: &Element) -> bool;
    fn render(&self, x: &Element) -> String;
    fn parse(&self, s: &str) -> Option<Element>;
    /// Every `t` with `c·t = y`, or `None` when the set is not computed exactly.
    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>>;
    fn describe(&self) -> String;

    fn product(&self, xs: &[Element]) -> Element {
        xs.iter()
            .fold(self.identity(), |acc, x| self.multiply(&acc, x))
    }
}

/// The free monoid on a finite alphabet.
#[derive(Debug, Clone)]
pub struct FreeMonoid {
    alphabet: Vec<String>,
}

impl FreeMonoid {
    pub fn new(alphabet: &[&str]) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::EmptyIndexSet);
        }
        let alphabet: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
        for (i, a) in alphabet.iter().enumerate() {
            if a.is_empty() || a == "1" || alphabet[..i].contains(a) {
                return Err(Error::UnknownLabel(a.clone()));
            }
        }
        Ok(FreeMonoid { alphabet })
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    /// Parses a word such as `"axxb"` or `"ax^2b"`; `"1"` is the empty word.
    pub fn word(&self, s: &str) -> Element {
        self.parse(s)
            .unwrap_or_else(|| panic!("{s:?} is not a word over {:?}", self.alphabet))
    }

    pub fn symbol(&self, name: &str) -> Option<u32> {
        self.alphabet
            .iter()
            .position(|a| a == name)
            .map(|i| i as u32)
    }
}

impl ComputableMonoid for FreeMonoid {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Word(u), Element::Word(v)) => {
                let mut w = u.clone();
                w.extend_from_slice(v);
                Element::Word(w)
            }
            _ => panic!("free monoid multiplies words only"),
        }
    }

    fn identity(&self) -> Element {
        Element::Word(Vec::new())
    }

    fn generators(&self) -> Vec<Element> {
        (0..self.alphabet.len() as u32)
            .map(|i| Element::Word(vec![i]))
            .collect()
    }

    fn norm(&self, x: &Element) -> usize {
        match x {
            Element::Word(w) => w.len(),
            _ => usize::MAX,
        }
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let k = self.alphabet.len() as u32;
        let mut out = vec![Vec::new()];
        let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..r {
            layer = layer
                .iter()
                .flat_map(|w| {
                    (0..k).map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        let mut out: Vec<Element> = out.into_iter().map(Element::Word).collect();
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        matches!(x, Element::Word(w) if w.iter().all(|&a| (a as usize) < self.alphabet.len()))
    }

    fn render(&self, x: &Element) -> String {
        match x {
            Element::Word(w) if w.is_empty() => "1".into(),
            Element::Word(w) => w
                .iter()
                .map(|&a| self.alphabet[a as usize].as_str())
                .collect(),
            other => format!("{other:?}"),
        }
    }

    fn parse(&self, s: &str) -> Option<Element> {
        let s = s.trim();
        if s == "1" {
            return Some(self.identity());
        }
        let mut rest = s;
        let mut word = Vec::new();
        while !rest.is_empty() {
            let (i, sym) = self
                .alphabet
                .iter()
                .enumerate()
                .filter(|(_, a)| rest.starts_with(a.as_str()))
                .max_by_key(|(_, a)| a.len())?;
            rest = &rest[sym.len()..];
            let mut reps = 1;
            if let Some(exp) = rest.strip_prefix('^') {
                let digits: String = exp.chars().take_while(char::is_ascii_digit).collect();
                reps = digits.parse().ok()?;
                rest = &exp[digits.len()..];
            }
            word.extend(std::iter::repeat_n(i as u32, reps));
        }
        Some(Element::Word(word))
    }

    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>> {
        match (c, y) {
            (Element::Word(c), Element::Word(y)) => Some(if y.starts_with(c) {
                vec![Element::Word(y[c.len()..].to_vec())]
            } else {
                Vec::new()
            }),
            _ => Some(Vec::new()),
        }
    }

    fn describe(&self) -> String {
        format!("free monoid on {{{}}}", self.alphabet.join(","))
    }
}

/// `BR(M, θ)`: `ℕ₀ × M × ℕ₀` with
/// `(a,g,b)(c,h,d) = (a−b+t, (gθ^{t−b})(hθ^{t−c}), d−c+t)`, `t = max(b, c)`.
///
/// Over the trivial monoid this is the bicyclic monoid, rendered as `(a,b)`.
#[derive(Debug, Clone)]
pub struct BruckReilly {
    base: FiniteMonoid,
    theta: Endomorphism,
    bicyclic: bool,
}

impl BruckReilly {
    pub fn new(base: &FiniteMonoid, theta: Endomorphism) -> Self {
        BruckReilly {
            base: base.clone(),
            theta,
            bicyclic: false,
        }
    }

    /// The bicyclic monoid `B`.
    pub fn bicyclic() -> Self {
        let base = crate::monoid::builtin::trivial();
        let theta = Endomorphism::identity(&base);
        BruckReilly {
            base,
            theta,
            bicyclic: true,
        }
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn theta(&self) -> &Endomorphism {
        &self.theta
    }

    pub fn triple(&self, a: i64, g: ElementId, b: i64) -> Element {
        Element::Triple(a, g, b)
    }

    /// `(a, b)` in the bicyclic monoid.
    pub fn bicyclic_pair(&self, a: i64, b: i64) -> Element {
        Element::Triple(a, self.base.identity(), b)
    }
}

fn br_multiply(base: &FiniteMonoid, theta: &Endomorphism, x: &Element, y: &Element) -> Element {
    match (x, y) {
        (&Element::Triple(a, g, b), &Element::Triple(c, h, d)) => {
            let t = max(b, c);
            let left = theta.apply_power(g, (t - b) as u64);
            let right = theta.apply_power(h, (t - c) as u64);
            Element::Triple(a - b + t, base.mul(left, right), d - c + t)
        }
        _ => panic!("Bruck–Reilly product of non-triples"),
    }
}

fn triple_render(base: &FiniteMonoid, x: &Element) -> String {
    match x {
        Element::Triple(a, g, b) => format!("({a},{},{b})", base.label(*g)),
        Element::One => "1".into(),
        other => format!("{other:?}"),
    }
}

fn triple_parse(base: &FiniteMonoid, s: &str) -> Option<Element> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, g, b] => Some(Element::Triple(
            a.parse().ok()?,
            base.element(g).ok()?,
            b.parse().ok()?,
        )),
        _ => None,
    }
}

impl ComputableMonoid for BruckReilly {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        br_multiply(&self.base, &self.theta, x, y)
    }

    fn identity(&self) -> Element {
        Element::Triple(0, self.base.identity(), 0)
    }

    fn generators(&self) -> Vec<Element> {
        let one = self.base.identity();
        let mut g = vec![Element::Triple(1, one, 0), Element::Triple(0, one, 1)];
        g.extend(
            self.base
                .elements()
                .filter(|&x| x != one)
                .map(|x| Element::Triple(0, x, 0)),
        );
        g
    }

    fn norm(&self, x: &Element) -> usize {
        match *x {
            Element::Triple(a, g, b) if a >= 0 && b >= 0 => {
                (a + b) as usize + usize::from(g != self.base.identity())
            }
            _ => usize::MAX,
        }
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let r = r as i64;
        let one = self.base.identity();
        let mut out = Vec::new();
        for a in 0..=r {
            for b in 0..=(r - a) {
                for g in self.base.elements() {
                    if g == one || a + b < r {
                        out.push(Element::Triple(a, g, b));
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        matches!(*x, Element::Triple(a, g, b) if a >= 0 && b >= 0 && g < self.base.size())
    }

    fn render(&self, x: &Element) -> String {
        match x {
            Element::Triple(a, _, b) if self.bicyclic => format!("({a},{b})"),
            _ => triple_render(&self.base, x),
        }
    }

    fn parse(&self, s: &str) -> Option<Element> {
        if self.bicyclic {
            let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
            let (a, b) = inner.split_once(',')?;
            let e = self.bicyclic_pair(a.trim().parse().ok()?, b.trim().parse().ok()?);
            return self.contains(&e).then_some(e);
        }
        triple_parse(&self.base, s).filter(|e| self.contains(e))
    }

    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>> {
        let (&Element::Triple(a, g, b), &Element::Triple(y1, k, y2)) = (c, y) else {
            return Some(Vec::new());
        };
        // c·(p,h,q) = y forces t = max(b, p) = y1 − a + b.
        let t = y1 - a + b;
        if t < b {
            return Some(Vec::new());
        }
        let ps: Vec<i64> = if t > b { vec![t] } else { (0..=b).collect() };
        let left = self.theta.apply_power(g, (t - b) as u64);
        let mut out = Vec::new();
        for p in ps {
            let q = y2 + p - t;
            if q < 0 {
                continue;
            }
            for h in self.base.elements() {
                let right = self.theta.apply_power(h, (t - p) as u64);
                if self.base.mul(left, right) == k {
                    out.push(Element::Triple(p, h, q));
                }
            }
        }
        out.sort();
        Some(out)
    }

    fn describe(&self) -> String {
        if self.bicyclic {
            "bicyclic monoid".into()
        } else {
            format!(
                "Bruck–Reilly extension over a monoid of order {}",
                self.base.size()
            )
        }
    }
}

/// `EBR(G, θ)¹`: `ℤ × G × ℤ` with the Bruck–Reilly rule and an adjoined
/// identity `1`.
///
/// Not finitely generated, so `ball(r)` is the box `max(|i|, |j|) ≤ r`
/// together with `1`.
#[derive(Debug, Clone)]
pub struct ExtendedBruckReilly {
    base: FiniteMonoid,
    theta: Endomorphism,
}

impl ExtendedBruckReilly {
    pub fn new(group: &FiniteMonoid, theta: Endomorphism) -> Result<Self> {
        if group.units().len() != group.size() {
            return Err(Error::NotClosed(
                "extended Bruck–Reilly extensions need a group".into(),
            ));
        }
        Ok(ExtendedBruckReilly {
            base: group.clone(),
            theta,
        })
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn theta(&self) -> &Endomorphism {
        &self.theta
    }

    /// `x'` with `x x' x = x` and `x' x x' = x'`: `(i,g,j)' = (j, h, i)` for
    /// the unique `h` that makes both products hold.
    pub fn inverse(&self, x: &Element) -> Element {
        match *x {
            Element::Triple(i, _, j) => self
                .base
                .elements()
                .map(|h| Element::Triple(j, h, i))
                .find(|y| {
                    self.multiply(&self.multiply(x, y), x) == *x
                        && self.multiply(&self.multiply(y, x), y) == *y
                })
                .expect("every element of an extended Bruck–Reilly extension is regular"),
            _ => Element::One,
        }
    }

    /// Whether `y ∈ xS`, using `xS = xx'S`.
    pub fn in_principal_right_ideal(&self, x: &Element, y: &Element) -> bool {
        let e = self.multiply(x, &self.inverse(x));
        self.multiply(&e, y) == *y
    }
}

impl ComputableMonoid for ExtendedBruckReilly {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::One, _) => y.clone(),
            (_, Element::One) => x.clone(),
            _ => br_multiply(&self.base, &self.theta, x, y),
        }
    }

    fn identity(&self) -> Element {
        Element::One
    }

    /// The box structure makes any finite list incomplete; this lists the
    /// elements of the box of radius 1.
    fn generators(&self) -> Vec<Element> {
        self.ball(1)
    }

    fn norm(&self, x: &Element) -> usize {
        match *x {
            Element::One => 0,
            Element::Triple(i, _, j) => max(i.unsigned_abs(), j.unsigned_abs()) as usize,
            _ => usize::MAX,
        }
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let r = r as i64;
        let mut out = vec![Element::One];
        for i in -r..=r {
            for g in self.base.elements() {
                for j in -r..=r {
                    out.push(Element::Triple(i, g, j));
                }
            }
        }
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        match *x {
            Element::One => true,
            Element::Triple(_, g, _) => g < self.base.size(),
            _ => false,
        }
    }

    fn render(&self, x: &Element) -> String {
        triple_render(&self.base, x)
    }

    fn parse(&self, s: &str) -> Option<Element> {
        if s.trim() == "1" {
            return Some(Element::One);
        }
        triple_parse(&self.base, s).filter(|e| self.contains(e))
    }

    fn right_factors(&self, _c: &Element, _y: &Element) -> Option<Vec<Element>> {
        None
    }

    fn describe(&self) -> String {
        format!(
            "extended Bruck–Reilly extension with identity over a group of order {}",
            self.base.size()
        )
    }
}

/// Componentwise product; the norm is the sum of the component norms.
#[derive(Debug)]
pub struct ProductMonoid {
    left: Box<dyn ComputableMonoid>,
    right: Box<dyn ComputableMonoid>,
}

impl ProductMonoid {
    pub fn new(left: Box<dyn ComputableMonoid>, right: Box<dyn ComputableMonoid>) -> Self {
        ProductMonoid { left, right }
    }

    pub fn left(&self) -> &dyn ComputableMonoid {
        self.left.as_ref()
    }

    pub fn right(&self) -> &dyn ComputableMonoid {
        self.right.as_ref()
    }
}

fn split(x: &Element) -> (&Element, &Element) {
    match x {
        Element::Pair(a, b) => (a, b),
        _ => panic!("product monoid element must be a pair"),
    }
}

impl ComputableMonoid for ProductMonoid {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        let ((a, b), (c, d)) = (split(x), split(y));
        Element::pair(self.left.multiply(a, c), self.right.multiply(b, d))
    }

    fn identity(&self) -> Element {
        Element::pair(self.left.identity(), self.right.identity())
    }

    fn zero(&self) -> Option<Element> {
        Some(Element::pair(self.left.zero()?, self.right.zero()?))
    }

    fn generators(&self) -> Vec<Element> {
        let (e, f) = (self.left.identity(), self.right.identity());
        self.left
            .generators()
            .into_iter()
            .map(|g| Element::pair(g, f.clone()))
            .chain(
                self.right
                    .generators()
                    .into_iter()
                    .map(|g| Element::pair(e.clone(), g)),
            )
            .collect()
    }

    fn norm(&self, x: &Element) -> usize {
        match x {
            Element::Pair(a, b) => self.left.norm(a).saturating_add(self.right.norm(b)),
            _ => usize::MAX,
        }
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let lb = self.left.ball(r);
        let rb = self.right.ball(r);
        let mut out = Vec::new();
        for a in &lb {
            let na = self.left.norm(a);
            for b in &rb {
                if na + self.right.norm(b) <= r {
                    out.push(Element::pair(a.clone(), b.clone()));
                }
            }
        }
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        match x {
            Element::Pair(a, b) => self.left.contains(a) && self.right.contains(b),
            _ => false,
        }
    }

    fn render(&self, x: &Element) -> String {
        let (a, b) = split(x);
        format!("({},{})", self.left.render(a), self.right.render(b))
    }

    fn parse(&self, s: &str) -> Option<Element> {
        let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
        // Split at the top-level comma.
        let mut depth = 0i32;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    if let (Some(a), Some(b)) = (
                        self.left.parse(&inner[..i]),
                        self.right.parse(&inner[i + 1..]),
                    ) {
                        return Some(Element::pair(a, b));
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>> {
        let ((c1, c2), (y1, y2)) = (split(c), split(y));
        let f1 = self.left.right_factors(c1, y1)?;
        let f2 = self.right.right_factors(c2, y2)?;
        let mut out = Vec::with_capacity(f1.len() * f2.len());
        for a in &f1 {
            for b in &f2 {
                out.push(Element::pair(a.clone(), b.clone()));
            }
        }
        Some(out)
    }

    fn describe(&self) -> String {
        format!("({}) × ({})", self.left.describe(), self.right.describe())
    }
}

/// `M^1̲` for a computable `M`: elements `One` and `Inner(x)`.
#[derive(Debug)]
pub struct WithIdentity {
    inner: Box<dyn ComputableMonoid>,
}

impl WithIdentity {
    pub fn new(inner: Box<dyn ComputableMonoid>) -> Self {
        WithIdentity { inner }
    }
}

impl ComputableMonoid for WithIdentity {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::One, _) => y.clone(),
            (_, Element::One) => x.clone(),
            (Element::Inner(a), Element::Inner(b)) => Element::inner(self.inner.multiply(a, b)),
            _ => panic!("malformed element"),
        }
    }

    fn identity(&self) -> Element {
        Element::One
    }

    fn zero(&self) -> Option<Element> {
        self.inner.zero().map(Element::inner)
    }

    fn generators(&self) -> Vec<Element> {
        self.inner
            .generators()
            .into_iter()
            .chain([self.inner.identity()])
            .map(Element::inner)
            .collect()
    }

    fn norm(&self, x: &Element) -> usize {
        match x {
            Element::One => 0,
            Element::Inner(a) => self.inner.norm(a).max(1),
            _ => usize::MAX,
        }
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let mut out: Vec<Element> = std::iter::once(Element::One)
            .chain(
                self.inner
                    .ball(r)
                    .into_iter()
                    .map(Element::inner)
                    .filter(|x| self.norm(x) <= r),
            )
            .collect();
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        match x {
            Element::One => true,
            Element::Inner(a) => self.inner.contains(a),
            _ => false,
        }
    }

    fn render(&self, x: &Element) -> String {
        match x {
            Element::One => crate::constructions::ADJOINED_ONE.into(),
            Element::Inner(a) => self.inner.render(a),
            other => format!("{other:?}"),
        }
    }

    fn parse(&self, s: &str) -> Option<Element> {
        if s.trim() == crate::constructions::ADJOINED_ONE {
            return Some(Element::One);
        }
        self.inner.parse(s).map(Element::inner)
    }

    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>> {
        match (c, y) {
            (Element::One, _) => Some(vec![y.clone()]),
            (Element::Inner(_), Element::One) => Some(Vec::new()),
            (Element::Inner(a), Element::Inner(b)) => {
                let mut out: Vec<Element> = self
                    .inner
                    .right_factors(a, b)?
                    .into_iter()
                    .map(Element::inner)
                    .collect();
                if c == y {
                    out.push(Element::One);
                }
                out.sort();
                Some(out)
            }
            _ => Some(Vec::new()),
        }
    }

    fn describe(&self) -> String {
        format!("({})^1", self.inner.describe())
    }
}

/// `M^0̲` for a computable `M`: elements `Zero` and `Inner(x)`.
#[derive(Debug)]
pub struct WithZero {
    inner: Box<dyn ComputableMonoid>,
}

impl WithZero {
    pub fn new(inner: Box<dyn ComputableMonoid>) -> Self {
        WithZero { inner }
    }
}

impl ComputableMonoid for WithZero {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        match (x, y) {
            (Element::Zero, _) | (_, Element::Zero) => Element::Zero,
            (Element::Inner(a), Element::Inner(b)) => Element::inner(self.inner.multiply(a, b)),
            _ => panic!("malformed element"),
        }
    }

    fn identity(&self) -> Element {
        Element::inner(self.inner.identity())
    }

    fn zero(&self) -> Option<Element> {
        Some(Element::Zero)
    }

    fn generators(&self) -> Vec<Element> {
        self.inner
            .generators()
            .into_iter()
            .map(Element::inner)
            .chain([Element::Zero])
            .collect()
    }

    fn norm(&self, x: &Element) -> usize {
        match x {
            Element::Zero => 1,
            Element::Inner(a) => self.inner.norm(a),
            _ => usize::MAX,
        }
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let mut out: Vec<Element> = self.inner.ball(r).into_iter().map(Element::inner).collect();
        if r >= 1 {
            out.push(Element::Zero);
        }
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        match x {
            Element::Zero => true,
            Element::Inner(a) => self.inner.contains(a),
            _ => false,
        }
    }

    fn render(&self, x: &Element) -> String {
        match x {
            Element::Zero => crate::constructions::ADJOINED_ZERO.into(),
            Element::Inner(a) => self.inner.render(a),
            other => format!("{other:?}"),
        }
    }

    fn parse(&self, s: &str) -> Option<Element> {
        if s.trim() == crate::constructions::ADJOINED_ZERO {
            return Some(Element::Zero);
        }
        self.inner.parse(s).map(Element::inner)
    }

    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>> {
        match (c, y) {
            (Element::Zero, Element::Zero) => None,
            (Element::Zero, _) => Some(Vec::new()),
            (Element::Inner(_), Element::Zero) => Some(vec![Element::Zero]),
            (Element::Inner(a), Element::Inner(b)) => Some(
                self.inner
                    .right_factors(a, b)?
                    .into_iter()
                    .map(Element::inner)
                    .collect(),
            ),
            _ => Some(Vec::new()),
        }
    }

    fn describe(&self) -> String {
        format!("({})^0", self.inner.describe())
    }
}

/// A finite monoid viewed as a computable one. Element `x` is stored as
/// `Word(vec![x])`; the norm is 0 for the identity and 1 otherwise.
#[derive(Debug, Clone)]
pub struct FiniteAsComputable {
    m: FiniteMonoid,
}

impl FiniteAsComputable {
    pub fn new(m: &FiniteMonoid) -> Self {
        FiniteAsComputable { m: m.clone() }
    }

    pub fn element(&self, x: ElementId) -> Element {
        Element::Word(vec![x as u32])
    }

    pub fn id_of(&self, x: &Element) -> ElementId {
        match x {
            Element::Word(w) if w.len() == 1 => w[0] as usize,
            _ => panic!("not an element of a finite monoid"),
        }
    }
}

impl ComputableMonoid for FiniteAsComputable {
    fn multiply(&self, x: &Element, y: &Element) -> Element {
        self.element(self.m.mul(self.id_of(x), self.id_of(y)))
    }

    fn identity(&self) -> Element {
        self.element(self.m.identity())
    }

    fn zero(&self) -> Option<Element> {
        self.m.zero().map(|z| self.element(z))
    }

    fn generators(&self) -> Vec<Element> {
        self.m
            .elements()
            .filter(|&x| x != self.m.identity())
            .map(|x| self.element(x))
            .collect()
    }

    fn norm(&self, x: &Element) -> usize {
        usize::from(self.id_of(x) != self.m.identity())
    }

    fn ball(&self, r: usize) -> Vec<Element> {
        let mut out: Vec<Element> = self
            .m
            .elements()
            .filter(|&x| r >= 1 || x == self.m.identity())
            .map(|x| self.element(x))
            .collect();
        out.sort();
        out
    }

    fn contains(&self, x: &Element) -> bool {
        matches!(x, Element::Word(w) if w.len() == 1 && (w[0] as usize) < self.m.size())
    }

    fn render(&self, x: &Element) -> String {
        self.m.label(self.id_of(x)).to_string()
    }

    fn parse(&self, s: &str) -> Option<Element> {
        self.m.element(s.trim()).ok().map(|x| self.element(x))
    }

    fn right_factors(&self, c: &Element, y: &Element) -> Option<Vec<Element>> {
        let (c, y) = (self.id_of(c), self.id_of(y));
        Some(
            self.m
                .elements()
                .filter(|&t| self.m.mul(c, t) == y)
                .map(|t| self.element(t))
                .collect(),
        )
    }

    fn describe(&self) -> String {
        format!("finite monoid of order {}", self.m.size())
    }
}

/// First triple in `ball(radius)` violating associativity, if any.
pub fn associativity_failure(
    m: &dyn ComputableMonoid,
    radius: usize,
) -> Option<(Element, Element, Element)> {
    let ball = m.ball(radius);
    for x in &ball {
        for y in &ball {
            let xy = m.multiply(x, y);
            for z in &ball {
                if m.multiply(&xy, z) != m.multiply(x, &m.multiply(y, z)) {
                    return Some((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builtin::*;

    #[test]
    fn free_words() {
        let f = FreeMonoid::new(&["a", "x", "b"]).unwrap();
        assert_eq!(f.multiply(&f.word("ax"), &f.word("b")), f.word("axb"));
        assert_eq!(f.ball(2).len(), 13);
        assert_eq!(f.word("ax^3b"), f.word("axxxb"));
        assert_eq!(f.render(&f.identity()), "1");
        assert_eq!(
            f.right_factors(&f.word("ax"), &f.word("axb")),
            Some(vec![f.word("b")])
        );
        assert_eq!(f.right_factors(&f.word("b"), &f.word("axb")), Some(vec![]));
    }

    #[test]
    fn bicyclic_rule() {
        let b = BruckReilly::bicyclic();
        let x = b.bicyclic_pair(1, 1);
        assert_eq!(b.multiply(&x, &b.bicyclic_pair(0, 0)), x);
        assert_eq!(b.render(&x), "(1,1)");
        assert_eq!(b.parse("(2,3)"), Some(b.bicyclic_pair(2, 3)));
        let f = b.right_factors(&x, &x).unwrap();
        assert_eq!(f, vec![b.bicyclic_pair(0, 0), x.clone()]);
    }

    #[test]
    fn br_rule_with_theta() {
        let g = z2();
        let theta = Endomorphism::trivial(&g);
        let br = BruckReilly::new(&g, theta);
        // (1,g,2)(3,h,4) = (2, (gθ)h, 4)
        assert_eq!(
            br.multiply(&br.triple(1, 1, 2), &br.triple(3, 1, 4)),
            br.triple(2, 1, 4)
        );
        assert_eq!(
            br.multiply(&br.triple(0, 1, 0), &br.triple(0, 1, 0)),
            br.triple(0, 0, 0)
        );
        assert!(associativity_failure(&br, 3).is_none());
    }

    #[test]
    fn br_right_factors_exact() {
        let g = z3();
        let theta = Endomorphism::new(&g, vec![0, 2, 1]).unwrap();
        let br = BruckReilly::new(&g, theta);
        let ball = br.ball(5);
        for c in ball.iter().take(30) {
            for y in ball.iter().step_by(7) {
                let f = br.right_factors(c, y).unwrap();
                for t in &f {
                    assert_eq!(br.multiply(c, t), *y);
                }
                for t in &ball {
                    if br.multiply(c, t) == *y {
                        assert!(f.contains(t));
                    }
                }
            }
        }
    }

    #[test]
    fn ebr_inverse_and_ideals() {
        let g = z2();
        let s = ExtendedBruckReilly::new(&g, Endomorphism::identity(&g)).unwrap();
        let x = Element::Triple(-1, 1, 2);
        let xi = s.inverse(&x);
        assert_eq!(s.multiply(&s.multiply(&x, &xi), &x), x);
        assert!(s.in_principal_right_ideal(&x, &Element::Triple(-1, 0, 5)));
        assert!(!s.in_principal_right_ideal(&x, &Element::Triple(-2, 0, 5)));
        assert!(ExtendedBruckReilly::new(&u2(), Endomorphism::identity(&u2())).is_err());
    }

    #[test]
    fn product_parse_render() {
        let f = FreeMonoid::new(&["a", "x", "b"]).unwrap();
        let p = ProductMonoid::new(Box::new(f.clone()), Box::new(f.clone()));
        let e = p.parse("(ax^2,b)").unwrap();
        assert_eq!(p.render(&e), "(axx,b)");
        assert_eq!(p.norm(&e), 4);
        assert_eq!(p.ball(1).len(), 7);
    }

    #[test]
    fn wrappers() {
        let b = WithIdentity::new(Box::new(BruckReilly::bicyclic()));
        assert!(associativity_failure(&b, 2).is_none());
        let z = WithZero::new(Box::new(BruckReilly::bicyclic()));
        assert!(associativity_failure(&z, 2).is_none());
        assert_eq!(z.multiply(&Element::Zero, &z.identity()), Element::Zero);
    }
}
