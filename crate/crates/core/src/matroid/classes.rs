use std::fmt;

use super::group::orbits;
use super::matroid::GFqMatroid;
use super::space::PointSet;
use crate::error::{Error, MatroidError, Result};
use crate::graph::BitIter;

/// A class of GF(q)-matroids, closed under isomorphism.
pub trait MatroidClass: Send + Sync {
    fn name(&self) -> String;
    fn contains(&self, m: &GFqMatroid) -> bool;
}

impl<C: MatroidClass + ?Sized> MatroidClass for &C {
    fn name(&self) -> String {
        (**self).name()
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        (**self).contains(m)
    }
}

impl<C: MatroidClass + ?Sized> MatroidClass for Box<C> {
    fn name(&self) -> String {
        (**self).name()
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        (**self).contains(m)
    }
}

/// Built-in hereditary classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseMatroidClass {
    All,
    /// No circuits: the ground set is a basis.
    Independent,
    /// No rank-2 flat with three or more points.
    NoThreePointLine,
    /// The ground set is the whole geometry.
    Projective,
    MaxElements(usize),
}

impl BaseMatroidClass {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        Ok(match text {
            "all" => Self::All,
            "independent" => Self::Independent,
            "no-three-point-line" => Self::NoThreePointLine,
            "projective" => Self::Projective,
            _ => {
                let k = text
                    .strip_prefix("max-elements:")
                    .and_then(|k| k.parse().ok())
                    .ok_or_else(|| Error::BadClassSpec {
                        spec: text.to_string(),
                        reason: "expected all, independent, no-three-point-line, projective or max-elements:<k>".into(),
                    })?;
                Self::MaxElements(k)
            }
        })
    }
}

impl fmt::Display for BaseMatroidClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => f.write_str("all"),
            Self::Independent => f.write_str("independent"),
            Self::NoThreePointLine => f.write_str("no-three-point-line"),
            Self::Projective => f.write_str("projective"),
            Self::MaxElements(k) => write!(f, "max-elements:{k}"),
        }
    }
}

fn has_long_line(m: &GFqMatroid) -> bool {
    let pts: Vec<usize> = m.elements().collect();
    pts.iter().enumerate().any(|(i, &a)| {
        pts[i + 1..]
            .iter()
            .any(|&b| m.closure_of(1 << a | 1 << b).count_ones() >= 3)
    })
}

impl MatroidClass for BaseMatroidClass {
    fn name(&self) -> String {
        self.to_string()
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        match self {
            Self::All => true,
            Self::Independent => m.len() == m.rank(),
            Self::NoThreePointLine => !has_long_line(m),
            Self::Projective => m.non_element_count() == 0,
            Self::MaxElements(k) => m.len() <= *k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatroidWitness {
    Member,
    /// Adding this non-element lands in the class.
    Add(usize),
    /// Deleting this element lands in the class.
    Delete(usize),
}

/// `M` is in the class, or adding one non-element of its geometry puts it
/// there. One presentation suffices: all of them are projectively
/// equivalent.
pub fn add_member<C: MatroidClass + ?Sized>(m: &GFqMatroid, class: &C) -> Option<MatroidWitness> {
    if class.contains(m) {
        return Some(MatroidWitness::Member);
    }
    BitIter(m.non_elements() as u64)
        .find(|&e| class.contains(&m.add(e)))
        .map(MatroidWitness::Add)
}

/// `M` is in the class, or deleting one element puts it there.
pub fn extension_member<C: MatroidClass + ?Sized>(m: &GFqMatroid, class: &C) -> Option<MatroidWitness> {
    if class.contains(m) {
        return Some(MatroidWitness::Member);
    }
    m.elements()
        .find(|&e| class.contains(&m.delete(e)))
        .map(MatroidWitness::Delete)
}

pub struct AddClass<C>(pub C);

impl<C: MatroidClass> MatroidClass for AddClass<C> {
    fn name(&self) -> String {
        format!("add:{}", self.0.name())
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        add_member(m, &self.0).is_some()
    }
}

pub struct ExtensionClass<C>(pub C);

impl<C: MatroidClass> MatroidClass for ExtensionClass<C> {
    fn name(&self) -> String {
        format!("extension:{}", self.0.name())
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        extension_member(m, &self.0).is_some()
    }
}

pub struct MatroidUnion<A, B>(pub A, pub B);

impl<A: MatroidClass, B: MatroidClass> MatroidClass for MatroidUnion<A, B> {
    fn name(&self) -> String {
        format!("union({} | {})", self.0.name(), self.1.name())
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        self.0.contains(m) || self.1.contains(m)
    }
}

/// A base class with at most one operator, as written on the command line:
/// `<base>`, `add:<base>`, `extension:<base>` or `almost:<base>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidClassSpec {
    Base(BaseMatroidClass),
    Add(BaseMatroidClass),
    Extension(BaseMatroidClass),
    /// Union of the add and extension classes.
    Almost(BaseMatroidClass),
}

impl MatroidClassSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(b) = text.strip_prefix("add:") {
            Ok(Self::Add(BaseMatroidClass::parse(b)?))
        } else if let Some(b) = text.strip_prefix("extension:") {
            Ok(Self::Extension(BaseMatroidClass::parse(b)?))
        } else if let Some(b) = text.strip_prefix("almost:") {
            Ok(Self::Almost(BaseMatroidClass::parse(b)?))
        } else {
            Ok(Self::Base(BaseMatroidClass::parse(text)?))
        }
    }

    pub fn base(&self) -> &BaseMatroidClass {
        match self {
            Self::Base(b) | Self::Add(b) | Self::Extension(b) | Self::Almost(b) => b,
        }
    }
}

impl fmt::Display for MatroidClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Base(b) => write!(f, "{b}"),
            Self::Add(b) => write!(f, "add:{b}"),
            Self::Extension(b) => write!(f, "extension:{b}"),
            Self::Almost(b) => write!(f, "almost:{b}"),
        }
    }
}

impl MatroidClass for MatroidClassSpec {
    fn name(&self) -> String {
        self.to_string()
    }

    fn contains(&self, m: &GFqMatroid) -> bool {
        match self {
            Self::Base(b) => b.contains(m),
            Self::Add(b) => add_member(m, b).is_some(),
            Self::Extension(b) => extension_member(m, b).is_some(),
            Self::Almost(b) => add_member(m, b).is_some() || extension_member(m, b).is_some(),
        }
    }
}

/// `M` is outside the class and every proper flat, re-embedded in its own
/// span, is inside.
pub fn is_forbidden_flat<C: MatroidClass + ?Sized>(m: &GFqMatroid, class: &C) -> bool {
    !class.contains(m) && m.flats().proper().all(|f: PointSet| class.contains(&m.restrict(f)))
}

/// Forbidden flats of rank at most `r_max`, one per projective-equivalence
/// class, ordered by rank and then by canonical ground set.
pub fn enumerate_forbidden_flats<C: MatroidClass + ?Sized>(
    class: &C,
    q: u8,
    r_max: usize,
) -> Result<Vec<GFqMatroid>, MatroidError> {
    let mut out = Vec::new();
    for r in 0..=r_max {
        let table = orbits(q, r)?;
        let space = table.space().clone();
        for ground in table.representatives() {
            if space.rank(ground) != r {
                continue;
            }
            let m = GFqMatroid::new(space.clone(), ground)?;
            if is_forbidden_flat(&m, class) {
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Rank and non-element count of one forbidden flat.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlatStats {
    pub r: usize,
    pub k: usize,
}

impl FlatStats {
    pub fn of(m: &GFqMatroid) -> Self {
        FlatStats {
            r: m.rank(),
            k: m.non_element_count(),
        }
    }
}

/// `max{2s, r + k(s-1)}`.
pub fn add_flat_rank_bound(r: usize, k: usize, s: usize) -> usize {
    (2 * s).max(r + k * s.saturating_sub(1))
}

/// Rank bound for forbidden flats of the add class, maximised over the
/// base class's forbidden flats.
pub fn add_class_rank_bound(forbidden: &[GFqMatroid]) -> usize {
    let s = forbidden.iter().map(GFqMatroid::rank).max().unwrap_or(0);
    forbidden
        .iter()
        .map(|f| {
            let st = FlatStats::of(f);
            add_flat_rank_bound(st.r, st.k, s)
        })
        .max()
        .unwrap_or(0)
}
