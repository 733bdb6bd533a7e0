use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use super::group::orbits;
use super::space::{pg, PGSpace, PointSet};
use crate::error::MatroidError;
use crate::graph::BitIter;

/// A simple GF(q)-matroid given as a full-rank set of points of PG(r-1, q).
/// The remaining points are its non-elements.
#[derive(Clone)]
pub struct GFqMatroid {
    space: Arc<PGSpace>,
    ground: PointSet,
}

impl GFqMatroid {
    pub fn new(space: Arc<PGSpace>, ground: PointSet) -> Result<Self, MatroidError> {
        if let Some(index) = BitIter(ground as u64).find(|&i| i >= space.len()) {
            return Err(MatroidError::PointOutOfRange {
                index,
                dim: space.r(),
                q: space.q(),
                points: space.len(),
            });
        }
        let found = space.rank(ground);
        if found != space.r() {
            return Err(MatroidError::NotFullRank {
                found,
                dim: space.r(),
                q: space.q(),
            });
        }
        Ok(GFqMatroid { space, ground })
    }

    pub fn from_indices(q: u8, r: usize, points: &[usize]) -> Result<Self, MatroidError> {
        let space = pg(q, r)?;
        let mut ground: PointSet = 0;
        for &index in points {
            if index >= space.len() {
                return Err(MatroidError::PointOutOfRange {
                    index,
                    dim: r,
                    q,
                    points: space.len(),
                });
            }
            ground |= 1 << index;
        }
        Self::new(space, ground)
    }

    /// The whole geometry.
    pub fn full(q: u8, r: usize) -> Result<Self, MatroidError> {
        let space = pg(q, r)?;
        let all = space.all();
        Self::new(space, all)
    }

    pub fn space(&self) -> &Arc<PGSpace> {
        &self.space
    }

    pub fn q(&self) -> u8 {
        self.space.q()
    }

    pub fn rank(&self) -> usize {
        self.space.r()
    }

    pub fn ground(&self) -> PointSet {
        self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.ground == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        BitIter(self.ground as u64)
    }

    pub fn non_elements(&self) -> PointSet {
        self.space.all() & !self.ground
    }

    pub fn non_element_count(&self) -> usize {
        self.space.len() - self.len()
    }

    pub fn rank_of(&self, s: PointSet) -> usize {
        self.space.rank(s & self.ground)
    }

    /// Closure inside the matroid: the trace of the projective closure.
    pub fn closure_of(&self, s: PointSet) -> PointSet {
        self.space.closure(s & self.ground) & self.ground
    }

    pub fn is_flat(&self, s: PointSet) -> bool {
        s & !self.ground == 0 && self.closure_of(s) == s
    }

    pub fn flats(&self) -> FlatLattice {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([self.closure_of(0)]);
        seen.insert(self.closure_of(0));
        while let Some(f) = queue.pop_front() {
            for e in BitIter((self.ground & !f) as u64) {
                let g = self.closure_of(f | 1 << e);
                if seen.insert(g) {
                    queue.push_back(g);
                }
            }
        }
        let mut flats: Vec<PointSet> = seen.into_iter().collect();
        flats.sort_by_key(|&f| (self.space.rank(f), f));
        FlatLattice {
            matroid: self.clone(),
            flats,
        }
    }

    /// Flats of rank one less than the matroid.
    pub fn hyperplanes(&self) -> Vec<PointSet> {
        let r = self.rank();
        self.flats()
            .flats
            .into_iter()
            .filter(|&f| r > 0 && self.space.rank(f) == r - 1)
            .collect()
    }

    /// The restriction to `s`, re-embedded in the geometry of its own span
    /// through a basis picked greedily in point order.
    pub fn restrict(&self, s: PointSet) -> GFqMatroid {
        let s = s & self.ground;
        let space = &self.space;
        let mut basis = Vec::new();
        let mut span: PointSet = 0;
        for p in BitIter(s as u64) {
            if space.closure(span) >> p & 1 == 0 {
                basis.push(p);
                span |= 1 << p;
            }
        }
        let target = pg(space.q(), basis.len()).expect("rank of a subset is within the cap");
        let cols: Vec<&[u8]> = basis.iter().map(|&b| space.coords(b)).collect();
        // send each target point (coefficients over the basis) to the point
        // it names in the source, then invert
        let mut to_target = vec![usize::MAX; space.len()];
        for t in 0..target.len() {
            let src = target.map_point(t, &cols, space).expect("basis is independent");
            to_target[src] = t;
        }
        let ground = BitIter(s as u64).fold(0, |acc, p| acc | 1 << to_target[p]);
        GFqMatroid::new(target, ground).expect("restriction is full rank in its span")
    }

    /// `M \ e`, re-embedded if the rank drops.
    pub fn delete(&self, e: usize) -> GFqMatroid {
        self.restrict(self.ground & !(1 << e))
    }

    /// `M` with the non-element `e` added, in the same geometry.
    pub fn add(&self, e: usize) -> GFqMatroid {
        GFqMatroid {
            space: self.space.clone(),
            ground: self.ground | 1 << e,
        }
    }

    /// The smallest ground set in the orbit under the projective group.
    pub fn canonical(&self) -> GFqMatroid {
        let t = orbits(self.q(), self.rank()).expect("space exists");
        GFqMatroid {
            space: self.space.clone(),
            ground: t.rep(self.ground),
        }
    }

    pub fn is_equivalent(&self, other: &GFqMatroid) -> bool {
        self.q() == other.q() && self.rank() == other.rank() && self.canonical().ground == other.canonical().ground
    }
}

impl PartialEq for GFqMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.q() == other.q() && self.rank() == other.rank() && self.ground == other.ground
    }
}

impl Eq for GFqMatroid {}

impl Hash for GFqMatroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (self.q(), self.rank(), self.ground).hash(state);
    }
}

impl PartialOrd for GFqMatroid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GFqMatroid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.q(), self.rank(), self.ground).cmp(&(other.q(), other.rank(), other.ground))
    }
}

impl fmt::Debug for GFqMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GFqMatroid({self})")
    }
}

/// `q r : i,j,k` with indices into the point order of PG(r-1, q).
impl fmt::Display for GFqMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.elements().map(|p| p.to_string()).collect();
        write!(f, "{} {} : {}", self.q(), self.rank(), pts.join(","))
    }
}

impl FromStr for GFqMatroid {
    type Err = MatroidError;

    fn from_str(text: &str) -> Result<Self, MatroidError> {
        let bad = |reason: &str| MatroidError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let (head, tail) = text.split_once(':').ok_or_else(|| bad("missing ':'"))?;
        let mut head = head.split_whitespace();
        let q: u8 = head
            .next()
            .ok_or_else(|| bad("missing q"))?
            .parse()
            .map_err(|_| bad("q is not a number"))?;
        let r: usize = head
            .next()
            .ok_or_else(|| bad("missing r"))?
            .parse()
            .map_err(|_| bad("r is not a number"))?;
        if head.next().is_some() {
            return Err(bad("expected exactly 'q r' before ':'"));
        }
        let points = tail
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad("point index is not a number")))
            .collect::<Result<Vec<_>, _>>()?;
        GFqMatroid::from_indices(q, r, &points)
    }
}

/// All flats of a matroid, ordered by rank and then by point set.
#[derive(Clone, Debug)]
pub struct FlatLattice {
    pub matroid: GFqMatroid,
    pub flats: Vec<PointSet>,
}

impl FlatLattice {
    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn contains(&self, s: PointSet) -> bool {
        self.flats
            .binary_search_by_key(&(self.matroid.space().rank(s), s), |&f| {
                (self.matroid.space().rank(f), f)
            })
            .is_ok()
    }

    pub fn of_rank(&self, k: usize) -> impl Iterator<Item = PointSet> + '_ {
        let space = self.matroid.space().clone();
        self.flats.iter().copied().filter(move |&f| space.rank(f) == k)
    }

    /// Flats other than the ground set.
    pub fn proper(&self) -> impl Iterator<Item = PointSet> + '_ {
        let ground = self.matroid.ground();
        self.flats.iter().copied().filter(move |&f| f != ground)
    }
}
