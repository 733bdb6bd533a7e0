//! The projective linear group acting on point sets.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::space::{pg, PGSpace, PointSet};
use crate::error::MatroidError;
use crate::graph::BitIter;

/// Image of a point set under a point permutation.
pub fn apply(perm: &[u8], set: PointSet) -> PointSet {
    BitIter(set as u64).fold(0, |acc, p| acc | 1 << perm[p])
}

/// The permutation of points induced by the matrix with columns `cols`,
/// or `None` if the matrix is singular.
fn induced_perm(space: &PGSpace, cols: &[Vec<u8>]) -> Option<Vec<u8>> {
    let cols: Vec<&[u8]> = cols.iter().map(Vec::as_slice).collect();
    let mut seen: PointSet = 0;
    let mut perm = Vec::with_capacity(space.len());
    for x in 0..space.len() {
        let y = space.map_point(x, &cols, space)?;
        if seen >> y & 1 == 1 {
            return None;
        }
        seen |= 1 << y;
        perm.push(y as u8);
    }
    Some(perm)
}

/// Every point permutation induced by GL(r, q), without repeats (scalar
/// matrices act trivially).
pub struct ProjectiveGroup {
    space: Arc<PGSpace>,
    perms: Vec<Vec<u8>>,
}

impl ProjectiveGroup {
    fn build(space: Arc<PGSpace>) -> Self {
        let (q, r) = (space.q() as usize, space.r());
        let mut perms = BTreeSet::new();
        for m in 0..q.pow((r * r) as u32) {
            let mut x = m;
            let cols: Vec<Vec<u8>> = (0..r)
                .map(|_| {
                    (0..r)
                        .map(|_| {
                            let d = (x % q) as u8;
                            x /= q;
                            d
                        })
                        .collect()
                })
                .collect();
            if let Some(p) = induced_perm(&space, &cols) {
                perms.insert(p);
            }
        }
        ProjectiveGroup {
            space,
            perms: perms.into_iter().collect(),
        }
    }

    pub fn space(&self) -> &Arc<PGSpace> {
        &self.space
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<u8>] {
        &self.perms
    }

    /// Smallest image of `set` over the whole group.
    pub fn canonical_ground(&self, set: PointSet) -> PointSet {
        self.perms.iter().map(|p| apply(p, set)).min().unwrap_or(set)
    }

    pub fn equivalent(&self, a: PointSet, b: PointSet) -> bool {
        a.count_ones() == b.count_ones() && self.canonical_ground(a) == self.canonical_ground(b)
    }
}

/// Elementary transvections, plus a non-trivial diagonal scaling when
/// q = 3. Over a prime field these generate GL(r, q).
fn generators(space: &PGSpace) -> Vec<Vec<u8>> {
    let (q, r) = (space.q(), space.r());
    let identity = |i: usize| -> Vec<u8> { (0..r).map(|j| (i == j) as u8).collect() };
    let mut gens = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i == j {
                continue;
            }
            let mut cols: Vec<Vec<u8>> = (0..r).map(identity).collect();
            cols[j][i] = 1;
            gens.extend(induced_perm(space, &cols));
        }
    }
    if q == 3 && r > 0 {
        let mut cols: Vec<Vec<u8>> = (0..r).map(identity).collect();
        cols[0][0] = 2;
        gens.extend(induced_perm(space, &cols));
    }
    gens
}

/// For every point set, the smallest set in its orbit.
pub struct OrbitTable {
    space: Arc<PGSpace>,
    rep: Vec<PointSet>,
}

impl OrbitTable {
    fn build(space: Arc<PGSpace>) -> Self {
        let size = 1usize << space.len();
        let mut parent: Vec<PointSet> = (0..size as PointSet).collect();
        fn find(parent: &mut [PointSet], mut x: PointSet) -> PointSet {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        for g in generators(&space) {
            for s in 0..size as PointSet {
                let (a, b) = (find(&mut parent, s), find(&mut parent, apply(&g, s)));
                // keep the smaller set as root so roots are orbit minima
                if a < b {
                    parent[b as usize] = a;
                } else if b < a {
                    parent[a as usize] = b;
                }
            }
        }
        let rep = (0..size as PointSet).map(|s| find(&mut parent, s)).collect();
        OrbitTable { space, rep }
    }

    pub fn space(&self) -> &Arc<PGSpace> {
        &self.space
    }

    pub fn rep(&self, set: PointSet) -> PointSet {
        self.rep[set as usize]
    }

    /// One set per orbit, ascending.
    pub fn representatives(&self) -> impl Iterator<Item = PointSet> + '_ {
        self.rep
            .iter()
            .enumerate()
            .filter(|&(s, &r)| s as PointSet == r)
            .map(|(s, _)| s as PointSet)
    }
}

type Cache<T> = OnceLock<Mutex<HashMap<(u8, usize), Arc<T>>>>;

fn cached<T>(cache: &'static Cache<T>, q: u8, r: usize, build: fn(Arc<PGSpace>) -> T) -> Result<Arc<T>, MatroidError> {
    let space = pg(q, r)?;
    let mut map = cache.get_or_init(Default::default).lock().expect("group cache");
    Ok(map.entry((q, r)).or_insert_with(|| Arc::new(build(space))).clone())
}

pub fn group(q: u8, r: usize) -> Result<Arc<ProjectiveGroup>, MatroidError> {
    static CACHE: Cache<ProjectiveGroup> = OnceLock::new();
    cached(&CACHE, q, r, ProjectiveGroup::build)
}

pub fn orbits(q: u8, r: usize) -> Result<Arc<OrbitTable>, MatroidError> {
    static CACHE: Cache<OrbitTable> = OnceLock::new();
    cached(&CACHE, q, r, OrbitTable::build)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(group(2, 2).unwrap().order(), 6);
        assert_eq!(group(2, 3).unwrap().order(), 168);
        assert_eq!(group(3, 2).unwrap().order(), 24);
        assert_eq!(group(3, 3).unwrap().order(), 5616);
    }

    #[test]
    fn orbit_table_matches_group_minimum() {
        for (q, r) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let g = group(q, r).unwrap();
            let t = orbits(q, r).unwrap();
            let all = g.space().all();
            for s in 0..=all {
                assert_eq!(t.rep(s), g.canonical_ground(s), "q={q} r={r} set={s:b}");
            }
        }
    }

    #[test]
    fn bases_of_the_plane_form_one_orbit() {
        let space = pg(2, 3).unwrap();
        let t = orbits(2, 3).unwrap();
        let bases: BTreeSet<PointSet> = (0..=space.all())
            .filter(|s| s.count_ones() == 3 && space.rank(*s) == 3)
            .map(|s| t.rep(s))
            .collect();
        assert_eq!(bases.len(), 1);
    }

    #[test]
    fn orbit_counts_by_size_in_fano() {
        // point sets of the Fano plane up to collineation, by size 0..=7
        let t = orbits(2, 3).unwrap();
        let mut by_size = [0; 8];
        for s in t.representatives() {
            by_size[s.count_ones() as usize] += 1;
        }
        assert_eq!(by_size, [1, 1, 1, 2, 2, 1, 1, 1]);
    }
}
