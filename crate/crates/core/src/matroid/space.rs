use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::MatroidError;
use crate::graph::BitIter;

/// A set of points of one geometry, bit `i` for point `i`.
pub type PointSet = u32;

/// Largest supported rank for each field.
pub fn rank_cap(q: u8) -> Result<usize, MatroidError> {
    match q {
        2 => Ok(4),
        3 => Ok(3),
        _ => Err(MatroidError::UnsupportedField(q)),
    }
}

/// The points of PG(r-1, q) with rank and closure tables over all point
/// subsets.
pub struct PGSpace {
    q: u8,
    r: usize,
    coords: Vec<[u8; 4]>,
    /// Point index for every nonzero vector code, `u8::MAX` for zero.
    point_of_code: Vec<u8>,
    closure: Vec<PointSet>,
    rank: Vec<u8>,
}

impl std::fmt::Debug for PGSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PG({}, {})", self.r as isize - 1, self.q)
    }
}

fn code(v: &[u8], q: u8) -> usize {
    v.iter().fold(0, |acc, &x| acc * q as usize + x as usize)
}

impl PGSpace {
    fn build(q: u8, r: usize) -> Self {
        let total = (q as usize).pow(r as u32);
        let mut coords = Vec::new();
        let mut point_of_code = vec![u8::MAX; total];
        // vectors in lexicographic order; keep those whose first nonzero
        // coordinate is 1
        for c in 1..total {
            let mut v = [0u8; 4];
            let mut x = c;
            for i in (0..r).rev() {
                v[i] = (x % q as usize) as u8;
                x /= q as usize;
            }
            if v[..r].iter().find(|&&x| x != 0) == Some(&1) {
                coords.push(v);
            }
        }
        for (i, v) in coords.iter().enumerate() {
            for s in 1..q {
                let w: Vec<u8> = v[..r].iter().map(|&x| x * s % q).collect();
                point_of_code[code(&w, q)] = i as u8;
            }
        }
        let mut space = PGSpace {
            q,
            r,
            coords,
            point_of_code,
            closure: Vec::new(),
            rank: Vec::new(),
        };
        space.fill_tables();
        space
    }

    fn fill_tables(&mut self) {
        let size = 1usize << self.coords.len();
        let mut closure = vec![0 as PointSet; size];
        let mut rank = vec![0u8; size];
        for s in 1..size {
            let p = s.trailing_zeros() as usize;
            let rest = s & (s - 1);
            let base = closure[rest];
            if base >> p & 1 == 1 {
                closure[s] = base;
                rank[s] = rank[rest];
                continue;
            }
            let mut span = base | 1 << p;
            for x in BitIter(base as u64) {
                for c in 1..self.q {
                    span |= 1 << self.combine(x, p, c);
                }
            }
            closure[s] = span;
            rank[s] = rank[rest] + 1;
        }
        self.closure = closure;
        self.rank = rank;
    }

    /// The point through `x + c*y`.
    fn combine(&self, x: usize, y: usize, c: u8) -> usize {
        let q = self.q;
        let v: Vec<u8> = (0..self.r)
            .map(|i| (self.coords[x][i] + c * self.coords[y][i]) % q)
            .collect();
        self.point_of_code[code(&v, q)] as usize
    }

    pub fn q(&self) -> u8 {
        self.q
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of points, `(q^r - 1) / (q - 1)`.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn all(&self) -> PointSet {
        ((1u64 << self.len()) - 1) as PointSet
    }

    /// Normalized coordinates of point `i`.
    pub fn coords(&self, i: usize) -> &[u8] {
        &self.coords[i][..self.r]
    }

    /// The point spanned by a nonzero vector of length `r`.
    pub fn point_of(&self, v: &[u8]) -> Option<usize> {
        if v.len() != self.r || v.iter().any(|&x| x >= self.q) {
            return None;
        }
        match self.point_of_code[..].get(code(v, self.q)) {
            Some(&p) if p != u8::MAX => Some(p as usize),
            _ => None,
        }
    }

    pub fn rank(&self, s: PointSet) -> usize {
        self.rank[s as usize] as usize
    }

    /// Every point in the linear span of `s`.
    pub fn closure(&self, s: PointSet) -> PointSet {
        self.closure[s as usize]
    }

    /// Linear image of point `x` under the matrix whose columns are
    /// `cols`, as a point of `target`, or `None` if it maps to zero.
    pub(crate) fn map_point(&self, x: usize, cols: &[&[u8]], target: &PGSpace) -> Option<usize> {
        let q = self.q;
        let mut v = vec![0u8; target.r];
        for (i, col) in cols.iter().enumerate() {
            let a = self.coords[x][i];
            for (vj, &cj) in v.iter_mut().zip(col.iter()) {
                *vj = (*vj + a * cj) % q;
            }
        }
        target.point_of(&v)
    }
}

type Cache = Mutex<HashMap<(u8, usize), Arc<PGSpace>>>;

/// PG(r-1, q), built once per process. Rank 0 is the empty geometry.
pub fn pg(q: u8, r: usize) -> Result<Arc<PGSpace>, MatroidError> {
    let cap = rank_cap(q)?;
    if r > cap {
        return Err(MatroidError::RankOverCap { q, rank: r, cap });
    }
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().expect("pg cache");
    Ok(cache
        .entry((q, r))
        .or_insert_with(|| Arc::new(PGSpace::build(q, r)))
        .clone())
}
