//! Fast exact visibility between boundary points.
//!
//! A closed segment between two boundary points lies in the closed polygon
//! iff no edge crosses it properly and, at every boundary point on it, the
//! next piece of the segment leaves into the closed interior angle there.
//! Only orientation tests and coordinate comparisons are needed, so the
//! predicate runs on machine integers (homogeneous coordinates) when the
//! coordinates are small, and on rationals otherwise.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::geometry::{orientation, Orientation, Point, Polygon};

/// Exact predicates over an indexed point list.
trait Kernel {
    fn orient(&self, a: usize, b: usize, c: usize) -> Orientation;
    /// Lexicographic order by `(x, y)`.
    fn cmp_xy(&self, a: usize, b: usize) -> Ordering;
}

struct RationalKernel<'a> {
    pts: Vec<&'a Point>,
}

impl Kernel for RationalKernel<'_> {
    fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        orientation(self.pts[a], self.pts[b], self.pts[c])
    }
    fn cmp_xy(&self, a: usize, b: usize) -> Ordering {
        self.pts[a].cmp(self.pts[b])
    }
}

/// Points `(X / D, Y / D)` with `D > 0` and all entries below `2^40` in
/// absolute value, so 3x3 determinants fit in `i128`.
struct IntKernel {
    pts: Vec<(i128, i128, i128)>,
}

const INT_BITS: u64 = 40;

fn small(v: &BigInt) -> Option<i128> {
    if v.bits() < INT_BITS {
        v.to_i128()
    } else {
        None
    }
}

impl IntKernel {
    fn new(points: &[&Point]) -> Option<IntKernel> {
        let pts = points
            .iter()
            .map(|p| {
                let d = p.x.denom().lcm(p.y.denom());
                let x = p.x.numer() * (&d / p.x.denom());
                let y = p.y.numer() * (&d / p.y.denom());
                Some((small(&x)?, small(&y)?, small(&d)?))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(IntKernel { pts })
    }
}

impl Kernel for IntKernel {
    fn orient(&self, a: usize, b: usize, c: usize) -> Orientation {
        let (xa, ya, da) = self.pts[a];
        let (xb, yb, db) = self.pts[b];
        let (xc, yc, dc) = self.pts[c];
        let det = xa * (yb * dc - yc * db) - ya * (xb * dc - xc * db) + da * (xb * yc - xc * yb);
        match det.cmp(&0) {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }
    fn cmp_xy(&self, a: usize, b: usize) -> Ordering {
        let (xa, ya, da) = self.pts[a];
        let (xb, yb, db) = self.pts[b];
        (xa * db).cmp(&(xb * da)).then((ya * db).cmp(&(yb * da)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Location {
    Vertex(usize),
    OnEdge(usize),
}

/// Visibility among boundary points of one polygon. Indices `0..n` are the
/// polygon vertices, `n..` the query points.
pub(crate) struct BoundaryVisibility<'a> {
    n: usize,
    kernel: alloc::boxed::Box<dyn Kernel + 'a>,
    locations: Vec<Option<Location>>,
}

impl<'a> BoundaryVisibility<'a> {
    pub(crate) fn new(polygon: &'a Polygon, points: &'a [Point]) -> Self {
        let n = polygon.len();
        let all: Vec<&Point> = polygon.vertices().iter().chain(points).collect();
        let kernel: alloc::boxed::Box<dyn Kernel> = match IntKernel::new(&all) {
            Some(k) => alloc::boxed::Box::new(k),
            None => alloc::boxed::Box::new(RationalKernel { pts: all }),
        };
        let mut vis = BoundaryVisibility { n, kernel, locations: Vec::new() };
        vis.locations = (0..points.len()).map(|i| vis.locate(n + i)).collect();
        vis
    }

    fn on_closed_segment(&self, a: usize, b: usize, p: usize) -> bool {
        let k = &self.kernel;
        if k.orient(a, b, p) != Orientation::Collinear {
            return false;
        }
        let (lo, hi) = if k.cmp_xy(a, b) == Ordering::Greater { (b, a) } else { (a, b) };
        k.cmp_xy(lo, p) != Ordering::Greater && k.cmp_xy(p, hi) != Ordering::Greater
    }

    fn locate(&self, p: usize) -> Option<Location> {
        let n = self.n;
        if let Some(v) = (0..n).find(|&v| self.kernel.cmp_xy(v, p) == Ordering::Equal) {
            return Some(Location::Vertex(v));
        }
        (0..n).find(|&e| self.on_closed_segment(e, (e + 1) % n, p)).map(Location::OnEdge)
    }

    fn location(&self, idx: usize) -> Option<Location> {
        if idx < self.n {
            Some(Location::Vertex(idx))
        } else {
            self.locations[idx - self.n]
        }
    }

    /// Whether the direction from `p` towards `q` starts into the closed
    /// interior angle at `p`. The polygon is clockwise, so the interior lies
    /// to the right of every edge.
    fn in_cone(&self, loc: Location, q: usize) -> bool {
        use Orientation::*;
        let k = &self.kernel;
        let n = self.n;
        match loc {
            Location::OnEdge(e) => k.orient(e, (e + 1) % n, q) != CounterClockwise,
            Location::Vertex(v) => {
                let (prev, next) = ((v + n - 1) % n, (v + 1) % n);
                match k.orient(v, next, prev) {
                    Clockwise => k.orient(v, next, q) != CounterClockwise && k.orient(v, q, prev) != CounterClockwise,
                    CounterClockwise => !(k.orient(v, prev, q) == Clockwise && k.orient(v, q, next) == Clockwise),
                    Collinear => k.orient(v, next, q) != CounterClockwise,
                }
            }
        }
    }

    /// `Some(visible)` for two boundary points given by combined index;
    /// `None` if either is not on the boundary.
    pub(crate) fn sees(&self, s: usize, e: usize) -> Option<bool> {
        let ls = self.location(s)?;
        let le = self.location(e)?;
        let k = &self.kernel;
        if k.cmp_xy(s, e) == Ordering::Equal {
            return Some(true);
        }
        let n = self.n;
        for a in 0..n {
            let b = (a + 1) % n;
            let (o1, o2) = (k.orient(s, e, a), k.orient(s, e, b));
            let (o3, o4) = (k.orient(a, b, s), k.orient(a, b, e));
            let strict =
                |x: Orientation, y: Orientation| x != Orientation::Collinear && y != Orientation::Collinear && x != y;
            if strict(o1, o2) && strict(o3, o4) {
                return Some(false);
            }
        }
        // Boundary points on the segment, ordered from s to e.
        let mut contacts: Vec<(usize, Location)> = alloc::vec![(s, ls), (e, le)];
        for v in 0..n {
            if self.on_closed_segment(s, e, v) && k.cmp_xy(v, s) != Ordering::Equal && k.cmp_xy(v, e) != Ordering::Equal
            {
                contacts.push((v, Location::Vertex(v)));
            }
        }
        let forward = k.cmp_xy(s, e) == Ordering::Less;
        contacts.sort_by(|&(a, _), &(b, _)| if forward { k.cmp_xy(a, b) } else { k.cmp_xy(b, a) });
        Some(contacts.windows(2).all(|w| self.in_cone(w[0].1, w[1].0)))
    }

    pub(crate) fn point_index(&self, i: usize) -> usize {
        self.n + i
    }
}
