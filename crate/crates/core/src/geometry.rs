//! Exact rational predicates and simple-polygon primitives.
//!
//! Every predicate here is evaluated over arbitrary-precision rationals; no
//! floating point is involved anywhere. Polygons are stored clockwise.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number, always kept in canonical form.
pub type Rational = num_rational::BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer-valued rational `v`.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rational) -> Point {
        Point::new(&self.x + t * (&other.x - &self.x), &self.y + t * (&other.y - &self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntersectionKind {
    Disjoint,
    ProperCross,
    EndpointTouch,
    CollinearOverlap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLocation {
    Interior,
    Boundary,
    Exterior,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a polygon needs at least three vertices, got {0}")]
    FewerThanThreeVertices(usize),
    #[error("vertices {first} and {second} coincide")]
    RepeatedVertex { first: usize, second: usize },
    #[error("boundary edges {first} and {second} intersect")]
    SelfIntersecting { first: usize, second: usize },
    #[error("degenerate segment")]
    DegenerateSegment,
    #[error("segment endpoint {0} lies outside the polygon")]
    EndpointOutside(Box<Point>),
    #[error("vertices {first} and {second} share an x-coordinate")]
    DuplicateXCoordinate { first: usize, second: usize },
}

fn cross_value(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// Sign of the cross product `(q - p) x (r - p)`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let c = cross_value(p, q, r);
    if c.is_positive() {
        Orientation::CounterClockwise
    } else if c.is_negative() {
        Orientation::Clockwise
    } else {
        Orientation::Collinear
    }
}

/// `true` if `p` lies on the closed segment `ab` (which may be degenerate).
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if orientation(a, b, p) != Orientation::Collinear {
        return false;
    }
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

fn ordered_pair(p: &Point, q: &Point) -> (Point, Point) {
    if p <= q {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    }
}

/// Classifies how two non-degenerate closed segments meet.
pub fn segment_intersection_kind(s1: &Segment, s2: &Segment) -> Result<IntersectionKind, GeometryError> {
    if s1.is_degenerate() || s2.is_degenerate() {
        return Err(GeometryError::DegenerateSegment);
    }
    let (a, b, c, d) = (&s1.a, &s1.b, &s2.a, &s2.b);
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        // Collinear points are totally ordered by the lexicographic order.
        let (lo1, hi1) = ordered_pair(a, b);
        let (lo2, hi2) = ordered_pair(c, d);
        let lo = if lo1 >= lo2 { lo1 } else { lo2 };
        let hi = if hi1 <= hi2 { hi1 } else { hi2 };
        return Ok(match lo.cmp(&hi) {
            Ordering::Less => IntersectionKind::CollinearOverlap,
            Ordering::Equal => IntersectionKind::EndpointTouch,
            Ordering::Greater => IntersectionKind::Disjoint,
        });
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 != o2 && o3 != o4 {
        if [o1, o2, o3, o4].contains(&Orientation::Collinear) {
            Ok(IntersectionKind::EndpointTouch)
        } else {
            Ok(IntersectionKind::ProperCross)
        }
    } else {
        Ok(IntersectionKind::Disjoint)
    }
}

/// Parameter `t` of the projection of `q` onto the line through `a` and `b`.
fn projection_param(a: &Point, b: &Point, q: &Point) -> Rational {
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    let num = (&q.x - &a.x) * &dx + (&q.y - &a.y) * &dy;
    let den = &dx * &dx + &dy * &dy;
    num / den
}

/// Parameters along `s` (0 at `s.a`, 1 at `s.b`) of every point `s` shares
/// with `other`; for an overlap only the two ends of the overlap.
fn contact_params(s: &Segment, other: &Segment, kind: IntersectionKind) -> Vec<Rational> {
    match kind {
        IntersectionKind::Disjoint => Vec::new(),
        IntersectionKind::CollinearOverlap => {
            let mut ts = [projection_param(&s.a, &s.b, &other.a), projection_param(&s.a, &s.b, &other.b)];
            ts.sort();
            let zero = Rational::zero();
            let one = Rational::one();
            ts.iter().map(|t| t.clone().max(zero.clone()).min(one.clone())).collect()
        }
        IntersectionKind::EndpointTouch | IntersectionKind::ProperCross => {
            let ab = (&s.b.x - &s.a.x, &s.b.y - &s.a.y);
            let cd = (&other.b.x - &other.a.x, &other.b.y - &other.a.y);
            let denom = &ab.0 * &cd.1 - &ab.1 * &cd.0;
            if denom.is_zero() {
                // Collinear single-point contact: the shared endpoint.
                let p = if on_segment(&s.a, &s.b, &other.a) { &other.a } else { &other.b };
                alloc::vec![projection_param(&s.a, &s.b, p)]
            } else {
                let ac = (&other.a.x - &s.a.x, &other.a.y - &s.a.y);
                let num = &ac.0 * &cd.1 - &ac.1 * &cd.0;
                alloc::vec![num / denom]
            }
        }
    }
}

/// Simple polygon with distinct vertices, stored in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point>,
}

/// Twice the signed area (positive for counterclockwise order).
fn signed_area2(points: &[Point]) -> Rational {
    let n = points.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let p = &points[i];
        let q = &points[(i + 1) % n];
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    acc
}

/// Validates a vertex list as a simple polygon and normalizes it to clockwise
/// order. A counterclockwise input is reversed while keeping its first vertex.
pub fn validate_polygon(points: Vec<Point>) -> Result<Polygon, GeometryError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::FewerThanThreeVertices(n));
    }
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(GeometryError::RepeatedVertex { first: i, second: j });
            }
        }
    }
    let edge = |i: usize| Segment::new(points[i].clone(), points[(i + 1) % n].clone());
    for i in 0..n {
        let ei = edge(i);
        for j in i + 1..n {
            let ej = edge(j);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let kind = segment_intersection_kind(&ei, &ej)?;
            let ok =
                if adjacent { kind == IntersectionKind::EndpointTouch } else { kind == IntersectionKind::Disjoint };
            if !ok {
                return Err(GeometryError::SelfIntersecting { first: i, second: j });
            }
        }
    }
    let mut vertices = points;
    if signed_area2(&vertices).is_positive() {
        vertices[1..].reverse();
    }
    Ok(Polygon { vertices })
}

impl Polygon {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    /// Boundary edge from vertex `i` to vertex `i + 1` (cyclically).
    pub fn edge(&self, i: usize) -> Segment {
        let n = self.len();
        Segment::new(self.vertices[i % n].clone(), self.vertices[(i + 1) % n].clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    /// Twice the (positive) area.
    pub fn area2(&self) -> Rational {
        signed_area2(&self.vertices).abs()
    }

    /// Vertices whose two neighbours are collinear with them.
    pub fn collinear_vertices(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| {
                orientation(&self.vertices[(i + n - 1) % n], &self.vertices[i], &self.vertices[(i + 1) % n])
                    == Orientation::Collinear
            })
            .collect()
    }

    /// Indices `i` whose interior angle exceeds pi.
    pub fn reflex_vertices(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| {
                orientation(&self.vertices[(i + n - 1) % n], &self.vertices[i], &self.vertices[(i + 1) % n])
                    == Orientation::CounterClockwise
            })
            .collect()
    }

    /// Same polygon with vertex `k` relabelled as vertex 0.
    pub fn rotated(&self, k: usize) -> Polygon {
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(k % self.len());
        Polygon { vertices }
    }
}

/// Exact point location by boundary test plus ray casting.
pub fn locate_point(polygon: &Polygon, p: &Point) -> RegionLocation {
    let n = polygon.len();
    let mut inside = false;
    for i in 0..n {
        let a = polygon.vertex(i);
        let b = polygon.vertex((i + 1) % n);
        if on_segment(a, b, p) {
            return RegionLocation::Boundary;
        }
        if (a.y > p.y) != (b.y > p.y) {
            // The edge straddles the horizontal line through p; count it when
            // the crossing lies strictly to the right of p.
            let (lo, hi) = if a.y < b.y { (a, b) } else { (b, a) };
            if orientation(lo, hi, p) == Orientation::CounterClockwise {
                inside = !inside;
            }
        }
    }
    if inside {
        RegionLocation::Interior
    } else {
        RegionLocation::Exterior
    }
}

/// `true` iff every point of the closed segment `ab` lies in the closed
/// polygon. Touching or running along the boundary does not block.
pub fn segment_avoids_exterior(polygon: &Polygon, a: &Point, b: &Point) -> Result<bool, GeometryError> {
    for p in [a, b] {
        if locate_point(polygon, p) == RegionLocation::Exterior {
            return Err(GeometryError::EndpointOutside(Box::new(p.clone())));
        }
    }
    if a == b {
        return Ok(true);
    }
    let seg = Segment::new(a.clone(), b.clone());
    let mut params = alloc::vec![Rational::zero(), Rational::one()];
    for e in polygon.edges() {
        let kind = segment_intersection_kind(&seg, &e)?;
        if kind == IntersectionKind::ProperCross {
            return Ok(false);
        }
        params.extend(contact_params(&seg, &e, kind));
    }
    params.sort();
    params.dedup();
    let two = int(2);
    for w in params.windows(2) {
        let mid = (&w[0] + &w[1]) / &two;
        if locate_point(polygon, &a.lerp(b, &mid)) == RegionLocation::Exterior {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convex region given by its vertices in counterclockwise order. May be
/// degenerate: a single point or a segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexRegion {
    vertices: Vec<Point>,
}

impl ConvexRegion {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Average of the vertices; always a point of the region.
    pub fn centroid(&self) -> Point {
        let k = int(self.vertices.len() as i64);
        let mut x = Rational::zero();
        let mut y = Rational::zero();
        for v in &self.vertices {
            x += &v.x;
            y += &v.y;
        }
        Point::new(x / &k, y / k)
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => &self.vertices[0] == p,
            2 => on_segment(&self.vertices[0], &self.vertices[1], p),
            k => {
                (0..k).all(|i| orientation(&self.vertices[i], &self.vertices[(i + 1) % k], p) != Orientation::Clockwise)
            }
        }
    }
}

/// Clips a convex region (counterclockwise) to the closed half-plane to the
/// right of the directed line `a -> b`.
fn clip_right_of(region: &[Point], a: &Point, b: &Point) -> Vec<Point> {
    let k = region.len();
    let mut out: Vec<Point> = Vec::new();
    let value = |p: &Point| cross_value(a, b, p);
    for i in 0..k {
        let s = &region[i];
        let e = &region[(i + 1) % k];
        let fs = value(s);
        let fe = value(e);
        if !fs.is_positive() {
            out.push(s.clone());
        }
        if (fs.is_positive() && fe.is_negative()) || (fs.is_negative() && fe.is_positive()) {
            let t = &fs / (&fs - &fe);
            out.push(s.lerp(e, &t));
        }
    }
    let mut dedup: Vec<Point> = Vec::with_capacity(out.len());
    for p in out {
        if !dedup.contains(&p) {
            dedup.push(p);
        }
    }
    dedup
}

/// Intersection of the inner closed half-planes of all boundary edges, or
/// `None` when empty. The polygon is star-shaped iff this is `Some`.
pub fn polygon_kernel(polygon: &Polygon) -> Option<ConvexRegion> {
    let vs = polygon.vertices();
    let mut xmin = vs[0].x.clone();
    let mut xmax = vs[0].x.clone();
    let mut ymin = vs[0].y.clone();
    let mut ymax = vs[0].y.clone();
    for v in vs {
        if v.x < xmin {
            xmin = v.x.clone();
        }
        if v.x > xmax {
            xmax = v.x.clone();
        }
        if v.y < ymin {
            ymin = v.y.clone();
        }
        if v.y > ymax {
            ymax = v.y.clone();
        }
    }
    let mut region = alloc::vec![
        Point::new(xmin.clone(), ymin.clone()),
        Point::new(xmax.clone(), ymin),
        Point::new(xmax, ymax.clone()),
        Point::new(xmin, ymax),
    ];
    for e in polygon.edges() {
        region = clip_right_of(&region, &e.a, &e.b);
        if region.is_empty() {
            return None;
        }
    }
    Some(ConvexRegion { vertices: region })
}

/// Upper and lower boundary chains of an x-monotone polygon, as vertex
/// indices from the leftmost to the rightmost vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneChains {
    /// Clockwise chain from the leftmost to the rightmost vertex.
    pub upper: Vec<usize>,
    /// Counterclockwise chain from the leftmost to the rightmost vertex.
    pub lower: Vec<usize>,
}

/// Splits an x-monotone polygon into its chains; `Ok(None)` if the polygon is
/// not x-monotone. Requires pairwise distinct x-coordinates.
pub fn monotone_chains(polygon: &Polygon) -> Result<Option<MonotoneChains>, GeometryError> {
    let n = polygon.len();
    let vs = polygon.vertices();
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by(|&i, &j| vs[i].x.cmp(&vs[j].x));
    for w in by_x.windows(2) {
        if vs[w[0]].x == vs[w[1]].x {
            let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(GeometryError::DuplicateXCoordinate { first, second });
        }
    }
    let left = by_x[0];
    let right = by_x[n - 1];
    let mut upper = alloc::vec![left];
    let mut i = left;
    while i != right {
        let j = (i + 1) % n;
        if vs[j].x <= vs[i].x {
            return Ok(None);
        }
        upper.push(j);
        i = j;
    }
    let mut lower = alloc::vec![left];
    let mut i = left;
    while i != right {
        let j = (i + n - 1) % n;
        if vs[j].x <= vs[i].x {
            return Ok(None);
        }
        lower.push(j);
        i = j;
    }
    Ok(Some(MonotoneChains { upper, lower }))
}
