//! Seeded polygon families. Coordinates are exact rationals with small
//! denominators and the same `(n, seed)` always yields the same polygon.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{int, polygon_kernel, rat, validate_polygon, Point, Polygon, Rational};

/// Seed of the ChaCha8 generator behind every random family.
pub type Seed = u64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("family needs at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
    #[error("unknown polygon family {0:?}")]
    UnknownFamily(alloc::string::String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Convex,
    Star,
    XMonotone,
    Random,
    Fan,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Convex, Family::Star, Family::XMonotone, Family::Random, Family::Fan];

    pub fn name(self) -> &'static str {
        match self {
            Family::Convex => "convex",
            Family::Star => "star",
            Family::XMonotone => "xmonotone",
            Family::Random => "random",
            Family::Fan => "fan",
        }
    }

    pub fn min_vertices(self) -> usize {
        if self == Family::Fan {
            4
        } else {
            3
        }
    }

    /// Whether the seed influences the output.
    pub fn is_seeded(self) -> bool {
        matches!(self, Family::Star | Family::XMonotone | Family::Random)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GeneratorError;
    fn from_str(s: &str) -> Result<Family, GeneratorError> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| GeneratorError::UnknownFamily(s.into()))
    }
}

pub fn generate(family: Family, n: usize, seed: Seed) -> Result<Polygon, GeneratorError> {
    match family {
        Family::Convex => convex_polygon(n),
        Family::Star => star_polygon(n, seed),
        Family::XMonotone => xmonotone_polygon(n, seed),
        Family::Random => random_simple_polygon(n, seed),
        Family::Fan => fan_polygon(n),
    }
}

fn check_n(n: usize, min: usize) -> Result<(), GeneratorError> {
    if n < min {
        Err(GeneratorError::TooFewVertices { n, min })
    } else {
        Ok(())
    }
}

fn rng(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Counterclockwise angular order of nonzero vectors, starting at the
/// positive x-axis.
fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    let half = |p: &Point| {
        if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a.x * &b.y - &a.y * &b.x;
        if cross.is_positive() {
            Ordering::Less
        } else if cross.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

/// Sorts around the origin and returns the points in clockwise order.
fn clockwise_around_origin(mut pts: Vec<Point>) -> Vec<Point> {
    pts.sort_by(angle_cmp);
    pts.reverse();
    pts
}

/// `n` points on a circle of radius 10, from the rational parametrization
/// `((h^2 - p^2), 2ph) / (h^2 + p^2)`. Half the points use `|p| < h` (right
/// half), the rest are mirrored to the left half. The values of `p` are never
/// symmetric about 0, so all x-coordinates differ.
pub fn convex_polygon(n: usize) -> Result<Polygon, GeneratorError> {
    check_n(n, 3)?;
    let right = n.div_ceil(2);
    let left = n - right;
    let half = |count: usize, mirror: bool| -> Vec<Point> {
        let c = count as i64;
        let h = 2 * c;
        (0..c)
            .map(|k| {
                let p = 4 * k - 2 * c + 3;
                let d = h * h + p * p;
                let x = rat(10 * (h * h - p * p), d);
                Point::new(if mirror { -x } else { x }, rat(10 * 2 * p * h, d))
            })
            .collect()
    };
    let mut pts = half(right, false);
    pts.extend(half(left, true));
    Ok(validate_polygon(clockwise_around_origin(pts)).expect("distinct points on a circle"))
}

/// Radial polygon around the origin: random integer directions with all
/// angular gaps below a half turn, scaled by random rational radii in
/// `[1, 10]` with denominators at most 100. The origin lies in the kernel.
pub fn star_polygon(n: usize, seed: Seed) -> Result<Polygon, GeneratorError> {
    check_n(n, 3)?;
    let mut r = rng(seed);
    let range = n as i64 + 8;
    let dirs = loop {
        let mut dirs: Vec<Point> = Vec::with_capacity(n);
        while dirs.len() < n {
            let d = Point::from_ints(r.random_range(-range..=range), r.random_range(-range..=range));
            if d.x.is_zero() && d.y.is_zero() {
                continue;
            }
            if dirs.iter().all(|e| angle_cmp(e, &d) != Ordering::Equal) {
                dirs.push(d);
            }
        }
        dirs.sort_by(angle_cmp);
        let gaps_ok = (0..n).all(|i| {
            let (a, b) = (&dirs[i], &dirs[(i + 1) % n]);
            (&a.x * &b.y - &a.y * &b.x).is_positive()
        });
        if gaps_ok {
            break dirs;
        }
    };
    let pts: Vec<Point> = dirs
        .into_iter()
        .map(|d| {
            let den = r.random_range(1..=100i64);
            let radius = rat(r.random_range(den..=10 * den), den);
            Point::new(d.x * &radius, d.y * &radius)
        })
        .collect();
    let poly = validate_polygon(clockwise_around_origin(pts)).expect("radially sorted polygons are simple");
    let center = Point::from_ints(0, 0);
    assert!(polygon_kernel(&poly).is_some_and(|k| k.contains(&center)), "the origin sees the whole star polygon");
    Ok(poly)
}

fn band_y<R: Rng>(r: &mut R, upper: bool) -> Rational {
    let den = r.random_range(1..=100i64);
    let y = rat(r.random_range(den..=2 * den), den);
    if upper {
        y
    } else {
        -y
    }
}

/// Vertices at `x = 0, ..., n - 1`; the two ends at `y = 0`, every other
/// vertex randomly in the band `[1, 2]` (upper chain) or `[-2, -1]` (lower).
pub fn xmonotone_polygon(n: usize, seed: Seed) -> Result<Polygon, GeneratorError> {
    check_n(n, 3)?;
    let mut r = rng(seed);
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for x in 1..n as i64 - 1 {
        let up = r.random_bool(0.5);
        let p = Point::new(int(x), band_y(&mut r, up));
        if up {
            upper.push(p);
        } else {
            lower.push(p);
        }
    }
    let mut pts = alloc::vec![Point::from_ints(0, 0)];
    pts.extend(upper);
    pts.push(Point::from_ints(n as i64 - 1, 0));
    pts.extend(lower.into_iter().rev());
    Ok(validate_polygon(pts).expect("two x-monotone chains separated by y = 0"))
}

fn orient_i64(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn crosses_i64(p: (i64, i64), q: (i64, i64), r: (i64, i64), s: (i64, i64)) -> bool {
    orient_i64(p, q, r).signum() * orient_i64(p, q, s).signum() < 0
        && orient_i64(r, s, p).signum() * orient_i64(r, s, q).signum() < 0
}

/// Random integer points in general position, untangled by 2-opt moves. The
/// lexicographically smallest crossing pair of edges is fixed first; every
/// move shortens the tour, so the loop terminates.
pub fn random_simple_polygon(n: usize, seed: Seed) -> Result<Polygon, GeneratorError> {
    check_n(n, 3)?;
    let mut r = rng(seed);
    let range = 4 * n as i64 + 16;
    let mut pts: Vec<(i64, i64)> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = (r.random_range(0..range), r.random_range(0..range));
        let clash =
            pts.contains(&p) || (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| orient_i64(pts[i], pts[j], p) == 0));
        if !clash {
            pts.push(p);
        }
    }
    'untangle: loop {
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                if crosses_i64(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n]) {
                    pts[i + 1..=j].reverse();
                    continue 'untangle;
                }
            }
        }
        break;
    }
    let pts = pts.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect();
    Ok(validate_polygon(pts).expect("no crossing edges in general position"))
}

/// An apex above a chain of `n - 1` points on the parabola `y = -x^2 / 100`
/// with `x` equally spaced in `[-10, 10]`. Every chain vertex but the two ends
/// is reflex and the visibility graph is the fan triangulation. The apex sits
/// at `x = 5 / (n - 2)`, halfway between two chain abscissae, so all
/// x-coordinates differ.
pub fn fan_polygon(n: usize) -> Result<Polygon, GeneratorError> {
    check_n(n, 4)?;
    let m = n as i64 - 2;
    let mut pts = alloc::vec![Point::new(rat(5, m), int(10))];
    for k in (0..=m).rev() {
        let x = rat(-10 * m + 20 * k, m);
        let y = -(&x * &x) / int(100);
        pts.push(Point::new(x, y));
    }
    Ok(validate_polygon(pts).expect("fan polygons are simple"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::monotone_chains;
    use crate::visibility::vertex_visibility_graph;

    #[test]
    fn convex_is_complete() {
        for n in [3, 4, 5, 12] {
            let p = convex_polygon(n).unwrap();
            assert_eq!(p.len(), n);
            assert!(p.reflex_vertices().is_empty());
            assert!(polygon_kernel(&p).is_some());
            assert!(vertex_visibility_graph(&p).is_complete());
            assert!(monotone_chains(&p).unwrap().is_some());
        }
        assert_eq!(convex_polygon(2), Err(GeneratorError::TooFewVertices { n: 2, min: 3 }));
    }

    #[test]
    fn star_is_deterministic() {
        let a = star_polygon(8, 1).unwrap();
        assert_eq!(a, star_polygon(8, 1).unwrap());
        assert_ne!(a, star_polygon(8, 2).unwrap());
        assert_eq!(star_polygon(3, 5).unwrap().len(), 3);
    }

    #[test]
    fn xmonotone_has_chains() {
        let p = xmonotone_polygon(10, 7).unwrap();
        assert!(monotone_chains(&p).unwrap().is_some());
        assert_eq!(p, xmonotone_polygon(10, 7).unwrap());
        assert_eq!(xmonotone_polygon(4, 0).unwrap().len(), 4);
    }

    #[test]
    fn random_is_simple() {
        let p = random_simple_polygon(20, 3).unwrap();
        assert_eq!(p.len(), 20);
        assert_eq!(p, random_simple_polygon(20, 3).unwrap());
    }

    #[test]
    fn fan_is_triangulation() {
        for n in [4, 5, 6, 9] {
            let p = fan_polygon(n).unwrap();
            let g = vertex_visibility_graph(&p);
            assert_eq!(g.edge_count(), 2 * n - 3, "n = {n}");
            assert_eq!(g.degree(0), n - 1);
            assert!(polygon_kernel(&p).is_some());
            assert!(monotone_chains(&p).unwrap().is_some());
            assert_eq!(p.reflex_vertices().len(), n - 3);
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("hexagon".parse::<Family>().is_err());
    }
}
