//! Exact planar primitives over rational and integer coordinates.
//!
//! Everything downstream (drawing validation, segment extraction, the grid
//! oracles) reduces to sign computations on the orientation form
//! `chi(a, b, c)`, the determinant of the 3x3 matrix with rows
//! `(a.x, a.y, 1)`, `(b.x, b.y, 1)`, `(c.x, c.y, 1)`. Positive means `c`
//! lies to the left of the directed line `a -> b`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

/// Exact point in the plane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    /// Point `xn/xd, yn/yd`. Panics when a denominator is zero.
    pub fn from_fractions(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point {
            x: BigRational::new(BigInt::from(xn), BigInt::from(xd)),
            y: BigRational::new(BigInt::from(yn), BigInt::from(yd)),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation form: twice the signed area of the triangle `a b c`.
pub fn chi(a: &Point, b: &Point, c: &Point) -> BigRational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// Sign of [`chi`]: 1 left turn, -1 right turn, 0 collinear.
pub fn orient(a: &Point, b: &Point, c: &Point) -> i32 {
    let v = chi(a, b, c);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// True when the three points lie on one line.
pub fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    chi(a, b, c).is_zero()
}

/// True when `p` lies on the closed segment `a b`.
///
/// Degenerate segments (`a == b`) contain only that point.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    if !collinear(a, b, p) {
        return false;
    }
    // p is on the segment iff (p - a) . (p - b) <= 0.
    let dot = (&p.x - &a.x) * (&p.x - &b.x) + (&p.y - &a.y) * (&p.y - &b.y);
    !dot.is_positive()
}

/// True when `p` lies strictly inside the open segment `a b`.
pub fn strictly_between(a: &Point, b: &Point, p: &Point) -> bool {
    on_segment(a, b, p) && p != a && p != b
}

/// Relative interiors of segments `a b` and `c d` share a point, or an
/// endpoint of one lies in the relative interior of the other, or the
/// segments overlap in more than a shared endpoint. Sharing exactly one
/// endpoint (and nothing else) does not count.
pub fn segments_cross(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return true;
    }

    // Collinear / endpoint cases. A shared endpoint alone is allowed.
    let mut touches = 0usize;
    let mut shared_endpoints = 0usize;
    for (p, seg) in [
        (c, (a, b)),
        (d, (a, b)),
        (a, (c, d)),
        (b, (c, d)),
    ] {
        if on_segment(seg.0, seg.1, p) {
            touches += 1;
            if p == seg.0 || p == seg.1 {
                shared_endpoints += 1;
            }
        }
    }
    if touches == 0 {
        return false;
    }
    // Proper crossing through an endpoint, or overlap, shows up as either a
    // non-endpoint touch or more than one distinct touching configuration.
    if touches > shared_endpoints {
        return true;
    }
    // All touches are endpoint coincidences. One shared endpoint counted from
    // both sides gives shared_endpoints == 2 with the two points equal.
    if a == c || a == d || b == c || b == d {
        // Overlap beyond the shared point?
        let shared = if a == c || a == d { a } else { b };
        let other_ab = if shared == a { b } else { a };
        let other_cd = if shared == c { d } else { c };
        if collinear(a, b, c) && collinear(a, b, d) {
            // Same supporting line: overlap iff the other ends point the
            // same way from the shared point.
            let dot = (&other_ab.x - &shared.x) * (&other_cd.x - &shared.x)
                + (&other_ab.y - &shared.y) * (&other_cd.y - &shared.y);
            return dot.is_positive();
        }
        return false;
    }
    shared_endpoints > 0
}

/// Canonical key for the supporting line of two distinct exact points.
///
/// Lines are encoded as normalized integer triples `(a, b, c)` with
/// `a x + b y = c`, `gcd(|a|, |b|, |c|) = 1` and sign fixed so the first
/// nonzero of `(a, b)` is positive. Two point pairs get the same key iff
/// they span the same line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl LineKey {
    pub fn through(p: &Point, q: &Point) -> Option<LineKey> {
        if p == q {
            return None;
        }
        // Normal form a x + b y = c with (a, b) = (dy, -dx), scaled to
        // integers by the common denominator, then reduced.
        let ar = &q.y - &p.y;
        let br = &p.x - &q.x;
        let cr = &ar * &p.x + &br * &p.y;
        let m = BigRational::from_integer(ar.denom() * br.denom() * cr.denom());
        let a = (&ar * &m).to_integer();
        let b = (&br * &m).to_integer();
        let c = (&cr * &m).to_integer();
        use num_integer::Integer;
        let mut g = a.gcd(&b).gcd(&c);
        if g.is_zero() {
            g = BigInt::from(1);
        }
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        let flip = if !a.is_zero() {
            a.is_negative()
        } else {
            b.is_negative()
        };
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(LineKey { a, b, c })
    }

    /// True when the point satisfies the line equation.
    pub fn contains(&self, p: &Point) -> bool {
        let lhs = BigRational::from_integer(self.a.clone()) * &p.x
            + BigRational::from_integer(self.b.clone()) * &p.y;
        lhs == BigRational::from_integer(self.c.clone())
    }
}

/// Integer lattice point, the working currency of the search oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IPoint {
    pub x: i64,
    pub y: i64,
}

impl IPoint {
    pub fn new(x: i64, y: i64) -> Self {
        IPoint { x, y }
    }

    pub fn to_point(self) -> Point {
        Point::from_ints(self.x, self.y)
    }
}

/// Integer orientation form. Coordinates must stay small enough that the
/// products fit in i64; the grid oracles keep |x|, |y| < 2^20.
pub fn ichi(a: IPoint, b: IPoint, c: IPoint) -> i64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

pub fn iorient(a: IPoint, b: IPoint, c: IPoint) -> i32 {
    ichi(a, b, c).signum() as i32
}

pub fn icollinear(a: IPoint, b: IPoint, c: IPoint) -> bool {
    ichi(a, b, c) == 0
}

pub fn ion_segment(a: IPoint, b: IPoint, p: IPoint) -> bool {
    icollinear(a, b, p)
        && (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y) <= 0
}

/// Integer analogue of [`segments_cross`].
pub fn isegments_cross(a: IPoint, b: IPoint, c: IPoint, d: IPoint) -> bool {
    let o1 = iorient(a, b, c);
    let o2 = iorient(a, b, d);
    let o3 = iorient(c, d, a);
    let o4 = iorient(c, d, b);

    if o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return true;
    }

    let mut touches = 0usize;
    let mut shared_endpoints = 0usize;
    for (p, s0, s1) in [(c, a, b), (d, a, b), (a, c, d), (b, c, d)] {
        if ion_segment(s0, s1, p) {
            touches += 1;
            if p == s0 || p == s1 {
                shared_endpoints += 1;
            }
        }
    }
    if touches == 0 {
        return false;
    }
    if touches > shared_endpoints {
        return true;
    }
    if a == c || a == d || b == c || b == d {
        let shared = if a == c || a == d { a } else { b };
        let other_ab = if shared == a { b } else { a };
        let other_cd = if shared == c { d } else { c };
        if icollinear(a, b, c) && icollinear(a, b, d) {
            let dot = (other_ab.x - shared.x) * (other_cd.x - shared.x)
                + (other_ab.y - shared.y) * (other_cd.y - shared.y);
            return dot > 0;
        }
        return false;
    }
    shared_endpoints > 0
}

/// Canonical integer line key through two distinct lattice points.
/// Same normalization as [`LineKey::through`], already integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ILineKey {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ILineKey {
    pub fn through(p: IPoint, q: IPoint) -> Option<ILineKey> {
        if p == q {
            return None;
        }
        let a = q.y - p.y;
        let b = p.x - q.x;
        let c = a * p.x + b * p.y;
        let g = gcd3(a.abs(), b.abs(), c.abs());
        let (mut a, mut b, mut c) = (a / g, b / g, c / g);
        let flip = if a != 0 { a < 0 } else { b < 0 };
        if flip {
            a = -a;
            b = -b;
            c = -c;
        }
        Some(ILineKey { a, b, c })
    }

    pub fn contains(&self, p: IPoint) -> bool {
        self.a * p.x + self.b * p.y == self.c
    }
}

fn gcd2(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

fn gcd3(a: i64, b: i64, c: i64) -> i64 {
    let g = gcd2(gcd2(a, b), c);
    if g == 0 {
        1
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn chi_signs() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), 1);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, -1)), -1);
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(2, 0)), 0);
    }

    #[test]
    fn chi_antisymmetry() {
        let (a, b, c) = (p(1, 2), p(4, -1), p(0, 5));
        assert_eq!(chi(&a, &b, &c), -chi(&b, &a, &c));
        assert_eq!(chi(&a, &b, &c), chi(&b, &c, &a));
    }

    #[test]
    fn segment_membership() {
        assert!(on_segment(&p(0, 0), &p(4, 0), &p(2, 0)));
        assert!(on_segment(&p(0, 0), &p(4, 0), &p(0, 0)));
        assert!(!on_segment(&p(0, 0), &p(4, 0), &p(5, 0)));
        assert!(!on_segment(&p(0, 0), &p(4, 0), &p(2, 1)));
        assert!(strictly_between(&p(0, 0), &p(4, 0), &p(1, 0)));
        assert!(!strictly_between(&p(0, 0), &p(4, 0), &p(0, 0)));
    }

    #[test]
    fn crossing_cases() {
        // Proper crossing.
        assert!(segments_cross(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)));
        // Shared endpoint only: fine.
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)));
        // Endpoint in interior: crossing.
        assert!(segments_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 1)));
        // Collinear overlap: crossing.
        assert!(segments_cross(&p(0, 0), &p(3, 0), &p(1, 0), &p(5, 0)));
        // Collinear, disjoint: fine.
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)));
        // Collinear sharing an endpoint, opposite directions: fine.
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 0)));
        // Collinear sharing an endpoint, same direction (overlap): crossing.
        assert!(segments_cross(&p(0, 0), &p(2, 0), &p(0, 0), &p(1, 0)));
        // Disjoint, far apart.
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(5, 5), &p(6, 6)));
    }

    #[test]
    fn integer_matches_rational() {
        let cases = [
            ((0, 0), (2, 2), (0, 2), (2, 0)),
            ((0, 0), (1, 0), (1, 0), (2, 1)),
            ((0, 0), (2, 0), (1, 0), (1, 1)),
            ((0, 0), (3, 0), (1, 0), (5, 0)),
            ((0, 0), (1, 0), (2, 0), (3, 0)),
            ((0, 0), (2, 0), (0, 0), (1, 0)),
        ];
        for (a, b, c, d) in cases {
            let ip = |t: (i64, i64)| IPoint::new(t.0, t.1);
            let rp = |t: (i64, i64)| p(t.0, t.1);
            assert_eq!(
                isegments_cross(ip(a), ip(b), ip(c), ip(d)),
                segments_cross(&rp(a), &rp(b), &rp(c), &rp(d)),
                "case {:?}",
                (a, b, c, d)
            );
        }
    }

    #[test]
    fn line_keys_agree() {
        let k1 = ILineKey::through(IPoint::new(0, 0), IPoint::new(2, 2)).unwrap();
        let k2 = ILineKey::through(IPoint::new(5, 5), IPoint::new(-1, -1)).unwrap();
        assert_eq!(k1, k2);
        let k3 = ILineKey::through(IPoint::new(0, 1), IPoint::new(2, 3)).unwrap();
        assert_ne!(k1, k3);

        let r1 = LineKey::through(&p(0, 0), &p(2, 2)).unwrap();
        let r2 = LineKey::through(&p(5, 5), &p(-1, -1)).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.contains(&p(7, 7)));
        assert!(!r1.contains(&p(7, 8)));
    }

    #[test]
    fn line_key_fractions() {
        // Line through (0, 1/2) and (1, 1): y = x/2 + 1/2, i.e. x - 2y = -1.
        let a = Point::from_fractions(0, 1, 1, 2);
        let b = p(1, 1);
        let k = LineKey::through(&a, &b).unwrap();
        assert!(k.contains(&Point::from_fractions(3, 1, 2, 1)));
        assert!(!k.contains(&p(0, 0)));
        // Same line from two other points.
        let k2 = LineKey::through(&p(3, 2), &Point::from_fractions(-1, 1, 0, 1)).unwrap();
        assert_eq!(k, k2);
    }
}
