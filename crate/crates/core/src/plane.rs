//! Plane cones cut out by two rational half-planes, each open or closed.
//!
//! A positive cone of this kind that is not finitely generated is carried
//! by an integer linear map onto one of four model semigroups:
//!
//! ```text
//! H  = {a >= 1, b >= 0} ∪ {0}      H1 = {b >= 1} ∪ {a >= 0, b = 0}
//! H' = {a >= 1, b >= 1} ∪ {0}      H2 = {b >= 1} ∪ {0}
//! ```
//!
//! Two half-planes with the same boundary line describe a half-plane. In
//! that case the line is split into two rays: the first form owns the ray
//! obtained by turning its normal clockwise, the second form owns the
//! opposite ray, and each flag says whether its ray belongs to the cone.
//! With this reading `y >= 0 & y > 0` is H1 and `y > 0 & y > 0` is H2.
//!
//! Angles are never measured. Everything is decided by signs of 2x2
//! determinants and dot products.

use std::fmt;

use num::{Integer, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{smith_normal_form, IntMatrix, Lattice};
use crate::semigroup::{box_points, AffineSemigroup, SemigroupError, Verdict};

pub type Point = [i64; 2];

/// Bound for the radical power search in [`param_pair_reject`].
pub const DEFAULT_POWER_BOUND: u32 = 8;
/// Half-width of the square used for box verification.
pub const DEFAULT_BOX_RADIUS: i64 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("linear form is zero")]
    ZeroForm,
    #[error("cone is only the origin")]
    EmptyCone,
    #[error("cone contains a line")]
    NotPositive,
    #[error("cone is finitely generated")]
    FinitelyGeneratedInput,
    #[error("operation needs a model tag other than {0}")]
    UnsupportedTag(ModelTag),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("unit monomial X^{point:?}")]
    UnitInput { point: Point },
    #[error("X^{point:?} is not in the semigroup")]
    NotInModel { point: Point },
    #[error("sublattice must have rank 2")]
    SublatticeRank,
    #[error("radical equality with X^{certificate:?} not verified up to power {bound}")]
    CertificateUnverified { certificate: Point, bound: u32 },
    #[error("expected points in the plane, found length {0}")]
    NotPlanar(usize),
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

fn dot(u: Point, v: Point) -> i64 {
    u[0] * v[0] + u[1] * v[1]
}

fn cross(u: Point, v: Point) -> i64 {
    u[0] * v[1] - u[1] * v[0]
}

fn neg(u: Point) -> Point {
    [-u[0], -u[1]]
}

fn scaled(k: i64, u: Point) -> Point {
    [k * u[0], k * u[1]]
}

fn plane_box(radius: i64) -> impl Iterator<Item = Point> {
    box_points(2, radius).into_iter().map(|p| [p[0], p[1]])
}

/// The set a*x + b*y >= 0, or > 0 when strict. The form is stored with
/// coprime coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HalfPlaneDocument")]
pub struct HalfPlane {
    a: i64,
    b: i64,
    strict: bool,
}

#[derive(Deserialize)]
struct HalfPlaneDocument {
    a: i64,
    b: i64,
    strict: bool,
}

impl TryFrom<HalfPlaneDocument> for HalfPlane {
    type Error = PlaneError;
    fn try_from(d: HalfPlaneDocument) -> Result<Self, PlaneError> {
        HalfPlane::new(d.a, d.b, d.strict)
    }
}

impl HalfPlane {
    pub fn new(a: i64, b: i64, strict: bool) -> Result<Self, PlaneError> {
        let g = a.gcd(&b);
        if g == 0 {
            return Err(PlaneError::ZeroForm);
        }
        Ok(HalfPlane { a: a / g, b: b / g, strict })
    }

    pub fn closed(a: i64, b: i64) -> Result<Self, PlaneError> {
        Self::new(a, b, false)
    }

    pub fn open(a: i64, b: i64) -> Result<Self, PlaneError> {
        Self::new(a, b, true)
    }

    pub fn normal(&self) -> Point {
        [self.a, self.b]
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn eval(&self, p: Point) -> i64 {
        dot(self.normal(), p)
    }

    pub fn contains(&self, p: Point) -> bool {
        let v = self.eval(p);
        v > 0 || (v == 0 && !self.strict)
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, var) in [(self.a, "x"), (self.b, "y")] {
            if c == 0 {
                continue;
            }
            let sign = match (first, c < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}{var}")?;
            } else {
                write!(f, "{sign}{mag}*{var}")?;
            }
            first = false;
        }
        write!(f, " {} 0", if self.strict { ">" } else { ">=" })
    }
}

/// Rays bounding a cone, as primitive integer directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Ray {
    pub direction: Point,
    /// Whether the nonzero lattice points of the ray lie in the cone.
    pub included: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiRationalCone {
    pub l1: HalfPlane,
    pub l2: HalfPlane,
}

impl QuasiRationalCone {
    pub fn new(l1: HalfPlane, l2: HalfPlane) -> Result<Self, PlaneError> {
        let c = QuasiRationalCone { l1, l2 };
        if c.opposite() && (l1.strict || l2.strict) {
            return Err(PlaneError::EmptyCone);
        }
        Ok(c)
    }

    /// Same boundary line, same side.
    pub fn is_half_plane(&self) -> bool {
        cross(self.l1.normal(), self.l2.normal()) == 0 && dot(self.l1.normal(), self.l2.normal()) > 0
    }

    fn opposite(&self) -> bool {
        cross(self.l1.normal(), self.l2.normal()) == 0 && dot(self.l1.normal(), self.l2.normal()) < 0
    }

    /// Contains no line through the origin.
    pub fn is_positive(&self) -> bool {
        !self.opposite() && !(self.is_half_plane() && !self.l1.strict && !self.l2.strict)
    }

    /// The boundary rays owned by the first and second form.
    pub fn rays(&self) -> Result<(Ray, Ray), PlaneError> {
        if self.opposite() {
            return Err(PlaneError::NotPositive);
        }
        let (n1, n2) = (self.l1.normal(), self.l2.normal());
        let (r1, r2) = if self.is_half_plane() {
            let r = [n1[1], -n1[0]];
            (r, neg(r))
        } else {
            let pick = |n: Point, other: Point| {
                let r = [n[1], -n[0]];
                if dot(other, r) > 0 {
                    r
                } else {
                    neg(r)
                }
            };
            (pick(n1, n2), pick(n2, n1))
        };
        Ok((
            Ray { direction: r1, included: !self.l1.strict },
            Ray { direction: r2, included: !self.l2.strict },
        ))
    }

    /// Lattice point membership. The origin always belongs.
    pub fn contains(&self, p: Point) -> bool {
        if p == [0, 0] {
            return true;
        }
        if !self.is_half_plane() {
            return self.l1.contains(p) && self.l2.contains(p);
        }
        let n = self.l1.normal();
        match dot(n, p).signum() {
            1 => true,
            -1 => false,
            _ => {
                if cross(n, p) < 0 {
                    !self.l1.strict
                } else {
                    !self.l2.strict
                }
            }
        }
    }

    /// Parses `a*x+b*y >= 0 & c*x+d*y > 0`.
    pub fn parse(s: &str) -> Result<Self, PlaneError> {
        let parts: Vec<(usize, &str)> = {
            let mut out = Vec::new();
            let mut start = 0;
            for (i, ch) in s.char_indices() {
                if ch == '&' {
                    out.push((start, &s[start..i]));
                    start = i + 1;
                }
            }
            out.push((start, &s[start..]));
            out
        };
        if parts.len() != 2 {
            return Err(PlaneError::Parse {
                position: parts.get(2).map_or(s.len(), |p| p.0 - 1),
                message: format!("expected two clauses joined by '&', found {}", parts.len()),
            });
        }
        let l1 = parse_half_plane(parts[0].1, parts[0].0)?;
        let l2 = parse_half_plane(parts[1].1, parts[1].0)?;
        QuasiRationalCone::new(l1, l2)
    }
}

impl fmt::Display for QuasiRationalCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} & {}", self.l1, self.l2)
    }
}

fn parse_error(position: usize, message: impl Into<String>) -> PlaneError {
    PlaneError::Parse { position, message: message.into() }
}

/// One clause `form >= 0` or `form > 0`; `offset` is its position in the
/// whole input.
pub fn parse_half_plane(s: &str, offset: usize) -> Result<HalfPlane, PlaneError> {
    let bytes = s.as_bytes();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    let (mut a, mut b) = (0i64, 0i64);
    let mut terms = 0;
    loop {
        skip(&mut i);
        let mut sign = 1;
        if i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            sign = if bytes[i] == b'-' { -1 } else { 1 };
            i += 1;
            skip(&mut i);
        } else if terms > 0 {
            break;
        }
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start {
            s[start..i].parse().map_err(|_| parse_error(offset + start, "coefficient out of range"))?
        } else {
            1
        };
        skip(&mut i);
        if i > start && i < bytes.len() && bytes[i] == b'*' {
            i += 1;
            skip(&mut i);
        }
        match bytes.get(i) {
            Some(b'x') => a += sign * coeff,
            Some(b'y') => b += sign * coeff,
            _ => return Err(parse_error(offset + i, "expected variable x or y")),
        }
        i += 1;
        terms += 1;
    }
    let strict = if s[i..].starts_with(">=") {
        i += 2;
        false
    } else if s[i..].starts_with('>') {
        i += 1;
        true
    } else {
        return Err(parse_error(offset + i, "expected '>=' or '>'"));
    };
    skip(&mut i);
    if !s[i..].starts_with('0') {
        return Err(parse_error(offset + i, "right-hand side must be 0"));
    }
    i += 1;
    skip(&mut i);
    if i != bytes.len() {
        return Err(parse_error(offset + i, "unexpected trailing input"));
    }
    HalfPlane::new(a, b, strict).map_err(|_| parse_error(offset, "linear form is zero"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelTag {
    H,
    #[serde(rename = "H'")]
    HPrime,
    H1,
    H2,
    FinitelyGenerated,
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelTag::H => "H",
            ModelTag::HPrime => "H'",
            ModelTag::H1 => "H1",
            ModelTag::H2 => "H2",
            ModelTag::FinitelyGenerated => "FinitelyGenerated",
        })
    }
}

impl std::str::FromStr for ModelTag {
    type Err = PlaneError;
    fn from_str(s: &str) -> Result<Self, PlaneError> {
        match s {
            "H" => Ok(ModelTag::H),
            "H'" | "H′" | "Hprime" => Ok(ModelTag::HPrime),
            "H1" => Ok(ModelTag::H1),
            "H2" => Ok(ModelTag::H2),
            "FinitelyGenerated" => Ok(ModelTag::FinitelyGenerated),
            _ => Err(parse_error(0, format!("unknown model tag {s:?}"))),
        }
    }
}

pub fn model_membership(tag: ModelTag, p: Point) -> Result<bool, PlaneError> {
    let [a, b] = p;
    let zero = p == [0, 0];
    Ok(match tag {
        ModelTag::H => zero || (a >= 1 && b >= 0),
        ModelTag::HPrime => zero || (a >= 1 && b >= 1),
        ModelTag::H1 => b >= 1 || (a >= 0 && b == 0),
        ModelTag::H2 => zero || b >= 1,
        ModelTag::FinitelyGenerated => return Err(PlaneError::UnsupportedTag(tag)),
    })
}

/// A classification: `map` (acting on column vectors) carries the cone's
/// lattice points injectively into the model, and every model point q has
/// `scale * q` in the image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelType {
    pub tag: ModelTag,
    pub map: [[i64; 2]; 2],
    pub scale: i64,
}

impl ModelType {
    pub fn apply(&self, p: Point) -> Point {
        let m = self.map;
        [m[0][0] * p[0] + m[0][1] * p[1], m[1][0] * p[0] + m[1][1] * p[1]]
    }

    /// The lattice point mapping to q, if there is one.
    pub fn preimage(&self, q: Point) -> Option<Point> {
        let m = self.map;
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let x = m[1][1] * q[0] - m[0][1] * q[1];
        let y = -m[1][0] * q[0] + m[0][0] * q[1];
        (x % det == 0 && y % det == 0).then(|| [x / det, y / det])
    }
}

const IDENTITY: [[i64; 2]; 2] = [[1, 0], [0, 1]];

fn largest_invariant_factor(m: [[i64; 2]; 2]) -> i64 {
    let rows: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
    let snf = smith_normal_form(&IntMatrix::from_i64_rows(&rows, 2));
    snf.invariant_factors().last().and_then(|d| d.to_i64()).map_or(1, i64::abs)
}

/// Integer matrix sending u to a positive multiple of e1 and v to a positive
/// multiple of e2, with coprime entries.
fn straighten(u: Point, v: Point) -> [[i64; 2]; 2] {
    let d = cross(u, v);
    let s = d.signum();
    let adj = [[v[1] * s, -v[0] * s], [-u[1] * s, u[0] * s]];
    let g = adj.iter().flatten().fold(0i64, |g, x| g.gcd(x));
    adj.map(|r| r.map(|x| x / g))
}

pub fn classify(c: &QuasiRationalCone) -> Result<ModelType, PlaneError> {
    if !c.is_positive() {
        return Err(PlaneError::NotPositive);
    }
    let (r1, r2) = c.rays()?;
    if r1.included && r2.included {
        return Ok(ModelType { tag: ModelTag::FinitelyGenerated, map: IDENTITY, scale: 1 });
    }
    let (closed, other) = if r2.included { (r2, r1) } else { (r1, r2) };
    if c.is_half_plane() {
        let n = c.l1.normal();
        let e = n[0].extended_gcd(&n[1]);
        let w = [e.x, e.y];
        // columns r, w with n.w = 1 have determinant +-1, so the inverse is integral
        let r = closed.direction;
        let det = cross(r, w);
        let map = [[w[1] * det, -w[0] * det], [-r[1] * det, r[0] * det]];
        let tag = if closed.included { ModelTag::H1 } else { ModelTag::H2 };
        return Ok(ModelType { tag, map, scale: 1 });
    }
    let map = straighten(closed.direction, other.direction);
    let tag = if closed.included { ModelTag::H } else { ModelTag::HPrime };
    Ok(ModelType { tag, map, scale: largest_invariant_factor(map) })
}

/// Checks on the box that p lies in the cone exactly when map(p) lies in
/// the model, and that every model point q has scale*q = map(p) for a cone
/// point p.
pub fn classify_agreement(c: &QuasiRationalCone, m: &ModelType, radius: i64) -> Result<Verdict, PlaneError> {
    for p in plane_box(radius) {
        if c.contains(p) != model_membership(m.tag, m.apply(p))? {
            return Ok(Verdict::refuted(p.to_vec(), true));
        }
        if model_membership(m.tag, p)? {
            match m.preimage(scaled(m.scale, p)) {
                Some(pre) if c.contains(pre) => {}
                _ => return Ok(Verdict::refuted(p.to_vec(), true)),
            }
        }
    }
    Ok(Verdict::holds_on_box())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Normalization {
    pub t: i64,
    /// Acts on column vectors: phi * a = (t, 0), phi * b = (0, t).
    pub phi: [[i64; 2]; 2],
    pub a: Point,
    pub b: Point,
    /// Integral images, t*N^2 inside phi(C), nothing in the open third
    /// quadrant.
    pub checks: [Verdict; 3],
}

fn as_point(v: &[i64]) -> Result<Point, PlaneError> {
    match v {
        [x, y] => Ok([*x, *y]),
        _ => Err(PlaneError::NotPlanar(v.len())),
    }
}

/// The map phi of the normalization step for the semigroup C generated by
/// `generators`: the first two independent generators a, b go to t*e1 and
/// t*e2 where t is least with t*e1, t*e2 in Za + Zb.
pub fn normalize_map(generators: &[Vec<i64>], radius: i64) -> Result<Normalization, PlaneError> {
    let pts: Vec<Point> = generators.iter().map(|g| as_point(g)).collect::<Result<_, _>>()?;
    let (a, b) = pts
        .iter()
        .enumerate()
        .find_map(|(i, &a)| pts[i + 1..].iter().find(|&&b| cross(a, b) != 0).map(|&b| (a, b)))
        .ok_or(PlaneError::DependentGenerators)?;
    let basis = [[a[0], b[0]], [a[1], b[1]]];
    let t = largest_invariant_factor(basis);
    let det = cross(a, b);
    let adj = [[b[1], -b[0]], [-a[1], a[0]]];
    let phi = adj.map(|r| r.map(|x| x * t / det));

    let sg = AffineSemigroup::new(2, generators.to_vec())?.with_search_bound(radius);
    let oracle = sg.oracle()?;
    let apply = |p: Point| {
        let num = [adj[0][0] * p[0] + adj[0][1] * p[1], adj[1][0] * p[0] + adj[1][1] * p[1]];
        num.map(|x| (x * t % det == 0).then(|| x * t / det))
    };
    let members: Vec<Point> = plane_box(radius).filter(|p| oracle.contains(p)).collect();

    let mut checks = [Verdict::holds_on_box(), Verdict::holds_on_box(), Verdict::holds_on_box()];
    if let Some(p) = members.iter().find(|&&p| apply(p).iter().any(Option::is_none)) {
        checks[0] = Verdict::refuted(p.to_vec(), true);
    }
    let quadrant = (0..=radius).flat_map(|x| (0..=radius).map(move |y| [x, y]));
    for p in quadrant {
        // phi^{-1}(t p) = p_0 a + p_1 b
        let pre = [p[0] * a[0] + p[1] * b[0], p[0] * a[1] + p[1] * b[1]];
        if !oracle.contains(&pre) {
            checks[1] = Verdict::refuted(p.to_vec(), true);
            break;
        }
    }
    if let Some(p) = members.iter().find(|&&p| matches!(apply(p), [Some(x), Some(y)] if x < 0 && y < 0)) {
        checks[2] = Verdict::refuted(p.to_vec(), true);
    }
    Ok(Normalization { t, phi, a, b, checks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundingHalflines {
    pub l1: Ray,
    pub l2: Ray,
    /// Containment in the closed hull of the rays, multiples of interior
    /// points reaching the cone, at most one ray met.
    pub facts: [Verdict; 3],
    pub meet_count: usize,
}

pub fn bounding_halflines(c: &QuasiRationalCone, radius: i64, multiple_bound: i64) -> Result<BoundingHalflines, PlaneError> {
    if classify(c)?.tag == ModelTag::FinitelyGenerated {
        return Err(PlaneError::FinitelyGeneratedInput);
    }
    let (l1, l2) = c.rays()?;
    let (r1, r2) = (l1.direction, l2.direction);
    let orient = cross(r1, r2).signum();
    // closed hull and its interior
    let hull = |p: Point, strict: bool| {
        let (s, t) = if c.is_half_plane() {
            let v = c.l1.eval(p);
            (v, v)
        } else {
            (cross(r1, p) * orient, cross(p, r2) * orient)
        };
        if strict {
            s > 0 && t > 0
        } else {
            s >= 0 && t >= 0
        }
    };
    let mut facts = [Verdict::holds_on_box(), Verdict::holds_on_box(), Verdict::holds_on_box()];
    let pts: Vec<Point> = plane_box(radius).collect();
    if let Some(p) = pts.iter().find(|&&p| c.contains(p) && !hull(p, false)) {
        facts[0] = Verdict::refuted(p.to_vec(), true);
    }
    if let Some(p) = pts.iter().find(|&&p| hull(p, true) && !(1..=multiple_bound).any(|t| c.contains(scaled(t, p)))) {
        facts[1] = Verdict::refuted(p.to_vec(), true);
    }
    let meet_count = [l1, l2].iter().filter(|r| r.included).count();
    facts[2] = Verdict::exact(meet_count <= 1);
    for r in [l1, l2] {
        if c.contains(r.direction) != r.included {
            facts[2] = Verdict::refuted(r.direction.to_vec(), false);
        }
    }
    Ok(BoundingHalflines { l1, l2, facts, meet_count })
}

/// A model semigroup, optionally cut down to a finite-index sublattice.
/// The result is full in the model and every model point has a multiple in
/// it.
#[derive(Debug, Clone)]
pub struct ModelSemigroup {
    tag: ModelTag,
    lattice: Option<Lattice>,
}

impl ModelSemigroup {
    pub fn new(tag: ModelTag) -> Result<Self, PlaneError> {
        if tag == ModelTag::FinitelyGenerated {
            return Err(PlaneError::UnsupportedTag(tag));
        }
        Ok(ModelSemigroup { tag, lattice: None })
    }

    pub fn with_sublattice(tag: ModelTag, generators: &[Point]) -> Result<Self, PlaneError> {
        let mut m = Self::new(tag)?;
        let gens: Vec<Vec<i64>> = generators.iter().map(|g| g.to_vec()).collect();
        let l = Lattice::new(&gens, 2);
        if l.rank() != 2 {
            return Err(PlaneError::SublatticeRank);
        }
        m.lattice = Some(l);
        Ok(m)
    }

    pub fn tag(&self) -> ModelTag {
        self.tag
    }

    pub fn contains(&self, p: Point) -> bool {
        model_membership(self.tag, p).expect("tag checked")
            && self.lattice.as_ref().is_none_or(|l| l.contains(&p))
    }

    fn require_nonunit(&self, p: Point) -> Result<(), PlaneError> {
        if !self.contains(p) {
            return Err(PlaneError::NotInModel { point: p });
        }
        if p == [0, 0] {
            return Err(PlaneError::UnitInput { point: p });
        }
        Ok(())
    }

    /// Least k in 1..=bound with k*u in (v + S) for some v, i.e. X^u in the
    /// radical of the monomial ideal generated by the X^v.
    pub fn radical_power(&self, u: Point, ideal: &[Point], bound: u32) -> Option<u32> {
        (1..=bound).find(|&k| {
            let ku = scaled(k as i64, u);
            ideal.iter().any(|v| self.contains([ku[0] - v[0], ku[1] - v[1]]))
        })
    }
}

/// X^h with rad(f, g) = rad(h), and the powers that show it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCertificate {
    pub h: Point,
    /// h^k lies in (f, g).
    pub h_power: u32,
    /// f^k and g^k lie in (h).
    pub f_power: u32,
    pub g_power: u32,
}

impl PairCertificate {
    /// Re-checks the three containments at the recorded powers.
    pub fn verify(&self, m: &ModelSemigroup, f: Point, g: Point) -> bool {
        let inside = |u: Point, k: u32, ideal: &[Point]| {
            let ku = scaled(k as i64, u);
            ideal.iter().any(|v| m.contains([ku[0] - v[0], ku[1] - v[1]]))
        };
        inside(self.h, self.h_power, &[f, g]) && inside(f, self.f_power, &[self.h]) && inside(g, self.g_power, &[self.h])
    }
}

/// A single monomial with the same radical as (X^f, X^g). Two elements
/// whose ideal has the radical of one element cannot be a parameter
/// sequence, since the second local cohomology vanishes.
///
/// The base choice is X^(1,0) when the ideal meets the face b = 0 in H or
/// H1, X^(1,1) in H and H' and H2 otherwise, and X^(0,1) in H1 otherwise.
/// Inside a sublattice the least power of that base which lies in it is
/// used.
pub fn param_pair_reject(m: &ModelSemigroup, f: Point, g: Point, bound: u32) -> Result<PairCertificate, PlaneError> {
    m.require_nonunit(f)?;
    m.require_nonunit(g)?;
    let on_axis = f[1] == 0 || g[1] == 0;
    let base = match (m.tag, on_axis) {
        (ModelTag::H | ModelTag::H1, true) => [1, 0],
        (ModelTag::H1, false) => [0, 1],
        _ => [1, 1],
    };
    let k = (1..)
        .map(|k| scaled(k, base))
        .find(|p| m.lattice.as_ref().is_none_or(|l| l.contains(p)))
        .expect("finite index");
    let unverified = PlaneError::CertificateUnverified { certificate: k, bound };
    let h_power = m.radical_power(k, &[f, g], bound).ok_or(unverified.clone())?;
    let f_power = m.radical_power(f, &[k], bound).ok_or(unverified.clone())?;
    let g_power = m.radical_power(g, &[k], bound).ok_or(unverified)?;
    Ok(PairCertificate { h: k, h_power, f_power, g_power })
}

/// Whether X^f, X^g is a regular sequence in k[S], searched over the box
/// in (L1, lex) order. X^g is a zero divisor mod (X^f) exactly when some c
/// in S has c + g in f + S but c outside f + S; that c is the witness.
pub fn model_regular_pair(m: &ModelSemigroup, f: Point, g: Point, radius: i64) -> Result<(bool, Option<Point>), PlaneError> {
    m.require_nonunit(f)?;
    m.require_nonunit(g)?;
    for c in plane_box(radius) {
        if m.contains(c) && is_zero_divisor_witness(m, f, g, c) {
            return Ok((false, Some(c)));
        }
    }
    Ok((true, None))
}

/// The two membership tests behind a [`model_regular_pair`] witness.
pub fn is_zero_divisor_witness(m: &ModelSemigroup, f: Point, g: Point, c: Point) -> bool {
    !m.contains([c[0] - f[0], c[1] - f[1]]) && m.contains([c[0] + g[0] - f[0], c[1] + g[1] - f[1]])
}
