//! The Poincaré-disk picture of the Weyl group action.
//!
//! The trace form has signature (2,1). In the coordinates
//! `X = α−β`, `Y' = α+β−2γ`, `t = α+β+γ` it reads `3(u,u)/2 = 3X² + Y'² − t²`,
//! so isotropic lattice vectors land on the unit circle at the Klein point
//! `(√3X/t, Y'/t)` and every real root `u` cuts out a geodesic: the
//! boundary points orthogonal to `u`. The wall of `x` ends at the cusps
//! `y*` and `z*`, so the wall of `g(x)` ends at `g(y*)` and `g(z*)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::equitable::{Axis, DualDisplay, EquiVec};
use crate::error::{Error, Result};
use crate::isometry::{simple_reflection, word_matrix, Iso3, Perm3};
use crate::isotropic::{decompose_isotropic, pythagorean, PythTriple, TripleABC};
use crate::lattice::{coefficient_sign, descent, LatticeVec};
use crate::report::Report;
use crate::scalar::{self, int, Scalar};

/// Signature-(2,1) coordinates of an element of sl2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinkVec {
    pub x: Scalar,
    pub yp: Scalar,
    pub t: Scalar,
}

impl MinkVec {
    /// `3X² + Y'² − t²`
    pub fn quad(&self) -> Scalar {
        int(3) * &self.x * &self.x + &self.yp * &self.yp - &self.t * &self.t
    }

    /// Polarisation of [`MinkVec::quad`]; equals `3(u,v)/2`.
    pub fn bilinear(&self, o: &MinkVec) -> Scalar {
        int(3) * &self.x * &o.x + &self.yp * &o.yp - &self.t * &o.t
    }
}

pub fn embed(u: &EquiVec) -> MinkVec {
    let (a, b, c) = (&u.alpha, &u.beta, &u.gamma);
    MinkVec {
        x: a - b,
        yp: a + b - int(2) * c,
        t: a + b + c,
    }
}

/// A cusp on the unit circle, kept as a primitive integer triple `(X, Y', t)`
/// with `t > 0` and `3X² + Y'² = t²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPoint {
    pub x: BigInt,
    pub yp: BigInt,
    pub t: BigInt,
}

impl BoundaryPoint {
    pub fn from_lattice(u: &LatticeVec) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm = u.norm();
        if !norm.is_zero() {
            return Err(Error::NotIsotropic { norm });
        }
        let (a, b, c) = (&u.alpha, &u.beta, &u.gamma);
        let mut x = a - b;
        let mut yp = a + b - c * 2;
        let mut t = a + b + c;
        let g = x.gcd(&yp).gcd(&t);
        x /= &g;
        yp /= &g;
        t /= &g;
        if t.is_negative() {
            x = -x;
            yp = -yp;
            t = -t;
        }
        Ok(BoundaryPoint { x, yp, t })
    }

    /// Any nonzero isotropic element of sl2, such as `x*`.
    pub fn from_equivec(u: &EquiVec) -> Result<Self> {
        let den = u
            .coords()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let v = LatticeVec::from_equivec(&u.scale(&scalar::from_big(&den)))?;
        BoundaryPoint::from_lattice(&v)
    }

    pub fn on_circle(&self) -> bool {
        &self.x * &self.x * 3 + &self.yp * &self.yp == &self.t * &self.t && self.t.is_positive()
    }

    /// Klein coordinates; on the boundary the Poincaré point is the same.
    pub fn klein(&self) -> (f64, f64) {
        let f = |v: &BigInt| v.to_f64().unwrap_or(f64::NAN);
        let t = f(&self.t);
        (3f64.sqrt() * f(&self.x) / t, f(&self.yp) / t)
    }

    pub fn antipodal(&self, o: &BoundaryPoint) -> bool {
        self.x == -&o.x && self.yp == -&o.yp && self.t == o.t
    }
}

/// The geodesic orthogonal to a real root, with exact ideal endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Geodesic {
    /// The root with nonnegative coordinates; `u` and `−u` share a wall.
    pub root: LatticeVec,
    pub ends: [BoundaryPoint; 2],
}

impl Geodesic {
    pub fn label(&self) -> String {
        self.root.to_equivec().to_string()
    }
}

pub fn wall_geodesic(u: &LatticeVec) -> Result<Geodesic> {
    let w = descent(u)?;
    let g = word_matrix(&w);
    let a = BoundaryPoint::from_lattice(&g.apply(&LatticeVec::from_ints(1, 0, 1)))?;
    let b = BoundaryPoint::from_lattice(&g.apply(&LatticeVec::from_ints(1, 1, 0)))?;
    let root = if coefficient_sign(u) < 0 { u.neg() } else { u.clone() };
    let ends = if a <= b { [a, b] } else { [b, a] };
    Ok(Geodesic { root, ends })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chamber {
    pub word: Vec<Axis>,
    pub matrix: Iso3,
}

impl Chamber {
    pub fn word_text(&self) -> String {
        let parts: Vec<String> = self.word.iter().map(|a| format!("r{}", a.name())).collect();
        parts.join(" ")
    }

    /// `−2w(x*), −2w(y*), −2w(z*)` in `L`.
    pub fn vertices(&self) -> [LatticeVec; 3] {
        cusps().map(|c| self.matrix.apply(&c))
    }
}

/// `−2x*, −2y*, −2z*`
fn cusps() -> [LatticeVec; 3] {
    [
        LatticeVec::from_ints(0, 1, 1),
        LatticeVec::from_ints(1, 0, 1),
        LatticeVec::from_ints(1, 1, 0),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    /// `(a², b², c²)`, which is `−2` times the element of `Ω`.
    pub vector: LatticeVec,
    pub point: BoundaryPoint,
    pub triple: TripleABC,
    pub pythagorean: PythTriple,
    /// Length of the shortest Weyl word reaching this cusp.
    pub depth: usize,
}

impl Vertex {
    fn new(vector: LatticeVec, depth: usize) -> Self {
        let d = decompose_isotropic(&vector.neg()).expect("Weyl images of cusps are isotropic");
        let triple = d.triple();
        Vertex {
            point: BoundaryPoint::from_lattice(&vector).expect("isotropic"),
            pythagorean: pythagorean(&triple),
            triple,
            vector,
            depth,
        }
    }

    pub fn element(&self) -> EquiVec {
        self.vector.to_equivec().scale(&scalar::frac(-1, 2))
    }

    pub fn squares_label(&self) -> String {
        format!("{}\u{b2} {}\u{b2} {}\u{b2}", self.triple.a, self.triple.b, self.triple.c)
    }

    pub fn dual_label(&self) -> String {
        DualDisplay(&self.element()).to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    pub depth: usize,
    pub chambers: Vec<Chamber>,
    pub walls: Vec<Geodesic>,
    pub vertices: Vec<Vertex>,
}

impl Scene {
    pub fn vertex_set(&self) -> BTreeSet<LatticeVec> {
        self.vertices.iter().map(|v| v.vector.clone()).collect()
    }

    pub fn chamber_set(&self) -> BTreeSet<Vec<Vec<BigInt>>> {
        self.chambers.iter().map(|c| c.matrix.matrix().to_rows()).collect()
    }

    pub fn wall_set(&self) -> BTreeSet<LatticeVec> {
        self.walls.iter().map(|w| w.root.clone()).collect()
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "depth": self.depth,
            "chambers": self.chambers.len(),
            "walls": self.walls.len(),
            "vertices": self.vertices.len(),
        })
    }
}

/// Chambers of reduced Weyl words of length at most `depth`, their walls and cusps.
pub fn tessellate(depth: usize) -> Scene {
    let mut chambers = vec![Chamber { word: Vec::new(), matrix: Iso3::identity() }];
    let mut frontier = chambers.clone();
    for _ in 0..depth {
        let mut next = Vec::new();
        for c in &frontier {
            for a in Axis::ALL {
                if c.word.last() == Some(&a) {
                    continue;
                }
                let mut word = c.word.clone();
                word.push(a);
                next.push(Chamber { word, matrix: c.matrix.mul(&simple_reflection(a)) });
            }
        }
        next.sort_by_key(|c| c.matrix.matrix().to_rows());
        chambers.extend(next.iter().cloned());
        frontier = next;
    }
    let mut seen = BTreeSet::new();
    chambers.retain(|c| seen.insert(c.matrix.matrix().to_rows()));

    let mut first_depth: BTreeMap<LatticeVec, usize> = BTreeMap::new();
    let mut roots = BTreeSet::new();
    for c in &chambers {
        for v in c.vertices() {
            first_depth.entry(v).or_insert(c.word.len());
        }
        for s in [LatticeVec::x(), LatticeVec::y(), LatticeVec::z()] {
            let r = c.matrix.apply(&s);
            roots.insert(if coefficient_sign(&r) < 0 { r.neg() } else { r });
        }
    }
    let walls = roots
        .iter()
        .map(|r| wall_geodesic(r).expect("Weyl images of simple roots are real"))
        .collect();
    let vertices = first_depth.into_iter().map(|(v, d)| Vertex::new(v, d)).collect();
    Scene { depth, chambers, walls, vertices }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelMode {
    All,
    None,
    Squares,
    Dual,
}

impl FromStr for LabelMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(LabelMode::All),
            "none" => Ok(LabelMode::None),
            "squares" => Ok(LabelMode::Squares),
            "dual" => Ok(LabelMode::Dual),
            other => Err(Error::UnknownElement(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub size: u32,
    pub labels: LabelMode,
    /// Counterclockwise rotation in degrees; the default puts `x*` at the top.
    pub rotation_deg: f64,
    /// Only vertices first reached within this many reflections are labelled.
    pub label_depth: usize,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { size: 800, labels: LabelMode::All, rotation_deg: -120.0, label_depth: 3 }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

struct Frame {
    cx: f64,
    r: f64,
    cos: f64,
    sin: f64,
}

impl Frame {
    fn new(opts: &RenderOptions) -> Self {
        let size = f64::from(opts.size);
        let rad = opts.rotation_deg.to_radians();
        Frame { cx: size / 2.0, r: size / 2.0 - 40.0, cos: rad.cos(), sin: rad.sin() }
    }

    /// Disk coordinates to screen coordinates (y grows downward).
    fn screen(&self, p: (f64, f64)) -> (f64, f64) {
        let (x, y) = (p.0 * self.cos - p.1 * self.sin, p.0 * self.sin + p.1 * self.cos);
        (self.cx + self.r * x, self.cx - self.r * y)
    }
}

/// SVG path data for a geodesic between two boundary points.
fn arc_path(g: &Geodesic, frame: &Frame) -> String {
    let p1 = g.ends[0].klein();
    let p2 = g.ends[1].klein();
    let (s1, s2) = (frame.screen(p1), frame.screen(p2));
    if g.ends[0].antipodal(&g.ends[1]) {
        return format!("M {} {} L {} {}", num(s1.0), num(s1.1), num(s2.0), num(s2.1));
    }
    // the orthogonal circle is centred where the tangents at p1 and p2 meet
    let dot = p1.0 * p2.0 + p1.1 * p2.1;
    let c = ((p1.0 + p2.0) / (1.0 + dot), (p1.1 + p2.1) / (1.0 + dot));
    let radius = ((c.0 - p1.0).powi(2) + (c.1 - p1.1).powi(2)).sqrt() * frame.r;
    let sc = frame.screen(c);
    let cross = (s1.0 - sc.0) * (s2.1 - sc.1) - (s1.1 - sc.1) * (s2.0 - sc.0);
    let sweep = u8::from(cross > 0.0);
    format!(
        "M {} {} A {} {} 0 0 {} {} {}",
        num(s1.0),
        num(s1.1),
        num(radius),
        num(radius),
        sweep,
        num(s2.0),
        num(s2.1)
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render_svg(scene: &Scene, opts: &RenderOptions) -> String {
    let frame = Frame::new(opts);
    let size = opts.size;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, r#"<rect width="{size}" height="{size}" fill="white"/>"#);
    let _ = writeln!(
        out,
        r#"<circle class="boundary" cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        c = num(frame.cx),
        r = num(frame.r)
    );
    let _ = writeln!(out, r#"<g class="walls" fill="none" stroke="black" stroke-width="0.8">"#);
    for w in &scene.walls {
        let _ = writeln!(
            out,
            r#"<path class="wall" data-root="{}" d="{}"/>"#,
            escape(&w.label()),
            arc_path(w, &frame)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g class="vertices" font-family="serif" text-anchor="middle">"#);
    for v in &scene.vertices {
        let (kx, ky) = v.point.klein();
        let (sx, sy) = frame.screen((kx, ky));
        let _ = writeln!(out, r#"<circle cx="{}" cy="{}" r="2" fill="black"/>"#, num(sx), num(sy));
        if opts.labels == LabelMode::None || v.depth > opts.label_depth {
            continue;
        }
        let font = 14.0 / (1.0 + v.depth as f64 * 0.5);
        let (lx, ly) = frame.screen((kx * 1.06, ky * 1.06));
        let mut lines = Vec::new();
        if matches!(opts.labels, LabelMode::All | LabelMode::Squares) {
            lines.push(v.squares_label());
        }
        if matches!(opts.labels, LabelMode::All | LabelMode::Dual) {
            lines.push(v.dual_label());
        }
        for (i, line) in lines.iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="{}">{}</text>"#,
                num(lx),
                num(ly + i as f64 * font),
                num(font),
                escape(line)
            );
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, "</svg>");
    out
}

/// Checks on the tessellation through `max_depth`.
pub fn verify(max_depth: usize) -> Report {
    let mut rep = Report::default();
    let scenes: Vec<Scene> = (0..=max_depth).map(tessellate).collect();

    let on_circle = scenes
        .last()
        .map(|s| s.vertices.iter().all(|v| v.point.on_circle()))
        .unwrap_or(true);
    rep.push(
        "tessellation vertices satisfy 3X^2 + Y'^2 = t^2",
        on_circle,
        json!({ "max_depth": max_depth }),
    );

    let counts: Vec<usize> = scenes.iter().map(|s| s.chambers.len()).collect();
    let expected: Vec<usize> = (0..=max_depth)
        .map(|k| 1 + (1..=k).map(|j| 3usize << (j - 1)).sum::<usize>())
        .collect();
    rep.push(
        "chamber counts 1, 4, 10, 22, ...",
        counts == expected,
        json!({ "counts": counts, "expected": expected }),
    );

    let mut walls_ok = true;
    for s in &scenes {
        for w in &s.walls {
            for e in &w.ends {
                // inverts the embedding up to a factor of 6
                let v = LatticeVec::new(
                    &e.x * 3 + &e.yp + &e.t * 2,
                    -&e.x * 3 + &e.yp + &e.t * 2,
                    &e.t * 2 - &e.yp * 2,
                );
                walls_ok &= w.root.dot(&v).is_zero() && v.norm().is_zero();
            }
        }
    }
    rep.push("wall endpoints are isotropic and orthogonal to the root", walls_ok, Value::Null);

    let mut nested = true;
    for k in 0..max_depth {
        let (cur, next) = (&scenes[k], &scenes[k + 1]);
        let nv = next.vertex_set();
        let nc = next.chamber_set();
        let nw = next.wall_set();
        for a in Axis::ALL {
            let r = simple_reflection(a);
            nested &= cur.vertices.iter().all(|v| nv.contains(&r.apply(&v.vector)));
            nested &= cur.chambers.iter().all(|c| nc.contains(&r.mul(&c.matrix).matrix().to_rows()));
            nested &= cur.walls.iter().all(|w| {
                let img = r.apply(&w.root);
                nw.contains(&img) || nw.contains(&img.neg())
            });
        }
    }
    rep.push(
        "simple reflections map the depth-k scene into depth k+1",
        nested,
        json!({ "max_depth": max_depth }),
    );

    let mut s3_ok = true;
    for s in &scenes {
        let vs = s.vertex_set();
        for p in Perm3::ALL {
            let m = p.matrix();
            s3_ok &= vs.iter().all(|v| vs.contains(&m.apply(v)));
        }
        let labels: BTreeSet<[BigInt; 3]> = s
            .vertices
            .iter()
            .map(|v| [v.triple.a.clone(), v.triple.b.clone(), v.triple.c.clone()])
            .collect();
        for p in Perm3::ALL {
            s3_ok &= labels.iter().all(|l| {
                let mut q = l.clone();
                for i in 0..3 {
                    q[p.0[i] as usize] = l[i].clone();
                }
                labels.contains(&q)
            });
        }
    }
    rep.push("vertex sets and labels are S3-invariant", s3_ok, Value::Null);

    let depth0 = &scenes[0];
    let labels: BTreeSet<String> = depth0.vertices.iter().map(Vertex::squares_label).collect();
    rep.push(
        "central triangle has cusps 0^2 1^2 1^2 and permutations",
        depth0.walls.len() == 3 && labels.len() == 3 && depth0.vertices.iter().all(|v| v.triple.degenerate),
        json!({ "labels": labels }),
    );

    let opts = RenderOptions::default();
    let last = scenes.last().expect("at least depth 0");
    rep.push(
        "SVG rendering is deterministic",
        render_svg(last, &opts) == render_svg(&tessellate(max_depth), &opts),
        Value::Null,
    );
    rep
}
