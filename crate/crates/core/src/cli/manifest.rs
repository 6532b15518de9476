//! Manifest files: a quasitoric manifold with optional bundles and circle.
//!
//! ```text
//! manifest := { blank | comment | header | entry }
//! comment  := "#" text                  (also allowed after an entry)
//! header   := "[" section "]"
//! entry    := key "=" value
//! ints     := int { ("," | " ") int }
//!
//! [polytope]  builtin   = "simplex" N | "cube" N | "polygon" K | "interval" | "stacked" N K
//!             dimension = N             (explicit form, with facets and vertex)
//!             facets    = M
//!             vertex    = ints          (n facet numbers, 1-based; repeated)
//! [lambda]    row       = ints          (n rows of m entries)
//! [spinc]     gamma     = ints          (m entries; default all ones)
//! [bundles]   v         = ints          (m coefficients per line; repeated)
//!             w         = ints
//!             trivial_w = N
//! [circle]    xi        = ints          (n entries)
//! ```

use std::fmt::Write as _;

use crate::genus::BundleSpec;
use crate::polytope::{CharacteristicMatrix, QuasitoricManifold, SimplePolytope};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeSpec {
    Simplex(usize),
    Cube(usize),
    Polygon(usize),
    Interval,
    Stacked(usize, usize),
    /// Vertices as 1-based facet lists.
    Explicit { dim: usize, facets: usize, vertices: Vec<Vec<usize>> },
}

impl PolytopeSpec {
    pub fn build(&self) -> Result<SimplePolytope> {
        match self {
            Self::Simplex(n) => SimplePolytope::simplex(*n),
            Self::Cube(n) => SimplePolytope::cube(*n),
            Self::Polygon(k) => SimplePolytope::polygon(*k),
            Self::Interval => Ok(SimplePolytope::interval()),
            Self::Stacked(n, k) => SimplePolytope::stacked_simplices(*n, *k),
            Self::Explicit { dim, facets, vertices } => {
                if vertices.iter().flatten().any(|&f| f == 0) {
                    return Err(Error::Argument("facets are numbered from 1".into()));
                }
                let zero_based = vertices.iter().map(|v| v.iter().map(|f| f - 1).collect()).collect();
                SimplePolytope::new(*dim, *facets, zero_based)
            }
        }
    }

    fn dims(&self) -> (usize, usize) {
        match self {
            Self::Simplex(n) => (*n, n + 1),
            Self::Cube(n) => (*n, 2 * n),
            Self::Polygon(k) => (2, *k),
            Self::Interval => (1, 2),
            Self::Stacked(n, k) => (*n, n + k),
            Self::Explicit { dim, facets, .. } => (*dim, *facets),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub polytope: PolytopeSpec,
    pub lambda: Vec<Vec<i64>>,
    pub gamma: Option<Vec<i64>>,
    pub bundles: BundleSpec,
    pub circle: Option<Vec<i64>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Polytope,
    Lambda,
    Spinc,
    Bundles,
    Circle,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn ints<T: std::str::FromStr>(line: usize, value: &str) -> Result<Vec<T>> {
    value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| err(line, format!("expected an integer, found `{t}`"))))
        .collect()
}

fn single<T: std::str::FromStr>(line: usize, value: &str) -> Result<T> {
    let mut v = ints::<T>(line, value)?;
    if v.len() == 1 {
        Ok(v.remove(0))
    } else {
        Err(err(line, format!("expected one integer, found `{value}`")))
    }
}

fn builtin(line: usize, value: &str) -> Result<PolytopeSpec> {
    let mut words = value.split_whitespace();
    let kind = words.next().unwrap_or("");
    let args: Vec<usize> = ints(line, &words.collect::<Vec<_>>().join(" "))?;
    Ok(match (kind, args.as_slice()) {
        ("simplex", [n]) => PolytopeSpec::Simplex(*n),
        ("cube", [n]) => PolytopeSpec::Cube(*n),
        ("polygon", [k]) => PolytopeSpec::Polygon(*k),
        ("interval", []) => PolytopeSpec::Interval,
        ("stacked", [n, k]) => PolytopeSpec::Stacked(*n, *k),
        _ => return Err(err(line, format!("unknown builtin polytope `{value}`"))),
    })
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self> {
        let mut section = Section::None;
        let mut builtin_spec: Option<(usize, PolytopeSpec)> = None;
        let (mut dim, mut facets): (Option<usize>, Option<usize>) = (None, None);
        let mut vertices: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut lambda: Vec<(usize, Vec<i64>)> = Vec::new();
        let mut gamma: Option<(usize, Vec<i64>)> = None;
        let mut v: Vec<(usize, Vec<i64>)> = Vec::new();
        let mut w: Vec<(usize, Vec<i64>)> = Vec::new();
        let mut trivial_w = 0;
        let mut circle: Option<(usize, Vec<i64>)> = None;
        let mut last_line = 0;

        for (i, raw) in text.lines().enumerate() {
            let ln = i + 1;
            last_line = ln;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            if let Some(name) = content.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                section = match name.trim() {
                    "polytope" => Section::Polytope,
                    "lambda" => Section::Lambda,
                    "spinc" => Section::Spinc,
                    "bundles" => Section::Bundles,
                    "circle" => Section::Circle,
                    other => return Err(err(ln, format!("unknown section [{other}]"))),
                };
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(ln, "expected `key = value`"))?;
            match (section, key) {
                (Section::None, _) => return Err(err(ln, "entry before any section header")),
                (Section::Polytope, "builtin") => builtin_spec = Some((ln, builtin(ln, value)?)),
                (Section::Polytope, "dimension") => dim = Some(single(ln, value)?),
                (Section::Polytope, "facets") => facets = Some(single(ln, value)?),
                (Section::Polytope, "vertex") => vertices.push((ln, ints(ln, value)?)),
                (Section::Lambda, "row") => lambda.push((ln, ints(ln, value)?)),
                (Section::Spinc, "gamma") => gamma = Some((ln, ints(ln, value)?)),
                (Section::Bundles, "v") => v.push((ln, ints(ln, value)?)),
                (Section::Bundles, "w") => w.push((ln, ints(ln, value)?)),
                (Section::Bundles, "trivial_w") => trivial_w = single(ln, value)?,
                (Section::Circle, "xi") => circle = Some((ln, ints(ln, value)?)),
                (_, key) => return Err(err(ln, format!("unknown key `{key}` in this section"))),
            }
        }

        let polytope = match (builtin_spec, dim, facets) {
            (Some((ln, _)), Some(_), _) | (Some((ln, _)), _, Some(_)) => {
                return Err(err(ln, "give either a builtin or an explicit polytope, not both"))
            }
            (Some((_, spec)), None, None) => {
                if let Some((ln, _)) = vertices.first() {
                    return Err(err(*ln, "vertex entries need an explicit polytope"));
                }
                spec
            }
            (None, Some(dim), Some(facets)) => {
                for (ln, vert) in &vertices {
                    if vert.len() != dim {
                        return Err(err(*ln, format!("vertex needs {dim} facets, found {}", vert.len())));
                    }
                    if let Some(f) = vert.iter().find(|&&f| f == 0 || f > facets) {
                        return Err(err(*ln, format!("facet {f} out of range 1..={facets}")));
                    }
                }
                PolytopeSpec::Explicit { dim, facets, vertices: vertices.into_iter().map(|(_, v)| v).collect() }
            }
            _ => return Err(err(last_line, "missing polytope: need a builtin, or dimension and facets")),
        };
        let (n, m) = polytope.dims();

        if lambda.len() != n {
            let ln = lambda.last().map_or(last_line, |r| r.0);
            return Err(err(ln, format!("λ needs {n} rows, found {}", lambda.len())));
        }
        let width = |what: &str, rows: &[(usize, Vec<i64>)], len: usize| -> Result<()> {
            match rows.iter().find(|(_, r)| r.len() != len) {
                Some((ln, r)) => Err(err(*ln, format!("{what} needs {len} entries, found {}", r.len()))),
                None => Ok(()),
            }
        };
        width("λ row", &lambda, m)?;
        width("v", &v, m)?;
        width("w", &w, m)?;
        if let Some(g) = &gamma {
            width("gamma", std::slice::from_ref(g), m)?;
        }
        if let Some(c) = &circle {
            width("xi", std::slice::from_ref(c), n)?;
        }

        let strip = |rows: Vec<(usize, Vec<i64>)>| rows.into_iter().map(|(_, r)| r).collect::<Vec<_>>();
        Ok(Self {
            polytope,
            lambda: strip(lambda),
            gamma: gamma.map(|g| g.1),
            bundles: BundleSpec { v: strip(v), w: strip(w), trivial_w },
            circle: circle.map(|c| c.1),
        })
    }

    pub fn serialize(&self) -> String {
        let join = |r: &[i64]| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::from("[polytope]\n");
        match &self.polytope {
            PolytopeSpec::Simplex(n) => writeln!(out, "builtin = simplex {n}"),
            PolytopeSpec::Cube(n) => writeln!(out, "builtin = cube {n}"),
            PolytopeSpec::Polygon(k) => writeln!(out, "builtin = polygon {k}"),
            PolytopeSpec::Interval => writeln!(out, "builtin = interval"),
            PolytopeSpec::Stacked(n, k) => writeln!(out, "builtin = stacked {n} {k}"),
            PolytopeSpec::Explicit { dim, facets, vertices } => {
                writeln!(out, "dimension = {dim}\nfacets = {facets}").unwrap();
                for v in vertices {
                    let v: Vec<String> = v.iter().map(usize::to_string).collect();
                    writeln!(out, "vertex = {}", v.join(" ")).unwrap();
                }
                Ok(())
            }
        }
        .unwrap();
        out.push_str("\n[lambda]\n");
        for r in &self.lambda {
            writeln!(out, "row = {}", join(r)).unwrap();
        }
        if let Some(g) = &self.gamma {
            writeln!(out, "\n[spinc]\ngamma = {}", join(g)).unwrap();
        }
        let b = &self.bundles;
        if !b.v.is_empty() || !b.w.is_empty() || b.trivial_w != 0 {
            out.push_str("\n[bundles]\n");
            for r in &b.v {
                writeln!(out, "v = {}", join(r)).unwrap();
            }
            for r in &b.w {
                writeln!(out, "w = {}", join(r)).unwrap();
            }
            if b.trivial_w != 0 {
                writeln!(out, "trivial_w = {}", b.trivial_w).unwrap();
            }
        }
        if let Some(xi) = &self.circle {
            writeln!(out, "\n[circle]\nxi = {}", join(xi)).unwrap();
        }
        out
    }

    pub fn manifold(&self) -> Result<QuasitoricManifold> {
        let p = self.polytope.build()?;
        let lambda = CharacteristicMatrix::from_rows(self.lambda.clone())?;
        match &self.gamma {
            Some(g) => QuasitoricManifold::new(p, lambda, g.clone()),
            None => QuasitoricManifold::with_default_spinc(p, lambda),
        }
    }
}
