//! Colored paths, cycles and general colored graphs.
//!
//! Vertices are 1-indexed throughout. For a cycle on `n` vertices, edge `k`
//! joins `k` and `k + 1` (edge `n` wraps to vertex 1); for a path, edge `k`
//! joins `k` and `k + 1` for `k < m`. Colors are dense integer ids, with
//! vertex and edge colors living in separate namespaces. Human-readable
//! names are kept in a [`Labels`] side table.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symmetry::DihedralElement;

pub type Color = u32;

/// Renumbers a color sequence by first occurrence.
pub fn first_occurrence(seq: &[Color]) -> Vec<Color> {
    let mut seen: HashMap<Color, Color> = HashMap::new();
    seq.iter()
        .map(|c| {
            let next = seen.len() as Color;
            *seen.entry(*c).or_insert(next)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColoredPath {
    vertex_colors: Vec<Color>,
    edge_colors: Vec<Color>,
}

impl ColoredPath {
    pub fn new(vertex_colors: Vec<Color>, edge_colors: Vec<Color>) -> Result<Self> {
        let m = vertex_colors.len();
        let want = m.saturating_sub(1);
        if edge_colors.len() < want {
            return Err(Error::MissingColor(format!(
                "path on {m} vertices needs {want} edge colors, found {}",
                edge_colors.len()
            )));
        }
        if edge_colors.len() > want {
            return Err(Error::BadEdge(format!(
                "path on {m} vertices has only {want} edges, found {} edge colors",
                edge_colors.len()
            )));
        }
        Ok(ColoredPath {
            vertex_colors,
            edge_colors,
        })
    }

    /// The path on zero vertices; its determinant is 1.
    pub fn empty() -> Self {
        ColoredPath::default()
    }

    pub fn len(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_colors.is_empty()
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Color] {
        &self.edge_colors
    }

    /// Vertex `i` goes to `m + 1 - i`.
    pub fn reflect(&self) -> ColoredPath {
        ColoredPath {
            vertex_colors: self.vertex_colors.iter().rev().copied().collect(),
            edge_colors: self.edge_colors.iter().rev().copied().collect(),
        }
    }

    pub fn to_graph(&self) -> ColoredGraph {
        let edges = self
            .edge_colors
            .iter()
            .enumerate()
            .map(|(k, &c)| (k + 1, k + 2, c))
            .collect();
        ColoredGraph {
            vertex_colors: self.vertex_colors.clone(),
            edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredCycle {
    vertex_colors: Vec<Color>,
    edge_colors: Vec<Color>,
}

/// A contiguous stretch of a cycle, with the cycle's vertex indices kept
/// alongside the induced colored path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub vertices: Vec<usize>,
    pub path: ColoredPath,
}

/// The two arcs joining two distinct vertices of a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePaths {
    pub shorter: Arc,
    pub complement: Arc,
}

impl ColoredCycle {
    pub fn new(vertex_colors: Vec<Color>, edge_colors: Vec<Color>) -> Result<Self> {
        let n = vertex_colors.len();
        if n < 3 {
            return Err(Error::BadLength {
                m: n,
                reason: "a cycle needs at least 3 vertices",
            });
        }
        if edge_colors.len() < n {
            return Err(Error::MissingColor(format!(
                "cycle on {n} vertices needs {n} edge colors, found {}",
                edge_colors.len()
            )));
        }
        if edge_colors.len() > n {
            return Err(Error::BadEdge(format!(
                "cycle on {n} vertices has only {n} edges, found {} edge colors",
                edge_colors.len()
            )));
        }
        Ok(ColoredCycle {
            vertex_colors,
            edge_colors,
        })
    }

    /// Every vertex color 0, every edge color 0.
    pub fn uniform(n: usize) -> Result<Self> {
        ColoredCycle::new(vec![0; n], vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Color] {
        &self.edge_colors
    }

    /// Color of vertex `v` (1-indexed).
    pub fn vertex_color(&self, v: usize) -> Color {
        self.vertex_colors[v - 1]
    }

    /// Color of edge `{k, k+1}` (1-indexed, wrapping).
    pub fn edge_color(&self, k: usize) -> Color {
        self.edge_colors[k - 1]
    }

    /// Index of the cycle edge joining `a` and `b`, if they are adjacent.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.n();
        if a % n + 1 == b {
            Some(a)
        } else if b % n + 1 == a {
            Some(b)
        } else {
            None
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// Vertices visited going clockwise from `from` to `to`, both included.
    fn clockwise(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.n();
        let mut out = vec![from];
        let mut v = from;
        while v != to {
            v = v % n + 1;
            out.push(v);
        }
        out
    }

    /// Induced path along consecutive cycle vertices.
    pub fn arc(&self, vertices: Vec<usize>) -> Arc {
        let vertex_colors = vertices.iter().map(|&v| self.vertex_color(v)).collect();
        let edge_colors = vertices
            .windows(2)
            .map(|w| self.edge_color(self.edge_index(w[0], w[1]).expect("consecutive")))
            .collect();
        Arc {
            vertices,
            path: ColoredPath {
                vertex_colors,
                edge_colors,
            },
        }
    }

    /// Splits the cycle into the two arcs joining `i` and `j`. Arcs are
    /// listed clockwise. The shorter arc has fewer vertices; on a tie the
    /// clockwise arc starting at `min(i, j)` counts as shorter.
    pub fn cycle_paths(&self, i: usize, j: usize) -> Result<CyclePaths> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::SameVertex(i));
        }
        let forward = self.clockwise(i, j);
        let backward = self.clockwise(j, i);
        let forward_is_shorter = match forward.len().cmp(&backward.len()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => i < j,
        };
        let (s, c) = if forward_is_shorter {
            (forward, backward)
        } else {
            (backward, forward)
        };
        Ok(CyclePaths {
            shorter: self.arc(s),
            complement: self.arc(c),
        })
    }

    /// Path induced on the vertices that remain after deleting `removed`.
    /// The remainder must be empty or a single contiguous arc; it is read
    /// clockwise.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<Arc> {
        let n = self.n();
        let mut gone = vec![false; n + 1];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        let kept: Vec<usize> = (1..=n).filter(|&v| !gone[v]).collect();
        if kept.is_empty() {
            return Ok(Arc {
                vertices: Vec::new(),
                path: ColoredPath::empty(),
            });
        }
        let pred = |v: usize| if v == 1 { n } else { v - 1 };
        let starts: Vec<usize> = kept.iter().copied().filter(|&v| gone[pred(v)]).collect();
        if starts.len() != 1 {
            return Err(Error::Disconnects);
        }
        let start = starts[0];
        let vertices: Vec<usize> = (0..kept.len()).map(|k| (start - 1 + k) % n + 1).collect();
        Ok(self.arc(vertices))
    }

    /// Minimal encoding over all rotations and reflections combined with
    /// first-occurrence renumbering of vertex and edge colors.
    pub fn canonical_form(&self) -> Encoding {
        DihedralElement::all(self.n())
            .map(|g| Encoding::of(&self.relabel(&g)))
            .min()
            .expect("dihedral group is non-empty")
    }

    pub fn to_graph(&self) -> ColoredGraph {
        let n = self.n();
        let edges = self
            .edge_colors
            .iter()
            .enumerate()
            .map(|(k, &c)| (k + 1, (k + 1) % n + 1, c))
            .collect();
        ColoredGraph {
            vertex_colors: self.vertex_colors.clone(),
            edges,
        }
    }
}

/// Dihedral-and-renaming invariant encoding of a cycle coloring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Encoding {
    pub vertices: Vec<Color>,
    pub edges: Vec<Color>,
}

impl Encoding {
    /// Encoding of a cycle as it stands (no minimisation).
    pub fn of(c: &ColoredCycle) -> Encoding {
        Encoding {
            vertices: first_occurrence(c.vertex_colors()),
            edges: first_occurrence(c.edge_colors()),
        }
    }

    pub fn to_cycle(&self) -> Result<ColoredCycle> {
        ColoredCycle::new(self.vertices.clone(), self.edges.clone())
    }
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[Color]| {
            s.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}|{}", join(&self.vertices), join(&self.edges))
    }
}

impl FromStr for Encoding {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |m: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("bad encoding `{s}`: {m}"),
        };
        let (v, e) = s.trim().split_once('|').ok_or_else(|| err("missing `|`"))?;
        let nums = |part: &str| -> Result<Vec<Color>> {
            part.split(',')
                .map(|x| x.parse::<Color>().map_err(|_| err("not a number")))
                .collect()
        };
        Ok(Encoding {
            vertices: nums(v)?,
            edges: nums(e)?,
        })
    }
}

/// A simple colored graph; edges are 1-indexed vertex pairs with a color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    vertex_colors: Vec<Color>,
    edges: Vec<(usize, usize, Color)>,
}

impl ColoredGraph {
    pub fn new(vertex_colors: Vec<Color>, edges: Vec<(usize, usize, Color)>) -> Result<Self> {
        let n = vertex_colors.len();
        let mut seen = BTreeSet::new();
        for &(a, b, _) in &edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::BadEdge(format!(
                    "edge {{{a},{b}}} has an endpoint outside 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::BadEdge(format!("self-loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::BadEdge(format!("duplicate edge {{{a},{b}}}")));
            }
        }
        Ok(ColoredGraph {
            vertex_colors,
            edges,
        })
    }

    pub fn n(&self) -> usize {
        self.vertex_colors.len()
    }

    pub fn vertex_colors(&self) -> &[Color] {
        &self.vertex_colors
    }

    pub fn edges(&self) -> &[(usize, usize, Color)] {
        &self.edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoredObject {
    Path(ColoredPath),
    Cycle(ColoredCycle),
    Graph(ColoredGraph),
}

impl ColoredObject {
    pub fn kind(&self) -> &'static str {
        match self {
            ColoredObject::Path(_) => "path",
            ColoredObject::Cycle(_) => "cycle",
            ColoredObject::Graph(_) => "graph",
        }
    }

    pub fn to_graph(&self) -> ColoredGraph {
        match self {
            ColoredObject::Path(p) => p.to_graph(),
            ColoredObject::Cycle(c) => c.to_graph(),
            ColoredObject::Graph(g) => g.clone(),
        }
    }

    pub fn into_cycle(self) -> Result<ColoredCycle> {
        match self {
            ColoredObject::Cycle(c) => Ok(c),
            other => Err(Error::WrongKind {
                expected: "cycle",
                found: other.kind(),
            }),
        }
    }

    pub fn into_path(self) -> Result<ColoredPath> {
        match self {
            ColoredObject::Path(p) => Ok(p),
            other => Err(Error::WrongKind {
                expected: "path",
                found: other.kind(),
            }),
        }
    }
}

/// Human-readable color names, indexed by color id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Labels {
    pub vertex: Vec<String>,
    pub edge: Vec<String>,
}

impl Labels {
    /// Generic names `v0, v1, ...` / `e0, e1, ...` covering every id used.
    pub fn generic(obj: &ColoredObject) -> Labels {
        let (vc, ec): (Vec<Color>, Vec<Color>) = match obj {
            ColoredObject::Path(p) => (p.vertex_colors.clone(), p.edge_colors.clone()),
            ColoredObject::Cycle(c) => (c.vertex_colors.clone(), c.edge_colors.clone()),
            ColoredObject::Graph(g) => (
                g.vertex_colors.clone(),
                g.edges.iter().map(|e| e.2).collect(),
            ),
        };
        let top = |s: &[Color]| s.iter().max().map_or(0, |m| m + 1);
        Labels {
            vertex: (0..top(&vc)).map(|i| format!("v{i}")).collect(),
            edge: (0..top(&ec)).map(|i| format!("e{i}")).collect(),
        }
    }

    pub fn vertex_name(&self, c: Color) -> String {
        self.vertex
            .get(c as usize)
            .cloned()
            .unwrap_or_else(|| format!("v{c}"))
    }

    pub fn edge_name(&self, c: Color) -> String {
        self.edge
            .get(c as usize)
            .cloned()
            .unwrap_or_else(|| format!("e{c}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Cycle,
    Path,
    Graph,
}

/// On-disk coloring format.
///
/// `{"kind":"cycle"|"path"|"graph","n":8,"vertex_colors":[...],"edge_colors":[...],"edges":[[1,2],...]}`
///
/// `edges` is only read for graphs; for cycles and paths `edge_colors[i]`
/// colors edge `{i+1, i+2}` (wrapping for cycles).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub kind: Kind,
    pub n: usize,
    pub vertex_colors: Vec<Option<String>>,
    pub edge_colors: Vec<Option<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[usize; 2]>>,
}

impl ColoringFile {
    fn expected_edges(&self) -> Result<Vec<[usize; 2]>> {
        let n = self.n;
        match self.kind {
            Kind::Path => Ok((1..n).map(|k| [k, k + 1]).collect()),
            Kind::Cycle => Ok((1..=n).map(|k| [k, k % n + 1]).collect()),
            Kind::Graph => self
                .edges
                .clone()
                .ok_or_else(|| Error::BadEdge("a graph needs an `edges` list".into())),
        }
    }

    /// Checks the coloring invariants without building anything.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        match self.kind {
            Kind::Cycle if n < 3 => {
                return Err(Error::BadLength {
                    m: n,
                    reason: "a cycle needs at least 3 vertices",
                })
            }
            Kind::Path | Kind::Graph if n == 0 => {
                return Err(Error::BadLength {
                    m: n,
                    reason: "need at least one vertex",
                })
            }
            _ => {}
        }
        if self.vertex_colors.len() != n {
            return Err(Error::MissingColor(format!(
                "expected {n} vertex colors, found {}",
                self.vertex_colors.len()
            )));
        }
        if let Some(k) = self.vertex_colors.iter().position(Option::is_none) {
            return Err(Error::MissingColor(format!(
                "vertex {} has no color",
                k + 1
            )));
        }
        let edges = self.expected_edges()?;
        if self.kind != Kind::Graph {
            if let Some(listed) = &self.edges {
                if *listed != edges {
                    return Err(Error::BadEdge(format!(
                        "`edges` does not match the implicit {:?} structure",
                        self.kind
                    )));
                }
            }
        }
        let mut seen = BTreeSet::new();
        for &[a, b] in &edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::BadEdge(format!(
                    "edge [{a},{b}] has an endpoint outside 1..={n}"
                )));
            }
            if a == b {
                return Err(Error::BadEdge(format!("self-loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::BadEdge(format!("duplicate edge [{a},{b}]")));
            }
        }
        if self.edge_colors.len() < edges.len() {
            return Err(Error::MissingColor(format!(
                "expected {} edge colors, found {}",
                edges.len(),
                self.edge_colors.len()
            )));
        }
        if self.edge_colors.len() > edges.len() {
            return Err(Error::BadEdge(format!(
                "{} edge colors given for {} edges",
                self.edge_colors.len(),
                edges.len()
            )));
        }
        if let Some(k) = self.edge_colors.iter().position(Option::is_none) {
            let [a, b] = edges[k];
            return Err(Error::MissingColor(format!("edge [{a},{b}] has no color")));
        }
        let vertex_names: BTreeSet<&str> = self
            .vertex_colors
            .iter()
            .flatten()
            .map(String::as_str)
            .collect();
        if let Some(name) = self
            .edge_colors
            .iter()
            .flatten()
            .find(|c| vertex_names.contains(c.as_str()))
        {
            return Err(Error::NamespaceCollision(name.clone()));
        }
        Ok(())
    }

    /// Validates and interns color names (ids in order of first appearance).
    pub fn build(&self) -> Result<(ColoredObject, Labels)> {
        self.validate()?;
        let mut labels = Labels::default();
        let intern = |names: &mut Vec<String>, s: &str| -> Color {
            match names.iter().position(|x| x == s) {
                Some(i) => i as Color,
                None => {
                    names.push(s.to_string());
                    (names.len() - 1) as Color
                }
            }
        };
        let vc: Vec<Color> = self
            .vertex_colors
            .iter()
            .flatten()
            .map(|s| intern(&mut labels.vertex, s))
            .collect();
        let ec: Vec<Color> = self
            .edge_colors
            .iter()
            .flatten()
            .map(|s| intern(&mut labels.edge, s))
            .collect();
        let obj = match self.kind {
            Kind::Path => ColoredObject::Path(ColoredPath::new(vc, ec)?),
            Kind::Cycle => ColoredObject::Cycle(ColoredCycle::new(vc, ec)?),
            Kind::Graph => {
                let edges = self
                    .expected_edges()?
                    .into_iter()
                    .zip(ec)
                    .map(|([a, b], c)| (a, b, c))
                    .collect();
                ColoredObject::Graph(ColoredGraph::new(vc, edges)?)
            }
        };
        Ok((obj, labels))
    }

    pub fn from_object(obj: &ColoredObject, labels: &Labels) -> ColoringFile {
        let vnames = |s: &[Color]| s.iter().map(|&c| Some(labels.vertex_name(c))).collect();
        let enames =
            |s: &mut dyn Iterator<Item = Color>| s.map(|c| Some(labels.edge_name(c))).collect();
        match obj {
            ColoredObject::Path(p) => ColoringFile {
                kind: Kind::Path,
                n: p.len(),
                vertex_colors: vnames(p.vertex_colors()),
                edge_colors: enames(&mut p.edge_colors().iter().copied()),
                edges: None,
            },
            ColoredObject::Cycle(c) => ColoringFile {
                kind: Kind::Cycle,
                n: c.n(),
                vertex_colors: vnames(c.vertex_colors()),
                edge_colors: enames(&mut c.edge_colors().iter().copied()),
                edges: None,
            },
            ColoredObject::Graph(g) => ColoringFile {
                kind: Kind::Graph,
                n: g.n(),
                vertex_colors: vnames(g.vertex_colors()),
                edge_colors: enames(&mut g.edges().iter().map(|e| e.2)),
                edges: Some(g.edges().iter().map(|&(a, b, _)| [a, b]).collect()),
            },
        }
    }
}

/// Parses a coloring file from JSON text.
pub fn parse(text: &str) -> Result<(ColoredObject, Labels)> {
    let file: ColoringFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.build()
}

/// Compact JSON rendering in the on-disk format.
pub fn serialize(obj: &ColoredObject, labels: &Labels) -> String {
    serde_json::to_string(&ColoringFile::from_object(obj, labels)).expect("plain data")
}

pub fn load(path: &std::path::Path) -> Result<(ColoredObject, Labels)> {
    parse(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(vc: &[Color], ec: &[Color]) -> ColoredCycle {
        ColoredCycle::new(vc.to_vec(), ec.to_vec()).unwrap()
    }

    const FIG2: &str = r#"{"kind":"cycle","n":4,"vertex_colors":["red","red","yellow","yellow"],"edge_colors":["blue","green","blue","green"]}"#;

    #[test]
    fn colored_four_cycle_validates() {
        let (obj, labels) = parse(FIG2).unwrap();
        let c = obj.into_cycle().unwrap();
        assert_eq!(c.vertex_colors(), &[0, 0, 1, 1]);
        assert_eq!(c.edge_colors(), &[0, 1, 0, 1]);
        assert_eq!(labels.vertex, vec!["red", "yellow"]);
    }

    #[test]
    fn uncolored_edge_is_missing_color() {
        let text = r#"{"kind":"cycle","n":4,"vertex_colors":["r","r","y","y"],"edge_colors":["b","g",null,"g"]}"#;
        assert!(matches!(parse(text), Err(Error::MissingColor(_))));
        let short = r#"{"kind":"cycle","n":4,"vertex_colors":["r","r","y","y"],"edge_colors":["b","g","b"]}"#;
        assert!(matches!(parse(short), Err(Error::MissingColor(_))));
        assert!(matches!(
            ColoredCycle::new(vec![0, 0, 0], vec![0, 0]),
            Err(Error::MissingColor(_))
        ));
    }

    #[test]
    fn shared_vertex_and_edge_name_collides() {
        let text = r#"{"kind":"path","n":3,"vertex_colors":["a","b","c"],"edge_colors":["x","a"]}"#;
        assert!(matches!(parse(text), Err(Error::NamespaceCollision(n)) if n == "a"));
    }

    #[test]
    fn bad_graph_edges() {
        let loops = r#"{"kind":"graph","n":3,"vertex_colors":["a","a","a"],"edge_colors":["x"],"edges":[[2,2]]}"#;
        assert!(matches!(parse(loops), Err(Error::BadEdge(_))));
        let range = r#"{"kind":"graph","n":3,"vertex_colors":["a","a","a"],"edge_colors":["x"],"edges":[[1,4]]}"#;
        assert!(matches!(parse(range), Err(Error::BadEdge(_))));
        let dup = r#"{"kind":"graph","n":3,"vertex_colors":["a","a","a"],"edge_colors":["x","y"],"edges":[[1,2],[2,1]]}"#;
        assert!(matches!(parse(dup), Err(Error::BadEdge(_))));
        let none = r#"{"kind":"graph","n":3,"vertex_colors":["a","a","a"],"edge_colors":[]}"#;
        assert!(matches!(parse(none), Err(Error::BadEdge(_))));
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = parse("{\"kind\":\"cycle\",\n\"n\": 4,,}").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse(r#"{"kind":"star","n":3}"#),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn serialize_is_compact_and_round_trips() {
        let (obj, labels) = parse(FIG2).unwrap();
        assert_eq!(serialize(&obj, &labels), FIG2);
        let g = r#"{"kind":"graph","n":3,"vertex_colors":["a","b","a"],"edge_colors":["x","y"],"edges":[[1,2],[3,1]]}"#;
        let (obj, labels) = parse(g).unwrap();
        assert_eq!(serialize(&obj, &labels), g);
    }

    #[test]
    fn reflect_examples() {
        let p = ColoredPath::new(vec![0, 1, 0], vec![0, 0]).unwrap();
        assert_eq!(p.reflect(), p);
        let q = ColoredPath::new(vec![0, 1, 2], vec![0, 1]).unwrap();
        let r = q.reflect();
        assert_eq!(r.vertex_colors(), &[2, 1, 0]);
        assert_eq!(r.edge_colors(), &[1, 0]);
        assert_eq!(r.reflect(), q);
        assert_eq!(ColoredPath::empty().reflect(), ColoredPath::empty());
    }

    #[test]
    fn cycle_paths_examples() {
        let c4 = cycle(&[0, 1, 2, 3], &[0, 1, 2, 3]);
        let cp = c4.cycle_paths(1, 4).unwrap();
        assert_eq!(cp.shorter.vertices, vec![4, 1]);
        assert_eq!(cp.complement.vertices, vec![1, 2, 3, 4]);
        // path colors follow the arcs
        assert_eq!(cp.shorter.path.edge_colors(), &[3]);
        assert_eq!(cp.complement.path.edge_colors(), &[0, 1, 2]);

        let c5 = cycle(&[0; 5], &[0; 5]);
        let cp = c5.cycle_paths(1, 3).unwrap();
        assert_eq!(cp.shorter.vertices, vec![1, 2, 3]);
        assert_eq!(cp.complement.vertices, vec![3, 4, 5, 1]);

        let c6 = cycle(&[0; 6], &[0; 6]);
        let cp = c6.cycle_paths(1, 4).unwrap();
        assert_eq!(cp.shorter.vertices, vec![1, 2, 3, 4]);
        assert_eq!(cp.complement.vertices, vec![4, 5, 6, 1]);
        let cp = c6.cycle_paths(4, 1).unwrap();
        assert_eq!(cp.shorter.vertices, vec![1, 2, 3, 4]);

        assert!(matches!(c6.cycle_paths(2, 2), Err(Error::SameVertex(2))));
        assert!(c6.cycle_paths(0, 2).is_err());
    }

    #[test]
    fn delete_vertices_examples() {
        let c4 = cycle(&[0, 1, 2, 3], &[0, 1, 2, 3]);
        let rest = c4.delete_vertices(&[1, 4]).unwrap();
        assert_eq!(rest.vertices, vec![2, 3]);
        assert_eq!(rest.path.vertex_colors(), &[1, 2]);
        assert_eq!(rest.path.edge_colors(), &[1]);

        let all = c4.delete_vertices(&[1, 2, 3, 4]).unwrap();
        assert!(all.path.is_empty());

        let c5 = cycle(&[0, 1, 2, 3, 4], &[0; 5]);
        let rest = c5.delete_vertices(&[2]).unwrap();
        assert_eq!(rest.vertices, vec![3, 4, 5, 1]);

        assert!(matches!(
            c5.delete_vertices(&[1, 3]),
            Err(Error::Disconnects)
        ));
        assert!(matches!(c5.delete_vertices(&[]), Err(Error::Disconnects)));
    }

    #[test]
    fn canonical_form_examples() {
        let u = ColoredCycle::uniform(5).unwrap();
        assert_eq!(u.canonical_form(), Encoding::of(&u));
        let fig5 = cycle(&[0, 1, 0, 1, 1, 0, 1, 0], &[0, 1, 2, 3, 0, 1, 2, 3]);
        let rot = |s: &[Color]| {
            let mut v = s.to_vec();
            v.rotate_left(3);
            v
        };
        let rotated = cycle(&rot(fig5.vertex_colors()), &rot(fig5.edge_colors()));
        assert_eq!(fig5.canonical_form(), rotated.canonical_form());
    }

    #[test]
    fn encoding_text_round_trip() {
        let e = Encoding {
            vertices: vec![0, 1, 0],
            edges: vec![0, 0, 1],
        };
        assert_eq!(e.to_string(), "0,1,0|0,0,1");
        assert_eq!("0,1,0|0,0,1".parse::<Encoding>().unwrap(), e);
        assert!("0,1".parse::<Encoding>().is_err());
    }
}
