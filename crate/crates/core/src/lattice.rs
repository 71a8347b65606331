//! Plaquette chains and honeycomb lattices with vertex/link/plaquette incidence.
//!
//! Chain vertices sit at integer `(x, y)` with `y ∈ {0, 1}`; plaquette `n` has its bottom-left
//! corner at `(n, 0)`. Honeycombs use brick-wall coordinates: `y` indexes the zigzag line,
//! `x` the column along it, and hexagon `(i, j)` spans columns `2i + (j mod 2) ..= 2i + (j mod 2) + 2`
//! on lines `j` and `j + 1`.
//!
//! Every link is stored with `v1` at its origin and `v2` one step along `+x` or `+y`
//! (before any periodic wrap). Plaquette cycles run counterclockwise from the bottom-left vertex.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid lattice size: {0}")]
    InvalidSize(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKind {
    Chain,
    Honeycomb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    Aperiodic,
    Periodic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeSize {
    Chain { n: usize },
    Honeycomb { nx: usize, ny: usize },
}

/// Orientation class of a link: `X` runs along the chain or zigzag line, `Y` across it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkClass {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlaquetteRole {
    Bottom,
    Right,
    Top,
    Left,
    LowerLeft,
    LowerRight,
    UpperRight,
    UpperLeft,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    pub x: i64,
    pub y: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub id: usize,
    pub v1: usize,
    pub v2: usize,
    pub class: LinkClass,
}

impl Link {
    pub fn other(&self, v: usize) -> usize {
        if v == self.v1 {
            self.v2
        } else {
            self.v1
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.v1 == v || self.v2 == v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plaquette {
    pub id: usize,
    /// Links in cycle order; `links[i]` joins `vertices[i]` and `vertices[i + 1]`.
    pub links: Vec<usize>,
    pub roles: Vec<PlaquetteRole>,
    pub vertices: Vec<usize>,
}

impl Plaquette {
    pub fn link_with_role(&self, role: PlaquetteRole) -> Option<usize> {
        self.roles.iter().position(|&r| r == role).map(|i| self.links[i])
    }
}

/// Links incident on one vertex, X-class before Y-class and, within a class, the link whose far
/// endpoint lies toward `-x`/`-y` first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexStar {
    pub vertex: usize,
    pub links: Vec<usize>,
}

impl VertexStar {
    pub fn degree(&self) -> usize {
        self.links.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lattice {
    pub kind: LatticeKind,
    pub size: LatticeSize,
    pub boundary: Boundary,
    pub vertices: Vec<Vertex>,
    pub links: Vec<Link>,
    pub plaquettes: Vec<Plaquette>,
    pub orientation: String,
}

const ORIENTATION: &str = "counterclockwise from bottom-left vertex";

impl Lattice {
    pub fn n_links(&self) -> usize {
        self.links.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_plaquettes(&self) -> usize {
        self.plaquettes.len()
    }

    pub fn vertex_stars(&self) -> Vec<VertexStar> {
        vertex_stars(self)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.links.iter().filter(|l| l.touches(v)).count()
    }

    /// Vertex shared by two links, if any.
    pub fn shared_vertex(&self, a: usize, b: usize) -> Option<usize> {
        let (la, lb) = (&self.links[a], &self.links[b]);
        [la.v1, la.v2].into_iter().find(|&v| lb.touches(v))
    }

    /// The vertex of `plaquette` between its links `i` and `i + 1` (cyclically).
    pub fn corner(&self, plaquette: &Plaquette, i: usize) -> usize {
        plaquette.vertices[(i + 1) % plaquette.vertices.len()]
    }

    /// Proper two-colouring of the vertices, if the lattice is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n_vertices()];
        let stars = self.vertex_stars();
        for start in 0..self.n_vertices() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &l in &stars[v].links {
                    let w = self.links[l].other(v);
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// Fundamental cycles (as link sets) of a BFS spanning tree rooted at vertex 0, one per
    /// non-tree link in link order.
    pub fn fundamental_cycles(&self) -> Vec<Vec<usize>> {
        let stars = self.vertex_stars();
        let n = self.n_vertices();
        let mut parent_link: Vec<Option<usize>> = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut tree = vec![false; self.n_links()];
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &l in &stars[v].links {
                    let w = self.links[l].other(v);
                    if depth[w] == usize::MAX {
                        depth[w] = depth[v] + 1;
                        parent_link[w] = Some(l);
                        tree[l] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut cycles = Vec::new();
        for (l, link) in self.links.iter().enumerate() {
            if tree[l] {
                continue;
            }
            let mut path = vec![l];
            let (mut a, mut b) = (link.v1, link.v2);
            while a != b {
                if depth[a] >= depth[b] {
                    let pl = parent_link[a].unwrap();
                    path.push(pl);
                    a = self.links[pl].other(a);
                } else {
                    let pl = parent_link[b].unwrap();
                    path.push(pl);
                    b = self.links[pl].other(b);
                }
            }
            path.sort_unstable();
            cycles.push(path);
        }
        cycles
    }

    /// Structural checks: distinct endpoints, degree at most three, closed plaquette cycles.
    pub fn validate(&self) -> Result<(), String> {
        for l in &self.links {
            if l.v1 == l.v2 {
                return Err(format!("link {} is a self-loop", l.id));
            }
        }
        for s in self.vertex_stars() {
            if s.degree() > 3 {
                return Err(format!("vertex {} has degree {}", s.vertex, s.degree()));
            }
        }
        for p in &self.plaquettes {
            let m = p.links.len();
            if p.vertices.len() != m || p.roles.len() != m {
                return Err(format!("plaquette {} has inconsistent cycle data", p.id));
            }
            for i in 0..m {
                let link = &self.links[p.links[i]];
                let (a, b) = (p.vertices[i], p.vertices[(i + 1) % m]);
                if !((link.v1 == a && link.v2 == b) || (link.v1 == b && link.v2 == a)) {
                    return Err(format!("plaquette {} link {} does not join {a} and {b}", p.id, link.id));
                }
            }
        }
        Ok(())
    }
}

pub fn vertex_stars(l: &Lattice) -> Vec<VertexStar> {
    let mut incident: Vec<Vec<(LinkClass, bool, usize)>> = vec![Vec::new(); l.n_vertices()];
    for link in &l.links {
        // At v2 the far endpoint (v1) lies toward -x/-y; at v1 toward +x/+y.
        incident[link.v2].push((link.class, false, link.id));
        incident[link.v1].push((link.class, true, link.id));
    }
    incident
        .into_iter()
        .enumerate()
        .map(|(vertex, mut ls)| {
            ls.sort();
            VertexStar { vertex, links: ls.into_iter().map(|(_, _, id)| id).collect() }
        })
        .collect()
}

/// Plaquette chain with `n_plaquettes` squares.
pub fn build_chain(n_plaquettes: usize, boundary: Boundary) -> Result<Lattice, LatticeError> {
    let n = n_plaquettes;
    if n == 0 {
        return Err(LatticeError::InvalidSize("a chain needs at least one plaquette".into()));
    }
    if boundary == Boundary::Periodic && n < 2 {
        return Err(LatticeError::InvalidSize("a periodic chain needs at least two plaquettes".into()));
    }
    let columns = match boundary {
        Boundary::Aperiodic => n + 1,
        Boundary::Periodic => n,
    };
    let vid = |x: usize, y: usize| 2 * (x % columns) + y;
    let vertices = (0..columns)
        .flat_map(|x| (0..2).map(move |y| Vertex { id: 2 * x + y, x: x as i64, y: y as i64 }))
        .collect();
    let mut links = Vec::new();
    for x in 0..columns {
        let mut push = |v1, v2, class| {
            let id = links.len();
            links.push(Link { id, v1, v2, class });
        };
        if x < n {
            push(vid(x, 0), vid(x + 1, 0), LinkClass::X);
        }
        push(vid(x, 0), vid(x, 1), LinkClass::Y);
        if x < n {
            push(vid(x, 1), vid(x + 1, 1), LinkClass::X);
        }
    }
    let vertical = |x: usize| {
        let x = x % columns;
        if x < n {
            3 * x + 1
        } else {
            3 * n
        }
    };
    let plaquettes = (0..n)
        .map(|p| Plaquette {
            id: p,
            links: vec![3 * p, vertical(p + 1), 3 * p + 2, vertical(p)],
            roles: vec![PlaquetteRole::Bottom, PlaquetteRole::Right, PlaquetteRole::Top, PlaquetteRole::Left],
            vertices: vec![vid(p, 0), vid(p + 1, 0), vid(p + 1, 1), vid(p, 1)],
        })
        .collect();
    let lattice = Lattice {
        kind: LatticeKind::Chain,
        size: LatticeSize::Chain { n },
        boundary,
        vertices,
        links,
        plaquettes,
        orientation: ORIENTATION.into(),
    };
    debug_assert_eq!(lattice.validate(), Ok(()));
    Ok(lattice)
}

/// Honeycomb of `n_y` rows with `n_x` hexagons each.
pub fn build_honeycomb(n_x: usize, n_y: usize, boundary: Boundary) -> Result<Lattice, LatticeError> {
    if n_x == 0 || n_y == 0 {
        return Err(LatticeError::InvalidSize("a honeycomb needs at least one row and one column".into()));
    }
    if boundary == Boundary::Periodic && (n_x < 2 || n_y < 2) {
        return Err(LatticeError::InvalidSize(
            "a periodic honeycomb needs at least two rows and two columns".into(),
        ));
    }
    let offset = |row: usize| (row % 2) as i64;
    let periodic = boundary == Boundary::Periodic;
    let width = 2 * n_x as i64;
    let n_lines = if periodic { n_y } else { n_y + 1 };

    // Column range present on each zigzag line.
    let line_columns: Vec<(i64, i64)> = (0..n_lines)
        .map(|r| {
            if periodic {
                return (0, width - 1);
            }
            let rows = [r.checked_sub(1), (r < n_y).then_some(r)];
            let lo = rows.iter().flatten().map(|&j| offset(j)).min().unwrap();
            let hi = rows.iter().flatten().map(|&j| offset(j) + width).max().unwrap();
            (lo, hi)
        })
        .collect();

    let mut vertices = Vec::new();
    let mut index: HashMap<(i64, usize), usize> = HashMap::new();
    for (r, &(lo, hi)) in line_columns.iter().enumerate() {
        for c in lo..=hi {
            index.insert((c, r), vertices.len());
            vertices.push(Vertex { id: vertices.len(), x: c, y: r as i64 });
        }
    }
    // Canonical vertex for a possibly wrapped coordinate.
    let twist = (n_y % 2) as i64;
    let locate = |c: i64, r: usize| -> usize {
        let (c, r) = if periodic && r == n_y { (c + twist, 0) } else { (c, r) };
        let c = if periodic { c.rem_euclid(width) } else { c };
        index[&(c, r)]
    };

    let mut raw: Vec<((usize, i64, LinkClass), usize, usize)> = Vec::new();
    for (r, &(lo, hi)) in line_columns.iter().enumerate() {
        let last = if periodic { hi } else { hi - 1 };
        for c in lo..=last {
            raw.push(((r, c, LinkClass::X), locate(c, r), locate(c + 1, r)));
        }
    }
    for j in 0..n_y {
        let count = if periodic { n_x } else { n_x + 1 };
        for i in 0..count {
            let c = 2 * i as i64 + offset(j);
            raw.push(((j, c, LinkClass::Y), locate(c, j), locate(c, j + 1)));
        }
    }
    raw.sort_by_key(|(key, _, _)| *key);
    let mut links = Vec::with_capacity(raw.len());
    let mut by_endpoints: HashMap<(usize, usize), usize> = HashMap::new();
    for (id, (key, v1, v2)) in raw.into_iter().enumerate() {
        links.push(Link { id, v1, v2, class: key.2 });
        let prev = by_endpoints.insert((v1.min(v2), v1.max(v2)), id);
        debug_assert!(prev.is_none(), "multi-edge in honeycomb");
    }

    let mut plaquettes = Vec::with_capacity(n_x * n_y);
    for j in 0..n_y {
        for i in 0..n_x {
            let c = 2 * i as i64 + offset(j);
            let vs = vec![
                locate(c, j),
                locate(c + 1, j),
                locate(c + 2, j),
                locate(c + 2, j + 1),
                locate(c + 1, j + 1),
                locate(c, j + 1),
            ];
            let ls = (0..6)
                .map(|k| {
                    let (a, b) = (vs[k], vs[(k + 1) % 6]);
                    by_endpoints[&(a.min(b), a.max(b))]
                })
                .collect();
            plaquettes.push(Plaquette {
                id: plaquettes.len(),
                links: ls,
                roles: vec![
                    PlaquetteRole::LowerLeft,
                    PlaquetteRole::LowerRight,
                    PlaquetteRole::Right,
                    PlaquetteRole::UpperRight,
                    PlaquetteRole::UpperLeft,
                    PlaquetteRole::Left,
                ],
                vertices: vs,
            });
        }
    }
    let lattice = Lattice {
        kind: LatticeKind::Honeycomb,
        size: LatticeSize::Honeycomb { nx: n_x, ny: n_y },
        boundary,
        vertices,
        links,
        plaquettes,
        orientation: ORIENTATION.into(),
    };
    debug_assert_eq!(lattice.validate(), Ok(()));
    Ok(lattice)
}
