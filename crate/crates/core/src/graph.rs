//! Finite simple graphs, their edge and cover ideals, and the closed-form
//! generator sets for the crown and complete multipartite families.
//!
//! Variables of the attached ideals are the graph vertices in label order.
//! Crown graphs use labels `x1..xn, y1..yn`; a complete multipartite graph
//! with parts sorted descending uses `x11, x12, ..` per part.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::ideal::{minimal_transversals, MonomialIdeal};
use crate::monomial::{Monomial, PrimeSupport};

/// An undirected simple graph with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    /// Graph with the given labels and edges (vertex indices). Rejects
    /// duplicate labels, loops, duplicate edges, and out-of-range indices.
    pub fn new<S: Into<String>>(
        labels: Vec<S>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, Error> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::DuplicateLabel { label: a.clone() });
            }
        }
        let n = labels.len();
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { index: u, count: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, count: n });
            }
            if u == v {
                return Err(Error::LoopEdge { label: labels[u].clone() });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge {
                    a: labels[w[0].0].clone(),
                    b: labels[w[0].1].clone(),
                });
            }
        }
        Ok(SimpleGraph { labels, edges: normalized })
    }

    /// The crown graph on `2n` vertices: complete bipartite minus the
    /// perfect matching, edges {x_i, y_j} for i != j. Requires n >= 2.
    pub fn crown(n: usize) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::CrownSize { n, min: 2 });
        }
        let mut labels = Vec::with_capacity(2 * n);
        for i in 1..=n {
            labels.push(format!("x{i}"));
        }
        for i in 1..=n {
            labels.push(format!("y{i}"));
        }
        let mut edges = Vec::with_capacity(n * (n - 1));
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    edges.push((i, n + j));
                }
            }
        }
        SimpleGraph::new(labels, edges)
    }

    /// Complete multipartite graph; all edges run between distinct parts.
    /// Parts are sorted descending internally (see [`normalize_parts`]).
    pub fn complete_multipartite(parts: &[u32]) -> Result<Self, Error> {
        let (sorted, _) = normalize_parts(parts)?;
        let mut labels = Vec::new();
        let mut part_of = Vec::new();
        for (i, &p) in sorted.iter().enumerate() {
            for j in 1..=p {
                labels.push(format!("x{}{}", i + 1, j));
                part_of.push(i);
            }
        }
        let n = labels.len();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::new(labels, edges)
    }

    /// Complete graph on `n` vertices labeled `x1..xn`.
    pub fn complete(n: usize) -> Result<Self, Error> {
        let labels: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(labels, edges)
    }

    /// Parse an edge list: one edge per line as two whitespace-separated
    /// labels; text from `#` to end of line is a comment. Vertices are
    /// numbered by first appearance.
    pub fn from_edge_list(text: &str) -> Result<Self, Error> {
        let mut labels: Vec<String> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        fn index_of(labels: &mut Vec<String>, tok: &str) -> usize {
            match labels.iter().position(|l| l == tok) {
                Some(i) => i,
                None => {
                    labels.push(tok.to_string());
                    labels.len() - 1
                }
            }
        }
        for (lineno, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let mut toks = line.split_whitespace();
            let (a, b) = match (toks.next(), toks.next(), toks.next()) {
                (None, _, _) => continue,
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(Error::EdgeListSyntax { line: lineno + 1 }),
            };
            if a == b {
                return Err(Error::LoopEdge { label: a.to_string() });
            }
            let u = index_of(&mut labels, a);
            let v = index_of(&mut labels, b);
            let e = (u.min(v), u.max(v));
            if edges.contains(&e) {
                return Err(Error::DuplicateEdge {
                    a: labels[e.0].clone(),
                    b: labels[e.1].clone(),
                });
            }
            edges.push(e);
        }
        SimpleGraph::new(labels, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as sorted pairs of vertex indices, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    /// The edge ideal: one squarefree quadratic generator per edge.
    /// An edgeless graph gives the zero ideal.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let n = self.vertex_count();
        let gens = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let mut exps = vec![0; n];
                exps[u] = 1;
                exps[v] = 1;
                Monomial::from_exponents(exps)
            })
            .collect();
        MonomialIdeal::new(n, gens).expect("edge generators share the ambient")
    }

    /// The cover ideal, computed as the intersection of the edge primes
    /// (x_u, x_v) over all edges. Its minimal generators are exactly the
    /// products over minimal vertex covers.
    ///
    /// For an edgeless graph the empty cover yields the unit ideal; the
    /// `edgeless` flag is set so callers needing a proper ideal can tell.
    pub fn cover_ideal(&self) -> CoverIdeal {
        let n = self.vertex_count();
        if self.edges.is_empty() {
            return CoverIdeal { ideal: MonomialIdeal::unit(n), edgeless: true };
        }
        let mut ideal = MonomialIdeal::unit(n);
        for &(u, v) in &self.edges {
            let prime = PrimeSupport::new(n, vec![u, v])
                .expect("edge endpoints are distinct and in range")
                .generator_ideal();
            ideal = ideal.intersect(&prime).expect("same ambient");
        }
        CoverIdeal { ideal, edgeless: false }
    }

    /// All inclusion-minimal vertex covers, computed as minimal transversals
    /// of the edge set (independently of `cover_ideal`).
    pub fn minimal_vertex_covers(&self) -> Vec<VertexCover> {
        let sets: Vec<Vec<usize>> = self.edges.iter().map(|&(u, v)| vec![u, v]).collect();
        let mut covers: Vec<VertexCover> = minimal_transversals(&sets)
            .into_iter()
            .map(|vertices| VertexCover { vertices })
            .collect();
        covers.sort_by(|a, b| {
            a.vertices.len().cmp(&b.vertices.len()).then_with(|| a.vertices.cmp(&b.vertices))
        });
        covers
    }

    /// Largest size of a minimal vertex cover = largest generator degree of
    /// the cover ideal. Errors on edgeless graphs.
    pub fn cover_degree(&self) -> Result<u64, Error> {
        let cover = self.cover_ideal();
        if cover.edgeless {
            return Err(Error::EdgelessGraph);
        }
        Ok(cover.ideal.max_generator_degree().expect("proper nonzero ideal"))
    }
}

/// Cover ideal plus a flag marking the degenerate edgeless case, where the
/// ideal is the unit ideal (the empty cover has empty product 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverIdeal {
    pub ideal: MonomialIdeal,
    pub edgeless: bool,
}

/// A set of vertices meeting every edge of its graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertexCover {
    vertices: Vec<usize>,
}

impl VertexCover {
    /// Vertex indices, ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Sort parts descending; returns the sorted parts and the permutation
/// `perm` with `sorted[i] = parts[perm[i]]`. Requires k >= 2 parts, each >= 1.
pub fn normalize_parts(parts: &[u32]) -> Result<(Vec<u32>, Vec<usize>), Error> {
    if parts.len() < 2 {
        return Err(Error::TooFewParts { k: parts.len() });
    }
    if parts.contains(&0) {
        return Err(Error::EmptyPart);
    }
    let mut order: Vec<usize> = (0..parts.len()).collect();
    order.sort_by(|&a, &b| parts[b].cmp(&parts[a]).then(a.cmp(&b)));
    let sorted = order.iter().map(|&i| parts[i]).collect();
    Ok((sorted, order))
}

/// The distinguished monomials of a crown graph on `2n` vertices.
#[derive(Debug, Clone)]
pub struct CrownMonomials {
    pub n: usize,
    /// Product of the x-side vertices (a minimal cover).
    pub x_cover: Monomial,
    /// Product of the y-side vertices (a minimal cover).
    pub y_cover: Monomial,
    /// Product of all vertices.
    pub vertex_product: Monomial,
    /// For each i, the product of all vertices except x_i, y_i (the
    /// remaining minimal covers).
    pub pair_covers: Vec<Monomial>,
}

/// Build the crown cover monomials; the closed forms require n >= 3.
pub fn crown_monomials(n: usize) -> Result<CrownMonomials, Error> {
    if n < 3 {
        return Err(Error::CrownSize { n, min: 3 });
    }
    let ambient = 2 * n;
    let x_cover =
        Monomial::from_exponents((0..ambient).map(|v| u32::from(v < n)).collect());
    let y_cover =
        Monomial::from_exponents((0..ambient).map(|v| u32::from(v >= n)).collect());
    let vertex_product = Monomial::from_exponents(vec![1; ambient]);
    let pair_covers = (0..n)
        .map(|i| {
            let mut exps = vec![1; ambient];
            exps[i] = 0;
            exps[n + i] = 0;
            Monomial::from_exponents(exps)
        })
        .collect();
    Ok(CrownMonomials { n, x_cover, y_cover, vertex_product, pair_covers })
}

/// The distinguished monomials of a complete multipartite graph.
#[derive(Debug, Clone)]
pub struct MultipartiteMonomials {
    /// Part sizes sorted descending.
    pub parts: Vec<u32>,
    /// Total vertex count n.
    pub ambient: usize,
    /// Product of the vertices of part i.
    pub part_products: Vec<Monomial>,
    /// Product of all vertices.
    pub vertex_product: Monomial,
    /// For each i, the product of all vertices outside part i; these are
    /// exactly the minimal generators of the cover ideal.
    pub cover_generators: Vec<Monomial>,
}

/// Build the multipartite cover monomials (parts sorted descending, k >= 2).
pub fn multipartite_monomials(parts: &[u32]) -> Result<MultipartiteMonomials, Error> {
    let (sorted, _) = normalize_parts(parts)?;
    let ambient: usize = sorted.iter().map(|&p| p as usize).sum();
    let mut offsets = Vec::with_capacity(sorted.len());
    let mut acc = 0usize;
    for &p in &sorted {
        offsets.push(acc);
        acc += p as usize;
    }
    let part_products: Vec<Monomial> = sorted
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let mut exps = vec![0; ambient];
            for j in 0..p as usize {
                exps[offsets[i] + j] = 1;
            }
            Monomial::from_exponents(exps)
        })
        .collect();
    let vertex_product = Monomial::from_exponents(vec![1; ambient]);
    let cover_generators = part_products
        .iter()
        .map(|mi| vertex_product.colon_quotient(mi).expect("same ambient"))
        .collect();
    Ok(MultipartiteMonomials {
        parts: sorted,
        ambient,
        part_products,
        vertex_product,
        cover_generators,
    })
}

/// A graph family with a closed-form minimal generating set for its cover
/// ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverFamily {
    /// Crown graph on 2n vertices, n >= 3.
    Crown { n: usize },
    /// Complete multipartite graph with the given part sizes, k >= 2.
    Multipartite { parts: Vec<u32> },
}

/// The cover ideal written directly from the family's cover monomials,
/// bypassing the edge-prime intersection.
pub fn closed_form_cover_generators(family: &CoverFamily) -> Result<MonomialIdeal, Error> {
    match family {
        CoverFamily::Crown { n } => {
            let cm = crown_monomials(*n)?;
            let mut gens = vec![cm.x_cover, cm.y_cover];
            gens.extend(cm.pair_covers);
            MonomialIdeal::new(2 * n, gens)
        }
        CoverFamily::Multipartite { parts } => {
            let mm = multipartite_monomials(parts)?;
            MonomialIdeal::new(mm.ambient, mm.cover_generators)
        }
    }
}
