//! Quiver data: parsing, validation, type-A recognition, the Euler form,
//! paths, and the projective/injective representations of the path algebra.

use crate::error::Error;
use crate::linalg::Matrix;
use crate::repcat::Representation;

/// An arrow of a quiver. Vertices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver without loops and oriented cycles, vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

/// One nonnegative integer per vertex.
pub type DimensionVector = Vec<usize>;

impl Quiver {
    /// Validate and build. Rejects loops, oriented cycles, out-of-range
    /// vertices and duplicate arrow labels.
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, Error> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("quiver needs at least one vertex".into()));
        }
        let mut labels = std::collections::BTreeSet::new();
        for a in &arrows {
            if a.source == a.target {
                return Err(Error::InvalidQuiver(format!("loop detected at arrow '{}'", a.label)));
            }
            if a.source == 0 || a.source > vertex_count || a.target == 0 || a.target > vertex_count {
                return Err(Error::InvalidQuiver(format!(
                    "arrow '{}' references a vertex outside 1..={}",
                    a.label, vertex_count
                )));
            }
            if !labels.insert(a.label.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow label '{}'", a.label)));
            }
        }
        let q = Quiver { vertex_count, arrows };
        if q.has_oriented_cycle() {
            return Err(Error::InvalidQuiver("oriented cycle detected".into()));
        }
        Ok(q)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    fn has_oriented_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle exists iff not all vertices can be peeled.
        let n = self.vertex_count;
        let mut indeg = vec![0usize; n + 1];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut queue: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for a in &self.arrows {
                if a.source == v {
                    indeg[a.target] -= 1;
                    if indeg[a.target] == 0 {
                        queue.push(a.target);
                    }
                }
            }
        }
        seen != n
    }

    /// True iff the underlying undirected graph is a simple path visiting
    /// every vertex. Orientation of the edges is irrelevant.
    pub fn is_type_a(&self) -> bool {
        let n = self.vertex_count;
        if self.arrows.len() + 1 != n {
            return false;
        }
        if n == 1 {
            return true;
        }
        let mut deg = vec![0usize; n + 1];
        let mut seen_edges = std::collections::BTreeSet::new();
        for a in &self.arrows {
            let e = (a.source.min(a.target), a.source.max(a.target));
            if !seen_edges.insert(e) {
                return false; // parallel edges
            }
            deg[a.source] += 1;
            deg[a.target] += 1;
        }
        let ones = (1..=n).filter(|&v| deg[v] == 1).count();
        let twos = (1..=n).filter(|&v| deg[v] == 2).count();
        // n-1 distinct edges with degrees <= 2 and two endpoints force a path
        // (connectedness follows from the degree count on n-1 edges).
        ones == 2 && twos == n - 2
    }

    /// True iff the quiver is type A *and* vertices are numbered 1..n along
    /// the path, i.e. every arrow joins consecutive vertices. The category
    /// engine requires this canonical numbering.
    pub fn is_canonical_type_a(&self) -> bool {
        self.is_type_a()
            && self
                .arrows
                .iter()
                .all(|a| a.source.abs_diff(a.target) == 1)
    }

    /// Euler form of the path algebra:
    /// `<d, e> = sum_i d_i e_i - sum_(a: i->j) d_i e_j`.
    pub fn euler_form(&self, d: &DimensionVector, e: &DimensionVector) -> Result<i64, Error> {
        if d.len() != self.vertex_count || e.len() != self.vertex_count {
            return Err(Error::DimensionMismatch(format!(
                "euler_form expects vectors of length {}",
                self.vertex_count
            )));
        }
        let mut val: i64 = 0;
        for v in 0..self.vertex_count {
            val += (d[v] * e[v]) as i64;
        }
        for a in &self.arrows {
            val -= (d[a.source - 1] * e[a.target - 1]) as i64;
        }
        Ok(val)
    }

    /// All directed paths starting at `from`, in lexicographic order of their
    /// arrow-index sequences. Includes the trivial path. Finite because the
    /// quiver is acyclic.
    pub fn paths_from(&self, from: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path { source: from, target: from, arrows: Vec::new() }];
        while let Some(p) = stack.pop() {
            // children pushed in reverse so the traversal emits lex order
            let mut children = Vec::new();
            for (idx, a) in self.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(idx);
                    children.push(Path { source: from, target: a.target, arrows });
                }
            }
            out.push(p);
            for c in children.into_iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    /// All directed paths `from -> to`, lexicographic by arrow indices.
    pub fn paths_between(&self, from: usize, to: usize) -> Vec<Path> {
        self.paths_from(from).into_iter().filter(|p| p.target == to).collect()
    }

    /// The indecomposable projective `P_i`: basis at vertex `j` is the set of
    /// paths `i -> j`, and arrows act by path extension.
    pub fn projective_rep(&self, i: usize) -> Result<Representation, Error> {
        self.check_vertex(i)?;
        let paths = self.paths_from(i);
        let basis_at = |v: usize| -> Vec<&Path> {
            paths.iter().filter(|p| p.target == v).collect()
        };
        let dims: DimensionVector = (1..=self.vertex_count).map(|v| basis_at(v).len()).collect();
        let mut maps = Vec::new();
        for (aidx, a) in self.arrows.iter().enumerate() {
            let src = basis_at(a.source);
            let dst = basis_at(a.target);
            let mut m = Matrix::zero(dst.len(), src.len());
            for (c, p) in src.iter().enumerate() {
                let mut extended = p.arrows.clone();
                extended.push(aidx);
                let r = dst
                    .iter()
                    .position(|q| q.arrows == extended)
                    .expect("extended path must be enumerated");
                m[(r, c)] = crate::linalg::scalar(1);
            }
            maps.push(m);
        }
        Representation::new(self, dims, maps)
    }

    /// The indecomposable injective `I_i`: basis at vertex `j` is the dual of
    /// the paths `j -> i`; an arrow acts as the transpose of precomposition.
    pub fn injective_rep(&self, i: usize) -> Result<Representation, Error> {
        self.check_vertex(i)?;
        let basis_at = |v: usize| self.paths_between(v, i);
        let dims: DimensionVector = (1..=self.vertex_count).map(|v| basis_at(v).len()).collect();
        let mut maps = Vec::new();
        for (aidx, a) in self.arrows.iter().enumerate() {
            let src = basis_at(a.source); // paths source -> i
            let dst = basis_at(a.target); // paths target -> i
            let mut m = Matrix::zero(dst.len(), src.len());
            // dual of (q: target -> i) |-> (a.q: source -> i)
            for (r, q) in dst.iter().enumerate() {
                let mut composed = vec![aidx];
                composed.extend_from_slice(&q.arrows);
                if let Some(c) = src.iter().position(|p| p.arrows == composed) {
                    m[(r, c)] = crate::linalg::scalar(1);
                }
            }
            maps.push(m);
        }
        Representation::new(self, dims, maps)
    }

    fn check_vertex(&self, i: usize) -> Result<(), Error> {
        if i == 0 || i > self.vertex_count {
            return Err(Error::InvalidQuiver(format!(
                "vertex {} out of range 1..={}",
                i, self.vertex_count
            )));
        }
        Ok(())
    }

    /// Linearly oriented A_n: arrows `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Quiver {
        let arrows = (1..n)
            .map(|i| Arrow { label: format!("a{}", i), source: i, target: i + 1 })
            .collect();
        Quiver::new(n, arrows).expect("linear A_n is valid")
    }

    /// A_n with the orientation of edge i (between i and i+1) given by
    /// `forward[i-1]`: true for `i -> i+1`, false for `i+1 -> i`.
    pub fn oriented_a(n: usize, forward: &[bool]) -> Quiver {
        assert_eq!(forward.len(), n.saturating_sub(1));
        let arrows = (1..n)
            .map(|i| {
                let (s, t) = if forward[i - 1] { (i, i + 1) } else { (i + 1, i) };
                Arrow { label: format!("a{}", i), source: s, target: t }
            })
            .collect();
        Quiver::new(n, arrows).expect("oriented A_n is valid")
    }
}

/// A directed path, stored as the sequence of arrow indices traversed.
/// The trivial path at a vertex has an empty arrow list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next` (targets and sources must match).
    pub fn then(&self, next: &Path) -> Path {
        assert_eq!(self.target, next.source, "paths not composable");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Path { source: self.source, target: next.target, arrows }
    }
}

/// Parse the quiver file format:
///
/// ```text
/// # comment
/// vertices: <n>
/// <label>: <s> -> <t>
/// ```
pub fn parse_quiver(text: &str) -> Result<Quiver, Error> {
    let mut vertex_count: Option<usize> = None;
    let mut arrows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = lineno + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vertices:") {
            if vertex_count.is_some() {
                return Err(Error::Parse { line: lineno, message: "duplicate 'vertices:' line".into() });
            }
            let n: usize = rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid vertex count '{}'", rest.trim()),
            })?;
            vertex_count = Some(n);
            continue;
        }
        let (label, rest) = line.split_once(':').ok_or_else(|| Error::Parse {
            line: lineno,
            message: "expected 'label: s -> t'".into(),
        })?;
        let (s, t) = rest.split_once("->").ok_or_else(|| Error::Parse {
            line: lineno,
            message: "expected 'label: s -> t'".into(),
        })?;
        let source: usize = s.trim().parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("invalid source vertex '{}'", s.trim()),
        })?;
        let target: usize = t.trim().parse().map_err(|_| Error::Parse {
            line: lineno,
            message: format!("invalid target vertex '{}'", t.trim()),
        })?;
        if vertex_count.is_none() {
            return Err(Error::Parse {
                line: lineno,
                message: "'vertices:' line must come before arrows".into(),
            });
        }
        arrows.push(Arrow { label: label.trim().to_string(), source, target });
    }
    let n = vertex_count.ok_or(Error::Parse { line: 0, message: "missing 'vertices:' line".into() })?;
    Quiver::new(n, arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_two_vertex_quiver() {
        let q = parse_quiver("vertices: 2\na: 1 -> 2\n").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows().len(), 1);
    }

    #[test]
    fn parse_rejects_loop() {
        let err = parse_quiver("vertices: 1\na: 1 -> 1\n").unwrap_err();
        assert!(err.to_string().contains("loop detected"), "{}", err);
    }

    #[test]
    fn parse_rejects_oriented_cycle() {
        let err = parse_quiver("vertices: 2\na: 1 -> 2\nb: 2 -> 1\n").unwrap_err();
        assert!(err.to_string().contains("oriented cycle detected"), "{}", err);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = parse_quiver("vertices: 2\nnot an arrow\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{}", err);
    }

    #[test]
    fn type_a_recognition() {
        assert!(Quiver::linear_a(3).is_type_a());
        // zigzag 1 -> 2 <- 3
        let zig = Quiver::new(
            3,
            vec![
                Arrow { label: "a".into(), source: 1, target: 2 },
                Arrow { label: "b".into(), source: 3, target: 2 },
            ],
        )
        .unwrap();
        assert!(zig.is_type_a());
        // D_4 star: three branches from vertex 1
        let star = Quiver::new(
            4,
            vec![
                Arrow { label: "a".into(), source: 1, target: 2 },
                Arrow { label: "b".into(), source: 1, target: 3 },
                Arrow { label: "c".into(), source: 1, target: 4 },
            ],
        )
        .unwrap();
        assert!(!star.is_type_a());
    }

    #[test]
    fn scrambled_path_is_type_a_but_not_canonical() {
        // path 1 - 3 - 2 in vertex labels
        let q = Quiver::new(
            3,
            vec![
                Arrow { label: "a".into(), source: 1, target: 3 },
                Arrow { label: "b".into(), source: 3, target: 2 },
            ],
        )
        .unwrap();
        assert!(q.is_type_a());
        assert!(!q.is_canonical_type_a());
    }

    #[test]
    fn euler_form_on_a2() {
        let q = Quiver::linear_a(2);
        assert_eq!(q.euler_form(&vec![1, 0], &vec![0, 1]).unwrap(), -1);
        assert_eq!(q.euler_form(&vec![1, 1], &vec![1, 1]).unwrap(), 1);
        assert_eq!(q.euler_form(&vec![0, 1], &vec![1, 0]).unwrap(), 0);
    }

    #[test]
    fn euler_form_rejects_length_mismatch() {
        let q = Quiver::linear_a(2);
        assert!(q.euler_form(&vec![1], &vec![0, 1]).is_err());
    }

    #[test]
    fn projective_dimension_vectors_on_a2() {
        let q = Quiver::linear_a(2);
        assert_eq!(q.projective_rep(1).unwrap().dims(), &[1, 1]);
        assert_eq!(q.projective_rep(2).unwrap().dims(), &[0, 1]);
    }

    #[test]
    fn a1_projective_equals_injective() {
        let q = Quiver::linear_a(1);
        let p = q.projective_rep(1).unwrap();
        let i = q.injective_rep(1).unwrap();
        assert_eq!(p.dims(), &[1]);
        assert_eq!(i.dims(), &[1]);
    }

    #[test]
    fn path_algebra_dimension_is_triangular_number() {
        for n in 1..=5 {
            let q = Quiver::linear_a(n);
            let total: usize = (1..=n)
                .map(|i| q.projective_rep(i).unwrap().dims().iter().sum::<usize>())
                .sum();
            assert_eq!(total, n * (n + 1) / 2);
        }
    }

    #[test]
    fn vertex_out_of_range() {
        let q = Quiver::linear_a(2);
        assert!(q.projective_rep(3).is_err());
        assert!(q.injective_rep(0).is_err());
    }
}
