//! Domino diagrams on an m×n torus and the product bases they generate.
//!
//! Each domino is a width-one strip. A horizontal strip in row `r` with
//! offset `b` and length `s` covers `(r, b+1) … (r, b+s)` (columns mod `n`)
//! and its `j`-th square carries the state
//! `|r⟩ ⊗ Σ_k α_r^k ω^{jk} |b+k⟩` with `ω = e^{2πi/s}`; vertical strips are
//! the transpose, with column phases `β_c`.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{clique_cover_number, GraphError, SimpleGraph};
use crate::json::Scalar;
use crate::numerics::{CVector, Tolerance};
use crate::states::{ProductStateSet, StateError};

const PHASE_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum DominoError {
    #[error("invalid diagram: {0}")]
    Invalid(ValidationReport),
    #[error(
        "row/column graphs disagree with the generated states ({} row, {} column mismatches); \
         the phases are degenerate, try random phases",
        .0.row_mismatches.len(),
        .0.column_mismatches.len()
    )]
    PhaseDegeneracy(ConsistencyReport),
    #[error("every pair of dominoes must share a row or a column")]
    HypothesisNotMet,
    #[error("invalid diagram file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    States(#[from] StateError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "h", alias = "horizontal")]
    Horizontal,
    #[serde(rename = "v", alias = "vertical")]
    Vertical,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domino {
    #[serde(default)]
    pub id: usize,
    pub orientation: Orientation,
    /// Row of a horizontal strip, column of a vertical one.
    pub line: usize,
    pub offset: usize,
    pub length: usize,
}

impl Domino {
    pub fn horizontal(id: usize, row: usize, offset: usize, length: usize) -> Self {
        Self { id, orientation: Orientation::Horizontal, line: row, offset, length }
    }

    pub fn vertical(id: usize, column: usize, offset: usize, length: usize) -> Self {
        Self { id, orientation: Orientation::Vertical, line: column, offset, length }
    }

    /// Covered squares `(row, column)` in strip order `j = 1..=s`.
    pub fn squares(&self, m: usize, n: usize) -> Vec<(usize, usize)> {
        (1..=self.length)
            .map(|j| match self.orientation {
                Orientation::Horizontal => (self.line, (self.offset + j) % n),
                Orientation::Vertical => ((self.offset + j) % m, self.line),
            })
            .collect()
    }
}

/// Partition of the m×n torus into dominoes, with unit-modulus phases.
#[derive(Debug, Clone, PartialEq)]
pub struct DominoDiagram {
    pub m: usize,
    pub n: usize,
    pub dominoes: Vec<Domino>,
    /// One phase per row.
    pub alpha: Vec<Complex64>,
    /// One phase per column.
    pub beta: Vec<Complex64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub uncovered: Vec<(usize, usize)>,
    pub overlapping: Vec<(usize, usize)>,
    /// `(domino id, problem)`.
    pub bad_dominoes: Vec<(usize, String)>,
    pub bad_phases: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.uncovered.is_empty()
            && self.overlapping.is_empty()
            && self.bad_dominoes.is_empty()
            && self.bad_phases.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.uncovered.is_empty() {
            parts.push(format!("uncovered squares {:?}", self.uncovered));
        }
        if !self.overlapping.is_empty() {
            parts.push(format!("squares covered twice {:?}", self.overlapping));
        }
        for (id, why) in &self.bad_dominoes {
            parts.push(format!("domino {id}: {why}"));
        }
        parts.extend(self.bad_phases.iter().cloned());
        if parts.is_empty() {
            f.write_str("valid")
        } else {
            f.write_str(&parts.join("; "))
        }
    }
}

/// Square pairs `(u, v)` (row-major indices) where a derived graph and the
/// confusability graph disagree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub row_mismatches: Vec<(usize, usize)>,
    pub column_mismatches: Vec<(usize, usize)>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.row_mismatches.is_empty() && self.column_mismatches.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominoBounds {
    /// Longest horizontal domino (1 if there is none).
    pub h: usize,
    /// Longest vertical domino (1 if there is none).
    pub v: usize,
    /// Lower bound on the clique cover number of the complement of the row
    /// graph; compare with Bob's dimension `n`.
    pub lower_row: usize,
    /// Lower bound on the clique cover number of the complement of the
    /// column graph; compare with Alice's dimension `m`.
    pub lower_col: usize,
    pub complement_condition: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum DirectionVerdict {
    /// A domino long enough to push the cover bound past the dimension.
    NotDistinguishable {
        domino: usize,
    },
    NoConclusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DominoVerdict {
    pub alice_first: DirectionVerdict,
    pub bob_first: DirectionVerdict,
}

/// On-disk diagram.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramFile {
    pub m: usize,
    pub n: usize,
    pub dominoes: Vec<Domino>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Vec<Scalar>>,
}

impl DominoDiagram {
    /// A diagram with all phases 1.
    pub fn new(m: usize, n: usize, dominoes: Vec<Domino>) -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self { m, n, dominoes, alpha: vec![one; m], beta: vec![one; n] }
    }

    /// Replaces the phases with uniformly random unit-modulus ones.
    pub fn with_random_phases(mut self, seed: u64) -> Self {
        let mut rng = StdRng::seed_from_u64(seed);
        let mut draw = |k: usize| -> Vec<Complex64> {
            (0..k).map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..TAU))).collect()
        };
        self.alpha = draw(self.m);
        self.beta = draw(self.n);
        self
    }

    pub fn from_file(file: DiagramFile) -> Self {
        let mut d = Self::new(file.m, file.n, file.dominoes);
        if let Some(a) = file.alpha {
            d.alpha = a.into_iter().map(Complex64::from).collect();
        }
        if let Some(b) = file.beta {
            d.beta = b.into_iter().map(Complex64::from).collect();
        }
        d
    }

    pub fn from_json(text: &str) -> Result<Self, DominoError> {
        Ok(Self::from_file(serde_json::from_str(text)?))
    }

    pub fn to_file(&self) -> DiagramFile {
        let one = Complex64::new(1.0, 0.0);
        let phases = |p: &[Complex64]| (!p.iter().all(|&z| z == one)).then(|| p.iter().map(|&z| z.into()).collect());
        DiagramFile {
            m: self.m,
            n: self.n,
            dominoes: self.dominoes.clone(),
            alpha: phases(&self.alpha),
            beta: phases(&self.beta),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("diagrams always serialize")
    }

    pub fn square_index(&self, row: usize, col: usize) -> usize {
        row * self.n + col
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if self.m == 0 || self.n == 0 {
            report.bad_dominoes.push((0, "grid must be at least 1×1".into()));
            return report;
        }
        if self.alpha.len() != self.m {
            report.bad_phases.push(format!("expected {} row phases, got {}", self.m, self.alpha.len()));
        }
        if self.beta.len() != self.n {
            report.bad_phases.push(format!("expected {} column phases, got {}", self.n, self.beta.len()));
        }
        for (name, phases) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            for (i, z) in phases.iter().enumerate() {
                if (z.norm() - 1.0).abs() > PHASE_TOL {
                    report.bad_phases.push(format!("{name}[{i}] has modulus {}", z.norm()));
                }
            }
        }
        let mut count = vec![0usize; self.m * self.n];
        for d in &self.dominoes {
            let (lines, span) = match d.orientation {
                Orientation::Horizontal => (self.m, self.n),
                Orientation::Vertical => (self.n, self.m),
            };
            if d.line >= lines {
                report.bad_dominoes.push((d.id, format!("line {} out of range", d.line)));
                continue;
            }
            if d.length == 0 || d.length > span {
                report.bad_dominoes.push((d.id, format!("length {} not in 1..={span}", d.length)));
                continue;
            }
            for (r, c) in d.squares(self.m, self.n) {
                count[self.square_index(r, c)] += 1;
            }
        }
        for r in 0..self.m {
            for c in 0..self.n {
                match count[self.square_index(r, c)] {
                    0 => report.uncovered.push((r, c)),
                    1 => {}
                    _ => report.overlapping.push((r, c)),
                }
            }
        }
        report
    }

    fn ensure_valid(&self) -> Result<(), DominoError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(DominoError::Invalid(report))
        }
    }

    /// Index into `dominoes` of the strip covering each square, row-major.
    fn owners(&self) -> Vec<usize> {
        let mut owner = vec![0; self.m * self.n];
        for (k, d) in self.dominoes.iter().enumerate() {
            for (r, c) in d.squares(self.m, self.n) {
                owner[self.square_index(r, c)] = k;
            }
        }
        owner
    }

    /// The `m·n` states in row-major order, labelled `(r,c)`.
    pub fn generate_states(&self) -> Result<ProductStateSet, DominoError> {
        self.ensure_valid()?;
        let (m, n) = (self.m, self.n);
        let mut slots: Vec<Option<(CVector, CVector)>> = vec![None; m * n];
        for d in &self.dominoes {
            let s = d.length;
            let omega = |e: usize| Complex64::from_polar(1.0, TAU * (e % s) as f64 / s as f64);
            for (j0, (r, c)) in d.squares(m, n).into_iter().enumerate() {
                let j = j0 + 1;
                let (a, b) = match d.orientation {
                    Orientation::Horizontal => {
                        let mut b = CVector::zeros(n);
                        for k in 1..=s {
                            b[(d.offset + k) % n] += self.alpha[r].powu(k as u32) * omega(j * k);
                        }
                        (basis(m, r), b)
                    }
                    Orientation::Vertical => {
                        let mut a = CVector::zeros(m);
                        for k in 1..=s {
                            a[(d.offset + k) % m] += self.beta[c].powu(k as u32) * omega(j * k);
                        }
                        (a, basis(n, c))
                    }
                };
                slots[self.square_index(r, c)] = Some((a, b));
            }
        }
        let states = slots.into_iter().enumerate().map(|(i, slot)| {
            let (a, b) = slot.expect("a valid diagram covers every square");
            (Some(format!("({},{})", i / n, i % n)), a, b)
        });
        Ok(ProductStateSet::new(m, n, states, Tolerance::default())?)
    }

    fn line_graph(&self, orientation: Orientation) -> Result<SimpleGraph, DominoError> {
        self.ensure_valid()?;
        let owner = self.owners();
        let lines: Vec<u64> = self
            .dominoes
            .iter()
            .map(|d| {
                d.squares(self.m, self.n)
                    .into_iter()
                    .fold(0u64, |acc, (r, c)| acc | 1 << if orientation == Orientation::Horizontal { r } else { c })
            })
            .collect();
        let mut g = SimpleGraph::empty(self.m * self.n)?;
        for u in 0..self.m * self.n {
            for v in u + 1..self.m * self.n {
                let same_line = match orientation {
                    Orientation::Horizontal => u / self.n == v / self.n,
                    Orientation::Vertical => u % self.n == v % self.n,
                };
                let (du, dv) = (owner[u], owner[v]);
                if same_line || (du != dv && lines[du] & lines[dv] != 0) {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    }

    /// Squares are adjacent when they share a row, or lie in different
    /// dominoes that some row meets.
    pub fn row_graph(&self) -> Result<SimpleGraph, DominoError> {
        self.line_graph(Orientation::Horizontal)
    }

    /// Column analogue of [`row_graph`](Self::row_graph).
    pub fn column_graph(&self) -> Result<SimpleGraph, DominoError> {
        self.line_graph(Orientation::Vertical)
    }

    /// Compares the row/column graphs with the confusability graphs of the
    /// generated states.
    pub fn consistency(&self) -> Result<ConsistencyReport, DominoError> {
        let g = self.generate_states()?.confusability_graphs()?;
        let diff = |x: &SimpleGraph, y: &SimpleGraph| {
            let mut out = Vec::new();
            for u in 0..x.n() {
                for v in u + 1..x.n() {
                    if x.has_edge(u, v) != y.has_edge(u, v) {
                        out.push((u, v));
                    }
                }
            }
            out
        };
        Ok(ConsistencyReport {
            row_mismatches: diff(&self.row_graph()?, &g.g_a),
            column_mismatches: diff(&self.column_graph()?, &g.g_b),
        })
    }

    /// Like [`consistency`](Self::consistency) but fails on any mismatch.
    pub fn check_consistency(&self) -> Result<(), DominoError> {
        let report = self.consistency()?;
        if report.is_consistent() {
            Ok(())
        } else {
            Err(DominoError::PhaseDegeneracy(report))
        }
    }

    /// Every pair of dominoes meets a common row or a common column.
    pub fn complement_condition(&self) -> Result<bool, DominoError> {
        self.ensure_valid()?;
        let spans: Vec<(u64, u64)> = self
            .dominoes
            .iter()
            .map(|d| {
                d.squares(self.m, self.n).into_iter().fold((0u64, 0u64), |(rs, cs), (r, c)| (rs | 1 << r, cs | 1 << c))
            })
            .collect();
        Ok(spans.iter().enumerate().all(|(i, a)| spans[i + 1..].iter().all(|b| a.0 & b.0 != 0 || a.1 & b.1 != 0)))
    }

    fn longest(&self, orientation: Orientation) -> Option<&Domino> {
        self.dominoes
            .iter()
            .filter(|d| d.orientation == orientation)
            .max_by_key(|d| (d.length, std::cmp::Reverse(d.id)))
    }

    /// Lower bounds on the clique cover numbers of the complements of the
    /// row and column graphs. The refinements by `h` and `v` need the
    /// complement condition and at least two lines across the strip.
    pub fn bounds(&self) -> Result<DominoBounds, DominoError> {
        let complement_condition = self.complement_condition()?;
        let h = self.longest(Orientation::Horizontal).map_or(1, |d| d.length);
        let v = self.longest(Orientation::Vertical).map_or(1, |d| d.length);
        let mut lower_row = self.n;
        let mut lower_col = self.m;
        if complement_condition {
            if self.m >= 2 {
                lower_row = lower_row.max(self.n - h + h * h);
            }
            if self.n >= 2 {
                lower_col = lower_col.max(self.m - v + v * v);
            }
        }
        Ok(DominoBounds { h, v, lower_row, lower_col, complement_condition })
    }

    /// A vertical domino of length at least two rules out Alice going first;
    /// a horizontal one rules out Bob. Requires the complement condition.
    pub fn verdict(&self) -> Result<DominoVerdict, DominoError> {
        if !self.complement_condition()? {
            return Err(DominoError::HypothesisNotMet);
        }
        let pick = |o: Orientation, across: usize| match self.longest(o) {
            Some(d) if d.length >= 2 && across >= 2 => DirectionVerdict::NotDistinguishable { domino: d.id },
            _ => DirectionVerdict::NoConclusion,
        };
        Ok(DominoVerdict {
            alice_first: pick(Orientation::Vertical, self.n),
            bob_first: pick(Orientation::Horizontal, self.m),
        })
    }

    /// Exact cover numbers of the complements of the row and column graphs.
    pub fn exact_cover_numbers(&self) -> Result<(usize, usize), DominoError> {
        Ok((
            clique_cover_number(&self.row_graph()?.complement())?,
            clique_cover_number(&self.column_graph()?.complement())?,
        ))
    }

    /// The same diagram shifted cyclically by `(dr, dc)`.
    pub fn translated(&self, dr: usize, dc: usize) -> Self {
        let (m, n) = (self.m, self.n);
        let dominoes = self
            .dominoes
            .iter()
            .map(|d| match d.orientation {
                Orientation::Horizontal => Domino { line: (d.line + dr) % m, offset: (d.offset + dc) % n, ..d.clone() },
                Orientation::Vertical => Domino { line: (d.line + dc) % n, offset: (d.offset + dr) % m, ..d.clone() },
            })
            .collect();
        let mut alpha = self.alpha.clone();
        let mut beta = self.beta.clone();
        for r in 0..m {
            alpha[(r + dr) % m] = self.alpha[r];
        }
        for c in 0..n {
            beta[(c + dc) % n] = self.beta[c];
        }
        Self { m, n, dominoes, alpha, beta }
    }

    /// Vertex map induced by [`translated`](Self::translated).
    pub fn translation_permutation(&self, dr: usize, dc: usize) -> Vec<usize> {
        (0..self.m * self.n)
            .map(|i| self.square_index((i / self.n + dr) % self.m, (i % self.n + dc) % self.n))
            .collect()
    }
}

fn basis(dim: usize, i: usize) -> CVector {
    crate::numerics::ket(dim, i)
}

/// The 3×3 pinwheel: a singleton in the centre surrounded by four length-2
/// strips.
pub fn builtin_bennett3x3() -> DominoDiagram {
    DominoDiagram::new(
        3,
        3,
        vec![
            Domino::horizontal(0, 1, 0, 1),
            Domino::horizontal(1, 0, 2, 2),
            Domino::horizontal(2, 2, 0, 2),
            Domino::vertical(3, 0, 0, 2),
            Domino::vertical(4, 2, 2, 2),
        ],
    )
}

/// Named diagrams; currently only `bennett3x3`.
pub fn builtin_diagram(name: &str) -> Option<DominoDiagram> {
    (name == "bennett3x3").then(builtin_bennett3x3)
}
