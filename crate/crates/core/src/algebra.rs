//! Generalized Cartan matrices, the algebra catalog, and exact inverse-Cartan
//! data.
//!
//! Matrices follow the convention `A[i][j] = <alpha_i^vee, alpha_j>`: row `i`
//! holds the pairings of every simple root with the coroot of node `i`.
//! Node labels are display strings (`"-1"`, `"0"`, ...); internally nodes are
//! addressed by their 0-based position in the label list.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is empty")]
    Empty,
    #[error("matrix is not square: row {row} has {len} entries, expected {rank}")]
    NonSquare { row: usize, len: usize, rank: usize },
    #[error("diagonal entry ({index},{index}) is {value}, expected 2")]
    DiagonalNotTwo { index: usize, value: i64 },
    #[error("off-diagonal entry ({row},{col}) is positive ({value})")]
    PositiveOffDiagonal { row: usize, col: usize, value: i64 },
    #[error("entry ({row},{col}) is zero but ({col},{row}) is not")]
    AsymmetricZero { row: usize, col: usize },
    #[error("expected {rank} node labels, got {got}")]
    LabelCount { rank: usize, got: usize },
    #[error("duplicate node label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown node label {0:?}")]
    UnknownLabel(String),
    #[error("nodes {0:?} and {1:?} are not joined by an edge")]
    NoSuchEdge(String, String),
    #[error("unknown algebra family in {0:?}")]
    UnknownFamily(String),
    #[error("rank {rank} out of range for family {family}")]
    RankOutOfRange { family: Family, rank: usize },
    #[error("cartan matrix is singular")]
    SingularMatrix,
    #[error("{0} is not a finite-type algebra")]
    NotFinite(String),
}

/// Validated generalized Cartan matrix with node labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
    labels: Vec<String>,
}

/// Checks the GCM axioms and labels the nodes `"1"..="n"`.
pub fn validate_gcm(entries: Vec<Vec<i64>>) -> Result<GeneralizedCartanMatrix, AlgebraError> {
    let labels = (1..=entries.len()).map(|i| i.to_string()).collect();
    GeneralizedCartanMatrix::with_labels(labels, entries)
}

impl GeneralizedCartanMatrix {
    pub fn with_labels(
        labels: Vec<String>,
        entries: Vec<Vec<i64>>,
    ) -> Result<Self, AlgebraError> {
        let rank = entries.len();
        if rank == 0 {
            return Err(AlgebraError::Empty);
        }
        for (row, r) in entries.iter().enumerate() {
            if r.len() != rank {
                return Err(AlgebraError::NonSquare { row, len: r.len(), rank });
            }
        }
        for i in 0..rank {
            if entries[i][i] != 2 {
                return Err(AlgebraError::DiagonalNotTwo { index: i, value: entries[i][i] });
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let value = entries[i][j];
                if value > 0 {
                    return Err(AlgebraError::PositiveOffDiagonal { row: i, col: j, value });
                }
                if (value == 0) != (entries[j][i] == 0) {
                    let (row, col) = if value == 0 { (i, j) } else { (j, i) };
                    return Err(AlgebraError::AsymmetricZero { row, col });
                }
            }
        }
        if labels.len() != rank {
            return Err(AlgebraError::LabelCount { rank, got: labels.len() });
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        Ok(GeneralizedCartanMatrix { entries, labels })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize, AlgebraError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Stable hex digest of labels and entries; identifies the algebra in
    /// checkpoints.
    pub fn fingerprint(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(b"gcm-v1;");
        for l in &self.labels {
            hasher.update(l.as_bytes());
            hasher.update(b",");
        }
        hasher.update(b";");
        for row in &self.entries {
            for v in row {
                hasher.update(v.to_le_bytes());
            }
        }
        let digest = hasher.finalize();
        digest[..16].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Removes one node and every edge touching it.
    pub fn delete_node(&self, label: &str) -> Result<GeneralizedCartanMatrix, AlgebraError> {
        let drop = self.index_of(label)?;
        let keep: Vec<usize> = (0..self.rank()).filter(|&i| i != drop).collect();
        if keep.is_empty() {
            return Err(AlgebraError::Empty);
        }
        let entries = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| self.entries[i][j]).collect())
            .collect();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        GeneralizedCartanMatrix::with_labels(labels, entries)
    }

    /// Removes the edge between two nodes, keeping both nodes.
    pub fn delete_edge(&self, a: &str, b: &str) -> Result<GeneralizedCartanMatrix, AlgebraError> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        if i == j || self.entries[i][j] == 0 {
            return Err(AlgebraError::NoSuchEdge(a.to_string(), b.to_string()));
        }
        let mut entries = self.entries.clone();
        entries[i][j] = 0;
        entries[j][i] = 0;
        GeneralizedCartanMatrix::with_labels(self.labels.clone(), entries)
    }

    fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .entries
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .chain(self.labels.iter().map(|l| l.len()))
            .max()
            .unwrap_or(1);
        write!(f, "{:>width$} |", "")?;
        for l in &self.labels {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        for (l, row) in self.labels.iter().zip(&self.entries) {
            write!(f, "{l:>width$} |")?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// On-disk GCM form: `{"labels": [...], "matrix": [[...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GcmFile {
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

impl TryFrom<GcmFile> for GeneralizedCartanMatrix {
    type Error = AlgebraError;

    fn try_from(file: GcmFile) -> Result<Self, Self::Error> {
        GeneralizedCartanMatrix::with_labels(file.labels, file.matrix)
    }
}

impl From<&GeneralizedCartanMatrix> for GcmFile {
    fn from(gcm: &GeneralizedCartanMatrix) -> Self {
        GcmFile { labels: gcm.labels.clone(), matrix: gcm.entries.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    AffineA,
    HA,
    Custom,
}

impl Family {
    pub fn is_finite(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D | Family::E | Family::F | Family::G)
    }

    fn prefix(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
            Family::AffineA => "AffA",
            Family::HA => "HA",
            Family::Custom => "Custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.prefix())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDescriptor {
    pub family: Family,
    pub rank_param: usize,
    pub gcm: GeneralizedCartanMatrix,
}

impl AlgebraDescriptor {
    pub fn custom(gcm: GeneralizedCartanMatrix) -> Self {
        AlgebraDescriptor { family: Family::Custom, rank_param: gcm.rank(), gcm }
    }

    pub fn name(&self) -> String {
        match self.family {
            Family::Custom => format!("Custom[{}]", &self.gcm.fingerprint()[..8]),
            f => format!("{}{}", f.prefix(), self.rank_param),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.family.is_finite()
    }
}

/// Every catalog family prefix with an example rank, for listings.
pub const CATALOG_EXAMPLES: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2", "AffA1",
    "AffA2", "HA2", "HA3",
];

/// Parses a name like `"A3"`, `"D5"`, `"AffA2"` or `"HA3"` and builds the
/// canonical descriptor.
pub fn build_catalog(name: &str) -> Result<AlgebraDescriptor, AlgebraError> {
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (prefix, digits) = name.split_at(split);
    let family = match prefix {
        "A" => Family::A,
        "B" => Family::B,
        "C" => Family::C,
        "D" => Family::D,
        "E" => Family::E,
        "F" => Family::F,
        "G" => Family::G,
        "AffA" => Family::AffineA,
        "HA" => Family::HA,
        _ => return Err(AlgebraError::UnknownFamily(name.to_string())),
    };
    let rank: usize = digits.parse().map_err(|_| AlgebraError::UnknownFamily(name.to_string()))?;
    let in_range = match family {
        Family::A | Family::AffineA => rank >= 1,
        Family::B | Family::C | Family::HA => rank >= 2,
        Family::D => rank >= 3,
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
        Family::Custom => false,
    };
    if !in_range {
        return Err(AlgebraError::RankOutOfRange { family, rank });
    }
    let gcm = match family {
        Family::A => finite_chain(rank, &[]),
        Family::B => finite_chain(rank, &[(rank - 2, rank - 1, -2, -1)]),
        Family::C => finite_chain(rank, &[(rank - 2, rank - 1, -1, -2)]),
        Family::D => type_d(rank),
        Family::E => type_e(rank),
        Family::F => finite_chain(4, &[(1, 2, -2, -1)]),
        Family::G => finite_chain(2, &[(0, 1, -1, -3)]),
        Family::AffineA => affine_a(rank),
        Family::HA => hyperbolic_a(rank),
        Family::Custom => unreachable!(),
    };
    Ok(AlgebraDescriptor { family, rank_param: rank, gcm })
}

fn from_edges(labels: Vec<String>, edges: &[(usize, usize, i64, i64)]) -> GeneralizedCartanMatrix {
    let n = labels.len();
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j, a_ij, a_ji) in edges {
        m[i][j] = a_ij;
        m[j][i] = a_ji;
    }
    GeneralizedCartanMatrix::with_labels(labels, m).expect("catalog matrices satisfy the GCM axioms")
}

fn numbered(range: impl Iterator<Item = i64>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

/// Chain 1-2-...-n with simple edges, except the listed overrides.
fn finite_chain(n: usize, overrides: &[(usize, usize, i64, i64)]) -> GeneralizedCartanMatrix {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i, -1, -1)).collect();
    for o in overrides {
        if let Some(e) = edges.iter_mut().find(|e| (e.0, e.1) == (o.0, o.1)) {
            *e = *o;
        }
    }
    from_edges(numbered(1..=n as i64), &edges)
}

fn type_d(n: usize) -> GeneralizedCartanMatrix {
    // Chain 1..n-1, node n attached to n-2.
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i, -1, -1)).collect();
    edges.push((n - 3, n - 1, -1, -1));
    from_edges(numbered(1..=n as i64), &edges)
}

fn type_e(n: usize) -> GeneralizedCartanMatrix {
    // Bourbaki: 1-3-4-5-...-n with 2 attached to 4.
    let mut edges = vec![(0, 2, -1, -1), (1, 3, -1, -1)];
    edges.extend((3..n).map(|i| (i - 1, i, -1, -1)));
    from_edges(numbered(1..=n as i64), &edges)
}

fn affine_a(n: usize) -> GeneralizedCartanMatrix {
    let labels = numbered(0..=n as i64);
    if n == 1 {
        return from_edges(labels, &[(0, 1, -2, -2)]);
    }
    from_edges(labels, &cycle_edges(0, n + 1))
}

/// Edges of a cycle on positions `offset..offset+len`.
fn cycle_edges(offset: usize, len: usize) -> Vec<(usize, usize, i64, i64)> {
    (0..len).map(|k| (offset + k, offset + (k + 1) % len, -1, -1)).collect()
}

/// Affine cycle on labels `0..=r` plus node `-1` attached to node `0`.
fn hyperbolic_a(r: usize) -> GeneralizedCartanMatrix {
    let mut edges = cycle_edges(1, r + 1);
    edges.push((0, 1, -1, -1));
    from_edges(numbered(-1..=r as i64), &edges)
}

/// Exact rational matrix; entries are always in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.rows[row][col]
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn column(&self, col: usize) -> Vec<BigRational> {
        self.rows.iter().map(|r| r[col].clone()).collect()
    }

    pub fn mul_integer(&self, rhs: &[Vec<i64>]) -> RationalMatrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(BigRational::zero(), |acc, k| {
                            acc + &self.rows[i][k] * BigRational::from_integer(BigInt::from(rhs[k][j]))
                        })
                    })
                    .collect()
            })
            .collect();
        RationalMatrix { rows }
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join("\t"))?;
        }
        Ok(())
    }
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn invert_cartan(gcm: &GeneralizedCartanMatrix) -> Result<RationalMatrix, AlgebraError> {
    let n = gcm.rank();
    let mut work: Vec<Vec<BigRational>> = gcm
        .entries()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .chain((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }))
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero()).ok_or(AlgebraError::SingularMatrix)?;
        work.swap(col, pivot);
        let inv = work[col][col].recip();
        for v in work[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v -= &factor * p;
            }
        }
    }
    let rows = work.into_iter().map(|r| r.into_iter().skip(n).collect()).collect();
    Ok(RationalMatrix { rows })
}

/// Fundamental weights in simple-root coordinates, one vector per node.
///
/// `lambda_mu = sum_nu c_nu alpha_nu` with `<lambda_mu, alpha_kappa^vee> =
/// delta`, so the coefficients are column `mu` of `A^-1`. For symmetric
/// matrices that is also row `mu`.
pub fn fundamental_weights(
    gcm: &GeneralizedCartanMatrix,
) -> Result<Vec<Vec<BigRational>>, AlgebraError> {
    let inv = invert_cartan(gcm)?;
    Ok((0..gcm.rank()).map(|mu| inv.column(mu)).collect())
}

/// Degrees of the basic invariants of a finite Weyl group.
pub fn invariant_degrees(descriptor: &AlgebraDescriptor) -> Result<Vec<u32>, AlgebraError> {
    let n = descriptor.rank_param as u32;
    let degrees = match descriptor.family {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|k| 2 * k).collect(),
        Family::D => {
            let mut d: Vec<u32> = (1..n).map(|k| 2 * k).collect();
            d.push(n);
            d
        }
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            _ => return Err(AlgebraError::RankOutOfRange { family: Family::E, rank: n as usize }),
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
        Family::AffineA | Family::HA | Family::Custom => {
            return Err(AlgebraError::NotFinite(descriptor.name()))
        }
    };
    Ok(degrees)
}

/// Finite simply-laced Dynkin type of a connected diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FiniteType {
    A(usize),
    D(usize),
    E(usize),
}

impl FiniteType {
    pub fn catalog_name(self) -> String {
        match self {
            FiniteType::A(n) => format!("A{n}"),
            FiniteType::D(n) => format!("D{n}"),
            FiniteType::E(n) => format!("E{n}"),
        }
    }
}

/// Recognises connected simply-laced trees of type A, D or E by shape.
/// Returns `None` for anything else (multiple edges, cycles, disconnected,
/// or a tree outside the ADE list).
pub fn simply_laced_type(gcm: &GeneralizedCartanMatrix) -> Option<FiniteType> {
    let n = gcm.rank();
    let offdiag = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)));
    if offdiag.clone().any(|(i, j)| !matches!(gcm.entry(i, j), 0 | -1)) {
        return None;
    }
    let edge_count = offdiag.filter(|&(i, j)| i < j && gcm.entry(i, j) != 0).count();
    if edge_count + 1 != n || !is_connected(gcm) {
        return None;
    }
    let degrees: Vec<usize> = (0..n).map(|i| gcm.neighbours(i).count()).collect();
    let branches: Vec<usize> = (0..n).filter(|&i| degrees[i] >= 3).collect();
    match branches.as_slice() {
        [] => Some(FiniteType::A(n)),
        [b] if degrees[*b] == 3 => {
            let mut arms: Vec<usize> = gcm.neighbours(*b).map(|s| arm_length(gcm, *b, s)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Some(FiniteType::D(n)),
                [1, 2, 2..=4] => Some(FiniteType::E(n)),
                _ => None,
            }
        }
        _ => None,
    }
}

fn is_connected(gcm: &GeneralizedCartanMatrix) -> bool {
    let mut seen = vec![false; gcm.rank()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in gcm.neighbours(i) {
            if !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn arm_length(gcm: &GeneralizedCartanMatrix, from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = gcm.neighbours(cur).filter(|&j| j != prev).collect();
        match next.as_slice() {
            [only] => {
                prev = cur;
                cur = *only;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// A single node or edge deletion and the finite type it leaves behind.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subdiagram {
    pub deletion: Deletion,
    pub finite_type: FiniteType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Deletion {
    Node { label: String },
    Edge { a: String, b: String },
}

impl fmt::Display for Deletion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Deletion::Node { label } => write!(f, "delete node {label}"),
            Deletion::Edge { a, b } => write!(f, "delete edge {a}-{b}"),
        }
    }
}

/// Candidate finite numerators for a rational growth ansatz: every single
/// node or edge deletion whose result is a connected ADE diagram.
pub fn finite_subdiagrams(gcm: &GeneralizedCartanMatrix) -> Vec<Subdiagram> {
    let mut out = Vec::new();
    for label in gcm.labels() {
        if let Ok(sub) = gcm.delete_node(label) {
            if let Some(t) = simply_laced_type(&sub) {
                out.push(Subdiagram { deletion: Deletion::Node { label: label.clone() }, finite_type: t });
            }
        }
    }
    let n = gcm.rank();
    for i in 0..n {
        for j in i + 1..n {
            if gcm.entry(i, j) == 0 {
                continue;
            }
            let (a, b) = (&gcm.labels()[i], &gcm.labels()[j]);
            if let Ok(sub) = gcm.delete_edge(a, b) {
                if let Some(t) = simply_laced_type(&sub) {
                    out.push(Subdiagram {
                        deletion: Deletion::Edge { a: a.clone(), b: b.clone() },
                        finite_type: t,
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn validate_accepts_smallest_and_affine() {
        assert_eq!(validate_gcm(vec![vec![2]]).unwrap().rank(), 1);
        assert!(validate_gcm(vec![vec![2, -2], vec![-2, 2]]).is_ok());
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            validate_gcm(vec![vec![2, -1], vec![0, 2]]),
            Err(AlgebraError::AsymmetricZero { row: 1, col: 0 })
        );
        assert!(matches!(validate_gcm(vec![vec![2, -1]]), Err(AlgebraError::NonSquare { .. })));
        assert!(matches!(
            validate_gcm(vec![vec![2, 1], vec![1, 2]]),
            Err(AlgebraError::PositiveOffDiagonal { .. })
        ));
        assert!(matches!(
            validate_gcm(vec![vec![3, -1], vec![-1, 2]]),
            Err(AlgebraError::DiagonalNotTwo { index: 0, value: 3 })
        ));
        assert_eq!(validate_gcm(vec![]), Err(AlgebraError::Empty));
        assert!(matches!(
            GeneralizedCartanMatrix::with_labels(vec!["x".into(), "x".into()], vec![vec![2, 0], vec![0, 2]]),
            Err(AlgebraError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn catalog_parsing() {
        assert_eq!(build_catalog("A1").unwrap().gcm.entries(), &[vec![2]]);
        assert!(matches!(build_catalog("X3"), Err(AlgebraError::UnknownFamily(_))));
        assert!(matches!(build_catalog("D"), Err(AlgebraError::UnknownFamily(_))));
        assert!(matches!(build_catalog("D2"), Err(AlgebraError::RankOutOfRange { .. })));
        assert!(matches!(build_catalog("HA1"), Err(AlgebraError::RankOutOfRange { .. })));
        assert!(matches!(build_catalog("E9"), Err(AlgebraError::RankOutOfRange { .. })));
        for name in CATALOG_EXAMPLES {
            let d = build_catalog(name).unwrap();
            assert_eq!(&d.name(), name);
            // round trip through the validator
            GeneralizedCartanMatrix::with_labels(d.gcm.labels().to_vec(), d.gcm.entries().to_vec()).unwrap();
        }
    }

    #[test]
    fn ha2_shape() {
        let ha2 = build_catalog("HA2").unwrap().gcm;
        assert_eq!(ha2.labels(), &["-1", "0", "1", "2"]);
        assert_eq!(
            ha2.entries(),
            &[vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, -1], vec![0, -1, -1, 2]]
        );
        assert_eq!(simply_laced_type(&ha2.delete_node("2").unwrap()), Some(FiniteType::A(3)));
        assert_eq!(simply_laced_type(&ha2.delete_edge("0", "2").unwrap()), Some(FiniteType::A(4)));
        assert_eq!(simply_laced_type(&ha2.delete_edge("1", "2").unwrap()), Some(FiniteType::D(4)));
    }

    #[test]
    fn ha3_deletions() {
        let ha3 = build_catalog("HA3").unwrap().gcm;
        assert_eq!(ha3.rank(), 5);
        assert_eq!(simply_laced_type(&ha3.delete_node("1").unwrap()), Some(FiniteType::A(4)));
        assert_eq!(simply_laced_type(&ha3.delete_node("2").unwrap()), Some(FiniteType::D(4)));
        assert_eq!(simply_laced_type(&ha3.delete_edge("0", "1").unwrap()), Some(FiniteType::A(5)));
        assert_eq!(simply_laced_type(&ha3.delete_edge("1", "2").unwrap()), Some(FiniteType::D(5)));
        let affine = ha3.delete_node("-1").unwrap();
        assert_eq!(affine.entries(), build_catalog("AffA3").unwrap().gcm.entries());
    }

    #[test]
    fn ha_minus_overextension_is_affine() {
        for r in 2..=6 {
            let ha = build_catalog(&format!("HA{r}")).unwrap().gcm;
            let aff = build_catalog(&format!("AffA{r}")).unwrap().gcm;
            assert_eq!(ha.delete_node("-1").unwrap(), aff);
            assert_eq!(simply_laced_type(&ha.delete_node("1").unwrap()), Some(FiniteType::A(r + 1)));
        }
    }

    #[test]
    fn subdiagram_catalog_ha2() {
        let names: HashSet<String> = finite_subdiagrams(&build_catalog("HA2").unwrap().gcm)
            .into_iter()
            .map(|s| s.finite_type.catalog_name())
            .collect();
        assert_eq!(names, ["A3", "A4", "D4"].iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn ade_recognition() {
        for name in ["A1", "A4", "D4", "D5", "E6", "E7", "E8"] {
            let d = build_catalog(name).unwrap();
            assert_eq!(simply_laced_type(&d.gcm).unwrap().catalog_name(), name);
        }
        assert_eq!(simply_laced_type(&build_catalog("B3").unwrap().gcm), None);
        assert_eq!(simply_laced_type(&build_catalog("AffA2").unwrap().gcm), None);
    }

    #[test]
    fn inverse_of_ha3_matches_reference() {
        let gcm = build_catalog("HA3").unwrap().gcm;
        let inv = invert_cartan(&gcm).unwrap();
        let displayed = [
            [q(0, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1)],
            [q(1, 1), q(2, 1), q(2, 1), q(2, 1), q(2, 1)],
            [q(1, 1), q(2, 1), q(5, 4), q(3, 2), q(7, 4)],
            [q(1, 1), q(2, 1), q(3, 2), q(1, 1), q(3, 2)],
            [q(1, 1), q(2, 1), q(7, 4), q(3, 2), q(5, 4)],
        ];
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(inv.get(i, j), &-displayed[i][j].clone(), "entry ({i},{j})");
            }
        }
        assert!(inv.mul_integer(gcm.entries()).is_identity());
    }

    #[test]
    fn inverse_small_cases() {
        let a1 = build_catalog("A1").unwrap().gcm;
        assert_eq!(invert_cartan(&a1).unwrap().rows(), &[vec![q(1, 2)]]);
        let aff = build_catalog("AffA1").unwrap().gcm;
        assert_eq!(invert_cartan(&aff), Err(AlgebraError::SingularMatrix));
        assert_eq!(invert_cartan(&build_catalog("AffA3").unwrap().gcm), Err(AlgebraError::SingularMatrix));
    }

    #[test]
    fn inverse_times_matrix_is_identity_for_catalog() {
        for name in CATALOG_EXAMPLES {
            let d = build_catalog(name).unwrap();
            if d.family == Family::AffineA {
                continue;
            }
            let inv = invert_cartan(&d.gcm).unwrap();
            assert!(inv.mul_integer(d.gcm.entries()).is_identity(), "{name}");
            for row in inv.rows() {
                for v in row {
                    assert!(v.denom() > &BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn weights() {
        let ha3 = fundamental_weights(&build_catalog("HA3").unwrap().gcm).unwrap();
        assert_eq!(ha3[0], vec![q(0, 1), q(-1, 1), q(-1, 1), q(-1, 1), q(-1, 1)]);
        let a1 = fundamental_weights(&build_catalog("A1").unwrap().gcm).unwrap();
        assert_eq!(a1, vec![vec![q(1, 2)]]);
        let a2 = fundamental_weights(&build_catalog("A2").unwrap().gcm).unwrap();
        assert_eq!(a2[0], vec![q(2, 3), q(1, 3)]);
    }

    #[test]
    fn weights_pair_to_kronecker_delta_for_non_symmetric() {
        for name in ["B3", "C3", "G2", "F4"] {
            let gcm = build_catalog(name).unwrap().gcm;
            let w = fundamental_weights(&gcm).unwrap();
            let n = gcm.rank();
            for mu in 0..n {
                for kappa in 0..n {
                    // <lambda_mu, alpha_kappa^vee> = sum_nu c_nu A[kappa][nu]
                    let pairing = (0..n).fold(BigRational::zero(), |acc, nu| {
                        acc + &w[mu][nu] * BigRational::from_integer(gcm.entry(kappa, nu).into())
                    });
                    let expected = if mu == kappa { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(pairing, expected, "{name} mu={mu} kappa={kappa}");
                }
            }
        }
    }

    #[test]
    fn degree_tables() {
        let deg = |n: &str| invariant_degrees(&build_catalog(n).unwrap()).unwrap();
        assert_eq!(deg("D5"), vec![2, 4, 6, 8, 5]);
        assert_eq!(deg("D4"), vec![2, 4, 6, 4]);
        assert_eq!(deg("A1"), vec![2]);
        assert_eq!(deg("A3"), vec![2, 3, 4]);
        assert_eq!(deg("E8").iter().product::<u32>(), 696_729_600);
        assert!(matches!(
            invariant_degrees(&build_catalog("HA2").unwrap()),
            Err(AlgebraError::NotFinite(_))
        ));
    }

    #[test]
    fn gcm_file_round_trip() {
        let gcm = build_catalog("HA2").unwrap().gcm;
        let json = serde_json::to_string(&GcmFile::from(&gcm)).unwrap();
        let back: GcmFile = serde_json::from_str(&json).unwrap();
        assert_eq!(GeneralizedCartanMatrix::try_from(back).unwrap(), gcm);
    }

    #[test]
    fn fingerprint_distinguishes_labels() {
        let a = build_catalog("A2").unwrap().gcm;
        let b = GeneralizedCartanMatrix::with_labels(vec!["x".into(), "y".into()], a.entries().to_vec()).unwrap();
        assert_ne!(a.fingerprint(), b.fingerprint());
        assert_eq!(a.fingerprint(), build_catalog("A2").unwrap().gcm.fingerprint());
    }
}
