use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::names::check_names;
use crate::report::Witness;

/// A finite n-truncated globular set.
///
/// Cells of dimension `k` are stored in a fixed order; `src(k, i)` and
/// `tgt(k, i)` give the index of the boundary cell in dimension `k - 1`.
/// The cell order never changes after construction, and every choice made
/// downstream (witness order, apex order, preimage choice) follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobularSet {
    dim: usize,
    cells: Vec<Vec<String>>,
    // index 0 is unused so that src[k] belongs to dimension k
    src: Vec<Vec<usize>>,
    tgt: Vec<Vec<usize>>,
    index: Vec<HashMap<String, usize>>,
}

/// Name-based candidate data for a globular set, as read from a file.
///
/// `src[k - 1]` and `tgt[k - 1]` hold `(cell, boundary)` pairs for the
/// `k`-cells.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawGlobularSet {
    pub dim: usize,
    pub cells: Vec<Vec<String>>,
    pub src: Vec<Vec<(String, String)>>,
    pub tgt: Vec<Vec<(String, String)>>,
}

impl RawGlobularSet {
    pub fn new(dim: usize) -> Self {
        RawGlobularSet {
            dim,
            cells: vec![Vec::new(); dim + 1],
            src: vec![Vec::new(); dim],
            tgt: vec![Vec::new(); dim],
        }
    }

    /// Appends `names` to the `k`-cells.
    pub fn cells<S: Into<String>>(mut self, k: usize, names: impl IntoIterator<Item = S>) -> Self {
        self.cells[k].extend(names.into_iter().map(Into::into));
        self
    }

    /// Declares a `k`-cell `name: source -> target` (k >= 1).
    pub fn cell(mut self, k: usize, name: &str, source: &str, target: &str) -> Self {
        self.cells[k].push(name.to_string());
        self.src[k - 1].push((name.to_string(), source.to_string()));
        self.tgt[k - 1].push((name.to_string(), target.to_string()));
        self
    }
}

impl GlobularSet {
    /// Builds a globular set from index tables. `src` and `tgt` must have one
    /// entry per dimension `1..=dim`.
    pub fn from_indices(
        dim: usize,
        cells: Vec<Vec<String>>,
        src: Vec<Vec<usize>>,
        tgt: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let mut issues = Vec::new();
        if cells.len() != dim + 1 {
            issues.push(format!("expected {} cell dimensions, got {}", dim + 1, cells.len()));
        }
        if src.len() != dim || tgt.len() != dim {
            issues.push(format!("expected {dim} source and target tables"));
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }
        for (k, names) in cells.iter().enumerate() {
            check_names(&format!("{k}-cell"), names, &mut issues);
        }
        for k in 1..=dim {
            for (which, table) in [("source", &src[k - 1]), ("target", &tgt[k - 1])] {
                if table.len() != cells[k].len() {
                    issues.push(format!("{which} table of dimension {k} is not total"));
                    continue;
                }
                for (i, &b) in table.iter().enumerate() {
                    if b >= cells[k - 1].len() {
                        issues.push(format!("{which} of {k}-cell `{}` is out of range", cells[k][i]));
                    }
                }
            }
        }
        if !issues.is_empty() {
            return Err(Error::Structural(issues));
        }

        let index = cells
            .iter()
            .map(|names| names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect())
            .collect();
        let mut s = vec![Vec::new()];
        s.extend(src);
        let mut t = vec![Vec::new()];
        t.extend(tgt);
        let set = GlobularSet {
            dim,
            cells,
            src: s,
            tgt: t,
            index,
        };
        let violations = set.globularity_violations();
        if violations.is_empty() {
            Ok(set)
        } else {
            Err(Error::Globularity(violations))
        }
    }

    /// The set with no cells in any dimension.
    pub fn empty(dim: usize) -> Self {
        Self::from_indices(
            dim,
            vec![Vec::new(); dim + 1],
            vec![Vec::new(); dim],
            vec![Vec::new(); dim],
        )
        .expect("empty globular set is valid")
    }

    /// One cell per dimension, named `*`.
    pub fn terminal(dim: usize) -> Self {
        Self::from_indices(
            dim,
            vec![vec!["*".to_string()]; dim + 1],
            vec![vec![0]; dim],
            vec![vec![0]; dim],
        )
        .expect("terminal globular set is valid")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cells(&self, k: usize) -> &[String] {
        &self.cells[k]
    }

    pub fn len(&self, k: usize) -> usize {
        self.cells[k].len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(Vec::is_empty)
    }

    pub fn name(&self, k: usize, i: usize) -> &str {
        &self.cells[k][i]
    }

    pub fn index_of(&self, k: usize, name: &str) -> Option<usize> {
        self.index.get(k)?.get(name).copied()
    }

    /// Source of the `k`-cell `i` (k >= 1).
    pub fn src(&self, k: usize, i: usize) -> usize {
        self.src[k][i]
    }

    pub fn tgt(&self, k: usize, i: usize) -> usize {
        self.tgt[k][i]
    }

    pub fn src_table(&self, k: usize) -> &[usize] {
        &self.src[k]
    }

    pub fn tgt_table(&self, k: usize) -> &[usize] {
        &self.tgt[k]
    }

    /// The `k`-cells from `x` to `y`, in cell order.
    pub fn hom_set(&self, k: usize, x: usize, y: usize) -> Result<Vec<usize>> {
        if k == 0 || k > self.dim {
            return Err(Error::Domain(format!(
                "hom-sets exist for k in 1..={}, got {k}",
                self.dim
            )));
        }
        let bound = self.len(k - 1);
        if x >= bound || y >= bound {
            return Err(Error::Domain(format!("not a {}-cell index", k - 1)));
        }
        Ok((0..self.len(k))
            .filter(|&a| self.src[k][a] == x && self.tgt[k][a] == y)
            .collect())
    }

    pub fn hom_set_by_name(&self, k: usize, x: &str, y: &str) -> Result<Vec<String>> {
        if k == 0 || k > self.dim {
            return Err(Error::Domain(format!(
                "hom-sets exist for k in 1..={}, got {k}",
                self.dim
            )));
        }
        let lookup = |n: &str| {
            self.index_of(k - 1, n)
                .ok_or_else(|| Error::Domain(format!("`{n}` is not a {}-cell", k - 1)))
        };
        let (xi, yi) = (lookup(x)?, lookup(y)?);
        Ok(self
            .hom_set(k, xi, yi)?
            .into_iter()
            .map(|a| self.cells[k][a].clone())
            .collect())
    }

    /// All hom-sets of dimension `k`, keyed by `(source, target)`.
    pub fn hom_index(&self, k: usize) -> HashMap<(usize, usize), Vec<usize>> {
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for a in 0..self.len(k) {
            homs.entry((self.src[k][a], self.tgt[k][a])).or_default().push(a);
        }
        homs
    }

    fn globularity_violations(&self) -> Vec<Witness> {
        let mut out = Vec::new();
        for k in 2..=self.dim {
            for x in 0..self.len(k) {
                let (s, t) = (self.src[k][x], self.tgt[k][x]);
                if self.src[k - 1][s] != self.src[k - 1][t] {
                    out.push(Witness::new(
                        format!("dimension {k}: src(src) != src(tgt)"),
                        [self.cells[k][x].clone()],
                    ));
                }
                if self.tgt[k - 1][s] != self.tgt[k - 1][t] {
                    out.push(Witness::new(
                        format!("dimension {k}: tgt(src) != tgt(tgt)"),
                        [self.cells[k][x].clone()],
                    ));
                }
            }
        }
        out
    }
}

/// Resolves names and checks the globularity identities.
pub fn validate_globular(raw: &RawGlobularSet) -> Result<GlobularSet> {
    let dim = raw.dim;
    let mut issues = Vec::new();
    if raw.cells.len() != dim + 1 || raw.src.len() != dim || raw.tgt.len() != dim {
        return Err(Error::Structural(vec![format!(
            "tables are not indexed by dimensions 0..={dim}"
        )]));
    }
    for (k, names) in raw.cells.iter().enumerate() {
        check_names(&format!("{k}-cell"), names, &mut issues);
    }
    if !issues.is_empty() {
        return Err(Error::Structural(issues));
    }
    let index: Vec<HashMap<&str, usize>> = raw
        .cells
        .iter()
        .map(|names| names.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect())
        .collect();

    let mut resolve = |k: usize, which: &str, pairs: &[(String, String)]| -> Vec<usize> {
        let mut table = vec![None; raw.cells[k].len()];
        for (cell, boundary) in pairs {
            let Some(&c) = index[k].get(cell.as_str()) else {
                issues.push(format!("{which} given for undeclared {k}-cell `{cell}`"));
                continue;
            };
            let Some(&b) = index[k - 1].get(boundary.as_str()) else {
                issues.push(format!(
                    "{which} of `{cell}` refers to undeclared {}-cell `{boundary}`",
                    k - 1
                ));
                continue;
            };
            match table[c] {
                Some(prev) if prev != b => issues.push(format!("conflicting {which} entries for `{cell}`")),
                _ => table[c] = Some(b),
            }
        }
        table
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                b.unwrap_or_else(|| {
                    issues.push(format!("{k}-cell `{}` has no {which}", raw.cells[k][i]));
                    0
                })
            })
            .collect()
    };
    let mut src = Vec::with_capacity(dim);
    let mut tgt = Vec::with_capacity(dim);
    for k in 1..=dim {
        src.push(resolve(k, "source", &raw.src[k - 1]));
        tgt.push(resolve(k, "target", &raw.tgt[k - 1]));
    }
    if !issues.is_empty() {
        return Err(Error::Structural(issues));
    }
    GlobularSet::from_indices(dim, raw.cells.clone(), src, tgt)
}
