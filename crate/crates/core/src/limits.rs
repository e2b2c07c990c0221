//! Pullbacks of globular sets along a cospan, their universal property, and
//! the transfer of surjectivity, fullness and faithfulness along them.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::globular::{compose_maps, is_faithful_on, is_full_on, is_surjective_on, same_set, GlobularMap, GlobularSet};
use crate::report::{PropertyReport, Witness};

/// The pullback `P` of `f: X -> S` and `g: Y -> S` with its projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PullbackResult {
    pub apex: Arc<GlobularSet>,
    /// The projection `i: P -> X`.
    pub left: GlobularMap,
    /// The projection `j: P -> Y`.
    pub right: GlobularMap,
    pub f: GlobularMap,
    pub g: GlobularMap,
    /// `pairs[k][p]` is the `(x, y)` index pair of apex cell `p`.
    pairs: Vec<Vec<(usize, usize)>>,
}

impl PullbackResult {
    pub fn pair(&self, k: usize, cell: usize) -> (usize, usize) {
        self.pairs[k][cell]
    }

    pub fn cell_of(&self, k: usize, pair: (usize, usize)) -> Option<usize> {
        self.pairs[k].binary_search(&pair).ok()
    }
}

/// Apex cell name for the pair `(x, y)`.
pub fn pair_name(x: &str, y: &str) -> String {
    format!("({x},{y})")
}

/// Builds `P_k = {(x, y) | f(x) = g(y)}` with coordinatewise boundaries.
/// Apex cells are ordered lexicographically by (X order, Y order).
pub fn pullback_globular(f: &GlobularMap, g: &GlobularMap) -> Result<PullbackResult> {
    if !same_set(f.codomain(), g.codomain()) {
        return Err(Error::Mismatch("f and g do not share a codomain".into()));
    }
    let (x, y) = (f.domain(), g.domain());
    let n = x.dim();
    let mut pairs: Vec<Vec<(usize, usize)>> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut by_image: HashMap<usize, Vec<usize>> = HashMap::new();
        for b in 0..y.len(k) {
            by_image.entry(g.apply(k, b)).or_default().push(b);
        }
        let mut level = Vec::new();
        for a in 0..x.len(k) {
            if let Some(bs) = by_image.get(&f.apply(k, a)) {
                level.extend(bs.iter().map(|&b| (a, b)));
            }
        }
        pairs.push(level);
    }

    let cells = (0..=n)
        .map(|k| {
            pairs[k]
                .iter()
                .map(|&(a, b)| pair_name(x.name(k, a), y.name(k, b)))
                .collect()
        })
        .collect();
    let lookup = |k: usize, p: (usize, usize)| pairs[k].binary_search(&p).expect("boundaries of matching pairs match");
    let mut src = Vec::with_capacity(n);
    let mut tgt = Vec::with_capacity(n);
    for (k, level) in pairs.iter().enumerate().skip(1) {
        src.push(
            level
                .iter()
                .map(|&(a, b)| lookup(k - 1, (x.src(k, a), y.src(k, b))))
                .collect(),
        );
        tgt.push(
            level
                .iter()
                .map(|&(a, b)| lookup(k - 1, (x.tgt(k, a), y.tgt(k, b))))
                .collect(),
        );
    }
    let apex = Arc::new(GlobularSet::from_indices(n, cells, src, tgt)?);
    let left = GlobularMap::from_indices(
        apex.clone(),
        x.clone(),
        pairs.iter().map(|l| l.iter().map(|p| p.0).collect()).collect(),
    )?;
    let right = GlobularMap::from_indices(
        apex.clone(),
        y.clone(),
        pairs.iter().map(|l| l.iter().map(|p| p.1).collect()).collect(),
    )?;
    Ok(PullbackResult {
        apex,
        left,
        right,
        f: f.clone(),
        g: g.clone(),
        pairs,
    })
}

/// The map `z -> (p(z), q(z))` from the apex of a commuting cone into `P`.
pub fn mediating_map(pb: &PullbackResult, p: &GlobularMap, q: &GlobularMap) -> Result<GlobularMap> {
    if !same_set(p.domain(), q.domain()) {
        return Err(Error::Mismatch("cone legs have different domains".into()));
    }
    if !same_set(p.codomain(), pb.f.domain()) || !same_set(q.codomain(), pb.g.domain()) {
        return Err(Error::Mismatch("cone legs do not land in the cospan's feet".into()));
    }
    let z = p.domain();
    let fp = compose_maps(&pb.f, p)?;
    let gq = compose_maps(&pb.g, q)?;
    for k in 0..=z.dim() {
        if let Some(c) = (0..z.len(k)).find(|&c| fp.apply(k, c) != gq.apply(k, c)) {
            return Err(Error::Precondition(format!(
                "cone does not commute at {k}-cell `{}`",
                z.name(k, c)
            )));
        }
    }
    let components = (0..=z.dim())
        .map(|k| {
            (0..z.len(k))
                .map(|c| {
                    pb.cell_of(k, (p.apply(k, c), q.apply(k, c)))
                        .expect("commuting cone lands in the apex")
                })
                .collect()
        })
        .collect();
    GlobularMap::from_indices(z.clone(), pb.apex.clone(), components)
}

/// One implication "f has property ⇒ j has property".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferCheck {
    pub property: String,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl TransferCheck {
    pub fn violated(&self) -> bool {
        self.hypothesis && !self.conclusion
    }
}

#[derive(Debug, Clone)]
pub struct TransferReport {
    pub pullback: PullbackResult,
    pub checks: Vec<TransferCheck>,
}

impl TransferReport {
    pub fn holds(&self) -> bool {
        !self.checks.iter().any(TransferCheck::violated)
    }

    pub fn to_report(&self) -> PropertyReport {
        PropertyReport::new("property transfer to the projection j").with_witnesses(
            self.checks
                .iter()
                .filter(|c| c.violated())
                .map(|c| Witness::new("hypothesis holds for f but not for j", [c.property.as_str()])),
        )
    }
}

/// Pulls `g` back along `f` and checks, for surjectivity on 0-cells and for
/// fullness and faithfulness in each dimension, that whatever holds for `f`
/// holds for the projection `j`.
pub fn check_transfer(f: &GlobularMap, g: &GlobularMap) -> Result<TransferReport> {
    let pb = pullback_globular(f, g)?;
    let j = &pb.right;
    let mut checks = vec![TransferCheck {
        property: "surjective on 0-cells".into(),
        hypothesis: is_surjective_on(f, 0)?.verdict(),
        conclusion: is_surjective_on(j, 0)?.verdict(),
    }];
    for k in 1..=f.dim() {
        checks.push(TransferCheck {
            property: format!("full on {k}-cells"),
            hypothesis: is_full_on(f, k)?.verdict(),
            conclusion: is_full_on(j, k)?.verdict(),
        });
        checks.push(TransferCheck {
            property: format!("faithful on {k}-cells"),
            hypothesis: is_faithful_on(f, k)?.verdict(),
            conclusion: is_faithful_on(j, k)?.verdict(),
        });
    }
    Ok(TransferReport { pullback: pb, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::globular::{map_from_name_fn, validate_globular, RawGlobularSet};

    fn set(raw: RawGlobularSet) -> Arc<GlobularSet> {
        Arc::new(validate_globular(&raw).unwrap())
    }

    #[test]
    fn pullback_of_two_points_over_one() {
        let s = set(RawGlobularSet::new(1).cells(0, ["s"]).cell(1, "e", "s", "s"));
        let x = set(RawGlobularSet::new(1).cells(0, ["x1", "x2"]));
        let y = set(RawGlobularSet::new(1).cells(0, ["y"]));
        let f = map_from_name_fn(x, s.clone(), |_, _| "s".into()).unwrap();
        let g = map_from_name_fn(y, s, |_, _| "s".into()).unwrap();
        let pb = pullback_globular(&f, &g).unwrap();
        assert_eq!(pb.apex.cells(0), ["(x1,y)", "(x2,y)"]);
        assert!(pb.apex.cells(1).is_empty());
        assert_eq!(
            compose_maps(&f, &pb.left).unwrap().components(),
            compose_maps(&g, &pb.right).unwrap().components()
        );
    }

    #[test]
    fn pullback_along_identity_is_the_other_leg() {
        let x = set(RawGlobularSet::new(1)
            .cells(0, ["a", "b"])
            .cell(1, "f", "a", "b")
            .cell(1, "g", "a", "b"));
        let s = set(RawGlobularSet::new(1).cells(0, ["p", "q"]).cell(1, "α", "p", "q"));
        let f = map_from_name_fn(x.clone(), s.clone(), |k, c| match (k, c) {
            (0, "a") => "p".into(),
            (0, _) => "q".into(),
            _ => "α".into(),
        })
        .unwrap();
        let pb = pullback_globular(&f, &GlobularMap::identity(s)).unwrap();
        assert!(pb.left.is_isomorphism());
        assert_eq!(pb.right.components(), compose_maps(&f, &pb.left).unwrap().components());
    }

    #[test]
    fn pullback_over_terminal_is_product() {
        let x = set(RawGlobularSet::new(1).cells(0, ["a", "b"]).cell(1, "f", "a", "b"));
        let y = set(RawGlobularSet::new(1)
            .cells(0, ["c"])
            .cell(1, "e", "c", "c")
            .cell(1, "d", "c", "c"));
        let f = GlobularMap::to_terminal(x.clone());
        let g = GlobularMap::to_terminal(y.clone());
        // both terminals are equal structures
        let pb = pullback_globular(&f, &g).unwrap();
        for k in 0..=1 {
            assert_eq!(pb.apex.len(k), x.len(k) * y.len(k));
        }
    }

    #[test]
    fn cospan_mismatch() {
        let x = set(RawGlobularSet::new(0).cells(0, ["a"]));
        let f = GlobularMap::identity(x.clone());
        let g = GlobularMap::to_terminal(set(RawGlobularSet::new(0).cells(0, ["b", "c"])));
        assert!(matches!(pullback_globular(&f, &g), Err(Error::Mismatch(_))));
    }

    #[test]
    fn mediating_map_of_the_pullback_itself_is_identity() {
        let x = set(RawGlobularSet::new(1).cells(0, ["a", "b"]).cell(1, "f", "a", "b"));
        let f = GlobularMap::to_terminal(x.clone());
        let g = GlobularMap::to_terminal(x);
        let pb = pullback_globular(&f, &g).unwrap();
        let h = mediating_map(&pb, &pb.left, &pb.right).unwrap();
        assert_eq!(h, GlobularMap::identity(pb.apex.clone()));
    }

    #[test]
    fn mediating_map_from_empty_and_non_commuting_cone() {
        let s = set(RawGlobularSet::new(0).cells(0, ["s", "t"]));
        let x = set(RawGlobularSet::new(0).cells(0, ["x"]));
        let y = set(RawGlobularSet::new(0).cells(0, ["y"]));
        let f = map_from_name_fn(x.clone(), s.clone(), |_, _| "s".into()).unwrap();
        let g = map_from_name_fn(y.clone(), s, |_, _| "t".into()).unwrap();
        let pb = pullback_globular(&f, &g).unwrap();
        assert_eq!(pb.apex.len(0), 0);

        let empty = Arc::new(GlobularSet::empty(0));
        let p = GlobularMap::from_indices(empty.clone(), x.clone(), vec![vec![]]).unwrap();
        let q = GlobularMap::from_indices(empty.clone(), y.clone(), vec![vec![]]).unwrap();
        let h = mediating_map(&pb, &p, &q).unwrap();
        assert_eq!(h.domain().len(0), 0);

        let z = set(RawGlobularSet::new(0).cells(0, ["z"]));
        let p = GlobularMap::from_indices(z.clone(), x, vec![vec![0]]).unwrap();
        let q = GlobularMap::from_indices(z, y, vec![vec![0]]).unwrap();
        match mediating_map(&pb, &p, &q) {
            Err(Error::Precondition(msg)) => assert!(msg.contains("`z`")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn transfer_along_isomorphism_and_collapse() {
        let x = set(RawGlobularSet::new(1).cells(0, ["p", "q"]).cell(1, "α", "p", "q"));
        let s = set(RawGlobularSet::new(1).cells(0, ["c"]).cell(1, "e", "c", "c"));
        let y = set(RawGlobularSet::new(1).cells(0, ["y1", "y2"]).cell(1, "k", "y1", "y2"));
        let g = map_from_name_fn(y, s.clone(), |k, _| if k == 0 { "c".into() } else { "e".into() }).unwrap();
        let id = GlobularMap::identity(s.clone());
        let report = check_transfer(&id, &g).unwrap();
        assert!(report.checks.iter().all(|c| c.hypothesis && c.conclusion));

        let collapse = map_from_name_fn(x, s, |k, _| if k == 0 { "c".into() } else { "e".into() }).unwrap();
        let report = check_transfer(&collapse, &g).unwrap();
        let full = report.checks.iter().find(|c| c.property == "full on 1-cells").unwrap();
        assert!(!full.hypothesis);
        assert!(report.holds());
        assert!(report.to_report().verdict());
    }
}
