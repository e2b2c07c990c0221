//! Cell-wise properties of globular maps: surjective, injective, full and
//! faithful on k-cells, and the profile required of span-equivalence legs.

use super::map::fibres;
use super::GlobularMap;
use crate::error::{Error, Result};
use crate::report::{PropertyReport, Witness};

fn check_range(f: &GlobularMap, k: usize, min: usize) -> Result<()> {
    if k < min || k > f.dim() {
        Err(Error::Domain(format!("k must lie in {min}..={}, got {k}", f.dim())))
    } else {
        Ok(())
    }
}

pub fn is_surjective_on(f: &GlobularMap, k: usize) -> Result<PropertyReport> {
    check_range(f, k, 0)?;
    let y = f.codomain();
    let mut hit = vec![false; y.len(k)];
    for &c in f.component(k) {
        hit[c] = true;
    }
    Ok(PropertyReport::new(format!("surjective on {k}-cells")).with_witnesses(
        hit.iter()
            .enumerate()
            .filter(|(_, h)| !**h)
            .map(|(c, _)| Witness::new("unhit", [y.name(k, c)])),
    ))
}

pub fn is_injective_on(f: &GlobularMap, k: usize) -> Result<PropertyReport> {
    check_range(f, k, 0)?;
    let x = f.domain();
    let mut report = PropertyReport::new(format!("injective on {k}-cells"));
    let fib = fibres(f, k);
    let mut images: Vec<_> = fib.into_iter().filter(|(_, pre)| pre.len() > 1).collect();
    images.sort_by_key(|(_, pre)| pre[0]);
    for (_, pre) in images {
        for (i, &a) in pre.iter().enumerate() {
            for &b in &pre[i + 1..] {
                report.push(Witness::new("collision", [x.name(k, a), x.name(k, b)]));
            }
        }
    }
    Ok(report)
}

/// For all `x, x'` and every `β: f(x) -> f(x')`, some `α: x -> x'` maps to `β`.
pub fn is_full_on(f: &GlobularMap, k: usize) -> Result<PropertyReport> {
    check_range(f, k, 1)?;
    let (x, y) = (f.domain(), f.codomain());
    let x_homs = x.hom_index(k);
    let y_homs = y.hom_index(k);
    let mut report = PropertyReport::new(format!("full on {k}-cells"));
    let below = f.component(k - 1);
    for a in 0..x.len(k - 1) {
        for b in 0..x.len(k - 1) {
            let Some(targets) = y_homs.get(&(below[a], below[b])) else {
                continue;
            };
            let sources = x_homs.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[]);
            for &beta in targets {
                if !sources.iter().any(|&alpha| f.apply(k, alpha) == beta) {
                    report.push(Witness::new(
                        "no preimage",
                        [x.name(k - 1, a), x.name(k - 1, b), y.name(k, beta)],
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// For all `x, x'`, the restriction of `f_k` to `Hom(x, x')` is injective.
pub fn is_faithful_on(f: &GlobularMap, k: usize) -> Result<PropertyReport> {
    check_range(f, k, 1)?;
    let x = f.domain();
    let mut homs: Vec<_> = x.hom_index(k).into_values().collect();
    homs.sort_by_key(|h| h[0]);
    let mut report = PropertyReport::new(format!("faithful on {k}-cells"));
    for hom in homs {
        for (i, &a) in hom.iter().enumerate() {
            for &b in &hom[i + 1..] {
                if f.apply(k, a) == f.apply(k, b) {
                    report.push(Witness::new("identified", [x.name(k, a), x.name(k, b)]));
                }
            }
        }
    }
    Ok(report)
}

/// Surjective on 0-cells, full on every dimension `1..=n`, faithful on `n`.
/// At `n = 0` only surjectivity remains.
pub fn equivalence_profile(f: &GlobularMap) -> PropertyReport {
    let n = f.dim();
    let mut parts = vec![is_surjective_on(f, 0).expect("k = 0 is always in range")];
    for m in 1..=n {
        parts.push(is_full_on(f, m).expect("m in range"));
    }
    if n >= 1 {
        parts.push(is_faithful_on(f, n).expect("n in range"));
    }
    PropertyReport::all("equivalence profile", parts)
}
