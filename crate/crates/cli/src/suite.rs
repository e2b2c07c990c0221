//! Randomized checks over generated instances.

use globcat::fincat::{check_adjoint_equivalence, check_category_laws, check_functor_laws, functor_props};
use globcat::fusion::{equivalence_fusion, fuse_to_span, projection_u, projection_v, span_to_equivalence};
use globcat::gen::{self, CospanMode, Family};
use globcat::limits::check_transfer;
use globcat::span::{compose_spans, identity_span, is_span_equivalence, swap_span};
use globcat::{PropertyReport, Witness};

pub fn run(seed: u64, cases: usize, limit: usize) -> bool {
    let modes = [CospanMode::CoverLike, CospanMode::Random, CospanMode::Iso];
    let mut transfer = PropertyReport::new(format!("transfer along pullbacks ({cases} cospans)"));
    let mut relation = PropertyReport::new("span equivalence relation");
    let mut fusion = PropertyReport::new(format!("fusion laws ({cases} equivalences)"));
    let mut spans = 0;
    for i in 0..cases {
        let mut r = gen::rng(seed.wrapping_add(i as u64));
        let (f, g) = gen::random_cospan(&mut r, i % 4, 5, modes[i % modes.len()]);
        match check_transfer(&f, &g) {
            Ok(t) => transfer
                .witnesses
                .extend(t.to_report().witnesses.into_iter().map(|w| tag(w, i))),
            Err(e) => transfer.push(Witness::new(e.to_string(), [format!("case {i}")])),
        }

        let (s1, s2) = gen::random_span_chain(&mut r, i % 4, 3);
        if is_span_equivalence(&s1).verdict() && is_span_equivalence(&s2).verdict() {
            spans += 1;
            let checks = [
                (
                    "reflexivity",
                    is_span_equivalence(&identity_span(s1.left().codomain().clone())).verdict(),
                ),
                ("symmetry", is_span_equivalence(&swap_span(&s1)).verdict()),
                (
                    "transitivity",
                    compose_spans(&s1, &s2).is_ok_and(|s| is_span_equivalence(&s).verdict()),
                ),
            ];
            for (law, ok) in checks {
                if !ok {
                    relation.push(Witness::new(law, [format!("case {i}")]));
                }
            }
        }

        let e = gen::random_equivalence(&mut r, &Family::ALL);
        let fz = equivalence_fusion(&e);
        let mut ok = check_category_laws(fz.category()).verdict();
        for leg in [projection_u(&fz), projection_v(&fz)] {
            ok &= check_functor_laws(&leg).verdict() && functor_props(&leg).verdict();
        }
        ok &= span_to_equivalence(&fuse_to_span(&e).1)
            .is_ok_and(|back| check_adjoint_equivalence(back.s(), back.t(), back.eta(), back.eps()).verdict());
        if !ok {
            fusion.push(Witness::new("fusion", [format!("case {i}")]));
        }
    }
    relation.name = format!("span equivalence relation ({spans} span equivalences)");
    let all = PropertyReport::all(format!("suite (seed {seed})"), vec![transfer, relation, fusion]);
    print!("{}", all.render(limit));
    all.verdict()
}

fn tag(mut w: Witness, case: usize) -> Witness {
    w.items.insert(0, format!("case {case}"));
    w
}
