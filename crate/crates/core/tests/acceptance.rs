//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use tableau_corners::alternative::{enumerate_at_oracle, enumerate_atb_oracle, AtVariant};
use tableau_corners::bijections::*;
use tableau_corners::linked::{enumerate_lp, enumerate_lpb};
use tableau_corners::serial::Object;
use tableau_corners::tableaux::{enumerate_sym_tlt_oracle, enumerate_tlt_oracle};
use tableau_corners::verify::{FamilyId, Multiplier, Source, Verifier, Weighting};
use tableau_corners::{Cell, FerrersDiagram, OracleBounds, Poly, Shape, Step};

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn identities(v: &Verifier, ids: &[&str], sizes: impl Iterator<Item = usize> + Clone) -> Check {
    for id in ids {
        for n in sizes.clone() {
            for r in v.verify::<i64>(id, n).map_err(|e| format!("{id} n={n}: {e}"))? {
                ensure(r.equal, || {
                    format!("{id} n={n} i={:?}: lhs {} != rhs {}", r.i, r.lhs, r.rhs)
                })?;
            }
        }
    }
    Ok(())
}

fn poly(terms: &[(i64, u32, u32)]) -> Poly {
    let mut p = Poly::zero();
    for &(c, da, db) in terms {
        p.add_term(&c, da, db).unwrap();
    }
    p
}

fn agg(v: &Verifier, f: FamilyId, n: usize, m: Multiplier) -> Result<Poly, String> {
    v.aggregate::<i64>(f, n, m, Weighting::Family).map_err(|e| e.to_string())
}

fn criterion_1(v: &Verifier) -> Check {
    identities(v, &["eqT"], 1..=8)?;
    for n in 1..=5 {
        ensure(v.generators_agree(FamilyId::Tlt, n).map_err(|e| e.to_string())?, || {
            format!("tlt oracle and transport differ at n={n}")
        })?;
    }
    ensure(v.generate(FamilyId::Tlt, 8).unwrap().len() == 40320, || "tlt(8) count".into())
}

fn criterion_2(v: &Verifier) -> Check {
    identities(v, &["eqsT"], 1..=6)
}

fn criterion_3(v: &Verifier) -> Check {
    identities(v, &["conj1"], 3..=8)?;
    let n3 = agg(v, FamilyId::Tlt, 3, Multiplier::Noc)?;
    ensure(n3 == poly(&[(1, 1, 1)]), || format!("n=3 gives {n3}"))?;
    let at_one = agg(v, FamilyId::Tlt, 4, Multiplier::Noc)?.eval(&1, &1).unwrap();
    ensure(at_one == 8, || format!("n=4 at a=b=1 gives {at_one}"))
}

fn criterion_4(v: &Verifier) -> Check {
    identities(v, &["conj2"], 3..=6)?;
    let n3 = agg(v, FamilyId::TltSym, 3, Multiplier::Noc)?;
    ensure(n3 == poly(&[(12, 0, 2), (28, 0, 1), (12, 0, 0)]), || format!("n=3 gives {}", n3.display_x()))?;
    ensure(n3.eval(&1, &1).unwrap() == 52, || "sum at x=1".into())?;
    ensure(v.generate(FamilyId::TltSym, 3).unwrap().len() == 48, || "48 tableaux of size 7".into())
}

fn criterion_5(v: &Verifier) -> Check {
    identities(v, &["eq23", "eqLn"], 1..=8)?;
    identities(v, &["eq26", "eqLB"], 1..=6)?;
    identities(v, &["eq2.1", "eq2.2"], 1..=8)?;
    identities(v, &["eq2.4-sym", "eq2.4", "eq2.5-sym", "eq2.5"], 1..=6)
}

fn criterion_6(v: &Verifier) -> Check {
    identities(v, &["lem-M", "lem-N", "lem-L", "lem-weightp", "tau8"], 3..=8)
}

fn criterion_7(v: &Verifier) -> Check {
    identities(
        v,
        &["lem-X", "lem-Y", "lem-LB", "lem-X1", "lem-X2", "lem-X3", "lem-Y1", "lem-Y2", "beq1"],
        2..=6,
    )?;
    identities(v, &["lem-Z", "lem-L1", "Bn1"], 1..=6)
}

fn criterion_8(v: &Verifier) -> Check {
    identities(v, &["oc-count", "oc-poly"], 1..=8)?;
    identities(v, &["oc-sym-count", "oc-sym-poly"], 1..=6)
}

fn distinct<T: Ord + Clone>(items: &[T]) -> bool {
    items.iter().cloned().collect::<BTreeSet<_>>().len() == items.len()
}

fn criterion_9(v: &Verifier) -> Check {
    let b = OracleBounds::default();
    let err = |e: BijectionError| e.to_string();
    for n in 1..=b.tlt {
        let tlt = enumerate_tlt_oracle(n, &b).unwrap();
        let (mut alphas, mut betas) = (Vec::new(), Vec::new());
        for t in &tlt {
            let a = alpha(t);
            check_alpha(t, &a).map_err(err)?;
            ensure(&alpha_inv(&a) == t, || format!("alpha round trip at n={n}"))?;
            let s = beta(t);
            check_beta(t, &s).map_err(err)?;
            ensure(&beta_inv(&s).map_err(err)? == t, || format!("beta round trip at n={n}"))?;
            alphas.push(a);
            betas.push(s);
        }
        ensure(distinct(&alphas) && distinct(&betas), || format!("collision at n={n}"))?;
    }
    for n in 0..b.at {
        for t in enumerate_at_oracle(n, AtVariant::Plain, &b).unwrap() {
            ensure(alpha(&alpha_inv(&t)) == t, || format!("alpha_inv round trip at size {n}"))?;
        }
    }
    for size in (1..=b.tlt_sym).step_by(2) {
        let mut images: Vec<_> = enumerate_sym_tlt_oracle(size, &b).unwrap().iter().map(alpha).collect();
        images.sort();
        let target = enumerate_at_oracle(size - 1, AtVariant::Symmetric, &b).unwrap();
        ensure(images == target, || format!("alpha on symmetric size {size}"))?;
    }
    for n in 1..=b.at_star {
        let stars = enumerate_at_oracle(n, AtVariant::Star, &b).unwrap();
        let mut parts = Vec::new();
        for t in &stars {
            ensure(&beta(&beta_inv(t).map_err(err)?) == t, || format!("beta_inv round trip at n={n}"))?;
            let tau = phi(t).map_err(err)?;
            check_phi(t, &tau).map_err(err)?;
            ensure(&psi(&tau) == t, || format!("phi round trip at n={n}"))?;
            parts.push(tau);
        }
        ensure(distinct(&parts), || format!("phi collision at n={n}"))?;
        for tau in enumerate_lp(n) {
            ensure(phi(&psi(&tau)).map_err(err)? == tau, || format!("psi round trip at n={n}"))?;
        }
    }
    for size in (0..=b.at_sym).step_by(2) {
        let mut images = Vec::new();
        for t in enumerate_at_oracle(size, AtVariant::Symmetric, &b).unwrap() {
            let g = gamma(&t).map_err(err)?;
            check_gamma(&t, &g).map_err(err)?;
            ensure(gamma_inv(&g) == t, || format!("gamma round trip at size {size}"))?;
            images.push(g);
        }
        ensure(distinct(&images), || format!("gamma collision at size {size}"))?;
    }
    for n in 1..=b.at_b {
        let mut parts = Vec::new();
        for t in enumerate_atb_oracle(n, &b).unwrap() {
            ensure(gamma(&gamma_inv(&t)).map_err(err)? == t, || format!("gamma_inv round trip at n={n}"))?;
            let tau = phi_b(&t);
            check_phi_b(&t, &tau).map_err(err)?;
            ensure(psi_b(&tau).map_err(err)? == t, || format!("phi_b round trip at n={n}"))?;
            parts.push(tau);
        }
        ensure(distinct(&parts), || format!("phi_b collision at n={n}"))?;
        for tau in enumerate_lpb(n) {
            ensure(phi_b(&psi_b(&tau).map_err(err)?) == tau, || format!("psi_b round trip at n={n}"))?;
        }
    }
    let agree = |f: FamilyId, n: usize| v.generators_agree(f, n).map_err(|e| e.to_string());
    for n in 1..=5 {
        for f in [FamilyId::Tlt, FamilyId::AtStar, FamilyId::AtB, FamilyId::AtSym, FamilyId::At] {
            ensure(agree(f, n)?, || format!("{f} oracle and transport differ at n={n}"))?;
        }
    }
    for n in 0..=4 {
        ensure(agree(FamilyId::TltSym, n)?, || format!("tlt-sym oracle and transport differ at n={n}"))?;
    }
    for n in 2..=5 {
        for type_b in [false, true] {
            for tab in v.corner_correspondence(n, type_b).map_err(|e| e.to_string())? {
                ensure(tab.is_exact(), || format!("corner correspondence n={n} {tab:?}"))?;
            }
        }
    }
    Ok(())
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")).trim_end().to_string()
}

fn load(name: &str) -> Object {
    Object::from_json_str(&golden(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn criterion_10() -> Check {
    let Object::Tlt(fig2) = load("fig2_tree_like.json") else { return Err("fig2 kind".into()) };
    let Object::AtB(fig6) = load("fig6_type_b.json") else { return Err("fig6 kind".into()) };
    let Object::LpB(fig7) = load("fig7_type_b_partition.json") else { return Err("fig7 kind".into()) };
    let same = |got: Object, name: &str| {
        let s = got.to_json_string();
        ensure(s == golden(name), || format!("{name}: got {s}"))
    };
    same(Object::Tlt(fig2.clone()), "fig2_tree_like.json")?;
    same(Object::At(alpha(&fig2)), "fig3_alternative.json")?;
    let star = beta(&fig2);
    same(Object::At(star.clone()), "fig5_star.json")?;
    same(Object::Lp(phi(&star).map_err(|e| e.to_string())?), "fig5_partition.json")?;
    same(Object::LpB(phi_b(&fig6)), "fig7_type_b_partition.json")?;
    same(Object::AtB(psi_b(&fig7).map_err(|e| e.to_string())?), "fig6_type_b.json")
}

fn words(len: usize) -> impl Iterator<Item = FerrersDiagram> {
    (0u32..1 << len).map(move |mask| {
        FerrersDiagram::from_steps(
            (0..len).map(|k| if mask >> k & 1 == 1 { Step::W } else { Step::S }).collect(),
        )
    })
}

fn criterion_11(v: &Verifier) -> Check {
    let factorial = |n: usize| (1..=n).product::<usize>();
    for n in 1..=8 {
        for f in [FamilyId::Tlt, FamilyId::AtStar, FamilyId::Lp] {
            let got = v.generate(f, n).unwrap().len();
            ensure(got == factorial(n), || format!("{f}({n}) has {got} objects"))?;
        }
    }
    for n in 1..=6 {
        for f in [FamilyId::TltSym, FamilyId::AtSym, FamilyId::AtB, FamilyId::LpB] {
            let got = v.generate(f, n).unwrap().len();
            ensure(got == factorial(n) << n, || format!("{f}({n}) has {got} objects"))?;
        }
    }
    for len in 0..=12 {
        for d in words(len) {
            let last_in_both: Vec<Cell> = d
                .cells()
                .into_iter()
                .filter(|c| {
                    let right = d.cols().into_iter().any(|j| j < c.col && d.contains(Cell::new(c.row, j)));
                    let below = d.rows().into_iter().any(|i| i > c.row && d.contains(Cell::new(i, c.col)));
                    !right && !below
                })
                .collect();
            let mut corners = d.corners();
            corners.sort();
            let mut expected = last_in_both;
            expected.sort();
            ensure(corners == expected, || format!("corner set of {}", d.word()))?;
            ensure(d.transpose().transpose() == d, || format!("transpose of {}", d.word()))?;
            for c in d.cells() {
                let t = d.transpose_cell(c);
                ensure(d.transpose().contains(t) && d.transpose().transpose_cell(t) == c, || {
                    format!("cell transpose in {}", d.word())
                })?;
            }
        }
    }
    let b = OracleBounds::default();
    for n in 1..=b.at_star {
        for t in enumerate_at_oracle(n, AtVariant::Star, &b).unwrap() {
            let arcs = phi(&t).map_err(|e| e.to_string())?.arcs();
            let targets: BTreeSet<i32> = arcs.iter().map(|a| a.1).collect();
            ensure(targets.len() == arcs.len(), || "phi image has in-degree above one".into())?;
        }
    }
    for n in 1..=b.at_b {
        for t in enumerate_atb_oracle(n, &b).unwrap() {
            let arcs = phi_b(&t).arcs();
            let targets: BTreeSet<i32> = arcs.iter().map(|a| a.1).collect();
            ensure(targets.len() == arcs.len(), || "phi_b image has in-degree above one".into())?;
        }
    }
    for (f, n, m) in [
        (FamilyId::Tlt, 7, Multiplier::Noc),
        (FamilyId::TltSym, 5, Multiplier::Noc),
        (FamilyId::LpB, 5, Multiplier::Unit),
    ] {
        let reference = v.aggregate_chunked::<i64>(f, n, m, Weighting::Family, usize::MAX).unwrap();
        for chunk in [1, 7, 64, 1000] {
            let got = v.aggregate_chunked::<i64>(f, n, m, Weighting::Family, chunk).unwrap();
            ensure(got == reference, || format!("{f}({n}) depends on partition size {chunk}"))?;
        }
        let fresh = Verifier::new(Source::Transport).with_chunk_size(13);
        let again = fresh.aggregate::<i64>(f, n, m, Weighting::Family).unwrap();
        ensure(again == reference, || format!("{f}({n}) differs across runs"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let v = Verifier::new(Source::Transport);
    let criteria: Vec<Criterion> = vec![
        ("tree-like tableaux total (a+b)_{n-1}, n = 1..8", Box::new(|| criterion_1(&v))),
        ("symmetric tree-like tableaux total 2^n (x+1)_{n-1}, n = 1..6", Box::new(|| criterion_2(&v))),
        ("non-occupied corners in tree-like tableaux, n = 3..8", Box::new(|| criterion_3(&v))),
        ("non-occupied corners in symmetric tree-like tableaux, n = 3..6", Box::new(|| criterion_4(&v))),
        ("star, linked-partition and type-B totals", Box::new(|| criterion_5(&v))),
        ("linked partition subset sums M, N, L, n = 3..8", Box::new(|| criterion_6(&v))),
        ("type-B linked partition subset sums, n = 1..6", Box::new(|| criterion_7(&v))),
        ("occupied corners: n!, 2^n n! and weighted totals", Box::new(|| criterion_8(&v))),
        ("bijection round trips and statistic contracts", Box::new(|| criterion_9(&v))),
        ("golden encodings of the figure examples", Box::new(criterion_10)),
        ("generator counts, corners, transpose, in-degree, determinism", Box::new(|| criterion_11(&v))),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
