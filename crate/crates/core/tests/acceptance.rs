//! Acceptance sweep. Runs without the libtest harness so that every
//! criterion prints its own PASS/FAIL line even when all of them pass.

mod common;

use std::collections::HashMap;
use std::time::Instant;

use num::{BigInt, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use semigroup_cm::exact::Rational;
use semigroup_cm::lazard::{adjoin_closure, build_direct_system, embed_stream, extend_mixed_traced, is_supported, resolve, FinSeq};
use semigroup_cm::monomial::{betti_table, cd, frobenius_power, pd, polarize, Monomial, MonomialIdeal, Ring};
use semigroup_cm::plane::{
    bounding_halflines, classify, classify_agreement, is_zero_divisor_witness, model_membership, model_regular_pair,
    param_pair_reject, ModelSemigroup, ModelTag, QuasiRationalCone,
};
use semigroup_cm::regularity::{cd_subset_check, is_parameter_sequence_poly, pd_criterion, CdSubsetOutcome, MonomialSequence};
use semigroup_cm::semigroup::box_points;

use common::*;

type Outcome = Result<String, String>;

fn betti_invariance(ideals: &[MonomialIdeal]) -> Outcome {
    let start = Instant::now();
    for i in ideals {
        let base = betti_table(i).map_err(|e| e.to_string())?;
        for t in [2, 3] {
            let f = frobenius_power(i, t).map_err(|e| e.to_string())?;
            if betti_table(&f).map_err(|e| e.to_string())? != base {
                return Err(format!("Frobenius power {t} changes the table of {:?}", i.gens()));
            }
        }
        if betti_table(&polarize(i).ideal).map_err(|e| e.to_string())? != base {
            return Err(format!("polarization changes the table of {:?}", i.gens()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 120.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("{} ideals, t = 2, 3 and polarization, {secs:.1}s", ideals.len()))
}

struct SequenceSweep {
    total: usize,
    coprimality_exceptions: Vec<Vec<Monomial>>,
    forward_exceptions: Vec<Vec<Monomial>>,
    discrepancies: usize,
    xy_yz: Option<semigroup_cm::regularity::RegularityReport>,
    parameter: usize,
    parameter_counterexamples: Vec<Vec<Monomial>>,
}

fn sweep_sequences(pool: &[Monomial]) -> Result<SequenceSweep, String> {
    let ring = Ring::standard(4);
    let xy_yz = vec![ring.parse_monomial("x*y").unwrap(), ring.parse_monomial("y*z").unwrap()];
    let mut s = SequenceSweep {
        total: 0,
        coprimality_exceptions: Vec::new(),
        forward_exceptions: Vec::new(),
        discrepancies: 0,
        xy_yz: None,
        parameter: 0,
        parameter_counterexamples: Vec::new(),
    };
    for items in sequences_up_to_3(pool) {
        s.total += 1;
        let seq = MonomialSequence::new(items.clone()).map_err(|e| e.to_string())?;
        let r = pd_criterion(&seq).map_err(|e| e.to_string())?;
        if r.oracle_regular != r.star_condition {
            s.coprimality_exceptions.push(items.clone());
        }
        if r.oracle_regular && !r.pd_criterion {
            s.forward_exceptions.push(items.clone());
        }
        if r.discrepancy {
            s.discrepancies += 1;
        }
        if is_parameter_sequence_poly(&seq) {
            s.parameter += 1;
            if !r.oracle_regular {
                s.parameter_counterexamples.push(items.clone());
            }
        }
        if items == xy_yz {
            s.xy_yz = Some(r);
        }
    }
    Ok(s)
}

fn coprimality_law(s: &SequenceSweep) -> Outcome {
    match s.coprimality_exceptions.first() {
        None => Ok(format!("{} sequences, zero exceptions", s.total)),
        Some(e) => Err(format!("{} exceptions, first {e:?}", s.coprimality_exceptions.len())),
    }
}

fn forward_direction(s: &SequenceSweep) -> Outcome {
    if let Some(e) = s.forward_exceptions.first() {
        return Err(format!("{} regular sequences fail the pd test, first {e:?}", s.forward_exceptions.len()));
    }
    let r = s.xy_yz.as_ref().ok_or("(xy, yz) missing from the sweep")?;
    if !(r.discrepancy && r.pd_criterion && !r.oracle_regular) {
        return Err(format!("(xy, yz) is not a discrepancy: {r:?}"));
    }
    let ring = Ring::standard(4);
    let (j, w) = r.witness.clone().ok_or("(xy, yz) report has no witness")?;
    let xy = ring.parse_ideal("x*y").unwrap();
    let yz = ring.parse_monomial("y*z").unwrap();
    let x = ring.parse_monomial("x").unwrap();
    if j != 2 || w != x || !xy.contains(&w.mul(&yz)) || xy.contains(&w) {
        return Err(format!("witness ({j}, {w:?}) does not verify"));
    }
    Ok(format!(
        "zero exceptions; {} discrepancies including (xy, yz) with x*yz in (xy), x not in (xy)",
        s.discrepancies
    ))
}

fn main_theorem(s: &SequenceSweep) -> Outcome {
    match s.parameter_counterexamples.first() {
        None => Ok(format!("{} parameter sequences, all regular", s.parameter)),
        Some(e) => Err(format!("{} counterexamples, first {e:?}", s.parameter_counterexamples.len())),
    }
}

fn cd_vs_pd(ideals: &[MonomialIdeal]) -> Outcome {
    let mut squarefree = 0;
    for i in ideals {
        let (c, p) = (cd(i).map_err(|e| e.to_string())?, pd(i).map_err(|e| e.to_string())?);
        if c > p {
            return Err(format!("cd {c} > pd {p} for {:?}", i.gens()));
        }
        if i.is_squarefree() {
            squarefree += 1;
            if c != p {
                return Err(format!("squarefree {:?} has cd {c} != pd {p}", i.gens()));
            }
        }
    }
    let strict = Ring::standard(4).parse_ideal("x^2, x*y").unwrap();
    let (c, p) = (cd(&strict).unwrap(), pd(&strict).unwrap());
    if (c, p) != (1, 2) {
        return Err(format!("(x^2, xy) gives cd {c}, pd {p}"));
    }
    Ok(format!("{} ideals, equality on {squarefree} squarefree ones, (x^2, xy): cd 1 < pd 2", ideals.len()))
}

fn cd_subsets(pool: &[Monomial]) -> Outcome {
    let (mut applicable, mut total) = (0, 0);
    let n = pool.len();
    let mut sets: Vec<Vec<Monomial>> = Vec::new();
    for a in 0..n {
        sets.push(vec![pool[a].clone()]);
        for b in a + 1..n {
            sets.push(vec![pool[a].clone(), pool[b].clone()]);
            for c in b + 1..n {
                sets.push(vec![pool[a].clone(), pool[b].clone(), pool[c].clone()]);
            }
        }
    }
    for items in sets {
        total += 1;
        let seq = MonomialSequence::new(items.clone()).map_err(|e| e.to_string())?;
        match cd_subset_check(&seq).map_err(|e| e.to_string())? {
            CdSubsetOutcome::Inapplicable { .. } => {}
            CdSubsetOutcome::Passed => applicable += 1,
            CdSubsetOutcome::Failed { subset, cd } => {
                return Err(format!("{items:?}: subset {subset:?} has cd {cd}"));
            }
        }
    }
    Ok(format!("{total} sequences, {applicable} with full cd equal to length, all subsets pass"))
}

fn lazard_constructions() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut counts = [0usize; 3];
    let mut routes: HashMap<String, usize> = HashMap::new();
    while counts.iter().any(|&c| c < 100) {
        let window = rng.gen_range(1..=6);
        let support = random_support(&mut rng, window);
        let op = counts.iter().position(|&c| c < 100).unwrap();
        match op {
            0 => {
                let k = rng.gen_range(1..=3);
                let betas: Vec<FinSeq> = (0..k).map(|_| random_sequence(&mut rng, window, &support, false)).collect();
                let alpha = random_sequence(&mut rng, window, &support, false);
                if !independent(&betas) {
                    continue;
                }
                let f = resolve(&betas, &alpha, &support).map_err(|e| format!("resolve {betas:?} {alpha}: {e}"))?;
                let mut inputs = betas.clone();
                inputs.push(alpha.clone());
                check_family(&f, &inputs, true).map_err(|e| format!("resolve {betas:?} {alpha}: {e}"))?;
            }
            1 => {
                let k = rng.gen_range(1..=4);
                let betas: Vec<FinSeq> = (0..k).map(|_| random_sequence(&mut rng, window, &support, false)).collect();
                let f = adjoin_closure(&betas, &support).map_err(|e| format!("adjoin {betas:?}: {e}"))?;
                check_family(&f, &betas, true).map_err(|e| format!("adjoin {betas:?}: {e}"))?;
            }
            _ => {
                let k = rng.gen_range(1..=3);
                let betas: Vec<FinSeq> = (0..k).map(|_| random_sequence(&mut rng, window, &support, true)).collect();
                // half the time alpha is a signed combination of the betas
                let alpha = if rng.gen_bool(0.5) {
                    betas.iter().fold(FinSeq::zero(), |acc, b| acc.add(&b.scale(&Rational::from_integer(rng.gen_range(-3i64..=3).into()))))
                } else {
                    random_sequence(&mut rng, window, &support, true)
                };
                if !independent(&betas) || !alpha.is_almost_nonnegative() || !is_supported(&alpha, &support) {
                    continue;
                }
                let (f, route) =
                    extend_mixed_traced(&betas, &alpha, &support).map_err(|e| format!("extend {betas:?} {alpha}: {e}"))?;
                let name = format!("{route:?}");
                *routes.entry(name.split([' ', '{']).next().unwrap_or("").to_string()).or_default() += 1;
                let mut inputs = betas.clone();
                inputs.push(alpha.clone());
                check_family(&f, &inputs, false).map_err(|e| format!("extend {betas:?} {alpha}: {e}"))?;
            }
        }
        counts[op] += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("took {secs:.1}s"));
    }
    let mut routes: Vec<_> = routes.into_iter().collect();
    routes.sort();
    Ok(format!("100 each of resolve, adjoin_closure, extend_mixed (routes {routes:?}), zero failures, {secs:.1}s"))
}

fn direct_system() -> Outcome {
    let stream: Vec<Vec<i64>> = box_points(2, 8)
        .into_iter()
        .filter(|p| model_membership(ModelTag::H, [p[0], p[1]]).unwrap() && p != &vec![0, 0])
        .take(8)
        .collect();
    let emb = embed_stream(&stream, 8).map_err(|e| e.to_string())?;
    let images: Vec<FinSeq> = stream.iter().map(|h| emb.image(h)).collect();
    let ds = build_direct_system(&images, &emb.support(), 8).map_err(|e| e.to_string())?;
    if ds.families.len() != 8 {
        return Err(format!("{} stages", ds.families.len()));
    }
    for n in 0..8 {
        for (j, v) in images[..=n].iter().enumerate() {
            let c = ds.stage_coordinates(n, v).ok_or(format!("point {j} has no integer coordinates at stage {n}"))?;
            if c.iter().any(|x| x.is_negative()) {
                return Err(format!("point {j} has negative coordinates at stage {n}"));
            }
            for m in n..8 {
                let direct = ds.stage_coordinates(m, v).ok_or(format!("point {j} lost at stage {m}"))?;
                let composed = ds.compose(n, m).mul_vec(&c);
                if composed != direct {
                    return Err(format!("point {j}: stage {n} to {m} composes to {composed:?}, direct {direct:?}"));
                }
            }
        }
    }
    for (n, t) in ds.transitions.iter().enumerate() {
        for i in 0..t.rows() {
            if t.row(i).iter().any(|x| x < &BigInt::from(0)) {
                return Err(format!("transition {n} has a negative entry"));
            }
        }
    }
    Ok(format!("stream {stream:?}, 8 stages, compose exact for all stage pairs"))
}

fn canonical_cones() -> Vec<(&'static str, ModelTag)> {
    vec![
        ("y >= 0 & x > 0", ModelTag::H),
        ("x > 0 & y > 0", ModelTag::HPrime),
        ("y >= 0 & y > 0", ModelTag::H1),
        ("y > 0 & y > 0", ModelTag::H2),
    ]
}

fn classification() -> Outcome {
    for (s, tag) in canonical_cones() {
        let c = QuasiRationalCone::parse(s).map_err(|e| e.to_string())?;
        let m = classify(&c).map_err(|e| e.to_string())?;
        if m.tag != tag {
            return Err(format!("{s} classified as {}", m.tag));
        }
        let v = classify_agreement(&c, &m, 20).map_err(|e| e.to_string())?;
        if !v.value {
            return Err(format!("{s}: membership disagrees at {:?}", v.witness));
        }
    }
    let q = QuasiRationalCone::parse("x >= 0 & y >= 0").unwrap();
    match classify(&q).map(|m| m.tag) {
        Ok(ModelTag::FinitelyGenerated) => Ok("H, H', H1, H2 with agreement on [-20, 20]^2; quadrant is finitely generated".into()),
        other => Err(format!("closed quadrant gave {other:?}")),
    }
}

fn certificates() -> Outcome {
    let mut summary = Vec::new();
    for tag in [ModelTag::H, ModelTag::HPrime, ModelTag::H1, ModelTag::H2] {
        let m = ModelSemigroup::new(tag).unwrap();
        let pts: Vec<[i64; 2]> =
            box_points(2, 6).into_iter().map(|p| [p[0], p[1]]).filter(|&p| p != [0, 0] && m.contains(p)).collect();
        let mut powers: HashMap<[i64; 2], usize> = HashMap::new();
        for &f in &pts {
            for &g in &pts {
                let cert = param_pair_reject(&m, f, g, 8).map_err(|e| format!("{tag} {f:?} {g:?}: {e}"))?;
                if !cert.verify(&m, f, g) || cert.h_power.max(cert.f_power).max(cert.g_power) > 8 {
                    return Err(format!("{tag} {f:?} {g:?}: certificate {cert:?} does not re-verify"));
                }
                *powers.entry(cert.h).or_default() += 1;
                match model_regular_pair(&m, f, g, 16).map_err(|e| e.to_string())? {
                    (false, Some(c)) if m.contains(c) && is_zero_divisor_witness(&m, f, g, c) => {}
                    other => return Err(format!("{tag} {f:?} {g:?}: regular pair check gave {other:?}")),
                }
            }
        }
        let mut hs: Vec<_> = powers.into_iter().collect();
        hs.sort();
        summary.push(format!("{tag}: {} pairs {hs:?}", pts.len() * pts.len()));
    }
    Ok(format!("zero unverified; {}", summary.join("; ")))
}

fn halflines() -> Outcome {
    let mut counts = Vec::new();
    for (s, _) in canonical_cones() {
        let c = QuasiRationalCone::parse(s).unwrap();
        let b = bounding_halflines(&c, 20, 20).map_err(|e| format!("{s}: {e}"))?;
        if let Some((k, v)) = b.facts.iter().enumerate().find(|(_, v)| !v.value) {
            return Err(format!("{s}: fact {} fails at {:?}", k + 1, v.witness));
        }
        if b.meet_count > 1 {
            return Err(format!("{s}: meets {} rays", b.meet_count));
        }
        counts.push(b.meet_count);
    }
    Ok(format!("facts 1-3 hold on all four cones, boundary meets {counts:?}"))
}

fn main() {
    let total = Instant::now();
    let pool = nonunit_monomials();
    let ideals = antichain_ideals(&pool, 4);
    let mut failed = 0;
    let mut report = |n: usize, name: &str, started: Instant, o: Outcome| {
        let secs = started.elapsed().as_secs_f64();
        match o {
            Ok(d) => println!("criterion {n:>2} PASS  {name} [{secs:.1}s]: {d}"),
            Err(d) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name} [{secs:.1}s]: {d}");
            }
        }
    };

    let t = Instant::now();
    report(1, "betti/pd invariance", t, betti_invariance(&ideals));

    let t = Instant::now();
    let sweep = sweep_sequences(&pool);
    match &sweep {
        Ok(s) => {
            report(2, "coprimality law", t, coprimality_law(s));
            report(3, "pd criterion forward direction", t, forward_direction(s));
            report(4, "parameter sequences are regular", t, main_theorem(s));
        }
        Err(e) => {
            for (n, name) in [(2, "coprimality law"), (3, "pd criterion forward direction"), (4, "parameter sequences are regular")] {
                report(n, name, t, Err(format!("sweep aborted: {e}")));
            }
        }
    }

    let t = Instant::now();
    report(5, "cd bounded by pd", t, cd_vs_pd(&ideals));
    let t = Instant::now();
    report(6, "cd of subsets", t, cd_subsets(&pool));
    let t = Instant::now();
    report(7, "randomized family constructions", t, lazard_constructions());
    let t = Instant::now();
    report(8, "direct system over H", t, direct_system());
    let t = Instant::now();
    report(9, "plane cone classification", t, classification());
    let t = Instant::now();
    report(10, "pair certificates in model rings", t, certificates());
    let t = Instant::now();
    report(11, "bounding half-lines", t, halflines());

    println!("acceptance: {} of 11 criteria passed in {:.1}s", 11 - failed, total.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
