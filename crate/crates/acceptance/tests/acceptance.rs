use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Duration;

use monideal::augment::{augment_down, augment_up, bounds, down_corners};
use monideal::generic::{
    is_order_generic, ordered_bell, p_c_union, stirling2_row, type3_cardinality, type3_generators, type3_sets,
};
use monideal::lattice::{is_antichain, pt, Antichain, LatticePoint};
use monideal::oracle::{brute_socle_down, brute_socle_up, default_box, enumerate_zero_dim_ideals};
use monideal::reconstruct::{
    pseudo_partition_2, retrieve_generators, socle_of_generators, type2_generators, zero_dim_ideal_from_socle,
};
use monideal::sample::{random_antichain, random_bounds, random_incomparable_pair, random_order_generic};
use monideal::{DownSet, UpSet};
use monideal_cli::commands;
use monideal_validation::{ensure, Check, Ledger};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ac(points: &[&[i64]]) -> Antichain {
    Antichain::new(points.iter().map(|p| pt(p)).collect()).unwrap()
}

fn e(err: monideal::Error) -> String {
    err.to_string()
}

fn worked_example() -> Check {
    let q = ac(&[&[2, 2, 3], &[3, 3, 2]]);
    let b = bounds(&q).map_err(e)?;
    let corners = down_corners(&b.lower, &b.upper).map_err(e)?;
    ensure(corners == ac(&[&[4, 4, 1], &[4, 1, 4], &[1, 4, 4]]), || format!("B_*(Q) = {corners}"))?;

    let i1 = DownSet::from_antichain(augment_down(&q, None, None).map_err(e)?).socle().map_err(e)?;
    let want1 = ac(&[&[2, 2, 4], &[2, 3, 3], &[2, 4, 2], &[3, 2, 3], &[4, 2, 2]]);
    ensure(i1 == want1, || format!("S_u(D(Q_*)) = {i1}"))?;
    let back = UpSet::from_antichain(i1).socle().map_err(e)?;
    ensure(back == q, || format!("socle of I1 = {back}"))?;

    let (a, bb) = (pt(&[0, 0, 1]), pt(&[5, 6, 7]));
    let i2 = DownSet::from_antichain(augment_down(&q, Some(&a), Some(&bb)).map_err(e)?).socle().map_err(e)?;
    let want2 = ac(&[&[1, 1, 4], &[1, 3, 3], &[1, 4, 2], &[3, 1, 3], &[4, 1, 2]]);
    ensure(i2 == want2, || format!("variant gives {i2}"))?;
    let back2 = UpSet::from_antichain(i2).socle().map_err(e)?;
    ensure(back2 == q, || format!("socle of I2 = {back2}"))?;
    Ok("B_*(Q), I1, I2 and both socles exact".into())
}

fn round_trip(seed: u64, from_socle: bool) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..500 {
        let d = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=6);
        let g = random_antichain(&mut rng, d, k, 1, 7).map_err(e)?;
        let (a, b) = random_bounds(&mut rng, &g, 3).map_err(e)?;
        let back = if from_socle {
            let gens = DownSet::from_antichain(augment_down(&g, Some(&a), Some(&b)).map_err(e)?).socle().map_err(e)?;
            UpSet::from_antichain(gens).socle().map_err(e)?
        } else {
            let s = UpSet::from_antichain(augment_up(&g, Some(&a), Some(&b)).map_err(e)?).socle().map_err(e)?;
            DownSet::from_antichain(s).socle().map_err(e)?
        };
        ensure(back == g, || format!("trial {trial}: {g} with a={a} b={b} came back as {back}"))?;
    }
    Ok("500/500 identities".into())
}

fn uniqueness() -> Check {
    let mut by_socle: HashMap<Antichain, Antichain> = HashMap::new();
    let mut n = 0;
    for gens in enumerate_zero_dim_ideals(2, 3).map_err(e)? {
        n += 1;
        let socle = UpSet::from_antichain(gens.clone()).socle().map_err(e)?;
        if let Some(prev) = by_socle.insert(socle.clone(), gens.clone()) {
            return Err(format!("socle {socle} has two preimages {prev} and {gens}"));
        }
        let rebuilt = zero_dim_ideal_from_socle(&socle).map_err(e)?;
        ensure(rebuilt == gens, || format!("socle {socle} rebuilt as {rebuilt}, enumerated {gens}"))?;
    }
    Ok(format!("{n} ideals, {} distinct socles, each with one preimage", by_socle.len()))
}

fn type2(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..500 {
        let d = rng.gen_range(2..=6);
        let (p, q) = random_incomparable_pair(&mut rng, d, 7).map_err(e)?;
        let closed = type2_generators(&p, &q).map_err(e)?;
        let socle = Antichain::new(vec![p.clone(), q.clone()]).map_err(e)?;
        let rebuilt = zero_dim_ideal_from_socle(&socle).map_err(e)?;
        ensure(closed == rebuilt, || format!("trial {trial}: {p},{q}: {closed} vs {rebuilt}"))?;
        let split = pseudo_partition_2(&p, &q).map_err(e)?;
        let expected = split.below.len() * split.above.len() + d;
        ensure(closed.len() == expected, || format!("trial {trial}: |{closed}| != {expected}"))?;
    }
    Ok("500/500 equal, |output| = ac + d in every trial".into())
}

/// Searches small non-order-generic antichains for one whose union of
/// `P_C` sets contains a comparable pair.
fn non_generic_witness() -> Result<Antichain, String> {
    let fixed = ac(&[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]);
    let mut searched = 0usize;
    let mut candidates = vec![fixed];
    for (d, hi) in [(2usize, 4i64), (3, 3), (4, 1)] {
        let side = (hi + 1) as usize;
        let total = side.pow(d as u32);
        let pts: Vec<LatticePoint> = (0..total)
            .map(|n| LatticePoint::new((0..d).map(|j| ((n / side.pow(j as u32)) % side) as i64).collect()).unwrap())
            .collect();
        for i in 0..total {
            for j in i + 1..total {
                if let Ok(q) = Antichain::new(vec![pts[i].clone(), pts[j].clone()]) {
                    candidates.push(q);
                }
                for k in j + 1..total {
                    if let Ok(q) = Antichain::new(vec![pts[i].clone(), pts[j].clone(), pts[k].clone()]) {
                        candidates.push(q);
                    }
                }
            }
        }
    }
    for q in candidates.into_iter().filter(|q| !is_order_generic(q)) {
        searched += 1;
        let union = p_c_union(&q).map_err(e)?;
        if !is_antichain(&union.points).map_err(e)? {
            return Ok(q);
        }
    }
    Err(format!(
        "no NON-order-generic witness: the union of P_C is an antichain for all {searched} non-order-generic inputs \
         searched, including the cyclic triple {{(0,1,2),(1,2,0),(2,0,1)}}"
    ))
}

fn type3(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..200 {
        let d = rng.gen_range(6..=10);
        let q = random_order_generic(&mut rng, 3, d, 9).map_err(e)?;
        let gens = type3_generators(&q).map_err(e)?;
        let union = p_c_union(&q).map_err(e)?;
        ensure(gens.points() == union.points.as_slice(), || format!("trial {trial}: union differs on {q}"))?;
        let rebuilt = zero_dim_ideal_from_socle(&q).map_err(e)?;
        ensure(gens == rebuilt, || format!("trial {trial}: reconstruction differs on {q}"))?;
        ensure(is_antichain(&union.points).map_err(e)?, || format!("trial {trial}: not an antichain"))?;
        let formula = type3_cardinality(&type3_sets(&q).map_err(e)?.sizes()).map_err(e)?;
        ensure(formula == gens.len() as u64, || format!("trial {trial}: formula {formula} vs {}", gens.len()))?;
    }
    let generic = "200/200 order-generic triples agree, closed-form counts exact";
    match non_generic_witness() {
        Ok(q) => Ok(format!("{generic}; non-order-generic witness {q}")),
        Err(why) => Err(format!("{generic}; {why}")),
    }
}

fn bell() -> Check {
    let got: Vec<u64> = (0..=5).map(commands::bell).collect::<Result<_, _>>().map_err(|x| x.to_string())?;
    ensure(got == [1, 1, 3, 13, 75, 541], || format!("bell 0..5 = {got:?}"))?;
    let mut rec = vec![1u64];
    for n in 1..=10u64 {
        let mut binom = 1u64;
        let mut sum = 0;
        for j in 1..=n {
            binom = binom * (n + 1 - j) / j;
            sum += binom * rec[(n - j) as usize];
        }
        rec.push(sum);
    }
    for (k, &r) in rec.iter().enumerate() {
        let stirling: u64 = stirling2_row(k)
            .map_err(e)?
            .iter()
            .enumerate()
            .map(|(j, s)| s * (1..=j as u64).product::<u64>())
            .sum();
        let direct = ordered_bell(k).map_err(e)?;
        ensure(stirling == r && direct == r, || format!("k={k}: stirling {stirling}, recurrence {r}"))?;
    }
    Ok("1,1,3,13,75,541; Stirling sum = recurrence for k <= 10".into())
}

fn oracle(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..1000 {
        let d = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=5);
        let g = random_antichain(&mut rng, d, k, 0, 6).map_err(e)?;
        let up = augment_up(&g, None, None).map_err(e)?;
        let down = augment_down(&g, None, None).map_err(e)?;
        let sd = UpSet::from_antichain(up.clone()).socle().map_err(e)?;
        let su = DownSet::from_antichain(down.clone()).socle().map_err(e)?;
        ensure(sd == brute_socle_down(&up, &default_box(&up).map_err(e)?).map_err(e)?, || {
            format!("trial {trial}: socle_down differs on {up}")
        })?;
        ensure(su == brute_socle_up(&down, &default_box(&down).map_err(e)?).map_err(e)?, || {
            format!("trial {trial}: socle_up differs on {down}")
        })?;
        let bx = default_box(&g).map_err(e)?;
        ensure(socle_of_generators(&g).map_err(e)? == brute_socle_down(&g, &bx).map_err(e)?, || {
            format!("trial {trial}: corner engine differs on {g}")
        })?;
        ensure(retrieve_generators(&g).map_err(e)? == brute_socle_up(&g, &bx).map_err(e)?, || {
            format!("trial {trial}: dual corner engine differs on {g}")
        })?;
    }
    Ok("1000/1000 agree".into())
}

fn laws(seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..300 {
        let d = rng.gen_range(1..=4);
        let k = rng.gen_range(1..=6);
        let g = random_antichain(&mut rng, d, k, 1, 7).map_err(e)?;
        let c = LatticePoint::new((0..d).map(|_| rng.gen_range(-6..=6)).collect()).map_err(e)?;
        let r = LatticePoint::new((0..d).map(|_| rng.gen_range(0..=20)).collect()).map_err(e)?;
        let u = UpSet::from_antichain(augment_up(&g, None, None).map_err(e)?);
        let s = u.socle().map_err(e)?;
        let shifted = UpSet::from_antichain(u.generators().translate(&c).map_err(e)?).socle().map_err(e)?;
        ensure(shifted == s.translate(&c).map_err(e)?, || format!("trial {trial}: translation by {c} on {g}"))?;
        let rotated = DownSet::from_antichain(u.generators().rotate(&r).map_err(e)?).socle().map_err(e)?;
        ensure(rotated == s.rotate(&r).map_err(e)?, || format!("trial {trial}: rotation by {r} on {g}"))?;
    }
    Ok("300/300 translation and rotation identities".into())
}

fn main() -> ExitCode {
    let mut ledger = Ledger::default();
    let s = Duration::from_secs;
    ledger.run(1, "worked example", s(1), worked_example);
    ledger.run(2, "generator round trip", s(30), || round_trip(2, false));
    ledger.run(3, "socle round trip", s(30), || round_trip(3, true));
    ledger.run(4, "zero-dimensional uniqueness", s(10), uniqueness);
    ledger.run(5, "type 2 closed form", s(60), || type2(5));
    ledger.run(6, "type 3 and P_C union", s(60), || type3(6));
    ledger.run(7, "ordered Bell numbers", s(5), bell);
    ledger.run(8, "oracle equivalence", s(60), || oracle(8));
    ledger.run(9, "translation and rotation", s(30), || laws(9));
    if ledger.failed().is_empty() {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {:?}", ledger.failed());
        ExitCode::FAILURE
    }
}
