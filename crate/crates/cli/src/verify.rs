//! The identity battery behind `invseries verify`.
//!
//! Checks are registered by name, kept sorted, and run in parallel; output is
//! assembled in registry order so identical flags give identical bytes.

use std::fmt::Write;

use invseries::check::compare;
use invseries::compose::IterableSeries;
use invseries::hankel::{continuous_layman_check, layman_check};
use invseries::invert::{
    continuous_invert, definition_check, formula_i_closed, group_law_check, homogeneity_check,
    invert_inverse, invert_transform, iterate_invert, toeplitz_recover, Sequence,
};
use invseries::partition::{partitions, r_difference_sides, r_poly, Partition};
use invseries::pq::PqContext;
use invseries::ring::{int, rat};
use invseries::{MPoly, Mismatch, Rational, Var, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::{CliError, Global, Output, VerifyArgs};

pub struct Params {
    pub order: usize,
    pub weight: u32,
    pub symbolic_cap: usize,
    pub numeric_cap: usize,
}

type Check = fn(&Params, &mut ChaCha8Rng) -> invseries::Result<Verdict>;

/// Number of registered identities; the battery refuses to run if the
/// registry and this count drift apart.
pub const REGISTERED: usize = 15;

pub const REGISTRY: [(&str, Check); REGISTERED] = [
    ("closed-form-I", closed_form_i),
    ("closed-form-P", closed_form_p),
    ("compose-difference", compose_difference),
    ("compose-extrapolation", compose_extrapolation),
    ("compose-group-law", compose_group_law),
    ("continuous-layman", continuous_layman),
    ("homogeneity", homogeneity),
    ("invert-definition", invert_definition),
    ("invert-group-law", invert_group_law),
    ("invert-iterates", invert_iterates),
    ("layman", layman),
    ("qx-invert-link", qx_invert_link),
    ("r-identity", r_identity),
    ("thmA", generating_identity),
    ("toeplitz", toeplitz),
];

fn random_ints(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Sequence<Rational> {
    Sequence::new(
        (0..len)
            .map(|_| int(rng.gen_range(-bound..=bound)))
            .collect(),
    )
    .expect("nonempty")
}

fn first_failure(results: impl IntoIterator<Item = Verdict>) -> Verdict {
    results.into_iter().collect()
}

fn closed_form_i(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    let mut a = vec![MPoly::int(1)];
    a.extend((1..=p.order).map(|j| MPoly::var(Var::indexed("a", j))));
    let cont = continuous_invert(&Sequence::new(a)?);
    Ok(first_failure((0..=p.order).map(|n| {
        compare(format!("I_{n}"), &formula_i_closed(n), &cont.entries()[n])
    })))
}

fn closed_form_p(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    PqContext::symbolic(p.order).verify_closed_form(p.order)
}

fn compose_difference(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    IterableSeries::symbolic(p.order.max(1)).difference_check(p.order.max(1))
}

fn compose_extrapolation(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    IterableSeries::symbolic(p.order.max(1)).extrapolation_check(p.order.max(1))
}

fn compose_group_law(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    // symbolic in a_i, x and y at once; order 5 is the default depth
    let n = p.order.clamp(1, 5);
    IterableSeries::symbolic(n).group_law_check(n)
}

fn continuous_layman(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    let count = p.symbolic_cap.min(p.order / 2 + 1).max(1);
    continuous_layman_check(&Sequence::symbolic("a", 2 * (count - 1)), count)
}

fn homogeneity(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    Ok(first_failure((0..=p.order).map(homogeneity_check)))
}

fn invert_definition(p: &Params, rng: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    Ok(first_failure((0..20).map(|_| {
        let a = random_ints(rng, p.order + 1, 9);
        definition_check(&a, &invert_transform(&a))
    })))
}

fn invert_group_law(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    Ok(group_law_check(p.order))
}

fn invert_iterates(p: &Params, rng: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    for _ in 0..20 {
        let a = random_ints(rng, p.order + 1, 5);
        let cont = continuous_invert(&a);
        for k in -3i64..=3 {
            let mut repeated = a.clone();
            for _ in 0..k.unsigned_abs() {
                repeated = if k > 0 {
                    invert_transform(&repeated)
                } else {
                    invert_inverse(&repeated)
                };
            }
            let closed = iterate_invert(&a, k).to_poly();
            for (n, (l, r)) in closed
                .coeffs()
                .iter()
                .zip(repeated.to_poly().coeffs())
                .enumerate()
            {
                if let Err(m) = compare(format!("I^{k} entry {n}"), l, r) {
                    return Ok(Err(m));
                }
            }
            let at = cont.at(&int(k));
            for (n, (l, r)) in at.coeffs().iter().zip(closed.coeffs()).enumerate() {
                if let Err(m) = compare(format!("I_{n}(x={k})"), l, r) {
                    return Ok(Err(m));
                }
            }
        }
    }
    Ok(Ok(()))
}

fn layman(p: &Params, rng: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    let count = 6.min(p.numeric_cap).max(1);
    for _ in 0..50 {
        let a = random_ints(rng, 2 * count - 1, 5);
        if let Err(m) = layman_check(&a, count)? {
            return Ok(Err(m));
        }
    }
    Ok(Ok(()))
}

fn qx_invert_link(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    PqContext::symbolic(p.order).verify_invert_link(p.order)
}

fn r_identity(p: &Params, _: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    for m in 0..=p.weight {
        for nu in partitions(m) {
            let (l, r) = r_difference_sides(&nu).expect("defined for every partition");
            if let Err(e) = compare(format!("R_{nu}(x+1) - R_{nu}(x)"), &l, &r) {
                return Ok(Err(e));
            }
        }
    }
    // all-ones partitions share the root k-1
    for k in 1..=p.weight {
        let mut mult = vec![0; k as usize];
        mult[0] = k;
        let nu = Partition::from_multiplicities(mult);
        let at = r_poly(&nu).eval(&[(Var::named("x"), int(i64::from(k) - 1))]);
        if let Err(e) = compare(format!("R_{nu}({})", k - 1), &at, &MPoly::int(0)) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(()))
}

fn generating_identity(p: &Params, rng: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    if let Err(m) = PqContext::symbolic(p.order).verify_generating_identity(p.order)? {
        return Ok(Err(m));
    }
    let n = p.order + 4;
    for _ in 0..20 {
        let mut s = vec![int(1)];
        s.extend((1..=n).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=4))));
        if let Err(m) = PqContext::numeric(&s, n)?.verify_generating_identity(n)? {
            return Ok(Err(m));
        }
    }
    Ok(Ok(()))
}

fn toeplitz(p: &Params, rng: &mut ChaCha8Rng) -> invseries::Result<Verdict> {
    let symbolic = Sequence::symbolic("a", p.order);
    let mut inputs = vec![symbolic];
    inputs.extend((0..10).map(|_| random_ints(rng, p.order + 1, 9).to_poly()));
    for a in inputs {
        let b = invert_transform(&a);
        for n in 0..=p.order {
            let got = toeplitz_recover(&b, n)?;
            if let Err(m) = compare(format!("a_{n}"), &got, &a.coeffs()[n]) {
                return Ok(Err(m));
            }
        }
    }
    Ok(Ok(()))
}

enum Status {
    Pass,
    Fail(Mismatch),
    Error(invseries::Error),
}

pub fn run(args: &VerifyArgs, g: &Global) -> Result<Output, CliError> {
    assert_eq!(REGISTRY.len(), REGISTERED);
    if args.only.iter().any(|n| n == "list") {
        let names: Vec<&str> = REGISTRY.iter().map(|(n, _)| *n).collect();
        return Ok(Output::ok(
            names.iter().map(|n| format!("{n}\n")).collect(),
            json!({"kind": "verify-registry", "checks": names}),
        ));
    }
    for name in &args.only {
        if !REGISTRY.iter().any(|(n, _)| n == name) {
            return Err(CliError::Usage(format!(
                "no check named `{name}`; `--only list` shows the registered checks"
            )));
        }
    }
    let params = Params {
        order: args.order,
        weight: args.weight,
        symbolic_cap: g.max_symbolic,
        numeric_cap: g.max_numeric,
    };
    let selected: Vec<(usize, &str, Check)> = REGISTRY
        .iter()
        .enumerate()
        .filter(|(_, (n, _))| args.only.is_empty() || args.only.iter().any(|o| o == n))
        .map(|(i, (n, f))| (i, *n, *f))
        .collect();
    let results: Vec<(&str, Status)> = selected
        .par_iter()
        .map(|&(index, name, check)| {
            // one stream per registered check, so results do not depend on
            // which other checks were selected or how they were scheduled
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            rng.set_stream(index as u64);
            let status = match check(&params, &mut rng) {
                Ok(Ok(())) => Status::Pass,
                Ok(Err(m)) => Status::Fail(m),
                Err(e) => Status::Error(e),
            };
            (name, status)
        })
        .collect();

    let mut pretty = format!("seed: {}\n", args.seed);
    let mut rows = Vec::new();
    let (mut failed, mut errors) = (0, 0);
    let mut errored = None;
    for (name, status) in &results {
        match status {
            Status::Pass => {
                writeln!(pretty, "PASS  {name}").unwrap();
                rows.push(json!({"name": name, "status": "pass"}));
            }
            Status::Fail(m) => {
                failed += 1;
                writeln!(pretty, "FAIL  {name}: {m}").unwrap();
                rows.push(json!({"name": name, "status": "fail", "mismatch": {
                    "location": m.location, "monomial": m.monomial, "lhs": m.lhs, "rhs": m.rhs,
                }}));
            }
            Status::Error(e) => {
                errors += 1;
                errored.get_or_insert_with(|| e.clone());
                writeln!(pretty, "ERROR {name}: {e}").unwrap();
                rows.push(json!({"name": name, "status": "error", "error": e.to_string()}));
            }
        }
    }
    let passed = results.len() - failed - errors;
    writeln!(pretty, "{passed}/{} checks passed", results.len()).unwrap();
    let json = json!({
        "kind": "verify", "seed": args.seed, "order": args.order, "weight": args.weight,
        "registered": REGISTERED, "results": rows,
    });
    let code = match &errored {
        Some(invseries::Error::Budget { .. }) => 3,
        Some(_) => 2,
        None if failed > 0 => 1,
        None => 0,
    };
    Ok(Output { pretty, json, code })
}
