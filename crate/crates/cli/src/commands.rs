use std::fmt::Write;

use invseries::compose::IterableSeries;
use invseries::hankel::{
    conjecture_i_report, conjecture_ii_report, hankel_transform, HankelReport,
};
use invseries::invert::{
    continuous_invert, formula_i_closed, iterate_invert, parse_rationals, toeplitz_recover,
    PolySequence, Sequence,
};
use invseries::pq::PqContext;
use invseries::series::TruncatedSeries;
use invseries::{MPoly, Rational, Ring, Var};
use serde_json::{json, Value};

use crate::{
    CliError, ComposeArgs, ConjectureArgs, Global, HankelArgs, InvertArgs, Output, Power, PqArgs,
    Which,
};

type Result<T> = std::result::Result<T, CliError>;

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn joined<T: ToString>(items: &[T], symbolic: bool) -> String {
    strings(items).join(if symbolic { ", " } else { "," })
}

fn read_list(src: &str) -> Result<Vec<Rational>> {
    parse_rationals(src).map_err(|e| CliError::Usage(format!("bad sequence literal: {e}")))
}

/// The input sequence cut to `order`, or an error if it is shorter.
fn numeric_input(src: &str, order: Option<usize>) -> Result<Sequence<Rational>> {
    let seq = Sequence::new(read_list(src)?)?;
    Ok(match order {
        Some(n) => seq.truncate(n)?,
        None => seq,
    })
}

pub fn pq(args: &PqArgs) -> Result<Output> {
    let ctx = match &args.series {
        Some(src) => {
            let s = read_list(src)?;
            PqContext::numeric(&s, args.order)?
        }
        None => PqContext::symbolic(args.order),
    };
    let mut pretty = String::new();
    let mut rows = Vec::new();
    for n in 0..=args.order {
        let (p, q) = (ctx.p(n)?, ctx.q(n)?);
        writeln!(pretty, "P_{n} = {p}").unwrap();
        writeln!(pretty, "Q_{n} = {q}").unwrap();
        rows.push(json!({"kind": "pq", "n": n, "P": p.to_string(), "Q": q.to_string()}));
    }
    Ok(Output::ok(pretty, Value::Array(rows)))
}

fn poly_sequence_output(seq: &PolySequence) -> Output {
    Output::ok(
        format!("{seq}\n"),
        json!({"kind": "poly-sequence", "order": seq.order(), "entries": strings(seq.entries())}),
    )
}

fn sequence_output<R: Ring>(seq: &Sequence<R>) -> Output {
    Output::ok(
        format!("{seq}\n"),
        json!({"kind": "sequence", "order": seq.order(), "entries": strings(seq.coeffs())}),
    )
}

pub fn invert(args: &InvertArgs) -> Result<Output> {
    if args.closed {
        let order = args.order.unwrap_or(4);
        let entries = (0..=order).map(formula_i_closed).collect();
        return Ok(poly_sequence_output(&PolySequence::new(
            Var::named("x"),
            0,
            entries,
        )));
    }
    match (&args.seq, args.symbolic) {
        (Some(src), _) => run_invert(&numeric_input(src, args.order)?, args),
        (None, true) => run_invert(&Sequence::symbolic("a", args.order.unwrap_or(4)), args),
        (None, false) => Err(CliError::Usage(
            "one of --seq, --symbolic or --closed is required".into(),
        )),
    }
}

fn run_invert<R: Ring>(a: &Sequence<R>, args: &InvertArgs) -> Result<Output> {
    if args.toeplitz {
        let recovered = (0..a.len())
            .map(|n| toeplitz_recover(a, n))
            .collect::<invseries::Result<Vec<R>>>()?;
        return Ok(sequence_output(&Sequence::new(recovered)?));
    }
    Ok(match args.power {
        Power::Int(k) => sequence_output(&iterate_invert(a, k)),
        Power::X => poly_sequence_output(&continuous_invert(a)),
    })
}

pub fn hankel(args: &HankelArgs, g: &Global) -> Result<Output> {
    let budget = g.budget();
    match &args.seq {
        Some(src) => {
            let s = read_list(src)?;
            let count = fit_count(args.count, s.len(), args.shift);
            admit(count, budget.numeric, "numeric determinant size")?;
            hankel_output(&hankel_transform(&s, count, args.shift)?, args.shift, false)
        }
        None => {
            let count = args.count.unwrap_or(3);
            admit(count, budget.symbolic, "symbolic determinant size")?;
            let needed = (2 * count + args.shift).saturating_sub(2);
            let s = Sequence::<MPoly>::symbolic("s", args.order.unwrap_or(needed));
            hankel_output(
                &hankel_transform(s.coeffs(), count, args.shift)?,
                args.shift,
                true,
            )
        }
    }
}

/// Largest `n` with `2(n-1) + shift < len` unless given.
fn fit_count(count: Option<usize>, len: usize, shift: usize) -> usize {
    count.unwrap_or_else(|| len.saturating_sub(shift).div_ceil(2))
}

fn admit(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n > cap {
        return Err(invseries::Error::Budget {
            what,
            requested: n,
            cap,
        }
        .into());
    }
    Ok(())
}

fn hankel_output<R: Ring>(dets: &[R], shift: usize, symbolic: bool) -> Result<Output> {
    Ok(Output::ok(
        format!("{}\n", joined(dets, symbolic)),
        json!({"kind": "hankel-transform", "shift": shift, "count": dets.len(), "dets": strings(dets)}),
    ))
}

pub fn compose(args: &ComposeArgs) -> Result<Output> {
    if args.coeffs.trim() == "a" {
        let f = IterableSeries::symbolic(args.order.unwrap_or(4));
        compose_with(&f, args)
    } else {
        let tail = read_list(&args.coeffs)?;
        let order = args.order.unwrap_or(tail.len() + 1);
        if tail.len() + 1 > order {
            return Err(CliError::Usage(format!(
                "{} coefficients a_2… do not fit in order {order}",
                tail.len()
            )));
        }
        compose_with(&IterableSeries::from_tail(tail, order)?, args)
    }
}

fn compose_with<R: Ring>(f: &IterableSeries<R>, args: &ComposeArgs) -> Result<Output> {
    let order = f.order();
    match args.power {
        Power::X => {
            let c = f.c_polynomials(order)?;
            let mut pretty = String::new();
            for (i, e) in c.entries().iter().enumerate() {
                writeln!(pretty, "C_{} = {e}", i + 1).unwrap();
            }
            Ok(Output::ok(
                pretty,
                json!({"kind": "compose-iterate", "N": order, "C": strings(c.entries())}),
            ))
        }
        Power::Int(k) if k >= 0 => {
            let s: TruncatedSeries<R> = f.iterate(k as usize);
            Ok(Output::ok(
                format!("{s}\n"),
                json!({"kind": "series", "var": "t", "order": order, "power": k,
                       "coeffs": strings(s.coeffs())}),
            ))
        }
        Power::Int(k) => Err(CliError::Usage(format!(
            "negative composition power {k}; use `x` for the continuous iterate"
        ))),
    }
}

fn report_json(which: &str, r: &HankelReport) -> Value {
    let x = Var::named("x");
    let s1 = Var::named("s1");
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            let mut v = json!({
                "n": row.n,
                "det": row.det.to_string(),
                "deg_x": row.det.degree_in(x),
                "verdict": row.verdict.as_str(),
            });
            if which == "ii" {
                v["deg_s1"] = json!(row.det.degree_in(s1));
            }
            v
        })
        .collect();
    json!({"kind": "hankel-report", "conjecture": which, "shift": r.shift, "rows": rows})
}

pub fn conjecture(args: &ConjectureArgs, g: &Global) -> Result<Output> {
    let budget = g.budget();
    match args.which {
        Which::I => {
            let reports = match &args.seq {
                Some(src) => {
                    let a = Sequence::new(read_list(src)?)?;
                    conjecture_i_report(&a, args.kmax, args.nmax, &budget)?
                }
                None => {
                    let order = (2 * args.nmax + args.kmax).saturating_sub(2);
                    let a = Sequence::symbolic("a", order);
                    conjecture_i_report(&a, args.kmax, args.nmax, &budget)?
                }
            };
            let pretty = reports.iter().map(ToString::to_string).collect();
            let json = reports.iter().map(|r| report_json("i", r)).collect();
            Ok(Output::ok(pretty, Value::Array(json)))
        }
        Which::Ii => {
            let ctx = PqContext::symbolic(2 * args.nmax.max(1) - 2);
            let report = conjecture_ii_report(&ctx, args.nmax, &budget)?;
            Ok(Output::ok(report.to_string(), report_json("ii", &report)))
        }
    }
}
