//! Acceptance gate. Each criterion prints one PASS/FAIL line with its
//! runtime and bound; the target exits nonzero if any criterion fails.
//!
//! cargo test --test acceptance

use std::time::{Duration, Instant};

use chalgebra::chident::{ch_multilinear, ch_poly, factorial, polarize, restitute, t_multilinear};
use chalgebra::findim::{
    ch_degree, dual_numbers, format_subspace, matrix_algebra, recover_weights, trace_kernel, weighted_semisimple,
    WeightedType,
};
use chalgebra::freetrace::{parse, VarStyle};
use chalgebra::genmat::{
    discriminant_relation, generic_algebra_rank, is_trace_identity, printed_quartic, random_counterexample,
    relation_profile, sica_checks, DEFAULT_SEED,
};
use chalgebra::matrix::QMatrix;
use chalgebra::pseudochar::chartable::rational_irreducible_characters;
use chalgebra::pseudochar::group::{small_groups, symmetric};
use chalgebra::pseudochar::{check_pseudocharacter, pseudochar_kernel, CheckMode, PseudoCharTable};
use chalgebra::rational::q;
use chalgebra::strata::{enumerate_types, stratification_poset, Move, StratumType};
use chalgebra::{MPoly, TracePoly, Var, Q};
use num_traits::Zero;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(results: &mut Vec<bool>, id: usize, name: &str, bound: Duration, f: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let (ok, detail) = match out {
        Ok(d) if took <= bound => (true, d),
        Ok(d) => (false, format!("{d}; over time bound")),
        Err(e) => (false, e),
    };
    println!(
        "{} criterion {id} ({name}): {detail} [{:.3}s, bound {}s]",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        bound.as_secs()
    );
    results.push(ok);
}

// ---- independent oracles ----

/// Permutations of 0..k by Heap's algorithm.
fn heap_permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..n - 1 {
            go(n - 1, a, out);
            if n % 2 == 0 {
                a.swap(i, n - 1);
            } else {
                a.swap(0, n - 1);
            }
        }
        go(n - 1, a, out);
    }
    let mut a: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    go(k, &mut a, &mut out);
    out
}

/// Cycles of a permutation with sign.
fn cycles_and_sign(p: &[usize]) -> (Vec<Vec<usize>>, i64) {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut c = vec![];
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            c.push(i);
            i = p[i];
        }
        if c.len() % 2 == 0 {
            sign = -sign;
        }
        cycles.push(c);
    }
    (cycles, sign)
}

/// `sum_sigma sign * prod_cycles trace(product along the cycle)`.
fn t_oracle(k: usize, trace_of_cycle: impl Fn(&[usize]) -> Q) -> Q {
    let mut total = Q::zero();
    for p in heap_permutations(k) {
        let (cycles, sign) = cycles_and_sign(&p);
        let mut term = q(sign);
        for c in &cycles {
            term *= trace_of_cycle(c);
        }
        total += term;
    }
    total
}

/// `CH_n(X)` for a concrete matrix with `tr(1) = size`, via power sums and
/// Newton's identities.
fn ch_oracle(n: usize, x: &QMatrix) -> QMatrix {
    let m = x.size();
    let mut powers = vec![QMatrix::identity(m)];
    for _ in 0..n {
        powers.push(powers.last().unwrap().mul(x));
    }
    let p: Vec<Q> = (0..=n).map(|j| if j == 0 { q(m as i64) } else { powers[j].trace() }).collect();
    let mut e = vec![q(1)];
    for k in 1..=n {
        let mut s = Q::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        e.push(s / q(k as i64));
    }
    let mut r = QMatrix::zero(m);
    for i in 0..=n {
        let c = if i % 2 == 0 { e[i].clone() } else { -e[i].clone() };
        r = r.add(&powers[n - i].scale(&c));
    }
    r
}

fn mono(pairs: &[(char, u32)]) -> MPoly {
    pairs.iter().fold(MPoly::one(), |acc, &(c, e)| acc.mul(&MPoly::var(Var::Sym(c)).pow(e)))
}

// ---- criteria ----

fn golden_formulas() -> Outcome {
    let printed = [
        "x - tr(x)",
        "x^2 - tr(x)*x + 1/2*(tr(x)^2 - tr(x^2))",
        "x^3 - tr(x)*x^2 + 1/2*(tr(x)^2 - tr(x^2))*x - 1/3*tr(x^3) - 1/6*tr(x)^3 + 1/2*tr(x^2)*tr(x)",
    ];
    for (i, text) in printed.iter().enumerate() {
        let n = i + 1;
        let mut out = Vec::new();
        let mut err = Vec::new();
        let args: Vec<String> = ["chalg", "chpoly", "--n", &n.to_string()].iter().map(|s| s.to_string()).collect();
        let code = chalgebra::cli::run_with(&args, &mut out, &mut err);
        let got = String::from_utf8(out).unwrap();
        let want = parse(text).map_err(|e| e.to_string())?.render(VarStyle::Single);
        ensure(code == 0 && got.trim_end() == want, || format!("CH_{n}: got {got:?}, want {want:?}"))?;
    }
    Ok("chpoly --n 1|2|3 match the printed CH_1, CH_2, CH_3".into())
}

fn polarization() -> Outcome {
    for n in 1..=4 {
        let m = ch_multilinear(n).map_err(|e| e.to_string())?;
        let ch = ch_poly(n).map_err(|e| e.to_string())?;
        ensure(polarize(&ch).map_err(|e| e.to_string())? == m, || format!("polarize(CH_{n}) differs"))?;
        ensure(restitute(&m) == ch.scale(&factorial(n)), || format!("restitution of CH({n}) is not {n}!*CH_{n}"))?;
    }
    let printed = parse("x1*x2+x2*x1-tr(x1)*x2-tr(x2)*x1-tr(x1*x2)+tr(x1)*tr(x2)").unwrap();
    ensure(ch_multilinear(2).unwrap() == printed, || "n = 2 differs from the printed expression".into())?;
    Ok("n <= 4 consistent; n = 2 matches the printed expression".into())
}

fn formal_identities() -> Outcome {
    for n in 1..=4 {
        let ch = ch_multilinear(n).map_err(|e| e.to_string())?;
        let x = TracePoly::var(n as u32 + 1);
        let lhs = ch.mul(&x).formal_trace();
        let t = t_multilinear(n + 1).map_err(|e| e.to_string())?;
        let rhs = if n % 2 == 0 { t.clone() } else { t.neg() };
        ensure(lhs == rhs, || format!("tr(CH x) != (-1)^n T_(n+1) at n = {n}"))?;

        let tn = t_multilinear(n).unwrap();
        let last = n as u32 + 1;
        let mut rec = tn.mul(&TracePoly::var(last).formal_trace());
        for i in 1..=n as u32 {
            let sub = tn
                .substitute(|v| {
                    Some(if v == i { TracePoly::var(i).mul(&TracePoly::var(last)) } else { TracePoly::var(v) })
                })
                .map_err(|e| e.to_string())?;
            rec = rec.sub(&sub);
        }
        ensure(rec == t, || format!("T recursion fails at n = {n}"))?;
    }
    Ok("trace relation and T recursion hold for n <= 4".into())
}

fn matrix_table() -> Outcome {
    let mut checks = 0;
    for n in 1..=4 {
        let ch = ch_poly(n).unwrap();
        for m in 1..=n {
            ensure(is_trace_identity(&ch, m), || format!("CH_{n} should vanish on {m}x{m}"))?;
            checks += 1;
        }
        let m = n + 1;
        if m <= 4 {
            ensure(!is_trace_identity(&ch, m), || format!("CH_{n} should not vanish on {m}x{m}"))?;
            let w =
                random_counterexample(&ch, m, 50, DEFAULT_SEED).ok_or(format!("no witness for CH_{n} on {m}x{m}"))?;
            let value = ch_oracle(n, &w.assignment[&1]);
            ensure(!value.is_zero() && value == w.value, || {
                format!("witness for CH_{n} on {m}x{m} does not re-check")
            })?;
            checks += 1;
        }
    }
    for m in 1..=3 {
        let t = t_multilinear(m + 1).unwrap();
        for n in 1..=3 {
            let holds = is_trace_identity(&t, n);
            ensure(holds == (n <= m), || format!("T_{} on {n}x{n}: got {holds}", m + 1))?;
            if !holds {
                let w = random_counterexample(&t, n, 50, DEFAULT_SEED).ok_or(format!("no witness for T_{}", m + 1))?;
                let mats: Vec<&QMatrix> = (1..=m as u32 + 1).map(|v| &w.assignment[&v]).collect();
                let v = t_oracle(m + 1, |c| c.iter().fold(QMatrix::identity(n), |acc, &i| acc.mul(mats[i])).trace());
                ensure(!v.is_zero(), || format!("witness for T_{} on {n}x{n} does not re-check", m + 1))?;
            }
            checks += 1;
        }
    }
    Ok(format!("{checks} exact checks, witnesses re-checked"))
}

fn kernel_corpus() -> Outcome {
    let limit = Duration::from_secs(1);
    let timed = |f: &dyn Fn() -> Result<(), String>| -> Result<(), String> {
        let s = Instant::now();
        f()?;
        ensure(s.elapsed() < limit, || "case over 1 s".into())
    };
    timed(&|| {
        let a = dual_numbers();
        let k = format_subspace(&a, &trace_kernel(&a));
        ensure(k == "span{eps}", || format!("dual kernel {k}"))?;
        ensure(ch_degree(&a, 6) == Some(2), || "dual ch_degree".into())
    })?;
    timed(&|| {
        let w = WeightedType::new(&[1, 1], &[1, 2]).unwrap();
        let a = weighted_semisimple(&w);
        ensure(ch_degree(&a, 6) == Some(3), || "Q+Q ch_degree".into())?;
        ensure(recover_weights(&a).ok() == Some(w.clone()), || "Q+Q weights".into())
    })?;
    timed(&|| {
        let a = matrix_algebra(2).rescale_trace(2).unwrap();
        ensure(ch_degree(&a, 6) == Some(4), || "doubled M2 ch_degree".into())
    })?;
    Ok("dual numbers, Q+Q weights (1,2), doubled M2".into())
}

fn generic_ranks() -> Outcome {
    let r = generic_algebra_rank(&dual_numbers(), 2, None, DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(r.rank == 3 && r.stabilized(), || format!("dual numbers rank {}", r.rank))?;
    let mut cases = 0;
    for n in 1..=3 {
        for s in enumerate_types(n) {
            let w = s.to_weighted();
            let dim: usize = s.pairs().iter().map(|(m, _)| m * m).sum();
            let r = generic_algebra_rank(&weighted_semisimple(&w), 2, None, DEFAULT_SEED).map_err(|e| e.to_string())?;
            ensure(r.rank == dim && r.stabilized(), || format!("F{w}: rank {} vs dim {dim}", r.rank))?;
            cases += 1;
        }
    }
    Ok(format!("dual numbers 3; {cases} types with n <= 3 give rank = dim"))
}

fn pseudocharacters() -> Outcome {
    let mut passed = 0;
    let mut perturbed = 0;
    for (name, g) in small_groups() {
        let chars = rational_irreducible_characters(&g).map_err(|e| e.to_string())?;
        // orthogonality oracle: distinct orbit sums are orthogonal and
        // sum chi(1)^2 / <chi, chi> = |G|
        let o = g.order() as i64;
        let inner = |a: &[i64], b: &[i64]| -> Q {
            (0..g.order()).map(|x| q(a[x] * b[g.inverse(x)])).fold(Q::zero(), |s, v| s + v) / q(o)
        };
        let mut total = Q::zero();
        for (i, a) in chars.iter().enumerate() {
            for b in &chars[i + 1..] {
                ensure(inner(a, b).is_zero(), || format!("{name}: characters not orthogonal"))?;
            }
            total += q(a[0] * a[0]) / inner(a, a);
        }
        ensure(total == q(o), || format!("{name}: character degrees do not account for |G|"))?;
        for c in &chars {
            let n = c[0] as usize;
            let p = PseudoCharTable::from_integers(g.clone(), n, c).unwrap();
            let rep = check_pseudocharacter(&p, CheckMode::Exhaustive, true);
            ensure(rep.passes(), || format!("{name}: character {c:?} fails"))?;
            passed += 1;
            for x in 0..g.order() {
                let mut bad = c.clone();
                bad[x] += 1;
                let p = PseudoCharTable::from_integers(g.clone(), n, &bad).unwrap();
                let rep = check_pseudocharacter(&p, CheckMode::Exhaustive, true);
                ensure(!rep.passes(), || format!("{name}: perturbation at g{x} of {c:?} passes"))?;
                let witnessed =
                    match (&rep.trace_of_one, rep.asymmetric_pair, &rep.frobenius_witness) {
                        (Some(_), _, _) => x == g.identity(),
                        (_, Some((a, b)), _) => bad[g.mul(a, b)] != bad[g.mul(b, a)],
                        (_, _, Some((tuple, value))) => {
                            let v = t_oracle(n + 1, |cyc| {
                                q(bad[g.product(&cyc.iter().map(|&i| tuple[i]).collect::<Vec<_>>())])
                            });
                            &v == value && !v.is_zero()
                        }
                        _ => false,
                    };
                ensure(witnessed, || format!("{name}: perturbation at g{x} has no valid witness"))?;
                perturbed += 1;
            }
        }
    }
    let s3 = symmetric(3);
    let chars = rational_irreducible_characters(&s3).unwrap();
    let std = chars.iter().find(|c| c[0] == 2).unwrap();
    let p = PseudoCharTable::from_integers(s3, 2, std).unwrap();
    let (_, quo) = pseudochar_kernel(&p).map_err(|e| e.to_string())?;
    ensure(quo.dim() == 4 && ch_degree(&quo, 3) == Some(2), || "S3 quotient".into())?;
    Ok(format!("{passed} characters pass, {perturbed} perturbations fail with witnesses, S3 quotient dim 4 ch 2"))
}

fn strata() -> Outcome {
    let mut nodes = 0;
    for n in 1..=6 {
        for ell in 2..=4 {
            let p = stratification_poset(n, ell).map_err(|e| e.to_string())?;
            let audit = p.audit();
            ensure(audit.ok(), || format!("n={n} ell={ell}: {:?}", audit.failures))?;
            let c = p.nodes.len();
            let dim = |s: &StratumType| -> usize {
                (ell - 1) * s.pairs().iter().map(|(m, _)| m * m).sum::<usize>() + s.len()
            };
            for i in 0..c {
                ensure(p.leq[i][i], || "reflexivity".into())?;
                for j in 0..c {
                    if i != j && p.leq[i][j] {
                        ensure(!p.leq[j][i], || "antisymmetry".into())?;
                        ensure(dim(&p.nodes[i]) < dim(&p.nodes[j]), || "dimension must drop".into())?;
                    }
                    for k in 0..c {
                        ensure(!(p.leq[i][j] && p.leq[j][k]) || p.leq[i][k], || "transitivity".into())?;
                    }
                }
            }
            let open = StratumType::new(vec![(n, 1)]).unwrap();
            ensure(dim(&open) == (ell - 1) * n * n + 1, || "open stratum formula".into())?;
            ensure(p.dims[p.index_of(&open).unwrap()].stratum == (ell - 1) * n * n + 1, || "open stratum dim".into())?;
            for e in &p.edges {
                let (u, l) = (&p.nodes[e.upper], &p.nodes[e.lower]);
                ensure(e.codim == dim(u) - dim(l), || "edge codim".into())?;
                // a 2x2 block of weight a split into two 1x1 blocks of weight a
                let two_split = ell == 2
                    && u.pairs().iter().any(|&(m, a)| {
                        if m != 2 {
                            return false;
                        }
                        let mut rest = u.pairs().to_vec();
                        let pos = rest.iter().position(|&x| x == (2, a)).unwrap();
                        rest.remove(pos);
                        rest.extend([(1, a), (1, a)]);
                        StratumType::new(rest).unwrap() == *l
                    });
                ensure((e.codim == 1) == two_split, || format!("n={n} ell={ell}: edge {u} -> {l} codim {}", e.codim))?;
                if e.codim == 1 {
                    ensure(matches!(e.kind, Some(Move::Split { m: 2, p: 1, q: 1 })), || "codim 1 move kind".into())?;
                }
            }
            nodes += c;
        }
    }
    Ok(format!("{nodes} strata over n <= 6, ell in 2..=4"))
}

fn one_variable() -> Outcome {
    let r = sica_checks();
    ensure(r.identities.iter().all(|&b| b), || "the three identities".into())?;
    let u = MPoly::var(Var::Idx('x', 1));
    let v = MPoly::var(Var::Idx('x', 2));
    let a = u.add(&v.scale(&q(2)));
    let b = u.mul(&v).scale(&q(2)).add(&v.pow(2));
    let c = u.mul(&v.pow(2));
    let disc = mono(&[('a', 1), ('b', 1), ('c', 1)])
        .scale(&q(18))
        .sub(&mono(&[('a', 3), ('c', 1)]).scale(&q(4)))
        .add(&mono(&[('a', 2), ('b', 2)]))
        .sub(&mono(&[('b', 3)]).scale(&q(4)))
        .sub(&mono(&[('c', 2)]).scale(&q(27)));
    let sub = |p: &MPoly| {
        p.substitute(|x| match x {
            Var::Sym('a') => Some(a.clone()),
            Var::Sym('b') => Some(b.clone()),
            Var::Sym('c') => Some(c.clone()),
            _ => None,
        })
    };
    ensure(sub(&disc).is_zero(), || "discriminant oracle does not vanish".into())?;
    let rel = discriminant_relation(&[1, 2]).map_err(|e| e.to_string())?;
    ensure(rel == disc || rel == disc.neg(), || format!("relation {rel} differs from the discriminant"))?;
    ensure(sub(&rel).is_zero(), || "relation does not vanish".into())?;
    let prof = relation_profile(&printed_quartic());
    let flagged = !prof.is_consistent_with(4, 6);
    ensure(flagged, || "printed quartic not flagged".into())?;
    Ok(format!(
        "identities hold, discriminant vanishes; printed quartic flagged (weights {:?}, vanishes {})",
        prof.weights, prof.vanishes
    ))
}

fn main() {
    let mut results = Vec::new();
    let s = Duration::from_secs;
    run(&mut results, 1, "golden formulas", s(1), golden_formulas);
    run(&mut results, 2, "polarization consistency", s(10), polarization);
    run(&mut results, 3, "formal identities", s(30), formal_identities);
    run(&mut results, 4, "matrix identity table", s(300), matrix_table);
    run(&mut results, 5, "kernel and CH-degree corpus", s(3), kernel_corpus);
    run(&mut results, 6, "generic-element ranks", s(120), generic_ranks);
    run(&mut results, 7, "pseudocharacters", s(60), pseudocharacters);
    run(&mut results, 8, "strata", s(60), strata);
    run(&mut results, 9, "one-variable oracle", s(1), one_variable);
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
