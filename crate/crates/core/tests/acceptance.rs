//! Acceptance suite. Every check is exact; each criterion also has a wall-clock
//! budget. Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use leibniz_kit::cohomology::{
    adjoint_rep, betti, circle_product, cocycle_check, coboundary_matrix, complex_square_check, conjugation_rep,
    dual_rep, graded_bracket, maurer_cartan_check, rbar, right_action_cochain, semidirect, shuffles, trivial_rep,
    SemidirectMode,
};
use leibniz_kit::lie2::{build_lie2, check_jacobiator_identities, jacobiator_closed, jacobiator_direct, verify_lie2};
use leibniz_kit::naive::{
    adjoint_naive, compare_adjoint, compare_trivial, graph_rep_cohomology, naive_coboundary_matrix, naive_from_rep,
    tautological_naive, trivial_naive, trivial_naive_space, zero_naive, ComparisonBranch,
};
use leibniz_kit::omni::omni_lie;
use leibniz_kit::{fixtures, io, Algebra, Cochain, Limits, Naive, Rational, Rep};
use num_traits::{One, Zero};

type Q = Rational;
type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}

fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn positive() -> Vec<(&'static str, Algebra)> {
    fixtures::positive_algebras()
}

/// Trivial, adjoint, dual and conjugation representations of `g`.
fn reps_for(g: &Algebra) -> Vec<(&'static str, Rep)> {
    let adj = adjoint_rep(g);
    let left = adj.left_only();
    vec![
        ("trivial", trivial_rep(g)),
        ("dual", dual_rep(&left).unwrap()),
        ("conjugation", conjugation_rep(&left).unwrap()),
        ("adjoint", adj),
    ]
}

/// Rank by plain elimination, independent of the library's linear algebra.
fn oracle_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn corpus_algebra(name: &str) -> Algebra {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    io::algebra_from_json(&text).unwrap()
}

fn leibniz_validity() -> Outcome {
    let mut witnesses = Vec::new();
    for (name, _) in positive() {
        let g = corpus_algebra(&format!("{name}.json"));
        let r = g.check_leibniz();
        ensure(r.holds, || format!("{name} fails at {:?}", r.witnesses.first().map(|w| &w.indices)))?;
    }
    for (name, _) in fixtures::negative_algebras::<Q>() {
        let g = corpus_algebra(&format!("negative/{name}.json"));
        let r = g.check_leibniz();
        let w = r.witnesses.first().ok_or_else(|| format!("{name} passes the Leibniz identity"))?;
        ensure(!is_zero(&w.defect), || format!("{name}: witness with zero defect"))?;
        witnesses.push(format!("{name} at {:?} defect {}", w.indices, vec_text(&w.defect)));
    }
    Ok(format!("{} positive pass; negative witnesses: {}", positive().len(), witnesses.join("; ")))
}

fn vec_text(v: &[Q]) -> String {
    format!("[{}]", v.iter().map(io::format_rational).join(", "))
}

fn jacobiator_suite() -> Outcome {
    let mut tuples = 0usize;
    for (name, g) in positive() {
        let n = g.dim();
        let e = |i: usize| unit(n, i);
        let mut closed = Vec::with_capacity(n * n * n);
        for (i, j, k) in itertools::iproduct!(0..n, 0..n, 0..n) {
            let d = jacobiator_direct(&g, &e(i), &e(j), &e(k)).unwrap();
            let c = jacobiator_closed(&g, &e(i), &e(j), &e(k)).unwrap();
            ensure(d == c, || format!("{name}: direct != closed at {:?}", (i, j, k)))?;
            closed.push(c);
        }
        let at = |i: usize, j: usize, k: usize| &closed[(i * n + j) * n + k];
        for (i, j, k) in itertools::iproduct!(0..n, 0..n, 0..n) {
            let neg: Vec<Q> = at(i, j, k).iter().map(|x| -x).collect();
            for swapped in [at(j, i, k), at(i, k, j), at(k, j, i)] {
                ensure(*swapped == neg, || format!("{name}: J not antisymmetric at {:?}", (i, j, k)))?;
            }
            for l in 0..n {
                let b = g.bracket(at(i, j, k), &e(l)).unwrap();
                ensure(is_zero(&b), || format!("{name}: [J, e{l}] != 0 at {:?}", (i, j, k)))?;
                tuples += 1;
            }
        }
        let ids = check_jacobiator_identities(&g);
        ensure(ids.holds, || format!("{name}: {:?}", ids.witnesses.first()))?;
    }
    Ok(format!("{} fixtures, {tuples} quadruples", positive().len()))
}

fn lie2_suite() -> Outcome {
    let mut l3_nonzero = Vec::new();
    for (name, g) in positive() {
        let l = build_lie2(&g).map_err(|e| format!("{name}: {e}"))?;
        let axioms = verify_lie2(&l);
        ensure(axioms.passes(), || format!("{name}: {:?}", axioms.flags()))?;
        if !l.l3_is_zero() {
            l3_nonzero.push(name);
        }
    }
    ensure(l3_nonzero.contains(&"omni2"), || "l3 vanishes on omni2".into())?;
    Ok(format!("axioms (a)-(e) on {} fixtures; l3 nonzero on {}", positive().len(), l3_nonzero.join(", ")))
}

fn naive_reps_for(g: &Algebra) -> Vec<(&'static str, Naive)> {
    let mut out = vec![("adjoint_naive", adjoint_naive(g).unwrap())];
    out.push(match trivial_naive_space(g).basis.first() {
        Some(xi) => ("trivial_naive", trivial_naive(g, xi).unwrap()),
        None => ("zero_naive", zero_naive(g)),
    });
    out.push(("from_adjoint", naive_from_rep(&adjoint_rep(g)).unwrap()));
    out
}

/// Literal product of consecutive matrices when both fit in `dense`, the
/// matrix-free column push-forward otherwise.
fn square_vanishes(rep: &Rep, k: usize, dense: usize) -> Result<bool, String> {
    let (n, m) = (rep.n(), rep.vdim);
    let cells = n.pow(k as u32) * m * n.pow(k as u32 + 1) * m + n.pow(k as u32 + 1) * m * n.pow(k as u32 + 2) * m;
    if cells <= dense {
        let lim = Limits::default();
        let d0 = coboundary_matrix(rep, k, &lim).map_err(|e| e.to_string())?;
        let d1 = coboundary_matrix(rep, k + 1, &lim).map_err(|e| e.to_string())?;
        ensure(d1.mul(&d0).is_zero(), || format!("dense product nonzero at k={k}"))?;
        Ok(true)
    } else {
        let r = complex_square_check(rep, k);
        ensure(r.holds, || format!("column {:?} survives d^2 at k={k}", r.witnesses.first().map(|w| &w.indices)))?;
        Ok(false)
    }
}

fn complex_property() -> Outcome {
    const DENSE: usize = 400_000;
    let (mut dense, mut free) = (0, 0);
    for (name, g) in positive() {
        for (rname, rep) in reps_for(&g) {
            for k in 0..=3 {
                match square_vanishes(&rep, k, DENSE).map_err(|e| format!("{name}/{rname}: {e}"))? {
                    true => dense += 1,
                    false => free += 1,
                }
            }
        }
        for (rname, rho) in naive_reps_for(&g) {
            let rep = rho.induced_rep().map_err(|e| e.to_string())?;
            for k in 0..=3 {
                match square_vanishes(&rep, k, DENSE).map_err(|e| format!("{name}/{rname}: {e}"))? {
                    true => dense += 1,
                    false => free += 1,
                }
            }
            if rho.image_dim() * g.dim().pow(3) <= 2_000 {
                let lim = Limits::default();
                let d0 = naive_coboundary_matrix(&rho, 1, &lim).map_err(|e| e.to_string())?;
                let d1 = naive_coboundary_matrix(&rho, 2, &lim).map_err(|e| e.to_string())?;
                ensure(d1.mul(&d0).is_zero(), || format!("{name}/{rname}: naive delta^2 != 0"))?;
            }
        }
    }
    Ok(format!("k = 0..3: {dense} dense products, {free} matrix-free checks"))
}

/// `2 (a(a(x,y),z) - a(x,a(y,z)) + a(y,a(x,z)))` on basis vectors.
fn displayed_square(a: &Algebra, x: usize, y: usize, z: usize) -> Vec<Q> {
    let n = a.dim();
    let e = |i: usize| unit(n, i);
    let t1 = a.bracket(a.bracket_basis(x, y), &e(z)).unwrap();
    let t2 = a.bracket(&e(x), a.bracket_basis(y, z)).unwrap();
    let t3 = a.bracket(&e(y), a.bracket_basis(x, z)).unwrap();
    let two = Q::from_integer(2.into());
    (0..n).map(|k| &two * (&t1[k] - &t2[k] + &t3[k])).collect()
}

fn graded_equivalence() -> Outcome {
    let mut checked = 0;
    let all = positive().into_iter().map(|(n, g)| (n, g, true));
    let neg = fixtures::negative_algebras::<Q>().into_iter().map(|(n, g)| (n, g, false));
    for (name, g, leibniz) in all.chain(neg) {
        let alpha = Cochain::from_algebra(&g);
        let sq = graded_bracket(&alpha, &alpha).map_err(|e| e.to_string())?;
        let circ = circle_product(&alpha, &alpha).map_err(|e| e.to_string())?;
        let n = g.dim();
        for (x, y, z) in itertools::iproduct!(0..n, 0..n, 0..n) {
            let expected = displayed_square(&g, x, y, z);
            let doubled: Vec<Q> = circ.value(&[x, y, z]).iter().map(|v| v + v).collect();
            ensure(sq.value(&[x, y, z]) == expected.as_slice(), || {
                format!("{name}: [a,a] differs from the expansion at {:?}", (x, y, z))
            })?;
            ensure(doubled == expected, || format!("{name}: 2 a o a differs at {:?}", (x, y, z)))?;
            checked += 1;
        }
        ensure(sq.is_zero() == leibniz, || format!("{name}: [a,a] = 0 is {} but Leibniz is {leibniz}", sq.is_zero()))?;
    }
    Ok(format!("{checked} basis triples; [a,a] = 0 exactly on the Leibniz fixtures"))
}

fn maurer_cartan_suite() -> Outcome {
    let mut pairs = Vec::new();
    for (name, g) in [("L2", fixtures::l2::<Q>()), ("heis3", fixtures::heis3()), ("sl2", fixtures::sl2())] {
        let rep = adjoint_rep(&g);
        let mc = maurer_cartan_check(&rep).map_err(|e| e.to_string())?;
        ensure(mc.holds, || format!("{name}: {:?}", mc.witnesses.first()))?;
        let l0 = semidirect(&rep, SemidirectMode::LeftOnly).map_err(|e| e.to_string())?;
        let lr = semidirect(&rep, SemidirectMode::LeftRight).map_err(|e| e.to_string())?;
        let r = rbar(&rep);
        let d = l0.dim();
        for (x, y) in itertools::iproduct!(0..d, 0..d) {
            let deformed: Vec<Q> = l0.bracket_basis(x, y).iter().zip(r.value(&[x, y])).map(|(a, b)| a + b).collect();
            ensure(deformed == lr.bracket_basis(x, y), || format!("{name}: deformed bracket differs at {:?}", (x, y)))?;
        }
        pairs.push(name);
    }
    Ok(format!("adjoint MC element on {}", pairs.join(", ")))
}

fn cocycle_suite() -> Outcome {
    let mut count = 0;
    let mut reps: Vec<(String, Rep)> = Vec::new();
    for (name, g) in positive() {
        for (rname, rep) in reps_for(&g) {
            reps.push((format!("{name}/{rname}"), rep));
        }
    }
    for (name, rep) in reps {
        ensure(rep.check().holds, || format!("{name} is not a representation"))?;
        let conj = conjugation_rep(&rep.left_only()).map_err(|e| e.to_string())?;
        let r = right_action_cochain(&rep);
        ensure(cocycle_check(&conj, &r).map_err(|e| e.to_string())?, || format!("{name}: d r != 0"))?;
        count += 1;
    }
    Ok(format!("d r = 0 for {count} representations"))
}

fn theorem_suite() -> Outcome {
    let lim = Limits::default();
    let mut lines = Vec::new();
    for (name, g) in [("abelian2", fixtures::abelian::<Q>(2)), ("L2", fixtures::l2()), ("heis3", fixtures::heis3())] {
        for (kind, c) in [
            ("trivial", compare_trivial(&g, 2, &lim).map_err(|e| e.to_string())?),
            ("adjoint", compare_adjoint(&g, 2, &lim).map_err(|e| e.to_string())?),
        ] {
            ensure(c.holds(), || format!("{name}/{kind}: {:?}", c.degrees))?;
            let compared: Vec<usize> = c.degrees.iter().filter(|d| !d.informational).map(|d| d.k).collect();
            ensure(compared == [1, 2], || format!("{name}/{kind}: compared degrees {compared:?}"))?;
            let dims: Vec<usize> = c.degrees[1..].iter().map(|d| d.dim_classical).collect();
            lines.push(format!("{name}/{kind} {dims:?}"));
        }
    }
    let sl2 = fixtures::sl2::<Q>();
    let c = compare_trivial(&sl2, 3, &lim).map_err(|e| e.to_string())?;
    ensure(c.branch == ComparisonBranch::Perfect, || "sl2 not on the [g,g] = g branch".into())?;
    ensure(
        c.holds() && c.degrees[1..].iter().all(|d| d.dim_naive == 0 && d.dim_classical == 0),
        || format!("sl2: {:?}", c.degrees),
    )?;
    lines.push("sl2/perfect zero for k = 1..3".into());

    let phi = fixtures::nilpotent_graph_map::<Q>();
    ensure(phi.graph_check().holds, || "graph condition fails".into())?;
    let rho = tautological_naive(&phi).map_err(|e| e.to_string())?;
    let c = graph_rep_cohomology(&rho, &phi, 2, &lim).map_err(|e| e.to_string())?;
    ensure(c.holds(), || format!("graph comparison: {:?}", c.degrees))?;
    lines.push("nilpotent_plane/graph".into());
    Ok(lines.join("; "))
}

fn pinned_numbers() -> Outcome {
    let lim = Limits::default();
    for n in 1..=3 {
        let b = betti(&trivial_rep(&fixtures::abelian::<Q>(n)), 3, &lim).map_err(|e| e.to_string())?;
        for k in 1..=3 {
            ensure(b.dim_h(k) == Some(n.pow(k as u32)), || format!("abelian{n}: dim H^{k} = {:?}", b.dim_h(k)))?;
        }
    }
    for (name, g) in positive() {
        let b = betti(&adjoint_rep(&g), 0, &lim).map_err(|e| e.to_string())?;
        let z = g.left_center().dim();
        ensure(b.dim_h(0) == Some(z), || format!("{name}: dim H^0 = {:?}, dim Z = {z}", b.dim_h(0)))?;
    }
    // Kernel oracle: z is left-central iff [z, e_x] = 0 for every x.
    let g: Algebra = omni_lie(2);
    let n = g.dim();
    let rows: Vec<Vec<Q>> = itertools::iproduct!(0..n, 0..n)
        .map(|(x, k)| (0..n).map(|z| g.constant(z, x, k).clone()).collect())
        .collect();
    let oracle = n - oracle_rank(rows);
    let z = g.left_center().dim();
    ensure(oracle == 2 && z == 2, || format!("omni2 left center: library {z}, oracle {oracle}"))?;
    Ok("abelian n^k for n, k <= 3; H^0(ad) = Z on all fixtures; omni2 Z dim 2".into())
}

fn shuffle_oracle() -> Outcome {
    let mut total = 0;
    for (k, q) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let mut brute: Vec<(Vec<usize>, i8)> = (0..k + q)
            .permutations(k + q)
            .filter(|p| p[..k].windows(2).all(|w| w[0] < w[1]) && p[k..].windows(2).all(|w| w[0] < w[1]))
            .map(|p| {
                let inv = (0..p.len()).tuple_combinations().filter(|&(i, j)| p[i] > p[j]).count();
                (p, if inv % 2 == 0 { 1 } else { -1 })
            })
            .collect();
        let mut lib: Vec<(Vec<usize>, i8)> = shuffles(k, q).into_iter().map(|s| (s.perm, s.sign)).collect();
        brute.sort();
        lib.sort();
        ensure(brute == lib, || format!("({k},{q}): generator {lib:?} vs brute force {brute:?}"))?;
        total += lib.len();
    }
    Ok(format!("{total} shuffles match"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Leibniz validity", Duration::from_secs(1), leibniz_validity),
        ("Jacobiator identities", Duration::from_secs(5), jacobiator_suite),
        ("Lie 2-algebra axioms", Duration::from_secs(5), lie2_suite),
        ("complex property", Duration::from_secs(30), complex_property),
        ("graded bracket", Duration::from_secs(5), graded_equivalence),
        ("Maurer-Cartan", Duration::from_secs(10), maurer_cartan_suite),
        ("right action cocycle", Duration::from_secs(5), cocycle_suite),
        ("naive cohomology", Duration::from_secs(60), theorem_suite),
        ("pinned numbers", Duration::from_secs(5), pinned_numbers),
        ("shuffle oracle", Duration::from_secs(1), shuffle_oracle),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > budget => ("FAIL", format!("took {elapsed:.2?}, budget {budget:?}")),
            Ok(detail) => ("PASS", detail),
            Err(why) => ("FAIL", why),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} {name} [{elapsed:.2?}]: {detail}", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
