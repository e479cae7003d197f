use leibniz_kit::cohomology::{betti, maurer_cartan_check, semidirect, BettiReport, SemidirectMode};
use leibniz_kit::io::{self, format_rational};
use leibniz_kit::lie2::{build_lie2, check_jacobiator_identities, verify_lie2};
use leibniz_kit::naive::{
    adjoint_naive, compare_adjoint, compare_trivial, graph_rep_cohomology, naive_betti, naive_from_rep,
    tautological_naive, trivial_naive, trivial_naive_space, zero_naive,
};
use leibniz_kit::omni::omni_lie;
use leibniz_kit::{Algebra, ComparisonReport, Error, Limits, Rational, Report, Result};

use crate::input::{self, RepChoice};
use crate::run_report::{Outcome, RunReport};
use crate::Command;

pub fn run(command: &Command, report: &mut RunReport) -> Outcome {
    let result = match command {
        Command::Check { algebra } => check(algebra, report),
        Command::Lie2 { algebra } => lie2(algebra, report),
        Command::Cohomology {
            algebra,
            rep,
            max_degree,
            naive,
            compare,
        } => cohomology(algebra, rep, *max_degree, *naive, *compare, report),
        Command::Mc { algebra, rep } => mc(algebra, rep, report),
        Command::Semidirect { algebra, rep, mode } => semidirect_cmd(algebra, rep, mode, report),
        Command::Omni { dim } => omni(*dim, report),
        Command::Graph { phi, max_degree } => graph(phi, *max_degree, report),
    };
    match result {
        Err(e) => Outcome::from_error(&e),
        Ok(()) if report.all_passed() => Outcome::Pass,
        Ok(()) => Outcome::Fail,
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vector_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn witness_lines(report: &mut RunReport, identities: &Report) {
    for w in &identities.witnesses {
        let line = format!("  {} at {:?}: defect {}", w.check, w.indices, vector_text(&w.defect));
        report.line(line);
    }
    if identities.failures > identities.witnesses.len() {
        report.line(format!(
            "  ... {} failures in total",
            identities.failures
        ));
    }
}

fn check(path: &str, report: &mut RunReport) -> Result<()> {
    let g = input::algebra(path, report)?;
    let leibniz = g.check_leibniz();
    let center = g.left_center();
    let derived = g.derived_subalgebra();
    let squares = g.square_in_center_check();

    report.line(format!("algebra: {path} (dim {})", g.dim()));
    report.line(format!("Leibniz: {}", yes_no(leibniz.holds)));
    witness_lines(report, &leibniz);
    let basis: Vec<String> = center.basis.iter().map(|b| vector_text(b)).collect();
    report.line(format!("left center: dim {} basis [{}]", center.dim(), basis.join(", ")));
    report.line(format!("derived subalgebra: dim {}", derived.dim()));
    report.line(format!("Lie: {}", yes_no(g.is_lie())));
    report.line(format!("squares in left center: {}", yes_no(squares.holds)));

    report.check("leibniz", leibniz.holds);
    report.result("leibniz", io::identity_report_to_json(&leibniz));
    report.result("left_center_dim", center.dim().into());
    report.result(
        "left_center_basis",
        center.basis.iter().map(|b| b.iter().map(format_rational).collect::<Vec<_>>()).collect::<Vec<_>>().into(),
    );
    report.result("derived_dim", derived.dim().into());
    report.result("is_lie", g.is_lie().into());
    if leibniz.holds {
        report.check("square_in_center", squares.holds);
    }
    report.result("square_in_center", squares.holds.into());
    Ok(())
}

fn lie2(path: &str, report: &mut RunReport) -> Result<()> {
    let g = input::algebra(path, report)?;
    let lie2 = build_lie2(&g)?;
    let axioms = verify_lie2(&lie2);
    let jac = check_jacobiator_identities(&g);

    report.line(format!("algebra: {path} (dim {})", g.dim()));
    report.line(format!("Lie 2-algebra: dim g1 = {}, dim g0 = {}", lie2.dim1, lie2.dim0));
    report.line(format!("l3: {}", if lie2.l3_is_zero() { "zero" } else { "nonzero" }));
    for (name, ok) in axioms.flags() {
        report.line(format!("axiom ({name}): {}", if ok { "pass" } else { "FAIL" }));
        if !ok {
            witness_lines(report, axioms.axiom(name).expect("named axiom"));
        }
        report.check(format!("axiom_{name}"), ok);
    }
    report.line(format!("jacobiator identities: {}", if jac.holds { "pass" } else { "FAIL" }));
    witness_lines(report, &jac);
    report.check("jacobiator_identities", jac.holds);

    report.result("lie2", io::lie2_to_json(&lie2));
    report.result("axioms", io::axiom_report_to_json(&axioms));
    report.result("jacobiator", io::identity_report_to_json(&jac));
    Ok(())
}

fn betti_table(report: &mut RunReport, title: &str, b: &BettiReport) {
    report.line(title);
    report.line(format!("{:>3} {:>8} {:>8} {:>8} {:>6}", "k", "dim C", "rank d", "dim ker", "dim H"));
    for d in &b.degrees {
        report.line(format!(
            "{:>3} {:>8} {:>8} {:>8} {:>6}",
            d.k, d.dim_c, d.rank_d, d.dim_ker, d.dim_h
        ));
    }
}

fn comparison_table(report: &mut RunReport, c: &ComparisonReport<Rational>) {
    report.line(format!("comparison ({} branch)", c.branch.as_str()));
    report.line(format!("{:>3} {:>8} {:>10} {:>6}", "k", "naive", "classical", "equal"));
    for d in &c.degrees {
        let equal = if d.informational {
            format!("{} (informational)", yes_no(d.equal))
        } else {
            yes_no(d.equal).to_string()
        };
        report.line(format!("{:>3} {:>8} {:>10} {:>6}", d.k, d.dim_naive, d.dim_classical, equal));
    }
    if let Some(corr) = &c.correspondence {
        report.line(format!("correspondence: {}", if corr.holds { "pass" } else { "FAIL" }));
        witness_lines(report, corr);
    }
    report.line(format!("result: {}", if c.holds() { "equal" } else { "DIFFERENT" }));
}

fn cohomology(path: &str, rep: &str, k_max: usize, naive: bool, compare: bool, report: &mut RunReport) -> Result<()> {
    let limits = Limits::from_env()?;
    let g = input::algebra(path, report)?;
    g.require_leibniz()?;
    let choice = RepChoice::parse(rep);
    let rep = choice.build(&g, report)?;
    rep.require_valid()?;

    let classical = betti(&rep, k_max, &limits)?;
    report.line(format!("algebra: {path} (dim {}), representation: {} (dim {})", g.dim(), choice.label(), rep.vdim));
    betti_table(report, "Leibniz cohomology", &classical);
    report.result("betti", io::betti_to_json(&classical));

    if naive {
        let rho = match &choice {
            RepChoice::Trivial => match trivial_naive_space(&g).basis.first() {
                Some(xi) => trivial_naive(&g, xi)?,
                None => zero_naive(&g),
            },
            RepChoice::Adjoint => adjoint_naive(&g)?,
            RepChoice::File(_) => naive_from_rep(&rep)?,
        };
        let b = naive_betti(&rho, k_max, &limits)?;
        betti_table(report, &format!("naive cohomology (image dim {})", rho.image_dim()), &b);
        report.result("naive_betti", io::betti_to_json(&b));
        report.result("naive_representation", io::naive_to_json(&rho));
    }

    if compare {
        let c = match choice {
            RepChoice::Trivial => compare_trivial(&g, k_max, &limits)?,
            RepChoice::Adjoint => compare_adjoint(&g, k_max, &limits)?,
            RepChoice::File(_) => {
                return Err(Error::Input("--compare needs --rep trivial or --rep adjoint".into()));
            }
        };
        comparison_table(report, &c);
        report.check("comparison", c.holds());
        report.result("comparison", io::comparison_to_json(&c));
    }
    Ok(())
}

fn mc(path: &str, rep: &str, report: &mut RunReport) -> Result<()> {
    let g = input::algebra(path, report)?;
    let choice = RepChoice::parse(rep);
    let rep = choice.build(&g, report)?;
    let mc = maurer_cartan_check(&rep)?;
    report.line(format!("algebra: {path} (dim {}), representation: {} (dim {})", g.dim(), choice.label(), rep.vdim));
    report.line(format!(
        "d rbar - 1/2 [rbar, rbar] = 0 and (l,0) + rbar = (l,r): {}",
        if mc.holds { "holds" } else { "FAILS" }
    ));
    witness_lines(report, &mc);
    report.check("maurer_cartan", mc.holds);
    report.result("maurer_cartan", io::identity_report_to_json(&mc));
    Ok(())
}

fn emit_algebra(h: &Algebra, report: &mut RunReport) {
    let json = io::algebra_to_json(h);
    report.line(io::to_text(&json));
    report.result("algebra", json);
}

fn semidirect_cmd(path: &str, rep: &str, mode: &str, report: &mut RunReport) -> Result<()> {
    let mode: SemidirectMode = mode.parse()?;
    let g = input::algebra(path, report)?;
    let rep = RepChoice::parse(rep).build(&g, report)?;
    let h = semidirect(&rep, mode)?;
    emit_algebra(&h, report);
    Ok(())
}

fn omni(m: usize, report: &mut RunReport) -> Result<()> {
    let limits = Limits::from_env()?;
    let dim = m * m + m;
    limits.check("omni-Lie structure tensor (dim^3 entries)", dim.saturating_mul(dim).saturating_mul(dim))?;
    let g: Algebra = omni_lie(m);
    emit_algebra(&g, report);
    Ok(())
}

fn graph(path: &str, k_max: usize, report: &mut RunReport) -> Result<()> {
    let limits = Limits::from_env()?;
    let phi = input::graph_map(path, report)?;
    let graph = phi.graph_check();
    report.line(format!("graph map: {path} (dim V = {})", phi.vdim));
    report.line(format!("[phi(u),phi(v)] = phi(phi(u)v): {}", if graph.holds { "holds" } else { "FAILS" }));
    witness_lines(report, &graph);
    report.check("graph", graph.holds);
    report.result("graph", io::identity_report_to_json(&graph));
    if !graph.holds {
        return Ok(());
    }
    let g = phi.induced_leibniz()?;
    report.line(format!("induced bracket [u,v] = phi(u)v: Leibniz {}", yes_no(g.is_leibniz())));
    report.result("induced_algebra", io::algebra_to_json(&g));
    let rho = tautological_naive(&phi)?;
    let c = graph_rep_cohomology(&rho, &phi, k_max, &limits)?;
    comparison_table(report, &c);
    report.check("graph_comparison", c.holds());
    report.result("comparison", io::comparison_to_json(&c));
    Ok(())
}
