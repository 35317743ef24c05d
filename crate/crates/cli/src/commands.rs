//! One function per subcommand. Usage and input errors are `Err(message)`; check outcomes go in the report.

use crate::gsa::{self, Item, Workspace};
use crate::report::Report;
use crate::{Cli, CocycleCheck, Command, Op, TheoryArg, What};
use std::path::Path;
use superlr::cohomology::{
    check_1cocycle, check_2cocycle, transfer_1cocycle, verify_cob_tau_lemma, CohomologyError, Complex, Theory,
};
use superlr::constructions::{
    check_supertrace, check_trace_module_condition, induce_3lr, reduce_binary, semidirect_sum, tensor_lift,
    trivial_extension, ConstructionError,
};
use superlr::deformations::{
    apply_equivalence, check_deformation, infinitesimal, infinitesimal_class_invariant, push_past_coboundary,
    DeformationError, FormalAutomorphism, FormalDeformation,
};
use superlr::scalar::parse_scalar;
use superlr::structures::{
    adjoint_rep, adjoint_rep_lr, algebra_module_3lr, algebra_module_lr, check_3lie_rinehart, check_3lie_super,
    check_homomorphism, check_ideal, check_lie_rinehart, check_lie_super, check_module_3lr, check_module_lr,
    check_structural_identities, kernel_of_anchor, scalar_module_3lr, scalar_module_lr, LieRinehartStructure,
    RepresentationAction, ThreeLieRinehartStructure,
};
use superlr::{Element, GradedSpace, MultilinearMap, SignConvention};

type Res<T> = Result<T, String>;

pub fn load(path: &Path) -> Res<Workspace> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    gsa::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_out(path: &Path, ws: &Workspace) -> Res<()> {
    std::fs::write(path, gsa::serialize(ws)).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn dispatch(cli: &Cli, echo: &[String]) -> Res<Report> {
    let conv = if cli.literal_signs { SignConvention::Literal } else { SignConvention::Consistent };
    let mut report = Report::new(echo);
    let ctx = Ctx { conv, strict: cli.strict_alternating };
    match &cli.command {
        Command::Verify { file, what } => verify(&load(file)?, what, &ctx, &mut report)?,
        Command::Induce { file, trace, structure, output } => {
            let mut ws = load(file)?;
            induce(&mut ws, trace, structure.as_deref(), &mut report)?;
            if let Some(o) = output {
                write_out(o, &ws)?;
            }
        }
        Command::Reduce { file, at, structure, output } => {
            let mut ws = load(file)?;
            reduce(&mut ws, at, structure.as_deref(), &mut report)?;
            if let Some(o) = output {
                write_out(o, &ws)?;
            }
        }
        Command::Construct { file, op, structure, module, output } => {
            let mut ws = load(file)?;
            construct(&mut ws, *op, structure.as_deref(), module.as_deref(), &ctx, &mut report)?;
            if let Some(o) = output {
                write_out(o, &ws)?;
            }
        }
        Command::Cohomology { file, theory, degree, parity, module, structure } => {
            let ws = load(file)?;
            cohomology(&ws, *theory, *degree, *parity, module.as_deref(), structure.as_deref(), &ctx, &mut report)?
        }
        Command::Cocycle { file, check, cochain, other, structure, trace, module } => {
            let ws = load(file)?;
            let names = Names {
                cochain: cochain.as_deref(),
                other: other.as_deref(),
                structure: structure.as_deref(),
                trace: trace.as_deref(),
                module: module.as_deref(),
            };
            cocycle(&ws, *check, &names, &ctx, &mut report)?
        }
        Command::Deform { file, order, deformation, equiv, push } => {
            let mut ws = load(file)?;
            if let Some(e) = equiv {
                merge(&mut ws, &load(e)?)?;
            }
            deform(&ws, *order, deformation.as_deref(), equiv.is_some(), *push, &ctx, &mut report)?
        }
    }
    Ok(report)
}

struct Ctx {
    conv: SignConvention,
    strict: bool,
}

struct Names<'a> {
    cochain: Option<&'a str>,
    other: Option<&'a str>,
    structure: Option<&'a str>,
    trace: Option<&'a str>,
    module: Option<&'a str>,
}

fn merge(ws: &mut Workspace, other: &Workspace) -> Res<()> {
    for (name, item) in other.items() {
        match ws.get(name) {
            Some(existing) if existing == item => {}
            Some(_) => return Err(format!("`{name}` is defined differently in the two files")),
            None => ws.insert(name.clone(), item.clone()).map_err(|e| e.to_string())?,
        }
    }
    Ok(())
}

fn structures_of(ws: &Workspace, theory: Theory) -> Vec<String> {
    ws.names_of("structure").into_iter().filter(|n| ws.theory_of(n).ok() == Some(theory)).collect()
}

/// The named item, or the only candidate when no name is given.
fn pick(candidates: Vec<String>, given: Option<&str>, what: &str, flag: &str) -> Res<String> {
    match given {
        Some(g) if candidates.iter().any(|c| c == g) => Ok(g.to_string()),
        Some(g) => Err(format!("no {what} named `{g}`")),
        None => match candidates.as_slice() {
            [one] => Ok(one.clone()),
            [] => Err(format!("the file defines no {what}")),
            _ => Err(format!("several {what}s are defined; choose one with --{flag}")),
        },
    }
}

fn pick_structure(ws: &Workspace, theory: Theory, given: Option<&str>) -> Res<String> {
    let label = match theory {
        Theory::Lr => "lr structure",
        Theory::ThreeLr => "3lr structure",
    };
    pick(structures_of(ws, theory), given, label, "structure")
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn verify(ws: &Workspace, what: &[What], ctx: &Ctx, report: &mut Report) -> Res<()> {
    let all =
        [What::Lie, What::ThreeLie, What::Lr, What::ThreeLr, What::Module, What::Homo, What::Identities, What::Trace];
    let selected: Vec<What> = if what.is_empty() { all.to_vec() } else { what.to_vec() };
    for w in all.iter().filter(|w| selected.contains(w)) {
        match w {
            What::Lie | What::ThreeLie => {
                let arity = if *w == What::Lie { 2 } else { 3 };
                for name in ws.names_of("bracket") {
                    let b = ws.bracket(&name).map_err(err)?;
                    if b.arity() == arity {
                        let r = if arity == 2 { check_lie_super(&b) } else { check_3lie_super(&b) };
                        report.check(&name, &r);
                    }
                }
            }
            What::Lr => {
                for name in structures_of(ws, Theory::Lr) {
                    report.check(&name, &check_lie_rinehart(&ws.lr(&name).map_err(err)?));
                }
            }
            What::ThreeLr => {
                for name in structures_of(ws, Theory::ThreeLr) {
                    report.check(&name, &check_3lie_rinehart(&ws.three_lr(&name).map_err(err)?, false));
                }
            }
            What::Module => {
                for name in ws.names_of("module") {
                    let (sname, m) = ws.module(&name).map_err(err)?;
                    let r = match ws.theory_of(&sname).map_err(err)? {
                        Theory::Lr => check_module_lr(&m, &ws.lr(&sname).map_err(err)?),
                        Theory::ThreeLr => check_module_3lr(&m, &ws.three_lr(&sname).map_err(err)?),
                    };
                    report.check(&name, &r);
                }
            }
            What::Homo => {
                for name in ws.names_of("homomorphism") {
                    let (g, f, src, dst) = ws.homomorphism(&name).map_err(err)?;
                    report.check(&name, &check_homomorphism(&g, &f, &src, &dst));
                }
            }
            What::Identities => {
                for name in structures_of(ws, Theory::ThreeLr) {
                    let s = ws.three_lr(&name).map_err(err)?;
                    report.check(&name, &check_structural_identities(&s, ctx.conv));
                    let k = kernel_of_anchor(&s);
                    report.result(&format!("{name}.kernel_of_anchor_dim"), k.len());
                    report.check(&name, &check_ideal(&k, &s));
                }
            }
            What::Trace => {
                for tname in ws.names_of("trace") {
                    let tau = ws.trace(&tname).map_err(err)?;
                    let Some(Item::Trace { space, .. }) = ws.get(&tname) else { unreachable!() };
                    for sname in structures_of(ws, Theory::Lr) {
                        let s = ws.lr(&sname).map_err(err)?;
                        if s.space.label() == space {
                            let subject = format!("{tname} on {sname}");
                            report.check(&subject, &check_supertrace(&tau, &s));
                            report.check(&subject, &check_trace_module_condition(&tau, &s));
                        }
                    }
                }
            }
        }
    }
    if report.checks.is_empty() {
        return Err("nothing to verify: the file has no definitions of the requested kinds".into());
    }
    report.result("checks", report.checks.len());
    Ok(())
}

fn refusal(report: &mut Report, subject: &str, e: ConstructionError) {
    match e {
        ConstructionError::Precondition(r) => report.check(subject, &r),
        other => report.fail("refused", subject, other.to_string()),
    }
}

fn induce(ws: &mut Workspace, trace: &str, structure: Option<&str>, report: &mut Report) -> Res<()> {
    let sname = pick_structure(ws, Theory::Lr, structure)?;
    let s = ws.lr(&sname).map_err(err)?;
    let tau = ws.trace(trace).map_err(err)?;
    if tau.values.len() != s.dim() {
        return Err(format!("trace `{trace}` is not defined on the space of `{sname}`"));
    }
    let subject = format!("{trace} on {sname}");
    report.check(&subject, &check_supertrace(&tau, &s));
    report.check(&subject, &check_trace_module_condition(&tau, &s));
    if !report.passed {
        return Ok(());
    }
    match induce_3lr(&s, &tau) {
        Ok(s3) => {
            let name = ws.add_three_lr(&format!("{sname}_{trace}"), &s3);
            report.check(&name, &check_3lie_rinehart(&s3, false));
            report.result("structure", name);
        }
        Err(e) => refusal(report, &subject, e),
    }
    Ok(())
}

/// Parses `e1 + 2*e3 - 1/2*e2`; indices are 1-based.
pub fn parse_element(text: &str, dim: usize) -> Res<Element> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty element".into());
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with(['*', '/']) && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut out = Element::zero();
    for t in terms {
        let bad = || format!("cannot read `{t}` as a term `c*eK`");
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body == "0" {
            continue;
        }
        let (coef, basis) = match body.rsplit_once('*') {
            Some((c, b)) => (parse_scalar(c).map_err(|_| bad())?, b),
            None => (superlr::scalar::one(), body),
        };
        let k: usize = basis.strip_prefix('e').and_then(|k| k.parse().ok()).ok_or_else(bad)?;
        if k == 0 || k > dim {
            return Err(format!("basis index {k} out of range 1..={dim}"));
        }
        let c = if neg { -coef } else { coef };
        out.add_at(k - 1, &c);
    }
    Ok(out)
}

fn reduce(ws: &mut Workspace, at: &str, structure: Option<&str>, report: &mut Report) -> Res<()> {
    let sname = pick_structure(ws, Theory::ThreeLr, structure)?;
    let s = ws.three_lr(&sname).map_err(err)?;
    let x0 = parse_element(at, s.dim())?;
    match reduce_binary(&s, &x0) {
        Ok(lr) => {
            let name = ws.add_lr(&format!("{sname}_reduced"), &lr);
            report.check(&name, &check_lie_rinehart(&lr));
            report.result("structure", name);
        }
        Err(e) => refusal(report, &sname, e),
    }
    report.result("base_point", x0.display());
    Ok(())
}

/// `adjoint`, `algebra`, `scalar` or a module declared for the structure.
fn module_3lr(ws: &Workspace, sname: &str, s: &ThreeLieRinehartStructure, which: &str) -> Res<RepresentationAction> {
    Ok(match which {
        "adjoint" => adjoint_rep(s),
        "algebra" => algebra_module_3lr(s),
        "scalar" => scalar_module_3lr(s),
        name => declared_module(ws, sname, name)?,
    })
}

fn module_lr(ws: &Workspace, sname: &str, s: &LieRinehartStructure, which: &str) -> Res<RepresentationAction> {
    Ok(match which {
        "adjoint" => adjoint_rep_lr(s),
        "algebra" => algebra_module_lr(s),
        "scalar" => scalar_module_lr(s),
        name => declared_module(ws, sname, name)?,
    })
}

fn declared_module(ws: &Workspace, sname: &str, name: &str) -> Res<RepresentationAction> {
    let (for_structure, m) = ws.module(name).map_err(err)?;
    if for_structure != sname {
        return Err(format!("module `{name}` is declared for `{for_structure}`, not `{sname}`"));
    }
    Ok(m)
}

fn construct(
    ws: &mut Workspace,
    op: Op,
    structure: Option<&str>,
    module: Option<&str>,
    ctx: &Ctx,
    report: &mut Report,
) -> Res<()> {
    let sname = pick_structure(ws, Theory::ThreeLr, structure)?;
    let s = ws.three_lr(&sname).map_err(err)?;
    let (suffix, built) = match op {
        Op::Tensor => ("tensor", tensor_lift(&s, ctx.conv)),
        Op::Extension => ("extension", trivial_extension(&s)),
        Op::Semidirect => {
            let which = module.unwrap_or("adjoint");
            let psi = module_3lr(ws, &sname, &s, which)?;
            report.result("module", which);
            ("semidirect", semidirect_sum(&s, &psi, ctx.conv))
        }
    };
    match built {
        Ok(out) => {
            let name = ws.add_three_lr(&format!("{sname}_{suffix}"), &out);
            report.check(&name, &check_3lie_rinehart(&out, false));
            report.result("structure", name);
            report.result("dim", out.dim());
        }
        Err(e) => refusal(report, &sname, e),
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cohomology(
    ws: &Workspace,
    theory: TheoryArg,
    degree: usize,
    parity: u8,
    module: Option<&str>,
    structure: Option<&str>,
    ctx: &Ctx,
    report: &mut Report,
) -> Res<()> {
    let which = module.unwrap_or("adjoint");
    let complex = match theory {
        TheoryArg::Lr => {
            let sname = pick_structure(ws, Theory::Lr, structure)?;
            let s = ws.lr(&sname).map_err(err)?;
            let m = module_lr(ws, &sname, &s, which)?;
            report.check(&sname, &check_module_lr(&m, &s));
            report.result("structure", sname);
            Complex::lr(&s, &m, ctx.conv)
        }
        TheoryArg::ThreeLr => {
            let sname = pick_structure(ws, Theory::ThreeLr, structure)?;
            let s = ws.three_lr(&sname).map_err(err)?;
            let m = module_3lr(ws, &sname, &s, which)?;
            report.check(&sname, &check_module_3lr(&m, &s));
            report.result("structure", sname);
            Complex::three_lr(&s, &m, ctx.conv, ctx.strict)
        }
    };
    let c = complex.cohomology(degree, parity);
    report.check(which, &complex.check_square_zero(degree, parity));
    report.result("module", which);
    report.result("degree", degree);
    report.result("parity", parity);
    report.result("arity", complex.shape(degree, parity).arity());
    report.result("dim_cochains", c.dim_cochains);
    report.result("dim_cocycles", c.dim_cocycles);
    report.result("dim_coboundaries", c.dim_coboundaries);
    report.result("dim_cohomology", c.dim_h);
    Ok(())
}

/// The module a cochain takes values in: the explicit choice, else inferred from its target space.
fn infer_module(
    ws: &Workspace,
    sname: &str,
    structure_space: &str,
    algebra_space: &str,
    target: &str,
    given: Option<&str>,
) -> Res<String> {
    if let Some(g) = given {
        return Ok(g.to_string());
    }
    if target == structure_space {
        return Ok("adjoint".into());
    }
    if target == algebra_space {
        return Ok("algebra".into());
    }
    for m in ws.names_of("module") {
        if let Some(Item::Module { carrier, structure, .. }) = ws.get(&m) {
            if carrier == target && structure == sname {
                return Ok(m);
            }
        }
    }
    match ws.get(target) {
        Some(Item::Space { parity }) if parity == &[0] => Ok("scalar".into()),
        _ => Err(format!("cannot tell which module `{target}` carries; pass --module")),
    }
}

/// Reads a cochain on `l` with values in the module carrier.
fn cochain_into(map: &MultilinearMap, l: &GradedSpace, m: &RepresentationAction, name: &str) -> Res<MultilinearMap> {
    if map.domain(0).parities() != l.parities() || map.codomain().parities() != m.carrier.parities() {
        return Err(format!("cochain `{name}` does not map the structure's space into the module"));
    }
    Ok(map.retarget(vec![l.clone(); map.arity()], m.carrier.clone()))
}

fn components(ws: &Workspace, sname: &str) -> (String, String) {
    match ws.get(sname) {
        Some(Item::Structure { space, algebra, .. }) => {
            let alg_space = match ws.get(algebra) {
                Some(Item::Algebra { space, .. }) => space.clone(),
                _ => String::new(),
            };
            (space.clone(), alg_space)
        }
        _ => (String::new(), String::new()),
    }
}

fn cochain_target(ws: &Workspace, name: &str) -> Res<String> {
    match ws.get(name) {
        Some(Item::Cochain { target, .. }) => Ok(target.clone()),
        _ => Err(format!("no cochain named `{name}`")),
    }
}

fn cohomology_failure(report: &mut Report, subject: &str, e: CohomologyError) {
    match e {
        CohomologyError::Refused(r) => report.check(subject, &r),
        other => report.fail("cochain", subject, other.to_string()),
    }
}

fn expect_arity(map: &MultilinearMap, arity: usize, name: &str) -> Res<()> {
    if map.arity() != arity {
        return Err(format!("cochain `{name}` has {} arguments, this check needs {arity}", map.arity()));
    }
    Ok(())
}

fn cocycle(ws: &Workspace, check: CocycleCheck, names: &Names, ctx: &Ctx, report: &mut Report) -> Res<()> {
    let cname = pick(ws.names_of("cochain"), names.cochain, "cochain", "cochain")?;
    let raw = ws.cochain(&cname).map_err(err)?;
    let target = cochain_target(ws, &cname)?;
    match check {
        CocycleCheck::One | CocycleCheck::Two | CocycleCheck::Class => {
            let sname = pick_structure(ws, Theory::ThreeLr, names.structure)?;
            let s = ws.three_lr(&sname).map_err(err)?;
            let (ls, als) = components(ws, &sname);
            let which = infer_module(ws, &sname, &ls, &als, &target, names.module)?;
            let psi = module_3lr(ws, &sname, &s, &which)?;
            let phi = cochain_into(&raw, &s.space, &psi, &cname)?;
            report.result("module", which.clone());
            match check {
                CocycleCheck::One => {
                    expect_arity(&phi, 1, &cname)?;
                    report.check(&cname, &check_1cocycle(&phi, &s, &psi, ctx.conv));
                }
                CocycleCheck::Two => {
                    expect_arity(&phi, 3, &cname)?;
                    report.check(&cname, &check_2cocycle(&phi, &s, &psi, ctx.conv));
                }
                _ => {
                    let oname = names.other.ok_or("--check class needs --other <cochain>")?;
                    let other = cochain_into(&ws.cochain(oname).map_err(err)?, &s.space, &psi, oname)?;
                    let complex = Complex::three_lr(&s, &psi, ctx.conv, ctx.strict);
                    let subject = format!("{cname} ~ {oname}");
                    match complex.same_class(&phi, &other) {
                        Ok(Some(w)) => {
                            report.check(&subject, &superlr::CheckReport::new("same_class"));
                            report.witness_map("primitive", &w);
                        }
                        Ok(None) => report.fail("same_class", subject, "the difference is not a coboundary"),
                        Err(e) => cohomology_failure(report, &subject, e),
                    }
                }
            }
        }
        CocycleCheck::Transfer | CocycleCheck::Lemma => {
            let sname = pick_structure(ws, Theory::Lr, names.structure)?;
            let s = ws.lr(&sname).map_err(err)?;
            let tname = pick(ws.names_of("trace"), names.trace, "trace", "trace")?;
            let tau = ws.trace(&tname).map_err(err)?;
            if tau.values.len() != s.dim() {
                return Err(format!("trace `{tname}` is not defined on the space of `{sname}`"));
            }
            let subject = format!("{tname} on {sname}");
            report.check(&subject, &check_supertrace(&tau, &s));
            report.check(&subject, &check_trace_module_condition(&tau, &s));
            let (ls, als) = components(ws, &sname);
            let which = if check == CocycleCheck::Transfer {
                "scalar".to_string()
            } else {
                infer_module(ws, &sname, &ls, &als, &target, names.module)?
            };
            let theta = module_lr(ws, &sname, &s, &which)?;
            let phi = cochain_into(&raw, &s.space, &theta, &cname)?;
            expect_arity(&phi, 1, &cname)?;
            report.result("module", which);
            let out = if check == CocycleCheck::Transfer {
                transfer_1cocycle(&phi, &s, &tau, ctx.conv)
            } else {
                verify_cob_tau_lemma(&phi, &s, &theta, &tau, ctx.conv)
            };
            match out {
                Ok(r) => report.check(&cname, &r),
                Err(e) => cohomology_failure(report, &cname, e),
            }
        }
    }
    Ok(())
}

fn truncated(d: &FormalDeformation, order: usize) -> Res<FormalDeformation> {
    let zero = MultilinearMap::power(&d.base.space, 3, &d.base.space, 0);
    let terms = (1..=order).map(|i| if i <= d.order() { d.term(i).clone() } else { zero.clone() }).collect();
    FormalDeformation::new(d.base.clone(), terms).map_err(err)
}

fn automorphism_truncated(phi: &FormalAutomorphism, order: usize) -> Res<FormalAutomorphism> {
    let zero = MultilinearMap::power(&phi.space, 1, &phi.space, 0);
    let terms = (0..order).map(|i| phi.terms().get(i).cloned().unwrap_or_else(|| zero.clone())).collect();
    FormalAutomorphism::new(phi.space.clone(), terms).map_err(err)
}

fn report_terms(report: &mut Report, prefix: &str, d: &FormalDeformation) {
    for (i, m) in d.terms().iter().enumerate() {
        if !m.is_zero() {
            report.witness_map(&format!("{prefix}m{}", i + 1), m);
        }
    }
}

fn deform(
    ws: &Workspace,
    order: usize,
    deformation: Option<&str>,
    equiv: bool,
    push: bool,
    ctx: &Ctx,
    report: &mut Report,
) -> Res<()> {
    let dname = pick(ws.names_of("deformation"), deformation, "deformation", "deformation")?;
    let d = truncated(&ws.deformation(&dname).map_err(err)?, order)?;
    report.result("order", order);
    report.check(&dname, &check_deformation(&d));
    if let Ok((n, _)) = infinitesimal(&d) {
        report.result("infinitesimal_order", n);
    }
    if equiv {
        let aname = pick(ws.names_of("automorphism"), None, "automorphism", "equiv")?;
        let phi = automorphism_truncated(&ws.automorphism(&aname).map_err(err)?, order)?;
        if phi.space != d.base.space {
            return Err(format!("automorphism `{aname}` is not defined on the space of the deformation"));
        }
        let moved = apply_equivalence(&d, &phi).map_err(err)?;
        let subject = format!("{dname} moved by {aname}");
        report.check(&subject, &check_deformation(&moved));
        if order > 0 {
            report.check(&subject, &infinitesimal_class_invariant(&d, &phi, ctx.conv).map_err(err)?);
        }
        report_terms(report, "moved.", &moved);
    }
    if push {
        let subject = format!("{dname} pushed");
        match push_past_coboundary(&d, ctx.conv) {
            Ok(p) => {
                report.check(&subject, &check_deformation(&p));
                match infinitesimal(&p) {
                    Ok((n, _)) => report.result("pushed_infinitesimal_order", n),
                    Err(_) => report.result("pushed_trivial", true),
                }
                report_terms(report, "pushed.", &p);
            }
            Err(DeformationError::Trivial(_)) => report.result("pushed_trivial", true),
            Err(DeformationError::NotCoboundary(n)) => {
                report.fail("push", subject, format!("the {n}-infinitesimal is not a coboundary"))
            }
            Err(DeformationError::Cohomology(CohomologyError::Refused(r))) => report.check(&subject, &r),
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(())
}
