//! The `.gsa` fixtures shipped in `fixtures/`, generated from the library's fixture constructors.

use crate::gsa::{serialize, Workspace};
use superlr::cohomology::Complex;
use superlr::deformations::{apply_equivalence, check_deformation, FormalAutomorphism, FormalDeformation};
use superlr::fixtures::{a4, lr_fixtures, LrFixture};
use superlr::sampling::{random_even_endomorphism, rng};
use superlr::scalar::int;
use superlr::structures::{adjoint_rep, check_lie_super};
use superlr::SignConvention;

fn lr_workspace(f: &LrFixture) -> Workspace {
    let mut ws = Workspace::new();
    ws.add_lr(f.name, &f.structure);
    ws.add_trace("tau", &f.structure.space, &f.trace);
    ws
}

/// `(file name, canonical text)` for every shipped fixture.
pub fn fixture_files() -> Vec<(String, String)> {
    let mut out = Vec::new();
    let mut write = |name: &str, ws: &Workspace| out.push((name.to_string(), serialize(ws)));
    for f in lr_fixtures() {
        write(&format!("{}.gsa", f.name), &lr_workspace(&f));
        let mut ws = Workspace::new();
        ws.add_three_lr(&format!("{}_induced", f.name), &f.induced());
        write(&format!("{}_induced.gsa", f.name), &ws);
    }
    let mut ws = Workspace::new();
    ws.add_three_lr("a4", &a4());
    write("a4.gsa", &ws);

    let gl11 = lr_fixtures().into_iter().find(|f| f.name == "gl11").expect("gl11");
    let mut broken = gl11.structure.clone();
    broken.bracket.set_unchecked(&[0, 2], 2, int(2));
    broken.bracket.set_unchecked(&[2, 0], 2, int(-2));
    assert!(!check_lie_super(&broken.bracket).passed);
    let mut ws = Workspace::new();
    ws.add_lr("gl11_broken", &broken);
    write("gl11_broken.gsa", &ws);

    let base = gl11.induced();
    let complex = Complex::three_lr(&base, &adjoint_rep(&base), SignConvention::Consistent, false);
    let strict = Complex::three_lr(&base, &adjoint_rep(&base), SignConvention::Consistent, true);
    let m1 = strict
        .space(1, 0)
        .basis_maps()
        .into_iter()
        .find(|m| !complex.coboundary(m).expect("cochain").is_zero())
        .expect("a cochain with nonzero coboundary");
    let planted = FormalDeformation::new(base.clone(), vec![m1]).expect("even skew term");
    let report = check_deformation(&planted);
    assert!(!report.passed && report.labels().iter().all(|l| l.starts_with("residual")));
    let mut ws = Workspace::new();
    let bname = ws.add_three_lr("gl11_induced", &base);
    ws.add_deformation("planted", &bname, &planted);
    write("deform_noncocycle.gsa", &ws);

    let base = gl11.induced();
    let phi = random_even_endomorphism(&base.space, &mut rng(7));
    let auto = FormalAutomorphism::monomial(phi, 1, 2).expect("order 2");
    let moved = apply_equivalence(&FormalDeformation::trivial(base.clone(), 2), &auto).expect("same order");
    assert!(check_deformation(&moved).passed);
    let mut ws = Workspace::new();
    let bname = ws.add_three_lr("gl11_induced", &base);
    ws.add_deformation("moved", &bname, &moved);
    write("deform_coboundary.gsa", &ws);

    let mut ws = Workspace::new();
    ws.add_automorphism("phi", &auto);
    write("auto.gsa", &ws);
    out
}
