use super::{CurveId, CurveModel};
use crate::error::Result;
use crate::exactmath::{CurveFunction, FunctionField, PrimeField, RationalMap, Ring};
use crate::report::{Check, Status};

/// Prime used for the evaluation oracle at random points.
const ORACLE_PRIME: u64 = 1_000_003;
const ORACLE_POINTS: usize = 20;

/// A pair of mutually inverse rational maps, written as text in the
/// coordinates of the source and the target model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirationalPair {
    pub name: &'static str,
    pub source: CurveId,
    pub target: CurveId,
    pub forward: Vec<&'static str>,
    pub backward: Vec<&'static str>,
}

/// Second coordinate of the printed map from t^2 = 5mu^4 - 8mu^3 + 6mu^2 + 8mu + 5 to E17.
pub const PRINTED_E17_FORWARD_Y: &str = "-(3mu^3 + mu t - 5mu^2 + 9mu + 1)/(2(mu-1)^3)";

fn pair(
    name: &'static str,
    source: CurveId,
    target: CurveId,
    forward: [&'static str; 2],
    backward: &[&'static str],
) -> BirationalPair {
    BirationalPair { name, source, target, forward: forward.to_vec(), backward: backward.to_vec() }
}

/// The birational maps as printed alongside each classifying curve.
pub fn printed_pairs() -> Vec<BirationalPair> {
    vec![
        BirationalPair {
            name: "conic_p1p2-p1",
            source: CurveId::ConicP1P2,
            target: CurveId::Line,
            forward: vec!["(1-rho)/sigma"],
            backward: vec!["-(mu^2+1)/(mu^2-1)", "2mu/(mu^2-1)"],
        },
        pair(
            "q24-e24",
            CurveId::Q24,
            CurveId::E24,
            ["(t+2)/(eta-1)^2", "(2eta^3 - 2eta^2 - 2eta - 6 - 4t)/(2(eta-1)^3)"],
            &["(x^2-2y-1)/(x^2+1)", "(2x^4 - 4x^3 + 8xy + 4x - 2)/(x^2+1)^2"],
        ),
        pair(
            "q40-e40",
            CurveId::Q40,
            CurveId::E40,
            ["(t+2nu^2)/(nu-1)^2", "-(3nu^3 + 2nu t + 3nu^2 - 3nu + 1)/(nu-1)^3"],
            &["(x^2-2y)/(x^2-4x+2)", "(2x^4 - 8x^2 y + 8x^3 + 8xy - 24x^2 + 24x - 8)/(x^2-4x+2)^2"],
        ),
        pair(
            "q15-e15",
            CurveId::Q15,
            CurveId::E15,
            ["(t+mu^2+4mu-1)/(2(mu-1)^2)", "-(2mu^3 + mu t + mu^2 + 2mu - 1)/(mu-1)^3"],
            &["(x^2-2y+x-1)/(x^2-x-1)", "(4x^4 - 12x^2 y + 8x^3 - 8xy + 8x^2 + 4x - 8y - 4)/(x^2-x-1)^2"],
        ),
        pair(
            "q17-e17",
            CurveId::Q17,
            CurveId::E17,
            ["(t+mu^2+3)/(2(mu-1)^2)", PRINTED_E17_FORWARD_Y],
            &["(x^2-2y-x-1)/(x^2-x-1)", "(4x^4 - 4x^2 y - 4x^3 - 8xy - 4x - 4)/(x^2-x-1)^2"],
        ),
        pair("q11-e11", CurveId::Q11, CurveId::E11, ["(eta+1)/2", "(t-2)/4"], &["2x-1", "4y+2"]),
    ]
}

fn render(cf: &CurveFunction, x: &str, y: &str) -> String {
    let num = match (cf.a.is_zero(), cf.b.is_zero()) {
        (_, true) => cf.a.display_in(x),
        (true, false) => format!("({}){y}", cf.b.display_in(x)),
        (false, false) => format!("{} + ({}){y}", cf.a.display_in(x), cf.b.display_in(x)),
    };
    if cf.d.degree() == Some(0) {
        num
    } else {
        format!("({num})/({})", cf.d.display_in(x))
    }
}

fn render_all(m: &CurveModel, fs: &[CurveFunction]) -> String {
    let y = m.vars.get(1).copied().unwrap_or("");
    fs.iter().map(|f| render(f, m.vars[0], y)).collect::<Vec<_>>().join(", ")
}

fn denominators(m: &CurveModel, fs: &[CurveFunction]) -> String {
    let ds: Vec<String> = fs.iter().filter(|f| f.d.degree() != Some(0)).map(|f| f.d.display_in(m.vars[0])).collect();
    if ds.is_empty() {
        "everywhere defined on the affine part".into()
    } else {
        format!("undefined where {} = 0", ds.join(" or "))
    }
}

/// Images of the generic point; a denominator vanishing identically shows up as `None`.
fn image(map: &RationalMap, ff: &FunctionField, pt: &[CurveFunction]) -> Option<Vec<CurveFunction>> {
    map.apply(ff, pt)
}

fn lands(model: &CurveModel, ff: &FunctionField, pt: &Option<Vec<CurveFunction>>) -> (bool, String) {
    match pt.as_ref().and_then(|p| model.residual(ff, p)) {
        Some(r) => (ff.is_zero(&r), render(&r, "x", "y")),
        None => (false, "undefined".into()),
    }
}

/// Verifies that both maps land on the other curve and compose to the
/// identity in both orders, as identities of rational functions modulo the
/// curve equations, then repeats the tests at random points over F_p.
pub fn verify_birational_pair(pair: &BirationalPair) -> Result<Vec<Check>> {
    let (src, tgt) = (pair.source.model(), pair.target.model());
    let phi = RationalMap::parse(&src.vars, &pair.forward)?;
    let psi = RationalMap::parse(&tgt.vars, &pair.backward)?;
    let (ffs, fft) = (src.function_field(), tgt.function_field());
    let (gs, gt) = (src.generators(), tgt.generators());
    let name = pair.name;

    let phi_img = image(&phi, &ffs, &gs);
    let psi_img = image(&psi, &fft, &gt);
    let mut out = Vec::new();

    let (ok, residual) = lands(&tgt, &ffs, &phi_img);
    let mut c = Check::from_bool(
        format!("{name}.forward_lands"),
        format!("forward map sends {} into {}", src.equation(), tgt.equation()),
        ok,
    )
    .with_value(format!("residual {residual}"));
    if let Some(img) = &phi_img {
        c = c.with_note(format!("forward map {}", denominators(&src, img)));
    }
    out.push(c);

    let (ok, residual) = lands(&src, &fft, &psi_img);
    let mut c = Check::from_bool(
        format!("{name}.backward_lands"),
        format!("backward map sends {} into {}", tgt.equation(), src.equation()),
        ok,
    )
    .with_value(format!("residual {residual}"));
    if let Some(img) = &psi_img {
        c = c.with_note(format!("backward map {}", denominators(&tgt, img)));
    }
    out.push(c);

    let round = phi_img.as_ref().and_then(|p| psi.apply(&ffs, p));
    let ok = round.as_ref() == Some(&gs);
    out.push(
        Check::from_bool(format!("{name}.backward_after_forward"), "backward(forward(P)) = P", ok)
            .with_value(round.map_or("undefined".into(), |r| render_all(&src, &r))),
    );
    let round = psi_img.as_ref().and_then(|p| phi.apply(&fft, p));
    let ok = round.as_ref() == Some(&gt);
    out.push(
        Check::from_bool(format!("{name}.forward_after_backward"), "forward(backward(P)) = P", ok)
            .with_value(round.map_or("undefined".into(), |r| render_all(&tgt, &r))),
    );

    out.push(modular_oracle(pair, &src, &tgt, &phi, &psi));
    Ok(out)
}

fn modular_oracle(pair: &BirationalPair, src: &CurveModel, tgt: &CurveModel, phi: &RationalMap, psi: &RationalMap) -> Check {
    let fp = PrimeField::new(ORACLE_PRIME);
    let mut tested = 0;
    let mut failures = Vec::new();
    for (from, to, there, back, seed) in [(src, tgt, phi, psi, 1u64), (tgt, src, psi, phi, 2u64)] {
        for p in from.random_points_mod_p(&fp, ORACLE_POINTS, seed) {
            let Some(q) = there.apply(&fp, &p) else { continue };
            tested += 1;
            if to.residual(&fp, &q) != Some(0) {
                failures.push(format!("{:?} maps off {}", p, to.id));
                continue;
            }
            if let Some(r) = back.apply(&fp, &q) {
                if r != p {
                    failures.push(format!("{:?} does not return", p));
                }
            }
        }
    }
    let status = if !failures.is_empty() {
        Status::Fail
    } else if tested == 0 {
        Status::Indeterminate
    } else {
        Status::Pass
    };
    let mut c = Check::new(
        format!("{}.mod_p_oracle", pair.name),
        format!("maps agree at random points over F_{ORACLE_PRIME}"),
        status,
    )
    .with_value(format!("{tested} points, {} failures", failures.len()));
    if let Some(first) = failures.first() {
        c = c.with_note(first.clone());
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e11_linear_change() {
        let p = printed_pairs().into_iter().find(|p| p.name == "q11-e11").unwrap();
        let checks = verify_birational_pair(&p).unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:#?}");
    }

    #[test]
    fn conic() {
        let p = printed_pairs().into_iter().find(|p| p.name == "conic_p1p2-p1").unwrap();
        let checks = verify_birational_pair(&p).unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:#?}");
    }
}
