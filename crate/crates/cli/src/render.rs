use gassner_potential::laurent::{LatexNames, LaurentPoly};
use gassner_potential::potential::{Potential, PotentialKind};
use serde_json::json;

use crate::Format;

pub fn potential(f: &Potential, format: Format) -> String {
    match (format, f.kind) {
        (Format::Json, _) => serde_json::to_string(f).expect("serializable"),
        (Format::Text, PotentialKind::Polynomial) => format!("∇ = {}", f.value),
        (Format::Text, PotentialKind::KnotFraction) => {
            format!("D_L = {}\n∇ = D_L / ({})", f.value, f.denominator_text())
        }
        (Format::Latex, PotentialKind::Polynomial) => {
            format!("\\nabla = {}", f.value.to_latex(&LatexNames::default()))
        }
        (Format::Latex, PotentialKind::KnotFraction) => {
            let k = f.knot_color.expect("knot has a color");
            format!(
                "\\nabla = \\frac{{{}}}{{t_{{{k}}} - t_{{{k}}}^{{-1}}}}",
                f.value.to_latex(&LatexNames::default())
            )
        }
    }
}

/// Variable names `t1, …, tμ, x`.
pub fn axis_names(nvars: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..nvars).map(|i| format!("t{i}")).collect();
    names.push("x".into());
    names
}

pub fn axis(a: &LaurentPoly, format: Format) -> String {
    let names = axis_names(a.nvars());
    match format {
        Format::Text => format!("∇_axis = {}", a.to_text(&names)),
        Format::Json => json!({ "variables": names, "value": a }).to_string(),
        Format::Latex => format!("\\nabla_{{A}} = {}", a.to_latex(&LatexNames { axis: true })),
    }
}
