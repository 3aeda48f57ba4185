//! Rendering of classification reports: canonical JSON and a plain-text
//! summary.

use std::fmt::Write;

use crate::classify::{ClassificationReport, FamilyRecord};
use crate::error::{Error, Result};
use crate::rational;

/// Pretty-printed JSON with a trailing newline. Field order is fixed by the
/// type definitions and all collections are pre-sorted, so the output is
/// byte-stable and survives a parse/serialize round trip unchanged.
pub fn to_json(report: &ClassificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<ClassificationReport> {
    serde_json::from_str(s).map_err(|e| Error::MalformedReport(e.to_string()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt_q(x: &Option<rational::Q>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), rational::format)
}

fn nodes(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// Human-readable description of the level, e.g.
/// `non-simple vacuum: yes (u=4, v=1); critical: no`.
pub fn level_line(report: &ClassificationReport) -> String {
    let d = &report.level_diagnostic;
    let vacuum = match (&d.u, &d.v) {
        (Some(u), Some(v)) if d.nonsimple_vacuum => format!("yes (u={u}, v={v})"),
        _ => yes_no(d.nonsimple_vacuum).to_string(),
    };
    format!("non-simple vacuum: {vacuum}; critical: {}", yes_no(d.critical))
}

fn write_family(out: &mut String, index: usize, f: &FamilyRecord) {
    let kind = if f.coherent { "coherent family" } else { "parabolic family" };
    let _ = writeln!(out, "  [{index}] {kind}, S = {}, Levi {}", nodes(&f.subset), f.levi_shape);
    let gens: Vec<String> = f.generators.iter().map(|g| g.name()).collect();
    let _ = writeln!(out, "      generators: {}", gens.join(", "));
    for ideal in &f.ideals {
        let members: Vec<String> = ideal.component.members.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            out,
            "      ideal {} ({}): component [{}], casimir {}",
            nodes(&ideal.nodes),
            ideal.local_type,
            members.join(", "),
            rational::format(&ideal.casimir)
        );
    }
    let _ = writeln!(out, "      central weight: {}", f.central_weight);
    let _ = writeln!(out, "      conformal weight: {}", opt_q(&f.conformal_weight));
    let _ = writeln!(
        out,
        "      small Weyl group: {} (order {}), twists: {}",
        f.small_weyl.describe(),
        f.small_weyl.order,
        f.twist_count
    );
    for c in &f.findim_constituents {
        let _ = writeln!(out, "      finite-dimensional constituent on {}: {}", nodes(&c.ideal_nodes), c.weight);
    }
    if !f.extra_hw_contained.is_empty() {
        let extra: Vec<String> = f.extra_hw_contained.iter().map(|g| g.name()).collect();
        let _ = writeln!(out, "      also contains: {}", extra.join(", "));
    }
    for note in &f.notes {
        let _ = writeln!(out, "      note: {note}");
    }
}

/// Plain-text report. The last line is always
/// `parabolic families: N, coherent families: M`.
pub fn to_text(report: &ClassificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "algebra {} at level {}", report.algebra, rational::format(&report.level));
    let _ = writeln!(out, "|W| = {}", report.weyl_order);
    let _ = writeln!(out, "{}", level_line(report));
    let _ = writeln!(out);

    let _ = writeln!(out, "highest weights:");
    for hw in &report.highest_weights {
        let _ = writeln!(
            out,
            "  {} = {}: finite-dimensional {}, small Weyl group {} (order {}), twists {}, conformal weight {}",
            hw.input.name(),
            hw.input.weight,
            yes_no(hw.finite_dimensional),
            hw.small_weyl.describe(),
            hw.small_weyl.order,
            hw.twist_count,
            opt_q(&hw.conformal_weight)
        );
    }
    let _ = writeln!(out);

    let _ = writeln!(out, "families:");
    if report.families.is_empty() {
        let _ = writeln!(out, "  none");
    }
    for (i, f) in report.families.iter().enumerate() {
        write_family(&mut out, i + 1, f);
    }
    let _ = writeln!(out);

    let t = &report.totals;
    let _ = writeln!(out, "totals:");
    let _ = writeln!(out, "  finite-dimensional modules: {}", t.finite_dimensional);
    let _ = writeln!(out, "  infinite-dimensional highest-weight modules: {}", t.highest_weight);
    let _ = writeln!(out, "  standard parabolic families: {}", t.standard_parabolic);
    for (shape, n) in &t.by_levi_shape {
        let _ = writeln!(out, "  Levi {shape}: {n}");
    }
    let _ = writeln!(out, "parabolic families: {}, coherent families: {}", t.parabolic, t.coherent);
    out
}
