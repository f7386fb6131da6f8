//! Plain-text renderings for `--format summary`.

use std::fmt::Write;
use ucover::approx::ApproxResult;
use ucover::cycle_cover::{ContractionReport, CycleCoverResult};
use ucover::decomp::ConvexCombination;
use ucover::lp::subtour::LpResult;
use ucover::rational::fmt_rat;
use ucover::uniform::Certificate;
use ucover::Multigraph;

fn edges(h: &ucover::EdgeMultiset) -> String {
    h.iter()
        .map(|(e, k)| if k == 1 { format!("e{e}") } else { format!("{k}e{e}") })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn lp(g: &Multigraph, r: &LpResult) -> String {
    let mut s = String::new();
    writeln!(s, "z_G = {}", fmt_rat(&r.value)).unwrap();
    writeln!(s, "cuts added: {}, tight: {}, pivots: {}", r.cut_history.len(), r.active_cuts.len(), r.pivots).unwrap();
    for e in 0..g.m() {
        let (u, v) = g.endpoints(e);
        writeln!(s, "  e{e} ({u},{v}) x = {}", fmt_rat(r.x.get(e))).unwrap();
    }
    s
}

pub fn cycle_cover(r: &CycleCoverResult, rep: &ContractionReport) -> String {
    let mut s = String::new();
    for c in &r.cycles {
        writeln!(s, "cycle {c:?}").unwrap();
    }
    writeln!(s, "cuts checked: {}", r.cuts_checked).unwrap();
    writeln!(
        s,
        "G/C: {} vertices, {} edges, connectivity {:?} (needs {}), even degrees {}",
        rep.vertices, rep.edges, rep.edge_connectivity, rep.required, rep.even_degrees
    )
    .unwrap();
    s
}

pub fn combination(g: &Multigraph, cc: &ConvexCombination) -> String {
    let mut s = String::new();
    writeln!(s, "{} terms, relation {:?}", cc.len(), cc.relation).unwrap();
    for t in &cc.terms {
        writeln!(s, "  {} x {} [{}]", fmt_rat(&t.lambda), t.class.name(), edges(&t.edges)).unwrap();
    }
    let v = cc.combined(g.m());
    let vals: Vec<String> = v.values().iter().map(fmt_rat).collect();
    writeln!(s, "combined: {}", vals.join(" ")).unwrap();
    s
}

pub fn certificate(c: &Certificate) -> String {
    let min = c.slack.values().iter().min().cloned().unwrap_or_default();
    format!(
        "{} cover, alpha {}, profile {}: {} terms of class {}, min slack {}, {} ms\n",
        c.variant,
        fmt_rat(&c.alpha),
        c.profile,
        c.combination.len(),
        c.class.name(),
        fmt_rat(&min),
        c.elapsed_ms
    )
}

pub fn approx(r: &ApproxResult) -> String {
    let mut s = format!(
        "{}: weight {} vs z_G {} (ratio {} <= {})",
        r.algorithm,
        fmt_rat(&r.weight),
        fmt_rat(&r.z_g),
        fmt_rat(&r.ratio),
        fmt_rat(&r.guarantee)
    );
    if let Some(b) = &r.beta {
        write!(s, ", beta {}", fmt_rat(b)).unwrap();
    }
    if let Some(h) = &r.headline {
        write!(s, ", headline {}", fmt_rat(h)).unwrap();
    }
    writeln!(s, "\nsolution: {}", edges(&r.solution)).unwrap();
    s
}
