//! Plain-text renderings of the JSON reports.

use std::fmt::Write;

use positroid_core::pipeline::{
    ConvertReport, EhrhartReport, HstarReport, PositroidSummary, TreeReport, TriangulationReport, Verdict,
};
use positroid_core::ExactPolynomial;

fn poly(c: &[i64]) -> String {
    ExactPolynomial::from_ints(c.iter().copied()).to_string()
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
    }
}

fn components(c: &[Vec<usize>]) -> String {
    c.iter()
        .map(|g| format!("{{{}}}", g.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(",")
}

fn header(p: &PositroidSummary) -> String {
    let conn = if p.connected {
        "connected".to_string()
    } else {
        format!("disconnected: components {}", components(&p.components))
    };
    format!("positroid {} (rank {}, n {}), {conn}, dimension {}", p.necklace, p.rank, p.n, p.dimension)
}

pub fn convert(r: &ConvertReport) -> String {
    let p = &r.positroid;
    let mut s = String::new();
    let _ = writeln!(s, "necklace   {}", p.necklace);
    let _ = writeln!(s, "decorated  {}", p.decorated);
    let _ = writeln!(s, "bases      {} ({})", p.bases.join(" "), p.bases.len());
    let _ = writeln!(s, "rank {}, n {}, dimension {}", p.rank, p.n, p.dimension);
    if p.connected {
        s.push_str("connected");
    } else {
        let _ = write!(s, "disconnected: components {}", components(&p.components));
    }
    s
}

pub fn hstar(r: &HstarReport) -> String {
    let mut s = header(&r.positroid);
    if r.half_open {
        s.push_str(", half-open");
    }
    if let Some(l) = r.labels {
        let _ = write!(s, "\nlabels     {l}");
    }
    if let Some(w0) = &r.w0 {
        let _ = write!(s, "\nw0         {w0}");
    }
    for (m, c) in &r.hstar {
        let _ = write!(s, "\n{m:<20} {}", poly(c));
    }
    let _ = write!(s, "\nehrhart    [{}]\nverdict    {}", r.ehrhart.join(", "), verdict(r.verdict));
    s
}

pub fn ehrhart(r: &EhrhartReport) -> String {
    let mut s = header(&r.positroid);
    let counts: Vec<String> = r.counts.iter().map(|c| c.to_string()).collect();
    let _ = write!(
        s,
        "\ncounts     {}\nehrhart    [{}]\nh*         {}",
        counts.join(" "),
        r.ehrhart.join(", "),
        poly(&r.hstar)
    );
    for (k, c) in r.component_ehrhart.iter().enumerate() {
        let _ = write!(s, "\ncomponent {} [{}]", k + 1, c.join(", "));
    }
    s
}

pub fn triangulation(r: &TriangulationReport) -> String {
    let mut s = header(&r.positroid);
    let _ = write!(s, "\nw0 {}, {} labels, {} edges", r.w0, r.labels.len(), r.edges.len());
    let _ = write!(s, "\n{:<10} {:>4} {:>5}  {:<24} circuit", "label", "dist", "cover", "window");
    for l in &r.labels {
        let win: Vec<String> = l.window.iter().map(|x| x.to_string()).collect();
        let _ = write!(
            s,
            "\n{:<10} {:>4} {:>5}  {:<24} {}",
            l.w,
            l.dist,
            l.cover,
            format!("[{}]", win.join(",")),
            l.circuit.join(" ")
        );
    }
    for e in &r.edges {
        let _ = write!(s, "\nedge {} -- {} (swap {})", e.a, e.b, e.position);
    }
    let _ = write!(
        s,
        "\nh*         {}\naffine     {}",
        poly(&r.hstar),
        if r.affine_consistent { "consistent" } else { "INCONSISTENT" }
    );
    for v in &r.violations {
        let _ = write!(s, "\n  {v}");
    }
    s
}

pub fn tree(r: &TreeReport) -> String {
    let mut s = format!("subdivision of type ({}, {}), positroid {}", r.k, r.n, r.necklace);
    for c in &r.chains {
        let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, "\nchain      ({})", c.join(","));
    }
    for a in &r.arcs {
        let _ = write!(
            s,
            "\narc {}->{}  area {}{}",
            a.from,
            a.to,
            a.area.unwrap_or(0),
            if a.facet_defining { "  facet" } else { "" }
        );
    }
    let _ = write!(
        s,
        "\nextensions {}\nh* (tree)  {}\nh* (necklace) {}\nverdict    {}",
        r.extensions.join(" "),
        poly(&r.hstar_tree),
        poly(&r.hstar_necklace),
        verdict(r.verdict)
    );
    s
}

pub fn atlas_row(r: &HstarReport) -> String {
    let h = r.hstar.values().next().map(|c| poly(c)).unwrap_or_default();
    format!(
        "{:<28} {:<16} {:>5}  {:<24} {}",
        r.positroid.necklace,
        r.positroid.decorated,
        r.labels.map(|l| l.to_string()).unwrap_or_else(|| "-".into()),
        h,
        verdict(r.verdict)
    )
}
