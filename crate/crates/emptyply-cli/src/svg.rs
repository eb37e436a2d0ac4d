//! Minimal SVG 1.1 rendering of drawings, ply-disks and 1/4-SHPED stubs.

use emptyply::drawing::Drawing;
use emptyply::plycore::StubSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskMode {
    Full,
    Half,
    None,
}

struct ViewBox {
    minx: f64,
    miny: f64,
    w: f64,
    h: f64,
}

/// Bounding box of all disks (or vertices if disks are off), padded 5%.
fn viewbox(d: &Drawing, include_disks: bool) -> ViewBox {
    let radii = d.ply_radii();
    let mut minx = f64::INFINITY;
    let mut maxx = f64::NEG_INFINITY;
    let mut miny = f64::INFINITY;
    let mut maxy = f64::NEG_INFINITY;
    for (i, p) in d.positions.iter().enumerate() {
        let r = if include_disks { radii[i] } else { 0.0 };
        minx = minx.min(p.x - r);
        maxx = maxx.max(p.x + r);
        miny = miny.min(p.y - r);
        maxy = maxy.max(p.y + r);
    }
    let pad = 0.05 * (maxx - minx).max(maxy - miny).max(1e-9);
    ViewBox {
        minx: minx - pad,
        miny: miny - pad,
        w: maxx - minx + 2.0 * pad,
        h: maxy - miny + 2.0 * pad,
    }
}

fn header(vb: &ViewBox) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" \
         viewBox=\"{} {} {} {}\">\n<g transform=\"translate(0,{}) scale(1,-1)\">\n",
        vb.minx,
        -(vb.miny + vb.h) + vb.miny, // y-flip keeps math coordinates upright
        vb.w,
        vb.h,
        2.0 * vb.miny + vb.h
    )
}

pub fn render_drawing(d: &Drawing, disks: DiskMode) -> String {
    let vb = viewbox(d, disks != DiskMode::None);
    let stroke = 0.004 * vb.w.max(vb.h);
    let mut out = header(&vb);
    if disks != DiskMode::None {
        let radii = d.ply_radii();
        for (i, p) in d.positions.iter().enumerate() {
            if radii[i] <= 0.0 {
                continue;
            }
            let r = match disks {
                DiskMode::Half => radii[i] / 2.0,
                _ => radii[i],
            };
            out.push_str(&format!(
                "<circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"#4477aa\" fill-opacity=\"0.15\" \
                 stroke=\"#4477aa\" stroke-width=\"{stroke}\"/>\n",
                p.x, p.y
            ));
        }
    }
    for &(a, b) in d.graph.edges() {
        let (p, q) = (d.positions[a], d.positions[b]);
        out.push_str(&format!(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#222222\" \
             stroke-width=\"{stroke}\"/>\n",
            p.x, p.y, q.x, q.y
        ));
    }
    for p in &d.positions {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#cc3311\"/>\n",
            p.x,
            p.y,
            1.5 * stroke
        ));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

pub fn render_stubs(d: &Drawing, stubs: &StubSet) -> String {
    let vb = viewbox(d, false);
    let stroke = 0.004 * vb.w.max(vb.h);
    let mut out = header(&vb);
    for (s1, s2) in &stubs.stubs {
        for s in [s1, s2] {
            out.push_str(&format!(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#222222\" \
                 stroke-width=\"{stroke}\"/>\n",
                s.a.x, s.a.y, s.b.x, s.b.y
            ));
        }
    }
    for p in &d.positions {
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#cc3311\"/>\n",
            p.x,
            p.y,
            1.5 * stroke
        ));
    }
    out.push_str("</g>\n</svg>\n");
    out
}
