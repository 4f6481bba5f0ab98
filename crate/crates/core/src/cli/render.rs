use std::fmt::Write as _;

use crate::spectra::{SpectralKind, SpectralRaster};

/// Pixel color for each classification.
pub fn kind_color(kind: SpectralKind) -> [u8; 3] {
    match kind {
        SpectralKind::Resolvent => [255, 255, 255],
        SpectralKind::EssentialSpectrum => [204, 32, 32],
        SpectralKind::FredholmHole => [40, 96, 200],
        SpectralKind::NearBoundary => [240, 168, 0],
    }
}

/// Binary portable pixmap (P6), one pixel per grid node, row 0 on top.
pub fn render_ppm(raster: &SpectralRaster) -> Vec<u8> {
    let n = raster.resolution;
    let mut out = format!("P6\n{n} {n}\n255\n").into_bytes();
    out.reserve(3 * n * n);
    for cell in &raster.cells {
        out.extend_from_slice(&kind_color(cell.kind));
    }
    out
}

/// SVG with one rect per horizontal run of equal non-resolvent cells on a
/// white background.
pub fn render_svg(raster: &SpectralRaster) -> String {
    let n = raster.resolution;
    let b = raster.bounds;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{n}" height="{n}" viewBox="0 0 {n} {n}" shape-rendering="crispEdges">"#
    );
    let _ = writeln!(
        out,
        "<title>re [{}, {}] x im [{}, {}]</title>",
        b.re_min, b.re_max, b.im_min, b.im_max
    );
    let _ = writeln!(out, r##"<rect width="{n}" height="{n}" fill="#ffffff"/>"##);
    for row in 0..n {
        let mut col = 0;
        while col < n {
            let kind = raster.get(row, col).kind;
            let start = col;
            while col < n && raster.get(row, col).kind == kind {
                col += 1;
            }
            if kind != SpectralKind::Resolvent {
                let [r, g, bl] = kind_color(kind);
                let _ = writeln!(
                    out,
                    r##"<rect x="{start}" y="{row}" width="{}" height="1" fill="#{r:02x}{g:02x}{bl:02x}"/>"##,
                    col - start
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
