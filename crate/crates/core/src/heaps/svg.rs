//! SVG drawings of heaps over the unit interval model of `P`.

use std::fmt::Write;

use super::heap::Heap;
use crate::poset::UnitIntervalOrder;

const UNIT: f64 = 80.0;
const ROW: f64 = 30.0;
const MARGIN: f64 = 10.0;

/// One rectangle per block: horizontally the unit interval of its column,
/// vertically its level (level 1 at the bottom).
pub fn heap_svg(p: &UnitIntervalOrder, h: &Heap) -> String {
    let xs = p.interval_model();
    let width = xs.iter().copied().fold(0.0, f64::max) + 1.0;
    let height = h.height().max(1) as f64;
    let w = width * UNIT + 2.0 * MARGIN;
    let ht = height * ROW + 2.0 * MARGIN;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{ht:.1}" viewBox="0 0 {w:.1} {ht:.1}">"#
    );
    let _ = writeln!(s, r#"  <title>heap {}</title>"#, h.word());
    let mut blocks: Vec<usize> = (0..h.len()).collect();
    blocks.sort_by_key(|&i| (h.level(i), h.column(i)));
    for i in blocks {
        let col = h.column(i);
        let x = MARGIN + xs[col - 1] * UNIT;
        let y = MARGIN + (height - h.level(i) as f64) * ROW;
        let id = h.block_id(i);
        let _ = writeln!(
            s,
            r##"  <rect x="{x:.2}" y="{y:.2}" width="{UNIT:.2}" height="{ROW:.2}" fill="#dde6f5" stroke="#223" stroke-width="1"><title>{id}</title></rect>"##
        );
        let _ = writeln!(
            s,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{col}</text>"#,
            x + UNIT / 2.0,
            y + ROW / 2.0 + 5.0
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    #[test]
    fn deterministic_and_well_formed() {
        let p: UnitIntervalOrder = "2,3,3".parse().unwrap();
        let h = Heap::from_word(&p, &"131213".parse::<Word>().unwrap()).unwrap();
        let a = heap_svg(&p, &h);
        assert_eq!(a, heap_svg(&p, &h));
        assert!(a.starts_with("<svg") && a.trim_end().ends_with("</svg>"));
        assert_eq!(a.matches("<rect").count(), 6);
    }
}
