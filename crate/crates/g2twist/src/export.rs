//! Serialization of structure constants (JSON and CSV), the octonion
//! table dump, and the symbolic grid renderer used by the table
//! command. All output is deterministic: records are ordered by
//! `(i, j, k)` over the canonical basis positions.

use crate::analysis::{
    integer_scales, orthonormal_scales, StructureConstants, GRID_E, GRID_F,
};
use crate::group;
use crate::model::{split_sign, G2Element, ModelVariant};
use crate::octonion::OctonionTable;
use crate::scalar::{parse_rational, QSqrt3, Rational};
use crate::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which basis the constants are expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// Canonical basis `(1,0)gᵢ, (0,1)gᵢ`.
    Unit,
    /// Integer basis `(4,0)gᵢ, (0,4)gᵢ`.
    Scaled,
    /// Orthonormal basis `½(1,0)gᵢ, (1/(2√3))(0,1)gᵢ` over `ℚ(√3)`.
    Orthonormal,
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisKind::Unit => write!(f, "unit"),
            BasisKind::Scaled => write!(f, "scaled"),
            BasisKind::Orthonormal => write!(f, "orthonormal"),
        }
    }
}

/// One structure constant `c^k_{ij}` with human-readable labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportRecord {
    pub i: String,
    pub j: String,
    pub k: String,
    pub coeff: String,
}

/// A full export: variant, basis, and all nonzero constants.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExportDocument {
    pub variant: String,
    pub basis: String,
    pub constants: Vec<ExportRecord>,
}

fn label(pos: usize) -> String {
    G2Element::<Rational>::canonical_label(pos)
}

/// Position (0..14) of a basis label `E1..E7`/`F1..F7`.
pub fn label_position(s: &str) -> Result<usize> {
    let b = s.as_bytes();
    if b.len() == 2 && (b[0] == b'E' || b[0] == b'F') && (b'1'..=b'7').contains(&b[1]) {
        let i = (b[1] - b'1') as usize;
        let off = if b[0] == b'E' { 0 } else { 1 };
        Ok(2 * i + off)
    } else {
        Err(Error::Parse { pos: 0, msg: format!("unknown basis label {s:?}") })
    }
}

fn records_from_rational(sc: &StructureConstants<Rational>) -> Vec<ExportRecord> {
    let mut out = Vec::new();
    for i in 0..sc.dim() {
        for j in 0..sc.dim() {
            for k in 0..sc.dim() {
                let c = sc.at(i, j, k);
                if !c.is_zero() {
                    out.push(ExportRecord {
                        i: label(i),
                        j: label(j),
                        k: label(k),
                        coeff: c.to_string(),
                    });
                }
            }
        }
    }
    out
}

fn records_from_qs3(sc: &StructureConstants<QSqrt3>) -> Vec<ExportRecord> {
    let mut out = Vec::new();
    for i in 0..sc.dim() {
        for j in 0..sc.dim() {
            for k in 0..sc.dim() {
                let c = sc.at(i, j, k);
                if !c.is_zero() {
                    out.push(ExportRecord {
                        i: label(i),
                        j: label(j),
                        k: label(k),
                        coeff: c.to_string(),
                    });
                }
            }
        }
    }
    out
}

/// Build the export document for a variant and basis.
pub fn export_document(variant: ModelVariant, basis: BasisKind) -> ExportDocument {
    let sc = StructureConstants::<Rational>::from_model(variant);
    let constants = match basis {
        BasisKind::Unit => records_from_rational(&sc),
        BasisKind::Scaled => records_from_rational(&sc.rescaled(&integer_scales())),
        BasisKind::Orthonormal => records_from_qs3(&sc.rescaled(&orthonormal_scales())),
    };
    ExportDocument { variant: variant.to_string(), basis: basis.to_string(), constants }
}

/// JSON form (pretty-printed, trailing newline).
pub fn to_json(doc: &ExportDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

/// Parse a JSON export back into a document.
pub fn parse_json(s: &str) -> Result<ExportDocument> {
    serde_json::from_str(s).map_err(|e| Error::Parse { pos: 0, msg: e.to_string() })
}

/// CSV form: header `i,j,k,coeff`, one record per line.
pub fn to_csv(doc: &ExportDocument) -> String {
    let mut s = String::from("i,j,k,coeff\n");
    for r in &doc.constants {
        s.push_str(&format!("{},{},{},{}\n", r.i, r.j, r.k, r.coeff));
    }
    s
}

/// Parse the CSV form (records only; variant/basis metadata is not
/// part of the CSV format).
pub fn parse_csv(s: &str) -> Result<Vec<ExportRecord>> {
    let mut lines = s.lines();
    match lines.next() {
        Some("i,j,k,coeff") => {}
        _ => return Err(Error::Parse { pos: 0, msg: "missing CSV header i,j,k,coeff".into() }),
    }
    let mut out = Vec::new();
    for (n, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 4 {
            return Err(Error::Parse {
                pos: n + 2,
                msg: format!("expected 4 CSV fields, found {}", parts.len()),
            });
        }
        out.push(ExportRecord {
            i: parts[0].to_string(),
            j: parts[1].to_string(),
            k: parts[2].to_string(),
            coeff: parts[3].to_string(),
        });
    }
    Ok(out)
}

/// Rebuild rational structure constants from export records (unit or
/// scaled basis).
pub fn records_to_constants(records: &[ExportRecord]) -> Result<StructureConstants<Rational>> {
    let mut c = vec![vec![vec![Rational::zero(); 14]; 14]; 14];
    for r in records {
        let i = label_position(&r.i)?;
        let j = label_position(&r.j)?;
        let k = label_position(&r.k)?;
        c[i][j][k] = parse_rational(&r.coeff)?;
    }
    Ok(StructureConstants::from_raw(14, c))
}

/// CSV dump of a basis-product table: header `i,j,sign,target`, then
/// one row per ordered pair, rows in `(i, j)` order.
pub fn oct_table_csv(table: &OctonionTable) -> String {
    let mut s = String::from("i,j,sign,target\n");
    for i in 0..8 {
        for j in 0..8 {
            let (sign, target) = table.entry(i, j);
            s.push_str(&format!("{i},{j},{sign},{target}\n"));
        }
    }
    s
}

fn term_string(coeff: i64, var: char) -> String {
    match coeff {
        1 => var.to_string(),
        -1 => format!("-{var}"),
        c => format!("{c}{var}"),
    }
}

/// One symbolic component `ca·a + cb·b`, rendered with the positive
/// term first when the signs differ and the `a` term first otherwise.
fn format_component(ca: i64, cb: i64) -> String {
    match (ca, cb) {
        (0, 0) => "0".to_string(),
        (ca, 0) => term_string(ca, 'a'),
        (0, cb) => term_string(cb, 'b'),
        (ca, cb) if ca > 0 || cb < 0 => {
            // a-term leads: either both share its sign or a is the
            // positive one.
            let tail_sign = if cb > 0 { '+' } else { '-' };
            format!("{}{}{}", term_string(ca, 'a'), tail_sign, term_string(cb.abs(), 'b'))
        }
        (ca, cb) => {
            // ca < 0 < cb: positive b-term leads.
            format!("{}-{}", term_string(cb, 'b'), term_string(ca.abs(), 'a'))
        }
    }
}

/// The symbolic grid cell for row `g_{i+k}` and one of the two ad
/// columns (`e_column` selects `ad((1,0)gᵢ)`), e.g.
/// `"1/4(a+3b, -a-3b) g4"`. Row `k = 0` renders as `"0"`.
pub fn format_grid_cell(variant: ModelVariant, i: usize, k: usize, e_column: bool) -> Result<String> {
    group::check_index(i)?;
    if k > 6 {
        return Err(Error::IndexOutOfRange(k));
    }
    if k == 0 {
        return Ok("0".to_string());
    }
    let template = if e_column { &GRID_E[k - 1] } else { &GRID_F[k - 1] };
    let sign = match variant {
        ModelVariant::Compact => 1i64,
        ModelVariant::Split => split_sign(i, group::wrap(i + k))? as i64,
    };
    let target = group::wrap(i + crate::analysis::grid_target_offset(k));
    Ok(format!(
        "1/4({}, {}) g{}",
        format_component(sign * template[0], sign * template[1]),
        format_component(sign * template[2], sign * template[3]),
        target
    ))
}

/// Render the full two-column ad grid at the point `i`.
pub fn render_table(variant: ModelVariant, i: usize) -> Result<String> {
    group::check_index(i)?;
    let mut s = format!("ad table at g{i} ({variant}); rows are (a,b)g_j\n");
    s.push_str(&format!(
        "{:<12} {:<26} {:<26}\n",
        "row",
        format!("ad((1,0)g{i})"),
        format!("ad((0,1)g{i})")
    ));
    for k in 0..=6usize {
        let j = group::wrap(i + k);
        let e_cell = format_grid_cell(variant, i, k, true)?;
        let f_cell = format_grid_cell(variant, i, k, false)?;
        s.push_str(&format!("{:<12} {:<26} {:<26}\n", format!("(a,b)g{j}"), e_cell, f_cell));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::{division_table, split_table};

    #[test]
    fn label_positions_round_trip() {
        for pos in 0..14 {
            let l = label(pos);
            assert_eq!(label_position(&l).unwrap(), pos);
        }
        assert!(label_position("E0").is_err());
        assert!(label_position("G1").is_err());
        assert!(label_position("E12").is_err());
    }

    #[test]
    fn unit_export_contains_frozen_records() {
        let doc = export_document(ModelVariant::Compact, BasisKind::Unit);
        assert_eq!(doc.variant, "compact");
        assert_eq!(doc.basis, "unit");
        let want = ExportRecord {
            i: "E1".into(),
            j: "E2".into(),
            k: "E4".into(),
            coeff: "1/4".into(),
        };
        assert!(doc.constants.contains(&want), "missing {want:?}");
    }

    #[test]
    fn scaled_export_contains_frozen_records() {
        let doc = export_document(ModelVariant::Compact, BasisKind::Scaled);
        let e = ExportRecord { i: "E1".into(), j: "E2".into(), k: "E4".into(), coeff: "1".into() };
        let f = ExportRecord { i: "E1".into(), j: "E2".into(), k: "F4".into(), coeff: "-1".into() };
        assert!(doc.constants.contains(&e));
        assert!(doc.constants.contains(&f));
        // Scaled constants are all integers (no '/' anywhere).
        assert!(doc.constants.iter().all(|r| !r.coeff.contains('/')));
    }

    #[test]
    fn orthonormal_export_uses_qsqrt3_strings() {
        let doc = export_document(ModelVariant::Compact, BasisKind::Orthonormal);
        let sample = ExportRecord {
            i: "E1".into(),
            j: "F2".into(),
            k: "E4".into(),
            coeff: "1/8√3".into(),
        };
        assert!(
            doc.constants.contains(&sample),
            "missing {sample:?}; have {:?}",
            doc.constants
                .iter()
                .filter(|r| r.i == "E1" && r.j == "F2")
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn export_order_is_deterministic() {
        let doc = export_document(ModelVariant::Compact, BasisKind::Unit);
        let mut sorted = doc.constants.clone();
        sorted.sort_by_key(|r| {
            (
                label_position(&r.i).unwrap(),
                label_position(&r.j).unwrap(),
                label_position(&r.k).unwrap(),
            )
        });
        assert_eq!(doc.constants, sorted);
        let again = export_document(ModelVariant::Compact, BasisKind::Unit);
        assert_eq!(doc, again);
    }

    #[test]
    fn json_round_trip_rebuilds_the_bracket() {
        use crate::model::{bracket, parse_element};
        let doc = export_document(ModelVariant::Split, BasisKind::Unit);
        let text = to_json(&doc);
        let parsed = parse_json(&text).unwrap();
        assert_eq!(parsed, doc);
        let sc = records_to_constants(&parsed.constants).unwrap();
        let x = parse_element("(1,2)g1+(3,-1/2)g5").unwrap();
        let y = parse_element("(0,1)g2+(7,1/3)g6").unwrap();
        let direct = bracket(ModelVariant::Split, &x, &y).to_coords();
        let rebuilt = sc.bracket_coords(&x.to_coords(), &y.to_coords());
        assert_eq!(direct, rebuilt);
    }

    #[test]
    fn csv_round_trip_preserves_records() {
        let doc = export_document(ModelVariant::Compact, BasisKind::Scaled);
        let text = to_csv(&doc);
        assert!(text.starts_with("i,j,k,coeff\n"));
        let records = parse_csv(&text).unwrap();
        assert_eq!(records, doc.constants);
        assert!(parse_csv("nope\n1,2,3,4\n").is_err());
        assert!(parse_csv("i,j,k,coeff\nE1,E2,E4\n").is_err());
    }

    #[test]
    fn oct_table_csv_has_frozen_rows() {
        let text = oct_table_csv(division_table());
        assert!(text.starts_with("i,j,sign,target\n"));
        assert!(text.contains("\n1,2,1,4\n"));
        assert!(text.contains("\n2,1,-1,4\n"));
        assert!(text.contains("\n3,3,-1,0\n"));
        assert_eq!(text.lines().count(), 65);
        let split = oct_table_csv(split_table());
        assert!(split.contains("\n3,3,1,0\n"));
        assert!(split.contains("\n3,5,-1,2\n"));
    }

    #[test]
    fn grid_cells_match_frozen_strings() {
        assert_eq!(
            format_grid_cell(ModelVariant::Compact, 1, 1, true).unwrap(),
            "1/4(a+3b, -a-3b) g4"
        );
        assert_eq!(
            format_grid_cell(ModelVariant::Compact, 1, 1, false).unwrap(),
            "1/4(3b-3a, b-a) g4"
        );
        assert_eq!(
            format_grid_cell(ModelVariant::Compact, 1, 3, false).unwrap(),
            "1/4(3a+3b, -a-b) g2"
        );
        assert_eq!(format_grid_cell(ModelVariant::Compact, 1, 0, true).unwrap(), "0");
        assert_eq!(format_grid_cell(ModelVariant::Compact, 1, 0, false).unwrap(), "0");
        // Split flips the (3,5) cell relative to compact.
        assert_eq!(
            format_grid_cell(ModelVariant::Compact, 3, 2, true).unwrap(),
            "1/4(a-3b, -a-b) g2"
        );
        assert_eq!(
            format_grid_cell(ModelVariant::Split, 3, 2, true).unwrap(),
            "1/4(3b-a, a+b) g2"
        );
        assert!(format_grid_cell(ModelVariant::Compact, 0, 1, true).is_err());
        assert!(format_grid_cell(ModelVariant::Compact, 1, 7, true).is_err());
    }

    #[test]
    fn component_formatting_obeys_the_sign_rule() {
        assert_eq!(format_component(1, 3), "a+3b");
        assert_eq!(format_component(-1, -3), "-a-3b");
        assert_eq!(format_component(-3, 3), "3b-3a");
        assert_eq!(format_component(1, -3), "a-3b");
        assert_eq!(format_component(-1, 3), "3b-a");
        assert_eq!(format_component(3, 0), "3a");
        assert_eq!(format_component(0, -1), "-b");
        assert_eq!(format_component(0, 0), "0");
    }

    #[test]
    fn rendered_table_lists_all_rows() {
        let text = render_table(ModelVariant::Compact, 1).unwrap();
        for j in 1..=7 {
            assert!(text.contains(&format!("(a,b)g{j}")), "missing row g{j}:\n{text}");
        }
        assert!(text.contains("1/4(a+3b, -a-3b) g4"));
    }

    /// Evaluate a rendered component such as `"3b-3a"` at the sample
    /// point `a = 5, b = -2`.
    fn eval_component(expr: &str, a: i64, b: i64) -> i64 {
        fn eval_term(t: &str, a: i64, b: i64) -> i64 {
            let (coeff_str, var) = t.split_at(t.len() - 1);
            let coeff: i64 = match coeff_str {
                "" => 1,
                "-" => -1,
                s => s.parse().expect("integer coefficient"),
            };
            match var {
                "a" => coeff * a,
                "b" => coeff * b,
                other => panic!("unexpected variable {other:?} in {t:?}"),
            }
        }
        let mut total = 0;
        let mut term = String::new();
        for ch in expr.chars() {
            if (ch == '+' || ch == '-') && !term.is_empty() {
                total += eval_term(&term, a, b);
                term.clear();
            }
            if ch != '+' {
                term.push(ch);
            }
        }
        total + eval_term(&term, a, b)
    }

    #[test]
    fn grid_cell_strings_agree_with_the_bracket() {
        // The rendered template, evaluated at a sample (a,b), must equal
        // the actual bracket value — ties the presentation back to the
        // model for every cell of both variants.
        use crate::model::{bracket, parse_element, RingPair};
        use crate::scalar::rat;
        let (a, b) = (5i64, -2i64);
        for variant in [ModelVariant::Compact, ModelVariant::Split] {
            for i in 1..=7usize {
                for k in 1..=6usize {
                    for e_col in [true, false] {
                        let cell = format_grid_cell(variant, i, k, e_col).unwrap();
                        let body = cell.strip_prefix("1/4(").unwrap();
                        let (components, target) = body.split_once(") g").unwrap();
                        let (c1, c2) = components.split_once(", ").unwrap();
                        let target: usize = target.parse().unwrap();
                        let pos = if e_col { 2 * (i - 1) } else { 2 * (i - 1) + 1 };
                        let x = G2Element::<Rational>::canonical_basis(pos);
                        let y =
                            parse_element(&format!("({a},{b})g{}", group::wrap(i + k))).unwrap();
                        let got = bracket(variant, &x, &y);
                        let want_pair = RingPair::new(
                            rat(eval_component(c1, a, b), 4),
                            rat(eval_component(c2, a, b), 4),
                        );
                        let want = G2Element::term(target, want_pair).unwrap();
                        assert_eq!(got, want, "{variant} i={i} k={k} e={e_col}: {cell}");
                    }
                }
            }
        }
    }
}
