//! Formula tables and integer sequences, rendered as aligned text or CSV.

use serde::Serialize;

use crate::error::FormulaError;
use crate::formulas::{self, ExactRational, Family, FormulaVariant};

/// Largest level accepted by [`formula_table`] and [`sequence_table`].
pub const FORMULA_LEVEL_CAP: u32 = 30;

/// Rows of string cells with a header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let widths: Vec<usize> = (0..self.headers.len())
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].len())
                    .chain([self.headers[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            padded.join("  ").trim_end().to_owned() + "\n"
        };
        let mut out = line(&self.headers);
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }

    /// Rows as objects keyed by header.
    pub fn to_json(&self) -> String {
        let records: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|row| {
                self.headers
                    .iter()
                    .cloned()
                    .zip(row.iter().map(|c| serde_json::Value::String(c.clone())))
                    .collect()
            })
            .collect();
        serde_json::to_string_pretty(&records).expect("table serializes")
    }
}

fn check_level(level: u32) -> Result<(), FormulaError> {
    if level > FORMULA_LEVEL_CAP {
        return Err(FormulaError::LevelAboveCap {
            level,
            cap: FORMULA_LEVEL_CAP,
        });
    }
    Ok(())
}

fn rational_cell(r: &ExactRational) -> [String; 2] {
    [r.to_string(), r.is_integer().to_string()]
}

/// Non-edges, recurrence, partial sums and closed forms for each level in
/// `levels`, with one closed-form column pair per requested variant.
pub fn formula_table(
    family: Family,
    levels: std::ops::RangeInclusive<u32>,
    variants: &[FormulaVariant],
) -> Result<Table, FormulaError> {
    check_level(*levels.end())?;
    let mut headers: Vec<String> = ["N", "m_c", "T_recurrence", "Q", "R", "S", "QRS_consistent"]
        .map(String::from)
        .into();
    for v in variants {
        let tag = match v {
            FormulaVariant::StatedTheorem => "stated",
            FormulaVariant::DerivedProof => "derived",
        };
        headers.push(format!("T_closed_{tag}"));
        headers.push(format!("{tag}_is_integer"));
    }

    let mut rows = Vec::new();
    for level in levels {
        let t = formulas::recurrence_t(family, level);
        let p = formulas::partial_sums(family, level)?;
        let consistent = p.all_agree() && p.total() == t;
        let mut row = vec![
            level.to_string(),
            formulas::nonedges_closed(family, level).to_string(),
            t.to_string(),
            p.q.summation.to_string(),
            p.r.summation.to_string(),
            p.s.summation.to_string(),
            consistent.to_string(),
        ];
        for &v in variants {
            row.extend(rational_cell(&formulas::closed_t(family, level, v)));
        }
        rows.push(row);
    }
    Ok(Table { headers, rows })
}

/// `(N, n_N, |E|, m^c_N, T_N)` for `N = 0..=max_level`, all from formulas.
pub fn sequence_table(family: Family, max_level: u32) -> Result<Table, FormulaError> {
    check_level(max_level)?;
    let headers = ["N", "n_N", "edges", "non_edges", "T_N"].map(String::from).into();
    let rows = (0..=max_level)
        .map(|level| {
            vec![
                level.to_string(),
                formulas::order(family, level).to_string(),
                formulas::edges_closed(family, level).to_string(),
                formulas::nonedges_closed(family, level).to_string(),
                formulas::recurrence_t(family, level).to_string(),
            ]
        })
        .collect();
    Ok(Table { headers, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column<'a>(t: &'a Table, name: &str) -> Vec<&'a str> {
        let c = t.headers.iter().position(|h| h == name).unwrap();
        t.rows.iter().map(|r| r[c].as_str()).collect()
    }

    #[test]
    fn c4_formula_table() {
        let t = formula_table(Family::C4, 0..=2, &[FormulaVariant::DerivedProof]).unwrap();
        assert_eq!(column(&t, "T_recurrence"), ["1", "404", "114512"]);
        assert_eq!(column(&t, "T_closed_derived"), ["1", "404", "114512"]);
        assert_eq!(column(&t, "QRS_consistent"), ["true"; 3]);
    }

    #[test]
    fn stated_variant_flagged() {
        let t = formula_table(Family::Theta222, 0..=0, &[FormulaVariant::StatedTheorem]).unwrap();
        assert_eq!(column(&t, "T_closed_stated"), ["-150/1240"]);
        assert_eq!(column(&t, "stated_is_integer"), ["false"]);

        let t = formula_table(Family::C4, 0..=0, &FormulaVariant::ALL).unwrap();
        assert_ne!(column(&t, "T_closed_stated"), column(&t, "T_closed_derived"));
    }

    #[test]
    fn sequences() {
        let t = sequence_table(Family::C4, 3).unwrap();
        assert_eq!(column(&t, "T_N"), ["1", "404", "114512", "30051648"]);
        assert_eq!(
            sequence_table(Family::C4, 0).unwrap().to_csv(),
            "N,n_N,edges,non_edges,T_N\n0,4,4,2,1\n"
        );
        let t = sequence_table(Family::Theta222, 2).unwrap();
        assert_eq!(column(&t, "T_N"), ["3", "2886", "1947705"]);
    }

    #[test]
    fn big_values_are_plain_decimal() {
        let t = sequence_table(Family::C4, 30).unwrap();
        let last = t.rows.last().unwrap();
        assert!(last.iter().all(|c| c.chars().all(|ch| ch.is_ascii_digit())));
        assert!(last[4].len() > 70);
    }

    #[test]
    fn level_cap() {
        assert!(sequence_table(Family::C4, 31).is_err());
        assert!(formula_table(Family::C4, 0..=31, &[]).is_err());
    }

    #[test]
    fn text_rendering_aligns() {
        let t = Table {
            headers: vec!["a".into(), "bb".into()],
            rows: vec![vec!["100".into(), "1".into()]],
        };
        assert_eq!(t.to_text(), "  a  bb\n100   1\n");
        assert_eq!(t.to_json().matches("\"a\": \"100\"").count(), 1);
    }
}
