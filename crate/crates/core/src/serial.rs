//! JSON encodings and ASCII pictures of tableaux and linked partitions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::alternative::{AlternativeTableau, Arrow, TypeBAlternativeTableau};
use crate::diagrams::{Cell, FerrersDiagram, Shape, ShiftedDiagram};
use crate::linked::{LinkedPartition, TypeBLinkedPartition};
use crate::tableaux::TreeLikeTableau;

#[derive(Debug, Error)]
pub enum SerialError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unrecognized object: {0}")]
    Unrecognized(String),
    #[error(transparent)]
    Invalid(#[from] Box<crate::Error>),
}

fn invalid(e: impl Into<crate::Error>) -> SerialError {
    SerialError::Invalid(Box::new(e.into()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TltJson {
    border: String,
    points: Vec<(i32, i32)>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AtJson {
    border: String,
    arrows: Vec<(i32, i32, String)>,
    #[serde(default, skip_serializing_if = "is_false")]
    shifted: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LpJson {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<i32>>,
    arcs: Vec<(i32, i32)>,
}

/// Any object the command line can read or write.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Object {
    Tlt(TreeLikeTableau),
    At(AlternativeTableau),
    AtB(TypeBAlternativeTableau),
    Lp(LinkedPartition),
    LpB(TypeBLinkedPartition),
}

fn arrow_list(arrows: &BTreeMap<Cell, Arrow>) -> Vec<(i32, i32, String)> {
    arrows.iter().map(|(c, a)| (c.row, c.col, a.code().to_string())).collect()
}

fn parse_arrows(list: &[(i32, i32, String)]) -> Result<BTreeMap<Cell, Arrow>, SerialError> {
    list.iter()
        .map(|(i, j, code)| {
            Arrow::from_code(code)
                .map(|a| (Cell::new(*i, *j), a))
                .ok_or_else(|| SerialError::Unrecognized(format!("arrow code {code:?}")))
        })
        .collect()
}

impl Object {
    /// Compact single-line JSON with sorted coordinates.
    pub fn to_json_string(&self) -> String {
        let encoded = match self {
            Object::Tlt(t) => serde_json::to_string(&TltJson {
                border: t.diagram().word().to_string(),
                points: t.points().iter().map(|c| (c.row, c.col)).collect(),
            }),
            Object::At(t) => serde_json::to_string(&AtJson {
                border: t.diagram().word().to_string(),
                arrows: arrow_list(t.arrows()),
                shifted: false,
            }),
            Object::AtB(t) => serde_json::to_string(&AtJson {
                border: t.sub().word().to_string(),
                arrows: arrow_list(t.arrows()),
                shifted: true,
            }),
            Object::Lp(t) => serde_json::to_string(&LpJson {
                n: t.n(),
                vertices: None,
                arcs: t.arcs(),
            }),
            Object::LpB(t) => serde_json::to_string(&LpJson {
                n: t.n(),
                vertices: Some(t.vertices().to_vec()),
                arcs: t.arcs(),
            }),
        };
        encoded.expect("plain data serializes")
    }

    pub fn to_json(&self) -> Value {
        serde_json::from_str(&self.to_json_string()).expect("round-trips through a string")
    }

    pub fn from_json_str(s: &str) -> Result<Object, SerialError> {
        Object::from_json(&serde_json::from_str(s)?)
    }

    /// Detects the kind from the fields present and validates the object.
    pub fn from_json(value: &Value) -> Result<Object, SerialError> {
        let has = |k: &str| value.get(k).is_some();
        if has("points") {
            let j: TltJson = serde_json::from_value(value.clone())?;
            let diagram = FerrersDiagram::parse(&j.border).map_err(invalid)?;
            let points: BTreeSet<Cell> = j.points.iter().map(|&p| p.into()).collect();
            return Ok(Object::Tlt(TreeLikeTableau::new(diagram, points).map_err(invalid)?));
        }
        if has("arrows") {
            let j: AtJson = serde_json::from_value(value.clone())?;
            let diagram = FerrersDiagram::parse(&j.border).map_err(invalid)?;
            let arrows = parse_arrows(&j.arrows)?;
            return Ok(if j.shifted {
                Object::AtB(TypeBAlternativeTableau::new(ShiftedDiagram::new(diagram), arrows).map_err(invalid)?)
            } else {
                Object::At(AlternativeTableau::new(diagram, arrows).map_err(invalid)?)
            });
        }
        if has("arcs") {
            let j: LpJson = serde_json::from_value(value.clone())?;
            return Ok(match j.vertices {
                Some(v) => Object::LpB(TypeBLinkedPartition::new(j.n, &v, &j.arcs).map_err(invalid)?),
                None => Object::Lp(LinkedPartition::new(j.n, &j.arcs).map_err(invalid)?),
            });
        }
        Err(SerialError::Unrecognized(
            "expected \"points\", \"arrows\" or \"arcs\"".into(),
        ))
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Object::Tlt(_) => "tree-like tableau",
            Object::At(_) => "alternative tableau",
            Object::AtB(_) => "type-B alternative tableau",
            Object::Lp(_) => "linked partition",
            Object::LpB(_) => "type-B linked partition",
        }
    }

    pub fn render(&self) -> String {
        match self {
            Object::Tlt(t) => render_grid(t.diagram(), |c| t.has_point(c).then_some('•')),
            Object::At(t) => render_grid(t.diagram(), |c| t.arrow(c).map(arrow_glyph)),
            Object::AtB(t) => render_grid(t.shifted(), |c| match t.arrow(c) {
                Some(a) => Some(arrow_glyph(a)),
                None if t.shifted().is_diagonal(c) => Some('*'),
                None => None,
            }),
            Object::Lp(t) => render_arcs(&(1..=t.n() as i32).collect::<Vec<_>>(), &t.arcs()),
            Object::LpB(t) => render_arcs(t.vertices(), &t.arcs()),
        }
    }
}

fn arrow_glyph(a: Arrow) -> char {
    match a {
        Arrow::Left => '<',
        Arrow::Up => '^',
    }
}

/// Column labels across the top, one line per row, `.` for an empty cell.
/// Columns without cells get a `|` tick under the grid.
fn render_grid(shape: &impl Shape, glyph: impl Fn(Cell) -> Option<char>) -> String {
    let cols = shape.cols();
    let rows = shape.rows();
    let width = cols
        .iter()
        .chain(&rows)
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        + 1;
    let mut out = String::new();
    out.push_str(&" ".repeat(width));
    for c in &cols {
        out.push_str(&format!("{c:>width$}"));
    }
    out.push('\n');
    for &r in &rows {
        let mut line = format!("{r:>width$}");
        for &c in &cols {
            let cell = Cell::new(r, c);
            if shape.contains(cell) {
                let g = glyph(cell).unwrap_or('.');
                line.push_str(&format!("{g:>width$}"));
            } else {
                line.push_str(&" ".repeat(width));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let ticks: Vec<bool> = cols.iter().map(|&c| shape.col_cells(c).is_empty()).collect();
    if ticks.iter().any(|&t| t) {
        let mut line = " ".repeat(width);
        for t in ticks {
            line.push_str(&format!("{:>width$}", if t { "|" } else { "" }));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_arcs(vertices: &[i32], arcs: &[(i32, i32)]) -> String {
    let line: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
    let arcs: Vec<String> = arcs.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{}\narcs: {}\n", line.join(" "), arcs.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tlt_json_round_trip() {
        let t = TreeLikeTableau::parse("SSWW", &[(1, 4), (1, 3), (2, 4)]).unwrap();
        let s = Object::Tlt(t.clone()).to_json_string();
        assert_eq!(s, r#"{"border":"SSWW","points":[[1,3],[1,4],[2,4]]}"#);
        assert_eq!(Object::from_json_str(&s).unwrap(), Object::Tlt(t));
    }

    #[test]
    fn type_b_json_round_trip() {
        let t = TypeBAlternativeTableau::parse("WW", &[(-1, 2, Arrow::Up)]).unwrap();
        let s = Object::AtB(t.clone()).to_json_string();
        assert_eq!(s, r#"{"border":"WW","arrows":[[-1,2,"U"]],"shifted":true}"#);
        assert_eq!(Object::from_json_str(&s).unwrap(), Object::AtB(t));
    }

    #[test]
    fn partition_json_round_trip() {
        let t = TypeBLinkedPartition::new(2, &[-2, 1], &[(-2, 1)]).unwrap();
        let s = Object::LpB(t.clone()).to_json_string();
        assert_eq!(s, r#"{"n":2,"vertices":[-2,1],"arcs":[[-2,1]]}"#);
        assert_eq!(Object::from_json_str(&s).unwrap(), Object::LpB(t));
        let p = Object::from_json_str(r#"{"n":3,"arcs":[[1,3]]}"#).unwrap();
        assert_eq!(p.kind(), "linked partition");
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(matches!(Object::from_json_str("{"), Err(SerialError::Json(_))));
        assert!(matches!(Object::from_json_str("{}"), Err(SerialError::Unrecognized(_))));
        assert!(matches!(
            Object::from_json_str(r#"{"border":"SSWW","points":[[1,3]]}"#),
            Err(SerialError::Invalid(_))
        ));
        assert!(matches!(
            Object::from_json_str(r#"{"border":"SW","arrows":[[1,2,"Q"]]}"#),
            Err(SerialError::Unrecognized(_))
        ));
    }

    #[test]
    fn render_single_point() {
        let t = TreeLikeTableau::parse("SW", &[(1, 2)]).unwrap();
        assert_eq!(Object::Tlt(t).render(), "   2\n 1 •\n");
    }

    #[test]
    fn render_alternative_tableau() {
        let t = AlternativeTableau::parse(
            "WWSWSSWSWS",
            &[(3, 4, Arrow::Up), (5, 7, Arrow::Left), (6, 9, Arrow::Up), (8, 9, Arrow::Left)],
        )
        .unwrap();
        let expected = [
            "     9  7  4  2  1",
            "  3  .  .  ^",
            "  5  .  <",
            "  6  ^  .",
            "  8  <",
            " 10",
            "              |  |",
            "",
        ]
        .join("\n");
        assert_eq!(Object::At(t).render(), expected);
    }

    #[test]
    fn render_shifted_and_partition() {
        let t = TypeBAlternativeTableau::parse("WW", &[(-1, 2, Arrow::Up)]).unwrap();
        assert_eq!(Object::AtB(t).render(), "     2  1\n -2  *\n -1  ^  *\n");
        let p = TypeBLinkedPartition::new(2, &[-2, 1], &[(-2, 1)]).unwrap();
        assert_eq!(Object::LpB(p).render(), "-2 1\narcs: (-2,1)\n");
    }
}
