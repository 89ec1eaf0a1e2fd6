//! JSON diagram files. Rationals are written as `"p/q"` text.

use serde::{Deserialize, Serialize};

use super::geom::{format_q, parse_q, Point};
use super::{Diagram, DiagramError, PuncturedDisk, SegRef};

#[derive(Serialize, Deserialize)]
struct DiskDoc {
    outer_radius: String,
    punctures: Vec<[String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct SegDoc {
    strand: usize,
    segment: usize,
}

#[derive(Serialize, Deserialize)]
struct CrossingDoc {
    at: [String; 2],
    over: SegDoc,
}

#[derive(Serialize, Deserialize)]
struct DiagramDoc {
    disk: DiskDoc,
    strands: Vec<Vec<[String; 2]>>,
    crossings: Vec<CrossingDoc>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed rational {0:?}")]
    Rational(String),
    #[error("crossings are not sorted by position at {0}")]
    Unsorted(Point),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

fn pt(doc: &[String; 2]) -> Result<Point, FormatError> {
    let c = |s: &String| parse_q(s).ok_or_else(|| FormatError::Rational(s.clone()));
    Ok(Point::new(c(&doc[0])?, c(&doc[1])?))
}

fn doc_pt(p: &Point) -> [String; 2] {
    [format_q(&p.x), format_q(&p.y)]
}

pub fn from_json(text: &str) -> Result<Diagram, FormatError> {
    let doc: DiagramDoc = serde_json::from_str(text)?;
    let disk = PuncturedDisk {
        outer_radius: parse_q(&doc.disk.outer_radius).ok_or_else(|| FormatError::Rational(doc.disk.outer_radius.clone()))?,
        punctures: doc.disk.punctures.iter().map(pt).collect::<Result<_, _>>()?,
    };
    let strands: Vec<Vec<Point>> =
        doc.strands.iter().map(|s| s.iter().map(pt).collect::<Result<_, _>>()).collect::<Result<_, _>>()?;
    let mut records = Vec::new();
    for c in &doc.crossings {
        let at = pt(&c.at)?;
        if let Some((prev, _)) = records.last() {
            if &at <= prev {
                return Err(FormatError::Unsorted(at));
            }
        }
        records.push((at, SegRef { strand: c.over.strand, segment: c.over.segment }));
    }
    Ok(Diagram::new(disk, strands, records)?)
}

pub fn to_json(d: &Diagram) -> String {
    let doc = DiagramDoc {
        disk: DiskDoc {
            outer_radius: format_q(&d.disk.outer_radius),
            punctures: d.disk.punctures.iter().map(doc_pt).collect(),
        },
        strands: d.strands.iter().map(|s| s.iter().map(doc_pt).collect()).collect(),
        crossings: d
            .crossings
            .iter()
            .map(|c| CrossingDoc { at: doc_pt(&c.at), over: SegDoc { strand: c.over.strand, segment: c.over.segment } })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("diagram documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin::diagram;

    #[test]
    fn round_trip_preserves_diagram() {
        for name in ["gamma", "clasp", "curl", "y"] {
            let d = diagram(name);
            let back = from_json(&to_json(&d)).unwrap();
            assert_eq!(back, d, "{name}");
        }
    }

    #[test]
    fn missing_crossing_record_is_rejected() {
        let mut text = to_json(&diagram("gamma"));
        let start = text.find("\"crossings\"").unwrap();
        text.replace_range(start.., "\"crossings\": []\n}");
        assert!(matches!(from_json(&text), Err(FormatError::Diagram(DiagramError::MissingCrossing { .. }))));
    }
}
