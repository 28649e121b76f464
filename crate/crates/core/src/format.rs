//! JSON-lines element records and ASCII rendering.
//!
//! One element per line, fields in this order:
//!
//! ```text
//! {"kind":"H","partition":[5,5,4,2],"star":[1,3],"labels":[[1,4],[3,3]],"class":"H1"}
//! ```
//!
//! `star` is omitted for N-elements, `class` is optional, coordinates are 1-indexed
//! and the label array is in label order.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeled::{
    classify_h_unchecked, classify_n2_unchecked, ContentElement, Element, Family, HookElement,
    TupleElement,
};
use crate::partition::{Cell, Partition};

#[derive(Serialize, Deserialize)]
struct Line {
    kind: Family,
    partition: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    star: Option<Cell>,
    labels: Vec<Cell>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class: Option<String>,
}

/// A validated element together with its diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementRecord {
    pub partition: Partition,
    pub element: Element,
    pub class: Option<String>,
}

impl ElementRecord {
    pub fn new(partition: Partition, element: impl Into<Element>) -> Self {
        ElementRecord { partition, element: element.into(), class: None }
    }

    /// Attaches the class tag computed by [`class_tag`].
    pub fn annotated(mut self) -> Self {
        self.class = Some(class_tag(&self.element).to_owned());
        self
    }

    /// Parses and validates one line.
    pub fn parse(line: &str) -> Result<Self> {
        let raw: Line = serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))?;
        let element = match (raw.kind, raw.star) {
            (Family::H, Some(star)) => Element::H(HookElement { star, labels: raw.labels }),
            (Family::C, Some(star)) => Element::C(ContentElement { star, labels: raw.labels }),
            (Family::N, None) => Element::N(TupleElement { labels: raw.labels }),
            (Family::N, Some(_)) => return Err(Error::Parse("N-element with a star".into())),
            (kind, None) => return Err(Error::Parse(format!("{kind}-element without a star"))),
        };
        element
            .validate(&raw.partition)
            .map_err(|e| Error::InvalidElement(e.to_string()))?;
        Ok(ElementRecord { partition: raw.partition, element, class: raw.class })
    }

    pub fn to_line(&self) -> String {
        let line = Line {
            kind: self.element.family(),
            partition: self.partition.clone(),
            star: self.element.star(),
            labels: self.element.labels().to_vec(),
            class: self.class.clone(),
        };
        serde_json::to_string(&line).expect("element records always serialize")
    }
}

/// `H1`/`H2`/`H3` for H-elements, `N1`/`N2` for two-label N-elements, else the family.
pub fn class_tag(element: &Element) -> &'static str {
    match element {
        Element::H(e) => classify_h_unchecked(e).name(),
        Element::N(e) if e.k() == 2 => classify_n2_unchecked(e.labels[0], e.labels[1]).name(),
        Element::N(_) => "N",
        Element::C(_) => "C",
    }
}

/// Draws the diagram with `*` on the star, label numbers on labeled cells and `.`
/// on empty cells. Tokens are padded to a common width and separated by a space.
pub fn render(shape: &Partition, element: &Element) -> Result<String> {
    element.validate(shape).map_err(|e| Error::InvalidElement(e.to_string()))?;
    Ok(render_unchecked(shape, element.star(), element.labels()))
}

/// A plain diagram of the shape.
pub fn render_shape(shape: &Partition) -> String {
    render_unchecked(shape, None, &[])
}

fn render_unchecked(shape: &Partition, star: Option<Cell>, labels: &[Cell]) -> String {
    let separator = if labels.len() >= 10 { "," } else { "" };
    let token = |cell: Cell| {
        let mut t = String::new();
        if star == Some(cell) {
            t.push('*');
        }
        let names: Vec<String> = labels
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == cell)
            .map(|(i, _)| (i + 1).to_string())
            .collect();
        t.push_str(&names.join(separator));
        if t.is_empty() {
            t.push('.');
        }
        t
    };
    let grid: Vec<Vec<String>> = (1..=shape.num_rows())
        .map(|r| (1..=shape.row_len(r)).map(|c| token(Cell { row: r, col: c })).collect())
        .collect();
    let width = grid.iter().flatten().map(|t| t.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in &grid {
        let line: Vec<String> = row.iter().map(|t| format!("{t:<width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}
