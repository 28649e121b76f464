use std::io::{self, BufRead, Write};

use hookcontent::format::{render, ElementRecord};
use hookcontent::labeled::{Element, TargetElement};
use hookcontent::power::psi1_inv;
use hookcontent::rect::{
    count_rectangles_brute, count_rectangles_formula, count_thick_direct, count_total_formula,
};
use hookcontent::{enumerate_set, phi, phi_inv, phi_k, psi1, Error, Family, Partition, Result};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// Applies the maps line by line. Returns the number of lines that failed.
pub fn map_lines(
    input: impl BufRead,
    mut out: impl Write,
    mut err: impl Write,
    direction: Direction,
    annotate: bool,
) -> io::Result<usize> {
    let mut failed = 0;
    for (index, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        match map_one(&line, direction) {
            Ok(record) => {
                let record = if annotate { record.annotated() } else { record };
                writeln!(out, "{}", record.to_line())?;
            }
            Err(e) => {
                failed += 1;
                writeln!(err, "line {}: {e}", index + 1)?;
            }
        }
    }
    Ok(failed)
}

pub fn map_one(line: &str, direction: Direction) -> Result<ElementRecord> {
    let record = ElementRecord::parse(line)?;
    let shape = &record.partition;
    let k = record.element.labels().len();
    let element: Element = match (direction, record.element) {
        (Direction::Forward, Element::H(e)) if k == 2 => phi(shape, &e)?.into(),
        (Direction::Forward, Element::H(e)) if k >= 3 => phi_k(shape, &e)?.into(),
        (Direction::Forward, Element::N(e)) if k == 1 => psi1(shape, &TargetElement::N(e))?.into(),
        (Direction::Forward, Element::C(e)) if k == 1 => psi1(shape, &TargetElement::C(e))?.into(),
        (Direction::Inverse, Element::N(e)) if k == 2 => phi_inv(shape, &TargetElement::N(e))?.into(),
        (Direction::Inverse, Element::C(e)) if k == 2 => phi_inv(shape, &TargetElement::C(e))?.into(),
        (Direction::Inverse, Element::H(e)) if k == 1 => psi1_inv(shape, &e)?.into(),
        (direction, element) => {
            return Err(Error::InvalidElement(format!(
                "no {} map for {}-elements with {k} labels",
                match direction {
                    Direction::Forward => "forward",
                    Direction::Inverse => "inverse",
                },
                element.family()
            )))
        }
    };
    Ok(ElementRecord::new(record.partition, element))
}

pub fn enumerate(shape: &Partition, family: Family, k: usize, mut out: impl Write) -> io::Result<u64> {
    let mut lines = 0;
    for element in enumerate_set(shape, family, k) {
        writeln!(out, "{}", ElementRecord::new(shape.clone(), element).to_line())?;
        lines += 1;
    }
    Ok(lines)
}

/// Rectangle counts by brute force and by formula, as one JSON object.
/// The flag is whether all routes agree.
pub fn rects(shape: &Partition) -> Result<(serde_json::Value, bool)> {
    let brute = count_rectangles_brute::<u64>(shape)?;
    let formula = count_rectangles_formula::<u64>(shape)?;
    let total_by_coordinates: u64 = count_total_formula(shape)?;
    let thick_by_coordinates: u64 = count_thick_direct(shape)?;
    let consistent = brute == formula
        && brute.total == total_by_coordinates
        && brute.thick == thick_by_coordinates;
    let value = json!({
        "partition": shape,
        "brute": brute,
        "formula": formula,
        "total_by_coordinates": total_by_coordinates,
        "thick_by_coordinates": thick_by_coordinates,
        "consistent": consistent,
    });
    Ok((value, consistent))
}

pub fn render_line(line: &str) -> Result<String> {
    let record = ElementRecord::parse(line)?;
    render(&record.partition, &record.element)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(input: &str, direction: Direction, annotate: bool) -> (String, String, usize) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let failed = map_lines(input.as_bytes(), &mut out, &mut err, direction, annotate).unwrap();
        (String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap(), failed)
    }

    #[test]
    fn maps_example_element() {
        let line = r#"{"kind":"H","partition":[5,5,4,2],"star":[1,3],"labels":[[1,4],[3,3]]}"#;
        let (out, _, failed) = run(line, Direction::Forward, true);
        assert_eq!(failed, 0);
        assert_eq!(
            out.trim_end(),
            r#"{"kind":"N","partition":[5,5,4,2],"labels":[[1,4],[3,3]],"class":"N1"}"#
        );
        let (back, _, _) = run(&out, Direction::Inverse, false);
        assert_eq!(back.trim_end(), line);
    }

    #[test]
    fn errors_carry_line_numbers_and_processing_continues() {
        let input = concat!(
            r#"{"kind":"H","partition":[1],"star":[1,1],"labels":[[1,1],[1,1]]}"#,
            "\n{not json\n",
            r#"{"kind":"N","partition":[1],"labels":[[1,1],[1,1]]}"#,
            "\n",
        );
        let (out, err, failed) = run(input, Direction::Forward, false);
        assert_eq!(failed, 2);
        assert_eq!(out.lines().count(), 1);
        assert!(err.contains("line 2: parse error"), "{err}");
        assert!(err.contains("line 3: "), "{err}");
    }

    #[test]
    fn k1_maps() {
        let line = r#"{"kind":"C","partition":[2,1],"star":[1,2],"labels":[[1,1]]}"#;
        let rec = map_one(line, Direction::Forward).unwrap();
        assert_eq!(
            rec.to_line(),
            r#"{"kind":"H","partition":[2,1],"star":[1,1],"labels":[[1,2]]}"#
        );
        assert_eq!(map_one(&rec.to_line(), Direction::Inverse).unwrap().to_line(), line);
    }

    #[test]
    fn enumerate_counts() {
        let mut out = Vec::new();
        let shape: Partition = "2,1".parse().unwrap();
        assert_eq!(enumerate(&shape, Family::H, 2, &mut out).unwrap(), 11);
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 11);
        let one: Partition = "1".parse().unwrap();
        assert_eq!(enumerate(&one, Family::C, 2, io::sink()).unwrap(), 0);
    }

    #[test]
    fn rect_report() {
        let (value, ok) = rects(&"2,2".parse().unwrap()).unwrap();
        assert!(ok);
        assert_eq!(value["brute"], json!({"total": 9, "thin": 8, "thick": 1}));
        let (value, _) = rects(&"1".parse().unwrap()).unwrap();
        assert_eq!(value["formula"], json!({"total": 1, "thin": 1, "thick": 0}));
    }
}
