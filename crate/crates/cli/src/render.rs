//! JSON renderings of the library's data: elements, polynomials,
//! matrices, walls, and verification reports. Rationals appear as
//! `p/q` strings; nothing is ever a float.

use serde_json::{json, Value};

use nsymkit::compositions::enumerate_compositions;
use nsymkit::polyreal::{CPoly, NcPoly};
use nsymkit::rational::format_rat;
use nsymkit::report::Report;
use nsymkit::transmat::TransitionMatrix;
use nsymkit::walls::{Wall, WallStat};
use nsymkit::{NSymElem, QSymElem};

pub fn element_json_nsym(elem: &NSymElem) -> Value {
    let terms: Vec<Value> = elem
        .canonical_terms()
        .iter()
        .map(|(index, coeff)| {
            json!({
                "index": index.parts(),
                "coeff": format_rat(coeff),
            })
        })
        .collect();
    json!({
        "degree": elem.degree(),
        "basis": elem.basis().tag(),
        "terms": terms,
    })
}

pub fn element_json_qsym(elem: &QSymElem) -> Value {
    let terms: Vec<Value> = elem
        .canonical_terms()
        .iter()
        .map(|(index, coeff)| {
            json!({
                "index": index.parts(),
                "coeff": format_rat(coeff),
            })
        })
        .collect();
    json!({
        "degree": elem.degree(),
        "basis": elem.basis().tag(),
        "terms": terms,
    })
}

pub fn ncpoly_json(poly: &NcPoly) -> Value {
    let terms: Vec<Value> = poly
        .canonical_terms()
        .iter()
        .map(|(word, coeff)| {
            json!({
                "word": word,
                "coeff": format_rat(coeff),
            })
        })
        .collect();
    json!({ "vars": poly.vars(), "terms": terms })
}

pub fn cpoly_json(poly: &CPoly) -> Value {
    let terms: Vec<Value> = poly
        .canonical_terms()
        .iter()
        .map(|(exponents, coeff)| {
            json!({
                "exponents": exponents,
                "coeff": format_rat(coeff),
            })
        })
        .collect();
    json!({ "vars": poly.vars(), "terms": terms })
}

pub fn matrix_json(description: &str, matrix: &TransitionMatrix) -> Value {
    let index: Vec<String> = enumerate_compositions(matrix.degree())
        .iter()
        .map(|c| c.to_string())
        .collect();
    let entries: Vec<Vec<String>> = (0..matrix.dim())
        .map(|i| {
            (0..matrix.dim())
                .map(|j| format_rat(matrix.get(i, j)))
                .collect()
        })
        .collect();
    json!({
        "matrix": description,
        "degree": matrix.degree(),
        "index": index,
        "entries": entries,
    })
}

pub fn report_json(suite: &str, n: u32, report: &Report) -> Value {
    let checks: Vec<Value> = report
        .checks()
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    json!({
        "suite": suite,
        "n": n,
        "passed": report.passed(),
        "checks": checks,
    })
}

pub fn wall_json(wall: &Wall, stats: bool) -> Value {
    let mut value = json!({
        "shape": wall.shape().parts(),
        "type": wall.brick_type().parts(),
        "courses": wall.courses().iter().map(|c| c.parts().to_vec()).collect::<Vec<_>>(),
    });
    if stats {
        value["stats"] = json!({
            "lp": format_rat(&wall.stat(WallStat::LastParts)),
            "fp": format_rat(&wall.stat(WallStat::FirstParts)),
            "pb": format_rat(&wall.stat(WallStat::BrickCounts)),
            "fb": format_rat(&wall.stat(WallStat::BrickCountFactorials)),
        });
    }
    value
}
