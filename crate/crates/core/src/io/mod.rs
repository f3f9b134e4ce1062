//! Serialized output and the on-disk lattice cache.
//!
//! Every document has the same envelope:
//!
//! ```json
//! {"schema": "dnbranch/1", "e": 4, "regime": "B", "l": 2, "kind": "lattice", "data": {}}
//! ```
//!
//! `e` and `l` are integers or the string `"inf"`. Bipartitions are written
//! in the text form of [`Bipartition`]. Object keys come out sorted and
//! arrays keep the library's deterministic order, so equal documents
//! serialize to identical bytes.

mod cache;
mod dot;

use serde_json::{json, Map, Value};

pub use cache::Cache;
pub use dot::{branching_dot, lattice_dot};

use crate::branching::{InvolutionSummary, IrreducibleLabel, ResidueCounts, Sign, SocleDecomposition};
use crate::crystal::{Color, Edge, Lattice};
use crate::diagram::{Bipartition, Component, Node};
use crate::error::{Error, Result};
use crate::oracle::{Failure, VerificationReport};
use crate::params::{CrystalParams, Modulus};

pub const SCHEMA: &str = "dnbranch/1";

const ENVELOPE_KEYS: [&str; 6] = ["data", "e", "kind", "l", "regime", "schema"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Lattice(Lattice),
    Labels { n: usize, labels: Vec<IrreducibleLabel> },
    Branching { n: usize, socles: Vec<SocleDecomposition> },
    Involution(InvolutionSummary),
    Dimension { lambda: Bipartition, dimension: u128 },
    Report(VerificationReport),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Lattice(_) => "lattice",
            Payload::Labels { .. } => "labels",
            Payload::Branching { .. } => "branching",
            Payload::Involution(_) => "involution",
            Payload::Dimension { .. } => "dimension",
            Payload::Report(_) => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub params: CrystalParams,
    pub payload: Payload,
}

impl Document {
    pub fn new(params: CrystalParams, payload: Payload) -> Self {
        Document { params, payload }
    }
}

// ---------------------------------------------------------------- writing

fn modulus_value(m: Modulus) -> Value {
    match m {
        Modulus::Finite(v) => json!(v),
        Modulus::Infinite => json!("inf"),
    }
}

fn label_value(label: &IrreducibleLabel) -> Value {
    let mut obj = Map::new();
    obj.insert("bipartition".into(), json!(label.rep.to_string()));
    if let Some(s) = label.sign() {
        obj.insert("sign".into(), json!(s.symbol().to_string()));
    }
    Value::Object(obj)
}

fn socle_value(s: &SocleDecomposition) -> Value {
    json!({
        "source": label_value(&s.source),
        "summands": s.summands.iter().map(label_value).collect::<Vec<_>>(),
    })
}

fn node_value(n: &Node) -> Value {
    json!([n.component.number(), n.row, n.col])
}

fn big_value(v: u128) -> Value {
    match u64::try_from(v) {
        Ok(small) => json!(small),
        Err(_) => json!(v.to_string()),
    }
}

fn lattice_value(lattice: &Lattice) -> Value {
    let levels: Vec<Vec<String>> = lattice
        .levels()
        .iter()
        .map(|level| level.iter().map(ToString::to_string).collect())
        .collect();
    let edges: Vec<Value> = lattice
        .edges()
        .map(|e| json!([e.from.to_string(), e.color.residue.value(), e.to.to_string()]))
        .collect();
    json!({"n": lattice.n(), "levels": levels, "edges": edges})
}

fn report_value(r: &VerificationReport) -> Value {
    let failures: Vec<Value> = r
        .failures
        .iter()
        .map(|f| json!({"input": f.input, "expected": f.expected, "got": f.got}))
        .collect();
    json!({
        "suite": r.suite,
        "n_min": r.n_min,
        "n_max": r.n_max,
        "cases": r.cases,
        "status": r.status().to_string(),
        "truncated": r.truncated,
        "elapsed_ns": u64::try_from(r.elapsed.as_nanos()).unwrap_or(u64::MAX),
        "failures": failures,
    })
}

fn payload_value(payload: &Payload, params: &CrystalParams) -> Value {
    match payload {
        Payload::Lattice(l) => lattice_value(l),
        Payload::Labels { n, labels } => json!({
            "n": n,
            "labels": labels.iter().map(label_value).collect::<Vec<_>>(),
        }),
        Payload::Branching { n, socles } => json!({
            "n": n,
            "socles": socles.iter().map(socle_value).collect::<Vec<_>>(),
        }),
        Payload::Involution(s) => json!({
            "bipartition": s.lambda.to_string(),
            "image": s.image.to_string(),
            "fixed": s.fixed,
            "special_node": s.special.as_ref().map(node_value),
            "residue_counts": s.residue_counts.0.iter().map(|(r, c)| json!([r, c])).collect::<Vec<_>>(),
            "balanced": s.residue_counts.is_balanced(params),
        }),
        Payload::Dimension { lambda, dimension } => json!({
            "bipartition": lambda.to_string(),
            "dimension": big_value(*dimension),
        }),
        Payload::Report(r) => report_value(r),
    }
}

/// Canonical text of a document: two-space indentation, sorted keys, one
/// trailing newline.
pub fn serialize_json(doc: &Document) -> String {
    let p = &doc.params;
    let value = json!({
        "schema": SCHEMA,
        "e": modulus_value(p.e()),
        "regime": p.regime().to_string(),
        "l": modulus_value(p.l()),
        "kind": doc.payload.kind(),
        "data": payload_value(&doc.payload, p),
    });
    let mut text = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
    text.push('\n');
    text
}

// ---------------------------------------------------------------- reading

fn mismatch(at: &str, what: impl std::fmt::Display) -> Error {
    Error::SchemaMismatch(format!("{at}: {what}"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, at: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| mismatch(at, format_args!("missing key {key:?}")))
}

fn object<'a>(v: &'a Value, at: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| mismatch(at, "expected an object"))
}

fn array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| mismatch(at, "expected an array"))
}

fn string<'a>(v: &'a Value, at: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| mismatch(at, "expected a string"))
}

fn boolean(v: &Value, at: &str) -> Result<bool> {
    v.as_bool().ok_or_else(|| mismatch(at, "expected a boolean"))
}

fn unsigned(v: &Value, at: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| mismatch(at, "expected a non-negative integer"))
}

fn count(v: &Value, at: &str) -> Result<usize> {
    usize::try_from(unsigned(v, at)?).map_err(|_| mismatch(at, "integer out of range"))
}

fn bipartition(v: &Value, at: &str) -> Result<Bipartition> {
    string(v, at)?
        .parse()
        .map_err(|e| mismatch(at, format_args!("invalid bipartition: {e}")))
}

fn modulus(v: &Value, at: &str) -> Result<Modulus> {
    match v {
        Value::String(s) if s == "inf" => Ok(Modulus::Infinite),
        Value::Number(_) => {
            let m = u32::try_from(unsigned(v, at)?).map_err(|_| mismatch(at, "integer out of range"))?;
            Ok(Modulus::Finite(m))
        }
        _ => Err(mismatch(at, "expected an integer or \"inf\"")),
    }
}

fn params_from(obj: &Map<String, Value>) -> Result<CrystalParams> {
    let e = modulus(get(obj, "e", "$")?, "$.e")?;
    let l = modulus(get(obj, "l", "$")?, "$.l")?;
    let regime = string(get(obj, "regime", "$")?, "$.regime")?;
    match (regime, e, l) {
        ("A", _, _) if e == l && e.finite().is_none_or(|v| v >= 2) => Ok(CrystalParams::regime_a(l)),
        ("B", Modulus::Finite(ev), Modulus::Finite(lv)) if lv >= 1 && ev == 2 * lv => Ok(CrystalParams::regime_b(lv)),
        ("A" | "B", _, _) => Err(mismatch("$", format_args!("inconsistent parameters e={e} regime={regime} l={l}"))),
        _ => Err(mismatch("$.regime", format_args!("unknown regime {regime:?}"))),
    }
}

fn label_from(v: &Value, at: &str) -> Result<IrreducibleLabel> {
    let obj = object(v, at)?;
    let rep = bipartition(get(obj, "bipartition", at)?, &format!("{at}.bipartition"))?;
    match obj.get("sign") {
        None => Ok(IrreducibleLabel::unsplit(rep)),
        Some(s) => {
            let at = format!("{at}.sign");
            let sign = Sign::parse(string(s, &at)?).ok_or_else(|| mismatch(&at, "expected \"+\" or \"-\""))?;
            Ok(IrreducibleLabel::split(rep, sign))
        }
    }
}

fn labels_from(v: &Value, at: &str) -> Result<Vec<IrreducibleLabel>> {
    array(v, at)?
        .iter()
        .enumerate()
        .map(|(i, x)| label_from(x, &format!("{at}[{i}]")))
        .collect()
}

fn node_from(v: &Value, at: &str) -> Result<Node> {
    let items = array(v, at)?;
    if items.len() != 3 {
        return Err(mismatch(at, "expected [component, row, col]"));
    }
    let c = Component::from_number(count(&items[0], at)?).ok_or_else(|| mismatch(at, "component must be 1 or 2"))?;
    let (row, col) = (count(&items[1], at)?, count(&items[2], at)?);
    if row == 0 || col == 0 {
        return Err(mismatch(at, "rows and columns are 1-based"));
    }
    Ok(Node { component: c, row, col })
}

fn lattice_from(data: &Map<String, Value>, params: CrystalParams) -> Result<Lattice> {
    let n = count(get(data, "n", "$.data")?, "$.data.n")?;
    let raw_levels = array(get(data, "levels", "$.data")?, "$.data.levels")?;
    if raw_levels.len() != n + 1 {
        return Err(mismatch("$.data.levels", format_args!("expected {} levels", n + 1)));
    }
    let mut levels: Vec<Vec<Bipartition>> = Vec::with_capacity(n + 1);
    for (m, raw) in raw_levels.iter().enumerate() {
        let at = format!("$.data.levels[{m}]");
        let mut level = Vec::new();
        for (i, v) in array(raw, &at)?.iter().enumerate() {
            let at = format!("{at}[{i}]");
            let b = bipartition(v, &at)?;
            if b.size() != m {
                return Err(mismatch(&at, format_args!("{b} does not have size {m}")));
            }
            if level.last().is_some_and(|prev| prev >= &b) {
                return Err(mismatch(&at, "level is not strictly increasing"));
            }
            level.push(b);
        }
        levels.push(level);
    }
    if levels[0] != [Bipartition::empty()] {
        return Err(mismatch("$.data.levels[0]", "level 0 must hold only -|-"));
    }

    let lookup: Vec<std::collections::HashSet<&Bipartition>> =
        levels.iter().map(|l| l.iter().collect()).collect();
    let mut edges: Vec<Vec<Edge>> = vec![Vec::new(); n];
    let mut reached: std::collections::HashSet<&Bipartition> = std::collections::HashSet::new();
    for (i, v) in array(get(data, "edges", "$.data")?, "$.data.edges")?.iter().enumerate() {
        let at = format!("$.data.edges[{i}]");
        let items = array(v, &at)?;
        if items.len() != 3 {
            return Err(mismatch(&at, "expected [from, residue, to]"));
        }
        let from = bipartition(&items[0], &at)?;
        let residue = items[1].as_i64().ok_or_else(|| mismatch(&at, "residue must be an integer"))?;
        let to = bipartition(&items[2], &at)?;
        let m = from.size();
        if m >= n || !lookup[m].contains(&from) || !lookup[m + 1].contains(&to) {
            return Err(mismatch(&at, "edge endpoints are not lattice vertices of adjacent levels"));
        }
        let node = from
            .addable_nodes()
            .into_iter()
            .find(|a| from.add_unchecked(a) == to)
            .ok_or_else(|| mismatch(&at, format_args!("{to} is not {from} plus one node")))?;
        let color = Color::of_node(&node, &params);
        if color.residue.value() != residue {
            return Err(mismatch(&at, format_args!("added node {node} has residue {}", color.residue)));
        }
        let edge = Edge { from, color, to };
        if edges[m].last().is_some_and(|prev| prev >= &edge) {
            return Err(mismatch(&at, "edges are not in canonical order"));
        }
        edges[m].push(edge);
    }
    for level in &edges {
        for e in level {
            reached.insert(&e.to);
        }
    }
    for (m, level) in levels.iter().enumerate().skip(1) {
        if let Some(b) = level.iter().find(|b| !reached.contains(b)) {
            return Err(mismatch(&format!("$.data.levels[{m}]"), format_args!("{b} has no incoming edge")));
        }
    }
    Ok(Lattice::from_parts(params, levels, edges))
}

fn report_from(data: &Map<String, Value>, params: CrystalParams) -> Result<VerificationReport> {
    let at = "$.data";
    let mut r = VerificationReport::new(
        string(get(data, "suite", at)?, "$.data.suite")?,
        params,
        count(get(data, "n_min", at)?, "$.data.n_min")?,
        count(get(data, "n_max", at)?, "$.data.n_max")?,
    );
    r.cases = count(get(data, "cases", at)?, "$.data.cases")?;
    r.truncated = boolean(get(data, "truncated", at)?, "$.data.truncated")?;
    r.elapsed = std::time::Duration::from_nanos(unsigned(get(data, "elapsed_ns", at)?, "$.data.elapsed_ns")?);
    for (i, f) in array(get(data, "failures", at)?, "$.data.failures")?.iter().enumerate() {
        let at = format!("$.data.failures[{i}]");
        let obj = object(f, &at)?;
        let text = |k: &str| -> Result<String> { Ok(string(get(obj, k, &at)?, &at)?.to_string()) };
        r.failures.push(Failure {
            input: text("input")?,
            expected: text("expected")?,
            got: text("got")?,
        });
    }
    let status = string(get(data, "status", at)?, "$.data.status")?;
    if status != r.status().to_string() {
        return Err(mismatch("$.data.status", format_args!("{status} contradicts the recorded failures")));
    }
    Ok(r)
}

fn involution_from(data: &Map<String, Value>) -> Result<InvolutionSummary> {
    let at = "$.data";
    let special = match get(data, "special_node", at)? {
        Value::Null => None,
        v => Some(node_from(v, "$.data.special_node")?),
    };
    let mut counts = std::collections::BTreeMap::new();
    for (i, pair) in array(get(data, "residue_counts", at)?, "$.data.residue_counts")?.iter().enumerate() {
        let at = format!("$.data.residue_counts[{i}]");
        match array(pair, &at)?.as_slice() {
            [r, c] => {
                let r = r.as_i64().ok_or_else(|| mismatch(&at, "residue must be an integer"))?;
                counts.insert(r, count(c, &at)?);
            }
            _ => return Err(mismatch(&at, "expected [residue, count]")),
        }
    }
    Ok(InvolutionSummary {
        lambda: bipartition(get(data, "bipartition", at)?, "$.data.bipartition")?,
        image: bipartition(get(data, "image", at)?, "$.data.image")?,
        fixed: boolean(get(data, "fixed", at)?, "$.data.fixed")?,
        special,
        residue_counts: ResidueCounts(counts),
    })
}

fn dimension_from(v: &Value) -> Result<u128> {
    let at = "$.data.dimension";
    match v {
        Value::String(s) => s.parse().map_err(|_| mismatch(at, "expected a decimal integer")),
        _ => Ok(unsigned(v, at)? as u128),
    }
}

fn payload_from(kind: &str, data: &Map<String, Value>, params: CrystalParams) -> Result<Payload> {
    let at = "$.data";
    Ok(match kind {
        "lattice" => Payload::Lattice(lattice_from(data, params)?),
        "labels" => Payload::Labels {
            n: count(get(data, "n", at)?, "$.data.n")?,
            labels: labels_from(get(data, "labels", at)?, "$.data.labels")?,
        },
        "branching" => {
            let mut socles = Vec::new();
            for (i, s) in array(get(data, "socles", at)?, "$.data.socles")?.iter().enumerate() {
                let at = format!("$.data.socles[{i}]");
                let obj = object(s, &at)?;
                socles.push(SocleDecomposition::new(
                    label_from(get(obj, "source", &at)?, &format!("{at}.source"))?,
                    labels_from(get(obj, "summands", &at)?, &format!("{at}.summands"))?,
                ));
            }
            Payload::Branching {
                n: count(get(data, "n", at)?, "$.data.n")?,
                socles,
            }
        }
        "involution" => Payload::Involution(involution_from(data)?),
        "dimension" => Payload::Dimension {
            lambda: bipartition(get(data, "bipartition", at)?, "$.data.bipartition")?,
            dimension: dimension_from(get(data, "dimension", at)?)?,
        },
        "report" => Payload::Report(report_from(data, params)?),
        other => return Err(mismatch("$.kind", format_args!("unknown kind {other:?}"))),
    })
}

/// Parses a document. Malformed JSON gives [`Error::Parse`] with its line and
/// column; well-formed JSON that does not match the schema gives
/// [`Error::SchemaMismatch`] naming the offending path.
pub fn parse_json(text: &str) -> Result<Document> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = object(&value, "$")?;
    match obj.get("schema") {
        Some(Value::String(s)) if s == SCHEMA => {}
        Some(other) => return Err(mismatch("$.schema", format_args!("unsupported schema {other}, expected {SCHEMA:?}"))),
        None => return Err(mismatch("$", "missing key \"schema\"")),
    }
    if let Some(extra) = obj.keys().find(|k| !ENVELOPE_KEYS.contains(&k.as_str())) {
        return Err(mismatch("$", format_args!("unexpected key {extra:?}")));
    }
    let params = params_from(obj)?;
    let kind = string(get(obj, "kind", "$")?, "$.kind")?;
    let data = object(get(obj, "data", "$")?, "$.data")?;
    let payload = payload_from(kind, data, params)?;
    Ok(Document { params, payload })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branching::{self, socle_restriction};
    use crate::params::classify_regime;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn round_trip(doc: &Document) {
        let text = serialize_json(doc);
        let back = parse_json(&text).unwrap();
        assert_eq!(&back, doc);
        assert_eq!(serialize_json(&back), text);
    }

    #[test]
    fn lattice_round_trip() {
        let params = classify_regime(5, Modulus::Finite(4)).unwrap();
        let lattice = Lattice::build(5, params).unwrap();
        round_trip(&Document::new(params, Payload::Lattice(lattice)));
        let a2 = CrystalParams::regime_a(Modulus::Finite(2));
        round_trip(&Document::new(a2, Payload::Lattice(Lattice::build(4, a2).unwrap())));
        let inf = classify_regime(4, Modulus::Infinite).unwrap();
        round_trip(&Document::new(inf, Payload::Lattice(Lattice::build(4, inf).unwrap())));
    }

    #[test]
    fn socle_round_trip() {
        let params = classify_regime(5, Modulus::Infinite).unwrap();
        let lattice = Lattice::build(5, params).unwrap();
        let label = branching::label_for(&bp("2,1|1,1"), None, &lattice).unwrap();
        let socle = socle_restriction(&label, &lattice).unwrap();
        round_trip(&Document::new(params, Payload::Branching { n: 5, socles: vec![socle] }));
        round_trip(&Document::new(
            params,
            Payload::Labels {
                n: 4,
                labels: branching::labels(4, &lattice).unwrap(),
            },
        ));
    }

    #[test]
    fn other_kinds_round_trip() {
        let params = classify_regime(4, Modulus::Finite(4)).unwrap();
        let lattice = Lattice::build(4, params).unwrap();
        let summary = InvolutionSummary::compute(&bp("1|2,1"), &lattice).unwrap();
        round_trip(&Document::new(params, Payload::Involution(summary)));
        round_trip(&Document::new(
            params,
            Payload::Dimension {
                lambda: bp("2,1|1,1"),
                dimension: 20,
            },
        ));
        round_trip(&Document::new(
            params,
            Payload::Dimension {
                lambda: bp("2,1|1,1"),
                dimension: u128::MAX,
            },
        ));
        let report = crate::oracle::verify_h_path_independence(3, &params).unwrap();
        round_trip(&Document::new(params, Payload::Report(report)));
    }

    #[test]
    fn keys_are_sorted() {
        let params = classify_regime(2, Modulus::Infinite).unwrap();
        let text = serialize_json(&Document::new(
            params,
            Payload::Dimension {
                lambda: bp("1|1"),
                dimension: 2,
            },
        ));
        let order: Vec<usize> = ["\"data\"", "\"e\"", "\"kind\"", "\"l\"", "\"regime\"", "\"schema\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]), "{text}");
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(parse_json("{}"), Err(Error::SchemaMismatch(_))));
        assert!(matches!(parse_json("[]"), Err(Error::SchemaMismatch(_))));
        let wrong = r#"{"schema":"dnbranch/2","e":4,"regime":"B","l":2,"kind":"labels","data":{}}"#;
        assert!(matches!(parse_json(wrong), Err(Error::SchemaMismatch(_))));
        let bad_params = r#"{"schema":"dnbranch/1","e":4,"regime":"B","l":3,"kind":"labels","data":{"n":0,"labels":[]}}"#;
        assert!(matches!(parse_json(bad_params), Err(Error::SchemaMismatch(_))));
    }

    #[test]
    fn syntax_errors_carry_location() {
        match parse_json("{\n  \"schema\": }") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 13)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tampered_lattice_is_rejected() {
        let params = classify_regime(3, Modulus::Finite(4)).unwrap();
        let lattice = Lattice::build(3, params).unwrap();
        let text = serialize_json(&Document::new(params, Payload::Lattice(lattice)));
        // wrong residue on the first edge
        let tampered = text.replacen("\"-|-\",\n        0,", "\"-|-\",\n        1,", 1);
        assert_ne!(tampered, text);
        assert!(matches!(parse_json(&tampered), Err(Error::SchemaMismatch(_))));
    }
}
