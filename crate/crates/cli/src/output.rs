use critgroup::schema::JsonInt;
use critgroup::{AbelianGroupStructure, Int, IntMatrix};
use serde_json::{json, Value};

pub fn int(x: &Int) -> Value {
    serde_json::to_value(JsonInt(x.clone())).expect("integers serialize")
}

pub fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| ints(r)).collect())
}

pub fn group(g: &AbelianGroupStructure) -> Value {
    json!({
        "free_rank": g.free_rank,
        "torsion": ints(&g.torsion),
        "display": g.to_string(),
    })
}

pub fn opt_int(x: &Option<Int>) -> Value {
    x.as_ref().map_or(Value::Null, int)
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn join(v: &[Int]) -> String {
    v.iter().map(Int::to_string).collect::<Vec<_>>().join(", ")
}

/// Indents every line of a multi-line block.
pub fn indent(block: &str) -> String {
    block.lines().map(|l| format!("  {l}\n")).collect()
}
