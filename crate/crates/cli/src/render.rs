use std::fmt::Write;

use clap::ValueEnum;
use repdim::embed::Embedding;
use repdim::oracle::{OracleReport, VerifyReport};
use repdim::repnum::RepResult;
use repdim::spectral::Spectrum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
    Text,
}

/// Rounds to 12 significant digits so output does not depend on the last
/// bits of floating-point noise.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

pub fn num(x: f64) -> String {
    round12(x).to_string()
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round12(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

pub fn to_json<T: Serialize>(x: &T) -> Value {
    let mut v = serde_json::to_value(x).expect("serializable output");
    round_value(&mut v);
    v
}

fn label<T: Serialize>(x: &T) -> String {
    match serde_json::to_value(x) {
        Ok(Value::String(s)) => s,
        Ok(v) => v.to_string(),
        Err(_) => String::new(),
    }
}

/// One command result in all three renderings.
pub struct Record {
    pub json: Value,
    pub csv: String,
    pub text: String,
}

impl Record {
    pub fn render(&self, out: OutFormat) -> String {
        match out {
            OutFormat::Json => format!("{}\n", self.json),
            OutFormat::Csv => self.csv.clone(),
            OutFormat::Text => self.text.clone(),
        }
    }
}

fn rep_text(r: &RepResult, s: &mut String) {
    let _ = writeln!(s, "rep {}", r.rep);
    let _ = writeln!(s, "case {}", label(&r.case));
    if let Some(c) = &r.certificate {
        let _ = writeln!(s, "side {}", label(&c.side));
        let _ = writeln!(s, "branch {}", label(&c.branch));
        if let Some(b) = c.b {
            let _ = writeln!(s, "b {}", num(b));
        }
    }
}

pub fn repnum(r: &RepResult) -> Record {
    let mut text = String::new();
    rep_text(r, &mut text);
    let c = r.certificate.as_ref();
    let csv = format!(
        "rep,case,side,branch,b\n{},{},{},{},{}\n",
        r.rep,
        label(&r.case),
        c.map(|c| label(&c.side)).unwrap_or_default(),
        c.map(|c| label(&c.branch)).unwrap_or_default(),
        c.and_then(|c| c.b).map(num).unwrap_or_default(),
    );
    Record { json: to_json(r), csv, text }
}

fn points_csv(e: &Embedding) -> String {
    let mut s = String::new();
    for p in &e.points {
        let row: Vec<String> = p.iter().map(|&x| num(x)).collect();
        let _ = writeln!(s, "{}", row.join(","));
    }
    s
}

pub fn embed(e: &Embedding, r: &RepResult) -> Record {
    let mut json = Map::new();
    json.insert("embedding".into(), to_json(e));
    json.insert("rep".into(), to_json(r));
    let mut text = String::new();
    rep_text(r, &mut text);
    let _ = writeln!(text, "dim {}\nalpha {}\nbeta {}", e.dim, num(e.alpha), num(e.beta));
    for p in &e.points {
        let row: Vec<String> = p.iter().map(|&x| num(x)).collect();
        let _ = writeln!(text, "{}", row.join(" "));
    }
    Record { json: Value::Object(json), csv: points_csv(e), text }
}

pub fn spectrum(sp: &Spectrum) -> Record {
    let s = &sp.summary;
    let mut json = match to_json(s) {
        Value::Object(o) => o,
        _ => Map::new(),
    };
    let gap = s.min_gap();
    json.insert("min_gap".into(), gap.map_or(Value::Null, |g| to_json(&g)));
    json.insert("max_group_spread".into(), to_json(&sp.max_group_spread()));
    let mut csv = String::from("tau,mult,beta\n");
    let mut text = format!("n {}\n", s.n);
    for d in &s.distinct {
        let _ = writeln!(csv, "{},{},{}", num(d.tau), d.mult, num(d.main_angle));
        let _ = writeln!(text, "{:>16} x{:<3} beta {}", num(d.tau), d.mult, num(d.main_angle));
    }
    if let Some(g) = gap {
        let _ = writeln!(text, "min gap {}", num(g));
    }
    let _ = writeln!(text, "max group spread {}", num(sp.max_group_spread()));
    Record { json: Value::Object(json), csv, text }
}

pub fn verify(v: &VerifyReport, e: &Embedding) -> Record {
    let mut json = Map::new();
    json.insert("ok".into(), Value::Bool(v.ok));
    json.insert("dim".into(), e.dim.into());
    json.insert("alpha".into(), to_json(&e.alpha));
    json.insert("beta".into(), to_json(&e.beta));
    json.insert("reasons".into(), to_json(&v.reasons));
    let csv = format!("ok,reasons\n{},\"{}\"\n", v.ok, v.reasons.join("; ").replace('"', "'"));
    let mut text = if v.ok { "ok\n".to_string() } else { "failed\n".to_string() };
    for r in &v.reasons {
        let _ = writeln!(text, "  {r}");
    }
    Record { json: Value::Object(json), csv, text }
}

pub fn oracle(r: &OracleReport) -> Record {
    let mut csv = String::from("side,kind,b,is_edm,dim\n");
    for d in &r.details {
        let _ = writeln!(csv, "{},{},{},{},{}", label(&d.side), label(&d.kind), num(d.b), d.is_edm, d.dim);
    }
    let edm = r.details.iter().filter(|d| d.is_edm).count();
    let text = format!(
        "rep_oracle {}\ncritical_only {}\nsamples {} ({} valid)\n",
        r.rep_oracle,
        r.critical_only,
        r.details.len(),
        edm
    );
    Record { json: to_json(r), csv, text }
}
