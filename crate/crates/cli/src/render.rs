//! Text and JSON rendering. Every integer in JSON is a decimal string.

use std::fmt::Write as _;

use mpcoh::criteria::{RegularityResult, ShapeCertificate, SummandKind, UnitClass};
use mpcoh::expr::{format_atom, format_bundle, format_space};
use mpcoh::koszul::{alternating_chi, koszul_terms, verify_isomorphisms, KoszulVariant};
use mpcoh::{Bundle, CohTable, CriterionReport, Multidegree, Space, Verdict, Witness};
use serde_json::{json, Value};

/// Version of the JSON layout; bumped on any incompatible change.
pub const SCHEMA_VERSION: &str = "1";

pub struct Request {
    command: &'static str,
    space: Space,
    input: Option<String>,
}

impl Request {
    pub fn new(command: &'static str, space: &Space, input: &str) -> Self {
        Request {
            command,
            space: space.clone(),
            input: (!input.is_empty()).then(|| input.to_string()),
        }
    }
}

pub struct Output {
    request: Request,
    bundle: Option<String>,
    text: String,
    result: Value,
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|v| Value::String(v.to_string())).collect())
}

fn witness_json(w: &Witness, bundle: &Bundle) -> Value {
    json!({
        "degree": s(w.degree),
        "k": strings(w.k.as_slice()),
        "t": s(w.t),
        "q": strings(&w.q),
        "summand_index": s(w.atom_index),
        "summand": format_atom(&bundle.summands()[w.atom_index].0),
        "dim": s(&w.dim),
    })
}

fn witness_text(w: &Witness, bundle: &Bundle) -> String {
    format!(
        "i={} k={} t={} q=({}) in {} (dim {})",
        w.degree,
        w.k,
        w.t,
        w.q.iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(","),
        format_atom(&bundle.summands()[w.atom_index].0),
        w.dim
    )
}

fn verdict_json(v: &Verdict, bundle: &Bundle) -> Value {
    json!({
        "holds": v.holds,
        "witness": v.witness.as_ref().map(|w| witness_json(w, bundle)),
    })
}

fn certificate_json(c: &ShapeCertificate) -> Value {
    let mut body = match c {
        ShapeCertificate::Balanced { twists } => json!({
            "kind": "balanced",
            "twists": twists
                .iter()
                .map(|(t, m)| json!({ "t": s(t), "multiplicity": s(m) }))
                .collect::<Vec<_>>(),
        }),
        ShapeCertificate::UnitTwist { t, classes } => json!({
            "kind": "unit_twist",
            "t": s(t),
            "classes": classes
                .iter()
                .map(|c| match c {
                    UnitClass::Balanced => json!({ "class": "balanced" }),
                    UnitClass::Raised(j) => json!({ "class": "raised", "slot": s(j + 1) }),
                })
                .collect::<Vec<_>>(),
        }),
        ShapeCertificate::Summand { atom_index, kind } => {
            let kind = match kind {
                SummandKind::Trivial => json!({ "class": "trivial" }),
                SummandKind::Unit { slot } => json!({ "class": "unit", "slot": s(slot + 1) }),
                SummandKind::Differential { slot, p } => {
                    json!({ "class": "differential", "slot": s(slot + 1), "p": s(p) })
                }
            };
            json!({ "kind": "summand", "summand_index": s(atom_index), "summand": kind })
        }
    };
    body["text"] = s(c);
    body
}

impl Output {
    pub fn cohom(
        request: Request,
        bundle: &Bundle,
        twist: Option<Multidegree>,
        table: CohTable,
    ) -> Self {
        let chi = table.euler_char();
        let mut text = format!(
            "space   {}\nbundle  {}\n",
            bundle.space(),
            format_bundle(bundle)
        );
        for (q, h) in table.entries().iter().enumerate() {
            let _ = writeln!(text, "h^{q}     {h}");
        }
        let _ = writeln!(text, "chi     {chi}");
        Output {
            request,
            bundle: Some(format_bundle(bundle)),
            text,
            result: json!({
                "twist": twist.map(|k| strings(k.as_slice())),
                "h": strings(table.entries()),
                "chi": s(chi),
            }),
        }
    }

    pub fn regularity(request: Request, bundle: &Bundle, r: RegularityResult) -> Self {
        let mut text = match r.reg {
            Some(p) => format!("Reg = {p}\n"),
            None => "Reg not found\n".to_string(),
        };
        let _ = writeln!(text, "window  [{}, {}]", r.window.0, r.window.1);
        for w in &r.failures_below {
            let _ = writeln!(text, "fails one step below: {}", witness_text(w, bundle));
        }
        Output {
            request,
            bundle: Some(format_bundle(bundle)),
            text,
            result: json!({
                "reg": r.reg.map(s),
                "window": [s(r.window.0), s(r.window.1)],
                "failures_below": r.failures_below.iter().map(|w| witness_json(w, bundle)).collect::<Vec<_>>(),
            }),
        }
    }

    pub fn regular_at(request: Request, bundle: &Bundle, p: Multidegree, v: Verdict) -> Self {
        let mut text = format!("regular at {p}: {}\n", v.holds);
        if let Some(w) = &v.witness {
            let _ = writeln!(text, "witness: {}", witness_text(w, bundle));
        }
        let mut result = verdict_json(&v, bundle);
        result["at"] = strings(p.as_slice());
        Output {
            request,
            bundle: Some(format_bundle(bundle)),
            text,
            result,
        }
    }

    pub fn acm(request: Request, bundle: &Bundle, v: Verdict) -> Self {
        let mut text = format!("aCM: {}\n", v.holds);
        if let Some(w) = &v.witness {
            let _ = writeln!(text, "witness: {}", witness_text(w, bundle));
        }
        Output {
            request,
            bundle: Some(format_bundle(bundle)),
            text,
            result: verdict_json(&v, bundle),
        }
    }

    pub fn split(request: Request, bundle: &Bundle, r: CriterionReport) -> Self {
        let mut text = format!("criterion   {}\n", r.criterion());
        let _ = writeln!(text, "condition   {}", r.condition_holds());
        let _ = writeln!(text, "instances   {}", r.instances());
        if r.vacuous() {
            let _ = writeln!(
                text,
                "vacuous     true (no admissible instance on this space)"
            );
        }
        for w in r.condition_witnesses() {
            let _ = writeln!(text, "  witness   {}", witness_text(w, bundle));
        }
        let _ = writeln!(text, "shape       {}", r.shape_holds());
        if let Some(c) = r.shape_certificate() {
            let _ = writeln!(text, "  {c}");
        }
        let _ = writeln!(text, "consistent  {}", r.consistent());
        Output {
            request,
            bundle: Some(format_bundle(bundle)),
            text,
            result: json!({
                "criterion": r.criterion().id(),
                "condition_holds": r.condition_holds(),
                "condition_witnesses": r
                    .condition_witnesses()
                    .iter()
                    .map(|w| witness_json(w, bundle))
                    .collect::<Vec<_>>(),
                "instances": s(r.instances()),
                "vacuous": r.vacuous(),
                "shape_holds": r.shape_holds(),
                "shape_certificate": r.shape_certificate().map(certificate_json),
                "consistent": r.consistent(),
            }),
        }
    }

    pub fn koszul(request: Request, space: &Space) -> Self {
        let mut text = String::new();
        let mut complexes = Vec::new();
        let mut all = true;
        for v in KoszulVariant::ALL {
            let terms = koszul_terms(space, v);
            let chi = alternating_chi(space, v);
            all &= chi == 0.into();
            let shown: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            let body = if shown.is_empty() {
                "(empty)".to_string()
            } else {
                shown.join(" -> ")
            };
            let _ = writeln!(text, "{}  chi = {chi}  {body}", v.label());
            complexes.push(json!({
                "label": v.label(),
                "terms": terms
                    .iter()
                    .map(|t| json!({ "twist": strings(t.twist.as_slice()), "multiplicity": s(t.multiplicity) }))
                    .collect::<Vec<_>>(),
                "alternating_chi": s(chi),
            }));
        }
        let mut identities = Vec::new();
        for id in verify_isomorphisms(space) {
            all &= id.holds();
            let _ = writeln!(text, "{}  {id}", if id.holds() { "ok  " } else { "FAIL" });
            identities.push(json!({
                "label": id.label,
                "lhs": { "degree": s(id.lhs_degree), "twist": strings(id.lhs_twist.as_slice()), "dim": s(&id.lhs) },
                "rhs": { "degree": s(id.rhs_degree), "twist": strings(id.rhs_twist.as_slice()), "dim": s(&id.rhs) },
                "holds": id.holds(),
            }));
        }
        let _ = writeln!(
            text,
            "{}",
            if all {
                "all identities pass"
            } else {
                "some identities fail"
            }
        );
        Output {
            request,
            bundle: None,
            text,
            result: json!({ "complexes": complexes, "identities": identities, "all_pass": all }),
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn json(&self) -> String {
        let doc = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.request.command,
            "space": {
                "text": format_space(&self.request.space),
                "dims": strings(self.request.space.dims()),
            },
            "input": self.request.input,
            "bundle": self.bundle,
            "result": self.result,
        });
        serde_json::to_string_pretty(&doc).expect("JSON values always serialize")
    }
}
