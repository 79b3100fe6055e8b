use conjham_core::{ProblemInstance, Verdict, Witness};
use serde::Serialize;

/// Text is printed one `key: value` per line; JSON as a single line.
pub trait Output: Serialize {
    fn text_lines(&self) -> Vec<(&'static str, String)>;

    fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string(self).expect("record serializes"));
        } else {
            for (key, value) in self.text_lines() {
                println!("{key}: {value}");
            }
        }
    }
}

/// Stable JSON shape for construct, feasible, lexmin and table rows.
#[derive(Debug, Serialize)]
pub struct WitnessRecord {
    pub m: usize,
    pub n: usize,
    pub k: i64,
    pub alphabet: u8,
    pub feasible: bool,
    pub reason: &'static str,
    pub x: Option<String>,
    pub y: Option<String>,
    pub verified: bool,
    #[serde(skip)]
    capacity: Option<usize>,
    #[serde(skip)]
    detail: Option<&'static str>,
}

impl WitnessRecord {
    pub fn found(inst: &ProblemInstance, witness: &Witness) -> Self {
        WitnessRecord {
            m: inst.m(),
            n: inst.n(),
            k: inst.k(),
            alphabet: inst.alphabet().size(),
            feasible: true,
            reason: "OK",
            x: Some(witness.x().to_string()),
            y: Some(witness.y().to_string()),
            verified: true,
            capacity: None,
            detail: None,
        }
    }

    pub fn absent(inst: &ProblemInstance, verdict: &Verdict) -> Self {
        WitnessRecord {
            m: inst.m(),
            n: inst.n(),
            k: inst.k(),
            alphabet: inst.alphabet().size(),
            feasible: verdict.feasible(),
            reason: verdict.reason.code(),
            x: None,
            y: None,
            verified: false,
            capacity: Some(verdict.capacity),
            detail: Some(verdict.reason.describe()),
        }
    }
}

impl Output for WitnessRecord {
    fn text_lines(&self) -> Vec<(&'static str, String)> {
        let mut lines = vec![
            ("m", self.m.to_string()),
            ("n", self.n.to_string()),
            ("k", self.k.to_string()),
            ("alphabet", self.alphabet.to_string()),
            ("feasible", self.feasible.to_string()),
            ("reason", self.reason.to_string()),
        ];
        if let Some(capacity) = self.capacity {
            lines.push(("capacity", capacity.to_string()));
        }
        if let Some(detail) = self.detail {
            lines.push(("detail", detail.to_string()));
        }
        lines.push(("x", self.x.clone().unwrap_or_else(|| "none".into())));
        lines.push(("y", self.y.clone().unwrap_or_else(|| "none".into())));
        lines.push(("verified", self.verified.to_string()));
        lines
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub x: String,
    pub y: String,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub cycles: Vec<usize>,
    pub common_power: bool,
}

impl Output for CheckReport {
    fn text_lines(&self) -> Vec<(&'static str, String)> {
        let cycles: Vec<String> = self.cycles.iter().map(ToString::to_string).collect();
        vec![
            ("x", self.x.clone()),
            ("y", self.y.clone()),
            ("m", self.m.to_string()),
            ("n", self.n.to_string()),
            ("k", self.k.to_string()),
            ("cycles", cycles.join(" ")),
            ("common_power", self.common_power.to_string()),
        ]
    }
}
