//! Deterministic JSON reports for the command-line front end. Key order is
//! fixed by struct field order; the timing field is the only quantity
//! excluded from the byte-determinism contract.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

impl ToolInfo {
    pub fn current() -> ToolInfo {
        ToolInfo { name: "trdom", version: env!("CARGO_PKG_VERSION") }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    /// FNV-1a 64 digest of the raw input bytes, hex.
    pub digest: String,
    pub order: usize,
    pub size: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub results: serde_json::Value,
    pub timing_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Verdict list plus summary as one JSON document (shared with the C ABI).
pub fn verdicts_json(
    verdicts: &[crate::theorems::Verdict],
    summary: crate::theorems::SuiteSummary,
) -> String {
    serde_json::to_string_pretty(&serde_json::json!({
        "verdicts": verdicts,
        "summary": summary,
    }))
    .expect("verdict serialization cannot fail")
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn digest_hex(bytes: &[u8]) -> String {
    format!("{:016x}", fnv1a64(bytes))
}
