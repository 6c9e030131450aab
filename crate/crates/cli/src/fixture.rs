//! The appendix table of exceptional orbits, embedded at build time.

use serde::Deserialize;

const APPENDIX_JSON: &str = include_str!("../fixtures/appendix.json");

#[derive(Debug, Deserialize)]
pub struct Appendix {
    pub version: u32,
    pub citation: String,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Deserialize)]
pub struct Entry {
    pub m: u32,
    pub e_m: usize,
    pub o_m: usize,
    pub representatives: Vec<[u32; 4]>,
}

pub fn appendix() -> Appendix {
    serde_json::from_str(APPENDIX_JSON).expect("embedded appendix fixture is valid JSON")
}
