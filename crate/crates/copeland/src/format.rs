//! Line-based text formats for elections, control instances and outcome tables.
//!
//! ```text
//! ELECTION v1
//! CANDIDATES a b c
//! ORDER 2 : a b c
//! TABLE 1 : a>b c>a b>c
//! ```
//!
//! Control instances may add `SPOILERS <name>...`, `POOL <mult> : <order or table>`,
//! `TARGET <name>` and `BUDGET <k>`. Outcome tables use `COT v1`, an optional
//! `CANDIDATES` line, and one `PAIR a b {a|b|tie}` line per unordered pair.

use crate::control::ControlInstance;
use crate::cot::{Cot, Outcome};
use crate::election::{pair_count, pair_index, Election, PairTable, Preference, VoterBlock};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt::Write as _;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().split_ascii_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !t.is_empty())
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

/// An election file, with the optional control-instance fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub election: Election,
    pub spoilers: Vec<usize>,
    pub pool: Vec<VoterBlock>,
    pub target: Option<usize>,
    pub budget: Option<u64>,
}

impl Document {
    pub fn plain(election: Election) -> Document {
        Document { election, spoilers: Vec::new(), pool: Vec::new(), target: None, budget: None }
    }

    pub fn from_instance(inst: &ControlInstance) -> Document {
        Document {
            election: inst.election.clone(),
            spoilers: inst.spoilers.clone(),
            pool: inst.pool.clone(),
            target: Some(inst.target),
            budget: Some(inst.budget),
        }
    }

    /// Builds a control instance; explicit arguments take precedence over the file's fields.
    pub fn instance(&self, target: Option<usize>, budget: Option<u64>) -> Result<ControlInstance> {
        let target = target
            .or(self.target)
            .ok_or_else(|| Error::InvalidInstance("no target candidate given".into()))?;
        let inst = ControlInstance {
            election: self.election.clone(),
            spoilers: self.spoilers.clone(),
            pool: self.pool.clone(),
            target,
            budget: budget.or(self.budget).unwrap_or(0),
        };
        inst.validate()?;
        Ok(inst)
    }
}

struct Names<'a> {
    ids: HashMap<&'a str, usize>,
}

impl<'a> Names<'a> {
    fn get(&self, line: usize, n: &str) -> Result<usize> {
        self.ids.get(n).copied().ok_or_else(|| perr(line, format!("unknown candidate {n}")))
    }
}

fn parse_mult(line: usize, tok: &[&str]) -> Result<u64> {
    if tok.len() < 3 || tok[2] != ":" {
        return Err(perr(line, format!("expected `{} <mult> : ...`", tok[0])));
    }
    match tok[1].parse::<u64>() {
        Ok(k) if k > 0 && tok[1].bytes().all(|b| b.is_ascii_digit()) => Ok(k),
        _ => Err(perr(line, format!("bad multiplicity {}", tok[1]))),
    }
}

fn parse_order(line: usize, names: &Names, m: usize, tok: &[&str]) -> Result<Preference> {
    let mut seen = vec![false; m];
    let mut order = Vec::with_capacity(m);
    for t in tok {
        let c = names.get(line, t)?;
        if seen[c] {
            return Err(perr(line, format!("{t} listed twice")));
        }
        seen[c] = true;
        order.push(c);
    }
    if order.len() != m {
        return Err(perr(line, format!("order lists {} of {m} candidates", order.len())));
    }
    Ok(Preference::Order(order))
}

fn parse_table(line: usize, names: &Names, m: usize, tok: &[&str]) -> Result<Preference> {
    let mut bits = vec![false; pair_count(m)];
    let mut seen = vec![false; pair_count(m)];
    for t in tok {
        let (a, b) = t.split_once('>').ok_or_else(|| perr(line, format!("expected a>b, got {t}")))?;
        let (a, b) = (names.get(line, a)?, names.get(line, b)?);
        if a == b {
            return Err(perr(line, format!("self comparison {t}")));
        }
        let idx = pair_index(m, a, b);
        if seen[idx] {
            return Err(perr(line, format!("pair in {t} given twice")));
        }
        seen[idx] = true;
        bits[idx] = a < b;
    }
    if seen.iter().any(|&s| !s) {
        return Err(perr(line, "table must settle every pair"));
    }
    Ok(Preference::Table(PairTable::from_bits(m, bits)))
}

fn parse_candidates<'a>(line: usize, tok: &[&'a str]) -> Result<(Vec<String>, Names<'a>)> {
    let mut ids = HashMap::new();
    for (i, &t) in tok.iter().enumerate() {
        if !valid_name(t) {
            return Err(perr(line, format!("bad candidate name {t:?}")));
        }
        if ids.insert(t, i).is_some() {
            return Err(perr(line, format!("duplicate candidate {t}")));
        }
    }
    Ok((tok.iter().map(|s| s.to_string()).collect(), Names { ids }))
}

pub fn parse_document(text: &str) -> Result<Document> {
    let mut it = lines(text);
    match it.next() {
        Some((_, t)) if t == ["ELECTION", "v1"] => {}
        Some((l, _)) => return Err(perr(l, "expected `ELECTION v1` header")),
        None => return Err(perr(1, "empty input")),
    }
    let (line, tok) = it.next().ok_or_else(|| perr(1, "missing CANDIDATES line"))?;
    if tok[0] != "CANDIDATES" {
        return Err(perr(line, "expected CANDIDATES line"));
    }
    if tok.len() == 1 {
        return Err(Error::EmptyCandidates);
    }
    let (cand, names) = parse_candidates(line, &tok[1..])?;
    let m = cand.len();
    let (mut voters, mut pool, mut spoilers) = (Vec::new(), Vec::new(), None);
    let (mut target, mut budget) = (None, None);
    for (line, tok) in it {
        match tok[0] {
            "ORDER" | "TABLE" | "POOL" => {
                let k = parse_mult(line, &tok)?;
                let body = &tok[3..];
                let table = match tok[0] {
                    "TABLE" => true,
                    "ORDER" => false,
                    _ => body.iter().any(|t| t.contains('>')),
                };
                let pref =
                    if table { parse_table(line, &names, m, body)? } else { parse_order(line, &names, m, body)? };
                let block = VoterBlock::new(pref, k);
                if tok[0] == "POOL" {
                    pool.push(block);
                } else {
                    voters.push(block);
                }
            }
            "SPOILERS" if spoilers.is_none() => {
                let mut s = Vec::new();
                for t in &tok[1..] {
                    let c = names.get(line, t)?;
                    if s.contains(&c) {
                        return Err(perr(line, format!("{t} listed twice")));
                    }
                    s.push(c);
                }
                spoilers = Some(s);
            }
            "TARGET" if target.is_none() && tok.len() == 2 => target = Some(names.get(line, tok[1])?),
            "BUDGET" if budget.is_none() && tok.len() == 2 => {
                budget = Some(tok[1].parse().map_err(|_| perr(line, format!("bad budget {}", tok[1])))?)
            }
            other => return Err(perr(line, format!("unexpected {other} line"))),
        }
    }
    let spoilers = spoilers.unwrap_or_default();
    if target.is_some_and(|t| spoilers.contains(&t)) {
        return Err(Error::InvalidInstance("target must be a registered candidate".into()));
    }
    Ok(Document { election: Election::new(cand, voters)?, spoilers, pool, target, budget })
}

pub fn parse_election(text: &str) -> Result<Election> {
    Ok(parse_document(text)?.election)
}

fn write_pref(out: &mut String, names: &[String], pref: &Preference) {
    match pref {
        Preference::Order(o) => {
            for &c in o {
                let _ = write!(out, " {}", names[c]);
            }
        }
        Preference::Table(t) => {
            let m = names.len();
            for i in 0..m {
                for j in i + 1..m {
                    let (a, b) = if t.prefers(i, j) { (i, j) } else { (j, i) };
                    let _ = write!(out, " {}>{}", names[a], names[b]);
                }
            }
        }
    }
}

fn write_block(out: &mut String, kw: &str, names: &[String], b: &VoterBlock) {
    let kw = match (kw, &b.pref) {
        ("VOTER", Preference::Order(_)) => "ORDER",
        ("VOTER", Preference::Table(_)) => "TABLE",
        _ => kw,
    };
    let _ = write!(out, "{kw} {} :", b.multiplicity);
    write_pref(out, names, &b.pref);
    out.push('\n');
}

pub fn write_document(doc: &Document) -> String {
    let names = doc.election.names();
    let mut out = String::from("ELECTION v1\nCANDIDATES");
    for n in names {
        let _ = write!(out, " {n}");
    }
    out.push('\n');
    if !doc.spoilers.is_empty() {
        out.push_str("SPOILERS");
        for &d in &doc.spoilers {
            let _ = write!(out, " {}", names[d]);
        }
        out.push('\n');
    }
    for b in doc.election.voters() {
        write_block(&mut out, "VOTER", names, b);
    }
    for b in &doc.pool {
        write_block(&mut out, "POOL", names, b);
    }
    if let Some(t) = doc.target {
        let _ = writeln!(out, "TARGET {}", names[t]);
    }
    if let Some(k) = doc.budget {
        let _ = writeln!(out, "BUDGET {k}");
    }
    out
}

pub fn write_election(e: &Election) -> String {
    write_document(&Document::plain(e.clone()))
}

/// Parses `COT v1`. Without a CANDIDATES line, names are taken in order of first appearance.
pub fn parse_cot(text: &str) -> Result<(Vec<String>, Cot)> {
    let mut it = lines(text).peekable();
    match it.next() {
        Some((_, t)) if t == ["COT", "v1"] => {}
        Some((l, _)) => return Err(perr(l, "expected `COT v1` header")),
        None => return Err(perr(1, "empty input")),
    }
    let mut fixed = None;
    if let Some((line, tok)) = it.peek() {
        if tok[0] == "CANDIDATES" {
            fixed = Some(parse_candidates(*line, &tok[1..])?.0);
            it.next();
        }
    }
    let mut pairs = Vec::new();
    let mut order: Vec<String> = fixed.clone().unwrap_or_default();
    for (line, tok) in it {
        if tok[0] != "PAIR" || tok.len() != 4 {
            return Err(perr(line, "expected `PAIR a b {a|b|tie}`"));
        }
        for n in &tok[1..3] {
            if !valid_name(n) {
                return Err(perr(line, format!("bad candidate name {n:?}")));
            }
            if !order.iter().any(|o| o == n) {
                if fixed.is_some() {
                    return Err(perr(line, format!("unknown candidate {n}")));
                }
                order.push(n.to_string());
            }
        }
        if tok[1] == tok[2] {
            return Err(perr(line, "a candidate cannot face itself"));
        }
        let res = match tok[3] {
            "tie" => None,
            w if w == tok[1] => Some(true),
            w if w == tok[2] => Some(false),
            w => return Err(perr(line, format!("outcome {w} is neither candidate nor tie"))),
        };
        pairs.push((line, tok[1].to_string(), tok[2].to_string(), res));
    }
    let m = order.len();
    if m == 0 {
        return Err(Error::EmptyCandidates);
    }
    let idx: HashMap<&str, usize> = order.iter().enumerate().map(|(i, n)| (n.as_str(), i)).collect();
    let mut t = Cot::all_ties(m);
    let mut seen = vec![false; pair_count(m)];
    for (line, a, b, res) in pairs {
        let (a, b) = (idx[a.as_str()], idx[b.as_str()]);
        let p = pair_index(m, a, b);
        if seen[p] {
            return Err(perr(line, "pair given twice"));
        }
        seen[p] = true;
        match res {
            None => t.set(a.min(b), a.max(b), Outcome::Tie),
            Some(true) => t.set_winner(a, b),
            Some(false) => t.set_winner(b, a),
        }
    }
    if seen.iter().any(|&s| !s) {
        return Err(perr(0, "every pair needs a PAIR line"));
    }
    Ok((order, t))
}

pub fn write_cot(names: &[String], t: &Cot) -> String {
    let mut out = String::from("COT v1\nCANDIDATES");
    for n in names {
        let _ = write!(out, " {n}");
    }
    out.push('\n');
    for i in 0..t.m() {
        for j in i + 1..t.m() {
            let res = match t.get(i, j) {
                Outcome::First => &names[i],
                Outcome::Second => &names[j],
                Outcome::Tie => "tie",
            };
            let _ = writeln!(out, "PAIR {} {} {res}", names[i], names[j]);
        }
    }
    out
}
