//! Source instances of the reductions: exact cover by 3-sets and vertex cover.

use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn header_k(line: &str, tag: &str, lineno: usize) -> Result<usize> {
    let rest = line.strip_prefix(tag).ok_or_else(|| parse_err(lineno, format!("expected `{tag} k=<k>` header")))?;
    let k = rest.trim().strip_prefix("k=").ok_or_else(|| parse_err(lineno, "missing k="))?;
    k.parse().map_err(|_| parse_err(lineno, "k must be a nonnegative integer"))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim())).filter(|(_, l)| !l.is_empty())
}

/// Ground set B = {b_1, ..., b_3k} and a family of 3-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct X3c {
    pub ground: Vec<String>,
    pub sets: Vec<[usize; 3]>,
    pub k: usize,
}

impl X3c {
    pub fn new(ground: Vec<String>, sets: Vec<[usize; 3]>, k: usize) -> X3c {
        X3c { ground, sets, k }
    }

    /// Ground elements b0..b{3k-1}.
    pub fn with_default_names(k: usize, sets: Vec<[usize; 3]>) -> X3c {
        X3c { ground: (0..3 * k).map(|i| format!("b{i}")).collect(), sets, k }
    }

    /// Syntactic requirements: |B| = 3k with k >= 1, each set has three distinct members of B.
    pub fn well_formed(&self) -> Result<()> {
        if self.k == 0 || self.ground.len() != 3 * self.k {
            return Err(Error::InvalidInstance(format!("|B| = {} is not 3k for k = {} >= 1", self.ground.len(), self.k)));
        }
        for s in &self.sets {
            if s.iter().any(|&x| x >= self.ground.len()) || s[0] == s[1] || s[1] == s[2] || s[0] == s[2] {
                return Err(Error::InvalidInstance(format!("bad triple {s:?}")));
            }
        }
        Ok(())
    }

    pub fn covers_ground(&self) -> bool {
        let mut seen = vec![false; self.ground.len()];
        for s in &self.sets {
            for &x in s {
                seen[x] = true;
            }
        }
        seen.iter().all(|&b| b)
    }

    /// Whether the chosen set indices form an exact cover.
    pub fn is_exact_cover(&self, chosen: &[usize]) -> bool {
        if chosen.len() != self.k {
            return false;
        }
        let mut seen = vec![false; self.ground.len()];
        for &i in chosen {
            for &x in &self.sets[i] {
                if seen[x] {
                    return false;
                }
                seen[x] = true;
            }
        }
        seen.iter().all(|&b| b)
    }

    pub fn parse(text: &str) -> Result<X3c> {
        let mut lines = content_lines(text);
        let (n0, head) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let k = header_k(head, "X3C", n0)?;
        let mut ground: Option<Vec<String>> = None;
        let mut sets = Vec::new();
        for (n, line) in lines {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("B") => ground = Some(toks.map(str::to_string).collect()),
                Some("S") => {
                    let g = ground.as_ref().ok_or_else(|| parse_err(n, "S before B"))?;
                    let joined = toks.collect::<Vec<_>>().join("");
                    let names: Vec<&str> = joined.split(',').map(str::trim).collect();
                    if names.len() != 3 {
                        return Err(parse_err(n, "a set needs exactly three members"));
                    }
                    let mut idx = [0; 3];
                    for (slot, name) in idx.iter_mut().zip(&names) {
                        *slot = g.iter().position(|x| x == name).ok_or_else(|| parse_err(n, format!("unknown element {name}")))?;
                    }
                    sets.push(idx);
                }
                _ => return Err(parse_err(n, format!("unexpected line {line:?}"))),
            }
        }
        let ground = ground.ok_or_else(|| parse_err(n0, "missing B line"))?;
        Ok(X3c { ground, sets, k })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("X3C k={}\nB {}\n", self.k, self.ground.join(" "));
        for t in &self.sets {
            s.push_str(&format!("S {},{},{}\n", self.ground[t[0]], self.ground[t[1]], self.ground[t[2]]));
        }
        s
    }
}

/// Undirected simple graph with budget k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vc {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

impl Vc {
    /// Vertices v1..vn.
    pub fn with_default_names(n: usize, edges: Vec<(usize, usize)>, k: usize) -> Vc {
        Vc { vertices: (1..=n).map(|i| format!("v{i}")).collect(), edges, k }
    }

    pub fn well_formed(&self) -> Result<()> {
        let n = self.vertices.len();
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if u >= n || v >= n || u == v {
                return Err(Error::InvalidInstance(format!("bad edge ({u}, {v})")));
            }
            if self.edges[..i].iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                return Err(Error::InvalidInstance("repeated edge".into()));
            }
        }
        Ok(())
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        chosen.len() <= self.k && self.edges.iter().all(|(u, v)| chosen.contains(u) || chosen.contains(v))
    }

    pub fn parse(text: &str) -> Result<Vc> {
        let mut lines = content_lines(text);
        let (n0, head) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
        let k = header_k(head, "VC", n0)?;
        let mut vertices: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        let mut declared = false;
        for (n, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.first() {
                Some(&"VERTICES") if edges.is_empty() && !declared => {
                    vertices = toks[1..].iter().map(|s| s.to_string()).collect();
                    declared = true;
                }
                Some(&"EDGE") if toks.len() == 3 => {
                    let mut ends = [0; 2];
                    for (slot, name) in ends.iter_mut().zip(&toks[1..]) {
                        *slot = match vertices.iter().position(|v| v == name) {
                            Some(i) => i,
                            None if !declared => {
                                vertices.push(name.to_string());
                                vertices.len() - 1
                            }
                            None => return Err(parse_err(n, format!("unknown vertex {name}"))),
                        };
                    }
                    edges.push((ends[0], ends[1]));
                }
                _ => return Err(parse_err(n, format!("unexpected line {line:?}"))),
            }
        }
        Ok(Vc { vertices, edges, k })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("VC k={}\nVERTICES {}\n", self.k, self.vertices.join(" "));
        for &(u, v) in &self.edges {
            s.push_str(&format!("EDGE {} {}\n", self.vertices[u], self.vertices[v]));
        }
        s
    }
}
