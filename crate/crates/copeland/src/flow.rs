//! Integer min-cost flow by successive shortest augmenting paths with node potentials.

use crate::error::{Error, Result};
use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub cap: u64,
    pub cost: u64,
}

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    labels: Vec<String>,
    arcs: Vec<Arc>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    /// A network whose first two nodes are the source `s` and sink `t`.
    pub fn new() -> FlowNetwork {
        FlowNetwork { labels: vec!["s".into(), "t".into()], arcs: Vec::new(), source: 0, sink: 1 }
    }

    pub fn add_node(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Adds u -> v; at most one direction per node pair may carry capacity.
    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64, cost: u64) -> Result<usize> {
        if from == to || from >= self.labels.len() || to >= self.labels.len() {
            return Err(Error::InvalidNetwork(format!("bad arc {from} -> {to}")));
        }
        if self.arcs.iter().any(|a| (a.from == from && a.to == to) || (a.from == to && a.to == from)) {
            return Err(Error::InvalidNetwork(format!("duplicate arc between {} and {}", self.labels[from], self.labels[to])));
        }
        self.arcs.push(Arc { from, to, cap, cost });
        Ok(self.arcs.len() - 1)
    }

    pub fn arc_between(&self, from: usize, to: usize) -> Option<usize> {
        self.arcs.iter().position(|a| a.from == from && a.to == to)
    }

    pub fn source_capacity(&self) -> u64 {
        self.arcs.iter().filter(|a| a.from == self.source).map(|a| a.cap).sum()
    }

    pub fn dump(&self) -> String {
        let mut s = String::from("digraph flow {\n");
        for a in &self.arcs {
            let _ = writeln!(s, "  {} -> {} [cap={}, cost={}];", self.labels[a.from], self.labels[a.to], a.cap, a.cost);
        }
        s.push_str("}\n");
        s
    }
}

impl Default for FlowNetwork {
    fn default() -> Self {
        FlowNetwork::new()
    }
}

/// Flow on each arc of the network, in arc order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    pub on_arc: Vec<u64>,
}

impl Flow {
    pub fn value(&self, net: &FlowNetwork) -> u64 {
        let s = net.source();
        let out: u64 = net.arcs.iter().zip(&self.on_arc).filter(|(a, _)| a.from == s).map(|(_, &f)| f).sum();
        let back: u64 = net.arcs.iter().zip(&self.on_arc).filter(|(a, _)| a.to == s).map(|(_, &f)| f).sum();
        out - back
    }

    pub fn cost(&self, net: &FlowNetwork) -> u64 {
        net.arcs.iter().zip(&self.on_arc).map(|(a, &f)| a.cost * f).sum()
    }

    /// Capacity and conservation check.
    pub fn is_valid(&self, net: &FlowNetwork) -> bool {
        if self.on_arc.len() != net.arcs.len() {
            return false;
        }
        let mut bal = vec![0i128; net.node_count()];
        for (a, &f) in net.arcs.iter().zip(&self.on_arc) {
            if f > a.cap {
                return false;
            }
            bal[a.from] -= f as i128;
            bal[a.to] += f as i128;
        }
        (0..net.node_count()).all(|v| v == net.source() || v == net.sink() || bal[v] == 0)
    }
}

struct Residual {
    to: usize,
    cap: u64,
    cost: i64,
    rev: usize,
}

/// Minimum-cost flow of value exactly `target`, or None when no such flow exists.
pub fn solve_min_cost(net: &FlowNetwork, target: u64) -> Option<Flow> {
    let n = net.node_count();
    let mut g: Vec<Vec<Residual>> = (0..n).map(|_| Vec::new()).collect();
    let mut handle = Vec::with_capacity(net.arcs.len());
    for a in &net.arcs {
        let (fi, ti) = (g[a.from].len(), g[a.to].len());
        g[a.from].push(Residual { to: a.to, cap: a.cap, cost: a.cost as i64, rev: ti });
        g[a.to].push(Residual { to: a.from, cap: 0, cost: -(a.cost as i64), rev: fi });
        handle.push((a.from, fi));
    }
    let (s, t) = (net.source(), net.sink());
    let mut pot = vec![0i64; n];
    let mut sent = 0u64;
    const INF: i64 = i64::MAX / 4;
    while sent < target {
        let mut dist = vec![INF; n];
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        dist[s] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for (ei, e) in g[u].iter().enumerate() {
                if e.cap == 0 {
                    continue;
                }
                let nd = d + e.cost + pot[u] - pot[e.to];
                if nd < dist[e.to] {
                    dist[e.to] = nd;
                    prev[e.to] = Some((u, ei));
                    heap.push(Reverse((nd, e.to)));
                }
            }
        }
        if dist[t] == INF {
            return None;
        }
        for v in 0..n {
            if dist[v] < INF {
                pot[v] += dist[v];
            }
        }
        let mut push = target - sent;
        let mut v = t;
        while let Some((u, ei)) = prev[v] {
            push = push.min(g[u][ei].cap);
            v = u;
        }
        let mut v = t;
        while let Some((u, ei)) = prev[v] {
            g[u][ei].cap -= push;
            let r = g[u][ei].rev;
            g[v][r].cap += push;
            v = u;
        }
        sent += push;
    }
    let on_arc = net.arcs.iter().zip(&handle).map(|(a, &(u, ei))| a.cap - g[u][ei].cap).collect();
    Some(Flow { on_arc })
}
