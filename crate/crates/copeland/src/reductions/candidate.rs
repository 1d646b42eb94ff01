//! Vertex cover to constructive candidate control.

use super::{out_of_range, scaled, Claims, Cmp, ReduceOptions, ReducedInstance, Vc, WitnessPlan};
use crate::alpha::Alpha;
use crate::control::{ControlInstance, ControlTag, ControlType, ProblemTag};
use crate::cot::{Cot, Outcome};
use crate::election::{Election, Mode, WinnerModel};
use crate::error::{Error, Result};
use crate::tournament::{compact_realization, fresh_names, mcgarvey, pad_cot, targeted_cot};
use crate::two_stage::TieRule;

/// Head-to-head results built up pair by pair; every pair must be settled before synthesis.
struct Graph {
    names: Vec<String>,
    rel: Vec<Vec<Option<Outcome>>>,
}

impl Graph {
    fn new() -> Graph {
        Graph { names: Vec::new(), rel: Vec::new() }
    }

    fn add(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        for row in &mut self.rel {
            row.push(None);
        }
        self.rel.push(vec![None; self.names.len()]);
        self.names.len() - 1
    }

    fn add_many(&mut self, names: Vec<String>) -> Vec<usize> {
        names.into_iter().map(|n| self.add(n)).collect()
    }

    fn set(&mut self, a: usize, b: usize, o: Outcome) {
        let flip = match o {
            Outcome::First => Outcome::Second,
            Outcome::Second => Outcome::First,
            Outcome::Tie => Outcome::Tie,
        };
        self.rel[a][b] = Some(o);
        self.rel[b][a] = Some(flip);
    }

    fn beat(&mut self, a: usize, b: usize) {
        self.set(a, b, Outcome::First);
    }

    fn tie(&mut self, a: usize, b: usize) {
        self.set(a, b, Outcome::Tie);
    }

    fn beat_all(&mut self, winners: &[usize], losers: &[usize]) {
        for &a in winners {
            for &b in losers {
                self.beat(a, b);
            }
        }
    }

    fn tie_all(&mut self, xs: &[usize], ys: &[usize]) {
        for &a in xs {
            for &b in ys {
                if a != b {
                    self.tie(a, b);
                }
            }
        }
    }

    /// Settles all pairs inside `xs` by a sub-table.
    fn embed(&mut self, xs: &[usize], t: &Cot) {
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                self.set(xs[i], xs[j], t.get(i, j));
            }
        }
    }

    fn sub_cot(&self, xs: &[usize]) -> Result<Cot> {
        let mut cells = Vec::new();
        for i in 0..xs.len() {
            for j in i + 1..xs.len() {
                cells.push(self.rel[xs[i]][xs[j]].ok_or_else(|| self.unset(xs[i], xs[j]))?);
            }
        }
        Ok(Cot::from_cells(xs.len(), cells))
    }

    fn unset(&self, a: usize, b: usize) -> Error {
        Error::InvalidInstance(format!("contest {} vs {} left unspecified", self.names[a], self.names[b]))
    }

    /// Pads the candidates `base` (whose mutual results are already set) with 2n^2 new
    /// candidates so that base candidate i scores 2n^2 - ks[i] + ties_i * alpha within
    /// base + padding. Returns the padding ids.
    fn pad_to_scores(&mut self, base: &[usize], ks: &[usize], n: usize) -> Result<Vec<usize>> {
        let t = targeted_cot(&self.sub_cot(base)?, n, ks)?;
        let names = fresh_names(&self.names, "pad", 2 * n * n);
        let pads = self.add_many(names);
        let all: Vec<usize> = base.iter().chain(&pads).copied().collect();
        self.embed(&all, &t);
        Ok(pads)
    }

    fn election(&self, opts: ReduceOptions) -> Result<Election> {
        let all: Vec<usize> = (0..self.names.len()).collect();
        let t = self.sub_cot(&all)?;
        if opts.compact_voters {
            compact_realization(&t, self.names.clone())
        } else {
            mcgarvey(&t, self.names.clone())
        }
    }
}

/// The deleting-candidates election: p, z (and its clone for the unique model), one
/// candidate per edge, one per vertex, and a padding tournament on 2l+1 candidates, l = n+m.
struct DeletionGadget {
    p: usize,
    z: Vec<usize>,
    edges: Vec<usize>,
    vertices: Vec<usize>,
    pads: Vec<usize>,
    all: Vec<usize>,
    l: usize,
}

fn vertex_names(g: &Vc, taken: &[String]) -> Vec<String> {
    let clash = g.vertices.iter().enumerate().any(|(i, v)| taken.contains(v) || g.vertices[..i].contains(v) || v.starts_with("pad"));
    if clash {
        (0..g.vertices.len()).map(|i| format!("vtx{i}")).collect()
    } else {
        g.vertices.clone()
    }
}

fn deletion_gadget(gr: &mut Graph, g: &Vc, unique: bool, vnames: &[String]) -> DeletionGadget {
    let (n, m) = (g.vertices.len(), g.edges.len());
    let l = n + m;
    let p = gr.add("p");
    let mut z = vec![gr.add("z")];
    if unique {
        z.push(gr.add("zhat"));
    }
    let edges = gr.add_many((1..=m).map(|i| format!("e{i}")).collect());
    let vertices = gr.add_many(vnames.to_vec());
    let pads = gr.add_many((0..=2 * l).map(|i| format!("t{i}")).collect());
    gr.beat_all(&[p], &z);
    gr.tie_all(&z, &z);
    gr.beat_all(&z, &edges);
    gr.tie_all(&z, &vertices);
    gr.tie_all(&[p], &edges);
    gr.tie_all(&edges, &edges);
    gr.tie_all(&vertices, &vertices);
    for (i, &(a, b)) in g.edges.iter().enumerate() {
        for (v, &cv) in vertices.iter().enumerate() {
            if v == a || v == b {
                gr.beat(edges[i], cv);
            } else {
                gr.beat(cv, edges[i]);
            }
        }
    }
    gr.beat_all(&vertices, &[p]);
    gr.embed(&pads, &pad_cot(l));
    gr.beat_all(&[p], &pads);
    gr.beat_all(&edges, &pads);
    gr.beat_all(&pads, &z);
    gr.beat_all(&pads, &vertices);
    let mut all = vec![p];
    all.extend(&z);
    all.extend(&edges);
    all.extend(&vertices);
    all.extend(&pads);
    DeletionGadget { p, z, edges, vertices, pads, all, l }
}

fn deletion_claims(c: &mut Claims, f: &DeletionGadget, alpha: Alpha, label: &str, members: Option<&[usize]>) {
    let (n, m, l) = (f.vertices.len() as i64, f.edges.len() as i64, f.l as i64);
    let extra = f.z.len() as i64 - 1;
    c.score_in(label, members, f.p, Cmp::Eq, scaled(alpha, 1 + extra + 2 * l + 1, m));
    for &z in &f.z {
        c.score_in(label, members, z, Cmp::Eq, scaled(alpha, m, n + extra));
    }
    for &e in &f.edges {
        c.score_in(label, members, e, Cmp::Eq, scaled(alpha, 2 + 2 * l + 1, m));
    }
    for &v in &f.vertices {
        c.score_in(label, members, v, Cmp::Le, scaled(alpha, 1 + m, n + extra));
    }
    for &t in &f.pads {
        c.score_in(label, members, t, Cmp::Eq, scaled(alpha, l + n + 1 + extra, 0));
    }
}

fn isqrt_ceil(x: usize) -> usize {
    let mut r = 0;
    while r * r < x {
        r += 1;
    }
    r
}

/// The smallest k1 >= 1 with k1 * alpha = k2 - 1/den for an integer k2, and that k2.
fn epsilon_pair(alpha: Alpha) -> (u64, u64) {
    let (t1, t2) = (alpha.num(), alpha.den());
    (1..=t2).find(|k1| (k1 * t1 + 1) % t2 == 0).map(|k1| (k1, (k1 * t1 + 1) / t2)).expect("gcd(t1, t2) = 1")
}

pub fn vc_to_candidate_control(g: &Vc, tag: ControlTag, alpha: Alpha, model: WinnerModel, opts: ReduceOptions) -> Result<ReducedInstance> {
    let problem = ProblemTag::Control(tag);
    if tag.mode != Mode::Constructive || !tag.kind.is_candidate_control() {
        return Err(Error::Unsupported(format!("no vertex cover construction for {tag}")));
    }
    if tag.kind == ControlType::ACu && (alpha.is_zero() || alpha.is_one()) {
        return Err(Error::Unsupported(format!("{tag} is solvable in polynomial time for alpha = {alpha}")));
    }
    if let Err(e) = g.well_formed() {
        return out_of_range(opts, problem, alpha, model, || Ok(false), e.to_string());
    }
    let (n, m, k) = (g.vertices.len(), g.edges.len(), g.k);
    if n == 0 || m == 0 || k >= n.min(m) {
        return out_of_range(opts, problem, alpha, model, || Ok(true), format!("trivial instance (n = {n}, m = {m}, k = {k})"));
    }
    let unique = model == WinnerModel::Unique;
    let mut gr = Graph::new();
    let reserved: Vec<String> = ["p", "z", "zhat", "r", "rhat"].iter().map(|s| s.to_string()).collect();
    let mut taken = reserved.clone();
    taken.extend((1..=m.max(2 * (n + m) + 1) + 1).flat_map(|i| [format!("e{i}"), format!("t{i}"), format!("h{i}"), format!("g{i}")]));
    taken.extend(["t0".to_string(), "gedge".to_string()]);
    let vnames = vertex_names(g, &taken);
    let (ki, ni) = (k as i64, n as i64);
    let per_vertex: Vec<usize>;
    let mut spoilers = Vec::new();
    let target;
    let plan;
    let claims;
    let e;
    match tag.kind {
        ControlType::DC => {
            let f = deletion_gadget(&mut gr, g, unique, &vnames);
            e = gr.election(opts)?;
            let mut c = Claims::new(&e, alpha);
            deletion_claims(&mut c, &f, alpha, "E", None);
            claims = c.list;
            target = f.p;
            per_vertex = f.vertices.clone();
            plan = WitnessPlan::DeleteCandidates { per_item: per_vertex };
        }
        ControlType::AC => {
            let p = gr.add("p");
            let edges = gr.add_many((1..=m).map(|i| format!("e{i}")).collect());
            let verts = gr.add_many(vnames.clone());
            let mut base = vec![p];
            base.extend(&edges);
            for i in 0..base.len() {
                for j in i + 1..base.len() {
                    gr.beat(base[i], base[j]);
                }
            }
            let l = (m + 1).max(isqrt_ceil(n + 3));
            let mut ks = vec![0; base.len()];
            ks[0] = if unique { 0 } else { 1 };
            let pads = gr.pad_to_scores(&base, &ks, l)?;
            gr.tie_all(&verts, &verts);
            gr.beat_all(&[p], &verts);
            gr.beat_all(&pads, &verts);
            for (j, &(a, b)) in g.edges.iter().enumerate() {
                for (v, &cv) in verts.iter().enumerate() {
                    if v == a || v == b {
                        gr.beat(cv, edges[j]);
                    } else {
                        gr.beat(edges[j], cv);
                    }
                }
            }
            e = gr.election(opts)?;
            let registered: Vec<usize> = (0..e.m()).filter(|c| !verts.contains(c)).collect();
            let ll = (2 * l * l) as i64;
            let mut c = Claims::new(&e, alpha);
            c.score_in("C", Some(&registered), p, Cmp::Eq, scaled(alpha, if unique { ll } else { ll - 1 }, 0));
            for &x in &edges {
                c.score_in("C", Some(&registered), x, Cmp::Eq, scaled(alpha, ll, 0));
            }
            for &x in &pads {
                c.score_in("C", Some(&registered), x, Cmp::Le, scaled(alpha, ll - ni - 2, 0));
            }
            claims = c.list;
            target = p;
            spoilers = verts.clone();
            plan = WitnessPlan::AddCandidates { per_item: verts };
        }
        ControlType::ACu => {
            let p = gr.add("p");
            let r = gr.add("r");
            let edges = gr.add_many((1..=m).map(|i| format!("e{i}")).collect());
            let verts = gr.add_many(vnames.clone());
            let (k1, k2) = epsilon_pair(alpha);
            let r_ties = if unique { k + k1 as usize } else { k };
            let helpers = gr.add_many((1..=r_ties).map(|i| format!("g{i}")).collect());
            let edge_helper = if unique { None } else { Some(gr.add("gedge")) };
            let mut base = vec![p, r];
            base.extend(&edges);
            base.extend(&helpers);
            base.extend(edge_helper);
            for i in 0..base.len() {
                for j in i + 1..base.len() {
                    gr.beat(base[i], base[j]);
                }
            }
            gr.tie_all(&[r], &helpers);
            if let Some(h) = edge_helper {
                gr.tie_all(&[h], &edges);
            }
            let k_r = if unique { 1 + k + k2 as usize } else { 1 + k };
            let l = base.len().max(k_r).max(m + 2).max(isqrt_ceil(n + 3));
            let mut ks = vec![0; base.len()];
            ks[0] = 1;
            ks[1] = k_r;
            for x in ks.iter_mut().skip(2).take(m) {
                *x = 1;
            }
            for x in ks.iter_mut().skip(2 + m).take(r_ties) {
                *x = 2;
            }
            if edge_helper.is_some() {
                *ks.last_mut().unwrap() = m + 2;
            }
            let pads = gr.pad_to_scores(&base, &ks, l)?;
            gr.tie_all(&verts, &verts);
            gr.tie_all(&[p], &verts);
            for (j, &(a, b)) in g.edges.iter().enumerate() {
                for (v, &cv) in verts.iter().enumerate() {
                    if v == a || v == b {
                        gr.beat(cv, edges[j]);
                    } else {
                        gr.tie(cv, edges[j]);
                    }
                }
            }
            let mut others = vec![r];
            others.extend(&pads);
            gr.beat_all(&others, &verts);
            let mut weak = helpers.clone();
            weak.extend(edge_helper);
            gr.beat_all(&verts, &weak);
            e = gr.election(opts)?;
            let registered: Vec<usize> = (0..e.m()).filter(|c| !verts.contains(c)).collect();
            let ll = (2 * l * l) as i64;
            let mut c = Claims::new(&e, alpha);
            c.score_in("C", Some(&registered), p, Cmp::Eq, scaled(alpha, ll - 1, 0));
            let r_score = scaled(alpha, ll - 1 - ki, ki) - if unique { 1 } else { 0 };
            c.score_in("C", Some(&registered), r, Cmp::Eq, r_score);
            for &x in &edges {
                c.score_in("C", Some(&registered), x, Cmp::Eq, scaled(alpha, ll - 1, if unique { 0 } else { 1 }));
            }
            for &x in &weak {
                c.score_in("C", Some(&registered), x, Cmp::Lt, scaled(alpha, ll - 1, 0));
            }
            for &x in &pads {
                c.score_in("C", Some(&registered), x, Cmp::Le, scaled(alpha, ll - ni - 2, 0));
            }
            claims = c.list;
            target = p;
            spoilers = verts.clone();
            plan = WitnessPlan::AddCandidates { per_item: verts };
        }
        ControlType::RPC(rule) | ControlType::PC(rule) => {
            let run_off = matches!(tag.kind, ControlType::RPC(_));
            let f_unique = unique || (run_off && rule == TieRule::TE);
            let f = deletion_gadget(&mut gr, g, f_unique, &vnames);
            let r = gr.add("r");
            let mut h_claims: Vec<(usize, Cmp, i64)> = Vec::new();
            let h: Vec<usize>;
            let mut r_beats_f = false;
            match (run_off, rule) {
                (true, _) | (false, TieRule::TP) => {
                    let named = match (run_off, rule) {
                        (true, TieRule::TP) => 2,
                        (true, TieRule::TE) => 1,
                        _ => 3,
                    };
                    let hs = gr.add_many((1..=named).map(|i| format!("h{i}")).collect());
                    let mut base = vec![r];
                    base.extend(&hs);
                    gr.beat_all(&[r], &hs);
                    match named {
                        3 => {
                            gr.beat(hs[0], hs[1]);
                            gr.beat(hs[1], hs[2]);
                            gr.beat(hs[2], hs[0]);
                        }
                        2 => gr.beat(hs[0], hs[1]),
                        _ => {}
                    }
                    let drop = if named == 1 { k } else { k + 1 };
                    let nh = (named + 1).max(k + 2);
                    let mut ks = vec![drop; base.len()];
                    ks[0] = 0;
                    let pads = gr.pad_to_scores(&base, &ks, nh)?;
                    let lh = (2 * nh * nh) as i64;
                    h_claims.push((r, Cmp::Eq, scaled(alpha, lh, 0)));
                    for &x in &hs {
                        h_claims.push((x, Cmp::Eq, scaled(alpha, lh - drop as i64, 0)));
                    }
                    for &x in &pads {
                        if named == 1 {
                            h_claims.push((x, Cmp::Lt, scaled(alpha, lh - ki - 1, 0)));
                        } else {
                            h_claims.push((x, Cmp::Le, scaled(alpha, lh - ki - 1, 0)));
                        }
                    }
                    h = hs.into_iter().chain(pads).collect();
                }
                (false, TieRule::TE) if alpha.is_one() => {
                    let count = 2 * k + 4;
                    let hs = gr.add_many((1..=count).map(|i| format!("h{i}")).collect());
                    gr.tie_all(&[r], &hs);
                    let rest = &hs[1..];
                    gr.embed(rest, &pad_cot(k + 1));
                    gr.beat_all(&[hs[0]], &rest[..k + 3]);
                    gr.beat_all(&rest[k + 3..], &[hs[0]]);
                    let lh = count as i64;
                    h_claims.push((r, Cmp::Eq, scaled(alpha, lh, 0)));
                    h_claims.push((hs[0], Cmp::Eq, scaled(alpha, lh - ki, 0)));
                    for &x in rest {
                        h_claims.push((x, Cmp::Lt, scaled(alpha, lh - ki, 0)));
                    }
                    h = hs;
                }
                (false, TieRule::TE) => {
                    let rhat = gr.add("rhat");
                    let hs = gr.add_many((1..=k).map(|i| format!("h{i}")).collect());
                    gr.tie(r, rhat);
                    gr.tie_all(&[r], &hs);
                    gr.beat_all(&[rhat], &hs);
                    for i in 0..hs.len() {
                        for j in i + 1..hs.len() {
                            gr.beat(hs[i], hs[j]);
                        }
                    }
                    h_claims.push((r, Cmp::Eq, scaled(alpha, 0, ki + 1)));
                    h_claims.push((rhat, Cmp::Eq, scaled(alpha, ki, 1)));
                    for &x in &hs {
                        h_claims.push((x, Cmp::Le, scaled(alpha, ki - 1, 1)));
                    }
                    r_beats_f = true;
                    h = std::iter::once(rhat).chain(hs).collect();
                }
            }
            if r_beats_f {
                gr.beat_all(&[r], &f.all);
                gr.tie_all(&h, &f.all);
            } else {
                gr.beat_all(&f.all, &[r]);
                gr.beat_all(&h, &f.all);
            }
            e = gr.election(opts)?;
            let hall: Vec<usize> = std::iter::once(r).chain(h.iter().copied()).collect();
            let mut c = Claims::new(&e, alpha);
            deletion_claims(&mut c, &f, alpha, "F", Some(&f.all));
            for (x, rel, bound) in h_claims {
                c.score_in("H", Some(&hall), x, rel, bound);
            }
            let ties_in_h = (0..hall.len()).flat_map(|i| (i + 1..hall.len()).map(move |j| (i, j))).filter(|&(i, j)| c.vs.get(hall[i], hall[j]) == 0).count();
            if run_off || rule == TieRule::TP {
                c.push("ties inside H".into(), ties_in_h as i64, Cmp::Eq, 0);
            }
            claims = c.list;
            target = f.p;
            plan = if run_off {
                WitnessPlan::SplitWithout { base: f.all.clone(), per_item: f.vertices.clone() }
            } else {
                WitnessPlan::SplitWith { base: hall, per_item: f.vertices.clone() }
            };
        }
        _ => unreachable!("checked above"),
    }
    let mut instance = ControlInstance::new(e, target, k as u64);
    instance.spoilers = spoilers;
    ReducedInstance { problem, model, alpha, instance, claims, canned: false, solution_size: k, plan }.checked()
}
