//! Integer feasibility over bounded boxes: depth-first search with interval propagation
//! and domain bisection.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub terms: Vec<(usize, i64)>,
    pub rel: Relation,
    pub rhs: i64,
}

impl Constraint {
    pub fn new(terms: Vec<(usize, i64)>, rel: Relation, rhs: i64) -> Constraint {
        Constraint { terms: terms.into_iter().filter(|t| t.1 != 0).collect(), rel, rhs }
    }

    pub fn holds(&self, x: &[i64]) -> bool {
        let lhs: i64 = self.terms.iter().map(|&(i, a)| a * x[i]).sum();
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Variables x_i with lower[i] <= x_i <= upper[i] and linear constraints.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntProblem {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub constraints: Vec<Constraint>,
}

impl IntProblem {
    /// Variables 0 <= x_i <= upper[i].
    pub fn boxed(upper: Vec<i64>) -> IntProblem {
        IntProblem { lower: vec![0; upper.len()], upper, constraints: Vec::new() }
    }

    pub fn add(&mut self, c: Constraint) {
        self.constraints.push(c);
    }

    pub fn is_feasible_point(&self, x: &[i64]) -> bool {
        x.len() == self.lower.len()
            && x.iter().zip(&self.lower).zip(&self.upper).all(|((&v, &lo), &hi)| lo <= v && v <= hi)
            && self.constraints.iter().all(|c| c.holds(x))
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

/// Tightens bounds for sum(terms) <= rhs. Returns false on infeasibility.
fn propagate_le(terms: &[(usize, i64)], rhs: i64, lo: &mut [i64], hi: &mut [i64]) -> bool {
    let min_act: i64 = terms.iter().map(|&(i, a)| if a > 0 { a * lo[i] } else { a * hi[i] }).sum();
    if min_act > rhs {
        return false;
    }
    for &(i, a) in terms {
        let own = if a > 0 { a * lo[i] } else { a * hi[i] };
        let slack = rhs - (min_act - own);
        if a > 0 {
            hi[i] = hi[i].min(div_floor(slack, a));
        } else {
            lo[i] = lo[i].max(div_ceil(slack, a));
        }
        if lo[i] > hi[i] {
            return false;
        }
    }
    true
}

fn propagate(p: &IntProblem, lo: &mut [i64], hi: &mut [i64]) -> bool {
    loop {
        let before: (Vec<i64>, Vec<i64>) = (lo.to_vec(), hi.to_vec());
        for c in &p.constraints {
            let neg: Vec<(usize, i64)> = c.terms.iter().map(|&(i, a)| (i, -a)).collect();
            let ok = match c.rel {
                Relation::Le => propagate_le(&c.terms, c.rhs, lo, hi),
                Relation::Ge => propagate_le(&neg, -c.rhs, lo, hi),
                Relation::Eq => propagate_le(&c.terms, c.rhs, lo, hi) && propagate_le(&neg, -c.rhs, lo, hi),
            };
            if !ok {
                return false;
            }
        }
        if before.0 == lo && before.1 == hi {
            return true;
        }
    }
}

fn search(p: &IntProblem, lo: Vec<i64>, hi: Vec<i64>, nodes: &mut u64) -> Option<Vec<i64>> {
    *nodes += 1;
    let (mut lo, mut hi) = (lo, hi);
    if !propagate(p, &mut lo, &mut hi) {
        return None;
    }
    let open = (0..lo.len()).filter(|&i| lo[i] < hi[i]).min_by_key(|&i| (hi[i] - lo[i], i));
    match open {
        None => p.is_feasible_point(&lo).then_some(lo),
        Some(i) => {
            let mid = lo[i] + (hi[i] - lo[i]) / 2;
            let mut hi_left = hi.clone();
            hi_left[i] = mid;
            if let Some(x) = search(p, lo.clone(), hi_left, nodes) {
                return Some(x);
            }
            let mut lo_right = lo;
            lo_right[i] = mid + 1;
            search(p, lo_right, hi, nodes)
        }
    }
}

/// Any integer point satisfying all bounds and constraints.
pub fn ilp_feasible(p: &IntProblem) -> Option<Vec<i64>> {
    ilp_feasible_counted(p).0
}

/// Like [`ilp_feasible`], also reporting the number of search nodes.
pub fn ilp_feasible_counted(p: &IntProblem) -> (Option<Vec<i64>>, u64) {
    assert_eq!(p.lower.len(), p.upper.len());
    if p.lower.iter().zip(&p.upper).any(|(l, h)| l > h) {
        return (None, 0);
    }
    let mut nodes = 0;
    let r = search(p, p.lower.clone(), p.upper.clone(), &mut nodes);
    (r, nodes)
}
