//! Small exact branch-and-bound for bounded-variable integer programs.
//!
//! Nodes are pruned by interval bound propagation over the linear rows and
//! by an optimistic objective bound computed from the current domains. There
//! is no LP relaxation; this is meant for instances with a few dozen
//! variables and modest domains.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Eq,
    Le,
}

#[derive(Debug, Clone)]
struct Row {
    terms: Vec<(usize, i64)>,
    sense: Sense,
    rhs: i64,
}

#[derive(Debug, Clone)]
pub struct IntegerProgram {
    bounds: Vec<(i64, i64)>,
    rows: Vec<Row>,
    objective: Vec<(usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BnbResult {
    pub objective: i64,
    pub values: Vec<i64>,
    pub nodes: u64,
}

type Domains = Vec<(i64, i64)>;

impl IntegerProgram {
    pub fn new(bounds: Vec<(i64, i64)>) -> Self {
        Self {
            bounds,
            rows: Vec::new(),
            objective: Vec::new(),
        }
    }

    pub fn add_row(&mut self, terms: Vec<(usize, i64)>, sense: Sense, rhs: i64) {
        self.rows.push(Row { terms, sense, rhs });
    }

    pub fn set_objective(&mut self, objective: Vec<(usize, i64)>) {
        self.objective = objective;
    }

    /// Whether `values` respects every bound and row.
    pub fn is_feasible(&self, values: &[i64]) -> bool {
        values.len() == self.bounds.len()
            && values
                .iter()
                .zip(&self.bounds)
                .all(|(&x, &(lo, hi))| lo <= x && x <= hi)
            && self.rows.iter().all(|r| {
                let lhs: i64 = r.terms.iter().map(|&(k, c)| c * values[k]).sum();
                match r.sense {
                    Sense::Eq => lhs == r.rhs,
                    Sense::Le => lhs <= r.rhs,
                }
            })
    }

    /// Maximizes the objective. `None` if the program is infeasible.
    pub fn maximize(&self) -> Option<BnbResult> {
        let order = self.branch_order();
        let mut search = Search {
            program: self,
            order: &order,
            best: None,
            nodes: 0,
            limit: None,
            found: Vec::new(),
        };
        search.dfs(self.bounds.clone());
        let nodes = search.nodes;
        search.best.map(|(objective, values)| BnbResult {
            objective,
            values,
            nodes,
        })
    }

    /// Up to `limit` feasible points, ignoring the objective.
    pub fn enumerate_feasible(&self, limit: usize) -> Vec<Vec<i64>> {
        let order = self.branch_order();
        let mut search = Search {
            program: self,
            order: &order,
            best: None,
            nodes: 0,
            limit: Some(limit),
            found: Vec::new(),
        };
        search.dfs(self.bounds.clone());
        search.found
    }

    /// Objective variables by decreasing coefficient, then the rest in index order.
    fn branch_order(&self) -> Vec<usize> {
        let mut weighted: Vec<(usize, i64)> = self.objective.clone();
        weighted.sort_by_key(|&(k, c)| (std::cmp::Reverse(c.abs()), k));
        let mut order: Vec<usize> = weighted.iter().map(|&(k, _)| k).collect();
        let rest: Vec<usize> = (0..self.bounds.len())
            .filter(|k| !order.contains(k))
            .collect();
        order.extend(rest);
        order
    }

    fn objective_coef(&self, var: usize) -> i64 {
        self.objective
            .iter()
            .filter(|&&(k, _)| k == var)
            .map(|&(_, c)| c)
            .sum()
    }

    /// Tightens domains to a fixpoint; `false` when some row cannot hold.
    fn propagate(&self, dom: &mut Domains) -> bool {
        loop {
            let mut changed = false;
            for row in &self.rows {
                let (mut lo_act, mut hi_act) = (0i64, 0i64);
                for &(k, c) in &row.terms {
                    let (a, b) = term_range(c, dom[k]);
                    lo_act += a;
                    hi_act += b;
                }
                if lo_act > row.rhs || (row.sense == Sense::Eq && hi_act < row.rhs) {
                    return false;
                }
                for &(k, c) in &row.terms {
                    if c == 0 {
                        continue;
                    }
                    let (a, b) = term_range(c, dom[k]);
                    // c * x must lie in [rhs - others_hi, rhs - others_lo]
                    let upper = row.rhs - (lo_act - a);
                    let lower = (row.sense == Sense::Eq).then(|| row.rhs - (hi_act - b));
                    let (mut lo, mut hi) = dom[k];
                    if c > 0 {
                        hi = hi.min(floor_div(upper, c));
                        if let Some(lower) = lower {
                            lo = lo.max(ceil_div(lower, c));
                        }
                    } else {
                        lo = lo.max(ceil_div(upper, c));
                        if let Some(lower) = lower {
                            hi = hi.min(floor_div(lower, c));
                        }
                    }
                    if lo > hi {
                        return false;
                    }
                    if (lo, hi) != dom[k] {
                        dom[k] = (lo, hi);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn objective_bound(&self, dom: &Domains) -> i64 {
        self.objective
            .iter()
            .map(|&(k, c)| term_range(c, dom[k]).1)
            .sum()
    }
}

fn term_range(c: i64, (lo, hi): (i64, i64)) -> (i64, i64) {
    if c >= 0 {
        (c * lo, c * hi)
    } else {
        (c * hi, c * lo)
    }
}

fn floor_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    if a % b != 0 && ((a < 0) == (b < 0)) {
        q + 1
    } else {
        q
    }
}

struct Search<'a> {
    program: &'a IntegerProgram,
    order: &'a [usize],
    best: Option<(i64, Vec<i64>)>,
    nodes: u64,
    limit: Option<usize>,
    found: Vec<Vec<i64>>,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.found.len() >= l)
    }

    fn dfs(&mut self, mut dom: Domains) {
        if self.done() {
            return;
        }
        self.nodes += 1;
        if !self.program.propagate(&mut dom) {
            return;
        }
        if self.limit.is_none() {
            if let Some((best, _)) = &self.best {
                if self.program.objective_bound(&dom) <= *best {
                    return;
                }
            }
        }
        let Some(&var) = self.order.iter().find(|&&k| dom[k].0 < dom[k].1) else {
            let values: Vec<i64> = dom.iter().map(|&(lo, _)| lo).collect();
            if self.limit.is_some() {
                self.found.push(values);
            } else {
                let objective = self.program.objective_bound(&dom);
                self.best = Some((objective, values));
            }
            return;
        };
        let (lo, hi) = dom[var];
        let descending = self.program.objective_coef(var) >= 0;
        let values: Box<dyn Iterator<Item = i64>> = if descending {
            Box::new((lo..=hi).rev())
        } else {
            Box::new(lo..=hi)
        };
        for value in values {
            let mut child = dom.clone();
            child[var] = (value, value);
            self.dfs(child);
            if self.done() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knapsack() {
        // max 5a + 4b + 3c  s.t. 2a + 3b + c <= 5, 4a + b + 2c <= 11, 3a + 4b + 2c <= 8
        let mut p = IntegerProgram::new(vec![(0, 10); 3]);
        p.add_row(vec![(0, 2), (1, 3), (2, 1)], Sense::Le, 5);
        p.add_row(vec![(0, 4), (1, 1), (2, 2)], Sense::Le, 11);
        p.add_row(vec![(0, 3), (1, 4), (2, 2)], Sense::Le, 8);
        p.set_objective(vec![(0, 5), (1, 4), (2, 3)]);
        let r = p.maximize().unwrap();
        // brute force over the box
        let mut best = i64::MIN;
        for a in 0..=10 {
            for b in 0..=10 {
                for c in 0..=10 {
                    if 2 * a + 3 * b + c <= 5
                        && 4 * a + b + 2 * c <= 11
                        && 3 * a + 4 * b + 2 * c <= 8
                    {
                        best = best.max(5 * a + 4 * b + 3 * c);
                    }
                }
            }
        }
        assert_eq!(r.objective, best);
    }

    #[test]
    fn infeasible_equality() {
        let mut p = IntegerProgram::new(vec![(0, 3); 2]);
        p.add_row(vec![(0, 2), (1, 2)], Sense::Eq, 7);
        p.set_objective(vec![(0, 1)]);
        assert!(p.maximize().is_none());
    }

    #[test]
    fn negative_coefficients_propagate() {
        // x - y = 2, x <= 5 ; maximize y
        let mut p = IntegerProgram::new(vec![(0, 5), (0, 9)]);
        p.add_row(vec![(0, 1), (1, -1)], Sense::Eq, 2);
        p.set_objective(vec![(1, 1)]);
        assert_eq!(p.maximize().unwrap().values, vec![5, 3]);
        // -3x <= -7 forces x >= 3 ; minimize x by maximizing -x
        let mut p = IntegerProgram::new(vec![(0, 9)]);
        p.add_row(vec![(0, -3)], Sense::Le, -7);
        p.set_objective(vec![(0, -1)]);
        assert_eq!(p.maximize().unwrap().values, vec![3]);
    }

    #[test]
    fn rounding_helpers() {
        assert_eq!((floor_div(7, 2), ceil_div(7, 2)), (3, 4));
        assert_eq!((floor_div(-7, 2), ceil_div(-7, 2)), (-4, -3));
        assert_eq!((floor_div(7, -2), ceil_div(7, -2)), (-4, -3));
        assert_eq!((floor_div(-7, -2), ceil_div(-7, -2)), (3, 4));
        assert_eq!((floor_div(6, -3), ceil_div(6, -3)), (-2, -2));
    }

    #[test]
    fn enumerates_all_points() {
        let mut p = IntegerProgram::new(vec![(0, 4); 2]);
        p.add_row(vec![(0, 1), (1, 1)], Sense::Eq, 4);
        assert_eq!(p.enumerate_feasible(100).len(), 5);
        assert_eq!(p.enumerate_feasible(2).len(), 2);
    }
}
