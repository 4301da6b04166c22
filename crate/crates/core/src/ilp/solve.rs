use std::collections::BTreeMap;

use super::{IlpError, IlpInstance, IlpSolution};

/// Degree vector of one candidate: hubs of degree `delta`, leaves, and an
/// optional single middle vertex.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    hubs: u64,
    leaves: u64,
    middle: Option<u64>,
    objective: u128,
}

/// Exact optimum by enumerating the degree vectors C3 allows.
///
/// C3 leaves at most one vertex with a degree strictly between 1 and
/// `delta`, so a candidate is fixed by the choice of that degree (or none);
/// C1 and C2 then determine the hub and leaf counts. Equal objectives prefer
/// no middle vertex, then the smallest middle degree.
///
/// The edge counts are completed the way a connected realization uses them:
/// the middle vertex is joined to as many hubs as it can take, the remaining
/// hubs hang off other hubs, and every free slot holds a leaf.
pub fn solve(inst: &IlpInstance) -> Result<IlpSolution, IlpError> {
    let n = inst.n;
    let delta = inst.delta;
    let ub = inst.upper_bound();

    let middles = std::iter::once(None).chain((2..delta).map(Some));
    let mut best: Option<Candidate> = None;
    for middle in middles {
        let (count, degree) = middle.map_or((0, 0), |x| (1, x));
        // (delta - 1) hubs = n - 2 - (x - 1) for a middle vertex of degree x
        let Some(rest) = (n - 2).checked_sub(count * (degree.max(1) - 1)) else {
            continue;
        };
        if rest % (delta - 1) != 0 {
            continue;
        }
        let hubs = rest / (delta - 1);
        let Some(leaves) = n.checked_sub(hubs + count) else {
            continue;
        };
        if hubs > ub || leaves > ub {
            continue;
        }
        let objective = (delta as u128).pow(3) * hubs as u128
            + leaves as u128
            + (degree as u128).pow(3) * count as u128;
        if best.is_none_or(|b| objective > b.objective) {
            best = Some(Candidate {
                hubs,
                leaves,
                middle,
                objective,
            });
        }
    }
    let best = best.ok_or(IlpError::Infeasible)?;
    Ok(complete(inst, best))
}

fn complete(inst: &IlpInstance, c: Candidate) -> IlpSolution {
    let d = inst.delta as usize;
    let mut ni = BTreeMap::new();
    let mut mij = BTreeMap::new();
    let mut put = |key: (usize, usize), v: u64| {
        if v > 0 {
            mij.insert(key, v);
        }
    };
    ni.insert(1, c.leaves);
    match c.middle {
        None => {
            ni.insert(d, c.hubs);
            put((d, d), c.hubs.saturating_sub(1));
            put((1, d), c.leaves);
        }
        Some(x) => {
            let xi = x as usize;
            ni.insert(xi, 1);
            ni.insert(d, c.hubs);
            let to_hubs = x.min(c.hubs);
            let middle_leaves = x - to_hubs;
            put((xi, d), to_hubs);
            put((d, d), c.hubs - to_hubs);
            put((1, xi), middle_leaves);
            put((1, d), c.leaves - middle_leaves);
        }
    }
    ni.retain(|_, c| *c > 0);
    IlpSolution {
        n: inst.n,
        delta: inst.delta,
        ni,
        mij,
        objective: c.objective,
    }
}
