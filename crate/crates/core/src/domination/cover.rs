//! Exact minimum cover search underlying every domination query.
//!
//! An instance is a set `need` of vertices that still have to be dominated
//! and a set `allowed` of vertices that may still be picked. The search
//! alternates reduction rules, splitting into independent components, a
//! lower bound, and branching on the closed neighborhood of the needy
//! vertex with the fewest live dominators.

use std::cmp::Reverse;

use crate::bits::Bits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct OutOfBudget;

pub(crate) struct CoverSearch<'a> {
    closed: &'a [Bits],
    nodes: u64,
    budget: u64,
}

impl<'a> CoverSearch<'a> {
    pub fn new(closed: &'a [Bits], budget: u64) -> Self {
        CoverSearch {
            closed,
            nodes: 0,
            budget,
        }
    }

    pub fn closed(&self, v: usize) -> &'a Bits {
        &self.closed[v]
    }

    pub fn tick(&mut self) -> Result<(), OutOfBudget> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    /// Greedy max-coverage cover with lowest-id tie breaking, or `None`
    /// if some needy vertex has no allowed dominator.
    pub fn greedy(&self, need: &Bits, allowed: &Bits) -> Option<Vec<usize>> {
        let mut need = need.clone();
        let mut picks = Vec::new();
        while !need.is_empty() {
            let best = allowed
                .iter()
                .map(|a| (self.closed[a].and_count(&need), Reverse(a)))
                .max()?;
            if best.0 == 0 {
                return None;
            }
            let a = best.1 .0;
            picks.push(a);
            need.difference_with(&self.closed[a]);
        }
        Some(picks)
    }

    /// A minimum set of allowed vertices dominating `need`, provided one of
    /// size at most `limit` exists.
    pub fn solve(
        &mut self,
        mut need: Bits,
        mut allowed: Bits,
        limit: usize,
    ) -> Result<Option<Vec<usize>>, OutOfBudget> {
        self.tick()?;
        let mut picks = Vec::new();
        if !self.reduce(&mut need, &mut allowed, &mut picks, limit) {
            return Ok(None);
        }
        if need.is_empty() {
            return Ok(Some(picks));
        }
        let budget = limit - picks.len();

        let comps = self.components(&need, &allowed);
        if comps.len() > 1 {
            let lbs: Vec<usize> = comps.iter().map(|(n, a)| self.lower_bound(n, a)).collect();
            let mut committed: usize = lbs.iter().sum();
            if committed > budget {
                return Ok(None);
            }
            for ((cn, ca), lb) in comps.into_iter().zip(lbs) {
                // Every other component still needs at least its bound.
                let room = budget - (committed - lb);
                match self.solve(cn, ca, room)? {
                    Some(sub) => {
                        committed = committed - lb + sub.len();
                        picks.extend(sub);
                    }
                    None => return Ok(None),
                }
            }
            return Ok(Some(picks));
        }

        let lb = self.lower_bound(&need, &allowed);
        if lb > budget {
            return Ok(None);
        }
        let pivot = need
            .iter()
            .min_by_key(|&u| (self.closed[u].and_count(&allowed), u))
            .expect("need is non-empty");
        let mut cands: Vec<usize> = self.closed[pivot].and(&allowed).iter().collect();
        cands.sort_by_key(|&a| (Reverse(self.closed[a].and_count(&need)), a));

        let mut best: Option<Vec<usize>> = None;
        let mut room = budget;
        let mut rest = allowed;
        for a in cands {
            if room == 0 || room < lb {
                break;
            }
            rest.remove(a);
            let mut sub_need = need.clone();
            sub_need.difference_with(&self.closed[a]);
            if let Some(mut sub) = self.solve(sub_need, rest.clone(), room - 1)? {
                sub.push(a);
                room = sub.len() - 1;
                let done = sub.len() == lb;
                best = Some(sub);
                if done {
                    break;
                }
            }
        }
        Ok(best.map(|b| {
            picks.extend(b);
            picks
        }))
    }

    /// Applies forced picks and dominance rules until a fixpoint. Returns
    /// `false` if the instance became infeasible within `limit`.
    fn reduce(&self, need: &mut Bits, allowed: &mut Bits, picks: &mut Vec<usize>, limit: usize) -> bool {
        loop {
            if picks.len() > limit {
                return false;
            }
            if need.is_empty() {
                return true;
            }
            let mut changed = false;

            // A needy vertex with a single live dominator forces it.
            let needy: Vec<usize> = need.iter().collect();
            for u in needy {
                if !need.contains(u) {
                    continue;
                }
                match self.closed[u].and_count(allowed) {
                    0 => return false,
                    1 => {
                        let a = self.closed[u].and(allowed).first().expect("one live dominator");
                        picks.push(a);
                        need.difference_with(&self.closed[a]);
                        allowed.remove(a);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if changed {
                continue;
            }

            // Candidate a is redundant if some other candidate covers a
            // superset of what a covers.
            let cands: Vec<usize> = allowed.iter().collect();
            let covers: Vec<Bits> = cands.iter().map(|&a| self.closed[a].and(need)).collect();
            let mut drop = Vec::new();
            for (i, &a) in cands.iter().enumerate() {
                let Some(probe) = covers[i].first() else {
                    drop.push(a);
                    continue;
                };
                let dominated = self.closed[probe].and(allowed).iter().any(|b| {
                    if b == a {
                        return false;
                    }
                    let j = cands.binary_search(&b).expect("b is allowed");
                    covers[i].is_subset(&covers[j]) && (covers[i] != covers[j] || b < a)
                });
                if dominated {
                    drop.push(a);
                }
            }
            for a in drop {
                allowed.remove(a);
                changed = true;
            }

            // A needy vertex is implied if another needy vertex has a
            // subset of its live dominators.
            let needy: Vec<usize> = need.iter().collect();
            let lives: Vec<Bits> = needy.iter().map(|&u| self.closed[u].and(allowed)).collect();
            let mut implied = Vec::new();
            for (i, &u) in needy.iter().enumerate() {
                let Some(probe) = lives[i].first() else {
                    return false;
                };
                for w in self.closed[probe].and(need).iter() {
                    if w == u {
                        continue;
                    }
                    let j = needy.binary_search(&w).expect("w is needy");
                    if lives[i].is_subset(&lives[j]) && (lives[i] != lives[j] || u < w) {
                        implied.push(w);
                    }
                }
            }
            for w in implied {
                if need.contains(w) {
                    need.remove(w);
                    changed = true;
                }
            }

            if !changed {
                return true;
            }
        }
    }

    /// Splits the instance into parts that share no candidate.
    fn components(&self, need: &Bits, allowed: &Bits) -> Vec<(Bits, Bits)> {
        let n = self.closed.len();
        let mut remaining = need.clone();
        let mut out = Vec::new();
        while let Some(seed) = remaining.first() {
            let mut comp_need = Bits::new(n);
            let mut comp_allowed = Bits::new(n);
            comp_need.insert(seed);
            let mut frontier = vec![seed];
            while !frontier.is_empty() {
                let mut cand = Bits::new(n);
                for &u in &frontier {
                    cand.union_with(&self.closed[u]);
                }
                cand = cand.and(allowed);
                cand.difference_with(&comp_allowed);
                comp_allowed.union_with(&cand);
                let mut fresh = Bits::new(n);
                for a in cand.iter() {
                    fresh.union_with(&self.closed[a]);
                }
                fresh = fresh.and(need);
                fresh.difference_with(&comp_need);
                comp_need.union_with(&fresh);
                frontier = fresh.iter().collect();
            }
            remaining.difference_with(&comp_need);
            out.push((comp_need, comp_allowed));
        }
        out
    }

    /// Max of a greedy packing of needy vertices with pairwise disjoint
    /// live dominator sets, and the fractional bound
    /// `sum_u 1 / max_{a ∈ live(u)} |cover(a)|`.
    pub fn lower_bound(&self, need: &Bits, allowed: &Bits) -> usize {
        let mut needy: Vec<(usize, usize)> = need.iter().map(|u| (self.closed[u].and_count(allowed), u)).collect();
        needy.sort_unstable();
        let mut used = Bits::new(self.closed.len());
        let mut packing = 0;
        let mut fractional = 0.0f64;
        for &(_, u) in &needy {
            let live = self.closed[u].and(allowed);
            let widest = live.iter().map(|a| self.closed[a].and_count(need)).max().unwrap_or(1);
            fractional += 1.0 / widest as f64;
            if !live.intersects(&used) {
                used.union_with(&live);
                packing += 1;
            }
        }
        packing.max((fractional - 1e-9).ceil() as usize)
    }
}
