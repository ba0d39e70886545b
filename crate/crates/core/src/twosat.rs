//! Linear-time 2-SAT via the implication graph and strongly connected
//! components.

use alloc::vec;
use alloc::vec::Vec;

/// A literal: variable index plus sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lit {
    pub var: u32,
    pub positive: bool,
}

impl Lit {
    pub fn pos(var: u32) -> Self {
        Lit { var, positive: true }
    }

    pub fn neg(var: u32) -> Self {
        Lit { var, positive: false }
    }

    fn node(self) -> usize {
        (self.var as usize) << 1 | usize::from(!self.positive)
    }

    fn negated_node(self) -> usize {
        self.node() ^ 1
    }
}

/// 2-SAT instance builder and solver.
pub struct TwoSat {
    vars: usize,
    edges: Vec<(u32, u32)>,
}

impl TwoSat {
    pub fn new(vars: usize) -> Self {
        TwoSat { vars, edges: Vec::new() }
    }

    /// Adds the clause `a ∨ b` as the implications `¬a → b` and `¬b → a`.
    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        self.edges.push((a.negated_node() as u32, b.node() as u32));
        self.edges.push((b.negated_node() as u32, a.node() as u32));
    }

    /// Forces `a` to hold.
    pub fn add_unit(&mut self, a: Lit) {
        self.edges.push((a.negated_node() as u32, a.node() as u32));
    }

    /// Adds `a ↔ b`.
    pub fn add_equiv(&mut self, a: Lit, b: Lit) {
        self.add_clause(a, Lit { positive: !b.positive, ..b });
        self.add_clause(Lit { positive: !a.positive, ..a }, b);
    }

    /// A satisfying assignment, or `None`. Deterministic: variables whose
    /// value is unconstrained are fixed by the SCC topological order.
    pub fn solve(&self) -> Option<Vec<bool>> {
        let n = self.vars * 2;
        let comp = scc(n, &self.edges);
        let mut assignment = vec![false; self.vars];
        for v in 0..self.vars {
            let t = comp[v << 1];
            let f = comp[v << 1 | 1];
            if t == f {
                return None;
            }
            // Tarjan emits components in reverse topological order, so the
            // literal in the later component (smaller index) is implied.
            assignment[v] = t < f;
        }
        Some(assignment)
    }
}

/// Iterative Tarjan SCC; component ids are assigned in reverse topological
/// order.
fn scc(n: usize, edges: &[(u32, u32)]) -> Vec<u32> {
    let mut head = vec![u32::MAX; n];
    let mut next = vec![u32::MAX; edges.len()];
    for (i, &(u, _)) in edges.iter().enumerate().rev() {
        next[i] = head[u as usize];
        head[u as usize] = i as u32;
    }

    const UNSET: u32 = u32::MAX;
    let mut index = vec![UNSET; n];
    let mut low = vec![0u32; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut call: Vec<(u32, u32)> = Vec::new();
    let mut timer = 0u32;
    let mut n_comp = 0u32;

    for root in 0..n as u32 {
        if index[root as usize] != UNSET {
            continue;
        }
        call.push((root, head[root as usize]));
        index[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (u, ref mut e)) = call.last_mut() {
            if *e != u32::MAX {
                let edge_id = *e as usize;
                *e = next[edge_id];
                let v = edges[edge_id].1;
                if index[v as usize] == UNSET {
                    index[v as usize] = timer;
                    low[v as usize] = timer;
                    timer += 1;
                    stack.push(v);
                    on_stack[v as usize] = true;
                    call.push((v, head[v as usize]));
                } else if on_stack[v as usize] {
                    low[u as usize] = low[u as usize].min(index[v as usize]);
                }
            } else {
                call.pop();
                if low[u as usize] == index[u as usize] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        comp[w as usize] = n_comp;
                        if w == u {
                            break;
                        }
                    }
                    n_comp += 1;
                }
                if let Some(&mut (p, _)) = call.last_mut() {
                    low[p as usize] = low[p as usize].min(low[u as usize]);
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivially_satisfiable() {
        let mut s = TwoSat::new(2);
        s.add_clause(Lit::pos(0), Lit::pos(1));
        let a = s.solve().unwrap();
        assert!(a[0] || a[1]);
    }

    #[test]
    fn contradiction() {
        let mut s = TwoSat::new(1);
        s.add_unit(Lit::pos(0));
        s.add_unit(Lit::neg(0));
        assert!(s.solve().is_none());
    }

    #[test]
    fn equivalence_chain() {
        let mut s = TwoSat::new(3);
        s.add_equiv(Lit::pos(0), Lit::pos(1));
        s.add_equiv(Lit::pos(1), Lit::pos(2));
        s.add_unit(Lit::neg(0));
        let a = s.solve().unwrap();
        assert_eq!(a, vec![false, false, false]);
    }

    #[test]
    fn deterministic_output() {
        let build = || {
            let mut s = TwoSat::new(4);
            s.add_clause(Lit::pos(0), Lit::pos(1));
            s.add_clause(Lit::neg(1), Lit::pos(2));
            s.add_clause(Lit::pos(2), Lit::pos(3));
            s.solve()
        };
        assert_eq!(build(), build());
    }

    /// Against brute force over all assignments, on random-ish instances.
    #[test]
    fn matches_brute_force() {
        let mut state = 0x243f6a88u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) as u32
        };
        for _ in 0..500 {
            let vars = 1 + (rnd() % 5) as usize;
            let clauses = (rnd() % 8) as usize;
            let mut s = TwoSat::new(vars);
            let mut table = Vec::new();
            for _ in 0..clauses {
                let a = Lit { var: rnd() % vars as u32, positive: rnd() % 2 == 0 };
                let b = Lit { var: rnd() % vars as u32, positive: rnd() % 2 == 0 };
                s.add_clause(a, b);
                table.push((a, b));
            }
            let brute = (0..1u32 << vars).any(|m| {
                table.iter().all(|&(a, b)| {
                    let va = (m >> a.var) & 1 == 1;
                    let vb = (m >> b.var) & 1 == 1;
                    (va == a.positive) || (vb == b.positive)
                })
            });
            let got = s.solve();
            assert_eq!(got.is_some(), brute);
            if let Some(a) = got {
                for &(x, y) in &table {
                    assert!(a[x.var as usize] == x.positive || a[y.var as usize] == y.positive);
                }
            }
        }
    }
}
