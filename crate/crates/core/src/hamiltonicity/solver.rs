//! Exact backtracking search over bitmask adjacency.
//!
//! The search extends a path one vertex at a time, trying neighbours with the
//! fewest remaining options first (ties by index). Two sound prunes cut the
//! tree: every unvisited vertex must keep enough admissible neighbours to be
//! threaded through the rest of the path, and the unvisited vertices must stay
//! reachable from the current end. Neither prune discards a completable
//! partial path, so an exhausted search proves non-existence.

use super::{HamCycle, HamPath, HamiltonicityCertificate};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Return to the start vertex.
    Cycle,
    /// Finish exactly at this vertex.
    EndAt(usize),
    /// Any spanning path.
    Open,
}

struct Search<'a> {
    adj: &'a [u64],
    full: u64,
    start: usize,
    goal: Goal,
    nodes: u64,
    limits: &'a Limits,
}

impl Search<'_> {
    fn run(&mut self, path: &mut Vec<usize>, visited: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes & 0x3fff == 0 {
            self.limits.check_deadline("hamiltonian search")?;
        }
        let cur = *path.last().expect("path starts non-empty");
        if visited == self.full {
            return Ok(match self.goal {
                Goal::Cycle => self.adj[cur] >> self.start & 1 == 1,
                Goal::EndAt(y) => cur == y,
                Goal::Open => true,
            });
        }
        let unvisited = self.full & !visited;
        if !self.feasible(cur, unvisited) {
            return Ok(false);
        }

        let mut candidates = self.adj[cur] & unvisited;
        if let Goal::EndAt(y) = self.goal {
            if unvisited != 1 << y {
                candidates &= !(1u64 << y);
            }
        }
        let mut order: Vec<(u32, usize)> = VertexSet::from_bits(candidates)
            .iter()
            .map(|w| ((self.adj[w] & unvisited).count_ones(), w))
            .collect();
        order.sort_unstable();
        for (_, w) in order {
            path.push(w);
            if self.run(path, visited | 1 << w)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }

    fn feasible(&self, cur: usize, unvisited: u64) -> bool {
        let cur_bit = 1u64 << cur;
        let pool = unvisited | cur_bit;
        let anchor = match self.goal {
            Goal::Cycle => 1u64 << self.start,
            _ => 0,
        };
        let mut rest = unvisited;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let options = (self.adj[w] & (pool | anchor)).count_ones();
            let needed = match self.goal {
                Goal::Cycle => 2,
                Goal::EndAt(y) if w == y => 1,
                Goal::EndAt(_) => 2,
                // the far endpoint needs only one, so one is all we can demand
                Goal::Open => 1,
            };
            if options < needed {
                return false;
            }
        }
        // unvisited vertices must be reachable from cur through unvisited ones
        let mut seen = cur_bit;
        let mut frontier = cur_bit;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & unvisited & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen & unvisited == unvisited
    }
}

fn check_size(g: &Graph, limits: &Limits) -> Result<()> {
    if g.order() > limits.solver_max_n {
        return Err(Error::InstanceTooLarge {
            operation: "hamiltonian search",
            n: g.order(),
            cap: limits.solver_max_n,
        });
    }
    Ok(())
}

pub fn find_hamiltonian_cycle(g: &Graph) -> Result<HamiltonicityCertificate> {
    find_hamiltonian_cycle_with(g, &Limits::default())
}

/// Exhaustive search for a Hamiltonian cycle through vertex 0.
pub fn find_hamiltonian_cycle_with(g: &Graph, limits: &Limits) -> Result<HamiltonicityCertificate> {
    if g.order() < 3 {
        return Err(Error::contract(format!("Hamiltonian cycles need n >= 3, got {}", g.order())));
    }
    check_size(g, limits)?;
    let mut search = Search {
        adj: g.adjacency(),
        full: g.vertices().bits(),
        start: 0,
        goal: Goal::Cycle,
        nodes: 0,
        limits,
    };
    let mut path = vec![0];
    let found = search.run(&mut path, 1)?;
    Ok(if found {
        HamiltonicityCertificate::Cycle { cycle: HamCycle::new(path), nodes: search.nodes }
    } else {
        HamiltonicityCertificate::NonHamiltonian { nodes: search.nodes }
    })
}

pub fn is_hamiltonian(g: &Graph) -> Result<bool> {
    Ok(find_hamiltonian_cycle(g)?.is_hamiltonian())
}

/// Result of a path search: the path if one exists, and search nodes used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSearch {
    pub path: Option<HamPath>,
    pub nodes: u64,
}

pub fn find_hamiltonian_path(g: &Graph, x: usize, y: usize) -> Result<PathSearch> {
    find_hamiltonian_path_with(g, x, y, &Limits::default())
}

/// Exhaustive search for a Hamiltonian path from `x` to `y`.
pub fn find_hamiltonian_path_with(g: &Graph, x: usize, y: usize, limits: &Limits) -> Result<PathSearch> {
    if x == y {
        return Err(Error::contract("path endpoints must differ"));
    }
    if x >= g.order() || y >= g.order() {
        return Err(Error::contract(format!("endpoint out of range for n = {}", g.order())));
    }
    check_size(g, limits)?;
    let mut search = Search {
        adj: g.adjacency(),
        full: g.vertices().bits(),
        start: x,
        goal: Goal::EndAt(y),
        nodes: 0,
        limits,
    };
    let mut path = vec![x];
    let found = search.run(&mut path, 1 << x)?;
    Ok(PathSearch { path: found.then(|| HamPath::new(path)), nodes: search.nodes })
}

pub fn find_spanning_path(g: &Graph) -> Result<PathSearch> {
    find_spanning_path_with(g, &Limits::default())
}

/// Any Hamiltonian path, trying start vertices in ascending order.
/// A single vertex counts as a path of length zero.
pub fn find_spanning_path_with(g: &Graph, limits: &Limits) -> Result<PathSearch> {
    check_size(g, limits)?;
    let mut nodes = 0;
    if g.order() == 0 {
        return Ok(PathSearch { path: None, nodes });
    }
    if !g.is_connected() {
        return Ok(PathSearch { path: None, nodes });
    }
    for start in 0..g.order() {
        let mut search = Search {
            adj: g.adjacency(),
            full: g.vertices().bits(),
            start,
            goal: Goal::Open,
            nodes: 0,
            limits,
        };
        let mut path = vec![start];
        let found = search.run(&mut path, 1 << start)?;
        nodes += search.nodes;
        if found {
            return Ok(PathSearch { path: Some(HamPath::new(path)), nodes });
        }
    }
    Ok(PathSearch { path: None, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn c6_cycle_in_index_order() {
        let cert = find_hamiltonian_cycle(&named::cycle(6)).unwrap();
        assert_eq!(cert.cycle().unwrap().order, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn classical_non_hamiltonian_graphs() {
        assert!(!find_hamiltonian_cycle(&named::petersen()).unwrap().is_hamiltonian());
        assert!(!find_hamiltonian_cycle(&named::complete_bipartite(2, 3)).unwrap().is_hamiltonian());
        assert!(!find_hamiltonian_cycle(&named::path(5)).unwrap().is_hamiltonian());
        assert!(find_hamiltonian_cycle(&named::complete(3)).unwrap().is_hamiltonian());
        assert!(find_hamiltonian_cycle(&named::wheel(7)).unwrap().is_hamiltonian());
    }

    #[test]
    fn cycles_validate() {
        for g in [named::complete(7), named::wheel(6), named::complete_bipartite(4, 4)] {
            let cert = find_hamiltonian_cycle(&g).unwrap();
            cert.cycle().unwrap().validate(&g).unwrap();
        }
    }

    #[test]
    fn paths_between_given_endpoints() {
        let p4 = named::path(4);
        assert_eq!(find_hamiltonian_path(&p4, 0, 3).unwrap().path.unwrap().order, vec![0, 1, 2, 3]);
        assert!(find_hamiltonian_path(&p4, 0, 2).unwrap().path.is_none());
        let k4 = named::complete(4);
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    let p = find_hamiltonian_path(&k4, x, y).unwrap().path.unwrap();
                    p.validate(&k4).unwrap();
                    assert_eq!((p.x(), p.y()), (x, y));
                }
            }
        }
        assert!(find_hamiltonian_path(&named::star(3), 1, 2).unwrap().path.is_none());
        assert!(find_hamiltonian_path(&k4, 1, 1).is_err());
    }

    #[test]
    fn spanning_paths() {
        assert!(find_spanning_path(&named::star(3)).unwrap().path.is_none());
        let p = find_spanning_path(&named::star(2)).unwrap().path.unwrap();
        assert_eq!(p.order, vec![1, 0, 2]);
        assert_eq!(find_spanning_path(&Graph::empty(1)).unwrap().path.unwrap().order, vec![0]);
        assert!(find_spanning_path(&Graph::empty(2)).unwrap().path.is_none());
    }

    #[test]
    fn caps_and_preconditions() {
        assert!(find_hamiltonian_cycle(&named::complete(2)).is_err());
        let big = named::cycle(33);
        assert!(matches!(find_hamiltonian_cycle(&big), Err(Error::InstanceTooLarge { .. })));
        assert!(find_hamiltonian_cycle_with(&big, &Limits::with_max_n(40)).unwrap().is_hamiltonian());
    }
}
