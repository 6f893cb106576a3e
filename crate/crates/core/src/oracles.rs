//! Independently coded brute-force oracles, compiled only for test suites
//! (feature `oracles`).
//!
//! Everything here works on plain `Vec<Vec<bool>>` adjacency matrices with
//! its own traversal code — deliberately sharing nothing with the solvers it
//! cross-checks. Only `matrix` touches the `Graph` API, and only through
//! `has_edge`.

use crate::graph::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn component_count(adj: &[Vec<bool>], alive: &[bool]) -> usize {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if alive[u] && adj[v][u] && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Minimum of `|S| / c(G − S)` over every subset with at least two remaining
/// components, as a reduced fraction; `None` when no such subset exists
/// (complete graphs).
pub fn naive_toughness(g: &Graph) -> Option<(i64, i64)> {
    let adj = matrix(g);
    let n = adj.len();
    assert!(n <= 24, "oracle is a full subset scan");
    let mut best: Option<(i64, i64)> = None;
    for mask in 0u64..(1 << n) {
        let alive: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        let c = component_count(&adj, &alive);
        if c < 2 {
            continue;
        }
        let s = mask.count_ones() as i64;
        let better = match best {
            None => true,
            Some((bn, bd)) => s * bd < bn * (c as i64),
        };
        if better {
            best = Some((s, c as i64));
        }
    }
    best.map(|(s, c)| {
        let g = gcd(s.max(1), c);
        if s == 0 {
            (0, 1)
        } else {
            (s / g, c / g)
        }
    })
}

/// Hamiltonicity by dynamic programming over vertex subsets (endpoint sets
/// per mask).
pub fn naive_is_hamiltonian(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = adj.len();
    if n < 3 {
        return false;
    }
    assert!(n <= 20, "oracle table is sized 2^n");
    let nbr: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| adj[v][u]).fold(0u32, |m, u| m | 1 << u))
        .collect();
    // paths start at vertex 0
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1u32..(1 << n) {
        if mask & 1 == 0 || reach[mask as usize] == 0 {
            continue;
        }
        let ends = reach[mask as usize];
        for v in 0..n {
            if ends >> v & 1 == 0 {
                continue;
            }
            let fresh = nbr[v] & !mask;
            let mut f = fresh;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                reach[(mask | 1 << u) as usize] |= 1 << u;
            }
        }
    }
    let full = (1u32 << n) - 1;
    reach[full as usize] & nbr[0] != 0
}

/// Exact circumference by subset dynamic programming; `None` for forests.
pub fn naive_circumference(g: &Graph) -> Option<usize> {
    let adj = matrix(g);
    let n = adj.len();
    assert!(n <= 16, "oracle table is sized 2^n");
    let nbr: Vec<u32> = (0..n)
        .map(|v| (0..n).filter(|&u| adj[v][u]).fold(0u32, |m, u| m | 1 << u))
        .collect();
    let mut best = 0usize;
    let mut reach = vec![0u32; 1 << n];
    for start in 0..n {
        for r in reach.iter_mut() {
            *r = 0;
        }
        let below: u32 = (1 << start) - 1;
        reach[1 << start] = 1 << start;
        for mask in (1u32 << start)..(1 << n) {
            if mask & below != 0 || mask >> start & 1 == 0 {
                continue;
            }
            let ends = reach[mask as usize];
            if ends == 0 {
                continue;
            }
            let size = mask.count_ones() as usize;
            if size >= 3 && ends & nbr[start] != 0 && size > best {
                best = size;
            }
            for v in 0..n {
                if ends >> v & 1 == 0 {
                    continue;
                }
                let mut f = nbr[v] & !mask & !below;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    reach[(mask | 1 << u) as usize] |= 1 << u;
                }
            }
        }
    }
    if best >= 3 {
        Some(best)
    } else {
        None
    }
}

/// Independence number by scanning all subsets.
pub fn naive_independence(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = adj.len();
    assert!(n <= 24);
    let mut best = 0;
    'outer: for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if adj[u][v] {
                    continue 'outer;
                }
            }
        }
        best = members.len();
    }
    best
}

/// The lexicographically smallest maximum independent set, by subset scan.
pub fn naive_lex_min_mis(g: &Graph) -> Vec<usize> {
    let adj = matrix(g);
    let n = adj.len();
    assert!(n <= 20);
    let mut best: Vec<usize> = Vec::new();
    'outer: for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if adj[u][v] {
                    continue 'outer;
                }
            }
        }
        if members.len() > best.len() || (members.len() == best.len() && members < best) {
            best = members;
        }
    }
    best
}

/// Clique number, for cross-checking α against the complement.
pub fn naive_max_clique(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = adj.len();
    assert!(n <= 24);
    let mut best = 0;
    'outer: for mask in 0u64..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !adj[u][v] {
                    continue 'outer;
                }
            }
        }
        best = members.len();
    }
    best
}

/// Vertex connectivity by scanning removal sets, smallest first.
pub fn naive_connectivity(g: &Graph) -> usize {
    let adj = matrix(g);
    let n = adj.len();
    if n <= 1 {
        return 0;
    }
    let complete = (0..n).all(|u| (0..n).all(|v| u == v || adj[u][v]));
    if complete {
        return n - 1;
    }
    assert!(n <= 24);
    let mut best = n - 1;
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let alive: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 0).collect();
        if component_count(&adj, &alive) >= 2 {
            best = size;
        }
    }
    best
}

/// Whether `host` contains an induced copy of `pattern`: all vertex subsets
/// of the right size, all bijections.
pub fn naive_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let h = matrix(host);
    let p = matrix(pattern);
    let k = p.len();
    if k > h.len() {
        return false;
    }
    let mut chosen = Vec::new();
    subsets_of_size(h.len(), k, 0, &mut chosen, &mut |subset| {
        permutations(subset, &mut |image| {
            (0..k).all(|a| (a + 1..k).all(|b| p[a][b] == h[image[a]][image[b]]))
        })
    })
}

fn subsets_of_size(
    n: usize,
    k: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    found: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == k {
        return found(chosen);
    }
    for v in from..n {
        chosen.push(v);
        if subsets_of_size(n, k, v + 1, chosen, found) {
            chosen.pop();
            return true;
        }
        chosen.pop();
    }
    false
}

fn permutations(items: &[usize], test: &mut impl FnMut(&[usize]) -> bool) -> bool {
    let mut work = items.to_vec();
    permute_rec(&mut work, 0, test)
}

fn permute_rec(work: &mut [usize], from: usize, test: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if from == work.len() {
        return test(work);
    }
    for i in from..work.len() {
        work.swap(from, i);
        if permute_rec(work, from + 1, test) {
            work.swap(from, i);
            return true;
        }
        work.swap(from, i);
    }
    false
}

/// Size of a smallest mixed separator between two disjoint sets: all direct
/// `X₁`–`X₂` edges must go, plus a minimum set of interior vertices cutting
/// every remaining path. Matches the maximum number of internally disjoint
/// paths with free endpoint reuse.
pub fn naive_min_separator(g: &Graph, x1: &[usize], x2: &[usize]) -> usize {
    let mut adj = matrix(g);
    let n = adj.len();
    assert!(n <= 24);
    let in_x1: Vec<bool> = (0..n).map(|v| x1.contains(&v)).collect();
    let in_x2: Vec<bool> = (0..n).map(|v| x2.contains(&v)).collect();
    let mut direct = 0;
    for &u in x1 {
        for &v in x2 {
            if adj[u][v] {
                direct += 1;
                adj[u][v] = false;
                adj[v][u] = false;
            }
        }
    }
    let interior: Vec<usize> = (0..n).filter(|&v| !in_x1[v] && !in_x2[v]).collect();
    let mut best = interior.len();
    'masks: for mask in 0u64..(1 << interior.len()) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut alive = vec![true; n];
        for (i, &v) in interior.iter().enumerate() {
            if mask >> i & 1 == 1 {
                alive[v] = false;
            }
        }
        // can any x1 vertex still reach x2?
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = x1.iter().copied().filter(|&v| alive[v]).collect();
        for &v in &stack {
            seen[v] = true;
        }
        while let Some(v) = stack.pop() {
            if in_x2[v] {
                continue 'masks;
            }
            for u in 0..n {
                if alive[u] && adj[v][u] && !seen[u] {
                    // do not walk through the far side
                    seen[u] = true;
                    if in_x2[u] {
                        continue 'masks;
                    }
                    stack.push(u);
                }
            }
        }
        best = size;
    }
    best + direct
}

/// Hamiltonicity by raw permutation scan; the slowest, most independent
/// check of all.
pub fn permutation_is_hamiltonian(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = adj.len();
    if n < 3 {
        return false;
    }
    assert!(n <= 10, "factorial oracle");
    let mut rest: Vec<usize> = (1..n).collect();
    permute_rec(&mut rest, 0, &mut |order| {
        let mut prev = 0;
        for &v in order {
            if !adj[prev][v] {
                return false;
            }
            prev = v;
        }
        adj[prev][0]
    })
}
