//! Brute-force reference implementations used by the integration tests.
//!
//! Nothing here calls into the library except to build graphs and compute
//! canonical codes for deduplication. Faces are traced with the successor
//! rule, which walks every face in the opposite direction to the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use pentaplane::{build_graph, CanonicalCode, PlaneGraph};
use rayon::prelude::*;

pub type Rot = Vec<Vec<usize>>;

pub fn rot_of(g: &PlaneGraph) -> Rot {
    g.rotations().to_vec()
}

pub fn edge_set(rot: &Rot) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (v, r) in rot.iter().enumerate() {
        for &w in r {
            out.insert((v.min(w), v.max(w)));
        }
    }
    out
}

pub fn adjacent(rot: &Rot, a: usize, b: usize) -> bool {
    rot[a].contains(&b)
}

/// Faces as closed vertex sequences.
pub fn faces(rot: &Rot) -> Vec<Vec<usize>> {
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut out = Vec::new();
    for u in 0..rot.len() {
        for &v in &rot[u] {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut face = Vec::new();
            let (mut a, mut b) = (u, v);
            while used.insert((a, b)) {
                face.push(a);
                let i = rot[b].iter().position(|&x| x == a).unwrap();
                let c = rot[b][(i + 1) % rot[b].len()];
                a = b;
                b = c;
            }
            out.push(face);
        }
    }
    if out.is_empty() {
        out.push(Vec::new());
    }
    out
}

/// Rotation to the smallest vertex, then the direction with the smaller
/// second entry.
pub fn normalize_cycle(c: &[usize]) -> Vec<usize> {
    let m = c.len();
    if m == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<usize>> = None;
    for start in 0..m {
        for dir in [1isize, -1] {
            let seq: Vec<usize> = (0..m)
                .map(|i| c[((start as isize + dir * i as isize).rem_euclid(m as isize)) as usize])
                .collect();
            if best.as_ref().map_or(true, |b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap()
}

pub const INF: usize = usize::MAX / 4;

pub fn floyd_warshall(rot: &Rot) -> Vec<Vec<usize>> {
    let n = rot.len();
    let mut d = vec![vec![INF; n]; n];
    for v in 0..n {
        d[v][v] = 0;
        for &w in &rot[v] {
            d[v][w] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn diameter(rot: &Rot) -> usize {
    floyd_warshall(rot).iter().flatten().copied().max().unwrap()
}

/// Shortest cycle through each edge: drop the edge and measure the detour.
pub fn girth(rot: &Rot) -> Option<usize> {
    let n = rot.len();
    let mut best = None;
    for (a, b) in edge_set(rot) {
        let mut dist = vec![INF; n];
        dist[a] = 0;
        let mut q = VecDeque::from([a]);
        while let Some(x) = q.pop_front() {
            for &y in &rot[x] {
                if (x, y) == (a, b) || (x, y) == (b, a) || dist[y] != INF {
                    continue;
                }
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
        if dist[b] != INF {
            let len = dist[b] + 1;
            best = Some(best.map_or(len, |g: usize| g.min(len)));
        }
    }
    best
}

/// Every simple cycle of the given length, normalized and sorted.
pub fn cycles(rot: &Rot, len: usize) -> Vec<Vec<usize>> {
    fn grow(rot: &Rot, len: usize, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() == len {
            if rot[last].contains(&path[0]) {
                out.insert(normalize_cycle(path));
            }
            return;
        }
        for &w in &rot[last] {
            if !path.contains(&w) {
                path.push(w);
                grow(rot, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..rot.len() {
        grow(rot, len, &mut vec![s], &mut out);
    }
    out.into_iter().collect()
}

pub fn dominates(rot: &Rot, by: &[usize], region: &BTreeSet<usize>) -> bool {
    region
        .iter()
        .all(|&x| by.iter().any(|&d| adjacent(rot, x, d)))
}

/// The two sides of a cycle, left and right of its traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sides {
    pub vertices: [BTreeSet<usize>; 2],
    /// Normalized face cycles.
    pub faces: [BTreeSet<Vec<usize>>; 2],
}

fn strictly_between_ccw(rot: &[usize], from: usize, to: usize) -> Vec<usize> {
    let d = rot.len();
    let i = rot.iter().position(|&x| x == from).unwrap();
    let mut out = Vec::new();
    for s in 1..d {
        let w = rot[(i + s) % d];
        if w == to {
            break;
        }
        out.push(w);
    }
    out
}

/// Index 0 is the left of `cycle` walked in order, index 1 the right.
pub fn sides(rot: &Rot, cycle: &[usize]) -> Sides {
    let m = cycle.len();
    let n = rot.len();
    let on_cycle: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut side = vec![None; n];
    // Chord directions leaving each cycle vertex, labelled by side.
    let mut chord_side: Vec<((usize, usize), usize)> = Vec::new();
    for i in 0..m {
        let (p, c, q) = (cycle[(i + m - 1) % m], cycle[i], cycle[(i + 1) % m]);
        let left = strictly_between_ccw(&rot[c], q, p);
        for &w in &rot[c] {
            if w == p || w == q {
                continue;
            }
            let s = if left.contains(&w) { 0 } else { 1 };
            if on_cycle.contains(&w) {
                chord_side.push(((c, w), s));
            } else {
                side[w] = Some(s);
            }
        }
    }
    // Spread through the rest of the graph without crossing the cycle.
    let mut q: VecDeque<usize> = (0..n).filter(|&v| side[v].is_some()).collect();
    while let Some(x) = q.pop_front() {
        for &y in &rot[x] {
            if on_cycle.contains(&y) {
                continue;
            }
            match side[y] {
                None => {
                    side[y] = side[x];
                    q.push_back(y);
                }
                Some(s) => assert_eq!(Some(s), side[x], "component on both sides"),
            }
        }
    }
    let mut out = Sides {
        vertices: Default::default(),
        faces: Default::default(),
    };
    for (v, s) in side.iter().enumerate() {
        if let Some(s) = *s {
            out.vertices[s].insert(v);
        }
    }
    for f in faces(rot) {
        let s = if let Some(&v) = f.iter().find(|v| !on_cycle.contains(v)) {
            side[v].unwrap()
        } else {
            let k = f.len();
            let chord = (0..k).map(|j| (f[j], f[(j + 1) % k])).find_map(|(a, b)| {
                chord_side
                    .iter()
                    .find(|(d, _)| *d == (a, b))
                    .map(|(_, s)| *s)
            });
            match chord {
                Some(s) => s,
                None => {
                    // A face bounded by the cycle itself. Successor tracing
                    // keeps the face on the right of each dart.
                    let (a, b) = (f[0], f[1 % k]);
                    let i = cycle.iter().position(|&x| x == a).unwrap();
                    if cycle[(i + 1) % m] == b {
                        1
                    } else {
                        0
                    }
                }
            }
        };
        out.faces[s].insert(normalize_cycle(&f));
    }
    out
}

/// Sides of `cycle` as (interior, exterior), where the exterior holds the
/// face whose normalized cycle is `outer`.
pub fn int_ext(rot: &Rot, cycle: &[usize], outer: &[usize]) -> Sides {
    let s = sides(rot, cycle);
    let key = normalize_cycle(outer);
    if s.faces[0].contains(&key) {
        Sides {
            vertices: [s.vertices[1].clone(), s.vertices[0].clone()],
            faces: [s.faces[1].clone(), s.faces[0].clone()],
        }
    } else {
        s
    }
}

pub fn face_star(rot: &Rot, v: usize) -> (BTreeSet<usize>, BTreeSet<(usize, usize)>) {
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    for f in faces(rot) {
        if !f.contains(&v) {
            continue;
        }
        let k = f.len();
        for j in 0..k {
            let (a, b) = (f[j], f[(j + 1) % k]);
            vs.insert(a);
            es.insert((a.min(b), a.max(b)));
        }
    }
    (vs, es)
}

/// All k-chords at `v` as paths with the smaller endpoint first.
pub fn chords(rot: &Rot, v: usize, k: usize) -> BTreeSet<Vec<usize>> {
    let d = floyd_warshall(rot);
    let (_, star) = face_star(rot, v);
    let shell: BTreeSet<usize> = (0..rot.len()).filter(|&x| d[v][x] == 2).collect();
    let mut out = BTreeSet::new();
    fn walk(rot: &Rot, k: usize, path: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
        if path.len() == k + 1 {
            all.push(path.clone());
            return;
        }
        let last = *path.last().unwrap();
        for &w in &rot[last] {
            if !path.contains(&w) {
                path.push(w);
                walk(rot, k, path, all);
                path.pop();
            }
        }
    }
    let mut all = Vec::new();
    for s in 0..rot.len() {
        walk(rot, k, &mut vec![s], &mut all);
    }
    for p in all {
        let (x, y) = (p[0], p[k]);
        if x >= y || !shell.contains(&x) || !shell.contains(&y) {
            continue;
        }
        if p[1..k].iter().any(|w| shell.contains(w)) {
            continue;
        }
        if p.windows(2)
            .any(|e| star.contains(&(e[0].min(e[1]), e[0].max(e[1]))))
        {
            continue;
        }
        out.insert(p);
    }
    out
}

/// Unordered pairs of 4-cycles admitting a dislocated choice of regions and
/// dominating pairs.
pub fn dislocated(rot: &Rot, outer: &[usize]) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let cyc = cycles(rot, 4);
    let parts: Vec<Sides> = cyc.iter().map(|c| int_ext(rot, c, outer)).collect();
    let options = |i: usize| {
        let mut out = Vec::new();
        for s in 0..2 {
            for a in 0..4 {
                for b in a + 1..4 {
                    let pair = [cyc[i][a], cyc[i][b]];
                    if dominates(rot, &pair, &parts[i].vertices[s]) {
                        let mut p = pair;
                        p.sort_unstable();
                        out.push((s, p));
                    }
                }
            }
        }
        out
    };
    let mut out = BTreeSet::new();
    for i in 0..cyc.len() {
        for j in i + 1..cyc.len() {
            let ok = options(i).iter().any(|&(s1, p1)| {
                options(j).iter().any(|&(s2, p2)| {
                    p1 != p2 && parts[i].faces[s1].is_disjoint(&parts[j].faces[s2])
                })
            });
            if ok {
                out.insert((cyc[i].clone(), cyc[j].clone()));
            }
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn connected(n: usize, adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn edge_subsets(
    pairs: &[(usize, usize)],
    start: usize,
    left: usize,
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
    n: usize,
) {
    if left == 0 {
        let mut deg = vec![0; n];
        for &(a, b) in chosen.iter() {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg.iter().all(|&d| d >= 2) && deg.windows(2).all(|w| w[0] >= w[1]) {
            out.push(chosen.clone());
        }
        return;
    }
    for i in start..=pairs.len() - left {
        chosen.push(pairs[i]);
        edge_subsets(pairs, i + 1, left - 1, chosen, out, n);
        chosen.pop();
    }
}

/// Canonical codes of every pentagulation on exactly `n` vertices, found by
/// trying every rotation system of every graph with the right edge count.
pub fn pentagulation_classes(n: usize) -> BTreeSet<CanonicalCode> {
    if n < 3 || (n - 2) % 3 != 0 {
        return BTreeSet::new();
    }
    let e = 5 * (n - 2) / 3;
    let f = 2 + e - n;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    // Split on the first chosen edge so the search parallelizes.
    let graphs: Vec<Vec<(usize, usize)>> = (0..=pairs.len() - e)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut chosen = vec![pairs[first]];
            edge_subsets(&pairs, first + 1, e - 1, &mut chosen, &mut out, n);
            out
        })
        .collect();
    graphs
        .par_iter()
        .flat_map_iter(|edges| {
            let mut adj = vec![Vec::new(); n];
            for &(a, b) in edges {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut found = Vec::new();
            if !connected(n, &adj) {
                return found;
            }
            // Fix each vertex's first neighbor and permute the rest.
            let choices: Vec<Vec<Vec<usize>>> = adj
                .iter()
                .map(|nb| {
                    permutations(&nb[1..])
                        .into_iter()
                        .map(|mut p| {
                            p.insert(0, nb[0]);
                            p
                        })
                        .collect()
                })
                .collect();
            let mut idx = vec![0usize; n];
            loop {
                let rot: Rot = (0..n).map(|v| choices[v][idx[v]].clone()).collect();
                let fs = faces(&rot);
                let simple5 =
                    |c: &Vec<usize>| c.len() == 5 && c.iter().collect::<BTreeSet<_>>().len() == 5;
                if fs.len() == f && fs.iter().all(simple5) {
                    found.push(build_graph(n, rot).unwrap().canonical_code());
                }
                let mut v = 0;
                loop {
                    if v == n {
                        return found;
                    }
                    idx[v] += 1;
                    if idx[v] < choices[v].len() {
                        break;
                    }
                    idx[v] = 0;
                    v += 1;
                }
            }
        })
        .collect()
}

/// Builds the graph with vertices renamed by `perm` and, optionally, every
/// rotation reversed.
pub fn relabel(rot: &Rot, perm: &[usize], mirror: bool) -> PlaneGraph {
    let n = rot.len();
    let mut out = vec![Vec::new(); n];
    for v in 0..n {
        let mut r: Vec<usize> = rot[v].iter().map(|&w| perm[w]).collect();
        if mirror {
            r.reverse();
        }
        out[perm[v]] = r;
    }
    build_graph(n, out).unwrap()
}
