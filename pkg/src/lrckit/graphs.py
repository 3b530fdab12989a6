"""Simple graphs for code construction.

Girth computation, deterministic near-regular / Turan generation, high-girth
regular bipartite graphs (projective-plane and generalized-quadrangle
incidence graphs, plus a randomized fallback), proper edge coloring of
regular bipartite graphs by repeated perfect matchings, the catalog of Moore
graphs, and node-edge incidence codes.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .field import GF, field_make, prime_power
from .matrix import Mat
from .code import CodeParams, LinearCode


class GraphError(ValueError):
    pass


class DegreeSequenceInfeasible(GraphError):
    pass


class InvalidBeta(GraphError):
    pass


class NotBipartiteRegular(GraphError):
    pass


class NotInCatalog(LookupError):
    pass


class ConstructionFailed(RuntimeError):
    pass


class Graph:
    """Undirected simple graph with optional node labels (layer tags)."""

    __slots__ = ("node_count", "edges", "labels")

    def __init__(self, node_count: int, edges: Iterable[Tuple[int, int]],
                 labels: Optional[Dict[str, Sequence[int]]] = None):
        es = []
        seen: Set[Tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at node {u}")
            if not (0 <= u < node_count and 0 <= v < node_count):
                raise GraphError(f"edge ({u},{v}) out of range")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"parallel edge {e}")
            seen.add(e)
            es.append(e)
        self.node_count = node_count
        self.edges = tuple(es)
        self.labels = {k: tuple(v) for k, v in (labels or {}).items()}

    def adjacency(self) -> List[List[Tuple[int, int]]]:
        """adj[u] = list of (neighbor, edge index)."""
        adj: List[List[Tuple[int, int]]] = [[] for _ in range(self.node_count)]
        for idx, (u, v) in enumerate(self.edges):
            adj[u].append((v, idx))
            adj[v].append((u, idx))
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.node_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={len(self.edges)})"


@dataclass(frozen=True)
class EdgeColoring:
    """Proper edge coloring: colors[i] is the color of graph edge i."""
    colors: Tuple[int, ...]
    palette: int

    def classes(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.palette)]
        for idx, c in enumerate(self.colors):
            out[c].append(idx)
        return out


def check_proper_coloring(g: Graph, coloring: EdgeColoring) -> bool:
    adj = g.adjacency()
    for nbrs in adj:
        seen = set()
        for _, e in nbrs:
            c = coloring.colors[e]
            if c in seen:
                return False
            seen.add(c)
    return True


# ---------------------------------------------------------------------------
# girth
# ---------------------------------------------------------------------------

def girth(g: Graph) -> float:
    """Length of a shortest cycle (math.inf for forests).

    BFS from every node; a non-tree edge (u, v) seen from root w witnesses a
    closed walk of length dist(u) + dist(v) + 1 through w, and the minimum of
    those witnesses over all roots is exactly the girth.
    """
    adj = g.adjacency()
    best = math.inf
    n = g.node_count
    for root in range(n):
        dist = [-1] * n
        via = [-1] * n  # edge index used to reach the node
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v, e in adj[u]:
                if e == via[u]:
                    continue
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    via[v] = e
                    queue.append(v)
                else:
                    cand = dist[u] + dist[v] + 1
                    if cand < best:
                        best = cand
    return best


def shortest_cycle(g: Graph) -> Optional[List[int]]:
    """Edge indices of one shortest cycle, or None for forests."""
    gth = girth(g)
    if gth == math.inf:
        return None
    adj = g.adjacency()
    n = g.node_count
    for root in range(n):
        dist = [-1] * n
        parent = [(-1, -1)] * n  # (prev node, edge idx)
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, e in adj[u]:
                if e == parent[u][1]:
                    continue
                if dist[v] == -1:
                    dist[v] = dist[u] + 1
                    parent[v] = (u, e)
                    queue.append(v)
                elif dist[u] + dist[v] + 1 == gth:
                    path_u, path_v = [], []
                    x = u
                    while x != root:
                        path_u.append(parent[x][1])
                        x = parent[x][0]
                    x = v
                    while x != root:
                        path_v.append(parent[x][1])
                        x = parent[x][0]
                    cycle = set(path_u) ^ set(path_v)
                    cycle.add(e)
                    if len(cycle) == gth:
                        return sorted(cycle)
    return None  # pragma: no cover


# ---------------------------------------------------------------------------
# deterministic generators
# ---------------------------------------------------------------------------

def graph_from_degree_sequence(degrees: Sequence[int]) -> Graph:
    """Havel-Hakimi with fixed (degree desc, index asc) ordering."""
    n = len(degrees)
    remaining = list(degrees)
    edges = []
    for _ in range(n):
        order = sorted(range(n), key=lambda i: (-remaining[i], i))
        u = order[0]
        d = remaining[u]
        if d == 0:
            break
        targets = [v for v in order[1:] if remaining[v] > 0][:d]
        if len(targets) < d:
            raise DegreeSequenceInfeasible(f"sequence {list(degrees)}")
        remaining[u] = 0
        for v in targets:
            remaining[v] -= 1
            edges.append((u, v))
    if any(remaining):
        raise DegreeSequenceInfeasible(f"sequence {list(degrees)}")
    return Graph(n, edges)


def near_regular_graph(k: int, r: int) -> Graph:
    """Graph with k edges on ceil(2k/r) nodes, degrees (r, ..., r, b).

    Feasible when 2k/r >= r+1 (b = 0) or ceil(2k/r) >= r+2 (b > 0).
    """
    if k < 1 or r < 1:
        raise DegreeSequenceInfeasible("need k, r >= 1")
    a, b = divmod(2 * k, r)
    m = a + (1 if b else 0)
    if (b == 0 and m < r + 1) or (b > 0 and m < r + 2):
        raise DegreeSequenceInfeasible(
            f"no near-regular graph for k={k}, r={r} (m={m})")
    degrees = [r] * a + ([b] if b else [])
    g = graph_from_degree_sequence(degrees)
    assert len(g.edges) == k
    return g


def regular_graph(nodes: int, degree: int) -> Graph:
    if nodes <= degree or (nodes * degree) % 2:
        raise DegreeSequenceInfeasible(
            f"no {degree}-regular graph on {nodes} nodes")
    return graph_from_degree_sequence([degree] * nodes)


def turan_graph(r: int, beta: int) -> Graph:
    """Complete multipartite graph on r + beta nodes in parts of size beta."""
    if not (1 <= beta <= r) or r % beta:
        raise InvalidBeta(f"need beta | r and 1 <= beta <= r, got {beta}, {r}")
    b = r + beta
    x = b // beta
    part = [i // beta for i in range(b)]
    edges = [(u, v) for u in range(b) for v in range(u + 1, b)
             if part[u] != part[v]]
    g = Graph(b, edges)
    assert len(g.edges) == x * (x - 1) * beta * beta // 2
    return g


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)],
                 labels={"left": range(a), "right": range(a, a + b)})


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs >= 3 nodes")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]        # outer pentagon
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]  # inner pentagram
    edges += [(i, 5 + i) for i in range(5)]             # spokes
    return Graph(10, edges)


def hoffman_singleton_graph() -> Graph:
    """Pentagon/pentagram construction; validated on build.

    Nodes 0..24: pentagons P_h (vertex i of pentagon h = 5h + i);
    nodes 25..49: pentagrams Q_j (vertex k of pentagram j = 25 + 5j + k).
    P_{h,i} is joined to Q_{j,k} iff k = h*j + i (mod 5).
    """
    edges = []
    for h in range(5):
        for i in range(5):
            edges.append((5 * h + i, 5 * h + (i + 1) % 5))
    for j in range(5):
        for k in range(5):
            edges.append((25 + 5 * j + k, 25 + 5 * j + (k + 2) % 5))
    seen = set()
    dedup = []
    for u, v in edges:
        e = (min(u, v), max(u, v))
        if e not in seen:
            seen.add(e)
            dedup.append(e)
    for h in range(5):
        for i in range(5):
            for j in range(5):
                k = (h * j + i) % 5
                dedup.append((5 * h + i, 25 + 5 * j + k))
    g = Graph(50, dedup)
    if g.degrees() != [7] * 50 or girth(g) != 5:
        raise ConstructionFailed("Hoffman-Singleton fixture failed checks")
    return g


# -- incidence graphs of classical point-line geometries --

def _projective_points(gf: GF, dim: int) -> List[Tuple[int, ...]]:
    """Normalized representatives (first nonzero coordinate 1) of the
    one-dimensional subspaces of GF(q)^dim."""
    pts = []
    q = gf.q
    for code in range(q ** dim):
        vec = []
        v = code
        for _ in range(dim):
            vec.append(v % q)
            v //= q
        if not any(vec):
            continue
        first = next(x for x in vec if x)
        if first != 1:
            continue
        pts.append(tuple(vec))
    return pts


def pg_incidence_graph(q: int) -> Graph:
    """Point-line incidence graph of the projective plane of order q.

    (q+1)-regular bipartite on 2(q^2+q+1) nodes with girth 6; for q a prime
    power this meets the Moore bound for girth 6.
    """
    if prime_power(q) is None:
        raise NotInCatalog(f"{q} is not a prime power")
    gf = field_make(*prime_power(q))
    pts = _projective_points(gf, 3)
    npts = len(pts)
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    # lines are indexed by their dual points: point p on line l iff p.l = 0
    for li, line in enumerate(pts):
        for p in pts:
            acc = 0
            for a, b in zip(p, line):
                acc = gf.add(acc, gf.mul(a, b))
            if acc == 0:
                edges.append((index[p], npts + li))
    g = Graph(2 * npts, edges,
              labels={"points": range(npts), "lines": range(npts, 2 * npts)})
    if girth(g) != 6:
        raise ConstructionFailed("projective plane incidence girth != 6")
    return g


def heawood_graph() -> Graph:
    return pg_incidence_graph(2)


def gq_incidence_graph(q: int) -> Graph:
    """Incidence graph of the symplectic generalized quadrangle of order q:
    totally isotropic lines of GF(q)^4 under an alternating form.  Gives a
    (q+1)-regular bipartite graph of girth 8 on 2(q^3+q^2+q+1) nodes."""
    if prime_power(q) is None:
        raise NotInCatalog(f"{q} is not a prime power")
    gf = field_make(*prime_power(q))
    pts = _projective_points(gf, 4)
    index = {p: i for i, p in enumerate(pts)}

    def form(x, y):
        s = gf.sub(gf.mul(x[0], y[1]), gf.mul(x[1], y[0]))
        return gf.add(s, gf.sub(gf.mul(x[2], y[3]), gf.mul(x[3], y[2])))

    def normalize(vec):
        first = next(x for x in vec if x)
        inv = gf.inv(first)
        return tuple(gf.mul(inv, x) for x in vec)

    lines: Set[frozenset] = set()
    for i, u in enumerate(pts):
        for v in pts[i + 1:]:
            if form(u, v):
                continue
            members = {index[u], index[v]}
            for s in gf.nonzero_elements():
                w = normalize(tuple(gf.add(a, gf.mul(s, b))
                                    for a, b in zip(u, v)))
                members.add(index[w])
            lines.add(frozenset(members))
    npts = len(pts)
    edges = []
    for li, line in enumerate(sorted(lines, key=sorted)):
        for p in line:
            edges.append((p, npts + li))
    g = Graph(npts + len(lines), edges,
              labels={"points": range(npts),
                      "lines": range(npts, npts + len(lines))})
    if len(lines) != npts or girth(g) != 8:
        raise ConstructionFailed("generalized quadrangle incidence failed")
    return g


def lcf_graph(n: int, shifts: Sequence[int], repeats: int) -> Graph:
    """Cubic graph from LCF notation: a Hamiltonian cycle plus chords
    i -> i + shift[i mod len(shifts)]."""
    if len(shifts) * repeats != n:
        raise GraphError("LCF length mismatch")
    edges = {(i, (i + 1) % n) if i < (i + 1) % n else ((i + 1) % n, i)
             for i in range(n)}
    for i in range(n):
        j = (i + shifts[i % len(shifts)]) % n
        edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def tutte_12_cage() -> Graph:
    """The unique (3, 12)-cage: 126 nodes, 3-regular, girth 12 (the incidence
    graph of the smallest generalized hexagon); validated on build."""
    shifts = [17, 27, -13, -59, -35, 35, -11, 13, -53, 53, -27, 21, 57, 11,
              -21, -57, 59, -17]
    g = lcf_graph(126, shifts, 7)
    if g.degrees() != [3] * 126 or girth(g) != 12:
        raise ConstructionFailed("12-cage fixture failed checks")
    return g


# ---------------------------------------------------------------------------
# bipartite machinery
# ---------------------------------------------------------------------------

def bipartition(g: Graph) -> Optional[Tuple[List[int], List[int]]]:
    color = [-1] * g.node_count
    adj = g.adjacency()
    for start in range(g.node_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, _ in adj[u]:
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return ([i for i, c in enumerate(color) if c == 0],
            [i for i, c in enumerate(color) if c != 0])


def hopcroft_karp(adj: Dict[int, List[int]]) -> Dict[int, int]:
    """Maximum matching of a bipartite graph given as left -> right lists;
    returns the left -> right matching dict."""
    INF = float("inf")
    match_l: Dict[int, int] = {}
    match_r: Dict[int, int] = {}
    lefts = list(adj.keys())

    def bfs() -> bool:
        dist = {}
        queue = deque()
        for u in lefts:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r.get(v)
                if w is None:
                    found = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        bfs.dist = dist  # type: ignore[attr-defined]
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r.get(v)
            if w is None or (bfs.dist.get(w) == bfs.dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        bfs.dist[u] = INF
        return False

    while bfs():
        for u in lefts:
            if u not in match_l:
                dfs(u)
    return match_l


def edge_color_bipartite(g: Graph) -> EdgeColoring:
    """Proper edge coloring of a d-regular bipartite graph with exactly d
    colors, each color class a perfect matching (repeated Hopcroft-Karp)."""
    parts = bipartition(g)
    if parts is None:
        raise NotBipartiteRegular("graph is not bipartite")
    degs = set(g.degrees())
    if len(degs) != 1:
        raise NotBipartiteRegular(f"degrees {sorted(degs)} not regular")
    d = degs.pop()
    left = set(parts[0])
    # edge lookup: (u, v) with u on the left
    edge_ids: Dict[Tuple[int, int], List[int]] = {}
    for idx, (u, v) in enumerate(g.edges):
        u2, v2 = (u, v) if u in left else (v, u)
        edge_ids.setdefault((u2, v2), []).append(idx)
    remaining = {pair: list(ids) for pair, ids in edge_ids.items()}
    colors = [-1] * len(g.edges)
    for color in range(d):
        adj: Dict[int, List[int]] = {}
        for (u, v) in remaining:
            adj.setdefault(u, []).append(v)
        matching = hopcroft_karp(adj)
        if len(matching) != len(parts[0]):
            raise NotBipartiteRegular("no perfect matching found")
        for u, v in matching.items():
            ids = remaining[(u, v)]
            colors[ids.pop()] = color
            if not ids:
                del remaining[(u, v)]
    assert not remaining and -1 not in colors
    coloring = EdgeColoring(tuple(colors), d)
    assert check_proper_coloring(g, coloring)
    return coloring


def bipartite_regular_girth(degree: int, girth_req: int,
                            seed: int = 0,
                            max_tries: int = 2000,
                            catalog: bool = True) -> Graph:
    """A degree-regular bipartite graph of girth >= girth_req.

    Known incidence geometries cover girth 4, 6, 8 (and 12 for degree 3);
    otherwise (or with catalog=False) superpose random permutations with a
    girth check and bounded retries.  `girth_req` is rounded up to even
    (bipartite girths are even).
    """
    if degree < 2:
        raise GraphError("degree must be >= 2")
    need = girth_req + (girth_req % 2)
    if catalog:
        if need <= 4:
            return complete_bipartite(degree, degree)
        q = degree - 1
        if need <= 6 and prime_power(q):
            return pg_incidence_graph(q)
        if need <= 8 and prime_power(q) and q <= 5:
            return gq_incidence_graph(q)
        if need <= 12 and degree == 3:
            return tutte_12_cage()
    # randomized fallback: superpose `degree` random permutations, then
    # repair short cycles with degree-preserving edge swaps
    rng = random.Random(seed)
    moore_side = sum((degree - 1) ** i for i in range(need // 2))
    side = 2 * moore_side
    for _round in range(6):
        perms: List[List[int]] = []
        for _ in range(degree):
            while True:
                cand = list(range(side))
                rng.shuffle(cand)
                if all(all(cand[i] != p[i] for i in range(side))
                       for p in perms):
                    perms.append(cand)
                    break
        edge_set = {(i, side + perm[i]) for perm in perms
                    for i in range(side)}
        for _swap in range(max_tries):
            g = Graph(2 * side, sorted(edge_set))
            cyc = shortest_cycle(g)
            if cyc is None or len(cyc) >= need:
                return g
            # swap one cycle edge against a random disjoint edge
            u, v = g.edges[rng.choice(cyc)]
            for _attempt in range(50):
                x, y = rng.choice(tuple(edge_set))
                if {u, v} & {x, y}:
                    continue
                if (u, y) in edge_set or (x, v) in edge_set:
                    continue
                edge_set -= {(u, v), (x, y)}
                edge_set |= {(u, y), (x, v)}
                break
        side *= 2
    raise ConstructionFailed(
        f"no {degree}-regular bipartite graph of girth {need} found "
        f"within the swap budget (raise max_tries or change the seed)")


# ---------------------------------------------------------------------------
# Moore catalog and incidence codes
# ---------------------------------------------------------------------------

def moore_catalog(r: int, t: int) -> Graph:
    """A concrete (r+1)-regular graph with girth t+1 meeting the Moore bound,
    when one is known to exist.

    Raises NotInCatalog otherwise; in particular the existence of a degree-57
    girth-5 Moore graph is an open question, so (r=56, t=4) is not served.
    """
    from .bounds import moore_bound
    if r < 1 or t < 2:
        raise NotInCatalog(f"no Moore graph catalogued for r={r}, t={t}")
    g: Optional[Graph] = None
    if r == 1:
        g = cycle_graph(t + 1)
    elif t == 2:
        g = complete_graph(r + 2)
    elif t == 3:
        g = complete_bipartite(r + 1, r + 1)
    elif t == 4 and r == 2:
        g = petersen_graph()
    elif t == 4 and r == 6:
        g = hoffman_singleton_graph()
    elif t == 5 and prime_power(r):
        g = pg_incidence_graph(r)
    elif t == 7 and prime_power(r) and r <= 5:
        g = gq_incidence_graph(r)
    elif t == 11 and r == 2:
        g = tutte_12_cage()
    if g is None:
        raise NotInCatalog(f"no Moore graph catalogued for r={r}, t={t}")
    expected = moore_bound(r, t)
    if g.node_count != expected or girth(g) < t + 1:
        raise ConstructionFailed("catalog graph fails Moore checks")
    return g


def incidence_code(g: Graph, gf: GF, coefficients: str = "one",
                   seed: int = 0) -> LinearCode:
    """Code whose parity-check matrix is the node-edge incidence matrix of g
    (entries 1 by default; `coefficients="random"` draws nonzero values)."""
    rng = random.Random(seed)
    rows = [[0] * len(g.edges) for _ in range(g.node_count)]
    for idx, (u, v) in enumerate(g.edges):
        if coefficients == "random" and gf.q > 2:
            rows[u][idx] = rng.randrange(1, gf.q)
            rows[v][idx] = rng.randrange(1, gf.q)
        else:
            rows[u][idx] = 1
            rows[v][idx] = 1
    H = Mat(gf, rows, cols=len(g.edges))
    code = LinearCode(H)
    code.params = CodeParams(n=code.n, k=code.k, q=gf.q)
    return code
