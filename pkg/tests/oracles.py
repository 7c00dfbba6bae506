"""Independent reference implementations used only by the tests.

Nothing here touches the library's canonical labeling or generators: trees
are deduplicated by their own AHU center encoding, small graph classes by
brute-force minimum adjacency over all permutations.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product

from sombor.graph import Graph


def prufer_to_edges(code, n):
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _adj(n, edges):
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(adj):
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    left = n
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _encode(adj, v, parent):
    return "(" + "".join(sorted(_encode(adj, w, v) for w in adj[v] if w != parent)) + ")"


def ahu_tree_key(n, edges):
    """Isomorphism key for a free tree: minimal AHU string over its centers."""
    adj = _adj(n, edges)
    return min(_encode(adj, c, -1) for c in _centers(adj))


@lru_cache(maxsize=None)
def _representatives(n, monotone):
    if n <= 2:
        edges = [(0, 1)] if n == 2 else []
        return {ahu_tree_key(n, edges): edges}
    codes = combinations_with_replacement(range(n), n - 2) if monotone else product(range(n), repeat=n - 2)
    reps = {}
    for code in codes:
        edges = prufer_to_edges(code, n)
        reps.setdefault(ahu_tree_key(n, edges), edges)
    return reps


def prufer_tree_representatives(n, monotone=False, max_degree=None):
    """One labeled edge list per isomorphism class of trees, keyed by AHU string.

    With ``monotone`` only non-decreasing codes are visited; within the tested
    range this already reaches every class, and it keeps n=10 cheap.
    """
    reps = _representatives(n, monotone)
    if max_degree is None:
        return dict(reps)
    out = {}
    for key, edges in reps.items():
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if max(deg, default=0) <= max_degree:
            out[key] = edges
    return out


def prufer_tree_keys(n, monotone=False):
    return set(_representatives(n, monotone))


def unicyclic_classes_from_trees(n):
    """Every tree class plus one edge, deduplicated with networkx isomorphism."""
    import networkx as nx

    buckets = {}
    for edges in prufer_tree_representatives(n).values():
        base = nx.Graph(edges)
        for u, v in nx.non_edges(base):
            h = base.copy()
            h.add_edge(u, v)
            key = tuple(sorted(d for _, d in h.degree()))
            bucket = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(h, r) for r in bucket):
                bucket.append(h)
    return [h for bucket in buckets.values() for h in bucket]


def brute_key(n, edges):
    """Minimum upper-triangle bit string over all vertex permutations."""
    es = {frozenset(e) for e in edges}
    best = None
    pairs = list(combinations(range(n), 2))
    for perm in permutations(range(n)):
        inv = [0] * n
        for i, v in enumerate(perm):
            inv[v] = i
        mapped = {frozenset((inv[u], inv[v])) for u, v in map(tuple, es)}
        bits = tuple(frozenset(p) in mapped for p in pairs)
        if best is None or bits < best:
            best = bits
    return best


def _connected(n, edges):
    adj = _adj(n, edges)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def labeled_class_keys(n, kind):
    """Brute-force isomorphism classes of all labeled graphs on n vertices of a kind."""
    pairs = list(combinations(range(n), 2))
    keys = set()
    sizes = {"unicyclic": [n], "connected": range(n - 1, len(pairs) + 1), "tree": [n - 1]}[kind]
    for m in sizes:
        for edges in combinations(pairs, m):
            if _connected(n, edges):
                keys.add(brute_key(n, edges))
    return keys


def networkx_graph(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edge_list())
    return h
