"""Shared oracles and generators for the test suite.

Oracles here are deliberately naive: determinants by permutation expansion,
matching parities by walking pairings, general matchings by brute subset
cover.  They never call the elimination-based code paths they check.
"""

from itertools import combinations, permutations

from pivotgraph import Graph, LocalComp, Pivot, apply as apply_seq


def labels(n):
    return list(range(n))


def all_simple_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), (pairs[i] for i in range(len(pairs)) if (mask >> i) & 1))


def all_loop_graphs(n):
    pairs = list(combinations(range(n), 2))
    for emask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (emask >> i) & 1]
        for lmask in range(1 << n):
            yield Graph(range(n), edges, (v for v in range(n) if (lmask >> v) & 1))


def all_symmetric_matrices(n):
    for G in all_loop_graphs(n):
        yield G.adjacency_matrix()


def random_simple_graph(rng, n, p=0.5):
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    return Graph(range(n), edges)


def random_loop_graph(rng, n, p=0.5, loop_p=0.5):
    edges = [e for e in combinations(range(n), 2) if rng.random() < p]
    loops = [v for v in range(n) if rng.random() < loop_p]
    return Graph(range(n), edges, loops)


def det_bruteforce(m):
    """Permutation expansion of the determinant, mod 2."""
    n = m.order
    dense = m.to_dense()
    total = 0
    for perm in permutations(range(n)):
        if all(dense[i][perm[i]] for i in range(n)):
            total ^= 1
    return total


def _pairings(items):
    if not items:
        yield ()
        return
    first = items[0]
    rest = items[1:]
    for i in range(len(rest)):
        for tail in _pairings(rest[:i] + rest[i + 1 :]):
            yield ((first, rest[i]),) + tail


def pm_bruteforce(G):
    """Perfect-matching parity by walking every pairing of the vertex set."""
    verts = tuple(G.vertices)
    if len(verts) % 2:
        return 0
    total = 0
    for pairing in _pairings(verts):
        if all(G.has_edge(u, v) for u, v in pairing):
            total ^= 1
    return total


def general_pm_bruteforce(G):
    """Parity of partitions into edges and looped singletons, by subset cover."""
    blocks = [frozenset(e) for e in G.edges]
    blocks += [frozenset((v,)) for v in sorted(G.loops)]
    full = frozenset(G.vertices)
    total = 0
    for mask in range(1 << len(blocks)):
        chosen = [blocks[i] for i in range(len(blocks)) if (mask >> i) & 1]
        if sum(len(b) for b in chosen) != len(full):
            continue
        union = frozenset().union(*chosen) if chosen else frozenset()
        if union == full:
            total ^= 1
    return total


def applicable_ops(G):
    ops = [LocalComp(v) for v in sorted(G.loops)]
    ops += [
        Pivot(u, v)
        for u, v in G.edges
        if u not in G.loops and v not in G.loops
    ]
    return ops


def random_applicable_sequence(rng, G, max_len):
    seq = []
    H = G
    for _ in range(rng.randint(0, max_len)):
        ops = applicable_ops(H)
        if not ops:
            break
        op = rng.choice(ops)
        seq.append(op)
        H = apply_seq(H, [op])
    return tuple(seq)


def randomized_reduced_sequence(rng, G, subset):
    """Random reduced applicable sequence with the given support; det must be 1."""
    H = G
    remaining = set(subset)
    seq = []
    while remaining:
        cand = [LocalComp(v) for v in sorted(remaining) if H.has_loop(v)]
        cand += [
            Pivot(u, v)
            for u, v in H.edges
            if u in remaining
            and v in remaining
            and not H.has_loop(u)
            and not H.has_loop(v)
        ]
        op = rng.choice(cand)
        seq.append(op)
        H = apply_seq(H, [op])
        remaining -= set(op.touched)
    return tuple(seq)


def add_true_twin(G, v, name):
    """New graph where ``name`` is adjacent to v and to every neighbor of v."""
    edges = list(G.edges) + [(name, w) for w in G.neighbors(v)] + [(name, v)]
    return Graph(list(G.vertices) + [name], edges, G.loops)
