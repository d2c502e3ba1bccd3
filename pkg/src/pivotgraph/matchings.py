"""Perfect-matching parities and the pairing formula with repeated vertices."""

from __future__ import annotations

from collections.abc import Iterator, Sequence

from .errors import InputError, UnsupportedSizeError
from .graph import Graph

__all__ = ["enumerate_pairings", "pm_parity", "general_pm_parity", "pm_multiset"]

# above this order pm_parity switches from enumeration to the determinant
_ENUMERATION_LIMIT = 12

# (13)!! pairings of 14 positions is the largest pm_multiset will walk
_MULTISET_CAP = 14


def enumerate_pairings(n: int) -> Iterator[tuple]:
    """Yield every pairing (perfect matching) of the positions 0..n-1.

    A pairing is a tuple of (i, j) pairs with i < j partitioning range(n);
    there are (n-1)!! of them.  n must be even and non-negative.
    """
    if n < 0 or n % 2:
        raise InputError(f"pairings need an even non-negative count, got {n}")

    def rec(items: tuple) -> Iterator[tuple]:
        if not items:
            yield ()
            return
        first = items[0]
        rest = items[1:]
        for i, second in enumerate(rest):
            remaining = rest[:i] + rest[i + 1 :]
            for tail in rec(remaining):
                yield ((first, second),) + tail

    yield from rec(tuple(range(n)))


def pm_parity(G: Graph) -> int:
    """Parity of the number of perfect matchings of a simple graph.

    1 for the empty graph, 0 whenever the vertex count is odd.
    """
    if G.loops:
        raise InputError("pm_parity is defined on simple graphs; use general_pm_parity")
    verts = G.vertices
    if len(verts) % 2:
        return 0
    if len(verts) > _ENUMERATION_LIMIT:
        # enumeration is exponential; the adjacency determinant has the same parity
        return G.adjacency_matrix().det()

    def count(remaining: frozenset) -> int:
        if not remaining:
            return 1
        v = min(remaining)
        rest = remaining - {v}
        parity = 0
        for w in G.neighbors(v) & rest:
            parity ^= count(rest - {w})
        return parity

    return count(frozenset(verts))


def general_pm_parity(G: Graph) -> int:
    """Parity of partitions of V into edges and looped singletons; 1 when V is empty."""

    def count(remaining: frozenset) -> int:
        if not remaining:
            return 1
        v = min(remaining)
        rest = remaining - {v}
        parity = count(rest) if G.has_loop(v) else 0
        for w in G.neighbors(v) & rest:
            parity ^= count(rest - {w})
        return parity

    return count(frozenset(G.vertices))


def pm_multiset(G: Graph, args: Sequence) -> int:
    """Pairing formula over an even list of vertices, repeats allowed.

    XOR over all pairings of the argument positions of the AND, over the
    pairs, of sim on the paired vertices.  The empty list gives 1 and two
    arguments give sim(x, y).  G must be simple.
    """
    args = tuple(args)
    n = len(args)
    if n % 2:
        raise InputError(f"pm_multiset needs an even number of arguments, got {n}")
    if n > _MULTISET_CAP:
        raise UnsupportedSizeError(
            f"pm_multiset supports at most {_MULTISET_CAP} arguments, got {n}"
        )
    s = [[G.sim(a, b) for b in args] for a in args]
    parity = 0
    for pairing in enumerate_pairings(n):
        term = 1
        for i, j in pairing:
            if not s[i][j]:
                term = 0
                break
        parity ^= term
    return parity
