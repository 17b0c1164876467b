"""Shared helpers: small named graphs and independent brute-force oracles.

The oracles here deliberately avoid the package's own search machinery so
that expected values are computed through a second route.
"""

from itertools import combinations, permutations

import pytest

from homoglab.graphs import Graph


def petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))               # spokes
    return Graph(10, edges)


def brute_alpha(g: Graph) -> int:
    """Maximum independent set size by subset enumeration."""
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for sub in combinations(range(g.n), size):
            if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = size
                break
    return best


def brute_max_clique(g: Graph) -> int:
    best = 0
    for size in range(g.n, 0, -1):
        if size <= best:
            break
        for sub in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(sub, 2)):
                best = size
                break
    return best


def brute_independent_dominating_of_size(g: Graph, size: int) -> list[tuple[int, ...]]:
    out = []
    for sub in combinations(range(g.n), size):
        if any(g.has_edge(u, v) for u, v in combinations(sub, 2)):
            continue
        covered = set(sub)
        for v in sub:
            covered.update(g.neighbors(v))
        if len(covered) == g.n:
            out.append(sub)
    return out


def brute_min_code(g: Graph) -> tuple:
    """Minimum edge-bit tuple over all permutations; independent of the
    package's canonical form."""
    pairs = list(combinations(range(g.n), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    best = None
    for pi in permutations(range(g.n)):
        val = 0
        for u, v in g.edges():
            a, b = pi[u], pi[v]
            val |= 1 << idx[(min(a, b), max(a, b))]
        if best is None or val < best:
            best = val
    return (g.n, best)


def graph_from_bits(n: int, bits: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n, (p for i, p in enumerate(pairs) if bits >> i & 1))


def all_total_homomorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Every total endomorphism by direct enumeration (oracle use only)."""
    from itertools import product

    out = []
    for f in product(range(g.n), repeat=g.n):
        if all(g.has_edge(f[u], f[v]) for u, v in g.edges()):
            out.append(f)
    return out


@pytest.fixture(scope="session")
def rs3_m2():
    from homoglab.verify import rs_truncation

    return rs_truncation(3, 2)


@pytest.fixture(scope="session")
def rs3_m3():
    from homoglab.verify import rs_truncation

    return rs_truncation(3, 3)
