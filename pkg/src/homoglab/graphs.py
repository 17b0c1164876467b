"""Finite simple graphs over dense integer vertices.

Vertices are the integers 0..n-1 and every vertex set is kept internally as
an integer bitmask, so neighbourhood intersections are single big-int
operations.  On top of that representation the module provides the
structural quantities the rest of the package is built on: common
neighbourhoods, cones and co-cones, exact independence and star numbers,
directories (independent dominating sets of maximum size), addresses,
exact neighbourhoods and domination numbers relative to a directory.

All functions are pure and all returned vertex sets are sorted lists, with
ties broken toward the lexicographically least witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import NotADirectoryBase, StarNumberZero, Undominated

__all__ = [
    "Graph",
    "AnalysisReport",
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "path_graph",
    "disjoint_union",
    "complement",
    "lex_product",
    "induced_subgraph",
    "common_neighborhood",
    "cone_set",
    "is_connected",
    "independence_number",
    "star_number",
    "directories",
    "is_independent",
    "dominates",
    "is_independent_dominating",
    "is_directory",
    "address",
    "address_union",
    "exact_neighborhood",
    "domination_number",
    "analyze",
]


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask_of(vertices: Iterable[int], n: int) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for order {n}")
        mask |= 1 << v
    return mask


def _list_of(mask: int) -> list[int]:
    return list(_iter_bits(mask))


class Graph:
    """An immutable simple graph: symmetric irreflexive adjacency on 0..n-1."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("order must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "Graph":
        """Build a graph from per-vertex neighbourhood bitmasks."""
        masks = tuple(masks)
        n = len(masks)
        g = object.__new__(cls)
        g.n = n
        g._adj = masks
        full = (1 << n) - 1
        for v, row in enumerate(masks):
            if row & ~full:
                raise ValueError(f"mask of vertex {v} references vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _iter_bits(row):
                if not masks[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return g

    @property
    def masks(self) -> tuple[int, ...]:
        """Per-vertex neighbourhood bitmasks (stable representation)."""
        return self._adj

    def adjacency_mask(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for order {self.n}")
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        return _list_of(self.adjacency_mask(v))

    def degree(self, v: int) -> int:
        return self.adjacency_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"pair ({u},{v}) out of range for order {self.n}")
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            above = self._adj[u] >> (u + 1) << (u + 1)
            for v in _iter_bits(above):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the image of the graph under ``old -> perm[old]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph.from_masks(full & ~(1 << v) for v in range(n))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((v, (v + 1) % n) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    masks = list(g.masks) + [m << g.n for m in h.masks]
    return Graph.from_masks(masks)


def complement(g: Graph) -> Graph:
    """Same vertices; u~v exactly when u != v and u,v are non-adjacent in g."""
    full = (1 << g.n) - 1
    return Graph.from_masks(full & ~m & ~(1 << v) for v, m in enumerate(g.masks))


def lex_product(g: Graph, h: Graph) -> Graph:
    """Composite g[h]: (a,x)~(b,y) iff a~b in g, or a=b and x~y in h.

    Vertex (a, x) has index a*order(h) + x.
    """
    n, m = g.n, h.n
    edges = []
    for a in range(n):
        for b in g.neighbors(a):
            if b > a:
                for x in range(m):
                    for y in range(m):
                        edges.append((a * m + x, b * m + y))
        for x, y in h.edges():
            edges.append((a * m + x, a * m + y))
    return Graph(n * m, edges)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Restrict g to s.  Returns the subgraph and the old->new index map."""
    vs = sorted(set(s))
    _mask_of(vs, g.n)
    index = {v: i for i, v in enumerate(vs)}
    masks = []
    for v in vs:
        row = 0
        for i, u in enumerate(vs):
            if g.masks[v] >> u & 1:
                row |= 1 << i
        masks.append(row)
    return Graph.from_masks(masks), index


def _common_mask(masks: tuple[int, ...], smask: int, n: int) -> int:
    result = (1 << n) - 1
    for v in _iter_bits(smask):
        result &= masks[v]
    return result


def common_neighborhood(g: Graph, s: Iterable[int]) -> list[int]:
    """Vertices adjacent to every member of s; all vertices when s is empty."""
    smask = _mask_of(s, g.n)
    return _list_of(_common_mask(g.masks, smask, g.n))


def cone_set(g: Graph, x: Iterable[int], polarity: str = "cone") -> list[int]:
    """Cones (common neighbours) or co-cones (outside x, adjacent to none of x)."""
    xmask = _mask_of(x, g.n)
    if polarity == "cone":
        return _list_of(_common_mask(g.masks, xmask, g.n))
    if polarity == "cocone":
        result = (1 << g.n) - 1
        for v in _iter_bits(xmask):
            result &= ~g.masks[v]
        return _list_of(result & ~xmask)
    raise ValueError(f"polarity must be 'cone' or 'cocone', got {polarity!r}")


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability check; vacuously true for order <= 1."""
    if g.n <= 1:
        return True
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in _iter_bits(frontier):
            grow |= g.masks[v]
        frontier = grow & ~seen
        seen |= grow
    return seen == (1 << g.n) - 1


# --- exact independence machinery -----------------------------------------
#
# alpha(g) is the clique number of the complement, computed by branch and
# bound with a greedy colouring bound.  Witnesses are extracted separately
# so that the reported set is always the lexicographically least maximum
# independent set.


def _co_masks(g: Graph) -> tuple[int, ...]:
    full = (1 << g.n) - 1
    return tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.masks))


def _color_order(adj: tuple[int, ...], cand: int) -> list[tuple[int, int]]:
    """Greedy colouring of cand; returns (vertex, colour) in colour order."""
    order = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append((v, color))
            uncolored ^= low
            avail = (avail ^ low) & ~adj[v]
    return order


def _max_clique_size(adj: tuple[int, ...], cand: int) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order = _color_order(adj, cand)
        local = cand
        for v, c in reversed(order):
            if size + c <= best:
                return
            vbit = 1 << v
            expand(size + 1, local & adj[v])
            local ^= vbit

    expand(0, cand)
    return best


def _exists_clique(adj: tuple[int, ...], cand: int, need: int) -> bool:
    """Early-exit search for a clique of size >= need within cand."""
    if need <= 0:
        return True
    if cand.bit_count() < need:
        return False
    found = False

    def expand(size: int, cand: int) -> None:
        nonlocal found
        if found:
            return
        if size >= need:
            found = True
            return
        if not cand:
            return
        order = _color_order(adj, cand)
        local = cand
        for v, c in reversed(order):
            if found:
                return
            if size + c < need:
                return
            vbit = 1 << v
            expand(size + 1, local & adj[v])
            local ^= vbit

    expand(0, cand)
    return found


def _lex_least_clique(adj: tuple[int, ...], cand: int, size: int) -> list[int]:
    """Lexicographically least clique of the given size within cand."""
    chosen: list[int] = []
    need = size
    while need:
        for v in _iter_bits(cand):
            above = -1 << (v + 1)
            rest = cand & adj[v] & above
            if _exists_clique(adj, rest, need - 1):
                chosen.append(v)
                cand = rest
                need -= 1
                break
        else:
            raise AssertionError("witness extraction lost feasibility")
    return chosen


def independence_number(g: Graph) -> tuple[int, list[int]]:
    """Exact alpha(g) with its lexicographically least witness set."""
    co = _co_masks(g)
    full = (1 << g.n) - 1
    alpha = _max_clique_size(co, full)
    witness = _lex_least_clique(co, full, alpha)
    return alpha, witness


def star_number(g: Graph) -> tuple[int, tuple[int, list[int]] | None]:
    """sigma(g) = max over v of alpha(N(v)), 0 for edgeless graphs.

    The witness is the least vertex attaining the maximum together with the
    least maximum independent subset of its neighbourhood; None only for the
    empty graph.
    """
    if g.n == 0:
        return 0, None
    co = _co_masks(g)
    best = 0
    best_v = 0
    for v in range(g.n):
        nbhd = g.masks[v]
        if nbhd.bit_count() <= best:
            continue
        size = _max_clique_size(co, nbhd)
        if size > best:
            best, best_v = size, v
    witness = _lex_least_clique(co, g.masks[best_v], best)
    return best, (best_v, witness)


def directories(g: Graph) -> list[list[int]]:
    """All independent dominating sets of size alpha(g), in lexicographic order.

    For finite graphs these are exactly the maximum independent sets: a
    maximum independent set is maximal, and maximal independent sets
    dominate.  Requires star number >= 1.
    """
    if not any(g.masks):
        raise StarNumberZero("directories are undefined for edgeless graphs")
    co = _co_masks(g)
    full = (1 << g.n) - 1
    alpha = _max_clique_size(co, full)
    found: list[list[int]] = []

    def rec(cand: int, chosen: list[int], need: int) -> None:
        if need == 0:
            found.append(chosen.copy())
            return
        for v in _iter_bits(cand):
            rest = cand & co[v] & (-1 << (v + 1))
            if _exists_clique(co, rest, need - 1):
                chosen.append(v)
                rec(rest, chosen, need - 1)
                chosen.pop()

    rec(full, [], alpha)
    return found


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    smask = _mask_of(s, g.n)
    return all(not g.masks[v] & smask for v in _iter_bits(smask))


def dominates(g: Graph, d: Iterable[int], x: Iterable[int]) -> bool:
    """True when every member of x has a neighbour in d."""
    dmask = _mask_of(d, g.n)
    covered = 0
    for v in _iter_bits(dmask):
        covered |= g.masks[v]
    return _mask_of(x, g.n) & ~covered == 0


def is_independent_dominating(g: Graph, s: Iterable[int]) -> bool:
    smask = _mask_of(s, g.n)
    if any(g.masks[v] & smask for v in _iter_bits(smask)):
        return False
    covered = smask
    for v in _iter_bits(smask):
        covered |= g.masks[v]
    return covered == (1 << g.n) - 1


def is_directory(g: Graph, i: Iterable[int], relaxed: bool = False) -> bool:
    """Check the directory conditions for a finite graph.

    Exact mode requires |i| = alpha(g).  Relaxed mode is the
    truncation-directory variant used for finite windows onto infinite
    graphs and accepts any independent dominating set with
    |i| >= 2*sigma(g) - 1.  Edgeless graphs have no directories.
    """
    iset = sorted(set(i))
    if not any(g.masks):
        return False
    if not is_independent_dominating(g, iset):
        return False
    if relaxed:
        sigma, _ = star_number(g)
        return len(iset) >= 2 * sigma - 1
    alpha, _ = independence_number(g)
    return len(iset) == alpha


def _require_base(g: Graph, i: Iterable[int]) -> int:
    imask = _mask_of(i, g.n)
    if any(g.masks[v] & imask for v in _iter_bits(imask)):
        raise NotADirectoryBase("index set is not independent")
    covered = imask
    for v in _iter_bits(imask):
        covered |= g.masks[v]
    if covered != (1 << g.n) - 1:
        missing = next(_iter_bits(((1 << g.n) - 1) & ~covered))
        raise NotADirectoryBase(f"index set does not dominate vertex {missing}")
    return imask


def address(g: Graph, i: Iterable[int], x: int) -> list[int]:
    """N(x) intersected with i, or {x} itself when x belongs to i."""
    imask = _require_base(g, i)
    if not 0 <= x < g.n:
        raise ValueError(f"vertex {x} out of range for order {g.n}")
    if imask >> x & 1:
        return [x]
    return _list_of(g.masks[x] & imask)


def address_union(g: Graph, i: Iterable[int], xs: Iterable[int]) -> list[int]:
    """Union of the addresses of the members of xs."""
    imask = _require_base(g, i)
    result = 0
    for x in _iter_bits(_mask_of(xs, g.n)):
        if imask >> x & 1:
            result |= 1 << x
        else:
            result |= g.masks[x] & imask
    return _list_of(result)


def exact_neighborhood(g: Graph, i: Iterable[int], s: Iterable[int]) -> list[int]:
    """All vertices v with N(v) intersect i equal to s exactly."""
    imask = _require_base(g, i)
    smask = _mask_of(s, g.n)
    if smask & ~imask:
        raise ValueError("s must be a subset of the index set")
    return [v for v in range(g.n) if g.masks[v] & imask == smask]


def domination_number(g: Graph, i: Iterable[int], s: Iterable[int]) -> int:
    """Minimum number of index-set vertices needed to dominate s.

    Implements the recursive definition: vertices of s inside i are counted
    and everything they dominate is removed; the disjoint base case is an
    exact minimum hitting set over the address candidates.
    """
    imask = _require_base(g, i)
    smask = _mask_of(s, g.n)
    for x in _iter_bits(smask):
        if not imask >> x & 1 and not g.masks[x] & imask:
            raise Undominated(f"vertex {x} has no neighbour in the index set")

    def d(smask: int) -> int:
        if smask == 0:
            return 0
        inside = smask & imask
        if inside == 0:
            outside = _list_of(smask)
            # Only address members can dominate anything in s.
            pool = 0
            for x in outside:
                pool |= g.masks[x] & imask
            candidates = _list_of(pool)
            for k in range(1, len(candidates) + 1):
                for combo in combinations(candidates, k):
                    cmask = 0
                    for c in combo:
                        cmask |= 1 << c
                    if all(g.masks[x] & cmask for x in outside):
                        return k
            raise AssertionError("undominated set escaped the entry check")
        blocked = inside
        for x in _iter_bits(inside):
            blocked |= g.masks[x]
        return inside.bit_count() + d(smask & ~blocked)

    return d(smask)


@dataclass(frozen=True)
class AnalysisReport:
    """Structural summary of one finite graph."""

    independence_number: int
    alpha_witness: tuple[int, ...]
    star_number: int
    sigma_witness: tuple[int, tuple[int, ...]] | None
    directories: tuple[tuple[int, ...], ...]
    is_connected: bool

    def to_dict(self) -> dict:
        sigma = None
        if self.sigma_witness is not None:
            sigma = {
                "vertex": self.sigma_witness[0],
                "independent_set": list(self.sigma_witness[1]),
            }
        return {
            "independence_number": self.independence_number,
            "alpha_witness": list(self.alpha_witness),
            "star_number": self.star_number,
            "sigma_witness": sigma,
            "directories": [list(d) for d in self.directories],
            "is_connected": self.is_connected,
        }


def analyze(g: Graph) -> AnalysisReport:
    """Compute alpha, sigma, all directories and connectivity in one pass."""
    alpha, alpha_wit = independence_number(g)
    sigma, sigma_wit = star_number(g)
    dirs: tuple[tuple[int, ...], ...] = ()
    if sigma >= 1:
        dirs = tuple(tuple(d) for d in directories(g))
    witness = None
    if sigma_wit is not None:
        witness = (sigma_wit[0], tuple(sigma_wit[1]))
    return AnalysisReport(
        independence_number=alpha,
        alpha_witness=tuple(alpha_wit),
        star_number=sigma,
        sigma_witness=witness,
        directories=dirs,
        is_connected=is_connected(g),
    )
