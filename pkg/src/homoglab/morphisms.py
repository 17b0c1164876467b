"""Backtracking search for graph morphisms, canonical forms, enumeration.

The search assigns source vertices in index order and tries targets in
ascending order, so the first complete assignment is the lexicographically
least total map.  Candidate targets are filtered through neighbourhood
masks of the already assigned vertices, which keeps the search cheap at the
orders this package works with.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import OrderTooLarge, SeedNotLocalMorphism
from .graphs import Graph, _iter_bits

__all__ = [
    "PartialMap",
    "MorphismConstraints",
    "KINDS",
    "is_local_homomorphism",
    "is_local_monomorphism",
    "is_local_isomorphism",
    "search_morphism",
    "validate_total_map",
    "extends_in",
    "canonical_code",
    "enumerate_graphs",
]

KINDS = "HMEBAI"


@dataclass(frozen=True)
class PartialMap:
    """A finite partial vertex map given as (source, target) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs=()):
        normalized = tuple(sorted((int(u), int(v)) for u, v in pairs))
        sources = [u for u, _ in normalized]
        if len(set(sources)) != len(sources):
            raise ValueError("duplicate source vertex in partial map")
        object.__setattr__(self, "pairs", normalized)

    @classmethod
    def of(cls, mapping) -> "PartialMap":
        if isinstance(mapping, dict):
            return cls(tuple(mapping.items()))
        return cls(tuple(mapping))

    def mapping(self) -> dict[int, int]:
        return dict(self.pairs)

    def sources(self) -> list[int]:
        return [u for u, _ in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)


EMPTY_MAP = PartialMap()


@dataclass(frozen=True)
class MorphismConstraints:
    injective: bool = False
    surjective: bool = False
    respect_nonedges: bool = False


def is_local_homomorphism(a: Graph, b: Graph, f: PartialMap) -> bool:
    """Every edge of the induced domain maps to an edge of b."""
    pairs = f.pairs
    for i, (u, fu) in enumerate(pairs):
        for v, fv in pairs[i + 1 :]:
            if a.has_edge(u, v) and not b.has_edge(fu, fv):
                return False
    return True


def is_local_monomorphism(a: Graph, b: Graph, f: PartialMap) -> bool:
    targets = [v for _, v in f.pairs]
    if len(set(targets)) != len(targets):
        return False
    return is_local_homomorphism(a, b, f)


def is_local_isomorphism(a: Graph, b: Graph, f: PartialMap) -> bool:
    if not is_local_monomorphism(a, b, f):
        return False
    pairs = f.pairs
    for i, (u, fu) in enumerate(pairs):
        for v, fv in pairs[i + 1 :]:
            if not a.has_edge(u, v) and b.has_edge(fu, fv):
                return False
    return True


def validate_total_map(
    a: Graph, b: Graph, f: list[int], constraints: MorphismConstraints
) -> bool:
    """Independent check of a returned witness against its constraints."""
    if len(f) != a.n or any(not 0 <= t < b.n for t in f):
        return False
    for u, v in a.edges():
        if not b.has_edge(f[u], f[v]):
            return False
    if constraints.injective and len(set(f)) != len(f):
        return False
    if constraints.surjective and len(set(f)) != b.n:
        return False
    if constraints.respect_nonedges:
        for u in range(a.n):
            for v in range(u + 1, a.n):
                if not a.has_edge(u, v):
                    if f[u] == f[v] or b.has_edge(f[u], f[v]):
                        return False
    return True


def search_morphism(
    a: Graph,
    b: Graph,
    seed: PartialMap | None = None,
    constraints: MorphismConstraints | None = None,
) -> list[int] | None:
    """Least total map a -> b extending seed under the given constraints.

    Returns None when no such map exists.  Maps are compared as tuples
    (f(0), ..., f(n-1)).
    """
    c = constraints or MorphismConstraints()
    n, m = a.n, b.n
    if n == 0:
        return [] if (not c.surjective or m == 0) else None
    if m == 0:
        return None

    amask = a.masks
    bmask = b.masks
    full_b = (1 << m) - 1
    f = [-1] * n
    assigned_mask = 0
    used = [0] * m
    covered = 0

    def compatible(v: int, t: int) -> bool:
        if c.injective and used[t]:
            return False
        for u in _iter_bits(amask[v] & assigned_mask):
            if not bmask[f[u]] >> t & 1:
                return False
        if c.respect_nonedges:
            nonadj = assigned_mask & ~amask[v] & ~(1 << v)
            for u in _iter_bits(nonadj):
                if f[u] == t or bmask[f[u]] >> t & 1:
                    return False
        return True

    seed = seed or EMPTY_MAP
    for u, t in seed.pairs:
        if not 0 <= u < n or not 0 <= t < m:
            raise ValueError(f"seed pair ({u},{t}) out of range")
    for u, t in seed.pairs:
        if not compatible(u, t):
            return None
        f[u] = t
        assigned_mask |= 1 << u
        if not used[t]:
            covered += 1
        used[t] += 1

    order = [v for v in range(n) if f[v] < 0]
    total = len(order)

    def dfs(idx: int) -> bool:
        nonlocal assigned_mask, covered
        if idx == total:
            return not c.surjective or covered == m
        if c.surjective and total - idx < m - covered:
            return False
        v = order[idx]
        allowed = full_b
        for u in _iter_bits(amask[v] & assigned_mask):
            allowed &= bmask[f[u]]
        for t in _iter_bits(allowed):
            if not compatible(v, t):
                continue
            f[v] = t
            assigned_mask |= 1 << v
            if not used[t]:
                covered += 1
            used[t] += 1
            if dfs(idx + 1):
                return True
            used[t] -= 1
            if not used[t]:
                covered -= 1
            assigned_mask ^= 1 << v
            f[v] = -1
        return False

    if dfs(0):
        assert validate_total_map(a, b, f, c), "search produced an invalid witness"
        return f
    return None


# Seed requirements per target kind.  A map extending to an injective
# endomorphism must itself be injective; one extending to an embedding must
# be a local isomorphism.  Surjective endomorphisms of finite graphs are
# bijections, so kind E searches with the same constraints as A.
_KIND_SEED_CHECK = {
    "H": is_local_homomorphism,
    "E": is_local_homomorphism,
    "M": is_local_monomorphism,
    "B": is_local_monomorphism,
    "A": is_local_monomorphism,
    "I": is_local_isomorphism,
}

_KIND_CONSTRAINTS = {
    "H": MorphismConstraints(),
    "M": MorphismConstraints(injective=True),
    "E": MorphismConstraints(injective=True, surjective=True, respect_nonedges=True),
    "B": MorphismConstraints(injective=True, surjective=True, respect_nonedges=True),
    "A": MorphismConstraints(injective=True, surjective=True, respect_nonedges=True),
    "I": MorphismConstraints(injective=True, respect_nonedges=True),
}


def extends_in(g: Graph, f: PartialMap, kind: str) -> list[int] | None:
    """Total endomorphism of g of the given kind extending f, or None.

    Kinds: H any endomorphism, M injective, E surjective, B bijective,
    A automorphism, I embedding of g into itself.  On finite graphs
    injective, surjective and bijective endomorphisms all coincide with
    automorphisms, so E and B run the A search.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS!r}, got {kind!r}")
    for u, t in f.pairs:
        if not 0 <= u < g.n or not 0 <= t < g.n:
            raise SeedNotLocalMorphism(f"seed pair ({u},{t}) out of range")
    if not _KIND_SEED_CHECK[kind](g, g, f):
        raise SeedNotLocalMorphism(
            f"seed is not a local morphism of the kind required for {kind}"
        )
    return search_morphism(g, g, f, _KIND_CONSTRAINTS[kind])


# --- canonical forms -------------------------------------------------------

_CODE_CACHE: dict[tuple[int, tuple[int, ...]], bytes] = {}


def canonical_code(g: Graph, max_order: int = 10) -> bytes:
    """Complete isomorphism invariant: the minimum adjacency column string.

    Columns are the bit strings b(p0,pk)...b(p(k-1),pk) over all vertex
    orderings p, minimized lexicographically.  Exact and permutation
    invariant; exponential, hence the order cap.
    """
    n = g.n
    if n > max_order:
        raise OrderTooLarge(f"canonical code capped at order {max_order}, got {n}")
    key = (n, g.masks)
    hit = _CODE_CACHE.get(key)
    if hit is not None:
        return hit

    adj = g.masks
    best: list[int] | None = None
    perm: list[int] = []
    prefix: list[int] = []

    def prefix_beats_best(col: int) -> bool:
        # True when prefix + [col] is lexicographically greater than best.
        k = len(prefix)
        for i in range(k):
            if prefix[i] != best[i]:
                return prefix[i] > best[i]
        return col > best[k]

    def dfs(used: int) -> None:
        nonlocal best
        k = len(perm)
        if k == n:
            if best is None or prefix < best:
                best = prefix.copy()
            return
        cands = []
        for u in range(n):
            if used >> u & 1:
                continue
            col = 0
            row = adj[u]
            for p in perm:
                col = col << 1 | (row >> p & 1)
            cands.append((col, u))
        cands.sort()
        for col, u in cands:
            if best is not None and prefix_beats_best(col):
                break
            perm.append(u)
            prefix.append(col)
            dfs(used | 1 << u)
            perm.pop()
            prefix.pop()

    dfs(0)
    cols = best if best is not None else []
    code = bytes([n]) + b"".join(c.to_bytes(2, "big") for c in cols)
    _CODE_CACHE[key] = code
    return code


# --- exhaustive enumeration up to isomorphism ------------------------------

_REPS_CACHE: dict[int, tuple[Graph, ...]] = {}


def _extend(g: Graph, nbr_mask: int) -> Graph:
    masks = list(g.masks) + [nbr_mask]
    new = g.n
    for v in _iter_bits(nbr_mask):
        masks[v] |= 1 << new
    return Graph.from_masks(masks)


def _reps(n: int) -> tuple[Graph, ...]:
    if n in _REPS_CACHE:
        return _REPS_CACHE[n]
    if n == 1:
        reps = (Graph(1),)
    else:
        seen: dict[bytes, Graph] = {}
        for g in _reps(n - 1):
            for mask in range(1 << (n - 1)):
                h = _extend(g, mask)
                code = canonical_code(h, max_order=n)
                if code not in seen:
                    seen[code] = h
        reps = tuple(h for _, h in sorted(seen.items()))
    _REPS_CACHE[n] = reps
    return reps


def enumerate_graphs(n: int, max_order: int = 8) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex graphs.

    Built by one-vertex extensions of the (n-1)-vertex representatives,
    deduplicated through canonical codes; every n-vertex graph arises this
    way since deleting a vertex lands in some (n-1)-vertex class.  Output
    is ordered by canonical code.
    """
    if n < 1:
        raise ValueError("enumeration starts at order 1")
    if n > max_order:
        raise OrderTooLarge(f"enumeration capped at order {max_order}, got {n}")
    yield from _reps(n)
