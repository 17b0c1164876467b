"""Finitely presented countable graphs as pure adjacency oracles.

A presentation is an adjacency predicate on the naturals together with a
name and parameters.  Truncation to the first n naturals produces a finite
Graph, and all questions about the infinite object are answered through
bounded witness search over truncations, except where a family supplies a
finite refutation certificate (then absence is proven, not just observed).

Built-in families:

    rado_bit                  i<j adjacent iff bit i of j is 1
    rs:n                      independent block a_0..a_{n-1} plus one
                              infinite clique split into n parts, part j
                              attached to every a_i except a_j; clique
                              vertices are enumerated round robin
    k_omega / null (i_omega)  complete / edgeless
    i_omega_k_omega           disjoint union of countably many infinite
                              cliques (lex product of null over k_omega)
    union_cliques_complement  complement of the disjoint union of cliques
                              of sizes 1, 2, 3, ...
    two_way_path              zig-zag enumeration 0, 1, -1, 2, -2, ...
    complement_of:<spec>      complement of another presentation
    lex:<spec>,<spec>         lexicographic product, diagonal enumeration
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from .errors import BadParams, BudgetExhausted
from .graphs import Graph, complement as graph_complement

__all__ = [
    "Presentation",
    "make_presentation",
    "parse_spec",
    "truncate",
    "WitnessResult",
    "extension_witness",
    "PropertyReport",
    "check_property_bounded",
    "Requirement",
    "ScheduleEntry",
    "RadoConstruction",
    "spanning_rado",
    "ClassificationReport",
    "classify_mb",
    "FAMILIES",
]


class Presentation:
    """A countable graph given by a symmetric irreflexive oracle on naturals."""

    __slots__ = ("name", "params", "metadata", "_adj", "_refuter")

    def __init__(
        self,
        name: str,
        adjacency: Callable[[int, int], bool],
        params: tuple = (),
        metadata: dict | None = None,
        refuter: Callable[[tuple, tuple], str | None] | None = None,
    ):
        self.name = name
        self.params = params
        self.metadata = metadata or {}
        self._adj = adjacency
        self._refuter = refuter

    def adjacent(self, i: int, j: int) -> bool:
        if i < 0 or j < 0:
            raise ValueError("presentation vertices are naturals")
        if i == j:
            return False
        if i > j:
            i, j = j, i
        return bool(self._adj(i, j))

    def refute(self, a: Iterable[int], b: Iterable[int]) -> str | None:
        """A finite certificate that no (a, b) witness exists, when known."""
        if self._refuter is None:
            return None
        return self._refuter(tuple(sorted(a)), tuple(sorted(b)))

    def spec_string(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(
            p.spec_string() if isinstance(p, Presentation) else str(p)
            for p in self.params
        )
        return f"{self.name}:{inner}"

    def describe(self) -> dict:
        return {"spec": self.spec_string(), "metadata": dict(self.metadata)}

    def __repr__(self) -> str:
        return f"Presentation({self.spec_string()!r})"


def truncate(p: Presentation, n: int) -> Graph:
    """Induced graph on the first n enumerated vertices."""
    if n < 0:
        raise ValueError("truncation size must be nonnegative")
    edges = [(i, j) for j in range(n) for i in range(j) if p._adj(i, j)]
    return Graph(n, edges)


# --- family constructors ----------------------------------------------------


def _diag_pair(k: int) -> tuple[int, int]:
    # Cantor enumeration of N x N by diagonals; outer index is d - j.
    d = (math.isqrt(8 * k + 1) - 1) // 2
    j = k - d * (d + 1) // 2
    return d - j, j


def _rado_bit() -> Presentation:
    return Presentation(
        "rado_bit",
        lambda i, j: bool(j >> i & 1),
        metadata={
            "declared": [
                "every finite vertex set has a cone",
                "every finite vertex set has a co-cone",
            ]
        },
    )


def _rs(n: int) -> Presentation:
    if n < 3:
        raise BadParams(f"rs family needs n >= 3, got {n}")

    def adj(i: int, j: int) -> bool:
        # i < j.  Vertices 0..n-1 are the independent block; vertex n+t is
        # the clique member in part t mod n.
        if j < n:
            return False
        if i < n:
            return (j - n) % n != i
        return True

    def refuter(a: tuple, b: tuple) -> str | None:
        aset, bset = set(a), set(b)
        if set(range(n)) <= aset:
            return (
                "cone refuted: no vertex is adjacent to all of the "
                f"{n} independent block vertices"
            )
        b_parts = {(v - n) % n for v in bset if v >= n}
        if len(b_parts) >= 2:
            return "co-cone refuted: clique vertices from distinct parts share no non-neighbour"
        if len(b_parts) == 1:
            part = next(iter(b_parts))
            # The only candidate non-neighbour of a clique part is its block vertex.
            if part in aset or part in bset:
                return "co-cone refuted: the only candidate is excluded"
            if any(v < n for v in aset):
                return "co-cone refuted: the only candidate is a block vertex, non-adjacent to block vertices"
            if any(v >= n and (v - n) % n == part for v in aset):
                return "co-cone refuted: the only candidate misses part of the cone side"
            return None
        if not b_parts and set(range(n)) <= bset:
            return "co-cone refuted: every candidate co-cone over the block is a block vertex already listed"
        return None

    return Presentation("rs", adj, params=(n,), refuter=refuter)


def _null() -> Presentation:
    def refuter(a: tuple, b: tuple) -> str | None:
        if a:
            return "cone refuted: the graph has no edges"
        return None

    return Presentation("null", lambda i, j: False, refuter=refuter)


def _k_omega() -> Presentation:
    def refuter(a: tuple, b: tuple) -> str | None:
        if b:
            return "co-cone refuted: the graph is complete"
        return None

    return Presentation("k_omega", lambda i, j: True, refuter=refuter)


def _two_way_path() -> Presentation:
    def z(k: int) -> int:
        if k == 0:
            return 0
        return (k + 1) // 2 if k % 2 else -(k // 2)

    def adj(i: int, j: int) -> bool:
        return abs(z(i) - z(j)) == 1

    def index_of(value: int) -> int:
        return 0 if value == 0 else (2 * value - 1 if value > 0 else -2 * value)

    def refuter(a: tuple, b: tuple) -> str | None:
        if len(a) >= 3:
            return "cone refuted: path vertices have degree 2"
        if not a:
            return None
        za = [z(v) for v in a]
        if len(a) == 2:
            if abs(za[0] - za[1]) != 2:
                return "cone refuted: only integer pairs at distance 2 share a neighbour"
            cands = [(za[0] + za[1]) // 2]
        else:
            cands = [za[0] - 1, za[0] + 1]
        excluded = set(a) | set(b)
        zb = [z(v) for v in b]
        for c in cands:
            if index_of(c) in excluded:
                continue
            if all(abs(c - w) != 1 for w in zb):
                return None
        return "cone refuted: every candidate neighbour is excluded or adjacent to the co-cone side"

    return Presentation("two_way_path", adj, refuter=refuter)


def _group_of(k: int) -> int:
    # Groups of sizes 1, 2, 3, ...; group m covers [m(m+1)/2, (m+1)(m+2)/2).
    m = (math.isqrt(8 * k + 1) - 1) // 2
    while m * (m + 1) // 2 > k:
        m -= 1
    while (m + 1) * (m + 2) // 2 <= k:
        m += 1
    return m


def _union_cliques_complement() -> Presentation:
    def adj(i: int, j: int) -> bool:
        return _group_of(i) != _group_of(j)

    def refuter(a: tuple, b: tuple) -> str | None:
        groups = {_group_of(v) for v in b}
        if len(groups) >= 2:
            return "co-cone refuted: vertices of distinct groups have no common non-neighbour"
        if len(groups) == 1:
            g = next(iter(groups))
            if any(_group_of(v) == g for v in a):
                return "co-cone refuted: a cone-side vertex sits in the same group"
            start = g * (g + 1) // 2
            members = set(range(start, start + g + 1))
            if not members - set(a) - set(b):
                return "co-cone refuted: the group is exhausted"
        return None

    return Presentation(
        "union_cliques_complement",
        adj,
        metadata={"declared": ["every finite vertex set has a cone"]},
        refuter=refuter,
    )


def _lex(p: Presentation, q: Presentation) -> Presentation:
    def adj(i: int, j: int) -> bool:
        o1, i1 = _diag_pair(i)
        o2, i2 = _diag_pair(j)
        if o1 != o2:
            return p.adjacent(o1, o2)
        return q.adjacent(i1, i2)

    return Presentation("lex", adj, params=(p, q))


def _i_omega_k_omega() -> Presentation:
    base = _lex(_null(), _k_omega())

    def refuter(a: tuple, b: tuple) -> str | None:
        outers = {_diag_pair(v)[0] for v in a}
        if len(outers) >= 2:
            return "cone refuted: vertices of distinct cliques have no common neighbour"
        return None

    return Presentation("i_omega_k_omega", base._adj, refuter=refuter)


def _complement_of(p: Presentation) -> Presentation:
    def adj(i: int, j: int) -> bool:
        return not p.adjacent(i, j)

    def refuter(a: tuple, b: tuple) -> str | None:
        return p.refute(b, a)

    return Presentation("complement_of", adj, params=(p,), refuter=refuter)


_SIMPLE_FAMILIES: dict[str, Callable[[], Presentation]] = {
    "rado_bit": _rado_bit,
    "null": _null,
    "i_omega": _null,
    "k_omega": _k_omega,
    "i_omega_k_omega": _i_omega_k_omega,
    "union_cliques_complement": _union_cliques_complement,
    "two_way_path": _two_way_path,
}

FAMILIES = tuple(sorted(_SIMPLE_FAMILIES)) + ("rs", "complement_of", "lex")


def make_presentation(family: str, *params) -> Presentation:
    """Build a named family; params are ints or sub-presentations."""
    if family in _SIMPLE_FAMILIES:
        if params:
            raise BadParams(f"family {family!r} takes no parameters")
        return _SIMPLE_FAMILIES[family]()
    if family == "rs":
        if len(params) != 1 or not isinstance(params[0], int):
            raise BadParams("rs takes a single integer parameter")
        return _rs(params[0])
    if family == "complement_of":
        if len(params) != 1 or not isinstance(params[0], Presentation):
            raise BadParams("complement_of takes a single presentation")
        return _complement_of(params[0])
    if family == "lex":
        if len(params) != 2 or not all(isinstance(p, Presentation) for p in params):
            raise BadParams("lex takes two presentations")
        return _lex(*params)
    raise BadParams(f"unknown family {family!r}")


def _split_args(text: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise BadParams(f"unbalanced parentheses in {text!r}")
        current.append(ch)
    parts.append("".join(current))
    return parts


def parse_spec(text: str) -> Presentation:
    """Parse 'family', 'family:args' or 'family(args)' with nesting."""
    text = text.strip()
    if not text:
        raise BadParams("empty presentation spec")
    if ":" in text and (text.index(":") < text.find("(") or "(" not in text):
        name, _, rest = text.partition(":")
        args = _split_args(rest)
    elif text.endswith(")") and "(" in text:
        name, _, rest = text.partition("(")
        args = _split_args(rest[:-1])
    else:
        name, args = text, []
    name = name.strip()
    parsed = []
    for arg in args:
        arg = arg.strip()
        if not arg:
            raise BadParams(f"empty argument in spec {text!r}")
        try:
            parsed.append(int(arg))
        except ValueError:
            parsed.append(parse_spec(arg))
    return make_presentation(name, *parsed)


# --- bounded witness search --------------------------------------------------


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of a bounded cone/co-cone search.

    status 'found' carries the least witness vertex; 'proven_absent' means a
    family certificate shows no witness exists at any index; 'exhausted'
    only means none exists up to the budget.
    """

    status: str
    vertex: int | None = None
    certificate: str | None = None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "vertex": self.vertex,
            "certificate": self.certificate,
        }


def extension_witness(
    p: Presentation, a: Iterable[int], b: Iterable[int], budget: int
) -> WitnessResult:
    """Least vertex <= budget adjacent to all of a and none of b.

    The budget bounds the highest vertex index examined.
    """
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    aset = sorted(set(a))
    bset = sorted(set(b))
    if set(aset) & set(bset):
        raise ValueError("cone and co-cone sides must be disjoint")
    if any(v < 0 for v in aset + bset):
        raise ValueError("presentation vertices are naturals")
    cert = p.refute(aset, bset)
    if cert is not None:
        return WitnessResult("proven_absent", certificate=cert)
    excluded = set(aset) | set(bset)
    for v in range(budget + 1):
        if v in excluded:
            continue
        if all(p.adjacent(v, x) for x in aset) and not any(
            p.adjacent(v, y) for y in bset
        ):
            return WitnessResult("found", vertex=v)
    return WitnessResult("exhausted")


@dataclass(frozen=True)
class PropertyReport:
    """Bounded check that small vertex sets have cones (or co-cones)."""

    property: str
    set_size: int
    base: int
    budget: int
    checked: int
    failures: tuple[tuple[tuple[int, ...], str, str | None], ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "set_size": self.set_size,
            "base": self.base,
            "budget": self.budget,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [
                {"subset": list(s), "status": status, "certificate": cert}
                for s, status, cert in self.failures
            ],
        }


def check_property_bounded(
    p: Presentation, prop: str, set_size: int, base: int, budget: int
) -> PropertyReport:
    """Probe every nonempty subset of size <= set_size of the first base
    vertices for a cone ('cone') or co-cone ('cocone') within the budget."""
    if prop not in ("cone", "cocone"):
        raise ValueError("property must be 'cone' or 'cocone'")
    if not set_size <= base <= budget:
        raise ValueError("need set_size <= base <= budget")
    failures = []
    checked = 0
    for size in range(1, set_size + 1):
        for subset in combinations(range(base), size):
            checked += 1
            if prop == "cone":
                result = extension_witness(p, subset, (), budget)
            else:
                result = extension_witness(p, (), subset, budget)
            if result.status != "found":
                failures.append((subset, result.status, result.certificate))
    return PropertyReport(
        property=prop,
        set_size=set_size,
        base=base,
        budget=budget,
        checked=checked,
        failures=tuple(failures),
    )


# --- greedy spanning construction with the Rado extension schedule ----------


@dataclass(frozen=True)
class Requirement:
    cone_over: tuple[int, ...]
    cocone_over: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"cone_over": list(self.cone_over), "cocone_over": list(self.cocone_over)}


@dataclass(frozen=True)
class ScheduleEntry:
    requirement: Requirement
    witness: int

    def to_dict(self) -> dict:
        return {"requirement": self.requirement.to_dict(), "witness": self.witness}


@dataclass(frozen=True)
class RadoConstruction:
    """A spanning subgraph selection satisfying scheduled (A, B) requirements.

    selected_edges is a subset of the host edges over the placed vertices;
    each scheduled requirement's witness is selected-adjacent to all of its
    A side and (because only witness-to-A edges are ever added) to none of
    its B side.
    """

    host_spec: str
    target: int
    budget: int
    placed: tuple[int, ...]
    selected_edges: tuple[tuple[int, int], ...]
    schedule: tuple[ScheduleEntry, ...]

    def verify(self, p: Presentation) -> list[str]:
        """Replay every invariant; an empty list means the construction holds."""
        problems = []
        placed_set = set(self.placed)
        if len(placed_set) != len(self.placed):
            problems.append("placed vertices are not distinct")
        if not set(range(self.target)) <= placed_set:
            problems.append(f"vertices below {self.target} are not all placed")
        edge_set = set()
        for u, v in self.selected_edges:
            if u not in placed_set or v not in placed_set:
                problems.append(f"selected edge ({u},{v}) touches an unplaced vertex")
            if not p.adjacent(u, v):
                problems.append(f"selected edge ({u},{v}) is not a host edge")
            edge_set.add((min(u, v), max(u, v)))
        for entry in self.schedule:
            w = entry.witness
            if w not in placed_set:
                problems.append(f"witness {w} was never placed")
            for x in entry.requirement.cone_over:
                if (min(w, x), max(w, x)) not in edge_set:
                    problems.append(
                        f"witness {w} is not selected-adjacent to {x} in {entry.requirement}"
                    )
            for y in entry.requirement.cocone_over:
                if (min(w, y), max(w, y)) in edge_set:
                    problems.append(
                        f"witness {w} is selected-adjacent to {y} in {entry.requirement}"
                    )
        return problems

    def to_dict(self) -> dict:
        return {
            "host": self.host_spec,
            "target": self.target,
            "budget": self.budget,
            "placed": list(self.placed),
            "selected_edges": [list(e) for e in self.selected_edges],
            "schedule": [s.to_dict() for s in self.schedule],
        }


def _requirement_batch(
    placed: list[int], t: int, cap: int
) -> list[Requirement]:
    """All requirements whose latest member is placed[t], by size then lex."""
    newest = placed[t]
    older = placed[:t]
    batch = []
    for size in range(1, cap + 1):
        for rest in combinations(sorted(older), size - 1):
            support = tuple(sorted(rest + (newest,)))
            for abits in range(1 << size):
                aside = tuple(v for i, v in enumerate(support) if abits >> i & 1)
                bside = tuple(v for i, v in enumerate(support) if not abits >> i & 1)
                batch.append(Requirement(aside, bside))
    batch.sort(key=lambda r: (len(r.cone_over) + len(r.cocone_over), r.cone_over, r.cocone_over))
    return batch


def spanning_rado(
    p: Presentation, n: int, budget: int, max_requirement_size: int = 4
) -> RadoConstruction:
    """Greedy spanning selection: place every host vertex below n while
    serving (A, B) requirements over the placed vertices in a dovetailed
    order.

    Requirement witnesses are fresh host cones over A: the least unplaced
    vertex adjacent to all of A.  Only witness-to-A edges enter the
    selection, so B sides hold automatically and permanently.  Raises
    BudgetExhausted naming the first requirement whose cone search is
    refuted or runs out of budget.
    """
    placed: list[int] = []
    placed_set: set[int] = set()
    selected: list[tuple[int, int]] = []
    schedule: list[ScheduleEntry] = []
    batches: list[list[Requirement]] = []
    cursor_batch = 0
    cursor_item = 0

    def place(v: int) -> None:
        placed.append(v)
        placed_set.add(v)

    def next_requirement() -> Requirement | None:
        nonlocal cursor_batch, cursor_item
        while True:
            while len(batches) <= cursor_batch and len(batches) < len(placed):
                batches.append(
                    _requirement_batch(placed, len(batches), max_requirement_size)
                )
            if cursor_batch >= len(batches):
                return None
            batch = batches[cursor_batch]
            if cursor_item >= len(batch):
                cursor_batch += 1
                cursor_item = 0
                continue
            req = batch[cursor_item]
            cursor_item += 1
            return req

    def fresh_cone(req: Requirement) -> int:
        # Freshness is enforced by exclusion rather than by augmenting A
        # with previously found cones: the least cone over an augmented set
        # outgrows every budget on bit-style presentations.
        cert = p.refute(req.cone_over, ())
        if cert is not None:
            raise BudgetExhausted(req, cert)
        aset = set(req.cone_over)
        for v in range(budget + 1):
            if v in placed_set or v in aset:
                continue
            if all(p.adjacent(v, x) for x in req.cone_over):
                return v
        raise BudgetExhausted(
            req, f"no fresh cone over {req.cone_over} within budget {budget}"
        )

    while not placed_set >= set(range(n)):
        for v in range(n):
            if v not in placed_set:
                place(v)
                break
        req = next_requirement()
        if req is not None:
            w = fresh_cone(req)
            place(w)
            for x in req.cone_over:
                selected.append((min(w, x), max(w, x)))
            schedule.append(ScheduleEntry(req, w))

    return RadoConstruction(
        host_spec=p.spec_string(),
        target=n,
        budget=budget,
        placed=tuple(placed),
        selected_edges=tuple(sorted(set(selected))),
        schedule=tuple(schedule),
    )


# --- bimorphism-class probe ---------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    """Evidence-graded verdict; never a proof about the infinite object."""

    verdict: str
    budget: int
    evidence: dict

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "budget": self.budget, "evidence": self.evidence}


def _clique_components(g: Graph) -> tuple[bool, int, int, list[int]] | None:
    """(all components cliques, count, max size, per-vertex component size)."""
    if g.n == 0:
        return None
    seen = 0
    count = 0
    max_size = 0
    all_cliques = True
    sizes = [0] * g.n
    full = (1 << g.n) - 1
    while seen != full:
        start = (~seen & full) & -(~seen & full)
        comp = start
        frontier = start
        while frontier:
            grow = 0
            for v in range(g.n):
                if frontier >> v & 1:
                    grow |= g.masks[v]
            frontier = grow & ~comp
            comp |= grow
        size = comp.bit_count()
        count += 1
        max_size = max(max_size, size)
        for v in range(g.n):
            if comp >> v & 1:
                sizes[v] = size
                if (g.masks[v] & comp).bit_count() != size - 1:
                    all_cliques = False
        seen |= comp
    return all_cliques, count, max_size, sizes


def classify_mb(p: Presentation, budget: int) -> ClassificationReport:
    """Probe truncations for the bimorphism class of the presentation.

    Checks, in order: complete/edgeless; growing disjoint unions of cliques
    (and the complement form); stabilizing degrees or codegrees, which
    contradict the infinite degree and codegree every such graph must have;
    finally bounded cone and co-cone probes on the presentation and its
    complement.  Everything is evidence at the stated budget.
    """
    if budget < 32:
        raise ValueError("classification needs a budget of at least 32")
    ladder = sorted({max(8, budget // 8), budget // 4, budget // 2, budget})
    truncations = {s: truncate(p, s) for s in ladder}
    top = truncations[budget]
    evidence: dict = {"ladder": ladder}

    edges = top.edge_count()
    if edges == budget * (budget - 1) // 2:
        evidence["complete_at"] = budget
        return ClassificationReport("k_omega", budget, evidence)
    if edges == 0:
        evidence["edgeless_at"] = budget
        return ClassificationReport("null", budget, evidence)

    def growing_cliques(graphs: list[Graph]) -> dict | None:
        counts = []
        maxima = []
        by_vertex = []
        for g in graphs:
            stats = _clique_components(g)
            if stats is None or not stats[0]:
                return None
            counts.append(stats[1])
            maxima.append(stats[2])
            by_vertex.append(stats[3])
        if not all(c2 > c1 for c1, c2 in zip(counts, counts[1:])):
            return None
        # Every clique already present must keep growing; cliques of fixed
        # size are evidence for a different shape entirely.
        for earlier, later in zip(by_vertex, by_vertex[1:]):
            if any(later[v] <= earlier[v] for v in range(len(earlier))):
                return None
        return {"component_counts": counts, "max_component_sizes": maxima}

    direct = growing_cliques([truncations[s] for s in ladder])
    if direct is not None:
        evidence["clique_components"] = direct
        return ClassificationReport("i_omega_of_k_omega", budget, evidence)
    complemented = growing_cliques([graph_complement(truncations[s]) for s in ladder])
    if complemented is not None:
        evidence["complement_clique_components"] = complemented
        return ClassificationReport("k_omega_of_i_omega", budget, evidence)

    # Stabilization must persist over the last three rungs: a single equal
    # pair can be a resonance between the rung spacing and the family (the
    # complement of the bit graph repeats a degree across one doubling).
    probe_vertices = range(min(8, ladder[0]))
    tail = ladder[-3:]
    for v in probe_vertices:
        degrees = [truncations[s].degree(v) for s in tail]
        if len(set(degrees)) == 1:
            evidence["stabilized"] = {"vertex": v, "kind": "degree", "value": degrees[-1]}
            return ClassificationReport("not_mb_evidence", budget, evidence)
        codegrees = [s - 1 - d for s, d in zip(tail, degrees)]
        if len(set(codegrees)) == 1:
            evidence["stabilized"] = {
                "vertex": v,
                "kind": "codegree",
                "value": codegrees[-1],
            }
            return ClassificationReport("not_mb_evidence", budget, evidence)

    cone_probe = check_property_bounded(p, "cone", 3, 8, budget)
    cocone_probe = check_property_bounded(p, "cocone", 3, 8, budget)
    evidence["cone_probe"] = cone_probe.to_dict()
    evidence["cocone_probe"] = cocone_probe.to_dict()
    if cone_probe.passed and cocone_probe.passed:
        return ClassificationReport("rado", budget, evidence)
    return ClassificationReport("unknown", budget, evidence)
