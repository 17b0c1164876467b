"""Ages, the kk/okk partition, and XY-homogeneity deciders.

Two independent routes decide HH-homogeneity of a finite graph:

* decide_xy runs extension search over local morphisms directly.  For
  target kinds H and M it uses one-point checks: a graph is HH exactly when
  every local homomorphism admits an image for one more vertex, and for
  injective targets the analogous statement holds over local monomorphisms
  (partial extensions stay inside the checked class, so the stepwise
  argument closes).
* decide_hh_conditions tests the combinatorial characterization: no age
  class may have both a coned and a cone-free embedding, and the coned part
  of the age must be upward closed under the surjective-homomorphism order.

Agreement of the two on every small graph is part of the acceptance suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import OrderTooLarge
from .graphs import Graph, _common_mask, _iter_bits
from .morphisms import (
    KINDS,
    MorphismConstraints,
    PartialMap,
    canonical_code,
    extends_in,
    is_local_isomorphism,
    search_morphism,
)

__all__ = [
    "AgeClass",
    "AgePartition",
    "Conflict",
    "HomogReport",
    "age",
    "kk_okk",
    "preceq",
    "decide_xy",
    "decide_hh_conditions",
]

X_KINDS = "HMI"


@dataclass(frozen=True)
class AgeClass:
    """One isomorphism type of induced subgraph, with its embeddings."""

    representative: Graph
    code: bytes
    embeddings: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Conflict:
    code: bytes
    coned_embedding: tuple[int, ...]
    cone_vertex: int
    coneless_embedding: tuple[int, ...]


@dataclass(frozen=True)
class AgePartition:
    """The kk/okk split of an age, with explicit conflict witnesses.

    kk holds the codes of classes with at least one coned embedding, okk
    those with at least one embedding admitting no cone; the two always
    cover the age and conflicts lists their intersection.
    """

    kk: frozenset[bytes]
    okk: frozenset[bytes]
    conflicts: tuple[Conflict, ...]
    classes: tuple[AgeClass, ...]


@dataclass(frozen=True)
class HomogReport:
    verdict: bool
    x_kind: str
    y_kind: str
    method: str
    counterexample: dict | None = None
    note: str | None = None

    def to_dict(self) -> dict:
        ce = None
        if self.counterexample is not None:
            ce = dict(self.counterexample)
            if "code" in ce:
                ce["code"] = ce["code"].hex()
            for key in ("upper_code", "lower_code"):
                if key in ce:
                    ce[key] = ce[key].hex()
        return {
            "verdict": self.verdict,
            "x_kind": self.x_kind,
            "y_kind": self.y_kind,
            "method": self.method,
            "counterexample": ce,
            "note": self.note,
        }


_SIG_CODE_CACHE: dict[tuple[int, tuple[int, ...]], bytes] = {}


def _induced_signature(g: Graph, vs: tuple[int, ...]) -> tuple[int, ...]:
    rows = []
    for v in vs:
        row = 0
        mask = g.masks[v]
        for i, u in enumerate(vs):
            if mask >> u & 1:
                row |= 1 << i
        rows.append(row)
    return tuple(rows)


_CODE_LIMIT = 10


def _scan_classes(g: Graph, k: int) -> list[dict]:
    """Group all induced subgraphs of size <= k by isomorphism type."""
    if k > g.n:
        raise OrderTooLarge(f"age size {k} exceeds order {g.n}")
    if k > _CODE_LIMIT:
        raise OrderTooLarge(f"age computation capped at size {_CODE_LIMIT}, got {k}")
    classes: dict[bytes, dict] = {}
    for size in range(1, k + 1):
        for comb in combinations(range(g.n), size):
            sig = _induced_signature(g, comb)
            key = (size, sig)
            code = _SIG_CODE_CACHE.get(key)
            rep = None
            if code is None:
                rep = Graph.from_masks(sig)
                code = canonical_code(rep)
                _SIG_CODE_CACHE[key] = code
            cls = classes.get(code)
            if cls is None:
                if rep is None:
                    rep = Graph.from_masks(sig)
                cls = {
                    "representative": rep,
                    "code": code,
                    "embeddings": [],
                    "coned": None,
                    "coneless": None,
                }
                classes[code] = cls
            cls["embeddings"].append(comb)
            cone_mask = _common_mask(g.masks, sum(1 << v for v in comb), g.n)
            if cone_mask:
                if cls["coned"] is None:
                    cls["coned"] = (comb, next(_iter_bits(cone_mask)))
            elif cls["coneless"] is None:
                cls["coneless"] = comb
    ordered = sorted(classes.values(), key=lambda c: (c["representative"].n, c["code"]))
    return ordered


def age(g: Graph, k: int, embedding_cap: int | None = None) -> list[AgeClass]:
    """One AgeClass per isomorphism type of induced subgraph of size <= k."""
    result = []
    for cls in _scan_classes(g, k):
        embeddings = cls["embeddings"]
        if embedding_cap is not None:
            embeddings = embeddings[:embedding_cap]
        result.append(
            AgeClass(
                representative=cls["representative"],
                code=cls["code"],
                embeddings=tuple(embeddings),
            )
        )
    return result


def kk_okk(g: Graph, k: int) -> AgePartition:
    """Classify every age class by cone existence over its embeddings.

    Conflict detection always scans every embedding of every class.
    """
    scanned = _scan_classes(g, k)
    kk = set()
    okk = set()
    conflicts = []
    classes = []
    for cls in scanned:
        classes.append(
            AgeClass(
                representative=cls["representative"],
                code=cls["code"],
                embeddings=tuple(cls["embeddings"]),
            )
        )
        if cls["coned"] is not None:
            kk.add(cls["code"])
        if cls["coneless"] is not None:
            okk.add(cls["code"])
        if cls["coned"] is not None and cls["coneless"] is not None:
            emb, cone_vertex = cls["coned"]
            conflicts.append(
                Conflict(
                    code=cls["code"],
                    coned_embedding=emb,
                    cone_vertex=cone_vertex,
                    coneless_embedding=cls["coneless"],
                )
            )
    return AgePartition(
        kk=frozenset(kk),
        okk=frozenset(okk),
        conflicts=tuple(conflicts),
        classes=tuple(classes),
    )


_PRECEQ_CACHE: dict[tuple[bytes, bytes], bool] = {}
_SURJECTIVE = MorphismConstraints(surjective=True)


def preceq(a: Graph, b: Graph) -> bool:
    """True when a surjective homomorphism a -> b exists."""
    if a.n < b.n:
        return False
    key = None
    if a.n <= 10 and b.n <= 10:
        key = (canonical_code(a), canonical_code(b))
        hit = _PRECEQ_CACHE.get(key)
        if hit is not None:
            return hit
    result = search_morphism(a, b, None, _SURJECTIVE) is not None
    if key is not None:
        _PRECEQ_CACHE[key] = result
    return result


# --- direct decider ---------------------------------------------------------


def _local_morphisms(g: Graph, x: str):
    """Yield (domain, images) for every local x-morphism of g.

    Domains ascend by size then lexicographically; images ascend
    lexicographically within a domain.
    """
    n = g.n
    adj = g.masks
    full = (1 << n) - 1
    respect_non = x == "I"
    injective = x in ("M", "I")
    for size in range(0, n + 1):
        for domain in combinations(range(n), size):
            images: list[int] = []

            def rec(i: int, used: int):
                if i == len(domain):
                    yield tuple(images)
                    return
                v = domain[i]
                allowed = full
                for j in range(i):
                    u = domain[j]
                    if adj[v] >> u & 1:
                        allowed &= adj[images[j]]
                    elif respect_non:
                        allowed &= ~adj[images[j]] & ~(1 << images[j])
                if injective:
                    allowed &= ~used
                for t in _iter_bits(allowed):
                    images.append(t)
                    yield from rec(i + 1, used | 1 << t)
                    images.pop()

            for imgs in rec(0, 0):
                yield domain, imgs


def _counterexample(domain, images, vertex, reason) -> dict:
    return {
        "map": [[u, t] for u, t in zip(domain, images)],
        "unextendable_vertex": vertex,
        "reason": reason,
    }


def _decide_hh_direct(g: Graph) -> HomogReport:
    """One-point route for (H, H): over every coned domain and every
    homomorphism from it, the image must again have a cone."""
    n = g.n
    adj = g.masks
    full = (1 << n) - 1
    cone_of: dict[int, int] = {}

    def cones(mask: int) -> int:
        hit = cone_of.get(mask)
        if hit is None:
            hit = full
            for v in _iter_bits(mask):
                hit &= adj[v]
            cone_of[mask] = hit
        return hit

    images = [0] * n

    for size in range(0, n + 1):
        for domain in combinations(range(n), size):
            dmask = sum(1 << v for v in domain)
            dcones = cones(dmask)
            if not dcones:
                continue

            def rec(i: int, image_mask: int) -> tuple[int, ...] | None:
                # Returns the first homomorphism whose image has no cone.
                if i == size:
                    if not cones(image_mask):
                        return tuple(images[:size])
                    return None
                v = domain[i]
                allowed = full
                for j in range(i):
                    if adj[v] >> domain[j] & 1:
                        allowed &= adj[images[j]]
                for t in _iter_bits(allowed):
                    images[i] = t
                    bad = rec(i + 1, image_mask | 1 << t)
                    if bad is not None:
                        return bad
                return None

            failing = rec(0, 0)
            if failing is not None:
                return HomogReport(
                    verdict=False,
                    x_kind="H",
                    y_kind="H",
                    method="direct",
                    counterexample=_counterexample(
                        domain,
                        failing,
                        next(_iter_bits(dcones)),
                        "image of the domain has no cone",
                    ),
                )
    return HomogReport(verdict=True, x_kind="H", y_kind="H", method="direct")


def _decide_m_direct(g: Graph, x: str) -> HomogReport:
    """One-point route for target kind M over local x-morphisms."""
    n = g.n
    adj = g.masks
    full = (1 << n) - 1
    for domain, images in _local_morphisms(g, x):
        image_mask = 0
        duplicate = False
        for t in images:
            if image_mask >> t & 1:
                duplicate = True
                break
            image_mask |= 1 << t
        if duplicate:
            return HomogReport(
                verdict=False,
                x_kind=x,
                y_kind="M",
                method="direct",
                counterexample=_counterexample(
                    domain, images, None, "non-injective map has no injective extension"
                ),
            )
        dmask = sum(1 << v for v in domain)
        for a in range(n):
            if dmask >> a & 1:
                continue
            allowed = full
            for j, v in enumerate(domain):
                if adj[a] >> v & 1:
                    allowed &= adj[images[j]]
            allowed &= ~image_mask
            if not allowed:
                return HomogReport(
                    verdict=False,
                    x_kind=x,
                    y_kind="M",
                    method="direct",
                    counterexample=_counterexample(
                        domain, images, a, "no injective image for the new vertex"
                    ),
                )
    return HomogReport(verdict=True, x_kind=x, y_kind="M", method="direct")


def _decide_generic(g: Graph, x: str, y: str) -> HomogReport:
    note = None
    if y == "B":
        note = "bijective endomorphisms of a finite graph are automorphisms; kind B runs the automorphism search"
    for domain, images in _local_morphisms(g, x):
        f = PartialMap(tuple(zip(domain, images)))
        if y in ("M", "E", "B", "A") and len(set(images)) != len(images):
            return HomogReport(
                verdict=False,
                x_kind=x,
                y_kind=y,
                method="direct",
                counterexample=_counterexample(
                    domain, images, None, "non-injective map cannot extend to this kind"
                ),
                note=note,
            )
        if y == "I" and not is_local_isomorphism(g, g, f):
            return HomogReport(
                verdict=False,
                x_kind=x,
                y_kind=y,
                method="direct",
                counterexample=_counterexample(
                    domain,
                    images,
                    None,
                    "map is not a local isomorphism, so no embedding extends it",
                ),
                note=note,
            )
        if extends_in(g, f, y) is None:
            return HomogReport(
                verdict=False,
                x_kind=x,
                y_kind=y,
                method="direct",
                counterexample=_counterexample(domain, images, None, "no extension"),
                note=note,
            )
    return HomogReport(verdict=True, x_kind=x, y_kind=y, method="direct", note=note)


def decide_xy(g: Graph, x: str, y: str, max_order: int = 10) -> HomogReport:
    """Decide whether every local x-morphism extends to a y-endomorphism.

    One-point acceleration is applied where the stepwise argument is sound:
    (H,H), (H,M) and (M,M).  Remaining combinations run a full extension
    search per local morphism, which is exponential and only meant for
    small orders.
    """
    if x not in X_KINDS:
        raise ValueError(f"x kind must be one of {X_KINDS!r}, got {x!r}")
    if y not in KINDS:
        raise ValueError(f"y kind must be one of {KINDS!r}, got {y!r}")
    if g.n > max_order:
        raise OrderTooLarge(f"direct decider capped at order {max_order}, got {g.n}")
    if x == "H" and y == "H":
        return _decide_hh_direct(g)
    if y == "M" and x in ("H", "M"):
        return _decide_m_direct(g, x)
    return _decide_generic(g, x, y)


def decide_hh_conditions(g: Graph, k: int | None = None, max_order: int = 10) -> HomogReport:
    """HH verdict through the age partition.

    Condition 1: no age class has both a coned and a cone-free embedding.
    Condition 2: the coned classes are upward closed under the surjective
    homomorphism order, tested as: no coned class maps onto a cone-free one.
    A complete verdict needs k = order(g).
    """
    if k is None:
        k = g.n
    if k > max_order:
        raise OrderTooLarge(f"conditions decider capped at order {max_order}, got {k}")
    part = kk_okk(g, k)
    if part.conflicts:
        c = part.conflicts[0]
        return HomogReport(
            verdict=False,
            x_kind="H",
            y_kind="H",
            method="conditions",
            counterexample={
                "condition": 1,
                "code": c.code,
                "coned_embedding": list(c.coned_embedding),
                "cone_vertex": c.cone_vertex,
                "coneless_embedding": list(c.coneless_embedding),
            },
        )
    kk_classes = [cls for cls in part.classes if cls.code in part.kk]
    okk_classes = [cls for cls in part.classes if cls.code in part.okk]
    for upper in kk_classes:
        for lower in okk_classes:
            if preceq(upper.representative, lower.representative):
                surj = search_morphism(
                    upper.representative, lower.representative, None, _SURJECTIVE
                )
                return HomogReport(
                    verdict=False,
                    x_kind="H",
                    y_kind="H",
                    method="conditions",
                    counterexample={
                        "condition": 2,
                        "upper_code": upper.code,
                        "lower_code": lower.code,
                        "upper_embedding": list(upper.embeddings[0]),
                        "lower_embedding": list(lower.embeddings[0]),
                        "surjection": surj,
                    },
                )
    return HomogReport(verdict=True, x_kind="H", y_kind="H", method="conditions")
