"""Co-maximal graphs of Z_n, built two independent ways.

``build_comaximal`` uses only the ring definition (a ~ b iff
gcd(a, b, n) = 1).  ``build_blowup_spec``/``expand_blowup`` go through the
divisor-class decomposition instead: a clique of units joined to the zero
vertex plus the blow-up of the proper-divisor coprimality graph.
``verify_structure`` checks that the two agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

from .numtheory import class_size, euler_phi, factorize, proper_divisors

ORACLE_MAX_ORDER = 64


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph with adjacency stored as integer bit rows.

    Bit ``j`` of ``rows[i]`` is set iff ``i ~ j``.
    """

    order: int
    rows: tuple[int, ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if len(self.rows) != self.order:
            raise ValueError("need exactly one adjacency row per vertex")
        if self.labels is not None and len(self.labels) != self.order:
            raise ValueError("labels must align with vertices")
        full = (1 << self.order) - 1
        for i, row in enumerate(self.rows):
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i}")
            if row & ~full:
                raise ValueError(f"row {i} references a vertex out of range")
            r = row
            while r:
                j = (r & -r).bit_length() - 1
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
                r &= r - 1

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]], labels=None) -> "SimpleGraph":
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def complete(cls, k: int) -> "SimpleGraph":
        full = (1 << k) - 1
        return cls(k, tuple(full & ~(1 << i) for i in range(k)))

    @classmethod
    def empty(cls, k: int) -> "SimpleGraph":
        return cls(k, (0,) * k)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def closed_neighborhoods(self) -> list[int]:
        return [row | 1 << i for i, row in enumerate(self.rows)]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i, row in enumerate(self.rows):
            r = row >> (i + 1)
            j = i + 1
            while r:
                if r & 1:
                    out.append((i, j))
                r >>= 1
                j += 1
        return out

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        vertices = list(vertices)
        pos = {v: k for k, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u, k in pos.items():
                if self.rows[v] >> u & 1:
                    row |= 1 << k
            rows.append(row)
        labels = None if self.labels is None else tuple(self.labels[v] for v in vertices)
        return SimpleGraph(len(vertices), tuple(rows), labels)

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        k = self.order
        return SimpleGraph(k + other.order, self.rows + tuple(r << k for r in other.rows))

    def join(self, other: "SimpleGraph") -> "SimpleGraph":
        k, m = self.order, other.order
        left = (1 << k) - 1
        right = ((1 << m) - 1) << k
        rows = tuple(r | right for r in self.rows) + tuple((r << k) | left for r in other.rows)
        return SimpleGraph(k + m, rows)


@dataclass(frozen=True)
class DivisorGraph:
    """Coprimality graph G_n on the proper divisors of n (ascending)."""

    n: int
    divisors: tuple[int, ...]
    graph: SimpleGraph


@dataclass(frozen=True)
class BlowupSpec:
    """Generalized-join description of Gamma(Z_n).

    ``class_sizes[i]`` is |A_{d_i}| = phi(n / d_i) for ``base.divisors[i]``.
    """

    n: int
    base: DivisorGraph
    class_sizes: tuple[int, ...]
    unit_count: int
    zero_present: bool = field(default=True)

    @property
    def g2_order(self) -> int:
        return sum(self.class_sizes)


def build_comaximal(n: int) -> SimpleGraph:
    """Gamma(Z_n) on vertices 0..n-1 straight from the ring definition."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    rows = [0] * n
    for a in range(n):
        ga = gcd(a, n)
        for b in range(a + 1, n):
            if gcd(ga, b) == 1:
                rows[a] |= 1 << b
                rows[b] |= 1 << a
    return SimpleGraph(n, tuple(rows), tuple(range(n)))


def build_divisor_graph(n: int) -> DivisorGraph:
    divs = tuple(proper_divisors(factorize(n)))
    edges = [
        (i, j)
        for i in range(len(divs))
        for j in range(i + 1, len(divs))
        if gcd(divs[i], divs[j]) == 1
    ]
    return DivisorGraph(n, divs, SimpleGraph.from_edges(len(divs), edges, divs))


def build_blowup_spec(n: int) -> BlowupSpec:
    f = factorize(n)
    base = build_divisor_graph(n)
    sizes = tuple(class_size(f, d) for d in base.divisors)
    return BlowupSpec(n, base, sizes, euler_phi(f))


def canonical_order(n: int) -> list[int]:
    """Ring elements in canonical vertex order.

    Units ascending, then 0, then each class A_d for ascending proper d,
    elements ascending inside a class.
    """
    units = [x for x in range(1, n) if gcd(x, n) == 1]
    order = units + [0]
    for d in proper_divisors(factorize(n)):
        order.extend(x for x in range(1, n) if gcd(x, n) == d)
    return order


def expand_blowup(spec: BlowupSpec) -> SimpleGraph:
    """Materialize the graph described by ``spec``.

    Adjacency is taken from the block structure alone; the ring elements
    only appear as labels (canonical order).
    """
    u = spec.unit_count
    sizes = spec.class_sizes
    offsets = []
    total = u + 1
    for m in sizes:
        offsets.append(total)
        total += m
    full = (1 << total) - 1
    unit_mask = (1 << u) - 1
    block = [((1 << m) - 1) << off for m, off in zip(sizes, offsets)]

    rows = [full & ~(1 << i) for i in range(u)]
    rows.append(unit_mask)  # zero vertex
    base_rows = spec.base.graph.rows
    for i, m in enumerate(sizes):
        row = unit_mask
        nb = base_rows[i]
        j = 0
        while nb:
            if nb & 1:
                row |= block[j]
            nb >>= 1
            j += 1
        rows.extend([row] * m)
    labels = tuple(canonical_order(spec.n)) if spec.n == total else None
    return SimpleGraph(total, tuple(rows), labels)


@dataclass(frozen=True)
class StructureCheck:
    n: int
    ok: bool
    detail: str

    def __bool__(self) -> bool:
        return self.ok


def verify_structure(n: int) -> StructureCheck:
    """Compare the expanded blow-up with the ring-definition graph."""
    spec = build_blowup_spec(n)
    if spec.unit_count + 1 + spec.g2_order != n:
        return StructureCheck(n, False, f"class sizes sum to {spec.unit_count + 1 + spec.g2_order}, not {n}")
    expanded = expand_blowup(spec)
    truth = build_comaximal(n)
    perm = canonical_order(n)
    if len(perm) != n or sorted(perm) != list(range(n)):
        return StructureCheck(n, False, "canonical relabeling is not a permutation")
    for i in range(n):
        for j in range(i + 1, n):
            a = expanded.has_edge(i, j)
            b = truth.has_edge(perm[i], perm[j])
            if a != b:
                return StructureCheck(
                    n,
                    False,
                    f"mismatch at canonical pair ({i}, {j}) = ring elements "
                    f"({perm[i]}, {perm[j]}): blow-up says {a}, ring says {b}",
                )
    return StructureCheck(n, True, "identical under canonical relabeling")


def g2_vertices(n: int) -> list[int]:
    """Nonzero non-units of Z_n, i.e. the vertex set of G_2."""
    return [x for x in range(1, n) if gcd(x, n) > 1]


def build_g2(n: int) -> SimpleGraph:
    """G_2 as an induced subgraph of the ring-definition graph."""
    return build_comaximal(n).induced(g2_vertices(n))


def edge_list_dump(g: SimpleGraph, n: int | None = None) -> str:
    head = f"# comaximal n={n if n is not None else g.order} order={g.order}"
    lines = [head] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
