"""Graph representation, seeded G(n,p) generation, and partition machinery.

Graphs are undirected and simple.  Adjacency is stored as one Python int
bitmask per vertex (bit v of ``row(u)`` set iff u~v), which makes the
neighborhood-vs-part intersections that dominate every algorithm here a
single ``&`` plus ``bit_count()``.  Heavy all-pairs kernels (max codegree)
drop into numpy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import ConfigurationError, DomainError
from .seeds import stream_rng

# Memory guard for generation / dense kernels; dense bit rows take n^2/8
# bytes, so this is ~5 GB of adjacency at the limit.
_MAX_N = 200_000


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate set bit indices of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected simple graph on vertices 0..n-1 with bit-row adjacency.

    Immutable after construction: all mutating pipelines work on copies of
    the row list, so instances are safe to share across workers.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: list[int] | None = None):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        self.n = n
        if rows is None:
            rows = [0] * n
        if len(rows) != n:
            raise DomainError("adjacency row count must equal n")
        self._rows = rows
        self._check_invariants()

    def _check_invariants(self) -> None:
        n = self.n
        full = (1 << n) - 1
        for v, row in enumerate(self._rows):
            if row & (1 << v):
                raise DomainError(f"self-loop at vertex {v}")
            if row & ~full:
                raise DomainError(f"neighbor index out of range at vertex {v}")
        # symmetry: u in adj(v) <=> v in adj(u)
        for v, row in enumerate(self._rows):
            for u in bits(row >> v):
                u += v
                if not (self._rows[u] >> v) & 1:
                    raise DomainError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise DomainError(f"self-loop {u}-{v} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @classmethod
    def _from_rows_unchecked(cls, n: int, rows: list[int]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g._rows = rows
        return g

    def row(self, v: int) -> int:
        """Neighborhood of v as a bitmask."""
        return self._rows[v]

    def rows(self) -> list[int]:
        """A copy of all adjacency rows (safe to mutate)."""
        return list(self._rows)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self._rows[v]))

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in bits(self._rows[u] >> (u + 1)):
                yield u, v + u + 1

    def with_extra_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with the given edges added (existing ones are no-ops)."""
        rows = list(self._rows)
        for u, v in edges:
            if u == v:
                raise DomainError("self-loop not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph._from_rows_unchecked(self.n, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.n, tuple(self._rows)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class GnpConfig:
    """Parameters of one seeded G(n,p) draw.

    The same config always reproduces the same graph bit-exactly: edges
    are drawn row by row (u = 0..n-1, candidates v = u+1..n-1) from a
    single PCG64 stream seeded with ``seed``.
    """

    n: int
    p: float
    seed: int

    def __post_init__(self):
        if self.n < 0:
            raise ConfigurationError("n must be nonnegative")
        if self.n > _MAX_N:
            raise ConfigurationError(f"n={self.n} exceeds desk-scale guard {_MAX_N}")
        if not (0.0 <= self.p <= 1.0):
            raise ConfigurationError(f"p={self.p} outside [0, 1]")


def gen_gnp(config: GnpConfig) -> Graph:
    """Sample G(n, p): each unordered pair is an edge independently w.p. p."""
    n, p = config.n, config.p
    if n == 0:
        return Graph(0, [])
    if p == 0.0:
        return Graph._from_rows_unchecked(n, [0] * n)
    if p == 1.0:
        full = (1 << n) - 1
        return Graph._from_rows_unchecked(n, [full ^ (1 << v) for v in range(n)])

    rng = np.random.Generator(np.random.PCG64(config.seed))
    u_chunks: list[np.ndarray] = []
    v_chunks: list[np.ndarray] = []
    for u in range(n - 1):
        hits = np.nonzero(rng.random(n - u - 1) < p)[0]
        if hits.size:
            u_chunks.append(np.full(hits.size, u, dtype=np.int64))
            v_chunks.append(hits.astype(np.int64) + (u + 1))
    if not u_chunks:
        return Graph._from_rows_unchecked(n, [0] * n)

    u_arr = np.concatenate(u_chunks)
    v_arr = np.concatenate(v_chunks)
    # per-vertex neighbor ranges: u_arr is already sorted; sort the mirror side
    order_v = np.argsort(v_arr, kind="stable")
    v_sorted = v_arr[order_v]
    u_mirror = u_arr[order_v]
    lo_u = np.searchsorted(u_arr, np.arange(n), side="left")
    hi_u = np.searchsorted(u_arr, np.arange(n), side="right")
    lo_v = np.searchsorted(v_sorted, np.arange(n), side="left")
    hi_v = np.searchsorted(v_sorted, np.arange(n), side="right")

    rows: list[int] = []
    scratch = np.zeros(n, dtype=bool)
    for x in range(n):
        fwd = v_arr[lo_u[x]:hi_u[x]]
        back = u_mirror[lo_v[x]:hi_v[x]]
        scratch[fwd] = True
        scratch[back] = True
        packed = np.packbits(scratch, bitorder="little")
        rows.append(int.from_bytes(packed.tobytes(), "little"))
        scratch[fwd] = False
        scratch[back] = False
    return Graph._from_rows_unchecked(n, rows)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Shorthand for ``gen_gnp(GnpConfig(n, p, seed))``."""
    return gen_gnp(GnpConfig(n, p, seed))


# ---------------------------------------------------------------------------
# degree / codegree queries


def max_degree(g: Graph) -> tuple[int, list[int]]:
    """Maximum degree and the full set of vertices attaining it."""
    if g.n == 0:
        raise DomainError("max_degree of the empty graph is undefined")
    degs = [g.degree(v) for v in range(g.n)]
    d = max(degs)
    return d, [v for v, dv in enumerate(degs) if dv == d]


def degree_gap(g: Graph) -> int:
    """Gap between the largest and second-largest degree.

    Returns 0 when the maximum degree is attained by two or more vertices.
    """
    if g.n < 2:
        raise DomainError("degree_gap needs at least two vertices")
    degs = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    if degs[0] == degs[1]:
        return 0
    return degs[0] - degs[1]


def codegree(g: Graph, u: int, v: int) -> int:
    """Number of common neighbors of two distinct vertices."""
    if u == v:
        raise DomainError("codegree requires two distinct vertices")
    return (g.row(u) & g.row(v)).bit_count()


def _packed_bytes(g: Graph) -> np.ndarray:
    """Adjacency as an (n, ceil(n/8)) uint8 matrix, little-endian bits."""
    nbytes = (g.n + 7) // 8
    buf = b"".join(r.to_bytes(nbytes, "little") for r in g.rows())
    return np.frombuffer(buf, dtype=np.uint8).reshape(g.n, nbytes)


def packed_rows(g: Graph) -> np.ndarray:
    """Adjacency as an (n, W) uint64 matrix for numpy popcount kernels."""
    nbytes = (g.n + 7) // 8
    width = ((nbytes + 7) // 8) * 8
    p8 = _packed_bytes(g)
    if width != nbytes:
        pad = np.zeros((g.n, width - nbytes), dtype=np.uint8)
        p8 = np.hstack([p8, pad])
    return np.ascontiguousarray(p8).view(np.uint64)


def _max_codegree_pairs(g: Graph) -> int:
    best = 0
    rows = g.rows()
    for u in range(g.n - 1):
        ru = rows[u]
        for v in range(u + 1, g.n):
            c = (ru & rows[v]).bit_count()
            if c > best:
                best = c
    return best


def _max_codegree_matmul(g: Graph, block: int = 2048) -> int:
    # Codegree matrix is A @ A; float32 sgemm is exact for counts < 2^24.
    n = g.n
    dense = np.unpackbits(_packed_bytes(g), axis=1, count=n, bitorder="little")
    a = dense.astype(np.float32)
    best = 0.0
    for i0 in range(0, n, block):
        i1 = min(i0 + block, n)
        # only columns >= i0: the codegree matrix is symmetric
        c = a[i0:i1] @ a[:, i0:]
        idx = np.arange(i1 - i0)
        c[idx, idx + (i0 - i0)] = 0.0
        m = float(c.max()) if c.size else 0.0
        if m > best:
            best = m
    return int(best)


def _max_codegree_bitrows(g: Graph) -> int:
    # Independent kernel: packed uint64 AND + popcount, row against tail.
    packed = packed_rows(g)
    best = 0
    for u in range(g.n - 1):
        cnt = np.bitwise_count(packed[u + 1:] & packed[u]).sum(axis=1)
        m = int(cnt.max()) if cnt.size else 0
        if m > best:
            best = m
    return best


def max_codegree(g: Graph) -> int:
    """Maximum codegree over all unordered vertex pairs (0 if n < 2)."""
    if g.n < 2:
        return 0
    if g.n <= 700:
        return _max_codegree_pairs(g)
    if g.n <= 40_000:
        return _max_codegree_matmul(g)
    return _max_codegree_bitrows(g)


# ---------------------------------------------------------------------------
# partitions and padding


@dataclass(frozen=True)
class VertexPartition:
    """Ordered disjoint parts, all of size exactly k.

    Whether the parts must cover all vertices of a graph depends on
    context: strong-coloring operations require coverage, transversal
    search accepts any collection of disjoint equal-size subsets.  Use
    :meth:`covers` where coverage matters.
    """

    k: int
    parts: tuple[tuple[int, ...], ...]

    def __init__(self, k: int, parts: Iterable[Iterable[int]]):
        if k < 1:
            raise DomainError("part size k must be positive")
        norm = tuple(tuple(sorted(p)) for p in parts)
        seen: set[int] = set()
        for p in norm:
            if len(p) != k:
                raise DomainError(f"part {p} does not have size {k}")
            for v in p:
                if v < 0:
                    raise DomainError("negative vertex index in partition")
                if v in seen:
                    raise DomainError(f"vertex {v} appears in two parts")
                seen.add(v)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "parts", norm)

    def __len__(self) -> int:
        return len(self.parts)

    def vertices(self) -> set[int]:
        return {v for p in self.parts for v in p}

    def part_of(self) -> dict[int, int]:
        """Map vertex -> index of its part."""
        return {v: i for i, p in enumerate(self.parts) for v in p}

    def masks(self) -> list[int]:
        return [mask_of(p) for p in self.parts]

    def covers(self, g: Graph) -> bool:
        return self.vertices() == set(range(g.n))


def pad_isolated(g: Graph, k: int) -> Graph:
    """Pad with isolated vertices so that k divides the vertex count."""
    if k < 1:
        raise DomainError("k must be positive")
    target = k * math.ceil(g.n / k) if g.n > 0 else k
    if target == g.n:
        return g
    rows = g.rows() + [0] * (target - g.n)
    return Graph._from_rows_unchecked(target, rows)


def random_equal_partition(n: int, k: int, seed: int) -> VertexPartition:
    """Uniformly random partition of 0..n-1 into parts of size k (k | n)."""
    if k < 1 or n % k != 0:
        raise DomainError(f"k={k} must divide n={n}")
    rng = stream_rng(seed, "partition")
    verts = list(range(n))
    rng.shuffle(verts)
    parts = [verts[i:i + k] for i in range(0, n, k)]
    return VertexPartition(k, parts)


def lower_bound_partition(g: Graph, k: int) -> tuple[Graph, VertexPartition]:
    """Witness partition showing the strong chromatic number exceeds Δ.

    Requires k == Δ(g) >= 1.  The first part is the neighborhood of a
    maximum-degree vertex (lowest index on ties); remaining vertices of
    the k-padded graph are chunked in ascending order.  No strong
    k-coloring of the padded graph respects this partition: the center
    would need a color already used in its neighborhood part.
    """
    delta, argmax = max_degree(g)
    if delta < 1:
        raise DomainError("graph must have at least one edge")
    if k != delta:
        raise DomainError(f"k={k} must equal the maximum degree {delta}")
    center = argmax[0]
    padded = pad_isolated(g, k)
    first = sorted(g.neighbors(center))
    rest = [v for v in range(padded.n) if v not in set(first)]
    parts = [first] + [rest[i:i + k] for i in range(0, len(rest), k)]
    return padded, VertexPartition(k, parts)
