"""Simple undirected graphs on a packed edge bitset, with graph6 I/O,
named families, structural predicates, and canonical forms.

Vertices are labeled 0..n-1.  The edge set lives in a single Python int:
bit ``j*(j-1)//2 + i`` holds the pair ``{i, j}`` with ``i < j``, which is
exactly the column-major upper-triangle order used by the graph6 format.
Edge tests, edge counts, and hashing are therefore O(1)-ish integer ops,
and graphs are cheap to dedup and to ship between processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

import numpy as np

MAX_ORDER = 62  # single-byte graph6 header; larger orders are out of scope
CANONICAL_ORDER_LIMIT = 10  # exhaustive-within-cells search is factorial in the worst case


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair {i, j} (column-major upper triangle)."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: order ``n`` plus the packed upper-triangle bitset."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"graph order must be in [1, {MAX_ORDER}], got {self.n}")
        nbits = self.n * (self.n - 1) // 2
        if not 0 <= self.bits < (1 << nbits):
            raise ValueError("edge bitset has bits outside the upper triangle")

    @property
    def m(self) -> int:
        """Number of edges."""
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return bool((self.bits >> pair_index(i, j)) & 1)

    def edges(self):
        """Yield edges as (i, j) with i < j, in bit order."""
        b = self.bits
        t = 0
        while b:
            if b & 1:
                yield _PAIRS[t]
            b >>= 1
            t += 1

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.edges():
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def neighbor_masks(self) -> list[int]:
        """Per-vertex adjacency bitmask over vertex indices."""
        masks = [0] * self.n
        for i, j in self.edges():
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges():
            a[i, j] = 1
            a[j, i] = 1
        return a


# Precomputed pair table (t -> (i, j)) covering the largest supported order.
_PAIRS: list[tuple[int, int]] = [
    (i, j) for j in range(1, MAX_ORDER) for i in range(j)
]


def from_edges(n: int, edges) -> Graph:
    bits = 0
    for i, j in edges:
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for order {n}")
        bits |= 1 << pair_index(i, j)
    return Graph(n, bits)


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex relabeling: vertex v becomes perm[v]."""
    return from_edges(g.n, ((perm[i], perm[j]) for i, j in g.edges()))


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def star(n: int) -> Graph:
    """Star S_n: vertex 0 adjacent to the n-1 leaves.  star(1) = K1, star(2) = K2."""
    return from_edges(n, ((0, v) for v in range(1, n)))


def path(n: int) -> Graph:
    """Path P_n with vertices in line order 0-1-...-(n-1)."""
    return from_edges(n, ((v, v + 1) for v in range(n - 1)))


def complete(n: int) -> Graph:
    """Complete graph K_n."""
    return from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError(f"cycle requires n >= 3, got {n}")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


FAMILIES = {"star": star, "path": path, "complete": complete, "cycle": cycle}


def named_graph(family: str, n: int) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    return builder(n)


# ---------------------------------------------------------------------------
# Structural predicates
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    """Search from vertex 0; K1 counts as connected."""
    masks = g.neighbor_masks()
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        nbrs = masks[v] & ~seen
        seen |= nbrs
        while nbrs:
            u = (nbrs & -nbrs).bit_length() - 1
            frontier.append(u)
            nbrs &= nbrs - 1
    return seen == (1 << g.n) - 1


def is_bipartite(g: Graph):
    """Return a 2-coloring (side0, side1) as frozensets, or None on an odd cycle.

    Disconnected graphs are handled component by component.
    """
    masks = g.neighbor_masks()
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            nbrs = masks[v]
            while nbrs:
                u = (nbrs & -nbrs).bit_length() - 1
                nbrs &= nbrs - 1
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    side0 = frozenset(v for v in range(g.n) if color[v] == 0)
    side1 = frozenset(v for v in range(g.n) if color[v] == 1)
    return side0, side1


def is_star_graph(g: Graph) -> bool:
    """Exact structural test: S_1 = K1, S_2 = K2, otherwise one hub of full degree."""
    if g.n <= 2:
        return g.m == g.n - 1
    return g.m == g.n - 1 and max(g.degrees()) == g.n - 1


def is_complete_graph(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_path_graph(g: Graph) -> bool:
    """Exact structural test: connected with degree sequence (1, 1, 2, ..., 2)."""
    if g.n == 1:
        return g.m == 0
    if g.m != g.n - 1 or not is_connected(g):
        return False
    return max(g.degrees()) <= 2


# ---------------------------------------------------------------------------
# graph6 wire format
# ---------------------------------------------------------------------------

class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (n <= 62, single-byte header).

    The payload is the column-major upper triangle, packed big-endian into
    6-bit groups offset by 63; padding bits must be zero.  Any deviation
    raises Graph6Error with the byte offset of the problem.
    """
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise Graph6Error("empty graph6 line", 0)
    head = ord(text[0])
    if head == 126:
        raise Graph6Error("multi-byte order header (n > 62) is not supported", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"malformed header byte {head}", 0)
    n = head - 63
    if n < 1:
        raise Graph6Error("graph6 order 0 is not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(text) - 1 < need:
        raise Graph6Error(
            f"truncated bit vector: need {need} payload bytes, got {len(text) - 1}",
            len(text),
        )
    if len(text) - 1 > need:
        raise Graph6Error("trailing garbage after bit vector", 1 + need)
    bits = 0
    for k in range(need):
        c = ord(text[1 + k])
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid payload byte {c}", 1 + k)
        group = c - 63
        for b in range(6):
            t = 6 * k + b
            if (group >> (5 - b)) & 1:
                if t >= nbits:
                    raise Graph6Error("nonzero padding bits", 1 + k)
                bits |= 1 << t
    return Graph(n, bits)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 line (no trailing newline)."""
    nbits = g.n * (g.n - 1) // 2
    out = [chr(63 + g.n)]
    for k in range((nbits + 5) // 6):
        group = 0
        for b in range(6):
            t = 6 * k + b
            if t < nbits and (g.bits >> t) & 1:
                group |= 1 << (5 - b)
        out.append(chr(63 + group))
    return "".join(out)


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Label-invariant encoding: equal forms <=> isomorphic graphs.

    Stored as the graph6 bytes of the canonical relabeling so that report
    files stay human-decodable.
    """

    data: bytes

    @property
    def graph6(self) -> str:
        return self.data.decode("ascii")

    def to_graph(self) -> Graph:
        return parse_graph6(self.graph6)


def _refine_colors(n: int, masks: list[int]) -> list[int]:
    """Iterated degree refinement: color = rank of (color, sorted neighbor colors)."""
    colors = [masks[v].bit_count() for v in range(n)]
    while True:
        keys = []
        for v in range(n):
            nbrs = masks[v]
            nc = []
            while nbrs:
                u = (nbrs & -nbrs).bit_length() - 1
                nc.append(colors[u])
                nbrs &= nbrs - 1
            nc.sort()
            keys.append((colors[v], tuple(nc)))
        ranking = {k: r for r, k in enumerate(sorted(set(keys)))}
        new = [ranking[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _is_twin_cell(cell: list[int], masks: list[int]) -> bool:
    """True when every pair in the cell has identical neighborhoods outside the pair.

    Swapping two such vertices is an automorphism, so the encoding is
    invariant under any ordering of the cell and one fixed order suffices.
    """
    for a, b in combinations(cell, 2):
        if masks[a] & ~(1 << b) != masks[b] & ~(1 << a):
            return False
    return True


_PY_ENUM_LIMIT = 8000   # orderings handled by the plain-Python scan
_NP_CHUNK = 50_000      # orderings per vectorized chunk


def _encode_ordering(order, masks, npairs) -> int:
    # big-endian over pair bits so the total order matches the numpy path
    enc = 0
    for i, j in _PAIRS[:npairs]:
        enc = (enc << 1) | ((masks[order[j]] >> order[i]) & 1)
    return enc


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form by color refinement plus exhaustive search within cells.

    Twin cells (interchangeable vertices) are pinned to one fixed order,
    which makes stars, cliques, and complete multipartite graphs O(1); the
    remaining cells are permuted exhaustively, vectorizing through numpy
    once the ordering count gets large.  Worst case is factorial, hence the
    order limit.
    """
    n = g.n
    if n > CANONICAL_ORDER_LIMIT:
        raise ValueError(
            f"canonical_form supports n <= {CANONICAL_ORDER_LIMIT}, got {n}"
        )
    if n == 1:
        return CanonicalForm(emit_graph6(g).encode("ascii"))
    masks = g.neighbor_masks()
    colors = _refine_colors(n, masks)
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    cell_orders = []
    total = 1
    for color in sorted(cells):
        cell = sorted(cells[color])
        if len(cell) == 1 or _is_twin_cell(cell, masks):
            cell_orders.append([tuple(cell)])
        else:
            perms = list(permutations(cell))
            cell_orders.append(perms)
            total *= len(perms)

    npairs = n * (n - 1) // 2
    orderings = (sum(combo, ()) for combo in product(*cell_orders))
    if total <= _PY_ENUM_LIMIT:
        best = min(_encode_ordering(order, masks, npairs) for order in orderings)
        best_bits = _unpack_bigendian(best, npairs)
    else:
        best_key = None
        adj = g.adjacency_matrix(dtype=np.uint8)
        ii = np.array([p[0] for p in _PAIRS[:npairs]])
        jj = np.array([p[1] for p in _PAIRS[:npairs]])
        chunk: list[tuple[int, ...]] = []

        def flush(chunk):
            nonlocal best_key
            perms = np.array(chunk, dtype=np.intp)
            rows = adj[perms[:, ii], perms[:, jj]]
            packed = np.packbits(rows, axis=1)
            key = min(bytes(r) for r in packed)
            if best_key is None or key < best_key:
                best_key = key

        for order in orderings:
            chunk.append(order)
            if len(chunk) >= _NP_CHUNK:
                flush(chunk)
                chunk = []
        if chunk:
            flush(chunk)
        best = int.from_bytes(best_key, "big") >> (8 * len(best_key) - npairs)
        best_bits = _unpack_bigendian(best, npairs)
    return CanonicalForm(emit_graph6(Graph(n, best_bits)).encode("ascii"))


def _unpack_bigendian(enc: int, npairs: int) -> int:
    """Convert the big-endian comparison key back to storage bit order."""
    bits = 0
    for t in range(npairs):
        if (enc >> (npairs - 1 - t)) & 1:
            bits |= 1 << t
    return bits
