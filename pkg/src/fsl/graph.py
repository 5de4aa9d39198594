"""Simple undirected graphs on at most 64 vertices.

Adjacency is stored as one integer bit row per vertex: bit ``u`` of
``adj[v]`` is set iff ``u`` and ``v`` are adjacent.  Vertex sets are plain
integer bit masks throughout the package.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for malformed graph construction requests."""


class Graph6Error(ValueError):
    """Raised when graph6 text cannot be decoded."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


class Graph:
    """Immutable simple graph with bit-row adjacency."""

    __slots__ = ("n", "adj")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Sequence[int], check: bool = True):
        if check:
            if not 0 <= n <= MAX_VERTICES:
                raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
            if len(adj) != n:
                raise GraphError("need exactly one adjacency row per vertex")
            full = (1 << n) - 1
            for v, row in enumerate(adj):
                if row & ~full:
                    raise GraphError(f"row {v} names a vertex >= {n}")
                if row >> v & 1:
                    raise GraphError(f"loop at vertex {v}")
                for u in iter_bits(row):
                    if not adj[u] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self):
        return self.n

    def __getstate__(self):
        return (self.n, self.adj)

    def __setstate__(self, state):
        object.__setattr__(self, "n", state[0])
        object.__setattr__(self, "adj", state[1])

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v]) if u < v]

    def neighbors(self, v: int) -> int:
        """N(v) as a mask."""
        return self.adj[v]

    def non_neighbors(self, v: int) -> int:
        """M(v): vertices other than v that are not adjacent to v."""
        return self.full & ~self.adj[v] & ~(1 << v)

    def set_neighbors(self, s: int) -> int:
        """N(X): vertices outside ``s`` with a neighbour in ``s``."""
        out = 0
        for v in iter_bits(s):
            out |= self.adj[v]
        return out & ~s

    def set_non_neighbors(self, s: int) -> int:
        """M(X): vertices outside ``s`` with no neighbour in ``s``."""
        return self.full & ~s & ~self.set_neighbors(s)


# -- vertex-set helpers -------------------------------------------------------

def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> list[int]:
    return list(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# -- construction -------------------------------------------------------------

def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, check=False)


def empty(n: int) -> Graph:
    return build(n, [])


def path(k: int) -> Graph:
    return build(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    return build(k, combinations(range(k), 2))


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Parts are laid out consecutively: part 0 gets vertices 0..parts[0]-1."""
    label = []
    for p, size in enumerate(parts):
        label += [p] * size
    n = len(label)
    return build(n, [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]])


def petersen() -> Graph:
    """Kneser graph K(5,2); vertices are the 2-subsets of {0..4} in lex order."""
    pairs = list(combinations(range(5), 2))
    return build(10, [(i, j) for i, j in combinations(range(10), 2)
                      if not set(pairs[i]) & set(pairs[j])])


def mycielski(g: Graph) -> Graph:
    """Originals 0..n-1, shadow of i at n+i (joined to N(i)), apex at 2n."""
    n = g.n
    if 2 * n + 1 > MAX_VERTICES:
        raise GraphError(f"mycielski of a {n}-vertex graph exceeds {MAX_VERTICES} vertices")
    edges = list(g.edges())
    for i in range(n):
        edges += [(n + i, u) for u in iter_bits(g.adj[i])]
        edges.append((n + i, 2 * n))
    return build(2 * n + 1, edges)


def grotzsch() -> Graph:
    """Mycielski of C5: hole 0..4, shadows 5..9 (5+i sees i-1, i+1), apex 10."""
    return mycielski(cycle(5))


def clebsch() -> Graph:
    """Folded 5-cube: 4-bit labels, adjacent iff Hamming distance is 1 or 4."""
    return build(16, [(u, v) for u, v in combinations(range(16), 2)
                      if (u ^ v).bit_count() in (1, 4)])


def bull() -> Graph:
    # triangle 0,1,2; pendants 3-0 and 4-1
    return build(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)])


def diamond() -> Graph:
    # K4 minus the edge 2-3
    return build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def paw() -> Graph:
    # triangle 0,1,2; pendant 3-0
    return build(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def p2p4() -> Graph:
    # P2 on 0,1; P4 on 2-3-4-5
    return build(6, [(0, 1), (2, 3), (3, 4), (4, 5)])


NAMED = {
    "petersen": petersen,
    "grotzsch": grotzsch,
    "f1": grotzsch,
    "clebsch": clebsch,
    "f2": clebsch,
    "bull": bull,
    "diamond": diamond,
    "paw": paw,
    "p2p4": p2p4,
    "c3": lambda: complete(3),
}
SIZED = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
}


def generate(name: str, n: int | None = None, parts: Sequence[int] | None = None) -> Graph:
    """Canonical instance of a named graph.

    Sized families (path, cycle, complete, empty) need ``n``;
    ``complete-multipartite`` needs ``parts``.
    """
    key = name.lower().replace("_", "-")
    if key in NAMED:
        return NAMED[key]()
    if key in SIZED:
        if n is None:
            raise GraphError(f"{name} needs a size")
        return SIZED[key](n)
    if key in ("complete-multipartite", "multipartite"):
        if not parts:
            raise GraphError("complete-multipartite needs part sizes")
        return complete_multipartite(parts)
    raise GraphError(f"unknown graph name {name!r}")


# -- operations ---------------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], check=False)


def induced(g: Graph, s: int) -> Graph:
    """Subgraph induced by mask ``s``, relabelled in ascending vertex order."""
    verts = members(s)
    if len(verts) == g.n:
        return g
    pos = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        row = 0
        for u in iter_bits(g.adj[v] & s):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(len(verts), rows, check=False)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    if a.n + b.n > MAX_VERTICES:
        raise GraphError("union exceeds vertex capacity")
    return Graph(a.n + b.n, list(a.adj) + [row << a.n for row in b.adj], check=False)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    if a.n + b.n > MAX_VERTICES:
        raise GraphError("join exceeds vertex capacity")
    rows = [row | (b.full << a.n) for row in a.adj]
    rows += [(row << a.n) | a.full for row in b.adj]
    return Graph(a.n + b.n, rows, check=False)


def cartesian_product(a: Graph, b: Graph) -> Graph:
    """Vertex (x, y) is numbered x * b.n + y."""
    if a.n * b.n > MAX_VERTICES:
        raise GraphError("product exceeds vertex capacity")
    edges = []
    for x in range(a.n):
        for y in range(b.n):
            here = x * b.n + y
            edges += [(here, x * b.n + z) for z in iter_bits(b.adj[y]) if z > y]
            edges += [(here, w * b.n + y) for w in iter_bits(a.adj[x]) if w > x]
    return build(a.n * b.n, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph in which vertex ``perm[v]`` plays the role of old vertex ``v``."""
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        out = 0
        for u in iter_bits(row):
            out |= 1 << perm[u]
        rows[perm[v]] = out
    return Graph(g.n, rows, check=False)


def components(g: Graph) -> list[int]:
    """Connected components as masks, ordered by their least vertex."""
    left = g.full
    out = []
    while left:
        seen = left & -left
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def component_of(g: Graph, v: int, within: int | None = None) -> int:
    allowed = g.full if within is None else within
    seen = frontier = 1 << v
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def min_degree(g: Graph) -> int:
    return min(g.degrees(), default=0)


def has_triangle(g: Graph) -> bool:
    for v, row in enumerate(g.adj):
        for u in iter_bits(row >> (v + 1) << (v + 1)):
            if row & g.adj[u]:
                return True
    return False


# -- text formats -------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    else:
        out = ["~", chr((n >> 12 & 63) + 63), chr((n >> 6 & 63) + 63), chr((n & 63) + 63)]
    adj = g.adj
    acc = nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for k, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range", k)
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise Graph6Error("unsupported or truncated size header", 0)
        n = (ord(s[1]) - 63) << 12 | (ord(s[2]) - 63) << 6 | (ord(s[3]) - 63)
        start = 4
    else:
        n = ord(s[0]) - 63
        start = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds capacity {MAX_VERTICES}", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - start != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(s) - start}",
                          min(len(s), start + need))
    rows = [0] * n
    i, j = 0, 1
    for k in range(start, len(s)):
        chunk = ord(s[k]) - 63
        for shift in range(5, -1, -1):
            if j >= n:
                if chunk >> shift & 1:
                    raise Graph6Error("nonzero padding bits", k)
                continue
            if chunk >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows, check=False)


def to_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge list needs an 'n m' header")
    n, m = int(tokens[0]), int(tokens[1])
    nums = [int(t) for t in tokens[2:]]
    if len(nums) != 2 * m:
        raise GraphError(f"header promises {m} edges, found {len(nums) / 2:g}")
    return build(n, zip(nums[::2], nums[1::2]))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
