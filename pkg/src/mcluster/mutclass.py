"""Mutation classes of coloured quivers up to isomorphism.

Isomorphism here means a vertex bijection preserving arrows and colours;
colours themselves are never permuted.  The canonical key of a quiver is
the serialization of the relabelling that lexicographically minimises the
sorted arrow list, computed by exhaustive search within blocks of an
iteratively refined vertex partition (the refinement is label-free, so the
restriction is exact).
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from itertools import permutations, product

from .quiver import ColouredQuiver, PlainQuiver, QuiverError, gabriel_quiver, mutate_procedural

DEFAULT_CANONICAL_BOUND = 10


class TooManyVerticesError(QuiverError):
    pass


def _refined_blocks(Q: ColouredQuiver) -> list[list]:
    """Partition vertices into blocks no isomorphism can mix.

    Starts from per-vertex arrow profiles and refines with neighbour ranks
    until stable.  Block order depends only on profile values, never on
    labels, so isomorphic quivers produce matching block sequences.
    """
    verts = list(Q.vertices)

    def rank(profiles):
        order = sorted(set(profiles.values()))
        index = {p: r for r, p in enumerate(order)}
        return {v: index[profiles[v]] for v in verts}

    prof = {}
    for v in verts:
        outs = tuple(sorted((c, k) for i, j, c, k in Q.arrows if i == v))
        ins = tuple(sorted((c, k) for i, j, c, k in Q.arrows if j == v))
        prof[v] = (outs, ins)
    ranks = rank(prof)
    while True:
        nxt = {}
        for v in verts:
            outs = tuple(sorted((ranks[j], c, k) for i, j, c, k in Q.arrows if i == v))
            ins = tuple(sorted((ranks[i], c, k) for i, j, c, k in Q.arrows if j == v))
            nxt[v] = (ranks[v], outs, ins)
        nranks = rank(nxt)
        if len(set(nranks.values())) == len(set(ranks.values())):
            ranks = nranks
            break
        ranks = nranks
    blocks: dict[int, list] = {}
    for v in verts:
        blocks.setdefault(ranks[v], []).append(v)
    return [blocks[r] for r in sorted(blocks)]


def canonical_form(Q: ColouredQuiver, max_vertices: int = DEFAULT_CANONICAL_BOUND) -> ColouredQuiver:
    """The isomorphic copy of ``Q`` on vertices 0..n-1 with minimal arrows."""
    if Q.n > max_vertices:
        raise TooManyVerticesError(f"refusing to canonicalise {Q.n} vertices (bound {max_vertices})")
    blocks = _refined_blocks(Q)
    offsets = []
    pos = 0
    for b in blocks:
        offsets.append(pos)
        pos += len(b)
    touched = {v for i, j, c, k in Q.arrows for v in (i, j)}
    # permuting vertices without arrows never changes the arrow list
    choices = [[tuple(b)] if not any(v in touched for v in b) else list(permutations(b))
               for b in blocks]
    best = None
    for combo in product(*choices):
        label = {}
        for placed, off in zip(combo, offsets):
            for idx, v in enumerate(placed):
                label[v] = off + idx
        arr = tuple(sorted((label[i], label[j], c, k) for i, j, c, k in Q.arrows))
        if best is None or arr < best:
            best = arr
    return ColouredQuiver.build(Q.m, tuple(range(Q.n)), best)


def canonical_key(Q: ColouredQuiver, max_vertices: int = DEFAULT_CANONICAL_BOUND) -> bytes:
    """Canonical serialization: equal byte strings iff isomorphic quivers."""
    return canonical_form(Q, max_vertices).to_json().encode("ascii")


def quiver_from_key(key: bytes) -> ColouredQuiver:
    return ColouredQuiver.from_json(key.decode("ascii"))


def plain_canonical_key(q: PlainQuiver, max_vertices: int = DEFAULT_CANONICAL_BOUND) -> bytes:
    # reuse the coloured machinery with everything coloured 0
    embedded = ColouredQuiver.build(0, q.vertices, ((i, j, 0, k) for i, j, k in q.arrows))
    return b"plain:" + canonical_key(embedded, max_vertices)


@dataclass(frozen=True)
class GraphClass:
    """Classification of a connected underlying multigraph."""

    kind: str  # "dynkin" | "extended" | "small" | "other"
    family: str | None = None  # "A", "D" or "E"
    rank: int | None = None

    @property
    def label(self) -> str:
        if self.kind == "dynkin":
            return f"{self.family}{self.rank}"
        if self.kind == "extended":
            return f"{self.family}~{self.rank}"
        return self.kind


def _underlying_edges(q: PlainQuiver) -> Counter:
    edges: Counter = Counter()
    for i, j, k in q.arrows:
        edges[frozenset((i, j))] += k
    return edges


def _is_connected(q: PlainQuiver) -> bool:
    adj = {v: set() for v in q.vertices}
    for i, j, k in q.arrows:
        adj[i].add(j)
        adj[j].add(i)
    seen = {q.vertices[0]}
    stack = [q.vertices[0]]
    while stack:
        for u in adj[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == q.n


def classify_graph(q: PlainQuiver) -> GraphClass:
    """Classify the underlying multigraph as Dynkin, extended Dynkin, small or other."""
    if not _is_connected(q):
        raise QuiverError("classification requires a connected quiver")
    n = q.n
    edges = _underlying_edges(q)
    total = sum(edges.values())

    if n == 1:
        return GraphClass("dynkin", "A", 1)
    if n == 2:
        if total == 1:
            return GraphClass("dynkin", "A", 2)
        return GraphClass("small")
    if any(k >= 2 for k in edges.values()):
        return GraphClass("other")

    deg = Counter()
    adj = {v: [] for v in q.vertices}
    for e in edges:
        a, b = tuple(e)
        deg[a] += 1
        deg[b] += 1
        adj[a].append(b)
        adj[b].append(a)

    if total == n:  # exactly one cycle
        if all(deg[v] == 2 for v in q.vertices):
            return GraphClass("extended", "A", n - 1)
        return GraphClass("other")
    if total != n - 1:
        return GraphClass("other")

    # tree shapes
    maxdeg = max(deg.values())
    if maxdeg <= 2:
        return GraphClass("dynkin", "A", n)
    if maxdeg == 4:
        if n == 5 and sorted(deg.values()) == [1, 1, 1, 1, 4]:
            return GraphClass("extended", "D", 4)
        return GraphClass("other")
    if maxdeg > 4:
        return GraphClass("other")

    branch = [v for v in q.vertices if deg[v] == 3]
    if len(branch) == 1:
        b = branch[0]
        arms = []
        for start in adj[b]:
            length, prev, cur = 1, b, start
            while deg[cur] == 2:
                nxt = [u for u in adj[cur] if u != prev][0]
                prev, cur, length = cur, nxt, length + 1
            arms.append(length)
        arms = tuple(sorted(arms))
        if arms[0] == 1 and arms[1] == 1:
            return GraphClass("dynkin", "D", n)
        if arms == (1, 2, 2):
            return GraphClass("dynkin", "E", 6)
        if arms == (1, 2, 3):
            return GraphClass("dynkin", "E", 7)
        if arms == (1, 2, 4):
            return GraphClass("dynkin", "E", 8)
        if arms == (2, 2, 2):
            return GraphClass("extended", "E", 6)
        if arms == (1, 3, 3):
            return GraphClass("extended", "E", 7)
        if arms == (1, 2, 5):
            return GraphClass("extended", "E", 8)
        return GraphClass("other")
    if len(branch) == 2:
        # a path whose two ends each sprout two leaves
        if all(sum(1 for u in adj[b] if deg[u] == 1) == 2 for b in branch):
            return GraphClass("extended", "D", n - 1)
        return GraphClass("other")
    return GraphClass("other")


FINITE_KINDS = {"dynkin", "extended", "small"}


def is_finite_class(q: PlainQuiver, m: int) -> bool:
    """Whether the coloured mutation class of the seed on ``q`` is finite.

    Holds exactly when the underlying graph is Dynkin or extended Dynkin,
    or the quiver has at most two vertices; independent of m >= 1.
    """
    if m < 1:
        raise QuiverError(f"requires m >= 1, got {m}")
    if not q.is_acyclic():
        raise QuiverError("finiteness test requires an acyclic seed")
    return classify_graph(q).kind in FINITE_KINDS


@dataclass(frozen=True)
class MutationClass:
    m: int
    seed: ColouredQuiver  # canonical form of the starting quiver
    keys: frozenset
    complete: bool
    explored: int  # mutation applications performed
    limit: int

    @property
    def size(self) -> int:
        return len(self.keys)


def enumerate_class(Q: ColouredQuiver, limit: int,
                    max_vertices: int = DEFAULT_CANONICAL_BOUND) -> MutationClass:
    """Breadth-first closure of ``Q`` under mutation at every vertex.

    Deduplication is by canonical key; the budget counts individual
    (quiver, vertex) mutation applications.  Truncation only clears the
    ``complete`` flag, it is not an error.
    """
    if limit < 1:
        raise QuiverError(f"limit must be >= 1, got {limit}")
    seed = canonical_form(Q, max_vertices)
    keys = {canonical_key(seed, max_vertices)}
    frontier = deque([seed])
    explored = 0
    exhausted = False
    while frontier and not exhausted:
        cur = frontier.popleft()
        for v in cur.vertices:
            if explored == limit:
                exhausted = True
                break
            explored += 1
            key = canonical_key(mutate_procedural(cur, v), max_vertices)
            if key not in keys:
                keys.add(key)
                frontier.append(quiver_from_key(key))
    complete = not exhausted and not frontier
    return MutationClass(Q.m, seed, frozenset(keys), complete, explored, limit)


def gabriel_images(cls: MutationClass) -> frozenset:
    """Canonical keys of the colour-0 quivers across a complete class."""
    if not cls.complete:
        raise QuiverError("gabriel images need a complete mutation class")
    out = set()
    for key in cls.keys:
        out.add(plain_canonical_key(gabriel_quiver(quiver_from_key(key))))
    return frozenset(out)


def save_class(cls: MutationClass, path) -> None:
    """Write header line plus one canonical key per line, sorted."""
    header = {
        "seed": cls.seed.to_json_dict(),
        "m": cls.m,
        "complete": cls.complete,
        "explored": cls.explored,
        "limit": cls.limit,
    }
    lines = [json.dumps(header, separators=(",", ":"))]
    lines.extend(sorted(k.decode("ascii") for k in cls.keys))
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_class(path) -> MutationClass:
    with open(path, encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise QuiverError("empty mutation class file")
    header = json.loads(lines[0])
    seed = ColouredQuiver.from_json_dict(header["seed"])
    keys = frozenset(line.encode("ascii") for line in lines[1:] if line)
    return MutationClass(header["m"], seed, keys, header["complete"],
                         header["explored"], header["limit"])


def dynkin_plain_quiver(name: str) -> PlainQuiver:
    """Build an oriented Dynkin quiver from a name like ``A4``, ``D5`` or ``E6``.

    Paths are oriented along increasing labels; D and E types point away
    from the branch vertex.  Any orientation of the same tree would do for
    class enumeration, this one is just deterministic.
    """
    name = name.strip().upper()
    if len(name) < 2 or name[0] not in "ADE":
        raise QuiverError(f"unrecognised Dynkin name {name!r}")
    try:
        rank = int(name[1:])
    except ValueError as exc:
        raise QuiverError(f"unrecognised Dynkin name {name!r}") from exc
    letter = name[0]
    if letter == "A":
        if rank < 1:
            raise QuiverError("A requires rank >= 1")
        verts = list(range(1, rank + 1))
        arrows = [(i, i + 1, 1) for i in range(1, rank)]
        return PlainQuiver.build(verts, arrows)
    if letter == "D":
        if rank < 4:
            raise QuiverError("D requires rank >= 4")
        verts = list(range(1, rank + 1))
        arrows = [(i, i + 1, 1) for i in range(1, rank - 1)]
        arrows.append((rank - 2, rank, 1))
        return PlainQuiver.build(verts, arrows)
    if rank not in (6, 7, 8):
        raise QuiverError("E requires rank 6, 7 or 8")
    # path 1..rank-1 with the last vertex hanging off vertex 3
    verts = list(range(1, rank + 1))
    arrows = [(i, i + 1, 1) for i in range(1, rank - 1)]
    arrows.append((3, rank, 1))
    return PlainQuiver.build(verts, arrows)
