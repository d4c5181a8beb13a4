"""The polygon model: diagonals of an (mn+2)-gon, angulations and flips.

Vertices of the polygon are labelled 1..N clockwise, N = m*n + 2.  A
diagonal is admissible when it cuts the polygon into pieces whose vertex
counts are congruent to 2 modulo m; maximal sets of pairwise noncrossing
admissible diagonals cut the polygon into n pieces of m+2 vertices each
and play the role of tilting objects.  Removing one diagonal merges two
pieces into a (2m+2)-gon inside which the removed diagonal can be traded
for m others; the exchange successor moves both endpoints one step
counterclockwise along that merged boundary.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .quiver import ColouredQuiver, mutate_procedural

ENUMERATION_BOUND = 20  # polygon size cap for the brute-force enumerators


class PolygonError(ValueError):
    pass


def fuss_catalan(n: int, m: int) -> int:
    """binom((m+1)n, n-1) / n, the number of angulations of the (mn+2)-gon."""
    if n < 1 or m < 1:
        raise PolygonError(f"need n >= 1 and m >= 1, got n={n}, m={m}")
    value, rem = divmod(math.comb((m + 1) * n, n - 1), n)
    if rem:
        raise PolygonError("Fuss-Catalan quotient is not integral")  # unreachable
    return value


def _pieces_of(N: int, diagonals) -> tuple[tuple[int, ...], ...]:
    """Cut the polygon 1..N along noncrossing diagonals (pairs with i < j).

    Returns the boundary chain of each piece in clockwise order.  Works for
    any noncrossing set, not only maximal ones.
    """
    partners: dict[int, list[int]] = {}
    for a, b in diagonals:
        partners.setdefault(a, []).append(b)
    for v in partners:
        partners[v].sort(reverse=True)

    chains = []

    def walk(lo: int, hi: int) -> None:
        chain = [lo]
        spans = []
        s = lo
        while s != hi:
            nxt = s + 1
            for t in partners.get(s, ()):
                if t > hi or (s == lo and t == hi):
                    continue  # outside this run, or the run's own closing side
                nxt = t
                break
            chain.append(nxt)
            if nxt - s > 1:
                spans.append((s, nxt))
            s = nxt
        chains.append(tuple(chain))
        for a, b in spans:
            walk(a, b)

    walk(1, N)
    return tuple(chains)


@dataclass(frozen=True)
class Polygon:
    """The (m*n + 2)-gon whose admissible diagonals model rank n-1."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1:
            raise PolygonError(f"m must be >= 1, got {self.m}")
        if self.n < 2:
            raise PolygonError(f"n must be >= 2, got {self.n}")

    @property
    def vertex_count(self) -> int:
        return self.m * self.n + 2

    @property
    def rank(self) -> int:
        return self.n - 1

    def gap(self, i: int, j: int) -> int:
        """Clockwise distance from i to j."""
        return (j - i) % self.vertex_count

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.vertex_count:
            raise PolygonError(f"vertex {v!r} outside 1..{self.vertex_count}")

    def diagonal(self, i: int, j: int) -> tuple[int, int]:
        """Normalised admissible diagonal with the smaller label first."""
        if not self.is_m_diagonal(i, j):
            raise PolygonError(f"({i},{j}) is not an admissible diagonal of {self}")
        return (i, j) if i < j else (j, i)

    def is_m_diagonal(self, i: int, j: int) -> bool:
        """True when the chord (i, j) cuts off pieces of m*t + 2 vertices."""
        self._check_vertex(i)
        self._check_vertex(j)
        if i == j:
            return False
        g = self.gap(i, j)
        if g == 1 or g == self.vertex_count - 1:
            return False  # boundary edge
        return (g - 1) % self.m == 0

    def all_m_diagonals(self) -> tuple[tuple[int, int], ...]:
        N = self.vertex_count
        out = set()
        for i in range(1, N + 1):
            for g in range(self.m + 1, N - 1, self.m):
                j = (i - 1 + g) % N + 1
                out.add((i, j) if i < j else (j, i))
        return tuple(sorted(out))

    def crosses(self, d1: tuple[int, int], d2: tuple[int, int]) -> bool:
        """Interior intersection; sharing an endpoint does not count."""
        a, b = self.diagonal(*d1)
        c, d = self.diagonal(*d2)
        if a in (c, d) or b in (c, d):
            return False
        span = self.gap(a, b)
        inside = sum(1 for x in (c, d) if 0 < self.gap(a, x) < span)
        return inside == 1

    # --- cached per-polygon tables -------------------------------------

    @cached_property
    def _diagonal_index(self) -> dict:
        return {d: i for i, d in enumerate(self.all_m_diagonals())}

    @cached_property
    def _compat_masks(self) -> tuple[int, ...]:
        diags = self.all_m_diagonals()
        D = len(diags)
        masks = [0] * D
        for a in range(D):
            for b in range(a + 1, D):
                if not self.crosses(diags[a], diags[b]):
                    masks[a] |= 1 << b
                    masks[b] |= 1 << a
        return tuple(masks)

    def _normalise_set(self, diagonals) -> frozenset:
        """Normalise, reject non-admissible members and crossing pairs."""
        index = self._diagonal_index
        norm = set()
        for d in diagonals:
            if len(d) != 2:
                raise PolygonError(f"malformed diagonal {d!r}")
            i, j = d
            key = (i, j) if i < j else (j, i)
            if key not in index:
                raise PolygonError(f"({i},{j}) is not an admissible diagonal of {self}")
            norm.add(key)
        compat = self._compat_masks
        mask = 0
        for d in norm:
            mask |= 1 << index[d]
        for d in norm:
            bit = 1 << index[d]
            rest = mask & ~bit
            if compat[index[d]] & rest != rest:
                other = next(e for e in norm if e != d and self.crosses(d, e))
                raise PolygonError(f"diagonals {d} and {other} cross")
        return frozenset(norm)

    # --- enumeration ----------------------------------------------------

    def _check_enumeration_bound(self) -> None:
        if self.vertex_count > ENUMERATION_BOUND:
            raise PolygonError(
                f"{self.vertex_count}-gon exceeds the enumeration bound {ENUMERATION_BOUND}"
            )

    def _angulation_tuples(self):
        """Iterate every angulation as a tuple of diagonals, each exactly once.

        Recursive piece decomposition: pick the piece containing the closing
        side of the current boundary run, then fill the runs behind each of
        its sides.  Output-linear, no isomorphism quotient involved.
        """
        self._check_enumeration_bound()
        m = self.m

        def compositions(total, parts):
            if parts == 1:
                yield (total,)
                return
            for first in range(total + 1):
                for rest in compositions(total - first, parts - 1):
                    yield (first,) + rest

        def fill(lo, hi):
            if hi - lo == 1:
                yield ()
                return
            units = (hi - lo - 1) // m
            for comp in compositions(units - 1, m + 1):
                cuts = [lo]
                for part in comp:
                    cuts.append(cuts[-1] + 1 + m * part)
                sides = [(cuts[t], cuts[t + 1]) for t in range(m + 1)]
                own = tuple(s for s in sides if s[1] - s[0] > 1)
                yield from combine(sides, 0, own)

        def combine(sides, idx, acc):
            if idx == len(sides):
                yield acc
                return
            a, b = sides[idx]
            if b - a == 1:
                yield from combine(sides, idx + 1, acc)
                return
            for sub in fill(a, b):
                yield from combine(sides, idx + 1, acc + sub)

        return fill(1, self.vertex_count)

    def angulations(self):
        """Iterate every angulation's diagonal set, each exactly once."""
        return (frozenset(diags) for diags in self._angulation_tuples())

    def count_angulations(self) -> int:
        """Count by running the exhaustive enumerator, no closed formula."""
        return sum(1 for _ in self._angulation_tuples())

    def maximal_noncrossing_sets(self) -> list[frozenset]:
        """All inclusion-maximal noncrossing diagonal sets (Bron-Kerbosch).

        Independent of the piece-recursion enumerator and makes no
        assumption on the size of maximal sets.
        """
        self._check_enumeration_bound()
        diags = self.all_m_diagonals()
        compat = self._compat_masks
        found = []

        def expand(r: int, p: int, x: int) -> None:
            if not p and not x:
                found.append(r)
                return
            scan = p | x
            pivot, best = -1, -1
            while scan:
                bit = scan & -scan
                u = bit.bit_length() - 1
                score = (p & compat[u]).bit_count()
                if score > best:
                    pivot, best = u, score
                scan ^= bit
            ext = p & ~compat[pivot]
            while ext:
                bit = ext & -ext
                v = bit.bit_length() - 1
                expand(r | bit, p & compat[v], x & compat[v])
                p ^= bit
                x |= bit
                ext ^= bit

        expand(0, (1 << len(diags)) - 1, 0)
        sets = []
        for mask in found:
            members = []
            while mask:
                bit = mask & -mask
                members.append(diags[bit.bit_length() - 1])
                mask ^= bit
            sets.append(frozenset(members))
        return sets

    def completions(self, partial) -> list[tuple[int, int]]:
        """All diagonals extending an almost-complete noncrossing set.

        ``partial`` must hold n-2 pairwise noncrossing diagonals.  Cutting
        along them leaves exactly one (2m+2)-gon piece; the valid additions
        are precisely its chords splitting it into two (m+2)-gons, i.e.
        chords between boundary positions m+1 steps apart.
        """
        chosen = self._normalise_set(partial)
        if len(chosen) != self.n - 2:
            raise PolygonError(f"expected {self.n - 2} diagonals, got {len(chosen)}")
        out = []
        for chain in _pieces_of(self.vertex_count, chosen):
            if len(chain) == self.m + 2:
                continue
            # the single merged piece, with 2m+2 boundary vertices
            for s in range(self.m + 1):
                x, y = chain[s], chain[s + self.m + 1]
                out.append((x, y) if x < y else (y, x))
        return sorted(out)

    def angulation(self, diagonals) -> "Angulation":
        return Angulation.of(self, diagonals)

    def fan_angulation(self) -> "Angulation":
        """All diagonals from vertex 1: (1, t*m + 2) for t = 1..n-1."""
        return Angulation.of(self, [(1, t * self.m + 2) for t in range(1, self.n)])

    def translation_quiver(self) -> "TranslationQuiver":
        diags = self.all_m_diagonals()
        dset = set(diags)
        N = self.vertex_count
        m = self.m

        def shift(v, d):
            return (v - 1 + d) % N + 1

        arrows = []
        for (i, j) in diags:
            for a, b in ((i, shift(j, m)), (shift(i, m), j)):
                norm = (a, b) if a < b else (b, a)
                if norm in dset:
                    arrows.append(((i, j), norm))
        return TranslationQuiver(self, diags, tuple(sorted(arrows)))

    def facet_checks(self) -> "FacetReport":
        """Measure facet sizes and ridge link counts of the noncrossing complex."""
        facets = self.maximal_noncrossing_sets()
        index = self._diagonal_index
        sizes = sorted({len(f) for f in facets})
        ridge_counts: dict = {}
        for f in facets:
            mask = 0
            for d in f:
                mask |= 1 << index[d]
            for d in f:
                ridge = mask & ~(1 << index[d])
                ridge_counts[ridge] = ridge_counts.get(ridge, 0) + 1
        links = sorted(set(ridge_counts.values()))
        return FacetReport(
            polygon=self,
            facet_count=len(facets),
            facet_sizes=tuple(sizes),
            expected_size=self.n - 1,
            link_counts=tuple(links),
            expected_link=self.m + 1,
        )


@dataclass(frozen=True)
class FacetReport:
    polygon: Polygon
    facet_count: int
    facet_sizes: tuple
    expected_size: int
    link_counts: tuple
    expected_link: int

    @property
    def sizes_ok(self) -> bool:
        return self.facet_sizes == (self.expected_size,)

    @property
    def links_ok(self) -> bool:
        return self.link_counts == (self.expected_link,)

    @property
    def ok(self) -> bool:
        return self.sizes_ok and self.links_ok

    def summary(self) -> str:
        size = self.facet_sizes[0] if len(self.facet_sizes) == 1 else f"mixed{list(self.facet_sizes)}"
        link = self.link_counts[0] if len(self.link_counts) == 1 else f"mixed{list(self.link_counts)}"
        return f"facets={self.facet_count} size={size} link={link}"


@dataclass(frozen=True)
class Angulation:
    """A maximal set of pairwise noncrossing admissible diagonals.

    ``Angulation.of`` validates; the bare constructor is reserved for
    transitions already known to be legal (single exchanges).
    """

    polygon: Polygon
    diagonals: frozenset

    @staticmethod
    def of(polygon: Polygon, diagonals) -> "Angulation":
        norm = polygon._normalise_set(diagonals)
        if len(norm) != polygon.n - 1:
            raise PolygonError(
                f"an angulation of the {polygon.vertex_count}-gon has {polygon.n - 1} diagonals, "
                f"got {len(norm)}"
            )
        ang = Angulation(polygon, norm)
        bad = [chain for chain in ang.pieces() if len(chain) != polygon.m + 2]
        if bad:
            raise PolygonError(f"piece {bad[0]} is not an (m+2)-gon")  # unreachable for maximal sets
        return ang

    @cached_property
    def _chains(self) -> tuple:
        return _pieces_of(self.polygon.vertex_count, self.diagonals)

    def pieces(self) -> tuple:
        """Boundary chains of the m+2-gon pieces, clockwise."""
        return self._chains

    @cached_property
    def _side_pieces(self) -> dict:
        # each diagonal borders exactly two pieces
        where: dict = {}
        for chain in self._chains:
            L = len(chain)
            for t in range(L):
                a, b = chain[t], chain[(t + 1) % L]
                side = (a, b) if a < b else (b, a)
                if side in self.diagonals:
                    where.setdefault(side, []).append(chain)
        return where

    def _require_member(self, d) -> tuple[int, int]:
        d = tuple(d)
        if d in self.diagonals:  # already normalised
            return d
        d = self.polygon.diagonal(*d)
        if d not in self.diagonals:
            raise PolygonError(f"diagonal {d} is not part of the angulation")
        return d

    def merged_piece(self, d) -> tuple[int, ...]:
        """Boundary cycle of the (2m+2)-gon obtained by deleting ``d``."""
        d = self._require_member(d)
        first, second = self._side_pieces[d]

        def open_path(chain):
            # the piece cycle minus its d edge; adjacent pieces traverse the
            # shared chord in opposite directions, so the paths concatenate
            L = len(chain)
            for t in range(L):
                if {chain[t], chain[(t + 1) % L]} == set(d):
                    return [chain[(t + 1 + s) % L] for s in range(L)]
            raise PolygonError(f"{d} is not a side of {chain}")  # unreachable

        p = open_path(first)
        q = open_path(second)
        merged = p + q[1:-1]
        lo = merged.index(min(merged))
        return tuple(merged[lo:] + merged[:lo])

    def next_complement(self, d) -> tuple[int, int]:
        """Successor of ``d`` in its exchange cycle.

        Both endpoints move to their clockwise predecessor on the merged
        (2m+2)-gon boundary; iterating m+1 times returns ``d``.
        """
        d = self._require_member(d)
        merged = self.merged_piece(d)
        pos = {v: t for t, v in enumerate(merged)}
        L = len(merged)
        x = merged[(pos[d[0]] - 1) % L]
        y = merged[(pos[d[1]] - 1) % L]
        return (x, y) if x < y else (y, x)

    def exchange(self, d) -> "Angulation":
        """Swap ``d`` for its exchange successor."""
        d = self._require_member(d)
        return Angulation(self.polygon, (self.diagonals - {d}) | {self.next_complement(d)})

    def exchange_cycle(self, d) -> list[tuple[int, int]]:
        """The m successors of ``d`` in exchange order, then ``d`` itself.

        The merged (2m+2)-gon does not change along the cycle, so all steps
        walk the same boundary; iterating :meth:`exchange` step by step gives
        the same sequence (the test suite compares the two routes).
        """
        d = self._require_member(d)
        merged = self.merged_piece(d)
        pos = {v: t for t, v in enumerate(merged)}
        L = len(merged)
        x, y = pos[d[0]], pos[d[1]]
        out = []
        for _ in range(self.polygon.m + 1):
            x = (x - 1) % L
            y = (y - 1) % L
            a, b = merged[x], merged[y]
            out.append((a, b) if a < b else (b, a))
        return out

    def flips(self, d) -> list[tuple[int, int]]:
        """The m alternatives to ``d``, listed in exchange order."""
        return self.exchange_cycle(d)[:-1]

    def flip(self, d, replacement) -> "Angulation":
        d = self._require_member(d)
        replacement = self.polygon.diagonal(*replacement)
        if replacement not in set(self.flips(d)):
            raise PolygonError(f"{replacement} is not a flip candidate for {d}")
        return Angulation(self.polygon, (self.diagonals - {d}) | {replacement})

    def to_json_dict(self) -> dict:
        return {
            "m": self.polygon.m,
            "n": self.polygon.n,
            "diagonals": [list(d) for d in sorted(self.diagonals)],
        }

    @staticmethod
    def from_json_dict(data) -> "Angulation":
        if not isinstance(data, dict):
            raise PolygonError("angulation document must be a JSON object")
        try:
            polygon = Polygon(data["m"], data["n"])
            raw = data["diagonals"]
        except (KeyError, TypeError) as exc:
            raise PolygonError(f"malformed angulation document: {exc}") from exc
        if not isinstance(raw, list):
            raise PolygonError("diagonals must be a list of pairs")
        diags = []
        for entry in raw:
            if not isinstance(entry, list) or len(entry) != 2:
                raise PolygonError(f"malformed diagonal entry {entry!r}")
            diags.append((entry[0], entry[1]))
        return Angulation.of(polygon, diags)


@dataclass(frozen=True)
class TranslationQuiver:
    """Quiver on all admissible diagonals together with its translation."""

    polygon: Polygon
    vertices: tuple
    arrows: tuple  # ((src, tgt), ...)

    def tau(self, d) -> tuple[int, int]:
        N = self.polygon.vertex_count
        m = self.polygon.m
        a = (d[0] - 1 - m) % N + 1
        b = (d[1] - 1 - m) % N + 1
        return (a, b) if a < b else (b, a)

    def tau_orbits(self) -> list[tuple]:
        seen = set()
        orbits = []
        for d in self.vertices:
            if d in seen:
                continue
            orbit = [d]
            seen.add(d)
            cur = self.tau(d)
            while cur != d:
                orbit.append(cur)
                seen.add(cur)
                cur = self.tau(cur)
            orbits.append(tuple(orbit))
        return orbits

    @cached_property
    def _arrow_counts(self) -> dict:
        counts: dict = {}
        for a in self.arrows:
            counts[a] = counts.get(a, 0) + 1
        return counts

    def arrow_count(self, src, tgt) -> int:
        return self._arrow_counts.get((src, tgt), 0)

    def has_mesh_property(self) -> bool:
        for x in self.vertices:
            for y in self.vertices:
                if self.arrow_count(x, y) != self.arrow_count(self.tau(y), x):
                    return False
        return True


def diagonal_label(d) -> str:
    return f"{d[0]},{d[1]}"


def label_to_diagonal(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return (int(a), int(b))
    except (ValueError, AttributeError) as exc:
        raise PolygonError(f"malformed diagonal label {text!r}") from exc


def fan_quiver(p: Polygon) -> ColouredQuiver:
    """The coloured quiver of the fan angulation at vertex 1.

    The fan diagonals form a linear chain; consecutive ones bound a common
    piece.  The arrow of colour 0 points from the shorter diagonal to the
    longer one, the dual arrow carries colour m (orientation pinned by the
    exchange fixtures in the test suite).
    """
    fan = [(1, t * p.m + 2) for t in range(1, p.n)]
    labels = [diagonal_label(d) for d in fan]
    arrows = []
    for t in range(len(fan) - 1):
        arrows.append((labels[t], labels[t + 1], 0, 1))
        arrows.append((labels[t + 1], labels[t], p.m, 1))
    return ColouredQuiver.build(p.m, tuple(labels), arrows)


def coloured_quiver_of_angulation(target: Angulation, base: Angulation,
                                  base_quiver: ColouredQuiver, path) -> ColouredQuiver:
    """Fold mutations along an exchange path from ``base`` to ``target``.

    ``path`` is a sequence of diagonals; each step exchanges that diagonal
    for its successor and mutates the quiver at the matching vertex, whose
    label then follows the new diagonal.  The result depends only on
    ``target``, never on the chosen path.
    """
    ang, quiver = base, base_quiver
    for d in path:
        d = ang._require_member(d)
        succ = ang.next_complement(d)
        quiver = mutate_procedural(quiver, diagonal_label(d)).rename_vertex(
            diagonal_label(d), diagonal_label(succ))
        ang = Angulation(ang.polygon, (ang.diagonals - {d}) | {succ})
    if ang.diagonals != target.diagonals:
        raise PolygonError("exchange path does not reach the target angulation")
    return quiver


def exchange_path(base: Angulation, target: Angulation) -> tuple:
    """A sequence of single exchanges leading from ``base`` to ``target``.

    Breadth-first search over exchange moves; every flip is a run of at
    most m single exchanges, so the whole flip graph is reachable.
    """
    if base.polygon != target.polygon:
        raise PolygonError("angulations live on different polygons")
    start, goal = base.diagonals, target.diagonals
    if start == goal:
        return ()
    parents: dict = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        ang = Angulation(base.polygon, cur)
        for d in sorted(cur):
            succ = ang.next_complement(d)
            nxt = (cur - {d}) | {succ}
            if nxt in parents:
                continue
            parents[nxt] = (cur, d)
            if nxt == goal:
                steps = []
                probe = nxt
                while parents[probe] is not None:
                    prev, moved = parents[probe]
                    steps.append(moved)
                    probe = prev
                return tuple(reversed(steps))
            queue.append(nxt)
    raise PolygonError("target angulation unreachable")  # exchange is transitive


def quiver_of_angulation(a: Angulation) -> ColouredQuiver:
    """Coloured quiver of an angulation, folded from the fan base."""
    base = a.polygon.fan_angulation()
    return coloured_quiver_of_angulation(a, base, fan_quiver(a.polygon),
                                         exchange_path(base, a))


def random_exchange_walk(a: Angulation, length: int, rng: random.Random):
    """Iterate (diagonal, successor, new angulation) single-exchange steps."""
    cur = a
    for _ in range(length):
        d = rng.choice(sorted(cur.diagonals))
        succ = cur.next_complement(d)
        cur = Angulation(cur.polygon, (cur.diagonals - {d}) | {succ})
        yield d, succ, cur
