"""Coloured multi-quivers and the mutation rules acting on them.

Arrows carry a colour in {0, ..., m}.  The quiver attached to a tilting
object is loopless, locally monochromatic (for each ordered vertex pair all
arrows share one colour) and satisfies the duality q_ij(c) = q_ji(m-c).
Mutation at a vertex is implemented twice over: as a three-step rewriting
procedure and as a closed multiplicity formula.  The two are independent
code paths and the test suite insists they agree everywhere.  Classical
arrow-count mutation of plain quivers is included; for m = 1 it is the
shadow of coloured mutation on the colour-0 arrows.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable

Vertex = Hashable


class QuiverError(ValueError):
    """Structurally invalid quiver data or an illegal operation."""


class UnknownVertexError(QuiverError):
    pass


class InvalidQuiverError(QuiverError):
    """Mutation requested on a quiver failing the tilting-quiver checks."""


def _label_key(v):
    # total order over mixed int/str vertex labels, for stable sorting
    if isinstance(v, int) and not isinstance(v, bool):
        return (0, v, "")
    if isinstance(v, str):
        return (1, 0, v)
    return (2, 0, repr(v))


def _arrow_key(arrow):
    i, j, c = arrow[0], arrow[1], arrow[2]
    return (_label_key(i), _label_key(j), c)


@dataclass(frozen=True, eq=False)
class ColouredQuiver:
    """A finite multi-quiver whose arrows are coloured 0..m.

    ``arrows`` holds the aggregated multiset ((src, tgt, colour, mult), ...)
    sorted by (src, tgt, colour).  Use :meth:`build` to construct; it checks
    colour ranges, rejects loops and merges duplicate arrow entries.
    """

    m: int
    vertices: tuple
    arrows: tuple

    @staticmethod
    def build(m: int, vertices: Iterable[Vertex], arrows: Iterable[tuple] = ()) -> "ColouredQuiver":
        if m < 0:
            raise QuiverError(f"colour parameter must be non-negative, got {m}")
        verts = tuple(vertices)
        if not verts:
            raise QuiverError("a quiver needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise QuiverError("duplicate vertex labels")
        vset = set(verts)
        agg: Counter = Counter()
        for arrow in arrows:
            if len(arrow) == 3:
                (i, j, c), k = arrow, 1
            elif len(arrow) == 4:
                i, j, c, k = arrow
            else:
                raise QuiverError(f"arrow entries take 3 or 4 fields, got {arrow!r}")
            if i not in vset or j not in vset:
                raise UnknownVertexError(f"arrow {arrow!r} uses an unknown vertex")
            if i == j:
                raise QuiverError(f"loop at vertex {i!r} is not allowed")
            if not 0 <= c <= m:
                raise QuiverError(f"colour {c} out of range 0..{m}")
            if k < 0:
                raise QuiverError(f"negative multiplicity in {arrow!r}")
            if k:
                agg[(i, j, c)] += k
        packed = tuple(sorted(((i, j, c, k) for (i, j, c), k in agg.items()), key=_arrow_key))
        return ColouredQuiver(m, verts, packed)

    # equality ignores the listed order of vertices: two quivers are the
    # same labelled object when they have equal vertex sets and arrow
    # multisets (the arrows tuple is already canonically sorted)
    def __eq__(self, other):
        if not isinstance(other, ColouredQuiver):
            return NotImplemented
        return (self.m, set(self.vertices), self.arrows) == (other.m, set(other.vertices), other.arrows)

    def __hash__(self):
        return hash((self.m, frozenset(self.vertices), self.arrows))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _mult(self) -> dict:
        return {(i, j, c): k for i, j, c, k in self.arrows}

    def mult(self, i, j, c) -> int:
        """Number of arrows i -> j of colour c."""
        return self._mult.get((i, j, c), 0)

    def arrows_from(self, v):
        return tuple(a for a in self.arrows if a[0] == v)

    def arrows_into(self, v):
        return tuple(a for a in self.arrows if a[1] == v)

    def relabel(self, mapping: dict) -> "ColouredQuiver":
        """Rename vertices through ``mapping`` (labels absent stay put)."""
        verts = tuple(mapping.get(v, v) for v in self.vertices)
        arrows = ((mapping.get(i, i), mapping.get(j, j), c, k) for i, j, c, k in self.arrows)
        return ColouredQuiver.build(self.m, verts, arrows)

    def rename_vertex(self, old, new) -> "ColouredQuiver":
        if old not in set(self.vertices):
            raise UnknownVertexError(f"unknown vertex {old!r}")
        return self.relabel({old: new})

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "vertices": list(self.vertices),
            "arrows": [
                {"from": i, "to": j, "colour": c, "mult": k}
                for i, j, c, k in self.arrows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @staticmethod
    def from_json_dict(data) -> "ColouredQuiver":
        if not isinstance(data, dict):
            raise QuiverError("quiver document must be a JSON object")
        try:
            m = data["m"]
            vertices = data["vertices"]
            arrows = data["arrows"]
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"missing quiver field: {exc}") from exc
        if not isinstance(m, int) or not isinstance(vertices, list) or not isinstance(arrows, list):
            raise QuiverError("malformed quiver fields")
        packed = []
        for entry in arrows:
            if not isinstance(entry, dict):
                raise QuiverError(f"malformed arrow entry {entry!r}")
            try:
                packed.append((entry["from"], entry["to"], entry["colour"], entry.get("mult", 1)))
            except KeyError as exc:
                raise QuiverError(f"arrow entry missing field {exc}") from exc
            if not isinstance(entry["colour"], int) or not isinstance(entry.get("mult", 1), int):
                raise QuiverError(f"malformed arrow entry {entry!r}")
        return ColouredQuiver.build(m, vertices, packed)

    @staticmethod
    def from_json(text: str) -> "ColouredQuiver":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuiverError(f"invalid JSON: {exc}") from exc
        return ColouredQuiver.from_json_dict(data)


@dataclass(frozen=True, eq=False)
class PlainQuiver:
    """An uncoloured quiver without loops or oriented 2-cycles."""

    vertices: tuple
    arrows: tuple  # ((src, tgt, mult), ...) sorted

    @staticmethod
    def build(vertices: Iterable[Vertex], arrows: Iterable[tuple] = ()) -> "PlainQuiver":
        verts = tuple(vertices)
        if not verts:
            raise QuiverError("a quiver needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise QuiverError("duplicate vertex labels")
        vset = set(verts)
        agg: Counter = Counter()
        for arrow in arrows:
            if len(arrow) == 2:
                (i, j), k = arrow, 1
            elif len(arrow) == 3:
                i, j, k = arrow
            else:
                raise QuiverError(f"arrow entries take 2 or 3 fields, got {arrow!r}")
            if i not in vset or j not in vset:
                raise UnknownVertexError(f"arrow {arrow!r} uses an unknown vertex")
            if i == j:
                raise QuiverError(f"loop at vertex {i!r} is not allowed")
            if k < 0:
                raise QuiverError(f"negative multiplicity in {arrow!r}")
            if k:
                agg[(i, j)] += k
        for (i, j) in agg:
            if agg[(j, i)]:
                raise QuiverError(f"oriented 2-cycle between {i!r} and {j!r}")
        packed = tuple(sorted(((i, j, k) for (i, j), k in agg.items()),
                              key=lambda a: (_label_key(a[0]), _label_key(a[1]))))
        return PlainQuiver(verts, packed)

    def __eq__(self, other):
        if not isinstance(other, PlainQuiver):
            return NotImplemented
        return (set(self.vertices), self.arrows) == (set(other.vertices), other.arrows)

    def __hash__(self):
        return hash((frozenset(self.vertices), self.arrows))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def _mult(self) -> dict:
        return {(i, j): k for i, j, k in self.arrows}

    def mult(self, i, j) -> int:
        return self._mult.get((i, j), 0)

    def is_acyclic(self) -> bool:
        indeg = {v: 0 for v in self.vertices}
        for i, j, k in self.arrows:
            indeg[j] += 1
        ready = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for i, j, k in self.arrows:
                if i == v:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
        return seen == self.n

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"from": i, "to": j, "mult": k} for i, j, k in self.arrows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @staticmethod
    def from_json_dict(data) -> "PlainQuiver":
        if not isinstance(data, dict):
            raise QuiverError("quiver document must be a JSON object")
        try:
            vertices = data["vertices"]
            arrows = data["arrows"]
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"missing quiver field: {exc}") from exc
        if not isinstance(vertices, list) or not isinstance(arrows, list):
            raise QuiverError("malformed quiver fields")
        packed = []
        for entry in arrows:
            if not isinstance(entry, dict) or "from" not in entry or "to" not in entry:
                raise QuiverError(f"malformed arrow entry {entry!r}")
            packed.append((entry["from"], entry["to"], entry.get("mult", 1)))
        return PlainQuiver.build(vertices, packed)

    @staticmethod
    def from_json(text: str) -> "PlainQuiver":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuiverError(f"invalid JSON: {exc}") from exc
        return PlainQuiver.from_json_dict(data)


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the three tilting-quiver checks."""

    loopless: bool
    monochromatic: bool
    symmetric: bool
    offending: tuple = ()

    @property
    def ok(self) -> bool:
        return self.loopless and self.monochromatic and self.symmetric


def validate(Q: ColouredQuiver) -> ValidityReport:
    """Check looplessness, local monochromaticity and colour duality.

    Pure; never raises on bad quivers, the report carries the verdict.
    """
    bad = []

    loopless = True
    for i, j, c, k in Q.arrows:
        if i == j:
            loopless = False
            bad.append((i, j, c, k))

    pair_colours = defaultdict(set)
    for i, j, c, k in Q.arrows:
        pair_colours[(i, j)].add(c)
    monochromatic = True
    for (i, j), cols in pair_colours.items():
        if len(cols) > 1:
            monochromatic = False
            bad.extend((i, j, c, Q.mult(i, j, c)) for c in sorted(cols))

    symmetric = True
    for i, j, c, k in Q.arrows:
        if Q.mult(j, i, Q.m - c) != k:
            symmetric = False
            bad.append((i, j, c, k))

    return ValidityReport(loopless, monochromatic, symmetric, tuple(bad))


def seed_from_acyclic(q: PlainQuiver, m: int) -> ColouredQuiver:
    """Turn an acyclic plain quiver into the coloured quiver of its seed.

    Every arrow i -> j becomes an arrow of colour 0 together with the dual
    arrow j -> i of colour m.
    """
    if m < 1:
        raise QuiverError(f"seed requires m >= 1, got {m}")
    if not q.is_acyclic():
        raise QuiverError("seed quiver must be acyclic")
    arrows = []
    for i, j, k in q.arrows:
        arrows.append((i, j, 0, k))
        arrows.append((j, i, m, k))
    return ColouredQuiver.build(m, q.vertices, arrows)


def gabriel_quiver(Q: ColouredQuiver) -> PlainQuiver:
    """Restrict to the colour-0 arrows."""
    return PlainQuiver.build(Q.vertices, ((i, j, k) for i, j, c, k in Q.arrows if c == 0))


def _require_mutable(Q: ColouredQuiver, v) -> None:
    if v not in set(Q.vertices):
        raise UnknownVertexError(f"unknown vertex {v!r}")
    report = validate(Q)
    if not report.ok:
        raise InvalidQuiverError(
            "mutation needs a valid tilting quiver "
            f"(loopless={report.loopless}, monochromatic={report.monochromatic}, "
            f"symmetric={report.symmetric})"
        )


def mutate_procedural(Q: ColouredQuiver, v) -> ColouredQuiver:
    """Mutate at ``v`` by the three-step rewriting rule.

    1. For every pair of arrows i -(c)-> v and v -(0)-> j with i != j, add
       an arrow i -> j of colour c and an arrow j -> i of colour m - c.
    2. While some ordered pair carries arrows of two or more distinct
       colours, remove one arrow of each colour present on that pair.
    3. Add one to the colour of every arrow ending in v and subtract one
       from the colour of every arrow starting in v, modulo m + 1.
    """
    _require_mutable(Q, v)
    m = Q.m
    counts = Counter({(i, j, c): k for i, j, c, k in Q.arrows})

    into = [(i, c, k) for (i, j, c, k) in Q.arrows if j == v]
    out0 = [(j, k) for (i, j, c, k) in Q.arrows if i == v and c == 0]
    for i, c, ki in into:
        for j, kj in out0:
            if i == j:
                continue  # would be a loop
            counts[(i, j, c)] += ki * kj
            counts[(j, i, m - c)] += ki * kj

    by_pair = defaultdict(dict)
    for (i, j, c), k in counts.items():
        if k > 0:
            by_pair[(i, j)][c] = k
    for cols in by_pair.values():
        if len(cols) < 2:
            continue
        # removing one arrow of each colour present, round after round, stops
        # once a single colour is left: the top colour survives with its
        # lead over the runner-up (nothing survives a tie)
        ranked = sorted(cols.items(), key=lambda item: item[1], reverse=True)
        (top, first), (_, second) = ranked[0], ranked[1]
        cols.clear()
        if first > second:
            cols[top] = first - second

    period = m + 1
    arrows = []
    for (i, j), cols in by_pair.items():
        for c, k in cols.items():
            if k <= 0:
                continue
            if j == v:
                c = (c + 1) % period
            elif i == v:
                c = (c - 1) % period
            arrows.append((i, j, c, k))
    return ColouredQuiver.build(m, Q.vertices, arrows)


def mutate_formula(Q: ColouredQuiver, v) -> ColouredQuiver:
    """Mutate at ``v`` by direct evaluation of the closed formula.

    With colours read modulo m + 1, the new multiplicity from i to j of
    colour c is q_ij(c+1) when v = i, q_ij(c-1) when v = j, and otherwise

        max(0, q_ij(c) - sum_{t != c} q_ij(t)
               + (q_iv(c) - q_iv(c-1)) * q_vj(0)
               + q_iv(m) * (q_vj(c) - q_vj(c+1)))
    """
    _require_mutable(Q, v)
    m = Q.m
    period = m + 1
    q = Q.mult
    arrows = []
    for i in Q.vertices:
        for j in Q.vertices:
            if i == j:
                continue
            if i == v or j == v:
                for c in range(period):
                    k = q(i, j, (c + 1) % period) if i == v else q(i, j, (c - 1) % period)
                    if k:
                        arrows.append((i, j, c, k))
            else:
                total = sum(q(i, j, t) for t in range(period))
                for c in range(period):
                    k = (
                        q(i, j, c)
                        - (total - q(i, j, c))
                        + (q(i, v, c) - q(i, v, (c - 1) % period)) * q(v, j, 0)
                        + q(i, v, m) * (q(v, j, c) - q(v, j, (c + 1) % period))
                    )
                    if k > 0:
                        arrows.append((i, j, c, k))
    return ColouredQuiver.build(m, Q.vertices, arrows)


def fz_mutate(q: PlainQuiver, v) -> PlainQuiver:
    """Classical arrow-count mutation of a plain quiver at ``v``.

    New counts are q~_ij = q_ji when v is an endpoint, and otherwise
    max(0, q_ij - q_ji + q_iv*q_vj - q_jv*q_vi).  The result again has no
    loops or oriented 2-cycles, and mutating twice gives back the input.
    """
    if v not in set(q.vertices):
        raise UnknownVertexError(f"unknown vertex {v!r}")
    arrows = []
    for i in q.vertices:
        for j in q.vertices:
            if i == j:
                continue
            if v == i or v == j:
                k = q.mult(j, i)
            else:
                k = max(0, q.mult(i, j) - q.mult(j, i) + q.mult(i, v) * q.mult(v, j) - q.mult(j, v) * q.mult(v, i))
            if k:
                arrows.append((i, j, k))
    return PlainQuiver.build(q.vertices, arrows)
