#!/usr/bin/env python3
"""Drive the worked fixtures end to end and print what happens.

Shows the four-vertex m=2 mutation cycle, the two-vertex m=3 colour cycle,
the exchange triple on the 12-gon, and the per-polygon counting table.
"""

from mcluster import (
    ColouredQuiver,
    Polygon,
    fuss_catalan,
    mutate_formula,
    mutate_procedural,
    quiver_of_angulation,
)


def show(Q, title):
    arrows = ", ".join(f"{i}-({c})->{j}" + (f" x{k}" if k > 1 else "")
                       for i, j, c, k in Q.arrows)
    print(f"  {title}: {arrows}")


def four_vertex_cycle():
    print("four-vertex m=2 mutation cycle at vertex X")
    Q = ColouredQuiver.build(2, ("X", "I4", "I1", "Y1"), [
        ("X", "I4", 0), ("I4", "X", 2), ("X", "I1", 0), ("I1", "X", 2),
        ("X", "Y1", 1), ("Y1", "X", 1), ("I1", "Y1", 0), ("Y1", "I1", 2)])
    cur = Q
    for step in range(4):
        show(cur, f"step {step}")
        nxt = mutate_procedural(cur, "X")
        assert mutate_formula(cur, "X") == nxt, "formula and procedure disagree"
        cur = nxt
    assert cur == mutate_procedural(Q, "X")
    print("  (procedure and closed formula agree on every step)\n")


def two_vertex_cycle():
    print("two-vertex m=3 colour cycle, mutating at b")
    Q = ColouredQuiver.build(3, ("a", "b"), [("a", "b", 1), ("b", "a", 2)])
    cur = Q
    for _ in range(5):
        show(cur, "state")
        cur = mutate_procedural(cur, "b")
    print()


def exchange_triple():
    print("12-gon exchange cycle at one slot of the base angulation")
    p = Polygon(2, 5)
    a = p.angulation([(3, 8), (5, 8), (3, 12), (9, 12)])
    d = (3, 8)
    for _ in range(3):
        nxt = a.next_complement(d)
        print(f"  {d} -> {nxt}   (inside merged piece {a.merged_piece(d)})")
        a = a.exchange(d)
        d = nxt
    print("  quiver of the base angulation:")
    show(quiver_of_angulation(p.angulation([(3, 8), (5, 8), (3, 12), (9, 12)])), "Q")
    print()


def counting_table():
    print("angulation counts against the closed formula")
    print("   m   n    N  enumerated     formula")
    for m in range(1, 5):
        for n in range(2, 9):
            if m * n + 2 > 14:
                continue
            p = Polygon(m, n)
            count = p.count_angulations()
            formula = fuss_catalan(n, m)
            mark = "" if count == formula else "  MISMATCH"
            print(f"  {m:2d}  {n:2d}  {p.vertex_count:3d}  {count:10d}  {formula:10d}{mark}")


if __name__ == "__main__":
    four_vertex_cycle()
    two_vertex_cycle()
    exchange_triple()
    counting_table()
