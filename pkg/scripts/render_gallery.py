#!/usr/bin/env python3
"""Write a small gallery of SVG and DOT files for the 12-gon model."""

import argparse
from pathlib import Path

from mcluster import Polygon, quiver_of_angulation
from mcluster.exports import angulation_to_svg, quiver_to_dot, translation_quiver_to_dot


def render(outdir: Path):
    outdir.mkdir(parents=True, exist_ok=True)
    p = Polygon(2, 5)
    base = p.angulation([(3, 8), (5, 8), (3, 12), (9, 12)])

    (outdir / "base-angulation.svg").write_text(angulation_to_svg(base))
    (outdir / "base-with-candidates.svg").write_text(
        angulation_to_svg(base, candidates=base.flips((3, 8))))
    flipped = base.flip((3, 8), base.flips((3, 8))[0])
    (outdir / "after-flip.svg").write_text(angulation_to_svg(flipped))
    (outdir / "base-quiver.dot").write_text(quiver_to_dot(quiver_of_angulation(base)))
    (outdir / "diagonal-quiver.dot").write_text(
        translation_quiver_to_dot(p.translation_quiver()))
    for name in sorted(f.name for f in outdir.iterdir()):
        print(f"wrote {outdir / name}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("gallery"))
    render(parser.parse_args().out)
