"""Trisect the angles of a triangle and watch an equilateral triangle appear.

Run: python3 demos/morley_figure.py   (figures land in demos/out/)
"""
import math
from pathlib import Path

from morleykit import classic_morley, render_svg, triangle_from_angles
from morleykit.constructions import DEG, six_angles
from morleykit.kernel import distance, equilateral_residual
from morleykit.render import RenderStyle

OUT = Path(__file__).parent / "out"


def main():
    OUT.mkdir(exist_ok=True)
    for angles in ((90, 60, 30), (120, 40, 20), (80, 70, 30)):
        cfg = classic_morley(triangle_from_angles(*(a * DEG for a in angles)))
        sides = [distance(cfg.Y, cfg.Z), distance(cfg.Z, cfg.X), distance(cfg.X, cfg.Y)]
        print(f"angles {angles}: sides of XYZ", ", ".join(f"{s:.15f}" for s in sides))
        print(f"    relative spread {equilateral_residual(cfg.inner()):.1e}")

    # The adjacent trisectors meet again beyond XYZ at D, E, F.  From X the
    # circumcenter R of CXY and the vertex B are separated by 150 degrees.
    cfg = classic_morley(triangle_from_angles(70 * DEG, 60 * DEG, 50 * DEG))
    print("six angles BXR ... BZP in degrees:",
          " ".join(f"{a / DEG:.10f}" for a in six_angles(cfg)))

    name = OUT / "morley_90_60_30.svg"
    right = classic_morley(triangle_from_angles(90 * DEG, 60 * DEG, 30 * DEG))
    name.write_text(render_svg(right, RenderStyle.with_layers(["trisectors", "labels"])))
    print("wrote", name)


if __name__ == "__main__":
    main()
