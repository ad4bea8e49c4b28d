"""Build triangles outward from an equilateral XYZ.

Pick apex angles d, e, f; erect isosceles triangles on the sides of XYZ with
those apexes; extend their legs until they meet.  The outer triangle ABC
then has X, Y, Z on the bisectors of the apex angles, and the classic
figure is the special member with d + e + f = 300 degrees.
"""
from pathlib import Path

from morleykit import ConverseParameters, converse_construct, render_svg
from morleykit.constructions import (
    DEG,
    apex_angles,
    classic_morley,
    converse_validity,
    hypothesis_residuals,
    six_angles,
    vertex_splits,
)
from morleykit.kernel import triangle_from_angles
from morleykit.render import RenderStyle

OUT = Path(__file__).parent / "out"


def show(d, e, f):
    p = ConverseParameters.from_degrees(d, e, f)
    if not converse_validity(p):
        print(f"apex ({d}, {e}, {f}): no valid outer triangle")
        return None
    cfg = converse_construct(p)
    abc = [a / DEG for a in cfg.outer().angles()]
    splits = [a / DEG for a in vertex_splits(cfg)]
    common = six_angles(cfg, check_interior=False)[0] / DEG
    print(f"apex ({d}, {e}, {f}): ABC angles {abc[0]:.4f} {abc[1]:.4f} {abc[2]:.4f}, "
          f"splits at A, B, C {splits[0]:.4f} {splits[1]:.4f} {splits[2]:.4f}, "
          f"six angles {common:.6f}, hypothesis residual {hypothesis_residuals(cfg).max():.1e}")
    return cfg


def main():
    OUT.mkdir(exist_ok=True)
    for triple in ((100, 100, 100), (100, 110, 90), (90, 90, 90), (80, 80, 80), (170, 50, 50)):
        show(*triple)

    # Reading the apexes off a classic figure gives a triple summing to 300.
    classic = classic_morley(triangle_from_angles(90 * DEG, 60 * DEG, 30 * DEG))
    p = apex_angles(classic)
    print("apexes of the 90-60-30 figure:", " ".join(f"{a / DEG:.6f}" for a in (p.d, p.e, p.f)),
          f"sum {(p.d + p.e + p.f) / DEG:.9f}")

    cfg = show(100, 110, 90)
    name = OUT / "converse_100_110_90.svg"
    name.write_text(render_svg(cfg, RenderStyle.with_layers(["flanks", "bisectors", "labels"])))
    print("wrote", name)


if __name__ == "__main__":
    main()
