"""Walk the family of figures that share a triangle ABC.

Inside a fixed triangle the six angles BXR, ..., BZP are equal for every
member, and their common value picks the member out.  150 degrees is the
trisector figure.  180 degrees puts each apex on the circumcenter of the
matching corner triangle, which only exists while ABC is not too obtuse.
"""
from pathlib import Path

from morleykit import SolveRequest, solve
from morleykit.constructions import DEG, classic_morley
from morleykit.kernel import circumcenter, distance, triangle_from_angles
from morleykit.render import RenderStyle, render_svg

OUT = Path(__file__).parent / "out"
ANGLES = (90 * DEG, 60 * DEG, 30 * DEG)


def main():
    OUT.mkdir(exist_ok=True)
    ref = classic_morley(triangle_from_angles(*ANGLES))
    for theta in (130, 150, 170, 180, 190):
        res = solve(SolveRequest(ANGLES, theta=theta * DEG))
        p = res.params
        gap = distance(res.cfg.X, ref.X) / ref.diameter
        print(f"theta {theta:3d}: apex {p.d / DEG:8.4f} {p.e / DEG:8.4f} {p.f / DEG:8.4f} "
              f"sum {(p.d + p.e + p.f) / DEG:8.4f}  converged {res.converged}  "
              f"|X - X_trisector| {gap:.1e}")

    res = solve(SolveRequest(ANGLES, theorem6=True))
    cfg = res.cfg
    inc = max(distance(cfg.D, circumcenter(cfg.A, cfg.Y, cfg.Z)),
              distance(cfg.E, circumcenter(cfg.B, cfg.Z, cfg.X)),
              distance(cfg.F, circumcenter(cfg.C, cfg.X, cfg.Y))) / cfg.diameter
    print(f"circumcenter mode: {res.iterations} Newton steps along the continuation path, "
          f"apex-to-circumcenter gap {inc:.1e}")
    name = OUT / "circumcenter_90_60_30.svg"
    name.write_text(render_svg(cfg, RenderStyle.with_layers(["circumcircles", "flanks", "labels"])))
    print("wrote", name)

    # Past a largest angle of about 97.7 degrees no interior solution exists.
    for big in (95, 97, 99, 110):
        small = (180 - big) / 2
        r = solve(SolveRequest((big * DEG, small * DEG, small * DEG), theorem6=True))
        print(f"ABC ({big}, {small}, {small}): converged {r.converged}, residual {r.residual:.1e}")


if __name__ == "__main__":
    main()
