"""Rewrite the frozen golden files. Run only after an intentional format change."""
import math
from pathlib import Path

from morleykit.constructions import classic_morley
from morleykit.kernel import triangle_from_angles
from morleykit.render import render_svg
from morleykit.verifier import trial_rng

HERE = Path(__file__).parent


def main():
    raw = trial_rng(42, 0).bit_generator.random_raw(100)
    (HERE / "rng_42_0.txt").write_text("".join(f"{int(v)}\n" for v in raw))
    cfg = classic_morley(triangle_from_angles(*(math.pi / 3,) * 3))
    (HERE / "morley_equilateral.svg").write_text(render_svg(cfg))


if __name__ == "__main__":
    main()
