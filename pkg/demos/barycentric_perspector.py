"""Why AX, BY, CZ always meet: a computation in barycentrics over XYZ.

Each apex sits on a perpendicular bisector of XYZ, so D = (-p:1:1),
E = (1:-q:1), F = (1:1:-r).  Joining and meeting lines by cross products
gives A = (-1:q:r), B = (p:-1:r), C = (p:q:-1), and all three cevians pass
through (p:q:r).
"""
from morleykit import barycentric as bc
from morleykit import classic_morley, triangle_from_angles
from morleykit.constructions import DEG
from morleykit.verifier import barycentric_crosscheck, cevian_concurrency_det


def main():
    p, q, r = 2.0, 3.0, 5.0
    A, B, C = bc.flank_vertices(p, q, r)
    for name, t in zip("ABC", (A, B, C)):
        print(f"{name} = ({t.u:+.3f} : {t.v:+.3f} : {t.w:+.3f})")
    print("perspector", tuple(bc.perspector(p, q, r)))
    print("determinant of the three cevians:", bc.concurrency_det(*bc.cevians(p, q, r)))

    # The same statement checked on an actual trisector figure.
    cfg = classic_morley(triangle_from_angles(75 * DEG, 65 * DEG, 40 * DEG))
    print(f"cartesian cevian determinant   {cevian_concurrency_det(cfg):.2e}")
    print(f"barycentric reconstruction gap {barycentric_crosscheck(cfg):.2e}")


if __name__ == "__main__":
    main()
