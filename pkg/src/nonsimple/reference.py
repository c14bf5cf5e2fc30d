"""Reference equations checked by the reproductions, kept as plain strings.

Period entries ``tau_ij`` are written ``tij``; for the surface case
``tau_1, tau_2, tau_3`` are ``t11, t12, t22``.  An equation ``lhs = rhs``
is stored as the text of ``lhs - rhs``.
"""

from __future__ import annotations

from .ring import Poly, parse_poly

# abelian surface of type (1, d2): sub elliptic curve
SURFACE_SYSTEM = [
    "-d2 - (d2*a13 + a24)",
    "(t11*t22 - t12^2)*a12 - d2*a14*t11 + d2*a13*t12 - a24*t12 + a23*t22 + d2*a34",
    "a14*a23 - a13*a24 + a12*a34",
]

# abelian threefold of type (1, d2, d3): sub elliptic curve
THREEFOLD_SYSTEM = [
    "-a16*d2*d3*t11 + a14*d2*d3*t13 + a46*d2*d3 - a26*d3*t12 - a36*d2*t13 + a24*d3*t23"
    " + a34*d2*t33 - (d3*t12*t13 - d3*t11*t23)*a12 - (d2*t13^2 - d2*t11*t33)*a13"
    " - (t13*t23 - t12*t33)*a23",
    "-a16*d2*d3*t12 + a15*d2*d3*t13 + a56*d2*d3 - a26*d3*t22 - a36*d2*t23"
    " + a25*d3*t23 + a35*d2*t33 - (d3*t13*t22 - d3*t12*t23)*a12 - (d2*t13*t23 - d2*t12*t33)*a13"
    " - (t23^2 - t22*t33)*a23",
    "a56*d2*t13 - a46*d2*t23 + a45*d2*t33 - ((t23^2 - t22*t33)*t11 - (t13*t23 - t12*t33)*t12"
    " + (t13*t22 - t12*t23)*t13)*a12 - (d2*t13*t23 - d2*t12*t33)*a14 + (d2*t13^2 - d2*t11*t33)*a15"
    " - (d2*t12*t13 - d2*t11*t23)*a16 - (t23^2 - t22*t33)*a24 + (t13*t23 - t12*t33)*a25"
    " - (t13*t22 - t12*t23)*a26",
    "-a15*d2*d3*t11 + a14*d2*d3*t12 + a45*d2*d3 - a25*d3*t12 - a35*d2*t13 + a24*d3*t22"
    " + a34*d2*t23 - (d3*t12^2 - d3*t11*t22)*a12 - (d2*t12*t13 - d2*t11*t23)*a13"
    " - (t13*t22 - t12*t23)*a23",
    "a56*d2*d3*t11 - a46*d2*d3*t12 + a45*d2*d3*t13 - ((t23^2 - t22*t33)*t11"
    " - (t13*t23 - t12*t33)*t12 + (t13*t22 - t12*t23)*t13)*a23 + (d3*t13*t22 - d3*t12*t23)*a24"
    " - (d3*t12*t13 - d3*t11*t23)*a25 + (d3*t12^2 - d3*t11*t22)*a26 + (d2*t13*t23 - d2*t12*t33)*a34"
    " - (d2*t13^2 - d2*t11*t33)*a35 + (d2*t12*t13 - d2*t11*t23)*a36",
    "-a56*d3*t12 + a46*d3*t22 - a45*d3*t23 - ((t23^2 - t22*t33)*t11 - (t13*t23 - t12*t33)*t12"
    " + (t13*t22 - t12*t23)*t13)*a13 + (d3*t13*t22 - d3*t12*t23)*a14 - (d3*t12*t13 - d3*t11*t23)*a15"
    " + (d3*t12^2 - d3*t11*t22)*a16 - (t23^2 - t22*t33)*a34 + (t13*t23 - t12*t33)*a35"
    " - (t13*t22 - t12*t23)*a36",
    "d2*d3 - (-a14*d2*d3 - a36*d3 - a25*d3)",
    "-2*a16*a34*d2 - 2*a13*a46*d2 - 2*a15*a24*d3 - 2*a12*a45*d3 + (a36*d2 + a25*d3)*a14"
    " + (a14*d3 + a36)*a25 - 2*a26*a35 + (a14*d2 + a25)*a36 - 2*a23*a56",
    "(a36*a45 - a35*a46 + a34*a56)*a12 - (a26*a45 - a25*a46 + a24*a56)*a13"
    " + (a26*a35 - a25*a36 + a23*a56)*a14 - (a26*a34 - a24*a36 + a23*a46)*a15"
    " + (a25*a34 - a24*a35 + a23*a45)*a16 + (a16*a45 - a15*a46 + a14*a56)*a23"
    " - (a16*a35 - a15*a36 + a13*a56)*a24 + (a16*a34 - a14*a36 + a13*a46)*a25"
    " - (a15*a34 - a14*a35 + a13*a45)*a26 + (a16*a25 - a15*a26 + a12*a56)*a34"
    " - (a16*a24 - a14*a26 + a12*a46)*a35 + (a15*a24 - a14*a25 + a12*a45)*a36"
    " + (a16*a23 - a13*a26 + a12*a36)*a45 - (a15*a23 - a13*a25 + a12*a35)*a46"
    " + (a14*a23 - a13*a24 + a12*a34)*a56",
]

# F5: the system for the principally polarized surface (1/2) Pi_B
F5_SYSTEM = [
    "-1 - (a13 + a24)",
    "((z1 - z2)*(z1 - z3) - (z2 - z3)^2)*a12 + z1*(a23 - a14) + z2*(a13 + a14 - a24)"
    " + z3*(a24 - a13 - a23) + a34",
    "a14*a23 - a13*a24 + a12*a34",
]
F5_OBSTRUCTION = "5*a13^2 + 5*a13 + 1"
F5_GENERIC_RELATIONS = {"a12": "0", "a34": "0", "a23": "a14"}
F5_SPLIT_SURFACE = "z3 - ((a + 1)*z2 - a*z1)"

# F7: coefficient-matched linear relations, free in a15, a25, a34
F7_LINEAR_RELATIONS = {
    "a12": "0",
    "a13": "0",
    "a23": "0",
    "a45": "0",
    "a46": "0",
    "a56": "0",
    "a14": "-a15 + a25 - a34",
    "a16": "a34",
    "a24": "a15",
    "a26": "a15 + a34",
    "a35": "a15 + a34",
    "a36": "a25 - a34",
}
F7_A15 = "-1/2 + 3*a25 - 2*a34"
F7_CONIC = "42*a25^2 - 42*a25*a34 + 14*a34^2 - 14*a25 + 7*a34 + 1"
F7_DISCRIMINANT = "-588*a34^2 + 28"
F7_A34_OF_T = ("-(168 + 8*t) + (588 + t^2)/7", "588 + t^2")
F7_A25_BRANCHES = [
    "-2*t^2/21 - 6*t - 84 + 2/7*(t^2 + 588)",
    "2*t^2/21 - 2*t - 84 + 4/21*(t^2 + 588)",
]
F7_A25_DENOMINATOR = "t^2 + 588"
F7_SEXTICS = [
    "t^6 - 756*t^5 + 139356*t^4 + 1481760*t^3 - 52898832*t^2 - 261382464*t + 5489031744",
    "3*t^6 - 1092*t^5 + 88788*t^4 + 2140320*t^3 - 29618736*t^2 - 377552448*t + 3817474752",
]

# G: the two polynomials on the (1,2)-polarized factor surface
G_Q = (
    "a12*(-4*x^2 + 2*y^2 + 1/2*z^2 - 4*x*y + 2*x*z - 2*y*z) + 4*a13*(2*x + 2*y - z)"
    " + a14*(4*x + 6*y - 3*z) + a23*(-2*y + z) + 2*a34 + 4*x + 4*y - 2*z"
)
G_R = "2*a13^2 + 2*a13 + a14*a23 + a12*a34"
G_POINT = {"a12": 0, "a13": 0, "a14": 0, "a23": 1, "a34": 0}
G_POINT_SURFACE = "4*x + 2*y - z"
G_SPLIT_MATRIX = [
    [6, -5, 0, 1, -6, 3],
    [-5, 8, 1, -3, 6, -3],
    [0, 1, 4, -2, -3, 1],
    [1, -3, -2, 4, 0, 0],
    [-6, 6, -3, 0, 12, -6],
    [3, -3, 1, 0, -6, 4],
]


def parsed(texts) -> list[Poly]:
    return [parse_poly(t) for t in texts]
