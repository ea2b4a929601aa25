"""Minimal-product evaluation of the Chebyshev approximants.

Exponential schemes approximate ``exp(-i A)`` for Hermitian ``A`` with
``||A|| <= theta`` using 1..5 matrix products (degrees 2, 4, 8, 12, 18).
Cosine/sine schemes approximate ``cos(A)`` and ``sin(A)`` simultaneously for
real symmetric ``A`` using only real products.

Each sequence is written once against an abstract ``mul`` so it can be run on
matrices (counted products), on arrays of scalars (elementwise, used for grid
checks in extended precision) and on :class:`Poly` objects (symbolic expansion
in the monomial basis, used to audit the coefficient literals).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable

import mpmath as mp
import numpy as np

from . import bounds
from ._baked import BAKED
from .matcore import CostLedger, as_square, check_symmetric, mat_mul, one_norm

# -- coefficient literals ----------------------------------------------------
#
# Values are kept as the printed strings; a trailing "j" marks a purely
# imaginary coefficient and "p/q" an exact fraction.  The doubles actually
# used for evaluation live in ``_baked`` (see ``coeffbake``); they are within
# a few dozen ulps of these values.

EXP_COEFFS = {
    2: {
        "alpha0": "0.9999999999999999999998",
        "alpha1": "-0.9999999999761950000001j",
        "alpha2": "-0.4999999999920650000000",
    },
    4: {
        "alpha0": "0.99999999999999999997",
        "alpha1": "-0.99999999999981067844j",
        "alpha2": "-0.49999999999994320353",
        "x1": "0.16666657785001893215j",
        "x2": "0.04166664890333648869",
    },
    8: {
        "x1": "431/4000",
        "x2": "-0.02693906873598870733j",
        "x3": "0.66321004441662438593j",
        "x4": "0.54960853911436015786j",
        "x5": "0.16200952846773660904",
        "x6": "-0.01417981805211804396j",
        "x7": "-0.03415953916892111403",
        "alpha0": "0.99999999999999999928",
        "alpha1": "-0.99999999999999233987j",
        "alpha2": "-0.13549409636220703066",
    },
    12: {
        "a01": "-6.26756985350202252845",
        "a11": "2.52179694712098096140j",
        "a21": "0.05786296656487001838",
        "a31": "-0.07766686408071870344j",
        "a02": "0",
        "a12": "1.41183797496250375498j",
        "a22": "0",
        "a32": "-0.00866935318616372016j",
        "a03": "2.69584306915332564689",
        "a13": "-1.35910926168869260391j",
        "a23": "-0.09896214548845831754",
        "a33": "0.01596479463299466666j",
        "a04": "0",
        "a14": "0.13340427306445612526j",
        "a24": "0.02022602029818310774",
        "a34": "-0.00674638241111650999j",
    },
    18: {
        "a01": "0",
        "a11": "3/25",
        "a21": "-0.00877476096879703859j",
        "a31": "-0.00097848453523780954",
        "b01": "0",
        "b11": "-0.66040840760771318751j",
        "b21": "-1.09302278471564897987",
        "b31": "0.25377155817710873323j",
        "b61": "0.00054374267434731225",
        "b02": "-2.58175430371188142440",
        "b12": "-1.73033278310812419209j",
        "b22": "-0.07673476833423340755",
        "b32": "-0.00261502969893897079j",
        "b62": "-0.00003400011993049304",
        "b03": "2.92377758396553673559",
        "b13": "1.44513300347488268510j",
        "b23": "0.12408183566550450221",
        "b33": "-0.01957157093642723948j",
        "b63": "0.00002425253007433925",
        "b04": "0",
        "b14": "0",
        "b24": "-0.123953695858283131480j",
        "b34": "-0.011202694841085592373",
        "b64": "-0.000012367240538259896j",
    },
}

COSSIN_COEFFS = {
    "CS5": {
        "alpha0": "0.99999999999999988866",
        "alpha1": "-0.49999999998536031183",
        "alpha2": "0.04166638147997997916",
        "z0": "0.99999999999999994433",
        "z1": "-0.16666666666341340086",
        "z2": "0.00833328580219952161",
    },
    "CS8a": {
        "alpha0": "0.99999999999999999928",
        "alpha1": "-0.49999999999999787210",
        "alpha2": "0.04166666666565156615",
        "x1": "-0.00138888871939942118",
        "x2": "0.00002479003614491668",
        "z0": "0.85721768947064012466",
        "z1": "-0.09527551139590047256",
        "z2": "0.00238406908730568850",
        "z3": "0.14278231052935221530",
    },
    "CS9": {
        "alpha0": "0.99999999999999989168",
        "alpha1": "-0.49999999999988173685",
        "alpha2": "0.04166666664600636231",
        "alpha3": "-0.00138888762558264513",
        "alpha4": "0.00002477005498155486",
        # published with the opposite overall sign (they give -sin)
        "z0": "-0.999999999999999945837",
        "z1": "0.166666666666643012068",
        "z2": "-0.008333333330440664914",
        "z3": "0.000198412554024823435",
        "z4": "-2.75257852630876250884e-6",
    },
    "CS16a": {
        "x1": "1/100",
        "x2": "-0.00008035854055477845",
        "x3": "-0.10743065643419630630",
        "x4": "-0.12491372919298427513",
        "x5": "0.00130085397953037838",
        "x6": "-0.00001633763177694857",
        "x7": "7.13215089463286614820e-6",
        "alpha0": "0.99999999999999999530",
        "alpha1": "-0.49999999999999969795",
        "alpha2": "0.028247102741817734721",
        "z0": "33/50",
        "z1": "0.00333333333335438849",
        "z2": "-0.00583333333345309522",
        "z3": "0.02773310749258735833",
        "z4": "0.33999999999999886261",
        "z5": "-0.00034915267907803119",
        "z6": "4.19573036995827807213e-6",
        "z7": "-2.63931697420854364428e-6",
        "z8": "-3.00240279002259730782e-6",
    },
}

_COS24 = {
    "a01": "0.39272620931352327385",
    "a11": "-0.08760637124112618048",
    "a21": "0.01962064507143601071",
    "a31": "-0.00013421604022829771",
    "a02": "1/5",
    "a12": "-0.54235659842328961975",
    "a22": "679/100000",
    "a32": "-0.00002902999756981724",
    "a03": "0.68566773555140770915",
    "a13": "-0.02578520551577453856",
    "a23": "0.00019815665089300452",
    "a33": "-1.10083330495602029332e-6",
    "a04": "0",
    "a14": "-0.03931944346958836562",
    "a24": "0.00017839382197658767",
    "a34": "-1.06908694221941432625e-6",
}

COSSIN_COEFFS["CS24a"] = {
    **_COS24,
    "z0": "-0.01238438326981811663",
    "z1": "-0.06180067679127220638",
    "z2": "0.00046275599640408615",
    "z3": "-9.92990416300441584763e-6",
    "z4": "1.26307934615308708610",
    "z5": "9.10439014880980346565e-15",
    "z6": "0.14610549096048524519",
    "z7": "0.00087697762149660844",
    "z8": "4.12092186281469998191e-6",
    "z9": "2.23743615053828476204e-8",
    "z10": "0.00033015662857238333",
    "z11": "-2.405371071766852323329e-7",
}

COSSIN_COEFFS["CS24x"] = {
    **_COS24,
    "z0": "2.85247650396873609664",
    "z1": "-0.23838922984354509797",
    "z2": "0.01254735251131974478",
    "z3": "-0.00003184984233834954",
    "z4": "-7.91411934357932811110",
    "z5": "-0.45584956828766694538",
    "z6": "-2.34944723110594310069",
    "z7": "-0.34315650534099675485",
    "z8": "0.00379529409295014610",
    "z9": "-0.00001509312002244718",
    "z10": "-17/1000",
    "z11": "7.68145795118100472945e-9",
    "z12": "-2.71896175810263278764e-11",
    "z13": "0.45584956828766694538",
}


def _parse_double(s: str) -> complex | float:
    imag = s.endswith("j")
    body = s[:-1] if imag else s
    x = float(Fraction(body)) if "/" in body else float(body)
    return complex(0.0, x) if imag else x


def _parse_mp(s: str):
    imag = s.endswith("j")
    body = s[:-1] if imag else s
    if "/" in body:
        p, q = body.split("/")
        x = mp.mpf(p) / mp.mpf(q)
    else:
        x = mp.mpf(body)
    return mp.mpc(0, x) if imag else x


# -- the sequences -------------------------------------------------------------
#
# ``I`` is the identity of the algebra, ``A`` the argument and ``mul`` the
# (counted) product.  Scalar multiples and sums are free.


def _exp2(c, A, I, mul):
    A2 = mul(A, A)
    return c["alpha0"] * I + c["alpha1"] * A + c["alpha2"] * A2


def _exp4(c, A, I, mul):
    A2 = mul(A, A)
    A4 = mul(A2, c["x1"] * A + c["x2"] * A2)
    return c["alpha0"] * I + c["alpha1"] * A + c["alpha2"] * A2 + A4


def _exp8(c, A, I, mul):
    A2 = mul(A, A)
    A4 = mul(A2, c["x1"] * A + c["x2"] * A2)
    A8 = mul(c["x3"] * A2 + A4, c["x4"] * I + c["x5"] * A + c["x6"] * A2 + c["x7"] * A4)
    return c["alpha0"] * I + c["alpha1"] * A + c["alpha2"] * A2 + A8


def _cubic(c, col, I, A, A2, A3):
    return c[f"a0{col}"] * I + c[f"a1{col}"] * A + c[f"a2{col}"] * A2 + c[f"a3{col}"] * A3


def _exp12(c, A, I, mul):
    A2 = mul(A, A)
    A3 = mul(A2, A)
    B1, B2, B3, B4 = (_cubic(c, j, I, A, A2, A3) for j in (1, 2, 3, 4))
    A6 = B3 + mul(B4, B4)
    return B1 + mul(B2 + A6, A6)


def _exp18(c, A, I, mul):
    A2 = mul(A, A)
    A3 = mul(A2, A)
    A6 = mul(A3, A3)
    B1 = _cubic(c, 1, I, A, A2, A3)

    def quint(j):
        return (
            c[f"b0{j}"] * I + c[f"b1{j}"] * A + c[f"b2{j}"] * A2
            + c[f"b3{j}"] * A3 + c[f"b6{j}"] * A6
        )

    B2, B3, B4, B5 = (quint(j) for j in (1, 2, 3, 4))
    A9 = mul(B1, B5) + B4
    return B2 + mul(B3 + A9, A9)


def _cs5(c, A, I, mul):
    B = mul(A, A)
    B2 = mul(B, B)
    cos = c["alpha0"] * I + c["alpha1"] * B + c["alpha2"] * B2
    sin = mul(A, c["z0"] * I + c["z1"] * B + c["z2"] * B2)
    return cos, sin


def _cs8a(c, A, I, mul):
    B = mul(A, A)
    B2 = mul(B, B)
    B4 = mul(B2, c["x1"] * B + c["x2"] * B2)
    cos = c["alpha0"] * I + c["alpha1"] * B + c["alpha2"] * B2 + B4
    sin = mul(A, c["z0"] * I + c["z1"] * B + c["z2"] * B2 + c["z3"] * cos)
    return cos, sin


def _cs9(c, A, I, mul):
    B = mul(A, A)
    B2 = mul(B, B)
    B3 = mul(B2, B)
    B4 = mul(B3, B)
    cos = (
        c["alpha0"] * I + c["alpha1"] * B + c["alpha2"] * B2
        + c["alpha3"] * B3 + c["alpha4"] * B4
    )
    msin = mul(A, c["z0"] * I + c["z1"] * B + c["z2"] * B2 + c["z3"] * B3 + c["z4"] * B4)
    return cos, -1 * msin


def _cs16a(c, A, I, mul):
    B = mul(A, A)
    B2 = mul(B, B)
    B4 = mul(B2, c["x1"] * B + c["x2"] * B2)
    B8 = mul(c["x3"] * B2 + B4, c["x4"] * I + c["x5"] * B + c["x6"] * B2 + c["x7"] * B4)
    cos = c["alpha0"] * I + c["alpha1"] * B + c["alpha2"] * B2 + B8
    C24 = mul(c["z5"] * I + c["z5"] * B + c["z6"] * B2 + c["z7"] * B4 + c["z8"] * cos, B4)
    sin = mul(A, c["z0"] * I + c["z1"] * B + c["z2"] * B2 + c["z3"] * B4 + c["z4"] * cos + C24)
    return cos, sin


def _cos24(c, A, I, mul):
    D = mul(A, A)
    D2 = mul(D, D)
    D3 = mul(D2, D)
    B1, B2, B3, B4 = (_cubic(c, j, I, D, D2, D3) for j in (1, 2, 3, 4))
    D6 = B3 + mul(B4, B4)
    cos = B1 + mul(B2 + D6, D6)
    return cos, D, D2, D3, D6


def _cs24a(c, A, I, mul):
    cos, D, D2, D3, D6 = _cos24(c, A, I, mul)
    C48 = mul(
        c["z6"] * I + c["z7"] * D + c["z8"] * D2 + c["z9"] * D3 + c["z10"] * D6 + c["z11"] * cos,
        cos,
    )
    sin = mul(
        A,
        c["z0"] * I + c["z1"] * D + c["z2"] * D2 + c["z3"] * D3 + c["z4"] * D6 + c["z5"] * cos + C48,
    )
    return cos, sin


def _cs24x(c, A, I, mul):
    cos, D, D2, D3, D6 = _cos24(c, A, I, mul)
    D5 = mul(D2, c["z11"] * D2 + c["z12"] * D3)
    C24 = mul(
        c["z6"] * I + c["z7"] * D + c["z8"] * D2 + c["z9"] * D3 + D5 + c["z13"] * D6,
        D6 + c["z10"] * D,
    )
    sin = mul(
        A,
        c["z0"] * I + c["z1"] * D + c["z2"] * D2 + c["z3"] * D3 + c["z4"] * D5 + c["z5"] * cos + C24,
    )
    return cos, sin


# -- scheme descriptors ------------------------------------------------------


@dataclass(frozen=True)
class ExpScheme:
    m: int
    theta: float
    pi: int
    literals: dict = field(repr=False)
    sequence: Callable = field(repr=False)

    @property
    def name(self) -> str:
        return f"cheb{self.m}"

    @cached_property
    def coeffs(self) -> dict:
        """Evaluation coefficients (baked doubles)."""
        return dict(BAKED[self.m])

    @cached_property
    def nearest_coeffs(self) -> dict:
        """Printed literals rounded to the nearest double."""
        return {k: _parse_double(v) for k, v in self.literals.items()}

    @cached_property
    def coeffs_mp(self) -> dict:
        with mp.workdps(bounds.DPS):
            return {k: _parse_mp(v) for k, v in self.literals.items()}

    def apply(self, A, I, mul, exact: bool = False):
        """Run the evaluation sequence in an arbitrary algebra."""
        return self.sequence(self.coeffs_mp if exact else self.coeffs, A, I, mul)


@dataclass(frozen=True)
class CosSinScheme:
    variant: str
    m: int
    theta: float  # joint radius (cosine and sine both below round-off)
    pi: int
    sine_exact: bool
    literals: dict = field(repr=False)
    sequence: Callable = field(repr=False)
    # radius at which the cosine (and an exact sine) coefficients were built
    cheb_theta: float = 0.0

    @property
    def name(self) -> str:
        return self.variant

    @cached_property
    def coeffs(self) -> dict:
        return dict(BAKED[self.variant])

    @cached_property
    def nearest_coeffs(self) -> dict:
        return {k: _parse_double(v) for k, v in self.literals.items()}

    @cached_property
    def coeffs_mp(self) -> dict:
        with mp.workdps(bounds.DPS):
            return {k: _parse_mp(v) for k, v in self.literals.items()}

    def apply(self, A, I, mul, exact: bool = False):
        return self.sequence(self.coeffs_mp if exact else self.coeffs, A, I, mul)


EXP_SCHEMES = {
    2: ExpScheme(2, 1.38e-5, 1, EXP_COEFFS[2], _exp2),
    4: ExpScheme(4, 2.92e-3, 2, EXP_COEFFS[4], _exp4),
    8: ExpScheme(8, 0.1295, 3, EXP_COEFFS[8], _exp8),
    12: ExpScheme(12, 0.636, 4, EXP_COEFFS[12], _exp12),
    18: ExpScheme(18, 2.212, 5, EXP_COEFFS[18], _exp18),
}

COSSIN_SCHEMES = {
    "CS5": CosSinScheme("CS5", 5, 1.17e-2, 3, True, COSSIN_COEFFS["CS5"], _cs5, 1.17e-2),
    "CS8a": CosSinScheme("CS8a", 8, 0.06807, 4, False, COSSIN_COEFFS["CS8a"], _cs8a, 0.1295),
    "CS9": CosSinScheme("CS9", 9, 0.2143, 5, True, COSSIN_COEFFS["CS9"], _cs9, 0.2143),
    "CS16a": CosSinScheme("CS16a", 16, 0.7563, 6, False, COSSIN_COEFFS["CS16a"], _cs16a, 1.5867),
    "CS24a": CosSinScheme("CS24a", 24, 2.1556, 7, False, COSSIN_COEFFS["CS24a"], _cs24a, 4.5743),
    "CS24x": CosSinScheme("CS24x", 24, 4.5743, 8, True, COSSIN_COEFFS["CS24x"], _cs24x, 4.5743),
}


# -- matrix evaluation -------------------------------------------------------

_NORM_SLACK = 1 + 1e-12


def _counted(ledger: CostLedger):
    return lambda X, Y: mat_mul(X, Y, ledger)


def eval_exp(scheme: ExpScheme | int, A, ledger: CostLedger, check_norm: bool = True) -> np.ndarray:
    """Evaluate the degree-m Chebyshev approximant of ``exp(-i A)``.

    Exactly ``scheme.pi`` complex products are charged to ``ledger``.
    ``check_norm`` verifies ``||A||_1 <= theta``; callers that control the
    spectrum by other means (shifted input) switch it off.
    """
    if not isinstance(scheme, ExpScheme):
        scheme = EXP_SCHEMES[scheme]
    A = as_square(A)
    A = A.astype(np.result_type(A.dtype, np.complex128), copy=False)  # keeps clongdouble
    if check_norm and __debug__:
        assert one_norm(A) <= scheme.theta * _NORM_SLACK, (
            f"||A||_1 = {one_norm(A):.6g} exceeds theta = {scheme.theta} for m={scheme.m}"
        )
    I = np.eye(A.shape[0], dtype=A.dtype)
    return scheme.apply(A, I, _counted(ledger))


def eval_cossin(
    scheme: CosSinScheme | str, A, ledger: CostLedger, check_norm: bool = True
) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate (cos A, sin A) for real symmetric ``A`` with ``scheme.pi`` real products."""
    if not isinstance(scheme, CosSinScheme):
        scheme = COSSIN_SCHEMES[scheme]
    A = check_symmetric(A)
    if check_norm and __debug__:
        assert one_norm(A) <= scheme.theta * _NORM_SLACK, (
            f"||A||_1 = {one_norm(A):.6g} exceeds theta = {scheme.theta} for {scheme.variant}"
        )
    I = np.eye(A.shape[0], dtype=A.dtype)
    return scheme.apply(A, I, _counted(ledger))


def clenshaw_reference(coeffs: bounds.ChebCoeffSet, A, ledger: CostLedger | None = None) -> np.ndarray:
    """``c0/2 I + sum_k c_k T_k(A/theta)`` by the Clenshaw recurrence.

    Test oracle: uses ``m + 1`` products, far from optimal.
    """
    A = as_square(A).astype(complex, copy=False)
    n = A.shape[0]
    c = coeffs.as_complex()
    X = A / float(coeffs.theta)
    I = np.eye(n, dtype=complex)
    b1 = np.zeros((n, n), dtype=complex)
    b2 = np.zeros((n, n), dtype=complex)
    for ck in c[:0:-1]:
        b1, b2 = 2 * mat_mul(X, b1, ledger) - b2 + ck * I, b1
    return mat_mul(X, b1, ledger) - b2 + c[0] / 2 * I


# -- scalar / symbolic evaluation -------------------------------------------


def eval_exp_scalar(scheme: ExpScheme | int, y, dtype=np.clongdouble) -> np.ndarray:
    """Elementwise scheme evaluation on an array of points, in ``dtype`` arithmetic.

    The coefficients stay the stored doubles; only the arithmetic is widened.
    """
    if not isinstance(scheme, ExpScheme):
        scheme = EXP_SCHEMES[scheme]
    y = np.asarray(y).astype(dtype)
    c = {k: np.asarray(v).astype(dtype) for k, v in scheme.coeffs.items()}
    return scheme.sequence(c, y, dtype(1), np.multiply)


def eval_cossin_scalar(scheme: CosSinScheme | str, y, dtype=np.longdouble):
    if not isinstance(scheme, CosSinScheme):
        scheme = COSSIN_SCHEMES[scheme]
    y = np.asarray(y).astype(dtype)
    c = {k: np.asarray(v).astype(dtype) for k, v in scheme.coeffs.items()}
    return scheme.sequence(c, y, dtype(1), np.multiply)


class Poly:
    """Dense polynomial in one variable with mpmath coefficients (ascending)."""

    __slots__ = ("c",)

    def __init__(self, c):
        self.c = list(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls([mp.mpf(0), mp.mpf(1)])

    @classmethod
    def one(cls) -> "Poly":
        return cls([mp.mpf(1)])

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly(out)

    def __rmul__(self, s) -> "Poly":
        return Poly([s * v for v in self.c])

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return self.__rmul__(other)

    def __neg__(self) -> "Poly":
        return Poly([-v for v in self.c])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def coeff(self, k: int):
        return self.c[k] if k < len(self.c) else mp.mpf(0)


def poly_mul(p: Poly, q: Poly) -> Poly:
    out = [mp.mpf(0)] * (len(p.c) + len(q.c) - 1)
    for i, a in enumerate(p.c):
        if a == 0:
            continue
        for j, b in enumerate(q.c):
            out[i + j] += a * b
    return Poly(out)


def expand(scheme: ExpScheme | CosSinScheme, exact: bool = True):
    """Monomial expansion of a scheme (``exact`` uses the printed literals).

    Returns one :class:`Poly` for exponential schemes and a (cos, sin) pair
    for trigonometric ones.
    """
    with mp.workdps(bounds.DPS + 20):
        return scheme.apply(Poly.x(), Poly.one(), poly_mul, exact=exact)


def sine_defect_bound(scheme: CosSinScheme | str, vartheta: float) -> float:
    """``|sum_{l > m} c_l vartheta^l|``: the part of the approximate sine (printed
    literals) above the degree of the Chebyshev sine, evaluated at ``vartheta``."""
    if not isinstance(scheme, CosSinScheme):
        scheme = COSSIN_SCHEMES[scheme]
    _, sin = _expanded_exact(scheme.variant)
    with mp.workdps(bounds.DPS):
        v = mp.mpf(vartheta)
        return float(abs(mp.fsum(sin.coeff(l) * v**l for l in range(scheme.m + 1, sin.degree + 1))))


_EXPANSIONS: dict = {}


def _expanded_exact(variant: str):
    if variant not in _EXPANSIONS:
        _EXPANSIONS[variant] = expand(COSSIN_SCHEMES[variant])
    return _EXPANSIONS[variant]


def vartheta_max(scheme: CosSinScheme | str, tol: float = bounds.UNIT_ROUNDOFF, rtol: float = 1e-6) -> float:
    """Largest radius on which the approximate sine stays within ``tol`` of the exact one."""
    if not isinstance(scheme, CosSinScheme):
        scheme = COSSIN_SCHEMES[scheme]
    if scheme.sine_exact:
        raise ValueError(f"{scheme.variant} evaluates the sine exactly")
    a, b = 1e-8, None
    while a < 64:
        t = 2 * a
        if sine_defect_bound(scheme, t) > tol:
            b = t
            break
        a = t
    if b is None:
        raise ValueError("no crossing found")
    while b / a - 1 > rtol:
        c = (a * b) ** 0.5
        if sine_defect_bound(scheme, c) <= tol:
            a = c
        else:
            b = c
    return a


def cheb_cos_sin_monomials(m: int, theta: float) -> tuple[list, list]:
    """Monomial coefficients of the real part (cosine) and minus the imaginary
    part (sine) of the degree-m Chebyshev approximant of exp(-i y)."""
    p = bounds.cheb_coeffs_exp(m, theta).monomial()
    with mp.workdps(bounds.DPS + 20):
        return [+mp.re(x) for x in p], [-mp.im(x) for x in p]
