"""Nonnegative Cox-coordinate model of the toric variety of the fan:
strata by zero pattern, canonical forms under the positive torus,
equivalence, and the lattice-point moment map onto the weight polytope.

Combinatorics (zero patterns, labels, lattice points, exponents) are
exact; torus rescalings and the moment map use floating point since the
log-linear canonicalization has irrational solutions.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from . import linalg

EQUIV_RTOL = 1e-10


@dataclass(frozen=True)
class CoxPoint:
    """Homogeneous coordinates [x; y], all entries nonnegative reals."""

    x: tuple
    y: tuple

    def validate(self):
        if len(self.x) != len(self.y):
            raise ValueError("x and y must have equal length")
        for xi, yi in zip(self.x, self.y):
            if xi < 0 or yi < 0:
                raise ValueError("coordinates must be nonnegative")
            if xi == 0 and yi == 0:
                raise ValueError("invalid point: some (x_i, y_i) = (0, 0)")


@dataclass(frozen=True)
class CanonicalCoxPoint:
    """Unique orbit representative: x_i = 0 (K), free > 0 (J-K), 1 (I-J);
    y_i = 1 (J), 0 (I-J)."""

    label: tuple          # (K, J) sorted tuples
    free: tuple           # (i, value) pairs for i in J-K


def cox_point(x, y):
    p = CoxPoint(x=tuple(x), y=tuple(y))
    p.validate()
    return p


def stratum_of(p):
    """K = zero set of x, J = support of y; K <= J by validity."""
    p.validate()
    K = tuple(i for i, v in enumerate(p.x) if v == 0)
    J = tuple(i for i, v in enumerate(p.y) if v != 0)
    return (K, J)


def torus_scale(datum, p, z):
    """Action of the positive torus element prod alpha_i^vee(z_i)."""
    n = datum.n
    x = [float(p.x[i]) * float(z[i]) for i in range(n)]
    y = []
    for i in range(n):
        f = 1.0
        for k in range(n):
            f *= float(z[k]) ** datum.pairing[i][k]
        y.append(float(p.y[i]) * f)
    return cox_point(x, y)


def canonicalize(datum, p):
    """Solve the torus rescaling in logarithmic coordinates.

    First the (I-J)-torus sets x_i = 1 for i outside J (it fixes x_j for
    j in J since <w_j, alpha_k^vee> = 0 there), then the J-torus solves
    the Cartan-submatrix log-linear system to set y_j = 1 for j in J,
    rescaling x only inside J.
    """
    K, J = stratum_of(p)
    n = datum.n
    xs = [float(v) for v in p.x]
    ys = [float(v) for v in p.y]
    outside = [i for i in range(n) if i not in J]

    z = [1.0] * n
    for i in outside:
        z[i] = 1.0 / xs[i]
        xs[i] = 1.0
    for i in J:
        f = 1.0
        for k in outside:
            f *= z[k] ** datum.pairing[i][k]
        ys[i] *= f

    if J:
        rows = [[float(datum.pairing[j][k]) for k in J] for j in J]
        rhs = [-math.log(ys[j]) for j in J]
        import numpy as np
        u = np.linalg.solve(np.array(rows), np.array(rhs))
        for pos, j in enumerate(J):
            xs[j] *= math.exp(u[pos])
            ys[j] = 1.0
    free = tuple((i, xs[i]) for i in J if i not in K)
    return CanonicalCoxPoint(label=(K, J), free=free)


def equivalent(datum, p, q, rtol=EQUIV_RTOL):
    cp = canonicalize(datum, p)
    cq = canonicalize(datum, q)
    if cp.label != cq.label:
        return False
    for (i, a), (j, b) in zip(cp.free, cq.free):
        if i != j:
            return False
        if abs(a - b) > rtol * max(1.0, abs(a), abs(b)):
            return False
    return True


def canonical_to_point(datum, c):
    """Embed a canonical representative back as a CoxPoint."""
    n = datum.n
    K, J = c.label
    x = [0.0] * n
    y = [0.0] * n
    free = dict(c.free)
    for i in range(n):
        if i in K:
            x[i] = 0.0
        elif i in J:
            x[i] = free[i]
        else:
            x[i] = 1.0
        y[i] = 1.0 if i in J else 0.0
    return cox_point(x, y)


# ---------------------------------------------------------------------------
# Moment map


@dataclass(frozen=True)
class MomentData:
    datum: object
    lam: tuple
    dilate: int            # N with N * P^lambda a lattice polytope
    points: tuple          # per lattice point: (alpha-coords,
                           #   x exponents, y exponents, weight coords)


_moment_cache = {}


def moment_data(poly):
    datum = poly.datum
    key = (id(datum), poly.lam)
    hit = _moment_cache.get(key)
    if hit is not None:
        return hit
    n = datum.n
    denoms = []
    for v in list(poly.vertices.values()) + [poly.lam]:
        alpha = datum.weight_to_root_coords(v)
        denoms.extend(Fraction(a).denominator for a in alpha)
    N = linalg.lcm(denoms)
    lam_alpha = datum.weight_to_root_coords(poly.lam)
    c = [int(N * a) for a in lam_alpha]

    pts = []

    def sweep(prefix):
        if len(prefix) == n:
            xexp = [sum(prefix[i] * datum.pairing[i][j] for i in range(n))
                    for j in range(n)]
            if any(v < 0 for v in xexp):
                return
            yexp = [c[i] - prefix[i] for i in range(n)]
            wt = tuple(Fraction(sum(prefix[i] * datum.pairing[i][j]
                                    for i in range(n))) for j in range(n))
            pts.append((tuple(prefix), tuple(xexp), tuple(yexp), wt))
            return
        for k in range(c[len(prefix)] + 1):
            sweep(prefix + [k])

    sweep([])
    data = MomentData(datum=datum, lam=poly.lam, dilate=N, points=tuple(pts))
    _moment_cache[key] = data
    return data


def moment_map(p, poly):
    """Lattice-point weighted average, rescaled to P^lambda (floats)."""
    p.validate()
    data = moment_data(poly)
    n = poly.datum.n
    total = 0.0
    acc = [0.0] * n
    for _, xexp, yexp, wt in data.points:
        chi = 1.0
        for i in range(n):
            chi *= float(p.x[i]) ** xexp[i]
            chi *= float(p.y[i]) ** yexp[i]
        if chi:
            total += chi
            for j in range(n):
                acc[j] += chi * float(wt[j])
    if total == 0.0:
        raise AssertionError("character sum vanished")
    return tuple(v / (total * data.dilate) for v in acc)
