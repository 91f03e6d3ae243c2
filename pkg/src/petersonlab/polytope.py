"""The fan Sigma, the dominant-chamber weight polytope P^lambda, its face
lattice, the cube isomorphism and the normal-fan comparison.

Coordinates: points of the weight space are given in fundamental-weight
coordinates, coweight vectors in fundamental-coweight coordinates; with
these bases <w_i, alpha_j^vee> = delta_ij and the polytope inequalities
become linear forms with exact rational coefficients.

The hull oracle is deliberately independent of the H-representation: it
computes the Weyl-orbit hull (float qhull proposes facets, every
hyperplane is re-derived and certified exactly) and clips by the
chamber, recovering vertices from exactly verified active-set solves.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg

ZERO = Fraction(0)
ONE = Fraction(1)


def _primitive(vec):
    """Scale a rational vector to coprime integers, keeping direction."""
    denom = linalg.lcm([Fraction(v).denominator for v in vec])
    ints = [int(Fraction(v) * denom) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints)


@dataclass(frozen=True)
class Cone:
    label: tuple       # (K, J) as sorted tuples
    rays: tuple        # primitive coweight vectors

    @property
    def dim(self):
        return len(self.rays)


@dataclass(frozen=True)
class Fan:
    datum: object
    cones: dict        # (K, J) -> Cone


def minus_coroot_ray(datum, i):
    return _primitive([-datum.pairing[j][i] for j in range(datum.n)])


def coweight_ray(datum, i):
    return tuple(1 if j == i else 0 for j in range(datum.n))


def _subsets(items):
    items = list(items)
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return out


def build_fan(datum):
    """All 3^n simplicial cones sigma_{K,J}, K and J disjoint."""
    n = datum.n
    cones = {}
    for K in _subsets(range(n)):
        rest = [i for i in range(n) if i not in K]
        for J in _subsets(rest):
            rays = tuple(minus_coroot_ray(datum, i) for i in K) + \
                tuple(coweight_ray(datum, i) for i in J)
            if rays:
                m = [list(map(Fraction, r)) for r in rays]
                if linalg.rank(m) != len(rays):
                    raise AssertionError("cone is not simplicial")
            cones[(tuple(sorted(K)), tuple(sorted(J)))] = Cone(
                label=(tuple(sorted(K)), tuple(sorted(J))), rays=rays)
    assert len(cones) == 3 ** n
    return Fan(datum=datum, cones=cones)


def cone_contains(cone, vec):
    """Exact membership of a vector in a simplicial cone."""
    if not cone.rays:
        return all(v == 0 for v in vec)
    a = [[Fraction(r[k]) for r in cone.rays] for k in range(len(vec))]
    try:
        coeffs = linalg.solve(a, [Fraction(v) for v in vec])
    except ValueError:
        # rays do not span; check consistency by rank
        aug = [row + [Fraction(vec[k])] for k, row in enumerate(a)]
        if linalg.rank(aug) != linalg.rank(a):
            return False
        # underdetermined only if rays dependent, excluded by simpliciality
        return False
    return all(c >= 0 for c in coeffs)


@dataclass(frozen=True)
class HPolytope:
    datum: object
    lam: tuple           # fundamental-weight coordinates, regular dominant
    vertices: dict       # J (sorted tuple) -> point tuple
    cap_values: tuple    # <w_i^vee, lambda> per i

    def wall_value(self, i, point):
        return Fraction(point[i])

    def cap_value(self, i, point):
        return self.datum.weight_to_root_coords(point)[i]


@dataclass(frozen=True)
class Face:
    K: tuple
    J: tuple
    dim: int
    vertex_js: tuple     # J' labels of contained vertices


@dataclass(frozen=True)
class FaceLattice:
    faces: dict          # (K, J) -> Face

    def leq(self, a, b):
        """Face containment via vertex sets."""
        return set(self.faces[a].vertex_js) <= set(self.faces[b].vertex_js)


def build_polytope(datum, lam):
    """P^lambda with its 2^n vertices and 3^n faces, exactly."""
    n = datum.n
    lam = tuple(Fraction(v) for v in lam)
    if any(v <= 0 for v in lam):
        raise ValueError("lambda must be regular dominant "
                         "(all fundamental-weight coordinates > 0)")
    pinv = datum.pairing_inverse()
    lam_alpha = [sum(lam[j] * pinv[j][i] for j in range(n)) for i in range(n)]

    vertices = {}
    for J in _subsets(range(n)):
        J = tuple(sorted(J))
        rows = []
        rhs = []
        for i in range(n):
            if i in J:
                rows.append([ONE if j == i else ZERO for j in range(n)])
                rhs.append(ZERO)
            else:
                rows.append([pinv[j][i] for j in range(n)])
                rhs.append(lam_alpha[i])
        v = tuple(linalg.solve(rows, rhs))
        vertices[J] = v

    poly = HPolytope(datum=datum, lam=lam, vertices=vertices,
                     cap_values=tuple(lam_alpha))
    for J, v in vertices.items():
        for i in range(n):
            assert poly.wall_value(i, v) >= 0
            assert poly.cap_value(i, v) <= lam_alpha[i]

    faces = {}
    for J in _subsets(range(n)):
        J = tuple(sorted(J))
        for K in _subsets(J):
            K = tuple(sorted(K))
            vjs = tuple(sorted(
                J2 for J2 in vertices if set(K) <= set(J2) <= set(J)))
            pts = [vertices[j2] for j2 in vjs]
            base = pts[0]
            diffs = [[p[k] - base[k] for k in range(n)] for p in pts[1:]]
            dim = linalg.rank(diffs) if diffs else 0
            assert dim == len(J) - len(K)
            faces[(K, J)] = Face(K=K, J=J, dim=dim, vertex_js=vjs)
    assert len(faces) == 3 ** n
    return poly, FaceLattice(faces=faces)


def cube_check(lattice):
    """Explicit poset isomorphism with the face poset of the n-cube.

    A cube face is encoded per coordinate as '0', '1' or '*'; the map
    sends (K, J) to (0 for i in K, 1 for i outside J, * for i in J-K).
    Returns (ok, iso dict).
    """
    labels = sorted(lattice.faces)
    n = len(max((j for _, j in labels), key=len)) if labels else 0

    def to_cube(label):
        K, J = label
        return tuple('0' if i in K else ('*' if i in J else '1')
                     for i in range(n))

    def cube_leq(a, b):
        return all(cb == '*' or ca == cb for ca, cb in zip(a, b))

    iso = {label: to_cube(label) for label in labels}
    if len(set(iso.values())) != len(labels):
        return False, iso
    for a in labels:
        for b in labels:
            if lattice.leq(a, b) != cube_leq(iso[a], iso[b]):
                return False, iso
    return True, iso


def normal_fan(poly, lattice):
    """Cones of outward facet normals, computed from vertex incidences."""
    datum = poly.datum
    n = datum.n
    cones = {}
    for (K, J), face in lattice.faces.items():
        pts = [poly.vertices[j2] for j2 in face.vertex_js]
        active_walls = [i for i in range(n)
                        if all(poly.wall_value(i, p) == 0 for p in pts)]
        active_caps = [i for i in range(n)
                       if all(poly.cap_value(i, p) == poly.cap_values[i]
                              for p in pts)]
        rays = tuple(minus_coroot_ray(datum, i) for i in active_walls) + \
            tuple(coweight_ray(datum, i) for i in active_caps)
        cones[(K, J)] = Cone(label=(K, J), rays=rays)
    return Fan(datum=datum, cones=cones)


def normal_fan_matches_sigma(nfan, fan):
    """Label-aware comparison tau_{K,J} = sigma_{K, complement of J}."""
    n = fan.datum.n
    for (K, J), cone in nfan.cones.items():
        comp = tuple(i for i in range(n) if i not in J)
        sigma = fan.cones.get((K, comp))
        if sigma is None:
            return False
        if set(cone.rays) != set(sigma.rays):
            return False
    return True


# ---------------------------------------------------------------------------
# Independent oracle: Weyl-orbit hull clipped by the chamber


def weyl_orbit(datum, lam):
    lam = tuple(Fraction(v) for v in lam)
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(datum.n):
                c = w[i]
                if c == 0:
                    continue
                row = datum.pairing[i]
                img = tuple(w[j] - c * row[j] for j in range(datum.n))
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(seen)


def _exact_hull_facets(points):
    """Certified supporting hyperplanes (a, b) with a.x <= b for all points.

    Float qhull proposes candidate facets; each hyperplane is recomputed
    exactly from incident points and verified against the whole set.
    """
    n = len(points[0])
    if n == 1:
        lo = min(p[0] for p in points)
        hi = max(p[0] for p in points)
        return [((Fraction(-1),), -lo), ((Fraction(1),), hi)]
    import numpy as np
    from scipy.spatial import ConvexHull
    arr = np.array([[float(v) for v in p] for p in points])
    hull = ConvexHull(arr)
    facets = {}
    for simplex in hull.simplices:
        pts = [points[k] for k in simplex]
        base = pts[0]
        diffs = [[p[k] - base[k] for k in range(n)] for p in pts[1:]]
        normals = linalg.kernel_basis(diffs)
        if len(normals) != 1:
            continue
        a = list(normals[0])
        b = sum(a[k] * base[k] for k in range(n))
        vals = [sum(a[k] * p[k] for k in range(n)) for p in points]
        if all(v <= b for v in vals):
            pass
        elif all(v >= b for v in vals):
            a = [-v for v in a]
            b = -b
        else:
            raise AssertionError("proposed hyperplane does not support hull")
        prim = _primitive(a)
        scale = next(Fraction(prim[k]) / a[k] for k in range(n) if a[k])
        facets[(prim, b * scale)] = True
    return list(facets)


def hull_oracle(datum, lam):
    """Vertices of Conv(W.lambda) intersected with the dominant chamber."""
    n = datum.n
    lam = tuple(Fraction(v) for v in lam)
    orbit = weyl_orbit(datum, lam)
    hull_ineqs = _exact_hull_facets(orbit)
    walls = [(tuple(-ONE if j == i else ZERO for j in range(n)), ZERO)
             for i in range(n)]
    ineqs = hull_ineqs + walls

    if n == 1:
        cands = [Fraction(b) / a[0] for a, b in ineqs if a[0]]
        verts = {(c,) for c in cands
                 if all(a[0] * c <= b for a, b in ineqs)}
        return sorted(verts)

    import numpy as np
    from scipy.spatial import HalfspaceIntersection
    hs = np.array([[float(v) for v in a] + [-float(b)] for a, b in ineqs])
    interior = np.array([float(v) / 2 for v in lam])
    inter = HalfspaceIntersection(hs, interior)

    verts = set()
    for pt in inter.intersections:
        active = []
        for a, b in ineqs:
            val = sum(float(a[k]) * pt[k] for k in range(n)) - float(b)
            scale = max(1.0, max(abs(float(v)) for v in a))
            if abs(val) < 1e-6 * scale:
                active.append((a, b))
        rows = []
        rhs = []
        for a, b in active:
            cand = rows + [[Fraction(v) for v in a]]
            if linalg.rank(cand) > len(rows):
                rows = cand
                rhs.append(Fraction(b))
            if len(rows) == n:
                break
        if len(rows) < n:
            continue
        v = tuple(linalg.solve(rows, rhs))
        if all(sum(a[k] * v[k] for k in range(n)) <= b for a, b in ineqs):
            verts.add(v)
    return sorted(verts)
