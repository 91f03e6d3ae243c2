"""Peterson-variety points in normal form x * wdot(w_J), stratum
classification by vanishing minors, the map Psi into Cox coordinates,
component splitting for reducible data, and low-rank numerical
inversion of the minor map.
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from . import grouprep, linalg, rootdata, toric

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class PetersonPoint:
    """Normal form exp(sum coords * centralizer basis) * wdot(w_J)."""

    J: tuple
    coords: tuple


def make_point(ws, J, coords):
    J = tuple(sorted(set(J)))
    coords = tuple(Fraction(c) for c in coords)
    if len(coords) != len(J):
        raise ValueError("need one coordinate per centralizer basis element")
    return PetersonPoint(J=J, coords=coords)


def unipotent_part(ws, p):
    """The element x = exp(sum coords * basis) of the centralizer."""
    basis = grouprep.centralizer_basis(ws, p.J)
    elem = {}
    for c, b in zip(p.coords, basis):
        for label, v in b.items():
            elem[label] = elem.get(label, ZERO) + c * v
    return grouprep.exp_element(elem)


def element(ws, p):
    wj = rootdata.longest_element(ws.datum, p.J)
    return unipotent_part(ws, p) * grouprep.wdot(wj)


def peterson_membership(g, ws):
    """True iff Ad_{g^{-1}}(e) has no component on f_alpha, ht(alpha) >= 2."""
    rep = ws.adjoint_rep()
    vec = grouprep.ad_conjugate_e(g, ws)
    for slot, label in enumerate(rep.module.labels):
        if label[0] == 'f' and sum(ws.datum.positive_roots[label[1]]) >= 2:
            if vec[slot] != 0:
                return False
    return True


def deltas(ws, p):
    """All fundamental minors of the normal-form element, exact."""
    g = element(ws, p)
    return tuple(grouprep.delta_varpi(i, g, ws)
                 for i in range(ws.datum.n))


def classify_stratum(ws, p, sampled_tnn=False):
    """K from vanishing minors; minors outside J must be exactly 1."""
    vals = deltas(ws, p)
    n = ws.datum.n
    for i in range(n):
        if i not in p.J:
            assert vals[i] == 1, "minor outside J must equal 1"
    if sampled_tnn and any(v < 0 for v in vals):
        raise AssertionError(
            "negative minor on a TNN-sampled point contradicts minor "
            "nonnegativity")
    K = tuple(i for i in range(n) if vals[i] == 0)
    return (K, p.J)


def minor_vector(ws, p):
    """(Delta values, q values) of the normal-form element, unvalidated."""
    g = element(ws, p)
    xs = tuple(grouprep.delta_varpi(i, g, ws) for i in range(ws.datum.n))
    ys = tuple(grouprep.q_coefficient(i, g, ws) for i in range(ws.datum.n))
    return xs, ys


def psi(ws, p):
    """[Delta_1, ..., Delta_n ; q_1, ..., q_n] as a Cox point."""
    xs, ys = minor_vector(ws, p)
    return toric.cox_point(xs, ys)


@dataclass(frozen=True)
class ComponentPoint:
    nodes: tuple          # nodes of the component in the ambient datum
    datum: object         # component root datum
    point: PetersonPoint


def component_datum(datum, nodes):
    entries = [[datum.cartan.entries[i][j] for j in nodes] for i in nodes]
    return rootdata.build_root_datum(rootdata.cartan_from_entries(entries))


def split_components(ws, p, partition):
    """Per-component Peterson points whose minors concatenate to psi's."""
    blocks = [tuple(sorted(b)) for b in partition]
    expected = [tuple(b) for b in rootdata.dynkin_components(ws.datum)]
    if sorted(blocks) != sorted(expected):
        raise ValueError("partition does not match the Dynkin components")
    basis = grouprep.centralizer_basis(ws, p.J)
    out = []
    for block in blocks:
        sub = component_datum(ws.datum, block)
        sub_ws = grouprep.Workspace(sub)
        sub_j = tuple(block.index(i) for i in p.J if i in block)
        sub_basis = grouprep.centralizer_basis(sub_ws, sub_j)
        # restrict the ambient Lie element to this block and re-express
        elem = {}
        for c, b in zip(p.coords, basis):
            for (kind, idx), v in b.items():
                root = ws.datum.positive_roots[idx]
                if any(root[i] for i in block):
                    sub_root = tuple(root[i] for i in block)
                    sub_idx = sub_ws.chev.root_index[sub_root]
                    key = (kind, sub_idx)
                    elem[key] = elem.get(key, ZERO) + c * v
        labels = sorted({l for b in sub_basis for l in b} | set(elem))
        a = [[b.get(l, ZERO) for b in sub_basis] for l in labels]
        rhs = [elem.get(l, ZERO) for l in labels]
        coords = linalg.solve(a, rhs) if sub_basis else []
        out.append(ComponentPoint(
            nodes=block, datum=sub,
            point=PetersonPoint(J=sub_j, coords=tuple(coords))))
    return out


def sample_points(ws, J, count, seed=0, allow_zeros=True, tnn_only=False):
    """Deterministic nonnegative-coordinate samples of the J-centralizer.

    With tnn_only, rejection-sample until all fundamental minors of the
    normal-form element are nonnegative.
    """
    rng = random.Random(seed)
    J = tuple(sorted(set(J)))
    out = []
    while len(out) < count:
        coords = []
        for _ in J:
            if allow_zeros and rng.random() < 0.25:
                coords.append(ZERO)
            else:
                coords.append(Fraction(rng.randint(1, 12), rng.randint(1, 6)))
        p = make_point(ws, J, coords)
        if tnn_only and any(v < 0 for v in deltas(ws, p)):
            continue
        out.append(p)
    return out


# ---------------------------------------------------------------------------
# Low-rank inversion of the minor map


class InversionError(RuntimeError):
    pass


def _deltas_float(ws, J, wj, coords_by_node):
    basis = grouprep.centralizer_basis(ws, J)
    elem = {}
    for c, b in zip(coords_by_node, basis):
        for label, v in b.items():
            elem[label] = elem.get(label, 0) + c * float(v)
    g = grouprep.exp_element({l: Fraction(c) for l, c in elem.items()}) \
        * grouprep.wdot(wj)
    return [float(grouprep.delta_varpi(i, g, ws, as_float=True)) for i in J]


def invert_theorem59(ws, target, J=None, tol=1e-9, restarts=12, seed=0,
                     grid_starts=True):
    """Recover nonnegative centralizer coordinates from target minors.

    Implemented for J whose Dynkin components have rank <= 2; Newton
    iteration polished from a coarse nonnegative grid start.
    """
    n = ws.datum.n
    J = tuple(range(n)) if J is None else tuple(sorted(set(J)))
    target = [float(t) for t in target]
    if len(target) != len(J):
        raise ValueError("need one target per index in J")
    if any(t < 0 for t in target):
        raise ValueError("targets must be nonnegative")
    sub_comps = [tuple(b) for b in rootdata.dynkin_components(ws.datum)]
    comps = []
    for block in sub_comps:
        bj = [i for i in block if i in J]
        if bj:
            # components of J inside this Dynkin block
            for piece in _graph_components(ws.datum, bj):
                comps.append(piece)
    if any(len(c) > 2 for c in comps):
        raise NotImplementedError("inversion implemented for rank <= 2 "
                                  "components only")

    wj = rootdata.longest_element(ws.datum, J)
    pos = {j: k for k, j in enumerate(J)}
    coords = [0.0] * len(J)
    rng = random.Random(seed)

    for comp in comps:
        tgt = [target[pos[j]] for j in comp]
        if len(comp) == 1:
            sol = [tgt[0]]
        else:
            sol = _invert_rank2(ws, J, wj, pos, comp, tgt, tol, rng,
                                restarts=restarts, grid_starts=grid_starts)
        for j, v in zip(comp, sol):
            coords[pos[j]] = v

    got = _deltas_float(ws, J, wj, coords)
    resid = max(abs(g - t) for g, t in zip(got, target))
    if resid >= tol:
        raise InversionError("Newton inversion residual %.3e >= %.1e"
                             % (resid, tol))
    return make_point(ws, J, [Fraction(c) for c in coords])


def _graph_components(datum, nodes):
    nodes = list(nodes)
    seen = set()
    comps = []
    for start in nodes:
        if start in seen:
            continue
        block = []
        stack = [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            block.append(i)
            for j in nodes:
                if j not in seen and datum.pairing[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(block)))
    return comps


def _invert_rank2(ws, J, wj, pos, comp, tgt, tol, rng, budget=60,
                  restarts=12, grid_starts=True):
    def f(c2):
        full = [0.0] * len(J)
        for j, v in zip(comp, c2):
            full[pos[j]] = v
        got = _deltas_float(ws, J, wj, full)
        return [got[pos[j]] - t for j, t in zip(comp, tgt)]

    def newton(start):
        c = list(start)
        for _ in range(budget):
            r = f(c)
            if max(abs(v) for v in r) < tol * 1e-2:
                return c
            h = 1e-7
            jac = []
            for k in range(2):
                cp = list(c)
                cp[k] += h
                rp = f(cp)
                jac.append([(rp[m] - r[m]) / h for m in range(2)])
            det = jac[0][0] * jac[1][1] - jac[1][0] * jac[0][1]
            if det == 0:
                return None
            dx = (r[0] * jac[1][1] - r[1] * jac[1][0]) / det
            dy = (r[1] * jac[0][0] - r[0] * jac[0][1]) / det
            c = [c[0] - dx, c[1] - dy]
        return None

    if grid_starts:
        grid = [0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 12.0]
        starts = sorted(((a, b) for a in grid for b in grid),
                        key=lambda s: max(abs(v) for v in f(list(s))))[:8]
    else:
        starts = []
    for start in starts + [(rng.uniform(0, 10), rng.uniform(0, 10))
                           for _ in range(restarts)]:
        sol = newton(list(start))
        if sol is None:
            continue
        if _tnn_certified(ws, J, pos, comp, sol, tol):
            return sol
    raise InversionError("no convergent Newton start for targets %r" % (tgt,))


def _tnn_certified(ws, J, pos, comp, sol, tol):
    """Accept the solution on the nonnegative side; exact minor test in
    type A components, coordinate sign check otherwise."""
    datum = ws.datum
    n = datum.n
    simply_laced = all(
        datum.pairing[i][j] in (0, -1, 2)
        for i in range(n) for j in range(n))
    if not simply_laced:
        return all(v > -tol for v in sol)
    full = [0.0] * len(J)
    for j, v in zip(comp, sol):
        full[pos[j]] = v
    basis = grouprep.centralizer_basis(ws, J)
    elem = {}
    for c, b in zip(full, basis):
        for label, v in b.items():
            elem[label] = elem.get(label, ZERO) + Fraction(c) * v
    x = grouprep.exp_element(elem)
    rep = ws.fundamental_rep(0, as_float=True)
    mat = x.matrix(rep)
    try:
        return grouprep.tnn_membership_typeA(mat, tol=tol)
    except ValueError:
        return all(v > -tol for v in sol)
