"""Verification suites: each suite re-checks one verified claim across
catalog types with seeded sampling and produces a machine-readable
report (deterministic for a fixed suite, type and seed).
"""

from dataclasses import dataclass, field
from fractions import Fraction
import random

from . import grouprep, liealg, peterson, polytope, rootdata, toric

CATALOG_TYPES = tuple(rootdata.CATALOG)
REDUCIBLE_TYPES = ("A1xA1", "A2xA1")
LOW_RANK_TYPES = ("A1", "A2")
POWER_MINOR_TYPES = ("A1", "A2", "A3", "B2")

SUITE_CLAIMS = {
    "lemma53": "q-coefficients of normal-form points are exactly 0 "
               "outside J and exactly 1 on J",
    "prop44": "fundamental minors are nonnegative on totally nonnegative "
              "elements times Weyl representatives",
    "prop35": "fundamental minors restrict to 1 outside J on the Levi "
              "subgroup and to the subgroup's own minors on J",
    "cube": "the dominant weight polytope is combinatorially an n-cube "
            "and matches the independent hull oracle",
    "normalfan": "the normal fan of the polytope equals the fan Sigma "
                 "under complementation of the cap label",
    "psi-strata": "the minor map sends each TNN stratum into the "
                  "matching toric stratum, injectively",
    "splitting": "minor and q vectors of a reducible datum are the "
                 "concatenations over its Dynkin components",
    "prop76": "adjoint-type minors are the m_i-th powers of fundamental "
              "minors; the contravariant form is Weyl-invariant",
    "theorem59": "the minor map is invertible on nonnegative targets at "
                 "low rank, with unique TNN preimages",
    "moment-cells": "the moment map sends each toric stratum into the "
                    "relative interior of the matching polytope face",
}

SUITE_NAMES = tuple(SUITE_CLAIMS) + ("all",)


@dataclass
class VerificationReport:
    suite: str
    type_name: str
    seed: int
    cases: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok, input_rendering, expected, got, claim):
        self.cases += 1
        if not ok:
            self.failures.append({
                "input": str(input_rendering),
                "expected": str(expected),
                "got": str(got),
                "claim": claim,
            })

    def merge(self, other):
        self.cases += other.cases
        self.failures.extend(other.failures)

    def to_dict(self):
        return {
            "suite": self.suite,
            "type_name": self.type_name,
            "seed": self.seed,
            "cases": self.cases,
            "failures": self.failures,
            "ordering": rootdata.ORDERING,
            "claim": SUITE_CLAIMS.get(self.suite, "all verified claims"),
        }


_workspaces = {}


def _ws(type_name):
    if type_name not in _workspaces:
        _workspaces[type_name] = grouprep.Workspace(
            rootdata.datum_from_name(type_name))
    return _workspaces[type_name]


def _subsets(items):
    items = list(items)
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return out


def _per_subset(total, n):
    return max(1, -(-total // (2 ** n)))


def _random_levi_word(datum, J, rng, length=6):
    word = []
    for _ in range(length):
        j = rng.choice(J)
        kind = rng.choice(("x", "y"))
        t = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        word.append((kind, j, t))
    return grouprep.GroupElement(tuple(word))


# ---------------------------------------------------------------------------
# suites


def suite_lemma53(type_name, samples, seed):
    rep = VerificationReport("lemma53", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["lemma53"]
    for J in _subsets(range(ws.datum.n)):
        pts = peterson.sample_points(ws, J, samples, seed=seed)
        for p in pts:
            g = peterson.element(ws, p)
            got = tuple(grouprep.q_coefficient(i, g, ws)
                        for i in range(ws.datum.n))
            want = tuple(Fraction(1 if i in J else 0)
                         for i in range(ws.datum.n))
            rep.check(got == want,
                      "%s J=%s coords=%s" % (type_name, J, p.coords),
                      want, got, claim)
    return rep


def suite_prop44(type_name, samples, seed):
    rep = VerificationReport("prop44", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["prop44"]
    rng = random.Random(seed)
    per = _per_subset(samples, ws.datum.n)
    for J in _subsets(range(ws.datum.n)):
        w = rootdata.longest_element(ws.datum, J)
        for _ in range(per):
            s = grouprep.tnn_sample(ws.datum, w, rng=rng)
            g = s.element * grouprep.wdot(w)
            vals = tuple(grouprep.delta_varpi(i, g, ws)
                         for i in range(ws.datum.n))
            rep.check(all(v >= 0 for v in vals),
                      "%s w_J J=%s params=%s" % (type_name, J, s.params),
                      "all minors >= 0", vals, claim)
    return rep


def suite_prop35(type_name, samples, seed):
    rep = VerificationReport("prop35", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["prop35"]
    rng = random.Random(seed)
    n = ws.datum.n
    for J in _subsets(range(n)):
        if not J:
            continue
        sub = peterson.component_datum(ws.datum, J)
        sub_ws = grouprep.Workspace(sub)
        for _ in range(samples):
            g = _random_levi_word(ws.datum, J, rng)
            sub_g = grouprep.GroupElement(tuple(
                (kind, J.index(j), t) for kind, j, t in g.word))
            for i in range(n):
                got = grouprep.delta_varpi(i, g, ws)
                if i in J:
                    want = grouprep.delta_varpi(J.index(i), sub_g, sub_ws)
                else:
                    want = Fraction(1)
                rep.check(got == want,
                          "%s J=%s i=%d word=%s" % (type_name, J, i, g.word),
                          want, got, claim)
    return rep


def _random_regular_lambdas(datum, count, seed):
    rng = random.Random(seed)
    return [tuple(Fraction(rng.randint(1, 9), rng.randint(1, 4))
                  for _ in range(datum.n))
            for _ in range(count)]


def suite_cube(type_name, samples, seed):
    rep = VerificationReport("cube", type_name, seed)
    datum = rootdata.datum_from_name(type_name)
    claim = SUITE_CLAIMS["cube"]
    n = datum.n
    lams = [tuple(Fraction(1) for _ in range(n))]
    lams += _random_regular_lambdas(datum, 5, seed)
    for lam in lams:
        poly, lattice = polytope.build_polytope(datum, lam)
        tag = "%s lambda=%s" % (type_name, lam)
        rep.check(len(lattice.faces) == 3 ** n, tag + " face count",
                  3 ** n, len(lattice.faces), claim)
        rep.check(len(poly.vertices) == 2 ** n, tag + " vertex count",
                  2 ** n, len(poly.vertices), claim)
        facets = [f for f in lattice.faces.values() if f.dim == n - 1]
        rep.check(len(facets) == 2 * n, tag + " facet count",
                  2 * n, len(facets), claim)
        dims_ok = all(f.dim == len(f.J) - len(f.K)
                      for f in lattice.faces.values())
        rep.check(dims_ok, tag + " face dims", "dim = |J| - |K|", dims_ok,
                  claim)
        ok, _ = polytope.cube_check(lattice)
        rep.check(ok, tag + " cube isomorphism", True, ok, claim)
        oracle = polytope.hull_oracle(datum, lam)
        ours = sorted(poly.vertices.values())
        rep.check(ours == oracle, tag + " hull oracle",
                  oracle, ours, claim)
    return rep


def suite_normalfan(type_name, samples, seed):
    rep = VerificationReport("normalfan", type_name, seed)
    datum = rootdata.datum_from_name(type_name)
    claim = SUITE_CLAIMS["normalfan"]
    n = datum.n
    poly, lattice = polytope.build_polytope(
        datum, tuple(Fraction(1) for _ in range(n)))
    nfan = polytope.normal_fan(poly, lattice)
    fan = polytope.build_fan(datum)
    for (K, J), cone in sorted(nfan.cones.items()):
        comp = tuple(i for i in range(n) if i not in J)
        sigma = fan.cones[(K, comp)]
        rep.check(set(cone.rays) == set(sigma.rays),
                  "%s tau_(%s,%s)" % (type_name, K, J),
                  sorted(sigma.rays), sorted(cone.rays), claim)
    return rep


def suite_psi_strata(type_name, samples, seed):
    rep = VerificationReport("psi-strata", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["psi-strata"]
    datum = ws.datum
    per = min(_per_subset(samples, datum.n), 12)
    for J in _subsets(range(datum.n)):
        pts = peterson.sample_points(ws, J, per, seed=seed, tnn_only=True)
        pts = list({p.coords: p for p in pts}.values())
        canon = []
        for p in pts:
            c = peterson.psi(ws, p)
            label = peterson.classify_stratum(ws, p, sampled_tnn=True)
            cc = toric.canonicalize(datum, c)
            rep.check(cc.label == label,
                      "%s J=%s coords=%s" % (type_name, J, p.coords),
                      label, cc.label, claim)
            canon.append((p, c))
        for a in range(len(canon)):
            for b in range(a + 1, len(canon)):
                eq = toric.equivalent(datum, canon[a][1], canon[b][1])
                rep.check(not eq,
                          "%s J=%s injectivity %s vs %s"
                          % (type_name, J, canon[a][0].coords,
                             canon[b][0].coords),
                          "inequivalent images", "equivalent", claim)
    return rep


def suite_splitting(type_name, samples, seed):
    rep = VerificationReport("splitting", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["splitting"]
    datum = ws.datum
    comps = [tuple(b) for b in rootdata.dynkin_components(datum)]
    rng = random.Random(seed)
    for _ in range(samples):
        J = tuple(sorted(rng.sample(range(datum.n),
                                    rng.randint(0, datum.n)))) \
            if rng.random() < 0.3 else tuple(range(datum.n))
        coords = [Fraction(rng.randint(0, 12), rng.randint(1, 6))
                  for _ in J]
        p = peterson.make_point(ws, J, coords)
        full_x, full_y = peterson.minor_vector(ws, p)
        parts = peterson.split_components(ws, p, comps)
        got_x = [None] * datum.n
        got_y = [None] * datum.n
        for cp in parts:
            sws = grouprep.Workspace(cp.datum)
            cx, cy = peterson.minor_vector(sws, cp.point)
            for k, i in enumerate(cp.nodes):
                got_x[i] = cx[k]
                got_y[i] = cy[k]
        ok = tuple(got_x) == full_x and tuple(got_y) == full_y
        rep.check(ok, "%s J=%s coords=%s" % (type_name, J, coords),
                  (full_x, full_y), (tuple(got_x), tuple(got_y)), claim)
    return rep


def suite_prop76(type_name, samples, seed):
    rep = VerificationReport("prop76", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["prop76"]
    datum = ws.datum
    rng = random.Random(seed)
    exps = ws.exponents
    for i in range(datum.n):
        prep = ws.power_rep(i)
        m = prep.module
        want_dim = liealg.weyl_dimension(datum, m.highest_weight)
        rep.check(m.dimension == want_dim,
                  "%s V_{%d w_%d} dimension" % (type_name, exps[i], i),
                  want_dim, m.dimension, claim)
        w0mat = grouprep.wdot(ws.w0()).matrix(prep)
        gram = prep.gram()
        d = prep.dim
        lhs = [[sum(w0mat[a][r] * sum(gram[a][b] * w0mat[b][c]
                                      for b in range(d) if gram[a][b])
                    for a in range(d) if w0mat[a][r])
                for c in range(d)] for r in range(d)]
        rep.check(lhs == gram,
                  "%s contravariant-form invariance i=%d" % (type_name, i),
                  "M^T G M = G", lhs == gram, claim)
        full = tuple(range(datum.n))
        w0dot = grouprep.wdot(ws.w0())
        for _ in range(samples):
            coords = [Fraction(rng.randint(0, 9), rng.randint(1, 4))
                      for _ in full]
            x = peterson.unipotent_part(
                ws, peterson.make_point(ws, full, coords))
            fund = grouprep.delta_varpi(i, x * w0dot, ws)
            power = grouprep.delta_adjoint_type(
                i, w0dot.inverse() * x * w0dot, ws)
            rep.check(power == fund ** exps[i],
                      "%s i=%d coords=%s" % (type_name, i, coords),
                      fund ** exps[i], power, claim)
    return rep


def suite_theorem59(type_name, samples, seed):
    rep = VerificationReport("theorem59", type_name, seed)
    ws = _ws(type_name)
    claim = SUITE_CLAIMS["theorem59"]
    if type_name == "A1":
        for k in range(11):
            t = Fraction(k)
            p = peterson.invert_theorem59(ws, [t])
            rep.check(p.coords == (t,), "A1 target %s" % t, (t,), p.coords,
                      claim)
        return rep
    if type_name != "A2":
        rep.check(True, "%s skipped (rank > 2 per component)" % type_name,
                  "-", "-", claim)
        return rep
    vals = [10.0 * k / 9 for k in range(10)]
    for a in vals:
        for b in vals:
            tag = "A2 target (%.4f, %.4f)" % (a, b)
            try:
                p = peterson.invert_theorem59(ws, [a, b], seed=seed)
            except peterson.InversionError as exc:
                rep.check(False, tag, "convergence", str(exc), claim)
                continue
            got = [float(v) for v in peterson.deltas(ws, p)]
            resid = max(abs(g - t) for g, t in zip(got, (a, b)))
            rep.check(resid < 1e-9, tag + " residual", "< 1e-9", resid,
                      claim)
            x = peterson.unipotent_part(ws, p)
            mat = x.matrix(ws.fundamental_rep(0, as_float=True))
            tnn_ok = grouprep.tnn_membership_typeA(mat, tol=1e-9)
            rep.check(tnn_ok, tag + " minor test", True, tnn_ok, claim)
            probes = []
            for s in range(1, 11):
                try:
                    q = peterson.invert_theorem59(
                        ws, [a, b], seed=seed + s, grid_starts=False)
                    probes.append([float(c) for c in q.coords])
                except peterson.InversionError:
                    pass
            spread = max((abs(u - v) for pr in probes
                          for u, v in zip(pr, [float(c) for c in p.coords])),
                         default=0.0)
            # near the boundary the map is quadratic in the coordinates,
            # so residual 1e-9 only pins them to ~sqrt of that
            rep.check(bool(probes) and spread < 1e-4,
                      tag + " uniqueness (%d probes)" % len(probes),
                      "< 1e-4", spread, claim)
    return rep


def suite_moment_cells(type_name, samples, seed):
    rep = VerificationReport("moment-cells", type_name, seed)
    datum = rootdata.datum_from_name(type_name)
    claim = SUITE_CLAIMS["moment-cells"]
    n = datum.n
    lam = tuple(Fraction(1) for _ in range(n))
    poly, _ = polytope.build_polytope(datum, lam)
    pinv = [[float(v) for v in row] for row in datum.pairing_inverse()]
    caps = [float(v) for v in poly.cap_values]
    rng = random.Random(seed)
    tol = 1e-9

    def face_of(mu):
        alpha = [sum(mu[j] * pinv[j][i] for j in range(n)) for i in range(n)]
        K = tuple(i for i in range(n) if abs(mu[i]) <= tol)
        capped = tuple(i for i in range(n)
                       if abs(alpha[i] - caps[i]) <= tol)
        J = tuple(i for i in range(n) if i not in capped)
        strict = all(mu[i] > tol for i in range(n) if i not in K) and \
            all(alpha[i] < caps[i] - tol for i in range(n) if i in J)
        return (K, J), strict

    for _ in range(samples):
        J = tuple(sorted(rng.sample(range(n), rng.randint(0, n))))
        K = tuple(sorted(rng.sample(J, rng.randint(0, len(J))))) \
            if J else ()
        x = [0.0 if i in K else rng.uniform(0.3, 3.0) for i in range(n)]
        y = [rng.uniform(0.3, 3.0) if i in J else 0.0 for i in range(n)]
        p = toric.cox_point(x, y)
        mu = toric.moment_map(p, poly)
        got, strict = face_of(mu)
        rep.check(got == (K, J) and strict,
                  "%s stratum (%s,%s) x=%s y=%s" % (type_name, K, J, x, y),
                  ((K, J), True), (got, strict), claim)

    top = toric.cox_point([1.0] * n, [0.0] * n)
    mu = toric.moment_map(top, poly)
    rep.check(all(mu[i] == float(lam[i]) for i in range(n)),
              "%s point [1;0]" % type_name, lam, mu, claim)
    bot = toric.cox_point([0.0] * n, [1.0] * n)
    mu = toric.moment_map(bot, poly)
    rep.check(all(v == 0.0 for v in mu),
              "%s point [0;1]" % type_name, (0,) * n, mu, claim)
    return rep


DEFAULT_SAMPLES = {
    "lemma53": 50,
    "prop44": 200,
    "prop35": 50,
    "cube": 0,
    "normalfan": 0,
    "psi-strata": 50,
    "splitting": 50,
    "prop76": 10,
    "theorem59": 0,
    "moment-cells": 100,
}

_SUITE_FUNCS = {
    "lemma53": suite_lemma53,
    "prop44": suite_prop44,
    "prop35": suite_prop35,
    "cube": suite_cube,
    "normalfan": suite_normalfan,
    "psi-strata": suite_psi_strata,
    "splitting": suite_splitting,
    "prop76": suite_prop76,
    "theorem59": suite_theorem59,
    "moment-cells": suite_moment_cells,
}


def _default_types(suite):
    if suite == "splitting":
        return REDUCIBLE_TYPES
    if suite == "theorem59":
        return LOW_RANK_TYPES
    if suite == "prop76":
        return POWER_MINOR_TYPES
    return CATALOG_TYPES


def run_suite(name, type_name=None, seed=0, samples=None):
    """Run one suite (or "all") and return a VerificationReport."""
    if name == "all":
        rep = VerificationReport("all", type_name or "all", seed)
        for sub in SUITE_CLAIMS:
            rep.merge(run_suite(sub, type_name, seed, samples))
        return rep
    if name not in _SUITE_FUNCS:
        raise ValueError("unknown suite %r" % name)
    types = (type_name,) if type_name else _default_types(name)
    for t in types:
        if t not in rootdata.CATALOG:
            raise ValueError("unknown type %r" % t)
    count = DEFAULT_SAMPLES[name] if samples is None else samples
    rep = VerificationReport(name, type_name or "all", seed)
    for t in types:
        rep.merge(_SUITE_FUNCS[name](t, count, seed))
    return rep
