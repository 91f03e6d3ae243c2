"""Group elements as exact matrices across modules, and the scalar
functions built from them: fundamental minors, adjoint-type minors,
adjoint-orbit coefficients, TNN samplers and the type-A minor test.

A group element is a word in tokens
    ('x', i, t)   exp(t e_i)
    ('y', i, t)   exp(t f_i)
    ('s', i)      y_i(1) x_i(-1) y_i(1)
    ('si', i)     the inverse of ('s', i)
    ('exp', elem) exp of a nilpotent Lie element (sorted label/coeff pairs)
with t exact rational.  Evaluation is lazy per module and favors
vector application over full matrix products.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import random

from . import linalg, liealg, rootdata

ZERO = Fraction(0)
ONE = Fraction(1)


def _sparse_apply(rows, vec, zero):
    out = [zero] * len(vec)
    for r, row in enumerate(rows):
        acc = zero
        for c, v in row:
            if vec[c]:
                acc += v * vec[c]
        out[r] = acc
    return out


def _sparse_apply_t(rows, vec, zero):
    out = [zero] * len(vec)
    for r, row in enumerate(rows):
        vr = vec[r]
        if vr:
            for c, v in row:
                out[c] += vr * v
    return out


def _exp_apply(rows, t, vec, zero, one, transpose=False):
    """exp(t M) applied to vec for nilpotent sparse M."""
    apply_ = _sparse_apply_t if transpose else _sparse_apply
    out = list(vec)
    term = list(vec)
    k = 1
    while True:
        term = apply_(rows, term, zero)
        if not any(term):
            break
        term = [v * t / k for v in term]
        out = [a + b for a, b in zip(out, term)]
        k += 1
        if k > len(vec) + 2:
            raise AssertionError("generator is not nilpotent")
    return out


class Rep:
    """A weight module prepared for group-element evaluation."""

    def __init__(self, module, chev, as_float=False):
        self.module = module
        self.chev = chev
        self.float = as_float
        self.dim = module.dimension
        self.zero = 0.0 if as_float else ZERO
        self.one = 1.0 if as_float else ONE
        conv = float if as_float else (lambda v: v)
        self._e = [tuple(tuple((c, conv(v)) for c, v in row) for row in sp)
                   for sp in module.act_e]
        self._f = [tuple(tuple((c, conv(v)) for c, v in row) for row in sp)
                   for sp in module.act_f]
        self._label_cache = {}
        self._gram = None

    def gram(self):
        if self._gram is None:
            conv = float if self.float else (lambda v: v)
            self._gram = [[conv(v) for v in row] for row in self.module.gram]
        return self._gram

    def label_rows(self, label):
        """Sparse matrix of a Chevalley basis element's action."""
        if label in self._label_cache:
            return self._label_cache[label]
        kind, idx = label
        if kind == 'e' and idx in set(self.chev.simple_index):
            rows = self._e[self.chev.simple_index.index(idx)]
        elif kind == 'f' and idx in set(self.chev.simple_index):
            rows = self._f[self.chev.simple_index.index(idx)]
        elif kind in ('e', 'f'):
            i, bidx, div, fsign = self.chev.defpair[idx]
            a = self.label_rows((kind, self.chev.simple_index[i]))
            b = self.label_rows((kind, bidx))
            da = self._densify(a)
            db = self._densify(b)
            m = self._mat_sub(self._mat_mul(da, db), self._mat_mul(db, da))
            scale = self.one / div if self.float else Fraction(1, div)
            if kind == 'f':
                scale = scale * fsign
            rows = tuple(tuple((c, v * scale) for c, v in
                               ((c, v) for c, v in enumerate(row) if v))
                         for row in m)
        else:
            raise KeyError(label)
        self._label_cache[label] = rows
        return rows

    def element_rows(self, elem):
        """Sparse matrix of a Lie element given as ((label, coeff), ...)."""
        acc = {}
        for label, coeff in elem:
            cv = float(coeff) if self.float else Fraction(coeff)
            for r, row in enumerate(self.label_rows(label)):
                for c, v in row:
                    acc[(r, c)] = acc.get((r, c), self.zero) + cv * v
        rows = [[] for _ in range(self.dim)]
        for (r, c), v in acc.items():
            if v:
                rows[r].append((c, v))
        return tuple(tuple(sorted(row)) for row in rows)

    def _densify(self, rows):
        m = [[self.zero] * self.dim for _ in range(self.dim)]
        for r, row in enumerate(rows):
            for c, v in row:
                m[r][c] = v
        return m

    def _mat_mul(self, a, b):
        n = self.dim
        out = [[self.zero] * n for _ in range(n)]
        for i in range(n):
            for t in range(n):
                v = a[i][t]
                if v:
                    brow = b[t]
                    orow = out[i]
                    for j in range(n):
                        if brow[j]:
                            orow[j] += v * brow[j]
        return out

    def _mat_sub(self, a, b):
        return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

    # -- token application --------------------------------------------
    def apply_token(self, token, vec, transpose=False):
        kind = token[0]
        conv = float if self.float else Fraction
        if kind == 'x':
            rows = self._e[token[1]]
            return _exp_apply(rows, conv(token[2]), vec, self.zero, self.one,
                              transpose)
        if kind == 'y':
            rows = self._f[token[1]]
            return _exp_apply(rows, conv(token[2]), vec, self.zero, self.one,
                              transpose)
        if kind == 's':
            seq = [('y', token[1], ONE), ('x', token[1], -ONE),
                   ('y', token[1], ONE)]
        elif kind == 'si':
            seq = [('y', token[1], -ONE), ('x', token[1], ONE),
                   ('y', token[1], -ONE)]
        elif kind == 'exp':
            rows = self.element_rows(token[1])
            return _exp_apply(rows, self.one, vec, self.zero, self.one,
                              transpose)
        else:
            raise ValueError("unknown token %r" % (token,))
        if transpose:
            seq.reverse()
        for t in seq:
            vec = self.apply_token(t, vec, transpose)
        return vec

    def unit(self, k):
        v = [self.zero] * self.dim
        v[k] = self.one
        return v


def _invert_token(token):
    kind = token[0]
    if kind in ('x', 'y'):
        return (kind, token[1], -token[2])
    if kind == 's':
        return ('si', token[1])
    if kind == 'si':
        return ('s', token[1])
    if kind == 'exp':
        return ('exp', tuple((l, -c) for l, c in token[1]))
    raise ValueError(token)


@dataclass(frozen=True)
class GroupElement:
    word: tuple

    def __mul__(self, other):
        return GroupElement(self.word + other.word)

    def inverse(self):
        return GroupElement(tuple(_invert_token(t)
                                  for t in reversed(self.word)))

    def apply(self, rep, vec):
        """Matrix of the element applied to a column vector."""
        for token in reversed(self.word):
            vec = rep.apply_token(token, vec)
        return vec

    def row_apply(self, rep, row):
        """Row vector times the matrix of the element."""
        for token in self.word:
            row = rep.apply_token(token, row, transpose=True)
        return row

    def matrix(self, rep):
        cols = [self.apply(rep, rep.unit(k)) for k in range(rep.dim)]
        return [[cols[c][r] for c in range(rep.dim)] for r in range(rep.dim)]


def x_(i, t):
    return GroupElement((('x', i, Fraction(t)),))


def y_(i, t):
    return GroupElement((('y', i, Fraction(t)),))


def sdot(i):
    return GroupElement((('s', i),))


def sdot_inv(i):
    return GroupElement((('si', i),))


def identity_element():
    return GroupElement(())


def gen(token):
    if token[0] in ('x', 'y'):
        return GroupElement(((token[0], token[1], Fraction(token[2])),))
    return GroupElement((token,))


def wdot(w):
    word = w.word if hasattr(w, 'word') else tuple(w)
    return GroupElement(tuple(('s', i) for i in word))


def exp_element(elem):
    """exp of a Lie element given as a {label: coeff} dict."""
    items = tuple(sorted((l, Fraction(c)) for l, c in elem.items() if c))
    return GroupElement((('exp', items),))


class Workspace:
    """Lazily built module registry for one root datum."""

    def __init__(self, datum, cap=liealg.DIMENSION_CAP):
        self.datum = datum
        self.cap = cap
        self._chev = None
        self._modules = {}
        self._reps = {}
        self._adjoint = None
        self._exponents = None

    @property
    def chev(self):
        if self._chev is None:
            self._chev = liealg.chevalley_basis(self.datum)
        return self._chev

    @property
    def exponents(self):
        if self._exponents is None:
            self._exponents = rootdata.fundamental_exponents(self.datum)
        return self._exponents

    def module(self, lam):
        lam = tuple(int(v) for v in lam)
        if lam not in self._modules:
            self._modules[lam] = liealg._build_irreducible(
                self.datum, lam, cap=self.cap)
        return self._modules[lam]

    def rep(self, lam, as_float=False):
        lam = tuple(int(v) for v in lam)
        key = (lam, as_float)
        if key not in self._reps:
            self._reps[key] = Rep(self.module(lam), self.chev, as_float)
        return self._reps[key]

    def fundamental_rep(self, i, as_float=False):
        lam = tuple(1 if j == i else 0 for j in range(self.datum.n))
        return self.rep(lam, as_float)

    def power_rep(self, i, as_float=False):
        m = self.exponents[i]
        lam = tuple(m if j == i else 0 for j in range(self.datum.n))
        return self.rep(lam, as_float)

    def adjoint_rep(self):
        if self._adjoint is None:
            self._adjoint = Rep(liealg.adjoint_module(self.chev), self.chev)
        return self._adjoint

    def w0(self):
        return rootdata.longest_element(self.datum, range(self.datum.n))


def delta_varpi(i, g, ws, as_float=False):
    """Highest-weight matrix coefficient of g on the i-th fundamental module."""
    rep = ws.fundamental_rep(i, as_float)
    return g.apply(rep, rep.unit(0))[0]


def delta_adjoint_type(i, g, ws):
    """<g v, wdot(w0) v> under the Shapovalov form on V_{m_i w_i}."""
    rep = ws.power_rep(i)
    v = g.apply(rep, rep.unit(0))
    low = wdot(ws.w0()).apply(rep, rep.unit(0))
    gram = rep.gram()
    return sum(v[a] * sum(gram[a][b] * low[b] for b in range(rep.dim)
                          if low[b])
               for a in range(rep.dim) if v[a])


def regular_nilpotent_vector(ws):
    rep = ws.adjoint_rep()
    labels = rep.module.labels
    vec = [ZERO] * rep.dim
    for i in range(ws.datum.n):
        vec[labels.index(('e', ws.chev.simple_index[i]))] = ONE
    return vec


def ad_conjugate_e(g, ws):
    """Ad_{g^{-1}}(e) as a vector in the labeled adjoint module."""
    rep = ws.adjoint_rep()
    return g.inverse().apply(rep, regular_nilpotent_vector(ws))


def ad_coefficient(g, label, ws):
    """Coefficient of a Chevalley label in Ad_{g^{-1}}(e)."""
    rep = ws.adjoint_rep()
    vec = ad_conjugate_e(g, ws)
    return vec[rep.module.labels.index(label)]


def q_coefficient(i, g, ws):
    """q_i(g) = minus the f_i coefficient of Ad_{g^{-1}}(e)."""
    return -ad_coefficient(g, ('f', ws.chev.simple_index[i]), ws)


@dataclass(frozen=True)
class TNNSample:
    weyl: object
    params: tuple
    element: GroupElement


def tnn_sample(datum, w, params=None, rng=None, seed=None):
    """x_{i_1}(a_1)...x_{i_m}(a_m) along a reduced word, a_k > 0."""
    word = w.word if hasattr(w, 'word') else tuple(w)
    if params is None:
        if rng is None:
            rng = random.Random(0 if seed is None else seed)
        params = tuple(Fraction(rng.randint(1, 12), rng.randint(1, 12))
                       for _ in word)
    params = tuple(Fraction(p) for p in params)
    if any(p <= 0 for p in params):
        raise ValueError("TNN sample parameters must be positive")
    elem = GroupElement(tuple(('x', i, p) for i, p in zip(word, params)))
    return TNNSample(weyl=w, params=params, element=elem)


def tnn_membership_typeA(mat, tol=Fraction(0)):
    """All-minors nonnegativity test for an upper unitriangular matrix."""
    n = len(mat)
    for i in range(n):
        if mat[i][i] != 1:
            raise ValueError("matrix is not unitriangular")
        for j in range(i):
            if mat[i][j] != 0:
                raise ValueError("matrix is not upper triangular")
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                sub = [[mat[r][c] for c in cols] for r in rows]
                if linalg.det(sub) < -tol:
                    return False
    return True


def centralizer_basis(ws, J):
    """Exact basis of {x in u_J : [x, e_J] = 0} as label/coeff dicts."""
    J = sorted(set(J))
    datum = ws.datum
    chev = ws.chev
    idxs = [chev.root_index[r]
            for r in rootdata.positive_roots_supported_on(datum, J)]
    if not idxs:
        return []
    e_j = {('e', chev.simple_index[j]): ONE for j in J}
    cols = []
    for idx in idxs:
        br = chev.bracket_elements({('e', idx): ONE}, e_j)
        cols.append(br)
    out_labels = sorted({l for col in cols for l in col})
    a = [[cols[c].get(l, ZERO) for c in range(len(idxs))] for l in out_labels]
    if not out_labels:
        kernel = [[ONE if k == c else ZERO for c in range(len(idxs))]
                  for k in range(len(idxs))]
    else:
        kernel = linalg.kernel_basis(a)
    basis = []
    for vec in kernel:
        denom = linalg.lcm([v.denominator for v in vec if v] or [1])
        ints = [v * denom for v in vec]
        from math import gcd
        g = 0
        for v in ints:
            g = gcd(g, int(v))
        lead = next(v for v in ints if v)
        sign = 1 if lead > 0 else -1
        elem = {('e', idxs[k]): Fraction(sign) * ints[k] / g
                for k in range(len(idxs)) if ints[k]}
        basis.append(elem)
    basis.sort(key=lambda el: (max(sum(datum.positive_roots[l[1]])
                                   for l in el),
                               sorted(l[1] for l in el)))
    assert len(basis) == len(J)
    return basis
