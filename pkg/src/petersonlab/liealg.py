"""Chevalley bases and exact finite-dimensional highest-weight modules.

Modules are built as Verma quotients: f-monomials applied to a formal
highest vector, quotiented by the radical of the recursively computed
contravariant (Shapovalov) Gram matrix.  Everything is exact rational.

Structure constants are obtained by realizing root vectors inside a
small faithful fundamental module per Dynkin component: for each
non-simple positive root gamma the defining pair is (i, gamma - alpha_i)
with i the smallest qualifying node (extraspecial-pair convention), the
divisor is p+1 for the alpha_i-string through gamma - alpha_i, and the
f-side sign is fixed by [e_gamma, f_gamma] = h_{gamma^vee}.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg, rootdata

DIMENSION_CAP = 400

ZERO = Fraction(0)
ONE = Fraction(1)


def weyl_dimension(datum, lam):
    """Weyl dimension formula, evaluated exactly."""
    n = datum.n
    rho = [1] * n
    num = ONE
    den = ONE
    d = datum.symmetrizer()
    for root in datum.positive_roots:
        dot = sum(root[j] * d[j] for j in range(n))
        num *= sum((lam[j] + 1) * root[j] * d[j] for j in range(n))
        den *= dot
    val = num / den
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------------------
# Verma-quotient machinery


class _Verma:
    """Formal Verma module combinatorics for highest weight lam."""

    def __init__(self, datum, lam):
        self.datum = datum
        self.lam = tuple(int(v) for v in lam)
        self._e_memo = {}
        self._shap_memo = {}

    def word_weight(self, word):
        w = list(self.lam)
        for i in word:
            row = self.datum.pairing[i]
            for j in range(self.datum.n):
                w[j] -= row[j]
        return tuple(w)

    def e_apply(self, i, word):
        """Expansion of e_i . f_word as a tuple of (word, coeff)."""
        key = (i, word)
        hit = self._e_memo.get(key)
        if hit is not None:
            return hit
        if not word:
            out = ()
        else:
            j, rest = word[0], word[1:]
            acc = {}
            for w2, c in self.e_apply(i, rest):
                k = (j,) + w2
                acc[k] = acc.get(k, ZERO) + c
            if i == j:
                c = Fraction(self.word_weight(rest)[i])
                if c:
                    acc[rest] = acc.get(rest, ZERO) + c
            out = tuple((w, c) for w, c in acc.items() if c)
        self._e_memo[key] = out
        return out

    def shap(self, u, w):
        """Contravariant form <f_u v, f_w v> on the Verma module."""
        if not u:
            return ONE if not w else ZERO
        key = (u, w) if u <= w else (w, u)
        hit = self._shap_memo.get(key)
        if hit is not None:
            return hit
        val = ZERO
        for w2, c in self.e_apply(u[0], w):
            val += c * self.shap(u[1:], w2)
        self._shap_memo[key] = val
        return val


@dataclass
class WeightModule:
    """Finite-dimensional highest-weight module with exact matrices.

    Action matrices are stored sparsely: act_e[i] / act_f[i] are tuples
    over row index of tuples (col, value).  Weights are in
    fundamental-weight coordinates; the highest-weight vector is basis
    index 0 and gram[0][0] = 1.
    """

    datum: object
    highest_weight: tuple
    dimension: int
    weights: tuple            # per basis index
    act_e: tuple              # per node: sparse rows
    act_f: tuple
    gram: tuple               # dense rational symmetric matrix
    labels: tuple = None      # adjoint identification, else None

    def act_h_diag(self, i):
        return [Fraction(w[i]) for w in self.weights]

    def sparse_to_dense(self, sp):
        m = [[ZERO] * self.dimension for _ in range(self.dimension)]
        for r, row in enumerate(sp):
            for c, v in row:
                m[r][c] = v
        return m

    def e_dense(self, i):
        return self.sparse_to_dense(self.act_e[i])

    def f_dense(self, i):
        return self.sparse_to_dense(self.act_f[i])


def _sparsify(dense):
    return tuple(tuple((c, v) for c, v in enumerate(row) if v)
                 for row in dense)


class DimensionCapError(ValueError):
    pass


def _build_irreducible(datum, lam, cap=DIMENSION_CAP):
    lam = tuple(int(v) for v in lam)
    if any(v < 0 for v in lam):
        raise ValueError("highest weight must be dominant integral")
    dim = weyl_dimension(datum, lam)
    if dim > cap:
        raise DimensionCapError(
            "module dimension %d (Weyl formula) exceeds cap %d" % (dim, cap))
    vm = _Verma(datum, lam)

    levels = [[()]]
    basis = [()]
    while True:
        prev = levels[-1]
        cands = sorted({(i,) + b for b in prev for i in range(datum.n)},
                       key=lambda w: (vm.word_weight(w), w))
        by_weight = {}
        for w in cands:
            by_weight.setdefault(vm.word_weight(w), []).append(w)
        new_level = []
        for mu in sorted(by_weight, reverse=True):
            group = by_weight[mu]
            g = [[vm.shap(a, b) for b in group] for a in group]
            _, pivots = linalg._echelon(g)
            new_level.extend(group[p] for p in pivots)
        if not new_level:
            break
        levels.append(new_level)
        basis.extend(new_level)
        if len(basis) > dim:
            raise AssertionError("basis exceeded Weyl dimension")
    assert len(basis) == dim, (len(basis), dim)

    weights = [vm.word_weight(b) for b in basis]
    index_by_weight = {}
    for idx, mu in enumerate(weights):
        index_by_weight.setdefault(mu, []).append(idx)

    gram_blocks = {}
    gram_inv = {}
    for mu, idxs in index_by_weight.items():
        block = [[vm.shap(basis[a], basis[b]) for b in idxs] for a in idxs]
        gram_blocks[mu] = block
        gram_inv[mu] = linalg.inverse(block)

    def express(weight, func_values):
        """Coordinates in the weight-space basis from functional values."""
        coords = linalg.mat_vec(gram_inv[weight], func_values)
        return coords

    act_e = []
    act_f = []
    for i in range(datum.n):
        fe = [[ZERO] * dim for _ in range(dim)]
        ff = [[ZERO] * dim for _ in range(dim)]
        for col, b in enumerate(basis):
            mu = weights[col]
            # f_i . b
            nu = tuple(mu[j] - datum.pairing[i][j] for j in range(datum.n))
            if nu in index_by_weight:
                idxs = index_by_weight[nu]
                word = (i,) + b
                vals = [vm.shap(basis[a], word) for a in idxs]
                for a, c in zip(idxs, express(nu, vals)):
                    ff[a][col] = c
            # e_i . b
            nu = tuple(mu[j] + datum.pairing[i][j] for j in range(datum.n))
            if nu in index_by_weight:
                idxs = index_by_weight[nu]
                expansion = vm.e_apply(i, b)
                vals = []
                for a in idxs:
                    vals.append(sum((c * vm.shap(basis[a], w)
                                     for w, c in expansion), ZERO))
                for a, c in zip(idxs, express(nu, vals)):
                    fe[a][col] = c
        act_e.append(_sparsify(fe))
        act_f.append(_sparsify(ff))

    gram = [[ZERO] * dim for _ in range(dim)]
    for mu, idxs in index_by_weight.items():
        block = gram_blocks[mu]
        for a, ia in enumerate(idxs):
            for b, ib in enumerate(idxs):
                gram[ia][ib] = block[a][b]

    return WeightModule(
        datum=datum,
        highest_weight=lam,
        dimension=dim,
        weights=tuple(weights),
        act_e=tuple(act_e),
        act_f=tuple(act_f),
        gram=tuple(tuple(row) for row in gram),
    )


# ---------------------------------------------------------------------------
# Chevalley basis


@dataclass
class ChevalleyBasis:
    """Chevalley basis data: labels, defining pairs, full bracket table.

    Labels are ('e', r), ('f', r) with r an index into
    datum.positive_roots, and ('h', i) with i a node index.
    """

    datum: object
    root_index: dict          # root tuple -> index
    simple_index: tuple       # node i -> positive-root index of alpha_i
    defpair: dict             # root idx -> (node i, beta idx, divisor, fsign)
    brackets: dict            # (labelA, labelB) -> {label: Fraction}
    coroots: dict             # root idx -> coroot in simple-coroot coords
    nconstants: dict          # (idx_a, idx_b) -> N for positive root pairs

    def bracket(self, a, b):
        """Bracket of two basis labels as a {label: coeff} dict."""
        if a[0] == 'h' and b[0] == 'h':
            return {}
        if a[0] == 'h':
            out = self.bracket(b, a)
            return {k: -v for k, v in out.items()}
        if b[0] == 'h':
            root = self.datum.positive_roots[a[1]]
            sign = 1 if a[0] == 'e' else -1
            c = sign * self.datum.root_pair_coroot(root, b[1])
            return {a: -Fraction(c)} if c else {}
        key = (a, b)
        if key in self.brackets:
            return dict(self.brackets[key])
        rkey = (b, a)
        if rkey in self.brackets:
            return {k: -v for k, v in self.brackets[rkey].items()}
        return {}

    def bracket_elements(self, xa, xb):
        """Bilinear extension of bracket to {label: coeff} elements."""
        out = {}
        for la, ca in xa.items():
            for lb, cb in xb.items():
                for l, c in self.bracket(la, lb).items():
                    v = out.get(l, ZERO) + ca * cb * c
                    if v:
                        out[l] = v
                    elif l in out:
                        del out[l]
        return out


def _component_matrices(datum, comp):
    """Dense e/f matrices of a faithful fundamental module on a component."""
    best = None
    for i in comp:
        lam = tuple(1 if j == i else 0 for j in range(datum.n))
        d = weyl_dimension(datum, lam)
        if best is None or d < best[0]:
            best = (d, lam)
    mod = _build_irreducible(datum, best[1], cap=DIMENSION_CAP)
    e = {i: mod.e_dense(i) for i in comp}
    f = {i: mod.f_dense(i) for i in comp}
    return mod, e, f


def chevalley_basis(datum):
    n = datum.n
    roots = datum.positive_roots
    root_index = {r: k for k, r in enumerate(roots)}
    simple_index = tuple(
        root_index[tuple(1 if j == i else 0 for j in range(n))]
        for i in range(n))
    root_set = set(roots)

    def is_root(vec):
        return vec in root_set or tuple(-v for v in vec) in root_set

    comps = rootdata.dynkin_components(datum)
    comp_of = {}
    for ci, comp in enumerate(comps):
        for i in comp:
            comp_of[i] = ci

    defpair = {}
    coroots = {idx: datum.coroot_of(r) for idx, r in enumerate(roots)}
    brackets = {}
    nconstants = {}

    for comp in comps:
        mod, esimple, fsimple = _component_matrices(datum, comp)
        dim = mod.dimension
        emat = {}
        fmat = {}
        for i in comp:
            emat[simple_index[i]] = esimple[i]
            fmat[simple_index[i]] = fsimple[i]

        comp_root_idxs = [idx for idx, r in enumerate(roots)
                          if all(r[j] == 0 for j in range(n) if j not in comp)]

        def comm(a, b):
            return linalg.mat_sub(linalg.mat_mul(a, b), linalg.mat_mul(b, a))

        for idx in comp_root_idxs:
            root = roots[idx]
            if sum(root) == 1:
                continue
            i = next(i for i in comp
                     if root[i] > 0 and
                     tuple(root[j] - (1 if j == i else 0) for j in range(n))
                     in root_set)
            beta = tuple(root[j] - (1 if j == i else 0) for j in range(n))
            bidx = root_index[beta]
            p = 0
            while True:
                down = tuple(beta[j] - (p + 1) * (1 if j == i else 0)
                             for j in range(n))
                if is_root(down):
                    p += 1
                else:
                    break
            div = Fraction(p + 1)
            egam = linalg.mat_scale(comm(emat[simple_index[i]], emat[bidx]),
                                    ONE / div)
            assert any(any(row) for row in egam)
            fgam = linalg.mat_scale(comm(fmat[simple_index[i]], fmat[bidx]),
                                    ONE / div)
            h = comm(egam, fgam)
            cor = coroots[idx]
            expected = [[ZERO] * dim for _ in range(dim)]
            for k in range(dim):
                expected[k][k] = sum(Fraction(mod.weights[k][j]) * cor[j]
                                     for j in range(n))
            if h == expected:
                fsign = 1
            elif h == linalg.mat_scale(expected, Fraction(-1)):
                fsign = -1
                fgam = linalg.mat_scale(fgam, Fraction(-1))
            else:
                raise AssertionError("coroot normalization failed")
            defpair[idx] = (i, bidx, int(div), fsign)
            emat[idx] = egam
            fmat[idx] = fgam

        # read off the full bracket table on this component
        labeled = ([(('e', idx), roots[idx], emat[idx]) for idx in comp_root_idxs]
                   + [(('f', idx), tuple(-v for v in roots[idx]), fmat[idx])
                      for idx in comp_root_idxs])
        mats = {lab: m for lab, _, m in labeled}
        vec_of = {lab: v for lab, v, _ in labeled}
        hmats = {i: comm(emat[simple_index[i]], fmat[simple_index[i]])
                 for i in comp}
        for la, va, ma in labeled:
            for lb, vb, mb in labeled:
                if la >= lb:
                    continue
                c = comm(ma, mb)
                s = tuple(x + y for x, y in zip(va, vb))
                if all(v == 0 for v in s):
                    idx = la[1]
                    cor = coroots[idx]
                    coeffs = {('h', j): (cor[j] if la[0] == 'e' else -cor[j])
                              for j in comp if cor[j]}
                    check = [[ZERO] * dim for _ in range(dim)]
                    for j in comp:
                        cj = coeffs.get(('h', j), ZERO)
                        if cj:
                            check = linalg.mat_add(
                                check, linalg.mat_scale(hmats[j], cj))
                    assert c == check, "h-part bracket mismatch"
                    brackets[(la, lb)] = coeffs
                elif s in root_set or tuple(-v for v in s) in root_set:
                    tgt = (('e', root_index[s]) if s in root_set
                           else ('f', root_index[tuple(-v for v in s)]))
                    tm = mats[tgt]
                    pos = next(((r, cc) for r in range(dim)
                                for cc, v in enumerate(tm[r]) if v))
                    scal = c[pos[0]][pos[1]] / tm[pos[0]][pos[1]]
                    assert c == linalg.mat_scale(tm, scal), "bracket not a root vector"
                    assert scal.denominator == 1, "non-integral structure constant"
                    if scal:
                        brackets[(la, lb)] = {tgt: scal}
                    else:
                        brackets[(la, lb)] = {}
                    if la[0] == 'e' and lb[0] == 'e':
                        nconstants[(la[1], lb[1])] = scal
                        nconstants[(lb[1], la[1])] = -scal
                else:
                    assert all(all(v == 0 for v in row) for row in c), \
                        "non-root bracket must vanish"
                    brackets[(la, lb)] = {}

    return ChevalleyBasis(
        datum=datum,
        root_index=root_index,
        simple_index=simple_index,
        defpair=defpair,
        brackets=brackets,
        coroots=coroots,
        nconstants=nconstants,
    )


def build_irreducible(basis, lam, cap=DIMENSION_CAP):
    """Irreducible module V_lam as a Verma quotient (exact)."""
    datum = basis.datum if isinstance(basis, ChevalleyBasis) else basis
    return _build_irreducible(datum, lam, cap=cap)


def adjoint_module(basis):
    """The adjoint module realized by the bracket action.

    Basis slots carry Chevalley labels; for reducible data this is the
    direct sum of the per-component adjoint modules in one object.
    """
    datum = basis.datum
    n = datum.n
    roots = datum.positive_roots

    def label_key(lab):
        if lab[0] == 'e':
            return (-sum(roots[lab[1]]), roots[lab[1]])
        if lab[0] == 'h':
            return (0, (lab[1],))
        return (sum(roots[lab[1]]), roots[lab[1]])

    labels = ([('e', idx) for idx in range(len(roots))]
              + [('h', i) for i in range(n)]
              + [('f', idx) for idx in range(len(roots))])
    labels.sort(key=label_key)
    slot = {lab: k for k, lab in enumerate(labels)}
    dim = len(labels)

    def label_weight(lab):
        if lab[0] == 'h':
            return tuple(0 for _ in range(n))
        w = datum.root_to_weight_coords(roots[lab[1]])
        return w if lab[0] == 'e' else tuple(-v for v in w)

    weights = tuple(label_weight(lab) for lab in labels)

    def action_matrix(gen_label):
        m = [[ZERO] * dim for _ in range(dim)]
        for col, lab in enumerate(labels):
            for out_lab, c in basis.bracket(gen_label, lab).items():
                m[slot[out_lab]][col] += c
        return m

    act_e = tuple(_sparsify(action_matrix(('e', basis.simple_index[i])))
                  for i in range(n))
    act_f = tuple(_sparsify(action_matrix(('f', basis.simple_index[i])))
                  for i in range(n))

    # contravariant form: solve blockwise from the top of each component
    by_weight = {}
    for idx, mu in enumerate(weights):
        by_weight.setdefault(mu, []).append(idx)
    e_dense = [None] * n
    f_dense = [None] * n

    def dense(sp):
        m = [[ZERO] * dim for _ in range(dim)]
        for r, row in enumerate(sp):
            for c, v in row:
                m[r][c] = v
        return m

    for i in range(n):
        e_dense[i] = dense(act_e[i])
        f_dense[i] = dense(act_f[i])

    gram = [[ZERO] * dim for _ in range(dim)]
    order = sorted(by_weight,
                   key=lambda mu: -sum(datum.weight_to_root_coords(mu)))
    gblock = {}
    for mu in order:
        idxs = by_weight[mu]
        ups = []
        for i in range(n):
            nu = tuple(mu[j] + datum.pairing[i][j] for j in range(n))
            if nu in by_weight:
                ups.append((i, nu))
        if not ups:
            assert len(idxs) == 1
            gblock[mu] = [[ONE]]
        else:
            rows_a = []
            rows_b = []
            for i, nu in ups:
                nidx = by_weight[nu]
                gn = gblock[nu]
                for a, ia in enumerate(nidx):
                    # row: coordinates of f_i . (basis ia) in the mu block
                    arow = [f_dense[i][r][ia] for r in idxs]
                    if not any(arow):
                        continue
                    brow = []
                    for w in idxs:
                        col = [e_dense[i][r][w] for r in nidx]
                        brow.append(sum(gn[a][b] * col[b]
                                        for b in range(len(nidx))))
                    rows_a.append(arow)
                    rows_b.append(brow)
            gblock[mu] = linalg.solve_matrix(rows_a, rows_b)
        for a, ia in enumerate(by_weight[mu]):
            for b, ib in enumerate(by_weight[mu]):
                gram[ia][ib] = gblock[mu][a][b]

    return WeightModule(
        datum=datum,
        highest_weight=weights[0],
        dimension=dim,
        weights=weights,
        act_e=act_e,
        act_f=act_f,
        gram=tuple(tuple(row) for row in gram),
        labels=tuple(labels),
    )
