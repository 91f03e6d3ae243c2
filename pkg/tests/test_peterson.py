from fractions import Fraction

import pytest

from petersonlab import grouprep, peterson, rootdata, toric

F = Fraction


def _ws(name):
    return grouprep.Workspace(rootdata.datum_from_name(name))


def test_membership_trivial_in_a1():
    ws = _ws("A1")
    g = grouprep.x_(0, F(4)) * grouprep.sdot(0)
    assert peterson.peterson_membership(g, ws)


def test_membership_normal_form_and_counterexample_a2():
    ws = _ws("A2")
    p = peterson.make_point(ws, (0, 1), (F(2), F(5)))
    assert peterson.peterson_membership(peterson.element(ws, p), ws)
    bad = grouprep.x_(0, F(1)) * grouprep.wdot(ws.w0())
    assert not peterson.peterson_membership(bad, ws)


def test_log_commutes_with_e():
    ws = _ws("B2")
    J = (0, 1)
    basis = grouprep.centralizer_basis(ws, J)
    p = peterson.make_point(ws, J, (F(3), F(1, 2)))
    elem = {}
    for c, b in zip(p.coords, basis):
        for l, v in b.items():
            elem[l] = elem.get(l, F(0)) + c * v
    e_j = {('e', ws.chev.simple_index[j]): F(1) for j in J}
    assert ws.chev.bracket_elements(elem, e_j) == {}


def test_classify_stratum():
    ws = _ws("A2")
    full = (0, 1)
    # identity coset: all minors vanish
    p = peterson.make_point(ws, full, (F(0), F(0)))
    assert peterson.classify_stratum(ws, p, sampled_tnn=True) == (full, full)
    # J empty: the base point, K empty
    p = peterson.make_point(ws, (), ())
    assert peterson.classify_stratum(ws, p) == ((), ())
    # A1 with a > 0
    ws1 = _ws("A1")
    p = peterson.make_point(ws1, (0,), (F(5),))
    assert peterson.classify_stratum(ws1, p, sampled_tnn=True) == ((), (0,))


def test_psi_a1():
    ws = _ws("A1")
    p = peterson.make_point(ws, (0,), (F(3),))
    c = peterson.psi(ws, p)
    assert c.x == (F(3),) and c.y == (F(1),)


def test_psi_empty_j_is_all_ones():
    for name in ("A2", "B2", "G2"):
        ws = _ws(name)
        p = peterson.make_point(ws, (), ())
        c = peterson.psi(ws, p)
        assert all(v == 1 for v in c.x)
        assert all(v == 0 for v in c.y)


def test_q_pattern_lemma():
    ws = _ws("B2")
    for J in [(), (0,), (1,), (0, 1)]:
        for p in peterson.sample_points(ws, J, 5, seed=2):
            _, ys = peterson.minor_vector(ws, p)
            assert ys == tuple(F(1 if i in J else 0) for i in range(2))


def test_tnn_sampled_strata_match_toric_strata():
    ws = _ws("A2")
    datum = ws.datum
    for J in [(0,), (0, 1)]:
        for p in peterson.sample_points(ws, J, 6, seed=4, tnn_only=True):
            c = peterson.psi(ws, p)
            label = peterson.classify_stratum(ws, p, sampled_tnn=True)
            assert toric.canonicalize(datum, c).label == label


def test_split_components_exact():
    ws = _ws("A2xA1")
    comps = [tuple(b) for b in rootdata.dynkin_components(ws.datum)]
    p = peterson.make_point(ws, (0, 1, 2), (F(3), F(2), F(1, 2)))
    fx, fy = peterson.minor_vector(ws, p)
    got_x, got_y = [None] * 3, [None] * 3
    for cp in peterson.split_components(ws, p, comps):
        sws = grouprep.Workspace(cp.datum)
        cx, cy = peterson.minor_vector(sws, cp.point)
        for k, i in enumerate(cp.nodes):
            got_x[i], got_y[i] = cx[k], cy[k]
    assert tuple(got_x) == fx and tuple(got_y) == fy


def test_split_components_rejects_bad_partition():
    ws = _ws("A2xA1")
    p = peterson.make_point(ws, (0,), (F(1),))
    with pytest.raises(ValueError):
        peterson.split_components(ws, p, [(0,), (1, 2)])


def test_invert_a1_is_identity():
    ws = _ws("A1")
    p = peterson.invert_theorem59(ws, [F(5)])
    assert p.coords == (F(5),)
    p = peterson.invert_theorem59(ws, [F(0)])
    assert p.coords == (F(0),)


def test_invert_a2_interior_target():
    ws = _ws("A2")
    p = peterson.invert_theorem59(ws, [2.5, 1.5])
    got = [float(v) for v in peterson.deltas(ws, p)]
    assert max(abs(g - t) for g, t in zip(got, (2.5, 1.5))) < 1e-9
    x = peterson.unipotent_part(ws, p)
    mat = x.matrix(ws.fundamental_rep(0, as_float=True))
    assert grouprep.tnn_membership_typeA(mat, tol=1e-9)


def test_invert_rejects_negative_targets():
    ws = _ws("A1")
    with pytest.raises(ValueError):
        peterson.invert_theorem59(ws, [-1])


def test_invert_unimplemented_rank():
    ws = _ws("A3")
    with pytest.raises(NotImplementedError):
        peterson.invert_theorem59(ws, [1, 1, 1])
