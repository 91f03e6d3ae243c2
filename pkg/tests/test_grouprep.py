from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from petersonlab import grouprep, rootdata

F = Fraction


def _ws(name):
    return grouprep.Workspace(rootdata.datum_from_name(name))


def test_sdot_matrix_sl2():
    ws = _ws("A1")
    rep = ws.fundamental_rep(0)
    mat = grouprep.sdot(0).matrix(rep)
    assert mat == [[F(0), F(-1)], [F(1), F(0)]]


def test_xy_product_sl2():
    ws = _ws("A1")
    rep = ws.fundamental_rep(0)
    a, b = F(3), F(1, 2)
    mat = (grouprep.x_(0, a) * grouprep.y_(0, b)).matrix(rep)
    assert mat == [[1 + a * b, a], [b, F(1)]]


def test_exp_homomorphism():
    ws = _ws("B2")
    for i in range(2):
        rep = ws.fundamental_rep(i)
        lhs = (grouprep.x_(0, F(2, 3)) * grouprep.x_(0, F(1, 5))).matrix(rep)
        rhs = grouprep.x_(0, F(2, 3) + F(1, 5)).matrix(rep)
        assert lhs == rhs


def test_inverse_word():
    ws = _ws("A2")
    rep = ws.fundamental_rep(0)
    g = grouprep.x_(0, F(3)) * grouprep.sdot(1) * grouprep.y_(0, F(1, 2))
    prod = (g * g.inverse()).matrix(rep)
    ident = grouprep.identity_element().matrix(rep)
    assert prod == ident


def test_braid_invariance_rank2():
    for name, words in [("A2", [(0, 1, 0), (1, 0, 1)]),
                        ("B2", [(0, 1, 0, 1), (1, 0, 1, 0)])]:
        ws = _ws(name)
        rep = ws.fundamental_rep(0)
        mats = [grouprep.wdot(w).matrix(rep) for w in words]
        assert mats[0] == mats[1]


def test_delta_of_x_sdot_is_parameter():
    ws = _ws("A1")
    g = grouprep.x_(0, F(7, 3)) * grouprep.sdot(0)
    assert grouprep.delta_varpi(0, g, ws) == F(7, 3)


def test_delta_conjugated_square():
    ws = _ws("A1")
    w0 = grouprep.wdot(ws.w0())
    a = F(3)
    g = w0.inverse() * grouprep.x_(0, a) * w0
    assert grouprep.delta_adjoint_type(0, g, ws) == a ** 2
    ident = w0.inverse() * grouprep.x_(0, F(0)) * w0
    assert grouprep.delta_adjoint_type(0, ident, ws) == 0


def test_ad_w0_sends_e_to_minus_f_star():
    for name in ("A2", "B2", "G2"):
        ws = _ws(name)
        datum = ws.datum
        star = rootdata.involution_star(datum)
        rep = ws.adjoint_rep()
        w0 = grouprep.wdot(ws.w0())
        for i in range(datum.n):
            vec = [F(0)] * rep.dim
            vec[rep.module.labels.index(('e', ws.chev.simple_index[i]))] = \
                F(1)
            out = w0.inverse().apply(rep, vec)
            want = [F(0)] * rep.dim
            want[rep.module.labels.index(
                ('f', ws.chev.simple_index[star[i]]))] = F(-1)
            assert out == want


def test_q_coefficient_of_x_sdot():
    ws = _ws("A1")
    g = grouprep.x_(0, F(5)) * grouprep.sdot(0)
    assert grouprep.q_coefficient(0, g, ws) == 1


def test_tnn_membership_examples():
    assert grouprep.tnn_membership_typeA([[F(1), F(2)], [F(0), F(1)]])
    assert not grouprep.tnn_membership_typeA([[F(1), F(-1)], [F(0), F(1)]])
    ws = _ws("A3")
    rep = ws.fundamental_rep(0)
    g = grouprep.identity_element()
    for i, t in [(0, 1), (1, 1), (2, 1), (0, 1), (1, 1), (0, 1)]:
        g = g * grouprep.x_(i, F(t))
    assert grouprep.tnn_membership_typeA(g.matrix(rep))


def test_tnn_membership_rejects_nontriangular():
    with pytest.raises(ValueError):
        grouprep.tnn_membership_typeA([[F(1), F(0)], [F(1), F(1)]])


def test_tnn_sample_parabolic_stays_tnn_in_type_a():
    ws = _ws("A3")
    rep = ws.fundamental_rep(0)
    rng = random.Random(11)
    for J in [(0,), (0, 1), (1, 2), (0, 1, 2)]:
        w = rootdata.longest_element(ws.datum, J)
        s = grouprep.tnn_sample(ws.datum, w, rng=rng)
        assert grouprep.tnn_membership_typeA(s.element.matrix(rep))


def test_tnn_sample_requires_positive_params():
    datum = rootdata.datum_from_name("A2")
    w = rootdata.longest_element(datum, (0, 1))
    with pytest.raises(ValueError):
        grouprep.tnn_sample(datum, w, params=[F(1)] * 2 + [F(-1)])


def test_centralizer_basis_sizes():
    ws = _ws("A2")
    assert grouprep.centralizer_basis(ws, ()) == []
    assert len(grouprep.centralizer_basis(ws, (0, 1))) == 2
    assert len(grouprep.centralizer_basis(_ws("A1"), (0,))) == 1
    for name in ("B3", "G2", "D4"):
        ws = _ws(name)
        n = ws.datum.n
        assert len(grouprep.centralizer_basis(ws, tuple(range(n)))) == n


def test_centralizer_basis_commutes_with_e():
    ws = _ws("B2")
    J = (0, 1)
    e_j = {('e', ws.chev.simple_index[j]): F(1) for j in J}
    for b in grouprep.centralizer_basis(ws, J):
        assert ws.chev.bracket_elements(b, e_j) == {}


@settings(max_examples=25, deadline=None)
@given(st.fractions(min_value=0, max_value=5, max_denominator=4),
       st.fractions(min_value=0, max_value=5, max_denominator=4))
def test_delta_nonneg_on_tnn_times_w0_in_a2(a, b):
    ws = _ws("A2")
    w0 = ws.w0()
    params = [a + F(1, 7), b + F(1, 7), a + b + F(1, 7)]
    s = grouprep.tnn_sample(ws.datum, w0, params=params)
    g = s.element * grouprep.wdot(w0)
    for i in range(2):
        assert grouprep.delta_varpi(i, g, ws) >= 0
