import pytest
from hypothesis import given
from hypothesis import strategies as st

from indpoly.polyseq import (
    CoeffSeq,
    first_logconcavity_violation,
    head_nondecreasing_through,
    is_log_concave,
    is_unimodal,
    render,
    seq_add,
    seq_mul,
    seq_pow,
    seq_shift,
    seq_zykov,
    shape,
    tail_nonincreasing_from,
    valley,
)

seqs = st.lists(st.integers(0, 50), min_size=1, max_size=20)
positive = st.lists(st.integers(1, 10**6), min_size=1, max_size=20)


def unimodal_oracle(p):
    return any(
        all(p[i] <= p[i + 1] for i in range(m)) and all(p[i] >= p[i + 1] for i in range(m, len(p) - 1))
        for m in range(len(p))
    )


def test_coeffseq_normalizes():
    assert CoeffSeq([1, 2, 0, 0]) == (1, 2)
    assert CoeffSeq([0, 0]) == (0,) and CoeffSeq([]).degree == 0
    assert CoeffSeq([1, 4, 3, 1]).degree == 3
    with pytest.raises(ValueError):
        CoeffSeq([1, -1])
    big = CoeffSeq([1, 10**30])
    assert CoeffSeq.from_json(big.to_json()) == big and big.to_json() == ["1", "1" + "0" * 30]


def test_render():
    assert render([1, 4, 3, 1]) == "1 + 4x + 3x^2 + x^3"
    assert render([1]) == "1"
    assert render([1, 0, 2]) == "1 + 2x^2"


def test_products():
    c5 = (1, 5, 5)
    assert seq_pow(c5, 4) == (1, 20, 170, 800, 2275, 4000, 4250, 2500, 625)
    six = seq_pow((1, 1), 6)
    assert seq_add(six, (0, 10)) == (1, 16, 15, 20, 15, 6, 1)
    assert seq_mul(seq_add(six, (0, 24)), seq_add(six, (0, 25))) == (
        1, 61, 960, 955, 1475, 1527, 1218, 841, 495, 220, 66, 12, 1,
    )
    assert seq_mul((1, 107, 54, 108, 81), c5) == (1, 112, 594, 913, 891, 945, 405)
    edge_added = seq_add(
        seq_mul((1, 109, 54, 108, 81), (1, 4, 3)),
        seq_shift(seq_mul((1, 2), (1, 108, 54, 108, 81))),
    )
    assert edge_added == (1, 114, 603, 921, 891, 945, 405)


def test_zykov_of_polynomials():
    # K24 + (K3 | K3 | K4): 24x added to the cube of small cliques
    disjoint = seq_mul(seq_mul((1, 3), (1, 3)), (1, 4))
    assert seq_zykov((1, 24), disjoint) == (1, 34, 33, 36)
    with pytest.raises(ValueError):
        seq_zykov((2, 1), (1, 1))


def test_shape_examples():
    rep = shape((1, 34, 33, 36))
    assert (rep.unimodal, rep.log_concave, rep.valley, rep.modes) == (False, False, 2, (3,))
    rep = shape((1, 16, 15, 20, 15, 6, 1))
    assert (rep.head_nondecreasing_through, rep.tail_nonincreasing_from, rep.valley) == (1, 3, 2)
    assert shape((1, 5, 5)).modes == (1, 2)
    assert is_log_concave((1, 20, 170, 800, 2275, 4000, 4250, 2500, 625))
    assert first_logconcavity_violation((1, 2, 1, 2)) == 2


def test_index_checks():
    p = (1, 4, 3, 1)
    assert tail_nonincreasing_from(p, 1) and not tail_nonincreasing_from((1, 3, 1, 2), 1)
    assert head_nondecreasing_through(p, 1) and not head_nondecreasing_through(p, 2)
    with pytest.raises(IndexError):
        tail_nonincreasing_from(p, 4)
    with pytest.raises(IndexError):
        head_nondecreasing_through(p, -1)


@given(seqs, seqs)
def test_mul_commutes(p, q):
    assert seq_mul(p, q) == seq_mul(q, p)


@given(seqs, seqs, seqs)
def test_mul_associates(p, q, r):
    assert seq_mul(seq_mul(p, q), r) == seq_mul(p, seq_mul(q, r))


@given(seqs, seqs, seqs)
def test_mul_distributes(p, q, r):
    assert seq_mul(p, seq_add(q, r)) == seq_add(seq_mul(p, q), seq_mul(p, r))


@given(seqs, st.integers(0, 5))
def test_pow_is_repeated_mul(p, e):
    want = CoeffSeq((1,))
    for _ in range(e):
        want = seq_mul(want, p)
    assert seq_pow(p, e) == want


@given(seqs)
def test_unimodal_matches_definition(p):
    assert is_unimodal(p) == unimodal_oracle(p)
    assert (valley(tuple(p)) is None) == unimodal_oracle(p)


@given(positive)
def test_log_concave_positive_is_unimodal(p):
    if is_log_concave(p):
        assert is_unimodal(p)


@given(seqs)
def test_modes_are_maxima(p):
    rep = shape(p)
    assert rep.modes and all(p[k] == max(p) for k in rep.modes)
    assert len(rep.modes) == p.count(max(p))
    assert head_nondecreasing_through(p, rep.head_nondecreasing_through)
    assert tail_nonincreasing_from(p, rep.tail_nonincreasing_from)
