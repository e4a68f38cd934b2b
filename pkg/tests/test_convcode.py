import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convmds import (
    GeneratorMatrix,
    Poly,
    code_degree,
    codeword_weight,
    encode,
    error_capabilities,
    free_distance,
    is_catastrophic,
    make_code,
    make_field,
    singleton_bound,
    theorem3_code,
)
from convmds.errors import (
    BadCoefficientError,
    BadDimensionsError,
    BadParametersError,
    RankDeficientError,
    UnsupportedKError,
)

F11 = make_field(11)
T3 = [[[8, 5, 1, 1, 5, 8], [8, 6, 1, 1, 6, 8]]]


def rows(v):
    """Coefficient vectors v_0, v_1, ... of a rate-1/n codeword."""
    length = max(x.degree for x in v if not x.is_zero) + 1
    return [[x.coeff(i).value for x in v] for i in range(length)]


def test_make_code_examples():
    code = make_code(F11, 1, 2, T3)
    assert code.params == (2, 1, 5)
    assert code == theorem3_code()
    assert make_code(F11, 1, 2, [[[8, 5, 1], [8, 6, 1]]]).degree == 2
    with pytest.raises(RankDeficientError):
        make_code(F11, 1, 2, [[[0], []]])
    with pytest.raises(BadDimensionsError):
        make_code(F11, 1, 3, T3)
    with pytest.raises(BadDimensionsError):
        make_code(F11, 3, 2, [[[1], [1]]] * 3)
    with pytest.raises(BadCoefficientError):
        make_code(F11, 1, 2, [[[11], [1]]])


def test_code_degree_examples():
    assert code_degree(theorem3_code()) == 5
    assert code_degree(make_code(make_field(2), 1, 2, [[[1], [1]]])) == 0
    F3 = make_field(3)
    assert code_degree(make_code(F3, 2, 2, [[[1], [0, 1]], [[0, 1], [1]]])) == 2


def test_degree_is_max_minor_degree_not_row_degree_sum():
    F2 = make_field(2)
    # rows (1, D) and (1, D): rank 1 -> rejected; rows (1, D), (D, D^2 + 1) -> det = 1
    code = make_code(F2, 2, 2, [[[1], [0, 1]], [[0, 1], [1, 0, 1]]])
    assert code.degree == 0
    assert code.generator.memory == 2


def test_singleton_bound():
    assert singleton_bound(2, 1, 5) == 12
    assert singleton_bound(2, 1, 2) == 6
    assert singleton_bound(3, 1, 0) == 3
    assert singleton_bound(4, 2, 3) == 2 * 2 + 3 + 1
    with pytest.raises(BadParametersError):
        singleton_bound(2, 3, 1)


def test_encode_constant_input():
    code = theorem3_code()
    v = encode(code, Poly(F11, [1]))
    assert v == code.generator.entries[0]
    assert codeword_weight(v) == 12
    assert all(x.is_zero for x in encode(code, Poly.zero(F11)))


def test_encode_golden_vectors():
    code = theorem3_code()
    v = encode(code, Poly(F11, [1, 10]))
    assert rows(v) == [[8, 8], [8, 9], [7, 6], [0, 0], [4, 5], [3, 2], [3, 3]]
    assert codeword_weight(v) == 12
    # u_0 = 5 u_1 and u_0 = 6 u_1, with u_1 = 1
    v5 = encode(code, Poly(F11, [5, 1]))
    assert rows(v5) == [[7, 7], [0, 5], [10, 0], [6, 6], [4, 9], [1, 2], [8, 8]]
    v6 = encode(code, Poly(F11, [6, 1]))
    assert rows(v6) == [[4, 4], [5, 0], [0, 1], [7, 7], [9, 4], [9, 10], [8, 8]]
    assert codeword_weight(v5) == codeword_weight(v6) == 12


def test_encode_weight_11_codeword():
    """u = 1 + 2D + D^3 + 5D^4 reaches weight 11 on the palindrome code."""
    v = encode(theorem3_code(), Poly(F11, [1, 2, 0, 1, 5]))
    assert rows(v) == [
        [8, 8], [10, 0], [0, 2], [0, 0], [8, 10], [0, 7], [0, 0], [10, 0], [0, 5], [7, 7],
    ]
    assert codeword_weight(v) == 11


def test_codeword_weight_examples():
    assert codeword_weight([Poly(F11, [1, 0, 1]), Poly(F11, [3])]) == 3
    assert codeword_weight([Poly.zero(F11)] * 2) == 0


def test_encode_k2():
    F3 = make_field(3)
    code = make_code(F3, 2, 3, [[[1], [0, 1], [1]], [[0, 1], [1], [2]]])
    v = encode(code, [Poly(F3, [1]), Poly(F3, [0, 1])])
    assert v == (Poly(F3, [1, 0, 1]), Poly(F3, [0, 2]), Poly(F3, [1, 2]))


def test_catastrophicity_examples():
    rep = is_catastrophic(theorem3_code())
    assert rep.is_catastrophic
    assert rep.minor_gcd(F11(10)) == F11(0)  # D + 1 divides the gcd
    assert rep.witness_factor is not None and rep.witness_factor.degree >= 1
    free = is_catastrophic(make_code(F11, 1, 2, [[[1], [0, 1]]]))
    assert not free.is_catastrophic
    assert free.minor_gcd == Poly(F11, [1])
    assert free.witness_factor is None


def test_multiples_of_p_on_the_generator():
    # D-scaling a noncatastrophic generator introduces the factor D
    code = make_code(F11, 1, 2, [[[0, 1], [0, 1, 1]]])
    assert is_catastrophic(code).is_catastrophic


def test_error_capabilities():
    assert (error_capabilities(12).detect_s, error_capabilities(12).correct_t) == (11, 5)
    assert (error_capabilities(6).detect_s, error_capabilities(6).correct_t) == (5, 2)
    assert (error_capabilities(1).detect_s, error_capabilities(1).correct_t) == (0, 0)


def test_minors_limited_to_k4():
    F2 = make_field(2)
    ident = [[[1] if i == j else [] for j in range(5)] for i in range(5)]
    with pytest.raises(UnsupportedKError):
        make_code(F2, 5, 5, ident)


# -- invariant suites ------------------------------------------------------

FIELDS = [make_field(2), make_field(3), make_field(5), make_field(3, 2)]


@st.composite
def rate_one_codes(draw, max_n=3, max_deg=3):
    F = draw(st.sampled_from(FIELDS))
    n = draw(st.integers(1, max_n))
    coeff = st.lists(st.integers(0, F.q - 1), min_size=1, max_size=max_deg + 1)
    entries = [Poly._raw(F, draw(coeff)) for _ in range(n)]
    if all(e.is_zero for e in entries):
        entries[0] = Poly(F, [1])
    return GeneratorMatrix(F, [entries])


@settings(max_examples=1000, deadline=None)
@given(rate_one_codes(), st.data())
def test_encode_is_linear(gen, data):
    from convmds import ConvCode

    code = ConvCode(gen)
    F = code.field
    cs = st.lists(st.integers(0, F.q - 1), max_size=6)
    u1, u2 = Poly._raw(F, data.draw(cs)), Poly._raw(F, data.draw(cs))
    c = F.from_index(data.draw(st.integers(0, F.q - 1)))
    lhs = encode(code, u1 * Poly(F, [c]) + u2)
    rhs = tuple(a * Poly(F, [c]) + b for a, b in zip(encode(code, u1), encode(code, u2)))
    assert lhs == rhs


@settings(max_examples=1000, deadline=None)
@given(rate_one_codes(max_n=3, max_deg=2), st.data())
def test_unit_scaling_preserves_verdicts(gen, data):
    from convmds import ConvCode

    F = gen.field
    c = F.from_index(data.draw(st.integers(1, F.q - 1)))
    a, b = ConvCode(gen), ConvCode(gen.scaled(c))
    assert a.degree == b.degree
    assert is_catastrophic(a).is_catastrophic == is_catastrophic(b).is_catastrophic
    da, db = free_distance(a), free_distance(b)
    assert (da.d_free, da.is_mds) == (db.d_free, db.is_mds)
