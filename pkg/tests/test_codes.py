from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qecc_forge.codes import (
    GeneratorMatrix,
    classical_code,
    enumerate_codewords,
    format_matrix_text,
    is_mds,
    mds_generator,
    min_hamming_distance,
    parity_check,
    parse_matrix_text,
    shorten_generator,
    singleton_array,
)
from qecc_forge.errors import BudgetExceeded, NotStandardForm, OutOfRange
from qecc_forge.gf import field_new

from .oracles import min_weight


def test_singleton_entries(F3, F5):
    S = singleton_array(F3)
    assert S.entries == (2,)
    assert S.row(3) == (1,)
    S = singleton_array(F5)
    assert S.entries == (2, 3, 4)
    assert S.row(4) == (1, 4)
    assert singleton_array(field_new(5, 2)).entries == (4, 3, 2)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_singleton_definition(p):
    F = field_new(p)
    S = singleton_array(F)
    for i, a in enumerate(S.entries, start=1):
        assert (a * (1 - pow(F.gamma, i, p))) % p == 1
    half = (p + 1) // 2
    # the row used by the modified shortening shift has ceil((q+1)/2) - 1 entries
    assert S.row_length(half + 1) == (p + 2) // 2 - 1
    assert S.row(half + 1)[1:] == tuple(S.a(i) for i in range(-(-p // 2), p - 1))


def test_mds_generator_examples(F3, F5):
    assert mds_generator(F3, 2, 4).tolist() == [[1, 0, 1, 1], [0, 1, 1, 2]]
    assert mds_generator(F5, 3, 6).tolist() == [[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 2, 3], [0, 0, 1, 1, 3, 4]]
    assert mds_generator(F5, 1, 2).tolist() == [[1, 1]]
    with pytest.raises(OutOfRange):
        mds_generator(F5, 4, 6)
    with pytest.raises(OutOfRange):
        mds_generator(F5, 2, 7)


def test_parity_check_examples(F3, F5, G43, G65):
    assert parity_check(G43).tolist() == [[2, 2, 1, 0], [2, 1, 0, 1]]
    assert parity_check(GeneratorMatrix.from_rows(F3, [[1, 0], [0, 1]])).rows == 0
    H = parity_check(G65)
    assert H.shape == (3, 6)
    assert (G65.matrix @ H.T).is_zero()
    with pytest.raises(NotStandardForm):
        GeneratorMatrix.from_rows(F3, [[0, 1, 1], [1, 0, 1]])


def test_is_mds_examples(F3, G43, G65):
    assert is_mds(G43)
    assert not is_mds(GeneratorMatrix.from_rows(F3, [[1, 0, 1, 1], [0, 1, 1, 1]]))
    assert is_mds(G65)


def test_enumerate_codewords(F3, G43):
    words = enumerate_codewords(GeneratorMatrix.from_rows(F3, [[1, 1, 1]]))
    assert words.tolist() == [[0, 0, 0], [1, 1, 1], [2, 2, 2]]
    empty = GeneratorMatrix.from_rows(F3, [], n=3)
    assert enumerate_codewords(empty).tolist() == [[0, 0, 0]]
    words = enumerate_codewords(G43)
    expected = [[i, j, (i + j) % 3, (i + 2 * j) % 3] for i in range(3) for j in range(3)]
    assert words.tolist() == expected
    with pytest.raises(BudgetExceeded):
        enumerate_codewords(G43, budget=8)


def test_min_hamming_distance(F3, G43, G65):
    assert min_hamming_distance(classical_code(G43)) == 3
    assert min_hamming_distance(G65) == 4
    assert min_hamming_distance(GeneratorMatrix.from_rows(F3, [[1, 1, 1]])) == 3
    assert classical_code(G65).d_H == 4


def test_shorten_generator_examples(G43, G65):
    assert shorten_generator(G43, 1).tolist() == [[1, 1, 1]]
    assert shorten_generator(G65, 1).tolist() == [[1, 0, 1, 1, 1], [0, 1, 1, 2, 3]]
    assert shorten_generator(G65, 2).tolist() == [[1, 1, 1, 1]]
    assert shorten_generator(shorten_generator(G65, 1), 1) == shorten_generator(G65, 2)
    with pytest.raises(OutOfRange):
        shorten_generator(G65, 3)


def test_matrix_text_round_trip(G65):
    text = format_matrix_text(G65)
    assert text.splitlines()[0] == "5 3 6"
    assert parse_matrix_text(text, gamma=3) == G65
    with pytest.raises(ValueError):
        parse_matrix_text("5 3 6\n1 0 0 1 1 1\n")


ADMISSIBLE = [(p, k, n) for p in (3, 5, 7) for k in range(1, (p + 1) // 2 + 1) for n in range(k, p + 2)]


@pytest.mark.parametrize("p,k,n", ADMISSIBLE)
def test_mds_for_every_admissible_size(p, k, n):
    G = mds_generator(field_new(p), k, n)
    assert is_mds(G)
    assert (G.matrix @ parity_check(G).T).is_zero()
    if p**k <= 2500:
        assert min_hamming_distance(G) == n - k + 1


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.data())
def test_min_distance_matches_brute_force(p, data):
    F = field_new(p)
    k = data.draw(st.integers(1, (p + 1) // 2))
    n = data.draw(st.integers(k, min(p + 1, k + 4)))
    G = mds_generator(F, k, n)
    if p**k > 400:
        return
    assert min_hamming_distance(G) == min_weight(G.tolist(), p) == n - k + 1


def test_gamma_changes_the_generator():
    a = mds_generator(field_new(5, 2), 3, 6)
    b = mds_generator(field_new(5, 3), 3, 6)
    assert a != b and is_mds(a) and is_mds(b)
    assert not np.array_equal(a.A.array, b.A.array)
