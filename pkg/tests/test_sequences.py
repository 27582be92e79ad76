import pytest

from regover.products import eta_quotient
from regover.registry import regular_overpartition_quotient
from regover.sequences import (
    SequenceRef,
    clear_caches,
    oracle_partition,
    oracle_regular_overpartition,
    sequence_series,
    sequence_table,
    sequence_value,
)
from regover.series import ZZ, Zmod


def test_sequence_ref_validation():
    assert SequenceRef("p").param is None
    assert SequenceRef("A", 5).label() == "A(5)"
    with pytest.raises(ValueError):
        SequenceRef("nope")
    with pytest.raises(ValueError):
        SequenceRef("A")  # parameter required
    with pytest.raises(ValueError):
        SequenceRef("A", 1)
    with pytest.raises(ValueError):
        SequenceRef("r", 3)
    with pytest.raises(ValueError):
        SequenceRef("p", 2)


def test_partition_series_prefix():
    assert sequence_series(SequenceRef("p"), ZZ, 5).coeffs == [1, 1, 2, 3, 5, 7]


def test_overpartition_series_prefix():
    s = sequence_series(SequenceRef("pbar"), ZZ, 6)
    assert s.coeffs == [1, 2, 4, 8, 14, 24, 40]


def test_regular_overpartition_prefix():
    # A_3(3) = 6: the partitions 2+1 (4 overlinings) and 1+1+1 (2) qualify
    s = sequence_series(SequenceRef("A", 3), ZZ, 4)
    assert s.coeffs == [1, 2, 4, 6, 10]


def test_oracle_examples():
    assert oracle_regular_overpartition(5, 1) == 2
    assert oracle_regular_overpartition(5, 3) == 8
    assert oracle_regular_overpartition(None, 4) == 14
    assert oracle_partition(None, 6) == 11
    assert oracle_partition(2, 5) == 3
    assert oracle_partition(None, 0) == 1


def test_oracle_cap():
    with pytest.raises(ValueError):
        oracle_regular_overpartition(3, 61)
    with pytest.raises(ValueError):
        oracle_partition(None, 61)
    assert oracle_partition(None, 61, cap=61) > 0


@pytest.mark.parametrize("ell", [2, 3, 4, 5, 7, 9, 25])
def test_series_matches_oracle(ell):
    table = sequence_table(SequenceRef("A", ell), None, 40)
    for n in range(41):
        assert table[n] == oracle_regular_overpartition(ell, n), (ell, n)


def test_plain_sequences_match_oracles():
    pbar = sequence_table(SequenceRef("pbar"), None, 40)
    p = sequence_table(SequenceRef("p"), None, 40)
    b3 = sequence_table(SequenceRef("b", 3), None, 40)
    for n in range(41):
        assert pbar[n] == oracle_regular_overpartition(None, n)
        assert p[n] == oracle_partition(None, n)
        assert b3[n] == oracle_partition(3, n)


@pytest.mark.parametrize("ell", [3, 5, 9, 25])
def test_agrees_with_overpartitions_below_ell(ell):
    a = sequence_table(SequenceRef("A", ell), None, min(ell - 1, 40))
    pbar = sequence_table(SequenceRef("pbar"), None, min(ell - 1, 40))
    assert a == pbar


def test_monotone_growth():
    table = sequence_table(SequenceRef("A", 5), None, 300)
    assert all(table[n + 1] >= table[n] for n in range(1, 300))


@pytest.mark.parametrize("ell", [2, 3, 5, 25])
def test_grouped_form_matches_generating_quotient(ell):
    # phi(-q^l)/phi(-q) against the literal quotient, exact and mod 5
    spec = regular_overpartition_quotient(ell)
    assert (
        sequence_series(SequenceRef("A", ell), ZZ, 200)
        == eta_quotient(spec, ZZ, 200)
    )
    assert (
        sequence_series(SequenceRef("A", ell), Zmod(5), 1000)
        == eta_quotient(spec, Zmod(5), 1000)
    )


def test_series_backed_only():
    with pytest.raises(ValueError):
        sequence_series(SequenceRef("chi"), ZZ, 10)
    with pytest.raises(ValueError):
        sequence_series(SequenceRef("dstar"), ZZ, 10)


def test_sequence_value():
    assert sequence_value(SequenceRef("A", 5), 3) == 8
    assert sequence_value(SequenceRef("r", 8), 4) == 1136
    assert sequence_value(SequenceRef("dstar"), 12) == 12
    assert sequence_value(SequenceRef("sigma3m"), 4) == 71
    assert sequence_value(SequenceRef("chi"), 3) == -1


def test_cache_grows_and_truncates():
    clear_caches()
    long = sequence_series(SequenceRef("pbar"), ZZ, 50)
    short = sequence_series(SequenceRef("pbar"), ZZ, 10)
    assert short.coeffs == long.coeffs[:11]
