"""Backend parity: the compiled kernels must agree with the pure-Python
twins bit for bit, including the single-magnitude division fast path."""

import pytest
from hypothesis import given, settings, strategies as st

from regover import _pykernel
from regover import kernels

ckernel = pytest.importorskip("regover._ckernel")

coeff_lists = st.lists(st.integers(-10**12, 10**12), min_size=0, max_size=60)
moduli = st.sampled_from([2, 3, 5, 7, 24, 97, 2**31 - 1])


@given(coeff_lists, coeff_lists, st.integers(1, 80), moduli)
@settings(max_examples=120, deadline=None)
def test_mul_mod_parity(a, b, out_len, m):
    assert ckernel.mul_mod(a, b, out_len, m) == _pykernel.mul_mod(a, b, out_len, m)


@given(coeff_lists, coeff_lists, st.integers(1, 80))
@settings(max_examples=120, deadline=None)
def test_mul_exact_parity(a, b, out_len):
    assert ckernel.mul_exact(a, b, out_len) == _pykernel.mul_exact(a, b, out_len)


@st.composite
def divisors(draw, exact):
    tail = draw(st.lists(st.integers(-9, 9), max_size=40))
    if exact:
        head = draw(st.sampled_from([1, -1]))
    else:
        head = draw(st.sampled_from([1, 2, 3, 5, -1]))
    return [head] + tail


@given(coeff_lists, divisors(exact=False), st.integers(1, 80), st.sampled_from([7, 97, 2**31 - 1]))
@settings(max_examples=120, deadline=None)
def test_div_mod_parity(num, den, out_len, m):
    assert ckernel.div_mod(num, den, out_len, m) == _pykernel.div_mod(num, den, out_len, m)


@given(coeff_lists, divisors(exact=True), st.integers(1, 80))
@settings(max_examples=120, deadline=None)
def test_div_exact_parity(num, den, out_len):
    assert ckernel.div_exact(num, den, out_len) == _pykernel.div_exact(num, den, out_len)


@given(coeff_lists, st.integers(1, 60))
@settings(max_examples=60, deadline=None)
def test_div_exact_uniform_tail(num, out_len):
    # lacunary-style divisor: tail entries all +-2 (phi shape), exercising
    # the signed-sum fast path against the generic path via a perturbed twin
    den = [1, 0, -2, 0, 0, 2, 0, 0, 0, -2]
    mixed = [1, 0, -2, 0, 0, 2, 0, 0, 0, -3]
    fast = ckernel.div_exact(num, den, out_len)
    assert fast == _pykernel.div_exact(num, den, out_len)
    assert ckernel.div_exact(num, mixed, out_len) == _pykernel.div_exact(num, mixed, out_len)


def test_div_rejects_non_units():
    with pytest.raises(ValueError):
        ckernel.div_exact([1], [2, 1], 4)
    with pytest.raises(ValueError):
        ckernel.div_mod([1], [3, 1], 4, 6)
    with pytest.raises(ValueError):
        _pykernel.div_exact([1], [2, 1], 4)
    with pytest.raises(ValueError):
        _pykernel.div_mod([1], [3, 1], 4, 6)


def test_division_inverts_multiplication():
    num = [3, 1, 4, 1, 5, 9, 2, 6]
    den = [1, -1, 0, 2, 0, 0, -2]
    q = ckernel.div_exact(num, den, 8)
    assert ckernel.mul_exact(q, den, 8) == num


def test_dispatch_large_modulus_uses_python_path():
    # modulus >= 2**31 must still give exact answers (routed to _pykernel)
    m = 2**40 + 7
    a = [2**39, 1, m - 1]
    b = [5, 7]
    assert kernels.mul_mod(a, b, 3, m) == _pykernel.mul_mod(a, b, 3, m)
    assert kernels.div_mod(a, [3, 1], 3, m) == _pykernel.div_mod(a, [3, 1], 3, m)


def test_backend_reports_compiled():
    assert kernels.backend_name() in ("compiled", "pure-python")
    assert kernels.HAVE_COMPILED
