"""Compiled and pure-Python kernels must agree on every input."""

import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ohmrush import kernels
from ohmrush._kernels_py import GENERIC, GREVLEX, GRLEX, LEX, MODULAR, NATIVE
from ohmrush.coeff import QQ

IMPLS = kernels.implementations()
needs_cython = pytest.mark.skipif("cython" not in IMPLS, reason="compiled extension not built")

monos = st.tuples(*[st.integers(0, 4)] * 3)
int_polys = st.dictionaries(monos, st.integers(-50, 50).filter(bool), max_size=6)
orders = st.sampled_from([LEX, GRLEX, GREVLEX])


def test_backend_is_reported():
    assert kernels.BACKEND in IMPLS


@needs_cython
@given(monos, monos)
def test_monomial_ops_agree(a, b):
    py, cy = IMPLS["python"], IMPLS["cython"]
    for name in ("mono_mul", "mono_lcm", "mono_divides", "mono_coprime"):
        assert getattr(py, name)(a, b) == getattr(cy, name)(a, b)
    for order in (LEX, GRLEX, GREVLEX):
        assert py.order_key(a, order) == cy.order_key(a, order)
        assert py.order_key(a, order, 1) == cy.order_key(a, order, 1)


@needs_cython
@given(int_polys, int_polys)
def test_poly_mul_agrees(f, g):
    py, cy = IMPLS["python"], IMPLS["cython"]
    assert py.poly_mul(f, g, NATIVE, 0, None) == cy.poly_mul(f, g, NATIVE, 0, None)
    f7 = {k: v % 7 for k, v in f.items() if v % 7}
    g7 = {k: v % 7 for k, v in g.items() if v % 7}
    assert py.poly_mul(f7, g7, MODULAR, 7, None) == cy.poly_mul(f7, g7, MODULAR, 7, None)
    fq = {k: Fraction(v, 3) for k, v in f.items()}
    assert py.poly_mul(fq, g, GENERIC, 0, QQ) == cy.poly_mul(fq, g, GENERIC, 0, QQ)


@needs_cython
@given(int_polys, int_polys, monos, st.integers(-5, 5))
def test_poly_sub_mul_agrees(f, g, mono, c):
    py, cy = IMPLS["python"], IMPLS["cython"]
    assert py.poly_sub_mul(f, g, mono, c, NATIVE, 0, None) == cy.poly_sub_mul(f, g, mono, c, NATIVE, 0, None)


@given(int_polys, int_polys)
def test_poly_mul_commutes(f, g):
    mul = kernels.poly_mul
    assert mul(f, g, NATIVE, 0, None) == mul(g, f, NATIVE, 0, None)


def _monic_basis(polys, order):
    basis = []
    for p in polys:
        p = {k: v % 11 for k, v in p.items() if v % 11}
        if not p:
            continue
        lm = max(p, key=lambda m: IMPLS["python"].order_key(m, order))
        inv = pow(p[lm], -1, 11)
        tail = [(m, c * inv % 11) for m, c in p.items() if m != lm]
        basis.append((lm, tail))
    return basis


@needs_cython
@settings(max_examples=60)
@given(int_polys, st.lists(int_polys, max_size=3), orders)
def test_normal_form_agrees(f, polys, order):
    py, cy = IMPLS["python"], IMPLS["cython"]
    f = {k: v % 11 for k, v in f.items() if v % 11}
    basis = _monic_basis(polys, order)
    r_py = py.normal_form(f, basis, order, 0, MODULAR, 11, None)
    r_cy = cy.normal_form(f, basis, order, 0, MODULAR, 11, None)
    assert r_py == r_cy
    for mono in r_py:
        assert not any(py.mono_divides(lm, mono) for lm, _ in basis)


def test_pure_python_switch():
    env = dict(os.environ, OHMRUSH_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from ohmrush import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_results_identical_under_fallback():
    code = ("from ohmrush.catalog import run_example; r = run_example('ex_Art'); "
            "print(r.passed, [c for c, _ in r.checks])")
    outs = []
    for flag in ("1", "0"):
        env = dict(os.environ, OHMRUSH_PURE_PYTHON=flag)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env,
                                   capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]
    assert outs[0].startswith("True")
