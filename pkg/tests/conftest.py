import sys

from hypothesis import strategies as st

from clustermono.laurent import LaurentPolynomial


def laurent_polys(rank=3, lo=-2, hi=2, max_terms=5, coeffs=(-6, 6)):
    exps = st.tuples(*[st.integers(lo, hi)] * rank)
    return st.dictionaries(exps, st.integers(*coeffs), max_size=max_terms).map(
        lambda d: LaurentPolynomial(rank, d))


def nonzero_laurent(rank=3, **kw):
    return laurent_polys(rank, **kw).filter(lambda p: not p.is_zero())


def positive_polys(rank=3, hi=2, max_terms=4):
    exps = st.tuples(*[st.integers(0, hi)] * rank)
    return st.dictionaries(exps, st.integers(1, 5), min_size=1, max_size=max_terms).map(
        lambda d: LaurentPolynomial(rank, d))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in sorted(mod.RESULTS, key=lambda r: _order(r[0])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {name}: {detail}")


def _order(name):
    head = name.split()[0]
    return (int("".join(ch for ch in head if ch.isdigit())), head)
