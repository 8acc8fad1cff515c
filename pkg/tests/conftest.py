from hypothesis import settings, strategies as st

from polar_ch2.lie import LieElt
from polar_ch2.roots import frame
from polar_ch2.scalars import ExactScalar, QSqrt3

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_ints = st.integers(-7, 7)
dens = st.integers(1, 6)
rationals = st.builds(lambda n, d: QSqrt3(n, 0) / d, small_ints, dens)
qsqrt3 = st.builds(lambda a, b: a + b * QSqrt3(0, 1), rationals, rationals)
nonzero_qsqrt3 = qsqrt3.filter(bool)
exact_scalars = st.builds(ExactScalar, qsqrt3, qsqrt3)


@st.composite
def algebra_elements(draw, names=None):
    f = frame()
    names = names or ("tZ", "tU1", "tU2", "T", "B", "U1", "U2", "Z")
    out = LieElt.zero()
    for n in names:
        c = draw(rationals)
        if c:
            out = out + f[n] * c
    return out


@st.composite
def g_alpha_elements(draw):
    return draw(algebra_elements(("U1", "U2")))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(mod.RESULTS):
            terminalreporter.write_line(mod.RESULTS[n])
