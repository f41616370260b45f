"""Exact matrix checks in sl_n over the Gaussian rationals.

These are independent of the partition recipes in :mod:`nilorbits.orbits`:
weighted diagrams and centralizer dimensions are recomputed here from
explicit sl2-triples and from the rank of a commutator system.  The module
also replays the explicit SL_3 computations behind the regular-orbit real
structure that does not extend to sl_3.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy as sp

from .core import DomainError, Partition, SimpleType, WeightedDiagram


class OracleFailure(AssertionError):
    """An exact identity that should hold did not."""


def _is_gaussian_rational(z) -> bool:
    re_, im_ = sp.re(z), sp.im(z)
    return re_.is_Rational is True and im_.is_Rational is True


def exact_matrix(rows) -> sp.ImmutableMatrix:
    """Square matrix with Gaussian-rational entries."""
    m = sp.ImmutableMatrix(rows)
    if m.rows != m.cols:
        raise DomainError(f"matrix must be square, got {m.shape}")
    if not all(_is_gaussian_rational(sp.nsimplify(z)) for z in m):
        raise DomainError("matrix entries must be Gaussian rationals")
    return m


def format_entry(z) -> str:
    re_, im_ = sp.re(z), sp.im(z)
    if im_ == 0:
        return str(re_)
    if re_ == 0:
        return f"{im_} i"
    sign = "-" if im_ < 0 else "+"
    return f"{re_} {sign} {abs(im_)} i"


def format_matrix(m) -> str:
    return "\n".join("[" + ", ".join(format_entry(m[i, j]) for j in range(m.cols)) + "]" for i in range(m.rows))


def bracket(a, b):
    return a * b - b * a


def conj(m):
    return m.applyfunc(sp.conjugate)


@dataclass(frozen=True)
class Sl2Triple:
    x: sp.ImmutableMatrix
    h: sp.ImmutableMatrix
    y: sp.ImmutableMatrix

    def relations_hold(self) -> bool:
        return (
            bracket(self.h, self.x) == 2 * self.x
            and bracket(self.h, self.y) == -2 * self.y
            and bracket(self.x, self.y) == self.h
        )


def standard_sl2_triple(p: Partition) -> Sl2Triple:
    """Block-diagonal triple, one Jordan block per part."""
    n = p.sum
    x, h, y = (sp.zeros(n, n) for _ in range(3))
    start = 0
    for d in p:
        for i in range(d):
            h[start + i, start + i] = d - 1 - 2 * i
            if i + 1 < d:
                x[start + i, start + i + 1] = 1
                y[start + i + 1, start + i] = (i + 1) * (d - i - 1)
        start += d
    return Sl2Triple(sp.ImmutableMatrix(x), sp.ImmutableMatrix(h), sp.ImmutableMatrix(y))


def wdd_from_triple(t: Sl2Triple, n: int) -> WeightedDiagram:
    h = t.h
    if h.shape != (n, n) or not h.is_diagonal():
        raise DomainError("the neutral element must be an n x n diagonal matrix")
    eig = [h[i, i] for i in range(n)]
    if not all(getattr(e, "is_integer", False) for e in eig):
        raise DomainError(f"non-integer eigenvalues {eig}")
    eig = sorted((int(e) for e in eig), reverse=True)
    return WeightedDiagram(SimpleType("A", n - 1), tuple(a - b for a, b in zip(eig, eig[1:])))


def centralizer_dimension(p: Partition) -> int:
    """dim of the centralizer of a nilpotent of Jordan type ``p`` in gl_n."""
    return sum((2 * i - 1) * d for i, d in enumerate(p, 1))


def centralizer_dimension_by_rank(p: Partition) -> int:
    """Same quantity as :func:`centralizer_dimension`, via the kernel of M -> [x, M]."""
    n = p.sum
    x = standard_sl2_triple(p).x
    cols = []
    for k in range(n * n):
        e = sp.zeros(n, n)
        e[k // n, k % n] = 1
        cols.append(list(bracket(x, e)))
    system = sp.Matrix(cols).T
    return n * n - system.rank()


# -- the regular orbit of sl_3 -------------------------------------------------

I = sp.I
REGULAR_NILPOTENT = sp.ImmutableMatrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
G0 = sp.ImmutableMatrix([[1, I, 0], [0, 1, 0], [0, 0, 1]])


def stabilizer_element(a, b, c) -> sp.ImmutableMatrix:
    """Generic element of the stabilizer of the regular nilpotent (needs a**3 == 1)."""
    return sp.ImmutableMatrix([[a, b, c], [0, a, b], [0, 0, a]])


def in_stabilizer(m) -> bool:
    """Membership in {a I + b N + c N^2 : a^3 = 1}, N the regular nilpotent."""
    m = sp.Matrix(m).applyfunc(sp.expand)
    a, b, c = m[0, 0], m[0, 1], m[0, 2]
    return sp.expand(m - stabilizer_element(a, b, c)) == sp.zeros(3, 3) and sp.simplify(a**3 - 1) == 0


@dataclass
class DescentData:
    """The (g0, H, sigma) data for the regular orbit of sl_3 with complex conjugation."""

    g0: sp.ImmutableMatrix = G0
    params: tuple = field(default_factory=lambda: sp.symbols("a b c"))
    checks: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool) -> None:
        self.checks[name] = bool(ok)
        if not ok:
            raise OracleFailure(name)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())


def _sym_equal(m1, m2) -> bool:
    return (sp.Matrix(m1) - sp.Matrix(m2)).applyfunc(sp.expand) == sp.zeros(*m1.shape)


def check_descent_conditions_sl3() -> DescentData:
    """Verify that g0 satisfies both conditions for H = Stab(regular nilpotent).

    Raises :class:`OracleFailure` on the first identity that fails.
    """
    inst = DescentData()
    a, b, c = inst.params
    a2, b2, c2 = sp.symbols("a2 b2 c2")
    g0, g0inv = inst.g0, inst.g0.inv()
    e = REGULAR_NILPOTENT
    Hm = stabilizer_element(a, b, c)

    # H really is the stabilizer: the commutant of e is {aI + bN + cN^2}.
    gen = sp.Matrix(3, 3, sp.symbols("m0:9"))
    sol = sp.solve(list(gen * e - e * gen), list(gen), dict=True)[0]
    inst.record("commutant of e is upper-triangular Toeplitz", _sym_equal(
        gen.subs(sol), stabilizer_element(gen[0, 0], gen[0, 1], gen[0, 2]).subs(sol)))
    inst.record("det H(a,b,c) = a^3", sp.expand(Hm.det() - a**3) == 0)
    inst.record("H closed under products", _sym_equal(
        Hm * stabilizer_element(a2, b2, c2), stabilizer_element(a * a2, a * b2 + b * a2, a * c2 + b * b2 + c * a2)))
    inst.record("H closed under inverses", _sym_equal(
        Hm.inv(), stabilizer_element(1 / a, -b / a**2, (b**2 - a * c) / a**3)))

    inst.record("sigma(g0) g0 = 1", conj(g0) * g0 == sp.eye(3))
    inst.record("sigma(g0) g0 in H", in_stabilizer(conj(g0) * g0))
    inst.record("g0 H(a,b,c) g0^-1 = H(a,b,c+ib)", _sym_equal(g0 * Hm * g0inv, stabilizer_element(a, b, c + I * b)))
    inst.record("g0 H(1,1,0) g0^-1 = H(1,1,i)", g0 * stabilizer_element(1, 1, 0) * g0inv == stabilizer_element(1, 1, I))
    ca, cb, cc = sp.symbols("abar bbar cbar")
    sigma_H = conj(Hm).subs({sp.conjugate(a): ca, sp.conjugate(b): cb, sp.conjugate(c): cc})
    inst.record("sigma(H(a,b,c)) = H(abar,bbar,cbar)", _sym_equal(sigma_H, stabilizer_element(ca, cb, cc)))
    inst.record("sigma(H(1,i,0)) = H(1,-i,0)", conj(stabilizer_element(1, I, 0)) == stabilizer_element(1, -I, 0))
    omega = sp.Rational(-1, 2) + sp.sqrt(3) * I / 2
    inst.record("sigma maps H(omega,1,i) into H", in_stabilizer(conj(stabilizer_element(omega, 1, I))))
    inst.record("mu(e) = g0 . e = [[0,1,i],[0,0,1],[0,0,0]]",
                g0 * e * g0inv == sp.ImmutableMatrix([[0, 1, I], [0, 0, 1], [0, 0, 0]]))
    return inst


def check_mu_theta(theta_numerator: int, theta_denominator: int, n: int = 3) -> bool:
    """Check that v -> e^{i theta} conj(v) squares to the identity on a basis of sl_n.

    Only quarter turns (theta a multiple of pi/2) are supported so the phase stays exact.
    """
    if theta_denominator == 0:
        raise DomainError("theta denominator must be non-zero")
    turn = Fraction(theta_numerator, theta_denominator) % 2
    phases = {Fraction(0): 1, Fraction(1, 2): I, Fraction(1): -1, Fraction(3, 2): -I}
    if turn not in phases:
        raise DomainError(f"theta = {theta_numerator}/{theta_denominator} pi is not a multiple of pi/2")
    phase = phases[turn]

    def mu(v):
        return phase * conj(v)

    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = sp.zeros(n, n)
                m[i, j] = 1
                basis.append(m)
    for i in range(n - 1):
        m = sp.zeros(n, n)
        m[i, i], m[i + 1, i + 1] = 1, -1
        basis.append(m)
    # mu is antilinear, so also test on i * basis.
    return all(sp.expand(mu(mu(v)) - v) == sp.zeros(n, n) for v in basis + [I * v for v in basis])


def w_matrix(a):
    return sp.ImmutableMatrix([[a, 1, 0], [0, a, 1], [0, 0, -2 * a]])


def g_matrix(a):
    return sp.Rational(1, 3) * sp.ImmutableMatrix([[1 / a, 0, 3], [0, 1 / a, -9 * a], [0, 0, 27 * a**2]])


def u_matrix(a, b):
    return sp.ImmutableMatrix([[a, b, 0], [0, a, 0], [0, 0, -2 * a]])


def check_wa_identity(a) -> bool:
    """``w_a = g_a u_{a,1} g_a^-1`` for a non-zero rational ``a``."""
    a = sp.Rational(Fraction(a)) if not isinstance(a, sp.Basic) else a
    if a == 0:
        raise DomainError("a must be non-zero")
    g = g_matrix(a)
    return g.det() == 1 and g * u_matrix(a, 1) * g.inv() == w_matrix(a)


@dataclass
class VerifyResult:
    name: str
    ok: bool
    detail: str = ""


def run_fixtures(max_n: int = 6) -> list[VerifyResult]:
    """All oracle fixtures, in a fixed order, for the ``verify`` command."""
    from .core import partitions
    from .orbits import orbit_dimension, weighted_dynkin, OrbitLabel

    out: list[VerifyResult] = []

    def run(name, fn):
        try:
            ok = bool(fn())
            out.append(VerifyResult(name, ok))
        except OracleFailure as exc:
            out.append(VerifyResult(name, False, str(exc)))

    inst_holder = {}

    def descent():
        inst_holder["inst"] = check_descent_conditions_sl3()
        return inst_holder["inst"].passed

    run("g0 satisfies both conditions for H = Stab(e) in SL_3", descent)
    for num, den in ((0, 1), (1, 2), (1, 1)):
        run(f"mu_theta is an involution at theta = {num}/{den} pi", lambda num=num, den=den: check_mu_theta(num, den))
    for a in (Fraction(1), Fraction(1, 2), Fraction(-3)):
        run(f"w_a = g_a . u_(a,1) at a = {a}", lambda a=a: check_wa_identity(a))

    def triples():
        for n in range(1, max_n + 1):
            t = SimpleType("A", n - 1) if n > 1 else None
            for p in partitions(n):
                tr = standard_sl2_triple(p)
                if not tr.relations_hold():
                    raise OracleFailure(f"triple relations fail for {p}")
                if t is None:
                    continue
                o = OrbitLabel(p)
                if wdd_from_triple(tr, n) != weighted_dynkin(t, o):
                    raise OracleFailure(f"weighted diagram mismatch for {p}")
                if n * n - centralizer_dimension(p) != orbit_dimension(t, o):
                    raise OracleFailure(f"dimension mismatch for {p}")
        return True

    run(f"sl2-triples agree with the partition recipes for n <= {max_n}", triples)
    return out
