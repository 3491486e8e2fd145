"""Fiber integration, kappa-classes, coupling class and fiberwise classes.

A fibered model presents the total ring of a fibration as a free module over
the base ring on powers of a distinguished fiber generator x: elements are
sums b_j * x^j with base coefficients b_j and 0 <= j <= top, subject to a
monic relation expressing x^{top+1} in lower powers (empty for an odd x,
where x^2 = 0 identically).  This covers both pushforward strategies in use:
projective-space-type fibers (free module on 1, x, ..., x^n) and
odd-sphere-type fibers (exterior x adjoined to a base with differential,
where every class of interest is of the form c + D(c) x).  In both cases
fiber integration is the coefficient of the top power.

On top of the module structure: kappa-classes by substituting the recorded
characteristic classes into a formal polynomial and integrating, the
coupling class (the unique degree-2 class restricting to the fiber Kaehler
class with vanishing integral of its (n+1)-st power), a-classes, fiberwise
Chern/Pontryagin/Euler classes, decomposition in coupling-class powers, and
the projectivization dictionary between Chern classes of a rank-(n+1)
complex vector bundle and the classes of its projectivization.
"""

from fractions import Fraction
from math import comb

from .gca import Element, FreeGCA
from .presentations import ideal_membership


class FiberedModel:
    """Total ring of a fibration as base[x] / (monic relation).

    base: FreeGCA of the base ring (a differential, if any, lives outside
    this class); x_name/x_degree: the fiber generator; top: highest
    surviving power of x; relation: {j: base Element} with
    x^{top+1} = sum_j relation[j] * x^j (empty means x^{top+1} = 0, which
    for odd x of top 1 is automatic).  classes: {symbol: TotalElement}
    characteristic class table; rank: real rank of the recorded bundle
    (used by callers for dimension-sensitive Euler substitutions).
    """

    def __init__(self, base, x_name, x_degree, top, relation=None,
                 classes=None, rank=None):
        self.base = base
        self.x_name = x_name
        self.x_degree = x_degree
        self.top = top
        self.relation = {j: e for j, e in (relation or {}).items()
                         if not e.is_zero()}
        if self.relation:
            assert x_degree % 2 == 0, \
                "a nontrivial reduction relation requires an even fiber generator"
        for j, e in self.relation.items():
            assert 0 <= j <= top
            assert e.algebra is base
            assert e.degree() == (top + 1 - j) * x_degree
        self.classes = dict(classes or {})
        self.rank = rank

    # -- element constructors -------------------------------------------
    def zero(self):
        return TotalElement(self, {})

    def from_base(self, e):
        assert e.algebra is self.base
        return TotalElement(self, {0: e})

    def x_power(self, j):
        out = TotalElement(self, {j: self.base.one()})
        return out._reduce()

    def from_mixed(self, elem):
        """Convert an element of a free gca whose *last* generator is x and
        whose other generators match the base, splitting by x-exponent."""
        A = elem.algebra
        assert A.generators[-1].name == self.x_name
        assert [g.name for g in A.generators[:-1]] == \
            [g.name for g in self.base.generators]
        coeffs = {}
        for mono, c in elem.terms.items():
            j = mono[-1]
            bmono = mono[:-1]
            cur = coeffs.setdefault(j, {})
            cur[bmono] = cur.get(bmono, Fraction(0)) + c
        out = TotalElement(self, {j: Element(self.base, t)
                                  for j, t in coeffs.items()})
        return out._reduce()

    # -- fiber integration ----------------------------------------------
    def pushforward(self, a):
        """Coefficient of x^top; drops degree by top * |x|."""
        assert a.model is self
        return a.coeffs.get(self.top, self.base.zero())

    def kappa(self, expr):
        """pushforward of expr evaluated through the class table.

        expr: Element of any free gca whose generator names all appear in
        the class table (or the literal name of a single class).
        """
        if isinstance(expr, str):
            return self.pushforward(self.resolve(expr))
        return self.pushforward(self.evaluate(expr))

    def resolve(self, name):
        if name not in self.classes:
            raise KeyError(f"unknown characteristic class symbol {name!r}")
        return self.classes[name]

    def evaluate(self, expr):
        """Evaluate a formal polynomial in recorded class symbols to a total
        element."""
        A = expr.algebra
        out = self.zero()
        for mono, c in expr.terms.items():
            term = self.from_base(self.base.scalar(c))
            for i, e in enumerate(mono):
                for _ in range(e):
                    term = term * self.resolve(A.generators[i].name)
            out = out + term
        return out


class TotalElement:
    """A total-ring element sum_j coeffs[j] * x^j (0 <= j <= top after
    reduction)."""

    __slots__ = ("model", "coeffs")

    def __init__(self, model, coeffs):
        self.model = model
        self.coeffs = {j: e for j, e in coeffs.items() if not e.is_zero()}

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        degs = {e.degree() + j * self.model.x_degree
                for j, e in self.coeffs.items()}
        assert len(degs) <= 1, f"not homogeneous: {sorted(degs)}"
        return degs.pop() if degs else 0

    def _reduce(self):
        m = self.model
        coeffs = dict(self.coeffs)
        while True:
            high = [j for j in coeffs if j > m.top]
            if not high:
                break
            j = max(high)
            e = coeffs.pop(j)
            if e.is_zero():
                continue
            # x^j = x^{j-top-1} * x^{top+1} = sum_l rel[l] x^{j-top-1+l}
            for l, r in m.relation.items():
                k = j - m.top - 1 + l
                coeffs[k] = coeffs.get(k, m.base.zero()) + e * r
        return TotalElement(m, coeffs)

    def __add__(self, other):
        assert self.model is other.model
        coeffs = dict(self.coeffs)
        for j, e in other.coeffs.items():
            coeffs[j] = coeffs.get(j, self.model.base.zero()) + e
        return TotalElement(self.model, coeffs)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        m = self.model
        if not isinstance(other, TotalElement):
            return TotalElement(m, {j: e * other
                                    for j, e in self.coeffs.items()})
        assert m is other.model
        xpar = m.x_degree % 2
        coeffs = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if xpar and i and j:
                    continue  # x^2 = 0 for odd x
                # move x^i past b
                sign = 1
                if xpar and (i % 2):
                    sign = (-1) ** (b.degree() % 2)
                k = i + j
                term = sign * (a * b)
                coeffs[k] = coeffs.get(k, m.base.zero()) + term
        return TotalElement(m, coeffs)._reduce()

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = self.model.from_base(self.model.base.one())
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TotalElement):
            return NotImplemented
        return self.model is other.model and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        x = self.model.x_name
        parts = []
        for j in sorted(self.coeffs):
            e = self.coeffs[j]
            head = f"({e})" if len(e.terms) > 1 else f"{e}"
            if j == 0:
                parts.append(head)
            else:
                xs = x if j == 1 else f"{x}^{j}"
                parts.append(f"{head}*{xs}" if head != "1" else xs)
        return " + ".join(parts)


def coupling_class(m):
    """The unique degree-|x| total element restricting to x on the fiber
    with vanishing pushforward of its (top+1)-st power.

    The two conditions are linear in the base correction: for w = x + b,
    pushforward(w^{top+1}) = pushforward(x^{top+1}) + (top+1) b, since
    lower-order terms cannot reach the top power.  Hence
    b = -pushforward(x^{top+1}) / (top + 1), uniquely.
    """
    n1 = m.top + 1
    corr = m.pushforward(m.x_power(1) ** n1) * Fraction(-1, n1)
    w = m.x_power(1) + m.from_base(corr)
    assert m.pushforward(w ** n1).is_zero()
    return w


def decompose(m, a, omega):
    """Base coefficients of a in the basis 1, omega, ..., omega^top.

    omega = x + base correction, so the change of basis is unipotent
    triangular: peel from the top power down.  The reassembly is asserted.
    """
    rest = a
    out = [m.base.zero()] * (m.top + 1)
    for j in range(m.top, -1, -1):
        c = rest.coeffs.get(j, m.base.zero())
        out[j] = c
        rest = rest - m.from_base(c) * omega ** j
    assert rest.is_zero(), "decomposition failed to terminate"
    check = m.zero()
    for j, c in enumerate(out):
        check = check + m.from_base(c) * omega ** j
    assert check == a
    return out


def a_classes(m, omega):
    """The classes a_2, ..., a_{top+1} with
    omega^{top+1} + a_2 omega^{top-1} + ... + a_{top+1} = 0.

    Returns [a_2, ..., a_{top+1}]; raises if the omega^top coefficient of
    omega^{top+1} is nonzero (the relation has no a_1 term).
    """
    n1 = m.top + 1
    coeffs = decompose(m, omega ** n1, omega)
    assert coeffs[m.top].is_zero(), \
        "coupling-class power has an omega^top term (a_1 != 0)"
    return [-coeffs[n1 - k] for k in range(2, n1 + 1)]


def fiberwise_classes(m, omega, a_list):
    """Fiberwise Chern, Pontryagin and Euler classes of a CP^top-type fiber.

    c_i^fw = sum_j binom(top+1-j, i-j) a_j omega^{i-j}   (a_0 = 1, a_1 = 0)
    p_i^fw = sum_j (-1)^{j-i} c_j^fw c_{2i-j}^fw          (c_j^fw = 0, j > top)
    e^fw = c_top^fw.

    Returns ({'c_1': ..}, {'p_1': ..}, e^fw) with total-ring values.
    """
    n = m.top

    def a_of(j):
        if j == 0:
            return m.from_base(m.base.one())
        if j == 1:
            return m.zero()
        return m.from_base(a_list[j - 2])

    c = {0: m.from_base(m.base.one())}
    for i in range(1, n + 1):
        val = m.zero()
        for j in range(0, i + 1):
            b = comb(n + 1 - j, i - j)
            if b:
                val = val + b * (a_of(j) * omega ** (i - j))
        c[i] = val

    def c_of(j):
        if j < 0 or j > n:
            return m.zero()
        return c[j]

    p = {}
    for i in range(1, n + 1):
        val = m.zero()
        for j in range(0, 2 * i + 1):
            term = c_of(j) * c_of(2 * i - j)
            sign = (-1) ** (j - i)
            val = val + sign * term
        p[i] = val
    cfw = {f"c_{i}": c[i] for i in range(1, n + 1)}
    pfw = {f"p_{i}": p[i] for i in range(1, n + 1)}
    return cfw, pfw, c[n]


def ideal_power_membership(ambient, gens, elem, power=2, n=None):
    """Is elem in the `power`-th power of the ideal generated by gens?

    Decided degreewise: the span of (product of `power` generators) *
    monomial.  gens are positive-degree homogeneous elements of the ambient
    coordinate system's algebra.
    """
    prods = []

    def rec(start, acc, depth):
        if depth == power:
            prods.append(acc)
            return
        for i in range(start, len(gens)):
            rec(i, acc * gens[i], depth + 1)

    rec(0, gens[0].algebra.one(), 0)
    return ideal_membership(ambient, prods, elem, n=n)


def projectivization_chern(n):
    """The projectivization dictionary for a rank-(n+1) complex vector
    bundle E: the CP^n-fibration P(E) -> B with canonical line bundle L.

    Works in the formal base ring Q[c_1..c_{n+1}] with t = c_1 of the
    conjugate line bundle, subject to sum_j c_{n+1-j}(E) t^j = 0.  Returns a
    dict with the fibered model, the coupling class, e_{|0}, the a-classes
    (verified against the closed formula), the Chern classes c_i(zeta) of
    the fiberwise tangent bundle, and c_i(E) reconstructed from the
    a-classes (verified to return the generators identically).
    """
    base = FreeGCA([(f"c_{i}", 2 * i) for i in range(1, n + 2)])

    def c_of(i):
        if i == 0:
            return base.one()
        if i < 0 or i > n + 1:
            return base.zero()
        return base.gen(f"c_{i}")

    # t^{n+1} = - sum_{j<=n} c_{n+1-j} t^j
    relation = {j: -c_of(n + 1 - j) for j in range(0, n + 1)}
    m = FiberedModel(base, "t", 2, n, relation=relation)
    t = m.x_power(1)
    # the defining relation holds in the model
    rel_check = m.zero()
    for j in range(0, n + 2):
        rel_check = rel_check + m.from_base(c_of(n + 1 - j)) * t ** j
    assert rel_check.is_zero()

    omega = coupling_class(m)
    e0 = c_of(1) * Fraction(1, n + 1)
    assert omega == t + m.from_base(e0), \
        "coupling class differs from t + c_1/(n+1)"
    a_list = a_classes(m, omega)
    # closed formula for the a-classes
    for i in range(2, n + 2):
        val = base.zero()
        for j in range(0, i + 1):
            b = comb(n + 1 - i + j, j)
            if b:
                val = val + ((-1) ** j) * b * (c_of(i - j) * e0 ** j)
        assert a_list[i - 2] == val, f"a_{i} formula mismatch"
    # Chern classes of the fiberwise tangent bundle
    c_zeta = {}
    for i in range(1, n + 1):
        val = m.zero()
        for j in range(0, i + 1):
            b = comb(n + 1 - i + j, j)
            if b:
                val = val + b * (m.from_base(c_of(i - j)) * t ** j)
        c_zeta[f"c_{i}"] = val
    # inversion: c_i(E) from the a-classes and e_{|0}
    c_back = {}
    for i in range(1, n + 2):
        val = base.zero()
        for j in range(0, i + 1):
            b = comb(n + 1 - i + j, j)
            if not b:
                continue
            if i - j == 0:
                aij = base.one()
            elif i - j == 1:
                aij = base.zero()
            else:
                aij = a_list[i - j - 2]
            val = val + b * (aij * e0 ** j)
        c_back[f"c_{i}"] = val
        assert val == c_of(i), f"a-class inversion fails for c_{i}"
    return {
        "model": m,
        "omega": omega,
        "e0": e0,
        "a": a_list,
        "c_zeta": c_zeta,
        "c_from_a": c_back,
    }
