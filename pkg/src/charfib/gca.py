"""Free graded-commutative algebras over Q with Koszul signs.

Generators carry a single integer cohomological degree; parity (degree mod 2)
determines commutation signs.  Monomials are exponent vectors in a fixed
generator order (odd generators square to zero), elements are finite Q-linear
combinations of monomials, derivations extend generator images by the graded
Leibniz rule, and a Cdga is an algebra with a degree +1 differential
derivation whose square is machine-checked to vanish on generators.

Degreewise homogeneous bases are finite because every generator has degree
>= 1; they are the substrate for all cohomology and presentation
computations.
"""

from fractions import Fraction

from .linalg import Echelon, SparseMatrix, kernel_basis


class Generator:
    __slots__ = ("name", "degree", "tag")

    def __init__(self, name, degree, tag=None):
        assert isinstance(name, str) and name
        assert isinstance(degree, int) and degree >= 1
        self.name = name
        self.degree = degree
        self.tag = tag

    @property
    def parity(self):
        return self.degree % 2

    def __repr__(self):
        return f"Generator({self.name!r}, {self.degree})"


class FreeGCA:
    """Free graded-commutative algebra on an ordered generator list."""

    def __init__(self, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Generator):
                g = Generator(*g) if isinstance(g, tuple) else Generator(g[0], g[1])
            gens.append(g)
        names = [g.name for g in gens]
        assert len(set(names)) == len(names), "generator names must be unique"
        self.generators = tuple(gens)
        self.index = {g.name: i for i, g in enumerate(gens)}
        self._degrees = tuple(g.degree for g in gens)
        self._parities = tuple(g.parity for g in gens)
        self._basis_cache = {}

    @property
    def ngens(self):
        return len(self.generators)

    def degree_of(self, mono):
        return sum(e * d for e, d in zip(mono, self._degrees))

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(0,) * self.ngens: Fraction(1)})

    def scalar(self, c):
        c = Fraction(c)
        return Element(self, {(0,) * self.ngens: c} if c else {})

    def gen(self, name):
        i = self.index[name]
        mono = [0] * self.ngens
        mono[i] = 1
        return Element(self, {tuple(mono): Fraction(1)})

    def monomial(self, mono):
        mono = tuple(mono)
        assert len(mono) == self.ngens
        return Element(self, {mono: Fraction(1)})

    def monomials(self, n):
        """All monomials of total degree n, in canonical (lexicographic
        exponent-vector) order."""
        assert n >= 0
        if n in self._basis_cache:
            return self._basis_cache[n]
        out = []

        def rec(i, rem, prefix):
            if i == self.ngens:
                if rem == 0:
                    out.append(tuple(prefix))
                return
            d = self._degrees[i]
            emax = rem // d
            if self._parities[i]:
                emax = min(emax, 1)
            for e in range(emax + 1):
                prefix.append(e)
                rec(i + 1, rem - e * d, prefix)
                prefix.pop()

        rec(0, n, [])
        out.sort()
        self._basis_cache[n] = out
        return out

    def mul_monomials(self, m1, m2):
        """(sign, product monomial) or None if the product vanishes."""
        sign = 0
        # Koszul sign: each odd factor of m2 at slot i moves past the odd
        # factors of m1 at slots j > i.
        odd_suffix = 0  # running sum of odd exponents of m1 at slots > i
        suffixes = [0] * (self.ngens + 1)
        for i in range(self.ngens - 1, -1, -1):
            suffixes[i] = suffixes[i + 1] + (m1[i] if self._parities[i] else 0)
        prod = []
        for i in range(self.ngens):
            if self._parities[i]:
                if m1[i] and m2[i]:
                    return None
                sign += m2[i] * suffixes[i + 1]
            prod.append(m1[i] + m2[i])
        return (-1) ** (sign % 2), tuple(prod)

    def extend(self, extra_generators):
        """A new algebra with the same generators plus extra ones appended."""
        return FreeGCA(list(self.generators) + list(extra_generators))

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"FreeGCA({gens})"


class Element:
    """A finite Q-linear combination of monomials of a FreeGCA."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        degs = {self.algebra.degree_of(m) for m in self.terms}
        return len(degs) <= 1

    def degree(self):
        """Degree of a homogeneous element (0 for the zero element)."""
        degs = {self.algebra.degree_of(m) for m in self.terms}
        assert len(degs) <= 1, f"not homogeneous: degrees {sorted(degs)}"
        return degs.pop() if degs else 0

    def homogeneous_part(self, n):
        A = self.algebra
        return Element(A, {m: c for m, c in self.terms.items()
                           if A.degree_of(m) == n})

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def _check_same(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.scalar(other)
        self._check_same(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return Element(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Element):
            c = Fraction(other)
            return Element(self.algebra,
                           {m: v * c for m, v in self.terms.items()})
        self._check_same(other)
        A = self.algebra
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                res = A.mul_monomials(m1, m2)
                if res is None:
                    continue
                sign, prod = res
                terms[prod] = terms.get(prod, Fraction(0)) + sign * c1 * c2
        return Element(A, terms)

    def __rmul__(self, other):
        # scalars commute with everything
        return self * other

    def __truediv__(self, c):
        assert not isinstance(c, Element), "division only by scalars"
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, Element):
            return self.terms == self.algebra.scalar(other).terms
        return self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.terms.items()))))

    def map_coefficients(self, f):
        return Element(self.algebra, {m: f(c) for m, c in self.terms.items()})

    def __repr__(self):
        return format_element(self)


def format_element(elem):
    """Canonical printing: terms sorted by (degree, exponent vector)."""
    A = elem.algebra
    if not elem.terms:
        return "0"
    items = sorted(elem.terms.items(),
                   key=lambda mc: (A.degree_of(mc[0]), mc[0]))
    parts = []
    for m, c in items:
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(A.generators[i].name)
            elif e > 1:
                factors.append(f"{A.generators[i].name}^{e}")
        body = "*".join(factors) if factors else "1"
        if c == 1 and factors:
            term = body
        elif c == -1 and factors:
            term = "-" + body
        else:
            cs = str(c)
            term = cs if not factors else f"{cs}*{body}"
        if parts and not term.startswith("-"):
            parts.append("+" + term)
        else:
            parts.append(term)
    return "".join(parts)


class Derivation:
    """A degree-t derivation of a FreeGCA, given by generator images.

    Generators absent from `images` map to zero.  Extension to the whole
    algebra follows the graded Leibniz rule
    theta(ab) = theta(a)b + (-1)^{t|a|} a theta(b).
    """

    def __init__(self, source, degree, images, name=None):
        self.source = source
        self.degree = degree
        self.name = name
        imgs = {}
        for gname, elem in images.items():
            assert gname in source.index, f"unknown generator {gname}"
            if isinstance(elem, Element) and elem.is_zero():
                continue
            assert elem.algebra is source
            if not elem.is_zero():
                d = source.generators[source.index[gname]].degree
                assert elem.degree() == d + degree, \
                    f"image of {gname} has wrong degree"
                imgs[gname] = elem
        self.images = imgs

    def image_of(self, gname):
        return self.images.get(gname, self.source.zero())

    def __call__(self, elem):
        assert elem.algebra is self.source
        A = self.source
        t = self.degree
        out = A.zero()
        for mono, coeff in elem.terms.items():
            out = out + coeff * self._apply_mono(mono)
        return out

    def _apply_mono(self, mono):
        A = self.source
        t = self.degree
        out = A.zero()
        deg_prefix = 0
        for i, e in enumerate(mono):
            gi = A.generators[i]
            if e:
                img = self.images.get(gi.name)
                if img is not None:
                    prefix = [0] * A.ngens
                    suffix = [0] * A.ngens
                    for j in range(i):
                        prefix[j] = mono[j]
                    rest = [0] * A.ngens
                    rest[i] = e - 1
                    for j in range(i + 1, A.ngens):
                        suffix[j] = mono[j]
                    sign = (-1) ** ((t * deg_prefix) % 2)
                    term = (A.monomial(prefix) * img * A.monomial(rest)
                            * A.monomial(suffix))
                    out = out + sign * e * term
                deg_prefix += e * gi.degree
        return out

    def __repr__(self):
        body = ", ".join(f"{g} -> {img}" for g, img in self.images.items())
        return f"Derivation({self.name or ''} deg {self.degree}: {body})"


class Cdga:
    """A free gca with a degree +1 differential; d^2 = 0 is checked on
    generators at construction."""

    def __init__(self, algebra, differential):
        assert isinstance(differential, Derivation)
        assert differential.source is algebra
        assert differential.degree == 1
        self.algebra = algebra
        self.d = differential
        for g in algebra.generators:
            dd = differential(differential.image_of(g.name))
            if not dd.is_zero():
                raise ValueError(f"d^2 != 0 on generator {g.name}: {dd}")

    @classmethod
    def with_zero_differential(cls, algebra):
        return cls(algebra, Derivation(algebra, 1, {}))

    def extend(self, extra_generators, extra_images):
        """Extend by new generators with prescribed differentials.

        extra_images maps new generator names to Elements of the *extended*
        algebra; old generators keep their differentials.
        """
        big = self.algebra.extend(extra_generators)
        images = {}
        lift = make_inclusion(self.algebra, big)
        for gname, img in self.d.images.items():
            images[gname] = lift(img)
        for gname, img in extra_images.items():
            images[gname] = img
        return Cdga(big, Derivation(big, 1, images))

    def __repr__(self):
        return f"Cdga({self.algebra!r})"


def make_inclusion(small, big):
    """The algebra map small -> big sending generators to same-named
    generators."""
    for g in small.generators:
        assert g.name in big.index, f"{g.name} missing in target"

    def incl(elem):
        assert elem.algebra is small
        terms = {}
        for mono, c in elem.terms.items():
            out = [0] * big.ngens
            for i, e in enumerate(mono):
                out[big.index[small.generators[i].name]] = e
            terms[tuple(out)] = c
        return Element(big, terms)

    return incl


def make_substitution(source, target, images):
    """The algebra map source -> target with prescribed generator images.

    Images must be homogeneous of the generator's degree (degree-preserving),
    so Koszul reordering introduces no extra bookkeeping beyond target
    multiplication.
    """
    for g in source.generators:
        img = images[g.name]
        assert img.algebra is target
        assert img.is_zero() or img.degree() == g.degree, \
            f"image of {g.name} not degree-preserving"

    def subst(elem):
        assert elem.algebra is source
        out = target.zero()
        for mono, c in elem.terms.items():
            term = target.one()
            for i, e in enumerate(mono):
                if e:
                    term = term * images[source.generators[i].name] ** e
            out = out + c * term
        return out

    return subst


def coordinates(algebra, elem, n):
    """Coordinate dict {basis index: coeff} of the degree-n part of elem in
    the canonical monomial basis of degree n."""
    basis = algebra.monomials(n)
    pos = {m: i for i, m in enumerate(basis)}
    out = {}
    for mono, c in elem.terms.items():
        if algebra.degree_of(mono) == n:
            out[pos[mono]] = c
    return out


def element_from_coordinates(algebra, vec, n):
    basis = algebra.monomials(n)
    terms = {}
    if isinstance(vec, dict):
        items = vec.items()
    else:
        items = enumerate(vec)
    for i, c in items:
        if c:
            terms[basis[i]] = Fraction(c)
    return Element(algebra, terms)


def differential_matrix(cdga, n):
    """SparseMatrix of d: degree-n component -> degree-(n+1) component in
    canonical monomial bases (columns = degree-n monomials)."""
    A = cdga.algebra
    dom = A.monomials(n)
    cod = {m: i for i, m in enumerate(A.monomials(n + 1))}
    entries = []
    for j, mono in enumerate(dom):
        img = cdga.d(A.monomial(mono))
        for m, c in img.terms.items():
            entries.append((cod[m], j, c))
    return SparseMatrix(len(cod), len(dom), entries)


def cohomology(cdga, cutoff):
    """Degreewise cohomology of a Cdga up to `cutoff`.

    Returns a list indexed by degree n of (dimension, representative
    cocycles as Elements).  Representatives are kernel vectors chosen
    independent modulo the coboundary span, in deterministic order.
    """
    A = cdga.algebra
    out = []
    prev_images = []  # coboundary rows entering degree n
    for n in range(cutoff + 1):
        basis = A.monomials(n)
        mat = differential_matrix(cdga, n)
        cocycles = kernel_basis(mat)
        bound = Echelon()
        for row in prev_images:
            bound.add(row)
        reps = []
        for v in cocycles:
            row = {i: c for i, c in enumerate(v) if c}
            if bound.add(row):
                reps.append(element_from_coordinates(A, row, n))
        out.append((len(reps), reps))
        # images of degree-n basis monomials, as rows over degree n+1 basis
        cod = {m: i for i, m in enumerate(A.monomials(n + 1))}
        prev_images = []
        for mono in basis:
            img = cdga.d(A.monomial(mono))
            if not img.is_zero():
                prev_images.append({cod[m]: c for m, c in img.terms.items()})
    return out


def free_hilbert_series(degrees_with_parity, cutoff):
    """Hilbert series (coefficient list) of a free gca via the product
    formula: 1/(1-t^d) per even generator, (1+t^d) per odd generator."""
    series = [0] * (cutoff + 1)
    series[0] = 1
    for d, parity in degrees_with_parity:
        if parity % 2:
            new = series[:]
            for i in range(cutoff + 1 - d):
                new[i + d] += series[i]
            series = new
        else:
            # multiply by 1/(1-t^d): prefix-sum with stride d
            for i in range(d, cutoff + 1):
                series[i] += series[i - d]
    return series


def algebra_hilbert_series(algebra, cutoff):
    return free_hilbert_series(
        [(g.degree, g.parity) for g in algebra.generators], cutoff)
