"""Degreewise ring presentations: subrings, invariant rings, quotients.

Everything here follows the degreewise linear-algebra strategy: all rings are
non-negatively graded with finite-dimensional components, so relation ideals,
quotient bases, Hilbert series and ideal membership up to a degree cutoff are
exact matrix computations -- no Groebner bases anywhere.

Ambient rings are abstracted by a tiny protocol (dimension / coords /
multiply) with three realizations:

* FreeAmbient       -- a free gca, coordinates in the monomial basis;
* QuotientAmbient   -- a free gca modulo a finite relation list, coordinates
                       over representative monomials picked degreewise;
* CohomologyAmbient -- the cohomology of a Cdga, coordinates over chosen
                       cocycle representatives modulo coboundaries.
"""

from fractions import Fraction

from .gca import (Cdga, Element, FreeGCA, Generator, algebra_hilbert_series,
                  coordinates, element_from_coordinates, free_hilbert_series)
from .linalg import Echelon, SparseMatrix, solve


class RingPresentation:
    """Generators + relations + Hilbert series of a (sub)ring up to cutoff.

    generators: list of (name, degree, defining Element of the ambient ring);
    relations:  Elements of the free gca on the generator names;
    hilbert:    dimensions of the image ring, degrees 0..cutoff;
    ambient_hilbert: dimensions of the ambient ring, for equality reports.
    """

    def __init__(self, generators, relations, cutoff, hilbert,
                 ambient_hilbert=None, free_algebra=None):
        self.generators = list(generators)
        self.relations = list(relations)
        self.cutoff = cutoff
        self.hilbert = list(hilbert)
        self.ambient_hilbert = list(ambient_hilbert) if ambient_hilbert else None
        self.free_algebra = free_algebra

    @property
    def is_free(self):
        return not self.relations

    @property
    def equals_ambient(self):
        if self.ambient_hilbert is None:
            return None
        return self.hilbert == self.ambient_hilbert

    def describe(self):
        lines = []
        for name, deg, _ in self.generators:
            lines.append(f"generator {name} degree {deg}")
        for r in self.relations:
            lines.append(f"relation {r} (degree {r.degree()})")
        return "\n".join(lines)


class FreeAmbient:
    """A free gca viewed through the ambient-ring protocol."""

    def __init__(self, algebra):
        self.algebra = algebra

    def dimension(self, n):
        return len(self.algebra.monomials(n))

    def coords(self, elem, n):
        return coordinates(self.algebra, elem, n)

    def multiply(self, a, b):
        return a * b

    def one(self):
        return self.algebra.one()

    def hilbert(self, cutoff):
        return algebra_hilbert_series(self.algebra, cutoff)


class QuotientAmbient:
    """A free gca modulo a finite list of homogeneous relations.

    Degreewise, the ideal component is the span of relation multiples; the
    quotient basis is the set of monomials at non-pivot columns of that
    span's echelon form.  coords() reduces an element's monomial vector and
    reads off the surviving coordinates.
    """

    def __init__(self, algebra, relations):
        self.algebra = algebra
        self.relations = [r for r in relations if not r.is_zero()]
        for r in self.relations:
            assert r.is_homogeneous() and r.degree() > 0
        self._cache = {}

    def _ideal_echelon(self, n):
        if n in self._cache:
            return self._cache[n]
        A = self.algebra
        ech = Echelon()
        for r in self.relations:
            d = r.degree()
            if d > n:
                continue
            for mono in A.monomials(n - d):
                prod = A.monomial(mono) * r
                row = coordinates(A, prod, n)
                if row:
                    ech.add(row)
        free_cols = [i for i in range(len(A.monomials(n)))
                     if i not in ech.pivots]
        self._cache[n] = (ech, free_cols)
        return self._cache[n]

    def dimension(self, n):
        return len(self._ideal_echelon(n)[1])

    def coords(self, elem, n):
        ech, free_cols = self._ideal_echelon(n)
        vec = coordinates(self.algebra, elem, n)
        pos = {c: i for i, c in enumerate(free_cols)}
        red_exact = _exact_reduce(ech, vec)
        return {pos[c]: v for c, v in red_exact.items()}

    def multiply(self, a, b):
        return a * b

    def one(self):
        return self.algebra.one()

    def hilbert(self, cutoff):
        return [self.dimension(n) for n in range(cutoff + 1)]


def _exact_reduce(ech, vec):
    """Reduce a {col: Fraction} row against an Echelon, keeping exact scale."""
    row = {c: Fraction(v) for c, v in vec.items() if v}
    for pc in sorted(ech.pivots):
        if pc in row:
            prow = ech.pivots[pc]
            f = row[pc] / prow[pc]
            for c, v in prow.items():
                w = row.get(c, Fraction(0)) - f * v
                if w:
                    row[c] = w
                elif c in row:
                    del row[c]
    # one pass suffices: echelon rows are fully back-reduced
    return row


class CohomologyAmbient:
    """Cohomology of a Cdga as an ambient graded ring.

    Products of representatives are reduced modulo coboundaries back into
    representative coordinates; elements handed to coords() must be cocycles.
    """

    def __init__(self, cdga, cutoff):
        from .gca import cohomology
        self.cdga = cdga
        self.cutoff = cutoff
        self._H = cohomology(cdga, cutoff)
        self._bound_cache = {}

    def representatives(self, n):
        return self._H[n][1]

    def dimension(self, n):
        return self._H[n][0]

    def _coboundary_rows(self, n):
        if n in self._bound_cache:
            return self._bound_cache[n]
        A = self.cdga.algebra
        rows = []
        if n >= 1:
            for mono in A.monomials(n - 1):
                img = self.cdga.d(A.monomial(mono))
                if not img.is_zero():
                    rows.append(coordinates(A, img, n))
        self._bound_cache[n] = rows
        return rows

    def coords(self, elem, n):
        """Coordinates of a cocycle's class over the chosen representatives."""
        A = self.cdga.algebra
        assert n <= self.cutoff
        d_elem = self.cdga.d(elem)
        assert d_elem.is_zero(), "coords() requires a cocycle"
        reps = self.representatives(n)
        bounds = self._coboundary_rows(n)
        dim_comp = len(A.monomials(n))
        cols = []  # columns: reps then coboundaries
        for r in reps:
            cols.append(coordinates(A, r, n))
        for b in bounds:
            cols.append(b)
        entries = []
        for j, col in enumerate(cols):
            for i, v in col.items():
                entries.append((i, j, v))
        mat = SparseMatrix(dim_comp, len(cols), entries)
        target = [Fraction(0)] * dim_comp
        for i, v in coordinates(A, elem, n).items():
            target[i] = v
        x = solve(mat, target)
        assert x is not None, "cocycle not expressible: inconsistent ambient"
        return {i: x[i] for i in range(len(reps)) if x[i]}

    def multiply(self, a, b):
        return a * b

    def one(self):
        return self.cdga.algebra.one()

    def hilbert(self, cutoff):
        assert cutoff <= self.cutoff
        return [self._H[n][0] for n in range(cutoff + 1)]


def _presentation_algebra(named_gens):
    """Free gca on presentation symbols, ordered by (degree, name)."""
    order = sorted(named_gens, key=lambda ng: (ng[1].degree(), ng[0]))
    return FreeGCA([Generator(name, elem.degree()) for name, elem in order]), order


def subring_presentation(ambient, gens, cutoff):
    """Present the subring generated by named ambient elements.

    gens: list of (name, homogeneous positive-degree Element).  Relations are
    found per degree n <= cutoff as the kernel of the evaluation map
    (monomials in the generators -> ambient component), keeping only
    relations not in the ideal generated by lower-degree ones.
    """
    for name, elem in gens:
        assert elem.is_homogeneous() and not elem.is_zero(), \
            f"generator {name} must be homogeneous and nonzero"
        assert elem.degree() > 0, f"generator {name} must have positive degree"
    P, order = _presentation_algebra(gens)
    value = {name: elem for name, elem in gens}
    # incremental evaluation cache: P-monomial -> ambient element
    eval_cache = {(0,) * P.ngens: ambient.one()}

    def evaluate(mono):
        if mono in eval_cache:
            return eval_cache[mono]
        i = next(j for j, e in enumerate(mono) if e)
        rest = list(mono)
        rest[i] -= 1
        prev = evaluate(tuple(rest))
        out = ambient.multiply(value[P.generators[i].name], prev)
        eval_cache[mono] = out
        return out

    relations = []
    image_dims = [1] + [0] * cutoff
    for n in range(1, cutoff + 1):
        pmonos = P.monomials(n)
        if not pmonos:
            continue
        amb_dim = ambient.dimension(n)
        entries = []
        for j, mono in enumerate(pmonos):
            for i, v in ambient.coords(evaluate(mono), n).items():
                entries.append((i, j, v))
        mat = SparseMatrix(amb_dim, len(pmonos), entries)
        from .linalg import kernel_basis
        kb = kernel_basis(mat)
        image_dims[n] = len(pmonos) - len(kb)
        if not kb:
            continue
        # span of (lower relations) * (monomials) inside degree-n component
        known = Echelon()
        for r in relations:
            dr = r.degree()
            for mono in P.monomials(n - dr):
                prod = P.monomial(mono) * r
                row = coordinates(P, prod, n)
                if row:
                    known.add(row)
        pos = {m: i for i, m in enumerate(pmonos)}
        for v in kb:
            row = {i: c for i, c in enumerate(v) if c}
            if known.add(row):
                relations.append(element_from_coordinates(P, row, n))
    return RingPresentation(
        generators=[(name, elem.degree(), elem) for name, elem in
                    [(g.name, value[g.name]) for g in P.generators]],
        relations=relations,
        cutoff=cutoff,
        hilbert=image_dims,
        ambient_hilbert=ambient.hilbert(cutoff),
        free_algebra=P)


def invariant_subring(algebra, signs, cutoff):
    """Fixed subring of a free gca under a diagonal +-1 involution.

    signs: {generator name: +1 | -1}.  Minimal generators are the fixed
    monomials not expressible as a product of two positive-degree fixed
    monomials; relations come from subring_presentation on those monomials.
    """
    for g in algebra.generators:
        s = signs.get(g.name, 1)
        if s not in (1, -1):
            raise ValueError(f"sign of {g.name} must be +-1, got {s}")

    def is_fixed(mono):
        neg = sum(e for i, e in enumerate(mono)
                  if signs.get(algebra.generators[i].name, 1) == -1)
        return neg % 2 == 0

    fixed = {n: [m for m in algebra.monomials(n) if is_fixed(m)]
             for n in range(cutoff + 1)}
    decomposable = set()
    for n in range(2, cutoff + 1):
        for d in range(1, n // 2 + 1):
            for m1 in fixed[d]:
                for m2 in fixed[n - d]:
                    res = algebra.mul_monomials(m1, m2)
                    if res is not None:
                        decomposable.add(res[1])
    gens = []
    for n in range(1, cutoff + 1):
        for m in fixed[n]:
            if m not in decomposable:
                gens.append((_monomial_name(algebra, m), algebra.monomial(m)))
    pres = subring_presentation(FreeAmbient(algebra), gens, cutoff)
    # the image dims must equal the fixed-monomial counts (sanity)
    assert pres.hilbert == [len(fixed[n]) for n in range(cutoff + 1)]
    return pres


def _monomial_name(algebra, mono):
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(algebra.generators[i].name)
        elif e > 1:
            parts.append(f"{algebra.generators[i].name}^{e}")
    return "*".join(parts) if parts else "1"


def is_regular_sequence(ambient, elems, cutoff):
    """Hilbert-series test for a regular sequence in a graded ambient ring.

    Returns (is_regular, quotient_series).  The quotient series is computed
    degreewise (ambient component modulo the span of element multiples) and
    compared with ambient_series * prod (1 - t^{|e_i|}).
    """
    degs = []
    for e in elems:
        assert e.is_homogeneous() and not e.is_zero() and e.degree() > 0
        degs.append(e.degree())
    quotient = []
    for n in range(cutoff + 1):
        ech = Echelon()
        for e in elems:
            d = e.degree()
            if d > n:
                continue
            for mono in _ambient_basis_monomials(ambient, n - d):
                prod = ambient.multiply(mono, e)
                row = ambient.coords(prod, n)
                if row:
                    ech.add(row)
        quotient.append(ambient.dimension(n) - ech.rank)
    expected = list(ambient.hilbert(cutoff))
    for d in degs:
        new = expected[:]
        for i in range(d, cutoff + 1):
            new[i] -= expected[i - d]
        expected = new
    return quotient == expected, quotient


def _ambient_basis_monomials(ambient, n):
    """Elements spanning the ambient degree-n component (for ideal spans)."""
    if isinstance(ambient, FreeAmbient):
        return [ambient.algebra.monomial(m) for m in ambient.algebra.monomials(n)]
    if isinstance(ambient, QuotientAmbient):
        ech, free_cols = ambient._ideal_echelon(n)
        basis = ambient.algebra.monomials(n)
        return [ambient.algebra.monomial(basis[c]) for c in free_cols]
    if isinstance(ambient, CohomologyAmbient):
        return list(ambient.representatives(n))
    raise TypeError(f"unsupported ambient {type(ambient)}")


def ideal_membership(ambient, ideal_gens, elem, n=None):
    """Degreewise test: is elem in the ideal generated by ideal_gens?"""
    if elem.is_zero():
        return True
    n = elem.degree() if n is None else n
    ech = Echelon()
    for g in ideal_gens:
        d = g.degree()
        if d > n:
            continue
        for mono in _ambient_basis_monomials(ambient, n - d):
            prod = ambient.multiply(mono, g)
            row = ambient.coords(prod, n)
            if row:
                ech.add(row)
    return ech.contains(ambient.coords(elem, n))


def free_generating_certificate(algebra, gens):
    """Graded-Nakayama certificate that named elements freely generate.

    gens: list of (name, Element) in a *free* ambient gca.  If, in every
    degree, the candidates of that degree are as numerous as the ambient
    generators and their linear parts span the ambient generator space, the
    algebra map Q[gens] -> ambient is an isomorphism: surjectivity follows
    degree by degree (each ambient generator is a candidate plus
    decomposables), and freeness follows because both sides then have the
    Hilbert series of a free gca on the same degree multiset.

    Returns (ok, common_hilbert_degrees) where the second entry is the sorted
    generator degree list certified to present the ring.
    """
    by_degree = {}
    for name, elem in gens:
        assert elem.is_homogeneous() and not elem.is_zero()
        by_degree.setdefault(elem.degree(), []).append(elem)
    amb_by_degree = {}
    for i, g in enumerate(algebra.generators):
        amb_by_degree.setdefault(g.degree, []).append(i)
    if sorted(d for d, es in by_degree.items() for _ in es) != \
            sorted(g.degree for g in algebra.generators):
        return False, None
    for d, elems in by_degree.items():
        rows = []
        gen_indices = amb_by_degree.get(d, [])
        if len(gen_indices) != len(elems):
            return False, None
        ech = Echelon()
        count = 0
        for e in elems:
            row = {}
            for mono, c in e.terms.items():
                if sum(mono) == 1:
                    i = next(j for j, ex in enumerate(mono) if ex)
                    row[i] = c
            if ech.add(row):
                count += 1
        if count != len(gen_indices):
            return False, None
    return True, sorted(g.degree for g in algebra.generators)
