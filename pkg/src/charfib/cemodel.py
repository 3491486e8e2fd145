"""Chevalley-Eilenberg cochain algebras and relative Sullivan models.

The cochain algebra of a finite dg Lie algebra L has one free generator per
basis element (in cohomological degree = homological degree + 1); its
differential is the dual of the chain-level map d_0 + d_1 on suspended wedge
words of length <= 2, computed degreewise: the linear part dualizes
d_0(s x) = -s(delta x) and the quadratic part dualizes
d_1(s x ^ s y) = (-1)^{|s x|} s[x, y], with the pairing normalization 1/2 on
diagonal words s x ^ s x.  No closed sign formula is trusted on its own:
d^2 = 0 is asserted at construction, and every characteristic cochain built
downstream is asserted to be a cocycle.

The relative model couples the cochain algebra of the twisted-truncated Lie
algebra (with provenance) to the fiber cdga Lambda: the total algebra is
generated by both, base generators keep the cochain differential, and a fiber
generator w gets d(w) = d_Lambda(w) + sum_s u_s * (theta_s . w), where
theta_s is the derivation part of basis vector s (tensor components act
trivially on Lambda).  Characteristic cochains of the total bundle are then
read off the tensor components of the provenance.
"""

from fractions import Fraction

from .gca import (Cdga, Derivation, Element, FreeGCA, Generator,
                  cohomology, make_inclusion, make_substitution)
from .presentations import QuotientAmbient


class CeAlgebra:
    """Cochain algebra of a dg Lie algebra.

    cdga: the underlying free cdga; lie: the origin DgLie; gen_names[i] is
    the generator dual to lie basis element i.
    """

    def __init__(self, cdga, lie, gen_names):
        self.cdga = cdga
        self.lie = lie
        self.gen_names = list(gen_names)
        self.dual_index = {n: i for i, n in enumerate(gen_names)}


def ce_algebra(lie, names=None):
    """Chevalley-Eilenberg cochain algebra of a non-negatively graded DgLie.

    names: optional {lie basis name: generator name}; defaults to the basis
    names themselves.
    """
    assert all(d >= 0 for d in lie.degrees), \
        "cochain algebra requires non-negative homological degrees"
    gen_names = []
    for name, d in lie.basis:
        gen_names.append((names or {}).get(name, name))
    gens = [Generator(gen_names[i], lie.degrees[i] + 1, tag=("dual", lie.basis[i][0]))
            for i in range(lie.dim)]
    A = FreeGCA(gens)

    def u(i):
        return A.gen(gen_names[i])

    images = {g: A.zero() for g in gen_names}
    # dual of d_0: the coefficient of u_alpha in d(u_gamma) is
    # -delta(b_alpha)[gamma]
    for a in range(lie.dim):
        for g, c in lie.diff.get(a, {}).items():
            images[gen_names[g]] = images[gen_names[g]] - c * u(a)
    # dual of d_1 on wedge words s_a ^ s_b (a <= b): coefficient of
    # u_a u_b is (-1)^{|s_a|} [b_a, b_b][gamma], halved on the diagonal
    for a in range(lie.dim):
        for b in range(a, lie.dim):
            br = lie.bracket_basis(a, b)
            if not br:
                continue
            sign = (-1) ** ((lie.degrees[a] + 1) % 2)
            word = u(a) * u(b)
            if word.is_zero():
                continue
            scale = Fraction(sign) * (Fraction(1, 2) if a == b else 1)
            for g, c in br.items():
                images[gen_names[g]] = images[gen_names[g]] + scale * c * word
    d = Derivation(A, 1, {g: e for g, e in images.items() if not e.is_zero()})
    return CeAlgebra(Cdga(A, d), lie, gen_names)


class RelativeModel:
    """Relative Sullivan model of the universal fibration with fixed
    fiberwise bundle.

    base: CeAlgebra of the twisted-truncated Lie algebra; total: Cdga on
    base generators followed by fiber generators; lam: the fiber cdga;
    model: the finite-dimensional fiber model used for tensor provenance;
    xi_classes: {class name: Element of lam} for the fixed bundle.
    """

    def __init__(self, base, total, lam, model, xi_classes):
        self.base = base
        self.total = total
        self.lam = lam
        self.model = model
        self.xi_classes = dict(xi_classes)
        self.include_base = make_inclusion(base.cdga.algebra, total.algebra)
        self.include_fiber = make_inclusion(lam.algebra, total.algebra)

    def fiber_restriction(self, elem):
        """The algebra map killing all base generators (restrict to the
        fiber)."""
        T = self.total.algebra
        images = {}
        for g in self.base.cdga.algebra.generators:
            images[g.name] = self.lam.algebra.zero()
        for g in self.lam.algebra.generators:
            images[g.name] = self.lam.algebra.gen(g.name)
        return make_substitution(T, self.lam.algebra, images)(elem)


def relative_model(lxi, action, model, xi_classes, names=None):
    """Build the relative model C*(l_xi; Lambda) as a single cdga.

    lxi must carry provenance from the twist-truncate construction: entries
    are lists of (coeff, ('h', name) | ('t', model index, class name)).
    action gives the derivations of the 'h' part on Lambda; model is the
    finite-dimensional fiber model; xi_classes names the characteristic
    classes of the fixed bundle.  Raises if d^2 != 0, naming the failing
    generator (via the cdga constructor).
    """
    base = ce_algebra(lxi, names)
    lam = action.cdga
    assert model.cdga is lam
    total_gens = [Generator(g.name, g.degree, g.tag)
                  for g in base.cdga.algebra.generators]
    for g in lam.algebra.generators:
        assert g.name not in {t.name for t in total_gens}, \
            f"fiber generator {g.name} collides with a base generator"
        total_gens.append(Generator(g.name, g.degree, ("fiber", g.name)))
    T = FreeGCA(total_gens)
    lift_base = make_inclusion(base.cdga.algebra, T)
    lift_fiber = make_inclusion(lam.algebra, T)

    # derivation part theta_s of each lie basis vector, from provenance
    def theta(s, w):
        out = lam.algebra.zero()
        for c, payload in lxi.provenance.get(s, []):
            if payload[0] == "h":
                i = action.lie.index[payload[1]]
                out = out + c * action.derivation(i)(w)
        return out

    images = {}
    for g in base.cdga.algebra.generators:
        img = base.cdga.d.image_of(g.name)
        if not img.is_zero():
            images[g.name] = lift_base(img)
    for g in lam.algebra.generators:
        w = lam.algebra.gen(g.name)
        img = lift_fiber(lam.d(w))
        for s in range(lxi.dim):
            tw = theta(s, w)
            if not tw.is_zero():
                u_s = T.gen(base.gen_names[s])
                img = img + u_s * lift_fiber(tw)
        if not img.is_zero():
            images[g.name] = img
    total = Cdga(T, Derivation(T, 1, images))
    return RelativeModel(base, total, lam, model, xi_classes)


def characteristic_cochains(rm):
    """Characteristic cochains of the total bundle: for each class name c of
    the fixed bundle, the cocycle c(zeta) = iota(c(xi)) + sum of
    u_s * (fiber model element) over tensor components of the provenance.

    Each result is asserted to be a cocycle whose fiber restriction is the
    input class; returns {name: total Element}.
    """
    T = rm.total.algebra
    out = {}
    for cname, xi_elem in rm.xi_classes.items():
        val = rm.include_fiber(xi_elem)
        for s in range(rm.base.lie.dim):
            for c, payload in rm.base.lie.provenance.get(s, []):
                if payload[0] == "t" and payload[2] == cname:
                    u_s = T.gen(rm.base.gen_names[s])
                    val = val + c * u_s * rm.include_fiber(
                        rm.model.elements[payload[1]])
        dv = rm.total.d(val)
        assert dv.is_zero(), \
            f"characteristic cochain for {cname} is not a cocycle: d -> {dv}"
        assert rm.fiber_restriction(val) == xi_elem, \
            f"fiber restriction of {cname} does not recover the input class"
        out[cname] = val
    return out


class QuotientModel:
    """A quotient of a cdga by contractible pairs: the designated odd
    generators are dropped and their differentials imposed as relations; the
    differential of the quotient is zero.

    ambient: free algebra on the surviving generators; relations: the
    imposed relation elements; quotient: coordinate system on the quotient
    ring; project: the algebra map from the original total algebra.
    """

    def __init__(self, ambient, relations, project, verified_cutoff=None):
        self.ambient = ambient
        self.relations = list(relations)
        self.quotient = QuotientAmbient(ambient, self.relations)
        self.project = project
        self.verified_cutoff = verified_cutoff


def simplify_total(total, eliminate=None, cutoff=None):
    """Eliminate contractible pairs (y, dy): drop each listed odd generator
    and impose its differential as a relation.

    With no generators listed the model is returned unchanged.  Each dy must
    not involve any eliminated generator, and every surviving generator must
    have zero differential (the quotient carries none).  If `cutoff` is
    given, the projection is verified to be a quasi-isomorphism degreewise:
    equal cohomology dimensions and surjectivity of projected cocycle
    classes (the projection is an algebra map, so this gives a ring
    isomorphism on cohomology).
    """
    if not eliminate:
        return total
    eliminate = list(eliminate)
    A = total.algebra
    for name in eliminate:
        g = A.generators[A.index[name]]
        assert g.degree % 2 == 1, f"{name} is not an odd generator"
    keep = [g for g in A.generators if g.name not in eliminate]
    amb = FreeGCA([Generator(g.name, g.degree, g.tag) for g in keep])
    images = {g.name: (amb.zero() if g.name in eliminate else amb.gen(g.name))
              for g in A.generators}
    project = make_substitution(A, amb, images)
    relations = []
    for name in eliminate:
        dy = total.d(A.gen(name))
        for mono in dy.terms:
            for other in eliminate:
                assert mono[A.index[other]] == 0, \
                    f"d{name} involves eliminated generator {other}"
        relations.append(project(dy))
    for g in keep:
        assert total.d(A.gen(g.name)).is_zero(), \
            f"surviving generator {g.name} has nonzero differential"
    qm = QuotientModel(amb, relations, project)
    if cutoff is not None:
        _verify_quotient(total, qm, cutoff)
        qm.verified_cutoff = cutoff
    return qm


def _verify_quotient(total, qm, cutoff):
    from .linalg import Echelon
    coh = cohomology(total, cutoff)
    for n in range(cutoff + 1):
        dim_h, reps = coh[n]
        dim_q = qm.quotient.dimension(n)
        assert dim_h == dim_q, \
            f"cohomology dimension {dim_h} != quotient dimension {dim_q} " \
            f"in degree {n}"
        ech = Echelon()
        rank = 0
        for rep in reps:
            vec = qm.quotient.coords(qm.project(rep), n)
            if ech.add(vec):
                rank += 1
        assert rank == dim_q, \
            f"projected cocycles do not span the quotient in degree {n}"
