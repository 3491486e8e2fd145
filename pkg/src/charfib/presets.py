"""End-to-end pipelines for the bundled fibration models.

Each constructor assembles the full chain for one family of fibers:

    holonomy dg Lie algebra h acting on the fiber cdga Lambda
      -> twisted-truncated dg Lie algebra l^xi (with Maurer-Cartan twist
         from the characteristic classes of the fixed bundle)
      -> Chevalley-Eilenberg base + relative Sullivan model
      -> characteristic cochains of the total bundle
      -> simplified quotient model and fibered model with pushforward.

The families are even-dimensional spheres (structure group SO(2k)),
odd-dimensional spheres (SO(2k+1), optionally with Hirzebruch L-class
generators), and complex projective spaces with a complex-tangent, real-
tangent or trivial fixed bundle.  The CP^2 model with trivialized Euler
difference is derived from the real-tangent one by substitution.

The holonomy algebras are the small abelian subalgebras that carry the
homology of the full positive derivation algebra Der Lambda<1>; the function
`check_holonomy` certifies the quasi-isomorphism by machine.
"""

from fractions import Fraction
from math import comb

from .cemodel import (QuotientModel, characteristic_cochains, relative_model,
                      simplify_total)
from .dgla import (AlgebraModel, DgLie, LieAction, build_l_xi,
                   derivation_dgla, sub_dgla_inclusion_quasi_iso)
from .fibered import FiberedModel, a_classes, coupling_class, fiberwise_classes
from .gca import Cdga, Derivation, Element, FreeGCA, make_substitution


class Pipeline:
    """The assembled data of one universal-fibration model.

    label: short identifier; lam: fiber cdga; holonomy/action/model/pi/xi:
    inputs of the construction; lxi: twisted-truncated Lie algebra; rm:
    relative Sullivan model; cochains: {class name: total Element}; qm:
    quotient model with the fiber generator adjoined (None when nothing was
    eliminated); fm: fibered model with pushforward and class table; omega:
    coupling class in fm; a_list: a-classes (even fiber generator only);
    involution: {base generator name: +-1} for the conjugation action, or
    None when there is none; extras: family-specific data.
    """

    def __init__(self, label, lam, holonomy, action, model, pi, xi,
                 lxi, rm, cochains, qm, fm, omega=None, a_list=None,
                 involution=None, extras=None):
        self.label = label
        self.lam = lam
        self.holonomy = holonomy
        self.action = action
        self.model = model
        self.pi = pi
        self.xi = xi
        self.lxi = lxi
        self.rm = rm
        self.cochains = cochains
        self.qm = qm
        self.fm = fm
        self.omega = omega
        self.a_list = a_list
        self.involution = involution
        self.extras = dict(extras or {})

    @property
    def base_algebra(self):
        return self.rm.base.cdga.algebra

    def kappa(self, expr):
        return self.fm.kappa(expr)


def r_index(k):
    """Smallest i with 4i > 2k + 1: tensor vectors x (x) q_i survive the
    truncation at 0 exactly for i >= r."""
    i = 1
    while 4 * i <= 2 * k + 1:
        i += 1
    return i


def _fibered_from_quotient(qm, base, x_name, top, cochains, rank):
    """Build a FiberedModel from a quotient model whose ambient algebra is
    base generators followed by the fiber generator x, with a single monic
    relation in x of degree top+1 (or no relation for odd x)."""
    amb = qm.ambient
    assert amb.generators[-1].name == x_name
    x_degree = amb.generators[-1].degree
    relation = {}
    if qm.relations:
        assert len(qm.relations) == 1
        rel = qm.relations[0]
        xi = amb.index[x_name]
        lead = None
        lower = {}
        for mono, c in rel.terms.items():
            j = mono[xi]
            bmono = mono[:xi] + mono[xi + 1:]
            if j == top + 1:
                assert sum(bmono) == 0 and c == 1, "relation must be monic"
                lead = c
            else:
                assert j <= top
                cur = lower.setdefault(j, {})
                cur[bmono] = cur.get(bmono, Fraction(0)) + c
        assert lead == 1, "relation has no monic top term"
        relation = {j: -Element(base, t) for j, t in lower.items()}
    fm = FiberedModel(base, x_name, x_degree, top, relation=relation,
                      rank=rank)
    for cname, elem in cochains.items():
        fm.classes[cname] = fm.from_mixed(qm.project(elem))
    return fm


# ---------------------------------------------------------------------------
# spheres
# ---------------------------------------------------------------------------

def even_sphere(k):
    """Universal tau-fibration data for S^{2k} with structure group SO(2k).

    Base ring Q[a, p_1..p_{k-1}, e, p_rx..p_{k-1}x]; dy = x^2 + a in the
    relative model; class table p_i(zeta) = p_i (+ p_ix x for i >= r) and
    e(zeta) = e + 2x.
    """
    assert k >= 1
    A = FreeGCA([("x", 2 * k), ("y", 4 * k - 1)])
    lam = Cdga(A, Derivation(A, 1, {"y": A.gen("x") ** 2}))
    h = DgLie([("ty", 4 * k - 1)])
    action = LieAction(h, lam, {("ty", "y"): A.one()})
    assert action.validate() is None
    model = AlgebraModel(lam, [A.one(), A.gen("x")], names=["1", "x"])
    pi = DgLie([(f"p{i}", 4 * i - 1) for i in range(1, k)]
               + [("e", 2 * k - 1)])
    xi = {f"p{i}": A.zero() for i in range(1, k)}
    xi["e"] = 2 * A.gen("x")
    lxi = build_l_xi(action, model, pi, xi)
    r = r_index(k)
    names = {"ty": "a"}
    for i in range(r, k):
        names[f"p{i}@x"] = f"p{i}x"
    rm = relative_model(lxi, action, model, xi, names=names)
    cochains = characteristic_cochains(rm)
    qm = simplify_total(rm.total, eliminate=["y"])
    base = FreeGCA([(g.name, g.degree)
                    for g in rm.base.cdga.algebra.generators])
    fm = _fibered_from_quotient(qm, base, "x", 1, cochains, rank=2 * k)
    return Pipeline(f"s-even-{2 * k}", lam, h, action, model, pi, xi,
                    lxi, rm, cochains, qm, fm,
                    extras={"k": k, "r": r, "fiber_dim": 2 * k})


def odd_sphere(k, style="p"):
    """Universal tau-fibration data for S^{2k+1} with structure group
    SO(2k+1).

    style "p" uses Pontryagin-class generator names p_i, style "L" the
    Hirzebruch L-class names L_i (the construction is identical; only the
    polynomial generators of H^*(BSO(2k+1)) differ).  Base ring
    Lambda(c_1..c_k, c_rx..c_kx, z) with dc_i = c_ix z; the relative model
    adjoins an exterior x with dx = z.  Class table c_i(zeta) = c_i + c_ix x.
    The extras carry the Kaehler-differential reading: the algebra Omega on
    c_*, c_*x and the derivation D with D(c_i) = c_ix, so that
    kappa_c = D(c).
    """
    assert k >= 1 and style in ("p", "L")
    g = "p" if style == "p" else "L"
    A = FreeGCA([("x", 2 * k + 1)])
    lam = Cdga.with_zero_differential(A)
    h = DgLie([("tx", 2 * k + 1)])
    action = LieAction(h, lam, {("tx", "x"): A.one()})
    assert action.validate() is None
    model = AlgebraModel(lam, [A.one(), A.gen("x")], names=["1", "x"])
    pi = DgLie([(f"{g}{i}", 4 * i - 1) for i in range(1, k + 1)])
    xi = {f"{g}{i}": A.zero() for i in range(1, k + 1)}
    lxi = build_l_xi(action, model, pi, xi)
    r = r_index(k)
    names = {"tx": "z"}
    for i in range(r, k + 1):
        names[f"{g}{i}@x"] = f"{g}{i}x"
    rm = relative_model(lxi, action, model, xi, names=names)
    cochains = characteristic_cochains(rm)
    base = FreeGCA([(gen.name, gen.degree)
                    for gen in rm.base.cdga.algebra.generators])
    # the total needs no simplification; wrap it for the fibered model
    wrapper = QuotientModel(rm.total.algebra, [], lambda e: e)
    fm = _fibered_from_quotient(wrapper, base, "x", 1, cochains,
                                rank=2 * k + 1)
    omega_alg = FreeGCA(
        [(f"{g}{i}", 4 * i) for i in range(1, k + 1)]
        + [(f"{g}{i}x", 4 * i - 2 * k - 1) for i in range(r, k + 1)])
    D = Derivation(omega_alg, -(2 * k + 1),
                   {f"{g}{i}": omega_alg.gen(f"{g}{i}x")
                    for i in range(r, k + 1)})
    return Pipeline(f"s-odd-{2 * k + 1}", lam, h, action, model, pi, xi,
                    lxi, rm, cochains, None, fm,
                    extras={"k": k, "r": r, "fiber_dim": 2 * k + 1,
                            "style": g, "omega_algebra": omega_alg, "D": D})


def odd_sphere_kill_model(k):
    """The cdga obtained from the L-class model of S^{2k+1} by adjoining
    generators M_i with dM_i = L_ix, killing the kappa-classes of the
    L-classes.

    For indices where the new generator would land in degree zero (4i =
    2k+2) the contractible pair (M_i, L_ix) is removed instead: the cdga
    splits off that pair as a tensor factor after the change of basis
    L_i -> L_i - M_i z, so dropping both and setting dL_i = 0 preserves
    cohomology.  Returns (cdga, expected) where expected maps generator
    names of the free cohomology ring to representing cocycles:
    z, L_1..L_{r-1}, and L_i - M_i z (or plain L_i) for i >= r.
    """
    assert k >= 1
    r = r_index(k)
    kept = [i for i in range(r, k + 1) if 4 * i - 2 * k - 2 > 0]
    dropped = [i for i in range(r, k + 1) if 4 * i - 2 * k - 2 == 0]
    gens = [(f"L{i}", 4 * i) for i in range(1, k + 1)]
    gens += [(f"L{i}x", 4 * i - 2 * k - 1) for i in kept]
    gens += [("z", 2 * k + 2)]
    gens += [(f"M{i}", 4 * i - 2 * k - 2) for i in kept]
    A = FreeGCA(gens)
    images = {}
    for i in kept:
        images[f"L{i}"] = A.gen(f"L{i}x") * A.gen("z")
        images[f"M{i}"] = A.gen(f"L{i}x")
    cdga = Cdga(A, Derivation(A, 1, images))
    expected = {"z": A.gen("z")}
    for i in range(1, r):
        expected[f"L{i}"] = A.gen(f"L{i}")
    for i in dropped:
        expected[f"L{i}"] = A.gen(f"L{i}")
    for i in kept:
        expected[f"L{i}"] = A.gen(f"L{i}") - A.gen(f"M{i}") * A.gen("z")
    return cdga, expected


# ---------------------------------------------------------------------------
# complex projective spaces
# ---------------------------------------------------------------------------

def _cpn_classes(n, bundle):
    """Characteristic-class data (name, degree, class as polynomial in the
    degree-2 generator) for the fixed bundle over CP^n."""
    if bundle == "point":
        return []
    if bundle == "complex":
        # Chern classes of the complex tangent bundle: c(tau) = (1+w)^{n+1}
        return [(f"c{i}", 2 * i, comb(n + 1, i)) for i in range(1, n + 1)]
    if bundle == "real":
        # Pontryagin classes and Euler class of the underlying real bundle
        out = [(f"p{i}", 4 * i, comb(n + 1, i)) for i in range(1, n)]
        out.append(("e", 2 * n, n + 1))
        return out
    raise ValueError(f"unknown bundle {bundle!r}")


def cpn(n, bundle="complex"):
    """Universal xi-fibration data for CP^n.

    bundle: "complex" (complex tangent bundle, Chern classes), "real"
    (underlying oriented bundle, Pontryagin + Euler classes) or "point"
    (no bundle: plain orientable CP^n-fibrations).

    Base ring Q[a_2..a_{n+1}, <class>_j]; the relative model has
    d(y) = x^{n+1} + sum_l a_{n+1-l} x^l and the fibered model is the free
    module on 1, x, .., x^n with x representing the coupling class; the
    a-class a_k is the CE dual of the holonomy derivation x^{n+1-k} d/dy.
    """
    assert n >= 1
    A = FreeGCA([("x", 2), ("y", 2 * n + 1)])
    lam = Cdga(A, Derivation(A, 1, {"y": A.gen("x") ** (n + 1)}))
    x = A.gen("x")
    h = DgLie([(f"a{n + 1 - l}", 2 * n + 1 - 2 * l) for l in range(n)])
    action = LieAction(h, lam,
                       {(f"a{n + 1 - l}", "y"): x ** l for l in range(n)})
    assert action.validate() is None
    model = AlgebraModel(lam, [x ** j for j in range(n + 1)],
                         names=["1"] + [f"w{j}" for j in range(1, n + 1)])
    classes = _cpn_classes(n, bundle)
    pi = DgLie([(name, deg - 1) for name, deg, _ in classes])
    xi = {name: coeff * x ** (deg // 2) for name, deg, coeff in classes}
    lxi = build_l_xi(action, model, pi, xi)
    names = {}
    for name, deg, _ in classes:
        names[name] = f"{name}_0"
        for j in range(1, min(deg // 2, n + 1)):
            names[f"{name}@w{j}"] = f"{name}_{j}"
    rm = relative_model(lxi, action, model, xi, names=names)
    cochains = characteristic_cochains(rm)
    qm = simplify_total(rm.total, eliminate=["y"])
    base = FreeGCA([(g.name, g.degree)
                    for g in rm.base.cdga.algebra.generators])
    rank = {"complex": 2 * n, "real": 2 * n, "point": None}[bundle]
    fm = _fibered_from_quotient(qm, base, "x", n, cochains, rank=rank)
    omega = coupling_class(fm)
    assert omega == fm.x_power(1), \
        "the fiber generator should already be the coupling class"
    a_list = a_classes(fm, omega)
    for j, a in enumerate(a_list):
        assert a == base.gen(f"a{j + 2}"), f"a_{j + 2} is not the CE dual"
    involution = None
    if bundle in ("real", "point") and n % 2 == 0:
        involution = {f"a{i}": (-1) ** i for i in range(2, n + 2)}
        for name, deg, _ in classes:
            for j in range(min(deg // 2, n + 1)):
                involution[f"{name}_{j}"] = (-1) ** j
    cfw, pfw, efw = fiberwise_classes(fm, omega, a_list)
    return Pipeline(f"cpn-{bundle}-{n}", lam, h, action, model, pi, xi,
                    lxi, rm, cochains, qm, fm, omega=omega, a_list=a_list,
                    involution=involution,
                    extras={"n": n, "bundle": bundle, "fiber_dim": 2 * n,
                            "cfw": cfw, "pfw": pfw, "efw": efw})


def cp2_euler_trivial():
    """The CP^2 real-tangent model with trivialized Euler difference.

    Substitutes e(zeta) = e^fw into the real-tangent model for CP^2, which
    amounts to e_0 -> a2 and e_1 -> 0: the base ring becomes
    Q[a2, a3, p1_0, p1_1] and the class table keeps p1 and e (now equal to
    the fiberwise Euler class).
    """
    pl = cpn(2, "real")
    old = pl.fm.base
    base = FreeGCA([("a3", 6), ("a2", 4), ("p1_0", 4), ("p1_1", 2)])
    sub = make_substitution(old, base, {
        "a3": base.gen("a3"),
        "a2": base.gen("a2"),
        "p1_0": base.gen("p1_0"),
        "p1_1": base.gen("p1_1"),
        "e_0": base.gen("a2"),
        "e_1": base.zero(),
    })
    relation = {j: sub(e) for j, e in pl.fm.relation.items()}
    fm = FiberedModel(base, "x", 2, 2, relation=relation, rank=4)
    for cname, tot in pl.fm.classes.items():
        fm.classes[cname] = sum(
            (fm.from_base(sub(e)) * fm.x_power(j)
             for j, e in tot.coeffs.items()), fm.zero())
    omega = coupling_class(fm)
    assert omega == fm.x_power(1)
    a_list = a_classes(fm, omega)
    cfw, pfw, efw = fiberwise_classes(fm, omega, a_list)
    assert fm.classes["e"] == efw, \
        "Euler class of the total bundle should equal the fiberwise one"
    involution = {"a2": 1, "a3": -1, "p1_0": 1, "p1_1": -1}
    pl2 = Pipeline("cp2-euler-trivial", pl.lam, pl.holonomy, pl.action,
                   pl.model, pl.pi, pl.xi, pl.lxi, pl.rm, pl.cochains,
                   pl.qm, fm, omega=omega, a_list=a_list,
                   involution=involution,
                   extras={"n": 2, "bundle": "real-euler-trivial",
                           "fiber_dim": 4, "cfw": cfw, "pfw": pfw,
                           "efw": efw, "substitution": sub,
                           "parent": pl})
    return pl2


# ---------------------------------------------------------------------------
# holonomy certification
# ---------------------------------------------------------------------------

def check_holonomy(pipeline):
    """Certify that the holonomy algebra includes quasi-isomorphically into
    the positive truncation of the derivation algebra of the fiber.

    Returns (ok, message); message is None on success.  The degree cap is
    the top generator degree of the fiber cdga, which bounds the degree of
    any nonzero derivation.
    """
    lam = pipeline.lam
    cap = max(g.degree for g in lam.algebra.generators)
    der, _full = derivation_dgla(lam, cap)
    h = pipeline.holonomy
    sub_vectors = []
    for i, (name, d) in enumerate(h.basis):
        deriv = pipeline.action.derivation(i)
        vec = {}
        for g in lam.algebra.generators:
            img = deriv(lam.algebra.gen(g.name))
            for mono, c in img.terms.items():
                mname = _mono_name(lam.algebra, mono)
                key = f"{mname}.d{g.name}"
                assert key in der.index, f"derivation {key} missing"
                j = der.index[key]
                vec[j] = vec.get(j, Fraction(0)) + c
        sub_vectors.append(vec)
    return sub_dgla_inclusion_quasi_iso(h, der, sub_vectors, 1, cap)


def _mono_name(algebra, mono):
    parts = []
    for i, e in enumerate(mono):
        if e == 1:
            parts.append(algebra.generators[i].name)
        elif e > 1:
            parts.append(f"{algebra.generators[i].name}^{e}")
    return "".join(parts) if parts else "1"
