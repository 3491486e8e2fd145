"""Finite-basis differential graded Lie algebras.

Lie data carries *homological* degrees (the differential has degree -1);
algebras downstream carry cohomological degrees, and the dual generator of a
homological-degree-d basis element will live in cohomological degree d+1.

The module provides: structure-constant dg Lie algebras with machine-checked
axioms, Maurer-Cartan elements, twisting, truncation L<n> (degrees above n
kept, degree n replaced by cycles), actions on cdgas, semidirect products
h |x (Lambda-model (x) Pi), the derivation dg Lie algebra of a free cdga up
to a degree cap, and the full construction of the twisted-truncated algebra
underlying the universal-fibration model.

Vectors are sparse {basis index: Fraction} dicts throughout.
"""

from fractions import Fraction

from .gca import Cdga, Derivation, Element, coordinates
from .linalg import Echelon, SparseMatrix, kernel_basis, solve


def _vec(d):
    return {i: Fraction(c) for i, c in d.items() if c}


def _vec_add(u, v, c=1):
    out = dict(u)
    for i, x in v.items():
        w = out.get(i, Fraction(0)) + c * x
        if w:
            out[i] = w
        elif i in out:
            del out[i]
    return out


class DgLie:
    """A dg Lie algebra with finite ordered basis and structure constants.

    basis:    list of (name, homological degree);
    diff:     {i: {j: coeff}} giving delta(b_i) = sum coeff * b_j;
    brackets: {(i, j): {k: coeff}} for i <= j; other pairs follow from graded
              antisymmetry [y,x] = -(-1)^{|x||y|}[x,y];
    provenance: optional {i: payload} describing where basis vectors came
              from (used to name Chevalley-Eilenberg duals downstream);
    cap:      optional degree cap: brackets/differentials are only recorded
              where meaningful; validation is restricted below the cap.
    """

    def __init__(self, basis, diff=None, brackets=None, provenance=None,
                 cap=None):
        self.basis = [(str(n), int(d)) for n, d in basis]
        names = [n for n, _ in self.basis]
        assert len(set(names)) == len(names), "basis names must be unique"
        self.index = {n: i for i, (n, _) in enumerate(self.basis)}
        self.degrees = [d for _, d in self.basis]
        self.diff = {i: _vec(v) for i, v in (diff or {}).items() if v}
        self.brackets = {}
        for (i, j), v in (brackets or {}).items():
            assert i <= j, "store brackets with i <= j"
            v = _vec(v)
            if v:
                self.brackets[(i, j)] = v
        self.provenance = dict(provenance or {})
        self.cap = cap

    @property
    def dim(self):
        return len(self.basis)

    def degree_of_vector(self, v):
        degs = {self.degrees[i] for i in v}
        assert len(degs) <= 1, "vector not homogeneous"
        return degs.pop() if degs else None

    def delta(self, v):
        out = {}
        for i, c in v.items():
            out = _vec_add(out, self.diff.get(i, {}), c)
        return out

    def bracket_basis(self, i, j):
        if i <= j:
            return dict(self.brackets.get((i, j), {}))
        base = self.brackets.get((j, i), {})
        sign = -((-1) ** ((self.degrees[i] * self.degrees[j]) % 2))
        return {k: sign * c for k, c in base.items()}

    def bracket(self, u, v):
        out = {}
        for i, ci in u.items():
            for j, cj in v.items():
                out = _vec_add(out, self.bracket_basis(i, j), ci * cj)
        return out

    def _inside_cap(self, degree):
        return self.cap is None or degree <= self.cap

    def validate(self):
        """Return None if all axioms hold, else a violation description."""
        n = self.dim
        # degree checks + differential
        for i, v in self.diff.items():
            for j, c in v.items():
                if self.degrees[j] != self.degrees[i] - 1:
                    return f"delta not degree -1 on {self.basis[i][0]}"
        for i in range(n):
            if self._inside_cap(self.degrees[i] - 2):
                dd = self.delta(self.diff.get(i, {}))
                if dd:
                    return f"delta^2 != 0 on {self.basis[i][0]}"
        # bracket degrees, [x,x] for even x
        for (i, j), v in self.brackets.items():
            d = self.degrees[i] + self.degrees[j]
            for k, c in v.items():
                if self.degrees[k] != d:
                    return f"bracket degree mismatch at ({self.basis[i][0]},{self.basis[j][0]})"
            if i == j and self.degrees[i] % 2 == 0 and v:
                return f"[x,x] != 0 for even-degree {self.basis[i][0]}"
        # delta-Leibniz
        for i in range(n):
            for j in range(n):
                if not self._inside_cap(self.degrees[i] + self.degrees[j] - 1):
                    continue
                lhs = self.delta(self.bracket_basis(i, j))
                rhs = self.bracket(self.diff.get(i, {}), {j: Fraction(1)})
                sgn = (-1) ** (self.degrees[i] % 2)
                rhs = _vec_add(rhs, self.bracket({i: Fraction(1)},
                                                 self.diff.get(j, {})), sgn)
                if lhs != rhs:
                    return (f"delta-Leibniz fails on "
                            f"({self.basis[i][0]},{self.basis[j][0]})")
        # graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if not self._inside_cap(
                            self.degrees[i] + self.degrees[j] + self.degrees[k]):
                        continue
                    x, y, z = ({i: Fraction(1)}, {j: Fraction(1)},
                               {k: Fraction(1)})
                    lhs = self.bracket(x, self.bracket(y, z))
                    rhs = self.bracket(self.bracket(x, y), z)
                    sgn = (-1) ** ((self.degrees[i] * self.degrees[j]) % 2)
                    rhs = _vec_add(rhs, self.bracket(y, self.bracket(x, z)),
                                   sgn)
                    if lhs != rhs:
                        return (f"Jacobi fails on ({self.basis[i][0]},"
                                f"{self.basis[j][0]},{self.basis[k][0]})")
        return None

    def assert_valid(self):
        msg = self.validate()
        if msg is not None:
            raise ValueError(f"invalid dg Lie algebra: {msg}")

    def is_maurer_cartan(self, tau):
        """delta(tau) + 1/2 [tau, tau] = 0, with tau of homological degree -1."""
        tau = _vec(tau)
        if tau and self.degree_of_vector(tau) != -1:
            return False
        mc = _vec_add(self.delta(tau), self.bracket(tau, tau), Fraction(1, 2))
        return not mc

    def twist(self, tau):
        """Twisted dg Lie algebra: same bracket, differential delta + [tau,-]."""
        tau = _vec(tau)
        if not self.is_maurer_cartan(tau):
            raise ValueError("twisting element is not Maurer-Cartan")
        diff = {}
        for i in range(self.dim):
            v = _vec_add(self.diff.get(i, {}),
                         self.bracket(tau, {i: Fraction(1)}))
            if v:
                diff[i] = v
        return DgLie(self.basis, diff, self.brackets, self.provenance,
                     self.cap)

    def homology(self, lo, hi):
        """{degree: dim H_degree} for lo <= degree <= hi."""
        by_deg = {}
        for i, d in enumerate(self.degrees):
            by_deg.setdefault(d, []).append(i)
        out = {}
        for d in range(lo, hi + 1):
            dom = by_deg.get(d, [])
            cod = {i: r for r, i in enumerate(by_deg.get(d - 1, []))}
            entries = []
            for c, i in enumerate(dom):
                for j, v in self.diff.get(i, {}).items():
                    entries.append((cod[j], c, v))
            mat = SparseMatrix(len(cod), len(dom), entries)
            cycles = len(kernel_basis(mat))
            bound = Echelon()
            pos = {i: r for r, i in enumerate(dom)}
            for i in by_deg.get(d + 1, []):
                img = self.diff.get(i, {})
                if img:
                    bound.add({pos[j]: v for j, v in img.items()})
            out[d] = cycles - bound.rank
        return out

    def truncate(self, n):
        """L<n>: keep degrees > n, replace degree n by cycles, drop the rest.

        Returns a new DgLie whose provenance entries are lists of
        (coefficient, old payload) pairs describing each new basis vector in
        terms of the old basis.
        """
        keep = [i for i, d in enumerate(self.degrees) if d > n]
        level = [i for i, d in enumerate(self.degrees) if d == n]
        below = {i: r for r, i in enumerate(
            [i for i, d in enumerate(self.degrees) if d == n - 1])}
        entries = []
        for c, i in enumerate(level):
            for j, v in self.diff.get(i, {}).items():
                entries.append((below[j], c, v))
        mat = SparseMatrix(len(below), len(level), entries)
        kernel = kernel_basis(mat)
        new_vectors = [{i: Fraction(1)} for i in keep]
        for kv in kernel:
            new_vectors.append({level[r]: c for r, c in enumerate(kv) if c})
        names, degs, prov = [], [], {}
        used = set()
        for s, vec in enumerate(new_vectors):
            if len(vec) == 1 and next(iter(vec.values())) == 1:
                i = next(iter(vec))
                name = self.basis[i][0]
            else:
                name = "ker" + str(n) + "_" + str(s)
            assert name not in used
            used.add(name)
            names.append(name)
            degs.append(self.degree_of_vector(vec))
            prov[s] = [(c, self.provenance.get(i, ("basis", self.basis[i][0])))
                       for i, c in sorted(vec.items())]
        # express an old-coordinate vector (supported in kept degrees) in the
        # new basis
        def express(w):
            out = {}
            rest = dict(w)
            for s, vec in enumerate(new_vectors):
                if len(vec) == 1 and next(iter(vec.values())) == 1:
                    i = next(iter(vec))
                    if i in rest:
                        out[s] = rest.pop(i)
            if rest:
                # remaining support lies in degree n: solve over the kernel
                cols = list(range(len(keep), len(new_vectors)))
                rows = sorted({i for s in cols for i in new_vectors[s]}
                              | set(rest))
                rpos = {i: r for r, i in enumerate(rows)}
                entries = [(rpos[i], c, v) for c, s in enumerate(cols)
                           for i, v in new_vectors[s].items()]
                mat = SparseMatrix(len(rows), len(cols), entries)
                b = [rest.get(i, Fraction(0)) for i in rows]
                x = solve(mat, b)
                assert x is not None, "truncation: vector not in kept span"
                for c, s in enumerate(cols):
                    if x[c]:
                        out[s] = out.get(s, Fraction(0)) + x[c]
            return _vec(out)

        diff, brackets = {}, {}
        for s, vec in enumerate(new_vectors):
            d = self.degree_of_vector(vec)
            if d is not None and d - 1 >= n:
                img = self.delta(vec)
                if img:
                    diff[s] = express(img)
        for s in range(len(new_vectors)):
            for t in range(s, len(new_vectors)):
                ds, dt = degs[s], degs[t]
                if ds + dt < n:
                    continue
                w = self.bracket(new_vectors[s], new_vectors[t])
                if w:
                    brackets[(s, t)] = express(w)
        out = DgLie(list(zip(names, degs)), diff, brackets, prov, self.cap)
        return out


class AlgebraModel:
    """A finite-dimensional model of a cdga: chosen cocycle representatives
    closed under multiplication modulo coboundaries.

    Used as the finite-dimensional stand-in for Lambda in the completed
    tensor product: in practice the cohomology of the fiber with a choice of
    representing cocycles (e.g. 1, x, ..., x^n for a projective-space
    fiber).
    """

    def __init__(self, cdga, elements, names=None):
        self.cdga = cdga
        self.elements = list(elements)
        assert self.elements and self.elements[0] == cdga.algebra.one(), \
            "first model element must be the unit"
        for e in self.elements:
            assert e.is_homogeneous()
            assert cdga.d(e).is_zero(), "model elements must be cocycles"
        self.degrees = [e.degree() for e in self.elements]
        self.names = list(names) if names else [
            ("1" if e == cdga.algebra.one() else f"m{i}")
            for i, e in enumerate(self.elements)]
        self._mult_cache = {}

    @property
    def dim(self):
        return len(self.elements)

    def reduce(self, elem):
        """Express a cocycle in the model basis modulo coboundaries.

        Returns {model index: coeff}; raises if the element is not a cocycle
        or not in span(basis) + coboundaries.
        """
        if elem.is_zero():
            return {}
        assert self.cdga.d(elem).is_zero(), "reduce() requires a cocycle"
        A = self.cdga.algebra
        out = {}
        degs = {A.degree_of(m) for m in elem.terms}
        for n in sorted(degs):
            part = elem.homogeneous_part(n)
            cols = []
            members = []
            for i, e in enumerate(self.elements):
                if self.degrees[i] == n:
                    members.append(i)
                    cols.append(coordinates(A, e, n))
            if n >= 1:
                for mono in A.monomials(n - 1):
                    img = self.cdga.d(A.monomial(mono))
                    if not img.is_zero():
                        cols.append(coordinates(A, img, n))
            dim_comp = len(A.monomials(n))
            entries = [(r, c, v) for c, col in enumerate(cols)
                       for r, v in col.items()]
            mat = SparseMatrix(dim_comp, len(cols), entries)
            b = [Fraction(0)] * dim_comp
            for r, v in coordinates(A, part, n).items():
                b[r] = v
            x = solve(mat, b)
            assert x is not None, \
                f"element not in model span + coboundaries (degree {n})"
            for c, i in enumerate(members):
                if x[c]:
                    out[i] = x[c]
        return out

    def mult(self, i, j):
        if (i, j) in self._mult_cache:
            return self._mult_cache[(i, j)]
        res = self.reduce(self.elements[i] * self.elements[j])
        self._mult_cache[(i, j)] = res
        return res


class LieAction:
    """An action of a dg Lie algebra on a cdga by derivations.

    images: {(lie basis name, generator name): Element}; a basis element of
    homological degree d acts as a derivation of cohomological degree -d.
    Bracket and differential compatibility are machine-checked on
    generators.
    """

    def __init__(self, lie, cdga, images):
        self.lie = lie
        self.cdga = cdga
        self.images = {}
        for (bname, gname), elem in images.items():
            assert bname in lie.index and gname in cdga.algebra.index
            if not elem.is_zero():
                self.images[(bname, gname)] = elem
        self._derivs = {}

    def derivation(self, i):
        if i in self._derivs:
            return self._derivs[i]
        bname = self.lie.basis[i][0]
        d = self.lie.degrees[i]
        images = {}
        for g in self.cdga.algebra.generators:
            elem = self.images.get((bname, g.name))
            if elem is not None:
                images[g.name] = elem
        der = Derivation(self.cdga.algebra, -d, images)
        self._derivs[i] = der
        return der

    def act_vector(self, v, elem):
        out = self.cdga.algebra.zero()
        for i, c in v.items():
            out = out + c * self.derivation(i)(elem)
        return out

    def validate(self):
        """Check the action is a dg Lie map into derivations (on gens)."""
        L, C = self.lie, self.cdga
        gens = [C.algebra.gen(g.name) for g in C.algebra.generators]
        for i in range(L.dim):
            for j in range(L.dim):
                for x in gens:
                    lhs = self.act_vector(L.bracket_basis(i, j), x)
                    rhs = self.derivation(i)(self.derivation(j)(x))
                    sgn = (-1) ** ((L.degrees[i] * L.degrees[j]) % 2)
                    rhs = rhs - sgn * self.derivation(j)(self.derivation(i)(x))
                    if lhs != rhs:
                        return (f"action not a Lie map at "
                                f"({L.basis[i][0]},{L.basis[j][0]})")
        for i in range(L.dim):
            di = L.diff.get(i, {})
            ti = L.degrees[i]
            for x in gens:
                lhs = self.act_vector(di, x)
                # action of delta(b) = [d_Lambda, action of b] as a graded
                # commutator: d theta - (-1)^{-t} theta d
                rhs = C.d(self.derivation(i)(x))
                rhs = rhs - ((-1) ** (ti % 2)) * self.derivation(i)(C.d(x))
                if lhs != rhs:
                    return f"action-differential mismatch at {L.basis[i][0]}"
        return None


def semidirect(action, model, pi, pi_dual_names=None):
    """The semidirect product h |x (model (x) Pi).

    action: LieAction of h on the cdga Lambda; model: AlgebraModel giving the
    finite-dimensional stand-in for Lambda; pi: DgLie (the rational homotopy
    of the structure group).  Basis: h first, then e_l (x) q_p ordered by
    (p, l); the tensor degree is deg(q_p) - cohomological degree of e_l.

    Provenance payloads: ('h', name) for h vectors and
    ('t', model index, pi name) for tensor vectors.
    """
    h = action.lie
    basis = []
    prov = {}
    for i, (name, d) in enumerate(h.basis):
        basis.append((name, d))
        prov[i] = ("h", name)
    tensor_index = {}
    for p, (pname, pd) in enumerate(pi.basis):
        for l in range(model.dim):
            idx = len(basis)
            tensor_index[(l, p)] = idx
            mname = model.names[l]
            tname = pname if mname == "1" else f"{pname}@{mname}"
            basis.append((tname, pd - model.degrees[l]))
            prov[idx] = ("t", l, pname)
    nh = h.dim

    def tvec(d, p):
        # {model idx: coeff} tensor q_p -> semidirect vector
        return {tensor_index[(l, p)]: c for l, c in d.items()}

    diff = {}
    for i, v in h.diff.items():
        diff[i] = dict(v)
    for (l, p), idx in tensor_index.items():
        img = {}
        dm = model.cdga.d(model.elements[l])
        assert dm.is_zero()  # model elements are cocycles
        for q, c in pi.diff.get(p, {}).items():
            sgn = (-1) ** (model.degrees[l] % 2)
            img = _vec_add(img, {tensor_index[(l, q)]: Fraction(1)}, sgn * c)
        if img:
            diff[idx] = img

    brackets = {}
    for (i, j), v in h.brackets.items():
        brackets[(i, j)] = dict(v)
    for (l, p), idx in tensor_index.items():
        for i in range(nh):
            # [h_i, e_l (x) q_p] = (h_i . e_l) (x) q_p
            acted = action.derivation(i)(model.elements[l])
            img = {}
            if not acted.is_zero():
                red = model.reduce(acted)
                img = tvec({m: c for m, c in red.items()}, p)
            a, b = (i, idx) if i <= idx else (idx, i)
            if img:
                if (a, b) == (i, idx):
                    brackets[(a, b)] = img
                else:
                    dh, dt = h.degrees[i], basis[idx][1]
                    sgn = -((-1) ** ((dh * dt) % 2))
                    brackets[(a, b)] = {k: sgn * c for k, c in img.items()}
    for (l, p), idx in tensor_index.items():
        for (m, q), jdx in tensor_index.items():
            if idx > jdx:
                continue
            bq = pi.bracket_basis(p, q)
            if not bq:
                continue
            prod = model.mult(l, m)
            if not prod:
                continue
            sgn = (-1) ** ((pi.degrees[p] * model.degrees[m]) % 2)
            img = {}
            for r, cr in prod.items():
                for s, cs in bq.items():
                    img = _vec_add(img, {tensor_index[(r, s)]: Fraction(1)},
                                   sgn * cr * cs)
            if img:
                brackets[(idx, jdx)] = img
    out = DgLie(basis, diff, brackets, prov)
    return out, tensor_index


def build_l_xi(action, model, pi, xi_classes, validate=True):
    """Construct the twisted and truncated dg Lie algebra of the universal
    fibration with a fixed fiberwise bundle.

    xi_classes: {pi basis name: Element of Lambda} giving the characteristic
    classes of the fiber bundle xi; the twisting element is
    tau = sum_p xi(p) (x) q_p.  Returns (DgLie, tensor provenance retained).
    Raises if tau is not Maurer-Cartan, naming the failing check.
    """
    sd, tensor_index = semidirect(action, model, pi)
    tau = {}
    for pname, elem in xi_classes.items():
        p = pi.index[pname]
        if elem.is_zero():
            continue
        red = model.reduce(elem)
        for l, c in red.items():
            tau = _vec_add(tau, {tensor_index[(l, p)]: Fraction(1)}, c)
    if tau and sd.degree_of_vector(tau) != -1:
        raise ValueError("tau is not of homological degree -1; check that "
                         "each class has the degree of its dual suspension")
    if not sd.is_maurer_cartan(tau):
        raise ValueError("tau fails the Maurer-Cartan equation")
    twisted = sd.twist(tau)
    lxi = twisted.truncate(0)
    if validate:
        lxi.assert_valid()
    return lxi


def derivation_basis(cdga, degree):
    """Basis of derivations of the given homological degree: pairs
    (generator index, monomial of cohomological degree |g| - degree)."""
    A = cdga.algebra
    out = []
    for gi, g in enumerate(A.generators):
        target = g.degree - degree
        if target < 0:
            continue
        for mono in A.monomials(target):
            out.append((gi, mono))
    return out


def _derivation_from_pair(cdga, gi, mono):
    A = cdga.algebra
    g = A.generators[gi]
    return Derivation(A, A.degree_of(mono) - g.degree, {g.name: A.monomial(mono)})


def _derivation_coords(cdga, der, degree, basis):
    """Coordinates of a derivation (of the given homological degree) in the
    derivation_basis of that degree."""
    A = cdga.algebra
    pos = {}
    for r, (gi, mono) in enumerate(basis):
        pos[(gi, mono)] = r
    out = {}
    for gi, g in enumerate(A.generators):
        img = der(A.gen(g.name))
        for mono, c in img.terms.items():
            out[pos[(gi, mono)]] = out.get(pos[(gi, mono)], Fraction(0)) + c
    return _vec(out)


def derivation_dgla(cdga, cap):
    """The positive truncation Der Lambda<1> up to a degree cap.

    Returns (DgLie with degrees 1..cap (capped), description list) where the
    description pairs each basis index with (generator name, monomial
    Element).  Brackets and differentials whose target degree exceeds the
    cap are suppressed; validation and homology are restricted accordingly.
    """
    # build on degrees 0..cap, then truncate at 1
    basis_pairs = []
    layer = {}
    for d in range(0, cap + 1):
        layer[d] = derivation_basis(cdga, d)
        basis_pairs.extend((d, gi, mono) for gi, mono in layer[d])
    names = []
    prov = {}
    for idx, (d, gi, mono) in enumerate(basis_pairs):
        gname = cdga.algebra.generators[gi].name
        mname = "".join(
            f"{cdga.algebra.generators[i].name}^{e}" if e > 1 else
            (cdga.algebra.generators[i].name if e == 1 else "")
            for i, e in enumerate(mono)) or "1"
        names.append(f"{mname}.d{gname}")
        prov[idx] = ("der", gname, mono)
    pos = {}
    for idx, (d, gi, mono) in enumerate(basis_pairs):
        pos[(d, gi, mono)] = idx

    def coords_of(der, d):
        if d < 0 or d > cap:
            return {}
        base = layer[d]
        local = _derivation_coords(cdga, der, d, base)
        return {pos[(d,) + base[r]]: c for r, c in local.items()}

    def as_derivation(idx):
        d, gi, mono = basis_pairs[idx]
        return _derivation_from_pair(cdga, gi, mono)

    diff = {}
    brackets = {}
    dL = cdga.d
    A = cdga.algebra
    for idx, (t, gi, mono) in enumerate(basis_pairs):
        th = as_derivation(idx)
        # [d, theta] = d o theta - (-1)^t theta o d, degree t-1
        images = {}
        for g in A.generators:
            val = dL(th(A.gen(g.name))) - ((-1) ** (t % 2)) * th(dL(A.gen(g.name)))
            if not val.is_zero():
                images[g.name] = val
        if images:
            comm = Derivation(A, 1 - t, images)
            diff[idx] = coords_of(comm, t - 1)
    for i, (ti, gi, mi) in enumerate(basis_pairs):
        for j in range(i, len(basis_pairs)):
            tj = basis_pairs[j][0]
            if ti + tj > cap:
                continue
            thi, thj = as_derivation(i), as_derivation(j)
            A = cdga.algebra
            images = {}
            for g in A.generators:
                val = thi(thj(A.gen(g.name))) - \
                    ((-1) ** ((ti * tj) % 2)) * thj(thi(A.gen(g.name)))
                if not val.is_zero():
                    images[g.name] = val
            if images:
                comm = Derivation(A, -(ti + tj), images)
                brackets[(i, j)] = coords_of(comm, ti + tj)
    full = DgLie([(names[i], basis_pairs[i][0]) for i in range(len(names))],
                 diff, brackets, prov, cap=cap)
    truncated = full.truncate(1)
    return truncated, full


def sub_dgla_inclusion_quasi_iso(sub, ambient, sub_vectors, lo, hi):
    """Check that a sub dg Lie algebra includes quasi-isomorphically.

    sub_vectors[i] is the ambient coordinate vector of sub basis element i.
    Verifies, for lo <= degree <= hi: dim H(sub) = dim H(ambient) and the
    induced map on homology is injective (hence iso).
    """
    hs = sub.homology(lo, hi)
    ha = ambient.homology(lo, hi)
    if hs != ha:
        return False, f"homology dimensions differ: {hs} vs {ha}"
    by_deg_a = {}
    for i, d in enumerate(ambient.degrees):
        by_deg_a.setdefault(d, []).append(i)
    by_deg_s = {}
    for i, d in enumerate(sub.degrees):
        by_deg_s.setdefault(d, []).append(i)
    for d in range(lo, hi + 1):
        posa = {i: r for r, i in enumerate(by_deg_a.get(d, []))}
        bound = Echelon()
        for i in by_deg_a.get(d + 1, []):
            img = ambient.diff.get(i, {})
            if img:
                bound.add({posa[j]: v for j, v in img.items()})
        # sub cycles at degree d
        doms = by_deg_s.get(d, [])
        poss = {i: r for r, i in enumerate(by_deg_s.get(d - 1, []))}
        entries = []
        for c, i in enumerate(doms):
            for j, v in sub.diff.get(i, {}).items():
                entries.append((poss[j], c, v))
        mat = SparseMatrix(len(poss), len(doms), entries)
        cyc = kernel_basis(mat)
        sub_bound = Echelon()
        for i in by_deg_s.get(d + 1, []):
            img = sub.diff.get(i, {})
            if img:
                prow = {}
                for j, v in img.items():
                    prow[doms.index(j)] = v
                sub_bound.add(prow)
        count = 0
        for v in cyc:
            row = {c: x for c, x in enumerate(v) if x}
            if sub_bound.add(row):
                count += 1
                # map to ambient coordinates
                amb = {}
                for c, x in enumerate(v):
                    if x:
                        amb = _vec_add(amb, sub_vectors[doms[c]], x)
                arow = {posa[i]: x for i, x in amb.items()}
                if not bound.add(arow):
                    return False, f"homology class dies in degree {d}"
        if count != hs.get(d, 0):
            return False, f"internal count mismatch in degree {d}"
    return True, None
