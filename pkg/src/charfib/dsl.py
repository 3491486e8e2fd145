"""Declarative setup language for fibration pipelines.

A setup file describes the fiber cdga, the Lie model of the structure-group
classifying space with its dual class names, the characteristic cochains of
the fixed bundle, the holonomy derivations, and numeric options:

    fiber    { x: 4; y: 7; d y = x^2 }
    lie_model{ q1: 3 -> p1: 4; eps: 3 -> e: 4 }
    xi       { e = 2*x }
    holonomy { a = dy }
    options  { cutoff = 24 }

Statements are name:degree declarations, name = expr assignments, or
d name = expr differentials; expressions are signed sums of scaled
monomials with * and ^; # starts a comment.  Holonomy entries are monomial
multiples of a single d<generator> symbol (the derivation with respect to
that fiber generator); a bare entry is auto-named a, a2, a3, ...

All diagnostics carry line and column.  parse_setup validates degrees,
d^2 = 0, and closure of the holonomy under bracket and differential; the
normalized printing `print_setup` round-trips through the parser.
"""

import hashlib
from fractions import Fraction

from .cemodel import (QuotientModel, characteristic_cochains,
                      relative_model, simplify_total)
from .dgla import AlgebraModel, DgLie, LieAction, build_l_xi
from .gca import (Cdga, Derivation, FreeGCA, cohomology, coordinates,
                  format_element)
from .linalg import SparseMatrix, solve
from .presets import Pipeline, _fibered_from_quotient


class DslError(Exception):
    """A setup-language diagnostic with location."""

    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(f"{message}{where}")


SECTIONS = ("fiber", "lie_model", "xi", "holonomy", "options")

_PUNCT = ("->", "{", "}", ":", ";", "=", "^", "*", "+", "-", "/")


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            tokens.append(("newline", "\n", line, col))
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], line, col))
            col += j - i
            i = j
            continue
        matched = None
        for p in _PUNCT:
            if text.startswith(p, i):
                matched = p
                break
        if matched is None:
            raise DslError(f"unexpected character {ch!r}", line, col)
        tokens.append((matched, matched, line, col))
        col += len(matched)
        i += len(matched)
    tokens.append(("eof", "", line, col))
    return tokens


class Expr:
    """A parsed expression: list of (Fraction, ((name, exponent), ...))
    terms, with the source location of the whole expression."""

    def __init__(self, terms, line=None, col=None):
        self.terms = terms
        self.line = line
        self.col = col

    def names(self):
        out = set()
        for _, factors in self.terms:
            for name, _ in factors:
                out.add(name)
        return out

    def text(self):
        return format_terms(self.terms)


def format_terms(terms):
    if not terms:
        return "0"
    keyed = sorted(terms, key=lambda t: t[1])
    parts = []
    for coef, factors in keyed:
        if coef == 0:
            continue
        body = "*".join(nm if e == 1 else f"{nm}^{e}" for nm, e in factors)
        mag = abs(coef)
        if not body:
            piece = str(mag)
        elif mag == 1:
            piece = body
        else:
            piece = f"{mag}*{body}"
        sign = "-" if coef < 0 else "+"
        parts.append((sign, piece))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = (first if first_sign == "+" else f"-{first}")
    for sign, piece in parts[1:]:
        out += f" {sign} {piece}"
    return out


class Statement:
    """kind in {"decl", "pair", "assign", "diff"}; fields depend on kind."""

    def __init__(self, kind, line, col, **fields):
        self.kind = kind
        self.line = line
        self.col = col
        self.__dict__.update(fields)


class SetupSpec:
    """Parsed and validated setup.

    fiber: [(name, degree)] in declared order; differentials: {name: Expr};
    lie_model: [(qname, qdeg, dual, dualdeg)]; xi: {dual: Expr};
    holonomy: [(name, Expr coefficient, fiber generator name)];
    options: {name: int}.
    """

    def __init__(self, fiber, differentials, lie_model, xi, holonomy,
                 options):
        self.fiber = fiber
        self.differentials = differentials
        self.lie_model = lie_model
        self.xi = xi
        self.holonomy = holonomy
        self.options = options

    def normalized(self):
        return print_setup(self)

    def __eq__(self, other):
        return isinstance(other, SetupSpec) and \
            self.normalized() == other.normalized()

    def setup_hash(self):
        return hashlib.sha256(self.normalized().encode()).hexdigest()[:16]


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def skip_newlines(self):
        while self.peek()[0] == "newline":
            self.next()

    def expect(self, kind, what=None):
        tok = self.peek()
        if tok[0] != kind:
            raise DslError(f"expected {what or kind}, found "
                           f"{tok[1] or 'end of input'!r}", tok[2], tok[3])
        return self.next()

    def parse(self):
        sections = {}
        self.skip_newlines()
        while self.peek()[0] != "eof":
            tok = self.expect("name", "section header")
            if tok[1] not in SECTIONS:
                raise DslError(f"unknown section {tok[1]!r} (expected one "
                               f"of {', '.join(SECTIONS)})", tok[2], tok[3])
            if tok[1] in sections:
                raise DslError(f"duplicate section {tok[1]!r}",
                               tok[2], tok[3])
            self.skip_newlines()
            self.expect("{")
            stmts = []
            while True:
                self.skip_newlines()
                while self.peek()[0] == ";":
                    self.next()
                    self.skip_newlines()
                if self.peek()[0] == "}":
                    self.next()
                    break
                if self.peek()[0] == "eof":
                    t = self.peek()
                    raise DslError("unterminated section (missing '}')",
                                   t[2], t[3])
                stmts.append(self.statement())
            sections[tok[1]] = stmts
            self.skip_newlines()
        return sections

    def statement(self):
        tok = self.peek()
        if tok[0] == "name" and tok[1] == "d" and \
                self.tokens[self.pos + 1][0] == "name":
            self.next()
            gen = self.expect("name", "generator name")
            self.expect("=")
            return Statement("diff", tok[2], tok[3], gen=gen[1],
                             expr=self.expression())
        if tok[0] == "name":
            nxt = self.tokens[self.pos + 1]
            if nxt[0] == ":":
                self.next()
                self.next()
                deg = self.expect("int", "degree")
                if self.peek()[0] == "->":
                    self.next()
                    dual = self.expect("name", "dual class name")
                    self.expect(":")
                    ddeg = self.expect("int", "dual degree")
                    return Statement("pair", tok[2], tok[3], qname=tok[1],
                                     qdeg=int(deg[1]), dual=dual[1],
                                     dualdeg=int(ddeg[1]))
                return Statement("decl", tok[2], tok[3], name=tok[1],
                                 degree=int(deg[1]))
            if nxt[0] == "=":
                self.next()
                self.next()
                return Statement("assign", tok[2], tok[3], name=tok[1],
                                 expr=self.expression())
        # bare expression statement (holonomy shorthand)
        return Statement("assign", tok[2], tok[3], name=None,
                         expr=self.expression())

    def expression(self):
        start = self.peek()
        terms = []
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
        terms.append(self.term(sign))
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.next()[0] == "-" else 1
            terms.append(self.term(sign))
        return Expr(terms, start[2], start[3])

    def term(self, sign):
        coef = Fraction(sign)
        factors = {}
        saw = False
        while True:
            tok = self.peek()
            if tok[0] == "int":
                self.next()
                value = Fraction(int(tok[1]))
                if self.peek()[0] == "/":
                    self.next()
                    den = self.expect("int", "denominator")
                    if int(den[1]) == 0:
                        raise DslError("zero denominator", den[2], den[3])
                    value /= int(den[1])
                coef *= value
                saw = True
            elif tok[0] == "name":
                self.next()
                exp = 1
                if self.peek()[0] == "^":
                    self.next()
                    e = self.expect("int", "exponent")
                    exp = int(e[1])
                factors[tok[1]] = factors.get(tok[1], 0) + exp
                saw = True
            else:
                break
            if self.peek()[0] == "*":
                self.next()
                continue
            if self.peek()[0] in ("name", "int"):
                t = self.peek()
                raise DslError("missing '*' between factors", t[2], t[3])
            break
        if not saw:
            tok = self.peek()
            raise DslError(f"expected expression, found "
                           f"{tok[1] or 'end of input'!r}", tok[2], tok[3])
        return (coef, tuple(sorted(factors.items())))


def parse_setup(text):
    """Parse and validate a setup; raises DslError with location."""
    sections = _Parser(text).parse()
    fiber = []
    differentials = {}
    declared = set()
    for st in sections.get("fiber", []):
        if st.kind == "decl":
            if st.name in declared:
                raise DslError(f"duplicate generator {st.name!r}",
                               st.line, st.col)
            if st.degree <= 0:
                raise DslError(f"generator {st.name!r} must have positive "
                               f"degree", st.line, st.col)
            declared.add(st.name)
            fiber.append((st.name, st.degree))
        elif st.kind == "diff":
            if st.gen not in declared:
                raise DslError(f"differential of undeclared generator "
                               f"{st.gen!r}", st.line, st.col)
            if st.gen in differentials:
                raise DslError(f"duplicate differential for {st.gen!r}",
                               st.line, st.col)
            differentials[st.gen] = st.expr
        else:
            raise DslError("fiber section takes declarations and "
                           "differentials only", st.line, st.col)
    if not fiber:
        raise DslError("setup needs a fiber section with at least one "
                       "generator", 1, 1)

    lie_model = []
    duals = set()
    for st in sections.get("lie_model", []):
        if st.kind != "pair":
            raise DslError("lie_model statements have the form "
                           "name: degree -> dual: degree", st.line, st.col)
        if st.dualdeg != st.qdeg + 1:
            raise DslError(f"dual class {st.dual!r} must have degree "
                           f"{st.qdeg + 1} (basis degree + 1), got "
                           f"{st.dualdeg}", st.line, st.col)
        if st.dual in duals or st.dual in declared:
            raise DslError(f"duplicate name {st.dual!r}", st.line, st.col)
        duals.add(st.dual)
        lie_model.append((st.qname, st.qdeg, st.dual, st.dualdeg))

    xi = {}
    for st in sections.get("xi", []):
        if st.kind != "assign" or st.name is None:
            raise DslError("xi statements have the form class = expr",
                           st.line, st.col)
        if st.name not in duals:
            raise DslError(f"xi assigns to undeclared class {st.name!r}",
                           st.line, st.col)
        if st.name in xi:
            raise DslError(f"duplicate xi assignment for {st.name!r}",
                           st.line, st.col)
        xi[st.name] = st.expr

    holonomy = []
    hnames = set()
    auto = 0
    for st in sections.get("holonomy", []):
        if st.kind != "assign":
            raise DslError("holonomy statements are derivations, e.g. "
                           "a = x*dy or dy", st.line, st.col)
        name = st.name
        if name is None:
            auto += 1
            name = "a" if auto == 1 else f"a{auto}"
        if name in hnames or name in duals or name in declared:
            raise DslError(f"duplicate name {name!r}", st.line, st.col)
        coef_terms = []
        gen = None
        for coef, factors in st.expr.terms:
            kept = []
            for nm, e in factors:
                if nm.startswith("d") and nm[1:] in declared:
                    if gen is not None and gen != nm[1:]:
                        raise DslError("holonomy entry mixes derivation "
                                       "symbols", st.line, st.col)
                    if e != 1:
                        raise DslError("derivation symbols cannot be "
                                       "raised to powers", st.line, st.col)
                    gen = nm[1:]
                else:
                    kept.append((nm, e))
            coef_terms.append((coef, tuple(kept)))
        if gen is None:
            raise DslError("holonomy entry needs a derivation symbol "
                           "d<generator>", st.line, st.col)
        hnames.add(name)
        holonomy.append((name, Expr(coef_terms, st.expr.line, st.expr.col),
                         gen))

    options = {}
    for st in sections.get("options", []):
        if st.kind == "decl":
            options[st.name] = st.degree
            continue
        if st.kind == "assign" and st.name is not None:
            value = _expr_as_int(st.expr)
            if value is None:
                raise DslError("option values must be integers",
                               st.line, st.col)
            options[st.name] = value
            continue
        raise DslError("options statements have the form name = integer",
                       st.line, st.col)

    spec = SetupSpec(fiber, differentials, lie_model, xi, holonomy, options)
    _validate(spec)
    return spec


def _expr_as_int(expr):
    total = Fraction(0)
    for coef, factors in expr.terms:
        if factors:
            return None
        total += coef
    if total.denominator != 1:
        return None
    return int(total)


def _build_element(algebra, expr, context):
    out = algebra.zero()
    for coef, factors in expr.terms:
        term = algebra.scalar(coef)
        for nm, e in factors:
            if nm not in algebra.index:
                raise DslError(f"unknown name {nm!r} in {context}",
                               expr.line, expr.col)
            term = term * algebra.gen(nm) ** e
        out = out + term
    return out


def _homogeneous(elem, expected, context, expr):
    if elem.is_zero():
        return elem
    if not elem.is_homogeneous():
        raise DslError(f"{context} is not homogeneous", expr.line, expr.col)
    if expected is not None and elem.degree() != expected:
        raise DslError(f"{context} has degree {elem.degree()}, expected "
                       f"{expected}", expr.line, expr.col)
    return elem


def _validate(spec):
    A = FreeGCA(spec.fiber)
    images = {}
    for name, expr in spec.differentials.items():
        deg = dict(spec.fiber)[name] + 1
        images[name] = _homogeneous(
            _build_element(A, expr, f"d {name}"), deg, f"d {name}", expr)
    d = Derivation(A, 1, {k: v for k, v in images.items()
                          if not v.is_zero()})
    for name, _ in spec.fiber:
        sq = d(d(A.gen(name)))
        if not sq.is_zero():
            expr = spec.differentials.get(name)
            line = expr.line if expr else None
            col = expr.col if expr else None
            raise DslError(f"d^2 != 0 on generator {name!r}: "
                           f"d(d {name}) = {format_element(sq)}", line, col)
    for dualname in spec.xi:
        qdeg = next(dd for _, q, nm, dd in spec.lie_model if nm == dualname)
        expr = spec.xi[dualname]
        elem = _homogeneous(_build_element(A, expr, f"xi {dualname}"),
                            qdeg, f"xi class {dualname}", expr)
        if not d(elem).is_zero():
            raise DslError(f"xi class {dualname} is not a cocycle",
                           expr.line, expr.col)
    for name, coef_expr, gen in spec.holonomy:
        elem = _build_element(A, coef_expr, f"holonomy {name}")
        _homogeneous(elem, None, f"holonomy {name}", coef_expr)
        if elem.is_zero():
            raise DslError(f"holonomy entry {name} has zero coefficient",
                           coef_expr.line, coef_expr.col)


def print_setup(spec):
    """Normalized text: fixed section order, declarations sorted by
    (degree, name), canonical expression formatting."""
    lines = []

    def section(header, rows):
        if not rows:
            return
        lines.append(f"{header} {{")
        for r in rows:
            lines.append(f"  {r};")
        lines.append("}")

    fiber_rows = [f"{nm}: {dg}" for nm, dg in
                  sorted(spec.fiber, key=lambda t: (t[1], t[0]))]
    for nm in sorted(spec.differentials,
                     key=lambda nm: (dict(spec.fiber)[nm], nm)):
        fiber_rows.append(f"d {nm} = {spec.differentials[nm].text()}")
    section("fiber", fiber_rows)
    section("lie_model",
            [f"{q}: {qd} -> {du}: {dd}" for q, qd, du, dd in
             sorted(spec.lie_model, key=lambda t: (t[1], t[2]))])
    section("xi", [f"{nm} = {spec.xi[nm].text()}"
                   for nm in sorted(spec.xi)])
    holo_rows = []
    for nm, coef, gen in spec.holonomy:
        body = coef.text()
        if body == "1":
            holo_rows.append(f"{nm} = d{gen}")
        elif body == "-1":
            holo_rows.append(f"{nm} = -d{gen}")
        else:
            holo_rows.append(f"{nm} = {body}*d{gen}")
    section("holonomy", holo_rows)
    section("options", [f"{nm} = {spec.options[nm]}"
                        for nm in sorted(spec.options)])
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# pipeline construction
# ---------------------------------------------------------------------------

def pipeline_from_setup(spec, label="setup"):
    """Assemble the full pipeline from a validated SetupSpec.

    Builds the fiber cdga, a cohomology model, the holonomy dg Lie algebra
    (closure under bracket and differential is machine-verified), the
    twisted-truncated Lie algebra, the relative model and its
    characteristic cochains, and -- when the fiber has exactly one even
    generator -- the fibered model with pushforward.
    """
    A = FreeGCA(spec.fiber)
    images = {}
    for name, expr in spec.differentials.items():
        e = _build_element(A, expr, f"d {name}")
        if not e.is_zero():
            images[name] = e
    lam = Cdga(A, Derivation(A, 1, images))

    # holonomy derivations and their span
    thetas = []
    for name, coef_expr, gen in spec.holonomy:
        coef = _build_element(A, coef_expr, f"holonomy {name}")
        hdeg = dict(spec.fiber)[gen] - coef.degree()
        thetas.append((name, hdeg, Derivation(A, -hdeg, {gen: coef})))
    h = _holonomy_dgla(lam, thetas)
    action = LieAction(h, lam, {
        (name, g.name): theta.image_of(g.name)
        for name, _, theta in thetas for g in A.generators
        if not theta.image_of(g.name).is_zero()})
    bad = action.validate()
    if bad is not None:
        raise DslError(f"holonomy action is inconsistent: {bad}")

    model = _cohomology_model(lam)
    pi = DgLie([(dual, qdeg) for _, qdeg, dual, _ in spec.lie_model])
    xi = {dual: (_build_element(A, spec.xi[dual], f"xi {dual}")
                 if dual in spec.xi else A.zero())
          for _, _, dual, _ in spec.lie_model}
    lxi = build_l_xi(action, model, pi, xi)
    names = {}
    for _, _, dual, _ in spec.lie_model:
        for j, mname in enumerate(model.names):
            if j == 0:
                continue
            names[f"{dual}@{mname}"] = f"{dual}_{j}"
    rm = relative_model(lxi, action, model, xi, names=names)
    cochains = characteristic_cochains(rm)

    odd_gens = [nm for nm, dg in spec.fiber if dg % 2]
    even_gens = [nm for nm, dg in spec.fiber if dg % 2 == 0]
    fm = None
    qm = None
    x_name = None
    top = 1
    T = rm.total.algebra
    base_zero_d = all(
        rm.total.d(T.gen(g.name)).is_zero()
        for g in T.generators if g.name not in odd_gens)
    if len(even_gens) == 1 and base_zero_d:
        # eliminate the odd fiber generators against their differentials
        qm = simplify_total(rm.total, eliminate=odd_gens)
        if qm is rm.total:
            qm = QuotientModel(rm.total.algebra, [], lambda e: e)
        x_name = even_gens[0]
        x_deg = dict(spec.fiber)[x_name]
        if qm.relations:
            top = qm.relations[0].degree() // x_deg - 1
    elif not even_gens and len(odd_gens) == 1:
        # odd spherical fiber: the ring-level model needs no elimination
        qm = QuotientModel(rm.total.algebra, [], lambda e: e)
        x_name = odd_gens[0]
        x_deg = dict(spec.fiber)[x_name]
    if x_name is not None:
        base = FreeGCA([(g.name, g.degree)
                        for g in rm.base.cdga.algebra.generators])
        rank = spec.options.get("rank", x_deg * top)
        fm = _fibered_from_quotient(qm, base, x_name, top, cochains, rank)
        if spec.options.get("trivialize_e") and "e" in fm.classes:
            fm = trivialize_euler_class(fm)
    involution = {k[len("sign_"):]: v for k, v in spec.options.items()
                  if k.startswith("sign_")} or None
    return Pipeline(label, lam, h, action, model, pi, xi, lxi, rm,
                    cochains, qm, fm, involution=involution,
                    extras={"options": dict(spec.options),
                            "spec": spec})


def render_cpn_setup(n, bundle="complex"):
    """Setup text for the CP^n fiber with the complex-tangent, real-tangent
    or trivial fixed bundle; the real variant with trivialized Euler
    difference adds the trivialize_e option."""
    from math import comb
    assert n >= 1 and bundle in ("complex", "real", "point", "real-euler")
    lines = [f"# Universal xi-fibration over CP^{n}.",
             "fiber {", "  x: 2", f"  y: {2 * n + 1}",
             f"  d y = x^{n + 1}", "}", "", "lie_model {"]
    pairs = []
    xi = []
    signs = {}
    if bundle == "complex":
        for i in range(1, n + 1):
            pairs.append((f"q{i}", 2 * i - 1, f"c{i}", 2 * i))
            xi.append((f"c{i}", comb(n + 1, i), i))
    elif bundle in ("real", "real-euler"):
        for i in range(1, n):
            pairs.append((f"q{i}", 4 * i - 1, f"p{i}", 4 * i))
            xi.append((f"p{i}", comb(n + 1, i), 2 * i))
            signs[f"p{i}"] = 1
            for j in range(1, min(2 * i, n + 1)):
                signs[f"p{i}_{j}"] = (-1) ** j
        pairs.append(("eps", 2 * n - 1, "e", 2 * n))
        xi.append(("e", n + 1, n))
        signs["e"] = 1
        for j in range(1, n):
            signs[f"e_{j}"] = (-1) ** j
    for q, qd, du, dd in pairs:
        lines.append(f"  {q}: {qd} -> {du}: {dd}")
    lines.append("}")
    if xi:
        lines.append("")
        lines.append("xi {")
        for nm, coeff, e in xi:
            power = "x" if e == 1 else f"x^{e}"
            lines.append(f"  {nm} = {coeff}*{power}")
        lines.append("}")
    lines += ["", "holonomy {"]
    for l in range(0, n):
        body = "dy" if l == 0 else (f"x*dy" if l == 1 else f"x^{l}*dy")
        lines.append(f"  a{n + 1 - l} = {body}")
    lines.append("}")
    lines += ["", "options {", "  cutoff = 24", f"  rank = {2 * n}"]
    if bundle in ("real", "real-euler", "point"):
        for i in range(2, n + 2):
            signs[f"a{i}"] = (-1) ** i
    if bundle == "real-euler":
        lines.append("  trivialize_e = 1")
        signs = {k: v for k, v in signs.items()
                 if not (k == "e" or k.startswith("e_"))}
    for nm in sorted(signs):
        lines.append(f"  sign_{nm} = {signs[nm]}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def trivialize_euler_class(fm):
    """Substitute the fiberwise Euler class for the recorded total Euler
    class: the base generators carrying the Euler coefficients are removed
    and replaced by the omega-expansion coefficients of e^fw (which involve
    only the remaining generators).

    Returns the new FiberedModel; the substituted Euler class is asserted
    to equal the fiberwise one.
    """
    from .fibered import (FiberedModel, a_classes, coupling_class, decompose,
                          fiberwise_classes)
    from .gca import make_substitution
    omega = coupling_class(fm)
    a_list = a_classes(fm, omega)
    _, _, efw = fiberwise_classes(fm, omega, a_list)
    e_tot = fm.classes["e"]
    old = fm.base
    e_names = {"e"} | {f"e_{j}" for j in range(fm.top)}
    e_names &= set(old.index)
    keep = [(g.name, g.degree) for g in old.generators
            if g.name not in e_names]
    new = FreeGCA(keep)
    drop = make_substitution(old, new, {
        g.name: (new.gen(g.name) if g.name not in e_names else new.zero())
        for g in old.generators})
    fw_coeffs = decompose(fm, efw, omega)
    tot_coeffs = decompose(fm, e_tot, omega)
    images = {}
    for g in old.generators:
        if g.name in e_names:
            # locate the omega-coefficient this generator represents
            j = next(j for j in range(fm.top + 1)
                     if tot_coeffs[j].coefficient(
                         tuple(1 if i == old.index[g.name] else 0
                               for i in range(old.ngens))))
            replacement = fw_coeffs[j]
            for nm in e_names:
                assert not any(
                    mono[old.index[nm]]
                    for mono in replacement.terms), \
                    "fiberwise Euler coefficients involve Euler generators"
            images[g.name] = drop(replacement)
        else:
            images[g.name] = new.gen(g.name)
    sub = make_substitution(old, new, images)
    relation = {j: sub(e) for j, e in fm.relation.items()}
    out = FiberedModel(new, fm.x_name, fm.x_degree, fm.top,
                       relation=relation, rank=fm.rank)
    for cname, tot in fm.classes.items():
        out.classes[cname] = sum(
            (out.from_base(sub(e)) * out.x_power(j)
             for j, e in tot.coeffs.items()), out.zero())
    omega2 = coupling_class(out)
    _, _, efw2 = fiberwise_classes(out, omega2, a_classes(out, omega2))
    assert out.classes["e"] == efw2, \
        "substituted Euler class does not equal the fiberwise one"
    return out


def _cohomology_model(lam):
    top = sum(g.degree for g in lam.algebra.generators)
    coh = cohomology(lam, top)
    if coh[0][0] != 1:
        raise DslError("fiber cohomology is not Q in degree 0")
    elements = [lam.algebra.one()]
    names = ["1"]
    idx = 1
    for n in range(1, top + 1):
        for rep in coh[n][1]:
            elements.append(rep)
            names.append(f"w{idx}")
            idx += 1
    return AlgebraModel(lam, elements, names=names)


def _holonomy_dgla(lam, thetas):
    """Assemble the holonomy dg Lie algebra from named derivations,
    expressing differentials and brackets in the basis (error if the span
    is not closed)."""
    A = lam.algebra
    basis = [(name, hdeg) for name, hdeg, _ in thetas]
    ders = [theta for _, _, theta in thetas]

    def express(images, degree, what):
        """Write the derivation with the given generator images as a linear
        combination of basis derivations of matching homological degree."""
        if all(e.is_zero() for e in images.values()):
            return {}
        cols = [i for i, (_, hd) in enumerate(basis) if hd == degree]
        rows = []
        rhs = []
        offset = 0
        index = {}
        for g in A.generators:
            target = images.get(g.name, A.zero())
            degs = {target.degree()} if not target.is_zero() else set()
            for i in cols:
                img = ders[i].image_of(g.name)
                if not img.is_zero():
                    degs.add(img.degree())
            for dg in sorted(degs):
                dim = len(A.monomials(dg))
                for c_i, i in enumerate(cols):
                    img = ders[i].image_of(g.name)
                    for pos, v in coordinates(A, img, dg).items():
                        rows.append((offset + pos, c_i, v))
                for pos, v in coordinates(A, target, dg).items():
                    rhs.append((offset + pos, v))
                offset += dim
        mat = SparseMatrix(offset, len(cols), rows)
        b = [Fraction(0)] * offset
        for pos, v in rhs:
            b[pos] = v
        x = solve(mat, b)
        if x is None:
            raise DslError(f"holonomy is not closed: {what} is not in the "
                           f"span of the declared derivations")
        return {cols[i]: c for i, c in enumerate(x) if c}

    diff = {}
    for i, (name, hdeg, theta) in enumerate(thetas):
        sign = (-1) ** (hdeg % 2)
        images = {g.name: lam.d(theta(A.gen(g.name)))
                  - sign * theta(lam.d(A.gen(g.name)))
                  for g in A.generators}
        v = express(images, hdeg - 1, f"d({name})")
        if v:
            diff[i] = v
    brackets = {}
    for i in range(len(thetas)):
        for j in range(i, len(thetas)):
            ni, di, ti = thetas[i]
            nj, dj, tj = thetas[j]
            sign = (-1) ** ((di * dj) % 2)
            images = {g.name: ti(tj(A.gen(g.name)))
                      - sign * tj(ti(A.gen(g.name)))
                      for g in A.generators}
            v = express(images, di + dj, f"[{ni}, {nj}]")
            if v:
                brackets[(i, j)] = v
    lie = DgLie(basis, diff=diff, brackets=brackets)
    bad = lie.validate()
    if bad is not None:
        raise DslError(f"holonomy structure is inconsistent: {bad}")
    return lie
