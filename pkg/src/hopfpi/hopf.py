"""Hopf group coalgebras and their exhaustive axiom verification.

A π-coalgebra is a family {A_α} of spaces, one per element of a finite
group π, with comultiplications Δ_{α,β} : A_{αβ} → A_α ⊗ A_β and a
counit ε on A_1.  A Hopf π-coalgebra adds per-component algebra
structures and antipodes S_α : A_α → A_{α^{-1}}.  Everything is stored
as exact matrices in fixed bases; every axiom is a matrix identity and
is checked exhaustively over the (finite) grading group.

Verification collects *all* violations into a report instead of failing
fast; hand-entered structure constants deserve complete diagnostics.
The counit axiom is enforced in the identity form
(id⊗ε)Δ_{α,1} = id = (ε⊗id)Δ_{1,α}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DimensionMismatch,
    GradingMismatch,
    VerificationFailed,
)
from .groups import FiniteGroup, trivial_group
from .linalg import (
    Field,
    Matrix,
    Subspace,
    flip,
    kernel,
    kron_all,
    unit_vec,
    vec_is_zero,
    vec_kron,
)
from .util import parallel_map


# ---------------------------------------------------------------------------
# verification reports


@dataclass(frozen=True)
class Violation:
    check: str
    grading: tuple[int, ...]
    basis_index: int | None
    detail: str

    def render(self, group: FiniteGroup | None = None) -> str:
        if group is not None and self.grading:
            gr = ",".join(group.name(a) for a in self.grading)
        else:
            gr = ",".join(str(a) for a in self.grading)
        where = f" @({gr})" if self.grading else ""
        basis = f" basis {self.basis_index}" if self.basis_index is not None else ""
        return f"{self.check}{where}{basis}: {self.detail}"


class VerificationReport:
    """An ordered list of violations; empty means all checks passed."""

    def __init__(self, violations=None):
        self.violations: list[Violation] = list(violations or [])

    @property
    def ok(self) -> bool:
        return not self.violations

    def extend(self, more) -> None:
        self.violations.extend(more)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.violations + other.violations)

    def __len__(self):
        return len(self.violations)

    def __str__(self):
        if self.ok:
            return "all checks passed"
        return "\n".join(v.render() for v in self.violations)


def _diff_columns(check: str, grading, lhs: Matrix, rhs: Matrix, namer=None):
    """One violation per basis vector on which two maps disagree."""
    out = []
    if lhs.rows != rhs.rows or lhs.cols != rhs.cols:
        out.append(Violation(check, tuple(grading), None,
                             f"shape {lhs.rows}x{lhs.cols} vs {rhs.rows}x{rhs.cols}"))
        return out
    if lhs == rhs:
        return out
    f = lhs.field
    for j in range(lhs.cols):
        lc, rc = lhs.col(j), rhs.col(j)
        if lc != rc:
            label = namer(j) if namer else str(j)
            detail = (f"on basis {label}: lhs="
                      f"({', '.join(f.render(x) for x in lc)}) rhs="
                      f"({', '.join(f.render(x) for x in rc)})")
            out.append(Violation(check, tuple(grading), j, detail))
    return out


# ---------------------------------------------------------------------------
# structures


class PiCoalgebra:
    """Family {A_α} with comultiplications Δ_{α,β} and counit ε."""

    def __init__(self, group: FiniteGroup, field: Field, dims, comult, counit,
                 basis_names=None):
        self.group = group
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        if len(self.dims) != group.order:
            raise DimensionMismatch("one dimension per group element required")
        self.comult = dict(comult)
        self.counit = counit
        self.basis_names = tuple(tuple(ns) for ns in basis_names) if basis_names else None
        self._path_cache: dict[tuple[int, ...], Matrix] = {}
        self._validate_shapes()

    def n(self, alpha: int) -> int:
        return self.dims[alpha]

    def basis_name(self, alpha: int, i: int) -> str:
        if self.basis_names:
            return self.basis_names[alpha][i]
        return f"x{i}"

    def render_element(self, alpha: int, v) -> str:
        f = self.field
        out = ""
        for i, c in enumerate(v):
            if c == f.zero():
                continue
            name = self.basis_name(alpha, i)
            text = f.render(c)
            sign = "-" if text.startswith("-") else "+"
            mag = text[1:] if text.startswith("-") else text
            term = name if mag == "1" else f"{mag}*{name}"
            if not out:
                out = term if sign == "+" else f"-{term}"
            else:
                out += f" {sign} {term}"
        return out or "0"

    def _validate_shapes(self):
        g = self.group
        e = g.identity
        for a in g.elements():
            for b in g.elements():
                key = (a, b)
                if key not in self.comult:
                    raise DimensionMismatch(f"missing comultiplication at {key}")
                m = self.comult[key]
                if (m.rows, m.cols) != (self.n(a) * self.n(b), self.n(g.mul(a, b))):
                    raise DimensionMismatch(
                        f"comult{key} is {m.rows}x{m.cols}, expected "
                        f"{self.n(a) * self.n(b)}x{self.n(g.mul(a, b))}")
        if (self.counit.rows, self.counit.cols) != (1, self.n(e)):
            raise DimensionMismatch("counit must be 1 x dim(A_1)")

    def comult_path(self, path) -> Matrix:
        """Iterated comultiplication A_{α_1⋯α_k} → A_{α_1} ⊗ … ⊗ A_{α_k}.

        Well defined by coassociativity; computed left-nested.
        """
        path = tuple(path)
        if not path:
            raise GradingMismatch("empty comultiplication path")
        cached = self._path_cache.get(path)
        if cached is not None:
            return cached
        if len(path) == 1:
            out = Matrix.identity(self.field, self.n(path[0]))
        else:
            rest = path[1:]
            rest_prod = self.group.product(rest)
            step = self.comult[(path[0], rest_prod)]
            out = Matrix.identity(self.field, self.n(path[0])).kron(
                self.comult_path(rest)) @ step
        self._path_cache[path] = out
        return out


class HopfPiCoalgebra(PiCoalgebra):
    """π-coalgebra whose components are algebras, with antipodes S_α."""

    def __init__(self, group, field, dims, comult, counit, mult, unit, antipode,
                 psi=None, basis_names=None):
        super().__init__(group, field, dims, comult, counit, basis_names=basis_names)
        self.mult = list(mult)
        self.unit = [tuple(u) for u in unit]
        self.antipode = list(antipode)
        self.psi = list(psi) if psi is not None else None
        self._antipode_inv: dict[int, Matrix] = {}
        self._pair_mult: dict[tuple[int, int], Matrix] = {}
        self._validate_hopf_shapes()

    def _validate_hopf_shapes(self):
        g = self.group
        if len(self.mult) != g.order or len(self.unit) != g.order or len(self.antipode) != g.order:
            raise DimensionMismatch("one mult/unit/antipode per group element required")
        for a in g.elements():
            n = self.n(a)
            m = self.mult[a]
            if (m.rows, m.cols) != (n, n * n):
                raise DimensionMismatch(f"mult[{a}] is {m.rows}x{m.cols}, expected {n}x{n * n}")
            if len(self.unit[a]) != n:
                raise DimensionMismatch(f"unit[{a}] has length {len(self.unit[a])}")
            s = self.antipode[a]
            if (s.rows, s.cols) != (self.n(g.inv(a)), n):
                raise DimensionMismatch(
                    f"antipode[{a}] is {s.rows}x{s.cols}, expected {self.n(g.inv(a))}x{n}")
        if self.psi is not None:
            if len(self.psi) != g.order:
                raise DimensionMismatch("one psi per group element required")
            for a in g.elements():
                p = self.psi[a]
                if (p.rows, p.cols) != (self.n(g.identity), self.n(a)):
                    raise DimensionMismatch(f"psi[{a}] has wrong shape")

    def unit_col(self, alpha: int) -> Matrix:
        return Matrix.column(self.field, self.unit[alpha])

    def antipode_inv(self, alpha: int) -> Matrix:
        """Inverse of S_α as a matrix, A_{α^{-1}} → A_α."""
        if alpha not in self._antipode_inv:
            self._antipode_inv[alpha] = self.antipode[alpha].inverse()
        return self._antipode_inv[alpha]

    def pair_mult(self, alpha: int, beta: int) -> Matrix:
        """Componentwise multiplication on A_α ⊗ A_β."""
        key = (alpha, beta)
        if key not in self._pair_mult:
            self._pair_mult[key] = interchange_product(
                self.field, self.mult[alpha], self.mult[beta],
                self.n(alpha), self.n(beta), self.n(alpha), self.n(beta))
        return self._pair_mult[key]

    def counit_kernel(self) -> Subspace:
        return kernel(self.counit)


def interchange_product(field, mul1: Matrix, mul2: Matrix, p: int, q: int, r: int, s: int) -> Matrix:
    """(x⊗y)·(x'⊗y') ↦ mul1(x⊗x') ⊗ mul2(y⊗y').

    mul1 consumes k^p ⊗ k^r, mul2 consumes k^q ⊗ k^s; the middle swap
    reorders (x,y,x',y') to (x,x',y,y').
    """
    mid = kron_all(Matrix.identity(field, p), flip(field, q, r), Matrix.identity(field, s))
    return mul1.kron(mul2) @ mid


# ---------------------------------------------------------------------------
# verification


def verify_pi_coalgebra(c: PiCoalgebra) -> VerificationReport:
    """Coassociativity over all grading triples and the counit laws."""
    g = c.group
    f = c.field
    e = g.identity

    def coassoc(triple):
        a, b, cc = triple
        ab = g.mul(a, b)
        bc = g.mul(b, cc)
        abc = g.mul(ab, cc)
        lhs = c.comult[(a, b)].kron(Matrix.identity(f, c.n(cc))) @ c.comult[(ab, cc)]
        rhs = Matrix.identity(f, c.n(a)).kron(c.comult[(b, cc)]) @ c.comult[(a, bc)]
        return _diff_columns("coassociativity", (a, b, cc), lhs, rhs,
                             namer=lambda j: c.basis_name(abc, j))

    triples = [(a, b, cc) for a in g.elements() for b in g.elements() for cc in g.elements()]
    report = VerificationReport()
    for chunk in parallel_map(coassoc, triples):
        report.extend(chunk)

    for a in g.elements():
        eye = Matrix.identity(f, c.n(a))
        left = Matrix.identity(f, c.n(a)).kron(c.counit) @ c.comult[(a, e)]
        report.extend(_diff_columns("counit-left", (a,), left, eye,
                                    namer=lambda j, a=a: c.basis_name(a, j)))
        right = c.counit.kron(Matrix.identity(f, c.n(a))) @ c.comult[(e, a)]
        report.extend(_diff_columns("counit-right", (a,), right, eye,
                                    namer=lambda j, a=a: c.basis_name(a, j)))
    return report


def verify_hopf(h: HopfPiCoalgebra) -> VerificationReport:
    """Algebra axioms, algebra-map axioms, antipode axiom and the derived
    antipode identities (comultiplication compatibility, ε∘S_1 = ε,
    antimultiplicativity, S_α(1_α) = 1_{α^{-1}}), antipode invertibility,
    and — when present — that every Ψ_α is a unital algebra map."""
    g = h.group
    f = h.field
    e = g.identity
    report = VerificationReport()

    def named(alpha):
        return lambda j, a=alpha: h.basis_name(a, j)

    def pair_named(alpha, beta):
        na, nb = h.n(alpha), h.n(beta)
        return lambda j: (f"{h.basis_name(alpha, j // nb)}⊗{h.basis_name(beta, j % nb)}")

    def algebra_checks(a):
        out = []
        n = h.n(a)
        eye = Matrix.identity(f, n)
        m = h.mult[a]
        lhs = m @ m.kron(eye)
        rhs = m @ eye.kron(m)
        out.extend(_diff_columns("algebra-associativity", (a,), lhs, rhs))
        out.extend(_diff_columns("algebra-unit-left", (a,),
                                 m @ h.unit_col(a).kron(eye), eye, namer=named(a)))
        out.extend(_diff_columns("algebra-unit-right", (a,),
                                 m @ eye.kron(h.unit_col(a)), eye, namer=named(a)))
        return out

    def comult_checks(pair):
        a, b = pair
        ab = g.mul(a, b)
        out = []
        lhs = h.comult[(a, b)] @ h.mult[ab]
        rhs = h.pair_mult(a, b) @ h.comult[(a, b)].kron(h.comult[(a, b)])
        out.extend(_diff_columns("comult-multiplicative", (a, b), lhs, rhs,
                                 namer=pair_named(ab, ab)))
        img = h.comult[(a, b)].apply(h.unit[ab])
        want = vec_kron(f, h.unit[a], h.unit[b])
        if img != want:
            got = ", ".join(f.render(x) for x in img)
            exp = ", ".join(f.render(x) for x in want)
            out.append(Violation("comult-unital", (a, b), None,
                                 f"Δ(1) = ({got}) expected ({exp})"))
        return out

    def antipode_checks(a):
        out = []
        ai = g.inv(a)
        n = h.n(a)
        eye = Matrix.identity(f, n)
        s = h.antipode[ai]  # S_{α^{-1}} : A_{α^{-1}} → A_α
        target = h.unit_col(a) @ h.counit
        left = h.mult[a] @ s.kron(eye) @ h.comult[(ai, a)]
        right = h.mult[a] @ eye.kron(s) @ h.comult[(a, ai)]
        out.extend(_diff_columns("antipode-axiom-left", (a,), left, target, namer=named(e)))
        out.extend(_diff_columns("antipode-axiom-right", (a,), right, target, namer=named(e)))
        sa = h.antipode[a]
        if sa.rows != sa.cols or sa.rank() != n:
            out.append(Violation("antipode-invertible", (a,), None,
                                 f"S has rank {sa.rank()}, need {n}"))
        # antimultiplicativity S(xy) = S(y)S(x)
        ni = h.n(ai)
        lhs = sa @ h.mult[a]
        rhs = h.mult[ai] @ flip(f, ni, ni) @ sa.kron(sa)
        out.extend(_diff_columns("antipode-antimultiplicative", (a,), lhs, rhs))
        su = sa.apply(h.unit[a])
        if su != tuple(h.unit[ai]):
            out.append(Violation("antipode-unital", (a,), None,
                                 f"S(1) = {h.render_element(ai, su)}"))
        return out

    def antipode_comult(pair):
        a, b = pair
        ab = g.mul(a, b)
        lhs = h.comult[(g.inv(b), g.inv(a))] @ h.antipode[ab]
        rhs = (flip(f, h.n(g.inv(a)), h.n(g.inv(b)))
               @ h.antipode[a].kron(h.antipode[b]) @ h.comult[(a, b)])
        return _diff_columns("antipode-comult", (a, b), lhs, rhs, namer=named(ab))

    elements = list(g.elements())
    pairs = [(a, b) for a in elements for b in elements]
    for chunk in parallel_map(algebra_checks, elements):
        report.extend(chunk)
    for chunk in parallel_map(comult_checks, pairs):
        report.extend(chunk)
    report.extend(_diff_columns("counit-multiplicative", (), h.counit @ h.mult[e],
                                h.counit.kron(h.counit), namer=pair_named(e, e)))
    eps1 = h.counit.apply(h.unit[e])
    if eps1 != (f.one(),):
        report.extend([Violation("counit-unital", (), None, f"ε(1) = {f.render(eps1[0])}")])
    for chunk in parallel_map(antipode_checks, elements):
        report.extend(chunk)
    for chunk in parallel_map(antipode_comult, pairs):
        report.extend(chunk)
    report.extend(_diff_columns("antipode-counit", (), h.counit @ h.antipode[e], h.counit,
                                namer=named(e)))

    if h.psi is not None:
        for a in elements:
            p = h.psi[a]
            report.extend(_diff_columns("psi-multiplicative", (a,),
                                        p @ h.mult[a], h.mult[e] @ p.kron(p)))
            pu = p.apply(h.unit[a])
            if pu != tuple(h.unit[e]):
                report.extend([Violation("psi-unital", (a,), None,
                                         f"Ψ(1) = {h.render_element(e, pu)}")])
    return report


def verify_all(h: HopfPiCoalgebra) -> VerificationReport:
    return verify_pi_coalgebra(h).merge(verify_hopf(h))


# ---------------------------------------------------------------------------
# convolution and graded functionals


def convolution(h: PiCoalgebra, alpha: int, f_map: Matrix, beta: int, g_map: Matrix,
                target_mult: Matrix) -> Matrix:
    """(f*g) = m ∘ (f⊗g) ∘ Δ_{α,β} for f : A_α → T, g : A_β → T.

    `target_mult` is the multiplication T ⊗ T → T of the target algebra.
    """
    if (alpha, beta) not in h.comult:
        raise GradingMismatch(f"no comultiplication at ({alpha},{beta})")
    if f_map.cols != h.n(alpha) or g_map.cols != h.n(beta):
        raise GradingMismatch("convolution factors have wrong source dimensions")
    return target_mult @ f_map.kron(g_map) @ h.comult[(alpha, beta)]


def convolution_unit(h: HopfPiCoalgebra, alpha: int, target_unit, target_dim: int) -> Matrix:
    """ε(·)1_T on A_α (zero map unless α = 1)."""
    f = h.field
    if alpha != h.group.identity:
        return Matrix.zero(f, target_dim, h.n(alpha))
    return Matrix.column(f, target_unit) @ h.counit


def iterated_comult(h: PiCoalgebra, path, source) -> tuple:
    """Apply the iterated comultiplication along `path` to `source`.

    The grading of `source` must be the product of the path; the result
    does not depend on the bracketing (coassociativity).
    """
    m = h.comult_path(path)
    if len(source) != m.cols:
        raise GradingMismatch(
            f"element of dimension {len(source)} is not in A_(product of path) "
            f"(dimension {m.cols})")
    return m.apply(source)


class GradedFunctional:
    """Element of ⊕_α A_α*, stored as one row vector per grading."""

    def __init__(self, h: PiCoalgebra, components: dict):
        self.h = h
        comp = {}
        for a, row in components.items():
            row = tuple(h.field.canon(x) for x in row)
            if len(row) != h.n(a):
                raise DimensionMismatch(f"component at {a} has length {len(row)}")
            if not vec_is_zero(h.field, row):
                comp[a] = row
        self.components = comp

    @classmethod
    def counit_functional(cls, h: HopfPiCoalgebra) -> "GradedFunctional":
        return cls(h, {h.group.identity: h.counit.row(0)})

    def component(self, alpha: int) -> tuple:
        got = self.components.get(alpha)
        if got is None:
            return (self.h.field.zero(),) * self.h.n(alpha)
        return got

    def __call__(self, alpha: int, v) -> object:
        f = self.h.field
        out = f.zero()
        for a, x in zip(self.component(alpha), v):
            out = f.add(out, f.mul(a, x))
        return out

    def conv(self, other: "GradedFunctional") -> "GradedFunctional":
        """Convolution in ⊕_α A_α*: (u*v)^γ = Σ_{αβ=γ} (u^α⊗v^β)Δ_{α,β}."""
        h = self.h
        f = h.field
        comp: dict[int, tuple] = {}
        for a, ra in self.components.items():
            for b, rb in other.components.items():
                gamma = h.group.mul(a, b)
                row = (Matrix.row_vector(f, vec_kron(f, ra, rb)) @ h.comult[(a, b)]).row(0)
                if gamma in comp:
                    comp[gamma] = tuple(f.add(x, y) for x, y in zip(comp[gamma], row))
                else:
                    comp[gamma] = row
        return GradedFunctional(h, comp)

    def precompose(self, m: Matrix, domain_alpha: int, component_alpha: int) -> "GradedFunctional":
        """The functional u^{component_alpha} ∘ m, supported at domain_alpha."""
        row = (Matrix.row_vector(self.h.field, self.component(component_alpha)) @ m).row(0)
        return GradedFunctional(self.h, {domain_alpha: row})

    def star_element(self, alpha: int, v) -> tuple:
        """u*a = (id ⊗ u)Δ_{α,1}(a); evaluates the A_1 component."""
        h = self.h
        f = h.field
        e = h.group.identity
        w = h.comult[(alpha, e)].apply(v)
        row = self.component(e)
        n1 = h.n(e)
        out = []
        for i in range(h.n(alpha)):
            s = f.zero()
            for j in range(n1):
                s = f.add(s, f.mul(w[i * n1 + j], row[j]))
            out.append(s)
        return tuple(out)

    def element_star(self, alpha: int, v) -> tuple:
        """a*u = (u ⊗ id)Δ_{1,α}(a); evaluates the A_1 component."""
        h = self.h
        f = h.field
        e = h.group.identity
        w = h.comult[(e, alpha)].apply(v)
        row = self.component(e)
        n = h.n(alpha)
        out = []
        for i in range(n):
            s = f.zero()
            for j in range(h.n(e)):
                s = f.add(s, f.mul(w[j * n + i], row[j]))
            out.append(s)
        return tuple(out)

    def eq(self, other: "GradedFunctional") -> bool:
        return self.components == other.components


# ---------------------------------------------------------------------------
# constructors


def group_algebra(grp: FiniteGroup, field_: Field, names=None) -> HopfPiCoalgebra:
    """k[G] as a Hopf π-coalgebra over the trivial grading group.

    Basis = group elements, Δ(x) = x⊗x, ε(x) = 1, S(x) = x^{-1}.
    """
    f = field_
    n = grp.order
    one = f.one()
    mult = Matrix(f, n, n * n,
                  {(grp.table[i][j], i * n + j): one for i in range(n) for j in range(n)})
    unit = unit_vec(f, n, grp.identity)
    comult = Matrix(f, n * n, n, {(i * n + i, i): one for i in range(n)})
    counit = Matrix(f, 1, n, {(0, i): one for i in range(n)})
    antipode = Matrix(f, n, n, {(grp.inverse[i], i): one for i in range(n)})
    if names is None:
        if grp.names:
            names = grp.names
        else:
            names = tuple("e" if i == grp.identity else f"g{i}" for i in range(n))
    return HopfPiCoalgebra(
        trivial_group(), f, [n],
        {(0, 0): comult}, counit,
        [mult], [unit], [antipode],
        psi=[Matrix.identity(f, n)],
        basis_names=[tuple(names)],
    )


def taft_hopf_algebra(field_: Field) -> HopfPiCoalgebra:
    """The four-dimensional Taft algebra over the trivial grading group.

    Basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx; g grouplike,
    Δ(x) = x⊗1 + g⊗x, S(x) = −gx.  Its antipode has order four, so it
    separates constructions that need the inverse antipode from those
    that merely apply it (needs characteristic ≠ 2).
    """
    f = field_
    one = f.one()
    minus = f.neg(one)
    if minus == one:
        raise DimensionMismatch("the Taft algebra needs characteristic ≠ 2")
    n = 4
    mult_entries: dict = {}

    def setm(i, j, k, c):
        mult_entries[(k, i * n + j)] = c

    for j in range(n):
        setm(0, j, j, one)
    for i in range(1, n):
        setm(i, 0, i, one)
    setm(1, 1, 0, one)
    setm(1, 2, 3, one)
    setm(1, 3, 2, one)
    setm(2, 1, 3, minus)
    setm(3, 1, 2, minus)
    mult = Matrix(f, n, n * n, mult_entries)
    unit = unit_vec(f, n, 0)
    com: dict = {}

    def setd(src, i, j, c):
        com[(i * n + j, src)] = c

    setd(0, 0, 0, one)
    setd(1, 1, 1, one)
    setd(2, 2, 0, one)
    setd(2, 1, 2, one)
    setd(3, 3, 1, one)
    setd(3, 0, 3, one)
    comult = Matrix(f, n * n, n, com)
    counit = Matrix(f, 1, n, {(0, 0): one, (0, 1): one})
    antipode = Matrix(f, n, n, {(0, 0): one, (1, 1): one, (3, 2): minus, (2, 3): one})
    return HopfPiCoalgebra(
        trivial_group(), f, [n],
        {(0, 0): comult}, counit,
        [mult], [unit], [antipode],
        psi=[Matrix.identity(f, n)],
        basis_names=[("1", "g", "x", "gx")],
    )


def constant_family(h1: HopfPiCoalgebra, grp: FiniteGroup) -> HopfPiCoalgebra:
    """The constant family A_α := A_1 over `grp`, Δ_{α,β} := Δ, S_α := S.

    `h1` must itself verify over the trivial group; failures propagate.
    """
    if h1.group.order != 1:
        raise GradingMismatch("constant_family expects a structure over the trivial group")
    report = verify_all(h1)
    if not report.ok:
        raise VerificationFailed(
            f"base Hopf structure fails verification ({len(report)} violations)", report)
    n = h1.n(0)
    order = grp.order
    comult = {(a, b): h1.comult[(0, 0)] for a in grp.elements() for b in grp.elements()}
    psi1 = h1.psi[0] if h1.psi is not None else Matrix.identity(h1.field, n)
    names = [h1.basis_names[0]] * order if h1.basis_names else None
    return HopfPiCoalgebra(
        grp, h1.field, [n] * order,
        comult, h1.counit,
        [h1.mult[0]] * order, [h1.unit[0]] * order, [h1.antipode[0]] * order,
        psi=[psi1] * order,
        basis_names=names,
    )
