"""First-order differential calculi on Hopf group coalgebras.

The universal object is A² = {ker m_α} with D_α(b) = 1⊗b − b⊗1 and the
actions c·(a⊗b) = ca⊗b, (a⊗b)·c = a⊗bc.  Every calculus is a quotient
A²/N by a graded sub-bimodule N; the classification routes build N from
a right ideal R ⊆ ker ε via the bijections

    r_α(a⊗b) = (a ⊗ 1_1) Δ_{α,1}(b),      N_α = r_α^{-1}(A_α ⊗ R),
    t_α(a⊗b) = (1_1 ⊗ a) Δ_{1,α}(b),      N_α = t_α^{-1}(R ⊗ A_α),

the first giving left covariant calculi, the second right covariant
ones.  Covariance itself is decided by the containments
Φ^l(N_{αβ}) ⊆ A_α⊗N_β and Φ^r(N_{αβ}) ⊆ N_α⊗A_β, which is the operative
condition (and decidable by finite linear algebra); the implication form
of the definition is spot-checked on a basis of N via the induced maps.

The adjoint coaction ad_α = t_α ∘ r_α^{-1} ∘ (1_α ⊗ ·) : A_1 → A_1⊗A_α
characterises bicovariance: the r-route calculus of R is bicovariant iff
ad_α(R) ⊆ R ⊗ A_α for all α.
"""

from __future__ import annotations

from .errors import (
    CodomainViolation,
    DimensionMismatch,
    InternalMismatch,
    NotARightIdeal,
    NotCovariant,
    NotInKernelOfCounit,
    TooLarge,
    UnsupportedField,
)
from .hopf import (
    HopfPiCoalgebra,
    VerificationReport,
    Violation,
)
from .linalg import (
    Matrix,
    PrimeField,
    Subspace,
    flip,
    kernel,
    kron_all,
    quotient,
    unit_vec,
    vec_kron,
)
from .util import parallel_map


# ---------------------------------------------------------------------------
# the universal bimodule A²


class UniversalBimodule:
    """Per-grading kernels of multiplication with D and the A-actions."""

    def __init__(self, h: HopfPiCoalgebra):
        self.h = h
        f = h.field
        self.sub: list[Subspace] = []
        self.D: list[Matrix] = []
        for a in h.group.elements():
            n = h.n(a)
            self.sub.append(kernel(h.mult[a]))
            one_tensor = Matrix.column(f, h.unit[a]).kron(Matrix.identity(f, n))
            tensor_one = Matrix.identity(f, n).kron(Matrix.column(f, h.unit[a]))
            self.D.append(one_tensor - tensor_one)

    def dim(self, alpha: int) -> int:
        return self.sub[alpha].dim

    def left_action_ambient(self, alpha: int) -> Matrix:
        """A_α ⊗ (A_α⊗A_α) → A_α⊗A_α, c⊗(a⊗b) ↦ ca⊗b."""
        h = self.h
        n = h.n(alpha)
        return h.mult[alpha].kron(Matrix.identity(h.field, n))

    def right_action_ambient(self, alpha: int) -> Matrix:
        """(A_α⊗A_α) ⊗ A_α → A_α⊗A_α, (a⊗b)⊗c ↦ a⊗bc."""
        h = self.h
        n = h.n(alpha)
        return Matrix.identity(h.field, n).kron(h.mult[alpha])


def universal_bimodule(h: HopfPiCoalgebra) -> UniversalBimodule:
    return UniversalBimodule(h)


# ---------------------------------------------------------------------------
# the coactions Φ^l, Φ^r on A⊗A and the r/t translation maps


def phi_l(h: HopfPiCoalgebra, alpha: int, beta: int) -> Matrix:
    """Φ^l_{α,β} : A_{αβ}⊗A_{αβ} → A_α ⊗ A_β ⊗ A_β.

    u⊗v ↦ u_(1,α)v_(1,α) ⊗ u_(2,β) ⊗ v_(2,β); restricted to A²_{αβ} it
    lands in A_α ⊗ A²_β.
    """
    f = h.field
    na, nb = h.n(alpha), h.n(beta)
    d = h.comult[(alpha, beta)]
    swap = kron_all(Matrix.identity(f, na), flip(f, nb, na), Matrix.identity(f, nb))
    return h.mult[alpha].kron(Matrix.identity(f, nb * nb)) @ swap @ d.kron(d)


def phi_r(h: HopfPiCoalgebra, alpha: int, beta: int) -> Matrix:
    """Φ^r_{α,β} : A_{αβ}⊗A_{αβ} → A_α ⊗ A_α ⊗ A_β.

    u⊗v ↦ u_(1,α) ⊗ v_(1,α) ⊗ u_(2,β)v_(2,β); restricted to A²_{αβ} it
    lands in A²_α ⊗ A_β.
    """
    f = h.field
    na, nb = h.n(alpha), h.n(beta)
    d = h.comult[(alpha, beta)]
    swap = kron_all(Matrix.identity(f, na), flip(f, nb, na), Matrix.identity(f, nb))
    return Matrix.identity(f, na * na).kron(h.mult[beta]) @ swap @ d.kron(d)


def phi_l_restricted(h: HopfPiCoalgebra, alpha: int, beta: int,
                     asq: UniversalBimodule | None = None) -> Matrix:
    """Φ^l in A²-coordinates: A²_{αβ} → A_α ⊗ A²_β, with codomain check."""
    asq = asq or universal_bimodule(h)
    f = h.field
    ab = h.group.mul(alpha, beta)
    amb = phi_l(h, alpha, beta)
    target = Subspace.full(f, h.n(alpha)).tensor(asq.sub[beta])
    incl = asq.sub[ab].inclusion_matrix()
    restricted = amb @ incl
    for j in range(restricted.cols):
        col = restricted.col(j)
        if not target.contains(col):
            raise CodomainViolation(
                f"Φ^l image of A² basis vector {j} at ({alpha},{beta}) "
                f"falls outside A⊗A²")
    drop = Matrix.identity(f, h.n(alpha)).kron(asq.sub[beta].coords_matrix())
    return drop @ restricted


def phi_r_restricted(h: HopfPiCoalgebra, alpha: int, beta: int,
                     asq: UniversalBimodule | None = None) -> Matrix:
    """Φ^r in A²-coordinates: A²_{αβ} → A²_α ⊗ A_β, with codomain check."""
    asq = asq or universal_bimodule(h)
    f = h.field
    ab = h.group.mul(alpha, beta)
    amb = phi_r(h, alpha, beta)
    target = asq.sub[alpha].tensor(Subspace.full(f, h.n(beta)))
    incl = asq.sub[ab].inclusion_matrix()
    restricted = amb @ incl
    for j in range(restricted.cols):
        if not target.contains(restricted.col(j)):
            raise CodomainViolation(
                f"Φ^r image of A² basis vector {j} at ({alpha},{beta}) "
                f"falls outside A²⊗A")
    drop = asq.sub[alpha].coords_matrix().kron(Matrix.identity(f, h.n(beta)))
    return drop @ restricted


def r_map(h: HopfPiCoalgebra, alpha: int) -> Matrix:
    """r_α : A_α⊗A_α → A_α⊗A_1, a⊗b ↦ (a⊗1_1)Δ_{α,1}(b) = a b_(1,α) ⊗ b_(2,1)."""
    f = h.field
    e = h.group.identity
    n = h.n(alpha)
    return (h.mult[alpha].kron(Matrix.identity(f, h.n(e)))
            @ Matrix.identity(f, n).kron(h.comult[(alpha, e)]))


def t_map(h: HopfPiCoalgebra, alpha: int) -> Matrix:
    """t_α : A_α⊗A_α → A_1⊗A_α, a⊗b ↦ (1_1⊗a)Δ_{1,α}(b) = b_(1,1) ⊗ a b_(2,α)."""
    f = h.field
    e = h.group.identity
    n = h.n(alpha)
    n1 = h.n(e)
    return (Matrix.identity(f, n1).kron(h.mult[alpha])
            @ flip(f, n, n1).kron(Matrix.identity(f, n))
            @ Matrix.identity(f, n).kron(h.comult[(e, alpha)]))


def r_inv(h: HopfPiCoalgebra, alpha: int) -> Matrix:
    """r_α^{-1} : A_α⊗A_1 → A_α⊗A_α, a⊗b ↦ a S_{α^{-1}}(b_(1,α^{-1})) ⊗ b_(2,α)."""
    f = h.field
    g = h.group
    n = h.n(alpha)
    ai = g.inv(alpha)
    inner = h.antipode[ai].kron(Matrix.identity(f, n)) @ h.comult[(ai, alpha)]
    return h.mult[alpha].kron(Matrix.identity(f, n)) @ Matrix.identity(f, n).kron(inner)


def t_inv(h: HopfPiCoalgebra, alpha: int) -> Matrix:
    """t_α^{-1} : A_1⊗A_α → A_α⊗A_α, a⊗b ↦ b S_α^{-1}(a_(2,α^{-1})) ⊗ a_(1,α).

    Uses the inverse matrix of S_α (which the antipode axiom at α^{-1}
    makes a two-sided inverse of t_α); S_{α^{-1}} itself works only when
    the antipode family is involutive.
    """
    f = h.field
    g = h.group
    n = h.n(alpha)
    step1 = h.comult[(alpha, g.inv(alpha))].kron(Matrix.identity(f, n))
    step2 = Matrix.identity(f, n).kron(h.antipode_inv(alpha).kron(Matrix.identity(f, n)))
    perm = (Matrix.identity(f, n).kron(flip(f, n, n))) @ flip(f, n * n, n)
    step4 = h.mult[alpha].kron(Matrix.identity(f, n))
    return step4 @ perm @ step2 @ step1


# ---------------------------------------------------------------------------
# right ideals of A_1 inside ker ε


class RightIdeal:
    """A right ideal of A_1 contained in ker ε, canonical basis."""

    def __init__(self, h: HopfPiCoalgebra, subspace: Subspace, check: bool = True):
        self.h = h
        self.subspace = subspace
        if check:
            _validate_right_ideal(h, subspace)

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def __eq__(self, other):
        return isinstance(other, RightIdeal) and self.subspace == other.subspace

    def __hash__(self):
        return hash(self.subspace)

    def __repr__(self):
        return f"RightIdeal(dim {self.dim})"


def _validate_right_ideal(h: HopfPiCoalgebra, sub: Subspace) -> None:
    e = h.group.identity
    n1 = h.n(e)
    if sub.ambient_dim != n1:
        raise DimensionMismatch("ideal must live in A_1")
    ker_eps = h.counit_kernel()
    for v in sub.basis:
        if not ker_eps.contains(v):
            raise NotInKernelOfCounit(
                f"generator {h.render_element(e, v)} has ε = "
                f"{h.field.render(h.counit.apply(v)[0])}")
    for v in sub.basis:
        for j in range(n1):
            prod = h.mult[e].apply(vec_kron(h.field, v, unit_vec(h.field, n1, j)))
            if not sub.contains(prod):
                raise NotARightIdeal(
                    f"({h.render_element(e, v)})·{h.basis_name(e, j)} leaves the span")


def right_ideal_from_generators(h: HopfPiCoalgebra, gens) -> RightIdeal:
    """Smallest right-multiplication-closed subspace containing `gens`.

    Fixed-point iteration: adjoin gen·(basis of A_1) until the dimension
    stabilises.  ker ε is a right ideal (ε is an algebra map), so the
    result stays inside it whenever the generators do.
    """
    f = h.field
    e = h.group.identity
    n1 = h.n(e)
    ker_eps = h.counit_kernel()
    for gvec in gens:
        if len(gvec) != n1:
            raise DimensionMismatch("generator of wrong length")
        if not ker_eps.contains(tuple(gvec)):
            raise NotInKernelOfCounit(
                f"generator {h.render_element(e, gvec)} has nonzero counit")
    span = Subspace.from_spanning(f, n1, [tuple(gv) for gv in gens])
    while True:
        new_vecs = list(span.basis)
        for v in span.basis:
            for j in range(n1):
                new_vecs.append(h.mult[e].apply(vec_kron(f, v, unit_vec(f, n1, j))))
        grown = Subspace.from_spanning(f, n1, new_vecs)
        if grown.dim == span.dim:
            return RightIdeal(h, span)
        span = grown


def zero_ideal(h: HopfPiCoalgebra) -> RightIdeal:
    return RightIdeal(h, Subspace.zero_space(h.field, h.n(h.group.identity)))


# ---------------------------------------------------------------------------
# calculi


class Fodc:
    """A first-order differential calculus Γ = A²/N with d = Π ∘ D.

    Holds, per grading α: the kernel N_α (ambient coordinates), the
    quotient Γ_α with its canonical section, d_α, and the two module
    actions on Γ_α.  `ideal`/`side` record how N was built, when it was.
    """

    def __init__(self, h: HopfPiCoalgebra, kernels: list[Subspace],
                 ideal: RightIdeal | None = None, side: str | None = None,
                 asq: UniversalBimodule | None = None, validate: bool = True):
        self.h = h
        self.asq = asq or universal_bimodule(h)
        self.kernels = list(kernels)
        self.ideal = ideal
        self.side = side
        f = h.field
        g = h.group

        if len(self.kernels) != g.order:
            raise DimensionMismatch("one kernel subspace per grading required")
        for a in g.elements():
            if self.kernels[a].ambient_dim != h.n(a) ** 2:
                raise DimensionMismatch(f"kernel at {a} has wrong ambient dimension")
            if not self.kernels[a].le(self.asq.sub[a]):
                raise CodomainViolation(f"N_{a} is not contained in A²_{a}")
        if validate:
            self._check_sub_bimodule()

        self.nsub: list[Subspace] = []
        self.quot = []
        self.lift: list[Matrix] = []   # Γ_α → ambient A_α⊗A_α (canonical section)
        self.drop: list[Matrix] = []   # A²_α (ambient) → Γ_α
        self.d: list[Matrix] = []
        self.left: list[Matrix] = []
        self.right: list[Matrix] = []
        for a in g.elements():
            n = h.n(a)
            sub = self.asq.sub[a]
            in_coords = Subspace.from_spanning(
                f, sub.dim, [sub.coords(v) for v in self.kernels[a].basis])
            self.nsub.append(in_coords)
            q = quotient(sub.dim, in_coords)
            self.quot.append(q)
            lift = sub.inclusion_matrix() @ q.section
            drop = q.projection @ sub.coords_matrix()
            self.lift.append(lift)
            self.drop.append(drop)
            self.d.append(drop @ self.asq.D[a])
            eye = Matrix.identity(f, n)
            self.left.append(drop @ self.asq.left_action_ambient(a) @ eye.kron(lift))
            self.right.append(drop @ self.asq.right_action_ambient(a) @ lift.kron(eye))

    def _check_sub_bimodule(self):
        h = self.h
        f = h.field
        for a in h.group.elements():
            n = h.n(a)
            la = self.asq.left_action_ambient(a)
            ra = self.asq.right_action_ambient(a)
            for w in self.kernels[a].basis:
                for i in range(n):
                    ei = unit_vec(f, n, i)
                    if not self.kernels[a].contains(la.apply(vec_kron(f, ei, w))):
                        raise CodomainViolation(
                            f"N_{a} not closed under the left action")
                    if not self.kernels[a].contains(ra.apply(vec_kron(f, w, ei))):
                        raise CodomainViolation(
                            f"N_{a} not closed under the right action")

    def dim(self, alpha: int) -> int:
        return self.quot[alpha].dim

    @property
    def gamma_dims(self) -> list[int]:
        return [self.dim(a) for a in self.h.group.elements()]

    # -- verifications -------------------------------------------------------

    def to_bimodule(self, verify: bool = True):
        """The covariant-bimodule view of Γ, with whichever coactions hold.

        Δ^l is attached iff the left containment Φ^l(N) ⊆ A⊗N holds,
        Δ^r iff the right one does; NotCovariant if neither.
        """
        from .structure import CovariantBimodule

        delta_l = _all_delta_l(self) if check_left_covariant(self).ok else None
        delta_r = _all_delta_r(self) if check_right_covariant(self).ok else None
        if delta_l is None and delta_r is None:
            raise NotCovariant("calculus is neither left nor right covariant")
        return CovariantBimodule(self.h, self.gamma_dims, self.left, self.right,
                                 delta_l=delta_l, delta_r=delta_r, verify=verify)

    def leibniz_report(self) -> VerificationReport:
        """d(ab) = d(a)b + a d(b) as a matrix identity per grading."""
        h = self.h
        f = h.field
        report = VerificationReport()
        for a in h.group.elements():
            n = h.n(a)
            eye = Matrix.identity(f, n)
            lhs = self.d[a] @ h.mult[a]
            rhs = self.right[a] @ self.d[a].kron(eye) + self.left[a] @ eye.kron(self.d[a])
            if lhs != rhs:
                for j in range(lhs.cols):
                    if lhs.col(j) != rhs.col(j):
                        report.extend([Violation("leibniz", (a,), j, "d(ab) ≠ d(a)b + a d(b)")])
        return report

    def surjectivity_report(self) -> VerificationReport:
        """Every ρ ∈ Γ_α is a combination of a·d(b) over basis pairs."""
        h = self.h
        f = h.field
        report = VerificationReport()
        for a in h.group.elements():
            n = h.n(a)
            vecs = []
            for i in range(n):
                ei = unit_vec(f, n, i)
                for j in range(n):
                    vecs.append(self.left[a].apply(vec_kron(f, ei, self.d[a].col(j))))
            span = Subspace.from_spanning(f, self.dim(a), vecs)
            if span.dim != self.dim(a):
                report.extend([Violation("surjectivity", (a,), None,
                                         f"span of a·d(b) has dim {span.dim} < {self.dim(a)}")])
        return report


def universal_calculus(h: HopfPiCoalgebra) -> Fodc:
    """Γ = A² itself (N = 0), the universal calculus."""
    f = h.field
    kernels = [Subspace.zero_space(f, h.n(a) ** 2) for a in h.group.elements()]
    return Fodc(h, kernels, ideal=zero_ideal(h), side="left", validate=False)


def calculus_from_ideal(h: HopfPiCoalgebra, ideal: RightIdeal) -> Fodc:
    """Left covariant calculus with N_α = r_α^{-1}(A_α ⊗ R)."""
    f = h.field
    kernels = []
    for a in h.group.elements():
        rinv = r_inv(h, a)
        domain = Subspace.full(f, h.n(a)).tensor(ideal.subspace)
        kernels.append(Subspace.from_spanning(
            f, h.n(a) ** 2, [rinv.apply(v) for v in domain.basis]))
    return Fodc(h, kernels, ideal=ideal, side="left")


def calculus_from_ideal_right(h: HopfPiCoalgebra, ideal: RightIdeal) -> Fodc:
    """Right covariant calculus with N_α = t_α^{-1}(R ⊗ A_α)."""
    f = h.field
    kernels = []
    for a in h.group.elements():
        tinv = t_inv(h, a)
        domain = ideal.subspace.tensor(Subspace.full(f, h.n(a)))
        kernels.append(Subspace.from_spanning(
            f, h.n(a) ** 2, [tinv.apply(v) for v in domain.basis]))
    return Fodc(h, kernels, ideal=ideal, side="right")


def calculus_from_kernels(h: HopfPiCoalgebra, kernels: list[Subspace]) -> Fodc:
    """Calculus from an explicit sub-bimodule family N ⊆ A² (validated)."""
    return Fodc(h, kernels)


# ---------------------------------------------------------------------------
# covariance


def check_left_covariant(calc: Fodc) -> VerificationReport:
    """Φ^l(N_{αβ}) ⊆ A_α ⊗ N_β for all α, β; witnesses on failure."""
    h = calc.h
    g = h.group
    f = h.field

    def one_pair(pair):
        a, b = pair
        ab = g.mul(a, b)
        amb = phi_l(h, a, b)
        target = Subspace.full(f, h.n(a)).tensor(calc.kernels[b])
        out = []
        for j, w in enumerate(calc.kernels[ab].basis):
            if not target.contains(amb.apply(w)):
                out.append(Violation("left-covariance", (a, b), j,
                                     "Φ^l maps an N basis vector outside A⊗N"))
        return out

    pairs = [(a, b) for a in g.elements() for b in g.elements()]
    report = VerificationReport()
    for chunk in parallel_map(one_pair, pairs):
        report.extend(chunk)
    return report


def check_right_covariant(calc: Fodc) -> VerificationReport:
    """Φ^r(N_{αβ}) ⊆ N_α ⊗ A_β for all α, β; witnesses on failure."""
    h = calc.h
    g = h.group
    f = h.field

    def one_pair(pair):
        a, b = pair
        ab = g.mul(a, b)
        amb = phi_r(h, a, b)
        target = calc.kernels[a].tensor(Subspace.full(f, h.n(b)))
        out = []
        for j, w in enumerate(calc.kernels[ab].basis):
            if not target.contains(amb.apply(w)):
                out.append(Violation("right-covariance", (a, b), j,
                                     "Φ^r maps an N basis vector outside N⊗A"))
        return out

    pairs = [(a, b) for a in g.elements() for b in g.elements()]
    report = VerificationReport()
    for chunk in parallel_map(one_pair, pairs):
        report.extend(chunk)
    return report


def induced_delta_l(calc: Fodc, alpha: int, beta: int) -> Matrix:
    """Δ^l_{α,β} : Γ_{αβ} → A_α ⊗ Γ_β descended from Φ^l.

    Requires left covariance (else the map is not well defined on the
    quotient); raises NotCovariant with the witness report.
    """
    report = check_left_covariant(calc)
    if not report.ok:
        raise NotCovariant(f"not left covariant: {report.violations[0].render()}")
    h = calc.h
    ab = h.group.mul(alpha, beta)
    return (Matrix.identity(h.field, h.n(alpha)).kron(calc.drop[beta])
            @ phi_l(h, alpha, beta) @ calc.lift[ab])


def induced_delta_r(calc: Fodc, alpha: int, beta: int) -> Matrix:
    """Δ^r_{α,β} : Γ_{αβ} → Γ_α ⊗ A_β descended from Φ^r."""
    report = check_right_covariant(calc)
    if not report.ok:
        raise NotCovariant(f"not right covariant: {report.violations[0].render()}")
    h = calc.h
    ab = h.group.mul(alpha, beta)
    return (calc.drop[alpha].kron(Matrix.identity(h.field, h.n(beta)))
            @ phi_r(h, alpha, beta) @ calc.lift[ab])


def _all_delta_l(calc: Fodc) -> dict:
    h = calc.h
    out = {}
    for a in h.group.elements():
        for b in h.group.elements():
            ab = h.group.mul(a, b)
            out[(a, b)] = (Matrix.identity(h.field, h.n(a)).kron(calc.drop[b])
                           @ phi_l(h, a, b) @ calc.lift[ab])
    return out


def _all_delta_r(calc: Fodc) -> dict:
    h = calc.h
    out = {}
    for a in h.group.elements():
        for b in h.group.elements():
            ab = h.group.mul(a, b)
            out[(a, b)] = (calc.drop[a].kron(Matrix.identity(h.field, h.n(b)))
                           @ phi_r(h, a, b) @ calc.lift[ab])
    return out


def check_bicovariant(calc: Fodc) -> VerificationReport:
    """Left + right covariance + the coaction compatibility law.

    The compatibility (Δ^l⊗id)Δ^r = (id⊗Δ^r)Δ^l is checked on the
    induced maps for every grading triple once both containments hold.
    """
    report = check_left_covariant(calc).merge(check_right_covariant(calc))
    if not report.ok:
        return report
    h = calc.h
    f = h.field
    g = h.group
    dl = _all_delta_l(calc)
    dr = _all_delta_r(calc)
    for a in g.elements():
        for b in g.elements():
            for c in g.elements():
                ab = g.mul(a, b)
                bc = g.mul(b, c)
                lhs = dl[(a, b)].kron(Matrix.identity(f, h.n(c))) @ dr[(ab, c)]
                rhs = Matrix.identity(f, h.n(a)).kron(dr[(b, c)]) @ dl[(a, bc)]
                if lhs != rhs:
                    report.extend([Violation("bicovariance-compatibility", (a, b, c), None,
                                             "(Δ^l⊗id)Δ^r ≠ (id⊗Δ^r)Δ^l")])
    return report


def spot_check_implication(calc: Fodc) -> VerificationReport:
    """The literal implication form of covariance on a basis of N.

    For q = Σ a_k⊗b_k ∈ N_{αβ} (so Σ a_k d b_k = 0) the image
    Σ Δ(a_k)(id⊗d_β)Δ(b_k) — which is (id⊗Π_β)Φ^l(q) — must vanish,
    and symmetrically for the right side.
    """
    h = calc.h
    g = h.group
    f = h.field
    report = VerificationReport()
    for a in g.elements():
        for b in g.elements():
            ab = g.mul(a, b)
            left_map = Matrix.identity(f, h.n(a)).kron(calc.drop[b]) @ phi_l(h, a, b)
            right_map = calc.drop[a].kron(Matrix.identity(f, h.n(b))) @ phi_r(h, a, b)
            for j, w in enumerate(calc.kernels[ab].basis):
                lv = left_map.apply(w)
                if any(x != f.zero() for x in lv):
                    report.extend([Violation("left-covariance-implication", (a, b), j,
                                             "Σ Δ(a_k)(id⊗d)Δ(b_k) ≠ 0 on N")])
                rv = right_map.apply(w)
                if any(x != f.zero() for x in rv):
                    report.extend([Violation("right-covariance-implication", (a, b), j,
                                             "Σ Δ(a_k)(d⊗id)Δ(b_k) ≠ 0 on N")])
    return report


# ---------------------------------------------------------------------------
# the adjoint coaction and ad-invariance


def ad_map(h: HopfPiCoalgebra, alpha: int) -> Matrix:
    """ad_α = t_α ∘ r_α^{-1} ∘ (1_α ⊗ ·) : A_1 → A_1 ⊗ A_α.

    Computed both as that composite and by the Sweedler expansion
    a ↦ a_(2,1) ⊗ S_{α^{-1}}(a_(1,α^{-1})) a_(3,α); the two must agree
    bit-exactly (InternalMismatch flags an implementation bug).
    """
    f = h.field
    g = h.group
    e = g.identity
    n1 = h.n(e)
    na = h.n(alpha)
    ai = g.inv(alpha)

    insert = h.unit_col(alpha).kron(Matrix.identity(f, n1))
    composite = t_map(h, alpha) @ r_inv(h, alpha) @ insert

    legs = h.comult_path((ai, e, alpha))
    applied = kron_all(h.antipode[ai], Matrix.identity(f, n1), Matrix.identity(f, na)) @ legs
    perm = flip(f, na, n1).kron(Matrix.identity(f, na)) @ applied
    sweedler = Matrix.identity(f, n1).kron(h.mult[alpha]) @ perm

    if composite != sweedler:
        raise InternalMismatch(f"ad_{alpha}: composite and Sweedler forms disagree")
    return composite


def check_ad_invariant(h: HopfPiCoalgebra, ideal: RightIdeal) -> VerificationReport:
    """ad_α(R) ⊆ R ⊗ A_α for every α, on basis images."""
    f = h.field
    report = VerificationReport()
    for a in h.group.elements():
        ad = ad_map(h, a)
        target = ideal.subspace.tensor(Subspace.full(f, h.n(a)))
        for j, v in enumerate(ideal.subspace.basis):
            if not target.contains(ad.apply(v)):
                report.extend([Violation("ad-invariance", (a,), j,
                                         "ad maps an ideal basis vector outside R⊗A")])
    return report


def ideal_from_calculus(calc: Fodc) -> RightIdeal:
    """Recover R from a left covariant calculus: second-leg span of r_1(N_1).

    Round-trip guarantee: rebuilding the calculus from the recovered
    ideal reproduces every N_α bit-exactly (canonical bases).
    """
    report = check_left_covariant(calc)
    if not report.ok:
        raise NotCovariant(f"not left covariant: {report.violations[0].render()}")
    h = calc.h
    f = h.field
    e = h.group.identity
    n1 = h.n(e)
    r1 = r_map(h, e)
    rows = []
    for w in calc.kernels[e].basis:
        img = r1.apply(w)  # lives in A_1 ⊗ A_1
        for i in range(n1):
            rows.append(tuple(img[i * n1 + j] for j in range(n1)))
    return RightIdeal(h, Subspace.from_spanning(f, n1, rows))


# ---------------------------------------------------------------------------
# exhaustive ideal enumeration (small prime fields)

MAX_ENUM_PRIME = 11
MAX_ENUM_KER_DIM = 3


def _all_rref_subspaces(field: PrimeField, dim: int):
    """All subspaces of F_p^dim as canonical RREF bases, by dimension.

    Enumerates pivot-column choices and the free entries; complete at
    the bounded desk scale this package targets.
    """
    from itertools import combinations, product

    p = field.p
    yield Subspace.zero_space(field, dim)
    for k in range(1, dim + 1):
        for pivots in combinations(range(dim), k):
            free_positions = []
            for r in range(k):
                for c in range(pivots[r] + 1, dim):
                    if c not in pivots:
                        free_positions.append((r, c))
            for values in product(range(p), repeat=len(free_positions)):
                rows = [[0] * dim for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = 1
                for (r, c), v in zip(free_positions, values):
                    rows[r][c] = v
                yield Subspace(field, dim, tuple(tuple(r) for r in rows), tuple(pivots))


def enumerate_right_ideals(h: HopfPiCoalgebra, max_dim: int | None = None) -> list[RightIdeal]:
    """All right ideals R ⊆ ker ε, by exhaustive echelon-subspace search.

    Requires a prime field with p ≤ 11 and dim ker ε ≤ 3 (complete at
    desk scale, infeasible generally); deterministic order: by dimension,
    then by the echelon parameters.
    """
    f = h.field
    if not isinstance(f, PrimeField):
        raise UnsupportedField("ideal enumeration needs a small prime field")
    if f.p > MAX_ENUM_PRIME:
        raise TooLarge(f"p = {f.p} exceeds the enumeration bound {MAX_ENUM_PRIME}")
    ker_eps = h.counit_kernel()
    k = ker_eps.dim
    if k > MAX_ENUM_KER_DIM:
        raise TooLarge(f"dim ker ε = {k} exceeds the enumeration bound {MAX_ENUM_KER_DIM}")
    e = h.group.identity
    n1 = h.n(e)
    incl = ker_eps.inclusion_matrix()
    found = []
    for small in _all_rref_subspaces(f, k):
        if max_dim is not None and small.dim > max_dim:
            continue
        lifted = Subspace.from_spanning(f, n1, [incl.apply(v) for v in small.basis])
        closed = True
        for v in lifted.basis:
            for j in range(n1):
                if not lifted.contains(h.mult[e].apply(vec_kron(f, v, unit_vec(f, n1, j)))):
                    closed = False
                    break
            if not closed:
                break
        if closed:
            found.append(RightIdeal(h, lifted, check=False))
    return found
