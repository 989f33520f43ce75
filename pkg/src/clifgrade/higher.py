"""Higher gradings: F(D+ 2^n, D- 2^n) rewritten as a matrix algebra over a larger Clifford algebra.

The chain of isomorphisms is

    A(D)  --lemma1-->  Cl(2,0)^(x)k (x) F (D)  --rep-->  F(D 2^k)

where every Cl(2,0) factor is sent to R(2) by the representation
``e1 -> diag(1,-1)``, ``e2 -> [[0,1],[1,0]]``. A factor whose adjoint is
reversion ("+") corresponds to the plain transpose, a factor with ``dag(1,0)``
("-") to the transpose twisted by ``I_{1,1}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Optional, Sequence

from .classification import REP_R2, row
from .clifford import (
    AdjointSpec,
    CliffordElement,
    CliffordError,
    Signature,
    adjoint,
    blade_adjoint_sign,
    classify_clifford,
    conjugation,
    resolve_adjoint,
    reversion,
    tensor_product,
)
from .lie import (
    ClosureError,
    LieAlgebraBasis,
    aut_basis,
    effective_grading,
    same_span,
    structure_constants,
)
from .linalg import EchelonBasis, rank
from .matrix import GradedMatrix, MetricSignature, kron, matrix_adjoint
from .report import Certificate

_CL20 = Signature.of(2, 0)
_E1 = CliffordElement.from_blade(_CL20, 0b01)
_E2 = CliffordElement.from_blade(_CL20, 0b10)
_E12 = CliffordElement.from_blade(_CL20, 0b11)

PLUS_FACTOR = AdjointSpec(2, 0)
MINUS_FACTOR = AdjointSpec(1, 0)


@dataclass
class IsomorphismMap:
    """Algebra map fixed by the images of the source generators."""

    source: Signature
    target: Signature
    images: tuple[CliffordElement, ...]
    _cache: dict[int, CliffordElement] = field(default_factory=dict, repr=False)

    def blade_image(self, b: int) -> CliffordElement:
        if b not in self._cache:
            self.source.check_blade(b)
            out = CliffordElement.scalar(self.target, 1)
            i = 0
            while b >> i:
                if b >> i & 1:
                    out = out * self.images[i]
                i += 1
            self._cache[b] = out
        return self._cache[b]

    def __call__(self, x: CliffordElement) -> CliffordElement:
        if x.sig != self.source:
            raise CliffordError(f"map defined on {self.source}, got {x.sig}")
        out = CliffordElement.zero(self.target)
        for b, c in x.terms.items():
            out = out + self.blade_image(b).scale(c)
        return out

    def relation_failures(self) -> list[tuple[int, int]]:
        """Generator pairs whose images violate the source's (anti)commutation or squares."""
        gens = [CliffordElement.gen(self.source, i) for i in self.source.generators()]
        bad = []
        for i, fi in enumerate(self.images):
            for j in range(i, len(self.images)):
                fj = self.images[j]
                if i == j:
                    ok = fi * fi == CliffordElement.scalar(self.target, (gens[i] * gens[i]).terms[0])
                else:
                    flip = gens[i] * gens[j] == -(gens[j] * gens[i])
                    ok = fi * fj == (-(fj * fi) if flip else fj * fi)
                if not ok:
                    bad.append((i + 1, j + 1))
        return bad

    def image_rank(self) -> int:
        return rank(self.blade_image(b).terms for b in self.source.blades())


def _lift(step_images, p, kind):
    """One application of Cl(2,0) (x) Cl(P,Q) = Cl(P+1,Q+1), new factor in front."""
    one = CliffordElement.scalar(step_images[0].sig, 1) if step_images else None
    lifted = [tensor_product(_E1, f) for f in step_images]
    e2, e12 = tensor_product(_E2, one), tensor_product(_E12, one)
    pos, neg = lifted[:p], lifted[p:]
    # fixed generators first within each sign class, so the induced adjoint is dag(m+, m-)
    if kind == "+":
        return [e2] + pos + neg + [e12]
    return pos + [e2] + [e12] + neg


def lemma1_embed(n: int, sig: Signature, kinds: Optional[Sequence[str]] = None,
                 verify: bool = True) -> IsomorphismMap:
    """``Cl(p+n, q+n) -> Cl(2,0)^(x)n (x) Cl(p,q)`` (complex algebras carry the C factor along).

    ``kinds[t]`` is ``"+"`` or ``"-"`` for the t-th leading Cl(2,0) factor and fixes
    the generator order of the source: with tensor adjoint ``dag(2,0)`` on "+"
    factors and ``dag(1,0)`` on "-" factors, the inherited source adjoint is
    ``dag(a+ + #plus, a- + #minus)``.
    """
    kinds = tuple(kinds) if kinds is not None else ("+",) * n
    if len(kinds) != n or any(k not in "+-" for k in kinds):
        raise CliffordError(f"kinds {kinds!r} must be {n} of '+'/'-'")
    p, q = sig.d_plus, sig.d_minus
    inner = Signature.of(p, q)
    if p + q == 0:
        # Cl(0,0) has no generators; use a one-element seed so _lift knows the signature
        images = []
        cur = inner
    else:
        images = [CliffordElement.gen(inner, i) for i in inner.generators()]
        cur = inner
    P = p
    for kind in reversed(kinds):
        if not images:
            one = CliffordElement.scalar(cur, 1)
            e2, e12 = tensor_product(_E2, one), tensor_product(_E12, one)
            images = [e2, e12]
        else:
            images = _lift(images, P, kind)
        cur = _CL20.tensor(cur)
        P += 1
    if sig.complex_flag:
        source = Signature.of(p + n, q + n, complex_flag=True)
        target = Signature(((2, 0),) * n + ((0, 1), (p, q)))
        low = 2 * n

        def move(x):
            return CliffordElement(target, {
                (m & ((1 << low) - 1)) | ((m >> low) << (low + 1)): c for m, c in x.terms.items()
            })

        images = [CliffordElement.from_blade(target, 1 << low)] + [move(x) for x in images]
    elif sig.is_real:
        source = Signature.of(p + n, q + n)
        target = Signature(((2, 0),) * n + ((p, q),))
        images = [CliffordElement(target, x.terms) for x in images]
    else:
        raise CliffordError(f"lemma1_embed needs a real or complex Clifford algebra, got {sig}")
    iso = IsomorphismMap(source, target, tuple(images))
    if verify:
        bad = iso.relation_failures()
        if bad:
            raise ClosureError(f"Clifford relations fail for generator pairs {bad}")
        if iso.image_rank() != source.dim:
            raise ClosureError("blade images are not linearly independent")
    return iso


@lru_cache(maxsize=256)
def cached_embed(n: int, sig: Signature, kinds: str) -> IsomorphismMap:
    return lemma1_embed(n, sig, kinds)


def table2_adjoint_map(n_plus: int, n_minus: int, inner: AdjointSpec,
                       sig: Optional[Signature] = None) -> AdjointSpec:
    """Adjoint of the higher Clifford algebra equivalent to
    ``dag(2,0)^(x)n_plus (x) dag(1,0)^(x)n_minus (x) inner``.

    For a complex base the result is read as ``dag(a + n_plus + n_minus)`` through
    its total ``a_plus + a_minus``. With ``sig`` given, the equivalence is checked
    blade by blade through :func:`lemma1_embed`.
    """
    if n_plus < 0 or n_minus < 0:
        raise CliffordError("negative tensor power")
    out = AdjointSpec(inner.a_plus + n_plus, inner.a_minus + n_minus)
    if sig is not None:
        kinds = "+" * n_plus + "-" * n_minus
        iso = cached_embed(n_plus + n_minus, sig, kinds)
        parts = (PLUS_FACTOR,) * n_plus + (MINUS_FACTOR,) * n_minus + resolve_adjoint(sig, inner)
        for b in iso.source.blades():
            img = iso.blade_image(b)
            lhs = adjoint(img, parts)
            rhs = img.scale(blade_adjoint_sign(b, out, iso.source))
            if lhs != rhs:
                raise ClosureError(f"adjoint mismatch on source blade {b:#b}")
    return out


def default_adjoint_kind(field_name: str) -> str:
    r = row(field_name)
    kinds = [k for k in ("rev", "conj") if r.la_name(k)]
    if len(kinds) != 1:
        raise CliffordError(f"field {field_name} has both adjoints; choose rev or conj")
    return kinds[0]


@dataclass(frozen=True)
class HigherPresentation:
    base_field: str
    adjoint_kind: str
    n: int
    D_plus: int
    D_minus: int
    A_signature: Signature
    A_adjoint: AdjointSpec
    split_case: bool
    expected_rank: int

    @property
    def base_signature(self) -> Signature:
        return row(self.base_field).clifford_signature

    @property
    def base_adjoint(self) -> AdjointSpec:
        return row(self.base_field).adjoint(self.adjoint_kind)

    @property
    def reduced_metric(self) -> MetricSignature:
        return MetricSignature(self.D_plus, 0 if self.split_case else self.D_minus)

    @property
    def full_metric(self) -> MetricSignature:
        return MetricSignature(self.D_plus << self.n, self.D_minus << self.n)

    @property
    def kinds(self) -> str:
        return "+" * self.n + ("-" if self.split_case else "")

    def to_json(self) -> dict:
        return {
            "field": self.base_field,
            "adjoint": self.adjoint_kind,
            "n": self.n,
            "full_metric": [self.full_metric.d_plus, self.full_metric.d_minus],
            "reduced_metric": [self.reduced_metric.d_plus, self.reduced_metric.d_minus],
            "A": str(self.A_signature),
            "A_class": str(classify_clifford(self.A_signature)),
            "A_adjoint": [self.A_adjoint.a_plus, self.A_adjoint.a_minus],
            "split_case": self.split_case,
            "expected_grading_rank": self.expected_rank,
        }


def prop2(field_name: str, d_plus: int, d_minus: int, n: int,
          adjoint_kind: Optional[str] = None) -> HigherPresentation:
    r = row(field_name)
    kind = adjoint_kind or default_adjoint_kind(field_name)
    if r.la_name(kind) is None:
        raise CliffordError(f"table entry for {field_name}/{kind} is blank")
    if n < 0:
        raise CliffordError("n must be >= 0")
    MetricSignature(d_plus, d_minus)
    split = d_plus == d_minus
    k = n + int(split)
    sig = r.clifford_signature
    a = r.adjoint(kind)
    A = Signature.of(sig.d_plus + k, sig.d_minus + k, complex_flag=sig.complex_flag)
    A_adj = AdjointSpec(a.a_plus + n, a.a_minus + int(split))
    return HigherPresentation(field_name, kind, n, d_plus, d_minus, A, A_adj, split,
                              r.grading_rank + 2 * k)


class PresentationIso:
    """Explicit algebra isomorphism ``A(reduced) -> F(full)`` for a presentation."""

    def __init__(self, hp: HigherPresentation):
        self.hp = hp
        k = len(hp.kinds)
        self.k = k
        self.psi = cached_embed(k, hp.base_signature, hp.kinds)
        if self.psi.source != hp.A_signature:
            raise ClosureError(f"lemma1 source {self.psi.source} != {hp.A_signature}")
        self.F = hp.base_signature
        signs = list(hp.reduced_metric.diag)
        for kind in hp.kinds:
            w = (1, 1) if kind == "+" else (1, -1)
            signs = [s * t for s in signs for t in w]
        # stable order: positive metric entries first
        self.perm = sorted(range(len(signs)), key=lambda a: signs[a] < 0)
        npos = sum(1 for s in signs if s > 0)
        self.metric = MetricSignature(npos, len(signs) - npos)
        if self.metric != hp.full_metric:
            raise ClosureError(f"metric factorization gave {self.metric}, want {hp.full_metric}")
        self.alt_signs = tuple(signs)
        self._rep_cache: dict[int, tuple] = {}

    def _rep(self, beta: int):
        if beta not in self._rep_cache:
            m = ((Fraction(1),),)
            for t in range(self.k):
                m = kron(m, REP_R2[(beta >> 2 * t) & 3])
            self._rep_cache[beta] = m
        return self._rep_cache[beta]

    def __call__(self, x: GradedMatrix) -> GradedMatrix:
        if x.sig != self.hp.A_signature or x.metric != self.hp.reduced_metric:
            raise CliffordError("matrix is not over the presentation's A(D)")
        d, s = x.dim, 1 << self.k
        size = d * s
        low = 2 * self.k
        acc = [[{} for _ in range(size)] for _ in range(size)]
        for r in range(d):
            for c in range(d):
                y = self.psi(x.entries[r][c])
                for m, coef in y.terms.items():
                    beta, f = m & ((1 << low) - 1), m >> low
                    rep = self._rep(beta)
                    for a in range(s):
                        for b in range(s):
                            v = rep[a][b]
                            if v:
                                cell = acc[r * s + a][c * s + b]
                                cell[f] = cell.get(f, 0) + coef * v
        p = self.perm
        rows = [[CliffordElement(self.F, acc[p[i]][p[j]]) for j in range(size)] for i in range(size)]
        return GradedMatrix(self.F, self.metric, rows)


def verify_higher_presentation(hp: HigherPresentation) -> Certificate:
    cert = Certificate(
        f"{hp.base_field}({hp.full_metric.d_plus},{hp.full_metric.d_minus}) "
        f"= {hp.A_signature}{hp.reduced_metric} with {hp.A_adjoint}"
    )
    a_basis = aut_basis(hp.A_signature, hp.A_adjoint, hp.reduced_metric)
    f_basis = aut_basis(hp.base_signature, hp.base_adjoint, hp.full_metric)
    cert.add("dimension", a_basis.dimension == f_basis.dimension,
             f"A-side {a_basis.dimension}, F-side {f_basis.dimension}")

    a_rank = effective_grading(a_basis).rank
    reduced = hp.reduced_metric.dim == 1 and a_rank < hp.expected_rank
    if hp.reduced_metric.dim == 1:
        cert.add("grading_rank", a_rank <= hp.expected_rank,
                 f"{a_rank} (expected {hp.expected_rank}" + (", reduced at D=1)" if reduced else ")"))
    else:
        cert.add("grading_rank", a_rank == hp.expected_rank, f"{a_rank} vs {hp.expected_rank}")

    iso = PresentationIso(hp)
    images = [iso(x) for x in a_basis.elements]
    bad = [i for i, y in enumerate(images) if not (matrix_adjoint(y, hp.base_adjoint) + y).is_zero()]
    cert.add("images_in_aut", not bad, f"failing {bad}" if bad else "")
    img_basis = LieAlgebraBasis(images, [y.grade() for y in images], hp.base_signature,
                                hp.full_metric, hp.base_adjoint)
    cert.add("images_span_aut", same_span(img_basis, f_basis))

    bad = []
    d = hp.reduced_metric.dim
    for i in range(d):
        for j in range(d):
            for b in hp.A_signature.blades():
                x = GradedMatrix.unit(hp.A_signature, hp.reduced_metric, i, j,
                                      CliffordElement.from_blade(hp.A_signature, b))
                if iso(matrix_adjoint(x, hp.A_adjoint)) != matrix_adjoint(iso(x), hp.base_adjoint):
                    bad.append((i, j, b))
    cert.add("adjoint_intertwined", not bad, f"{len(bad)} failing units" if bad else "")

    try:
        sc_a = structure_constants(a_basis)
        sc_f = structure_constants(img_basis)
        match = sc_a == sc_f
    except (ClosureError, ValueError) as exc:
        match = False
        cert.add("structure_constants", False, str(exc))
    else:
        cert.add("structure_constants", match)
    cert.data.update(
        presentation=hp.to_json(),
        A_dimension=a_basis.dimension,
        F_dimension=f_basis.dimension,
        A_grading_rank=a_rank,
        F_grading_rank=effective_grading(f_basis).rank,
        reduced=reduced,
        structure_constants_match=match,
    )
    return cert


def metric_factorization(d_plus: int, d_minus: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``I_{D+,D-} (x) I_2^(x)n`` as a diagonal, next to ``I_{D+ 2^n, D- 2^n}``."""
    signs = list(MetricSignature(d_plus, d_minus).diag)
    for _ in range(n):
        signs = [s for s in signs for _ in range(2)]
    return tuple(signs), MetricSignature(d_plus << n, d_minus << n).diag


def remark2_certificate() -> Certificate:
    """Where a standard adjoint can replace the one produced by ``prop2``, and where it cannot."""
    cert = Certificate("standard-adjoint substitutions")

    hp = prop2("R", 1, 0, 1)
    ok = hp.A_signature == Signature.of(1, 1) and hp.A_adjoint == AdjointSpec(1, 0)
    cert.add("R(2)=Cl(1,1)dag(1,0)", ok and verify_higher_presentation(hp).passed)
    h2 = Signature.of(2, 0)
    dims = [(aut_basis(h2, reversion(h2), MetricSignature(d)).dimension,
             aut_basis(hp.A_signature, hp.A_adjoint, MetricSignature(d)).dimension,
             d * (2 * d - 1)) for d in (1, 2, 3)]
    cert.add("Cl(2,0)~ equivalent", all(a == b == c for a, b, c in dims), f"{dims}")

    hp = prop2("R", 1, 0, 2)
    cert.add("R(4)=Cl(2,2)dag(2,0)",
             hp.A_signature == Signature.of(2, 2) and hp.A_adjoint == AdjointSpec(2, 0)
             and verify_higher_presentation(hp).passed)
    c22, c40, c04 = (classify_clifford(Signature.of(*pq)) for pq in ((2, 2), (4, 0), (0, 4)))
    cert.add("no standard adjoint", c22 != c40 and c40 == c04, f"Cl(2,2)={c22}, Cl(4,0)={c40}, Cl(0,4)={c04}")

    for n in range(3):
        hp = prop2("2C", 1, 0, n, "conj")
        A = hp.A_signature
        standard = conjugation(A) if n % 2 == 0 else reversion(A)
        dims = [(aut_basis(A, hp.A_adjoint, MetricSignature(d)).dimension,
                 aut_basis(A, standard, MetricSignature(d)).dimension) for d in (1, 2)]
        cert.add(f"2C n={n} {'conj' if n % 2 == 0 else 'rev'}", all(a == b for a, b in dims), f"{dims}")
    return cert
