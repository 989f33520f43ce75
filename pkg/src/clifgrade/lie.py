"""Automorphism Lie algebras ``{L : L^dagger + L = 0}`` of matrix algebras over Clifford algebras."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .clifford import (
    AdjointLike,
    CliffordElement,
    Signature,
    blade_adjoint_sign,
    grade_mask,
    grade_of,
    resolve_adjoint,
)
from .linalg import EchelonBasis, Vector, gf2_basis, nullspace, rank
from .matrix import GradedMatrix, MetricSignature, bracket

__all__ = [
    "ClosureError", "LieAlgebraBasis", "StructureConstants", "GradingGroup",
    "blade_adjoint_sign", "aut_basis", "aut_basis_oracle", "structure_constants",
    "effective_grading", "same_span", "graded_closure_violations", "adjoint_by_reversal",
]


class ClosureError(RuntimeError):
    """A bracket fell outside the span of the basis (an implementation bug)."""


@dataclass
class LieAlgebraBasis:
    elements: list[GradedMatrix]
    grades: list[Optional[tuple[int, ...]]]
    sig: Signature
    metric: MetricSignature
    spec: Optional[AdjointLike] = None

    @property
    def dimension(self) -> int:
        return len(self.elements)

    def vectors(self) -> list[Vector]:
        return [x.coords() for x in self.elements]

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "grades": [list(g) if g is not None else None for g in self.grades],
            "basis": [x.to_json() for x in self.elements],
            "grading_rank": effective_grading(self).rank,
        }


def aut_basis(sig: Signature, spec: AdjointLike, metric: MetricSignature) -> LieAlgebraBasis:
    """Homogeneous basis built blade by blade.

    For blade ``gamma`` with adjoint sign ``sigma`` the component ``K = g M_gamma``
    is skew when ``sigma = +1`` and symmetric when ``sigma = -1``. Elements are
    listed by blade, then by upper-triangle position in row-major order.
    """
    parts = resolve_adjoint(sig, spec)
    g = metric.diag
    d = metric.dim
    elements, grades = [], []
    for b in sig.blades():
        sigma = blade_adjoint_sign(b, parts, sig)
        start = 1 if sigma == 1 else 0
        for i in range(d):
            for j in range(i + start, d):
                gen = CliffordElement.from_blade(sig, b)
                rows = [[0] * d for _ in range(d)]
                # M = g K, K = E_ij - sigma E_ji
                rows[i][j] = gen.scale(g[i])
                if i != j:
                    rows[j][i] = gen.scale(-sigma * g[j])
                elements.append(GradedMatrix(sig, metric, rows))
                grades.append(grade_of(b, sig))
    return LieAlgebraBasis(elements, grades, sig, metric, spec)


def _generator_sign(i: int, parts, sig: Signature) -> int:
    # case table for e_i^dagger, i global 1-based
    for off, (p, q), s in zip(sig.offsets, sig.factors, parts):
        if off < i <= off + p + q:
            k = i - off
            if k <= s.a_plus:
                return 1
            if k <= p:
                return -1
            if k <= p + s.a_minus:
                return 1
            return -1
    raise ValueError(f"generator {i} not in {sig}")


def adjoint_by_reversal(x: CliffordElement, spec: AdjointLike) -> CliffordElement:
    """Adjoint computed by multiplying the sign-changed generators in reverse order."""
    sig = x.sig
    parts = resolve_adjoint(sig, spec)
    out = CliffordElement.zero(sig)
    for b, c in x.terms.items():
        term = CliffordElement.scalar(sig, c)
        for i in reversed([k + 1 for k in range(sig.n) if b >> k & 1]):
            term = term * CliffordElement.gen(sig, i).scale(_generator_sign(i, parts, sig))
        out = out + term
    return out


def aut_basis_oracle(sig: Signature, spec: AdjointLike, metric: MetricSignature) -> LieAlgebraBasis:
    """Exact null space of ``X -> X^dagger + X`` over the full basis ``E_ij (x) gamma``."""
    parts = resolve_adjoint(sig, spec)
    d, n = metric.dim, sig.n
    g = metric.diag
    ncols = d * d << n
    rows: dict[int, Vector] = {}
    for col in range(ncols):
        pos, b = col >> n, col & ((1 << n) - 1)
        i, j = divmod(pos, d)
        unit = CliffordElement.from_blade(sig, b)
        # (g^-1 X^t g)_{ji} = g_j g_i X_ij^dagger for X = E_ij (x) b
        image = {col: Fraction(1)}
        dag = adjoint_by_reversal(unit, parts)
        for bb, c in dag.terms.items():
            key = ((j * d + i) << n) | bb
            image[key] = image.get(key, 0) + g[i] * g[j] * c
        for key, c in image.items():
            if c:
                rows.setdefault(key, {})[col] = c
    null = nullspace(rows.values(), ncols)
    elements = [GradedMatrix.from_coords(sig, metric, v) for v in null]
    return LieAlgebraBasis(elements, [x.grade() for x in elements], sig, metric, spec)


def same_span(a: LieAlgebraBasis, b: LieAlgebraBasis) -> bool:
    va, vb = a.vectors(), b.vectors()
    ra, rb = rank(va), rank(vb)
    return ra == rb == rank(va + vb)


@dataclass
class StructureConstants:
    """``[X_i, X_j] = sum_k c[i][j][k] X_k``."""

    c: list[list[list[Fraction]]]
    sparse: dict[tuple[int, int], dict[int, Fraction]] = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.c)

    def is_antisymmetric(self) -> bool:
        n = self.dimension
        return all(
            self.c[i][j][k] == -self.c[j][i][k]
            for i in range(n) for j in range(n) for k in range(n)
        )

    def _br(self, i: int, j: int) -> dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.sparse.get((i, j), {})
        return {k: -v for k, v in self.sparse.get((j, i), {}).items()}

    def jacobi_violations(self) -> list[tuple[int, int, int]]:
        """Triples ``i < j < k`` where the cyclic sum of double brackets is nonzero."""
        n = self.dimension
        bad = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total: dict[int, Fraction] = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for m, coef in self._br(a, b).items():
                            for l, v in self._br(m, c).items():
                                total[l] = total.get(l, 0) + coef * v
                    if any(total.values()):
                        bad.append((i, j, k))
        return bad

    def __eq__(self, other):
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return self.c == other.c


def _solver(basis: LieAlgebraBasis) -> EchelonBasis:
    eb = EchelonBasis(track=True)
    for v in basis.vectors():
        if not eb.add(v):
            raise ValueError("basis elements are linearly dependent")
    return eb


def structure_constants(basis: LieAlgebraBasis) -> StructureConstants:
    n = basis.dimension
    eb = _solver(basis)
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    sparse = {}
    for i in range(n):
        for j in range(i + 1, n):
            br = bracket(basis.elements[i], basis.elements[j])
            coef = eb.coefficients(br.coords())
            if coef is None:
                raise ClosureError(f"[X{i}, X{j}] is not in the span of the basis")
            sparse[(i, j)] = coef
            for k, v in coef.items():
                c[i][j][k] = v
                c[j][i][k] = -v
    return StructureConstants(c, sparse)


def graded_closure_violations(basis: LieAlgebraBasis, sc: StructureConstants) -> list[tuple[int, int]]:
    """Pairs whose bracket uses a basis element outside grade ``grade_i + grade_j``."""
    masks = [grade_mask(g) if g is not None else None for g in basis.grades]
    bad = []
    for (i, j), coef in sc.sparse.items():
        if masks[i] is None or masks[j] is None:
            bad.append((i, j))
            continue
        target = masks[i] ^ masks[j]
        if any(masks[k] != target for k in coef):
            bad.append((i, j))
    return bad


@dataclass(frozen=True)
class GradingGroup:
    """Subgroup of ``Z_2^n`` spanned by ``generators``."""

    generators: tuple[tuple[int, ...], ...]
    n: int

    @property
    def rank(self) -> int:
        return len(self.generators)


def effective_grading(basis: LieAlgebraBasis) -> GradingGroup:
    """Z_2-span of the grades actually occupied by the basis."""
    n = basis.sig.n
    masks = set()
    for x, g in zip(basis.elements, basis.grades):
        masks.update([grade_mask(g)] if g is not None else x.blades())
    gens = gf2_basis(sorted(masks))
    return GradingGroup(tuple(tuple((m >> i) & 1 for i in range(n)) for m in gens), n)
