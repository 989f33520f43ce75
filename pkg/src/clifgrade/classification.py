"""The eight graded fields/Clifford algebras and the classical Lie algebras they carry."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .clifford import (
    AdjointSpec,
    CliffordElement,
    CliffordError,
    Signature,
    blade,
    blade_adjoint_sign,
    conjugation,
    reversion,
)
from .lie import (
    aut_basis,
    aut_basis_oracle,
    effective_grading,
    same_span,
)
from .linalg import rank
from .matrix import (
    GradedMatrix,
    MetricSignature,
    RealMatrix,
    bracket,
    grade_components,
    kron,
    real_matrix,
    rmat_add,
    rmat_identity,
    rmat_is_zero,
    rmat_mul,
    rmat_sub,
    rmat_transpose,
    rmat_zeros,
)
from .report import Certificate

ADJOINT_KINDS = ("rev", "conj")


@dataclass(frozen=True)
class ClassificationRow:
    field_name: str
    clifford_signature: Signature
    grading_rank: int
    reversion_la: Optional[str]
    conjugation_la: Optional[str]
    isomorphic_to: str = ""

    def la_name(self, kind: str) -> Optional[str]:
        return self.reversion_la if kind == "rev" else self.conjugation_la

    def adjoint(self, kind: str) -> AdjointSpec:
        sig = self.clifford_signature
        return reversion(sig) if kind == "rev" else conjugation(sig)

    def to_json(self) -> dict:
        sig = self.clifford_signature
        return {
            "field": self.field_name,
            "clifford": str(sig),
            "isomorphic_to": self.isomorphic_to,
            "grading": f"Z2^{self.grading_rank}" if self.grading_rank else None,
            "grading_rank": self.grading_rank,
            "reversion": self.reversion_la,
            "conjugation": self.conjugation_la,
            "aut": {
                kind: f"aut({'~' if kind == 'rev' else 'bar'} {self.field_name}(D+,D-))"
                for kind in ADJOINT_KINDS if self.la_name(kind)
            },
        }


_ROWS = (
    ClassificationRow("R", Signature.of(0, 0), 0, "O(D+,D-;R)", None, "R"),
    ClassificationRow("C", Signature.of(0, 1), 1, "O(D;C)", "U(D+,D-;C)", "C"),
    ClassificationRow("2R", Signature.of(1, 0), 1, None, "U(D;2R) = Gl(D;R)", "R+R"),
    ClassificationRow("H", Signature.of(0, 2), 2, "O(D;H) = O*(2D;C)",
                      "U(D+,D-;H) = USp(2D+,2D-;C)", "H"),
    ClassificationRow("H''", Signature.of(2, 0), 2, None, "U(D;H'') = Sp(2D;R)", "R(2)"),
    ClassificationRow("2C", Signature.of(1, 0, complex_flag=True), 2, None,
                      "U(D;2C) = Gl(D;C)", "C+C"),
    ClassificationRow("2H", Signature.of(0, 3), 3, "U(D;2H) = U*(2D;C)", None, "H+H"),
    ClassificationRow("CxH''", Signature.of(3, 0), 3, None,
                      "O_C U_H''(D;CxH'') = Sp(2D;C)", "C(2)"),
)

FIELD_NAMES = tuple(r.field_name for r in _ROWS)


def table1() -> list[ClassificationRow]:
    return list(_ROWS)


def row(name: str) -> ClassificationRow:
    for r in _ROWS:
        if r.field_name == name:
            return r
    raise KeyError(f"unknown field {name!r}; expected one of {', '.join(FIELD_NAMES)}")


# Classical real dimensions as functions of D = D+ + D-. Blank table entries are
# included with the algebra they reduce to.
DIMENSION_FORMULAS: dict[tuple[str, str], tuple[str, Callable[[int], int]]] = {
    ("R", "rev"): ("o(D)", lambda d: d * (d - 1) // 2),
    ("R", "conj"): ("o(D)", lambda d: d * (d - 1) // 2),
    ("C", "rev"): ("o(D;C)", lambda d: d * (d - 1)),
    ("C", "conj"): ("u(D)", lambda d: d * d),
    ("2R", "rev"): ("o(D)+o(D)", lambda d: d * (d - 1)),
    ("2R", "conj"): ("gl(D;R)", lambda d: d * d),
    ("H", "rev"): ("o*(2D)", lambda d: d * (2 * d - 1)),
    ("H", "conj"): ("usp(2D)", lambda d: d * (2 * d + 1)),
    ("H''", "rev"): ("o(2D)", lambda d: d * (2 * d - 1)),
    ("H''", "conj"): ("sp(2D;R)", lambda d: d * (2 * d + 1)),
    ("2C", "rev"): ("o(D;C)+o(D;C)", lambda d: 2 * d * (d - 1)),
    ("2C", "conj"): ("gl(D;C)", lambda d: 2 * d * d),
    ("2H", "rev"): ("gl(D;H)", lambda d: 4 * d * d),
    ("2H", "conj"): ("usp(2D)+usp(2D)", lambda d: 2 * d * (2 * d + 1)),
    ("CxH''", "rev"): ("u(2D)", lambda d: 4 * d * d),
    ("CxH''", "conj"): ("sp(2D;C)", lambda d: 2 * d * (2 * d + 1)),
}

# At D = 1 the skew components vanish and the occupied grades can span less.
REDUCED_RANK_AT_D1 = {("R", "rev"): 0, ("C", "rev"): 0, ("H", "rev"): 1}


def expected_grading_rank(name: str, kind: str, d: int) -> int:
    if d == 1 and (name, kind) in REDUCED_RANK_AT_D1:
        return REDUCED_RANK_AT_D1[(name, kind)]
    return row(name).grading_rank


def verify_table1(metrics=((2, 0), (1, 1), (0, 2))) -> Certificate:
    """Computed effective grading ranks against the table, for every listed adjoint."""
    cert = Certificate("table1 grading ranks")
    for r in _ROWS:
        for kind in ADJOINT_KINDS:
            if not r.la_name(kind):
                continue
            for dp, dm in metrics:
                basis = aut_basis(r.clifford_signature, r.adjoint(kind), MetricSignature(dp, dm))
                got = effective_grading(basis).rank
                cert.add(f"{r.field_name}/{kind}/({dp},{dm})", got == r.grading_rank,
                         f"rank {got}, table {r.grading_rank}")
    return cert


def verify_named_dimension(name: str, kind: str, d_plus: int, d_minus: int = 0) -> Certificate:
    r = row(name)
    la = r.la_name(kind)
    if la is None:
        raise CliffordError(f"table entry for {name}/{kind} is blank")
    metric = MetricSignature(d_plus, d_minus)
    d = metric.dim
    label, formula = DIMENSION_FORMULAS[(name, kind)]
    cert = Certificate(f"{la} at ({d_plus},{d_minus})")
    basis = aut_basis(r.clifford_signature, r.adjoint(kind), metric)
    oracle = aut_basis_oracle(r.clifford_signature, r.adjoint(kind), metric)
    expected = formula(d)
    cert.add("dimension", basis.dimension == expected, f"{basis.dimension} vs {label} = {expected}")
    cert.add("oracle_span", same_span(basis, oracle), f"oracle dimension {oracle.dimension}")
    got = effective_grading(basis).rank
    want = expected_grading_rank(name, kind, d)
    cert.add("grading_rank", got == want,
             f"{got} vs {want}" + (" (reduced at D=1)" if want != r.grading_rank else ""))
    cert.data.update(field=name, adjoint=kind, metric=[d_plus, d_minus], la=la,
                     dimension=basis.dimension, grading_rank=got)
    return cert


def verify_complex_reversion(d: int) -> Certificate:
    """Reversion fixes both blades of C = Cl(0,1), so O(D;C) has twice the dimension of o(D)."""
    sig = Signature.of(0, 1)
    cert = Certificate(f"O({d};C) = C (x) O({d},0;R)")
    cert.add("reversion_fixes_C", all(blade_adjoint_sign(b, reversion(sig), sig) == 1 for b in sig.blades()))
    dim_c = aut_basis(sig, reversion(sig), MetricSignature(d)).dimension
    dim_r = aut_basis(Signature.of(0, 0), AdjointSpec(0, 0), MetricSignature(d)).dimension
    cert.add("dimension_doubles", dim_c == 2 * dim_r, f"{dim_c} vs 2*{dim_r}")
    return cert


# the R(2) representation of H'' = Cl(2,0)

_H2 = Signature.of(2, 0)
REP_R2: dict[int, RealMatrix] = {
    0: real_matrix([[1, 0], [0, 1]]),
    blade(1): real_matrix([[1, 0], [0, -1]]),
    blade(2): real_matrix([[0, 1], [1, 0]]),
    blade(1, 2): real_matrix([[0, 1], [-1, 0]]),
}


def rep_R2(x: CliffordElement) -> RealMatrix:
    if x.sig != _H2:
        raise CliffordError(f"rep_R2 needs Cl(2,0), got {x.sig}")
    out = rmat_zeros(2)
    for b, c in x.terms.items():
        out = rmat_add(out, tuple(tuple(c * v for v in r) for r in REP_R2[b]))
    return out


def rep_matrix(m: GradedMatrix) -> RealMatrix:
    """Blockwise image in R(2D): block (a, b) is ``sum_gamma rep(gamma)[a][b] * M_gamma``."""
    d = m.dim
    out = rmat_zeros(2 * d)
    for b in range(4):
        comp = [[m.entries[i][j].terms.get(b, Fraction(0)) for j in range(d)] for i in range(d)]
        out = rmat_add(out, kron(REP_R2[b], real_matrix(comp)))
    return out


def _flat(a: RealMatrix) -> dict[int, Fraction]:
    n = len(a[0])
    return {i * n + j: c for i, r in enumerate(a) for j, c in enumerate(r) if c}


def _is_skew(a: RealMatrix) -> bool:
    return rmat_is_zero(rmat_add(a, rmat_transpose(a)))


def _is_sym(a: RealMatrix) -> bool:
    return rmat_is_zero(rmat_sub(a, rmat_transpose(a)))


def verify_symplectic_iso(d: int) -> Certificate:
    """U(D;H'') mapped into R(2D) is exactly sp(2D;R) for ``J`` = image of ``e12``."""
    cert = Certificate(f"U({d};H'') = Sp({2 * d};R)")
    basis = aut_basis(_H2, conjugation(_H2), MetricSignature(d, 0))
    images = [rep_matrix(x) for x in basis.elements]
    j = kron(REP_R2[blade(1, 2)], rmat_identity(d))

    bad = [k for k, L in enumerate(images)
           if not rmat_is_zero(rmat_add(rmat_mul(rmat_transpose(L), j), rmat_mul(j, L)))]
    cert.add("LtJ+JL=0", not bad, f"failing basis elements {bad}" if bad else f"{len(images)} images")

    dim = rank(_flat(L) for L in images)
    cert.add("dimension", dim == d * (2 * d + 1) == basis.dimension,
             f"image rank {dim}, sp({2 * d}) has {d * (2 * d + 1)}")

    bad = []
    zero = rmat_zeros(d)
    for k, (x, L) in enumerate(zip(basis.elements, images)):
        comps = grade_components(x)
        a1 = comps.get((0, 0), zero)
        s1 = comps.get((1, 0), zero)
        s2 = comps.get((0, 1), zero)
        s12 = comps.get((1, 1), zero)
        top = [list(r1) + list(r2) for r1, r2 in zip(rmat_add(a1, s1), rmat_add(s2, s12))]
        bottom = [list(r1) + list(r2) for r1, r2 in zip(rmat_sub(s2, s12), rmat_sub(a1, s1))]
        ok = (_is_skew(a1) and all(_is_sym(s) for s in (s1, s2, s12))
              and real_matrix(top + bottom) == L)
        if not ok:
            bad.append(k)
    cert.add("block_form", not bad, f"failing basis elements {bad}" if bad else "")

    bad = []
    for a in range(len(images)):
        for b in range(a + 1, len(images)):
            lhs = rep_matrix(bracket(basis.elements[a], basis.elements[b]))
            rhs = rmat_sub(rmat_mul(images[a], images[b]), rmat_mul(images[b], images[a]))
            if lhs != rhs:
                bad.append((a, b))
    cert.add("bracket_homomorphism", not bad, f"failing pairs {bad[:5]}" if bad else "")
    cert.data.update(D=d, dimension=basis.dimension)
    return cert


def verify_rep_R2() -> Certificate:
    """Multiplicativity on all blade pairs, and reversion becoming the transpose."""
    cert = Certificate("R(2) representation of Cl(2,0)")
    bad = []
    for a in range(4):
        for b in range(4):
            x, y = CliffordElement.from_blade(_H2, a), CliffordElement.from_blade(_H2, b)
            if rep_R2(x * y) != rmat_mul(rep_R2(x), rep_R2(y)):
                bad.append((a, b))
    cert.add("homomorphism", not bad, f"{bad}" if bad else "16 blade pairs")
    iso = rank(_flat(REP_R2[b]) for b in range(4)) == 4
    cert.add("bijective", iso)
    rev = reversion(_H2)
    bad = [b for b in range(4)
           if rep_R2(CliffordElement.from_blade(_H2, b).adjoint(rev))
           != rmat_transpose(REP_R2[b])]
    cert.add("reversion_is_transpose", not bad, f"{bad}" if bad else "")
    return cert
