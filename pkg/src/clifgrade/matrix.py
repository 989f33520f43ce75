"""Square matrices over a Clifford algebra with a diagonal pseudo-Euclidean metric."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .clifford import (
    AdjointLike,
    CliffordElement,
    CliffordError,
    Signature,
    adjoint,
    grade_mask,
    grade_of,
    parse_element,
    resolve_adjoint,
    signature_from_json,
    signature_to_json,
)
from .linalg import Vector


@dataclass(frozen=True)
class MetricSignature:
    """``g = I_{D+,D-}``: ``d_plus`` entries +1 followed by ``d_minus`` entries -1."""

    d_plus: int
    d_minus: int = 0

    def __post_init__(self):
        if self.d_plus < 0 or self.d_minus < 0 or self.d_plus + self.d_minus < 1:
            raise CliffordError(f"bad metric signature ({self.d_plus},{self.d_minus})")

    @property
    def dim(self) -> int:
        return self.d_plus + self.d_minus

    @property
    def diag(self) -> tuple[int, ...]:
        return (1,) * self.d_plus + (-1,) * self.d_minus

    def __str__(self):
        return f"({self.d_plus},{self.d_minus})"


Entry = CliffordElement | int | Fraction | str


class GradedMatrix:
    """Immutable D x D matrix of Clifford elements sharing one signature."""

    __slots__ = ("sig", "metric", "entries")

    def __init__(self, sig: Signature, metric: MetricSignature, rows: Sequence[Sequence[Entry]]):
        d = metric.dim
        if len(rows) != d or any(len(r) != d for r in rows):
            raise CliffordError(f"expected {d}x{d} entries for metric {metric}")
        self.sig = sig
        self.metric = metric
        self.entries = tuple(tuple(_entry(sig, x) for x in row) for row in rows)

    @classmethod
    def zeros(cls, sig: Signature, metric: MetricSignature) -> "GradedMatrix":
        d = metric.dim
        z = CliffordElement.zero(sig)
        return cls(sig, metric, [[z] * d for _ in range(d)])

    @classmethod
    def identity(cls, sig: Signature, metric: MetricSignature) -> "GradedMatrix":
        d = metric.dim
        return cls(sig, metric, [[1 if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def unit(cls, sig, metric, i: int, j: int, x: Entry = 1) -> "GradedMatrix":
        """``x`` at position ``(i, j)``, zero elsewhere (0-based)."""
        d = metric.dim
        rows = [[0] * d for _ in range(d)]
        rows[i][j] = x
        return cls(sig, metric, rows)

    @property
    def dim(self) -> int:
        return self.metric.dim

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def _check(self, other: "GradedMatrix") -> None:
        if self.sig != other.sig or self.metric != other.metric:
            raise CliffordError(
                f"matrix mismatch: {self.sig}{self.metric} vs {other.sig}{other.metric}"
            )

    def _map(self, fn) -> "GradedMatrix":
        return GradedMatrix(self.sig, self.metric, [[fn(x) for x in row] for row in self.entries])

    def __add__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return GradedMatrix(
            self.sig, self.metric,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: "GradedMatrix") -> "GradedMatrix":
        self._check(other)
        return GradedMatrix(
            self.sig, self.metric,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
        )

    def __neg__(self):
        return self._map(lambda x: -x)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._map(lambda x: x.scale(other))
        if isinstance(other, CliffordElement):
            return self._map(lambda x: x * other)
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        self._check(other)
        d = self.dim
        out = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = CliffordElement.zero(self.sig)
                for k in range(d):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.sig, self.metric, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._map(lambda x: x.scale(other))
        if isinstance(other, CliffordElement):
            return self._map(lambda x: other * x)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return self.sig == other.sig and self.metric == other.metric and self.entries == other.entries

    def __hash__(self):
        return hash((self.sig, self.metric, self.entries))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def blades(self) -> set[int]:
        """Blade masks occurring in any entry."""
        return {b for row in self.entries for x in row for b in x.terms}

    def is_homogeneous(self) -> bool:
        return len(self.blades()) <= 1

    def grade(self) -> tuple[int, ...] | None:
        """Grade of a nonzero homogeneous matrix, else None."""
        bl = self.blades()
        if len(bl) != 1:
            return None
        return grade_of(next(iter(bl)), self.sig)

    def adjoint(self, spec: AdjointLike) -> "GradedMatrix":
        return matrix_adjoint(self, spec)

    def coords(self) -> Vector:
        """Row-major coordinates over the basis ``E_ij (x) blade``."""
        d, n = self.dim, self.sig.n
        out = {}
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                base = (i * d + j) << n
                for b, c in x.terms.items():
                    out[base | b] = c
        return out

    @classmethod
    def from_coords(cls, sig: Signature, metric: MetricSignature, v: Mapping[int, Fraction]):
        d, n = metric.dim, sig.n
        terms = [[{} for _ in range(d)] for _ in range(d)]
        for k, c in v.items():
            pos, b = k >> n, k & ((1 << n) - 1)
            terms[pos // d][pos % d][b] = c
        return cls(sig, metric, [[CliffordElement(sig, t) for t in row] for row in terms])

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.entries) + "]"

    def __repr__(self):
        return f"GradedMatrix({self.sig}, {self.metric}, {self})"

    def to_json(self) -> dict:
        return {
            "sig": signature_to_json(self.sig),
            "metric": [self.metric.d_plus, self.metric.d_minus],
            "entries": [str(x) for row in self.entries for x in row],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GradedMatrix":
        sig = signature_from_json(obj["sig"])
        metric = MetricSignature(*obj["metric"])
        d = metric.dim
        flat = [parse_element(s, sig) for s in obj["entries"]]
        if len(flat) != d * d:
            raise CliffordError(f"expected {d * d} entries, got {len(flat)}")
        return cls(sig, metric, [flat[i * d:(i + 1) * d] for i in range(d)])


def _entry(sig: Signature, x: Entry) -> CliffordElement:
    if isinstance(x, CliffordElement):
        if x.sig != sig:
            raise CliffordError(f"entry over {x.sig}, matrix over {sig}")
        return x
    if isinstance(x, str):
        return parse_element(x, sig)
    return CliffordElement.scalar(sig, x)


def matrix_adjoint(m: GradedMatrix, spec: AdjointLike) -> GradedMatrix:
    """``g^-1 M^t g`` with the Clifford adjoint applied to every entry."""
    parts = resolve_adjoint(m.sig, spec)
    g = m.metric.diag
    d = m.dim
    rows = [[adjoint(m.entries[j][i], parts).scale(g[i] * g[j]) for j in range(d)] for i in range(d)]
    return GradedMatrix(m.sig, m.metric, rows)


def bracket(m: GradedMatrix, n: GradedMatrix) -> GradedMatrix:
    return m * n - n * m


RealMatrix = tuple[tuple[Fraction, ...], ...]


def grade_components(m: GradedMatrix) -> dict[tuple[int, ...], RealMatrix]:
    """Write ``M = sum_gamma M_gamma (x) gamma`` with real matrices ``M_gamma``."""
    d = m.dim
    out: dict[int, list[list[Fraction]]] = {}
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            for b, c in x.terms.items():
                comp = out.setdefault(b, [[Fraction(0)] * d for _ in range(d)])
                comp[i][j] = c
    return {
        grade_of(b, m.sig): tuple(tuple(r) for r in comp) for b, comp in sorted(out.items())
    }


def reassemble(components: Mapping[tuple[int, ...], Sequence[Sequence[Fraction]]],
               sig: Signature, metric: MetricSignature) -> GradedMatrix:
    total = GradedMatrix.zeros(sig, metric)
    for grade, comp in components.items():
        b = grade_mask(grade)
        total = total + GradedMatrix(
            sig, metric,
            [[CliffordElement.from_blade(sig, b, c) for c in row] for row in comp],
        )
    return total


def real_matrix(rows: Iterable[Iterable]) -> RealMatrix:
    return tuple(tuple(Fraction(c) for c in r) for r in rows)


# plain rational matrices (tuples of tuples of Fraction)

def rmat_zeros(n: int, m: int | None = None) -> RealMatrix:
    return tuple(tuple(Fraction(0) for _ in range(n if m is None else m)) for _ in range(n))


def rmat_identity(n: int) -> RealMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def rmat_add(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def rmat_sub(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def rmat_scale(c, a: RealMatrix) -> RealMatrix:
    return tuple(tuple(c * x for x in r) for r in a)


def rmat_mul(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols) for r in a)


def rmat_transpose(a: RealMatrix) -> RealMatrix:
    return tuple(zip(*a))


def kron(a: RealMatrix, b: RealMatrix) -> RealMatrix:
    """Kronecker product; ``a``'s index is the more significant one."""
    nb, mb = len(b), len(b[0])
    return tuple(
        tuple(a[i // nb][j // mb] * b[i % nb][j % mb] for j in range(len(a[0]) * mb))
        for i in range(len(a) * nb)
    )


def rmat_is_zero(a: RealMatrix) -> bool:
    return all(x == 0 for r in a for x in r)
