"""Exact arithmetic in real Clifford algebras and commuting tensor products of them.

An algebra is described by a :class:`Signature`, an ordered tuple of real
Clifford factors ``Cl(p, q)``. Generators are numbered globally from 1, factor
by factor; inside a factor the first ``p`` square to +1 and the remaining ``q``
to -1. Generators in different factors commute, generators in the same factor
anticommute. A blade is stored as a bit mask (bit ``i - 1`` for ``e_i``).

Complex Clifford algebras are the two-factor case ``Cl(0,1) (x) Cl(p,q)``, with
the imaginary unit in the first slot.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

MAX_GENERATORS = 16


class CliffordError(ValueError):
    """Invalid blade, adjoint or signature, or mismatched operands."""


class CapacityError(CliffordError):
    """Too many generators for the configured cap."""


def generator_cap() -> int:
    env = os.environ.get("CLIFGRADE_MAX_GEN")
    if env:
        return max(0, min(MAX_GENERATORS, int(env)))
    return MAX_GENERATORS


@dataclass(frozen=True)
class Signature:
    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        factors = tuple((int(p), int(q)) for p, q in self.factors)
        object.__setattr__(self, "factors", factors)
        for p, q in factors:
            if p < 0 or q < 0:
                raise CliffordError(f"negative generator count in {factors}")
        if self.n > generator_cap():
            raise CapacityError(f"{self.n} generators exceeds cap {generator_cap()}")

    @classmethod
    def of(cls, d_plus: int, d_minus: int = 0, complex_flag: bool = False) -> "Signature":
        if complex_flag:
            return cls(((0, 1), (d_plus, d_minus)))
        return cls(((d_plus, d_minus),))

    @property
    def n(self) -> int:
        return sum(p + q for p, q in self.factors)

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def complex_flag(self) -> bool:
        return len(self.factors) == 2 and self.factors[0] == (0, 1)

    @property
    def is_real(self) -> bool:
        return len(self.factors) == 1

    def _main_factor(self) -> tuple[int, int]:
        if self.is_real:
            return self.factors[0]
        if self.complex_flag:
            return self.factors[1]
        raise CliffordError(f"{self} is neither a single real nor a complex Clifford algebra")

    @property
    def d_plus(self) -> int:
        return self._main_factor()[0]

    @property
    def d_minus(self) -> int:
        return self._main_factor()[1]

    @property
    def offsets(self) -> tuple[int, ...]:
        out, pos = [], 0
        for p, q in self.factors:
            out.append(pos)
            pos += p + q
        return tuple(out)

    def factor_masks(self) -> tuple[int, ...]:
        return tuple(((1 << (p + q)) - 1) << off for off, (p, q) in zip(self.offsets, self.factors))

    @property
    def negative_mask(self) -> int:
        """Bits of the generators that square to -1."""
        mask = 0
        for off, (p, q) in zip(self.offsets, self.factors):
            mask |= ((1 << q) - 1) << (off + p)
        return mask

    def blades(self) -> range:
        return range(self.dim)

    def generators(self) -> range:
        return range(1, self.n + 1)

    def tensor(self, other: "Signature") -> "Signature":
        return Signature(self.factors + other.factors)

    def check_blade(self, b: int) -> None:
        if not 0 <= b < self.dim:
            raise CliffordError(f"blade mask {b:#b} invalid for {self}")

    def __str__(self):
        if self.complex_flag:
            p, q = self.factors[1]
            return f"Cl({p},{q};C)"
        if not self.factors:
            return "Cl(0,0)"
        return "(x)".join(f"Cl({p},{q})" for p, q in self.factors)


def blade(*indices: int) -> int:
    """Mask for the canonical blade on the given 1-based generator indices."""
    if len(set(indices)) != len(indices):
        raise CliffordError(f"repeated generator in {indices}")
    mask = 0
    for i in indices:
        if i < 1:
            raise CliffordError(f"generator index {i} < 1")
        mask |= 1 << (i - 1)
    return mask


def blade_indices(mask: int) -> tuple[int, ...]:
    out, i = [], 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _swap_parity(a: int, b: int) -> int:
    # pairs (i in a, j in b) with i > j: transpositions needed to sort a+b
    a >>= 1
    count = 0
    while a:
        count += (a & b).bit_count()
        a >>= 1
    return count & 1


@lru_cache(maxsize=None)
def _factor_layout(sig: Signature) -> tuple[tuple[int, ...], int]:
    return sig.factor_masks(), sig.negative_mask


@lru_cache(maxsize=1 << 20)
def _mul_sign(sig: Signature, a: int, b: int) -> int:
    masks, neg = _factor_layout(sig)
    parity = 0
    for fm in masks:
        parity ^= _swap_parity(a & fm, b & fm)
    parity ^= (a & b & neg).bit_count() & 1
    return -1 if parity else 1


def blade_mul(a: int, b: int, sig: Signature) -> tuple[Fraction, int]:
    """Product of two basis blades: returns ``(sign, blade)`` with ``a*b = sign*blade``."""
    sig.check_blade(a)
    sig.check_blade(b)
    return Fraction(_mul_sign(sig, a, b)), a ^ b


def grade_of(b: int, sig: Signature) -> tuple[int, ...]:
    sig.check_blade(b)
    return tuple((b >> i) & 1 for i in range(sig.n))


def grade_mask(grade: Iterable[int]) -> int:
    return sum(1 << i for i, bit in enumerate(grade) if bit)


@dataclass(frozen=True)
class AdjointSpec:
    """Reversion composed with a sign change on selected generators.

    Within a factor ``Cl(p, q)`` generators ``1..a_plus`` and
    ``p+1..p+a_minus`` are kept, the other generators are negated. ``(0, 0)`` is
    Clifford conjugation, ``(p, q)`` is reversion.
    """

    a_plus: int
    a_minus: int

    def check(self, p: int, q: int) -> None:
        if not (0 <= self.a_plus <= p and 0 <= self.a_minus <= q):
            raise CliffordError(f"adjoint {self} out of range for Cl({p},{q})")

    def __str__(self):
        return f"dag({self.a_plus},{self.a_minus})"


AdjointLike = Union[AdjointSpec, tuple[AdjointSpec, ...]]


def resolve_adjoint(sig: Signature, spec: AdjointLike) -> tuple[AdjointSpec, ...]:
    """Per-factor adjoints for ``spec`` acting on ``sig``.

    A bare :class:`AdjointSpec` applies to a single real factor, or to the real
    factor of a complex algebra with the imaginary unit left fixed.
    """
    if isinstance(spec, AdjointSpec):
        if sig.is_real:
            parts = (spec,)
        elif sig.complex_flag:
            parts = (AdjointSpec(0, 1), spec)
        elif not sig.factors and spec == AdjointSpec(0, 0):
            parts = ()
        else:
            raise CliffordError(f"ambiguous adjoint {spec} for {sig}; give one per factor")
    else:
        parts = tuple(spec)
        if len(parts) != len(sig.factors):
            raise CliffordError(f"{len(parts)} adjoint parts for {len(sig.factors)} factors")
    for part, (p, q) in zip(parts, sig.factors):
        part.check(p, q)
    return parts


def reversion(sig: Signature) -> AdjointLike:
    if sig.is_real or sig.complex_flag:
        return AdjointSpec(sig.d_plus, sig.d_minus)
    return tuple(AdjointSpec(p, q) for p, q in sig.factors)


def conjugation(sig: Signature) -> AdjointLike:
    """Clifford conjugation; on a complex algebra the imaginary unit stays fixed."""
    if sig.is_real or sig.complex_flag:
        return AdjointSpec(0, 0)
    return tuple(AdjointSpec(0, 0) for _ in sig.factors)


@lru_cache(maxsize=None)
def _negated_mask(sig: Signature, parts: tuple[AdjointSpec, ...]) -> int:
    mask = 0
    for off, (p, q), s in zip(sig.offsets, sig.factors, parts):
        mask |= ((1 << (p - s.a_plus)) - 1) << (off + s.a_plus)
        mask |= ((1 << (q - s.a_minus)) - 1) << (off + p + s.a_minus)
    return mask


def blade_adjoint_sign(b: int, spec: AdjointLike, sig: Signature) -> int:
    """``sigma`` in ``b^dagger = sigma * b``."""
    sig.check_blade(b)
    parts = resolve_adjoint(sig, spec)
    k_sign = 0
    for fm in sig.factor_masks():
        k = (b & fm).bit_count()
        k_sign ^= (k * (k - 1) // 2) & 1
    k_sign ^= (b & _negated_mask(sig, parts)).bit_count() & 1
    return -1 if k_sign else 1


Scalar = Union[int, Fraction]


class CliffordElement:
    """Immutable sparse linear combination of blades with rational coefficients."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        for b, c in (terms or {}).items():
            sig.check_blade(b)
            c = Fraction(c)
            if c:
                clean[b] = c
        self.sig = sig
        self.terms = clean

    @classmethod
    def _raw(cls, sig: Signature, terms: dict[int, Fraction]) -> "CliffordElement":
        obj = cls.__new__(cls)
        obj.sig = sig
        obj.terms = {b: c for b, c in terms.items() if c}
        return obj

    @classmethod
    def scalar(cls, sig: Signature, c: Scalar = 1) -> "CliffordElement":
        return cls(sig, {0: c})

    @classmethod
    def zero(cls, sig: Signature) -> "CliffordElement":
        return cls._raw(sig, {})

    @classmethod
    def gen(cls, sig: Signature, i: int) -> "CliffordElement":
        return cls(sig, {blade(i): 1})

    @classmethod
    def from_blade(cls, sig: Signature, b: int, coef: Scalar = 1) -> "CliffordElement":
        return cls(sig, {b: coef})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def blades(self) -> set[int]:
        return set(self.terms)

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def _check(self, other: "CliffordElement") -> None:
        if self.sig != other.sig:
            raise CliffordError(f"signature mismatch: {self.sig} vs {other.sig}")

    def _coerce(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return CliffordElement.scalar(self.sig, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, 0) + c
        return CliffordElement._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement._raw(self.sig, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "CliffordElement":
        c = Fraction(c)
        return CliffordElement._raw(self.sig, {b: c * v for b, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return element_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CliffordElement.scalar(self.sig, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.sig == other.sig and self.terms == other.terms

    def __hash__(self):
        return hash((self.sig, frozenset(self.terms.items())))

    def adjoint(self, spec: AdjointLike) -> "CliffordElement":
        return adjoint(self, spec)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"CliffordElement({self.sig}, {format_element(self)!r})"


def element_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    x._check(y)
    sig = x.sig
    out: dict[int, Fraction] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            m = a ^ b
            out[m] = out.get(m, 0) + _mul_sign(sig, a, b) * ca * cb
    return CliffordElement._raw(sig, out)


def adjoint(x: CliffordElement, spec: AdjointLike) -> CliffordElement:
    parts = resolve_adjoint(x.sig, spec)
    return CliffordElement._raw(
        x.sig, {b: blade_adjoint_sign(b, parts, x.sig) * c for b, c in x.terms.items()}
    )


def tensor_product(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """``x (x) y`` in ``A (x) B``; grades concatenate with ``A``'s slots first."""
    sig = x.sig.tensor(y.sig)
    shift = x.sig.n
    out = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            out[a | (b << shift)] = ca * cb
    return CliffordElement._raw(sig, out)


# text and JSON encodings

def _term_key(b: int):
    return (b.bit_count(), blade_indices(b))


def format_element(x: CliffordElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for b in sorted(x.terms, key=_term_key):
        c = x.terms[b]
        body = str(abs(c)) + "".join(f" e{i}" for i in blade_indices(b))
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?((?:\s*e\d+)*)\s*")


def parse_element(text: str, sig: Signature) -> CliffordElement:
    """Inverse of :func:`format_element`; generator lists are multiplied in the given order."""
    text = text.strip()
    if not text:
        raise CliffordError("empty element")
    result = CliffordElement.zero(sig)
    pos, first = 0, True
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, coef, gens = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (coef is None and not gens.strip()):
            raise CliffordError(f"cannot parse element at {text[pos:]!r}")
        if sign is None and not first:
            raise CliffordError(f"missing '+' or '-' before {text[pos:]!r}")
        term = CliffordElement.scalar(sig, Fraction(coef) if coef else 1)
        for idx in re.findall(r"e(\d+)", gens):
            i = int(idx)
            if not 1 <= i <= sig.n:
                raise CliffordError(f"generator e{i} not in {sig}")
            term = term * CliffordElement.gen(sig, i)
        result = result - term if sign == "-" else result + term
        pos, first = m.end(), False
    return result


def signature_to_json(sig: Signature):
    if sig.is_real:
        return list(sig.factors[0])
    return [list(f) for f in sig.factors]


def signature_from_json(obj) -> Signature:
    if len(obj) == 2 and all(isinstance(v, int) for v in obj):
        return Signature.of(*obj)
    return Signature(tuple(tuple(f) for f in obj))


def element_to_json(x: CliffordElement) -> dict:
    return {
        "sig": signature_to_json(x.sig),
        "terms": [
            {"blade": list(blade_indices(b)), "coef": str(x.terms[b])}
            for b in sorted(x.terms, key=_term_key)
        ],
    }


def element_from_json(obj: dict) -> CliffordElement:
    sig = signature_from_json(obj["sig"])
    terms: dict[int, Fraction] = {}
    for t in obj["terms"]:
        b = blade(*t["blade"])
        terms[b] = terms.get(b, 0) + Fraction(t["coef"])
    return CliffordElement(sig, terms)


# isomorphism class of the algebra

@dataclass(frozen=True)
class MatrixAlgebraClass:
    """``copies`` x ``base``(``size``): one of R, C, H, 2R, 2C, 2H over matrices."""

    base: str
    copies: int
    size: int

    @property
    def real_dim(self) -> int:
        return self.copies * {"R": 1, "C": 2, "H": 4}[self.base] * self.size**2

    def __str__(self):
        name = ("2" if self.copies == 2 else "") + self.base
        return f"{name}({self.size})" if self.size > 1 else name


_REAL_PERIOD = {
    0: ("R", 1, 0), 1: ("R", 2, 1), 2: ("R", 1, 0), 3: ("C", 1, 1),
    4: ("H", 1, 2), 5: ("H", 2, 3), 6: ("H", 1, 2), 7: ("C", 1, 1),
}


def classify_clifford(sig: Signature) -> MatrixAlgebraClass:
    if sig.complex_flag:
        n = sig.d_plus + sig.d_minus
        if n % 2:
            return MatrixAlgebraClass("C", 2, 1 << ((n - 1) // 2))
        return MatrixAlgebraClass("C", 1, 1 << (n // 2))
    p, q = sig.d_plus, sig.d_minus
    base, copies, drop = _REAL_PERIOD[(p - q) % 8]
    return MatrixAlgebraClass(base, copies, 1 << ((p + q - drop) // 2))
