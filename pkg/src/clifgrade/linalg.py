"""Exact sparse linear algebra over the rationals.

Vectors are ``dict[int, Fraction]`` keyed by coordinate index with no zero
values. Everything is exact; there is no pivot tolerance.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional

Vector = dict[int, Fraction]


def clean(v: Mapping[int, object]) -> Vector:
    return {k: Fraction(c) for k, c in v.items() if c}


def axpy(y: Vector, a: Fraction, x: Mapping[int, Fraction]) -> None:
    """In place ``y += a * x``."""
    for k, c in x.items():
        val = y.get(k, 0) + a * c
        if val:
            y[k] = val
        else:
            y.pop(k, None)


class EchelonBasis:
    """Reduced row echelon form, grown one vector at a time.

    With ``track=True`` each stored row remembers which combination of the
    inserted vectors produced it, so that :meth:`coefficients` can express a
    vector in terms of the inserted ones.
    """

    def __init__(self, track: bool = False):
        self.rows: dict[int, Vector] = {}
        self.track = track
        self.combos: dict[int, Vector] = {}
        self.n_inserted = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Mapping[int, Fraction]) -> tuple[Vector, Vector]:
        """Residual of ``v`` after removing its row-space part, and the removed combination."""
        res = clean(v)
        combo: Vector = {}
        for col in [c for c in res if c in self.rows]:
            a = res.get(col)
            if not a:
                continue
            axpy(res, -a, self.rows[col])
            if self.track:
                axpy(combo, a, self.combos[col])
        return res, combo

    def add(self, v: Mapping[int, Fraction]) -> bool:
        """Insert ``v``; returns ``True`` when it was independent of earlier rows."""
        index = self.n_inserted
        self.n_inserted += 1
        res, combo = self.reduce(v)
        if not res:
            return False
        piv = min(res)
        inv = 1 / res[piv]
        row = {k: c * inv for k, c in res.items()}
        if self.track:
            combo = {k: -c * inv for k, c in combo.items()}
            axpy(combo, inv, {index: Fraction(1)})
        for col, other in self.rows.items():
            a = other.get(piv)
            if a:
                axpy(other, -a, row)
                if self.track:
                    axpy(self.combos[col], -a, combo)
        self.rows[piv] = row
        if self.track:
            self.combos[piv] = combo
        return True

    def contains(self, v: Mapping[int, Fraction]) -> bool:
        return not self.reduce(v)[0]

    def coefficients(self, v: Mapping[int, Fraction]) -> Optional[Vector]:
        """Sparse coefficients ``c`` with ``v = sum c[k] * inserted[k]``, or None if outside the span."""
        if not self.track:
            raise ValueError("coefficients need track=True")
        res, combo = self.reduce(v)
        return None if res else combo


def rank(vectors: Iterable[Mapping[int, Fraction]]) -> int:
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return eb.rank


def nullspace(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> list[Vector]:
    """Basis of ``{x : row . x = 0 for every row}`` in ``Q^ncols``, one vector per free column."""
    eb = EchelonBasis()
    for r in rows:
        eb.add(r)
    basis = []
    for free in range(ncols):
        if free in eb.rows:
            continue
        v: Vector = {free: Fraction(1)}
        for piv, row in eb.rows.items():
            c = row.get(free)
            if c:
                v[piv] = -c
        basis.append(v)
    return basis


def same_span(a: list[Mapping[int, Fraction]], b: list[Mapping[int, Fraction]]) -> bool:
    ra, rb = rank(a), rank(b)
    return ra == rb == rank(list(a) + list(b))


def gf2_basis(masks: Iterable[int]) -> list[int]:
    """Independent generators of the Z_2-span of bit masks (xor basis)."""
    basis: dict[int, int] = {}
    for m in masks:
        while m:
            top = m.bit_length() - 1
            if top not in basis:
                basis[top] = m
                break
            m ^= basis[top]
    return [basis[k] for k in sorted(basis)]
