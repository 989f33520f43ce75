"""Independent reference implementations used only by the tests."""
from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from clifgrade.clifford import CliffordElement, Signature


def factor_of(i: int, sig: Signature) -> int:
    for k, (off, (p, q)) in enumerate(zip(sig.offsets, sig.factors)):
        if off < i <= off + p + q:
            return k
    raise ValueError(i)


def squares_to(i: int, sig: Signature) -> int:
    k = factor_of(i, sig)
    return 1 if i - sig.offsets[k] <= sig.factors[k][0] else -1


def word_product(word: list[int], sig: Signature) -> tuple[int, int]:
    """Bubble-sort a generator word, cancelling equal neighbours; returns (sign, mask)."""
    word, sign = list(word), 1
    changed = True
    while changed:
        changed = False
        for t in range(len(word) - 1):
            a, b = word[t], word[t + 1]
            if a == b:
                sign *= squares_to(a, sig)
                del word[t:t + 2]
                changed = True
                break
            if a > b:
                word[t], word[t + 1] = b, a
                if factor_of(a, sig) == factor_of(b, sig):
                    sign = -sign
                changed = True
                break
    mask = 0
    for i in word:
        mask |= 1 << (i - 1)
    return sign, mask


def indices(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def brute_blade_mul(a: int, b: int, sig: Signature) -> tuple[int, int]:
    return word_product(indices(a) + indices(b), sig)


def brute_reverse_sign(b: int, sig: Signature) -> int:
    """Sign of the reversed generator word relative to the blade."""
    return word_product(indices(b)[::-1], sig)[0]


real_signatures = st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(
    lambda pq: sum(pq) <= 5).map(lambda pq: Signature.of(*pq))


@st.composite
def elements(draw, sig: Signature, max_terms: int = 4):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        b = draw(st.integers(0, sig.dim - 1))
        terms[b] = Fraction(draw(st.integers(-5, 5)), draw(st.integers(1, 3)))
    return CliffordElement(sig, terms)


@st.composite
def sig_and_elements(draw, count: int = 3):
    sig = draw(real_signatures)
    return (sig, *[draw(elements(sig)) for _ in range(count)])
