"""Non-tensorial Z_2^s gradings of R(D) from recursive square block partitions.

Each level splits every current diagonal block in two. ``h_k(i)`` records
whether index ``i`` lands in the first (0) or second (1) child at level ``k``;
entry ``(i, j)`` gets level-k bit ``h_k(i) xor h_k(j)``. For ``D = 4`` with even
splits this reproduces

    [[R00, R01, R10, R11],
     [R01, R00, R11, R10],
     [R10, R11, R00, R01],
     [R11, R10, R01, R00]]
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .clifford import Signature
from .higher import lemma1_embed
from .linalg import gf2_basis, rank
from .matrix import MetricSignature
from .report import Certificate


class BlockGradingError(ValueError):
    pass


@dataclass(frozen=True)
class BlockGrading:
    """``splits[k]`` lists, for every block of level ``k``, the size of its first child."""

    D: int
    splits: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.splits)

    s = depth

    @classmethod
    def even(cls, D: int, s: int) -> "BlockGrading":
        """Halve every block (first child gets the floor)."""
        if D < 1 or s < 0:
            raise BlockGradingError(f"need D >= 1 and s >= 0, got D={D}, s={s}")
        sizes, splits = [D], []
        for _ in range(s):
            offs = tuple(m // 2 for m in sizes)
            splits.append(offs)
            sizes = [c for m, o in zip(sizes, offs) for c in (o, m - o)]
        return cls(D, tuple(splits))

    @classmethod
    def parse(cls, D: int, text: str) -> "BlockGrading":
        """``"2,1:1"``: levels separated by commas, per-block first-child sizes by colons."""
        text = text.strip()
        if not text:
            return cls(D, ())
        try:
            splits = tuple(tuple(int(t) for t in level.split(":")) for level in text.split(","))
        except ValueError:
            raise BlockGradingError(f"malformed splits {text!r}") from None
        return cls(D, splits)

    def partition_errors(self) -> list[str]:
        errs = []
        sizes = [self.D]
        for k, offs in enumerate(self.splits, 1):
            if len(offs) != len(sizes):
                errs.append(f"level {k}: {len(offs)} split points for {len(sizes)} blocks")
                break
            for m, o in zip(sizes, offs):
                if not 0 < o < m:
                    errs.append(f"level {k}: cannot split a block of size {m} at {o}")
            sizes = [c for m, o in zip(sizes, offs) for c in (o, m - o)]
        return errs

    def labels(self) -> list[tuple[int, ...]]:
        """``h(i)`` for every index: the child bit chosen at each level."""
        errs = self.partition_errors()
        if errs:
            raise BlockGradingError("; ".join(errs))
        labels: list[tuple[int, ...]] = [()] * self.D
        blocks = [(0, self.D)]
        for offs in self.splits:
            nxt = []
            for (start, size), o in zip(blocks, offs):
                for i in range(start, start + size):
                    labels[i] = labels[i] + (int(i >= start + o),)
                nxt += [(start, o), (start + o, size - o)]
            blocks = nxt
        return labels

    def grade_table(self) -> list[list[tuple[int, ...]]]:
        h = self.labels()
        return [[tuple(a ^ b for a, b in zip(hi, hj)) for hj in h] for hi in h]

    def to_json(self) -> dict:
        return {"D": self.D, "s": self.depth, "splits": [list(x) for x in self.splits]}


def block_grade_of_entry(bg: BlockGrading, i: int, j: int) -> tuple[int, ...]:
    if not (0 <= i < bg.D and 0 <= j < bg.D):
        raise IndexError(f"entry ({i},{j}) outside a {bg.D}x{bg.D} matrix")
    h = bg.labels()
    return tuple(a ^ b for a, b in zip(h[i], h[j]))


MetricLike = Union[MetricSignature, Sequence[Sequence]]


def _metric_diag(metric: MetricLike, cert: Certificate) -> list[Fraction] | None:
    if isinstance(metric, MetricSignature):
        return [Fraction(x) for x in metric.diag]
    g = [[Fraction(x) for x in r] for r in metric]
    d = len(g)
    if any(len(r) != d for r in g):
        cert.add("metric_diagonal", False, "metric is not square")
        return None
    nonzero = any(x for r in g for x in r)
    if nonzero and all(g[i][j] == -g[j][i] for i in range(d) for j in range(d)):
        cert.add("metric_diagonal", False,
                 "skew-symmetric metric is not compatible with the block grading")
        return None
    if any(g[i][j] for i in range(d) for j in range(d) if i != j):
        cert.add("metric_diagonal", False, "metric must be diagonal")
        return None
    if any(g[i][i] == 0 for i in range(d)):
        cert.add("metric_diagonal", False, "metric is singular")
        return None
    return [g[i][i] for i in range(d)]


def verify_block_grading(bg: BlockGrading, metric: MetricLike) -> Certificate:
    cert = Certificate(f"block grading of R({bg.D}), s={bg.depth}")
    cert.add("depth_bound", 1 << bg.depth <= bg.D, f"2^{bg.depth} vs D={bg.D}")
    errs = bg.partition_errors()
    cert.add("partition", not errs, "; ".join(errs))
    g = _metric_diag(metric, cert)
    if g is not None:
        cert.add("metric_dimension", len(g) == bg.D, f"metric of size {len(g)}")
    if errs or g is None or len(g) != bg.D:
        return cert
    t = bg.grade_table()
    d = bg.D
    bad = [(i, k, j) for i in range(d) for k in range(d) for j in range(d)
           if tuple(a ^ b for a, b in zip(t[i][k], t[k][j])) != t[i][j]]
    cert.add("multiplicative_closure", not bad, f"{len(bad)} failing triples, first {bad[:3]}" if bad else f"{d ** 3} triples")
    bad = [(i, j) for i in range(d) for j in range(d) if t[i][j] != t[j][i]]
    cert.add("transpose_invariance", not bad, f"{bad[:3]}" if bad else "")
    # (g^-1 E_ij^t g) = (g_j / g_i) E_ji, so each grade sector must be closed under (i,j) -> (j,i)
    bad = []
    for i in range(d):
        for j in range(d):
            if g[j] / g[i] and t[j][i] != t[i][j]:
                bad.append((i, j))
    cert.add("adjoint_invariance", not bad, f"{bad[:3]}" if bad else "")
    occupied = {sum(b << k for k, b in enumerate(x)) for row in t for x in row}
    r = len(gf2_basis(occupied))
    cert.add("grading_rank", r == bg.depth, f"{r}")
    cert.data.update(bg.to_json(), grading_rank=r, grades=[[list(x) for x in row] for row in t])
    return cert


def tensorial_grading_rank(s: int) -> int:
    """Grading rank of R(2^s) seen as Cl(2,0)^(x)s = Cl(s,s) through the R(2) representation."""
    iso = lemma1_embed(s, Signature.of(0, 0))
    masks = list(iso.source.blades())
    # the 4^s blades map to a basis of the tensor power, hence of R(2^s)
    if rank(iso.blade_image(b).terms for b in masks) != 4 ** s:
        raise BlockGradingError("tensor basis does not span R(2^s)")
    return len(gf2_basis(masks))


def compare_tensorial(s: int) -> Certificate:
    D = 1 << s
    cert = Certificate(f"tensorial vs block grading on R({D})")
    block = verify_block_grading(BlockGrading.even(D, s), MetricSignature(D))
    nt = block.data.get("grading_rank")
    tr = tensorial_grading_rank(s)
    cert.add("block_grading_valid", block.passed)
    cert.add("double_grading", tr == 2 * s and nt == s, f"tensorial {tr}, block {nt}")
    cert.data.update(D=D, s=s, tensorial_rank=tr, block_rank=nt)
    return cert


def total_grading_rank(bg: BlockGrading, sig: Signature) -> int:
    """Rank of the grading of A(D) = R(D) (x) A combining the block grading with Gamma(A)."""
    bg.labels()
    return bg.depth + sig.n
