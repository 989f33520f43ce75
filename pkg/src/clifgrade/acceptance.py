"""The ten acceptance criteria as runnable certificates.

Shared by ``clifgrade selftest`` and ``tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .blocks import BlockGrading, compare_tensorial, verify_block_grading
from .classification import (
    ADJOINT_KINDS,
    DIMENSION_FORMULAS,
    FIELD_NAMES,
    row,
    verify_named_dimension,
    verify_symplectic_iso,
    verify_table1,
)
from .clifford import (
    AdjointSpec,
    CliffordElement,
    Signature,
    adjoint,
    blade_mul,
    classify_clifford,
    grade_of,
)
from .higher import (
    cached_embed,
    prop2,
    table2_adjoint_map,
    verify_higher_presentation,
)
from .lie import (
    ClosureError,
    aut_basis,
    aut_basis_oracle,
    graded_closure_violations,
    same_span,
    structure_constants,
)
from .matrix import MetricSignature
from .report import Certificate


def metrics_up_to(total: int):
    for d in range(1, total + 1):
        for dp in range(d, -1, -1):
            yield MetricSignature(dp, d - dp)


def table1_reproduction() -> Certificate:
    return verify_table1(metrics=((2, 0), (1, 1), (0, 2)))


def dimension_suite(max_d: int = 4) -> Certificate:
    cert = Certificate(f"aut dimensions and oracle spans, D+ + D- <= {max_d}")
    for name in FIELD_NAMES:
        r = row(name)
        for kind in ADJOINT_KINDS:
            label, formula = DIMENSION_FORMULAS[(name, kind)]
            spec = r.adjoint(kind)
            for m in metrics_up_to(max_d):
                basis = aut_basis(r.clifford_signature, spec, m)
                oracle = aut_basis_oracle(r.clifford_signature, spec, m)
                want = formula(m.dim)
                ok = basis.dimension == want and same_span(basis, oracle)
                if not ok:
                    cert.add(f"{name}/{kind}/{m}", False,
                             f"dim {basis.dimension}, {label} = {want}, oracle {oracle.dimension}")
                else:
                    cert.data[f"{name}/{kind}/{m}"] = basis.dimension
    cert.add("all_cases", not cert.failures(), f"{len(cert.data)} cases")
    return cert


def symplectic_identification(ds=(1, 2, 3, 4)) -> Certificate:
    cert = Certificate("U(D;H'') = Sp(2D;R)")
    for d in ds:
        sub = verify_symplectic_iso(d)
        cert.add(f"D={d}", sub.passed,
                 "; ".join(f"{c.name}: {c.detail}" for c in sub.failures()) or f"dim {sub.data['dimension']}")
    return cert


def graded_closure(max_d: int = 3) -> Certificate:
    cert = Certificate(f"graded closure and Jacobi, D+ + D- <= {max_d}")
    for name in FIELD_NAMES:
        r = row(name)
        for kind in ADJOINT_KINDS:
            for m in metrics_up_to(max_d):
                basis = aut_basis(r.clifford_signature, r.adjoint(kind), m)
                key = f"{name}/{kind}/{m}"
                try:
                    sc = structure_constants(basis)
                except ClosureError as exc:
                    cert.add(key, False, str(exc))
                    continue
                graded = graded_closure_violations(basis, sc)
                jac = sc.jacobi_violations()
                if graded or jac or not sc.is_antisymmetric():
                    cert.add(key, False, f"graded {graded[:3]}, jacobi {jac[:3]}")
    n = len(FIELD_NAMES) * len(ADJOINT_KINDS) * len(list(metrics_up_to(max_d)))
    cert.add("all_cases", not cert.failures(), f"{n} algebras")
    return cert


def reduced_grading() -> Certificate:
    cert = Certificate("O(1;H) and O(2;H)")
    one = verify_named_dimension("H", "rev", 1, 0)
    two = verify_named_dimension("H", "rev", 2, 0)
    cert.add("O(1;H)", one.passed and one.data["dimension"] == 1 and one.data["grading_rank"] == 1,
             f"dim {one.data['dimension']}, rank {one.data['grading_rank']}")
    cert.add("O(2;H)", two.passed and two.data["dimension"] == 6 and two.data["grading_rank"] == 2,
             f"dim {two.data['dimension']}, rank {two.data['grading_rank']}")
    return cert


def _base_signatures(max_gen: int = 3):
    for n in range(max_gen + 1):
        for p in range(n, -1, -1):
            yield Signature.of(p, n - p)
    for n in range(max_gen):
        for p in range(n, -1, -1):
            yield Signature.of(p, n - p, complex_flag=True)


def lemma1_table2(max_tensor: int = 2, max_gen: int = 3) -> Certificate:
    cert = Certificate("tensor embeddings and equivalent adjoints")
    maps = cases = 0
    for sig in _base_signatures(max_gen):
        p, q = sig.d_plus, sig.d_minus
        for n_plus in range(max_tensor + 1):
            for n_minus in range(max_tensor + 1 - n_plus):
                try:
                    cached_embed(n_plus + n_minus, sig, "+" * n_plus + "-" * n_minus)
                    maps += 1
                except ClosureError as exc:
                    cert.add(f"embed {sig} ({n_plus},{n_minus})", False, str(exc))
                    continue
                for ap in range(p + 1):
                    for am in range(q + 1):
                        inner = AdjointSpec(ap, am)
                        try:
                            out = table2_adjoint_map(n_plus, n_minus, inner, sig)
                        except ClosureError as exc:
                            cert.add(f"{sig} {inner} ({n_plus},{n_minus})", False, str(exc))
                            continue
                        cases += 1
                        if out != AdjointSpec(ap + n_plus, am + n_minus):
                            cert.add(f"{sig} {inner} ({n_plus},{n_minus})", False, f"got {out}")
    cert.add("all_cases", not cert.failures(), f"{maps} maps, {cases} adjoint cases")
    return cert


def prop2_instances() -> Certificate:
    cert = Certificate("higher presentations")
    cases = [
        ("R", 1, 0, 1, None, Signature.of(1, 1), AdjointSpec(1, 0), 1, None),
        ("R", 1, 0, 2, None, Signature.of(2, 2), AdjointSpec(2, 0), 6, None),
        ("2H", 1, 0, 1, "rev", Signature.of(1, 4), AdjointSpec(1, 3), 16, 5),
        ("C", 1, 1, 0, "conj", Signature.of(1, 2), AdjointSpec(0, 1), None, 3),
    ]
    for field_name, dp, dm, n, kind, sig, adj, dim, rank_ in cases:
        hp = prop2(field_name, dp, dm, n, kind)
        sub = verify_higher_presentation(hp)
        ok = (hp.A_signature == sig and hp.A_adjoint == adj and sub.passed
              and (dim is None or sub.data["A_dimension"] == dim)
              and (rank_ is None or sub.data["A_grading_rank"] == rank_))
        cert.add(f"{field_name}({dp},{dm}) n={n}", ok,
                 f"{hp.A_signature} {hp.A_adjoint}: dim {sub.data['A_dimension']}, "
                 f"rank {sub.data['A_grading_rank']}"
                 + ("" if sub.passed else f"; failing {[c.name for c in sub.failures()]}"))
    return cert


def periodicity_counterexample() -> Certificate:
    cert = Certificate("Cl(2,2) vs Cl(4,0)")
    a, b = classify_clifford(Signature.of(2, 2)), classify_clifford(Signature.of(4, 0))
    cert.add("Cl(2,2)=R(4)", str(a) == "R(4)", str(a))
    cert.add("Cl(4,0)=H(2)", str(b) == "H(2)", str(b))
    cert.add("not_isomorphic", a != b)
    return cert


def block_grading_suite(max_d: int = 6) -> Certificate:
    cert = Certificate(f"block gradings, D <= {max_d}")
    n = 0
    for d in range(1, max_d + 1):
        s = 0
        while 1 << s <= d:
            for m in metrics_up_to(d):
                if m.dim != d:
                    continue
                sub = verify_block_grading(BlockGrading.even(d, s), m)
                n += 1
                if not sub.passed:
                    cert.add(f"D={d} s={s} {m}", False, str([c.name for c in sub.failures()]))
            s += 1
        too_deep = verify_block_grading(BlockGrading.even(d, s), MetricSignature(d))
        if too_deep.passed:
            cert.add(f"D={d} s={s} rejected", False, "2^s > D accepted")
    cert.add("admissible_pass", not cert.failures(), f"{n} gradings")
    skew = verify_block_grading(BlockGrading.even(2, 1), [[0, 1], [-1, 0]])
    cert.add("skew_rejected", not skew.passed and any("skew" in c.detail for c in skew.failures()))
    for s in (1, 2):
        sub = compare_tensorial(s)
        cert.add(f"tensorial_vs_block D={1 << s}", sub.passed,
                 f"{sub.data['tensorial_rank']} vs {sub.data['block_rank']}")
    return cert


def _random_element(rng: random.Random, sig: Signature) -> CliffordElement:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        terms[rng.randrange(sig.dim)] = rng.choice([-3, -2, -1, 1, 2, 3])
    return CliffordElement(sig, terms)


def _random_spec(rng: random.Random, sig: Signature) -> AdjointSpec:
    return AdjointSpec(rng.randint(0, sig.d_plus), rng.randint(0, sig.d_minus))


def algebra_axioms(samples: int = 1000, max_gen: int = 5, seed: int = 20240613) -> Certificate:
    cert = Certificate(f"algebra axioms, {samples} samples per signature, d+ + d- <= {max_gen}")
    rng = random.Random(seed)
    for n in range(max_gen + 1):
        for p in range(n, -1, -1):
            sig = Signature.of(p, n - p)
            fails = {k: 0 for k in ("associativity", "anticommutation", "anti_involution",
                                    "grade_preservation", "grade_additivity")}
            for _ in range(samples):
                x, y, z = (_random_element(rng, sig) for _ in range(3))
                if (x * y) * z != x * (y * z):
                    fails["associativity"] += 1
                if n:
                    i, j = rng.randint(1, n), rng.randint(1, n)
                    ei, ej = CliffordElement.gen(sig, i), CliffordElement.gen(sig, j)
                    sq = -1 if i > p else 1
                    ok = (ei * ej + ej * ei == (2 * sq if i == j else 0))
                    if not ok:
                        fails["anticommutation"] += 1
                spec = _random_spec(rng, sig)
                if adjoint(x * y, spec) != adjoint(y, spec) * adjoint(x, spec) or adjoint(adjoint(x, spec), spec) != x:
                    fails["anti_involution"] += 1
                b = rng.randrange(sig.dim)
                img = adjoint(CliffordElement.from_blade(sig, b), spec)
                if img.blades() != {b}:
                    fails["grade_preservation"] += 1
                a, c = rng.randrange(sig.dim), rng.randrange(sig.dim)
                _, prod = blade_mul(a, c, sig)
                if grade_of(prod, sig) != tuple(u ^ v for u, v in zip(grade_of(a, sig), grade_of(c, sig))):
                    fails["grade_additivity"] += 1
            bad = {k: v for k, v in fails.items() if v}
            cert.add(str(sig), not bad, f"failures {bad}" if bad else f"{samples} x 5 properties")
    return cert


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    run: Callable[[], Certificate]


CRITERIA = (
    Criterion(1, "Classification table", table1_reproduction),
    Criterion(2, "Dimension suite", dimension_suite),
    Criterion(3, "Symplectic identification", symplectic_identification),
    Criterion(4, "Graded closure", graded_closure),
    Criterion(5, "Reduced grading", reduced_grading),
    Criterion(6, "Embeddings and adjoints", lemma1_table2),
    Criterion(7, "Higher presentation instances", prop2_instances),
    Criterion(8, "Periodicity counterexample", periodicity_counterexample),
    Criterion(9, "Block grading", block_grading_suite),
    Criterion(10, "Algebra axiom suite", algebra_axioms),
)


def run_criteria(numbers=None):
    """Yield ``(criterion, certificate, seconds)`` for the selected criteria."""
    for c in CRITERIA:
        if numbers and c.number not in numbers:
            continue
        t0 = time.perf_counter()
        cert = c.run()
        yield c, cert, time.perf_counter() - t0
