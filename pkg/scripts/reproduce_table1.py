#!/usr/bin/env python3
"""Recompute the classification table: aut dimensions and effective grading ranks per D."""
from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from clifgrade.classification import ADJOINT_KINDS, DIMENSION_FORMULAS, table1
from clifgrade.lie import aut_basis, aut_basis_oracle, effective_grading, same_span
from clifgrade.matrix import MetricSignature


@dataclass
class Config:
    max_d: int = 4
    oracle: bool = True
    json: bool = False


def run(cfg: Config) -> list[dict]:
    out = []
    for r in table1():
        for kind in ADJOINT_KINDS:
            if not r.la_name(kind):
                continue
            label, formula = DIMENSION_FORMULAS[(r.field_name, kind)]
            spec = r.adjoint(kind)
            for d in range(1, cfg.max_d + 1):
                m = MetricSignature(d)
                basis = aut_basis(r.clifford_signature, spec, m)
                rec = {
                    "field": r.field_name, "adjoint": kind, "la": r.la_name(kind), "D": d,
                    "dimension": basis.dimension, "formula": label, "formula_value": formula(d),
                    "grading_rank": effective_grading(basis).rank, "table_rank": r.grading_rank,
                }
                if cfg.oracle:
                    rec["oracle_agrees"] = same_span(basis, aut_basis_oracle(r.clifford_signature, spec, m))
                out.append(rec)
    return out


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-d", type=int, default=Config.max_d)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    cfg = Config(max_d=a.max_d, oracle=not a.no_oracle, json=a.json)
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2, sort_keys=True))
        return
    print(f"{'field':6} {'adj':4} {'D':>2} {'dim':>4} {'formula':>16} {'rank':>4} {'table':>5} oracle")
    for x in rows:
        print(f"{x['field']:6} {x['adjoint']:4} {x['D']:>2} {x['dimension']:>4} "
              f"{x['formula'] + '=' + str(x['formula_value']):>16} {x['grading_rank']:>4} "
              f"{x['table_rank']:>5} {x.get('oracle_agrees', '-')}")


if __name__ == "__main__":
    main()
