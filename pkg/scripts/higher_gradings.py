#!/usr/bin/env python3
"""Sweep higher presentations F(D+ 2^n, D- 2^n) = A(D+, D-) and verify each one."""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from clifgrade.classification import ADJOINT_KINDS, table1
from clifgrade.clifford import generator_cap
from clifgrade.higher import prop2, verify_higher_presentation


@dataclass
class Config:
    fields: list[str] = field(default_factory=lambda: [r.field_name for r in table1()])
    metrics: list[tuple[int, int]] = field(default_factory=lambda: [(1, 0), (1, 1), (2, 0)])
    max_n: int = 1
    max_full_dim: int = 8
    json: bool = False


def run(cfg: Config) -> list[dict]:
    rows = []
    for name in cfg.fields:
        for kind in ADJOINT_KINDS:
            for dp, dm in cfg.metrics:
                for n in range(cfg.max_n + 1):
                    if (dp + dm) << n > cfg.max_full_dim:
                        continue
                    try:
                        hp = prop2(name, dp, dm, n, kind)
                    except ValueError:
                        continue
                    if hp.A_signature.n > generator_cap():
                        continue
                    t0 = time.perf_counter()
                    cert = verify_higher_presentation(hp)
                    rows.append({
                        **hp.to_json(),
                        "passed": cert.passed,
                        "dimension": cert.data["A_dimension"],
                        "grading_rank": cert.data["A_grading_rank"],
                        "reduced": cert.data["reduced"],
                        "seconds": round(time.perf_counter() - t0, 3),
                    })
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--max-full-dim", type=int, default=Config.max_full_dim)
    p.add_argument("--field", action="append", dest="fields")
    p.add_argument("--json", action="store_true")
    a = p.parse_args()
    cfg = Config(max_n=a.max_n, max_full_dim=a.max_full_dim, json=a.json)
    if a.fields:
        cfg.fields = a.fields
    rows = run(cfg)
    if cfg.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2, sort_keys=True))
        return
    for r in rows:
        full = r["full_metric"]
        print(f"{r['field']:6} {r['adjoint']:4} n={r['n']} F({full[0]},{full[1]}) = {r['A']:>9}"
              f"{tuple(r['reduced_metric'])} dag{tuple(r['A_adjoint'])}  dim {r['dimension']:>3}"
              f"  rank {r['grading_rank']}/{r['expected_grading_rank']}"
              f"{' reduced' if r['reduced'] else ''}  {'PASS' if r['passed'] else 'FAIL'}")
    print(f"{sum(r['passed'] for r in rows)}/{len(rows)} presentations verified")


if __name__ == "__main__":
    main()
