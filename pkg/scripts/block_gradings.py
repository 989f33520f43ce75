#!/usr/bin/env python3
"""Block gradings of R(D): every admissible depth, plus the tensorial comparison on D = 2^s."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from clifgrade.blocks import BlockGrading, compare_tensorial, verify_block_grading
from clifgrade.matrix import MetricSignature


@dataclass
class Config:
    max_d: int = 8
    max_s: int = 3


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-d", type=int, default=Config.max_d)
    p.add_argument("--max-s", type=int, default=Config.max_s)
    a = p.parse_args()
    cfg = Config(a.max_d, a.max_s)
    for d in range(1, cfg.max_d + 1):
        results = []
        for s in range(d.bit_length()):
            cert = verify_block_grading(BlockGrading.even(d, s), MetricSignature(d))
            results.append(f"s={s}:{'ok' if cert.passed else 'FAIL'}")
        print(f"D={d}: " + " ".join(results))
    for s in range(1, cfg.max_s + 1):
        c = compare_tensorial(s)
        print(f"R({1 << s}): tensorial Z2^{c.data['tensorial_rank']}, block Z2^{c.data['block_rank']}"
              f"  {'PASS' if c.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
