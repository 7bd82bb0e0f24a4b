#!/usr/bin/env python3
"""Greedy trivial-stabilizer family over repetition codes, for a range of n.

For each n prints the exponent ell, the dimension reached, the KL result,
the stabilizer order and the verdict.  Small n truncate to 2^ell vectors.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from qnonadd import CodebookCode, KLMode, LinearBinaryCode, find_stabilizer, kl_check, nonadd_verdict
from qnonadd.bounds import ceil_ell_distance2, greedy_ell, trivial_stabilizer_bound
from qnonadd.nonadditive import build_greedy_family
from qnonadd.verify import CriterionInapplicableError


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 6
    n_max: int = 12
    d: int = 2
    mode: KLMode = KLMode.GENERAL


def row(n: int, cfg: SweepConfig) -> str:
    code = LinearBinaryCode.repetition(n)
    t0 = time.perf_counter()
    fam = build_greedy_family(code, cfg.d, cfg.mode)
    b = fam.basis
    kl = kl_check(b, cfg.d, cfg.mode, workers=1).passed
    order = find_stabilizer(b).order
    rep = CodebookCode.from_strs(["0" * n, "1" * n])
    try:
        verdict = nonadd_verdict(b, rep, fam.ell).verdict.value if fam.ell >= 0 else "-"
    except CriterionInapplicableError as exc:
        verdict = f"inapplicable ({exc})"
    dt = time.perf_counter() - t0
    bound = trivial_stabilizer_bound(n, 1, cfg.d)
    extra = ceil_ell_distance2(n) if cfg.d == 2 else "-"
    return (f"{n:3d} {fam.ell:4d} {extra!s:>5} {b.K:5d} {str(kl):>5} {order:5d} "
            f"{'T' if fam.truncated else '-'}  {bound.lhs}<{bound.rhs}:{'ok' if bound.holds else 'no'}  "
            f"{verdict}  {dt:.2f}s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--d", type=int, default=2)
    a = p.parse_args()
    cfg = SweepConfig(a.n_min, a.n_max, a.d)
    print("  n  ell  ceil     K    kl   |St| tr  bound          verdict  time")
    for n in range(cfg.n_min, cfg.n_max + 1):
        if greedy_ell(n, 1, cfg.d) < 0:
            continue
        print(row(n, cfg))


if __name__ == "__main__":
    main()
