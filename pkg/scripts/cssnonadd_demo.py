#!/usr/bin/env python3
"""Twisted-CSS-based family on a weakly self-dual [18,6,8] code.

Compares the ((18,64,2)) nonadditive code with the additive CSS code of the
same dimension built from the same binary code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from qnonadd import KLMode, LinearBinaryCode, build_css, find_stabilizer, kl_check, min_distance
from qnonadd.nonadditive import build_cssnonadd

ROWS = (
    "101101101100101111",
    "001111111010011011",
    "101010001101100010",
    "110001011101110111",
    "011011101001111110",
    "011000101101000101",
)


@dataclass(frozen=True)
class Config:
    rows: tuple[str, ...] = ROWS
    d: int = 2


def main(cfg: Config = Config()) -> None:
    code = LinearBinaryCode.from_strs(list(cfg.rows))
    print(f"C: n={code.n} k={code.k} dist={min_distance(code)} dual dist={min_distance(code.dual())}")
    for name, build in (("css", build_css), ("cssnonadd", lambda c: build_cssnonadd(c, cfg.d))):
        t0 = time.perf_counter()
        b = build(code)
        kl = kl_check(b, cfg.d, KLMode.GENERAL, workers=1).passed
        st = find_stabilizer(b)
        print(f"{name:10s} params=({b.n},{b.K},{cfg.d}) kl={kl} stabilizer generators={st.m} "
              f"time={time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
