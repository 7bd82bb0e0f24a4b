#!/usr/bin/env python3
"""Build the ((11,2,3)) code and run every check on it."""

from __future__ import annotations

import argparse
import itertools
import time
from dataclasses import dataclass

from qnonadd import (
    KLMode,
    find_distance,
    find_stabilizer,
    hadamard11,
    hadamard_codebook,
    kl_check,
    nonadd_verdict,
)


@dataclass(frozen=True)
class Config:
    ell: int = 1
    workers: int = 1


def run(cfg: Config) -> None:
    t0 = time.perf_counter()
    book = hadamard_codebook()
    rows = book.words
    dists = {bin(a ^ b).count("1") for a, b in itertools.combinations(rows, 2)}
    ext = list(rows) + [r ^ 0x7FF for r in rows]
    ext_min = min(bin(a ^ b).count("1") for a, b in itertools.combinations(ext, 2))
    print(f"codebook params={book.params} pairwise distances={sorted(dists)} extended min={ext_min}")

    basis = hadamard11()
    for d in (3, 4):
        rep = kl_check(basis, d, KLMode.STRICT, workers=cfg.workers, early_exit=d > 3)
        print("\n".join(rep.lines()[:2]))
    print(f"distance={find_distance(basis)}")
    print(f"stabilizer order={find_stabilizer(basis).order}")
    print(nonadd_verdict(basis, book, cfg.ell))
    print(f"elapsed {time.perf_counter() - t0:.3f}s")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--workers", type=int, default=1)
    a = p.parse_args()
    run(Config(workers=a.workers))


if __name__ == "__main__":
    main()
