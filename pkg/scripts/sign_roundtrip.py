#!/usr/bin/env python3
"""Random stabilizer groups through codespace -> sign table -> rebuilt group.

Reports how many round trips reproduce the codespace, and how often the
pure-Z offset is nonzero.
"""

from __future__ import annotations

import argparse
import random
from dataclasses import dataclass

from qnonadd.gf2core import rank_rows
from qnonadd.pauli import PauliWord, commutes
from qnonadd.stabilizer import (
    StabilizerGroup,
    codespace_basis,
    coset_structure,
    extract_signs,
    rebuild_stabilizer,
    verify_sign_identities,
)


@dataclass(frozen=True)
class Config:
    trials: int = 200
    n_max: int = 6
    seed: int = 0


def random_group(rng: random.Random, n: int) -> StabilizerGroup:
    m = rng.randint(0, n)
    gens: list[PauliWord] = []
    for _ in range(1000):
        if len(gens) == m:
            break
        w = PauliWord(n, rng.getrandbits(1), rng.getrandbits(n), rng.getrandbits(n))
        if not w.self_inverse or not all(commutes(w, g) for g in gens):
            continue
        if rank_rows([(g.alpha << n) | g.beta for g in gens + [w]]) == len(gens) + 1:
            gens.append(w)
    return StabilizerGroup(n, tuple(gens))


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    cfg = Config(a.trials, a.n_max, a.seed)
    rng = random.Random(cfg.seed)
    ok = offset = 0
    for _ in range(cfg.trials):
        s = random_group(rng, rng.randint(1, cfg.n_max))
        basis = codespace_basis(s)
        cs = coset_structure(s)
        t = extract_signs(basis, cs.C_basis, cs.Gamma_basis, cs.offset)
        offset += bool(t.offset)
        if not verify_sign_identities(t).passed:
            continue
        r = rebuild_stabilizer(t)
        ok += all(r.fixes(v) for v in basis) and all(s.fixes(v) for v in codespace_basis(r))
    print(f"round trips: {ok}/{cfg.trials} reproduce the codespace; nonzero offset in {offset}")


if __name__ == "__main__":
    main()
