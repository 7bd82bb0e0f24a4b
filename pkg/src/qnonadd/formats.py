"""Line-oriented text formats for codes, bases, stabilizers and sign tables.

Lines starting with ``#`` are comments everywhere.
"""

from __future__ import annotations

import json
import shlex
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .codebook import CodebookCode
from .css import LinearBinaryCode
from .gf2core import BitMatrix, bits_to_str, str_to_bits
from .pauli import PauliWord
from .stabilizer import SignTable, StabilizerGroup
from .states import QuantumCodeBasis, SignedSuperposition


class ParseError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if s.startswith("#"):
            continue
        out.append((no, s))
    return out


def _bits(token: str, n: int, no: int) -> int:
    if len(token) != n:
        raise ParseError(f"line {no}: expected {n} bits, got {token!r}")
    try:
        return str_to_bits(token)
    except ValueError as exc:
        raise ParseError(f"line {no}: {exc}") from None


# -- binary codes: "n k" then k rows ----------------------------------------


def parse_code_rows(text: str) -> tuple[int, list[int]]:
    lines = [(no, s) for no, s in _content_lines(text) if s]
    if not lines:
        raise ParseError("empty code file")
    no, head = lines[0]
    try:
        n, k = (int(t) for t in head.split())
    except ValueError:
        raise ParseError(f"line {no}: expected header 'n k', got {head!r}") from None
    rows = [_bits(s, n, no) for no, s in lines[1:]]
    if len(rows) != k:
        raise ParseError(f"header declares {k} rows, found {len(rows)}")
    return n, rows


def format_code_rows(n: int, rows) -> str:
    return "\n".join([f"{n} {len(rows)}"] + [bits_to_str(r, n) for r in rows]) + "\n"


def parse_linear_code(text: str) -> LinearBinaryCode:
    n, rows = parse_code_rows(text)
    try:
        return LinearBinaryCode(n, BitMatrix(n, tuple(rows)))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_codebook(text: str) -> CodebookCode:
    n, rows = parse_code_rows(text)
    try:
        return CodebookCode(n, tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- bases: "n K d", then vectors separated by blank lines -------------------


def format_basis(basis: QuantumCodeBasis, header: list[str] | None = None) -> str:
    out = [f"# {h}" for h in header or []]
    out.append(f"{basis.n} {basis.K} {basis.d}")
    for v in basis.vectors:
        out.append("")
        out.extend(f"{c} {bits_to_str(u, basis.n)}" for u, c in v.items())
    return "\n".join(out) + "\n"


def parse_basis(text: str) -> QuantumCodeBasis:
    lines = _content_lines(text)
    while lines and not lines[0][1]:
        lines.pop(0)
    if not lines:
        raise ParseError("empty basis file")
    no, head = lines[0]
    try:
        n, K, d = (int(t) for t in head.split())
    except ValueError:
        raise ParseError(f"line {no}: expected header 'n K d', got {head!r}") from None
    groups: list[dict[int, int]] = []
    current: dict[int, int] | None = None
    for no, s in lines[1:]:
        if not s:
            current = None
            continue
        if current is None:
            current = {}
            groups.append(current)
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(f"line {no}: expected '<coefficient> <bitstring>'")
        try:
            coef = int(parts[0])
        except ValueError:
            raise ParseError(f"line {no}: bad coefficient {parts[0]!r}") from None
        label = _bits(parts[1], n, no)
        if label in current:
            raise ParseError(f"line {no}: repeated label")
        current[label] = coef
    if len(groups) != K:
        raise ParseError(f"header declares K={K}, found {len(groups)} vectors")
    try:
        return QuantumCodeBasis(n, tuple(SignedSuperposition(n, g) for g in groups), d)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- stabilizers: one Pauli word per line ------------------------------------


def format_stabilizer(s: StabilizerGroup) -> str:
    return "".join(f"{g}\n" for g in s.generators) or f"# trivial group on {s.n} qubits\n"


def parse_stabilizer(text: str, n: int | None = None) -> StabilizerGroup:
    gens = []
    for no, s in _content_lines(text):
        if not s:
            continue
        try:
            gens.append(PauliWord.parse(s))
        except ValueError as exc:
            raise ParseError(f"line {no}: {exc}") from None
    if gens:
        n = gens[0].n
    if n is None:
        raise ParseError("empty stabilizer file and no qubit count given")
    try:
        return StabilizerGroup(n, tuple(gens))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# -- sign tables -------------------------------------------------------------


def format_sign_table(t: SignTable) -> str:
    out = [f"N {t.n}"]
    out += [f"CBASIS {bits_to_str(r, t.n)}" for r in t.c_rows]
    out += [f"GAMMA {bits_to_str(r, t.n)}" for r in t.gamma_rows]
    out += t.lines()
    return "\n".join(out) + "\n"


def parse_sign_table(text: str) -> SignTable:
    n = None
    c_rows, g_rows, sgn, offset = [], [], {}, 0
    for no, s in _content_lines(text):
        if not s:
            continue
        tag, *rest = s.split()
        if tag == "N":
            n = int(rest[0])
            continue
        if n is None:
            raise ParseError(f"line {no}: 'N <n>' must come first")
        if tag == "CBASIS":
            c_rows.append(_bits(rest[0], n, no))
        elif tag == "GAMMA":
            g_rows.append(_bits(rest[0], n, no))
        elif tag == "OFFSET":
            offset = _bits(rest[0], n, no)
        elif tag == "SGN":
            if len(rest) != 3 or rest[2] not in ("+1", "-1", "1"):
                raise ParseError(f"line {no}: expected 'SGN <c> <gamma> <+-1>'")
            sgn[(_bits(rest[0], n, no), _bits(rest[1], n, no))] = int(rest[2])
        else:
            raise ParseError(f"line {no}: unknown tag {tag!r}")
    if n is None:
        raise ParseError("empty sign table")
    return SignTable(n, tuple(c_rows), tuple(g_rows), sgn, offset)


# -- recipes and manifests ---------------------------------------------------

FAMILIES = ("css", "twisted-css", "tau-coset", "cssnonadd", "hadamard11")


@dataclass(frozen=True)
class Recipe:
    family: str
    code_file: str | None = None
    d: int | None = None
    K: int | None = None

    def __str__(self) -> str:
        parts = ["CONSTRUCT", self.family, self.code_file or "-"]
        if self.d is not None:
            parts.append(f"d={self.d}")
        if self.K is not None:
            parts.append(f"K={self.K}")
        return " ".join(parts)


def parse_recipe(text: str) -> list[Recipe]:
    out = []
    for no, s in _content_lines(text):
        if not s:
            continue
        toks = shlex.split(s)
        if toks[0] != "CONSTRUCT" or len(toks) < 2:
            raise ParseError(f"line {no}: expected 'CONSTRUCT <family> <code-file> d=<d> K=<K>'")
        family = toks[1]
        if family not in FAMILIES:
            raise ParseError(f"line {no}: unknown family {family!r}")
        code_file = None
        kv = {}
        for t in toks[2:]:
            if "=" in t:
                key, _, val = t.partition("=")
                if key not in ("d", "K"):
                    raise ParseError(f"line {no}: unknown parameter {key!r}")
                try:
                    kv[key] = int(val)
                except ValueError:
                    raise ParseError(f"line {no}: {key} must be an integer") from None
            elif code_file is None:
                code_file = None if t == "-" else t
            else:
                raise ParseError(f"line {no}: unexpected token {t!r}")
        out.append(Recipe(family, code_file, kv.get("d"), kv.get("K")))
    return out


@dataclass
class RunManifest:
    """Everything needed to replay a CLI run byte for byte."""

    command: str
    argv: list[str]
    inputs: list[str] = field(default_factory=list)
    params: dict[str, int | str | None] = field(default_factory=dict)
    output: str | None = None
    determinism: str = "all scans lexicographic; no randomness"

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(asdict(self), indent=2, sort_keys=True) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> RunManifest:
        return cls(**json.loads(Path(path).read_text()))
