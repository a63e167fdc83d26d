"""Optional on-disk persistence of memoized results.

When ``STABLE_TWIST_CACHE_DIR`` is set, character values (up to S_12),
plethysm expansions and stable multiplicities are written to a versioned
text file of ``key<TAB>value`` lines and reloaded on the next run.
"""

from __future__ import annotations

import logging
import os
from fractions import Fraction
from pathlib import Path

from . import characters, symfunc
from .partitions import Partition, format_partition, parse_partition

ENV_VAR = "STABLE_TWIST_CACHE_DIR"
VERSION = "v1"
FILENAME = f"stabletwist-cache-{VERSION}.tsv"
HEADER = f"#stabletwist-cache\t{VERSION}"
MAX_CHARACTER_WEIGHT = 12

log = logging.getLogger(__name__)


def cache_path() -> Path | None:
    root = os.environ.get(ENV_VAR)
    return Path(root) / FILENAME if root else None


def _encode_expansion(exp: symfunc.SchurExpansion) -> str:
    return ";".join(f"{format_partition(lam)}={c}" for lam, c in exp.items())


def _decode_expansion(degree: int, text: str) -> symfunc.SchurExpansion:
    coeffs = {}
    for item in filter(None, text.split(";")):
        lam, c = item.split("=")
        coeffs[parse_partition(lam)] = Fraction(c)
    return symfunc.SchurExpansion(degree, coeffs)


def dump_lines() -> list[str]:
    lines = [HEADER]
    for (lam, mu), value in sorted(characters.memoized_character_values(MAX_CHARACTER_WEIGHT)):
        lines.append(f"chi:{format_partition(lam)}:{format_partition(mu)}\t{value}")
    for (k, l), exp in sorted(symfunc._PLETHYSM_MEMO.items()):
        lines.append(f"pleth:{k}:{l}\t{_encode_expansion(exp)}")
    for mu, m in sorted(symfunc._NU_INFINITY_MEMO.items()):
        lines.append(f"nuinf:{format_partition(mu)}\t{m.value}@{m.witnesses[0]},{m.witnesses[1]}")
    return lines


def load_lines(lines) -> int:
    """Seed the memos; returns the number of entries read."""
    lines = iter(lines)
    if next(lines, "").rstrip("\n") != HEADER:
        log.warning("ignoring cache with unknown header")
        return 0
    n = 0
    chi = []
    for line in lines:
        line = line.rstrip("\n")
        if not line:
            continue
        key, value = line.split("\t", 1)
        kind, _, rest = key.partition(":")
        if kind == "chi":
            lam, mu = rest.split(":")
            chi.append(((parse_partition(lam), parse_partition(mu)), int(value)))
        elif kind == "pleth":
            k, l = map(int, rest.split(":"))
            symfunc._PLETHYSM_MEMO[(k, l)] = _decode_expansion(k * l, value)
        elif kind == "nuinf":
            mu = parse_partition(rest)
            v, w = value.split("@")
            k, l = map(int, w.split(","))
            symfunc._NU_INFINITY_MEMO[mu] = symfunc.StableMultiplicity(mu, int(v), (k, l))
        else:
            continue
        n += 1
    characters.seed_character_values(chi)
    return n


def load() -> int:
    path = cache_path()
    if path is None or not path.exists():
        return 0
    with path.open() as fh:
        return load_lines(fh)


def save() -> Path | None:
    path = cache_path()
    if path is None:
        return None
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text("\n".join(dump_lines()) + "\n")
    tmp.replace(path)
    return path
