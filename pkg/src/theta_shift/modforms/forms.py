"""Cusp-form data: ingestion, validation, normalized coefficients.

Coefficient files are plain text so LMFDB-style exports convert with a
one-liner: header lines `level=`, `weight=`, `char_kronecker=` or
`char_table=`, then one `a <n> <re> [<im>]` line per coefficient.

Forms of level N0 with 4 not dividing N0 are accepted by lifting to
lcm(4, N0) with coefficients unchanged; the divisibility-sensitive
residual-constant checks all use the lifted level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..arith import DirichletCharacter, char_from_kronecker, deserialize_character


@dataclass(frozen=True)
class CuspForm:
    level: int
    weight: int
    character: DirichletCharacter
    coeffs: np.ndarray = field(repr=False)  # coeffs[n-1] = a(n)
    label: str = ""
    notes: tuple = ()

    def __post_init__(self):
        if self.level % 4 != 0:
            raise ValueError(f"level must be divisible by 4 (lift first), got {self.level}")
        if self.weight < 3:
            raise ValueError(f"weight must be >= 3, got {self.weight}")
        if len(self.coeffs) == 0:
            raise ValueError("empty coefficient list")
        notes = list(self.notes)
        if self.coeffs[0] != 1:
            notes.append("a(1) != 1: not arithmetically normalized (non-newform input)")
        notes.extend(deligne_warnings(self.coeffs, self.weight))
        object.__setattr__(self, "notes", tuple(notes))

    @property
    def n_coeffs(self) -> int:
        return len(self.coeffs)

    def a(self, n: int):
        if not 1 <= n <= len(self.coeffs):
            raise IndexError(
                f"a({n}) unavailable: coefficients stored up to M={len(self.coeffs)}")
        return self.coeffs[n - 1]

    def A(self, n: int):
        """Normalized coefficient a(n) / n^((k-1)/2)."""
        return self.a(n) / float(n) ** ((self.weight - 1) / 2.0)

    def A_array(self, ns: np.ndarray) -> np.ndarray:
        ns = np.asarray(ns)
        if ns.min() < 1 or ns.max() > len(self.coeffs):
            raise IndexError(
                f"coefficient range [1, {len(self.coeffs)}] exceeded "
                f"(requested up to {int(ns.max())})")
        return self.coeffs[ns - 1] / ns.astype(np.float64) ** ((self.weight - 1) / 2.0)


def coeff_A(f: CuspForm, n: int):
    return f.A(n)


def deligne_warnings(coeffs: np.ndarray, weight: int, limit: int = 20000) -> list:
    """Warn-level Deligne sanity |a(p)| <= 2 p^((k-1)/2) at primes p <= limit."""
    m = min(len(coeffs), limit)
    sieve = np.ones(m + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(math.isqrt(m)) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    primes = np.nonzero(sieve)[0]
    if len(primes) == 0:
        return []
    vals = np.abs(coeffs[primes - 1])
    bound = 2.0 * primes.astype(np.float64) ** ((weight - 1) / 2.0)
    bad = primes[vals > bound * (1 + 1e-12)]
    return [f"Deligne bound violated at p={p} (non-newform input?)" for p in bad[:5]]


def r1(n: int) -> int:
    """Representations of n as one square: 1 at 0, 2 at positive squares."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 1
    r = math.isqrt(n)
    return 2 if r * r == n else 0


def load_form(path) -> CuspForm:
    """Read a coefficient file; lifts the level into 4Z if needed."""
    header = {}
    pairs = {}
    char_table = None
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("a "):
                parts = line.split()
                if len(parts) not in (3, 4):
                    raise ValueError(f"{path}:{line_no}: malformed coefficient line")
                n = int(parts[1])
                re = float(parts[2])
                im = float(parts[3]) if len(parts) == 4 else 0.0
                pairs[n] = complex(re, im) if im else re
            elif "=" in line:
                key, val = line.split("=", 1)
                header[key.strip()] = val.strip()
            else:
                raise ValueError(f"{path}:{line_no}: unparseable line {line!r}")
    for key in ("level", "weight"):
        if key not in header:
            raise ValueError(f"{path}: missing header {key}=")
    level0 = int(header["level"])
    weight = int(header["weight"])
    level = math.lcm(4, level0)
    notes = []
    if level != level0:
        notes.append(f"level lifted {level0} -> {level}")
    if "char_kronecker" in header:
        chi = char_from_kronecker(int(header["char_kronecker"]), level)
    elif "char_table" in header:
        table = [complex(v) for v in header["char_table"].split(",")]
        char_table = [
            v if abs(v.imag) > 0 else v.real for v in table]
        chi = deserialize_character({
            "modulus": level,
            "value_table": [(complex(v).real, complex(v).imag) for v in char_table],
        })
    else:
        from ..arith import trivial_character
        chi = trivial_character(level)
    if not pairs:
        raise ValueError(f"{path}: no coefficients")
    M = max(pairs)
    missing = [n for n in range(1, M + 1) if n not in pairs]
    if missing:
        raise ValueError(f"{path}: coefficient gaps starting at a({missing[0]})")
    any_complex = any(isinstance(v, complex) for v in pairs.values())
    dtype = np.complex128 if any_complex else np.float64
    coeffs = np.array([pairs[n] for n in range(1, M + 1)], dtype=dtype)
    return CuspForm(level=level, weight=weight, character=chi, coeffs=coeffs,
                    label=header.get("label", str(path)), notes=tuple(notes))


def save_form(path, f: CuspForm, n_max: int | None = None) -> None:
    n_max = min(n_max or f.n_coeffs, f.n_coeffs)
    with open(path, "w") as fh:
        fh.write(f"level={f.level}\nweight={f.weight}\n")
        label = f.character.label
        if label.startswith("(") and "/.) mod" in label:
            fh.write(f"char_kronecker={label[1:label.index('/')]}\n")
        if f.label:
            fh.write(f"label={f.label}\n")
        complex_coeffs = np.iscomplexobj(f.coeffs)
        for n in range(1, n_max + 1):
            v = f.coeffs[n - 1]
            if complex_coeffs and v.imag:
                fh.write(f"a {n} {v.real!r} {v.imag!r}\n")
            else:
                fh.write(f"a {n} {int(v.real) if float(v.real).is_integer() else v.real!r}\n")
