"""Arithmetic in GF(2^16), the scalar field of every coding operation.

Field elements are plain Python ints (or numpy uint16) in [0, 0xFFFF],
interpreted in the polynomial basis.  Addition and subtraction are XOR;
multiplication and division go through log/antilog lookup tables built
once at import from a fixed primitive polynomial.

The polynomial is x^16 + x^12 + x^3 + x + 1 (0x1100B) with generator
0x0002.  It is recorded in the on-disk block format so stored data is
self-describing.  Primitivity of the generator is verified while the
tables are built.

Tables are immutable after construction; every operation here is pure
and safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

FIELD_POLY = 0x1100B
GENERATOR = 0x0002
ORDER = 1 << 16          # number of field elements
GROUP_ORDER = ORDER - 1  # size of the multiplicative group


@dataclass(frozen=True)
class GFTables:
    """Log/antilog tables for one (polynomial, generator) choice.

    ``exp`` holds two periods of generator powers (length 2*(2^16-1)) so
    ``exp[log[a] + log[b]]`` never needs a modular reduction.  ``log`` maps
    each nonzero element to its exponent; ``log[0]`` is a filler and must
    never be read.
    """

    poly: int
    generator: int
    exp: np.ndarray  # uint16, length 2 * GROUP_ORDER
    log: np.ndarray  # int32, length ORDER


def _xtime(x: int, poly: int) -> int:
    x <<= 1
    if x & ORDER:
        x ^= poly
    return x


def build_tables(poly: int = FIELD_POLY, generator: int = GENERATOR) -> GFTables:
    """Build exp/log tables, verifying the generator is primitive.

    Raises ValueError if the generator's multiplicative order is less
    than 2^16-1, i.e. if exp would not enumerate every nonzero element.
    """
    exp = np.zeros(2 * GROUP_ORDER, dtype=np.uint16)
    log = np.zeros(ORDER, dtype=np.int32)
    seen = np.zeros(ORDER, dtype=bool)

    x = 1
    for i in range(GROUP_ORDER):
        if seen[x]:
            raise ValueError(
                f"generator {generator:#06x} is not primitive for poly {poly:#07x}:"
                f" cycle closed after {i} steps"
            )
        seen[x] = True
        exp[i] = x
        log[x] = i
        if generator == GENERATOR:
            x = _xtime(x, poly)
        else:
            x = _poly_mul(x, generator, poly)
    if x != 1:
        raise ValueError(f"generator {generator:#06x} does not return to 1")
    exp[GROUP_ORDER:] = exp[:GROUP_ORDER]
    exp.setflags(write=False)
    log.setflags(write=False)
    return GFTables(poly=poly, generator=generator, exp=exp, log=log)


def _poly_mul(a: int, b: int, poly: int) -> int:
    """Carry-less multiply then reduce; used only for non-default generators."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a = _xtime(a, poly)
        b >>= 1
    return r


TABLES = build_tables()
EXP = TABLES.exp
LOG = TABLES.log


def add(a: int, b: int) -> int:
    """Field addition (identical to subtraction): bitwise XOR."""
    return a ^ b


sub = add


def mul(a: int, b: int) -> int:
    """Field multiplication via the log/antilog tables."""
    if a == 0 or b == 0:
        return 0
    return int(EXP[int(LOG[a]) + int(LOG[b])])


def inv(a: int) -> int:
    """Multiplicative inverse; raises ZeroDivisionError for 0."""
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse in GF(2^16)")
    return int(EXP[GROUP_ORDER - int(LOG[a])])


def div(a: int, b: int) -> int:
    """a / b; raises ZeroDivisionError when b is 0."""
    if b == 0:
        raise ZeroDivisionError("division by zero in GF(2^16)")
    if a == 0:
        return 0
    return int(EXP[int(LOG[a]) - int(LOG[b]) + GROUP_ORDER])
