"""Integer coefficient sequences and their shape.

Coefficients are Python ints, so nothing overflows. A :class:`CoeffSeq` is a
tuple subclass: it compares equal to a plain tuple with the same entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class CoeffSeq(tuple):
    """Coefficients ``s_0 .. s_d`` with trailing zeros trimmed."""

    def __new__(cls, coeffs: Iterable[int] = (1,)):
        values = [int(c) for c in coeffs]
        if any(c < 0 for c in values):
            raise ValueError("coefficients must be nonnegative")
        while len(values) > 1 and values[-1] == 0:
            values.pop()
        if not values:
            values = [0]
        return super().__new__(cls, values)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def render(self) -> str:
        return render(self)

    def to_json(self) -> list[str]:
        return [str(c) for c in self]

    @classmethod
    def from_json(cls, data: Iterable[str]) -> "CoeffSeq":
        return cls(int(c) for c in data)

    def __repr__(self) -> str:
        return f"CoeffSeq({list(self)})"


def render(p: Iterable[int]) -> str:
    """Text form such as ``1 + 16x + 15x^2``; zero coefficients are skipped."""
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            coef = "" if c == 1 else str(c)
            terms.append(f"{coef}x" if k == 1 else f"{coef}x^{k}")
    return " + ".join(terms) if terms else "0"


def seq_add(p: Iterable[int], q: Iterable[int]) -> CoeffSeq:
    p, q = list(p), list(q)
    if len(p) < len(q):
        p, q = q, p
    out = p[:]
    for k, c in enumerate(q):
        out[k] += c
    return CoeffSeq(out)


def seq_shift(p: Iterable[int], by: int = 1) -> CoeffSeq:
    """Multiply by ``x**by``."""
    return CoeffSeq([0] * by + list(p))


def seq_mul(p: Iterable[int], q: Iterable[int]) -> CoeffSeq:
    p, q = list(p), list(q)
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return CoeffSeq(out)


def seq_pow(p: Iterable[int], e: int) -> CoeffSeq:
    out = CoeffSeq([1])
    p = CoeffSeq(p)
    for _ in range(e):
        out = seq_mul(out, p)
    return out


def seq_zykov(p: Iterable[int], q: Iterable[int]) -> CoeffSeq:
    """Polynomial of a Zykov sum from its summands' polynomials: ``p + q - 1``.

    A stable set of G1 + G2 lies entirely on one side, so only the empty set
    is shared.
    """
    p, q = CoeffSeq(p), CoeffSeq(q)
    if p[0] != 1 or q[0] != 1:
        raise ValueError("Zykov combination needs constant terms equal to 1")
    out = seq_add(p, q)
    return CoeffSeq((1,) + out[1:])


# -- shape -------------------------------------------------------------------


def head_end(p: tuple[int, ...]) -> int:
    """Largest t with p[0] <= p[1] <= ... <= p[t]."""
    t = 0
    while t + 1 < len(p) and p[t] <= p[t + 1]:
        t += 1
    return t


def tail_start(p: tuple[int, ...]) -> int:
    """Smallest t with p[t] >= p[t+1] >= ... >= p[-1]."""
    t = len(p) - 1
    while t > 0 and p[t - 1] >= p[t]:
        t -= 1
    return t


def _check_index(p: tuple[int, ...], t: int) -> None:
    if not 0 <= t < len(p):
        raise IndexError(f"index {t} outside 0..{len(p) - 1}")


def tail_nonincreasing_from(p: Iterable[int], t: int) -> bool:
    """True iff ``p[t] >= p[t+1] >= ... >= p[degree]``."""
    p = tuple(p)
    _check_index(p, t)
    return tail_start(p) <= t


def head_nondecreasing_through(p: Iterable[int], t: int) -> bool:
    """True iff ``p[0] <= p[1] <= ... <= p[t]``."""
    p = tuple(p)
    _check_index(p, t)
    return head_end(p) >= t


def valley(p: tuple[int, ...]) -> int | None:
    """First ascent after the first descent: the j > head_end with p[j] < p[j+1].

    None iff the sequence is unimodal.
    """
    for j in range(head_end(p) + 1, len(p) - 1):
        if p[j] < p[j + 1]:
            return j
    return None


def first_logconcavity_violation(p: Iterable[int]) -> int | None:
    p = tuple(p)
    for i in range(1, len(p) - 1):
        if p[i] * p[i] < p[i - 1] * p[i + 1]:
            return i
    return None


def is_log_concave(p: Iterable[int]) -> bool:
    return first_logconcavity_violation(p) is None


def is_unimodal(p: Iterable[int]) -> bool:
    p = tuple(p)
    return tail_start(p) <= head_end(p)


@dataclass(frozen=True)
class ShapeReport:
    unimodal: bool
    modes: tuple[int, ...]
    log_concave: bool
    first_logconcavity_violation: int | None
    head_nondecreasing_through: int
    tail_nonincreasing_from: int
    valley: int | None = None

    def to_json(self) -> dict:
        return {
            "unimodal": self.unimodal,
            "modes": list(self.modes),
            "log_concave": self.log_concave,
            "first_logconcavity_violation": self.first_logconcavity_violation,
            "head_nondecreasing_through": self.head_nondecreasing_through,
            "tail_nonincreasing_from": self.tail_nonincreasing_from,
            "valley": self.valley,
        }


def shape(p: Iterable[int]) -> ShapeReport:
    p = tuple(p)
    top = max(p)
    violation = first_logconcavity_violation(p)
    head, tail = head_end(p), tail_start(p)
    return ShapeReport(
        unimodal=tail <= head,
        modes=tuple(k for k, c in enumerate(p) if c == top),
        log_concave=violation is None,
        first_logconcavity_violation=violation,
        head_nondecreasing_through=head,
        tail_nonincreasing_from=tail,
        valley=valley(p),
    )
