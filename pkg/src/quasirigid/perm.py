"""Permutations of {1..n} written in dotted cycle notation.

A cycle string such as ``(123.45.6.)`` lists cycles terminated by dots;
within a cycle each element maps to the next one and the last wraps to the
first, so ``(123.)`` sends 1 -> 2 -> 3 -> 1.
"""
from __future__ import annotations

import itertools
import math
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

CycleType = tuple[int, ...]


class PermutationError(ValueError):
    pass


class CycleParseError(PermutationError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    """Bijection of {1..n}; ``images[x - 1]`` is the image of ``x``."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n < 1:
            raise PermutationError("degree must be at least 1")
        if sorted(self.images) != list(range(1, n + 1)):
            raise PermutationError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee a bijection
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __pow__(self, k: int) -> Permutation:
        return power(self, k)

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r})"

    def inverse(self) -> Permutation:
        return inverse(self)

    def cycles(self) -> list[tuple[int, ...]]:
        return cycle_decomposition(self)

    def cycle_type(self) -> CycleType:
        return cycle_type(self)

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, 1))


def identity(n: int) -> Permutation:
    if n < 1:
        raise PermutationError("degree must be at least 1")
    return Permutation._trusted(tuple(range(1, n + 1)))


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} != {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p q``, applying ``q`` first: ``(p q)(x) = p(q(x))``."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation._trusted(tuple(pi[y - 1] for y in q.images))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.degree
    for x, y in enumerate(p.images, 1):
        inv[y - 1] = x
    return Permutation._trusted(tuple(inv))


def power(p: Permutation, k: int) -> Permutation:
    if k < 0:
        return power(inverse(p), -k)
    result = identity(p.degree)
    base = p
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def cycle_decomposition(p: Permutation) -> list[tuple[int, ...]]:
    """Canonical cycles: each starts at its minimum, sorted by that minimum.

    Fixed points appear as 1-cycles.
    """
    seen = [False] * (p.degree + 1)
    cycles = []
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p.images[x - 1]
        cycles.append(tuple(cyc))
    return cycles


def cycle_type(p: Permutation) -> CycleType:
    return tuple(sorted(len(c) for c in cycle_decomposition(p)))


def from_cycles(cycles: Iterable[Iterable[int]], n: int) -> Permutation:
    images = list(range(1, n + 1))
    seen: set[int] = set()
    for cyc in cycles:
        cyc = list(cyc)
        if not cyc:
            raise CycleParseError("empty cycle")
        for a in cyc:
            if not 1 <= a <= n:
                raise CycleParseError(f"label {a} out of range 1..{n}")
            if a in seen:
                raise CycleParseError(f"label {a} repeated")
            seen.add(a)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b
    return Permutation._trusted(tuple(images))


_CYCLE_STRING = re.compile(r"\((?:\d+\.)+\)")


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse dotted cycle notation such as ``(13.2645.)`` into a degree-n permutation.

    Labels are written without separators, so multi-digit labels are only
    unambiguous for n <= 9; for larger degrees labels within a cycle may be
    separated by commas, e.g. ``(1,10.2.)``. Omitted labels are fixed.
    """
    if n < 1:
        raise PermutationError("degree must be at least 1")
    if not _CYCLE_STRING.fullmatch(text.replace(",", "")):
        raise CycleParseError(f"malformed cycle string: {text!r}")
    cycles = []
    for group in text[1:-1].split(".")[:-1]:
        if "," in group:
            labels = group.split(",")
        elif n <= 9:
            labels = list(group)
        else:
            labels = [group]
        try:
            cycles.append([int(s) for s in labels])
        except ValueError:
            raise CycleParseError(f"malformed cycle string: {text!r}") from None
    return from_cycles(cycles, n)


def format_cycles(p: Permutation) -> str:
    sep = "" if p.degree <= 9 else ","
    return "(" + "".join(sep.join(map(str, c)) + "." for c in cycle_decomposition(p)) + ")"


def conjugate(b: Permutation, p: Permutation) -> Permutation:
    """``b p b^-1``."""
    _check_degrees(b, p)
    bi, pi = b.images, p.images
    out = [0] * p.degree
    # b p b^-1 sends b(x) to b(p(x))
    for x in range(p.degree):
        out[bi[x] - 1] = bi[pi[x] - 1]
    return Permutation._trusted(tuple(out))


def are_conjugate(p: Permutation, q: Permutation) -> bool:
    _check_degrees(p, q)
    return cycle_type(p) == cycle_type(q)


def centralizer_order(ct: CycleType) -> int:
    """Order of the centralizer of any permutation with cycle type ``ct``."""
    return math.prod(math.factorial(m) * length**m for length, m in Counter(ct).items())


def conjugators(p: Permutation, q: Permutation) -> Iterator[Permutation]:
    """Yield every ``b`` with ``b p b^-1 == q``, lazily.

    Cycles of ``p`` are matched with equal-length cycles of ``q`` in every
    possible way and each target cycle is rotated through all its starting
    points; each such alignment yields one conjugator, without repeats.
    Nothing is yielded when the cycle types differ.
    """
    _check_degrees(p, q)
    if cycle_type(p) != cycle_type(q):
        return
    n = p.degree
    by_len_p: dict[int, list[tuple[int, ...]]] = {}
    by_len_q: dict[int, list[tuple[int, ...]]] = {}
    for c in cycle_decomposition(p):
        by_len_p.setdefault(len(c), []).append(c)
    for c in cycle_decomposition(q):
        by_len_q.setdefault(len(c), []).append(c)
    lengths = sorted(by_len_p)

    # one choice per length: an ordering of q's cycles plus a rotation for each
    def choices(length):
        src = by_len_p[length]
        for matched in itertools.permutations(by_len_q[length]):
            for shifts in itertools.product(range(length), repeat=len(src)):
                yield [(a, b[s:] + b[:s]) for a, b, s in zip(src, matched, shifts)]

    images = [0] * n

    def fill(k):
        if k == len(lengths):
            yield Permutation._trusted(tuple(images))
            return
        for pairs in choices(lengths[k]):
            for a_cyc, b_cyc in pairs:
                for a, b in zip(a_cyc, b_cyc):
                    images[a - 1] = b
            yield from fill(k + 1)

    yield from fill(0)


def centralizer(p: Permutation) -> Iterator[Permutation]:
    return conjugators(p, p)


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of degree n in lexicographic image order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(images)
