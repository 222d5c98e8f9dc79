"""Automorphism and autotopism groups of finite quasigroups.

The pruned searches lean on isotopy invariants: automorphisms permute tracks
of equal cycle type and fix special tracks, and the gamma component of an
autotopism permutes parts of equal spin spectrum and fixes special parts.
Each search has a brute-force counterpart used as an oracle.
"""
from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .perm import (
    Permutation,
    all_permutations,
    centralizer_order,
    conjugate,
    conjugators,
    cycle_type,
    identity,
)
from .quasigroup import Isotopy, Quasigroup, _trusted, is_isotopy, special_tracks
from .spins import SpinTable, spectrum_classes

MAX_ENUM_ORDER = 5
DEFAULT_AUT_ORACLE_LIMIT = 8
DEFAULT_ATP_ORACLE_LIMIT = 9


class OracleLimitError(ValueError):
    pass


def oracle_limit(default: int) -> int:
    """Order cap for brute-force oracles; ``QF_ORACLE_LIMIT`` overrides it."""
    env = os.environ.get("QF_ORACLE_LIMIT")
    return int(env) if env else default


def is_automorphism(q: Quasigroup, a: Permutation) -> bool:
    return is_isotopy(q, Isotopy(a, a, a))


# -- automorphisms -----------------------------------------------------------


def _aut_search(q: Quasigroup) -> Iterator[Permutation]:
    n = q.order
    rows = q.rows
    trk = [p.images for p in q.tracks()]
    types = [cycle_type(p) for p in q.tracks()]
    special = sorted(special_tracks(q))
    spec_inv = {}
    for k in special:
        inv = [0] * n
        for x, y in enumerate(trk[k - 1], 1):
            inv[y - 1] = x
        spec_inv[k] = inv

    # special tracks pin their own index, and phi_i(j) for special i, j
    pinned = set(special)
    pinned.update(trk[i - 1][j - 1] for i in special for j in special)

    def assign(alpha, used, x, v):
        """Set alpha(x) = v and close under forced consequences; False on conflict."""
        stack = [(x, v)]
        while stack:
            x, v = stack.pop()
            cur = alpha[x]
            if cur:
                if cur != v:
                    return False
                continue
            if used[v] or types[x - 1] != types[v - 1]:
                return False
            alpha[x] = v
            used[v] = True
            for k in special:
                # alpha commutes with every special track
                stack.append((trk[k - 1][x - 1], trk[k - 1][v - 1]))
                stack.append((spec_inv[k][x - 1], spec_inv[k][v - 1]))
            for y in range(1, n + 1):
                w = alpha[y]
                if w:
                    stack.append((rows[x - 1][y - 1], rows[v - 1][w - 1]))
                    stack.append((rows[y - 1][x - 1], rows[w - 1][v - 1]))
        return True

    alpha0 = [0] * (n + 1)
    used0 = [False] * (n + 1)
    for p in sorted(pinned):
        if not assign(alpha0, used0, p, p):
            return

    def search(alpha, used):
        try:
            x = alpha.index(0, 1)
        except ValueError:
            a = Permutation._trusted(tuple(alpha[1:]))
            if is_automorphism(q, a):
                yield a
            return
        for v in range(1, n + 1):
            if used[v] or types[x - 1] != types[v - 1]:
                continue
            al, us = alpha[:], used[:]
            if assign(al, us, x, v):
                yield from search(al, us)

    yield from search(alpha0, used0)


def automorphisms(q: Quasigroup) -> list[Permutation]:
    """All automorphisms, sorted by image sequence; the identity is always first."""
    return sorted(_aut_search(q))


def automorphisms_bruteforce(q: Quasigroup, limit: Optional[int] = None) -> list[Permutation]:
    limit = oracle_limit(DEFAULT_AUT_ORACLE_LIMIT) if limit is None else limit
    if q.order > limit:
        raise OracleLimitError(f"order {q.order} exceeds brute-force limit {limit}")
    return [a for a in all_permutations(q.order) if is_automorphism(q, a)]


def is_rigid(q: Quasigroup) -> bool:
    return all(a.is_identity() for a in _aut_search(q))


# -- autotopisms -------------------------------------------------------------


@dataclass
class AutotopismSearch:
    """Pruned autotopism search state shared across gamma candidates."""

    q: Quasigroup
    table: SpinTable = field(init=False)
    classes: list[list[int]] = field(init=False)
    pairs: list[tuple[int, int]] = field(init=False)

    def __post_init__(self):
        n = self.q.order
        self.table = SpinTable(self.q)
        self.classes = spectrum_classes(self.table.spectra())
        self.class_of = [0] * (n + 1)
        for c, members in enumerate(self.classes):
            for i in members:
                self.class_of[i] = c
        ordered = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        # smallest conjugator sets first
        self.pairs = sorted(ordered, key=lambda ij: (centralizer_order(self.table.type(*ij)), ij))

    @property
    def special(self) -> set[int]:
        return {c[0] for c in self.classes if len(c) == 1}

    def gammas(self, first: Optional[int] = None) -> Iterator[Permutation]:
        """Permutations preserving spectrum classes and pairwise spin cycle types.

        ``first`` restricts gamma(1), to split the search into disjoint parts.
        """
        n = self.q.order
        t = self.table.type
        cls = self.class_of
        gamma = [0] * (n + 1)
        used = [False] * (n + 1)

        def extend(i):
            if i > n:
                yield Permutation._trusted(tuple(gamma[1:]))
                return
            options = [first] if i == 1 and first is not None else range(1, n + 1)
            for v in options:
                if used[v] or cls[v] != cls[i]:
                    continue
                if any(t(i, j) != t(v, gamma[j]) or t(j, i) != t(gamma[j], v) for j in range(1, i)):
                    continue
                gamma[i], used[v] = v, True
                yield from extend(i + 1)
                gamma[i], used[v] = 0, False

        yield from extend(1)

    def betas(self, gamma: Permutation) -> Iterator[Permutation]:
        """Every beta with beta spin(i,j) beta^-1 == spin(gamma i, gamma j) for all pairs."""
        n = self.q.order
        if n == 1:
            yield identity(1)
            return
        spin = self.table.spin
        g = gamma.images
        targets = [(spin(i, j), spin(g[i - 1], g[j - 1])) for i, j in self.pairs]
        src, dst = targets[0]
        for b in conjugators(src, dst):
            if all(conjugate(b, s) == d for s, d in targets[1:]):
                yield b

    def alpha_for(self, gamma: Permutation, beta: Permutation) -> Optional[Permutation]:
        """alpha(x) = the a with a . beta(y0) = gamma(x . y0), for y0 = 1."""
        q = self.q
        n = q.order
        g = gamma.images
        col = beta.images[0]
        ldiv = q._left_div
        images = tuple(ldiv[g[q.rows[x][0] - 1] - 1][col - 1] for x in range(n))
        if len(set(images)) != n:
            return None
        return Permutation._trusted(images)

    def run(self, first: Optional[int] = None) -> Iterator[Isotopy]:
        for gamma in self.gammas(first):
            for beta in self.betas(gamma):
                alpha = self.alpha_for(gamma, beta)
                if alpha is None:
                    continue
                t = Isotopy(alpha, beta, gamma)
                if is_isotopy(self.q, t):
                    yield t


def _atp_part(args):
    rows, first = args
    return list(AutotopismSearch(_trusted(rows)).run(first))


def iter_autotopisms(q: Quasigroup) -> Iterator[Isotopy]:
    return AutotopismSearch(q).run()


def autotopisms(q: Quasigroup, jobs: int = 1) -> list[Isotopy]:
    """All autotopisms sorted by (gamma, beta, alpha) images; identity first."""
    if jobs > 1 and q.order > 1:
        parts = [(q.rows, v) for v in range(1, q.order + 1)]
        with ProcessPoolExecutor(jobs) as ex:
            found = [t for part in ex.map(_atp_part, parts) for t in part]
    else:
        found = list(iter_autotopisms(q))
    return sorted(found, key=Isotopy.sort_key)


def is_super_rigid(q: Quasigroup) -> bool:
    return all(t.is_identity() for t in iter_autotopisms(q))


def autotopisms_bruteforce(q: Quasigroup, limit: Optional[int] = None) -> list[Isotopy]:
    """Exhaustive autotopism set, independent of tracks and spins.

    Every alpha is tried with every value of beta(1). These force gamma on
    all of Q through column 1 and then beta through row 1, so each choice
    yields one candidate triple, which is checked against the whole table.
    Vectorised over all alpha at once.
    """
    n = q.order
    limit = oracle_limit(DEFAULT_ATP_ORACLE_LIMIT) if limit is None else limit
    if n > limit:
        raise OracleLimitError(f"order {n} exceeds brute-force limit {limit}")
    T = np.array(q.rows, dtype=np.int16) - 1
    R = np.empty_like(T)  # R[x, a] = y with x . y = a
    for x in range(n):
        R[x, T[x]] = np.arange(n)
    A = np.array(list(itertools.permutations(range(n))), dtype=np.int16)
    found = []
    for b in range(n):
        G = np.empty_like(A)
        for x in range(n):
            G[:, T[x, 0]] = T[A[:, x], b]
        B = np.empty_like(A)
        for y in range(n):
            B[:, y] = R[A[:, 0], G[:, T[0, y]]]
        ok = np.ones(len(A), dtype=bool)
        for x in range(n):
            for y in range(n):
                ok &= G[:, T[x, y]] == T[A[:, x], B[:, y]]
        for k in np.flatnonzero(ok):
            found.append(
                Isotopy(
                    Permutation(tuple(int(v) + 1 for v in A[k])),
                    Permutation(tuple(int(v) + 1 for v in B[k])),
                    Permutation(tuple(int(v) + 1 for v in G[k])),
                )
            )
    return sorted(found, key=Isotopy.sort_key)


# -- enumeration and census --------------------------------------------------


def enumerate_latin_squares(n: int, first_row: Optional[tuple[int, ...]] = None) -> Iterator[Quasigroup]:
    """Every Latin square of order n once, in lexicographic row-major order.

    ``first_row`` restricts the enumeration to squares starting with that row.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > MAX_ENUM_ORDER:
        raise ValueError(
            f"order {n} is above the enumeration cap {MAX_ENUM_ORDER}; "
            "order 6 already has about 8.1e8 Latin squares"
        )
    grid = [[0] * n for _ in range(n)]
    row_used = [[False] * (n + 1) for _ in range(n)]
    col_used = [[False] * (n + 1) for _ in range(n)]
    start = 0
    if first_row is not None:
        if sorted(first_row) != list(range(1, n + 1)):
            raise ValueError(f"first row {first_row} is not a permutation of 1..{n}")
        for y, v in enumerate(first_row):
            grid[0][y] = v
            row_used[0][v] = col_used[y][v] = True
        start = n

    def fill(cell):
        if cell == n * n:
            yield _trusted(tuple(map(tuple, grid)))
            return
        x, y = divmod(cell, n)
        ru, cu = row_used[x], col_used[y]
        for v in range(1, n + 1):
            if ru[v] or cu[v]:
                continue
            grid[x][y] = v
            ru[v] = cu[v] = True
            yield from fill(cell + 1)
            ru[v] = cu[v] = False
        grid[x][y] = 0

    yield from fill(start)


@dataclass
class Census:
    order: int
    total: int = 0
    rigid: int = 0
    super_rigid: int = 0
    rigid_tables: list[Quasigroup] = field(default_factory=list)
    super_rigid_tables: list[Quasigroup] = field(default_factory=list)

    def merge(self, other: Census) -> None:
        self.total += other.total
        self.rigid += other.rigid
        self.super_rigid += other.super_rigid
        self.rigid_tables += other.rigid_tables
        self.super_rigid_tables += other.super_rigid_tables

    def summary(self) -> dict:
        return {"order": self.order, "total": self.total, "rigid": self.rigid,
                "super_rigid": self.super_rigid}


def _census_part(args) -> Census:
    n, first_row, keep = args
    c = Census(n)
    for q in enumerate_latin_squares(n, first_row):
        c.total += 1
        rigid = is_rigid(q)
        super_rigid = is_super_rigid(q)
        if super_rigid and not rigid:
            raise AssertionError(f"super rigid but not rigid:\n{q}")
        if rigid:
            c.rigid += 1
            if keep:
                c.rigid_tables.append(q)
        if super_rigid:
            c.super_rigid += 1
            if keep:
                c.super_rigid_tables.append(q)
    return c


def census(n: int, jobs: int = 1, keep_tables: bool = False) -> Census:
    """Count all, rigid and super-rigid Latin squares of order n <= 5.

    Work is split by first row; results are merged in first-row order, so
    the outcome does not depend on ``jobs``.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"census supports orders 1..{MAX_ENUM_ORDER}, got {n}")
    parts = [(n, row, keep_tables) for row in itertools.permutations(range(1, n + 1))]
    result = Census(n)
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as ex:
            for c in ex.map(_census_part, parts, chunksize=max(1, len(parts) // (4 * jobs))):
                result.merge(c)
    else:
        for part in parts:
            result.merge(_census_part(part))
    return result
