"""Finite quasigroups as validated Cayley tables over {1..n}."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Optional, Sequence

from .perm import CycleType, Permutation, compose, cycle_type, identity, inverse


class LatinSquareError(ValueError):
    """Table is not a Latin square; ``row``/``col`` locate the first offence (1-based)."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class TableFormatError(ValueError):
    def __init__(self, message, line=None, column=None):
        loc = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{loc}: {message}" if loc else message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Isotopy:
    """Triple (alpha, beta, gamma) with gamma(x o y) = alpha(x) . beta(y)."""

    alpha: Permutation
    beta: Permutation
    gamma: Permutation

    def __post_init__(self):
        if not self.alpha.degree == self.beta.degree == self.gamma.degree:
            raise ValueError("isotopy components must share a degree")

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @classmethod
    def identity(cls, n: int) -> Isotopy:
        e = identity(n)
        return cls(e, e, e)

    def is_identity(self) -> bool:
        return self.alpha.is_identity() and self.beta.is_identity() and self.gamma.is_identity()

    def inverse(self) -> Isotopy:
        return Isotopy(inverse(self.alpha), inverse(self.beta), inverse(self.gamma))

    def __mul__(self, other: Isotopy) -> Isotopy:
        return Isotopy(
            compose(self.alpha, other.alpha),
            compose(self.beta, other.beta),
            compose(self.gamma, other.gamma),
        )

    def sort_key(self):
        return (self.gamma.images, self.beta.images, self.alpha.images)


@dataclass(frozen=True)
class Quasigroup:
    """Latin square with ``rows[x-1][y-1] == x . y`` (row = left factor)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _validate(self.rows)

    @property
    def order(self) -> int:
        return len(self.rows)

    def __call__(self, x: int, y: int) -> int:
        return self.rows[x - 1][y - 1]

    def __str__(self) -> str:
        return format_table(self)

    @cached_property
    def _tracks(self) -> tuple[Permutation, ...]:
        n = self.order
        cols = [[0] * n for _ in range(n)]
        for x, row in enumerate(self.rows, 1):
            for y, v in enumerate(row, 1):
                cols[v - 1][x - 1] = y
        return tuple(Permutation._trusted(tuple(c)) for c in cols)

    @cached_property
    def _left_div(self) -> tuple[tuple[int, ...], ...]:
        # _left_div[a-1][y-1] = x with x . y = a
        n = self.order
        t = [[0] * n for _ in range(n)]
        for x, row in enumerate(self.rows, 1):
            for y, v in enumerate(row, 1):
                t[v - 1][y - 1] = x
        return tuple(map(tuple, t))

    def tracks(self) -> tuple[Permutation, ...]:
        return self._tracks

    def track(self, i: int) -> Permutation:
        return self._tracks[i - 1]


def _validate(rows) -> None:
    n = len(rows)
    if n < 1:
        raise LatinSquareError("empty table")
    for x, row in enumerate(rows, 1):
        if len(row) != n:
            raise LatinSquareError(f"row {x} has {len(row)} entries, expected {n}", row=x)
    row_seen = [set() for _ in range(n)]
    col_seen = [set() for _ in range(n)]
    for x, row in enumerate(rows, 1):
        for y, v in enumerate(row, 1):
            if not isinstance(v, int) or not 1 <= v <= n:
                raise LatinSquareError(f"entry ({x},{y}) = {v!r} out of range 1..{n}", x, y)
            problems = []
            if v in row_seen[x - 1]:
                problems.append(f"row {x} repeats {v}")
            if v in col_seen[y - 1]:
                problems.append(f"column {y} repeats {v}")
            if problems:
                raise LatinSquareError(" and ".join(problems) + f" at ({x},{y})", x, y)
            row_seen[x - 1].add(v)
            col_seen[y - 1].add(v)


def from_rows(matrix: Sequence[Sequence[int]]) -> Quasigroup:
    return Quasigroup(tuple(tuple(int(v) for v in row) for row in matrix))


def _trusted(rows) -> Quasigroup:
    q = object.__new__(Quasigroup)
    object.__setattr__(q, "rows", rows)
    return q


def _check_label(q: Quasigroup, *labels: int) -> None:
    for a in labels:
        if not 1 <= a <= q.order:
            raise ValueError(f"label {a} out of range 1..{q.order}")


def multiply(q: Quasigroup, x: int, y: int) -> int:
    _check_label(q, x, y)
    return q.rows[x - 1][y - 1]


def left_divide(q: Quasigroup, a: int, y: int) -> int:
    """The unique x with x . y = a."""
    _check_label(q, a, y)
    return q._left_div[a - 1][y - 1]


def right_divide(q: Quasigroup, x: int, a: int) -> int:
    """The unique y with x . y = a, i.e. the track value phi_a(x)."""
    _check_label(q, x, a)
    return q._tracks[a - 1].images[x - 1]


def tracks(q: Quasigroup) -> tuple[Permutation, ...]:
    """phi_1..phi_n with x . phi_i(x) = i."""
    return q.tracks()


def from_tracks(ts: Sequence[Permutation]) -> Quasigroup:
    n = len(ts)
    if n < 1:
        raise LatinSquareError("empty track set")
    for i, p in enumerate(ts, 1):
        if p.degree != n:
            raise LatinSquareError(f"track {i} has degree {p.degree}, expected {n}")
    rows = [[0] * n for _ in range(n)]
    for x in range(1, n + 1):
        owner: dict[int, int] = {}
        for i, p in enumerate(ts, 1):
            y = p(x)
            if y in owner:
                raise LatinSquareError(
                    f"tracks {owner[y]} and {i} both send {x} to {y}", row=x, col=y
                )
            owner[y] = i
            rows[x - 1][y - 1] = i
    return _trusted(tuple(map(tuple, rows)))


def dual(q: Quasigroup) -> Quasigroup:
    return _trusted(tuple(zip(*q.rows)))


def apply_isotopy(q: Quasigroup, t: Isotopy) -> Quasigroup:
    """The isotope with x o y = gamma^-1(alpha(x) . beta(y))."""
    if t.degree != q.order:
        raise ValueError(f"isotopy degree {t.degree} != order {q.order}")
    a, b = t.alpha.images, t.beta.images
    gi = inverse(t.gamma).images
    rows = q.rows
    return _trusted(
        tuple(
            tuple(gi[rows[a[x] - 1][b[y] - 1] - 1] for y in range(q.order))
            for x in range(q.order)
        )
    )


def is_isotopy(q: Quasigroup, t: Isotopy, target: Optional[Quasigroup] = None) -> bool:
    """Check gamma(x o y) == alpha(x) . beta(y), with ``target`` the o table (default q)."""
    target = q if target is None else target
    a, b, g = t.alpha.images, t.beta.images, t.gamma.images
    rows, trows = q.rows, target.rows
    for x in range(q.order):
        rx = rows[a[x] - 1]
        tx = trows[x]
        for y in range(q.order):
            if g[tx[y] - 1] != rx[b[y] - 1]:
                return False
    return True


def track_types(q: Quasigroup) -> list[CycleType]:
    return [cycle_type(p) for p in q.tracks()]


def special_tracks(q: Quasigroup) -> set[int]:
    types = track_types(q)
    return {k for k, t in enumerate(types, 1) if types.count(t) == 1}


def is_unipotent(q: Quasigroup) -> Optional[int]:
    diag = {q.rows[x][x] for x in range(q.order)}
    return diag.pop() if len(diag) == 1 else None


def is_idempotent(q: Quasigroup) -> bool:
    return all(q.rows[x][x] == x + 1 for x in range(q.order))


def is_loop(q: Quasigroup) -> Optional[int]:
    """Two-sided identity element, if any."""
    labels = tuple(range(1, q.order + 1))
    for e in labels:
        if q.rows[e - 1] == labels and all(q.rows[x][e - 1] == x + 1 for x in range(q.order)):
            return e
    return None


def is_commutative(q: Quasigroup) -> bool:
    return q == dual(q)


# table files: optional "n=<order>" header, '#' comment lines, n rows of n labels


def parse_table(text: str) -> Quasigroup:
    header = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("n="):
            if header is not None or rows:
                raise TableFormatError("unexpected order header", line=lineno)
            try:
                header = int(stripped[2:])
            except ValueError:
                raise TableFormatError(f"bad order header {stripped!r}", line=lineno) from None
            continue
        row = []
        col = 1
        for tok in line.split():
            col = line.index(tok, col - 1) + 1
            try:
                row.append(int(tok))
            except ValueError:
                raise TableFormatError(f"not a label: {tok!r}", line=lineno, column=col) from None
            col += len(tok)
        rows.append((lineno, row))
    if not rows:
        raise TableFormatError("no table rows")
    n = len(rows)
    if header is not None and header != n:
        raise TableFormatError(f"header says n={header} but found {n} rows")
    for lineno, row in rows:
        if len(row) != n:
            raise TableFormatError(f"row has {len(row)} labels, expected {n}", line=lineno)
    return from_rows([r for _, r in rows])


def format_table(q: Quasigroup) -> str:
    lines = [f"n={q.order}"] + [" ".join(map(str, row)) for row in q.rows]
    return "\n".join(lines) + "\n"


def read_table(path) -> Quasigroup:
    return parse_table(Path(path).read_text())


def write_table(q: Quasigroup, path) -> None:
    Path(path).write_text(format_table(q))
