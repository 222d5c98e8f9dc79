"""Rigid and super rigid finite quasigroups: tracks, spins and symmetry searches."""
from .perm import (
    CycleParseError,
    Permutation,
    PermutationError,
    are_conjugate,
    compose,
    conjugate,
    conjugators,
    cycle_decomposition,
    cycle_type,
    format_cycles,
    identity,
    inverse,
    parse_cycles,
)
from .quasigroup import (
    Isotopy,
    LatinSquareError,
    Quasigroup,
    apply_isotopy,
    dual,
    from_rows,
    from_tracks,
    read_table,
    special_tracks,
    tracks,
    write_table,
)
from .rigidity import (
    autotopisms,
    autotopisms_bruteforce,
    automorphisms,
    automorphisms_bruteforce,
    census,
    enumerate_latin_squares,
    is_rigid,
    is_super_rigid,
)
from .spins import SpinReport, part_spectrum, special_parts, spin, spin_report

__version__ = "0.1.0"
