"""Cayley tables shipped with the package, loadable by name."""
from importlib import resources

from ..quasigroup import Quasigroup, parse_table

NAMES = (
    "ex1a", "ex1b", "ex2", "fig1", "ex4", "ex6",
    "loop6b", "loop6c", "loop6d", "loop6e", "ex8", "ex9",
    "Z2", "Z3", "Z4",
)
RIGID_LOOPS = ("ex6", "loop6b", "loop6c", "loop6d", "loop6e")


def text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.txt").read_text()


def load(name: str) -> Quasigroup:
    return parse_table(text(name))


def load_all() -> dict[str, Quasigroup]:
    return {name: load(name) for name in NAMES}
