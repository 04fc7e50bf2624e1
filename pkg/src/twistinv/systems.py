"""Named Coxeter systems used by the tests, scripts and CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coxeter import CoxeterSystem

INF = "inf"


@dataclass(frozen=True)
class SystemSpec:
    """A Coxeter descriptor: labels, matrix and star permutation."""
    name: str
    labels: tuple[str, ...]
    matrix: tuple[tuple, ...]
    star: tuple[int, ...] | None = None
    finite: bool = True
    weyl: bool = True          # crystallographic, so KL positivity results apply
    s0: int | None = None      # distinguished affine generator
    notes: str = field(default="", compare=False)

    def build(self, cap: int = 10**6) -> CoxeterSystem:
        return CoxeterSystem(self.matrix, self.star, self.labels, cap)

    def to_descriptor(self) -> dict:
        n = len(self.labels)
        return {
            "labels": list(self.labels),
            "matrix": [[INF if m == INF else m for m in row] for row in self.matrix],
            "star": list(self.star) if self.star is not None else list(range(n)),
        }


def _spec(name, labels, matrix, star=None, **kw) -> SystemSpec:
    return SystemSpec(name, tuple(labels), tuple(tuple(r) for r in matrix),
                      tuple(star) if star is not None else None, **kw)


_A3 = [[1, 3, 2], [3, 1, 3], [2, 3, 1]]
_B3 = [[1, 4, 2], [4, 1, 3], [2, 3, 1]]

CATALOG: dict[str, SystemSpec] = {s.name: s for s in [
    _spec("A1", "s", [[1]]),
    _spec("A2", "st", [[1, 3], [3, 1]]),
    _spec("A2-swap", "st", [[1, 3], [3, 1]], [1, 0]),
    _spec("A3", "123", _A3),
    _spec("A3-flip", "123", _A3, [2, 1, 0]),
    _spec("B2", "st", [[1, 4], [4, 1]]),
    _spec("B3", "123", _B3),
    _spec("I2(5)", "st", [[1, 5], [5, 1]], weyl=False),
    _spec("I2(6)", "st", [[1, 6], [6, 1]]),
    _spec("H3", "123", [[1, 5, 2], [5, 1, 3], [2, 3, 1]], weyl=False),
    _spec("A1-affine", "01", [[1, INF], [INF, 1]], finite=False, s0=0),
    _spec("A2-affine-swap", "012", [[1, 3, 3], [3, 1, 3], [3, 3, 1]], [0, 2, 1],
          finite=False, s0=0),
    _spec("C2-affine", "012", [[1, 4, 2], [4, 1, 4], [2, 4, 1]], finite=False, s0=0,
          notes="rank-3 affine system with W_K of type B2, star = id"),
]}

FINITE = [n for n, s in CATALOG.items() if s.finite]
AFFINE = [n for n, s in CATALOG.items() if not s.finite]


def get(name: str) -> SystemSpec:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown system {name!r}; known: {', '.join(CATALOG)}") from None
