"""Tagged outcome values.  Each carries the data its verifier needs."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class RestrictedSet:
    """``side`` is ``"graph"`` (max degree of g[S] small) or ``"complement"``."""

    vertices: tuple
    side: str
    eps: Fraction
    meta: tuple = ()

    @property
    def kind(self):
        return "sparse" if self.side == "graph" else "dense"


@dataclass(frozen=True)
class Blockade:
    blocks: tuple
    kind: str  # "sparse" or "dense"
    x: Fraction
    clamped: bool = False

    @property
    def length(self):
        return len(self.blocks)

    @property
    def width(self):
        return min((len(b) for b in self.blocks), default=0)


@dataclass(frozen=True)
class BlockadeFound:
    blockade: Blockade


@dataclass(frozen=True)
class CopyWitness:
    """``ind_pattern(g[host]) > threshold``.  ``count`` may be a capped count,
    still larger than the threshold."""

    pattern: object
    host: tuple
    count: int
    threshold: Fraction


@dataclass(frozen=True)
class SparsePair:
    """``B`` is ``x``-sparse to ``A``."""

    A: tuple
    B: tuple
    x: Fraction
    clamped: bool = False


@dataclass(frozen=True)
class RestrictedCandidate:
    """``ind_pattern(g[S]) <= bound``: few copies of the shortened pattern."""

    vertices: tuple
    pattern: object
    bound: Fraction
    count: int


@dataclass(frozen=True)
class CliqueOrStable:
    vertices: tuple
    kind: str  # "clique" or "stable"
    schedule: tuple = field(default=(), compare=False)

    @property
    def size(self):
        return len(self.vertices)


@dataclass(frozen=True)
class LowDensitySet:
    """One side of ``g[S]`` has at most ``eps * C(|S|, 2)`` edges."""

    vertices: tuple
    side: str
    eps: Fraction
    meta: tuple = ()
