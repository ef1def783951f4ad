"""Exponent bundle for the extraction pipeline."""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from ..errors import DomainError


@dataclass(frozen=True)
class Params:
    """Defaults follow ``a = 2 d^2 h``, ``b = a + 6d + 1`` and ``c = 4^-h``.

    Every field can be overridden; the defaults make the size floors vanish
    on any host that fits in memory, so small-scale experiments usually
    lower ``a``.
    """

    h: int
    d: int = 4
    a: int | None = None
    b: int | None = None
    c: Fraction | None = None
    x: Fraction | None = None
    y: Fraction | None = None
    eps: Fraction | None = None

    def __post_init__(self):
        if self.h < 2:
            raise DomainError("h must be at least 2")
        if self.d < 4:
            raise DomainError("d must be at least 4")
        a = 2 * self.d * self.d * self.h if self.a is None else int(self.a)
        object.__setattr__(self, "a", a)
        if self.b is None:
            object.__setattr__(self, "b", a + 6 * self.d + 1)
        c = Fraction(1, 4 ** self.h) if self.c is None else Fraction(self.c)
        object.__setattr__(self, "c", c)
        if a < 2:
            raise DomainError("a must be at least 2")
        if not 0 < c < Fraction(1, 2):
            raise DomainError("c must lie in (0, 1/2)")
        for name in ("x", "y", "eps"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        if self.y is not None and not self.y <= c:
            raise DomainError("need y <= c")
        if self.x is not None:
            top = self.y if self.y is not None else c
            if not 0 < self.x <= top:
                raise DomainError("need 0 < x <= y <= c")

    def with_(self, **kw):
        """Copy with overrides; ``a``, ``b`` and ``c`` still at their defaults
        are re-derived from the new ``h`` and ``d``."""
        base = Params(self.h, self.d)
        for name in ("a", "b", "c"):
            if name not in kw and getattr(self, name) == getattr(base, name):
                kw[name] = None
        return replace(self, **kw)
