"""Evaluation maps from expressions to commutative Laurent polynomials.

Each master ``s`` is sent to ``s_j -> base * q^(c*j)`` where ``base`` is a
signed Laurent monomial, so formal inverses always have an image.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import NotInvertible, UnknownMaster
from .freealg import Expr
from .qpoly import QPoly, qsum

__all__ = ["EvalMap", "evaluate", "is_master_linear"]


@dataclass(frozen=True)
class EvalMap:
    images: tuple[tuple[str, QPoly, int], ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        seen = set()
        for master, base, c in self.images:
            if master in seen:
                raise ValueError(f"duplicate image for {master!r}")
            seen.add(master)
            if not base.is_unit_monomial():
                raise NotInvertible(f"image {base} of {master!r} is not a signed monomial")
        object.__setattr__(self, "images", tuple(self.images))

    @classmethod
    def of(cls, mapping: Mapping[str, "QPoly | str | tuple"]) -> "EvalMap":
        """Build from ``{master: base}`` or ``{master: (base, c)}``."""
        images = []
        for master, img in mapping.items():
            c = 0
            if isinstance(img, tuple):
                img, c = img
            if isinstance(img, str):
                img = QPoly.parse(img)
            elif isinstance(img, int):
                img = QPoly(img)
            images.append((master, img, c))
        return cls(tuple(images))

    @property
    def masters(self) -> tuple[str, ...]:
        return tuple(m for m, _, _ in self.images)

    def image(self, master: str, index: int, sign: int = 1) -> QPoly:
        key = (master, index, sign)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        for m, base, c in self.images:
            if m == master:
                val = base * QPoly.q_power(c * index)
                if sign < 0:
                    val = val.invert_monomial()
                self._cache[key] = val
                return val
        raise UnknownMaster(f"no image for master {master!r}")

    def __call__(self, a: Expr) -> QPoly:
        return evaluate(self, a)


def evaluate(m: EvalMap, a: Expr) -> QPoly:
    parts = []
    for w, c in a.items():
        val = c
        for l in w:
            val = val * m.image(*l)
        parts.append(val)
    return qsum(parts)


def is_master_linear(m: EvalMap) -> bool:
    return all(c == 0 for _, _, c in m.images)
