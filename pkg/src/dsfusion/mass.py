"""Basic probability assignments over one frame.

A :class:`MassFunction` maps subsets of a frame to mass values.  Construction
validates the three defining constraints: no mass on the empty set, every
stored mass strictly positive (zero entries are dropped), and total mass one
within ``SUM_TOLERANCE``.  All computation happens at full double precision;
rounding is a display concern (see ``dsfusion.render``).
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from .errors import (
    EmptyFocalError,
    EmptySetMassError,
    FocalIsFullFrameError,
    NegativeMassError,
    NotNormalizedError,
    WeightOutOfRangeError,
)
from .frame import Frame, Subset

SUM_TOLERANCE = 1e-9

Entries = Mapping[Subset, float] | Iterable[tuple[Subset, float]]


class MassFunction:
    """A validated basic probability assignment m: subsets -> (0, 1]."""

    __slots__ = ("_frame", "_masses")

    def __init__(self, frame: Frame, entries: Entries):
        if isinstance(entries, Mapping):
            entries = entries.items()
        accumulated: dict[int, float] = {}
        for subset, mass in entries:
            frame.check_same(subset.frame)
            if mass < 0.0:
                raise NegativeMassError(f"mass {mass!r} for {subset!r} is negative")
            if subset.is_empty and mass > 0.0:
                raise EmptySetMassError("the empty set cannot carry positive mass")
            if mass > 0.0:
                accumulated[subset.mask] = accumulated.get(subset.mask, 0.0) + mass
        total = sum(accumulated.values())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise NotNormalizedError(f"masses sum to {total!r}, not 1")
        self._frame = frame
        self._masses = {mask: accumulated[mask] for mask in sorted(accumulated)}

    @classmethod
    def _from_mask_dict(cls, frame: Frame, masses: dict[int, float]) -> MassFunction:
        """Internal fast path: trusted, already-sorted positive masses."""
        total = sum(masses.values())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise NotNormalizedError(f"masses sum to {total!r}, not 1")
        m = object.__new__(cls)
        m._frame = frame
        m._masses = masses
        return m

    @classmethod
    def vacuous(cls, frame: Frame) -> MassFunction:
        """Total ignorance: all mass on the full frame."""
        return cls._from_mask_dict(frame, {frame.full.mask: 1.0})

    @classmethod
    def simple_support(cls, focal: Subset, weight: float) -> MassFunction:
        """Weight on one proper focal set, the rest on the full frame.

        This is the shape every motion evidence takes: support ``weight`` for
        ``focal`` and residual ignorance ``1 - weight``.
        """
        if focal.is_empty:
            raise EmptyFocalError("the focal set of a simple support is non-empty")
        if focal.is_full:
            raise FocalIsFullFrameError(
                "use MassFunction.vacuous for all-mass-on-the-frame"
            )
        if not 0.0 < weight <= 1.0:
            raise WeightOutOfRangeError(f"weight {weight!r} outside (0, 1]")
        frame = focal.frame
        if weight == 1.0:
            return cls._from_mask_dict(frame, {focal.mask: 1.0})
        return cls._from_mask_dict(
            frame, dict(sorted({focal.mask: weight, frame.full.mask: 1.0 - weight}.items()))
        )

    @property
    def frame(self) -> Frame:
        return self._frame

    def mass(self, subset: Subset) -> float:
        """m(subset); zero for anything that is not a focal element."""
        self._frame.check_same(subset.frame)
        return self._masses.get(subset.mask, 0.0)

    __getitem__ = mass

    def belief(self, subset: Subset) -> float:
        """Total mass of focal elements contained in ``subset``."""
        self._frame.check_same(subset.frame)
        target = subset.mask
        return sum(m for s, m in self._masses.items() if s & ~target == 0)

    def plausibility(self, subset: Subset) -> float:
        """Total mass of focal elements intersecting ``subset``."""
        self._frame.check_same(subset.frame)
        target = subset.mask
        return sum(m for s, m in self._masses.items() if s & target)

    def core(self) -> Subset:
        """Union of all focal elements."""
        mask = 0
        for s in self._masses:
            mask |= s
        return self._frame.subset_from_mask(mask)

    def focal_elements(self) -> list[tuple[Subset, float]]:
        """Focal elements with their masses, in ascending mask order."""
        return [
            (self._frame.subset_from_mask(mask), m) for mask, m in self._masses.items()
        ]

    def mask_items(self) -> list[tuple[int, float]]:
        """Raw (mask, mass) pairs in ascending mask order (kernel interchange)."""
        return list(self._masses.items())

    def __len__(self) -> int:
        return len(self._masses)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return (
            self._frame._token == other._frame._token
            and self._masses == other._masses
        )

    def __hash__(self) -> int:
        return hash((self._frame._token, tuple(self._masses.items())))

    def isclose(self, other: MassFunction, *, tolerance: float = 1e-12) -> bool:
        """Entry-wise comparison over the union of focal elements."""
        self._frame.check_same(other._frame)
        keys = self._masses.keys() | other._masses.keys()
        return all(
            abs(self._masses.get(k, 0.0) - other._masses.get(k, 0.0)) <= tolerance
            for k in keys
        )

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{self._frame.subset_from_mask(mask)!r}: {m:.6g}"
            for mask, m in self._masses.items()
        )
        return f"MassFunction({inner})"
