"""Simply supported Euler-Bernoulli beam between two rigid walls.

The influence function is the classical Green's function of the simply
supported beam: the deflection at x due to a unit transverse load at a.
Evaluated at the stabilizer positions it yields the (symmetric positive
definite) flexibility matrix K of the contact model; point loads superpose
into the offset vector q_tilde.  Deflections and loads are positive toward
the upper wall.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contact import ContactLcp
from .dense import as_matrix, as_vector
from .errors import DuplicatePositions, InvariantViolation, OutOfDomain

__all__ = [
    "Stabilizer",
    "PointLoad",
    "BeamConfig",
    "influence",
    "flexibility_matrix",
    "load_vector",
    "to_contact_lcp",
]


@dataclass(frozen=True)
class Stabilizer:
    """A two-sided stop at ``position`` with clearance ``gap`` to each wall."""

    position: float
    gap: float


@dataclass(frozen=True)
class PointLoad:
    """Transverse point load; positive magnitude pushes toward the upper wall."""

    position: float
    magnitude: float


@dataclass(frozen=True, eq=False)
class BeamConfig:
    """Beam of length ``length`` and bending stiffness ``ei`` with stops and loads.

    Stabilizer positions must be strictly increasing and strictly interior;
    gaps must be positive.  Load positions must also be interior (a load at a
    support would do nothing anyway).
    """

    length: float
    ei: float
    stabilizers: tuple
    loads: tuple = ()

    def __post_init__(self):
        if not (self.length > 0.0 and np.isfinite(self.length)):
            raise InvariantViolation(f"length must be positive, got {self.length}")
        if not (self.ei > 0.0 and np.isfinite(self.ei)):
            raise InvariantViolation(f"ei must be positive, got {self.ei}")
        stabilizers = tuple(
            s if isinstance(s, Stabilizer) else Stabilizer(*s) for s in self.stabilizers
        )
        loads = tuple(p if isinstance(p, PointLoad) else PointLoad(*p) for p in self.loads)
        for s in stabilizers:
            if not 0.0 < s.position < self.length:
                raise OutOfDomain(
                    f"stabilizer position {s.position} outside (0, {self.length})"
                )
            if not s.gap > 0.0:
                raise InvariantViolation(f"stabilizer gap must be positive, got {s.gap}")
        for prev, nxt in zip(stabilizers, stabilizers[1:]):
            if nxt.position == prev.position:
                raise DuplicatePositions(f"duplicate stabilizer position {nxt.position}")
            if nxt.position < prev.position:
                raise InvariantViolation("stabilizer positions must be strictly increasing")
        for p in loads:
            if not 0.0 < p.position < self.length:
                raise OutOfDomain(f"load position {p.position} outside (0, {self.length})")
            if not np.isfinite(p.magnitude):
                raise InvariantViolation("load magnitude must be finite")
        object.__setattr__(self, "stabilizers", stabilizers)
        object.__setattr__(self, "loads", loads)

    @property
    def n(self) -> int:
        return len(self.stabilizers)


def influence(x: float, a: float, length: float, ei: float) -> float:
    """Deflection at x due to a unit load at a (simply supported beam).

    For x <= a with b = length - a:

        delta = b x (length^2 - b^2 - x^2) / (6 length ei)

    and symmetrically otherwise (Maxwell-Betti reciprocity).
    """
    if not 0.0 < x < length:
        raise OutOfDomain(f"evaluation point {x} outside (0, {length})")
    if not 0.0 < a < length:
        raise OutOfDomain(f"load position {a} outside (0, {length})")
    if x > a:
        x, a = a, x
    b = length - a
    return b * x * (length * length - b * b - x * x) / (6.0 * length * ei)


def flexibility_matrix(cfg: BeamConfig) -> np.ndarray:
    """Influence matrix at the stabilizer positions; symmetric by construction."""
    xs = [s.position for s in cfg.stabilizers]
    if len(set(xs)) != len(xs):
        raise DuplicatePositions("stabilizer positions must be distinct")
    n = len(xs)
    K = np.zeros((n, n))
    for i in range(n):
        for j in range(i, n):
            v = influence(xs[i], xs[j], cfg.length, cfg.ei)
            K[i, j] = v
            K[j, i] = v
    return as_matrix(K, "flexibility matrix")


def load_vector(cfg: BeamConfig) -> np.ndarray:
    """Unconstrained deflection at the stabilizer positions under all loads."""
    q = np.zeros(cfg.n)
    for i, s in enumerate(cfg.stabilizers):
        acc = 0.0
        for p in cfg.loads:
            acc += p.magnitude * influence(s.position, p.position, cfg.length, cfg.ei)
        q[i] = acc
    return as_vector(q, "load vector")


def to_contact_lcp(cfg: BeamConfig) -> ContactLcp:
    """Contact model at the stabilizers: K from flexibility, y* from the gaps."""
    gaps = np.array([s.gap for s in cfg.stabilizers])
    return ContactLcp(flexibility_matrix(cfg), load_vector(cfg), gaps)
