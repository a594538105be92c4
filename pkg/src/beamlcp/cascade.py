"""Block-cascade contact problems solved sequentially.

Blocks are ordered; block i feels earlier blocks only through coupling
matrices Ktilde_ij (j < i), which shift its gap offsets by
s_i = sum_j Ktilde_ij (z_j1 - z_j2).  Because the shift enters the two sides
with opposite signs, the per-block gap sum q_i1 + q_i2 is preserved, each
stage is again a two-sided contact LCP with unchanged clearances, and solving
the blocks in order solves the assembled problem.

The assembled matrix is block lower triangular and NOT symmetric; it is only
ever handed to solvers that do not assume symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .contact import ContactLcp, ContactSolution, PgsOptions, solve_structured
from .dense import as_matrix, as_vector, matvec
from .errors import DimensionMismatch, InvariantViolation
from .lcp import LcpProblem, LcpSolution, assemble_w

__all__ = [
    "CascadeBlock",
    "CascadeProblem",
    "CascadeStage",
    "cascade_stages",
    "solve_cascade",
    "assemble_full",
    "as_lcp_solution",
]


@dataclass(frozen=True, eq=False)
class CascadeBlock:
    """One stage: compliance K, gap offsets (q1, q2), couplings to earlier blocks.

    couplings is a sequence of (j, Ktilde) pairs, j the 0-based position of an
    earlier block and Ktilde of shape (n_i, n_j).  The gap sum q1 + q2 must be
    strictly positive (it equals twice the wall clearance).
    """

    K: np.ndarray
    q1: np.ndarray
    q2: np.ndarray
    couplings: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "K", as_matrix(self.K, "K"))
        object.__setattr__(self, "q1", as_vector(self.q1, "q1"))
        object.__setattr__(self, "q2", as_vector(self.q2, "q2"))
        n = self.K.shape[0]
        if self.K.shape[1] != n:
            raise DimensionMismatch(f"block K must be square, got shape {self.K.shape}")
        if self.q1.shape[0] != n or self.q2.shape[0] != n:
            raise DimensionMismatch(
                f"block K is {n}x{n} but q1/q2 have lengths "
                f"{self.q1.shape[0]}/{self.q2.shape[0]}"
            )
        if np.any(self.q1 + self.q2 <= 0.0):
            raise InvariantViolation("block gap sum q1 + q2 must be strictly positive")
        normalized = []
        seen = set()
        for j, ktilde in self.couplings:
            j = int(j)
            if j in seen:
                raise InvariantViolation(f"duplicate coupling to block {j}")
            seen.add(j)
            normalized.append((j, as_matrix(ktilde, f"Ktilde[{j}]")))
        normalized.sort(key=lambda item: item[0])
        object.__setattr__(self, "couplings", tuple(normalized))

    @property
    def n(self) -> int:
        return self.q1.shape[0]


@dataclass(frozen=True, eq=False)
class CascadeProblem:
    """An ordered tuple of cascade blocks; position in the tuple is the block index."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(self.blocks)
        if not blocks:
            raise InvariantViolation("cascade needs at least one block")
        for i, blk in enumerate(blocks):
            for j, ktilde in blk.couplings:
                if not 0 <= j < i:
                    raise InvariantViolation(
                        f"block {i} couples to block {j}; couplings must point strictly earlier"
                    )
                nj = blocks[j].n
                if ktilde.shape != (blk.n, nj):
                    raise DimensionMismatch(
                        f"coupling {i}<-{j} must have shape ({blk.n}, {nj}), "
                        f"got {ktilde.shape}"
                    )
        object.__setattr__(self, "blocks", blocks)

    @property
    def t(self) -> int:
        return len(self.blocks)

    @property
    def total_dim(self) -> int:
        return 2 * sum(blk.n for blk in self.blocks)


@dataclass(frozen=True, eq=False)
class CascadeStage:
    """Diagnostics for one solved block: the effective contact LCP and shifted offsets."""

    contact: ContactLcp
    solution: ContactSolution
    q_hat1: np.ndarray
    q_hat2: np.ndarray


def cascade_stages(p: CascadeProblem, options: PgsOptions | None = None) -> list[CascadeStage]:
    """Solve blocks in order, returning per-stage diagnostics.

    q_hat2 is formed as (q1 + q2) - q_hat1 rather than by shifting q2
    directly; the two are mathematically identical and this form keeps the
    gap-sum identity q_hat1 + q_hat2 = q1 + q2 exact in floating point.
    """
    stages: list[CascadeStage] = []
    net_forces: list[np.ndarray] = []
    for blk in p.blocks:
        shift = np.zeros(blk.n)
        for j, ktilde in blk.couplings:
            shift += matvec(ktilde, net_forces[j])
        gap_sum = blk.q1 + blk.q2
        if np.any(gap_sum <= 0.0):
            raise InvariantViolation("block gap sum q1 + q2 must be strictly positive")
        q_hat1 = blk.q1 + shift
        q_hat2 = gap_sum - q_hat1
        contact = ContactLcp(
            blk.K, 0.5 * (q_hat1 - q_hat2), 0.5 * (q_hat1 + q_hat2)
        )
        sol = solve_structured(contact, options)
        net_forces.append(sol.d)
        stages.append(CascadeStage(contact, sol, q_hat1, q_hat2))
    return stages


def solve_cascade(p: CascadeProblem, options: PgsOptions | None = None) -> list[ContactSolution]:
    """Solve every block in order; returns one ContactSolution per block."""
    return [stage.solution for stage in cascade_stages(p, options)]


def assemble_full(p: CascadeProblem) -> LcpProblem:
    """Assemble the full (non-symmetric) block lower-triangular LCP."""
    sizes = [blk.n for blk in p.blocks]
    offsets = np.concatenate([[0], np.cumsum([2 * n for n in sizes])])
    dim = int(offsets[-1])
    M = np.zeros((dim, dim))
    q = np.zeros(dim)

    def place(row0: int, col0: int, k: np.ndarray, ni: int, nj: int):
        M[row0 : row0 + ni, col0 : col0 + nj] = k
        M[row0 : row0 + ni, col0 + nj : col0 + 2 * nj] = -k
        M[row0 + ni : row0 + 2 * ni, col0 : col0 + nj] = -k
        M[row0 + ni : row0 + 2 * ni, col0 + nj : col0 + 2 * nj] = k

    for i, blk in enumerate(p.blocks):
        o_i = int(offsets[i])
        place(o_i, o_i, blk.K, blk.n, blk.n)
        q[o_i : o_i + blk.n] = blk.q1
        q[o_i + blk.n : o_i + 2 * blk.n] = blk.q2
        for j, ktilde in blk.couplings:
            place(o_i, int(offsets[j]), ktilde, blk.n, p.blocks[j].n)

    return LcpProblem(M, q)


def as_lcp_solution(p: CascadeProblem, solutions: list[ContactSolution]) -> LcpSolution:
    """Stack block solutions into a full-problem candidate, with w recomputed."""
    if len(solutions) != p.t:
        raise DimensionMismatch(f"expected {p.t} block solutions, got {len(solutions)}")
    z = np.concatenate([np.concatenate([s.F_l, s.F_u]) for s in solutions])
    w = assemble_w(assemble_full(p), z)
    sweeps = sum(s.sweeps for s in solutions)
    return LcpSolution(z, w, float(z @ w), "cascade", sweeps)
