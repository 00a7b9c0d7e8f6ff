"""Constructors for the explicit state families used throughout the library."""

from __future__ import annotations

import math
from typing import Sequence, Tuple

import numpy as np

from . import core
from .core import PureState, profile
from .errors import BadClassIndex, BadDimension, BadProfile, ConditionViolated


def epr(d: int) -> PureState:
    """Generalized EPR state sum_i |ii> in d x d."""
    if d < 2:
        raise BadDimension(f"EPR dimension must be >= 2, got {d}")
    amps = np.zeros(d * d, dtype=complex)
    amps[np.arange(d) * d + np.arange(d)] = 1.0
    return PureState(profile((d, d)), amps, label=f"epr({d})")


def mes_state(dims: Sequence[int]) -> PureState:
    """Maximum entangled state sum_j |j>|decode(j)> for d1 >= prod(rest).

    decode(j) is the j-th lexicographic product basis vector of the tail
    parties, so the amplitude of |j>|j> (tail index flattened) is 1.
    """
    prof = profile(dims)
    if prof.n < 2 or not prof.is_sorted_desc():
        raise ConditionViolated(f"dims {prof.dims} must be sorted non-increasing, n >= 2")
    tail = math.prod(prof.dims[1:])
    if prof.dims[0] < tail:
        raise ConditionViolated(
            f"no maximum entangled state: d1 = {prof.dims[0]} < {tail} = product of the rest"
        )
    amps = np.zeros(prof.total_dim, dtype=complex)
    amps[np.arange(tail) * tail + np.arange(tail)] = 1.0
    return PureState(prof, amps, label=f"mes{prof.dims}")


def maximal_rank_d1(dims: Sequence[int]) -> PureState:
    """Maximal tripartite state built from d1 product terms.

    sum_{i<d3} |i,i,i> + sum_{d3<=i<d2} |i,i,0> + sum_{d2<=i<d1} |i,a_i,c_i>
    with (a_i, c_i) the lexicographically first pairs unused by the first two
    sums. Full local ranks; tensor rank exactly d1.
    """
    prof = profile(dims)
    if prof.n != 3 or not prof.is_sorted_desc():
        raise BadProfile(f"need sorted tripartite dims, got {prof.dims}")
    d1, d2, d3 = prof.dims
    if d3 < 2:
        raise BadProfile("every dimension must be >= 2")
    if d1 > d2 * d3:
        raise BadProfile(f"requires d1 <= d2*d3, got {prof.dims}")
    used = {(i, i) for i in range(d3)} | {(i, 0) for i in range(d3, d2)}
    free = [(a, c) for a in range(d2) for c in range(d3) if (a, c) not in used]
    tens = np.zeros(prof.dims, dtype=complex)
    for i in range(d3):
        tens[i, i, i] = 1.0
    for i in range(d3, d2):
        tens[i, i, 0] = 1.0
    for i in range(d2, d1):
        a, c = free[i - d2]
        tens[i, a, c] = 1.0
    return PureState(prof, tens.reshape(-1), label=f"maximal_rank_d1{prof.dims}")


def rank_d1_terms(dims: Sequence[int]) -> list:
    """The d1 product terms of maximal_rank_d1 as per-party vector triples."""
    state = maximal_rank_d1(dims)
    d1, d2, d3 = state.dims
    terms = []
    tens = state.tensor()
    for i in range(d1):
        a, c = np.argwhere(tens[i]).reshape(2)
        va = np.zeros(d1, dtype=complex)
        vb = np.zeros(d2, dtype=complex)
        vc = np.zeros(d3, dtype=complex)
        va[i], vb[a], vc[c] = 1.0, 1.0, 1.0
        terms.append((va, vb, vc))
    return terms


def augment_to_full_ranks(state: PureState, seed: int = 0) -> PureState:
    """Append product terms until every party has full local rank.

    Each step adds one term whose factor at every rank-deficient party is a
    unit vector orthogonal to that party's current support, and the first
    support basis vector at the remaining parties. Projecting onto the input
    supports recovers the input, so no bipartition rank decreases. Factors are
    redrawn at random (seeded) in the unlikely event a rank fails to grow.
    """
    if state.n != 3:
        raise BadProfile(f"tripartite state required, got {state.n} parties")
    rng = np.random.default_rng(seed)
    current = state
    for _ in range(sum(state.dims)):
        ranks = [core.schmidt_rank(current, {i})[0] for i in range(3)]
        deficient = [i for i in range(3) if ranks[i] < current.dims[i]]
        if not deficient:
            return current
        for attempt in range(8):
            factors = []
            for i in range(3):
                flat = core._subset_flattening(current, {i})
                if i in deficient:
                    comp = core.orthocomplement_basis(flat.T)
                    v = comp[:, 0]
                    if attempt:
                        coeff = rng.standard_normal(comp.shape[1]) + 1j * rng.standard_normal(comp.shape[1])
                        v = comp @ coeff
                        v /= np.linalg.norm(v)
                else:
                    u, _, _ = np.linalg.svd(flat, full_matrices=False)
                    v = u[:, 0]
                    if attempt:
                        v = rng.standard_normal(current.dims[i]) + 1j * rng.standard_normal(current.dims[i])
                        v /= np.linalg.norm(v)
                factors.append(v)
            term = np.einsum("a,b,c->abc", *factors)
            candidate = PureState(current.profile, (current.tensor() + term).reshape(-1))
            new_ranks = [core.schmidt_rank(candidate, {i})[0] for i in range(3)]
            grew = all(new_ranks[i] == ranks[i] + 1 for i in deficient)
            kept = all(new_ranks[i] >= ranks[i] for i in range(3))
            if grew and kept:
                current = candidate
                break
        else:
            raise BadProfile("augmentation failed to raise local ranks")
    return current


def support_projectors(state: PureState) -> core.LocalOperatorTuple:
    """Per-party orthogonal projectors onto the state's local supports."""
    ops = []
    for i in range(state.n):
        flat = core._subset_flattening(state, {i})
        u, svals, _ = np.linalg.svd(flat, full_matrices=False)
        r = int(np.sum(svals > core.rank_eps() * svals[0]))
        basis = u[:, :r]
        ops.append(basis @ basis.conj().T)
    return core.LocalOperatorTuple(tuple(ops))


def canonical_maximal(dims: Sequence[int], r: int) -> PureState:
    """Canonical maximal state of hyperplane class r (d1 = d2*d3 - 1).

    Built as sum_i |i>|beta_i> where {beta_i} is an orthonormal basis of the
    orthocomplement, inside d2 x d3, of sum_{j<r} |jj>. Its complement state
    has Schmidt rank r across d2 : d3.
    """
    prof = profile(dims)
    if prof.n != 3 or not prof.is_sorted_desc():
        raise BadProfile(f"need sorted tripartite dims, got {prof.dims}")
    d1, d2, d3 = prof.dims
    if d3 < 2 or d1 != d2 * d3 - 1:
        raise BadProfile(f"requires d1 = d2*d3 - 1 and d3 >= 2, got {prof.dims}")
    if not 1 <= r <= min(d2, d3):
        raise BadClassIndex(f"class index {r} outside 1..{min(d2, d3)}")
    omega = np.zeros(d2 * d3, dtype=complex)
    omega[np.arange(r) * d3 + np.arange(r)] = 1.0
    basis = core.orthocomplement_basis(omega)  # (d2*d3, d1) orthonormal columns
    amps = basis.T.reshape(-1)
    return PureState(prof, amps, label=f"canonical_maximal{prof.dims}[r={r}]")


def matmul_tensor(m: int) -> PureState:
    """Matrix-multiplication tensor sum_{i,j,k} |i,j>|i,k>|k,j> in (m^2)^3."""
    if m < 2:
        raise BadDimension(f"matrix size must be >= 2, got {m}")
    d = m * m
    tens = np.zeros((d, d, d), dtype=complex)
    for i in range(m):
        for j in range(m):
            for k in range(m):
                tens[i * m + j, i * m + k, k * m + j] += 1.0
    return PureState(profile((d, d, d)), tens.reshape(-1), label=f"matmul({m})")


def case1_pair(d: int) -> Tuple[PureState, PureState]:
    """The two incomparable EPR-pairing states in d x d x d x d.

    First pairs parties (0,1) and (2,3); the second, a pure axis permutation
    of the first, pairs (0,2) and (1,3). Both have full local ranks, and their
    bipartition rank profiles witness SLOCC incomparability.
    """
    if d < 2:
        raise BadDimension(f"EPR dimension must be >= 2, got {d}")
    pair = np.einsum(
        "ab,cd->abcd", epr(d).tensor(), epr(d).tensor()
    )
    prof = profile((d, d, d, d))
    first = PureState(prof, pair.reshape(-1), label=f"case1_ab_cd({d})")
    second = PureState(
        prof, pair.transpose(0, 2, 1, 3).reshape(-1), label=f"case1_ac_bd({d})"
    )
    return first, second
