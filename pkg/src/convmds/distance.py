"""Free distance of rate-1/n codes.

``free_distance`` searches the encoder state graph: states are the last
delta input symbols, each state has q outgoing edges (one per input
symbol) labelled with the Hamming weight of the n output symbols.  A
nonzero codeword is a path that leaves the zero state on a nonzero symbol
and returns to it, so d_free is a shortest-path length.  Edge weights may
be zero (catastrophic encoders even have zero-weight cycles), which a
Dijkstra search handles without special cases.

``brute_force_min_weight`` is the independent oracle: it enumerates input
polynomials and encodes them through an F_p-linear map built from
polynomial multiplication, sharing nothing with the trellis code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import dijkstra

from .convcode import ConvCode, codeword_weight, encode, singleton_bound
from .errors import (
    BadParametersError,
    BudgetExceededError,
    ConsistencyError,
    StateSpaceTooLargeError,
    UnsupportedKError,
)
from .gf import Felt
from .poly import Poly

DEFAULT_STATE_CAP = 1 << 24
DEFAULT_BUDGET = 1 << 24
_CHUNK = 1 << 15


class TrellisState(NamedTuple):
    """Encoder memory (u_{t-1}, ..., u_{t-delta})."""

    memory: tuple[Felt, ...]

    def index(self) -> int:
        q = self.memory[0].field.q if self.memory else 1
        return sum(x.value * q**i for i, x in enumerate(self.memory))

    @classmethod
    def from_index(cls, field, delta: int, s: int) -> "TrellisState":
        return cls(tuple(field.from_index((s // field.q**i) % field.q) for i in range(delta)))


@dataclass(frozen=True)
class DistanceReport:
    d_free: int
    witness_input: Poly
    witness_codeword: tuple[Poly, ...]
    bound: int
    is_mds: bool


def _require_rate_one_over_n(code: ConvCode) -> None:
    if code.k != 1:
        raise UnsupportedKError(f"free distance is only implemented for k = 1, got k={code.k}")


def _edge_tables(code: ConvCode):
    """Per-edge weights and successor states, both shaped (q**delta, q)."""
    F = code.field
    q, n, delta = F.q, code.n, code.degree
    G = code.generator.entries[0]
    coef = np.array([[g.coeff(i).value for g in G] for i in range(delta + 1)], dtype=np.int64)
    n_states = q**delta
    states = np.arange(n_states, dtype=np.int64)
    # contribution of the memory cells to each output symbol
    mem = np.zeros((n_states, n), dtype=np.int64)
    for i in range(1, delta + 1):
        digit = (states // q ** (i - 1)) % q
        for j in range(n):
            mem[:, j] = F.add_array(mem[:, j], F.mul_array(digit, coef[i, j]))
    inputs = np.arange(q, dtype=np.int64)
    weights = np.zeros((n_states, q), dtype=np.int64)
    for j in range(n):
        fresh = F.mul_array(inputs, coef[0, j])
        out = F.add_array(mem[:, j][:, None], fresh[None, :])
        weights += out != 0
    if delta == 0:
        succ = np.zeros((1, q), dtype=np.int64)
    else:
        succ = inputs[None, :] + q * (states % q ** (delta - 1))[:, None]
    return weights, succ


def free_distance(code: ConvCode, max_states: int = DEFAULT_STATE_CAP) -> DistanceReport:
    """Exact free distance with a deterministic witness.

    The witness is the lexicographically smallest input sequence (by
    canonical element index) among minimum-weight codewords of least
    input length.
    """
    _require_rate_one_over_n(code)
    F = code.field
    q, delta = F.q, code.degree
    n_states = q**delta
    if n_states > max_states:
        raise StateSpaceTooLargeError(f"{q}^{delta} = {n_states} states exceed the cap {max_states}")
    weights, succ = _edge_tables(code)

    # Cost of an edge is weight * big + 1: primary key weight, secondary key
    # path length.  Every cost is positive and shortest paths stay simple, so
    # the length part never exceeds n_states < big.
    big = n_states + 1
    cost = weights * big + 1
    if delta == 0:
        to_zero = np.zeros(1, dtype=np.int64)
    else:
        # reverse graph: edge succ[s, x] -> s; distances from 0 = cost of s -> 0
        rows = succ.ravel()
        cols = np.repeat(np.arange(n_states, dtype=np.int64), q)
        graph = sparse.csr_matrix(
            (cost.ravel().astype(np.float64), (rows, cols)), shape=(n_states, n_states)
        )
        dist = dijkstra(graph, directed=True, indices=0)
        to_zero = np.rint(dist).astype(np.int64)
        to_zero[0] = 0

    # total[s, x]: best completion through edge (s, x)
    def through(s: int) -> np.ndarray:
        return cost[s] + to_zero[succ[s]]

    first = through(0)
    first[0] = np.iinfo(np.int64).max
    best = int(first.min())
    inputs = [int(np.argmax(first == best))]
    remaining = best - int(cost[0, inputs[0]])
    state = int(succ[0, inputs[0]])
    while state != 0:
        options = through(state)
        x = int(np.argmax(options == remaining))
        if options[x] != remaining:
            raise ConsistencyError("witness reconstruction lost the optimal path")
        inputs.append(x)
        remaining -= int(cost[state, x])
        state = int(succ[state, x])

    d_free = best // big
    witness = Poly._raw(F, inputs)
    codeword = encode(code, witness)
    if codeword_weight(codeword) != d_free:
        raise ConsistencyError(
            f"witness re-encodes to weight {codeword_weight(codeword)}, search said {d_free}"
        )
    bound = singleton_bound(code.n, code.k, delta)
    if d_free > bound:
        raise ConsistencyError(f"d_free {d_free} exceeds the Singleton bound {bound}")
    return DistanceReport(d_free, witness, codeword, bound, d_free == bound)


def is_mds(code: ConvCode, max_states: int = DEFAULT_STATE_CAP) -> bool:
    return free_distance(code, max_states).is_mds


# -- enumeration oracle ----------------------------------------------------

def _linear_encoder(code: ConvCode, in_len: int, out_len: int) -> np.ndarray:
    """Matrix over F_p of u_0..u_{in_len-1} -> v_0..v_{out_len-1}.

    Rows are (position, digit) of the input, columns (position, column,
    digit) of the output, digits being F_p coordinates of F_q elements.
    """
    F = code.field
    m = F.m
    mat = np.zeros((in_len * m, out_len * code.n * m), dtype=np.float64)
    for t in range(in_len):
        for d in range(m):
            basis = Poly.monomial(F, t, F.from_index(F.p**d))
            v = encode(code, basis)
            for s in range(out_len):
                for j, vj in enumerate(v):
                    c = vj.coeff(s).value
                    col = (s * code.n + j) * m
                    mat[t * m + d, col:col + m] = F._digits[c]
    return mat


def _enumerate_min(code: ConvCode, in_len: int, out_len: int, budget: int):
    """Minimum output weight over inputs with u_0 != 0, first in lex order."""
    F = code.field
    q, p, m = F.q, F.p, F.m
    total = (q - 1) * q ** (in_len - 1)
    if total > budget:
        raise BudgetExceededError(f"{total} inputs exceed the enumeration budget {budget}")
    mat = _linear_encoder(code, in_len, out_len)
    place = q ** np.arange(in_len - 1, -1, -1, dtype=np.int64)
    best_w, best_u = None, None
    for start in range(0, total, _CHUNK):
        r = np.arange(start, min(start + _CHUNK, total), dtype=np.int64) + q ** (in_len - 1)
        u = (r[:, None] // place[None, :]) % q
        digits = F._digits[u].reshape(len(r), in_len * m).astype(np.float64)
        out = np.fmod(digits @ mat, p).reshape(len(r), out_len * code.n, m)
        w = np.any(out != 0, axis=2).sum(axis=1)
        i = int(np.argmin(w))
        if best_w is None or w[i] < best_w:
            best_w, best_u = int(w[i]), [int(x) for x in u[i]]
    return best_w, best_u


def brute_force_min_weight(
    code: ConvCode, max_input_degree: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, Poly]:
    """Minimum codeword weight over nonzero inputs of degree <= the cap.

    Inputs are anchored at u_0 != 0.  The result bounds d_free from above
    and equals it once the cap is large enough.
    """
    _require_rate_one_over_n(code)
    if max_input_degree < 0:
        raise BadParametersError("max_input_degree must be >= 0")
    in_len = max_input_degree + 1
    w, u = _enumerate_min(code, in_len, in_len + code.degree, budget)
    return w, Poly._raw(code.field, u)


def window_min_weight(
    code: ConvCode, window_len: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, list[Felt]]:
    """Minimum weight of v_0..v_L over prefixes u_0..u_L with u_0 != 0."""
    _require_rate_one_over_n(code)
    if window_len < 0:
        raise BadParametersError("window_len must be >= 0")
    w, u = _enumerate_min(code, window_len + 1, window_len + 1, budget)
    return w, [code.field.from_index(x) for x in u]
