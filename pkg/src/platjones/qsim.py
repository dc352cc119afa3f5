"""Statevector simulation of the plat matrix element.

The register holds 2n qubits; the compiled block of dimension
Catalan(n) sits on computational-basis indices 0..d-1 and every
operator acts as block plus identity on the rest. Starting from
|0...0> the final amplitude of |0...0> reproduces the evaluator's
matrix element, and its squared modulus is the algorithm's acceptance
probability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .braid import BraidWord, resolve_orientations
from .errors import NonUnitaryBlock
from .evaluator import BlockOperator, compile as compile_word
from .fusion import enumerate_odd_paths
from .qnum import QPoint

UNITARITY_TOL = 1e-10


@dataclass(frozen=True)
class StateVector:
    """Full 2^{2n}-dimensional register state."""

    n: int
    amplitudes: np.ndarray

    @property
    def dimension(self) -> int:
        return 1 << (2 * self.n)

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.amplitudes) ** 2)))

    def probability(self, index: int = 0) -> float:
        return float(abs(self.amplitudes[index]) ** 2)


@dataclass(frozen=True)
class EmbeddedUnitary:
    """d x d block on the lowest indices, implicit identity elsewhere."""

    n: int
    block: np.ndarray

    @property
    def dimension(self) -> int:
        return 1 << (2 * self.n)

    def apply(self, amplitudes: np.ndarray) -> np.ndarray:
        d = len(self.block)
        out = amplitudes.copy()
        out[:d] = self.block @ amplitudes[:d]
        return out

    def matrix(self) -> np.ndarray:
        """Dense form, for small-register inspection only."""
        full = np.eye(self.dimension, dtype=complex)
        d = len(self.block)
        full[:d, :d] = self.block
        return full


def embed(op: BlockOperator, n: int, point: QPoint) -> EmbeddedUnitary:
    """Materialize one operator at the given phase point.

    Unitarity of the block is what keeps the register norm at 1, so it
    is checked here rather than trusted.
    """
    block = op.matrix(point)
    deviation = np.max(np.abs(block @ block.conj().T - np.eye(len(block))))
    if deviation >= UNITARITY_TOL:
        raise NonUnitaryBlock(
            f"operator {op.token!r} deviates from unitarity by {deviation:.3e}"
        )
    return EmbeddedUnitary(n=n, block=block)


def evolution(word: BraidWord, theta: float) -> Iterator[StateVector]:
    """Yield the register state before and after each operator.

    The compiled operator list is written in matrix-product order, so
    the evolution applies it right to left: the last factor hits the
    initial state first.
    """
    annotated, _ = resolve_orientations(word)
    program = compile_word(annotated)
    point = QPoint(theta)
    n = annotated.n
    amps = np.zeros(1 << (2 * n), dtype=complex)
    amps[0] = 1.0
    yield StateVector(n=n, amplitudes=amps)
    for op in reversed(program.operators):
        amps = embed(op, n, point).apply(amps)
        yield StateVector(n=n, amplitudes=amps)


def run(word: BraidWord, theta: float) -> StateVector:
    """Evolve |0...0> through the whole compiled program."""
    state = None
    for state in evolution(word, theta):
        pass
    assert state is not None
    return state


def p_k(word: BraidWord, theta: float) -> float:
    """Acceptance probability |<0...0|U|0...0>|^2."""
    return run(word, theta).probability(0)


def block_dimension(n: int) -> int:
    return len(enumerate_odd_paths(n))
