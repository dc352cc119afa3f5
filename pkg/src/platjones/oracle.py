"""Independent exact ground truth: Kauffman bracket of the plat closure.

The bracket is a sum over all 2^c crossing smoothings; loops are
counted with union-find over segment identifications and the result is
an exact integer Laurent polynomial in A (unknot normalized to 1,
closed loops contribute d = -A^2 - A^{-2} each). The Jones polynomial
follows from the writhe correction V = (-1)^w A^{-3w} <K> with
t = A^{-4}; exponents are returned in x_t = t^{1/2} = A^{-2} so the
carrier type matches the evaluator's.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord, resolve_orientations, writhe
from .errors import TooManyCrossings
from .laurent import LaurentPoly

BracketPoly = LaurentPoly  # exponents are powers of A

LOOP_VALUE = LaurentPoly({2: -1, -2: -1})  # d = -A^2 - A^{-2}


@dataclass(frozen=True)
class PlanarDiagram:
    """Plat closure as segments, signed crossings and cap identifications.

    Segment ids are assigned in a fixed traversal order: one per bottom
    cup, then two fresh outgoing segments per crossing. Each crossing
    stores (left_in, right_in, left_out, right_out, sign).
    """

    n: int
    segments: int
    crossings: tuple[tuple[int, int, int, int, int], ...]
    caps: tuple[tuple[int, int], ...]
    word: BraidWord = field(repr=False)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)


def plat_diagram(word: BraidWord) -> PlanarDiagram:
    """Build the capped diagram; orientation resolution validates caps."""
    annotated, _ = resolve_orientations(word)
    n = annotated.n
    active = {}
    seg = 0
    for i in range(n):
        # one segment per cup arc, covering both of its strand positions
        active[2 * i + 1] = seg
        active[2 * i + 2] = seg
        seg += 1
    crossings = []
    for s in annotated.syllables:
        eps = 1 if s.power > 0 else -1
        for _ in range(abs(s.power)):
            left, right = active[s.index], active[s.index + 1]
            lo, ro = seg, seg + 1
            seg += 2
            crossings.append((left, right, lo, ro, eps))
            active[s.index], active[s.index + 1] = lo, ro
    caps = tuple((active[2 * i + 1], active[2 * i + 2]) for i in range(n))
    return PlanarDiagram(
        n=n, segments=seg, crossings=tuple(crossings), caps=caps, word=annotated
    )


def kauffman_bracket(diagram: PlanarDiagram, max_crossings: int = 20) -> BracketPoly:
    """Exact state sum over all smoothings, unknot normalized to 1.

    States are grouped by (A-exponent, loop count) before expanding the
    d powers, which keeps the exact arithmetic out of the hot loop.
    """
    c = diagram.crossing_count
    if c > max_crossings:
        raise TooManyCrossings(f"{c} crossings exceeds the limit {max_crossings}")
    crossings = diagram.crossings
    caps = diagram.caps
    nseg = diagram.segments
    counts: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        parent = list(range(nseg))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        exp = 0
        for j, (left, right, lo, ro, eps) in enumerate(crossings):
            if (state >> j) & 1:
                # cup-cap smoothing: inputs join, outputs join
                parent[find(left)] = find(right)
                parent[find(lo)] = find(ro)
                exp -= eps
            else:
                # identity smoothing: each input continues to its output
                parent[find(left)] = find(lo)
                parent[find(right)] = find(ro)
                exp += eps
        for x, y in caps:
            parent[find(x)] = find(y)
        loops = sum(1 for x in range(nseg) if find(x) == x)
        key = (exp, loops)
        counts[key] = counts.get(key, 0) + 1
    powers = {0: LaurentPoly.one()}

    def d_power(k):
        if k not in powers:
            powers[k] = d_power(k - 1) * LOOP_VALUE
        return powers[k]

    total = LaurentPoly.zero()
    for (exp, loops), cnt in counts.items():
        total = total + d_power(loops - 1).shift(exp) * cnt
    return total


def writhe_correction(bracket: BracketPoly, w: int) -> LaurentPoly:
    """V = (-1)^w A^{-3w} <K>, re-expressed in x_t = t^{1/2} = A^{-2}."""
    sign = (-1) ** w
    out = {}
    for e, coeff in bracket.coeffs().items():
        corrected = e - 3 * w
        assert corrected % 2 == 0, "writhe-corrected A-exponent must be even"
        out[-corrected // 2] = coeff * sign
    return LaurentPoly(out)


def jones_exact(word: BraidWord, max_crossings: int = 20) -> LaurentPoly:
    """Exact Jones polynomial of the plat closure, exponents in t^{1/2}.

    Uses the same deterministic orientation resolution as the
    evaluator, so the writhe correction refers to the same link
    orientation.
    """
    diagram = plat_diagram(word)
    bracket = kauffman_bracket(diagram, max_crossings=max_crossings)
    return writhe_correction(bracket, writhe(diagram.word))


def bracket_span(bracket: BracketPoly) -> tuple[int, int]:
    """Smallest and largest A-exponent; (0, 0) for constants."""
    sup = bracket.support()
    if not sup:
        return (0, 0)
    return (sup[0], sup[-1])
