"""Exact skein oracle: brute-force state sums as ground truth."""

import pytest

from platjones.braid import mirror, parse, resolve_orientations, writhe
from platjones.errors import CapMismatch, TooManyCrossings
from platjones.laurent import LaurentPoly
from platjones.oracle import (
    LOOP_VALUE,
    bracket_span,
    jones_exact,
    kauffman_bracket,
    plat_diagram,
    writhe_correction,
)

UNLINK2 = LaurentPoly({-1: -1, 1: -1})  # d in t^{1/2} exponents


def test_diagram_structure():
    d = plat_diagram(parse("strands=4; g2^3"))
    assert d.n == 2
    assert d.crossing_count == 3
    assert d.segments == 2 + 2 * 3
    # each crossing consumes the previous pair and emits a fresh one
    assert d.crossings[0][:2] == (0, 1)
    assert d.crossings[0][2:4] == (2, 3)
    assert d.crossings[1][:2] == (2, 3)
    assert all(c[4] == 1 for c in d.crossings)


def test_diagram_validates_caps():
    with pytest.raises(CapMismatch):
        plat_diagram(parse("strands=4; flips=00; h2^1"))


def test_bracket_unknot():
    d = plat_diagram(parse("strands=2;"))
    assert kauffman_bracket(d) == LaurentPoly.one()


def test_bracket_unlink_two_components():
    d = plat_diagram(parse("strands=4;"))
    assert kauffman_bracket(d) == LOOP_VALUE


def test_bracket_positive_kink():
    # one positive kink multiplies the empty bracket by -A^{-3} in this
    # traversal's smoothing labels
    d = plat_diagram(parse("strands=2; g1^1"))
    assert kauffman_bracket(d) == LaurentPoly({-3: -1})


def test_bracket_hopf():
    d = plat_diagram(parse("strands=4; g2^2"))
    assert kauffman_bracket(d) == LaurentPoly({-4: -1, 4: -1})
    assert bracket_span(kauffman_bracket(d)) == (-4, 4)


def test_jones_unknot_with_kinks():
    for text in ("strands=2; g1^1", "strands=2; g1^-1", "strands=2; g1^3"):
        assert jones_exact(parse(text)) == LaurentPoly.one()


def test_jones_trefoils():
    right = jones_exact(parse("strands=4; g2^3"))
    assert right == LaurentPoly({2: 1, 6: 1, 8: -1})
    left = jones_exact(parse("strands=4; g2^-3"))
    assert left == LaurentPoly({-8: -1, -6: 1, -2: 1})
    assert left == right.invert_variable()


def test_jones_hopf():
    got = jones_exact(parse("strands=4; g2^2"))
    assert got == LaurentPoly({-5: -1, -1: -1})


def test_jones_figure_eight_palindromic():
    got = jones_exact(parse("strands=4; g2^2 g1^-1 g2^1"))
    assert got == LaurentPoly({-4: 1, -2: -1, 0: 1, 2: -1, 4: 1})
    assert got == got.invert_variable()


def test_jones_connected_sum_square_knot():
    # granny vs square: mirror halves multiply as V1 * V2
    right = jones_exact(parse("strands=4; g2^3"))
    left = jones_exact(parse("strands=4; g2^-3"))
    square = jones_exact(parse("strands=6; g2^3 g4^-3"))
    assert square == right * left
    granny = jones_exact(parse("strands=6; g2^3 g4^3"))
    assert granny == right * right


def test_jones_disjoint_union_multiplies_by_d():
    tref = jones_exact(parse("strands=4; g2^3"))
    with_unknots = jones_exact(parse("strands=8; g2^3"))
    assert with_unknots == tref * UNLINK2 * UNLINK2


def test_reidemeister_two_invariance():
    base = jones_exact(parse("strands=4;"))
    assert jones_exact(parse("strands=4; g2^1 g2^-1")) == base
    assert jones_exact(parse("strands=4; g1^1 g1^-1 g3^-1 g3^1")) == base


def test_mirror_inverts_variable():
    for text in (
        "strands=4; g2^2 g1^-1 g2^1",
        "strands=6; g2^-1 g4^2 g3^1",
        "strands=4; b2^3 h1^-2 h3^-2 b2^3",
    ):
        w = parse(text)
        assert jones_exact(mirror(w)) == jones_exact(w).invert_variable()


def test_reference_word_value():
    # 10-crossing 2-component reference link; writhe +10 under its
    # explicit annotation, span 5..25 in half-integer steps of t
    w = parse("strands=4; b2^3 h1^-2 h3^-2 b2^3")
    got = jones_exact(w)
    assert got.support()[0] == 5
    assert got.support()[-1] == 25
    annotated, _ = resolve_orientations(w)
    assert writhe(annotated) == 10
    # component count is even, so every exponent is odd (half-integer t)
    assert all(k % 2 == 1 for k in got.support())


def test_knot_words_have_integer_exponents():
    # single-component closures land on integer powers of t
    for text in ("strands=4; g2^3", "strands=4; g2^2 g1^-1 g2^1"):
        got = jones_exact(parse(text))
        assert all(k % 2 == 0 for k in got.support())


def test_crossing_limit():
    w = parse("strands=4; g2^21")
    with pytest.raises(TooManyCrossings):
        jones_exact(w)
    with pytest.raises(TooManyCrossings):
        kauffman_bracket(plat_diagram(parse("strands=4; g2^5")), max_crossings=4)


def test_writhe_correction_shifts_exponents():
    br = LaurentPoly({-4: -1, 4: -1})
    assert writhe_correction(br, 0) == LaurentPoly({-2: -1, 2: -1})
    assert writhe_correction(br, 2) == LaurentPoly({1: -1, 5: -1})
