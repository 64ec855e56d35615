import math

import pytest
from sympy import expand, eye, zeros

from coverforge import BraidLetter, LaurentPoly, alexander_poly, analyze, burau_reduced, conjugate, cyclic_rotate, \
    errors, h1_order_fox, negative_stabilize, parse_braid, positive_stabilize
from coverforge._oracle import t
from .data import a_figure_eight, a_trefoil

KNOTS = [
    ('s1^3', 2),
    ('s1^5', 2),
    ('s1^3 -s2', 3),
    ('s1 s2', 3),
    ('s1 s2 s1 s2', 3),
    ('s1 s2 s1 s2 s1 s2 s1 s2', 3),
    ('s1 s2 s1 s2 s1 s2 s1 s2 s1 s2', 3),
    (a_figure_eight.TEXT, a_figure_eight.STRANDS),
]


def knot_catalog():
    for text, strands in KNOTS:
        b = parse_braid(text, strands)
        for shift in range(len(b)) if text == 's1^3 -s2' else [0]:
            yield cyclic_rotate(b, shift)


def test_burau_generators():
    assert burau_reduced(parse_braid('s1', 2)) == eye(1) * -t
    assert burau_reduced(parse_braid('s1', 3)).tolist() == [[-t, 0], [1, 1]]
    assert burau_reduced(parse_braid('s2', 3)).tolist() == [[1, t], [0, -t]]
    assert burau_reduced(parse_braid('-s1', 3)).tolist() == [[-1 / t, 0], [1 / t, 1]]


def test_burau_braid_relation():
    left = burau_reduced(parse_braid('s1 s2 s1', 3))
    right = burau_reduced(parse_braid('s2 s1 s2', 3))

    assert (left - right).applyfunc(expand) == zeros(2)


def test_burau_of_inverse(random_words):
    for b in random_words(10, max_length=5):
        product = burau_reduced(b) * burau_reduced(b.inverse())
        assert product.applyfunc(expand) == eye(b.strands - 1)


@pytest.mark.parametrize('text, strands, expected', [
    (a_trefoil.TEXT, a_trefoil.STRANDS, a_trefoil.ALEXANDER),
    (a_figure_eight.TEXT, a_figure_eight.STRANDS, a_figure_eight.ALEXANDER),
    ('s1 s2 s1 s2', 3, a_trefoil.ALEXANDER),
    ('s1^5', 2, {-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}),
    ('s1 s2 s3', 4, {0: 1}),
])
def test_alexander_poly(text, strands, expected):
    assert alexander_poly(parse_braid(text, strands)).coefficients == expected


def test_alexander_poly_of_conjugates():
    b = parse_braid('s1^3 -s2', 3)

    for shift in range(len(b)):
        assert alexander_poly(cyclic_rotate(b, shift)).coefficients == a_trefoil.ALEXANDER


def test_alexander_poly_under_conjugation_and_stabilization(random_words):
    knots = [b for b in random_words(80, max_length=6) if b.component_count() == 1]
    assert knots

    for b in knots:
        expected = alexander_poly(b).coefficients

        assert alexander_poly(positive_stabilize(b)).coefficients == expected
        assert alexander_poly(negative_stabilize(b)).coefficients == expected
        for index in range(1, b.strands):
            for sign in (1, -1):
                assert alexander_poly(conjugate(b, BraidLetter(index, sign))).coefficients == expected


def test_alexander_poly_needs_a_knot():
    with pytest.raises(errors.NotAKnotError):
        alexander_poly(parse_braid('s1^2', 2))


def test_laurent_poly_text():
    assert str(LaurentPoly.from_mapping(a_trefoil.ALEXANDER)) == 't - 1 + t^-1'
    assert str(LaurentPoly.from_mapping(a_figure_eight.ALEXANDER)) == '-t + 3 - t^-1'
    assert str(LaurentPoly.from_mapping({2: -2, 0: 0})) == '-2*t^2'
    assert str(LaurentPoly()) == '0'


def test_laurent_poly_conversions():
    delta = LaurentPoly.from_mapping(a_figure_eight.ALEXANDER)

    assert delta.evaluate_at_one() == 1
    assert delta.to_poly().all_coeffs() == [-1, 3, -1]
    assert expand(delta.to_sympy() - (-t + 3 - 1 / t)) == 0


@pytest.mark.parametrize('p', [2, 3, 4, 5])
def test_fox_orders(trefoil, figure_eight, p):
    assert h1_order_fox(trefoil, p) == a_trefoil.FOX_ORDER[p]
    assert h1_order_fox(figure_eight, p) == a_figure_eight.FOX_ORDER[p]


def test_fox_order_infinite(trefoil):
    assert h1_order_fox(trefoil, 6) == math.inf


def test_fox_order_errors(trefoil):
    with pytest.raises(errors.CoverParamsError):
        h1_order_fox(trefoil, 1)
    with pytest.raises(errors.NotAKnotError):
        h1_order_fox(parse_braid('', 2), 2)


@pytest.mark.parametrize('p', [2, 3, 4, 5])
def test_smith_normal_form_matches_fox(p):
    for b in knot_catalog():
        report = analyze(b, p)
        assert report.h1_order == h1_order_fox(b, p), str(b)


def test_poincare_sphere_order():
    assert h1_order_fox(parse_braid('s1^3', 2), 5) == 1
    assert analyze(parse_braid('s1^3', 2), 5).h1_order == 1
