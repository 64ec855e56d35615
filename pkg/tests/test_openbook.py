import pytest

from coverforge import BraidLetter, CoverParams, CurveLabel, SignedTwist, TwistWord, errors, homology_action, \
    lift_letter, lift_monodromy, lifted_page, page_intersection, parse_braid, verify_lift_relations
from coverforge._openbook import LEFT, RIGHT


@pytest.mark.parametrize('p, n, euler_char, boundary, genus', [
    (2, 2, 0, 2, 0),
    (4, 5, -11, 1, 6),
    (2, 3, -1, 1, 1),
    (3, 3, -3, 3, 1),
])
def test_lifted_page(p, n, euler_char, boundary, genus):
    page = lifted_page(CoverParams(p, n))

    assert page.euler_char == euler_char
    assert page.boundary_components == boundary
    assert page.genus == genus
    assert len(page.curves) == 1 - euler_char == (p - 1) * (n - 1)


@pytest.mark.parametrize('p, n', [(1, 3), (3, 1)])
def test_cover_params_bounds(p, n):
    with pytest.raises(errors.CoverParamsError):
        CoverParams(p, n)


def test_lift_positive_letter():
    result = lift_letter(BraidLetter(1), CoverParams(3, 2))

    assert result.twists == (
        SignedTwist(CurveLabel(2, 1), RIGHT),
        SignedTwist(CurveLabel(1, 1), RIGHT),
    )


def test_lift_negative_letter():
    result = lift_letter(BraidLetter(1, -1), CoverParams(3, 2))

    assert result.twists == (
        SignedTwist(CurveLabel(1, 1), LEFT),
        SignedTwist(CurveLabel(2, 1), LEFT),
    )


def test_lift_letter_double_cover():
    result = lift_letter(BraidLetter(2), CoverParams(2, 4))

    assert result.twists == (SignedTwist(CurveLabel(1, 2), RIGHT),)


def test_lift_monodromy_of_the_base_unknot():
    result = lift_monodromy(parse_braid('s1 s2 s3', 4), 3)

    assert len(result) == 3 * 2
    assert all(twist.handedness == RIGHT for twist in result.twists)
    assert [twist.curve.strand for twist in result.twists] == [1, 1, 2, 2, 3, 3]


def test_lift_monodromy_empty_and_cancelling():
    params = CoverParams(4, 2)

    assert lift_monodromy(parse_braid('', 2), 4) == TwistWord(params)

    result = lift_monodromy(parse_braid('s1 -s1', 2), 4)
    assert len(result) == 2 * 3
    assert result.free_reduce() == TwistWord(params)


def test_twist_word_json():
    w = lift_monodromy(parse_braid('s1 -s2', 3), 3)

    data = w.to_list()

    assert data[0] == {'sheet': 2, 'strand': 1, 'handedness': 1}
    assert TwistWord.from_list(w.params, data) == w


def test_twist_word_rejects_foreign_labels():
    with pytest.raises(errors.CoverParamsError):
        TwistWord(CoverParams(2, 3), (SignedTwist(CurveLabel(2, 1)),))


@pytest.mark.parametrize('a, b, expected', [
    ((1, 1), (1, 1), 0),
    ((2, 1), (1, 1), 1),
    ((1, 1), (2, 1), -1),
    ((1, 1), (1, 2), 1),
    ((2, 1), (1, 2), -1),
    ((1, 2), (2, 1), 1),
    ((1, 1), (2, 2), 0),
    ((1, 1), (1, 3), 0),
])
def test_page_intersection(a, b, expected):
    assert page_intersection(CurveLabel(*a), CurveLabel(*b)) == expected


def test_page_intersection_support():
    params = CoverParams(5, 5)
    adjacent = {(0, 1), (0, -1), (1, 0), (-1, 0), (1, -1), (-1, 1)}

    for a in params.curves():
        for b in params.curves():
            value = page_intersection(a, b)
            assert value == -page_intersection(b, a)
            offset = (b.sheet - a.sheet, b.strand - a.strand)
            assert (value != 0) == (offset in adjacent)


def test_homology_action_identities():
    params = CoverParams(3, 3)
    twist = SignedTwist(CurveLabel(1, 2), RIGHT)
    identity = homology_action(TwistWord(params), params)

    assert homology_action(TwistWord(params, (twist, twist.inverse())), params) == identity

    w = lift_monodromy(parse_braid('s1 -s2 s1 s2', 3), 3)
    assert homology_action(w + w.inverse(), params) == identity


def test_homology_action_is_unimodular():
    params = CoverParams(4, 3)
    w = lift_monodromy(parse_braid('s1 s2^2 -s1', 3), 4)

    assert abs(int(homology_action(w, params).det())) == 1


@pytest.mark.parametrize('p', [2, 3, 4, 5])
def test_lifted_braid_relation(p):
    params = CoverParams(p, 3)
    s1 = homology_action(lift_letter(BraidLetter(1), params), params)
    s2 = homology_action(lift_letter(BraidLetter(2), params), params)

    assert s1 * s2 * s1 == s2 * s1 * s2


@pytest.mark.parametrize('p', [2, 3, 4, 5])
@pytest.mark.parametrize('n', [2, 3, 4, 5])
def test_verify_lift_relations(p, n):
    assert verify_lift_relations(CoverParams(p, n))
