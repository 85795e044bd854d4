import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mreg import (
    GradingError,
    InputError,
    check_positive_grading,
    enumerate_bounded_region,
    find_positive_coarsening_vector,
    positive_coarsening_candidates,
    primitive_reduce,
    shifted_orthant_region,
)

HIRZEBRUCH2 = ((1, 0), (-2, 1), (1, 0), (0, 1))


def test_positive_grading_examples():
    assert check_positive_grading(HIRZEBRUCH2) is True
    assert check_positive_grading(((1,), (-1,))) is False
    assert check_positive_grading(((0, 1), (0, 0))) is False


def test_positive_grading_ragged_matrix():
    with pytest.raises(InputError):
        check_positive_grading(((1, 0), (1,)))


def test_find_vector_examples():
    assert find_positive_coarsening_vector(((1, 0), (0, 1))) == (1, 1)
    assert find_positive_coarsening_vector(HIRZEBRUCH2) == (1, 3)
    assert find_positive_coarsening_vector(((4,), (4,))) == (1,)


def test_find_vector_needs_positive_grading():
    with pytest.raises(GradingError):
        find_positive_coarsening_vector(((1,), (-1,)))


def test_find_vector_feasibility():
    for degrees in (HIRZEBRUCH2, ((1, 0), (0, 1)), ((2, -1), (0, 1)), ((4,), (4,))):
        v = find_positive_coarsening_vector(degrees)
        assert all(sum(a * b for a, b in zip(col, v)) >= 1 for col in degrees)


@given(
    st.lists(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
        min_size=1,
        max_size=5,
    )
)
@settings(max_examples=60, deadline=None)
def test_positivity_decision_consistent_with_search(cols):
    degrees = tuple(cols)
    positive = check_positive_grading(degrees)
    if positive:
        v = find_positive_coarsening_vector(degrees)
        assert all(sum(a * b for a, b in zip(col, v)) >= 1 for col in degrees)
    else:
        # exhaustive box search finds nothing feasible
        box = 4
        found = any(
            all(sum(a * b for a, b in zip(col, (i, j))) >= 1 for col in degrees)
            for i in range(-box, box + 1)
            for j in range(-box, box + 1)
        )
        assert not found


def test_primitive_reduce():
    assert primitive_reduce((2, 6)) == (1, 3)
    assert primitive_reduce((1, 1)) == (1, 1)
    assert primitive_reduce((3, 3)) == (1, 1)


@given(st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)))
def test_primitive_reduce_idempotent(v):
    if not any(v):
        return
    once = primitive_reduce(v)
    assert primitive_reduce(once) == once
    # parallel to the input
    assert all(a * once[0] == v[0] * b for a, b in zip(v, once))


@given(st.integers(1, 6))
def test_primitive_reduce_preserves_feasibility(scale):
    for degrees in (HIRZEBRUCH2, ((1, 0), (0, 1)), ((4,), (4,))):
        v = find_positive_coarsening_vector(degrees)
        blown = tuple(scale * x for x in v)
        red = primitive_reduce(blown)
        assert all(sum(a * b for a, b in zip(col, red)) >= 1 for col in degrees)


def test_enumerate_region_examples():
    std = ((1, 0), (1, 0), (0, 1), (0, 1))
    pts = enumerate_bounded_region([(0, 0)], std, (1, 1), 2).points()
    assert set(pts) == {(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)}
    hz = enumerate_bounded_region([(0, 0)], HIRZEBRUCH2, (1, 3), 2).points()
    assert set(hz) == {(0, 0), (1, 0), (-2, 1), (2, 0), (-1, 1), (-4, 2)}
    assert enumerate_bounded_region([(0, 0)], std, (1, 1), -1).points() == ()


def test_enumerate_region_witnesses_and_monotone():
    region = enumerate_bounded_region([(0, 0), (1, 1)], HIRZEBRUCH2, (1, 3), 4)
    for pt in region.points():
        base_idx, counts = region.witnesses[pt]
        base = [(0, 0), (1, 1)][base_idx]
        rebuilt = list(base)
        for col, k in zip(HIRZEBRUCH2, counts):
            for t in range(len(rebuilt)):
                rebuilt[t] += col[t] * k
        assert tuple(rebuilt) == pt
        assert pt[0] * 1 + pt[1] * 3 <= 4
    smaller = set(enumerate_bounded_region([(0, 0), (1, 1)], HIRZEBRUCH2, (1, 3), 3).points())
    assert smaller <= set(region.points())


def test_semigroup_region_membership():
    region = enumerate_bounded_region([(0, 0)], HIRZEBRUCH2, (1, 3), 6)
    from mreg import DegreeRegion

    semi = DegreeRegion(
        kind="semigroup",
        bases=((0, 0),),
        generators=HIRZEBRUCH2,
        weight_vector=(1, 3),
    )
    for pt in region.points():
        assert pt in semi
    assert (-1, 0) not in semi
    assert (0, 2) in semi  # (−2,1)+(1,0)+(1,0)+(0,1)


def test_shifted_orthant_examples():
    r = shifted_orthant_region(2, -1)
    assert (-1, 5) in r and (-1, -1) not in r
    r2 = shifted_orthant_region(2, 2)
    assert (1, 1) in r2 and (1, 0) not in r2
    r0 = shifted_orthant_region(2, 0)
    assert (0, 0) in r0 and (-1, 0) not in r0


@given(st.integers(0, 3), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
@settings(max_examples=200, deadline=None)
def test_shifted_orthant_against_deficit_formula(m, x):
    region = shifted_orthant_region(2, -m)
    expected = sum(max(0, -c) for c in x) <= m
    assert (x in region) == expected


def test_candidate_family_box5_p1p1():
    fam = positive_coarsening_candidates(((1, 0), (1, 0), (0, 1), (0, 1)), box=5)
    assert (1, 1) in fam and (5, 3) in fam
    assert (2, 2) not in fam  # not primitive
    assert all(a >= 1 and b >= 1 for a, b in fam)
    assert len(fam) == 19
