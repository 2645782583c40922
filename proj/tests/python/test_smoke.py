import pytest

import pyselfdual as sd


def test_classify_hexagon():
    verdict = sd.classify(sd.togliatti(), 2)
    assert verdict["selfdual"] is True
    assert verdict["c_k"] == 1
    assert verdict["knap"]["is_knap"] is True
    assert all(x != 0 for x in verdict["knap"]["torus_witness"])


def test_classify_with_crosscheck():
    verdict = sd.classify(sd.togliatti(), 2, crosscheck=True, trials=3, seed=1)
    assert verdict["dual_dim_check"]["agrees_with_verdict"] is True
    assert verdict["dual_dim_check"]["computed_dim"] == 2


def test_cone_is_a_pyramid():
    cone = sd.fixture("twisted_cubic_cone")
    report = sd.knap(cone, 1)
    assert report["is_knap"] is False
    assert report["offending_indices"] == [0]
    assert sd.classify(cone, 1)["selfdual"] is False


def test_exact_linear_algebra():
    assert sd.rank([[1, 1, 1, 1], [0, 1, 2, 3], [0, 1, 4, 9]]) == 3
    assert sd.right_kernel([[1, 1, 1, 1], [0, 1, 0, 1], [0, 0, 1, 1]]) == [
        [1, -1, -1, 1]
    ]


def test_hilbert_function():
    grid = sd.box([2, 2])
    assert [sd.hilbert_function(grid, k) for k in (1, 2, 3, 4)] == [3, 6, 8, 9]


def test_generators_and_laws():
    assert len(sd.cube_vertices(3)) == 8
    assert sd.classify(sd.cube_vertices(3), 2)["selfdual"] is True
    assert sd.classify(sd.scroll([1, 2]), 1)["selfdual"] is False
    joined = sd.join([sd.segment(3), sd.segment(3)])
    assert sd.classify(joined, 2)["c_k"] == 2


def test_random_general_postcondition():
    points, attempts = sd.random_general(2, 2, 7, 10)
    assert len(points) == 7
    assert attempts >= 1
    assert sd.classify(points, 2)["selfdual"] is True


def test_search_grid():
    result = sd.search([2, 2], 6, 2)
    assert result["examined"] == 84
    assert result["selfdual_count"] == 8


def test_duplicate_points_raise_value_error():
    with pytest.raises(ValueError):
        sd.classify([[0, 0], [0, 0]], 1)


def test_verification_suite():
    report = sd.verify()
    assert report["failed"] == 0
    assert report["passed"] >= 30
