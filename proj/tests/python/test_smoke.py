import math

import pytest

import plcbound as pb


def test_q_golden_ratio():
    q = pb.compute_q(3, 2)
    assert abs(q.q - (math.sqrt(5) - 1) / 2) < 1e-9
    assert q.bracket_lo <= q.q <= q.bracket_hi
    assert float(q) == q.q


def test_poly_coeffs_are_python_ints():
    assert pb.poly_coeffs(5, 4) == [1, -1, 0, 0, -1]
    big = pb.poly_coeffs(60, 40)
    assert big[0] == 20**40 - 19**40
    assert big[-1] == -1


def test_lemma_and_errors():
    assert pb.check_lemma_bounds(7, 3).ok
    with pytest.raises(pb.InvalidParameters):
        pb.compute_q(2, 2)
    with pytest.raises(ValueError):
        pb.eval_f(3, 2, 1.5)


def test_ratio_scan():
    r = pb.ratio_scan(30)
    assert abs(r["limit_min"] - 0.8598841287) < 1e-6
    assert r["grid_min"] > 6 / 7
    assert len(r["grid"]) == 30 * 29 // 2


def test_exact_solvers():
    k3 = pb.generate("complete", 3)
    c5 = pb.generate("cycle", 5)
    assert pb.lambda_t(k3, 2)["value"] == 2
    assert pb.lambda_t(c5, 2)["value"] == 4
    assert pb.chi_ell(c5)["chi_ell"] == 3
    ok, bad = pb.is_s_choosable(pb.generate("complete_bipartite", 3, 3), 2)
    assert not ok and bad.uniform_size == 2
    count, coloring = pb.max_partial_colorable(k3, pb.ListAssignment([[1, 2]] * 3))
    assert count == 2 and coloring == [1, 2, None]


def test_scheme():
    pet = pb.generate("petersen")
    lists = pb.random_lists(10, 3, 6, 5)
    out = pb.derandomize(pet, lists, 4)
    assert out["colored_count"] >= 7
    assert out["expectation_monotone"]
    colored, valid, violations = pb.validate_partial(pet, lists, out["coloring"])
    assert valid and not violations and colored == out["colored_count"]
    mc = pb.monte_carlo(pb.generate("cycle", 5), pb.random_lists(5, 2, 4, 7), 3, 2000, 1)
    assert abs(mc["mean_fraction"] - mc["q"]) < 5 * mc["stddev_of_mean"] + 1e-12


def test_dimacs_round_trip():
    g = pb.parse_dimacs("p edge 3 2\ne 1 2\ne 2 3\n")
    assert g.edges() == [(0, 1), (1, 2)]
    assert pb.parse_dimacs(g.to_dimacs()).edges() == g.edges()
    with pytest.raises(pb.ParseError):
        pb.parse_dimacs("p edge 2 1\ne 1 1\n")
