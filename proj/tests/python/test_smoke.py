import trisat


def test_construction_is_saturated():
    g = trisat.construct("1", (5, 5, 5), l=1, m=1)
    assert g.edge_count == 24
    report = trisat.is_saturated(g, (5, 5, 5), (1, 1, 1))
    assert report["saturated"]
    assert report["violating_nonedges"] == []


def test_host_is_not_pattern_free():
    host = trisat.Graph.complete((2, 2, 2))
    report = trisat.is_saturated(host, (2, 2, 2), (1, 1, 1))
    assert not report["is_pattern_free"]
    assert trisat.contains(host, (1, 1, 1))


def test_c4_exact_values():
    assert trisat.sat_exact((2, 2, 2), (2, 2, 0))["value"] == 6
    assert trisat.sat_exact((3, 2, 2), (2, 2, 0))["value"] == 7
    assert trisat.sat_exhaustive((2, 2, 2), (2, 2, 0))["value"] == 6


def test_optima_include_star_construction():
    optima = trisat.enumerate_optima((2, 2, 2), (2, 2, 0))
    stars = trisat.construct("c4", (2, 2, 2))
    assert any(trisat.iso_equivalent(w, stars) for w in optima["witnesses"])


def test_greedy_is_reproducible():
    a = trisat.sat_greedy((4, 4, 4), (1, 1, 1), trials=10, seed=5)
    b = trisat.sat_greedy((4, 4, 4), (1, 1, 1), trials=10, seed=5)
    assert a["value"] == b["value"]
    assert a["witnesses"][0] == b["witnesses"][0]


def test_formula_and_round_trip():
    assert trisat.formula("fjpw", {"k": 3, "n": 200})["value"] == 1194
    g = trisat.Graph((2, 1, 1), [(1, 2, 2, 1), (2, 1, 3, 1)])
    assert trisat.Graph.parse(g.to_json()) == g
    assert trisat.Graph.parse(g.to_edges()).edges() == [(1, 2, 2, 1), (2, 1, 3, 1)]
