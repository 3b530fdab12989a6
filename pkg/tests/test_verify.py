import random
from itertools import combinations, permutations

import pytest

from lrckit.code import LinearCode
from lrckit.field import field_make
from lrckit.graphs import girth
from lrckit.lr_codes import product_avail_code, steiner_sa_code, \
    wang_avail_code
from lrckit.matrix import Mat
from lrckit.seq_codes import (moore_code, t2_near_regular_code,
                              t2_turan_code, t3_catalog)
from lrckit.verify import (NotRateOptimal, VerifyReport, availability_check,
                           classify_rate_optimal_t2, low_weight_dual_supports,
                           sa_check, seq_recovery_check, staircase_check,
                           _incidence_graph)

GF2 = field_make(2)


def ordering_brute_force(code, r, t, pattern):
    """Independent oracle for sequential recovery: try every recovery order
    outright, using the full list of low-weight dual supports."""
    supports = low_weight_dual_supports(code, r + 1)

    def recoverable(order):
        remaining = set(order)
        for idx in order:
            if not any(s & remaining == {idx} for s in supports):
                return False
            remaining.discard(idx)
        return True

    return any(recoverable(order) for order in permutations(pattern))


FIXTURES_SMALL = [
    ("triangle", t2_near_regular_code(3, 2), 2, 2),
    ("turan", t2_turan_code(2, 2), 2, 2),
    ("t3-ex1", t3_catalog("ex1"), 3, 3),
    ("fano", steiner_sa_code(3), 2, 3),
    ("product", product_avail_code(2, 2), 2, 2),
    ("wang", wang_avail_code(2, 2), 2, 2),
]


@pytest.mark.parametrize("name,code,r,t",
                         FIXTURES_SMALL, ids=[f[0] for f in FIXTURES_SMALL])
def test_peeling_agrees_with_ordering_brute_force(name, code, r, t):
    if code.n > 12:
        pytest.skip("oracle is factorial; fixtures stay at n <= 12")
    from lrckit.verify import _Peeler
    peeler = _Peeler(code.n, low_weight_dual_supports(code, r + 1))
    for size in range(1, t + 1):
        for pattern in combinations(range(code.n), size):
            via_orders = ordering_brute_force(code, r, t, pattern)
            assert peeler.recovers(pattern) == via_orders
    # all fixtures are genuine codes for their declared t
    assert seq_recovery_check(code, r, t, mode="exhaustive").verdict


def test_girth_certificate_iff_exhaustive_binary():
    # over GF(2) with incidence-shaped H the girth condition is equivalent
    cases = [(moore_code(2, 4), 2, 4), (moore_code(2, 5), 2, 5),
             (t2_turan_code(2, 1), 2, 2)]
    # also a failing one: ask Petersen for more erasures than its girth - 1
    for code, r, t in cases:
        cert = seq_recovery_check(code, r, t, mode="certificate")
        exh = seq_recovery_check(code, r, t, mode="exhaustive")
        assert cert.verdict == exh.verdict is True
    pet = moore_code(2, 4)
    cert = seq_recovery_check(pet, 2, 5, mode="certificate")
    exh = seq_recovery_check(pet, 2, 5, mode="exhaustive")
    assert cert.verdict == exh.verdict is False
    assert sorted(cert.witness) == sorted(exh.witness) or cert.witness


def test_certificate_witness_is_a_short_cycle():
    pet = moore_code(2, 4)
    rep = seq_recovery_check(pet, 2, 5, mode="certificate")
    assert not rep.verdict
    assert len(rep.witness) == 5  # erasures along a shortest cycle
    graph, reason = _incidence_graph(pet)
    assert reason is None and girth(graph) == 5


def test_sampled_mode_records_seed():
    pet = moore_code(2, 4)
    rep = seq_recovery_check(pet, 2, 4, mode="sampled", samples=500, seed=77)
    assert rep.verdict and rep.budgets["seed"] == 77
    with pytest.raises(ValueError):
        VerifyReport("x", True, "sampled")


def test_availability_spc_fails():
    spc = LinearCode(Mat(GF2, [[1, 1, 1, 1]]))
    rep = availability_check(spc, 3, 2)
    assert not rep.verdict
    assert rep.witness["coordinate"] == 0


def test_sa_check_shape_violations():
    fano = steiner_sa_code(3)
    assert sa_check(fano.H, 2, 3).verdict
    assert not sa_check(fano.H, 3, 3).verdict   # wrong row weight
    assert not sa_check(fano.H, 2, 4).verdict   # wrong column weight
    # two checks meeting in two coordinates break orthogonality
    H = Mat(GF2, [[1, 1, 1, 0], [1, 1, 0, 1]])
    assert not sa_check(H, 2, 1).verdict


def test_staircase_random_fails():
    rng = random.Random(2)
    H = Mat(GF2, [[rng.randrange(2) for _ in range(12)] for _ in range(5)])
    assert not staircase_check(H, 2, 4).verdict


def test_staircase_t2_complete_graph_code():
    code = moore_code(3, 2)  # complete graph on r+2 nodes, one row dropped
    rep = staircase_check(code.H, 3, 2)
    assert rep.verdict
    prof = rep.detail["profile"]
    assert prof["a"][0] == 4  # apex edges become weight-1 columns


def test_classify_regular_graph_code():
    c = t2_near_regular_code(12, 4)
    rep = classify_rate_optimal_t2(c)
    assert rep.verdict
    assert rep.detail["parts"] == [
        {"type": "regular_graph", "coords": list(range(18))}]


def test_classify_complete_graph_code():
    c = t2_turan_code(2, 1)
    rep = classify_rate_optimal_t2(c, r=2)
    assert rep.verdict
    assert rep.detail["parts"][0]["type"] == "regular_graph"


def test_classify_mds_product():
    from lrckit.matrix import vandermonde
    g4 = field_make(2, 2)
    V = vandermonde(g4, [0, 1, 2, 3], 2)
    rows = [list(r) + [0] * 4 for r in V.data]
    rows += [[0] * 4 + list(r) for r in V.data]
    c = LinearCode(Mat(g4, rows))
    rep = classify_rate_optimal_t2(c, r=2)
    assert rep.verdict
    assert [p["type"] for p in rep.detail["parts"]] == \
        ["mds_block", "mds_block"]


def test_classify_rejects_wrong_rate():
    c = t3_catalog("ex1")
    with pytest.raises(NotRateOptimal):
        classify_rate_optimal_t2(c, r=3)


def test_mixed_product_and_graph_classification():
    # [4,2,3] MDS block alongside a complete-graph code, over GF(4)
    from lrckit.matrix import vandermonde
    g4 = field_make(2, 2)
    V = vandermonde(g4, [0, 1, 2, 3], 2)
    k4 = t2_turan_code(2, 1)  # binary block, lift entries to GF(4)
    rows = [list(r) + [0] * 6 for r in V.data]
    rows += [[0] * 4 + [int(x) for x in hr] for hr in k4.H.data]
    c = LinearCode(Mat(g4, rows))
    rep = classify_rate_optimal_t2(c, r=2)
    assert rep.verdict
    kinds = sorted(p["type"] for p in rep.detail["parts"])
    assert kinds == ["mds_block", "regular_graph"]


def test_product_code_rows_satisfy_sa_shape():
    c = product_avail_code(2, 2)
    assert sa_check(c.H, 2, 2).verdict
