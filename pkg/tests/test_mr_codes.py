import pytest

from lrckit.bounds import lr_singleton_bound
from lrckit.code import LinearCode, is_mds, min_distance, puncture
from lrckit.field import field_make
from lrckit.matrix import Mat
from lrckit.mr_codes import (LocalStructure, NoSuitableField,
                             mr_r12, mr_r2_coset_search, mr_rdelta2,
                             pmr_general_a1, pmr_parity_split)
from lrckit.verify import mr_shape_check, pmds_check, pmr_check


def test_local_structure_invariants():
    with pytest.raises(ValueError):
        LocalStructure(((0, 1), (1, 2)))  # overlap
    s = LocalStructure(((0, 1, 2), (3, 4, 5)))
    assert s.admissible_pattern() == (0, 3)
    assert s.covers(6)


def test_pmr_parity_split_distance():
    c = pmr_parity_split(3, 4, 3, field_make(13))
    assert (c.n, c.k) == (15, 9)
    assert min_distance(c) == 5  # delta + 2
    assert pmr_check(c).verdict
    c = pmr_parity_split(2, 3, 2, field_make(7))
    assert (c.n, c.k) == (8, 4)
    assert min_distance(c) == 4
    from fractions import Fraction
    assert c.rate() == Fraction(1, 2)  # 1 - (delta + m)/(m(r+1))
    assert pmr_check(c).verdict


def test_pmr_parity_split_guards():
    with pytest.raises(ValueError):
        pmr_parity_split(3, 4, 4, field_make(13))  # delta > r-1
    from lrckit.mr_codes import FieldTooSmall
    with pytest.raises(FieldTooSmall):
        pmr_parity_split(3, 4, 3, field_make(11))  # q < mr + 1


def test_pmr_parity_split_delta_zero():
    c = pmr_parity_split(2, 3, 0, field_make(7))
    assert min_distance(c) == 2
    assert pmr_check(c).verdict  # punctured code is the full space


def test_mr_r12_exhaustive():
    c = mr_r12(3, 2)
    st = c.provenance["local_structure"]
    assert (c.n, c.k) == (9, 4)
    assert c.provenance["q"] == 16 <= 2 * c.n
    assert pmds_check(c, st, 1, 2).verdict
    assert mr_shape_check(c).verdict
    assert min_distance(c) == lr_singleton_bound(c.n, c.k, 2)


def test_mr_r12_r3():
    c = mr_r12(2, 3)
    st = c.provenance["local_structure"]
    assert (c.n, c.k) == (8, 4)
    assert pmds_check(c, st, 1, 2).verdict
    # distinct evaluation points by the coset argument
    thetas = [c.H[(c.H.rows - 1, j)] for j in range(2, c.n)]


def test_mr_rdelta2_exhaustive():
    c = mr_rdelta2(2, 2, 2, 4)
    st = c.provenance["local_structure"]
    assert (c.n, c.k) == (8, 2)
    assert c.provenance["q"] == 9
    assert pmds_check(c, st, 2, 2).verdict
    c = mr_rdelta2(3, 2, 1, 4)
    assert (c.n, c.k) == (9, 4)
    assert c.provenance["q"] == 13
    assert pmds_check(c, c.provenance["local_structure"], 1, 2).verdict


def test_mr_rdelta2_row_groups_are_mds():
    c = mr_rdelta2(2, 2, 2, 4)
    st = c.provenance["local_structure"]
    for grp in st.groups:
        local = puncture(c, [j for j in range(c.n) if j not in set(grp)])
        assert local.k == 2  # [r+delta, r] on the group
        assert is_mds(local)


def test_mr_rdelta2_field_guards():
    with pytest.raises(ValueError):
        mr_rdelta2(2, 2, 2, 3)  # psi < r + delta


def test_pmr_general_a1_instance():
    code, report = pmr_general_a1(3, 3, 5, 16, seed=0)
    assert (code.n, code.k) == (12, 4)
    assert code.gf.q == 16 ** 3
    assert report.verdict
    assert report.detail["d_min"] == 8  # delta + 2 + 1


def test_pmr_general_a1_seed_variation():
    # several draws of the root-of-unity choices, all decided by the checker
    for seed in (1, 2):
        code, report = pmr_general_a1(3, 3, 5, 16, seed=seed)
        assert report.verdict in (True, False)
        assert report.detail["d_min"] <= 8


def test_pmr_general_a1_guards():
    with pytest.raises(ValueError):
        pmr_general_a1(3, 3, 2, 16)  # delta below the a = 1 window


def test_mr_coset_search_small():
    c = mr_r2_coset_search(6, 1, field_make(13))
    st = c.provenance["local_structure"]
    assert (c.n, c.k) == (6, 3)
    assert pmds_check(c, st, 1, c.provenance["s"]).verdict
    # every one-per-group puncturing leaves an MDS code
    for pattern in ((0, 3), (1, 4), (2, 5)):
        assert is_mds(puncture(c, list(pattern)))


def test_mr_coset_search_larger():
    c = mr_r2_coset_search(9, 2, field_make(31))
    assert (c.n, c.k) == (9, 5)
    assert pmds_check(c, c.provenance["local_structure"], 1,
                      c.provenance["s"]).verdict


def test_mr_coset_search_guards():
    with pytest.raises(ValueError):
        mr_r2_coset_search(8, 1, field_make(13))   # 3 does not divide N
    with pytest.raises(NoSuitableField):
        mr_r2_coset_search(6, 1, field_make(11))   # 3 does not divide q-1
    with pytest.raises(ValueError):
        mr_r2_coset_search(6, 2, field_make(13))   # rate cap 2D/N < 2/3


def test_mutation_guard():
    """Corrupting any entry of the canonical-form structure (local rows,
    identity block, zero block) must trip a verdict; entries in the global
    rows' data part may yield a different but still genuinely maximal
    recoverable code, which is re-verified exhaustively instead."""
    base = mr_r12(3, 2)
    st = base.provenance["local_structure"]
    m = len(st.groups)
    H0 = base.H.to_lists()
    gf = base.gf
    target_d = lr_singleton_bound(base.n, base.k, 2)
    structural_escapes = []
    genuine = 0
    for i in range(len(H0)):
        for j in range(len(H0[0])):
            rows = [row[:] for row in H0]
            rows[i][j] = 0 if rows[i][j] else 1
            mut = LinearCode(Mat(gf, rows), provenance=base.provenance)
            caught = (mut.k != base.k
                      or not mr_shape_check(mut, st).verdict
                      or not pmds_check(mut, st, 1, 2).verdict
                      or min_distance(mut) != target_d)
            in_global_data = i >= m and j >= m
            if not caught:
                if not in_global_data:
                    structural_escapes.append((i, j))
                else:
                    genuine += 1  # passed the full exhaustive MR re-check
    assert structural_escapes == []
    assert genuine < len(H0) * len(H0[0]) // 2


def test_zeroing_a_global_row_fails_with_witness():
    base = mr_r12(3, 2)
    st = base.provenance["local_structure"]
    rows = base.H.to_lists()
    rows[-1] = [0] * base.n
    mut = LinearCode(Mat(base.gf, rows))
    rep = pmds_check(mut, st, 1, 2)
    assert not rep.verdict
    assert rep.witness is not None


def test_pmds_sampled_mode_records_seed():
    c = mr_r12(3, 2)
    st = c.provenance["local_structure"]
    rep = pmds_check(c, st, 1, 2, mode="sampled", samples=300, seed=11)
    assert rep.verdict and rep.mode == "sampled"
    assert rep.budgets["seed"] == 11 and rep.budgets["samples"] == 300


def test_mr_coset_search_degenerate_repetition():
    c = mr_r2_coset_search(6, 0, field_make(13))
    assert (c.n, c.k) == (6, 1)
    assert pmds_check(c, c.provenance["local_structure"], 1,
                      c.provenance["s"]).verdict


def test_tamo_barg_is_not_pmr_in_general():
    # locality-optimal distance does not imply the punctured-MDS property
    from lrckit.lr_codes import tamo_barg_code
    tb = tamo_barg_code(8, 4, 3, field_make(3, 2))
    st = LocalStructure(tuple(tuple(g) for g in tb.provenance["groups"]))
    rep = pmr_check(tb, st)
    assert not rep.verdict
    assert rep.witness["punctured_mds"] is False
    assert rep.witness["d_min"] == rep.witness["target"]  # distance is fine


def test_param_shapes():
    from lrckit.mr_codes import MrParams, PmrParams
    p = MrParams(r=2, delta=1, s=2, m=3)
    assert (p.n, p.k) == (9, 4)
    q = PmrParams(m=3, r=3, Delta=5)
    assert (q.n, q.k0, q.k) == (12, 9, 4)
    assert q.split == (1, 2)
    with pytest.raises(ValueError):
        MrParams(r=1, delta=1, s=2, m=1)  # k would be negative


@pytest.mark.parametrize("make", [
    lambda: mr_r12(3, 2),
    lambda: mr_rdelta2(2, 2, 2, 4),
    lambda: mr_r2_coset_search(6, 1, field_make(13)),
], ids=["r12", "rdelta2", "coset"])
def test_mr_definition_oracle_every_pattern(make):
    """Definition-level cross-check: an erasure pattern of size <= n-k is
    correctable exactly when no union of local groups is overloaded, i.e.
    sum_i max(|E n g_i| - delta, 0) <= s."""
    from itertools import combinations
    from lrckit.matrix import mat_rank
    code = make()
    st = code.provenance["local_structure"]
    s = (code.n - code.k) - st.delta * len(st.groups)
    H = code.full_rank_checks()
    groups = [set(g) for g in st.groups]
    for w in range(1, code.n - code.k + 1):
        for pattern in combinations(range(code.n), w):
            es = set(pattern)
            overload = sum(max(len(es & g) - st.delta, 0) for g in groups)
            correctable = mat_rank(H.select_columns(pattern)) == w
            assert correctable == (overload <= s), pattern
