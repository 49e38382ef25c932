import pytest

from radixeconomy import DomainError, TreeSpec, capacity, depth_for


def loop_capacity(m, d):
    total = 0
    for k in range(1, d + 1):
        total += m ** k
    return total


@pytest.mark.parametrize("m, d, include_root, expected", [
    (3, 3, False, 39),
    (3, 3, True, 40),
    (2, 0, True, 1),
    (2, 0, False, 0),
])
def test_capacity_examples(m, d, include_root, expected):
    assert capacity(TreeSpec(m, d), include_root=include_root) == expected


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("d", range(0, 13))
def test_closed_form_matches_loop(m, d):
    spec = TreeSpec(m, d)
    assert capacity(spec) == loop_capacity(m, d)
    assert capacity(spec, include_root=True) == 1 + loop_capacity(m, d)
    assert capacity(spec, include_root=True) * (m - 1) == m ** (d + 1) - 1


@pytest.mark.parametrize("total, m, expected", [(40, 3, 3), (1, 3, 0), (1, 2, 0), (41, 3, 4)])
def test_depth_for_examples(total, m, expected):
    assert depth_for(total, m) == expected


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("d", range(0, 13))
def test_depth_inverts_capacity(m, d):
    packed = capacity(TreeSpec(m, d), include_root=True)
    assert depth_for(packed, m) == d
    assert depth_for(packed + 1, m) == d + 1


def test_depth_for_is_minimal_sufficient():
    for m in range(2, 6):
        for total in range(1, 500):
            d = depth_for(total, m)
            assert loop_capacity(m, d) + 1 >= total
            if d > 0:
                assert loop_capacity(m, d - 1) + 1 < total


@pytest.mark.parametrize("m, d", [(1, 3), (0, 0), (3, -1)])
def test_tree_spec_invariants(m, d):
    with pytest.raises(DomainError):
        TreeSpec(m, d)


def test_depth_for_domain():
    with pytest.raises(DomainError):
        depth_for(0, 3)
    with pytest.raises(DomainError):
        depth_for(10, 1)
