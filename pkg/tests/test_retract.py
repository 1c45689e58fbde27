import pytest

from yangbaxter import (
    CompatibilityError,
    FiniteSolution,
    NotLeftNondegenerate,
    NotNondegenerate,
    check_compatibility,
    check_relation_coincidence,
    check_retract_duality,
    is_irretractable,
    is_trivial,
    mpl,
    mpl_prime,
    retract,
    retract_relation,
)
from yangbaxter.fixtures import left_only3, lyubashenko3, projection, singleton, z3group


def test_forward_relation_blocks_left_only3():
    part = retract_relation(left_only3(), "forward")
    assert part.blocks() == [(0, 1), (2,)]


def test_all_relations_single_block_on_constant_families():
    sol = lyubashenko3()
    for kind in ("forward", "inverse", "colon"):
        assert retract_relation(sol, kind).blocks() == [(0, 1, 2)]


def test_all_relations_single_block_on_projection():
    sol = projection(2)
    for kind in ("forward", "inverse", "colon"):
        assert retract_relation(sol, kind).blocks() == [(0, 1)]


def test_colon_relation_needs_left_nondegeneracy():
    # z3group is left non-degenerate, so the colon relation is defined there
    assert retract_relation(z3group(), "colon").n == 3
    right_only = FiniteSolution(((0, 0), (0, 0)), ((0, 1), (0, 1)))
    with pytest.raises(NotLeftNondegenerate):
        retract_relation(right_only, "colon")


def test_compatibility_witness_reproduces_split_blocks():
    sol = left_only3()
    part = retract_relation(sol, "forward")
    assert check_compatibility(sol, part, "sigma") is None
    w = check_compatibility(sol, part, "tau")
    assert w == (0, 0, 0, 1)
    x1, x2, y1, y2 = w
    # the two right actions land on 1 and 2, which sit in different blocks
    assert sol.tau[x1][y1] == 1
    assert sol.tau[x2][y2] == 2
    assert not part.same_block(1, 2)


def test_retract_raises_on_incompatible_relation():
    with pytest.raises(CompatibilityError) as exc:
        retract(left_only3())
    assert exc.value.op == "tau"
    assert exc.value.witness == (0, 0, 0, 1)


def test_retract_collapses_constant_families():
    res = retract(lyubashenko3())
    assert res.quotient.n == 1
    assert res.projection == (0, 0, 0)


def test_retract_of_singleton_is_itself():
    res = retract(singleton())
    assert res.quotient == singleton()
    assert res.projection == (0,)


def test_mpl_values():
    assert mpl(singleton()) == 0
    assert mpl(lyubashenko3()) == 1
    assert mpl(projection(2)) == 1
    with pytest.raises(NotNondegenerate):
        mpl(left_only3())


def test_mpl_prime_values():
    assert mpl_prime(projection(2)) == 0
    assert mpl_prime(lyubashenko3()) == 1
    assert mpl_prime(singleton()) == 0


def test_is_trivial():
    assert is_trivial(projection(3))
    assert not is_trivial(lyubashenko3())


def test_irretractable():
    assert is_irretractable(singleton())
    assert not is_irretractable(lyubashenko3())
    assert not is_irretractable(left_only3())


def test_irretractable_solutions_have_no_level():
    # found by enumeration: identity left translations, right rows three
    # distinct involutions; the forward relation is trivial, so the tower
    # stalls immediately and neither level notion applies
    sol = FiniteSolution(
        ((0, 1, 2), (0, 1, 2), (0, 1, 2)),
        ((0, 2, 1), (2, 1, 0), (1, 0, 2)),
    )
    assert is_irretractable(sol)
    assert mpl(sol) is None
    assert mpl_prime(sol) is None


def test_relation_coincidence_on_fixtures():
    for sol in (projection(2), lyubashenko3()):
        assert check_relation_coincidence(sol)["disagreements"] == []


def test_retract_duality_on_fixtures():
    for sol in (projection(2), lyubashenko3()):
        report = check_retract_duality(sol)
        assert report["mutually_inverse"] == []
        assert report["mpl_equal"] == []
