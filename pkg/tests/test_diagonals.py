import pytest

from yangbaxter import (
    NotNondegenerate,
    check_diagonal_identities,
    check_diagonal_theorems,
    diagonal_maps,
)
from yangbaxter.fixtures import derived2, left_only3, lyubashenko, lyubashenko3, projection, z3group


def test_lyubashenko_diagonals_are_inverse_cycles():
    d = diagonal_maps(lyubashenko3())
    assert d.U == (2, 0, 1)
    assert d.T == (2, 0, 1)
    assert d.U_hat == (1, 2, 0)
    assert d.T_hat == (1, 2, 0)


def test_projection_diagonals_identity():
    d = diagonal_maps(projection(2))
    identity = (0, 1)
    assert d.U == d.T == d.U_hat == d.T_hat == identity


def test_derived2_u_hat_applies_right_translation():
    d = diagonal_maps(derived2())
    assert d.U == (0, 1)
    assert d.U_hat == (1, 0)


def test_one_sided_maps_absent():
    d = diagonal_maps(left_only3())
    assert d.U == (0, 1, 2)
    assert d.U_hat == (1, 2, 2)
    assert d.T is None and d.T_hat is None

    d = diagonal_maps(z3group())
    assert d.U == (0, 0, 0)
    assert d.T is None


def test_identities_hold_on_nondegenerate_fixtures():
    for sol in (lyubashenko3(), projection(2), projection(1), derived2()):
        report = check_diagonal_identities(sol)
        assert all(not pts for pts in report.values()), report


def test_identities_require_nondegeneracy():
    with pytest.raises(NotNondegenerate):
        check_diagonal_identities(left_only3())
    with pytest.raises(NotNondegenerate):
        check_diagonal_theorems(z3group())


def test_theorems_on_commuting_cycle_pair():
    # left family a 3-cycle, right family its inverse: U and T compose to the
    # identity in both orders
    sol = lyubashenko((1, 2, 0), (2, 0, 1))
    d = diagonal_maps(sol)
    assert tuple(d.U[d.T[x]] for x in range(3)) == (0, 1, 2)
    assert tuple(d.T[d.U[x]] for x in range(3)) == (0, 1, 2)
    report = check_diagonal_theorems(sol)
    assert all(not ws for ws in report.values()), report


def test_theorems_on_projection_trivial():
    report = check_diagonal_theorems(projection(2))
    assert all(not ws for ws in report.values())


def test_theorems_on_lyubashenko3():
    report = check_diagonal_theorems(lyubashenko3())
    assert all(not ws for ws in report.values())
