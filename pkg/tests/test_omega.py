import pytest

from yangbaxter import (
    NotKPermutational,
    NotLeftNondegenerate,
    SymbolUnavailable,
    check_omega_identities,
    check_star_conditions,
    closed_form_T_inverse,
    closed_form_U_inverse,
    is_k_permutational,
    is_k_reductive,
    omega_eval,
)
from yangbaxter.fixtures import left_only3, lyubashenko3, projection, singleton, z3group
from yangbaxter.omega import (
    DEFAULT_ALPHABET,
    SIGMA,
    SIGMA_INV,
    TAU,
    TAU_INV,
    _WordSpace,
    action_tables,
    check_reductive_inverse_start,
)


def test_empty_tower_returns_base():
    assert omega_eval(left_only3(), (), 2, ()) == 2


def test_right_towers_separate_two_elements_of_left_only3():
    # the height-two right tower fixes both 1 and 2, so towers distinguish them
    sol = left_only3()
    assert omega_eval(sol, (TAU, TAU), 1, (0, 0)) == 1
    assert omega_eval(sol, (TAU, TAU), 2, (0, 0)) == 2
    # while identity left translations make left towers base-independent
    assert omega_eval(sol, (SIGMA, SIGMA), 1, (0, 0)) == 0
    assert omega_eval(sol, (SIGMA, SIGMA), 2, (0, 0)) == 0


def test_group_translation_tower_returns_base():
    assert omega_eval(z3group(), (SIGMA, SIGMA), 2, (0, 0)) == 2


def test_word_argument_lengths_must_match():
    with pytest.raises(ValueError):
        omega_eval(singleton(), (SIGMA,), 0, ())


def test_symbol_unavailable_on_degenerate_side():
    with pytest.raises(SymbolUnavailable):
        omega_eval(left_only3(), (TAU_INV,), 0, (0,))
    with pytest.raises(SymbolUnavailable):
        action_tables(left_only3(), ("sigma_hat",))


def test_word_space_indexing_matches_iteration():
    space = _WordSpace((SIGMA, TAU), 3)
    assert len(space) == 8
    assert list(space) == [space[i] for i in range(8)]


def test_k_permutational_examples():
    ok, witness = is_k_permutational(lyubashenko3(), 1)
    assert ok and witness is None
    ok, _ = is_k_permutational(singleton(), 0)
    assert ok
    for k in range(4):
        ok, _ = is_k_permutational(singleton(), k, ("sigma", "sigma_inv", "tau", "tau_inv"))
        assert ok


def test_left_only3_never_permutational():
    sol = left_only3()
    for k in (1, 2, 3):
        ok, witness = is_k_permutational(sol, k)
        assert not ok
        word, x, y, zs = witness
        # the witness replays, and only right translations can separate bases
        assert omega_eval(sol, word, x, zs) != omega_eval(sol, word, y, zs)
        assert TAU in word


def test_k_reductive_examples():
    ok, _ = is_k_reductive(projection(2), 1)
    assert ok

    sol = lyubashenko3()
    ok, witness = is_k_reductive(sol, 1)
    assert not ok
    word, x, zs = witness
    assert omega_eval(sol, word, x, zs) != zs[0]
    ok, _ = is_k_reductive(sol, 2)
    assert ok

    for k in (1, 2, 3, 4):
        ok, _ = is_k_reductive(z3group(), k)
        assert not ok


def test_one_reductive_solutions_are_square_free():
    sol = projection(3)
    ok, _ = is_k_reductive(sol, 1)
    assert ok
    assert all(sol.r(x, x) == (x, x) for x in range(3))


def test_star_conditions():
    ok, sfix, tfix = check_star_conditions(projection(2))
    assert ok and sfix == (0, 1) and tfix == (0, 1)

    ok, sfix, tfix = check_star_conditions(lyubashenko3())
    assert not ok
    assert sfix == (None, None, None) and tfix == (None, None, None)

    ok, sfix, tfix = check_star_conditions(left_only3())
    assert not ok
    assert all(w is not None for w in sfix)
    assert tfix[0] is None and tfix[1] is None and tfix[2] is not None


def test_closed_form_u_inverse_lyubashenko():
    table = closed_form_U_inverse(lyubashenko3(), 1)
    assert table == (1, 2, 0)


def test_closed_form_on_projection():
    assert closed_form_U_inverse(projection(2), 1) == (0, 1)
    assert closed_form_U_inverse(projection(2), 1, reductive=True) == (0, 1)
    assert closed_form_T_inverse(projection(2), 1) == (0, 1)


def test_closed_form_errors():
    with pytest.raises(NotKPermutational):
        closed_form_U_inverse(z3group(), 2)
    from yangbaxter import FiniteSolution

    right_only = FiniteSolution(((0, 0), (0, 0)), ((0, 1), (0, 1)))
    with pytest.raises(NotLeftNondegenerate):
        closed_form_U_inverse(right_only, 1)


def test_omega_identities_on_fixtures():
    for sol in (lyubashenko3(), projection(2), left_only3(), z3group()):
        report = check_omega_identities(sol, 3)
        for name, result in report.items():
            if isinstance(result, dict):
                assert result["failures"] == [], (name, result)


def test_omega_identities_report_permutational_bound():
    report = check_omega_identities(lyubashenko3(), 3)
    assert report["permutational_level_bound"] == 1
    report = check_omega_identities(z3group(), 3)
    assert report["permutational_level_bound"] is None


def test_reductive_inverse_start_identity():
    # lyubashenko3 is 2-reductive, so the inverse-start variant must hold at 2
    assert check_reductive_inverse_start(lyubashenko3(), 2) == []
    assert check_reductive_inverse_start(projection(2), 1) == []


def test_default_alphabet_is_sigma_tau():
    assert DEFAULT_ALPHABET == (SIGMA, TAU)
    assert SIGMA_INV == "sigma_inv"
