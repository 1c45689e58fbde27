from yangbaxter import theorem_suite


def test_suite_n1_trivially_green():
    report = theorem_suite(1)
    assert report.ok()
    assert report.populations[1]["count"] == 1


def test_suite_n2_complete_population_green():
    report = theorem_suite(2)
    assert report.ok(), report.entries
    assert report.populations[2] == {"filter": "none", "count": 43}
    # every battery entry actually ran
    for name in (
        "braid_routes_agree",
        "nondegenerate_is_bijective",
        "diagonal_inverse_pairs",
        "diagonals_commute",
        "retract_relations_coincide",
        "retract_duality",
        "multipermutation_level_tower_equivalences",
        "reductivity_descends_to_retract",
        "reductivity_pins_mpl_prime",
        "orbits_of_reductive_are_permutational",
        "qcycle_round_trip",
        "omega_rewriting_identities",
    ):
        assert report.entries[name]["checked"] > 0, name
        assert report.entries[name]["failures"] == [], name


def test_suite_records_open_question_observations():
    report = theorem_suite(2)
    obs = report.observations["colon_quotient_rows_invertible"]
    assert obs["yes"] + obs["no"] > 0
    # nobody has an example where forward and inverse relations differ; the
    # suite looks for one and records what it finds without asserting
    assert "forward_vs_inverse_relation" not in report.observations or isinstance(
        report.observations["forward_vs_inverse_relation"], list
    )


def test_suite_deterministic():
    a = theorem_suite(2, seed=7)
    b = theorem_suite(2, seed=7)
    assert a.entries == b.entries
    assert a.populations == b.populations
