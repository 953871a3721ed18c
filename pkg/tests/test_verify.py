import json

import pytest

from nkoszul import verify
from nkoszul.docio import dump_report


SMALL = {
    "dual_agreement": {"trials": 8},
    "functor_oracle": {"trials": 12},
    "torsion_classes": {"trials": 10},
    "torsion_transport": {"trials": 9},
    "contraction": {"trials": 4},
    "equivalence": {"trials": 3, "controls": 3},
    "even_presentation": {"trials": 8},
    "dual_equivalence": {"trials": 4, "duality_trials": 4},
    "koszulity": {"bound": 4},
    "dimensions": {},
}


@pytest.mark.parametrize("name", sorted(SMALL))
def test_suite_passes_small_scale(name):
    rep = verify.run_suite(name, seed=0, **SMALL[name])
    assert rep["passed"], rep["failures"][:2]
    assert rep["suite"] == name
    assert rep["seed"] == 0


def test_mutated_functor_suite_fails():
    rep = verify.run_suite("functor_oracle", trials=30, seed=0, mutate=True)
    assert not rep["passed"]
    assert rep["failures"][0]["trial"] < 30


def test_reports_are_byte_identical():
    a = verify.run_suite("dual_agreement", trials=6, seed=3)
    b = verify.run_suite("dual_agreement", trials=6, seed=3)
    assert dump_report(a) == dump_report(b)
    c = verify.run_suite("dual_agreement", trials=6, seed=4)
    assert dump_report(a) != dump_report(c)


def test_reports_are_json_serializable():
    rep = verify.run_suite("torsion_transport", trials=3, seed=1)
    parsed = json.loads(dump_report(rep))
    assert parsed["suite"] == "torsion_transport"
    assert set(parsed) == {"suite", "seed", "trials", "passed",
                           "failures", "counts", "tables"}


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.run_suite("nope")
