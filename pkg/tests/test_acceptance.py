"""Acceptance gate: every top-level claim at its stated tolerance.

Each criterion prints one PASS/FAIL line (visible under ``pytest -s``); the
asserts carry the full report text on failure.  Criteria 1 and 4 also pin
their runtime budgets, and criterion 10 re-runs everything twice to check
seed determinism and the total-runtime budget.
"""

import time

import pytest

from spreadlab.monoid import decompose_semidirect, psi, theta
from spreadlab.suites import RunConfig, SUITES, run_suites

SEED = 20230526


def _verdict(number: int, text: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {text}")


def _run(model: str, suite: str, **overrides) -> "SuiteReport":
    config = RunConfig(model=model, suites=(suite,), seed=SEED, **overrides)
    return run_suites(config)[0]


@pytest.fixture(scope="module")
def monotone_simplex_report():
    return _run("monotone", "simplex")


@pytest.fixture(scope="module")
def q_reports():
    return {name: _run("qdeformed", name) for name in SUITES["qdeformed"]}


def test_criterion_01_monoid_oracle_equivalence():
    report = _run("monoid", "compose-oracle", samples=1000)
    ok = (
        report.passed
        and report.samples == 1000
        and report.max_deviation == 0.0
        and report.wall_time_s < 5.0
    )
    _verdict(1, "1000 random compositions agree pointwise on [-50, 50], "
                f"exact, in {report.wall_time_s:.2f}s (< 5s)", ok)
    assert ok, report.to_text()


def test_criterion_02_semidirect_realization():
    report = _run("monoid", "semidirect", samples=500)
    pivot = decompose_semidirect(psi(0)) == (-1, theta(1))
    ok = report.passed and report.samples == 500 and report.max_deviation == 0.0 and pivot
    _verdict(2, "500 random pair products realize to composition exactly; "
                "the backward shift at 0 splits as (-1, forward shift at 1)", ok)
    assert ok, report.to_text()


def test_criterion_03_localization_and_cycles():
    report = _run("monoid", "localize", samples=200)
    ok = report.passed and report.samples == 200 and report.max_deviation == 0.0
    _verdict(3, "200 random (map, interval) localizations agree exactly; "
                "interval cycles match the one-step shift", ok)
    assert ok, report.to_text()


def test_criterion_04_monotone_relations():
    report = _run("monotone", "relations", window=(0, 7), depth=4)
    ok = report.passed and report.max_deviation == 0.0 and report.wall_time_s < 30.0
    _verdict(4, "monotone relation and commutation identities exact on window "
                f"size 8, depth 4, in {report.wall_time_s:.2f}s (< 30s)", ok)
    assert ok, report.to_text()


def test_criterion_05_hamel_independence():
    report = _run("monotone", "hamel")
    sigma = report.details["sigma_min"]
    ok = report.passed and sigma > 1e-8
    _verdict(5, f"normally-ordered family smallest singular value {sigma:.3g} > 1e-8", ok)
    assert ok, report.to_text()


def test_criterion_06_monotone_simplex(monotone_simplex_report):
    report = monotone_simplex_report
    ok = (
        report.passed
        and report.max_deviation <= 1e-12
        and all(report.details["mixture_verdicts"].values())
        and report.details["counterexample_deviation"] > 1e-12
        and len(report.witnesses) > 0
    )
    _verdict(6, "mixture states invariant under spreading at 1e-12 on all "
                "normally-ordered words; one-particle vector state fails "
                "with a recorded witness", ok)
    assert ok, report.to_text()


def test_criterion_07_qdeformed(q_reports):
    inner, relations, vacuum = (
        q_reports["inner"],
        q_reports["relations"],
        q_reports["vacuum"],
    )
    ok = (
        inner.passed
        and inner.details["exact_match"]
        and inner.max_deviation <= 1e-12
        and relations.passed
        and relations.details["adjoint_deviation"] <= 1e-10
        and relations.details["commutation_deviation"] <= 1e-10
        and relations.details["gram_min_eigenvalue"] > 0
        and vacuum.passed
        and vacuum.max_deviation <= 1e-12
        and len(vacuum.witnesses) > 0
    )
    _verdict(7, "deformed inner product exact vs brute force; adjointness and "
                "commutation at 1e-10 across the q grid; Gram positive; vacuum "
                "invariant at 1e-12 with a failing vector-state witness", ok)
    assert ok, "\n".join(r.to_text() for r in (inner, relations, vacuum))


def test_criterion_08_boolean():
    relations = _run("boolean", "relations")
    morphism = _run("boolean", "morphism", samples=200)
    simplex = _run("boolean", "simplex")
    ok = (
        relations.passed
        and relations.max_deviation == 0.0
        and morphism.passed
        and morphism.samples == 200
        and morphism.max_deviation <= 1e-12
        and simplex.passed
        and simplex.max_deviation <= 1e-12
        and simplex.witnesses[0]["moved_unit_ok"]
    )
    _verdict(8, "window commutation exact; 200 random composition/endomorphism "
                "triples at 1e-12; mixture states invariant and the site vector "
                "state moved off its matrix unit", ok)
    assert ok, "\n".join(r.to_text() for r in (relations, morphism, simplex))


def test_criterion_09_car():
    relations = _run("car", "relations", window=(0, 7))
    stationary = _run("car", "stationary", window=(-20, 20))
    witness = _run("car", "witness")
    ratio = witness.details["value_ratio"]
    ok = (
        relations.passed
        and relations.max_deviation == 0.0
        and stationary.passed
        and stationary.max_deviation == 0.0
        and witness.passed
        and ratio == pytest.approx(9 / 4, rel=1e-12)
    )
    _verdict(9, "anticommutation and position relations exact on 8 sites; "
                "two-point kernel stationary on [-20, 20]; spreading witness "
                f"found with value ratio {ratio:.4f} = 9/4", ok)
    assert ok, "\n".join(r.to_text() for r in (relations, stationary, witness))


def test_criterion_10_full_suite_deterministic():
    config = RunConfig(model="all", seed=SEED)
    start = time.perf_counter()
    first = run_suites(config)
    second = run_suites(config)
    elapsed = time.perf_counter() - start
    first_json = [r.to_json(include_wall_time=False) for r in first]
    second_json = [r.to_json(include_wall_time=False) for r in second]
    identical = first_json == second_json
    all_pass = all(r.passed for r in first)
    ok = identical and all_pass and elapsed / 2 < 300.0
    _verdict(10, f"two seeded full runs byte-identical (excluding wall time); "
                 f"{elapsed / 2:.1f}s per run (< 300s)", ok)
    assert ok
