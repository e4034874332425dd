# Copyright (c) 2026, the cplaus authors
#
# SPDX-License-Identifier: MIT
"""Smoke tests for the python bindings and the CLI json surface."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import cplaus

EXAMPLE_MODEL = {
    "worlds": 3,
    "neighbourhoods": [[[1], [2]], [], []],
    "valuation": {"p": [2], "q": [1]},
}


def test_render_round_trip():
    assert cplaus.render("(p <= q) | (q <= p)", resugar=True) == "(p <= q) | (q <= p)"
    assert cplaus.render("top") == "bot -> bot"
    assert cplaus.complexity("p <= q") == 3
    assert set(cplaus.subformulas("p <= q")) == {"p", "q", "p <= q"}
    assert cplaus.atoms("(p <= q) | (q <= p)") == ["p", "q"]


def test_registry():
    assert "nna" in cplaus.calculus_logics()
    assert "nu" in cplaus.logics()
    assert cplaus.frame_conditions("nt") == ["non-emptiness", "T"]
    assert cplaus.render("~(bot <= top)") in cplaus.axiom_corpus("nn", ["p"])


def test_prove_example_refutation():
    r = cplaus.prove("(p <= q) | (q <= p)", logic="n", calculus="h")
    assert r["status"] == "refuted"
    assert r["countermodel"]["ok"] is True
    assert r["countermodel"]["model"] == EXAMPLE_MODEL


def test_prove_both_calculi_agree():
    for formula in ["p -> p", "(p <= q) & (q <= r) -> (p <= r)"]:
        for calculus in ["g", "h"]:
            assert cplaus.prove(formula, logic="n", calculus=calculus)["status"] == "proved"
    assert cplaus.prove("(bot <= p) -> ~p", logic="nt", calculus="g")["status"] == "proved"
    assert cplaus.prove("(bot <= p) -> ~p", logic="n", calculus="g")["status"] == "fail"


def test_prove_rejects_semantic_only_logic():
    with pytest.raises(ValueError):
        cplaus.prove("p -> p", logic="nu")


def test_check_model():
    assert cplaus.check_model(json.dumps(EXAMPLE_MODEL), "p <= q") == [False, True, True]


def test_oracle():
    r = cplaus.oracle("(p <= q) | (q <= p)", logic="n", max_worlds=2)
    assert r["status"] == "found"
    r = cplaus.oracle("bot -> bot", logic="n", max_worlds=2)
    assert r["status"] == "not-found-up-to-bound"


# ---------------------------------------------------------------------------
# CLI json outputs validate against the shipped schemas.

CLI = os.environ.get("CPLAUS_CLI")
SCHEMAS = pathlib.Path(os.environ.get("CPLAUS_SCHEMAS", "schemas"))


def validate(instance, schema_name):
    schema_path = SCHEMAS / schema_name
    schema = json.loads(schema_path.read_text())
    resolver = jsonschema.RefResolver(base_uri=schema_path.as_uri(), referrer=schema)
    jsonschema.validate(instance, schema, resolver=resolver)


@pytest.mark.skipif(CLI is None, reason="CPLAUS_CLI not set")
def test_cli_prove_schema(tmp_path):
    out = subprocess.run(
        [CLI, "prove", "--logic", "n", "--calculus", "h", "--format", "json",
         "(p <= q) | (q <= p)", "p -> p"],
        capture_output=True, text=True)
    assert out.returncode == 1
    doc = json.loads(out.stdout)
    validate(doc, "prove-result.schema.json")
    assert [r["status"] for r in doc] == ["refuted", "proved"]


@pytest.mark.skipif(CLI is None, reason="CPLAUS_CLI not set")
def test_cli_check_and_oracle_schema(tmp_path):
    model_file = tmp_path / "model.json"
    model_file.write_text(json.dumps(EXAMPLE_MODEL))
    out = subprocess.run(
        [CLI, "check", "--model", str(model_file), "--format", "json", "p <= q"],
        capture_output=True, text=True)
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    validate(doc, "check-result.schema.json")
    assert doc[0]["perWorld"] == [False, True, True]

    out = subprocess.run(
        [CLI, "oracle", "--logic", "n", "--max-worlds", "2", "--format", "json",
         "(p <= q) | (q <= p)", "bot -> bot"],
        capture_output=True, text=True)
    doc = json.loads(out.stdout)
    validate(doc, "oracle-result.schema.json")
    assert doc[0]["status"] == "found"
    validate(doc[0]["model"], "model.schema.json")
    assert doc[1]["status"] == "not-found-up-to-bound"


@pytest.mark.skipif(CLI is None, reason="CPLAUS_CLI not set")
def test_cli_exit_codes(tmp_path):
    proved = subprocess.run([CLI, "prove", "--logic", "n", "--calculus", "h", "p -> p"],
                            capture_output=True, text=True)
    assert proved.returncode == 0
    refuted = subprocess.run([CLI, "prove", "--logic", "n", "--calculus", "g", "~(bot <= top)"],
                             capture_output=True, text=True)
    assert refuted.returncode == 1
    bad = subprocess.run([CLI, "prove", "--logic", "n", "p <= q <= r"],
                         capture_output=True, text=True)
    assert bad.returncode == 2
    budget = subprocess.run([CLI, "prove", "--logic", "nw", "--calculus", "g", "--budget", "2",
                             "(p <= q) | (q <= p)"], capture_output=True, text=True)
    assert budget.returncode == 3


@pytest.mark.skipif(CLI is None, reason="CPLAUS_CLI not set")
def test_cli_formula_file(tmp_path):
    batch = tmp_path / "formulas.txt"
    batch.write_text("# axioms of the base logic\np -> p\n(p <= q) & (q <= r) -> (p <= r)\n")
    out = subprocess.run([CLI, "prove", "--logic", "n", "--calculus", "h", "--file", str(batch)],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.count("derivable") == 2
