"""Seeded sampling: determinism, validity, and atlas file integrity."""

import json
import random

import pytest

from artifact.algebra import identity_suite
from artifact.corpus import (a5_leibniz, abelian, dual_numbers,
                             generate_atlas, heisenberg, m2_rationals,
                             sample_action, sample_algebra, sl2)
from artifact.existence import actor_pipeline
from artifact.fields import GF, QQ


CASES = [(GF(5), 2, "leibniz"), (GF(5), 3, "leibniz"),
         (GF(3), 2, "associative"), (GF(5), 3, "associative"),
         (QQ, 3, "lie"), (GF(7), 3, "commutative"),
         (GF(3), 2, "module"), (QQ, 2, "raw")]


@pytest.mark.parametrize("field,dim,category", CASES,
                         ids=[f"{c}-d{d}-char{f.char}" for f, d, c in CASES])
def test_samples_satisfy_their_identity_suite(field, dim, category):
    for seed in range(6):
        a = sample_algebra(random.Random(seed), field, dim, category)
        assert a.dim == dim and a.category == category
        rep = identity_suite(a)
        assert rep.passed, f"seed {seed}: {rep.label}"


def test_same_seed_same_algebra_and_different_seeds_vary():
    a = sample_algebra(random.Random(11), GF(5), 3, "leibniz")
    b = sample_algebra(random.Random(11), GF(5), 3, "leibniz")
    assert a.tensor == b.tensor
    drawn = {sample_algebra(random.Random(s), GF(5), 3, "leibniz").tensor
             for s in range(12)}
    assert len(drawn) > 1


def test_both_existence_outcomes_appear_in_leibniz_corpus():
    verdicts = {actor_pipeline(sample_algebra(random.Random(s), GF(5), 2, "leibniz")).status
                for s in range(40)}
    assert verdicts == {"exists", "not-exists"}


def test_sample_action_is_deterministic_and_well_shaped():
    a = sample_algebra(random.Random(4), GF(3), 2, "associative")
    b = sample_algebra(random.Random(5), GF(3), 2, "associative")
    act1 = sample_action(random.Random(9), b, a)
    act2 = sample_action(random.Random(9), b, a)
    assert act1.left == act2.left and act1.right == act2.right
    assert len(act1.left) == b.dim and len(act1.left[0]) == a.dim
    assert len(act1.right) == a.dim and len(act1.right[0]) == b.dim


def test_fixture_algebras_pass_their_suites():
    for a in (sl2(), heisenberg(), abelian(QQ, 3), a5_leibniz(GF(5)),
              m2_rationals(), dual_numbers(QQ)):
        assert identity_suite(a).passed, a.category


def test_atlas_file_counts_and_determinism(tmp_path):
    p1, p2 = tmp_path / "a1.jsonl", tmp_path / "a2.jsonl"
    s1 = generate_atlas(GF(5), 2, "leibniz", samples=25, seed=3, out_path=p1)
    generate_atlas(GF(5), 2, "leibniz", samples=25, seed=3, out_path=p2)
    assert p1.read_bytes() == p2.read_bytes()
    lines = [json.loads(line) for line in p1.read_text().splitlines()]
    records, summary = lines[:-1], lines[-1]
    assert len(records) == 25
    assert all("verdict" in r and "algebra" in r for r in records)
    counts = summary["counts"]
    assert sum(counts.values()) == 25 and counts.get("error", 0) == 0
    assert s1["counts"] == counts
    assert {r["verdict"]["status"] for r in records} == {"exists", "not-exists"}
