"""The analyze/verify pipeline: schema stability and identity checks."""

import json

import pytest

from braidvol.errors import CrossingLimitError, PreconditionError
from braidvol.report import SCHEMA, analyze, verify
from braidvol.words import SyllableWord

from conftest import ladder, word_of

REPORT_KEYS = [
    "schema",
    "word",
    "n",
    "syllables",
    "crossings",
    "twist",
    "circles",
    "m",
    "adequate",
    "telc",
    "connected",
    "neg_chi",
    "main_lemma",
    "stoimenow",
    "bounds",
    "jones_bounds",
    "s_bounds",
    "schreier",
    "turaev",
    "bracket",
]


def test_schema_tag():
    assert SCHEMA == "braidvol/1"
    assert analyze(ladder(1))["schema"] == SCHEMA


def test_report_key_set_is_frozen():
    # absent analyses are null, never missing keys: the key list is the schema
    for word in (ladder(2), word_of("s1^-2 s2^-3"), SyllableWord(4, ())):
        report = analyze(word)
        assert list(report.keys()) == REPORT_KEYS


def test_report_serializes_to_json():
    report = analyze(ladder(2), bracket=True)
    assert json.loads(json.dumps(report)) == report


def test_full_pipeline_on_family_word():
    report = analyze(ladder(2), bracket=True)
    assert report["word"] == "s1^-3 s2^-3 s1^-3 s2^-3"
    assert report["twist"] == {"t": 4, "t_plus": 0, "t_minus": 4}
    assert report["neg_chi"] == 3
    assert report["adequate"] and report["telc"] and report["connected"]
    assert report["main_lemma"]["pass"] is True
    assert report["stoimenow"] is True
    assert report["schreier"]["k"] == -2
    assert report["schreier"]["s"] == 4
    assert report["schreier"]["hyperbolic"] is True
    assert report["s_bounds"]["sharper"] == "Schreier3"
    assert report["s_bounds"]["schreier3"]["inputs"]["s"] == 4
    assert report["turaev"] == {"k": -2, "lower": 1, "upper": 2}
    assert report["bounds"]["case"] == "N3"
    assert report["jones_bounds"]["inputs"]["beta_prime"] == 4
    assert report["bracket"]["penultimate_abs"] == 4
    assert report["bracket"]["top_coefficient"] == 1


def test_gate_failure_nulls_the_bound_blocks():
    report = analyze(word_of("s1^-2 s2^-3"))
    assert report["main_lemma"]["pass"] is False
    assert report["bounds"] is None
    assert report["jones_bounds"] is None
    assert report["s_bounds"] is None
    # schreier still runs on any 3-braid
    assert report["schreier"] is not None


def test_wide_words_null_the_three_strand_blocks():
    w = SyllableWord(4, ((2, 2), (1, -3), (3, -3), (2, -4), (1, -3), (3, -4)))
    report = analyze(w)
    assert report["stoimenow"] is None
    assert report["schreier"] is None
    assert report["s_bounds"] is None
    assert report["turaev"] is None
    assert report["bounds"]["case"] == "N4General"
    assert report["jones_bounds"] is None  # interior positives are refused


def test_bracket_block_is_opt_in():
    assert analyze(ladder(1))["bracket"] is None
    report = analyze(ladder(1), bracket=True)
    assert report["bracket"]["crossings"] == 6
    assert report["bracket"]["penultimate_abs"] == 2
    with pytest.raises(CrossingLimitError):
        analyze(ladder(2), bracket=True, max_crossings=10)
    assert analyze(ladder(2), bracket=True, max_crossings=12)["bracket"]


def test_bracket_block_skipped_when_inadequate():
    w = word_of("s1^-1 s2^-3")
    report = analyze(w, bracket=True)
    assert report["adequate"] is False
    assert report["bracket"] is None


def test_assume_prime_unlocks_generic_bounds():
    w = word_of("s1^-3 s2^-3")  # fails the twist minimum, direct checks hold
    assert analyze(w)["bounds"] is None
    report = analyze(w, assume_prime=True)
    assert report["main_lemma"]["pass"] is False
    assert report["bounds"]["case"] == "Cor"
    # words failing the direct checks stay null even with the flag
    inadequate = word_of("s1^-1 s2^-3")
    assert analyze(inadequate, assume_prime=True)["bounds"] is None


def test_verify_runs_all_checks_on_three_strands():
    result = verify(ladder(2))
    assert result.passed is True
    assert [c.name for c in result.checks] == [
        "adequate",
        "telc",
        "connected",
        "no_unclassified",
        "small_count",
        "medium_count",
        "strand_budget",
        "circle_count",
        "one_wanderer",
        "k_direct",
        "s_direct",
        "bracket_oracle",
    ]
    assert all(c.passed for c in result.checks)


def test_verify_on_wide_word_drops_three_strand_checks():
    w = SyllableWord(4, ((2, 2), (1, -3), (3, -3), (2, -4), (1, -3), (3, -4)))
    result = verify(w)
    names = [c.name for c in result.checks]
    assert "one_wanderer" not in names
    assert "k_direct" not in names
    assert result.passed is True


def test_verify_skips_bracket_above_the_cap():
    result = verify(ladder(4))  # 24 crossings > default cap
    assert "bracket_oracle" not in [c.name for c in result.checks]
    assert result.passed is True
    trimmed = verify(ladder(2), max_crossings=10)  # cap below 12 crossings
    assert "bracket_oracle" not in [c.name for c in trimmed.checks]


def test_verify_rejects_non_family_words():
    with pytest.raises(PreconditionError):
        verify(word_of("s1^-2 s2^-3"))


def test_verify_result_serializes():
    result = verify(ladder(2))
    d = result.to_json_dict()
    assert d["pass"] is True
    assert d["word"] == "s1^-3 s2^-3 s1^-3 s2^-3"
    assert all(set(c) == {"name", "pass", "detail"} for c in d["checks"])
    json.dumps(d)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
