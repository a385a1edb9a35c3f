"""Shared fixtures: canonical words and the bracket-oracle corpus."""

import pytest

from braidvol.words import parse_braid, cyclically_reduce_into_syllables


def word_of(text, n=None):
    return cyclically_reduce_into_syllables(parse_braid(text, n))


def ladder(m):
    """The alternating family word (s1^-3 s2^-3)^m."""
    return word_of("s1^-3 s2^-3 " * m, 3)


# Fixed mixed-provenance corpus for the bracket/state cross-checks: every
# word is A-adequate with at most 18 crossings, and positive, negative, and
# mixed-sign words are all represented.
ORACLE_CORPUS = (
    # positive
    (2, "s1"),
    (2, "s1^3"),
    (2, "s1^5"),
    (2, "s1^7"),
    (3, "s1 s2 s1 s2"),
    (3, "s1^2 s2^2"),
    (3, "s1^3 s2^3"),
    (3, "s1^2 s2^3 s1^2 s2^3"),
    (3, "s1^4 s2^4"),
    (4, "s1^2 s2^2 s3^2"),
    (4, "s1^3 s2^2 s3^3"),
    (4, "s1 s2 s3 s1 s2 s3"),
    (3, "s1^2 s2^3 s1 s2^4"),
    (3, "s1^3 s2^4 s1^3 s2^4"),
    # negative
    (2, "s1^-3"),
    (2, "s1^-5"),
    (2, "s1^-8"),
    (2, "s1^-12"),
    (3, "s1^-3 s2^-3"),
    (3, "s1^-4 s2^-4"),
    (3, "s1^-3 s2^-4"),
    (3, "s1^-3 s2^-3 s1^-3 s2^-3"),
    (3, "s1^-5 s2^-3"),
    (3, "s1^-3 s2^-3 s1^-4 s2^-4"),
    (3, "s1^-6 s2^-6"),
    (4, "s1^-3 s2^-3 s3^-3"),
    (4, "s1^-4 s2^-3 s3^-4"),
    (4, "s1^-3 s2^-4 s3^-3 s2^-3"),
    (4, "s1^-2 s2^-2 s3^-2"),
    (5, "s1^-3 s2^-3 s3^-3 s4^-3"),
    # mixed
    (3, "s1^3 s2^-3"),
    (3, "s1^2 s2^-4"),
    (3, "s1^3 s2^-3 s1^2 s2^-4"),
    (3, "s2^3 s1^-3 s2^-4 s1^-3"),
    (3, "s1^4 s2^-5"),
    (3, "s1^2 s2^-3 s1^3 s2^-3"),
    (3, "s1^-3 s2^3 s1^-4 s2^4"),
    (3, "s1^5 s2^-5"),
    (3, "s1^2 s2^-5 s1^2 s2^-5"),
    (3, "s1 s2^-4"),
    (3, "s1^6 s2^-3"),
    (4, "s2^2 s1^-3 s3^-3 s2^-4 s1^-3 s3^-2"),
    (4, "s1^3 s2^-3 s3^3"),
    (4, "s1^-3 s2^3 s3^-3"),
    (4, "s1^2 s2^-4 s3^2"),
    (4, "s2 s1^-3 s3^-3 s2^-3 s1^-3 s3^-3"),
)


@pytest.fixture(scope="session")
def oracle_corpus():
    return [word_of(text, n) for n, text in ORACLE_CORPUS]
