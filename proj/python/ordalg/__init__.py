"""Pseudocomplemented posets, their assigned algebras, congruences and decompositions."""

from ._ordalg import (
    Algebra,
    OrdalgError,
    Poset,
    algebra_from_json,
    algebra_text,
    assign,
    audit,
    canonical_text,
    check,
    choice_count,
    classify,
    congruence_properties,
    congruences,
    decompose,
    fixture_names,
    fixture_text,
    is_distributive,
    isomorphic,
    load_algebra,
    parse_posets,
    product,
    search,
    term_conditions,
    verify_conditions,
)


def fixture_poset(name):
    """The poset of a built-in fixture, e.g. ``fixture_poset("fig1")``."""
    return parse_posets(fixture_text(name))[0][1]


def fixture_algebra(fixture, algebra):
    """A named algebra of a built-in fixture, e.g. ``fixture_algebra("fig5", "fig5_sspc")``."""
    return load_algebra(fixture_text(fixture), algebra)


__all__ = [n for n in dir() if not n.startswith("_")]
