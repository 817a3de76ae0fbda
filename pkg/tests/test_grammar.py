import json

import pytest
from hypothesis import given, settings, strategies as st

from totalpp.exactla import QQ, PrimeField
from totalpp.families import lambda_dn, pi_dn, psi_dn
from totalpp.golden import GOLDEN, L8_LAMBDA
from totalpp.grammar import (GrammarError, parse_presentation, presentation_to_dot, presentation_to_json,
                             render_presentation)
from totalpp.preprojective import pi_combinatorial
from totalpp.presentation import quotient_algebra


def test_eight_vertex_example_parses():
    p = parse_presentation(L8_LAMBDA)
    assert p.quiver.num_vertices == 8
    assert p.quiver.num_arrows == 9
    assert len(p.relations) == 8


def test_coefficients_and_comments():
    p = parse_presentation("""
    # a square
    quiver S { vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 2 -> 4; c: 1 -> 3; d: 3 -> 4; }
    relations { b*a - 2/3*d*c; }
    """)
    (r,) = p.relations
    assert sorted(str(c) for c in r.terms.values()) == ["-2/3", "1"]


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_round_trip_golden(name):
    p = parse_presentation(GOLDEN[name][0])
    assert parse_presentation(render_presentation(p)) == p


@settings(max_examples=10, deadline=None)
@given(st.sampled_from([(1, 2), (1, 3), (2, 3), (3, 3)]), st.sampled_from(["pi", "lambda", "psi"]))
def test_round_trip_families(dn, which):
    build = {"pi": pi_dn, "lambda": lambda_dn, "psi": psi_dn}[which]
    p = build(*dn)
    again = parse_presentation(render_presentation(p))
    assert again == p
    assert quotient_algebra(again).dim == quotient_algebra(p).dim


def test_round_trip_preprojective_relations():
    p = pi_combinatorial("D4").presentation
    assert parse_presentation(render_presentation(p)) == p


def test_prime_field_coefficients():
    text = "quiver S { vertices: 1 2 3 4; arrows: a: 1 -> 2; b: 2 -> 4; c: 1 -> 3; d: 3 -> 4; }\n" \
           "relations { b*a + 4*d*c; }"
    p = parse_presentation(text, PrimeField(5))
    assert sorted(c.v for c in p.relations[0].terms.values()) == [1, 4]


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("quiver Q { vertices: 1 2; arrows: a: 1 -> 3; }", 1),
    ("quiver Q { vertices: 1 2;\n arrows: a: 1 => 2; }", 2),
    ("quiver Q { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; }\nrelations { a*b; }", 2),
    ("quiver Q { vertices: 1 2 3; arrows: a: 1 -> 2; b: 2 -> 3; }\nrelations { b*a", 2),
])
def test_errors_carry_positions(text, line):
    with pytest.raises(GrammarError) as err:
        parse_presentation(text)
    assert err.value.line == line
    assert err.value.col >= 1


def test_json_and_dot_exports():
    p = parse_presentation(L8_LAMBDA)
    js = presentation_to_json(p)
    assert json.loads(json.dumps(js)) == js
    assert js["field"] == QQ.name and len(js["relations"]) == 8
    dot = presentation_to_dot(p)
    assert dot.startswith("digraph") and "relations" in dot
