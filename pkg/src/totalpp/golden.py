"""Hand-written reference presentations for regression checks.

Each entry is grammar text plus a vertex map from the labels our
constructions produce to the names used here.
"""
from __future__ import annotations

from .grammar import parse_presentation

# path algebra of D4 with arms 1, 2, 3 -> 4; AR vertices numbered 4i + j
D4_GAMMA = """
quiver GammaD4 {
  vertices: 1 2 3 4 5 6 7 8 9 10 11 12;
  arrows:
    a: 1 -> 4; b: 2 -> 4; c: 3 -> 4;
    d: 4 -> 5; e: 4 -> 6; f: 4 -> 7;
    a': 5 -> 8; b': 6 -> 8; c': 7 -> 8;
    d': 8 -> 9; e': 8 -> 10; f': 8 -> 11;
    a'': 9 -> 12; b'': 10 -> 12; c'': 11 -> 12;
}
relations {
  d*a; e*b; f*c; a'*d + b'*e + c'*f;
  d'*a'; e'*b'; f'*c'; a''*d' + b''*e' + c''*f';
}
"""

D4_PSI = """
quiver PsiD4 {
  vertices: 1 2 3 4 5 6 7 8 9 10 11 12;
  arrows:
    a: 1 -> 4; b: 2 -> 4; c: 3 -> 4;
    d: 4 -> 5; e: 4 -> 6; f: 4 -> 7;
    a': 5 -> 8; b': 6 -> 8; c': 7 -> 8;
    d': 8 -> 9; e': 8 -> 10; f': 8 -> 11;
    a'': 9 -> 12; b'': 10 -> 12; c'': 11 -> 12;
    q_1: 5 -> 1; q_2: 6 -> 2; q_3: 7 -> 3; q_4: 8 -> 4;
    q_5: 9 -> 5; q_6: 10 -> 6; q_7: 11 -> 7; q_8: 12 -> 8;
}
relations {
  d*a; e*b; f*c; a'*d + b'*e + c'*f;
  d'*a'; e'*b'; f'*c'; a''*d' + b''*e' + c''*f';
  a*q_1 - q_4*a'; b*q_2 - q_4*b'; c*q_3 - q_4*c';
  d*q_4 - q_5*d'; e*q_4 - q_6*e'; f*q_4 - q_7*f';
  a'*q_5 - q_8*a''; b'*q_6 - q_8*b''; c'*q_7 - q_8*c'';
  d'*q_8; e'*q_8; f'*q_8;
}
"""

D4_VERTEX_MAP = {f"t{i}_{j}": str(4 * i + j) for i in range(3) for j in range(1, 5)}

# a 3-representation-finite algebra on eight vertices
L8_LAMBDA = """
quiver L8 {
  vertices: 1 2 3 4 5 6 7 8;
  arrows:
    a: 1 -> 2; b: 1 -> 3; c: 1 -> 4;
    d: 2 -> 5; e: 3 -> 5; f: 4 -> 5;
    g: 5 -> 6; h: 5 -> 7; i: 5 -> 8;
}
relations { d*a - e*b; d*a - f*c; g*d; h*d; g*e; i*e; h*f; i*f; }
"""

_L8_ARROWS = """
    a: P1 -> P2; b: P1 -> P3; c: P1 -> P4;
    d: P2 -> P5; e: P3 -> P5; f: P4 -> P5;
    g: P5 -> P6; h: P5 -> P7; i: P5 -> P8;
    d': P6 -> I5; e': P7 -> I5; f': P8 -> I5;
    g': I5 -> I8; h': I5 -> I7; i': I5 -> I6;
"""

_L8_GAMMA_RELS = """
  d*a - e*b; d*a - f*c; g*d; h*d; g*e; i*e; h*f; i*f;
  d'*g - e'*h; d'*g - f'*i; g'*d'; h'*d'; g'*e'; i'*e'; h'*f'; i'*f';
"""

L8_GAMMA = f"""
quiver GammaL8 {{
  vertices: P1 P2 P3 P4 P5 P6 P7 P8 I5 I8 I7 I6;
  arrows:{_L8_ARROWS}}}
relations {{{_L8_GAMMA_RELS}}}
"""

# q_k ends at P_k
L8_PSI = f"""
quiver PsiL8 {{
  vertices: P1 P2 P3 P4 P5 P6 P7 P8 I5 I8 I7 I6;
  arrows:{_L8_ARROWS}
    q_1: I5 -> P1; q_2: I8 -> P2; q_3: I7 -> P3; q_4: I6 -> P4;
}}
relations {{{_L8_GAMMA_RELS}
  a*q_1 - q_2*g'; b*q_1 - q_3*h'; c*q_1 - q_4*i';
  d*q_2; e*q_3; f*q_4;
}}
"""

L8_VERTEX_MAP = {**{f"t0_{j}": f"P{j}" for j in range(1, 9)},
                 "t1_1": "I5", "t1_2": "I8", "t1_3": "I7", "t1_4": "I6"}

# Auslander algebra of linearly oriented A3
LAMBDA_2_3 = """
quiver Lambda23 {
  vertices: 1 2 3 4 5 6;
  arrows: a: 1 -> 2; b: 2 -> 3; c: 2 -> 4; d: 3 -> 5; e: 4 -> 5; f: 5 -> 6;
}
relations { c*a; f*e; d*b - e*c; }
"""

LAMBDA_2_3_VERTEX_MAP = {"200": "1", "110": "2", "020": "3", "101": "4", "011": "5", "002": "6"}

_L33_ARROWS = """
    a: P1 -> P2; b: P2 -> I1; c: P2 -> P4; d: I1 -> I2; e: P4 -> I2; f: I2 -> I3;
    g: P4 -> S4; h: I2 -> I4; i: I3 -> I5; e': S4 -> I4; f': I4 -> I5; j: I5 -> I6;
"""

_L33_RELS = """
  c*a; d*b - e*c; g*c; h*d; f*e; h*e - e'*g; i*f - f'*h; f'*e'; j*f';
"""

LAMBDA_3_3 = f"""
quiver Lambda33 {{
  vertices: P1 P2 I1 P4 I2 I3 S4 I4 I5 I6;
  arrows:{_L33_ARROWS}}}
relations {{{_L33_RELS}}}
"""

PSI_3_3 = f"""
quiver Psi33 {{
  vertices: P1 P2 I1 P4 I2 I3 S4 I4 I5 I6;
  arrows:{_L33_ARROWS}
    q_P1: S4 -> P1; q_P2: I4 -> P2; q_P4: I5 -> P4; q_S4: I6 -> S4;
}}
relations {{{_L33_RELS}
  b*q_P2; e*q_P4; e'*q_S4;
  a*q_P1 - q_P2*e'; c*q_P2 - q_P4*f'; g*q_P4 - q_S4*j;
}}
"""

LAMBDA_3_3_VERTEX_MAP = {
    "2000": "P1", "1100": "P2", "0200": "I1", "1010": "P4", "0110": "I2",
    "0020": "I3", "1001": "S4", "0101": "I4", "0011": "I5", "0002": "I6",
}

GOLDEN = {
    "d4_gamma": (D4_GAMMA, D4_VERTEX_MAP),
    "d4_psi": (D4_PSI, D4_VERTEX_MAP),
    "l8_gamma": (L8_GAMMA, L8_VERTEX_MAP),
    "l8_psi": (L8_PSI, L8_VERTEX_MAP),
    "lambda_2_3": (LAMBDA_2_3, LAMBDA_2_3_VERTEX_MAP),
    "lambda_3_3": (LAMBDA_3_3, LAMBDA_3_3_VERTEX_MAP),
    "psi_3_3": (PSI_3_3, LAMBDA_3_3_VERTEX_MAP),
}


def load(name: str):
    text, vmap = GOLDEN[name]
    return parse_presentation(text), dict(vmap)
