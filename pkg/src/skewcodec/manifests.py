"""Built-in reproduction manifests.

Generator polynomials are stored exactly as typeset, in the compact ascending
notation (``\\omega^7\\omega^31`` is w^7 + w^3 x + x^2) or as LaTeX sums for the
longer worked polynomials.  ``parse_compact`` and ``latex_to_text`` turn them
into the literals accepted by :func:`skewcodec.skewpoly.parse_poly`.

Moduli that are not typeset alongside a table were recovered as the Conway
polynomial of the field together with the Frobenius power under which every
typeset generator of that field right-divides its x^n - 1.
"""

from __future__ import annotations

import re

from .errors import ParseError

# ascending coefficients c_0..c_m; "i" is the Frobenius power
FIELDS = {
    "F9": {"p": 3, "m": 2, "modulus": [2, 2, 1], "frobenius_power": 1},
    "F25": {"p": 5, "m": 2, "modulus": [2, 4, 1], "frobenius_power": 1},
    "F27": {"p": 3, "m": 3, "modulus": [1, 2, 0, 1], "frobenius_power": 1},
    "F49": {"p": 7, "m": 2, "modulus": [3, 6, 1], "frobenius_power": 1},
    "F81": {"p": 3, "m": 4, "modulus": [2, 0, 0, 2, 1], "frobenius_power": 1},
    "F121": {"p": 11, "m": 2, "modulus": [2, 7, 1], "frobenius_power": 1},
    "F125": {"p": 5, "m": 3, "modulus": [3, 3, 0, 1], "frobenius_power": 1},
    "F169": {"p": 13, "m": 2, "modulus": [2, 12, 1], "frobenius_power": 1},
    "F343": {"p": 7, "m": 3, "modulus": [4, 0, 6, 1], "frobenius_power": 1},
    "F625": {"p": 5, "m": 4, "modulus": [2, 4, 4, 0, 1], "frobenius_power": 1},
    "F3125": {"p": 5, "m": 5, "modulus": [3, 4, 0, 0, 0, 1], "frobenius_power": 3},
    "F16807": {"p": 7, "m": 5, "modulus": [4, 1, 0, 0, 0, 1], "frobenius_power": 1},
    # used only by the alternative reading of one F_16807 row; the first modulus in
    # enumeration order under which that reading is dual-containing with d = 3
    "F16807-alt": {"p": 7, "m": 5, "modulus": [4, 2, 2, 0, 0, 1], "frobenius_power": 1},
}


def parse_compact(s: str) -> list[str]:
    """Split a compact coefficient string into field literals, lowest degree first.

    ``\\omega^7`` takes one exponent character, ``\\omega^{17}`` a braced one,
    a bare digit is a prime-field element, ``(11)`` is a multi-digit integer,
    and ``~`` or spaces only separate.
    """
    t = s.replace("\\omega", "w").replace("ω", "w").replace("~", " ").replace("$", "")
    out: list[str] = []
    i = 0
    while i < len(t):
        c = t[i]
        if c.isspace():
            i += 1
        elif c == "w":
            i += 1
            if i < len(t) and t[i] == "^":
                i += 1
                if i < len(t) and t[i] == "{":
                    j = t.index("}", i)
                    out.append("w^" + t[i + 1 : j])
                    i = j + 1
                elif i < len(t):
                    out.append("w^" + t[i])
                    i += 1
                else:
                    raise ParseError(f"dangling exponent in {s!r}", i)
            else:
                out.append("w")
        elif c.isdigit():
            out.append(c)
            i += 1
        elif c == "(":
            j = t.index(")", i)
            out.append(t[i + 1 : j].strip())
            i = j + 1
        else:
            raise ParseError(f"unexpected {c!r} in {s!r}", i)
    return out


def latex_to_text(s: str) -> str:
    """``\\omega^{16}x^6 + 2x`` -> ``w^16x^6 + 2x`` (parse_poly syntax)."""
    t = re.sub(r"\\hspace\{[^}]*\}", " ", s)
    t = t.replace("\\\\", " ").replace("&", " ").replace("\\omega", "w").replace("ω", "w")
    t = t.replace("{", "").replace("}", "")
    t = re.sub(r"\s+", " ", t).strip()
    return re.sub(r"w\s*\^\s*", "w^", t)


# Theta-cyclic codes over R: (s, t1, t2, t3, t4, printed [n, k, d])
TABLE1 = [
    (4, r"\omega^7\omega^31", "11", r"\omega^51", r"\omega", (16, 12, 4)),
    (6, r"\omega^2\omega1", "11", r"\omega^61", "1", (24, 20, 3)),
    (6, r"2\omega^5\omega^31", r"\omega^21", "21", r"\omega", (24, 19, 4)),
    (8, r"\omega^7\omega^6\omega 1", r"\omega^6\omega^31\omega^6\omega^71", r"\omega^701", r"\omega^321", (32, 19, 8)),
    (8, r"\omega^7\omega^6\omega 1", r"\omega\omega^32\omega^61", r"1\omega^31", r"\omega11", (32, 21, 7)),
    (8, r"\omega^3\omega^7\omega^21", r"\omega^5\omega^71", r"\omega^7\omega1", "11", (32, 24, 6)),
    (8, r"\omega^7\omega^521", r"\omega^71", r"\omega1", "1", (32, 27, 4)),
    (12, r"2\omega^6\omega1", r"\omega^21", r"\omega^31", "1", (48, 43, 3)),
    (12, r"\omega^5\omega^6\omega^621", r"\omega^21", r"\omega^31", "1", (48, 42, 4)),
]

# theta-cyclic codes over F_q: (field, n, ell, printed [[n, k, d]])
TABLE2 = [
    ("F9", 6, r"\omega^{6}\omega^{7}1", (6, 2, 3)),
    ("F81", 8, r"\omega^{69}\omega^{28}1", (8, 4, 3)),
    ("F25", 8, r"\omega^{23}\omega^{10}1", (8, 4, 3)),
    ("F169", 8, r"\omega^{117}\omega^{109}1", (8, 4, 3)),
    ("F27", 9, r"\omega^{18}\omega^{19}1", (9, 5, 3)),
    ("F125", 12, r"\omega^{99}\omega^{38}1", (12, 8, 3)),
    ("F125", 15, r"\omega^{2}3\omega^{76}1", (15, 9, 4)),
    ("F16807", 15, r"\omega^{295}\omega^{96}", (15, 11, 3)),
    ("F27", 18, r"\omega^{18}\omega^{19}1", (18, 14, 3)),
    ("F343", 18, r"\omega^{339}\omega^{212}1", (18, 14, 3)),
    ("F625", 20, r"\omega^{332}\omega^{292}1", (20, 16, 3)),
    ("F343", 21, r"\omega^{261}\omega^{17}\omega^{178}1", (21, 15, 4)),
    ("F3125", 25, r"\omega^{1374}\omega^{3116}\omega^{3015}1", (25, 19, 4)),
    ("F169", 26, r"1\omega^{21}\omega^{148}1", (26, 20, 4)),
]

# Theta-cyclic codes over R: (field, s, t1..t4, printed [n, k, d], printed [[n, k, d]])
TABLE3 = [
    ("F9", 6, r"1~\omega^{5}\omega^{5}1", r"\omega^{2}1", r"\omega^61", "11", (24, 18, 4), (24, 12, 4)),
    ("F9", 6, r"\omega^{6}\omega^{3}1", "21", r"\omega^21", r"\omega^61", (24, 19, 3), (24, 14, 3)),
    ("F27", 9, r"\omega^{18}\omega^{19}1", r"\omega^{9}1", r"\omega^31", "1", (36, 32, 3), (36, 28, 3)),
    ("F25", 10, r"\omega^{4}4\omega^{16}1", r"\omega^{20}1", r"\omega^81", "41", (40, 34, 3), (40, 28, 3)),
    ("F9", 12, r"\omega^{6}\omega^{3}\omega^5\omega^31", r"\omega^31", r"\omega^31", r"\omega^31", (48, 41, 3), (48, 34, 3)),
    ("F9", 12, r"\omega^{3}\omega121", r"\omega^61", "11", "1", (48, 42, 4), (48, 36, 4)),
    ("F49", 14, r"\omega^{18}\omega^{15}1", r"\omega^61", r"\omega^61", r"\omega^61", (56, 51, 3), (56, 48, 3)),
    ("F49", 14, r"6~\omega\omega^{46}\omega^{47}1", r"\omega^{18}1", r"\omega^61", "11", (56, 49, 4), (56, 42, 4)),
    ("F9", 18, r"\omega^{6}\omega^{3}\omega^2~1~1", r"\omega^{6}1", r"\omega^21", "1", (72, 66, 3), (72, 60, 3)),
    ("F121", 22, r"\omega^{100}\omega^{80}\omega^{38}\omega^{20}1", r"\omega^{40}1", r"\omega^{80}1", "11", (88, 81, 4), (88, 74, 4)),
    ("F25", 20, r"\omega^{22}3\omega^{13}1", r"\omega^{22}1", r"\omega^{8}1", "1", (80, 75, 3), (80, 70, 3)),
    ("F121", 22, r"\omega^{20}\omega^{107}\omega^{32}1", "11", r"\omega^{80}1", r"\omega^{40}1", (88, 82, 3), (88, 76, 3)),
    ("F169", 26, r"1\omega^{148}\omega^{21}1", r"\omega^{60}1", r"\omega^{48}1", "1", (104, 99, 4), (104, 94, 4)),
]

# (theta, Theta)-cyclic codes over F_q R: (field, r, s, ell, t1..t4, printed [n, k, d], printed [[n, k, d]])
TABLE4 = [
    ("F9", 12, 6, r"\omega^{3}\omega121", r"1~\omega^{5}\omega^{5}1", r"\omega^{2}1", r"\omega^61", r"\omega", (36, 27, 4), (36, 18, 4)),
    ("F25", 8, 8, r"\omega^{23}\omega^{10}1", r"\omega^{23}\omega^{10}1", r"\omega^5", r"\omega^{3}1", "1", (40, 34, 3), (40, 28, 3)),
    ("F27", 18, 9, r"\omega^{18}\omega^{19}1", r"\omega^{18}\omega^{19}1", r"\omega^{9}1", r"\omega^31", "1", (54, 48, 3), (54, 42, 3)),
    ("F25", 40, 10, r"2\omega^{4}\omega^{8}1", r"\omega^{20}4\omega^{8}1", r"\omega^{20}1", r"\omega^{20}1", "1", (80, 72, 3), (80, 64, 3)),
    ("F25", 8, 10, r"\omega^{15}\omega^{16}1", r"\omega^{20}4\omega^{8}1", r"\omega^{20}1", r"\omega^{20}1", "1", (48, 41, 3), (48, 34, 3)),
    ("F9", 56, 6, r"1022\omega^{6}1", r"\omega^{6}\omega^{3}1", "21", r"\omega^21", r"\omega^61", (80, 70, 4), (80, 60, 4)),
    ("F169", 8, 24, r"\omega^{117}\omega^{109}1", r"\omega^{15}\omega^{3}1", "(11)1", r"\omega^{85}1", "1", (104, 98, 3), (104, 92, 3)),
]

# worked separable examples; polynomials as typeset (descending LaTeX sums)
EXAMPLES = {
    "ex68": {
        "citation": "worked example, q=9 r=26 s=6",
        "field": "F9",
        "r": 26,
        "s": 6,
        "ell": [r"x^3 + 2x^2 + \omega^3x + \omega^2", r"x + \omega^2"],
        "t": [[r"x+1", r"x+\omega^6"], [r"x+\omega^6"], [r"x+\omega^6"], [r"x+\omega^6"]],
        "classical": (50, 41, 3),
        "qecc": (50, 32, 3),
        "printed": {
            "f": r"x^{22} + \omega^7x^{21} + \omega^6x^{20} + \omega^3x^{19} + \omega^6x^{18} + \omega^2x^{16} + \omega^3x^{15}  + 2x^{14} + \omega^7x^{13} + \omega^3x^{12}+ \omega^7x^{11} + x^{10} + \omega^3x^9 + \omega^2x^8 + \omega^7x^7+ \omega x^6 + \omega^3x^5 + \omega^3x^3 + \omega^7x^2 + \omega^3x + 1",
            "f_dagger": r"x^{22} + \omega x^{21} + \omega^7x^{20} + \omega x^{19} + \omega x^{17} + \omega x^{16} + \omega^5x^{15}  + \omega^2x^{14} + \omega x^{13} + x^{12} + \omega^5x^{11}+\omega^3x^{10}+\omega^5x^9 + 2x^8 + \omega x^7 + \omega^2x^6+ \omega^6 x^4 + \omega x^3 + \omega^6x^2 + \omega^5x  + 1",
            "f_cofactor": r"x^{18} + \omega^6 x^{17} + \omega^5 x^{16} + \omega^2x^{15} + \omega^7x^{14} + \omega^2 x^{12} + 2x^{10}+\omega^2x^9 + x^8 + \omega^6x^6+ \omega^3 x^4 + \omega ^2x^3 + \omega x^2 + \omega^6x  + 1",
            "h": [
                r"x^4 + \omega^3x^3 + \omega x^2 + \omega^7x + \omega^6",
                r"x^5 + \omega^6x^4 + x^3 + \omega^6x^2 + x + \omega^6",
                r"x^5 + \omega^6x^4 + x^3 + \omega^6x^2 + x + \omega^6",
                r"x^5 + \omega^6x^4 + x^3 + \omega^6x^2 + x + \omega^6",
            ],
            "h_dagger": [
                r"\omega^6x^4 + \omega^5x^3 + \omega x^2 + \omega x + 1",
                r"\omega^2x^5 + x^4 + \omega^2x^3 + x^2 + \omega^2x + 1",
                r"\omega^2x^5 + x^4 + \omega^2x^3 + x^2 + \omega^2x + 1",
                r"\omega^2x^5 + x^4 + \omega^2x^3 + x^2 + \omega^2x + 1",
            ],
            "h_cofactor": [
                r"\omega^6x^2 + \omega^2",
                r"\omega^2x^4 + \omega^2x^2 + \omega^2",
                r"\omega^2x^4 + \omega^2x^2 + \omega^2",
                r"\omega^2x^4 + \omega^2x^2 + \omega^2",
            ],
        },
        "parts": {"C_r": (26, 22, 3), "C_s": (24, 19, 3)},
    },
    "ex69": {
        "citation": "worked example, q=25 r=8 s=10",
        "field": "F25",
        "r": 8,
        "s": 10,
        "ell": [r"x+\omega^9", r"x+2"],
        "t": [[r"x+\omega^8", r"x+\omega^{16}", r"x+\omega^{20}"], [r"x+\omega^{20}"], [r"x+\omega^{20}"], [r"x+\omega^{20}"]],
        "classical": (48, 40, 3),
        "qecc": (48, 32, 3),
        "printed": {
            "f": r"x^6+\omega^4x^5+\omega^{10}x^4+\omega^4x^3+\omega^{22}x+\omega^{21}",
            "f_dagger": r"\omega^{21}x^6+\omega^{14}x^5+\omega^5x^4+\omega^{20}x^3+\omega^{10}x^2+\omega^{20}x+1",
            "f_cofactor": r"\omega^{21}x^4+2x^3+3x+w^9",
            "h": [
                r"x^7+\omega^4x^6+2x^5+\omega^{10}x^4+3x^3+\omega^{22}x^2+4x+\omega^{16}",
                r"x^9+\omega^{16}x^8+x^7+\omega^{16}x^6+x^5+\omega^{16}x^4+x^3+\omega^{16}x^2+x+\omega^{16}",
                r"x^9+\omega^{16}x^8+x^7+\omega^{16}x^6+x^5+\omega^{16}x^4+x^3+\omega^{16}x^2+x+\omega^{16}",
                r"x^9+\omega^{16}x^8+x^7+\omega^{16}x^6+x^5+\omega^{16}x^4+x^3+\omega^{16}x^2+x+\omega^{16}",
            ],
            "h_dagger": [
                r"\omega^8x^7+4x^6+\omega^{14}x^5+3x^4+\omega^2x^3+2x^2+\omega^{20}x+1",
                r"\omega^8x^9+x^8+\omega^{8}x^7+x^6+\omega^{8}x^5+x^4+\omega^{8}x^3+x^2+\omega^{8}x+1",
                r"\omega^8x^9+x^8+\omega^{8}x^7+x^6+\omega^{8}x^5+x^4+\omega^{8}x^3+x^2+\omega^{8}x+1",
                r"\omega^8x^9+x^8+\omega^{8}x^7+x^6+\omega^{8}x^5+x^4+\omega^{8}x^3+x^2+\omega^{8}x+1",
            ],
            "h_cofactor": [
                r"\omega^8x^4+\omega^8x^3+\omega^{15}x^2+\omega^{20}x+\omega^4",
                r"\omega^8x^8+\omega^{20}x^7+\omega^7x^6+\omega^2x^5+\omega^{21}x^4+\omega^{14}x^3+\omega^{23}x^2+\omega^8x+\omega^4",
                r"\omega^8x^8+\omega^{20}x^7+\omega^7x^6+\omega^2x^5+\omega^{21}x^4+\omega^{14}x^3+\omega^{23}x^2+\omega^8x+\omega^4",
                r"\omega^8x^8+\omega^{20}x^7+\omega^7x^6+\omega^2x^5+\omega^{21}x^4+\omega^{14}x^3+\omega^{23}x^2+\omega^8x+\omega^4",
            ],
        },
        "parts": {"C_r": (8, 6, 3), "C_s": (40, 34, 3)},
    },
    "ex610": {
        "citation": "worked example, q=27 r=9 s=3",
        "field": "F27",
        "r": 9,
        "s": 3,
        "ell": [r"x+\omega^9", r"x+2"],
        "t": [[r"x+\omega"], [r"x+\omega"], [r"x+\omega^3"], [r"x+\omega^3"]],
        "classical": (21, 15, 3),
        "qecc": (21, 9, 3),
        "printed": {
            "f": r"x^7+\omega^{16}x^6+\omega^{2}x^5+\omega^7x^4+\omega^{12}x^3+\omega^{15}x^2+\omega^{17}x+\omega^{17}",
            "f_dagger": r"\omega^{25}x^7+\omega^{17}x^6+\omega^{5}x^5+\omega^{10}x^4+\omega^{7}x^3+\omega^{18}x^2+\omega^{22}x+1",
            "f_cofactor": r"\omega^{25}x^5+\omega^{9}x^4+\omega^{17}x^3+\omega^{12}x^2+\omega^{22}x+\omega^4",
            "h": [
                r"x^2+\omega^{22}x+\omega^{12}",
                r"x^2+\omega^{22}x+\omega^{12}",
                r"x^2+\omega^{14}x+\omega^{10}",
                r"x^2+\omega^{14}x+\omega^{10}",
            ],
            "h_dagger": [
                r"\omega^4x^2+\omega^{14}x+1",
                r"\omega^4x^2+\omega^{14}x+1",
                r"\omega^{12}x^2+\omega^{16}x+1",
                r"\omega^{12}x^2+\omega^{16}x+1",
            ],
            "h_cofactor": [
                r"\omega^4x+\omega^{25}",
                r"\omega^4x+\omega^{25}",
                r"\omega^{12}x+\omega^{23}",
                r"\omega^{12}x+\omega^{23}",
            ],
        },
        "parts": {"C_r": (9, 7, 3), "C_s": (12, 8, 3)},
    },
}

# non-separable worked code with its displayed generator matrix (rows of kappa-tagged entries)
SECTION3 = {
    "citation": "non-separable worked example, q=27 r=3 s=3",
    "field": "F27",
    "r": 3,
    "s": 3,
    "ell": r"x+\omega^{17}",
    "s_poly": r"\omega",
    "t": [r"x+\omega^5", r"x+\omega^5", r"x^2+\omega^6x+\omega^8", r"x^2+\omega^6x+\omega^8"],
    "log_q_size": 8,
    "printed": {
        "f": r"x^2+\omega^6x+\omega^{8}",
        "h": [r"x^2+\omega^{18}x+\omega^{22}", r"x^2+\omega^{18}x+\omega^{22}", r"x+\omega^{17}", r"x+\omega^{17}"],
    },
    # each row: field block, then (kappa index, coefficient) per ring coordinate
    "matrix": [
        (["w^17", "1", "0"], [None, None, None]),
        (["0", "w^25", "1"], [None, None, None]),
        (["w", "0", "0"], [(1, "w^5"), (1, "1"), None]),
        (["0", "w^3", "0"], [None, (1, "w^15"), (1, "1")]),
        (["0", "0", "0"], [(2, "w^5"), (2, "1"), None]),
        (["0", "0", "0"], [None, (2, "w^15"), (2, "1")]),
        (["0", "0", "0"], [(3, "w^8"), (3, "w^6"), (3, "1")]),
        (["0", "0", "0"], [(4, "w^8"), (4, "w^6"), (4, "1")]),
    ],
}

# alternative readings of rows whose typeset generator fails; reported as
# informational checks only, never used for the verdict
AMENDED = {
    ("table2", 7): {
        "replace": {0: "F16807-alt", 2: r"1\omega^{295}\omega^{96}"},
        "note": "typeset generator has degree 1, which cannot give the typeset dimension",
    },
    ("table4", 1): {
        "replace": {5: r"\omega^{5}1"},
        "note": "typeset t2 is a unit, which gives dimension 35 instead of 34",
    },
}

WHICH = ("table1", "table2", "table3", "table4", "ex68", "ex69", "ex610", "section3")
