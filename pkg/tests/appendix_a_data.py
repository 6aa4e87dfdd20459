"""Published sequences D_1(x, alpha), ..., D_P(x, alpha) mod (x^q - x), transcribed verbatim.

Keys are (q, alpha text); the alpha text uses the package element grammar, where
for q = 4 the published generator z_2 (with z_2^3 = 1) is written z.
Values are (exact period, entries in published notation).
"""

APPENDIX_A = {
    (2, "1"): (3, ["x", "x", "0"]),
    (3, "1"): (4, ["x", "x^2+1", "x", "2"]),
    (3, "2"): (8, ["x", "x^2+2", "x", "2x^2+2", "2x", "x^2+2", "2x", "2"]),
    (4, "z"): (15, [
        "x", "x^2", "x^3 + z_2x", "x", "z_2x^3 + x^2 + (z_2 + 1)x",
        "x^3 + (z_2 + 1)x^2", "z_2x^2", "x^2", "x^3 + (z_2 + 1) x^2", "(z_2 + 1) x^3 + z_2 x^2 + x",
        "(z_2 + 1) x", "x^3 + z_2 x", "z_2 x^2", "(z_2 + 1) x", "0",
    ]),
    (4, "z^2"): (15, [
        "x", "x^2", "x^3 + (z_2 + 1) x", "x", "(z_2 + 1) x^3 + x^2 + z_2 x",
        "x^3 + z_2 x^2", "(z_2 + 1) x^2", "x^2", "x^3 + z_2 x^2", "z_2 x^3 + (z_2 + 1) x^2 + x",
        "z_2 x", "x^3 + (z_2 + 1) x", "(z_2 + 1) x^2", "z_2 x", "0",
    ]),
    (4, "1"): (15, [
        "x", "x^2", "x^3 + x", "x", "x^3 + x^2 + x",
        "x^3 + x^2", "x^2", "x^2", "x^3 + x^2", "x^3 + x^2 + x",
        "x", "x^3 + x", "x^2", "x", "0",
    ]),
    (5, "1"): (12, [
        "x", "x^2+3", "x^3+2x", "x^4+x^2+2", "x",
        "4x^4+3", "x", "x^4+x^2+2", "x^3+2x", "x^2+3",
        "x", "2",
    ]),
    (5, "2"): (24, [
        "x", "x^2 + 1", "x^3 + 4x", "x^4 + 2x^2 + 3", "x",
        "3x^4 + 2x^2 + 4", "2x^3", "x^4 + x^2 + 2", "2x^3 + 3x", "x^2 + 1",
        "2x^3", "2x^4 + 3x^2 + 3", "4x^3", "4x^2 + 4", "x^3 + 4x",
        "x^4 + x^2 + 2", "4x^3", "2x^4 + 3x^2 + 1", "3x", "x^4 + 2x^2 + 3",
        "2x^3 + 3x", "4x^2 + 4", "3x", "2",
    ]),
    (5, "3"): (24, [
        "x", "x^2 + 4", "x^3 + x", "x^4 + 3x^2 + 3", "x",
        "2x^4 + 2x^2 + 1", "2x^3", "x^4 + 4x^2 + 2", "3x^3 + 3x", "x^2 + 4",
        "2x^3", "2x^4 + 2x^2 + 3", "x^3", "4x^2 + 1", "x^3 + x",
        "x^4 + 4x^2 + 2", "x^3", "3x^4 + 3x^2 + 4", "2x", "x^4 + 3x^2 + 3",
        "3x^3 + 3x", "4x^2 + 1", "2x", "2",
    ]),
    (5, "4"): (12, [
        "x", "x^2 + 2", "x^3 + 3x", "x^4 + 4x^2 + 2", "x",
        "x^4 + 2", "4x", "x^4 + 4x^2 + 2", "4x^3 + 2x", "x^2 + 2",
        "4x", "2",
    ]),
}

# Rows with alpha = 0 list x, x^2, ..., x^(q-1) and a period of q - 1.
APPENDIX_A_MONOMIAL_PERIODS = {2: 1, 3: 2, 4: 3, 5: 4}


def fixture_name(q: int, alpha: str) -> str:
    return f"sequence_q{q}_a{alpha.replace('^', '')}.txt"
