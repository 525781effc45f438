"""Write the example document corpus and its command list into corpus/."""

import json
from fractions import Fraction
from pathlib import Path

from lexpolar import CredalPolytope, EventSubset, Gamble, GeneratorCone, HalfspaceCone, RMatrix, SemispaceFamily
from lexpolar.documents import dumps

ROOT = Path(__file__).resolve().parent.parent / "corpus"

A = RMatrix([[0, 1, 1], [0, -1, 1], [1, 0, 0]])


def p_tau(t):
    t = Fraction(t)
    return RMatrix([[0, "1/2", "1/2"], [0, (t + 1) / (2 * t), (t - 1) / (2 * t)], [1, 0, 0]])


DOCS = {
    "worked_A": A,
    "P_tau1": p_tau(-1),
    "P_tau2": p_tau(-2),
    "P_tau5": p_tau(-5),
    "identity3": RMatrix.identity(3),
    "stochastic2": RMatrix([["1/2", "1/2"], [0, 1]]),
    "orthogonal2": RMatrix([[1, 1], [-1, 1]]),
    "rank_one2": RMatrix([["1/2", "1/2"], ["1/2", "1/2"]]),
    "event3_23": EventSubset(3, [2, 3]),
    "event3_1": EventSubset(3, [1]),
    "event2_2": EventSubset(2, [2]),
    "vacuous3": GeneratorCone.vacuous(3),
    "vacuous2": GeneratorCone.vacuous(2),
    "natext2": GeneratorCone(2, [(1, -1), (1, 0), (0, 1)]),
    "incoherent2": GeneratorCone(2, [(1, 0), (0, 1), (-1, -1)]),
    "worked_subcone": GeneratorCone(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (0, -1, 1), (-5, 1, 1)]),
    "halfplane": HalfspaceCone(2, [(1, 0)]),
    "orthant3": HalfspaceCone.nonnegative_orthant(3),
    "maximal_3_4": HalfspaceCone(2, [("3/5", "4/5")]),
    "wedge": HalfspaceCone(2, [(1, 1), (1, -1)]),
    "credal3": CredalPolytope(3, [(1, 0, 0), ("1/2", "1/4", "1/4"), (0, "1/3", "2/3")]),
    "simplex3": CredalPolytope.simplex(3),
    "semispace_A": SemispaceFamily(3, [A]),
    "g_m1_5": Gamble([-1, 5]),
    "g_2_m1": Gamble([2, -1]),
    "g_m1_0": Gamble([-1, 0]),
    "g_0_m1_1": Gamble([0, -1, 1]),
    "g_0_1_m1": Gamble([0, 1, -1]),
    "g_minus_one3": Gamble.minus_one(3),
}

COMMANDS = [
    ["check", "vacuous3.json"],
    ["check", "natext2.json"],
    ["check", "incoherent2.json"],
    ["check", "halfplane.json"],
    ["check", "semispace_A.json"],
    ["member", "natext2.json", "g_2_m1.json"],
    ["member", "natext2.json", "g_m1_0.json"],
    ["member", "halfplane.json", "g_m1_5.json"],
    ["member", "semispace_A.json", "g_0_m1_1.json"],
    ["member", "semispace_A.json", "g_0_1_m1.json"],
    ["polar", "vacuous3.json"],
    ["polar", "wedge.json"],
    ["generators", "halfplane.json"],
    ["to-credal", "orthant3.json"],
    ["to-credal", "maximal_3_4.json"],
    ["from-credal", "simplex3.json"],
    ["from-credal", "credal3.json"],
    ["to-lcredal", "natext2.json", "--witnesses", "3"],
    ["to-lcredal", "worked_subcone.json", "--witnesses", "4", "--seed", "5"],
    ["lmember", "vacuous3.json", "P_tau1.json"],
    ["lmember", "worked_subcone.json", "P_tau1.json"],
    ["lmember", "vacuous2.json", "rank_one2.json"],
    ["condition", "halfplane.json", "--on", "event2_2.json"],
    ["condition", "vacuous3.json", "--on", "event3_23.json"],
    ["condition", "semispace_A.json", "--on", "event3_23.json"],
    ["condition", "credal3.json", "--on", "event3_23.json"],
    ["condition", "P_tau1.json", "--on", "event3_23.json"],
    ["condition", "worked_A.json", "--on", "event3_23.json", "--as", "orthogonal"],
    ["condition", "identity3.json", "--on", "event3_1.json", "--as", "stochastic"],
    ["decompose", "worked_A.json"],
    ["decompose", "worked_A.json", "--shift", "4"],
    ["gs", "P_tau1.json"],
    ["gs", "P_tau2.json"],
    ["gs", "P_tau5.json"],
    ["gs", "stochastic2.json"],
    ["stochastic", "worked_A.json"],
    ["stochastic", "orthogonal2.json"],
    ["separate", "halfplane.json", "g_m1_5.json"],
    ["separate", "orthant3.json", "g_minus_one3.json"],
    ["separate", "natext2.json", "g_m1_0.json"],
    ["separate", "semispace_A.json", "g_0_1_m1.json"],
    ["equiv", "P_tau1.json", "worked_A.json"],
    ["equiv", "P_tau1.json", "identity3.json"],
    ["member", "halfplane.json", "bad_rational.json"],
]

MALFORMED = {"bad_rational": '{"schema": 1, "kind": "gamble", "coords": ["1/0", "2"]}\n'}


def main():
    ROOT.mkdir(exist_ok=True)
    for name, obj in DOCS.items():
        (ROOT / f"{name}.json").write_text(dumps(obj))
    for name, text in MALFORMED.items():
        (ROOT / f"{name}.json").write_text(text)
    (ROOT / "commands.json").write_text(json.dumps(COMMANDS, indent=1) + "\n")
    print(f"wrote {len(DOCS)} documents and {len(COMMANDS)} commands to {ROOT}")


if __name__ == "__main__":
    main()
