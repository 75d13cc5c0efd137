"""Expand theta_{A,P}(y_mu) for A = [[1,1],[2,0]], P = t_1 x_2 x_3 (q = 5, d = 4).

Prints the coset representatives eta with their coefficients b_eta under both
y-element conventions and compares them with the hand-computed values.
"""
import json

from qwreath.checks import ya_example
from qwreath.scalar import Params


def main():
    p = Params(q=5, n=1, k=0, d=4)
    for conv in ("hom", "printed"):
        rep = ya_example(p, conv)
        print(f"== y convention: {conv}")
        print(f"   eta words: {rep['etas']}")
        print(f"   eta set as expected: {rep['eta_set_ok']}, re-expansion exact: {rep['reexpansion_ok']}")
        for row in rep["rows"]:
            line = f"   b_{row['eta']}: {'matches' if row['match'] else 'differs'}"
            print(line)
            if not row["match"]:
                print("     computed - expected =", row["computed_minus_printed"])
    print(json.dumps({"q": p.q, "d": p.d}))


if __name__ == "__main__":
    main()
