"""Regenerate the labeling golden files from closed-form patterns.

Run from the repository root: python tests/golden/make_golden.py
"""
import json
from pathlib import Path

HERE = Path(__file__).parent
MAX_RANK = 19


def chain_order3(n):
    # f every third curve; an end curve that is not fixed needs a fixed neighbour
    out = []
    for j in range(3):
        lab = ["f" if i % 3 == j else "s" for i in range(n)]
        ends_ok = all(lab[e] == "f" or (0 <= e + d < n and lab[e + d] == "f")
                      for e, d in ((0, 1), (n - 1, -1)))
        if ends_ok:
            out.append("-".join(lab))
    return sorted(set(out))


def d_order3(n):
    # chain C1..C(n-2) with both fork legs on C(n-2); the branch curve is fixed
    chain = ["f" if (n - 3 - i) % 3 == 0 else "s" for i in range(n - 2)]
    if chain[0] == "s" and (n - 2 < 2 or chain[1] == "s"):
        return []
    return ["-".join(chain + ["s", "s"])]


def a_profile3(n):
    p, r = divmod(n, 3)
    if r == 0:
        return [p, p + 1]      # A_{3p}
    if r == 2:
        return [p + 1, p + 1]  # A_{3p-1}
    return [p + 1, p]          # A_{3p-2}


def d_profile3(n):
    q, r = divmod(n, 3)
    if r == 0:
        return [q, q + 1]      # D_{3q}
    if r == 1:
        return [q, q + 2]      # D_{3q+1}
    return None


def main():
    order2 = []
    for n in range(1, MAX_RANK + 1):
        ok = n % 2 == 1
        order2.append({"component": f"A{n}",
                       "profiles": [[(n + 1) // 2, 0]] if ok else [],
                       "labelings": ["-".join("f" if i % 2 == 0 else "s" for i in range(n))]
                       if ok else []})
    order3 = []
    for n in range(1, MAX_RANK + 1):
        order3.append({"component": f"A{n}", "profiles": [a_profile3(n)],
                       "labelings": chain_order3(n)})
    for n in range(4, MAX_RANK + 1):
        prof = d_profile3(n)
        order3.append({"component": f"D{n}", "profiles": [prof] if prof else [],
                       "labelings": d_order3(n) if prof else []})
    (HERE / "labelings_order2.json").write_text(json.dumps(order2, indent=1) + "\n")
    (HERE / "labelings_order3.json").write_text(json.dumps(order3, indent=1) + "\n")


if __name__ == "__main__":
    main()
