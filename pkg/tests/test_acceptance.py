"""Acceptance suite: one test per criterion, each printing a single verdict line.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; in both
cases every criterion reports ``criterion N: pass|fail (elapsed, limit)``.
"""

import time

import pytest

from ncbfree.verify import run

# criterion -> (time limit in seconds or None, [(property id, params), ...])
CRITERIA = {
    1: (60, [("cardinality-a", {"n": 10}), ("cardinality-b", {"n": 8})]),
    2: (30, [("abs-cover", {"n": 6})]),
    3: (None, [("kreweras", {"n": 5})]),
    4: (60, [("iota", {"n": 5, "n_b": 4})]),
    5: (30, [("word-length", {"n": 4, "group": "S"}), ("word-length", {"n": 3, "group": "W"}),
             ("covers", {"n": 3, "group": "W"})]),
    6: (60, [("bridge", {"n": 2, "samples": 20, "seed": 0}), ("bridge", {"n": 3, "samples": 20, "seed": 0}),
             ("bridge", {"n": 4, "samples": 20, "seed": 0}), ("w2-control", {"samples": 20})]),
    7: (120, [("theorem-5-3", {"order": 7, "samples": 50})]),
    8: (None, [("boxconv-b-algebra", {"order": 5, "samples": 20})]),
    9: (120, [("cumulant-formulas", {}), ("moment-cumulant", {"n": 5, "order": 6}),
              ("theorem-6-4", {"n": 5}), ("recurrence-6-14", {"n": 5}), ("scalar-vanishing", {"n": 5}),
              ("multilinearity", {})]),
    10: (None, [("prop-6-5", {"order": 6}), ("remark-6-5", {})]),
    11: (120, [("freeness", {"order": 5}), ("corollary-7-2", {"order": 4, "samples": 10, "negatives": 5}),
               ("theorem-7-3", {"order": 5})]),
    12: (None, [("eq-5-4", {"samples": 10})]),
}


def evaluate(number: int) -> tuple[bool, str]:
    limit, checks = CRITERIA[number]
    start = time.perf_counter()
    failures = []
    for prop, params in checks:
        rep = run(prop, **params)
        if not rep.passed:
            failures.append(f"{prop}: {rep.counterexample}")
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        failures.append(f"took {elapsed:.1f}s, limit {limit}s")
    ok = not failures
    budget = f"limit {limit}s" if limit else "no limit"
    line = f"criterion {number}: {'pass' if ok else 'fail'} ({elapsed:.2f}s, {budget})"
    if failures:
        line += " -- " + "; ".join(failures)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    import sys

    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
