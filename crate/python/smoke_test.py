"""Smoke test for the assprime Python extension.

Build the extension first:

    cargo build -p assprime-python --release --features extension-module
    cp target/release/libassprime_python.so python/assprime.so

then run `python3 python/smoke_test.py`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import assprime  # noqa: E402


def main():
    i = assprime.MonomialIdeal.parse(["a", "b", "c"], "a^4, a^3*b, a*b^3, b^4, a^2*b^2*c")
    assert i.ass() == [["a", "b"], ["a", "b", "c"]], i.ass()
    assert i.power(2).ass() == [["a", "b"]]
    assert i.power(2) == assprime.MonomialIdeal.parse(["a", "b", "c"], "a^8, a^7*b, a^6*b^2, a^5*b^3, a^4*b^4, a^3*b^5, a^2*b^6, a*b^7, b^8")
    assert i.contains("a^2*b^2*c") and not i.contains("a^2*b^2")

    report = json.loads(i.persistence(3))
    assert report["first_failure"] == {"n": 1, "witness": ["a", "b", "c"]}

    j = assprime.MonomialIdeal.from_exponents(["y"], [[2]])
    for n in range(1, 4):
        assert assprime.formula_ass_sum(i, j, n) == assprime.direct_ass_sum(i, j, n)
    assert json.loads(assprime.verify_sum_formula(i, j, 2))["match"]

    q = assprime.MonomialIdeal.parse(["x", "y"], "x^4, x^3*y, x*y^3, y^4")
    assert len(q.ratliff_rush().gens) == 5

    example = json.loads(assprime.named_example("gorenstein-char2"))
    assert example["all_pass"] and example["generator_count"] == 36

    try:
        assprime.MonomialIdeal.parse(["x"], "x^^2")
    except assprime.AssprimeError as e:
        assert "column 3" in str(e), e
    else:
        raise AssertionError("parse error not raised")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
