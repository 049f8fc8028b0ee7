"""Smoke test for the twochar_py extension module.

Build and install first:

    cd crates/py && maturin build --release -o dist && pip install dist/*.whl
"""

import json
import sys

import twochar_py as tc


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    return cond


def main():
    results = []

    s3 = tc.Group.named("symmetric:3")
    results.append(check(s3.order() == 6, "S3 has order 6"))
    results.append(check(s3.schur_multiplier() == [], "S3 has trivial multiplier"))

    klein = tc.Group.named("klein4")
    results.append(check(klein.schur_multiplier() == [2], "klein4 multiplier is Z/2"))
    (twisted,) = tc.TwoRep.twisted_points(klein)
    a, b = klein.index_of("(01)(23)"), klein.index_of("(02)(13)")
    results.append(check(twisted.character(a, b) == -1, "twisted klein4 chi((01)(23),(02)(13)) = -1"))

    rho, rho_p = tc.example_pair()
    results.append(check(rho.dim() == 8 and rho_p.dim() == 8, "example pair is 8-dimensional"))
    results.append(check(not rho.is_equivalent(rho_p), "example pair is inequivalent"))
    results.append(check(rho.character_table() == rho_p.character_table(), "example pair has one table"))
    results.append(check(rho.character(0, 0) == 8, "chi(1,1) = 8"))
    c = s3.index_of("(012)")
    c_inv = s3.index_of("(021)")
    results.append(check(rho.character(c, c_inv) == 2, "chi((012),(021)) = 2"))

    for g, h in s3.commuting_pairs():
        if rho.character(g, h) != rho.character_via_psi(g, h):
            results.append(check(False, f"psi trace at ({g},{h})"))
            break
    else:
        results.append(check(True, "psi trace matches closed formula on S3"))

    regular = tc.TwoRep.regular(s3)
    sum_ = regular.direct_sum(tc.TwoRep.trivial(s3)).direct_sum(tc.TwoRep.trivial(s3))
    results.append(check(sum_.is_equivalent(rho), "regular + 2 trivial rebuilds rho"))

    round_trip = tc.TwoRep.from_json(rho.to_json())
    results.append(check(round_trip.is_equivalent(rho), "JSON round trip"))
    results.append(check(json.loads(rho.to_json())["gset"]["size"] == 8, "JSON has size 8"))

    pieces = rho_p.decompose()
    results.append(check(sorted(len(h) for h, _ in pieces) == [2, 2, 3], "rho' stabilizer orders 2, 2, 3"))

    point = tc.TwoRep.trivial(tc.Group.named("cyclic:2"))
    induced = point.induce(s3, "(01)")
    results.append(check(induced.dim() == 3, "induction from (01) has dimension 3"))

    try:
        rho.character(s3.index_of("(01)"), c)
        results.append(check(False, "non-commuting pair rejected"))
    except ValueError:
        results.append(check(True, "non-commuting pair rejected"))

    passed = sum(results)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
