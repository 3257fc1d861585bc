"""Smoke test for the Python bindings; run after `pip install -e . --no-build-isolation`."""

import json

import quiverdef_py as q


def main():
    alg = json.loads(q.algebra_json("I", 2, "bar"))
    assert alg["cartan"] == [[4, 2, 2], [2, 2, 1], [2, 1, 2]], alg["cartan"]
    assert alg["dim"] == 18

    assert q.radical_layers("I", 3, "gamma*delta^-1") == [[1, 0, 0], [0, 1, 1]]
    assert q.invariants("I", 3, "eta*delta*beta") == (1, 1, 1)
    assert q.invariants("I", 3, "delta*beta") == (1, 1, 0)

    w = json.loads(q.witt_summary(3, 16))
    assert w["p_display"] == "t^3 - 2t" and w["mod2"] == "t^3" and w["s_prime_iso"]

    results = q.verify("witt", "2..5")
    assert results and all(ok for _, ok, _ in results), results

    try:
        q.radical_layers("I", 3, "beta*beta")
    except ValueError as e:
        assert "position" in str(e)
    else:
        raise AssertionError("non-composable word accepted")

    try:
        q.algebra_json("I", 99)
    except ValueError:
        pass
    else:
        raise AssertionError("d = 99 accepted")

    print("smoke test ok:", len(results), "witt checks")


if __name__ == "__main__":
    main()
