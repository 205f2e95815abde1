"""Smoke test for the gsp4ad extension module.

Run after `maturin develop` (or with the built library on PYTHONPATH):

    python python/smoke_test.py
"""

import gsp4ad


def main() -> None:
    assert len(gsp4ad.CASES) == 25
    assert gsp4ad.compute("case=VId sigma=s") == "L(s,1)^4 L(s,nu)^3 L(s,nu^-1)^3"
    assert gsp4ad.pole_order("case=VId sigma=s") == 3

    iiib = "case=IIIb chi=chi sigma=s"
    assert gsp4ad.pole_order(iiib) == 1
    assert gsp4ad.pole_order(iiib, branches=["chi=nu"]) == 2
    assert sorted(o for _, o in gsp4ad.pole_branches(iiib)) == [2, 2]

    ixa = "case=IXa pi=pi1 omega=xi selftwists=xi xi=xi[2]"
    assert "xi*nu" in gsp4ad.compute(ixa)
    assert all(gsp4ad.gpr_holds(f"case={c} " + args) for c, args in [
        ("IIa", "chi=chi sigma=s"), ("IIb", "chi=chi sigma=s"), ("X", "pi=p sigma=s"),
    ])

    try:
        gsp4ad.compute("case=IIa chi=nu^(1/2) sigma=s")
    except ValueError as e:
        assert "χ²≠ν^{±1}" in str(e)
    else:
        raise AssertionError("expected a validation error")

    assert gsp4ad.table("md").count("\n") == 27
    ok, report = gsp4ad.run_verify("tables", seed=1)
    assert ok and report.startswith("# seed = 1")
    print("smoke test passed")


if __name__ == "__main__":
    main()
