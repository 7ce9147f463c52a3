"""Smoke test for the boole_qudit extension module.

Build and install first:

    pip install --no-build-isolation ./crates/python
    python crates/python/python/smoke_test.py
"""

import boole_qudit as bq


def main():
    ket = bq.symbolic_ket(3)
    assert [str(p) for p in ket] == ["1/2*x^2 - 3/2*x + 1", "-x^2 + 2*x", "1/2*x^2 - 1/2*x"]
    assert [p.eval(2) for p in ket] == ["0", "0", "1"]

    for x in range(4):
        k = bq.basis_ket(4, x)
        assert k.basis_index() == x
        p = bq.projector(4, x)
        assert p.is_idempotent() and p.is_hermitian()
        assert str(p.trace()) == "1"

    assert str(bq.boole_poly(3)) == "x^3 - 3*x^2 + 2*x"
    l1 = bq.lagrange_component(3, 1)
    assert bq.reduce_mod_boole(l1 * l1, 3) == l1
    assert [str(p) for p in bq.symbolic_projector(2)] == ["-x + 1", "x"]
    identity = bq.completeness_sum(3)
    assert [[str(a) for a in row] for row in identity] == [
        ["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]
    ]

    q, r = bq.Polynomial("x^3 + 1").divmod(bq.Polynomial("2x - 1"))
    assert (str(q), str(r)) == ("1/2*x^2 + 1/4*x + 1/8", "9/8")

    h = bq.Amplitude.inv_sqrt2()
    assert str(h * h) == "1/2"
    assert bq.Amplitude("3/5+4/5i").norm_sq() == bq.Amplitude(1)
    for x in (0, 1):
        for y in (0, 1):
            b = bq.bell_state(x, y)
            assert b == bq.bell_closed_form(x, y)
            assert str(b.inner(b)) == "1"
    assert str(bq.bell_state(1, 1)) == "(0, 1/2s2, -1/2s2, 0)"

    s = bq.superpose(2, ["3/5", "4/5i"])
    assert s.is_normalized()
    assert not bq.superpose(2, [1, 1]).is_normalized()

    report = bq.verify(5)
    assert report["overall"] and report["d_range"] == (1, 5)

    for bad in (lambda: bq.basis_ket(3, 5), lambda: bq.bell_state(2, 0),
                lambda: bq.verify(100000), lambda: bq.Amplitude("1/0")):
        try:
            bad()
        except (ValueError, ZeroDivisionError):
            pass
        else:
            raise AssertionError("expected an error")

    print("boole_qudit smoke test: ok")


if __name__ == "__main__":
    main()
