"""Smoke test for the dedekind_py extension module.

Build and run from the repository root:

    cargo build -p dedekind-py --release
    cp target/release/libdedekind_py.so python/dedekind_py.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import dedekind_py as dk

CUBIC = "t^3 - t^2 - 2t - 8"


def main():
    assert dk.discriminant(CUBIC) == -2012
    assert dk.factor_mod_p(CUBIC, 2) == [("t", 2), ("t + 1", 1)]
    assert dk.cofactor(CUBIC, 2, [("t", 2), ("t - 1", 1)]) == "t + 4"
    assert dk.index_divisible(CUBIC, 2)
    assert not dk.index_divisible("t^2 - 2", 7)
    assert dk.common_index_divisor(2, [(1, 1), (1, 1), (1, 1)])
    assert not dk.common_index_divisor(3, [(1, 1), (1, 1), (1, 1)])

    order, disc, index = dk.maximal_order(CUBIC)
    assert (disc, index) == (-503, 2)
    assert order.discriminant() == -503

    cubic = dk.Order.example_cubic()
    primes = cubic.factor_p(2)
    assert len(primes) == 3 and all((e, f) == (1, 1) for _, e, f in primes)
    a, b, c = (ideal for ideal, _, _ in primes)
    assert a * b * c == dk.Ideal.principal(cubic.element([2, 0, 0]))
    assert (a * a).norm() == 4 and a.is_prime()
    assert (a ** 2 * c).valuation(a) == 2

    x = cubic.basis_element(1)
    assert x * cubic.one() == x
    assert (x ** 3).order == cubic

    sqrt2 = dk.Order.from_polynomial("t^2 - 2")
    theta = sqrt2.good_generator(7, ["t", "t - 1"])
    assert int(theta.index()) % 7 != 0

    assert cubic.index_form() in ("2x^3 - x^2y - xy^2 - 2y^3", "-2x^3 + x^2y + xy^2 + 2y^3")

    checks = dk.paper_checks()
    failed = [name for name, ok, _, _ in checks if not ok]
    assert not failed, failed

    try:
        dk.factor_mod_p("t", 4)
    except ValueError:
        pass
    else:
        raise AssertionError("composite modulus accepted")

    print(f"ok: {len(checks)} worked-example checks pass")


if __name__ == "__main__":
    main()
