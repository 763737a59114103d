"""Tour of the arithmetic layer: counts, symbols, factors, class numbers.

These are the independent oracles the statement checkers lean on. Everything
here is exact integer arithmetic; nothing touches the power-series code.
"""

from thetaparity import quadarith as qa


def main():
    print("ordered square-tuple counts r_f(n):")
    for form in ((1, 1, 1), (1, 2, 8), (1, 2, 4), (1, 4)):
        name = "+".join(f"{c}{v}^2" if c > 1 else f"{v}^2"
                        for c, v in zip(form, "xyz"))
        counts = [qa.count_square_tuples(n, form) for n in range(12)]
        print(f"  {name:>18}: {counts}")

    print("\nsigned representations by x^2+y^2+z^2, all and primitive:")
    for n in (11, 14, 19, 35):
        total = qa.count_signed_representations(n, (1, 1, 1))
        prim = qa.count_signed_representations(n, (1, 1, 1), primitive=True)
        print(f"  n={n:>3}: {total:>4} signed, {prim:>4} primitive")

    print("\nGauss: primitive count = 24 h(-n) for n = 3 mod 8 (n > 3):")
    for n in (11, 19, 35, 43, 51, 59):
        prim = qa.count_signed_representations(n, (1, 1, 1), primitive=True)
        h = qa.class_number(-n)
        print(f"  n={n:>3}: {prim:>4} = 24 * {h}")

    print("\nfactorizations (deterministic Miller-Rabin + Pollard rho):")
    for n in (360, 2 ** 31 - 1, 10 ** 12 + 39, 614889782588491410):
        f = qa.factorize(n)
        text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in f.pairs)
        print(f"  {n} = {text}")

    print("\nideal counts as character divisor sums:")
    for n in (9, 17, 25, 33):
        g = qa.ideal_count(n, qa.IdealCountKind.GAUSSIAN)
        m = qa.ideal_count(n, qa.IdealCountKind.MINUS_TWO)
        print(f"  n={n:>3}: discriminant -4 gives {g}, -8 gives {m}")

    print("\nJacobi symbols (a/n) for odd n:")
    rows = [(-2, 3), (2, 15), (5, 21), (1001, 9907)]
    for a, n in rows:
        print(f"  ({a}/{n}) = {qa.jacobi(a, n):+d}")


if __name__ == "__main__":
    main()
