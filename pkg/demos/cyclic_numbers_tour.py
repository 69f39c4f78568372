"""Which n force every group of order n to be cyclic?

The arithmetic answer: exactly those n with gcd(n, phi(n)) = 1, which
unpacks into two divisibility conditions on the prime factorization.
This script walks the first hundred integers and shows both views.
"""

import time

import cyclicnum as cn


def main() -> None:
    print("cyclic numbers up to 100:")
    print(" ", " ".join(str(n) for n in cn.cyclic_numbers(1, 100)))
    print()

    print("why individual numbers pass or fail:")
    for n in (15, 4, 21, 33, 255):
        report = cn.check_conditions(n)
        phi = cn.euler_phi(n)
        print(f"  n={n}: gcd(n, phi(n)) = gcd({n}, {phi}) = {cn.gcd(n, phi)}")
        if report.square_prime is not None:
            p = report.square_prime
            print(f"    not squarefree: {p}^2 divides {n}")
        if report.arrow_pair is not None:
            p1, p2 = report.arrow_pair
            print(f"    prime pair: {p1} divides {p2} - 1 = {p2 - 1}")
        verdict = "cyclic number" if cn.is_cyclic_number(n) else "not a cyclic number"
        print(f"    => {verdict}")
    print()

    t0 = time.perf_counter()
    hits = cn.cyclic_numbers(1, 1_000_000)
    elapsed = time.perf_counter() - t0
    print(f"density check: {len(hits)} cyclic numbers below 10^6 "
          f"({100 * len(hits) / 1_000_000:.1f}%, sieved in {elapsed:.2f}s)")


if __name__ == "__main__":
    main()
