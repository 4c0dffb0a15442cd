"""Exact counts of power-sum collisions, the mean-value quantity.

Counts 2r-tuples in [1,P]^(2r) whose first k power sums agree, exactly.
The count divided by P^(2r) is the collision probability; its monotone
behaviour in r is checked with integers, never floats.

Run:  python3 demos/power_sum_counts.py
"""

from __future__ import annotations

from mdl import ResourceGuardError, ford_bound_log, monotonicity_check, vmvt_count


def main() -> None:
    print("exact collision counts")
    print(f"{'r':>2} {'k':>2} {'P':>3} {'count':>10} {'count/P^2r':>11}")
    for r, k, P in [(1, 1, 6), (2, 1, 6), (2, 2, 6), (3, 2, 6), (3, 3, 6),
                    (2, 2, 30), (3, 2, 40)]:
        inst = vmvt_count(r, k, P)
        print(f"{r:>2} {k:>2} {P:>3} {inst.count:>10} "
              f"{inst.count / P ** (2 * r):>11.3e}")

    print("\nnormalized counts can only shrink when r grows:")
    for r, k, P in [(1, 1, 8), (2, 2, 8), (3, 3, 8)]:
        print(f"  r={r} -> r+1, k={k}, P={P}: {monotonicity_check(r, k, P)}")

    print("\nthe enumeration refuses to melt the desk:")
    try:
        vmvt_count(12, 2, 10)
    except ResourceGuardError as exc:
        print(f"  {exc}")

    print("\nfar beyond enumeration (k >= 129) only the log of the analytic")
    print("bound is available; it is evaluated, never cross-checked:")
    for k, factor in [(129, 2), (129, 4), (200, 3)]:
        r = factor * k * k
        print(f"  k={k}, r={r}, P=10^6: log bound = "
              f"{ford_bound_log(r, k, 10**6):.4g}")


if __name__ == "__main__":
    main()
