"""Asymptotics walkthrough.

The dominant singularity of the tree series, the exact leading-constant
recurrence for simplex fixed-gall counts, leading-order estimates against
exact coefficients, and the characteristic systems of the arbitrary-gall
families.
"""

from galledtrees import (
    GENERAL_UNLABELED,
    SIMPLEX_UNLABELED,
    CharFamily,
    beta,
    estimate_log,
    ratio_exact_to_estimate,
    simplex_to_general_ratio,
    solve_charsys,
    solve_rho_gamma,
)
from galledtrees.comb import catalan


def main():
    sc = solve_rho_gamma(60)
    print("Tree-series singularity:")
    print(f"  rho   = {sc.rho:.8f}   (radius of convergence)")
    print(f"  gamma = {sc.gamma:.8f}   (square-root amplitude)")
    print(f"  defining-condition residual = {sc.residual():.2e}")

    print("\nLeading constants of the simplex fixed-gall series, exactly:")
    for g in range(1, 7):
        b = beta(g)
        print(f"  beta({g}) = {b}   check 2^(2g-1) beta = catalan(2g-1): "
              f"{2 ** (2 * g - 1) * b == catalan(2 * g - 1)}")

    print("\nExact count versus leading-order estimate (one gall, unlabeled):")
    order = 400
    for n in (50, 100, 200, 400):
        r = ratio_exact_to_estimate(GENERAL_UNLABELED, 1, n, order=order)
        print(f"  n={n:>4}: exact/estimate = {r:.4f}")
    print("  (the deficit shrinks like 1/sqrt(n))")

    print("\nSimplex counts shrink by a factor rho per gall relative to general:")
    for g in (1, 2):
        r = simplex_to_general_ratio(g, 400, order=order)
        print(f"  g={g}: simplex/general at n=400 = {r:.5f}, rho^g = {sc.rho ** g:.5f}")

    print("\nCharacteristic systems of the arbitrary-gall families:")
    for fam in CharFamily:
        sol = solve_charsys(fam)
        b = "" if sol.b is None else f" b={sol.b:.4f}"
        print(f"  {fam.value:<28} r={sol.r:.6f} s={sol.s:.6f}{b} delta={sol.delta:.6f}")
    print("  counts grow like (delta / 2 sqrt(pi)) n^(-3/2) r^(-n), times n! "
          "for labeled families")

    rep = solve_charsys(CharFamily.SIMPLEX_UNLABELED, replicate_reported=True)
    sol = solve_charsys(CharFamily.SIMPLEX_UNLABELED)
    print(f"\nSimplex-unlabeled phi_t: faithful {sol.phi_t:.4f} vs "
          f"replicated quoted evaluation {rep.phi_t:.4f} (see README)")

    print(f"\nLog-scale estimate example: unlabeled general, g=2, n=10^4 -> "
          f"log count ~ {estimate_log(GENERAL_UNLABELED, 2, 10_000):.1f}")


if __name__ == "__main__":
    main()
