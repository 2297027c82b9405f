"""Census of lower Bruhat intervals under maximal coset representatives.

For each n up to the configured bound and each cut position k, prints the
interval size computed three independent ways (double-Stirling sum,
alternating sum, poly-Bernoulli number), the value of the counting
recurrence, and the Poincare polynomial from the closed form.  Everything
is exact; a mismatch raises immediately.

Run as: python3 scripts/interval_census.py --max-n 8 [--with-brute]
"""

import argparse
from dataclasses import dataclass

from skewrook.intervals import (
    count_lower_interval_dp,
    max_coset_rep_A,
    theorem8_counts,
    theoremA_poincare,
)
from skewrook.permutations import Permutation, poincare_brute


@dataclass(frozen=True)
class CensusConfig:
    max_n: int = 8
    with_brute: bool = False  # scan the whole symmetric group as well
    show_polynomials: bool = True


def run(config: CensusConfig) -> None:
    header = ["n", "k", "representative", "count", "recurrence"]
    if config.with_brute:
        header.append("brute")
    print("\t".join(header))
    for n in range(2, config.max_n + 1):
        for k in range(1, n):
            rep = max_coset_rep_A(n, k)
            sym, alt, pb = theorem8_counts(n, k)
            assert sym == alt == pb
            dp = count_lower_interval_dp(rep)
            assert dp == sym
            row = [str(n), str(k), rep.w.to_text(), str(sym), str(dp)]
            if config.with_brute:
                brute = poincare_brute(Permutation.identity(n), rep.w)
                assert brute == theoremA_poincare(n, k)
                row.append(str(brute.evaluate_at_one()))
            print("\t".join(row))
            if config.show_polynomials:
                print(f"\t\tpoincare: {theoremA_poincare(n, k)}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=8, dest="max_n")
    parser.add_argument("--with-brute", action="store_true", dest="with_brute")
    parser.add_argument("--no-polynomials", action="store_true")
    args = parser.parse_args()
    run(
        CensusConfig(
            max_n=args.max_n,
            with_brute=args.with_brute,
            show_polynomials=not args.no_polynomials,
        )
    )


if __name__ == "__main__":
    main()
