"""Boolean cumulants and moments of a single variable as polynomials in its
c-monotone cumulants P_j and the monotone cumulants r_j of the reference state,
recovered exactly from the engine and compared with the reference tables."""
import argparse

from ncshuffle import expansions, polyfit, reference


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        names = expansions.cmonotone_variables(n)
        for target, table in (("boolean", reference.BOOLEAN_TABLE), ("moment", reference.MOMENT_TABLE)):
            poly = expansions.cmonotone_expansion(n, target)
            label = "beta" if target == "boolean" else "Phi"
            mark = ""
            if n in table:
                mark = "  [matches table]" if poly == table[n] else "  [DIFFERS from table]"
            print(f"{label}(a^{n}) = {polyfit.format_poly(poly, names)}{mark}")


if __name__ == "__main__":
    main()
