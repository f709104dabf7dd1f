"""Print the (t, s) expansion of rho_t in terms of x = rho_s up to order 4.

For each order: the engine's coefficients in the monomial basis, the tree
coefficients, the t = s check, and where the reference table differs.
"""
import argparse
import json

from ncshuffle import expansions, reference


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=4, choices=[1, 2, 3, 4])
    ap.add_argument("--json", action="store_true", help="dump the full report as JSON")
    args = ap.parse_args()

    report = expansions.ts_report(reference.TS_TABLE, args.order)
    report.pop("expansion")
    if args.json:
        print(json.dumps(report, indent=2))
        return
    for n, entry in report["orders"].items():
        print(f"order {n}  (engine t=s check: {'ok' if entry['engine_diagonal_ok'] else 'FAILS'}; "
              f"reference table t=s check: {'ok' if entry['reference_diagonal_ok'] else 'FAILS'})")
        for mono, poly in entry["engine"]:
            print(f"  {mono:<24} {poly}")
        if entry["reference_agrees"]:
            print("  reference table agrees")
        else:
            print("  differences by tree (engine | reference):")
            for tree, d in entry["differences"].items():
                print(f"    {tree:<14} {d['engine']:<36} | {d['reference']}")
        print()


if __name__ == "__main__":
    main()
