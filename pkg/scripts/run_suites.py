"""Run every identity suite with a given seed and report timings."""
import argparse
import sys

from ncshuffle.suites import SUITES, timed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--cases", type=int, default=None)
    ap.add_argument("suites", nargs="*", default=list(SUITES))
    args = ap.parse_args()
    bad = 0
    for name in args.suites:
        checks, secs = timed(name, seed=args.seed, cases=args.cases)
        ok = all(c.passed for c in checks)
        bad += not ok
        print(f"{'PASS' if ok else 'FAIL'} {name:<26} {len(checks):>3} identities  {secs:6.2f}s")
        for c in checks:
            if not c.passed:
                print("    " + c.line())
    sys.exit(1 if bad else 0)


if __name__ == "__main__":
    main()
