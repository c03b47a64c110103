"""Print the decider audit table against the small oracle monoids."""

import argparse

from monoidlab.checks import audit_pairs
from monoidlab.deciders import audit, parse_theory


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-len", type=int, default=6)
    args = ap.parse_args()
    for name, build in audit_pairs():
        rep = audit(parse_theory(name), build(), args.max_len)
        print(f"{name:6} vs {rep.oracle:12} {rep.checked:6} identities, "
              f"{len(rep.disagreements)} disagreements")


if __name__ == "__main__":
    main()
