"""Run the exact identity audit and write the JSON report plus a short summary.

    python scripts/run_audit.py --n-max 200 --out results/audit.json
"""

from __future__ import annotations

import argparse
import pathlib

from hyperspinors.engines.audit import identity_audit, is_derived


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=200)
    parser.add_argument("--out", default="results/audit.json")
    args = parser.parse_args()

    report = identity_audit(args.n_max)
    out = pathlib.Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(report.dumps() + "\n")

    printed = [e for e in report.entries if not is_derived(e.id)]
    derived = [e for e in report.entries if is_derived(e.id)]
    print(f"printed identities: {len(printed)}, exact {sum(e.exact for e in printed)}")
    print(f"derived variants:   {len(derived)}, exact {sum(e.exact for e in derived)}")
    print("printed mismatches:")
    for e in printed:
        if not e.exact:
            ce = e.counterexample
            print(f"  {e.id:<22} n={ce.n:<3} lhs={ce.lhs}  rhs={ce.rhs}")
    print(f"report written to {out}")


if __name__ == "__main__":
    main()
