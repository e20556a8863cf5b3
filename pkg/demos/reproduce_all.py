"""Run every built-in manifest and print a verdict table with the differing values."""

import sys

from skewcodec.reproduce import reproduce

results = reproduce(strategy="auto")
for res in results:
    print(f"{res.verdict:4}  {res.id:14}  {res.citation}  ({res.seconds:.2f}s)")
    for line in res.diff_lines():
        print("      " + line)
passed = sum(r.verdict == "PASS" for r in results)
print(f"\n{passed}/{len(results)} entries reproduce exactly")
sys.exit(0 if passed == len(results) else 1)
