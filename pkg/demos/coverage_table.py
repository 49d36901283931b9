"""Coverage census over every primitive polynomial, row by row.

Pass "full" to include the two slow rows (t=6, q=3 and t=7, q=2).
"""

import sys
import time

from lfsrooa.ooa import table1_stats

FAST = [(3, 2), (3, 3), (3, 5), (3, 7), (4, 2), (4, 3), (4, 5), (5, 2), (5, 3), (6, 2)]
SLOW = [(6, 3), (7, 2)]


def main(full=False):
    for t, q in FAST + (SLOW if full else []):
        start = time.perf_counter()
        row = table1_stats(q, t)
        print(f"{row}   ({time.perf_counter() - start:.1f}s)")


if __name__ == "__main__":
    main(full="full" in sys.argv[1:])
