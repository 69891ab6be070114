"""Pure-Python window-tally kernel.

Sequences arrive packed as big-endian fixed-width bytes: for the dense
non-negative symbol ids used here, byte order of a packed window equals
the lexicographic order of its symbol tuple, so winners can be selected
and tie-broken directly on the packed form.
"""

from __future__ import annotations

BACKEND = "python"


def best_windows(encoded: list, x: int, width: int):
    """Count every length-x window over the packed sequences.

    Returns (max_count, winners) with winners the sorted packed windows
    achieving max_count, or None when no sequence admits a window.
    """
    w = width * x
    counts: dict = {}
    get = counts.get
    for data in encoded:
        for off in range(0, len(data) - w + 1, width):
            key = data[off : off + w]
            counts[key] = get(key, 0) + 1
    if not counts:
        return None
    best = max(counts.values())
    return best, sorted(k for k, v in counts.items() if v == best)
