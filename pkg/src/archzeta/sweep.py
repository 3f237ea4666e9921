"""Deterministic enumeration of the standard verification sweep.

Contexts are parameterized by the signature (a,b), the twist (k,r), the
bottom offsets tau_a - (k+r)/2 and nu*_b - (k-r)/2, and the successive
gaps inside each weight block; every generated context satisfies the
criticality condition by construction.
"""

from __future__ import annotations

from itertools import product as iproduct

from .weights import ZetaContext, make_context


def _blocks(length: int, bottom_offsets, gaps):
    """All weakly decreasing blocks of the given length whose smallest entry
    offset and successive gaps range over the given values.  Yields tuples
    of offsets relative to the block's base value."""
    if length == 0:
        yield ()
        return
    for bottom in bottom_offsets:
        for gap_choice in iproduct(gaps, repeat=length - 1):
            entries = [bottom]
            for g in reversed(gap_choice):
                entries.append(entries[-1] + g)
            yield tuple(reversed(entries))


def standard_sweep(max_n: int = 4, k_extra: int = 4,
                   bottom_max: int = 3, gap_max: int = 2):
    """The standard acceptance sweep: all signatures with 1 <= a+b <= max_n,
    n <= k <= n+k_extra, parity-compatible |r| <= k, bottom offsets in
    [0, bottom_max], gaps in [0, gap_max]."""
    bottoms = range(bottom_max + 1)
    gaps = range(gap_max + 1)
    for n in range(1, max_n + 1):
        for a in range(n + 1):
            b = n - a
            for k in range(n, n + k_extra + 1):
                for r in range(-k, k + 1):
                    if (k - r) % 2 != 0:
                        continue
                    kpr, kmr = (k + r) // 2, (k - r) // 2
                    for tau_off in _blocks(a, bottoms, gaps):
                        tau = tuple(t + kpr for t in tau_off)
                        for nu_star_off in _blocks(b, bottoms, gaps):
                            nu_star = tuple(v + kmr for v in nu_star_off)
                            nu = tuple(-v for v in reversed(nu_star))
                            yield make_context(a, b, tau, nu, k, r)


def sweep_contexts(max_n: int = 4, k_extra: int = 4, bottom_max: int = 3,
                   gap_max: int = 2, k_cap: int | None = None,
                   limit: int | None = None) -> list[ZetaContext]:
    out = []
    for ctx in standard_sweep(max_n, k_extra, bottom_max, gap_max):
        if k_cap is not None and ctx.k > k_cap:
            continue
        out.append(ctx)
        if limit is not None and len(out) >= limit:
            break
    return out
