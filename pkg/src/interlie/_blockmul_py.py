"""Pure-Python kernel for sparse multivariate theta-block products.

Terms of a block in progress are held as a list indexed by the q-exponent in
fine integer units; each slot is a dict mapping a bit-packed elliptic vector
to its integer coefficient.  ``merge_factor`` multiplies the accumulator by
one theta factor, truncating everything above ``max_u`` fine units.

The packed layout allocates ``width`` bits per elliptic coordinate with a
per-coordinate bias, so adding two packed vectors is plain integer addition
(biases accumulate and are removed by the caller, which tracks how many
factors were merged).
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def merge_factor(
    acc: list[dict[int, int]],
    terms: list[tuple[int, int, int]],
    max_u: int,
) -> list[dict[int, int]]:
    """Multiply accumulator by one factor.

    ``terms`` are (du, packed_dl, coeff) with du sorted ascending.
    Returns a fresh accumulator list of length max_u + 1.
    """
    out: list[dict[int, int]] = [dict() for _ in range(max_u + 1)]
    for u, slot in enumerate(acc):
        if not slot:
            continue
        for du, dlp, fc in terms:
            u2 = u + du
            if u2 > max_u:
                break
            target = out[u2]
            if fc == 1:
                for lp, c in slot.items():
                    key = lp + dlp
                    prev = target.get(key)
                    if prev is None:
                        target[key] = c
                    else:
                        s = prev + c
                        if s:
                            target[key] = s
                        else:
                            del target[key]
            else:
                for lp, c in slot.items():
                    key = lp + dlp
                    prev = target.get(key)
                    v = c * fc if prev is None else prev + c * fc
                    if v:
                        target[key] = v
                    elif prev is not None:
                        del target[key]
    return out
